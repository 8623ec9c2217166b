"""Assembly of the perturbative SU(3) invariant for 1/K surgeries on (2,q)
torus knots:

    Lambda = A + B + C + D

where A counts the irreducible SU(3) representations (all with positive
sign), B is the normal-coupling rho correction over the irreducible SU(2)
connections, C = (-eps/8) * sum of adjoint rho invariants (computed here from
the cotangent sums), and D = -(1/4) * (chain-complex correction term), which
vanishes identically on this family.  A and B are ingested as reference
closed forms; C and D are computed.  The lowercase invariant lambda_su3 is
A + B, the small-perturbation variant without the C and D corrections.

Reference closed forms for Lambda and C are stored alongside for golden
comparisons.  4 * Lambda is always an integer.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .dedekind import c_correction
from .errors import Casson3Error, InvalidSurgery, MissingClosedForm
from .floer import build_floer_complex, floer_correction
from .polynomial import RationalPoly
from .seifert import BrieskornSphere, from_surgery

SUPPORTED_Q = (3, 5, 7, 9)


def _poly(*coeffs) -> RationalPoly:
    """Coefficients highest power first, for readability below."""
    return RationalPoly.from_coeffs(tuple(reversed([Fraction(c) for c in coeffs])))


# Each entry: A (quadratic), B = num/den (cubic over linear), C_plus, C_minus
# (same shape), Lambda_plus, Lambda_minus (quadratics).  Coefficients highest
# power first.
_TABLE: dict[int, dict[str, object]] = {
    3: {
        "A": _poly(3, -1, 0),
        "B": (_poly(-24, -84, 13, 0), _poly(36, -6)),
        "C+": (_poly(12, 84, -11, 0), _poly(72, -12)),
        "C-": (_poly(12, 48, -5, 0), _poly(72, -12)),
        "Lambda+": _poly(Fraction(10, 4), Fraction(-9, 4), 0),
        "Lambda-": _poly(Fraction(10, 4), Fraction(-11, 4), 0),
    },
    5: {
        "A": _poly(33, -9, 0),
        "B": (_poly(-200, -1620, 151, 0), _poly(100, -10)),
        "C+": (_poly(100, 1120, -87, 0), _poly(200, -20)),
        # linear coefficient 820, not 48: forced by Lambda = A + B + C
        "C-": (_poly(100, 820, -57, 0), _poly(200, -20)),
        "Lambda+": _poly(Fraction(126, 4), Fraction(-79, 4), 0),
        "Lambda-": _poly(Fraction(126, 4), Fraction(-85, 4), 0),
    },
    7: {
        "A": _poly(138, -26, 0),
        "B": (_poly(-784, -9128, 606, 0), _poly(196, -14)),
        "C+": (_poly(392, 5992, -330, 0), _poly(392, -28)),
        "C-": (_poly(392, 4816, -246, 0), _poly(392, -28)),
        "Lambda+": _poly(Fraction(540, 4), Fraction(-230, 4), 0),
        "Lambda-": _poly(Fraction(540, 4), Fraction(-242, 4), 0),
    },
    9: {
        "A": _poly(390, -58, 0),
        "B": (_poly(-2160, -33192, 1714, 0), _poly(324, -18)),
        "C+": (_poly(1080, 20880, -890, 0), _poly(648, -36)),
        "C-": (_poly(1080, 17640, -710, 0), _poly(648, -36)),
        "Lambda+": _poly(Fraction(1540, 4), Fraction(-514, 4), 0),
        "Lambda-": _poly(Fraction(1540, 4), Fraction(-534, 4), 0),
    },
}


def _forms(q: int) -> dict:
    try:
        return _TABLE[q]
    except KeyError:
        raise MissingClosedForm(f"no stored closed forms for q={q}; "
                                f"supported: {SUPPORTED_Q}") from None


def _check_surgery(q: int, K: int) -> None:
    if q < 3 or q % 2 == 0:
        raise InvalidSurgery(f"q must be odd and >= 3, got {q}")
    if K == 0:
        raise InvalidSurgery("K must be nonzero")


def lambda_su2(q: int, K: int) -> Fraction:
    """SU(2) Casson invariant of the surgery sphere: K (q^2 - 1) / 4."""
    _check_surgery(q, K)
    return Fraction(K * (q * q - 1), 4)


def reference_A(q: int, K: int) -> Fraction:
    _check_surgery(q, K)
    return _forms(q)["A"](K)


def reference_B(q: int, K: int) -> Fraction:
    _check_surgery(q, K)
    num, den = _forms(q)["B"]
    return num(K) / den(K)


def reference_C(q: int, K: int) -> Fraction:
    _check_surgery(q, K)
    num, den = _forms(q)["C+" if K > 0 else "C-"]
    return num(K) / den(K)


def reference_Lambda(q: int, K: int) -> Fraction:
    _check_surgery(q, K)
    return _forms(q)["Lambda+" if K > 0 else "Lambda-"](K)


@dataclass(frozen=True)
class InvariantReport:
    """All exact rationals; Lambda_su3 = A + B + C + D and 4*Lambda_su3 is an
    integer.  D stores -(1/4) times the chain-complex correction term (zero on
    this family, under either reading of the correction's normalization)."""

    q: int
    K: int
    A: Fraction
    B: Fraction
    C: Fraction
    D: Fraction
    lambda_su2: Fraction
    lambda_su3: Fraction
    Lambda_su3: Fraction

    def __post_init__(self):
        if self.Lambda_su3 != self.A + self.B + self.C + self.D:
            raise Casson3Error("Lambda_su3 != A + B + C + D")
        if (4 * self.Lambda_su3).denominator != 1:
            raise Casson3Error(f"4 * Lambda = {4 * self.Lambda_su3} is not an integer")

    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "K": self.K,
            "A": str(self.A),
            "B": str(self.B),
            "C": str(self.C),
            "D": str(self.D),
            "lambda_su2": str(self.lambda_su2),
            "lambda_su3": str(self.lambda_su3),
            "Lambda_su3": str(self.Lambda_su3),
            "four_Lambda_integral": (4 * self.Lambda_su3).denominator == 1,
        }


def assemble_on_sphere(X: BrieskornSphere, path: str = "float") -> InvariantReport:
    """Report for a sphere of the surgery family, with C computed from the
    cotangent sums on X as given (either orientation)."""
    if X.surgery_origin is None:
        raise InvalidSurgery(f"{X} is not from the surgery family")
    q, K = X.surgery_origin
    A = reference_A(q, K)
    B = reference_B(q, K)
    C = c_correction(X, path=path)
    D = Fraction(-1, 4) * floer_correction(build_floer_complex(X))
    return InvariantReport(
        q=q, K=K, A=A, B=B, C=C, D=D,
        lambda_su2=lambda_su2(q, K),
        lambda_su3=A + B,
        Lambda_su3=A + B + C + D,
    )


def assemble(q: int, K: int, path: str = "float") -> InvariantReport:
    """Full invariant report for 1/K surgery on the (2,q) torus knot."""
    _forms(q)
    return assemble_on_sphere(from_surgery(q, K), path=path)


def lambda_su3(q: int, K: int) -> Fraction:
    """The small-perturbation SU(3) invariant A + B; the fully perturbative
    Lambda differs from it by C + D."""
    return reference_A(q, K) + reference_B(q, K)


def connect_sum_Lambda(
    Lambda1: Fraction,
    Lambda2: Fraction,
    lambda_su2_1: Fraction,
    lambda_su2_2: Fraction,
    floer_sum: int = 0,
    floer_1: int = 0,
    floer_2: int = 0,
) -> Fraction:
    """Connected-sum value: Lambda1 + Lambda2 + (9/2) l1 l2 - (1/4)(Floer(sum)
    - Floer(1) - Floer(2)).  The summands' SU(2) values and the correction
    terms are explicit inputs; the caller picks their normalization."""
    return (
        Fraction(Lambda1) + Fraction(Lambda2)
        + Fraction(9, 2) * Fraction(lambda_su2_1) * Fraction(lambda_su2_2)
        - Fraction(1, 4) * (floer_sum - floer_1 - floer_2)
    )


def connect_sum_lambda(
    lambda1: Fraction,
    lambda2: Fraction,
    lambda_su2_1: Fraction,
    lambda_su2_2: Fraction,
) -> Fraction:
    """Connected-sum rule for the small-perturbation invariant, with
    coefficient 4 on the product term."""
    return (Fraction(lambda1) + Fraction(lambda2)
            + 4 * Fraction(lambda_su2_1) * Fraction(lambda_su2_2))
