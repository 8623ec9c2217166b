"""Integer Laurent polynomials, normalized torus-knot Alexander polynomials,
and the quadratic-difference report for the surgery-family invariants."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping

from .errors import NotCoprime
from .flat_moduli import count_connections
from .polynomial import RationalPoly


class LaurentPoly:
    """Laurent polynomial with integer coefficients; zero coefficients are
    never stored."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.coeffs = {int(n): int(c) for n, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for n, c in other.coeffs.items():
            out[n] = out.get(n, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({n: -c for n, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for n, c in self.coeffs.items():
            for m, d in other.coeffs.items():
                out[n + m] = out.get(n + m, 0) + c * d
        return LaurentPoly(out)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly({n + k: c for n, c in self.coeffs.items()})

    def mirror(self) -> "LaurentPoly":
        """t -> 1/t."""
        return LaurentPoly({-n: c for n, c in self.coeffs.items()})

    def at_one(self) -> int:
        return sum(self.coeffs.values())

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for n in sorted(self.coeffs, reverse=True):
            c = self.coeffs[n]
            mag = abs(c)
            if n == 0:
                body = str(mag)
            else:
                power = "t" if n == 1 else f"t^{n}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact quotient of ordinary integer polynomials (lowest power first)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        if c % den[-1] != 0:
            raise ValueError("inexact polynomial division")
        q = c // den[-1]
        out[i] = q
        for j, d in enumerate(den):
            num[i + j] -= q * d
    if any(num):
        raise ValueError("inexact polynomial division")
    return out


def alexander_torus(p: int, q: int) -> LaurentPoly:
    """Normalized Alexander polynomial of the (p,q) torus knot: the symmetric
    Laurent form of (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), satisfying
    D(t) = D(1/t) and D(1) = 1."""
    if p < 1 or q < 1:
        raise ValueError("p, q must be positive")
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p},{q}) != 1")
    if p == 1 or q == 1:
        return LaurentPoly.one()

    def cyc(n: int) -> list[int]:
        return [-1] + [0] * (n - 1) + [1]  # t^n - 1

    def mul(a: list[int], b: list[int]) -> list[int]:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    quotient = _poly_divide_exact(mul(cyc(p * q), cyc(1)), mul(cyc(p), cyc(q)))
    half = (p - 1) * (q - 1) // 2  # quotient has even degree (p-1)(q-1)
    return LaurentPoly({i - half: c for i, c in enumerate(quotient)})


def second_derivative_at_one(P: LaurentPoly) -> Fraction:
    """d^2/dt^2 at t = 1: sum_n n (n - 1) coeff(n)."""
    return Fraction(sum(n * (n - 1) * c for n, c in P.coeffs.items()))


def check_conjecture(q: int, fit_plus: RationalPoly, fit_minus: RationalPoly) -> dict:
    """Compare the two quadratic branches of the invariant against the
    representation count and the Alexander second derivative.

    Reports (never asserts): whether fit_plus - fit_minus equals (1/4) N(q) K
    with N(q) = (q^2 - 1)/4, whether N(q) matches the per-|K| count of
    irreducible SU(2) representations and |D''(1)| of the (2,q) torus knot,
    and how the as-stated form 'P+ = P- - |K| D''(1)' differs (a factor that
    is flagged, not resolved).
    """
    n_q = (q * q - 1) // 4
    diff = fit_plus - fit_minus
    expected = RationalPoly.from_coeffs([0, Fraction(n_q, 4)])
    d2 = second_derivative_at_one(alexander_torus(2, q))
    stated = RationalPoly.from_coeffs([0, -d2])  # P+ - P- per the stated form
    factor = None
    if diff.degree == 1 and diff.coeffs[1] != 0:
        factor = stated.coeffs[1] / diff.coeffs[1] if stated.degree == 1 else Fraction(0)
    return {
        "q": q,
        "N": n_q,
        "difference": diff.format("K"),
        "difference_equals_quarter_N_K": diff == expected,
        "rep_count_per_k": count_connections(q, 1),
        "rep_count_matches_N": count_connections(q, 1) == n_q,
        "alexander_second_derivative": str(d2),
        "abs_second_derivative_matches_N": abs(d2) == n_q,
        "stated_form_holds": diff == stated,
        "stated_vs_actual_factor": None if factor is None else str(factor),
    }
