"""Irreducible flat SU(2) connections of the surgery spheres, enumerated as
rotation-number triples (L1, L2, L3).

The triple determines the conjugacy classes of the three exceptional-fiber
generators; admissibility is the exact integer form of the constraint that the
third generator's trace be reachable, namely

    |a3/2 - a3*L2/a2| < L3 < a3 - |a3/2 - a3*L2/a2|

together with the parity constraints L2 = m (mod 2), L3 = k (mod 2), where
m = (q-1)/2 and k = |K|.  The bound is the exact transcription of
|cos(pi*L3/a3)| < sin(pi*L2/a2), valid on both sides of a2/2.  Enumeration
depends only on the multiplicities, never on the orientation.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedFamily
from .seifert import BrieskornSphere


@dataclass(frozen=True)
class FlatConnection:
    """Rotation numbers with the enumeration index t (rank of L3 within its L2
    branch, 1-based) and the integer e = sum_i L_i * (a / a_i)."""

    L: tuple[int, int, int]
    t_index: int
    e: int
    host: BrieskornSphere


def surgery_parameters(X: BrieskornSphere) -> tuple[int, int, int, int]:
    """(q, k, m, sign K) for a sphere from the surgery family."""
    if X.surgery_origin is None:
        raise UnsupportedFamily(f"{X} did not come from a (2,q) torus knot surgery")
    q, K = X.surgery_origin
    return q, abs(K), (q - 1) // 2, (1 if K > 0 else -1)


def is_admissible(X: BrieskornSphere, L2: int, L3: int) -> bool:
    """Parity and trace-reachability test for a candidate (1, L2, L3)."""
    q, k, m, _ = surgery_parameters(X)
    _, a2, a3 = X.a
    if not (0 < L2 < a2 and 0 < L3 < a3):
        return False
    if (L2 - m) % 2 != 0 or (L3 - k) % 2 != 0:
        return False
    # compare via integers: bound = |a3/2 - a3*L2/a2| = |a2*a3 - 2*a3*L2| / (2*a2)
    twice_bound_num = abs(a2 * a3 - 2 * a3 * L2)  # = 2*a2*bound
    return twice_bound_num < 2 * a2 * L3 < 2 * a2 * a3 - twice_bound_num


def enumerate_connections(X: BrieskornSphere) -> list[FlatConnection]:
    """All admissible triples, sorted by (L2, L3), with t ranking L3 within L2."""
    q, k, m, _ = surgery_parameters(X)
    a1, a2, a3 = X.a
    a = X.fiber_product
    out: list[FlatConnection] = []
    for L2 in range(1, a2):
        if (L2 - m) % 2 != 0:
            continue
        t = 0
        for L3 in range(1, a3):
            if not is_admissible(X, L2, L3):
                continue
            t += 1
            e = (a // a1) + L2 * (a // a2) + L3 * (a // a3)
            out.append(FlatConnection(L=(1, L2, L3), t_index=t, e=e, host=X))
    return out


def e_invariant(c: FlatConnection) -> int:
    """e = sum_i L_i * (a / a_i), unreduced (the tables' normalization)."""
    return c.e


def e_reduced(c: FlatConnection) -> int:
    """Residue of e modulo 2a; every downstream use of e only depends on this."""
    return c.e % (2 * c.host.fiber_product)


def count_connections(q: int, k: int) -> int:
    """(q^2 - 1) k / 4; equals len(enumerate_connections) for both surgery signs."""
    if q < 3 or q % 2 == 0 or k < 1:
        raise ValueError(f"need odd q >= 3 and k >= 1, got q={q}, k={k}")
    return (q * q - 1) * k // 4
