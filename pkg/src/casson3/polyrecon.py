"""Exact polynomial reconstruction with verification by extra sample points.

Exact arithmetic makes "fits exactly or not" decidable, so there is no
least-squares notion here: a fit either interpolates every extra check point
or the data is not polynomial of the claimed degree.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .errors import DegreeExceeded
from .exact_arith import solve_vandermonde
from .polynomial import RationalPoly


def fit_and_verify(
    values: Mapping[int, Fraction],
    degree: int,
    extra_check_points: int = 0,
) -> RationalPoly:
    """Fit a degree-`degree` polynomial through the first degree+1 samples
    (keys sorted ascending) and require every remaining sample to lie on it
    exactly; raises DegreeExceeded otherwise."""
    needed = degree + 1 + extra_check_points
    if len(values) < needed:
        raise ValueError(f"need at least {needed} samples, got {len(values)}")
    keys = sorted(values)
    fit_keys, check_keys = keys[: degree + 1], keys[degree + 1:]
    poly = solve_vandermonde(
        [(Fraction(k), Fraction(values[k])) for k in fit_keys], degree
    )
    for k in check_keys:
        got = poly(k)
        if got != values[k]:
            raise DegreeExceeded(
                f"degree-{degree} fit predicts {got} at {k}, data says {values[k]}"
            )
    return poly
