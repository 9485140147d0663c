"""Exact period-field arithmetic, zeta functions and conjecture checks."""
from fractions import Fraction

from . import _mlv
from ._mlv import (
    MlvError,
    PeriodValue,
    catalog_names,
    check_all,
    declare_symbol,
    run_cli,
    tate_weak_dims,
    zeta_at_integer,
)

__all__ = [
    "MlvError",
    "PeriodValue",
    "catalog_names",
    "check_all",
    "declare_symbol",
    "point_count",
    "rational_ratio",
    "run_cli",
    "tate_weak_dims",
    "zeta_at_integer",
    "zeta_from_counts",
]


def point_count(kind, ambient_dim, equations, p, k):
    """Number of F_{p^k}-points of an affine or projective variety."""
    return int(_mlv.point_count(kind, ambient_dim, list(equations), p, k))


def zeta_from_counts(counts, deg_num, deg_den):
    """(numerator, denominator) coefficient lists of Z(t), constant term first."""
    num, den = _mlv.zeta_from_counts([str(c) for c in counts], deg_num, deg_den)
    return [Fraction(c) for c in num], [Fraction(c) for c in den]


def rational_ratio(a, b):
    """a / b as a Fraction when it is rational, else None."""
    r = _mlv.rational_ratio(a, b)
    return None if r is None else Fraction(r)
