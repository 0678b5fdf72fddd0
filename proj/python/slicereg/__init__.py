"""Slice-regular quaternionic polynomials and their twistor lifts.

Quaternions are 4-tuples (w, x, y, z).  Polynomials are expression strings
such as "(q - i)*(q - j)" or coefficient lists [(w, x, y, z), ...] with the
constant term first.
"""

from ._core import (
    SliceregError,
    differential,
    discriminant,
    eval,
    f_par,
    fiber_class,
    is_singular,
    j_minus,
    j_plus,
    lift,
    parse,
    phi,
    preimages,
    quartic_K,
    rank,
    reconstruct,
    star_mul,
    suites,
    twistor_transform,
    verify,
    zeros,
)

__all__ = [
    "SliceregError",
    "differential",
    "discriminant",
    "eval",
    "f_par",
    "fiber_class",
    "is_singular",
    "j_minus",
    "j_plus",
    "lift",
    "parse",
    "phi",
    "preimages",
    "quartic_K",
    "rank",
    "reconstruct",
    "star_mul",
    "suites",
    "twistor_transform",
    "verify",
    "zeros",
]
