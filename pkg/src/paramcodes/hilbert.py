"""Hilbert function and degree of the projective coordinate ring.

Values come from counting standard monomials: monomials of total degree d
not divisible by any leading monomial of the (homogeneous, graded-order)
basis.  The ring degree is the stabilized value of that count, which for a
vanishing ideal of points equals the number of points.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import DomainError, InternalInconsistencyError
from .groebner import GroebnerBasis
from .mpoly import (
    Monomial,
    mono_degree,
    mono_divides,
    mono_lcm,
    monomials_of_degree,
)


@dataclass(frozen=True)
class HilbertProfile:
    """Computed Hilbert values up to (and including) the stabilized tail."""

    values: dict[int, int]
    stabilized_at: int
    degree_of_ring: int


def _minimal_leading_monomials(gb: GroebnerBasis) -> list[Monomial]:
    lms = gb.leading_monomials()
    minimal = []
    for m in sorted(lms, key=mono_degree):
        if not any(mono_divides(g, m) for g in minimal):
            minimal.append(m)
    return minimal


def _count_standard(lms: list[Monomial], num_vars: int, degree: int,
                    inclusion_exclusion: bool) -> int:
    if any(mono_degree(m) == 0 for m in lms):
        return 0  # unit ideal: no standard monomials at all
    if inclusion_exclusion:
        return _count_by_inclusion_exclusion(lms, num_vars, degree)
    count = 0
    for m in monomials_of_degree(num_vars, degree):
        if not any(mono_divides(lm, m) for lm in lms):
            count += 1
    return count


def _count_by_inclusion_exclusion(lms, num_vars, degree):
    from math import comb

    def multiples(m):
        # monomials of total degree `degree` divisible by m
        excess = degree - mono_degree(m)
        if excess < 0:
            return 0
        return comb(excess + num_vars - 1, num_vars - 1)

    total = comb(degree + num_vars - 1, num_vars - 1)
    for size in range(1, len(lms) + 1):
        sign = -1 if size % 2 else 1
        for subset in combinations(lms, size):
            lcm = subset[0]
            for m in subset[1:]:
                lcm = mono_lcm(lcm, m)
            total += sign * multiples(lcm)
    return total


def hilbert_value(gb_y: GroebnerBasis, d: int,
                  inclusion_exclusion: bool = False) -> int:
    """Dimension of the degree-d graded piece of the quotient ring."""
    if d < 0:
        raise DomainError("degree must be non-negative")
    for g in gb_y.generators:
        if not g.is_homogeneous():
            raise DomainError("basis has a non-homogeneous generator")
    lms = _minimal_leading_monomials(gb_y)
    return _count_standard(lms, gb_y.ring.num_vars, d, inclusion_exclusion)


def affine_hilbert_value(gb_x: GroebnerBasis, d: int) -> int:
    """Dimension of the space of degree-<=d polynomials modulo the affine
    ideal: standard monomials of degree up to d."""
    if d < 0:
        raise DomainError("degree must be non-negative")
    lms = _minimal_leading_monomials(gb_x)
    num_vars = gb_x.ring.num_vars
    return sum(_count_standard(lms, num_vars, e, False) for e in range(d + 1))


def hilbert_profile(gb_y: GroebnerBasis, cap: Optional[int] = None) -> HilbertProfile:
    """Iterate the Hilbert function until two consecutive values agree.

    Monotone-until-constant behaviour is guaranteed for vanishing ideals of
    nonempty point sets, so the first repeat is the degree of the ring.
    """
    field_order = gb_y.ring.field.order
    if cap is None:
        cap = 4 * gb_y.ring.num_vars * field_order
    values: dict[int, int] = {0: hilbert_value(gb_y, 0)}
    previous = values[0]
    for d in range(1, cap + 1):
        current = hilbert_value(gb_y, d)
        values[d] = current
        if current == previous:
            return HilbertProfile(values, stabilized_at=d - 1,
                                  degree_of_ring=current)
        if current < previous:
            raise InternalInconsistencyError(
                f"Hilbert function decreased at degree {d} "
                f"({previous} -> {current}); the basis is not a vanishing ideal")
        previous = current
    raise InternalInconsistencyError(
        f"Hilbert function did not stabilize by degree {cap}; "
        "the basis cannot cut out a finite point set")


def ring_degree(gb_y: GroebnerBasis, cap: Optional[int] = None) -> int:
    """The stabilized Hilbert value (= number of points of the variety)."""
    return hilbert_profile(gb_y, cap).degree_of_ring
