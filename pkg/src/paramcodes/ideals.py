"""Parameterized toric point sets and their vanishing ideals.

An exponent matrix (s rows of n non-negative integers) parameterizes a
point set inside the affine torus: each parameter tuple x in (K*)^n maps
to the point whose i-th coordinate is the i-th row's monomial evaluated
at x.  The vanishing ideal comes out of a block elimination: adjoin one
variable per parameter, relate coordinates to parameter monomials, impose
the unit-group relations, and eliminate the parameter block.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, ResourceLimitError
from .gf import FieldElement, FieldSpec
from .groebner import GroebnerBasis, eliminate, homogenize_basis
from .mpoly import GrevLex, Polynomial, RingContext, append_variable

DEFAULT_ENUMERATION_BUDGET = 2**20

Point = tuple  # tuple of FieldElement


@dataclass(frozen=True)
class ExponentMatrix:
    """s rows of n non-negative integer exponents, one row per coordinate."""

    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> "ExponentMatrix":
        if not rows:
            raise DomainError("exponent matrix needs at least one row")
        clean = []
        width = None
        for idx, row in enumerate(rows, start=1):
            entries = tuple(int(e) for e in row)
            if not entries:
                raise DomainError(f"matrix row {idx} is empty")
            if width is None:
                width = len(entries)
            elif len(entries) != width:
                raise DomainError(
                    f"matrix row {idx} has {len(entries)} entries, expected {width}")
            if any(e < 0 for e in entries):
                raise DomainError(f"matrix row {idx} has a negative exponent")
            clean.append(entries)
        return cls(tuple(clean))

    @classmethod
    def torus(cls, s: int) -> "ExponentMatrix":
        """Identity matrix: the coordinates are the parameters themselves."""
        return cls.of([[1 if j == i else 0 for j in range(s)] for i in range(s)])

    @property
    def s(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])


@dataclass(frozen=True)
class ParameterizedSet:
    """The enumerated points of the set plus their projective lifts."""

    matrix: ExponentMatrix
    field: FieldSpec
    affine_points: tuple[Point, ...]
    projective_reps: tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.affine_points)


def enumerate_points(matrix: ExponentMatrix, field: FieldSpec,
                     budget: int = DEFAULT_ENUMERATION_BUDGET) -> ParameterizedSet:
    """Evaluate the parameterizing monomials on every unit tuple, dedupe,
    and sort points by their canonical residues."""
    units = field.units()
    n, s = matrix.n, matrix.s
    total = len(units) ** n
    if total > budget:
        raise ResourceLimitError(
            f"(q-1)^n = {total} parameter tuples exceeds the enumeration "
            f"budget {budget}")

    max_exp = max(max(row) for row in matrix.rows)
    pow_table = []
    for u in units:
        powers = [field.one]
        for _ in range(max_exp):
            powers.append(powers[-1] * u)
        pow_table.append(powers)

    seen = set()
    for combo in itertools.product(range(len(units)), repeat=n):
        point = []
        for row in matrix.rows:
            value = field.one
            for j, e in enumerate(row):
                if e:
                    value = value * pow_table[combo[j]][e]
            point.append(value)
        seen.add(tuple(point))

    affine = tuple(sorted(seen, key=lambda pt: tuple(c.lift() for c in pt)))
    one = field.one
    projective = tuple(pt + (one,) for pt in affine)
    return ParameterizedSet(matrix, field, affine, projective)


def relation_ring(matrix: ExponentMatrix, field: FieldSpec) -> RingContext:
    """Parameter variables first (the elimination block), coordinates after."""
    names = tuple(f"y{j + 1}" for j in range(matrix.n)) + \
        tuple(f"t{i + 1}" for i in range(matrix.s))
    return RingContext(field, names)


def relation_ideal_generators(matrix: ExponentMatrix, field: FieldSpec,
                              ring: RingContext) -> list[Polynomial]:
    """t_i - y^{v_i} for each row, plus the unit-group relations y_j^{q-1} - 1."""
    n, s = matrix.n, matrix.s
    q = field.order
    one = field.one
    minus_one = -one
    gens = []
    for i, row in enumerate(matrix.rows):
        t_exps = [0] * (n + s)
        t_exps[n + i] = 1
        y_exps = list(row) + [0] * s
        gens.append(Polynomial(ring, {tuple(t_exps): one, tuple(y_exps): minus_one}))
    for j in range(n):
        y_exps = [0] * (n + s)
        y_exps[j] = q - 1
        gens.append(Polynomial(ring, {tuple(y_exps): one, (0,) * (n + s): minus_one}))
    return gens


def vanishing_ideal_affine(pset: ParameterizedSet) -> GroebnerBasis:
    """Reduced GrevLex basis of all polynomials vanishing on the affine set;
    every generator is a binomial."""
    matrix, field = pset.matrix, pset.field
    ring = relation_ring(matrix, field)
    gens = relation_ideal_generators(matrix, field, ring)
    return eliminate(gens, ring, matrix.n)


def vanishing_ideal_projective(affine_gb: GroebnerBasis,
                               verify: bool = False) -> GroebnerBasis:
    """Homogenize the affine basis with a fresh trailing variable; the
    result generates the vanishing ideal of the projective lift."""
    s = affine_gb.ring.num_vars
    extended = affine_gb.ring.with_extra_variable(f"t{s + 1}")
    lifted = tuple(append_variable(g, extended) for g in affine_gb.generators)
    gb = GroebnerBasis(lifted, GrevLex(), extended, is_reduced=affine_gb.is_reduced)
    return homogenize_basis(gb, hom_var=s, verify=verify)
