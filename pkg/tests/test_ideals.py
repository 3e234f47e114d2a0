import itertools
import random

import pytest

from paramcodes.errors import DomainError, ResourceLimitError
from paramcodes.gf import FieldSpec
from paramcodes.groebner import normal_form
from paramcodes.ideals import (
    ExponentMatrix,
    enumerate_points,
    vanishing_ideal_affine,
    vanishing_ideal_projective,
)
from paramcodes.linalg import rank, rref, in_row_space
from paramcodes.mpoly import GrevLex, Polynomial, RingContext

from conftest import field
from oracles import evaluation_rows, point_interpolation_ideal

F5 = FieldSpec.of(5)


def test_matrix_validation():
    with pytest.raises(DomainError):
        ExponentMatrix.of([])
    with pytest.raises(DomainError, match="row 2"):
        ExponentMatrix.of([[1, 0], [1]])
    with pytest.raises(DomainError, match="row 1"):
        ExponentMatrix.of([[-1, 0]])
    m = ExponentMatrix.of([[1, 1, 0], [0, 1, 1]])
    assert (m.s, m.n) == (2, 3)


def test_enumerate_triangle_set(triangle_set):
    assert len(triangle_set) == 32
    # all coordinates are units; points deduplicated and sorted
    for pt in triangle_set.affine_points:
        assert all(pt)
    lifts = [tuple(c.lift() for c in pt) for pt in triangle_set.affine_points]
    assert lifts == sorted(lifts)
    assert len(set(lifts)) == 32
    # projective lift is bijective
    assert len(triangle_set.projective_reps) == 32
    assert len(set(triangle_set.projective_reps)) == 32
    assert all(pt[-1] == F5.one for pt in triangle_set.projective_reps)


@pytest.mark.parametrize("q,s", [(5, 2), (3, 3), (11, 2)])
def test_enumerate_torus_full_size(q, s):
    pset = enumerate_points(ExponentMatrix.torus(s), field(q))
    assert len(pset) == (q - 1) ** s


def test_enumerate_binary_field_single_point():
    pset = enumerate_points(ExponentMatrix.of([[1, 1], [1, 0]]), FieldSpec.of(2))
    assert len(pset) == 1
    assert all(c == FieldSpec.of(2).one for c in pset.affine_points[0])


def test_enumeration_budget():
    with pytest.raises(ResourceLimitError, match="budget"):
        enumerate_points(ExponentMatrix.of([[1, 1, 1]]), FieldSpec.of(101),
                         budget=1000)


def test_affine_ideal_golden(triangle_set):
    gb = vanishing_ideal_affine(triangle_set)
    printed = sorted(g.format(gb.order) for g in gb.generators)
    assert printed == sorted([
        "t3^4 - 1",
        "t2^2*t3^2 - t1^2",
        "t1^2*t3^2 - t2^2",
        "t2^4 - 1",
        "t1^2*t2^2 - t3^2",
        "t1^4 - 1",
    ])


def test_affine_ideal_torus_one_dim():
    for q in (3, 5, 7):
        pset = enumerate_points(ExponentMatrix.of([[1]]), FieldSpec.of(q))
        gb = vanishing_ideal_affine(pset)
        assert [g.format(gb.order) for g in gb.generators] == [f"t1^{q-1} - 1"]


def test_affine_generators_vanish_everywhere(triangle_set):
    gb = vanishing_ideal_affine(triangle_set)
    for g in gb.generators:
        for pt in triangle_set.affine_points:
            assert not g.evaluate(pt)


def test_projective_ideal_golden(triangle_set):
    gb_x = vanishing_ideal_affine(triangle_set)
    gb_y = vanishing_ideal_projective(gb_x)
    printed = sorted(g.format(gb_y.order) for g in gb_y.generators)
    assert printed == sorted([
        "t3^4 - t4^4",
        "t2^2*t3^2 - t1^2*t4^2",
        "t1^2*t3^2 - t2^2*t4^2",
        "t2^4 - t4^4",
        "t1^2*t2^2 - t3^2*t4^2",
        "t1^4 - t4^4",
    ])
    for g in gb_y.generators:
        for rep in triangle_set.projective_reps:
            assert not g.evaluate(rep)


def test_projective_ideal_torus():
    pset = enumerate_points(ExponentMatrix.of([[1]]), FieldSpec.of(7))
    gb_y = vanishing_ideal_projective(vanishing_ideal_affine(pset))
    assert [g.format(gb_y.order) for g in gb_y.generators] == ["t1^6 - t2^6"]


def test_interpolation_oracle_single_point():
    pset = enumerate_points(ExponentMatrix.of([[1, 1], [2, 2]]), FieldSpec.of(2))
    assert len(pset) == 1  # the all-ones point
    polys = point_interpolation_ideal(pset, 1)
    lin = {f.format(GrevLex()) for f in polys if f.degree() == 1}
    # degree-1 vanishing polynomials include t1 - 1 and t2 - 1 (char 2: "+")
    assert "t1 + 1" in lin and "t2 + 1" in lin


def test_interpolation_kernel_dimension_matches_hilbert(triangle_set):
    # kernel dim of the degree-<=4 evaluation pairing = C(7,3) - H_Y(4)
    from paramcodes.hilbert import hilbert_value

    gb_y = vanishing_ideal_projective(vanishing_ideal_affine(triangle_set))
    ring = RingContext(F5, ("t1", "t2", "t3"))
    monos, rows = evaluation_rows(triangle_set, 4, ring)
    assert len(monos) == 35
    eval_rank = rank(rows, F5)
    polys = point_interpolation_ideal(triangle_set, 4)
    assert len(polys) == 35 - eval_rank
    assert len(polys) == 35 - hilbert_value(gb_y, 4)


def test_interpolation_oracle_torus_q3():
    pset = enumerate_points(ExponentMatrix.torus(2), FieldSpec.of(3))
    assert len(pset) == 4
    polys = point_interpolation_ideal(pset, 2)
    for f in polys:
        for pt in pset.affine_points:
            assert not f.evaluate(pt)
    # t1^2 - 1 and t2^2 - 1 vanish and must lie in the oracle's span
    spec = pset.field
    ring = polys[0].ring
    monos, _ = evaluation_rows(pset, 2, ring)
    index = {m: i for i, m in enumerate(monos)}
    kernel_rows = []
    for f in polys:
        row = [spec.zero_rep] * len(monos)
        for m, c in f.terms.items():
            row[index[m]] = c.rep
        kernel_rows.append(row)
    echelon, pivots = rref(kernel_rows, spec)
    for target in ({(2, 0): 1, (0, 0): -1}, {(0, 2): 1, (0, 0): -1}):
        vec = [spec.zero_rep] * len(monos)
        for m, c in target.items():
            vec[index[m]] = spec.element(c).rep
        assert in_row_space(echelon, pivots, vec, spec)


def test_zero_membership_both_directions():
    # forward: normal form zero -> vanishes; backward: vanishes -> nf zero
    pset = enumerate_points(ExponentMatrix.of([[1, 1]]), F5)
    gb = vanishing_ideal_affine(pset)
    rng = random.Random(5)
    ring = gb.ring
    for _ in range(40):
        terms = {(rng.randrange(6),): rng.randrange(5)
                 for _ in range(rng.randrange(1, 4))}
        f = Polynomial(ring, {m: F5.element(c) for m, c in terms.items()})
        vanishes = all(not f.evaluate(pt) for pt in pset.affine_points)
        assert (not normal_form(f, gb)) == vanishes
    # backward direction on oracle-built members
    for g in point_interpolation_ideal(pset, 5):
        assert not normal_form(g, gb)


@pytest.mark.parametrize("q,n", [(3, 1), (3, 2), (4, 2), (5, 1), (5, 2)])
def test_low_degree_vanishing_forces_zero(q, n):
    # a nonzero polynomial with every per-variable degree < q-1 cannot
    # vanish on the whole unit torus: exhaustive over >= 250 samples each
    spec = field(q)
    units = spec.units()
    ring = RingContext(spec, tuple(f"y{i+1}" for i in range(n)))
    rng = random.Random(q * 100 + n)
    exps = list(itertools.product(range(q - 1), repeat=n))
    for _ in range(250):
        terms = {}
        for _ in range(rng.randrange(1, 5)):
            m = rng.choice(exps)
            c = rng.randrange(1, q)
            terms[m] = spec.element(c)
        f = Polynomial(ring, terms)
        if not f:
            continue
        assert any(f.evaluate(pt) for pt in itertools.product(units, repeat=n))
