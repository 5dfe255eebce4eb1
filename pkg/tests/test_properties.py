"""Property deciders: IDP, tuple-IDP, level, Gorenstein, edge criterion."""

import pytest
from hypothesis import given, settings, strategies as st

from latcayley import (
    DimensionMismatch,
    GeometryError,
    PointSet,
    PropertyReport,
    Verdict,
    cayley_sum,
    dilate,
    edge_length_criterion,
    from_vertices,
    interior_lattice_points,
    is_2_convex_normal,
    is_gorenstein,
    is_idp,
    is_tuple_idp,
    lattice_points,
    level_index,
    level_status,
    minkowski_sum,
    point_set_sum,
    random_lattice_polytope,
    translate,
)

from conftest import load_fixture


def P(*verts):
    return from_vertices(verts)


# ---------------------------------------------------------------------------
# point_set_sum


def test_point_set_sum_basic():
    A = PointSet(2, ((0, 0), (1, 0)))
    B = PointSet(2, ((0, 0), (0, 1)))
    assert point_set_sum(A, B).points == ((0, 0), (0, 1), (1, 0), (1, 1))


def test_point_set_sum_identity_and_commutativity():
    A = PointSet(2, ((0, 0), (1, 2), (2, 1)))
    zero = PointSet(2, ((0, 0),))
    assert point_set_sum(A, zero) == A
    B = PointSet(2, ((1, 1), (-1, 0)))
    assert point_set_sum(A, B) == point_set_sum(B, A)


def test_point_set_sum_dim_mismatch():
    with pytest.raises(DimensionMismatch):
        point_set_sum(PointSet(2, ((0, 0),)), PointSet(1, ((0,),)))


# ---------------------------------------------------------------------------
# IDP


def test_idp_unit_square(unit_square):
    rep = is_idp(unit_square)
    assert rep.verdict is Verdict.HOLDS
    assert rep.witness is None
    assert rep.degrees_checked == (2, 2)


def test_idp_unit_cube(unit_cube):
    assert is_idp(unit_cube).verdict is Verdict.HOLDS


def test_idp_reeve_fails_with_reverifiable_witness(reeve):
    rep = is_idp(reeve)
    assert rep.verdict is Verdict.FAILS
    n, pt = rep.witness
    assert (n, pt) == (2, (1, 1, 1))
    # independent re-check of the defining equality at the witness degree
    assert pt in lattice_points(dilate(reeve, n)).points
    reachable = point_set_sum(lattice_points(dilate(reeve, n - 1)), lattice_points(reeve))
    assert pt not in reachable.points


def test_idp_respects_max_degree(reeve):
    rep = is_idp(reeve, max_degree=5)
    assert rep.verdict is Verdict.FAILS
    assert rep.degrees_checked[0] == 2
    # a bound below the first checkable degree leaves nothing to refute
    assert is_idp(reeve, max_degree=1).verdict is Verdict.HOLDS


def test_idp_translation_invariant(reeve, unit_square):
    assert is_idp(translate(reeve, (3, -2, 5))).verdict is Verdict.FAILS
    assert is_idp(translate(unit_square, (-7, 9))).verdict is Verdict.HOLDS


# ---------------------------------------------------------------------------
# tuple IDP


def test_tuple_idp_singleton_always_holds(unit_square):
    assert is_tuple_idp([unit_square]).verdict is Verdict.HOLDS


def test_tuple_idp_squares_hold(unit_square):
    assert is_tuple_idp([unit_square, unit_square]).verdict is Verdict.HOLDS


def test_tuple_idp_steep_segment_pair_fails():
    P1, P2 = P((0, 0), (1, 2)), P((0, 0), (1, 0))
    rep = is_tuple_idp([P1, P2])
    assert rep.verdict is Verdict.FAILS
    subset, pt = rep.witness
    assert subset == (1, 2)
    assert pt == (1, 1)
    # (1,1) is in the sum polytope but not in the sum of the point sets
    assert pt in lattice_points(minkowski_sum([P1, P2])).points
    assert pt not in point_set_sum(lattice_points(P1), lattice_points(P2)).points


def test_tuple_idp_needs_common_dim(unit_square, segment):
    with pytest.raises(DimensionMismatch):
        is_tuple_idp([unit_square, segment])


# ---------------------------------------------------------------------------
# level and Gorenstein


def test_level_index_unit_square(unit_square):
    data = level_index(unit_square)
    assert data.index_r == 2
    assert data.interior_generators.points == ((1, 1),)


def test_level_index_bounded_by_dim_plus_one():
    for seed in range(8):
        Q = random_lattice_polytope(seed, 2, 2, coord_bound=3)
        assert level_index(Q).index_r <= Q.dim + 1


def test_level_status_unit_square(unit_square):
    rep = level_status(unit_square)
    assert rep.verdict is Verdict.VERIFIED_UP_TO_HORIZON
    assert rep.degrees_checked == (2, 6)
    assert rep.horizon_used == 6


def test_level_status_never_claims_holds(unit_square, segment):
    for Q in (unit_square, segment):
        assert level_status(Q).verdict in (Verdict.VERIFIED_UP_TO_HORIZON, Verdict.FAILS)


def test_level_status_rejects_horizon_below_index(unit_square):
    with pytest.raises(GeometryError):
        level_status(unit_square, horizon=1)


def test_level_fails_for_cayley_pair_with_reverifiable_witness():
    C = cayley_sum([P((1, 0), (0, 1)), P((1, 1), (-1, -1))])
    rep = level_status(C)
    assert rep.verdict is Verdict.FAILS
    n, pt = rep.witness
    assert (n, pt) == (3, (2, 1, 1, 1))
    r = level_index(C).index_r
    assert pt in interior_lattice_points(dilate(C, n)).points
    reachable = point_set_sum(
        interior_lattice_points(dilate(C, r)), lattice_points(dilate(C, n - r))
    )
    assert pt not in reachable.points


def test_gorenstein_unit_square(unit_square):
    rep = is_gorenstein(unit_square)
    assert rep.verdict is Verdict.VERIFIED_UP_TO_HORIZON
    assert rep.degrees_checked[0] == 2


def test_gorenstein_double_segment():
    rep = is_gorenstein(P((0,), (2,)))
    assert rep.verdict is Verdict.VERIFIED_UP_TO_HORIZON
    assert rep.degrees_checked[0] == 1


def test_gorenstein_fails_on_two_generators():
    # interior of the first dilate already holds two lattice points
    M = minkowski_sum([P((1, 0), (0, 1)), P((1, 1), (-1, -1))])
    assert level_index(M).index_r == 1
    assert len(level_index(M).interior_generators.points) == 2
    rep = is_gorenstein(M)
    assert rep.verdict is Verdict.FAILS
    r, second = rep.witness
    assert r == 1
    assert second in level_index(M).interior_generators.points


def test_gorenstein_passes_level_failure_through():
    C = cayley_sum([P((1, 0), (0, 1)), P((1, 1), (-1, -1))])
    assert is_gorenstein(C).verdict is Verdict.FAILS


# ---------------------------------------------------------------------------
# edge criterion


def test_edge_criterion_threshold():
    # threshold for dim 2 is 2*2*3 = 12
    assert edge_length_criterion(dilate(P((0, 0), (1, 0), (0, 1)), 12))
    assert not edge_length_criterion(dilate(P((0, 0), (1, 0), (0, 1)), 11))
    assert not edge_length_criterion(P((0, 0), (1, 0), (0, 1)))


def test_edge_criterion_rejects_points():
    with pytest.raises(GeometryError):
        edge_length_criterion(P((3, 3)))


def test_edge_criterion_implies_idp():
    Q = dilate(P((0, 0), (1, 0), (0, 1)), 12)
    assert edge_length_criterion(Q)
    assert is_idp(Q).verdict is Verdict.HOLDS


@pytest.mark.parametrize("verts, factor", [
    (((0,), (1,)), 4),
    (((0, 0), (1, 0), (0, 1)), 12),
])
def test_edge_criterion_implies_2_convex_normal(verts, factor):
    Q = dilate(from_vertices(verts), factor)
    assert edge_length_criterion(Q)
    assert is_2_convex_normal(Q).covered


# ---------------------------------------------------------------------------
# zero-dimensional conventions


def test_point_polytope_is_idp_and_level_one():
    pt = P((3, 3))
    assert is_idp(pt).verdict is Verdict.HOLDS
    data = level_index(pt)
    assert data.index_r == 1
    assert data.interior_generators.points == ((3, 3),)
    gor = is_gorenstein(pt)
    assert gor.verdict is Verdict.VERIFIED_UP_TO_HORIZON
    assert gor.degrees_checked[0] == 1


# ---------------------------------------------------------------------------
# report structure


def test_property_report_requires_witness_only_on_fails():
    with pytest.raises(ValueError):
        PropertyReport("idp", Verdict.FAILS, None, (2, 2), None)
    with pytest.raises(ValueError):
        PropertyReport("idp", Verdict.HOLDS, (2, (0, 0)), (2, 2), None)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 2))
def test_idp_verdicts_are_never_horizon_qualified(seed, dim):
    Q = random_lattice_polytope(seed, dim, dim, coord_bound=3)
    assert is_idp(Q).verdict in (Verdict.HOLDS, Verdict.FAILS)


@settings(max_examples=12, deadline=None)
@given(st.integers(0, 10**6))
def test_level_translation_invariant(seed):
    Q = random_lattice_polytope(seed, 2, 2, coord_bound=3)
    moved = translate(Q, (11, -4))
    assert level_index(Q).index_r == level_index(moved).index_r
    assert level_status(Q).verdict == level_status(moved).verdict
