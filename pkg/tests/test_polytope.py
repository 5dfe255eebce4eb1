"""Polytope constructions: sums, dilates, slices, edges, fans."""

import pytest
from hypothesis import given, settings, strategies as st

from latcayley import (
    DimensionMismatch,
    GeometryError,
    Hyperplane,
    cayley_slice,
    cayley_sum,
    dilate,
    edges,
    from_vertices,
    interior_lattice_points,
    lattice_points,
    minkowski_sum,
    normal_fan_coarsens,
    translate,
)

from conftest import load_fixture, seg


def P(*verts):
    return from_vertices(verts)


# ---------------------------------------------------------------------------
# construction and enumeration


def test_from_vertices_canonicalizes():
    a = P((0, 0), (1, 0), (0, 1), (1, 1))
    b = P((1, 1), (0, 0), (0, 1), (1, 0), (0, 0))
    assert a == b
    assert a.vertices == ((0, 0), (0, 1), (1, 0), (1, 1))


def test_from_vertices_rejects_non_integer():
    with pytest.raises(GeometryError):
        from_vertices([(0, 0), (1, 0.5)])


def test_lattice_points_unit_square(unit_square):
    assert lattice_points(unit_square).points == ((0, 0), (0, 1), (1, 0), (1, 1))


def test_lattice_points_reeve_only_vertices(reeve):
    assert lattice_points(reeve).points == ((0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 1, 2))


def test_interior_lattice_points():
    assert interior_lattice_points(P((0, 0), (1, 0), (0, 1), (1, 1))).points == ()
    assert interior_lattice_points(P((0, 0), (2, 0), (0, 2), (2, 2))).points == ((1, 1),)
    # relative interior for lower-dimensional polytopes
    assert interior_lattice_points(seg((0,), (3,))).points == ((1,), (2,))
    assert interior_lattice_points(P((5, 7))).points == ((5, 7),)


def test_translate_moves_lattice_points(unit_square):
    moved = translate(unit_square, (2, -1))
    assert moved.vertices == ((2, -1), (2, 0), (3, -1), (3, 0))
    assert len(lattice_points(moved).points) == 4


# ---------------------------------------------------------------------------
# Minkowski and Cayley sums


def test_minkowski_sum_of_two_segments():
    M = minkowski_sum([P((0, 0), (1, 2)), P((0, 0), (1, 0))])
    assert M.vertices == ((0, 0), (1, 0), (1, 2), (2, 2))


def test_minkowski_sum_order_independent():
    parts = [P((0, 0), (1, 2)), P((0, 0), (1, 0)), P((0, 0), (0, 1))]
    M = minkowski_sum(parts)
    assert minkowski_sum(parts[::-1]) == M
    assert minkowski_sum([parts[1], parts[2], parts[0]]) == M


def test_minkowski_sum_dim_mismatch():
    with pytest.raises(DimensionMismatch):
        minkowski_sum([P((0, 0), (1, 0)), P((0,), (1,))])


def test_cayley_sum_of_two_segments_heights_leading():
    C = cayley_sum([P((1, 0), (0, 1)), P((1, 1), (-1, -1))])
    assert C.ambient_dim == 4
    assert C.dim == 3
    assert C.vertices == ((0, 1, -1, -1), (0, 1, 1, 1), (1, 0, 0, 1), (1, 0, 1, 0))
    # the height block is pinned to the standard basis
    assert Hyperplane(normal=(1, 1, 0, 0), offset=1) in C.desc.equalities


def test_cayley_sum_example_pair():
    C = cayley_sum([P((0, 0), (1, 2)), P((0, 0), (1, 0))])
    assert C.vertices == ((0, 1, 0, 0), (0, 1, 1, 0), (1, 0, 0, 0), (1, 0, 1, 2))


def test_cayley_sum_lattice_points_are_factor_points():
    Ps = [P((0, 0), (2, 0)), P((0, 0), (0, 2)), P((1, 1))]
    C = cayley_sum(Ps)
    pts = lattice_points(C).points
    assert len(pts) == sum(len(lattice_points(Q).points) for Q in Ps)
    m = len(Ps)
    for p in pts:
        heights = p[:m]
        assert sorted(heights) == [0] * (m - 1) + [1]
        i = heights.index(1)
        assert p[m:] in lattice_points(Ps[i]).points


def test_dilate():
    T = P((0, 0), (1, 0), (0, 1))
    assert dilate(T, 1) == T
    assert dilate(T, 3).vertices == ((0, 0), (0, 3), (3, 0))
    assert dilate(T, 0).vertices == ((0, 0),)
    with pytest.raises(GeometryError):
        dilate(T, -1)


def test_cayley_slice_counts_the_extra_point():
    Ps = [P((0, 0), (1, 2)), P((0, 0), (1, 0))]
    sl = cayley_slice(Ps, (1, 1))
    assert len(sl.points) == 5
    projections = {p[2:] for p in sl.points}
    assert all(p[:2] == (1, 1) for p in sl.points)
    assert projections == {(0, 0), (1, 0), (1, 1), (1, 2), (2, 2)}


def test_cayley_slice_zero_heights_allowed():
    Ps = [P((0, 0), (1, 0)), P((0, 0), (0, 1))]
    sl = cayley_slice(Ps, (2, 0))
    assert {p[2:] for p in sl.points} == {(0, 0), (1, 0), (2, 0)}


# ---------------------------------------------------------------------------
# edges and normal fans


def test_edges_unit_square(unit_square):
    es = edges(unit_square)
    assert len(es) == 4
    assert all(e.lattice_length == 1 for e in es)


def test_edge_lattice_length_is_gcd():
    e, = edges(P((0, 0), (2, 4)))
    assert e.lattice_length == 2
    assert edges(P((1, 1)))== []


def test_normal_fan_coarsens_for_summands():
    Q = P((0, 0), (1, 0), (0, 1))
    R = P((0, 0), (1, 0), (1, 1), (0, 1))
    S = minkowski_sum([Q, R])
    assert normal_fan_coarsens(S, Q)
    assert normal_fan_coarsens(S, R)
    assert not normal_fan_coarsens(Q, R)


def test_normal_fan_coarsens_requires_full_dim():
    with pytest.raises(GeometryError):
        normal_fan_coarsens(P((0, 0), (1, 0)), P((0, 0), (1, 0), (0, 1)))


# ---------------------------------------------------------------------------
# randomized structure

ipoint = st.tuples(st.integers(-3, 3), st.integers(-3, 3))


@settings(max_examples=30, deadline=None)
@given(st.lists(ipoint, min_size=1, max_size=5), st.lists(ipoint, min_size=1, max_size=5))
def test_minkowski_vertices_are_pairwise_sums(pa, pb):
    A, B = from_vertices(pa), from_vertices(pb)
    M = minkowski_sum([A, B])
    sums = {tuple(x + y for x, y in zip(u, v)) for u in A.vertices for v in B.vertices}
    assert set(M.vertices) <= sums


@settings(max_examples=30, deadline=None)
@given(st.lists(ipoint, min_size=1, max_size=6), ipoint)
def test_translation_preserves_counts(pts, shift):
    A = from_vertices(pts)
    B = translate(A, shift)
    assert len(lattice_points(A).points) == len(lattice_points(B).points)
    assert len(interior_lattice_points(A).points) == len(interior_lattice_points(B).points)
    assert A.dim == B.dim
