"""Lattice polytopes and their combinatorial operations.

A lattice polytope is stored by its canonical dual description, so structural
equality decides set equality.  Dilates and translates are constructed by
rescaling the description directly; Minkowski and Cayley sums go through the
convex hull.  Integer-point enumeration scans the coordinate bounding box with
Fourier-Motzkin interval pruning and re-verifies every candidate against the
full facet/equality system, so the pruning only ever speeds things up.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .geometry import (
    DimensionMismatch,
    DualDescription,
    GeometryError,
    Hyperplane,
    IntVec,
    Mode,
    Scalar,
    Vec,
    contains,
    convex_hull,
    dot,
    is_integer_vec,
    norm_scalar,
    primitive,
    vec_add,
)


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of finitely many integer points, in canonical form."""

    desc: DualDescription

    def __post_init__(self) -> None:
        if not self.desc.is_lattice:
            raise GeometryError("lattice polytope vertices must be integral")

    @property
    def ambient_dim(self) -> int:
        return self.desc.ambient_dim

    @property
    def dim(self) -> int:
        return self.desc.dim

    @property
    def vertices(self) -> tuple[IntVec, ...]:
        return tuple(tuple(int(x) for x in v) for v in self.desc.vertices)

    def __repr__(self) -> str:  # keep reprs short in test output
        return f"LatticePolytope(dim={self.dim}, vertices={self.vertices})"


@dataclass(frozen=True)
class PointSet:
    """Deduplicated, lexicographically sorted finite set of lattice points."""

    ambient_dim: int
    points: tuple[IntVec, ...]

    def __post_init__(self) -> None:
        pts = tuple(sorted({tuple(int(x) for x in p) for p in self.points}))
        if any(len(p) != self.ambient_dim for p in pts):
            raise DimensionMismatch("point length disagrees with ambient_dim")
        object.__setattr__(self, "points", pts)

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p) -> bool:
        return tuple(p) in set(self.points)


@dataclass(frozen=True)
class Edge:
    """A 1-face; lattice_length is the number of lattice segments it spans."""

    endpoints: tuple[IntVec, IntVec]
    lattice_length: int


def from_vertices(points) -> LatticePolytope:
    """Canonical lattice polytope from any finite set of integer points."""
    pts = [tuple(p) for p in points]
    if not pts:
        raise GeometryError("empty point set")
    for p in pts:
        if not is_integer_vec(p):
            raise GeometryError(f"non-integer vertex {p!r}")
    pts = [tuple(int(x) for x in p) for p in pts]
    return LatticePolytope(convex_hull(pts))


def translate(P: LatticePolytope, v) -> LatticePolytope:
    """Shift by an integer vector; canonical form is preserved."""
    v = tuple(int(x) for x in v)
    if len(v) != P.ambient_dim:
        raise GeometryError("translation vector has wrong length")
    d = P.desc
    verts = tuple(vec_add(p, v) for p in d.vertices)
    facets = tuple((n, norm_scalar(c + dot(n, v))) for n, c in d.facets)
    eqs = tuple(Hyperplane(h.normal, norm_scalar(h.offset + dot(h.normal, v))) for h in d.equalities)
    return LatticePolytope(DualDescription(d.ambient_dim, d.dim, verts, facets, eqs))


def dilate(P: LatticePolytope, factor: int) -> LatticePolytope:
    """The dilate factor*P; factor 0 collapses to the origin point."""
    if not isinstance(factor, int) or factor < 0:
        raise GeometryError(f"dilation factor must be a nonnegative integer, got {factor!r}")
    if factor == 0:
        return from_vertices([(0,) * P.ambient_dim])
    if factor == 1:
        return P
    d = P.desc
    verts = tuple(tuple(x * factor for x in v) for v in d.vertices)
    facets = tuple((n, c * factor) for n, c in d.facets)
    eqs = tuple(Hyperplane(h.normal, h.offset * factor) for h in d.equalities)
    return LatticePolytope(DualDescription(d.ambient_dim, d.dim, verts, facets, eqs))


def minkowski_sum(polytopes) -> LatticePolytope:
    """Minkowski sum of a nonempty list, via the hull of vertex sums."""
    Ps = list(polytopes)
    if not Ps:
        raise GeometryError("minkowski_sum needs at least one polytope")
    n = Ps[0].ambient_dim
    if any(P.ambient_dim != n for P in Ps):
        raise DimensionMismatch("minkowski_sum factors must share an ambient dimension")
    sums = [(0,) * n]
    for P in Ps:
        sums = [vec_add(s, v) for s in sums for v in P.vertices]
    return from_vertices(sums)


def cayley_sum(polytopes) -> LatticePolytope:
    """Join the factors at unit heights in m extra leading coordinates.

    Factor i is embedded at height e_i, so the result lives in dimension
    m + N and its lattice points at height e_i are {e_i} x (P_i cap Z^N).
    """
    Ps = list(polytopes)
    if not Ps:
        raise GeometryError("cayley_sum needs at least one polytope")
    n = Ps[0].ambient_dim
    if any(P.ambient_dim != n for P in Ps):
        raise DimensionMismatch("cayley_sum factors must share an ambient dimension")
    m = len(Ps)
    pts = []
    for i, P in enumerate(Ps):
        height = tuple(1 if j == i else 0 for j in range(m))
        for v in P.vertices:
            pts.append(height + v)
    return from_vertices(pts)


# ---------------------------------------------------------------------------
# integer point enumeration


def _floor_div(p: int, q: int) -> int:
    return p // q


def _ceil_div(p: int, q: int) -> int:
    return -((-p) // q)


def _reduce_row(coeffs: list[int], rhs: int) -> tuple[IntVec, int] | None:
    g = math.gcd(*coeffs, rhs) if any(coeffs) or rhs else 0
    if g == 0:
        return None
    if not any(coeffs):
        return None  # 0 <= rhs rows carry no bound; infeasible rows caught at leaves
    g = math.gcd(*(abs(c) for c in coeffs if c), abs(rhs)) if rhs else math.gcd(*(abs(c) for c in coeffs if c))
    return tuple(c // g for c in coeffs), rhs // g


def _fm_levels(rows: list[tuple[IntVec, int]], n: int, cap: int = 400) -> list[list[tuple[IntVec, int]]]:
    """levels[k] = inequality rows with support in coordinates 0..k.

    Built by eliminating the trailing coordinate with Fourier-Motzkin.  The row
    count per level is capped; dropped rows only loosen the interval pruning.
    """
    levels: list[list[tuple[IntVec, int]]] = [[] for _ in range(n)]
    cur = []
    for coeffs, rhs in rows:
        red = _reduce_row(list(coeffs), rhs)
        if red is not None:
            cur.append(red)
    for k in range(n - 1, -1, -1):
        levels[k] = [r for r in cur if r[0][k] != 0]
        if k == 0:
            break
        passthrough = [r for r in cur if r[0][k] == 0]
        pos = [r for r in cur if r[0][k] > 0]
        neg = [r for r in cur if r[0][k] < 0]
        combined: dict[tuple[IntVec, int], None] = {}
        for (a, c1) in pos:
            for (b, c2) in neg:
                p, q = a[k], -b[k]
                coeffs = [q * x + p * y for x, y in zip(a, b)]
                red = _reduce_row(coeffs, q * c1 + p * c2)
                if red is not None:
                    combined[red] = None
        nxt = passthrough + sorted(combined)
        if len(nxt) > cap:
            nxt = nxt[:cap]
        cur = nxt
    return levels


def _integer_points(desc: DualDescription, strict: bool) -> list[IntVec]:
    n = desc.ambient_dim
    lo_box = [math.ceil(min(v[i] for v in desc.vertices)) for i in range(n)]
    hi_box = [math.floor(max(v[i] for v in desc.vertices)) for i in range(n)]
    if any(lo > hi for lo, hi in zip(lo_box, hi_box)):
        return []
    rows: list[tuple[IntVec, int]] = []
    for normal, c in desc.facets:
        cf = Fraction(c)
        scale = cf.denominator
        rows.append((tuple(x * scale for x in normal), int(cf * scale)))
    for h in desc.equalities:
        cf = Fraction(h.offset)
        scale = cf.denominator
        nn = tuple(x * scale for x in h.normal)
        cc = int(cf * scale)
        rows.append((nn, cc))
        rows.append((tuple(-x for x in nn), -cc))
    levels = _fm_levels(rows, n) if n > 0 else []
    out: list[IntVec] = []
    prefix = [0] * n

    def leaf_ok() -> bool:
        p = tuple(prefix)
        for h in desc.equalities:
            if dot(h.normal, p) != h.offset:
                return False
        for normal, c in desc.facets:
            v = dot(normal, p)
            if (v >= c if strict else v > c):
                return False
        return True

    def rec(j: int) -> None:
        if j == n:
            if leaf_ok():
                out.append(tuple(prefix))
            return
        lo, hi = lo_box[j], hi_box[j]
        for coeffs, rhs in levels[j]:
            acc = rhs - sum(coeffs[i] * prefix[i] for i in range(j))
            cj = coeffs[j]
            if cj > 0:
                hi = min(hi, _floor_div(acc, cj))
            else:
                lo = max(lo, _ceil_div(acc, cj))
            if lo > hi:
                return
        for x in range(lo, hi + 1):
            prefix[j] = x
            rec(j + 1)

    rec(0)
    return out


@lru_cache(maxsize=512)
def lattice_points(P: LatticePolytope) -> PointSet:
    """All integer points of P (exactly those accepted by closed containment)."""
    return PointSet(P.ambient_dim, tuple(_integer_points(P.desc, strict=False)))


@lru_cache(maxsize=512)
def interior_lattice_points(P: LatticePolytope) -> PointSet:
    """Integer points in the relative interior of P."""
    return PointSet(P.ambient_dim, tuple(_integer_points(P.desc, strict=True)))


# ---------------------------------------------------------------------------
# edges, Cayley slices, normal fans


def edges(P: LatticePolytope) -> list[Edge]:
    """The 1-faces with their lattice lengths; a 0-dimensional polytope has none."""
    if P.dim == 0:
        return []
    verts = P.vertices
    d = P.desc
    masks = []
    for v in verts:
        m = 0
        for k, (normal, c) in enumerate(d.facets):
            if dot(normal, v) == c:
                m |= 1 << k
        masks.append(m)
    out = []
    nv = len(verts)
    for i, j in combinations(range(nv), 2):
        t = masks[i] & masks[j]
        if any(k != i and k != j and (masks[k] & t) == t for k in range(nv)):
            continue
        diff = [abs(a - b) for a, b in zip(verts[i], verts[j])]
        out.append(Edge((verts[i], verts[j]), math.gcd(*diff)))
    return sorted(out, key=lambda e: e.endpoints)


def cayley_slice(polytopes, heights) -> PointSet:
    """Lattice points of (sum a_i)-dilated Cayley sum whose leading block equals a.

    Computed directly from the Cayley polytope, not from the individual
    factors, so it can serve as the left side of slice-decomposition checks.
    """
    Ps = list(polytopes)
    a = tuple(int(x) for x in heights)
    if len(a) != len(Ps):
        raise GeometryError("need one height per Cayley factor")
    if any(x < 0 for x in a):
        raise GeometryError("heights must be nonnegative")
    total = sum(a)
    C = dilate(cayley_sum(Ps), total)
    m = len(Ps)
    pts = [p for p in lattice_points(C) if p[:m] == a]
    return PointSet(C.ambient_dim, tuple(pts))


def normal_fan_coarsens(P: LatticePolytope, Q: LatticePolytope) -> bool:
    """True iff every vertex normal cone of P sits inside one vertex cone of Q.

    Both polytopes must be full-dimensional.  Exact test: for each vertex v of
    P, the sum of its tight facet normals is an interior ray of its cone; the
    unique Q-vertex maximizing that ray must then maximize every tight normal
    of v.  Ties mean the ray lies on a wall of Q's fan, so the cone straddles.
    """
    n = P.ambient_dim
    if Q.ambient_dim != n:
        raise DimensionMismatch("polytopes must share an ambient dimension")
    if P.dim != n or Q.dim != n:
        raise GeometryError("normal_fan_coarsens requires full-dimensional polytopes")
    qverts = Q.vertices
    for v in P.vertices:
        gens = [normal for normal, c in P.desc.facets if dot(normal, v) == c]
        ray = tuple(sum(g[i] for g in gens) for i in range(n))
        vals = [dot(ray, q) for q in qverts]
        mx = max(vals)
        if vals.count(mx) != 1:
            return False
        u = qverts[vals.index(mx)]
        for g in gens:
            gu = dot(g, u)
            if any(dot(g, q) > gu for q in qverts):
                return False
    return True
