"""Exact rational linear algebra and convex geometry in small dimensions.

Coordinates are Python ints or ``fractions.Fraction``; nothing here touches
floating point, so every predicate is a decision, not an estimate.  All public
objects are immutable and all functions are pure, so they are safe to call
concurrently.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations

Scalar = int | Fraction
Vec = tuple[Scalar, ...]
IntVec = tuple[int, ...]
# A facet is (outward primitive integer normal n, offset c) meaning n.x <= c.
Facet = tuple[IntVec, Scalar]

DEFAULT_CELL_BUDGET = 10**6
CELL_BUDGET_ENV = "LATCAYLEY_CELL_BUDGET"


class GeometryError(ValueError):
    pass


class DimensionMismatch(GeometryError):
    pass


class CellBudgetExceeded(RuntimeError):
    """An arrangement or covering computation outgrew the configured budget."""


class Mode(Enum):
    CLOSED = "closed"
    RELATIVE_INTERIOR = "relative_interior"


def cell_budget() -> int:
    raw = os.environ.get(CELL_BUDGET_ENV)
    if raw is None:
        return DEFAULT_CELL_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise GeometryError(f"{CELL_BUDGET_ENV} must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise GeometryError(f"{CELL_BUDGET_ENV} must be positive, got {value}")
    return value


# ---------------------------------------------------------------------------
# scalar and vector helpers


def norm_scalar(x: Scalar) -> Scalar:
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def as_fraction(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def dot(a: Vec, b: Vec) -> Scalar:
    return sum(x * y for x, y in zip(a, b))


def vec_add(a: Vec, b: Vec) -> Vec:
    return tuple(norm_scalar(x + y) for x, y in zip(a, b))


def vec_sub(a: Vec, b: Vec) -> Vec:
    return tuple(norm_scalar(x - y) for x, y in zip(a, b))


def vec_scale(c: Scalar, a: Vec) -> Vec:
    return tuple(norm_scalar(c * x) for x in a)


def is_integer_vec(v: Vec) -> bool:
    return all(isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1) for x in v)


def primitive(v: Vec) -> IntVec:
    """Scale a nonzero rational vector to a primitive integer vector (sign kept)."""
    denom = math.lcm(*(as_fraction(x).denominator for x in v))
    ints = [int(x * denom) for x in v]
    g = math.gcd(*ints)
    if g == 0:
        raise GeometryError("zero vector has no primitive form")
    return tuple(x // g for x in ints)


def _lex_sign(v: IntVec) -> int:
    for x in v:
        if x:
            return 1 if x > 0 else -1
    return 0


# ---------------------------------------------------------------------------
# exact Gaussian elimination


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals; returns (rows, pivot columns)."""
    mat = [list(map(as_fraction, r)) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[: len(pivots)], pivots


def rank(rows: list[Vec]) -> int:
    return len(rref([list(r) for r in rows])[1])


def nullspace(rows: list[Vec], ncols: int) -> list[IntVec]:
    """Canonical primitive integer basis of {v : row . v = 0 for all rows}."""
    red, pivots = rref([list(r) for r in rows])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        w = primitive(tuple(v))
        if _lex_sign(w) < 0:
            w = tuple(-x for x in w)
        basis.append(w)
    return basis


# ---------------------------------------------------------------------------
# core types


@dataclass(frozen=True)
class Hyperplane:
    """Affine hyperplane {x : normal . x = offset} with primitive integer normal.

    Canonical form: gcd of the normal entries is 1 and the first nonzero entry
    is positive, so structural equality decides geometric equality.
    """

    normal: IntVec
    offset: Scalar

    def __post_init__(self) -> None:
        n = tuple(self.normal)
        if not n or all(x == 0 for x in n):
            raise GeometryError("hyperplane normal must be nonzero")
        if any(not isinstance(x, int) for x in n):
            raise GeometryError("hyperplane normal must be integral")
        if math.gcd(*n) != 1:
            raise GeometryError("hyperplane normal must be primitive")
        if _lex_sign(n) < 0:
            raise GeometryError("hyperplane normal must have positive leading entry")
        object.__setattr__(self, "normal", n)
        object.__setattr__(self, "offset", norm_scalar(self.offset))

    @classmethod
    def through(cls, normal: Vec, offset: Scalar) -> "Hyperplane":
        """Canonicalize an arbitrary rational (normal, offset) pair."""
        prim = primitive(normal)
        # scale factor prim = s * normal with s > 0
        idx = next(i for i, x in enumerate(prim) if x)
        s = Fraction(prim[idx], 1) / as_fraction(normal[idx])
        off = as_fraction(offset) * s
        if _lex_sign(prim) < 0:
            prim = tuple(-x for x in prim)
            off = -off
        return cls(prim, norm_scalar(off))

    def value(self, x: Vec) -> Scalar:
        return norm_scalar(dot(self.normal, x) - self.offset)

    def side(self, x: Vec) -> int:
        v = self.value(x)
        return 0 if v == 0 else (1 if v > 0 else -1)


@dataclass(frozen=True)
class DualDescription:
    """Canonical vertex + facet + affine-hull description of a bounded polytope.

    Invariants: vertices are lexicographically sorted and irredundant; facet
    normals are primitive integers lying in the direction space of the affine
    hull and point outward; equalities are the canonical (RREF-derived) cutting
    hyperplanes of the affine hull; dim + len(equalities) == ambient_dim.
    Structural equality therefore decides equality of the underlying sets.
    """

    ambient_dim: int
    dim: int
    vertices: tuple[Vec, ...]
    facets: tuple[Facet, ...]
    equalities: tuple[Hyperplane, ...]

    def __post_init__(self) -> None:
        verts = tuple(tuple(norm_scalar(x) for x in v) for v in self.vertices)
        facets = tuple((tuple(n), norm_scalar(c)) for n, c in self.facets)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "facets", facets)
        if not verts:
            raise GeometryError("a polytope needs at least one vertex")
        if any(len(v) != self.ambient_dim for v in verts):
            raise DimensionMismatch("vertex length disagrees with ambient_dim")
        if self.dim + len(self.equalities) != self.ambient_dim:
            raise GeometryError("dim + number of equalities must equal ambient_dim")

    @property
    def is_lattice(self) -> bool:
        return all(is_integer_vec(v) for v in self.vertices)

    def barycenter(self) -> Vec:
        k = len(self.vertices)
        return tuple(
            norm_scalar(Fraction(sum(v[i] for v in self.vertices), k))
            for i in range(self.ambient_dim)
        )


# ---------------------------------------------------------------------------
# affine hulls and convex hulls


def _validate_points(points) -> list[Vec]:
    pts = [tuple(p) for p in points]
    if not pts:
        raise GeometryError("empty point set")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise DimensionMismatch("points have mixed ambient dimensions")
    return pts


def affine_hull(points) -> tuple[int, tuple[Hyperplane, ...]]:
    """Dimension and canonical cutting hyperplanes of the affine hull.

    The equalities come from the RREF of the orthogonal complement of the
    direction space, so the same affine subspace always yields the same tuple
    regardless of input order or redundancy.
    """
    pts = _validate_points(points)
    n = len(pts[0])
    base = pts[0]
    diffs = [vec_sub(p, base) for p in pts[1:]]
    red, pivots = rref([list(d) for d in diffs])
    dim = len(pivots)
    normals = nullspace([tuple(r) for r in red] if red else [], n)
    if not normals:
        return dim, ()
    rows = [[as_fraction(x) for x in a] + [as_fraction(dot(a, base))] for a in normals]
    red2, _ = rref(rows)
    eqs = []
    for row in red2:
        h = Hyperplane.through(tuple(row[:n]), row[n])
        eqs.append(h)
    eqs.sort(key=lambda h: (h.normal, as_fraction(h.offset)))
    return dim, tuple(eqs)


def dimension(points) -> int:
    """Affine dimension of a finite rational point set."""
    return affine_hull(points)[0]


def _hull_2d(pts: list[Vec]) -> tuple[list[Vec], list[Facet]]:
    """Monotone chain for full-dimensional point sets in the plane."""

    def cross(o: Vec, a: Vec, b: Vec) -> Scalar:
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    spts = sorted(set(pts))
    lower: list[Vec] = []
    for p in spts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Vec] = []
    for p in reversed(spts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    cycle = lower[:-1] + upper[:-1]  # counterclockwise
    facets: list[Facet] = []
    for v, w in zip(cycle, cycle[1:] + cycle[:1]):
        d = vec_sub(w, v)
        normal = primitive((d[1], -d[0]))
        facets.append((normal, norm_scalar(dot(normal, v))))
    return cycle, facets


def _brute_facets(
    cand: list[Vec], dim: int, eq_normals: list[IntVec], n: int
) -> list[Facet]:
    facets: dict[Facet, None] = {}
    eq_rows = [tuple(map(Fraction, e)) for e in eq_normals]
    for subset in combinations(range(len(cand)), dim):
        s0 = cand[subset[0]]
        rows: list[Vec] = [vec_sub(cand[i], s0) for i in subset[1:]]
        rows.extend(eq_rows)
        ns = nullspace(rows, n)
        if len(ns) != 1:
            continue
        u = ns[0]
        vals = [dot(u, p) for p in cand]
        c0 = dot(u, s0)
        mx, mn = max(vals), min(vals)
        if c0 == mx and mx > mn:
            facets[(u, norm_scalar(c0))] = None
        elif c0 == mn and mx > mn:
            facets[(tuple(-x for x in u), norm_scalar(-c0))] = None
    return list(facets)


def convex_hull(points) -> DualDescription:
    """Canonical dual description of the convex hull of finitely many points.

    Facet normals are chosen inside the direction space of the affine hull
    (orthogonal to every equality normal), which makes them unique up to the
    primitive-outward normalization.
    """
    pts = _validate_points(points)
    n = len(pts[0])
    cand = sorted(set(pts))
    dim, eqs = affine_hull(cand)
    if dim == 0:
        return DualDescription(n, 0, (cand[0],), (), eqs)
    if n == 2 and dim == 2:
        cycle, facets = _hull_2d(cand)
        verts = tuple(sorted(cycle))
        return DualDescription(n, 2, verts, tuple(sorted(facets)), eqs)
    eq_normals = [h.normal for h in eqs]
    facets = _brute_facets(cand, dim, eq_normals, n)
    verts = []
    for p in cand:
        tight: list[Vec] = [normal for normal, c in facets if dot(normal, p) == c]
        tight.extend(eq_normals)
        if rank(tight) == n:
            verts.append(p)
    return DualDescription(n, dim, tuple(sorted(verts)), tuple(sorted(facets)), eqs)


def contains(desc: DualDescription, x: Vec, mode: Mode = Mode.CLOSED) -> bool:
    """Exact membership test; RelativeInterior of a point is that point."""
    if len(x) != desc.ambient_dim:
        raise DimensionMismatch(
            f"point has length {len(x)}, polytope lives in dimension {desc.ambient_dim}"
        )
    for h in desc.equalities:
        if dot(h.normal, x) != h.offset:
            return False
    if mode is Mode.CLOSED:
        return all(dot(normal, x) <= c for normal, c in desc.facets)
    return all(dot(normal, x) < c for normal, c in desc.facets)


# ---------------------------------------------------------------------------
# hyperplane arrangements: subdivision pieces, faces, samples


@dataclass(frozen=True)
class _Piece:
    """A closed polytope produced by cutting; constraints may be redundant."""

    vertices: tuple[Vec, ...]
    constraints: tuple[Facet, ...]


def _tight_masks(verts: tuple[Vec, ...], cons: tuple[Facet, ...]) -> list[int]:
    masks = []
    for v in verts:
        m = 0
        for k, (normal, c) in enumerate(cons):
            if dot(normal, v) == c:
                m |= 1 << k
        masks.append(m)
    return masks


def _piece_edges(verts: tuple[Vec, ...], masks: list[int]) -> list[tuple[int, int]]:
    # (i, j) spans an edge iff no third vertex is tight on every constraint
    # common to i and j; redundant constraints cannot break this test.
    edges = []
    nv = len(verts)
    for i, j in combinations(range(nv), 2):
        t = masks[i] & masks[j]
        if not any(k != i and k != j and (masks[k] & t) == t for k in range(nv)):
            edges.append((i, j))
    return edges


def _cut_piece(piece: _Piece, normal: IntVec, offset: Scalar) -> tuple[_Piece | None, _Piece | None]:
    """Split a piece along normal.x = offset into (<= side, >= side)."""
    vals = [norm_scalar(dot(normal, v) - offset) for v in piece.vertices]
    if all(v >= 0 for v in vals):
        return None, piece
    if all(v <= 0 for v in vals):
        return piece, None
    masks = _tight_masks(piece.vertices, piece.constraints)
    crossings: list[Vec] = []
    for i, j in _piece_edges(piece.vertices, masks):
        vi, vj = vals[i], vals[j]
        if (vi > 0 > vj) or (vi < 0 < vj):
            t = as_fraction(vi) / (as_fraction(vi) - as_fraction(vj))
            a, b = piece.vertices[i], piece.vertices[j]
            crossings.append(vec_add(a, vec_scale(t, vec_sub(b, a))))
    neg = tuple(sorted({v for v, val in zip(piece.vertices, vals) if val <= 0} | set(crossings)))
    pos = tuple(sorted({v for v, val in zip(piece.vertices, vals) if val >= 0} | set(crossings)))
    neg_cons = piece.constraints + ((normal, norm_scalar(offset)),)
    pos_cons = piece.constraints + ((tuple(-x for x in normal), norm_scalar(-offset)),)
    return _Piece(neg, neg_cons), _Piece(pos, pos_cons)


def _faces(piece: _Piece) -> list[frozenset[int]]:
    """All nonempty faces of a piece as vertex-index sets (the piece included)."""
    masks = _tight_masks(piece.vertices, piece.constraints)
    top = frozenset(range(len(piece.vertices)))
    seen = {top}
    queue = [top]
    out = [top]
    ncons = len(piece.constraints)
    while queue:
        face = queue.pop()
        for k in range(ncons):
            child = frozenset(i for i in face if masks[i] & (1 << k))
            if child and child != face and child not in seen:
                seen.add(child)
                queue.append(child)
                out.append(child)
    return out


def _face_barycenter(piece: _Piece, face: frozenset[int]) -> Vec:
    k = len(face)
    return tuple(
        norm_scalar(Fraction(sum(as_fraction(piece.vertices[i][c]) for i in face), 1) / k)
        for c in range(len(piece.vertices[0]))
    )


def _subdivide(within: DualDescription, hyperplanes) -> list[_Piece]:
    pieces = [_Piece(within.vertices, within.facets)]
    for h in hyperplanes:
        nxt: list[_Piece] = []
        for piece in pieces:
            neg, pos = _cut_piece(piece, h.normal, h.offset)
            if neg is not None:
                nxt.append(neg)
            if pos is not None:
                nxt.append(pos)
        pieces = nxt
    return pieces


def arrangement_sample_points(hyperplanes, within: DualDescription) -> list[Vec]:
    """One exact rational sample in the relative interior of every cell.

    The cells are those of the arrangement of ``hyperplanes`` restricted to the
    bounded polytope ``within``, refined by the faces of ``within`` itself.  The
    polytope is subdivided into full-dimensional pieces; each cell of any
    dimension is the relative interior of exactly one face of some piece, and
    the vertex barycenter of that face is its sample.  Samples are deduplicated
    (a sample lies in its own cell, so equal samples mean equal cells) and
    returned lexicographically sorted.

    Raises CellBudgetExceeded when the subdivision outgrows the configured
    budget (LATCAYLEY_CELL_BUDGET, default 10**6 cells).
    """
    if not within.vertices:
        raise GeometryError("within must be a bounded nonempty polytope")
    planes: dict[Hyperplane, None] = {}
    for h in hyperplanes:
        if len(h.normal) != within.ambient_dim:
            raise DimensionMismatch("hyperplane ambient dimension disagrees with within")
        planes[h] = None
    budget = cell_budget()
    pieces = [_Piece(within.vertices, within.facets)]
    for h in planes:
        nxt: list[_Piece] = []
        for piece in pieces:
            neg, pos = _cut_piece(piece, h.normal, h.offset)
            if neg is not None:
                nxt.append(neg)
            if pos is not None:
                nxt.append(pos)
            if len(nxt) > budget:
                raise CellBudgetExceeded(
                    f"arrangement subdivision exceeded {budget} pieces; "
                    f"raise {CELL_BUDGET_ENV} to allow more"
                )
        pieces = nxt
    samples: dict[Vec, None] = {}
    seen_cells = 0
    for piece in pieces:
        for face in _faces(piece):
            seen_cells += 1
            if seen_cells > budget:
                raise CellBudgetExceeded(
                    f"arrangement produced more than {budget} candidate cells; "
                    f"raise {CELL_BUDGET_ENV} to allow more"
                )
            samples[_face_barycenter(piece, face)] = None
    return sorted(samples)
