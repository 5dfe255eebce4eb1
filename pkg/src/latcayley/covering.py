"""Exact deciders for covering a target polytope by lattice translates of a base.

Two independent decision routes are provided.  ``covers`` subtracts translates
from the target recursively: carving a translate out of a piece along its
facet halfspaces, one at a time, leaves closed branches whose union is exactly
the piece minus the translate's region, so the decision is exact in both the
closed and the relative-interior mode.  ``covers_by_sampling`` classifies one
sample per arrangement cell and is used to cross-check the subtraction route
on small inputs.

Witness convention: when the target region contains an uncovered lattice
point, the lexicographically smallest one is reported; otherwise an uncovered
piece barycenter found in deterministic subtraction order is used.  The
sampling route reports the lexicographically smallest uncovered sample.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .geometry import (
    CELL_BUDGET_ENV,
    CellBudgetExceeded,
    DimensionMismatch,
    DualDescription,
    Facet,
    GeometryError,
    Hyperplane,
    IntVec,
    Mode,
    Scalar,
    Vec,
    _cut_piece,
    _Piece,
    arrangement_sample_points,
    cell_budget,
    contains,
    dot,
    norm_scalar,
    rank,
    vec_sub,
)
from .polytope import (
    LatticePolytope,
    PointSet,
    dilate,
    interior_lattice_points,
    lattice_points,
)


@dataclass(frozen=True)
class CoverageQuery:
    target: LatticePolytope
    translate_base: LatticePolytope
    translations: PointSet
    mode: Mode

    def __post_init__(self) -> None:
        n = self.target.ambient_dim
        if self.translate_base.ambient_dim != n or self.translations.ambient_dim != n:
            raise DimensionMismatch("target, translate_base and translations must share an ambient dimension")
        if len(self.translations) == 0:
            raise GeometryError("translation set must be nonempty")


@dataclass(frozen=True)
class CoverageResult:
    covered: bool
    witness: Vec | None


# ---------------------------------------------------------------------------
# translate constraint systems


@dataclass(frozen=True)
class _Translate:
    """One translate of the base, with its constraints classified against the
    target: ``carve`` lists the facet inequalities that genuinely vary on the
    target, ``cutting`` the equalities that do.  Constraints constant on the
    target either eliminate the translate up front or impose nothing."""

    shift: IntVec
    carve: tuple[Facet, ...]
    cutting: tuple[Facet, ...]

    def contains_point(self, x: Vec, base: DualDescription, mode: Mode) -> bool:
        return contains(base, vec_sub(x, self.shift), mode)


def _constant_value(normal: IntVec, verts: tuple[Vec, ...]) -> Scalar | None:
    vals = {norm_scalar(dot(normal, v)) for v in verts}
    return vals.pop() if len(vals) == 1 else None


def _classify_translates(q: CoverageQuery) -> list[_Translate]:
    base = q.translate_base.desc
    tverts = q.target.desc.vertices
    relint = q.mode is Mode.RELATIVE_INTERIOR
    fconst = [_constant_value(normal, tverts) for normal, _ in base.facets]
    econst = [_constant_value(h.normal, tverts) for h in base.equalities]
    out = []
    for t in sorted(q.translations):
        carve: list[Facet] = []
        cutting: list[Facet] = []
        dead = False
        for (normal, c), val in zip(base.facets, fconst):
            off = norm_scalar(c + dot(normal, t))
            if val is None:
                carve.append((normal, off))
            elif val > off or (relint and val == off):
                # the normal is constant on the target, so the inequality
                # fails everywhere on it (or, open mode, is never strict)
                dead = True
                break
        if dead:
            continue
        for h, val in zip(base.equalities, econst):
            off = norm_scalar(h.offset + dot(h.normal, t))
            if val is None:
                cutting.append((h.normal, off))
            elif val != off:
                dead = True
                break
        if dead:
            continue
        if cutting and relint:
            raise GeometryError(
                "RelativeInterior covering needs every translate to span the "
                "target's affine hull or miss it entirely"
            )
        out.append(_Translate(t, tuple(carve), tuple(cutting)))
    return out


# ---------------------------------------------------------------------------
# the subtraction decider


def _piece_dim(piece: _Piece) -> int:
    base = piece.vertices[0]
    return rank([vec_sub(v, base) for v in piece.vertices[1:]])


def _barycenter(piece: _Piece) -> Vec:
    k = len(piece.vertices)
    n = len(piece.vertices[0])
    return tuple(
        norm_scalar(Fraction(sum(Fraction(v[i]) for v in piece.vertices), 1) / k)
        for i in range(n)
    )


def _carve_step(
    piece: _Piece, normal: IntVec, offset: Scalar, keep_tight: bool
) -> tuple[_Piece | None, _Piece | None]:
    """Like _cut_piece, but in tight-keeping mode a piece lying entirely on the
    <= side still yields its (lower-dimensional) slice on the hyperplane as the
    >= part.  Open-mode carving needs that slice: its points are outside the
    open region being subtracted."""
    neg, pos = _cut_piece(piece, normal, offset)
    if keep_tight and pos is None:
        tight = tuple(v for v in piece.vertices if dot(normal, v) == offset)
        if tight:
            # valid inequality on the piece, so the slice is the face spanned
            # by the tight vertices
            cons = piece.constraints + (
                (normal, norm_scalar(offset)),
                (tuple(-x for x in normal), norm_scalar(-offset)),
            )
            pos = _Piece(tight, cons)
    return neg, pos


def _subtract_branches(piece: _Piece, tr: _Translate, mode: Mode) -> list[_Piece]:
    """Carve the translate's region out of the piece.

    Closed mode: branch interiors are strictly outside the translate and the
    dropped remainder lies inside it.  A translate made thin by a cutting
    equality is handled by splitting along that equality; the thin covered set
    stays inside both branches but never strictly inside a full-dimensional
    one, which the closed-mode verdict tolerates (see covers).

    Relative-interior mode: the branch union is exactly the piece minus the
    open region, including slices flush against a facet hyperplane.
    """
    if tr.cutting:
        normal, c = tr.cutting[0]
        left, right = _cut_piece(piece, normal, c)
        return [p for p in (left, right) if p is not None]
    keep_tight = mode is Mode.RELATIVE_INTERIOR
    branches: list[_Piece] = []
    rest: _Piece | None = piece
    for normal, c in tr.carve:
        if rest is None:
            break
        kept, outside = _carve_step(rest, normal, c, keep_tight)
        if outside is not None:
            branches.append(outside)
        rest = kept
    return branches


def _on_target_boundary(piece: _Piece, target: DualDescription) -> bool:
    # a piece inside the target sits in the boundary iff a facet hyperplane
    # contains it, iff its barycenter (a relative interior point) does
    b = _barycenter(piece)
    return any(dot(normal, b) == c for normal, c in target.facets)


def _decide_by_subtraction(q: CoverageQuery) -> tuple[bool, Vec | None]:
    target = q.target.desc
    base = q.translate_base.desc
    translates = _classify_translates(q)
    budget = cell_budget()
    start = _Piece(target.vertices, target.facets)
    stack: list[tuple[_Piece, tuple[int, ...]]] = [(start, tuple(range(len(translates))))]
    processed = 0
    target_dim = target.dim
    closed = q.mode is Mode.CLOSED
    while stack:
        piece, remaining = stack.pop()
        processed += 1
        if processed > budget:
            raise CellBudgetExceeded(
                f"covering subtraction exceeded {budget} pieces; "
                f"raise {CELL_BUDGET_ENV} to allow more"
            )
        if closed and _piece_dim(piece) < target_dim:
            continue
        if not closed and _on_target_boundary(piece, target):
            continue
        b = _barycenter(piece)
        pick = None
        for idx in remaining:
            if translates[idx].contains_point(b, base, q.mode):
                pick = idx
                break
        if pick is None:
            return False, b
        rem = tuple(i for i in remaining if i != pick)
        for branch in reversed(_subtract_branches(piece, translates[pick], q.mode)):
            stack.append((branch, rem))
    return True, None


# ---------------------------------------------------------------------------
# public deciders


def _region_lattice_points(q: CoverageQuery) -> PointSet:
    if q.mode is Mode.CLOSED:
        return lattice_points(q.target)
    return interior_lattice_points(q.target)


def _lattice_witness(q: CoverageQuery) -> IntVec | None:
    base = q.translate_base.desc
    shifts = sorted(q.translations)
    for x in _region_lattice_points(q):
        if not any(contains(base, vec_sub(x, t), q.mode) for t in shifts):
            return x
    return None


def _verify_witness(q: CoverageQuery, w: Vec) -> None:
    assert contains(q.target.desc, w, q.mode), "witness fell outside the target region"
    for t in q.translations:
        assert not contains(q.translate_base.desc, vec_sub(w, t), q.mode), (
            f"witness {w} is covered by translate {t}"
        )


def covers(q: CoverageQuery) -> CoverageResult:
    """Decide whether the translates of translate_base cover the target region.

    Closed mode asks whether the target is a union of closed translates;
    RelativeInterior mode asks whether relint(target) is a union of open
    translates.  The verdict is exact.  Witnesses follow the lattice-first
    convention and are re-verified by direct membership before returning.
    """
    w = _lattice_witness(q)
    if w is not None:
        _verify_witness(q, w)
        return CoverageResult(False, w)
    covered, sample = _decide_by_subtraction(q)
    if covered:
        return CoverageResult(True, None)
    _verify_witness(q, sample)
    return CoverageResult(False, sample)


def covers_by_sampling(q: CoverageQuery) -> CoverageResult:
    """Arrangement-cell sampling decider (cross-check route).

    Every facet hyperplane of every translate is thrown into an arrangement
    restricted to the target; one sample per cell decides coverage, because
    membership in any translate, open or closed, is constant on each cell, and
    so is membership in the target region.  Refuses up front when the
    worst-case cell count exceeds the configured budget.
    """
    target = q.target.desc
    planes: dict[Hyperplane, None] = {}
    for tr in _classify_translates(q):
        for normal, c in tr.carve + tr.cutting:
            planes[Hyperplane.through(normal, c)] = None
    budget = cell_budget()
    k = len(planes) + len(target.facets)
    est = sum(math.comb(k, i) for i in range(min(target.dim, k) + 1))
    if est > budget:
        raise CellBudgetExceeded(
            f"arrangement of {k} hyperplanes admits up to {est} cells, over the "
            f"budget of {budget}; raise {CELL_BUDGET_ENV} to allow more"
        )
    samples = arrangement_sample_points(planes, target)
    base = q.translate_base.desc
    shifts = sorted(q.translations)
    uncovered = [
        s
        for s in samples
        if contains(target, s, q.mode)
        and not any(contains(base, vec_sub(s, t), q.mode) for t in shifts)
    ]
    if not uncovered:
        return CoverageResult(True, None)
    return CoverageResult(False, min(uncovered))


def is_2_convex_normal(P: LatticePolytope) -> CoverageResult:
    """Is 2P the union of the translates {t + P : t a lattice point of P}?"""
    pts = lattice_points(P)
    q = CoverageQuery(target=dilate(P, 2), translate_base=P, translations=pts, mode=Mode.CLOSED)
    return covers(q)


def has_interior_translate_cover(P: LatticePolytope) -> CoverageResult:
    """Is relint(2P) the union of the translates {t + relint(P)}?

    The reverse inclusion, every translate sitting inside relint(2P), is an
    identity; it is asserted on one relative interior sample per translate, not
    searched for.
    """
    pts = lattice_points(P)
    two = dilate(P, 2)
    center = P.desc.barycenter()
    for t in pts:
        shifted = tuple(norm_scalar(c + x) for c, x in zip(center, t))
        assert contains(two.desc, shifted, Mode.RELATIVE_INTERIOR), (
            "interior translate escaped relint(2P); this indicates a geometry bug"
        )
    q = CoverageQuery(target=two, translate_base=P, translations=pts, mode=Mode.RELATIVE_INTERIOR)
    return covers(q)
