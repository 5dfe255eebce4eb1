"""Randomized verification campaigns for the toolkit's structural results.

Each campaign id names one statement about Minkowski sums, Cayley sums,
coverings, or levelness; a campaign runs seeded random trials shaped to the
statement's hypotheses and records every conclusion that does not hold.  A
nonempty violation list is always loud: it means either a toolkit bug or a
genuine refutation, never noise.

Determinism: trial k of a campaign with seed s uses the derived seed
s * 1_000_003 + k, so reports are reproducible and independent of scheduling.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import __version__
from .covering import has_interior_translate_cover, is_2_convex_normal
from .generator import random_lattice_polytope
from .geometry import GeometryError
from .polytope import (
    LatticePolytope,
    PointSet,
    cayley_slice,
    cayley_sum,
    dilate,
    from_vertices,
    interior_lattice_points,
    lattice_points,
    minkowski_sum,
    normal_fan_coarsens,
)
from .properties import (
    PropertyReport,
    Verdict,
    is_gorenstein,
    is_idp,
    is_tuple_idp,
    level_index,
    level_status,
)

_SEED_STRIDE = 1_000_003


@dataclass(frozen=True)
class CampaignConfig:
    theorem_id: str
    trials: int
    seed: int
    dim_max: int = 3
    coord_bound: int = 4
    dilation_bound: int = 3
    horizon: int | None = None

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise GeometryError("trials must be at least 1")
        if not (1 <= self.dim_max <= 4):
            raise GeometryError("dim_max must be between 1 and 4")
        if self.coord_bound < 1 or self.dilation_bound < 1:
            raise GeometryError("bounds must be positive")


@dataclass(frozen=True)
class Violation:
    trial: int
    inputs: tuple[tuple[tuple[int, ...], ...], ...]
    note: str
    report: PropertyReport | None = None


@dataclass(frozen=True)
class CampaignReport:
    theorem_id: str
    trials_run: int
    violations: tuple[Violation, ...]
    config: CampaignConfig
    version: str = __version__
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "trials_run": self.trials_run,
            "violations": [
                {
                    "trial": v.trial,
                    "inputs": [[list(p) for p in poly] for poly in v.inputs],
                    "note": v.note,
                    "report": None
                    if v.report is None
                    else {
                        "property": v.report.property,
                        "verdict": v.report.verdict.value,
                        "witness": _jsonable(v.report.witness),
                        "degrees_checked": list(v.report.degrees_checked)
                        if v.report.degrees_checked
                        else None,
                        "horizon": v.report.horizon_used,
                    },
                }
                for v in self.violations
            ],
            "config": {
                "theorem_id": self.config.theorem_id,
                "trials": self.config.trials,
                "seed": self.config.seed,
                "dim_max": self.config.dim_max,
                "coord_bound": self.config.coord_bound,
                "dilation_bound": self.config.dilation_bound,
                "horizon": self.config.horizon,
            },
            "version": self.version,
            "notes": list(self.notes),
        }


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(e) for e in x]
    return x


# ---------------------------------------------------------------------------
# instance sampling


def _sub_seed(rng: random.Random) -> int:
    return rng.randrange(2**63)


def _shear2(P: LatticePolytope, rng: random.Random) -> LatticePolytope:
    """Random unimodular transform plus translation in ambient dimension 2.

    Preserves every lattice-equivalence-invariant property while varying the
    embedding, so axis-aligned samples gain generic directions.
    """
    a, b = rng.randint(-2, 2), rng.randint(-2, 2)
    tx, ty = rng.randint(-1, 1), rng.randint(-1, 1)
    out = []
    for x, y in P.vertices:
        x1 = x + a * y
        y1 = b * x1 + y
        out.append((x1 + tx, y1 + ty))
    return from_vertices(out)


def _poly2(rng: random.Random, dim: int, bound: int) -> LatticePolytope:
    """Random polytope in ambient dimension 2 with generic direction."""
    return _shear2(random_lattice_polytope(_sub_seed(rng), 2, dim, bound), rng)


def _poly(rng: random.Random, dim: int, bound: int) -> LatticePolytope:
    return random_lattice_polytope(_sub_seed(rng), dim, dim, bound)


def _level_horizon(P: LatticePolytope, config: CampaignConfig) -> int:
    if config.horizon is not None:
        return config.horizon
    return level_index(P).index_r + 2


def _certified_2cn(rng: random.Random, config: CampaignConfig) -> LatticePolytope | None:
    """A polytope the 2-convex-normality decider itself certifies.

    Small random polytopes rarely qualify, so a failing sample is retried as
    its dim-fold dilate; the certificate always comes from the decider, never
    from the dilation heuristic.
    """
    d = rng.randint(1, 2)
    P = _poly2(rng, d, min(config.coord_bound, 2))
    if is_2_convex_normal(P).covered:
        return P
    Q = dilate(P, max(1, P.dim))
    if is_2_convex_normal(Q).covered:
        return Q
    return None


def _certified_cond01(rng: random.Random, config: CampaignConfig) -> LatticePolytope | None:
    """A polytope certified by the interior-translate-cover decider, with
    interior lattice points."""
    d = rng.randint(1, 2)
    P = _poly2(rng, d, min(config.coord_bound, 2))
    for cand in (P, dilate(P, P.dim + 1)):
        if len(interior_lattice_points(cand)) and has_interior_translate_cover(cand).covered:
            return cand
    return None


def _verts(*Ps: LatticePolytope) -> tuple[tuple[tuple[int, ...], ...], ...]:
    return tuple(P.vertices for P in Ps)


# ---------------------------------------------------------------------------
# campaign runners (one trial each; append violations)


def _run_thm_0_1(rng, config, trial, out):
    d = rng.randint(1, min(config.dim_max, 3))
    bound = config.coord_bound if d <= 2 else min(config.coord_bound, 2)
    P = _poly(rng, d, bound)
    for n in sorted({max(1, d - 1), d}):
        rep = is_idp(dilate(P, n))
        if rep.verdict is not Verdict.HOLDS:
            out.append(Violation(trial, _verts(P), f"dilate by {n} not IDP", rep))
    if d <= 2:
        Q = dilate(P, d + 1)
        rep = level_status(Q, _level_horizon(Q, config))
        if level_index(Q).index_r != 1:
            out.append(Violation(trial, _verts(P), f"dilate by {d+1} has level index != 1"))
        if rep.verdict is Verdict.FAILS:
            out.append(Violation(trial, _verts(P), f"dilate by {d+1} not level", rep))


def _heights(m: int, total: int, positive: bool):
    """All integer height vectors of length m with sum between 1 and total."""
    lo = 1 if positive else 0
    def rec(i, left):
        if i == m:
            yield ()
            return
        for a in range(lo, left + 1):
            for rest in rec(i + 1, left - a):
                yield (a,) + rest
    for h in rec(0, total):
        if sum(h) >= 1:
            yield h


def _run_lemma_1_1(rng, config, trial, out):
    m = rng.randint(2, 3)
    Ps = [_poly2(rng, rng.randint(1, 2), min(config.coord_bound, 2)) for _ in range(m)]
    for a in _heights(m, config.dilation_bound, positive=False):
        got = cayley_slice(Ps, a)
        mink = minkowski_sum([dilate(P, ai) for P, ai in zip(Ps, a)])
        want = PointSet(got.ambient_dim, tuple(a + p for p in lattice_points(mink)))
        if got.points != want.points:
            out.append(Violation(trial, _verts(*Ps), f"slice mismatch at heights {a}"))


def _run_lemma_1_2(rng, config, trial, out):
    m = rng.randint(2, 3)
    Ps = [_poly2(rng, rng.randint(1, 2), min(config.coord_bound, 2)) for _ in range(m)]
    total = max(config.dilation_bound, m)
    C = cayley_sum(Ps)
    for a in _heights(m, total, positive=True):
        inner = interior_lattice_points(dilate(C, sum(a)))
        got = tuple(p for p in inner if p[:m] == a)
        mink = minkowski_sum([dilate(P, ai) for P, ai in zip(Ps, a)])
        want = tuple(a + p for p in interior_lattice_points(mink))
        if got != want:
            out.append(Violation(trial, _verts(*Ps), f"interior slice mismatch at heights {a}"))


def _tuple_idp_all_dilations(Ps, bound) -> PropertyReport | None:
    """First failing dilated-tuple report with coefficients in [0, bound]."""
    m = len(Ps)
    for a in _heights(m, m * bound, positive=False):
        if any(x > bound for x in a):
            continue
        Qs = [dilate(P, x) for P, x in zip(Ps, a) if x > 0]
        rep = is_tuple_idp(Qs)
        if rep.verdict is Verdict.FAILS:
            return rep
    return None


def _run_thm_0_4_equiv(rng, config, trial, out):
    Ps = [_poly2(rng, rng.randint(1, 2), min(config.coord_bound, 2)) for _ in range(2)]
    cay = is_idp(cayley_sum(Ps))
    singles_ok = all(is_idp(P).verdict is Verdict.HOLDS for P in Ps)
    dil_fail = _tuple_idp_all_dilations(Ps, config.dilation_bound) if singles_ok else None
    right = singles_ok and dil_fail is None
    left = cay.verdict is Verdict.HOLDS
    if left != right:
        out.append(
            Violation(
                trial,
                _verts(*Ps),
                f"Cayley IDP={left} but factor criterion={right} (coefficients <= "
                f"{config.dilation_bound})",
                cay if left else dil_fail,
            )
        )
    if left:
        for a in _heights(2, 2 * config.dilation_bound, positive=False):
            if any(x > config.dilation_bound for x in a):
                continue
            rep = is_idp(minkowski_sum([dilate(P, x) for P, x in zip(Ps, a) if x > 0]))
            if rep.verdict is not Verdict.HOLDS:
                out.append(Violation(trial, _verts(*Ps), f"dilated Minkowski sum {a} not IDP", rep))


def _run_thm_2_1(rng, config, trial, out):
    m = rng.randint(2, 3)
    Ps = []
    for _ in range(20):
        cand = _certified_2cn(rng, config)
        if cand is not None:
            Ps.append(cand)
        if len(Ps) == m:
            break
    if len(Ps) < m:
        return
    rep = is_idp(minkowski_sum(Ps))
    if rep.verdict is not Verdict.HOLDS:
        out.append(Violation(trial, _verts(*Ps), "Minkowski sum of 2-convex-normal not IDP", rep))
    cay = is_idp(cayley_sum(Ps))
    tup = is_tuple_idp(Ps)
    if (cay.verdict is Verdict.HOLDS) != (tup.verdict is Verdict.HOLDS):
        out.append(
            Violation(
                trial,
                _verts(*Ps),
                "Cayley IDP and tuple IDP disagree for 2-convex-normal factors",
                cay if cay.verdict is Verdict.FAILS else tup,
            )
        )


def _run_lemma_2_2(rng, config, trial, out):
    d = rng.randint(1, min(config.dim_max, 3))
    bound = config.coord_bound if d <= 2 else min(config.coord_bound, 1)
    P = _poly(rng, d, bound)
    hi = d + 2 if d <= 2 else d
    for n in range(d, hi + 1):
        if n < 1:
            continue
        res = is_2_convex_normal(dilate(P, n))
        if not res.covered:
            out.append(
                Violation(
                    trial, _verts(P), f"dilate by {n} >= dim {d} not 2-convex-normal; "
                    f"witness {res.witness}"
                )
            )


def _run_cor_2_3(rng, config, trial, out):
    Ps = [_poly2(rng, rng.randint(1, 2), min(config.coord_bound, 2)) for _ in range(2)]
    ns = [P.dim + rng.randint(0, 1) for P in Ps]
    Qs = [dilate(P, n) for P, n in zip(Ps, ns)]
    rep = is_idp(minkowski_sum(Qs))
    if rep.verdict is not Verdict.HOLDS:
        out.append(Violation(trial, _verts(*Qs), f"Minkowski sum of dilates {ns} not IDP", rep))
    cay = is_idp(cayley_sum(Qs))
    tup = is_tuple_idp(Qs)
    if (cay.verdict is Verdict.HOLDS) != (tup.verdict is Verdict.HOLDS):
        out.append(
            Violation(
                trial,
                _verts(*Qs),
                f"Cayley IDP and tuple IDP disagree for dilates {ns}",
                cay if cay.verdict is Verdict.FAILS else tup,
            )
        )


def _run_prop_3_1(rng, config, trial, out):
    P = None
    for _ in range(20):
        d = rng.randint(1, 2)
        cand = _poly2(rng, d, min(config.coord_bound, 2))
        for Q in (cand, dilate(cand, cand.dim + 1)):
            if has_interior_translate_cover(Q).covered:
                P = Q
                break
        if P is not None:
            break
    if P is None:
        return
    rep = level_status(P, _level_horizon(P, config))
    if rep.verdict is Verdict.FAILS:
        out.append(Violation(trial, _verts(P), "interior-cover polytope not level", rep))


def _run_thm_3_2(rng, config, trial, out):
    Ps = []
    for _ in range(20):
        cand = _certified_cond01(rng, config)
        if cand is not None:
            Ps.append(cand)
        if len(Ps) == 2:
            break
    if len(Ps) < 2:
        return
    M = minkowski_sum(Ps)
    if level_index(M).index_r != 1:
        out.append(Violation(trial, _verts(*Ps), "Minkowski sum level index != 1"))
    repM = level_status(M, _level_horizon(M, config))
    if repM.verdict is Verdict.FAILS:
        out.append(Violation(trial, _verts(*Ps), "Minkowski sum not level", repM))
    C = cayley_sum(Ps)
    if level_index(C).index_r != len(Ps):
        out.append(Violation(trial, _verts(*Ps), f"Cayley sum level index != {len(Ps)}"))
    repC = level_status(C, _level_horizon(C, config))
    if repC.verdict is Verdict.FAILS:
        out.append(Violation(trial, _verts(*Ps), "Cayley sum not level", repC))


def _run_lemma_3_3(rng, config, trial, out):
    d = rng.randint(1, min(config.dim_max, 3))
    bound = config.coord_bound if d <= 2 else 1
    P = _poly(rng, d, bound)
    Q = dilate(P, d + 1)
    if not len(interior_lattice_points(Q)):
        out.append(Violation(trial, _verts(P), f"dilate by {d+1} has no interior lattice point"))
        return
    res = has_interior_translate_cover(Q)
    if not res.covered:
        out.append(
            Violation(
                trial, _verts(P),
                f"dilate by {d+1} misses interior-translate cover; witness {res.witness}"
            )
        )


def _run_cor_3_4(rng, config, trial, out):
    Ps = [_poly2(rng, rng.randint(1, 2), min(config.coord_bound, 2)) for _ in range(2)]
    Qs = [dilate(P, P.dim + 1 + rng.randint(0, 1)) for P in Ps]
    M = minkowski_sum(Qs)
    if level_index(M).index_r != 1:
        out.append(Violation(trial, _verts(*Qs), "Minkowski sum of dilates: level index != 1"))
    repM = level_status(M, _level_horizon(M, config))
    if repM.verdict is Verdict.FAILS:
        out.append(Violation(trial, _verts(*Qs), "Minkowski sum of dilates not level", repM))
    C = cayley_sum(Qs)
    if level_index(C).index_r != 2:
        out.append(Violation(trial, _verts(*Qs), "Cayley sum of dilates: level index != 2"))
    repC = level_status(C, _level_horizon(C, config))
    if repC.verdict is Verdict.FAILS:
        out.append(Violation(trial, _verts(*Qs), "Cayley sum of dilates not level", repC))


def _gorenstein_pair(rng) -> list[LatticePolytope]:
    """A pair whose Minkowski sum is a centrally symmetric reflexive square,
    modulo a random unimodular change of coordinates (applied to both)."""
    a, b = rng.randint(-1, 1), rng.randint(-1, 1)
    def tf(p):
        x, y = p
        x1 = x + a * y
        return (x1, b * x1 + y)
    P1 = from_vertices([tf((-1, 0)), tf((1, 0))])
    P2 = from_vertices([tf((0, -1)), tf((0, 1))])
    return [P1, P2]


def _run_bn_gorenstein(rng, config, trial, out):
    if trial % 3 == 0:
        Ps = _gorenstein_pair(rng)
    else:
        Ps = None
        for _ in range(20):
            cand = [_poly2(rng, rng.randint(1, 2), min(config.coord_bound, 2)) for _ in range(2)]
            if minkowski_sum(cand).dim == 2:
                Ps = cand
                break
        if Ps is None:
            return
    M = minkowski_sum(Ps)
    C = cayley_sum(Ps)
    gM = is_gorenstein(M, _level_horizon(M, config))
    gC = is_gorenstein(C, _level_horizon(C, config))
    mink_side = gM.verdict is Verdict.VERIFIED_UP_TO_HORIZON and level_index(M).index_r == 1
    cay_side = gC.verdict is Verdict.VERIFIED_UP_TO_HORIZON and level_index(C).index_r == 2
    if mink_side != cay_side:
        out.append(
            Violation(
                trial,
                _verts(*Ps),
                f"Gorenstein equivalence broken: Minkowski(index 1)={mink_side}, "
                f"Cayley(index 2)={cay_side}",
                gC if mink_side else gM,
            )
        )


def _run_hnp_polygon_pair(rng, config, trial, out):
    Q = _poly2(rng, 2, min(config.coord_bound, 2))
    R = _poly2(rng, rng.randint(1, 2), min(config.coord_bound, 2))
    P = minkowski_sum([Q, R])
    if not normal_fan_coarsens(P, Q):
        out.append(
            Violation(
                trial, _verts(P, Q),
                "normal fan of a Minkowski summand fails to coarsen the sum's fan"
            )
        )
        return
    rep = is_tuple_idp([P, Q])
    if rep.verdict is not Verdict.HOLDS:
        out.append(Violation(trial, _verts(P, Q), "fan-coarsening polygon pair not IDP", rep))


_RUNNERS = {
    "thm_0_1": _run_thm_0_1,
    "lemma_1_1": _run_lemma_1_1,
    "lemma_1_2": _run_lemma_1_2,
    "thm_0_4_equiv": _run_thm_0_4_equiv,
    "thm_2_1": _run_thm_2_1,
    "lemma_2_2": _run_lemma_2_2,
    "cor_2_3": _run_cor_2_3,
    "prop_3_1": _run_prop_3_1,
    "thm_3_2": _run_thm_3_2,
    "lemma_3_3": _run_lemma_3_3,
    "cor_3_4": _run_cor_3_4,
    "bn_gorenstein": _run_bn_gorenstein,
    "hnp_polygon_pair": _run_hnp_polygon_pair,
}

THEOREM_IDS = tuple(sorted(_RUNNERS))

_CAMPAIGN_NOTES = {
    "lemma_1_1": "slice equality checked on integer height vectors with bounded total; "
    "the real-valued statement is not mechanically checkable",
    "lemma_1_2": "interior slice equality checked on positive integer height vectors with "
    "bounded total; the real-valued statement is not mechanically checkable",
    "thm_0_4_equiv": "dilated-tuple quantifier truncated to coefficients bounded by the "
    "configured dilation bound",
    "bn_gorenstein": "level checks verified up to a finite horizon, not unconditionally",
    "thm_3_2": "level checks verified up to a finite horizon, not unconditionally",
    "cor_3_4": "level checks verified up to a finite horizon, not unconditionally",
    "prop_3_1": "level checks verified up to a finite horizon, not unconditionally",
    "thm_0_1": "level part verified up to a finite horizon, not unconditionally",
}


def verify_theorem(config: CampaignConfig) -> CampaignReport:
    """Run one campaign and report the violations found (ideally none)."""
    runner = _RUNNERS.get(config.theorem_id)
    if runner is None:
        raise GeometryError(
            f"unknown theorem id {config.theorem_id!r}; valid ids: {', '.join(THEOREM_IDS)}"
        )
    violations: list[Violation] = []
    for trial in range(config.trials):
        rng = random.Random(config.seed * _SEED_STRIDE + trial)
        runner(rng, config, trial, violations)
    notes = ()
    if config.theorem_id in _CAMPAIGN_NOTES:
        notes = (_CAMPAIGN_NOTES[config.theorem_id],)
    return CampaignReport(
        theorem_id=config.theorem_id,
        trials_run=config.trials,
        violations=tuple(violations),
        config=config,
        notes=notes,
    )
