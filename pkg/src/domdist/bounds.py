"""Lower bounds on the domination number from distance data.

Every check is an integer comparison in cross-multiplied form (6*gamma >= S3,
not gamma >= S3/6), with the bound value also carried as an exact Fraction.
Equality detection therefore never depends on floating point.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .distance import (
    BoundaryInfo,
    DistanceMatrix,
    all_pairs_distances,
    boundary_and_set_ecc,
    wiener_index,
)
from .domination import gamma_exact
from .errors import BadR
from .graphs import Graph, encode_graph6

BOUND_DIAMETER = "diameter"
BOUND_TRIPLE = "triple"
BOUND_AVERAGE_DISTANCE = "average-distance"
BOUND_BOUNDARY_ECC = "boundary-ecc"

DEFAULT_RS = (3, 4, 5)
DEFAULT_SUBSET_BUDGET = 200_000  # exhaustive r-subset search iff C(n, r) fits
DEFAULT_SAMPLE_COUNT = 200
_SAMPLE_SEED = 0  # fixed seed: sampled mode must stay deterministic


def r_subset_bound_name(r: int) -> str:
    return f"r-subset:{r}"


@dataclass(frozen=True)
class BoundCheck:
    """One lower-bound check: value, pass/fail, slack, and equality witnesses."""

    name: str
    value: Fraction | None
    holds: bool | None
    equality: bool
    slack: Fraction | None
    witness: tuple[int, ...]
    detail: dict = field(default_factory=dict)
    skipped_reason: str | None = None

    @property
    def skipped(self) -> bool:
        return self.holds is None


@dataclass(frozen=True)
class TripleEquality:
    """A vertex triple attaining 6*gamma, with its pairwise distances mod 3."""

    triple: tuple[int, int, int]
    dists: tuple[int, int, int]
    mod3_ok: bool


def _skipped(name: str, reason: str) -> BoundCheck:
    return BoundCheck(
        name=name, value=None, holds=None, equality=False, slack=None,
        witness=(), skipped_reason=reason,
    )


def _check(name: str, gamma: int, num: int, den: int,
           witness: tuple[int, ...], detail: dict) -> BoundCheck:
    value = Fraction(num, den)
    return BoundCheck(
        name=name,
        value=value,
        holds=den * gamma >= num,
        equality=den * gamma == num,
        slack=gamma - value,
        witness=witness,
        detail=detail,
    )


def diameter_lb(gamma: int, dm: DistanceMatrix) -> BoundCheck:
    """ceil((diam + 1) / 3) <= gamma, checked as 3*gamma >= diam + 1."""
    diam = dm.diam
    lb = (diam + 3) // 3
    pair = min(
        (u, v)
        for u in range(dm.n) for v in range(u + 1, dm.n)
        if dm.d[u][v] == diam
    )
    value = Fraction(lb)
    return BoundCheck(
        name=BOUND_DIAMETER,
        value=value,
        holds=3 * gamma >= diam + 1,
        equality=lb == gamma,
        slack=gamma - value,
        witness=pair,
        detail={"diam": diam, "margin": 3 * gamma - (diam + 1)},
    )


def _max_pair_sum(dm: DistanceMatrix, subsets) -> tuple[int, tuple[int, ...]]:
    best = -1
    best_subset: tuple[int, ...] = ()
    d = dm.d
    for subset in subsets:
        total = sum(d[u][v] for u, v in combinations(subset, 2))
        if total > best:
            best = total
            best_subset = tuple(subset)
    return best, best_subset


def best_triple_lb(gamma: int, dm: DistanceMatrix) -> BoundCheck:
    """6*gamma >= max over triples of the three pairwise distances."""
    if dm.n < 3:
        return _skipped(BOUND_TRIPLE, "requires n >= 3")
    s3, triple = _max_pair_sum(dm, combinations(range(dm.n), 3))
    return _check(
        BOUND_TRIPLE, gamma, s3, 6, triple,
        {"pair_sum": s3, "margin": 6 * gamma - s3},
    )


def triple_equality_analysis(gamma: int, dm: DistanceMatrix) -> tuple[TripleEquality, ...]:
    """Every triple attaining 6*gamma, each distance checked for = 2 (mod 3).

    A witness with a distance not congruent to 2 mod 3 contradicts the
    equality corollary and is treated as fatal by report assembly.
    """
    if dm.n < 3:
        return ()
    d = dm.d
    found = []
    for i, j, k in combinations(range(dm.n), 3):
        dists = (d[i][j], d[i][k], d[j][k])
        if sum(dists) == 6 * gamma:
            found.append(TripleEquality(
                triple=(i, j, k),
                dists=dists,
                mod3_ok=all(x % 3 == 2 for x in dists),
            ))
    return tuple(found)


def _sampled_subsets(n: int, r: int, count: int) -> list[tuple[int, ...]]:
    rng = random.Random(_SAMPLE_SEED)
    return [tuple(sorted(rng.sample(range(n), r))) for _ in range(count)]


def r_subset_lb(
    gamma: int,
    dm: DistanceMatrix,
    r: int,
    subset_budget: int = DEFAULT_SUBSET_BUDGET,
    sample_count: int = DEFAULT_SAMPLE_COUNT,
) -> BoundCheck:
    """r(r-1)*gamma >= max over r-subsets of the summed pairwise distances.

    Exhaustive while C(n, r) fits the budget; beyond that only sampled
    subsets are checked, which can verify but never refute.
    """
    n = dm.n
    if r < 3 or r > n:
        raise BadR(f"r={r} outside 3..{n}")
    if math.comb(n, r) <= subset_budget:
        method = "exhaustive"
        subsets = combinations(range(n), r)
    else:
        method = "sampled"
        subsets = _sampled_subsets(n, r, sample_count)
    s_r, subset = _max_pair_sum(dm, subsets)
    return _check(
        r_subset_bound_name(r), gamma, s_r, r * (r - 1), subset,
        {"r": r, "pair_sum": s_r, "method": method,
         "margin": r * (r - 1) * gamma - s_r},
    )


def average_distance_lb(gamma: int, g: Graph, dm: DistanceMatrix | None = None) -> BoundCheck:
    """n(n-1)*gamma >= W(G); the bound value is the average distance."""
    w = wiener_index(g, dm)
    den = g.n * (g.n - 1)
    return _check(
        BOUND_AVERAGE_DISTANCE, gamma, w, den, (),
        {"wiener": w, "margin": den * gamma - w},
    )


def boundary_ecc_lb(gamma: int, bi: BoundaryInfo, dm: DistanceMatrix) -> BoundCheck:
    """2*gamma >= ecc(B) + 1, plus the triple-distance diagnostic behind it.

    When the boundary is a proper subset, a diametral pair (x, y) and the
    set-eccentricity witness z must satisfy d(x,y)+d(x,z)+d(y,z) >= 3R+1;
    the diagnostic records that sum.
    """
    r_ecc = bi.ecc_of_boundary
    detail: dict = {"R": r_ecc, "boundary": list(bi.boundary), "z": bi.witness}
    if len(bi.boundary) < dm.n:
        x, y = min(
            (u, v)
            for u in range(dm.n) for v in range(u + 1, dm.n)
            if dm.d[u][v] == dm.diam
        )
        z = bi.witness
        total = dm.d[x][y] + dm.d[x][z] + dm.d[y][z]
        detail["spade"] = {
            "x": x, "y": y, "z": z,
            "sum": total,
            "threshold": 3 * r_ecc + 1,
            "ok": total >= 3 * r_ecc + 1,
        }
    else:
        detail["spade"] = None
    return _check(
        BOUND_BOUNDARY_ECC, gamma, r_ecc + 1, 2, (bi.witness,),
        detail | {"margin": 2 * gamma - (r_ecc + 1)},
    )


@dataclass(frozen=True)
class BoundReport:
    """Everything verified about one graph: gamma, all checks, equality triples."""

    graph6: str
    n: int
    gamma: int
    gamma_witness: tuple[int, ...]
    checks: tuple[BoundCheck, ...]
    triple_equalities: tuple[TripleEquality, ...]
    fatal: bool

    def check(self, name: str) -> BoundCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def bound_names(self) -> list[str]:
        return [c.name for c in self.checks]

    def to_json_dict(self) -> dict:
        return {
            "graph": self.graph6,
            "n": self.n,
            "gamma": self.gamma,
            "gamma_witness": list(self.gamma_witness),
            "bounds": [_check_json(c) for c in self.checks],
            "triple_equalities": [
                {"triple": list(t.triple), "dists": list(t.dists), "mod3_ok": t.mod3_ok}
                for t in self.triple_equalities
            ],
            "fatal": self.fatal,
        }

    def jsonl_line(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))


def _frac_json(f: Fraction) -> dict:
    return {"num": f.numerator, "den": f.denominator}


def _check_json(c: BoundCheck) -> dict:
    if c.skipped:
        return {"bound": c.name, "skipped": True, "reason": c.skipped_reason}
    return {
        "bound": c.name,
        "skipped": False,
        "value": _frac_json(c.value),
        "holds": c.holds,
        "equality": c.equality,
        "slack": _frac_json(c.slack),
        "witness": list(c.witness),
        "detail": c.detail,
    }


def assemble_report(
    g: Graph,
    rs: Sequence[int] = DEFAULT_RS,
    subset_budget: int = DEFAULT_SUBSET_BUDGET,
    sample_count: int = DEFAULT_SAMPLE_COUNT,
    graph_id: str | None = None,
) -> BoundReport:
    """Solve gamma and run every configured check; any failure marks it fatal."""
    dm = all_pairs_distances(g)
    result = gamma_exact(g, dm)
    gamma = result.gamma
    bi = boundary_and_set_ecc(g, dm)

    checks = [diameter_lb(gamma, dm), best_triple_lb(gamma, dm)]
    for r in sorted(set(rs)):
        if r < 3:
            raise BadR(f"configured r={r} < 3")
        if r > g.n:
            checks.append(_skipped(r_subset_bound_name(r), f"r={r} exceeds n={g.n}"))
        else:
            checks.append(r_subset_lb(gamma, dm, r, subset_budget, sample_count))
    checks.append(average_distance_lb(gamma, g, dm))
    checks.append(boundary_ecc_lb(gamma, bi, dm))

    equalities = triple_equality_analysis(gamma, dm)

    fatal = any(c.holds is False for c in checks)
    fatal = fatal or any(not t.mod3_ok for t in equalities)
    spade = checks[-1].detail.get("spade")
    fatal = fatal or (spade is not None and not spade["ok"])

    return BoundReport(
        graph6=graph_id if graph_id is not None else encode_graph6(g),
        n=g.n,
        gamma=gamma,
        gamma_witness=result.witness,
        checks=tuple(checks),
        triple_equalities=equalities,
        fatal=fatal,
    )
