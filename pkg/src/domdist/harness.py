"""Corpus-scale verification driver and the diametral-path counterexample.

A corpus is a file of graph6 lines (one graph per line) or, with the
edgelist format, blank-line-separated edge-list blocks.  Reports are
produced in input order, so repeated runs over the same file are
byte-identical.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .bounds import (
    BOUND_AVERAGE_DISTANCE,
    BOUND_BOUNDARY_ECC,
    BOUND_DIAMETER,
    BOUND_TRIPLE,
    BoundReport,
    DEFAULT_RS,
    DEFAULT_SAMPLE_COUNT,
    DEFAULT_SUBSET_BUDGET,
    assemble_report,
    r_subset_bound_name,
)
from .distance import all_pairs_distances
from .domination import gamma_bruteforce_oracle, gamma_exact, is_dominating_set
from .errors import GraphInputError, UnknownBound
from .graphs import GRAPH6_HEADER, Graph, encode_graph6, parse_edgelist, parse_graph6

FORMAT_GRAPH6 = "graph6"
FORMAT_EDGELIST = "edgelist"


@dataclass
class VerifyConfig:
    fmt: str = FORMAT_GRAPH6
    rs: tuple[int, ...] = DEFAULT_RS
    subset_budget: int = DEFAULT_SUBSET_BUDGET
    sample_count: int = DEFAULT_SAMPLE_COUNT
    strict: bool = False


@dataclass
class CorpusSummary:
    """Aggregate outcome of one corpus run; violations must stay at zero."""

    graphs_processed: int = 0
    skipped: int = 0
    violations: int = 0
    equality_counts: dict[str, int] = field(default_factory=dict)
    tight_instances: list[tuple[str, str]] = field(default_factory=list)
    violation_details: list[tuple[str, str]] = field(default_factory=list)
    errors: list[tuple[int, str]] = field(default_factory=list)
    elapsed: float = 0.0


def _iter_graph6_entries(path: str) -> Iterator[tuple[int, str]]:
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith(GRAPH6_HEADER):
                line = line[len(GRAPH6_HEADER):]
                if not line:
                    continue
            yield lineno, line


def _iter_edgelist_blocks(path: str) -> Iterator[tuple[int, str]]:
    with open(path, "r", encoding="utf-8") as fh:
        block: list[str] = []
        start = 0
        for lineno, raw in enumerate(fh, start=1):
            if raw.strip():
                if not block:
                    start = lineno
                block.append(raw)
            elif block:
                yield start, "".join(block)
                block = []
        if block:
            yield start, "".join(block)


def iter_corpus(path: str, fmt: str = FORMAT_GRAPH6) -> Iterator[tuple[int, str, Graph | GraphInputError]]:
    """Yield (line, token, Graph-or-error) per corpus entry, in input order.

    token is the graph6 encoding of the parsed graph (the stripped input line
    for graph6 corpora) or, for entries that fail to parse, the raw input.
    """
    if fmt == FORMAT_GRAPH6:
        for lineno, line in _iter_graph6_entries(path):
            try:
                yield lineno, line, parse_graph6(line)
            except GraphInputError as exc:
                yield lineno, line, exc
    elif fmt == FORMAT_EDGELIST:
        for lineno, block in _iter_edgelist_blocks(path):
            try:
                g = parse_edgelist(block)
                yield lineno, encode_graph6(g), g
            except GraphInputError as exc:
                yield lineno, block.splitlines()[0], exc
    else:
        raise ValueError(f"unknown corpus format {fmt!r}")


def _corpus_reports(path: str, config: VerifyConfig) -> Iterator[tuple[int, str, BoundReport | GraphInputError]]:
    for lineno, token, item in iter_corpus(path, config.fmt):
        if isinstance(item, GraphInputError):
            if config.strict:
                raise item
            yield lineno, token, item
            continue
        yield lineno, token, assemble_report(
            item,
            rs=config.rs,
            subset_budget=config.subset_budget,
            sample_count=config.sample_count,
            graph_id=token,
        )


def run_corpus_verify(
    path: str,
    config: VerifyConfig | None = None,
    jsonl_path: str | None = None,
) -> CorpusSummary:
    """Analyze every corpus graph, tally equalities, and count bound violations.

    In strict mode a malformed entry aborts the run by raising; otherwise it
    is counted as skipped and recorded in summary.errors.
    """
    config = config or VerifyConfig()
    summary = CorpusSummary()
    start = time.perf_counter()
    jsonl = open(jsonl_path, "w", encoding="ascii") if jsonl_path else None
    try:
        for lineno, token, item in _corpus_reports(path, config):
            if isinstance(item, GraphInputError):
                summary.skipped += 1
                summary.errors.append((lineno, f"{type(item).__name__}: {item}"))
                continue
            summary.graphs_processed += 1
            if item.fatal:
                summary.violations += 1
                for c in item.checks:
                    if c.holds is False:
                        summary.violation_details.append((token, c.name))
                if any(not t.mod3_ok for t in item.triple_equalities):
                    summary.violation_details.append((token, "triple-mod3"))
            for c in item.checks:
                if c.skipped:
                    continue
                summary.equality_counts.setdefault(c.name, 0)
                if c.equality:
                    summary.equality_counts[c.name] += 1
                    summary.tight_instances.append((token, c.name))
            if jsonl is not None:
                jsonl.write(item.jsonl_line() + "\n")
    finally:
        if jsonl is not None:
            jsonl.close()
    summary.elapsed = time.perf_counter() - start
    return summary


_FIXED_BOUNDS = (BOUND_DIAMETER, BOUND_TRIPLE, BOUND_AVERAGE_DISTANCE, BOUND_BOUNDARY_ECC)


def canonical_bound_name(name: str) -> str:
    """Normalize a user-supplied bound name; raises UnknownBound otherwise."""
    name = name.strip()
    if name in _FIXED_BOUNDS:
        return name
    tail = None
    if name.startswith("r-subset:"):
        tail = name[len("r-subset:"):]
    elif name.startswith("r-subset(") and name.endswith(")"):
        tail = name[len("r-subset("):-1]
    if tail is not None:
        try:
            r = int(tail)
        except ValueError:
            raise UnknownBound(f"bad r in bound name {name!r}") from None
        if r < 3:
            raise UnknownBound(f"r-subset bound needs r >= 3, got {r}")
        return r_subset_bound_name(r)
    raise UnknownBound(f"unknown bound {name!r}")


def find_tight_instances(path: str, bound: str, config: VerifyConfig | None = None) -> list[str]:
    """All corpus graphs whose report shows equality for the named bound."""
    config = config or VerifyConfig()
    name = canonical_bound_name(bound)
    if name.startswith("r-subset:"):
        r = int(name.split(":")[1])
        if r not in config.rs:
            config = VerifyConfig(
                fmt=config.fmt, rs=tuple(sorted(set(config.rs) | {r})),
                subset_budget=config.subset_budget,
                sample_count=config.sample_count, strict=config.strict,
            )
    tight: list[str] = []
    for _, token, item in _corpus_reports(path, config):
        if isinstance(item, GraphInputError):
            continue
        if item.check(name).equality:
            tight.append(token)
    return tight


# Counterexample to the claim that a diametral path contains at most
# gamma(G)-1 edges joining the closed neighborhoods of a gamma-set.
# Vertices 0..3 form the path; 4 and 5 are the two dominators.
COUNTEREXAMPLE_EDGES = ((0, 1), (1, 2), (2, 3), (4, 0), (4, 2), (5, 1), (5, 3))
COUNTEREXAMPLE_GAMMA_SET = (4, 5)
COUNTEREXAMPLE_PATH = (0, 1, 2, 3)
COUNTEREXAMPLE_LABELS = {0: "1", 1: "2", 2: "3", 3: "4", 4: "u", 5: "v"}


@dataclass(frozen=True)
class CounterexampleReport:
    """Recomputed properties of the 6-vertex counterexample graph.

    The refutation is joining_edge_count > claimed_max_joining_edges, where
    the claimed maximum is gamma - 1.  Every field is derived from the graph,
    none is assumed.
    """

    graph: Graph
    gamma: int
    gamma_set: tuple[int, ...]
    diametral_path: tuple[int, ...]
    diameter: int
    path_is_induced: bool
    path_is_diametral: bool
    joining_edge_count: int
    claimed_max_joining_edges: int
    refutes_claim: bool
    ok: bool


def counterexample_demo() -> CounterexampleReport:
    """Reconstruct the counterexample graph and re-derive every claimed property."""
    g = Graph.from_edges(6, COUNTEREXAMPLE_EDGES)
    dm = all_pairs_distances(g)

    gamma = gamma_exact(g, dm).gamma
    oracle_gamma = gamma_bruteforce_oracle(g).gamma
    s = COUNTEREXAMPLE_GAMMA_SET
    gamma_set_ok = gamma == oracle_gamma == len(s) and is_dominating_set(g, s)

    path = COUNTEREXAMPLE_PATH
    consecutive = all(g.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1))
    induced = consecutive and not any(
        g.has_edge(u, v)
        for u, v in combinations(path, 2)
        if abs(path.index(u) - path.index(v)) > 1
    )
    length = len(path) - 1
    diametral = induced and length == dm.diam

    nu = g.closed_neighborhood(s[0])
    nv = g.closed_neighborhood(s[1])
    joining = sum(
        1
        for a, b in zip(path, path[1:])
        if (a in nu and b in nv) or (a in nv and b in nu)
    )
    claimed = gamma - 1

    return CounterexampleReport(
        graph=g,
        gamma=gamma,
        gamma_set=s,
        diametral_path=path,
        diameter=dm.diam,
        path_is_induced=induced,
        path_is_diametral=diametral,
        joining_edge_count=joining,
        claimed_max_joining_edges=claimed,
        refutes_claim=joining > claimed,
        ok=gamma_set_ok and diametral and joining > claimed,
    )
