"""Exact constrained extremal search over all graphs up to isomorphism."""
from __future__ import annotations

import multiprocessing
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .._backend import kernels
from ..graph import Graph
from .canon import canonical_graph6
from .enumeration import EXHAUSTIVE_CAP, ConstraintSpec, _check_cap, walk

# Subtrees below this level are the unit of parallel work.
_SPLIT_LEVEL = 6
_BATCH = 64


@dataclass(frozen=True)
class Objective:
    """``edges`` or ``cliques(r)``: the quantity being maximised."""

    kind: str
    r: int = 2

    @classmethod
    def parse(cls, text: str) -> "Objective":
        text = text.strip()
        if text == "edges":
            return cls("edges")
        m = re.fullmatch(r"cliques\((\d+)\)", text)
        if m:
            r = int(m.group(1))
            if r < 1:
                raise ValueError("clique order must be >= 1")
            return cls("cliques", r)
        raise ValueError(f"objective must be 'edges' or 'cliques(r)', got {text!r}")

    def __str__(self) -> str:
        return "edges" if self.kind == "edges" else f"cliques({self.r})"

    def value(self, adj, n: int) -> int:
        if self.kind == "edges":
            return sum(bin(a).count("1") for a in adj) // 2
        return kernels.count_cliques(adj, n, self.r)


@dataclass
class ExtremalRecord:
    n: int
    objective: str
    constraints: ConstraintSpec
    value: int | None
    witnesses: list[str] = field(default_factory=list)
    witness_count: int = 0
    method: str = "exhaustive"
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "params": dict(self.params),
            "objective": self.objective,
            "constraints": self.constraints.to_dict(),
            "value": self.value,
            "witnesses": list(self.witnesses),
            "witness_count": self.witness_count,
            "method": self.method,
        }


class _Tracker:
    """Per-level running maximum and the graphs attaining it."""

    def __init__(self, objective: Objective):
        self.objective = objective
        self.best: dict[int, int] = {}
        self.wits: dict[int, list[tuple[int, ...]]] = {}

    def __call__(self, level: int, adj: tuple[int, ...]) -> None:
        val = self.objective.value(adj, level)
        cur = self.best.get(level)
        if cur is None or val > cur:
            self.best[level] = val
            self.wits[level] = [adj]
        elif val == cur:
            self.wits[level].append(adj)

    def merge(self, best: dict[int, int], wits: dict[int, list]) -> None:
        for level, val in best.items():
            cur = self.best.get(level)
            if cur is None or val > cur:
                self.best[level] = val
                self.wits[level] = list(wits[level])
            elif val == cur:
                self.wits[level].extend(wits[level])


def _subtree_job(job):
    nodes, level, n_max, objective, constraints = job
    tr = _Tracker(objective)
    for adj, gens in nodes:
        walk(n_max, tr, constraints, start=(adj, gens), start_level=level)
    return tr.best, tr.wits


def _run(n_max: int, objective: Objective, constraints: ConstraintSpec, workers: int) -> _Tracker:
    top = _Tracker(objective)
    split = min(_SPLIT_LEVEL, n_max)
    frontier = walk(n_max, top, constraints, collect_level=split)
    if split == n_max or not frontier:
        return top
    # children of frontier nodes are explored in jobs; frontier nodes themselves are already counted
    expanded = []
    for adj, gens in frontier:
        for child, cg in kernels.augment(adj, split, gens, *constraints.kernel_args(), True):
            expanded.append((child, cg))
    batches = [expanded[i:i + _BATCH] for i in range(0, len(expanded), _BATCH)]
    jobs = [(b, split + 1, n_max, objective, constraints) for b in batches]
    if workers > 1 and len(jobs) > 1:
        ctx = multiprocessing.get_context("fork")
        with ProcessPoolExecutor(max_workers=workers, mp_context=ctx) as ex:
            results = list(ex.map(_subtree_job, jobs))
    else:
        results = [_subtree_job(j) for j in jobs]
    for best, wits in results:
        top.merge(best, wits)
    return top


def extremal_profile(
    n_max: int,
    objective: Objective | str,
    constraints: ConstraintSpec,
    *,
    workers: int = 1,
    cap: int = EXHAUSTIVE_CAP,
    max_witnesses: int = 1000,
    params: dict | None = None,
) -> dict[int, ExtremalRecord]:
    """Exact maxima for every order ``1..n_max`` from one traversal.

    Witnesses are canonical graph6 strings, sorted; at most
    ``max_witnesses`` are kept per order (``witness_count`` has the total).
    """
    if isinstance(objective, str):
        objective = Objective.parse(objective)
    if n_max < 1:
        raise ValueError("need n_max >= 1")
    _check_cap(n_max, cap)
    tr = _run(n_max, objective, constraints, workers)
    out = {}
    for n in range(1, n_max + 1):
        graphs = tr.wits.get(n, [])
        wits = sorted(canonical_graph6(Graph(n, adj, check=False)) for adj in graphs)
        out[n] = ExtremalRecord(
            n=n,
            objective=str(objective),
            constraints=constraints,
            value=tr.best.get(n),
            witnesses=wits[:max_witnesses],
            witness_count=len(wits),
            params=dict(params or {}, n=n),
        )
    return out


def extremal_search(
    n: int,
    objective: Objective | str,
    constraints: ConstraintSpec,
    *,
    workers: int = 1,
    cap: int = EXHAUSTIVE_CAP,
    max_witnesses: int = 1000,
) -> ExtremalRecord:
    """Exact maximum of ``objective`` over ``n``-vertex graphs meeting ``constraints``.

    ``value`` is ``None`` only when no graph qualifies (a K_1 ban).
    """
    return extremal_profile(n, objective, constraints, workers=workers, cap=cap, max_witnesses=max_witnesses)[n]
