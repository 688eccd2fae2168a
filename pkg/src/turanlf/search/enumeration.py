"""Isomorph-free generation of small graphs by canonical augmentation.

A graph on ``n + 1`` vertices is produced from a parent on ``n`` vertices by
adding a vertex adjacent to a subset of the parent, one subset per orbit of
the parent's automorphism group.  It is kept only when the added vertex is
in the automorphism orbit of the canonically chosen deletion vertex (maximum
degree, then maximum neighbour-degree sum, ties broken by canonical
position).  This yields exactly one graph per isomorphism class.

Every constraint handled here is closed under taking induced subgraphs, so
the canonical parent of a feasible graph is feasible and infeasible nodes can
be pruned with their whole subtree.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .._backend import kernels
from ..graph import Graph

#: Hard cap on exhaustive orders.
EXHAUSTIVE_CAP = 10

#: Known numbers of graphs on n = 0..10 vertices up to isomorphism.
GRAPH_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168)


class CapExceeded(ValueError):
    """Requested order exceeds the exhaustive cap."""


@dataclass(frozen=True)
class ConstraintSpec:
    """Conjunction of forbidden structures.

    ``clique_bound=q`` forbids K_q; ``matching_bound=s`` forbids M_{s+1}
    (matching number <= s); ``linforest_bound=s`` forbids L_{n,s}
    (linear-forest number <= s - 1).
    """

    clique_bound: int | None = None
    matching_bound: int | None = None
    linforest_bound: int | None = None

    def __post_init__(self):
        vals = (self.clique_bound, self.matching_bound, self.linforest_bound)
        if all(v is None for v in vals):
            raise ValueError("constraint needs at least one bound")
        if any(v is not None and v < 1 for v in vals):
            raise ValueError("constraint bounds must be >= 1")

    def kernel_args(self) -> tuple[int, int, int]:
        return (self.clique_bound or 0, self.matching_bound or 0, self.linforest_bound or 0)

    def allows(self, g: Graph) -> bool:
        from .. import freeness

        if self.clique_bound is not None and not freeness.is_clique_free(g, self.clique_bound):
            return False
        if self.matching_bound is not None and not freeness.is_matching_free(g, self.matching_bound + 1):
            return False
        if self.linforest_bound is not None and not freeness.is_linear_forest_free(g, self.linforest_bound):
            return False
        return True

    def to_dict(self) -> dict:
        return {
            "clique_bound": self.clique_bound,
            "matching_bound": self.matching_bound,
            "linforest_bound": self.linforest_bound,
        }


def _check_cap(n: int, cap: int) -> None:
    if cap > EXHAUSTIVE_CAP:
        raise CapExceeded(f"exhaustive cap cannot exceed {EXHAUSTIVE_CAP}")
    if n > cap:
        raise CapExceeded(f"order {n} exceeds the exhaustive cap {cap}")


def _root_ok(constraints: ConstraintSpec | None) -> bool:
    # K_1 is the root; only a K_1 ban excludes it
    return constraints is None or constraints.clique_bound != 1


Node = tuple[tuple[int, ...], list]


def walk(
    n_max: int,
    visit: Callable[[int, tuple[int, ...]], None],
    constraints: ConstraintSpec | None = None,
    *,
    start: Node | None = None,
    start_level: int = 1,
    collect_level: int | None = None,
) -> list[Node]:
    """Depth-first traversal of the augmentation tree.

    ``visit(level, adj)`` is called for every node (one per isomorphism
    class of feasible graphs) at levels ``start_level .. n_max``.  If
    ``collect_level`` is given, nodes at that level are returned (with their
    automorphism generators) instead of being expanded further.
    """
    args = constraints.kernel_args() if constraints else (0, 0, 0)
    collected: list[Node] = []
    if start is None:
        if not _root_ok(constraints) or n_max < 1:
            return collected
        start = ((0,), [])
    stop = n_max if collect_level is None else collect_level

    stack = [(start[0], start_level, start[1])]
    while stack:
        adj, level, gens = stack.pop()
        visit(level, adj)
        if level == stop:
            if collect_level is not None:
                collected.append((adj, gens))
            continue
        children = kernels.augment(adj, level, gens, *args, level + 1 < stop or collect_level is not None)
        for child, cg in reversed(children):
            stack.append((child, level + 1, cg))
    return collected


def enumerate_graphs(
    n: int, constraints: ConstraintSpec | None = None, cap: int = EXHAUSTIVE_CAP
) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` vertices (feasible for ``constraints``)."""
    if n < 1:
        raise ValueError("enumeration needs n >= 1")
    _check_cap(n, cap)
    args = constraints.kernel_args() if constraints else (0, 0, 0)
    if not _root_ok(constraints):
        return
    stack = [((0,), 1, [])]
    while stack:
        adj, level, gens = stack.pop()
        if level == n:
            yield Graph(n, adj, check=False)
            continue
        children = kernels.augment(adj, level, gens, *args, level + 1 < n)
        for child, cg in reversed(children):
            stack.append((child, level + 1, cg))


def count_graphs(n: int, constraints: ConstraintSpec | None = None, cap: int = EXHAUSTIVE_CAP) -> int:
    return sum(1 for _ in enumerate_graphs(n, constraints, cap))


def level_counts(n_max: int, constraints: ConstraintSpec | None = None, cap: int = EXHAUSTIVE_CAP) -> list[int]:
    """Class counts for orders ``1..n_max`` from a single traversal."""
    _check_cap(n_max, cap)
    counts = [0] * (n_max + 1)

    def visit(level: int, adj: tuple[int, ...]) -> None:
        counts[level] += 1

    walk(n_max, visit, constraints)
    return counts[1:]
