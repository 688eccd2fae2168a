"""Exact detection and counting for cliques, matchings and linear forests.

Every maximiser returns a witness: the lexicographically smallest sorted
edge list among all optimal edge sets.

A graph contains a member of L_{n,s} iff it has a linear-forest subgraph
with at least ``s`` edges: deleting a leaf edge of a path keeps a linear
forest, so any forest with more than ``s`` edges can be trimmed to exactly
``s``, and isolated vertices pad it to order ``n``.  Hence
``is_linear_forest_free(g, s)`` is ``lf(g) < s``.
"""
from __future__ import annotations

from dataclasses import dataclass

from ._backend import kernels
from .graph import Graph, GraphError

# Kernel branch and bound for matchings is used up to this order; Edmonds above.
_SMALL_MATCHING = 16


@dataclass(frozen=True)
class MatchingWitness:
    edges: tuple[tuple[int, int], ...]

    def validate(self, g: Graph) -> None:
        seen: set[int] = set()
        for u, v in self.edges:
            if not g.has_edge(u, v):
                raise GraphError(f"matching edge ({u}, {v}) not in graph")
            if u in seen or v in seen:
                raise GraphError(f"matching edges share vertex in ({u}, {v})")
            seen.update((u, v))


@dataclass(frozen=True)
class LinearForestWitness:
    edges: tuple[tuple[int, int], ...]

    def validate(self, g: Graph) -> None:
        deg = [0] * g.n
        parent = list(range(g.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            if not g.has_edge(u, v):
                raise GraphError(f"forest edge ({u}, {v}) not in graph")
            deg[u] += 1
            deg[v] += 1
            if deg[u] > 2 or deg[v] > 2:
                raise GraphError(f"vertex of degree > 2 in forest at edge ({u}, {v})")
            a, b = find(u), find(v)
            if a == b:
                raise GraphError(f"forest edge ({u}, {v}) closes a cycle")
            parent[a] = b

    def paths(self, n: int) -> list[list[int]]:
        """The vertex-disjoint paths covering ``0..n-1`` (isolated vertices are 1-vertex paths)."""
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        seen = [False] * n
        out = []
        for start in range(n):
            if seen[start] or len(nbrs[start]) == 2:
                continue
            path = [start]
            seen[start] = True
            prev, cur = -1, start
            while True:
                nxt = [w for w in nbrs[cur] if w != prev and not seen[w]]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                seen[cur] = True
                path.append(cur)
            out.append(path)
        return out


# -- cliques ---------------------------------------------------------------


def count_cliques(g: Graph, r: int) -> int:
    """Number of r-vertex subsets inducing a complete graph."""
    if r < 1:
        raise ValueError("clique order r must be >= 1")
    return kernels.count_cliques(g.adj, g.n, r)


def is_clique_free(g: Graph, q: int) -> bool:
    if q < 1:
        raise ValueError("clique order q must be >= 1")
    return not kernels.has_clique(g.adj, g.n, q)


def clique_number(g: Graph) -> int:
    q = 0
    while kernels.has_clique(g.adj, g.n, q + 1):
        q += 1
    return q


# -- matchings ---------------------------------------------------------------


def _edmonds(n: int, adj: tuple[int, ...], removed: int = 0) -> int:
    """Maximum cardinality matching by Edmonds' blossom algorithm, ignoring ``removed`` vertices."""
    nbrs = [[] if removed >> v & 1 else
            [u for u in range(n) if adj[v] >> u & 1 and not removed >> u & 1]
            for v in range(n)]
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for u in nbrs[v]:
                if match[u] == -1:
                    match[u], match[v] = v, u
                    break

    for root in range(n):
        if match[root] != -1 or not nbrs[root]:
            continue
        used = [False] * n
        p = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = [root]
        qh = 0
        found = -1

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = p[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = p[match[b]]

        def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                p[v] = child
                child = match[v]
                v = p[match[v]]

        while qh < len(queue) and found == -1:
            v = queue[qh]
            qh += 1
            for to in nbrs[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark(v, cur, to, blossom)
                    mark(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        found = to
                        break
                    used[match[to]] = True
                    queue.append(match[to])
        v = found
        while v != -1:
            pv = p[v]
            ppv = match[pv]
            match[v] = pv
            match[pv] = v
            v = ppv
    return sum(1 for v in range(n) if match[v] != -1) // 2


def _nu(n: int, adj: tuple[int, ...], removed: int = 0) -> int:
    if n <= _SMALL_MATCHING:
        sub = [0 if removed >> v & 1 else a & ~removed for v, a in enumerate(adj)]
        return kernels.matching_number(sub, n)
    return _edmonds(n, adj, removed)


def matching_number(g: Graph) -> int:
    return _nu(g.n, g.adj)


def is_matching_free(g: Graph, k: int) -> bool:
    """True iff ``g`` has no matching with ``k`` edges (M_k-free, i.e. matching number < k)."""
    if k < 1:
        raise ValueError("matching size must be >= 1")
    if g.n <= _SMALL_MATCHING:
        return kernels.matching_number(g.adj, g.n, k) < k
    return _edmonds(g.n, g.adj) < k


def max_matching(g: Graph) -> tuple[int, MatchingWitness]:
    """Matching number and the lexicographically smallest maximum matching.

    Greedy over edges in order: an edge is kept iff the kept set still
    extends to a maximum matching, checked with an exact matching oracle.
    """
    nu = matching_number(g)
    chosen: list[tuple[int, int]] = []
    used = 0
    for u, v in g.edges():
        if len(chosen) == nu:
            break
        if used >> u & 1 or used >> v & 1:
            continue
        trial = used | 1 << u | 1 << v
        if _nu(g.n, g.adj, trial) >= nu - len(chosen) - 1:
            chosen.append((u, v))
            used = trial
    return nu, MatchingWitness(tuple(chosen))


# -- linear forests ----------------------------------------------------------


def _lf_upper(g: Graph) -> int:
    """Upper bound: a path forest has at most n - (#components) edges, and at most twice the matching number."""
    comps = 0
    seen = 0
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comps += 1
        frontier = 1 << v
        seen |= frontier
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nb = g.adj[low.bit_length() - 1] & ~seen
            seen |= nb
            frontier |= nb
    return min(g.n - comps, 2 * matching_number(g))


def linear_forest_number(g: Graph) -> int:
    """lf(g): the largest edge count of a linear-forest subgraph."""
    if g.edge_count == 0:
        return 0
    return kernels.linear_forest_number(g.adj, g.n, _lf_upper(g))


def is_linear_forest_free(g: Graph, s: int) -> bool:
    """True iff ``g`` contains no member of L_{n,s}, i.e. ``lf(g) < s``."""
    if s < 1:
        raise ValueError("linear forest size s must be >= 1")
    if g.edge_count < s or _lf_upper(g) < s:
        return True
    return kernels.linear_forest_number(g.adj, g.n, s) < s


def _first_forest(g: Graph, target: int) -> tuple[tuple[int, int], ...]:
    """First linear forest with ``target`` edges in include-first order over sorted edges.

    Include-first depth-first order visits equal-size edge sets in
    lexicographic order, so the first hit is the lexicographically smallest.
    """
    edges = g.edges()
    m = len(edges)
    n = g.n
    fdeg = [0] * n
    end = list(range(n))
    chosen: list[tuple[int, int]] = []

    def admissible_after(i: int) -> int:
        cap = [0] * n
        cnt = 0
        for u, v in edges[i:]:
            if fdeg[u] < 2 and fdeg[v] < 2 and end[u] != v:
                cnt += 1
                cap[u] = 2 - fdeg[u]
                cap[v] = 2 - fdeg[v]
        return min(cnt, sum(cap) // 2)

    def rec(i: int) -> bool:
        if len(chosen) == target:
            return True
        if i == m or len(chosen) + admissible_after(i) < target:
            return False
        u, v = edges[i]
        if fdeg[u] < 2 and fdeg[v] < 2 and end[u] != v:
            a, b = end[u], end[v]
            fdeg[u] += 1
            fdeg[v] += 1
            end[a], end[b] = b, a
            chosen.append((u, v))
            if rec(i + 1):
                return True
            chosen.pop()
            end[a], end[b] = u, v
            end[u], end[v] = a, b
            fdeg[u] -= 1
            fdeg[v] -= 1
        return rec(i + 1)

    if not rec(0):
        raise AssertionError(f"no linear forest with {target} edges")
    return tuple(chosen)


def max_linear_forest(g: Graph) -> tuple[int, LinearForestWitness]:
    """lf(g) and the lexicographically smallest optimal linear forest.

    The witness also yields a path cover with ``n - lf(g)`` paths
    (:meth:`LinearForestWitness.paths`).
    """
    value = linear_forest_number(g)
    witness = LinearForestWitness(_first_forest(g, value) if value else ())
    paths = witness.paths(g.n)
    if len(paths) != g.n - value:
        raise AssertionError("path cover size disagrees with linear forest size")
    return value, witness


def min_path_cover(g: Graph) -> list[list[int]]:
    """A minimum path cover (isolated vertices count as paths); has ``n - lf(g)`` paths."""
    return max_linear_forest(g)[1].paths(g.n)
