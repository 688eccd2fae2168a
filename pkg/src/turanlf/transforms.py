"""Shifting, strong-shifting, k-closure and strong-closure."""
from __future__ import annotations

import random
from typing import Iterable, Sequence

from .graph import Coloring, Graph, GraphError


def _check_pair(g: Graph, i: int, j: int) -> None:
    if not (0 <= i < j < g.n):
        raise GraphError(f"shift needs 0 <= i < j < n (got i={i}, j={j}, n={g.n})")


def _apply_moves(g: Graph, i: int, j: int, moved: int) -> Graph:
    # every moved edge {j,k} becomes {i,k}; targets are distinct because the k are
    if not moved:
        return g
    adj = list(g.adj)
    adj[j] &= ~moved
    adj[i] |= moved
    rest = moved
    while rest:
        low = rest & -rest
        k = low.bit_length() - 1
        adj[k] = (adj[k] & ~(1 << j)) | (1 << i)
        rest ^= low
    out = Graph(g.n, adj)
    assert out.edge_count == g.edge_count, "shift changed the edge count"
    return out


def shift(g: Graph, i: int, j: int) -> Graph:
    """S_ij: each edge {j,k} with k != i becomes {i,k} unless {i,k} is already an edge.

    Targets are tested against the edge set of ``g`` (all edges move at once).
    """
    _check_pair(g, i, j)
    moved = g.adj[j] & ~g.adj[i] & ~(1 << i)
    return _apply_moves(g, i, j, moved)


def strong_shift(g: Graph, i: int, j: int, coloring: Coloring) -> Graph:
    """S'_ij: like :func:`shift`, but {j,k} moves only when k and i have different colours."""
    _check_pair(g, i, j)
    coloring.validate(g)
    ci = coloring[i]
    other = 0
    for k in range(g.n):
        if coloring[k] != ci:
            other |= 1 << k
    moved = g.adj[j] & ~g.adj[i] & other
    return _apply_moves(g, i, j, moved)


def ascending_pairs(n: int) -> list[tuple[int, int]]:
    """Default sweep order: ascending j, then ascending i."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def full_shift(
    g: Graph,
    strong: bool = False,
    coloring: Coloring | None = None,
    pair_order: Sequence[tuple[int, int]] | None = None,
) -> Graph:
    """Apply every pair operation in sweeps until a whole sweep changes nothing.

    Terminates because each effective move lowers the sum of edge endpoint labels.
    """
    if strong:
        if coloring is None:
            raise GraphError("strong shifting needs a colouring")
        coloring.validate(g)
    pairs = list(pair_order) if pair_order is not None else ascending_pairs(g.n)
    while True:
        changed = False
        for i, j in pairs:
            h = strong_shift(g, i, j, coloring) if strong else shift(g, i, j)
            if h != g:
                changed = True
                g = h
        if not changed:
            return g


def is_shifted(g: Graph, strong: bool = False, coloring: Coloring | None = None) -> bool:
    """True iff ``g`` is a fixpoint of every pair operation."""
    for i, j in ascending_pairs(g.n):
        h = strong_shift(g, i, j, coloring) if strong else shift(g, i, j)
        if h != g:
            return False
    return True


def shift_order_diagnostic(
    g: Graph,
    strong: bool = False,
    coloring: Coloring | None = None,
    seeds: Iterable[int] = (0, 1, 2),
) -> dict[str, Graph]:
    """Fixpoints of full shifting under several sweep orders.

    Keys are ``"ascending"``, ``"descending"`` and ``"random:<seed>"``.
    Differing values show that the fixpoint depends on the order.
    """
    base = ascending_pairs(g.n)
    out = {
        "ascending": full_shift(g, strong, coloring, base),
        "descending": full_shift(g, strong, coloring, base[::-1]),
    }
    for seed in seeds:
        order = base[:]
        random.Random(seed).shuffle(order)
        out[f"random:{seed}"] = full_shift(g, strong, coloring, order)
    return out


def _close(g: Graph, eligible, rng: random.Random | None) -> Graph:
    adj = list(g.adj)
    deg = g.degrees()
    while True:
        cands = [
            (u, v)
            for u in range(g.n)
            for v in range(u + 1, g.n)
            if not adj[u] >> v & 1 and eligible(u, v, deg[u] + deg[v])
        ]
        if not cands:
            return Graph(g.n, adj)
        u, v = cands[0] if rng is None else rng.choice(cands)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        deg[u] += 1
        deg[v] += 1


def closure(g: Graph, k: int, rng: random.Random | None = None) -> Graph:
    """cl_k(g): join non-adjacent pairs with degree sum >= k until none remain.

    ``rng`` picks the next pair at random instead of the lexicographically first;
    the result does not depend on it.
    """
    if k < 0:
        raise ValueError("closure threshold must be non-negative")
    return _close(g, lambda u, v, d: d >= k, rng)


def strong_closure(g: Graph, s: int, coloring: Coloring, rng: random.Random | None = None) -> Graph:
    """Like :func:`closure` with threshold ``s``, restricted to pairs of different colours."""
    coloring.validate(g)
    return _close(g, lambda u, v, d: d >= s and coloring[u] != coloring[v], rng)
