"""Pure-Python kernels.  Mirrors ``_ckernels.pyx`` operation for operation.

Graphs are passed as a sequence of ``n`` neighbourhood bitmasks.  The
canonical labelling and the augmentation step must agree bit-for-bit with
the compiled version; ``tests/test_kernels.py`` checks this.
"""
from __future__ import annotations

NAME = "python"


def _pc(x):
    return bin(x).count("1")


# -- cliques -------------------------------------------------------------


def _count(adj, cand, depth):
    if depth == 1:
        return _pc(cand)
    total = 0
    while cand:
        if _pc(cand) < depth:
            break
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        total += _count(adj, cand & adj[v], depth - 1)
    return total


def count_cliques(adj, n, r):
    if r <= 0:
        raise ValueError("clique order must be >= 1")
    return _count(adj, (1 << n) - 1, r)


def _find(adj, cand, depth):
    if depth == 0:
        return True
    while cand:
        if _pc(cand) < depth:
            return False
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        if _find(adj, cand & adj[v], depth - 1):
            return True
    return False


def has_clique(adj, n, q):
    """True iff the graph contains K_q (``q == 0`` is always contained)."""
    return _find(adj, (1 << n) - 1, q)


def has_clique_in(adj, cand, q):
    return _find(adj, cand, q)


# -- matchings -----------------------------------------------------------


class _Stop(Exception):
    pass


def matching_number(adj, n, stop=0):
    """Exact matching number by branch and bound.

    With ``stop > 0`` the search returns as soon as a matching of size
    ``stop`` is found, so the result is exact only when it is below ``stop``.
    """
    best = [0]
    target = n // 2 if stop <= 0 else min(stop, n // 2)

    def rec(avail, cur):
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            if adj[v] & avail:
                break
            avail ^= low
        if cur > best[0]:
            best[0] = cur
            if cur >= target:
                raise _Stop
        if not avail or cur + _pc(avail) // 2 <= best[0]:
            return
        low = avail & -avail
        v = low.bit_length() - 1
        rest = avail ^ low
        nb = adj[v] & rest
        while nb:
            lu = nb & -nb
            nb ^= lu
            rec(rest ^ lu, cur + 1)
        rec(rest, cur)

    try:
        rec((1 << n) - 1, 0)
    except _Stop:
        pass
    return best[0]


# -- linear forests --------------------------------------------------------


def _components(adj, n):
    seen = 0
    comps = 0
    for v in range(n):
        if seen >> v & 1:
            continue
        comps += 1
        frontier = 1 << v
        seen |= frontier
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nb = adj[low.bit_length() - 1] & ~seen
            seen |= nb
            frontier |= nb
    return comps


def linear_forest_number(adj, n, stop=0):
    """Maximum edge count of a linear-forest subgraph (branch and bound over edges).

    With ``stop > 0`` the search returns once a forest with ``stop`` edges is
    found; the result is then exact only when below ``stop``.
    """
    edges = []
    for u in range(n):
        rest = adj[u] >> (u + 1)
        v = u + 1
        while rest:
            if rest & 1:
                edges.append((u, v))
            rest >>= 1
            v += 1
    m = len(edges)
    if m == 0:
        return 0
    ub_global = n - _components(adj, n)
    if stop > 0:
        ub_global = min(ub_global, stop)
    fdeg = [0] * n
    end = list(range(n))
    best = [0]

    def bound(i):
        cap = [0] * n
        cnt = 0
        for k in range(i, m):
            u, v = edges[k]
            if fdeg[u] < 2 and fdeg[v] < 2 and end[u] != v:
                cnt += 1
                cap[u] = 2 - fdeg[u]
                cap[v] = 2 - fdeg[v]
        return min(cnt, sum(cap) // 2)

    def rec(i, cur):
        if cur > best[0]:
            best[0] = cur
            if cur >= ub_global:
                raise _Stop
        if i == m or cur + bound(i) <= best[0]:
            return
        u, v = edges[i]
        if fdeg[u] < 2 and fdeg[v] < 2 and end[u] != v:
            a, b = end[u], end[v]
            fdeg[u] += 1
            fdeg[v] += 1
            end[a], end[b] = b, a
            rec(i + 1, cur + 1)
            end[a], end[b] = u, v
            end[u], end[v] = a, b
            fdeg[u] -= 1
            fdeg[v] -= 1
        rec(i + 1, cur)

    try:
        rec(0, 0)
    except _Stop:
        pass
    return best[0]


# -- canonical labelling -------------------------------------------------


def _refine(adj, cells):
    changed = True
    while changed:
        changed = False
        ci = 0
        while ci < len(cells):
            wmask = 0
            for x in cells[ci]:
                wmask |= 1 << x
            new_cells = []
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                counts = [_pc(adj[x] & wmask) for x in cell]
                c0 = counts[0]
                if all(c == c0 for c in counts):
                    new_cells.append(cell)
                    continue
                changed = True
                for c in sorted(set(counts)):
                    new_cells.append([x for x, cx in zip(cell, counts) if cx == c])
            cells = new_cells
            ci += 1
    return cells


def _cert(adj, lab):
    n = len(lab)
    pos = [0] * n
    for p, v in enumerate(lab):
        pos[v] = p
    rows = []
    for v in lab:
        a = adj[v]
        row = 0
        for u in range(n):
            if a >> u & 1:
                row |= 1 << pos[u]
        rows.append(row)
    return tuple(rows)


def _uf_find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _orbits(gens, n, fixed=()):
    parent = list(range(n))
    for g in gens:
        if any(g[x] != x for x in fixed):
            continue
        for x in range(n):
            a, b = _uf_find(parent, x), _uf_find(parent, g[x])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [_uf_find(parent, x) for x in range(n)]


def canon(adj, n):
    """Canonical labelling by refinement + individualisation.

    Returns ``(lab, gens, orbits)``: ``lab[p]`` is the vertex receiving
    canonical label ``p``; ``gens`` generate the automorphism group;
    ``orbits[v]`` is the least vertex in the orbit of ``v``.
    """
    if n == 0:
        return [], [], []
    st = {"first": None, "fcert": None, "best": None, "bcert": None}
    gens = []

    def rec(cells, fixed, onfirst):
        cells = _refine(adj, cells)
        if len(cells) == n:
            lab = [c[0] for c in cells]
            cert = _cert(adj, lab)
            if st["first"] is None:
                st["first"] = st["best"] = lab
                st["fcert"] = st["bcert"] = cert
                return 0
            if cert == st["fcert"]:
                g = [0] * n
                for a, b in zip(st["first"], lab):
                    g[a] = b
                gens.append(g)
                return 1
            if cert == st["bcert"]:
                g = [0] * n
                for a, b in zip(st["best"], lab):
                    g[a] = b
                gens.append(g)
                return 0
            if cert > st["bcert"]:
                st["best"], st["bcert"] = lab, cert
            return 0
        ti = 0
        while len(cells[ti]) == 1:
            ti += 1
        target = cells[ti]
        tried = []
        child_first = onfirst
        for v in target:
            if tried:
                orb = _orbits(gens, n, fixed)
                ov = orb[v]
                if any(orb[w] == ov for w in tried):
                    continue
            newcells = cells[:ti] + [[v], [x for x in target if x != v]] + cells[ti + 1:]
            res = rec(newcells, fixed + [v], child_first)
            child_first = False
            tried.append(v)
            if res and not onfirst:
                return 1
        return 0

    rec([list(range(n))], [], True)
    return list(st["best"]), gens, _orbits(gens, n)


# -- orderly augmentation --------------------------------------------------


def _subset_reps(n, gens):
    size = 1 << n
    if not gens:
        return range(size)
    parent = list(range(size))
    for g in gens:
        img = [1 << g[x] for x in range(n)]
        for mask in range(size):
            im = 0
            rest = mask
            while rest:
                low = rest & -rest
                im |= img[low.bit_length() - 1]
                rest ^= low
            a, b = _uf_find(parent, mask), _uf_find(parent, im)
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [mask for mask in range(size) if _uf_find(parent, mask) == mask]


def augment(adj, n, gens, clique_q=0, match_s=0, lf_s=0, want_aut=False):
    """Children of ``adj`` (order ``n``) in the canonical-augmentation tree.

    One child per Aut-orbit of neighbourhoods for the new vertex ``n``,
    kept iff it satisfies the constraints (no K_q; matching number <=
    match_s; linear-forest number < lf_s; 0 disables) and the new vertex
    lies in the orbit of the canonical deletion vertex.  Returns a list of
    ``(child_adj, child_gens_or_None)``.
    """
    N = n + 1
    deg = [_pc(a) for a in adj]
    nu_p = matching_number(adj, n) if match_s else 0
    lf_p = linear_forest_number(adj, n) if lf_s else 0
    K = N * N
    out = []
    for mask in _subset_reps(n, gens):
        d = _pc(mask)
        ok = True
        for u in range(n):
            if deg[u] + (mask >> u & 1) > d:
                ok = False
                break
        if not ok:
            continue
        if clique_q and _find(adj, mask, clique_q - 1):
            continue
        child = [a | ((mask >> u & 1) << n) for u, a in enumerate(adj)]
        child.append(mask)
        if match_s and nu_p >= match_s and matching_number(child, N, match_s + 1) > match_s:
            continue
        if lf_s and lf_p + 2 >= lf_s and linear_forest_number(child, N, lf_s) >= lf_s:
            continue
        cdeg = deg[:] + [d]
        for u in range(n):
            cdeg[u] += mask >> u & 1
        inv = []
        for x in range(N):
            s = 0
            rest = child[x]
            while rest:
                low = rest & -rest
                s += cdeg[low.bit_length() - 1]
                rest ^= low
            inv.append(cdeg[x] * K + s)
        mx = max(inv)
        if inv[n] < mx:
            continue
        ties = [x for x in range(N) if inv[x] == mx]
        cg = None
        if len(ties) > 1:
            lab, cg, orb = canon(child, N)
            pos = [0] * N
            for p, v in enumerate(lab):
                pos[v] = p
            m = max(ties, key=lambda x: pos[x])
            if orb[m] != orb[n]:
                continue
        elif want_aut:
            cg = canon(child, N)[1]
        out.append((tuple(child), cg if want_aut else None))
    return out
