# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.  Same contracts as ``_pykernels``; graphs are sequences
of neighbourhood bitmasks, at most 64 vertices (32 for canonical labelling,
16 for augmentation children)."""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset

ctypedef unsigned long long u64

cdef enum:
    MAXN = 64
    MAXC = 32
    MAXGENS = 1024
    MAXAUG = 16

NAME = "cython"


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int pc(u64 x) nogil:
    return __builtin_popcountll(x)


cdef inline int lowidx(u64 x) nogil:
    return __builtin_ctzll(x)



cdef int load(object adj, int n, u64* out) except -1:
    cdef int i
    if n < 0 or n > MAXN:
        raise ValueError("order %d outside 0..%d" % (n, MAXN))
    for i in range(n):
        out[i] = <u64>adj[i]
    return 0


# -- cliques -------------------------------------------------------------

cdef u64 ccount(u64* adj, u64 cand, int depth) nogil:
    cdef u64 low
    cdef int v
    cdef u64 total = 0
    if depth == 1:
        return pc(cand)
    while cand:
        if pc(cand) < depth:
            break
        low = cand & (~cand + 1)
        v = lowidx(cand)
        cand ^= low
        total += ccount(adj, cand & adj[v], depth - 1)
    return total


cdef bint cfind(u64* adj, u64 cand, int depth) nogil:
    cdef u64 low
    cdef int v
    if depth <= 0:
        return True
    while cand:
        if pc(cand) < depth:
            return False
        low = cand & (~cand + 1)
        v = lowidx(cand)
        cand ^= low
        if cfind(adj, cand & adj[v], depth - 1):
            return True
    return False


def count_cliques(adj, int n, int r):
    cdef u64 a[MAXN]
    if r <= 0:
        raise ValueError("clique order must be >= 1")
    load(adj, n, a)
    if n == 0:
        return 0
    return ccount(a, (<u64>1 << n) - 1 if n < 64 else ~(<u64>0), r)


def has_clique(adj, int n, int q):
    cdef u64 a[MAXN]
    load(adj, n, a)
    return cfind(a, (<u64>1 << n) - 1 if n < 64 else ~(<u64>0), q)


def has_clique_in(adj, cand, int q):
    cdef u64 a[MAXN]
    cdef int n = len(adj)
    load(adj, n, a)
    return cfind(a, <u64>cand, q)


# -- matchings -----------------------------------------------------------

cdef struct MState:
    u64* adj
    int best
    int target
    bint done


cdef void mrec(MState* st, u64 avail, int cur) nogil:
    cdef u64 low, rest, nb, lu
    cdef int v
    while avail:
        v = lowidx(avail)
        if st.adj[v] & avail:
            break
        avail &= avail - 1
    if cur > st.best:
        st.best = cur
        if cur >= st.target:
            st.done = True
            return
    if not avail or cur + pc(avail) // 2 <= st.best:
        return
    low = avail & (~avail + 1)
    v = lowidx(avail)
    rest = avail ^ low
    nb = st.adj[v] & rest
    while nb:
        lu = nb & (~nb + 1)
        nb ^= lu
        mrec(st, rest ^ lu, cur + 1)
        if st.done:
            return
    mrec(st, rest, cur)


cdef int cmatching(u64* adj, int n, int stop) nogil:
    cdef MState st
    st.adj = adj
    st.best = 0
    st.target = n // 2 if stop <= 0 else min(stop, n // 2)
    st.done = False
    if n == 0:
        return 0
    mrec(&st, (<u64>1 << n) - 1 if n < 64 else ~(<u64>0), 0)
    return st.best


def matching_number(adj, int n, int stop=0):
    cdef u64 a[MAXN]
    load(adj, n, a)
    return cmatching(a, n, stop)


# -- linear forests --------------------------------------------------------

cdef struct LState:
    int n
    int m
    int* eu
    int* ev
    int fdeg[MAXN]
    int end[MAXN]
    int best
    int ub
    bint done


cdef int components(u64* adj, int n) nogil:
    cdef u64 seen = 0, frontier, low, nb
    cdef int v, comps = 0
    for v in range(n):
        if (seen >> v) & 1:
            continue
        comps += 1
        frontier = (<u64>1) << v
        seen |= frontier
        while frontier:
            low = frontier & (~frontier + 1)
            frontier ^= low
            nb = adj[lowidx(low)] & ~seen
            seen |= nb
            frontier |= nb
    return comps


cdef int lbound(LState* st, int i) nogil:
    cdef int cap[MAXN]
    cdef int k, u, v, cnt = 0, tot = 0
    memset(cap, 0, sizeof(int) * st.n)
    for k in range(i, st.m):
        u = st.eu[k]
        v = st.ev[k]
        if st.fdeg[u] < 2 and st.fdeg[v] < 2 and st.end[u] != v:
            cnt += 1
            cap[u] = 2 - st.fdeg[u]
            cap[v] = 2 - st.fdeg[v]
    for k in range(st.n):
        tot += cap[k]
    tot //= 2
    return cnt if cnt < tot else tot


cdef void lrec(LState* st, int i, int cur) nogil:
    cdef int u, v, a, b
    if cur > st.best:
        st.best = cur
        if cur >= st.ub:
            st.done = True
            return
    if i == st.m or cur + lbound(st, i) <= st.best:
        return
    u = st.eu[i]
    v = st.ev[i]
    if st.fdeg[u] < 2 and st.fdeg[v] < 2 and st.end[u] != v:
        a = st.end[u]
        b = st.end[v]
        st.fdeg[u] += 1
        st.fdeg[v] += 1
        st.end[a] = b
        st.end[b] = a
        lrec(st, i + 1, cur + 1)
        st.end[a] = u
        st.end[b] = v
        st.end[u] = a
        st.end[v] = b
        st.fdeg[u] -= 1
        st.fdeg[v] -= 1
        if st.done:
            return
    lrec(st, i + 1, cur)


cdef int clinear_forest(u64* adj, int n, int stop) except -1:
    cdef LState st
    cdef int u, v, m = 0
    cdef int* eu
    cdef int* ev
    cdef u64 rest
    for u in range(n):
        m += pc(adj[u])
    m //= 2
    if m == 0:
        return 0
    eu = <int*>malloc(sizeof(int) * m)
    ev = <int*>malloc(sizeof(int) * m)
    if eu == NULL or ev == NULL:
        free(eu)
        free(ev)
        raise MemoryError()
    m = 0
    for u in range(n):
        rest = adj[u] >> (u + 1) if u + 1 < 64 else 0
        v = u + 1
        while rest:
            if rest & 1:
                eu[m] = u
                ev[m] = v
                m += 1
            rest >>= 1
            v += 1
    st.n = n
    st.m = m
    st.eu = eu
    st.ev = ev
    for u in range(n):
        st.fdeg[u] = 0
        st.end[u] = u
    st.best = 0
    st.ub = n - components(adj, n)
    if stop > 0 and stop < st.ub:
        st.ub = stop
    st.done = False
    with nogil:
        lrec(&st, 0, 0)
    free(eu)
    free(ev)
    return st.best


def linear_forest_number(adj, int n, int stop=0):
    cdef u64 a[MAXN]
    load(adj, n, a)
    return clinear_forest(a, n, stop)


# -- canonical labelling -------------------------------------------------

cdef struct CState:
    int n
    u64 adj[MAXC]
    bint have_first
    int first[MAXC]
    u64 fcert[MAXC]
    int best[MAXC]
    u64 bcert[MAXC]
    int ngens
    unsigned char gens[MAXGENS][MAXC]


cdef CState CS


cdef void refine(CState* st, int* lab, int* cstart, int* ncells) nogil:
    cdef int n = st.n
    cdef int nlab[MAXC]
    cdef int ncs[MAXC + 1]
    cdef int cnt[MAXC]
    cdef int changed = 1
    cdef int ci, c, p, start, stop, nk, pos, cur, nxt, allsame
    cdef u64 wmask
    while changed:
        changed = 0
        ci = 0
        while ci < ncells[0]:
            wmask = 0
            for p in range(cstart[ci], cstart[ci + 1]):
                wmask |= (<u64>1) << lab[p]
            nk = 0
            pos = 0
            for c in range(ncells[0]):
                start = cstart[c]
                stop = cstart[c + 1]
                if stop - start == 1:
                    ncs[nk] = pos
                    nk += 1
                    nlab[pos] = lab[start]
                    pos += 1
                    continue
                allsame = 1
                for p in range(start, stop):
                    cnt[p] = pc(st.adj[lab[p]] & wmask)
                    if cnt[p] != cnt[start]:
                        allsame = 0
                if allsame:
                    ncs[nk] = pos
                    nk += 1
                    for p in range(start, stop):
                        nlab[pos] = lab[p]
                        pos += 1
                    continue
                changed = 1
                cur = -1
                while True:
                    nxt = MAXN + 1
                    for p in range(start, stop):
                        if cnt[p] > cur and cnt[p] < nxt:
                            nxt = cnt[p]
                    if nxt == MAXN + 1:
                        break
                    ncs[nk] = pos
                    nk += 1
                    for p in range(start, stop):
                        if cnt[p] == nxt:
                            nlab[pos] = lab[p]
                            pos += 1
                    cur = nxt
            for p in range(n):
                lab[p] = nlab[p]
            for c in range(nk):
                cstart[c] = ncs[c]
            cstart[nk] = n
            ncells[0] = nk
            ci += 1


cdef void make_cert(CState* st, int* lab, u64* cert) nogil:
    cdef int pos[MAXC]
    cdef int p, u
    cdef u64 a, row
    for p in range(st.n):
        pos[lab[p]] = p
    for p in range(st.n):
        a = st.adj[lab[p]]
        row = 0
        while a:
            u = lowidx(a)
            a &= a - 1
            row |= (<u64>1) << pos[u]
        cert[p] = row


cdef int cmp_cert(u64* x, u64* y, int n) nogil:
    cdef int p
    for p in range(n):
        if x[p] != y[p]:
            return 1 if x[p] > y[p] else -1
    return 0


cdef inline int uf_find(int* parent, int x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef void orbits_fixing(CState* st, int* fixed, int nfixed, int* parent) nogil:
    cdef int g, x, k, a, b, ok
    for x in range(st.n):
        parent[x] = x
    for g in range(st.ngens):
        ok = 1
        for k in range(nfixed):
            if st.gens[g][fixed[k]] != fixed[k]:
                ok = 0
                break
        if not ok:
            continue
        for x in range(st.n):
            a = uf_find(parent, x)
            b = uf_find(parent, st.gens[g][x])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b


cdef int add_gen(CState* st, int* src, int* dst) nogil:
    cdef int p
    if st.ngens >= MAXGENS:
        return -1
    for p in range(st.n):
        st.gens[st.ngens][src[p]] = <unsigned char>dst[p]
    st.ngens += 1
    return 0


cdef int crec(CState* st, int* lab_in, int* cstart_in, int ncells, int* fixed, int nfixed, bint onfirst) nogil:
    cdef int lab[MAXC]
    cdef int cstart[MAXC + 1]
    cdef int clab[MAXC]
    cdef int ccs[MAXC + 1]
    cdef u64 cert[MAXC]
    cdef int target[MAXC]
    cdef int tried[MAXC]
    cdef int parent[MAXC]
    cdef int n = st.n
    cdef int ti, tsize, k, j, p, q, v, ov, ntried = 0, res, c
    cdef bint child_first = onfirst, skip
    memcpy(lab, lab_in, sizeof(int) * n)
    memcpy(cstart, cstart_in, sizeof(int) * (ncells + 1))
    refine(st, lab, cstart, &ncells)
    if ncells == n:
        make_cert(st, lab, cert)
        if not st.have_first:
            st.have_first = True
            memcpy(st.first, lab, sizeof(int) * n)
            memcpy(st.best, lab, sizeof(int) * n)
            memcpy(st.fcert, cert, sizeof(u64) * n)
            memcpy(st.bcert, cert, sizeof(u64) * n)
            return 0
        if cmp_cert(cert, st.fcert, n) == 0:
            if add_gen(st, st.first, lab) < 0:
                return -1
            return 1
        c = cmp_cert(cert, st.bcert, n)
        if c == 0:
            if st.ngens < MAXGENS // 2:
                add_gen(st, st.best, lab)
            return 0
        if c > 0:
            memcpy(st.best, lab, sizeof(int) * n)
            memcpy(st.bcert, cert, sizeof(u64) * n)
        return 0
    ti = 0
    while cstart[ti + 1] - cstart[ti] == 1:
        ti += 1
    tsize = cstart[ti + 1] - cstart[ti]
    for k in range(tsize):
        target[k] = lab[cstart[ti] + k]
    for k in range(tsize):
        v = target[k]
        if ntried:
            orbits_fixing(st, fixed, nfixed, parent)
            ov = uf_find(parent, v)
            skip = False
            for j in range(ntried):
                if uf_find(parent, tried[j]) == ov:
                    skip = True
                    break
            if skip:
                continue
        # individualise v: cells before ti, [v], target - v, cells after ti
        p = 0
        q = 0
        for c in range(ti):
            ccs[q] = cstart[c]
            q += 1
        p = cstart[ti]
        memcpy(clab, lab, sizeof(int) * n)
        ccs[q] = p
        q += 1
        clab[p] = v
        p += 1
        ccs[q] = p
        q += 1
        for j in range(tsize):
            if target[j] != v:
                clab[p] = target[j]
                p += 1
        for c in range(ti + 1, ncells):
            ccs[q] = cstart[c]
            q += 1
        ccs[q] = n
        fixed[nfixed] = v
        res = crec(st, clab, ccs, ncells + 1, fixed, nfixed + 1, child_first)
        if res < 0:
            return -1
        child_first = False
        tried[ntried] = v
        ntried += 1
        if res == 1 and not onfirst:
            return 1
    return 0


cdef int ccanon(CState* st) nogil:
    cdef int lab[MAXC]
    cdef int cstart[MAXC + 1]
    cdef int fixed[MAXC]
    cdef int p
    for p in range(st.n):
        lab[p] = p
    cstart[0] = 0
    cstart[1] = st.n
    st.have_first = False
    st.ngens = 0
    return crec(st, lab, cstart, 1, fixed, 0, True)


cdef object canon_result(CState* st):
    cdef int parent[MAXC]
    cdef int g, x, a, b, n = st.n
    gens = [[st.gens[g][x] for x in range(n)] for g in range(st.ngens)]
    for x in range(n):
        parent[x] = x
    for g in range(st.ngens):
        for x in range(n):
            a = uf_find(parent, x)
            b = uf_find(parent, st.gens[g][x])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    orbits = [uf_find(parent, x) for x in range(n)]
    return [st.best[x] for x in range(n)], gens, orbits


def canon(adj, int n):
    """``(lab, gens, orbits)``; see ``_pykernels.canon``."""
    if n == 0:
        return [], [], []
    if n > MAXC:
        raise ValueError("canonical labelling supports at most %d vertices" % MAXC)
    CS.n = n
    load(adj, n, CS.adj)
    if ccanon(&CS) < 0:
        raise RuntimeError("automorphism generator table overflow")
    return canon_result(&CS)


# -- orderly augmentation --------------------------------------------------

def augment(adj, int n, gens, int clique_q=0, int match_s=0, int lf_s=0, bint want_aut=False):
    """See ``_pykernels.augment``."""
    cdef u64 a[MAXN]
    cdef u64 child[MAXN]
    cdef int deg[MAXN]
    cdef int cdeg[MAXN]
    cdef long long inv[MAXN]
    cdef int pos[MAXN]
    cdef int ggen[MAXC]
    cdef int N = n + 1
    cdef int size, mask, im, x, u, d, ok, g, ngen, nu_p = 0, lf_p = 0, ntie, mvert
    cdef long long K, s, mx
    cdef u64 rest
    cdef int* parent
    cdef int* img
    if N > MAXAUG:
        raise ValueError("augmentation supports children of order <= %d" % MAXAUG)
    load(adj, n, a)
    for u in range(n):
        deg[u] = pc(a[u])
    if match_s:
        nu_p = cmatching(a, n, 0)
    if lf_s:
        lf_p = clinear_forest(a, n, 0)
    K = N * N
    size = 1 << n
    parent = <int*>malloc(sizeof(int) * size)
    img = <int*>malloc(sizeof(int) * MAXC)
    if parent == NULL or img == NULL:
        free(parent)
        free(img)
        raise MemoryError()
    for mask in range(size):
        parent[mask] = mask
    ngen = len(gens)
    for g in range(ngen):
        gg = gens[g]
        for x in range(n):
            img[x] = gg[x]
        for mask in range(size):
            im = 0
            rest = <u64>mask
            while rest:
                im |= 1 << img[lowidx(rest)]
                rest &= rest - 1
            x = uf_find(parent, mask)
            u = uf_find(parent, im)
            if x != u:
                if x < u:
                    parent[u] = x
                else:
                    parent[x] = u
    out = []
    try:
        for mask in range(size):
            if uf_find(parent, mask) != mask:
                continue
            d = pc(<u64>mask)
            ok = 1
            for u in range(n):
                if deg[u] + ((mask >> u) & 1) > d:
                    ok = 0
                    break
            if not ok:
                continue
            if clique_q and cfind(a, <u64>mask, clique_q - 1):
                continue
            for u in range(n):
                child[u] = a[u] | ((<u64>((mask >> u) & 1)) << n)
            child[n] = <u64>mask
            if match_s and nu_p >= match_s and cmatching(child, N, match_s + 1) > match_s:
                continue
            if lf_s and lf_p + 2 >= lf_s and clinear_forest(child, N, lf_s) >= lf_s:
                continue
            for u in range(n):
                cdeg[u] = deg[u] + ((mask >> u) & 1)
            cdeg[n] = d
            mx = -1
            for x in range(N):
                s = 0
                rest = child[x]
                while rest:
                    s += cdeg[lowidx(rest)]
                    rest &= rest - 1
                inv[x] = cdeg[x] * K + s
                if inv[x] > mx:
                    mx = inv[x]
            if inv[n] < mx:
                continue
            ntie = 0
            for x in range(N):
                if inv[x] == mx:
                    ntie += 1
            cg = None
            if ntie > 1 or want_aut:
                CS.n = N
                for x in range(N):
                    CS.adj[x] = child[x]
                if ccanon(&CS) < 0:
                    raise RuntimeError("automorphism generator table overflow")
                if ntie > 1:
                    for x in range(N):
                        pos[CS.best[x]] = x
                    mvert = -1
                    for x in range(N):
                        if inv[x] == mx and (mvert < 0 or pos[x] > pos[mvert]):
                            mvert = x
                    orbs = canon_result(&CS)[2]
                    if orbs[mvert] != orbs[n]:
                        continue
                if want_aut:
                    cg = [[CS.gens[g][x] for x in range(N)] for g in range(CS.ngens)]
            out.append((tuple([child[x] for x in range(N)]), cg))
    finally:
        free(parent)
        free(img)
    return out
