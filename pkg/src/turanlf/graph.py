"""Simple undirected graphs stored as per-vertex neighbourhood bitmasks.

Vertices are ``0 .. n-1``.  ``Graph.adj[v]`` is an ``int`` whose bit ``u`` is
set iff ``u ~ v``.  Graph values are immutable; every "mutation" returns a new
graph and re-validates symmetry and irreflexivity.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

#: Largest order accepted by the graph type; the compiled kernels use 64-bit words.
MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph data or an out-of-range vertex."""


class Graph6Error(ValueError):
    """Malformed graph6 text."""


def _popcount(x: int) -> int:
    return bin(x).count("1")


class Graph:
    __slots__ = ("n", "adj", "_m")

    def __init__(self, n: int, adj: Sequence[int] | None = None, *, check: bool = True):
        if n < 0 or n > MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        self.n = n
        self.adj: tuple[int, ...] = tuple(adj) if adj is not None else (0,) * n
        if check:
            self._validate()
        self._m = sum(_popcount(a) for a in self.adj) // 2

    def _validate(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, a in enumerate(self.adj):
            if a & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside the graph")
            if a >> v & 1:
                raise GraphError(f"self-loop at {v}")
            rest = a
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
                rest ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, check=False)

    # -- basic queries -------------------------------------------------

    @property
    def edge_count(self) -> int:
        return self._m

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return _popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [_popcount(a) for a in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return [u for u in range(self.n) if self.adj[v] >> u & 1]

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    out.append((u, v))
                rest >>= 1
                v += 1
        return out

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if not self.adj[u] >> v & 1:
                    yield (u, v)

    def _check_vertex(self, *vs: int) -> None:
        for v in vs:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} out of range for n={self.n}")

    # -- derived graphs ------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u, v)
        if u == v:
            raise GraphError(f"self-loop at {u}")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, adj)

    def remove_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u, v)
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, adj)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` is renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabelling is not a permutation")
        adj = [0] * self.n
        for v in range(self.n):
            a = 0
            for u in range(self.n):
                if self.adj[v] >> u & 1:
                    a |= 1 << perm[u]
            adj[perm[v]] = a
        return Graph(self.n, adj)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, vertices renumbered in the given order."""
        self._check_vertex(*vertices)
        pos = {v: i for i, v in enumerate(vertices)}
        edges = [(pos[u], pos[v]) for u, v in self.edges() if u in pos and v in pos]
        return Graph.from_edges(len(vertices), edges)

    def with_isolated(self, k: int) -> "Graph":
        """Append ``k`` isolated vertices."""
        return Graph(self.n + k, self.adj + (0,) * k, check=False)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, [(~a & full) & ~(1 << v) for v, a in enumerate(self.adj)], check=False)

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> colour id.  ``proper`` is a claim checked by :meth:`validate`."""

    classes: tuple[int, ...]
    proper: bool = False

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(self.classes))
        if any(c < 0 for c in self.classes):
            raise GraphError("colour ids must be non-negative")

    def __getitem__(self, v: int) -> int:
        return self.classes[v]

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def num_colors(self) -> int:
        return len(set(self.classes))

    def is_proper_for(self, g: Graph) -> bool:
        return all(self.classes[u] != self.classes[v] for u, v in g.edges())

    def validate(self, g: Graph) -> None:
        """Raise unless the colouring is total on ``g`` (and proper, if flagged)."""
        if len(self.classes) != g.n:
            raise GraphError(f"colouring covers {len(self.classes)} vertices, graph has {g.n}")
        if self.proper and not self.is_proper_for(g):
            raise GraphError("colouring flagged proper but an edge is monochromatic")


# -- constructors --------------------------------------------------------


def empty_graph(k: int) -> Graph:
    if k < 0:
        raise GraphError("vertex count must be non-negative")
    return Graph(k)


def complete_graph(k: int) -> Graph:
    return empty_graph(k).complement()


def path_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def complete_multipartite(part_sizes: Sequence[int]) -> tuple[Graph, Coloring]:
    """Complete multipartite graph, vertices numbered part by part, with its part colouring."""
    if any(p < 0 for p in part_sizes):
        raise GraphError("part sizes must be non-negative")
    colors: list[int] = []
    for c, size in enumerate(part_sizes):
        colors.extend([c] * size)
    n = len(colors)
    if n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} exceeds {MAX_VERTICES}")
    masks = [0] * len(part_sizes)
    for v, c in enumerate(colors):
        masks[c] |= 1 << v
    full = (1 << n) - 1
    adj = [full & ~masks[c] for c in colors]
    return Graph(n, adj, check=False), Coloring(tuple(colors), proper=True)


def turan_parts(n: int, r: int) -> list[int]:
    """Part sizes of T(n, r), larger parts first."""
    if r < 1:
        raise GraphError("Turán graph needs r >= 1")
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    q, rem = divmod(n, r)
    return [q + 1] * rem + [q] * (r - rem)


def turan_graph(n: int, r: int) -> Graph:
    return complete_multipartite(turan_parts(n, r))[0]


def join(g: Graph, h: Graph) -> Graph:
    """``g ∨ h``: vertices of ``g`` first, then those of ``h`` shifted by ``g.n``."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} exceeds {MAX_VERTICES}")
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    adj = [a | hmask for a in g.adj] + [(a << g.n) | gmask for a in h.adj]
    return Graph(n, adj, check=False)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, list(g.adj) + [a << g.n for a in h.adj])


def extremal_construction(n: int, r: int, s: int) -> list[Graph]:
    """The two {K_{r+1}, L_{n,s}}-free candidates on ``n`` vertices.

    ``[T(s, r) + (n - s) isolated vertices, T(m, r-1) ∨ E_{n-m}]`` with
    ``m = (s - 1) // 2``.
    """
    if r < 2 or s < 1 or n < 2 * s + 1:
        raise GraphError(f"need n >= 2s+1, r >= 2, s >= 1 (got n={n}, r={r}, s={s})")
    m = (s - 1) // 2
    first = turan_graph(s, r).with_isolated(n - s)
    second = join(turan_graph(m, r - 1), empty_graph(n - m))
    return [first, second]


def greedy_coloring(g: Graph) -> Coloring:
    """Proper colouring, vertices visited by descending degree (ties: lower index first)."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    colors = [-1] * g.n
    for v in order:
        used = {colors[u] for u in g.neighbors(v) if colors[u] >= 0}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return Coloring(tuple(colors), proper=True)


# -- graph6 --------------------------------------------------------------

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> sh & 63)) for sh in (12, 6, 0))
    return "~~" + "".join(chr(63 + (n >> sh & 63)) for sh in (30, 24, 18, 12, 6, 0))


def encode_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        a = g.adj[j]
        for i in range(j):
            bits.append(a >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k:k + 6]:
            x = x << 1 | b
        body.append(chr(63 + x))
    return _encode_n(g.n) + "".join(body)


def decode_graph6(text: str) -> Graph:
    s = text.strip("\r\n")
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside graph6 range 63..126")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise Graph6Error("truncated 8-byte size header")
        n, pos = 0, 8
        for x in vals[2:8]:
            n = n << 6 | x
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated 4-byte size header")
        n, pos = 0, 4
        for x in vals[1:4]:
            n = n << 6 | x
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph6 order {n} exceeds the {MAX_VERTICES}-vertex cap")
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    body = vals[pos:]
    if len(body) < need:
        raise Graph6Error(f"graph6 body too short: {len(body)} bytes, need {need}")
    if len(body) > need:
        raise Graph6Error(f"trailing data after graph6 body ({len(body) - need} extra bytes)")
    pad = need * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("non-zero padding bits")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, adj, check=False)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line; errors carry the line number."""
    for lineno, line in enumerate(lines, 1):
        text = line.strip()
        if not text:
            continue
        try:
            yield lineno, decode_graph6(text)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from exc
