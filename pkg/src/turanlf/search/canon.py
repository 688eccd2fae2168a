"""Canonical labelling front end (kernel-backed)."""
from __future__ import annotations

from .._backend import kernels
from .. import _pykernels
from ..graph import Graph, encode_graph6

_COMPILED_CANON_MAX = 32


def canonical_labeling(g: Graph) -> tuple[list[int], list[list[int]], list[int]]:
    """``(lab, generators, orbits)``; vertex ``lab[p]`` gets canonical label ``p``."""
    k = kernels if g.n <= _COMPILED_CANON_MAX else _pykernels
    return k.canon(g.adj, g.n)


def canonical_form(g: Graph) -> Graph:
    lab = canonical_labeling(g)[0]
    perm = [0] * g.n
    for p, v in enumerate(lab):
        perm[v] = p
    return g.relabel(perm)


def canonical_graph6(g: Graph) -> str:
    return encode_graph6(canonical_form(g))


def automorphism_orbits(g: Graph) -> list[int]:
    return canonical_labeling(g)[2]


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.edge_count == h.edge_count and canonical_form(g) == canonical_form(h)
