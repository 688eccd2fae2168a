"""Closed forms: Turán numbers, clique counts of Turán graphs, and the five extremal values.

Each evaluator enforces the parameter window under which the value is
claimed; pass ``unchecked=True`` to evaluate the expression anyway.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graph import turan_parts


class ParameterWindowError(ValueError):
    """Parameters outside the range where a formula is claimed."""


@dataclass(frozen=True)
class FormulaParams:
    n: int
    r: int
    s: int
    k: int | None = None

    def __post_init__(self):
        for name in ("n", "r", "s", "k"):
            val = getattr(self, name)
            if val is not None and val < 0:
                raise ParameterWindowError(f"{name} must be non-negative")


def turan_number(n: int, r: int) -> int:
    """t(n, r), the edge count of the Turán graph T(n, r)."""
    if r < 1:
        raise ParameterWindowError("t(n, r) needs r >= 1")
    if n < 0:
        raise ParameterWindowError("t(n, r) needs n >= 0")
    parts = turan_parts(n, r)
    return (n * n - sum(p * p for p in parts)) // 2


def elementary_symmetric(values: list[int], r: int) -> int:
    """e_r(values) by the standard one-pass recurrence."""
    e = [1] + [0] * r
    for x in values:
        for j in range(r, 0, -1):
            e[j] += e[j - 1] * x
    return e[r]


def turan_clique_count(t: int, k: int, r: int) -> int:
    """Number of K_r in T(t, k): the r-th elementary symmetric polynomial of its part sizes."""
    if k < 1 or r < 1:
        raise ParameterWindowError("need k >= 1 and r >= 1")
    if t < 0:
        raise ParameterWindowError("need t >= 0")
    if r > k:
        return 0
    return elementary_symmetric(turan_parts(t, k), r)


def _window(ok: bool, unchecked: bool, msg: str) -> None:
    if not ok and not unchecked:
        raise ParameterWindowError(msg)


def ex_clique_matching(n: int, r: int, s: int, unchecked: bool = False) -> int:
    """Maximum edges with no K_{r+1} and no M_{s+1}."""
    _window(n >= 2 * s + 1 and r >= 2 and s >= 0, unchecked, f"need n >= 2s+1, r >= 2 (n={n}, r={r}, s={s})")
    return max(turan_number(2 * s + 1, r), turan_number(s, r - 1) + (n - s) * s)


def gex_matching(n: int, r: int, s: int, unchecked: bool = False) -> int:
    """Maximum number of K_r with no M_{s+1}."""
    _window(n >= 2 * s + 1 and r >= 2 and s >= 0, unchecked, f"need n >= 2s+1, r >= 2 (n={n}, r={r}, s={s})")
    return max(comb(2 * s + 1, r), comb(s, r) + (n - s) * comb(s, r - 1))


def gex_linear_forest(n: int, r: int, s: int, unchecked: bool = False) -> int:
    """Maximum number of K_r with no linear forest of ``s`` edges."""
    _window(n >= s + 1 and r >= 2 and s >= 1, unchecked, f"need n >= s+1, r >= 2, s >= 1 (n={n}, r={r}, s={s})")
    hi = (s + 2) // 2  # ceil((s+1)/2)
    lo = (s - 1) // 2
    return max(comb(s, r), comb(hi, r) + (n - hi) * comb(lo, r - 1))


def gex_clique_matching(n: int, k: int, r: int, s: int, unchecked: bool = False) -> int:
    """Maximum number of K_r with no K_{k+1} and no M_{s+1}."""
    _window(n >= 2 * s + 1 and k >= r >= 3 and s >= 0, unchecked,
            f"need n >= 2s+1, k >= r >= 3 (n={n}, k={k}, r={r}, s={s})")
    first = turan_clique_count(2 * s + 1, k, r)
    second = turan_clique_count(s, k - 1, r) + (n - s) * turan_clique_count(s, k - 1, r - 1)
    return max(first, second)


def ex_clique_linear_forest(n: int, r: int, s: int, unchecked: bool = False) -> int:
    """Claimed maximum edges with no K_{r+1} and no linear forest of ``s`` edges.

    ``max{t(s, r), t(m, r-1) + (n-m) m}`` with ``m = (s-1) // 2``; the two
    terms are the edge counts of :func:`turanlf.graph.extremal_construction`.
    """
    _window(n >= 2 * s + 1 and r >= 2 and s >= 1, unchecked, f"need n >= 2s+1, r >= 2, s >= 1 (n={n}, r={r}, s={s})")
    m = (s - 1) // 2
    return max(turan_number(s, r), turan_number(m, r - 1) + (n - m) * m)


THEOREMS = ("thm1.1", "thm1.2", "thm1.3", "thm1.4", "thm1.5")


def evaluate(theorem: str, n: int, r: int, s: int, k: int | None = None, unchecked: bool = False) -> int:
    """Dispatch by theorem id (``thm1.1`` .. ``thm1.5``)."""
    if theorem == "thm1.1":
        return ex_clique_matching(n, r, s, unchecked)
    if theorem == "thm1.2":
        return gex_matching(n, r, s, unchecked)
    if theorem == "thm1.3":
        return gex_linear_forest(n, r, s, unchecked)
    if theorem == "thm1.4":
        if k is None:
            raise ParameterWindowError("thm1.4 needs k")
        return gex_clique_matching(n, k, r, s, unchecked)
    if theorem == "thm1.5":
        return ex_clique_linear_forest(n, r, s, unchecked)
    raise ValueError(f"unknown theorem id {theorem!r}; expected one of {', '.join(THEOREMS)}")


def in_window(theorem: str, n: int, r: int, s: int, k: int | None = None) -> bool:
    try:
        evaluate(theorem, n, r, s, k)
    except ParameterWindowError:
        return False
    return True


def min_n(theorem: str, s: int) -> int:
    """Smallest host order allowed by the theorem's window."""
    return s + 1 if theorem == "thm1.3" else 2 * s + 1
