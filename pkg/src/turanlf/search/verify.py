"""Formula-versus-exhaustive comparison tables for the five extremal results."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .. import formulas
from .enumeration import EXHAUSTIVE_CAP, ConstraintSpec, _check_cap
from .extremal import Objective, extremal_profile

#: Parameter grids used by the acceptance suite, per theorem.
DEFAULT_RANGES = {
    "thm1.1": {"s": [1, 2, 3], "r": [2, 3]},
    "thm1.2": {"s": [1, 2], "r": [2, 3]},
    "thm1.3": {"s": [2, 3, 4], "r": [2, 3]},
    "thm1.4": {"s": [1, 2], "r": [3], "k": [3, 4]},
    "thm1.5": {"s": [1, 2, 3, 4], "r": [2, 3, 4]},
}


def search_setup(theorem: str, r: int, s: int, k: int | None = None) -> tuple[Objective, ConstraintSpec]:
    """The objective and forbidden family whose maximum the theorem evaluates."""
    if theorem == "thm1.1":
        return Objective("edges"), ConstraintSpec(clique_bound=r + 1, matching_bound=s)
    if theorem == "thm1.2":
        return Objective("cliques", r), ConstraintSpec(matching_bound=s)
    if theorem == "thm1.3":
        return Objective("cliques", r), ConstraintSpec(linforest_bound=s)
    if theorem == "thm1.4":
        if k is None:
            raise ValueError("thm1.4 needs k")
        return Objective("cliques", r), ConstraintSpec(clique_bound=k + 1, matching_bound=s)
    if theorem == "thm1.5":
        return Objective("edges"), ConstraintSpec(clique_bound=r + 1, linforest_bound=s)
    raise ValueError(f"unknown theorem id {theorem!r}")


@dataclass
class VerifyRow:
    theorem: str
    n: int
    r: int
    s: int
    k: int | None
    formula: int
    exhaustive: int
    agree: bool
    probe: bool
    witnesses: list[str] = field(default_factory=list)


@dataclass
class VerifyReport:
    theorem: str
    rows: list[VerifyRow]

    @property
    def passed(self) -> bool:
        return all(row.agree for row in self.rows if not row.probe)

    @property
    def failures(self) -> list[VerifyRow]:
        return [row for row in self.rows if not row.probe and not row.agree]

    @property
    def flagged(self) -> list[VerifyRow]:
        return [row for row in self.rows if row.probe and not row.agree]

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "passed": self.passed,
            "rows": [asdict(row) for row in self.rows],
        }

    def table(self) -> str:
        head = ["n", "r", "s", "k", "formula", "exhaustive", "status"]
        body = []
        for row in self.rows:
            status = "ok" if row.agree else ("PROBE-DIFF" if row.probe else "FAIL")
            if row.probe and row.agree:
                status = "probe-ok"
            body.append([row.n, row.r, row.s, "-" if row.k is None else row.k,
                         row.formula, row.exhaustive, status])
        widths = [max(len(str(x)) for x in col) for col in zip(head, *body)]
        lines = ["  ".join(str(x).rjust(w) for x, w in zip(line, widths)) for line in [head] + body]
        lines.append(f"{self.theorem}: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def verify_theorem(
    theorem: str,
    s_values: Iterable[int] | None = None,
    r_values: Iterable[int] | None = None,
    n_values: Sequence[int] | str = "auto",
    k_values: Iterable[int] | None = None,
    *,
    probe_low_n: bool = False,
    cap: int = 9,
    workers: int = 1,
) -> VerifyReport:
    """Compare the closed form with exhaustive search on a parameter grid.

    ``n_values="auto"`` means the theorem's window up to ``cap``.  With
    ``probe_low_n`` the rows are instead ``n`` in ``[s+1, 2s]`` (below the
    window); those rows are evaluated unchecked and never fail the report.
    """
    if theorem not in formulas.THEOREMS:
        raise ValueError(f"unknown theorem id {theorem!r}")
    _check_cap(cap, EXHAUSTIVE_CAP)
    defaults = DEFAULT_RANGES[theorem]
    s_list = list(s_values) if s_values is not None else defaults["s"]
    r_list = list(r_values) if r_values is not None else defaults["r"]
    k_list: list[int | None] = [None]
    if theorem == "thm1.4":
        k_list = list(k_values) if k_values is not None else defaults["k"]
    rows: list[VerifyRow] = []
    for k, r, s in product(k_list, r_list, s_list):
        if probe_low_n:
            ns = [n for n in range(s + 1, 2 * s + 1) if n <= cap]
        elif n_values == "auto":
            ns = list(range(formulas.min_n(theorem, s), cap + 1))
        else:
            ns = [n for n in n_values]
        if not ns:
            continue
        for n in ns:
            _check_cap(n, cap)
            if not probe_low_n and not formulas.in_window(theorem, n, r, s, k):
                raise formulas.ParameterWindowError(
                    f"{theorem}: (n={n}, r={r}, s={s}, k={k}) is outside the theorem's window")
        objective, cons = search_setup(theorem, r, s, k)
        prof = extremal_profile(max(ns), objective, cons, workers=workers, cap=cap, max_witnesses=20)
        for n in ns:
            rec = prof[n]
            want = formulas.evaluate(theorem, n, r, s, k, unchecked=probe_low_n)
            got = rec.value if rec.value is not None else 0
            rows.append(VerifyRow(theorem, n, r, s, k, want, got, want == got, probe_low_n,
                                  rec.witnesses if want != got else []))
    return VerifyReport(theorem, rows)
