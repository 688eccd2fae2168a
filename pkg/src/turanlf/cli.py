"""Command-line front end: ``turanlf <command> ...``.

Exit codes: 0 success, 2 usage error (bad flags, parameters outside a
formula's window, malformed graph6, exhaustive cap exceeded), 3 a
verification run found an in-window disagreement.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Iterable, Sequence

from . import formulas
from .freeness import (
    clique_number,
    count_cliques,
    is_clique_free,
    is_linear_forest_free,
    is_matching_free,
    max_linear_forest,
    max_matching,
)
from .graph import (
    Coloring,
    Graph,
    Graph6Error,
    GraphError,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    empty_graph,
    encode_graph6,
    extremal_construction,
    greedy_coloring,
    path_graph,
    petersen_graph,
    read_graph6_lines,
    turan_graph,
)
from .search import (
    EXHAUSTIVE_CAP,
    LEMMAS,
    CapExceeded,
    ConstraintSpec,
    Objective,
    enumerate_graphs,
    extremal_search,
    lemma_fuzz,
    level_counts,
    verify_theorem,
)
from .transforms import closure, full_shift, shift, shift_order_diagnostic, strong_closure, strong_shift

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY_FAILED = 3


class UsageError(Exception):
    pass


# -- argument helpers ------------------------------------------------------


def parse_int_list(text: str) -> list[int]:
    """``"1..3"`` -> [1, 2, 3]; ``"2,5"`` -> [2, 5]; ``"4"`` -> [4]."""
    out: list[int] = []
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = part.split("..")
                a, b = int(lo), int(hi)
                if a > b:
                    raise UsageError(f"empty range {part!r}")
                out.extend(range(a, b + 1))
            elif part:
                out.append(int(part))
    except ValueError:
        raise UsageError(f"cannot parse integer list {text!r}") from None
    if not out:
        raise UsageError("empty integer list")
    return out


def _default_threads() -> int:
    raw = os.environ.get("TURANLF_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"TURANLF_THREADS must be an integer, got {raw!r}") from None


def _cap(value: int) -> int:
    if not 1 <= value <= EXHAUSTIVE_CAP:
        raise UsageError(f"--cap must be in 1..{EXHAUSTIVE_CAP}")
    return value


def _read_graphs(args) -> list[tuple[int, Graph]]:
    if args.g6:
        return list(read_graph6_lines(args.g6))
    if args.file and args.file != "-":
        with open(args.file, encoding="ascii", errors="replace") as fh:
            return list(read_graph6_lines(fh))
    return list(read_graph6_lines(sys.stdin))


def _coloring(args, g: Graph) -> Coloring:
    if args.coloring is None:
        return greedy_coloring(g)
    cols = parse_int_list(args.coloring)
    c = Coloring(tuple(cols))
    c.validate(g)
    return c


# -- output ------------------------------------------------------------------


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _table(rows: Sequence[dict], columns: Sequence[str]) -> str:
    cells = [[str(r.get(c, "")) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def _csv(rows: Sequence[dict], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    for r in rows:
        w.writerow({c: r.get(c, "") for c in columns})
    return buf.getvalue()


def _emit(fmt: str, payload, rows: Sequence[dict], columns: Sequence[str], out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(_dump_json(payload))
    elif fmt == "csv":
        out.write(_csv(rows, columns))
    else:
        out.write(_table(rows, columns))


# -- commands ----------------------------------------------------------------


def cmd_formula(args) -> int:
    name = args.which
    if name == "turan":
        _need(args, "n", "r")
        value = formulas.turan_number(args.n, args.r)
    elif name == "delta":
        _need(args, "t", "k", "r")
        value = formulas.turan_clique_count(args.t, args.k, args.r)
    else:
        _need(args, "n", "r", "s")
        if name == "thm1.4":
            _need(args, "k")
        value = formulas.evaluate(name, args.n, args.r, args.s, args.k, unchecked=args.unchecked)
    params = {k: getattr(args, k) for k in ("n", "r", "s", "k", "t") if getattr(args, k) is not None}
    if args.format == "json":
        sys.stdout.write(_dump_json({"formula": name, "params": params, "value": value,
                                     "unchecked": bool(args.unchecked)}))
    elif args.format == "csv":
        sys.stdout.write(_csv([dict(params, formula=name, value=value)], ["formula", *params, "value"]))
    else:
        print(value)
    return EXIT_OK


def _need(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.which} needs {', '.join(missing)}")


def cmd_verify(args) -> int:
    threads = args.threads or _default_threads()
    n_values: list[int] | str = "auto" if args.n == "auto" else parse_int_list(args.n)
    report = verify_theorem(
        args.theorem,
        s_values=parse_int_list(args.s) if args.s else None,
        r_values=parse_int_list(args.r) if args.r else None,
        n_values=n_values,
        k_values=parse_int_list(args.k) if args.k else None,
        probe_low_n=args.probe_low_n,
        cap=_cap(args.cap),
        workers=threads,
    )
    columns = ["theorem", "n", "r", "s", "k", "formula", "exhaustive", "agree", "probe"]
    rows = [dict(vars(row), k="" if row.k is None else row.k) for row in report.rows]
    if args.format == "table":
        text = report.table() + "\n"
    elif args.format == "csv":
        text = _csv(rows, columns)
    else:
        text = _dump_json(report.to_dict())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for row in report.failures:
        k = "" if row.k is None else f" k={row.k}"
        wit = row.witnesses[0] if row.witnesses else "-"
        print(f"counterexample {row.theorem} n={row.n} r={row.r} s={row.s}{k}: "
              f"formula {row.formula}, exhaustive {row.exhaustive}, witness {wit}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_construct(args) -> int:
    what = args.family
    if what == "thm1.5":
        _need(args, "n", "r", "s")
        graphs = extremal_construction(args.n, args.r, args.s)
    elif what == "turan":
        _need(args, "n", "r")
        graphs = [turan_graph(args.n, args.r)]
    elif what == "multipartite":
        if not args.parts:
            raise UsageError("multipartite needs --parts")
        graphs = [complete_multipartite(parse_int_list(args.parts))[0]]
    elif what == "petersen":
        graphs = [petersen_graph()]
    else:
        _need(args, "n")
        graphs = [{"empty": empty_graph, "complete": complete_graph, "path": path_graph,
                   "cycle": cycle_graph}[what](args.n)]
    rows = [{"graph6": encode_graph6(g), "n": g.n, "edges": g.edge_count} for g in graphs]
    if args.format == "table":
        sys.stdout.write("".join(r["graph6"] + "\n" for r in rows))
    else:
        _emit(args.format, {"family": what, "graphs": rows}, rows, ["graph6", "n", "edges"])
    return EXIT_OK


def _check_one(g: Graph, args) -> dict:
    out: dict = {"graph6": encode_graph6(g), "n": g.n, "edges": g.edge_count}
    asked = False
    if args.clique_free is not None:
        out["clique_free"] = is_clique_free(g, args.clique_free)
        asked = True
    if args.matching_free is not None:
        out["matching_free"] = is_matching_free(g, args.matching_free)
        asked = True
    if args.linforest_free is not None:
        out["linforest_free"] = is_linear_forest_free(g, args.linforest_free)
        asked = True
    if args.cliques is not None:
        out["cliques"] = count_cliques(g, args.cliques)
        asked = True
    if not asked or args.all:
        nu, mw = max_matching(g)
        lf, fw = max_linear_forest(g)
        out.update(clique_number=clique_number(g), matching_number=nu, linear_forest_number=lf,
                   matching_witness=[list(e) for e in mw.edges],
                   linear_forest_witness=[list(e) for e in fw.edges])
    return out


_PREDICATES = ("clique_free", "matching_free", "linforest_free")


def cmd_check(args) -> int:
    results = [dict(_check_one(g, args), line=lineno) for lineno, g in _read_graphs(args)]
    if args.format == "json":
        sys.stdout.write(_dump_json(results))
        return EXIT_OK
    keys = [k for k in ("clique_free", "matching_free", "linforest_free", "cliques", "clique_number",
                        "matching_number", "linear_forest_number") if results and k in results[0]]
    flat = [{k: _fmt_val(v) for k, v in r.items()} for r in results]
    preds = [k for k in keys if k in _PREDICATES]
    if args.format == "table" and len(keys) == 1 and preds:
        sys.stdout.write("".join(f"{r[keys[0]]}\n" for r in flat))
        return EXIT_OK
    _emit(args.format, results, flat, ["line", "graph6", "n", "edges", *keys])
    return EXIT_OK


def _fmt_val(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


def cmd_transform(args) -> int:
    outputs = []
    for lineno, g in _read_graphs(args):
        op = args.op
        if op in ("shift", "strong-shift"):
            if args.i is None or args.j is None:
                raise UsageError(f"{op} needs --i and --j")
            h = shift(g, args.i, args.j) if op == "shift" else strong_shift(g, args.i, args.j, _coloring(args, g))
            outputs.append({"line": lineno, "graph6": encode_graph6(h), "edges": h.edge_count})
        elif op == "full-shift":
            col = _coloring(args, g) if args.strong else None
            h = full_shift(g, strong=args.strong, coloring=col)
            outputs.append({"line": lineno, "graph6": encode_graph6(h), "edges": h.edge_count})
        elif op in ("closure", "strong-closure"):
            if args.k is None:
                raise UsageError(f"{op} needs --k")
            h = closure(g, args.k) if op == "closure" else strong_closure(g, args.k, _coloring(args, g))
            outputs.append({"line": lineno, "graph6": encode_graph6(h), "edges": h.edge_count})
        else:  # diagnose
            col = _coloring(args, g) if args.strong else None
            res = shift_order_diagnostic(g, strong=args.strong, coloring=col, seeds=range(args.seed, args.seed + 3))
            distinct = sorted({encode_graph6(h) for h in res.values()})
            outputs.append({"line": lineno, "graph6": encode_graph6(g),
                            "orders": {k: encode_graph6(h) for k, h in res.items()},
                            "order_sensitive": len(distinct) > 1})
    if args.format == "table" and args.op != "diagnose":
        sys.stdout.write("".join(o["graph6"] + "\n" for o in outputs))
        return EXIT_OK
    cols = ["line", "graph6", "order_sensitive"] if args.op == "diagnose" else ["line", "graph6", "edges"]
    rows = [{k: _fmt_val(v) for k, v in o.items()} for o in outputs]
    _emit(args.format, outputs, rows, cols)
    return EXIT_OK


def _constraints(args) -> ConstraintSpec:
    try:
        return ConstraintSpec(args.clique_bound, args.matching_bound, args.linforest_bound)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_search(args) -> int:
    cons = _constraints(args)
    objective = Objective.parse(args.objective)
    rec = extremal_search(args.n, objective, cons, workers=args.threads or _default_threads(),
                          cap=_cap(args.cap), max_witnesses=args.max_witnesses)
    payload = rec.to_dict()
    rows = [{"n": rec.n, "objective": rec.objective, "value": rec.value, "witness": w} for w in rec.witnesses]
    if not rows:
        rows = [{"n": rec.n, "objective": rec.objective, "value": rec.value, "witness": ""}]
    _emit(args.format, payload, rows, ["n", "objective", "value", "witness"])
    return EXIT_OK


def cmd_fuzz(args) -> int:
    rep = lemma_fuzz(args.lemma, args.trials, args.n_max, args.seed,
                     workers=args.threads or _default_threads(), max_violations=args.max_violations)
    payload = rep.to_dict()
    if args.format == "json":
        sys.stdout.write(_dump_json(payload))
    else:
        rows = [{"trial": v["trial"], "graph6": v["graph6"],
                 "params": json.dumps({k: x for k, x in v.items() if k not in ("trial", "graph6")}, sort_keys=True)}
                for v in rep.violations]
        if args.format == "table":
            print(f"lemma {rep.lemma}: trials={rep.trials} seed={rep.seed} n_max={rep.n_max} "
                  f"hypothesis_hits={rep.hypothesis_hits} violations={rep.violation_count}")
            if rows:
                sys.stdout.write(_table(rows, ["trial", "graph6", "params"]))
        else:
            sys.stdout.write(_csv(rows, ["trial", "graph6", "params"]))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    cap = _cap(args.cap)
    cons = None
    if any(v is not None for v in (args.clique_bound, args.matching_bound, args.linforest_bound)):
        cons = _constraints(args)
    if args.count:
        counts = level_counts(args.n, cons, cap)
        rows = [{"n": i + 1, "count": c} for i, c in enumerate(counts)]
        _emit(args.format, {"counts": rows}, rows, ["n", "count"])
        return EXIT_OK
    gen = enumerate_graphs(args.n, cons, cap)
    if args.format == "json":
        sys.stdout.write(_dump_json([encode_graph6(g) for g in gen]))
    else:
        out = sys.stdout
        for g in gen:
            out.write(encode_graph6(g) + "\n")
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def _add_format(p: argparse.ArgumentParser, default: str = "table") -> None:
    p.add_argument("--format", choices=("json", "table", "csv"), default=default)


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g6", action="append", help="graph6 string (repeatable); default reads stdin")
    p.add_argument("--file", help="file with one graph6 per line ('-' for stdin)")


def _add_constraints(p: argparse.ArgumentParser) -> None:
    p.add_argument("--clique-bound", type=int, help="forbid K_q")
    p.add_argument("--matching-bound", type=int, help="forbid M_{s+1} (matching number <= s)")
    p.add_argument("--linforest-bound", type=int, help="forbid L_{n,s} (linear-forest number <= s-1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="turanlf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("formula", help="evaluate a closed form")
    p.add_argument("which", choices=(*formulas.THEOREMS, "turan", "delta"))
    for name in ("n", "r", "s", "k", "t"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--unchecked", action="store_true", help="evaluate outside the stated window")
    _add_format(p)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("verify", help="compare a formula with exhaustive search")
    p.add_argument("theorem", choices=formulas.THEOREMS)
    p.add_argument("--s", help="values, e.g. 1..3 or 1,2")
    p.add_argument("--r")
    p.add_argument("--k")
    p.add_argument("--n", default="auto", help="'auto' (window up to the cap) or a list/range")
    p.add_argument("--probe-low-n", action="store_true", help="rows with s+1 <= n <= 2s; never fail")
    p.add_argument("--cap", type=int, default=9)
    p.add_argument("--threads", type=int)
    p.add_argument("--out", help="write the report here instead of stdout")
    _add_format(p, "json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="print graphs from a named family as graph6")
    p.add_argument("family", choices=("thm1.5", "turan", "multipartite", "empty", "complete", "path",
                                      "cycle", "petersen"))
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--parts", help="part sizes, e.g. 3,2")
    _add_format(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="freeness tests and invariants")
    _add_graph_input(p)
    p.add_argument("--clique-free", type=int, metavar="Q", help="no K_Q")
    p.add_argument("--matching-free", type=int, metavar="K", help="no matching of K edges")
    p.add_argument("--linforest-free", type=int, metavar="S", help="no linear forest with S edges")
    p.add_argument("--cliques", type=int, metavar="R", help="count K_R")
    p.add_argument("--all", action="store_true", help="also report all invariants with witnesses")
    _add_format(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("transform", help="shifting and closure")
    p.add_argument("op", choices=("shift", "strong-shift", "full-shift", "closure", "strong-closure", "diagnose"))
    _add_graph_input(p)
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--k", type=int, help="closure threshold")
    p.add_argument("--strong", action="store_true", help="full-shift/diagnose with strong shifting")
    p.add_argument("--coloring", help="colour per vertex, e.g. 0,1,0 (default: greedy proper colouring)")
    p.add_argument("--seed", type=int, default=0)
    _add_format(p)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("search", help="exact extremal value by exhaustive search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--objective", default="edges", help="'edges' or 'cliques(r)'")
    _add_constraints(p)
    p.add_argument("--cap", type=int, default=EXHAUSTIVE_CAP)
    p.add_argument("--threads", type=int)
    p.add_argument("--max-witnesses", type=int, default=1000)
    _add_format(p, "json")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("fuzz", help="seeded random testing of a lemma")
    p.add_argument("lemma", choices=tuple(LEMMAS))
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int)
    p.add_argument("--max-violations", type=int, default=1000)
    _add_format(p, "json")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("enumerate", help="one graph per isomorphism class, as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", action="store_true", help="print class counts for 1..n instead")
    _add_constraints(p)
    p.add_argument("--cap", type=int, default=EXHAUSTIVE_CAP)
    _add_format(p)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(None if argv is None else list(argv))
    try:
        return args.func(args)
    except (UsageError, formulas.ParameterWindowError, Graph6Error, CapExceeded, GraphError, ValueError) as exc:
        print(f"turanlf {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
