"""Command-line front end.

Every command prints JSON by default.  Exit status is 0 on success, 1 when
the computation itself refuses the input (the error is printed as JSON) and
2 for malformed command lines or weights.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .canon import (
    CanonWindow, bar_matrix, bkl_table, canonical, dual_canonical, superduality_check,
)
from .cato import (
    gl21_block_heads, gl21_block_report, irreducible_character, poset_dot, projective_flag,
    report_json, tilting_flag, verma_composition,
)
from .weights import (
    DomainError, Kind, ParseError, Signature, WeightError, bruhat_leq, natural_bijection, parse_weight,
)

DEFAULT_RADIUS = 8


class UsageError(Exception):
    pass


def _dump(data) -> str:
    return json.dumps(data, sort_keys=True)


def _sig(args) -> Signature:
    try:
        kind = getattr(args, "kind", None)
        return Signature.parse(args.sig, Kind(kind) if kind else Kind.SUPER)
    except (ParseError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _weight(sig: Signature, text: str):
    try:
        f = parse_weight(sig, text, check=False)
    except ParseError as exc:
        raise UsageError(str(exc)) from exc
    if not f.is_dominant():
        raise DomainError(f"weight {text!r} is not dominant for {sig}")
    return f


def _window(f, args) -> CanonWindow:
    lo = args.lo if args.lo is not None else min(f.values) - args.radius
    return CanonWindow.below(f, lo=lo)


def _vector_out(v, args, extra=None) -> str:
    if args.format == "text":
        return str(v)
    data = v.to_json()
    if extra:
        data.update(extra)
    return _dump(data)


def cmd_canon(args) -> str:
    sig = _sig(args)
    f = _weight(sig, args.weight)
    if args.lo is not None:
        return _vector_out(canonical(f, CanonWindow.below(f, lo=args.lo)), args, {"floor": args.lo})
    return _vector_out(canonical(f), args)


def cmd_dual(args) -> str:
    sig = _sig(args)
    f = _weight(sig, args.weight)
    win = _window(f, args)
    return _vector_out(dual_canonical(f, win), args, {"floor": win.lo})


def cmd_bar(args) -> str:
    sig = _sig(args)
    f = _weight(sig, args.weight)
    win = _window(f, args)
    if args.table == "bar":
        table = bar_matrix(win)
    else:
        U, L = bkl_table(win)
        table = U if args.table == "u" else L
    if args.format == "text":
        index = win.index()
        lines = [f"{index[g]} {index[h]} {c}" for (g, h), c in sorted(
            table.entries.items(), key=lambda kv: (index[kv[0][1]], index[kv[0][0]]))]
        return "\n".join([" ".join(str(g) for g in win.members)] + lines)
    data = table.to_json()
    data["floor"] = win.lo
    return _dump(data)


def cmd_order(args) -> str:
    sig = _sig(args)
    a, b = _weight(sig, args.a), _weight(sig, args.b)
    return _dump({"leq": bruhat_leq(a, b)})


FLAGS = {
    "tilting": tilting_flag,
    "verma": verma_composition,
    "projective": projective_flag,
    "irreducible": irreducible_character,
}


def cmd_flag(args) -> str:
    sig = _sig(args)
    f = _weight(sig, args.weight)
    window = None
    if args.kind_of_flag in ("verma", "irreducible"):
        window = _window(f, args)
    rep = FLAGS[args.kind_of_flag](f, window)
    if args.format == "text":
        return "\n".join(f"{g} {m}" for g, m in rep.to_json()["rows"]) + f"\n{rep.status}"
    return _dump(rep.to_json())


def cmd_block_report(args) -> str:
    if args.format == "dot":
        return poset_dot(gl21_block_heads(args.bound), "gl21").rstrip("\n")
    return report_json(gl21_block_report(args.bound))


def cmd_duality_check(args) -> str:
    if args.kind is None and "+" not in args.sig:
        args.kind = "classical"
    sig = _sig(args)
    if sig.is_super:
        raise UsageError("duality-check takes a classical signature such as 1,1+6")
    f = _weight(sig, args.weight)
    ok = superduality_check(f, args.n)
    return _dump({"weight": str(f), "image": str(natural_bijection(f, args.n)), "n": args.n,
                  "N": sig.n, "ok": ok})


def cmd_selftest(args) -> tuple[str, int]:
    from .acceptance import FAIL, SUITES, perturbed_straightening, run_all
    from .laurent import Q

    chosen = args.only.split(",") if args.only else None
    if chosen and any(k not in SUITES for k in chosen):
        raise UsageError(f"unknown suite in {args.only!r}; known: {', '.join(SUITES)}")
    if args.perturb_straightening:
        with perturbed_straightening(-Q):
            results = run_all(chosen)
    else:
        results = run_all(chosen)
    lines = []
    for r in results:
        lines.append(r.line())
        lines.extend(r.details())
    failed = any(r.status == FAIL for r in results)
    return "\n".join(lines), 1 if failed else 0


def cmd_report(args) -> str:
    report = gl21_block_report(args.bound)
    out = Path(args.out)
    out.write_text(report_json(report) + "\n")
    written = [str(out)]
    if args.figures:
        from .figures import write_figures
        written += write_figures(report, Path(args.figures))
    return _dump({"written": written})


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fockcan", description="Canonical bases of q-wedge Fock spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_weight(sp, formats=("json", "text"), sig_kind=True):
        sp.add_argument("--sig", required=True, help='signature, e.g. "1,1|2" or "2,1+6"')
        if sig_kind:
            sp.add_argument("--kind", choices=["super", "classical"], default=None)
        sp.add_argument("--weight", required=True, help='weight, e.g. "0|3|2,3"')
        sp.add_argument("--format", choices=formats, default=formats[0])

    def with_window(sp):
        sp.add_argument("--lo", type=int, default=None, help="value floor of the window")
        sp.add_argument("--radius", type=int, default=DEFAULT_RADIUS,
                        help="floor = smallest value of the weight minus radius")

    sp = sub.add_parser("canon", help="canonical basis element U_f")
    with_weight(sp)
    sp.add_argument("--lo", type=int, default=None,
                    help="fixed value floor; by default the box grows until the result is stable")
    sp.set_defaults(run=cmd_canon)

    sp = sub.add_parser("dual", help="dual canonical element L_f, cut at the window floor")
    with_weight(sp)
    with_window(sp)
    sp.set_defaults(run=cmd_dual)

    sp = sub.add_parser("bar", help="bar matrix (or u/l table) of the window below a weight")
    with_weight(sp)
    with_window(sp)
    sp.add_argument("--table", choices=["bar", "u", "l"], default="bar")
    sp.set_defaults(run=cmd_bar)

    sp = sub.add_parser("order", help="is a below b in the Bruhat order")
    sp.add_argument("--sig", required=True)
    sp.add_argument("--kind", choices=["super", "classical"], default=None)
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.set_defaults(run=cmd_order)

    sp = sub.add_parser("flag", help="multiplicities at q = 1")
    sp.add_argument("--kind", dest="kind_of_flag", choices=list(FLAGS), required=True)
    with_weight(sp, sig_kind=False)
    with_window(sp)
    sp.set_defaults(run=cmd_flag)

    sp = sub.add_parser("block-report", help="the block of (0,0|0) in gl(2|1)")
    sp.add_argument("--bound", type=int, default=5, help="heads have all values of size < bound")
    sp.add_argument("--format", choices=["json", "dot"], default="json")
    sp.set_defaults(run=cmd_block_report)

    sp = sub.add_parser("duality-check", help="compare a classical column with its super image")
    with_weight(sp, ("json",))
    sp.add_argument("--n", type=int, default=3, help="number of super columns")
    sp.set_defaults(run=cmd_duality_check)

    sp = sub.add_parser("selftest", help="run the acceptance suites")
    sp.add_argument("--only", default=None, help="comma separated suite numbers, e.g. 0,3,7")
    sp.add_argument("--perturb-straightening", action="store_true",
                    help="negative control: replace the straightening constant by -q")
    sp.set_defaults(run=cmd_selftest)

    sp = sub.add_parser("report", help="write the block report and optional figures")
    sp.add_argument("--out", default="block_report.json")
    sp.add_argument("--figures", default=None, metavar="DIR")
    sp.add_argument("--bound", type=int, default=5)
    sp.set_defaults(run=cmd_report)
    return p


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.run(args)
    except UsageError as exc:
        parser.print_usage(stderr)
        print(f"fockcan {args.command}: {exc}", file=stderr)
        return 2
    except WeightError as exc:
        print(_dump({"error": type(exc).__name__, "message": str(exc)}), file=stdout)
        return 1
    code = 0
    if isinstance(result, tuple):
        result, code = result
    print(result, file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
