"""``pathlat`` command line.

Exit codes: 0 success, 1 selftest/oeis mismatch, 2 parse error, 3 domain
error, 4 enumeration cap exceeded. With ``--json`` every command prints one
object ``{command, inputs, value, method, elapsed_ms}``; counts inside
``value`` are decimal strings.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass
from typing import Any, Optional

from . import acceptance
from .chains import Method, count_small_multichains, f_eval, mobius_power, v_count, zeta_power
from .counting import interval_count
from .errors import CapExceeded, DomainError, LimitExceeded, ParseError
from .filling import filling_report
from .lattice import IntervalSpec, interval_elements, rank
from .oracle import EnumFilter, enumerate_paths
from .path import classify, parse_path, path_stats, render_path, to_kseq
from .sequences import check_sequence

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_DOMAIN, EXIT_CAP = 0, 1, 2, 3, 4


@dataclass
class CommandResult:
    command: str
    inputs: dict
    value: Any
    method: Optional[str]
    elapsed_ms: float


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="print a JSON CommandResult")
    p.add_argument("--runs", action="store_true", help="render paths in run-length form")
    p.add_argument("--cap", type=int, default=None, help="bound on enumerated interval sizes")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _ArgumentParser(prog="pathlat", description="Exact counting in the lattice of binary paths.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("stats", parents=[common], help="heights, valleys, k-sequence, filling, degree")
    p.add_argument("path")

    p = sub.add_parser("interval", parents=[common], help="|[P, Q]|")
    p.add_argument("lo")
    p.add_argument("hi")
    p.add_argument("--lenient", action="store_true", help="print 0 instead of failing when P is not below Q")
    p.add_argument("--list", action="store_true", help="also list the elements (bounded by --cap)")

    p = sub.add_parser("f", parents=[common], help="number of minimal small-interval chains to u^n")
    p.add_argument("path")
    p.add_argument("--method", choices=[m.value for m in Method], default="auto")
    p.add_argument("--trace", action="store_true", help="show which identities the closed evaluator used")

    p = sub.add_parser("vcount", parents=[common], help="type-V multichains from a to s")
    p.add_argument("a")
    p.add_argument("s")

    for name, help_ in (("mobius-power", "k-th power of the Mobius function at (P, Q)"),
                        ("zeta-power", "k-th power of the zeta function at (P, Q)"),
                        ("small-multichains", "multichains of length k with small intervals")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("lo")
        p.add_argument("hi")
        p.add_argument("k", type=int)

    p = sub.add_parser("enumerate", parents=[common], help="list paths of length n")
    p.add_argument("n", type=int)
    p.add_argument("--filter", default="all",
                   help="all | dyck | prefix | filling | degree=K")
    p.add_argument("--count", action="store_true", help="print only the number of paths")

    p = sub.add_parser("selftest", parents=[common], help="run the acceptance criteria")
    p.add_argument("--only", type=lambda s: {int(x) for x in s.split(",")}, default=None,
                   help="comma separated criterion numbers")

    p = sub.add_parser("oeis", parents=[common], help="compare local counts with a bundled OEIS fixture")
    p.add_argument("seq_id", metavar="ID")
    p.add_argument("--upto", type=int, default=20)
    return parser


def _parse_filter(text: str) -> EnumFilter:
    if text.startswith("degree="):
        try:
            return EnumFilter.degree_equals(int(text.split("=", 1)[1]))
        except ValueError:
            raise ParseError(f"bad degree filter {text!r}") from None
    table = {"all": EnumFilter.ALL, "dyck": EnumFilter.DYCK_PATH,
             "prefix": EnumFilter.DYCK_PREFIX, "filling": EnumFilter.FILLING}
    if text not in table:
        raise ParseError(f"unknown filter {text!r}")
    return table[text]


def _class_names(P) -> list[str]:
    flags = classify(P)
    return [f.name.lower() for f in type(flags) if f.value and f in flags] or ["general"]


def _run(args) -> tuple[Any, Optional[str], list[str], int]:
    """Returns (json value, method, text lines, exit code)."""
    show = lambda P: render_path(P, runs=args.runs)  # noqa: E731
    cmd = args.command

    if cmd == "stats":
        P = parse_path(args.path)
        st = path_stats(P)
        rep = filling_report(P)
        value = {
            "path": show(P), "length": P.n, "ups": P.ups, "downs": P.downs,
            "heights": list(st.heights), "valleys": [list(v) for v in st.valleys],
            "peaks": [list(v) for v in st.peaks], "lv": st.lv, "hv": st.hv,
            "kseq": list(to_kseq(P).ks),
            "class": _class_names(P),
            "rank": str(rank(P)), "filling": show(rep.filling), "low_fill": show(rep.low_fill),
            "star_fill": show(rep.star_fill), "degree": rep.degree,
            "iterates": [show(x) for x in rep.iterates],
        }
        lines = [f"{k}: {v}" for k, v in value.items()]
        return value, None, lines, EXIT_OK

    if cmd == "interval":
        P, Q = parse_path(args.lo), parse_path(args.hi)
        n = interval_count(P, Q, lenient=args.lenient)
        value: Any = str(n)
        lines = [str(n)]
        if args.list and n:
            elems = [show(R) for R in interval_elements(IntervalSpec(P, Q), args.cap)]
            value = {"count": str(n), "elements": elems}
            lines += elems
        return value, "determinant", lines, EXIT_OK

    if cmd == "f":
        P = parse_path(args.path)
        trace: Optional[list] = [] if args.trace else None
        n = f_eval(P, args.method, trace)
        method = "recursive" if args.method == "recursive" else "closed"
        lines = [str(n)]
        value: Any = str(n)
        if trace is not None:
            value = {"count": str(n), "trace": trace}
            lines += [json.dumps(ev) for ev in trace]
        return value, method, lines, EXIT_OK

    if cmd == "vcount":
        n = v_count(parse_path(args.a), parse_path(args.s))
        return str(n), "prime-factor recursion", [str(n)], EXIT_OK

    if cmd in ("mobius-power", "zeta-power", "small-multichains"):
        P, Q = parse_path(args.lo), parse_path(args.hi)
        if cmd == "mobius-power":
            n = mobius_power(P, Q, args.k, args.cap)
        elif cmd == "zeta-power":
            n = zeta_power(P, Q, args.k, args.cap)
        else:
            n = count_small_multichains(P, Q, args.k)
        return str(n), "incidence algebra", [str(n)], EXIT_OK

    if cmd == "enumerate":
        flt = _parse_filter(args.filter)
        paths = [show(P) for P in enumerate_paths(args.n, flt)]
        if args.count:
            return str(len(paths)), "brute force", [str(len(paths))], EXIT_OK
        return {"count": str(len(paths)), "paths": paths}, "brute force", paths, EXIT_OK

    if cmd == "selftest":
        lines: list[str] = []
        results = acceptance.run_all(args.only, echo=None if args.json else print)
        ok = all(r.passed for r in results)
        value = [{"criterion": r.number, "name": r.name, "passed": r.passed, "detail": r.detail,
                  "failures": [repr(f) for f in r.failures[:10]]} for r in results]
        lines.append("selftest: PASS" if ok else "selftest: FAIL")
        return value, None, lines, EXIT_OK if ok else EXIT_MISMATCH

    if cmd == "oeis":
        try:
            res = check_sequence(args.seq_id, args.upto)
        except KeyError as exc:
            raise DomainError(exc.args[0]) from None
        status = "PASS" if res.passed else "FAIL"
        value = {"status": status, "compared": res.compared,
                 "mismatches": [[n, str(a), str(b)] for n, a, b in res.mismatches]}
        lines = [f"{status} ({res.compared} terms compared)"]
        lines += [f"  n={n}: local {a} != fixture {b}" for n, a, b in res.mismatches]
        return value, "fixture", lines, EXIT_OK if res.passed else EXIT_MISMATCH

    raise AssertionError(cmd)


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    inputs = {k: (sorted(v) if isinstance(v, set) else v)
              for k, v in vars(args).items() if k not in ("command", "json")}
    start = time.perf_counter()
    try:
        value, method, lines, code = _run(args)
    except ParseError as exc:
        print(f"pathlat: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"pathlat: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (CapExceeded, LimitExceeded) as exc:
        print(f"pathlat: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    elapsed = (time.perf_counter() - start) * 1000
    if args.json:
        result = CommandResult(args.command, inputs, value, method, round(elapsed, 3))
        print(json.dumps(asdict(result)))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
