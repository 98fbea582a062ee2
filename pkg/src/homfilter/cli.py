"""Command-line interface.

Every verb accepts ``--seed``, ``--json`` and ``--out``. Size caps can be
overridden through ``HOMFILTER_CAPS``, a comma-separated list such as
``quotient=10,ind=8,ie=22,aut=12``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from . import serialize as ser
from .bench import bench, rows_to_csv, rows_to_json
from .cfi import ChargeFunction, cfi_csp, cfi_filter
from .counting import hom_count, ind_count, make_oracle, sub_count
from .expansion import ind_hom_expansion, sub_hom_expansion
from .filters import ColorCoarsening, cardinality_filter, inclusion_exclusion_filter
from .graph import ColoredGraph
from .quantum import QuantumGraph, tensor, tensor_quantum
from .reduction import PromiseViolation, minor_lift, reduce_hom
from .verify import SUITES, run_suite

CAPS_ENV = "HOMFILTER_CAPS"
DEFAULT_CAPS = {"quotient": 9, "ind": 7, "ie": 20, "aut": 10, "bench_ie": 2**9}


def read_caps(env: dict[str, str] | None = None) -> dict[str, int]:
    env = os.environ if env is None else env
    caps = dict(DEFAULT_CAPS)
    raw = env.get(CAPS_ENV, "").strip()
    if not raw:
        return caps
    for item in raw.split(","):
        key, sep, val = item.partition("=")
        key = key.strip()
        if not sep or key not in caps:
            raise ValueError(f"bad {CAPS_ENV} entry {item!r}; known caps: {', '.join(caps)}")
        caps[key] = int(val)
    return caps


class _Output:
    def __init__(self, args: argparse.Namespace):
        self.args = args

    def emit(self, payload: Any, text: str | None = None) -> None:
        if self.args.json or text is None:
            body = payload if isinstance(payload, str) else ser.dumps(payload)
        else:
            body = text
        if not body.endswith("\n"):
            body += "\n"
        if self.args.out:
            with open(self.args.out, "w") as fh:
                fh.write(body)
        else:
            sys.stdout.write(body)


def _load_any(path: str) -> ColoredGraph | QuantumGraph:
    d = ser.load_json(path)
    if "constituents" in d:
        return ser.quantum_from_dict(d)
    return ser.graph_from_dict(d)


def _parse_charge(S: ColoredGraph, text: str) -> ChargeFunction:
    if text in ("empty", "0", ""):
        return ChargeFunction.indicator(S)
    if text == "e*":
        return ChargeFunction.indicator(S, [S.edge_list[0]])
    edges = []
    for part in text.split(";"):
        u, v = part.split(",")
        edges.append((int(u), int(v)))
    return ChargeFunction.indicator(S, edges)


def _parse_parts(text: str) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(c) for c in part.split(",") if c.strip()) for part in text.split(";"))


def _graph_or_dot(out: _Output, G: ColoredGraph, fmt: str) -> None:
    if fmt == "dot":
        out.emit(ser.graph_to_dot(G))
    else:
        out.emit(ser.graph_to_dict(G))


def _quantum_or_dot(out: _Output, Q: QuantumGraph, fmt: str, provenance: dict | None = None) -> None:
    if fmt == "dot":
        out.emit(ser.quantum_to_dot(Q))
    else:
        out.emit(ser.quantum_to_dict(Q, provenance))


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------


def cmd_count(args, out: _Output, caps: dict) -> int:
    H = ser.load_graph(args.pattern)
    G = ser.load_graph(args.host)
    if args.cmd == "hom":
        value = hom_count(H, G)
    elif args.cmd == "sub":
        value = sub_count(H, G, aut_cap=caps["aut"])
    else:
        value = ind_count(H, G)
    out.emit({args.cmd: value}, str(value))
    return 0


def cmd_expand(args, out: _Output, caps: dict) -> int:
    H = ser.load_graph(args.pattern)
    if args.kind == "sub":
        E = sub_hom_expansion(H, cap=caps["quotient"])
    else:
        E = ind_hom_expansion(H, cap=caps["ind"])
    prov = {"kind": args.kind, "pattern": ser.graph_to_dict(H)}
    _quantum_or_dot(out, E.quantum, args.format, prov)
    return 0


def cmd_cfi(args, out: _Output, caps: dict) -> int:
    S = ser.load_graph(args.base)
    if args.cfi_cmd == "build":
        G = cfi_csp(S, _parse_charge(S, args.charge)).realized
        _graph_or_dot(out, G, args.format)
    else:
        e_star = None
        if args.e_star:
            u, v = args.e_star.split(",")
            e_star = (int(u), int(v))
        X = cfi_filter(S, e_star)
        _quantum_or_dot(out, X, args.format, {"kind": "cfi", "base": ser.graph_to_dict(S)})
    return 0


def cmd_filter(args, out: _Output, caps: dict) -> int:
    if args.filter_cmd == "cardinality":
        parts = _parse_parts(args.parts)
        targets = tuple(int(k) for k in args.targets.split(","))
        Q = cardinality_filter(ColorCoarsening(parts, targets), args.support)
        prov = {"kind": "cardinality", "parts": [list(p) for p in parts], "targets": list(targets), "s": args.support}
    else:
        S = ser.load_graph(args.base)
        Q = inclusion_exclusion_filter(S, cap=caps["ie"])
        prov = {"kind": "ie", "base": ser.graph_to_dict(S)}
    _quantum_or_dot(out, Q, args.format, prov)
    return 0


def cmd_tensor(args, out: _Output, caps: dict) -> int:
    left, right = _load_any(args.left), _load_any(args.right)
    if isinstance(left, ColoredGraph) and isinstance(right, ColoredGraph):
        _graph_or_dot(out, tensor(left, right), args.format)
        return 0
    lq = left if isinstance(left, QuantumGraph) else QuantumGraph.single(left)
    rq = right if isinstance(right, QuantumGraph) else QuantumGraph.single(right)
    _quantum_or_dot(out, tensor_quantum(lq, rq), args.format)
    return 0


def cmd_reduce(args, out: _Output, caps: dict) -> int:
    S = ser.load_graph(args.S)
    T = ser.load_graph(args.T) if args.T else S
    G = ser.load_graph(args.host)
    kind, _, path = args.oracle.partition(":")
    if kind not in ("hom", "sub", "ind") or not path:
        raise ValueError("--oracle must look like hom:pattern.json, sub:... or ind:...")
    p = make_oracle(kind, ser.load_graph(path))
    s = args.support if args.support is not None else p.support_bound
    report = reduce_hom(S, T, s, p, args.case, G, filter_kind=args.filter)
    payload = report.to_json()
    payload.update({"case": args.case, "oracle": kind, "s": s})
    if args.check:
        payload["brute_force"] = hom_count(S, G)
    text = f"hom(S,G) = {report.result}  ({report.oracle_calls} oracle calls, max call size {report.max_call_size})"
    out.emit(payload, text)
    return 0


def cmd_minor_lift(args, out: _Output, caps: dict) -> int:
    A = ser.load_graph(args.A)
    B = ser.load_graph(args.B)
    G = ser.load_graph(args.host)
    raw = ser.load_json(args.model)
    model = {int(k): [int(b) for b in v] for k, v in raw.items()}
    Gp = minor_lift(A, B, model, G)
    _graph_or_dot(out, Gp, args.format)
    return 0


def cmd_verify(args, out: _Output, caps: dict) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    suites = [run_suite(n, args.seed) for n in names]
    ok = all(s.passed for s in suites)
    payload = {"seed": args.seed, "passed": ok, "suites": [s.to_json(args.verbose) for s in suites]}
    lines = [s.summary() for s in suites]
    for s in suites:
        for f in s.failures[:5]:
            lines.append(f"  FAIL {s.suite}:{f.instance} {json.dumps(f.payload)}")
    out.emit(payload, "\n".join(lines))
    return 0 if ok else 1


def cmd_bench(args, out: _Output, caps: dict) -> int:
    families = [f.strip() for f in args.families.split(",") if f.strip()]
    rows = bench(families, args.host_factor, args.seed, caps["bench_ie"], args.wall_max, not args.no_check)
    if args.json:
        out.emit(rows_to_json(rows))
    else:
        out.emit(rows_to_csv(rows))
    return 0 if all(r.correct is not False for r in rows) else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="PRNG seed (MT19937)")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--out", help="write output to this file instead of stdout")

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "dot"), default="json")

    parser = argparse.ArgumentParser(prog="homfilter", description="Exact homomorphism filters and reductions.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    for verb, what in (("hom", "homomorphisms"), ("sub", "subgraph copies"), ("ind", "induced copies")):
        p = sub.add_parser(verb, parents=[common], help=f"count {what}")
        p.add_argument("--pattern", required=True)
        p.add_argument("--host", required=True)
        p.set_defaults(fn=cmd_count)

    p = sub.add_parser("expand", parents=[common, fmt], help="hom-expansion of sub(H,.) or ind(H,.)")
    p.add_argument("kind", choices=("sub", "ind"))
    p.add_argument("--pattern", required=True)
    p.set_defaults(fn=cmd_expand)

    p = sub.add_parser("cfi", help="CFI graphs and the CFI filter")
    cfi_sub = p.add_subparsers(dest="cfi_cmd", required=True)
    b = cfi_sub.add_parser("build", parents=[common, fmt], help="realize Gamma(S, c)")
    b.add_argument("--base", required=True)
    b.add_argument("--charge", default="empty", help="'empty', 'e*', or edges 'u,v;u,v'")
    b.set_defaults(fn=cmd_cfi)
    f = cfi_sub.add_parser("filter", parents=[common, fmt], help="the two-constituent filter X(S)")
    f.add_argument("--base", required=True)
    f.add_argument("--e-star", help="edge 'u,v' whose charge is flipped (default: least edge)")
    f.set_defaults(fn=cmd_cfi)

    p = sub.add_parser("filter", help="cardinality and inclusion-exclusion filters")
    f_sub = p.add_subparsers(dest="filter_cmd", required=True)
    c = f_sub.add_parser("cardinality", parents=[common, fmt])
    c.add_argument("--parts", required=True, help="color parts, e.g. '0,1;2'")
    c.add_argument("--targets", required=True, help="vertex targets per part, e.g. '2,1'")
    c.add_argument("--support", type=int, required=True, help="vertex bound s")
    c.set_defaults(fn=cmd_filter)
    ie = f_sub.add_parser("ie", parents=[common, fmt])
    ie.add_argument("--base", required=True)
    ie.set_defaults(fn=cmd_filter)

    p = sub.add_parser("tensor", parents=[common, fmt], help="tensor product of graphs or quantum graphs")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.set_defaults(fn=cmd_tensor)

    p = sub.add_parser("reduce", parents=[common], help="recover hom(S,G) from a motif oracle")
    p.add_argument("--case", choices=("a", "b", "c"), required=True)
    p.add_argument("--s", dest="S", required=True, help="colorful pattern S")
    p.add_argument("--t", dest="T", help="colorful T containing S (default: S)")
    p.add_argument("--oracle", required=True, help="kind:pattern.json with kind in hom|sub|ind")
    p.add_argument("--host", required=True)
    p.add_argument("--filter", choices=("cfi", "ie"), default="cfi")
    p.add_argument("--support", type=int, help="support bound s (default: oracle pattern size)")
    p.add_argument("--check", action="store_true", help="also report the brute-force count")
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("minor-lift", parents=[common, fmt], help="lift a host along a minor model")
    p.add_argument("--a", dest="A", required=True)
    p.add_argument("--b", dest="B", required=True)
    p.add_argument("--model", required=True, help="JSON object: vertex of A -> list of vertices of B")
    p.add_argument("--host", required=True)
    p.set_defaults(fn=cmd_minor_lift)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--verbose", action="store_true", help="include passing checks in JSON")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="CFI vs inclusion-exclusion call counts (CSV)")
    p.add_argument("--families", default="cycles,walls")
    p.add_argument("--wall-max", type=int, default=4)
    p.add_argument("--host-factor", type=int, default=2)
    p.add_argument("--no-check", action="store_true", help="skip the brute-force comparison")
    p.set_defaults(fn=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        caps = read_caps()
        return args.fn(args, _Output(args), caps)
    except PromiseViolation as exc:
        print(f"promise violation: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def cli_run(argv: Sequence[str]) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
