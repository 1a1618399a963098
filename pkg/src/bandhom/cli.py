"""Command-line front end.

Exit status: 0 when a computation finished (the answer is in the report),
2 for usage errors, 3 for unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from typing import Any, Sequence

from .dp import HOM, LIHOM, SolveOptions, SolveResult, make_context, solve
from .graph import Graph, GraphFormatError, load_graph, make_cycle, make_path
from .oracle import brute_h21, brute_hom, brute_lihom, check_h21, check_hom, check_lihom
from .ordering import BandwidthTooLarge, exact_bandwidth, heuristic_bandwidth
from .packing import enum_2_independent_sets
from .reductions import (
    InfeasibleInRange,
    circular_l21_span,
    l21_span,
    mk_coloring_target,
    solve_h21,
    solve_mk_coloring,
)

EXIT_OK, EXIT_USAGE, EXIT_INPUT = 0, 2, 3


class InputError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    answer: str | None = None
    mode: str | None = None
    beta: int | None = None
    ordering: list[int] | None = None
    ordering_source: str | None = None
    stage_sizes: list[int] = field(default_factory=list)
    peak_nodes: int | None = None
    wall_time: float | None = None
    witness: list[int] | None = None
    extra: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> RunReport:
        return cls(**json.loads(text))

    def render(self) -> str:
        lines = [f"command: {self.command}"]
        if self.answer is not None:
            lines.append(f"answer: {self.answer}")
        if self.mode is not None:
            lines.append(f"mode: {self.mode}")
        for key, value in self.extra.items():
            if isinstance(value, list):
                value = " ".join(map(str, value))
            lines.append(f"{key}: {value}")
        if self.beta is not None:
            lines.append(f"beta: {self.beta}")
        if self.ordering is not None:
            lines.append(f"ordering ({self.ordering_source}): {' '.join(map(str, self.ordering))}")
        if self.stage_sizes:
            lines.append(f"stage sizes: {' '.join(map(str, self.stage_sizes))}")
        if self.peak_nodes is not None:
            lines.append(f"peak trie nodes: {self.peak_nodes}")
        if self.wall_time is not None:
            lines.append(f"time: {self.wall_time:.3f}s")
        if self.witness is not None:
            lines.append("witness: " + " ".join(f"{i}->{x}" for i, x in enumerate(self.witness, 1)))
        return "\n".join(lines)


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _from_result(command: str, result: SolveResult) -> RunReport:
    return RunReport(
        command=command,
        answer=_yes_no(result.answer),
        mode=result.mode,
        beta=result.beta,
        ordering=list(result.ordering),
        ordering_source=result.ordering_source,
        stage_sizes=list(result.stage_sizes),
        peak_nodes=result.peak_nodes,
        wall_time=result.wall_time,
        witness=None if result.witness is None else list(result.witness),
    )


def _graph(spec: str) -> Graph:
    try:
        return load_graph(spec)
    except OSError as exc:
        raise InputError(f"cannot read graph {spec!r}: {exc.strerror or exc}") from None
    except (GraphFormatError, ValueError) as exc:
        raise InputError(f"{spec}: {exc}") from None


def _read_ordering(path: str | None) -> tuple[int, ...] | None:
    if path is None:
        return None
    try:
        with open(path) as fh:
            return tuple(int(tok) for tok in fh.read().split())
    except OSError as exc:
        raise InputError(f"cannot read ordering {path!r}: {exc.strerror or exc}") from None
    except ValueError:
        raise InputError(f"ordering file {path!r} must hold integers") from None


def _options(args) -> SolveOptions:
    return SolveOptions(
        ordering=_read_ordering(args.ordering),
        witness=args.witness,
        heuristic=args.heuristic_bandwidth,
        exact_threshold=args.exact_threshold,
    )


def _verified(ok: bool, what: str) -> None:
    if not ok:
        raise AssertionError(f"reconstructed {what} failed its checker")


def cmd_hom(args) -> RunReport:
    g, h = _graph(args.G), _graph(args.H)
    mode = HOM if args.command == "hom" else LIHOM
    opts = _options(args)
    ctx = make_context(g, h, mode, opts.ordering, opts.heuristic, opts.exact_threshold)
    result = solve(ctx, witness=opts.witness)
    if result.witness is not None:
        checker = check_hom if mode == HOM else check_lihom
        _verified(checker(g, h, result.witness), "homomorphism")
    report = _from_result(args.command, result)
    report.extra["p_size"] = result.p_size
    return report


def cmd_color_mk(args) -> RunReport:
    g = _graph(args.G)
    result = solve_mk_coloring(g, args.m, args.k, _options(args))
    if result.witness is not None:
        target = mk_coloring_target(args.m, args.k)
        _verified(check_hom(g, target, [c + 1 for c in result.witness]), "(m,k)-coloring")
    report = _from_result("color-mk", result)
    report.extra.update(m=args.m, k=args.k)
    return report


def cmd_h21(args) -> RunReport:
    g, h = _graph(args.G), _graph(args.H)
    result = solve_h21(g, h, _options(args))
    if result.witness is not None:
        _verified(check_h21(g, h, result.witness), "H(2,1)-labeling")
    return _from_result("h21", result)


def _span_report(command: str, g: Graph, span, cyclic: bool) -> RunReport:
    report = (_from_result(command, span.result) if span.result is not None
              else RunReport(command=command, answer="yes"))
    report.extra["span"] = span.span
    report.extra["cycle_size" if cyclic else "path_size"] = span.target_size
    if span.witness is not None:
        target = make_cycle(span.target_size) if cyclic else make_path(span.target_size)
        _verified(check_h21(g, target, [x + 1 for x in span.witness]), "span labeling")
        report.witness = list(span.witness)
    return report


def cmd_l21(args) -> RunReport:
    g = _graph(args.G)
    return _span_report("l21", g, l21_span(g, _options(args)), cyclic=False)


def cmd_cl21(args) -> RunReport:
    g = _graph(args.G)
    if g.n == 0:
        raise InputError("circular span needs a nonempty graph")
    try:
        span = circular_l21_span(g, _options(args))
    except InfeasibleInRange as exc:
        return RunReport(command="cl21", answer="no",
                         extra={"infeasible_in_range": [exc.lo, exc.hi]})
    return _span_report("cl21", g, span, cyclic=True)


def cmd_bandwidth(args) -> RunReport:
    g = _graph(args.G)
    if args.heuristic_bandwidth:
        cert, source = heuristic_bandwidth(g), "heuristic"
    else:
        try:
            cert, source = exact_bandwidth(g, args.exact_threshold), "exact"
        except BandwidthTooLarge as exc:
            raise InputError(str(exc)) from None
    return RunReport(command="bandwidth", ordering=list(cert.ordering),
                     ordering_source=source, extra={"value": cert.value})


def cmd_stats(args) -> RunReport:
    g, h = _graph(args.G), _graph(args.H)
    opts = _options(args)
    ctx = make_context(g, h, HOM, opts.ordering, opts.heuristic, opts.exact_threshold)
    return RunReport(
        command="stats", beta=ctx.beta, ordering=list(ctx.ordering),
        ordering_source=ctx.ordering_source,
        extra={
            "n": g.n, "m": h.n,
            "bw_complement_h": ctx.beta - 1,
            "p_size_hom": len(ctx.p_family),
            "p_size_lihom": len(enum_2_independent_sets(g)),
            "state_bound": (ctx.beta + 1) ** g.n,
        })


def cmd_oracle(args) -> RunReport:
    g, h = _graph(args.G), _graph(args.H)
    search = {"hom": brute_hom, "lihom": brute_lihom, "h21": brute_h21}[args.problem]
    phi = search(g, h)
    return RunReport(command=f"oracle {args.problem}", answer=_yes_no(phi is not None),
                     witness=None if phi is None or not args.witness else list(phi))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--witness", action="store_true", help="reconstruct and print a mapping")
    common.add_argument("--ordering", metavar="PERM_FILE",
                        help="file with a permutation of the target's vertices")
    common.add_argument("--heuristic-bandwidth", action="store_true",
                        help="order the target with the Cuthill-McKee heuristic")
    common.add_argument("--exact-threshold", type=int, default=24, metavar="N",
                        help="largest graph for exact bandwidth search (default 24)")
    common.add_argument("--json", action="store_true", help="machine-readable report")

    parser = argparse.ArgumentParser(
        prog="bandhom",
        description="Graph homomorphism and labeling solver. Graphs are edge-list files "
                    "or built-ins such as cycle:5, path:4, complete:3, cyclepow:7:2.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, text in (("hom", "homomorphism G -> H"),
                       ("lihom", "locally injective homomorphism G -> H")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("G")
        p.add_argument("H")
        p.set_defaults(func=cmd_hom)

    p = sub.add_parser("color-mk", parents=[common], help="(m,k)-coloring of G")
    p.add_argument("G")
    p.add_argument("m", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_color_mk)

    p = sub.add_parser("h21", parents=[common], help="H(2,1)-labeling of G")
    p.add_argument("G")
    p.add_argument("H")
    p.set_defaults(func=cmd_h21)

    p = sub.add_parser("l21", parents=[common], help="L(2,1) span of G")
    p.add_argument("G")
    p.set_defaults(func=cmd_l21)

    p = sub.add_parser("cl21", parents=[common], help="circular L(2,1) span of G")
    p.add_argument("G")
    p.set_defaults(func=cmd_cl21)

    p = sub.add_parser("bandwidth", parents=[common], help="bandwidth of G with an optimal ordering")
    p.add_argument("G")
    p.set_defaults(func=cmd_bandwidth)

    p = sub.add_parser("stats", parents=[common], help="solver parameters without solving")
    p.add_argument("G")
    p.add_argument("H")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("oracle", parents=[common], help="brute-force reference search")
    p.add_argument("problem", choices=["hom", "lihom", "h21"])
    p.add_argument("G")
    p.add_argument("H")
    p.set_defaults(func=cmd_oracle)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "color-mk" and (args.m < 1 or args.k < 1):
        print("bandhom: error: need m >= 1 and k >= 1", file=err)
        return EXIT_USAGE
    try:
        report = args.func(args)
    except InputError as exc:
        print(f"bandhom: error: {exc}", file=err)
        return EXIT_INPUT
    except ValueError as exc:
        # invalid ordering permutation and similar bad input
        print(f"bandhom: error: {exc}", file=err)
        return EXIT_INPUT
    print(report.to_json() if args.json else report.render(), file=out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
