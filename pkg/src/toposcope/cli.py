"""Command-line entry point: ``toposcope verify`` and ``toposcope enumerate``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from ._caps import ENUMERATION_MAX_N, require_n
from .errors import BadParam, ToposcopeError, TooLarge
from .finspace import FiniteTopology, PropertyKind, format_set, make_topology
from .lattice import enumerate_topologies
from .suites import SUITES, VerificationReport, run_suite

EXIT_ERROR = 2
DOT_LATTICE_MAX_N = 3

# flags understood by ``verify``; each maps onto a suite parameter of the same name
_VERIFY_FLAGS = {
    "n": "ground size",
    "max_index": "largest prime index",
    "max_x": "largest point for remark-A",
    "sample": "carrier points sampled by cofinite-join",
    "samples": "randomized cases",
    "seed": "random seed",
}


def cmd_verify(suite: str, params: dict, timing: bool = False) -> VerificationReport:
    return run_suite(suite, params, timing=timing)


def _hasse_edges(items: Sequence, le) -> list[tuple[int, int]]:
    """Covering pairs ``(i, j)`` with ``items[i] < items[j]`` and nothing strictly between."""
    n = len(items)
    lt = [[i != j and le(items[i], items[j]) for j in range(n)] for i in range(n)]
    return [
        (i, j)
        for i in range(n)
        for j in range(n)
        if lt[i][j] and not any(lt[i][k] and lt[k][j] for k in range(n))
    ]


def _label(T: FiniteTopology) -> str:
    return "{" + ", ".join(format_set(U) for U in T.opens) + "}"


def lattice_dot(n: int, prop: Optional[PropertyKind] = None) -> str:
    """Hasse diagram of the topologies on ``n`` points ordered by inclusion."""
    require_n(n, DOT_LATTICE_MAX_N, "full lattice diagram")
    tops = enumerate_topologies(n, prop)
    lines = [f"digraph topologies_{n} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i, T in enumerate(tops):
        lines.append(f'  t{i} [label="{_label(T)}"];')
    for i, j in _hasse_edges(tops, lambda a, b: a <= b):
        lines.append(f"  t{i} -> t{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def specialization_dot(T: FiniteTopology) -> str:
    """Hasse diagram of the specialization preorder of one topology."""
    pts = list(range(T.n))
    pc = T.point_closures
    lines = ["digraph specialization {", "  rankdir=BT;"]
    for x in pts:
        lines.append(f'  p{x} [label="{x}"];')
    # quotient by the equivalence first so that equal points do not hide covers
    classes = []
    for x in pts:
        if not any(pc[c[0]] == pc[x] for c in classes):
            classes.append([y for y in pts if pc[y] == pc[x]])
    edges = _hasse_edges(classes, lambda a, b: bool(pc[b[0]] >> a[0] & 1))
    for c in classes:
        for a, b in zip(c, c[1:]):
            lines.append(f"  p{a} -> p{b} [dir=both];")
    for i, j in edges:
        lines.append(f"  p{classes[i][0]} -> p{classes[j][0]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_enumerate(n: int, prop: Optional[PropertyKind], fmt: str) -> str:
    require_n(n, ENUMERATION_MAX_N, "enumerate")
    if fmt == "dot":
        return lattice_dot(n, prop)
    tops = enumerate_topologies(n, prop)
    if fmt == "count":
        return f"{len(tops)}\n"
    return "".join(json.dumps({"n": T.n, "opens": list(T.opens)}) + "\n" for T in tops)


def _parse_topology(text: str) -> FiniteTopology:
    """``"3:0,1,3"`` is the topology on 3 points with open masks 0, 1 and 3."""
    try:
        n_part, masks = text.split(":", 1)
        n = int(n_part)
        opens = [int(m) for m in masks.split(",") if m.strip()]
    except ValueError:
        raise BadParam(f"cannot parse topology {text!r}; expected N:mask,mask,...") from None
    return make_topology(n, opens)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toposcope",
        description="Exact checks on finite topologies and ultimately periodic subsets of the integers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a named verification suite")
    v.add_argument("suite", help="suite name; see 'toposcope suites'")
    for name, help_text in _VERIFY_FLAGS.items():
        v.add_argument("--" + name.replace("_", "-"), dest=name, type=int, default=None, help=help_text)
    v.add_argument("--out", help="write the JSON report here instead of stdout")
    v.add_argument("--timing", action="store_true", help="record wall time (breaks byte-identical reports)")

    e = sub.add_parser("enumerate", help="list the topologies on n points")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--filter", choices=[p.value for p in PropertyKind], default=None)
    e.add_argument("--format", choices=["count", "json", "dot"], default="count")

    h = sub.add_parser("hasse", help="DOT diagram of one topology's specialization order")
    h.add_argument("topology", help="N:mask,mask,... listing the open sets as bitmasks")

    sub.add_parser("suites", help="list the registered suites")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "suites":
            for name, s in SUITES.items():
                defaults = " ".join(f"--{k.replace('_', '-')} {v}" for k, v in s.defaults.items())
                print(f"{name:18} {s.about} [{defaults}]")
            return 0
        if args.command == "enumerate":
            prop = PropertyKind(args.filter) if args.filter else None
            sys.stdout.write(cmd_enumerate(args.n, prop, args.format))
            return 0
        if args.command == "hasse":
            sys.stdout.write(specialization_dot(_parse_topology(args.topology)))
            return 0
        params = {k: getattr(args, k) for k in _VERIFY_FLAGS if getattr(args, k) is not None}
        report = cmd_verify(args.suite, params, timing=args.timing)
    except TooLarge as exc:
        print(f"toposcope: too large: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ToposcopeError as exc:
        print(f"toposcope: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    text = report.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"{report.suite}: {report.verdict} -> {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return report.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
