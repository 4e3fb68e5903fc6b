"""Command-line interface: construct, certify, spectrum, match, switch, search."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .certify import certify
from .family import UnsupportedDegree, build_pair
from .graph import Graph, from_graph6, to_dot, to_graph6
from .matching import maximum_matching
from .search import scan_cospectral_pm
from .spectral import char_poly, spectrum_symmetric
from .switching import InvalidSwitchingSet, SwitchingPartition, apply_switch


class CLIError(Exception):
    pass


def _dump(obj: object) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _read_graphs(path: str | None) -> list[Graph]:
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        text = Path(path).read_text()
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise CLIError("no graph6 input")
    graphs = []
    for i, line in enumerate(lines, 1):
        try:
            graphs.append(from_graph6(line))
        except ValueError as exc:
            raise CLIError(f"line {i}: cannot parse graph6: {exc}") from exc
    return graphs


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_construct(args: argparse.Namespace) -> int:
    g, gs, layout = build_pair(args.b, seed=args.seed)
    target = gs if args.switched else g
    sidecar = layout.sidecar()
    sidecar["switched"] = bool(args.switched)
    sidecar["seed"] = args.seed
    if args.format == "graph6":
        text = to_graph6(target) + "\n"
    elif args.format == "dot":
        text = to_dot(target, layout.vertex_labels(), name=f"b{args.b}{'_switched' if args.switched else ''}")
    else:
        text = _dump({"graph6": to_graph6(target), "layout": sidecar}) + "\n"
    _write(text, args.output)
    sidecar_path = args.sidecar
    if sidecar_path is None and args.output not in (None, "-") and args.format != "json":
        sidecar_path = args.output + ".json"
    if sidecar_path:
        Path(sidecar_path).write_text(_dump(sidecar) + "\n")
    return 0


def cmd_certify(args: argparse.Namespace) -> int:
    report = certify(args.b, seed=args.seed)
    print(_dump(report.to_json()))
    if not report.passed:
        print(f"certification failed: {', '.join(report.failures)}", file=sys.stderr)
        return 1
    return 0


def cmd_spectrum(args: argparse.Namespace) -> int:
    for g in _read_graphs(args.input):
        p = char_poly(g)
        print(json.dumps({
            "n": g.n,
            "edges": g.num_edges(),
            "char_poly": p.to_json(),
            "char_poly_digest": p.digest(),
            "symmetric_spectrum": spectrum_symmetric(p),
        }))
    return 0


def cmd_match(args: argparse.Namespace) -> int:
    for g in _read_graphs(args.input):
        m = maximum_matching(g)
        print(json.dumps({
            "n": g.n,
            "size": len(m),
            "deficiency": g.n - 2 * len(m),
            "perfect": 2 * len(m) == g.n,
            "matching": [list(e) for e in m],
        }))
    return 0


def _parse_x(args: argparse.Namespace) -> list[int]:
    if args.x_json:
        data = json.loads(Path(args.x_json).read_text())
        return [int(v) for v in data["X"]]
    try:
        return [int(tok) for tok in args.x.replace(",", " ").split()]
    except ValueError as exc:
        raise CLIError(f"cannot parse X: {args.x!r}") from exc


def cmd_switch(args: argparse.Namespace) -> int:
    graphs = _read_graphs(args.input)
    if len(graphs) != 1:
        raise CLIError("switch expects exactly one graph")
    g = graphs[0]
    try:
        p = SwitchingPartition(_parse_x(args), g.n)
        gs = apply_switch(g, p)
    except InvalidSwitchingSet as exc:
        raise CLIError(f"invalid switching set: {exc}") from exc
    except ValueError as exc:
        raise CLIError(str(exc)) from exc
    print(to_graph6(gs))
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    report = scan_cospectral_pm(args.k, args.n_max)
    print(_dump(report.to_json()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cospectral-pm",
        description="Cospectral regular graphs with and without a perfect matching.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a family graph")
    p.add_argument("--b", type=int, required=True, help="degree, at least 5")
    p.add_argument("--switched", action="store_true", help="emit the switched mate G'")
    p.add_argument("--format", choices=("graph6", "dot", "json"), default="graph6")
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p.add_argument("--sidecar", help="layout JSON path (default: OUTPUT.json when -o is given)")
    p.add_argument("--seed", type=int, help="randomize ties in the big-cycle wiring")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("certify", help="build and check a pair, print a JSON report")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("spectrum", help="characteristic polynomial of graph6 input")
    p.add_argument("input", nargs="?", help="graph6 file, or - / omitted for stdin")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("match", help="maximum matching of graph6 input")
    p.add_argument("input", nargs="?")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("switch", help="Godsil-McKay switch of graph6 input")
    p.add_argument("input", nargs="?")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--x", help="switching set, comma separated vertex indices")
    group.add_argument("--x-json", help='JSON file of the form {"X": [...]}')
    p.set_defaults(func=cmd_switch)

    p = sub.add_parser("search", help="scan small k-regular graphs for mixed cospectral classes")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (CLIError, UnsupportedDegree) as exc:
        print(json.dumps({"error": str(exc)}))
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
