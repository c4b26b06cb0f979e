"""Command line front end.

Exit codes: 0 success / all checks pass, 1 verification mismatch, 2 usage or
input error, 3 double cover disconnected where distances are required.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence, TextIO

from . import constructions
from .edgelist import FORMATS, export_graph, format_edgelist, import_graph
from .errors import DisconnectedCover, SrgCoverError
from .graph import (
    Graph,
    SrgParams,
    bipartite_double_cover,
    connected_components,
    diameter,
    distance_matrix,
    is_bipartite,
    is_connected,
    is_irreducible,
    is_strongly_regular,
    is_triangle_free,
)
from .oracles import check_spectrum
from .quadfield import Spectrum
from .spectra import CaseTag, classify_cover_case, distance_spectrum_cover, srg_spectrum
from .verification import random_diam2_check, run_all

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_DISCONNECTED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # one-line diagnostic, exit 2
        raise UsageError(message)


def _resolve(target: str) -> tuple[str, Graph]:
    """A catalog/family name, or a path to an edge-list or JSON graph file."""
    path = Path(target)
    if path.is_file():
        return path.name, import_graph(path)
    return target, constructions.build(target)


def _dump(obj: dict, out: TextIO) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def cmd_catalog(args, out: TextIO) -> int:
    entries = list(constructions.CATALOG.values())
    if args.format == "json":
        _dump({"entries": [{"name": e.name,
                            "expected_srg": list(e.expected_srg.astuple()) if e.expected_srg else None,
                            "notes": e.notes} for e in entries]}, out)
        return EXIT_OK
    for e in entries:
        params = str(e.expected_srg) if e.expected_srg else "-"
        out.write(f"{e.name:<20} {params:<14} {e.notes}\n")
    return EXIT_OK


def cmd_show(args, out: TextIO) -> int:
    name, g = _resolve(args.target)
    params = is_strongly_regular(g)
    connected = is_connected(g)
    info = {
        "name": name,
        "order": g.order,
        "edges": g.size,
        "degree": g.regular_degree(),
        "srg": list(params.astuple()) if params else None,
        "connected": connected,
        "diameter": diameter(g) if connected else None,
        "triangle_free": is_triangle_free(g),
        "irreducible": is_irreducible(g),
        "bipartite": is_bipartite(g),
    }
    if args.format == "json":
        _dump(info, out)
    else:
        for key, value in info.items():
            out.write(f"{key}: {value}\n")
    return EXIT_OK


def cmd_cover(args, out: TextIO) -> int:
    _, g = _resolve(args.target)
    out.write(format_edgelist(bipartite_double_cover(g)))
    return EXIT_OK


def _disconnected(message: str, out: TextIO, fmt: str) -> int:
    if fmt == "json":
        _dump({"error": "DisconnectedCover", "detail": message}, out)
    else:
        out.write(f"cover disconnected (K_(m,m) case): {message}\n")
    return EXIT_DISCONNECTED


def cmd_dspec(args, out: TextIO) -> int:
    name, g = _resolve(args.target)
    params = is_strongly_regular(g)
    if params is None:
        raise UsageError(f"{name} is not strongly regular")
    case = classify_cover_case(g, params)
    cover = bipartite_double_cover(g)
    if case.tag is CaseTag.DISCONNECTED_COVER:
        comps = len(connected_components(cover))
        return _disconnected(f"{name} {params}, BFS finds {comps} components", out, args.format)

    claim = distance_spectrum_cover(params)
    source = "closed form"
    if args.claim:
        claim = Spectrum.from_json(json.loads(Path(args.claim).read_text()))
        source = f"claim {args.claim}"
    ann, mult = check_spectrum(distance_matrix(cover), claim)
    ok = ann and mult
    if args.format == "json":
        _dump({"entry": name, "params": list(params.astuple()), "case": case.tag.value,
               "source": source, "spectrum": claim.to_json(),
               "annihilator": ann, "multiplicities_ok": mult, "pass": ok}, out)
    else:
        out.write(f"graph: {name}  params: {params}  case: {case.tag}\n")
        out.write(f"distance spectrum ({source}): {claim}\n")
        out.write(f"oracle: {'PASS' if ok else 'FAIL'} "
                  f"(annihilator {'ok' if ann else 'FAILED'}, "
                  f"multiplicities {'ok' if mult else 'FAILED'})\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_params(args, out: TextIO) -> int:
    params = SrgParams(args.n, args.d, args.a, args.c)
    base = srg_spectrum(params)
    try:
        dspec = distance_spectrum_cover(params)
    except DisconnectedCover as exc:
        return _disconnected(str(exc), out, args.format)
    if args.format == "json":
        _dump({"params": list(params.astuple()), "srg_spectrum": base.to_json(),
               "distance_spectrum": dspec.to_json(), "verified": False}, out)
    else:
        out.write(f"params: {params}\n")
        out.write(f"adjacency spectrum: {base}\n")
        out.write(f"distance spectrum of cover: {dspec}\n")
        out.write("unverified: no construction\n")
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    if args.all == bool(args.target):
        raise UsageError("verify takes either NAME or --all")
    summary = run_all(None if args.all else [args.target])
    rand = random_diam2_check(args.seed, args.trials) if args.seed is not None else None
    ok = summary.passed and (rand is None or rand.passed)
    if args.format == "json":
        doc = summary.to_json()
        if rand is not None:
            doc["random"] = rand.to_json()
        doc["pass"] = ok
        _dump(doc, out)
    else:
        for r in summary.reports:
            diam = (f"{r.diameter_measured}/{r.diameter_expected}"
                    if r.diameter_expected is not None else "-")
            out.write(f"{'PASS' if r.passed else 'FAIL'} {r.entry:<20} case={r.case} "
                      f"diameter={diam} spectrum={r.spectrum if r.spectrum else '-'}\n")
            for w in r.warnings:
                out.write(f"  warning: {w}\n")
        for w in summary.warnings:
            out.write(f"warning: {w}\n")
        if rand is not None:
            out.write(f"{'PASS' if rand.passed else 'FAIL'} random seed={rand.seed} "
                      f"trials={rand.trials} candidates={rand.candidates} skipped={rand.skipped}\n")
            for f in rand.failures:
                out.write(f"  failure: {f}\n")
        out.write(f"overall: {'PASS' if ok else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_export(args, out: TextIO) -> int:
    name, g = _resolve(args.target)
    ext = "json" if args.format == "json" else "edgelist"
    path = Path(args.output or f"{name.replace(':', '_').replace(',', '_')}.{ext}")
    export_graph(g, path, args.format)
    out.write(f"wrote {path}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="srgcover", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("catalog", help="list catalog entries")
    fmt(p)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("show", help="order, degree, SRG parameters and predicates")
    p.add_argument("target")
    fmt(p)
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("cover", help="edge list of the bipartite double cover")
    p.add_argument("target")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("dspec", help="closed-form distance spectrum of the cover plus oracle verdict")
    p.add_argument("target")
    p.add_argument("--claim", help="check this Spectrum JSON file instead of the closed form")
    fmt(p)
    p.set_defaults(func=cmd_dspec)

    p = sub.add_parser("params", help="spectra straight from SRG parameters, no graph built")
    for name in ("n", "d", "a", "c"):
        p.add_argument(name, type=int)
    fmt(p)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("verify", help="run the oracle harness")
    p.add_argument("target", nargs="?")
    p.add_argument("--all", action="store_true")
    p.add_argument("--seed", type=int, help="also fuzz random diameter-2 graphs with this seed")
    p.add_argument("--trials", type=int, default=200)
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="write a graph to a file")
    p.add_argument("target")
    p.add_argument("--format", choices=FORMATS, default="edgelist")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None,
         err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"srgcover: error: {exc}\n")
    except DisconnectedCover as exc:
        err.write(f"srgcover: {exc}\n")
        return EXIT_DISCONNECTED
    except (SrgCoverError, OSError, json.JSONDecodeError, KeyError) as exc:
        err.write(f"srgcover: error: {exc}\n")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
