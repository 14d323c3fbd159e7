"""Command-line surface: topology info, disjoint-path routing, certification.

Vertex arguments and all printed vertices use the display convention,
position n first ("00010" in Q(5,3) sets position 2 only).  JSON output
is the stable machine format; text output is for humans.  Exit codes:
0 success/verified, 1 verification mismatch, 2 usage or domain error,
3 exhaustive-search cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import oracle
from .errors import DomainError, ResourceLimitError
from .metric import breakpoint_omega, diameter, predicted_wide_diameter
from .pathgen import PathSet, disjoint_paths
from .topology import EnhancedHypercube, edge_class, format_vertex, parse_vertex

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _graph(args: argparse.Namespace) -> EnhancedHypercube:
    return EnhancedHypercube(args.n, args.k)


def _emit(payload: dict[str, Any], fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


# ---------------------------------------------------------------------------
# info
# ---------------------------------------------------------------------------


def _cmd_info(args: argparse.Namespace) -> int:
    g = _graph(args)
    d = diameter(g)
    bp = breakpoint_omega(g)
    table = [
        {"omega": w, "value": predicted_wide_diameter(g, w)}
        for w in range(1, g.n + 2)
    ]
    payload = {
        "n": g.n,
        "k": g.k,
        "command": "info",
        "vertices": g.num_vertices,
        "degree": g.degree,
        "diameter": d,
        "connectivity": g.n + 1,
        "breakpoint": bp,
        "table": table,
    }
    lines = [
        f"Q({g.n},{g.k}): {g.num_vertices} vertices, degree {g.degree}, "
        f"diameter {d}, connectivity {g.n + 1}",
        f"predicted wide/fault diameter steps to {d + 1} at omega = {bp}:",
        "  omega: " + " ".join(f"{row['omega']:>2}" for row in table),
        "  value: " + " ".join(f"{row['value']:>2}" for row in table),
    ]
    _emit(payload, args.format, "\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------
# route
# ---------------------------------------------------------------------------


def _path_payload(g: EnhancedHypercube, path: tuple[int, ...]) -> dict[str, Any]:
    dims = [edge_class(g, x, y) for x, y in zip(path, path[1:])]
    return {
        "vertices": [format_vertex(g, x) for x in path],
        "dims": dims,
        "length": len(path) - 1,
    }


def _certificate_payload(result: oracle.VerificationResult) -> dict[str, Any]:
    return {
        "ok": result.ok,
        "violations": [
            {"kind": vi.kind, "paths": list(vi.paths), "detail": vi.detail}
            for vi in result.violations
        ],
    }


def _route_payload(
    g: EnhancedHypercube, ps: PathSet, cert: oracle.VerificationResult
) -> dict[str, Any]:
    return {
        "n": g.n,
        "k": g.k,
        "command": "route",
        "u": format_vertex(g, ps.endpoints[0]),
        "v": format_vertex(g, ps.endpoints[1]),
        "paths": [_path_payload(g, p) for p in ps.paths],
        "guarantee": {
            "count_short": ps.guarantee.count_short,
            "bound_short": ps.guarantee.bound_short,
            "bound_all": ps.guarantee.bound_all,
        },
        "certificate": _certificate_payload(cert),
    }


def _cmd_route(args: argparse.Namespace) -> int:
    g = _graph(args)
    u = parse_vertex(g, args.u)
    v = parse_vertex(g, args.v)
    if u == v:
        raise DomainError("degenerate pair: u and v are the same vertex")
    count = args.paths if args.paths is not None else g.n + 1
    ps = disjoint_paths(g, u, v, count)
    cert = oracle.verify_path_set(g, ps)
    payload = _route_payload(g, ps, cert)
    lines = [
        f"{len(ps.paths)} disjoint paths {payload['u']} -> {payload['v']} "
        f"(lengths {', '.join(map(str, ps.lengths))})",
    ]
    for p in payload["paths"]:
        lines.append(
            "  " + " -> ".join(p["vertices"]) + f"   dims {tuple(p['dims'])}"
        )
    lines.append(f"certificate: {'ok' if cert.ok else 'VIOLATED'}")
    _emit(payload, args.format, "\n".join(lines))
    return EXIT_OK if cert.ok else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# certify
# ---------------------------------------------------------------------------


def _fault_witness_payload(g: EnhancedHypercube, rep: oracle.FaultDiameterReport):
    if rep.fault_kind == "vertex":
        faults = [format_vertex(g, x) for x in rep.witness_faults]
    else:
        faults = [
            [format_vertex(g, a), format_vertex(g, b)] for a, b in rep.witness_faults
        ]
    return {
        "faults": faults,
        "pair": [format_vertex(g, x) for x in rep.witness_pair],
    }


def _cmd_certify(args: argparse.Namespace) -> int:
    g = _graph(args)
    if args.omega is not None and args.all:
        raise DomainError("pass either --omega W or --all, not both")
    omegas = [args.omega] if args.omega is not None else list(range(1, g.n + 2))
    results = []
    all_match = True
    for w in omegas:
        predicted = predicted_wide_diameter(g, w)
        rep = oracle.fault_diameter_exact(
            g, w, args.faults, cap=args.cap, workers=args.workers
        )
        entry: dict[str, Any] = {
            "omega": w,
            "predicted": predicted,
            "fault_diameter": rep.worst_value,
            "witness": _fault_witness_payload(g, rep),
        }
        match = rep.worst_value == predicted
        if args.faults == "vertex":
            wide = oracle.wide_diameter_exact(
                g, w, cap=args.cap, workers=args.workers
            )
            entry["wide"] = {
                "method": wide.method,
                "value": wide.value,
                "lower": wide.lower,
                "upper": wide.upper,
                "exact": wide.exact,
            }
            match = match and wide.exact and wide.value == predicted
        entry["match"] = match
        all_match = all_match and match
        results.append(entry)
    payload = {
        "n": g.n,
        "k": g.k,
        "command": "certify",
        "fault_kind": args.faults,
        "results": results,
        "all_match": all_match,
    }
    lines = [f"certify Q({g.n},{g.k}), {args.faults} faults:"]
    for entry in results:
        wide_txt = ""
        if "wide" in entry:
            wide_txt = (
                f", wide {entry['wide']['value']}"
                f" ({entry['wide']['method']}{'' if entry['wide']['exact'] else ', bounds open'})"
            )
        lines.append(
            f"  omega {entry['omega']}: predicted {entry['predicted']}, "
            f"fault diameter {entry['fault_diameter']}{wide_txt}"
            f" -> {'match' if entry['match'] else 'MISMATCH'}"
        )
    lines.append("all match" if all_match else "MISMATCH against prediction")
    _emit(payload, args.format, "\n".join(lines))
    return EXIT_OK if all_match else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# parser / entry point
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="enhcube",
        description=(
            "Disjoint-path routing and diameter-robustness certification "
            "for enhanced hypercubes Q(n,k)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("n", type=int, help="dimension count (n >= 3)")
        p.add_argument("k", type=int, help="complement width (2 <= k <= n)")
        p.add_argument(
            "--format", choices=("text", "json"), default="text", help="output format"
        )
        p.add_argument(
            "--workers", type=int, default=1, help="sweep parallelism (never changes output)"
        )

    p_info = sub.add_parser("info", help="parameters, diameter, predicted robustness table")
    common(p_info)
    p_info.set_defaults(func=_cmd_info)

    p_route = sub.add_parser("route", help="construct disjoint u,v-paths")
    common(p_route)
    p_route.add_argument("u", help="start vertex, n characters of 0/1")
    p_route.add_argument("v", help="end vertex, n characters of 0/1")
    p_route.add_argument(
        "--paths", type=int, default=None, help="number of paths (default n+1)"
    )
    p_route.set_defaults(func=_cmd_route)

    p_cert = sub.add_parser(
        "certify", help="exhaustively check fault/wide diameters against the prediction"
    )
    common(p_cert)
    p_cert.add_argument("--omega", type=int, default=None, help="single omega to check")
    p_cert.add_argument(
        "--all", action="store_true", help="check omega = 1..n+1 (the default)"
    )
    p_cert.add_argument(
        "--faults", choices=("vertex", "edge"), default="vertex", help="fault model"
    )
    p_cert.add_argument(
        "--cap", type=int, default=None, help="exhaustive-search dimension cap override"
    )
    p_cert.set_defaults(func=_cmd_certify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
