"""Command-line entry point.

    rigidkit paper-verify --dim D [--json]
    rigidkit generate --dim D --config {p,q,r,s,t} [--affine] [--reduced] -o FILE
    rigidkit analyze FILE [--versus FILE] [--base 1,4,5] --checks LIST [--json] [--witness FILE]
    rigidkit render FILE -o FILE.svg [--axes 1,2]

Exit codes: 0 success, 1 failing verdict or check error, 2 usage/parse error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .constructions import DEFAULT_MAX_DIM, PaperConfigLabel, family_instance, paper_affine_map, paper_configuration
from .core import Framework, RigidityError, apply_affine, edge_length_profile, format_rational, is_congruent, is_equivalent
from .enumeration import ContinuumOfRealizations, decide_global_rigidity, detect_pendant_structure, enumerate_realizations
from .io import DocumentError, FrameworkDocument
from .numeric import equilibrium_stress_basis, generic_global_rigidity, is_infinitesimally_rigid, numeric_rank, rigidity_matrix
from .render import render_svg
from .verify import format_report_text, paper_verify

CHECKS = ("equivalence-vs", "congruence-vs", "infinitesimal", "generic-global", "enumerate", "decide")


class UsageError(Exception):
    pass


def max_dim(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get("RIGIDKIT_MAX_DIM")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"RIGIDKIT_MAX_DIM must be an integer, got {env!r}") from None
    return DEFAULT_MAX_DIM


def _check_dim(d: int, cap: int) -> None:
    if not 2 <= d <= cap:
        raise UsageError(f"--dim must be between 2 and {cap} (set RIGIDKIT_MAX_DIM or --max-dim to raise the cap)")


def _id_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(report: dict, as_json: bool, text: str | None = None) -> None:
    if as_json:
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(text if text is not None else json.dumps(report, indent=2) + "\n")


def cmd_paper_verify(args) -> int:
    _check_dim(args.dim, max_dim(args.max_dim))
    report = paper_verify(args.dim)
    _emit(report, args.json, format_report_text(report))
    return 0 if report["status"] == "pass" else 1


def cmd_generate(args) -> int:
    _check_dim(args.dim, max_dim(args.max_dim))
    label = PaperConfigLabel.parse(args.config)
    if args.affine and label.in_affine_frame:
        raise UsageError(f"configuration {label.value} is already in the affine frame; drop --affine")
    config = paper_configuration(args.dim, label)
    if args.affine:
        config = apply_affine(paper_affine_map(args.dim), config)
    inst = family_instance(args.dim)
    graph = inst.graph_reduced if args.reduced else inst.graph_full
    doc = FrameworkDocument(Framework(graph, config), inst.base_vertices)
    if args.output == "-":
        sys.stdout.write(doc.dumps())
    else:
        doc.write(args.output)
    return 0


def _run_check(name: str, doc: FrameworkDocument, versus: FrameworkDocument | None, base, args) -> dict:
    f = doc.framework
    if name in ("equivalence-vs", "congruence-vs"):
        if versus is None:
            raise UsageError(f"check {name} needs --versus FILE")
        g = versus.framework
        if name == "congruence-vs":
            return {"congruent": is_congruent(f, g)}
        result = {"equivalent": is_equivalent(f, g)}
        if not result["equivalent"]:
            a, b = edge_length_profile(f), edge_length_profile(g)
            e = next(e for e in f.graph.edges if a[e] != b[e])
            result["first_mismatch"] = {
                "edge": list(e),
                "squared_length": format_rational(a[e]),
                "versus_squared_length": format_rational(b[e]),
            }
        return result
    if name == "infinitesimal":
        n, d = f.graph.n, f.dim
        return {
            "infinitesimally_rigid": is_infinitesimally_rigid(f),
            "rank": numeric_rank(rigidity_matrix(f)),
            "max_rank": d * n - d * (d + 1) // 2,
            "stresses": len(equilibrium_stress_basis(f)),
        }
    if name == "generic-global":
        res = generic_global_rigidity(f.graph, f.dim, args.trials, args.seed)
        return res.as_dict()
    if base is None:
        raise UsageError(f"check {name} needs --base or a 'base' field in the document")
    ps = detect_pendant_structure(f, base)
    if name == "enumerate":
        try:
            classes = enumerate_realizations(ps)
        except ContinuumOfRealizations as exc:
            return {"status": "Flexible", "reason": str(exc)}
        return {
            "pendants": list(ps.pendants),
            "count": len(classes),
            "classes": [
                {
                    "mask": list(c.reflection_mask),
                    "pendant_coords": {
                        str(v): [format_rational(x) for x in c.config[v]] for v in ps.pendants
                    },
                }
                for c in classes
            ],
        }
    verdict = decide_global_rigidity(ps)
    out = {"status": verdict.status.value, "classes": verdict.classes, "survivors": verdict.survivors}
    if verdict.witness is not None:
        wdoc = FrameworkDocument(Framework(f.graph, verdict.witness), tuple(sorted(ps.base)))
        out["witness"] = wdoc.to_dict()
        if args.witness:
            wdoc.write(args.witness)
            out["witness_file"] = str(args.witness)
    return out


def cmd_analyze(args) -> int:
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = [c for c in checks if c not in CHECKS]
    if unknown or not checks:
        raise UsageError(f"unknown checks {unknown}; choose from {', '.join(CHECKS)}")
    doc = FrameworkDocument.read(args.file)
    versus = FrameworkDocument.read(args.versus) if args.versus else None
    base = args.base if args.base is not None else doc.base
    f = doc.framework
    report = {
        "command": "analyze",
        "input": {"file": str(args.file), "dim": f.dim, "vertices": f.graph.n, "edges": len(f.graph.edges)},
        "seed": args.seed,
        "checks": [],
    }
    failed = False
    for name in checks:
        try:
            result = _run_check(name, doc, versus, base, args)
            report["checks"].append({"name": name, "ok": True, "result": result})
        except (RigidityError, ValueError) as exc:
            failed = True
            report["checks"].append({"name": name, "ok": False, "error": f"{type(exc).__name__}: {exc}"})
    report["status"] = "error" if failed else "completed"
    lines = [f"analyze {args.file}: dim={f.dim}, {f.graph.n} vertices, {len(f.graph.edges)} edges"]
    for c in report["checks"]:
        body = json.dumps(c["result"], sort_keys=True) if c["ok"] else c["error"]
        if c["ok"] and "witness" in c["result"]:
            body = json.dumps({k: v for k, v in c["result"].items() if k != "witness"}, sort_keys=True)
        lines.append(f"[{'ok' if c['ok'] else 'error'}] {c['name']}: {body}")
    lines.append(f"status: {report['status']}")
    _emit(report, args.json, "\n".join(lines) + "\n")
    return 1 if failed else 0


def cmd_render(args) -> int:
    doc = FrameworkDocument.read(args.file)
    axes = tuple(args.axes)
    if len(axes) != 2:
        raise UsageError("--axes takes exactly two indices")
    try:
        svg = render_svg(doc.framework, axes)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    Path(args.output).write_text(svg, encoding="utf-8")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rigidkit", description="Global rigidity tooling for bar-and-joint frameworks.")
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("paper-verify", help="verify the affine counterexample in dimension D")
    pv.add_argument("--dim", type=int, required=True)
    pv.add_argument("--json", action="store_true")
    pv.add_argument("--max-dim", type=int, default=None, help="override the dimension cap")
    pv.set_defaults(func=cmd_paper_verify)

    gen = sub.add_parser("generate", help="write a family framework as JSON")
    gen.add_argument("--dim", type=int, required=True)
    gen.add_argument("--config", required=True, choices=[l.value for l in PaperConfigLabel])
    gen.add_argument("--affine", action="store_true", help="apply the contraction first (p, q only)")
    gen.add_argument("--reduced", action="store_true", help="omit the {2,3} bar")
    gen.add_argument("-o", "--output", required=True)
    gen.add_argument("--max-dim", type=int, default=None)
    gen.set_defaults(func=cmd_generate)

    an = sub.add_parser("analyze", help="run checks on a framework document")
    an.add_argument("file")
    an.add_argument("--versus")
    an.add_argument("--base", type=_id_list)
    an.add_argument("--checks", required=True, help=f"comma-separated subset of {','.join(CHECKS)}")
    an.add_argument("--json", action="store_true")
    an.add_argument("--witness", help="write the witness document here")
    an.add_argument("--seed", type=int, default=0)
    an.add_argument("--trials", type=int, default=32)
    an.set_defaults(func=cmd_analyze)

    rd = sub.add_parser("render", help="draw a framework as SVG")
    rd.add_argument("file")
    rd.add_argument("-o", "--output", required=True)
    rd.add_argument("--axes", type=_id_list, default=[1, 2])
    rd.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DocumentError) as exc:
        print(f"rigidkit {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
