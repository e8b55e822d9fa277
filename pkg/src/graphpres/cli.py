"""Command-line front end.

Subcommands: derive, verify, coxeter-check, export-cayley, export-graph,
list-builtins.  Exit codes: 0 success, 2 input error, 3 verification
failure, 4 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import builtins as builtin_actions
from .coset import EnumerationLimitError
from .coxeter import coxeter_implication_check
from .derive import (DerivationInput, DerivationInputError,
                     auto_derivation_input, derive_presentation,
                     derived_from_json, derived_to_json)
from .dot import export_cayley_dot, export_graph_dot, cayley_component
from .graphs import ActionedGraph, Graph
from .perms import ClosureLimitError, Perm
from .verify import (build_kozsul_model, check_covering_isomorphism,
                     presentation_order_check)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VERIFY = 3
EXIT_LIMIT = 4


class InputError(ValueError):
    pass


def action_from_json(data: dict, name: str = "action") -> DerivationInput:
    try:
        n = int(data["vertices"])
        edges = [(int(u), int(v)) for u, v in data["edges"]]
        gens = {str(k): Perm(map(int, data["generators"][k]))
                for k in sorted(data["generators"])}
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad action data: {exc}") from exc
    if not gens:
        raise InputError("bad action data: no generators")
    graph = Graph(n, edges)
    ag = ActionedGraph.from_generators(graph, gens)
    loops = data.get("loops")
    if loops is not None:
        loops = [tuple(map(int, loop)) for loop in loops]
    return auto_derivation_input(ag, loops, name)


def action_to_json(inp: DerivationInput) -> dict:
    ag = inp.ag
    data = {
        "vertices": ag.graph.vertex_count,
        "edges": [list(e) for e in sorted(ag.graph.edges)],
        "generators": {name: list(ag.action[idx].images)
                       for name, idx in sorted(ag.generator_labels.items())},
        "orbit_reps": list(inp.sc.base_vertices),
        "loops": [list(loop) for loop in inp.loops],
    }
    return data


def _load_input(args) -> DerivationInput:
    if args.builtin:
        try:
            return builtin_actions.load_builtin(args.builtin)
        except (KeyError, ValueError) as exc:
            raise InputError(exc.args[0] if exc.args else str(exc)) from exc
    path = Path(args.action)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path} at position {exc.pos}: {exc.msg}") from exc
    except OSError as exc:
        raise InputError(str(exc)) from exc
    return action_from_json(data, path.stem)


def _verification_report(derived, inp: DerivationInput, limit: int) -> tuple[dict, bool]:
    order = presentation_order_check(derived, inp.ag, limit=limit)
    report = {
        "order_check": {"ok": order.ok, "enumerated": order.enumerated,
                        "expected": order.expected, "detail": order.detail},
    }
    if not order.ok:
        return report, False
    model = build_kozsul_model(derived, inp.ag, inp.sc, limit=limit)
    cover = check_covering_isomorphism(model, inp.ag)
    report["reconstruction"] = {
        "ok": cover.ok, "vertices": cover.model_vertices, "edges": cover.model_edges,
        "graph_vertices": cover.graph_vertices, "graph_edges": cover.graph_edges,
        "defect": cover.defect,
    }
    return report, cover.ok


def cmd_derive(args) -> int:
    inp = _load_input(args)
    derived = derive_presentation(inp)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = (inp.name or "action").replace(":", "_")
    (out_dir / f"{stem}.presentation.json").write_text(
        json.dumps(derived_to_json(derived), indent=2, sort_keys=True) + "\n")
    (out_dir / f"{stem}.relators.txt").write_text(derived.presentation.pretty() + "\n")
    report = {"name": inp.name, "generators": list(derived.presentation.generators),
              "relator_count": len(derived.presentation.relators),
              "families": derived.families,
              "files": [str(out_dir / f"{stem}.presentation.json"),
                        str(out_dir / f"{stem}.relators.txt")]}
    ok = True
    if args.verify:
        vreport, ok = _verification_report(derived, inp, args.limit)
        report.update(vreport)
        if ok:
            report["order"] = vreport["order_check"]["enumerated"]
    print(json.dumps(report, indent=2, sort_keys=True))
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_verify(args) -> int:
    inp = _load_input(args)
    try:
        data = json.loads(Path(args.presentation).read_text())
        derived = derived_from_json(data)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON at position {exc.pos}: {exc.msg}") from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad presentation file: {exc}") from exc
    report, ok = _verification_report(derived, inp, args.limit)
    report["presentation"] = args.presentation
    print(json.dumps(report, indent=2, sort_keys=True))
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_coxeter_check(args) -> int:
    rep = coxeter_implication_check(limit=args.limit)
    print(json.dumps({
        "ok": rep.ok,
        "group_order": rep.group_order,
        "z_order": rep.z_order,
        "z_central": rep.z_central,
        "quotient_order": rep.quotient_order,
        "identities": {label: flag for label, flag in rep.identities},
    }, indent=2, sort_keys=True))
    return EXIT_OK if rep.ok else EXIT_VERIFY


def _resolve_generators(ag: ActionedGraph, names: str) -> dict[str, int]:
    gens: dict[str, int] = {}
    for raw in names.split(","):
        name = raw.strip()
        if not name:
            continue
        base, inverse = (name[:-3], True) if name.endswith("^-1") else (name, False)
        if base not in ag.generator_labels:
            raise InputError(f"unknown generator {base!r}; choices: "
                             + ", ".join(sorted(ag.generator_labels)))
        idx = ag.generator_labels[base]
        gens[name] = ag.group.inverse(idx) if inverse else idx
    if not gens:
        raise InputError("empty generating set")
    return gens


def cmd_export_cayley(args) -> int:
    inp = _load_input(args)
    gens = _resolve_generators(inp.ag, args.gens)
    if len(cayley_component(inp.ag.group, gens)) != inp.ag.group.order:
        print("warning: the set does not generate; exporting the subgroup diagram",
              file=sys.stderr)
    text = export_cayley_dot(inp.ag.group, gens)
    _write_or_stdout(args.out, text)
    return EXIT_OK


def cmd_export_graph(args) -> int:
    if args.builtin == "truncated-dodecahedron":
        graph = builtin_actions.truncated_dodecahedron().graph
    else:
        graph = _load_input(args).ag.graph
    _write_or_stdout(args.out, export_graph_dot(graph))
    return EXIT_OK


def cmd_list_builtins(_args) -> int:
    for name in builtin_actions.BUILTIN_NAMES:
        print(name)
    return EXIT_OK


def _write_or_stdout(out: str, text: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _add_source(sub, required=True):
    group = sub.add_mutually_exclusive_group(required=required)
    group.add_argument("--builtin", help="builtin action name (see list-builtins)")
    group.add_argument("--action", help="path to an action JSON file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphpres",
                                     description="presentations from graph actions")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("derive", help="derive a presentation from an action")
    _add_source(p)
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--verify", action="store_true",
                   help="enumerate and reconstruct the graph afterwards")
    p.add_argument("--limit", type=int, default=1_000_000)
    p.set_defaults(func=cmd_derive)

    p = subs.add_parser("verify", help="verify a stored presentation against an action")
    p.add_argument("presentation", help="presentation JSON file")
    _add_source(p)
    p.add_argument("--limit", type=int, default=1_000_000)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("coxeter-check", help="run the double-cover implication checks")
    p.add_argument("--limit", type=int, default=100_000)
    p.set_defaults(func=cmd_coxeter_check)

    p = subs.add_parser("export-cayley", help="write a Cayley diagram as DOT")
    _add_source(p)
    p.add_argument("--gens", required=True,
                   help="comma-separated generator names, ^-1 marks inverses")
    p.add_argument("--out", default="-", help="output file, - for stdout")
    p.set_defaults(func=cmd_export_cayley)

    p = subs.add_parser("export-graph", help="write the action's graph as DOT")
    _add_source(p)
    p.add_argument("--out", default="-", help="output file, - for stdout")
    p.set_defaults(func=cmd_export_graph)

    p = subs.add_parser("list-builtins", help="list builtin action names")
    p.set_defaults(func=cmd_list_builtins)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, DerivationInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (EnumerationLimitError, ClosureLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
