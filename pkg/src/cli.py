"""Command-line surface: classify, color, verify, decide, catalog, gen, table, search.

Exit codes: 0 success, 1 other failure, 2 not colorable, 3 out of class,
4 unreadable input, 5 search budget exhausted.
"""
import argparse
import json
import logging
import os
import sys
from typing import Any, Dict, List, Optional

from .colorers.dispatch import METHODS, auto_color
from .config import configure_logging, load_settings, parse_sizes
from .data import catalog
from .data.generator import generate
from .data.schemas import ClassConstraint, GenSpec, SolveConfig
from .errors import PackingError
from .graph.classify import classify
from .graph.io import format_coloring, format_graph, read_coloring, read_graph, write_coloring
from .main import TableReproduction, search
from .packing.coloring import make_sequence, parse_sequence, verify
from .report import profile_json, profile_text, result_text, violations_text
from .solver.exact import decide

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_NOT_COLORABLE = 2
EXIT_BAD_INPUT = 4
EXIT_TIMEOUT = 5

CLASS_KEYS = {
    "saturation": "saturation_max",
    "sat": "saturation_max",
    "three_k": "three_k_max",
    "delta": "max_degree_max",
}


def parse_class(text: str) -> ClassConstraint:
    """'saturation=2,g3=3' style constraint; g3=N pins both bounds"""
    fields: Dict[str, Any] = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise ValueError(f"expected key=value, got {part!r}")
        key, value = (x.strip() for x in part.split("=", 1))
        key = CLASS_KEYS.get(key, key)
        if value.lower() in ("true", "false"):
            fields[key] = value.lower() == "true"
        elif key == "g3":
            fields["g3_min"] = fields["g3_max"] = float(value)
        else:
            fields[key] = float(value) if key.startswith("g3") else int(value)
    unknown = set(fields) - set(ClassConstraint.model_fields)
    if unknown:
        raise ValueError(f"unknown class keys {sorted(unknown)}")
    return ClassConstraint(**fields)


def _emit(args, data: Dict[str, Any], text: str) -> None:
    if args.json:
        print(json.dumps(data, indent=2, ensure_ascii=False, default=str))
    else:
        print(text)


def _settings(args):
    settings = load_settings()
    if getattr(args, "budget", None) is not None and args.command == "decide":
        settings = settings.model_copy(update={"node_budget": args.budget})
    return settings


def cmd_classify(args) -> int:
    g = read_graph(args.graph)
    profile = classify(g)
    _emit(args, {"n": g.n, "m": g.m, **profile_json(profile)}, f"n={g.n} m={g.m}\n{profile_text(profile)}")
    return EXIT_OK


def cmd_color(args) -> int:
    g = read_graph(args.graph)
    s = parse_sequence(args.s)
    settings = _settings(args)
    config = {"node_budget": settings.node_budget, "time_budget": settings.time_budget, "strict": settings.strict}
    result = auto_color(g, s, method=args.method, config=config)
    # never emit a coloring that does not verify
    violations = verify(g, s, result.coloring)
    if violations:
        print(violations_text(violations), file=sys.stderr)
        return EXIT_FAILURE
    body = format_coloring(s, result.coloring)
    if args.out:
        write_coloring(s, result.coloring, args.out)
    used = len(set(result.coloring.assignment))
    _emit(
        args,
        {"sequence": str(s), "coloring": list(result.coloring.assignment), "colorer": result.colorer,
         "trace": result.trace, "good_flags": result.good_flags, "used_fallback": result.used_fallback,
         "repaired": result.repaired, "classes_used": used},
        f"{result_text(result)}\nclasses used: {used}\n{'' if args.out else body}".rstrip(),
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    s, coloring = read_coloring(args.coloring)
    if args.s:
        s = parse_sequence(args.s)
    violations = verify(g, s, coloring)
    _emit(
        args,
        {"valid": not violations, "violations": [v.model_dump() for v in violations]},
        "✅ OK" if not violations else violations_text(violations),
    )
    return EXIT_OK if not violations else EXIT_FAILURE


def cmd_decide(args) -> int:
    g = read_graph(args.graph)
    s = parse_sequence(args.s)
    settings = _settings(args)
    cfg = SolveConfig(node_budget=settings.node_budget, time_budget=settings.time_budget, workers=settings.workers)
    outcome = decide(g, s, cfg)
    data = {"status": outcome.status, "nodes": outcome.nodes, "seconds": outcome.elapsed,
            "coloring": list(outcome.coloring.assignment) if outcome.coloring else None}
    if outcome.colorable:
        text = f"✅ colorable ({outcome.nodes} nodes)\n{format_coloring(s, outcome.coloring).rstrip()}"
        code = EXIT_OK
    elif outcome.status == "timeout":
        text = f"⏱️  budget exhausted after {outcome.nodes} nodes"
        code = EXIT_TIMEOUT
    else:
        text = f"❌ not ({s})-packing colorable ({outcome.nodes} nodes)"
        code = EXIT_NOT_COLORABLE
    _emit(args, data, text)
    return code


def cmd_catalog(args) -> int:
    if not args.name:
        entries = [catalog.get(name) for name in catalog.names()]
        _emit(args, {"names": [e.name for e in entries]},
              "\n".join(f"{e.name:<16} n={e.n:<3} {e.description}" for e in entries))
        return EXIT_OK
    entry = catalog.get(args.name)
    g = entry.graph()
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as f:
            f.write(format_graph(g, entry.description))
    facts = [{"sequence": str(f.sequence), "colorable": f.colorable, "note": f.note} for f in entry.facts]
    lines = [f"{entry.name}: {entry.description}", format_graph(g).rstrip()]
    lines += [f"{'✅' if f['colorable'] else '❌'} ({f['sequence']}) {f['note']}" for f in facts]
    _emit(args, {"name": entry.name, "n": g.n, "edges": g.edges(), "facts": facts}, "\n".join(lines))
    return EXIT_OK


def cmd_gen(args) -> int:
    settings = load_settings()
    constraint = parse_class(args.cls)
    sizes = parse_sizes(args.sizes) if args.sizes else settings.sizes
    seed = args.seed if args.seed is not None else settings.seed
    if args.out:
        os.makedirs(args.out, exist_ok=True)
    texts: List[str] = []
    for i in range(args.count):
        g = generate(GenSpec(constraint=constraint, sizes=sizes, seed=seed + i))
        text = format_graph(g, f"{constraint.label()} seed {seed + i}")
        if args.out:
            with open(os.path.join(args.out, f"graph_{seed + i}.txt"), 'w', encoding='utf-8') as f:
                f.write(text)
        else:
            texts.append(text)
    if texts:
        print("\n".join(texts), end="")
    return EXIT_OK


def cmd_table(args) -> int:
    config: Dict[str, Any] = {}
    if args.count is not None:
        config["count"] = args.count
    if args.sizes:
        config["sizes"] = parse_sizes(args.sizes)
    if args.seed is not None:
        config["seed"] = args.seed
    system = TableReproduction(config)
    results = system.load_results(args.load) if args.load else system.evaluate()
    if args.json:
        print(json.dumps([row.model_dump(mode="json") for row in results["rows"]], indent=2, ensure_ascii=False))
    else:
        system.print_summary(results)
    if args.out:
        system.save_results(results, args.out)
    failing = results["metrics"].get("failures", {}).get("failing_count", 0)
    return EXIT_OK if not failing else EXIT_FAILURE


def cmd_search(args) -> int:
    settings = load_settings()
    excluded: List[str] = []
    if args.conjecture:
        conjecture = catalog.get_conjecture(args.conjecture)
        constraint = conjecture.constraint
        excluded = conjecture.excluded
        s = make_sequence(conjecture.s) if conjecture.s else make_sequence(range(1, conjecture.chi_max + 1))
    else:
        if not (args.cls and args.s):
            raise ValueError("search needs --conjecture or both --class and --s")
        constraint = parse_class(args.cls)
        s = parse_sequence(args.s)
    sizes = parse_sizes(args.sizes) if args.sizes else settings.sizes
    seed = args.seed if args.seed is not None else settings.seed
    cfg = SolveConfig(node_budget=settings.node_budget, time_budget=settings.time_budget, workers=settings.workers)
    if not args.json:
        print(f"🔍 searching {constraint.label()} for a graph that is not ({s})-packing colorable...")
    outcome = search(constraint, s, sizes, args.budget, seed=seed, excluded=excluded, solve_config=cfg)

    found = outcome["found"]
    if found is not None:
        name = catalog.find_isomorphic(found, catalog.names())
        known = f" (isomorphic to {name[0]})" if name else ""
        text = f"❌ counterexample after {outcome['tried']} instances{known}\n{format_graph(found).rstrip()}"
        data = {"found": True, "tried": outcome["tried"], "n": found.n, "edges": found.edges(),
                "catalog_name": name[0] if name else None}
    else:
        reason = "no more instances in the class" if outcome["generation_exhausted"] else "budget used up"
        text = f"✅ no counterexample in {outcome['tried']} instances ({reason}, {outcome['timeouts']} timeouts)"
        data = {"found": False, **{k: v for k, v in outcome.items() if k != "found"}}
    _emit(args, data, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="packing", description="S-packing colorings of subcubic graphs")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("classify", "print the class profile of a graph file")
    p.add_argument("graph")
    p.set_defaults(func=cmd_classify)

    p = add("color", "produce an S-packing coloring")
    p.add_argument("graph")
    p.add_argument("--s", required=True, help="S-sequence, e.g. 1,2,2,3")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--out", help="coloring file to write")
    p.set_defaults(func=cmd_color)

    p = add("verify", "check a coloring file against a graph file")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--s", help="override the S-sequence stored in the coloring file")
    p.set_defaults(func=cmd_verify)

    p = add("decide", "exact decision of S-packing colorability")
    p.add_argument("graph")
    p.add_argument("--s", required=True)
    p.add_argument("--budget", type=int, help="search node budget")
    p.set_defaults(func=cmd_decide)

    p = add("catalog", "list catalog graphs or show one")
    p.add_argument("name", nargs="?")
    p.add_argument("--out", help="write the graph file")
    p.set_defaults(func=cmd_catalog)

    p = add("gen", "generate graphs of a class")
    p.add_argument("--class", dest="cls", required=True, help="e.g. saturation=2,g3=3")
    p.add_argument("--sizes", help="a..b")
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out", help="directory for graph files")
    p.set_defaults(func=cmd_gen)

    p = add("table", "reproduce the result table")
    p.add_argument("--sizes", help="a..b")
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", help="save the report as JSON")
    p.add_argument("--load", help="render a saved report")
    p.set_defaults(func=cmd_table)

    p = add("search", "look for a counterexample to a conjecture")
    p.add_argument("--class", dest="cls")
    p.add_argument("--s")
    p.add_argument("--conjecture", help="name from the conjecture registry")
    p.add_argument("--sizes", help="a..b")
    p.add_argument("--budget", type=int, default=100, help="instances to try")
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging("DEBUG" if args.verbose else load_settings().log_level)
    try:
        return args.func(args)
    except PackingError as e:
        print(f"❌ {e}", file=sys.stderr)
        return e.exit_code
    except (OSError, ValueError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
