"""Command-line front end: certificate search, Hamiltonicity, automorphisms.

Subcommands
-----------
color3   degree-one cover plus increasing-degree certificate search, with a
         brute-force cross-check when the graph is small enough.
ham      Hamiltonian variety points and the unique-Hamiltonicity verdict,
         optionally with the reduced Groebner basis.
aut      automorphism group, compactness probe, and exactness report.

Exit codes: 0 = property decided, 2 = inconclusive (a size guard refused or
no verdict was reached), 1 = usage or input error.  Reports are JSON with a
versioned schema; identical config and seed give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import autpoly, covers, graphs, hamilton, nulla
from .graphs import Graph, GraphError, GuardExceeded, ParseError

SCHEMA = "ideal-graph/1"

_BUILTIN_ARITIES = {"groetzsch": 0, "petersen": 0, "complete": 1, "cycle": 1, "wheel": 1, "path": 1, "empty": 1}


@dataclass(frozen=True)
class RunConfig:
    command: str
    graph_spec: str
    fmt: str = "auto"
    directed: bool = False
    out: str | None = None
    seed: int = 0
    max_degree: int = 2
    trials: int = 20
    with_groebner: bool = False

    def __post_init__(self):
        if self.max_degree < 1:
            raise ValueError("degree cap must be >= 1")
        if self.trials < 0:
            raise ValueError("trials must be nonnegative")


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits 2; usage errors are 1 here
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(1)


def load_graph(config: RunConfig) -> Graph:
    """Resolve --graph: a readable file wins, otherwise a builtin name."""
    spec = config.graph_spec
    path = Path(spec)
    if path.is_file():
        fmt = config.fmt
        if fmt == "auto":
            fmt = "dimacs" if path.suffix == ".col" else "edgelist"
        return graphs.parse_graph(path.read_text(), fmt=fmt, directed=config.directed)
    name, _, arg = spec.partition(":")
    if name in _BUILTIN_ARITIES:
        params = (int(arg),) if arg else ()
        g = graphs.named_graph(name, *params)
        if config.directed:
            raise GraphError("builtin graphs are undirected; drop --directed")
        return g
    raise GraphError(f"{spec!r} is neither a readable file nor a builtin graph name")


def _graph_summary(g: Graph) -> dict:
    return {
        "n": g.n,
        "directed": g.directed,
        "edges": sorted(list(e) for e in (g.arcs_set if g.directed else g.edges)),
    }


def run_color3(config: RunConfig, g: Graph) -> tuple[dict, int]:
    cover = covers.find_deg1_cover(g)
    enc = nulla.encode_3col(g)
    cert = nulla.find_certificate_increasing(enc, config.max_degree)
    assert (cover is None) == (nulla.find_certificate(enc, 1) is None)
    oracle = None
    try:
        oracle = graphs.brute_force_3colorable(g)
    except GuardExceeded:
        pass
    certified = cert is not None or cover is not None
    if certified:
        verdict = "non_3_colorable"
    elif oracle is True:
        verdict = "three_colorable"
    elif oracle is False:
        verdict = "non_3_colorable"
    else:
        verdict = "undecided"
    report = {
        "schema": SCHEMA,
        "command": "color3",
        "graph": _graph_summary(g),
        "max_degree": config.max_degree,
        "cover": covers.cover_to_dict(g, cover) if cover else None,
        "certificate": nulla.certificate_to_dict(cert) if cert else None,
        "certificate_document": nulla.certificate_text(cert) if cert else None,
        "oracle_three_colorable": oracle,
        "certified": certified,
        "verdict": verdict,
    }
    return report, (0 if verdict != "undecided" else 2)


def run_ham(config: RunConfig, g: Graph) -> tuple[dict, int]:
    verdict = hamilton.is_uniquely_hamiltonian(g)
    points = hamilton.variety_points(g)
    report = {
        "schema": SCHEMA,
        "command": "ham",
        "graph": _graph_summary(g),
        "mode": "directed" if g.directed else "doubly_covered",
        "verdict": verdict.kind,
        "point_count": verdict.point_count,
        "expected_if_unique": verdict.expected_if_unique,
        "points": [hamilton.point_to_strings(p) for p in points],
    }
    if config.with_groebner:
        gb = hamilton.hamiltonian_groebner_basis(g)
        report["groebner"] = hamilton.groebner_to_dict(gb)
        report["standard_monomial_count"] = _count_json(gb)
    return report, 0


def _count_json(gb):
    from .cyclopoly import standard_monomial_count

    count = standard_monomial_count(gb)
    return "infinite" if count == float("inf") else count


def run_aut(config: RunConfig, g: Graph) -> tuple[dict, int]:
    rep = autpoly.exactness_report(g, trials=config.trials, seed=config.seed)
    point = None
    if rep.compactness.point is not None:
        n = g.n
        point = [[str(rep.compactness.point[i * n + j]) for j in range(n)] for i in range(n)]
    report = {
        "schema": SCHEMA,
        "command": "aut",
        "graph": _graph_summary(g),
        "seed": config.seed,
        "aut_order": rep.aut_order,
        "rigid": rep.aut_order == 1,
        "generators": list(rep.generators),
        "compactness": {
            "verdict": rep.compactness.verdict,
            "objectives_tried": rep.compactness.objectives_tried,
            "fractional_vertex": point,
        },
        "strongly_fixed_point_free": rep.strongly_fixed_point_free,
        "pair_summable": rep.pair_summable,
        "regular_compact_union": rep.regular_compact_union,
        "conclusion": rep.conclusion,
    }
    return report, (0 if rep.compactness.verdict != "inconclusive" else 2)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="idealgraph", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in (
        ("color3", "degree-bounded non-3-colorability certificates"),
        ("ham", "Hamiltonian variety and unique-Hamiltonicity verdict"),
        ("aut", "automorphism group and polytope report"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--graph", required=True, help="input path, or builtin name like groetzsch, petersen, wheel:5")
        p.add_argument("--format", choices=("auto", "edgelist", "dimacs"), default="auto")
        direction = p.add_mutually_exclusive_group()
        direction.add_argument("--directed", action="store_true")
        direction.add_argument("--undirected", dest="directed", action="store_false")
        p.add_argument("--out", default=None, help="report path (default: stdout)")
        p.add_argument("--seed", type=int, default=0)
        if name == "color3":
            p.add_argument("--max-degree", type=int, default=2, help="certificate degree cap (default 2)")
        if name == "ham":
            p.add_argument("--groebner", action="store_true", help="include the reduced Groebner basis")
        if name == "aut":
            p.add_argument("--trials", type=int, default=20, help="random probe objectives (default 20)")
    return parser


def config_from_args(args) -> RunConfig:
    return RunConfig(
        command=args.command,
        graph_spec=args.graph,
        fmt=args.format,
        directed=args.directed,
        out=args.out,
        seed=args.seed,
        max_degree=getattr(args, "max_degree", 2),
        trials=getattr(args, "trials", 20),
        with_groebner=getattr(args, "groebner", False),
    )


def run(config: RunConfig) -> int:
    try:
        g = load_graph(config)
    except (ParseError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    runner = {"color3": run_color3, "ham": run_ham, "aut": run_aut}[config.command]
    try:
        report, status = runner(config, g)
    except GuardExceeded as exc:
        report = {"schema": SCHEMA, "command": config.command, "graph": _graph_summary(g), "refusal": str(exc)}
        status = 2
    except (GraphError, ValueError) as exc:  # e.g. a directed graph fed to color3/aut
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if config.out:
        Path(config.out).write_text(text)
    else:
        sys.stdout.write(text)
    return status


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
