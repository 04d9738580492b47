#!/usr/bin/env python3
"""Print automorphism-polytope reports for a gallery of named graphs."""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from corpus import rigid6

from idealgraph.autpoly import exactness_report
from idealgraph.graphs import cycle_graph, disjoint_union, empty_graph, petersen_graph, wheel_graph


def main() -> int:
    gallery = [
        ("edgeless_3", empty_graph(3)),
        ("cycle_4", cycle_graph(4)),
        ("wheel_5", wheel_graph(5)),
        ("rigid_6", rigid6()),
        ("c3_plus_c4", disjoint_union(cycle_graph(3), cycle_graph(4))),
        ("petersen", petersen_graph()),
    ]
    print(f"{'graph':<12} {'|Aut|':>6} {'compactness':<20} {'sfpf':>5} {'pairs':>6}  conclusion")
    for name, g in gallery:
        t0 = time.monotonic()
        rep = exactness_report(g, trials=10, seed=0)
        print(
            f"{name:<12} {rep.aut_order:>6} {rep.compactness.verdict:<20} "
            f"{str(rep.strongly_fixed_point_free):>5} {str(rep.pair_summable):>6}  "
            f"{rep.conclusion}  ({time.monotonic() - t0:.1f}s)"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
