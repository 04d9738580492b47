"""Graph and digraph representation, parsing, named constructions, and the
brute-force combinatorial oracles used to validate every algebraic result.

Vertices are labeled 1..n.  An undirected graph is viewed, whenever arcs
are needed, as its double cover: Arcs(G) = {(i,j),(j,i) : {i,j} in E}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal


class GraphError(Exception):
    pass


class ParseError(GraphError):
    pass


class GuardExceeded(GraphError):
    """Raised when an exhaustive operation is asked to exceed its size guard."""


@dataclass(frozen=True)
class Graph:
    """Simple graph or digraph on vertices 1..n (no loops, no multi-edges)."""

    n: int
    directed: bool
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)  # i < j
    arcs_set: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        pairs = self.arcs_set if self.directed else self.edges
        for a, b in pairs:
            if a == b:
                raise GraphError(f"self-loop at vertex {a}")
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise GraphError(f"endpoint out of range in ({a}, {b})")
        if not self.directed:
            for a, b in self.edges:
                if a > b:
                    raise GraphError("undirected edges must be stored as (min, max)")

    @classmethod
    def undirected(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        norm = frozenset((min(a, b), max(a, b)) for a, b in edges)
        return cls(n=n, directed=False, edges=norm)

    @classmethod
    def digraph(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n=n, directed=True, arcs_set=frozenset(arcs))

    @property
    def arcs(self) -> frozenset[tuple[int, int]]:
        if self.directed:
            return self.arcs_set
        return frozenset((a, b) for e in self.edges for a, b in (e, e[::-1]))

    def has_edge(self, i: int, j: int) -> bool:
        if self.directed:
            return (i, j) in self.arcs_set or (j, i) in self.arcs_set
        return (min(i, j), max(i, j)) in self.edges

    def has_arc(self, i: int, j: int) -> bool:
        if self.directed:
            return (i, j) in self.arcs_set
        return self.has_edge(i, j)

    def neighbors(self, i: int) -> list[int]:
        if self.directed:
            raise GraphError("neighbors() is for undirected graphs; use out_neighbors()")
        return sorted(b if a == i else a for a, b in self.edges if i in (a, b))

    def out_neighbors(self, i: int) -> list[int]:
        if not self.directed:
            return self.neighbors(i)
        return sorted(b for a, b in self.arcs_set if a == i)

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def adjacency_matrix(self) -> list[list[int]]:
        m = [[0] * self.n for _ in range(self.n)]
        for a, b in self.arcs:
            m[a - 1][b - 1] = 1
        return m

    def relabeled(self, perm: dict[int, int]) -> "Graph":
        """Apply a vertex relabeling {old: new}."""
        if self.directed:
            return Graph.digraph(self.n, ((perm[a], perm[b]) for a, b in self.arcs_set))
        return Graph.undirected(self.n, ((perm[a], perm[b]) for a, b in self.edges))

    def __repr__(self):
        kind = "Digraph" if self.directed else "Graph"
        return f"{kind}(n={self.n}, m={len(self.arcs_set) if self.directed else len(self.edges)})"


@dataclass(frozen=True)
class OrientedCycle:
    """Oriented partial 3-cycle (i,j,k) or oriented chordless 4-cycle (i,j,k,l).

    A partial 3-cycle covers only the two arcs (i,j),(j,k); the closing arc
    (k,i) must exist in the graph.  A chordless 4-cycle covers its four arcs
    and both diagonals must be absent.
    """

    kind: Literal["partial3", "chordless4"]
    vertices: tuple[int, ...]

    def __post_init__(self):
        expected = 3 if self.kind == "partial3" else 4
        if len(self.vertices) != expected:
            raise GraphError(f"{self.kind} cycle needs {expected} vertices")
        if len(set(self.vertices)) != expected:
            raise GraphError("cycle vertices must be distinct")

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        v = self.vertices
        if self.kind == "partial3":
            return ((v[0], v[1]), (v[1], v[2]))
        return ((v[0], v[1]), (v[1], v[2]), (v[2], v[3]), (v[3], v[0]))

    def valid_in(self, g: Graph) -> bool:
        v = self.vertices
        if any(not g.has_arc(a, b) for a, b in self.arcs):
            return False
        if self.kind == "partial3":
            return g.has_arc(v[2], v[0])
        return not g.has_arc(v[0], v[2]) and not g.has_arc(v[1], v[3])


@dataclass(frozen=True)
class HamCycle:
    """Directed Hamiltonian cycle, canonicalized to start at the smallest vertex."""

    vertices: tuple[int, ...]

    @classmethod
    def from_sequence(cls, seq: Iterable[int]) -> "HamCycle":
        seq = tuple(seq)
        pivot = seq.index(min(seq))
        return cls(seq[pivot:] + seq[:pivot])

    @property
    def arcs(self) -> frozenset[tuple[int, int]]:
        v = self.vertices
        return frozenset((v[i], v[(i + 1) % len(v)]) for i in range(len(v)))

    def reversed(self) -> "HamCycle":
        return HamCycle.from_sequence(self.vertices[::-1])

    def __len__(self):
        return len(self.vertices)


# ---------------------------------------------------------------------------
# parsing


def parse_graph(text: str, fmt: str = "edgelist", directed: bool = False) -> Graph:
    """Parse DIMACS ".col" or whitespace edge-list text into a normalized Graph.

    Edge-list vertices are relabeled to 1..n in order of first appearance;
    DIMACS vertices are taken verbatim from the "p edge n m" header.
    """
    if fmt == "dimacs":
        return _parse_dimacs(text, directed)
    if fmt == "edgelist":
        return _parse_edgelist(text, directed)
    raise ParseError(f"unknown format {fmt!r}")


def _parse_pair(parts: list[str], lineno: int) -> tuple[int, int]:
    if len(parts) != 2:
        raise ParseError(f"line {lineno}: expected two vertex ids, got {parts!r}")
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"line {lineno}: vertex ids must be integers") from None
    if a <= 0 or b <= 0:
        raise ParseError(f"line {lineno}: vertex ids must be positive")
    if a == b:
        raise ParseError(f"line {lineno}: self-loop {a} {b} rejected")
    return a, b


def _parse_edgelist(text: str, directed: bool) -> Graph:
    label: dict[int, int] = {}
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        a, b = _parse_pair(line.split(), lineno)
        for v in (a, b):
            if v not in label:
                label[v] = len(label) + 1
        pairs.append((label[a], label[b]))
    n = len(label)
    if directed:
        return Graph.digraph(n, pairs)
    return Graph.undirected(n, pairs)


def _parse_dimacs(text: str, directed: bool) -> Graph:
    n = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "edges", "col"):
                raise ParseError(f"line {lineno}: malformed problem line {line!r}")
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise ParseError(f"line {lineno}: malformed problem line {line!r}") from None
        elif parts[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before problem line")
            a, b = _parse_pair(parts[1:], lineno)
            if a > n or b > n:
                raise ParseError(f"line {lineno}: vertex id exceeds declared n={n}")
            pairs.append((a, b))
        else:
            raise ParseError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise ParseError("missing problem line 'p edge n m'")
    if directed:
        return Graph.digraph(n, pairs)
    return Graph.undirected(n, pairs)


def write_edgelist(g: Graph) -> str:
    """Canonical edge-list rendering (sorted pairs, one per line)."""
    pairs = sorted(g.arcs_set) if g.directed else sorted(g.edges)
    return "\n".join(f"{a} {b}" for a, b in pairs) + ("\n" if pairs else "")


# ---------------------------------------------------------------------------
# named constructions


def complete_graph(n: int) -> Graph:
    return Graph.undirected(n, ((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph.undirected(n, ((i, i % n + 1) for i in range(1, n + 1)))


def path_graph(n: int) -> Graph:
    return Graph.undirected(n, ((i, i + 1) for i in range(1, n)))


def wheel_graph(rim: int) -> Graph:
    """Wheel with hub 1 and rim 2..rim+1 in consecutive order."""
    if rim < 3:
        raise GraphError("wheel rim must have at least 3 vertices")
    n = rim + 1
    spokes = [(1, i) for i in range(2, n + 1)]
    rim_edges = [(i, i + 1) for i in range(2, n)] + [(n, 2)]
    return Graph.undirected(n, spokes + rim_edges)


def groetzsch_graph() -> Graph:
    """The Grotzsch graph: outer 5-cycle 1..5, inner ring 6..10, hub 11.

    Inner vertex 5+i is the twin of outer vertex i: it is adjacent to the
    two outer neighbors of i and to the hub.  This labeling makes the
    chordless-4-cycle cover in covers.groetzsch_example_cover() valid.
    """
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    twins = []
    for i in range(1, 6):
        prev = (i - 2) % 5 + 1
        nxt = i % 5 + 1
        twins += [(5 + i, prev), (5 + i, nxt)]
    hub = [(5 + i, 11) for i in range(1, 6)]
    return Graph.undirected(11, outer + twins + hub)


def petersen_graph() -> Graph:
    """Petersen graph: outer 5-cycle 1..5, spokes to 6..10, inner pentagram."""
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(5 + i, 5 + ((i + 1) % 5) + 1) for i in range(1, 6)]
    return Graph.undirected(10, outer + spokes + inner)


def empty_graph(n: int) -> Graph:
    return Graph.undirected(n, ())


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.directed != h.directed:
        raise GraphError("cannot union directed with undirected")
    shift = g.n
    if g.directed:
        arcs = set(g.arcs_set) | {(a + shift, b + shift) for a, b in h.arcs_set}
        return Graph.digraph(g.n + h.n, arcs)
    edges = set(g.edges) | {(a + shift, b + shift) for a, b in h.edges}
    return Graph.undirected(g.n + h.n, edges)


def named_graph(name: str, *params: int) -> Graph:
    """Dispatch for built-in constructions, e.g. named_graph("wheel", 5)."""
    table = {
        "complete": (complete_graph, 1),
        "cycle": (cycle_graph, 1),
        "path": (path_graph, 1),
        "wheel": (wheel_graph, 1),
        "empty": (empty_graph, 1),
        "groetzsch": (groetzsch_graph, 0),
        "petersen": (petersen_graph, 0),
    }
    if name not in table:
        raise GraphError(f"unknown named graph {name!r}")
    fn, arity = table[name]
    if len(params) != arity:
        raise GraphError(f"{name} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


# ---------------------------------------------------------------------------
# oriented cycle enumeration


def oriented_partial_3cycles(g: Graph) -> list[OrientedCycle]:
    """All (i,j,k) with arcs (i,j),(j,k) present and closing arc (k,i) present.

    All rotations and both orientations are listed, in lexicographic order
    of the vertex tuple.
    """
    if g.directed:
        raise GraphError("oriented cycles are defined on undirected graphs")
    out = []
    for i in range(1, g.n + 1):
        for j in g.neighbors(i):
            for k in g.neighbors(j):
                if k != i and g.has_edge(k, i):
                    out.append(OrientedCycle("partial3", (i, j, k)))
    out.sort(key=lambda c: c.vertices)
    return out


def oriented_chordless_4cycles(g: Graph) -> list[OrientedCycle]:
    """All (i,j,k,l) tracing a 4-cycle with both diagonals absent."""
    if g.directed:
        raise GraphError("oriented cycles are defined on undirected graphs")
    out = []
    for i in range(1, g.n + 1):
        for j in g.neighbors(i):
            for k in g.neighbors(j):
                if k == i or g.has_edge(i, k):
                    continue
                for l in g.neighbors(k):
                    if l in (i, j) or g.has_edge(j, l) or not g.has_edge(l, i):
                        continue
                    out.append(OrientedCycle("chordless4", (i, j, k, l)))
    out.sort(key=lambda c: c.vertices)
    return out


# ---------------------------------------------------------------------------
# Hamiltonian cycle enumeration


def enumerate_hamiltonian_cycles(g: Graph) -> list[HamCycle]:
    """All directed Hamiltonian cycles as canonical vertex sequences.

    For an undirected graph the double cover is searched, so every
    undirected Hamiltonian cycle appears twice (once per orientation).
    Backtracking is anchored at vertex 1 and explores neighbors in sorted
    order, so the output order is deterministic.
    """
    if g.n == 0:
        return []
    succ = {i: g.out_neighbors(i) for i in range(1, g.n + 1)}
    found: list[HamCycle] = []
    path = [1]
    used = [False] * (g.n + 1)
    used[1] = True

    def extend(v: int):
        if len(path) == g.n:
            if 1 in succ[v]:
                found.append(HamCycle.from_sequence(path))
            return
        for w in succ[v]:
            if not used[w]:
                used[w] = True
                path.append(w)
                extend(w)
                path.pop()
                used[w] = False

    extend(1)
    return found


# ---------------------------------------------------------------------------
# 3-colorability oracle


def brute_force_3colorable(g: Graph, max_n: int = 20) -> bool:
    """Exhaustive proper-3-coloring search with first-fail vertex selection."""
    if g.directed:
        raise GraphError("3-colorability is defined for undirected graphs")
    if g.n > max_n:
        raise GuardExceeded(f"brute-force 3-coloring guard: n={g.n} > {max_n}")
    adj = [set() for _ in range(g.n + 1)]
    for a, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    color = [0] * (g.n + 1)  # 0 = uncolored, colors 1..3

    def feasible_colors(v: int) -> list[int]:
        banned = {color[u] for u in adj[v] if color[u]}
        return [c for c in (1, 2, 3) if c not in banned]

    def solve(uncolored: set[int]) -> bool:
        if not uncolored:
            return True
        # first-fail: color the vertex with the fewest remaining choices
        v = min(uncolored, key=lambda u: (len(feasible_colors(u)), -len(adj[u]), u))
        choices = feasible_colors(v)
        if not choices:
            return False
        uncolored.discard(v)
        for c in choices:
            color[v] = c
            if solve(uncolored):
                return True
        color[v] = 0
        uncolored.add(v)
        return False

    return solve(set(range(1, g.n + 1)))
