"""Simple graphs on vertices 1..n and the combinatorics behind their cut sets."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

import networkx as nx

MAX_VERTICES = 64
MAX_SUBSET_ENUMERATION = 20

VertexSet = frozenset


class ParseError(ValueError):
    """Base class for graph input errors."""


class MalformedLineError(ParseError):
    pass


class DuplicateEdgeError(ParseError):
    pass


class LoopError(ParseError):
    pass


class VertexRangeError(ParseError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        normalized = set()
        for e in self.edges:
            u, v = sorted(e)
            if u == v:
                raise LoopError(f"loop at vertex {u}")
            if u < 1 or v > self.n:
                raise VertexRangeError(f"edge {{{u},{v}}} outside 1..{self.n}")
            normalized.add((u, v))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Graph":
        return cls(n, frozenset(tuple(sorted(e)) for e in edges))

    @property
    def vertices(self) -> frozenset:
        return frozenset(range(1, self.n + 1))

    def adjacency(self) -> dict[int, set]:
        adj = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def is_connected(self) -> bool:
        return len(components_after_deletion(self, frozenset())) == 1

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def to_graph6(self) -> str:
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from((u - 1, v - 1) for u, v in self.edges)
        return nx.to_graph6_bytes(h, header=False).decode("ascii").strip()

    def to_edge_list(self) -> str:
        lines = [str(self.n)] + [f"{u} {v}" for u, v in self.sorted_edges()]
        return "\n".join(lines) + "\n"


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def edgeless_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: vertices 1..a form one side, a+1..a+b the other."""
    return Graph.from_edges(
        a + b, [(i, j) for i in range(1, a + 1) for j in range(a + 1, a + b + 1)]
    )


def parse_graph(text: str) -> Graph:
    """Parse an edge list ("n" then "u v" lines) or a single graph6 line."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise MalformedLineError("empty input")
    if lines[0].isdigit():
        return _parse_edge_list(lines)
    if len(lines) != 1:
        raise MalformedLineError("graph6 input must be a single line")
    return _parse_graph6(lines[0])


def _parse_edge_list(lines: list[str]) -> Graph:
    n = int(lines[0])
    if not 1 <= n <= MAX_VERTICES:
        raise VertexRangeError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    seen = set()
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise MalformedLineError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise LoopError(f"line {lineno}: loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise VertexRangeError(f"line {lineno}: vertex outside 1..{n}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise DuplicateEdgeError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
    return Graph(n, frozenset(seen))


def _parse_graph6(line: str) -> Graph:
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line or any(not 63 <= ord(ch) <= 126 for ch in line):
        raise MalformedLineError(f"not a graph6 string: {line!r}")
    try:
        h = nx.from_graph6_bytes(line.encode("ascii"))
    except (nx.NetworkXError, ValueError) as exc:
        raise MalformedLineError(f"bad graph6 string {line!r}: {exc}") from None
    n = h.number_of_nodes()
    if not 1 <= n <= MAX_VERTICES:
        raise VertexRangeError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    return Graph(n, frozenset((min(u, v) + 1, max(u, v) + 1) for u, v in h.edges()))


# --- combinatorics on vertex subsets -------------------------------------

def _components(vertices: Iterable[int], adj: dict) -> list[frozenset]:
    remaining = set(vertices)
    comps = []
    for start in sorted(remaining):
        if start not in remaining:
            continue
        stack = [start]
        remaining.discard(start)
        comp = {start}
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w in remaining:
                    remaining.discard(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def components_after_deletion(g: Graph, s: Iterable[int]) -> list[frozenset]:
    """Connected components of G minus s, singletons included, sorted by minimum vertex."""
    s = frozenset(s)
    return _components(g.vertices - s, g.adjacency())


def cut_supports(vertices: frozenset, adj: dict) -> list[frozenset]:
    """Sets S with S empty or c(S minus i) < c(S) for all i in S, for a connected graph.

    Works on any vertex subset with a matching adjacency map (neighbours
    outside ``vertices`` are ignored), so it also serves induced subgraphs.
    """
    verts = sorted(vertices)
    if len(verts) > MAX_SUBSET_ENUMERATION:
        raise ValueError(f"subset enumeration capped at {MAX_SUBSET_ENUMERATION} vertices")
    sub_adj = {v: adj[v] & vertices for v in verts}
    if len(_components(verts, sub_adj)) != 1:
        raise ValueError("graph is disconnected; split into components first")

    count_cache: dict[frozenset, int] = {}

    def c(s: frozenset) -> int:
        if s not in count_cache:
            count_cache[s] = len(_components(vertices - s, sub_adj))
        return count_cache[s]

    out = []
    for k in range(len(verts) + 1):
        for combo in combinations(verts, k):
            s = frozenset(combo)
            if all(c(s - {i}) < c(s) for i in s):
                out.append(s)
    return out


def minimal_prime_supports(g: Graph) -> list[frozenset]:
    """Vertex sets S whose P_S(G) is a minimal prime of J_G, for connected G."""
    if not g.is_connected():
        raise ValueError("graph is disconnected; split into components first")
    return cut_supports(g.vertices, g.adjacency())


def simple_paths(g: Graph) -> Iterator[tuple[int, list[int], int]]:
    """Yield (i, interior, j) for every simple path with i < j, read from i."""
    adj = {v: sorted(ws) for v, ws in g.adjacency().items()}

    def walk(path: list[int], on_path: set):
        last = path[-1]
        for w in adj[last]:
            if w in on_path:
                continue
            if w > path[0]:
                yield (path[0], path[1:], w)
            path.append(w)
            on_path.add(w)
            yield from walk(path, on_path)
            path.pop()
            on_path.discard(w)

    for i in range(1, g.n + 1):
        yield from walk([i], {i})
