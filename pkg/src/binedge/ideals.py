"""Ideals of the form <x_i, y_i : i in S> + J_H, handled purely combinatorially.

No polynomial is ever built. A prime P_S(H~) is stored as the set S plus
the vertex supports of its complete-graph blocks; a general sum is stored as
S plus the (not necessarily complete) graph H on the surviving vertices.
Both forms determine the ideal uniquely, so equality of the stored data is
equality of ideals.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product

from .graph import Graph, _components, components_after_deletion, cut_supports


def _fmt_set(vs) -> str:
    return "{" + ",".join(str(v) for v in sorted(vs)) + "}"


@dataclass(frozen=True)
class PrimeComponentIdeal:
    """P_S(H~) = <x_i, y_i : i in s> + J(K_C1) + ... + J(K_Cc)."""

    n: int
    s: frozenset
    cliques: tuple

    def __post_init__(self):
        cliques = tuple(sorted((frozenset(c) for c in self.cliques), key=min))
        object.__setattr__(self, "s", frozenset(self.s))
        object.__setattr__(self, "cliques", cliques)
        covered = set(self.s)
        for c in cliques:
            if not c:
                raise ValueError("empty clique")
            if covered & c:
                raise ValueError("cliques must be disjoint from each other and from s")
            covered |= c
        if covered != set(range(1, self.n + 1)):
            raise ValueError("s and cliques must partition 1..n")

    @property
    def key(self) -> tuple:
        return (tuple(sorted(self.s)), tuple(tuple(sorted(c)) for c in self.cliques))

    def krull_dim(self) -> int:
        return sum(len(c) + 1 for c in self.cliques)

    def height(self) -> int:
        return 2 * self.n - self.krull_dim()

    @property
    def is_maximal(self) -> bool:
        return len(self.s) == self.n

    @property
    def is_monomial(self) -> bool:
        return all(len(c) == 1 for c in self.cliques)

    def display(self) -> str:
        parts = []
        if self.s:
            parts.append("<x_i,y_i : i in " + _fmt_set(self.s) + ">")
        parts += ["J(" + _fmt_set(c) + ")" for c in self.cliques if len(c) > 1]
        return " + ".join(parts) if parts else "0"

    def generators(self) -> list[str]:
        """Minimal generators in x_i / y_i / D_ij notation, for display only."""
        gens = [f"x{i}" for i in sorted(self.s)] + [f"y{i}" for i in sorted(self.s)]
        for c in self.cliques:
            gens += [f"D{a},{b}" for a, b in combinations(sorted(c), 2)]
        return gens

    def to_json(self) -> dict:
        return {"s": sorted(self.s), "cliques": [sorted(c) for c in self.cliques]}

    @classmethod
    def from_json(cls, n: int, data: dict) -> "PrimeComponentIdeal":
        return cls(n, frozenset(data["s"]), tuple(frozenset(c) for c in data["cliques"]))

    def as_sum(self) -> "SumIdeal":
        edges = frozenset(e for c in self.cliques for e in combinations(sorted(c), 2))
        return SumIdeal(self.n, self.s, edges)


@dataclass(frozen=True)
class SumIdeal:
    """<x_i, y_i : i in s> + J_H with H a graph on 1..n minus s."""

    n: int
    s: frozenset
    edges: frozenset

    def __post_init__(self):
        s = frozenset(self.s)
        object.__setattr__(self, "s", s)
        object.__setattr__(
            self,
            "edges",
            frozenset(tuple(sorted(e)) for e in self.edges if not (set(e) & s)),
        )

    @property
    def key(self) -> tuple:
        return (tuple(sorted(self.s)), tuple(sorted(self.edges)))

    @cached_property
    def component_graphs(self) -> tuple:
        """((vertex set, edge set), ...) for the connected pieces of H, by minimum vertex."""
        adj = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        verts = set(range(1, self.n + 1)) - self.s
        return tuple(
            (comp, frozenset(e for e in self.edges if e[0] in comp))
            for comp in _components(verts, adj)
        )

    def display(self) -> str:
        parts = []
        if self.s:
            parts.append("<x_i,y_i : i in " + _fmt_set(self.s) + ">")
        parts += [
            "J(" + ",".join(f"{a}{b}" for a, b in sorted(es)) + ")"
            for _, es in self.component_graphs
            if es
        ]
        return " + ".join(parts) if parts else "0"


def order_key(p) -> tuple:
    """Deterministic ordering: by |S|, then lexicographically."""
    return (len(p.s), p.key)


def from_support(g: Graph, s) -> PrimeComponentIdeal:
    s = frozenset(s)
    return PrimeComponentIdeal(g.n, s, tuple(components_after_deletion(g, s)))


def _as_sum(x) -> SumIdeal:
    return x.as_sum() if isinstance(x, PrimeComponentIdeal) else x


def ideal_sum(*ideals) -> SumIdeal:
    """Sum of ideals given as PrimeComponentIdeal or SumIdeal on the same [n]."""
    parts = [_as_sum(x) for x in ideals]
    if not parts:
        raise ValueError("need at least one ideal")
    n = parts[0].n
    if any(p.n != n for p in parts):
        raise ValueError("ideals live in different rings")
    s = frozenset().union(*(p.s for p in parts))
    edges = frozenset().union(*(p.edges for p in parts))
    return SumIdeal(n, s, edges)


def is_prime(x) -> bool:
    if isinstance(x, PrimeComponentIdeal):
        return True
    for verts, es in x.component_graphs:
        k = len(verts)
        if len(es) != k * (k - 1) // 2:
            return False
    return True


def to_prime(x: SumIdeal) -> PrimeComponentIdeal:
    if not is_prime(x):
        raise ValueError("ideal is not prime")
    return PrimeComponentIdeal(x.n, x.s, tuple(v for v, _ in x.component_graphs))


def contains(p: PrimeComponentIdeal, q: PrimeComponentIdeal) -> bool:
    """Whether the ideal p contains the ideal q."""
    if not q.s <= p.s:
        return False
    block = {}
    for idx, c in enumerate(p.cliques):
        for v in c:
            block[v] = idx
    for c in q.cliques:
        rest = c - p.s
        if len(rest) > 1 and len({block[v] for v in rest}) > 1:
            return False
    return True


def _component_options(verts: frozenset, es: frozenset) -> list:
    """Minimal primes of J_K for one connected piece, as (S, cliques) pairs."""
    k = len(verts)
    if len(es) == k * (k - 1) // 2:
        return [(frozenset(), (verts,))]
    adj = {v: set() for v in verts}
    for a, b in es:
        adj[a].add(b)
        adj[b].add(a)
    return [(s, tuple(_components(verts - s, adj))) for s in cut_supports(verts, adj)]


def decompose(x) -> list[PrimeComponentIdeal]:
    """Minimal primes of a SumIdeal, one choice of minimal prime per connected piece."""
    x = _as_sum(x)
    if is_prime(x):
        return [to_prime(x)]
    options = [_component_options(v, e) for v, e in x.component_graphs]
    primes = []
    for choice in product(*options):
        s = set(x.s)
        cliques = []
        for cs, cl in choice:
            s |= cs
            cliques.extend(cl)
        primes.append(PrimeComponentIdeal(x.n, frozenset(s), tuple(cliques)))
    primes = sorted(set(primes), key=order_key)
    # drop anything containing another candidate; never fires for genuine minimal primes
    return [p for p in primes if not any(q != p and contains(p, q) for q in primes)]


def minimal_primes(g: Graph) -> list[PrimeComponentIdeal]:
    return decompose(SumIdeal(g.n, frozenset(), g.edges))
