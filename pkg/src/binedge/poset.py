"""The posets of sums P_{J_G} and its prime refinement Q_{J_G}.

Elements are ordered by reverse inclusion: a bigger ideal sits lower, the
minimal primes of J_G are the maximal elements, and the implicit top 1 is
never stored.  The open interval (q, 1) is therefore the set of elements
whose ideal is strictly contained in I_q.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graph import Graph
from .homology import SimplicialComplex
from .ideals import (
    PrimeComponentIdeal,
    SumIdeal,
    contains,
    decompose,
    ideal_sum,
    is_prime,
    minimal_primes,
    order_key,
    to_prime,
)


def all_sums(generators) -> list[SumIdeal]:
    """Distinct sums of nonempty subsets of ``generators``."""
    gens = [g.as_sum() if isinstance(g, PrimeComponentIdeal) else g for g in generators]
    seen = {g.key: g for g in gens}
    frontier = list(seen.values())
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = ideal_sum(x, g)
                if y.key not in seen:
                    seen[y.key] = y
                    nxt.append(y)
        frontier = nxt
    return sorted(seen.values(), key=order_key)


def build_P(g: Graph) -> list[SumIdeal]:
    return all_sums(minimal_primes(g))


@dataclass
class QPoset:
    elements: list
    # above[i]: indices j with I_j strictly inside I_i, i.e. j above i in the poset
    above: list = field(repr=False)

    @classmethod
    def from_elements(cls, elements) -> "QPoset":
        elements = sorted(set(elements), key=order_key)
        above = [
            frozenset(j for j, q in enumerate(elements) if j != i and contains(p, q))
            for i, p in enumerate(elements)
        ]
        return cls(elements, above)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, q: PrimeComponentIdeal) -> int:
        try:
            return self.elements.index(q)
        except ValueError:
            raise KeyError(f"{q.display()} is not in the poset") from None

    def less(self, i: int, j: int) -> bool:
        """i < j in the poset, i.e. I_i strictly contains I_j."""
        return j in self.above[i]

    def covers(self) -> list[tuple[int, int]]:
        """Hasse edges (i, j) with j covering i."""
        out = []
        for i, up in enumerate(self.above):
            for j in sorted(up):
                if not any(j in self.above[k] for k in up if k != j):
                    out.append((i, j))
        return out

    def maximal(self) -> list[int]:
        return [i for i, up in enumerate(self.above) if not up]

    def open_interval(self, q) -> list[int]:
        i = q if isinstance(q, int) else self.index(q)
        return sorted(self.above[i])

    def order_complex(self, members) -> SimplicialComplex:
        return order_complex(members, self.less)

    def interval_complex(self, q) -> SimplicialComplex:
        return self.order_complex(self.open_interval(q))

    def to_json(self) -> dict:
        return {
            "nodes": [
                {"id": i, **p.to_json(), "dim": p.krull_dim()}
                for i, p in enumerate(self.elements)
            ],
            "covers": [list(e) for e in self.covers()],
        }


def build_Q(g: Graph) -> QPoset:
    """Prime elements of P_{J_G}, plus primes met by decomposing every non-prime sum.

    Each non-prime sum spawns the sum-poset of its own minimal primes, and
    the procedure repeats on any non-prime found there.  Generator sets
    already processed are skipped, which makes the recursion terminate.
    """
    primes: dict[tuple, PrimeComponentIdeal] = {}
    done: set[frozenset] = set()
    work = [minimal_primes(g)]
    while work:
        gens = work.pop()
        tag = frozenset(p.key for p in gens)
        if tag in done:
            continue
        done.add(tag)
        for x in all_sums(gens):
            if is_prime(x):
                p = to_prime(x)
                primes.setdefault(p.key, p)
            else:
                work.append(decompose(x))
    return QPoset.from_elements(primes.values())


def order_complex(members, less) -> SimplicialComplex:
    """Chains of the induced subposet on ``members``; {emptyset} when members is empty."""
    members = sorted(members)
    if not members:
        return SimplicialComplex([()])
    ups = {m: [k for k in members if less(m, k)] for m in members}
    minimal = [m for m in members if not any(less(k, m) for k in members)]
    facets = []

    def extend(chain):
        last = chain[-1]
        nxt = [k for k in ups[last] if not any(less(last, j) and less(j, k) for j in ups[last])]
        if not nxt:
            facets.append(tuple(chain))
            return
        for k in nxt:
            extend(chain + [k])

    for m in minimal:
        extend([m])
    return SimplicialComplex(facets, vertices=members)


def hasse_dot(poset: QPoset, name: str = "Q") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, p in enumerate(poset.elements):
        label = f"{p.display()}\\ndim {p.krull_dim()}"
        lines.append(f'  n{i} [label="{label}"];')
    for i, j in poset.covers():
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_json(poset: QPoset) -> str:
    return json.dumps(poset.to_json(), sort_keys=True)
