"""The generic initial ideal gin(J_G) and the classical Hochster oracle.

Variables are labelled ("x", i) and ("y", i).  gin(J_G) is built as the
intersection of gin(P) over the minimal primes P of J_G; intersection of
squarefree monomial ideals is union of their Stanley-Reisner complexes, so
no generator lists are ever intersected.  Local cohomology of the
Stanley-Reisner ring is then computed face by face from links, entirely
independently of the poset Q.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product

import numpy as np

from .engine import CohomologyProfile, analyze, block_series, euler_series, zn_table
from .graph import Graph, simple_paths
from .homology import QQ, FieldSpec, SimplicialComplex, is_cone, link, reduced_cohomology_dims
from .ideals import PrimeComponentIdeal, minimal_primes
from .series import RationalSeries, _grid, check_box


def x(i: int) -> tuple:
    return ("x", i)


def y(i: int) -> tuple:
    return ("y", i)


def variables(n: int) -> list[tuple]:
    return [x(i) for i in range(1, n + 1)] + [y(i) for i in range(1, n + 1)]


def monomial_str(m) -> str:
    if not m:
        return "1"
    return "".join(f"{v}{i}" for v, i in sorted(m))


@dataclass(frozen=True)
class SquarefreeMonomialIdeal:
    n: int
    generators: frozenset  # of frozensets of variables

    def __post_init__(self):
        gens = frozenset(frozenset(g) for g in self.generators)
        object.__setattr__(self, "generators", minimalize(gens))

    def sorted_generators(self) -> list[tuple]:
        return sorted(
            (tuple(sorted(g)) for g in self.generators), key=lambda g: (len(g), g)
        )

    def display(self) -> list[str]:
        return [monomial_str(g) for g in self.sorted_generators()]


def minimalize(monomials) -> frozenset:
    """Drop every monomial divisible by another one in the set."""
    ms = sorted(set(monomials), key=len)
    kept: list[frozenset] = []
    for m in ms:
        if not any(k <= m for k in kept):
            kept.append(m)
    return frozenset(kept)


@dataclass(frozen=True)
class SRComplex:
    n: int
    complex: SimplicialComplex

    @cached_property
    def faces(self) -> frozenset:
        return self.complex.faces

    def minimal_nonfaces(self) -> frozenset:
        faces = self.faces
        out = {frozenset([v]) for v in variables(self.n) if frozenset([v]) not in faces}
        for f in faces:
            for v in variables(self.n):
                if v in f:
                    continue
                cand = f | {v}
                if cand in faces:
                    continue
                if all(cand - {w} in faces for w in cand):
                    out.add(cand)
        return frozenset(out)

    def ideal(self) -> SquarefreeMonomialIdeal:
        return SquarefreeMonomialIdeal(self.n, self.minimal_nonfaces())


def gin_prime(p: PrimeComponentIdeal) -> SquarefreeMonomialIdeal:
    gens = [frozenset([x(i)]) for i in p.s] + [frozenset([y(i)]) for i in p.s]
    for c in p.cliques:
        gens += [frozenset([x(a), x(b)]) for a, b in combinations(sorted(c), 2)]
    return SquarefreeMonomialIdeal(p.n, frozenset(gens))


def gin_prime_facets(p: PrimeComponentIdeal) -> list[frozenset]:
    """Facets of the SR complex of gin(P): every y off S, plus one x per clique."""
    ys = [y(v) for c in p.cliques for v in c]
    return [
        frozenset(ys) | {x(j) for j in choice}
        for choice in product(*(sorted(c) for c in p.cliques))
    ]


def gin_prime_complex(p: PrimeComponentIdeal) -> SRComplex:
    return SRComplex(p.n, SimplicialComplex(gin_prime_facets(p)))


def gin_complex(g: Graph) -> SRComplex:
    facets = [f for p in minimal_primes(g) for f in gin_prime_facets(p)]
    return SRComplex(g.n, SimplicialComplex(facets))


def gin_ideal(g: Graph) -> SquarefreeMonomialIdeal:
    return gin_complex(g).ideal()


def brute_force_complex(ideal: SquarefreeMonomialIdeal) -> SRComplex:
    """All variable subsets containing no generator; exponential, for testing."""
    vs = variables(ideal.n)
    faces = []
    for k in range(len(vs) + 1):
        for sub in combinations(vs, k):
            s = frozenset(sub)
            if not any(gen <= s for gen in ideal.generators):
                faces.append(s)
    return SRComplex(ideal.n, SimplicialComplex(faces))


def gin_path_generators(g: Graph) -> tuple[SquarefreeMonomialIdeal, dict]:
    """x_i x_j y_{a_1}..y_{a_v} over simple paths, plus a diff against gin_ideal."""
    monos = {
        frozenset([x(i), x(j)] + [y(a) for a in interior])
        for i, interior, j in simple_paths(g)
    }
    by_paths = SquarefreeMonomialIdeal(g.n, frozenset(monos))
    truth = gin_ideal(g)
    report = {
        "only_paths": sorted(monomial_str(m) for m in by_paths.generators - truth.generators),
        "only_intersection": sorted(
            monomial_str(m) for m in truth.generators - by_paths.generators
        ),
    }
    return by_paths, report


# --- classical Hochster oracle ---------------------------------------------

class HochsterOracle:
    """Graded pieces of H^r of a Stanley-Reisner ring from links of faces."""

    def __init__(self, sr: SRComplex, field: FieldSpec = QQ):
        self.sr = sr
        self.field = field

    @cached_property
    def link_dims(self) -> dict[frozenset, dict[int, int]]:
        """Nonzero reduced cohomology of lk(F) for every face F."""
        out = {}
        c = self.sr.complex
        for f in self.sr.faces:
            lk = link(c, f)
            if is_cone(lk):
                continue
            dims = {k: v for k, v in reduced_cohomology_dims(lk, self.field).items() if v}
            if dims:
                out[f] = dims
        return out

    def graded_dim(self, r: int, a) -> int:
        """dim H^r_a for a in Z^{2n}, ordered x_1..x_n, y_1..y_n."""
        vs = variables(self.sr.n)
        if len(a) != len(vs):
            raise ValueError(f"degree vector must have length {len(vs)}")
        if any(ai > 0 for ai in a):
            return 0
        f = frozenset(v for v, ai in zip(vs, a) if ai < 0)
        if f not in self.sr.faces:
            return 0
        return self.link_dims.get(f, {}).get(r - len(f) - 1, 0)

    def contributions(self):
        """Yield (r, face, dim) for every nonzero link contribution."""
        for f, dims in self.link_dims.items():
            for k, d in dims.items():
                yield k + len(f) + 1, f, d

    def series_z(self) -> dict[int, RationalSeries]:
        """Z-graded series per r: sum over faces of dim * (u/(1-u))^|F|."""
        out: dict[int, RationalSeries] = {}
        for r, f, d in self.contributions():
            out[r] = out.get(r, RationalSeries.zero()) + RationalSeries.monomial(len(f), d)
        return {r: s for r, s in sorted(out.items()) if not s.is_zero()}

    @cached_property
    def _fiber_groups(self) -> dict[int, dict[tuple, int]]:
        groups: dict[int, dict[tuple, int]] = defaultdict(lambda: defaultdict(int))
        for r, f, d in self.contributions():
            touched = frozenset(i for _, i in f)
            both = frozenset(i for i in touched if x(i) in f and y(i) in f)
            groups[r][(touched, both)] += d
        return groups

    def table_zn(self, r: int, N: int, grid=None) -> np.ndarray:
        """Z^n-coarsened table of H^r (deg x_i = deg y_i = e_i), indexed by -a.

        A Z^{2n} degree with support F lands on b = -a with supp(b) equal to
        the vertices touched by F; the fiber has b_i - 1 points for each
        vertex whose x and y both lie in F, and one point otherwise.
        """
        n = self.sr.n
        grid = _grid(n, N) if grid is None else grid
        out = np.zeros(grid[0].shape, dtype=np.int64)
        for (touched, both), d in self._fiber_groups.get(r, {}).items():
            t = np.full(grid[0].shape, d, dtype=np.int64)
            for i in range(1, n + 1):
                if i in touched:
                    t *= grid[i - 1] >= 1
                else:
                    t *= grid[i - 1] == 0
            for i in both:
                t *= np.maximum(grid[i - 1] - 1, 0)
            out += t
        return out

    def degrees(self) -> list[int]:
        return sorted(self._fiber_groups)

    def regularity(self) -> int:
        return max(r + s.end() for r, s in self.series_z().items())


def hilbert_series_sr(sr: SRComplex) -> RationalSeries:
    """HS(K[Delta]) from the f-vector, rewritten in u = t^-1.

    t^k/(1-t)^k = (-1)^k/(1-u)^k, one term per face of size k.
    """
    total = RationalSeries.zero()
    for k, fk in enumerate(sr.complex.f_vector()):
        total = total + RationalSeries.make([(-1) ** k * fk], k)
    return total


def main2_decomposition(g: Graph, field: FieldSpec = QQ, profile: CohomologyProfile | None = None):
    """Multiplicities over Q with gin(I_q) blocks, and a check of the assembled sum.

    Returns (multiplicities, blocks, problems): multiplicities keyed by
    (r, q), blocks mapping q to gin(I_q), and a list of mismatches between
    (i) each block's oracle series and the clique-factor series and (ii)
    sum_q M_{r,q} HS(H^{d_q}(A/gin(I_q))) and the oracle on gin(J_G).
    """
    prof = profile or analyze(g, field)
    mults = {(r, q): m for r, q, m in prof.triples()}
    blocks = {q: gin_prime(q) for q in prof.poset.elements}
    problems = []
    block_oracle = {}
    for q in prof.poset.elements:
        series = HochsterOracle(gin_prime_complex(q), field).series_z()
        d = q.krull_dim()
        if set(series) != {d} or series[d] != block_series(q):
            problems.append(f"block {q.display()}: oracle {_render(series)} vs factor form")
        block_oracle[q] = series.get(d, RationalSeries.zero())
    assembled: dict[int, RationalSeries] = {}
    for (r, q), m in mults.items():
        assembled[r] = assembled.get(r, RationalSeries.zero()) + block_oracle[q].scale(m)
    whole = HochsterOracle(gin_complex(g), field).series_z()
    for r in sorted(set(assembled) | set(whole)):
        a = assembled.get(r, RationalSeries.zero())
        w = whole.get(r, RationalSeries.zero())
        if a != w:
            problems.append(f"H^{r}: assembled {a.render()} vs oracle {w.render()}")
    return mults, blocks, problems


def _render(series: dict) -> str:
    return "{" + ", ".join(f"{r}: {s.render()}" for r, s in series.items()) + "}"


def compare(g: Graph, field: FieldSpec = QQ, N: int = 8, profile: CohomologyProfile | None = None,
            oracle: HochsterOracle | None = None) -> dict:
    """Check dim H^r(A/J_G)_a == dim H^r(A/gin(J_G))_a on the box 0 >= a_i >= -N, all r."""
    if N < 1:
        raise ValueError("truncation must be at least 1")
    prof = profile or analyze(g, field)
    oracle = oracle or HochsterOracle(gin_complex(g), field)
    check_box(g.n, N)
    grid = _grid(g.n, N)
    report = {
        "graph": g.to_graph6(),
        "field": field.tag,
        "truncation": N,
        "checked_degrees": (2 * g.n + 1) * (N + 1) ** g.n,
        "status": "pass",
    }
    for r in range(0, 2 * g.n + 1):
        e = zn_table(prof, r, N, grid)
        o = oracle.table_zn(r, N, grid)
        if not np.array_equal(e, o):
            idx = tuple(int(i) for i in np.argwhere(e != o)[0])
            report["status"] = "fail"
            report["first_mismatch"] = {
                "r": r,
                "a": [-i for i in idx],
                "engine": int(e[idx]),
                "oracle": int(o[idx]),
            }
            break
    return report


def serre_check(g: Graph, field: FieldSpec = QQ, profile: CohomologyProfile | None = None) -> bool:
    """Alternating sum of local cohomology series equals HS of A/gin(J_G)."""
    prof = profile or analyze(g, field)
    return euler_series(prof) == hilbert_series_sr(gin_complex(g))


def oracle_regularity(g: Graph, field: FieldSpec = QQ) -> int:
    return HochsterOracle(gin_complex(g), field).regularity()


def oracle_series_z(g: Graph, field: FieldSpec = QQ) -> dict[int, RationalSeries]:
    return HochsterOracle(gin_complex(g), field).series_z()

