"""Hilbert series of local cohomology: closed rational forms in u = t^-1.

A Z-graded series is N(u) / (1 - u)^D with integer N.  The modules here
live in nonpositive degrees, so the coefficient of u^k is the dimension in
degree -k.  Z^n-graded series are evaluated on a box of exponents
0 <= b_i <= N (degree a = -b) as dense numpy tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _poly_add(a, b) -> list:
    out = [0] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] += v
    return out


def _poly_mul(a, b) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _one_minus_u_pow(k: int) -> list:
    return [(-1) ** i * comb(k, i) for i in range(k + 1)]


def _divide_one_minus_u(a) -> list:
    """Exact quotient of a by (1 - u); caller guarantees a(1) == 0."""
    # a = (1 - u) q  =>  q_i = a_0 + ... + a_i
    q, acc = [], 0
    for v in a[:-1]:
        acc += v
        q.append(acc)
    return q


@dataclass(frozen=True)
class RationalSeries:
    numerator: tuple
    denom_power: int

    @classmethod
    def make(cls, numerator, denom_power: int) -> "RationalSeries":
        num = list(_trim(numerator))
        d = denom_power
        if not num:
            return cls((), 0)
        while d > 0 and sum(num) == 0:
            num = list(_trim(_divide_one_minus_u(num)))
            d -= 1
        if d < 0:
            num = _poly_mul(num, _one_minus_u_pow(-d))
            d = 0
        return cls(_trim(num), d)

    @classmethod
    def zero(cls) -> "RationalSeries":
        return cls((), 0)

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "RationalSeries":
        """coeff * u^power / (1 - u)^power, the series of (u/(1-u))^power."""
        return cls.make([0] * power + [coeff], power)

    def is_zero(self) -> bool:
        return not self.numerator

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        d = max(self.denom_power, other.denom_power)
        a = _poly_mul(list(self.numerator), _one_minus_u_pow(d - self.denom_power))
        b = _poly_mul(list(other.numerator), _one_minus_u_pow(d - other.denom_power))
        return RationalSeries.make(_poly_add(a, b), d)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return RationalSeries.make(
            _poly_mul(list(self.numerator), list(other.numerator)),
            self.denom_power + other.denom_power,
        )

    __rmul__ = __mul__

    def __neg__(self) -> "RationalSeries":
        return self.scale(-1)

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        return self + (-other)

    def scale(self, k: int) -> "RationalSeries":
        return RationalSeries.make([k * v for v in self.numerator], self.denom_power)

    def valuation(self) -> int | None:
        """Lowest power of u present in the expansion (None for zero)."""
        for i, v in enumerate(self.numerator):
            if v:
                return i
        return None

    def end(self) -> int | None:
        """Top nonvanishing t-degree, i.e. minus the u-valuation."""
        v = self.valuation()
        return None if v is None else -v

    def expand(self, n_terms: int) -> list[int]:
        """Coefficients of u^0 .. u^N of the Taylor expansion at u = 0."""
        if n_terms < 0:
            raise ValueError("N must be nonnegative")
        d = self.denom_power
        # 1/(1-u)^d = sum_k C(k+d-1, d-1) u^k
        inv = [comb(k + d - 1, d - 1) if d else int(k == 0) for k in range(n_terms + 1)]
        out = [0] * (n_terms + 1)
        for i, c in enumerate(self.numerator):
            if i > n_terms:
                break
            for k in range(n_terms + 1 - i):
                out[i + k] += c * inv[k]
        return out

    def render(self, var: str = "t^-1") -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.numerator):
            if not c:
                continue
            if i == 0:
                mono = str(abs(c))
            else:
                base = var if i == 1 else (f"t^-{i}" if var == "t^-1" else f"{var}^{i}")
                mono = base if abs(c) == 1 else f"{abs(c)}{base}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, mono))
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, mono in terms[1:]:
            text += f" {sign} {mono}"
        if self.denom_power == 0:
            return text
        den = f"(1 - {var})" + (f"^{self.denom_power}" if self.denom_power > 1 else "")
        return f"({text})/{den}"

    def to_json(self) -> dict:
        return {"num_coeffs": list(self.numerator), "denom_power": self.denom_power}

    @classmethod
    def from_json(cls, data: dict) -> "RationalSeries":
        return cls.make(data["num_coeffs"], data["denom_power"])


def factor_series(m: int) -> RationalSeries:
    """((m-1) u^m + u^(m+1)) / (1-u)^(m+1): top local cohomology of one 2x m minors block."""
    if m < 1:
        raise ValueError("clique size must be at least 1")
    return RationalSeries.make([0] * m + [m - 1, 1], m + 1)


class CliqueFactor:
    """Z^n-graded top local cohomology series of one clique block.

    The closed form in the block's variables u_j = t_j^-1 is
    prod_j u_j/(1-u_j) * ((m-1) + sum_j u_j/(1-u_j)); its coefficient at
    u^b is (sum_j b_j) - 1 when every b_j >= 1 and 0 otherwise.
    """

    def __init__(self, clique):
        self.clique = tuple(sorted(clique))
        if not self.clique:
            raise ValueError("clique must be nonempty")

    def coefficient(self, b: dict) -> int:
        bs = [b.get(v, 0) for v in self.clique]
        if min(bs) < 1:
            return 0
        return sum(bs) - 1

    def table(self, n: int, N: int, grid=None) -> np.ndarray:
        grid = _grid(n, N) if grid is None else grid
        mask = np.ones(grid[0].shape, dtype=bool)
        total = np.zeros(grid[0].shape, dtype=np.int64)
        for v in self.clique:
            mask &= grid[v - 1] >= 1
            total += grid[v - 1]
        return np.where(mask, total - 1, 0)

    def specialize(self) -> RationalSeries:
        """Set every t_j = t: expand the closed form symbolically in one variable."""
        m = len(self.clique)
        base = RationalSeries.monomial(m)
        bracket = RationalSeries.make([m - 1], 0) + RationalSeries.monomial(1).scale(m)
        return base * bracket


def multi_factor(clique) -> CliqueFactor:
    return CliqueFactor(clique)


MAX_BOX = 50_000_000


def check_box(n: int, N: int) -> None:
    if (N + 1) ** n > MAX_BOX:
        raise ValueError(f"truncation box ({N}+1)^{n} exceeds {MAX_BOX} entries; lower N")


def _grid(n: int, N: int) -> list[np.ndarray]:
    return list(np.indices((N + 1,) * n, dtype=np.int64))


class MultiSeries:
    """Truncated Z^n-graded series, coefficient of t^a stored at index -a."""

    def __init__(self, n: int, N: int, table: np.ndarray | None = None):
        self.n = n
        self.N = N
        self.table = np.zeros((N + 1,) * n, dtype=np.int64) if table is None else table

    def coefficient(self, a) -> int:
        idx = tuple(-x for x in a)
        if any(i < 0 or i > self.N for i in idx):
            return 0
        return int(self.table[idx])

    def items(self):
        """Nonzero (a, coefficient) pairs with a the (nonpositive) multidegree."""
        for idx in zip(*np.nonzero(self.table)):
            yield tuple(-int(i) for i in idx), int(self.table[idx])

    def total_degree(self) -> list[int]:
        """Aggregate by total degree: entry k sums coefficients with sum(b) == k, k <= N."""
        sums = sum(np.indices(self.table.shape))
        return [int(self.table[sums == k].sum()) for k in range(self.N + 1)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiSeries)
            and (self.n, self.N) == (other.n, other.N)
            and np.array_equal(self.table, other.table)
        )


def prime_block_table(n: int, s, cliques, N: int, grid=None) -> np.ndarray:
    """Z^n table of H^top of A/P for P = <x_i,y_i : i in s> + sum of clique blocks."""
    grid = _grid(n, N) if grid is None else grid
    out = np.ones(grid[0].shape, dtype=np.int64)
    for v in s:
        out *= grid[v - 1] == 0
    for c in cliques:
        out *= CliqueFactor(c).table(n, N, grid)
    return out
