"""Exact reduced (co)homology of finite simplicial complexes over Q or F_p."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import gcd


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or p == 1 or (p > 1 and any(p % d == 0 for d in range(2, int(p**0.5) + 1))):
            raise ValueError(f"characteristic must be 0 or a prime, got {p}")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Accepts 'q' for the rationals or 'fp:<p>'."""
        text = text.strip().lower()
        if text in ("q", "qq", "0"):
            return cls(0)
        if text.startswith("fp:"):
            return cls(int(text[3:]))
        raise ValueError(f"unknown field {text!r}; use 'q' or 'fp:<p>'")

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"F_{self.characteristic}"

    @property
    def tag(self) -> str:
        return "q" if self.characteristic == 0 else f"fp:{self.characteristic}"


QQ = FieldSpec(0)

# number of complexes whose Euler identity has been checked in this process
euler_checks = 0


class HomologyError(ArithmeticError):
    pass


class SimplicialComplex:
    """A complex given by its facets.

    ``SimplicialComplex([])`` is the void complex (no faces at all);
    ``SimplicialComplex([()])`` is {emptyset}, whose reduced cohomology is
    concentrated in degree -1.
    """

    def __init__(self, facets, vertices=None):
        sets = {frozenset(f) for f in facets}
        maximal = [f for f in sets if not any(f < g for g in sets)]
        self.facets = tuple(sorted(maximal, key=lambda f: (len(f), sorted(f))))
        verts = set().union(*self.facets) if self.facets else set()
        if vertices is not None:
            verts |= set(vertices)
        self.vertices = tuple(sorted(verts))

    def __repr__(self) -> str:
        return f"SimplicialComplex({[sorted(f) for f in self.facets]})"

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and set(self.facets) == set(other.facets)

    def __hash__(self) -> int:
        return hash(frozenset(self.facets))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @cached_property
    def faces(self) -> frozenset:
        out = set()
        for f in self.facets:
            items = sorted(f)
            for k in range(len(items) + 1):
                out.update(frozenset(c) for c in combinations(items, k))
        return frozenset(out)

    def faces_by_dim(self) -> dict[int, list[tuple]]:
        return self._by_dim

    @cached_property
    def _by_dim(self) -> dict[int, list[tuple]]:
        by_dim: dict[int, list[tuple]] = {}
        for f in self.faces:
            by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
        for k in by_dim:
            by_dim[k].sort()
        return by_dim

    def f_vector(self) -> list[int]:
        """[f_-1, f_0, f_1, ...]."""
        by_dim = self.faces_by_dim()
        return [len(by_dim.get(k, [])) for k in range(-1, self.dim + 1)] if self.facets else []

    def __contains__(self, face) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)


def link(c: SimplicialComplex, f) -> SimplicialComplex:
    f = frozenset(f)
    if f not in c:
        raise ValueError(f"{sorted(f)} is not a face")
    return SimplicialComplex([g - f for g in c.facets if f <= g])


def euler_characteristic(c: SimplicialComplex) -> int:
    """Reduced Euler characteristic, the empty face counted in dimension -1."""
    return sum((-1) ** (len(face) - 1) for face in c.faces)


def boundary_rows(c: SimplicialComplex, k: int) -> tuple[list[dict], int]:
    """Rows of the boundary map from k-faces to (k-1)-faces as sparse dicts.

    Row i is the boundary of the i-th k-face; returns (rows, number of (k-1)-faces).
    """
    by_dim = c.faces_by_dim()
    lower = {face: i for i, face in enumerate(by_dim.get(k - 1, []))}
    rows = []
    for face in by_dim.get(k, []):
        row = {}
        for j in range(len(face)):
            row[lower[face[:j] + face[j + 1:]]] = -1 if j % 2 else 1
        rows.append(row)
    return rows, len(lower)


def rank(rows: list[dict], characteristic: int = 0) -> int:
    """Exact rank of a sparse matrix given as {column: entry} rows.

    Characteristic 0 uses fraction-free integer elimination, rows kept
    primitive by their content; characteristic p reduces modulo p.
    """
    p = characteristic
    pivots: dict[int, dict] = {}
    for row in rows:
        if p:
            row = {j: v % p for j, v in row.items() if v % p}
        else:
            row = {j: v for j, v in row.items() if v}
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                if p:
                    inv = pow(row[col], -1, p)
                    row = {j: v * inv % p for j, v in row.items()}
                pivots[col] = row
                break
            if p:
                b = row[col]
                for j, v in piv.items():
                    w = (row.get(j, 0) - b * v) % p
                    if w:
                        row[j] = w
                    else:
                        row.pop(j, None)
            else:
                a, b = piv[col], row[col]
                g = gcd(a, b)
                a, b = a // g, b // g
                new = {j: a * v for j, v in row.items()}
                for j, v in piv.items():
                    w = new.get(j, 0) - b * v
                    if w:
                        new[j] = w
                    else:
                        new.pop(j, None)
                if new:
                    content = 0
                    for v in new.values():
                        content = gcd(content, v)
                        if content == 1:
                            break
                    if content > 1:
                        new = {j: v // content for j, v in new.items()}
                row = new
    return len(pivots)


def reduced_cohomology_dims(c: SimplicialComplex, field: FieldSpec = QQ) -> dict[int, int]:
    """{degree: dim} of reduced cohomology for degrees -1..dim(c); {} for the void complex.

    Over a field these agree with reduced homology dimensions, so the ranks
    of the augmented boundary maps are all that is needed.
    """
    if c.is_void:
        return {}
    by_dim = c.faces_by_dim()
    top = c.dim
    ranks = {}
    for k in range(0, top + 1):
        rows, _ = boundary_rows(c, k)
        ranks[k] = rank(rows, field.characteristic)
    dims = {}
    for k in range(-1, top + 1):
        dims[k] = len(by_dim.get(k, [])) - ranks.get(k, 0) - ranks.get(k + 1, 0)
    global euler_checks
    if sum((-1) ** k * v for k, v in dims.items()) != euler_characteristic(c):
        raise HomologyError(f"Euler characteristic identity fails on {c!r}")
    euler_checks += 1
    return dims


def is_cone(c: SimplicialComplex) -> bool:
    """A nonempty common vertex of all facets makes the complex acyclic."""
    if c.is_void or not c.facets[0]:
        return False
    common = frozenset.intersection(*c.facets)
    return bool(common)


def face_count_dump(c: SimplicialComplex) -> str:
    fv = c.f_vector()
    return " ".join(f"f{k - 1}={v}" for k, v in enumerate(fv))
