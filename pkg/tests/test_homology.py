import random
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from binedge import homology
from binedge.homology import (
    QQ,
    FieldSpec,
    SimplicialComplex,
    boundary_rows,
    euler_characteristic,
    face_count_dump,
    is_cone,
    link,
    rank,
    reduced_cohomology_dims,
)

F2 = FieldSpec(2)

# six-vertex triangulation of the real projective plane
RP2 = [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
    (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
]


def sphere(d):
    """Boundary of the (d+1)-simplex."""
    return SimplicialComplex(combinations(range(d + 2), d + 1))


def nonzero(dims):
    return {k: v for k, v in dims.items() if v}


def test_field_parse():
    assert FieldSpec.parse("q") == QQ
    assert FieldSpec.parse("fp:3").characteristic == 3
    assert FieldSpec.parse("fp:2").tag == "fp:2" and str(F2) == "F_2"
    for bad in ("fp:4", "fp:1", "r", "fp:x"):
        with pytest.raises(ValueError):
            FieldSpec.parse(bad)


def test_void_and_empty():
    assert reduced_cohomology_dims(SimplicialComplex([])) == {}
    assert reduced_cohomology_dims(SimplicialComplex([()])) == {-1: 1}


def test_point_and_two_points():
    assert nonzero(reduced_cohomology_dims(SimplicialComplex([(1,)]))) == {}
    assert nonzero(reduced_cohomology_dims(SimplicialComplex([(1,), (2,)]))) == {0: 1}


@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_spheres(d):
    assert nonzero(reduced_cohomology_dims(sphere(d))) == {d: 1}
    assert nonzero(reduced_cohomology_dims(sphere(d), F2)) == {d: 1}


def test_rp2_torsion_depends_on_field():
    c = SimplicialComplex(RP2)
    assert c.f_vector() == [1, 6, 15, 10]
    assert nonzero(reduced_cohomology_dims(c, QQ)) == {}
    assert nonzero(reduced_cohomology_dims(c, F2)) == {1: 1, 2: 1}
    assert nonzero(reduced_cohomology_dims(c, FieldSpec(3))) == {}


def test_torus_betti():
    # 7-vertex Moebius torus
    facets = []
    for i in range(7):
        facets.append((i, (i + 1) % 7, (i + 3) % 7))
        facets.append((i, (i + 2) % 7, (i + 3) % 7))
    c = SimplicialComplex(facets)
    assert c.f_vector() == [1, 7, 21, 14]
    assert nonzero(reduced_cohomology_dims(c)) == {1: 2, 2: 1}


def _sympy_rank(rows, ncols, p=0):
    if not rows:
        return 0
    m = sympy.Matrix([[r.get(j, 0) for j in range(ncols)] for r in rows])
    if p:
        from sympy.polys.matrices import DomainMatrix
        from sympy import GF

        return DomainMatrix.from_Matrix(m).convert_to(GF(p)).rank()
    return m.rank()


@settings(max_examples=60, deadline=None)
@given(
    st.integers(1, 7),
    st.integers(1, 7),
    st.sampled_from([0, 2, 3, 5]),
    st.data(),
)
def test_rank_matches_sympy(nr, nc, p, data):
    rows = []
    for _ in range(nr):
        vals = data.draw(st.lists(st.integers(-6, 6), min_size=nc, max_size=nc))
        rows.append({j: v for j, v in enumerate(vals) if v})
    assert rank(rows, p) == _sympy_rank(rows, nc, p)


def test_rank_of_boundary_matches_sympy():
    c = SimplicialComplex(RP2)
    for k in range(3):
        rows, ncols = boundary_rows(c, k)
        assert rank(rows, 0) == _sympy_rank(rows, ncols)
        assert rank(rows, 2) == _sympy_rank(rows, ncols, 2)


def _random_complex(rng, nverts=7, nfacets=6):
    facets = []
    for _ in range(nfacets):
        k = rng.randint(1, 4)
        facets.append(tuple(rng.sample(range(nverts), k)))
    return SimplicialComplex(facets)


@pytest.mark.parametrize("seed", range(25))
def test_permutation_invariance(seed):
    rng = random.Random(seed)
    c = _random_complex(rng)
    perm = list(range(7))
    rng.shuffle(perm)
    d = SimplicialComplex([tuple(perm[v] for v in f) for f in c.facets])
    for field in (QQ, F2):
        assert reduced_cohomology_dims(c, field) == reduced_cohomology_dims(d, field)


@pytest.mark.parametrize("seed", range(25))
def test_euler_identity_and_counter(seed):
    c = _random_complex(random.Random(1000 + seed))
    before = homology.euler_checks
    dims = reduced_cohomology_dims(c)
    assert homology.euler_checks == before + 1
    assert sum((-1) ** k * v for k, v in dims.items()) == euler_characteristic(c)


def test_link_and_cone():
    c = SimplicialComplex([(1, 2, 3), (1, 3, 4)])
    assert link(c, {1}) == SimplicialComplex([(2, 3), (3, 4)])
    assert link(c, {1, 3}) == SimplicialComplex([(2,), (4,)])
    assert link(c, {1, 2, 3}) == SimplicialComplex([()])
    assert is_cone(c) and not is_cone(sphere(1)) and not is_cone(SimplicialComplex([()]))
    assert nonzero(reduced_cohomology_dims(c)) == {}
    with pytest.raises(ValueError):
        link(c, {2, 4})


def test_facets_are_maximal_and_equality():
    c = SimplicialComplex([(1, 2), (1,), (2, 3), (1, 2)])
    assert c.facets == (frozenset({1, 2}), frozenset({2, 3}))
    assert c == SimplicialComplex([(3, 2), (2, 1)])
    assert (1,) in c and (1, 3) not in c
    assert face_count_dump(c) == "f-1=1 f0=3 f1=2"
