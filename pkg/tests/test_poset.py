import json

from hypothesis import given, settings

from binedge.graph import complete_graph, path_graph
from binedge.ideals import PrimeComponentIdeal, SumIdeal, contains, decompose, is_prime
from binedge.poset import QPoset, all_sums, build_P, build_Q, hasse_dot, order_complex, poset_json

from conftest import gens_to_key, graphs


def test_path5_P_matches_transcription(path5, path5_fixture):
    want = {gens_to_key(item["gens"]) for item in path5_fixture["ideals"]}
    got = {x.key for x in build_P(path5)}
    assert len(want) == 18
    assert got == want


def test_path5_single_non_prime_and_its_decomposition(path5, path5_fixture):
    non_prime = [x for x in build_P(path5) if not is_prime(x)]
    blue = [gens_to_key(i["gens"]) for i in path5_fixture["ideals"] if i.get("blue")]
    assert [x.key for x in non_prime] == blue
    parts = {p.as_sum().key for p in decompose(non_prime[0])}
    assert parts == {gens_to_key(g) for g in path5_fixture["blue_decomposition"]}


def test_path5_Q(path5):
    q = build_Q(path5)
    assert len(q) == 17
    assert len(q.maximal()) == 5
    # the maximal ideal <x_i,y_i : i in {2,3,4}> + J(1,5) sits below everything else
    bottom = [i for i in range(len(q)) if len(q.above[i]) == len(q) - 1]
    assert [q.elements[i].key for i in bottom] == [((2, 3, 4), ((1, 5),))]


def test_k35_Q(k35):
    q = build_Q(k35)
    keys = [p.key for p in q.elements]
    full = ((), ((1, 2, 3, 4, 5, 6, 7, 8),))
    p678 = ((6, 7, 8), ((1,), (2,), (3,), (4,), (5,)))
    p12345 = ((1, 2, 3, 4, 5), ((6,), (7,), (8,)))
    a = ((6, 7, 8), ((1, 2, 3, 4, 5),))
    b = ((1, 2, 3, 4, 5), ((6, 7, 8),))
    m = ((1, 2, 3, 4, 5, 6, 7, 8), ())
    assert sorted(keys) == sorted([full, p678, p12345, a, b, m])
    assert [q.elements[i].key for i in q.maximal()] == [full, p678, p12345]
    edges = {(keys[i], keys[j]) for i, j in q.covers()}
    assert edges == {(a, full), (a, p678), (b, full), (b, p12345), (m, a), (m, b)}
    assert q.open_interval(keys.index(m)) == sorted(keys.index(k) for k in (full, p678, p12345, a, b))


def test_complete_graph_Q_is_single_point():
    q = build_Q(complete_graph(4))
    assert len(q) == 1 and q.covers() == []


def _closure(n, covers):
    reach = {i: set() for i in range(n)}
    for i, j in covers:
        reach[i].add(j)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            extra = set().union(*(reach[j] for j in reach[i])) - reach[i]
            if extra:
                reach[i] |= extra
                changed = True
    return reach


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6, connected=True))
def test_hasse_transitive_closure_is_the_order(g):
    q = build_Q(g)
    reach = _closure(len(q), q.covers())
    for i in range(len(q)):
        assert reach[i] == set(q.above[i])
        for j in range(len(q)):
            assert q.less(i, j) == (i != j and contains(q.elements[i], q.elements[j]))


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6, connected=True))
def test_Q_contains_primes_of_P_and_their_decompositions(g):
    elements = set(build_Q(g).elements)
    for x in build_P(g):
        assert set(decompose(x)) <= elements
        if is_prime(x):
            assert decompose(x)[0].as_sum().key == x.key


def test_Q_need_not_be_closed_under_sums():
    # a sum of two recursion-born primes can decompose outside Q; the construction never forms it
    from binedge.graph import Graph

    g = Graph.from_edges(6, [(1, 2), (1, 3), (1, 6), (2, 3), (3, 4), (3, 5), (4, 6)])
    elements = set(build_Q(g).elements)
    outside = {p for x in all_sums(elements) for p in decompose(x)} - elements
    assert PrimeComponentIdeal(6, {1, 2, 3, 4, 6}, ({5},)) in outside


def test_order_complex_empty_members():
    c = order_complex([], lambda a, b: False)
    assert c.facets == (frozenset(),)


def test_order_complex_chain_and_antichain():
    chain = order_complex([0, 1, 2], lambda a, b: a < b)
    assert chain.facets == (frozenset({0, 1, 2}),)
    anti = order_complex([0, 1, 2], lambda a, b: False)
    assert anti.facets == (frozenset({0}), frozenset({1}), frozenset({2}))


def test_from_elements_dedups_and_sorts():
    a = PrimeComponentIdeal(2, {1, 2}, ())
    b = PrimeComponentIdeal(2, set(), ({1, 2},))
    q = QPoset.from_elements([b, a, b])
    assert q.elements == [b, a]
    assert q.less(1, 0) and not q.less(0, 1)


def test_outputs(k35):
    q = build_Q(k35)
    dot = hasse_dot(q)
    assert dot.startswith("digraph Q {") and dot.count("->") == len(q.covers())
    data = json.loads(poset_json(q))
    assert len(data["nodes"]) == 6 and len(data["covers"]) == 6
    assert {n["dim"] for n in data["nodes"]} == {9, 10, 6, 4, 0}


def test_sum_keys_distinguish_ideals():
    assert SumIdeal(3, set(), {(1, 2)}).key != SumIdeal(3, set(), {(2, 3)}).key
    assert SumIdeal(3, {1}, {(1, 2)}).key == SumIdeal(3, {1}, set()).key
