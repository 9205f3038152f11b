import random
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splitstar.errors import (
    BadPair,
    BadSymbol,
    DimensionTooSmall,
    EdgeTouchesRemoved,
    NotAdjacent,
    OutOfScope,
    SameEndpoints,
)
from splitstar.hamilton import (
    base_edge_cover_family,
    cluster_ham_cycle_through_edge,
    ham_cycle_minus_edge_pair,
    ham_cycle_minus_pair_through_edge,
    ham_cycle_minus_vertex,
    ham_cycle_through_edge,
    ham_cycle_two_edges,
    ham_path,
)
from splitstar.permutation import parse
from splitstar.topology import Cluster, Subnet, WholeGraph, apply_s, apply_swap12, edges_of, vertices_of
from splitstar.verify import adjacent, edge_cover_check, validate_cycle


def P(text):
    return parse(text, len(text))


def assert_ham_path(scope, path, a, b):
    assert path[0] == a and path[-1] == b
    assert len(set(path)) == len(path)
    assert set(path) == set(vertices_of(scope))
    for x, y in zip(path, path[1:]):
        assert adjacent(x, y), (x, y)


def assert_cycle(scope, c, forbidden=(), edges=()):
    report = validate_cycle(scope, c, forbidden_vertices=forbidden, required_edges=edges)
    assert report.ok, report.violations[:5]


def test_path_examples():
    p = ham_path(WholeGraph(3), P("123"), P("213"))
    assert len(p) == 6
    assert_ham_path(WholeGraph(3), p, P("123"), P("213"))
    p = ham_path(Subnet(5, 5), P("12345"), P("21345"))
    assert len(p) == 24
    assert_ham_path(Subnet(5, 5), p, P("12345"), P("21345"))
    with pytest.raises(SameEndpoints):
        ham_path(WholeGraph(4), P("1234"), P("1234"))
    with pytest.raises(OutOfScope):
        ham_path(Subnet(4, 4), P("1234"), P("4132"))


def test_path_all_pairs_n4():
    u = P("1234")
    for b in permutations(range(1, 5)):
        if b != u:
            assert_ham_path(WholeGraph(4), ham_path(WholeGraph(4), u, b), u, b)


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 6).flatmap(lambda n: st.tuples(
    st.permutations(range(1, n + 1)).map(tuple), st.permutations(range(1, n + 1)).map(tuple))))
def test_path_random(ab):
    a, b = ab
    if a == b:
        return
    scope = WholeGraph(len(a))
    assert_ham_path(scope, ham_path(scope, a, b), a, b)


def test_cycle_through_edge_examples():
    e = (P("1234"), P("2134"))
    c = ham_cycle_through_edge(WholeGraph(4), e)
    assert len(c) == 24
    assert_cycle(WholeGraph(4), c, edges=[e])
    e = (P("1234"), P("3124"))
    c = ham_cycle_through_edge(Subnet(4, 4), e)
    assert len(c) == 6
    assert_cycle(Subnet(4, 4), c, edges=[e])
    with pytest.raises(NotAdjacent):
        ham_cycle_through_edge(WholeGraph(4), (P("1234"), P("1243")))


@pytest.mark.parametrize("n", [4, 5])
def test_cycle_through_every_edge(n):
    for a, b, _ in edges_of(WholeGraph(n)):
        assert_cycle(WholeGraph(n), ham_cycle_through_edge(WholeGraph(n), (a, b)), edges=[(a, b)])


def test_minus_vertex_examples():
    c = ham_cycle_minus_vertex(WholeGraph(4), P("1234"))
    assert len(c) == 23
    assert_cycle(WholeGraph(4), c, forbidden=[P("1234")])
    c = ham_cycle_minus_vertex(WholeGraph(3), P("123"))
    assert len(c) == 5
    assert_cycle(WholeGraph(3), c, forbidden=[P("123")])
    c = ham_cycle_minus_vertex(Subnet(5, 1), P("23451"))
    assert len(c) == 23
    assert_cycle(Subnet(5, 1), c, forbidden=[P("23451")])


@pytest.mark.parametrize("n", [4, 5, 6])
def test_minus_vertex_sampled(n):
    rng = random.Random(n)
    for _ in range(10):
        u = tuple(rng.sample(range(1, n + 1), n))
        assert_cycle(WholeGraph(n), ham_cycle_minus_vertex(WholeGraph(n), u), forbidden=[u])


def test_minus_edge_pair_examples():
    for v in ("2134", "2431"):
        c = ham_cycle_minus_edge_pair(WholeGraph(4), P("1234"), P(v))
        assert len(c) == 22
        assert_cycle(WholeGraph(4), c, forbidden=[P("1234"), P(v)])
    with pytest.raises(DimensionTooSmall):
        ham_cycle_minus_edge_pair(WholeGraph(3), P("123"), P("312"))


@pytest.mark.parametrize("n", [4, 5])
def test_minus_edge_pair_every_edge_at_identity(n):
    u = tuple(range(1, n + 1))
    scope = WholeGraph(n)
    for v in (apply_swap12(u),) + tuple(apply_s(u, i, p) for i in range(3, n + 1) for p in (False, True)):
        assert_cycle(scope, ham_cycle_minus_edge_pair(scope, u, v), forbidden=[u, v])


def check_two_edges(n, e, q):
    edges, cycles = ham_cycle_two_edges(n, e, q)
    assert len(edges) == 2 and len(cycles) == 2
    assert edges[0] != edges[1]
    for (w, z), c in zip(edges, cycles):
        assert w[0] == q
        assert z == apply_s(w, n, True)
        assert_cycle(WholeGraph(n), c, edges=[e, (w, z)])


def test_two_edges_examples():
    check_two_edges(4, (P("1234"), P("2134")), 3)
    check_two_edges(5, (P("12345"), P("21345")), 5)
    check_two_edges(4, (P("1234"), P("4132")), 1)
    with pytest.raises(BadSymbol):
        ham_cycle_two_edges(4, (P("1234"), P("2134")), 5)


@pytest.mark.parametrize("n", [4, 5])
def test_two_edges_all_q_around_identity(n):
    u = tuple(range(1, n + 1))
    for v, _ in [(apply_swap12(u), 0)] + [(apply_s(u, i, p), 0) for i in range(3, n + 1) for p in (False, True)]:
        for q in range(1, n + 1):
            check_two_edges(n, (u, v), q)


def test_cluster_examples():
    e = (P("23451"), P("32451"))
    for labels, size in (((1,), 24), ((1, 2, 3), 72), ((1, 2, 3, 4, 5), 120)):
        c = cluster_ham_cycle_through_edge(Cluster(5, labels), e)
        assert len(c) == size
        assert_cycle(Cluster(5, labels), c, edges=[e])
    with pytest.raises(OutOfScope):
        cluster_ham_cycle_through_edge(Cluster(5, (2, 3)), e)


def test_cluster_n4_extension():
    for labels in ((4, 1), (4, 2, 3), (4, 1, 2, 3)):
        for a, b, _ in edges_of(Cluster(4, (4,))):
            c = cluster_ham_cycle_through_edge(Cluster(4, labels), (a, b))
            assert_cycle(Cluster(4, labels), c, edges=[(a, b)])


def test_minus_pair_through_edge_examples():
    u, v = P("54321"), P("45321")
    e = (P("12345"), P("21345"))
    c = ham_cycle_minus_pair_through_edge(5, u, v, e)
    assert len(c) == 118
    assert_cycle(WholeGraph(5), c, forbidden=[u, v], edges=[e])
    with pytest.raises(BadPair):
        ham_cycle_minus_pair_through_edge(5, u, apply_s(u, 4, True), e)
    with pytest.raises(EdgeTouchesRemoved):
        ham_cycle_minus_pair_through_edge(5, u, v, (u, apply_s(u, 3, False)))


@pytest.mark.parametrize("plus", [False, True])
def test_minus_pair_through_edge_n5_sampled(plus):
    u = P("31524")
    v = apply_s(u, 3, True) if plus else apply_swap12(u)
    edges = [(a, b) for a, b, _ in edges_of(WholeGraph(5)) if not {a, b} & {u, v}]
    for a, b in random.Random(3).sample(edges, 60):
        c = ham_cycle_minus_pair_through_edge(5, u, v, (a, b))
        assert_cycle(WholeGraph(5), c, forbidden=[u, v], edges=[(a, b)])


def test_edge_cover_family():
    u, v = P("4321"), P("3421")
    family = base_edge_cover_family(u, v)
    for c in family:
        assert_cycle(WholeGraph(4), c, forbidden=[u, v])
    assert edge_cover_check(family, WholeGraph(4), removed=[u, v]).ok
    assert "CoverageGap" in edge_cover_check([], WholeGraph(4), removed=[u, v]).codes()
    # dropping a cycle that alone carries some edge exposes exactly the edges it carried
    for k, c in enumerate(family):
        rest = family[:k] + family[k + 1:]
        report = edge_cover_check(rest, WholeGraph(4), removed=[u, v])
        if not report.ok:
            lost = {frozenset(p) for p in zip(c, c[1:] + c[:1])}
            for other in rest:
                lost -= {frozenset(p) for p in zip(other, other[1:] + other[:1])}
            assert len(report.violations) == len(lost)
            break
    else:
        pytest.fail("every cycle of the family is redundant")


def test_deterministic():
    a = ham_path(WholeGraph(5), P("12345"), P("54321"))
    b = ham_path(WholeGraph(5), P("12345"), P("54321"))
    assert a == b
    assert factorial(5) == len(a)
