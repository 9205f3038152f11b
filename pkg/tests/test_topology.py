import random
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splitstar.errors import BadIndex, NotAdjacent, NotIntraSubnetwork
from splitstar.permutation import parse
from splitstar.topology import (
    SWAP12,
    Cluster,
    Edge,
    EdgeKind,
    WholeGraph,
    apply_s,
    apply_swap12,
    coupled_pair_edge,
    edge_kind,
    edges_of,
    from_subnet,
    neighbors,
    relabel,
    subnetwork_of,
    to_subnet,
    vertices_of,
)
from splitstar.verify import adjacent


def P(text):
    return parse(text, len(text))


def all_vertices(n):
    return list(permutations(range(1, n + 1)))


def test_swap12_examples():
    assert apply_swap12(P("1234")) == P("2134")
    assert apply_swap12(P("2134")) == P("1234")
    assert apply_swap12(P("4321")) == P("3421")


def test_apply_s_examples():
    assert apply_s(P("1234"), 3, True) == P("3124")
    assert apply_s(P("1234"), 4, False) == P("2431")
    with pytest.raises(BadIndex):
        apply_s(P("1234"), 2, True)
    with pytest.raises(BadIndex):
        apply_s(P("1234"), 5, True)


def test_neighbors_of_identity_frozen():
    got = [(p, str(k)) for p, k in neighbors(P("1234"))]
    assert got == [
        (P("2134"), "12"),
        (P("2314"), "s3-"),
        (P("3124"), "s3+"),
        (P("2431"), "s4-"),
        (P("4132"), "s4+"),
    ]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_regular_and_symmetric_exhaustive(n):
    for u in all_vertices(n):
        nb = neighbors(u)
        assert len(nb) == 2 * n - 3
        assert len({p for p, _ in nb}) == 2 * n - 3
        for p, kind in nb:
            assert edge_kind(p, u) == kind.reverse
            assert adjacent(u, p)


@settings(max_examples=200)
@given(st.integers(6, 8).flatmap(lambda n: st.permutations(range(1, n + 1)).map(tuple)))
def test_regular_sampled(u):
    n = len(u)
    nb = neighbors(u)
    assert len({p for p, _ in nb}) == 2 * n - 3
    for p, kind in nb:
        assert edge_kind(p, u) == kind.reverse


def test_edge_kind_examples():
    assert edge_kind(P("1234"), P("2134")) == SWAP12
    assert edge_kind(P("1234"), P("4132")) == EdgeKind("+", 4)
    with pytest.raises(NotAdjacent):
        edge_kind(P("1234"), P("1243"))
    with pytest.raises(NotAdjacent):
        Edge(P("1234"), P("1243"))


def test_edge_kind_text_roundtrip():
    for text in ("12", "s3+", "s7-"):
        assert str(EdgeKind.parse(text)) == text


def test_subnetwork_of():
    assert subnetwork_of(P("1234")) == 4
    assert subnetwork_of(P("4132")) == 2
    assert subnetwork_of(P("4321")) == 1


def test_only_top_generators_leave_a_subnetwork():
    for u in all_vertices(4):
        for p, kind in neighbors(u):
            crosses = kind.op != "12" and kind.i == 4
            assert (p[-1] != u[-1]) == crosses


@pytest.mark.parametrize("n", [4, 5])
def test_subnetwork_isomorphism_exhaustive(n):
    for label in range(1, n + 1):
        verts = list(vertices_of(Cluster(n, (label,))))
        images = {from_subnet(u) for u in verts}
        assert images == set(permutations(range(1, n)))
        for u in verts:
            assert to_subnet(from_subnet(u), label) == u
            for p, kind in neighbors(u):
                if p[-1] != label:
                    continue
                assert edge_kind(from_subnet(u), from_subnet(p)) == kind


def test_coupled_pair_examples():
    swap = coupled_pair_edge((P("1234"), P("2134")))
    assert [lab for _, lab in swap] == [1, 2]
    assert swap[1] == ((P("4132"), P("1432")), 2)
    assert swap[0][0][0] == P("2431")
    assert coupled_pair_edge((P("1234"), P("2314"))) == [((P("4132"), P("3412")), 2)]
    assert coupled_pair_edge((P("1234"), P("3124"))) == [((P("2431"), P("4321")), 1)]
    with pytest.raises(NotIntraSubnetwork):
        coupled_pair_edge((P("1234"), P("4132")))


def test_coupled_pair_four_cycle_exhaustive():
    intra = [(a, b) for a, b, _ in edges_of(WholeGraph(4)) if a[-1] == b[-1]]
    assert len(intra) == 4 * 9
    for a, b in intra:
        for (a2, b2), label in coupled_pair_edge((a, b)):
            assert a2[-1] == b2[-1] == label != a[-1]
            for x, y in ((a, a2), (a2, b2), (b2, b), (b, a)):
                assert adjacent(x, y)
            assert len({a, a2, b2, b}) == 4


def test_relabel_examples():
    u = P("1234")
    assert relabel(P("1234"), u) == u
    sigma = P("3214")
    assert relabel(sigma, u) == P("3214")
    e = (relabel(sigma, u), relabel(sigma, P("2134")))
    assert e == (P("3214"), P("2314"))
    assert edge_kind(*e) == SWAP12


@settings(max_examples=1000)
@given(st.integers(4, 7).flatmap(
    lambda n: st.tuples(
        st.permutations(range(1, n + 1)).map(tuple),
        st.permutations(range(1, n + 1)).map(tuple),
        st.integers(0, 2 * n - 4),
    )
))
def test_relabel_is_an_automorphism(args):
    sigma, u, k = args
    p, kind = neighbors(u)[k]
    assert edge_kind(relabel(sigma, u), relabel(sigma, p)) == kind
    if kind.op != "12":
        assert relabel(sigma, apply_s(u, kind.i, True)) == apply_s(relabel(sigma, u), kind.i, True)


def test_vertices_of_examples():
    four = list(vertices_of(Cluster(4, (4,))))
    assert len(four) == 6 and all(u[-1] == 4 for u in four)
    assert len(set(vertices_of(Cluster(4, (1, 2))))) == 12
    assert set(vertices_of(WholeGraph(5))) == set(all_vertices(5))


def test_cluster_rejects_bad_labels():
    with pytest.raises(ValueError):
        Cluster(4, (1, 1))
    with pytest.raises(ValueError):
        Cluster(4, (5,))


@pytest.mark.parametrize("n,count", [(3, 9), (4, 60), (5, 420)])
def test_edge_count(n, count):
    assert len(list(edges_of(WholeGraph(n)))) == count


def test_random_pairs_agree_with_independent_adjacency():
    rng = random.Random(7)
    for _ in range(2000):
        n = rng.randint(3, 6)
        a = tuple(rng.sample(range(1, n + 1), n))
        b = tuple(rng.sample(range(1, n + 1), n))
        ok = True
        try:
            edge_kind(a, b)
        except NotAdjacent:
            ok = False
        assert ok == adjacent(a, b)
