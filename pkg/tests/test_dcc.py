import random
from math import ceil, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splitstar.dcc import (
    CaseTag,
    DccRequest,
    base_lookup,
    case_select,
    construct,
    dcc_construct,
    pancyclicity_sweep,
)
from splitstar.errors import BadLength, DimensionTooSmall, SameVertex
from splitstar.permutation import format_perm, identity, parse
from splitstar.topology import relabel, relabel_all
from splitstar.verify import validate_dcc


def P(text):
    return parse(text, len(text))


def valid(n, u, v, ell):
    cover = construct(n, u, v, ell)
    report = validate_dcc(n, cover, u, v, ell)
    assert report.ok, report.violations[:3]
    return cover


def test_base_examples():
    cover = valid(4, P("1234"), P("2134"), 3)
    assert cover.c1 == [P("1234"), P("3124"), P("2314")]
    assert len(cover.c2) == 21
    cover = valid(4, P("1234"), P("2134"), 12)
    assert len(cover.c1) == len(cover.c2) == 12
    with pytest.raises(BadLength):
        construct(4, P("1234"), P("2134"), 13)
    with pytest.raises(SameVertex):
        construct(4, P("1234"), P("1234"), 5)
    with pytest.raises(DimensionTooSmall):
        construct(3, P("123"), P("213"), 3)


def test_n5_example_trace():
    cover, trace = dcc_construct(DccRequest(5, P("12345"), P("54321"), 37))
    assert validate_dcc(5, cover, P("12345"), P("54321"), 37).ok
    assert (len(cover.c1), len(cover.c2)) == (37, 83)
    assert [str(t) for t in trace][-1].startswith("S4 base")
    assert cover.holder_of_u == "c1" and cover.holder_of_v == "c2"
    doc = cover.to_dict()
    assert set(doc) == {"n", "u", "v", "ell", "c1", "c2", "case_trace"}
    assert doc["case_trace"] == [str(t) for t in trace]


def test_base_lookup_wrapper():
    cover = base_lookup(P("1234"), P("3124"), 5)
    assert [format_perm(x) for x in cover.c1] == ["1234", "4132", "2431", "4231", "2134"]


def test_case_select_examples():
    assert (case_select(5, 3).sub, case_select(5, 3).s) == (1, 1)
    assert (case_select(5, 24).sub, case_select(5, 24).s) == (4, 1)
    assert (case_select(5, 50).sub, case_select(5, 50).s) == (6, 2)
    with pytest.raises(BadLength):
        case_select(5, 61)
    with pytest.raises(DimensionTooSmall):
        case_select(4, 5)


def bands(N):
    m = factorial(N - 1)
    out = []
    for s in range(1, ceil(N / 2) + 1):
        out.append((1, s, range(3 + (s - 1) * m, s * m - 2)))
        for sub in range(2, 7):
            out.append((sub, s, range(s * m + sub - 4, s * m + sub - 3)))
    return out


@pytest.mark.parametrize("N", [5, 6, 7])
def test_case_select_partition(N):
    top = factorial(N) // 2
    table = bands(N)
    for ell in range(3, top + 1):
        hits = [(sub, s) for sub, s, r in table if ell in r]
        assert len(hits) == 1, (ell, hits)
        tag = case_select(N, ell)
        assert (tag.sub, tag.s) == hits[0]


def test_tag_text():
    assert str(CaseTag(5, 1, 3, 2)) == "S5 case 1.3 s=2"
    assert str(CaseTag(5, 2, 1, 2, note="swap 1 and 3")) == "S5 case 2.1 s=2 (swap 1 and 3)"
    assert str(CaseTag(4, 0, 0, 0, note="table 1")) == "S4 base table 1"


def residue_lengths(n):
    m = factorial(n - 1)
    out = set()
    for s in range(1, ceil(n / 2) + 1):
        out.update({3 + (s - 1) * m, (s - 1) * m + m // 2, s * m - 3})
        out.update(s * m + d for d in range(-2, 3))
    return sorted(x for x in out if 3 <= x <= factorial(n) // 2)


@pytest.mark.parametrize("n", [5, 6])
def test_every_case_is_exercised(n):
    rng = random.Random(n)
    u = identity(n)
    seen = set()
    vs = [tuple(rng.sample(range(1, n + 1), n)) for _ in range(12)]
    vs += [(2, 1) + u[2:], u[:-2] + (u[-1], u[-2])]
    for v in vs:
        if v == u:
            continue
        for ell in residue_lengths(n):
            cover = valid(n, u, v, ell)
            seen.update((t.top, t.sub) for t in cover.trace if t.n == n and t.top)
    assert {sub for top, sub in seen if top == 1} == set(range(1, 7))
    assert {sub for top, sub in seen if top == 2} == set(range(1, 7))


@settings(max_examples=120, deadline=None)
@given(st.integers(5, 6).flatmap(lambda n: st.tuples(
    st.permutations(range(1, n + 1)).map(tuple),
    st.permutations(range(1, n + 1)).map(tuple),
    st.integers(3, factorial(n) // 2),
)))
def test_random_requests_are_valid(args):
    u, v, ell = args
    if u != v:
        valid(len(u), u, v, ell)


@settings(max_examples=100, deadline=None)
@given(st.integers(4, 5).flatmap(lambda n: st.tuples(
    st.permutations(range(1, n + 1)).map(tuple),
    st.permutations(range(1, n + 1)).map(tuple),
    st.permutations(range(1, n + 1)).map(tuple),
    st.integers(3, factorial(n) // 2),
)))
def test_relabel_equivariance(args):
    sigma, u, v, ell = args
    if u == v:
        return
    n = len(u)
    plain = construct(n, u, v, ell)
    moved = construct(n, relabel(sigma, u), relabel(sigma, v), ell)
    assert moved.c1 == relabel_all(sigma, plain.c1)
    assert moved.c2 == relabel_all(sigma, plain.c2)


def test_sweep_counts_and_sampling():
    rep = pancyclicity_sweep(4)
    assert (rep.instances, rep.passed, rep.ok) == (230, 230, True)
    a = pancyclicity_sweep(6, ("sample", 30, 1))
    b = pancyclicity_sweep(6, ("sample", 30, 1))
    assert a.instances == 30 and a.ok
    assert a.to_dict()["failed"] == 0
    assert (a.passed, a.failures) == (b.passed, b.failures)


def test_sweep_parallel_matches_serial():
    serial = pancyclicity_sweep(5, ("sample", 40, 3), jobs=1)
    parallel = pancyclicity_sweep(5, ("sample", 40, 3), jobs=2)
    assert (serial.instances, serial.passed) == (parallel.instances, parallel.passed) == (40, 40)
