"""Two disjoint cycles covering S_n^2, one of prescribed length through ``u``,
the other through ``v``, for every ``3 <= ell <= n!/2``.

The construction is an induction on ``n``: ``u`` is relabelled to the reverse
identity, so it sits in subnetwork 1, and the request falls into one of twelve
cases by where ``v`` lies (subnetwork 1 or not) and by ``ell`` relative to
multiples of ``(n-1)!``.  Each case assembles the two cycles from a smaller
cover inside one subnetwork, cluster cycles, and cycles avoiding one or two
vertices, glued along coupled pair-edges.  ``n = 4`` is answered from the
embedded base covers (:mod:`splitstar.base`).
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import factorial

from . import base
from .cover import DccCover
from .errors import BadLength, ConstructionError, DimensionTooSmall, SameVertex
from .hamilton import (
    _run as run_tour,
    cluster_cycle,
    cycle_minus_pair,
    cycle_minus_pair_through_edge,
    cycle_minus_vertex,
    merge_on_pair,
    reroute,
    splice_on_edge,
)
from .lemma_cycles import cycle_subnets_plus_edge, cycle_subnets_plus_vertex, prefix_disjoint_pair
from .permutation import check, format_perm, identity, reverse_identity
from .topology import (
    apply_s,
    apply_swap12,
    canonicalizer,
    coupled_pair_edge,
    drop_all,
    edge_kind,
    from_subnet,
    lift_all,
    relabel,
    relabel_all,
)
from .tour import Bag, Fixed, Full, Open
from .verify import validate_dcc

__all__ = [
    "CaseTag",
    "DccRequest",
    "DccCover",
    "SweepReport",
    "case_select",
    "dcc_construct",
    "construct",
    "base_lookup",
    "pancyclicity_sweep",
]

BASE_DIM = 4
_MEMO_SIZE = 4096


@dataclass(frozen=True)
class CaseTag:
    """One step of the recursion.

    ``top`` is 1 when ``v`` shares ``u``'s subnetwork and 2 otherwise; base
    lookups have ``top = 0`` and name their source in ``note``.
    """

    n: int
    top: int | None
    sub: int
    s: int
    note: str = ""

    def __str__(self):
        if self.top == 0:
            return f"S{self.n} base {self.note}"
        head = f"S{self.n} case {self.top}.{self.sub} s={self.s}"
        return f"{head} ({self.note})" if self.note else head

    def to_dict(self):
        return {"n": self.n, "top": self.top, "sub": self.sub, "s": self.s, "note": self.note}


@dataclass(frozen=True)
class DccRequest:
    n: int
    u: tuple
    v: tuple
    ell: int


# ---------------------------------------------------------------------------
# case selection


def case_select(n_plus_1, ell):
    """``CaseTag(sub, s)`` for a request of length ``ell`` in S_{n_plus_1}^2.

    ``sub`` is 1 for ``3 + (s-1)m <= ell <= s m - 3`` and 2..6 for
    ``ell = s m - 2, ..., s m + 2``, with ``m = (n_plus_1 - 1)!``.
    """
    N = n_plus_1
    if N < 5:
        raise DimensionTooSmall("case selection starts at dimension 5")
    if not 3 <= ell <= factorial(N) // 2:
        raise BadLength(f"ell={ell} outside [3, {factorial(N) // 2}]")
    m = factorial(N - 1)
    s = (ell - 3) // m + 1
    r = ell - s * m
    sub = 1 if r <= -3 else r + 4
    return CaseTag(N, None, sub, s)


# ---------------------------------------------------------------------------
# helpers inside one induction step


def _lift(seq, label):
    return lift_all(list(seq), label)


class _Step:
    def __init__(self, N, trace):
        self.N = N
        self.d = N - 1
        self.m = factorial(N - 1)
        self.labels = tuple(range(1, N + 1))
        self.trace = trace

    def others(self, *skip):
        return [x for x in self.labels if x not in skip]

    def smallest(self, k, *skip):
        pool = self.others(*skip)
        if k > len(pool):
            raise ConstructionError(f"need {k} subnetworks, only {len(pool)} left")
        return pool[:k]

    # subnetwork-level builders, lifted back into S_N^2

    def sub_dcc(self, label, a, b, ell):
        c1, c2 = _core(self.d, from_subnet(a), from_subnet(b), ell, self.trace)
        return _lift(c1, label), _lift(c2, label)

    def minus_vertex(self, x):
        return _lift(cycle_minus_vertex(self.d, from_subnet(x)), x[-1])

    def minus_pair(self, x, y):
        return _lift(cycle_minus_pair(self.d, from_subnet(x), from_subnet(y)), x[-1])

    def minus_pair_through(self, x, y, a, b):
        args = [from_subnet(p) for p in (x, y, a, b)]
        return _lift(cycle_minus_pair_through_edge(self.d, *args), x[-1])

    def cluster(self, labels, a, b):
        return cluster_cycle(self.N, tuple(labels), a, b)

    def plus_vertex(self, x, T):
        return cycle_subnets_plus_vertex(self.N, x, T)

    def plus_edge(self, x, y, T):
        return cycle_subnets_plus_edge(self.N, (x, y), T)

    # choices

    def subnet_vertices(self, label):
        rest = [x for x in self.labels if x != label]
        for p in permutations(rest):
            yield p + (label,)

    def first_vertex(self, label, ok):
        for x in self.subnet_vertices(label):
            if ok(x):
                return x
        raise ConstructionError(f"no eligible vertex in subnetwork {label}")

    @staticmethod
    def coupled(a, b, allowed):
        for pair, label in coupled_pair_edge((a, b)):
            if label in allowed:
                return pair, label
        return None

    def pick_edge(self, cycle, allowed, ok=None):
        """Smallest cycle edge ``(x, y)`` inside one subnetwork whose coupled pair-edge
        lies in an ``allowed`` subnetwork; returns ``(x, y, (x', y'), label)``."""
        m = len(cycle)
        pos = {p: k for k, p in enumerate(cycle)}
        for x in sorted(cycle):
            if ok is not None and not ok(x):
                continue
            k = pos[x]
            for y in sorted((cycle[k - 1], cycle[(k + 1) % m])):
                if y[-1] != x[-1]:
                    continue
                found = self.coupled(x, y, allowed)
                if found is not None:
                    return x, y, found[0], found[1]
        raise ConstructionError("no cycle edge with an eligible coupled pair-edge")


def _cycle_neighbours(cycle, x):
    k = cycle.index(x)
    return sorted((cycle[k - 1], cycle[(k + 1) % len(cycle)]))


# ---------------------------------------------------------------------------
# case 1: v in subnetwork 1


def _case1(st, u, v, ell, sub, s):
    N, m = st.N, st.m
    y1, y2 = v[0], v[1]

    if sub == 1:
        ell1 = ell - (s - 1) * m
        c1p, c2p = st.sub_dcc(1, u, v, ell1)
        if s == 1:
            v1 = _cycle_neighbours(c2p, v)[0]
            assert v1 != u
            c2pp = st.plus_edge(v, v1, st.others(1, y1, y2))
            return c1p, splice_on_edge(c2p, c2pp, v, v1)
        w, z = prefix_disjoint_pair(drop_all(c1p), drop_all(c2p))
        w, z = _lift([w, z], 1)
        w1 = _cycle_neighbours(c1p, w)[0]
        z1 = _cycle_neighbours(c2p, z)[0]
        (wp, w1p), m1 = coupled_pair_edge((w, w1))[0]
        (zp, z1p), m2 = coupled_pair_edge((z, z1))[0]
        first = st.smallest(s - 2, 1, m1, m2)
        rest = st.others(1, m1, m2, *first)
        c1 = merge_on_pair(c1p, (w, w1), st.cluster([m1] + first, wp, w1p), (wp, w1p))
        c2 = merge_on_pair(c2p, (z, z1), st.cluster([m2] + rest, zp, z1p), (zp, z1p))
        return c1, c2

    if sub in (2, 4):
        v1 = apply_swap12(v)
        if v1 == u:
            v1 = apply_s(v, 3, True)
        (vp, v1p), lab = st.coupled(v, v1, (y1,))

    if sub == 2:
        labels2 = [y1] + st.smallest(N - 1 - s, 1, y1)
        c2 = reroute(st.cluster(labels2, vp, v1p), vp, v1p, [v, v1])
        if s == 1:
            return st.minus_pair(v, v1), c2
        rest = st.others(1, *labels2)
        w = st.first_vertex(1, lambda x: x[0] in rest and {x, apply_swap12(x)}.isdisjoint({v, v1}))
        w1 = apply_swap12(w)
        c1p = st.minus_pair_through(v, v1, w, w1)
        (wp, w1p), a1 = st.coupled(w, w1, (w[0],))
        others = [a1] + [x for x in rest if x != a1]
        return merge_on_pair(c1p, (w, w1), st.cluster(others, wp, w1p), (wp, w1p)), c2

    if sub == 3:
        c1p = st.minus_vertex(v)
        if s == 1:
            return c1p, st.plus_vertex(v, st.others(1, y1, y2))
        allowed = st.others(1, y1, y2)
        w, w1, (wp, w1p), m1 = st.pick_edge(c1p, allowed, ok=lambda x: {x[0], x[1]}.isdisjoint({y1, y2}))
        T = st.smallest(N - 2 - s, 1, y1, y2, m1)
        c2 = st.plus_vertex(v, T)
        rest = st.others(1, y1, y2, m1, *T)
        return merge_on_pair(c1p, (w, w1), st.cluster([m1] + rest, wp, w1p), (wp, w1p)), c2

    if sub == 4:
        w = apply_s(v, 4, True)
        w1 = apply_swap12(w)
        c1p = st.minus_pair_through(v, v1, w, w1)
        (wp, w1p), _ = st.coupled(w, w1, (y1,))
        c2p = st.minus_pair_through(wp, w1p, vp, v1p)
        c1 = reroute(c1p, w, w1, [wp, w1p])
        c2 = reroute(c2p, vp, v1p, [v, v1])
        if s == 1:
            def ok(x):
                return 1 not in x[:2] and x not in (wp, w1p)

            v2, v3, _, _ = st.pick_edge(c2, st.others(), ok=lambda x: x[-1] == y1 and ok(x))
            c2pp = st.plus_edge(v2, v3, st.others(1, y1, v2[0], v2[1]))
            return c1, splice_on_edge(c2, c2pp, v2, v3)
        w2, w3, (w2p, w3p), m1 = st.pick_edge(c1, st.others(1, y1), ok=lambda x: x[-1] == 1)
        first = st.smallest(s - 2, 1, y1, m1)
        c1 = merge_on_pair(c1, (w2, w3), st.cluster([m1] + first, w2p, w3p), (w2p, w3p))
        rest = st.others(1, y1, m1, *first)
        z, z1, (zp, z1p), m2 = st.pick_edge(c2, rest, ok=lambda x: x[-1] == y1)
        others = [m2] + [x for x in rest if x != m2]
        return c1, merge_on_pair(c2, (z, z1), st.cluster(others, zp, z1p), (zp, z1p))

    if sub == 5:
        if s == 1:
            c1p = st.minus_vertex(v)
            allowed = st.others(1, y1, y2)
            w, w1, (wp, w1p), mm = st.pick_edge(c1p, allowed, ok=lambda x: {x[0], x[1]}.isdisjoint({y1, y2}))
            c1 = reroute(c1p, w, w1, [wp, w1p])
            hole = st.minus_pair(wp, w1p)
            pieces = [Open(hole)] + [Full(x) for x in st.others(1, mm)]
            return c1, run_tour(N, [Fixed([v]), Bag(pieces)])
        top, second = N, N - 1
        T = st.smallest(s - 2, 1, top, second)
        c1 = st.plus_vertex(u, T)
        c2p = st.minus_vertex(u)
        rest = st.others(1, top, second, *T)
        w, w1, (wp, w1p), m1 = st.pick_edge(c2p, rest)
        others = [m1] + [x for x in rest if x != m1]
        return c1, merge_on_pair(c2p, (w, w1), st.cluster(others, wp, w1p), (wp, w1p))

    # sub == 6
    u1 = apply_swap12(u)
    if u1 == v:
        u1 = apply_s(u, 3, True)
    (up, u1p), _ = st.coupled(u, u1, (N,))
    labels1 = [N] + st.smallest(s - 1, 1, N)
    c1 = reroute(st.cluster(labels1, up, u1p), up, u1p, [u, u1])
    rest = st.others(1, *labels1)
    z = st.first_vertex(1, lambda x: x[0] in rest and {x, apply_swap12(x)}.isdisjoint({u, u1}))
    z1 = apply_swap12(z)
    c2p = st.minus_pair_through(u, u1, z, z1)
    (zp, z1p), a1 = st.coupled(z, z1, (z[0],))
    others = [a1] + [x for x in rest if x != a1]
    return c1, merge_on_pair(c2p, (z, z1), st.cluster(others, zp, z1p), (zp, z1p))


# ---------------------------------------------------------------------------
# case 2: v outside subnetwork 1


def _completion(N, head, label, avoid=()):
    rest = [x for x in range(1, N + 1) if x not in head and x != label]
    for p in permutations(rest):
        x = tuple(head) + p + (label,)
        if x not in avoid:
            return x
    raise ConstructionError("no completion")


def _case2(st, u, v, ell, sub, s):
    N, m = st.N, st.m
    i = v[-1]

    if sub == 1:
        if s == 1:
            u1 = apply_swap12(u)
            c1p, c2p = st.sub_dcc(1, u, u1, ell)
            u1n = _cycle_neighbours(c2p, u1)[0]
            c2pp = st.plus_edge(u1, u1n, st.others(1, u1[0], u1[1]))
            return c1p, splice_on_edge(c2p, c2pp, u1, u1n)
        ell1 = ell - (s - 1) * m
        j = st.others(1, i)[0]
        a1 = st.others(1, i, j)[0]
        b1 = st.others(1, i, j, a1)[0]
        w = _completion(N, (1, a1), j)
        z = _completion(N, (i, b1), j)
        c1p, c2p = st.sub_dcc(j, w, z, ell1)
        w1 = _cycle_neighbours(c1p, w)[0]
        kind = edge_kind(w, w1)
        if kind.op == "-":
            # relabel 1 <-> a1 inside subnetwork j so the coupled edge lands in subnetwork 1
            sigma = list(range(1, N + 1))
            sigma[0], sigma[a1 - 1] = a1, 1
            c1p, c2p = relabel_all(sigma, c1p), relabel_all(sigma, c2p)
            w, w1 = relabel(sigma, w), relabel(sigma, w1)
            z = relabel(sigma, z)
            st.trace.append(CaseTag(N, 2, 1, s, note=f"swap 1 and {a1}"))
        (wp, w1p), _ = st.coupled(w, w1, (1,))
        first = st.smallest(s - 2, 1, i, j, b1)
        c1 = merge_on_pair(c1p, (w, w1), st.cluster([1] + first, wp, w1p), (wp, w1p))
        zn = _cycle_neighbours(c2p, z)[0]
        c2pp = st.plus_edge(z, zn, st.others(1, j, i, b1, *first))
        return c1, splice_on_edge(c2p, c2pp, z, zn)

    if sub == 2:
        w = st.first_vertex(1, lambda x: x[0] == i and u not in (x, apply_swap12(x)))
        z = apply_swap12(w)
        (wp, zp), _ = st.coupled(w, z, (i,))
        labels2 = [i] + st.smallest(N - 1 - s, 1, i)
        c2 = reroute(st.cluster(labels2, wp, zp), wp, zp, [w, z])
        if s == 1:
            return st.minus_pair(w, z), c2
        rest = st.others(1, *labels2)
        w1 = st.first_vertex(1, lambda x: x[0] in rest and {x, apply_swap12(x)}.isdisjoint({w, z}))
        z1 = apply_swap12(w1)
        c1p = st.minus_pair_through(w, z, w1, z1)
        (w1p, z1p), b1 = st.coupled(w1, z1, (w1[0],))
        others = [b1] + [x for x in rest if x != b1]
        return merge_on_pair(c1p, (w1, z1), st.cluster(others, w1p, z1p), (w1p, z1p)), c2

    if sub == 3:
        u1 = st.first_vertex(1, lambda x: x[0] == i and x != u)
        a1 = u1[1]
        c1p = st.minus_vertex(u1)
        if s == 1:
            return c1p, st.plus_vertex(u1, st.others(1, i, a1))
        allowed = st.others(1, i, a1)
        w, w1, (wp, w1p), m1 = st.pick_edge(c1p, allowed, ok=lambda x: {x[0], x[1]}.isdisjoint({i, a1}))
        T = st.smallest(N - 2 - s, 1, i, a1, m1)
        c2 = st.plus_vertex(u1, T)
        rest = st.others(1, i, a1, m1, *T)
        return merge_on_pair(c1p, (w, w1), st.cluster([m1] + rest, wp, w1p), (wp, w1p)), c2

    if sub == 4:
        labels1 = [1] + st.smallest(s - 1, 1, i)
        c1 = st.cluster(labels1, u, apply_swap12(u))
        rest = st.others(*labels1)
        labels2 = [i] + [x for x in rest if x != i]
        return c1, st.cluster(labels2, v, apply_swap12(v))

    if sub == 5:
        if s == 1:
            up = st.first_vertex(1, lambda x: x[0] == i and x != u)
            a2 = up[1]
            c1p = st.minus_vertex(up)
            allowed = st.others(1, i, a2)
            w, w1, (wp, w1p), mm = st.pick_edge(c1p, allowed, ok=lambda x: {x[0], x[1]}.isdisjoint({i, a2}))
            c1 = reroute(c1p, w, w1, [wp, w1p])
            hole = st.minus_pair(wp, w1p)
            pieces = [Open(hole)] + [Full(x) for x in st.others(1, mm)]
            return c1, run_tour(N, [Fixed([up]), Bag(pieces)])
        a1 = st.others(1, i)[0]
        an = st.others(1, i, a1)[0]
        w = _completion(N, (1, an), a1)
        T = st.smallest(s - 2, 1, a1, i, an)
        c1 = st.plus_vertex(w, T)
        c2p = st.minus_vertex(w)
        rest = st.others(1, an, a1, *T)
        z = st.first_vertex(a1, lambda x: x[0] == i and x[1] in rest)
        zn = _cycle_neighbours(c2p, z)[0]
        c2pp = st.plus_edge(z, zn, st.others(1, an, a1, i, z[1], *T))
        return c1, splice_on_edge(c2p, c2pp, z, zn)

    # sub == 6
    a1 = st.others(1, i)[0]
    w = _completion(N, (a1,), 1)
    w1 = apply_swap12(w)
    labels1 = [1] + st.smallest(s - 1, 1, i, a1)
    (wp, w1p), _ = st.coupled(w, w1, (a1,))
    c1 = reroute(st.cluster(labels1, w, w1), w, w1, [wp, w1p])
    z = st.first_vertex(a1, lambda x: x[0] == i and {x, apply_swap12(x)}.isdisjoint({wp, w1p}))
    z1 = apply_swap12(z)
    c2p = st.minus_pair_through(wp, w1p, z, z1)
    (zp, z1p), _ = st.coupled(z, z1, (i,))
    rest = st.others(1, a1, *labels1)
    others = [i] + [x for x in rest if x != i]
    return c1, merge_on_pair(c2p, (z, z1), st.cluster(others, zp, z1p), (zp, z1p))


# ---------------------------------------------------------------------------
# recursion driver


@lru_cache(maxsize=_MEMO_SIZE)
def _canon(N, v, ell):
    """Cover for ``u = N (N-1) ... 1`` (``u = 1234`` at the base); returns ``(c1, c2, tags)``."""
    trace = []
    if N == BASE_DIM:
        table = base.table_for(v)
        note = f"table {table}" if table else "generated"
        trace.append(CaseTag(N, 0, 0, 0, note=note))
        c1, c2 = base.base_lookup(identity(N), v, ell)
        return tuple(c1), tuple(c2), tuple(trace)
    u = reverse_identity(N)
    tag = case_select(N, ell)
    top = 1 if v[-1] == 1 else 2
    trace.append(CaseTag(N, top, tag.sub, tag.s))
    st = _Step(N, trace)
    build = _case1 if top == 1 else _case2
    c1, c2 = build(st, u, v, ell, tag.sub, tag.s)
    return tuple(c1), tuple(c2), tuple(trace)


def _core(n, u, v, ell, trace):
    """Cover of S_n^2 with ``u`` on the ``ell``-cycle, for ``3 <= ell <= n! - 3``."""
    total = factorial(n)
    if ell > total // 2:
        c2, c1 = _core(n, v, u, total - ell, trace)
        return c1, c2
    target = identity(n) if n == BASE_DIM else reverse_identity(n)
    sigma, inv = canonicalizer(u, target)
    c1, c2, tags = _canon(n, relabel(sigma, v), ell)
    trace.extend(tags)
    return relabel_all(inv, c1), relabel_all(inv, c2)


def _request(n, u, v, ell):
    if n < BASE_DIM:
        raise DimensionTooSmall("covers are constructed for n >= 4")
    u, v = check(u, n), check(v, n)
    if u == v:
        raise SameVertex("u and v coincide")
    if not 3 <= ell <= factorial(n) // 2:
        raise BadLength(f"ell={ell} outside [3, {factorial(n) // 2}]")
    return u, v


def dcc_construct(req):
    """Build the cover for a :class:`DccRequest`; returns ``(cover, trace)``."""
    u, v = _request(req.n, req.u, req.v, req.ell)
    trace = []
    c1, c2 = _core(req.n, u, v, req.ell, trace)
    cover = DccCover(req.n, u, v, req.ell, c1, c2, trace)
    return cover, trace


def construct(n, u, v, ell):
    """Shorthand for ``dcc_construct(DccRequest(n, u, v, ell))[0]``."""
    return dcc_construct(DccRequest(n, tuple(u), tuple(v), ell))[0]


def base_lookup(u, v, ell):
    """The embedded base cover of S_4^2 (``u`` must be 1234)."""
    c1, c2 = base.base_lookup(u, v, ell)
    return DccCover(4, tuple(u), tuple(v), ell, c1, c2, [CaseTag(4, 0, 0, 0, note="lookup")])


# ---------------------------------------------------------------------------
# sweeps


@dataclass
class SweepReport:
    n: int
    instances: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self):
        return self.instances > 0 and self.passed == self.instances

    def to_dict(self):
        return {
            "n": self.n,
            "instances": self.instances,
            "passed": self.passed,
            "failed": len(self.failures),
            "failures": self.failures[:20],
            "seconds": round(self.seconds, 3),
        }


def _instances(n, policy):
    u = identity(n)
    vs = [p for p in permutations(range(1, n + 1)) if p != u]
    ells = range(3, factorial(n) // 2 + 1)
    if policy == "full":
        return [(v, ell) for v in vs for ell in ells]
    _, count, seed = policy
    rng = random.Random(seed)
    total = len(vs) * len(ells)
    picks = rng.sample(range(total), min(count, total))
    return [(vs[k // len(ells)], ells[k % len(ells)]) for k in picks]


def _check_one(args):
    n, v, ell = args
    u = identity(n)
    try:
        cover = construct(n, u, v, ell)
    except Exception as exc:  # reported, not raised
        return f"{format_perm(v)} ell={ell}: {type(exc).__name__}: {exc}"
    report = validate_dcc(n, cover, u, v, ell)
    if not report.ok:
        return f"{format_perm(v)} ell={ell}: {report.violations[0]}"
    return None


def pancyclicity_sweep(n, policy="full", jobs=1):
    """Construct and validate covers with ``u`` the identity.

    ``policy`` is ``"full"`` or ``("sample", count, seed)``.
    """
    start = time.perf_counter()
    work = [(n, v, ell) for v, ell in _instances(n, policy)]
    report = SweepReport(n)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_one, work, chunksize=32))
    else:
        results = [_check_one(w) for w in work]
    for res in results:
        report.instances += 1
        if res is None:
            report.passed += 1
        else:
            report.failures.append(res)
    report.seconds = time.perf_counter() - start
    return report
