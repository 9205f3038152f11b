"""Hamiltonian paths and cycles of S_n^2, its subnetworks and clusters.

Every builder works on a whole graph S_d^2 ("dimension ``d``"); scoped public
entry points map a subnetwork onto S_{d-1}^2 first and lift the answer back.
Dimension <= 4 is handled by exhaustive search, larger dimensions by splicing
recursively built pieces of each subnetwork (see :mod:`splitstar.tour`).

Results are computed for a canonical representative (one anchor vertex
relabelled to the identity), memoised, and relabelled back.  This keeps the
tables small and makes every builder exactly relabel-equivariant.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .errors import (
    BadPair,
    BadSymbol,
    ConstructionError,
    DimensionTooSmall,
    EdgeTouchesRemoved,
    NotIntraSubnetwork,
    OutOfScope,
    SameEndpoints,
)
from .permutation import all_permutations, identity
from .search import hamiltonian_cycle, hamiltonian_path
from .topology import (
    SWAP12,
    Cluster,
    adjacent_vertices,
    apply_s,
    apply_swap12,
    canonicalizer,
    coupled_pair_edge,
    edge_kind,
    from_subnet,
    lift_all,
    relabel,
    relabel_all,
    vertices_of,
)
from .tour import Bag, Fixed, Full, Open, materialize, splice

__all__ = [
    "ham_path",
    "ham_cycle_through_edge",
    "ham_cycle_minus_vertex",
    "ham_cycle_minus_edge_pair",
    "ham_cycle_two_edges",
    "cluster_ham_cycle_through_edge",
    "ham_cycle_minus_pair_through_edge",
    "base_edge_cover_family",
    "reroute",
    "splice_on_edge",
    "walk_from",
]

SEARCH_DIM = 4
_BIG = None  # unbounded memo for d <= 5
_LRU = 4096


# ---------------------------------------------------------------------------
# cycle surgery


def walk_from(cycle, x, y):
    """The cycle walked from ``x`` away from its neighbour ``y``; ends at ``y``."""
    m = len(cycle)
    k = cycle.index(x)
    step = -1 if cycle[(k + 1) % m] == y else 1
    if cycle[(k + step * (m - 1)) % m] != y:
        raise ConstructionError(f"{x} and {y} are not consecutive on the cycle")
    return [cycle[(k + step * t) % m] for t in range(m)]


def reroute(cycle, a, b, path):
    """Replace the cycle edge ``(a, b)`` by ``a -> path -> b``."""
    return walk_from(cycle, b, a) + list(path)


def merge_on_pair(c1, e1, c2, e2):
    """Join two disjoint cycles through the 4-cycle ``e1[0], e2[0], e2[1], e1[1]``."""
    a, b = e1
    a2, b2 = e2
    return reroute(c1, a, b, walk_from(c2, a2, b2))


def splice_on_edge(c1, c2, x, y):
    """Union of two cycles that share exactly the edge ``(x, y)``, without that edge."""
    return walk_from(c1, x, y) + walk_from(c2, y, x)[1:-1]


def _lift(seq, label):
    return lift_all(seq, label)


def _drop(x):
    return from_subnet(x)


# ---------------------------------------------------------------------------
# canonical memo helpers


def _anchor(a):
    """``(sigma, inv)`` with ``relabel(sigma, a) == identity``."""
    return canonicalizer(a)


def _cache(d):
    return lru_cache(maxsize=None) if d <= 5 else lru_cache(maxsize=_LRU)


def _memo(fn):
    caches = {}

    def wrapper(d, *key):
        c = caches.get(d)
        if c is None:
            c = caches[d] = _cache(d)(lambda *k: fn(d, *k))
        return c(*key)

    wrapper.cache_clear = lambda: caches.clear()
    return wrapper


def _subnet_path(x, y):
    """Hamiltonian path of the subnetwork holding ``x`` and ``y``."""
    return _lift(path(len(x) - 1, _drop(x), _drop(y)), x[-1])


def _others(d, *skip):
    return [label for label in range(1, d + 1) if label not in skip]


def _run(d, groups, closed=True, **kw):
    plan = splice(d, groups, closed=closed, **kw)
    return materialize(plan, _subnet_path)


# ---------------------------------------------------------------------------
# Hamiltonian paths (Hamiltonian-connectedness)


@_memo
def _path_canon(d, b):
    a = identity(d)
    if d <= SEARCH_DIM:
        found = hamiltonian_path(list(all_permutations(d)), a, b)
        if found is None:
            raise ConstructionError(f"no Hamiltonian path {a} -> {b}")
        return tuple(found)
    la, lb = a[-1], b[-1]
    if la != lb:
        return tuple(_run(d, [Full(la, entry=a), Bag([Full(x) for x in _others(d, la, lb)]), Full(lb, exit=b)], closed=False))
    sub = _subnet_path(a, b)
    rest = Bag([Full(x) for x in _others(d, la)])
    for k in range(len(sub) - 1):
        try:
            return tuple(_run(d, [Fixed(sub[: k + 1], False), rest, Fixed(sub[k + 1:], False)], closed=False))
        except ConstructionError:
            continue
    raise ConstructionError(f"no Hamiltonian path {a} -> {b}")


def path(d, a, b):
    """Hamiltonian path of S_d^2 from ``a`` to ``b``."""
    if d == 2:
        return [a, b]
    sigma, inv = _anchor(a)
    return relabel_all(inv, _path_canon(d, relabel(sigma, b)))


def cycle_through_edge(d, a, b):
    """Hamiltonian cycle of S_d^2 whose first two vertices are ``a, b``."""
    p = path(d, b, a)
    return p[-1:] + p[:-1]


# ---------------------------------------------------------------------------
# cycles avoiding one vertex or the two ends of an edge


@_memo
def _minus_vertex_canon(d):
    u = identity(d)
    if d <= SEARCH_DIM:
        verts = [x for x in all_permutations(d) if x != u]
        found = hamiltonian_cycle(verts)
        if found is None:
            raise ConstructionError("no Hamiltonian cycle avoiding a vertex")
        return tuple(found)
    label = u[-1]
    sub = _lift(cycle_minus_vertex(d - 1, _drop(u)), label)
    return tuple(_run(d, [Open(sub), Bag([Full(x) for x in _others(d, label)])]))


def cycle_minus_vertex(d, u):
    sigma, inv = _anchor(u)
    return relabel_all(inv, _minus_vertex_canon(d))


@_memo
def _minus_pair_canon(d, v):
    u = identity(d)
    if d <= SEARCH_DIM:
        verts = [x for x in all_permutations(d) if x not in (u, v)]
        found = hamiltonian_cycle(verts)
        if found is None:
            raise ConstructionError(f"no Hamiltonian cycle avoiding {u}, {v}")
        return tuple(found)
    lu, lv = u[-1], v[-1]
    if lu == lv:
        sub = _lift(cycle_minus_pair(d - 1, _drop(u), _drop(v)), lu)
        return tuple(_run(d, [Open(sub), Bag([Full(x) for x in _others(d, lu)])]))
    cu = _lift(cycle_minus_vertex(d - 1, _drop(u)), lu)
    cv = _lift(cycle_minus_vertex(d - 1, _drop(v)), lv)
    return tuple(_run(d, [Open(cu), Bag([Open(cv)] + [Full(x) for x in _others(d, lu, lv)])]))


def cycle_minus_pair(d, u, v):
    sigma, inv = _anchor(u)
    return relabel_all(inv, _minus_pair_canon(d, relabel(sigma, v)))


# ---------------------------------------------------------------------------
# cycles with prescribed edges


def _cycle_with(d, cross, intra=None):
    """Hamiltonian cycle of S_d^2 through the given cross edges and optional intra edge.

    Returns ``None`` when the prescribed edges cannot be arranged into one tour
    by this construction (too many prescribed ends in one subnetwork, ...).
    """
    ends = {}
    for x, y in cross:
        if x[-1] == y[-1]:
            raise ValueError("cross edges must join different subnetworks")
        for p in (x, y):
            ends.setdefault(p[-1], []).append(p)
    if any(len(set(v)) != len(v) or len(v) > 2 for v in ends.values()):
        return None
    link = {}
    for x, y in cross:
        link.setdefault(x[-1], []).append((x, y))
        link.setdefault(y[-1], []).append((y, x))
    e_label = intra[0][-1] if intra is not None else None
    if e_label is not None and len(ends.get(e_label, ())) == 2:
        return None
    e_cycle = cycle_through_edge_in_subnet(*intra) if intra is not None else None

    def piece(label, entry=None, exit=None):
        if label == e_label:
            return Open(e_cycle, protect=[intra], entry=entry, exit=exit)
        return Full(label, entry=entry, exit=exit)

    # follow each chain of linked subnetworks from one of its ends
    chains, seen = [], set()
    for start in sorted(link):
        if start in seen or len(link[start]) != 1:
            continue
        chain, label, entry = [], start, None
        while True:
            seen.add(label)
            outs = [(p, q) for p, q in link[label] if p != entry]
            if entry is not None and len(link[label]) == 1:
                chain.append(piece(label, entry=entry))
                break
            p, q = outs[0]
            chain.append(piece(label, entry=entry, exit=p))
            label, entry = q[-1], q
        chains.append(chain)
    if len(seen) != len(link):
        return None  # a ring of linked subnetworks
    loose = [piece(x) for x in range(1, d + 1) if x not in seen]
    if chains:
        groups = [chains[0], Bag(chains[1:] + loose)]
    else:
        special = [p for p in loose if isinstance(p, Open)]
        groups = [special[0], Bag([p for p in loose if not isinstance(p, Open)])]
    try:
        return _run(d, groups)
    except ConstructionError:
        return None


def cycle_through_edge_in_subnet(a, b):
    """Hamiltonian cycle of the subnetwork holding the edge ``(a, b)``, through it."""
    return _lift(cycle_through_edge(len(a) - 1, _drop(a), _drop(b)), a[-1])


@_memo
def _two_edges_canon(d, v, q):
    u = identity(d)
    e = (u, v)
    found = []
    rest = [x for x in range(1, d + 1) if x != q]
    for tail in permutations(rest):
        w = (q,) + tail
        z = apply_s(w, d, True)
        if {w, z} == {u, v}:
            continue
        if d <= SEARCH_DIM:
            cyc = hamiltonian_cycle(list(all_permutations(d)), [e, (w, z)], start=u)
        elif u[-1] != v[-1]:
            cyc = _cycle_with(d, [e, (w, z)])
        else:
            cyc = _cycle_with(d, [(w, z)], intra=e)
        if cyc is not None:
            found.append(((w, z), tuple(cyc)))
            if len(found) == 2:
                return tuple(found)
    raise ConstructionError(f"fewer than two prescribed edges for q={q}")


def two_edges(d, a, b, q):
    """Two options ``((w, w s_d^+), cycle)`` with ``w[0] == q``, each cycle through ``(a, b)``."""
    sigma, inv = _anchor(a)
    res = _two_edges_canon(d, relabel(sigma, b), sigma[q - 1])
    return [((relabel(inv, w), relabel(inv, z)), relabel_all(inv, c)) for (w, z), c in res]


# ---------------------------------------------------------------------------
# cluster cycles


@_memo
def _cluster_canon(d, labels, v):
    u = identity(d)
    if len(labels) == 1:
        return tuple(cycle_through_edge_in_subnet(u, v))
    if d <= SEARCH_DIM:
        verts = list(vertices_of(Cluster(d, labels)))
        found = hamiltonian_cycle(verts, [(u, v)], start=u)
        if found is None:
            raise ConstructionError(f"no cluster cycle for {labels}")
        return tuple(found)
    label, nxt = labels[0], labels[1]
    options = two_edges(d - 1, _drop(u), _drop(v), _subnet_symbol(d, label, nxt))
    for (w, z), cyc in options:
        w, z = _lift([w, z], label)
        if {w, z} == {u, v}:
            continue
        (w2, z2), target = next((pe, lab) for pe, lab in coupled_pair_edge((w, z)) if lab == nxt)
        first = _lift(cyc, label)
        second = cluster_cycle(d, labels[1:], w2, z2)
        return tuple(merge_on_pair(first, (w, z), second, (w2, z2)))
    raise ConstructionError("no usable prescribed edge")


def _subnet_symbol(d, label, symbol):
    """Symbol ``symbol`` of S_d^2 as seen inside subnetwork ``label`` (order-preserving)."""
    return symbol if symbol < label else symbol - 1


def cluster_cycle(d, labels, a, b):
    """Hamiltonian cycle of the cluster ``labels`` through the intra edge ``(a, b)``.

    The edge's subnetwork is moved to the front; the rest keep their order.
    """
    labels = tuple(labels)
    if a[-1] != labels[0]:
        labels = (a[-1],) + tuple(x for x in labels if x != a[-1])
    sigma, inv = _anchor(a)
    key = tuple(sigma[x - 1] for x in labels)
    return relabel_all(inv, _cluster_canon(d, key, relabel(sigma, b)))


# ---------------------------------------------------------------------------
# cycles of S_d^2 - {u, v} through any edge, v in {u o (1,2), u s_3^+}


@lru_cache(maxsize=None)
def _base_family(plus):
    u = identity(SEARCH_DIM)
    v = apply_s(u, 3, True) if plus else apply_swap12(u)
    verts = [x for x in all_permutations(SEARCH_DIM) if x not in (u, v)]
    family, covered = [], set()
    vs = set(verts)
    for a in verts:
        for b in adjacent_vertices(a):
            if b not in vs or frozenset((a, b)) in covered:
                continue
            found = hamiltonian_cycle(verts, [(a, b)], start=a)
            if found is None:
                raise ConstructionError(f"edge {(a, b)} lies on no cycle of the base graph")
            family.append(tuple(found))
            covered.update(frozenset(p) for p in zip(found, found[1:] + found[:1]))
    return tuple(family)


def base_edge_cover_family(u, v):
    """A family of 22-cycles of S_4^2 - {u, v} covering every edge of that graph."""
    plus = _pair_kind(u, v)
    sigma, inv = _anchor(u)
    return [relabel_all(inv, c) for c in _base_family(plus)]


def _pair_kind(u, v):
    kind = edge_kind(u, v)
    if kind == SWAP12:
        return False
    if kind.op == "+" and kind.i == 3:
        return True
    raise BadPair(f"{v} is neither {u} o (1,2) nor {u} s_3^+")


def _edge_in(cycle, a, b):
    k = cycle.index(a)
    m = len(cycle)
    return cycle[(k + 1) % m] == b or cycle[k - 1] == b


@_memo
def _minus_pair_edge_canon(d, v, w, z):
    u = identity(d)
    if d <= SEARCH_DIM:
        plus = _pair_kind(u, v)
        for c in _base_family(plus):
            if w in c and z in c and _edge_in(c, w, z):
                return c
        raise ConstructionError("edge missing from the base family")
    lab = u[-1]
    others = _others(d, lab)
    lw, lz = w[-1], z[-1]
    if lw == lab and lz == lab:
        sub = _lift(cycle_minus_pair_through_edge(d - 1, _drop(u), _drop(v), _drop(w), _drop(z)), lab)
        return tuple(_run(d, [Open(sub, protect=[(w, z)]), Bag([Full(x) for x in others])]))
    core = _lift(cycle_minus_pair(d - 1, _drop(u), _drop(v)), lab)
    if lw == lab or lz == lab:
        if lz == lab:
            w, z, lw, lz = z, w, lz, lw
        return tuple(_run(d, [Open(core, exit=w), Full(lz, entry=z), Bag([Full(x) for x in _others(d, lab, lz)])]))
    if lw == lz:
        sub = cycle_through_edge_in_subnet(w, z)
        rest = [Open(sub, protect=[(w, z)])] + [Full(x) for x in _others(d, lab, lw)]
        return tuple(_run(d, [Open(core), Bag(rest)]))
    rest = [Open(core)] + [Full(x) for x in _others(d, lab, lw, lz)]
    return tuple(_run(d, [Full(lz, entry=z), Bag(rest), Full(lw, exit=w)]))


def cycle_minus_pair_through_edge(d, u, v, w, z):
    sigma, inv = _anchor(u)
    c = _minus_pair_edge_canon(d, relabel(sigma, v), relabel(sigma, w), relabel(sigma, z))
    return relabel_all(inv, c)


# ---------------------------------------------------------------------------
# public, scope-aware API


def _scope_dim(scope, *verts):
    """Effective dimension and subnetwork label (``None`` for the whole graph)."""
    for x in verts:
        if x not in scope:
            raise OutOfScope(f"{x} is not in scope {scope}")
    if len(scope.labels) == scope.n:
        return scope.n, None
    if len(scope.labels) == 1:
        return scope.n - 1, scope.labels[0]
    raise OutOfScope("only the whole graph or a single subnetwork is supported here")


def _down(label, *verts):
    return [x if label is None else _drop(x) for x in verts]


def _up(label, seq):
    return list(seq) if label is None else _lift(seq, label)


def ham_path(scope, a, b):
    """Hamiltonian path of ``scope`` (whole graph or one subnetwork) from ``a`` to ``b``."""
    a, b = tuple(a), tuple(b)
    if a == b:
        raise SameEndpoints(f"endpoints coincide: {a}")
    d, label = _scope_dim(scope, a, b)
    if d < 2:
        raise DimensionTooSmall("subnetworks of S_2^2 are single vertices")
    a2, b2 = _down(label, a, b)
    return _up(label, path(d, a2, b2))


def ham_cycle_through_edge(scope, e):
    """Hamiltonian cycle of ``scope`` containing the edge ``e``."""
    a, b = tuple(e[0]), tuple(e[1])
    edge_kind(a, b)
    d, label = _scope_dim(scope, a, b)
    if d < 3:
        raise DimensionTooSmall("need effective dimension >= 3")
    a2, b2 = _down(label, a, b)
    return _up(label, cycle_through_edge(d, a2, b2))


def ham_cycle_minus_vertex(scope, u):
    """Cycle through every vertex of ``scope`` except ``u``."""
    u = tuple(u)
    d, label = _scope_dim(scope, u)
    if d < 3:
        raise DimensionTooSmall("need at least 4 vertices")
    (u2,) = _down(label, u)
    return _up(label, cycle_minus_vertex(d, u2))


def ham_cycle_minus_edge_pair(scope, u, v):
    """Cycle through every vertex of ``scope`` except the two ends of the edge ``(u, v)``."""
    u, v = tuple(u), tuple(v)
    kind = edge_kind(u, v)
    d, label = _scope_dim(scope, u, v)
    if d < 3 or (kind != SWAP12 and d < 4):
        raise DimensionTooSmall(f"an {kind} edge needs effective dimension >= 4")
    u2, v2 = _down(label, u, v)
    return _up(label, cycle_minus_pair(d, u2, v2))


def ham_cycle_two_edges(n, e, q):
    """Two edges ``(w, w s_n^+)`` with ``w`` starting with ``q``, each with a
    Hamiltonian cycle of S_n^2 through both it and ``e``.

    Returns ``(edges, cycles)``.
    """
    if not 1 <= q <= n:
        raise BadSymbol(f"q={q} outside [1, {n}]")
    if n < 4:
        raise DimensionTooSmall("needs n >= 4")
    a, b = tuple(e[0]), tuple(e[1])
    edge_kind(a, b)
    opts = two_edges(n, a, b, q)
    return [f for f, _ in opts], [c for _, c in opts]


def cluster_ham_cycle_through_edge(cluster, e):
    """Hamiltonian cycle of a cluster's induced subgraph through the intra edge ``e``."""
    a, b = tuple(e[0]), tuple(e[1])
    edge_kind(a, b)
    if a not in cluster or b not in cluster:
        raise OutOfScope(f"{e} is not inside cluster {cluster.labels}")
    if a[-1] != b[-1]:
        raise NotIntraSubnetwork(f"{a} and {b} lie in different subnetworks")
    if cluster.n < 4:
        raise DimensionTooSmall("clusters need n >= 4")
    return cluster_cycle(cluster.n, cluster.labels, a, b)


def ham_cycle_minus_pair_through_edge(n, u, v, e):
    """Hamiltonian cycle of S_n^2 - {u, v} through ``e``, for ``v`` in {u o (1,2), u s_3^+}."""
    u, v = tuple(u), tuple(v)
    if n < 4:
        raise DimensionTooSmall("needs n >= 4")
    try:
        _pair_kind(u, v)
    except ValueError:
        raise BadPair(f"{v} is neither {u} o (1,2) nor {u} s_3^+") from None
    w, z = tuple(e[0]), tuple(e[1])
    edge_kind(w, z)
    if {w, z} & {u, v}:
        raise EdgeTouchesRemoved(f"{e} touches a removed vertex")
    return cycle_minus_pair_through_edge(n, u, v, w, z)
