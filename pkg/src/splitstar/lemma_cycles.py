"""Cycles spanning chosen subnetworks plus one pinned vertex or edge, and the
prefix-disjoint pair selector for 2-disjoint-cycle covers.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .errors import BadSelection, ConstructionError, DimensionTooSmall, NotADcc, NotIntraSubnetwork
from .hamilton import _subnet_path
from .permutation import identity, rank
from .search import hamiltonian_cycle
from .tour import Bag, Fixed, Full, materialize, splice
from .topology import Cluster, canonicalizer, edge_kind, is_adjacent, relabel, relabel_all, vertices_of

__all__ = ["cycle_subnets_plus_vertex", "cycle_subnets_plus_edge", "prefix_disjoint_pair"]

SEARCH_DIM = 4


def _selection(n, T, excluded):
    T = tuple(sorted(set(T)))
    if any(not 1 <= t <= n for t in T):
        raise BadSelection(f"labels {T} outside [1, {n}]")
    bad = set(T) & set(excluded)
    if bad:
        raise BadSelection(f"T may not contain {sorted(bad)}")
    return T


def _build(n, pinned, labels):
    if n <= SEARCH_DIM:
        verts = list(vertices_of(Cluster(n, labels))) + list(pinned)
        required = [tuple(pinned)] if len(pinned) == 2 else []
        found = hamiltonian_cycle(verts, required, start=pinned[0])
        if found is None:
            raise ConstructionError("no cycle over the selected subnetworks")
        return tuple(found)
    plan = splice(n, [Fixed(list(pinned)), Bag([Full(x) for x in labels])])
    c = materialize(plan, _subnet_path)
    k = c.index(pinned[0])
    return tuple(c[k:] + c[:k])


@lru_cache(maxsize=None)
def _plus_vertex_canon(n, T):
    u = identity(n)
    return _build(n, (u,), (u[0], u[1]) + T)


@lru_cache(maxsize=None)
def _plus_edge_canon(n, v, T):
    u = identity(n)
    return _build(n, (u, v), (u[0], u[1]) + T)


def cycle_subnets_plus_vertex(n, u, T=()):
    """Cycle through ``u`` covering exactly the subnetworks ``u[0]``, ``u[1]`` and ``T``.

    ``u`` is joined to the rest by its two ``s_n`` edges.
    """
    u = tuple(u)
    if n < 4:
        raise DimensionTooSmall("needs n >= 4")
    T = _selection(n, T, (u[0], u[1], u[-1]))
    sigma, inv = canonicalizer(u)
    key = tuple(sorted(sigma[t - 1] for t in T))
    return relabel_all(inv, _plus_vertex_canon(n, key))


def cycle_subnets_plus_edge(n, e, T=()):
    """Cycle through the intra edge ``e = (u, v)`` covering exactly the
    subnetworks ``u[0]``, ``u[1]`` and ``T`` besides ``u`` and ``v``."""
    u, v = tuple(e[0]), tuple(e[1])
    edge_kind(u, v)
    if u[-1] != v[-1]:
        raise NotIntraSubnetwork(f"{u} and {v} lie in different subnetworks")
    if n < 4:
        raise DimensionTooSmall("needs n >= 4")
    T = _selection(n, T, (u[0], u[1], u[-1]))
    sigma, inv = canonicalizer(u)
    key = tuple(sorted(sigma[t - 1] for t in T))
    return relabel_all(inv, _plus_edge_canon(n, relabel(sigma, v), key))


def _check_dcc(c1, c2):
    if not c1 or not c2:
        raise NotADcc("empty cycle")
    n = len(c1[0])
    if n < 4:
        raise NotADcc("needs n >= 4")
    for c in (c1, c2):
        if len(c) < 3 or len(set(c)) != len(c):
            raise NotADcc("not a simple cycle")
        if any(not is_adjacent(a, b) for a, b in zip(c, c[1:] + c[:1])):
            raise NotADcc("consecutive vertices are not adjacent")
    if set(c1) & set(c2):
        raise NotADcc("the cycles share a vertex")
    if len(c1) + len(c2) != factorial(n):
        raise NotADcc("the cycles do not cover every vertex")


def prefix_disjoint_pair(c1, c2):
    """``(w, z)`` with ``w`` on ``c1``, ``z`` on ``c2`` and ``{w[0], w[1]}``, ``{z[0], z[1]}`` disjoint.

    The pair smallest by ``(rank(w), rank(z))`` is returned.
    """
    c1 = [tuple(x) for x in c1]
    c2 = [tuple(x) for x in c2]
    _check_dcc(c1, c2)
    best = {}
    for z in c2:
        key = z[:2]
        if key not in best or rank(z) < rank(best[key]):
            best[key] = z
    for w in sorted(c1, key=rank):
        cands = [z for key, z in best.items() if not set(key) & set(w[:2])]
        if cands:
            return w, min(cands, key=rank)
    raise ConstructionError("no prefix-disjoint pair")
