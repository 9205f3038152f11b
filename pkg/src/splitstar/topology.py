"""The split-star network S_n^2 as an implicit graph.

Vertices are permutations of ``[1..n]`` (tuples, see :mod:`splitstar.permutation`).
A vertex ``u = x1 x2 ... xn`` is adjacent to

* ``u o (1,2)``   swap the symbols in positions 1 and 2            (kind ``12``)
* ``u s_i^-``     positions (1, 2, i) receive (x2, xi, x1)          (kind ``si-``)
* ``u s_i^+``     positions (1, 2, i) receive (xi, x1, x2)          (kind ``si+``)

for every ``i`` in ``[3, n]``, so the graph is ``(2n-3)``-regular.  The
subnetwork ``S_n^{2:i}`` is the set of vertices whose last symbol is ``i``;
only the ``s_n^{+/-}`` generators leave a subnetwork.

The graph is never materialised: neighbours are computed on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial

from .errors import (
    BadIndex,
    DimensionMismatch,
    NotAdjacent,
    NotIntraSubnetwork,
    OutOfScope,
)
from .permutation import check

__all__ = [
    "EdgeKind",
    "SWAP12",
    "Edge",
    "Cluster",
    "WholeGraph",
    "Subnet",
    "apply_swap12",
    "apply_s",
    "neighbors",
    "adjacent_vertices",
    "cross_neighbors",
    "cross_neighbor_in",
    "is_adjacent",
    "edge_kind",
    "make_edge",
    "subnetwork_of",
    "coupled_pair_edge",
    "relabel",
    "relabel_all",
    "canonicalizer",
    "vertices_of",
    "to_subnet",
    "from_subnet",
    "lift_all",
    "drop_all",
    "edges_of",
]


@dataclass(frozen=True)
class EdgeKind:
    """Classification of an edge: ``op`` is ``"12"``, ``"+"`` or ``"-"``."""

    op: str
    i: int = 0

    def __str__(self):
        if self.op == "12":
            return "12"
        return f"s{self.i}{self.op}"

    @classmethod
    def parse(cls, text):
        if text == "12":
            return SWAP12
        if len(text) >= 3 and text[0] == "s" and text[-1] in "+-":
            return cls(text[-1], int(text[1:-1]))
        raise ValueError(f"bad edge kind {text!r}")

    @property
    def reverse(self):
        """The kind of the same edge read from the other end."""
        if self.op == "12":
            return self
        return EdgeKind("-" if self.op == "+" else "+", self.i)


SWAP12 = EdgeKind("12")


class Edge(tuple):
    """An edge ``(a, b)`` of S_n^2; adjacency is checked on construction."""

    __slots__ = ()

    def __new__(cls, a, b):
        a, b = tuple(a), tuple(b)
        edge_kind(a, b)
        return super().__new__(cls, (a, b))

    @property
    def a(self):
        return self[0]

    @property
    def b(self):
        return self[1]


def make_edge(a, b):
    return Edge(a, b)


# generators ----------------------------------------------------------------

def apply_swap12(u):
    return (u[1], u[0]) + tuple(u[2:])


def apply_s(u, i, plus):
    """``u s_i^+`` when ``plus`` else ``u s_i^-``; ``3 <= i <= n``."""
    n = len(u)
    if not 3 <= i <= n:
        raise BadIndex(f"generator index {i} outside [3, {n}]")
    x = list(u)
    a, b, c = x[0], x[1], x[i - 1]
    if plus:
        x[0], x[1], x[i - 1] = c, a, b
    else:
        x[0], x[1], x[i - 1] = b, c, a
    return tuple(x)


def _s(u, i, plus):
    # unchecked variant for inner loops
    x = list(u)
    a, b, c = x[0], x[1], x[i - 1]
    if plus:
        x[0], x[1], x[i - 1] = c, a, b
    else:
        x[0], x[1], x[i - 1] = b, c, a
    return tuple(x)


def neighbors(u):
    """All ``2n-3`` neighbours of ``u`` with their kinds.

    Order: ``12`` first, then ``i`` ascending with ``s_i^-`` before ``s_i^+``.
    """
    out = [(apply_swap12(u), SWAP12)]
    for i in range(3, len(u) + 1):
        out.append((_s(u, i, False), EdgeKind("-", i)))
        out.append((_s(u, i, True), EdgeKind("+", i)))
    return out


def adjacent_vertices(u):
    """Neighbours of ``u`` in the same order as :func:`neighbors`, without kinds."""
    out = [(u[1], u[0]) + u[2:]]
    for i in range(3, len(u) + 1):
        out.append(_s(u, i, False))
        out.append(_s(u, i, True))
    return out


def cross_neighbors(u):
    """``(u s_n^-, u s_n^+)``: the two neighbours outside ``u``'s subnetwork.

    ``u s_n^-`` lies in subnetwork ``u[0]``, ``u s_n^+`` in subnetwork ``u[1]``.
    """
    n = len(u)
    return _s(u, n, False), _s(u, n, True)


def cross_neighbor_in(u, label):
    """The neighbour of ``u`` in subnetwork ``label`` (``None`` if there is none)."""
    n = len(u)
    if u[0] == label:
        return _s(u, n, False)
    if u[1] == label:
        return _s(u, n, True)
    return None


def edge_kind(u, v):
    """The kind under which ``v`` is a neighbour of ``u``."""
    if len(u) != len(v):
        raise DimensionMismatch("vertices of different dimension")
    if u == v:
        raise NotAdjacent(f"{u} equals {v}")
    n = len(u)
    diff = [j for j in range(n) if u[j] != v[j]]
    if diff == [0, 1] and v[0] == u[1] and v[1] == u[0]:
        return SWAP12
    if len(diff) == 3 and diff[0] == 0 and diff[1] == 1:
        i = diff[2] + 1
        if i >= 3:
            if v[0] == u[1] and v[1] == u[i - 1] and v[i - 1] == u[0]:
                return EdgeKind("-", i)
            if v[0] == u[i - 1] and v[1] == u[0] and v[i - 1] == u[1]:
                return EdgeKind("+", i)
    raise NotAdjacent(f"{u} and {v} are not adjacent")


def is_adjacent(u, v):
    try:
        edge_kind(u, v)
    except NotAdjacent:
        return False
    return True


def subnetwork_of(u):
    return u[-1]


def coupled_pair_edge(e):
    """Coupled pair-edges of an intra-subnetwork edge ``e = (u, v)``.

    Returns a list of ``((u', v'), label)`` with ``u'`` in ``{u s_n^+, u s_n^-}``,
    ``v'`` in ``{v s_n^+, v s_n^-}``, ``(u', v')`` an edge of subnetwork
    ``label`` and ``<u, u', v', v>`` a 4-cycle.  A ``12`` edge has two options,
    the one in ``S^{2:u_1}`` first; an ``s_k^-`` edge couples into ``S^{2:u_2}``
    and an ``s_k^+`` edge into ``S^{2:u_1}``.
    """
    u, v = tuple(e[0]), tuple(e[1])
    kind = edge_kind(u, v)
    n = len(u)
    if u[-1] != v[-1]:
        raise NotIntraSubnetwork(f"{u} and {v} lie in different subnetworks")
    if kind == SWAP12:
        return [
            ((_s(u, n, False), _s(v, n, True)), u[0]),
            ((_s(u, n, True), _s(v, n, False)), u[1]),
        ]
    if kind.op == "-":
        return [((_s(u, n, True), _s(v, n, False)), u[1])]
    return [((_s(u, n, False), _s(v, n, True)), u[0])]


# automorphisms --------------------------------------------------------------

def relabel(sigma, u):
    """Replace every symbol ``x`` of ``u`` by ``sigma(x)``; an automorphism."""
    if len(sigma) != len(u):
        raise DimensionMismatch("relabel: dimensions differ")
    return tuple(sigma[x - 1] for x in u)


def relabel_all(sigma, seq):
    return [tuple(sigma[x - 1] for x in u) for u in seq]


def canonicalizer(anchor, target=None):
    """Symbol maps ``(sigma, sigma_inv)`` with ``relabel(sigma, anchor) == target``.

    ``target`` defaults to the identity permutation.
    """
    n = len(anchor)
    if target is None:
        target = tuple(range(1, n + 1))
    sigma = [0] * n
    for a, t in zip(anchor, target):
        sigma[a - 1] = t
    sigma = tuple(sigma)
    inv = [0] * n
    for j, x in enumerate(sigma, 1):
        inv[x - 1] = j
    return sigma, tuple(inv)


# subnetworks and clusters ------------------------------------------------------

@dataclass(frozen=True)
class Cluster:
    """The induced subgraph on the union of the subnetworks in ``labels``."""

    n: int
    labels: tuple

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise ValueError("a cluster needs at least one subnetwork")
        if len(set(labels)) != len(labels):
            raise ValueError(f"repeated subnetwork label in {labels}")
        if any(not 1 <= x <= self.n for x in labels):
            raise ValueError(f"labels {labels} outside [1, {self.n}]")

    def __contains__(self, u):
        return len(u) == self.n and u[-1] in self.labels

    def vertices(self):
        return vertices_of(self)

    def size(self):
        return len(self.labels) * factorial(self.n - 1)


def WholeGraph(n):
    """Scope covering all of S_n^2."""
    return Cluster(n, tuple(range(1, n + 1)))


def Subnet(n, label):
    """Scope covering the subnetwork ``S_n^{2:label}``."""
    return Cluster(n, (label,))


def vertices_of(cluster):
    """Vertices of a cluster, subnetwork by subnetwork, each in lexicographic order."""
    n = cluster.n
    for label in cluster.labels:
        rest = [x for x in range(1, n + 1) if x != label]
        for p in permutations(rest):
            yield p + (label,)


def edges_of(cluster):
    """Every edge of the induced subgraph once, as ``(a, b, kind)`` with ``a < b``."""
    for a in vertices_of(cluster):
        for b, kind in neighbors(a):
            if b[-1] in cluster.labels and a < b:
                yield a, b, kind


# isomorphism S_n^{2:label} -> S_{n-1}^2 ---------------------------------------

@lru_cache(maxsize=None)
def _subnet_maps(n, label):
    rest = [x for x in range(1, n + 1) if x != label]
    down = {x: k for k, x in enumerate(rest, 1)}
    return tuple(rest), down


def to_subnet(p, label):
    """Embed ``p`` in S_{n-1}^2 into ``S_n^{2:label}`` (order-preserving relabel)."""
    up, _ = _subnet_maps(len(p) + 1, label)
    return tuple(up[x - 1] for x in p) + (label,)


def from_subnet(u):
    """Inverse of :func:`to_subnet`: drop the last symbol and compress."""
    _, down = _subnet_maps(len(u), u[-1])
    return tuple(down[x] for x in u[:-1])


def lift_all(seq, label):
    up, _ = _subnet_maps(len(seq[0]) + 1, label)
    return [tuple(up[x - 1] for x in p) + (label,) for p in seq]


def drop_all(seq):
    _, down = _subnet_maps(len(seq[0]), seq[0][-1])
    return [tuple(down[x] for x in u[:-1]) for u in seq]


def check_vertex(u, n):
    u = check(u, n)
    if n < 3:
        raise BadIndex("split-star networks need n >= 3")
    return u


def require_in(scope, *vs):
    for u in vs:
        if u not in scope:
            raise OutOfScope(f"{u} is not in the scope {scope}")
