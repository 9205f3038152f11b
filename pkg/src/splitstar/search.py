"""Backtracking Hamiltonian path/cycle search on small induced subgraphs.

Used only where the vertex set is small (a few dozen vertices): the dimension-4
building blocks and their memoised tables.  Neighbour order follows
:func:`splitstar.topology.adjacent_vertices`, so results are deterministic.
"""

from __future__ import annotations

from .errors import ConstructionError
from .topology import adjacent_vertices

DEFAULT_BUDGET = 2_000_000


class _Budget(Exception):
    pass


def _index(vertices):
    verts = list(vertices)
    index = {v: k for k, v in enumerate(verts)}
    adj = [tuple(index[w] for w in adjacent_vertices(v) if w in index) for v in verts]
    return verts, index, adj


def _search(adj, start, end, need, budget):
    """DFS for a Hamiltonian path ``start -> end``; ``end is None`` asks for a cycle."""
    m = len(adj)
    closed = end is None
    full = (1 << m) - 1
    path = [start]
    steps = 0

    def starved(visited, cur):
        # every unvisited vertex still needs two usable neighbours (one for the path end)
        for x in range(m):
            if visited >> x & 1:
                continue
            free = 0
            for y in adj[x]:
                if not visited >> y & 1 or y == cur or (closed and y == start):
                    free += 1
                    if free == 2:
                        break
            if free < (1 if x == end else 2):
                return True
        return False

    def rec(cur, visited):
        nonlocal steps
        steps += 1
        if steps > budget:
            raise _Budget
        if visited == full:
            if not closed:
                return cur == end and need[cur] <= {path[-2]}
            return start in adj[cur] and need[cur] <= {path[-2], start} and need[start] <= {path[1], cur}
        prev = path[-2] if len(path) > 1 else None
        pending = need[cur] - {prev}
        if cur == start and closed:
            # one partner of the start may close the cycle at the very end
            cands = sorted(pending, key=adj[cur].index) if pending else adj[cur]
        else:
            if len(pending) > 1:
                return False
            cands = tuple(pending) if pending else adj[cur]
        for y in cands:
            if visited >> y & 1:
                continue
            nv = visited | (1 << y)
            if y == end and nv != full:
                continue
            if closed and y in need[start] and len(path) > 1 and nv != full:
                continue
            if closed and cur == start and len(pending - {y}) > 1:
                continue
            ok = True
            for p in need[y]:
                if p != cur and visited >> p & 1 and not (closed and p == start and nv == full):
                    ok = False
                    break
            if not ok:
                continue
            path.append(y)
            if (nv == full or not starved(nv, y)) and rec(y, nv):
                return True
            path.pop()
        return False

    try:
        found = rec(start, 1 << start)
    except _Budget:
        raise ConstructionError("search budget exhausted") from None
    return list(path) if found else None


def _needs(index, m, required_edges):
    need = [set() for _ in range(m)]
    for a, b in required_edges:
        need[index[a]].add(index[b])
        need[index[b]].add(index[a])
    return need


def hamiltonian_cycle(vertices, required_edges=(), start=None, budget=DEFAULT_BUDGET):
    """A Hamiltonian cycle of the subgraph induced by ``vertices`` containing ``required_edges``.

    The cycle is returned starting at ``start`` (default: first required
    endpoint, else the first vertex); ``None`` when no such cycle exists.
    """
    verts, index, adj = _index(vertices)
    m = len(verts)
    if m < 3:
        return None
    need = _needs(index, m, required_edges)
    if any(len(s) > 2 for s in need):
        return None
    if start is None:
        start = required_edges[0][0] if required_edges else verts[0]
    found = _search(adj, index[start], None, need, budget)
    return None if found is None else [verts[k] for k in found]


def hamiltonian_path(vertices, a, b, required_edges=(), budget=DEFAULT_BUDGET):
    """A Hamiltonian path ``a -> b`` of the subgraph induced by ``vertices``."""
    verts, index, adj = _index(vertices)
    m = len(verts)
    if a == b:
        return [a] if m == 1 else None
    need = _needs(index, m, required_edges)
    if any(len(s) > 2 for s in need):
        return None
    found = _search(adj, index[a], index[b], need, budget)
    return None if found is None else [verts[k] for k in found]

