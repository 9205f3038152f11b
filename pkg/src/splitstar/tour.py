"""Splicing cycles and paths of S_d^2 out of per-subnetwork pieces.

A tour is an ordered list of pieces, each living inside one subnetwork,
joined by the ``s_d^{+/-}`` edges between subnetworks.  Pieces:

``Full``   the whole subnetwork, traversed by a Hamiltonian path chosen later
``Fixed``  a prescribed vertex sequence (a single vertex, an edge, a path)
``Open``   a prescribed cycle, cut at one unprotected edge and walked the long way

Groups of pieces may be left unordered (``Bag``); the depth-first search picks
the order and every junction.  Consecutive pieces need distinct subnetworks,
because the only edges leaving a vertex's subnetwork are its two ``s_d``
edges, so each entry vertex is forced by the previous exit.
"""

from __future__ import annotations

from itertools import permutations

from .errors import ConstructionError
from .topology import cross_neighbor_in

EXIT_CAP = 6
ENTRY_CAP = 24
DEFAULT_BUDGET = 4000


class Full:
    def __init__(self, label, entry=None, exit=None):
        self.label = label
        self.entry = entry
        self.exit = exit

    def reversed(self):
        return Full(self.label, self.exit, self.entry)

    def accepts(self, x):
        return self.entry is None or x == self.entry

    def entries(self, d):
        if self.entry is not None:
            return [self.entry]
        out = []
        for t in range(1, d + 1):
            if t != self.label:
                out.extend(_subnet_vertices(d, self.label, t, 2))
        return out

    def exits(self, x, toward=None, target=None):
        if target is not None:
            if target != x and (self.exit is None or self.exit == target):
                return [target]
            return []
        if self.exit is not None:
            if self.exit == x:
                return []
            if toward is None or self.exit[0] == toward or self.exit[1] == toward:
                return [self.exit]
            return []
        return [y for y in _subnet_vertices(len(x), self.label, toward, EXIT_CAP + 1) if y != x][:EXIT_CAP]

    def __repr__(self):
        return f"Full({self.label}, {self.entry}, {self.exit})"


class Fixed:
    def __init__(self, seq, reversible=True):
        self.seq = list(seq)
        self.label = self.seq[0][-1]
        self.reversible = reversible

    def reversed(self):
        return Fixed(self.seq[::-1], self.reversible)

    def accepts(self, x):
        return x == self.seq[0] or (self.reversible and x == self.seq[-1])

    def entries(self, d):
        return [self.seq[0], self.seq[-1]] if self.reversible and len(self.seq) > 1 else [self.seq[0]]

    def exits(self, x, toward=None, target=None):
        y = self.seq[-1] if x == self.seq[0] else self.seq[0]
        if len(self.seq) == 1:
            y = x
        if target is not None:
            return [y] if y == target else []
        if toward is None or y[0] == toward or y[1] == toward:
            return [y]
        return []

    def walk(self, x, y):
        return list(self.seq) if x == self.seq[0] and (y == self.seq[-1]) else self.seq[::-1]

    def __repr__(self):
        return f"Fixed({self.seq[0]}..{self.seq[-1]})"


class Open:
    def __init__(self, cycle, protect=(), entry=None, exit=None):
        self.cycle = list(cycle)
        self.pos = {v: k for k, v in enumerate(self.cycle)}
        self.label = self.cycle[0][-1]
        self.protect = {frozenset(e) for e in protect}
        self.entry = entry
        self.exit = exit

    def reversed(self):
        r = Open.__new__(Open)
        r.cycle, r.pos, r.label, r.protect = self.cycle, self.pos, self.label, self.protect
        r.entry, r.exit = self.exit, self.entry
        return r

    def accepts(self, x):
        return x in self.pos and (self.entry is None or x == self.entry)

    def entries(self, d):
        if self.entry is not None:
            return [self.entry]
        if self.exit is not None:
            return [y for y in self._nbrs(self.exit)]
        return self.cycle[:ENTRY_CAP] if len(self.cycle) > ENTRY_CAP else self.cycle

    def _nbrs(self, x):
        k = self.pos[x]
        m = len(self.cycle)
        out = []
        for y in (self.cycle[k - 1], self.cycle[(k + 1) % m]):
            if frozenset((x, y)) not in self.protect and y not in out:
                out.append(y)
        return out

    def exits(self, x, toward=None, target=None):
        out = []
        for y in self._nbrs(x):
            if self.exit is not None and y != self.exit:
                continue
            if target is not None and y != target:
                continue
            if target is None and toward is not None and y[0] != toward and y[1] != toward:
                continue
            out.append(y)
        return out

    def walk(self, x, y):
        c, m = self.cycle, len(self.cycle)
        k = self.pos[x]
        step = -1 if c[(k + 1) % m] == y else 1
        return [c[(k + step * t) % m] for t in range(m)]

    def __repr__(self):
        return f"Open({self.label}, len={len(self.cycle)})"


class Bag:
    """Unordered group of items; an item is a piece or a list of pieces kept consecutive."""

    def __init__(self, items, reversible=True):
        self.items = [list(it) if isinstance(it, (list, tuple)) else [it] for it in items]
        self.reversible = reversible


def _subnet_vertices(d, label, toward, cap):
    """Up to ``cap`` vertices of subnetwork ``label`` (lexicographic), optionally with
    ``toward`` in position 1 or 2."""
    symbols = [x for x in range(1, d + 1) if x != label]
    if toward is None:
        out = []
        for p in permutations(symbols):
            out.append(p + (label,))
            if len(out) >= cap:
                break
        return out
    if toward == label:
        return []
    rest = [x for x in symbols if x != toward]
    firsts = []
    for p in permutations(rest):
        firsts.append((toward,) + p + (label,))
        if len(firsts) >= cap:
            break
    seconds = []
    for a in rest:
        for p in permutations([x for x in rest if x != a]):
            seconds.append((a, toward) + p + (label,))
            if len(seconds) >= cap:
                break
        if len(seconds) >= cap:
            break
    return sorted(firsts + seconds)[:cap]


def _units(groups):
    units = []
    for g in groups:
        if isinstance(g, Bag):
            units.append(("bag", tuple(tuple(it) for it in g.items), g.reversible))
        elif isinstance(g, (list, tuple)):
            units.extend(("one", p) for p in g)
        else:
            units.append(("one", g))
    return tuple(units)


def _next_options(units):
    """Yield ``(piece, remaining_units)`` for every piece that may come next."""
    if not units:
        return
    head, rest = units[0], units[1:]
    if head[0] == "one":
        yield head[1], rest
        return
    _, items, reversible = head
    for k, item in enumerate(items):
        others = items[:k] + items[k + 1:]
        tail = ((("bag", others, reversible),) if others else ()) + rest
        variants = [item]
        if reversible and len(item) > 1:
            variants.append(tuple(p.reversed() for p in reversed(item)))
        for var in variants:
            yield var[0], tuple(("one", p) for p in var[1:]) + tail


def _fixed_entry(piece):
    if isinstance(piece, Fixed):
        return None if piece.reversible else piece.seq[0]
    return piece.entry


def _can_close(nxt, rest, first_entry):
    # the final piece must sit in a subnetwork adjacent to the first entry
    closers = first_entry[:2]
    if not rest:
        return nxt.label in closers
    kind, *body = rest[-1]
    if kind == "one":
        return body[0].label in closers
    items, reversible = body
    return any(it[-1].label in closers or (reversible and it[0].label in closers) for it in items)


def splice(d, groups, closed=True, budget=DEFAULT_BUDGET, first_entries=None):
    """Find an assignment of entries/exits for the tour; returns ``[(piece, entry, exit), ...]``.

    Raises :class:`ConstructionError` when the search fails within ``budget`` nodes.
    """
    units = _units(groups)
    if not units:
        raise ConstructionError("empty tour")
    calls = 0
    placed = []

    def extend(piece, x, rest, first_entry):
        nonlocal calls
        calls += 1
        if calls > budget:
            raise _Exhausted
        if not rest:
            if closed:
                target = cross_neighbor_in(first_entry, piece.label)
                if target is None:
                    return False
                ys = piece.exits(x, target=target)
            else:
                ys = piece.exits(x)
                if isinstance(piece, Full) and piece.exit is None:
                    ys = [y for y in _subnet_vertices(d, piece.label, None, 10**9) if y != x][:1]
            for y in ys:
                placed.append((piece, x, y))
                return True
            return False
        for nxt, rest2 in _next_options(rest):
            fe = _fixed_entry(nxt)
            if fe is not None:
                t = cross_neighbor_in(fe, piece.label)
                ys = piece.exits(x, target=t) if t is not None else []
            else:
                ys = piece.exits(x, toward=nxt.label)
            if closed and not _can_close(nxt, rest2, first_entry):
                continue
            for y in ys:
                x2 = cross_neighbor_in(y, nxt.label)
                if x2 is None or not nxt.accepts(x2):
                    continue
                placed.append((piece, x, y))
                if extend(nxt, x2, rest2, first_entry):
                    return True
                placed.pop()
        return False

    try:
        for first, rest in _next_options(units):
            entries = first_entries if first_entries is not None else first.entries(d)
            for x in entries:
                if not first.accepts(x):
                    continue
                if extend(first, x, rest, x):
                    return list(placed)
    except _Exhausted:
        pass
    raise ConstructionError("no tour found")


class _Exhausted(Exception):
    pass


def materialize(plan, full_path):
    """Concatenate the pieces of a solved tour; ``full_path(x, y)`` fills ``Full`` pieces."""
    out = []
    for piece, x, y in plan:
        if isinstance(piece, Full):
            out.extend(full_path(x, y))
        elif isinstance(piece, Fixed):
            out.extend(piece.walk(x, y) if len(piece.seq) > 1 else piece.seq)
        else:
            out.extend(piece.walk(x, y))
    return out
