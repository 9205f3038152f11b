"""Structural validators and the exhaustive n = 4 oracle.

Adjacency here is recomputed from the three generator rules directly and
shares no code with :mod:`splitstar.topology`; the oracle is the independent
ground truth that the constructive modules are tested against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from math import factorial

from .cover import DccCover
from .errors import UnsupportedDimension
from .permutation import format_perm, rank

__all__ = [
    "ValidationReport",
    "adjacent",
    "validate_cycle",
    "validate_dcc",
    "edge_cover_check",
    "brute_force_dcc",
]

CODES = (
    "NonAdjacentStep",
    "RepeatedVertex",
    "WrongLength",
    "CoverageGap",
    "CoverageOverlap",
    "MembershipMiss",
)


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def add(self, code, detail):
        assert code in CODES, code
        self.violations.append((code, detail))

    def codes(self):
        return [c for c, _ in self.violations]

    def to_dict(self):
        return {"ok": self.ok, "violations": [{"code": c, "detail": d} for c, d in self.violations]}

    def __bool__(self):
        return self.ok


def _neighbours(p):
    n = len(p)
    out = {(p[1], p[0]) + p[2:]}
    for i in range(2, n):
        a, b, c = p[0], p[1], p[i]
        minus = list(p)
        minus[0], minus[1], minus[i] = b, c, a
        plus = list(p)
        plus[0], plus[1], plus[i] = c, a, b
        out.add(tuple(minus))
        out.add(tuple(plus))
    return out


def adjacent(a, b):
    return len(a) == len(b) and tuple(b) in _neighbours(tuple(a))


def _fmt(x):
    return format_perm(x) if isinstance(x, tuple) else str(x)


def _scope_vertices(scope):
    n = scope.n
    out = set()
    for label in scope.labels:
        rest = [x for x in range(1, n + 1) if x != label]
        out.update(p + (label,) for p in permutations(rest))
    return out


def validate_cycle(scope, c, required_vertices=None, forbidden_vertices=None, required_edges=None):
    """Check that ``c`` is a simple cycle of S_n^2 meeting the given constraints.

    With a ``scope`` (a cluster, or ``None`` for no coverage check), the cycle
    must cover exactly the scope's vertices minus ``forbidden_vertices``.
    """
    report = ValidationReport()
    c = [tuple(x) for x in c]
    if len(c) < 3:
        report.add("WrongLength", f"cycle of length {len(c)} < 3")
    seen = set()
    for x in c:
        if x in seen:
            report.add("RepeatedVertex", _fmt(x))
        seen.add(x)
    if len(c) >= 2:
        pairs = zip(c, c[1:] + c[:1]) if len(c) >= 3 else zip(c, c[1:])
        for a, b in pairs:
            if not adjacent(a, b):
                report.add("NonAdjacentStep", f"{_fmt(a)} -> {_fmt(b)}")
    for x in required_vertices or ():
        if tuple(x) not in seen:
            report.add("MembershipMiss", f"missing required vertex {_fmt(tuple(x))}")
    forbidden = {tuple(x) for x in forbidden_vertices or ()}
    for x in forbidden & seen:
        report.add("CoverageOverlap", f"forbidden vertex {_fmt(x)} on the cycle")
    if required_edges:
        on = {frozenset(p) for p in zip(c, c[1:] + c[:1])}
        for a, b in required_edges:
            if frozenset((tuple(a), tuple(b))) not in on:
                report.add("MembershipMiss", f"missing required edge {_fmt(tuple(a))}-{_fmt(tuple(b))}")
    if scope is not None:
        want = _scope_vertices(scope) - forbidden
        for x in sorted(want - seen):
            report.add("CoverageGap", f"{_fmt(x)} not covered")
        for x in sorted(seen - want - forbidden):
            report.add("CoverageOverlap", f"{_fmt(x)} outside the scope")
    return report


def validate_dcc(n, cover, u, v, ell):
    """Check a 2-disjoint-cycle cover: ``cover.c1`` holds ``u`` and has ``ell`` vertices,
    ``cover.c2`` holds ``v``; together they partition all ``n!`` vertices."""
    c1, c2 = (cover.c1, cover.c2) if hasattr(cover, "c1") else cover
    c1 = [tuple(x) for x in c1]
    c2 = [tuple(x) for x in c2]
    u, v = tuple(u), tuple(v)
    report = ValidationReport()
    for c in (c1, c2):
        for code, detail in validate_cycle(None, c).violations:
            report.add(code, detail)
    total = factorial(n)
    if len(c1) != ell:
        report.add("WrongLength", f"first cycle has {len(c1)} vertices, expected {ell}")
    if len(c2) != total - ell:
        report.add("WrongLength", f"second cycle has {len(c2)} vertices, expected {total - ell}")
    s1, s2 = set(c1), set(c2)
    for x in sorted(s1 & s2):
        report.add("CoverageOverlap", f"{_fmt(x)} on both cycles")
    everything = set(permutations(range(1, n + 1)))
    for x in sorted(everything - s1 - s2):
        report.add("CoverageGap", f"{_fmt(x)} on neither cycle")
    for x in sorted((s1 | s2) - everything):
        report.add("CoverageOverlap", f"{_fmt(x)} is not a vertex of S_{n}^2")
    if u not in s1:
        report.add("MembershipMiss", f"{_fmt(u)} not on the first cycle")
    if v not in s2:
        report.add("MembershipMiss", f"{_fmt(v)} not on the second cycle")
    return report


def edge_cover_check(family, scope, removed=()):
    """Every edge of ``scope`` minus ``removed`` vertices lies on some cycle of ``family``."""
    report = ValidationReport()
    removed = {tuple(x) for x in removed}
    verts = _scope_vertices(scope) - removed
    covered = set()
    for c in family:
        c = [tuple(x) for x in c]
        covered.update(frozenset(p) for p in zip(c, c[1:] + c[:1]))
    for a in sorted(verts):
        for b in sorted(_neighbours(a)):
            if b in verts and a < b and frozenset((a, b)) not in covered:
                report.add("CoverageGap", f"edge {_fmt(a)}-{_fmt(b)} uncovered")
    return report


# ---------------------------------------------------------------------------
# exhaustive oracle


class _Graph4:
    def __init__(self):
        self.verts = sorted(permutations(range(1, 5)), key=rank)
        self.index = {p: k for k, p in enumerate(self.verts)}
        self.adj = [sorted(self.index[q] for q in _neighbours(p)) for p in self.verts]


_G4 = None


def _graph4():
    global _G4
    if _G4 is None:
        _G4 = _Graph4()
    return _G4


def _ham_cycle_through(adj, allowed, start):
    """Hamiltonian cycle of the vertices in bitmask ``allowed``, as an index list from ``start``."""
    full = allowed
    path = [start]

    def rec(cur, seen):
        if seen == full:
            return start in adj[cur] and len(path) >= 3
        for y in adj[cur]:
            if not (allowed >> y & 1) or seen >> y & 1:
                continue
            path.append(y)
            if rec(y, seen | (1 << y)):
                return True
            path.pop()
        return False

    return list(path) if rec(start, 1 << start) else None


def brute_force_dcc(u, v, ell):
    """First cover found by exhaustive search, with ``u`` on the ``ell``-cycle
    ``c1`` and ``v`` on ``c2``; ``None`` if none exists."""
    u, v = tuple(u), tuple(v)
    if len(u) != 4 or len(v) != 4:
        raise UnsupportedDimension("the oracle only covers n = 4")
    g = _graph4()
    adj = g.adj
    su, sv = g.index[u], g.index[v]
    all_mask = (1 << 24) - 1
    path = [su]

    def rec(cur, seen):
        if len(path) == ell:
            if su in adj[cur] and path[1] < cur:
                rest = all_mask & ~seen
                c2 = _ham_cycle_through(adj, rest, sv)
                if c2 is not None:
                    return c2
            return None
        for y in adj[cur]:
            if y == sv or seen >> y & 1:
                continue
            path.append(y)
            found = rec(y, seen | (1 << y))
            if found is not None:
                return found
            path.pop()
        return None

    c2 = rec(su, 1 << su)
    if c2 is None:
        return None
    return DccCover(4, u, v, ell, [g.verts[k] for k in path], [g.verts[k] for k in c2])
