"""Base covers of S_4^2 for ``u = 1234``: printed tables, their repair, and lookup.

Three tables cover ``v = 2134``, the four vertices ``3124, 1324, 3214, 2314``
and the subnetwork ending in 2; covers for ``v`` ending in 1 or 3 are
generated by the exhaustive oracle.  Everything is validated at build time
(``tools/build_base_tables.py``) and shipped as ``data/base_covers.json``.
"""

from __future__ import annotations

import json
from functools import lru_cache
from itertools import permutations
from importlib import resources

from .data.printed_tables import PRINTED, TARGETS
from .errors import BadLength, ConstructionError, NotBaseDimension, SameVertex
from .permutation import format_perm, parse, rank
from .topology import adjacent_vertices
from .verify import ValidationReport, brute_force_dcc, validate_cycle, validate_dcc

U = (1, 2, 3, 4)
LENGTHS = range(3, 13)
DATA_FILE = "base_covers.json"


def parse_cycle(text):
    verts = [parse(t, 4) for t in text.split(",")]
    if len(verts) > 1 and verts[0] == verts[-1]:
        verts.pop()
    return verts


def table_for(v):
    """Which table serves ``v`` (``None`` for the generated cases)."""
    v = tuple(v)
    for k in (1, 2, 3):
        if format_perm(v) in TARGETS[k]:
            return k
    return None


def targets(table):
    return [parse(t, 4) for t in TARGETS[table]]


def check_row(table, ell, c1, c2):
    """Validate a table row against every vertex the table keeps on the second cycle."""
    report = ValidationReport()
    seen = set()
    for v in targets(table):
        for item in validate_dcc(4, (c1, c2), U, v, ell).violations:
            if item not in seen:
                seen.add(item)
                report.violations.append(item)
    return report


# ---------------------------------------------------------------------------
# repair: constrained search that follows the printed order where it can

_VERTS = None


def _graph():
    global _VERTS
    if _VERTS is None:
        verts = sorted(_all4(), key=rank)
        index = {p: k for k, p in enumerate(verts)}
        adj = [[index[q] for q in adjacent_vertices(p)] for p in verts]
        _VERTS = verts, index, adj
    return _VERTS


def _all4():
    return permutations(range(1, 5))


def _preferences(printed, index):
    """Successor ranks from a printed cycle: printed successor first, then predecessor."""
    pref = {}
    m = len(printed)
    for k, p in enumerate(printed):
        if p in index:
            pref.setdefault(index[p], [])
            for q in (printed[(k + 1) % m], printed[k - 1]):
                if q in index and index[q] not in pref[index[p]]:
                    pref[index[p]].append(index[q])
    return pref


def _ordered(adj, x, pref):
    first = [y for y in pref.get(x, []) if y in adj[x]]
    return first + [y for y in adj[x] if y not in first]


def _cycle_on(mask, start, adj, pref):
    """Hamiltonian cycle of the vertices in ``mask`` from ``start``, printed order first."""
    path = [start]

    def rec(cur, seen):
        if seen == mask:
            return start in adj[cur] and len(path) >= 3
        for y in _ordered(adj, cur, pref):
            if mask >> y & 1 and not seen >> y & 1:
                path.append(y)
                if rec(y, seen | (1 << y)):
                    return True
                path.pop()
        return False

    return list(path) if rec(start, 1 << start) else None


def _search_row(ell, tgt, pref1, pref2, keep_c1=None):
    verts, index, adj = _graph()
    full = (1 << 24) - 1
    su = index[U]
    banned = 0
    for t in tgt:
        banned |= 1 << index[t]
    start2 = index[tgt[0]]

    def second(c1_mask):
        return _cycle_on(full & ~c1_mask, start2, adj, pref2)

    if keep_c1 is not None:
        mask = 0
        for p in keep_c1:
            mask |= 1 << index[p]
        c2 = second(mask)
        if c2 is not None:
            return list(keep_c1), [verts[k] for k in c2]
    path = [su]

    def rec(cur, seen):
        if len(path) == ell:
            if su in adj[cur] and path[1] < cur:
                return second(seen)
            return None
        for y in _ordered(adj, cur, pref1):
            if banned >> y & 1 or seen >> y & 1:
                continue
            path.append(y)
            found = rec(y, seen | (1 << y))
            if found is not None:
                return found
            path.pop()
        return None

    c2 = rec(su, 1 << su)
    if c2 is None:
        raise ConstructionError(f"no cover of length {ell} for targets {tgt}")
    return [verts[k] for k in path], [verts[k] for k in c2]


def _rotate(c, x):
    k = c.index(x)
    return c[k:] + c[:k]


def repair_row(table, ell):
    """``(c1, c2, status, errata)`` for one table row; status is ``printed`` or ``repaired``."""
    tgt = targets(table)
    row = PRINTED[table][ell]
    p1, p2 = parse_cycle(row[0]), parse_cycle(row[1])
    report = check_row(table, ell, p1, p2)
    if report.ok:
        return p1, p2, "printed", []
    _, index, _ = _graph()
    keep = None
    if validate_cycle(None, p1, required_vertices=[U], forbidden_vertices=tgt).ok and len(p1) == ell:
        keep = p1
    c1, c2 = _search_row(ell, tgt, _preferences(p1, index), _preferences(p2, index), keep_c1=keep)
    first2 = p2[0] if p2[0] in c2 else c2[0]
    return c1, _rotate(c2, first2), "repaired", [f"{c}: {d}" for c, d in report.violations]


def build_document():
    """The full base-cover document embedded as ``data/base_covers.json``."""
    tables = {}
    for table in (1, 2, 3):
        rows = {}
        for ell in LENGTHS:
            c1, c2, status, errata = repair_row(table, ell)
            if not check_row(table, ell, c1, c2).ok:
                raise ConstructionError(f"table {table} row {ell} failed after repair")
            rows[str(ell)] = {
                "c1": [format_perm(p) for p in c1],
                "c2": [format_perm(p) for p in c2],
                "status": status,
                "errata": errata,
            }
        tables[str(table)] = {"targets": TARGETS[table], "rows": rows}
    generated = {}
    for v in sorted(_all4(), key=rank):
        if v == U or table_for(v) is not None:
            continue
        rows = {}
        for ell in LENGTHS:
            found = brute_force_dcc(U, v, ell)
            if found is None:
                raise ConstructionError(f"oracle found no cover for {v}, {ell}")
            rows[str(ell)] = {"c1": [format_perm(p) for p in found.c1], "c2": [format_perm(p) for p in found.c2]}
        generated[format_perm(v)] = rows
    return {"u": format_perm(U), "tables": tables, "generated": generated}


@lru_cache(maxsize=1)
def load_document():
    text = resources.files("splitstar.data").joinpath(DATA_FILE).read_text()
    return json.loads(text)


def base_lookup(u, v, ell):
    """The embedded cover ``(c1, c2)`` of S_4^2 with ``u = 1234`` on the ``ell``-cycle ``c1``."""
    u, v = tuple(u), tuple(v)
    if len(u) != 4 or len(v) != 4:
        raise NotBaseDimension("base covers exist only for n = 4")
    if u != U:
        raise ValueError("base covers are stored for u = 1234; relabel first")
    if not 3 <= ell <= 12:
        raise BadLength(f"ell={ell} outside [3, 12]")
    if v == U:
        raise SameVertex("u equals v")
    doc = load_document()
    table = table_for(v)
    if table is None:
        row = doc["generated"][format_perm(v)][str(ell)]
    else:
        row = doc["tables"][str(table)]["rows"][str(ell)]
    return [parse(t, 4) for t in row["c1"]], [parse(t, 4) for t in row["c2"]]
