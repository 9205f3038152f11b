"""Permutations of ``[1..n]`` stored as plain tuples.

A permutation ``p`` is the tuple ``(p(1), ..., p(n))``: position ``j`` holds the
symbol ``p[j-1]``.  Tuples are hashable and immutable, which is what the
constructions need for sets, dict keys and memo tables.

Composition convention: ``compose(a, b)`` applies ``b`` first, then ``a``, i.e.
``compose(a, b)[j] = a(b(j))``.  With this convention

* ``compose(sigma, u)`` relabels the *symbols* of ``u`` through ``sigma``;
* ``compose(u, t)`` permutes the *positions* of ``u``; ``compose(u, (2,1,3,..))``
  is the vertex written ``u o (1,2)``.
"""

from __future__ import annotations

from math import factorial

from .errors import BadLength, BadToken, DimensionMismatch, NotABijection, OutOfRange

Permutation = tuple  # tuple[int, ...], a bijection on 1..n

__all__ = [
    "Permutation",
    "identity",
    "reverse_identity",
    "is_permutation",
    "check",
    "parse",
    "format_perm",
    "rank",
    "unrank",
    "compose",
    "inverse",
    "transposition",
    "all_permutations",
]


def identity(n):
    return tuple(range(1, n + 1))


def reverse_identity(n):
    """``n (n-1) ... 2 1``."""
    return tuple(range(n, 0, -1))


def is_permutation(p):
    n = len(p)
    return n >= 1 and sorted(p) == list(range(1, n + 1))


def check(p, n=None):
    """Return ``tuple(p)`` after checking it is a bijection on ``[1..n]``."""
    p = tuple(p)
    if n is not None and len(p) != n:
        raise BadLength(f"expected {n} symbols, got {len(p)}")
    if not all(isinstance(x, int) for x in p):
        raise BadToken(f"non-integer symbol in {p!r}")
    if not is_permutation(p):
        raise NotABijection(f"{p!r} is not a permutation of 1..{len(p)}")
    return p


def parse(text, n):
    """Parse the textual form of a permutation of ``[1..n]``.

    For ``n <= 9`` the text is ``n`` digit characters (``"4132"``); for
    ``n >= 10`` it is comma separated (``"10,1,2,..."``).
    """
    text = text.strip()
    if n <= 9:
        if "," in text:
            tokens = [t.strip() for t in text.split(",")]
        else:
            tokens = list(text)
    else:
        tokens = [t.strip() for t in text.split(",")]
    if len(tokens) != n:
        raise BadLength(f"{text!r}: expected {n} symbols, got {len(tokens)}")
    symbols = []
    for tok in tokens:
        if not tok.isdigit():
            raise BadToken(f"{text!r}: bad token {tok!r}")
        symbols.append(int(tok))
    p = tuple(symbols)
    if not is_permutation(p):
        raise NotABijection(f"{text!r} is not a permutation of 1..{n}")
    return p


def format_perm(p):
    if len(p) <= 9:
        return "".join(map(str, p))
    return ",".join(map(str, p))


def rank(p):
    """Lexicographic (Lehmer) rank of ``p`` among the permutations of ``[1..n]``."""
    n = len(p)
    r = 0
    remaining = list(range(1, n + 1))
    for j, x in enumerate(p):
        idx = remaining.index(x)
        r += idx * factorial(n - 1 - j)
        del remaining[idx]
    return r


def unrank(r, n):
    """Inverse of :func:`rank`."""
    if not 0 <= r < factorial(n):
        raise OutOfRange(f"rank {r} outside [0, {n}!-1]")
    remaining = list(range(1, n + 1))
    out = []
    for j in range(n):
        f = factorial(n - 1 - j)
        idx, r = divmod(r, f)
        out.append(remaining.pop(idx))
    return tuple(out)


def compose(a, b):
    """``a o b``: apply ``b``, then ``a``."""
    if len(a) != len(b):
        raise DimensionMismatch(f"dimensions {len(a)} and {len(b)} differ")
    return tuple(a[x - 1] for x in b)


def inverse(a):
    inv = [0] * len(a)
    for j, x in enumerate(a, 1):
        inv[x - 1] = j
    return tuple(inv)


def transposition(n, a, b):
    """The permutation of ``[1..n]`` exchanging ``a`` and ``b``."""
    t = list(range(1, n + 1))
    t[a - 1], t[b - 1] = b, a
    return tuple(t)


def all_permutations(n):
    """All permutations of ``[1..n]`` in lexicographic order."""
    from itertools import permutations

    return list(permutations(range(1, n + 1)))
