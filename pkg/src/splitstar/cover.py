"""The result type shared by the constructor and the oracle."""

from __future__ import annotations

from dataclasses import dataclass, field

from .permutation import format_perm


@dataclass
class DccCover:
    """``c1`` holds ``u`` and has ``ell`` vertices; ``c2`` holds ``v``."""

    n: int
    u: tuple
    v: tuple
    ell: int
    c1: list
    c2: list
    trace: list = field(default_factory=list)

    @property
    def holder_of_u(self):
        return "c1"

    @property
    def holder_of_v(self):
        return "c2"

    def to_dict(self):
        return {
            "n": self.n,
            "u": format_perm(self.u),
            "v": format_perm(self.v),
            "ell": self.ell,
            "c1": [format_perm(x) for x in self.c1],
            "c2": [format_perm(x) for x in self.c2],
            "case_trace": [str(t) for t in self.trace],
        }
