"""Subtyping: a syntax-directed check on normal forms."""

from __future__ import annotations

from functools import lru_cache

from .normalize import IU, OI, NormalForm, normalize
from .syntax import SessionType


def _labels(n: NormalForm) -> frozenset[str]:
    # "✓" cannot clash with an action name
    return n.names | {"✓"} if n.has_end else n.names


@lru_cache(maxsize=1 << 18)
def subtype_nf(n1: NormalForm, n2: NormalForm) -> bool:
    if n1.is_bottom or n2.is_top:
        return True
    if n1.shape is IU and n2.shape is IU:
        if not _labels(n1) <= _labels(n2):
            return False
        return all(subtype_nf(c, n2.branch(a)) for a, c in n1.branches)
    if n1.shape is OI and n2.shape is OI:
        if not _labels(n2) <= _labels(n1):
            return False
        return all(subtype_nf(n1.branch(b), c) for b, c in n2.branches)
    if n1.shape is OI and n2.shape is IU:
        # an intersection with end fits below any union with end
        return n1.has_end and n2.has_end
    return False


def subtype(t: SessionType, s: SessionType) -> bool:
    return subtype_nf(normalize(t), normalize(s))


def equivalent(t: SessionType, s: SessionType) -> bool:
    return subtype(t, s) and subtype(s, t)
