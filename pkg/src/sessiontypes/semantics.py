"""Syntactic duality and the decidable client-membership test ``P ∈ ⟦T⟧``.

``⟦T⟧`` is an infinite set of processes; it is never built.  Membership is
decided on normal forms by structural recursion on the type, reading off
the observables and continuations of the process.
"""

from __future__ import annotations

from functools import lru_cache

from .lts import continuation, may_converge, must_labels, stable_labels, weak_labels
from .normalize import IU, NormalForm, normalize
from .syntax import (
    BOTTOM,
    TICK,
    TOP,
    Action,
    Bottom,
    End,
    Intersection,
    Process,
    SessionType,
    Top,
    TypePrefix,
    Union,
)


def dual(t: SessionType) -> SessionType:
    """Flip every polarity, swap ``Bot``/``Top`` and ``&``/``|``; ``end`` is fixed."""
    match t:
        case Bottom():
            return TOP
        case Top():
            return BOTTOM
        case End():
            return t
        case TypePrefix(act, cont):
            return TypePrefix(act.co, dual(cont))
        case Intersection(l, r):
            return Union(dual(l), dual(r))
        case Union(l, r):
            return Intersection(dual(l), dual(r))
    raise TypeError(f"not a session type: {t!r}")


@lru_cache(maxsize=1 << 20)
def member(p: Process, n: NormalForm) -> bool:
    """Is ``p`` a client of a channel typed ``n``?

    Union of inputs over A: ``p`` may converge, every output it can settle on
    is in co(A) (the success flag counting for ``end``), and every continuation
    after a possible output is a client of the matching branch.

    Intersection of outputs over A: ``p`` must converge, guarantees every
    label of A, and every continuation after a label of A is a client of the
    matching branch.

    The success flag is read on stable derivatives only: ``!a + 1`` preempts
    to ``!a`` and is a client of ``a.end``.
    """
    if n.is_bottom:
        return False
    if n.is_top:
        return True
    branches = n.as_dict()
    if n.shape is IU:
        if not may_converge(p):
            return False
        for mu in stable_labels(p):
            if mu == TICK:
                if not n.has_end:
                    return False
            elif mu.output and mu.name not in branches:
                return False
        for mu in weak_labels(p):
            if mu != TICK and mu.output:
                if not member(continuation(p, mu), branches[mu.name]):
                    return False
        return True
    guaranteed = must_labels(p)
    if not guaranteed:
        return False
    if n.has_end and TICK not in guaranteed:
        return False
    for name, cont in n.branches:
        act = Action(name, False)
        if act not in guaranteed or not member(continuation(p, act), cont):
            return False
    return True


def member_type(p: Process, t: SessionType) -> bool:
    return member(p, normalize(t))
