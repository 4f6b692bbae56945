"""Operational semantics of processes.

Two relations: internal moves ``P -> P'`` and labelled moves ``P -mu-> P'``.
An output inside an external choice preempts the other branch with an
internal move.  The weak closure, may/must observables, convergence and the
continuation ``P(mu)`` are built on top.

All functions are pure; results are memoised per term.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce

from .errors import DomainError, NoTransition
from .syntax import (
    SUCCESS,
    TICK,
    Action,
    Deadlock,
    ExternalChoice,
    InternalChoice,
    Label,
    Prefix,
    Process,
    Success,
    render_process,
)

_CACHE = 1 << 18


@dataclass(frozen=True)
class TransitionSet:
    internal: frozenset[Process]
    labeled: frozenset[tuple[Label, Process]]


_EMPTY = TransitionSet(frozenset(), frozenset())


@lru_cache(maxsize=_CACHE)
def step(p: Process) -> TransitionSet:
    """All one-step successors of ``p``."""
    match p:
        case Deadlock():
            return _EMPTY
        case Success():
            return TransitionSet(frozenset(), frozenset({(TICK, SUCCESS)}))
        case Prefix(act, cont):
            return TransitionSet(frozenset(), frozenset({(act, cont)}))
        case InternalChoice(l, r):
            return TransitionSet(frozenset((l, r)), frozenset())
        case ExternalChoice(l, r):
            sl, sr = step(l), step(r)
            internal = {ExternalChoice(x, r) for x in sl.internal}
            internal.update(ExternalChoice(l, x) for x in sr.internal)
            for mu, x in sl.labeled | sr.labeled:
                # output preemption
                if isinstance(mu, Action) and mu.output:
                    internal.add(Prefix(mu, x))
            return TransitionSet(frozenset(internal), sl.labeled | sr.labeled)
    raise TypeError(f"not a process: {p!r}")


@lru_cache(maxsize=_CACHE)
def weak_closure(p: Process) -> frozenset[Process]:
    """Terms reachable from ``p`` by zero or more internal moves."""
    seen = {p}
    todo = [p]
    while todo:
        for q in step(todo.pop()).internal:
            if q not in seen:
                seen.add(q)
                todo.append(q)
    return frozenset(seen)


@lru_cache(maxsize=_CACHE)
def weak_labels(p: Process) -> frozenset[Label]:
    """``init(P)``: labels performable after some internal moves."""
    return frozenset(mu for q in weak_closure(p) for mu, _ in step(q).labeled)


@lru_cache(maxsize=_CACHE)
def stable_labels(p: Process) -> frozenset[Label]:
    """Labels offered by the stable derivatives of ``p``.

    Output labels coincide with those in :func:`weak_labels` (an output under
    ``+`` preempts to a stable prefix).  The success flag differs: ``!a + 1``
    offers it but never settles in a state that does.
    """
    return frozenset(
        mu for q in weak_closure(p) if not step(q).internal for mu, _ in step(q).labeled
    )


def _is_output_or_tick(mu: Label) -> bool:
    return mu == TICK or mu.output


def may(p: Process, mu: Label) -> bool:
    """``P`` may output ``mu`` (an output or the success flag)."""
    if not _is_output_or_tick(mu):
        raise DomainError(f"may() is defined for outputs and the success flag, not {mu}")
    return mu in weak_labels(p)


def must(p: Process, mu: Label) -> bool:
    """Every internal evolution of ``p`` can still perform ``mu``."""
    return all(mu in weak_labels(q) for q in weak_closure(p))


@lru_cache(maxsize=_CACHE)
def may_converge(p: Process) -> bool:
    return all(any(_is_output_or_tick(mu) for mu in weak_labels(q)) for q in weak_closure(p))


@lru_cache(maxsize=_CACHE)
def must_labels(p: Process) -> frozenset[Label]:
    """All ``mu`` with ``must(p, mu)``."""
    return frozenset.intersection(*(weak_labels(q) for q in weak_closure(p)))


def must_converge(p: Process) -> bool:
    return bool(must_labels(p))


@lru_cache(maxsize=_CACHE)
def residuals(p: Process, mu: Label) -> tuple[Process, ...]:
    """Distinct ``Q`` with ``p ==> -mu-> Q``, sorted by printed form."""
    found = {x for q in weak_closure(p) for nu, x in step(q).labeled if nu == mu}
    return tuple(sorted(found, key=render_process))


def continuation(p: Process, mu: Label) -> Process:
    """Internal choice of every residual of ``p`` after ``mu``."""
    if mu == TICK:
        raise NoTransition("the continuation after the success flag is not defined")
    found = residuals(p, mu)
    if not found:
        raise NoTransition(f"{render_process(p)} cannot perform {mu}")
    return reduce(InternalChoice, found)
