"""Composition of two processes, the orthogonality test and a bounded refinement oracle."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import count
from typing import Iterable, Optional

from .errors import ExplorationLimit
from .generation import enumerate_processes
from .lts import step
from .syntax import TICK, Process, process_names

DEFAULT_STATE_CAP = 10**6

__all__ = [
    "DEFAULT_STATE_CAP",
    "RefinementVerdict",
    "SystemState",
    "enumerate_processes",
    "fresh_name",
    "orthogonal",
    "refines_bounded",
    "stuck_state",
    "system_step",
]


@dataclass(frozen=True)
class SystemState:
    left: Process
    right: Process


@dataclass(frozen=True)
class RefinementVerdict:
    holds_up_to_bound: bool
    counterexample: Optional[Process] = None
    depth: int = 0

    def __post_init__(self):
        if self.holds_up_to_bound == (self.counterexample is not None):
            raise ValueError("a counterexample is present exactly when refinement fails")

    def __bool__(self) -> bool:
        return self.holds_up_to_bound


@lru_cache(maxsize=1 << 18)
def _moves(p: Process):
    """(internal successors, {label: residuals}, can tick) for one process."""
    ts = step(p)
    by_label: dict = {}
    for mu, x in ts.labeled:
        by_label.setdefault(mu, []).append(x)
    return tuple(ts.internal), by_label, TICK in by_label


def _successors(p: Process, q: Process):
    p_int, p_lab, _ = _moves(p)
    q_int, q_lab, _ = _moves(q)
    for x in p_int:
        yield x, q
    for y in q_int:
        yield p, y
    for mu, xs in p_lab.items():
        if mu == TICK:
            continue
        ys = q_lab.get(mu.co)
        if ys:
            for x in xs:
                for y in ys:
                    yield x, y


def system_step(s: SystemState) -> frozenset[SystemState]:
    """One-step successors of ``s``: left move, right move, or synchronisation."""
    return frozenset(SystemState(x, y) for x, y in _successors(s.left, s.right))


def stuck_state(
    p: Process, q: Process, *, limit: int = DEFAULT_STATE_CAP
) -> Optional[SystemState]:
    """A reachable stable state of ``p | q`` where some side cannot tick, if any."""
    start = (p, q)
    seen = {start}
    todo = [start]
    while todo:
        x, y = todo.pop()
        stable = True
        for succ in _successors(x, y):
            stable = False
            if succ not in seen:
                if len(seen) >= limit:
                    raise ExplorationLimit(f"more than {limit} system states")
                seen.add(succ)
                todo.append(succ)
        if stable and not (_moves(x)[2] and _moves(y)[2]):
            return SystemState(x, y)
    return None


def orthogonal(p: Process, q: Process, *, limit: int = DEFAULT_STATE_CAP) -> bool:
    """True iff every stable state reachable from ``p | q`` has both sides able to tick."""
    return stuck_state(p, q, limit=limit) is None


def fresh_name(used: Iterable[str]) -> str:
    """First of a, b, ..., z, n0, n1, ... not in ``used``."""
    used = set(used)
    for c in "abcdefghijklmnopqrstuvwxyz":
        if c not in used:
            return c
    for i in count():
        if f"n{i}" not in used:
            return f"n{i}"


def refines_bounded(
    p: Process, q: Process, depth: int = 3, *, limit: int = DEFAULT_STATE_CAP
) -> RefinementVerdict:
    """Search for a test passed by ``p`` but failed by ``q`` among enumerated processes.

    The test alphabet is every name of ``p`` and ``q`` plus one fresh name.  A
    failing verdict carries a re-checkable witness; a holding verdict is only
    evidence up to ``depth``.
    """
    names = process_names(p) | process_names(q)
    alphabet = names | {fresh_name(names)}
    for r in enumerate_processes(alphabet, depth):
        if orthogonal(p, r, limit=limit) and not orthogonal(q, r, limit=limit):
            return RefinementVerdict(False, r, depth)
    return RefinementVerdict(True, None, depth)
