"""Bounded, duplicate-free enumeration of process and session type terms.

Depth counts nesting of prefixes and of choice chains.  Leaves (``0`` and
``1``, or ``Bot``, ``Top`` and ``end`` for types) have depth 0, ``a.P`` has
depth ``1 + depth(P)``, and a chain ``X1 op X2 op ... op Xk`` of
k <= ``width`` operands has depth ``1 + max depth(Xi)``.

Chains are canonical: operands are pairwise distinct, none is itself an
``op``-chain, they are sorted by printed form, and the chain is
right-associated.  Terms are emitted level by level (depth 0 first) and
each term exactly once.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterable, Iterator, TypeVar

from .errors import LimitError
from .syntax import (
    BOTTOM,
    DEADLOCK,
    END,
    SUCCESS,
    TOP,
    Action,
    ExternalChoice,
    Intersection,
    InternalChoice,
    Prefix,
    TypePrefix,
    Union,
    render_process,
    render_type,
)

MAX_DEPTH = 4
MAX_WIDTH = 3

T = TypeVar("T")


def actions_over(alphabet: Iterable[str]) -> list[Action]:
    names = sorted(set(alphabet))
    if not names:
        raise ValueError("alphabet must be non-empty")
    return [Action(n, out) for n in names for out in (False, True)]


def _chain(op, operands):
    result = operands[-1]
    for x in reversed(operands[:-1]):
        result = op(x, result)
    return result


def _layers(
    leaves: list[T],
    actions: list[Action],
    prefix: Callable[[Action, T], T],
    ops: tuple[type, ...],
    render: Callable[[T], str],
    depth: int,
    width: int,
) -> Iterator[T]:
    yield from leaves
    previous: list[T] = []  # all terms of depth < d-1
    newest: list[T] = list(leaves)  # terms of depth exactly d-1
    for d in range(1, depth + 1):
        last = d == depth
        fresh: list[T] = []

        def emit(term):
            if not last:
                fresh.append(term)
            return term

        for act in actions:
            for x in newest:
                yield emit(prefix(act, x))
        newest_ids = {id(x) for x in newest}
        for op in ops:
            pool = sorted((x for x in previous + newest if not isinstance(x, op)), key=render)
            for k in range(2, width + 1):
                for combo in combinations(pool, k):
                    if any(id(x) in newest_ids for x in combo):
                        yield emit(_chain(op, combo))
        previous += newest
        newest = fresh


def _check_caps(depth: int, width: int, max_depth: int) -> None:
    if depth < 0 or width < 2:
        raise ValueError("depth must be >= 0 and width >= 2")
    if depth > max_depth:
        raise LimitError(f"depth {depth} exceeds the cap {max_depth}")
    if width > MAX_WIDTH:
        raise LimitError(f"width {width} exceeds the cap {MAX_WIDTH}")


def enumerate_processes(
    alphabet: Iterable[str], depth: int, *, width: int = 2, max_depth: int = MAX_DEPTH
) -> Iterator:
    """Every canonical process over ``alphabet`` of depth <= ``depth``."""
    _check_caps(depth, width, max_depth)
    return _layers(
        [DEADLOCK, SUCCESS],
        actions_over(alphabet),
        Prefix,
        (InternalChoice, ExternalChoice),
        render_process,
        depth,
        width,
    )


def enumerate_types(
    alphabet: Iterable[str], depth: int, *, width: int = 2, max_depth: int = MAX_DEPTH
) -> Iterator:
    """Every canonical session type over ``alphabet`` of depth <= ``depth``."""
    _check_caps(depth, width, max_depth)
    return _layers(
        [BOTTOM, TOP, END],
        actions_over(alphabet),
        TypePrefix,
        (Intersection, Union),
        render_type,
        depth,
        width,
    )
