"""Random instances of the type simplification laws, both orientations and their duals.

Each law maps a seeded ``random.Random`` and a pool of viable types to one
instance ``(lhs, rhs)``.  Branch labels range over ``NAMES``.
"""

from __future__ import annotations

import random
from typing import Callable

from sessiontypes import (
    BOTTOM,
    END,
    TOP,
    Intersection,
    TypePrefix,
    Union,
    inp,
    out,
)
from sessiontypes.syntax import join_all, meet_all

NAMES = ("a", "b")

Instance = tuple[object, object]


def _action(rng):
    return (inp if rng.random() < 0.5 else out)(rng.choice(NAMES))


def _subset(rng, nonempty=True):
    while True:
        picked = [n for n in NAMES if rng.random() < 0.6]
        if picked or not nonempty:
            return picked


def _branches(rng, pool, nonempty=True):
    return {n: rng.choice(pool) for n in _subset(rng, nonempty)}


def inputs(branches: dict, end: bool = False):
    """The union of ``a.T_a`` over the branches, with ``end`` when asked."""
    terms = [TypePrefix(inp(n), t) for n, t in sorted(branches.items())]
    return join_all(terms + [END] if end else terms)


def outputs(branches: dict, end: bool = False):
    """The intersection of ``!a.T_a`` over the branches, with ``end`` when asked."""
    terms = [TypePrefix(out(n), t) for n, t in sorted(branches.items())]
    return meet_all(terms + [END] if end else terms)


def prefix_bottom(rng, pool):
    return TypePrefix(_action(rng), BOTTOM), BOTTOM


def bottom_meet(rng, pool):
    return Intersection(BOTTOM, rng.choice(pool)), BOTTOM


def bottom_meet_swapped(rng, pool):
    return Intersection(rng.choice(pool), BOTTOM), BOTTOM


def top_meet(rng, pool):
    t = rng.choice(pool)
    return Intersection(TOP, t), t


def top_meet_swapped(rng, pool):
    t = rng.choice(pool)
    return Intersection(t, TOP), t


def meet_prefixes(rng, pool):
    act, t, s = _action(rng), rng.choice(pool), rng.choice(pool)
    return Intersection(TypePrefix(act, t), TypePrefix(act, s)), TypePrefix(act, Intersection(t, s))


def inputs_meet_end(rng, pool):
    return Intersection(inputs(_branches(rng, pool)), END), BOTTOM


def inputs_meet_end_swapped(rng, pool):
    return Intersection(END, inputs(_branches(rng, pool))), BOTTOM


def inputs_meet_output(rng, pool):
    send = TypePrefix(out(rng.choice(NAMES)), rng.choice(pool))
    return Intersection(inputs(_branches(rng, pool)), send), BOTTOM


def inputs_end_meet_output(rng, pool):
    send = TypePrefix(out(rng.choice(NAMES)), rng.choice(pool))
    lhs = Intersection(inputs(_branches(rng, pool, nonempty=False), end=True), send)
    return lhs, Intersection(send, END)


def inputs_meet_inputs(rng, pool):
    ta, tb = _branches(rng, pool, False), _branches(rng, pool, False)
    ea, eb = rng.random() < 0.5, rng.random() < 0.5
    shared = {n: Intersection(ta[n], tb[n]) for n in ta.keys() & tb.keys()}
    return Intersection(inputs(ta, ea), inputs(tb, eb)), inputs(shared, ea and eb)


def prefix_top(rng, pool):
    return TypePrefix(_action(rng), TOP), TOP


def top_join(rng, pool):
    return Union(TOP, rng.choice(pool)), TOP


def bottom_join(rng, pool):
    t = rng.choice(pool)
    return Union(BOTTOM, t), t


def join_prefixes(rng, pool):
    act, t, s = _action(rng), rng.choice(pool), rng.choice(pool)
    return Union(TypePrefix(act, t), TypePrefix(act, s)), TypePrefix(act, Union(t, s))


def outputs_join_end(rng, pool):
    return Union(outputs(_branches(rng, pool)), END), TOP


def outputs_join_input(rng, pool):
    recv = TypePrefix(inp(rng.choice(NAMES)), rng.choice(pool))
    return Union(outputs(_branches(rng, pool)), recv), TOP


def outputs_end_join_input(rng, pool):
    recv = TypePrefix(inp(rng.choice(NAMES)), rng.choice(pool))
    lhs = Union(outputs(_branches(rng, pool, nonempty=False), end=True), recv)
    return lhs, Union(recv, END)


def outputs_join_outputs(rng, pool):
    ta, tb = _branches(rng, pool, False), _branches(rng, pool, False)
    ea, eb = rng.random() < 0.5, rng.random() < 0.5
    shared = {n: Union(ta[n], tb[n]) for n in ta.keys() & tb.keys()}
    return Union(outputs(ta, ea), outputs(tb, eb)), outputs(shared, ea and eb)


def outputs_meet_outputs(rng, pool):
    """Meet of two output intersections: keep every label, meet shared ones."""
    ta, tb = _branches(rng, pool, False), _branches(rng, pool, False)
    ea, eb = rng.random() < 0.5, rng.random() < 0.5
    merged = {**ta, **tb}
    for n in ta.keys() & tb.keys():
        merged[n] = Intersection(ta[n], tb[n])
    return Intersection(outputs(ta, ea), outputs(tb, eb)), outputs(merged, ea or eb)


def inputs_join_inputs(rng, pool):
    """Join of two input unions: keep every label, join shared ones."""
    ta, tb = _branches(rng, pool, False), _branches(rng, pool, False)
    ea, eb = rng.random() < 0.5, rng.random() < 0.5
    merged = {**ta, **tb}
    for n in ta.keys() & tb.keys():
        merged[n] = Union(ta[n], tb[n])
    return Union(inputs(ta, ea), inputs(tb, eb)), inputs(merged, ea or eb)


LAWS: dict[str, Callable[[random.Random, list], Instance]] = {
    "prefix absorbs Bot": prefix_bottom,
    "Bot absorbs meet": bottom_meet,
    "Bot absorbs meet, swapped": bottom_meet_swapped,
    "Top is neutral for meet": top_meet,
    "Top is neutral for meet, swapped": top_meet_swapped,
    "meet factors prefixes": meet_prefixes,
    "inputs meet end": inputs_meet_end,
    "inputs meet end, swapped": inputs_meet_end_swapped,
    "inputs meet output": inputs_meet_output,
    "inputs or end meet output": inputs_end_meet_output,
    "inputs meet inputs": inputs_meet_inputs,
    "prefix absorbs Top": prefix_top,
    "Top absorbs join": top_join,
    "Bot is neutral for join": bottom_join,
    "join factors prefixes": join_prefixes,
    "outputs join end": outputs_join_end,
    "outputs join input": outputs_join_input,
    "outputs and end join input": outputs_end_join_input,
    "outputs join outputs": outputs_join_outputs,
    "outputs meet outputs": outputs_meet_outputs,
    "inputs join inputs": inputs_join_inputs,
}


def instances(law: str, pool: list, count: int = 10, seed: int = 0) -> list[Instance]:
    rng = random.Random(f"{law}/{seed}")
    return [LAWS[law](rng, pool) for _ in range(count)]
