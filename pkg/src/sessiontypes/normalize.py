"""Normal forms of session types, viability, meet and join.

A normal form is either a union of input-prefixed branches (optionally with
``end``) or an intersection of output-prefixed branches (optionally with
``end``), every branch continuation being viable and normal.  Branches are
keyed by action name, so equality of normal forms is plain equality.

Constants:

* ``BOTTOM_NF`` -- empty union, no ``end``
* ``TOP_NF``    -- empty intersection, no ``end``
* ``END_NF``    -- empty union with ``end``; the intersection spelling of
  ``end`` is never produced.

Normalisation works bottom-up: children first, then prefix absorption
(``α.𝟘 = 𝟘``, ``α.𝟙 = 𝟙``), then the binary tables in :func:`meet_nf` and
:func:`join_nf`, which are exact duals of each other.  No distributivity
between ``∧`` and ``∨`` is used.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .syntax import (
    BOTTOM,
    END,
    TOP,
    Action,
    Bottom,
    End,
    Intersection,
    SessionType,
    Top,
    TypePrefix,
    Union,
    join_all,
    meet_all,
    parse_type,
    render_type,
)


class Shape(enum.Enum):
    INPUT_UNION = "union"
    OUTPUT_INTERSECTION = "intersection"

    @property
    def dual(self) -> Shape:
        if self is Shape.INPUT_UNION:
            return Shape.OUTPUT_INTERSECTION
        return Shape.INPUT_UNION


IU = Shape.INPUT_UNION
OI = Shape.OUTPUT_INTERSECTION


@dataclass(frozen=True)
class NormalForm:
    shape: Shape
    branches: tuple[tuple[str, NormalForm], ...] = ()
    has_end: bool = False

    @property
    def is_bottom(self) -> bool:
        return self.shape is IU and not self.branches and not self.has_end

    @property
    def is_top(self) -> bool:
        return self.shape is OI and not self.branches and not self.has_end

    @property
    def viable(self) -> bool:
        return not (self.is_bottom or self.is_top)

    @property
    def names(self) -> frozenset[str]:
        return frozenset(name for name, _ in self.branches)

    def branch(self, name: str) -> NormalForm:
        for n, cont in self.branches:
            if n == name:
                return cont
        raise KeyError(name)

    def as_dict(self) -> dict[str, NormalForm]:
        return dict(self.branches)

    def __str__(self) -> str:
        return render_type(embed(self))


BOTTOM_NF = NormalForm(IU)
TOP_NF = NormalForm(OI)
END_NF = NormalForm(IU, (), True)


def _build(shape: Shape, branches: dict[str, NormalForm], has_end: bool) -> NormalForm:
    """Assemble a normal form, absorbing non-viable branch continuations.

    In a union a 𝟘-branch ``a.𝟘 = 𝟘`` vanishes and a 𝟙-branch makes the whole
    union 𝟙; dually for intersections.
    """
    absorbing, neutral = (TOP_NF, BOTTOM_NF) if shape is IU else (BOTTOM_NF, TOP_NF)
    kept = {}
    for name, cont in branches.items():
        if cont == absorbing:
            return absorbing
        if cont != neutral:
            kept[name] = cont
    if shape is OI and not kept and has_end:
        return END_NF
    return NormalForm(shape, tuple(sorted(kept.items())), has_end)


def prefix_nf(action: Action, cont: NormalForm) -> NormalForm:
    if not cont.viable:
        return cont
    return NormalForm(OI if action.output else IU, ((action.name, cont),), False)


def _as_shape(n: NormalForm, shape: Shape) -> bool:
    """``end`` reads as either shape."""
    return n.shape is shape or n == END_NF


def _same_shape(shape, x, y, merge_shared, keep_unshared, end_flag):
    xb, yb = x.as_dict(), y.as_dict()
    names = (xb.keys() | yb.keys()) if keep_unshared else (xb.keys() & yb.keys())
    merged = {}
    for name in names:
        if name in xb and name in yb:
            merged[name] = merge_shared(xb[name], yb[name])
        else:
            merged[name] = xb[name] if name in xb else yb[name]
    return _build(shape, merged, end_flag(x.has_end, y.has_end))


@lru_cache(maxsize=1 << 16)
def meet_nf(x: NormalForm, y: NormalForm) -> NormalForm:
    """Normal form of ``x ∧ y``."""
    if x.is_bottom or y.is_bottom:
        return BOTTOM_NF
    if x.is_top:
        return y
    if y.is_top:
        return x
    if _as_shape(x, IU) and _as_shape(y, IU):
        # clients of a server only send what it surely receives
        return _same_shape(IU, x, y, meet_nf, False, lambda p, q: p and q)
    if _as_shape(x, OI) and _as_shape(y, OI):
        return _same_shape(OI, x, y, meet_nf, True, lambda p, q: p or q)
    union, inter = (x, y) if x.shape is IU else (y, x)
    # a union without end cannot coexist with a pending output;
    # with end, only the terminating clients survive
    if union.has_end:
        return NormalForm(OI, inter.branches, True)
    return BOTTOM_NF


@lru_cache(maxsize=1 << 16)
def join_nf(x: NormalForm, y: NormalForm) -> NormalForm:
    """Normal form of ``x ∨ y``."""
    if x.is_top or y.is_top:
        return TOP_NF
    if x.is_bottom:
        return y
    if y.is_bottom:
        return x
    if _as_shape(x, OI) and _as_shape(y, OI):
        # a server unsure of the type only sends what both allow
        return _same_shape(OI, x, y, join_nf, False, lambda p, q: p and q)
    if _as_shape(x, IU) and _as_shape(y, IU):
        return _same_shape(IU, x, y, join_nf, True, lambda p, q: p or q)
    union, inter = (x, y) if x.shape is IU else (y, x)
    if inter.has_end:
        return NormalForm(IU, union.branches, True)
    return TOP_NF


@lru_cache(maxsize=1 << 16)
def normalize(t: SessionType) -> NormalForm:
    """The normal form equivalent to ``t``."""
    match t:
        case Bottom():
            return BOTTOM_NF
        case Top():
            return TOP_NF
        case End():
            return END_NF
        case TypePrefix(act, cont):
            return prefix_nf(act, normalize(cont))
        case Intersection(l, r):
            return meet_nf(normalize(l), normalize(r))
        case Union(l, r):
            return join_nf(normalize(l), normalize(r))
    raise TypeError(f"not a session type: {t!r}")


def _as_type(t) -> SessionType:
    return parse_type(t) if isinstance(t, str) else t


def viable(t: SessionType) -> bool:
    return normalize(_as_type(t)).viable


def meet(t: SessionType, s: SessionType) -> NormalForm:
    return normalize(Intersection(_as_type(t), _as_type(s)))


def join(t: SessionType, s: SessionType) -> NormalForm:
    return normalize(Union(_as_type(t), _as_type(s)))


def embed(n: NormalForm) -> SessionType:
    """Map a normal form back to a session type term (branches in name order)."""
    if n == END_NF:
        return END
    parts: list[SessionType] = [
        TypePrefix(Action(name, n.shape is OI), embed(cont)) for name, cont in n.branches
    ]
    if n.has_end:
        parts.append(END)
    if n.shape is IU:
        return join_all(parts, BOTTOM)
    return meet_all(parts, TOP)


def dual_nf(n: NormalForm) -> NormalForm:
    """Pointwise flip of shape and polarity; 𝟘 and 𝟙 swap, ``end`` is fixed."""
    if n == END_NF:
        return END_NF
    return _build(n.shape.dual, {name: dual_nf(c) for name, c in n.branches}, n.has_end)


def normal_forms(types: Iterable[SessionType]) -> dict[NormalForm, SessionType]:
    """First representative term of every distinct normal form."""
    reps: dict[NormalForm, SessionType] = {}
    for t in types:
        reps.setdefault(normalize(t), t)
    return reps
