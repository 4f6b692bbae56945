"""Checking a process against a session type.

``check`` infers the canonical type of a process, one clause per typing rule
(nil, end, send, receive, choice), and closes with a single subsumption
step.  Branches of a receive guarded by the same name, and the two sides of
an internal choice, must share one type; the canonical type uses their meet,
which every branch reaches by subsumption.
"""

from __future__ import annotations

from .errors import Untypeable
from .subtype import subtype
from .syntax import (
    BOTTOM,
    END,
    Action,
    Deadlock,
    ExternalChoice,
    InternalChoice,
    Intersection,
    Prefix,
    Process,
    SessionType,
    Success,
    TypePrefix,
    join_all,
    meet_all,
    render_process,
)


def _summands(p: Process) -> list[Process]:
    if isinstance(p, ExternalChoice):
        return _summands(p.left) + _summands(p.right)
    return [p]


def canonical_type(p: Process) -> SessionType:
    """A type ``T`` with a derivation of ``T ⊢ p``.

    Raises :class:`Untypeable` when an external choice has a summand that is
    not an input prefix.
    """
    match p:
        case Deadlock():
            return BOTTOM
        case Success():
            return END
        case Prefix(act, cont) if act.output:
            return TypePrefix(act, canonical_type(cont))
        case InternalChoice(l, r):
            return Intersection(canonical_type(l), canonical_type(r))
        case Prefix() | ExternalChoice():
            groups: dict[str, list[SessionType]] = {}
            for s in _summands(p):
                if not isinstance(s, Prefix) or s.action.output:
                    raise Untypeable(
                        f"external choice with a non-input summand: {render_process(s)}"
                    )
                groups.setdefault(s.action.name, []).append(canonical_type(s.cont))
            return join_all(
                TypePrefix(Action(name), meet_all(conts))
                for name, conts in sorted(groups.items())
            )
    raise TypeError(f"not a process: {p!r}")


def check(t: SessionType, p: Process) -> bool:
    """Is ``t ⊢ p`` derivable?"""
    try:
        inferred = canonical_type(p)
    except Untypeable:
        return False
    return subtype(t, inferred)


def typeable(p: Process) -> bool:
    try:
        canonical_type(p)
    except Untypeable:
        return False
    return True
