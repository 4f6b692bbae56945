"""Projection of a two-party global type onto one role.

The sender of the first message of a choice is the one who chooses: its
projection is the meet of the branch projections.  The other role cannot tell
the branches apart beforehand and gets their join.
"""

from __future__ import annotations

from .errors import ProjectionError, RoleError
from .normalize import END_NF, NormalForm, embed, join_nf, meet_nf, prefix_nf
from .syntax import (
    ROLE_RE,
    Action,
    GChoice,
    GEnd,
    GlobalType,
    GMessage,
    SessionType,
    global_roles,
    render_global,
    validate_global,
)


def _first_sender(g: GlobalType) -> str:
    match g:
        case GMessage(sender, _, _, _):
            return sender
        case GChoice(l, r):
            left, right = _first_sender(l), _first_sender(r)
            if left != right:
                raise ProjectionError(
                    f"branches of a choice start with different senders ({left}, {right})"
                )
            return left
    raise ProjectionError(f"a choice branch does not start with a message: {render_global(g)}")


def _project(g: GlobalType, role: str) -> NormalForm:
    match g:
        case GEnd():
            return END_NF
        case GMessage(sender, receiver, label, cont):
            rest = _project(cont, role)
            if role == sender:
                return prefix_nf(Action(label, True), rest)
            if role == receiver:
                return prefix_nf(Action(label, False), rest)
            return rest
        case GChoice(l, r):
            combine = meet_nf if _first_sender(g) == role else join_nf
            return combine(_project(l, role), _project(r, role))
    raise TypeError(f"not a global type: {g!r}")


def project_nf(g: GlobalType, role: str) -> NormalForm:
    validate_global(g)
    if not ROLE_RE.match(role):
        raise RoleError(f"not a role name: {role!r}")
    roles = global_roles(g)
    if roles and role not in roles:
        raise ProjectionError(f"role {role} does not occur in the global type")
    n = _project(g, role)
    if not n.viable:
        raise ProjectionError(
            f"projection on {role} is {'Bot' if n.is_bottom else 'Top'}: not implementable"
        )
    return n


def project(g: GlobalType, role: str) -> SessionType:
    """Session type of ``role`` in ``g``, in normal form."""
    return embed(project_nf(g, role))
