"""Abstract syntax, parser and printer for processes, session types and global types.

Concrete syntax (ASCII)::

    process  0  1  a.P  !a.P  P (+) Q  P + Q        prefix > + > (+)
    type     Bot  Top  end  a.T  !a.T  T & S  T | S   prefix > & > |
    global   A->B:a; G   G [] G   end                 ; > []

All binary operators are left-associative.  A trailing ``.1`` (processes) or
``.end`` (types) may be omitted after a prefix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from .errors import ParseError, RoleError

NAME_RE = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")
ROLE_RE = re.compile(r"[A-Z][a-zA-Z0-9_]*\Z")
KEYWORDS = frozenset({"end", "Bot", "Top"})


# ---------------------------------------------------------------------------
# actions and labels


@dataclass(frozen=True, order=True)
class Action:
    """An input ``a`` or an output ``!a`` on the action name ``name``."""

    name: str
    output: bool = False

    def __post_init__(self):
        if not NAME_RE.match(self.name) or self.name in KEYWORDS:
            raise ValueError(f"invalid action name {self.name!r}")

    @property
    def co(self) -> Action:
        return Action(self.name, not self.output)

    def __str__(self) -> str:
        return "!" + self.name if self.output else self.name


@dataclass(frozen=True)
class Tick:
    """The success flag; it is its own co-label."""

    @property
    def co(self) -> Tick:
        return self

    def __str__(self) -> str:
        return "✓"


TICK = Tick()
Label = Action | Tick


def inp(name: str) -> Action:
    return Action(name, False)


def out(name: str) -> Action:
    return Action(name, True)


# ---------------------------------------------------------------------------
# processes


class Process:
    """Finite process term."""

    __slots__ = ()

    def __str__(self) -> str:
        return render_process(self)


@dataclass(frozen=True, repr=False)
class Deadlock(Process):
    def __repr__(self) -> str:
        return "Deadlock()"


@dataclass(frozen=True, repr=False)
class Success(Process):
    def __repr__(self) -> str:
        return "Success()"


@dataclass(frozen=True)
class Prefix(Process):
    action: Action
    cont: Process


@dataclass(frozen=True)
class InternalChoice(Process):
    left: Process
    right: Process


@dataclass(frozen=True)
class ExternalChoice(Process):
    left: Process
    right: Process


DEADLOCK = Deadlock()
SUCCESS = Success()


def process_size(p: Process) -> int:
    """Node count; every internal transition strictly decreases it."""
    match p:
        case Prefix(_, cont):
            return 1 + process_size(cont)
        case InternalChoice(l, r) | ExternalChoice(l, r):
            return 1 + process_size(l) + process_size(r)
        case _:
            return 1


def process_names(p: Process) -> frozenset[str]:
    match p:
        case Prefix(act, cont):
            return process_names(cont) | {act.name}
        case InternalChoice(l, r) | ExternalChoice(l, r):
            return process_names(l) | process_names(r)
        case _:
            return frozenset()


# ---------------------------------------------------------------------------
# session types


class SessionType:
    """Finite session type term."""

    __slots__ = ()

    def __str__(self) -> str:
        return render_type(self)


@dataclass(frozen=True, repr=False)
class Bottom(SessionType):
    def __repr__(self) -> str:
        return "Bottom()"


@dataclass(frozen=True, repr=False)
class Top(SessionType):
    def __repr__(self) -> str:
        return "Top()"


@dataclass(frozen=True, repr=False)
class End(SessionType):
    def __repr__(self) -> str:
        return "End()"


@dataclass(frozen=True)
class TypePrefix(SessionType):
    action: Action
    cont: SessionType


@dataclass(frozen=True)
class Intersection(SessionType):
    left: SessionType
    right: SessionType


@dataclass(frozen=True)
class Union(SessionType):
    left: SessionType
    right: SessionType


BOTTOM = Bottom()
TOP = Top()
END = End()


def type_names(t: SessionType) -> frozenset[str]:
    match t:
        case TypePrefix(act, cont):
            return type_names(cont) | {act.name}
        case Intersection(l, r) | Union(l, r):
            return type_names(l) | type_names(r)
        case _:
            return frozenset()


def type_depth(t: SessionType) -> int:
    """Maximum number of nested actions."""
    match t:
        case TypePrefix(_, cont):
            return 1 + type_depth(cont)
        case Intersection(l, r) | Union(l, r):
            return max(type_depth(l), type_depth(r))
        case _:
            return 0


def meet_all(types, empty: SessionType = TOP) -> SessionType:
    """Left-nested intersection; ``empty`` for no operands."""
    result = None
    for t in types:
        result = t if result is None else Intersection(result, t)
    return empty if result is None else result


def join_all(types, empty: SessionType = BOTTOM) -> SessionType:
    """Left-nested union; ``empty`` for no operands."""
    result = None
    for t in types:
        result = t if result is None else Union(result, t)
    return empty if result is None else result


# ---------------------------------------------------------------------------
# global types


class GlobalType:
    __slots__ = ()

    def __str__(self) -> str:
        return render_global(self)


@dataclass(frozen=True, repr=False)
class GEnd(GlobalType):
    def __repr__(self) -> str:
        return "GEnd()"


@dataclass(frozen=True)
class GMessage(GlobalType):
    sender: str
    receiver: str
    label: str
    cont: GlobalType


@dataclass(frozen=True)
class GChoice(GlobalType):
    left: GlobalType
    right: GlobalType


GEND = GEnd()


def global_roles(g: GlobalType) -> frozenset[str]:
    match g:
        case GMessage(s, r, _, cont):
            return global_roles(cont) | {s, r}
        case GChoice(l, r):
            return global_roles(l) | global_roles(r)
        case _:
            return frozenset()


def validate_global(g: GlobalType) -> GlobalType:
    """Raise :class:`RoleError` unless ``g`` mentions at most two roles and no self-message."""
    for node in _global_nodes(g):
        if isinstance(node, GMessage):
            if not ROLE_RE.match(node.sender) or not ROLE_RE.match(node.receiver):
                raise RoleError(f"invalid role name in {node.sender}->{node.receiver}")
            if node.sender == node.receiver:
                raise RoleError(f"role {node.sender} sends to itself")
    roles = global_roles(g)
    if len(roles) > 2:
        raise RoleError(f"more than two roles: {', '.join(sorted(roles))}")
    return g


def _global_nodes(g: GlobalType) -> Iterator[GlobalType]:
    stack = [g]
    while stack:
        node = stack.pop()
        yield node
        match node:
            case GMessage(_, _, _, cont):
                stack.append(cont)
            case GChoice(l, r):
                stack.extend((l, r))


# ---------------------------------------------------------------------------
# tokenizer and parser

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<sym>\(\+\)|->|\[\]|[!.+&|():;])|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<num>[0-9]+))"
)
_WS_RE = re.compile(r"\s*")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        pos = _WS_RE.match(text, pos).end()
        if pos == len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(pos, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def at(self, value: str) -> bool:
        kind, text, _ = self.tok
        return kind in ("sym", "ident", "num") and text == value

    def advance(self) -> tuple[str, str, int]:
        tok = self.tok
        self.i += 1
        return tok

    def expect(self, value: str) -> None:
        if not self.at(value):
            self.fail(f"expected {value!r}")
        self.advance()

    def fail(self, message: str):
        kind, text, pos = self.tok
        found = "end of input" if kind == "eof" else repr(text)
        raise ParseError(pos, f"{message}, found {found}")

    def finish(self) -> None:
        if self.tok[0] != "eof":
            self.fail("unexpected trailing input")

    def at_action(self) -> bool:
        kind, text, _ = self.tok
        if self.at("!"):
            return True
        return kind == "ident" and bool(NAME_RE.match(text)) and text not in KEYWORDS

    def action(self) -> Action:
        output = False
        if self.at("!"):
            self.advance()
            output = True
        kind, text, _ = self.tok
        if kind != "ident" or not NAME_RE.match(text) or text in KEYWORDS:
            self.fail("expected an action name")
        self.advance()
        return Action(text, output)

    # processes ------------------------------------------------------------

    def process(self) -> Process:
        left = self.echoice()
        while self.at("(+)"):
            self.advance()
            left = InternalChoice(left, self.echoice())
        return left

    def echoice(self) -> Process:
        left = self.ppfx()
        while self.at("+"):
            self.advance()
            left = ExternalChoice(left, self.ppfx())
        return left

    def ppfx(self) -> Process:
        if self.at_action():
            act = self.action()
            if self.at("."):
                self.advance()
                return Prefix(act, self.ppfx())
            return Prefix(act, SUCCESS)
        if self.at("0"):
            self.advance()
            return DEADLOCK
        if self.at("1"):
            self.advance()
            return SUCCESS
        if self.at("("):
            self.advance()
            p = self.process()
            self.expect(")")
            return p
        self.fail("expected a process")

    # types ----------------------------------------------------------------

    def stype(self) -> SessionType:
        left = self.tinter()
        while self.at("|"):
            self.advance()
            left = Union(left, self.tinter())
        return left

    def tinter(self) -> SessionType:
        left = self.tpfx()
        while self.at("&"):
            self.advance()
            left = Intersection(left, self.tpfx())
        return left

    def tpfx(self) -> SessionType:
        if self.at_action():
            act = self.action()
            if self.at("."):
                self.advance()
                return TypePrefix(act, self.tpfx())
            return TypePrefix(act, END)
        for word, value in (("Bot", BOTTOM), ("Top", TOP), ("end", END)):
            if self.at(word):
                self.advance()
                return value
        if self.at("("):
            self.advance()
            t = self.stype()
            self.expect(")")
            return t
        self.fail("expected a session type")

    # global types ---------------------------------------------------------

    def gtype(self) -> GlobalType:
        left = self.gseq()
        while self.at("[]"):
            self.advance()
            left = GChoice(left, self.gseq())
        return left

    def gseq(self) -> GlobalType:
        if self.at("end"):
            self.advance()
            return GEND
        if self.at("("):
            self.advance()
            g = self.gtype()
            self.expect(")")
            return g
        sender = self.role()
        self.expect("->")
        receiver = self.role()
        self.expect(":")
        kind, text, _ = self.tok
        if kind != "ident" or not NAME_RE.match(text) or text in KEYWORDS:
            self.fail("expected a message label")
        self.advance()
        self.expect(";")
        return GMessage(sender, receiver, text, self.gseq())

    def role(self) -> str:
        kind, text, _ = self.tok
        if kind != "ident" or not ROLE_RE.match(text) or text in KEYWORDS:
            self.fail("expected a role name")
        self.advance()
        return text


def parse_process(text: str) -> Process:
    parser = _Parser(text)
    p = parser.process()
    parser.finish()
    return p


def parse_type(text: str) -> SessionType:
    parser = _Parser(text)
    t = parser.stype()
    parser.finish()
    return t


def parse_global(text: str) -> GlobalType:
    parser = _Parser(text)
    g = parser.gtype()
    parser.finish()
    return validate_global(g)


# ---------------------------------------------------------------------------
# printers


def _wrap(text: str, prec: int, min_prec: int) -> str:
    return f"({text})" if prec < min_prec else text


def _render_p(p: Process, min_prec: int) -> str:
    match p:
        case Deadlock():
            return "0"
        case Success():
            return "1"
        case Prefix(act, cont):
            if isinstance(cont, Success):
                return str(act)
            return f"{act}.{_render_p(cont, 3)}"
        case InternalChoice(l, r):
            return _wrap(f"{_render_p(l, 1)} (+) {_render_p(r, 2)}", 1, min_prec)
        case ExternalChoice(l, r):
            return _wrap(f"{_render_p(l, 2)} + {_render_p(r, 3)}", 2, min_prec)
    raise TypeError(f"not a process: {p!r}")


def _render_t(t: SessionType, min_prec: int) -> str:
    match t:
        case Bottom():
            return "Bot"
        case Top():
            return "Top"
        case End():
            return "end"
        case TypePrefix(act, cont):
            return f"{act}.{_render_t(cont, 3)}"
        case Union(l, r):
            return _wrap(f"{_render_t(l, 1)} | {_render_t(r, 2)}", 1, min_prec)
        case Intersection(l, r):
            return _wrap(f"{_render_t(l, 2)} & {_render_t(r, 3)}", 2, min_prec)
    raise TypeError(f"not a session type: {t!r}")


def _render_g(g: GlobalType, min_prec: int) -> str:
    match g:
        case GEnd():
            return "end"
        case GMessage(s, r, label, cont):
            return f"{s}->{r}:{label}; {_render_g(cont, 2)}"
        case GChoice(l, r):
            return _wrap(f"{_render_g(l, 1)} [] {_render_g(r, 2)}", 1, min_prec)
    raise TypeError(f"not a global type: {g!r}")


def render_process(p: Process) -> str:
    return _render_p(p, 0)


def render_type(t: SessionType) -> str:
    return _render_t(t, 0)


def render_global(g: GlobalType) -> str:
    return _render_g(g, 0)
