"""Command-line front end.

Exit status: 0 when the relation holds or a value was printed, 1 when the
relation does not hold, 2 on any error.  Every argument
is an inline expression or ``@path`` to a UTF-8 file holding one.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ParseError, ProjectionError, RoleError
from .generation import enumerate_processes
from .lts import step
from .normalize import join, meet, normalize
from .orthogonality import refines_bounded, stuck_state
from .project import project
from .semantics import dual, member, member_type
from .subtype import equivalent, subtype_nf
from .syntax import (
    parse_global,
    parse_process,
    parse_type,
    render_process,
    render_type,
    type_names,
)
from .typecheck import check

WITNESS_DEPTH = 2


def _text(arg: str) -> str:
    if arg.startswith("@"):
        return Path(arg[1:]).read_text(encoding="utf-8").strip()
    return arg


def _type(arg):
    return parse_type(_text(arg))


def _proc(arg):
    return parse_process(_text(arg))


def _verdict(holds: bool, witness: str | None = None) -> int:
    print("true" if holds else "false")
    if not holds and witness:
        print(witness)
    return 0 if holds else 1


def _subtype_witness(t, s):
    """A client of ``t`` that is not a client of ``s``, searched at small depth."""
    nt, ns = normalize(t), normalize(s)
    names = type_names(t) | type_names(s) or {"a"}
    for p in enumerate_processes(names, WITNESS_DEPTH):
        if member(p, nt) and not member(p, ns):
            return f"witness={render_process(p)}"
    return None


def cmd_subtype(args):
    t, s = _type(args.t), _type(args.s)
    holds = subtype_nf(normalize(t), normalize(s))
    return _verdict(holds, None if holds else _subtype_witness(t, s))


def cmd_equiv(args):
    t, s = _type(args.t), _type(args.s)
    return _verdict(equivalent(t, s))


def cmd_normalize(args):
    print(normalize(_type(args.t)))
    return 0


def cmd_dual(args):
    print(render_type(dual(_type(args.t))))
    return 0


def cmd_meet(args):
    print(meet(_type(args.t), _type(args.s)))
    return 0


def cmd_join(args):
    print(join(_type(args.t), _type(args.s)))
    return 0


def cmd_member(args):
    return _verdict(member_type(_proc(args.p), _type(args.t)))


def cmd_check(args):
    return _verdict(check(_type(args.t), _proc(args.p)))


def cmd_orthogonal(args):
    stuck = stuck_state(_proc(args.p), _proc(args.q))
    witness = None
    if stuck is not None:
        witness = f"stuck={render_process(stuck.left)} | {render_process(stuck.right)}"
    return _verdict(stuck is None, witness)


def cmd_refines(args):
    verdict = refines_bounded(_proc(args.p), _proc(args.q), args.depth)
    if verdict.holds_up_to_bound:
        print(f"HOLDS-UP-TO-BOUND depth={args.depth}")
        return 0
    print(f"FAILS witness={render_process(verdict.counterexample)}")
    return 1


def cmd_project(args):
    print(render_type(project(parse_global(_text(args.g)), args.role)))
    return 0


def cmd_step(args):
    ts = step(_proc(args.p))
    lines = [f"tau -> {render_process(q)}" for q in ts.internal]
    lines += [f"{mu} -> {render_process(q)}" for mu, q in ts.labeled]
    for line in sorted(lines):
        print(line)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sessiontypes", description="Session types with intersections and unions."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, helptext, *params):
        p = sub.add_parser(name, help=helptext)
        for param in params:
            p.add_argument(param)
        p.set_defaults(func=func)
        return p

    add("subtype", cmd_subtype, "is T a subtype of S", "t", "s")
    add("equiv", cmd_equiv, "are T and S equivalent", "t", "s")
    add("normalize", cmd_normalize, "print the normal form of T", "t")
    add("dual", cmd_dual, "print the dual of T", "t")
    add("meet", cmd_meet, "normal form of T & S", "t", "s")
    add("join", cmd_join, "normal form of T | S", "t", "s")
    add("member", cmd_member, "is process P a client of T", "p", "t")
    add("check", cmd_check, "does T |- P hold", "t", "p")
    add("orthogonal", cmd_orthogonal, "are P and Q orthogonal", "p", "q")
    refines = add("refines", cmd_refines, "bounded search for a test separating P from Q", "p", "q")
    refines.add_argument("--depth", type=int, default=3)
    proj = add("project", cmd_project, "project global type G onto a role", "g")
    proj.add_argument("--role", required=True)
    add("step", cmd_step, "print the one-step transitions of P", "p")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, RoleError, ProjectionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
