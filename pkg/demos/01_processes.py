"""
Processes, transitions and orthogonality
========================================

A process talks on a single channel.  ``a`` receives ``a``, ``!a`` sends it,
``1`` is success, ``0`` is deadlock, ``(+)`` is a choice the process makes
and ``+`` is a choice the partner makes.
"""

# %%
from sessiontypes import (
    orthogonal,
    parse_process,
    refines_bounded,
    render_process,
    step,
    stuck_state,
    weak_closure,
)

server = parse_process("!a.(a + b)")
print("server:", render_process(server))

# %%
# Sending is irrevocable: inside an external choice an output preempts the
# other branch with an internal step.
for label, target in sorted(step(parse_process("!a.b + c")).labeled, key=str):
    print(f"  {label} -> {render_process(target)}")
print("  tau ->", [render_process(q) for q in step(parse_process("!a.b + c")).internal])
print("weak closure of !a + b:", sorted(map(render_process, weak_closure(parse_process("!a + b")))))

# %%
# Two processes are orthogonal when every stable state of their composition
# lets both of them succeed.
for text in ["a.!a", "a.!b", "a.(!a (+) !b)", "a", "a.(!a (+) !c)"]:
    client = parse_process(text)
    verdict = orthogonal(server, client)
    line = f"{text:<16} {'orthogonal' if verdict else 'stuck'}"
    if not verdict:
        s = stuck_state(server, client)
        line += f" at {render_process(s.left)} | {render_process(s.right)}"
    print(line)

# %%
# Refinement compares sets of orthogonal partners.  The bounded search looks
# for a partner of the left process that the right one fails.
verdict = refines_bounded(parse_process("a.b + b.d"), parse_process("a.b + b.c + b.d"), 3)
print("a.b + b.d refines a.b + b.c + b.d?", bool(verdict))
print("separating partner:", render_process(verdict.counterexample))
