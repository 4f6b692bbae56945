"""
Clients, duality and subtyping
==============================

``member(p, T)`` decides whether ``p`` is a client of a channel of type ``T``
without building the (infinite) set of clients.  Subtyping is inclusion of
client sets, decided on normal forms.
"""

# %%
from sessiontypes import (
    dual,
    enumerate_processes,
    member_type,
    orthogonal,
    parse_process,
    parse_type,
    render_process,
    render_type,
    subtype,
)

t = parse_type("a.end | b.end")
for text in ["!a (+) !b", "!a", "!c", "a + b"]:
    print(f"{text:<10} client of {render_type(t)}? {member_type(parse_process(text), t)}")

# %%
# The dual type describes the other end of the channel; its clients are
# orthogonal to every client of the original.
worked = parse_type("a.(!a & !b)")
print("dual of", render_type(worked), "is", render_type(dual(worked)))
client, server = parse_process("!a.(a + b)"), parse_process("a.!a + a.!b")
print("client:", member_type(client, worked), " server:", member_type(server, dual(worked)))
print("orthogonal:", orthogonal(client, server))

# %%
for lhs, rhs in [("!a & !b", "!b"), ("a.end", "a.end | b.end"), ("a.end | b.end", "a.end")]:
    print(f"{lhs} <= {rhs}: {subtype(parse_type(lhs), parse_type(rhs))}")

# %%
# A failed subtyping check has a client that separates the two types.
big, small = parse_type("a.end | b.end"), parse_type("a.end")
witness = next(
    p for p in enumerate_processes("ab", 2) if member_type(p, big) and not member_type(p, small)
)
print("separating client:", render_process(witness))
