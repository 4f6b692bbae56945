"""
Type checking processes
=======================

``check(T, P)`` infers a canonical type for ``P`` and compares it with ``T``.
"""

# %%
from sessiontypes import (
    Untypeable,
    canonical_type,
    check,
    dual,
    orthogonal,
    parse_process,
    parse_type,
    render_type,
)

worked = parse_type("a.(!a & !b)")
for text in ["a.!a + a.!b", "a.(!a (+) !b)", "a.!c"]:
    p = parse_process(text)
    print(f"{text:<16} canonical {render_type(canonical_type(p)):<24} check: {check(worked, p)}")

# %%
# External choices that mix outputs or success with inputs have no type.
try:
    canonical_type(parse_process("!a + b"))
except Untypeable as exc:
    print("untypeable:", exc)

# %%
# Processes checked against dual types are always orthogonal.
p, q = parse_process("a.!a + a.!b"), parse_process("!a.(a + b)")
print(check(worked, p), check(dual(worked), q), orthogonal(p, q))
