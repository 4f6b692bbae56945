"""
Normal forms, viability, meet and join
======================================

Every session type is equivalent to a union of input branches or an
intersection of output branches, each optionally joined with ``end``.
"""

# %%
from sessiontypes import join, meet, normalize, parse_type, viable

for text in [
    "(a | b | c) & (b | c | d)",
    "(!a & !b & !c) | (!b & !c & !d)",
    "!a.!b & !a.!c",
    "a.b | a.c",
    "(a.end | end) & !b.end",
    "(a.end | b.end) & end",
    "a.end | !b.end",
]:
    print(f"{text:<34} => {normalize(parse_type(text))}")

# %%
# A type is viable when it is neither Bot (no clients) nor Top (no servers).
for text in ["end", "a.end & !b.end", "a.end | !b.end", "!a.end & end"]:
    print(f"viable({text}) = {viable(parse_type(text))}")

# %%
# Meet and join are greatest lower and least upper bounds.
print("meet:", meet(parse_type("!a.!b"), parse_type("!a.!c")))
print("join:", join(parse_type("a.b"), parse_type("a.c")))
