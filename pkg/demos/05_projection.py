"""
Projecting a global type
========================

A two-party global type describes a whole conversation.  The role that
chooses gets the meet of the branches, the other role their join.
"""

# %%
from sessiontypes import ProjectionError, dual, equivalent, parse_global, project, render_type

g = parse_global("A->B:a; A->B:b; end [] A->B:a; A->B:c; end")
print("global:", g)
a_side, b_side = project(g, "A"), project(g, "B")
print("A:", render_type(a_side))
print("B:", render_type(b_side))
print("A is the dual of B:", equivalent(a_side, dual(b_side)))

# %%
# When B cannot know whether to wait or to send, no projection exists.
try:
    project(parse_global("A->B:a; A->B:b; end [] A->B:a; B->A:c; end"), "B")
except ProjectionError as exc:
    print("rejected:", exc)
