import random

import pytest
from hypothesis import given

from sessiontypes import (
    GEND,
    GMessage,
    ProjectionError,
    RoleError,
    dual,
    equivalent,
    parse_global,
    parse_type,
    project,
    render_type,
    subtype,
)
from strategies import global_types, random_global

G = parse_global
EXAMPLE = "A->B:a; A->B:b; end [] A->B:a; A->B:c; end"


class TestExample:
    def test_sender_gets_the_meet(self):
        got = project(G(EXAMPLE), "A")
        assert equivalent(got, parse_type("!a.(!b & !c)"))
        assert render_type(got) == "!a.(!b.end & !c.end)"

    def test_receiver_gets_the_join(self):
        got = project(G(EXAMPLE), "B")
        assert equivalent(got, parse_type("a.(b | c)"))
        assert render_type(got) == "a.(b.end | c.end)"

    def test_projections_are_dual(self):
        g = G(EXAMPLE)
        assert equivalent(project(g, "A"), dual(project(g, "B")))


def test_end():
    assert project(GEND, "A") == parse_type("end")


def test_chain():
    g = G("A->B:a; B->A:b; end")
    assert render_type(project(g, "A")) == "!a.b.end"
    assert render_type(project(g, "B")) == "a.!b.end"


class TestErrors:
    def test_mixed_senders(self):
        with pytest.raises(ProjectionError):
            project(G("A->B:a; end [] B->A:b; end"), "A")

    def test_branch_without_message(self):
        with pytest.raises(ProjectionError):
            project(G("A->B:a; end [] end"), "A")

    def test_unknown_role(self):
        with pytest.raises(ProjectionError):
            project(G("A->B:a; end"), "C")

    def test_non_viable_projection(self):
        # B cannot tell whether to wait for b or to send c
        g = G("A->B:a; A->B:b; end [] A->B:a; B->A:c; end")
        with pytest.raises(ProjectionError):
            project(g, "B")

    def test_role_error_from_validation(self):
        with pytest.raises(RoleError):
            project(GMessage("A", "A", "a", GEND), "A")

    def test_bad_role_name(self):
        with pytest.raises(RoleError):
            project(G(EXAMPLE), "b")


def _projections(g):
    try:
        return project(g, "A"), project(g, "B")
    except ProjectionError:
        return None


@given(global_types())
def test_projections_are_compatible(g):
    pair = _projections(g)
    if pair is not None:
        a_side, b_side = pair
        assert subtype(a_side, dual(b_side))


def _has_choice(g):
    return "[]" in str(g)


@given(global_types().filter(lambda g: not _has_choice(g)))
def test_chains_project_to_duals(g):
    pair = _projections(g)
    if pair is not None:
        a_side, b_side = pair
        assert equivalent(a_side, dual(b_side))


def test_seeded_choices_project_compatibly():
    rng = random.Random(0)
    checked = 0
    for _ in range(5000):
        g = random_global(rng, rng.randint(2, 9), names=("a", "b"))
        pair = _projections(g)
        if pair is None or not _has_choice(g):
            continue
        a_side, b_side = pair
        assert subtype(a_side, dual(b_side)), str(g)
        checked += 1
    assert checked >= 100
