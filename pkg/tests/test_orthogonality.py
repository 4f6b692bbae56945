from itertools import islice
from math import comb

import pytest
from hypothesis import given, settings

from sessiontypes import (
    ExplorationLimit,
    LimitError,
    RefinementVerdict,
    SystemState,
    enumerate_processes,
    orthogonal,
    parse_process,
    refines_bounded,
    render_process,
    stuck_state,
    system_step,
)
from sessiontypes.orthogonality import fresh_name
from strategies import processes

P = parse_process


def count_terms(n_names: int, depth: int, n_leaves: int = 2, width: int = 2) -> int:
    """Closed-form count of the canonical enumeration, computed level by level.

    A chain at depth d picks k distinct operands of depth < d, not chains of
    the same operator, with at least one operand of depth exactly d - 1.
    """
    n_actions = 2 * n_names
    exact = [n_leaves]
    chains = [[0], [0]]  # per operator, chains of each exact depth
    for d in range(1, depth + 1):
        below = sum(exact)
        below_old = below - exact[-1]
        total = n_actions * exact[-1]
        for per_op in chains:
            pool = below - sum(per_op)
            pool_old = below_old - sum(per_op[:-1])
            made = sum(comb(pool, k) - comb(pool_old, k) for k in range(2, width + 1))
            per_op.append(made)
            total += made
        exact.append(total)
    return sum(exact)


class TestEnumeration:
    def test_depth_zero(self):
        assert [render_process(p) for p in enumerate_processes("a", 0)] == ["0", "1"]

    def test_depth_one_members(self):
        texts = {render_process(p) for p in enumerate_processes("a", 1)}
        assert texts == {"0", "1", "a", "!a", "a.0", "!a.0", "0 (+) 1", "0 + 1"}

    @pytest.mark.parametrize(
        "names, depth", [("a", 1), ("a", 2), ("ab", 2), ("ab", 3), ("abc", 3), ("a", 3)]
    )
    def test_count_matches_formula(self, names, depth):
        got = sum(1 for _ in enumerate_processes(names, depth))
        assert got == count_terms(len(names), depth)

    def test_width_three_count(self):
        got = sum(1 for _ in enumerate_processes("a", 2, width=3))
        assert got == count_terms(1, 2, width=3)

    def test_frozen_counts(self):
        assert count_terms(1, 1) == 8
        assert count_terms(2, 3) == 11562
        assert count_terms(3, 3) == 42856

    def test_no_duplicates(self):
        terms = list(enumerate_processes("ab", 3))
        assert len(terms) == len(set(terms))

    def test_level_order(self):
        shallow = list(enumerate_processes("ab", 2))
        deep = list(islice(enumerate_processes("ab", 3), len(shallow)))
        assert deep == shallow

    def test_caps(self):
        with pytest.raises(LimitError):
            list(enumerate_processes("a", 5))
        with pytest.raises(LimitError):
            list(enumerate_processes("a", 1, width=4))
        with pytest.raises(ValueError):
            list(enumerate_processes("", 1))


class TestSystemStep:
    def test_sync(self):
        assert system_step(SystemState(P("!a.b"), P("a.!b"))) == {SystemState(P("b"), P("!b"))}

    def test_success_does_not_synchronise(self):
        assert system_step(SystemState(P("1"), P("1"))) == frozenset()

    def test_interleaves_internal_moves(self):
        succ = system_step(SystemState(P("!a (+) !b"), P("a")))
        assert succ == {SystemState(P("!a"), P("a")), SystemState(P("!b"), P("a"))}


class TestOrthogonal:
    SERVER = P("!a.(a + b)")

    @pytest.mark.parametrize("client", ["a.!a", "a.!b", "a.(!a (+) !b)"])
    def test_compliant_clients(self, client):
        assert orthogonal(self.SERVER, P(client))

    @pytest.mark.parametrize("client", ["a", "a.(!a (+) !c)"])
    def test_non_compliant_clients(self, client):
        assert not orthogonal(self.SERVER, P(client))

    def test_stuck_state_is_reported(self):
        stuck = stuck_state(self.SERVER, P("a.(!a (+) !c)"))
        assert stuck == SystemState(P("a + b"), P("!c"))

    def test_state_cap(self):
        with pytest.raises(ExplorationLimit):
            orthogonal(P("!a (+) !b (+) !c"), P("a + b + c"), limit=2)

    def test_no_orthogonals_for_mixed_choice(self):
        lonely = P("a (+) !b")
        assert not any(orthogonal(lonely, r) for r in enumerate_processes("abc", 3))


@settings(max_examples=200)
@given(processes(), processes())
def test_symmetry(p, q):
    assert orthogonal(p, q) == orthogonal(q, p)


def test_symmetry_on_enumerated_pairs():
    terms = list(enumerate_processes("ab", 2))[::7]
    for p in terms:
        for q in terms:
            assert orthogonal(p, q) == orthogonal(q, p)


class TestRefinement:
    @pytest.mark.parametrize(
        "left, right",
        [
            ("a.!a + a.!b", "a.(!a (+) !b)"),
            ("!a + !b", "!a (+) !b"),
            ("!a + b", "!a"),
            ("!a + 1", "!a"),
        ],
    )
    def test_equivalences_both_ways(self, left, right):
        assert refines_bounded(P(left), P(right), 2)
        assert refines_bounded(P(right), P(left), 2)

    def test_internal_choice_refines_each_branch(self):
        assert refines_bounded(P("!a (+) !b"), P("!a"), 2)

    def test_counterexample(self):
        lhs, rhs = P("a.b + b.d"), P("a.b + b.c + b.d")
        verdict = refines_bounded(lhs, rhs, 3)
        assert not verdict
        assert render_process(verdict.counterexample) == "!b.!d"
        assert orthogonal(lhs, verdict.counterexample)
        assert not orthogonal(rhs, verdict.counterexample)

    @settings(max_examples=25, deadline=None)
    @given(processes(max_leaves=4))
    def test_reflexive(self, p):
        assert refines_bounded(p, p, 1)

    def test_verdict_invariant(self):
        with pytest.raises(ValueError):
            RefinementVerdict(True, P("a"))
        with pytest.raises(ValueError):
            RefinementVerdict(False, None)


def test_fresh_name():
    assert fresh_name({"a", "b"}) == "c"
    assert fresh_name(set("abcdefghijklmnopqrstuvwxyz")) == "n0"
