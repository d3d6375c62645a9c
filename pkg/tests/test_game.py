"""
Tests for the Rack'O engine: dealing, actions, transitions, recycling and playout.
"""
from collections import Counter
from dataclasses import replace

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.agent.policies import PassPolicy, RandomPolicy, ScriptPolicy
from src.dsl.predicates import GivesRacko, Rule, Script
from src.game.engine import (
    PASS,
    ActionKind,
    EngineConfig,
    IllegalActionError,
    IllegalStateError,
    apply_action,
    check_conservation,
    has_racko,
    legal_actions,
    new_game,
    recycle_deck,
    take_deck,
    take_discard,
)
from src.game.playout import Outcome, PolicyFaultError, play_from_state, play_game
from tests.helpers import FixedPolicy, build_state


class TestNewGame:
    """Seeded dealing."""

    def test_pile_sizes(self):
        state = new_game(1234)
        assert len(state.deck) == 29
        assert len(state.discard) == 1
        assert all(len(rack) == 5 for rack in state.racks)
        assert state.to_move == 0
        assert state.turn == 0
        assert check_conservation(state)

    def test_same_seed_same_state(self):
        a, b = new_game(99), new_game(99)
        assert a.deck == b.deck
        assert a.discard == b.discard
        assert a.racks == b.racks

    def test_different_seeds_differ(self):
        assert new_game(1).deck != new_game(2).deck

    def test_negative_seed_accepted(self):
        assert check_conservation(new_game(-5))

    def test_invalid_config_rejected(self):
        with pytest.raises(ValueError):
            EngineConfig(players=3)
        with pytest.raises(ValueError):
            EngineConfig(card_count=10)


class TestLegalActions:
    """Canonical action enumeration."""

    def test_fresh_game_has_eleven_actions(self):
        actions = legal_actions(new_game(7))
        assert len(actions) == 11
        assert actions[:5] == [take_discard(i) for i in range(5)]
        assert actions[5:10] == [take_deck(i) for i in range(5)]
        assert actions[10] == PASS

    def test_nothing_to_draw(self, exhausted_state):
        actions = legal_actions(exhausted_state)
        assert actions == [take_discard(i) for i in range(5)]
        assert all(a.kind is ActionKind.TAKE_DISCARD for a in actions)

    def test_recyclable_discard_still_offers_deck(self, exhausted_state):
        state = replace(exhausted_state, discard=[12, 5])
        assert len(legal_actions(state)) == 11

    def test_terminal_state_rejected(self):
        state = replace(new_game(3), winner=0)
        with pytest.raises(IllegalStateError):
            legal_actions(state)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=0, max_value=2**63))
    def test_count_is_bounded(self, seed):
        state = new_game(seed)
        policy = RandomPolicy(seed)
        policy.start_game(seed, 0)
        for _ in range(30):
            assert len(legal_actions(state)) <= 11
            state = apply_action(state, policy.decide(state))
            if state.is_terminal:
                break


class TestApplyAction:
    """Transitions."""

    def test_take_discard(self, state_factory):
        state = state_factory((30, 2, 14, 22, 39), 5)
        after = apply_action(state, take_discard(0))
        assert after.racks[0] == (5, 2, 14, 22, 39)
        assert after.discard_top == 30
        assert after.to_move == 1
        assert after.turn == 1
        assert check_conservation(after)

    def test_take_deck(self, state_factory):
        state = state_factory((30, 2, 14, 22, 39), 5, deck_top=17)
        after = apply_action(state, take_deck(1))
        assert after.racks[0] == (30, 17, 14, 22, 39)
        assert after.discard == [5, 2]
        assert len(after.deck) == len(state.deck) - 1

    def test_pass_flips_deck_top(self, state_factory):
        state = state_factory((30, 2, 14, 22, 39), 5, deck_top=17)
        after = apply_action(state, PASS)
        assert after.racks == state.racks
        assert after.discard_top == 17
        assert len(after.deck) == len(state.deck) - 1
        assert check_conservation(after)

    def test_input_state_is_unchanged(self, state_factory):
        state = state_factory((30, 2, 14, 22, 39), 5, deck_top=17)
        deck, discard = list(state.deck), list(state.discard)
        apply_action(state, take_deck(0))
        assert state.deck == deck
        assert state.discard == discard

    def test_completing_swap_sets_winner(self, state_factory):
        state = state_factory((1, 2, 3, 4, 9), 8)
        assert apply_action(state, take_discard(4)).winner == 0

    def test_dealt_racko_does_not_win_by_passing(self, state_factory):
        state = state_factory((1, 2, 3, 4, 9), 8, deck_top=17)
        after = apply_action(state, PASS)
        assert after.winner is None
        assert not after.is_terminal

    def test_illegal_actions_rejected(self, exhausted_state):
        with pytest.raises(IllegalActionError):
            apply_action(exhausted_state, PASS)
        with pytest.raises(IllegalActionError):
            apply_action(exhausted_state, take_deck(0))
        with pytest.raises(IllegalActionError):
            apply_action(exhausted_state, take_discard(5))

    def test_deck_is_recycled_when_emptied(self, state_factory):
        state = state_factory((30, 2, 14, 22, 39), 5, deck_top=17)
        rng = np.random.default_rng(0)
        state = replace(state, deck=[17], discard=list(state.deck[:-1]) + [5], rng=rng)
        after = apply_action(state, PASS)
        assert after.discard == [17]
        assert len(after.deck) > 0
        assert check_conservation(after)


class TestRecycleDeck:
    """Deck exhaustion."""

    def test_reshuffles_all_but_top(self, exhausted_state):
        state = replace(exhausted_state, discard=[11, 12, 13, 5], rng=np.random.default_rng(4))
        after = recycle_deck(state)
        assert sorted(after.deck) == [11, 12, 13]
        assert after.discard == [5]

    def test_single_discard_is_left_alone(self, exhausted_state):
        after = recycle_deck(exhausted_state)
        assert after.deck == []
        assert after.discard == [5]

    def test_non_empty_deck_is_identity(self):
        state = new_game(8)
        assert recycle_deck(state) is state


class TestHasRacko:
    """Win condition."""

    @pytest.mark.parametrize("rack, expected", [
        ((2, 7, 19, 25, 38), True),
        ((5, 3, 19, 25, 38), False),
        ((0, 1, 2, 3, 4), True),
        ((0, 1, 2, 4, 3), False),
    ])
    def test_examples(self, rack, expected):
        assert has_racko(rack) is expected

    @settings(max_examples=500)
    @given(st.permutations(list(range(40))))
    def test_matches_sort_oracle(self, cards):
        rack = tuple(cards[:5])
        assert has_racko(rack) == (list(rack) == sorted(rack))


class TestPlayGame:
    """Full playouts."""

    def test_pass_only_is_a_draw(self):
        result = play_game(PassPolicy(), PassPolicy(), seed=21, turn_cap=60)
        assert result.outcome is Outcome.DRAW
        assert result.turns_played == 60

    def test_forced_win_in_one_turn(self, state_factory):
        state = state_factory((1, 2, 3, 4, 9), 8)
        result = play_from_state(state, (FixedPolicy(take_discard(4)), PassPolicy()), turn_cap=10)
        assert result.outcome is Outcome.WIN_P0
        assert result.turns_played == 1
        assert result.winner == 0

    def test_deterministic(self):
        script = Script((Rule((GivesRacko(),)),))
        first = play_game(ScriptPolicy(script), RandomPolicy(), 77, record=True)
        second = play_game(ScriptPolicy(script), RandomPolicy(), 77, record=True)
        assert first == second
        assert len(first.transcript) == first.turns_played

    def test_illegal_policy_output_names_player(self, exhausted_state):
        with pytest.raises(PolicyFaultError) as excinfo:
            play_from_state(exhausted_state, (FixedPolicy(PASS), PassPolicy()), turn_cap=5)
        assert excinfo.value.player == 0
        assert "Player 0" in str(excinfo.value)

    def test_terminates_within_cap(self):
        for seed in range(20):
            result = play_game(RandomPolicy(), RandomPolicy(), seed, turn_cap=40)
            assert result.turns_played <= 40
            if result.outcome is Outcome.DRAW:
                assert result.turns_played == 40

    def test_cap_above_config_default(self):
        result = play_game(PassPolicy(), PassPolicy(), seed=21, turn_cap=600)
        assert result.outcome is Outcome.DRAW
        assert result.turns_played == 600

    def test_cap_above_state_config(self, state_factory):
        state = replace(state_factory((30, 2, 14, 22, 39), 5, deck_top=17), turn=495)
        result = play_from_state(state, (PassPolicy(), PassPolicy()), turn_cap=510)
        assert result.outcome is Outcome.DRAW
        assert result.turns_played == 15

    def test_exhausted_deck_is_recycled_before_first_decision(self, state_factory):
        dealt = state_factory((30, 2, 14, 22, 39), 5)
        state = replace(dealt, deck=[], discard=list(dealt.deck) + [5], rng=np.random.default_rng(3))
        policies = (ScriptPolicy(Script((Rule((GivesRacko(),)),))), PassPolicy())
        result = play_from_state(state, policies, turn_cap=10, record=True)
        assert 1 <= result.turns_played <= 10
        assert len(result.transcript) == result.turns_played
        if result.outcome is Outcome.DRAW:
            assert result.turns_played == 10

    def test_take_deck_from_exhausted_start(self, state_factory):
        dealt = state_factory((30, 2, 14, 22, 39), 5)
        state = replace(dealt, deck=[], discard=list(dealt.deck) + [5], rng=np.random.default_rng(9))
        result = play_from_state(state, (FixedPolicy(take_deck(4)), PassPolicy()), turn_cap=2, record=True)
        assert result.transcript[0] == take_deck(4)

    def test_turns_counted_from_starting_turn(self, state_factory):
        state = replace(state_factory((1, 2, 3, 4, 9), 8), turn=10)
        result = play_from_state(state, (FixedPolicy(take_discard(4)), PassPolicy()), turn_cap=20)
        assert result.outcome is Outcome.WIN_P0
        assert result.turns_played == 1

    def test_draw_from_mid_game_counts_remaining_turns(self, state_factory):
        state = replace(state_factory((30, 2, 14, 22, 39), 5, deck_top=17), turn=55)
        result = play_from_state(state, (PassPolicy(), PassPolicy()), turn_cap=60)
        assert result.outcome is Outcome.DRAW
        assert result.turns_played == 5

    def test_invalid_cap_rejected(self):
        with pytest.raises(ValueError):
            play_game(PassPolicy(), PassPolicy(), 1, turn_cap=0)


class TestConservation:
    """Card multiset is preserved over randomized playouts."""

    def _fuzz(self, games: int):
        violations = 0
        full = Counter(range(40))
        for seed in range(games):
            policies = (RandomPolicy(), RandomPolicy())
            for seat, policy in enumerate(policies):
                policy.start_game(seed, seat)
            state = new_game(seed)
            while not state.is_terminal:
                state = apply_action(state, policies[state.to_move].decide(state))
                cards = Counter(state.deck) + Counter(state.discard)
                cards += Counter(state.racks[0]) + Counter(state.racks[1])
                violations += cards != full
                assert state.discard
        return violations

    def test_random_playouts(self):
        assert self._fuzz(100) == 0

    @pytest.mark.slow
    def test_thousand_random_playouts(self):
        assert self._fuzz(1000) == 0
