"""
Game policies: evolved scripts, the hand-written interval baseline, and random and pass-only
reference opponents.
"""
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from src.agent.context import enumerate_contexts
from src.dsl.predicates import Script
from src.game.engine import PASS, Action, GameState, legal_actions, take_deck, take_discard

logger = logging.getLogger(__name__)

SEED_MASK = (1 << 64) - 1
RANDOM_POLICY_STREAM = 0x52414E44  # keeps random-policy streams apart from deal streams


@dataclass
class UsageCounters:
    """Per-rule fire counts, aligned with the rule positions of one script."""

    counts: List[int] = field(default_factory=list)

    @classmethod
    def zeros(cls, size: int) -> "UsageCounters":
        return cls([0] * size)

    def __len__(self) -> int:
        return len(self.counts)

    def increment(self, index: int):
        self.counts[index] += 1

    def merge(self, other: "UsageCounters"):
        """Add another playout's counts into these ones."""
        if len(other) != len(self):
            raise ValueError(f"Cannot merge counters of length {len(other)} into {len(self)}")
        self.counts = [a + b for a, b in zip(self.counts, other.counts)]

    @property
    def total(self) -> int:
        return sum(self.counts)


def default_action(state: GameState) -> Action:
    """Pass when possible, otherwise the first legal action."""
    actions = legal_actions(state)
    return PASS if PASS in actions else actions[0]


def script_decide(script: Script, state: GameState, counters: Optional[UsageCounters] = None) -> Action:
    """
    Pick the action of the first (rule, context) pair that fires.

    Rules are tried in script order; within a rule, contexts in canonical order. The firing
    rule's counter is incremented. If nothing fires the default action is returned.
    """
    contexts = enumerate_contexts(state)
    for index, rule in enumerate(script.rules):
        for ctx in contexts:
            if rule.fires(ctx):
                if counters is not None:
                    counters.increment(index)
                return ctx.action
    return default_action(state)


def slot_interval(slot: int, card_count: int, rack_size: int):
    width = card_count // rack_size
    lo = width * slot
    hi = card_count - 1 if slot == rack_size - 1 else lo + width - 1
    return lo, hi


def baseline_decide(state: GameState) -> Action:
    """
    Hand-written interval strategy.

    Slot i owns an equal share of the card values, increasing with the index (8 values per
    slot in the 40-card game). Scanning slots from 0, the first slot whose occupant lies
    outside its interval and for which the discard top (preferred) or the deck top falls
    inside the interval receives that card. Otherwise Pass.
    """
    config = state.config
    hand = state.current_rack
    deck_top = state.deck_top
    for slot, card in enumerate(hand):
        lo, hi = slot_interval(slot, config.card_count, config.rack_size)
        if lo <= card <= hi:
            continue
        if lo <= state.discard_top <= hi:
            return take_discard(slot)
        if deck_top is not None and lo <= deck_top <= hi:
            return take_deck(slot)
    return default_action(state)


def random_decide(state: GameState, rng: np.random.Generator) -> Action:
    actions = legal_actions(state)
    return actions[int(rng.integers(len(actions)))]


class Policy(ABC):
    """A decision procedure seated at a game."""

    name = "policy"

    def start_game(self, seed: int, seat: int):
        """Called once per game before the first decision."""

    @abstractmethod
    def decide(self, state: GameState) -> Action:
        ...


class ScriptPolicy(Policy):
    name = "script"

    def __init__(self, script: Script, counters: Optional[UsageCounters] = None):
        self.script = script
        self.counters = counters if counters is not None else UsageCounters.zeros(len(script))
        if len(self.counters) != len(script):
            raise ValueError(
                f"Counters of length {len(self.counters)} do not match a {len(script)}-rule script"
            )

    def decide(self, state: GameState) -> Action:
        return script_decide(self.script, state, self.counters)


class BaselinePolicy(Policy):
    name = "baseline"

    def decide(self, state: GameState) -> Action:
        return baseline_decide(state)


class PassPolicy(Policy):
    name = "pass"

    def decide(self, state: GameState) -> Action:
        return default_action(state)


class RandomPolicy(Policy):
    """Uniform over legal actions; re-seeded from its own seed, the game seed and seat at every game."""

    name = "random"

    def __init__(self, seed: int = 0):
        self.seed = seed & SEED_MASK
        self.rng = np.random.default_rng([self.seed, RANDOM_POLICY_STREAM])

    def start_game(self, seed: int, seat: int):
        self.rng = np.random.default_rng([self.seed, seed & SEED_MASK, seat, RANDOM_POLICY_STREAM])

    def decide(self, state: GameState) -> Action:
        return random_decide(state, self.rng)
