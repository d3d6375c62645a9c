"""Builders for hand-made game states and action contexts."""
from typing import Optional, Sequence

from src.agent.context import ActionContext
from src.game.engine import Action, GameState, take_discard

CARDS = 40


def build_state(
    rack0: Sequence[int],
    discard_top: int,
    deck_top: Optional[int] = None,
    rack1: Optional[Sequence[int]] = None,
    to_move: int = 0,
) -> GameState:
    """
    Construct a conserving state around the given cards.

    rack0 belongs to the player to move. Unused cards fill the other rack (descending, so it
    is never a Rack'O) and then the deck; deck_top, when given, is the next card drawn.
    """
    used = set(rack0) | {discard_top} | ({deck_top} if deck_top is not None else set())
    if rack1 is not None:
        used |= set(rack1)
    remaining = [c for c in range(CARDS) if c not in used]
    if rack1 is None:
        rack1 = sorted(remaining[:5], reverse=True)
        remaining = remaining[5:]
    deck = list(remaining) + ([deck_top] if deck_top is not None else [])
    racks = (tuple(rack0), tuple(rack1))
    if to_move == 1:
        racks = (racks[1], racks[0])
    return GameState(deck=deck, discard=[discard_top], racks=racks, to_move=to_move)


def swap_ctx(hand: Sequence[int], card: int, slot: int) -> ActionContext:
    hand = tuple(hand)
    resulting = hand[:slot] + (card,) + hand[slot + 1:]
    return ActionContext(take_discard(slot), hand, resulting, card, slot)


class FixedPolicy:
    """Plays the same action every turn."""

    def __init__(self, action: Action):
        self.action = action

    def start_game(self, seed: int, seat: int):
        pass

    def decide(self, state: GameState) -> Action:
        return self.action
