"""
Candidate moves paired with the hand they would produce.
"""
from dataclasses import dataclass
from typing import List, Optional

from src.game.engine import Action, ActionKind, GameState, IllegalStateError, Rack, legal_actions


@dataclass(frozen=True)
class ActionContext:
    """
    A legal action together with the mover's hand before and after it.

    For swap actions resulting_hand differs from current_hand only at placed_slot, which
    holds placed_value. For Pass both hands are equal and there is no placement.
    """

    action: Action
    current_hand: Rack
    resulting_hand: Rack
    placed_value: Optional[int] = None
    placed_slot: Optional[int] = None


def enumerate_contexts(state: GameState) -> List[ActionContext]:
    """
    Build one context per legal action, in canonical legal_actions order.

    Deck-sourced contexts place the revealed deck top.

    Raises:
        IllegalStateError: If the state is terminal, or its deck is empty but recyclable
            (apply_action and play_from_state recycle before any policy sees a state)
    """
    actions = legal_actions(state)
    hand = state.current_rack
    if state.can_draw and not state.deck:
        raise IllegalStateError("Deck is exhausted; recycle_deck must run before enumeration")

    contexts = []
    for action in actions:
        if action.kind is ActionKind.PASS:
            contexts.append(ActionContext(action, hand, hand))
            continue
        card = state.discard_top if action.kind is ActionKind.TAKE_DISCARD else state.deck[-1]
        resulting = hand[: action.slot] + (card,) + hand[action.slot + 1:]
        contexts.append(ActionContext(action, hand, resulting, card, action.slot))
    return contexts
