"""
Rack'O state machine: dealing, action enumeration, transitions, win detection and deck recycling.

States are treated as values: every transition returns a new GameState. The only shared
object between a state and its successors is the game's random stream, which is consumed
solely by deck reshuffles.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.config.settings import CARD_COUNT, PLAYERS, RACK_SIZE, TURN_CAP

logger = logging.getLogger(__name__)

Rack = Tuple[int, ...]

SEED_MASK = (1 << 64) - 1


class IllegalStateError(ValueError):
    """Raised when an operation is applied to a state that does not admit it."""


class IllegalActionError(ValueError):
    """Raised when an action is not a member of legal_actions(state)."""


@dataclass(frozen=True)
class EngineConfig:
    """
    Game dimensions. Only the defaults (40 cards, 5 slots, 2 players) are exercised.

    Raises:
        ValueError: If the dimensions cannot produce a playable game
    """

    card_count: int = CARD_COUNT
    rack_size: int = RACK_SIZE
    players: int = PLAYERS
    turn_cap: int = TURN_CAP

    def __post_init__(self):
        if self.players != 2:
            raise ValueError(f"Only two-player games are supported, got players={self.players}")
        if self.rack_size < 2:
            raise ValueError(f"rack_size must be at least 2, got {self.rack_size}")
        if self.card_count < self.players * self.rack_size + 2:
            raise ValueError(
                f"card_count={self.card_count} is too small to deal {self.players} racks of "
                f"{self.rack_size} and still flip a discard and keep a deck"
            )
        if self.turn_cap < 1:
            raise ValueError(f"turn_cap must be >= 1, got {self.turn_cap}")


DEFAULT_CONFIG = EngineConfig()


class ActionKind(Enum):
    TAKE_DISCARD = "take_discard"
    TAKE_DECK = "take_deck"
    PASS = "pass"


@dataclass(frozen=True)
class Action:
    kind: ActionKind
    slot: Optional[int] = None

    @property
    def is_swap(self) -> bool:
        return self.kind is not ActionKind.PASS

    def __str__(self) -> str:
        if self.kind is ActionKind.PASS:
            return "Pass"
        name = "TakeDiscard" if self.kind is ActionKind.TAKE_DISCARD else "TakeDeck"
        return f"{name}({self.slot})"


PASS = Action(ActionKind.PASS)


def take_discard(slot: int) -> Action:
    return Action(ActionKind.TAKE_DISCARD, slot)


def take_deck(slot: int) -> Action:
    return Action(ActionKind.TAKE_DECK, slot)


@dataclass
class GameState:
    """
    Full game position.

    deck[-1] is the next card drawn and discard[-1] is the visible discard top.
    """

    deck: List[int]
    discard: List[int]
    racks: Tuple[Rack, Rack]
    to_move: int = 0
    turn: int = 0
    rng: np.random.Generator = field(default_factory=np.random.default_rng, repr=False)
    config: EngineConfig = DEFAULT_CONFIG
    winner: Optional[int] = None

    @property
    def current_rack(self) -> Rack:
        return self.racks[self.to_move]

    @property
    def discard_top(self) -> int:
        return self.discard[-1]

    @property
    def deck_top(self) -> Optional[int]:
        return self.deck[-1] if self.deck else None

    @property
    def can_draw(self) -> bool:
        """True if a hidden card can be produced (directly or by recycling the discard)."""
        return bool(self.deck) or len(self.discard) > 1

    @property
    def is_terminal(self) -> bool:
        return self.winner is not None or self.turn >= self.config.turn_cap


def has_racko(rack: Sequence[int]) -> bool:
    """True iff the slots are strictly ascending."""
    return all(rack[i] < rack[i + 1] for i in range(len(rack) - 1))


def check_conservation(state: GameState) -> bool:
    """True iff deck, discard and both racks hold every card value exactly once."""
    cards = Counter(state.deck)
    cards.update(state.discard)
    for rack in state.racks:
        cards.update(rack)
    return cards == Counter(range(state.config.card_count))


def new_game(seed: int, config: EngineConfig = DEFAULT_CONFIG) -> GameState:
    """
    Shuffle, deal alternately and flip the first discard.

    Args:
        seed: Any integer; reduced modulo 2**64
        config: Game dimensions

    Returns:
        Fresh state with player 0 to move
    """
    rng = np.random.default_rng(seed & SEED_MASK)
    deck = [int(card) for card in rng.permutation(config.card_count)]
    hands: List[List[int]] = [[] for _ in range(config.players)]
    for _ in range(config.rack_size):
        for hand in hands:
            hand.append(deck.pop())
    discard = [deck.pop()]
    return GameState(
        deck=deck,
        discard=discard,
        racks=(tuple(hands[0]), tuple(hands[1])),
        rng=rng,
        config=config,
    )


def legal_actions(state: GameState) -> List[Action]:
    """
    Enumerate the mover's actions in canonical order.

    TakeDiscard(0..n-1), then TakeDeck(0..n-1) and Pass when a hidden card can be drawn.
    Policies break ties by this order.

    Raises:
        IllegalStateError: If the game is over
    """
    if state.is_terminal:
        raise IllegalStateError(f"No legal actions in a terminal state (turn {state.turn})")
    slots = range(state.config.rack_size)
    actions = [take_discard(i) for i in slots]
    if state.can_draw:
        actions.extend(take_deck(i) for i in slots)
        actions.append(PASS)
    return actions


def recycle_deck(state: GameState) -> GameState:
    """
    Reshuffle all discards except the top into an empty deck.

    A non-empty deck is left untouched.
    """
    if state.deck or len(state.discard) <= 1:
        return state
    pile = state.discard[:-1]
    order = state.rng.permutation(len(pile))
    logger.debug(f"Recycling {len(pile)} discards into the deck at turn {state.turn}")
    return replace(state, deck=[pile[i] for i in order], discard=state.discard[-1:])


def _validate_action(state: GameState, action: Action):
    if state.is_terminal:
        raise IllegalActionError(f"Game is over; cannot apply {action}")
    size = state.config.rack_size
    if action.kind is ActionKind.PASS:
        valid = action.slot is None and state.can_draw
    elif action.kind is ActionKind.TAKE_DECK:
        valid = action.slot is not None and 0 <= action.slot < size and state.can_draw
    else:
        valid = action.slot is not None and 0 <= action.slot < size
    if not valid:
        raise IllegalActionError(f"Illegal action {action} at turn {state.turn}")


def apply_action(state: GameState, action: Action) -> GameState:
    """
    Apply the mover's action and pass the turn.

    Raises:
        IllegalActionError: If the action is not legal in this state
    """
    _validate_action(state, action)
    if action.kind is not ActionKind.TAKE_DISCARD and not state.deck:
        state = recycle_deck(state)

    deck = list(state.deck)
    discard = list(state.discard)
    racks = list(state.racks)
    mover = state.to_move

    if action.kind is ActionKind.PASS:
        discard.append(deck.pop())
    else:
        incoming = discard.pop() if action.kind is ActionKind.TAKE_DISCARD else deck.pop()
        rack = list(racks[mover])
        outgoing = rack[action.slot]
        rack[action.slot] = incoming
        racks[mover] = tuple(rack)
        discard.append(outgoing)

    # Only a swap can complete a rack; a dealt Rack'O is not a win.
    winner = mover if action.is_swap and has_racko(racks[mover]) else None
    next_state = replace(
        state,
        deck=deck,
        discard=discard,
        racks=(racks[0], racks[1]),
        to_move=1 - mover,
        turn=state.turn + 1,
        winner=winner,
    )
    # Recycle eagerly so the deck top shown to the next policy is the card it would draw.
    if not next_state.deck:
        next_state = recycle_deck(next_state)
    return next_state
