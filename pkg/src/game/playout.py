"""
Full-game playout between two policies.
"""
import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import List, Optional, Protocol, Sequence, Tuple

from src.config.settings import TURN_CAP
from src.game.engine import (
    DEFAULT_CONFIG,
    Action,
    EngineConfig,
    GameState,
    apply_action,
    legal_actions,
    new_game,
    recycle_deck,
)

logger = logging.getLogger(__name__)


class PolicyFaultError(RuntimeError):
    """Raised when a policy returns an action outside legal_actions."""

    def __init__(self, player: int, action: Action, turn: int):
        self.player = player
        self.action = action
        self.turn = turn
        super().__init__(f"Player {player} returned illegal action {action} at turn {turn}")


class Policy(Protocol):
    def start_game(self, seed: int, seat: int) -> None:
        ...

    def decide(self, state: GameState) -> Action:
        ...


class Outcome(Enum):
    WIN_P0 = "win_p0"
    WIN_P1 = "win_p1"
    DRAW = "draw"


@dataclass(frozen=True)
class GameResult:
    outcome: Outcome
    turns_played: int
    transcript: Tuple[Action, ...] = ()

    @property
    def winner(self) -> Optional[int]:
        if self.outcome is Outcome.WIN_P0:
            return 0
        if self.outcome is Outcome.WIN_P1:
            return 1
        return None


def play_from_state(
    state: GameState,
    policies: Sequence[Policy],
    turn_cap: Optional[int] = None,
    record: bool = False,
) -> GameResult:
    """
    Play a game to completion from an arbitrary non-terminal state.

    The cap is an absolute turn number, so a state already at turn t has
    turn_cap - t turns left. An exhausted deck is recycled before the first
    decision.

    Args:
        state: Starting position
        policies: One policy per seat
        turn_cap: Turn at which the game is declared a draw (default: state's config)
        record: Keep the applied actions in the result's transcript

    Returns:
        GameResult with the outcome and the number of turns played from `state`

    Raises:
        PolicyFaultError: If a policy returns an illegal action
    """
    cap = turn_cap if turn_cap is not None else state.config.turn_cap
    if cap < 1:
        raise ValueError(f"turn_cap must be >= 1, got {cap}")
    if cap != state.config.turn_cap:
        state = replace(state, config=replace(state.config, turn_cap=cap))
    state = recycle_deck(state)
    start_turn = state.turn
    transcript: List[Action] = []

    while state.turn < cap:
        mover = state.to_move
        action = policies[mover].decide(state)
        if action not in legal_actions(state):
            raise PolicyFaultError(mover, action, state.turn)
        state = apply_action(state, action)
        if record:
            transcript.append(action)
        if state.winner is not None:
            outcome = Outcome.WIN_P0 if state.winner == 0 else Outcome.WIN_P1
            return GameResult(outcome, state.turn - start_turn, tuple(transcript))

    return GameResult(Outcome.DRAW, state.turn - start_turn, tuple(transcript))


def play_game(
    policy0: Policy,
    policy1: Policy,
    seed: int,
    turn_cap: int = TURN_CAP,
    config: EngineConfig = DEFAULT_CONFIG,
    record: bool = False,
) -> GameResult:
    """
    Deal a seeded game and play it out, player 0 moving first.

    Deterministic given the policies and the seed. `turn_cap` overrides the
    cap carried by `config`.
    """
    policy0.start_game(seed, 0)
    policy1.start_game(seed, 1)
    state = new_game(seed, replace(config, turn_cap=turn_cap))
    result = play_from_state(state, (policy0, policy1), record=record)
    logger.debug(f"Game seed={seed}: {result.outcome.value} after {result.turns_played} turns")
    return result
