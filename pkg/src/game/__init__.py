"""Rack'O game engine and playout."""
from src.game.engine import (
    PASS,
    Action,
    ActionKind,
    EngineConfig,
    GameState,
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
from src.game.playout import GameResult, Outcome, PolicyFaultError, play_from_state, play_game

__all__ = [
    "PASS",
    "Action",
    "ActionKind",
    "EngineConfig",
    "GameResult",
    "GameState",
    "IllegalActionError",
    "IllegalStateError",
    "Outcome",
    "PolicyFaultError",
    "apply_action",
    "check_conservation",
    "has_racko",
    "legal_actions",
    "new_game",
    "play_from_state",
    "play_game",
    "recycle_deck",
    "take_deck",
    "take_discard",
]
