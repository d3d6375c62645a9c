"""Evolutionary synthesis of Rack'O scripts."""
from src.evolve.config import GAConfig
from src.evolve.evaluation import (
    Individual,
    MatchStats,
    SeatBalancedResult,
    derive_seed,
    eval_population,
    evaluation,
    pool_win_rate,
    seat_balanced_match,
)
from src.evolve.ezs import EvolutionReport, GenerationStats, ezs
from src.evolve.operators import crossover, elite, mutate, prune_individual, remove_unused, tournament_select

__all__ = [
    "EvolutionReport",
    "GAConfig",
    "GenerationStats",
    "Individual",
    "MatchStats",
    "SeatBalancedResult",
    "crossover",
    "derive_seed",
    "elite",
    "eval_population",
    "evaluation",
    "ezs",
    "mutate",
    "pool_win_rate",
    "prune_individual",
    "remove_unused",
    "seat_balanced_match",
    "tournament_select",
]
