"""
Match evaluation: head-to-head series, seat-balanced matches and round-robin population fitness.
"""
import logging
import math
from concurrent.futures import Executor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.agent.policies import Policy, ScriptPolicy, UsageCounters
from src.config.settings import TURN_CAP
from src.dsl.predicates import Script
from src.evolve.config import GAConfig
from src.game.playout import Outcome, play_game

logger = logging.getLogger(__name__)

SEED_MASK = (1 << 64) - 1


def derive_seed(*keys: int) -> int:
    """
    Mix integer keys into one 64-bit seed.

    Uses numpy's SeedSequence hashing, so nearby keys give unrelated seeds and the result
    depends only on the keys (never on evaluation order or worker count).
    """
    sequence = np.random.SeedSequence([int(k) & SEED_MASK for k in keys])
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


@dataclass
class MatchStats:
    """Win counts of a series; p1 is the policy seated as player 0."""

    wins_p1: int = 0
    wins_p2: int = 0
    draws: int = 0
    games: int = 0

    @property
    def rate_p1(self) -> float:
        return self.wins_p1 / self.games if self.games else 0.0

    @property
    def rate_p2(self) -> float:
        return self.wins_p2 / self.games if self.games else 0.0

    def record(self, outcome: Outcome):
        self.games += 1
        if outcome is Outcome.WIN_P0:
            self.wins_p1 += 1
        elif outcome is Outcome.WIN_P1:
            self.wins_p2 += 1
        else:
            self.draws += 1

    def __add__(self, other: "MatchStats") -> "MatchStats":
        return MatchStats(
            self.wins_p1 + other.wins_p1,
            self.wins_p2 + other.wins_p2,
            self.draws + other.draws,
            self.games + other.games,
        )


def evaluation(s1: Policy, s2: Policy, n: int, seed: int, turn_cap: int = TURN_CAP) -> MatchStats:
    """
    Play n games with s1 seated as player 0.

    Args:
        s1: Policy moving first
        s2: Policy moving second
        n: Number of games
        seed: Series seed; game g is dealt from derive_seed(seed, g)
        turn_cap: Draw threshold

    Returns:
        MatchStats over the n games
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    stats = MatchStats()
    for game in range(n):
        stats.record(play_game(s1, s2, derive_seed(seed, game), turn_cap).outcome)
    return stats


@dataclass
class SeatBalancedResult:
    """Two series between p1 and p2, one per seating."""

    p1_first: MatchStats
    p2_first: MatchStats

    @property
    def games(self) -> int:
        return self.p1_first.games + self.p2_first.games

    @property
    def p1_wins(self) -> int:
        return self.p1_first.wins_p1 + self.p2_first.wins_p2

    @property
    def p2_wins(self) -> int:
        return self.p1_first.wins_p2 + self.p2_first.wins_p1

    @property
    def draws(self) -> int:
        return self.p1_first.draws + self.p2_first.draws

    @property
    def p1_rate(self) -> float:
        return self.p1_wins / self.games if self.games else 0.0

    @property
    def p2_rate(self) -> float:
        return self.p2_wins / self.games if self.games else 0.0


def seat_balanced_match(
    p1: Policy, p2: Policy, games: int, seed: int, turn_cap: int = TURN_CAP
) -> SeatBalancedResult:
    """Play ceil(games/2) with p1 first and floor(games/2) with p2 first."""
    first = math.ceil(games / 2)
    second = games // 2
    p1_first = evaluation(p1, p2, first, derive_seed(seed, 0), turn_cap) if first else MatchStats()
    p2_first = evaluation(p2, p1, second, derive_seed(seed, 1), turn_cap) if second else MatchStats()
    return SeatBalancedResult(p1_first, p2_first)


def pool_win_rate(
    script: Script, pool: Sequence[Policy], games: int, seed: int, turn_cap: int = TURN_CAP
) -> float:
    """Mean seat-balanced win rate of a script against each policy in the pool."""
    rates = [
        seat_balanced_match(ScriptPolicy(script), opponent, games, derive_seed(seed, k), turn_cap).p1_rate
        for k, opponent in enumerate(pool)
    ]
    return float(np.mean(rates))


@dataclass
class Individual:
    """A population member and its statistics from the latest evaluation."""

    script: Script
    fitness: float = 0.0
    usage: UsageCounters = field(default_factory=UsageCounters)
    wins: int = 0
    games: int = 0

    def __post_init__(self):
        if len(self.usage) != len(self.script):
            self.usage = UsageCounters.zeros(len(self.script))


@dataclass(frozen=True)
class _MatchTask:
    first: Script
    second: Script
    games: int
    seed: int
    turn_cap: int


def _run_match(task: _MatchTask) -> Tuple[MatchStats, List[int], List[int]]:
    first = ScriptPolicy(task.first)
    second = ScriptPolicy(task.second)
    stats = evaluation(first, second, task.games, task.seed, task.turn_cap)
    return stats, first.counters.counts, second.counters.counts


def eval_population(
    pop: Sequence[Individual],
    cfg: GAConfig,
    generation: int = 0,
    executor: Optional[Executor] = None,
) -> List[Individual]:
    """
    Round-robin fitness evaluation.

    Every ordered pair (i, j), i != j, plays repeats_per_seat series of games_per_match
    games with i seated first. Series are independent and may run on an executor; their
    results are reduced in (pair, repeat) order.

    Returns:
        New individuals with fitness = wins / games (0 without games) and merged usage
    """
    size = len(pop)
    keys = [
        (i, j, r)
        for i in range(size)
        for j in range(size)
        if i != j
        for r in range(cfg.repeats_per_seat)
    ]
    tasks = [
        _MatchTask(
            pop[i].script,
            pop[j].script,
            cfg.games_per_match,
            derive_seed(cfg.seed, generation, i, j, r),
            cfg.turn_cap,
        )
        for i, j, r in keys
    ]
    results = executor.map(_run_match, tasks) if executor is not None else map(_run_match, tasks)

    updated = [Individual(ind.script) for ind in pop]
    for (i, j, _), (stats, counts_i, counts_j) in zip(keys, results):
        updated[i].wins += stats.wins_p1
        updated[i].games += stats.games
        updated[i].usage.merge(UsageCounters(counts_i))
        updated[j].wins += stats.wins_p2
        updated[j].games += stats.games
        updated[j].usage.merge(UsageCounters(counts_j))
        logger.debug(
            f"Generation {generation} match {i} vs {j}: "
            f"{stats.wins_p1}-{stats.wins_p2} ({stats.draws} draws)"
        )

    for ind in updated:
        ind.fitness = ind.wins / ind.games if ind.games else 0.0
    return updated
