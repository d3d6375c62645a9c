"""
The generational loop: evaluate, prune, record, then breed elites plus tournament offspring.
"""
import logging
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from src.dsl.grammar import random_script
from src.dsl.predicates import Script
from src.evolve.config import GAConfig
from src.evolve.evaluation import Individual, derive_seed, eval_population
from src.evolve.operators import crossover, elite, mutate, prune_individual, tournament_select

logger = logging.getLogger(__name__)

BREEDING_STREAM = 0x455A53  # separates the breeding stream from game seeds


@dataclass(frozen=True)
class GenerationStats:
    generation: int
    best_fitness: float
    mean_fitness: float
    population_size: int
    best_script: Script


@dataclass
class EvolutionReport:
    """
    Per-generation history of a run.

    populations[g] holds the scripts evaluated in generation g (before pruning) and
    elites[g] the pruned elites carried from generation g into g + 1.
    """

    generations: List[GenerationStats] = field(default_factory=list)
    best_script: Optional[Script] = None
    best_fitness: float = 0.0
    populations: List[List[Script]] = field(default_factory=list)
    elites: List[List[Script]] = field(default_factory=list)


def _breed(
    population: List[Individual], cfg: GAConfig, rng: np.random.Generator, generation: int
) -> List[Individual]:
    survivors = elite(population, cfg.elites)
    offspring = [Individual(ind.script) for ind in survivors]
    for c in range(cfg.population_size - cfg.elites):
        a, b = tournament_select(population, cfg.tournament_size, rng)
        child = crossover(a.script, b.script, rng, cfg.grammar.max_rules)
        child = mutate(child, rng, cfg.grammar, cfg.mutation_weights)
        offspring.append(Individual(Script(child.rules, id=f"g{generation}-c{c}")))
    return offspring


def _run(cfg: GAConfig, executor: Optional[Executor]) -> EvolutionReport:
    rng = np.random.default_rng(derive_seed(cfg.seed, BREEDING_STREAM))
    population = [
        Individual(random_script(rng, cfg.grammar, script_id=f"g0-{i}"))
        for i in range(cfg.population_size)
    ]
    report = EvolutionReport()

    for generation in range(cfg.generations):
        report.populations.append([ind.script for ind in population])
        population = eval_population(population, cfg, generation, executor)
        population = [prune_individual(ind) for ind in population]

        best = elite(population, 1)[0]
        stats = GenerationStats(
            generation=generation,
            best_fitness=best.fitness,
            mean_fitness=float(np.mean([ind.fitness for ind in population])),
            population_size=len(population),
            best_script=best.script,
        )
        report.generations.append(stats)
        logger.info(
            f"Generation {generation}: best={stats.best_fitness:.4f} "
            f"mean={stats.mean_fitness:.4f} best_rules={len(best.script)}"
        )

        if generation < cfg.generations - 1:
            report.elites.append([ind.script for ind in elite(population, cfg.elites)])
            population = _breed(population, cfg, rng, generation + 1)

    best = elite(population, 1)[0]
    report.best_script = best.script
    report.best_fitness = best.fitness
    return report


def ezs(cfg: GAConfig, workers: int = 1, executor: Optional[Executor] = None) -> EvolutionReport:
    """
    Evolve a script population.

    Args:
        cfg: Run parameters; validated before any work
        workers: Process count for match evaluation when no executor is given
        executor: Optional executor for match evaluation

    Returns:
        EvolutionReport; identical for a given cfg.seed whatever the worker count

    Raises:
        ConfigurationError: If cfg is invalid
    """
    cfg.validate()
    logger.info(
        f"EZS: P={cfg.population_size} G={cfg.generations} k={cfg.elites} "
        f"t={cfg.tournament_size} n={cfg.games_per_match} m={cfg.repeats_per_seat} seed={cfg.seed}"
    )
    if executor is not None or workers <= 1:
        return _run(cfg, executor)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return _run(cfg, pool)
