"""
Genetic operators over scripts: elitism, tournament selection, crossover, mutation and
pruning of rules that never fired.
"""
from typing import List, Sequence, Tuple

import numpy as np

from src.agent.policies import UsageCounters
from src.config.settings import MAX_RULES, MUTATION_WEIGHTS
from src.dsl.grammar import DEFAULT_GRAMMAR, GrammarConfig, random_rule
from src.dsl.predicates import Script
from src.evolve.evaluation import Individual

REPLACE, INSERT, DELETE, NO_OP = range(4)


def _ranked(indices: Sequence[int], pop: Sequence[Individual]) -> List[int]:
    # Descending fitness, earlier position first on ties.
    return sorted(indices, key=lambda i: (-pop[i].fitness, i))


def elite(pop: Sequence[Individual], k: int) -> List[Individual]:
    """The k fittest individuals in descending fitness order."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return [pop[i] for i in _ranked(range(len(pop)), pop)[:k]]


def tournament_select(
    pop: Sequence[Individual], t: int, rng: np.random.Generator
) -> Tuple[Individual, Individual]:
    """
    Sample t distinct individuals (at most the whole population) and return the best two.

    Raises:
        ValueError: If t < 2 or the population has fewer than two members
    """
    if len(pop) < 2:
        raise ValueError(f"Tournament needs at least two individuals, got {len(pop)}")
    if t < 2:
        raise ValueError(f"Tournament size must be >= 2, got {t}")
    sampled = rng.choice(len(pop), size=min(t, len(pop)), replace=False)
    best, second = _ranked([int(i) for i in sampled], pop)[:2]
    return pop[best], pop[second]


def crossover(p1: Script, p2: Script, rng: np.random.Generator, max_rules: int = MAX_RULES) -> Script:
    """
    Two-point concatenation: the head of p1 up to i followed by the tail of p2 from j.

    An empty child becomes one rule copied from a random parent; long children keep
    their first max_rules rules.
    """
    i = int(rng.integers(len(p1) + 1))
    j = int(rng.integers(len(p2) + 1))
    rules = p1.rules[:i] + p2.rules[j:]
    if not rules:
        parent = p1 if rng.integers(2) == 0 else p2
        rules = (parent.rules[int(rng.integers(len(parent)))],)
    return Script(rules[:max_rules])


def mutate(
    s: Script,
    rng: np.random.Generator,
    cfg: GrammarConfig = DEFAULT_GRAMMAR,
    weights: Sequence[float] = MUTATION_WEIGHTS,
) -> Script:
    """
    Apply one operator drawn by weight from replace, insert, delete and no-op.

    Insert at the rule limit and delete on a one-rule script leave the script unchanged.
    """
    probabilities = np.asarray(weights, dtype=float)
    operator = int(rng.choice(4, p=probabilities / probabilities.sum()))
    rules = list(s.rules)
    if operator == REPLACE:
        rules[int(rng.integers(len(rules)))] = random_rule(rng, cfg)
    elif operator == INSERT and len(rules) < cfg.max_rules:
        rules.insert(int(rng.integers(len(rules) + 1)), random_rule(rng, cfg))
    elif operator == DELETE and len(rules) > 1:
        del rules[int(rng.integers(len(rules)))]
    return Script(tuple(rules), id=s.id)


def remove_unused(s: Script, usage: UsageCounters) -> Script:
    """
    Drop rules that never fired, keeping order. If none fired the first rule is kept.

    Raises:
        ValueError: If the counters are not aligned with the script
    """
    if len(usage) != len(s):
        raise ValueError(f"Usage counters of length {len(usage)} do not match a {len(s)}-rule script")
    kept = tuple(rule for rule, count in zip(s.rules, usage.counts) if count > 0)
    return Script(kept or s.rules[:1], id=s.id)


def prune_individual(ind: Individual) -> Individual:
    """remove_unused applied to an individual, keeping its statistics aligned."""
    counts = [c for c in ind.usage.counts if c > 0] or ind.usage.counts[:1]
    return Individual(
        remove_unused(ind.script, ind.usage),
        fitness=ind.fitness,
        usage=UsageCounters(counts),
        wins=ind.wins,
        games=ind.games,
    )
