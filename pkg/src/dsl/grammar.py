"""
Grammar-based random sampling of rules and scripts.
"""
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from src.config.errors import ConfigurationError
from src.config.settings import (
    CARD_COUNT,
    INITIAL_RULE_COUNT_RANGE,
    MAX_CONJUNCTS,
    MAX_RULES,
    RACK_SIZE,
    SINGLE_CONJUNCT_PROBABILITY,
)
from src.dsl.predicates import (
    GivesRacko,
    HasRacko,
    IsBigger,
    IsCardBetweenNumbers,
    IsSmaller,
    Predicate,
    Rule,
    Script,
)


@dataclass(frozen=True)
class GrammarConfig:
    """
    Size limits and sampling knobs for random scripts.

    Raises:
        ConfigurationError: If a bound is below 1, the rule count range is inverted,
            or the probability is outside [0, 1]
    """

    max_rules: int = MAX_RULES
    max_conjuncts: int = MAX_CONJUNCTS
    initial_rule_count_range: Tuple[int, int] = INITIAL_RULE_COUNT_RANGE
    single_conjunct_probability: float = SINGLE_CONJUNCT_PROBABILITY

    def __post_init__(self):
        lo, hi = self.initial_rule_count_range
        if self.max_rules < 1 or self.max_conjuncts < 1 or lo < 1 or hi < 1:
            raise ConfigurationError(f"Grammar bounds must all be >= 1: {self}")
        if lo > hi:
            raise ConfigurationError(f"initial_rule_count_range is inverted: ({lo}, {hi})")
        if not 0.0 <= self.single_conjunct_probability <= 1.0:
            raise ConfigurationError(
                f"single_conjunct_probability must be in [0, 1], "
                f"got {self.single_conjunct_probability}"
            )
        object.__setattr__(self, "initial_rule_count_range", (int(lo), int(hi)))

    def rule_count_bounds(self) -> Tuple[int, int]:
        """Initial rule count range clamped to max_rules."""
        lo, hi = self.initial_rule_count_range
        return min(lo, self.max_rules), min(hi, self.max_rules)


DEFAULT_GRAMMAR = GrammarConfig()


def random_predicate(rng: np.random.Generator) -> Predicate:
    kind = int(rng.integers(5))
    if kind == 0:
        return IsBigger(int(rng.integers(RACK_SIZE)))
    if kind == 1:
        return IsSmaller(int(rng.integers(RACK_SIZE)))
    if kind == 2:
        return GivesRacko()
    if kind == 3:
        return HasRacko()
    lo, hi = rng.integers(CARD_COUNT, size=2)
    return IsCardBetweenNumbers(int(lo), int(hi), int(rng.integers(RACK_SIZE)))


def random_rule(rng: np.random.Generator, cfg: GrammarConfig = DEFAULT_GRAMMAR) -> Rule:
    """
    Sample one rule.

    One conjunct with probability single_conjunct_probability, otherwise a count drawn
    uniformly from [2, max_conjuncts].
    """
    if cfg.max_conjuncts == 1 or rng.random() < cfg.single_conjunct_probability:
        count = 1
    else:
        count = int(rng.integers(2, cfg.max_conjuncts + 1))
    return Rule(tuple(random_predicate(rng) for _ in range(count)))


def random_script(
    rng: np.random.Generator, cfg: GrammarConfig = DEFAULT_GRAMMAR, script_id: str = ""
) -> Script:
    lo, hi = cfg.rule_count_bounds()
    count = int(rng.integers(lo, hi + 1))
    return Script(tuple(random_rule(rng, cfg) for _ in range(count)), id=script_id)
