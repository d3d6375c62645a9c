"""
Parameters of an evolutionary run.
"""
from dataclasses import asdict, dataclass, fields
from typing import Any, Dict, Tuple

from src.config.errors import ConfigurationError
from src.config.settings import (
    DEFAULT_SEED,
    GAMES_PER_MATCH,
    MUTATION_WEIGHTS,
    PRESETS,
    REPEATS_PER_SEAT,
    TURN_CAP,
)
from src.dsl.grammar import DEFAULT_GRAMMAR, GrammarConfig

_CASE1 = PRESETS["case1"]


@dataclass(frozen=True)
class GAConfig:
    """
    Population and evaluation parameters. Defaults reproduce the smallest experiment preset.

    Raises:
        ConfigurationError: If any parameter violates its bounds
    """

    population_size: int = _CASE1["population_size"]
    generations: int = _CASE1["generations"]
    elites: int = _CASE1["elites"]
    tournament_size: int = _CASE1["tournament_size"]
    games_per_match: int = GAMES_PER_MATCH
    repeats_per_seat: int = REPEATS_PER_SEAT
    turn_cap: int = TURN_CAP
    seed: int = DEFAULT_SEED
    grammar: GrammarConfig = DEFAULT_GRAMMAR
    mutation_weights: Tuple[float, float, float, float] = MUTATION_WEIGHTS

    def __post_init__(self):
        object.__setattr__(self, "mutation_weights", tuple(float(w) for w in self.mutation_weights))
        self.validate()

    def validate(self):
        p, k, t = self.population_size, self.elites, self.tournament_size
        problems = []
        if self.generations < 1:
            problems.append(f"generations must be >= 1 (got {self.generations})")
        if not 1 <= k <= p:
            problems.append(f"elites must satisfy 1 <= k <= population_size (got k={k}, P={p})")
        if not 2 <= t <= p:
            problems.append(
                f"tournament_size must satisfy 2 <= t <= population_size (got t={t}, P={p})"
            )
        if self.games_per_match < 1:
            problems.append(f"games_per_match must be >= 1 (got {self.games_per_match})")
        if self.repeats_per_seat < 1:
            problems.append(f"repeats_per_seat must be >= 1 (got {self.repeats_per_seat})")
        if self.turn_cap < 1:
            problems.append(f"turn_cap must be >= 1 (got {self.turn_cap})")
        weights = self.mutation_weights
        if len(weights) != 4 or any(w < 0 for w in weights) or sum(weights) <= 0:
            problems.append(
                f"mutation_weights must be 4 non-negative values with a positive sum (got {weights})"
            )
        if problems:
            raise ConfigurationError("Invalid GA configuration: " + "; ".join(problems))

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["grammar"]["initial_rule_count_range"] = list(self.grammar.initial_rule_count_range)
        data["mutation_weights"] = list(self.mutation_weights)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GAConfig":
        """
        Build a config from a plain mapping (e.g. a JSON document).

        Raises:
            ConfigurationError: For unknown keys or invalid values
        """
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigurationError(f"Unknown GA configuration keys: {', '.join(unknown)}")
        values = dict(data)
        if isinstance(values.get("grammar"), dict):
            values["grammar"] = grammar_from_dict(values["grammar"])
        try:
            return cls(**values)
        except TypeError as e:
            raise ConfigurationError(f"Invalid GA configuration: {e}")


def grammar_from_dict(data: Dict[str, Any]) -> GrammarConfig:
    known = {f.name for f in fields(GrammarConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigurationError(f"Unknown grammar configuration keys: {', '.join(unknown)}")
    values = dict(data)
    if "initial_rule_count_range" in values:
        values["initial_rule_count_range"] = tuple(values["initial_rule_count_range"])
    try:
        return GrammarConfig(**values)
    except (TypeError, ValueError) as e:
        raise ConfigurationError(f"Invalid grammar configuration: {e}")
