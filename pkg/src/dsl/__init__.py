"""Decision DSL: predicates, rules, scripts, random sampling and the text format."""
from src.dsl.grammar import DEFAULT_GRAMMAR, GrammarConfig, random_predicate, random_rule, random_script
from src.dsl.parser import ScriptParseError, parse_script, serialize_script
from src.dsl.predicates import (
    PREDICATE_KINDS,
    GivesRacko,
    HasRacko,
    IsBigger,
    IsCardBetweenNumbers,
    IsSmaller,
    Predicate,
    Rule,
    Script,
    eval_predicate,
    rule_fires,
)

__all__ = [
    "DEFAULT_GRAMMAR",
    "PREDICATE_KINDS",
    "GivesRacko",
    "GrammarConfig",
    "HasRacko",
    "IsBigger",
    "IsCardBetweenNumbers",
    "IsSmaller",
    "Predicate",
    "Rule",
    "Script",
    "ScriptParseError",
    "eval_predicate",
    "parse_script",
    "random_predicate",
    "random_rule",
    "random_script",
    "rule_fires",
    "serialize_script",
]
