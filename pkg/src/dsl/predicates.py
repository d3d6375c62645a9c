"""
The five decision predicates, and the rule and script structures built from them.

Every predicate is judged against an ActionContext: a candidate move and the hand it would
produce. "The card below" slot i is slot i+1, so an ascending rack increases with the index.
"""
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Tuple, Union

from src.config.settings import CARD_COUNT, RACK_SIZE
from src.game.engine import has_racko

if TYPE_CHECKING:
    from src.agent.context import ActionContext


def _check_index(index: int):
    if not 0 <= index < RACK_SIZE:
        raise ValueError(f"index {index} out of range [0, {RACK_SIZE - 1}]")


def _check_number(number: int):
    if not 0 <= number < CARD_COUNT:
        raise ValueError(f"number {number} out of range [0, {CARD_COUNT - 1}]")


@dataclass(frozen=True)
class IsBigger:
    """Placed card into slot `index` is bigger than the card below it."""

    index: int

    def __post_init__(self):
        _check_index(self.index)

    def evaluate(self, ctx: "ActionContext") -> bool:
        hand = ctx.resulting_hand
        below = self.index + 1
        return ctx.placed_slot == self.index and below < len(hand) and hand[self.index] > hand[below]

    def to_text(self) -> str:
        return f"isBigger(a, {self.index})"


@dataclass(frozen=True)
class IsSmaller:
    """Placed card into slot `index` is smaller than the card below it."""

    index: int

    def __post_init__(self):
        _check_index(self.index)

    def evaluate(self, ctx: "ActionContext") -> bool:
        hand = ctx.resulting_hand
        below = self.index + 1
        return ctx.placed_slot == self.index and below < len(hand) and hand[self.index] < hand[below]

    def to_text(self) -> str:
        return f"isSmaller(a, {self.index})"


@dataclass(frozen=True)
class GivesRacko:
    """The move completes a Rack'O."""

    def evaluate(self, ctx: "ActionContext") -> bool:
        return ctx.placed_slot is not None and has_racko(ctx.resulting_hand)

    def to_text(self) -> str:
        return "givesRacko(a)"


@dataclass(frozen=True)
class HasRacko:
    """The hand is already a Rack'O before the move."""

    def evaluate(self, ctx: "ActionContext") -> bool:
        return has_racko(ctx.current_hand)

    def to_text(self) -> str:
        return "hasRacko(rack)"


@dataclass(frozen=True)
class IsCardBetweenNumbers:
    """
    Placed card into slot `index` lies in the closed interval spanned by lo and hi.

    Bounds are kept as written; inverted bounds describe the same interval.
    """

    lo: int
    hi: int
    index: int

    def __post_init__(self):
        _check_number(self.lo)
        _check_number(self.hi)
        _check_index(self.index)

    def evaluate(self, ctx: "ActionContext") -> bool:
        if ctx.placed_slot != self.index:
            return False
        return min(self.lo, self.hi) <= ctx.placed_value <= max(self.lo, self.hi)

    def to_text(self) -> str:
        return f"isCardBetweenNumbers(a, {self.lo}, {self.hi}, {self.index})"


Predicate = Union[IsBigger, IsSmaller, GivesRacko, HasRacko, IsCardBetweenNumbers]
PREDICATE_KINDS = (IsBigger, IsSmaller, GivesRacko, HasRacko, IsCardBetweenNumbers)


def eval_predicate(predicate: Predicate, ctx: "ActionContext") -> bool:
    return predicate.evaluate(ctx)


@dataclass(frozen=True)
class Rule:
    """Conjunction of one or more predicates."""

    conjuncts: Tuple[Predicate, ...]

    def __post_init__(self):
        if not self.conjuncts:
            raise ValueError("A rule needs at least one predicate")

    def fires(self, ctx: "ActionContext") -> bool:
        return all(p.evaluate(ctx) for p in self.conjuncts)

    def to_text(self) -> str:
        return " and ".join(p.to_text() for p in self.conjuncts)


def rule_fires(rule: Rule, ctx: "ActionContext") -> bool:
    return rule.fires(ctx)


@dataclass(frozen=True)
class Script:
    """Ordered rule list; earlier rules take priority. The id never affects equality."""

    rules: Tuple[Rule, ...]
    id: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.rules:
            raise ValueError("A script needs at least one rule")

    def __len__(self) -> int:
        return len(self.rules)
