"""
Script text format: recursive-descent parser and canonical serializer.

Canonical form, one rule per line:

    givesRacko(a)
    isCardBetweenNumbers(a, 25, 29, 0) and isSmaller(a, 1)
    hasRacko(rack)

Lenient input also accepts the verbose call form printed for evolved scripts, e.g.
`DSL.isSmaller(a, 2 , Game.getRack() )`, including a missing comma before the trailing
`Game.getRack()` argument.
"""
import logging
import re
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from src.dsl.grammar import DEFAULT_GRAMMAR, GrammarConfig
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

logger = logging.getLogger(__name__)

COMMENT_PREFIX = "#"

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<punct>[().,]))"
)


class ScriptParseError(ValueError):
    """Raised for malformed script text. `line` is 1-based."""

    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    column: int


# Argument items after parsing: ("name", "a"), ("int", "12"), ("rack", "")
_Arg = Tuple[str, str]
_RACK: _Arg = ("rack", "")
_ACTION: _Arg = ("name", "a")


def _tokenize(source: str, line: int) -> List[_Token]:
    tokens = []
    pos = 0
    source = source.rstrip()
    while pos < len(source):
        match = _TOKEN_RE.match(source, pos)
        if not match:
            raise ScriptParseError(f"unexpected character {source[pos:].lstrip()[:1]!r}", line)
        kind = match.lastgroup
        tokens.append(_Token(kind, match.group(kind), match.start(kind) + 1))
        pos = match.end()
    return tokens


class _RuleParser:
    """Recursive descent over the tokens of one rule line."""

    def __init__(self, tokens: List[_Token], line: int):
        self.tokens = tokens
        self.pos = 0
        self.line = line

    def _peek(self, offset: int = 0) -> Optional[_Token]:
        index = self.pos + offset
        return self.tokens[index] if index < len(self.tokens) else None

    def _error(self, message: str) -> ScriptParseError:
        token = self._peek()
        where = f" at column {token.column}" if token else " at end of line"
        return ScriptParseError(message + where, self.line)

    def _expect(self, text: str) -> _Token:
        token = self._peek()
        if token is None or token.text != text:
            found = repr(token.text) if token else "end of line"
            raise self._error(f"expected {text!r}, found {found}")
        self.pos += 1
        return token

    def parse_rule(self) -> Rule:
        conjuncts = [self._parse_call()]
        while self._peek() is not None:
            self._expect("and")
            conjuncts.append(self._parse_call())
        return Rule(tuple(conjuncts))

    def _parse_call(self) -> Predicate:
        token = self._peek()
        if token is not None and token.text == "DSL":
            self.pos += 1
            self._expect(".")
            token = self._peek()
        if token is None or token.kind != "name":
            raise self._error("expected a predicate name")
        self.pos += 1
        self._expect("(")
        args = self._parse_args()
        self._expect(")")
        return self._build(token.text, args)

    def _at_rack_ref(self) -> bool:
        token = self._peek()
        return token is not None and token.text == "Game"

    def _parse_args(self) -> List[_Arg]:
        args: List[_Arg] = []
        token = self._peek()
        if token is None or token.text == ")":
            return args
        args.append(self._parse_arg())
        while True:
            token = self._peek()
            if token is not None and token.text == ",":
                self.pos += 1
                args.append(self._parse_arg())
            elif self._at_rack_ref():
                args.append(self._parse_arg())
            else:
                return args

    def _parse_arg(self) -> _Arg:
        token = self._peek()
        if token is None:
            raise self._error("expected an argument")
        if token.text == "Game":
            self.pos += 1
            self._expect(".")
            self._expect("getRack")
            self._expect("(")
            self._expect(")")
            return _RACK
        if token.kind == "int":
            self.pos += 1
            return ("int", token.text)
        if token.kind == "name":
            self.pos += 1
            return _RACK if token.text == "rack" else ("name", token.text)
        raise self._error(f"unexpected {token.text!r} in argument list")

    def _build(self, name: str, args: List[_Arg]) -> Predicate:
        if name == "givesRacko":
            self._check_shape(name, args, ["a"])
            return GivesRacko()
        if name == "hasRacko":
            if args != [_RACK]:
                raise ScriptParseError(f"{name} takes a single rack argument", self.line)
            return HasRacko()
        if name in ("isBigger", "isSmaller"):
            values = self._check_shape(name, args, ["a", "I"])
            cls = IsBigger if name == "isBigger" else IsSmaller
            return self._construct(cls, values)
        if name == "isCardBetweenNumbers":
            values = self._check_shape(name, args, ["a", "LO", "HI", "I"])
            return self._construct(IsCardBetweenNumbers, values)
        raise ScriptParseError(f"unknown predicate {name!r}", self.line)

    def _check_shape(self, name: str, args: List[_Arg], shape: List[str]) -> List[int]:
        # An optional trailing Game.getRack() is accepted and dropped.
        if len(args) == len(shape) + 1 and args[-1] == _RACK:
            args = args[:-1]
        signature = f"{name}({', '.join(shape)})"
        if len(args) != len(shape) or args[0] != _ACTION:
            raise ScriptParseError(f"expected {signature}", self.line)
        if any(kind != "int" for kind, _ in args[1:]):
            raise ScriptParseError(f"expected integer arguments in {signature}", self.line)
        return [int(text) for _, text in args[1:]]

    def _construct(self, cls, values: List[int]) -> Predicate:
        try:
            return cls(*values)
        except ValueError as e:
            raise ScriptParseError(f"{cls.__name__}: {e}", self.line)


def _rule_lines(text: str) -> Iterator[Tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith(COMMENT_PREFIX):
            yield number, stripped


def parse_script(text: str, grammar: GrammarConfig = DEFAULT_GRAMMAR, script_id: str = "") -> Script:
    """
    Parse script text in canonical or lenient form.

    Args:
        text: Script source
        grammar: Limits on rule and conjunct counts
        script_id: Identifier attached to the parsed script

    Returns:
        Parsed Script

    Raises:
        ScriptParseError: For unknown predicates, malformed calls, out-of-range arguments,
            too many rules or conjuncts, or a script with no rules
    """
    rules = []
    for line, source in _rule_lines(text):
        rule = _RuleParser(_tokenize(source, line), line).parse_rule()
        if len(rule.conjuncts) > grammar.max_conjuncts:
            raise ScriptParseError(
                f"rule has {len(rule.conjuncts)} conjuncts, limit is {grammar.max_conjuncts}", line
            )
        rules.append(rule)
        if len(rules) > grammar.max_rules:
            raise ScriptParseError(f"script exceeds {grammar.max_rules} rules", line)
    if not rules:
        raise ScriptParseError("script contains no rules", max(1, len(text.splitlines())))
    return Script(tuple(rules), id=script_id)


def serialize_script(script: Script) -> str:
    """Canonical short form, one rule per line, LF-terminated."""
    return "".join(rule.to_text() + "\n" for rule in script.rules)
