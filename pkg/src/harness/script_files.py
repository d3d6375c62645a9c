"""
Script file loading and policy specifiers.
"""
import logging
from pathlib import Path
from typing import Union

from src.agent.policies import BaselinePolicy, PassPolicy, Policy, RandomPolicy, ScriptPolicy
from src.dsl.grammar import DEFAULT_GRAMMAR, GrammarConfig
from src.dsl.parser import ScriptParseError, parse_script
from src.dsl.predicates import Script

logger = logging.getLogger(__name__)

SCRIPT_PREFIX = "script:"


class ScriptFileReader:
    """
    Read and parse a script file.
    """

    def __init__(self, file_path: Union[str, Path], grammar: GrammarConfig = DEFAULT_GRAMMAR):
        """
        Args:
            file_path: Path to the script file
            grammar: Limits applied while parsing

        Raises:
            FileNotFoundError: If the file doesn't exist
            ScriptParseError: If the file is empty
        """
        self.file_path = Path(file_path)
        self.grammar = grammar
        self._validate_file()

    def _validate_file(self):
        if not self.file_path.is_file():
            raise FileNotFoundError(f"Script file not found: {self.file_path}")
        if self.file_path.stat().st_size == 0:
            raise ScriptParseError(f"script file is empty: {self.file_path}", 1)

    def read_text(self) -> str:
        try:
            return self.file_path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise ValueError(f"Cannot read script file: {self.file_path}\nError: {e}")

    def read_script(self) -> Script:
        script = parse_script(self.read_text(), self.grammar, script_id=self.file_path.stem)
        logger.info(f"Loaded {len(script)}-rule script from {self.file_path}")
        return script


def load_script(path: Union[str, Path], grammar: GrammarConfig = DEFAULT_GRAMMAR) -> Script:
    return ScriptFileReader(path, grammar).read_script()


def policy_from_spec(spec: str, seed: int = 0) -> Policy:
    """
    Build a policy from a command-line specifier.

    Args:
        spec: `script:<path>`, `baseline`, `random` or `pass`
        seed: Seed for the random policy's fallback stream

    Raises:
        ValueError: For an unknown specifier
        FileNotFoundError, ScriptParseError: For unreadable or invalid scripts
    """
    if spec.startswith(SCRIPT_PREFIX):
        return ScriptPolicy(load_script(spec[len(SCRIPT_PREFIX):]))
    if spec == "baseline":
        return BaselinePolicy()
    if spec == "random":
        return RandomPolicy(seed)
    if spec == "pass":
        return PassPolicy()
    raise ValueError(f"Unknown policy specifier {spec!r}; use script:<path>, baseline, random or pass")
