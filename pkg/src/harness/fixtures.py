"""Published evolved scripts bundled under data/scripts."""
from pathlib import Path
from typing import Dict

from src.config.settings import SCRIPTS_DIR
from src.dsl.predicates import Script
from src.harness.script_files import load_script

FIXTURE_CASES = ("case1", "case2", "case3")
FIXTURE_RULE_COUNTS = {"case1": 7, "case2": 17, "case3": 9}


def fixture_path(case: str) -> Path:
    if case not in FIXTURE_CASES:
        raise ValueError(f"Unknown fixture {case!r}; expected one of {', '.join(FIXTURE_CASES)}")
    return SCRIPTS_DIR / f"{case}.script"


def load_fixture(case: str) -> Script:
    return load_script(fixture_path(case))


def load_all_fixtures() -> Dict[str, Script]:
    return {case: load_fixture(case) for case in FIXTURE_CASES}
