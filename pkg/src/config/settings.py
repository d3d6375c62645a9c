"""
Configuration settings for the Rack'O engine, the script grammar and the evolutionary runs.
"""
import os
from pathlib import Path

BASE_DIR = Path(__file__).resolve().parent.parent.parent
DATA_DIR = BASE_DIR / "data"
SCRIPTS_DIR = DATA_DIR / "scripts"
LOGS_DIR = BASE_DIR / "logs"
OUTPUT_DIR = DATA_DIR / "output"

# Engine settings (simplified game: 40 cards, 5 slots, 2 players)
CARD_COUNT = 40
RACK_SIZE = 5
PLAYERS = 2
TURN_CAP = 500  # Games still running at this turn are draws

# Script grammar settings
MAX_RULES = 20
MAX_CONJUNCTS = 3
INITIAL_RULE_COUNT_RANGE = (1, 8)
SINGLE_CONJUNCT_PROBABILITY = 0.5

# Evolution settings
GAMES_PER_MATCH = 100
REPEATS_PER_SEAT = 3
MUTATION_WEIGHTS = (1.0, 1.0, 1.0, 1.0)  # replace, insert, delete, no-op
DEFAULT_SEED = 0

PRESETS = {
    "case1": {"population_size": 10, "generations": 4, "elites": 7, "tournament_size": 5},
    "case2": {"population_size": 20, "generations": 6, "elites": 7, "tournament_size": 7},
    "case3": {"population_size": 30, "generations": 8, "elites": 10, "tournament_size": 10},
}
for _preset in PRESETS.values():
    _preset.update(games_per_match=GAMES_PER_MATCH, repeats_per_seat=REPEATS_PER_SEAT)

# Output files (relative to the run's output directory)
HISTORY_FILE = "history.csv"
BEST_SCRIPT_FILE = "best.script"
RUN_CONFIG_FILE = "run.json"
GENERATIONS_DIR = "generations"
CSV_FLOAT_FORMAT = "%.6f"

LOG_FILE = LOGS_DIR / "racko.log"
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def max_workers() -> int:
    """Evaluation worker cap, read from RACKO_THREADS on every call."""
    value = os.getenv("RACKO_THREADS")
    if value:
        try:
            return max(1, int(value))
        except ValueError:
            raise ValueError(f"RACKO_THREADS must be a positive integer, got {value!r}")
    return os.cpu_count() or 4
