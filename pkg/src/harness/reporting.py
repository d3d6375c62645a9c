"""Tabular outputs: per-generation history and match summaries."""
import logging
import os
from pathlib import Path
from typing import List

import pandas as pd

from src.config.settings import CSV_FLOAT_FORMAT
from src.evolve.evaluation import SeatBalancedResult
from src.evolve.ezs import GenerationStats

logger = logging.getLogger(__name__)

HISTORY_COLUMNS = ["generation", "best_fitness", "mean_fitness", "population_size", "best_script_path"]
MATCH_COLUMNS = ["seating", "games", "p1_wins", "p2_wins", "draws", "p1_rate", "p2_rate"]


def write_text_atomic(path: Path, text: str):
    """Write through a temporary sibling so readers never see a partial file."""
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    os.replace(tmp, path)


def write_csv(df: pd.DataFrame, path: Path):
    write_text_atomic(path, df.to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n"))


class HistoryAggregator:
    """
    Collect generation records into the history table.
    """

    def __init__(self):
        self.records: List[dict] = []

    def add_generation(self, stats: GenerationStats, script_path: str):
        self.records.append({
            "generation": stats.generation,
            "best_fitness": stats.best_fitness,
            "mean_fitness": stats.mean_fitness,
            "population_size": stats.population_size,
            "best_script_path": script_path,
        })

    def get_history(self) -> pd.DataFrame:
        """
        Returns:
            DataFrame with one row per generation, columns as HISTORY_COLUMNS
        """
        if not self.records:
            logger.warning("No generation records available")
            return pd.DataFrame(columns=HISTORY_COLUMNS)
        history = pd.DataFrame(self.records, columns=HISTORY_COLUMNS)
        history = history.sort_values("generation").reset_index(drop=True)
        logger.info(f"Generated history: {len(history)} generations")
        return history


def match_summary(result: SeatBalancedResult) -> pd.DataFrame:
    """Per-seating and combined win counts; p1 is the first policy named on the command line."""
    a, b = result.p1_first, result.p2_first
    rows = [
        ("p1_first", a.games, a.wins_p1, a.wins_p2, a.draws),
        ("p2_first", b.games, b.wins_p2, b.wins_p1, b.draws),
        ("combined", result.games, result.p1_wins, result.p2_wins, result.draws),
    ]
    summary = pd.DataFrame(rows, columns=MATCH_COLUMNS[:5])
    games = summary["games"].where(summary["games"] > 0)
    summary["p1_rate"] = (summary["p1_wins"] / games).fillna(0.0)
    summary["p2_rate"] = (summary["p2_wins"] / games).fillna(0.0)
    return summary
