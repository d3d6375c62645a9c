"""
Evolution run orchestrator: configuration, search, output files and run summary.
"""
import json
import logging
import time
from typing import Optional

from src.config.settings import BEST_SCRIPT_FILE, GENERATIONS_DIR, HISTORY_FILE, RUN_CONFIG_FILE
from src.dsl.parser import serialize_script
from src.evolve.ezs import EvolutionReport, ezs
from src.harness.reporting import HistoryAggregator, write_csv, write_text_atomic
from src.harness.run_config import RunConfig

logger = logging.getLogger(__name__)


class EvolutionPipeline:
    """
    Evolution run with the following stages:
    1. Configuration: log the resolved parameters
    2. Evolution: run EZS over the configured generations
    3. Outputs: per-generation best scripts, history.csv, best.script, run.json
    """

    def __init__(self, run_config: RunConfig, workers: int = 1):
        """
        Args:
            run_config: Resolved run configuration
            workers: Evaluation processes (output never depends on this)
        """
        self.run_config = run_config
        self.workers = workers
        self.out_dir = run_config.out_dir
        self.report: Optional[EvolutionReport] = None
        self.start_time = None
        self.end_time = None

    def run(self) -> EvolutionReport:
        """Execute the complete run."""
        logger.info("=" * 80)
        logger.info("Starting Evolution Run")
        logger.info("=" * 80)
        self.start_time = time.time()
        try:
            self._log_config()
            self._evolve()
            self._generate_outputs()
            self.end_time = time.time()
            self._log_summary()
            logger.info("=" * 80)
            logger.info("Evolution run completed successfully!")
            logger.info("=" * 80)
        except Exception as e:
            logger.error(f"Evolution run failed: {e}", exc_info=True)
            raise
        return self.report

    def _log_config(self):
        logger.info("-" * 80)
        logger.info("Stage 1: Configuration")
        logger.info("-" * 80)
        cfg = self.run_config.ga
        logger.info(f"Preset: {self.run_config.preset or 'none'}")
        logger.info(
            f"Population={cfg.population_size}, Generations={cfg.generations}, "
            f"Elites={cfg.elites}, Tournament={cfg.tournament_size}"
        )
        logger.info(
            f"Games per match={cfg.games_per_match}, Repeats per seat={cfg.repeats_per_seat}, "
            f"Turn cap={cfg.turn_cap}, Seed={cfg.seed}"
        )
        logger.info(f"Workers: {self.workers}")
        logger.info(f"Output directory: {self.out_dir}")

    def _evolve(self):
        logger.info("-" * 80)
        logger.info("Stage 2: Evolution")
        logger.info("-" * 80)
        self.report = ezs(self.run_config.ga, workers=self.workers)

    def _generate_outputs(self):
        logger.info("-" * 80)
        logger.info("Stage 3: Writing Outputs")
        logger.info("-" * 80)
        generations_dir = self.out_dir / GENERATIONS_DIR
        generations_dir.mkdir(parents=True, exist_ok=True)

        aggregator = HistoryAggregator()
        for stats in self.report.generations:
            relative = f"{GENERATIONS_DIR}/gen_{stats.generation:03d}.script"
            write_text_atomic(self.out_dir / relative, serialize_script(stats.best_script))
            aggregator.add_generation(stats, relative)

        history_file = self.out_dir / HISTORY_FILE
        write_csv(aggregator.get_history(), history_file)
        logger.info(f"✓ History saved: {history_file}")

        run_file = self.out_dir / RUN_CONFIG_FILE
        write_text_atomic(run_file, json.dumps(self.run_config.to_dict(), indent=2, sort_keys=True) + "\n")
        logger.info(f"✓ Run configuration saved: {run_file}")

        best_file = self.out_dir / BEST_SCRIPT_FILE
        write_text_atomic(best_file, serialize_script(self.report.best_script))
        logger.info(f"✓ Best script saved: {best_file}")
        logger.info(f"  - {len(self.report.best_script)} rules, fitness {self.report.best_fitness:.4f}")

    def _log_summary(self):
        logger.info("-" * 80)
        logger.info("Run Summary")
        logger.info("-" * 80)
        duration = self.end_time - self.start_time
        minutes = int(duration // 60)
        seconds = int(duration % 60)
        logger.info(f"Execution time: {minutes}m {seconds}s")
        for stats in self.report.generations:
            logger.info(
                f"  - generation {stats.generation}: best {stats.best_fitness:.4f}, "
                f"mean {stats.mean_fitness:.4f}"
            )
