"""
Long-running end-to-end checks. Deselected by default; run with `pytest -m slow`.
"""
import math
from concurrent.futures import ProcessPoolExecutor

import numpy as np
import pytest

from src.agent.policies import BaselinePolicy, RandomPolicy, ScriptPolicy
from src.config.settings import max_workers
from src.dsl.grammar import random_script
from src.dsl.parser import parse_script, serialize_script
from src.dsl.predicates import GivesRacko, Rule
from src.evolve.evaluation import (
    Individual,
    derive_seed,
    eval_population,
    pool_win_rate,
    seat_balanced_match,
)
from src.evolve.operators import prune_individual
from src.game.engine import has_racko
from src.harness.cli import main
from src.harness.pipeline import EvolutionPipeline
from src.harness.run_config import resolve_run_config
from tests.helpers import swap_ctx

pytestmark = pytest.mark.slow

MASTER_SEED = 42
POOL_GAMES = 500


def binomial_upper_tail(successes: int, trials: int) -> float:
    """P(X >= successes) for X ~ Binomial(trials, 1/2)."""
    return sum(math.comb(trials, k) for k in range(successes, trials + 1)) / 2**trials


@pytest.fixture(scope="module")
def case1_run(tmp_path_factory):
    out = tmp_path_factory.mktemp("case1")
    run_config = resolve_run_config("case1", overrides={"seed": MASTER_SEED}, out_dir=out)
    report = EvolutionPipeline(run_config, workers=max_workers()).run()
    return run_config, report


class TestOracles:
    def test_has_racko_against_sorting(self):
        rng = np.random.default_rng(0)
        for _ in range(100_000):
            rack = tuple(int(c) for c in rng.choice(40, size=5, replace=False))
            assert has_racko(rack) == (list(rack) == sorted(rack))

    def test_gives_racko_against_has_racko(self):
        rng = np.random.default_rng(1)
        rule = Rule((GivesRacko(),))
        for _ in range(100_000):
            cards = rng.choice(40, size=6, replace=False)
            ctx = swap_ctx(tuple(int(c) for c in cards[:5]), int(cards[5]), int(rng.integers(5)))
            assert rule.fires(ctx) == has_racko(ctx.resulting_hand)

    def test_random_scripts_round_trip_through_text(self):
        rng = np.random.default_rng(2)
        for _ in range(1000):
            script = random_script(rng)
            assert parse_script(serialize_script(script)) == script


class TestBaselineStrength:
    def test_baseline_beats_random(self):
        result = seat_balanced_match(BaselinePolicy(), RandomPolicy(), 2000, seed=7)
        assert result.p1_rate > 0.5
        assert binomial_upper_tail(result.p1_wins, result.games) < 0.01

    @pytest.mark.parametrize("case", ["case1", "case2", "case3"])
    def test_published_scripts_lose_to_baseline(self, published_scripts, case):
        result = seat_balanced_match(ScriptPolicy(published_scripts[case]), BaselinePolicy(), 1000, seed=11)
        assert 0.5 <= result.p2_rate < 1.0
        assert result.p1_wins >= 1


class TestEvolutionRun:
    """The smallest preset, end to end."""

    def test_best_beats_fresh_random_scripts(self, case1_run):
        run_config, report = case1_run
        pool = [BaselinePolicy(), RandomPolicy(MASTER_SEED)]
        evolved = pool_win_rate(report.best_script, pool, POOL_GAMES, MASTER_SEED)

        rng = np.random.default_rng(derive_seed(MASTER_SEED, 1))
        fresh = max(
            pool_win_rate(random_script(rng, run_config.ga.grammar), pool, POOL_GAMES, MASTER_SEED)
            for _ in range(10)
        )
        assert evolved >= fresh

    def test_elites_survive(self, case1_run):
        _, report = case1_run
        for g, elites in enumerate(report.elites):
            for script in elites:
                assert script in report.populations[g + 1]

    def test_pruned_scripts_replay_identically(self, case1_run):
        run_config, report = case1_run
        with ProcessPoolExecutor(max_workers=max_workers()) as pool:
            for g, scripts in enumerate(report.populations):
                population = [Individual(script) for script in scripts]
                evaluated = eval_population(population, run_config.ga, g, pool)
                replay = eval_population([prune_individual(ind) for ind in evaluated], run_config.ga, g, pool)
                assert [(i.wins, i.games) for i in replay] == [(i.wins, i.games) for i in evaluated]

    def test_outputs_are_reproducible(self, case1_run, tmp_path, monkeypatch):
        run_config, _ = case1_run
        monkeypatch.setenv("RACKO_THREADS", "1")
        assert main(["evolve", "--preset", "case1", "--seed", str(MASTER_SEED), "--out", str(tmp_path)]) == 0
        for name in ("history.csv", "best.script", "run.json"):
            assert (tmp_path / name).read_bytes() == (run_config.out_dir / name).read_bytes()
