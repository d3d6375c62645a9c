"""
Command-line entry point: `racko evolve | play | validate | gen-random`.

Exit codes: 0 success, 1 usage/config/parse error, 2 runtime fault.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

import numpy as np

from src.config.errors import ConfigurationError
from src.config.settings import (
    DEFAULT_SEED,
    INITIAL_RULE_COUNT_RANGE,
    LOG_FORMAT,
    LOG_LEVEL,
    MAX_CONJUNCTS,
    MAX_RULES,
    OUTPUT_DIR,
    PRESETS,
    SINGLE_CONJUNCT_PROBABILITY,
    TURN_CAP,
    max_workers,
)
from src.dsl.grammar import GrammarConfig, random_script
from src.dsl.parser import ScriptParseError, serialize_script
from src.evolve.evaluation import seat_balanced_match
from src.harness.pipeline import EvolutionPipeline
from src.harness.reporting import match_summary, write_csv
from src.harness.run_config import resolve_run_config
from src.harness.script_files import load_script, policy_from_spec

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAULT = 2


class UsageError(Exception):
    """Raised for malformed command lines."""


class CliParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def configure_logging(log_file: Optional[Path] = None):
    handlers: List[logging.Handler] = [logging.StreamHandler()]
    if log_file is not None:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=getattr(logging, LOG_LEVEL.upper(), logging.INFO),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )


def cmd_evolve(args) -> int:
    overrides = {
        "population_size": args.population,
        "generations": args.generations,
        "elites": args.elites,
        "tournament_size": args.tournament,
        "games_per_match": args.games,
        "repeats_per_seat": args.repeats,
        "turn_cap": args.turn_cap,
        "seed": args.seed,
    }
    run_config = resolve_run_config(args.preset, args.config, overrides, args.out)
    EvolutionPipeline(run_config, workers=max_workers()).run()
    return EXIT_OK


def cmd_play(args) -> int:
    p1 = policy_from_spec(args.p1, args.seed)
    p2 = policy_from_spec(args.p2, args.seed)
    result = seat_balanced_match(p1, p2, args.games, args.seed, args.turn_cap)
    summary = match_summary(result)
    for row in summary.itertuples(index=False):
        print(
            f"{row.seating}: games={row.games} {args.p1}={row.p1_wins} {args.p2}={row.p2_wins} "
            f"draws={row.draws} {args.p1}_rate={row.p1_rate:.6f} {args.p2}_rate={row.p2_rate:.6f}"
        )
    if args.csv:
        write_csv(summary, Path(args.csv))
        logger.info(f"✓ Match summary saved: {args.csv}")
    return EXIT_OK


def cmd_validate(args) -> int:
    script = load_script(args.path)
    sys.stdout.write(serialize_script(script))
    return EXIT_OK


def cmd_gen_random(args) -> int:
    try:
        grammar = GrammarConfig(
            max_rules=args.max_rules,
            max_conjuncts=args.max_conjuncts,
            initial_rule_count_range=tuple(args.rule_count),
            single_conjunct_probability=args.single_conjunct_probability,
        )
    except ValueError as e:
        raise ConfigurationError(str(e))
    rng = np.random.default_rng(args.seed & ((1 << 64) - 1))
    sys.stdout.write(serialize_script(random_script(rng, grammar)))
    return EXIT_OK


def build_parser() -> CliParser:
    parser = CliParser(prog="racko", description="Rack'O script evolution toolkit")
    commands = parser.add_subparsers(dest="command", required=True)

    evolve = commands.add_parser("evolve", help="Evolve a script population")
    evolve.add_argument("--preset", help=f"One of: {', '.join(sorted(PRESETS))}")
    evolve.add_argument("--config", type=Path, help="JSON file mirroring GAConfig field names")
    evolve.add_argument("--seed", type=int, help="Master seed")
    evolve.add_argument("--out", type=Path, default=OUTPUT_DIR, help="Output directory")
    evolve.add_argument("--population", type=int, help="Population size (P)")
    evolve.add_argument("--generations", type=int, help="Generations (G)")
    evolve.add_argument("--elites", type=int, help="Elites carried over (k)")
    evolve.add_argument("--tournament", type=int, help="Tournament size (t)")
    evolve.add_argument("--games", type=int, help="Games per match (n)")
    evolve.add_argument("--repeats", type=int, help="Repeats per seat (m)")
    evolve.add_argument("--turn-cap", type=int, help="Turn at which a game is a draw")
    evolve.add_argument("--log-file", type=Path, help="Also write the run log to this file")
    evolve.set_defaults(handler=cmd_evolve)

    play = commands.add_parser("play", help="Play a seat-balanced match between two policies")
    play.add_argument("p1", help="script:<path> | baseline | random | pass")
    play.add_argument("p2", help="script:<path> | baseline | random | pass")
    play.add_argument("--games", type=int, default=1000)
    play.add_argument("--seed", type=int, default=DEFAULT_SEED)
    play.add_argument("--turn-cap", type=int, default=TURN_CAP)
    play.add_argument("--csv", help="Write the match summary to this CSV file")
    play.set_defaults(handler=cmd_play)

    validate = commands.add_parser("validate", help="Parse a script and print its canonical form")
    validate.add_argument("path", type=Path)
    validate.set_defaults(handler=cmd_validate)

    gen = commands.add_parser("gen-random", help="Print a random script")
    gen.add_argument("--seed", type=int, default=DEFAULT_SEED)
    gen.add_argument("--max-rules", type=int, default=MAX_RULES)
    gen.add_argument("--max-conjuncts", type=int, default=MAX_CONJUNCTS)
    gen.add_argument(
        "--rule-count", type=int, nargs=2, metavar=("MIN", "MAX"), default=list(INITIAL_RULE_COUNT_RANGE)
    )
    gen.add_argument("--single-conjunct-probability", type=float, default=SINGLE_CONJUNCT_PROBABILITY)
    gen.set_defaults(handler=cmd_gen_random)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"racko: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    configure_logging(getattr(args, "log_file", None))
    try:
        if getattr(args, "games", None) is not None and args.games < 1:
            raise ConfigurationError(f"--games must be >= 1, got {args.games}")
        return args.handler(args)
    except (ConfigurationError, ScriptParseError, FileNotFoundError, ValueError) as e:
        logger.error(str(e))
        print(f"racko: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        logger.error(f"Runtime fault: {e}", exc_info=True)
        print(f"racko: fault: {e}", file=sys.stderr)
        return EXIT_FAULT


if __name__ == "__main__":
    sys.exit(main())
