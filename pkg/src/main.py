import argparse
import logging
import sys

from .cli import COMMANDS, DEFAULT_N_MAX, DEFAULT_SEED, FORMATS, Executor, RunConfig
from .reps import DEFAULT_LIMIT
from .workers import DEFAULT_THREADS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Twisted Alexander polynomials of periodic representations.")
    parser.add_argument("command", choices=COMMANDS, help="What to compute")
    parser.add_argument("input", nargs="?", help="Presentation file (.agp); bundled names also work")
    parser.add_argument("--N", type=int, help="Degree of the symmetric group")
    parser.add_argument("--r", type=int, help="Period of the representation")
    parser.add_argument("--p", type=int, help="Prime for cyclic representations")
    parser.add_argument("--n", type=int, help="Branched cover index for torsion")
    parser.add_argument("--n-max", type=int, default=DEFAULT_N_MAX, help="Largest n in the growth experiment")
    parser.add_argument("--rep", type=str, help="Representation JSON file, bypassing enumeration")
    parser.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="Search budget in nodes")
    parser.add_argument("--raw", action="store_true", help="Keep every representation, no deduplication")
    parser.add_argument("--allow-reducible", action="store_true", help="Accept non-transitive representations")
    parser.add_argument("--format", choices=FORMATS, default="text", help="Report format")
    parser.add_argument("--threads", type=int, default=DEFAULT_THREADS, help="Worker threads")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed for randomized checks")
    parser.add_argument("--no-timestamp", action="store_true", help="Leave the timestamp out of the report")
    parser.add_argument("--verbose", action="store_true", help="Log progress to stderr")
    parser.add_argument("--debug", action="store_true", help="Debug logging and tracebacks")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig.from_args(args)

    level = logging.DEBUG if config.debug else logging.INFO if config.verbose else logging.WARNING
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    return Executor().execute(config)


if __name__ == "__main__":
    sys.exit(main())
