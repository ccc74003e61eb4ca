import argparse
import logging
import sys
from logging import getLogger
from pathlib import Path
from typing import Optional, Sequence

from cavity_memory.api.exceptions import CavityMemoryError
from .commands import run_command
from .config import Experiment, load_config

logger = getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_DOMAIN = 2

_LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def _absolute(path: Optional[str]) -> Optional[str]:
    if path is None:
        return None
    return str(Path(path).resolve())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config", metavar="PATH", help="INI file, defaults if omitted",
    )
    common.add_argument(
        "--out", metavar="PATH", type=Path,
        help="output file, stdout if omitted",
    )
    common.add_argument(
        "--steps", metavar="N", type=int, help="grid steps per photon",
    )
    common.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="INFO with -v, DEBUG with -vv",
    )

    parser = argparse.ArgumentParser(
        prog="cavity-memory",
        description="Impedance-matched single-photon absorption "
                    "in a cavity with a three-level atom.",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser(
        Experiment.DERIVE.value, parents=[common],
        help="derive the control pulse",
    )
    simulate = commands.add_parser(
        Experiment.SIMULATE.value, parents=[common],
        help="simulate absorption under a control pulse",
    )
    simulate.add_argument(
        "--pulse", metavar="PATH", help="pulse CSV written by derive",
    )
    simulate.add_argument(
        "--empty-cavity", action="store_true",
        help="no atom in the cavity",
    )
    sweep = commands.add_parser(
        Experiment.SWEEP.value, parents=[common],
        help="sweep rho0 or cooperativity",
    )
    sweep.add_argument(
        "--jobs", metavar="N", type=int, help="worker processes",
    )
    commands.add_parser(
        Experiment.TIMEBIN.value, parents=[common],
        help="map a time-bin qubit onto the atom",
    )
    return parser


def _overrides(args: argparse.Namespace) -> dict:
    overrides = {"grid.n_steps": args.steps}
    if getattr(args, "jobs", None) is not None:
        overrides["sweep.jobs"] = args.jobs
    if getattr(args, "pulse", None) is not None:
        overrides["simulate.pulse"] = _absolute(args.pulse)
    if getattr(args, "empty_cavity", False):
        overrides["simulate.init"] = "empty"
    return overrides


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    level = _LOG_LEVELS[min(args.verbose, len(_LOG_LEVELS) - 1)]
    logging.basicConfig(level=level, stream=sys.stderr)
    try:
        config = load_config(
            args.config,
            Experiment(args.command),
            overrides=_overrides(args),
            out=args.out,
        )
        return run_command(config)
    except CavityMemoryError as e:
        logger.error("%s failed: %s", args.command, e)
        sys.stderr.write(f"error: {type(e).__name__}: {e}\n")
        return EXIT_DOMAIN
    except Exception:
        logger.exception("Internal error in %s", args.command)
        return EXIT_INTERNAL


def run() -> None:
    sys.exit(main())
