"""Command line entry point

::

    multiphoton list
    multiphoton run --experiment NAME [--param k=v]... [--scan p:start:stop:steps]
                    [--seed S] [--out DIR] [--format csv,json] [--config FILE] [--threads N]

Exit status is 0 when every check passes, 1 when a check fails, 2 for usage and parameter
errors and 3 when the results cannot be written.
"""
import argparse
from pathlib import Path
from typing import List
from typing import Optional
from typing import Sequence

from multiphoton_interference import __about__
from multiphoton_interference import config
from multiphoton_interference import constants
from multiphoton_interference import exceptions
from multiphoton_interference import experiments
from multiphoton_interference import logger
from multiphoton_interference import results


EXIT_SUCCESS: int = 0
EXIT_CHECK_FAILED: int = 1
EXIT_USAGE: int = 2
EXIT_IO: int = 3


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multiphoton", description=__about__.__summary__)
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__about__.__version__}"
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Increase the reporter verbosity; repeat for more detail",
    )
    parser.add_argument(
        "-q",
        "--quiet",
        action="count",
        default=0,
        help="Decrease the reporter verbosity",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("list", help="List the available experiments")

    run = commands.add_parser("run", help="Run one experiment and write its results")
    run.add_argument("--experiment", help="Name of the experiment to run")
    run.add_argument(
        "--param",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="Experiment parameter; may be repeated",
    )
    run.add_argument("--scan", metavar="PARAM:START:STOP:STEPS", help="Scan to run")
    run.add_argument("--seed", type=int, help="Seed of the random streams")
    run.add_argument(
        "--out",
        type=Path,
        help=f"Output directory; defaults to ${constants.OUTPUT_ENV_VAR} or the working directory",
    )
    run.add_argument(
        "--format",
        dest="formats",
        help=f"Comma separated output formats out of {','.join(constants.OUTPUT_FORMATS)}",
    )
    run.add_argument("--config", type=Path, help="INI file with the run configuration")
    run.add_argument(
        "--threads",
        type=int,
        help="Number of scan points to evaluate simultaneously; set to 0 to disable threading",
    )
    return parser


def _run_config(args: argparse.Namespace) -> config.RunConfig:
    file_values = config.load_config(args.config) if args.config else {}
    return config.build_config(
        file_values,
        {
            "experiment": args.experiment,
            "parameters": dict(config.parse_param(item) for item in args.param),
            "scan": config.parse_scan(args.scan) if args.scan else None,
            "seed": args.seed,
            "output_dir": args.out,
            "formats": config.parse_formats(args.formats) if args.formats else None,
            "threads": args.threads,
        },
    )


def run(run_config: config.RunConfig) -> int:
    """Run one configured experiment and write its outputs

    :returns: Exit status
    """
    try:
        experiment = experiments.get_experiment(run_config.experiment)
        parameters = dict(run_config.parameters)
        if run_config.seed is not None:
            if "seed" in experiment.parameters:
                parameters["seed"] = run_config.seed
            else:
                logger.debug(f"Experiment '{experiment.name}' is deterministic; ignoring the seed")
        result = experiment.execute(parameters, run_config.scan, run_config.threads)
    except exceptions.MultiphotonError as err:
        logger.error(str(err))
        return EXIT_USAGE

    result.metadata.setdefault("seed", run_config.seed)
    try:
        written: List[Path] = []
        if "csv" in run_config.formats:
            written.append(results.write_csv(result, run_config.output_dir))
        if "json" in run_config.formats:
            written.append(results.write_summary(result, parameters, run_config.output_dir))
    except OSError as err:
        logger.error(f"Failed to write results to {run_config.output_dir}: {err}")
        return EXIT_IO

    for path in written:
        logger.info(f"Wrote {path}")
    for check in result.checks:
        if not check.passed:
            logger.warning(
                f"Check '{check.name}' failed: expected {check.expected!r}, got {check.actual!r} "
                f"(tolerance {check.tolerance!r})"
            )
    passed = sum(check.passed for check in result.checks)
    print(f"{result.experiment_name}: {passed}/{len(result.checks)} checks passed")
    return EXIT_SUCCESS if result.passed else EXIT_CHECK_FAILED


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of the ``multiphoton`` console script

    :param argv: Arguments without the program name; defaults to ``sys.argv[1:]``
    :returns: Exit status
    """
    try:
        args = _parser().parse_args(argv)
    except SystemExit as err:
        return int(err.code or 0)

    logger.configure(args.verbose, args.quiet)

    if args.command == "list":
        print(experiments.list_experiments())
        return EXIT_SUCCESS

    try:
        run_config = _run_config(args)
    except exceptions.MultiphotonError as err:
        logger.error(str(err))
        return EXIT_USAGE

    try:
        return run(run_config)
    except Exception as err:
        logger.error(f"Internal error: {err}")
        raise err
