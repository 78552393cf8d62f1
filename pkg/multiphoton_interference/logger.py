"""Terminal reporting through the tox reporter

Messages are tagged with :data:`constants.REPORTER_PREFIX` and routed to the reporter level
matching their severity: progress of an experiment goes to ``info`` (shown with ``-v``),
per-step numerical detail to ``debug`` (shown with ``-vv``).
"""
import tox

from multiphoton_interference import constants


def configure(verbose: int = 0, quiet: int = 0):
    """Set the verbosity of the shared reporter

    :param verbose: Number of verbosity increments requested (``-v`` flags)
    :param quiet: Number of verbosity decrements requested (``-q`` flags)
    """
    tox.reporter.update_default_reporter(quiet, verbose)


def _tag(message: str) -> str:
    return f"{constants.REPORTER_PREFIX} {message}"


def error(message: str):
    """Report a failure that ends the current run"""
    tox.reporter.error(_tag(message))


def warning(message: str):
    """Report a recoverable problem, such as a clipped eigenvalue"""
    tox.reporter.warning(_tag(message))


def info(message: str):
    """Report experiment milestones at verbosity level 1"""
    tox.reporter.verbosity1(_tag(message))


def debug(message: str):
    """Report per-step detail at verbosity level 2"""
    tox.reporter.verbosity2(_tag(message))
