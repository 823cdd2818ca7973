from .config import COMMANDS, DEFAULT_N_MAX, DEFAULT_SEED, FORMATS, RunConfig
from .corpus import corpus, read_text, resolve
from .executor import EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_INTERNAL, EXIT_OK, Executor
from .report import render
from .runner import Report, Runner

__all__ = [
    "COMMANDS",
    "DEFAULT_N_MAX",
    "DEFAULT_SEED",
    "EXIT_CHECK_FAILED",
    "EXIT_INPUT",
    "EXIT_INTERNAL",
    "EXIT_OK",
    "FORMATS",
    "Executor",
    "Report",
    "RunConfig",
    "Runner",
    "corpus",
    "read_text",
    "render",
    "resolve",
]
