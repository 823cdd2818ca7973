import logging
import sys
import traceback
from typing import TextIO

from ..errors import ComputationError
from .config import RunConfig
from .report import render
from .runner import Runner

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2
EXIT_CHECK_FAILED = 3


class Executor:
    """Runs one command and turns its outcome into a report stream and an exit status."""

    def __init__(self, out: TextIO | None = None, err: TextIO | None = None):
        self.out = out or sys.stdout
        self.err = err or sys.stderr
        self.runner = Runner()

    def execute(self, config: RunConfig) -> int:
        try:
            config.validate()
            report = self.runner.run(config)
        except ComputationError as e:
            self._fail("Computation error", e, config)
            return EXIT_INTERNAL
        except (ValueError, OSError) as e:
            self._fail("Input error", e, config)
            return EXIT_INPUT
        except Exception as e:
            self._fail("Internal error", e, config)
            return EXIT_INTERNAL

        self.out.write(render(report, config))
        self.out.flush()
        if report.failed:
            logger.warning("checks failed: %s", ", ".join(report.failed))
            return EXIT_CHECK_FAILED
        return EXIT_OK

    def _fail(self, kind: str, error: Exception, config: RunConfig) -> None:
        print(f"{kind}: {error}", file=self.err)
        if config.debug:
            traceback.print_exception(error, file=self.err)
