import argparse
from dataclasses import dataclass

from sympy import isprime

from ..reps import DEFAULT_LIMIT
from ..workers import DEFAULT_THREADS

DEFAULT_SEED = 0
DEFAULT_N_MAX = 20
COMMANDS = ("enumerate", "invariant", "checks", "torsion", "mahler", "cyclic", "corpus")
FORMATS = ("text", "json", "csv")


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str | None = None
    N: int | None = None
    r: int | None = None
    p: int | None = None
    n: int | None = None
    n_max: int = DEFAULT_N_MAX
    rep: str | None = None
    limit: int = DEFAULT_LIMIT
    raw: bool = False
    allow_reducible: bool = False
    format: str = "text"
    threads: int = DEFAULT_THREADS
    seed: int = DEFAULT_SEED
    timestamp: bool = True
    verbose: bool = False
    debug: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            command=args.command,
            input=args.input,
            N=args.N,
            r=args.r,
            p=args.p,
            n=args.n,
            n_max=args.n_max,
            rep=args.rep,
            limit=args.limit,
            raw=args.raw,
            allow_reducible=args.allow_reducible,
            format=args.format,
            threads=args.threads,
            seed=args.seed,
            timestamp=not args.no_timestamp,
            verbose=args.verbose,
            debug=args.debug,
        )

    def validate(self) -> None:
        """Raise ``ValueError`` naming the first field the command cannot run without."""
        if self.command not in COMMANDS:
            raise ValueError(f"command must be one of {', '.join(COMMANDS)}, got {self.command!r}")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {', '.join(FORMATS)}, got {self.format!r}")
        if self.threads < 1:
            raise ValueError(f"threads must be at least 1, got {self.threads}")
        if self.limit < 1:
            raise ValueError(f"limit must be positive, got {self.limit}")
        if self.command == "corpus":
            return
        if self.input is None:
            raise ValueError(f"'{self.command}' needs an input presentation")

        needs_rep = self.command in ("invariant", "checks", "torsion", "mahler")
        if self.command == "enumerate" or (needs_rep and self.rep is None):
            if self.N is None or self.r is None:
                raise ValueError(f"'{self.command}' needs --N and --r, or --rep")
        if self.command == "cyclic":
            if self.p is None or self.r is None:
                raise ValueError("'cyclic' needs --p and --r")
            if not isprime(self.p):
                raise ValueError(f"p must be a prime, got {self.p}")
        if self.command == "torsion" and self.n is None:
            raise ValueError("'torsion' needs --n")
        for name in ("N", "r", "n"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ValueError(f"{name} must be positive, got {value}")
        if self.n_max < 1:
            raise ValueError(f"n_max must be positive, got {self.n_max}")
        if self.format == "csv" and self.command != "mahler":
            raise ValueError("csv output is only available for 'mahler'")
