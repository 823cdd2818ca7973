"""Text format for augmented group systems.

One statement per ``;``, ``#`` starts a comment::

    name bs;
    gens x a;
    eps x=1 a=0;
    rel x a x^-1 a^-2;
    hnn base a;
    amalg a_0;

Within a word, juxtaposition means concatenation, so ``amalg`` separates
its generators of ``U`` with commas: ``amalg a_0 b_1, b_0^2;`` names two.

Optional statements: ``dist``, ``longitude``, ``knot``, ``manifold``,
``fibered``, ``genus`` and ``growth``. ``longitude abelian: <word>;`` marks
a word that only stands in for the longitude under abelian images.
``growth`` takes a numeric expression in integers, ``sqrt``, ``log``,
``exp``, ``pi`` and ``E``.
"""

import logging
import re
from dataclasses import dataclass

import sympy

from ..errors import DslSyntaxError, EpsilonError
from ..words import FreeWord, KernelWord, parse_kernel_word, parse_word
from .presentation import AugmentedGroupSystem, HNNData, Presentation

logger = logging.getLogger(__name__)

KEYWORD = re.compile(r"[a-z]+")
EPS_ENTRY = re.compile(r"([A-Za-z][A-Za-z0-9']*)\s*=\s*([+-]?\d+)$")
FLAGS = ("knot", "manifold", "fibered")
ABELIAN_PREFIX = re.compile(r"abelian\s*:")
GROWTH_EXPR = re.compile(r"(?:\s*(?:\d+(?:\.\d*)?|sqrt|log|exp|pi|E|\*\*|[-+*/^()]))*\s*")


@dataclass
class _Statement:
    keyword: str
    body: str
    line: int
    column: int


def _statements(text: str) -> list[_Statement]:
    out: list[_Statement] = []
    buffer: list[str] = []
    start: tuple[int, int] | None = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        for col, ch in enumerate(line, start=1):
            if ch == ";":
                if start is None:
                    raise DslSyntaxError("empty statement", line_no, col)
                out.append(_split(" ".join(buffer).strip(), *start))
                buffer, start = [], None
                continue
            if start is None:
                if ch.isspace():
                    continue
                start = (line_no, col)
                buffer = [""]
            buffer[-1] += ch
        if start is not None:
            buffer.append("")
    if start is not None:
        raise DslSyntaxError("statement is missing its closing ';'", *start)
    return out


def _split(statement: str, line: int, column: int) -> _Statement:
    match = KEYWORD.match(statement)
    if not match:
        raise DslSyntaxError(f"expected a keyword, got {statement.split()[0]!r}", line, column)
    return _Statement(match.group(0), statement[match.end():].strip(), line, column)


def parse_dsl(text: str) -> AugmentedGroupSystem:
    """Parse the text format into a validated system."""
    fields: dict = {}
    relators: list[tuple[str, _Statement]] = []
    for st in _statements(text):
        try:
            _apply(st, fields, relators)
        except DslSyntaxError:
            raise
        except (ValueError, sympy.SympifyError) as exc:
            if isinstance(exc, EpsilonError):
                raise
            raise DslSyntaxError(str(exc), st.line, st.column) from exc

    if "gens" not in fields:
        raise DslSyntaxError("missing 'gens' statement", 1, 1)
    gens: tuple[str, ...] = fields["gens"]
    if "eps" not in fields:
        raise DslSyntaxError("missing 'eps' statement", 1, 1)
    epsilon: dict[str, int] = fields["eps"]

    words: list[FreeWord] = []
    for body, st in relators:
        try:
            words.append(parse_word(body, gens))
        except ValueError as exc:
            raise DslSyntaxError(str(exc), st.line, st.column) from exc

    distinguished = fields.get("dist")
    if distinguished is None:
        ones = [g for g in gens if epsilon.get(g) == 1]
        if not ones:
            raise EpsilonError("no generator has degree 1 to serve as the distinguished generator")
        distinguished = ones[0]

    longitude = None
    abelian_only = False
    if "longitude" in fields:
        body, st = fields["longitude"]
        prefix = ABELIAN_PREFIX.match(body)
        if prefix:
            abelian_only = True
            body = body[prefix.end():].strip()
        try:
            longitude = parse_word(body, gens)
        except ValueError as exc:
            raise DslSyntaxError(str(exc), st.line, st.column) from exc

    hnn = None
    if "hnn" in fields:
        base = fields["hnn"]
        amalg: list[KernelWord] = []
        if "amalg" in fields:
            body, st = fields["amalg"]
            for chunk in body.split(","):
                try:
                    amalg.append(parse_kernel_word(chunk, base))
                except ValueError as exc:
                    raise DslSyntaxError(str(exc), st.line, st.column) from exc
        hnn = HNNData(base, tuple(amalg))
    elif "amalg" in fields:
        raise DslSyntaxError("'amalg' needs an 'hnn base' statement", fields["amalg"][1].line, 1)

    system = AugmentedGroupSystem(
        presentation=Presentation(gens, tuple(words)),
        epsilon=epsilon,
        distinguished=distinguished,
        longitude=longitude,
        longitude_abelian_only=abelian_only,
        hnn=hnn,
        name=fields.get("name"),
        knot=fields.get("knot", False),
        manifold=fields.get("manifold", False),
        fibered=fields.get("fibered", False),
        genus=fields.get("genus"),
        growth=fields.get("growth"),
    )
    logger.debug("parsed system %s with %d relators", system.label, len(words))
    return system


def _apply(st: _Statement, fields: dict, relators: list) -> None:
    key, body = st.keyword, st.body
    if key == "rel":
        relators.append((body, st))
        return
    if key in fields:
        raise DslSyntaxError(f"duplicate '{key}' statement", st.line, st.column)
    if key == "name":
        fields["name"] = body
    elif key == "gens":
        gens = tuple(body.split())
        if not gens:
            raise DslSyntaxError("'gens' needs at least one generator", st.line, st.column)
        fields["gens"] = gens
    elif key == "eps":
        eps: dict[str, int] = {}
        for entry in re.split(r"\s+(?=[A-Za-z])", body):
            m = EPS_ENTRY.match(entry.strip())
            if not m:
                raise DslSyntaxError(f"bad degree entry {entry!r}", st.line, st.column)
            eps[m.group(1)] = int(m.group(2))
        fields["eps"] = eps
    elif key == "dist":
        fields["dist"] = body
    elif key == "longitude":
        fields["longitude"] = (body, st)
    elif key == "hnn":
        parts = body.split()
        if not parts or parts[0] != "base":
            raise DslSyntaxError("expected 'hnn base <generators>'", st.line, st.column)
        fields["hnn"] = tuple(parts[1:])
    elif key == "amalg":
        fields["amalg"] = (body, st)
    elif key in FLAGS:
        if body:
            raise DslSyntaxError(f"'{key}' takes no arguments", st.line, st.column)
        fields[key] = True
    elif key == "genus":
        fields["genus"] = int(body)
    elif key == "growth":
        fields["growth"] = _growth(body, st)
    else:
        raise DslSyntaxError(f"unknown statement {key!r}", st.line, st.column)


def _growth(body: str, st: _Statement):
    """A constant numeric expression; anything else is refused before sympy sees it."""
    if not GROWTH_EXPR.fullmatch(body):
        raise DslSyntaxError(f"growth {body!r} is not a numeric expression", st.line, st.column)
    try:
        value = sympy.sympify(body)
    except (TypeError, sympy.SympifyError) as exc:
        raise DslSyntaxError(f"growth {body!r} does not parse: {exc}", st.line, st.column) from exc
    if getattr(value, "is_number", False) is not True:
        raise DslSyntaxError(f"growth {body!r} is not a number", st.line, st.column)
    return value


def format_dsl(system: AugmentedGroupSystem) -> str:
    """Print ``system`` in the text format; ``parse_dsl`` reads it back unchanged."""
    lines = []
    if system.name:
        lines.append(f"name {system.name};")
    lines.append("gens " + " ".join(system.generators) + ";")
    lines.append("eps " + " ".join(f"{g}={system.epsilon[g]}" for g in system.generators) + ";")
    lines.append(f"dist {system.distinguished};")
    lines.extend(f"rel {rel};" for rel in system.relators)
    if system.longitude is not None:
        prefix = "abelian: " if system.longitude_abelian_only else ""
        lines.append(f"longitude {prefix}{system.longitude};")
    if system.hnn is not None:
        lines.append("hnn base " + " ".join(system.hnn.base) + ";")
        if system.hnn.amalgamated:
            lines.append("amalg " + ", ".join(str(w) for w in system.hnn.amalgamated) + ";")
    lines.extend(f"{flag};" for flag in FLAGS if getattr(system, flag))
    if system.genus is not None:
        lines.append(f"genus {system.genus};")
    if system.growth is not None:
        lines.append(f"growth {sympy.sstr(system.growth)};")
    return "\n".join(lines) + "\n"


def load_system(path) -> AugmentedGroupSystem:
    with open(path, encoding="utf-8") as fh:
        return parse_dsl(fh.read())


