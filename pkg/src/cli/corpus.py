import logging
from importlib import resources
from pathlib import Path

from ..errors import InputError

logger = logging.getLogger(__name__)

SUFFIXES = (".agp", ".json")


def _data():
    return resources.files(__package__) / "data"


def corpus() -> list[str]:
    """File names of the bundled inputs, sorted."""
    return sorted(entry.name for entry in _data().iterdir() if entry.name.endswith(SUFFIXES))


def read_text(name: str) -> str:
    entry = _data() / name
    if not entry.is_file():
        raise InputError(f"{name!r} is not in the bundled corpus")
    return entry.read_text(encoding="utf-8")


def resolve(path: str) -> Path:
    """``path`` itself when it exists, otherwise the bundled file with the same name."""
    candidate = Path(path)
    if candidate.exists():
        return candidate
    bundled = _data() / candidate.name
    if bundled.is_file():
        logger.info("%s not found on disk, using the bundled copy", path)
        with resources.as_file(bundled) as real:
            return Path(real)
    raise InputError(f"no such file {path!r}, and no bundled input named {candidate.name!r}")
