import json

import pytest

from src.cli import read_text
from src.groups import kernel_presentation, normalize, parse_dsl
from src.reps import PeriodicRep

KNOTS = ("trefoil.agp", "fig8.agp", "7_3.agp")


def load(name: str):
    return parse_dsl(read_text(name))


def load_rep_named(name: str) -> PeriodicRep:
    return PeriodicRep.from_json(json.loads(read_text(name)))


@pytest.fixture
def bs():
    return load("bs.agp")


@pytest.fixture
def bs_rep():
    return load_rep_named("bs_rep.json")


@pytest.fixture
def trefoil():
    return load("trefoil.agp")


@pytest.fixture
def fig8():
    return load("fig8.agp")


@pytest.fixture
def knot_7_3():
    return load("7_3.agp")


@pytest.fixture
def rep_7_3():
    return load_rep_named("7_3_rep.json")


@pytest.fixture
def vanish():
    return load("vanish.agp")


@pytest.fixture
def vanish_rep():
    return load_rep_named("vanish_rep.json")


@pytest.fixture
def trefoil_kp(trefoil):
    return kernel_presentation(normalize(trefoil))


@pytest.fixture
def corpus_system():
    return load


@pytest.fixture
def corpus_rep():
    return load_rep_named
