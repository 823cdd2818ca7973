import pytest
import sympy

from src.cli import corpus
from src.errors import DslSyntaxError, EpsilonError, InputError
from src.groups import (
    AugmentedGroupSystem,
    Presentation,
    alexander_matrix,
    format_dsl,
    is_normalized,
    kernel_presentation,
    normalize,
    parse_dsl,
    untwisted_alexander,
)
from src.alexmod import wada_invariant
from src.laurent import LaurentPoly
from src.reps import identity
from src.words import parse_word


def test_parse_bs(bs):
    assert bs.generators == ("x", "a")
    assert bs.distinguished == "x"
    assert bs.epsilon == {"x": 1, "a": 0}
    assert [str(r) for r in bs.relators] == ["x a x^-1 a^-2"]
    assert bs.hnn.base == ("a",)
    assert [str(w) for w in bs.hnn.amalgamated] == ["a_0"]
    assert is_normalized(bs)


def test_parse_metadata(fig8, knot_7_3):
    assert fig8.knot and fig8.manifold and fig8.fibered
    assert fig8.genus == 1
    assert sympy.simplify(fig8.growth - (3 + sympy.sqrt(5)) / 2) == 0
    assert knot_7_3.genus == 2
    assert not knot_7_3.fibered
    assert str(knot_7_3.longitude) == "a x a x^-1 a^-1 x a^-1 x^-1"
    assert knot_7_3.longitude_abelian_only
    assert not fig8.longitude_abelian_only


def test_missing_semicolon_reports_line():
    text = "gens x a;\neps x=1 a=0;\nrel x a x^-1 a^-2\n"
    with pytest.raises(DslSyntaxError) as info:
        parse_dsl(text)
    assert info.value.line == 3
    assert info.value.column == 1


def test_unknown_statement():
    with pytest.raises(DslSyntaxError, match="unknown statement"):
        parse_dsl("gens x a;\neps x=1 a=0;\nrelator x a x^-1 a^-1;\n")


def test_unknown_generator_in_relator():
    with pytest.raises(DslSyntaxError) as info:
        parse_dsl("gens x a;\neps x=1 a=0;\nrel x b x^-1 a^-1;\n")
    assert info.value.line == 3


def test_relator_outside_kernel():
    with pytest.raises(EpsilonError) as info:
        parse_dsl("gens x a b;\neps x=1 a=0 b=0;\nrel x a;\n")
    assert info.value.relator == "x a"


def test_longitude_must_lie_in_kernel():
    with pytest.raises(EpsilonError):
        parse_dsl("gens x a;\neps x=1 a=0;\nrel x a x^-1 a^-2;\nlongitude x a;\n")


def test_distinguished_defaults_to_first_degree_one_generator():
    system = parse_dsl("gens y x;\neps y=1 x=1;\nrel y x y x^-1 y^-1 x^-1;\n")
    assert system.distinguished == "y"
    chosen = parse_dsl("gens y x;\neps y=1 x=1;\ndist x;\nrel y x y x^-1 y^-1 x^-1;\n")
    assert chosen.distinguished == "x"


def test_presentation_needs_positive_deficiency():
    with pytest.raises(InputError):
        Presentation(("x", "a"), (parse_word("x a x^-1 a^-2"), parse_word("a^3")))


def test_hnn_base_must_be_degree_zero():
    with pytest.raises(InputError, match="HNN base"):
        parse_dsl("gens x a;\neps x=1 a=0;\nrel x a x^-1 a^-2;\nhnn base x;\n")


@pytest.mark.parametrize("name", [n for n in corpus() if n.endswith(".agp")])
def test_format_round_trip(corpus_system, name):
    system = corpus_system(name)
    assert parse_dsl(format_dsl(system)) == system


def test_normalize_trefoil(trefoil):
    normal = normalize(trefoil)
    assert normal.generators == ("x", "y'")
    assert normal.epsilon == {"x": 1, "y'": 0}
    assert [str(r) for r in normal.relators] == ["x y' x y'^-1 x^-2 y'^-1"]
    assert str(normal.longitude) == "x y' x^2 y' x^2 y' x^-5"
    assert normalize(normal) is normal


def test_kernel_presentation_of_trefoil(trefoil_kp):
    assert trefoil_kp.generators == ("y'",)
    assert [str(t) for t in trefoil_kp.templates] == ["y'_1 y'_2^-1 y'_0^-1"]
    assert [str(t) for t in trefoil_kp.instances(2)] == ["y'_3 y'_4^-1 y'_2^-1"]


def test_kernel_presentation_of_vanish(vanish):
    kp = kernel_presentation(vanish)
    assert kp.generators == ("a", "b")
    assert [str(t) for t in kp.templates] == ["a_1 b_0^-1", "a_0 b_0 a_0^-1 b_0^-1"]


@pytest.mark.parametrize(
    "name, expected",
    [
        ("trefoil.agp", "1 - t + t^2"),
        ("fig8.agp", "1 - 3*t + t^2"),
        ("7_3.agp", "2 - 3*t + 3*t^2 - 3*t^3 + 2*t^4"),
        ("bs.agp", "2 - t"),
        ("vanish.agp", "0"),
    ],
)
def test_untwisted_alexander(corpus_system, name, expected):
    assert str(untwisted_alexander(corpus_system(name))) == expected


def test_alexander_matrix_of_bs(bs):
    (row,) = alexander_matrix(bs)
    assert row == [LaurentPoly([-2, 1], var="t")]


@pytest.mark.parametrize(
    "text, expected",
    [
        # eps(y) = 2
        ("gens x y;\neps x=1 y=2;\nrel y x y x^-1 y^-1 x^-2;\n", [1, 0, -1, 1]),
        # eps(y) = 3
        ("gens x y;\neps x=1 y=3;\nrel y x^-1 y^-1 x y x^-3;\n", [1, -2]),
        # mixed signs
        ("gens x y z;\neps x=1 y=2 z=-1;\nrel y z^2;\nrel z x y x^-2;\n", [1, -1, -1]),
    ],
)
def test_normalize_keeps_alexander_polynomial(text, expected):
    raw = parse_dsl(text)
    assert not is_normalized(raw)
    normal = normalize(raw)
    assert is_normalized(normal)
    assert all(normal.epsilon[g] == 0 for g in normal.base_generators)
    assert len(normal.generators) == len(raw.generators)
    trivial = {g: identity(1) for g in raw.generators}
    delta = LaurentPoly(expected, var="t")
    assert wada_invariant(raw, trivial) == delta
    assert untwisted_alexander(raw) == delta


def test_normalize_degree_two_substitution():
    raw = parse_dsl("gens x y;\neps x=1 y=2;\nrel y x y x^-1 y^-1 x^-2;\n")
    normal = normalize(raw)
    assert normal.generators == ("x", "y'")
    assert [str(r) for r in normal.relators] == ["y' x^3 y' x^-1 y'^-1 x^-2"]


def test_amalgamated_words_are_comma_separated():
    system = parse_dsl(
        "gens x a b;\neps x=1 a=0 b=0;\nrel x a x^-1 b^-1;\nhnn base a b;\namalg a_0 b_1, b_0^2;\n"
    )
    assert [str(w) for w in system.hnn.amalgamated] == ["a_0 b_1", "b_0^2"]
    assert parse_dsl(format_dsl(system)) == system


def test_abelian_only_longitude():
    text = "gens x a;\neps x=1 a=0;\nrel x a x^-1 a^-2;\nlongitude abelian: a;\n"
    system = parse_dsl(text)
    assert system.longitude_abelian_only
    assert str(system.longitude) == "a"
    assert "longitude abelian: a;" in format_dsl(system)
    assert parse_dsl(format_dsl(system)) == system
    plain = parse_dsl(text.replace("abelian: ", ""))
    assert not plain.longitude_abelian_only


def test_abelian_only_flag_needs_a_longitude(bs):
    with pytest.raises(InputError):
        AugmentedGroupSystem(bs.presentation, bs.epsilon, "x", longitude_abelian_only=True)


@pytest.mark.parametrize("body", ["(3 + sqrt(5))/2", "2^(1/2)", "1.5", "exp(1) - pi/4"])
def test_growth_accepts_numeric_expressions(body):
    system = parse_dsl(f"gens x a;\neps x=1 a=0;\nrel x a x^-1 a^-2;\ngrowth {body};\n")
    assert system.growth.is_number


@pytest.mark.parametrize("body", ["__import__('os').getcwd()", "x + 1", "lambda: 1", "[1]", "sqrt()", "2 +"])
def test_growth_refuses_other_text(body):
    with pytest.raises(DslSyntaxError) as info:
        parse_dsl(f"gens x a;\neps x=1 a=0;\nrel x a x^-1 a^-2;\ngrowth {body};\n")
    assert info.value.line == 4
