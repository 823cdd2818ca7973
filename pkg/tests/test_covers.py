import math

import pytest

from src.alexmod import PASS, SKIPPED
from src.covers import (
    IntMatrix,
    branched_cover_matrix,
    branched_homology,
    degenerate_n,
    fibered_spectral_check,
    least_squares_slope,
    mahler_growth_experiment,
    smith_diagonal,
    smith_normal_form,
    torsion_number,
)
from src.covers.growth import CSV_FIELDS, GrowthRow
from src.errors import InputError, VanishingPolynomialError
from src.groups import kernel_presentation, normalize, untwisted_alexander
from src.laurent import LaurentPoly, cyclotomic_power, resultant
from src.reps import trivial_rep

GOLDEN = (3 + math.sqrt(5)) / 2
SQUARE = IntMatrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])


def knot_rep(system):
    return trivial_rep(kernel_presentation(normalize(system)))


@pytest.mark.parametrize("method", ["exact", "elimination", "modular", "auto"])
def test_smith_normal_form_square(method):
    form = smith_normal_form(SQUARE, method)
    assert form.invariant_factors == (2, 6, 12)
    assert form.torsion == 144
    assert form.free_rank == 0
    assert abs(SQUARE.det()) == 144


@pytest.mark.parametrize("method", ["exact", "elimination"])
def test_smith_normal_form_rectangular(method):
    form = smith_normal_form(IntMatrix([[2, 0, 0], [0, 3, 0]]), method)
    assert form.invariant_factors == (1, 6)
    assert form.torsion_factors() == (6,)
    assert form.free_rank == 1


def test_smith_diagonal_modular_reduction():
    assert sorted(smith_diagonal(SQUARE.rows)) == [2, 6, 12]
    assert sorted(math.gcd(d, 144) for d in smith_diagonal(SQUARE.rows, 144)) == [2, 6, 12]


def test_smith_normal_form_rejects_bad_input():
    with pytest.raises(ValueError):
        smith_normal_form(IntMatrix([[1, 2], [2, 4]]), "modular")
    with pytest.raises(ValueError):
        smith_normal_form(SQUARE, "magic")
    assert smith_normal_form(IntMatrix([])).torsion == 1


def test_transpose_and_empty():
    assert SQUARE.transpose().transpose() == SQUARE
    assert smith_normal_form(SQUARE.transpose()).invariant_factors == (2, 6, 12)
    assert IntMatrix([]).det() == 1
    with pytest.raises(ValueError):
        IntMatrix([[1, 2]]).det()


def test_branched_cover_matrix_of_trefoil(trefoil):
    m = branched_cover_matrix(trefoil, knot_rep(trefoil), 2)
    assert m.shape == (2, 2)
    assert abs(m.det()) == 3


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 3), (3, 4), (4, 3), (5, 1), (7, 1), (8, 3), (9, 4)])
def test_trefoil_torsion(trefoil, n, expected):
    assert torsion_number(trefoil, knot_rep(trefoil), n) == expected


@pytest.mark.parametrize("n", [6, 12])
def test_trefoil_degenerate_covers(trefoil, n):
    form = branched_homology(trefoil, knot_rep(trefoil), n)
    assert form.free_rank == 2
    assert form.torsion == 1
    assert degenerate_n(untwisted_alexander(trefoil).with_var("s"), n)


@pytest.mark.parametrize("n, expected", [(2, 5), (3, 16), (4, 45)])
def test_fig8_torsion_is_resultant(fig8, n, expected):
    rep = knot_rep(fig8)
    assert torsion_number(fig8, rep, n) == expected
    delta = untwisted_alexander(fig8)
    assert abs(resultant(delta, cyclotomic_power(n, "t"))) == expected


def test_torsion_methods_agree(knot_7_3):
    rep = knot_rep(knot_7_3)
    matrix = branched_cover_matrix(knot_7_3, rep, 5)
    assert smith_normal_form(matrix, "exact") == smith_normal_form(matrix, "elimination")


def test_branched_covers_need_a_knot(bs, bs_rep):
    with pytest.raises(InputError):
        torsion_number(bs, bs_rep, 2)


def test_branched_covers_need_positive_n(trefoil):
    with pytest.raises(InputError):
        torsion_number(trefoil, knot_rep(trefoil), 0)


def test_degenerate_ignores_factors_of_s_minus_one():
    D = LaurentPoly.from_expr("(s-1)**2*(s-4)")
    assert not degenerate_n(D, 3)
    assert degenerate_n(LaurentPoly([1, 1]), 2)
    assert not degenerate_n(LaurentPoly([1, 1]), 3)


def test_least_squares_slope():
    rows = [GrowthRow(n, 2**n, 2.0, 0, False) for n in range(1, 6)]
    assert math.isclose(least_squares_slope(rows), math.log(2))
    rows.append(GrowthRow(6, 1, 1.0, 2, True))
    assert math.isclose(least_squares_slope(rows), math.log(2))
    assert least_squares_slope(rows[:1]) is None


@pytest.mark.slow
def test_fig8_growth_approaches_mahler_measure(fig8):
    table = mahler_growth_experiment(fig8, knot_rep(fig8), 20)
    assert abs(table.mahler - GOLDEN) < 1e-9
    assert [row.n for row in table.rows] == list(range(1, 21))
    assert not any(row.degenerate for row in table.rows)
    assert [row.b for row in table.rows[1:4]] == [5, 16, 45]
    assert abs(table.rows[-1].b_pow - GOLDEN) < 0.05
    assert abs(table.growth_estimate - GOLDEN) < 0.1
    assert table.final_gap < 0.05
    assert len(table.last_three) == 3


def test_growth_table_json_and_csv(fig8):
    table = mahler_growth_experiment(fig8, knot_rep(fig8), 4, threads=2)
    data = table.to_json()
    assert data["D"]["text"] == "1 - 3*s + s^2"
    assert [row["b"] for row in data["rows"]] == ["1", "5", "16", "45"]
    lines = table.to_csv().splitlines()
    assert lines[0] == ",".join(CSV_FIELDS) == "n,b,b_pow,free_rank,degenerate"
    assert lines[2].startswith("2,5,")
    assert len(lines) == 5


def test_trefoil_growth_skips_degenerate_n(trefoil):
    table = mahler_growth_experiment(trefoil, knot_rep(trefoil), 7)
    assert [row.n for row in table.rows if row.degenerate] == [6]
    assert any("degenerate" in note for note in table.notes)
    assert abs(table.mahler - 1.0) < 1e-9


def test_growth_of_vanishing_polynomial_is_refused(vanish, vanish_rep):
    with pytest.raises(VanishingPolynomialError):
        mahler_growth_experiment(vanish, vanish_rep, 3)


def test_spectral_check_fig8_is_sharp(fig8):
    result = fibered_spectral_check(fig8, knot_rep(fig8))
    assert result.status == PASS
    assert result.witness["equality"]
    assert abs(result.witness["root_modulus"] - GOLDEN) < 1e-9


def test_spectral_check_trefoil(trefoil):
    result = fibered_spectral_check(trefoil, knot_rep(trefoil))
    assert result.status == PASS
    assert result.witness["growth"] == 1.0


def test_spectral_check_skips_non_fibered(knot_7_3, rep_7_3):
    result = fibered_spectral_check(knot_7_3, rep_7_3, D=LaurentPoly([1, -1]))
    assert result.status == SKIPPED
    assert result.witness["reason"] == "no growth metadata"
