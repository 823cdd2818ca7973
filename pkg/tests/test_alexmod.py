import pytest
from sympy.combinatorics import Permutation

from src.alexmod import (
    PASS,
    SKIPPED,
    PolyMatrix,
    alexander_lin,
    alexander_lin_polynomial,
    char_poly,
    determinant_bareiss,
    determinant_interpolation,
    fox_jacobian,
    minor_gcd,
    order_delta0,
    run_checks,
    twisted_jacobian,
    wada_invariant,
)
from src.alexmod.order import evaluation_points, newton_coefficients
from src.errors import RepresentationError
from src.groups import alexander_matrix, kernel_presentation, normalize, parse_dsl, untwisted_alexander
from src.laurent import LaurentPoly, exact_quotient, is_reciprocal, multiplicity, power_transform
from src.reps import PeriodicRep, enumerate_periodic, identity, trivial_rep

BS_D = LaurentPoly([4, -9, 6, -1])
S_MINUS_ONE = LaurentPoly([-1, 1])


def matrix(rows, var="s"):
    return PolyMatrix([[LaurentPoly.from_expr(e, var) for e in row] for row in rows], var)


def statuses(report):
    return {c.key: c.status for c in report.checks}


def test_evaluation_points():
    assert evaluation_points(5) == [0, 1, -1, 2, -2]


def test_newton_coefficients():
    xs = [0, 1, -1]
    ys = [1 + 2 * x + 3 * x * x for x in xs]
    assert newton_coefficients(xs, ys) == [1, 2, 3]


def test_determinant_strategies_agree():
    m = matrix([["s - 1", "2", "0"], ["s^2", "s + 3", "1"], ["1", "-s", "s^-1"]])
    assert determinant_interpolation(m) == determinant_bareiss(m)


def test_order_of_small_matrices():
    assert order_delta0(matrix([["s - 1", "0"], ["0", "s - 4"]])) == LaurentPoly([4, -5, 1])
    assert order_delta0(matrix([["s - 1", "1"]])).is_zero()
    assert order_delta0(PolyMatrix([[], []])) == LaurentPoly.one()
    assert order_delta0(PolyMatrix.identity(3)) == LaurentPoly.one()
    assert order_delta0(matrix([["s - 1"], ["s^2 - 1"]])) == LaurentPoly([1, -1])


def test_minor_gcd():
    square = matrix([["s - 1", "0"], ["0", "s - 1"], ["0", "0"]])
    assert minor_gcd(square) == LaurentPoly([1, -2, 1])
    unit = matrix([["s - 1", "0"], ["0", "1"], ["1", "0"]])
    assert order_delta0(unit) == LaurentPoly.one()


def test_minor_gcd_confirms_screened_minors():
    # s^2 + s + 2 is even at every integer, so it passes the screen against 2
    # without being a multiple of it
    m = matrix([["2"], ["s^2 + s + 2"]])
    assert minor_gcd(m) == LaurentPoly.one()
    m = matrix([["s - 1"], ["s^2 - 1"], ["s^3 - 1"], ["2*s - 2"]])
    assert minor_gcd(m) == LaurentPoly([1, -1])


def test_minor_gcd_skips_determinants_of_screened_minors(monkeypatch):
    from src.alexmod import order

    calls = []
    real = order.determinant

    def counting(sub, *args):
        calls.append(sub.shape)
        return real(sub, *args)

    monkeypatch.setattr(order, "determinant", counting)
    # s^2 - 1 passes the screen against s - 1 and is never expanded once s + 1
    # brings the gcd down to a unit
    m = matrix([["s - 1"], ["s^2 - 1"], ["s + 1"]])
    assert minor_gcd(m) == LaurentPoly.one()
    assert calls == [(1, 1), (1, 1)]


def test_char_poly():
    assert char_poly(Permutation([1, 0])) == LaurentPoly([1, 0, -1], var="t")
    assert char_poly(identity(1)) == LaurentPoly([-1, 1], var="t")


@pytest.mark.parametrize("name", ["trefoil.agp", "fig8.agp", "7_3.agp", "bs.agp", "vanish.agp"])
def test_trivial_rep_reproduces_classical_matrix(corpus_system, name):
    system = normalize(corpus_system(name))
    kp = kernel_presentation(system)
    twisted = twisted_jacobian(kp, trivial_rep(kp))
    classical = fox_jacobian(system, {g: identity(1) for g in system.generators})
    assert twisted == classical
    assert twisted.rows == alexander_matrix(system)


@pytest.mark.parametrize("name", ["trefoil.agp", "fig8.agp", "7_3.agp", "bs.agp"])
def test_trivial_rep_gives_alexander_polynomial(corpus_system, name):
    system = corpus_system(name)
    kp = kernel_presentation(system)
    assert alexander_lin_polynomial(normalize(system), trivial_rep(kp)) == untwisted_alexander(system)


def test_twisted_jacobian_shape_and_labels(bs, bs_rep):
    kp = kernel_presentation(bs)
    m = twisted_jacobian(kp, bs_rep)
    assert m.shape == (6, 6)
    assert m.row_labels[0] == (0, 0, 0)
    assert m.col_labels[-1] == ("a", 1, 2)


def test_bs_golden(bs, bs_rep):
    report = alexander_lin(bs, bs_rep)
    assert report.D == BS_D
    assert str(report.D) == "4 - 9*s + 6*s^2 - s^3"
    assert report.extends
    assert report.transitive
    assert report.failed == []
    assert statuses(report) == {
        "a": PASS,
        "b": SKIPPED,
        "c": SKIPPED,
        "d": PASS,
        "e": PASS,
        "f": SKIPPED,
        "g": PASS,
        "h": SKIPPED,
        "i": SKIPPED,
    }
    d = next(c for c in report.checks if c.key == "d")
    assert d.witness["Delta_rho"] == "2 - t"


def test_bs_golden_independent_of_threads(bs, bs_rep):
    one = alexander_lin(bs, bs_rep, threads=1)
    eight = alexander_lin(bs, bs_rep, threads=8)
    assert one.to_json() == eight.to_json()


def test_bs_determinant_methods_agree(bs, bs_rep):
    assert alexander_lin_polynomial(bs, bs_rep, method="bareiss") == BS_D
    assert alexander_lin_polynomial(bs, bs_rep, method="interpolation") == BS_D


def test_non_transitive_needs_opt_in(bs):
    kp = kernel_presentation(bs)
    rep = trivial_rep(kp, N=2)
    with pytest.raises(RepresentationError):
        alexander_lin(bs, rep)
    report = alexander_lin(bs, rep, allow_reducible=True)
    assert report.D == LaurentPoly([2, -1]) ** 2
    assert statuses(report)["i"] == PASS
    assert statuses(report)["h"] == SKIPPED
    assert report.failed == []
    assert not report.transitive


def test_trefoil_period_two(trefoil, trefoil_kp):
    (rep,) = enumerate_periodic(trefoil_kp, 3, 2).reps
    report = alexander_lin(trefoil, rep)
    assert report.degree == 6
    assert report.extends
    assert report.failed == []
    assert statuses(report)["f"] == PASS
    assert statuses(report)["c"] == PASS
    assert is_reciprocal(report.D)
    assert divides_power(report.D, untwisted_alexander(trefoil), 2)


def divides_power(D, delta, r):
    try:
        exact_quotient(D, power_transform(delta, r))
    except ArithmeticError:
        return False
    return True


def test_vanishing(vanish, vanish_rep):
    report = alexander_lin(vanish, vanish_rep)
    assert report.D.is_zero()
    assert statuses(report)["h"] == PASS
    h = next(c for c in report.checks if c.key == "h")
    assert h.witness["nu"] == 0
    assert report.failed == []
    assert "D is identically zero" in report.notes


def test_wada_invariant_checks_homomorphism(bs):
    with pytest.raises(RepresentationError):
        wada_invariant(bs, {"x": identity(2), "a": Permutation([1, 0])})
    with pytest.raises(RepresentationError):
        wada_invariant(bs, {"x": identity(2)})


def test_wada_invariant_of_trivial_rep(fig8):
    system = normalize(fig8)
    rho = {g: identity(1) for g in system.generators}
    assert wada_invariant(system, rho) == LaurentPoly([1, -3, 1], var="t")


SHIFT_SYSTEM = "gens x a b;\neps x=1 a=0 b=0;\nrel x a x^-1 b^-1;\nmanifold;\nlongitude {}a;\n"


def shift_rep() -> PeriodicRep:
    # b_nu = a_(nu+1); a_0 = (1 2) and a_1 = (1 3) generate S_3
    ab, ac = Permutation([1, 0, 2]), Permutation([2, 1, 0])
    return PeriodicRep(3, 2, {"a": (ab, ac), "b": (ac, ab)})


def test_abelian_only_longitude_skips_peripheral_check():
    rep = shift_rep()
    assert not rep.has_abelian_image()
    report = alexander_lin(parse_dsl(SHIFT_SYSTEM.format("abelian: ")), rep)
    assert statuses(report)["c"] == SKIPPED
    c = next(c for c in report.checks if c.key == "c")
    assert c.witness["reason"] == "longitude is only valid for abelian images"
    assert report.T is None
    assert "longitude is only valid for abelian images; T not computed" in report.notes

    trusted = alexander_lin(parse_dsl(SHIFT_SYSTEM.format("")), rep)
    assert statuses(trusted)["c"] != SKIPPED
    assert trusted.T == 2


def test_abelian_only_longitude_still_used_for_abelian_images(knot_7_3, rep_7_3):
    assert knot_7_3.longitude_abelian_only
    assert rep_7_3.has_abelian_image()
    results = {c.key: c for c in run_checks(knot_7_3, rep_7_3, LaurentPoly.zero())}
    assert results["c"].status == PASS
    assert results["c"].witness["T"] == 5


def test_run_checks_catches_wrong_polynomial(bs, bs_rep):
    results = {c.key: c for c in run_checks(bs, bs_rep, LaurentPoly([1, 1]))}
    assert results["a"].failed
    assert results["d"].failed


def test_report_json(bs, bs_rep):
    data = alexander_lin(bs, bs_rep).to_json()
    assert data["D"]["text"] == "4 - 9*s + 6*s^2 - s^3"
    assert data["D"]["coeffs"] == ["4", "-9", "6", "-1"]
    assert data["X"] is not None
    assert [c["key"] for c in data["checks"]] == list("abcdefghi")


@pytest.mark.slow
def test_7_3_golden(knot_7_3, rep_7_3):
    report = alexander_lin(knot_7_3, rep_7_3)
    D = report.D
    assert D.span == 20
    assert multiplicity(D, S_MINUS_ONE) == 8
    delta13 = LaurentPoly([8192, -393, -14973, -393, 8192])
    square = LaurentPoly([64, 224, -801, 224, 64]) ** 2
    assert D == (S_MINUS_ONE**8 * delta13 * square).normalized()
    assert not report.extends
    checks = statuses(report)
    assert checks["a"] == PASS
    assert checks["b"] == PASS
    assert checks["c"] == PASS
    assert checks["d"] == SKIPPED
    assert checks["f"] == PASS
    c = next(c for c in report.checks if c.key == "c")
    assert c.witness["required"] == 8
    assert report.T == 5
