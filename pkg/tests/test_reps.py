from itertools import product

import pytest
from sympy.combinatorics import Permutation

from src.errors import RepresentationError
from src.groups import kernel_presentation, normalize
from src.reps import (
    PeriodicRep,
    all_permutations,
    cyclic_rep,
    cyclic_reps_mod_p,
    enumerate_periodic,
    exponent_vector,
    extends_over_G,
    from_cycles,
    full_cycle,
    identity,
    orbit_decomposition,
    resultant_gate,
    to_cycles,
    trivial_rep,
)
from src.words import parse_kernel_word

KNOWN_VECTOR = (4, 2, 1, 1, 4, 4, 3, 1, 4, 0, 0, 0, 1)


def brute_force_count(kp, N, r) -> int:
    variables = [(g, nu) for g in kp.generators for nu in range(r)]
    count = 0
    for images in product(list(all_permutations(N)), repeat=len(variables)):
        table = {g: tuple(images[variables.index((g, nu))] for nu in range(r)) for g in kp.generators}
        if not PeriodicRep(N, r, table).failures(kp):
            count += 1
    return count


def test_cycles_round_trip():
    p = from_cycles([[1, 3], [2, 4]], 5)
    assert to_cycles(p) == [[1, 3], [2, 4]]
    assert to_cycles(full_cycle(3)) == [[1, 2, 3]]
    assert from_cycles([], 4) == identity(4)


def test_cycles_validated():
    with pytest.raises(RepresentationError):
        from_cycles([[1, 6]], 5)
    with pytest.raises(RepresentationError):
        from_cycles([[1, 2], [2, 3]], 3)


def test_rep_shape_validated():
    with pytest.raises(RepresentationError):
        PeriodicRep(3, 2, {"a": (full_cycle(3),)})
    with pytest.raises(RepresentationError):
        PeriodicRep(3, 1, {"a": (identity(2),)})


def test_bs_rep_satisfies_relators(bs, bs_rep):
    kp = kernel_presentation(bs)
    assert bs_rep.failures(kp) == []
    assert bs_rep.evaluate(parse_kernel_word("a_1 a_0^-2")).is_Identity
    assert bs_rep.evaluate(parse_kernel_word("a_3 a_2^-2")).is_Identity


def test_verify_rejects_wrong_generators(trefoil_kp, bs_rep):
    with pytest.raises(RepresentationError):
        bs_rep.verify(trefoil_kp)


def test_sigma(bs_rep):
    shifted = bs_rep.sigma()
    assert shifted.image("a", 0) == bs_rep.image("a", 1)
    assert shifted.image("a", 1) == bs_rep.image("a", 0)
    assert shifted.sigma() == bs_rep
    assert bs_rep.minimal_period() == 2


def test_with_period_and_image_indices(bs_rep):
    doubled = bs_rep.with_period(4)
    assert doubled.r == 4
    assert doubled.image("a", 3) == bs_rep.image("a", 1)
    assert bs_rep.image("a", -1) == bs_rep.image("a", 1)
    assert doubled.minimal_period() == 2
    with pytest.raises(RepresentationError):
        bs_rep.with_period(3)


def test_conjugate(bs_rep):
    s = Permutation([1, 0, 2])
    conj = bs_rep.conjugate(s)
    assert conj.image("a", 0) == ~s * bs_rep.image("a", 0) * s
    assert conj.conjugate(~s) == bs_rep


def test_orbits_and_restriction(trefoil_kp):
    rep = PeriodicRep(3, 1, {"y'": (from_cycles([[2, 3]], 3),)})
    assert orbit_decomposition(rep) == [[1], [2, 3]]
    assert not rep.is_transitive()
    part = rep.restrict([2, 3])
    assert part.N == 2
    assert to_cycles(part.image("y'", 0)) == [[1, 2]]
    with pytest.raises(RepresentationError):
        rep.restrict([1, 2])


def test_json_round_trip(bs_rep):
    assert PeriodicRep.from_json(bs_rep.to_json()) == bs_rep
    with pytest.raises(RepresentationError):
        PeriodicRep.from_json({"N": 3})


def test_trefoil_enumeration_has_one_class(trefoil_kp):
    result = enumerate_periodic(trefoil_kp, 3, 2)
    assert result.complete
    assert len(result.reps) == 1
    (rep,) = result.reps
    assert to_cycles(rep.image("y'", 0)) == [[1, 2, 3]]
    assert to_cycles(rep.image("y'", 1)) == [[1, 3, 2]]


def test_trefoil_enumeration_raw(trefoil_kp):
    assert len(enumerate_periodic(trefoil_kp, 3, 2, raw=True).reps) == 2
    assert len(enumerate_periodic(trefoil_kp, 3, 2, raw=True, allow_reducible=True).reps) == 3


def test_trefoil_period_one_has_only_the_trivial_rep(trefoil_kp):
    result = enumerate_periodic(trefoil_kp, 2, 1)
    assert result.reps == []
    assert any("non-transitive" in note for note in result.notes)
    reducible = enumerate_periodic(trefoil_kp, 2, 1, allow_reducible=True)
    assert reducible.reps == [trivial_rep(trefoil_kp, N=2)]


@pytest.mark.parametrize(
    "name, N, r",
    [("trefoil.agp", 2, 1), ("trefoil.agp", 3, 2), ("bs.agp", 3, 2), ("fig8.agp", 3, 1), ("vanish.agp", 2, 2)],
)
def test_enumeration_matches_brute_force(corpus_system, name, N, r):
    kp = kernel_presentation(normalize(corpus_system(name)))
    result = enumerate_periodic(kp, N, r, raw=True, allow_reducible=True)
    assert len(result.reps) == brute_force_count(kp, N, r)
    assert all(not rep.failures(kp) for rep in result.reps)


def test_enumeration_independent_of_threads(trefoil_kp):
    one = enumerate_periodic(trefoil_kp, 3, 3, threads=1)
    many = enumerate_periodic(trefoil_kp, 3, 3, threads=4)
    assert [rep.key() for rep in one.reps] == [rep.key() for rep in many.reps]


def test_enumeration_budget_is_reported(trefoil_kp):
    result = enumerate_periodic(trefoil_kp, 4, 3, limit=1)
    assert not result.complete
    assert any("budget" in note for note in result.notes)


def test_bs_rep_extends(bs_rep):
    x = extends_over_G(bs_rep)
    assert x is not None
    for nu in range(bs_rep.r):
        assert x * bs_rep.image("a", nu) * ~x == bs_rep.image("a", nu + 1)


def test_7_3_rep_does_not_extend(rep_7_3):
    assert extends_over_G(rep_7_3) is None


def test_trivial_rep_extends_by_identity(trefoil_kp):
    assert extends_over_G(trivial_rep(trefoil_kp, N=2)) == identity(2)


def test_resultant_gate(knot_7_3):
    gate = resultant_gate(knot_7_3, 5, 13)
    assert gate.resultant == 625
    assert gate.passes
    assert not resultant_gate(knot_7_3, 7, 13).passes


def test_cyclic_reps_contain_known_vector(knot_7_3, rep_7_3):
    result = cyclic_reps_mod_p(knot_7_3, 5, 13)
    vectors = {exponent_vector(rep) for rep in result.reps}
    assert KNOWN_VECTOR in vectors
    assert exponent_vector(rep_7_3) == KNOWN_VECTOR
    assert len(result.reps) == 5**result.nullity - 1


def test_cyclic_reps_gate_failure(knot_7_3):
    result = cyclic_reps_mod_p(knot_7_3, 7, 13)
    assert result.reps == []
    assert "not divisible by 7" in result.notes[0]


def test_cyclic_rep_builder(knot_7_3, rep_7_3):
    kp = kernel_presentation(knot_7_3)
    assert cyclic_rep(kp, 5, KNOWN_VECTOR) == rep_7_3
    assert rep_7_3.failures(kp) == []
