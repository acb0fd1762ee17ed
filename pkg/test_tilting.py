"""
test_tilting.py
───────────────
Tilting verdicts over k(0 → 1), completion of almost complete tilting
modules, mutation and exchange sequences over A_{3,7}.

Usage:
    pytest test_tilting.py
    pytest test_tilting.py -m "not slow"
"""

import pytest

from bound_quiver import regular_module
from errors import PreconditionFailed
from nakayama import NakIndec
from representation import Module, compose
from rep_module import add_equal, direct_sum, is_isomorphic
from tilting import (
    TiltingVerdict,
    complete_almost_tilting,
    exchange_round_trip,
    exchange_sequence,
    is_partial_tilting,
    is_tilting,
    maximal_orthogonal_check,
    mutate_left,
    mutate_right,
    mutation_preserves_orthosymmetry,
    theorem_derived_check,
)


# ── Tilting modules over k(0 → 1) ────────────────────────────────────

def test_regular_module_is_tilting(a2):
    A = a2[0]
    report = is_tilting(regular_module(A))
    assert report.verdict == TiltingVerdict("tilting", 0)
    assert str(report.verdict) == "Tilting(0)"


def test_apr_tilting_module(a2):
    _, P0, _, S0, _ = a2
    T = direct_sum([P0, S0], name="P0⊕S0")[0]
    report = is_tilting(T)
    assert report.verdict == TiltingVerdict("tilting", 1)
    assert len(report.coresolution) == 2
    assert report.to_dict()["verdict"] == "Tilting(1)"


def test_apr_coresolution_maps(a2):
    _, P0, _, S0, _ = a2
    T = direct_sum([P0, S0], name="P0⊕S0")[0]
    report = is_tilting(T)
    into, onto = report.coresolution_maps
    assert into.is_mono()
    assert onto.is_epi()
    assert compose(into, onto).is_zero()
    assert is_isomorphic(onto.target, report.coresolution[-1])
    maps = report.to_dict()["coresolution_maps"]
    assert len(maps) == 2
    assert all("blocks" in m for m in maps)


def test_regular_module_needs_no_maps(a2):
    assert is_tilting(regular_module(a2[0])).coresolution_maps == []


def test_sum_of_simples_is_rejected(a2):
    _, _, _, S0, S1 = a2
    T = direct_sum([S0, S1], name="S0⊕S1")[0]
    verdict = is_tilting(T).verdict
    assert verdict.kind == "fail"
    assert verdict.reason == "Ext^1(T,T) has dimension 1"


def test_partial_but_not_tilting(a2):
    _, _, _, S0, _ = a2
    assert is_partial_tilting(S0).verdict == TiltingVerdict("partial", 1)
    assert is_tilting(S0).verdict.kind == "fail"


def test_infinite_projective_dimension_fails(a37):
    verdict = is_tilting(a37.L(0, 1)).verdict
    assert verdict.kind == "fail"
    assert "pd(T)" in verdict.reason


def test_zero_module_is_not_a_candidate(a2):
    with pytest.raises(ValueError):
        is_tilting(Module.zero(a2[0]))


def test_complete_almost_tilting(a2):
    _, P0, P1, S0, _ = a2
    done = complete_almost_tilting(P1, P0, S0, 1)
    assert len(done.terms) == 1
    assert is_isomorphic(done.terms[0], P0)
    assert done.tilting == TiltingVerdict("tilting", 1)


def test_complete_almost_tilting_at_zero(a2):
    _, P0, P1, S0, _ = a2
    assert complete_almost_tilting(P1, P0, P1, 0).tilting == TiltingVerdict("tilting", 0)
    with pytest.raises(PreconditionFailed):
        complete_almost_tilting(P1, P0, S0, 0)


# ── Mutation over A_{3,7} ────────────────────────────────────────────

def test_right_mutation_exchanges_the_simple_orbit(a37, M1, M2):
    result = mutate_right(M1, a37.orbits((0, 1)))
    assert add_equal(result.output, M2)
    assert len(result.split_sequences) == 2
    assert result.to_dict()["pivot"] == ["L(0,1)", "L(2,6)"]


def test_right_mutation_back(a37, M1, M2):
    assert add_equal(mutate_right(M2, a37.orbits((1, 1))).output, M1)


def test_exchange_round_trip(a37, M1):
    assert exchange_round_trip(M1, a37.orbits((0, 1)))


def test_left_mutation_agrees_for_tau_fixed_pivots(a37, M1, M2):
    assert add_equal(mutate_left(M1, a37.orbits((0, 1))).output, M2)


def test_single_summand_pivot(a37):
    M = a37.addset([NakIndec(a37.params, 0, 1)])
    out = mutate_right(M, a37.L(0, 1)).output
    assert add_equal(out, a37.addset([NakIndec(a37.params, 1, 6)]))


def test_mutation_preserves_orthosymmetry(a37):
    M = a37.addset([NakIndec(a37.params, 0, 1)])
    assert mutation_preserves_orthosymmetry(M, a37.L(0, 1), 4)


def test_mutation_needs_tau_fixed_pivot(a37):
    M = a37.addset([NakIndec(a37.params, 0, 1)])
    with pytest.raises(PreconditionFailed):
        mutation_preserves_orthosymmetry(M, a37.L(0, 1), 1)


@pytest.mark.slow
def test_derived_equivalence_between_m1_and_m2(a37, M1, M2):
    assert theorem_derived_check(M1, M2, 1, a37.catalogue).kind == "OneTiltingBimodule"


@pytest.mark.slow
def test_smaller_module_gives_partial_tilting(a37, M1):
    N = a37.addset([NakIndec(a37.params, 0, 2), NakIndec(a37.params, 0, 5)])
    assert theorem_derived_check(M1, N, 1, a37.catalogue).kind == "PartialOneTilting"


@pytest.mark.slow
def test_maximal_right_side_coresolves_by_approximation(a37, M1):
    M = a37.addset([NakIndec(a37.params, 0, 2), NakIndec(a37.params, 0, 5)])
    verdict = theorem_derived_check(M, M1, 1, a37.catalogue, maximal_side="N")
    assert verdict.kind == "OneTiltingBimodule"


@pytest.mark.slow
@pytest.mark.parametrize("side", ["M", "N"])
def test_module_is_derived_equivalent_to_itself(a37, M1, side):
    assert theorem_derived_check(M1, M1, 1, a37.catalogue, maximal_side=side).kind == "OneTiltingBimodule"


def test_derived_check_side_is_validated(a37, M1, M2):
    with pytest.raises(ValueError):
        theorem_derived_check(M1, M2, 1, a37.catalogue, maximal_side="both")


@pytest.mark.slow
def test_exchange_sequence(a37, M1):
    seq = exchange_sequence(M1, a37.orbits((0, 1)), a37.catalogue, 1)
    assert seq.split
    assert seq.round_trip


def test_exchange_rejects_projective_pivot(a37, M1):
    with pytest.raises(PreconditionFailed):
        exchange_sequence(M1, a37.L(0, 7), a37.catalogue, 1)


# ── Maximal orthogonality ────────────────────────────────────────────

def test_maximal_orthogonal_check(a37, a310, M1):
    assert maximal_orthogonal_check(M1, 1, a37.catalogue) == (True, True)
    big = a310.addset([NakIndec(a310.params, i, t) for i, t in ((0, 1), (2, 9), (0, 2), (0, 8))])
    assert maximal_orthogonal_check(big, 1, a310.catalogue) == (False, False)
