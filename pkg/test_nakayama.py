"""
test_nakayama.py
────────────────
Closed-form combinatorics of L(i,t) over A_{e,ae+1}: syzygies, rigidity,
orbits and the classification search.

Usage:
    pytest test_nakayama.py
    pytest test_nakayama.py -m "not slow"
"""

import pytest

from bound_quiver import NakayamaParams
from errors import OutOfRange, ParamsMismatch, SearchBudgetExceeded
from nakayama import (
    NakIndec,
    all_orbits,
    canonical_form,
    classify,
    dd,
    dd_by_ext,
    dd_table,
    dd_table_markdown,
    indecomposables,
    max_rigid_extension,
    nak_cosyzygy,
    nak_ext_dim,
    nak_hom_dim,
    nak_is_orthosymmetric,
    nak_is_rigid,
    nak_orbit,
    nak_stable_hom_dim,
    nak_syzygy,
    nak_tau,
    nak_tau_higher,
    orbit_union,
    parse_literal,
    syzygy_orbit_formulas_check,
)
from rep_module import ext_dim, hom_dim, projectives, stable_hom_dim

A37 = NakayamaParams(3, 2)
A310 = NakayamaParams(3, 3)


def L(i, t, params=A37):
    return NakIndec(params, i, t)


# ── Literals ─────────────────────────────────────────────────────────

def test_parse_literal():
    assert parse_literal("L:0,1", A37) == L(0, 1)
    assert parse_literal(" 4,2 ", A37) == L(1, 2)
    with pytest.raises(ValueError):
        parse_literal("L:0", A37)
    with pytest.raises(OutOfRange):
        parse_literal("L:0,8", A37)


def test_vertex_is_taken_mod_e():
    assert repr(L(5, 3)) == "L(2,3)"
    assert L(0, 7).is_projective
    assert len(indecomposables(A37)) == 21
    assert len(indecomposables(A37, include_projective=False)) == 18


def test_params_must_match():
    with pytest.raises(ParamsMismatch):
        nak_hom_dim(L(0, 1), L(0, 1, A310))


# ── Syzygies ─────────────────────────────────────────────────────────

SYZYGY_CASES = [
    # (x, k, Ω^k x)
    ((0, 1), 1, (1, 6)),
    ((0, 1), 2, (1, 1)),
    ((0, 1), 3, (2, 6)),
    ((0, 2), 1, (2, 5)),
    ((0, 1), -1, (0, 6)),
    ((1, 3), -2, (0, 3)),
]


@pytest.mark.parametrize("x, k, expected", SYZYGY_CASES)
def test_syzygy_closed_form(x, k, expected):
    assert nak_syzygy(L(*x), k) == L(*expected)


def test_syzygy_period_and_projectives():
    for x in indecomposables(A37, include_projective=False):
        assert nak_syzygy(x, 6) == x
        assert nak_syzygy(nak_syzygy(x, 1), -1) == x
    assert nak_syzygy(L(0, 7), 1) is None
    assert nak_tau(L(2, 4)) == L(0, 4)
    assert nak_cosyzygy(L(0, 1), 1) == L(0, 6)


def test_higher_translate_closed_form():
    assert nak_tau_higher(L(0, 1), 0) == nak_tau(L(0, 1)) == L(1, 1)
    assert nak_tau_higher(L(0, 1), 1) == L(2, 6)
    assert nak_tau_higher(L(1, 4), 2) == L(0, 4)
    assert nak_tau_higher(L(0, 7), 1) is None


# stHom(L(i,t), L(j,u)) over A_{3,7}
STABLE_HOM_CASES = [
    ((0, 1), (0, 1), 1),
    ((0, 7), (0, 1), 0),
    ((0, 7), (0, 4), 0),
    ((0, 4), (0, 4), 1),
    ((1, 6), (0, 1), 0),
]


@pytest.mark.parametrize("x, y, expected", STABLE_HOM_CASES)
def test_stable_hom_closed_form(a37, x, y, expected):
    assert nak_stable_hom_dim(L(*x), L(*y)) == expected
    P = projectives(a37.catalogue.algebra)
    assert stable_hom_dim(a37.L(*x), a37.L(*y), P) == expected


def test_closed_form_agrees_with_representations(a37):
    for x in indecomposables(A37, include_projective=False)[:9]:
        for y in indecomposables(A37, include_projective=False)[:9]:
            X, Y = a37.builder(x), a37.builder(y)
            assert nak_hom_dim(x, y) == hom_dim(X, Y)
            assert nak_ext_dim(x, y, 1) == ext_dim(X, Y, 1)


# ── Rigidity table ───────────────────────────────────────────────────

DD_A37 = {1: 4, 2: 1, 3: 0, 4: 0, 5: 1, 6: 4}


@pytest.mark.parametrize("t, expected", sorted(DD_A37.items()))
def test_dd_over_a37(t, expected):
    for i in range(3):
        assert dd(L(i, t)) == expected
        assert dd_by_ext(L(i, t)) == expected


@pytest.mark.parametrize("e, a", [(2, 2), (3, 2), (3, 3), (6, 2)])
def test_dd_matches_ext_computation(e, a):
    params = NakayamaParams(e, a)
    for x in indecomposables(params, include_projective=False):
        assert dd(x) == dd_by_ext(x), x


def test_dd_over_a310():
    table = dd_table(3, 3)
    assert table[(0, 1)] == 4
    assert table[(0, 2)] == 1
    assert table[(0, 5)] == 0
    assert table[(0, 8)] == 1
    assert table[(0, 9)] == 4


def test_dd_out_of_range():
    with pytest.raises(OutOfRange):
        dd(L(0, 1, NakayamaParams(3, 1)))
    with pytest.raises(OutOfRange):
        dd(L(0, 7))


def test_dd_table_markdown():
    text = dd_table_markdown(3, 2)
    assert "A_{3,7}" in text
    assert "| 0 | 4 | 1 | 0 | 0 | 1 | 4 |" in text


# ── Orbits ───────────────────────────────────────────────────────────

@pytest.mark.parametrize("q", [1, 2])
def test_orbits_have_size_2q(q):
    params = NakayamaParams(3 * q, 2)
    orbits = all_orbits(params)
    assert all(len(o) == 2 * q for o in orbits)
    assert sum(len(o) for o in orbits) == len(indecomposables(params, include_projective=False))


def test_orbit_of_simple():
    assert set(nak_orbit(L(0, 1))) == {L(0, 1), L(2, 6)}
    assert set(orbit_union(A37, (0, 2))) == {L(0, 2), L(0, 5)}


@pytest.mark.parametrize("q, a", [(1, 2), (2, 2)])
def test_orbit_formulas(q, a):
    assert syzygy_orbit_formulas_check(q, a)


def test_orthosymmetric_orbit_unions():
    m1 = orbit_union(A37, (0, 1), (0, 2))
    assert nak_is_rigid(m1, 1)
    assert nak_is_orthosymmetric(m1, 1)
    assert not nak_is_orthosymmetric([L(0, 1)], 1)
    assert not nak_is_rigid(m1 + [L(0, 3)], 1)


def test_canonical_form_is_shift_invariant():
    m1 = orbit_union(A37, (0, 1), (0, 2))
    shifted = [nak_syzygy(x, 2) for x in m1]
    assert canonical_form(m1) == canonical_form(shifted)
    assert canonical_form([L(0, 7)]) == ()


# ── Classification ───────────────────────────────────────────────────

def _expected_keys(params):
    return sorted([
        canonical_form(orbit_union(params, (0, 1), (0, 2))),
        canonical_form(orbit_union(params, (1, 1), (0, 2))),
    ])


def test_classify_a37():
    report = classify(1, 2)
    assert len(report.classes) == 2
    assert sorted(report.class_keys()) == _expected_keys(A37)
    assert report.to_dict()["classes"][0][0] == "A"
    assert "2 classes" in report.to_markdown()


def test_classify_a37_unpruned():
    report = classify(1, 2, pruned=False)
    assert report.candidates == 512
    assert report.explored == 512
    assert sorted(report.class_keys()) == _expected_keys(A37)


def test_classify_a37_rigid_kind():
    report = classify(1, 2, kind="max-1-rigid")
    assert report.classes
    assert all(nak_is_rigid(c, 1) for c in report.classes)


def test_classify_a614():
    params = NakayamaParams(6, 2)
    report = classify(2, 2)
    assert sorted(report.class_keys()) == _expected_keys(params)


@pytest.mark.slow
def test_classify_a614_unpruned():
    params = NakayamaParams(6, 2)
    report = classify(2, 2, pruned=False)
    assert report.candidates == 1 << 18
    assert sorted(report.class_keys()) == _expected_keys(params)


def test_unpruned_budget():
    with pytest.raises(SearchBudgetExceeded):
        classify(1, 2, pruned=False, limit=100)


def test_classify_rejects_bad_input():
    with pytest.raises(OutOfRange):
        classify(0, 2)
    with pytest.raises(ValueError):
        classify(1, 2, kind="max-2-rigid")


@pytest.mark.parametrize("q", [1, 2])
def test_max_rigid_extension(q):
    members, rigid, maximal = max_rigid_extension(q, 2)
    assert rigid and maximal
    assert len(members) == 4 * q + (q - 1)
