"""
test_orthosym.py
────────────────
Ortho-symmetry, Gorenstein dimensions of End(M), perpendicular tests and
the self-injective statements, checked on A_{3,7} and A_{3,10}.

Usage:
    pytest test_orthosym.py
    pytest test_orthosym.py -m "not slow"
"""

import pytest

from errors import CatalogueRequired, NotSelfInjective, PeriodicityFailed, PreconditionFailed
from nakayama import NakIndec, dd
from orthosym import (
    AtLeast,
    IndecCatalogue,
    companion_coherence,
    dominant_dim_lower,
    g_category,
    gldim_le_test,
    gorenstein_dims_of_end,
    gorenstein_n_plus_3_conditions,
    gsc_check_almost,
    is_cogenerator,
    is_generator,
    is_maximal,
    is_maximal_orthogonal,
    is_n_orthosymmetric,
    is_nm_orthosymmetric,
    minus_companion_check,
    orbit_module,
    perp_left,
    perp_right,
    perp_symmetry_check,
    rigidity_degree,
    selfinjective_gsc,
    weakly_cy_degree,
)
from relative_homology import Finite
from rep_module import AddSet, add_equal, projectives


def _a_plus(setting, *labels):
    return setting.addset([NakIndec(setting.params, i, t) for i, t in labels])


# ── Ortho-symmetry ───────────────────────────────────────────────────

def test_m1_is_orthosymmetric(M1):
    report = is_n_orthosymmetric(M1, 1)
    assert report.ortho_symmetric
    assert report.is_gen and report.is_cogen and report.is_rigid_to_n
    assert report.gorenstein == (Finite(3), Finite(3))
    assert report.domdim_lower >= 3
    assert report.to_dict()["ortho_symmetric"] is True


def test_m2_is_orthosymmetric(M2):
    assert is_n_orthosymmetric(M2, 1, with_gorenstein=False).ortho_symmetric


def test_half_orbit_is_not_orthosymmetric(a37):
    report = is_n_orthosymmetric(_a_plus(a37, (0, 1)), 1, with_gorenstein=False)
    assert report.is_rigid_to_n
    assert not report.ortho_symmetric


def test_non_generator_reason(a37):
    M = AddSet.of(a37.L(0, 1))
    assert not is_generator(M) and not is_cogenerator(M)
    report = is_n_orthosymmetric(M, 1)
    assert not report.ortho_symmetric
    assert report.reason == "not a generator"


def test_non_rigid_reason(a37):
    report = is_n_orthosymmetric(_a_plus(a37, (0, 3), (1, 3), (2, 3)), 1)
    assert report.reason == "not 1-rigid"


def test_rigidity_degree(a37):
    assert rigidity_degree(_a_plus(a37, (0, 1))) == 4
    assert rigidity_degree(_a_plus(a37, (0, 3))) == 0
    assert rigidity_degree(projectives(a37.catalogue.algebra), cap=3) == AtLeast(3)


def test_nm_orthosymmetry(a37, M1):
    assert is_nm_orthosymmetric(M1, 1, 0, a37.catalogue)
    assert not is_nm_orthosymmetric(_a_plus(a37, (0, 3)), 1, 0, a37.catalogue)
    with pytest.raises(CatalogueRequired):
        is_nm_orthosymmetric(M1, 1, 0, None)


def test_companion_coherence(M1):
    assert companion_coherence(M1, 1) == (True, True, True)


def test_minus_companion_check(a37, M1):
    assert minus_companion_check(M1, 1) is True
    assert minus_companion_check(_a_plus(a37, (0, 1)), 1) is True
    # τ_3 and τ_3⁻ send L(0,1) to L(2,1) and L(1,1)
    assert minus_companion_check(_a_plus(a37, (0, 1)), 2) is None


def test_dominant_dimension_lower_bound(a37, M1):
    assert dominant_dim_lower(M1) == 3
    assert dominant_dim_lower(_a_plus(a37, (0, 1))) == 6


# ── Gorenstein dimensions ────────────────────────────────────────────

def test_gorenstein_dims_of_m1_and_m2(M1, M2):
    assert gorenstein_dims_of_end(M1, 1) == (Finite(3), Finite(3))
    assert gorenstein_dims_of_end(M2, 1) == (Finite(3), Finite(3))


def test_gorenstein_dims_for_large_n(a37):
    assert gorenstein_dims_of_end(_a_plus(a37, (0, 1)), 4) == (Finite(6), Finite(6))


def test_gorenstein_dims_of_regular_module(a37):
    P = projectives(a37.catalogue.algebra)
    with pytest.raises(PreconditionFailed):
        gorenstein_dims_of_end(P, 1)
    assert gorenstein_dims_of_end(P, 1, allow_selfinjective=True) == (Finite(0), Finite(0))


def test_gorenstein_needs_rigidity(a37):
    with pytest.raises(PreconditionFailed):
        gorenstein_dims_of_end(_a_plus(a37, (0, 3)), 1)


def test_n_plus_3_conditions_need_n_at_least_2(a37, M1):
    with pytest.raises(ValueError):
        gorenstein_n_plus_3_conditions(M1, 1, a37.catalogue)


# ── Global dimension and perpendicular categories ────────────────────

def test_gldim_bound_over_a37(a37, M1):
    verdict = gldim_le_test(M1, 1, a37.catalogue)
    assert verdict.holds
    assert verdict.violations == []


def test_gldim_bound_fails_over_a310(a310):
    M = a310.addset([NakIndec(a310.params, i, t) for i, t in ((0, 1), (2, 9), (0, 2), (0, 8))])
    verdict = gldim_le_test(M, 1, a310.catalogue)
    assert not verdict.holds
    assert "L(0,5)" in verdict.violations
    assert dd(NakIndec(a310.params, 0, 5)) == 0


def test_maximal_orthogonal(a37, M1):
    assert is_maximal_orthogonal(M1, 1, a37.catalogue)
    assert not is_maximal_orthogonal(_a_plus(a37, (0, 1)), 1, a37.catalogue)


def test_g_category_of_m1(a37, M1):
    want = sorted(a37.catalogue.label_of(Y) for Y in M1.summands)
    assert sorted(g_category(M1, 1, a37.catalogue)) == want


def test_perpendiculars_contain_add_m(a37, M1):
    inside = {a37.catalogue.index_of(Y) for Y in M1.summands}
    assert inside <= set(perp_left(M1, 1, a37.catalogue))
    assert inside <= set(perp_right(M1, 1, a37.catalogue))


@pytest.mark.slow
def test_m1_is_maximal(a37, M1):
    assert is_maximal(M1, 1, "orthosymmetric", a37.catalogue)
    assert not is_maximal(_a_plus(a37, (0, 1)), 1, "orthosymmetric", a37.catalogue)


def test_maximal_kind_is_checked(a37, M1):
    with pytest.raises(ValueError):
        is_maximal(M1, 1, "tilting", a37.catalogue)


# ── Self-injective algebras ──────────────────────────────────────────

def test_weakly_calabi_yau_degree(a37):
    assert weakly_cy_degree(a37.catalogue) == 5


def test_perp_symmetry_over_weakly_cy(a37):
    assert perp_symmetry_check(_a_plus(a37, (0, 1)), 4, a37.catalogue)
    assert perp_symmetry_check(_a_plus(a37, (0, 3)), 4, a37.catalogue)
    with pytest.raises(PreconditionFailed):
        perp_symmetry_check(_a_plus(a37, (0, 1)), 1, a37.catalogue)


def test_self_injective_only(a2):
    A, P0, P1, S0, S1 = a2
    cat = IndecCatalogue([P0, P1, S0], ["P0", "P1", "S0"])
    with pytest.raises(NotSelfInjective):
        weakly_cy_degree(cat)
    with pytest.raises(NotSelfInjective):
        orbit_module(S0, 1, 1)


def test_orbit_module(a37):
    result = orbit_module(a37.L(0, 1), 1, 2)
    assert result.ortho_symmetric
    assert add_equal(result.module, _a_plus(a37, (0, 1), (2, 6)))


def test_orbit_module_needs_periodicity(a37):
    with pytest.raises(PeriodicityFailed):
        orbit_module(a37.L(0, 1), 1, 1)


def test_selfinjective_gsc(a37):
    d, ortho = selfinjective_gsc(a37.L(0, 1), 1)
    assert d == Finite(6)
    assert ortho is True


def test_gsc_almost_preconditions(a37, M1):
    with pytest.raises(PreconditionFailed):
        gsc_check_almost(M1, a37.L(0, 1), 1)
    with pytest.raises(PreconditionFailed):
        gsc_check_almost(projectives(a37.catalogue.algebra), a37.L(0, 1), 4)
