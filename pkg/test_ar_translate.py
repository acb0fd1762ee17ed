"""
test_ar_translate.py
────────────────────
AR translates, companions M⁺/M⁻ and the dimension form of AR duality.

Usage:
    pytest test_ar_translate.py
"""

import pytest

from ar_translate import (
    ar_duality_check,
    is_gorenstein_projective,
    is_reflexive,
    m_minus,
    m_plus,
    nakayama_functor,
    nakayama_inverse,
    nakayama_on_projectives_check,
    tau,
    tau_higher,
    tau_higher_minus,
    tau_minus,
    tau_via_nakayama,
    transpose,
)
from errors import PreconditionFailed
from rep_module import AddSet, add_equal, is_isomorphic

# τ_{n+1} L(i,t) over A_{3,7}; τ_{n+1} = Ω^{n+2} there
TAU_CASES = [
    ((0, 1), 0, (1, 1)),
    ((0, 1), 1, (2, 6)),
    ((0, 2), 1, (0, 5)),
    ((0, 3), 0, (1, 3)),
    ((1, 4), 2, (0, 4)),
]


@pytest.mark.parametrize("x, n, expected", TAU_CASES)
def test_higher_translate(a37, x, n, expected):
    assert is_isomorphic(tau_higher(a37.L(*x), n), a37.L(*expected))


@pytest.mark.parametrize("x, n, expected", TAU_CASES)
def test_inverse_translate_undoes_it(a37, x, n, expected):
    assert is_isomorphic(tau_higher_minus(a37.L(*expected), n), a37.L(*x))


def test_tau_matches_omega_squared_nu(a37):
    X = a37.L(0, 2)
    assert is_isomorphic(tau(X), tau_via_nakayama(X))


def test_translates_over_a2(a2):
    A, P0, P1, S0, S1 = a2
    assert is_isomorphic(tau(S0), S1)
    assert is_isomorphic(tau_minus(S1), S0)
    assert tau(P0).dim == 0
    assert transpose(P1).dim == 0
    with pytest.raises(PreconditionFailed):
        tau_via_nakayama(S0)


def test_nakayama_functor_on_projectives(a37, a2):
    assert nakayama_on_projectives_check(a37.catalogue.algebra)
    assert nakayama_on_projectives_check(a2[0])


def test_nakayama_functor_and_inverse(a37, a2):
    _, P0, _, S0, _ = a2
    assert nakayama_functor(S0).dim == 0
    assert is_isomorphic(nakayama_functor(P0), S0)
    assert is_isomorphic(nakayama_inverse(S0), P0)
    X = a37.L(0, 3)
    assert is_isomorphic(nakayama_functor(X), X)
    assert is_isomorphic(nakayama_inverse(X), X)


def test_companions_of_m1(M1):
    assert add_equal(m_plus(M1, 1), M1)
    assert add_equal(m_minus(M1, 1), M1)


def test_companion_needs_ext_vanishing(a2):
    _, _, _, S0, _ = a2
    with pytest.raises(PreconditionFailed):
        m_plus(AddSet.of(S0), 1)


@pytest.mark.parametrize("n", [0, 1, 2])
@pytest.mark.parametrize("x, z", [((0, 1), (0, 3)), ((0, 2), (1, 5)), ((2, 4), (0, 1))])
def test_ar_duality(a37, n, x, z):
    assert ar_duality_check(a37.L(*x), a37.L(*z), n)


def test_gorenstein_projectives(a37, a2):
    _, P0, _, S0, _ = a2
    assert is_gorenstein_projective(P0)
    assert not is_gorenstein_projective(S0)
    assert is_gorenstein_projective(a37.L(0, 1))
    assert is_reflexive(a37.L(0, 1))


def test_negative_order_rejected(a37):
    with pytest.raises(ValueError):
        tau_higher(a37.L(0, 1), -1)
