"""
test_rep_module.py
──────────────────
Hom, Ext, syzygies, decomposition and add(M) over A_{3,7} and k(0 → 1).

Usage:
    pytest test_rep_module.py
"""

import pytest

from bound_quiver import regular_module
from errors import AlgebraMismatch
from relative_homology import Finite, InfiniteCertified
from representation import Morphism, compose
from rep_module import (
    AddSet,
    add_equal,
    cokernel,
    cosyzygy,
    decompose,
    direct_sum,
    end_algebra,
    ext_dim,
    factor_through,
    find_isomorphism,
    hom,
    hom_dim,
    image,
    in_add,
    injective_dimension,
    injective_envelope,
    is_indecomposable,
    is_isomorphic,
    kernel,
    projective_cover,
    projective_dimension,
    projective_resolution,
    projectives,
    rad,
    radical_of_end,
    socle,
    split_off,
    stable_hom_dim,
    summand_count,
    syzygy,
    top,
)

# Hom(L(i,t), L(j,u)) over A_{3,7}
HOM_CASES = [
    ((0, 1), (0, 1), 1),
    ((0, 1), (1, 1), 0),
    ((0, 1), (0, 3), 0),    # the socle of L(0,3) lives at vertex 2
    ((0, 3), (0, 1), 1),
    ((0, 7), (0, 1), 1),
    ((0, 7), (0, 4), 2),
]


@pytest.mark.parametrize("x, y, expected", HOM_CASES)
def test_hom_dimension(a37, x, y, expected):
    assert hom_dim(a37.L(*x), a37.L(*y)) == expected


def test_hom_basis_maps_intertwine(a37):
    H = hom(a37.L(0, 7), a37.L(0, 4))
    assert H.dim == len(H.basis) == 2
    assert all(f.is_intertwiner() for f in H.basis)


def test_syzygy_of_simple(a37):
    Z = syzygy(a37.L(0, 1), 1)
    assert find_isomorphism(Z, a37.L(1, 6)) is not None


def test_cosyzygy_of_simple(a37):
    Z = cosyzygy(a37.L(0, 1), 1)
    assert find_isomorphism(Z, a37.L(0, 6)) is not None


def test_stable_syzygy_drops_projectives(a37):
    assert syzygy(a37.L(0, 7), 1).dim == 0
    assert syzygy(a37.L(0, 7), 1, mode="plain").dim == 0
    with pytest.raises(ValueError):
        syzygy(a37.L(0, 1), -1)


def test_ext_of_simple_with_itself(a37):
    S = a37.L(0, 1)
    assert [ext_dim(S, S, i) for i in range(1, 5)] == [0, 0, 0, 0]
    assert ext_dim(S, S, 5) > 0


def test_ext_index_must_be_positive(a37):
    with pytest.raises(ValueError):
        ext_dim(a37.L(0, 1), a37.L(0, 1), 0)


def test_stable_hom_kills_projective_factorisations(a37):
    P = projectives(a37.catalogue.algebra)
    assert stable_hom_dim(a37.L(0, 1), a37.L(0, 1), P) == 1
    assert stable_hom_dim(a37.L(0, 7), a37.L(0, 1), P) == 0


def test_projective_cover_and_envelope(a37):
    X = a37.L(0, 3)
    P, epi = projective_cover(X)
    assert P.dims == (3, 2, 2)
    assert epi.is_epi()
    I, mono = injective_envelope(X)
    assert mono.is_mono()
    assert I.dim == 7


def test_kernel_of_cover(a37):
    P, epi = projective_cover(a37.L(0, 1))
    K, incl = kernel(epi)
    assert K.dim == 6
    assert incl.is_mono()
    assert compose(incl, epi).is_zero()


def test_decompose_direct_sum(a37):
    X, _, _ = direct_sum([a37.L(0, 1), a37.L(0, 1), a37.L(0, 2)])
    parts = decompose(X)
    assert sorted(k for _, k in parts) == [1, 2]
    assert sorted(Y.dim for Y, _ in parts) == [1, 2]


def test_split_off_counts_multiplicity(a37):
    X, _, _ = direct_sum([a37.L(0, 1), a37.L(0, 1), a37.L(0, 2)])
    mu, C, incl = split_off(X, a37.L(0, 1))
    assert mu == 2
    assert is_isomorphic(C, a37.L(0, 2))
    assert incl.is_mono()


def test_uniserials_are_indecomposable(a37):
    assert all(is_indecomposable(Y) for Y in a37.catalogue)


def test_same_dims_without_isomorphism(a37):
    assert a37.L(0, 3).dims == a37.L(1, 3).dims
    assert find_isomorphism(a37.L(0, 3), a37.L(1, 3)) is None
    assert find_isomorphism(a37.L(0, 3), a37.L(0, 3).renamed("copy")) is not None


def test_add_membership(a37):
    M = AddSet.of(a37.L(0, 1), a37.L(0, 2))
    assert len(M) == 2
    X, _, _ = direct_sum([a37.L(0, 2), a37.L(0, 1), a37.L(0, 1)])
    assert in_add(X, M)
    assert not in_add(a37.L(0, 3), M)
    assert add_equal(M, AddSet.of(X))
    assert len(M.with_summand(a37.L(0, 1).renamed("again"))) == 2


def test_projective_dimension_over_a2(a2):
    A, P0, P1, S0, S1 = a2
    assert projective_dimension(S0) == Finite(1)
    assert projective_dimension(P0) == Finite(0)


def test_periodic_module_has_infinite_projective_dimension(a37):
    assert projective_dimension(a37.L(0, 1)) == InfiniteCertified()


def test_identity_and_inverse(a37):
    X = a37.L(0, 4)
    f = find_isomorphism(X, X.renamed("Y"))
    assert compose(f, f.inverse()).is_iso()
    assert Morphism.identity(X).is_iso()


def test_different_algebras_do_not_mix(a37, a25):
    with pytest.raises(AlgebraMismatch):
        hom(a37.L(0, 1), a25.L(0, 1))


# ── Radical layers, images and End ───────────────────────────────────

def test_top_radical_and_socle(a37):
    X = a37.L(0, 3)
    assert top(X).dims == (1, 0, 0)
    R, incl = rad(X)
    assert is_isomorphic(R, a37.L(1, 2))
    assert incl.is_mono()
    assert is_isomorphic(socle(X)[0], a37.L(2, 1))
    assert rad(a37.L(0, 1))[0].dim == 0


def test_image_and_cokernel(a37):
    P, epi = projective_cover(a37.L(0, 1))
    im, onto, into = image(epi)
    assert is_isomorphic(im, a37.L(0, 1))
    assert onto.is_epi() and into.is_mono()
    K, incl = kernel(epi)
    C, _ = cokernel(incl)
    assert is_isomorphic(C, a37.L(0, 1))


def test_end_algebra_of_uniserial(a37):
    X = a37.L(0, 4)
    assert end_algebra(X).shape == (2, 2, 2)
    assert len(radical_of_end(X)) == 1


def test_summand_count_of_regular_module(a37):
    assert summand_count(regular_module(a37.catalogue.algebra)) == 3


def test_factor_through(a2):
    _, P0, _, S0, S1 = a2
    _, epi = projective_cover(S0)
    assert factor_through(epi, epi, "left") is not None
    assert factor_through(Morphism.identity(S0), epi, "left") is None
    _, mono = injective_envelope(S1)
    assert factor_through(Morphism.identity(S1), mono, "right") is None
    with pytest.raises(ValueError):
        factor_through(epi, epi, "up")


# ── Resolutions ──────────────────────────────────────────────────────

def test_projective_resolution(a37, a2):
    terms = projective_resolution(a37.L(0, 1), 2)
    assert [P.dims for P, _ in terms] == [(3, 2, 2), (2, 3, 2), (2, 3, 2)]
    _, _, _, S0, _ = a2
    assert [P.dims for P, _ in projective_resolution(S0, 5)] == [(1, 1), (0, 1)]


def test_injective_dimension(a37, a2):
    _, _, _, S0, S1 = a2
    assert injective_dimension(S0) == Finite(0)
    assert injective_dimension(S1) == Finite(1)
    assert injective_dimension(a37.L(0, 1)) == InfiniteCertified()
