"""
test_bound_quiver.py
────────────────────
Bound quiver algebras: bases, admissibility, opposites, files.

Usage:
    pytest test_bound_quiver.py
"""

import json

import pytest

from bound_quiver import (
    NakayamaParams,
    Quiver,
    build_algebra,
    dump_algebra,
    dualize,
    injective,
    load_algebra,
    nakayama_algebra,
    path_algebra,
    projective,
    simple,
)
from errors import InfiniteDimensional, NonAdmissible
from rep_module import is_isomorphic
from representation import Module, dump_module, load_module

NAKAYAMA_DIMS = [
    # (e, a, dim A)
    (1, 1, 2),
    (2, 2, 10),
    (3, 2, 21),
]


@pytest.mark.parametrize("e, a, dim", NAKAYAMA_DIMS)
def test_nakayama_dimension(e, a, dim):
    A = nakayama_algebra(NakayamaParams(e, a))
    assert A.dim == dim
    assert A.vertex_count == e


def test_params_label_and_bounds():
    params = NakayamaParams(3, 2)
    assert params.b == 7
    assert str(params) == "A_{3,7}"
    with pytest.raises(ValueError):
        NakayamaParams(0, 1)


def test_path_algebra_of_a2():
    A = path_algebra(Quiver.from_pairs(2, [(0, 1)]))
    assert A.dim == 3
    assert projective(A, 0).dims == (1, 1)
    assert projective(A, 1).dims == (0, 1)
    assert injective(A, 0).dims == (1, 0)
    assert simple(A, 1).dims == (0, 1)


def test_nakayama_projectives():
    A = nakayama_algebra(NakayamaParams(3, 2))
    assert projective(A, 0).dims == (3, 2, 2)
    assert projective(A, 1).dims == (2, 3, 2)


def test_multiplication_axioms():
    A = nakayama_algebra(NakayamaParams(2, 2))
    assert A.check_associativity()
    assert A.check_unit()


def test_opposite_is_an_involution():
    A = nakayama_algebra(NakayamaParams(3, 2))
    assert A.opposite().opposite() is A
    assert A.opposite().dim == A.dim


def test_dualize_lands_over_opposite():
    A = nakayama_algebra(NakayamaParams(3, 2))
    P = projective(A, 0)
    D = dualize(P)
    assert D.algebra is A.opposite()
    assert D.dims == P.dims


def test_quiver_rejects_bad_arrows():
    with pytest.raises(ValueError):
        Quiver.from_pairs(2, [(0, 2)])
    with pytest.raises(ValueError):
        Quiver(0, ())


def test_length_one_relation_is_not_admissible():
    loop = Quiver.from_pairs(1, [(0, 0)])
    with pytest.raises(NonAdmissible):
        build_algebra(loop, [[(1, (0,))]])


def test_loop_without_relations_is_infinite():
    loop = Quiver.from_pairs(1, [(0, 0)])
    with pytest.raises(InfiniteDimensional):
        build_algebra(loop, [], max_length=5)


def test_zero_relation_cuts_the_basis():
    # 0 → 1 → 2 with the composite killed
    quiver = Quiver.from_pairs(3, [(0, 1), (1, 2)])
    A = build_algebra(quiver, [[(1, (0, 1))]])
    assert A.dim == 5


def test_module_must_satisfy_relations():
    quiver = Quiver.from_pairs(3, [(0, 1), (1, 2)])
    A = build_algebra(quiver, [[(1, (0, 1))]])
    data = {"dims": [1, 1, 1], "maps": {"0": [["1"]], "1": [["1"]]}}
    with pytest.raises(ValueError):
        Module.from_dict(A, data)
    ok = Module.from_dict(A, {"dims": [1, 1, 0], "maps": {"0": [["1"]]}})
    assert ok.dim == 2


def test_self_injectivity():
    assert nakayama_algebra(NakayamaParams(3, 2)).is_self_injective()
    assert not path_algebra(Quiver.from_pairs(2, [(0, 1)])).is_self_injective()


def test_symmetric_nakayama_permutation_is_trivial():
    A = nakayama_algebra(NakayamaParams(3, 2))
    assert A.nakayama_permutation() == {0: 0, 1: 1, 2: 2}


# ── Files ────────────────────────────────────────────────────────────

def test_json_round_trip(tmp_path):
    A = nakayama_algebra(NakayamaParams(2, 2))
    path = tmp_path / "a25.json"
    dump_algebra(A, path)
    B = load_algebra(path)
    assert B.dim == A.dim
    assert B.name == "a25"


def test_toml_path_algebra(tmp_path):
    path = tmp_path / "a2.toml"
    path.write_text('vertices = 2\narrows = [[0, 1]]\nfield = "Q"\n')
    A = load_algebra(path)
    assert A.dim == 3
    assert A.field.name == "Q"


def test_malformed_description(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"arrows": [[0, 1]]}))
    with pytest.raises(ValueError):
        load_algebra(path)


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_algebra(tmp_path / "nowhere.json")


def test_module_file_round_trip(a2, tmp_path):
    A, P0, _, _, _ = a2
    path = tmp_path / "p0.json"
    dump_module(P0, path)
    X = load_module(A, path)
    assert X.name == "p0"
    assert is_isomorphic(X, P0)
    with pytest.raises(FileNotFoundError):
        load_module(A, tmp_path / "nowhere.json")
