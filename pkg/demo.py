"""
demo.py
───────
Quick tour of orthorep over the symmetric Nakayama algebra A_{3,7}.

Usage:
    python demo.py
"""

from bound_quiver import NakayamaParams
from nakayama import NakIndec, bridge, classify, dd, dd_table_markdown, orbit_union
from orthosym import gldim_le_test, gorenstein_dims_of_end, is_n_orthosymmetric, nakayama_addset, nakayama_catalogue
from relative_homology import Finite
from rep_module import AddSet, add_equal, ext_dim
from tilting import mutate_right


def main():
    print("🧮 orthorep · ortho-symmetric modules over A_{3,7}")
    print("=" * 50)

    params = NakayamaParams(e=3, a=2)
    bridged = bridge(params)
    _, build = bridged
    cat = nakayama_catalogue(params, bridged=bridged)
    print(f"\nCatalogue: {len(cat)} indecomposables L(i,t)\n")

    # ── Rigidity table ───────────────────────────────────────────────
    print(dd_table_markdown(3, 2))

    x = NakIndec(params, 0, 1)
    X = build(x)
    print(f"\n  dd({x!r}) = {dd(x)};  Ext^5({x!r}, {x!r}) has dimension {ext_dim(X, X, 5)}")

    # ── Known answers ────────────────────────────────────────────────
    M1 = nakayama_addset(cat, orbit_union(params, (0, 1), (0, 2)))
    M2 = nakayama_addset(cat, orbit_union(params, (1, 1), (0, 2)))
    pivot = AddSet([cat[repr(y)] for y in orbit_union(params, (0, 1))])

    cases = [
        ("M1 is 1-ortho-symmetric", lambda: is_n_orthosymmetric(M1, 1, with_gorenstein=False).ortho_symmetric),
        ("End(M1) is 3-Gorenstein", lambda: gorenstein_dims_of_end(M1, 1) == (Finite(3), Finite(3))),
        ("gd End(M1) ≤ 4", lambda: gldim_le_test(M1, 1, cat).holds),
        ("μ⁺ at O_L(0,1) turns M1 into M2", lambda: add_equal(mutate_right(M1, pivot).output, M2)),
        ("two classes over A_{3,7}", lambda: len(classify(1, 2).classes) == 2),
    ]

    print(f"\nRunning {len(cases)} checks …\n")
    correct = 0
    for text, run in cases:
        ok = run()
        correct += ok
        print(f"  {'✅' if ok else '❌'}  {text}")

    print(f"\nPassed: {correct}/{len(cases)}")

    # ── Classification ───────────────────────────────────────────────
    print("\n" + "=" * 50)
    print(classify(1, 2).to_markdown())
    print("\n👋 Bye!")


if __name__ == "__main__":
    main()
