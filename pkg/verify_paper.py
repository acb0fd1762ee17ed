"""
verify_paper.py
───────────────
Acceptance suites: the worked computations over small algebras, replayed
end to end through both the generic engine and the Nakayama closed forms.

Suites are tagged s2 (tilting), s3 (Gorenstein and duality panels),
s4 (mutation) and s5 (Nakayama classification); ``all`` runs every one.

    from verify_paper import run_suite

    report = run_suite("s5")
    print(report.to_markdown())
    report.passed                      # True
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, List, Tuple

from ar_translate import ar_duality_check, is_gorenstein_projective
from bound_quiver import NakayamaParams, Quiver, path_algebra, projective, regular_module, simple
from errors import OrthorepError
from nakayama import (
    NakIndec,
    bridge,
    canonical_form,
    classify,
    dd,
    dd_by_ext,
    indecomposables,
    max_rigid_extension,
    nak_ext_dim,
    nak_hom_dim,
    nak_stable_hom_dim,
    nak_syzygy,
    nak_tau_higher,
    orbit_union,
    syzygy_orbit_formulas_check,
)
from orthosym import (
    IndecCatalogue,
    companion_coherence,
    g_category,
    gldim_le_test,
    gorenstein_dims_of_end,
    gsc_check_almost,
    is_maximal,
    nakayama_addset,
    nakayama_catalogue,
    orbit_module,
    perp_symmetry_check,
    rigidity_degree,
    selfinjective_gsc,
    weakly_cy_degree,
)
from relative_homology import Finite, adjunction_dims, is_add_split_sequence, right_approx
from rep_module import (
    AddSet,
    add_equal,
    cosyzygy,
    direct_sum,
    ext_dim,
    hom_dim,
    is_isomorphic,
    projectives,
    stable_hom_dim,
    syzygy,
)
from tilting import (
    TiltingVerdict,
    complete_almost_tilting,
    exchange_round_trip,
    exchange_sequence,
    is_tilting,
    maximal_orthogonal_check,
    mutate_right,
    mutation_preserves_orthosymmetry,
    theorem_derived_check,
)

logger = logging.getLogger(__name__)

SCOPES = ("s2", "s3", "s4", "s5")


# ── Report types ─────────────────────────────────────────────────────

@dataclass
class Check:
    """One named acceptance check."""
    name: str
    scope: str
    passed: bool
    elapsed: float
    detail: str = ""

    def __repr__(self) -> str:
        return f"{'✅' if self.passed else '❌'} [{self.scope}] {self.name}"

    def to_dict(self, timing: bool = False) -> dict:
        out = {"name": self.name, "scope": self.scope, "passed": self.passed, "detail": self.detail}
        if timing:
            out["elapsed_s"] = round(self.elapsed, 3)
        return out


@dataclass
class SuiteReport:
    scope: str
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __repr__(self) -> str:
        good = sum(c.passed for c in self.checks)
        return f"SuiteReport({self.scope}: {good}/{len(self.checks)} passed)"

    def to_dict(self, timing: bool = False) -> dict:
        return {
            "scope": self.scope,
            "passed": self.passed,
            "checks": [c.to_dict(timing) for c in self.checks],
        }

    def to_markdown(self) -> str:
        lines = [f"### acceptance suite {self.scope}", "", "| | scope | check | ⏱ | detail |", "|---|---|---|---|---|"]
        for c in self.checks:
            mark = "✅" if c.passed else "❌"
            lines.append(f"| {mark} | {c.scope} | {c.name} | {c.elapsed:.2f}s | {c.detail} |")
        good = sum(c.passed for c in self.checks)
        lines += ["", f"{good}/{len(self.checks)} checks passed"]
        return "\n".join(lines)


CheckFn = Callable[[], Tuple[bool, str]]
CHECKS: List[Tuple[str, str, CheckFn]] = []


def check(scope: str, name: str):
    """Register a check returning (passed, detail)."""
    def wrap(fn: CheckFn) -> CheckFn:
        CHECKS.append((scope, name, fn))
        return fn
    return wrap


# ── Shared settings ──────────────────────────────────────────────────

@dataclass
class NakSetting:
    params: NakayamaParams
    builder: Callable
    catalogue: IndecCatalogue

    def addset(self, members) -> AddSet:
        return nakayama_addset(self.catalogue, members)

    def orbits(self, *anchors) -> AddSet:
        return AddSet([self.catalogue[repr(x)] for x in orbit_union(self.params, *anchors)])

    def L(self, i: int, t: int):
        return self.builder(NakIndec(self.params, i, t))


@lru_cache(maxsize=None)
def nak_setting(e: int, a: int) -> NakSetting:
    params = NakayamaParams(e, a)
    bridged = bridge(params)
    return NakSetting(params, bridged[1], nakayama_catalogue(params, bridged=bridged))


def m1(s: NakSetting) -> AddSet:
    """A ⊕ O_{L(0,1)} ⊕ O_{L(0,2)}."""
    return s.addset(orbit_union(s.params, (0, 1), (0, 2)))


def m2(s: NakSetting) -> AddSet:
    """A ⊕ O_{L(1,1)} ⊕ O_{L(0,2)}."""
    return s.addset(orbit_union(s.params, (1, 1), (0, 2)))


@lru_cache(maxsize=None)
def a2_path_algebra():
    """k(0 → 1): P0 = (1,1), P1 = S1 = (0,1), S0 = I0 = (1,0)."""
    A = path_algebra(Quiver.from_pairs(2, [(0, 1)]), name="A2")
    return A, projective(A, 0), projective(A, 1), simple(A, 0), simple(A, 1)


# ── s2: tilting ──────────────────────────────────────────────────────

@check("s2", "the regular module is Tilting(0)")
def _regular_tilting():
    A = a2_path_algebra()[0]
    verdict = is_tilting(regular_module(A)).verdict
    return verdict == TiltingVerdict("tilting", 0), str(verdict)


@check("s2", "P0 ⊕ S0 over A2 is Tilting(1)")
def _a2_tilting():
    _, P0, _, S0, _ = a2_path_algebra()
    T = direct_sum([P0, S0], name="P0⊕S0")[0]
    verdict = is_tilting(T).verdict
    return verdict == TiltingVerdict("tilting", 1), str(verdict)


@check("s2", "S0 ⊕ S1 over A2 is rejected with Ext¹")
def _a2_rejects():
    _, _, _, S0, S1 = a2_path_algebra()
    T = direct_sum([S0, S1], name="S0⊕S1")[0]
    verdict = is_tilting(T).verdict
    return verdict.kind == "fail" and "Ext^1" in verdict.reason, str(verdict)


@check("s2", "almost complete P0 completes by S0 through 0 → P1 → P0 → S0 → 0")
def _almost_complete():
    _, P0, P1, S0, _ = a2_path_algebra()
    done = complete_almost_tilting(P1, P0, S0, 1)
    ok = len(done.terms) == 1 and is_isomorphic(done.terms[0], P0) and done.tilting == TiltingVerdict("tilting", 1)
    return ok, repr(done)


@check("s2", "the add(A)-approximation kernel of L(0,1) is its syzygy")
def _projective_cover_kernel():
    s = nak_setting(3, 2)
    x = NakIndec(s.params, 0, 1)
    K = right_approx(projectives(s.catalogue.algebra), s.builder(x)).complement
    label = s.catalogue.label_of(K)
    return label == repr(nak_syzygy(x, 1)), label


@check("s2", "Gorenstein projectives: S0 over A2 is not, every L(i,t) is")
def _gorenstein_projectives():
    S0 = a2_path_algebra()[3]
    s = nak_setting(3, 2)
    ok = not is_gorenstein_projective(S0) and all(is_gorenstein_projective(X) for X in s.catalogue)
    return ok, ""


# ── s3: Gorenstein and duality panels ────────────────────────────────

@check("s3", "higher AR duality over A_{2,5} and A_{3,7}, n ≤ 2")
def _ar_duality():
    bad = []
    for e, a in ((2, 2), (3, 2)):
        s = nak_setting(e, a)
        xs = [s.builder(x) for x in indecomposables(s.params, include_projective=False)]
        for n in (0, 1, 2):
            for X in xs:
                for Z in s.catalogue:
                    if not ar_duality_check(X, Z, n):
                        bad.append(f"{X.name},{Z.name},n={n}")
    return not bad, ", ".join(bad[:5])


@check("s3", "End of the 1-ortho-symmetric classes is 3-Gorenstein")
def _gorenstein_classes():
    s = nak_setting(3, 2)
    report = classify(1, 2)
    dims = [gorenstein_dims_of_end(s.addset(c), 1) for c in report.classes]
    ok = bool(dims) and all(d == (Finite(3), Finite(3)) for d in dims)
    return ok, str(dims)


@check("s3", "End(A ⊕ L(0,1)) is 6-Gorenstein for n = 4")
def _gorenstein_n4():
    s = nak_setting(3, 2)
    dims = gorenstein_dims_of_end(s.addset([NakIndec(s.params, 0, 1)]), 4)
    return dims == (Finite(6), Finite(6)), str(dims)


@check("s3", "companions agree with add(M) for M1")
def _companions():
    flags = companion_coherence(m1(nak_setting(3, 2)), 1)
    return all(flags), str(flags)


@check("s3", "gd End(M1) ≤ 4 over A_{3,7} but not over A_{3,10}")
def _gldim_boundary():
    s7, s10 = nak_setting(3, 2), nak_setting(3, 3)
    small = gldim_le_test(m1(s7), 1, s7.catalogue)
    big = gldim_le_test(m1(s10), 1, s10.catalogue)
    witness = NakIndec(s10.params, 0, 5)
    ok = small.holds and not big.holds and repr(witness) in big.violations and dd(witness) == 0
    return ok, f"A_{{3,10}} violations {big.violations}"


@check("s3", "𝒢(M1) = add(M1) over A_{3,7}")
def _g_category():
    s = nak_setting(3, 2)
    M = m1(s)
    want = sorted(s.catalogue.label_of(Y) for Y in M.summands)
    got = g_category(M, 1, s.catalogue)
    return sorted(got) == want, str(got)


@check("s3", "relative syzygy adjunction over M1 on A_{3,7}")
def _adjunction():
    s = nak_setting(3, 2)
    M = m1(s)
    bad = [f"{X.name},{Y.name}" for X in s.catalogue for Y in s.catalogue
           if len(set(adjunction_dims(M, X, Y))) != 1]
    return not bad, ", ".join(bad[:5])


GSC_SAMPLES = [
    ((3, 2), (0, 1), 1),
    ((3, 2), (0, 2), 1),
    ((3, 2), (0, 5), 1),
    ((3, 2), (0, 6), 1),
    ((3, 2), (0, 1), 2),
    ((3, 2), (0, 1), 3),
    ((6, 2), (0, 1), 1),
    ((6, 2), (0, 2), 1),
    ((6, 2), (0, 12), 1),
    ((6, 2), (0, 1), 4),
]


@check("s3", "Gorenstein symmetry for A ⊕ X on ten samples")
def _gsc():
    bad = []
    for (e, a), (i, t), n in GSC_SAMPLES:
        s = nak_setting(e, a)
        x = NakIndec(s.params, i, t)
        if dd(x) < n or nak_tau_higher(x, n) == x:
            bad.append(f"{x!r},n={n}: sample violates its hypotheses")
            continue
        result = gsc_check_almost(projectives(s.catalogue.algebra), s.builder(x), n)
        if not result.consistent:
            bad.append(f"{x!r},n={n}: {result}")
    return not bad, "; ".join(bad)


@check("s3", "id End(A ⊕ L(0,1)) = 6 makes it 4-ortho-symmetric")
def _selfinjective_gsc():
    s = nak_setting(3, 2)
    d, ortho = selfinjective_gsc(s.L(0, 1), 1)
    return d == Finite(6) and ortho is True, f"{d}, {ortho}"


# ── s4: mutation ─────────────────────────────────────────────────────

def _mutation_checks(M: AddSet, pivot: AddSet, want: AddSet) -> Tuple[bool, str]:
    result = mutate_right(M, pivot)
    N = M.without(pivot)
    split = all(is_add_split_sequence(seq, N) for seq in result.split_sequences)
    return add_equal(result.output, want) and split, repr(result)


@check("s4", "μ⁺ at O_{L(0,1)} sends M1 to M2")
def _mutate_forward():
    s = nak_setting(3, 2)
    return _mutation_checks(m1(s), s.orbits((0, 1)), m2(s))


@check("s4", "μ⁺ at O_{L(1,1)} sends M2 back to M1")
def _mutate_back():
    s = nak_setting(3, 2)
    return _mutation_checks(m2(s), s.orbits((1, 1)), m1(s))


@check("s4", "Hom(M1, M2) is a 1-tilting bimodule")
def _derived():
    s = nak_setting(3, 2)
    verdict = theorem_derived_check(m1(s), m2(s), 1, s.catalogue)
    return verdict.kind == "OneTiltingBimodule", repr(verdict)


@check("s4", "τ-fixed pivots keep 4-ortho-symmetry of A ⊕ L(0,1)")
def _preserves():
    s = nak_setting(3, 2)
    M = s.addset([NakIndec(s.params, 0, 1)])
    return mutation_preserves_orthosymmetry(M, s.L(0, 1), 4), ""


@check("s4", "exchange sequences of M1 at O_{L(0,1)} split and round-trip")
def _exchange():
    s = nak_setting(3, 2)
    M, pivot = m1(s), s.orbits((0, 1))
    seq = exchange_sequence(M, pivot, s.catalogue, 1)
    return seq.split and seq.round_trip and exchange_round_trip(M, pivot), repr(seq)


# ── s5: Nakayama algebras ────────────────────────────────────────────

DD_CASES = [(2, 2), (3, 2), (3, 3), (6, 2)]
DD_GENERIC = [(2, 2), (3, 2)]


@check("s5", "rigidity table: closed form against Ext")
def _dd_tables():
    bad = []
    for e, a in DD_CASES:
        for x in indecomposables(NakayamaParams(e, a), include_projective=False):
            if dd(x) != dd_by_ext(x):
                bad.append(f"{x!r} over {x.params}")
    return not bad, ", ".join(bad[:5])


@check("s5", "rigidity table: closed form against the generic engine")
def _dd_generic():
    bad = []
    for e, a in DD_GENERIC:
        s = nak_setting(e, a)
        for x in indecomposables(s.params, include_projective=False):
            if rigidity_degree(AddSet([s.builder(x)]), cap=2 * e) != dd(x):
                bad.append(f"{x!r} over {s.params}")
    return not bad, ", ".join(bad[:5])


@check("s5", "Ω^{2e} is the identity on A_{3,7} and A_{6,13}")
def _periodicity():
    bad = []
    for e, a in ((3, 2), (6, 2)):
        s = nak_setting(e, a)
        for x in indecomposables(s.params, include_projective=False):
            X = s.builder(x)
            if nak_syzygy(x, 2 * e) != x or not is_isomorphic(syzygy(X, 2 * e), X):
                bad.append(f"{x!r} over {s.params}")
    return not bad, ", ".join(bad[:5])


@check("s5", "orbit syzygy formulas for L(0,1) and L(0,2)")
def _orbit_formulas():
    cases = [(q, a) for q in (1, 2) for a in (2, 3)]
    bad = [f"q={q},a={a}" for q, a in cases if not syzygy_orbit_formulas_check(q, a)]
    return not bad, ", ".join(bad)


def _expected_keys(params: NakayamaParams):
    return sorted([
        canonical_form(orbit_union(params, (0, 1), (0, 2))),
        canonical_form(orbit_union(params, (1, 1), (0, 2))),
    ])


@check("s5", "classification over A_{3,7}, pruned and exhaustive")
def _classify_small():
    pruned, full = classify(1, 2), classify(1, 2, pruned=False)
    want = _expected_keys(pruned.params)
    ok = pruned.class_keys() == want == full.class_keys() and full.candidates == 512
    return ok, f"{pruned!r}; {full!r}"


@check("s5", "classification over A_{6,13}, pruned and exhaustive")
def _classify_large():
    pruned, full = classify(2, 2), classify(2, 2, pruned=False)
    want = _expected_keys(pruned.params)
    return pruned.class_keys() == want == full.class_keys(), f"{pruned!r}; {full!r}"


@check("s5", "closed forms agree with the generic engine on A_{2,5} and A_{3,7}")
def _oracle():
    bad = []
    for e, a in ((2, 2), (3, 2)):
        s = nak_setting(e, a)
        A = s.catalogue.algebra
        P = projectives(A)
        xs = indecomposables(s.params)
        for x in xs:
            X = s.builder(x)
            for y in xs:
                Y = s.builder(y)
                if nak_hom_dim(x, y) != hom_dim(X, Y):
                    bad.append(f"Hom({x!r},{y!r})")
                if nak_stable_hom_dim(x, y) != stable_hom_dim(X, Y, P):
                    bad.append(f"stHom({x!r},{y!r})")
                for i in range(1, 7):
                    if nak_ext_dim(x, y, i) != ext_dim(X, Y, i):
                        bad.append(f"Ext^{i}({x!r},{y!r})")
            for k in range(-12, 13):
                z = nak_syzygy(x, k)
                Z = syzygy(X, k) if k >= 0 else cosyzygy(X, -k)
                if z is None:
                    if Z.dim:
                        bad.append(f"Ω^{k}{x!r} should vanish")
                elif not is_isomorphic(Z, s.builder(z)):
                    bad.append(f"Ω^{k}{x!r}")
    return not bad, ", ".join(bad[:5])


@check("s5", "the orbit extension is maximal 1-rigid")
def _max_rigid():
    bad = []
    for q in (1, 2):
        members, rigid, maximal = max_rigid_extension(q, 2)
        if not (rigid and maximal):
            bad.append(f"q={q}")
    s = nak_setting(3, 2)
    members, _, _ = max_rigid_extension(1, 2)
    if not is_maximal(s.addset(members), 1, "rigid", s.catalogue):
        bad.append("generic maximality over A_{3,7}")
    return not bad, ", ".join(bad)


@check("s5", "M1 is maximal 1-orthogonal exactly over A_{3,7}")
def _maximal_orthogonal():
    s7, s10 = nak_setting(3, 2), nak_setting(3, 3)
    small = maximal_orthogonal_check(m1(s7), 1, s7.catalogue)
    big = maximal_orthogonal_check(m1(s10), 1, s10.catalogue)
    return small == (True, True) and big == (False, False), f"{small}, {big}"


@check("s5", "A_{3,7} is weakly 5-Calabi-Yau and its 4-perpendiculars agree")
def _weakly_cy():
    s = nak_setting(3, 2)
    degree = weakly_cy_degree(s.catalogue)
    M = s.addset([NakIndec(s.params, 0, 1)])
    return degree == 5 and perp_symmetry_check(M, 4, s.catalogue), f"degree {degree}"


@check("s5", "the ν-orbit module of L(0,1) is 1-ortho-symmetric")
def _orbit_module():
    s = nak_setting(3, 2)
    built = orbit_module(s.L(0, 1), 1, 2)
    want = s.addset([NakIndec(s.params, 0, 1), NakIndec(s.params, 2, 6)])
    return built.ortho_symmetric and add_equal(built.module, want), repr(built)


# ── Runner ───────────────────────────────────────────────────────────

def run_suite(scope: str = "all") -> SuiteReport:
    """Run every check tagged ``scope`` (or all of them) in registration order."""
    if scope != "all" and scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; choose from {', '.join(SCOPES)} or all")
    report = SuiteReport(scope)
    for tag, name, fn in CHECKS:
        if scope not in ("all", tag):
            continue
        started = time.perf_counter()
        try:
            passed, detail = fn()
        except OrthorepError as exc:
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        elapsed = time.perf_counter() - started
        report.checks.append(Check(name, tag, bool(passed), elapsed, detail))
        logger.info("%s %s (%.2fs)", "PASS" if passed else "FAIL", name, elapsed)
    return report
