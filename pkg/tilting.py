"""
tilting.py
──────────
Tilting modules, almost complete tilting modules, and mutation of
ortho-symmetric modules along add(N)-split sequences.

Everything is certified on the A-side: projective dimensions, Ext
vanishing, coresolutions of A by add(T), approximation kernels and
summand counts.  No module over an endomorphism ring is ever built.

    from tilting import is_tilting, mutate_right

    is_tilting(T).verdict                 # Tilting(1)
    mutate_right(M1, orbit).output        # add(A ⊕ L(1,1) ⊕ L(0,6) ⊕ …)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

from errors import ApproximationDegenerate, InternalInconsistency, PreconditionFailed
from orthosym import (
    IndecCatalogue,
    gldim_le_test,
    is_maximal,
    is_maximal_orthogonal,
    is_n_orthosymmetric,
    is_rigid,
)
from ar_translate import tau_higher
from relative_homology import (
    ResolutionVerdict,
    is_add_split_sequence,
    left_approx,
    right_approx,
)
from rep_module import (
    AddSet,
    add_equal,
    direct_sum,
    ext_dim,
    in_add,
    injectives,
    is_isomorphic,
    projective_dimension,
    projectives,
)
from representation import Module, Morphism, compose
from settings import DEFAULT_RIGIDITY_CAP

logger = logging.getLogger(__name__)

Pivot = Union[AddSet, Module, Sequence[Module]]


def _as_addset(X: Pivot) -> AddSet:
    if isinstance(X, AddSet):
        return X
    if isinstance(X, Module):
        return AddSet.of(X)
    return AddSet.of(*X)


# ── Tilting modules ──────────────────────────────────────────────────

@dataclass(frozen=True)
class TiltingVerdict:
    """Partial(n) | Tilting(n) | Fail(reason)."""
    kind: str
    n: Optional[int] = None
    reason: str = ""

    def __repr__(self) -> str:
        if self.kind == "fail":
            return f"Fail({self.reason})"
        return f"{self.kind.capitalize()}({self.n})"

    __str__ = __repr__


@dataclass
class TiltingReport:
    """
    Parameters
    ----------
    pd : ResolutionVerdict
        Projective dimension of T.
    self_orthogonal_to : int
        Largest j with Ext^i(T, T) = 0 for 1 ≤ i ≤ j (capped at pd).
    coresolution : list of Module, optional
        T_0, …, T_k in add(T) coresolving A, when found.
    coresolution_maps : list of Morphism
        A → T_0 → … → T_k; consecutive maps compose to zero.
    """
    module: Module
    pd: ResolutionVerdict
    self_orthogonal_to: int
    coresolution: Optional[List[Module]]
    verdict: TiltingVerdict
    coresolution_maps: List[Morphism] = field(default_factory=list)

    def __repr__(self) -> str:
        return f"TiltingReport({self.module!r}: {self.verdict}, pd={self.pd})"

    def to_dict(self) -> dict:
        return {
            "module": self.module.name,
            "pd": self.pd.to_dict(),
            "self_orthogonal_to": self.self_orthogonal_to,
            "coresolution": None if self.coresolution is None else [list(T.dims) for T in self.coresolution],
            "coresolution_maps": [f.to_dict() for f in self.coresolution_maps],
            "verdict": str(self.verdict),
        }


def _self_orthogonality(T: Module, limit: int) -> Tuple[int, Optional[str]]:
    for j in range(1, limit + 1):
        d = ext_dim(T, T, j)
        if d:
            return j - 1, f"Ext^{j}(T,T) has dimension {d}"
    return limit, None


def is_partial_tilting(T: Module, n_cap: int = DEFAULT_RIGIDITY_CAP) -> TiltingReport:
    """pd T = n < ∞ and Ext^j(T, T) = 0 for 1 ≤ j ≤ n."""
    if T.dim == 0:
        raise ValueError("the zero module is not a tilting candidate")
    pd = projective_dimension(T, n_cap)
    if not pd.is_finite:
        return TiltingReport(T, pd, 0, None, TiltingVerdict("fail", reason=f"pd(T) is {pd}"))
    n = pd.value
    ortho, failure = _self_orthogonality(T, n)
    if failure:
        return TiltingReport(T, pd, ortho, None, TiltingVerdict("fail", reason=failure))
    return TiltingReport(T, pd, ortho, None, TiltingVerdict("partial", n))


def is_tilting(T: Module, n_cap: int = DEFAULT_RIGIDITY_CAP) -> TiltingReport:
    """Partial tilting plus 0 → A → T_0 → … → T_k → 0 in add(T) with k ≤ pd T."""
    report = is_partial_tilting(T, n_cap)
    if report.verdict.kind == "fail":
        return report
    n = report.verdict.n
    A = T.algebra
    addT = AddSet.of(T)
    C = projectives(A).module()
    terms: List[Module] = []
    maps: List[Morphism] = []
    onto: Optional[Morphism] = None     # T_{k-1} ↠ C
    for k in range(n + 1):
        if in_add(C, addT):
            terms.append(C)
            if onto is not None:
                maps.append(onto)
            report.coresolution = terms
            report.coresolution_maps = maps
            report.verdict = TiltingVerdict("tilting", n)
            logger.debug("%r coresolves A in %d steps", T, k)
            return report
        if k == n:
            break
        ap = left_approx(addT, C)
        if not ap.map.is_mono():
            report.verdict = TiltingVerdict("fail", reason=f"step {k} of the add(T)-coresolution of A is not injective")
            return report
        terms.append(ap.object)
        maps.append(ap.map if onto is None else compose(onto, ap.map))
        onto = ap.complement_map
        C = ap.complement
    report.verdict = TiltingVerdict("fail", reason=f"A has no add(T)-coresolution of length ≤ {n}")
    return report


@dataclass
class AlmostCompletion:
    """0 → P → Q_{n−1} → … → Q_0 → X → 0 with Q_i ∈ add(Q)."""
    terms: List[Module]
    maps: List[Morphism]
    tilting: TiltingVerdict

    def __repr__(self) -> str:
        return f"AlmostCompletion({len(self.terms)} middle terms, {self.tilting})"


def complete_almost_tilting(P: Module, Q: Module, X: Module, n: int) -> AlmostCompletion:
    """
    For A = P ⊕ Q with P indecomposable projective and X ⊕ Q partial
    n-tilting, the sequence ending in X built from minimal right
    add(Q)-approximations; its last kernel is P.
    """
    if n == 0:
        if not is_isomorphic(X, P):
            raise PreconditionFailed(f"n = 0 forces {X.name} ≅ {P.name}")
        return AlmostCompletion([], [], TiltingVerdict("tilting", 0))
    T = direct_sum([X, Q], name=f"{X.name}⊕{Q.name}")[0]
    partial = is_partial_tilting(T)
    if partial.verdict.kind != "partial" or partial.verdict.n > n:
        raise PreconditionFailed(f"{T.name} is not partial {n}-tilting: {partial.verdict}")
    addQ = AddSet.of(Q)
    terms, maps, Z = [], [], X
    for _ in range(n):
        ap = right_approx(addQ, Z)
        if not ap.map.is_epi():
            raise PreconditionFailed(f"add({Q.name}) does not cover {Z.name}")
        terms.append(ap.object)
        maps.append(ap.map)
        Z = ap.complement
    if Z.dims != P.dims or not is_isomorphic(Z, P):
        raise InternalInconsistency(f"the completion of {X.name} ends in {Z!r}, not {P.name}")
    verdict = is_tilting(T).verdict
    if verdict != TiltingVerdict("tilting", partial.verdict.n):
        raise InternalInconsistency(f"completed module {T.name} is {verdict}")
    return AlmostCompletion(terms, maps, verdict)


# ── Endomorphism-side certification ──────────────────────────────────

@dataclass(frozen=True)
class DerivedVerdict:
    kind: str
    reason: str = ""

    def __repr__(self) -> str:
        return f"{self.kind}({self.reason})" if self.reason else self.kind


def theorem_derived_check(
    M: AddSet,
    N: AddSet,
    n: int,
    catalogue: IndecCatalogue,
    maximal_side: str = "M",
) -> DerivedVerdict:
    """
    Whether Hom(M, N) is a partial or full 1-tilting module.

    With M maximal, the kernel of the minimal right add(M)-approximation of
    N must lie in add(M), and the module is tilting iff M and N have the
    same number of indecomposable summands. With N maximal, the cokernel of
    the minimal left add(N)-approximation M → N_0 must lie in add(N); then
    0 → M → N_0 → N_1 → 0 coresolves M by add(N) and the module is tilting.
    """
    if maximal_side not in ("M", "N"):
        raise ValueError("maximal_side is 'M' or 'N'")
    for name, X in (("M", M), ("N", N)):
        if not is_n_orthosymmetric(X, n, with_gorenstein=False).ortho_symmetric:
            raise PreconditionFailed(f"{name} is not {n}-ortho-symmetric")
    side = M if maximal_side == "M" else N
    if not is_maximal(side, n, "orthosymmetric", catalogue):
        raise PreconditionFailed(f"{maximal_side} is not maximal {n}-ortho-symmetric")
    Mm, Nm = M.module(), N.module()
    for i in range(1, n):
        if ext_dim(Mm, Nm, i):
            raise PreconditionFailed(f"Ext^{i}(M, N) ≠ 0")

    if maximal_side == "N":
        C = left_approx(N, Mm).complement
        if C.dim and not in_add(C, N):
            return DerivedVerdict("Fail", "approximation cokernel outside add(N)")
        logger.debug("add(N) coresolves M with cokernel %r", C)
        return DerivedVerdict("OneTiltingBimodule")

    K = right_approx(M, Nm).complement
    if K.dim and not in_add(K, M):
        return DerivedVerdict("Fail", "approximation kernel outside add(M)")
    if len(N) == len(M):
        return DerivedVerdict("OneTiltingBimodule")
    return DerivedVerdict("PartialOneTilting")


# ── Mutation ─────────────────────────────────────────────────────────

@dataclass
class MutationResult:
    """μ^±_X(M) with one add(N)-split sequence per pivot summand."""
    input: AddSet
    pivot: AddSet
    output: AddSet
    split_sequences: List[Tuple[Morphism, Morphism]] = field(default_factory=list)

    def __repr__(self) -> str:
        return f"MutationResult({self.output!r})"

    def to_dict(self) -> dict:
        return {
            "input": self.input.names(),
            "pivot": self.pivot.names(),
            "output": self.output.names(),
            "sequences": [[f.to_dict(), g.to_dict()] for f, g in self.split_sequences],
        }


def _complement(M: AddSet, X: AddSet) -> AddSet:
    N = M.without(X)
    for Y in X.summands:
        if in_add(Y, N):
            raise ApproximationDegenerate(f"{Y.name} already lies in add(N)")
    return N


def mutate_right(M: AddSet, X: Pivot) -> MutationResult:
    """μ⁺_X(M) = Ker(g) ⊕ N for minimal right add(N)-approximations g: N_X → X."""
    pivot = _as_addset(X)
    N = _complement(M, pivot)
    out, seqs = N, []
    for Y in pivot.summands:
        ap = right_approx(N, Y)
        seqs.append((ap.complement_map, ap.map))
        if ap.complement.dim:
            out = out.union(AddSet.of(ap.complement))
    logger.info("right mutation of %r at %r gives %r", M, pivot, out)
    return MutationResult(M, pivot, out, seqs)


def mutate_left(M: AddSet, X: Pivot) -> MutationResult:
    """μ⁻_X(M) = N ⊕ Coker(f) for minimal left add(N)-approximations f: X → N^X."""
    pivot = _as_addset(X)
    N = _complement(M, pivot)
    out, seqs = N, []
    for Y in pivot.summands:
        ap = left_approx(N, Y)
        seqs.append((ap.map, ap.complement_map))
        if ap.complement.dim:
            out = out.union(AddSet.of(ap.complement))
    logger.info("left mutation of %r at %r gives %r", M, pivot, out)
    return MutationResult(M, pivot, out, seqs)


def _tau_fixed(X: AddSet, n: int) -> bool:
    image = AddSet.of(tau_higher(X.module(), n))
    return add_equal(image, X)


def mutation_preserves_orthosymmetry(M: AddSet, X: Pivot, n: int) -> bool:
    """N n-ortho-symmetric and τ_{n+1}X ≅ X force μ⁺_X(M) to be n-ortho-symmetric."""
    pivot = _as_addset(X)
    N = _complement(M, pivot)
    if not is_n_orthosymmetric(N, n, with_gorenstein=False).ortho_symmetric:
        raise PreconditionFailed(f"N = {N!r} is not {n}-ortho-symmetric")
    if not _tau_fixed(pivot, n):
        raise PreconditionFailed(f"τ_{n + 1} does not fix the pivot {pivot!r}")
    out = mutate_right(M, pivot).output
    verdict = is_n_orthosymmetric(out, n, with_gorenstein=False).ortho_symmetric
    if not verdict:
        raise InternalInconsistency(f"μ⁺ of {M!r} lost {n}-ortho-symmetry")
    return verdict


@dataclass
class ExchangeSequence:
    """0 → X → N₁ → K → 0 and 0 → K → N₀ → X → 0 spliced at K."""
    pivot: AddSet
    kernel: Module
    left: Tuple[Morphism, Morphism]
    right: Tuple[Morphism, Morphism]
    split: bool
    round_trip: bool

    def __repr__(self) -> str:
        return f"ExchangeSequence(K={self.kernel!r}, split={self.split}, round_trip={self.round_trip})"

    @property
    def middle_terms(self) -> Tuple[Module, Module]:
        return self.left[0].target, self.right[0].target


def exchange_round_trip(M: AddSet, X: Pivot) -> bool:
    """μ⁺ at the exchanged summands undoes μ⁺_X."""
    pivot = _as_addset(X)
    first = mutate_right(M, pivot)
    exchanged = first.output.without(first.input)
    if not exchanged.summands:
        return False
    return add_equal(mutate_right(first.output, exchanged).output, M)


def exchange_sequence(M: AddSet, X: Pivot, catalogue: IndecCatalogue, n: int = 1) -> ExchangeSequence:
    """The four-term sequence 0 → X → N₁ → N₀ → X → 0 of a maximal pivot exchange."""
    pivot = _as_addset(X)
    A = M.algebra
    if any(in_add(Y, projectives(A)) or in_add(Y, injectives(A)) for Y in pivot.summands):
        raise PreconditionFailed("the pivot must have no projective-injective summand")
    if not _tau_fixed(pivot, n):
        raise PreconditionFailed(f"τ_{n + 1} does not fix the pivot {pivot!r}")
    if not is_maximal(M, n, "orthosymmetric", catalogue):
        raise PreconditionFailed(f"{M!r} is not maximal {n}-ortho-symmetric")
    N = _complement(M, pivot)
    Xm = pivot.module()
    rap = right_approx(N, Xm)
    lap = left_approx(N, Xm)
    if not is_isomorphic(rap.complement, lap.complement):
        raise InternalInconsistency("the two halves of the exchange sequence do not meet")
    right = (rap.complement_map, rap.map)
    left = (lap.map, lap.complement_map)
    split = is_add_split_sequence(right, N) and is_add_split_sequence(left, N)
    return ExchangeSequence(pivot, rap.complement, left, right, split, exchange_round_trip(M, pivot))


# ── Maximal orthogonality ────────────────────────────────────────────

def maximal_orthogonal_check(M: AddSet, n: int, catalogue: IndecCatalogue) -> Tuple[bool, bool]:
    """
    (M maximal n-orthogonal, M n-ortho-symmetric with gd End(M) ≤ n+3).

    The two agree: an ortho-symmetric module has (n+2)-Gorenstein
    endomorphism ring, which then has finite global dimension.
    """
    direct = is_maximal_orthogonal(M, n, catalogue)
    ortho = is_rigid(M, n) and is_n_orthosymmetric(M, n, with_gorenstein=False).ortho_symmetric
    via_gldim = ortho and gldim_le_test(M, n, catalogue).holds
    if direct != via_gldim:
        raise InternalInconsistency(f"maximal orthogonality tests disagree for {M!r}")
    return direct, via_gldim
