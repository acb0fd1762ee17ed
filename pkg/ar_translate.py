"""
ar_translate.py
───────────────
Transpose, Nakayama functor, Auslander–Reiten translates and their higher
versions τ_{n+1} = τΩ^n, τ⁻_{n+1} = τ⁻Ω^{-n}.

All translates are stable operators: projective (for τ) and injective
(for τ⁻) summands are stripped.

    from ar_translate import tau, tau_higher, m_plus

    tau(S0)                 # L(1,1) over A_{3,7}
    tau_higher(S0, 1)       # L(2,6)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Tuple

from bound_quiver import dualize
from errors import PreconditionFailed
from rep_module import (
    AddSet,
    _omega_plain,
    cached_projective,
    cokernel,
    cosyzygy,
    decompose,
    direct_sum,
    ext_dim,
    from_projective,
    hstack_morphisms,
    injectives,
    is_self_injective,
    kernel,
    projective_cover,
    projectives,
    stable_hom_dim,
    strip_injective,
    strip_projective,
    syzygy,
    top,
)
from representation import Module, Morphism, compose

logger = logging.getLogger(__name__)


# ── Presentations ────────────────────────────────────────────────────

@dataclass
class Presentation:
    """Minimal projective presentation P1 --θ--> P0 --π--> X --> 0."""
    theta: Morphism
    cover: Morphism
    vertices0: List[int]
    vertices1: List[int]

    def __repr__(self) -> str:
        return f"Presentation(P0 at {self.vertices0}, P1 at {self.vertices1})"


@dataclass
class TranslateResult:
    value: Module
    trace: Presentation

    def __repr__(self) -> str:
        return f"TranslateResult({self.value!r})"


def cover_vertices(X: Module) -> List[int]:
    """Vertices of the indecomposable summands of P(X), in cover order."""
    T = top(X)
    return [v for v in X.algebra.vertices for _ in range(T.dims[v])]


def minimal_presentation(X: Module) -> Presentation:
    _, epi = projective_cover(X)
    _, _, K, incl = _omega_plain(X)
    _, epi1 = projective_cover(K)
    theta = compose(epi1, incl)
    return Presentation(theta, epi, cover_vertices(X), cover_vertices(K))


def _offsets(A, vertices: List[int], w: int) -> List[int]:
    out, pos = [], 0
    for v in vertices:
        out.append(pos)
        pos += len(A.paths_between(v, w))
    return out


def hom_into_regular(pres: Presentation) -> Morphism:
    """Hom(θ, A): Hom(P0, A) → Hom(P1, A) as a map of A^op-projectives."""
    A = pres.theta.source.algebra
    op = A.opposite()
    v0, v1 = pres.vertices0, pres.vertices1
    Q0 = direct_sum([cached_projective(op, v) for v in v0], name="Hom(P0,A)")[0] if v0 else Module.zero(op)
    Q1 = direct_sum([cached_projective(op, w) for w in v1], name="Hom(P1,A)")[0] if v1 else Module.zero(op)
    if not v0:
        return Morphism.zero(Q0, Q1)
    F = A.field
    theta = pres.theta
    parts = []
    for k, v in enumerate(v0):
        # e_v in Hom(P0, A) goes to (θ_{k,l})_l with θ_{k,l} ∈ (P_v)_{w_l}
        y = F.zeros(Q1.dims[v], 1)[:, 0]
        pos = 0
        for l, w in enumerate(v1):
            # (P^op_w)_v and (P_v)_w share the basis of paths v → w
            length = len(A.paths_between(v, w))
            col = _offsets(A, v1, w)[l] + A.paths_between(w, w).index(A.idempotent(w))
            start = _offsets(A, v0, w)[k]
            y[pos:pos + length] = theta.blocks[w][start:start + length, col]
            pos += length
        parts.append(from_projective(v, Q1, y))
    return hstack_morphisms(Q0, parts, Q1)


# ── Transpose and Nakayama functor ───────────────────────────────────

def transpose_with_trace(X: Module) -> TranslateResult:
    pres = minimal_presentation(X)
    C, _ = cokernel(hom_into_regular(pres))
    value = strip_projective(C).renamed(f"Tr({X.name})")
    return TranslateResult(value, pres)


def transpose(X: Module) -> Module:
    """Tr X over A^op; zero on projectives."""
    if X.dim == 0:
        return Module.zero(X.algebra.opposite())
    return transpose_with_trace(X).value


def nakayama_functor(X: Module) -> Module:
    """ν X = D Hom(X, A), read off a projective presentation."""
    if X.dim == 0:
        return X
    K, _ = kernel(hom_into_regular(minimal_presentation(X)))
    return dualize(K, name=f"ν({X.name})")


def nakayama_inverse(X: Module) -> Module:
    """ν⁻ X = Hom(DA, X), computed as D ν_{A^op} D X."""
    if X.dim == 0:
        return X
    return dualize(nakayama_functor(dualize(X)), name=f"ν⁻({X.name})")


def nakayama_on_projectives_check(A) -> bool:
    """ν P_v ≅ I_v for every vertex."""
    from bound_quiver import injective
    from rep_module import is_isomorphic
    return all(is_isomorphic(nakayama_functor(cached_projective(A, v)), injective(A, v)) for v in A.vertices)


# ── Translates ───────────────────────────────────────────────────────

def tau(X: Module) -> Module:
    """τ X = D Tr X."""
    if X.dim == 0:
        return X
    return strip_injective(dualize(transpose(X))).renamed(f"τ({X.name})")


def tau_minus(X: Module) -> Module:
    """τ⁻ X = Tr D X."""
    if X.dim == 0:
        return X
    return strip_projective(transpose(dualize(X))).renamed(f"τ⁻({X.name})")


def tau_higher(X: Module, n: int) -> Module:
    """τ_{n+1} X = τ Ω^n X."""
    if n < 0:
        raise ValueError("tau_higher needs n ≥ 0")
    return tau(syzygy(X, n))


def tau_higher_minus(X: Module, n: int) -> Module:
    """τ⁻_{n+1} X = τ⁻ Ω^{-n} X."""
    if n < 0:
        raise ValueError("tau_higher_minus needs n ≥ 0")
    return tau_minus(cosyzygy(X, n))


def tau_via_nakayama(X: Module) -> Module:
    """Ω²ν X; agrees with τ X over a self-injective algebra."""
    if not is_self_injective(X.algebra):
        raise PreconditionFailed("τ ≅ Ω²ν needs a self-injective algebra")
    return syzygy(nakayama_functor(X), 2)


# ── Companions M⁺ and M⁻ ─────────────────────────────────────────────

def _perp_to(M: AddSet, other: AddSet, n: int, left: bool) -> bool:
    for Y in M.summands:
        for Z in other.summands:
            for i in range(1, n + 1):
                if (ext_dim(Y, Z, i) if left else ext_dim(Z, Y, i)):
                    return False
    return True


def m_plus(M: AddSet, n: int) -> AddSet:
    """add(τ_{n+1}M ⊕ DA); needs Ext^i(M, A) = 0 for 1 ≤ i ≤ n."""
    A = M.algebra
    if not _perp_to(M, projectives(A), n, left=True):
        raise PreconditionFailed(f"M is not in ⊥{n}A")
    out = AddSet(list(injectives(A).summands))
    for Y in M.summands:
        Z = tau_higher(Y, n)
        for piece, _ in decompose(Z) if Z.dim else []:
            out = out.with_summand(piece)
    return out


def m_minus(M: AddSet, n: int) -> AddSet:
    """add(A ⊕ τ⁻_{n+1}M); needs Ext^i(DA, M) = 0 for 1 ≤ i ≤ n."""
    A = M.algebra
    if not _perp_to(M, injectives(A), n, left=False):
        raise PreconditionFailed(f"M is not in (DA)^⊥{n}")
    out = AddSet(list(projectives(A).summands))
    for Y in M.summands:
        Z = tau_higher_minus(Y, n)
        for piece, _ in decompose(Z) if Z.dim else []:
            out = out.with_summand(piece)
    return out


# ── AR duality ───────────────────────────────────────────────────────

def ar_duality_check(X: Module, Z: Module, n: int) -> bool:
    """
    Dimension form of the higher AR duality for X ∈ ⊥nA:

        dim Ext^{n+1-i}(X, Z) = dim Ext^i(Z, τ_{n+1}X)   (1 ≤ i ≤ n)
        dim StHom(X, Z)       = dim Ext^{n+1}(Z, τ_{n+1}X)
    """
    A = X.algebra
    P = projectives(A)
    for Q in P.summands:
        for i in range(1, n + 1):
            if X.dim and ext_dim(X, Q, i):
                raise PreconditionFailed(f"Ext^{i}({X.name}, A) ≠ 0; X is not in ⊥{n}A")
    T = tau_higher(X, n)
    for i in range(1, n + 1):
        if ext_dim(X, Z, n + 1 - i) != ext_dim(Z, T, i):
            logger.debug("AR duality fails at i=%d for %r, %r", i, X, Z)
            return False
    return stable_hom_dim(X, Z, P) == ext_dim(Z, T, n + 1)


# ── Gorenstein projectives and reflexives ────────────────────────────

def _ext_into_regular(Y: Module, i: int) -> int:
    return sum(ext_dim(Y, Q, i) for Q in projectives(Y.algebra).summands)


def is_gorenstein_projective(X: Module, cap: int = 4) -> bool:
    """Bounded certificate: Ext^i(X, A) = 0 = Ext^i(Tr X, A) for 1 ≤ i ≤ cap."""
    if X.dim == 0 or is_self_injective(X.algebra):
        return True
    TrX = transpose(X)
    for i in range(1, cap + 1):
        if _ext_into_regular(X, i):
            return False
        if TrX.dim and _ext_into_regular(TrX, i):
            return False
    return True


def is_torsionless(X: Module) -> bool:
    TrX = transpose(X)
    return TrX.dim == 0 or _ext_into_regular(TrX, 1) == 0


def is_reflexive(X: Module) -> bool:
    """Ext¹(Tr X, A) = 0 = Ext²(Tr X, A)."""
    TrX = transpose(X)
    return TrX.dim == 0 or (_ext_into_regular(TrX, 1) == 0 and _ext_into_regular(TrX, 2) == 0)
