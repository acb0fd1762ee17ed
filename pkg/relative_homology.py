"""
relative_homology.py
────────────────────
Approximation theory relative to add(M).

Minimal right/left add(M)-approximations, relative syzygies Ω_M^{±k},
M-(co)resolution dimensions with certified-infinite detection,
add(M)-split sequences, and the unit/counit sequences attached to an
n-rigid generator-cogenerator.

    from relative_homology import right_approx, m_resdim, Finite

    ap = right_approx(add_A, S0)      # P_0 ↠ S_0, complement rad P_0
    m_resdim(add_A, S0)               # InfiniteCertified over A_{3,7}
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from bound_quiver import dualize
from errors import (
    DecompositionFailed,
    Inconclusive,
    InternalInconsistency,
    NotCogenerator,
    NotExact,
    NotGenerator,
    PreconditionFailed,
)
from rep_module import (
    AddSet,
    cokernel,
    direct_sum,
    ext_dim,
    extend_through,
    hom,
    hstack_morphisms,
    in_add,
    injectives,
    is_isomorphic,
    kernel,
    local_end,
    projectives,
    stable_hom_dim,
    strip_add,
    vstack_morphisms,
)
from representation import Module, Morphism, compose
from settings import DEFAULT_CUTOFF

logger = logging.getLogger(__name__)


# ── Verdicts ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class ResolutionVerdict:
    """Finite(d) | InfiniteCertified | UnknownAtCutoff(c)."""
    tag: str
    value: Optional[int] = None

    def __repr__(self) -> str:
        if self.tag == "finite":
            return f"Finite({self.value})"
        if self.tag == "unknown":
            return f"UnknownAtCutoff({self.value})"
        return "InfiniteCertified"

    __str__ = __repr__

    @property
    def is_finite(self) -> bool:
        return self.tag == "finite"

    def shifted(self, k: int) -> "ResolutionVerdict":
        return Finite(self.value + k) if self.is_finite else self

    def to_dict(self) -> dict:
        return {"tag": self.tag, "value": self.value}


def Finite(d: int) -> ResolutionVerdict:
    return ResolutionVerdict("finite", int(d))


def InfiniteCertified() -> ResolutionVerdict:
    return ResolutionVerdict("infinite")


def UnknownAtCutoff(c: int) -> ResolutionVerdict:
    return ResolutionVerdict("unknown", int(c))


# ── Approximations ───────────────────────────────────────────────────

@dataclass
class Approximation:
    """
    A minimal add(M)-approximation.

    Parameters
    ----------
    object : Module
        The approximating module in add(M).
    map : Morphism
        object → X (right) or X → object (left).
    complement : Module
        Kernel of ``map`` (right) or its cokernel (left).
    complement_map : Morphism
        complement ↪ object (right) or object ↠ complement (left).
    """
    side: str
    object: Module
    map: Morphism
    complement: Module
    complement_map: Morphism
    multiplicities: List[int] = field(default_factory=list)
    minimal: bool = True

    def __repr__(self) -> str:
        return f"Approximation({self.side}, object={self.object!r}, complement={self.complement!r})"


def _radical_maps(M: AddSet, i: int, j: int) -> List[Morphism]:
    """Basis of rad(M_i, M_j)."""
    if i != j:
        return hom(M.summands[i], M.summands[j]).basis
    loc = local_end(M.summands[i])
    if loc is None:
        raise DecompositionFailed(f"{M.summands[i]!r} is not certified indecomposable")
    return loc.radical


def _top_basis(F, space: List[Morphism], radical_part: List[np.ndarray]) -> List[Morphism]:
    """Members of ``space`` completing the span of ``radical_part`` to the whole space."""
    if not space:
        return []
    H = np.stack([f.vector() for f in space], axis=1)
    if radical_part:
        R = F.column_space(np.stack(radical_part, axis=1))
    else:
        R = F.zeros(H.shape[0], 0)
    k = R.shape[1]
    _, pivots = F.rref(np.concatenate([R, H], axis=1))
    return [space[p - k] for p in pivots if p >= k]


def right_approx(M: AddSet, X: Module) -> Approximation:
    """Minimal right add(M)-approximation of X.

    For each M_i the chosen maps M_i → X are a basis of Hom(M_i, X)
    modulo the maps that factor through rad(M_i, M).
    """
    F = X.field
    chosen, summands, mults = [], [], []
    for i, Mi in enumerate(M.summands):
        space = hom(Mi, X).basis
        rad_part = []
        for j, Mj in enumerate(M.summands):
            fs = hom(Mj, X).basis
            if not fs:
                continue
            for h in _radical_maps(M, i, j):
                for f in fs:
                    rad_part.append(compose(h, f).vector())
        top = _top_basis(F, space, rad_part)
        mults.append(len(top))
        for f in top:
            chosen.append(f)
            summands.append(Mi)
    if not chosen:
        Z = Module.zero(X.algebra)
        zero_map = Morphism.zero(Z, X)
        return Approximation("right", Z, zero_map, Z, Morphism.zero(Z, Z), mults)
    obj = direct_sum(summands, name="M_X")[0]
    approx = hstack_morphisms(obj, chosen, X)
    K, incl = kernel(approx)
    logger.debug("right add(M)-approximation of %r: multiplicities %s", X, mults)
    return Approximation("right", obj, approx, K.renamed(f"Ω_M({X.name})"), incl, mults)


def left_approx(M: AddSet, X: Module) -> Approximation:
    """Minimal left add(M)-approximation of X (dual construction)."""
    F = X.field
    chosen, summands, mults = [], [], []
    for i, Mi in enumerate(M.summands):
        space = hom(X, Mi).basis
        rad_part = []
        for j, Mj in enumerate(M.summands):
            fs = hom(X, Mj).basis
            if not fs:
                continue
            for h in _radical_maps(M, j, i):
                for f in fs:
                    rad_part.append(compose(f, h).vector())
        top = _top_basis(F, space, rad_part)
        mults.append(len(top))
        for f in top:
            chosen.append(f)
            summands.append(Mi)
    if not chosen:
        Z = Module.zero(X.algebra)
        return Approximation("left", Z, Morphism.zero(X, Z), Z, Morphism.zero(Z, Z), mults)
    obj = direct_sum(summands, name="M^X")[0]
    approx = vstack_morphisms(X, chosen, obj)
    C, proj = cokernel(approx)
    logger.debug("left add(M)-approximation of %r: multiplicities %s", X, mults)
    return Approximation("left", obj, approx, C.renamed(f"Ω_M^-1({X.name})"), proj, mults)


def is_right_approximation(g: Morphism, M: AddSet) -> bool:
    """Hom(M_i, g) is onto for every summand M_i."""
    F = g.field
    for Mi in M.summands:
        target_dim = hom(Mi, g.target).dim
        if target_dim == 0:
            continue
        images = [compose(h, g).vector() for h in hom(Mi, g.source).basis]
        if not images or F.rank(np.stack(images, axis=1)) < target_dim:
            return False
    return True


def is_left_approximation(f: Morphism, M: AddSet) -> bool:
    """Hom(f, M_i) is onto for every summand M_i."""
    F = f.field
    for Mi in M.summands:
        target_dim = hom(f.source, Mi).dim
        if target_dim == 0:
            continue
        images = [compose(f, h).vector() for h in hom(f.target, Mi).basis]
        if not images or F.rank(np.stack(images, axis=1)) < target_dim:
            return False
    return True


# ── Generators and relative syzygies ─────────────────────────────────

def require_generator(M: AddSet) -> None:
    if "generator" not in M.cache:
        A = M.algebra
        M.cache["generator"] = all(in_add(P, M) for P in projectives(A).summands)
    if not M.cache["generator"]:
        raise NotGenerator(f"{M!r} does not contain every indecomposable projective")


def require_cogenerator(M: AddSet) -> None:
    if "cogenerator" not in M.cache:
        A = M.algebra
        M.cache["cogenerator"] = all(in_add(I, M) for I in injectives(A).summands)
    if not M.cache["cogenerator"]:
        raise NotCogenerator(f"{M!r} does not contain every indecomposable injective")


def rel_syzygy(M: AddSet, X: Module, k: int) -> Module:
    """Ω_M^k(X) for k > 0, Ω_M^{k}(X) as a cosyzygy for k < 0, add(M)-stripped."""
    if k > 0:
        require_generator(M)
    elif k < 0:
        require_cogenerator(M)
    Z = strip_add(X, M)
    for _ in range(abs(k)):
        if Z.dim == 0:
            break
        ap = right_approx(M, Z) if k > 0 else left_approx(M, Z)
        Z = strip_add(ap.complement, M)
    return Z


def default_cutoff(catalogue_size: Optional[int] = None) -> int:
    return 4 * catalogue_size if catalogue_size else DEFAULT_CUTOFF


def _dimension(M: AddSet, X: Module, cutoff: Optional[int], step, catalogue_size) -> ResolutionVerdict:
    cutoff = default_cutoff(catalogue_size) if cutoff is None else cutoff
    Z = strip_add(X, M)
    trace: List[Module] = []
    try:
        for d in range(cutoff + 1):
            if Z.dim == 0:
                return Finite(d)
            if d == cutoff:
                break
            if any(W.dims == Z.dims and is_isomorphic(W, Z) for W in trace):
                logger.debug("relative orbit of %r repeats after %d steps", X, d)
                return InfiniteCertified()
            trace.append(Z)
            Z = strip_add(step(M, Z).complement, M)
    except (DecompositionFailed, Inconclusive) as exc:
        logger.debug("resolution trace of %r degraded: %s", X, exc)
    return UnknownAtCutoff(cutoff)


def m_resdim(M: AddSet, X: Module, cutoff: Optional[int] = None,
             catalogue_size: Optional[int] = None) -> ResolutionVerdict:
    """M-resolution dimension of X."""
    require_generator(M)
    return _dimension(M, X, cutoff, right_approx, catalogue_size)


def m_coresdim(M: AddSet, X: Module, cutoff: Optional[int] = None,
               catalogue_size: Optional[int] = None) -> ResolutionVerdict:
    """M-coresolution dimension of X."""
    require_cogenerator(M)
    return _dimension(M, X, cutoff, left_approx, catalogue_size)


def approximation_sequence(M: AddSet, X: Module, n: int) -> List[Approximation]:
    """The first n minimal right approximations 0→Ω_M^{i+1}X→M_i→Ω_M^iX→0."""
    require_generator(M)
    out, Z = [], X
    for _ in range(n):
        ap = right_approx(M, Z)
        out.append(ap)
        Z = ap.complement
    return out


def coapproximation_sequence(M: AddSet, X: Module, n: int) -> List[Approximation]:
    require_cogenerator(M)
    out, Z = [], X
    for _ in range(n):
        ap = left_approx(M, Z)
        out.append(ap)
        Z = ap.complement
    return out


# ── Split sequences ──────────────────────────────────────────────────

def is_short_exact(f: Morphism, g: Morphism) -> bool:
    if f.target.dims != g.source.dims:
        return False
    if not (f.is_mono() and g.is_epi() and compose(f, g).is_zero()):
        return False
    return all(f.source.dims[v] + g.target.dims[v] == f.target.dims[v] for v in range(len(f.target.dims)))


def is_add_split_sequence(seq: Tuple[Morphism, Morphism], M: AddSet) -> bool:
    """Short exact, middle in add(M), f a left and g a right add(M)-approximation."""
    f, g = seq
    if not is_short_exact(f, g):
        raise NotExact(f"{f!r}, {g!r} is not a short exact sequence")
    return in_add(f.target, M) and is_left_approximation(f, M) and is_right_approximation(g, M)


# ── Unit and counit sequences ────────────────────────────────────────

@dataclass
class UnitCounit:
    """The two exact sequences attached to X; K_X and C^X are the end terms."""
    counit: Tuple[Morphism, Morphism]
    unit: Tuple[Morphism, Morphism]
    kernel: Module
    cokernel: Module
    kernel_coresdim: ResolutionVerdict
    cokernel_resdim: ResolutionVerdict

    def __repr__(self) -> str:
        return f"UnitCounit(K={self.kernel!r} {self.kernel_coresdim}, C={self.cokernel!r} {self.cokernel_resdim})"


def _counit_map(M: AddSet, n: int, X: Module) -> Tuple[Module, Morphism, Approximation]:
    """(Ω_M^{-n}Ω_M^n X, ε: Ω^{-n}Ω^n X → X, first right approximation)."""
    res = [right_approx(M, X)]
    for _ in range(n - 1):
        res.append(right_approx(M, res[-1].complement))
    source = res[-1].complement
    phi = Morphism.identity(source)
    for step in range(n):
        target = res[n - 1 - step]
        lap = left_approx(M, source)
        h = compose(phi, target.complement_map)
        g = extend_through(h, lap.map)
        if g is None:
            raise InternalInconsistency("left approximation failed to extend a map into add(M)")
        psi = extend_through(compose(g, target.map), lap.complement_map)
        if psi is None:
            raise InternalInconsistency("induced map on cokernels does not exist")
        phi, source = psi, lap.complement
    return source, phi, res[0]


def _counit_sequence(M: AddSet, n: int, X: Module) -> Tuple[Morphism, Morphism]:
    E, eps, first = _counit_map(M, n, X)
    mid, injections, _ = direct_sum([E, first.object], name="E_X")
    g = hstack_morphisms(mid, [eps, first.map], X)
    K, incl = kernel(g)
    return incl, g


def _dual_addset(M: AddSet) -> AddSet:
    if "dual" not in M.cache:
        D = AddSet([dualize(Y) for Y in M.summands])
        D.cache["dual"] = M
        M.cache["dual"] = D
    return M.cache["dual"]


def _check_n_rigid_gen_cogen(M: AddSet, n: int) -> None:
    try:
        require_generator(M)
        require_cogenerator(M)
    except (NotGenerator, NotCogenerator) as exc:
        raise PreconditionFailed(str(exc)) from exc
    Mm = M.module()
    for i in range(1, n + 1):
        if ext_dim(Mm, Mm, i):
            raise PreconditionFailed(f"Ext^{i}(M, M) ≠ 0; M is not {n}-rigid")


def unit_counit_sequences(M: AddSet, n: int, X: Module) -> UnitCounit:
    """
    0→K_X→Ω_M^{-n}Ω_M^n X ⊕ M_X→X→0 and 0→X→M^X ⊕ Ω_M^nΩ_M^{-n} X→C^X→0.

    The maps ε and η are chain lifts through the approximation sequences;
    they are fixed only up to maps factoring through add(M).
    """
    if n < 1:
        raise ValueError("unit_counit_sequences needs n ≥ 1")
    _check_n_rigid_gen_cogen(M, n)
    A = X.algebra
    if X.dim == 0:
        Z = Module.zero(A)
        zero = (Morphism.zero(Z, Z), Morphism.zero(Z, Z))
        return UnitCounit(zero, zero, Z, Z, Finite(0), Finite(0))
    counit = _counit_sequence(M, n, X)
    DM = _dual_addset(M)
    df, dg = _counit_sequence(DM, n, dualize(X))
    # dualising 0→K→E→DX→0 gives 0→X→DE→DK→0
    DE, DK = dualize(dg.source), dualize(df.source)
    unit_f = Morphism(X, DE, tuple(b.T.copy() for b in dg.blocks))
    unit_g = Morphism(DE, DK, tuple(b.T.copy() for b in df.blocks))
    K = counit[0].source
    return UnitCounit(
        counit=counit,
        unit=(unit_f, unit_g),
        kernel=K,
        cokernel=DK,
        kernel_coresdim=m_coresdim(M, K),
        cokernel_resdim=m_resdim(M, DK),
    )


@dataclass
class CotorsionWitness:
    """0 → V_X → U_X → X → 0 with U_X ∈ ⊥nM and V_X ∈ M^{≤n−1}."""
    U: Module
    V: Module
    sequence: Tuple[Morphism, Morphism]
    u_in_left_perp: bool
    v_coresdim: ResolutionVerdict
    ext_vanishes: bool
    n: int

    @property
    def v_in_bounded_class(self) -> bool:
        """M-coresdim V_X ≤ n−1."""
        return self.v_coresdim.is_finite and self.v_coresdim.value <= self.n - 1

    @property
    def holds(self) -> bool:
        return self.u_in_left_perp and self.v_in_bounded_class and self.ext_vanishes

    def __repr__(self) -> str:
        return f"CotorsionWitness(U={self.U!r}, V={self.V!r}, holds={self.holds})"


def cotorsion_witness(M: AddSet, n: int, X: Module) -> CotorsionWitness:
    """The counit sequence read as a cotorsion-pair witness for X."""
    uc = unit_counit_sequences(M, n, X)
    f, g = uc.counit
    U, V = g.source, f.source
    Mm = M.module()
    left_perp = all(ext_dim(U, Mm, i) == 0 for i in range(1, n + 1)) if U.dim else True
    ext_zero = (ext_dim(U, V, 1) == 0) if U.dim and V.dim else True
    return CotorsionWitness(U, V, (f, g), left_perp, uc.kernel_coresdim, ext_zero, n)


# ── Adjunction ───────────────────────────────────────────────────────

def adjunction_dims(M: AddSet, X: Module, Y: Module) -> Tuple[int, int]:
    """
    (dim Hom(Ω_M^{-1}X, Y), dim Hom(X, Ω_M Y)) in the category modulo add(M).

    Ω_M^{-1} is left adjoint to Ω_M there, so the two agree.
    """
    left = rel_syzygy(M, X, -1)
    right = rel_syzygy(M, Y, 1)
    a = stable_hom_dim(left, Y, M) if left.dim and Y.dim else 0
    b = stable_hom_dim(X, right, M) if X.dim and right.dim else 0
    return a, b
