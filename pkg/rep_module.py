"""
rep_module.py
─────────────
Module-category operations over a bound quiver algebra.

Everything here is exact linear algebra on representations: Hom spaces
as nullspaces of the intertwiner system, (co)kernels vertex by vertex,
projective covers from lifted tops, (co)syzygies, Ext dimensions by
dimension counting, stable Homs modulo add(M), and Krull–Schmidt
decomposition by splitting along endomorphisms.

    from rep_module import hom, syzygy, ext_dim, decompose, AddSet

    hom(S0, S0).dim                # 1
    syzygy(S0, 1)                  # Ω S_0
    ext_dim(S0, S0, 1)             # 0 over A_{3,7}
    AddSet.of(X).summands          # indecomposable pieces of X
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import sympy

from bound_quiver import Algebra, dualize, dualize_morphism, projective
from errors import AlgebraMismatch, DecompositionFailed, Inconclusive, InternalInconsistency
from exact_field import PrimeField
from representation import HomSpace, Module, Morphism, compose
from settings import DEFAULT_BUDGET, default_rng

logger = logging.getLogger(__name__)

_CACHE_SIZE = 16384


def _same_algebra(X: Module, Y: Module) -> None:
    if X.algebra is not Y.algebra:
        raise AlgebraMismatch(f"{X!r} and {Y!r} are modules over different algebras")


# ── Hom spaces ───────────────────────────────────────────────────────

def hom(X: Module, Y: Module) -> HomSpace:
    """Basis of Hom_A(X, Y)."""
    _same_algebra(X, Y)
    return _hom(X, Y)


@lru_cache(maxsize=_CACHE_SIZE)
def _hom(X: Module, Y: Module) -> HomSpace:
    F = X.field
    q = X.algebra.quiver
    offsets, n = [], 0
    for dx, dy in zip(X.dims, Y.dims):
        offsets.append(n)
        n += dx * dy
    if n == 0:
        return HomSpace(X, Y, [])
    rows = []
    for aid, s, t in q.arrows:
        m = Y.dims[t] * X.dims[s]
        if m == 0:
            continue
        block = F.zeros(m, n)
        # Y_a F_s - F_t X_a = 0, row-major vectorisation
        ws = Y.dims[s] * X.dims[s]
        if ws:
            block[:, offsets[s]:offsets[s] + ws] = F.kron(Y.maps[aid], F.eye(X.dims[s]))
        wt = Y.dims[t] * X.dims[t]
        if wt:
            term = F.kron(F.eye(Y.dims[t]), X.maps[aid].T.copy())
            block[:, offsets[t]:offsets[t] + wt] = F.sub(block[:, offsets[t]:offsets[t] + wt], term)
        rows.append(block)
    system = F.vstack(rows, n)
    N = F.nullspace(system)
    basis = [Morphism.from_vector(X, Y, N[:, k]) for k in range(N.shape[1])]
    return HomSpace(X, Y, basis)


def hom_dim(X: Module, Y: Module) -> int:
    return hom(X, Y).dim


def lift_through(h: Morphism, p: Morphism) -> Optional[Morphism]:
    """g with g then p = h (h: Z → Y, p: X → Y), or None."""
    F = h.field
    H = hom(h.source, p.source)
    if H.dim == 0:
        return Morphism.zero(h.source, p.source) if h.is_zero() else None
    cols = np.stack([compose(g, p).vector() for g in H.basis], axis=1)
    c = F.solve(cols, h.vector().reshape(-1, 1))
    return None if c is None else H.combination(c[:, 0])


def extend_through(h: Morphism, i: Morphism) -> Optional[Morphism]:
    """g with i then g = h (h: X → Y, i: X → W), or None."""
    F = h.field
    H = hom(i.target, h.target)
    if H.dim == 0:
        return Morphism.zero(i.target, h.target) if h.is_zero() else None
    cols = np.stack([compose(i, g).vector() for g in H.basis], axis=1)
    c = F.solve(cols, h.vector().reshape(-1, 1))
    return None if c is None else H.combination(c[:, 0])


def factor_through(h: Morphism, via: Morphism, side: str) -> Optional[Morphism]:
    """g with h = g then via (``side="left"``) or h = via then g (``side="right"``)."""
    if side == "left":
        return lift_through(h, via)
    if side == "right":
        return extend_through(h, via)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


# ── Sub- and quotient modules ────────────────────────────────────────

def submodule(X: Module, bases: Sequence[np.ndarray], name: str = "") -> Tuple[Module, Morphism]:
    """Submodule spanned by the columns of ``bases[v]`` (must be arrow-stable)."""
    F = X.field
    maps = {}
    for aid, s, t in X.algebra.quiver.arrows:
        image = F.matmul(X.maps[aid], bases[s])
        K = F.solve(bases[t], image)
        if K is None:
            raise InternalInconsistency(f"subspace of {X!r} is not closed under arrow {aid}")
        maps[aid] = K
    sub = Module(X.algebra, tuple(B.shape[1] for B in bases), maps, name=name)
    return sub, Morphism(sub, X, tuple(B.copy() for B in bases))


def quotient(X: Module, bases: Sequence[np.ndarray], name: str = "") -> Tuple[Module, Morphism]:
    """X modulo the arrow-stable subspace spanned by ``bases``."""
    F = X.field
    Q = [F.left_nullspace(B) if B.shape[1] else F.eye(X.dims[v]) for v, B in enumerate(bases)]
    R = [F.right_inverse(q) if q.shape[0] else F.zeros(q.shape[1], 0) for q in Q]
    maps = {}
    for aid, s, t in X.algebra.quiver.arrows:
        maps[aid] = F.matmul(F.matmul(Q[t], X.maps[aid]), R[s])
    quot = Module(X.algebra, tuple(q.shape[0] for q in Q), maps, name=name)
    return quot, Morphism(X, quot, tuple(Q))


def kernel(f: Morphism) -> Tuple[Module, Morphism]:
    F = f.field
    return submodule(f.source, [F.nullspace(B) for B in f.blocks], name=f"ker({f.source.name})")


def cokernel(f: Morphism) -> Tuple[Module, Morphism]:
    F = f.field
    return quotient(f.target, [F.column_space(B) for B in f.blocks], name=f"coker({f.target.name})")


def image(f: Morphism) -> Tuple[Module, Morphism, Morphism]:
    """(Im f, X ↠ Im f, Im f ↪ Y)."""
    F = f.field
    bases = [F.column_space(B) for B in f.blocks]
    im, mono = submodule(f.target, bases, name=f"im({f.source.name})")
    epi_blocks = []
    for B, fb in zip(bases, f.blocks):
        E = F.solve(B, fb)
        if E is None:
            raise InternalInconsistency("image basis does not span the image")
        epi_blocks.append(E)
    return im, Morphism(f.source, im, tuple(epi_blocks)), mono


def rad(X: Module) -> Tuple[Module, Morphism]:
    F = X.field
    q = X.algebra.quiver
    bases = []
    for v in range(q.vertex_count):
        incoming = [X.maps[a] for a in q.in_arrows(v)]
        bases.append(F.column_space(F.hstack(incoming, X.dims[v])))
    return submodule(X, bases, name=f"rad({X.name})")


def top_projection(X: Module) -> Tuple[Module, Morphism]:
    _, incl = rad(X)
    T, proj = quotient(X, list(incl.blocks), name=f"top({X.name})")
    return T, proj


def top(X: Module) -> Module:
    return top_projection(X)[0]


def socle(X: Module) -> Tuple[Module, Morphism]:
    F = X.field
    q = X.algebra.quiver
    bases = []
    for v in range(q.vertex_count):
        outgoing = [X.maps[a] for a in q.out_arrows(v)]
        bases.append(F.nullspace(F.vstack(outgoing, X.dims[v])))
    return submodule(X, bases, name=f"soc({X.name})")


# ── Direct sums ──────────────────────────────────────────────────────

def direct_sum(modules: Sequence[Module], name: str = "") -> Tuple[Module, List[Morphism], List[Morphism]]:
    """(⊕ X_i, injections, projections)."""
    if not modules:
        raise ValueError("direct_sum needs at least one module")
    A = modules[0].algebra
    for X in modules[1:]:
        _same_algebra(modules[0], X)
    F = A.field
    if len(modules) == 1:
        X = modules[0]
        S = Module(A, X.dims, X.maps, name=name or X.name)
        return S, [Morphism(X, S, Morphism.identity(X).blocks)], [Morphism(S, X, Morphism.identity(X).blocks)]
    n = A.vertex_count
    dims = tuple(sum(X.dims[v] for X in modules) for v in range(n))
    maps = {}
    for aid, s, t in A.quiver.arrows:
        M = F.zeros(dims[t], dims[s])
        r = c = 0
        for X in modules:
            M[r:r + X.dims[t], c:c + X.dims[s]] = X.maps[aid]
            r += X.dims[t]
            c += X.dims[s]
        maps[aid] = M
    S = Module(A, dims, maps, name=name or "⊕".join(X.name or "?" for X in modules))
    injections, projections = [], []
    offsets = [0] * n
    for X in modules:
        inj, pro = [], []
        for v in range(n):
            I = F.zeros(dims[v], X.dims[v])
            I[offsets[v]:offsets[v] + X.dims[v], :] = F.eye(X.dims[v])
            inj.append(I)
            pro.append(I.T.copy())
            offsets[v] += X.dims[v]
        injections.append(Morphism(X, S, tuple(inj)))
        projections.append(Morphism(S, X, tuple(pro)))
    return S, injections, projections


def hstack_morphisms(source: Module, parts: Sequence[Morphism], target: Module) -> Morphism:
    """[f_1 … f_k]: ⊕ X_i → Y for f_i: X_i → Y (source is the direct sum)."""
    F = target.field
    blocks = [F.hstack([f.blocks[v] for f in parts], target.dims[v]) for v in range(len(target.dims))]
    return Morphism(source, target, tuple(blocks))


def vstack_morphisms(source: Module, parts: Sequence[Morphism], target: Module) -> Morphism:
    """[g_1; … ; g_k]: X → ⊕ Y_i for g_i: X → Y_i (target is the direct sum)."""
    F = source.field
    blocks = [F.vstack([g.blocks[v] for g in parts], source.dims[v]) for v in range(len(source.dims))]
    return Morphism(source, target, tuple(blocks))


def power(X: Module, k: int) -> Module:
    if k == 0:
        return Module.zero(X.algebra)
    return direct_sum([X] * k, name=f"{X.name}^{k}" if k > 1 else X.name)[0]


# ── Projective covers and injective envelopes ───────────────────────

def cached_projective(A: Algebra, v: int) -> Module:
    cache = A.__dict__.setdefault("_projective_cache", {})
    if v not in cache:
        cache[v] = projective(A, v)
    return cache[v]


def from_projective(v: int, Y: Module, y: np.ndarray) -> Morphism:
    """The map P_v → Y sending e_v to y ∈ Y_v."""
    A = Y.algebra
    F = Y.field
    P = cached_projective(A, v)
    blocks = []
    for w in A.vertices:
        idx = A.paths_between(v, w)
        B = F.zeros(Y.dims[w], len(idx))
        for col, i in enumerate(idx):
            B[:, col] = F.matmul(Y.path_matrix(A.basis[i]), y.reshape(-1, 1))[:, 0]
        blocks.append(B)
    return Morphism(P, Y, tuple(blocks))


def projective_cover(X: Module) -> Tuple[Module, Morphism]:
    return _projective_cover(X)


@lru_cache(maxsize=_CACHE_SIZE)
def _projective_cover(X: Module) -> Tuple[Module, Morphism]:
    A, F = X.algebra, X.field
    T, proj = top_projection(X)
    if T.dim == 0:
        Z = Module.zero(A)
        return Z, Morphism.zero(Z, X)
    parts, summands = [], []
    for v in A.vertices:
        if T.dims[v] == 0:
            continue
        lifts = F.right_inverse(proj.blocks[v])
        for j in range(T.dims[v]):
            parts.append(from_projective(v, X, lifts[:, j]))
            summands.append(cached_projective(A, v))
    P = direct_sum(summands, name="P(" + (X.name or "X") + ")")[0]
    return P, hstack_morphisms(P, parts, X)


def injective_envelope(X: Module) -> Tuple[Module, Morphism]:
    DX = dualize(X)
    P, eps = projective_cover(DX)
    I = dualize(P, name="I(" + (X.name or "X") + ")")
    mono = dualize_morphism(eps)
    return I, Morphism(X, I, mono.blocks)


# ── Splitting off known indecomposables ──────────────────────────────

@dataclass
class LocalEnd:
    """Certificate that End(Y) is local with residue field k.

    The residue map is ``trace(φ_vertex) / dims[vertex]``; ``radical``
    spans its kernel, a nilpotent ideal.
    """
    module: Module
    vertex: int
    basis: List[Morphism]
    radical: List[Morphism]

    def residue(self, phi: Morphism):
        F = self.module.field
        tr = F.asarray([[np.trace(phi.blocks[self.vertex])]], shape=(1, 1))
        d = F.element(self.module.dims[self.vertex])
        return F.scale(F.inv_scalar(d), tr)[0, 0]


def _char_ok(F, d: int) -> bool:
    return d > 0 and (not isinstance(F, PrimeField) or d % F.p != 0)


@lru_cache(maxsize=_CACHE_SIZE)
def local_end(Y: Module) -> Optional[LocalEnd]:
    """LocalEnd certificate for Y, or None when End(Y) is not (certifiably) local."""
    if Y.dim == 0:
        return None
    F = Y.field
    E = hom(Y, Y).basis
    vertex = next((v for v, d in enumerate(Y.dims) if _char_ok(F, d)), None)
    if vertex is None:
        return None
    probe = LocalEnd(Y, vertex, E, [])
    if len(E) == 1:
        return probe
    values = [probe.residue(phi) for phi in E]
    # kernel of the residue functional
    row = F.asarray([values], shape=(1, len(E)))
    N = F.nullspace(row)
    H = [HomSpace(Y, Y, E).combination(N[:, k]) for k in range(N.shape[1])]
    for h in H:
        for g in H:
            if probe.residue(compose(h, g)) != 0:
                return None
    layer = H
    for _ in range(Y.dim + 1):
        if not layer:
            probe.radical = H
            return probe
        prods = [compose(h, g).vector() for h in layer for g in H]
        M = np.stack(prods, axis=1)
        basis = F.column_space(M)
        if basis.shape[1] >= len(layer):
            return None
        layer = [Morphism.from_vector(Y, Y, basis[:, k]) for k in range(basis.shape[1])]
    return None


def is_indecomposable(X: Module) -> bool:
    if local_end(X) is not None:
        return True
    if X.dim == 0:
        return False
    parts = decompose(X)
    return len(parts) == 1 and parts[0][1] == 1


def split_off(X: Module, Y: Module) -> Tuple[int, Module, Morphism]:
    """
    Split Y^μ off X for an indecomposable Y.

    Returns (μ, complement, complement ↪ X).  μ is the rank of the pairing
    (f, g) ↦ residue(f then g) on Hom(Y, X) × Hom(X, Y).
    """
    _same_algebra(X, Y)
    F = X.field
    loc = local_end(Y)
    if loc is None:
        raise DecompositionFailed(f"{Y!r} is not certified indecomposable")
    fs, gs = hom(Y, X).basis, hom(X, Y).basis
    if not fs or not gs:
        return 0, X, Morphism.identity(X)
    pairing = F.zeros(len(gs), len(fs))
    for a, g in enumerate(gs):
        for b, f in enumerate(fs):
            pairing[a, b] = loc.residue(compose(f, g))
    _, cols = F.rref(pairing)
    mu = len(cols)
    if mu == 0:
        return 0, X, Morphism.identity(X)
    _, rows = F.rref(pairing.T.copy())
    Ymu = power(Y, mu) if mu > 1 else Y
    G = vstack_morphisms(X, [gs[a] for a in rows], Ymu)
    C, incl = kernel(G)
    return mu, C, incl


def strip_add(X: Module, M: "AddSet") -> Module:
    """X with every summand in add(M) removed."""
    for Y in M.summands:
        if X.dim == 0:
            break
        mu, C, _ = split_off(X, Y)
        if mu:
            X = C
    return X


# ── Syzygies ─────────────────────────────────────────────────────────

@lru_cache(maxsize=_CACHE_SIZE)
def _omega_plain(X: Module) -> Tuple[Module, Morphism, Module, Morphism]:
    """(P, P ↠ X, Ω X, Ω X ↪ P) for the projective cover."""
    P, epi = projective_cover(X)
    K, incl = kernel(epi)
    return P, epi, K.renamed(f"Ω({X.name})"), incl


def projectives(A: Algebra) -> "AddSet":
    cache = A.__dict__.setdefault("_projective_addset", [])
    if not cache:
        cache.append(AddSet([cached_projective(A, v) for v in A.vertices]))
    return cache[0]


def injectives(A: Algebra) -> "AddSet":
    cache = A.__dict__.setdefault("_injective_addset", [])
    if not cache:
        from bound_quiver import injective
        cache.append(AddSet([injective(A, v) for v in A.vertices]))
    return cache[0]


@lru_cache(maxsize=_CACHE_SIZE)
def strip_projective(X: Module) -> Module:
    return strip_add(X, projectives(X.algebra))


@lru_cache(maxsize=_CACHE_SIZE)
def strip_injective(X: Module) -> Module:
    return strip_add(X, injectives(X.algebra))


def syzygy(X: Module, k: int, mode: str = "stable") -> Module:
    """k-th syzygy; ``mode="stable"`` strips projective summands at every step."""
    if k < 0:
        raise ValueError("syzygy needs k ≥ 0; use cosyzygy for negative shifts")
    if mode not in ("stable", "plain"):
        raise ValueError(f"unknown syzygy mode {mode!r}")
    Z = strip_projective(X) if mode == "stable" else X
    for step in range(k):
        if Z.dim == 0:
            break
        Z = _omega_plain(Z)[2]
        if mode == "stable":
            Z = strip_projective(Z)
        logger.debug("Ω^%d(%s) has dims %s", step + 1, X.name, Z.dims)
    return Z


def cosyzygy(X: Module, k: int, mode: str = "stable") -> Module:
    """k-th cosyzygy, computed as D Ω^k D over the opposite algebra."""
    if k < 0:
        raise ValueError("cosyzygy needs k ≥ 0")
    out = dualize(syzygy(dualize(X), k, mode=mode))
    return out.renamed(f"Ω^-{k}({X.name})") if k else out.renamed(X.name)


def projective_resolution(X: Module, length: int) -> List[Tuple[Module, Morphism]]:
    """Minimal projective resolution [(P_0, P_0→X), (P_1, P_1→P_0), …]."""
    out: List[Tuple[Module, Morphism]] = []
    Z, into = X, None
    for i in range(length + 1):
        if Z.dim == 0:
            break
        P, epi, K, incl = _omega_plain(Z)
        d = epi if into is None else compose(epi, into)
        out.append((P, d))
        Z, into = K, incl
    return out


def projective_dimension(X: Module, cap: Optional[int] = None):
    from relative_homology import m_resdim
    return m_resdim(projectives(X.algebra), X, cutoff=cap)


def injective_dimension(X: Module, cap: Optional[int] = None):
    from relative_homology import m_coresdim
    return m_coresdim(injectives(X.algebra), X, cutoff=cap)


# ── Ext and stable Hom ───────────────────────────────────────────────

def ext_dim(X: Module, Y: Module, i: int) -> int:
    """dim Ext^i(X, Y) for i ≥ 1."""
    if i < 1:
        raise ValueError("ext_dim needs i ≥ 1")
    _same_algebra(X, Y)
    Z = syzygy(X, i - 1)
    if Z.dim == 0 or Y.dim == 0:
        return 0
    _, _, K, _ = _omega_plain(Z)
    # dim Hom(P(Z), Y) = Σ_v (top multiplicity at v) · dim Y_v
    hom_p = sum(m * Y.dims[v] for v, m in enumerate(top(Z).dims))
    return hom_dim(K, Y) - hom_p + hom_dim(Z, Y)


def factoring_space(X: Module, Y: Module, M: "AddSet") -> np.ndarray:
    """Columns spanning the maps X → Y that factor through add(M)."""
    F = X.field
    n = sum(dx * dy for dx, dy in zip(X.dims, Y.dims))
    cols = []
    for Mi in M.summands:
        gs, rs = hom(X, Mi).basis, hom(Mi, Y).basis
        for g in gs:
            for r in rs:
                cols.append(compose(g, r).vector())
    if not cols:
        return F.zeros(n, 0)
    return F.column_space(np.stack(cols, axis=1))


def stable_hom_dim(X: Module, Y: Module, through: "AddSet") -> int:
    """dim of Hom(X, Y) modulo maps factoring through add(through)."""
    _same_algebra(X, Y)
    return hom_dim(X, Y) - factoring_space(X, Y, through).shape[1]


# ── Endomorphism algebras and decomposition ─────────────────────────

def end_algebra(X: Module) -> np.ndarray:
    """Structure constants c[i, j, :] of φ_i then φ_j over a basis of End(X)."""
    F = X.field
    H = hom(X, X)
    r = H.dim
    table = np.zeros((r, r, r), dtype=F.dtype) if F.dtype is not object else np.empty((r, r, r), dtype=object)
    if r == 0:
        return table
    basis = H.matrix()
    for i, a in enumerate(H.basis):
        for j, b in enumerate(H.basis):
            c = F.solve(basis, compose(a, b).vector().reshape(-1, 1))
            if c is None:
                raise InternalInconsistency("End(X) is not closed under composition")
            table[i, j, :] = c[:, 0]
    return table


def radical_of_end(X: Module) -> List[Morphism]:
    """Basis of rad End(X): φ such that a then φ then b is a non-isomorphism
    for every indecomposable summand Y and a: Y → X, b: X → Y."""
    F = X.field
    E = hom(X, X).basis
    if not E:
        return []
    loc = local_end(X)
    if loc is not None:
        return list(loc.radical)
    rows = []
    for Y, _ in decompose(X):
        locY = local_end(Y)
        for a in hom(Y, X).basis:
            for b in hom(X, Y).basis:
                rows.append([locY.residue(compose(compose(a, phi), b)) for phi in E])
    N = F.nullspace(F.asarray(rows, shape=(len(rows), len(E))))
    return [HomSpace(X, X, E).combination(N[:, k]) for k in range(N.shape[1])]


def _minimal_polynomial(phi: Morphism) -> List:
    """Coefficients (low → high, monic) of the minimal polynomial of φ."""
    F = phi.field
    X = phi.source
    powers = [Morphism.identity(X)]
    vecs = [powers[0].vector()]
    while True:
        nxt = compose(powers[-1], phi)
        v = nxt.vector()
        V = np.stack(vecs, axis=1)
        c = F.solve(V, v.reshape(-1, 1))
        if c is not None:
            return [F.normalize(np.array([-x], dtype=c.dtype))[0] for x in c[:, 0]] + [F.element(1)]
        powers.append(nxt)
        vecs.append(v)


def _coprime_factors(coeffs: List, F) -> List[List]:
    """Split a monic polynomial into pairwise coprime prime-power factors."""
    t = sympy.Symbol("t")
    high = list(reversed(coeffs))
    if isinstance(F, PrimeField):
        poly = sympy.Poly([int(c) for c in high], t, modulus=F.p)
    else:
        poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in high], t, domain="QQ")
    _, factors = poly.factor_list()
    out = []
    for f, e in factors:
        g = f ** e
        cs = list(reversed(g.all_coeffs()))
        if isinstance(F, PrimeField):
            out.append([int(c) % F.p for c in cs])
        else:
            out.append([Fraction(int(sympy.Rational(c).p), int(sympy.Rational(c).q)) for c in cs])
    return out


def _evaluate(coeffs: List, phi: Morphism) -> Morphism:
    """Horner evaluation of a polynomial (low → high) at φ."""
    X = phi.source
    out = Morphism.zero(X, X)
    ident = Morphism.identity(X)
    for c in reversed(coeffs):
        out = compose(out, phi) + ident.scaled(c)
    return out


def _split(X: Module, rng, budget: int) -> List[Module]:
    if X.dim == 0:
        return []
    if local_end(X) is not None:
        return [X]
    H = hom(X, X)
    for trial in range(budget):
        phi = H.random(rng)
        factors = _coprime_factors(_minimal_polynomial(phi), X.field)
        if len(factors) < 2:
            continue
        logger.debug("split %r along %d coprime factors (trial %d)", X, len(factors), trial)
        pieces = []
        for f in factors:
            K, _ = kernel(_evaluate(f, phi))
            pieces.extend(_split(K, rng, budget))
        return pieces
    raise DecompositionFailed(
        f"could not split {X!r} after {budget} random endomorphisms"
    )


def decompose(X: Module, rng=None, budget: int = DEFAULT_BUDGET) -> List[Tuple[Module, int]]:
    """Indecomposable summands of X with multiplicities."""
    return list(_decompose(X, budget) if rng is None else _decompose_uncached(X, rng, budget))


@lru_cache(maxsize=_CACHE_SIZE)
def _decompose(X: Module, budget: int) -> Tuple[Tuple[Module, int], ...]:
    return tuple(_decompose_uncached(X, default_rng(), budget))


def _decompose_uncached(X: Module, rng, budget: int) -> List[Tuple[Module, int]]:
    groups: List[List] = []
    for piece in _split(X, rng, budget):
        for g in groups:
            if find_isomorphism(g[0], piece) is not None:
                g[1] += 1
                break
        else:
            groups.append([piece, 1])
    return [(m, k) for m, k in groups]


def summand_count(X: Module) -> int:
    if X.dim == 0:
        raise ValueError("summand_count of the zero module is undefined")
    return len(decompose(X))


def find_isomorphism(X: Module, Y: Module, rng=None, budget: int = DEFAULT_BUDGET) -> Optional[Morphism]:
    """An isomorphism X → Y, or None.

    For certified indecomposables the answer is exact: an isomorphism
    exists iff some basis map of Hom(X, Y) is invertible.
    """
    _same_algebra(X, Y)
    if X.dims != Y.dims:
        return None
    if X.dim == 0:
        return Morphism.zero(X, Y)
    H = hom(X, Y)
    if H.dim == 0 or H.dim != hom_dim(X, X) or H.dim != hom_dim(Y, X):
        return None
    for f in H.basis:
        if f.is_iso():
            return f
    if local_end(X) is not None:
        return None
    rng = rng or default_rng()
    for _ in range(budget):
        f = H.random(rng)
        if f.is_iso():
            return f
    if _same_summands(X, Y):
        raise Inconclusive(f"{X!r} ≅ {Y!r} by decomposition, but no isomorphism was found")
    return None


def _same_summands(X: Module, Y: Module) -> bool:
    dx, dy = decompose(X), decompose(Y)
    if len(dx) != len(dy):
        return False
    unmatched = list(dy)
    for Z, k in dx:
        for idx, (W, l) in enumerate(unmatched):
            if k == l and find_isomorphism(Z, W) is not None:
                unmatched.pop(idx)
                break
        else:
            return False
    return True


def is_isomorphic(X: Module, Y: Module, rng=None, budget: int = DEFAULT_BUDGET) -> bool:
    _same_algebra(X, Y)
    if X.dims != Y.dims:
        return False
    try:
        return find_isomorphism(X, Y, rng, budget) is not None
    except Inconclusive:
        return True


# ── add(M) ───────────────────────────────────────────────────────────

@dataclass
class AddSet:
    """Pairwise non-isomorphic indecomposables representing add(M)."""
    summands: List[Module] = field(default_factory=list)
    cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def __repr__(self) -> str:
        return "add(" + " ⊕ ".join(repr(m) for m in self.summands) + ")"

    @property
    def algebra(self) -> Algebra:
        return self.summands[0].algebra

    @classmethod
    def of(cls, *modules: Module, rng=None) -> "AddSet":
        """Decompose the given modules and keep one copy of each summand."""
        out = cls([])
        for X in modules:
            for Y, _ in decompose(X, rng=rng):
                out = out.with_summand(Y)
        return out

    def with_summand(self, Y: Module) -> "AddSet":
        if Y.dim == 0 or any(find_isomorphism(Z, Y) is not None for Z in self.summands):
            return self
        return AddSet(self.summands + [Y])

    def union(self, other: "AddSet") -> "AddSet":
        out = self
        for Y in other.summands:
            out = out.with_summand(Y)
        return out

    def without(self, other: "AddSet") -> "AddSet":
        keep = [Y for Y in self.summands
                if not any(find_isomorphism(Y, Z) is not None for Z in other.summands)]
        return AddSet(keep)

    def index_of(self, Y: Module) -> Optional[int]:
        for i, Z in enumerate(self.summands):
            if find_isomorphism(Z, Y) is not None:
                return i
        return None

    def module(self) -> Module:
        if not self.summands:
            raise ValueError("empty add-set has no module")
        return direct_sum(self.summands, name="M")[0]

    def names(self) -> List[str]:
        return [m.name for m in self.summands]


def in_add(X: Module, M: AddSet) -> bool:
    """X ∈ add(M) iff id_X factors through add(M)."""
    if X.dim == 0:
        return True
    if not M.summands:
        return False
    F = X.field
    space = factoring_space(X, X, M)
    if space.shape[1] == 0:
        return False
    return F.solve(space, Morphism.identity(X).vector().reshape(-1, 1)) is not None


def add_equal(M: AddSet, N: AddSet) -> bool:
    return all(in_add(X, N) for X in M.summands) and all(in_add(Y, M) for Y in N.summands)


# ── Self-injectivity ─────────────────────────────────────────────────

def nakayama_permutation(A: Algebra) -> Dict[int, int]:
    """v ↦ u with I_v ≅ P_u; raises NotSelfInjective if some I_v is not projective."""
    from bound_quiver import injective
    from errors import NotSelfInjective
    perm = {}
    for v in A.vertices:
        Iv = injective(A, v)
        match = [u for u in A.vertices if find_isomorphism(cached_projective(A, u), Iv) is not None]
        if not match:
            raise NotSelfInjective(f"I_{v} is not projective over {A.name}")
        perm[v] = match[0]
    if sorted(perm.values()) != list(A.vertices):
        raise NotSelfInjective("injectives do not match projectives bijectively")
    return perm


def is_self_injective(A: Algebra) -> bool:
    from errors import NotSelfInjective
    try:
        nakayama_permutation(A)
        return True
    except NotSelfInjective:
        return False
