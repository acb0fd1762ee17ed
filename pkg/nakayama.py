"""
nakayama.py
───────────
Closed-form combinatorics for the symmetric Nakayama algebras
A_{e,ae+1} = k△_e / J^{ae+1}.

Indecomposables are the uniserials L(i,t) (top S_i, length t).  Syzygies,
Hom/stable-Hom/Ext dimensions and rigidity degrees are all given by short
formulas; ``bridge`` realises L(i,t) as a representation so every formula
can be checked against the generic engine.

    from nakayama import NakIndec, nak_syzygy, dd, classify
    from bound_quiver import NakayamaParams

    P = NakayamaParams(e=3, a=2)
    nak_syzygy(NakIndec(P, 0, 1), 1)      # L(1,6)
    dd(NakIndec(P, 0, 1))                 # 4
    classify(1, 2).classes                # the two maximal 1-ortho-symmetric classes
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from bound_quiver import Algebra, NakayamaParams, nakayama_algebra
from errors import OutOfRange, ParamsMismatch, SearchBudgetExceeded
from exact_field import Field
from representation import Module

logger = logging.getLogger(__name__)

DEFAULT_SEARCH_LIMIT = 1 << 22


# ── Indecomposables ──────────────────────────────────────────────────

@dataclass(frozen=True)
class NakIndec:
    """L(i, t) over A_{e,ae+1}; projective iff t = ae+1."""
    params: NakayamaParams
    i: int
    t: int

    def __post_init__(self):
        if not 1 <= self.t <= self.params.b:
            raise OutOfRange(f"length {self.t} outside 1..{self.params.b} for {self.params}")
        object.__setattr__(self, "i", self.i % self.params.e)

    def __repr__(self) -> str:
        return f"L({self.i},{self.t})"

    @property
    def label(self) -> Tuple[int, int]:
        return (self.i, self.t)

    @property
    def is_projective(self) -> bool:
        return self.t == self.params.b

    def shifted(self, k: int) -> "NakIndec":
        return NakIndec(self.params, self.i + k, self.t)


def indecomposables(params: NakayamaParams, include_projective: bool = True) -> List[NakIndec]:
    top = params.b if include_projective else params.b - 1
    return [NakIndec(params, i, t) for t in range(1, top + 1) for i in range(params.e)]


def _same_params(x: NakIndec, y: NakIndec) -> None:
    if x.params != y.params:
        raise ParamsMismatch(f"{x!r} over {x.params} and {y!r} over {y.params}")


def parse_literal(text: str, params: NakayamaParams) -> NakIndec:
    """``"L:i,t"`` → NakIndec."""
    body = text.strip()
    if body.upper().startswith("L:"):
        body = body[2:]
    try:
        i, t = (int(part) for part in body.split(","))
    except ValueError as exc:
        raise ValueError(f"bad module literal {text!r}; expected L:i,t") from exc
    return NakIndec(params, i, t)


# ── Syzygies and translates ──────────────────────────────────────────

def nak_syzygy(x: Optional[NakIndec], k: int) -> Optional[NakIndec]:
    """Ω^k x (cosyzygies for k < 0); None stands for the zero module."""
    if x is None or x.is_projective:
        return None
    b = x.params.b
    for _ in range(abs(k)):
        if k > 0:
            x = NakIndec(x.params, x.i + x.t, b - x.t)
        else:
            x = NakIndec(x.params, x.i + x.t - 1, b - x.t)
    return x


def nak_cosyzygy(x: Optional[NakIndec], k: int) -> Optional[NakIndec]:
    return nak_syzygy(x, -k)


def nak_tau(x: Optional[NakIndec]) -> Optional[NakIndec]:
    """τ = Ω² on a symmetric algebra: L(i,t) ↦ L(i+1,t)."""
    return nak_syzygy(x, 2)


def nak_tau_higher(x: Optional[NakIndec], n: int) -> Optional[NakIndec]:
    """τ_{n+1} = Ω^{n+2}."""
    return nak_syzygy(x, n + 2)


# ── Hom and Ext ──────────────────────────────────────────────────────

def _image_lengths(x: NakIndec, y: NakIndec) -> List[int]:
    e = x.params.e
    target = (y.i + y.t - x.i) % e
    return [u for u in range(1, min(x.t, y.t) + 1) if u % e == target]


def nak_hom_dim(x: NakIndec, y: NakIndec) -> int:
    """dim Hom(L(i_x,t_x), L(i_y,t_y)): one map per admissible image length."""
    _same_params(x, y)
    return len(_image_lengths(x, y))


def nak_stable_hom_dim(x: NakIndec, y: NakIndec) -> int:
    """Maps of image length u factor through a projective iff u ≤ t_x + t_y − b."""
    _same_params(x, y)
    floor = x.t + y.t - x.params.b
    return sum(1 for u in _image_lengths(x, y) if u > floor)


def nak_ext_dim(x: NakIndec, y: NakIndec, i: int) -> int:
    if i < 1:
        raise ValueError("nak_ext_dim needs i ≥ 1")
    _same_params(x, y)
    z = nak_syzygy(x, i)
    return 0 if z is None or y.is_projective else nak_stable_hom_dim(z, y)


# ── Rigidity ─────────────────────────────────────────────────────────

def dd(x: NakIndec) -> int:
    """Largest n with L(i,t) n-rigid, by the piecewise table."""
    e, a = x.params.e, x.params.a
    if a < 2:
        raise OutOfRange(f"the rigidity table needs a ≥ 2, got a={a}")
    t = x.t
    if not 1 <= t <= a * e:
        raise OutOfRange(f"the rigidity table needs 1 ≤ t ≤ {a * e}, got t={t}")
    if t in (1, a * e):
        return 2 * e - 2
    if 2 <= t <= e - 1 or (a - 1) * e + 2 <= t <= a * e - 1:
        return 1
    return 0


def dd_by_ext(x: NakIndec, cap: Optional[int] = None) -> int:
    """Largest n with Ext^i(x, x) = 0 for 1 ≤ i ≤ n, by direct computation."""
    cap = 2 * x.params.e if cap is None else cap
    n = 0
    while n < cap and nak_ext_dim(x, x, n + 1) == 0:
        n += 1
    return n


def dd_table(e: int, a: int) -> Dict[Tuple[int, int], int]:
    params = NakayamaParams(e, a)
    return {(x.i, x.t): dd(x) for x in indecomposables(params, include_projective=False)}


def dd_table_markdown(e: int, a: int) -> str:
    params = NakayamaParams(e, a)
    table = dd_table(e, a)
    lengths = range(1, params.b)
    lines = [
        f"### dd(i,t) over {params}",
        "",
        "| i \\ t | " + " | ".join(str(t) for t in lengths) + " |",
        "|---" * (len(lengths) + 1) + "|",
    ]
    for i in range(e):
        lines.append(f"| {i} | " + " | ".join(str(table[(i, t)]) for t in lengths) + " |")
    return "\n".join(lines)


def nak_is_rigid(members: Iterable[NakIndec], n: int) -> bool:
    xs = [x for x in members if not x.is_projective]
    return all(nak_ext_dim(x, y, i) == 0 for x in xs for y in xs for i in range(1, n + 1))


def nak_is_orthosymmetric(members: Iterable[NakIndec], n: int) -> bool:
    """A ⊕ members is n-ortho-symmetric iff the non-projective part is
    n-rigid and closed under Ω^{n+2}."""
    xs = {x for x in members if not x.is_projective}
    if not nak_is_rigid(xs, n):
        return False
    return all(nak_tau_higher(x, n) in xs for x in xs)


# ── Orbits ───────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Orbit:
    """Members of {Ω^{3j} X}; Ω³ permutes them."""
    members: Tuple[NakIndec, ...]

    def __repr__(self) -> str:
        return "O{" + ", ".join(repr(x) for x in self.members) + "}"

    @property
    def anchor(self) -> NakIndec:
        return self.members[0]

    def __contains__(self, x: NakIndec) -> bool:
        return x in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def nak_orbit(x: NakIndec, step: int = 3) -> Orbit:
    """Ω^{step}-orbit of a non-projective x, deduplicated, sorted by label."""
    if x.is_projective:
        return Orbit((x,))
    seen, cur = [], x
    while cur not in seen:
        seen.append(cur)
        cur = nak_syzygy(cur, step)
    return Orbit(tuple(sorted(seen, key=lambda y: (y.t, y.i))))


def all_orbits(params: NakayamaParams, step: int = 3) -> List[Orbit]:
    out: List[Orbit] = []
    covered = set()
    for x in indecomposables(params, include_projective=False):
        if x in covered:
            continue
        o = nak_orbit(x, step)
        covered.update(o.members)
        out.append(o)
    return out


def orbit_members(*orbits: Orbit) -> List[NakIndec]:
    return [x for o in orbits for x in o.members]


def orbit_union(params: NakayamaParams, *anchors: Tuple[int, int]) -> List[NakIndec]:
    """Members of O_{L(i,t)} for each anchor (i, t)."""
    return orbit_members(*(nak_orbit(NakIndec(params, i, t)) for i, t in anchors))


def syzygy_orbit_formulas_check(q: int, a: int) -> bool:
    """Ω^{3j+1}L(0,1) and Ω^{3j+1}L(0,2) against the closed formulas, 1 ≤ j ≤ 2q."""
    P = NakayamaParams(3 * q, a)
    b = P.b
    for j in range(1, 2 * q + 1):
        p, odd = (j + 1) // 2, j % 2 == 1
        want1 = NakIndec(P, 3 * p - 1, 1) if odd else NakIndec(P, 3 * p + 1, b - 1)
        want2 = NakIndec(P, 3 * p - 1, 2) if odd else NakIndec(P, 3 * p + 2, b - 2)
        if nak_syzygy(NakIndec(P, 0, 1), 3 * j + 1) != want1:
            return False
        if nak_syzygy(NakIndec(P, 0, 2), 3 * j + 1) != want2:
            return False
    return True


# ── Classification ───────────────────────────────────────────────────

def canonical_form(members: Iterable[NakIndec]) -> Tuple[Tuple[int, int], ...]:
    """Lexicographically least Ω^k-image (0 ≤ k < 2e) of a set of indecomposables."""
    xs = [x for x in members if not x.is_projective]
    if not xs:
        return ()
    e = xs[0].params.e
    return min(tuple(sorted(nak_syzygy(x, k).label for x in xs)) for k in range(2 * e))


@dataclass
class ClassificationReport:
    """
    Maximal modules of the requested kind over A_{3q,3qa+1}.

    Parameters
    ----------
    classes : list of list of NakIndec
        One canonical representative (non-projective part) per class up
        to syzygy shift; A is implicit in every member.
    witnesses : dict
        Rejection witness per discarded orbit or orbit pair (a nonzero Ext¹).
    """
    params: NakayamaParams
    kind: str
    mode: str
    classes: List[List[NakIndec]] = field(default_factory=list)
    maximizers: int = 0
    candidates: int = 0
    explored: int = 0
    witnesses: Dict[str, str] = field(default_factory=dict)
    elapsed: float = 0.0

    def __repr__(self) -> str:
        return (f"ClassificationReport({self.params}, {self.kind}, classes={len(self.classes)}, "
                f"maximizers={self.maximizers}, {self.elapsed:.2f}s)")

    def class_keys(self) -> List[Tuple[Tuple[int, int], ...]]:
        return [canonical_form(c) for c in self.classes]

    def to_dict(self) -> dict:
        return {
            "algebra": str(self.params),
            "kind": self.kind,
            "mode": self.mode,
            "classes": [["A"] + [repr(x) for x in c] for c in self.classes],
            "maximizers": self.maximizers,
            "candidates": self.candidates,
            "explored": self.explored,
            "witnesses": dict(sorted(self.witnesses.items())),
            "elapsed_s": round(self.elapsed, 3),
        }

    def to_markdown(self) -> str:
        lines = [
            f"### {self.kind} over {self.params} ({self.mode})",
            "",
            "| # | module |",
            "|---|---|",
        ]
        for k, c in enumerate(self.classes, 1):
            lines.append(f"| {k} | A ⊕ " + " ⊕ ".join(repr(x) for x in c) + " |")
        lines += [
            "",
            f"{self.maximizers} maximizers, {len(self.classes)} classes up to syzygy shift, "
            f"{self.explored}/{self.candidates} candidates explored, ⏱ {self.elapsed:.2f}s",
        ]
        return "\n".join(lines)


def _ext1_witness(xs: Sequence[NakIndec], ys: Sequence[NakIndec]) -> Optional[str]:
    for x in xs:
        for y in ys:
            for u, v in ((x, y), (y, x)):
                d = nak_ext_dim(u, v, 1)
                if d:
                    return f"Ext^1({u!r}, {v!r}) = {d}"
    return None


def _compatibility(nodes: Sequence[Sequence[NakIndec]], labels: Sequence[str], report: ClassificationReport):
    """Self-rigid flags and pairwise compatibility bitmasks, recording witnesses."""
    rigid = []
    for members, label in zip(nodes, labels):
        w = _ext1_witness(members, members)
        rigid.append(w is None)
        if w is not None:
            report.witnesses[label] = w
    compat = [0] * len(nodes)
    for a in range(len(nodes)):
        for b in range(a + 1, len(nodes)):
            if not (rigid[a] and rigid[b]):
                continue
            w = _ext1_witness(nodes[a], nodes[b])
            if w is None:
                compat[a] |= 1 << b
                compat[b] |= 1 << a
            else:
                report.witnesses[f"{labels[a]} + {labels[b]}"] = w
    return rigid, compat


def _cliques_by_graph(rigid: List[bool], compat: List[int]) -> List[List[int]]:
    G = nx.Graph()
    G.add_nodes_from(k for k, r in enumerate(rigid) if r)
    for a in G.nodes:
        for b in G.nodes:
            if a < b and compat[a] >> b & 1:
                G.add_edge(a, b)
    if G.number_of_nodes() == 0:
        return [[]]
    return [sorted(c) for c in nx.find_cliques(G)]


def _cliques_by_enumeration(rigid: List[bool], compat: List[int], limit: int, report: ClassificationReport):
    """Every subset checked; maximal valid subsets returned."""
    N = len(rigid)
    total = 1 << N
    report.candidates = total
    valid = bytearray(total)
    valid[0] = 1
    out = []
    for mask in range(1, total):
        if mask > limit:
            report.explored = mask
            raise SearchBudgetExceeded(
                f"unpruned search stopped after {mask} of {total} candidates", explored=mask / total
            )
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        if valid[rest] and rigid[low] and (compat[low] & rest) == rest:
            valid[mask] = 1
    report.explored = total
    for mask in range(total):
        if not valid[mask]:
            continue
        extendable = any(
            rigid[o] and not mask >> o & 1 and (compat[o] & mask) == mask for o in range(N)
        )
        if not extendable:
            out.append([o for o in range(N) if mask >> o & 1])
    return out


def classify(
    q: int,
    a: int,
    kind: str = "max-1-orthosymmetric",
    pruned: bool = True,
    limit: int = DEFAULT_SEARCH_LIMIT,
) -> ClassificationReport:
    """
    Maximal 1-ortho-symmetric (orbit unions) or maximal 1-rigid basic
    modules over A_{3q,3qa+1}, up to syzygy shift.
    """
    if q < 1 or a < 2:
        raise OutOfRange(f"classification needs q ≥ 1 and a ≥ 2, got q={q}, a={a}")
    if kind not in ("max-1-orthosymmetric", "max-1-rigid"):
        raise ValueError(f"unknown classification kind {kind!r}")
    params = NakayamaParams(3 * q, a)
    started = time.perf_counter()
    report = ClassificationReport(params, kind, "pruned" if pruned else "unpruned")

    if kind == "max-1-orthosymmetric":
        orbits = all_orbits(params)
        if pruned:
            orbits = [o for o in orbits if min(min(x.t, params.b - x.t) for x in o) <= 2]
        nodes = [o.members for o in orbits]
        labels = [f"O_{o.anchor!r}" for o in orbits]
    else:
        xs = indecomposables(params, include_projective=False)
        if pruned:
            xs = [x for x in xs if dd(x) >= 1]
        nodes = [(x,) for x in xs]
        labels = [repr(x) for x in xs]

    rigid, compat = _compatibility(nodes, labels, report)
    if pruned:
        cliques = _cliques_by_graph(rigid, compat)
        report.candidates = len(nodes)
        report.explored = len(nodes)
    else:
        cliques = _cliques_by_enumeration(rigid, compat, limit, report)

    report.maximizers = len(cliques)
    classes: Dict[Tuple, List[NakIndec]] = {}
    for clique in cliques:
        members = [x for k in clique for x in nodes[k]]
        key = canonical_form(members)
        classes.setdefault(key, [NakIndec(params, i, t) for i, t in key])
    report.classes = [classes[k] for k in sorted(classes)]
    report.elapsed = time.perf_counter() - started
    logger.info("classified %s over %s: %d classes from %d maximizers",
                kind, params, len(report.classes), report.maximizers)
    return report


def max_rigid_extension(q: int, a: int) -> Tuple[List[NakIndec], bool, bool]:
    """
    O_{L(0,1)} ⊕ O_{L(0,2)} ⊕ ⊕_{r=1}^{q-1} L(0,3r+2) over A_{3q,3qa+1}.

    Returns (members, is 1-rigid, is maximal 1-rigid).
    """
    params = NakayamaParams(3 * q, a)
    members = orbit_members(nak_orbit(NakIndec(params, 0, 1)), nak_orbit(NakIndec(params, 0, 2)))
    members += [NakIndec(params, 0, 3 * r + 2) for r in range(1, q)]
    rigid = nak_is_rigid(members, 1)
    others = [x for x in indecomposables(params, include_projective=False) if x not in members]
    maximal = rigid and all(not nak_is_rigid(members + [x], 1) for x in others)
    return members, rigid, maximal


# ── Bridge to the generic engine ─────────────────────────────────────

def bridge(params: NakayamaParams, field: Optional[Field] = None) -> Tuple[Algebra, Callable[[NakIndec], Module]]:
    """(A_{e,ae+1}, builder) where builder(L(i,t)) is the uniserial representation."""
    A = nakayama_algebra(params, field)
    F = A.field
    built: Dict[NakIndec, Module] = {}

    def builder(x: NakIndec) -> Module:
        if x.params != params:
            raise ParamsMismatch(f"{x!r} is over {x.params}, bridge is over {params}")
        if x in built:
            return built[x]
        e = params.e
        # layer k sits at vertex i+k
        layers = {v: [k for k in range(x.t) if (x.i + k) % e == v] for v in range(e)}
        pos = {k: layers[(x.i + k) % e].index(k) for k in range(x.t)}
        maps = {}
        for aid, s, t in A.quiver.arrows:
            M = F.zeros(len(layers[t]), len(layers[s]))
            for k in layers[s]:
                if k + 1 < x.t:
                    M[pos[k + 1], pos[k]] = F.element(1)
            maps[aid] = M
        mod = Module(A, tuple(len(layers[v]) for v in range(e)), maps, name=repr(x))
        built[x] = mod
        return mod

    return A, builder
