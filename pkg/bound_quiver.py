"""
bound_quiver.py
───────────────
Finite-dimensional bound quiver algebras kQ/I with an explicit path basis.

Paths are written in traversal order: ``Path(0, 2, (a, b))`` first follows
arrow ``a`` then arrow ``b``.  A representation evaluates such a path as
``X_b @ X_a`` (matrices are target-dim × source-dim).

    from bound_quiver import NakayamaParams, nakayama_algebra, projective

    A = nakayama_algebra(NakayamaParams(e=3, a=2))   # A_{3,7}, dim 21
    P0 = projective(A, 0)                            # dims (3, 2, 2)
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path as FsPath
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from errors import InfiniteDimensional, NonAdmissible
from exact_field import Field, PrimeField, parse_field
from representation import Module, Morphism
from settings import MAX_PATH_LENGTH

logger = logging.getLogger(__name__)

Relation = List[Tuple[object, Tuple[int, ...]]]   # [(coeff, arrow ids), ...]


# ── Quivers and paths ────────────────────────────────────────────────

@dataclass(frozen=True)
class Quiver:
    """Finite quiver; ``arrows`` holds ``(id, source, target)`` triples."""
    vertex_count: int
    arrows: Tuple[Tuple[int, int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("a quiver needs at least one vertex")
        seen = set()
        for aid, s, t in self.arrows:
            if aid in seen:
                raise ValueError(f"duplicate arrow id {aid}")
            seen.add(aid)
            if not (0 <= s < self.vertex_count and 0 <= t < self.vertex_count):
                raise ValueError(f"arrow {aid}: ({s}->{t}) leaves the vertex range")

    @classmethod
    def from_pairs(cls, vertex_count: int, pairs: Sequence[Sequence[int]]) -> "Quiver":
        return cls(vertex_count, tuple((i, int(s), int(t)) for i, (s, t) in enumerate(pairs)))

    @classmethod
    def cyclic(cls, e: int) -> "Quiver":
        """The cyclic quiver △_e with arrows i → i+1 (mod e)."""
        return cls.from_pairs(e, [(i, (i + 1) % e) for i in range(e)])

    @cached_property
    def arrow_ends(self) -> Dict[int, Tuple[int, int]]:
        return {aid: (s, t) for aid, s, t in self.arrows}

    def out_arrows(self, v: int) -> List[int]:
        return [aid for aid, s, _ in self.arrows if s == v]

    def in_arrows(self, v: int) -> List[int]:
        return [aid for aid, _, t in self.arrows if t == v]

    def opposite(self) -> "Quiver":
        return Quiver(self.vertex_count, tuple((aid, t, s) for aid, s, t in self.arrows))

    def path(self, arrows: Sequence[int], source: Optional[int] = None) -> "Path":
        """Validate a sequence of arrow ids as a path."""
        arrows = tuple(int(a) for a in arrows)
        if not arrows:
            if source is None:
                raise ValueError("a trivial path needs its vertex")
            return Path(source, source, ())
        ends = self.arrow_ends
        for a in arrows:
            if a not in ends:
                raise ValueError(f"unknown arrow id {a}")
        for a, b in zip(arrows, arrows[1:]):
            if ends[a][1] != ends[b][0]:
                raise ValueError(f"arrows {a} and {b} do not compose")
        return Path(ends[arrows[0]][0], ends[arrows[-1]][1], arrows)

    def paths_of_length(self, length: int) -> List["Path"]:
        layer = [Path(v, v, ()) for v in range(self.vertex_count)]
        for _ in range(length):
            layer = [
                Path(p.source, t, p.arrows + (aid,))
                for p in layer
                for aid, s, t in self.arrows
                if s == p.target
            ]
        return layer


@dataclass(frozen=True)
class Path:
    source: int
    target: int
    arrows: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.arrows)

    def then(self, other: "Path") -> Optional["Path"]:
        if self.target != other.source:
            return None
        return Path(self.source, other.target, self.arrows + other.arrows)

    def reversed(self) -> "Path":
        return Path(self.target, self.source, tuple(reversed(self.arrows)))

    def __repr__(self) -> str:
        if not self.arrows:
            return f"e{self.source}"
        return "·".join(f"a{a}" for a in self.arrows)


@dataclass(frozen=True)
class NakayamaParams:
    """Parameters of A_{e,ae+1} = k△_e / J^{ae+1}."""
    e: int
    a: int

    def __post_init__(self):
        if self.e < 1 or self.a < 1:
            raise ValueError(f"Nakayama parameters need e ≥ 1 and a ≥ 1, got ({self.e}, {self.a})")
        if self.e * self.a > 10_000:
            raise ValueError("Nakayama parameters too large")

    @property
    def b(self) -> int:
        return self.a * self.e + 1

    def __str__(self) -> str:
        return f"A_{{{self.e},{self.b}}}"


# ── Algebras ─────────────────────────────────────────────────────────

class Algebra:
    """
    A bound quiver algebra with a path basis.

    Parameters
    ----------
    quiver : Quiver
    field : Field
    relations : list
        Generators of the ideal as ``[(coeff, arrow ids), ...]``.
    basis : tuple of Path
        Standard paths; their classes form a basis of kQ/I.
    normal_forms : dict
        Coordinates (over ``basis``) of every path shorter than ``loewy``.
    loewy : int
        Every path of length ≥ ``loewy`` lies in the ideal.
    """

    def __init__(
        self,
        quiver: Quiver,
        field: Field,
        relations: Sequence[Relation],
        basis: Sequence[Path],
        normal_forms: Dict[Path, np.ndarray],
        loewy: int,
        name: str = "",
    ):
        self.quiver = quiver
        self.field = field
        self.relations = [list(r) for r in relations]
        self.basis: Tuple[Path, ...] = tuple(basis)
        self.index: Dict[Path, int] = {p: i for i, p in enumerate(self.basis)}
        self.normal_forms = normal_forms
        self.loewy = loewy
        self.name = name or f"kQ/I[{quiver.vertex_count} vertices, dim {len(self.basis)}]"
        self._opposite: Optional[Algebra] = None
        self._between: Dict[Tuple[int, int], List[int]] = {}

    def __repr__(self) -> str:
        return f"Algebra({self.name}, dim={self.dim}, field={self.field.name})"

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def vertex_count(self) -> int:
        return self.quiver.vertex_count

    @property
    def vertices(self) -> range:
        return range(self.quiver.vertex_count)

    # ── Path arithmetic ──────────────────────────────────────────────

    def reduce(self, path: Path) -> np.ndarray:
        """Coordinates of a path over the basis."""
        if path.length >= self.loewy:
            return self.field.zeros(1, self.dim)[0]
        return self.normal_forms[path]

    def paths_between(self, v: int, w: int) -> List[int]:
        """Indices of basis paths from v to w."""
        key = (v, w)
        if key not in self._between:
            self._between[key] = [i for i, p in enumerate(self.basis) if p.source == v and p.target == w]
        return self._between[key]

    def multiply_basis(self, i: int, j: int) -> np.ndarray:
        joined = self.basis[i].then(self.basis[j])
        if joined is None:
            return self.field.zeros(1, self.dim)[0]
        return self.reduce(joined)

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        F = self.field
        out = F.zeros(1, self.dim)[0]
        for i in np.flatnonzero(x != 0):
            for j in np.flatnonzero(y != 0):
                out = F.add(out, F.scale(x[i] * y[j], self.multiply_basis(int(i), int(j))))
        return out

    @cached_property
    def mult(self) -> Dict[Tuple[int, int], np.ndarray]:
        """Nonzero entries of the multiplication table."""
        table = {}
        for i in range(self.dim):
            for j in range(self.dim):
                v = self.multiply_basis(i, j)
                if not self.field.is_zero(v):
                    table[(i, j)] = v
        return table

    def idempotent(self, v: int) -> int:
        return self.index[Path(v, v, ())]

    def unit(self) -> np.ndarray:
        u = self.field.zeros(1, self.dim)[0]
        for v in self.vertices:
            u[self.idempotent(v)] = self.field.element(1)
        return u

    def check_associativity(self) -> bool:
        F = self.field
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.multiply_basis(i, j)
                for k in range(self.dim):
                    left = F.zeros(1, self.dim)[0]
                    for s in np.flatnonzero(ij != 0):
                        left = F.add(left, F.scale(ij[s], self.multiply_basis(int(s), k)))
                    jk = self.multiply_basis(j, k)
                    right = F.zeros(1, self.dim)[0]
                    for s in np.flatnonzero(jk != 0):
                        right = F.add(right, F.scale(jk[s], self.multiply_basis(i, int(s))))
                    if not F.equal(left, right):
                        return False
        return True

    def check_unit(self) -> bool:
        F = self.field
        u = self.unit()
        for i in range(self.dim):
            e_i = F.zeros(1, self.dim)[0]
            e_i[i] = F.element(1)
            if not (F.equal(self.multiply(u, e_i), e_i) and F.equal(self.multiply(e_i, u), e_i)):
                return False
        return True

    # ── Opposite algebra ─────────────────────────────────────────────

    def opposite(self) -> "Algebra":
        """A^op on the reversed quiver; ``A.opposite().opposite() is A``."""
        if self._opposite is None:
            rev_forms = {p.reversed(): vec for p, vec in self.normal_forms.items()}
            rev_rel = [[(c, tuple(reversed(arrows))) for c, arrows in r] for r in self.relations]
            op = Algebra(
                self.quiver.opposite(),
                self.field,
                rev_rel,
                [p.reversed() for p in self.basis],
                rev_forms,
                self.loewy,
                name=f"({self.name})^op",
            )
            op._opposite = self
            self._opposite = op
        return self._opposite

    def is_self_injective(self) -> bool:
        from rep_module import is_self_injective
        return is_self_injective(self)

    def nakayama_permutation(self) -> Dict[int, int]:
        from rep_module import nakayama_permutation
        return nakayama_permutation(self)

    # ── Serialisation ────────────────────────────────────────────────

    def to_dict(self) -> dict:
        arrows = sorted(self.quiver.arrows)
        return {
            "vertices": self.vertex_count,
            "arrows": [[s, t] for _, s, t in arrows],
            "relations": [
                [[self.field.format_element(c), list(p)] for c, p in rel] for rel in self.relations
            ],
            "field": self.field.name,
        }


# ── Construction ─────────────────────────────────────────────────────

def _uniform_parts(quiver: Quiver, relation: Relation, field: Field) -> List[List[Tuple[object, Path]]]:
    """Split a relation into its e_t·ρ·e_s components (each lies in the ideal)."""
    groups: Dict[Tuple[int, int], List[Tuple[object, Path]]] = {}
    for coeff, arrows in relation:
        c = field.element(coeff)
        if c == 0:
            continue
        if len(arrows) < 2:
            raise NonAdmissible(
                f"relation term {list(arrows)} has length {len(arrows)}; relations must lie in J²"
            )
        p = quiver.path(arrows)
        groups.setdefault((p.source, p.target), []).append((c, p))
    return [g for g in groups.values() if g]


def _ideal_span(
    quiver: Quiver,
    parts: List[List[Tuple[object, Path]]],
    length: int,
    columns: Dict[Path, int],
    field: Field,
) -> np.ndarray:
    """Rows spanning I + J^{length+1} modulo J^{length+1}."""
    by_length = [quiver.paths_of_length(k) for k in range(length + 1)]
    rows = []
    for part in parts:
        low = min(p.length for _, p in part)
        s, t = part[0][1].source, part[0][1].target
        for lp in range(0, length - low + 1):
            for left in by_length[lp]:
                if left.target != s:
                    continue
                for lq in range(0, length - low - lp + 1):
                    for right in by_length[lq]:
                        if right.source != t:
                            continue
                        row = field.zeros(1, len(columns))[0]
                        hit = False
                        for c, p in part:
                            full = left.then(p).then(right)
                            if full.length <= length:
                                k = columns[full]
                                row[k] = field.normalize(np.array([row[k] + c], dtype=row.dtype))[0]
                                hit = True
                        if hit and not field.is_zero(row):
                            rows.append(row)
    if not rows:
        return field.zeros(0, len(columns))
    return np.stack(rows)


def build_algebra(
    quiver: Quiver,
    relations: Sequence[Relation],
    field: Optional[Field] = None,
    name: str = "",
    max_length: int = MAX_PATH_LENGTH,
) -> Algebra:
    """
    Build kQ/I from quiver data and relations.

    The truncation length L is raised until every path of length L lies in
    I + J^{L+1}; the basis is then read off kQ/(I + J^L) by an echelon form
    whose pivots are the longest paths.
    """
    field = field or PrimeField()
    parts = [part for rel in relations for part in _uniform_parts(quiver, rel, field)]

    def layout(length: int):
        paths = [p for k in range(length, -1, -1) for p in quiver.paths_of_length(k)]
        return paths, {p: i for i, p in enumerate(paths)}

    loewy = None
    for L in range(1, max_length + 1):
        paths, columns = layout(L)
        top_layer = [columns[p] for p in paths if p.length == L]
        if not top_layer:
            loewy = L
            break
        span = _ideal_span(quiver, parts, L, columns, field)
        r = field.rank(span)
        probe = field.zeros(len(top_layer), len(paths))
        for row, col in enumerate(top_layer):
            probe[row, col] = field.element(1)
        if field.rank(field.vstack([span, probe], len(paths))) == r:
            loewy = L
            break
        logger.debug("truncation length %d: J^L not yet inside the ideal", L)
    if loewy is None:
        raise InfiniteDimensional(
            f"no power J^L with L ≤ {max_length} lies in the ideal; the algebra is not finite-dimensional"
        )

    paths, columns = layout(loewy - 1)
    span = _ideal_span(quiver, parts, loewy - 1, columns, field)
    R, pivots = field.rref(span) if span.shape[0] else (span, [])
    pivot_row = {c: r for r, c in enumerate(pivots)}
    free = [j for j in range(len(paths)) if j not in pivot_row]
    basis = sorted((paths[j] for j in free), key=lambda p: (p.length, p.source, p.arrows))
    pos = {p: i for i, p in enumerate(basis)}

    normal_forms: Dict[Path, np.ndarray] = {}
    for j, p in enumerate(paths):
        vec = field.zeros(1, len(basis))[0]
        if j in pivot_row:
            row = R[pivot_row[j]]
            for f in free:
                if row[f] != 0:
                    vec[pos[paths[f]]] = field.normalize(np.array([-row[f]], dtype=vec.dtype))[0]
        else:
            vec[pos[p]] = field.element(1)
        normal_forms[p] = vec

    clean_rel = [[(c, tuple(a)) for c, a in rel] for rel in relations]
    algebra = Algebra(quiver, field, clean_rel, basis, normal_forms, loewy, name=name)
    logger.debug("built %r (Loewy bound %d)", algebra, loewy)
    return algebra


def nakayama_algebra(params: NakayamaParams, field: Optional[Field] = None) -> Algebra:
    """A_{e,ae+1}: the cyclic quiver on e vertices modulo all paths of length ae+1."""
    quiver = Quiver.cyclic(params.e)
    relations = [
        [(1, tuple((v + k) % params.e for k in range(params.b)))] for v in range(params.e)
    ]
    return build_algebra(quiver, relations, field, name=str(params))


def path_algebra(quiver: Quiver, field: Optional[Field] = None, name: str = "") -> Algebra:
    """kQ for an acyclic quiver."""
    return build_algebra(quiver, [], field, name=name)


# ── Projectives, injectives, duality ────────────────────────────────

def projective(A: Algebra, v: int) -> Module:
    """P_v: basis paths starting at v, arrows act by appending."""
    F = A.field
    dims = tuple(len(A.paths_between(v, w)) for w in A.vertices)
    maps = {}
    for aid, s, t in A.quiver.arrows:
        src, tgt = A.paths_between(v, s), A.paths_between(v, t)
        M = F.zeros(len(tgt), len(src))
        arrow_path = Path(s, t, (aid,))
        for col, i in enumerate(src):
            joined = A.basis[i].then(arrow_path)
            vec = A.reduce(joined)
            M[:, col] = vec[tgt]
        maps[aid] = M
    return Module(A, dims, maps, name=f"P{v}")


def injective(A: Algebra, v: int) -> Module:
    """I_v = D(P_v over A^op)."""
    return dualize(projective(A.opposite(), v), name=f"I{v}")


def simple(A: Algebra, v: int) -> Module:
    dims = tuple(1 if w == v else 0 for w in A.vertices)
    maps = {aid: A.field.zeros(dims[t], dims[s]) for aid, s, t in A.quiver.arrows}
    return Module(A, dims, maps, name=f"S{v}")


def regular_module(A: Algebra) -> Module:
    from rep_module import direct_sum
    return direct_sum([projective(A, v) for v in A.vertices], name="A")[0]


def dual_module(A: Algebra) -> Module:
    """D(A) = ⊕ I_v."""
    from rep_module import direct_sum
    return direct_sum([injective(A, v) for v in A.vertices], name="DA")[0]


def dualize(X: Module, name: Optional[str] = None) -> Module:
    """D X over A^op: transposed arrow matrices on the reversed quiver."""
    op = X.algebra.opposite()
    maps = {aid: M.T.copy() for aid, M in X.maps.items()}
    return Module(op, X.dims, maps, name=name if name is not None else f"D({X.name})")


def dualize_morphism(f: Morphism) -> Morphism:
    """D f : D Y → D X."""
    return Morphism(dualize(f.target), dualize(f.source), tuple(b.T.copy() for b in f.blocks))


# ── Files ────────────────────────────────────────────────────────────

def load_algebra(path: Union[str, FsPath]) -> Algebra:
    """Read an algebra from a TOML or JSON file (see README for the format)."""
    path = FsPath(path)
    if not path.exists():
        raise FileNotFoundError(f"algebra file not found at {path}")
    if path.suffix.lower() == ".toml":
        import tomllib
        data = tomllib.loads(path.read_text())
    else:
        data = json.loads(path.read_text())
    return algebra_from_dict(data, name=path.stem)


def algebra_from_dict(data: dict, name: str = "") -> Algebra:
    try:
        field = parse_field(str(data.get("field", "Fp:101")))
        quiver = Quiver.from_pairs(int(data["vertices"]), data.get("arrows", []))
        relations = [
            [(field.parse_element(c), tuple(int(a) for a in arrows)) for c, arrows in rel]
            for rel in data.get("relations", [])
        ]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed algebra description: {exc}") from exc
    return build_algebra(quiver, relations, field, name=name)


def dump_algebra(A: Algebra, path: Union[str, FsPath]) -> None:
    FsPath(path).write_text(json.dumps(A.to_dict(), indent=2, sort_keys=True))
