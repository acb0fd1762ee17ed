"""
representation.py
─────────────────
Value types for quiver representations: ``Module``, ``Morphism`` and
``HomSpace``.

A module is a dimension vector plus one matrix per arrow
(target-dim × source-dim).  A morphism is a tuple of per-vertex matrices.
Composition is written in diagram order to match the workbench's formulas:
``compose(f, g)`` is "f then g", i.e. the map X → Z built from f: X → Y and
g: Y → Z.

    from representation import Module, Morphism, compose

    f = Morphism.identity(X)
    g = compose(f, f)            # still the identity
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path as FsPath
from typing import TYPE_CHECKING, Dict, List, Sequence, Tuple, Union

import numpy as np

from errors import AlgebraMismatch

if TYPE_CHECKING:
    from bound_quiver import Algebra, Path


@dataclass(frozen=True, eq=False)
class Module:
    """A finite-dimensional representation of a bound quiver."""
    algebra: "Algebra"
    dims: Tuple[int, ...]
    maps: Dict[int, np.ndarray]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        q = self.algebra.quiver
        if len(self.dims) != q.vertex_count:
            raise ValueError(
                f"dimension vector has {len(self.dims)} entries, quiver has {q.vertex_count} vertices"
            )
        if any(d < 0 for d in self.dims):
            raise ValueError("negative dimension in dimension vector")
        for aid, s, t in q.arrows:
            if aid not in self.maps:
                raise ValueError(f"missing matrix for arrow {aid}")
            shape = self.maps[aid].shape
            if shape != (self.dims[t], self.dims[s]):
                raise ValueError(
                    f"arrow {aid}: matrix shape {shape}, expected {(self.dims[t], self.dims[s])}"
                )

    def __repr__(self) -> str:
        label = self.name or "Module"
        return f"{label}{list(self.dims)}"

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.dim == 0

    def path_matrix(self, path: "Path") -> np.ndarray:
        F = self.field
        M = F.eye(self.dims[path.source])
        for a in path.arrows:
            M = F.matmul(self.maps[a], M)
        return M

    def satisfies_relations(self) -> bool:
        F = self.field
        q = self.algebra.quiver
        for rel in self.algebra.relations:
            acc: Dict[Tuple[int, int], np.ndarray] = {}
            for coeff, arrows in rel:
                p = q.path(arrows)
                term = F.scale(coeff, self.path_matrix(p))
                key = (p.source, p.target)
                acc[key] = F.add(acc[key], term) if key in acc else term
            if any(not F.is_zero(m) for m in acc.values()):
                return False
        return True

    def validate(self) -> "Module":
        if not self.satisfies_relations():
            raise ValueError(f"{self!r} does not satisfy the relations of {self.algebra!r}")
        return self

    def renamed(self, name: str) -> "Module":
        return Module(self.algebra, self.dims, self.maps, name=name)

    @classmethod
    def zero(cls, algebra: "Algebra") -> "Module":
        F = algebra.field
        return cls(algebra, (0,) * algebra.vertex_count,
                   {aid: F.zeros(0, 0) for aid, _, _ in algebra.quiver.arrows}, name="0")

    # ── JSON ─────────────────────────────────────────────────────────

    def to_dict(self) -> dict:
        F = self.field
        return {
            "algebra": self.algebra.name,
            "dims": list(self.dims),
            "maps": {str(aid): F.format_matrix(M) for aid, M in sorted(self.maps.items())},
        }

    @classmethod
    def from_dict(cls, algebra: "Algebra", data: dict, name: str = "") -> "Module":
        F = algebra.field
        try:
            dims = tuple(int(d) for d in data["dims"])
            raw = {int(k): v for k, v in data.get("maps", {}).items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed module description: {exc}") from exc
        maps = {}
        for aid, s, t in algebra.quiver.arrows:
            maps[aid] = F.parse_matrix(raw.get(aid, []), (dims[t], dims[s]))
        return cls(algebra, dims, maps, name=name or data.get("name", "")).validate()


def load_module(algebra: "Algebra", path: Union[str, FsPath]) -> Module:
    path = FsPath(path)
    if not path.exists():
        raise FileNotFoundError(f"module file not found at {path}")
    return Module.from_dict(algebra, json.loads(path.read_text()), name=path.stem)


def dump_module(X: Module, path: Union[str, FsPath]) -> None:
    FsPath(path).write_text(json.dumps(X.to_dict(), indent=2, sort_keys=True))


# ── Morphisms ────────────────────────────────────────────────────────

@dataclass(frozen=True, eq=False)
class Morphism:
    """Per-vertex matrices ``blocks[v]`` of shape target.dims[v] × source.dims[v]."""
    source: Module
    target: Module
    blocks: Tuple[np.ndarray, ...]

    def __post_init__(self):
        if self.source.algebra is not self.target.algebra:
            raise AlgebraMismatch("morphism between modules over different algebras")
        object.__setattr__(self, "blocks", tuple(self.blocks))
        for v, B in enumerate(self.blocks):
            if B.shape != (self.target.dims[v], self.source.dims[v]):
                raise ValueError(f"vertex {v}: block shape {B.shape} does not match the modules")

    def __repr__(self) -> str:
        return f"Morphism({self.source!r} → {self.target!r})"

    @property
    def field(self):
        return self.source.field

    @classmethod
    def identity(cls, X: Module) -> "Morphism":
        return cls(X, X, tuple(X.field.eye(d) for d in X.dims))

    @classmethod
    def zero(cls, X: Module, Y: Module) -> "Morphism":
        F = X.field
        return cls(X, Y, tuple(F.zeros(Y.dims[v], X.dims[v]) for v in range(len(X.dims))))

    @classmethod
    def from_vector(cls, X: Module, Y: Module, vec: np.ndarray) -> "Morphism":
        blocks, pos = [], 0
        for dx, dy in zip(X.dims, Y.dims):
            blocks.append(vec[pos:pos + dx * dy].reshape(dy, dx).copy())
            pos += dx * dy
        return cls(X, Y, tuple(blocks))

    def vector(self) -> np.ndarray:
        F = self.field
        parts = [B.reshape(-1) for B in self.blocks]
        return np.concatenate(parts) if parts else F.zeros(1, 0)[0]

    def is_intertwiner(self) -> bool:
        F = self.field
        for aid, s, t in self.source.algebra.quiver.arrows:
            left = F.matmul(self.blocks[t], self.source.maps[aid])
            right = F.matmul(self.target.maps[aid], self.blocks[s])
            if not F.equal(left, right):
                return False
        return True

    def is_zero(self) -> bool:
        return all(self.field.is_zero(B) for B in self.blocks)

    def is_iso(self) -> bool:
        F = self.field
        return self.source.dims == self.target.dims and all(F.is_invertible(B) for B in self.blocks)

    def is_mono(self) -> bool:
        F = self.field
        return all(F.rank(B) == B.shape[1] for B in self.blocks)

    def is_epi(self) -> bool:
        F = self.field
        return all(F.rank(B) == B.shape[0] for B in self.blocks)

    def inverse(self) -> "Morphism":
        F = self.field
        inv = [F.inverse(B) for B in self.blocks]
        if any(b is None for b in inv):
            raise ValueError("morphism is not invertible")
        return Morphism(self.target, self.source, tuple(inv))

    def rank_vector(self) -> Tuple[int, ...]:
        return tuple(self.field.rank(B) for B in self.blocks)

    def __add__(self, other: "Morphism") -> "Morphism":
        F = self.field
        return Morphism(self.source, self.target,
                        tuple(F.add(a, b) for a, b in zip(self.blocks, other.blocks)))

    def __sub__(self, other: "Morphism") -> "Morphism":
        F = self.field
        return Morphism(self.source, self.target,
                        tuple(F.sub(a, b) for a, b in zip(self.blocks, other.blocks)))

    def scaled(self, c) -> "Morphism":
        F = self.field
        return Morphism(self.source, self.target, tuple(F.scale(c, B) for B in self.blocks))

    def then(self, g: "Morphism") -> "Morphism":
        """self followed by g."""
        return compose(self, g)

    def to_dict(self) -> dict:
        F = self.field
        return {
            "source": self.source.name,
            "target": self.target.name,
            "blocks": [F.format_matrix(B) for B in self.blocks],
        }


def compose(f: Morphism, g: Morphism) -> Morphism:
    """f then g (the map written fg in diagram order)."""
    if f.target is not g.source and f.target.dims != g.source.dims:
        raise ValueError(f"cannot compose {f!r} with {g!r}")
    F = f.field
    return Morphism(f.source, g.target,
                    tuple(F.matmul(gb, fb) for fb, gb in zip(f.blocks, g.blocks)))


def linear_combination(X: Module, Y: Module, maps: Sequence[Morphism], coeffs) -> Morphism:
    F = X.field
    out = Morphism.zero(X, Y)
    for c, m in zip(coeffs, maps):
        if c != 0:
            out = out + m.scaled(c)
    return out


@dataclass
class HomSpace:
    """A basis of Hom(source, target)."""
    source: Module
    target: Module
    basis: List[Morphism] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __repr__(self) -> str:
        return f"HomSpace({self.source!r}, {self.target!r}, dim={self.dim})"

    def matrix(self) -> np.ndarray:
        """Basis vectors as columns."""
        F = self.source.field
        n = sum(dx * dy for dx, dy in zip(self.source.dims, self.target.dims))
        if not self.basis:
            return F.zeros(n, 0)
        return np.stack([m.vector() for m in self.basis], axis=1)

    def combination(self, coeffs) -> Morphism:
        return linear_combination(self.source, self.target, self.basis, coeffs)

    def random(self, rng) -> Morphism:
        F = self.source.field
        return self.combination(F.random_combination(rng, self.dim))
