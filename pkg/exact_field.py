"""
exact_field.py
──────────────
Exact linear algebra over prime fields F_p and the rationals.

Matrices are plain numpy arrays: int64 residues for F_p, object arrays of
``fractions.Fraction`` for ℚ.  Every homological rank in orthorep is
computed through one of the two ``Field`` objects below, never in floating
point.

    from exact_field import PrimeField, parse_field

    F = PrimeField(101)
    R, pivots = F.rref([[1, 2], [2, 4]])
    N = F.nullspace([[1, 2], [2, 4]])     # columns form a basis
    K = parse_field("Q")
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from settings import DEFAULT_PRIME


class Field:
    """Common elimination code; subclasses fix dtype and normalisation."""

    name: str = "?"

    # ── Element handling (overridden) ────────────────────────────────

    @property
    def dtype(self):
        raise NotImplementedError

    def normalize(self, A: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def inv_scalar(self, a):
        raise NotImplementedError

    def element(self, x):
        raise NotImplementedError

    def random_array(self, rng: np.random.Generator, shape) -> np.ndarray:
        raise NotImplementedError

    def format_element(self, x) -> str:
        raise NotImplementedError

    def parse_element(self, text) -> object:
        raise NotImplementedError

    # ── Construction ─────────────────────────────────────────────────

    def asarray(self, data, shape: Optional[Tuple[int, int]] = None) -> np.ndarray:
        if isinstance(data, np.ndarray) and data.dtype == self.dtype:
            arr = data.copy()
        else:
            arr = np.array(data, dtype=object)
            if arr.size:
                arr = np.vectorize(self.element, otypes=[object])(arr)
            arr = arr.astype(self.dtype)
        if shape is not None:
            arr = arr.reshape(shape)
        return self.normalize(arr)

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        Z = np.zeros((rows, cols), dtype=self.dtype)
        if self.dtype is object:
            Z[...] = self.element(0)
        return Z

    def eye(self, n: int) -> np.ndarray:
        I = self.zeros(n, n)
        for i in range(n):
            I[i, i] = self.element(1)
        return I

    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        if A.shape[1] == 0:
            return self.zeros(A.shape[0], B.shape[1])
        return self.normalize(A @ B)

    def kron(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        rows, cols = A.shape[0] * B.shape[0], A.shape[1] * B.shape[1]
        if rows == 0 or cols == 0:
            return self.zeros(rows, cols)
        return self.normalize(np.kron(A, B))

    def add(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        return self.normalize(A + B)

    def sub(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        return self.normalize(A - B)

    def scale(self, c, A: np.ndarray) -> np.ndarray:
        return self.normalize(A * self.element(c))

    def is_zero(self, A: np.ndarray) -> bool:
        return A.size == 0 or not bool((A != 0).any())

    def equal(self, A: np.ndarray, B: np.ndarray) -> bool:
        return A.shape == B.shape and self.is_zero(self.sub(A, B))

    # ── Elimination ──────────────────────────────────────────────────

    def rref(self, A) -> Tuple[np.ndarray, List[int]]:
        """Reduced row echelon form and pivot columns."""
        R = self.asarray(A) if not isinstance(A, np.ndarray) else self.normalize(A.copy())
        m, n = R.shape
        pivots: List[int] = []
        r = 0
        for c in range(n):
            if r == m:
                break
            nz = np.flatnonzero(R[r:, c] != 0)
            if nz.size == 0:
                continue
            i = r + int(nz[0])
            if i != r:
                R[[r, i]] = R[[i, r]]
            R[r] = self.normalize(R[r] * self.inv_scalar(R[r, c]))
            col = R[:, c].copy()
            col[r] = self.element(0)
            if not self.is_zero(col):
                R = self.normalize(R - np.outer(col, R[r]))
            pivots.append(c)
            r += 1
        return R, pivots

    def rank(self, A) -> int:
        A = A if isinstance(A, np.ndarray) else self.asarray(A)
        if A.size == 0:
            return 0
        return len(self.rref(A)[1])

    def nullspace(self, A) -> np.ndarray:
        """Right nullspace of A; columns form a basis."""
        A = A if isinstance(A, np.ndarray) else self.asarray(A)
        m, n = A.shape
        if m == 0 or n == 0:
            return self.eye(n)
        R, pivots = self.rref(A)
        free = [j for j in range(n) if j not in set(pivots)]
        N = self.zeros(n, len(free))
        for k, f in enumerate(free):
            N[f, k] = self.element(1)
        if pivots and free:
            N[pivots, :] = self.normalize(-R[: len(pivots)][:, free])
        return N

    def column_space(self, A: np.ndarray) -> np.ndarray:
        """A basis of the column space, taken from the columns of A."""
        if A.size == 0:
            return self.zeros(A.shape[0], 0)
        _, pivots = self.rref(A)
        return A[:, pivots]

    def left_nullspace(self, A: np.ndarray) -> np.ndarray:
        """Rows q with q·A = 0, stacked as a matrix."""
        return self.nullspace(A.T).T.copy()

    def solve(self, A: np.ndarray, B: np.ndarray) -> Optional[np.ndarray]:
        """One solution X of A·X = B, or None if the system is inconsistent."""
        m, n = A.shape
        k = B.shape[1]
        if m == 0:
            return self.zeros(n, k)
        R, pivots = self.rref(np.concatenate([A, B], axis=1))
        if any(p >= n for p in pivots):
            return None
        X = self.zeros(n, k)
        if pivots:
            X[pivots, :] = R[: len(pivots), n:]
        return X

    def inverse(self, A: np.ndarray) -> Optional[np.ndarray]:
        n = A.shape[0]
        if A.shape != (n, n):
            return None
        if n == 0:
            return self.zeros(0, 0)
        R, pivots = self.rref(np.concatenate([A, self.eye(n)], axis=1))
        if pivots[:n] != list(range(n)):
            return None
        return R[:, n:]

    def is_invertible(self, A: np.ndarray) -> bool:
        n = A.shape[0]
        return A.shape == (n, n) and (n == 0 or self.rank(A) == n)

    def right_inverse(self, A: np.ndarray) -> np.ndarray:
        """R with A·R = I for a surjective A."""
        X = self.solve(A, self.eye(A.shape[0]))
        if X is None:
            from errors import InternalInconsistency
            raise InternalInconsistency("matrix is not surjective; no right inverse")
        return X

    def random_combination(self, rng: np.random.Generator, count: int) -> np.ndarray:
        return self.random_array(rng, (count,))

    def hstack(self, blocks: Sequence[np.ndarray], rows: int) -> np.ndarray:
        blocks = [b for b in blocks if b.shape[1]]
        return np.concatenate(blocks, axis=1) if blocks else self.zeros(rows, 0)

    def vstack(self, blocks: Sequence[np.ndarray], cols: int) -> np.ndarray:
        blocks = [b for b in blocks if b.shape[0]]
        return np.concatenate(blocks, axis=0) if blocks else self.zeros(0, cols)

    def format_matrix(self, A: np.ndarray) -> list:
        return [[self.format_element(x) for x in row] for row in A]

    def parse_matrix(self, rows, shape: Tuple[int, int]) -> np.ndarray:
        if shape[0] * shape[1] == 0:
            return self.zeros(*shape)
        data = [[self.parse_element(x) for x in row] for row in rows]
        return self.asarray(data, shape=shape)


@dataclass(frozen=True)
class PrimeField(Field):
    """The prime field F_p, elements stored as int64 residues."""
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.p < 2 or any(self.p % d == 0 for d in range(2, int(self.p ** 0.5) + 1)):
            raise ValueError(f"{self.p} is not a prime")
        if self.p > 3_037_000_499:
            raise ValueError(f"prime {self.p} too large for int64 products")

    @property
    def name(self) -> str:
        return f"Fp:{self.p}"

    @property
    def dtype(self):
        return np.int64

    def normalize(self, A: np.ndarray) -> np.ndarray:
        return np.asarray(A % self.p, dtype=np.int64)

    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        # keep partial sums below 2**63
        k = A.shape[1]
        if k == 0:
            return self.zeros(A.shape[0], B.shape[1])
        step = max(1, (2 ** 62) // (self.p * self.p))
        if k <= step:
            return self.normalize(A @ B)
        out = self.zeros(A.shape[0], B.shape[1])
        for s in range(0, k, step):
            out = self.normalize(out + A[:, s:s + step] @ B[s:s + step, :])
        return out

    def inv_scalar(self, a):
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return pow(a, self.p - 2, self.p)

    def element(self, x):
        if isinstance(x, Fraction):
            return (x.numerator * self.inv_scalar(x.denominator)) % self.p
        return int(x) % self.p

    def random_array(self, rng, shape) -> np.ndarray:
        return rng.integers(0, self.p, size=shape, dtype=np.int64)

    def format_element(self, x) -> str:
        return str(int(x) % self.p)

    def parse_element(self, text):
        text = str(text).strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return (int(num) * self.inv_scalar(int(den))) % self.p
        return int(text) % self.p


@dataclass(frozen=True)
class RationalField(Field):
    """The rationals, elements stored as ``Fraction`` in object arrays."""
    bound: int = 20   # range of random coefficients

    @property
    def name(self) -> str:
        return "Q"

    @property
    def dtype(self):
        return object

    def normalize(self, A: np.ndarray) -> np.ndarray:
        return np.asarray(A, dtype=object)

    def inv_scalar(self, a):
        return Fraction(1) / Fraction(a)

    def element(self, x):
        return Fraction(x)

    def random_array(self, rng, shape) -> np.ndarray:
        raw = rng.integers(-self.bound, self.bound + 1, size=shape)
        out = np.empty(raw.shape, dtype=object)
        for idx, v in np.ndenumerate(raw):
            out[idx] = Fraction(int(v))
        return out

    def format_element(self, x) -> str:
        return str(Fraction(x))

    def parse_element(self, text):
        return Fraction(str(text).strip())


def parse_field(text: str) -> Field:
    """``"Q"`` or ``"Fp:<p>"`` → Field."""
    text = text.strip()
    if text.upper() == "Q":
        return RationalField()
    if text.lower().startswith("fp:"):
        try:
            return PrimeField(int(text.split(":", 1)[1]))
        except ValueError as exc:
            raise ValueError(f"bad field descriptor {text!r}: {exc}") from exc
    raise ValueError(f"unknown field {text!r}; expected 'Q' or 'Fp:<p>'")
