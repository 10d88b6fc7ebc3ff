"""Recursive state matrices over exact Python integers.

Row/column index ``i`` of a height-``m`` state matrix is the boundary word
whose letter ``j`` (top to bottom) is 'o' exactly when bit ``j`` of ``i`` is
set, so index 0 is the all-x word.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

DEFAULT_DIM_CAP = 1 << 13


class DimensionCapError(RuntimeError):
    """Raised when a requested matrix would exceed the configured dimension cap."""


_dim_cap = DEFAULT_DIM_CAP


def set_dim_cap(cap: int) -> None:
    global _dim_cap
    if cap < 1:
        raise ValueError("dimension cap must be positive")
    _dim_cap = cap


def get_dim_cap() -> int:
    return _dim_cap


def check_height(m: int) -> None:
    if m < 0:
        raise ValueError(f"height must be nonnegative, got {m}")
    if 1 << m > _dim_cap:
        raise DimensionCapError(
            f"2^{m} = {1 << m} exceeds dimension cap {_dim_cap}")


class BigMatrix:
    """Immutable dense square matrix of nonnegative Python ints."""

    __slots__ = ("dim", "rows", "_nz")

    def __init__(self, rows: Iterable[Sequence[int]]):
        rows = tuple(tuple(r) for r in rows)
        dim = len(rows)
        if dim == 0 or any(len(r) != dim for r in rows):
            raise ValueError("BigMatrix must be square and non-empty")
        self.dim = dim
        self.rows = rows
        self._nz = None

    @classmethod
    def identity(cls, dim: int) -> BigMatrix:
        return cls(tuple(int(i == j) for j in range(dim)) for i in range(dim))

    @classmethod
    def zeros(cls, dim: int) -> BigMatrix:
        return cls((0,) * dim for _ in range(dim))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.rows[ij[0]][ij[1]]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BigMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        if self.dim <= 8:
            return f"BigMatrix({[list(r) for r in self.rows]})"
        return f"BigMatrix(dim={self.dim})"

    def __add__(self, other: BigMatrix) -> BigMatrix:
        _check_same(self, other)
        return BigMatrix(tuple(a + b for a, b in zip(ra, rb))
                         for ra, rb in zip(self.rows, other.rows))

    def scaled(self, c: int) -> BigMatrix:
        return BigMatrix(tuple(c * a for a in r) for r in self.rows)

    def __matmul__(self, other: BigMatrix) -> BigMatrix:
        return mat_mul(self, other)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def is_symmetric(self) -> bool:
        return all(self.rows[i][j] == self.rows[j][i]
                   for i in range(self.dim) for j in range(i))

    def nonzeros(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-row (column, value) pairs of the nonzero entries."""
        if self._nz is None:
            self._nz = tuple(tuple((j, v) for j, v in enumerate(r) if v)
                             for r in self.rows)
        return self._nz


def _check_same(a: BigMatrix, b: BigMatrix) -> None:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")


def block(a11: BigMatrix, a12: BigMatrix, a21: BigMatrix, a22: BigMatrix) -> BigMatrix:
    """The 2x2 block matrix [[a11, a12], [a21, a22]]."""
    top = [r1 + r2 for r1, r2 in zip(a11.rows, a12.rows)]
    bottom = [r1 + r2 for r1, r2 in zip(a21.rows, a22.rows)]
    return BigMatrix(top + bottom)


def mat_mul(a: BigMatrix, b: BigMatrix) -> BigMatrix:
    _check_same(a, b)
    zero = (0,) * b.dim
    brows = b.rows
    out = []
    for nz in a.nonzeros():
        if not nz:
            out.append(zero)
            continue
        (k, v), rest = nz[0], nz[1:]
        acc = [v * x for x in brows[k]]
        for k, v in rest:
            if v == 1:
                acc = [s + x for s, x in zip(acc, brows[k])]
            else:
                acc = [s + v * x for s, x in zip(acc, brows[k])]
        out.append(acc)
    return BigMatrix(out)


def mat_pow(a: BigMatrix, e: int) -> BigMatrix:
    """Exact power by binary exponentiation; ``mat_pow(a, 0)`` is the identity."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    result = None
    base = a
    while e:
        if e & 1:
            result = base if result is None else mat_mul(result, base)
        e >>= 1
        if e:
            base = mat_mul(base, base)
    return result if result is not None else BigMatrix.identity(a.dim)


def mat_powers(a: BigMatrix, e: int) -> list[BigMatrix]:
    """All powers a^1..a^e by iterated multiplication (growth-table mode)."""
    out = []
    cur = None
    for _ in range(e):
        cur = a if cur is None else mat_mul(a, cur)
        out.append(cur)
    return out


def entry_sum(a: BigMatrix) -> int:
    return sum(sum(r) for r in a.rows)


def trace(a: BigMatrix) -> int:
    return sum(a.rows[i][i] for i in range(a.dim))


def trace_of_product(a: BigMatrix, b: BigMatrix) -> int:
    """tr(a @ b) in O(dim^2) without forming the product."""
    _check_same(a, b)
    brows = b.rows
    return sum(ra[j] * brows[j][i] for i, ra in enumerate(a.rows)
               for j in range(a.dim) if ra[j])


def trace_of_power(a: BigMatrix, e: int) -> int:
    """tr(a^e), left-multiplying by the (sparse) base up to half the exponent."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    if e == 0:
        return a.dim
    if e == 1:
        return trace(a)
    half = e // 2
    powers = mat_powers(a, e - half)
    return trace_of_product(powers[half - 1], powers[-1])


def word_rotation_index(i: int, k: int, p: int) -> int:
    """Index of the length-``p`` word ``i`` shifted right cyclically by ``k`` letters.

    Letter j moves to position (j + k) mod p, so for words other than all-x
    and all-o this is ``2**k * i mod (2**p - 1)``.
    """
    if not 0 <= i < (1 << p):
        raise ValueError(f"word index {i} out of range for length {p}")
    if p == 0:
        return 0
    k %= p
    full = (1 << p) - 1
    return ((i << k) | (i >> (p - k))) & full


def rotation_permutation(k: int, p: int) -> tuple[int, ...]:
    return tuple(word_rotation_index(i, k, p) for i in range(1 << p))


def shifted_trace(a: BigMatrix, k: int, p: int) -> int:
    """Sum of entries (i, rho_k(i)) with rho_k the right rotation of words by k."""
    if a.dim != 1 << p:
        raise ValueError(f"matrix dimension {a.dim} is not 2^{p}")
    if not 0 <= k < max(p, 1):
        raise ValueError(f"shift {k} out of range for word length {p}")
    rows = a.rows
    return sum(rows[i][j] for i, j in enumerate(rotation_permutation(k, p)))


# recursive construction ---------------------------------------------------

@dataclass(frozen=True)
class StateMatrixQuad:
    """State matrices of single columns of height ``m``, split by (bottom, top) pattern.

    ``x_plus``: (x, x), ``x_minus``: (x, o), ``o_plus``: (o, o), ``o_minus``: (o, x).
    """

    m: int
    x_plus: BigMatrix
    x_minus: BigMatrix
    o_plus: BigMatrix
    o_minus: BigMatrix

    @property
    def column_matrix(self) -> BigMatrix:
        """N^(m,1): all suitably connected single columns."""
        return self.x_plus + self.x_minus + self.o_plus + self.o_minus

    @property
    def period_column_matrix(self) -> BigMatrix:
        """X+ + O+: single columns whose top and bottom states agree."""
        return self.x_plus + self.o_plus


def build_quad(m: int) -> StateMatrixQuad:
    check_height(m)
    return _build_quad(m)


@lru_cache(maxsize=None)
def _build_quad(m: int) -> StateMatrixQuad:
    if m == 0:
        one, zero = BigMatrix([[1]]), BigMatrix([[0]])
        return StateMatrixQuad(0, one, zero, one, zero)
    q = _build_quad(m - 1)
    xp, xm, op, om = q.x_plus, q.x_minus, q.o_plus, q.o_minus
    return StateMatrixQuad(
        m,
        block(xp, om, om, xp),
        block(xm, op, op, xm),
        block(op, xm, xm, op.scaled(4)),
        block(om, xp, xp, om.scaled(4)),
    )


def build_knot_pair(k: int) -> tuple[BigMatrix, BigMatrix]:
    """The (X_k, O_k) pair for knot mosaics, from X_0 = O_0 = [1]."""
    check_height(k)
    return _build_knot_pair(k)


@lru_cache(maxsize=None)
def _build_knot_pair(k: int) -> tuple[BigMatrix, BigMatrix]:
    if k == 0:
        return BigMatrix([[1]]), BigMatrix([[1]])
    x, o = _build_knot_pair(k - 1)
    return block(x, o, o, x), block(o, x, x, o.scaled(4))


# dump format --------------------------------------------------------------

def dump_matrix(a: BigMatrix) -> str:
    lines = [str(a.dim)] + [" ".join(str(v) for v in r) for r in a.rows]
    return "\n".join(lines) + "\n"


def load_matrix(text: str) -> BigMatrix:
    lines = text.strip().splitlines()
    dim = int(lines[0])
    rows = [tuple(int(v) for v in ln.split()) for ln in lines[1:]]
    if len(rows) != dim or any(len(r) != dim for r in rows):
        raise ValueError(f"malformed matrix dump, expected {dim}x{dim}")
    return BigMatrix(rows)


def cached_quad_matrix(kind: str, m: int, cache_dir: str | os.PathLike | None) -> BigMatrix:
    """One of the quad matrices (or their period sum ``"n_plus"``), via a dump-file cache."""
    quad_kinds = ("x_plus", "x_minus", "o_plus", "o_minus", "n_plus")
    if kind not in quad_kinds:
        raise ValueError(f"unknown matrix kind {kind!r}")

    def build() -> BigMatrix:
        q = build_quad(m)
        return q.period_column_matrix if kind == "n_plus" else getattr(q, kind)

    if cache_dir is None:
        return build()
    path = os.path.join(os.fspath(cache_dir), f"{kind}_{m}.mat")
    if os.path.exists(path):
        with open(path) as fh:
            return load_matrix(fh.read())
    a = build()
    os.makedirs(os.fspath(cache_dir), exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        fh.write(dump_matrix(a))
    os.replace(tmp, path)
    return a
