"""Dense exact linear algebra over a :class:`~wedderburn.fields.Field`.

Vectors are tuples of scalars, matrices are sequences of row vectors.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import AmbientMismatch, DimensionMismatch, SingularMatrix
from .fields import Field

Vector = tuple
Matrix = Sequence[Sequence]


def zeros(F: Field, n: int) -> tuple:
    return (F.zero,) * n


def unit_vector(F: Field, n: int, i: int) -> tuple:
    v = [F.zero] * n
    v[i] = F.one
    return tuple(v)


def identity(F: Field, n: int) -> list[tuple]:
    return [unit_vector(F, n, i) for i in range(n)]


def is_zero_vector(F: Field, v) -> bool:
    z = F.zero
    return all(x == z for x in v)


def vec_add(F: Field, u, v) -> tuple:
    if len(u) != len(v):
        raise DimensionMismatch(f"{len(u)} != {len(v)}")
    add = F.add
    return tuple(add(a, b) for a, b in zip(u, v))


def vec_sub(F: Field, u, v) -> tuple:
    if len(u) != len(v):
        raise DimensionMismatch(f"{len(u)} != {len(v)}")
    sub = F.sub
    return tuple(sub(a, b) for a, b in zip(u, v))


def vec_scale(F: Field, c, v) -> tuple:
    mul = F.mul
    return tuple(mul(c, x) for x in v)


def linear_combination(F: Field, coeffs, vectors, n: int) -> tuple:
    """sum_k coeffs[k] * vectors[k], all of length n."""
    out = [F.zero] * n
    add, mul, z = F.add, F.mul, F.zero
    for c, v in zip(coeffs, vectors):
        if c == z:
            continue
        for i, x in enumerate(v):
            if x != z:
                out[i] = add(out[i], mul(c, x))
    return tuple(out)


def transpose(m: Matrix) -> list[tuple]:
    return [tuple(col) for col in zip(*m)]


def mat_mul(F: Field, a: Matrix, b: Matrix) -> list[tuple]:
    if a and len(a[0]) != len(b):
        raise DimensionMismatch(f"{len(a[0])} != {len(b)}")
    cols = len(b[0]) if b else 0
    return [linear_combination(F, row, b, cols) for row in a]


def mat_vec(F: Field, a: Matrix, v) -> tuple:
    """a @ v for a column vector v."""
    add, mul, z = F.add, F.mul, F.zero
    out = []
    for row in a:
        s = z
        for x, y in zip(row, v):
            if x != z and y != z:
                s = add(s, mul(x, y))
        out.append(s)
    return tuple(out)


def rref(F: Field, m: Matrix) -> tuple[list[tuple], list[int]]:
    """Reduced row-echelon form with zero rows dropped, plus pivot columns.

    rank == len(pivots) == number of returned rows.
    """
    rows = [list(r) for r in m]
    if not rows:
        return [], []
    ncols = len(rows[0])
    z, add, mul, neg, inv = F.zero, F.add, F.mul, F.neg, F.inv
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != z), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        s = inv(prow[c])
        if s != F.one:
            prow = rows[r] = [mul(s, x) if x != z else z for x in prow]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f != z:
                    nf = neg(f)
                    row = rows[i]
                    for j in range(c, ncols):
                        if prow[j] != z:
                            row[j] = add(row[j], mul(nf, prow[j]))
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return [tuple(row) for row in rows[:r]], pivots


def rank(F: Field, m: Matrix) -> int:
    return len(rref(F, m)[1])


def solve(F: Field, a: Matrix, b) -> tuple | None:
    """One solution of a @ x = b (free variables zero), or None."""
    if len(a) != len(b):
        raise DimensionMismatch(f"{len(a)} rows vs rhs length {len(b)}")
    ncols = len(a[0]) if a else 0
    aug = [tuple(row) + (bi,) for row, bi in zip(a, b)]
    red, piv = rref(F, aug)
    if piv and piv[-1] == ncols:
        return None
    x = [F.zero] * ncols
    for row, c in zip(red, piv):
        x[c] = row[ncols]
    return tuple(x)


def nullspace(F: Field, a: Matrix, ncols: int | None = None) -> list[tuple]:
    """Basis of {x : a @ x = 0}."""
    if ncols is None:
        ncols = len(a[0])
    red, piv = rref(F, a) if a else ([], [])
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for fc in free:
        x = [F.zero] * ncols
        x[fc] = F.one
        for row, c in zip(red, piv):
            x[c] = F.neg(row[fc])
        basis.append(tuple(x))
    return basis


def inverse(F: Field, m: Matrix) -> list[tuple]:
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionMismatch("inverse needs a square matrix")
    aug = [tuple(row) + e for row, e in zip(m, identity(F, n))]
    red, piv = rref(F, aug)
    if len(piv) < n or piv[n - 1] != n - 1:
        raise SingularMatrix("matrix is not invertible")
    return [row[n:] for row in red]


@dataclass(frozen=True)
class Subspace:
    """Row space in canonical RREF; equality is structural."""

    field: Field
    ambient_dim: int
    basis: tuple
    pivots: tuple

    @classmethod
    def span(cls, F: Field, vectors, ambient_dim: int) -> "Subspace":
        vectors = list(vectors)
        for v in vectors:
            if len(v) != ambient_dim:
                raise AmbientMismatch(f"vector of length {len(v)} in ambient {ambient_dim}")
        red, piv = rref(F, vectors)
        return cls(F, ambient_dim, tuple(red), tuple(piv))

    @classmethod
    def zero(cls, F: Field, ambient_dim: int) -> "Subspace":
        return cls(F, ambient_dim, (), ())

    @classmethod
    def full(cls, F: Field, ambient_dim: int) -> "Subspace":
        return cls(F, ambient_dim, tuple(identity(F, ambient_dim)), tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check(self, other: "Subspace") -> None:
        if other.ambient_dim != self.ambient_dim:
            raise AmbientMismatch(f"{self.ambient_dim} vs {other.ambient_dim}")
        self.field.check(other.field)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.field, self.basis + other.basis, self.ambient_dim)

    def coordinates(self, v) -> tuple | None:
        """Coordinates of v in ``basis``, or None if v is not in the span."""
        if len(v) != self.ambient_dim:
            raise AmbientMismatch(f"vector of length {len(v)} in ambient {self.ambient_dim}")
        coords = tuple(v[c] for c in self.pivots)
        if linear_combination(self.field, coords, self.basis, self.ambient_dim) != tuple(v):
            return None
        return coords

    def contains(self, v) -> bool:
        return self.coordinates(v) is not None

    def is_subset(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(v) for v in self.basis)

    def equals(self, other: "Subspace") -> bool:
        self._check(other)
        return self == other

    def from_coordinates(self, coords) -> tuple:
        return linear_combination(self.field, coords, self.basis, self.ambient_dim)

    @property
    def size(self) -> int | None:
        q = self.field.order
        return None if q is None else q ** self.dim

    def elements(self) -> Iterator[tuple]:
        """All elements, zero first; finite fields only."""
        elems = list(self.field.elements())
        for coords in itertools.product(elems, repeat=self.dim):
            yield self.from_coordinates(coords)

    def random_element(self, rng) -> tuple:
        return self.from_coordinates([self.field.random(rng) for _ in range(self.dim)])
