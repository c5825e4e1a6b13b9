"""Finite-dimensional associative unital algebras given by structure constants.

An :class:`Algebra` of dimension d over a field F stores c[i][j][k] with
x_i x_j = sum_k c[i][j][k] x_k.  Elements are length-d coordinate tuples.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property

from . import linalg
from .errors import (DimensionMismatch, NoUnity, NotAssociative, SingularMatrix,
                     ValidationError, WrongUnity)
from .fields import QQ, Field


class Algebra:
    """Structure-constant algebra.  Immutable once built.

    If ``unity`` is None it is computed with :func:`find_unity`;
    ``NoUnity`` is raised when none exists.  A supplied unity is trusted
    here and cross-checked by :func:`validate`.
    """

    def __init__(self, field: Field, table, unity=None):
        self.field = field
        self.dim = d = len(table)
        if d < 1:
            raise DimensionMismatch("algebra dimension must be >= 1")
        tab = []
        for i, row in enumerate(table):
            if len(row) != d:
                raise DimensionMismatch(f"table[{i}] has {len(row)} entries, expected {d}")
            trow = []
            for j, vec in enumerate(row):
                if len(vec) != d:
                    raise DimensionMismatch(f"table[{i}][{j}] has {len(vec)} entries, expected {d}")
                trow.append(tuple(vec))
            tab.append(tuple(trow))
        self.table = tuple(tab)
        z = field.zero
        # sparse rows: _sparse[i][j] = [(k, c), ...] with c != 0
        self._sparse = [[[(k, c) for k, c in enumerate(v) if c != z] for v in row]
                        for row in self.table]
        if unity is None:
            unity = find_unity(self)
            if unity is None:
                raise NoUnity("no two-sided unity exists")
        if len(unity) != d:
            raise DimensionMismatch(f"unity has length {len(unity)}, expected {d}")
        self.unity = tuple(unity)

    def __repr__(self):
        return f"Algebra(dim={self.dim}, field={self.field!r})"

    def __eq__(self, other):
        return (isinstance(other, Algebra) and self.field == other.field
                and self.table == other.table and self.unity == other.unity)

    def __hash__(self):
        return hash((self.field, self.table))

    # -- element arithmetic --

    def zero(self) -> tuple:
        return (self.field.zero,) * self.dim

    def basis(self, i: int) -> tuple:
        return linalg.unit_vector(self.field, self.dim, i)

    @cached_property
    def basis_elements(self) -> list[tuple]:
        return [self.basis(i) for i in range(self.dim)]

    def element(self, coords) -> tuple:
        """Coerce a coordinate list (ints, Fractions, ...) into canonical form."""
        if len(coords) != self.dim:
            raise DimensionMismatch(f"element of length {len(coords)} in dim {self.dim}")
        return tuple(self.field(c) for c in coords)

    def _check(self, a):
        if len(a) != self.dim:
            raise DimensionMismatch(f"element of length {len(a)} in dim {self.dim}")

    def add(self, a, b):
        return linalg.vec_add(self.field, a, b)

    def sub(self, a, b):
        return linalg.vec_sub(self.field, a, b)

    def scale(self, c, a):
        return linalg.vec_scale(self.field, c, a)

    def is_zero(self, a) -> bool:
        return linalg.is_zero_vector(self.field, a)

    def mul(self, a, b) -> tuple:
        self._check(a)
        self._check(b)
        F = self.field
        z, add, mul = F.zero, F.add, F.mul
        out = [z] * self.dim
        bnz = [(j, y) for j, y in enumerate(b) if y != z]
        for i, x in enumerate(a):
            if x == z:
                continue
            srow = self._sparse[i]
            for j, y in bnz:
                terms = srow[j]
                if terms:
                    xy = mul(x, y)
                    for k, c in terms:
                        out[k] = add(out[k], mul(xy, c))
        return tuple(out)

    def mul3(self, a, b, c) -> tuple:
        return self.mul(self.mul(a, b), c)

    def left_products(self, a) -> list[tuple]:
        """[x_i * a for each basis x_i]: rows of the right-multiplication map r -> r a."""
        self._check(a)
        F = self.field
        z, add, mul = F.zero, F.add, F.mul
        d = self.dim
        anz = [(j, y) for j, y in enumerate(a) if y != z]
        rows = []
        for i in range(d):
            out = [z] * d
            srow = self._sparse[i]
            for j, y in anz:
                for k, c in srow[j]:
                    out[k] = add(out[k], mul(y, c))
            rows.append(tuple(out))
        return rows

    def right_products(self, a) -> list[tuple]:
        """[a * x_i for each basis x_i]."""
        self._check(a)
        F = self.field
        z, add, mul = F.zero, F.add, F.mul
        d = self.dim
        anz = [(j, y) for j, y in enumerate(a) if y != z]
        rows = []
        for i in range(d):
            out = [z] * d
            for j, y in anz:
                for k, c in self._sparse[j][i]:
                    out[k] = add(out[k], mul(y, c))
            rows.append(tuple(out))
        return rows

    def inverse(self, x) -> tuple | None:
        """Two-sided inverse of x, or None.

        Solves w x = 1 (linear in w) and then confirms x w = 1.
        """
        rows = self.left_products(x)  # w x = sum_i w_i rows[i]
        w = linalg.solve(self.field, linalg.transpose(rows), self.unity)
        if w is None or self.mul(x, w) != self.unity:
            return None
        return w

    def is_commutative(self) -> bool:
        t = self.table
        return all(t[i][j] == t[j][i] for i in range(self.dim) for j in range(i))


def find_unity(A: Algebra) -> tuple | None:
    """Solve u x_i = x_i = x_i u for all i (2 d^2 linear equations in u)."""
    F, d, t = A.field, A.dim, A.table
    rows, rhs = [], []
    for i in range(d):
        for k in range(d):
            # (u x_i)_k = sum_j u_j c[j][i][k];  (x_i u)_k = sum_j u_j c[i][j][k]
            rows.append(tuple(t[j][i][k] for j in range(d)))
            rows.append(tuple(t[i][j][k] for j in range(d)))
            target = F.one if i == k else F.zero
            rhs += [target, target]
    u = linalg.solve(F, rows, rhs)
    return u


@dataclass
class ValidationReport:
    """Outcome of :func:`validate`; ``failures`` holds ValidationError instances."""

    failures: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def raise_for_errors(self):
        if self.failures:
            raise self.failures[0]

    def __str__(self):
        if self.ok:
            return "valid"
        return "; ".join(f"{type(e).__name__}: {e}" for e in self.failures)


def validate(A: Algebra) -> ValidationReport:
    """Exhaustive associativity over all basis triples plus unity checks."""
    report = ValidationReport()
    d = A.dim
    basis = A.basis_elements
    prods = [[A.table[i][j] for j in range(d)] for i in range(d)]
    for i in range(d):
        for j in range(d):
            xy = prods[i][j]
            for k in range(d):
                if A.mul(xy, basis[k]) != A.mul(basis[i], prods[j][k]):
                    report.failures.append(NotAssociative(i, j, k))
    u = find_unity(A)
    if u is None:
        report.failures.append(NoUnity("no two-sided unity exists"))
    elif tuple(u) != A.unity:
        report.failures.append(WrongUnity(f"stored unity {A.unity} != computed {tuple(u)}"))
    return report


def matrix_algebra(n: int, field: Field) -> Algebra:
    """M_n(F) on basis E_11, E_12, ..., E_nn (row-major)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    F = field
    d = n * n
    z = F.zero
    table = [[[z] * d for _ in range(d)] for _ in range(d)]
    for i in range(n):
        for j in range(n):
            for l in range(n):
                # E_ij E_jl = E_il
                table[i * n + j][j * n + l][i * n + l] = F.one
    unity = [z] * d
    for i in range(n):
        unity[i * n + i] = F.one
    return Algebra(F, table, unity)


def direct_sum(A: Algebra, B: Algebra) -> Algebra:
    A.field.check(B.field)
    F = A.field
    d = A.dim + B.dim
    z = F.zero
    table = [[[z] * d for _ in range(d)] for _ in range(d)]
    for i in range(A.dim):
        for j in range(A.dim):
            table[i][j][:A.dim] = A.table[i][j]
    o = A.dim
    for i in range(B.dim):
        for j in range(B.dim):
            table[o + i][o + j][o:] = B.table[i][j]
    return Algebra(F, table, A.unity + B.unity)


def group_algebra_cyclic(m: int, field: Field) -> Algebra:
    """F[C_m] on basis g^0, ..., g^(m-1)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    F = field
    z = F.zero
    table = [[[z] * m for _ in range(m)] for _ in range(m)]
    for i in range(m):
        for j in range(m):
            table[i][j][(i + j) % m] = F.one
    return Algebra(F, table, linalg.unit_vector(F, m, 0))


def quaternion_algebra() -> Algebra:
    """Hamilton quaternions over Q on basis 1, i, j, k."""
    F = QQ
    one, m1 = Fraction(1), Fraction(-1)
    # sign, index of x_a x_b
    rules = {
        (1, 1): (m1, 0), (2, 2): (m1, 0), (3, 3): (m1, 0),
        (1, 2): (one, 3), (2, 1): (m1, 3),
        (2, 3): (one, 1), (3, 2): (m1, 1),
        (3, 1): (one, 2), (1, 3): (m1, 2),
    }
    table = [[[F.zero] * 4 for _ in range(4)] for _ in range(4)]
    for a in range(4):
        for b in range(4):
            if a == 0:
                sign, k = one, b
            elif b == 0:
                sign, k = one, a
            else:
                sign, k = rules[(a, b)]
            table[a][b][k] = sign
    return Algebra(F, table, linalg.unit_vector(F, 4, 0))


def restrict_scalars(A: Algebra) -> Algebra:
    """View an algebra over F_{p^k} as a (d*k)-dim algebra over F_p.

    Basis element (i, s) -> t^s x_i, ordered i-major.
    """
    from .fields import ExtensionField, PrimeField

    E = A.field
    if not isinstance(E, ExtensionField):
        raise ValueError("restrict_scalars needs an extension field")
    P = PrimeField(E.p)
    k, d = E.deg, A.dim
    D = d * k
    tpow = [E(linalg.unit_vector(P, k, s)) for s in range(k)]
    table = [[[0] * D for _ in range(D)] for _ in range(D)]
    for i in range(d):
        for j in range(d):
            for s in range(k):
                for r in range(k):
                    ts = E.mul(tpow[s], tpow[r])
                    for l, c in enumerate(A.table[i][j]):
                        coeff = E.mul(ts, c)
                        for q, val in enumerate(coeff):
                            if val:
                                table[i * k + s][j * k + r][l * k + q] = val
    unity = []
    for c in A.unity:
        unity.extend(c)
    return Algebra(P, table, unity)


def change_of_basis(A: Algebra, P) -> Algebra:
    """Algebra on the new basis y_i = sum_j P[i][j] x_j.

    An element with old coordinates v has new coordinates v P^{-1}
    (see :func:`transport`).
    """
    F, d = A.field, A.dim
    if len(P) != d or any(len(r) != d for r in P):
        raise DimensionMismatch(f"P must be {d}x{d}")
    Q = linalg.inverse(F, P)  # raises SingularMatrix
    ys = [tuple(r) for r in P]
    table = []
    for i in range(d):
        row = []
        for j in range(d):
            prod = A.mul(ys[i], ys[j])
            row.append(transport(F, prod, Q))
        table.append(row)
    return Algebra(F, table, transport(F, A.unity, Q))


def transport(F: Field, v, Q) -> tuple:
    """Row vector times matrix: v Q."""
    return linalg.linear_combination(F, v, Q, len(Q[0]))


def random_invertible(F: Field, d: int, rng: random.Random) -> list[tuple]:
    """Rejection-sample uniformly random d x d matrices until one is invertible."""
    while True:
        P = [tuple(F.random(rng) for _ in range(d)) for _ in range(d)]
        if linalg.rank(F, P) == d:
            return P


def scramble(A: Algebra, seed: int) -> tuple[Algebra, list[tuple]]:
    """change_of_basis with a seeded random invertible matrix; returns (A', P)."""
    rng = random.Random(seed)
    P = random_invertible(A.field, A.dim, rng)
    return change_of_basis(A, P), P


__all__ = [
    "Algebra", "ValidationReport", "ValidationError", "SingularMatrix",
    "find_unity", "validate", "matrix_algebra", "direct_sum", "group_algebra_cyclic",
    "quaternion_algebra", "restrict_scalars", "change_of_basis", "transport",
    "random_invertible", "scramble",
]
