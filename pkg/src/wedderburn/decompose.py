"""Constructive R = M_n(D) for a prime finite-dimensional algebra.

Pipeline: find a minimal left ideal L, extract an idempotent e with L = Re
and eRe a division ring, peel e off and repeat inside the complementary
corner until the idempotents sum to 1, connect each idempotent to the first
one, fill in the matrix units, and read off the isomorphism
a -> (e_1i a e_j1)_{ij}.

Any step that reveals a zero-square minimal ideal or a pair of idempotents
that nothing connects produces a witness pair (a, b) with aRb = 0 instead.
Every returned certificate has passed :func:`wedderburn.certify.verify_certificate`.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field as dc_field
from functools import cached_property

from . import linalg
from .algebra import Algebra
from .certify import Report, verify_certificate, verify_division_ring, verify_matrix_units
from .errors import (MinimalityRefuted, NoConnector, NotInvertible, RelationsFailed,
                     SingularMatrix, ZeroCorner)
from .ideals import as_rng, minimal_left_ideal, principal_left_ideal, span
from .linalg import Subspace

log = logging.getLogger(__name__)

MAX_RETRIES = 1000


@dataclass(frozen=True)
class NilpotentWitness:
    """a, b nonzero with a R b = 0."""

    a: tuple
    b: tuple


@dataclass(eq=False)
class CornerAlgebra:
    """eRe with basis ``basis_lift`` (parent elements) and local table ``local``."""

    parent: Algebra
    e: tuple
    basis_lift: tuple
    local: Algebra

    @property
    def dim(self) -> int:
        return self.local.dim

    @cached_property
    def _coord_map(self):
        F = self.parent.field
        space = Subspace.span(F, self.basis_lift, self.parent.dim)
        if space.dim != len(self.basis_lift):
            raise ValueError("corner basis is linearly dependent")
        # basis_lift = T * space.basis, so lift-coords = space-coords * T^-1
        T = [tuple(v[c] for c in space.pivots) for v in self.basis_lift]
        return space, linalg.inverse(F, T)

    def to_local(self, v) -> tuple:
        space, Tinv = self._coord_map
        c = space.coordinates(v)
        if c is None:
            raise ValueError("element is not in the corner")
        return linalg.linear_combination(self.parent.field, c, Tinv, self.dim)

    def lift(self, coords) -> tuple:
        return linalg.linear_combination(self.parent.field, coords, self.basis_lift,
                                         self.parent.dim)


def corner_algebra(A: Algebra, e) -> CornerAlgebra:
    """eRe, with basis the RREF basis of span{e x_i e} and unity e."""
    e = tuple(e)
    if A.is_zero(e):
        raise ZeroCorner("e = 0")
    ex = A.right_products(e)
    space = span(A, [A.mul(v, e) for v in ex])
    basis = space.basis
    F = A.field
    table = []
    for u in basis:
        row = []
        for w in basis:
            c = space.coordinates(A.mul(u, w))
            if c is None:
                raise ValueError("e is not idempotent: eRe is not closed")
            row.append(c)
        table.append(row)
    unity = space.coordinates(e)
    if unity is None:
        raise ValueError("e is not idempotent: e not in eRe")
    local = Algebra(F, table, unity)
    return CornerAlgebra(A, e, basis, local)


def idempotent_from_minimal_ideal(A: Algebra, L: Subspace):
    """Idempotent e with Re = L, or a NilpotentWitness when L^2 = 0.

    Raises MinimalityRefuted carrying a strictly smaller nonzero left ideal
    when L turns out not to be minimal.
    """
    if L.dim == 0:
        raise ValueError("L must be nonzero")
    F = A.field
    for y in L.basis:
        Ly = [A.mul(l, y) for l in L.basis]
        if not all(A.is_zero(v) for v in Ly):
            break
    else:
        a = L.basis[0]
        return NilpotentWitness(a, a)
    # e = sum lam_k l_k with e y = y, i.e. sum lam_k (l_k y) = y
    M = linalg.transpose(Ly)
    null = linalg.nullspace(F, M, L.dim)
    if null:
        J = span(A, [L.from_coordinates(lam) for lam in null])
        raise MinimalityRefuted(J, "J = {z in L : zy = 0} is nonzero")
    lam = linalg.solve(F, M, y)
    if lam is None:
        raise MinimalityRefuted(span(A, Ly), "Ly is a proper sub-ideal")
    e = L.from_coordinates(lam)
    if A.mul(e, e) != e:
        raise MinimalityRefuted(span(A, Ly), "e^2 != e")
    Re = principal_left_ideal(A, e)
    if Re != L:
        raise MinimalityRefuted(Re, "Re is a proper sub-ideal")
    return e


def invert_in_corner(C: CornerAlgebra, x) -> tuple:
    """Two-sided inverse of x (a parent element of eRe) inside eRe."""
    w = C.local.inverse(C.to_local(x))
    if w is None:
        raise NotInvertible(x)
    return C.lift(w)


def _refute_division(A: Algebra, e, L: Subspace, x):
    """x in eRe has no inverse: exhibit a proper sub-ideal of L = Re."""
    I = principal_left_ideal(A, x)
    if I != L:
        raise MinimalityRefuted(I, "R(exe) is a proper sub-ideal")
    # Rx = L contains e, so b x = e for some b; then (ebe) x = e
    b = linalg.solve(A.field, linalg.transpose(A.left_products(x)), e)
    w = A.mul(A.mul(e, b), e)
    I = principal_left_ideal(A, w)
    if I != L:
        raise MinimalityRefuted(I, "R(ebe) is a proper sub-ideal")
    raise AssertionError("corner element with left inverse ebe and R(ebe) = Re must be invertible")


def idempotent_with_division_corner(A: Algebra, rng) -> tuple[object, Report | None, list]:
    """(e, division report, descent chain) or (NilpotentWitness, None, chain).

    Re-descends inside any smaller ideal exposed along the way; each
    refutation strictly shrinks the ideal, so this terminates.
    """
    rng = as_rng(rng)
    start = None
    chain: list[Subspace] = []
    while True:
        L = minimal_left_ideal(A, rng, start)
        chain.append(L)
        try:
            r = idempotent_from_minimal_ideal(A, L)
            if isinstance(r, NilpotentWitness):
                return r, None, chain
            D = corner_algebra(A, r)
            report = verify_division_ring(D.local, rng)
            if not report.ok:
                x = D.lift(report.failures[0].witness)
                _refute_division(A, r, L, x)
            return r, report, chain
        except MinimalityRefuted as exc:
            log.debug("minimality refuted: %s", exc)
            if exc.smaller.dim >= L.dim or exc.smaller.dim == 0:
                raise
            start = exc.smaller


@dataclass
class PeelResult:
    idempotents: list = dc_field(default_factory=list)
    division_reports: list = dc_field(default_factory=list)
    pairs: list = dc_field(default_factory=list)  # (e_1i, e_i1) for i = 2..n
    trace: list = dc_field(default_factory=list)  # dim R(1 - e_1 - ... - e_k), k = 0..n
    witness: NilpotentWitness | None = None


def peel_idempotents(A: Algebra, rng=0) -> PeelResult:
    """Orthogonal idempotents e_1..e_n summing to 1 with division-ring corners.

    Step k works inside the corner fRf with f = 1 - e_1 - ... - e_{k-1};
    idempotents found there are orthogonal to the earlier ones.  Each new
    idempotent is connected to e_1 straight away, so a pair of idempotents
    that nothing connects ends the peel with a witness.
    """
    rng = as_rng(rng)
    F = A.field
    out = PeelResult()
    total = A.zero()
    f = A.unity
    first_corner = None
    out.trace.append(principal_left_ideal(A, f).dim)
    while not A.is_zero(f):
        C = corner_algebra(A, f)
        r, report, _ = idempotent_with_division_corner(C.local, rng)
        if isinstance(r, NilpotentWitness):
            out.witness = _lifted_witness(A, C.lift(r.a), C.lift(r.b))
            return out
        e = C.lift(r)
        if first_corner is None:
            first_corner = corner_algebra(A, e)
        else:
            try:
                out.pairs.append(connecting_pair(A, out.idempotents[0], e, first_corner))
            except NoConnector as exc:
                out.witness = _lifted_witness(A, *exc.witness)
                return out
        out.idempotents.append(e)
        out.division_reports.append(report)
        total = A.add(total, e)
        f = linalg.vec_sub(F, A.unity, total)
        dim = principal_left_ideal(A, f).dim
        if dim >= out.trace[-1]:
            raise AssertionError("R(1 - e_1 - ... - e_k) failed to shrink")
        out.trace.append(dim)
    return out


def _lifted_witness(A: Algebra, a, b) -> NilpotentWitness:
    """Re-check a R b = 0 against every parent basis element."""
    for x in A.basis_elements:
        if not A.is_zero(A.mul(A.mul(a, x), b)):
            raise AssertionError("witness fails in the parent algebra")
    return NilpotentWitness(tuple(a), tuple(b))


def connecting_pair(A: Algebra, e, f, corner: CornerAlgebra | None = None):
    """u in eRf, v in fRe with uv = e and vu = f.

    Scans basis pairs (x_i, x_j) lexicographically for e x_i f x_j e != 0.
    Raises NoConnector with a witness (a, b), aRb = 0, if there is none.
    """
    C = corner if corner is not None else corner_algebra(A, e)
    U = [A.mul(v, f) for v in A.right_products(e)]  # e x_i f
    V = [A.mul(v, e) for v in A.right_products(f)]  # f x_j e
    for u in U:
        if A.is_zero(u):
            continue
        for vj in V:
            if A.is_zero(vj):
                continue
            w = A.mul(u, vj)
            if A.is_zero(w):
                continue
            v = A.mul(vj, invert_in_corner(C, w))
            if A.mul(u, v) != tuple(e):
                raise NotInvertible(w)
            vu = A.mul(v, u)
            if vu != tuple(f):
                # (vu - f) v = 0 with v != 0: vu - f is a non-invertible element of fRf
                raise NotInvertible(A.sub(vu, f))
            return u, v
    nz = next((u for u in U if not A.is_zero(u)), None)
    raise NoConnector((nz, tuple(e)) if nz is not None else (tuple(e), tuple(f)))


@dataclass
class MatrixUnits:
    n: int
    units: list  # units[i][j] = e_{i+1, j+1}

    def __getitem__(self, ij):
        i, j = ij
        return self.units[i][j]


def complete_matrix_units(A: Algebra, idempotents, pairs) -> MatrixUnits:
    """e_ij = e_i1 e_1j from e_1i = pairs[i-2][0], e_i1 = pairs[i-2][1]."""
    n = len(idempotents)
    if len(pairs) != n - 1:
        raise ValueError("need one connecting pair per idempotent after the first")
    first = tuple(idempotents[0])
    row = [first] + [tuple(u) for u, _ in pairs]
    col = [first] + [tuple(v) for _, v in pairs]
    units = [[A.mul(col[i], row[j]) for j in range(n)] for i in range(n)]
    MU = MatrixUnits(n, units)
    report = verify_matrix_units(A, MU)
    if not report.ok:
        raise RelationsFailed(report.failures[0].witness)
    return MU


@dataclass(eq=False)
class Isomorphism:
    """phi: R -> M_n(D), D = e_11 R e_11.

    ``forward`` is the (n^2 k) x d matrix whose column m holds phi(x_m)
    flattened as row (i n + j) k + s; ``backward`` row r is the parent
    element mapped to the r-th standard basis vector of M_n(D).
    """

    n: int
    corner: CornerAlgebra
    forward_matrix: list
    backward_matrix: list

    def forward(self, a) -> list[list[tuple]]:
        flat = linalg.mat_vec(self.corner.parent.field, self.forward_matrix, a)
        k, n = self.corner.dim, self.n
        return [[flat[(i * n + j) * k:(i * n + j + 1) * k] for j in range(n)]
                for i in range(n)]

    def backward(self, grid) -> tuple:
        flat = [c for row in grid for entry in row for c in entry]
        A = self.corner.parent
        return linalg.linear_combination(A.field, flat, self.backward_matrix, A.dim)


def build_isomorphism(A: Algebra, MU: MatrixUnits) -> Isomorphism:
    n = MU.n
    C = corner_algebra(A, MU[0, 0])
    k, d = C.dim, A.dim
    forward = [None] * (n * n * k)
    for i in range(n):
        left = A.right_products(MU[0, i])  # e_1i x_m
        for j in range(n):
            right = MU[j, 0]
            cols = [C.to_local(A.mul(v, right)) for v in left]
            for s in range(k):
                forward[(i * n + j) * k + s] = tuple(c[s] for c in cols)
    backward = []
    for i in range(n):
        for j in range(n):
            for s in range(k):
                backward.append(A.mul(A.mul(MU[i, 0], C.basis_lift[s]), MU[0, j]))
    return Isomorphism(n, C, forward, backward)


@dataclass(eq=False)
class Certificate:
    outcome: str  # "decomposed" | "not_prime" | "inconclusive"
    algebra: Algebra
    idempotents: list | None = None
    units: MatrixUnits | None = None
    isomorphism: Isomorphism | None = None
    division_ring: Report | None = None
    witness: tuple | None = None
    trace: list | None = None
    retries: int = 0

    @property
    def n(self):
        return self.units.n if self.units else None

    @property
    def corner_dim(self):
        return self.isomorphism.corner.dim if self.isomorphism else None

    @property
    def commutative(self):
        return self.isomorphism.corner.local.is_commutative() if self.isomorphism else None


def _attempt(A: Algebra, rng: random.Random, seed) -> Certificate:
    peel = peel_idempotents(A, rng)
    if peel.witness is not None:
        return Certificate("not_prime", A, witness=(peel.witness.a, peel.witness.b),
                           trace=peel.trace)
    MU = complete_matrix_units(A, peel.idempotents, peel.pairs)
    iso = build_isomorphism(A, MU)
    division = verify_division_ring(iso.corner.local, seed)
    return Certificate("decomposed", A, idempotents=peel.idempotents, units=MU,
                       isomorphism=iso, division_ring=division, trace=peel.trace)


def decompose(A: Algebra, seed: int = 0, max_retries: int = MAX_RETRIES) -> Certificate:
    """Certified R = M_n(D), a certified not-prime witness, or "inconclusive".

    Deterministic in (A, seed): attempt t draws from the stream seeded by
    "seed:t".  Only certificates passing verify_certificate are returned.
    """
    for attempt in range(max_retries):
        rng = random.Random(f"{seed}:{attempt}")
        try:
            cert = _attempt(A, rng, seed)
        except (NotInvertible, MinimalityRefuted, RelationsFailed, SingularMatrix) as exc:
            log.debug("attempt %d failed: %s", attempt, exc)
            continue
        if verify_certificate(A, cert).ok:
            cert.retries = attempt
            return cert
        log.debug("attempt %d produced a certificate that failed verification", attempt)
    return Certificate("inconclusive", A, retries=max_retries)
