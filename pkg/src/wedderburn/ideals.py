"""Left ideals of a structure-constant algebra and descent to a minimal one.

Left ideals are represented by their :class:`~wedderburn.linalg.Subspace`
(canonical RREF basis), so ideal equality is structural.
"""
from __future__ import annotations

import itertools
import random

from .algebra import Algebra
from .linalg import Subspace

# |L| at or below this is swept exhaustively; above it we sample.
ENUMERATION_LIMIT = 2**16
SAMPLES = 64


def as_rng(seed_or_rng) -> random.Random:
    if isinstance(seed_or_rng, random.Random):
        return seed_or_rng
    return random.Random(seed_or_rng)


def span(A: Algebra, vectors) -> Subspace:
    return Subspace.span(A.field, vectors, A.dim)


def left_ideal_generated(A: Algebra, S) -> Subspace:
    """RS: smallest left ideal containing S.

    Closure of span(S) under left multiplication by basis elements, iterated
    to a fixed point.
    """
    S = [tuple(s) for s in S]
    current = span(A, S)
    while True:
        gens = list(current.basis)
        for v in current.basis:
            gens.extend(A.left_products(v))
        nxt = span(A, gens)
        if nxt == current:
            return current
        current = nxt


def principal_left_ideal(A: Algebra, a) -> Subspace:
    """Ra = span{x_i a}; already closed because R is unital and associative."""
    return span(A, A.left_products(a))


def two_sided_ideal_generated(A: Algebra, a) -> Subspace:
    """RaR: closure of span{a} under left and right basis multiplication."""
    current = span(A, [a])
    while True:
        gens = list(current.basis)
        for v in current.basis:
            gens.extend(A.left_products(v))
            gens.extend(A.right_products(v))
        nxt = span(A, gens)
        if nxt == current:
            return current
        current = nxt


def ideal_product(A: Algebra, I: Subspace, J: Subspace) -> Subspace:
    """IJ = span{u v : u in basis(I), v in basis(J)}."""
    return span(A, [A.mul(u, v) for u in I.basis for v in J.basis])


def is_zero_square(A: Algebra, L: Subspace) -> bool:
    return ideal_product(A, L, L).dim == 0


def is_left_ideal(A: Algebra, V: Subspace) -> bool:
    return all(V.contains(w) for v in V.basis for w in A.left_products(v))


def enumerable(L: Subspace, limit: int = ENUMERATION_LIMIT) -> bool:
    size = L.size
    return size is not None and size <= limit


def descend(A: Algebra, rng=0, start: Subspace | None = None) -> list[Subspace]:
    """Chain L_1 > L_2 > ... ending at a (possibly provisionally) minimal left ideal.

    Small ideals are swept exhaustively, so a final ideal that is enumerable
    is certified minimal: every nonzero a in it has Ra = L.  Otherwise up to
    ``SAMPLES`` consecutive random picks (basis vectors first) failed to shrink it.
    """
    rng = as_rng(rng)
    L = start if start is not None else Subspace.full(A.field, A.dim)
    chain = [L]
    while True:
        smaller = _shrink(A, L, rng)
        if smaller is None:
            return chain
        L = smaller
        chain.append(L)


def _shrink(A: Algebra, L: Subspace, rng: random.Random) -> Subspace | None:
    if L.dim <= 1:
        return None
    if enumerable(L):
        candidates = _lines(L)
    else:
        candidates = _sampled(L, rng)
    for a in candidates:
        if A.is_zero(a):
            continue
        I = principal_left_ideal(A, a)
        if I.dim < L.dim:
            return I
    return None


def _lines(L: Subspace):
    """One nonzero vector per line of L (leading coordinate 1); Ra = R(ca) for c != 0."""
    F = L.field
    nonzero = [a for a in F.elements() if not F.is_zero(a)]
    for lead in range(L.dim):
        for tail in itertools.product([F.zero] + nonzero, repeat=L.dim - lead - 1):
            coords = (F.zero,) * lead + (F.one,) + tail
            yield L.from_coordinates(coords)


def _sampled(L: Subspace, rng: random.Random):
    yield from L.basis
    for _ in range(SAMPLES):
        yield L.random_element(rng)


def minimal_left_ideal(A: Algebra, rng=0, start: Subspace | None = None) -> Subspace:
    return descend(A, rng, start)[-1]


def is_minimal_exhaustive(A: Algebra, L: Subspace) -> bool:
    """Literal check: Ra = L for every nonzero a in L (finite, enumerable L)."""
    if L.dim == 0:
        return False
    it = L.elements()
    next(it)
    return all(principal_left_ideal(A, a) == L for a in it)


def all_left_ideals(A: Algebra) -> list[Subspace]:
    """Every left ideal of a small algebra over a finite field.

    Each left ideal is a sum of principal ones, so close the set of Ra under
    pairwise sums.
    """
    full = Subspace.full(A.field, A.dim)
    ideals = {Subspace.zero(A.field, A.dim)}
    for a in full.elements():
        ideals.add(principal_left_ideal(A, a))
    frontier = list(ideals)
    while frontier:
        new = []
        base = list(ideals)
        for I in frontier:
            for J in base:
                K = I + J
                if K not in ideals:
                    ideals.add(K)
                    new.append(K)
        frontier = new
    return sorted(ideals, key=lambda s: (s.dim, s.basis))
