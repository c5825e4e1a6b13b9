"""Brute-force oracles, independent of the package's linear algebra.

Everything here works on tiny algebras over prime fields by enumerating
elements and multiplying with plain integer arithmetic straight from the
structure table.
"""
import itertools

import numpy as np


def table_array(A):
    """Structure constants as an int ndarray (prime fields only)."""
    return np.array([[list(cell) for cell in row] for row in A.table], dtype=np.int64)


def brute_mul(c, p, a, b):
    """a*b = sum_ij a_i b_j c_ij. over F_p with numpy."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    return tuple(int(x) for x in np.einsum("i,j,ijk->k", a, b, c) % p)


def all_elements(p, d):
    return [tuple(v) for v in itertools.product(range(p), repeat=d)]


def brute_is_associative(c, p):
    d = c.shape[0]
    els = all_elements(p, d)
    return all(brute_mul(c, p, brute_mul(c, p, x, y), z) == brute_mul(c, p, x, brute_mul(c, p, y, z))
               for x in els for y in els for z in els)


def brute_unity(c, p):
    d = c.shape[0]
    els = all_elements(p, d)
    for u in els:
        if all(brute_mul(c, p, u, x) == x == brute_mul(c, p, x, u) for x in els):
            return u
    return None


def brute_is_prime(c, p):
    """No nonzero a, b with a x b = 0 for every element x."""
    d = c.shape[0]
    els = all_elements(p, d)
    zero = (0,) * d
    nonzero = [x for x in els if x != zero]
    for a in nonzero:
        for b in nonzero:
            if all(brute_mul(c, p, brute_mul(c, p, a, x), b) == zero for x in els):
                return False
    return True


def brute_subspaces(p, d):
    """Every subspace of F_p^d as a frozenset of vectors, grown one vector at a time."""
    els = all_elements(p, d)
    zero = frozenset([(0,) * d])
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for S in frontier:
            for v in els:
                if v in S:
                    continue
                T = frozenset(tuple((s[i] + c * v[i]) % p for i in range(d))
                              for s in S for c in range(p))
                if T not in seen:
                    seen.add(T)
                    nxt.append(T)
        frontier = nxt
    return seen


def brute_left_ideals(c, p):
    d = c.shape[0]
    els = all_elements(p, d)
    prod = {(x, v): brute_mul(c, p, x, v) for x in els for v in els}
    return [S for S in brute_subspaces(p, d)
            if all(prod[x, v] in S for x in els for v in S)]


def brute_isomorphic(c1, c2, p):
    """Search all invertible linear maps for a ring isomorphism."""
    d = c1.shape[0]
    if c2.shape[0] != d:
        return False
    for flat in itertools.product(range(p), repeat=d * d):
        M = np.array(flat, dtype=np.int64).reshape(d, d)
        if round(np.linalg.det(M)) % p == 0:
            continue
        # phi(x_i) = row i of M
        ok = True
        for i in range(d):
            for j in range(d):
                lhs = np.array(c1[i, j]) @ M % p
                rhs = np.array(brute_mul(c2, p, M[i], M[j]))
                if not np.array_equal(lhs, rhs):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def matrix_basis(n):
    """Row-major E_ij as n x n integer matrices."""
    out = []
    for i in range(n):
        for j in range(n):
            E = np.zeros((n, n), dtype=np.int64)
            E[i, j] = 1
            out.append(E)
    return out


def coords_to_matrix(v, n):
    return np.array(v, dtype=np.int64).reshape(n, n)
