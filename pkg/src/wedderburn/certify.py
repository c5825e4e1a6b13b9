"""Verifiers that recheck certificates from the definitions.

Each verifier takes an algebra plus raw certificate data (elements, grids,
tables, matrices) and recomputes everything with plain structure-constant
multiplication.  Nothing here looks at how the pipeline found its answer.
Results are :class:`Report` objects: a list of named checks, each with a
pass flag and, on failure, a witness.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from typing import Any

from . import linalg
from .algebra import Algebra
from .errors import TooLarge
from .minpoly import split_zero_divisor

EXHAUSTIVE_LIMIT = 2**16
SAMPLES = 64


@dataclass
class Check:
    name: str
    passed: bool
    witness: Any = None
    detail: str = ""


@dataclass
class Report:
    title: str
    checks: list = dc_field(default_factory=list)
    info: dict = dc_field(default_factory=dict)

    def add(self, name, passed, witness=None, detail=""):
        self.checks.append(Check(name, bool(passed), witness, detail))

    def extend(self, other: "Report"):
        for c in other.checks:
            self.checks.append(Check(f"{other.title}.{c.name}", c.passed, c.witness, c.detail))
        for k, v in other.info.items():
            self.info[f"{other.title}.{k}"] = v

    @property
    def ok(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def render(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.ok else 'FAIL'}"]
        for k, v in self.info.items():
            lines.append(f"  {k} = {v}")
        for c in self.checks:
            line = f"  [{'ok' if c.passed else 'FAIL'}] {c.name}"
            if c.detail:
                line += f" ({c.detail})"
            if not c.passed and c.witness is not None:
                line += f" witness={c.witness}"
            lines.append(line)
        return "\n".join(lines)


def _rng(seed_or_rng):
    if isinstance(seed_or_rng, random.Random):
        return seed_or_rng
    return random.Random(f"certify:{seed_or_rng}")


def verify_matrix_units(A: Algebra, MU) -> Report:
    """sum_i e_ii = 1 and e_ij e_kl = delta_jk e_il for all i, j, k, l.

    Failure witnesses use 1-based indices.
    """
    units = MU.units if hasattr(MU, "units") else MU
    n = len(units)
    rep = Report("matrix_units", info={"n": n})
    total = A.zero()
    for i in range(n):
        total = A.add(total, units[i][i])
    rep.add("sum_of_diagonal_is_unity", total == A.unity)
    zero = A.zero()
    bad = []
    for i, j, k, l in itertools.product(range(n), repeat=4):
        expected = units[i][l] if j == k else zero
        if A.mul(units[i][j], units[k][l]) != tuple(expected):
            bad.append((i + 1, j + 1, k + 1, l + 1))
    rep.add("product_relations", not bad, bad[0] if bad else None,
            f"{n ** 4 - len(bad)}/{n ** 4} hold")
    return rep


def _corner_mul(D: Algebra, X, Y):
    n = len(X)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = D.zero()
            for k in range(n):
                acc = D.add(acc, D.mul(X[i][k], Y[k][j]))
            row.append(acc)
        out.append(row)
    return out


def _grid(flat, n, k):
    return [[tuple(flat[(i * n + j) * k:(i * n + j + 1) * k]) for j in range(n)]
            for i in range(n)]


def verify_isomorphism(A: Algebra, iso) -> Report:
    """Check phi: A -> M_n(D) given as a forward matrix over a corner table.

    ``iso`` needs: n; corner.e, corner.basis_lift, corner.local (the table
    of D with its unity); forward_matrix ((n^2 k) x d); backward_matrix
    (n^2 k parent elements).
    """
    F = A.field
    n = iso.n
    D = iso.corner.local
    k, d = D.dim, A.dim
    rep = Report("isomorphism", info={"n": n, "dim_corner": k})

    rep.add("dimension", d == n * n * k, detail=f"{d} vs {n}^2*{k}")
    shape_ok = (len(iso.forward_matrix) == n * n * k
                and all(len(r) == d for r in iso.forward_matrix)
                and len(iso.backward_matrix) == n * n * k
                and all(len(r) == d for r in iso.backward_matrix))
    rep.add("shapes", shape_ok)
    if not shape_ok:
        return rep

    # D really is the corner e R e with the claimed table
    e = tuple(iso.corner.e)
    basis = [tuple(v) for v in iso.corner.basis_lift]
    in_corner = all(A.mul(A.mul(e, v), e) == v for v in basis)
    spans = linalg.rank(F, basis) == k and linalg.rank(
        F, basis + [A.mul(A.mul(e, x), e) for x in A.basis_elements]) == k
    rep.add("corner_basis_spans_eRe", in_corner and spans)
    table_ok = all(
        A.mul(basis[s], basis[t])
        == linalg.linear_combination(F, D.table[s][t], basis, d)
        for s in range(k) for t in range(k))
    unity_ok = linalg.linear_combination(F, D.unity, basis, d) == e
    rep.add("corner_table_matches_parent", table_ok and unity_ok)

    def phi(a):
        return _grid(linalg.mat_vec(F, iso.forward_matrix, a), n, k)

    images = [phi(x) for x in A.basis_elements]
    bad = None
    for a in range(d):
        for b in range(d):
            lhs = phi(A.table[a][b])
            if lhs != _corner_mul(D, images[a], images[b]):
                bad = (a, b)
                break
        if bad:
            break
    rep.add("multiplicative", bad is None, bad)

    ident = [[tuple(D.unity) if i == j else D.zero() for j in range(n)] for i in range(n)]
    rep.add("unital", phi(A.unity) == ident)

    # backward o forward = id on the basis of A, forward o backward = id on M_n(D)
    bf = all(linalg.linear_combination(F, linalg.mat_vec(F, iso.forward_matrix, x),
                                       iso.backward_matrix, d) == x
             for x in A.basis_elements)
    fb = all(linalg.mat_vec(F, iso.forward_matrix, iso.backward_matrix[r])
             == linalg.unit_vector(F, n * n * k, r) for r in range(n * n * k))
    rep.add("mutually_inverse", bf and fb)
    return rep


def _local_inverse(D: Algebra, x):
    """Solve w x = 1 in D and confirm x w = 1; None if no two-sided inverse."""
    rows = [D.mul(b, x) for b in D.basis_elements]
    w = linalg.solve(D.field, linalg.transpose(rows), D.unity)
    if w is None or D.mul(x, w) != D.unity:
        return None
    return w


def verify_division_ring(C, seed=0) -> Report:
    """Every nonzero element of the (corner) algebra has a two-sided inverse.

    Exhaustive when the algebra has at most 2^16 elements, otherwise basis
    elements plus 64 seeded samples; ``info['mode']`` says which.
    """
    D = C.local if hasattr(C, "local") else C
    rep = Report("division_ring")
    q = D.field.order
    exhaustive = q is not None and q ** D.dim <= EXHAUSTIVE_LIMIT
    rep.info["mode"] = "exhaustive" if exhaustive else "sampled"
    rep.info["commutative"] = all(D.mul(x, y) == D.mul(y, x)
                                  for x in D.basis_elements for y in D.basis_elements)
    if exhaustive:
        elems = itertools.product(list(D.field.elements()), repeat=D.dim)
        candidates = (tuple(c) for c in elems)
    else:
        rng = _rng(seed)
        candidates = itertools.chain(
            D.basis_elements,
            (tuple(D.field.random(rng) for _ in range(D.dim)) for _ in range(SAMPLES)))
    checked = 0
    failure = None
    for x in candidates:
        if D.is_zero(x):
            continue
        w = _local_inverse(D, x)
        checked += 1
        if w is None or _local_inverse(D, w) != x:
            failure = x
            break
        if not exhaustive:
            # an invertible sample can still expose a zero divisor g(x)
            z = split_zero_divisor(D, x)
            if z is not None:
                failure = z
                break
    rep.add("nonzero_elements_invertible", failure is None, failure,
            f"{checked} elements checked"
            + ("" if exhaustive else ", minimal polynomials irreducible"))
    return rep


def verify_not_prime_witness(A: Algebra, a, b) -> Report:
    """a != 0, b != 0 and a x_i b = 0 for every basis element x_i."""
    a, b = tuple(a), tuple(b)
    rep = Report("not_prime_witness")
    rep.add("a_nonzero", not A.is_zero(a))
    rep.add("b_nonzero", not A.is_zero(b))
    bad = next((i for i, x in enumerate(A.basis_elements)
                if not A.is_zero(A.mul(A.mul(a, x), b))), None)
    rep.add("a_R_b_is_zero", bad is None, bad)
    return rep


def verify_idempotents(A: Algebra, idempotents) -> Report:
    rep = Report("idempotents", info={"count": len(idempotents)})
    es = [tuple(e) for e in idempotents]
    rep.add("nonzero", all(not A.is_zero(e) for e in es))
    bad = next((i for i, e in enumerate(es) if A.mul(e, e) != e), None)
    rep.add("idempotent", bad is None, bad)
    bad = next(((i, j) for i, j in itertools.permutations(range(len(es)), 2)
                if not A.is_zero(A.mul(es[i], es[j]))), None)
    rep.add("orthogonal", bad is None, bad)
    total = A.zero()
    for e in es:
        total = A.add(total, e)
    rep.add("sum_is_unity", total == A.unity)
    return rep


def verify_certificate(A: Algebra, cert, seed=0) -> Report:
    """Run every verifier applicable to ``cert``'s outcome."""
    rep = Report(f"certificate[{cert.outcome}]")
    if cert.outcome == "not_prime":
        rep.extend(verify_not_prime_witness(A, *cert.witness))
    elif cert.outcome == "decomposed":
        rep.extend(verify_idempotents(A, cert.idempotents))
        rep.extend(verify_matrix_units(A, cert.units))
        units = cert.units.units if hasattr(cert.units, "units") else cert.units
        rep.add("units_diagonal_matches_idempotents",
                [tuple(units[i][i]) for i in range(len(units))]
                == [tuple(e) for e in cert.idempotents])
        rep.add("corner_is_e11_R_e11",
                tuple(cert.isomorphism.corner.e) == tuple(units[0][0]))
        rep.extend(verify_isomorphism(A, cert.isomorphism))
        rep.extend(verify_division_ring(cert.isomorphism.corner.local, seed))
    else:
        rep.add("conclusive", False, detail=f"outcome {cert.outcome!r}")
    return rep


def prime_equivalence_probe(A: Algebra, limit: int = 2**12) -> Report:
    """Compare the left-ideal and element-level forms of non-primeness.

    Side (iii): nonzero left ideals I, J with IJ = 0 exist.
    Side (ii): nonzero a, b with aRb = 0 exist (exhaustive pair search).
    The probe passes when both sides agree.
    """
    from .ideals import all_left_ideals, ideal_product

    q = A.field.order
    if q is None or q ** A.dim > limit:
        raise TooLarge(f"|F|^dim exceeds {limit}")
    ideals = [I for I in all_left_ideals(A) if I.dim > 0]
    ideal_pair = next(((I, J) for I in ideals for J in ideals
                       if ideal_product(A, I, J).dim == 0), None)
    elems = [tuple(c) for c in itertools.product(list(A.field.elements()), repeat=A.dim)]
    elems = [x for x in elems if not A.is_zero(x)]
    elem_pair = None
    for a in elems:
        ax = [A.mul(a, x) for x in A.basis_elements]
        for b in elems:
            if all(A.is_zero(A.mul(v, b)) for v in ax):
                elem_pair = (a, b)
                break
        if elem_pair:
            break
    rep = Report("prime_equivalence", info={
        "left_ideals": len(ideals) + 1,
        "ideal_side_not_prime": ideal_pair is not None,
        "element_side_not_prime": elem_pair is not None,
    })
    rep.add("sides_agree", (ideal_pair is None) == (elem_pair is None),
            (ideal_pair, elem_pair))
    return rep
