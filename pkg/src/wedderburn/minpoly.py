"""Minimal polynomials over the prime field and zero divisors from their factors.

If the minimal polynomial m of x factors as m = g h with 0 < deg g < deg m,
then g(x) != 0 and g(x) h(x) = 0, so g(x) is a zero divisor.  In a division
ring every minimal polynomial over the prime field is irreducible, which
makes this a cheap way to refute "division ring" from a single element even
when that element happens to be invertible.  Factoring is delegated to
python-flint.
"""
from __future__ import annotations

from fractions import Fraction

import flint

from .algebra import Algebra
from .fields import ExtensionField, GF, QQ, RationalField


def prime_field(F):
    if isinstance(F, RationalField):
        return QQ
    return GF(F.p)


def _flatten(F, v) -> list:
    if isinstance(F, ExtensionField):
        return [c for a in v for c in a]
    return list(v)


def minimal_polynomial(A: Algebra, x) -> list:
    """Monic minimal polynomial of x over the prime field, low-to-high."""
    F = A.field
    P = prime_field(F)
    # incremental elimination; each row remembers which powers it combines
    rows = []  # (pivot, reduced vector, combination over powers)
    power = A.unity
    j = 0
    while True:
        v = _flatten(F, power)
        comb = [P.zero] * j + [P.one]
        for piv, r, c in rows:
            if not P.is_zero(v[piv]):
                lam = v[piv]
                v = [P.sub(a, P.mul(lam, b)) for a, b in zip(v, r)]
                comb = [P.sub(a, P.mul(lam, b)) for a, b in
                        zip(comb, c + [P.zero] * (len(comb) - len(c)))]
        piv = next((i for i, a in enumerate(v) if not P.is_zero(a)), None)
        if piv is None:
            return comb  # sum comb_i x^i = 0 with comb_j = 1
        inv = P.inv(v[piv])
        rows.append((piv, [P.mul(inv, a) for a in v], [P.mul(inv, a) for a in comb]))
        power = A.mul(power, x)
        j += 1


def evaluate(A: Algebra, coeffs, x) -> tuple:
    """sum c_i x^i with prime-field coefficients."""
    F = A.field
    out = A.zero()
    power = A.unity
    for c in coeffs:
        out = A.add(out, A.scale(F(c), power))
        power = A.mul(power, x)
    return out


def _factors(P, coeffs) -> list[list]:
    """Irreducible factors (with multiplicity) as low-to-high coefficient lists."""
    if P is QQ:
        poly = flint.fmpq_poly([flint.fmpq(c.numerator, c.denominator) for c in coeffs])
        _, facs = poly.factor()
        conv = lambda c: Fraction(int(c.p), int(c.q))  # noqa: E731
    else:
        poly = flint.fmpz_mod_poly_ctx(P.p)([int(c) for c in coeffs])
        _, facs = poly.factor()
        conv = int
    out = []
    for f, mult in facs:
        out.extend([[conv(c) for c in f.coeffs()]] * mult)
    return out


def split_zero_divisor(A: Algebra, x):
    """A nonzero zero divisor g(x) when the minimal polynomial of x is reducible, else None."""
    m = minimal_polynomial(A, x)
    if len(m) <= 2:  # degree <= 1 is irreducible
        return None
    facs = _factors(prime_field(A.field), m)
    if len(facs) < 2:
        return None
    z = evaluate(A, facs[0], x)
    if A.is_zero(z):
        raise AssertionError("proper factor of the minimal polynomial vanishes at x")
    return z
