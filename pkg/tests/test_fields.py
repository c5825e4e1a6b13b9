import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings

from wedderburn.errors import FieldMismatch, FormatError
from wedderburn.fields import (GF, QQ, ExtensionField, PrimeField, default_modulus,
                               field_from_spec, is_irreducible, is_prime)

from .strategies import field_triples


def test_prime_division():
    F = GF(5)
    assert F.div(3, 2) == 4


def test_extension_mul_reduces_by_modulus():
    F = GF(2, modulus=[1, 1, 1])
    t = (0, 1)
    assert F.mul(t, t) == (1, 1)


def test_rational_add():
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_division_by_zero():
    for F in (GF(5), GF(2, 2), QQ):
        with pytest.raises(ZeroDivisionError):
            F.inv(F.zero)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        GF(2).check(GF(3))


@pytest.mark.parametrize("n, expected", [(1, False), (2, True), (9, False), (97, True),
                                         (2147483647, True), (2147483649, False)])
def test_is_prime(n, expected):
    assert is_prime(n) is expected


def test_rejects_bad_fields():
    with pytest.raises(ValueError):
        PrimeField(4)
    with pytest.raises(ValueError):
        PrimeField(2**31 + 11)
    with pytest.raises(ValueError):
        ExtensionField(2, [1, 0, 1])  # (t+1)^2
    with pytest.raises(ValueError):
        ExtensionField(2, [1, 1, 1, 1, 1, 1, 1, 1, 1, 1])  # degree 9


def _has_factor_brute(m, p):
    """Trial-divide by every monic polynomial of degree 1..deg/2."""
    k = len(m) - 1
    for dd in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=dd):
            g = list(tail) + [1]
            r = list(m)
            for shift in range(len(r) - len(g), -1, -1):
                c = r[shift + dd]
                if c:
                    for i, gi in enumerate(g):
                        r[shift + i] = (r[shift + i] - c * gi) % p
            if not any(r[:dd]):
                return True
    return False


@pytest.mark.parametrize("p, k", [(2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (2, 8),
                                  (3, 2), (3, 3), (3, 4), (5, 2), (5, 3)])
def test_irreducibility_matches_exhaustive_factor_search(p, k):
    for tail in itertools.product(range(p), repeat=k):
        m = list(tail) + [1]
        assert is_irreducible(m, p) == (not _has_factor_brute(m, p)), m


def test_irreducible_count_gf2_degree4():
    # 3 monic irreducible quartics over GF(2)
    count = sum(is_irreducible(list(t) + [1], 2) for t in itertools.product(range(2), repeat=4))
    assert count == 3


@pytest.mark.parametrize("p, k", [(2, 5), (2, 6), (2, 8), (3, 4), (7, 2)])
def test_irreducible_count_matches_necklace_formula(p, k):
    # (1/k) sum_{d | k} mu(d) p^(k/d)
    def mu(n):
        out, q = 1, 2
        while q * q <= n:
            if n % q == 0:
                n //= q
                if n % q == 0:
                    return 0
                out = -out
            q += 1
        return -out if n > 1 else out
    expected = sum(mu(d) * p ** (k // d) for d in range(1, k + 1) if k % d == 0) // k
    count = sum(is_irreducible(list(t) + [1], p) for t in itertools.product(range(p), repeat=k))
    assert count == expected


def test_default_modulus():
    assert default_modulus(2, 2) == [1, 1, 1]
    assert is_irreducible(default_modulus(3, 5), 3)


@given(field_triples())
@settings(max_examples=300)
def test_field_axioms(triple):
    F, a, b, c = triple
    add, mul = F.add, F.mul
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert mul(a, b) == mul(b, a)
    assert add(a, F.neg(a)) == F.zero
    assert F.sub(a, b) == add(a, F.neg(b))
    if not F.is_zero(a):
        assert mul(a, F.inv(a)) == F.one
        assert F.div(mul(a, b), a) == b


def test_extension_field_is_cyclic_group_order():
    F = GF(2, 3)
    nonzero = [x for x in F.elements() if x != F.zero]
    assert len(nonzero) == 7
    for x in nonzero:
        acc = F.one
        for _ in range(7):
            acc = F.mul(acc, x)
        assert acc == F.one


@pytest.mark.parametrize("F", [GF(7), GF(3, 2), QQ])
def test_spec_roundtrip(F):
    assert field_from_spec(F.spec()) == F


@pytest.mark.parametrize("spec", [
    {"kind": "prime", "p": 6},
    {"kind": "extension", "p": 2, "deg": 3, "modulus": [1, 1, 1]},
    {"kind": "extension", "p": 2, "modulus": [1, 0, 1]},
    {"kind": "octonion"},
    {"p": 2},
])
def test_bad_specs(spec):
    with pytest.raises(FormatError):
        field_from_spec(spec)


def test_scalar_text_forms():
    assert GF(5).to_json(3) == 3
    assert GF(2, 2).to_json((1, 1)) == [1, 1]
    assert QQ.to_json(Fraction(-3, 4)) == "-3/4"
    assert QQ.to_json(Fraction(2)) == "2"
    assert QQ.from_json("6/8") == Fraction(3, 4)
    with pytest.raises(FormatError):
        GF(5).from_json(5)
    with pytest.raises(FormatError):
        QQ.from_json("1/0")
