"""Exact base fields: F_p, F_{p^k} = F_p[t]/(m(t)), and the rationals.

Scalars are plain immutable Python values owned by a field object:

* prime field      -> int residue in [0, p)
* extension field  -> tuple of ``deg`` residues, low-to-high coefficients
* rationals        -> :class:`fractions.Fraction` (always in lowest terms)

All arithmetic goes through the field object, so vectors and matrices can be
ordinary tuples/lists of scalars.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Any, Iterator

from .errors import FieldMismatch, FormatError

MAX_PRIME = 2**31
MAX_EXTENSION_DEGREE = 8


def is_prime(n: int) -> bool:
    """Trial division; intended for n < 2**31."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# -- polynomials over F_p, coefficient lists low-to-high, no trailing zeros --

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    """a*b mod m over F_p; m monic."""
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return poly_mod(prod, m, p)


def poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        shift = len(a) - 1 - dm
        c = a[-1] * inv_lead % p
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [x * inv % p for x in a]
    return a


def _x_pow_p_power(m: list[int], p: int, k: int) -> list[int]:
    """t^(p^k) mod m, by k repeated p-th powerings."""
    r = poly_mod([0, 1], m, p)
    for _ in range(k):
        base, e, acc = r, p, [1]
        while e:
            if e & 1:
                acc = poly_mulmod(acc, base, m, p)
            base = poly_mulmod(base, base, m, p)
            e >>= 1
        r = acc
    return r


def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(m: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p."""
    k = len(m) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    if _x_pow_p_power(m, p, k) != [0, 1]:
        return False
    for q in _prime_factors(k):
        h = _x_pow_p_power(m, p, k // q)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        if poly_gcd(m, _trim(diff), p) != [1]:
            return False
    return True


class Field:
    """Common interface; concrete classes below."""

    kind: str
    zero: Any
    one: Any

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def __call__(self, value):
        """Coerce an int (or native value) into canonical form."""
        raise NotImplementedError

    @property
    def order(self) -> int | None:
        """Number of elements, or None for an infinite field."""
        return None

    def elements(self) -> Iterator:
        raise ValueError(f"{self!r} is infinite")

    def random(self, rng):
        raise NotImplementedError

    def to_json(self, a):
        raise NotImplementedError

    def from_json(self, v):
        raise NotImplementedError

    def spec(self) -> dict:
        raise NotImplementedError

    def check(self, other: "Field") -> None:
        if self != other:
            raise FieldMismatch(f"{self!r} vs {other!r}")


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p: int):
        if not isinstance(p, int) or not 2 <= p < MAX_PRIME or not is_prime(p):
            raise ValueError(f"p must be a prime below 2**31, got {p!r}")
        self.p = p
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __call__(self, value):
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, -1, self.p)

    @property
    def order(self):
        return self.p

    def elements(self):
        return iter(range(self.p))

    def random(self, rng):
        return rng.randrange(self.p)

    def to_json(self, a):
        return a

    def from_json(self, v):
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.p:
            raise FormatError(f"expected residue in [0,{self.p}), got {v!r}")
        return v

    def spec(self):
        return {"kind": "prime", "p": self.p}


class ExtensionField(Field):
    """F_p[t]/(modulus) with modulus monic irreducible of degree 2..8."""

    kind = "extension"

    def __init__(self, p: int, modulus):
        modulus = [int(c) for c in modulus]
        deg = len(modulus) - 1
        if not isinstance(p, int) or not 2 <= p < MAX_PRIME or not is_prime(p):
            raise ValueError(f"p must be a prime below 2**31, got {p!r}")
        if not 2 <= deg <= MAX_EXTENSION_DEGREE:
            raise ValueError(f"extension degree must be in 2..8, got {deg}")
        if any(not 0 <= c < p for c in modulus) or modulus[-1] != 1:
            raise ValueError("modulus must be monic with coefficients in [0,p)")
        if not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.deg = deg
        self.modulus = tuple(modulus)
        self.zero = (0,) * deg
        self.one = (1,) + (0,) * (deg - 1)
        # t^(deg+i) reduced, for i in 0..deg-2
        self._reductions = []
        for i in range(deg - 1):
            r = poly_mod([0] * (deg + i) + [1], list(modulus), p)
            self._reductions.append(tuple(r + [0] * (deg - len(r))))
        self._inv_cache: dict = {}

    def __repr__(self):
        return f"GF({self.p}^{self.deg}; {list(self.modulus)})"

    def __eq__(self, other):
        return (isinstance(other, ExtensionField) and other.p == self.p
                and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("extension", self.p, self.modulus))

    def __call__(self, value):
        if isinstance(value, int):
            return (value % self.p,) + (0,) * (self.deg - 1)
        value = [int(c) % self.p for c in value]
        if len(value) > self.deg:
            value = poly_mod(value, list(self.modulus), self.p)
        return tuple(value) + (0,) * (self.deg - len(value))

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def mul(self, a, b):
        p, k = self.p, self.deg
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:k]
        for i, c in enumerate(prod[k:]):
            c %= p
            if c:
                for j, r in enumerate(self._reductions[i]):
                    out[j] += c * r
        return tuple(x % p for x in out)

    def inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of 0")
        hit = self._inv_cache.get(a)
        if hit is None:
            e = self.p ** self.deg - 2
            base, acc = a, self.one
            while e:
                if e & 1:
                    acc = self.mul(acc, base)
                base = self.mul(base, base)
                e >>= 1
            hit = acc
            if len(self._inv_cache) < 1 << 16:
                self._inv_cache[a] = hit
        return hit

    @property
    def order(self):
        return self.p ** self.deg

    def elements(self):
        for c in itertools.product(range(self.p), repeat=self.deg):
            yield tuple(reversed(c))

    def random(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.deg))

    def to_json(self, a):
        return list(a)

    def from_json(self, v):
        if (not isinstance(v, list) or len(v) != self.deg
                or any(not isinstance(c, int) or not 0 <= c < self.p for c in v)):
            raise FormatError(f"expected {self.deg} residues mod {self.p}, got {v!r}")
        return tuple(v)

    def spec(self):
        return {"kind": "extension", "p": self.p, "deg": self.deg,
                "modulus": list(self.modulus)}


class RationalField(Field):
    kind = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __call__(self, value):
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def random(self, rng):
        return Fraction(rng.randrange(-2, 3))

    def to_json(self, a):
        return str(a)

    def from_json(self, v):
        if isinstance(v, int) and not isinstance(v, bool):
            return Fraction(v)
        if not isinstance(v, str):
            raise FormatError(f"expected rational string 'a/b', got {v!r}")
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad rational {v!r}") from exc

    def spec(self):
        return {"kind": "rational"}


QQ = RationalField()


def field_from_spec(spec: dict) -> Field:
    """Build a field from its file-format description."""
    if not isinstance(spec, dict) or "kind" not in spec:
        raise FormatError(f"field spec must be an object with 'kind', got {spec!r}")
    kind = spec["kind"]
    try:
        if kind == "prime":
            return PrimeField(spec["p"])
        if kind == "extension":
            field = ExtensionField(spec["p"], spec["modulus"])
            if spec.get("deg", field.deg) != field.deg:
                raise FormatError("field.deg does not match modulus length")
            return field
        if kind == "rational":
            return QQ
    except KeyError as exc:
        raise FormatError(f"field spec missing key {exc}") from exc
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    raise FormatError(f"unknown field kind {kind!r}")


def default_modulus(p: int, deg: int) -> list[int]:
    """Lexicographically first monic irreducible polynomial of degree deg."""
    for tail in itertools.product(range(p), repeat=deg):
        m = list(reversed(tail)) + [1]
        if m[0] != 0 and is_irreducible(m, p):
            return m
    raise ValueError(f"no irreducible polynomial of degree {deg} over GF({p})")


def GF(p: int, deg: int = 1, modulus=None) -> Field:
    """Convenience constructor: GF(5), GF(2, 2), GF(2, modulus=[1, 1, 1])."""
    if modulus is not None:
        return ExtensionField(p, modulus)
    if deg == 1:
        return PrimeField(p)
    return ExtensionField(p, default_modulus(p, deg))
