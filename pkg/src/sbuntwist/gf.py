"""Exact arithmetic in small prime-power fields F_{p^m}, char p not 2 or 3.

Elements are coefficient tuples of length m (ascending powers) reduced
modulo a canonical irreducible: the lexicographically least monic
irreducible of degree m over F_p, comparing coefficient vectors from the
top degree down.  Canonical moduli make field towers reproducible across
runs and machines.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Sequence, Union

Element = tuple[int, ...]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


# --- dense polynomial helpers over F_p (ascending coefficients) ---


def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)

def _pmod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    # f monic
    r = list(a)
    df = len(f) - 1
    while len(r) - 1 >= df and r:
        lead = r[-1]
        shift = len(r) - 1 - df
        if lead:
            for i, fi in enumerate(f):
                r[shift + i] = (r[shift + i] - lead * fi) % p
        r.pop()
    return _ptrim(r)


def _ppowmod(base: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    acc = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, acc, p), f, p)
        acc = _pmod(_pmul(acc, acc, p), f, p)
        e >>= 1
    return result


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    x, y = _ptrim(list(a)), _ptrim(list(b))
    while y:
        if y[-1] != 1:  # make monic so _pmod applies
            inv = pow(y[-1], p - 2, p)
            y = [(c * inv) % p for c in y]
        x, y = y, _pmod(x, y, p)
    return x


def _prime_factors(n: int) -> list[int]:
    out, k = [], 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial of degree >= 1 over F_p."""
    m = len(f) - 1
    if m == 1:
        return True
    x = [0, 1]
    if _ptrim(list(_ppowmod(x, p**m, f, p))) != x:
        return False
    for r in _prime_factors(m):
        h = _ppowmod(x, p ** (m // r), f, p)
        # gcd(x^(p^(m/r)) - x, f) must be constant
        h = _ptrim([(c - (1 if i == 1 else 0)) % p for i, c in enumerate(h + [0, 0])])
        g = _pgcd(h, f, p)
        if len(g) != 1:
            return False
    return True


def _least_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree m, ordering coefficient vectors
    (a_{m-1}, ..., a_0) lexicographically."""
    for k in range(p**m):
        coeffs = [0] * m
        kk = k
        for i in range(m):  # a_0 varies fastest
            coeffs[i] = kk % p
            kk //= p
        f = coeffs + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible of degree {m} over F_{p}")


class FiniteField:
    """F_{p^m} with elements as coefficient tuples of length m."""

    __slots__ = ("p", "m", "modulus", "zero", "one", "_xpow")

    def __init__(self, p: int, m: int):
        if not _is_prime(p) or p in (2, 3):
            raise ValueError(f"characteristic must be a prime other than 2 and 3, got {p}")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        self.p = p
        self.m = m
        self.modulus = _least_irreducible(p, m)
        self.zero: Element = (0,) * m
        self.one: Element = (1,) + (0,) * (m - 1)
        # reductions of x^k for k = m .. 2m-2, used by mul
        xpow = []
        cur = _pmod([0] * m + [1], self.modulus, p)
        for _ in range(m, 2 * m - 1):
            xpow.append(tuple(cur + [0] * (m - len(cur))))
            cur = _pmod([0] + cur, self.modulus, p)
        self._xpow = tuple(xpow)

    @property
    def order(self) -> int:
        return self.p**self.m

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.m == other.m
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m))

    def __repr__(self) -> str:
        return f"FiniteField({self.p}, {self.m})"

    def element(self, value: Union[int, Sequence[int]]) -> Element:
        if isinstance(value, int):
            return (value % self.p,) + (0,) * (self.m - 1)
        coeffs = [c % self.p for c in value]
        if len(coeffs) > self.m:
            raise ValueError(f"too many coefficients for degree {self.m}")
        return tuple(coeffs + [0] * (self.m - len(coeffs)))

    def add(self, a: Element, b: Element) -> Element:
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(self, a: Element) -> Element:
        p = self.p
        return tuple((-x) % p for x in a)

    def sub(self, a: Element, b: Element) -> Element:
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def mul(self, a: Element, b: Element) -> Element:
        p, m = self.p, self.m
        conv = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] = (conv[i + j] + ai * bj) % p
        out = list(conv[:m])
        for k in range(m, 2 * m - 1):
            c = conv[k]
            if c:
                red = self._xpow[k - m]
                for i in range(m):
                    if red[i]:
                        out[i] = (out[i] + c * red[i]) % p
        return tuple(out)

    def pow(self, a: Element, e: int) -> Element:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        acc = a
        while e:
            if e & 1:
                result = self.mul(result, acc)
            acc = self.mul(acc, acc)
            e >>= 1
        return result

    def inv(self, a: Element) -> Element:
        if a == self.zero:
            raise ZeroDivisionError("inversion of 0")
        return self.pow(a, self.order - 2)

    def frobenius(self, a: Element) -> Element:
        """x -> x^p, the canonical generator of the Galois group."""
        return self.pow(a, self.p)

    def random_element(self, rng: random.Random) -> Element:
        p = self.p
        return tuple(rng.randrange(p) for _ in range(self.m))


@lru_cache(maxsize=None)
def field(p: int, m: int) -> FiniteField:
    """Interned field instances; equal parameters share one object."""
    return FiniteField(p, m)
