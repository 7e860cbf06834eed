"""Small finite fields GF(p^k) with deterministic construction.

Elements are coefficient tuples (a0, ..., a_{k-1}) for a0 + a1 t + ...
modulo a fixed monic irreducible polynomial, chosen as the first
irreducible in lexicographic order of its lower coefficients.  All
arithmetic is exact; iteration order over the field is deterministic,
so searches (e.g. for a root of a defining polynomial) are reproducible.
"""

from __future__ import annotations

from itertools import product


def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a, b, mod, p):
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    res[i + j] = (res[i + j] + ai * bj) % p
    return _poly_modpoly(res, mod, p)


def _poly_modpoly(a, mod, p):
    a = list(a)
    dm = len(mod) - 1
    while len(a) > dm:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            inv = pow(mod[-1], -1, p)
            factor = lead * inv % p
            for i in range(dm + 1):
                a[shift + i] = (a[shift + i] - factor * mod[i]) % p
        a.pop()
    return _poly_trim(a)


def _poly_powmod(a, e, mod, p):
    result = [1]
    base = _poly_modpoly(list(a), mod, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a = _poly_modpoly(a, b, p)
        a, b = b, a
    return a


def _prime_factors(n):
    fs = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            fs.add(d)
            n //= d
        d += 1
    if n > 1:
        fs.add(n)
    return fs


def _is_irreducible(f, p):
    k = len(f) - 1
    x = [0, 1]
    if _poly_powmod(x, p**k, f, p) != _poly_modpoly(x, f, p):
        return False
    for r in _prime_factors(k):
        h = _poly_powmod(x, p ** (k // r), f, p)
        diff = list(h) + [0] * (2 - len(h))
        diff[1] = (diff[1] - 1) % p
        if len(_poly_gcd(f, diff, p)) != 1:
            return False
    return True


def _find_irreducible(p, k):
    if k == 1:
        return [0, 1]
    for lower in product(range(p), repeat=k):
        f = list(lower) + [1]
        if f[0] == 0:
            continue
        if _is_irreducible(f, p):
            return f
    raise RuntimeError("no irreducible polynomial found")  # unreachable


class GF:
    """The field with p^k elements."""

    def __init__(self, p, k):
        if k < 1:
            raise ValueError("k must be >= 1")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = _find_irreducible(p, k)
        self.zero = (0,) * k
        self.one = tuple([1] + [0] * (k - 1))

    def elem(self, coeffs):
        c = list(coeffs)[: self.k]
        c += [0] * (self.k - len(c))
        return tuple(v % self.p for v in c)

    def from_int(self, n):
        return self.elem([n % self.p])

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x % self.p for x in a)

    def mul(self, a, b):
        res = _poly_mulmod(list(a), list(b), self.modulus, self.p)
        return self.elem(res)

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.q - 2)

    def elements(self):
        """All field elements, in a fixed deterministic order."""
        for coeffs in product(range(self.p), repeat=self.k):
            yield coeffs

    def find_root(self, poly):
        """First root (in element order) of a polynomial with prime-field
        coefficients, or None."""
        coeffs = [self.from_int(c) for c in poly]
        for x in self.elements():
            acc = self.zero
            for c in reversed(coeffs):
                acc = self.add(self.mul(acc, x), c)
            if acc == self.zero:
                return x
        return None
