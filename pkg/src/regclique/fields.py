"""Exact arithmetic in GF(p^a): field construction, primitive elements, discrete logs.

Elements are canonical integer codes in {0, ..., q-1}: the code of an element
with coefficient vector (c_0, ..., c_{a-1}) over Z_p is sum(c_i * p**i), so the
prime-field case (a = 1) is plain residue arithmetic. All choices made during
construction (modulus, primitive element) are deterministic so that repeated
runs produce identical fields.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ExponentZero, IndexOutOfRange, NotPrime, ZeroHasNoLog


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check (scope: n < 10**12)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over Z_p, little-endian coefficient tuples


def _poly_mul_mod(u, v, modulus, p):
    """(u * v) mod modulus, with monic modulus of degree a; result length a."""
    a = len(modulus) - 1
    prod = [0] * (len(u) + len(v) - 1)
    for i, ui in enumerate(u):
        if ui:
            for j, vj in enumerate(v):
                prod[i + j] = (prod[i + j] + ui * vj) % p
    for i in range(len(prod) - 1, a - 1, -1):
        c = prod[i]
        if c:
            for j in range(a + 1):
                prod[i - a + j] = (prod[i - a + j] - c * modulus[j]) % p
    return tuple(prod[:a])


def _poly_divides(g, f, p):
    """Whether monic g divides monic f over Z_p (remainder is zero)."""
    r = list(f)
    dg = len(g) - 1
    while len(r) >= len(g):
        c = r[-1]
        if c:
            shift = len(r) - len(g)
            for j in range(len(g)):
                r[shift + j] = (r[shift + j] - c * g[j]) % p
        r.pop()
    return not any(r)


def _is_irreducible(f, p):
    """Exhaustive trial division by all monic polynomials of degree <= deg(f)/2."""
    a = len(f) - 1
    if f[0] == 0:  # divisible by x
        return a == 1
    for d in range(1, a // 2 + 1):
        for code in range(p**d):
            g, c = [], code
            for _ in range(d):
                g.append(c % p)
                c //= p
            g.append(1)
            if _poly_divides(g, f, p):
                return False
    return True


def _find_modulus(p, a):
    """Smallest monic irreducible of degree a, by ascending code of (c_0..c_{a-1})."""
    for code in range(p**a):
        coeffs, c = [], code
        for _ in range(a):
            coeffs.append(c % p)
            c //= p
        f = tuple(coeffs) + (1,)
        if _is_irreducible(f, p):
            return f
    raise AssertionError(f"no irreducible polynomial of degree {a} over GF({p})")


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Field:
    """GF(p^a) with a fixed reduction modulus (None for the prime-field case)."""

    p: int
    a: int
    q: int
    modulus: tuple | None

    def coeffs(self, x: int) -> tuple:
        out = []
        for _ in range(self.a):
            out.append(x % self.p)
            x //= self.p
        return tuple(out)

    def code(self, coeffs) -> int:
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + c % self.p
        return v

    def check_element(self, x: int) -> None:
        if not 0 <= x < self.q:
            raise IndexOutOfRange(f"{x} is not an element code of GF({self.q})")

    def add(self, x: int, y: int) -> int:
        if self.a == 1:
            return (x + y) % self.p
        return self.code([u + v for u, v in zip(self.coeffs(x), self.coeffs(y))])

    def neg(self, x: int) -> int:
        if self.a == 1:
            return -x % self.p
        return self.code([-u for u in self.coeffs(x)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self.a == 1:
            return x * y % self.p
        return self.code(_poly_mul_mod(self.coeffs(x), self.coeffs(y), self.modulus, self.p))

    def pow(self, x: int, k: int) -> int:
        if self.a == 1:
            return pow(x, k, self.p)
        r, b = 1, x
        while k:
            if k & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            k >>= 1
        return r

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(x, self.q - 2)

    def add_array(self, codes: np.ndarray, s: int) -> np.ndarray:
        """Vectorized addition of a single element s to an array of codes."""
        if self.a == 1:
            return (codes + s) % self.p
        out = np.zeros_like(codes)
        pi = 1
        for _ in range(self.a):
            out += (codes // pi % self.p + s // pi % self.p) % self.p * pi
            pi *= self.p
        return out


def build_field(p: int, a: int) -> Field:
    """Validated GF(p^a); for a > 1 the reduction modulus is found deterministically."""
    if a < 1:
        raise ExponentZero(f"exponent must be positive, got {a}")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    modulus = None if a == 1 else _find_modulus(p, a)
    return Field(p=p, a=a, q=p**a, modulus=modulus)


@dataclass(frozen=True)
class PrimitiveData:
    """A primitive element rho with full discrete-log tables.

    exp[j] = rho**j for j in {0, ..., q-2}; log[x] = dlog of the element with
    code x, with log[0] = -1 as a sentinel (zero has no logarithm).
    """

    rho: int
    exp: np.ndarray
    log: np.ndarray


def _factorize(n: int) -> dict:
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _has_full_order(field: Field, x: int, prime_factors) -> bool:
    return all(field.pow(x, (field.q - 1) // f) != 1 for f in prime_factors)


def _tables_for(field: Field, rho: int) -> PrimitiveData:
    q = field.q
    exp = np.empty(q - 1, dtype=np.int64)
    x = 1
    for j in range(q - 1):
        exp[j] = x
        x = field.mul(x, rho)
    log = np.full(q, -1, dtype=np.int64)
    log[exp] = np.arange(q - 1)
    return PrimitiveData(rho=rho, exp=exp, log=log)


def find_primitive_element(field: Field) -> PrimitiveData:
    """First element of multiplicative order q-1 in ascending code order (2, 3, ...)."""
    if field.q == 2:
        return _tables_for(field, 1)
    factors = list(_factorize(field.q - 1))
    for cand in range(2, field.q):
        if _has_full_order(field, cand, factors):
            return _tables_for(field, cand)
    raise AssertionError(f"no primitive element found in GF({field.q})")


def primitive_data(field: Field, rho: int) -> PrimitiveData:
    """Tables for a caller-chosen primitive element (order is verified)."""
    field.check_element(rho)
    if field.q > 2:
        factors = list(_factorize(field.q - 1))
        if rho in (0, 1) or not _has_full_order(field, rho, factors):
            raise ValueError(f"{rho} is not a primitive element of GF({field.q})")
    elif rho != 1:
        raise ValueError("the only primitive element of GF(2) is 1")
    return _tables_for(field, rho)


def all_primitive_elements(field: Field):
    """Codes of every primitive element, ascending."""
    if field.q == 2:
        return [1]
    factors = list(_factorize(field.q - 1))
    return [x for x in range(2, field.q) if _has_full_order(field, x, factors)]


def dlog(pd: PrimitiveData, x: int) -> int:
    """Exponent j with rho**j = x; zero has no logarithm."""
    if x == 0:
        raise ZeroHasNoLog("dlog(0) is undefined")
    if not 0 < x < len(pd.log):
        raise IndexOutOfRange(f"{x} is not a nonzero element code")
    return int(pd.log[x])
