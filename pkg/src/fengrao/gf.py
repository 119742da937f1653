"""Exact arithmetic in small finite fields GF(p^m).

Elements are plain non-negative integers.  The integer ``x`` stands for the
residue ``sum(c_k * a**k)`` where ``c_k`` are the base-``p`` digits of ``x``
(little endian) and ``a`` is the class of ``T`` modulo the defining
polynomial.  Every arithmetic method accepts Python ints or integer numpy
arrays and broadcasts like numpy does; scalar inputs give Python ints back.

    >>> F = GF(2, 2, [1, 1, 1])
    >>> F.mul(2, 2)
    3
    >>> F.inv(2)
    3
"""

from __future__ import annotations

import numpy as np

from .errors import (
    DivisionByZeroError,
    NonPrimeError,
    OutOfRangeError,
    ReducibleError,
    SizeExceededError,
)

MAX_ORDER = 2 ** 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    k = 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


def _poly_rem(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num / den over GF(p); coefficient lists are ascending, den monic."""
    num = list(num)
    d = len(den) - 1
    for top in range(len(num) - 1, d - 1, -1):
        c = num[top] % p
        if c:
            for k in range(d + 1):
                num[top - d + k] = (num[top - d + k] - c * den[k]) % p
    return [c % p for c in num[:d]]


def _monic_polys(p: int, deg: int):
    """All monic polynomials of the given degree (ascending coefficient lists)."""
    for x in range(p ** deg):
        coeffs = [(x // p ** k) % p for k in range(deg)]
        yield coeffs + [1]


def is_irreducible(poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= m/2."""
    poly = [int(c) % p for c in poly]
    m = len(poly) - 1
    if m < 1 or poly[-1] != 1:
        return False
    if m == 1:
        return True
    for deg in range(1, m // 2 + 1):
        for den in _monic_polys(p, deg):
            if not any(_poly_rem(poly, den, p)):
                return False
    return True


class GF:
    """The field GF(p^m) defined by a monic irreducible polynomial.

    ``poly`` lists the ``m + 1`` coefficients in ascending order
    ``[c0, c1, ..., cm]`` with ``cm = 1``.  It is ignored for ``m == 1``.
    """

    def __init__(self, p: int, m: int = 1, poly=None):
        p, m = int(p), int(m)
        if not is_prime(p):
            raise NonPrimeError(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if p ** m > MAX_ORDER:
            raise SizeExceededError(f"p^m = {p ** m} exceeds {MAX_ORDER}")
        if m == 1:
            poly = None
        else:
            if poly is None:
                raise ValueError("an extension field needs a defining polynomial")
            poly = tuple(int(c) for c in poly)
            if len(poly) != m + 1:
                raise ValueError(f"defining polynomial must have {m + 1} coefficients")
            if any(c < 0 or c >= p for c in poly):
                raise ValueError("polynomial coefficients must lie in [0, p)")
            if poly[-1] != 1:
                raise ValueError("defining polynomial must be monic")
            if not is_irreducible(poly, p):
                raise ReducibleError(f"{list(poly)} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.poly = poly
        self.q = p ** m
        self._pows = np.array([p ** k for k in range(m)], dtype=np.int64)
        self._phi = None
        self._build_tables()

    # -- construction -------------------------------------------------------

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        if m == 1:
            self._inv = np.zeros(q, dtype=np.int64)
            for a in range(1, q):
                self._inv[a] = pow(a, p - 2, p)
            return
        g = self._find_generator()
        # x -> x*g is GF(p)-linear, so split the digits in two halves and
        # tabulate each half; one step of the power walk is then two lookups
        # and one addition.
        half = m // 2
        lo_size = p ** half
        hi_size = p ** (m - half)
        lo_tab = [self._mul_slow(x, g) for x in range(lo_size)]
        hi_tab = [self._mul_slow(x * lo_size, g) for x in range(hi_size)]
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        x = 1
        for k in range(q - 1):
            exp[k] = x
            log[x] = k
            x = self._add_int(lo_tab[x % lo_size], hi_tab[x // lo_size])
        exp[q - 1:] = exp[:q - 1]
        self._exp, self._log = exp, log
        self.generator = g

    def _digits(self, x: int) -> list[int]:
        return [(x // self.p ** k) % self.p for k in range(self.m)]

    def _from_digits(self, digits) -> int:
        return sum(int(c) * self.p ** k for k, c in enumerate(digits))

    def _add_int(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self._from_digits(
            (x + y) % self.p for x, y in zip(self._digits(a), self._digits(b)))

    def _mul_slow(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self._from_digits(_poly_rem(prod, list(self.poly), p))

    def _pow_slow(self, a: int, k: int) -> int:
        result = 1
        while k:
            if k & 1:
                result = self._mul_slow(result, a)
            a = self._mul_slow(a, a)
            k >>= 1
        return result

    def _find_generator(self) -> int:
        order = self.q - 1
        factors = _prime_factors(order)
        for g in range(2, self.q):
            if all(self._pow_slow(g, order // r) != 1 for r in factors):
                return g
        return 1  # q == 2 never reaches here; kept for completeness

    # -- element codec ------------------------------------------------------

    def encode(self, coeffs) -> int:
        """Polynomial coefficients (ascending, length <= m) to canonical integer."""
        coeffs = [int(c) for c in coeffs]
        if len(coeffs) > self.m or any(c < 0 or c >= self.p for c in coeffs):
            raise OutOfRangeError(f"{coeffs} is not an element of GF({self.q})")
        return self._from_digits(coeffs)

    def decode(self, x) -> tuple[int, ...]:
        """Canonical integer to its ``m`` polynomial coefficients (ascending)."""
        x = int(x)
        if not 0 <= x < self.q:
            raise OutOfRangeError(f"{x} is outside [0, {self.q})")
        return tuple(self._digits(x))

    def check(self, a):
        arr = np.asarray(a)
        if arr.size and (arr.min() < 0 or arr.max() >= self.q):
            raise OutOfRangeError(f"values outside [0, {self.q})")
        return a

    def format(self, x, symbol: str = "a") -> str:
        """Human-readable polynomial form, e.g. ``a+1`` for 3 in GF(4)."""
        if self.m == 1:
            return str(int(x))
        terms = []
        for k, c in reversed(list(enumerate(self.decode(x)))):
            if not c:
                continue
            mono = "" if k == 0 else (symbol if k == 1 else f"{symbol}^{k}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) if terms else "0"

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _ret(x, *inputs):
        if all(np.isscalar(v) or np.ndim(v) == 0 for v in inputs):
            return int(x)
        return x

    def _arr(self, a):
        return np.asarray(a, dtype=np.int64)

    def add(self, a, b):
        x, y = self._arr(a), self._arr(b)
        if self.m == 1:
            r = (x + y) % self.p
        elif self.p == 2:
            r = x ^ y
        else:
            r = np.zeros(np.broadcast(x, y).shape, dtype=np.int64)
            for pk in self._pows:
                r += ((x // pk + y // pk) % self.p) * pk
        return self._ret(r, a, b)

    def neg(self, a):
        x = self._arr(a)
        if self.m == 1:
            r = (-x) % self.p
        elif self.p == 2:
            r = x
        else:
            r = np.zeros(x.shape, dtype=np.int64)
            for pk in self._pows:
                r += ((-(x // pk)) % self.p) * pk
        return self._ret(r, a)

    def sub(self, a, b):
        if self.m == 1:
            r = (self._arr(a) - self._arr(b)) % self.p
            return self._ret(r, a, b)
        return self._ret(self.add(a, self.neg(b)), a, b)

    def mul(self, a, b):
        x, y = self._arr(a), self._arr(b)
        if self.m == 1:
            r = (x * y) % self.p
        else:
            r = self._exp[self._log[x] + self._log[y]]
            r = np.where((x == 0) | (y == 0), 0, r)
        return self._ret(r, a, b)

    def inv(self, a):
        x = self._arr(a)
        if np.any(x == 0):
            raise DivisionByZeroError("zero has no inverse")
        if self.m == 1:
            r = self._inv[x]
        else:
            r = self._exp[(self.q - 1 - self._log[x]) % (self.q - 1)]
        return self._ret(r, a)

    def div(self, a, b):
        return self._ret(self.mul(a, self.inv(b)), a, b)

    def pow(self, a, k: int):
        x = self._arr(a)
        k = int(k)
        if k < 0:
            x, k = self._arr(self.inv(x)), -k
        if k == 0:
            return self._ret(np.ones_like(x), a)
        if self.m == 1:
            r = np.array([pow(int(v), k, self.p) for v in x.ravel()],
                         dtype=np.int64).reshape(x.shape)
        else:
            r = self._exp[(self._log[x] * k) % (self.q - 1)]
            r = np.where(x == 0, 0, r)
        return self._ret(r, a)

    def arith(self, op: str, a, b=None):
        """Dispatch by name: add, sub, mul, div, inv, neg."""
        if op in ("inv", "neg"):
            return getattr(self, op)(a)
        if op not in ("add", "sub", "mul", "div"):
            raise ValueError(f"unknown operation {op!r}")
        return getattr(self, op)(a, b)

    # -- vectors and matrices -----------------------------------------------

    def _phi_table(self):
        """phi[a] is the m x m GF(p) matrix of multiplication by a."""
        if self._phi is None:
            elems = np.arange(self.q, dtype=np.int64)
            phi = np.zeros((self.q, self.m, self.m), dtype=np.int64)
            basis = 1
            for k in range(self.m):
                prod = self.mul(elems, basis)
                for d, pd in enumerate(self._pows):
                    phi[:, d, k] = (prod // pd) % self.p
                basis = self.mul(basis, self.p)  # times a
            self._phi = phi
        return self._phi

    def matmul(self, A, B):
        """Exact matrix product over the field (1-D operands allowed)."""
        A, B = self._arr(A), self._arr(B)
        a1, b1 = A.ndim == 1, B.ndim == 1
        if a1:
            A = A[None, :]
        if b1:
            B = B[:, None]
        if A.shape[1] != B.shape[0]:
            raise ValueError(f"shape mismatch {A.shape} @ {B.shape}")
        if A.shape[1] == 0:
            out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        elif self.m == 1:
            # integer partial sums stay below 2**53, so float64 BLAS is exact
            out = np.rint(A.astype(np.float64) @ B.astype(np.float64))
            out = out.astype(np.int64) % self.p
        else:
            n, k = A.shape
            N = B.shape[1]
            m = self.m
            big_a = self._phi_table()[A].transpose(0, 2, 1, 3).reshape(n * m, k * m)
            digits = (B[:, None, :] // self._pows[None, :, None]) % self.p
            big_b = digits.reshape(k * m, N)
            prod = np.rint(big_a.astype(np.float64) @ big_b.astype(np.float64))
            prod = prod.astype(np.int64).reshape(n, m, N) % self.p
            out = np.tensordot(self._pows, prod, axes=([0], [1]))
        if a1 and b1:
            return int(out[0, 0])
        if a1:
            return out[0]
        if b1:
            return out[:, 0]
        return out

    def dot(self, u, v) -> int:
        return self.matmul(np.asarray(u).ravel(), np.asarray(v).ravel())

    def star(self, u, v):
        """Component-wise product of two vectors."""
        return self.mul(u, v)

    def random(self, rng, size=None, nonzero: bool = False):
        lo = 1 if nonzero else 0
        return rng.integers(lo, self.q, size=size, dtype=np.int64)

    def elements(self) -> range:
        return range(self.q)

    # -- identity -----------------------------------------------------------

    def to_json(self) -> dict:
        out = {"p": self.p, "m": self.m}
        if self.poly is not None:
            out["poly"] = list(self.poly)
        return out

    @classmethod
    def from_json(cls, cfg: dict) -> "GF":
        return cls(cfg["p"], cfg.get("m", 1), cfg.get("poly"))

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.m, self.poly) == (other.p, other.m, other.poly)

    def __hash__(self):
        return hash((self.p, self.m, self.poly))

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, poly={list(self.poly)})"


def field_create(p: int, m: int = 1, poly=None) -> GF:
    return GF(p, m, poly)
