"""Exact arithmetic in the cyclotomic field Q(eta), eta = exp(2*pi*i/N).

Elements live in the power basis 1, eta, ..., eta^(phi(N)-1) of
Q[X]/(Phi_N(X)) and are kept fully reduced, so equality and zero tests
are plain coordinate comparisons.  All values are immutable; the module
level caches are append-only dicts guarded by the GIL, safe for
concurrent readers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import mpmath as mp

__all__ = ["cyclotomic_polynomial", "phi_degree", "root_power", "CycloNum"]


def _poly_mul_int(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return tuple(out)


def _poly_div_exact_int(num, den):
    # ascending coefficients, exact integer division (remainder must vanish)
    rem = list(num)
    dn = len(den) - 1
    lead = den[-1]
    qdeg = len(rem) - 1 - dn
    quot = [0] * (qdeg + 1)
    for k in range(qdeg, -1, -1):
        c = rem[k + dn]
        if c % lead:
            raise ArithmeticError("polynomial division not exact")
        q = c // lead
        quot[k] = q
        if q:
            for j, b in enumerate(den):
                rem[k + j] -= q * b
    if any(rem):
        raise ArithmeticError("polynomial division not exact")
    return tuple(quot)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N: int) -> tuple[int, ...]:
    """Coefficients of Phi_N (ascending degree), via the divisor recursion
    Phi_N = (X^N - 1) / prod_{d | N, d < N} Phi_d."""
    if N < 1:
        raise ValueError("N must be a positive integer")
    if N == 1:
        return (-1, 1)
    num = (-1,) + (0,) * (N - 1) + (1,)
    den = (1,)
    for d in range(1, N):
        if N % d == 0:
            den = _poly_mul_int(den, cyclotomic_polynomial(d))
    return _poly_div_exact_int(num, den)


def phi_degree(N: int) -> int:
    """Euler phi(N) = degree of Phi_N."""
    return len(cyclotomic_polynomial(N)) - 1


@lru_cache(maxsize=None)
def _reduction_row(N: int, k: int) -> tuple[Fraction, ...]:
    """Representation of X^k modulo Phi_N in the power basis, k >= phi."""
    phi = phi_degree(N)
    poly = cyclotomic_polynomial(N)
    if k == phi:
        return tuple(Fraction(-c) for c in poly[:-1])
    prev = _reduction_row(N, k - 1)
    # multiply by X and fold the overflow back in
    out = [Fraction(0)] + list(prev[:-1])
    carry = prev[-1]
    if carry:
        top = _reduction_row(N, phi)
        for i in range(phi):
            out[i] += carry * top[i]
    return tuple(out)


def _reduce(N: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    phi = phi_degree(N)
    out = list(coeffs[:phi]) + [Fraction(0)] * (phi - len(coeffs))
    for k in range(phi, len(coeffs)):
        c = coeffs[k]
        if c:
            row = _reduction_row(N, k)
            for i in range(phi):
                out[i] += c * row[i]
    return tuple(out)


class CycloNum:
    """An element of Q(eta_N), canonically reduced mod Phi_N."""

    __slots__ = ("N", "coeffs")

    def __init__(self, N: int, coeffs):
        phi = phi_degree(N)
        cs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coeffs)
        if len(cs) != phi:
            raise ValueError(f"need {phi} coordinates for level {N}, got {len(cs)}")
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("CycloNum is immutable")

    @classmethod
    def _make(cls, N, coeffs):
        obj = object.__new__(cls)
        object.__setattr__(obj, "N", N)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    @classmethod
    def zero(cls, N: int) -> "CycloNum":
        return cls._make(N, (Fraction(0),) * phi_degree(N))

    @classmethod
    def one(cls, N: int) -> "CycloNum":
        return cls.from_rational(N, 1)

    @classmethod
    def from_rational(cls, N: int, value) -> "CycloNum":
        q = value if isinstance(value, Fraction) else Fraction(value)
        rest = (Fraction(0),) * (phi_degree(N) - 1)
        return cls._make(N, (q,) + rest)

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycloNum):
            if other.N != self.N:
                raise ValueError(f"level mismatch: {self.N} vs {other.N}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.from_rational(self.N, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum._make(self.N, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum._make(self.N, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CycloNum._make(self.N, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return CycloNum.zero(self.N)
            q = Fraction(other)
            return CycloNum._make(self.N, tuple(a * q for a in self.coeffs))
        if not isinstance(other, CycloNum):
            return NotImplemented
        if other.N != self.N:
            raise ValueError(f"level mismatch: {self.N} vs {other.N}")
        a, b = self.coeffs, other.coeffs
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CycloNum._make(self.N, _reduce(self.N, prod))

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(eta)")
        # extended Euclid against Phi_N in Q[X]; Phi_N is irreducible so the
        # gcd is a nonzero constant
        phi_poly = [Fraction(c) for c in cyclotomic_polynomial(self.N)]
        r0, r1 = phi_poly, list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while _deg(r1) > 0:
            q, r = _fdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _fsub(s0, _fmul(q, s1))
        c = r1[0]
        if not c:
            raise ZeroDivisionError("inverse of zero in Q(eta)")
        inv = [x / c for x in s1]
        return CycloNum._make(self.N, _reduce(self.N, inv))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloNum.one(self.N)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparisons / hashing ----------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycloNum):
            return self.N == other.N and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.N, self.coeffs))

    # -- output -------------------------------------------------------

    def to_complex(self, precision: int = 64):
        """Numeric value at exp(2*pi*i/N), error below 2^(-precision+4)."""
        pows = _eta_powers(self.N, precision)
        with mp.workprec(precision + 16):
            total = mp.mpc(0)
            for c, p in zip(self.coeffs, pows):
                if c:
                    total += mp.mpf(c.numerator) / c.denominator * p
            return +total

    def __repr__(self):
        return f"CycloNum({self.N}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            unit = "1" if k == 0 else ("eta" if k == 1 else f"eta^{k}")
            parts.append(f"{c}*{unit}" if k else f"{c}")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj) -> "CycloNum":
        coeffs = [Fraction(int(n), int(d)) for n, d in obj["coeffs"]]
        return cls(int(obj["N"]), coeffs)


def _deg(f):
    for i in range(len(f) - 1, -1, -1):
        if f[i]:
            return i
    return -1


def _fdivmod(f, g):
    dg = _deg(g)
    lead = g[dg]
    rem = list(f)
    q = [Fraction(0)] * max(len(f) - dg, 1)
    for k in range(_deg(rem) - dg, -1, -1):
        c = rem[k + dg] / lead
        if c:
            q[k] = c
            for j in range(dg + 1):
                rem[k + j] -= c * g[j]
    return q, rem[: dg + 1] if dg else [rem[0]]


def _fmul(f, g):
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def _fsub(f, g):
    n = max(len(f), len(g))
    f = list(f) + [Fraction(0)] * (n - len(f))
    g = list(g) + [Fraction(0)] * (n - len(g))
    return [a - b for a, b in zip(f, g)]


@lru_cache(maxsize=None)
def _root_reprs(N: int) -> tuple[tuple[Fraction, ...], ...]:
    phi = phi_degree(N)
    reprs = []
    cur = [Fraction(0)] * phi
    cur[0] = Fraction(1)
    for _ in range(N):
        reprs.append(tuple(cur))
        cur = list(_reduce(N, [Fraction(0)] + cur))
    return tuple(reprs)


def root_power(N: int, a: int) -> CycloNum:
    """Canonical representation of eta^a, eta = exp(2*pi*i/N)."""
    return CycloNum._make(N, _root_reprs(N)[a % N])


@lru_cache(maxsize=None)
def _eta_powers(N: int, precision: int):
    with mp.workprec(precision + 16):
        eta = mp.expjpi(mp.mpf(2) / N)
        pows = [mp.mpc(1)]
        for _ in range(phi_degree(N) - 1):
            pows.append(pows[-1] * eta)
        return tuple(pows)
