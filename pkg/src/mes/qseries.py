"""Exact truncated q-series: multiple divisor functions g-hat, the
generating-function engine (H, exp, h, g_sha), and the shuffle
regularization g_sha_hat.

All series here are normalized: the transcendental prefactor
(-2*pi*i/N)^weight of a divisor sum is stripped into an integer weight
tag, so every coefficient lives in Q(eta) and identities can be tested
exactly.  The prefactor is reinstated only during numeric assembly of
Fourier expansions.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .cyclo import CycloNum, root_power
from .words import IndexWord

__all__ = ["QSeries", "MultiSeries", "NormalizedDivisor", "g_hat", "h_hat", "g_sha_hat"]


class QSeries:
    """Power series in q truncated at order M, ring-agnostic coefficients."""

    __slots__ = ("M", "c")

    def __init__(self, M: int, coeffs=None):
        if M < 0:
            raise ValueError("truncation order must be >= 0")
        cs = list(coeffs) if coeffs is not None else []
        if len(cs) > M + 1:
            cs = cs[: M + 1]
        cs.extend([0] * (M + 1 - len(cs)))
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "c", cs)

    @classmethod
    def zero(cls, M: int) -> "QSeries":
        return cls(M)

    @classmethod
    def one(cls, M: int) -> "QSeries":
        return cls(M, [1])

    @classmethod
    def monomial(cls, M: int, k: int, coeff=1) -> "QSeries":
        s = cls(M)
        if 0 <= k <= M:
            s.c[k] = coeff
        return s

    def __add__(self, other):
        if isinstance(other, QSeries):
            M = min(self.M, other.M)
            return QSeries(M, [self.c[i] + other.c[i] for i in range(M + 1)])
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, QSeries):
            M = min(self.M, other.M)
            return QSeries(M, [self.c[i] - other.c[i] for i in range(M + 1)])
        return NotImplemented

    def __neg__(self):
        return QSeries(self.M, [-a for a in self.c])

    def __mul__(self, other):
        if isinstance(other, QSeries):
            M = min(self.M, other.M)
            out = [0] * (M + 1)
            for i, a in enumerate(self.c[: M + 1]):
                if not a:
                    continue
                for j in range(M + 1 - i):
                    b = other.c[j]
                    if b:
                        out[i + j] = out[i + j] + a * b
            return QSeries(M, out)
        # scalar
        return QSeries(self.M, [a * other if a else 0 for a in self.c])

    def __rmul__(self, other):
        return QSeries(self.M, [other * a if a else 0 for a in self.c])

    def scale(self, s) -> "QSeries":
        return self.__rmul__(s)

    def pow(self, k: int) -> "QSeries":
        out = QSeries.one(self.M)
        for _ in range(k):
            out = out * self
        return out

    def dilate(self, k: int, order: int | None = None) -> "QSeries":
        """Substitute q -> q^k, truncating at `order` (default: same order)."""
        M = self.M if order is None else order
        out = QSeries(M)
        for i, a in enumerate(self.c):
            if a and i * k <= M:
                out.c[i * k] = a
        return out

    def map(self, fn) -> "QSeries":
        return QSeries(self.M, [fn(a) for a in self.c])

    def eval(self, x):
        total = 0
        for a in reversed(self.c):
            total = total * x + a
        return total

    def is_zero(self) -> bool:
        return not any(self.c)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        M = min(self.M, other.M)
        if self.M != other.M:
            return False
        return all(self.c[i] == other.c[i] for i in range(M + 1))

    def __repr__(self):
        parts = [f"({a})q^{i}" for i, a in enumerate(self.c) if a]
        return " + ".join(parts) if parts else "0"


class NormalizedDivisor:
    """A q-series with the (-2*pi*i/N)^weight prefactor carried as a tag."""

    __slots__ = ("level", "weight", "series")

    def __init__(self, level: int, weight: int, series: QSeries):
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "weight", weight)
        object.__setattr__(self, "series", series)

    def __mul__(self, other):
        if not isinstance(other, NormalizedDivisor):
            return NotImplemented
        if other.level != self.level:
            raise ValueError("level mismatch")
        return NormalizedDivisor(
            self.level, self.weight + other.weight, self.series * other.series
        )

    def __eq__(self, other):
        return (
            isinstance(other, NormalizedDivisor)
            and self.level == other.level
            and self.weight == other.weight
            and self.series == other.series
        )

    def __repr__(self):
        return f"NormalizedDivisor(N={self.level}, weight={self.weight}, {self.series!r})"


class MultiSeries:
    """Truncated multivariate polynomial in x_1..x_r with QSeries coefficients.

    Exponent tuples are clipped against per-variable degree bounds; entries
    never store a zero series.
    """

    __slots__ = ("bounds", "M", "terms")

    def __init__(self, bounds: tuple[int, ...], M: int, terms=None):
        object.__setattr__(self, "bounds", tuple(bounds))
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "terms", {})
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, s in items:
                self._add_term(e, s)

    @classmethod
    def zero(cls, bounds, M) -> "MultiSeries":
        return cls(bounds, M)

    @classmethod
    def one(cls, bounds, M) -> "MultiSeries":
        return cls(bounds, M, {tuple(0 for _ in bounds): QSeries.one(M)})

    def _add_term(self, expo, series):
        expo = tuple(expo)
        if any(e > b for e, b in zip(expo, self.bounds)):
            return
        cur = self.terms.get(expo)
        total = series if cur is None else cur + series
        if total.is_zero():
            self.terms.pop(expo, None)
        else:
            self.terms[expo] = total

    def __add__(self, other):
        if not isinstance(other, MultiSeries):
            return NotImplemented
        out = MultiSeries(self.bounds, self.M, self.terms)
        for e, s in other.terms.items():
            out._add_term(e, s)
        return out

    def __mul__(self, other):
        if isinstance(other, MultiSeries):
            out = MultiSeries(self.bounds, self.M)
            for e1, s1 in self.terms.items():
                for e2, s2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    if any(x > b for x, b in zip(e, self.bounds)):
                        continue
                    out._add_term(e, s1 * s2)
            return out
        out = MultiSeries(self.bounds, self.M)
        for e, s in self.terms.items():
            out._add_term(e, s.__rmul__(other))
        return out

    def __rmul__(self, other):
        return self.__mul__(other)

    def coefficient(self, expo) -> QSeries:
        return self.terms.get(tuple(expo), QSeries.zero(self.M))

    def is_zero(self) -> bool:
        return not self.terms


def _letter_series(N: int, n: int, a: int, d: int, M: int) -> QSeries:
    """sum_{c >= 1, c*d <= M} eta^(a c) c^(n-1)/(n-1)! q^(c d)."""
    s = QSeries.zero(M)
    fact = factorial(n - 1)
    for c in range(1, M // d + 1):
        s.c[c * d] = root_power(N, a * c) * Fraction(c ** (n - 1), fact)
    return s


_g_hat_cache: dict = {}


def g_hat(w: IndexWord, M: int) -> NormalizedDivisor:
    """Multiple divisor function of the word, exactly, normalized.

    [q^m] = sum over 0 < d_1 < ... < d_r and c_i > 0 with sum c_i d_i = m
    of prod eta^(a_i c_i) c_i^(n_i - 1)/(n_i - 1)!.
    """
    key = (w.level, w.letters, M)
    hit = _g_hat_cache.get(key)
    if hit is not None:
        return hit
    N = w.level
    r = w.depth
    if r == 0:
        result = NormalizedDivisor(N, 0, QSeries.one(M))
        _g_hat_cache[key] = result
        return result
    # descending dynamic programming over the smallest divisor in the chain
    tails = [QSeries.zero(M) for _ in range(r)] + [QSeries.one(M)]
    for d in range(M, 0, -1):
        new = list(tails)
        for i in range(r):
            n_i, a_i = w.letters[i]
            f = _letter_series(N, n_i, a_i, d, M)
            new[i] = tails[i] + f * tails[i + 1]
        tails = new
    result = NormalizedDivisor(N, w.weight, tails[0])
    _g_hat_cache[key] = result
    return result


def _exp_factor(dz: int, bound: int) -> list[Fraction]:
    """Coefficients of exp(d*z*x) in x up to the degree bound."""
    out = [Fraction(1)]
    for t in range(1, bound + 1):
        out.append(out[-1] * Fraction(dz, t))
    return out


def h_hat(N: int, letters, M: int, bounds) -> MultiSeries:
    """The generating series H of divisor chains with exponential markers.

    letters: tuples (n, a, z) where z is an integer vector over the formal
    variables; each chain element d contributes
    eta^(a d) (q^d/(1-q^d))^n * prod_v exp(d z_v x_v), expanded to the
    per-variable degree bounds and truncated at q^M.
    """
    bounds = tuple(bounds)
    r = len(letters)
    if r == 0:
        return MultiSeries.one(bounds, M)
    tails = [MultiSeries.zero(bounds, M) for _ in range(r)] + [MultiSeries.one(bounds, M)]
    for d in range(M, 0, -1):
        new = list(tails)
        for i in range(r):
            n_i, a_i, z_i = letters[i]
            lf = _h_letter(N, n_i, a_i, z_i, d, M, bounds)
            if lf is None:
                continue
            new[i] = tails[i] + lf * tails[i + 1]
        tails = new
    return tails[0]


def _h_letter(N, n, a, z, d, M, bounds):
    if d * n > M:
        return None
    base = QSeries.zero(M)
    eta_ad = root_power(N, a * d)
    for c in range(n, M // d + 1):
        base.c[c * d] = eta_ad * comb(c - 1, n - 1)
    per_var = [_exp_factor(d * zv, b) for zv, b in zip(z, bounds)]
    ms = MultiSeries(bounds, M)
    for expo in _exponents(bounds):
        coeff = Fraction(1)
        for t, facs in zip(expo, per_var):
            coeff *= facs[t]
        if coeff:
            ms._add_term(expo, base.scale(coeff))
    return ms


def _exponents(bounds):
    if not bounds:
        yield ()
        return
    for head in range(bounds[0] + 1):
        for rest in _exponents(bounds[1:]):
            yield (head,) + rest


def _ordered_compositions(r: int):
    if r == 0:
        yield ()
        return
    for head in range(1, r + 1):
        for rest in _ordered_compositions(r - head):
            yield (head,) + rest


_g_sha_cache: dict = {}


def g_sha_hat(w: IndexWord, M: int) -> NormalizedDivisor:
    """Shuffle-regularized multiple divisor function, exactly, normalized.

    Build the depth-r generating series g_sha in variables x_1..x_r (the
    exp-merged H of the reversed difference arguments), then read off the
    coefficient of x_1^(n_1 - 1) ... x_r^(n_r - 1).
    """
    key = (w.level, w.letters, M)
    hit = _g_sha_cache.get(key)
    if hit is not None:
        return hit
    N = w.level
    r = w.depth
    if r == 0:
        result = NormalizedDivisor(N, 0, QSeries.one(M))
        _g_sha_cache[key] = result
        return result
    ns = [n for n, _ in w.letters]
    as_ = [a for _, a in w.letters]
    bounds = tuple(n - 1 for n in ns)

    # position j of the h-argument (1-based): residue a_{r-j+1} - a_{r-j},
    # variable combination e_{r-j+1} - e_{r-j}, with a_0 = 0, e_0 = 0
    def a_of(i):
        return as_[i - 1] if i >= 1 else 0

    def e_of(i):
        return tuple(1 if v == i - 1 else 0 for v in range(r)) if i >= 1 else (0,) * r

    args = []
    for j in range(1, r + 1):
        hi, lo = r - j + 1, r - j
        b = (a_of(hi) - a_of(lo)) % N
        z = tuple(x - y for x, y in zip(e_of(hi), e_of(lo)))
        args.append((b, z))

    total = MultiSeries.zero(bounds, M)
    for compo in _ordered_compositions(r):
        scale = Fraction(1)
        for part in compo:
            scale /= factorial(part)
        letters = []
        pos = 0
        for part in compo:
            block = args[pos : pos + part]
            pos += part
            b = sum(x for x, _ in block) % N
            z = tuple(sum(col) for col in zip(*(zz for _, zz in block)))
            letters.append((part, b, z))
        ms = h_hat(N, tuple(letters), M, bounds)
        total = total + ms * scale
    result = NormalizedDivisor(N, sum(ns), total.coefficient(bounds))
    _g_sha_cache[key] = result
    return result
