"""Fourier expansions of multiple Eisenstein series of level N.

A multiple Eisenstein series is assembled from exact data: the level-N
coproduct splits a word into left and right tensor factors, the left factor is
evaluated as a (regularized) zeta value, and the right factor contributes an
exact multiple divisor q-series scaled by (-2*pi*i/N)^weight.  The constant
term is always the zeta value of the word itself.

An independent truncated-lattice oracle evaluates depth <= 2 series straight
from the double limit over lattice points, for cross-checking only.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp

from .hopf import coproduct_mu
from .numerics import DEFAULT_CTX, PrecisionCtx, zeta_numeric, zeta_tsha
from .qseries import g_hat, g_sha_hat
from .words import IndexWord

__all__ = [
    "FourierExpansion",
    "G_fourier",
    "G_sha_fourier",
    "G_lattice_oracle",
    "fourier_eval",
]


@dataclass(frozen=True)
class FourierExpansion:
    """Truncated Fourier expansion sum_{m=0}^{M} c_m q^m of an Eisenstein series.

    provenance is "plain" for the admissible assembly and "regularized" for
    the shuffle-regularized one.  error_bound is a crude per-coefficient bound
    reflecting the precision of the embedded zeta values.
    """

    word: IndexWord
    level: int
    M: int
    coeffs: tuple
    provenance: str
    error_bound: object

    def __getitem__(self, m: int):
        return self.coeffs[m]

    def to_json(self) -> dict:
        return {
            "word": self.word.to_json(),
            "N": self.level,
            "M": self.M,
            "provenance": self.provenance,
            "error_bound": mp.nstr(self.error_bound, 3),
            "coefficients": [
                [mp.nstr(c.real, 20), mp.nstr(c.imag, 20)] for c in self.coeffs
            ],
        }


_prefactor_cache: dict = {}


def _prefactor(N: int, k: int, prec: int):
    key = (N, k, prec)
    val = _prefactor_cache.get(key)
    if val is None:
        with mp.workprec(prec):
            val = (-2 * mp.pi * mp.mpc(0, 1) / N) ** k
        _prefactor_cache[key] = val
    return val


def _assemble(w: IndexWord, M: int, ctx: PrecisionCtx, left_eval, right_series, provenance: str):
    N = w.level
    prec = ctx.precision + 16
    with mp.workprec(prec):
        coeffs = [mp.mpc(0)] * (M + 1)
        for (left, right), coeff in coproduct_mu(w).sorted_items():
            scalar = coeff.to_complex(prec) * left_eval(left)
            if right.is_unit():
                coeffs[0] += scalar
                continue
            scalar *= _prefactor(N, right.weight, prec)
            series = right_series(right, M).series
            for m in range(M + 1):
                c = series.c[m]
                if c:
                    coeffs[m] += scalar * c.to_complex(prec)
        scale = max([mp.mpf(1)] + [abs(c) for c in coeffs])
        bound = scale * mp.mpf(2) ** (-(ctx.precision - 24))
    return FourierExpansion(w, N, M, tuple(coeffs), provenance, bound)


_g_cache: dict = {}


def G_fourier(w: IndexWord, M: int, ctx: PrecisionCtx = DEFAULT_CTX) -> FourierExpansion:
    """Fourier expansion of the multiple Eisenstein series of an admissible word.

    Requires all n_i >= 2.  Coefficient 0 is the zeta value of w; coefficient
    m collects zeta(left) * (-2*pi*i/N)^wt(right) * ghat(right)[q^m] over the
    coproduct terms.
    """
    if not w.mes_admissible():
        raise ValueError(f"word {w} needs all exponents >= 2")
    key = (w, M, ctx)
    fe = _g_cache.get(key)
    if fe is None:
        fe = _assemble(w, M, ctx, lambda u: zeta_numeric(u, ctx), g_hat, "plain")
        _g_cache[key] = fe
    return fe


_gsha_cache: dict = {}


def G_sha_fourier(w: IndexWord, M: int, ctx: PrecisionCtx = DEFAULT_CTX) -> FourierExpansion:
    """Shuffle-regularized Fourier expansion, defined for every index word.

    Same assembly as G_fourier with the regularized zeta on the left and the
    regularized divisor series on the right; agrees with G_fourier on words
    with all n_i >= 2.
    """
    key = (w, M, ctx)
    fe = _gsha_cache.get(key)
    if fe is None:
        fe = _assemble(w, M, ctx, lambda u: zeta_tsha(u, ctx), g_sha_hat, "regularized")
        _gsha_cache[key] = fe
    return fe


def fourier_eval(fe: FourierExpansion, tau, ctx: PrecisionCtx = DEFAULT_CTX):
    """Evaluate a truncated expansion at q = exp(2*pi*i*tau) by Horner."""
    with mp.workprec(ctx.precision + 16):
        q = mp.expjpi(2 * mp.mpc(tau))
        acc = mp.mpc(0)
        for c in reversed(fe.coeffs):
            acc = acc * q + c
        return acc


def G_lattice_oracle(w: IndexWord, tau, L_max: int = 15, M_max: int = 3000):
    """Truncated double sum over ordered lattice points l*N*tau + m, m = a mod N.

    Supports depth <= 2 with all n_i >= 3 (absolute convergence keeps the
    truncation error near 1/M_max).  The inner m-window is exhausted before
    the l-window, matching the iterated limit in the definition.
    """
    if w.depth > 2:
        raise ValueError("lattice oracle supports depth <= 2 only")
    if any(n < 3 for n, _ in w.letters):
        raise ValueError("lattice oracle needs all exponents >= 3")
    N = w.level
    with mp.workprec(128):
        taum = mp.mpc(tau)
        if w.is_unit():
            return mp.mpc(1)
        if w.depth == 1:
            n, a = w.letters[0]
            total = _sum_row0(N, n, a, M_max)
            for l in range(1, L_max + 1):
                total += _sum_row(N, n, a, l, taum, M_max)
            return total
        (n1, a1), (n2, a2) = w.letters
        # heights (0,0): 0 < m1 < m2
        total = _sum_row0_pair(N, n1, a1, n2, a2, M_max)
        # heights (0,l2), l2 > 0: factors are independent
        row2 = mp.mpc(0)
        for l in range(1, L_max + 1):
            row2 += _sum_row(N, n2, a2, l, taum, M_max)
        total += _sum_row0(N, n1, a1, M_max) * row2
        # heights (l,l), l > 0: m1 < m2 inside one row
        for l in range(1, L_max + 1):
            total += _sum_row_pair(N, n1, a1, n2, a2, l, taum, M_max)
        # heights (l1,l2), 0 < l1 < l2: independent rows
        acc = mp.mpc(0)
        for l in range(1, L_max + 1):
            s2 = _sum_row(N, n2, a2, l, taum, M_max)
            if l > 1:
                total += s2 * acc
            acc += _sum_row(N, n1, a1, l, taum, M_max)
        return total


def _sum_row0(N: int, n: int, a: int, M: int):
    start = a % N if a % N else N
    total = mp.mpf(0)
    for m in range(start, M + 1, N):
        total += mp.mpf(m) ** (-n)
    return total


def _sum_row0_pair(N: int, n1: int, a1: int, n2: int, a2: int, M: int):
    total = mp.mpf(0)
    acc = mp.mpf(0)
    for m in range(1, M + 1):
        if m % N == a2 % N:
            total += mp.mpf(m) ** (-n2) * acc
        if m % N == a1 % N:
            acc += mp.mpf(m) ** (-n1)
    return total


def _sum_row(N: int, n: int, a: int, l: int, tau, M: int):
    base = l * N * tau
    total = mp.mpc(0)
    first = -M + ((a - (-M)) % N)
    for m in range(first, M + 1, N):
        total += (base + m) ** (-n)
    return total


def _sum_row_pair(N: int, n1: int, a1: int, n2: int, a2: int, l: int, tau, M: int):
    base = l * N * tau
    total = mp.mpc(0)
    acc = mp.mpc(0)
    for m in range(-M, M + 1):
        if m % N == a2 % N:
            total += (base + m) ** (-n2) * acc
        if m % N == a1 % N:
            acc += (base + m) ** (-n1)
    return total
