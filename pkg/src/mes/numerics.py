"""High-precision evaluation of level-N multiple zeta values, twisted multiple
L-values, their shuffle-regularized combinations, and tangent sums.

All evaluators work at the bit precision carried by a PrecisionCtx and return
mpmath numbers.  The two nested-sum engines share one mechanism: the partial
sum of a nested series, viewed as a function of its cutoff k along a fixed
arithmetic progression, satisfies a first-order difference equation whose
solution has an asymptotic expansion on the scale

    eta^(e*k) * k^(-s) * log(k)^d      (eta = exp(2*pi*i/N)).

Solving the difference equation order by order on that scale and matching the
free constant against an exact prefix of the series at a moderate cutoff K
pins the constant term, which is the limit of the sum.  With tail order J the
matching error is O(K^(-J-1)); the defaults push it far below every tolerance
used by the relation checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import mp

from .cyclo import CycloNum
from .words import (
    IndexWord,
    LetterWord,
    LinComb,
    as_lincomb,
    index_to_letters,
    letters_to_index,
    pi,
    rho,
)
from .products import shuffle_reg0

__all__ = [
    "PrecisionCtx",
    "DEFAULT_CTX",
    "zeta_numeric",
    "mlv_sha_numeric",
    "mlv_ast_numeric",
    "zeta_tsha",
    "psi_mono_numeric",
    "psi_multi_numeric",
    "psi_multi_reduction",
    "comb_value",
]

_GUARD = 48


@dataclass(frozen=True)
class PrecisionCtx:
    """Numeric evaluation parameters.

    precision: working precision in bits (>= 64).
    series_cutoff: largest summation index K available to the exact prefix
        (>= 10^3).  The engine rarely needs more than ~2000 terms because the
        asymptotic tail supplies the remaining accuracy.
    tail_order: depth of the tail expansion (summation-by-parts depth).  0
        selects an automatic value large enough for the requested precision.
    """

    precision: int = 192
    series_cutoff: int = 100_000
    tail_order: int = 0

    def __post_init__(self) -> None:
        if self.precision < 64:
            raise ValueError("precision must be at least 64 bits")
        if self.series_cutoff < 1000:
            raise ValueError("series_cutoff must be at least 10^3")
        if self.tail_order < 0:
            raise ValueError("tail_order must be nonnegative")

    @property
    def prefix_cutoff(self) -> int:
        # More prefix terms than this buy nothing once the tail kicks in.
        return min(self.series_cutoff, 2048)

    @property
    def effective_tail_order(self) -> int:
        if self.tail_order:
            return self.tail_order
        # error ~ K^-(J+1); demand K^-(J+1) < 2^-(precision + 16)
        k0 = self.prefix_cutoff
        return math.ceil((self.precision + 16) * math.log(2) / math.log(k0)) + 2


DEFAULT_CTX = PrecisionCtx()


# ---------------------------------------------------------------------------
# shared machinery: exact shift expansions and the difference-equation solver


def _series_mul(a: tuple, b: tuple, cap: int) -> tuple:
    out = [Fraction(0)] * (cap + 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if i + j > cap:
                break
            if bj:
                out[i + j] += ai * bj
    return tuple(out)


@lru_cache(maxsize=None)
def _shift_pows(s: int, d: int, h: int, cap: int):
    """Exact re-expansion of (k+h)^(-s) * log(k+h)^d around k.

    Returns a tuple of ((t, j), Fraction) meaning a contribution
    coef * k^(-s-t) * log(k)^j, truncated at t <= cap.
    """
    if s == 0:
        powpart = tuple([Fraction(1)] + [Fraction(0)] * cap)
    else:
        powpart = tuple(
            Fraction((-1) ** t * math.comb(s + t - 1, t) * h**t) for t in range(cap + 1)
        )
    ell = tuple(
        Fraction(0) if t == 0 else Fraction((-1) ** (t - 1) * h**t, t) for t in range(cap + 1)
    )
    out: dict = {}
    ellpow = tuple([Fraction(1)] + [Fraction(0)] * cap)
    for j in range(d + 1):
        if j > 0:
            ellpow = _series_mul(ellpow, ell, cap)
        w = math.comb(d, j)
        conv = _series_mul(powpart, ellpow, cap)
        for t, c in enumerate(conv):
            if c:
                key = (t, d - j)
                out[key] = out.get(key, Fraction(0)) + w * c
    return tuple(sorted(out.items()))


def _frac(f: Fraction):
    return mp.mpf(f.numerator) / f.denominator


def _solve_plain(g: dict, h: int, S: int) -> dict:
    """Particular solution W of W(k+h) - W(k) = g(k) on the scale k^-s log^d.

    g and W map (s, d) to coefficients; forcing terms must have s >= 1.
    Triangular elimination: each ansatz monomial cancels its target slot
    exactly and feeds strictly lower-order residuals.
    """
    R = {k: v for k, v in g.items() if k[0] <= S}
    if any(s == 0 for s, _ in R):
        raise ValueError("constant forcing term has no decaying solution")
    W: dict = {}
    while R:
        s, d = min(R, key=lambda sd: (sd[0], -sd[1]))
        c = R.pop((s, d))
        if not c:
            continue
        if s == 1:
            sig, dd = 0, d + 1
            lead = h * (d + 1)
        else:
            sig, dd = s - 1, d
            lead = -sig * h
        rho_c = c / lead
        W[(sig, dd)] = W.get((sig, dd), 0) + rho_c
        for (t, j), f in _shift_pows(sig, dd, h, S - sig):
            if t == 0 and j == dd:
                f = f - 1
            if not f:
                continue
            ss = sig + t
            if ss > S or (ss, j) == (s, d):
                continue
            R[(ss, j)] = R.get((ss, j), 0) - rho_c * _frac(f)
    return W


def _solve_twisted(om, g: dict, h: int, S: int) -> dict:
    """Particular V with om * V(k+h) - V(k) = g(k), om != 1.

    Then W(k) = eta^(e*k) V(k) solves Delta W = eta^(e*k) g(k).  The fixed
    point is reached in at most S+2 rounds because the feedback is strictly
    order-raising.
    """
    inv = 1 / (om - 1)
    V: dict = {}
    for _ in range(S + 2):
        DV: dict = {}
        for (s, d), c in V.items():
            for (t, j), f in _shift_pows(s, d, h, S - s):
                if t == 0 and j == d:
                    f = f - 1
                if not f:
                    continue
                ss = s + t
                if ss > S:
                    continue
                DV[(ss, j)] = DV.get((ss, j), 0) + c * _frac(f)
        newV: dict = {}
        for key, c in g.items():
            if key[0] <= S:
                newV[key] = c * inv
        for key, c in DV.items():
            newV[key] = newV.get(key, 0) - om * inv * c
        V = newV
    return V


def _shift_ring(A: dict, h: int, S: int) -> dict:
    """Re-expand an (s, d)-ring element around k from k+h."""
    out: dict = {}
    for (s, d), c in A.items():
        if s > S:
            continue
        for (t, j), f in _shift_pows(s, d, h, S - s):
            if not f:
                continue
            key = (s + t, j)
            out[key] = out.get(key, 0) + c * _frac(f)
    return out


def _eval_plain(A: dict, k: int):
    logk = mp.log(k)
    kk = mp.mpf(k)
    total = mp.mpf(0)
    for (s, d), c in sorted(A.items(), reverse=True):
        term = c * kk ** (-s)
        if d:
            term *= logk**d
        total += term
    return total


@lru_cache(maxsize=None)
def _roots(N: int, prec: int):
    with mp.workprec(prec):
        return tuple(mp.expjpi(mp.mpf(2 * j) / N) for j in range(N))


# ---------------------------------------------------------------------------
# twisted engine: sums over 0 < m_1 < ... < m_r of prod eta^(e_i m_i) m_i^-n_i


def _twisted_value(N: int, letters: tuple, prec: int, K0: int, S: int):
    """letters = ((n_1, e_1), ..., (n_r, e_r)); requires (n_r, e_r) != (1, 0)."""
    r = len(letters)
    if r == 0:
        return mp.mpc(1)
    roots = _roots(N, prec)
    # exact prefix: P[i] = F_i(K0) = sum over chains with m_i < K0
    P = [mp.mpc(1)] + [mp.mpc(0)] * r
    for m in range(1, K0):
        mm = mp.mpf(m)
        for i in range(r, 0, -1):
            n_i, e_i = letters[i - 1]
            if P[i - 1]:
                P[i] += roots[(e_i * m) % N] * mm ** (-n_i) * P[i - 1]
    # asymptotics bottom-up; A maps (e, s, d) to coefficients
    A = {(0, 0, 0): mp.mpc(1)}
    value = None
    for i in range(1, r + 1):
        n_i, e_i = letters[i - 1]
        g: dict = {}
        for (e, s, d), c in A.items():
            if s + n_i > S:
                continue
            key = ((e + e_i) % N, s + n_i, d)
            g[key] = g.get(key, 0) + c
        W: dict = {}
        for e in sorted({key[0] for key in g}):
            block = {(s, d): c for (ee, s, d), c in g.items() if ee == e}
            if e == 0:
                sol = _solve_plain(block, 1, S)
            else:
                sol = _solve_twisted(roots[e % N], block, 1, S)
            for (s, d), c in sol.items():
                key = (e, s, d)
                W[key] = W.get(key, 0) + c
        # evaluate W at the matching point K0
        logk = mp.log(K0)
        kk = mp.mpf(K0)
        wval = mp.mpc(0)
        for (e, s, d), c in sorted(W.items(), reverse=True):
            term = c * kk ** (-s)
            if d:
                term *= logk**d
            if e:
                term *= roots[(e * K0) % N]
            wval += term
        const = P[i] - wval
        A = W
        A[(0, 0, 0)] = A.get((0, 0, 0), 0) + const
        value = const
    return value


_twisted_cache: dict = {}


def _twisted(N: int, letters: tuple, ctx: PrecisionCtx):
    key = (N, letters, ctx)
    val = _twisted_cache.get(key)
    if val is None:
        with mp.workprec(ctx.precision + _GUARD):
            val = _twisted_value(
                N, letters, ctx.precision + _GUARD, ctx.prefix_cutoff, ctx.effective_tail_order
            )
        _twisted_cache[key] = val
    return val


# ---------------------------------------------------------------------------
# congruence engine: sums over 0 < m_1 < ... < m_r, m_i = a_i mod N


def _congruence_value(N: int, letters: tuple, prec: int, K0: int, S: int):
    """letters = ((n_1, a_1), ..., (n_r, a_r)); requires n_r >= 2."""
    r = len(letters)
    if r == 0:
        return mp.mpf(1)
    # consumer classes: level i is sampled at cutoffs k = gamma_i mod N
    gammas = [letters[i + 1][1] if i + 1 < r else letters[r - 1][1] for i in range(r)]
    deltas = [(letters[i][1] - gammas[i]) % N for i in range(r)]
    kstars = [K0 - ((K0 - gammas[i]) % N) for i in range(r)]
    # exact prefix sweep: P[i] tracks chains with m_i < current m
    P = [mp.mpf(1)] + [mp.mpf(0)] * r
    snaps = [mp.mpf(0)] * (r + 1)
    for m in range(1, K0 + 1):
        for i in range(1, r + 1):
            if kstars[i - 1] == m:
                snaps[i] = P[i]
        mm = mp.mpf(m)
        for i in range(r, 0, -1):
            n_i, a_i = letters[i - 1]
            if m % N == a_i and P[i - 1]:
                P[i] += mm ** (-n_i) * P[i - 1]
    # asymptotics bottom-up on the (s, d) scale; no oscillatory terms arise
    A = {(0, 0): mp.mpf(1)}
    value = None
    for i in range(1, r + 1):
        n_i, _ = letters[i - 1]
        delta = deltas[i - 1]
        B = _shift_ring(A, delta, S) if delta else dict(A)
        powfac = _shift_pows(n_i, 0, delta, S)
        g: dict = {}
        for (s, d), c in B.items():
            for (t, _j), f in powfac:
                ss = s + n_i + t
                if ss > S:
                    continue
                key = (ss, d)
                g[key] = g.get(key, 0) + c * _frac(f)
        W = _solve_plain(g, N, S)
        const = snaps[i] - _eval_plain(W, kstars[i - 1])
        A = W
        A[(0, 0)] = A.get((0, 0), 0) + const
        value = const
    return value


_congruence_cache: dict = {}


def _congruence(N: int, letters: tuple, ctx: PrecisionCtx):
    key = (N, letters, ctx)
    val = _congruence_cache.get(key)
    if val is None:
        with mp.workprec(ctx.precision + _GUARD):
            val = _congruence_value(
                N, letters, ctx.precision + _GUARD, ctx.prefix_cutoff, ctx.effective_tail_order
            )
        _congruence_cache[key] = val
    return val


# ---------------------------------------------------------------------------
# public evaluators


def zeta_numeric(w: IndexWord, ctx: PrecisionCtx = DEFAULT_CTX):
    """Nested congruence sum over 0 < m_1 < ... < m_r with m_i = a_i mod N.

    Requires an admissible word (last exponent >= 2).  Returns a real mpf.
    """
    if w.is_unit():
        return mp.mpf(1)
    if not w.zeta_admissible():
        raise ValueError(f"word {w} is not admissible for zeta evaluation")
    return _congruence(w.level, w.letters, ctx)


def mlv_sha_numeric(w: LetterWord, ctx: PrecisionCtx = DEFAULT_CTX):
    """Twisted L-value of shuffle type.

    For the index form (n_1..n_r; a_1..a_r) of w this is the nested sum of
    eta^((a_1-a_2)m_1 + ... + (a_{r-1}-a_r)m_{r-1} + a_r m_r) / prod m_i^n_i.
    Requires a word in h^1 not ending in y_0.  Returns an mpc.
    """
    if w.is_unit():
        return mp.mpc(1)
    if not w.mlv_admissible():
        raise ValueError(f"word {w} is not admissible for L evaluation")
    iw = letters_to_index(w)
    N = w.level
    pairs = iw.letters
    r = len(pairs)
    twists = tuple(
        (pairs[i][0], (pairs[i][1] - pairs[i + 1][1]) % N if i + 1 < r else pairs[i][1] % N)
        for i in range(r)
    )
    return _twisted(N, twists, ctx)


def mlv_ast_numeric(w: IndexWord, ctx: PrecisionCtx = DEFAULT_CTX):
    """Twisted L-value of harmonic type: nested sum of prod eta^(a_i m_i) m_i^-n_i.

    Requires the last pair (n_r, a_r) != (1, 0).  Returns an mpc.
    """
    if w.is_unit():
        return mp.mpc(1)
    if w.letters[-1] == (1, 0):
        raise ValueError(f"word {w} is not admissible for L evaluation")
    return _twisted(w.level, w.letters, ctx)


def comb_value(comb: LinComb, word_eval, ctx: PrecisionCtx = DEFAULT_CTX):
    """Evaluate a linear combination, embedding coefficients at ctx precision."""
    with mp.workprec(ctx.precision + _GUARD):
        total = mp.mpc(0)
        for word, coeff in comb.sorted_items():
            total += coeff.to_complex(ctx.precision + _GUARD) * word_eval(word)
    return total


def zeta_tsha(w: IndexWord, ctx: PrecisionCtx = DEFAULT_CTX):
    """Shuffle-regularized zeta value at T = 0.

    Applies the exact chain rho, pi, letter conversion and shuffle
    regularization, then evaluates the surviving admissible words with
    mlv_sha_numeric.  Agrees with zeta_numeric on admissible words and extends
    it to all of h^1.
    """
    comb = pi(rho(as_lincomb(w)))
    with mp.workprec(ctx.precision + _GUARD):
        total = mp.mpc(0)
        for word, coeff in comb.sorted_items():
            reg = shuffle_reg0(index_to_letters(word))
            cval = coeff.to_complex(ctx.precision + _GUARD)
            for lw, c2 in reg.sorted_items():
                total += cval * c2.to_complex(ctx.precision + _GUARD) * mlv_sha_numeric(lw, ctx)
    return total


# ---------------------------------------------------------------------------
# tangent sums


@lru_cache(maxsize=None)
def _cot_poly(n: int):
    """S_n(z) := sum_{k in Z} (z+k)^(-n) = pi^n * Q_n(cot(pi z)); returns Q_n.

    Q_1 = c and Q_n = (1 + c^2) Q_{n-1}' / (n - 1), as tuples of Fractions in
    ascending powers of c.
    """
    if n == 1:
        return (Fraction(0), Fraction(1))
    prev = _cot_poly(n - 1)
    deriv = tuple(prev[i + 1] * (i + 1) for i in range(len(prev) - 1))
    out = [Fraction(0)] * (len(deriv) + 2)
    for i, c in enumerate(deriv):
        out[i] += Fraction(c, n - 1)
        out[i + 2] += Fraction(c, n - 1)
    return tuple(out)


def psi_mono_numeric(N: int, n: int, a: int, tau, ctx: PrecisionCtx = DEFAULT_CTX):
    """Two-sided tangent sum over m = a mod N of (tau + m)^(-n).

    For n = 1 this is the symmetric (Eisenstein) limit.  Substituting
    m = a + kN reduces the sum to (pi/N)^n Q_n(cot(pi (tau+a)/N)), which is
    exact at working precision.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    with mp.workprec(ctx.precision + _GUARD):
        z = (mp.mpc(tau) + a) / N
        c = mp.cot(mp.pi * z)
        poly = _cot_poly(n)
        acc = mp.mpc(0)
        for coeff in reversed(poly):
            acc = acc * c + _frac(coeff)
        return (mp.pi / N) ** n * acc


def psi_multi_numeric(N: int, ns, avec, tau, ctx: PrecisionCtx = DEFAULT_CTX):
    """Direct evaluation of the multitangent sum over m_1 < ... < m_r, m_i = a_i mod N.

    All n_i must be >= 2.  Uses symmetric windows |m_i| <= M_j at several
    nodes M_j (multiples of N) and extrapolates the window size to infinity;
    the truncation error is a smooth series in 1/M, so Neville extrapolation
    converges fast.  Used only as an oracle.
    """
    ns = tuple(ns)
    avec = tuple(x % N for x in avec)
    if any(n < 2 for n in ns):
        raise ValueError("all exponents must be >= 2")
    r = len(ns)
    base = 40 * N
    J = 10
    with mp.workprec(ctx.precision + 64):
        taum = mp.mpc(tau)
        xs = []
        ys = []
        for j in range(1, J + 1):
            M = j * base
            P = [mp.mpc(1)] + [mp.mpc(0)] * r
            for m in range(-M, M + 1):
                for i in range(r, 0, -1):
                    if m % N == avec[i - 1] and P[i - 1]:
                        P[i] += P[i - 1] * (taum + m) ** (-ns[i - 1])
            xs.append(mp.mpf(1) / M)
            ys.append(P[r])
        # Neville tableau evaluated at x = 0
        p = list(ys)
        n_nodes = len(xs)
        for lvl in range(1, n_nodes):
            for i in range(n_nodes - lvl):
                p[i] = (xs[i] * p[i + 1] - xs[i + lvl] * p[i]) / (xs[i] - xs[i + lvl])
        return p[0]


def psi_multi_reduction(N: int, ns, avec, tau, ctx: PrecisionCtx = DEFAULT_CTX):
    """Multitangent reduced to zeta values and depth-one tangent sums.

    Valid for all n_i >= 2: sums over q and compositions k_1 + ... + k_r = n
    with k_q >= 1 of signed binomial products times
    zeta(k_{q-1}..k_1; a_q-a_{q-1}, ..) * zeta(k_{q+1}..k_r; a_{q+1}-a_q, ..)
    times the depth-one tangent of (k_q; a_q).

    The k_q = 1 terms pair the symmetric depth-one limit with convergent zeta
    factors.  They cancel in total when all residues coincide (in particular
    at level 1) but are required for mixed residue vectors.
    """
    ns = tuple(ns)
    avec = tuple(x % N for x in avec)
    if any(n < 2 for n in ns):
        raise ValueError("all exponents must be >= 2")
    r = len(ns)
    n = sum(ns)
    with mp.workprec(ctx.precision + _GUARD):
        total = mp.mpc(0)
        for q in range(r):
            for kq in range(1, ns[q] + 1):
                for extras in _weak_compositions(ns[q] - kq, r - 1):
                    k = list(ns)
                    k[q] = kq
                    idx = 0
                    for p in range(r):
                        if p != q:
                            k[p] += extras[idx]
                            idx += 1
                    sign = (-1) ** (n + ns[q] + sum(k[q + 1 :]))
                    binom = 1
                    for p in range(r):
                        if p != q:
                            binom *= math.comb(k[p] - 1, ns[p] - 1)
                    left = IndexWord(N, [(k[p], (avec[q] - avec[p]) % N) for p in range(q - 1, -1, -1)])
                    right = IndexWord(N, [(k[p], (avec[p] - avec[q]) % N) for p in range(q + 1, r)])
                    total += (
                        sign
                        * binom
                        * zeta_numeric(left, ctx)
                        * zeta_numeric(right, ctx)
                        * psi_mono_numeric(N, kq, avec[q], tau, ctx)
                    )
        return total


def _weak_compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest
