"""The four products on words: shuffle, harmonic, and their level-N twists,
plus shuffle regularization at T = 0.

shuffle   : letter words, recursive interleaving (integer multiplicities)
harmonic  : index words, quasi-shuffle with merge letter (n1+n2, a1+a2)
tsha      : twisted shuffle, rho^{-1}(rho(u) sh rho(v))
tast      : twisted harmonic; the merge term carries delta_{a1,a2} and the
            merge letter (n1+n2, a1), equivalently pi^{-1}(pi(u) * pi(v))
shuffle_reg0 : the shuffle-homomorphic projection killing y_0, at T = 0

All memo caches live on word tuples and are append-only (GIL-safe for
concurrent readers); results never depend on call order.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .words import (
    X,
    IndexWord,
    LetterWord,
    LinComb,
    as_lincomb,
    index_to_letters,
    letters_to_index,
    rho,
    rho_inv,
)

__all__ = ["shuffle", "harmonic", "tsha", "tast", "shuffle_reg0"]


@lru_cache(maxsize=None)
def _sh(u: tuple, v: tuple):
    """Shuffle of two letter tuples as ((word, multiplicity), ...)."""
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    out: dict[tuple, int] = {}
    for w, m in _sh(u[1:], v):
        key = (u[0],) + w
        out[key] = out.get(key, 0) + m
    for w, m in _sh(u, v[1:]):
        key = (v[0],) + w
        out[key] = out.get(key, 0) + m
    return tuple(out.items())


def shuffle(u, v) -> LinComb:
    """Bilinear shuffle product of letter-word combinations."""
    U, V = as_lincomb(u), as_lincomb(v)
    if U.level != V.level:
        raise ValueError("level mismatch")
    out = LinComb(U.level)
    for w1, c1 in U.terms.items():
        for w2, c2 in V.terms.items():
            c = c1 * c2
            for t, m in _sh(w1.letters, w2.letters):
                out._add_term(LetterWord(U.level, t), c * m)
    return out


@lru_cache(maxsize=None)
def _ha(N: int, u: tuple, v: tuple):
    """Harmonic product of index-letter tuples as ((word, mult), ...)."""
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    (n1, a1), (n2, a2) = u[0], v[0]
    out: dict[tuple, int] = {}

    def add(key, m):
        out[key] = out.get(key, 0) + m

    for w, m in _ha(N, u[1:], v):
        add(((n1, a1),) + w, m)
    for w, m in _ha(N, u, v[1:]):
        add(((n2, a2),) + w, m)
    for w, m in _ha(N, u[1:], v[1:]):
        add(((n1 + n2, (a1 + a2) % N),) + w, m)
    return tuple(out.items())


def harmonic(u, v) -> LinComb:
    """Bilinear quasi-shuffle with merge letter (n1+n2, a1+a2)."""
    U, V = as_lincomb(u), as_lincomb(v)
    if U.level != V.level:
        raise ValueError("level mismatch")
    out = LinComb(U.level)
    for w1, c1 in U.terms.items():
        for w2, c2 in V.terms.items():
            c = c1 * c2
            for t, m in _ha(U.level, w1.letters, w2.letters):
                out._add_term(IndexWord(U.level, t), c * m)
    return out


@lru_cache(maxsize=None)
def _ta(N: int, u: tuple, v: tuple):
    """Twisted harmonic product: merge only when a1 = a2, keeping residue a1."""
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    (n1, a1), (n2, a2) = u[0], v[0]
    out: dict[tuple, int] = {}

    def add(key, m):
        out[key] = out.get(key, 0) + m

    for w, m in _ta(N, u[1:], v):
        add(((n1, a1),) + w, m)
    for w, m in _ta(N, u, v[1:]):
        add(((n2, a2),) + w, m)
    if a1 == a2:
        for w, m in _ta(N, u[1:], v[1:]):
            add(((n1 + n2, a1),) + w, m)
    return tuple(out.items())


def tast(u, v) -> LinComb:
    """Level-N twisted harmonic product on index-word combinations."""
    U, V = as_lincomb(u), as_lincomb(v)
    if U.level != V.level:
        raise ValueError("level mismatch")
    out = LinComb(U.level)
    for w1, c1 in U.terms.items():
        for w2, c2 in V.terms.items():
            c = c1 * c2
            for t, m in _ta(U.level, w1.letters, w2.letters):
                out._add_term(IndexWord(U.level, t), c * m)
    return out


def tsha(u, v) -> LinComb:
    """Level-N twisted shuffle: conjugate the letter shuffle by the
    difference map rho.  Index-word combinations in, same out."""
    U, V = as_lincomb(u), as_lincomb(v)
    if U.level != V.level:
        raise ValueError("level mismatch")
    ru = rho(U).map_words(index_to_letters)
    rv = rho(V).map_words(index_to_letters)
    shuffled = shuffle(ru, rv)
    return rho_inv(shuffled.map_words(letters_to_index))


@lru_cache(maxsize=None)
def _reg0(letters: tuple):
    """T = 0 shuffle regularization of one letter word, as
    ((admissible word, Fraction), ...).  Requires a word in the index ring."""
    if not letters:
        return ((letters, Fraction(1)),)
    if letters[0] == X:
        raise ValueError("regularization needs a word starting with some y_a")
    if letters[-1] != 0:
        return ((letters, Fraction(1)),)
    k = 0
    while k < len(letters) and letters[-1 - k] == 0:
        k += 1
    core = letters[:-k]
    if not core:
        # a pure y_0 power regularizes to zero at T = 0
        return ()
    # y_0 sh (core y_0^(k-1)) = k * letters + R, every word of R having a
    # strictly shorter trailing y_0 run
    out: dict[tuple, Fraction] = {}
    seen_leading = 0
    for w, m in _sh((0,), core + (0,) * (k - 1)):
        if w == letters:
            seen_leading = m
            continue
        for w2, c2 in _reg0(w):
            out[w2] = out.get(w2, Fraction(0)) + m * c2
    assert seen_leading == k
    scale = Fraction(-1, k)
    return tuple((w, c * scale) for w, c in out.items() if c)


def shuffle_reg0(u) -> LinComb:
    """Project a letter-word combination onto admissible words (those not
    ending in y_0) along the shuffle algebra, evaluating the regularization
    parameter at T = 0.  Admissible words are fixed; y_0 itself maps to 0."""
    U = as_lincomb(u)
    out = LinComb(U.level)
    for w, c in U.terms.items():
        for t, q in _reg0(w.letters):
            out._add_term(LetterWord(U.level, t), c * q)
    return out
