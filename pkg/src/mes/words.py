"""Word algebras of double indices (n;a) and letters {x, y_a}.

An index word is a tuple of pairs (n_i, a_i) with n_i >= 1 and a_i a
residue mod N; the matching letter word over {x, y_a} is obtained by
sending (n, a) to y_a x^(n-1).  LinComb wraps formal linear combinations
of either kind of word with CycloNum coefficients in canonical form
(no zero terms).  Letter encoding: -1 is x, a nonnegative value a is y_a.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _cartesian

from .cyclo import CycloNum, root_power

__all__ = [
    "IndexWord",
    "LetterWord",
    "LinComb",
    "index_to_letters",
    "letters_to_index",
    "rho",
    "rho_inv",
    "pi",
    "pi_inv",
]

X = -1  # the letter x


class IndexWord:
    """A word of double indices over Z_{>=1} x Z/NZ; () is the unit."""

    __slots__ = ("level", "letters", "_hash")

    def __init__(self, level: int, letters=()):
        if level < 1:
            raise ValueError("level must be >= 1")
        norm = []
        for n, a in letters:
            if n < 1:
                raise ValueError(f"index entry needs n >= 1, got {n}")
            norm.append((int(n), int(a) % level))
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "letters", tuple(norm))
        object.__setattr__(self, "_hash", hash((level, self.letters)))

    def __setattr__(self, name, value):
        raise AttributeError("IndexWord is immutable")

    @classmethod
    def unit(cls, level: int) -> "IndexWord":
        return cls(level, ())

    @property
    def weight(self) -> int:
        return sum(n for n, _ in self.letters)

    @property
    def depth(self) -> int:
        return len(self.letters)

    def is_unit(self) -> bool:
        return not self.letters

    def zeta_admissible(self) -> bool:
        """Outermost exponent at least 2 (or the unit word)."""
        return not self.letters or self.letters[-1][0] >= 2

    def mes_admissible(self) -> bool:
        """Every exponent at least 2."""
        return all(n >= 2 for n, _ in self.letters)

    def mlv_admissible(self) -> bool:
        """Letter form does not end in y_0."""
        return not self.letters or self.letters[-1] != (1, 0)

    def __eq__(self, other):
        return (
            isinstance(other, IndexWord)
            and self.level == other.level
            and self.letters == other.letters
        )

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return (self.depth, self.letters)

    def __repr__(self):
        return f"IndexWord({self.level}, {self.letters})"

    def __str__(self):
        if not self.letters:
            return "()"
        ns = ",".join(str(n) for n, _ in self.letters)
        as_ = ",".join(str(a) for _, a in self.letters)
        return f"({ns};{as_})"

    def to_json(self):
        return [[n, a] for n, a in self.letters]


class LetterWord:
    """A word over the alphabet {x} + {y_a : a in Z/NZ}."""

    __slots__ = ("level", "letters", "_hash")

    def __init__(self, level: int, letters=()):
        if level < 1:
            raise ValueError("level must be >= 1")
        norm = []
        for l in letters:
            norm.append(X if l == X else int(l) % level)
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "letters", tuple(norm))
        object.__setattr__(self, "_hash", hash((level, self.letters, "L")))

    def __setattr__(self, name, value):
        raise AttributeError("LetterWord is immutable")

    @classmethod
    def unit(cls, level: int) -> "LetterWord":
        return cls(level, ())

    @property
    def weight(self) -> int:
        return len(self.letters)

    @property
    def depth(self) -> int:
        return sum(1 for l in self.letters if l != X)

    def is_unit(self) -> bool:
        return not self.letters

    def in_h1(self) -> bool:
        """Empty or starting with some y_a (index-convertible)."""
        return not self.letters or self.letters[0] != X

    def mlv_admissible(self) -> bool:
        return self.in_h1() and (not self.letters or self.letters[-1] != 0)

    def __eq__(self, other):
        return (
            isinstance(other, LetterWord)
            and self.level == other.level
            and self.letters == other.letters
        )

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return (len(self.letters), self.letters)

    def __repr__(self):
        return f"LetterWord({self.level}, {self.letters})"

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join("x" if l == X else f"y{l}" for l in self.letters)


def index_to_letters(w: IndexWord) -> LetterWord:
    out = []
    for n, a in w.letters:
        out.append(a)
        out.extend([X] * (n - 1))
    return LetterWord(w.level, out)


def letters_to_index(w: LetterWord) -> IndexWord:
    if w.letters and w.letters[0] == X:
        raise ValueError(f"word {w} starts with x, not in the index ring")
    pairs: list[tuple[int, int]] = []
    for l in w.letters:
        if l == X:
            n, a = pairs[-1]
            pairs[-1] = (n + 1, a)
        else:
            pairs.append((1, l))
    return IndexWord(w.level, pairs)


def _as_cyclo(level: int, c) -> CycloNum:
    if isinstance(c, CycloNum):
        if c.N != level:
            raise ValueError(f"coefficient level {c.N} != {level}")
        return c
    return CycloNum.from_rational(level, c)


class LinComb:
    """Finite CycloNum-linear combination of words, canonical (no zeros).

    Works for IndexWord and LetterWord keys alike; all words and all
    coefficients share the level.  Treated as immutable after creation.
    """

    __slots__ = ("level", "terms")

    def __init__(self, level: int, terms=None):
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "terms", {})
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for w, c in items:
                self._add_term(w, c)

    @classmethod
    def zero(cls, level: int) -> "LinComb":
        return cls(level)

    @classmethod
    def of(cls, word, coeff=1) -> "LinComb":
        lc = cls(word.level)
        lc._add_term(word, coeff)
        return lc

    def _add_term(self, word, coeff):
        if word.level != self.level:
            raise ValueError(f"word level {word.level} != {self.level}")
        c = _as_cyclo(self.level, coeff)
        cur = self.terms.get(word)
        total = c if cur is None else cur + c
        if total.is_zero():
            self.terms.pop(word, None)
        else:
            self.terms[word] = total

    def __add__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        if other.level != self.level:
            raise ValueError("level mismatch")
        out = LinComb(self.level, self.terms)
        for w, c in other.terms.items():
            out._add_term(w, c)
        return out

    def __sub__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        if other.level != self.level:
            raise ValueError("level mismatch")
        out = LinComb(self.level, self.terms)
        for w, c in other.terms.items():
            out._add_term(w, -c)
        return out

    def __neg__(self):
        return self.scale(-1)

    def scale(self, coeff) -> "LinComb":
        c = _as_cyclo(self.level, coeff)
        out = LinComb(self.level)
        if c.is_zero():
            return out
        for w, t in self.terms.items():
            out.terms[w] = t * c
        return out

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def map_words(self, fn) -> "LinComb":
        """Linear extension of a word-to-LinComb (or word-to-word) map."""
        out = LinComb(self.level)
        for w, c in self.terms.items():
            img = fn(w)
            if isinstance(img, LinComb):
                for w2, c2 in img.terms.items():
                    out._add_term(w2, c * c2)
            else:
                out._add_term(img, c)
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, LinComb)
            and self.level == other.level
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.level, frozenset(self.terms.items())))

    def __iter__(self):
        return iter(self.terms.items())

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        parts = [f"({c}) * {w}" for w, c in self.sorted_items()]
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return {
            "N": self.level,
            "terms": [
                {"coeff": c.to_json(), "index": w.to_json()}
                for w, c in self.sorted_items()
            ],
        }

    @classmethod
    def from_json(cls, obj) -> "LinComb":
        level = int(obj["N"])
        out = cls(level)
        for t in obj["terms"]:
            out._add_term(
                IndexWord(level, [(int(n), int(a)) for n, a in t["index"]]),
                CycloNum.from_json(t["coeff"]),
            )
        return out


def as_lincomb(x) -> LinComb:
    if isinstance(x, LinComb):
        return x
    if isinstance(x, (IndexWord, LetterWord)):
        return LinComb.of(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a linear combination")


def _rho_word(w: IndexWord) -> IndexWord:
    prev = 0
    out = []
    for n, a in w.letters:
        out.append((n, (a - prev) % w.level))
        prev = a
    return IndexWord(w.level, out)


def _rho_inv_word(w: IndexWord) -> IndexWord:
    acc = 0
    out = []
    for n, a in w.letters:
        acc = (acc + a) % w.level
        out.append((n, acc))
    return IndexWord(w.level, out)


def rho(x) -> LinComb:
    """Residues to consecutive differences (a_1, a_2-a_1, ...), linearly."""
    return as_lincomb(x).map_words(_rho_word)


def rho_inv(x) -> LinComb:
    """Residues to partial sums; inverse of rho."""
    return as_lincomb(x).map_words(_rho_inv_word)


def _pi_word(w: IndexWord) -> LinComb:
    N = w.level
    r = w.depth
    out = LinComb(N)
    scale = Fraction(1, N**r)
    ns = [n for n, _ in w.letters]
    as_ = [a for _, a in w.letters]
    for bs in _cartesian(range(N), repeat=r):
        e = -sum(a * b for a, b in zip(as_, bs))
        coeff = root_power(N, e) * scale
        out._add_term(IndexWord(N, list(zip(ns, bs))), coeff)
    return out


def _pi_inv_word(w: IndexWord) -> LinComb:
    N = w.level
    r = w.depth
    out = LinComb(N)
    ns = [n for n, _ in w.letters]
    bs = [a for _, a in w.letters]
    for as_ in _cartesian(range(N), repeat=r):
        e = sum(a * b for a, b in zip(as_, bs))
        out._add_term(IndexWord(N, list(zip(ns, as_))), root_power(N, e))
    return out


def pi(x) -> LinComb:
    """The finite Fourier transform z_{n,a} -> N^{-1} sum_b eta^{-ab} z_{n,b},
    applied to every letter of every word (letterwise) and extended linearly."""
    return as_lincomb(x).map_words(_pi_word)


def pi_inv(x) -> LinComb:
    """Inverse transform z_{n,b} -> sum_a eta^{ab} z_{n,a}, letterwise."""
    return as_lincomb(x).map_words(_pi_inv_word)
