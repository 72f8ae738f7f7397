"""The level-N Goncharov coproduct on index words, convolution of
evaluators against it, and the shuffle antipode identity.

coproduct_mu follows the closed pattern formula: mark a subset of the
positions of the word, pick one distinguished position per block of the
induced partition, redistribute each block's weight over compositions
with binomial multiplicities, and tensor the surviving index material.
Left factors arrive as products of words and are flattened through the
twisted shuffle immediately, which is faithful for every evaluator used
here (they are all tsha-homomorphisms).
"""

from __future__ import annotations

from math import comb

from .cyclo import CycloNum
from .products import _sh, tsha
from .words import IndexWord, LetterWord, LinComb, as_lincomb

__all__ = ["TensorComb", "coproduct_mu", "convolve", "counit", "antipode_sum"]


class TensorComb:
    """CycloNum-linear combination of pairs (left word, right word)."""

    __slots__ = ("level", "terms")

    def __init__(self, level: int, terms=None):
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "terms", {})
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for pair, c in items:
                self._add_term(pair, c)

    def _add_term(self, pair, coeff):
        left, right = pair
        if left.level != self.level or right.level != self.level:
            raise ValueError("level mismatch in tensor term")
        c = coeff if isinstance(coeff, CycloNum) else CycloNum.from_rational(self.level, coeff)
        cur = self.terms.get(pair)
        total = c if cur is None else cur + c
        if total.is_zero():
            self.terms.pop(pair, None)
        else:
            self.terms[pair] = total

    def __add__(self, other):
        if not isinstance(other, TensorComb) or other.level != self.level:
            return NotImplemented
        out = TensorComb(self.level, self.terms)
        for pair, c in other.terms.items():
            out._add_term(pair, c)
        return out

    def __sub__(self, other):
        if not isinstance(other, TensorComb) or other.level != self.level:
            return NotImplemented
        out = TensorComb(self.level, self.terms)
        for pair, c in other.terms.items():
            out._add_term(pair, -c)
        return out

    def scale(self, coeff) -> "TensorComb":
        out = TensorComb(self.level)
        for pair, c in self.terms.items():
            out._add_term(pair, c * coeff)
        return out

    def mul(self, other: "TensorComb") -> "TensorComb":
        """Componentwise twisted-shuffle product on both tensor legs."""
        out = TensorComb(self.level)
        for (l1, r1), c1 in self.terms.items():
            for (l2, r2), c2 in other.terms.items():
                c = c1 * c2
                left = tsha(l1, l2)
                right = tsha(r1, r2)
                for wl, cl in left.terms.items():
                    for wr, cr in right.terms.items():
                        out._add_term((wl, wr), c * cl * cr)
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, TensorComb)
            and self.level == other.level
            and self.terms == other.terms
        )

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def sorted_items(self):
        return sorted(
            self.terms.items(),
            key=lambda kv: (kv[0][0].sort_key(), kv[0][1].sort_key()),
        )

    def __repr__(self):
        parts = [f"({c}) * {l} (x) {r}" for (l, r), c in self.sorted_items()]
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return {
            "N": self.level,
            "terms": [
                {"coeff": c.to_json(), "left": l.to_json(), "right": r.to_json()}
                for (l, r), c in self.sorted_items()
            ],
        }


def _compositions_with_floor(mins, budget):
    """All tuples k with k[i] >= mins[i] and sum(k) <= sum(mins) + budget."""
    if not mins:
        yield ()
        return
    head = mins[0]
    for extra in range(budget + 1):
        for rest in _compositions_with_floor(mins[1:], budget - extra):
            yield (head + extra,) + rest


def _block_options(N, block_n, block_a):
    """For one marked block: all (coefficient, A-word, B-word, right letter)
    choices over distinguished position and weight composition."""
    size = len(block_n)
    W = sum(block_n)
    opts = []
    for q in range(size):
        other_min = [block_n[p] for p in range(size) if p != q]
        budget = W - 1 - sum(other_min)
        if budget < 0:
            continue
        for ks_other in _compositions_with_floor(tuple(other_min), budget):
            k = list(ks_other[:q]) + [W - sum(ks_other)] + list(ks_other[q:])
            sign_exp = W + block_n[q] + sum(k[p] for p in range(q + 1, size))
            coeff = 1 if sign_exp % 2 == 0 else -1
            for p in range(size):
                if p != q:
                    coeff *= comb(k[p] - 1, block_n[p] - 1)
            if coeff == 0:
                continue
            a_q = block_a[q]
            A = tuple((k[p], (a_q - block_a[p]) % N) for p in range(q - 1, -1, -1))
            B = tuple((k[p], (block_a[p] - a_q) % N) for p in range(q + 1, size))
            opts.append((coeff, A, B, (k[q], a_q)))
    return opts


_coproduct_cache: dict[IndexWord, TensorComb] = {}


def coproduct_mu(w: IndexWord) -> TensorComb:
    """Goncharov coproduct of an index word, as a TensorComb whose terms
    are pure word pairs (left products already flattened through tsha)."""
    cached = _coproduct_cache.get(w)
    if cached is not None:
        return cached
    N = w.level
    letters = w.letters
    r = len(letters)
    ns = [n for n, _ in letters]
    as_ = [a for _, a in letters]
    unit = IndexWord.unit(N)
    out = TensorComb(N)
    for mask in range(1 << r):
        marked = [i for i in range(r) if (mask >> i) & 1]
        if not marked:
            out._add_term((w, unit), 1)
            continue
        prefix = IndexWord(N, letters[: marked[0]])
        bounds = marked + [r]
        per_block = []
        for j in range(len(marked)):
            s, e = bounds[j], bounds[j + 1]
            per_block.append(_block_options(N, ns[s:e], as_[s:e]))
        start = [prefix] if not prefix.is_unit() else []
        _emit_pattern(out, N, per_block, 0, 1, start, [])
    _coproduct_cache[w] = out
    return out


def _emit_pattern(out, N, per_block, j, coeff, left_words, right_letters):
    if j == len(per_block):
        right = IndexWord(N, right_letters)
        left = LinComb.of(IndexWord.unit(N))
        for lw in left_words:
            left = tsha(left, lw)
        for wl, cl in left.terms.items():
            out._add_term((wl, right), cl * coeff)
        return
    for c, A, B, rl in per_block[j]:
        extra = []
        if A:
            extra.append(IndexWord(N, A))
        if B:
            extra.append(IndexWord(N, B))
        _emit_pattern(
            out, N, per_block, j + 1, coeff * c,
            left_words + extra, right_letters + [rl],
        )


def counit(w: IndexWord):
    return 1 if w.is_unit() else 0


def convolve(f, g, w: IndexWord, embed=None):
    """m o (f tensor g) o coproduct: sum of coeff * f(left) * g(right).

    embed maps CycloNum coefficients into the codomain's scalars; by
    default the coefficient multiplies the product directly.
    """
    total = None
    for (left, right), c in coproduct_mu(w).terms.items():
        scalar = c if embed is None else embed(c)
        val = scalar * f(left) * g(right)
        total = val if total is None else total + val
    if total is None:
        raise ValueError("empty coproduct")
    return total


def antipode_sum(w: LetterWord) -> LinComb:
    """sum_i (-1)^i (reversed prefix) shuffled with the suffix; identically
    zero for every nonempty letter word."""
    letters = w.letters
    n = len(letters)
    out = LinComb(w.level)
    for i in range(n + 1):
        left = letters[:i][::-1]
        right = letters[i:]
        sign = -1 if i % 2 else 1
        for t, m in _sh(left, right):
            out._add_term(LetterWord(w.level, t), sign * m)
    return out
