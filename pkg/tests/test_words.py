"""Index and letter words, linear combinations, the rho and pi bijections."""

from fractions import Fraction

import pytest

from mes import (
    CycloNum,
    IndexWord,
    LetterWord,
    LinComb,
    index_to_letters,
    letters_to_index,
)
from mes.words import X, pi, pi_inv, rho, rho_inv


def test_residues_normalized_mod_level():
    w = IndexWord(3, [(2, 5), (1, -1)])
    assert w.letters == ((2, 2), (1, 2))
    assert str(w) == "(2,1;2,2)"


def test_admissibility_flavors():
    w = IndexWord(2, [(1, 0), (2, 1)])
    assert w.zeta_admissible()
    assert not w.mes_admissible()
    assert IndexWord(2, [(2, 0), (3, 1)]).mes_admissible()
    assert not IndexWord(2, [(2, 0), (1, 1)]).zeta_admissible()
    # mlv admissibility forbids a trailing (1, 0) pair
    assert IndexWord(2, [(1, 1)]).mlv_admissible()
    assert not IndexWord(2, [(1, 0)]).mlv_admissible()


def test_letter_translation_round_trip():
    w = IndexWord(4, [(3, 1), (1, 2), (2, 0)])
    lw = index_to_letters(w)
    # y_a x^(n-1) per pair, reading the index left to right
    assert lw.letters == (1, X, X, 2, 0, X)
    assert str(lw) == "y1 x x y2 y0 x"
    assert letters_to_index(lw) == w


def test_letters_to_index_requires_y_start():
    with pytest.raises(ValueError):
        letters_to_index(LetterWord(2, [X, 1]))


def test_lincomb_algebra():
    u = IndexWord(2, [(2, 0)])
    v = IndexWord(2, [(3, 1)])
    c = LinComb.of(u, 2) + LinComb.of(v) - LinComb.of(u, Fraction(1, 2))
    items = c.sorted_items()
    assert [(str(w), k.as_fraction()) for w, k in items] == [
        ("(2;0)", Fraction(3, 2)),
        ("(3;1)", Fraction(1)),
    ]
    # scalar action and cancellation
    d = c * Fraction(2, 3) - c * Fraction(2, 3)
    assert not d.terms


def test_lincomb_json_round_trip():
    c = LinComb.of(IndexWord(3, [(2, 1), (1, 2)]), Fraction(5, 7)) + LinComb.of(
        IndexWord(3, [(4, 0)]), CycloNum(3, [Fraction(1), Fraction(-1)])
    )
    assert LinComb.from_json(c.to_json()) == c


def test_rho_and_pi_are_bijections():
    w = IndexWord(3, [(2, 1), (3, 2), (1, 1)])
    c = LinComb.of(w)
    assert rho_inv(rho(c)) == c
    assert pi_inv(pi(c)) == c
    # rho takes consecutive differences
    (rw, _), = rho(c).sorted_items()
    assert rw.letters == ((2, 1), (3, 1), (1, 2))


def test_sort_key_deterministic():
    words = [IndexWord(2, [(2, 1)]), IndexWord(2, [(2, 0)]), IndexWord(2, [(1, 1), (2, 0)])]
    keys = [w.sort_key() for w in words]
    assert sorted(keys) == sorted(keys, reverse=False)
    assert len(set(keys)) == 3
