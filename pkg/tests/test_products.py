"""The four products and the shuffle regularization at T = 0."""

from fractions import Fraction

from mes import (
    IndexWord,
    LinComb,
    harmonic,
    index_to_letters,
    letters_to_index,
    shuffle,
    shuffle_reg0,
    tast,
    tsha,
)
from mes.words import pi, pi_inv, rho, rho_inv


def lc(N, *pairs):
    return LinComb.of(IndexWord(N, list(pairs)))


def as_dict(comb):
    return {str(w): c.as_fraction() for w, c in comb.sorted_items() if c}


def test_harmonic_known_value():
    # z2 * z3 = z2 z3 + z3 z2 + z5 at level 1
    got = as_dict(harmonic(lc(1, (2, 0)), lc(1, (3, 0))))
    assert got == {"(5;0)": 1, "(2,3;0,0)": 1, "(3,2;0,0)": 1}


def test_harmonic_merges_residues():
    # merge letter adds exponents and residues mod N
    got = as_dict(harmonic(lc(3, (2, 1)), lc(3, (3, 2))))
    assert got == {"(5;0)": 1, "(2,3;1,2)": 1, "(3,2;2,1)": 1}


def test_tast_merges_only_equal_residues():
    got = as_dict(tast(lc(2, (2, 1)), lc(2, (3, 1))))
    assert got == {"(5;1)": 1, "(2,3;1,1)": 1, "(3,2;1,1)": 1}
    got = as_dict(tast(lc(2, (2, 0)), lc(2, (3, 1))))
    assert got == {"(2,3;0,1)": 1, "(3,2;1,0)": 1}


def test_shuffle_on_letter_words():
    u = index_to_letters(IndexWord(1, [(2, 0)]))
    sq = shuffle(u, u).map_words(letters_to_index)
    assert as_dict(sq) == {"(1,3;0,0)": 4, "(2,2;0,0)": 2}


def test_tsha_known_value():
    # the depth 1 x depth 1 shuffle behind zeta(5) = 2 zeta(2,3) + 6 zeta(1,4)
    got = as_dict(tsha(lc(1, (2, 0)), lc(1, (3, 0))))
    assert got == {"(1,4;0,0)": 6, "(2,3;0,0)": 3, "(3,2;0,0)": 1}


def test_products_commute():
    words = [
        lc(2, (2, 0)),
        lc(2, (3, 1)),
        lc(2, (1, 1), (2, 0)),
        lc(3, (2, 2)),
    ]
    for op in (harmonic, tast, tsha):
        for u in words:
            for v in words:
                if u.level != v.level:
                    continue
                assert op(u, v) == op(v, u), op.__name__


def test_products_associate():
    u, v, w = lc(2, (1, 0)), lc(2, (2, 1)), lc(2, (1, 1))
    for op in (harmonic, tast, tsha):
        assert op(op(u, v), w) == op(u, op(v, w)), op.__name__


def test_tast_is_pi_conjugated_harmonic():
    # tast = pi_inv . harmonic . pi
    for u, v in [
        (lc(2, (2, 0)), lc(2, (3, 1))),
        (lc(3, (2, 1)), lc(3, (2, 2))),
        (lc(2, (1, 1)), lc(2, (2, 1))),
    ]:
        direct = tast(u, v)
        routed = pi_inv(harmonic(pi(u), pi(v)))
        assert direct == routed


def test_tsha_is_rho_conjugated_shuffle():
    # tsha = rho_inv . (letter shuffle) . rho
    for u, v in [
        (lc(2, (2, 0)), lc(2, (3, 1))),
        (lc(3, (1, 1)), lc(3, (2, 2))),
    ]:
        direct = tsha(u, v)
        sha = shuffle(
            rho(u).map_words(index_to_letters), rho(v).map_words(index_to_letters)
        )
        routed = rho_inv(sha.map_words(letters_to_index))
        assert direct == routed


def test_reg0_fixes_admissible_words():
    w = index_to_letters(IndexWord(2, [(2, 1), (3, 1)]))
    reg = shuffle_reg0(w)
    assert as_dict(reg.map_words(letters_to_index)) == {"(2,3;1,1)": 1}


def test_reg0_kills_trailing_y0_stack():
    # the weight 1 word y_0 regularizes to 0 at T = 0
    reg = shuffle_reg0(index_to_letters(IndexWord(1, [(1, 0)])))
    assert not as_dict(reg)


def test_reg0_divergent_word():
    # y0 sha y0x = 2 y0y0x + y0xy0 and reg0(y0) = 0 force
    # reg0(y0 x y0) = -2 y0y0x, the regularized Euler relation
    reg = shuffle_reg0(index_to_letters(IndexWord(1, [(2, 0), (1, 0)])))
    got = as_dict(reg.map_words(letters_to_index))
    assert got == {"(1,2;0,0)": Fraction(-2)}


def test_reg0_is_shuffle_homomorphism():
    u = index_to_letters(IndexWord(2, [(1, 0)]))
    v = index_to_letters(IndexWord(2, [(2, 1)]))
    lhs = shuffle_reg0(shuffle(u, v))
    rhs = shuffle(shuffle_reg0(u), shuffle_reg0(v))
    assert lhs == rhs
