"""
Words of double indices and their four products
================================================

An index word (n_1,...,n_r; a_1,...,a_r) bundles exponents n_i with
residues a_i mod N.  The library multiplies such words in four ways:
the letter shuffle, the harmonic (stuffle) product, and their twisted
level-N counterparts obtained by conjugating with the difference map
rho and the finite Fourier transform pi.
"""

from mes import (
    IndexWord,
    harmonic,
    index_to_letters,
    letters_to_index,
    shuffle,
    tast,
    tsha,
)

# two depth-one words at level 1
z2 = IndexWord(1, [(2, 0)])
z3 = IndexWord(1, [(3, 0)])
print("words:", z2, "and", z3)

# the harmonic product inserts both orders and a merged letter
print("\nharmonic:", repr(harmonic(z2, z3)))

# in the letter picture a word (n; a) becomes y_a x^(n-1)
lw = index_to_letters(z3)
print("\nletter form of", z3, "is", lw)

# the shuffle product interleaves letters; translate back to indices
sh = shuffle(index_to_letters(z2), lw).map_words(letters_to_index)
print("shuffle:", repr(sh))

# comparing both expansions of the same product of series yields the
# classical relation zeta(5) = 2 zeta(2,3) + 6 zeta(1,4)
print("\ntast:", repr(tast(z2, z3)))
print("tsha:", repr(tsha(z2, z3)))

# at higher level the twisted products keep track of residues
u = IndexWord(2, [(2, 1)])
v = IndexWord(2, [(3, 0)])
print("\nlevel 2, tast:", repr(tast(u, v)))
print("level 2, tsha:", repr(tsha(u, v)))
