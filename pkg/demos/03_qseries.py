"""
Multiple divisor generating series, exactly
===========================================

The q-series ghat attached to a word has coefficients in Q(eta), eta a
primitive N-th root of unity, with the transcendental prefactor
(-2 pi i / N)^weight carried separately as a tag.  At level 1 and depth
one these are the classical divisor sums.
"""

from fractions import Fraction

from mes import IndexWord, g_hat, g_sha_hat

# sigma_0: the coefficient of q^m counts the divisors of m
nd = g_hat(IndexWord(1, [(1, 0)]), 10)
print("ghat((1;0)) coefficients:", [int(c) if not hasattr(c, "as_fraction") else int(c.as_fraction()) for c in nd.series.c])

# weight 3: sigma_2(m)/2 because of the 1/(n-1)! normalization
nd = g_hat(IndexWord(1, [(3, 0)]), 8)
print("ghat((3;0)) coefficients:", [c if isinstance(c, int) else c.as_fraction() for c in nd.series.c])

# at level 2 the coefficients live in Q(eta) with eta = -1
nd = g_hat(IndexWord(2, [(1, 1)]), 10)
print("ghat((1;1)) at level 2:", [c if isinstance(c, int) else c.as_fraction() for c in nd.series.c])

# the regularized series extends ghat to every word and agrees with it
# whenever all exponents are at least 2
w = IndexWord(2, [(2, 1), (2, 0)])
plain = g_hat(w, 8).series
reg = g_sha_hat(w, 8).series
print("\nplain == regularized on", w, ":", all(
    (a - b) == 0 or not (a - b) for a, b in zip(plain.c, reg.c)
))

# a regularized value where the plain sum diverges
nd = g_sha_hat(IndexWord(1, [(1, 0), (2, 0)]), 8)
print("ghat_sha((1,2;0,0)):", [c if isinstance(c, int) else c.as_fraction() for c in nd.series.c])
