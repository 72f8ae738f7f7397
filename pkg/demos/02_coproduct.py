"""
The level-N coproduct and its convolution
=========================================

The coproduct splits an index word into tensor pairs (left, right).
Convolving two evaluators against it multiplies the value of the left
leg with the value of the right leg and sums; with a zeta evaluator on
the left and a q-series on the right this reconstructs the Fourier
expansion of a multiple Eisenstein series.
"""

from mes import IndexWord, antipode_sum, coproduct_mu, counit, index_to_letters

w = IndexWord(2, [(2, 1), (3, 1)])
print("coproduct of", w, "at level 2:")
for (left, right), coeff in coproduct_mu(w).sorted_items():
    print(f"  {coeff} * {left} (x) {right}")

# the counit picks out the empty word; contracting it on either leg
# must return the original word, which is the bialgebra unit law
tc = coproduct_mu(w)
left_part = [right for (left, right), _ in tc if counit(left)]
right_part = [left for (left, right), _ in tc if counit(right)]
print("\ncounit contraction (left):", left_part)
print("counit contraction (right):", right_part)

# the antipode identity: the signed sum of reversed-prefix shuffles of
# any letter word vanishes identically
lw = index_to_letters(IndexWord(2, [(2, 1), (2, 0)]))
print("\nantipode sum of", lw, "=", repr(antipode_sum(lw)))
