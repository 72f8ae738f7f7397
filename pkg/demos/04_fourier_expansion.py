"""
Fourier expansion of multiple Eisenstein series
===============================================

The expansion is assembled by convolving the zeta evaluator with the
exact divisor series against the coproduct.  An independent truncated
lattice sum over ordered points of Z N tau + Z serves as an oracle.
"""

from mpmath import mp

from mes import (
    G_fourier,
    G_lattice_oracle,
    G_sha_fourier,
    IndexWord,
    fourier_eval,
)

# the classical weight 4 series: constant term zeta(4), then sigma_3
w = IndexWord(1, [(4, 0)])
fe = G_fourier(w, 6)
print("G(4) coefficients (q^0 .. q^6):")
for m, c in enumerate(fe.coeffs):
    print(f"  q^{m}: {mp.nstr(c, 18)}")

# evaluate at tau = i and compare with the raw lattice sum
tau = mp.mpc(0, 1)
value = fourier_eval(G_fourier(w, 24), tau)
oracle = G_lattice_oracle(w, tau)
print("\nFourier route:", mp.nstr(value, 15))
print("lattice oracle:", mp.nstr(oracle, 15))
print("difference:", mp.nstr(abs(value - oracle), 3))

# a depth 2, level 2 example and its regularized cousin
w = IndexWord(2, [(2, 1), (3, 1)])
fe = G_fourier(w, 4)
print("\nG((2,3;1,1)) at level 2, first coefficients:")
for m, c in enumerate(fe.coeffs):
    print(f"  q^{m}: {mp.nstr(c, 12)}")

reg = G_sha_fourier(IndexWord(2, [(1, 1), (2, 0)]), 4)
print("\nregularized G_sha((1,2;1,0)), provenance:", reg.provenance)
print("declared error bound:", mp.nstr(reg.error_bound, 3))
