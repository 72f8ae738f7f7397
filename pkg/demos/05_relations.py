"""
Relations between multiple Eisenstein series
============================================

Every named identity ships as an executable check returning a report
with the measured residual.  The default suite covers the restricted
double shuffle, distribution, sum and weighted sum formulas, the
generating function identity, antipode vanishing, and the weight 12
cusp form decomposition.
"""

from mes import (
    IndexWord,
    check_distribution,
    check_restricted_double_shuffle,
    cusp_decomposition_demo,
    run_default_suite,
)

# the identity behind G(5) = 2 G(2,3) + 6 G_sha(1,4): multiply two
# depth-one series with both products and compare the expansions
r = check_restricted_double_shuffle(IndexWord(1, [(2, 0)]), IndexWord(1, [(3, 0)]), M=12)
print(f"double shuffle {r.parameters['words']}: residual {r.residual:.2e} -> {r.verdict}")

# summing a level-2 series over all residue choices collapses it to a
# level-1 series in q^2
r = check_distribution(2, (2,), M=12)
print(f"distribution (2;*): residual {r.residual:.2e}, "
      f"exact divisor part: {r.details['exact_divisor_part']}")

# the weight 12 combination of double Eisenstein series is a cusp form;
# the fitted scalar against Delta(q)/680 is reported, not absorbed
r = cusp_decomposition_demo(M=12)
print(f"cusp demo: residual {r.residual:.2e}, fitted scalar {r.details['fitted_scalar'][0]}")

# the full default suite
print("\ndefault suite:")
for rep in run_default_suite(M=12):
    print(f"  {rep.verdict:4s} {rep.relation:14s} {rep.parameters}")
