"""Exact computer-algebra kernel for multiple Eisenstein series of level N.

The package works over the cyclotomic field Q(eta), eta = exp(2*pi*i/N),
with exact rational coordinates throughout the algebraic layer.  It provides
the word algebras of double indices with their four products, the level-N
coproduct and antipode, exact truncated q-expansions of the multiple divisor
generating series, high-precision evaluation of the underlying zeta and
Lerch values, and the Fourier assembly of the multiple Eisenstein series
together with executable checks of the identities that tie these layers
together.
"""

from .cyclo import CycloNum, cyclotomic_polynomial, phi_degree, root_power
from .words import (
    IndexWord,
    LetterWord,
    LinComb,
    index_to_letters,
    letters_to_index,
)
from .products import harmonic, shuffle, shuffle_reg0, tast, tsha
from .hopf import TensorComb, antipode_sum, convolve, coproduct_mu, counit
from .qseries import MultiSeries, NormalizedDivisor, QSeries, g_hat, g_sha_hat, h_hat
from .numerics import (
    DEFAULT_CTX,
    PrecisionCtx,
    comb_value,
    mlv_ast_numeric,
    mlv_sha_numeric,
    psi_mono_numeric,
    psi_multi_numeric,
    psi_multi_reduction,
    zeta_numeric,
    zeta_tsha,
)
from .eisenstein import (
    FourierExpansion,
    G_fourier,
    G_lattice_oracle,
    G_sha_fourier,
    fourier_eval,
)
from .relations import (
    RelationReport,
    check_antipode_zeta,
    check_distribution,
    check_gen_function_identity,
    check_restricted_double_shuffle,
    check_sum_formula,
    check_weighted_sum_formula,
    cusp_decomposition_demo,
    run_default_suite,
)

__version__ = "0.1.0"

__all__ = [
    "CycloNum",
    "cyclotomic_polynomial",
    "phi_degree",
    "root_power",
    "IndexWord",
    "LetterWord",
    "LinComb",
    "index_to_letters",
    "letters_to_index",
    "shuffle",
    "harmonic",
    "tast",
    "tsha",
    "shuffle_reg0",
    "TensorComb",
    "coproduct_mu",
    "counit",
    "convolve",
    "antipode_sum",
    "QSeries",
    "NormalizedDivisor",
    "MultiSeries",
    "g_hat",
    "g_sha_hat",
    "h_hat",
    "PrecisionCtx",
    "DEFAULT_CTX",
    "zeta_numeric",
    "zeta_tsha",
    "mlv_sha_numeric",
    "mlv_ast_numeric",
    "comb_value",
    "psi_mono_numeric",
    "psi_multi_numeric",
    "psi_multi_reduction",
    "FourierExpansion",
    "G_fourier",
    "G_sha_fourier",
    "fourier_eval",
    "G_lattice_oracle",
    "RelationReport",
    "check_restricted_double_shuffle",
    "check_distribution",
    "check_sum_formula",
    "check_weighted_sum_formula",
    "check_gen_function_identity",
    "check_antipode_zeta",
    "cusp_decomposition_demo",
    "run_default_suite",
    "__version__",
]
