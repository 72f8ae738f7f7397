"""High precision evaluation of zeta values, twisted L-values and tangent sums."""

from mpmath import mp

from mes import (
    IndexWord,
    LinComb,
    PrecisionCtx,
    comb_value,
    index_to_letters,
    mlv_ast_numeric,
    mlv_sha_numeric,
    psi_mono_numeric,
    psi_multi_numeric,
    psi_multi_reduction,
    zeta_numeric,
    zeta_tsha,
)

CTX = PrecisionCtx(precision=128, series_cutoff=20_000)
TIGHT = mp.mpf(2) ** -90


def close(a, b, tol=TIGHT):
    with mp.workprec(160):
        return abs(mp.mpc(a) - mp.mpc(b)) < tol


def test_depth_one_classical_values():
    with mp.workprec(160):
        assert close(zeta_numeric(IndexWord(1, [(2, 0)]), CTX), mp.pi**2 / 6)
        assert close(zeta_numeric(IndexWord(1, [(3, 0)]), CTX), mp.apery)
        assert close(zeta_numeric(IndexWord(1, [(4, 0)]), CTX), mp.pi**4 / 90)


def test_level_two_congruence_values():
    with mp.workprec(160):
        # odd and even sublattice pieces of zeta(2)
        assert close(zeta_numeric(IndexWord(2, [(2, 1)]), CTX), mp.pi**2 / 8)
        assert close(zeta_numeric(IndexWord(2, [(2, 0)]), CTX), mp.pi**2 / 24)


def test_euler_depth_two():
    # ascending convention: zeta(1,2) = zeta(3)
    with mp.workprec(160):
        got = zeta_numeric(IndexWord(1, [(1, 0), (2, 0)]), CTX)
        assert close(got, mp.apery)


def test_mlv_alternating():
    with mp.workprec(160):
        w = IndexWord(2, [(2, 1)])
        want = -mp.pi**2 / 12  # sum (-1)^m / m^2
        assert close(mlv_ast_numeric(w, CTX), want)
        assert close(mlv_sha_numeric(index_to_letters(w), CTX), want)


def test_zeta_tsha_extends_zeta():
    for pairs, N in [([(2, 0)], 1), ([(2, 1)], 2), ([(1, 0), (2, 0)], 1), ([(2, 1), (3, 0)], 2)]:
        w = IndexWord(N, pairs)
        assert close(zeta_tsha(w, CTX), zeta_numeric(w, CTX), mp.mpf(2) ** -80)


def test_comb_value_linear():
    u, v = IndexWord(1, [(2, 0)]), IndexWord(1, [(4, 0)])
    comb = LinComb.of(u, 2) + LinComb.of(v, -3)
    got = comb_value(comb, lambda w: zeta_numeric(w, CTX), CTX)
    with mp.workprec(160):
        want = 2 * mp.pi**2 / 6 - 3 * mp.pi**4 / 90
        assert close(got, want)


def test_monotangent_cotangent_formula():
    with mp.workprec(160):
        tau = mp.mpc(0, 1)
        # sum over all integers of 1/(tau+m)^2 = pi^2 / sin^2(pi tau)
        got = psi_mono_numeric(1, 2, 0, tau, CTX)
        assert close(got, (mp.pi / mp.sin(mp.pi * tau)) ** 2)
        # Eisenstein limit at n = 1: pi cot(pi tau)
        got = psi_mono_numeric(1, 1, 0, tau, CTX)
        assert close(got, mp.pi * mp.cos(mp.pi * tau) / mp.sin(mp.pi * tau))
        # congruence class a mod N via substitution m = a + kN
        got = psi_mono_numeric(3, 2, 1, tau, CTX)
        z = (tau + 1) / 3
        assert close(got, (mp.pi / 3 / mp.sin(mp.pi * z)) ** 2)


def test_monotangent_q_expansion():
    # Psi(n; a; N tau) = (-2 pi i / N)^n sum_c c^(n-1) eta^(ac) q^c / (n-1)!
    #                    - [n = 1] pi i / N      with q = exp(2 pi i tau)
    with mp.workprec(200):
        tau = mp.mpc(0, "0.5")
        q = mp.e ** (2j * mp.pi * tau)
        for N in (1, 2):
            eta = mp.e ** (2j * mp.pi / N)
            for n in (1, 2, 3, 4):
                for a in range(N):
                    lhs = psi_mono_numeric(N, n, a, N * tau, CTX)
                    rhs = mp.mpc(0)
                    for c in range(1, 400):
                        rhs += c ** (n - 1) * eta ** (a * c) * q**c
                    rhs *= (-2j * mp.pi / N) ** n / mp.factorial(n - 1)
                    if n == 1:
                        rhs -= mp.pi * 1j / N
                    assert close(lhs, rhs, mp.mpf(2) ** -80), (N, n, a)


def test_multitangent_reduction_matches_direct_sum():
    with mp.workprec(160):
        for N, ns, avec, tau in [
            (1, (2, 2), (0, 0), mp.mpc(0, 2)),
            (2, (2, 3), (1, 1), mp.mpc(0, 1)),
            (2, (3, 2), (1, 0), mp.mpc("0.2", "1.1")),
        ]:
            direct = psi_multi_numeric(N, ns, avec, tau, CTX)
            reduced = psi_multi_reduction(N, ns, avec, tau, CTX)
            assert abs(direct - reduced) < mp.mpf("1e-10"), (N, ns, avec)
