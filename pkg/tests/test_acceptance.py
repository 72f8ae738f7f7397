"""End-to-end acceptance suite.

Nine criteria covering the exact algebra, the Hopf layer, the q-series
engine, the analytic evaluators, the Fourier assembly with its lattice
oracle, the named relation families, and the weight-12 cusp form demo.
Each test carries its runtime budget as a final assertion.
"""

import itertools
import time
from fractions import Fraction

from mpmath import mp

from mes import (
    CycloNum,
    G_fourier,
    G_lattice_oracle,
    G_sha_fourier,
    IndexWord,
    LetterWord,
    LinComb,
    PrecisionCtx,
    TensorComb,
    antipode_sum,
    check_antipode_zeta,
    comb_value,
    coproduct_mu,
    counit,
    cusp_decomposition_demo,
    fourier_eval,
    g_hat,
    g_sha_hat,
    harmonic,
    index_to_letters,
    letters_to_index,
    mlv_ast_numeric,
    psi_mono_numeric,
    psi_multi_numeric,
    psi_multi_reduction,
    run_default_suite,
    shuffle,
    shuffle_reg0,
    tast,
    tsha,
    zeta_numeric,
    zeta_tsha,
)
from mes.words import X, pi, rho, rho_inv, pi_inv

CTX = PrecisionCtx(precision=192, series_cutoff=100_000)


def all_index_words(N, max_weight, max_depth):
    out = []
    for wt in range(1, max_weight + 1):
        for depth in range(1, min(max_depth, wt) + 1):
            for cuts in itertools.combinations(range(1, wt), depth - 1):
                bounds = (0,) + cuts + (wt,)
                ns = [bounds[i + 1] - bounds[i] for i in range(depth)]
                for avec in itertools.product(range(N), repeat=depth):
                    out.append(IndexWord(N, list(zip(ns, avec))))
    return out


def to_c(c, prec):
    if isinstance(c, CycloNum):
        return c.to_complex(prec)
    return mp.mpc(c)


def test_acceptance_1_coproduct_golden():
    start = time.monotonic()
    w = IndexWord(2, [(2, 1), (3, 1)])
    unit = IndexWord.unit(2)
    expected = TensorComb(2)
    expected._add_term((unit, w), 1)
    expected._add_term((IndexWord(2, [(2, 0)]), IndexWord(2, [(3, 1)])), 1)
    expected._add_term((IndexWord(2, [(2, 1)]), IndexWord(2, [(3, 1)])), 1)
    expected._add_term((IndexWord(2, [(3, 0)]), IndexWord(2, [(2, 1)])), 3)
    expected._add_term((w, unit), 1)
    assert coproduct_mu(w) == expected
    assert time.monotonic() - start < 1


def test_acceptance_2_fourier_golden():
    start = time.monotonic()
    N, M = 2, 10
    w = IndexWord(N, [(2, 1), (3, 1)])
    fe = G_fourier(w, M, CTX)
    with mp.workprec(CTX.precision + 16):
        prec = CTX.precision + 16
        pref = lambda wt: (-2j * mp.pi / N) ** wt
        z23 = zeta_numeric(w, CTX)
        z20 = zeta_numeric(IndexWord(N, [(2, 0)]), CTX)
        z21 = zeta_numeric(IndexWord(N, [(2, 1)]), CTX)
        z30 = zeta_numeric(IndexWord(N, [(3, 0)]), CTX)
        g31 = g_hat(IndexWord(N, [(3, 1)]), M).series
        g21 = g_hat(IndexWord(N, [(2, 1)]), M).series
        g2311 = g_hat(w, M).series
        for m in range(M + 1):
            want = mp.mpc(z23 if m == 0 else 0)
            want += (z20 + z21) * pref(3) * to_c(g31.c[m], prec)
            want += 3 * z30 * pref(2) * to_c(g21.c[m], prec)
            want += pref(5) * to_c(g2311.c[m], prec)
            assert abs(fe.coeffs[m] - want) < mp.mpf("1e-8"), m
    assert time.monotonic() - start < 30


def test_acceptance_3_exact_algebra_suite():
    start = time.monotonic()

    # commutativity, weight of each factor <= 3 so products stay within 6
    for N in (1, 2, 3):
        words = all_index_words(N, 3, 2)
        for i, u in enumerate(words):
            for v in words[i:]:
                assert harmonic(u, v) == harmonic(v, u)
                assert tast(u, v) == tast(v, u)
                assert tsha(u, v) == tsha(v, u)
                lu, lv = index_to_letters(u), index_to_letters(v)
                assert shuffle(lu, lv) == shuffle(lv, lu)

    # associativity on triples of total weight <= 6
    for N in (1, 2, 3):
        words = all_index_words(N, 2, 2)
        for u, v, w in itertools.combinations_with_replacement(words, 3):
            if u.weight + v.weight + w.weight > 6:
                continue
            for op in (harmonic, tast, tsha):
                assert op(op(u, v), w) == op(u, op(v, w))
            lu, lv, lw = map(index_to_letters, (u, v, w))
            assert shuffle(shuffle(lu, lv), lw) == shuffle(lu, shuffle(lv, lw))

    # tast through the finite Fourier transform, tsha through differences
    for N in (2, 3):
        words = all_index_words(N, 3, 2)[:12]
        for u, v in itertools.combinations(words, 2):
            assert tast(u, v) == pi_inv(harmonic(pi(u), pi(v)))
            sha = shuffle(
                rho(u).map_words(index_to_letters), rho(v).map_words(index_to_letters)
            )
            assert tsha(u, v) == rho_inv(sha.map_words(letters_to_index))

    # reg0 is a shuffle algebra homomorphism on h^1
    for N in (1, 2):
        letter_words = []
        alphabet = [X] + list(range(N))
        for length in (1, 2, 3):
            for tail in itertools.product(alphabet, repeat=length - 1):
                for head in range(N):
                    letter_words.append(LetterWord(N, (head,) + tail))
        for u, v in itertools.combinations_with_replacement(letter_words, 2):
            assert shuffle_reg0(shuffle(u, v)) == shuffle(shuffle_reg0(u), shuffle_reg0(v))

    # antipode identity, every letter word of length <= 6
    for N in (1, 2, 3):
        alphabet = [X] + list(range(N))
        for length in range(1, 7):
            for letters in itertools.product(alphabet, repeat=length):
                assert not antipode_sum(LetterWord(N, letters)).terms

    assert time.monotonic() - start < 120


def test_acceptance_4_hopf_suite():
    start = time.monotonic()
    words = all_index_words(2, 6, 3)

    for w in words:
        tc = coproduct_mu(w)
        left_unit = LinComb(2)
        right_unit = LinComb(2)
        for (left, right), c in tc:
            assert left.weight + right.weight == w.weight
            if counit(left):
                left_unit._add_term(right, c)
            if counit(right):
                right_unit._add_term(left, c)
        assert left_unit == LinComb.of(w)
        assert right_unit == LinComb.of(w)

    def triple(tc, side):
        out = {}
        for (left, right), c in tc:
            for (a, b), d in coproduct_mu(left if side == "l" else right):
                key = (a, b, right) if side == "l" else (left, a, b)
                tot = out.get(key, CycloNum.zero(2)) + c * d
                if tot.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = tot
        return out

    for w in words:
        tc = coproduct_mu(w)
        assert triple(tc, "l") == triple(tc, "r"), str(w)

    def coproduct_of_comb(comb):
        out = TensorComb(comb.level)
        for word, c in comb.sorted_items():
            out = out + coproduct_mu(word).scale(c)
        return out

    small = [w for w in words if w.weight <= 4]
    for i, u in enumerate(small):
        for v in small[i:]:
            if u.weight + v.weight > 5:
                continue
            assert coproduct_of_comb(tsha(u, v)) == coproduct_mu(u).mul(coproduct_mu(v))

    assert time.monotonic() - start < 300


def test_acceptance_5_qseries_suite():
    start = time.monotonic()

    def exact_equal(a, b):
        fa = [c.as_fraction() if isinstance(c, CycloNum) else Fraction(c) for c in a.c]
        fb = [c.as_fraction() if isinstance(c, CycloNum) else Fraction(c) for c in b.c]
        return fa == fb

    # regularized series agree with the plain ones on strictly admissible words
    strict = [w for w in all_index_words(1, 6, 2) if w.mes_admissible()]
    strict += [w for w in all_index_words(2, 5, 2) if w.mes_admissible()]
    strict.append(IndexWord(1, [(2, 0), (2, 0), (2, 0)]))
    for w in strict:
        a, b = g_hat(w, 30), g_sha_hat(w, 30)
        assert a.weight == b.weight
        diff = a.series - b.series
        assert all(not c for c in diff.c), str(w)

    # tsha homomorphy of the regularized series
    pairs = [
        (IndexWord(1, [(1, 0)]), IndexWord(1, [(2, 0)])),
        (IndexWord(2, [(1, 1)]), IndexWord(2, [(2, 0)])),
        (IndexWord(2, [(1, 0)]), IndexWord(2, [(1, 1)])),
        (IndexWord(2, [(2, 1)]), IndexWord(2, [(2, 1)])),
    ]
    M = 20
    for u, v in pairs:
        lhs = None
        for word, c in tsha(u, v).sorted_items():
            term = g_sha_hat(word, M).series.scale(c)
            lhs = term if lhs is None else lhs + term
        rhs = g_sha_hat(u, M).series * g_sha_hat(v, M).series
        diff = lhs - rhs
        assert all(
            not c or (isinstance(c, CycloNum) and c.is_zero()) for c in diff.c
        ), (str(u), str(v))

    # exact q-level distribution
    cases = [(2, ns) for ns in [(1,), (2,), (3,), (1, 1), (2, 1), (2, 2)]]
    cases += [(3, (1,)), (3, (2,))]
    for N, ns in cases:
        M2 = 18
        wt = sum(ns)
        total = None
        for avec in itertools.product(range(N), repeat=len(ns)):
            s = g_sha_hat(IndexWord(N, list(zip(ns, avec))), M2).series
            total = s if total is None else total + s
        base = g_sha_hat(IndexWord(1, [(n, 0) for n in ns]), M2).series
        want = base.dilate(N, M2).scale(Fraction(N**wt))
        assert exact_equal(total, want), (N, ns)

    assert time.monotonic() - start < 300


def test_acceptance_6_analytic_suite():
    start = time.monotonic()
    tol8 = mp.mpf("1e-8")
    tol6 = mp.mpf("1e-6")

    # three evaluation routes to the same zeta value
    samples = [
        IndexWord(1, [(2, 0)]),
        IndexWord(1, [(3, 0)]),
        IndexWord(1, [(1, 0), (2, 0)]),
        IndexWord(1, [(2, 0), (3, 0)]),
        IndexWord(2, [(2, 1)]),
        IndexWord(2, [(3, 0)]),
        IndexWord(2, [(1, 1), (2, 1)]),
        IndexWord(3, [(2, 1)]),
        IndexWord(3, [(2, 2)]),
        IndexWord(4, [(2, 1)]),
        IndexWord(4, [(3, 2)]),
    ]
    with mp.workprec(CTX.precision + 16):
        for w in samples:
            direct = mp.mpc(zeta_numeric(w, CTX))
            via_sha = mp.mpc(zeta_tsha(w, CTX))
            via_ast = comb_value(pi(w), lambda u: mlv_ast_numeric(u, CTX), CTX)
            assert abs(direct - via_sha) < tol8, str(w)
            assert abs(direct - via_ast) < tol8, str(w)

        # stuffle: the twisted harmonic product matches products of values
        stuffle_pairs = [
            (IndexWord(1, [(2, 0)]), IndexWord(1, [(3, 0)])),
            (IndexWord(2, [(2, 1)]), IndexWord(2, [(2, 1)])),
            (IndexWord(3, [(2, 1)]), IndexWord(3, [(3, 2)])),
        ]
        for u, v in stuffle_pairs:
            lhs = comb_value(tast(u, v), lambda w_: zeta_numeric(w_, CTX), CTX)
            rhs = mp.mpc(zeta_numeric(u, CTX)) * zeta_numeric(v, CTX)
            assert abs(lhs - rhs) < tol8, (str(u), str(v))

        # monotangent q-expansion, both sides
        for tau in (mp.mpc(0, 1), mp.mpc("0.5", "1.5")):
            q = mp.expjpi(2 * tau)
            for N in (1, 2, 3):
                eta = mp.expjpi(mp.mpf(2) / N)
                for n in range(1, 6):
                    for a in range(N):
                        lhs = psi_mono_numeric(N, n, a, N * tau, CTX)
                        rhs = mp.mpc(0)
                        for c in range(1, 300):
                            rhs += c ** (n - 1) * eta ** (a * c) * q**c
                        rhs *= (-2j * mp.pi / N) ** n / mp.factorial(n - 1)
                        if n == 1:
                            rhs -= mp.pi * 1j / N
                        assert abs(lhs - rhs) < tol8, (N, n, a)

        # multitangent reduction against the direct window sum
        for N, ns, avec, tau in [
            (1, (2, 2), (0, 0), mp.mpc(0, 2)),
            (2, (2, 3), (1, 1), mp.mpc(0, 1)),
        ]:
            direct = psi_multi_numeric(N, ns, avec, tau, CTX)
            reduced = psi_multi_reduction(N, ns, avec, tau, CTX)
            assert abs(direct - reduced) < tol6, (N, ns)

    # antipode vanishing for zeta values
    antipode_cases = [
        ((2, 2), (1, 1)),
        ((2, 3), (1, 0)),
        ((3, 2), (0, 1)),
        ((2, 2, 2), (0, 1, 1)),
        ((2, 2, 3), (1, 1, 0)),
    ]
    for ns, avec in antipode_cases:
        r = check_antipode_zeta(2, ns, avec, CTX, tolerance=1e-6)
        assert r.passed, (ns, avec)

    assert time.monotonic() - start < 600


def test_acceptance_7_lattice_oracle():
    start = time.monotonic()
    cases = [
        IndexWord(1, [(4, 0)]),
        IndexWord(2, [(4, 1)]),
        IndexWord(2, [(3, 1), (3, 1)]),
    ]
    with mp.workprec(96):
        for w in cases:
            fe = G_fourier(w, 24, CTX)
            for tau in (mp.mpc(0, 1), mp.mpc(0, 2)):
                got = fourier_eval(fe, tau, CTX)
                oracle = G_lattice_oracle(w, tau)
                assert abs(got - oracle) < mp.mpf("1e-3"), (str(w), str(tau))
    assert time.monotonic() - start < 600


def test_acceptance_8_relation_suite():
    start = time.monotonic()
    reports = run_default_suite(15, CTX, tolerance=1e-6)
    assert all(r.passed for r in reports), [r.to_json() for r in reports if not r.passed]

    ds = [r for r in reports if r.relation == "double-shuffle"]
    assert len(ds) >= 5
    assert any(
        r.parameters["N"] == 1 and set(r.parameters["words"]) == {"(2;0)", "(3;0)"}
        for r in ds
    )
    for rel, count in [
        ("distribution", 2), ("sum-formula", 3), ("weighted-sum", 2), ("genfun", 2),
    ]:
        assert sum(1 for r in reports if r.relation == rel) >= count, rel

    # the depth 1 x depth 1 display: G(5) = 2 G(2,3) + 6 G_sha(1,4) at level 1
    M = 15
    g5 = G_fourier(IndexWord(1, [(5, 0)]), M, CTX)
    g23 = G_fourier(IndexWord(1, [(2, 0), (3, 0)]), M, CTX)
    g14 = G_sha_fourier(IndexWord(1, [(1, 0), (4, 0)]), M, CTX)
    with mp.workprec(CTX.precision + 16):
        for m in range(M + 1):
            diff = g5.coeffs[m] - (2 * g23.coeffs[m] + 6 * g14.coeffs[m])
            assert abs(diff) < mp.mpf("1e-6"), m
    assert time.monotonic() - start < 1200


def test_acceptance_9_cusp_form_demo():
    start = time.monotonic()
    from mes.relations import _delta_coeffs

    # Delta(q) = q prod (1-q^i)^24, expanded exactly
    tau_coeffs = [1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920]
    assert _delta_coeffs(10) == [0] + tau_coeffs

    report = cusp_decomposition_demo(15, CTX, tolerance=1e-6)
    assert report.passed
    assert report.details["compared_orders"] == 10
    scalar = report.details["fitted_scalar"]
    assert abs(scalar[0] - Fraction(17, 16)) < 1e-9 and abs(scalar[1]) < 1e-9
    assert time.monotonic() - start < 600
