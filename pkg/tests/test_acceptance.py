"""Exit criteria: every check is exact and runs at the stated desk-scale range."""

import random
import time
from fractions import Fraction
from math import factorial

from hookcontent.cli import show
from hookcontent.corners import (
    RationalPoint,
    add_box_transitions,
    evaluate_expansion,
    hook_ratio,
    pf_expand,
    pf_moment,
    q_k,
    q_shift,
)
from hookcontent.diffop import PowerSumSpec, apply_D, detect_polynomial, inverse_hook, telescoped_sum, verify_telescope
from hookcontent.identities import IdentityCheck, run_identity
from hookcontent.partitions import (
    SkewShape,
    StrictPartition,
    count_ssyt,
    count_ssyt_bruteforce,
    count_ssyt_skew,
    enumerate_strict,
    hook_product,
)

P = StrictPartition
MU_SET = [P(), P((1,)), P((3, 1)), P((4, 2, 1))]
SEED = 20240611


def test_01_figure_one_tables(criterion):
    with criterion("1. Figure 1 hook and content tables for (7,5,4,1), < 1 ms"):
        lam = P((7, 5, 4, 1))
        hooks = [list(map(int, r.split())) for r in show(lam, "hooks").splitlines()]
        assert hooks == [[12, 11, 8, 7, 5, 4, 1], [9, 6, 5, 3, 2], [5, 4, 2, 1], [1]]
        cont = [list(map(int, r.split())) for r in show(lam, "contents").splitlines()]
        assert cont == [list(range(1, p + 1)) for p in lam.parts]
        timings = []
        for _ in range(20):
            start = time.perf_counter()
            show(lam, "hooks")
            timings.append(time.perf_counter() - start)
        assert min(timings) < 1e-3


def test_02_normalization(criterion):
    with criterion("2. sum 2^(n-l) f^2 = n! for n <= 18, < 10 s"):
        start = time.perf_counter()
        for n in range(19):
            total = sum(2 ** (n - lam.length) * count_ssyt(lam) ** 2 for lam in enumerate_strict(n))
            assert total == factorial(n)
        assert time.perf_counter() - start < 10


def test_03_hook_formula_and_skew_dp_vs_bruteforce(criterion):
    with criterion("3. hook formula (|lam| <= 11) and skew DP (|lam| <= 9) equal brute force, < 60 s"):
        start = time.perf_counter()
        for n in range(12):
            for lam in enumerate_strict(n):
                assert count_ssyt(lam) == count_ssyt_bruteforce(SkewShape(lam))
        cache = {}
        for n in range(10):
            for lam in enumerate_strict(n):
                for k in range(n + 1):
                    for mu in enumerate_strict(k):
                        if lam.contains(mu):
                            shape = SkewShape(lam, mu)
                            assert count_ssyt_skew(shape, cache) == count_ssyt_bruteforce(shape)
        assert time.perf_counter() - start < 60


def test_04_skew_hook_sum(criterion):
    with criterion("4. sum f'/H_lam = 1/H_mu, mu in {-,1,21,421}, n <= 9"):
        for mu in (P(), P((1,)), P((2, 1)), P((4, 2, 1))):
            cache = {}
            for n in range(10):
                assert telescoped_sum(inverse_hook(), mu, n, cache) == Fraction(1, hook_product(mu))


def test_05_hook_ratio(criterion):
    with criterion("5. corner hook ratio equals H_lam/H_lam+ for |lam| <= 12"):
        for n in range(13):
            for lam in enumerate_strict(n):
                for t in add_box_transitions(lam):
                    assert hook_ratio(lam, t.index) == Fraction(hook_product(lam), hook_product(t.partition))


def test_06_D_kills_inverse_hook(criterion):
    with criterion("6. D(1/H)(lam) = 0 for |lam| <= 12"):
        g = inverse_hook()
        for n in range(13):
            for lam in enumerate_strict(n):
                assert apply_D(g, lam) == 0


def test_07_q1_is_size(criterion):
    with criterion("7. q_1(lam) = |lam| for |lam| <= 14"):
        for n in range(15):
            for lam in enumerate_strict(n):
                assert q_k(lam, 1) == n


def test_08_content_binomial(criterion):
    with criterion("8. content-binomial identity, k <= 4, n <= 14, < 60 s"):
        start = time.perf_counter()
        for k in range(5):
            rep = run_identity(IdentityCheck("content-binomial", 0, 14, k=k))
            assert rep.passed
            for r in rep.rows:
                assert r.rhs == Fraction(2**k, factorial(k + 1)) * (
                    factorial(r.n) // (factorial(k + 1) * factorial(r.n - k - 1)) if r.n >= k + 1 else 0
                )
        assert time.perf_counter() - start < 60


def test_09_k1_skew(criterion):
    with criterion("9. first content moment over lam/mu = binom(n,2) + n|mu|, n <= 9"):
        for mu in MU_SET:
            rep = run_identity(IdentityCheck("k1-skew", 0, 9, mu=mu))
            assert rep.passed, [(r.n, r.lhs, r.rhs) for r in rep.rows if not r.passed]


def test_10_k2_skew(criterion):
    with criterion("10. second content moment over lam/mu closed form with q_2(mu), n <= 9"):
        for mu in MU_SET:
            rep = run_identity(IdentityCheck("k2-skew", 0, 9, mu=mu))
            assert rep.passed, [(r.n, r.lhs, r.rhs) for r in rep.rows if not r.passed]


def test_11_telescope_roundtrip(criterion):
    with criterion("11. binomial expansion in D^k g(mu) and its inversion agree, n <= 6"):
        functions = [
            inverse_hook(),
            PowerSumSpec.product((1,)),
            PowerSumSpec.product((2,)),
            PowerSumSpec.product((1, 1)),
        ]
        for g in functions:
            for mu in (P(), P((2, 1))):
                report = verify_telescope(g, mu, 6)
                assert report.passed, report.first_counterexample


def test_12_partial_fraction_expansion(criterion):
    with criterion("12. exp-series coefficients reproduce the kernel moments on 50 seeded points"):
        assert pf_expand(0) == {(): 1}
        assert pf_expand(1) == {(1,): 1}
        assert pf_expand(2) == {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)}
        rng = random.Random(SEED)
        for _ in range(50):
            m = rng.randint(0, 5)
            pool = sorted({Fraction(rng.randint(-40, 40), rng.randint(1, 5)) for _ in range(6 * m + 10)})
            a = sorted(rng.sample(pool, m + 1))
            b = sorted(Fraction(rng.randint(-40, 40), rng.randint(1, 5)) for _ in range(m))
            p = RationalPoint(tuple(a), tuple(b))
            for k in range(7):
                assert evaluate_expansion(pf_expand(k), p) == pf_moment(p, k)


def test_13_q_shift(criterion):
    with criterion("13. q_k shift trinomial equals q_k(lam+) - q_k(lam), |lam| <= 10, k <= 5"):
        for n in range(11):
            for lam in enumerate_strict(n):
                for t in add_box_transitions(lam):
                    for k in range(6):
                        assert q_shift(lam, t.index, k) == q_k(t.partition, k) - q_k(lam, k)


def test_14_polynomiality(criterion):
    with criterion("14. polynomial detected on n = 0..14 and n = 15 predicted exactly"):
        for exponents in ((1,), (2,), (1, 1)):
            for nu in ((), (1,)):
                spec = PowerSumSpec.product(exponents, nu)
                for mu in (P(), P((2, 1))):
                    cache = {}
                    values = [telescoped_sum(spec, mu, n, cache) for n in range(16)]
                    fit = detect_polynomial(values[:15])
                    assert fit.is_polynomial and fit.vanishing_orders >= 3
                    assert fit(15) == values[15]
