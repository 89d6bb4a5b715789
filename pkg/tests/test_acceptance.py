"""Acceptance criteria, one test each.

Run ``pytest tests/test_acceptance.py`` and read the "acceptance criteria"
section of the terminal summary, or run this file directly.
"""

import random
import time

import mpmath

from sturmpal.exactnum import QuadIrr, cf_expand
from sturmpal.induction import default_max_steps, regrow_palindrome, run_palindromic_induction, run_rauzy_induction
from sturmpal.subst import (
    CUT,
    E,
    G,
    G_TILDE,
    PHI_FIB,
    Substitution,
    alpha_from_incidence,
    alpha_from_substitution,
    expand_two_sided,
    incidence,
)
from sturmpal.verify import PrecisionBudget, oracle_window
from sturmpal.words import (
    RotationSystem,
    SymmetryType,
    balance_check,
    check_palindrome,
    code_window,
    factor_complexity,
    palindrome_system,
    palindrome_window,
)

from _oracles import mp_cf, random_quadratic
from _report import criterion

GOLDEN_SLOPE = QuadIrr(3, -1, 5, 2)
ROOT2_M1 = QuadIrr(-1, 1, 2)
ONE = SymmetryType.ABOUT_ONE

# 20 random slopes shared by criteria 3 and 4
SLOPES = [random_quadratic(random.Random(1000 + i), d_max=50, bound=1000) for i in range(20)]


@criterion(1, "Fibonacci two-sided fixed point equals the about-one coding over [-10^4, 10^4] in < 5 s")
def test_criterion_1_fibonacci_fixed_point():
    radius = 10**4
    t0 = time.perf_counter()
    w = expand_two_sided(PHI_FIB, 1, 0, radius)
    elapsed = time.perf_counter() - t0
    coded = code_window(palindrome_system(GOLDEN_SLOPE, ONE), -radius, radius)
    assert (w.lo, w.hi) == (-radius, radius)
    mismatches = sum(a != b for a, b in zip(w.letters, coded.letters))
    assert mismatches == 0 and len(w) == len(coded) == 2 * radius + 1
    assert elapsed < 5, elapsed
    return f"0 mismatches, {elapsed:.3f} s"


@criterion(2, "palindromic induction on (3-sqrt5)/2 about one gives period G,E,G~,E,G,E and phi 0>00101;1>001")
def test_criterion_2_induction_recovers_phi():
    result = run_palindromic_induction(GOLDEN_SLOPE, ONE)
    assert result.preperiod == ()
    assert [s.applied for s in result.period] == [G, E, G_TILDE, E, G, E]
    assert result.phi == Substitution("00101", "001")


@criterion(3, "20 random quadratic slopes x 3 types: cycle within bound, regrowth at radius 2000 equals coding")
def test_criterion_3_regrowth_matches_coding():
    worst = 0.0
    for alpha in SLOPES:
        bound = default_max_steps(alpha)
        assert bound == 10 * len(cf_expand(alpha)) + 60
        for sym in SymmetryType:
            result = run_palindromic_induction(alpha, sym, max_steps=bound)
            assert len(result.steps) <= bound
            grown = regrow_palindrome(result, radius=2000)
            coded = palindrome_window(alpha, sym, 2000)
            assert (grown.lo, grown.hi) == sym.span(2000)
            assert grown == coded, (alpha, sym)
            worst = max(worst, len(result.steps) / bound)
    return f"60 runs, longest run used {worst:.0%} of its step bound"


@criterion(4, "frequency equation of every induced phi returns the cycle-start slope; Fibonacci depth-12 frequency within 1e-4")
def test_criterion_4_frequency_equation():
    runs = 0
    for alpha in SLOPES + [GOLDEN_SLOPE, ROOT2_M1]:
        for sym in SymmetryType:
            result = run_palindromic_induction(alpha, sym)
            m = result.phi_incidence
            assert alpha_from_incidence(m) == result.cycle_start.alpha
            if m.a + m.b + m.c + m.d <= 10**5:
                # small enough to build: the composed images agree with the matrix product
                assert incidence(result.phi) == m
                assert alpha_from_substitution(result.phi) == result.cycle_start.alpha
            runs += 1
    a = GOLDEN_SLOPE
    assert a * a - 3 * a + 1 == 0 and alpha_from_substitution(PHI_FIB) == a
    w = "0"
    for _ in range(12):
        w = PHI_FIB(w)
    freq = w.count("1") / len(w)
    assert abs(freq - float(a)) <= 1e-4
    return f"{runs} runs, depth-12 error {abs(freq - float(a)):.1e}"


@criterion(5, "continued fractions of sqrt2, (1+sqrt5)/2, (3-sqrt5)/2 match the 50-digit oracle")
def test_criterion_5_continued_fractions():
    cases = [
        (QuadIrr(0, 1, 2), (1,), (2,)),
        (QuadIrr(1, 1, 5, 2), (), (1,)),
        (GOLDEN_SLOPE, (0, 2), (1,)),
    ]
    for x, pre, per in cases:
        e = cf_expand(x)
        assert (e.preperiod, e.period) == (pre, per)
        with mpmath.workdps(50):
            numeric = mp_cf(x, 40, dps=50)
        unrolled = list(pre) + list(per) * 40
        assert len(numeric) >= 30 and numeric == unrolled[:len(numeric)]


@criterion(6, "5000-letter windows: p(n) = n+1 and balanced for n <= 15; three palindromes exact at radius 5000")
def test_criterion_6_sturmian_sanity():
    slopes = [GOLDEN_SLOPE, ROOT2_M1] + SLOPES[:3]
    for alpha in slopes:
        w = code_window(RotationSystem(alpha, 0), 0, 4999)
        assert len(w) == 5000
        for n in range(16):
            assert factor_complexity(w, n) == n + 1, (alpha, n)
        for n in range(1, 16):
            assert balance_check(w, n), (alpha, n)
        for sym in SymmetryType:
            assert check_palindrome(palindrome_window(alpha, sym, 5000), sym), (alpha, sym)


@criterion(7, "numeric oracle equals exact coding on 200 random windows of at most 10^4 letters")
def test_criterion_7_oracle_agreement():
    rng = random.Random(7007)
    escalated = 0
    letters = 0
    for _ in range(200):
        alpha = random_quadratic(rng)
        start = (alpha * rng.randint(-100, 100) / rng.randint(1, 100) + QuadIrr(rng.randint(0, 99), 0, 1, 100)).floor_frac()[1]
        sys_ = RotationSystem(alpha, start)
        size = rng.randint(1, 10**4)
        lo = rng.randint(-10**5, 10**5)
        w, used = oracle_window(sys_, lo, lo + size - 1, PrecisionBudget())
        assert w == code_window(sys_, lo, lo + size - 1), sys_
        escalated += used > PrecisionBudget().digits
        letters += size
    return f"{letters} letters, {escalated} windows needed escalation"


@criterion(8, "classical induction: golden period 2 with phi 0>10;1>0, sqrt2-1 orbit of period 3, exact frequencies")
def test_criterion_8_classical_rauzy():
    golden = run_rauzy_induction(GOLDEN_SLOPE)
    assert golden.preperiod == () and len(golden.period) == 2
    assert [s.applied for s in golden.period] == [CUT, E]
    assert golden.phi == Substitution("10", "0")
    assert alpha_from_substitution(golden.phi) == golden.cycle_start == GOLDEN_SLOPE

    root = run_rauzy_induction(ROOT2_M1)
    orbit = [s.before for s in root.period]
    assert root.preperiod == () and len(root.period) == 3
    assert orbit == [ROOT2_M1, 1 / QuadIrr(0, 1, 2), 1 - 1 / QuadIrr(0, 1, 2)]
    assert root.period[-1].after == ROOT2_M1
    assert alpha_from_substitution(root.phi) == root.cycle_start == ROOT2_M1


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q"]))
