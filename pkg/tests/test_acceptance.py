"""Acceptance suite: one test per shipping criterion.

Each test prints a single PASS line on success (pytest -v shows one
PASSED/FAILED row per criterion either way); tolerances are the shipping
thresholds, not the tighter ones used in the per-module tests.
"""

import math
import warnings

import numpy as np
import pytest

from lagmin.beta2 import laguerre_poly, q_alpha2_sum, q_exact_beta2
from lagmin.core import params_new
from lagmin.errors import NonIntegerJackIndex, PrecisionWarning
from lagmin.exact import moment, q_exact, q_oracle_n2
from lagmin.jack import enumerate_partitions, jack_c_one
from lagmin.limit import LimitParams, p_limit, prefactor_diagnostics, q_limit, q_limit_closed
from lagmin.sampler import ks_two_sample, ks_validate, run_batch

from fractions import Fraction


def _report(name, detail):
    print(f"PASS {name}: {detail}")


def test_criterion_1_mean_is_inverse_n_cubed():
    """beta=2, M=N: the mean of the smallest eigenvalue is exactly 1/N^3."""
    worst = 0.0
    for n in range(2, 9):
        p = params_new(2.0, n, n)
        got = moment(p, 1)
        worst = max(worst, abs(got - n**-3.0) * n**3)
    assert worst <= 1e-12
    _report("criterion-1", f"mu_1 = 1/N^3 for N=2..8, worst rel {worst:.2e}")


def test_criterion_2_oracle_equivalence_at_n2():
    """N=2 quadrature oracle vs the partition series, |diff| <= 1e-8.

    The nominal pair list includes (beta=1, M=4) and (beta=1, M=6); at
    N=2 those have half-integer Jack index (beta=1 needs M-N odd), so the
    series route is undefined there by construction -- asserted below.
    The adjacent odd gaps (1,5) and (1,7) exercise the same nu=1/2
    regime, including the convention-pinning case m=2.
    """
    pairs = [(2.0, 2), (2.0, 3), (2.0, 4), (1.0, 5), (1.0, 7), (4.0, 3), (4.0, 4)]
    worst = 0.0
    for beta, m_dim in pairs:
        p = params_new(beta, 2, m_dim)
        for x in np.linspace(0.0, 0.5, 50):
            diff = abs(q_exact(p, float(x)) - q_oracle_n2(p, float(x)))
            worst = max(worst, diff)
    assert worst <= 1e-8
    for m_dim in (4, 6):
        with pytest.raises(NonIntegerJackIndex):
            q_exact(params_new(1.0, 2, m_dim), 0.1)
    _report("criterion-2", f"7 (beta,M) pairs on 50-pt grids, worst |diff| {worst:.2e}")


def test_criterion_3_beta2_route_agreement():
    """Determinant route vs series route at beta=2, and the explicit
    alpha=2 sum vs the determinant."""
    worst = 0.0
    for n in range(1, 7):
        for alpha in range(0, 4):
            p = params_new(2.0, n, n + alpha)
            for x in np.linspace(0.0, 1.0 / n, 50):
                diff = abs(q_exact_beta2(n, n + alpha, float(x)) - q_exact(p, float(x)))
                worst = max(worst, diff)
    assert worst <= 1e-10
    worst2 = 0.0
    for n in range(1, 7):
        for x in np.linspace(0.0, 1.0 / n, 50):
            diff = abs(q_alpha2_sum(n, float(x)) - q_exact_beta2(n, n + 2, float(x)))
            worst2 = max(worst2, diff)
    assert worst2 <= 1e-12
    _report("criterion-3", f"det-vs-series {worst:.2e}, alpha2-sum {worst2:.2e}")


def test_criterion_4_closed_form_limits():
    """q_limit vs closed forms for m=0,1 (beta in {1,2,4}) and (2,2)."""
    ys = [0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 25.0, 50.0]
    cases = [(b, m) for b in (1.0, 2.0, 4.0) for m in (0, 1)] + [(2.0, 2)]
    worst = 0.0
    for beta, m in cases:
        lp = LimitParams(beta, m)
        for y in ys:
            closed = q_limit_closed(lp, y)
            assert closed is not None
            worst = max(worst, abs(q_limit(lp, y) - closed))
    assert worst <= 1e-10
    _report("criterion-4", f"7 (beta,m) cases on 8-pt y grids, worst {worst:.2e}")


def test_criterion_5_finite_n_converges_to_limit():
    """|Q_N(y/(4N^3)) - Q_inf(y)| shrinks along N in {10,20,40} and is
    <= 0.02 at N=40 (beta=2, m in {0,1,2}).

    Known floor: the bound is unattainable at the (m=2, y=9) cell.  The
    N=40 distance there is 0.022839, confirmed to 15 digits by three
    independent routes (partition series, rational Laguerre determinant,
    alpha=2 double sum), with the limit endpoint matching the closed
    form exp(-y/4)*(I0^2 - I1^2).  The gap scales as ~0.89/N, so 0.02
    would first be met near N=46.  The assertion is kept at 0.02 and
    the cell is reported as a measured failure rather than hidden.
    """
    cells = []
    for m in (0, 1, 2):
        lp = LimitParams(2.0, m)
        for y in (1.0, 4.0, 9.0):
            diffs = []
            for n in (10, 20, 40):
                p = params_new(2.0, n, n + m)
                x = y / (4.0 * n**3)
                diffs.append(abs(q_exact(p, x) - q_limit(lp, y)))
            assert diffs[0] > diffs[1] > diffs[2], (m, y, diffs)
            cells.append((m, y, diffs[2]))
    worst_m, worst_y, worst = max(cells, key=lambda c: c[2])
    if worst <= 0.02:
        _report("criterion-5", f"9 (m,y) cells decreasing in N, max at N=40: {worst:.3e}")
    else:
        print(
            f"FAIL criterion-5: all 9 cells decrease in N, but max at N=40 is "
            f"{worst:.6f} at (m={worst_m}, y={worst_y}) > 0.02 "
            f"(three-route-verified floor; ~0.89/N decay needs N~46)"
        )
    assert worst <= 0.02, (worst_m, worst_y, worst)


def test_criterion_6_jack_normalization():
    """sum over |kappa|=k of C_kappa(1^m) = m^k."""
    worst = 0.0
    for nu in (0.5, 1.0, 2.0):
        for m in range(1, 5):
            for k in range(0, 9):
                total = math.fsum(
                    jack_c_one(kap, nu, m) for kap in enumerate_partitions(k, m)
                )
                worst = max(worst, abs(total - float(m) ** k) / float(m) ** k)
    assert worst <= 1e-10
    _report("criterion-6", f"nu in {{1/2,1,2}}, m<=4, k<=8, worst rel {worst:.2e}")


def test_criterion_7_monte_carlo_ks():
    """KS at the 1% level with 2e4 samples: four exact-route ensembles
    plus one split-half self-consistency case."""
    n_samples = 20000
    details = []
    for beta, n, m_dim in [(2.0, 3, 3), (2.0, 3, 5), (1.0, 4, 7), (4.0, 2, 3)]:
        p = params_new(beta, n, m_dim)
        batch = run_batch(p, n_samples, seed=20260819, workers=4)
        rep = ks_validate(batch, lambda x: 1.0 - q_exact(p, x), level=0.01)
        assert rep.passed, (beta, n, m_dim, rep)
        details.append(f"({beta:g},{n},{m_dim}) p={rep.p_value:.3f}")
    p = params_new(0.7, 3, 5)
    batch = run_batch(p, n_samples, seed=20260819, workers=4)
    half = n_samples // 2
    rep = ks_two_sample(batch.values[:half], batch.values[half:], level=0.01)
    assert rep.passed, rep
    details.append(f"(0.7,3,5) split-half p={rep.p_value:.3f}")
    _report("criterion-7", "; ".join(details))


def test_criterion_8_exact_rational_identities():
    """Differential-difference relation and the pochhammer combination
    identity hold exactly in rational arithmetic."""

    def poch(a, k):
        out = Fraction(1)
        for t in range(k):
            out *= a + t
        return out

    for n in range(0, 13):
        for rho in range(0, 5):
            assert laguerre_poly(n, rho).derivative() == -laguerre_poly(n - 1, rho + 1)
    checked = 0
    for n in range(1, 11):
        for i in range(0, 11):
            if i == n + 1:  # singular row, handled by the boundary term
                continue
            for j in range(0, 11):
                lhs = (n + 1) * poch(Fraction(-n), i) * poch(Fraction(-n), j) - n * poch(
                    Fraction(-n - 1), i
                ) * poch(Fraction(-n + 1), j)
                rhs = (
                    Fraction(n + 1)
                    * Fraction(1 + j - i, n + 1 - i)
                    * poch(Fraction(-n), i)
                    * poch(Fraction(-n), j)
                )
                assert lhs == rhs
                checked += 1
    _report("criterion-8", f"diff-diff n<=12 rho<=4 exact; combination identity {checked} cells exact")


def test_criterion_9_printed_prefactor_diagnosed_not_fatal():
    """The printed limiting-density prefactor disagrees with -dQ/dy by
    constant factors (4 at m=0, 64 at beta=2 m=1); the diagnostics report
    it and the series density remains a true derivative everywhere."""
    rep1 = prefactor_diagnostics(LimitParams(2.0, 1), [0.5, 1.0, 2.0, 5.0, 10.0])
    assert not rep1["consistent"]
    assert rep1["ratio_min"] == pytest.approx(64.0, rel=1e-6)
    assert rep1["ratio_max"] == pytest.approx(64.0, rel=1e-6)
    rep0 = prefactor_diagnostics(LimitParams(2.0, 0), [0.5, 1.0, 2.0])
    assert not rep0["consistent"]
    assert rep0["ratio_min"] == pytest.approx(4.0, rel=1e-8)

    h = 1e-5
    worst = 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", PrecisionWarning)
        for beta, m in [(1.0, 0), (1.0, 1), (2.0, 1), (2.0, 2), (4.0, 1), (4.0, 3), (0.7, 2)]:
            lp = LimitParams(beta, m)
            for y in (0.25, 1.0, 4.0, 12.0, 30.0):
                fd = (q_limit(lp, y - h) - q_limit(lp, y + h)) / (2 * h)
                worst = max(worst, abs(p_limit(lp, y) - fd))
    assert worst <= 1e-7
    _report(
        "criterion-9",
        f"printed/true ratios 64 and 4 flagged; P=-Q' residual {worst:.2e}",
    )
