"""Finite-N smallest-eigenvalue distribution of the fixed-trace ensemble.

The survival function Q_{N,M}(x) = Prob(lambda_min >= x) is a finite
partition sum: with G = beta*M*N/2, m the Jack index, and nu = beta/2,

    Q(x) = sum_{k=0}^{mN} sum_{|kappa|=k, len<=m, kappa_1<=N}
        (-2/beta)^k * [Gamma(G)/Gamma(G-k)]
        * ([-N]_kappa^(nu) / [2m/beta]_kappa^(nu))
        * C_kappa^(nu)(1^m) / k!
        * x^k (1-Nx)^{G-k-1},

supported on 0 <= x <= 1/N (N values >= x summing to 1 force x <= 1/N).
The k-sum is finite because (-N)_{kappa_1} kills parts above N and
C_kappa(1^m) kills partitions longer than m.

Everything x-independent is collected once per parameter set into
coefficients A_k, held in log-magnitude + sign form; grid evaluation then
costs one exponential per k per point.  The density is the exact termwise
derivative P = -dQ/dx, never a finite difference.

q_oracle_n2 is the independent cross-check for N=2: the delta constraint
collapses the joint density to one dimension and Q becomes a ratio of two
ordinary integrals, evaluated by adaptive quadrature with no partition
machinery at all.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

from scipy.integrate import quad

from .core import DEFAULT_ACCURACY, EnsembleParams, SeriesAccuracy, require_jack_index
from .errors import DomainError, NumericalInconsistency, PrecisionWarning
from .jack import JackTable, _enum_raw, gen_factorial_log_sign
from .numerics import log_gamma_ratio_falling, neumaier_sum

#: Validated envelope for the partition-series routes.
N_ENVELOPE = 50
JACK_INDEX_ENVELOPE = 6


@dataclass(frozen=True)
class DistributionCurve:
    """A sampled curve: kind "Q" (survival function) or "P" (density)."""

    params: EnsembleParams
    points: tuple  # of (x, value) pairs
    kind: str

    def __post_init__(self):
        if self.kind not in ("Q", "P"):
            raise DomainError(f"kind must be 'Q' or 'P', got {self.kind!r}")
        xs = [p[0] for p in self.points]
        vals = [p[1] for p in self.points]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise DomainError("curve x values must be strictly increasing")
        if self.kind == "Q":
            if any(v < -1e-9 or v > 1 + 1e-9 for v in vals):
                raise NumericalInconsistency("Q values must lie in [0, 1]")
            if any(b > a + 1e-9 for a, b in zip(vals, vals[1:])):
                raise NumericalInconsistency("Q values must be nonincreasing")
        else:
            if any(v < -1e-9 for v in vals):
                raise NumericalInconsistency("P values must be nonnegative")


def _warn_envelope(params: EnsembleParams, m: int):
    if params.n_dim > N_ENVELOPE or m > JACK_INDEX_ENVELOPE:
        warnings.warn(
            f"N={params.n_dim}, m={m} is outside the validated envelope "
            f"(N <= {N_ENVELOPE}, m <= {JACK_INDEX_ENVELOPE}); "
            "results are best-effort",
            PrecisionWarning,
            stacklevel=3,
        )


@lru_cache(maxsize=None)
def _series_coeffs(params: EnsembleParams) -> tuple:
    """x-independent coefficients A_k of Q(x) = sum_k A_k x^k (1-Nx)^{G-k-1},
    as a tuple of (log|A_k|, sign) for k = 0..m*N."""
    beta = params.beta
    n = params.n_dim
    m = params.jack_index
    nu = 0.5 * beta
    g = 0.5 * beta * params.m_dim * n
    b_param = 2.0 * m / beta  # = m/nu, the denominator parameter
    table = JackTable(nu, m)
    log_2_over_beta = math.log(2.0) - math.log(beta)

    coeffs = []
    for k in range(m * n + 1):
        ratio_log = log_gamma_ratio_falling(g, k) if k else 0.0
        term_logs = []
        term_signs = []
        for parts in _enum_raw(k, m, n):
            num_log, num_sign = gen_factorial_log_sign(-float(n), parts, nu)
            if num_sign == 0.0:
                continue
            den_log, den_sign = gen_factorial_log_sign(b_param, parts, nu)
            c_log = table.log_value(parts)
            if c_log == float("-inf"):
                continue
            term_logs.append(num_log - den_log + c_log)
            sign = num_sign * den_sign
            if k % 2:
                sign = -sign
            term_signs.append(sign)
        if not term_logs:
            coeffs.append((float("-inf"), 0.0))
            continue
        base = k * log_2_over_beta + ratio_log - math.lgamma(k + 1)
        peak = max(term_logs)
        acc_val = neumaier_sum(
            s * math.exp(lg - peak) for lg, s in zip(term_logs, term_signs)
        )
        if acc_val == 0.0:
            coeffs.append((float("-inf"), 0.0))
        else:
            coeffs.append(
                (base + peak + math.log(abs(acc_val)), math.copysign(1.0, acc_val))
            )
    return tuple(coeffs)


def _signed_logsum(logs, signs) -> float:
    """sum_i signs[i]*exp(logs[i]) with max-scaling and compensation."""
    peak = max(logs)
    if peak == float("-inf"):
        return 0.0
    acc_val = neumaier_sum(s * math.exp(lg - peak) for lg, s in zip(logs, signs))
    return acc_val * math.exp(peak)


def q_exact(
    params: EnsembleParams, x: float, acc: SeriesAccuracy = DEFAULT_ACCURACY
) -> float:
    """Survival function Q_{N,M}(x) of the smallest eigenvalue.

    Exactly 1 at x=0 and exactly 0 for x >= 1/N.  Requires an integer
    Jack index (NonIntegerJackIndex otherwise).  For N=1 the trace
    constraint pins the eigenvalue at 1, so Q is exactly the step
    function 1_{x < 1}.
    """
    m = require_jack_index(params)
    if x < 0:
        raise DomainError(f"x must be >= 0, got {x}")
    _warn_envelope(params, m)
    n = params.n_dim
    if x == 0.0:
        return 1.0
    if x >= 1.0 / n:
        return 0.0
    if n == 1:
        return 1.0
    g = 0.5 * params.beta * params.m_dim * n
    coeffs = _series_coeffs(params)
    log_x = math.log(x)
    log_edge = math.log1p(-n * x)
    logs = []
    signs = []
    for k, (lg, s) in enumerate(coeffs):
        if s == 0.0:
            continue
        logs.append(lg + k * log_x + (g - k - 1.0) * log_edge)
        signs.append(s)
    if not logs:
        return 0.0
    return _signed_logsum(logs, signs)


def p_exact(
    params: EnsembleParams, x: float, acc: SeriesAccuracy = DEFAULT_ACCURACY
) -> float:
    """Density P_{N,M}(x) = -dQ/dx by exact termwise differentiation.

    Nonnegative on [0, 1/N]; tiny negative roundoff is clamped to 0 and
    anything below -1e-9 raises NumericalInconsistency.  For N=1 the law
    is a point mass at x=1, so the density part is identically 0.
    """
    m = require_jack_index(params)
    if x < 0:
        raise DomainError(f"x must be >= 0, got {x}")
    _warn_envelope(params, m)
    n = params.n_dim
    if n == 1:
        return 0.0
    if x >= 1.0 / n:
        return 0.0
    g = 0.5 * params.beta * params.m_dim * n
    e = g - 1.0
    coeffs = _series_coeffs(params)

    if x == 0.0:
        # only the x^0 pieces survive: P(0) = N*E*A_0 - A_1
        out = 0.0
        lg0, s0 = coeffs[0]
        out += n * e * s0 * math.exp(lg0)
        if len(coeffs) > 1:
            lg1, s1 = coeffs[1]
            if s1 != 0.0:
                out -= s1 * math.exp(lg1)
        return _clamp_density(out)

    log_x = math.log(x)
    log_edge = math.log1p(-n * x)
    logs = []
    signs = []
    for k, (lg, s) in enumerate(coeffs):
        if s == 0.0:
            continue
        # -d/dx [x^k (1-Nx)^(E-k)] contributes two monomials
        logs.append(lg + math.log(n * (e - k)) + k * log_x + (e - k - 1.0) * log_edge)
        signs.append(s)
        if k >= 1:
            logs.append(lg + math.log(k) + (k - 1.0) * log_x + (e - k) * log_edge)
            signs.append(-s)
    if not logs:
        return 0.0
    return _clamp_density(_signed_logsum(logs, signs))


def _clamp_density(value: float) -> float:
    if value < -1e-9:
        raise NumericalInconsistency(f"density evaluated to {value}, below -1e-9")
    return 0.0 if value < 0.0 else value


def moment(
    params: EnsembleParams, p: int, acc: SeriesAccuracy = DEFAULT_ACCURACY
) -> float:
    """p-th moment of the smallest eigenvalue, p >= 1 integer.

    mu_p = p * sum_{k,kappa} (-2/beta)^k
           * Gamma(G) Gamma(p+k) / (Gamma(G+p) N^(p+k))
           * ([-N]_kappa / [2m/beta]_kappa) * C_kappa(1^m) / k!

    The ratio Gamma(G)/Gamma(G+p) is an exact p-factor product (never a
    difference of log-gammas), which keeps the m=0 single-term case
    accurate to ~1e-15 relative.
    """
    m = require_jack_index(params)
    if not isinstance(p, int) or isinstance(p, bool) or p < 1:
        raise DomainError(f"moment order p must be an integer >= 1, got {p!r}")
    _warn_envelope(params, m)
    beta = params.beta
    n = params.n_dim
    if n == 1:
        # point mass at x=1: every moment is exactly 1
        return 1.0
    nu = 0.5 * beta
    g = 0.5 * beta * params.m_dim * n
    b_param = 2.0 * m / beta
    table = JackTable(nu, m)
    log_2_over_beta = math.log(2.0) - math.log(beta)
    log_n = math.log(n)
    # log of Gamma(G+p)/Gamma(G) = (G)(G+1)...(G+p-1), exact factors
    log_poch_g = math.fsum(math.log(g + i) for i in range(p))

    logs = []
    signs = []
    for k in range(m * n + 1):
        base = (
            math.log(p)
            + math.lgamma(p + k)
            - log_poch_g
            - (p + k) * log_n
            + k * log_2_over_beta
            - math.lgamma(k + 1)
        )
        for parts in _enum_raw(k, m, n):
            num_log, num_sign = gen_factorial_log_sign(-float(n), parts, nu)
            if num_sign == 0.0:
                continue
            den_log, den_sign = gen_factorial_log_sign(b_param, parts, nu)
            c_log = table.log_value(parts)
            if c_log == float("-inf"):
                continue
            logs.append(base + num_log - den_log + c_log)
            sign = num_sign * den_sign
            if k % 2:
                sign = -sign
            signs.append(sign)
    return _signed_logsum(logs, signs)


def norm_const_log(params: EnsembleParams) -> float:
    """log of the normalization constant C_{N,M} of the joint density."""
    beta = params.beta
    n = params.n_dim
    m_dim = params.m_dim
    out = math.lgamma(0.5 * beta * m_dim * n) + n * math.lgamma(1.0 + 0.5 * beta)
    for j in range(n):
        out -= math.lgamma(0.5 * beta * (m_dim - j))
        out -= math.lgamma(1.0 + 0.5 * beta * (n - j))
    return out


def norm_const(params: EnsembleParams) -> float:
    """Normalization constant C_{N,M}; equals 1 when N=1."""
    return math.exp(norm_const_log(params))


@lru_cache(maxsize=None)
def _oracle_weight_norm(beta: float, m_dim: int, quad_tol: float) -> float:
    expo = 0.5 * beta * (m_dim - 1) - 1.0  # beta*alpha/2 at N=2
    val, _ = quad(
        lambda lam: (lam * (1.0 - lam)) ** expo * abs(2.0 * lam - 1.0) ** beta,
        0.0,
        1.0,
        points=[0.5],
        epsabs=quad_tol,
        epsrel=quad_tol,
        limit=200,
    )
    return val


def q_oracle_n2(params: EnsembleParams, x: float, quad_tol: float = 1e-10) -> float:
    """Brute-force survival function for N=2 by adaptive quadrature.

    The trace constraint leaves a single free eigenvalue lambda on
    [x, 1-x] with weight (lambda(1-lambda))^(beta*alpha/2)|2lambda-1|^beta;
    Q is the normalized integral.  Works for ANY beta > 0 (no integer Jack
    index needed) and shares no code with the series routes, which is the
    whole point.
    """
    if params.n_dim != 2:
        raise DomainError(f"q_oracle_n2 requires N=2, got N={params.n_dim}")
    if not (0.0 <= x <= 0.5):
        raise DomainError(f"q_oracle_n2 requires 0 <= x <= 1/2, got {x}")
    if x == 0.0:
        return 1.0
    if x >= 0.5:
        return 0.0
    beta = params.beta
    expo = 0.5 * beta * (params.m_dim - 1) - 1.0
    num, _ = quad(
        lambda lam: (lam * (1.0 - lam)) ** expo * abs(2.0 * lam - 1.0) ** beta,
        x,
        1.0 - x,
        points=[0.5],
        epsabs=quad_tol,
        epsrel=quad_tol,
        limit=200,
    )
    return num / _oracle_weight_norm(beta, params.m_dim, quad_tol)


def evaluate_curve(
    params: EnsembleParams,
    xs,
    kind: str = "Q",
    acc: SeriesAccuracy = DEFAULT_ACCURACY,
) -> DistributionCurve:
    """Evaluate q_exact or p_exact on a grid and wrap as a checked curve."""
    fn = q_exact if kind == "Q" else p_exact
    pts = tuple((float(x), fn(params, float(x), acc)) for x in xs)
    return DistributionCurve(params=params, points=pts, kind=kind)
