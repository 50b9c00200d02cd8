"""Shared numerical kernels.

Log-gamma, exact gamma-ratio products, the modified Bessel function of the
first kind by its ascending series, compensated (Neumaier) summation, and
exact rational arithmetic.  Consumer modules represent series terms in
log-magnitude + sign form because Gamma(beta*M*N/2) overflows double
precision already near N ~ 60; the helpers here are the building blocks
for that representation.
"""

from __future__ import annotations

import math
import warnings
from fractions import Fraction

from .core import DEFAULT_ACCURACY, SeriesAccuracy
from .errors import DivergenceError, DomainError, PrecisionWarning

# Exact rational arithmetic: arbitrary-precision integers, always stored in
# lowest terms with positive denominator.  fractions.Fraction guarantees all
# of that, so it IS the rational type of this package.
Rational = Fraction

#: Largest Bessel argument inside the validated accuracy envelope.
BESSEL_X_ENVELOPE = 60.0


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0 (relative error <= 1e-13 on
    [1e-3, 1e6])."""
    if not (x > 0):
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def gamma_ratio_falling(a: float, k: int) -> float:
    """Gamma(a)/Gamma(a-k) as the exact product (a-1)(a-2)...(a-k).

    Never evaluated as a difference of two log-gammas: the product is
    exact to one rounding per factor, which the consumers rely on.
    """
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    if not (a - k > 0):
        raise DomainError(f"gamma_ratio_falling requires a - k > 0, got a={a}, k={k}")
    out = 1.0
    for i in range(1, k + 1):
        out *= a - i
    return out


def log_gamma_ratio_falling(a: float, k: int) -> float:
    """log(Gamma(a)/Gamma(a-k)) summed factor by factor (requires a-k > 0)."""
    if not (a - k > 0):
        raise DomainError(f"requires a - k > 0, got a={a}, k={k}")
    return math.fsum(math.log(a - i) for i in range(1, k + 1))


def pochhammer_log_sign(a: float, k: int) -> tuple[float, float]:
    """Rising factorial (a)_k = a(a+1)...(a+k-1) in (log|value|, sign) form.

    sign is -1.0, 0.0 or +1.0; a zero factor yields (-inf, 0.0).
    """
    log_abs = 0.0
    sign = 1.0
    for i in range(k):
        f = a + i
        if f == 0.0:
            return float("-inf"), 0.0
        if f < 0.0:
            sign = -sign
        log_abs += math.log(abs(f))
    return log_abs, sign


def neumaier_sum(values) -> float:
    """Compensated summation (Neumaier's variant of Kahan's algorithm)."""
    total = 0.0
    comp = 0.0
    for v in values:
        t = total + v
        if abs(total) >= abs(v):
            comp += (total - t) + v
        else:
            comp += (v - t) + total
        total = t
    return total + comp


def bessel_i(rho: float, x: float, acc: SeriesAccuracy = DEFAULT_ACCURACY) -> float:
    """Modified Bessel function of the first kind, I_rho(x).

    Evaluates the ascending series

        I_rho(x) = (x/2)^rho * sum_{k>=0} (x/2)^(2k) / (k! Gamma(rho+k+1))

    truncated once the next term falls below ``acc.tail_tol`` times the
    partial sum.  All terms are positive, so there is no cancellation and
    the relative error is <= 1e-12 on the validated envelope x in [0, 60];
    larger x is flagged with a PrecisionWarning rather than silently
    extrapolated.

    Parameters
    ----------
    rho : float
        Order, must be > -1.
    x : float
        Argument, must be >= 0.
    acc : SeriesAccuracy
        Truncation policy.

    Returns
    -------
    float
        I_rho(x).  For x=0: 1 if rho=0, 0 if rho>0, +inf if -1<rho<0.
    """
    if rho <= -1:
        raise DomainError(f"bessel_i requires rho > -1, got {rho}")
    if x < 0:
        raise DomainError(f"bessel_i requires x >= 0, got {x}")
    if x > BESSEL_X_ENVELOPE:
        warnings.warn(
            f"bessel_i argument x={x:g} exceeds the validated envelope "
            f"x <= {BESSEL_X_ENVELOPE:g}; result is best-effort",
            PrecisionWarning,
            stacklevel=2,
        )
    if x == 0.0:
        if rho == 0.0:
            return 1.0
        return 0.0 if rho > 0 else float("inf")

    half = 0.5 * x
    # prefactor (x/2)^rho / Gamma(rho+1), folded into the k=0 term
    term = math.exp(rho * math.log(half) - math.lgamma(rho + 1.0))
    total = term
    comp = 0.0
    hh = half * half
    for k in range(1, acc.k_max + 1):
        term *= hh / (k * (rho + k))
        t = total + term
        if abs(total) >= term:
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        if term < acc.tail_tol * total:
            return total + comp
    raise DivergenceError(
        f"bessel_i series did not meet tail_tol={acc.tail_tol:g} within "
        f"k_max={acc.k_max} terms (rho={rho}, x={x})"
    )
