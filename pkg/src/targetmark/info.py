"""The advertising response curve: how intensity turns into informed consumers.

A consumer counts as informed once they have seen at least one ad message.
Per-person advertising intensity ``a`` buys ``sqrt(a)`` independent message
exposures, each observed with probability ``lam``, so the informed share is

    phi(a) = 1 - (1 - lam) ** sqrt(a)

which starts at 0, is strictly increasing and strictly concave, and saturates
at 1.  Writing ``k = -ln(1 - lam)``, differentiation gives

    phi'(a) = k * exp(-k * sqrt(a)) / (2 * sqrt(a))

unbounded as ``a -> 0+`` and falling monotonically to 0, so any positive
marginal-value requirement is met at a unique interior intensity.

All curve algebra is carried out in ``s = sqrt(a)`` space, where the
derivative is smooth and strictly decreasing.  Inverting ``phi'(a) = y``
reduces to ``k*s * exp(k*s) = k**2 / (2*y)``, solved in closed form by the
principal branch of the Lambert W function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import lambertw

from .errors import ParameterError


def _checked(a, *, positive: bool):
    """Coerce to float array, reject NaN and out-of-domain values."""
    arr = np.asarray(a, dtype=np.float64)
    if np.isnan(arr).any():
        raise ParameterError("advertising intensity must not be NaN")
    if positive:
        if not (arr > 0.0).all():
            raise ParameterError("advertising intensity must be strictly positive")
    elif not (arr >= 0.0).all():
        raise ParameterError("advertising intensity must be nonnegative")
    return arr, arr.ndim == 0


@dataclass(frozen=True)
class InfoTechnology:
    """Message-exposure probability and the response curve it induces.

    ``lam`` is the probability that one message is observed; it must lie
    strictly inside (0, 1).
    """

    lam: float

    def __post_init__(self):
        if not (0.0 < self.lam < 1.0):
            raise ParameterError(
                f"lambda must lie strictly in (0, 1), got {self.lam!r}"
            )

    @property
    def decay(self) -> float:
        """k = -ln(1 - lam), the exposure rate per unit sqrt-intensity."""
        return -math.log1p(-self.lam)

    def phi(self, a):
        """Informed fraction at per-person intensity ``a >= 0``.

        Accepts a scalar or an array; scalar in, scalar out.
        """
        arr, scalar = _checked(a, positive=False)
        out = -np.expm1(-self.decay * np.sqrt(arr))
        return float(out) if scalar else out

    def phi_prime(self, a):
        """Marginal informed fraction at ``a > 0``.

        The derivative is unbounded as ``a -> 0+``; callers that need the
        limit should invert (see :meth:`inverse_phi_prime`), which accepts
        arbitrarily large marginal targets, rather than evaluate at 0.
        """
        arr, scalar = _checked(a, positive=True)
        s = np.sqrt(arr)
        out = self.decay * np.exp(-self.decay * s) / (2.0 * s)
        return float(out) if scalar else out

    def inverse_phi_prime(self, y: float) -> float:
        """The unique ``a > 0`` with ``phi_prime(a) == y``, for ``y > 0``.

        Closed form via Lambert W in s = sqrt(a) space, then polished with
        Newton steps on ``ln phi'(s^2) - ln y`` so the residual sits at
        floating rounding level.
        """
        y = float(y)
        if not math.isfinite(y) or y <= 0.0:
            raise ParameterError(
                f"marginal target must be a finite positive number, got {y!r}"
            )
        k = self.decay
        s = float(np.real(lambertw(k * k / (2.0 * y)))) / k
        if s <= 0.0:
            return 0.0  # intensity below double resolution
        for _ in range(2):
            resid = math.log(k / (2.0 * y)) - k * s - math.log(s)
            s += resid / (k + 1.0 / s)
        return s * s


@dataclass(frozen=True)
class MonteCarloEstimate:
    """Informed-share estimate with its binomial standard error."""

    estimate: float
    std_error: float


def informed_fraction_monte_carlo(
    lam: float, message_count: int, trials: int, seed: int
) -> MonteCarloEstimate:
    """Simulate message exposure and estimate the informed share.

    Each of ``trials`` consumers is exposed to ``message_count`` independent
    messages, observing each with probability ``lam``; a consumer is informed
    once at least one message is seen.  The analytic counterpart is
    ``1 - (1 - lam) ** message_count``.  All randomness derives from ``seed``,
    so repeated calls are reproducible and calls with distinct seeds are
    independent.

    Defined for integer message counts only: that is where the exposure count
    is exactly binomial.
    """
    if not (0.0 <= lam <= 1.0):
        raise ParameterError(f"lambda must be a probability in [0, 1], got {lam!r}")
    if message_count != int(message_count) or message_count < 0:
        raise ParameterError(
            f"message count must be a nonnegative integer, got {message_count!r}"
        )
    if trials < 1:
        raise ParameterError(f"trials must be a positive integer, got {trials!r}")
    rng = np.random.default_rng(seed)
    seen = rng.binomial(int(message_count), lam, size=int(trials))
    estimate = np.count_nonzero(seen) / trials
    std_error = math.sqrt(estimate * (1.0 - estimate) / trials)
    return MonteCarloEstimate(float(estimate), std_error)
