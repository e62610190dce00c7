"""Polylogarithm of integer order on the unit circle.

``Li_p(exp(i theta)) = sum_{l >= 1} exp(i l theta) / l**p`` for integer
``p >= 2``, evaluated through its expansion in ``mu = i theta``::

    Li_p(e^mu) = mu^(p-1)/(p-1)! [H_(p-1) - log(-mu)]
                 + sum_{k >= 0, k != p-1} zeta(p - k) mu^k / k!

which converges for ``|mu| < 2 pi``. Angles are first reduced to
[-pi, pi] so the ratio ``|theta| / 2pi`` never exceeds 1/2.
"""

from functools import lru_cache
from math import factorial, log, pi, ceil

import numpy as np
from scipy.special import zeta

__all__ = ["unit_polylog", "expansion_terms"]

_ZETA2 = pi**2 / 6


def expansion_terms(p: int, rho: float, tol: float) -> int:
    """Number of power-series terms K so that the neglected tail is below `tol`.

    For k >= p the coefficients obey ``|zeta(p - k)| / k! <=
    2 zeta(2) (2pi)^(p - 1 - k)``, so the tail beyond K is bounded by the
    geometric sum ``2 zeta(2) (2pi)^(p-1) rho^(K+1) / (1 - rho)``.
    """
    rho = min(max(rho, 1e-300), 0.5)
    scale = 2.0 * _ZETA2 * (2.0 * pi) ** (p - 1) / (1.0 - rho)
    # smallest K with scale * rho**(K+1) < tol
    k = ceil(log(tol / scale) / log(rho)) if scale > tol else 0
    return max(k, p)


@lru_cache(maxsize=None)
def _coefficients(p: int, K: int) -> np.ndarray:
    """``zeta(p - k) / k!`` for k = 0..K, with the k = p - 1 slot zeroed."""
    c = np.zeros(K + 1)
    for k in range(K + 1):
        if k == p - 1:
            continue
        c[k] = zeta(float(p - k)) / factorial(k)
    c.setflags(write=False)
    return c


def unit_polylog(p: int, theta, tol: float = 1e-16) -> np.ndarray:
    """Complex ``Li_p(exp(i theta))`` for integer ``p >= 2``, vectorized.

    Real part is ``sum cos(l theta) / l**p``, imaginary part is
    ``sum sin(l theta) / l**p``.
    """
    p = int(p)
    if p < 2:
        raise ValueError(f"order p must be >= 2 for an absolutely convergent series, got {p}")
    theta = np.asarray(theta, dtype=float)
    th = np.mod(theta + pi, 2.0 * pi) - pi
    rho = float(np.max(np.abs(th), initial=0.0)) / (2.0 * pi)
    K = expansion_terms(p, rho, tol)
    coef = _coefficients(p, K)
    mu = 1j * th
    # Horner over the regular part
    acc = np.full(th.shape, coef[K], dtype=complex)
    for k in range(K - 1, -1, -1):
        acc = acc * mu + coef[k]
    harmonic = sum(1.0 / i for i in range(1, p))
    with np.errstate(divide="ignore", invalid="ignore"):
        log_neg_mu = np.log(np.abs(th)) - 0.5j * pi * np.sign(th)
        sing = mu ** (p - 1) / factorial(p - 1) * (harmonic - log_neg_mu)
    sing = np.where(th == 0.0, 0.0, sing)
    return acc + sing
