"""Hot numeric kernels with a numba fast path and a pure-numpy fallback.

The dominant inner loop of the library is the exact N-particle decoherence
factor evaluated over many (x, x') samples: for every sample i and particle
j it forms the two evolved qubit states from the dressed-frequency trig
identities and accumulates the product of inner products

    F_N(x', x, t) = prod_j <g| S_j(x')^H S_j(x) |g>

Both backends consume the same precomputed arrays (per-particle couplings
sampled at the x and x' positions), reduce over particles in index order,
and also accumulate log|F| so the magnitude survives underflow at large N.

Backend selection (module import time):

    DECOLOC_NUMBA=0   force the pure-numpy fallback
    DECOLOC_NUMBA=1   require numba; ImportError if it is unavailable
    unset             use numba when importable, else fall back

``USING_NUMBA`` records the selected backend; `benchmarks/bench_kernels.py`
times the two implementations against each other.
"""

from __future__ import annotations

import math
import os

import numpy as np

__all__ = [
    "USING_NUMBA",
    "NUMBA_AVAILABLE",
    "factor_exact_pairs",
    "factor_exact_pairs_numpy",
    "factor_exact_pairs_numba",
]

_ENV_FLAG = os.environ.get("DECOLOC_NUMBA", "").strip().lower()

NUMBA_AVAILABLE = False
if _ENV_FLAG not in ("0", "false", "off"):
    try:
        from numba import njit

        NUMBA_AVAILABLE = True
    except ImportError:
        if _ENV_FLAG in ("1", "true", "require"):
            raise


def factor_exact_pairs_numpy(omega, fx, fxp, t):
    """Exact ensemble decoherence factor at M (x, x') samples, numpy path.

    omega : (N,) level splittings
    fx    : (N, M) coupling values f_j(x_i)
    fxp   : (N, M) coupling values f_j(x'_i)
    t     : evolution time

    Returns (value, log_magnitude): (M,) complex128 product and (M,) float64
    sum of per-particle log-magnitudes.  Initial state is |g> per particle.
    """
    omega = omega[:, None]
    om = np.hypot(omega, fx)
    omp = np.hypot(omega, fxp)
    c, s = omega / om, fx / om
    cp, sp = omega / omp, fxp / omp
    a, ap = om * t, omp * t
    sa, ca = np.sin(a), np.cos(a)
    sap, cap = np.sin(ap), np.cos(ap)
    re = sa * sap * (s * sp + c * cp) + ca * cap
    im = c * sa * cap - cp * ca * sap
    mag2 = re * re + im * im
    with np.errstate(divide="ignore"):
        logmag = 0.5 * np.sum(np.log(mag2), axis=0)
    value = np.prod(re + 1j * im, axis=0)
    return value, logmag


if NUMBA_AVAILABLE:

    @njit(cache=True)
    def factor_exact_pairs_numba(omega, fx, fxp, t):
        n, m = fx.shape
        value = np.empty(m, dtype=np.complex128)
        logmag = np.empty(m, dtype=np.float64)
        for i in range(m):
            vr, vi = 1.0, 0.0
            lm = 0.0
            for j in range(n):
                w = omega[j]
                f = fx[j, i]
                fp = fxp[j, i]
                om = math.hypot(w, f)
                omp = math.hypot(w, fp)
                c = w / om
                s = f / om
                cp = w / omp
                sp = fp / omp
                sa = math.sin(om * t)
                ca = math.cos(om * t)
                sap = math.sin(omp * t)
                cap = math.cos(omp * t)
                re = sa * sap * (s * sp + c * cp) + ca * cap
                im = c * sa * cap - cp * ca * sap
                vr, vi = vr * re - vi * im, vr * im + vi * re
                m2 = re * re + im * im
                if m2 > 0.0:
                    lm += 0.5 * math.log(m2)
                else:
                    lm = -np.inf
            value[i] = complex(vr, vi)
            logmag[i] = lm
        return value, logmag

else:
    factor_exact_pairs_numba = None


if NUMBA_AVAILABLE:
    factor_exact_pairs = factor_exact_pairs_numba
    USING_NUMBA = True
else:
    factor_exact_pairs = factor_exact_pairs_numpy
    USING_NUMBA = False
