"""Two-level internal-environment model.

A macroscopic object is modelled as N two-level particles rigidly attached
to a collective coordinate x.  Each particle j has a level splitting
omega_j and couples to x through a position-dependent off-diagonal term
f_j(x), giving the single-particle Hamiltonian (basis order |e>, |g>,
hbar = 1 throughout)

    h_j(x) = [[ omega_j,  f_j(x) ],
              [ f_j(x),  -omega_j ]]

Diagonalizing h_j gives dressed levels +/- Omega with
Omega = sqrt(f^2 + omega^2) and mixing angle tan(theta) = f/omega, so the
evolution operator S_j(x; t) = exp(-i h_j t) is the SU(2) rotation

    [[ cos(Omega t) - i sin(Omega t) cos(theta),  -i sin(Omega t) sin(theta) ],
     [ -i sin(Omega t) sin(theta),  cos(Omega t) + i sin(Omega t) cos(theta) ]]

All quantities carry inverse-time (omega, g*x, Omega) or length (x, ell)
dimension in natural units.  Everything here is a pure function of its
inputs; there is no shared state or caching.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import (
    InvariantViolation,
    NonFiniteCoupling,
    NonPositiveOmega,
    UnnormalizedState,
)

__all__ = [
    "TwoLevelParticle",
    "Coupling",
    "LINEAR",
    "DressedEigensystem",
    "UnitaryTwo",
    "QubitState",
    "GROUND",
    "EXCITED",
    "dressed_eigensystem",
    "s_matrix_single",
    "cat_overlap",
]


@dataclass(frozen=True)
class TwoLevelParticle:
    """One particle of the internal environment.

    omega : level splitting (> 0, inverse time)
    g     : linear coupling strength (inverse time per unit length)
    ell   : position offset of the particle relative to the collective
            coordinate (length)
    """

    omega: float
    g: float
    ell: float = 0.0

    def __post_init__(self):
        if not (self.omega > 0.0):
            raise NonPositiveOmega(f"omega must be > 0, got {self.omega}")
        if not math.isfinite(self.g):
            raise NonFiniteCoupling(f"g must be finite, got {self.g}")
        if not math.isfinite(self.ell):
            raise NonFiniteCoupling(f"ell must be finite, got {self.ell}")


@dataclass(frozen=True)
class Coupling:
    """Coupling form f_j(x).

    The default (profile=None) is the linear form f_j(x) = g * (x + ell),
    which with ell = 0 is exactly the weak-coupling form f_j = g_j * x.
    A custom profile u(.) gives f_j(x) = g * u(x + ell), so the linear form
    is the special case u = identity.  Profiles are used only through their
    values and must return finite reals.
    """

    profile: Callable[[float], float] | None = None

    @property
    def is_linear(self) -> bool:
        return self.profile is None

    def evaluate(self, p: TwoLevelParticle, x: float) -> float:
        """f_j(x) for particle p at collective position x."""
        u = x + p.ell
        f = p.g * u if self.profile is None else p.g * self.profile(u)
        if not math.isfinite(f):
            raise NonFiniteCoupling(f"f(x) not finite at x={x}: {f}")
        return f

    def evaluate_array(self, p: TwoLevelParticle, x: np.ndarray) -> np.ndarray:
        """Vectorized f_j over an array of positions."""
        u = np.asarray(x, dtype=float) + p.ell
        if self.profile is None:
            f = p.g * u
        else:
            f = p.g * np.vectorize(self.profile, otypes=[float])(u)
        if not np.all(np.isfinite(f)):
            raise NonFiniteCoupling("f(x) not finite somewhere on the grid")
        return f


LINEAR = Coupling()


@dataclass(frozen=True)
class DressedEigensystem:
    """Dressed two-level eigensystem at fixed collective position.

    theta      : mixing angle, tan(theta) = f/omega, principal branch
    omega_rabi : dressed frequency Omega = sqrt(f^2 + omega^2)
    v_plus     : upper eigenvalue +Omega
    v_minus    : lower eigenvalue -Omega
    """

    theta: float
    omega_rabi: float
    v_plus: float = field(init=False)
    v_minus: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "v_plus", self.omega_rabi)
        object.__setattr__(self, "v_minus", -self.omega_rabi)


@dataclass(frozen=True)
class UnitaryTwo:
    """2x2 unitary in the (|e>, |g>) basis, validated on construction."""

    matrix: np.ndarray
    _TOL = 1e-12

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (2, 2):
            raise InvariantViolation(f"expected 2x2 matrix, got shape {m.shape}")
        object.__setattr__(self, "matrix", m)
        dev = np.abs(m.conj().T @ m - np.eye(2)).max()
        if dev > self._TOL:
            raise InvariantViolation(f"matrix not unitary: max|U^H U - I| = {dev:.3e}")
        det = abs(np.linalg.det(m))
        if abs(det - 1.0) > self._TOL:
            raise InvariantViolation(f"|det U| = {det} deviates from 1")

    def __matmul__(self, other: "UnitaryTwo") -> "UnitaryTwo":
        return UnitaryTwo(self.matrix @ other.matrix)

    def dagger(self) -> "UnitaryTwo":
        return UnitaryTwo(self.matrix.conj().T)

    def apply(self, state: "QubitState") -> "QubitState":
        ce, cg = self.matrix @ np.array([state.c_e, state.c_g])
        return QubitState(ce, cg)


@dataclass(frozen=True)
class QubitState:
    """Normalized two-level state c_e |e> + c_g |g>."""

    c_e: complex
    c_g: complex

    def __post_init__(self):
        n = abs(self.c_e) ** 2 + abs(self.c_g) ** 2
        if abs(n - 1.0) > 1e-12:
            raise UnnormalizedState(f"|c_e|^2 + |c_g|^2 = {n!r}, expected 1")

    @classmethod
    def normalized(cls, c_e: complex, c_g: complex) -> "QubitState":
        n = math.sqrt(abs(c_e) ** 2 + abs(c_g) ** 2)
        if n == 0.0:
            raise UnnormalizedState("zero amplitudes cannot be normalized")
        return cls(c_e / n, c_g / n)

    def overlap(self, other: "QubitState") -> complex:
        """<self|other>."""
        return (
            complex(self.c_e).conjugate() * other.c_e
            + complex(self.c_g).conjugate() * other.c_g
        )

    def as_array(self) -> np.ndarray:
        return np.array([self.c_e, self.c_g], dtype=complex)


GROUND = QubitState(0.0, 1.0)
EXCITED = QubitState(1.0, 0.0)


def dressed_eigensystem(
    p: TwoLevelParticle, coupling: Coupling = LINEAR, x: float = 0.0
) -> DressedEigensystem:
    """Mixing angle and dressed frequency of particle p at position x.

    theta = arctan(f(x)/omega) on the principal branch, so theta carries
    the sign of f and |theta| -> pi/2 as |f| -> infinity.
    """
    f = coupling.evaluate(p, x)
    theta = math.atan2(f, p.omega)  # omega > 0 keeps this on (-pi/2, pi/2)
    omega_rabi = math.hypot(f, p.omega)
    return DressedEigensystem(theta=theta, omega_rabi=omega_rabi)


def s_matrix_single(
    p: TwoLevelParticle, coupling: Coupling = LINEAR, x: float = 0.0, t: float = 0.0
) -> UnitaryTwo:
    """Single-particle evolution operator S_j(x; t) = exp(-i h_j(x) t).

    Built from the dressed eigensystem: with A = Omega*t,

        S = [[ cos A - i sin A cos(theta),  -i sin A sin(theta) ],
             [ -i sin A sin(theta),  cos A + i sin A cos(theta) ]]

    t = 0 gives the identity; f = 0 gives diag(e^{-i omega t}, e^{i omega t}).
    """
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    eig = dressed_eigensystem(p, coupling, x)
    a = eig.omega_rabi * t
    c, s = math.cos(eig.theta), math.sin(eig.theta)
    ca, sa = math.cos(a), math.sin(a)
    m = np.array(
        [
            [ca - 1j * sa * c, -1j * sa * s],
            [-1j * sa * s, ca + 1j * sa * c],
        ]
    )
    return UnitaryTwo(m)


def cat_overlap(pairs: Sequence[tuple[QubitState, QubitState]]) -> complex:
    """Product of inner-state overlaps prod_j <d_j|l_j>.

    The magnitude never exceeds 1 and is non-increasing as pairs are
    appended; a single orthogonal pair forces the product to exactly 0.
    """
    out = 1.0 + 0.0j
    for i, (d, l) in enumerate(pairs):
        for s in (d, l):
            n = abs(s.c_e) ** 2 + abs(s.c_g) ** 2
            if abs(n - 1.0) > 1e-9:
                raise UnnormalizedState(f"pair {i}: state norm^2 = {n!r}")
        out *= d.overlap(l)
        if out == 0.0:
            return 0.0 + 0.0j
    return out
