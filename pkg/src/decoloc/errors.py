"""Exception hierarchy for decoloc.

Every error raised by the library derives from DecolocError, so callers can
catch one type at the boundary (the CLI maps subclasses to exit codes).
"""


class DecolocError(Exception):
    """Base class for all decoloc errors."""


class InvariantViolation(DecolocError):
    """A constructed value violates a documented type invariant."""


class NonPositiveOmega(DecolocError):
    """Level splitting omega must be strictly positive."""


class NonFiniteCoupling(DecolocError):
    """Coupling f(x) evaluated to a non-finite value."""


class UnnormalizedState(DecolocError):
    """Qubit amplitudes do not satisfy |c_e|^2 + |c_g|^2 = 1."""


class EmptyEnsemble(DecolocError):
    """An operation over particles received an empty particle list."""


class EnsembleTooLarge(DecolocError):
    """Brute-force tensor oracle rejects ensembles beyond its size cap."""


class QuadratureNonConvergence(DecolocError):
    """Adaptive quadrature could not reach the requested tolerance.

    Carries the best available value and error estimate so callers can
    inspect how far off the run ended.
    """

    def __init__(self, message, value=None, error=None):
        super().__init__(message)
        self.value = value
        self.error = error


class BandConditionViolated(DecolocError):
    """Spectral band inputs do not satisfy the lower-bound preconditions."""


class ZeroDamping(DecolocError):
    """Limit width is undefined for eta = 0 (no finite saturation)."""


class GridTooNarrow(DecolocError):
    """Density grid does not cover the required spatial extent."""


class UnresolvedPeaks(DecolocError):
    """Grid spacing too coarse to resolve the Gaussian peaks."""


class GridUnderResolved(DecolocError):
    """Propagation grid does not resolve the initial wave packet."""


class NormDrift(DecolocError):
    """Wave-function norm drifted beyond tolerance during propagation."""


class ConfigError(DecolocError):
    """Run configuration failed strict validation.

    ``field`` holds a dotted path to the offending entry when known.
    """

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field
