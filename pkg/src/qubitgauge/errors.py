"""Exception types raised by the library."""


class QubitGaugeError(ValueError):
    """Base class for all errors raised by ``qubitgauge``."""


class NonFinite(QubitGaugeError):
    pass


class DegenerateSpectrum(QubitGaugeError):
    """Raised when a period-dependent quantity is requested with omega1 == omega2."""


class StepTooLarge(QubitGaugeError):
    pass


class ZeroOverlap(QubitGaugeError):
    pass


class InfiniteCoupling(QubitGaugeError):
    """Raised when g = tan(2 theta) diverges (theta = pi/4 mod pi/2)."""
