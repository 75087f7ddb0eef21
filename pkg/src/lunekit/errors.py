"""Exception hierarchy for lunekit."""


class LunekitError(Exception):
    """Base class for all lunekit errors."""


class AntipodalEndpoints(LunekitError):
    """Arc endpoints are (nearly) antipodal; the shorter arc is undefined."""


class DegenerateTriple(LunekitError):
    """Three points lie on one great circle; no unique circumcircle."""


class DegenerateLune(LunekitError):
    """Hemisphere poles coincide or are opposite; not a lune."""


class NotInOpenHemisphere(LunekitError):
    """Input is not contained in any open hemisphere."""


class DegenerateInput(LunekitError):
    """Input points all lie on one great circle."""


class BadRadius(LunekitError):
    """Cap radius outside (0, pi/2]."""


class BadThickness(LunekitError):
    """Requested thickness outside the constructible range."""


class BadParameters(LunekitError):
    """Constructor parameters outside the valid range."""


class NoSolution(LunekitError):
    """Root finder could not bracket a solution."""


class EmptyResult(LunekitError):
    """The requested intersection has no interior."""


class NotOnBoundary(LunekitError):
    """Point is not on the body boundary."""


class NotSupporting(LunekitError):
    """Hemisphere does not support the body."""


class NotConstantWidthOverHalfPi(LunekitError):
    """Operation requires a body of constant width greater than pi/2."""


class DiameterMismatch(LunekitError):
    """Stated diameter disagrees with the measured one."""


class ThicknessTooLarge(LunekitError):
    """Certificate only applies to thickness below pi/2."""


class RegimeUnknown(LunekitError):
    """Body is neither constant width nor a certified reduced polygon."""


class UnknownTheoremId(LunekitError):
    """Requested verification suite is not registered."""


class SchemaError(LunekitError):
    """Body document violates the JSON schema."""
