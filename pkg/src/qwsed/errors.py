"""Exception hierarchy shared by every qwsed module."""

from __future__ import annotations


class QwsedError(Exception):
    """Base class for all qwsed errors."""


# graph construction / structure

class GraphError(QwsedError, ValueError):
    pass


class DuplicateEdge(GraphError):
    pass


class ZeroWeight(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class IndexOutOfRange(GraphError, IndexError):
    pass


class Disconnected(GraphError):
    pass


class NotUnweighted(GraphError):
    pass


class ArityMismatch(GraphError):
    pass


class BadRoot(GraphError):
    pass


class SchemaError(GraphError):
    """Graph JSON does not follow the documented schema."""


# spectral

class SpectralError(QwsedError):
    pass


class ConvergenceFailure(SpectralError):
    pass


class ZeroInput(SpectralError, ValueError):
    pass


class TooManyValues(SpectralError, ValueError):
    pass


class UnrecognizedEigenvalues(SpectralError):
    pass


class SupportAmbiguityWarning(UserWarning):
    """A projector column norm fell in the grey zone around the support threshold."""


# certificates

class CertificateError(QwsedError):
    pass


class NotHalfCase(CertificateError):
    pass


class PreconditionViolated(CertificateError):
    pass


class SupportTooLarge(CertificateError):
    pass


class NoPendantGroup(CertificateError):
    pass


class BipartiteInput(CertificateError):
    pass


class BadParams(QwsedError, ValueError):
    pass
