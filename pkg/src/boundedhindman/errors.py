"""Exception hierarchy shared by every module.

All errors derive from :class:`ValueError` so callers that only care about
"bad input" can catch that.
"""


class HindmanError(ValueError):
    """Base class for domain-level failures."""


class DomainError(HindmanError):
    """An argument lies outside the domain of an operation (e.g. ``n = 0``)."""


class StructureError(HindmanError):
    """An input set lacks a structural property an operation depends on."""


class DecodeRangeError(HindmanError):
    """A membership query lies beyond what a chain can decode."""


class UnsatisfiableError(HindmanError):
    """A synthesizer was asked for something its input cannot provide."""


class FormatError(HindmanError):
    """A text file does not follow its documented format."""


class PrivilegedAccessError(HindmanError):
    """Bounded-query code tried to consult the full range of a function."""
