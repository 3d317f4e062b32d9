# -*- coding: utf-8 -*-
__all__ = [
    'SUnitError',
    'DescriptorInvalidError',
    'UnsupportedFieldError',
    'ResourceError',
    'DomainError',
    'NotInGroupError',
    'PreconditionError',
    'HypothesisViolationError',
    'TransportError',
    'ParseError',
]


class SUnitError(Exception):
    """ The base class of every error raised by the package. """


class DescriptorInvalidError(SUnitError, ValueError):
    """ The field descriptor or one of its fixtures is inconsistent. """


class UnsupportedFieldError(SUnitError):
    """ The operation needs prime or generator data the field does not carry. """


class ResourceError(SUnitError):
    """ A configured cap was exceeded. """


class DomainError(SUnitError, ValueError):
    """ An argument lies outside the domain of the operation. """


class NotInGroupError(SUnitError):
    """ The element is not in the generated S-unit group. """


class PreconditionError(SUnitError, ValueError):
    """ The precondition of an operation does not hold. """


class HypothesisViolationError(PreconditionError):
    """ The coefficients violate the hypothesis of the criterion. """


class TransportError(SUnitError, IOError):
    """ The remote data source is unreachable and nothing is cached. """


class ParseError(SUnitError, ValueError):
    """
    The payload could not be parsed.

    Attributes:
        digest: The sha256 digest of the offending payload.
    """

    def __init__(self, message: str, digest: str = '') -> None:
        super().__init__(f'{message} (digest {digest})' if digest else message)
        self.digest = digest
