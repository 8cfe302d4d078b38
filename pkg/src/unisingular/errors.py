"""Exception types shared across the package."""


class UnisingularError(Exception):
    "Base class for all package errors."


class SingularMatrix(UnisingularError):
    "A matrix required to be invertible is singular."


class CapExceeded(UnisingularError):
    "An enumeration would exceed the configured size cap."


class IndexOutOfRange(UnisingularError):
    "A vector index lies outside [0, r^n)."


class NotCoprime(UnisingularError):
    "Arguments required to be coprime are not."


class UnsupportedDimension(UnisingularError):
    "The operation is only implemented for a small range of dimensions."


class UnsupportedShape(UnisingularError):
    "The input does not have the shape this construction requires."


class TrivialCharacter(UnisingularError):
    "A nontrivial linear character is required."


class MalformedWitness(UnisingularError):
    "A serialized certificate is structurally invalid."


class ParseError(UnisingularError):
    "A data file does not conform to its schema."


class InvariantViolation(UnisingularError):
    "Loaded data fails a consistency identity."


class IncompletePowerMap(UnisingularError):
    "A power-map query cannot be resolved from the table data."


class NonIntegralMultiplicity(UnisingularError):
    "A fixed-point multiplicity came out non-integral (bad table data)."


class ConductorMismatch(UnisingularError):
    "Cyclotomic values could not be brought to a common conductor."


class NotOddPrimePower(UnisingularError):
    "The argument must be an odd prime power > 3."


class OutOfRange(UnisingularError):
    "A catalog query lies outside the supported range."


class NotCertifiableAtDeskScale(UnisingularError):
    "The requested witness cannot be certified by desk-scale computation."
