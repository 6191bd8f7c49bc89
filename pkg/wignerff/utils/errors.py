#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved


class WignerFFError(Exception):
    """Base class of all validation errors raised by wignerff."""


class FieldError(WignerFFError):
    pass


class FieldMismatchError(FieldError):
    """Operands belong to different finite fields."""


class ZeroInverseError(FieldError, ZeroDivisionError):
    pass


class NoSuchW(WignerFFError):
    """The two field bases are not related by f_i = w * dual(e)_i."""


class GeometryError(WignerFFError):
    pass


class SingularMapError(GeometryError):
    pass


class NonUnitDeterminant(GeometryError):
    pass


class ConjugationError(WignerFFError):
    """No unique unitary realizes the requested conjugation."""


class InvalidStateError(WignerFFError):
    pass


class DimensionMismatch(WignerFFError):
    pass


class InconsistentProbabilities(WignerFFError):
    pass


class EnumerationCapExceeded(WignerFFError):
    pass


class UnknownPresetError(WignerFFError):
    pass


class MalformedInputError(WignerFFError):
    pass


class GoldenMismatchError(WignerFFError):
    pass
