"""Exception hierarchy.

Each exception carries a machine-readable ``kind`` used by the command line
front end when it emits its JSON error object.
"""

from __future__ import annotations


class VarRegionError(Exception):
    kind = "error"

    def to_json(self) -> dict:
        return {"kind": self.kind, "message": str(self)}


class InvalidInputError(VarRegionError, ValueError):
    """Input violates a documented precondition."""

    kind = "invalid_input"


class ModulusOutOfRangeError(InvalidInputError):
    kind = "modulus_out_of_range"


class InconsistentDataError(InvalidInputError):
    """No admissible function exists for the supplied data."""

    kind = "inconsistent_data"


class InfeasibleError(InvalidInputError):
    """A prescribed derivative lies outside its variability disk."""

    kind = "infeasible"

    def __init__(self, message: str, index: int, excess: float):
        super().__init__(message)
        self.index = index
        self.excess = excess

    def to_json(self) -> dict:
        out = super().to_json()
        out["index"] = self.index
        out["excess"] = self.excess
        return out


class DegeneracyError(InvalidInputError):
    """A unit-modulus hyperbolic derivative blocks the requested computation."""

    kind = "degenerate"

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index

    def to_json(self) -> dict:
        out = super().to_json()
        out["index"] = self.index
        return out


class NumericalError(VarRegionError, ArithmeticError):
    kind = "numerical"


class SeriesDivisionError(NumericalError, ZeroDivisionError):
    kind = "division_floor"

    def __init__(self, modulus: float):
        super().__init__(f"divisor constant term too small: |c0| = {modulus:.3e}")
        self.modulus = modulus


class SeriesAlignmentError(VarRegionError, ValueError):
    """Series operands have mismatched centers/orders, or a bad composition."""

    kind = "series_alignment"


class PoleError(NumericalError, ZeroDivisionError):
    kind = "pole"
