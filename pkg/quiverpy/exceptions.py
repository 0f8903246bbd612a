"""
@package quiverpy.exceptions
@brief Exception hierarchy for domain errors raised by the library
@date 2026-10-16
"""


__all__ = ["QuiverPyError", "QuiverError", "FormatError", "RepresentationError", "RelationViolation",
           "DecompositionError", "BudgetExceeded", "AtlasError", "PolynomialError"]


class QuiverPyError(ValueError):
  """Base class for every domain error raised by quiverpy"""
  pass


class QuiverError(QuiverPyError):
  """Invalid quiver, path or relation data"""
  pass


class FormatError(QuiverPyError):
  """Malformed quiver or representation file"""
  pass


class RepresentationError(QuiverPyError):
  """Invalid representation data or incompatible representations"""
  pass


class RelationViolation(RepresentationError):
  """A relation composite is not the zero matrix"""

  def __init__(self, message: str, relation: tuple = ()) -> None:
    """
    @brief Constructor
    @param message   Diagnostic message
    @param relation  Arrow ids of the violated relation word
    @returns         None
    """
    super().__init__(message)
    self.relation = tuple(relation)


class DecompositionError(RepresentationError):
  """A representation could not be split or matched"""
  pass


class BudgetExceeded(QuiverPyError):
  """An enumeration would exceed its configured budget"""
  pass


class AtlasError(QuiverPyError):
  """Unknown family, out-of-range parameter, inadmissible orbit or unknown vertex"""
  pass


class PolynomialError(QuiverPyError):
  """Missing variables or mismatched dimensions in polynomial computations"""
  pass
