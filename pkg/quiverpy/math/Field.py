"""
@package quiverpy.math.Field
@brief Exact scalar fields: the rationals and small prime fields
@date 2026-10-16
"""
from __future__ import annotations
from typing import Iterator, Union
from fractions import Fraction
from sympy import QQ, GF, isprime

from ..exceptions import RepresentationError, FormatError


__all__ = ["Field", "Scalar"]


Scalar = Union[int, Fraction, str]


class Field:
  """
  @brief Field tag carried by every representation
  @details Wraps the sympy domain QQ or GF(p). Elements live in the sympy domain so that DomainMatrix arithmetic
  stays exact. Rationals are held in lowest terms with a positive denominator by the domain itself.
  """

  def __init__(self, p: int = 0) -> None:
    """
    @brief Constructor
    @param p                    Characteristic of the field. 0 selects the rationals, otherwise p must be a prime
    @raises RepresentationError  Raised if p is neither 0 nor a prime
    @returns                    None
    """
    if p != 0 and not isprime(p):
      raise RepresentationError(f"The characteristic must be 0 or a prime! ({p} is not)")

    self.__p      = p
    self.__domain = QQ if p == 0 else GF(p)


  @classmethod
  def rationals(cls) -> Field:
    """The field of rational numbers"""
    return cls(0)


  @classmethod
  def prime(cls, p: int) -> Field:
    """The prime field F_p"""
    return cls(p)


  @classmethod
  def from_tag(cls, tag: str) -> Field:
    """
    @brief Parses the file-format tag
    @param tag           Either 'Q' or 'Fp:<p>'
    @raises FormatError  Raised for any other tag
    @returns             The field
    """
    if tag == "Q":
      return cls(0)
    if tag.startswith("Fp:"):
      try:
        return cls(int(tag[3:]))
      except ValueError:
        pass
    raise FormatError(f"Invalid field tag! ({tag!r} not 'Q' or 'Fp:<p>')")


  def __str__(self) -> str:
    """Simple string representation"""
    return "Q" if self.__p == 0 else f"F_{self.__p}"


  def __repr__(self) -> str:
    """Comprehensive string representation"""
    return f"Field({self.tag})"


  def __eq__(self, other: object) -> bool:
    """Fields are equal when their characteristics are"""
    return isinstance(other, Field) and self.__p == other.characteristic


  def __hash__(self) -> int:
    return hash(("Field", self.__p))


  @property
  def characteristic(self) -> int:
    """Characteristic of the field"""
    return self.__p


  @property
  def domain(self):
    """The sympy domain (QQ or GF(p))"""
    return self.__domain


  @property
  def tag(self) -> str:
    """The file-format tag"""
    return "Q" if self.__p == 0 else f"Fp:{self.__p}"


  @property
  def is_finite(self) -> bool:
    """Whether the field is a prime field"""
    return self.__p != 0


  @property
  def zero(self):
    return self.__domain.zero


  @property
  def one(self):
    return self.__domain.one


  def convert(self, value) -> object:
    """
    @brief Converts a Python value into a domain element
    @details Accepts ints, Fractions, 'num/den' strings and elements of either domain. Over F_p a rational is
    reduced modulo p, which fails if p divides the denominator.
    @param value                 The value
    @raises RepresentationError  Raised if the value can not be read as an element of the field
    @returns                     The domain element
    """
    if isinstance(value, bool):
      value = int(value)
    if isinstance(value, str):
      try:
        value = Fraction(value.strip())
      except (ValueError, ZeroDivisionError):
        raise RepresentationError(f"Invalid scalar! ({value!r} is not of form 'num/den')")
    elif not isinstance(value, (int, Fraction)):
      value = self.__from_domain_element(value)

    if self.__p == 0:
      return QQ(value.numerator, value.denominator) if isinstance(value, Fraction) else QQ(value)

    if isinstance(value, Fraction):
      if value.denominator % self.__p == 0:
        raise RepresentationError(f"Scalar not defined over F_{self.__p}! ({value})")
      return self.__domain(value.numerator) / self.__domain(value.denominator)
    return self.__domain(value)


  def __from_domain_element(self, value) -> Union[int, Fraction]:
    """Reads an element of QQ or of some GF(p) back into Python numbers"""
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
      return Fraction(int(value.numerator), int(value.denominator))
    try:
      return int(value)
    except (TypeError, ValueError):
      raise RepresentationError(f"Invalid scalar! ({value!r})")


  def to_python(self, element) -> Union[int, Fraction]:
    """
    @brief Converts a domain element back into a Python number
    @details Rationals come back as Fractions, F_p elements as the representative in {0, ..., p-1}
    """
    if self.__p == 0:
      return Fraction(int(element.numerator), int(element.denominator))
    return int(element) % self.__p


  def to_json(self, element) -> Union[int, str]:
    """File-format rendering of a domain element"""
    value = self.to_python(element)
    if isinstance(value, Fraction):
      return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return value


  def elements(self) -> Iterator:
    """
    @brief Iterates over the elements of a prime field in the order 0, 1, ..., p-1
    @raises RepresentationError  Raised for the rationals
    """
    if self.__p == 0:
      raise RepresentationError("The rationals can not be enumerated!")
    for k in range(self.__p):
      yield self.__domain(k)
