"""
@package quiverpy.atlas.CaseId
@brief Identifiers of the irreducible spherical vector spaces in the atlas
@date 2026-10-16
"""
from __future__ import annotations
from typing import Dict, NamedTuple, Optional, Tuple

from ..exceptions import AtlasError


__all__ = ["CaseId", "CaseTemplate", "FAMILIES"]


class CaseTemplate(NamedTuple):
  """A family of cases with its integer parameters and their lower bounds"""
  family: str
  parameters: Tuple[str, ...]
  minimum: Dict[str, int]
  description: str

  @property
  def constraint(self) -> str:
    """Human readable parameter range"""
    return ", ".join(f"{p} >= {self.minimum[p]}" for p in self.parameters) or "no parameters"


# Map from family tags to their templates, in the order of the classification
_family_map = {
  "gl_m_gl_n" : CaseTemplate("gl_m_gl_n", ("m", "n"), {"m": 1, "n": 1}, "GL_m x GL_n on m x n matrices"),
  "skew"      : CaseTemplate("skew", ("n",), {"n": 2}, "GL_n on skew-symmetric n x n matrices"),
  "symmetric" : CaseTemplate("symmetric", ("n",), {"n": 1}, "GL_n on symmetric n x n matrices"),
  "sp2n_gl2"  : CaseTemplate("sp2n_gl2", ("n",), {"n": 2}, "Sp_2n x GL_2 on 2n x 2 matrices"),
  "sp2n_gl3"  : CaseTemplate("sp2n_gl3", ("n",), {"n": 2}, "Sp_2n x GL_3 on 2n x 3 matrices"),
  "sp4_glm"   : CaseTemplate("sp4_glm", ("m",), {"m": 5}, "Sp_4 x GL_m on 4 x m matrices"),
  "sp4_gl4"   : CaseTemplate("sp4_gl4", (), {}, "Sp_4 x GL_4 on 4 x 4 matrices"),
  "sp_2n"     : CaseTemplate("sp_2n", ("n",), {"n": 1}, "Sp_2n x C* on C^2n"),
  "spin10"    : CaseTemplate("spin10", (), {}, "Spin_10 x C* on a half-spin representation C^16"),
  "so_n"      : CaseTemplate("so_n", ("n",), {"n": 3}, "SO_n x C* on C^n"),
  "spin7"     : CaseTemplate("spin7", (), {}, "Spin_7 x C* on the spin representation C^8"),
  "spin9"     : CaseTemplate("spin9", (), {}, "Spin_9 x C* on the spin representation C^16"),
  "g2"        : CaseTemplate("g2", (), {}, "G_2 x C* on C^7"),
  "e6"        : CaseTemplate("e6", (), {}, "E_6 x C* on C^27")
}

FAMILIES = tuple(_family_map.keys())


class CaseId:
  """
  @brief A family tag together with its parameters
  @details Parameters a family does not take must be left out, parameters it takes must lie in range.
  """

  def __init__(self, family: str, n: Optional[int] = None, m: Optional[int] = None) -> None:
    """
    @brief Constructor
    @param family       One of the family tags in FAMILIES
    @param n            Parameter n where the family has one
    @param m            Parameter m where the family has one
    @raises AtlasError   Raised for unknown families and missing, superfluous or out-of-range parameters
    @returns            None
    """
    if family not in _family_map:
      raise AtlasError(f"Unknown family! ({family!r} not in {list(FAMILIES)})")
    template = _family_map[family]

    values = {"n": n, "m": m}
    for name, value in values.items():
      if name in template.parameters:
        if value is None:
          raise AtlasError(f"Missing parameter! ({family} needs {name})")
        if int(value) < template.minimum[name]:
          raise AtlasError(f"Parameter out of range! ({family}: {name} = {value} < {template.minimum[name]})")
      elif value is not None:
        raise AtlasError(f"Superfluous parameter! ({family} takes no {name})")

    self.__family = family
    self.__n      = None if n is None else int(n)
    self.__m      = None if m is None else int(m)


  def __eq__(self, other: object) -> bool:
    return isinstance(other, CaseId) and self.key == other.key


  def __hash__(self) -> int:
    return hash(self.key)


  def __str__(self) -> str:
    """Simple string representation"""
    params = [f"{p}={getattr(self, p)}" for p in self.template.parameters]
    return f"{self.__family}({', '.join(params)})" if params else self.__family


  def __repr__(self) -> str:
    """Comprehensive string representation"""
    return f"CaseId({self.__family!r}, n={self.__n}, m={self.__m})"


  @property
  def family(self) -> str:
    """The family tag"""
    return self.__family


  @property
  def n(self) -> Optional[int]:
    return self.__n


  @property
  def m(self) -> Optional[int]:
    return self.__m


  @property
  def key(self) -> Tuple[str, Optional[int], Optional[int]]:
    return self.__family, self.__n, self.__m


  @property
  def template(self) -> CaseTemplate:
    """The template of the family"""
    return _family_map[self.__family]


  @staticmethod
  def template_of(family: str) -> CaseTemplate:
    """
    @brief Template of a family tag
    @raises AtlasError  Raised for unknown families
    """
    if family not in _family_map:
      raise AtlasError(f"Unknown family! ({family!r} not in {list(FAMILIES)})")
    return _family_map[family]
