"""
@package quiverpy.rep.Rep
@brief Finite-dimensional representations of quivers with monomial relations
@date 2026-10-16
"""
from __future__ import annotations
from typing import Dict, Mapping, Optional, Sequence, Tuple
import logging
from sympy.polys.matrices import DomainMatrix

from ..exceptions import RepresentationError, RelationViolation
from ..math import linalg
from ..math.Field import Field
from ..quiver.PathWord import PathWord
from ..quiver.QuiverPresentation import QuiverPresentation


__all__ = ["Rep", "ValidationReport"]


logger = logging.getLogger(__name__)


class ValidationReport:
  """Outcome of checking the relations of a representation"""

  def __init__(self, relation: Optional[PathWord] = None) -> None:
    """
    @brief Constructor
    @param relation  The first violated relation word, None if every relation holds
    @returns         None
    """
    self.__relation = relation


  def __bool__(self) -> bool:
    return self.__relation is None


  def __str__(self) -> str:
    """Simple string representation"""
    if self.__relation is None:
      return "ok"
    return f"violation: relation {' '.join(self.__relation.arrows)} does not vanish"


  def __repr__(self) -> str:
    """Comprehensive string representation"""
    return f"ValidationReport(ok={self.ok}, relation={self.__relation!r})"


  @property
  def ok(self) -> bool:
    """Whether every relation composite is zero"""
    return self.__relation is None


  @property
  def relation(self) -> Optional[PathWord]:
    """The first violated relation word"""
    return self.__relation


class Rep:
  """
  @brief A representation: a vector space per vertex and a matrix per arrow
  @details The matrix of an arrow a: t -> h has shape (dim h, dim t) and acts on column vectors. The matrix of a
  path a_1 ... a_k is M(a_k) ... M(a_1). Entries live in the domain of the field tag. Relations are not enforced at
  construction, use validate or check.
  """

  def __init__(self, presentation: QuiverPresentation, dims: Mapping[str, int], maps: Mapping[str, object] = None,
               field: Field = None) -> None:
    """
    @brief Constructor
    @param presentation         The quiver with relations
    @param dims                 Dimension per vertex. Missing vertices get dimension 0
    @param maps                 Matrix per arrow, as nested rows or DomainMatrix. Missing arrows get the zero matrix
    @param field                Field of the entries. Defaults to the rationals
    @raises RepresentationError  Raised on unknown vertices or arrows, negative dimensions and shape mismatches
    @returns                    None
    """
    field = field if field is not None else Field.rationals()
    maps  = maps if maps is not None else {}

    for vertex, dim in dims.items():
      if not presentation.quiver.has_vertex(str(vertex)):
        raise RepresentationError(f"Unknown vertex in dimension vector! ({vertex!r})")
      if int(dim) < 0:
        raise RepresentationError(f"Dimensions must be nonnegative! ({vertex}: {dim})")
    dims = {v: int(dims.get(v, 0)) for v in presentation.vertices}

    arrow_ids = {a.id for a in presentation.arrows}
    for arrow_id in maps:
      if arrow_id not in arrow_ids:
        raise RepresentationError(f"Unknown arrow in maps! ({arrow_id!r})")

    matrices = {}
    for arrow in presentation.arrows:
      shape = (dims[arrow.head], dims[arrow.tail])
      value = maps.get(arrow.id)
      if value is None:
        matrices[arrow.id] = linalg.zeros(*shape, field)
        continue
      if isinstance(value, DomainMatrix):
        if value.domain != field.domain:
          raise RepresentationError(f"Matrix over the wrong field! ({arrow.id}: {value.domain} != {field.domain})")
        matrix = value
      else:
        rows = [list(row) for row in value]
        if len(rows) != shape[0] or any(len(row) != shape[1] for row in rows):
          raise RepresentationError(f"Matrix shape does not match dimensions! ({arrow.id}: expected {shape})")
        matrix = linalg.matrix(rows, field, shape)
      if matrix.shape != shape:
        raise RepresentationError(f"Matrix shape does not match dimensions! ({arrow.id}: {matrix.shape} != {shape})")
      matrices[arrow.id] = matrix

    self.__presentation = presentation
    self.__field        = field
    self.__dims         = dims
    self.__maps         = matrices


  @classmethod
  def zero(cls, presentation: QuiverPresentation, dims: Mapping[str, int], field: Field = None) -> Rep:
    """Representation with the given dimensions and all maps zero"""
    return cls(presentation, dims, {}, field)


  @classmethod
  def simple(cls, presentation: QuiverPresentation, vertex: str, field: Field = None) -> Rep:
    """The simple representation S^x"""
    presentation.quiver.index(vertex)
    return cls(presentation, {vertex: 1}, {}, field)


  def __str__(self) -> str:
    """Simple string representation"""
    dims = ", ".join(str(d) for d in self.dim_vector)
    return f"Representation over {self.__field} with dimension vector ({dims})"


  def __repr__(self) -> str:
    """Comprehensive string representation"""
    lines = [str(self)]
    for arrow in self.__presentation.arrows:
      lines.append(f"{arrow.id}: {linalg.to_python_rows(self.__maps[arrow.id], self.__field)}")
    return "\n".join(lines)


  def __eq__(self, other: object) -> bool:
    """Equality of the data, not isomorphism"""
    if not isinstance(other, Rep):
      return NotImplemented
    return self.__field == other.field and self.__presentation == other.presentation and \
           self.__dims == other.dims and all(linalg.equal(self.__maps[a], other.matrix(a)) for a in self.__maps)


  def __hash__(self) -> int:
    return hash((self.__field, self.dim_vector))


  def __add__(self, other: Rep) -> Rep:
    return self.direct_sum(other)


  @property
  def presentation(self) -> QuiverPresentation:
    """The quiver with relations"""
    return self.__presentation


  @property
  def field(self) -> Field:
    """The field of the entries"""
    return self.__field


  @property
  def dims(self) -> Dict[str, int]:
    """Dimension per vertex"""
    return dict(self.__dims)


  @property
  def dim_vector(self) -> Tuple[int, ...]:
    """Dimensions in vertex order"""
    return tuple(self.__dims[v] for v in self.__presentation.vertices)


  @property
  def total_dim(self) -> int:
    return sum(self.__dims.values())


  @property
  def is_zero(self) -> bool:
    return self.total_dim == 0


  @property
  def maps(self) -> Dict[str, DomainMatrix]:
    """Matrix per arrow id"""
    return dict(self.__maps)


  def dim(self, vertex: str) -> int:
    return self.__dims[vertex]


  def matrix(self, arrow_id: str) -> DomainMatrix:
    """
    @brief Matrix of an arrow
    @raises RepresentationError  Raised for unknown arrow ids
    """
    try:
      return self.__maps[arrow_id]
    except KeyError:
      raise RepresentationError(f"Unknown arrow! ({arrow_id!r})")


  def path_matrix(self, path: PathWord) -> DomainMatrix:
    """Matrix of a path, the identity for trivial paths"""
    result = linalg.eye(self.__dims[path.source], self.__field)
    for arrow_id in path.arrows:
      result = linalg.matmul(self.__maps[arrow_id], result)
    return result


  def validate(self) -> ValidationReport:
    """
    @brief Checks the relations
    @returns  Report naming the first relation (in presentation order) whose composite is nonzero
    """
    for relation in self.__presentation.relations:
      if not linalg.is_zero(self.path_matrix(relation)):
        logger.debug("Relation %s violated", relation)
        return ValidationReport(relation)
    return ValidationReport()


  def check(self) -> Rep:
    """
    @brief Validates and returns the representation
    @raises RelationViolation  Raised if some relation composite is nonzero
    """
    report = self.validate()
    if not report:
      raise RelationViolation(f"Relation does not vanish! ({' '.join(report.relation.arrows)})", report.relation.arrows)
    return self


  def direct_sum(self, other: Rep) -> Rep:
    """
    @brief Direct sum with block diagonal matrices, this representation first
    @raises RepresentationError  Raised on a presentation or field mismatch
    """
    self.require_compatible(other)
    dims = {v: self.__dims[v] + other.dim(v) for v in self.__presentation.vertices}
    maps = {a: linalg.block_diagonal([self.__maps[a], other.matrix(a)], self.__field.domain) for a in self.__maps}
    return Rep(self.__presentation, dims, maps, self.__field)


  def require_compatible(self, other: Rep) -> None:
    """
    @brief Checks that two representations share presentation and field
    @raises RepresentationError  Raised on mismatch
    """
    if self.__field != other.field:
      raise RepresentationError(f"Representations over different fields! ({self.__field} != {other.field})")
    if self.__presentation != other.presentation:
      raise RepresentationError("Representations of different presentations!")


  def dual(self) -> Rep:
    """The representation of the opposite presentation given by the transposed matrices"""
    maps = {a: linalg.transpose(m) for a, m in self.__maps.items()}
    return Rep(self.__presentation.opposite(), self.__dims, maps, self.__field)


  def change_basis(self, basis: Mapping[str, DomainMatrix]) -> Rep:
    """
    @brief The isomorphic representation in new coordinates
    @param basis  Invertible matrix P_x per vertex whose columns are the new basis of V_x
    @returns      W with W(a) = P_h^-1 V(a) P_t, so that P is an isomorphism W -> V
    """
    inverses = {v: linalg.inverse(basis[v]) for v in self.__presentation.vertices}
    maps = {}
    for arrow in self.__presentation.arrows:
      maps[arrow.id] = linalg.matmul(inverses[arrow.head], linalg.matmul(self.__maps[arrow.id], basis[arrow.tail]))
    return Rep(self.__presentation, self.__dims, maps, self.__field)


  def lift(self, field: Field) -> Rep:
    """
    @brief Reads the entries, as integers or fractions, into another field
    @details Used to lift F_p representatives with 0/1 entries to the rationals
    """
    maps = {a: linalg.to_python_rows(m, self.__field) for a, m in self.__maps.items()}
    return Rep(self.__presentation, self.__dims, maps, field)


  def rows(self, arrow_id: str) -> Sequence[Sequence[object]]:
    """Matrix of an arrow as Python numbers"""
    return linalg.to_python_rows(self.matrix(arrow_id), self.__field)
