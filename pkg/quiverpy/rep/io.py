"""
@package quiverpy.rep.io
@brief JSON file format for representations
@details {"quiver": <quiver object | relative file path | "builtin:<name>">, "field": "Q" | "Fp:<p>",
"dims": {vertex: int}, "maps": {arrow id: [[entries]]}} with rational entries as integers or "num/den" strings and
F_p entries as integers in 0..p-1.
@date 2026-10-16
"""
from typing import Any, Dict, Optional
from fractions import Fraction
from pathlib import Path
import json

from ..exceptions import FormatError, QuiverError
from ..math import linalg
from ..math.Field import Field
from ..quiver.QuiverPresentation import QuiverPresentation
from ..quiver.builders import builtin_presentation
from ..quiver.io import load_presentation, presentation_from_dict, presentation_to_dict
from .Rep import Rep


__all__ = ["rep_to_dict", "rep_from_dict", "load_rep", "dump_rep"]


def rep_to_dict(V: Rep, quiver_ref: Optional[str] = None) -> Dict[str, Any]:
  """
  @brief File-format dictionary of a representation
  @param V           The representation
  @param quiver_ref  Reference written instead of the inline quiver, e.g. 'builtin:AA:3'
  @returns           The dictionary
  """
  return {
    "quiver" : quiver_ref if quiver_ref is not None else presentation_to_dict(V.presentation),
    "field"  : V.field.tag,
    "dims"   : V.dims,
    "maps"   : {a.id: [[V.field.to_json(x) for x in row] for row in linalg.entries(V.matrix(a.id))]
                for a in V.presentation.arrows if V.dim(a.head) > 0 and V.dim(a.tail) > 0}
  }


def _resolve_quiver(ref: Any, base_dir: Optional[Path]) -> QuiverPresentation:
  if isinstance(ref, dict):
    return presentation_from_dict(ref)
  if not isinstance(ref, str):
    raise FormatError(f"Invalid quiver reference! ({ref!r})")
  if ref.startswith("builtin:"):
    try:
      return builtin_presentation(ref[len("builtin:"):])
    except QuiverError as e:
      raise FormatError(str(e))
  path = Path(ref)
  if base_dir is not None and not path.is_absolute():
    path = base_dir / path
  return load_presentation(str(path))


def _entry(value: Any, field: Field) -> Any:
  """Checks a single matrix entry against the file format"""
  if field.is_finite:
    if isinstance(value, bool) or not isinstance(value, int) or not (0 <= value < field.characteristic):
      raise FormatError(f"Entries over F_{field.characteristic} must be integers in 0..{field.characteristic - 1}! ({value!r})")
    return value
  if isinstance(value, bool) or not isinstance(value, (int, str)):
    raise FormatError(f"Rational entries must be integers or 'num/den' strings! ({value!r})")
  if isinstance(value, str):
    try:
      return Fraction(value)
    except (ValueError, ZeroDivisionError):
      raise FormatError(f"Invalid rational entry! ({value!r})")
  return value


def rep_from_dict(data: Dict[str, Any], base_dir: Optional[str] = None) -> Rep:
  """
  @brief Parses the file-format dictionary
  @param data                 The dictionary
  @param base_dir             Directory against which relative quiver paths are resolved
  @raises FormatError          Raised on malformed data
  @raises RepresentationError  Raised on shape mismatches
  @returns                    The representation
  """
  if not isinstance(data, dict):
    raise FormatError(f"A representation must be a JSON object! (got {type(data).__name__})")
  for key in ("quiver", "dims"):
    if key not in data:
      raise FormatError(f"Representation is missing a key! ({key!r})")

  pres  = _resolve_quiver(data["quiver"], Path(base_dir) if base_dir is not None else None)
  field = Field.from_tag(data.get("field", "Q"))
  dims  = data["dims"]
  maps  = data.get("maps", {})
  if not isinstance(dims, dict) or not all(isinstance(d, int) for d in dims.values()):
    raise FormatError("'dims' must map vertices to integers!")
  if not isinstance(maps, dict):
    raise FormatError("'maps' must map arrow ids to matrices!")

  parsed = {}
  for arrow_id, rows in maps.items():
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
      raise FormatError(f"A matrix must be a list of rows! ({arrow_id})")
    parsed[arrow_id] = [[_entry(x, field) for x in row] for row in rows]
  return Rep(pres, dims, parsed, field)


def load_rep(path: str) -> Rep:
  """
  @brief Reads a representation from a UTF-8 JSON file
  @raises FormatError  Raised if the file can not be read or parsed
  """
  try:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
  except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
    raise FormatError(f"Could not read representation file! ({path}: {e})")
  return rep_from_dict(data, str(Path(path).parent))


def dump_rep(V: Rep, path: str = None, quiver_ref: Optional[str] = None) -> str:
  """Serialises a representation, writing it to `path` when given"""
  text = json.dumps(rep_to_dict(V, quiver_ref), indent=2, ensure_ascii=False)
  if path is not None:
    Path(path).write_text(text + "\n", encoding="utf-8")
  return text
