"""
@package quiverpy.quiver.io
@brief JSON file format for quiver presentations
@details {"vertices": [...], "arrows": [{"id": ..., "tail": ..., "head": ...}, ...], "relations": [[arrow ids], ...]}
with relation words in tail-to-head order. Only monomial relations are accepted.
@date 2026-10-16
"""
from typing import Any, Dict
from pathlib import Path
import json

from ..exceptions import FormatError, QuiverError
from .Quiver import Quiver
from .QuiverPresentation import QuiverPresentation


__all__ = ["presentation_to_dict", "presentation_from_dict", "load_presentation", "dump_presentation"]


def presentation_to_dict(pres: QuiverPresentation) -> Dict[str, Any]:
  """File-format dictionary of a presentation"""
  return {
    "vertices"  : list(pres.vertices),
    "arrows"    : [{"id": a.id, "tail": a.tail, "head": a.head} for a in pres.arrows],
    "relations" : [list(r.arrows) for r in pres.relations]
  }


def presentation_from_dict(data: Dict[str, Any]) -> QuiverPresentation:
  """
  @brief Parses the file-format dictionary
  @raises FormatError  Raised on missing keys, non-monomial relations or any invalid quiver data
  @returns             The presentation
  """
  if not isinstance(data, dict):
    raise FormatError(f"A quiver must be a JSON object! (got {type(data).__name__})")
  for key in ("vertices", "arrows"):
    if key not in data:
      raise FormatError(f"Quiver is missing a key! ({key!r})")

  try:
    arrows = [(a["id"], a["tail"], a["head"]) for a in data["arrows"]]
  except (KeyError, TypeError):
    raise FormatError("Every arrow needs the keys 'id', 'tail' and 'head'!")

  relations = data.get("relations", [])
  for relation in relations:
    if not isinstance(relation, list) or not all(isinstance(a, str) for a in relation):
      raise FormatError(f"Only monomial relations given as lists of arrow ids are supported! ({relation!r})")

  try:
    return QuiverPresentation(Quiver(data["vertices"], arrows), relations)
  except QuiverError as e:
    raise FormatError(str(e))


def load_presentation(path: str) -> QuiverPresentation:
  """
  @brief Reads a presentation from a UTF-8 JSON file
  @raises FormatError  Raised if the file can not be read or parsed
  """
  try:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
  except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
    raise FormatError(f"Could not read quiver file! ({path}: {e})")
  return presentation_from_dict(data)


def dump_presentation(pres: QuiverPresentation, path: str = None) -> str:
  """Serialises a presentation, writing it to `path` when given"""
  text = json.dumps(presentation_to_dict(pres), indent=2, ensure_ascii=False)
  if path is not None:
    Path(path).write_text(text + "\n", encoding="utf-8")
  return text
