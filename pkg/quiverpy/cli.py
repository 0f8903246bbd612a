"""
@package quiverpy.cli
@brief Command line interface
@details Exit codes: 0 on success, 1 on domain errors and failing verification suites, 2 on usage errors.
@date 2026-10-16
"""
from typing import Optional
import json
import logging
import click
import pandas as pd

from .atlas import CaseId, characteristic_cycle, get_case, list_cases, pyasetskii
from .exceptions import QuiverPyError
from .quiver.QuiverPresentation import QuiverPresentation
from .quiver.builders import builtin_presentation
from .quiver.io import load_presentation, presentation_to_dict
from .rep.decompose import decompose
from .rep.io import load_rep, rep_to_dict
from .rep.strings import classify_AA
from .reptype.TitsForm import tits_form
from .reptype.census import CENSUS_PRIMES, MAX_CELLS, census, census_all
from .verify import SUITES, run_all, run_suite


__all__ = ["main"]


logger = logging.getLogger(__name__)


_LOG_LEVELS = [logging.WARNING, logging.INFO, logging.DEBUG]


class _Group(click.Group):
  """Group turning domain errors into exit code 1 with a one-line diagnostic"""

  def invoke(self, ctx: click.Context):
    try:
      return super().invoke(ctx)
    except QuiverPyError as e:
      click.secho(f"Error: {e}", fg="red", err=True)
      ctx.exit(1)


def _presentation(builtin: Optional[str], file: Optional[str]) -> QuiverPresentation:
  if (builtin is None) == (file is None):
    raise click.UsageError("Give exactly one of --builtin and --file!")
  return builtin_presentation(builtin) if builtin is not None else load_presentation(file)


def _echo_json(data) -> None:
  click.echo(json.dumps(data, indent=2, ensure_ascii=False))


def _quiver_options(f):
  f = click.option("--file", "file", type=click.Path(exists=True, dir_okay=False), help="Quiver JSON file")(f)
  f = click.option("--builtin", help="AA:<n>, AA3c, EE6, B8 or B8op")(f)
  return f


@click.group(cls=_Group, context_settings={"help_option_names": ["-h", "--help"]})
@click.option("-v", "--verbose", count=True, help="Repeat for more log output")
@click.option("--color/--no-color", default=None, help="Force or disable colored output")
@click.pass_context
def main(ctx: click.Context, verbose: int, color: Optional[bool]) -> None:
  """Quivers, representations and the atlas of equivariant D-modules on spherical vector spaces"""
  logging.basicConfig(level=_LOG_LEVELS[min(verbose, 2)], format="%(levelname)s %(name)s: %(message)s")
  ctx.color = color


@main.group(cls=_Group)
def atlas() -> None:
  """Query the atlas of spherical vector spaces"""


@atlas.command("list")
def atlas_list() -> None:
  """List the families with their parameter ranges"""
  frame = pd.DataFrame([(t.family, t.constraint, t.description) for t in list_cases()],
                       columns=["family", "parameters", "space"])
  click.echo(frame.to_string(index=False))


@atlas.command("show")
@click.argument("family")
@click.option("--n", "n", type=int, default=None)
@click.option("--m", "m", type=int, default=None)
@click.option("--json", "as_json", is_flag=True, help="Machine readable output")
def atlas_show(family: str, n: Optional[int], m: Optional[int], as_json: bool) -> None:
  """Show the record of a case"""
  case_id = CaseId(family, n=n, m=m)
  record  = get_case(case_id)
  if as_json:
    _echo_json(record.to_dict())
    return
  click.echo(record.to_text())
  pairing = pyasetskii(case_id)
  if pairing is not None:
    click.echo("pyasetskii: " + ", ".join(f"{o}^v = {p}" for o, p in pairing.items()))
  click.echo("characteristic cycles:")
  for vertex in record.quiver.vertices:
    click.echo(f"  {vertex}: {characteristic_cycle(case_id, vertex)}")


@main.group(cls=_Group)
def quiver() -> None:
  """Quivers with relations"""


@quiver.command("paths")
@_quiver_options
@click.option("--json", "as_json", is_flag=True)
def quiver_paths(builtin: Optional[str], file: Optional[str], as_json: bool) -> None:
  """List the nonzero paths"""
  pres  = _presentation(builtin, file)
  paths = pres.nonzero_paths()
  if as_json:
    data = presentation_to_dict(pres)
    data["paths"] = [{"source": p.source, "target": p.target, "arrows": list(p.arrows)} for p in paths]
    _echo_json(data)
    return
  for p in paths:
    click.echo(f"{p.source} -> {p.target}: {' '.join(p.arrows) if len(p) else '(trivial)'}")
  click.echo(f"{len(paths)} nonzero paths")


@quiver.command("cartan")
@_quiver_options
def quiver_cartan(builtin: Optional[str], file: Optional[str]) -> None:
  """Print the Cartan matrix, entry (x, y) counting the nonzero paths from x to y"""
  pres = _presentation(builtin, file)
  frame = pd.DataFrame(pres.cartan_matrix(), index=list(pres.vertices), columns=list(pres.vertices))
  click.echo(frame.to_string())


@main.group(cls=_Group)
def rep() -> None:
  """Representations read from JSON files"""


@rep.command("validate")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
def rep_validate(file: str) -> None:
  """Check the relations of a representation"""
  report = load_rep(file).validate()
  if report:
    click.echo("valid")
    return
  click.echo(f"relation violated: {' '.join(report.relation.arrows)}")
  click.get_current_context().exit(1)


@rep.command("decompose")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "as_json", is_flag=True)
def rep_decompose(file: str, as_json: bool) -> None:
  """Decompose a representation into indecomposables"""
  V = load_rep(file).check()
  decomposition = decompose(V)
  if as_json:
    _echo_json({"summands": [rep_to_dict(S) for S in decomposition.summands]})
    return
  click.echo(f"{len(decomposition)} indecomposable summands")
  for k, S in enumerate(decomposition.summands, start=1):
    click.echo(f"[{k}] dims={S.dim_vector}")
    for arrow in S.presentation.arrows:
      if S.dim(arrow.head) > 0 and S.dim(arrow.tail) > 0:
        click.echo(f"    {arrow.id} = {[[str(x) for x in row] for row in S.rows(arrow.id)]}")


@rep.command("classify-aa")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--workers", type=click.IntRange(min=1), default=1)
def rep_classify_aa(file: str, workers: int) -> None:
  """Write a representation of AA_n as a sum of string modules"""
  labels = classify_AA(load_rep(file), workers=workers)
  click.echo(" + ".join(str(s) for s in labels))


@main.group(cls=_Group)
def tits() -> None:
  """Tits forms"""


@tits.command("analyze")
@_quiver_options
@click.option("--json", "as_json", is_flag=True)
def tits_analyze(builtin: Optional[str], file: Optional[str], as_json: bool) -> None:
  """Tits form, positive semi-definiteness and radical"""
  q = tits_form(_presentation(builtin, file))
  psd, radical = q.is_psd(), q.radical_lattice()
  if as_json:
    _echo_json({"vertices": list(q.vertices), "terms": [[u, v, c] for (u, v), c in q.terms().items()],
                "psd": psd, "radical": [list(r) for r in radical]})
    return
  click.echo(str(q))
  click.echo(f"positive semi-definite: {'yes' if psd else 'no'}")
  click.echo("radical: " + (", ".join(str(r) for r in radical) if radical else "0"))


@main.command("census")
@_quiver_options
@click.option("--dims", required=True, help="Dimension vector, or bound with --all-dims, e.g. 1,1,1")
@click.option("--all-dims", is_flag=True, help="Every nonzero dimension vector below --dims")
@click.option("--prime", type=click.Choice([str(p) for p in CENSUS_PRIMES]), default="2", show_default=True)
@click.option("--max-cells", type=click.IntRange(min=0, max=MAX_CELLS), default=MAX_CELLS, show_default=True)
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--json", "as_json", is_flag=True)
def census_command(builtin: Optional[str], file: Optional[str], dims: str, all_dims: bool, prime: str,
                   max_cells: int, workers: int, as_json: bool) -> None:
  """Count isomorphism classes over F_p by brute force"""
  pres = _presentation(builtin, file)
  try:
    vector = [int(d) for d in dims.split(",")]
  except ValueError:
    raise click.BadParameter(f"Not a comma separated list of integers! ({dims})", param_hint="--dims")
  if len(vector) != len(pres.vertices) or any(d < 0 for d in vector):
    raise click.BadParameter(f"Need {len(pres.vertices)} nonnegative entries! ({dims})", param_hint="--dims")

  if all_dims:
    report = census_all(pres, vector, int(prime), max_cells=max_cells, workers=workers)
  else:
    report = census(pres, vector, int(prime), max_cells=max_cells, workers=workers)
  if as_json:
    _echo_json(report.to_dict())
    return
  click.echo(report.to_text())
  if all_dims and report.class_count > 0:
    click.echo(report.to_frame().to_string(index=False))


@main.command("verify")
@click.argument("suite", type=click.Choice(["all"] + list(SUITES)), default="all")
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def verify_command(ctx: click.Context, suite: str, as_json: bool) -> None:
  """Run the verification suites"""
  results = run_all() if suite == "all" else [run_suite(suite)]
  if as_json:
    _echo_json({"passed": all(results), "suites": [r.to_dict() for r in results]})
  else:
    for result in results:
      click.echo(result.to_text())
    click.secho("PASS" if all(results) else "FAIL", fg="green" if all(results) else "red")
  if not all(results):
    ctx.exit(1)


if __name__ == "__main__":
  main()
