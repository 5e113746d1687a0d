from functools import wraps
from pathlib import Path
from typing import Callable, Optional, ParamSpec, TypeVar

import typer
from rich.markup import escape

from .apps.reports.render import OutputFormat, ReportFile, serialize_report
from .internal.console import console
from .internal.errors import InputError, JordanError
from .internal.settings import DEFAULT_REDUCTION_DEPTH

app = typer.Typer(
    help="Exact biderivations, centroids and triple homomorphisms of finite-dimensional Jordan algebras.",
    no_args_is_help=True,
)

# Create a type variable for the return type.
TReturn = TypeVar("TReturn")

# Create a ParamSpec variable for capturing argument types.
P = ParamSpec("P")

FORMAT_OPTION = typer.Option(OutputFormat.TEXT, "--format", help="text or structured (JSON)")
OUT_OPTION = typer.Option(None, "--out", help="Write the report here instead of stdout")
ALLOW_OPTION = typer.Option(
    False, "--allow-non-jordan", help="Analyse tables that fail the Jordan identity"
)
QUIET_OPTION = typer.Option(False, "--quiet", help="No progress output on stderr")


def exit_codes(f: Callable[P, TReturn]) -> Callable[P, TReturn]:
    """
    Domain errors become a message on stderr and their exit code.
    """

    @wraps(f)
    def wrapper(*args: P.args, **kwargs: P.kwargs) -> TReturn:
        try:
            return f(*args, **kwargs)
        except JordanError as e:
            console.print("[red]error:[/red]", escape(str(e)))
            raise typer.Exit(code=e.exit_code) from e

    return wrapper


def emit(report: ReportFile, format: OutputFormat, out: Optional[Path]) -> None:
    data = serialize_report(report, format)
    if out is None:
        typer.echo(data.decode("utf-8"), nl=False)
    else:
        out.write_bytes(data)


@app.command()
@exit_codes
def verify(
    algebra: Path,
    module: Optional[Path] = typer.Option(None, "--module", help="Also check a module file"),
    format: OutputFormat = FORMAT_OPTION,
    out: Optional[Path] = OUT_OPTION,
):
    """
    Check commutativity and the Jordan identity (and the module axioms).
    """
    from .apps.reports.commands import verify_command

    emit(verify_command(algebra, module), format, out)


@app.command()
@exit_codes
def analyze(
    algebra: Path,
    allow_non_jordan: bool = ALLOW_OPTION,
    format: OutputFormat = FORMAT_OPTION,
    out: Optional[Path] = OUT_OPTION,
):
    """
    Center, J', J'', perfectness, unit, derivation and centroid dimensions.
    """
    from .apps.reports.commands import analyze_command

    emit(analyze_command(algebra, allow_non_jordan), format, out)


@app.command()
@exit_codes
def bider(
    algebra: Path,
    symmetric: bool = typer.Option(False, "--symmetric"),
    skew: bool = typer.Option(False, "--skew"),
    condition1: bool = typer.Option(False, "--condition1", help="d(w, u o v) = w . d(u, v)"),
    module: Optional[Path] = typer.Option(None, "--module", help="Module file; the regular module by default"),
    centroid: bool = typer.Option(
        False,
        "--centroid",
        help="Compare with the centroid under condition (2); needs J perfect and Z_M(J) = 0",
    ),
    allow_non_jordan: bool = ALLOW_OPTION,
    format: OutputFormat = FORMAT_OPTION,
    out: Optional[Path] = OUT_OPTION,
):
    """
    Solve for the biderivations J x J -> M with the chosen constraints.
    """
    from .apps.biderivations.models import BiderivationFlags
    from .apps.reports.commands import bider_command

    flags = BiderivationFlags(symmetric=symmetric, skew=skew, condition1=condition1)
    emit(bider_command(algebra, flags, module, centroid, allow_non_jordan), format, out)


@app.command()
@exit_codes
def reduce(
    algebra: Path,
    max_depth: int = typer.Option(DEFAULT_REDUCTION_DEPTH, "--max-depth", min=1),
    allow_non_jordan: bool = ALLOW_OPTION,
    quiet: bool = QUIET_OPTION,
    format: OutputFormat = FORMAT_OPTION,
    out: Optional[Path] = OUT_OPTION,
):
    """
    Run the center-quotient / derived-restriction chain and cross-check it.
    """
    from .apps.reports.commands import reduce_command

    emit(reduce_command(algebra, max_depth, allow_non_jordan, quiet), format, out)


@app.command("triple-check")
@exit_codes
def triple_check(
    map_file: Path = typer.Argument(..., metavar="MAP"),
    source: Path = typer.Argument(...),
    target: Path = typer.Argument(...),
    delta: bool = typer.Option(
        False, "--delta", help="Build delta_f; needs a perfect source and Ann_f(J2) = 0"
    ),
    allow_non_jordan: bool = ALLOW_OPTION,
    format: OutputFormat = FORMAT_OPTION,
    out: Optional[Path] = OUT_OPTION,
):
    """
    Classify a linear map between two algebras.
    """
    from .apps.reports.commands import triple_check_command

    emit(triple_check_command(map_file, source, target, delta, allow_non_jordan), format, out)


@app.command("triple-enumerate")
@exit_codes
def triple_enumerate(
    source: Path,
    target: Path,
    budget: Optional[int] = typer.Option(
        None, "--budget", min=1, help="Maximum candidate maps (JORDAN_ENUMERATION_BUDGET by default)"
    ),
    workers: int = typer.Option(1, "--workers", min=1),
    allow_non_jordan: bool = ALLOW_OPTION,
    quiet: bool = QUIET_OPTION,
    format: OutputFormat = FORMAT_OPTION,
    out: Optional[Path] = OUT_OPTION,
):
    """
    Every triple homomorphism between two algebras over one prime field.
    """
    from .apps.reports.commands import triple_enumerate_command

    emit(
        triple_enumerate_command(source, target, budget, workers, allow_non_jordan, quiet),
        format,
        out,
    )


@app.command("triple-reduce")
@exit_codes
def triple_reduce(
    source: Path,
    target: Path,
    max_depth: int = typer.Option(DEFAULT_REDUCTION_DEPTH, "--max-depth", min=1),
    budget: Optional[int] = typer.Option(
        None, "--budget", min=1, help="Maximum candidate maps per stage over GF(p)"
    ),
    workers: int = typer.Option(1, "--workers", min=1),
    allow_non_jordan: bool = ALLOW_OPTION,
    quiet: bool = QUIET_OPTION,
    format: OutputFormat = FORMAT_OPTION,
    out: Optional[Path] = OUT_OPTION,
):
    """
    Pass from J1 -> J2 to J1'' -> J2'' until the source is perfect or zero.
    """
    from .apps.reports.commands import triple_reduce_command

    emit(
        triple_reduce_command(
            source, target, max_depth, budget, workers, allow_non_jordan, quiet
        ),
        format,
        out,
    )


@app.command("catalog")
@exit_codes
def catalog_command(
    name: str,
    n: Optional[int] = typer.Option(None, "--n", help="Matrix size"),
    form: Optional[str] = typer.Option(None, "--form", help="Spin factor form, rows separated by ';'"),
    alpha: Optional[str] = typer.Option(None, "--alpha", help="Comma separated alpha_i"),
    prime: Optional[int] = typer.Option(None, "--prime", help="Build over GF(p)"),
    out: Optional[Path] = OUT_OPTION,
):
    """
    Write a catalog algebra as an algebra file.
    """
    from .apps.algebras.catalog import catalog
    from .apps.linalg.fields import FieldSpec
    from .apps.reports.files import AlgebraFile
    from .helpers.data.models import data_to_json_text

    if out is not None and out.suffix not in (".json", ".yaml", ".yml"):
        raise InputError(f"cannot write {out}: use a .json, .yaml or .yml file")
    field = FieldSpec.prime(prime) if prime is not None else FieldSpec.rational()
    algebra_file = AlgebraFile.from_algebra(catalog(name, field, n=n, form=form, alpha=alpha))
    if out is None:
        typer.echo(data_to_json_text(algebra_file.model_dump(mode="json")), nl=False)
    else:
        algebra_file.to_path(out)


if __name__ == "__main__":
    app()
