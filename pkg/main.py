"""nilpres - command-line front end.

Parses presentation files, dispatches to the exact engine and prints reports
either as aligned rich tables or, with ``--json``, as a machine-readable
document. Exit codes: 0 success or consistent, 1 usage or input error,
2 excluded verdict, 3 resource cap exceeded.
"""

import functools
import json
import logging
import os
import sys
from collections.abc import Callable
from pathlib import Path
from typing import Any, cast

import click
import typer
from dotenv import load_dotenv
from rich.console import Console
from typer.core import TyperGroup

# Add src directory to Python path
src_path = Path(__file__).parent / "src"
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

# The only environment input is the optional class cap override
load_dotenv()

logger = logging.getLogger(__name__)

# Required for src layout architecture - imports after sys.path setup

from core.bch import GroupElement, LatticeSpec, automorphism_check, bch, commutator, group_inverse, group_mul, lattice_closed  # noqa: E402
from core.cohomology import betti, cup_dual_to_bracket, cup_tensor, degree_one_class, massey, pairing_nondegenerate  # noqa: E402
from core.config import AppConfig, get_config  # noqa: E402
from core.display import ReportDisplay  # noqa: E402
from core.nilpotent import GradedQuotient, LiePresentation, QuotientElement, check_class_cap, nilpotent_quotient  # noqa: E402
from core.obstruction import cup_round_trip, presentation_from_cup, run_checks  # noqa: E402
from core.obstruction.batch import BatchEntry, presentation_files, run_directory  # noqa: E402
from core.presentation_file import format_presentation, load_cup_data, parse_expression, read_presentation  # noqa: E402
from core.report import (  # noqa: E402
    FileResult,
    GroupSection,
    Report,
    automorphism_out,
    bch_section,
    caveat,
    cohomology_section,
    cup_section,
    lattice_out,
    massey_section,
    presentation_fields,
    report_schema,
    verdict_out,
)
from lie.enums import CheckMode, ExitCode  # noqa: E402
from lie.exceptions import CapExceededError, ExpressionError, LieAlgebraError, ParseError  # noqa: E402
from lie.free_lie import FreeLieAlgebra, Generator  # noqa: E402


# --- Console / Encoding Configuration ---
def _configure_console_encoding() -> None:
    """Reconfigures stdout/stderr for UTF-8; cochains print with ∧ and ∨."""
    os.environ.setdefault("PYTHONIOENCODING", "utf-8")
    for stream in (sys.stdout, sys.stderr):
        reconfigure = getattr(stream, "reconfigure", None)
        if reconfigure is not None:
            try:
                reconfigure(encoding="utf-8", errors="replace")
            except (OSError, ValueError):
                pass


_configure_console_encoding()


class NilpresGroup(TyperGroup):
    """Click group whose usage errors exit with code 1 instead of click's 2 (reserved for excluded verdicts)."""

    def main(self, *args: Any, **kwargs: Any) -> Any:
        kwargs["standalone_mode"] = False
        try:
            rv = super().main(*args, **kwargs)
        except click.UsageError as e:
            e.show()
            sys.exit(ExitCode.INPUT_ERROR)
        except click.ClickException as e:
            e.show()
            sys.exit(e.exit_code)
        except click.Abort:
            sys.exit(ExitCode.INPUT_ERROR)
        sys.exit(rv if isinstance(rv, int) else ExitCode.OK)


# --- Main Typer App ---
app = typer.Typer(
    name="nilpres",
    cls=NilpresGroup,
    help="Exact computations with finitely presented nilpotent Lie algebras over Q.",
    no_args_is_help=True,
)

# --- Rich Console for Output ---
console = Console(legacy_windows=False, soft_wrap=True)
err_console = Console(stderr=True, legacy_windows=False, soft_wrap=True)

# --- Global State ---
state: dict[str, Any] = {"config": None, "json": False, "max_class": None, "full_battery": None}


@app.callback()
def main_callback(
    ctx: typer.Context,
    json_output: bool = typer.Option(False, "--json", help="Print the machine-readable report."),
    max_class: int | None = typer.Option(None, "--max-class", min=1, help="Hard limit on class caps (overrides NILPRES_MAX_CLASS)."),
    full_battery: bool = typer.Option(False, "--full-battery", help="Run every check instead of stopping at the first failure."),
    verbose: bool = typer.Option(False, "--verbose", help="Log engine progress at INFO level."),
) -> None:
    """Loads configuration and global flags before any command."""
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING, format="%(asctime)s - %(levelname)s - %(message)s", force=True)
    state["json"] = json_output
    state["max_class"] = max_class
    state["full_battery"] = True if full_battery else None
    if ctx.invoked_subcommand is None:
        return
    try:
        state["config"] = get_config()
    except (FileNotFoundError, ValueError) as e:
        err_console.print(f"error[config]: {e}", markup=False, highlight=False)
        raise typer.Exit(code=ExitCode.INPUT_ERROR) from e


def get_app_config() -> AppConfig:
    """Gets the application config from state."""
    config = state["config"]
    if config is None:
        config = state["config"] = get_config()
    return cast(AppConfig, config)


def _error_message(error: LieAlgebraError) -> str:
    return str(error) if isinstance(error, ParseError) else str(error.args[0])


def handle_engine_error[F: Callable[..., Any]](func: F) -> F:
    """Decorator mapping engine errors to one ``error[<kind>]: <message>`` line and an exit code.

    Args:
        func: The command to wrap.

    Returns:
        The wrapped command.
    """

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except CapExceededError as e:
            err_console.print(f"error[{e.kind}]: {_error_message(e)}", markup=False, highlight=False)
            raise typer.Exit(code=ExitCode.CAP_EXCEEDED) from e
        except LieAlgebraError as e:
            err_console.print(f"error[{e.kind}]: {_error_message(e)}", markup=False, highlight=False)
            raise typer.Exit(code=ExitCode.INPUT_ERROR) from e

    return cast(F, wrapper)


# --- Helpers ---
def _emit(report: Report) -> None:
    if state["json"]:
        typer.echo(report.to_json())
    else:
        ReportDisplay(console).show(report)


def _load(path: Path) -> tuple[LiePresentation, GradedQuotient]:
    pres = read_presentation(path)
    return pres, nilpotent_quotient(pres, max_class=state["max_class"])


def _quotient_element(u: GradedQuotient, text: str) -> QuotientElement:
    return u.from_expression(parse_expression(text, "<argument>"))


def _pieces(text: str) -> list[str]:
    return [piece.strip() for piece in text.split(";") if piece.strip()]


def _file_result(entry: BatchEntry) -> FileResult:
    if entry.error is not None:
        return FileResult(path=str(entry.path), error=f"error[{entry.error.kind}]: {_error_message(entry.error)}")
    assert entry.verdict is not None
    return FileResult(
        path=str(entry.path),
        outcome=entry.verdict.outcome.value,
        relation_degrees=entry.verdict.relation_degrees,
        verdicts=[verdict_out(entry.verdict)],
    )


def _entry_code(entry: BatchEntry) -> ExitCode:
    if isinstance(entry.error, CapExceededError):
        return ExitCode.CAP_EXCEEDED
    if entry.error is not None:
        return ExitCode.INPUT_ERROR
    return ExitCode.EXCLUDED if entry.verdict is not None and entry.verdict.excluded else ExitCode.OK


# --- Commands ---
@app.command("dims")
@handle_engine_error
def dims(file: Path = typer.Argument(..., help="Presentation file.")) -> None:
    """Per-degree dimensions of the nilpotent quotient."""
    pres, u = _load(file)
    _emit(Report(command="dims", source=str(file), caveat=caveat(), **presentation_fields(pres, u)))


@app.command("bch")
@handle_engine_error
def bch_command(
    a: str = typer.Argument(..., help="First Lie element, e.g. 'x'."),
    b: str = typer.Argument(..., help="Second Lie element, e.g. 'y'."),
    class_: int = typer.Option(4, "--class", "-c", min=1, help="Truncation class."),
    gens: str = typer.Option("x,y", "--gens", "-g", help="Comma-separated generator names."),
) -> None:
    """Truncated Baker-Campbell-Hausdorff product log(exp(A) exp(B))."""
    names = [n.strip() for n in gens.split(",") if n.strip()]
    algebra = FreeLieAlgebra([Generator(n) for n in names], class_)
    left = algebra.rewrite(parse_expression(a, "<argument>"))
    right = algebra.rewrite(parse_expression(b, "<argument>"))
    result = bch(left, right, class_)
    _emit(Report(command="bch", bch=bch_section(result, class_), caveat=caveat()))


@app.command("cohomology")
@handle_engine_error
def cohomology_command(
    file: Path = typer.Argument(..., help="Presentation file."),
    degree: int | None = typer.Option(None, "--degree", "-p", min=0, help="Only this cochain degree."),
) -> None:
    """Betti numbers with representative cocycles."""
    pres, u = _load(file)
    degrees = [degree] if degree is not None else list(range(u.dimension + 1))
    groups = [betti(u, p) for p in degrees]
    _emit(Report(command="cohomology", source=str(file), cohomology=cohomology_section(groups), caveat=caveat(), **presentation_fields(pres, u)))


@app.command("cup")
@handle_engine_error
def cup_command(file: Path = typer.Argument(..., help="Presentation file.")) -> None:
    """The cup product H^1 x H^1 -> H^2 in chosen bases."""
    pres, u = _load(file)
    tensor = cup_tensor(u)
    section = cup_section(tensor, nondegenerate=pairing_nondegenerate(tensor.values), dual_to_bracket=cup_dual_to_bracket(u))
    _emit(Report(command="cup", source=str(file), cup=section, caveat=caveat(), **presentation_fields(pres, u)))


@app.command("massey")
@handle_engine_error
def massey_command(
    file: Path = typer.Argument(..., help="Presentation file."),
    a: str = typer.Argument(..., help="Degree-1 class as a combination of generators (x means the dual of x)."),
    b: str = typer.Argument(..., help="Second class."),
    c: str = typer.Argument(..., help="Third class."),
) -> None:
    """The Massey triple product <A, B, C>."""
    pres, u = _load(file)
    classes = [degree_one_class(u, u.algebra.rewrite(parse_expression(text, "<argument>"))) for text in (a, b, c)]
    result = massey(u, *classes)
    section = massey_section(u, [cls.render() for cls in classes], result)
    _emit(Report(command="massey", source=str(file), massey=section, caveat=caveat(), **presentation_fields(pres, u)))


@app.command("check")
@handle_engine_error
def check_command(
    file: Path | None = typer.Argument(None, help="Presentation file.", show_default=False),
    directory: Path | None = typer.Option(None, "--all", help="Check every *.lie file of a directory."),
    mode: CheckMode = typer.Option(..., "--mode", "-m", help="smooth or smooth-proper.", case_sensitive=False),
) -> None:
    """Runs the obstruction battery; exits 2 when the presentation is excluded."""
    if (file is None) == (directory is None):
        err_console.print("error[usage]: give either FILE or --all DIR", markup=False, highlight=False)
        raise typer.Exit(code=ExitCode.INPUT_ERROR)

    if directory is not None:
        if not directory.is_dir():
            err_console.print(f"error[usage]: {directory} is not a directory", markup=False, highlight=False)
            raise typer.Exit(code=ExitCode.INPUT_ERROR)
        entries = run_directory(presentation_files(directory), mode, full_battery=state["full_battery"], max_class=state["max_class"])
        _emit(Report(command="check", source=str(directory), files=[_file_result(e) for e in entries], caveat=caveat()))
        code = max((_entry_code(e) for e in entries), default=ExitCode.OK)
        if code:
            raise typer.Exit(code=code)
        return

    assert file is not None
    pres, u = _load(file)
    verdict = run_checks(pres, mode, full_battery=state["full_battery"])
    fields = presentation_fields(pres, u)
    report = Report(
        command="check",
        source=str(file),
        verdicts=[verdict_out(verdict)],
        checks_run=[c.value for c in verdict.checks_run],
        caveat=caveat(),
        **fields,
    )
    _emit(report)
    if verdict.excluded:
        raise typer.Exit(code=ExitCode.EXCLUDED)


@app.command("build-from-cup")
@handle_engine_error
def build_from_cup(
    file: Path = typer.Argument(..., help="TOML cup-data file."),
    depth: int | None = typer.Option(
        None,
        "--depth",
        min=1,
        help="Nilpotency depth; the class cap is twice this (default from obstruction.nilpotency_depth).",
    ),
) -> None:
    """Builds the quadratic presentation L(H^1∨)/(cup-dual of H^2∨) predicted by cup data."""
    data = load_cup_data(file)
    depth = get_app_config()["obstruction"]["nilpotency_depth"] if depth is None else depth
    pres = presentation_from_cup(data, nilpotency_depth=depth)
    check_class_cap(pres.class_cap, state["max_class"])
    u = nilpotent_quotient(pres, max_class=state["max_class"])
    report = Report(
        command="build-from-cup",
        source=str(file),
        presentation=format_presentation(pres),
        cup_round_trip=cup_round_trip(data, pres),
        caveat=caveat(),
        **presentation_fields(pres, u),
    )
    _emit(report)


@app.command("group")
@handle_engine_error
def group_command(
    file: Path = typer.Argument(..., help="Presentation file."),
    a: str = typer.Argument(..., help="log of the first group element."),
    b: str = typer.Argument(..., help="log of the second group element."),
    lattice: str | None = typer.Option(None, "--lattice", help="Semicolon-separated lattice basis, e.g. 'x;y;1/2*[x,y]'."),
    automorphism: str | None = typer.Option(None, "--automorphism", help="Generator images, e.g. 'x=y;y=x'."),
) -> None:
    """Group law of the Mal'cev group: product, inverse and commutator via BCH."""
    pres, u = _load(file)
    ga, gb = GroupElement(_quotient_element(u, a)), GroupElement(_quotient_element(u, b))
    section = GroupSection(
        a=ga.render(),
        b=gb.render(),
        product=group_mul(u, ga, gb).render(),
        inverse_a=group_inverse(ga).render(),
        commutator=commutator(u, ga, gb).render(),
    )
    if lattice is not None:
        basis = tuple(_quotient_element(u, piece) for piece in _pieces(lattice))
        result = lattice_closed(u, LatticeSpec(basis))
        section = section.model_copy(update={"lattice": lattice_out([e.render() for e in basis], result)})
    if automorphism is not None:
        images: dict[str, QuotientElement] = {}
        for piece in _pieces(automorphism):
            name, sep, image = piece.partition("=")
            if not sep:
                raise ExpressionError(f"expected name=expression, got '{piece}'")
            images[name.strip()] = _quotient_element(u, image)
        result_map = automorphism_check(u, images, sample_size=get_app_config()["obstruction"]["group_sample_size"])
        section = section.model_copy(update={"automorphism": automorphism_out(result_map)})
    _emit(Report(command="group", source=str(file), group=section, caveat=caveat(), **presentation_fields(pres, u)))


@app.command("schema")
def schema() -> None:
    """Prints the JSON schema of the --json report."""
    typer.echo(json.dumps(report_schema(), indent=2))


if __name__ == "__main__":
    app()
