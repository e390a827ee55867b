"""Rich console rendering of reports."""

from __future__ import annotations

from rich.console import Console
from rich.markup import escape
from rich.table import Table

from .report import FileResult, Report, VerdictOut


def _listed(values: list[int]) -> str:
    return ", ".join(str(v) for v in values) if values else "-"


class ReportDisplay:
    """Prints a :class:`Report` as aligned text, one table per section present."""

    def __init__(self, console: Console | None = None) -> None:
        self._console = console or Console()

    def show(self, report: Report) -> None:
        if report.generators:
            self._summary(report)
        if report.bch is not None:
            self._bch(report)
        if report.cohomology is not None:
            self._cohomology(report)
        if report.cup is not None:
            self._cup(report)
        if report.massey is not None:
            self._massey(report)
        if report.group is not None:
            self._group(report)
        for verdict in report.verdicts:
            self._verdict(verdict)
        if report.files:
            self._files(report.files)
        if report.presentation is not None:
            self._console.print(report.presentation.rstrip("\n"), markup=False, highlight=False)
        if report.cup_round_trip is not None:
            state = "[green]reproduced[/green]" if report.cup_round_trip else "[red]not reproduced[/red]"
            self._console.print(f"cup tensor round trip: {state}")
        if report.verdicts or report.files:
            self._console.print(f"[dim]{report.caveat}[/dim]")

    def _summary(self, report: Report) -> None:
        table = Table(title=report.source or "presentation", show_header=False)
        table.add_column("Key", style="cyan", no_wrap=True)
        table.add_column("Value", style="bold")
        table.add_row("generators", ", ".join(report.generators))
        table.add_row("class", str(report.class_cap))
        if report.dims:
            table.add_row("dims", _listed(report.dims))
            table.add_row("total", str(sum(report.dims)))
        if report.lcs_dims or report.dims:
            table.add_row("lcs dims", _listed(report.lcs_dims))
        table.add_row("relation degrees", _listed(report.relation_degrees))
        for split in report.split_relations:
            table.add_row("split", f"relation {split.index + 1} into degrees {_listed(split.degrees)}")
        self._console.print(table)

    def _bch(self, report: Report) -> None:
        assert report.bch is not None
        table = Table(title=f"BCH series to class {report.bch.bch_class}")
        table.add_column("Coefficient", justify="right", style="green")
        table.add_column("Bracket", style="cyan")
        for term in report.bch.terms:
            table.add_row(term.coefficient, escape(term.bracket))
        self._console.print(table)
        self._console.print(report.bch.expression, markup=False, highlight=False)

    def _cohomology(self, report: Report) -> None:
        assert report.cohomology is not None
        table = Table(title="Cohomology")
        table.add_column("p", justify="right")
        table.add_column("b_p", justify="right", style="green")
        table.add_column("Representatives", style="cyan")
        for group in report.cohomology.betti:
            table.add_row(str(group.degree), str(group.dimension), escape(", ".join(group.representatives)) or "-")
        self._console.print(table)

    def _cup(self, report: Report) -> None:
        assert report.cup is not None
        cup = report.cup
        table = Table(title="Cup product H^1 x H^1 -> H^2")
        table.add_column("a", style="cyan")
        table.add_column("b", style="cyan")
        for name in cup.h2:
            table.add_column(escape(name), justify="right")
        for i, row in enumerate(cup.values):
            for j, cell in enumerate(row):
                if i < j and any(v != "0" for v in cell):
                    table.add_row(escape(cup.h1[i]), escape(cup.h1[j]), *cell)
        self._console.print(table)
        self._console.print(f"pairing nondegenerate: {cup.nondegenerate}; dual to bracket: {cup.dual_to_bracket}")

    def _massey(self, report: Report) -> None:
        assert report.massey is not None
        m = report.massey
        self._console.print(f"<{escape(', '.join(m.classes))}>: [bold]{m.status}[/bold]", highlight=False)
        if m.representative is not None:
            self._console.print(f"  representative: {m.representative}", markup=False, highlight=False)
            self._console.print(f"  indeterminacy: {', '.join(m.indeterminacy) or '0'}", markup=False, highlight=False)

    def _group(self, report: Report) -> None:
        assert report.group is not None
        g = report.group
        table = Table(title="Group law", show_header=False)
        table.add_column("Key", style="cyan", no_wrap=True)
        table.add_column("Value", style="bold")
        table.add_row("a", escape(g.a))
        table.add_row("b", escape(g.b))
        table.add_row("a*b", escape(g.product))
        table.add_row("a^-1", escape(g.inverse_a))
        table.add_row(escape("[a,b]"), escape(g.commutator))
        if g.lattice is not None:
            closed = "closed" if g.lattice.closed else f"not closed ({g.lattice.detail})"
            table.add_row("lattice", escape(closed))
        if g.automorphism is not None:
            verdict = "automorphism" if g.automorphism.is_automorphism else f"not an automorphism ({g.automorphism.reason})"
            table.add_row("map", escape(verdict))
        self._console.print(table)

    def _verdict(self, verdict: VerdictOut) -> None:
        color = "red" if verdict.outcome == "excluded" else "green"
        self._console.print(f"{verdict.mode}: [bold {color}]{verdict.outcome}[/bold {color}] (checks: {', '.join(verdict.checks_run)})")
        for witness in verdict.witnesses:
            self._console.print(f"  {witness.check}: {witness.message}", markup=False, highlight=False)

    def _files(self, files: list[FileResult]) -> None:
        table = Table(title="Presentations")
        table.add_column("File", style="cyan")
        table.add_column("Relation degrees")
        table.add_column("Outcome")
        for entry in files:
            outcome = f"[red]{escape(entry.error)}[/red]" if entry.error else entry.outcome or "-"
            table.add_row(escape(entry.path), _listed(entry.relation_degrees), outcome)
        self._console.print(table)
