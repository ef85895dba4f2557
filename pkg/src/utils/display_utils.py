"""Display utilities for Rich console output.

Decorations go to stderr so that stdout carries only records and reports.
"""

import click
from rich.console import Console
from rich.markup import escape
from rich.table import Table
from typing import Any, Dict, Optional, TextIO

from pydantic import BaseModel

from ..grammar.derive import rule_counts
from ..grammar.engine import DerivationTrace
from ..grammar.spec import GrammarSpec, describe_rule, symbol_number

console = Console(stderr=True)


def print_header(text: str, icon: str = "🔧"):
    """Print a formatted header."""
    console.print(f"[bold blue]{icon} {text}[/bold blue]")


def print_success(text: str):
    """Print a success message."""
    console.print(f"✅ {text}")


def print_info(text: str):
    """Print an info message."""
    console.print(f"[dim]ℹ️  {text}[/dim]")


def print_diagnostic(line: int, column: int, category: str, message: str):
    """Per-record diagnostic: ``line L, col C: category: message`` on stderr."""
    click.echo(f"line {line}, col {column}: {category}: {message}", err=True)


def create_report_table(title: str, fields: Dict[str, Any]) -> Table:
    """Two-column table of report fields."""
    table = Table(title=title)
    table.add_column("Field", style="cyan")
    table.add_column("Value", style="green", justify="right")

    for name, value in fields.items():
        if isinstance(value, float):
            value = f"{value:.4f}"
        table.add_row(escape(name), escape(str(value)))

    return table


def emit_report(report: BaseModel, title: str, fmt: str = "text", output: Optional[TextIO] = None,
                extra_rows: Optional[Dict[str, Any]] = None):
    """Report as indented JSON or as an aligned table on stdout (or ``output``)."""
    if fmt == "json":
        click.echo(report.model_dump_json(indent=2), file=output)
        return
    fields = {
        name: value for name, value in report.model_dump(mode="json").items()
        if not isinstance(value, (list, dict))
    }
    fields.update(extra_rows or {})
    Console(file=output, highlight=False).print(create_report_table(title, fields))


def create_rule_table(spec: GrammarSpec) -> Table:
    """States as rows, alphabet symbols as columns, plus the number row."""
    table = Table(title=f"Grammar '{spec.name}' (r={spec.r}, {spec.size} symbols)")
    table.add_column("State", style="magenta")
    for symbol in spec.alphabet:
        table.add_column(escape(symbol.name), style="cyan")

    for state, row in enumerate(spec.productions):
        table.add_row(f"X{state}", *(escape(describe_rule(spec, rule)) for rule in row))
    table.add_row("N", *(str(symbol_number(spec, symbol.index)) for symbol in spec.alphabet), style="dim")

    return table


def create_counts_table(spec: GrammarSpec) -> Table:
    counts = rule_counts(spec)
    return create_report_table(
        "Rule counts",
        {
            "vertex rule vectors (n)": counts.n,
            "branch rule vectors (m)": counts.m,
            "ring rule vectors (p)": counts.p,
            "max multiplicity (r)": counts.r,
            "(n+m+p+1)(r+2)": counts.total,
        },
    )


def create_trace_table(trace: DerivationTrace, spec: GrammarSpec, title: Optional[str] = None) -> Table:
    """Derivation steps: symbol, state before, action, state after, depth."""
    table = Table(title=escape(title) if title else "Derivation")
    table.add_column("#", justify="right", style="dim")
    table.add_column("Symbol", style="cyan")
    table.add_column("Before", style="magenta")
    table.add_column("Action", style="yellow")
    table.add_column("After", style="magenta")
    table.add_column("Depth", justify="right")
    table.add_column("Detail", style="green")

    for step in trace:
        detail = ""
        if step.vertex is not None and step.partner is not None:
            detail = f"{step.vertex}-{step.partner} order {step.order}"
        elif step.vertex is not None:
            detail = f"vertex {step.vertex}"
        indent = "  " * step.depth
        table.add_row(
            str(step.position),
            indent + escape(spec.alphabet[step.symbol].name),
            f"X{step.state_before}",
            step.action.value,
            f"X{step.state_after}",
            str(step.depth),
            detail,
        )

    return table


def create_profiles_table(profiles: Dict[str, str]) -> Table:
    table = Table(title="Experiment profiles")
    table.add_column("Profile", style="cyan")
    table.add_column("Description", style="green")
    for name, description in profiles.items():
        table.add_row(escape(name), escape(description))
    return table
