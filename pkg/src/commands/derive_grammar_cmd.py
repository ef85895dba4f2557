"""Derive-grammar command: type/degree table in, grammar JSON out."""

from pathlib import Path
from typing import Optional

import click

from ..grammar.derive import DeriveOptions, GrammarDerivationError, derive_grammar
from ..grammar.spec import grammar_to_json, validate_grammar
from ..utils.config_utils import parse_type_spec
from ..utils.display_utils import console, create_counts_table, print_header, print_success
from ..utils.file_utils import save_grammar_file


@click.command(name="derive-grammar")
@click.option("--types", "types_text", required=True, help="Vertex types as LABEL:DEGREE pairs, e.g. C:4,N:3,O:2,F:1")
@click.option("--cap", type=click.IntRange(min=1), help="Largest edge multiplicity a vertex symbol requests")
@click.option("--ring-orders", type=click.IntRange(min=1), default=1, show_default=True,
              help="Number of ring symbols (bond orders 1..n)")
@click.option("--name", default="custom", show_default=True, help="Grammar name")
@click.option("-o", "--output", type=click.Path(dir_okay=False, path_type=Path),
              help="Write the grammar JSON here (default: stdout)")
@click.pass_context
def derive_grammar_command(
    ctx: click.Context,
    types_text: str,
    cap: Optional[int],
    ring_orders: int,
    name: str,
    output: Optional[Path],
):
    """Derive the rule table for a set of vertex types and their maximum degrees."""
    try:
        spec = derive_grammar(
            parse_type_spec(types_text), DeriveOptions(cap=cap, ring_orders=ring_orders, name=name)
        )
    except (GrammarDerivationError, ValueError) as e:
        raise click.UsageError(str(e), ctx) from e

    validation = validate_grammar(spec)
    if not validation.ok:
        # derive_grammar only emits exact cells; a violation here is a bug
        raise click.ClickException(f"derived grammar is invalid: {validation.violations[0]}")

    if output is None:
        click.echo(grammar_to_json(spec))
        return

    print_header(f"Derived grammar '{spec.name}' ({spec.size} symbols, r={spec.r})", "📐")
    console.print(create_counts_table(spec))
    save_grammar_file(spec, output)
    print_success(f"Grammar written to {output}")
