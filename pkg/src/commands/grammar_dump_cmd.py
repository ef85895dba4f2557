"""Grammar-dump command: human-readable rule table of the selected grammar."""

import click
from rich.console import Console

from ..grammar.spec import format_rule_table, grammar_to_json
from ..utils.config_utils import grammar_for
from ..utils.display_utils import create_counts_table, create_rule_table


@click.command(name="grammar-dump")
@click.option("--format", "fmt", type=click.Choice(["text", "table", "json"]), default="text",
              show_default=True, help="Plain aligned text, a rich table, or the grammar JSON document")
@click.option("--counts", is_flag=True, help="Also print the rule-vector counts")
@click.pass_context
def grammar_dump(ctx: click.Context, fmt: str, counts: bool):
    """Print the rule table: one row per state, one column per symbol, plus the number row."""
    spec = grammar_for(ctx)

    if fmt == "json":
        click.echo(grammar_to_json(spec))
    elif fmt == "table":
        Console(highlight=False, width=max(120, 12 * (spec.size + 1))).print(create_rule_table(spec))
    else:
        click.echo(format_rule_table(spec))

    if counts:
        Console(highlight=False).print(create_counts_table(spec))
