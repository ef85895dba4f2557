"""Main CLI entry point for valence-grammar.

Version: v2
Last updated: Record commands, experiments and grammar tools for valence grammars
"""

import logging
from typing import Optional

import click
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape

from .config import config
from .grammar.spec import validate_grammar
from .utils.config_utils import GrammarSourceError, resolve_grammar, validate_config
from .utils.display_utils import create_counts_table

# Import commands
from .commands.decode_cmd import decode
from .commands.encode_cmd import encode
from .commands.roundtrip_cmd import roundtrip
from .commands.mutate_cmd import mutate
from .commands.sample_cmd import sample
from .commands.derive_grammar_cmd import derive_grammar_command
from .commands.onehot_cmd import onehot
from .commands.grammar_dump_cmd import grammar_dump
from .commands.trace_cmd import trace

console = Console(stderr=True)


def setup_logging(level: str = "INFO"):
    """Setup logging with Rich handler."""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=console, rich_tracebacks=True)],
        force=True,
    )


def check_config(grammar: Optional[str]) -> bool:
    """Check configuration, load the grammar and validate its rule table."""
    console.print("[bold blue]🔍 Checking Configuration...[/bold blue]")

    if not validate_config():
        return False
    console.print("✅ Environment settings are valid")

    console.print("\n[bold blue]📐 Loading Grammar...[/bold blue]")
    try:
        spec = resolve_grammar(grammar)
    except GrammarSourceError as e:
        console.print(f"❌ Grammar Error: [bold red]{e}[/bold red]")
        return False

    validation = validate_grammar(spec)
    if not validation.ok:
        for violation in validation.violations:
            console.print(f"❌ {escape(str(violation))}")
        return False
    console.print(f"✅ Grammar '{spec.name}' is valid ({spec.size} symbols, r={spec.r})")

    console.print(create_counts_table(spec))
    console.print("\n[bold green]🎉 All checks passed![/bold green]")
    return True


@click.group(invoke_without_command=True)
@click.option("--log-level", default=config.log_level, help="Set logging level")
@click.option("--config-check", is_flag=True, help="Check configuration and grammar, then exit")
@click.option("--grammar", help="Grammar: chem, chem:<table|C:4,N:3|file.json>, quantum or a JSON file (default: VALENCE_GRAMMAR)")
@click.pass_context
def cli(ctx, log_level: str, config_check: bool, grammar: Optional[str]):
    """Valence grammar - symbol strings that always decode to valid graphs."""
    setup_logging(log_level)
    ctx.ensure_object(dict)
    ctx.obj["grammar"] = grammar

    if config_check:
        ctx.exit(0 if check_config(grammar) else 2)

    # If no command provided and not config-check, show help
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


# Register commands
cli.add_command(decode)
cli.add_command(encode)
cli.add_command(roundtrip)
cli.add_command(mutate)
cli.add_command(sample)
cli.add_command(derive_grammar_command)
cli.add_command(onehot)
cli.add_command(grammar_dump)
cli.add_command(trace)


if __name__ == "__main__":
    cli()
