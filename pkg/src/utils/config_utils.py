"""Configuration validation and grammar source resolution."""

from pathlib import Path
from typing import List, Optional, Tuple

import click
from rich.console import Console

from ..chem.valence import ValenceTable, ValenceTableError, build_chem_grammar, chem_grammar
from ..config import config
from ..grammar.derive import GrammarDerivationError, TypeSpec
from ..grammar.spec import GrammarFormatError, GrammarSpec
from ..quantum.components import quantum_grammar
from .display_utils import create_profiles_table
from .file_utils import load_grammar_file
from .profile_loader import ProfileLoader

console = Console(stderr=True)

BUILTIN_GRAMMARS = ("chem", "quantum")


class GrammarSourceError(ValueError):
    """Raised when a grammar source names nothing loadable."""


def validate_config() -> bool:
    """Validate configuration and return True if valid."""
    try:
        config.validate_settings()
        return True
    except ValueError as e:
        console.print(f"❌ Configuration Error: [bold red]{e}[/bold red]")
        return False


def get_profile_loader() -> ProfileLoader:
    return ProfileLoader(config.config_dir)


def show_profiles(ctx: click.Context, param: click.Parameter, value: bool):
    """Eager ``--list-profiles`` callback: print the profile table and exit."""
    if not value or ctx.resilient_parsing:
        return
    profiles = get_profile_loader().list_available_profiles()
    Console(highlight=False).print(create_profiles_table(profiles))
    ctx.exit()


def resolve_valence_table(name: str) -> ValenceTable:
    """Table from inline ``C:4,N:3`` text, a ``.json`` file or a name in valence_tables.yaml."""
    if ":" in name:
        return ValenceTable.parse(name)
    if name.endswith(".json"):
        return ValenceTable.from_json_file(name)
    tables = get_profile_loader().load_valence_tables()
    if name not in tables:
        raise ValenceTableError(f"not in valence_tables.yaml (known: {', '.join(sorted(tables))})")
    return ValenceTable(valences=tables[name])


def resolve_grammar(source: Optional[str] = None) -> GrammarSpec:
    """Grammar from ``chem``, ``chem:<table>``, ``quantum`` or a JSON file path.

    ``<table>`` is a table name, inline ``C:4,N:3`` text or a ``.json`` file.
    """
    source = source or config.grammar
    if source == "chem":
        return chem_grammar()
    if source == "quantum":
        return quantum_grammar()
    if source.startswith("chem:"):
        name = source.split(":", 1)[1]
        try:
            return build_chem_grammar(resolve_valence_table(name))
        except (ValueError, ValenceTableError) as e:
            raise GrammarSourceError(f"valence table {name!r}: {e}") from e

    path = Path(source)
    if not path.exists():
        raise GrammarSourceError(
            f"grammar {source!r} is neither built in ({', '.join(BUILTIN_GRAMMARS)}) nor a file"
        )
    try:
        return load_grammar_file(path)
    except (OSError, GrammarFormatError) as e:
        raise GrammarSourceError(str(e)) from e


def parse_type_pairs(text: str) -> List[Tuple[str, int]]:
    """``C:4,N:3`` -> [("C", 4), ("N", 3)]."""
    pairs = []
    for item in filter(None, (part.strip() for part in text.split(","))):
        label, sep, degree = item.partition(":")
        if not sep or not label.strip():
            raise GrammarDerivationError(f"expected LABEL:DEGREE, got {item!r}")
        try:
            pairs.append((label.strip(), int(degree)))
        except ValueError:
            raise GrammarDerivationError(f"degree of {label} is not an integer: {degree!r}") from None
    return pairs


def parse_type_spec(text: str) -> TypeSpec:
    return TypeSpec.from_pairs(parse_type_pairs(text))


def grammar_for(ctx: click.Context) -> GrammarSpec:
    """Grammar selected by the group's ``--grammar`` option; usage error (exit 2) if unloadable."""
    source = (ctx.find_root().obj or {}).get("grammar")
    try:
        return resolve_grammar(source)
    except GrammarSourceError as e:
        raise click.UsageError(str(e), ctx) from e
