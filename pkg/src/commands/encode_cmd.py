"""Encode command: SMILES in, symbol strings out, one per line."""

from typing import Optional, TextIO

import click

from ..batch import emit_results, run_batch
from ..chem.codec import encode as encode_graph, to_text
from ..chem.smiles import parse_smiles
from ..chem.valence import ValenceTable, ValenceTableError
from ..config import config
from ..grammar.spec import GrammarSpec
from ..utils.config_utils import grammar_for
from ..utils.file_utils import iter_records


def valence_table_for(ctx: click.Context, spec: GrammarSpec) -> ValenceTable:
    try:
        return ValenceTable.from_grammar(spec)
    except ValenceTableError as e:
        raise click.UsageError(f"grammar '{spec.name}' has no element table: {e}", ctx) from e


@click.command()
@click.option("-i", "--input", "input_file", type=click.File("r"), default="-",
              help="SMILES strings, one per line (default: stdin)")
@click.option("-o", "--output", type=click.File("w"), default="-",
              help="Output file (default: stdout)")
@click.option("--workers", type=click.IntRange(min=1), help="Worker threads (default: VALENCE_WORKERS)")
@click.pass_context
def encode(ctx: click.Context, input_file: TextIO, output: TextIO, workers: Optional[int]):
    """Encode SMILES to symbol strings, one output line per input line."""
    spec = grammar_for(ctx)
    table = valence_table_for(ctx, spec)

    def handle(record: str) -> str:
        return to_text(encode_graph(parse_smiles(record, table), spec), spec)

    summary = emit_results(
        run_batch(iter_records(input_file), handle, workers or config.workers, config.batch_size),
        output,
    )
    ctx.exit(summary.exit_code)
