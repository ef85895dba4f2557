"""Roundtrip command: SMILES -> symbols -> graph, checked for isomorphism per line."""

from typing import Optional, TextIO

import click

from ..batch import RecordError, emit_results, run_batch
from ..chem.canonical import same_graph
from ..chem.codec import decode as decode_symbols, encode as encode_graph, to_text
from ..chem.smiles import parse_smiles
from ..config import config
from ..utils.config_utils import grammar_for
from ..utils.file_utils import iter_records
from .encode_cmd import valence_table_for


@click.command()
@click.option("-i", "--input", "input_file", type=click.File("r"), default="-",
              help="SMILES strings, one per line (default: stdin)")
@click.option("-o", "--output", type=click.File("w"), default="-",
              help="Output file (default: stdout)")
@click.option("--workers", type=click.IntRange(min=1), help="Worker threads (default: VALENCE_WORKERS)")
@click.pass_context
def roundtrip(ctx: click.Context, input_file: TextIO, output: TextIO, workers: Optional[int]):
    """Encode and decode each SMILES line; print ``pass`` or ``fail`` with the symbol string."""
    spec = grammar_for(ctx)
    table = valence_table_for(ctx, spec)

    def handle(record: str) -> str:
        graph = parse_smiles(record, table)
        symbols = encode_graph(graph, spec)
        text = to_text(symbols, spec)
        if not same_graph(graph, decode_symbols(symbols, spec)):
            raise RecordError("mismatch", "decoded graph is not isomorphic to the input", output=f"fail\t{text}")
        return f"pass\t{text}"

    summary = emit_results(
        run_batch(iter_records(input_file), handle, workers or config.workers, config.batch_size),
        output,
    )
    ctx.exit(summary.exit_code)
