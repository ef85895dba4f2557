"""Decode command: symbol strings in, SMILES (or graph JSON) out, one per line."""

import json
from typing import Callable, Optional, TextIO

import click

from ..batch import emit_results, run_batch
from ..chem.codec import EMPTY_SMILES, decode as decode_symbols
from ..chem.smiles import WRITABLE_ELEMENTS, write_smiles
from ..config import config
from ..grammar.graph import LabeledGraph
from ..grammar.spec import GrammarSpec
from ..utils.config_utils import grammar_for
from ..utils.file_utils import iter_records


def graph_json(g: LabeledGraph) -> str:
    """Compact ``{"vertices": [...], "edges": [[u, v, order], ...]}``."""
    return json.dumps(
        {"vertices": g.labels(), "edges": [[e.u, e.v, e.order] for e in g.edges]},
        separators=(",", ":"),
    )


def graph_renderer(spec: GrammarSpec) -> Callable[[LabeledGraph], str]:
    """SMILES for element alphabets, graph JSON for anything else."""
    if all(type_def.label in WRITABLE_ELEMENTS for type_def in spec.types):
        return lambda g: write_smiles(g) if len(g) else EMPTY_SMILES
    return graph_json


@click.command()
@click.option("-i", "--input", "input_file", type=click.File("r"), default="-",
              help="Symbol strings, one per line (default: stdin)")
@click.option("-o", "--output", type=click.File("w"), default="-",
              help="Output file (default: stdout)")
@click.option("--workers", type=click.IntRange(min=1), help="Worker threads (default: VALENCE_WORKERS)")
@click.pass_context
def decode(ctx: click.Context, input_file: TextIO, output: TextIO, workers: Optional[int]):
    """Decode symbol strings to SMILES, one output line per input line."""
    spec = grammar_for(ctx)
    render = graph_renderer(spec)

    def handle(record: str) -> str:
        return render(decode_symbols(record, spec))

    summary = emit_results(
        run_batch(iter_records(input_file), handle, workers or config.workers, config.batch_size),
        output,
    )
    ctx.exit(summary.exit_code)
