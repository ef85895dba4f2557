"""Trace command: show each derivation step of a symbol string."""

import io
import json
from dataclasses import asdict
from typing import TextIO

import click
from rich.console import Console

from ..batch import emit_results, run_batch
from ..chem.codec import tokenize
from ..config import config
from ..grammar.engine import derive_with_trace
from ..utils.config_utils import grammar_for
from ..utils.display_utils import create_trace_table
from ..utils.file_utils import iter_records
from .decode_cmd import graph_renderer


@click.command()
@click.option("-i", "--input", "input_file", type=click.File("r"), default="-",
              help="Symbol strings, one per line (default: stdin)")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              show_default=True, help="Rich step table or one JSON object per line")
@click.pass_context
def trace(ctx: click.Context, input_file: TextIO, fmt: str):
    """Print the derivation steps (state before, action, state after, depth) of each string."""
    spec = grammar_for(ctx)
    render = graph_renderer(spec)

    def handle(record: str) -> str:
        graph, steps = derive_with_trace(spec, tokenize(record, spec))
        if fmt == "json":
            return json.dumps(
                {
                    "input": record,
                    "states": steps.state_path(),
                    "steps": [asdict(step) for step in steps],
                    "graph": render(graph),
                },
                separators=(",", ":"),
            )
        buffer = io.StringIO()
        Console(file=buffer, width=120, highlight=False).print(create_trace_table(steps, spec, title=record))
        return buffer.getvalue() + f"result: {render(graph)}"

    summary = emit_results(run_batch(iter_records(input_file), handle, 1, config.batch_size))
    ctx.exit(summary.exit_code)
