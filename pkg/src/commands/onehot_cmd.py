"""One-hot command: symbol strings to headerless CSV matrices, and back."""

from pathlib import Path
from typing import Optional, TextIO

import click

from ..batch import emit_results, run_batch
from ..chem.codec import to_text, tokenize
from ..config import config
from ..harness.onehot import OneHotError, from_one_hot, one_hot_csv, read_one_hot_csv, to_one_hot, write_alphabet_sidecar
from ..utils.config_utils import grammar_for
from ..utils.display_utils import print_diagnostic, print_success
from ..utils.file_utils import ensure_directory_exists, iter_records


@click.command()
@click.option("--max-len", type=click.IntRange(min=1), required=True, help="Rows per matrix (L)")
@click.option("-i", "--input", "input_file", type=click.File("r"), default="-",
              help="Symbol strings, one per line (CSV with --reverse; default: stdin)")
@click.option("-o", "--output", type=click.Path(dir_okay=False, path_type=Path),
              help="CSV file; the alphabet order is written next to it (default: stdout, no sidecar)")
@click.option("--reverse", is_flag=True, help="Read CSV matrices and print their symbol strings")
@click.pass_context
def onehot(ctx: click.Context, max_len: int, input_file: TextIO, output: Optional[Path], reverse: bool):
    """Export symbol strings as L x |alphabet| one-hot matrices, stacked as CSV rows."""
    spec = grammar_for(ctx)

    if reverse:
        try:
            matrices = read_one_hot_csv(input_file.read(), max_len)
        except (OneHotError, ValueError) as e:
            raise click.UsageError(f"cannot read one-hot CSV: {e}", ctx) from e
        failed = 0
        for number, matrix in enumerate(matrices, 1):
            try:
                click.echo(to_text(from_one_hot(matrix), spec))
            except (OneHotError, IndexError) as e:
                failed += 1
                click.echo("")
                print_diagnostic(number, 1, "onehot", str(e))
        ctx.exit(1 if failed else 0)

    def handle(record: str) -> str:
        return one_hot_csv(to_one_hot(tokenize(record, spec), max_len, spec.size)).rstrip("\n")

    records = run_batch(iter_records(input_file), handle, config.workers, config.batch_size)
    if output is None:
        summary = emit_results(records, blank_failures=False)
        ctx.exit(summary.exit_code)

    ensure_directory_exists(output)
    with open(output, "w", encoding="utf-8") as f:
        summary = emit_results(records, f, blank_failures=False)
    sidecar = write_alphabet_sidecar(output, spec)
    print_success(f"{summary.records - summary.failed} matrices written to {output} (alphabet in {sidecar})")
    ctx.exit(summary.exit_code)
