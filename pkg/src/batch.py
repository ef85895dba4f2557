"""Streaming, order-preserving line batches for the record commands.

Records are read in chunks of ``batch_size`` lines; each chunk fans out over
a thread pool and results come back in input order. A failing record
becomes a diagnostic and an empty output line, so output line i always
answers input line i.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import islice
from typing import Callable, Iterable, Iterator, List, Optional, TextIO

import click

from .chem.canonical import CanonicalizationError
from .chem.codec import EncodingError, EncodingOverflow, TokenizeError
from .chem.smiles import SmilesError, SmilesWriteError
from .chem.valence import UnknownElementError
from .grammar.engine import SymbolRangeError
from .harness.onehot import OneHotError
from .utils.display_utils import print_diagnostic

logger = logging.getLogger(__name__)


class RecordError(Exception):
    """A single record failed; ``output`` is still written when given."""

    def __init__(self, category: str, message: str, column: int = 1, output: Optional[str] = None):
        self.category = category
        self.message = message
        self.column = column
        self.output = output
        super().__init__(f"{category}: {message}")


@dataclass
class RecordResult:
    line: int
    output: Optional[str] = None
    error: Optional[RecordError] = None

    @property
    def ok(self) -> bool:
        return self.error is None


@dataclass
class BatchSummary:
    records: int = 0
    failed: int = 0

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0


Handler = Callable[[str], str]


def record_error(exc: Exception) -> RecordError:
    """Map a library exception to a diagnostic category and 1-based column."""
    if isinstance(exc, RecordError):
        return exc
    if isinstance(exc, TokenizeError):
        return RecordError(exc.message, repr(exc.token), exc.position + 1)
    if isinstance(exc, SmilesError):
        column = exc.position + 1 if exc.position is not None else 1
        return RecordError(exc.category.value, exc.message, column)
    if isinstance(exc, SymbolRangeError):
        return RecordError("symbol_range", str(exc), exc.position + 1)
    if isinstance(exc, EncodingOverflow):
        return RecordError("encoding_overflow", str(exc))
    if isinstance(exc, EncodingError):
        return RecordError("encoding", str(exc))
    if isinstance(exc, SmilesWriteError):
        return RecordError("smiles_write", str(exc))
    if isinstance(exc, UnknownElementError):
        return RecordError("unknown_element", str(exc))
    if isinstance(exc, CanonicalizationError):
        return RecordError("canonicalization", str(exc))
    if isinstance(exc, OneHotError):
        return RecordError("onehot", str(exc))
    raise exc


def _run_one(handler: Handler, line: int, record: str) -> RecordResult:
    try:
        return RecordResult(line=line, output=handler(record))
    except Exception as e:
        return RecordResult(line=line, error=record_error(e))


def _chunks(records: Iterable[str], size: int) -> Iterator[List[str]]:
    iterator = iter(records)
    while chunk := list(islice(iterator, size)):
        yield chunk


def run_batch(
    records: Iterable[str],
    handler: Handler,
    workers: int = 1,
    batch_size: int = 256,
) -> Iterator[RecordResult]:
    """Apply ``handler`` to every record, yielding results in input order."""
    line = 1
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for chunk in _chunks(records, batch_size):
            lines = range(line, line + len(chunk))
            if pool is None:
                results = map(_run_one, [handler] * len(chunk), lines, chunk)
            else:
                results = pool.map(_run_one, [handler] * len(chunk), lines, chunk)
            yield from results
            line += len(chunk)
    finally:
        if pool is not None:
            pool.shutdown()


def emit_results(
    results: Iterable[RecordResult],
    out: Optional[TextIO] = None,
    blank_failures: bool = True,
) -> BatchSummary:
    """Write outputs and diagnostics; a failure leaves an empty line unless ``blank_failures`` is off."""
    summary = BatchSummary()
    for result in results:
        summary.records += 1
        if result.ok:
            click.echo(result.output, file=out)
            continue
        summary.failed += 1
        error = result.error
        if error.output is not None:
            click.echo(error.output, file=out)
        elif blank_failures:
            click.echo("", file=out)
        print_diagnostic(result.line, error.column, error.category, error.message)
    logger.debug("batch finished: %d records, %d failed", summary.records, summary.failed)
    return summary
