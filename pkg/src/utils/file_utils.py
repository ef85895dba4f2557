"""File operation utilities."""

from pathlib import Path
from typing import Iterator, TextIO, Union

from ..grammar.spec import GrammarSpec, grammar_from_json, grammar_to_json


def ensure_directory_exists(file_path: Path) -> None:
    """Ensure the parent directory of a file path exists."""
    file_path.parent.mkdir(parents=True, exist_ok=True)


def load_grammar_file(path: Union[str, Path]) -> GrammarSpec:
    """Read a grammar JSON document."""
    return grammar_from_json(Path(path).read_text(encoding="utf-8"))


def save_grammar_file(spec: GrammarSpec, path: Union[str, Path]) -> Path:
    path = Path(path)
    ensure_directory_exists(path)
    path.write_text(grammar_to_json(spec) + "\n", encoding="utf-8")
    return path


def iter_records(stream: TextIO) -> Iterator[str]:
    """Yield input lines without their newline, one record per line."""
    for line in stream:
        yield line.rstrip("\r\n")
