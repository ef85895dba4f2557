"""Unit tests for file utilities."""

import io

import pytest

from src.grammar.spec import GrammarFormatError
from src.utils.file_utils import ensure_directory_exists, iter_records, load_grammar_file, save_grammar_file


@pytest.mark.unit
class TestFileUtils:
    """Test file utility functions."""

    def test_ensure_directory_exists(self, temp_dir):
        """Test creating the parent directory of a file path."""
        target = temp_dir / "a" / "b" / "grammar.json"
        ensure_directory_exists(target)
        assert target.parent.is_dir()

    def test_save_and_load_grammar(self, temp_dir, oxygen_grammar):
        """Test writing a grammar document and reading it back."""
        path = save_grammar_file(oxygen_grammar, temp_dir / "out" / "oxygen.json")
        assert path.read_text().endswith("\n")
        assert load_grammar_file(path) == oxygen_grammar

    def test_load_malformed_grammar(self, temp_dir):
        """Test loading a document that is not a grammar."""
        path = temp_dir / "bad.json"
        path.write_text('{"name": "x"}')
        with pytest.raises(GrammarFormatError):
            load_grammar_file(path)

    def test_iter_records_strips_newlines(self):
        """Test that records keep inner whitespace but lose line endings."""
        stream = io.StringIO("[C][O]\r\n\n [F] \n")
        assert list(iter_records(stream)) == ["[C][O]", "", " [F] "]
