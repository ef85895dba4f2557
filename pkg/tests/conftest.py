"""Pytest configuration and shared fixtures."""

import tempfile
from pathlib import Path

import numpy as np
import pytest
from click.testing import CliRunner

from src.chem.molecules import REFERENCE_MOLECULES
from src.chem.valence import chem_grammar
from src.grammar.derive import TypeSpec, derive_grammar
from src.quantum.components import quantum_grammar


@pytest.fixture
def temp_dir():
    """Create a temporary directory for test files."""
    with tempfile.TemporaryDirectory() as tmpdirname:
        yield Path(tmpdirname)


@pytest.fixture
def chem():
    """Chemistry grammar for the core valence table."""
    return chem_grammar()


@pytest.fixture
def quantum():
    return quantum_grammar()


@pytest.fixture
def oxygen_grammar():
    """Smallest derived grammar: a single type O with degree 2."""
    return derive_grammar(TypeSpec.from_pairs([("O", 2)]))


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture(params=sorted(REFERENCE_MOLECULES))
def reference_molecule(request):
    """Every reference molecule, by name."""
    return request.param, REFERENCE_MOLECULES[request.param]()


@pytest.fixture
def rng():
    return np.random.default_rng(20201018)


@pytest.fixture
def symbols(chem):
    """Text form -> alphabet indices under the chem grammar."""
    from src.chem.codec import tokenize

    return lambda text: tokenize(text, chem)
