"""Unit tests for random-string sampling and saturation."""

import pytest

from src.harness import sample_random, sample_until_saturation
from src.harness.sampling import graph_key, random_symbols, trial_rng, validator_for
from src.chem.molecules import molecule


@pytest.mark.unit
class TestSampleRandom:
    def test_chem_strings_always_decode_to_valid_molecules(self, chem):
        report = sample_random(chem, (1, 20), 400, seed=1)
        assert report.count == 400
        assert report.rate == 1.0
        assert report.unique > 50

    def test_quantum_strings_always_valid(self, quantum):
        assert sample_random(quantum, (1, 30), 300, seed=2).rate == 1.0

    def test_deterministic_across_workers(self, chem):
        assert sample_random(chem, (1, 20), 200, seed=3) == sample_random(chem, (1, 20), 200, seed=3, workers=4)

    def test_zero_count(self, chem):
        report = sample_random(chem, (1, 20), 0, seed=0)
        assert report.rate == 0.0
        assert report.unique == 0

    @pytest.mark.parametrize("length_range", [(-1, 3), (5, 2)])
    def test_bad_length_range(self, chem, length_range):
        with pytest.raises(ValueError):
            sample_random(chem, length_range, 10, seed=0)

    def test_random_symbols_length(self, chem):
        rng = trial_rng(0, 0)
        for _ in range(50):
            symbols = random_symbols(chem, rng, (2, 4))
            assert 2 <= len(symbols) <= 4
            assert all(0 <= s < chem.size for s in symbols)


@pytest.mark.unit
class TestSaturation:
    def test_small_grammar_saturates(self, oxygen_grammar):
        report = sample_until_saturation(oxygen_grammar, (1, 2), patience=50, max_count=10000, seed=0)
        assert report.saturated
        assert report.distinct <= 3
        assert report.draws < 10000

    def test_stops_at_max_count(self, chem):
        report = sample_until_saturation(chem, (1, 20), patience=1000, max_count=10, seed=0)
        assert report.draws == 10
        assert not report.saturated

    def test_patience_must_be_positive(self, chem):
        with pytest.raises(ValueError):
            sample_until_saturation(chem, (1, 2), patience=0, max_count=10, seed=0)


@pytest.mark.unit
class TestHelpers:
    def test_graph_key_skips_empty(self):
        assert graph_key(molecule([], [])) is None
        assert graph_key(molecule(["C"], [])) == "C|"

    def test_validator_for_derived_grammar(self, oxygen_grammar):
        check = validator_for(oxygen_grammar)
        assert check(molecule(["O", "O"], [(0, 1, 2)]))
