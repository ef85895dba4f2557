"""Unit tests for grammar documents, validation and the rule table text."""

import json

import pytest

from src.grammar.spec import (
    FORMAT_VERSION,
    BranchRule,
    EpsilonRule,
    GrammarFormatError,
    RingRule,
    SymbolKind,
    VertexRule,
    describe_rule,
    format_rule_table,
    grammar_from_json,
    grammar_to_json,
    symbol_number,
    validate_grammar,
)


@pytest.mark.unit
class TestGrammarSpec:
    """Alphabet lookups and numbers."""

    def test_chem_alphabet_order(self, chem):
        names = [symbol.name for symbol in chem.alphabet]
        assert names == [
            "[nop]",
            "[C]", "[=C]", "[#C]",
            "[N]", "[=N]", "[#N]",
            "[O]", "[=O]",
            "[F]",
            "[Branch]", "[=Branch]", "[#Branch]",
            "[Ring]", "[=Ring]", "[#Ring]",
        ]
        assert chem.size == 16
        assert chem.r == 4

    def test_index_of(self, chem):
        assert chem.index_of("[=C]") == 2
        assert chem.index_of("[Xx]") is None

    def test_symbol_number_defaults_to_index(self, chem):
        assert symbol_number(chem, 0) == 0
        assert symbol_number(chem, "[F]") == 9
        assert symbol_number(chem, chem.alphabet[13]) == 13

    def test_symbol_number_uses_value_table(self, quantum):
        assert [symbol_number(quantum, i) for i in range(quantum.size)] == [0, 1, 2, 3, 4, 5, 6, 8, 9]
        assert quantum.symbol_for_number(8) == 7
        assert quantum.symbol_for_number(7) is None

    def test_symbols_of_kind(self, chem):
        assert [s.name for s in chem.symbols_of_kind(SymbolKind.RING)] == ["[Ring]", "[=Ring]", "[#Ring]"]


@pytest.mark.unit
class TestValidateGrammar:
    """validate_grammar reports violations instead of raising."""

    def test_builtin_grammars_are_valid(self, chem, quantum, oxygen_grammar):
        for spec in (chem, quantum, oxygen_grammar):
            result = validate_grammar(spec)
            assert result.ok, [str(v) for v in result.violations]

    def test_vertex_successor_over_capacity(self, oxygen_grammar):
        bad = oxygen_grammar.model_copy(deep=True)
        # [O] in X_1 leaves one unit; claiming X_2 overfills
        bad.productions[1][1] = VertexRule(type_id=0, bond_order=1, next_state=2)
        result = validate_grammar(bad)
        assert not result.ok
        assert result.violations[0].state == 1
        assert result.violations[0].symbol == 1

    def test_epsilon_must_keep_state(self, oxygen_grammar):
        bad = oxygen_grammar.model_copy(deep=True)
        bad.productions[2][0] = EpsilonRule(next_state=1)
        messages = [v.message for v in validate_grammar(bad).violations]
        assert "epsilon rule must keep the state" in messages

    def test_branch_needs_state_two(self, chem):
        bad = chem.model_copy(deep=True)
        bad.productions[1][10] = BranchRule(branch_state=0, next_state=1)
        assert not validate_grammar(bad).ok

    def test_ring_successor(self, chem):
        bad = chem.model_copy(deep=True)
        bad.productions[3][13] = RingRule(max_order=1, next_state=3)
        messages = [v.message for v in validate_grammar(bad).violations]
        assert "ring successor must be X_2" in messages

    def test_table_size_mismatch(self, chem):
        bad = chem.model_copy(deep=True)
        bad.productions = bad.productions[:-1]
        result = validate_grammar(bad)
        assert not result.ok
        assert "table size mismatch" in result.violations[0].message

    def test_nop_must_be_first(self, chem):
        bad = chem.model_copy(deep=True)
        bad.alphabet[0] = bad.alphabet[0].model_copy(update={"kind": SymbolKind.VERTEX})
        assert not validate_grammar(bad).ok


@pytest.mark.unit
class TestGrammarJson:
    """Versioned JSON documents."""

    def test_json_round_trip(self, quantum):
        restored = grammar_from_json(grammar_to_json(quantum))
        assert restored == quantum
        assert restored.symbol_for_number(9) == 8

    def test_document_carries_version(self, chem):
        assert json.loads(grammar_to_json(chem))["version"] == FORMAT_VERSION

    def test_rejects_unknown_version(self, chem):
        data = json.loads(grammar_to_json(chem))
        data["version"] = FORMAT_VERSION + 1
        with pytest.raises(GrammarFormatError, match="unsupported grammar version"):
            grammar_from_json(json.dumps(data))

    def test_rejects_malformed_document(self):
        with pytest.raises(GrammarFormatError):
            grammar_from_json('{"name": "broken"}')
        with pytest.raises(GrammarFormatError):
            grammar_from_json("not json")


@pytest.mark.unit
class TestRuleText:
    def test_describe_rule(self, chem):
        assert describe_rule(chem, chem.rule(0, 9)) == "F X1"
        assert describe_rule(chem, chem.rule(3, 2)) == "=C X2"
        assert describe_rule(chem, chem.rule(1, 9)) == "F"
        assert describe_rule(chem, chem.rule(4, 10)) == "B(N,X1) X3"
        assert describe_rule(chem, chem.rule(2, 15)) == "R2(N)"
        assert describe_rule(chem, chem.rule(0, 0)) == "ε X0"

    def test_format_rule_table(self, oxygen_grammar):
        lines = format_rule_table(oxygen_grammar).splitlines()
        assert len(lines) == 1 + (oxygen_grammar.r + 1) + 1
        assert lines[0].split() == ["[nop]", "[O]", "[=O]", "[Branch]", "[Ring]"]
        assert lines[1].startswith("X0")
        assert lines[-1].split() == ["N", "0", "1", "2", "3", "4"]
