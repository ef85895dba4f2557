"""Integration tests for CLI commands."""

import json

import pytest

from src.chem.valence import chem_grammar
from src.grammar.spec import grammar_from_json
from src.main import cli


@pytest.mark.integration
class TestCommandIntegration:
    """Test CLI command integration."""

    def test_cli_help(self, runner):
        """Test that CLI help lists the commands."""
        result = runner.invoke(cli, ["--help"])

        assert result.exit_code == 0
        for command in ("decode", "encode", "roundtrip", "mutate", "sample", "derive-grammar", "onehot", "trace"):
            assert command in result.output

    def test_config_check(self, runner):
        """Test configuration and grammar check."""
        result = runner.invoke(cli, ["--config-check"])

        assert result.exit_code == 0
        assert "All checks passed" in result.stderr

    def test_config_check_bad_grammar(self, runner):
        result = runner.invoke(cli, ["--grammar", "missing.json", "--config-check"])
        assert result.exit_code == 2

    def test_unknown_grammar_is_usage_error(self, runner):
        result = runner.invoke(cli, ["--grammar", "missing.json", "decode"], input="[C]\n")
        assert result.exit_code == 2
        assert result.stdout == ""


@pytest.mark.integration
class TestRecordCommands:
    def test_decode(self, runner):
        result = runner.invoke(cli, ["decode"], input="[F][=C][=C][#N]\n[C][C][C][Ring][C]\n")

        assert result.exit_code == 0
        assert result.stdout.splitlines() == ["FC=C=N", "C1CC1"]

    def test_decode_keeps_line_correspondence(self, runner):
        result = runner.invoke(cli, ["decode"], input="[C][O]\n[Xx]\n\n[F]\n")

        assert result.exit_code == 1
        assert result.stdout.split("\n")[:4] == ["CO", "", "", "F"]
        assert "line 2, col 1: unknown token" in result.stderr

    def test_decode_with_workers(self, runner):
        lines = ["[C]" * n for n in range(1, 30)]
        result = runner.invoke(cli, ["decode", "--workers", "4"], input="\n".join(lines) + "\n")

        assert result.exit_code == 0
        assert result.stdout.splitlines() == ["C" * n for n in range(1, 30)]

    def test_decode_quantum_graph_json(self, runner):
        result = runner.invoke(cli, ["--grammar", "quantum", "decode"], input="[SPDC][BS][Det]\n")

        assert result.exit_code == 0
        assert json.loads(result.stdout) == {
            "vertices": ["SPDC", "BS", "Det"],
            "edges": [[0, 1, 1], [1, 2, 1]],
        }

    def test_decode_inline_valence_table(self, runner):
        result = runner.invoke(cli, ["--grammar", "chem:C:4,S:2", "decode"], input="[C][=S]\n[S][S][C]\n")

        assert result.exit_code == 0
        assert result.stdout.splitlines() == ["C=S", "SSC"]

    def test_decode_valence_table_json(self, runner, temp_dir):
        table = temp_dir / "table.json"
        table.write_text(json.dumps({"C": 4, "O": 2}))
        result = runner.invoke(cli, ["--grammar", f"chem:{table}", "decode"], input="[C][=O]\n[N]\n")

        assert result.exit_code == 1
        assert result.stdout.split("\n")[:2] == ["C=O", ""]
        assert "line 2, col 1: unknown token" in result.stderr

    def test_encode_inline_valence_table(self, runner):
        result = runner.invoke(cli, ["--grammar", "chem:C:4,Cl:1", "encode"], input="ClCCl\n")

        assert result.exit_code == 0
        assert result.stdout == "[Cl][C][Cl]\n"

    def test_bad_inline_valence_table(self, runner):
        result = runner.invoke(cli, ["--grammar", "chem:C:4,C:3", "decode"], input="[C]\n")

        assert result.exit_code == 2
        assert "listed twice" in result.stderr

    def test_encode(self, runner):
        result = runner.invoke(cli, ["encode"], input="C1CC1\nC(C\n")

        assert result.exit_code == 1
        assert result.stdout.split("\n")[:2] == ["[C][C][C][Ring][C]", ""]
        assert "line 2, col 2: unmatched_paren" in result.stderr

    def test_encode_to_file(self, runner, temp_dir):
        output = temp_dir / "out.txt"
        result = runner.invoke(cli, ["encode", "-o", str(output)], input="FC=C=N\n")

        assert result.exit_code == 0
        assert output.read_text() == "[F][C][=C][=N]\n"

    def test_roundtrip(self, runner):
        result = runner.invoke(cli, ["roundtrip"], input="CC(NC)CC1=CC=C2OCOC2=C1\nc1ccccc1\nCX\n")

        assert result.exit_code == 1
        lines = result.stdout.split("\n")
        assert lines[0].startswith("pass\t[C]")
        assert lines[1].startswith("pass\t")
        assert lines[2] == ""
        assert "line 3, col 2: syntax" in result.stderr


@pytest.mark.integration
class TestExperimentCommands:
    def test_mutate_json(self, runner):
        result = runner.invoke(cli, ["mutate", "--k", "1", "--trials", "50", "--seed", "1", "--format", "json"])

        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report["representation"] == "selfies"
        assert report["rate"] == 1.0
        assert len(report["examples"]) == 3

    def test_mutate_smiles_text(self, runner):
        result = runner.invoke(cli, ["mutate", "--rep", "smiles", "--trials", "20", "--seed", "2"])

        assert result.exit_code == 0
        assert "Mutation report" in result.stdout
        assert "Mutating smiles" in result.stderr

    def test_mutate_bad_start(self, runner):
        result = runner.invoke(cli, ["mutate", "--rep", "smiles", "--start", "C(", "--trials", "5"])
        assert result.exit_code == 2

    def test_sample_json(self, runner):
        result = runner.invoke(cli, ["sample", "--count", "100", "--max-len", "10", "--seed", "2", "--format", "json"])

        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert (report["count"], report["max_len"], report["rate"]) == (100, 10, 1.0)

    def test_sample_profile(self, runner):
        result = runner.invoke(cli, ["sample", "--profile", "quick", "--max-len", "8", "--format", "json"])

        assert result.exit_code == 0
        assert json.loads(result.stdout)["count"] == 500

    def test_sample_saturation(self, runner):
        result = runner.invoke(
            cli,
            ["sample", "--count", "5000", "--max-len", "2", "--patience", "30", "--format", "json"],
        )

        assert result.exit_code == 0
        assert json.loads(result.stdout)["saturated"] is True

    @pytest.mark.parametrize("command", ["mutate", "sample"])
    def test_list_profiles(self, runner, command):
        result = runner.invoke(cli, [command, "--list-profiles"])

        assert result.exit_code == 0
        assert "quick" in result.stdout
        assert "Small runs for smoke checks" in result.stdout

    def test_sample_bad_range(self, runner):
        result = runner.invoke(cli, ["sample", "--min-len", "5", "--max-len", "2"])
        assert result.exit_code == 2


@pytest.mark.integration
class TestGrammarCommands:
    def test_derive_grammar_stdout(self, runner):
        result = runner.invoke(cli, ["derive-grammar", "--types", "O:2"])

        assert result.exit_code == 0
        spec = grammar_from_json(result.stdout)
        assert [s.name for s in spec.alphabet] == ["[nop]", "[O]", "[=O]", "[Branch]", "[Ring]"]

    def test_derive_grammar_file_is_usable(self, runner, temp_dir):
        path = temp_dir / "grammars" / "chem.json"
        result = runner.invoke(
            cli, ["derive-grammar", "--types", "C:4,N:3,O:2,F:1", "--cap", "3", "--ring-orders", "3",
                  "--name", "chem", "-o", str(path)],
        )
        assert result.exit_code == 0
        assert grammar_from_json(path.read_text()) == chem_grammar()

        decoded = runner.invoke(cli, ["--grammar", str(path), "decode"], input="[F][=C][=C][#N]\n")
        assert decoded.stdout == "FC=C=N\n"

    def test_derive_grammar_bad_types(self, runner):
        result = runner.invoke(cli, ["derive-grammar", "--types", "C4"])
        assert result.exit_code == 2

    def test_grammar_dump(self, runner):
        result = runner.invoke(cli, ["grammar-dump"])

        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert "[Branch]" in lines[0]
        assert [line.split()[0] for line in lines[1:]] == ["X0", "X1", "X2", "X3", "X4", "N"]

    def test_grammar_dump_json(self, runner):
        result = runner.invoke(cli, ["--grammar", "quantum", "grammar-dump", "--format", "json"])

        assert result.exit_code == 0
        assert grammar_from_json(result.stdout).name == "quantum"

    def test_grammar_dump_counts(self, runner):
        result = runner.invoke(cli, ["grammar-dump", "--format", "table", "--counts"])

        assert result.exit_code == 0
        assert "Rule counts" in result.stdout


@pytest.mark.integration
class TestOneHotAndTrace:
    def test_onehot_stdout(self, runner):
        result = runner.invoke(cli, ["onehot", "--max-len", "3"], input="[C][O]\n")

        assert result.exit_code == 0
        rows = result.stdout.splitlines()
        assert len(rows) == 3
        assert rows[0].split(",")[1] == "1"
        assert rows[2].split(",")[0] == "1"

    def test_onehot_file_and_reverse(self, runner, temp_dir):
        path = temp_dir / "matrices.csv"
        result = runner.invoke(cli, ["onehot", "--max-len", "4", "-o", str(path)], input="[C][O]\n[F]\n")

        assert result.exit_code == 0
        assert (temp_dir / "matrices.csv.alphabet.txt").read_text().splitlines()[0] == "[nop]"

        back = runner.invoke(cli, ["onehot", "--max-len", "4", "--reverse", "-i", str(path)])
        assert back.exit_code == 0
        assert back.stdout.splitlines() == ["[C][O]", "[F]"]

    def test_onehot_too_long(self, runner):
        result = runner.invoke(cli, ["onehot", "--max-len", "1"], input="[C][O]\n")

        assert result.exit_code == 1
        assert result.stdout == ""
        assert "onehot" in result.stderr

    def test_trace_json(self, runner):
        result = runner.invoke(cli, ["trace", "--format", "json"], input="[C][Branch][C][F][C]\n")

        assert result.exit_code == 0
        record = json.loads(result.stdout)
        assert record["states"] == [0, 4, 3]
        assert record["steps"][1]["action"] == "branch"

    def test_trace_text(self, runner):
        result = runner.invoke(cli, ["trace"], input="[F][=C][=C][#N]\n")

        assert result.exit_code == 0
        assert "result: FC=C=N" in result.stdout
