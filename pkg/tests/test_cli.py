"""Command line surface: index building, catalog search, the
standalone calculator, question answering exit codes, and the
evaluation report run."""

import pytest
from click.testing import CliRunner

from mathqa import retrieval
from mathqa.cli import cli

from conftest import ARXIV_CORPUS, GOLD_PATH, KG_FIXTURES


@pytest.fixture(scope="module")
def runner():
    return CliRunner()


@pytest.fixture(scope="module")
def arxiv_index(runner, tmp_path_factory):
    out = tmp_path_factory.mktemp("index") / "arxiv"
    result = runner.invoke(cli, [
        "index", "build", "--corpus", str(ARXIV_CORPUS),
        "--source", "arxiv", "--out", str(out)])
    assert result.exit_code == 0, result.output
    return out


class TestIndexBuild:
    def test_reports_catalog_sizes(self, runner, arxiv_index):
        # rebuilding prints one line per catalog plus the summary
        result = runner.invoke(cli, [
            "index", "build", "--corpus", str(ARXIV_CORPUS),
            "--source", "arxiv", "--out", str(arxiv_index)])
        assert result.exit_code == 0
        for name in ("symbol_to_name", "name_to_symbol",
                     "term_to_formula", "symbol_to_formula"):
            assert name in result.output
        assert "wrote catalogs for 20 documents" in result.output

    def test_written_files_load_back(self, arxiv_index):
        catalogs = retrieval.load_catalog_set(arxiv_index)
        assert catalogs.source.value == "arxiv"
        assert catalogs.symbol_to_name.lookup("E")[0][0] == "energy"

    def test_subject_filter(self, runner, tmp_path):
        out = tmp_path / "astro"
        result = runner.invoke(cli, [
            "index", "build", "--corpus", str(ARXIV_CORPUS),
            "--source", "arxiv", "--out", str(out),
            "--subjects", "astro-ph"])
        assert result.exit_code == 0
        assert "wrote catalogs for 4 documents" in result.output

    def test_unmatched_subject_filter_fails(self, runner, tmp_path):
        result = runner.invoke(cli, [
            "index", "build", "--corpus", str(ARXIV_CORPUS),
            "--source", "arxiv", "--out", str(tmp_path / "none"),
            "--subjects", "no-such-subject"])
        assert result.exit_code != 0
        assert "no documents" in result.output

    def test_missing_corpus_dir(self, runner, tmp_path):
        result = runner.invoke(cli, [
            "index", "build", "--corpus", str(tmp_path / "absent"),
            "--source", "arxiv", "--out", str(tmp_path / "out")])
        assert result.exit_code != 0


class TestSearch:
    def test_symbols_to_names(self, runner, arxiv_index):
        result = runner.invoke(cli, [
            "search", "--mode", "symbols2names", "--query", "E",
            "--index", str(arxiv_index), "--k", "3"])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert len(lines) == 3
        assert lines[0] == "1\tenergy\t38"

    def test_names_to_symbols(self, runner, arxiv_index):
        result = runner.invoke(cli, [
            "search", "--mode", "names2symbols", "--query", "energy",
            "--index", str(arxiv_index), "--k", "2"])
        assert result.stdout.splitlines()[0] == "1\tm\t51"

    def test_relation_by_symbols(self, runner, arxiv_index):
        result = runner.invoke(cli, [
            "search", "--mode", "rel-symbols", "--query", "E,m,c",
            "--index", str(arxiv_index)])
        assert result.stdout.splitlines()[0].split("\t")[1] == "E = m c ^ 2"

    def test_concept_search(self, runner, arxiv_index):
        result = runner.invoke(cli, [
            "search", "--mode", "concept", "--query", "energy",
            "--index", str(arxiv_index), "--k", "1"])
        assert "E = m c ^ 2" in result.stdout

    def test_no_results_goes_to_stderr(self, runner, arxiv_index):
        result = runner.invoke(cli, [
            "search", "--mode", "symbols2names", "--query", "ZZZ",
            "--index", str(arxiv_index)])
        assert result.exit_code == 0
        assert result.stdout == ""
        assert "no results" in result.stderr

    def test_single_operand_relation_is_an_error(self, runner, arxiv_index):
        result = runner.invoke(cli, [
            "search", "--mode", "rel-symbols", "--query", "E",
            "--index", str(arxiv_index)])
        assert result.exit_code != 0
        assert "invalid_request" in result.output

    def test_unknown_mode_is_a_usage_error(self, runner, arxiv_index):
        result = runner.invoke(cli, [
            "search", "--mode", "fuzzy", "--query", "E",
            "--index", str(arxiv_index)])
        assert result.exit_code == 2

    def test_k_from_environment(self, runner, arxiv_index):
        result = runner.invoke(
            cli,
            ["search", "--mode", "symbols2names", "--query", "E",
             "--index", str(arxiv_index)],
            env={"MATHQA_SEARCH_K": "2"}, auto_envvar_prefix="MATHQA")
        assert len(result.stdout.splitlines()) == 2


class TestCalc:
    def test_evaluates(self, runner):
        result = runner.invoke(cli, [
            "calc", "--formula", "v = s/t",
            "--bind", "s=100", "--bind", "t=9.58"])
        assert result.exit_code == 0
        assert result.stdout == f"v = {100 / 9.58}\n"

    def test_every_identifier_must_be_bound(self, runner):
        result = runner.invoke(cli, [
            "calc", "--formula", "E = m c ^ 2", "--bind", "m=1"])
        assert result.exit_code == 1
        assert "[unbound_identifiers]" in result.output
        assert "c" in result.output

    def test_non_algebraic_formula(self, runner):
        result = runner.invoke(cli, [
            "calc", "--formula", "E = \\sum_i m_i"])
        assert result.exit_code == 1
        assert "[non_algebraic]" in result.output

    def test_syntax_error(self, runner):
        result = runner.invoke(cli, ["calc", "--formula", "v = ((s/t"])
        assert result.exit_code == 1
        assert "[syntax_error]" in result.output

    def test_division_by_zero(self, runner):
        result = runner.invoke(cli, [
            "calc", "--formula", "v = s/t", "--bind", "s=1", "--bind", "t=0"])
        assert result.exit_code == 1
        assert "[division_by_zero]" in result.output

    @pytest.mark.parametrize("bind", ["m", "m=fast", "=2"])
    def test_malformed_binding(self, runner, bind):
        result = runner.invoke(cli, [
            "calc", "--formula", "v = s/t", "--bind", bind])
        assert result.exit_code == 1
        assert "bind" in result.output.lower()


class TestAsk:
    def test_answered_question_exits_zero(self, runner):
        result = runner.invoke(cli, [
            "ask", "What is the formula for speed?",
            "--kg-fixtures", str(KG_FIXTURES), "--offline"])
        assert result.exit_code == 0
        assert "outcome: ANSWERED" in result.stdout
        assert "concept: speed (Q3711325)" in result.stdout
        assert "formula: v = s/t" in result.stdout
        assert "s (distance)" in result.stdout
        assert "t (duration)" in result.stdout

    def test_constant_value_is_shown(self, runner):
        result = runner.invoke(cli, [
            "ask", "What is the relationship between energy and mass?",
            "--kg-fixtures", str(KG_FIXTURES), "--offline"])
        assert result.exit_code == 0
        assert "c (speed of light) = 299792458.0" in result.stdout

    def test_unanswered_question_exits_one(self, runner):
        result = runner.invoke(cli, [
            "ask", "What is the formula for florbleflux?",
            "--kg-fixtures", str(KG_FIXTURES), "--offline"])
        assert result.exit_code == 1
        assert "outcome: NO_RESULT" in result.stdout
        assert "note:" in result.stderr

    def test_unrecognized_question_exits_one(self, runner):
        result = runner.invoke(cli, [
            "ask", "tell me a joke",
            "--kg-fixtures", str(KG_FIXTURES), "--offline"])
        assert result.exit_code == 1
        assert "outcome: UNRECOGNIZED" in result.stdout

    def test_index_fallback_over_cli(self, runner, arxiv_index):
        result = runner.invoke(cli, [
            "ask", "What is the formula for energy?",
            "--index", str(arxiv_index),
            "--kg-fixtures", str(KG_FIXTURES), "--offline"])
        assert result.exit_code == 0
        assert "formula: E = m c ^ 2" in result.stdout
        assert "answered from the arxiv index" in result.stderr

    def test_no_sources_is_a_configuration_error(self, runner):
        result = runner.invoke(cli, ["ask", "What is the formula for speed?",
                                     "--offline"])
        assert result.exit_code == 1
        assert "at least one source" in result.output


class TestEval:
    def test_single_mode_run(self, runner, tmp_path):
        result = runner.invoke(cli, [
            "eval", "--modes", "15", "--gold", str(GOLD_PATH),
            "--kg-fixtures", str(KG_FIXTURES),
            "--out", str(tmp_path / "report")])
        assert result.exit_code == 0, result.output
        assert "mode 15 (formula names, Wikidata):" in result.stdout
        assert "wrote" in result.stdout
        summary = (tmp_path / "report" / "summary.tsv").read_text("utf-8")
        assert summary.splitlines()[0] == "Mode\tQuery\tTop1 Acc.\tmean(DCG)"
        assert (tmp_path / "report" / "detail.tsv").exists()

    def test_repeated_runs_are_byte_identical(self, runner, tmp_path,
                                              arxiv_index):
        outputs = []
        for name in ("first", "second"):
            result = runner.invoke(cli, [
                "eval", "--modes", "1,4,13", "--gold", str(GOLD_PATH),
                "--arxiv-index", str(arxiv_index),
                "--out", str(tmp_path / name)])
            assert result.exit_code == 0, result.output
            outputs.append(
                ((tmp_path / name / "summary.tsv").read_bytes(),
                 (tmp_path / name / "detail.tsv").read_bytes()))
        assert outputs[0] == outputs[1]

    def test_missing_source_for_requested_mode(self, runner, tmp_path):
        result = runner.invoke(cli, [
            "eval", "--modes", "2", "--gold", str(GOLD_PATH),
            "--kg-fixtures", str(KG_FIXTURES),
            "--out", str(tmp_path / "report")])
        assert result.exit_code == 1
        assert "no Wikipedia source" in result.output

    def test_bad_mode_spec(self, runner, tmp_path):
        result = runner.invoke(cli, [
            "eval", "--modes", "99", "--gold", str(GOLD_PATH),
            "--kg-fixtures", str(KG_FIXTURES),
            "--out", str(tmp_path / "report")])
        assert result.exit_code == 1
        assert "mode id" in result.output
