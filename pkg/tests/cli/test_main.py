import os
from unittest.mock import patch

import pytest
from click.testing import CliRunner

from src.main import EXIT_CONFIG, EXIT_USAGE, cli
from src.models.atlas import AtlasReport

@pytest.fixture
def runner():
    return CliRunner()

@pytest.fixture(autouse=True)
def clean_environment():
    with patch.dict(os.environ, {}, clear=True), patch("src.main.setup_logging"):
        yield

class TestCheckCommand:
    """Test cases for the check command"""

    def test_ap_matrix(self, runner):
        result = runner.invoke(cli, ['check', '1 1; 1 1'])
        assert result.exit_code == 0
        assert "Verdict: AP" in result.output
        assert "Oracles: Agree" in result.output

    def test_not_ap_matrix(self, runner):
        result = runner.invoke(cli, ['check', '0 1; -1 0'])
        assert result.exit_code == 1
        assert "Verdict: not AP" in result.output

    def test_invalid_matrix(self, runner):
        result = runner.invoke(cli, ['check', '1 a; 1 1'])
        assert result.exit_code == EXIT_USAGE

    def test_invalid_configuration(self, runner):
        result = runner.invoke(cli, ['check', '1 1; 1 1', '--tol', '-1'])
        assert result.exit_code == EXIT_CONFIG

    def test_leading_minus_matrix(self, runner):
        result = runner.invoke(cli, ['check', '-1 1; 1 -1'])
        assert result.exit_code == 0
        assert "Verdict: AP" in result.output

    def test_unknown_option_is_usage_error(self, runner):
        result = runner.invoke(cli, ['check', '1 1; 1 1', '--bogus'])
        assert result.exit_code == EXIT_USAGE

    def test_missing_argument_is_usage_error(self, runner):
        result = runner.invoke(cli, ['check'])
        assert result.exit_code == EXIT_USAGE

class TestCertificateCommand:
    """Test cases for the certificate command"""

    def test_markdown(self, runner):
        result = runner.invoke(cli, ['certificate', '0 1 0; 0 0 1; 1 0 0', '--format', 'md'])
        assert result.exit_code == 0
        assert "# Certificates (AP, Agree)" in result.output
        assert "- eigen:" in result.output
        assert "- poly:" in result.output

    def test_json(self, runner):
        result = runner.invoke(cli, ['certificate', '0 1 0; 0 0 1; 1 0 0'])
        assert result.exit_code == 0
        assert '"is_ap": true' in result.output

    def test_no_certificate(self, runner):
        result = runner.invoke(cli, ['certificate', '1 0; 0 2'])
        assert result.exit_code == 1
        assert '"is_ap": false' in result.output

class TestClassifyCommand:
    """Test cases for the classify command"""

    def test_b_matrix_exclusion(self, runner):
        result = runner.invoke(cli, ['classify', '0+0/+0-/+0+'])
        assert result.exit_code == 0
        assert "Verdict: DNA via Theorem4" in result.output

    def test_table_entry(self, runner):
        result = runner.invoke(cli, ['classify', '++0/-0+/+00'])
        assert result.exit_code == 0
        assert "Verdict: AAP via Table" in result.output
        assert "8.2" in result.output

    def test_invalid_pattern(self, runner):
        result = runner.invoke(cli, ['classify', '0+0/+0'])
        assert result.exit_code == EXIT_USAGE

    def test_leading_minus_pattern(self, runner):
        result = runner.invoke(cli, ['classify', '-+0/+-+/0+-'])
        assert result.exit_code == 0
        assert "Verdict: RAP via UniformOffdiag" in result.output

class TestSubclassCommand:
    """Test cases for the subclass command"""

    def test_holds(self, runner):
        result = runner.invoke(cli, ['subclass', '0+/+0', '-+/+-'])
        assert result.exit_code == 0
        assert "Holds" in result.output

    def test_fails(self, runner):
        result = runner.invoke(cli, ['subclass', '-+/+-', '0+/+0', '--seed', '1'])
        assert result.exit_code == 1
        assert "Counterexample:" in result.output

    def test_dimension_mismatch(self, runner):
        result = runner.invoke(cli, ['subclass', '0+/+0', '0+0/+0-/+0+'])
        assert result.exit_code == EXIT_USAGE

class TestReportCommands:
    """Test cases for the atlas and verify-paper commands"""

    def test_atlas_writes_reports(self, runner, tmp_path):
        report = AtlasReport(digraph_groups=[], totals={'RAP': 0, 'AAP': 0, 'DNA': 0})
        with patch('src.main.AtlasBuilder') as mock_builder:
            mock_builder.return_value.build.return_value = report
            result = runner.invoke(cli, ['atlas', '--out', str(tmp_path), '--seed', '7'])

        assert result.exit_code == 0
        assert (tmp_path / "atlas.json").exists()
        assert (tmp_path / "atlas.md").exists()
        assert (tmp_path / "discrepancies.json").exists()
        assert mock_builder.call_args[0][0].sampling.seed == 7

    def test_atlas_table_miss_fails(self, runner, tmp_path):
        report = AtlasReport(digraph_groups=[], totals={}, table_misses=["++0/-0+/+00"])
        with patch('src.main.AtlasBuilder') as mock_builder:
            mock_builder.return_value.build.return_value = report
            result = runner.invoke(cli, ['atlas', '--out', str(tmp_path)])
        assert result.exit_code == 1

    def test_verify_paper(self, runner, tmp_path):
        summary = {'witnesses': 2, 'matched': 2, 'match_rate': 1.0, 'decisive': 1, 'oracle_agreement': 1.0}
        with patch('src.main.AtlasBuilder') as mock_builder:
            mock_builder.return_value.verify_paper.return_value = (summary, [], [], [])
            result = runner.invoke(cli, ['verify-paper', '--out', str(tmp_path)])

        assert result.exit_code == 0
        assert "Witness match rate: 100.0% (2/2)" in result.output
        assert "Suspect rows: none" in result.output
        assert (tmp_path / "verification.json").exists()

    def test_verify_paper_low_match_rate(self, runner, tmp_path):
        summary = {'witnesses': 2, 'matched': 1, 'match_rate': 0.5, 'decisive': 2, 'oracle_agreement': 1.0}
        with patch('src.main.AtlasBuilder') as mock_builder:
            mock_builder.return_value.verify_paper.return_value = (summary, [], [], [])
            result = runner.invoke(cli, ['verify-paper', '--out', str(tmp_path)])
        assert result.exit_code == 1
