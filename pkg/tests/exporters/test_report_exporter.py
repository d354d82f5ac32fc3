import json
import os

import pytest

from src.exporters.report_exporter import (
    ATLAS_JSON,
    ATLAS_MARKDOWN,
    CLEAN_BANNER,
    DISCREPANCIES_JSON,
    VERIFICATION_JSON,
    ReportExporter,
    emit_report,
)
from src.models.atlas import AtlasReport, ClassRecord, DigraphGroup, Discrepancy
from src.models.classification import Classification, Evidence, HarnessResult, WitnessResult
from src.models.enums import DiscrepancyKind, EvidenceKind, ReportFormat, Verdict
from src.models.pattern import SignPattern

def make_record(pattern, verdict, kind, entry_ids=(), printed=None, size=4):
    return ClassRecord(
        pattern=pattern,
        size=size,
        classification=Classification(SignPattern.from_text(pattern), verdict, Evidence(kind)),
        entry_ids=entry_ids,
        printed_label=printed,
        corroboration={'ap': 12, 'not_ap': 0, 'inconclusive': 0},
    )

@pytest.fixture
def report():
    """Small clean atlas report"""
    records = (
        make_record("0+0/00+/+00", Verdict.RAP, EvidenceKind.UNIFORM_OFFDIAG, ('1.1',), 'RAP'),
        make_record("0-0/00+/+00", Verdict.DNA, EvidenceKind.ROW_COL_FAIL, ('1.2',), 'DNA', size=12),
    )
    group = DigraphGroup(index=1, digraph="1->2,2->3,3->1", edge_count=3, table_digraphs=(1,),
                         classes=records)
    return AtlasReport(
        digraph_groups=[group],
        totals={'RAP': 1, 'AAP': 0, 'DNA': 1},
        run_meta={'seed': 7, 'samples': 12},
        elapsed_seconds=1.25,
    )

@pytest.fixture
def exporter(tmp_path):
    return ReportExporter(output_directory=str(tmp_path / "reports"))

class TestReportExporter:
    """Test cases for ReportExporter class"""

    def test_render_markdown_clean(self, exporter, report):
        text = exporter.render_markdown(report)

        assert text.startswith("# Irreducible 3x3 sign pattern atlas")
        assert CLEAN_BANNER in text
        assert "## Digraph 1 (3 edges)" in text
        assert "Edges `1->2,2->3,3->1`; table digraph 1" in text
        assert "| `0+0/00+/+00` | 4 | RAP | UniformOffdiag | 1.1 | RAP |  | 12 / 0 / 0 |" in text
        assert "Canonical classes: 2; seed 7, samples 12" in text
        assert "Elapsed" not in text

    def test_render_markdown_discrepancies(self, exporter, report):
        report.discrepancies.append(Discrepancy(DiscrepancyKind.SUSPECT_ROW, '4.4', 'bound misprinted'))
        report.table_misses.append("++0/-0+/+00")
        text = exporter.render_markdown(report)

        assert CLEAN_BANNER not in text
        assert "**1 discrepancies**" in text
        assert "- suspect_row `4.4`: bound misprinted" in text
        assert "## Table misses" in text
        assert "- `++0/-0+/+00`" in text

    def test_unproven_evidence_is_marked(self, exporter, report):
        record = make_record("0+0-/00+0/000+/+000", Verdict.RAP, EvidenceKind.SAMPLED_ALL_AP)
        report.digraph_groups.append(DigraphGroup(index=2, digraph="", edge_count=5,
                                                  table_digraphs=(), classes=(record,)))
        text = exporter.render_markdown(report)
        assert "SampledAllAp (unproven)" in text
        assert "table digraph -" in text

    def test_witness_section(self, exporter, report):
        report.witness_report.extend([
            WitnessResult('8.2', 0, ((1.0,),), True, False, 'Agree', 0.1, -0.2),
            WitnessResult('8.2', 1, ((1.0,),), True, True, 'Agree', 0.3, 0.2),
        ])
        text = exporter.render_markdown(report)

        assert "1/2 match the oracle verdict" in text
        assert "- `8.2` #0: printed ap=True, oracle ap=False, eigen margin 0.1" in text

    def test_render_json_timing(self, tmp_path, report):
        """Test elapsed time is only written on request"""
        plain = json.loads(ReportExporter(str(tmp_path)).render_json(report))
        timed = json.loads(ReportExporter(str(tmp_path), include_timing=True).render_json(report))

        assert 'elapsed_seconds' not in plain
        assert timed['elapsed_seconds'] == 1.25
        assert plain['class_count'] == 2

    def test_export_all(self, exporter, report):
        written = exporter.export_all(report)

        assert set(written) == {ATLAS_JSON, ATLAS_MARKDOWN, DISCREPANCIES_JSON}
        assert all(os.path.exists(path) for path in written.values())
        with open(written[DISCREPANCIES_JSON], encoding='utf-8') as handle:
            assert json.load(handle) == []

    def test_export_all_is_byte_identical(self, exporter, report):
        first = {name: open(path, 'rb').read() for name, path in exporter.export_all(report).items()}
        second = {name: open(path, 'rb').read() for name, path in exporter.export_all(report).items()}
        assert first == second

    def test_json_reloads(self, exporter, report):
        written = exporter.export_all(report)
        with open(written[ATLAS_JSON], encoding='utf-8') as handle:
            reloaded = AtlasReport.from_dict(json.load(handle))
        assert reloaded == report
        assert reloaded.elapsed_seconds is None

    def test_export_verification(self, exporter):
        summary = {'witnesses': 1, 'matched': 1, 'match_rate': 1.0}
        witnesses = [WitnessResult('8.2', 1, ((1.0,),), True, True, 'Agree', 0.3, 0.2)]
        harness = [HarnessResult('8.2', 'condition', total=10, passed=9, skipped=1)]
        written = exporter.export_verification(summary, witnesses, harness, [])

        assert set(written) == {VERIFICATION_JSON, DISCREPANCIES_JSON}
        with open(written[VERIFICATION_JSON], encoding='utf-8') as handle:
            document = json.load(handle)
        assert document['summary'] == summary
        assert document['witnesses'][0]['match'] is True
        assert document['harness'][0]['failed'] == 0

    def test_export_into_file_path_fails(self, tmp_path, report):
        blocker = tmp_path / "blocker"
        blocker.write_text("x", encoding='utf-8')
        with pytest.raises(OSError):
            ReportExporter(str(blocker)).export_all(report)

    def test_emit_report(self, report):
        assert emit_report(report, ReportFormat.MARKDOWN).startswith("# Irreducible")
        assert json.loads(emit_report(report))['totals'] == {'RAP': 1, 'AAP': 0, 'DNA': 1}
