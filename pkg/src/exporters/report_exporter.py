import json
import logging
import os
from typing import Any, Dict, List, Sequence

from ..models.atlas import AtlasReport, Discrepancy
from ..models.classification import HarnessResult, WitnessResult
from ..models.enums import ReportFormat
from ..utils.helpers import ensure_directory_exists, format_float

logger = logging.getLogger(__name__)

ATLAS_JSON = "atlas.json"
ATLAS_MARKDOWN = "atlas.md"
DISCREPANCIES_JSON = "discrepancies.json"
VERIFICATION_JSON = "verification.json"

CLEAN_BANNER = "**CLEAN**: no discrepancies against the classification table"

def _dump(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"

class ReportExporter:
    """Writes atlas and verification reports as JSON and Markdown"""

    def __init__(self, output_directory: str = "./output", include_timing: bool = False):
        self.output_directory = output_directory
        self.include_timing = include_timing

        self.class_headers = [
            "pattern",
            "size",
            "verdict",
            "evidence",
            "entries",
            "printed",
            "diff",
            "sampled ap / not / ?",
        ]

    def render_json(self, report: AtlasReport) -> str:
        return _dump(report.to_dict(include_timing=self.include_timing))

    def render_discrepancies(self, discrepancies: Sequence[Discrepancy]) -> str:
        return _dump([d.to_dict() for d in discrepancies])

    def render_markdown(self, report: AtlasReport) -> str:
        lines = ["# Irreducible 3x3 sign pattern atlas", ""]
        # Summary banner
        if report.clean:
            lines.append(CLEAN_BANNER)
        else:
            lines.append(f"**{len(report.discrepancies)} discrepancies** against the classification table "
                         f"(see `{DISCREPANCIES_JSON}`)")
        lines.append("")

        # Verdict totals
        lines += ["| verdict | classes |", "|---|---|"]
        lines += [f"| {verdict} | {count} |" for verdict, count in report.totals.items()]
        lines += ["", f"Canonical classes: {report.class_count}; "
                      f"seed {report.run_meta.get('seed')}, samples {report.run_meta.get('samples')}", ""]
        if self.include_timing and report.elapsed_seconds is not None:
            lines += [f"Elapsed: {report.elapsed_seconds:.1f} s", ""]

        # One section per digraph
        for group in report.digraph_groups:
            tables = ', '.join(str(d) for d in group.table_digraphs) or '-'
            lines += [
                f"## Digraph {group.index} ({group.edge_count} edges)",
                "",
                f"Edges `{group.digraph}`; table digraph {tables}",
                "",
                "| " + " | ".join(self.class_headers) + " |",
                "|" + "---|" * len(self.class_headers),
            ]
            lines += [self._class_row(record) for record in group.classes]
            lines.append("")

        # Witnesses and findings
        lines += self._witness_lines(report.witness_report)
        if report.table_misses:
            lines += ["## Table misses", ""] + [f"- `{p}`" for p in report.table_misses] + [""]
        if report.soundness_violations:
            lines += ["## Theory-stage soundness violations", ""]
            lines += [f"- `{p}`" for p in report.soundness_violations] + [""]
        if report.discrepancies:
            lines += ["## Discrepancies", ""]
            lines += [f"- {d.kind.value} `{d.entry_id}`: {d.message}" for d in report.discrepancies]
            lines.append("")
        return "\n".join(lines)

    def _class_row(self, record) -> str:
        c = record.corroboration
        evidence = record.classification.evidence.kind.value
        if not record.classification.proven:
            evidence += " (unproven)"
        return "| " + " | ".join([
            f"`{record.pattern}`",
            str(record.size),
            record.verdict.value,
            evidence,
            ', '.join(record.entry_ids) or '-',
            record.printed_label or '-',
            'yes' if record.label_differs else '',
            f"{c.get('ap', 0)} / {c.get('not_ap', 0)} / {c.get('inconclusive', 0)}",
        ]) + " |"

    @staticmethod
    def _witness_lines(results: Sequence[WitnessResult]) -> List[str]:
        if not results:
            return []
        matched = sum(1 for r in results if r.match)
        lines = ["## Printed witnesses", "", f"{matched}/{len(results)} match the oracle verdict", ""]
        for r in results:
            if not r.match:
                lines.append(f"- `{r.entry_id}` #{r.index}: printed ap={r.expected_ap}, "
                             f"oracle ap={r.observed_ap}, eigen margin {format_float(r.eigen_margin)}")
        lines.append("")
        return lines

    def emit(self, report: AtlasReport, fmt: ReportFormat) -> str:
        if fmt == ReportFormat.JSON:
            return self.render_json(report)
        return self.render_markdown(report)

    def export_all(self, report: AtlasReport) -> Dict[str, str]:
        """Write atlas.json, atlas.md and discrepancies.json; returns name -> path"""
        try:
            # Create output directory
            ensure_directory_exists(self.output_directory)

            # Export reports
            written = {
                ATLAS_JSON: self._write(ATLAS_JSON, self.render_json(report)),
                ATLAS_MARKDOWN: self._write(ATLAS_MARKDOWN, self.render_markdown(report)),
                DISCREPANCIES_JSON: self._write(DISCREPANCIES_JSON,
                                                self.render_discrepancies(report.discrepancies)),
            }
        except Exception as e:
            logger.error(f"Error exporting atlas report: {e}")
            raise
        logger.info(f"Exported atlas report to {self.output_directory}")
        return written

    def export_verification(self, summary: Dict[str, Any], witnesses: Sequence[WitnessResult],
                            harness: Sequence[HarnessResult],
                            discrepancies: Sequence[Discrepancy]) -> Dict[str, str]:
        """Write verification.json and discrepancies.json"""
        # Prepare verification document
        document = {
            'summary': summary,
            'witnesses': [w.to_dict() for w in witnesses],
            'harness': [h.to_dict() for h in harness],
        }
        try:
            ensure_directory_exists(self.output_directory)
            written = {
                VERIFICATION_JSON: self._write(VERIFICATION_JSON, _dump(document)),
                DISCREPANCIES_JSON: self._write(DISCREPANCIES_JSON, self.render_discrepancies(discrepancies)),
            }
        except Exception as e:
            logger.error(f"Error exporting verification report: {e}")
            raise
        logger.info(f"Exported verification report to {self.output_directory}")
        return written

    def _write(self, filename: str, content: str) -> str:
        filepath = os.path.join(self.output_directory, filename)
        with open(filepath, 'w', encoding='utf-8') as handle:
            handle.write(content)
        return filepath

def emit_report(report: AtlasReport, fmt: ReportFormat = ReportFormat.JSON, include_timing: bool = False) -> str:
    return ReportExporter(include_timing=include_timing).emit(report, fmt)
