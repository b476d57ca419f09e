"""Tests for workbench.report_builder module."""

import json

from workbench.report_builder import ReportBuilder, ReportSection


class TestReportSection:
    """Test cases for ReportSection."""

    def test_informational_section_omits_ok(self):
        section = ReportSection("closure", {"size": 2})
        assert section.as_dict() == {"title": "closure", "size": 2}

    def test_checked_section_carries_details(self):
        section = ReportSection("axioms", ok=False, details=["ι not monotone"])
        assert section.as_dict() == {"title": "axioms", "ok": False, "details": ["ι not monotone"]}


class TestReportBuilder:
    """Test cases for ReportBuilder."""

    def test_sections_keep_insertion_order(self):
        report = ReportBuilder("demo").add_section("first").add_section("second", ok=True)
        assert [section.title for section in report.build()] == ["first", "second"]

    def test_ok_ignores_informational_sections(self):
        report = ReportBuilder("demo").add_section("info", size=3).add_section("check", ok=True)
        assert report.ok
        assert report.failed == []

    def test_failed_lists_failed_titles(self):
        report = ReportBuilder("demo")
        report.add_section("good", ok=True)
        report.add_section("bad", ok=False)
        assert not report.ok
        assert report.failed == ["bad"]

    def test_render_text(self):
        report = ReportBuilder("demo")
        report.add_section("check", ok=False, details=["witness (0, 1)"], checked=4)
        assert report.render_text().splitlines() == [
            "== demo ==",
            "check [FAIL]",
            "  checked: 4",
            "  - witness (0, 1)",
            "verdict: FAILED",
        ]

    def test_render_json_includes_payload(self):
        report = ReportBuilder("demo").add_section("check", ok=True)
        report.payload = {"size": 2}
        document = json.loads(report.render_json())
        assert document == {
            "title": "demo",
            "ok": True,
            "sections": [{"title": "check", "ok": True}],
            "result": {"size": 2},
        }

    def test_render_json_without_payload(self):
        document = json.loads(ReportBuilder("empty").render_json())
        assert "result" not in document
        assert document["ok"] is True
