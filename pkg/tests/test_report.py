"""Analysis reports: content, determinism, and monotonicity validation."""

from __future__ import annotations

import json

import pytest

from nodeloc.document import TopologyDocument
from nodeloc.errors import CapacityError, FormatError, UsageError
from nodeloc.report import analyze, emit_report, reformat_report

PATH4 = TopologyDocument(
    ("m1", "v1", "v2", "m2"), frozenset({0, 3}), frozenset({(0, 1), (1, 2), (2, 3)})
)
RING = TopologyDocument(
    ("m", "v1", "v2", "v3"),
    frozenset({0}),
    frozenset({(0, 1), (1, 2), (2, 3), (0, 3)}),
)
UP_DOC = TopologyDocument(
    ("m1", "v1", "v2", "m2"),
    frozenset({0, 3}),
    frozenset({(0, 1), (1, 3), (1, 2), (2, 3)}),
    paths=((0, 1, 3), (0, 1, 2, 3)),
)


class TestAnalyze:
    def test_path4_cap_table(self):
        report = analyze(PATH4, oracle=True)
        payload = json.loads(emit_report(report, "json"))
        cap = payload["models"]["CAP"]
        assert [row["value"] for row in cap["verdicts"]] == ["identifiable"] * 3
        assert cap["bounds"]["exact"] == 2
        assert cap["oracle"]["max_identifiability"] == 2

    def test_ring_cap_bounds_and_oracle(self):
        report = analyze(RING, models=("CAP",), oracle=True)
        payload = json.loads(emit_report(report, "json"))
        cap = payload["models"]["CAP"]
        assert (cap["bounds"]["lower"], cap["bounds"]["upper"]) == (1, 2)
        assert cap["oracle"]["max_identifiability"] == 2

    def test_up_section(self):
        report = analyze(UP_DOC, oracle=True)
        payload = json.loads(emit_report(report, "json"))
        up = payload["models"]["UP"]
        assert up["bounds"] == {
            "lower": 0,
            "upper": 1,
            "exact": None,
            "applicable": True,
            "guard_note": "",
        }
        assert up["oracle"]["max_identifiability"] == 1
        assert up["cover_profile"]["sizes"] == {"v1": "inf", "v2": 1}
        assert up["cover_profile"]["min_cover"] == 1

    def test_default_models_follow_paths(self):
        assert set(json.loads(emit_report(analyze(PATH4), "json"))["models"]) == {"CAP", "CSP"}
        assert set(json.loads(emit_report(analyze(UP_DOC), "json"))["models"]) == {
            "CAP",
            "CSP",
            "UP",
        }

    def test_up_without_paths_is_a_usage_error(self):
        with pytest.raises(UsageError):
            analyze(PATH4, models=("UP",))

    def test_k_range_restricts_table(self):
        report = analyze(PATH4, k_range=(1, 2))
        payload = json.loads(emit_report(report, "json"))
        assert [row["k"] for row in payload["models"]["CAP"]["verdicts"]] == [1, 2]
        with pytest.raises(UsageError):
            analyze(PATH4, k_range=(0, 9))

    def test_oracle_guard(self):
        from nodeloc.generate import erdos_renyi

        big = erdos_renyi(12, 0.4, seed=3, monitors=2)
        with pytest.raises(CapacityError):
            analyze(big, oracle=True)
        analyze(big, oracle=False)  # conditions alone stay polynomial


class TestEmission:
    def test_byte_identical_reports(self):
        a = emit_report(analyze(UP_DOC, oracle=True), "json")
        b = emit_report(analyze(UP_DOC, oracle=True), "json")
        assert a == b

    def test_json_round_trips(self):
        payload = json.loads(emit_report(analyze(PATH4), "json"))
        assert payload["report_version"] == 1
        assert payload["provenance"]["input_sha256"]

    def test_text_lists_all_k_rows(self):
        text = emit_report(analyze(RING, models=("CAP",)), "text")
        for k in range(4):
            assert f"\n  {k} " in text

    def test_reformat_report(self):
        data = emit_report(analyze(PATH4), "json")
        assert reformat_report(data, "json") == data
        assert "model CAP" in reformat_report(data, "text")
        with pytest.raises(FormatError):
            reformat_report("{}", "text")

    def test_monotone_tables_on_corpus(self, corpus):
        for doc in corpus[:40]:
            payload = json.loads(emit_report(analyze(doc), "json"))
            for entry in payload["models"].values():
                dead = False
                for row in entry["verdicts"]:
                    if dead:
                        assert row["value"] == "not-identifiable"
                    dead = dead or row["value"] == "not-identifiable"


def test_all_monitor_document_is_a_usage_error():
    doc = TopologyDocument(("a", "b"), frozenset({0, 1}), frozenset({(0, 1)}))
    with pytest.raises(UsageError, match="no failures"):
        analyze(doc)
