import json
import math
from fractions import Fraction

import numpy as np

from src.core.reports import ReportWriter, format_cell, to_jsonable
from src.modules.hypergroup.schemas import AxiomCheck


class TestToJsonable:
    def test_scalars(self):
        assert to_jsonable(Fraction(1, 2)) == 0.5
        assert to_jsonable(np.float64(0.25)) == 0.25
        assert to_jsonable(np.int64(3)) == 3
        assert to_jsonable(np.bool_(True)) is True
        assert to_jsonable(complex(2, 0)) == 2.0
        assert to_jsonable(complex(1, -1)) == [1.0, -1.0]

    def test_non_finite_floats_become_strings(self):
        assert to_jsonable([math.inf, -math.inf, math.nan]) == ["inf", "-inf", "nan"]

    def test_containers_and_models(self):
        assert to_jsonable(frozenset({3, 1, 2})) == [1, 2, 3]
        assert to_jsonable(range(3)) == [0, 1, 2]
        assert to_jsonable({1: np.array([1.5])}) == {"1": [1.5]}
        check = AxiomCheck(name="identity", passed=True)
        assert to_jsonable(check)["name"] == "identity"


def test_format_cell():
    assert format_cell(0.1) == "0.10000000000000001"
    assert format_cell(True) == "true"
    assert format_cell(7) == "7"
    assert format_cell(Fraction(1, 4)) == "0.25"


class TestReportWriter:
    def test_json_envelope(self, tmp_path):
        writer = ReportWriter(tmp_path)
        path = writer.write_json("hyper", "validate", True, {"b": 1, "a": 0.1})
        assert path.name == "hyper_validate.json"
        envelope = json.loads(path.read_text(encoding="utf-8"))
        assert envelope["passed"] is True
        assert envelope["payload"] == {"a": 0.1, "b": 1}
        assert list(envelope) == sorted(envelope)
        assert writer.written == [path]

    def test_byte_identical_reruns(self, tmp_path):
        payload = {"values": [1 / 3, math.inf], "ok": True}
        first = ReportWriter(tmp_path / "a").write_json("x", "y", True, payload).read_bytes()
        second = ReportWriter(tmp_path / "b").write_json("x", "y", True, payload).read_bytes()
        assert first == second

    def test_csv(self, tmp_path):
        path = ReportWriter(tmp_path).write_csv("t.csv", ["M", "value"], [[100, 0.5], [1000, 1 / 3]])
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines == ["M,value", "100,0.5", "1000,0.33333333333333331"]
