import json

import pytest

from src.core.exceptions import (
    BoundaryError,
    ConfigError,
    NoAperiodicElementError,
    OrliczLabException,
    handle_cli_error,
)


class TestExceptions:
    def test_codes_and_exit_statuses(self):
        assert ConfigError().exit_code == 2
        assert BoundaryError().code == "halo_overflow"
        assert NoAperiodicElementError().exit_code == 6

    def test_detail_and_context(self):
        exc = BoundaryError("left the halo", point=61)
        assert str(exc) == "left the halo"
        assert exc.to_dict() == {"error": "left the halo", "code": "halo_overflow", "context": {"point": 61}}

    def test_default_detail(self):
        assert OrliczLabException().detail == "Internal error"

    def test_handle_cli_error_writes_envelope(self, tmp_path):
        status = handle_cli_error(NoAperiodicElementError("none", hypergroup="cyclic:5"), tmp_path)
        assert status == 6
        envelope = json.loads((tmp_path / "error.json").read_text(encoding="utf-8"))
        assert envelope["code"] == "no_aperiodic_element"
        assert envelope["context"] == {"hypergroup": "cyclic:5"}
        assert "schema_version" in envelope

    @pytest.mark.parametrize("exc", [ConfigError("x"), BoundaryError("y")])
    def test_handle_without_out_dir(self, exc):
        assert handle_cli_error(exc) == exc.exit_code
