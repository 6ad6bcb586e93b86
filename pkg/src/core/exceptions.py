import json
from pathlib import Path
from typing import Any, Dict, Optional

from loguru import logger

from src.core.config import settings


class OrliczLabException(Exception):
    code: str = "internal_error"
    exit_code: int = 1
    detail: str = "Internal error"

    def __init__(self, detail: Optional[str] = None, **context: Any):
        if detail:
            self.detail = detail
        self.context: Dict[str, Any] = context
        super().__init__(self.detail)

    def to_dict(self) -> Dict[str, Any]:
        return {"error": self.detail, "code": self.code, "context": self.context}


class DomainError(OrliczLabException):
    code = "domain_error"
    exit_code = 2
    detail = "Argument outside the operation's domain"


class ConfigError(OrliczLabException):
    code = "config_error"
    exit_code = 2
    detail = "Invalid experiment configuration"


class TableError(OrliczLabException):
    code = "table_error"
    exit_code = 2
    detail = "Invalid hypergroup table"


class BoundaryError(OrliczLabException):
    """A computation needed a carrier point outside the truncation halo."""

    code = "halo_overflow"
    exit_code = 3
    detail = "Computation left the truncation halo"


class ConvexityError(OrliczLabException):
    code = "convexity_failed"
    exit_code = 4
    detail = "Convexity certificate failed"


class UnboundedOnRangeError(OrliczLabException):
    code = "unbounded_on_range"
    exit_code = 4
    detail = "Supremum is unbounded on the search range"


class DegenerateFunctionError(OrliczLabException):
    code = "degenerate_function"
    exit_code = 4
    detail = "Function vanishes at a positive grid point"


class MethodInapplicableError(OrliczLabException):
    code = "method_inapplicable"
    exit_code = 4
    detail = "Requested method does not apply to this input"


class CertificateError(OrliczLabException):
    code = "certificate_failed"
    exit_code = 5
    detail = "Certificate could not be established"


class NotFoundWithinBoundError(OrliczLabException):
    code = "not_found_within_bound"
    exit_code = 5
    detail = "No value found within the scan bound"


class NoAperiodicElementError(OrliczLabException):
    code = "no_aperiodic_element"
    exit_code = 6
    detail = "No aperiodic center element"


def handle_cli_error(exc: OrliczLabException, out_dir: Optional[Path] = None) -> int:
    """Log a library error, write the error envelope and return the exit status."""
    logger.error(f"{exc.code}: {exc.detail}")
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
        envelope = {"schema_version": settings.SCHEMA_VERSION, **exc.to_dict()}
        (out_dir / "error.json").write_text(
            json.dumps(envelope, sort_keys=True, indent=2, default=str) + "\n",
            encoding="utf-8",
        )
    return exc.exit_code
