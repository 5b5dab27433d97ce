"""Validation findings reported by vocabulary, bundle, and config checks.

Validators never raise: they return a list of findings so callers can
decide how strict to be. Severity ``error`` marks an invariant breach,
``warning`` marks something that is legal but probably unintended, and
``info`` carries diagnostics such as partition properties.
"""

from dataclasses import dataclass

ERROR = "error"
WARNING = "warning"
INFO = "info"

_SEVERITIES = (ERROR, WARNING, INFO)


@dataclass(frozen=True)
class Finding:
    severity: str
    code: str
    message: str

    def __post_init__(self):
        if self.severity not in _SEVERITIES:
            raise ValueError(f"unknown severity {self.severity!r}")

    def __str__(self):
        return f"{self.severity}: [{self.code}] {self.message}"


def has_errors(findings):
    """True if any finding is error-severity."""
    return any(f.severity == ERROR for f in findings)
