"""Error types shared by the library and the CLI.

Every error carries a machine-readable ``kind`` and the process exit code the
CLI should use when it escapes to the top level.
"""
from typing import Any, Dict, Optional


class HamcountError(Exception):
    kind = "error"
    exit_code = 2

    def payload(self) -> Dict[str, Any]:
        return {"error": self.kind, "message": str(self)}


class ContractViolation(HamcountError, ValueError):
    kind = "contract_violation"


class DimensionMismatch(ContractViolation):
    kind = "dimension_mismatch"


class UnsupportedDimension(ContractViolation):
    kind = "unsupported_dimension"


class EnumerationCapExceeded(HamcountError):
    kind = "cap_exceeded"

    def __init__(self, what: str, n: int, cap: int):
        super().__init__(f"{what}: n={n} exceeds enumeration cap {cap}")
        self.what = what
        self.n = n
        self.cap = cap


class MatrixParseError(HamcountError):
    kind = "parse_error"

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)
        self.detail = message
        self.line = line
        self.column = column

    def payload(self) -> Dict[str, Any]:
        out = super().payload()
        out["line"] = self.line
        out["column"] = self.column
        return out


def check_cap(what: str, n: int, cap: int) -> None:
    if n > cap:
        raise EnumerationCapExceeded(what, n, cap)


class InputUnavailable(HamcountError):
    kind = "input_unavailable"


class UsageError(HamcountError):
    kind = "usage_error"
