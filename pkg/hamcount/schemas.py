from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator
from typing import Any, Dict, List, Literal, Optional

from hamcount.linalg.matrix import SquareMatrix
from hamcount.settings import settings

Method = Literal[
    "hc_identity", "hc_bruteforce",
    "hp_identity", "hp_bruteforce",
    "tree_tdmtt", "tree_bruteforce", "tree_rooted",
]

# ---------------- Count results ----------------

class CountReport(BaseModel):
    n: int = Field(ge=0)
    method: Method
    # Exact; serialized as a decimal string because counts outgrow doubles
    count: int
    terms_evaluated: int = Field(default=0, ge=0)
    elapsed_ms: float = 0.0

    @field_serializer("count")
    def _count_as_decimal(self, count: int) -> str:
        return str(count)

    def to_payload(self) -> Dict[str, Any]:
        return self.model_dump(mode="json")

# ---------------- Inputs / run configuration ----------------

class InputGraph(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    n: int = Field(ge=1)
    format: Literal["matrix", "edgelist"]
    matrix: SquareMatrix

    @model_validator(mode="after")
    def _matrix_matches_n(self) -> "InputGraph":
        if self.matrix.n != self.n:
            raise ValueError(f"matrix is {self.matrix.n}x{self.matrix.n} but n={self.n}")
        return self

class Caps(BaseModel):
    brute: int = Field(default_factory=lambda: settings.BRUTE_CAP, ge=1)
    function: int = Field(default_factory=lambda: settings.FUNCTION_CAP, ge=1)
    symbolic: int = Field(default_factory=lambda: settings.SYMBOLIC_CAP, ge=1)
    identity: int = Field(default_factory=lambda: settings.IDENTITY_CAP, ge=1)
    derivative: int = Field(default_factory=lambda: settings.DERIVATIVE_CAP, ge=1)

Subcommand = Literal["cycles", "paths", "trees", "verify", "list", "bench"]
ListKind = Literal["cycles", "trees", "identity", "paths", "derivative"]

class RunConfig(BaseModel):
    subcommand: Subcommand
    input_path: Optional[str] = None  # "-" reads stdin
    input_format: Literal["auto", "matrix", "edgelist"] = "auto"
    output: Literal["text", "json"] = "text"
    brute: bool = False
    diag_override: Optional[int] = None
    root: Optional[int] = None
    root_weight: Optional[int] = None
    undirected: bool = False
    threads: int = Field(default_factory=lambda: settings.THREADS, ge=1)
    caps: Caps = Field(default_factory=Caps)

    # list
    list_kind: Optional[ListKind] = None
    list_n: Optional[int] = Field(default=None, ge=1)

    # verify / bench
    max_n: Optional[int] = Field(default=None, ge=1)  # verify: 8, bench: 10
    min_n: int = Field(default=2, ge=1)
    samples: int = Field(default_factory=lambda: settings.VERIFY_SAMPLES, ge=1)
    seed: int = Field(default_factory=lambda: settings.SEED)

    @model_validator(mode="after")
    def _subcommand_inputs(self) -> "RunConfig":
        if self.subcommand in ("cycles", "paths", "trees") and not self.input_path:
            raise ValueError(f"{self.subcommand} needs an input file (or '-' for stdin)")
        if self.subcommand == "list" and (self.list_kind is None or self.list_n is None):
            raise ValueError("list needs a kind and n, e.g. 'list cycles 3'")
        return self

# ---------------- Verification / benchmark ----------------

class CheckFailure(BaseModel):
    n: int
    seed: Optional[int] = None
    detail: str

class CheckResult(BaseModel):
    name: str
    passed: bool
    cases: int = 0
    failures: List[CheckFailure] = Field(default_factory=list)
    elapsed_ms: float = 0.0

class VerifyReport(BaseModel):
    passed: bool
    max_n: int
    samples: int
    seed: int
    checks: List[CheckResult]

class BenchRow(BaseModel):
    n: int
    count: int
    terms_evaluated: int
    identity_ms: float
    brute_ms: Optional[float] = None
    agree: Optional[bool] = None

    @field_serializer("count")
    def _count_as_decimal(self, count: int) -> str:
        return str(count)

class ErrorReport(BaseModel):
    error: str
    message: str
    line: Optional[int] = None
    column: Optional[int] = None
