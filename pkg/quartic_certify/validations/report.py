from typing import Optional

from pydantic import BaseModel


class ExactValue(BaseModel):
    """p + q·√d with a decimal annotation; p, q, d are "p/q" strings."""

    real: bool = True
    p: Optional[str] = None
    q: Optional[str] = None
    d: Optional[str] = None
    decimal: Optional[str] = None


class PencilReport(BaseModel):
    b0: str
    b1: str
    b2: str
    discriminant: str


class CaseReport(BaseModel):
    id: int
    description: str
    conics: str
    root_nature: dict[str, int]
    members: list[Optional[str]]


class ClassicalReport(BaseModel):
    G: str
    H: str
    I: str  # noqa: E741
    J: str
    Delta: str
    aux: str
    pd: bool


class OracleReport(BaseModel):
    circle_min: float
    argmin: float
    samples: int


class WitnessReport(BaseModel):
    positive: list[str]
    negative: list[str]


class AgreementReport(BaseModel):
    classical: Optional[bool] = None
    oracle: Optional[bool] = None
    sylvester: Optional[bool] = None
    cases: Optional[bool] = None

    def all_hold(self) -> bool:
        return all(flag is not False for flag in (self.classical, self.oracle, self.sylvester, self.cases))


class Report(BaseModel):
    line: Optional[int] = None
    input: list[str]
    verdict: str
    orientation: Optional[str] = None
    lambda0: Optional[ExactValue] = None
    g_lambda0: Optional[ExactValue] = None
    a3_sq_over_4: Optional[str] = None
    pencil: Optional[PencilReport] = None
    case: Optional[CaseReport] = None
    certificate: Optional[list[list[ExactValue]]] = None
    classical: Optional[ClassicalReport] = None
    oracle: Optional[OracleReport] = None
    witnesses: Optional[WitnessReport] = None
    agreement: AgreementReport
    diagnostics: list[str] = []
    exit_code: int


class LineError(BaseModel):
    line: int
    error: str
    position: Optional[int] = None
    exit_code: int = 64


class BatchSummary(BaseModel):
    summary: dict[str, int]
    lines: int
    errors: int
    exit_code: int
