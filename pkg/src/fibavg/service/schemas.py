"""Request/response models for the HTTP service."""

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

# Synchronous endpoints refuse ranges wider than this; bigger scans belong
# to the CLI, which can checkpoint and resume.
MAX_SPAN = 1 << 20
MAX_MODULUS = 2**62 - 1

Kind = Literal["fib", "lucas"]


class HitResponse(BaseModel):
    n: int
    kind: Kind
    hit: bool


class ScanRequest(BaseModel):
    kind: Kind = "fib"
    lo: int = Field(ge=1, le=MAX_MODULUS)
    hi: int = Field(ge=1, le=MAX_MODULUS)

    @model_validator(mode="after")
    def _check_range(self):
        if self.lo > self.hi:
            raise ValueError("lo must not exceed hi")
        if self.hi - self.lo + 1 > MAX_SPAN:
            raise ValueError(f"range wider than {MAX_SPAN}; use the CLI for long scans")
        return self


class HitOut(BaseModel):
    n: int
    kind: Kind


class CheckpointOut(BaseModel):
    schema_version: int
    kind: Kind
    lo: int
    hi: int
    next_n: int
    hits: list[int]


class ScanResponse(BaseModel):
    hits: list[HitOut]
    count: int
    checkpoint: CheckpointOut


class PairScanRequest(BaseModel):
    t: int = Field(ge=1)
    lo: int = Field(ge=1, le=MAX_MODULUS)
    hi: int = Field(ge=1, le=MAX_MODULUS)

    @model_validator(mode="after")
    def _check_range(self):
        if self.lo > self.hi:
            raise ValueError("lo must not exceed hi")
        if self.hi - self.lo + 1 > MAX_SPAN:
            raise ValueError(f"range wider than {MAX_SPAN}; use the CLI for long scans")
        return self


class PairOut(BaseModel):
    n: int
    t: int


class PairScanResponse(BaseModel):
    pairs: list[PairOut]
    count: int


class RankResponse(BaseModel):
    m: int
    rho: int
    pisano: int
    sigma: Optional[int] = None


class LegendreResponse(BaseModel):
    p: int
    symbol: int


class FamilyRequest(BaseModel):
    theorem: Literal["33", "35", "36"]
    alpha_max: Optional[int] = Field(default=None, ge=0)
    alpha: Optional[int] = Field(default=None, ge=0)
    beta: Optional[int] = Field(default=None, ge=0)
    gamma: Optional[int] = Field(default=None, ge=0)
    limit: Optional[int] = Field(default=None, ge=1, le=10**9)


class FamilyResponse(BaseModel):
    theorem: str
    kind: Kind
    indices: list[int]


class TowerElementOut(BaseModel):
    depth: int
    value: int


class TowerResponse(BaseModel):
    elements: list[TowerElementOut]
    achieved_depth: int


class WssRequest(BaseModel):
    lo: int = Field(ge=1)
    hi: int = Field(ge=1, le=10**7)
    emit_all: bool = False

    @model_validator(mode="after")
    def _check_range(self):
        if self.lo > self.hi:
            raise ValueError("lo must not exceed hi")
        return self


class WssRecordOut(BaseModel):
    p: int
    eps: int
    residue: int
    witness: bool


class WssResponse(BaseModel):
    lo: int
    hi: int
    primes_tested: int
    witnesses: list[WssRecordOut]
    records: Optional[list[WssRecordOut]] = None


class VerifyRequest(BaseModel):
    identity: str
    lo: int
    hi: int
    samples: int = Field(default=0, ge=0, le=10**4)
    seed: int = 0

    @model_validator(mode="after")
    def _check_range(self):
        if self.lo > self.hi:
            raise ValueError("lo must not exceed hi")
        if self.hi - self.lo + 1 > 10**4:
            raise ValueError("identity ranges are capped at 10^4 per request")
        return self


class IdentityReportOut(BaseModel):
    identity_id: str
    range_checked: str
    checked: int
    failures: list[dict]
    ok: bool


class AuditRequest(BaseModel):
    to: int = Field(ge=2, le=10**6)


class OddPrimeAuditResponse(BaseModel):
    to: int
    primes_checked: int
    violations: list[int]
    ok: bool


class FactoredHitOut(BaseModel):
    n: int
    factors: list[tuple[int, int]]
    squarefree: bool


class SquarefreeAuditResponse(BaseModel):
    to: int
    odd_hits: list[FactoredHitOut]
    violations: list[int]
    ok: bool


class ServiceInfo(BaseModel):
    name: str
    version: str
