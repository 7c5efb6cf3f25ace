"""Request and response bodies for the verification service.

Scalar parameters arrive as plain numbers, ``[re, im]`` pairs, or strings
("3/4", "0.5+0.8j", "unit:12"); they are parsed into exact or complex
scalars before reaching the core routines.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, field_validator

from ..scalars import parse_scalar

ScalarIn = int | float | str | list[float]


def _parse(value):
    if isinstance(value, list):
        value = tuple(value)
    return parse_scalar(value)


class SpectrumRequest(BaseModel):
    n_max: int = Field(default=24, ge=3, le=4096)
    samples: list[float] = Field(default=[1.5, 2.0, 10.0])

    @field_validator("samples")
    @classmethod
    def _positive_samples(cls, v):
        for s in v:
            if s <= 1:
                raise ValueError(f"continuous samples need t > 1, got {s}")
        return v


class TLRequest(BaseModel):
    t: ScalarIn = 1
    m: int = Field(default=3, ge=1, le=7)
    tol: float = Field(default=1e-10, gt=0)

    @field_validator("t")
    @classmethod
    def _scalar_t(cls, v):
        return _parse(v)


class LaurentRequest(BaseModel):
    depth: int = Field(default=12, ge=1, le=64)


class ChebyshevRequest(BaseModel):
    n_max: int = Field(default=20, ge=1, le=64)
    compose_max: int = Field(default=6, ge=0, le=12)


class CasimirRequest(BaseModel):
    tol: float = Field(default=1e-10, gt=0)
    n_max: int = Field(default=24, ge=3, le=64)


class BratteliRequest(BaseModel):
    levels: int = Field(default=20, ge=1, le=64)
    powers_m: int = Field(default=4, ge=1, le=7)
    rng_seed: int = 1729


class AuditRequest(BaseModel):
    t: ScalarIn = 1

    @field_validator("t")
    @classmethod
    def _scalar_t(cls, v):
        return _parse(v)


class WalkthroughRequest(BaseModel):
    rng_seed: int = 1729
    expect_fail: Literal["audit-as-projection"] | None = None


class CheckRowOut(BaseModel):
    name: str
    passed: bool = Field(serialization_alias="pass")
    detail: str


class VerifyResponse(BaseModel):
    kind: str
    passed: bool = Field(serialization_alias="pass")
    checks: list[CheckRowOut]
    report: dict
    table: str


class SpectrumResponse(BaseModel):
    passed: bool = Field(serialization_alias="pass")
    report: dict
    table: str
    csv: str


class WalkthroughResponse(BaseModel):
    passed: bool = Field(serialization_alias="pass")
    failing_stage: str | None
    report: dict
    table: str


class HealthResponse(BaseModel):
    status: str
    version: str
