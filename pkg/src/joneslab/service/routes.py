"""HTTP endpoints: one POST per verification family plus /spectrum and /health.

Unusable parameters (bad scalars, caps exceeded, poles) come back as 422;
verification failures are ordinary 200 responses with ``pass: false``.
"""

from __future__ import annotations

from fastapi import APIRouter, HTTPException

from .. import __version__
from ..spectrum import SingularTraceError, jones_spectrum
from ..verifiers import CheckList, verify_audit, verify_bratteli, verify_casimir
from ..verifiers import verify_chebyshev, verify_laurent, verify_tl
from ..walkthrough import run_walkthrough
from .schemas import (
    AuditRequest,
    BratteliRequest,
    CasimirRequest,
    ChebyshevRequest,
    CheckRowOut,
    HealthResponse,
    LaurentRequest,
    SpectrumRequest,
    SpectrumResponse,
    TLRequest,
    VerifyResponse,
    WalkthroughRequest,
    WalkthroughResponse,
)

router = APIRouter()

PARAMETER_ERRORS = (ValueError, ZeroDivisionError, SingularTraceError)


def _checklist_response(result: CheckList) -> VerifyResponse:
    return VerifyResponse(
        kind=result.kind,
        passed=result.passed,
        checks=[
            CheckRowOut(name=r.name, passed=r.passed, detail=r.detail)
            for r in result.rows
        ],
        report=result.to_json(),
        table=result.to_table(),
    )


def _run(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except PARAMETER_ERRORS as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@router.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@router.post("/spectrum", response_model=SpectrumResponse)
def spectrum(req: SpectrumRequest) -> SpectrumResponse:
    report = _run(jones_spectrum, req.n_max, tuple(req.samples))
    return SpectrumResponse(
        passed=report.passed,
        report=report.to_json(),
        table=report.to_table(),
        csv=report.to_csv(),
    )


@router.post("/verify/tl", response_model=VerifyResponse)
def tl(req: TLRequest) -> VerifyResponse:
    return _checklist_response(_run(verify_tl, req.t, req.m, req.tol))


@router.post("/verify/laurent", response_model=VerifyResponse)
def laurent(req: LaurentRequest) -> VerifyResponse:
    return _checklist_response(_run(verify_laurent, req.depth))


@router.post("/verify/chebyshev", response_model=VerifyResponse)
def chebyshev(req: ChebyshevRequest) -> VerifyResponse:
    return _checklist_response(_run(verify_chebyshev, req.n_max, req.compose_max))


@router.post("/verify/casimir", response_model=VerifyResponse)
def casimir(req: CasimirRequest) -> VerifyResponse:
    return _checklist_response(_run(verify_casimir, req.tol, req.n_max))


@router.post("/verify/bratteli", response_model=VerifyResponse)
def bratteli(req: BratteliRequest) -> VerifyResponse:
    return _checklist_response(
        _run(verify_bratteli, req.levels, req.powers_m, req.rng_seed)
    )


@router.post("/verify/audit", response_model=VerifyResponse)
def audit(req: AuditRequest) -> VerifyResponse:
    return _checklist_response(_run(verify_audit, req.t))


@router.post("/walkthrough", response_model=WalkthroughResponse)
def walkthrough(req: WalkthroughRequest) -> WalkthroughResponse:
    report = _run(run_walkthrough, req.rng_seed, req.expect_fail)
    return WalkthroughResponse(
        passed=report.passed,
        failing_stage=report.failing_stage,
        report=report.to_json(),
        table=report.to_table(),
    )
