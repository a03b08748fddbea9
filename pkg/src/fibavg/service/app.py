"""HTTP service wrapping the library for multi-client use.

Run with: uvicorn fibavg.service.app:app
"""

from fastapi import FastAPI, HTTPException, Query

from .. import __version__
from ..families import family_235, family_235_grid, family_235_lucas, family_pow2, tower
from ..identities import run_identity
from ..ranks import rank_info
from ..scanner import ScanCheckpoint, is_fib_hit, is_lucas_hit, odd_prime_audit, pair_scan, scan, squarefree_audit
from ..sequences import legendre5
from ..primes import is_prime
from ..wss import wss_scan
from . import schemas

app = FastAPI(title="fibavg", version=__version__)


@app.get("/", response_model=schemas.ServiceInfo)
def service_info():
    return schemas.ServiceInfo(name="fibavg", version=__version__)


@app.get("/hit/{n}", response_model=schemas.HitResponse)
def hit(n: int, kind: schemas.Kind = Query(default="fib")):
    try:
        verdict = is_lucas_hit(n) if kind == "lucas" else is_fib_hit(n)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return schemas.HitResponse(n=n, kind=kind, hit=verdict)


@app.post("/scan", response_model=schemas.ScanResponse)
def run_scan(req: schemas.ScanRequest):
    final: dict = {}

    def keep(cp: ScanCheckpoint) -> None:
        final["cp"] = cp

    hits = list(scan(req.kind, req.lo, req.hi, checkpoint_cb=keep))
    cp = final["cp"]
    return schemas.ScanResponse(
        hits=[schemas.HitOut(n=h.n, kind=h.kind) for h in hits],
        count=len(hits),
        checkpoint=schemas.CheckpointOut(
            schema_version=cp.schema_version,
            kind=cp.kind,
            lo=cp.lo,
            hi=cp.hi,
            next_n=cp.next_n,
            hits=cp.hits,
        ),
    )


@app.post("/pairs", response_model=schemas.PairScanResponse)
def run_pair_scan(req: schemas.PairScanRequest):
    try:
        pairs = list(pair_scan(req.t, req.lo, req.hi))
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return schemas.PairScanResponse(pairs=[schemas.PairOut(n=p.n, t=p.t) for p in pairs], count=len(pairs))


@app.get("/rank/{m}", response_model=schemas.RankResponse)
def rank(m: int):
    try:
        info = rank_info(m)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return schemas.RankResponse(m=info.m, rho=info.rho, pisano=info.pisano, sigma=info.sigma)


@app.get("/legendre5/{p}", response_model=schemas.LegendreResponse)
def legendre(p: int):
    if not is_prime(p):
        raise HTTPException(status_code=422, detail=f"{p} is not prime")
    return schemas.LegendreResponse(p=p, symbol=legendre5(p))


@app.post("/family", response_model=schemas.FamilyResponse)
def family(req: schemas.FamilyRequest):
    try:
        if req.theorem == "33":
            if req.alpha_max is not None:
                indices = family_pow2(req.alpha_max)
            elif req.limit is not None:
                indices = [n for n in (3 << (a + 3) for a in range(60)) if n <= req.limit]
                indices = family_pow2(len(indices) - 1) if indices else []
            else:
                raise ValueError("theorem 33 needs alpha_max or limit")
        else:
            lucas = req.theorem == "36"
            if req.limit is not None:
                indices = family_235_grid(req.limit, lucas=lucas)
            elif None not in (req.alpha, req.beta, req.gamma):
                build = family_235_lucas if lucas else family_235
                indices = [build(req.alpha, req.beta, req.gamma)]
            else:
                raise ValueError(f"theorem {req.theorem} needs alpha/beta/gamma or limit")
    except (ValueError, OverflowError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    kind = "lucas" if req.theorem == "36" else "fib"
    return schemas.FamilyResponse(theorem=req.theorem, kind=kind, indices=indices)


@app.get("/tower", response_model=schemas.TowerResponse)
def tower_endpoint(depth: int = Query(ge=1, le=16)):
    elements = tower(depth)
    return schemas.TowerResponse(
        elements=[schemas.TowerElementOut(depth=e.depth, value=e.value) for e in elements],
        achieved_depth=len(elements),
    )


@app.post("/wss", response_model=schemas.WssResponse)
def wss(req: schemas.WssRequest):
    result = wss_scan(req.lo, req.hi, keep_records=req.emit_all)

    def out(rec):
        return schemas.WssRecordOut(p=rec.p, eps=rec.eps, residue=rec.residue, witness=rec.is_witness)

    return schemas.WssResponse(
        lo=result.lo,
        hi=result.hi,
        primes_tested=result.primes_tested,
        witnesses=[out(r) for r in result.witnesses],
        records=[out(r) for r in result.records] if result.records is not None else None,
    )


@app.post("/verify", response_model=schemas.IdentityReportOut)
def verify(req: schemas.VerifyRequest):
    try:
        report = run_identity(req.identity, req.lo, req.hi, samples=req.samples, seed=req.seed)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return schemas.IdentityReportOut(
        identity_id=report.identity_id,
        range_checked=report.range_checked,
        checked=report.checked,
        failures=report.failures,
        ok=report.ok(),
    )


@app.post("/audit/odd-primes", response_model=schemas.OddPrimeAuditResponse)
def audit_odd_primes(req: schemas.AuditRequest):
    report = odd_prime_audit(req.to)
    return schemas.OddPrimeAuditResponse(
        to=report.hi,
        primes_checked=report.primes_checked,
        violations=report.violations,
        ok=report.ok(),
    )


@app.post("/audit/squarefree", response_model=schemas.SquarefreeAuditResponse)
def audit_squarefree(req: schemas.AuditRequest):
    report = squarefree_audit(req.to)
    return schemas.SquarefreeAuditResponse(
        to=report.hi,
        odd_hits=[
            schemas.FactoredHitOut(n=n, factors=list(fac.factors), squarefree=fac.is_squarefree())
            for n, fac in report.odd_hits
        ],
        violations=report.violations,
        ok=report.ok(),
    )
