"""HTTP service wrapping the search library.

Every endpoint validates its request model, runs the corresponding search
to completion, and returns the canonical report bytes produced by the
reporting module, so body bytes match the CLI exactly. The exit-code
classification travels in the X-Exit-Code header; bodies stay pristine.
"""

from __future__ import annotations

import time
from typing import Literal

from fastapi import Depends, FastAPI, Query, Request, Response
from pydantic import BaseModel, Field, field_validator

from . import arith, density, experiments, powers, ramsey, schur, suite
from .arith import MAX_BASE_PRIMES, MAX_EXPONENT, MAX_LIMIT, PrimeBase
from .errors import DomainError, RecheckError, UsageError
from .experiments import ExperimentReport
from .reporting import (
    EXIT_INTERNAL,
    canonical_json,
    emit_report,
    exit_code_for,
    TOOL_VERSION,
)

_MEDIA = {"json": "application/json", "csv": "text/csv", "text": "text/plain"}

FormatName = Literal["json", "csv", "text"]


class PrimesMixin(BaseModel):
    primes: list[int] = Field(default=[2, 3, 5], min_length=1, max_length=MAX_BASE_PRIMES)

    @field_validator("primes")
    @classmethod
    def _primes_valid(cls, primes: list[int]) -> list[int]:
        if any(b <= a for a, b in zip(primes, primes[1:])):
            raise ValueError("primes must be strictly ascending")
        for p in primes:
            if not arith.is_prime(p):
                raise ValueError(f"{p} is not prime")
        return primes

    def base(self) -> PrimeBase:
        return PrimeBase(tuple(self.primes))


class ColorRequest(PrimesMixin):
    exponent: int = Field(2, ge=1, le=MAX_EXPONENT)
    values: list[int] = Field(min_length=1)


class SmoothRequest(PrimesMixin):
    limit: int = Field(100, ge=1, le=MAX_LIMIT)


class SchurSearchRequest(PrimesMixin):
    exponent: int = Field(2, ge=1, le=MAX_EXPONENT)
    limit: int = Field(100_000, ge=1, le=MAX_LIMIT)


class SchurNumberRequest(BaseModel):
    colors: int = Field(ge=1, le=4)
    budget_seconds: float | None = Field(None, gt=0)
    budget_nodes: int | None = Field(None, gt=0)


class SchurCountRequest(SchurSearchRequest):
    pass


class RamseyReduceRequest(BaseModel):
    colors: int = Field(2, ge=1, le=3)
    limit: int = Field(16, ge=1, le=MAX_LIMIT)
    seed: int = 0


class K2Request(BaseModel):
    colors: int = Field(2, ge=1)
    limit: int = Field(20, ge=2, le=MAX_LIMIT)
    witness_size: int = Field(4, ge=1)
    seed: int = 0


class OracleRequest(BaseModel):
    exponent: int = Field(2, ge=1, le=MAX_EXPONENT)
    bound: int = Field(100, ge=1, le=MAX_LIMIT)


class ApRequest(OracleRequest):
    length: int = Field(3, ge=3)


class GapsRequest(BaseModel):
    exponent: int = Field(2, ge=2, le=MAX_EXPONENT)
    bound: int = Field(10_000, ge=1, le=MAX_LIMIT)
    difference: int | None = Field(None, ge=1)


class DensityRequest(PrimesMixin):
    exponent: int = Field(2, ge=1, le=MAX_EXPONENT)
    limits: list[int] = Field(default=[100, 1000, 10_000, 100_000, 1_000_000], min_length=1)

    @field_validator("limits")
    @classmethod
    def _limits_valid(cls, limits: list[int]) -> list[int]:
        if any(not 1 <= v <= MAX_LIMIT for v in limits):
            raise ValueError("limits entries must be in [1, 2**40]")
        return limits


class FolkmanRequest(PrimesMixin):
    exponent: int = Field(2, ge=1, le=MAX_EXPONENT)
    limit: int = Field(100_000, ge=1, le=MAX_LIMIT)
    set_size: int = Field(2, ge=2, le=5)


class TheoremRequest(PrimesMixin):
    exponent: int = Field(2, ge=1, le=MAX_EXPONENT)
    limit: int = Field(100_000, ge=1, le=MAX_LIMIT)
    set_size: int = Field(2, ge=2, le=5)
    witness_size: int = Field(4, ge=1)


class SuiteRequest(BaseModel):
    seed: int = 0
    threads: int = Field(1, ge=1)


def _respond(report: ExperimentReport, fmt: str, timing: bool) -> Response:
    return Response(
        content=emit_report(report, fmt, timing=timing),
        media_type=_MEDIA[fmt],
        headers={"X-Exit-Code": str(exit_code_for(report))},
    )


def _simple_report(theorem: str, params: dict, stats: dict, wall_ms: float,
                   witnesses: list | None = None, seed: int = 0,
                   outcome: str = "completed") -> ExperimentReport:
    return ExperimentReport(
        theorem=theorem,
        params=params,
        outcome=outcome,
        witnesses=witnesses or [],
        stats=stats,
        wall_ms=wall_ms,
        seed=seed,
    )


def create_app() -> FastAPI:
    app = FastAPI(title="smoothworld", version=TOOL_VERSION)

    def format_query(fmt: FormatName = Query("json"), timing: bool = Query(False)):
        return fmt, timing

    @app.exception_handler(UsageError)
    @app.exception_handler(DomainError)
    async def _usage_handler(_req: Request, exc: Exception):
        return Response(
            content=canonical_json({"error": str(exc)}) + "\n",
            status_code=422,
            media_type="application/json",
            headers={"X-Exit-Code": "64"},
        )

    @app.exception_handler(RecheckError)
    async def _recheck_handler(_req: Request, exc: RecheckError):
        return Response(
            content=canonical_json({"error": str(exc)}) + "\n",
            status_code=500,
            media_type="application/json",
            headers={"X-Exit-Code": str(EXIT_INTERNAL)},
        )

    @app.get("/healthz")
    def healthz():
        return {"status": "ok"}

    @app.get("/v1/version")
    def version():
        return {"version": TOOL_VERSION}

    @app.post("/v1/color")
    def color(req: ColorRequest, fmt_timing=Depends(format_query)):
        fmt, timing = fmt_timing
        t0 = time.perf_counter()
        base = req.base()
        rows = []
        for v in req.values:
            c = arith.color_of(v, base, req.exponent)
            rows.append(
                {
                    "value": v,
                    "smooth": c.is_smooth,
                    "residues": list(c.residues) if c.is_smooth else None,
                    "palette_index": arith.palette_index(c, base),
                }
            )
        report = _simple_report(
            "COLOR",
            {"primes": req.primes, "exponent": req.exponent},
            {"palette": arith.palette_size(base, req.exponent), "colors": rows},
            (time.perf_counter() - t0) * 1000.0,
        )
        return _respond(report, fmt, timing)

    @app.post("/v1/smooth")
    def smooth(req: SmoothRequest, fmt_timing=Depends(format_query)):
        fmt, timing = fmt_timing
        t0 = time.perf_counter()
        values = arith.enumerate_smooth(req.base(), req.limit)
        report = _simple_report(
            "SMOOTH",
            {"primes": req.primes, "limit": req.limit},
            {"count": len(values), "values": values},
            (time.perf_counter() - t0) * 1000.0,
        )
        return _respond(report, fmt, timing)

    @app.post("/v1/schur/search")
    def schur_search(req: SchurSearchRequest, fmt_timing=Depends(format_query)):
        fmt, timing = fmt_timing
        report = experiments.run_theorem1(req.base(), req.exponent, req.limit)
        return _respond(report, fmt, timing)

    @app.post("/v1/schur/number")
    def schur_number_ep(req: SchurNumberRequest, fmt_timing=Depends(format_query)):
        fmt, timing = fmt_timing
        t0 = time.perf_counter()
        cert = schur.schur_number(req.colors, req.budget_seconds, req.budget_nodes)
        if not cert.rechecks():
            raise RecheckError("certificate failed recheck")
        report = _simple_report(
            "SCHUR_NUMBER",
            {"colors": req.colors},
            {
                "schur_number": cert.schur_number,
                "n_max": cert.n_max,
                "exhaustive": cert.exhaustive,
                "nodes": cert.nodes,
                "factorial_e_bound": schur.factorial_e_bound(req.colors),
                "witness_classes": cert.witness.classes(),
            },
            (time.perf_counter() - t0) * 1000.0,
            witnesses=[list(cert.witness.assignment)],
        )
        return _respond(report, fmt, timing)

    @app.post("/v1/schur/count")
    def schur_count(req: SchurCountRequest, fmt_timing=Depends(format_query)):
        fmt, timing = fmt_timing
        t0 = time.perf_counter()
        base = req.base()
        scan = schur.count_smooth_monochromatic_triples(base, req.exponent, req.limit)
        report = _simple_report(
            "SCHUR_COUNT",
            {"primes": req.primes, "exponent": req.exponent, "limit": req.limit},
            {
                "pairs_examined": scan.pairs_examined,
                "triples_total": scan.triples_total,
                "triples_distinct": scan.triples_distinct,
                "nonsmooth_sum_fraction": round(scan.nonsmooth_sum_fraction, 6),
            },
            (time.perf_counter() - t0) * 1000.0,
        )
        return _respond(report, fmt, timing)

    @app.post("/v1/ramsey/reduce")
    def ramsey_reduce(req: RamseyReduceRequest, fmt_timing=Depends(format_query)):
        fmt, timing = fmt_timing
        t0 = time.perf_counter()
        needed = ramsey.TRIANGLE_FORCING_SIZE[req.colors] - 1
        if req.limit < needed:
            raise UsageError(f"limit must be at least {needed} for {req.colors} colors")
        coloring = schur.random_coloring(req.limit, req.colors, req.seed)
        triple = ramsey.verify_ramsey_333_reduction(coloring, req.colors)
        report = _simple_report(
            "RAMSEY_REDUCE",
            {"colors": req.colors, "limit": req.limit},
            {"color_of_witness": triple.color},
            (time.perf_counter() - t0) * 1000.0,
            witnesses=[[triple.a, triple.b, triple.c]],
            seed=req.seed,
            outcome="witness_found",
        )
        return _respond(report, fmt, timing)

    @app.post("/v1/ramsey/k2")
    def ramsey_k2(req: K2Request, fmt_timing=Depends(format_query)):
        fmt, timing = fmt_timing
        t0 = time.perf_counter()
        from .oracles import random_pair_rule

        if req.limit < req.colors + 2:
            raise UsageError(f"limit must be at least {req.colors + 2}")
        rule = random_pair_rule(req.colors, req.seed)
        universe = list(range(1, req.limit + 1))
        witness = ramsey.find_k2w(universe, rule, req.colors, req.witness_size)
        stats = {
            "guaranteed_universe_size": ramsey.guaranteed_universe_size(
                req.colors, req.witness_size
            ),
        }
        witnesses = []
        outcome = "escape"
        if witness is not None:
            witnesses = [list(witness.anchors), list(witness.partners)]
            stats["witness_color"] = witness.color
            outcome = "witness_found"
        else:
            stats["escape"] = "witness_class_below_target"
        report = _simple_report(
            "K2W",
            {"colors": req.colors, "limit": req.limit, "witness_size": req.witness_size},
            stats,
            (time.perf_counter() - t0) * 1000.0,
            witnesses=witnesses,
            seed=req.seed,
            outcome=outcome,
        )
        return _respond(report, fmt, timing)

    @app.post("/v1/oracle/flt")
    def oracle_flt(req: OracleRequest, fmt_timing=Depends(format_query)):
        fmt, timing = fmt_timing
        t0 = time.perf_counter()
        found = powers.flt_check(req.exponent, req.bound)
        for w in found:
            if not powers.PowerSolution("FLT", req.exponent, w, req.bound).rechecks():
                raise RecheckError(f"FLT witness {w} failed recheck")
        report = _simple_report(
            "FLT_ORACLE",
            {"exponent": req.exponent, "bound": req.bound},
            {"count": len(found)},
            (time.perf_counter() - t0) * 1000.0,
            witnesses=[list(w) for w in found],
            outcome="witness_found" if found else "absence_certified",
        )
        return _respond(report, fmt, timing)

    @app.post("/v1/oracle/dm")
    def oracle_dm(req: OracleRequest, fmt_timing=Depends(format_query)):
        fmt, timing = fmt_timing
        t0 = time.perf_counter()
        found = powers.dm_check(req.exponent, req.bound)
        for w in found:
            if not powers.PowerSolution("DM", req.exponent, w, req.bound).rechecks():
                raise RecheckError(f"DM witness {w} failed recheck")
        report = _simple_report(
            "DM_ORACLE",
            {"exponent": req.exponent, "bound": req.bound},
            {"count": len(found)},
            (time.perf_counter() - t0) * 1000.0,
            witnesses=[list(w) for w in found],
            outcome="witness_found" if found else "absence_certified",
        )
        return _respond(report, fmt, timing)

    @app.post("/v1/oracle/ap")
    def oracle_ap(req: ApRequest, fmt_timing=Depends(format_query)):
        fmt, timing = fmt_timing
        t0 = time.perf_counter()
        found = powers.ap_in_powers(req.exponent, req.length, req.bound)
        for w in found:
            if not powers.PowerSolution("AP", req.exponent, w, req.bound).rechecks():
                raise RecheckError(f"AP witness {w} failed recheck")
        report = _simple_report(
            "AP_ORACLE",
            {"exponent": req.exponent, "length": req.length, "bound": req.bound},
            {"count": len(found)},
            (time.perf_counter() - t0) * 1000.0,
            witnesses=[list(w) for w in found],
            outcome="witness_found" if found else "absence_certified",
        )
        return _respond(report, fmt, timing)

    @app.post("/v1/oracle/gaps")
    def oracle_gaps(req: GapsRequest, fmt_timing=Depends(format_query)):
        fmt, timing = fmt_timing
        t0 = time.perf_counter()
        counterexample = powers.power_gap_check(req.exponent, req.bound)
        if counterexample is not None:
            raise RecheckError(f"power gap inequality failed at z={counterexample}")
        stats: dict = {"z_max": req.bound, "holds": True}
        params = {"exponent": req.exponent, "bound": req.bound}
        if req.difference is not None:
            pairs = powers.fixed_difference_pairs(req.exponent, req.difference)
            stats["fixed_difference_pairs"] = [list(p) for p in pairs]
            params["difference"] = req.difference
        report = _simple_report(
            "POWER_GAPS", params, stats, (time.perf_counter() - t0) * 1000.0
        )
        return _respond(report, fmt, timing)

    @app.post("/v1/density")
    def density_ep(req: DensityRequest, fmt_timing=Depends(format_query)):
        fmt, timing = fmt_timing
        t0 = time.perf_counter()
        table = density.density_report(req.base(), req.exponent, list(req.limits))
        report = _simple_report(
            "DENSITY",
            {"primes": req.primes, "exponent": req.exponent, "limits": sorted(req.limits)},
            {
                "rows": [row.to_dict() for row in table.rows],
                "first_crossover": table.first_crossover,
                "extrapolation_note": (
                    "crossover compares the constant-density extrapolation "
                    "delta*N against the exact count floor(N**(1/n)) of all "
                    "n-th powers; it is a what-if quantity, not a theorem"
                ),
                "csv": table.to_csv(),
            },
            (time.perf_counter() - t0) * 1000.0,
        )
        return _respond(report, fmt, timing)

    @app.post("/v1/folkman")
    def folkman_ep(req: FolkmanRequest, fmt_timing=Depends(format_query)):
        fmt, timing = fmt_timing
        report = experiments.run_theorem5(req.base(), req.exponent, req.limit, req.set_size)
        report.theorem = "FOLKMAN"
        return _respond(report, fmt, timing)

    @app.post("/v1/theorem1")
    def theorem1(req: TheoremRequest, fmt_timing=Depends(format_query)):
        fmt, timing = fmt_timing
        report = experiments.run_theorem1(req.base(), req.exponent, req.limit)
        return _respond(report, fmt, timing)

    @app.post("/v1/theorem3")
    def theorem3(req: TheoremRequest, fmt_timing=Depends(format_query)):
        fmt, timing = fmt_timing
        report = experiments.run_theorem3(req.base(), req.exponent, req.limit)
        return _respond(report, fmt, timing)

    @app.post("/v1/theorem5")
    def theorem5(req: TheoremRequest, fmt_timing=Depends(format_query)):
        fmt, timing = fmt_timing
        report = experiments.run_theorem5(req.base(), req.exponent, req.limit, req.set_size)
        return _respond(report, fmt, timing)

    @app.post("/v1/theorem8")
    def theorem8(req: TheoremRequest, fmt_timing=Depends(format_query)):
        fmt, timing = fmt_timing
        report = experiments.run_theorem8(req.base(), req.exponent, req.limit, req.witness_size)
        return _respond(report, fmt, timing)

    @app.post("/v1/suite")
    def suite_ep(req: SuiteRequest, fmt_timing=Depends(format_query)):
        fmt, timing = fmt_timing
        report = suite.run_suite(seed=req.seed, threads=req.threads)
        return _respond(report, fmt, timing)

    return app


app = create_app()
