"""HTTP service exposing the solver and the dataset pipeline.

The ``handle_*`` functions carry the full request/response logic and are
shared by the FastAPI routes and the command-line client, so both surfaces
behave identically.
"""
from __future__ import annotations

import math

from fastapi import FastAPI, HTTPException

from . import datagen
from .dynamics import DEFAULT_INITIAL_STATE, evolve, indicators, steady_state
from .energetics import ergotropy_ratio
from .errors import InvalidParams, QbatError
from .fcs import cumulants
from .schemas import (
    CumulantsRequest,
    CumulantsResponse,
    ErgotropyRequest,
    ErgotropyResponse,
    EvolveRequest,
    EvolveResponse,
    FilterRequest,
    FilterResponse,
    IndicatorModel,
    SplitRequest,
    SplitResponse,
    StateModel,
    SteadyRequest,
    SteadyResponse,
    SweepRequest,
    SweepResponse,
)


def handle_steady(req: SteadyRequest) -> SteadyResponse:
    params = req.params.to_params()
    state = steady_state(params, req.variant)
    ind = indicators(state, params)
    return SteadyResponse(
        state=StateModel.from_state(state),
        indicators=IndicatorModel(
            e_charge=ind.e_charge,
            e_store=ind.e_store,
            e_leak=ind.e_leak,
            store_over_charge=ind.store_over_charge,
            leak_over_store=ind.leak_over_store,
            leak_over_charge=ind.leak_over_charge,
        ),
    )


def handle_evolve(req: EvolveRequest) -> EvolveResponse:
    params = req.params.to_params()
    rho0 = req.initial_state.to_state() if req.initial_state else DEFAULT_INITIAL_STATE
    traj = evolve(params, rho0, t_end=req.t_end, n_out=req.n_out, variant=req.variant)
    return EvolveResponse(
        times=[float(t) for t in traj.times],
        states=[StateModel.from_state(s) for s in traj.states],
    )


def handle_cumulants(req: CumulantsRequest) -> CumulantsResponse:
    cs = cumulants(req.params.to_params(), req.variant, h=req.h)
    return CumulantsResponse(
        j=[float(x) for x in cs.j],
        j0=[float(x) for x in cs.j0],
        C=[None if math.isnan(x) else float(x) for x in cs.C],
        h_used=cs.h_used,
        valid=list(cs.valid),
        baseline_ok=list(cs.baseline_ok),
    )


def handle_ergotropy(req: ErgotropyRequest) -> ErgotropyResponse:
    rec = ergotropy_ratio(req.params.to_params(), req.variant)
    return ErgotropyResponse(
        ergotropy=rec.ergotropy,
        baseline=rec.baseline,
        ratio=rec.ratio,
        W=rec.W,
        F=rec.F,
        Q_h=rec.Q_h,
        Q_c=rec.Q_c,
        eta=rec.eta,
    )


def handle_sweep(req: SweepRequest) -> SweepResponse:
    records = datagen.sweep(req.to_config())
    datagen.write_dataset(records, req.out)
    return SweepResponse(records=len(records), out=req.out)


def handle_filter(req: FilterRequest) -> FilterResponse:
    records = datagen.read_dataset(req.dataset)
    kept, census = datagen.filter_records(records)
    datagen.write_dataset(kept, req.out)
    return FilterResponse(
        kept=len(kept), dropped=len(records) - len(kept), census=census, out=req.out
    )


def handle_split(req: SplitRequest) -> SplitResponse:
    records = datagen.read_dataset(req.dataset)
    dev, test = datagen.group_split(records, frac=req.frac, seed=req.seed)
    datagen.write_dataset(dev, req.dev_out)
    datagen.write_dataset(test, req.test_out)
    return SplitResponse(
        dev_records=len(dev),
        test_records=len(test),
        dev_groups=len({datagen.group_key(r) for r in dev}),
        test_groups=len({datagen.group_key(r) for r in test}),
    )


def create_app() -> FastAPI:
    app = FastAPI(title="qbat", description="four-level quantum battery solver service")

    def guarded(handler, req):
        try:
            return handler(req)
        except InvalidParams as exc:
            raise HTTPException(status_code=422, detail={"error": exc.code, "detail": str(exc)})
        except QbatError as exc:
            raise HTTPException(status_code=409, detail={"error": exc.code, "detail": str(exc)})
        except FileNotFoundError as exc:
            raise HTTPException(status_code=404, detail={"error": "not_found", "detail": str(exc)})
        except ValueError as exc:
            raise HTTPException(status_code=422, detail={"error": "invalid_input", "detail": str(exc)})

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/steady", response_model=SteadyResponse)
    def steady(req: SteadyRequest):
        return guarded(handle_steady, req)

    @app.post("/evolve", response_model=EvolveResponse)
    def evolve_route(req: EvolveRequest):
        return guarded(handle_evolve, req)

    @app.post("/cumulants", response_model=CumulantsResponse)
    def cumulants_route(req: CumulantsRequest):
        return guarded(handle_cumulants, req)

    @app.post("/ergotropy", response_model=ErgotropyResponse)
    def ergotropy_route(req: ErgotropyRequest):
        return guarded(handle_ergotropy, req)

    @app.post("/sweep", response_model=SweepResponse)
    def sweep_route(req: SweepRequest):
        return guarded(handle_sweep, req)

    @app.post("/filter", response_model=FilterResponse)
    def filter_route(req: FilterRequest):
        return guarded(handle_filter, req)

    @app.post("/split", response_model=SplitResponse)
    def split_route(req: SplitRequest):
        return guarded(handle_split, req)

    return app


app = create_app()
