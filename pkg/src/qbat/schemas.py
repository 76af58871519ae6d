"""Request/response models for the HTTP service and the CLI client."""
from __future__ import annotations

from pydantic import BaseModel, Field

from .datagen import DEFAULT_RANGES, SweepConfig
from .dynamics import StateVector
from .fcs import DEFAULT_STEP
from .generator import DEFAULT_VARIANT, Variant
from .params import BatteryParams


class ParamsModel(BaseModel):
    T_c: float
    T_h: float
    T_l: float
    eps: float
    eps_b: float
    eps_a: float
    p_c: float
    p_h: float
    tau: float
    r: float = 1.0
    g: float = 1.0

    def to_params(self) -> BatteryParams:
        return BatteryParams(**self.model_dump())


class StateModel(BaseModel):
    rho11: float
    rho22: float
    rho_bb: float
    rho_aa: float
    re_rho12: float = 0.0

    def to_state(self) -> StateVector:
        return StateVector(**self.model_dump())

    @classmethod
    def from_state(cls, s: StateVector) -> "StateModel":
        return cls(
            rho11=s.rho11, rho22=s.rho22, rho_bb=s.rho_bb, rho_aa=s.rho_aa, re_rho12=s.re_rho12
        )


class IndicatorModel(BaseModel):
    e_charge: float
    e_store: float
    e_leak: float
    store_over_charge: float
    leak_over_store: float
    leak_over_charge: float


class SteadyRequest(BaseModel):
    params: ParamsModel
    variant: Variant = DEFAULT_VARIANT


class SteadyResponse(BaseModel):
    state: StateModel
    indicators: IndicatorModel


class EvolveRequest(BaseModel):
    params: ParamsModel
    initial_state: StateModel | None = None
    t_end: float = 50.0
    n_out: int = Field(default=200, ge=2)
    variant: Variant = DEFAULT_VARIANT


class EvolveResponse(BaseModel):
    times: list[float]
    states: list[StateModel]


class CumulantsRequest(BaseModel):
    params: ParamsModel
    variant: Variant = DEFAULT_VARIANT
    h: float = Field(default=DEFAULT_STEP, gt=0)


class CumulantsResponse(BaseModel):
    j: list[float]
    j0: list[float]
    C: list[float | None]
    h_used: float
    valid: list[bool]
    baseline_ok: list[bool]


class ErgotropyRequest(BaseModel):
    params: ParamsModel
    variant: Variant = DEFAULT_VARIANT


class ErgotropyResponse(BaseModel):
    ergotropy: float
    baseline: float
    ratio: float
    W: float
    F: float
    Q_h: float
    Q_c: float
    eta: float


class SweepRequest(BaseModel):
    values_per_param: int = Field(default=4, ge=1)
    seed: int = 2024
    ranges: dict[str, tuple[float, float]] = Field(default_factory=lambda: dict(DEFAULT_RANGES))
    variant: Variant = DEFAULT_VARIANT
    workers: int = Field(default=1, ge=1)
    h: float = Field(default=DEFAULT_STEP, gt=0)
    out: str

    def to_config(self) -> SweepConfig:
        return SweepConfig(
            values_per_param=self.values_per_param,
            seed=self.seed,
            ranges=dict(self.ranges),
            variant=self.variant,
            workers=self.workers,
            h=self.h,
        )


class SweepResponse(BaseModel):
    records: int
    out: str


class FilterRequest(BaseModel):
    dataset: str
    out: str


class FilterResponse(BaseModel):
    kept: int
    dropped: int
    census: dict[str, int]
    out: str


class SplitRequest(BaseModel):
    dataset: str
    dev_out: str
    test_out: str
    frac: float = Field(default=0.70, gt=0.0, lt=1.0)
    seed: int = 2024


class SplitResponse(BaseModel):
    dev_records: int
    test_records: int
    dev_groups: int
    test_groups: int


class ErrorBody(BaseModel):
    error: str
    detail: str
