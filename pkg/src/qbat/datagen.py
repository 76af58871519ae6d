"""Seeded parameter sweep into a labeled dataset file.

Each record combines the sampled battery parameters with the thermodynamic
quantities, the four scaled cumulants, and the ergotropy ratio.  Sweeps are
data-parallel over tuples with a deterministic ordered gather, so the output
bytes depend only on (seed, config).
"""
from __future__ import annotations

import csv
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields
from functools import lru_cache
from itertools import product

import numpy as np

from .dynamics import steady_state
from .energetics import BASELINE_FLOOR, ergotropy, thermo
from .errors import QbatError, SchemaMismatch, SingleGroup
from .fcs import DEFAULT_STEP, raw_cumulants
from .generator import DEFAULT_VARIANT, Variant
from .params import BatteryParams, coherence_free

# sampling intervals for the seven swept parameters; energies are built as
# eps plus two positive gaps so eps < eps_b < eps_a holds by construction
DEFAULT_RANGES: dict[str, tuple[float, float]] = {
    "T_c": (0.1, 7.0),
    "T_h": (0.1, 7.0),
    "T_l": (0.1, 7.0),
    "tau": (0.01, 2.0),
    "p_c": (0.1, 1.0),
    "p_h": (0.1, 1.0),
    "eps": (0.01, 2.0),
    "delta_1": (0.01, 2.0),
    "delta_2": (0.01, 2.0),
}

COLUMNS = (
    "T_c", "T_h", "T_l", "tau", "p_c", "p_h", "eps", "eps_b", "eps_a",
    "F", "Q_c", "eta", "C1", "C2", "C3", "C4", "Q_h", "W",
    "ratio", "group_id", "flags",
)

FLAG_OK = "ok"
DEV_FRACTION = 0.70


@dataclass(frozen=True)
class SweepConfig:
    """Everything that determines a sweep: sampling, variant, parallelism."""

    values_per_param: int = 4
    seed: int = 2024
    ranges: dict[str, tuple[float, float]] = field(default_factory=lambda: dict(DEFAULT_RANGES))
    variant: Variant = DEFAULT_VARIANT
    workers: int = 1
    h: float = DEFAULT_STEP


@dataclass(frozen=True)
class DatasetRecord:
    """One row of the dataset; float fields may carry NaN when flagged."""

    T_c: float
    T_h: float
    T_l: float
    tau: float
    p_c: float
    p_h: float
    eps: float
    eps_b: float
    eps_a: float
    F: float
    Q_c: float
    eta: float
    C1: float
    C2: float
    C3: float
    C4: float
    Q_h: float
    W: float
    ratio: float
    group_id: str
    flags: str


def group_key(rec: DatasetRecord) -> tuple[float, ...]:
    """The exact configuration key used for leakage-free splitting.

    Energies are deliberately excluded: records that differ only in the
    energy triplet must land on the same side of any split.
    """
    return (rec.p_h, rec.T_c, rec.T_h, rec.T_l, rec.tau, rec.p_c)


def _group_id(params: BatteryParams) -> str:
    return "|".join(
        repr(x) for x in (params.p_h, params.T_c, params.T_h, params.T_l, params.tau, params.p_c)
    )


def sample_parameters(config: SweepConfig) -> list[BatteryParams]:
    """Deterministic parameter grid of exactly values_per_param^7 tuples.

    One independent value set is drawn per parameter, with the three energy
    values drawn as (eps, gap, gap) triplets; the grid is the product of the
    six scalar sets with the energy-triplet set.
    """
    v = config.values_per_param
    if v < 1:
        raise ValueError("values_per_param must be >= 1")
    rng = np.random.default_rng(config.seed)
    draws = {}
    for name in ("T_c", "T_h", "T_l", "tau", "p_c", "p_h", "eps", "delta_1", "delta_2"):
        lo, hi = config.ranges[name]
        draws[name] = rng.uniform(lo, hi, size=v)
    triplets = [
        (e, e + d1, e + d1 + d2)
        for e, d1, d2 in zip(draws["eps"], draws["delta_1"], draws["delta_2"])
    ]
    grid = []
    for T_c, T_h, T_l, tau, p_c, p_h, (eps, eps_b, eps_a) in product(
        draws["T_c"], draws["T_h"], draws["T_l"], draws["tau"], draws["p_c"], draws["p_h"], triplets
    ):
        grid.append(
            BatteryParams(
                T_c=float(T_c), T_h=float(T_h), T_l=float(T_l),
                eps=float(eps), eps_b=float(eps_b), eps_a=float(eps_a),
                p_c=float(p_c), p_h=float(p_h), tau=float(tau),
            )
        )
    return grid


# the baselines depend only on temperatures and energies, so each cached
# entry serves every (tau, p_c, p_h) combination sharing them
@lru_cache(maxsize=4096)
def _baseline_cumulants(base: BatteryParams, variant: Variant, h: float):
    return raw_cumulants(base, variant, h)


@lru_cache(maxsize=4096)
def _baseline_ergotropy(base: BatteryParams, variant: Variant) -> float:
    return ergotropy(steady_state(base, variant), (base.eps, base.eps, base.eps_b, base.eps_a))


def compute_record(
    params: BatteryParams, variant: Variant = DEFAULT_VARIANT, h: float = DEFAULT_STEP
) -> DatasetRecord:
    """All derived quantities for one tuple; failures become flags, not raises."""
    flags: list[str] = []
    nan = float("nan")
    F = Q_c = Q_h = W = eta = nan
    C = [nan] * 4
    ratio = nan
    try:
        W, F, Q_h, Q_c, eta = thermo(params)
    except QbatError as exc:
        flags.append(exc.code)
    base = coherence_free(params)
    try:
        j0, j0_valid = _baseline_cumulants(base, variant, h)
        j, j_valid = raw_cumulants(params, variant, h)
        for i in range(4):
            if not (j_valid[i] and j0_valid[i]):
                flags.append(f"cumulant_{i + 1}_unstable")
            elif abs(j0[i]) < BASELINE_FLOOR:
                flags.append(f"baseline_{i + 1}_zero")
            else:
                C[i] = float(j[i] / j0[i])
    except QbatError as exc:
        flags.append(exc.code)
    try:
        E0 = _baseline_ergotropy(base, variant)
        E = ergotropy(
            steady_state(params, variant), (params.eps, params.eps, params.eps_b, params.eps_a)
        )
        if abs(E0) <= BASELINE_FLOOR:
            flags.append("baseline_ergotropy_zero")
        else:
            ratio = E / E0
    except QbatError as exc:
        flags.append(exc.code)
    return DatasetRecord(
        T_c=params.T_c, T_h=params.T_h, T_l=params.T_l, tau=params.tau,
        p_c=params.p_c, p_h=params.p_h,
        eps=params.eps, eps_b=params.eps_b, eps_a=params.eps_a,
        F=F, Q_c=Q_c, eta=eta, C1=C[0], C2=C[1], C3=C[2], C4=C[3],
        Q_h=Q_h, W=W, ratio=ratio,
        group_id=_group_id(params), flags=";".join(flags) if flags else FLAG_OK,
    )


def _worker(task):
    params, variant, h = task
    return compute_record(params, variant, h)


def sweep(config: SweepConfig) -> list[DatasetRecord]:
    """One DatasetRecord per grid tuple, in grid order regardless of workers."""
    grid = sample_parameters(config)
    tasks = [(p, config.variant, config.h) for p in grid]
    if config.workers <= 1:
        return [compute_record(*t) for t in tasks]
    with ProcessPoolExecutor(max_workers=config.workers) as pool:
        return list(pool.map(_worker, tasks, chunksize=64))


def _is_degenerate(rec: DatasetRecord) -> bool:
    return rec.p_c == 0.0 and rec.p_h == 0.0 and rec.tau == 0.0


def filter_records(
    records: list[DatasetRecord],
) -> tuple[list[DatasetRecord], dict[str, int]]:
    """Drop unusable rows; returns (retained records, drop-reason census).

    A row is dropped when any stored number is non-finite, any cumulant or
    baseline flag is set, or the tuple carries no coherence channel at all
    (p_c = p_h = tau = 0, where quantum effects vanish by construction).
    """
    kept: list[DatasetRecord] = []
    census: dict[str, int] = {}

    def drop(reason):
        census[reason] = census.get(reason, 0) + 1

    numeric = [f.name for f in fields(DatasetRecord) if f.type == "float"]
    for rec in records:
        if _is_degenerate(rec):
            drop("degenerate")
        elif rec.flags != FLAG_OK:
            drop(rec.flags.split(";")[0])
        elif any(not math.isfinite(getattr(rec, name)) for name in numeric):
            drop("non-finite")
        else:
            kept.append(rec)
    return kept, census


def group_split(
    records: list[DatasetRecord], frac: float = DEV_FRACTION, seed: int = 2024
) -> tuple[list[DatasetRecord], list[DatasetRecord]]:
    """Leakage-free DEV/TEST partition at group granularity.

    Groups are shuffled under the seed and assigned to DEV until its record
    count reaches ``frac`` of the total; every record of a group lands on
    exactly one side.
    """
    if not records:
        raise ValueError("cannot split an empty dataset")
    keys: list[tuple[float, ...]] = []
    seen = set()
    for rec in records:
        k = group_key(rec)
        if k not in seen:
            seen.add(k)
            keys.append(k)
    if len(keys) < 2:
        raise SingleGroup("group-aware split needs at least two distinct group keys")
    rng = np.random.default_rng(seed)
    order = rng.permutation(len(keys))
    counts = {k: 0 for k in keys}
    for rec in records:
        counts[group_key(rec)] += 1
    target = frac * len(records)
    dev_keys = set()
    dev_count = 0
    for idx in order:
        if dev_count >= target:
            break
        dev_keys.add(keys[idx])
        dev_count += counts[keys[idx]]
    if len(dev_keys) == len(keys):  # TEST must stay non-empty
        dev_keys.discard(keys[order[-1]])
    dev = [r for r in records if group_key(r) in dev_keys]
    test = [r for r in records if group_key(r) not in dev_keys]
    return dev, test


def _format_cell(value) -> str:
    # repr of a builtin float is the shortest exact round-trip form
    return repr(float(value)) if isinstance(value, float) else str(value)


def write_dataset(records: list[DatasetRecord], path) -> None:
    """Write the fixed-column dataset file; floats keep full round-trip precision."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(COLUMNS)
        for rec in records:
            writer.writerow([_format_cell(getattr(rec, name)) for name in COLUMNS])


def read_dataset(path) -> list[DatasetRecord]:
    """Read a dataset file back into records, value-exact."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise SchemaMismatch("empty file, expected a header row")
        missing = [c for c in COLUMNS if c not in header]
        if missing or tuple(header) != COLUMNS:
            detail = f"missing columns: {', '.join(missing)}" if missing else "column order differs"
            raise SchemaMismatch(f"unexpected header ({detail})")
        records = []
        for row in reader:
            if len(row) != len(COLUMNS):
                raise SchemaMismatch(f"row has {len(row)} cells, expected {len(COLUMNS)}")
            vals = dict(zip(COLUMNS, row))
            kwargs = {
                name: (vals[name] if name in ("group_id", "flags") else float(vals[name]))
                for name in COLUMNS
            }
            records.append(DatasetRecord(**kwargs))
    return records


def records_equal(a: DatasetRecord, b: DatasetRecord) -> bool:
    """Fieldwise equality where NaN compares equal to NaN."""
    for f in fields(DatasetRecord):
        x, y = getattr(a, f.name), getattr(b, f.name)
        if isinstance(x, float) and isinstance(y, float):
            if not (x == y or (math.isnan(x) and math.isnan(y))):
                return False
        elif x != y:
            return False
    return True
