"""Command-line client for the battery solver service.

Every subcommand builds the same request model the HTTP routes consume and
calls the shared handler in-process; ``qbat serve`` exposes the identical
surface over HTTP.
"""
from __future__ import annotations

import json
import sys

import click
import yaml

from .errors import QbatError
from .generator import DEFAULT_VARIANT, Variant
from .schemas import (
    CumulantsRequest,
    ErgotropyRequest,
    EvolveRequest,
    FilterRequest,
    ParamsModel,
    SplitRequest,
    StateModel,
    SteadyRequest,
    SweepRequest,
)
from .service import (
    handle_cumulants,
    handle_ergotropy,
    handle_evolve,
    handle_filter,
    handle_split,
    handle_steady,
    handle_sweep,
)

VARIANT_CHOICES = [v.value.replace("_", "-") for v in Variant]


def _variant_option(f):
    return click.option(
        "--variant",
        type=click.Choice(VARIANT_CHOICES),
        default=DEFAULT_VARIANT.value.replace("_", "-"),
        show_default=True,
        help="generator coefficient variant",
    )(f)


def _config_option(required=True):
    def deco(f):
        return click.option(
            "--config",
            "config_path",
            type=click.Path(exists=True, dir_okay=False),
            required=required,
            help="key-value configuration file",
        )(f)

    return deco


def _out_option(f):
    return click.option("--out", type=click.Path(dir_okay=False), default=None, help="output path")(f)


def _load_config(path) -> dict:
    if path is None:
        return {}
    with open(path) as fh:
        data = yaml.safe_load(fh)
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise click.ClickException(f"config file {path} must hold a key-value mapping")
    return data


def _parse_variant(name: str) -> Variant:
    return Variant(name.replace("-", "_"))


def _params_from_config(cfg: dict) -> ParamsModel:
    known = set(ParamsModel.model_fields)
    return ParamsModel(**{k: v for k, v in cfg.items() if k in known})


def _emit(model, out) -> None:
    payload = model.model_dump_json(indent=2)
    if out:
        with open(out, "w") as fh:
            fh.write(payload + "\n")
    else:
        click.echo(payload)


def _fail(exc) -> None:
    code = getattr(exc, "code", "error")
    sys.stderr.write(json.dumps({"error": code, "detail": str(exc)}) + "\n")
    sys.exit(1)


@click.group()
def main():
    """Four-level quantum battery solver and dataset pipeline."""


@main.command()
@_config_option()
@_variant_option
@_out_option
def steady(config_path, variant, out):
    """Stationary state and its charging/storage/leakage indicators."""
    cfg = _load_config(config_path)
    try:
        req = SteadyRequest(params=_params_from_config(cfg), variant=_parse_variant(variant))
        _emit(handle_steady(req), out)
    except (QbatError, ValueError) as exc:
        _fail(exc)


@main.command()
@_config_option()
@_variant_option
@click.option("--t-end", type=float, default=50.0, show_default=True)
@click.option("--n-out", type=int, default=200, show_default=True)
@_out_option
def evolve(config_path, variant, t_end, n_out, out):
    """Time evolution from an initial state (default: even ground manifold)."""
    cfg = _load_config(config_path)
    try:
        initial = cfg.get("initial_state")
        req = EvolveRequest(
            params=_params_from_config(cfg),
            initial_state=StateModel(**initial) if initial else None,
            t_end=float(cfg.get("t_end", t_end)),
            n_out=int(cfg.get("n_out", n_out)),
            variant=_parse_variant(variant),
        )
        _emit(handle_evolve(req), out)
    except (QbatError, ValueError) as exc:
        _fail(exc)


@main.command()
@_config_option()
@_variant_option
@click.option("--step", "h", type=float, default=None, help="stencil step size")
@_out_option
def cumulants(config_path, variant, h, out):
    """First four cumulants of quanta exchange plus scaled ratios."""
    cfg = _load_config(config_path)
    try:
        kwargs = {"params": _params_from_config(cfg), "variant": _parse_variant(variant)}
        if h is not None:
            kwargs["h"] = h
        _emit(handle_cumulants(CumulantsRequest(**kwargs)), out)
    except (QbatError, ValueError) as exc:
        _fail(exc)


@main.command()
@_config_option()
@_variant_option
@_out_option
def ergotropy(config_path, variant, out):
    """Steady-state ergotropy, coherence-free baseline, and thermodynamics."""
    cfg = _load_config(config_path)
    try:
        req = ErgotropyRequest(params=_params_from_config(cfg), variant=_parse_variant(variant))
        _emit(handle_ergotropy(req), out)
    except (QbatError, ValueError) as exc:
        _fail(exc)


@main.command()
@_config_option(required=False)
@_variant_option
@click.option("--seed", type=int, default=None)
@click.option("--values-per-param", type=int, default=None)
@click.option("--workers", type=int, default=None)
@click.option("--out", type=click.Path(dir_okay=False), required=True, help="dataset output path")
def sweep(config_path, variant, seed, values_per_param, workers, out):
    """Run the full parameter sweep and write the dataset file."""
    cfg = _load_config(config_path)
    try:
        known = {k: v for k, v in cfg.items() if k in SweepRequest.model_fields}
        known["out"] = out
        if "variant" in cfg:
            known["variant"] = _parse_variant(str(cfg["variant"]))
        else:
            known["variant"] = _parse_variant(variant)
        if seed is not None:
            known["seed"] = seed
        if values_per_param is not None:
            known["values_per_param"] = values_per_param
        if workers is not None:
            known["workers"] = workers
        resp = handle_sweep(SweepRequest(**known))
        _emit(resp, None)
    except (QbatError, ValueError) as exc:
        _fail(exc)


@main.command("filter")
@click.option("--dataset", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
def filter_cmd(dataset, out):
    """Drop flagged, non-finite, and coherence-free rows; print a drop census."""
    try:
        _emit(handle_filter(FilterRequest(dataset=dataset, out=out)), None)
    except (QbatError, ValueError, OSError) as exc:
        _fail(exc)


@main.command()
@click.option("--dataset", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--dev-out", type=click.Path(dir_okay=False), required=True)
@click.option("--test-out", type=click.Path(dir_okay=False), required=True)
@click.option("--frac", type=float, default=0.70, show_default=True)
@click.option("--seed", type=int, default=2024, show_default=True)
def split(dataset, dev_out, test_out, frac, seed):
    """Group-aware DEV/TEST split with zero key overlap."""
    try:
        req = SplitRequest(dataset=dataset, dev_out=dev_out, test_out=test_out, frac=frac, seed=seed)
        _emit(handle_split(req), None)
    except (QbatError, ValueError, OSError) as exc:
        _fail(exc)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("qbat.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
