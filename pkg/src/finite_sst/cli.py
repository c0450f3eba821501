"""Command line pipelines: ``gen``, ``transform``, ``reconstruct``, ``metrics``, ``plot``.

Exit status is 0 on success, 2 for usage errors and 3 for data errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import io
from .analysis import RidgeSet, concentration, extract_ridges, ridge_error
from .signals import SIGNALS, add_noise, generate, itvps
from .stft import modified_stft, stft
from .synchrosqueeze import (
    RidgeBand,
    bound_violations,
    inst_freq_info,
    reconstruct_component,
    reconstruct_real_component,
    ridge_band,
    sst,
)
from .window import make_hann_freq_window

EXIT_USAGE = 2
EXIT_DATA = 3


class UsageError(Exception):
    pass


def _writable(path: str) -> Path:
    p = Path(path)
    parent = p.parent if str(p.parent) else Path(".")
    if not parent.is_dir() or not os.access(parent, os.W_OK):
        raise UsageError(f"cannot write {path}: directory {parent} is missing or not writable")
    return p


def _window(N: int, support: int):
    if not 1 <= support < N:
        raise UsageError(f"--support must satisfy 1 <= W < N={N}, got {support}")
    return make_hann_freq_window(N, support)


def _interior(N: int) -> slice:
    margin = N // 20
    return slice(margin, N - margin)


def _sst_pipeline(x, w):
    V = modified_stft(x, w)
    return V, sst(V, inst_freq_info(V))


def cmd_gen(args) -> None:
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    if args.noise < 0:
        raise UsageError("--noise must be non-negative")
    out = _writable(args.out)
    model_out = _writable(args.model)
    x, model = generate(args.signal, args.n)
    if args.noise > 0:
        x = add_noise(x, args.noise, args.seed)
    io.write_signal(out, x)
    io.write_model(model_out, model)


def cmd_transform(args) -> None:
    out = _writable(args.out)
    if args.kind == "itvps":
        if not args.model:
            raise UsageError("itvps needs --model")
        io.write_matrix(out, itvps(io.read_model(args.model)))
        return
    if not args.input:
        raise UsageError(f"{args.kind} needs --input")
    x = io.read_signal(args.input)
    w = _window(x.size, args.support)
    if args.kind == "stft":
        T = stft(x, w)
    elif args.kind == "modified-stft":
        T = modified_stft(x, w)
    else:
        T = _sst_pipeline(x, w)[1]
    io.write_matrix(out, T)


def cmd_reconstruct(args) -> None:
    out = _writable(args.out)
    if bool(args.input) == bool(args.matrix):
        raise UsageError("give exactly one of --input (signal CSV) or --matrix (SST CSV)")
    model = io.read_model(args.model) if args.model else None
    if args.matrix:
        S = io.read_matrix(args.matrix, kind="sst")
        if S.kind != "sst":
            raise io.DataError(f"{args.matrix}: expected a complex SST matrix")
        x = None
    else:
        x = io.read_signal(args.input)
        S = _sst_pipeline(x, _window(x.size, args.support))[1]
    N = S.N
    w = _window(N, args.support)
    if model is not None and model.N != N:
        raise io.DataError(f"model has N={model.N} but the data has N={N}")
    if args.band == -1:
        rec = reconstruct_component(S, RidgeBand.full(N), w)
        ref = x
    else:
        if args.band < 0:
            raise UsageError("--band must be >= 0, or -1 for all bins")
        if model is None:
            raise UsageError("a finite --band needs --model to locate the ridge")
        if not 0 <= args.component < model.K:
            raise UsageError(f"--component {args.component} out of range; valid range is 0..{model.K - 1}")
        band = ridge_band(model, args.component, args.band)
        if model.real_valued:
            rec = reconstruct_real_component(S, band, w)
        else:
            rec = reconstruct_component(S, band, w)
        ref = model.component_signal(args.component)
    io.write_signal(out, rec)
    if ref is not None:
        err = np.linalg.norm(rec - ref) / np.linalg.norm(ref)
        core = _interior(N)
        err_core = np.linalg.norm((rec - ref)[core]) / np.linalg.norm(ref[core])
        print(f"rel_l2_error={err:.6e} rel_l2_error_interior={err_core:.6e}", file=sys.stderr)


def metrics(x, model, support: int, band: int) -> dict:
    """Concentration, ridge accuracy and bound checks for one signal."""
    N = x.size
    if model.N != N:
        raise io.DataError(f"model has N={model.N} but the signal has N={N}")
    w = _window(N, support)
    V = modified_stft(x, w)
    omega = inst_freq_info(V)
    S = sst(V, omega)
    truth = RidgeSet.from_model(model)
    search = (0, N // 2 + 1) if model.real_valued else None
    est = extract_ridges(S, model.K, min_sep=max(1, model.d // 2), search=search)
    core = _interior(N)
    err = ridge_error(est, truth, columns=np.arange(N)[core])
    violations, checked = bound_violations(V, omega, model, w)
    return {
        "signal": model.name,
        "N": N,
        "support": support,
        "band": band,
        "interior": [core.start, core.stop],
        "concentration_stft": concentration(stft(x, w), truth, band),
        "concentration_sst": concentration(S, truth, band),
        "ridge_mean_err": [float(v) for v in err.mean],
        "ridge_max_err": [int(v) for v in err.max],
        "bound_violations": violations,
        "bound_checked": checked,
    }


def cmd_metrics(args) -> None:
    out = _writable(args.out)
    if args.band < 0:
        raise UsageError("--band must be non-negative")
    x = io.read_signal(args.input)
    model = io.read_model(args.model)
    result = metrics(x, model, args.support, args.band)
    out.write_text(json.dumps(result, indent=2, sort_keys=True) + "\n")


def cmd_plot(args) -> None:
    out = _writable(args.out)
    T = io.read_matrix(args.matrix)
    io.write_pgm(out, io.heatmap(T, log=args.log))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="finite-sst", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a test signal and its model")
    g.add_argument("--signal", required=True, choices=SIGNALS)
    g.add_argument("--n", type=int, default=200)
    g.add_argument("--noise", type=float, default=0.0, help="sup norm of added uniform noise")
    g.add_argument("--seed", type=int, default=42)
    g.add_argument("--out", default="signal.csv")
    g.add_argument("--model", default="model.json")
    g.set_defaults(func=cmd_gen)

    t = sub.add_parser("transform", help="compute a time-frequency matrix")
    t.add_argument("--kind", required=True, choices=["stft", "modified-stft", "sst", "itvps"])
    t.add_argument("--input", help="signal CSV")
    t.add_argument("--model", help="model JSON (itvps only)")
    t.add_argument("--support", type=int, default=10)
    t.add_argument("--out", required=True)
    t.set_defaults(func=cmd_transform)

    r = sub.add_parser("reconstruct", help="recover one component from its SST band")
    r.add_argument("--input", help="signal CSV (SST computed internally)")
    r.add_argument("--matrix", help="SST matrix CSV")
    r.add_argument("--model", help="model JSON locating the ridges")
    r.add_argument("--component", type=int, default=0)
    r.add_argument("--band", type=int, default=6, help="half-width in bins; -1 sums every bin")
    r.add_argument("--support", type=int, default=10)
    r.add_argument("--out", required=True)
    r.set_defaults(func=cmd_reconstruct)

    m = sub.add_parser("metrics", help="compare STFT and SST against the ideal spectrum")
    m.add_argument("--input", required=True)
    m.add_argument("--model", required=True)
    m.add_argument("--support", type=int, default=10)
    m.add_argument("--band", type=int, default=2)
    m.add_argument("--out", required=True)
    m.set_defaults(func=cmd_metrics)

    h = sub.add_parser("plot", help="render a matrix CSV as a PGM heatmap")
    h.add_argument("--matrix", required=True)
    h.add_argument("--log", action="store_true", help="use log10(1 + |T|^2)")
    h.add_argument("--out", required=True)
    h.set_defaults(func=cmd_plot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except io.DataError as exc:
        print(f"finite-sst: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    return 0


if __name__ == "__main__":
    sys.exit(main())
