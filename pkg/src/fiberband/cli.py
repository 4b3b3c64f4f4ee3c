"""Command-line front end: simulate, plan, check, three-tone, bounds.

Outputs are plain CSV/JSON files designed to be diffable: identical
configs produce bit-identical files. Plot rendering is out of scope;
the trace files carry everything a plotting tool needs.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from importlib import resources
from pathlib import Path

import numpy as np

from .bands import make_bandset
from .config import GHZ, ExperimentConfig, load_config, parse_config, with_overrides
from .fields import parseval_residual
from .planner import (
    bose_sequence,
    densest_sidon,
    erdos_bound,
    is_energy_decoupled,
    max_sidon_table,
    next_prime_power,
    plan_channels,
    sidon_for_channels,
    spectral_filling_efficiency,
)
from .propagation import FiberParams, propagate
from .threetone import ToneState, integrate_tones


def resolve_config(name: str) -> ExperimentConfig:
    """Load a config from a path, or fall back to a bundled one by name."""
    path = Path(name)
    if path.exists():
        return load_config(path)
    stem = name if name.endswith(".cfg") else name + ".cfg"
    bundled = resources.files("fiberband").joinpath("configs", stem)
    if bundled.is_file():
        return parse_config(bundled.read_text(encoding="utf-8"))
    raise FileNotFoundError(f"no config file or bundled config named {name!r}")


def _fmt_num(x: float) -> str:
    return repr(float(x))


def write_trace_csv(path: Path, trace) -> None:
    n_ch = trace.n_channels
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["z_km", "E_total_J"]
            + [f"E_ch{i + 1}_J" for i in range(n_ch)]
            + ["E_discarded_cum_J"]
        )
        for i in range(len(trace.z)):
            writer.writerow(
                [_fmt_num(trace.z[i] / 1e3), _fmt_num(trace.total[i])]
                + [_fmt_num(v) for v in trace.per_channel[i]]
                + [_fmt_num(trace.discarded_cumulative[i])]
            )


def write_trace_json(path: Path, trace) -> None:
    n_ch = trace.n_channels
    doc = {
        "columns": ["z_km", "E_total_J"]
        + [f"E_ch{i + 1}_J" for i in range(n_ch)]
        + ["E_discarded_cum_J"],
        "rows": [
            [trace.z[i] / 1e3, trace.total[i]]
            + list(map(float, trace.per_channel[i]))
            + [float(trace.discarded_cumulative[i])]
            for i in range(len(trace.z))
        ],
    }
    path.write_text(json.dumps(doc, indent=1) + "\n", encoding="utf-8")


def run_simulation(cfg: ExperimentConfig, out_dir: Path, stem: str, fmt: str) -> dict:
    """Propagate per config; write trace and summary files; return summary."""
    cfg.validate()
    launch = cfg.launch_field()
    z_total, dz, record_every = cfg.run_lengths()
    final, trace = propagate(
        launch,
        z_total,
        dz,
        cfg.fiber(),
        cfg.filter_mode(),
        cfg.channels(),
        record_every,
    )
    loss = trace.total_loss_fraction()
    summary = {
        "total_loss_pct": 100.0 * loss,
        "per_channel_max_dev_pct": 100.0 * trace.max_channel_deviation(),
        "parseval_residual": parseval_residual(final),
        "steps": int(round(z_total / dz)),
        "seed": cfg.seed,
        "launch_energy_J": float(trace.total[0]),
        "final_energy_J": float(trace.total[-1]),
        "discarded_J": float(trace.discarded_cumulative[-1]),
    }
    out_dir.mkdir(parents=True, exist_ok=True)
    if fmt == "json":
        write_trace_json(out_dir / f"{stem}_trace.json", trace)
    else:
        write_trace_csv(out_dir / f"{stem}_trace.csv", trace)
    (out_dir / f"{stem}_summary.json").write_text(
        json.dumps(summary, indent=1, sort_keys=True) + "\n", encoding="utf-8"
    )
    return summary


def cmd_simulate(args) -> int:
    cfg = resolve_config(args.config)
    cfg = with_overrides(
        cfg,
        dz_km=args.dz_km,
        filter_spacing_km=args.filter_spacing_km,
        record_every_km=args.record_every_km,
        seed=args.seed,
    )
    stem = Path(args.config).stem
    summary = run_simulation(cfg, Path(args.out), stem, args.format)
    print(f"steps                  : {summary['steps']}")
    print(f"total loss             : {summary['total_loss_pct']:.4f} %")
    print(f"max channel deviation  : {summary['per_channel_max_dev_pct']:.4f} %")
    print(f"parseval residual      : {summary['parseval_residual']:.3e}")
    return 0


def cmd_plan(args) -> int:
    n = args.n
    if args.mode == "densest":
        seq = densest_sidon(n)
    else:
        seq = sidon_for_channels(n)
    # widths in GHz carry through; the verdict and eta are scale-free
    width = args.width_ghz
    plan = plan_channels(seq, width)
    decoupled, witness = is_energy_decoupled(plan.bandset())
    eta = spectral_filling_efficiency(plan, slot_budget=args.k)
    print(f"sequence      : {tuple(seq)}")
    print(f"channel width : {width:g} GHz")
    centers = ", ".join(f"{c:g}" for c in plan.centers())
    print(f"centers (GHz) : {centers}")
    edges = ", ".join(f"[{lo:g}, {hi:g}]" for lo, hi in plan.intervals())
    print(f"edges (GHz)   : {edges}")
    print(f"decoupled     : {decoupled}" + (f" witness {witness}" if witness else ""))
    print(f"eta           : {eta:.6f}")
    print(f"eta * N       : {eta * plan.n:.6f}")
    return 0


def cmd_check(args) -> int:
    intervals = []
    for line in Path(args.intervals).read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        lo, hi = (float(tok) for tok in line.replace(",", " ").split())
        intervals.append((lo, hi))
    make_bandset(intervals)  # validation: nonempty, disjoint
    decoupled, witness = is_energy_decoupled(intervals)
    if decoupled:
        print("energy-decoupled: yes")
        return 0
    print(f"energy-decoupled: no witness={witness[0]} vs {witness[1]}")
    return 0


def cmd_three_tone(args) -> int:
    powers = [float(x) for x in args.powers_w.split(",")]
    phases = [float(x) for x in args.phases_rad.split(",")]
    if len(powers) != 3 or len(phases) != 3:
        print("need exactly three powers and three phases", file=sys.stderr)
        return 1
    amps = [math.sqrt(p) * complex(math.cos(ph), math.sin(ph)) for p, ph in zip(powers, phases)]
    state = ToneState(amps[0], amps[1], amps[2], args.spacing_ghz * GHZ)
    params = FiberParams.from_engineering(
        0.0, args.beta2_ps2_per_km, args.gamma_per_w_km
    )
    traj = integrate_tones(state, args.z_km * 1e3, args.dz_m, params)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    path = out / "three_tone.csv"
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["z_km", "P1_W", "P2_W", "P3_W"])
        for st in traj:
            p1, p2, p3 = st.powers()
            writer.writerow([_fmt_num(st.z / 1e3)] + [_fmt_num(p) for p in (p1, p2, p3)])
    total0 = sum(traj[0].powers())
    drift = max(abs(sum(st.powers()) - total0) for st in traj) / total0
    print(f"wrote {path}")
    print(f"total-power drift: {drift:.3e} relative")
    return 0


def cmd_bounds(args) -> int:
    k_max = args.k_max
    table = max_sidon_table(k_max)
    bose_seqs = []
    q = 2
    while q <= k_max:
        bose_seqs.append(list(bose_sequence(q)))
        q = next_prime_power(q + 1)
    print(f"{'k':>4} {'N(k)':>5} {'bound':>8} {'bose_fit':>8}")
    for k in range(1, k_max + 1):
        n_k, _ = table[k - 1]
        fit = 1  # the single-element sequence (1) always fits
        for seq in bose_seqs:
            count = sum(1 for m in seq if m <= k)
            fit = max(fit, count)
        print(f"{k:>4} {n_k:>5} {erdos_bound(k):>8.3f} {fit:>8}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fiberband",
        description="NLSE band-filter simulator and decoupled-grid planner",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="propagate a configured launch field")
    sim.add_argument("--config", required=True, help="config path or bundled name")
    sim.add_argument("--out", default=".", help="output directory")
    sim.add_argument("--dz-km", type=float, default=None)
    sim.add_argument("--filter-spacing-km", type=float, default=None)
    sim.add_argument("--record-every-km", type=float, default=None)
    sim.add_argument("--seed", type=int, default=None)
    sim.add_argument("--format", choices=("csv", "json"), default="csv")
    sim.set_defaults(func=cmd_simulate)

    plan = sub.add_parser("plan", help="construct and certify a channel grid")
    plan.add_argument("--n", type=int, required=True, help="channel count")
    plan.add_argument("--width-ghz", type=float, default=1.0)
    plan.add_argument("--mode", choices=("densest", "bose"), default="densest")
    plan.add_argument("--k", type=int, default=None, help="span budget for densest")
    plan.set_defaults(func=cmd_plan)

    chk = sub.add_parser("check", help="energy-decoupling verdict for intervals")
    chk.add_argument("--intervals", required=True, help="file of 'lo hi' lines")
    chk.set_defaults(func=cmd_check)

    tt = sub.add_parser("three-tone", help="three-tone coupled-mode reference run")
    tt.add_argument("--powers-w", default="1.0,1.0,1.0")
    tt.add_argument("--phases-rad", default="0.0,0.0,0.0")
    tt.add_argument("--spacing-ghz", type=float, default=5.0)
    tt.add_argument("--z-km", type=float, default=1.0)
    tt.add_argument("--dz-m", type=float, default=1.0)
    tt.add_argument("--beta2-ps2-per-km", type=float, default=-21.667)
    tt.add_argument("--gamma-per-w-km", type=float, default=1.2578)
    tt.add_argument("--out", default=".")
    tt.set_defaults(func=cmd_three_tone)

    bnd = sub.add_parser("bounds", help="exhaustive N(k) vs counting bound table")
    bnd.add_argument("--k-max", type=int, default=30)
    bnd.set_defaults(func=cmd_bounds)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
