"""Command-line front end for the estimation and simulation routines.

Every experiment subcommand emits CSV (stdout by default, or a file via
--output).  When writing to a file, a JSON manifest with the full
configuration, seed and a content hash of the parameters is written
beside it so the numbers can be replayed.
"""

import argparse
import csv
import hashlib
import json
import sys

from .circle import Arc
from .estimate import default_epsilon, sample_budget
from .fisher import info_curve
from .harness import (
    ExperimentConfig,
    noisy_table,
    run_trial,
    scaling_experiment,
)
from .measure import NoiseModel
from .refine import refine_arcs

TABLE1_N_TOTALS = (20, 30, 40, 50)
TABLE1_STAGES = (6, 7, 8, 9)
TABLE2_RATES = tuple(2.0**-p for p in range(4, 9))
TABLE2_STAGES = (4, 5, 6, 7, 8, 9)


def _write_csv(header, rows, output):
    if output is None:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return
    with open(output, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _write_manifest(output, command, config):
    """Drop <output>.manifest.json next to a CSV results file."""
    if output is None:
        return
    payload = {"command": command, **config}
    digest = hashlib.sha256(
        json.dumps(payload, sort_keys=True).encode()
    ).hexdigest()
    payload["content_hash"] = digest
    with open(f"{output}.manifest.json", "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _coverage_rows(reports_with_keys, key_names):
    rows = []
    for keys, report in reports_with_keys:
        rows.append(
            list(keys)
            + [
                report.trials,
                report.hits,
                report.coverage,
                report.ci_low,
                report.ci_high,
            ]
        )
    return key_names + ["trials", "hits", "coverage", "ci_low", "ci_high"], rows


def cmd_simulate(args):
    import numpy as np

    cfg = ExperimentConfig(
        stages=args.stages,
        n_total_per_stage=args.ntot,
        noise=NoiseModel(args.noise),
        trials=args.trials,
        seed=args.seed,
        theta_source="random" if args.theta == "random" else float(args.theta),
    )
    rows = []
    children = np.random.SeedSequence(cfg.seed).spawn(cfg.trials)
    for i, child in enumerate(children):
        rng = np.random.default_rng(child)
        if cfg.theta_source == "random":
            theta = float(rng.uniform())
        else:
            theta = float(cfg.theta_source)
        res = run_trial(theta, cfg, rng)
        rows.append(
            [theta, res.estimate, res.final_arc.lower, res.final_arc.width, int(res.hit)]
        )
    _write_csv(["theta", "estimate", "arc_lower", "arc_width", "hit"], rows, args.output)
    _write_manifest(
        args.output,
        "simulate",
        {
            "theta": args.theta,
            "stages": args.stages,
            "ntot": args.ntot,
            "noise": args.noise,
            "seed": args.seed,
            "trials": args.trials,
        },
    )


def cmd_table1(args):
    reports = []
    for i, n_tot in enumerate(TABLE1_N_TOTALS):
        rows = noisy_table(
            [0.0], TABLE1_STAGES, n_total_per_stage=n_tot,
            trials=args.trials, seed=args.seed + i,
        )
        for _, l, report in rows:
            reports.append(((n_tot, l), report))
    header, rows = _coverage_rows(reports, ["n_tot", "stages"])
    _write_csv(header, rows, args.output)
    _write_manifest(args.output, "table1", {"trials": args.trials, "seed": args.seed})


def cmd_table2(args):
    rows_in = noisy_table(
        TABLE2_RATES, TABLE2_STAGES, n_total_per_stage=args.ntot,
        trials=args.trials, seed=args.seed,
    )
    reports = [((r, l), report) for r, l, report in rows_in]
    header, rows = _coverage_rows(reports, ["r", "stages"])
    _write_csv(header, rows, args.output)
    _write_manifest(
        args.output, "table2",
        {"trials": args.trials, "seed": args.seed, "ntot": args.ntot},
    )


def cmd_scaling(args):
    rows_in = scaling_experiment(
        range(args.lmin, args.lmax + 1),
        trials=args.trials,
        noise=NoiseModel(args.noise),
        seed=args.seed,
    )
    rows = [
        [r.stages, r.epsilon, r.n_total_per_stage, r.channel_uses, r.mean_cost]
        for r in rows_in
    ]
    _write_csv(["stages", "epsilon", "n_tot", "channel_uses", "mean_cost"], rows, args.output)
    _write_manifest(
        args.output, "scaling",
        {
            "lmin": args.lmin, "lmax": args.lmax, "trials": args.trials,
            "noise": args.noise, "seed": args.seed,
        },
    )


def cmd_fisher(args):
    rows = [
        [p.stage, p.m, p.h_per_use, p.f_x_avg_per_use, p.f_y_avg_per_use]
        for p in info_curve(args.noise, args.kmax)
    ]
    _write_csv(
        ["k", "m", "H_per_use", "Fx_avg_per_use", "Fy_avg_per_use"], rows, args.output
    )
    _write_manifest(args.output, "fisher", {"noise": args.noise, "kmax": args.kmax})


def cmd_samplesize(args):
    eps = args.epsilon if args.epsilon is not None else default_epsilon(args.stages)
    budget = sample_budget(args.stages, eps)
    print(f"stages:                 {budget.stages}")
    print(f"epsilon:                {budget.epsilon}")
    print(f"N per basis:            {budget.n_per_basis}")
    print(f"N_tot per stage:        {budget.n_total_per_stage}")
    print(f"total channel uses n:   {budget.total_channel_uses}")


def cmd_refine(args):
    with open(args.input) as fh:
        data = json.load(fh)
    width = data["width"]
    arcs = [Arc(lower, width) for lower in data["lowers"]]
    estimate, final_arc = refine_arcs(arcs)
    print(f"estimate:        {estimate}")
    print(f"final arc lower: {final_arc.lower}")
    print(f"final arc width: {final_arc.width}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arcphase",
        description="Iterative phase estimation simulations and calculators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run the pipeline for one or many trials")
    p.add_argument("--theta", default="random", help="true angle in [0,1) or 'random'")
    p.add_argument("--stages", type=int, required=True)
    p.add_argument("--ntot", type=int, required=True, help="measurements per stage (both bases)")
    p.add_argument("--noise", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("table1", help="noiseless coverage grid (N_tot 20..50, l 6..9)")
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("table2", help="noisy coverage grid (r 2^-4..2^-8, l 4..9)")
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ntot", type=int, default=30)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("scaling", help="mean infidelity vs channel uses")
    p.add_argument("--lmin", type=int, default=3)
    p.add_argument("--lmax", type=int, required=True)
    p.add_argument("--trials", type=int, default=2_000)
    p.add_argument("--noise", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_scaling)

    p = sub.add_parser("fisher", help="per-use information vs stage index")
    p.add_argument("--noise", type=float, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_fisher)

    p = sub.add_parser("samplesize", help="Hoeffding measurement budget")
    p.add_argument("--stages", type=int, required=True)
    p.add_argument("--epsilon", type=float, default=None,
                   help="failure probability; defaults to 2^(-2*stages)")
    p.set_defaults(func=cmd_samplesize)

    p = sub.add_parser("refine", help="fold recorded stage arcs into a final arc")
    p.add_argument("--input", required=True,
                   help='JSON file: {"width": w, "lowers": [x1, x2, ...]}')
    p.set_defaults(func=cmd_refine)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    args.func(args)


if __name__ == "__main__":
    main()
