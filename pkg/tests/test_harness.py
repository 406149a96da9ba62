import json
import math

import numpy as np
import pytest

from arcphase import (
    CoverageReport,
    ExperimentConfig,
    NoiseModel,
    circ_dist,
    coverage_experiment,
    fidelity_cost,
    noisy_table,
    run_trial,
    scaling_experiment,
)
from arcphase.cli import main


def test_config_validation():
    with pytest.raises(ValueError):
        ExperimentConfig(stages=0, n_total_per_stage=30)
    with pytest.raises(ValueError):
        ExperimentConfig(stages=3, n_total_per_stage=31)
    with pytest.raises(ValueError):
        ExperimentConfig(stages=3, n_total_per_stage=30, trials=0)
    assert ExperimentConfig(stages=3, n_total_per_stage=30).n_per_basis == 15


def test_fidelity_cost_examples():
    assert fidelity_cost(0.3, 0.3) == 0.0
    assert fidelity_cost(0.75, 0.25) == pytest.approx(1.0)  # antipodal worst case
    assert fidelity_cost(0.3 + 1 / (2**3 * 3), 0.3) == pytest.approx(
        math.sin(math.pi / 24) ** 2
    )
    # invariant under whole turns of either argument
    assert fidelity_cost(1.3, 0.1) == pytest.approx(fidelity_cost(0.3, 0.1))


def test_run_trial_huge_budget_pins_theta():
    cfg = ExperimentConfig(stages=3, n_total_per_stage=2 * 10**5, trials=1, seed=5)
    res = run_trial(0.0, cfg, np.random.default_rng(5))
    assert res.hit
    assert circ_dist(res.estimate, 0.0) <= 1 / 24


def test_run_trial_single_stage_concentration():
    cfg = ExperimentConfig(stages=1, n_total_per_stage=2 * 10**5, trials=1, seed=6)
    for theta in (0.11, 0.52, 0.93):
        res = run_trial(theta, cfg, np.random.default_rng(6))
        assert circ_dist(res.estimate, theta) <= 1e-2


def test_run_trial_deterministic_given_seed():
    cfg = ExperimentConfig(stages=6, n_total_per_stage=30, trials=1, seed=0)
    a = run_trial(0.3, cfg, np.random.default_rng(77))
    b = run_trial(0.3, cfg, np.random.default_rng(77))
    assert a == b


def test_hit_equals_midpoint_distance_criterion():
    cfg = ExperimentConfig(stages=5, n_total_per_stage=20, trials=1, seed=0)
    half_width = 1 / (2**5 * 3)
    for seed in range(200):
        rng = np.random.default_rng(seed)
        theta = float(rng.uniform())
        res = run_trial(theta, cfg, rng)
        assert res.hit == (circ_dist(res.estimate, theta) <= half_width)


def test_coverage_report_interval():
    rep = CoverageReport(trials=100_000, hits=99_993, arc_length=1 / 192)
    assert rep.coverage == pytest.approx(0.99993)
    expected = 1.96 * math.sqrt(0.99993 * (1 - 0.99993) / 100_000)
    assert rep.ci_half_width == pytest.approx(expected)
    assert rep.ci_high <= 1.0
    rep = CoverageReport(trials=10, hits=10, arc_length=0.1)
    assert rep.ci_low == 1.0 and rep.ci_high == 1.0


def test_coverage_experiment_reproducible():
    cfg = ExperimentConfig(stages=4, n_total_per_stage=20, trials=300, seed=9)
    assert coverage_experiment(cfg) == coverage_experiment(cfg)


def test_coverage_experiment_fixed_and_grid_sources():
    cfg = ExperimentConfig(
        stages=3, n_total_per_stage=40, trials=200, seed=1, theta_source=0.37
    )
    rep = coverage_experiment(cfg)
    assert rep.trials == 200 and rep.coverage > 0.9
    cfg = ExperimentConfig(
        stages=3, n_total_per_stage=40, trials=200, seed=1, theta_source="grid"
    )
    rep = coverage_experiment(cfg)
    assert rep.arc_length == pytest.approx((1 / 3) / 4)


def test_trial_variance_matches_binomial():
    # repeated experiments should scatter like independent binomials
    cfg_base = dict(stages=3, n_total_per_stage=16, trials=400)
    coverages = []
    for seed in range(30):
        rep = coverage_experiment(ExperimentConfig(seed=seed, **cfg_base))
        coverages.append(rep.coverage)
    p = float(np.mean(coverages))
    observed_var = float(np.var(coverages, ddof=1))
    predicted_var = p * (1 - p) / cfg_base["trials"]
    assert observed_var <= 2 * predicted_var
    assert observed_var >= predicted_var / 2


def test_noisy_table_grid_and_reproducibility():
    rows = noisy_table([2**-4, 2**-5], [4, 5], trials=100, seed=21)
    assert [(r, l) for r, l, _ in rows] == [
        (2**-4, 4), (2**-4, 5), (2**-5, 4), (2**-5, 5),
    ]
    rows2 = noisy_table([2**-4, 2**-5], [4, 5], trials=100, seed=21)
    assert rows == rows2


def test_scaling_experiment_rows():
    rows = scaling_experiment([3, 4], trials=100, seed=2)
    assert [r.stages for r in rows] == [3, 4]
    for row in rows:
        assert row.epsilon == 2.0 ** (-2 * row.stages)
        assert row.channel_uses == row.n_total_per_stage * (2**row.stages - 1)
        assert 0 <= row.mean_cost <= 1


def test_scaling_cost_stalls_under_noise():
    # past the stopping point extra stages stop paying off
    noisy = scaling_experiment([4, 9], trials=150, noise=NoiseModel(2**-4), seed=3)
    clean = scaling_experiment([4, 9], trials=150, seed=3)
    assert clean[1].mean_cost < clean[0].mean_cost
    assert noisy[1].mean_cost > noisy[0].mean_cost


# --- CLI ---


def test_cli_samplesize(capsys):
    main(["samplesize", "--stages", "6", "--epsilon", str(2**-12)])
    out = capsys.readouterr().out
    assert "N per basis:            62" in out
    assert "N_tot per stage:        124" in out
    assert f"total channel uses n:   {124 * 63}" in out


def test_cli_samplesize_default_epsilon(capsys):
    main(["samplesize", "--stages", "3"])
    assert "epsilon:                0.015625" in capsys.readouterr().out


def test_cli_refine_replays_worked_example(tmp_path, capsys):
    path = tmp_path / "arcs.json"
    path.write_text(json.dumps({"width": 0.3, "lowers": [0.6, 0.3, 0.8]}))
    main(["refine", "--input", str(path)])
    out = capsys.readouterr().out
    assert "estimate:        0.737" in out
    assert "final arc lower: 0.7" in out
    assert "final arc width: 0.075" in out


def test_cli_simulate_fixed_theta(capsys):
    main(["simulate", "--theta", "0.3", "--stages", "4", "--ntot", "40",
          "--seed", "11", "--trials", "3"])
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "theta,estimate,arc_lower,arc_width,hit"
    assert len(lines) == 4
    assert all(line.startswith("0.3,") for line in lines[1:])


def test_cli_fisher_csv(capsys):
    main(["fisher", "--noise", str(2**-5), "--kmax", "3"])
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "k,m,H_per_use,Fx_avg_per_use,Fy_avg_per_use"
    assert len(lines) == 4
    assert lines[1].startswith("1,1,")


def test_cli_table2_writes_csv_and_manifest(tmp_path):
    out = tmp_path / "t2.csv"
    main(["table2", "--trials", "20", "--seed", "4", "--output", str(out)])
    lines = out.read_text().splitlines()
    assert lines[0] == "r,stages,trials,hits,coverage,ci_low,ci_high"
    assert len(lines) == 1 + 5 * 6
    manifest = json.loads((tmp_path / "t2.csv.manifest.json").read_text())
    assert manifest["command"] == "table2"
    assert manifest["seed"] == 4
    assert "content_hash" in manifest


def test_cli_scaling_csv(capsys):
    main(["scaling", "--lmin", "3", "--lmax", "4", "--trials", "50"])
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "stages,epsilon,n_tot,channel_uses,mean_cost"
    assert len(lines) == 3
