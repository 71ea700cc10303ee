import math

import numpy as np
import pytest
from pydantic import ValidationError

from evaluation.ensembles import EnsembleConfig, EnsembleKind, derive_seed, gen_random
from evaluation.verify_harness import (
    equality_regressions,
    examples_passed,
    paper_examples,
    run_suite,
    tightness_report,
)
from tests.conftest import DISK_TOL
from tools.bounds_catalog import Direction
from tools.errors import PreconditionError


# ----------------------------------------------------------------------------
# ensembles
# ----------------------------------------------------------------------------


def test_nilpotent_jordan_is_the_shift():
    m = gen_random(EnsembleConfig(kind=EnsembleKind.NILPOTENT_JORDAN, dim=2, seed=123))
    assert np.array_equal(m, [[0, 1], [0, 0]])


@pytest.mark.parametrize("n", [1, 3, 6])
def test_haar_unitary_is_unitary(n):
    u = gen_random(EnsembleConfig(kind=EnsembleKind.HAAR_UNITARY, dim=n, seed=99))
    assert np.max(np.abs(u.conj().T @ u - np.eye(n))) <= 1e-12


def test_hermitian_kind_is_hermitian():
    h = gen_random(EnsembleConfig(kind="hermitian", dim=4, seed=5))
    assert np.array_equal(h, h.conj().T)


@pytest.mark.parametrize("kind", list(EnsembleKind))
def test_generation_is_deterministic(kind):
    cfg = EnsembleConfig(kind=kind, dim=3, seed=2**64 - 1)
    assert np.array_equal(gen_random(cfg), gen_random(cfg))


def test_different_seeds_differ():
    a = gen_random(EnsembleConfig(kind="ginibre", dim=3, seed=1))
    b = gen_random(EnsembleConfig(kind="ginibre", dim=3, seed=2))
    assert not np.array_equal(a, b)


def test_ensemble_config_validation():
    with pytest.raises(ValidationError):
        EnsembleConfig(kind="ginibre", dim=0, seed=1)
    with pytest.raises(ValidationError):
        EnsembleConfig(kind="ginibre", dim=2, seed=-1)
    assert EnsembleConfig(kind="ginibre", dim=2, seed=7).fingerprint(3) == "ginibre:n=2:seed=7:draw=3"


def test_derived_seeds_are_distinct():
    seeds = {derive_seed(42, trial, slot) for trial in range(10) for slot in range(6)}
    assert len(seeds) == 60
    assert derive_seed(42, 1, 2) == derive_seed(42, 1, 2)


# ----------------------------------------------------------------------------
# suite
# ----------------------------------------------------------------------------


def test_scalar_suite_passes():
    report = run_suite(trials=1, dims=[1], seed=3)
    assert report.passed
    assert report.checks > 0
    assert report.pointwise_draws >= 1000


def test_small_suite_passes():
    report = run_suite(trials=6, dims=[2, 3], seed=42)
    assert report.passed, report.violations
    assert report.trials == 6
    ids = {t.bound_id for t in report.tightness}
    for expected in ("eq2", "cor24a", "thm23a", "lem21", "thm26i", "thm37", "thm32", "thm33", "cor42", "thm41", "lem43", "thm29", "thm29m"):
        assert expected in ids
    assert report.equality_attained >= report.curated_equalities


def test_tightness_rows_are_consistent():
    report = run_suite(trials=2, dims=[2], seed=8)
    for row in report.tightness:
        assert row.count >= 1
        assert row.min_slack <= row.mean_slack + 1e-15
        assert row.equality_count <= row.count


def test_suite_is_reproducible_across_workers():
    serial = run_suite(trials=3, dims=[2], seed=11, workers=1)
    threaded = run_suite(trials=3, dims=[2], seed=11, workers=3)
    assert serial.model_dump_json() == threaded.model_dump_json()


@pytest.mark.parametrize("scale", [1e3, 1e-3])
def test_suite_is_scale_robust(scale):
    report = run_suite(trials=2, dims=[2], seed=5, scale=scale)
    assert report.passed, report.violations


def test_suite_preconditions():
    with pytest.raises(PreconditionError):
        run_suite(trials=0)
    with pytest.raises(PreconditionError):
        run_suite(trials=1, dims=[])
    with pytest.raises(PreconditionError):
        run_suite(trials=1, dims=[2], tol=0.0)


def test_equality_regressions_attain_their_bounds():
    cases = equality_regressions()
    assert {c.bound_id for c in cases} == {"thm26i", "cor36", "thm45", "eq2", "cor24a", "thm23a"}
    for case in cases:
        assert case.slack == pytest.approx(0.0, abs=1e-6), case.bound_id


# ----------------------------------------------------------------------------
# worked examples and tightness ranking
# ----------------------------------------------------------------------------


def test_paper_examples_reproduce():
    rows = {row.label: row for row in paper_examples()}
    assert examples_passed(rows.values())
    assert rows["eq2 shift"].computed == pytest.approx(0.5, abs=1e-9)
    assert rows["eq3 shift"].computed == pytest.approx(0.0, abs=1e-9)
    assert rows["eq3 diag(i,1)"].computed == pytest.approx(1.0, abs=1e-9)

    thm37 = rows["thm37 vs Shebrawi"]
    assert thm37.computed == pytest.approx(3.3410028, abs=1e-7)
    assert thm37.competitor == pytest.approx(3.7905694, abs=1e-7)
    assert thm37.improves

    assert rows["cor42 ex1"].computed == pytest.approx(math.sqrt(2), abs=1e-6)
    assert rows["cor42 ex2"].computed == pytest.approx(1.7320508, abs=1e-6)
    assert rows["cor42 ex2"].improves


def test_tightness_report_shift(shift):
    rows = {e.bound_id: e for e in tightness_report(shift, tol=DISK_TOL)}
    assert rows["eq2"].slack == pytest.approx(0.0, abs=1e-6)
    assert rows["norm"].slack == pytest.approx(0.5, abs=1e-6)


def test_tightness_report_diag_i1(diag_i1):
    report = tightness_report(diag_i1, tol=1e-9)
    rows = {e.bound_id: e for e in report}
    assert rows["eq3"].slack == pytest.approx(0.0, abs=1e-8)
    assert rows["eq2"].slack == pytest.approx(0.5, abs=1e-8)
    directions = [e.direction for e in report]
    assert directions == sorted(directions, key=lambda d: d is Direction.UPPER)
    lower = [e.slack for e in report if e.direction is Direction.LOWER]
    assert lower == sorted(lower)


def test_tightness_report_identity(eye2):
    rows = {e.bound_id: e for e in tightness_report(eye2)}
    assert rows["eq2"].slack == pytest.approx(0.0, abs=1e-12)
    assert rows["norm"].slack == pytest.approx(0.0, abs=1e-12)


def test_tightness_report_rejects_zero():
    with pytest.raises(PreconditionError):
        tightness_report(np.zeros((2, 2)))
