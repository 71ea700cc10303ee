"""
Verification harness.
Random-matrix fuzzing of every catalog inequality against certified reference
values, curated equality regressions, tightness ranking and the worked
numerical examples.
"""

import asyncio
import logging
import math
from collections import OrderedDict
from typing import Callable, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from config.settings import Settings
from evaluation.ensembles import (
    EnsembleConfig,
    EnsembleKind,
    derive_seed,
    gen_random,
    ginibre,
    philox,
    unit_vector,
)
from observability.logger import nr_logger
from tools.block_builder import anti_diagonal, assemble, equality_model, first_row, off_diagonal, two_by_two
from tools.bounds_catalog import BoundEvaluation, Direction, attach_targets, bounds_catalog
from tools.errors import PreconditionError
from tools.matrix_core import as_matrix, is_zero, op_norm, require_square
from tools.range_analysis import crawford_number, numerical_radius

logger = logging.getLogger(__name__)

KIND_CYCLE = list(EnsembleKind)

# one trial in this many also builds and checks an equality-case model
EQUALITY_MODEL_EVERY = 8


class CheckRecord(BaseModel):
    """One evaluated inequality instance inside a suite run"""

    model_config = ConfigDict(frozen=True)

    bound_id: str
    direction: Direction
    slack: float
    scale: float
    fingerprint: str


class Violation(BaseModel):
    bound_id: str
    fingerprint: str
    slack: float
    scale: float


class BoundTightness(BaseModel):
    bound_id: str
    direction: Direction
    count: int
    mean_slack: float
    min_slack: float
    equality_count: int


class SuiteReport(BaseModel):
    trials: int
    dims: List[int]
    seed: int
    tol: float
    scale: float
    checks: int
    pointwise_draws: int
    curated_equalities: int
    equality_attained: int
    violations: List[Violation]
    tightness: List[BoundTightness]

    @property
    def passed(self) -> bool:
        return not self.violations


class ExampleRow(BaseModel):
    label: str
    computed: float
    expected: float
    diff: float
    competitor: Optional[float] = None
    improves: Optional[bool] = None


# ----------------------------------------------------------------------------
# Trials
# ----------------------------------------------------------------------------


def _w(matrix) -> float:
    return numerical_radius(matrix, tol=Settings.SUITE_SCAN_TOL).value


def _records(evaluations: Sequence[BoundEvaluation], fingerprint: str, target: Optional[float] = None) -> List[CheckRecord]:
    if target is not None:
        evaluations = attach_targets(evaluations, target)
    return [
        CheckRecord(bound_id=e.bound_id, direction=e.direction, slack=e.slack, scale=e.scale, fingerprint=fingerprint)
        for e in evaluations
        if e.applicable and e.slack is not None
    ]


def _equality_record(bound_id: str, lhs: float, rhs: float, scale: float, fingerprint: str) -> CheckRecord:
    return CheckRecord(
        bound_id=bound_id,
        direction=Direction.EQUALITY,
        slack=-abs(lhs - rhs),
        scale=max(scale, Settings.SIGMA_FLOOR),
        fingerprint=fingerprint,
    )


def _run_trial(index: int, dims: Sequence[int], seed: int, scale: float, draws: int) -> List[CheckRecord]:
    dim = dims[index % len(dims)]
    kind = KIND_CYCLE[index % len(KIND_CYCLE)]
    cfg = EnsembleConfig(kind=kind, dim=dim, seed=derive_seed(seed, index, 0))
    block_seeds = [derive_seed(seed, index, slot) for slot in range(1, 5)]
    fp = f"trial={index};T={cfg.fingerprint()};blocks=ginibre:n={dim}:seeds={','.join(map(str, block_seeds))}"

    tol = Settings.SUITE_SCAN_TOL
    t = as_matrix(scale * gen_random(cfg))
    a, b, c, d = (as_matrix(scale * ginibre(philox(s), dim, dim)) for s in block_seeds)
    records: List[CheckRecord] = []

    if not is_zero(t):
        records += _records(bounds_catalog.scalar_bounds(t, tol), fp, _w(t))
    records += _records(bounds_catalog.product_upper(a, b, tol), fp, _w(a @ b))
    records += _records(bounds_catalog.sandwich_bounds(a, t, b, tol), fp)
    records += _records(bounds_catalog.offdiag_lower(a, b, tol), fp, _w(off_diagonal(a, b)))
    records += _records(bounds_catalog.row_bounds(a, b, tol), fp, _w(assemble(first_row([a, b]))))
    records += _records([bounds_catalog.firstrow_upper([a, b, c])], fp, _w(assemble(first_row([a, b, c]))))

    grid = two_by_two(a, b, c, d)
    m_ref = _w(assemble(grid))
    records += _records(bounds_catalog.two_by_two_bounds(a, b, c, d, tol), fp, m_ref)
    records += _records([bounds_catalog.grid_upper(grid)], fp, m_ref)

    anti = [a, b, c][: index % 3 + 1]
    records += _records([bounds_catalog.antidiag_lower(anti, tol)], fp, _w(anti_diagonal(anti)))

    lhs, rhs = bounds_catalog.sym_block_equality(a, b, tol)
    records.append(_equality_record("lem43", lhs, rhs, op_norm(a).value + op_norm(b).value, fp))

    rng = philox(derive_seed(seed, index, 5))
    for draw in range(draws):
        x = unit_vector(rng, dim)
        for res in bounds_catalog.pointwise_check(a, t, b, x, tol):
            records.append(
                CheckRecord(
                    bound_id=res.lemma_id,
                    direction=Direction.POINTWISE,
                    slack=res.residual,
                    scale=res.scale,
                    fingerprint=f"{fp};x=draw{draw}",
                )
            )

    if index % EQUALITY_MODEL_EVERY == 0:
        records += _equality_model_records(index, dim, seed, scale, fp)
    return records


def _equality_model_records(index: int, dim: int, seed: int, scale: float, fp: str) -> List[CheckRecord]:
    rng = philox(derive_seed(seed, index, 6))
    s = scale * (0.5 + float(rng.random()))
    g = np.array(ginibre(rng, dim, dim))
    b = g / (2.0 * op_norm(g).upper)
    model = equality_model(s, b)
    fp = f"{fp};equality_model:s={s!r}"
    w_model = numerical_radius(model, tol=Settings.SUITE_SCAN_TOL).value
    m_square = crawford_number(model @ model, tol=Settings.SUITE_SCAN_TOL).value
    return [
        _equality_record("thm29", w_model, s / 2, s, fp),
        _equality_record("thm29m", m_square, 0.0, s * s, fp),
    ]


def equality_regressions(tol: float = Settings.SUITE_SCAN_TOL) -> List[BoundEvaluation]:
    """Curated cases where a catalog bound is attained"""
    shift = np.array([[0, 1], [0, 0]], dtype=np.complex128)
    eye = np.eye(2, dtype=np.complex128)
    cases = []

    w0 = numerical_radius(off_diagonal(shift, shift), tol=tol).value
    cases.append(_pick(bounds_catalog.offdiag_lower(shift, shift, tol), "thm26i").with_target(w0))

    m_ref = numerical_radius(assemble(two_by_two(0, 1, 2, 0)), tol=tol).value
    cases.append(_pick(bounds_catalog.two_by_two_bounds(0, 1, 2, 0, tol), "cor36").with_target(m_ref))

    w_off = numerical_radius(off_diagonal(1, 2), tol=tol).value
    cases.append(_pick(bounds_catalog.offdiag_lower(1, 2, tol), "thm45").with_target(w_off))

    cases.append(_pick(bounds_catalog.scalar_bounds(eye, tol), "eq2").with_target(numerical_radius(eye, tol=tol).value))
    cases.append(_pick(bounds_catalog.product_upper(eye, eye, tol), "cor24a").with_target(numerical_radius(eye, tol=tol).value))
    cases.append(_pick(bounds_catalog.sandwich_bounds(eye, eye, eye, tol), "thm23a"))
    return cases


def _pick(evaluations: Sequence[BoundEvaluation], bound_id: str) -> BoundEvaluation:
    return next(e for e in evaluations if e.bound_id == bound_id)


# ----------------------------------------------------------------------------
# Suite
# ----------------------------------------------------------------------------


async def _gather_trials(indices: Sequence[int], workers: int, fn: Callable[[int], List[CheckRecord]]):
    semaphore = asyncio.Semaphore(workers)

    async def one(i: int):
        async with semaphore:
            return await asyncio.to_thread(fn, i)

    # gather keeps submission order, so the merge is by trial index
    return await asyncio.gather(*(one(i) for i in indices))


def _aggregate(records: Sequence[CheckRecord], tol: float):
    violations = []
    groups: "OrderedDict[str, List[CheckRecord]]" = OrderedDict()
    for rec in records:
        threshold = Settings.POINTWISE_TOL if rec.direction is Direction.POINTWISE else tol
        if rec.slack < -threshold * rec.scale:
            violations.append(Violation(bound_id=rec.bound_id, fingerprint=rec.fingerprint, slack=rec.slack, scale=rec.scale))
        groups.setdefault(rec.bound_id, []).append(rec)

    tightness = []
    for bound_id in sorted(groups):
        group = groups[bound_id]
        relative = [r.slack / r.scale for r in group]
        tightness.append(
            BoundTightness(
                bound_id=bound_id,
                direction=group[0].direction,
                count=len(group),
                mean_slack=math.fsum(relative) / len(relative),
                min_slack=min(relative),
                equality_count=sum(1 for x in relative if abs(x) <= Settings.SLACK_TOL),
            )
        )
    return violations, tightness


@nr_logger.trace_workflow("run_suite")
def run_suite(
    trials: int = Settings.DEFAULT_TRIALS,
    dims: Sequence[int] = Settings.DEFAULT_DIMS,
    seed: int = Settings.DEFAULT_SEED,
    tol: float = Settings.SLACK_TOL,
    workers: int = 1,
    scale: float = 1.0,
) -> SuiteReport:
    """
    Fuzz every catalog evaluator. Kinds and dimensions cycle with the trial
    index; pointwise lemmas get at least POINTWISE_DRAWS vectors in total.
    """
    if trials < 1:
        raise PreconditionError(f"trials must be at least 1, got {trials}")
    dims = [int(d) for d in dims]
    if not dims or any(d < 1 for d in dims):
        raise PreconditionError(f"dims must be a nonempty list of positive integers, got {dims}")
    if not tol > 0 or not scale > 0 or workers < 1:
        raise PreconditionError("tol and scale must be positive and workers at least 1")

    draws = -(-Settings.POINTWISE_DRAWS // trials)

    def trial(i: int) -> List[CheckRecord]:
        return _run_trial(i, dims, seed, scale, draws)

    if workers == 1:
        per_trial = [trial(i) for i in range(trials)]
    else:
        per_trial = asyncio.run(_gather_trials(range(trials), workers, trial))

    curated = equality_regressions()
    records = [rec for chunk in per_trial for rec in chunk]
    records += _records(curated, "curated")

    violations, tightness = _aggregate(records, tol)
    equality_attained = sum(
        t.equality_count for t in tightness if t.direction in (Direction.LOWER, Direction.UPPER)
    )
    report = SuiteReport(
        trials=trials,
        dims=dims,
        seed=seed,
        tol=tol,
        scale=scale,
        checks=len(records),
        pointwise_draws=draws * trials,
        curated_equalities=len(curated),
        equality_attained=equality_attained,
        violations=violations,
        tightness=tightness,
    )

    for v in violations:
        nr_logger.logger.warning(f"[VIOLATION] {v.bound_id} slack={v.slack:.3e} scale={v.scale:.3e} at {v.fingerprint}")
    nr_logger.log_action(
        "verify_harness",
        "SUITE_COMPLETE",
        {"trials": trials, "checks": report.checks, "violations": len(violations)},
    )
    return report


# ----------------------------------------------------------------------------
# Worked examples and tightness
# ----------------------------------------------------------------------------


@nr_logger.trace_workflow("paper_examples")
def paper_examples() -> List[ExampleRow]:
    """Reproduce the worked examples: eq2/eq3 incomparability, the row bound and the 2x2 lower bound"""
    tol = Settings.EXAMPLE_SCAN_TOL
    shift = np.array([[0, 1], [0, 0]], dtype=np.complex128)
    diag = np.diag([1j, 1.0])
    rows: List[ExampleRow] = []

    def add(label: str, computed: float, expected: float, competitor: Optional[float] = None, higher_is_better=None):
        improves = None
        if competitor is not None:
            improves = computed > competitor if higher_is_better else computed < competitor
        rows.append(
            ExampleRow(
                label=label,
                computed=computed,
                expected=expected,
                diff=abs(computed - expected),
                competitor=competitor,
                improves=improves,
            )
        )

    for name, matrix, expected2, expected3 in (("shift", shift, 0.5, 0.0), ("diag(i,1)", diag, 0.5, 1.0)):
        scalar = bounds_catalog.scalar_bounds(matrix, tol)
        add(f"eq2 {name}", _pick(scalar, "eq2").value, expected2)
        add(f"eq3 {name}", _pick(scalar, "eq3").value, expected3)

    a = np.array([[0, 0], [3, 1]], dtype=np.complex128)
    b = np.array([[1, 2], [0, 0]], dtype=np.complex128)
    thm37 = _pick(bounds_catalog.row_bounds(a, b, tol), "thm37").value
    add(
        "thm37 vs Shebrawi",
        thm37,
        math.sqrt(8 + math.sqrt(10)),
        competitor=bounds_catalog.PRIOR_THM37_EXAMPLE,
        higher_is_better=False,
    )

    ex1 = _pick(bounds_catalog.two_by_two_bounds(0, 1, 2, 0, tol), "cor42").value
    add("cor42 ex1", ex1, math.sqrt(2), competitor=bounds_catalog.PRIOR_COR42_EXAMPLE, higher_is_better=True)

    zero = np.zeros((2, 2), dtype=np.complex128)
    b2 = np.array([[-1, 3], [0, 1]], dtype=np.complex128)
    c2 = np.array([[1, 3], [0, -1]], dtype=np.complex128)
    ex2 = _pick(bounds_catalog.two_by_two_bounds(zero, b2, c2, zero, tol), "cor42").value
    add("cor42 ex2", ex2, math.sqrt(3), competitor=bounds_catalog.PRIOR_COR42_EXAMPLE, higher_is_better=True)
    return rows


def examples_passed(rows: Sequence[ExampleRow]) -> bool:
    return all(row.diff <= Settings.EXAMPLE_TOL for row in rows)


def tightness_report(matrix, tol: float = Settings.DEFAULT_TOL) -> List[BoundEvaluation]:
    """Applicable scalar bounds with slack against certified w(T), lower bounds first, each by ascending slack"""
    t = as_matrix(matrix, "T")
    require_square(t, "T")
    if is_zero(t):
        raise PreconditionError("tightness_report needs a nonzero matrix")
    w_ref = numerical_radius(t, tol=tol).value
    evaluations = [e for e in attach_targets(bounds_catalog.scalar_bounds(t, tol), w_ref) if e.applicable]
    order = {Direction.LOWER: 0, Direction.UPPER: 1}
    return sorted(evaluations, key=lambda e: (order.get(e.direction, 2), e.slack, e.bound_id))
