"""Experiments: orthogonality lemma checks, exhaustive graph censuses,
Monte Carlo simplicity estimation, rich-eigenvector frequency.

All randomized experiments derive a per-trial stream from (seed, trial),
so results are independent of trial ordering and worker count; reductions
are integer sums.  Parallelism uses a process pool over contiguous trial
chunks.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .dist import AtomicDistribution
from .errors import PreconditionError
from .matrices import (
    EnsembleSpec,
    SymmetricMatrix,
    graph_from_index,
    minor_decompose,
    sample_matrix,
    trial_rng,
)
from .smallball import WeightVector, is_rich
from .spectrum import eigen_decompose, multiplicity_clusters, simplicity_exact

ORTHO_TOL = 1e-8


@dataclass(frozen=True)
class CensusResult:
    n: int
    total: int
    simple_count: int
    nonsimple_count: int

    @property
    def simple_fraction(self) -> float:
        return self.simple_count / self.total

    @property
    def nonsimple_fraction(self) -> float:
        return self.nonsimple_count / self.total


@dataclass(frozen=True)
class ExperimentSummary:
    trials: int
    successes: int
    point_estimate: float
    wilson_ci_95: tuple[float, float]
    seed: int
    wall_time: float = field(compare=False, default=0.0)


def wilson_interval(successes: int, trials: int, z: float = 1.959963984540054):
    """Wilson score interval; well-behaved at 0 or `trials` successes."""
    if trials < 1:
        raise PreconditionError("trials must be >= 1")
    phat = successes / trials
    denom = 1.0 + z * z / trials
    center = (phat + z * z / (2 * trials)) / denom
    half = (
        z
        * math.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials))
        / denom
    )
    return max(0.0, center - half), min(1.0, center + half)


def verify_orthogonality_lemma(
    M: SymmetricMatrix, tol: float = ORTHO_TOL
) -> tuple[bool, dict]:
    """For a matrix with non-simple spectrum, confirm the minor has an
    eigenvector orthogonal to the border column X.

    Minor eigenvalues are clustered at a relative gap threshold; within a
    cluster the test is basis-independent: a multi-dimensional eigenspace
    always contains a vector orthogonal to X, and a singleton requires
    |X . u| <= tol * |X|.  Returns (ok, witness) with the best eigenvalue
    and achieved residual.
    """
    if M.n < 2:
        raise PreconditionError("lemma needs n >= 2")
    verdict = simplicity_exact(M)
    if verdict.tag != "NotSimpleExact":
        raise PreconditionError("lemma hypothesis requires a non-simple spectrum")
    split = minor_decompose(M)
    x = np.array([float(v) for v in split.x])
    xnorm = float(np.linalg.norm(x))
    if xnorm == 0.0:
        return True, {"eigenvalue": None, "residual": 0.0, "reason": "zero X"}
    spec = eigen_decompose(split.minor, tol=1e-13)
    diameter = float(spec.eigenvalues[-1] - spec.eigenvalues[0]) if split.minor.n > 1 else 0.0
    clusters, _ = multiplicity_clusters(spec, 1e-8 * max(1.0, diameter))
    best = None
    for cluster in clusters:
        U = spec.eigenvectors[:, cluster]
        lam = float(np.mean(spec.eigenvalues[cluster]))
        if len(cluster) >= 2:
            # The eigenspace has dimension >= 2, so a unit vector in it
            # orthogonal to X exists exactly.
            cand = (0.0, lam)
        else:
            resid = abs(float(U[:, 0] @ x))
            cand = (resid, lam)
        if best is None or cand[0] < best[0]:
            best = cand
    resid, lam = best
    ok = resid <= tol * xnorm
    return ok, {"eigenvalue": lam, "residual": resid, "x_norm": xnorm}


def _census_chunk(args) -> tuple[int, int]:
    n, start, stop = args
    simple = 0
    for index in range(start, stop):
        if simplicity_exact(graph_from_index(n, index)).is_simple:
            simple += 1
    return simple, stop - start


def _chunks(total: int, workers: int):
    step = math.ceil(total / workers)
    return [(i, min(i + step, total)) for i in range(0, total, step)]


def exhaustive_census(n: int, workers: int = 1) -> CensusResult:
    """Classify every graph on n vertices by exact spectral simplicity."""
    if not 2 <= n <= 7:
        raise PreconditionError("census supports 2 <= n <= 7")
    total = 1 << (n * (n - 1) // 2)
    if workers <= 1:
        simple, _ = _census_chunk((n, 0, total))
    else:
        jobs = [(n, a, b) for a, b in _chunks(total, workers)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            simple = sum(s for s, _ in ex.map(_census_chunk, jobs))
    return CensusResult(
        n=n, total=total, simple_count=simple, nonsimple_count=total - simple
    )


def _mc_chunk(args) -> int:
    spec, n, seed, start, stop = args
    nonsimple = 0
    for t in range(start, stop):
        M = sample_matrix(spec, n, trial_rng(seed, t))
        if not simplicity_exact(M).is_simple:
            nonsimple += 1
    return nonsimple


def monte_carlo_simplicity(
    spec: EnsembleSpec, n: int, trials: int, seed: int, workers: int = 1
) -> ExperimentSummary:
    """Sample matrices and estimate the non-simple fraction with 95% CI."""
    if trials < 1:
        raise PreconditionError("trials must be >= 1")
    t0 = time.perf_counter()
    if workers <= 1:
        nonsimple = _mc_chunk((spec, n, seed, 0, trials))
    else:
        jobs = [(spec, n, seed, a, b) for a, b in _chunks(trials, workers)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            nonsimple = sum(ex.map(_mc_chunk, jobs))
    return ExperimentSummary(
        trials=trials,
        successes=nonsimple,
        point_estimate=nonsimple / trials,
        wilson_ci_95=wilson_interval(nonsimple, trials),
        seed=seed,
        wall_time=time.perf_counter() - t0,
    )


def _rich_chunk(args) -> int:
    spec, n, A, delta, seed, start, stop = args
    hits = 0
    for t in range(start, stop):
        M = sample_matrix(spec, n, trial_rng(seed, t))
        s = eigen_decompose(M, tol=1e-13)
        for j in range(n):
            v = WeightVector.numeric(s.eigenvectors[:, j])
            rich, _ = is_rich(
                v, spec.offdiag, A, n, delta=delta, rng=trial_rng(seed, t)
            )
            if rich:
                hits += 1
                break
    return hits


def rich_eigenvector_frequency(
    spec: EnsembleSpec,
    n: int,
    A: float,
    delta: float,
    trials: int,
    seed: int,
    workers: int = 1,
) -> ExperimentSummary:
    """Fraction of sampled matrices with at least one rich eigenvector
    (windowed small-ball at window `delta`, threshold n^-A)."""
    if trials < 1:
        raise PreconditionError("trials must be >= 1")
    if delta <= 0:
        raise PreconditionError("delta must be positive")
    t0 = time.perf_counter()
    if workers <= 1:
        hits = _rich_chunk((spec, n, A, delta, seed, 0, trials))
    else:
        jobs = [
            (spec, n, A, delta, seed, a, b) for a, b in _chunks(trials, workers)
        ]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            hits = sum(ex.map(_rich_chunk, jobs))
    return ExperimentSummary(
        trials=trials,
        successes=hits,
        point_estimate=hits / trials,
        wilson_ci_95=wilson_interval(hits, trials),
        seed=seed,
        wall_time=time.perf_counter() - t0,
    )
