"""Concentration probabilities p(V) = sup_x P(sum xi_i v_i = x) and richness.

Exact mode convolves point masses keyed by exact rational sums, so the
supremum is a max over the finite support.  Windowed mode is the float
surrogate (eigenvectors of integer matrices have irrational entries, so
exact equality is unattainable there): it reports the largest mass a
sliding window of width delta can capture, an upper bound on the exact
concentration for any point inside the window.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np

from .dist import AtomicDistribution
from .errors import CapExceededError, PreconditionError

DEFAULT_SUM_CAP = 10**7
_EXHAUSTIVE_LIMIT = 1 << 20


@dataclass(frozen=True)
class WeightVector:
    """Coefficient vector, exact (rationals) or numeric (floats + window)."""

    entries: tuple
    mode: str = "exact"  # "exact" | "numeric"

    def __len__(self):
        return len(self.entries)

    @classmethod
    def exact(cls, values: Sequence) -> "WeightVector":
        return cls(tuple(Fraction(v) for v in values), "exact")

    @classmethod
    def numeric(cls, values: Sequence) -> "WeightVector":
        return cls(tuple(float(v) for v in values), "numeric")


@dataclass(frozen=True)
class SmallBallResult:
    p: Union[Fraction, float]
    attaining_atom: Union[Fraction, float]
    mode: str  # "exact" | "windowed" | "windowed-mc"
    window: float = 0.0
    trials: int = 0


def small_ball_exact(
    V: WeightVector, d: AtomicDistribution, cap: int = DEFAULT_SUM_CAP
) -> SmallBallResult:
    """Exact maximal point mass of sum xi_i v_i by iterated convolution.

    The empty vector gives the deterministic empty sum: p = 1 at 0.
    Ties on the maximal mass resolve to the smallest attaining sum.
    """
    if V.mode != "exact":
        raise PreconditionError("small_ball_exact needs an exact-mode vector")
    masses = {Fraction(0): Fraction(1)}
    for v in V.entries:
        nxt: dict = defaultdict(Fraction)
        for s, m in masses.items():
            for a, pa in zip(d.atoms, d.probs):
                nxt[s + a * v] += m * pa
        if len(nxt) > cap:
            raise CapExceededError(
                f"distinct-sum support {len(nxt)} exceeds cap {cap}"
            )
        masses = nxt
    best = max(masses.values())
    atom = min(s for s, m in masses.items() if m == best)
    return SmallBallResult(p=best, attaining_atom=atom, mode="exact")


def _windowed_from_sorted(sums: np.ndarray, weights: np.ndarray, delta: float):
    """Max weight captured by a window of width delta over sorted sums."""
    best = 0.0
    center = float(sums[0])
    j = 0
    cum = np.concatenate([[0.0], np.cumsum(weights)])
    for i in range(len(sums)):
        while sums[i] - sums[j] > delta:
            j += 1
        w = float(cum[i + 1] - cum[j])
        if w > best:
            best = w
            center = float((sums[i] + sums[j]) / 2.0)
    return best, center


def small_ball_windowed(
    V: WeightVector,
    d: AtomicDistribution,
    delta: float,
    trials: int = 10**4,
    rng: Optional[np.random.Generator] = None,
) -> SmallBallResult:
    """Estimate sup_x P(|sum xi_i v_i - x| <= delta/2) for a float vector.

    Exhaustive over all |atoms|^n assignments when that fits in 2^20,
    else Monte Carlo over `trials` samples with the window maximized over
    sampled sums.
    """
    if delta <= 0:
        raise PreconditionError("delta must be positive")
    if trials < 1:
        raise PreconditionError("trials must be >= 1")
    entries = [float(v) for v in V.entries]
    atoms = np.array([float(a) for a in d.atoms])
    probs = np.array([float(p) for p in d.probs])
    n = len(entries)
    k = len(atoms)
    if not entries:
        return SmallBallResult(p=1.0, attaining_atom=0.0, mode="windowed", window=delta)
    if k**n <= _EXHAUSTIVE_LIMIT:
        sums = np.zeros(1)
        weights = np.ones(1)
        for v in entries:
            sums = (sums[:, None] + atoms[None, :] * v).ravel()
            weights = (weights[:, None] * probs[None, :]).ravel()
        order = np.argsort(sums, kind="stable")
        p, center = _windowed_from_sorted(sums[order], weights[order], delta)
        return SmallBallResult(
            p=p, attaining_atom=center, mode="windowed", window=delta
        )
    if rng is None:
        rng = np.random.default_rng(0)
    draws = rng.choice(k, size=(trials, n), p=probs / probs.sum())
    sums = np.sort(atoms[draws] @ np.array(entries))
    p, center = _windowed_from_sorted(sums, np.full(trials, 1.0 / trials), delta)
    return SmallBallResult(
        p=p, attaining_atom=center, mode="windowed-mc", window=delta, trials=trials
    )


def is_rich(
    V: WeightVector,
    d: AtomicDistribution,
    A: float,
    n: int,
    delta: float = 0.0,
    cap: int = DEFAULT_SUM_CAP,
    trials: int = 10**4,
    rng: Optional[np.random.Generator] = None,
) -> tuple[bool, Union[Fraction, float]]:
    """Test p(V) >= n^(-A); returns (verdict, p).

    The threshold always uses the caller-supplied n (by convention the
    length of the vector under test).  Exact mode compares rationals
    exactly when A is an integer.
    """
    if A <= 0:
        raise PreconditionError("A must be positive")
    if n < 1:
        raise PreconditionError("n must be >= 1")
    if V.mode == "exact":
        if delta != 0.0:
            raise PreconditionError("exact mode requires delta = 0")
        res = small_ball_exact(V, d, cap=cap)
        if float(A).is_integer():
            return res.p >= Fraction(1, n ** int(A)), res.p
        return float(res.p) >= n ** (-A), res.p
    res = small_ball_windowed(V, d, delta, trials=trials, rng=rng)
    return res.p >= n ** (-A), res.p
