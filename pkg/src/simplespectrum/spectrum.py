"""Spectral simplicity, decided exactly and numerically.

Exact route: the monic characteristic polynomial det(xI - M) is computed
by the Faddeev-LeVerrier trace recursion, run modulo several word-sized
primes with numpy int64 matrix products and reconstructed by CRT (the
number of primes is chosen from an a-priori coefficient bound, so the
result is exact, not probabilistic).  Simplicity is then squarefreeness:
gcd(p, p') constant.  For a real symmetric matrix algebraic multiplicity
equals geometric multiplicity, so squarefree <=> simple spectrum.

Numeric route: cyclic Jacobi rotations, followed by gap clustering.
Where the two disagree the exact verdict is ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, sqrt
from typing import Optional

import numpy as np

from . import polys
from .errors import ConvergenceError, PreconditionError
from .matrices import SymmetricMatrix
from .rationals import format_rational, parse_rational

# Primes start just below 2^27 so that balanced-representative int64
# matmuls cannot overflow for n up to ~2000: n * (p/2)^2 < 2^63.
_PRIME_FLOOR = (1 << 27) - 100


@dataclass(frozen=True)
class CharPoly:
    """Monic characteristic polynomial, coefficients constant term first."""

    coeffs: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + (float(c) if isinstance(x, float) else c)
        return acc

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, obj) -> "CharPoly":
        return cls(tuple(parse_rational(c) for c in obj))


@dataclass(frozen=True)
class NumericSpectrum:
    """Eigenvalues ascending, orthonormal eigenvector columns, max residual."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    residual: float


@dataclass(frozen=True)
class SimplicityVerdict:
    tag: str  # SimpleExact | NotSimpleExact | SimpleNumeric | NotSimpleNumeric | Ambiguous
    min_gap: Optional[float] = None
    certificate: Optional[tuple[Fraction, ...]] = None  # repeated-root factor

    @property
    def is_simple(self) -> bool:
        return self.tag in ("SimpleExact", "SimpleNumeric")


def _charpoly_mod(A: np.ndarray, n: int, p: int) -> list[int]:
    """Faddeev-LeVerrier mod p; returns [c_0..c_n] with poly = sum c_k x^(n-k)."""
    half = p // 2

    def balance(B):
        return (B + half) % p - half

    Ab = balance(A % p)
    M = np.zeros((n, n), dtype=np.int64)
    eye = np.eye(n, dtype=np.int64)
    c = [1]
    for k in range(1, n + 1):
        M = (Ab @ balance(M) + c[-1] * eye) % p
        t = int(np.trace((Ab @ balance(M)) % p)) % p
        c.append(-t * pow(k, -1, p) % p)
    return c


def _integer_charpoly(rows: list[list[int]]) -> list[int]:
    """Exact char poly of an integer symmetric matrix via CRT over primes."""
    n = len(rows)
    a = max((abs(x) for row in rows for x in row), default=0)
    # |c_k| <= C(n,k) * (n*a)^k; double it for the symmetric CRT range.
    bound = 2 * max(comb(n, k) * (n * a) ** k for k in range(n + 1)) + 1
    prime_iter = polys.primes_from(_PRIME_FLOOR)
    residues: list[list[int]] = []
    used: list[int] = []
    modulus = 1
    while modulus < bound:
        p = next(prime_iter)
        Ap = np.array([[x % p for x in row] for row in rows], dtype=np.int64)
        residues.append(_charpoly_mod(Ap, n, p))
        used.append(p)
        modulus *= p
    coeffs = []
    for k in range(n + 1):
        r, m = 0, 1
        for res, p in zip(residues, used):
            r, m = polys.crt_pair(r, m, res[k], p)
        coeffs.append(polys.symmetric_residue(r, m))
    return coeffs  # c_0 .. c_n, poly = sum c_k x^(n-k), c_0 = 1


def char_poly(M: SymmetricMatrix) -> CharPoly:
    """Exact monic characteristic polynomial det(xI - M)."""
    n = M.n
    den = 1
    for row in M.entries:
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
    rows = [[int(x * den) for x in row] for row in M.entries]
    c = _integer_charpoly(rows)  # char poly of den*M in y
    # p(x) = q(den*x)/den^n  =>  coefficient of x^(n-k) is c_k / den^k
    coeffs_desc = [Fraction(c[k], den**k) for k in range(n + 1)]
    return CharPoly(tuple(reversed(coeffs_desc)))


def _int_poly_ascending(p: CharPoly) -> tuple[list[int], int]:
    """Clear denominators: return (integer coefficient list asc, multiplier)."""
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    return [int(c * den) for c in p.coeffs], den


def simplicity_exact(M: SymmetricMatrix) -> SimplicityVerdict:
    """SimpleExact iff char_poly(M) is squarefree; certificate otherwise."""
    p = char_poly(M)
    ip, _ = _int_poly_ascending(p)
    dp = polys.derivative(ip)
    # Cheap one-sided screen: a constant gcd mod q proves a constant gcd
    # over Q when q divides neither leading coefficient.
    q = next(polys.primes_from(_PRIME_FLOOR))
    if ip[-1] % q and dp[-1] % q:
        if polys.degree(polys.poly_gcd_mod(ip, dp, q)) == 0:
            return SimplicityVerdict(tag="SimpleExact")
    g = polys.gcd_int(ip, dp)
    if polys.degree(g) == 0:
        return SimplicityVerdict(tag="SimpleExact")
    lead = Fraction(g[-1])
    cert = tuple(Fraction(c) / lead for c in g)
    return SimplicityVerdict(tag="NotSimpleExact", certificate=cert)


def eigen_decompose(M: SymmetricMatrix, tol: float = 1e-12) -> NumericSpectrum:
    """Full eigendecomposition by cyclic Jacobi sweeps on a float copy.

    Sweeps until the off-diagonal Frobenius norm drops below tol * ||M||_F,
    up to 50 sweeps.
    """
    if tol <= 0:
        raise PreconditionError("tol must be positive")
    A = M.to_float_array()
    n = M.n
    V = np.eye(n)
    frob = np.linalg.norm(A)
    if n == 1 or frob == 0.0:
        lam = np.diag(A).copy()
        return NumericSpectrum(lam, V, 0.0)
    def offdiag_norm(B):
        # Summing the off-diagonal squares directly avoids the cancellation
        # in ||B||_F^2 - ||diag||^2 once the matrix is nearly diagonal.
        C = B.copy()
        np.fill_diagonal(C, 0.0)
        return float(np.linalg.norm(C))

    converged = False
    for _ in range(50):
        off = offdiag_norm(A)
        if off <= tol * frob:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                diff = A[q, q] - A[p, p]
                if abs(apq) < 1e-36 * abs(diff):
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = 1.0 / (abs(theta) + sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                rp, rq = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * rp - s * rq
                A[q, :] = s * rp + c * rq
                cp, cq = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * cp - s * cq
                A[:, q] = s * cp + c * cq
                A[p, q] = 0.0
                A[q, p] = 0.0
                vp, vq = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
    else:
        converged = False
    if not converged:
        off = offdiag_norm(A)
        if off > tol * frob:
            raise ConvergenceError(
                f"Jacobi did not converge in 50 sweeps (off-diagonal {off:g})",
                achieved=off,
            )
    lam = np.diag(A).copy()
    order = np.argsort(lam, kind="stable")
    lam = lam[order]
    V = V[:, order]
    Mf = M.to_float_array()
    residual = float(np.max(np.abs(Mf @ V - V * lam[None, :])))
    return NumericSpectrum(lam, V, residual)


def multiplicity_clusters(
    s: NumericSpectrum, gap_tol: float
) -> tuple[list[list[int]], float]:
    """Partition sorted eigenvalues into runs with consecutive gaps < gap_tol.

    Returns (clusters as index lists, minimum consecutive gap; inf if n <= 1).
    """
    if gap_tol <= 0:
        raise PreconditionError("gap_tol must be positive")
    lam = s.eigenvalues
    clusters = [[0]]
    min_gap = float("inf")
    for i in range(1, len(lam)):
        gap = float(lam[i] - lam[i - 1])
        min_gap = min(min_gap, gap)
        if gap < gap_tol:
            clusters[-1].append(i)
        else:
            clusters.append([i])
    return clusters, min_gap


def simplicity_numeric(
    M: SymmetricMatrix, gap_tol: float = 1e-8, tol: float = 1e-12
) -> SimplicityVerdict:
    """Numeric screen: SimpleNumeric iff all clusters are singletons.

    gap_tol is relative to the spectral diameter (absolute floor 1 for a
    flat spectrum).
    """
    s = eigen_decompose(M, tol)
    diameter = float(s.eigenvalues[-1] - s.eigenvalues[0]) if M.n > 1 else 0.0
    abs_tol = gap_tol * max(1.0, diameter)
    clusters, min_gap = multiplicity_clusters(s, abs_tol)
    simple = all(len(c) == 1 for c in clusters)
    return SimplicityVerdict(
        tag="SimpleNumeric" if simple else "NotSimpleNumeric", min_gap=min_gap
    )


def reconcile(M: SymmetricMatrix, gap_tol: float = 1e-8) -> SimplicityVerdict:
    """Run both routes; on disagreement resolve in favor of exact."""
    exact = simplicity_exact(M)
    numeric = simplicity_numeric(M, gap_tol)
    if exact.is_simple != numeric.is_simple:
        # Disagreement: exact wins, but keep the numeric gap as evidence.
        return SimplicityVerdict(
            tag=exact.tag, min_gap=numeric.min_gap, certificate=exact.certificate
        )
    return SimplicityVerdict(
        tag=exact.tag, min_gap=numeric.min_gap, certificate=exact.certificate
    )
