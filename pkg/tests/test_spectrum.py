from fractions import Fraction

import numpy as np
import pytest

from simplespectrum.dist import rademacher
from simplespectrum.matrices import (
    EnsembleSpec,
    SymmetricMatrix,
    graph_from_index,
    sample_matrix,
    trial_rng,
)
from simplespectrum.spectrum import (
    CharPoly,
    char_poly,
    eigen_decompose,
    multiplicity_clusters,
    simplicity_exact,
    simplicity_numeric,
)

SIGN = EnsembleSpec(offdiag=rademacher(), diag=rademacher())
K3 = graph_from_index(3, 7)


def cofactor_char_poly(M: SymmetricMatrix) -> list[Fraction]:
    """Independent oracle: expand det(xI - M) by cofactors over Fraction
    polynomials (coefficient lists, constant first)."""

    def pmul(a, b):
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return out

    def padd(a, b):
        out = [Fraction(0)] * max(len(a), len(b))
        for i, c in enumerate(a):
            out[i] += c
        for i, c in enumerate(b):
            out[i] += c
        return out

    def det(rows):
        n = len(rows)
        if n == 1:
            return rows[0][0]
        acc = [Fraction(0)]
        for j in range(n):
            minor = [
                [rows[i][jj] for jj in range(n) if jj != j]
                for i in range(1, n)
            ]
            term = pmul(rows[0][j], det(minor))
            if j % 2:
                term = [-c for c in term]
            acc = padd(acc, term)
        return acc

    n = M.n
    rows = [
        [
            [Fraction(-M[i, j]), Fraction(1)] if i == j else [Fraction(-M[i, j])]
            for j in range(n)
        ]
        for i in range(n)
    ]
    p = det(rows)
    return p + [Fraction(0)] * (n + 1 - len(p))


def test_char_poly_diag():
    M = SymmetricMatrix.from_rows([[1, 0], [0, 2]])
    assert char_poly(M).coeffs == (Fraction(2), Fraction(-3), Fraction(1))


def test_char_poly_k3():
    assert char_poly(K3).coeffs == (Fraction(-2), Fraction(-3), Fraction(0), Fraction(1))


def test_char_poly_zero():
    M = SymmetricMatrix.from_rows([[0, 0], [0, 0]])
    assert char_poly(M).coeffs == (Fraction(0), Fraction(0), Fraction(1))


def test_char_poly_rational_entries():
    M = SymmetricMatrix.from_rows([["1/2", "1/3"], ["1/3", "1/4"]])
    assert char_poly(M).coeffs == tuple(cofactor_char_poly(M))


@pytest.mark.parametrize("t", range(10))
def test_char_poly_matches_cofactor_oracle(t):
    M = sample_matrix(SIGN, 5, trial_rng(3, t))
    assert list(char_poly(M).coeffs) == cofactor_char_poly(M)


def test_char_poly_trace_coefficient():
    for t in range(10):
        M = sample_matrix(SIGN, 6, trial_rng(4, t))
        p = char_poly(M)
        assert p.coeffs[-1] == 1
        assert p.coeffs[-2] == -M.trace()


def test_adjacency_char_poly_integer():
    for idx in range(64):
        p = char_poly(graph_from_index(4, idx))
        assert all(c.denominator == 1 for c in p.coeffs)


def test_simplicity_diag():
    assert simplicity_exact(SymmetricMatrix.from_rows([[1, 0], [0, 2]])).tag == "SimpleExact"


def test_simplicity_k3_certificate():
    v = simplicity_exact(K3)
    assert v.tag == "NotSimpleExact"
    # certificate divisible by (x + 1): the repeated eigenvalue is -1
    cert = v.certificate
    acc = Fraction(0)
    for c in reversed(cert):
        acc = acc * Fraction(-1) + c
    assert acc == 0


def test_simplicity_zero_2x2():
    v = simplicity_exact(SymmetricMatrix.from_rows([[0, 0], [0, 0]]))
    assert v.tag == "NotSimpleExact"
    assert v.certificate == (Fraction(0), Fraction(1))  # x


def test_simplicity_permutation_invariant():
    for t in range(10):
        M = sample_matrix(SIGN, 5, trial_rng(5, t))
        perm = [4, 2, 0, 3, 1]
        assert simplicity_exact(M).tag == simplicity_exact(M.permuted(perm)).tag


def test_eigen_diag():
    s = eigen_decompose(SymmetricMatrix.from_rows([[1, 0], [0, 2]]))
    assert np.allclose(s.eigenvalues, [1, 2])
    assert np.allclose(np.abs(s.eigenvectors), np.eye(2))


def test_eigen_swap():
    s = eigen_decompose(SymmetricMatrix.from_rows([[0, 1], [1, 0]]))
    assert np.allclose(s.eigenvalues, [-1, 1])
    assert np.allclose(np.abs(s.eigenvectors), np.full((2, 2), 2**-0.5))


def test_eigen_k3():
    s = eigen_decompose(K3)
    assert np.allclose(s.eigenvalues, [-1, -1, 2], atol=1e-10)
    assert s.residual <= 1e-9 * (1 + 1) * 3
    assert np.allclose(s.eigenvectors.T @ s.eigenvectors, np.eye(3), atol=1e-10)


def test_eigen_conservation():
    for t in range(20):
        M = sample_matrix(SIGN, 8, trial_rng(6, t))
        s = eigen_decompose(M)
        tol = 1e-9 * 8 * float(M.max_abs_entry())
        assert abs(float(np.sum(s.eigenvalues)) - float(M.trace())) <= tol
        frob2 = sum(float(x) ** 2 for row in M.entries for x in row)
        assert abs(float(np.sum(s.eigenvalues**2)) - frob2) <= tol


def test_clusters_singletons():
    s = eigen_decompose(SymmetricMatrix.from_rows([[1, 0], [0, 2]]))
    clusters, min_gap = multiplicity_clusters(s, 1e-8)
    assert clusters == [[0], [1]]
    assert min_gap == pytest.approx(1.0)


def test_clusters_forced_merge():
    from simplespectrum.spectrum import NumericSpectrum

    s = NumericSpectrum(
        eigenvalues=np.array([-1.0, -1.0 + 1e-12, 2.0]),
        eigenvectors=np.eye(3),
        residual=0.0,
    )
    clusters, _ = multiplicity_clusters(s, 1e-8)
    assert [len(c) for c in clusters] == [2, 1]


def test_numeric_agrees_with_exact_random():
    for t in range(50):
        M = sample_matrix(SIGN, 10, trial_rng(8, t))
        assert simplicity_numeric(M).is_simple == simplicity_exact(M).is_simple


def test_char_poly_small_at_numeric_eigenvalues():
    for t in range(10):
        M = sample_matrix(SIGN, 8, trial_rng(9, t))
        p = char_poly(M)
        scale = max(abs(float(c)) for c in p.coeffs)
        s = eigen_decompose(M)
        for lam in s.eigenvalues:
            assert abs(p(float(lam))) / scale <= 1e-6


def test_char_poly_json():
    p = char_poly(K3)
    assert p.to_json() == ["-2", "-3", "0", "1"]
    assert CharPoly.from_json(p.to_json()) == p
