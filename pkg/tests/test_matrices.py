from fractions import Fraction

import pytest

from simplespectrum.dist import bernoulli_half, rademacher, zero_atom
from simplespectrum.errors import PreconditionError
from simplespectrum.matrices import (
    EnsembleSpec,
    SymmetricMatrix,
    graph_from_index,
    minor_decompose,
    sample_matrix,
    trial_rng,
)

GNP = EnsembleSpec(offdiag=bernoulli_half(), diag=zero_atom())
SIGN = EnsembleSpec(offdiag=rademacher(), diag=rademacher())


def test_sample_is_symmetric_adjacency():
    M = sample_matrix(GNP, 3, trial_rng(0, 0))
    for i in range(3):
        assert M[i, i] == 0
        for j in range(3):
            assert M[i, j] == M[j, i]
            assert M[i, j] in (0, 1)


def test_sample_n1_uses_diag_only():
    M = sample_matrix(SIGN, 1, trial_rng(0, 0))
    assert M.n == 1
    assert M[0, 0] in (-1, 1)


def test_sample_deterministic():
    a = sample_matrix(SIGN, 2, trial_rng(7, 3))
    b = sample_matrix(SIGN, 2, trial_rng(7, 3))
    assert a == b


def test_sample_rejects_n0():
    with pytest.raises(PreconditionError):
        sample_matrix(SIGN, 0, trial_rng(0, 0))


def test_graph_from_index_examples():
    assert graph_from_index(2, 0).entries == ((0, 0), (0, 0))
    assert graph_from_index(2, 1).entries == ((0, 1), (1, 0))
    K3 = graph_from_index(3, 7)
    assert K3.entries == ((0, 1, 1), (1, 0, 1), (1, 1, 0))


def test_graph_from_index_out_of_range():
    with pytest.raises(PreconditionError):
        graph_from_index(2, 2)
    with pytest.raises(PreconditionError):
        graph_from_index(3, -1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_graph_index_bijection(n):
    total = 1 << (n * (n - 1) // 2)
    seen = {graph_from_index(n, i).entries for i in range(total)}
    assert len(seen) == total


def test_minor_decompose_k3():
    split = minor_decompose(graph_from_index(3, 7))
    assert split.minor.entries == ((0, 1), (1, 0))
    assert split.x == (1, 1)
    assert split.corner == 0
    assert split.reassemble() == graph_from_index(3, 7)


def test_minor_decompose_diag():
    M = SymmetricMatrix.from_rows([[1, 0], [0, 2]])
    split = minor_decompose(M)
    assert split.minor.entries == ((1,),)
    assert split.x == (0,)
    assert split.corner == 2


def test_minor_decompose_2x2_general():
    M = SymmetricMatrix.from_rows([["1/2", 3], [3, -7]])
    split = minor_decompose(M)
    assert split.minor.entries == ((Fraction(1, 2),),)
    assert split.x == (3,)
    assert split.corner == -7
    assert split.reassemble() == M


def test_minor_needs_n2():
    with pytest.raises(PreconditionError):
        minor_decompose(SymmetricMatrix.from_rows([[1]]))


def test_reassembly_roundtrip_samples():
    for t in range(20):
        M = sample_matrix(SIGN, 5, trial_rng(11, t))
        assert minor_decompose(M).reassemble() == M


def test_entry_frequency_four_sigma():
    # Entry (0,1) over 10^4 samples should match Bernoulli(1/2) within
    # 4 sigma of the binomial deviation.
    trials = 10**4
    ones = sum(
        int(sample_matrix(GNP, 3, trial_rng(42, t))[0, 1]) for t in range(trials)
    )
    sigma = (trials * 0.25) ** 0.5
    assert abs(ones - trials / 2) <= 4 * sigma


def test_json_roundtrip():
    M = sample_matrix(SIGN, 4, trial_rng(1, 1))
    assert SymmetricMatrix.from_json(M.to_json()) == M


def test_text_format():
    M = SymmetricMatrix.from_text("0 1 1\n1 0 1\n1 1 0\n")
    assert M == graph_from_index(3, 7)


def test_asymmetric_rejected():
    with pytest.raises(PreconditionError):
        SymmetricMatrix.from_rows([[0, 1], [2, 0]])
