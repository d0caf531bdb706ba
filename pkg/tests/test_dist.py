import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from simplespectrum.dist import (
    AtomicDistribution,
    bernoulli_half,
    make_distribution,
    nontriviality_margin,
    rademacher,
)
from simplespectrum.errors import DistributionError


def test_rademacher():
    d = make_distribution([-1, 1], [Fraction(1, 2), Fraction(1, 2)])
    assert d.atoms == (Fraction(-1), Fraction(1))
    assert nontriviality_margin(d) == Fraction(1, 2)


def test_bernoulli_half_margin():
    assert nontriviality_margin(bernoulli_half()) == Fraction(1, 2)


def test_duplicate_atoms_merge():
    d = make_distribution([3, 3], [Fraction(1, 2), Fraction(1, 2)])
    assert d.atoms == (Fraction(3),)
    assert d.probs == (Fraction(1),)
    assert nontriviality_margin(d) == 0
    assert d.is_trivial


def test_atoms_sorted():
    d = make_distribution([5, -1, 2], ["1/3", "1/3", "1/3"])
    assert d.atoms == (Fraction(-1), Fraction(2), Fraction(5))


def test_length_mismatch():
    with pytest.raises(DistributionError):
        make_distribution([1, 2], [1])


def test_nonpositive_probability():
    with pytest.raises(DistributionError):
        make_distribution([1, 2], [Fraction(3, 2), Fraction(-1, 2)])


def test_probs_must_sum_to_one():
    with pytest.raises(DistributionError):
        make_distribution([1, 2], [Fraction(1, 2), Fraction(1, 3)])


def test_idempotent():
    d = make_distribution([0, 1, 1], [Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)])
    again = make_distribution(d.atoms, d.probs)
    assert again == d


def test_json_roundtrip():
    d = rademacher()
    blob = json.dumps(d.to_json())
    assert AtomicDistribution.from_json(blob) == d
    assert d.to_json() == {"atoms": ["-1", "1"], "probs": ["1/2", "1/2"]}


@given(
    st.lists(
        st.tuples(
            st.integers(-20, 20),
            st.integers(1, 50),
        ),
        min_size=1,
        max_size=6,
    )
)
def test_margin_range(pairs):
    atoms = [a for a, _ in pairs]
    weights = [w for _, w in pairs]
    total = sum(weights)
    d = make_distribution(atoms, [Fraction(w, total) for w in weights])
    mu = nontriviality_margin(d)
    k = len(d.atoms)
    assert 0 <= mu <= 1 - Fraction(1, k)
    assert (mu == 0) == (k == 1)
    assert sum(d.probs) == 1
