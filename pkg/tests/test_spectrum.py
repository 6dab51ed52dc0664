import math
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lrcoherence import ContractError, CouplingModel, ResourceLimitError, effective_frequencies, histogram
from lrcoherence.coherence import single_spin_frequencies_brute
from lrcoherence.spectrum import frequency_variance, spectrum_histogram


def test_three_spin_nearest_neighbour():
    f = effective_frequencies(CouplingModel(3, 1.0, 1.0, 1), 2)
    assert sorted(f.tolist()) == [-4.0, 0.0, 0.0, 4.0]


@pytest.mark.parametrize("n, alpha, j", [(6, 1.3, 1), (9, 0.4, 5), (11, 2.7, 11)])
def test_frequencies_match_eigenenergy_differences(n, alpha, j):
    m = CouplingModel(n, 1.0, alpha)
    np.testing.assert_allclose(effective_frequencies(m, j), single_spin_frequencies_brute(m, j), atol=1e-12)


@settings(max_examples=30, deadline=None)
@given(n=st.integers(2, 14), alpha=st.floats(0.0, 3.0), data=st.data())
def test_count_negation_and_moments(n, alpha, data):
    j = data.draw(st.integers(1, n))
    m = CouplingModel(n, 1.0, alpha)
    f = effective_frequencies(m, j)
    assert f.size == 2 ** (n - 1)
    # the complement index flips every outside sign
    np.testing.assert_array_equal(f[::-1], -f)
    assert math.fsum(f) == 0.0
    assert np.var(f) == pytest.approx(frequency_variance(m, j), abs=1e-9)


def test_range_one_interior_collapse():
    f = effective_frequencies(CouplingModel(20, 1.0, 3.0, 1), 10)
    counts = Counter(f.tolist())
    assert sorted(counts) == [-4.0, 0.0, 4.0]
    total = 2 ** 19
    assert (counts[-4.0] / total, counts[0.0] / total, counts[4.0] / total) == (0.25, 0.5, 0.25)


@pytest.mark.parametrize("alpha", [1.0, 2.5])
def test_range_two_interior_collapse(alpha):
    f = effective_frequencies(CouplingModel(12, 1.0, alpha, 2), 6)
    # brute enumeration of the four active neighbours' signs
    c2 = 1.0 / 2.0 ** alpha
    expected = set()
    for a in (-1, 1):
        for b in (-1, 1):
            for c in (-1, 1):
                for d in (-1, 1):
                    expected.add(round(2 * (a + b + c * c2 + d * c2), 12))
    assert {round(x, 12) for x in f} == expected
    # 9 (near, next) sign-sum combinations; they stay distinct unless 2**-alpha is commensurate
    assert len(expected) == (7 if alpha == 1.0 else 9)


def test_uniform_coupling_degeneracy():
    n = 12
    f = effective_frequencies(CouplingModel(n, 1.0, 0.0), 4)
    counts = Counter(f.tolist())
    expected = {2.0 * m: math.comb(n - 1, (m + n - 1) // 2) for m in range(-(n - 1), n, 2)}
    assert dict(counts) == expected


def test_spectrum_cap():
    with pytest.raises(ResourceLimitError, match="cap of 24"):
        effective_frequencies(CouplingModel(25), 1)
    with pytest.raises(ContractError):
        effective_frequencies(CouplingModel(5), 6)


def test_histogram_examples():
    f = [-4.0, 0.0, 0.0, 4.0]
    h = histogram(f, 3, "unit-sum")
    assert h.mass.tolist() == [0.25, 0.5, 0.25]
    assert h.bin_edges[0] == -4.0 and h.bin_edges[-1] == 4.0
    assert histogram(f, 3, "unit-max").mass.tolist() == [0.5, 1.0, 0.5]


def test_histogram_explicit_edges_half_open():
    h = histogram([0.0, 1.0, 1.0, 2.0], [0.0, 1.0, 2.0])
    # 1.0 falls in the second bin, 2.0 in the closed last bin
    assert h.mass.tolist() == [0.25, 0.75]
    with pytest.raises(ContractError):
        histogram([3.0], [0.0, 1.0])
    with pytest.raises(ContractError):
        histogram([0.5], [1.0, 0.0])


def test_histogram_errors():
    with pytest.raises(ContractError):
        histogram([], 3)
    with pytest.raises(ContractError):
        histogram([1.0], 0)
    with pytest.raises(ContractError):
        histogram([1.0], 3, "unit-area")


def test_histogram_all_zero_frequencies():
    h = histogram([0.0, 0.0], 3)
    assert h.mass.tolist() == [0.0, 1.0, 0.0]


@settings(max_examples=30, deadline=None)
@given(alpha=st.floats(0.05, 3.0), bins=st.integers(1, 301), seed=st.integers(0, 2 ** 16))
def test_histogram_invariants(alpha, bins, seed):
    m = CouplingModel(10, 1.0, alpha)
    f = effective_frequencies(m, 5)
    h = histogram(f, bins)
    assert abs(h.mass.sum() - 1.0) < 1e-12
    assert np.all(np.diff(h.bin_edges) > 0)
    assert h.bin_edges[0] <= f.min() and f.max() <= h.bin_edges[-1]
    assert histogram(f, bins, "unit-max").mass.max() == 1.0
    shuffled = np.random.default_rng(seed).permutation(f)
    np.testing.assert_array_equal(histogram(shuffled, bins).mass, h.mass)


def test_spectrum_histogram_symmetric():
    h = spectrum_histogram(CouplingModel(14, 1.0, 1.7), 7, bins=51)
    np.testing.assert_allclose(h.mass, h.mass[::-1], atol=1e-15)
    assert h.count == 2 ** 13
