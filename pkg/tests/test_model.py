import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lrcoherence import ContractError, CouplingModel, SpinConfig, coupling, eigenenergy, energies
from lrcoherence.model import BlockSpec, max_energy


@pytest.mark.parametrize(
    "model, i, j, expected",
    [
        (CouplingModel(5, 1.0, 3.0), 1, 2, 1.0),
        (CouplingModel(5, 1.0, 3.0), 1, 3, 0.125),
        (CouplingModel(5, 1.0, 1.0, 1), 1, 3, 0.0),
        (CouplingModel(5, 2.0, 0.0), 1, 5, 2.0),
    ],
)
def test_coupling_examples(model, i, j, expected):
    assert coupling(model, i, j) == expected


@pytest.mark.parametrize("i, j", [(0, 1), (1, 6), (2, 2)])
def test_coupling_rejects_bad_indices(i, j):
    with pytest.raises(ContractError):
        coupling(CouplingModel(5, 1.0, 1.0), i, j)


@pytest.mark.parametrize(
    "kwargs",
    [dict(n=1), dict(n=4, j=0.0), dict(n=4, alpha=-0.5), dict(n=4, truncation=0), dict(n=4, truncation=4)],
)
def test_model_invariants(kwargs):
    with pytest.raises(ContractError):
        CouplingModel(**kwargs)


@pytest.mark.parametrize(
    "text, expected", [("111", 2.5), ("101", -1.5), ("000", 2.5)]
)
def test_eigenenergy_examples(text, expected):
    assert eigenenergy(CouplingModel(3, 1.0, 1.0), SpinConfig.from_string(text)) == expected


def test_spin_config_bits():
    c = SpinConfig.from_string("100")
    assert c.bits == 1
    assert c.sigma(1) == 1 and c.sigma(2) == 0
    np.testing.assert_array_equal(c.spins(), [1, -1, -1])
    assert c.flipped().bits == 0b110
    with pytest.raises(ContractError):
        SpinConfig(8, 3)


@given(
    n=st.integers(2, 12),
    alpha=st.floats(0.0, 3.0),
    data=st.data(),
)
def test_coupling_symmetry_and_truncation_consistency(n, alpha, data):
    i = data.draw(st.integers(1, n))
    j = data.draw(st.integers(1, n).filter(lambda x: x != i))
    exact = CouplingModel(n, 1.0, alpha)
    full = CouplingModel(n, 1.0, alpha, n - 1)
    assert coupling(exact, i, j) == coupling(exact, j, i)
    assert coupling(full, i, j) == coupling(exact, i, j)


@given(d=st.integers(2, 15), a=st.floats(0.0, 2.9), gap=st.floats(0.01, 1.0))
def test_coupling_strictly_decreasing_in_alpha(d, a, gap):
    lo = CouplingModel(d + 1, 1.0, a)
    hi = CouplingModel(d + 1, 1.0, a + gap)
    assert coupling(hi, 1, d + 1) < coupling(lo, 1, d + 1)


@pytest.mark.parametrize("n", [2, 5, 9, 12])
@pytest.mark.parametrize("alpha", [0.0, 0.7, 3.0])
def test_flip_symmetry_and_energy_bounds(n, alpha):
    model = CouplingModel(n, 1.0, alpha)
    words = np.arange(1 << n)
    e = energies(model, words)
    e_flip = energies(model, words ^ ((1 << n) - 1))
    np.testing.assert_array_equal(e, e_flip)
    bound = max_energy(model)
    assert np.all(np.abs(e) <= bound + 1e-12)
    assert e[-1] == pytest.approx(bound, abs=1e-12)


@settings(max_examples=50)
@given(n=st.integers(2, 10), alpha=st.floats(0.0, 3.0), data=st.data())
def test_vectorised_energy_matches_scalar(n, alpha, data):
    model = CouplingModel(n, 1.0, alpha)
    bits = data.draw(st.integers(0, (1 << n) - 1))
    assert energies(model, [bits])[0] == eigenenergy(model, SpinConfig(bits, n))


def test_block_spec():
    b = BlockSpec.centered(20, 10)
    assert (b.start, b.stop) == (6, 15)
    assert BlockSpec.centered(20, 4).inside() == [9, 10, 11, 12]
    assert BlockSpec(3, 2).outside(5) == [1, 2, 5]
    with pytest.raises(ContractError):
        BlockSpec(18, 4).validate(CouplingModel(20))
