"""
Coherence dynamics of a single spin or a contiguous block after the quench.

The chain starts in the all-z-up state, an equal-weight superposition of
every x-basis eigenstate, and then evolves under the diagonal Ising
Hamiltonian. Everything here is a function of that fixed initial condition.

Each quantity has two routes:

* ``brute``: enumerate outside configurations and sum phases of exact
  eigenenergy differences. Exponential cost, capped, used as an oracle.
* ``factorized``: averaging over independent outside signs turns each phase
  sum into a product of cosines, ``O(N)`` per entry and time point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from . import kernels
from ._pykernels import difference_patterns
from .errors import ContractError, ResourceLimitError
from .model import BlockSpec, CouplingModel, energies

#: largest chain handled by the brute-force enumeration paths
BRUTE_CAP = 20
#: largest block whose density matrix or difference patterns are built
MATRIX_CAP = 12

METHODS = ("factorized", "brute")

Target = Union[int, BlockSpec]


def _check_spin(model: CouplingModel, j: int) -> None:
    if int(j) != j or not 1 <= j <= model.n:
        raise ContractError(f"spin index must be in [1, {model.n}], got {j!r}")


def _check_brute(model: CouplingModel, cap: int | None) -> None:
    cap = BRUTE_CAP if cap is None else cap
    if model.n > cap:
        raise ResourceLimitError("brute-force chain size n", model.n, cap)


def _check_block(model: CouplingModel, block: BlockSpec, cap: int | None) -> None:
    block.validate(model)
    cap = MATRIX_CAP if cap is None else cap
    if block.size > cap:
        raise ResourceLimitError("block size", block.size, cap)


def _as_times(t):
    arr = np.asarray(t, dtype=np.float64)
    return arr.reshape(-1), arr.ndim == 0


def _restore(values: np.ndarray, scalar: bool):
    return float(values[0]) if scalar else values


def _embed(outside_words: np.ndarray, positions: list[int]) -> np.ndarray:
    """Scatter compressed outside words onto the given 0-based bit positions."""
    full = np.zeros_like(outside_words)
    for b, pos in enumerate(positions):
        full |= ((outside_words >> b) & 1) << pos
    return full


# ---------------------------------------------------------------------------
# single spin
# ---------------------------------------------------------------------------

def single_spin_frequencies_brute(model: CouplingModel, j: int, *, cap: int | None = None) -> np.ndarray:
    """
    Effective frequencies of spin ``j`` from exact eigenenergy differences.

    ``omega_l = E(outside_l, sigma_j = 1) - E(outside_l, sigma_j = 0)`` in
    outside-configuration integer order.
    """
    _check_spin(model, j)
    _check_brute(model, cap)
    outside = [i - 1 for i in range(1, model.n + 1) if i != j]
    words = _embed(np.arange(1 << (model.n - 1), dtype=np.int64), outside)
    up = words | (1 << (j - 1))
    return energies(model, up) - energies(model, words)


def coherence_single_brute(model: CouplingModel, j: int, t, *, cap: int | None = None):
    """``C(t) = |sum_l exp(i omega_l t)| / 2**(N-1)`` by full enumeration."""
    times, scalar = _as_times(t)
    omega = single_spin_frequencies_brute(model, j, cap=cap)
    values = kernels.phase_sum_modulus(omega, times) / float(omega.size)
    return _restore(values, scalar)


def coherence_single_factorized(model: CouplingModel, j: int, t):
    """``C(t) = prod_{i != j} |cos(2 J_ij t)|``."""
    _check_spin(model, j)
    times, scalar = _as_times(t)
    row = model.couplings[j - 1]
    values = np.ones_like(times)
    # multiply by distance, left*right first: mirrored spins get bit-identical results
    for d in range(1, model.n):
        left = np.abs(np.cos(2.0 * row[j - 1 - d] * times)) if j - 1 - d >= 0 else 1.0
        right = np.abs(np.cos(2.0 * row[j - 1 + d] * times)) if j - 1 + d < model.n else 1.0
        values = values * (left * right)
    return _restore(values, scalar)


# ---------------------------------------------------------------------------
# block
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ReducedDensityMatrix:
    """Reduced state of a block, indexed by the inside configuration word."""

    entries: np.ndarray
    block: BlockSpec
    t: float

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def coherence(self) -> float:
        """Sum of off-diagonal moduli."""
        mags = np.abs(self.entries)
        return float(mags.sum() - np.trace(mags))

    def hermiticity_error(self) -> float:
        return float(np.max(np.abs(self.entries - self.entries.conj().T)))

    def trace(self) -> complex:
        return complex(np.trace(self.entries))

    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.entries).min())


def _inside_spins(block: BlockSpec) -> np.ndarray:
    """``(2**size, size)`` spin values of every inside word, bit k = spin start+k."""
    words = np.arange(1 << block.size)
    return (2 * ((words[:, None] >> np.arange(block.size)) & 1) - 1).astype(np.float64)


def _inside_outside_couplings(model: CouplingModel, block: BlockSpec):
    inside = [i - 1 for i in block.inside()]
    outside = [i - 1 for i in block.outside(model.n)]
    jm = model.couplings
    return jm[np.ix_(inside, inside)], jm[np.ix_(outside, inside)]


def _rdm_brute(model: CouplingModel, block: BlockSpec, t: float, cap: int | None) -> np.ndarray:
    _check_brute(model, cap)
    n_out = model.n - block.size
    outside = [i - 1 for i in block.outside(model.n)]
    out_words = _embed(np.arange(1 << n_out, dtype=np.int64), outside)
    in_words = np.arange(1 << block.size, dtype=np.int64) << (block.start - 1)
    e = energies(model, in_words[:, None] | out_words[None, :])
    return kernels.density_matrix_sum(e, float(t)) / float(1 << model.n)


def _rdm_factorized(model: CouplingModel, block: BlockSpec, t: float) -> np.ndarray:
    j_in, j_out = _inside_outside_couplings(model, block)
    s = _inside_spins(block)
    e_in = 0.5 * np.einsum("ai,ij,aj->a", s, j_in, s)
    # local field of each outside spin per inside word; h_i(a, b) = f[a, i] - f[b, i]
    f = s @ j_out.T
    dim = s.shape[0]
    mags = np.empty((dim, dim))
    rows = max(1, (1 << 22) // max(dim * f.shape[1], 1))
    for lo in range(0, dim, rows):
        h = f[lo:lo + rows, None, :] - f[None, :, :]
        mags[lo:lo + rows] = np.cos(t * h).prod(axis=2)
    phase = np.exp(-1j * t * (e_in[:, None] - e_in[None, :]))
    return phase * mags / float(dim)


def reduced_density_matrix(model: CouplingModel, block: BlockSpec, t: float,
                           method: str = "factorized", *, cap: int | None = None,
                           brute_cap: int | None = None) -> ReducedDensityMatrix:
    """
    Reduced density matrix of ``block`` at time ``t``.

    Entry ``(a, b)`` is ``2**-N sum_s exp(-i [E(a, s) - E(b, s)] t)`` over
    outside configurations ``s``; ``a`` and ``b`` are inside words with bit
    ``k`` holding spin ``block.start + k``.
    """
    _check_block(model, block, cap)
    if method == "brute":
        entries = _rdm_brute(model, block, t, brute_cap)
    elif method == "factorized":
        entries = _rdm_factorized(model, block, t)
    else:
        raise ContractError(f"unknown method {method!r}; expected one of {METHODS}")
    return ReducedDensityMatrix(entries, block, float(t))


def _pattern_path(model: CouplingModel, block: BlockSpec, times: np.ndarray) -> np.ndarray:
    _, j_out = _inside_outside_couplings(model, block)
    return kernels.block_pattern_sum(np.ascontiguousarray(j_out), times) / float(1 << block.size)


def coherence_block(model: CouplingModel, block: BlockSpec, t, method: str = "factorized",
                    *, cap: int | None = None, brute_cap: int | None = None):
    """
    Coherence ``sum_{a != b} |rho_ab|`` of a block.

    ``factorized`` aggregates over difference patterns,
    ``C = 2**-N_I sum_{d != 0} 2**zeros(d) prod_out |cos(t h(d))|``;
    ``brute`` sums the brute-force density matrix.
    """
    _check_block(model, block, cap)
    times, scalar = _as_times(t)
    if method == "factorized":
        values = _pattern_path(model, block, times)
    elif method == "brute":
        values = np.array([
            reduced_density_matrix(model, block, tt, "brute", cap=cap, brute_cap=brute_cap).coherence()
            for tt in times
        ])
    else:
        raise ContractError(f"unknown method {method!r}; expected one of {METHODS}")
    return _restore(values, scalar)


def initial_coherence(target: Target) -> float:
    """Exact ``C(0)``: 1 for a spin, ``2**N_I - 1`` for a block."""
    if isinstance(target, BlockSpec):
        return float((1 << target.size) - 1)
    return 1.0


# ---------------------------------------------------------------------------
# series and diagnostics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoherenceSeries:
    times: np.ndarray
    values: np.ndarray
    normalized: bool
    model: CouplingModel
    target: Target
    method: str = "factorized"
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if len(self.times) != len(self.values):
            raise ContractError("times and values differ in length")

    @property
    def initial(self) -> float:
        """``C(0)`` on this series' scale."""
        return 1.0 if self.normalized else initial_coherence(self.target)


def time_grid(t_max: float, steps: int) -> np.ndarray:
    """``steps`` uniform points on ``[0, t_max]``."""
    if steps < 2 or not t_max > 0:
        raise ContractError(f"need steps >= 2 and t_max > 0, got steps={steps}, t_max={t_max}")
    return np.linspace(0.0, float(t_max), int(steps))


def coherence_series(model: CouplingModel, target: Target, times, normalized: bool = False,
                     method: str = "factorized") -> CoherenceSeries:
    """Evaluate single-spin or block coherence on a time grid."""
    times = np.asarray(times, dtype=np.float64).reshape(-1)
    if times.size == 0:
        raise ContractError("empty time grid")
    if times.size > 1 and np.any(np.diff(times) <= 0):
        raise ContractError("time grid must be strictly increasing")
    if method not in METHODS:
        raise ContractError(f"unknown method {method!r}; expected one of {METHODS}")

    if isinstance(target, BlockSpec):
        values = coherence_block(model, target, times, method)
    elif method == "brute":
        values = coherence_single_brute(model, target, times)
    else:
        values = coherence_single_factorized(model, target, times)
    if normalized:
        values = values / initial_coherence(target)
    return CoherenceSeries(times, np.asarray(values), normalized, model, target, method)


def relaxation_time(series: CoherenceSeries, recurrence_tol: float = 1e-2) -> float | None:
    """
    Time at which coherence first falls to ``C(0)/e``, or ``None`` if it does not relax.

    The crossing is linearly interpolated between the bracketing samples. A
    crossing that is followed, within the grid, by a recurrence to at least
    ``(1 - recurrence_tol) * C(0)`` does not count as relaxation: coherence
    that fully resurrects is periodic, not decaying.
    """
    t = np.asarray(series.times)
    c = np.asarray(series.values)
    if t.size < 2:
        raise ContractError("relaxation_time needs at least 2 samples")
    c0 = series.initial
    threshold = c0 / math.e
    below = np.flatnonzero(c <= threshold)
    if below.size == 0:
        return None
    k = int(below[0])
    if np.any(c[k:] >= (1.0 - recurrence_tol) * c0):
        return None
    if k == 0:
        return float(t[0])
    t0, t1, c_0, c_1 = t[k - 1], t[k], c[k - 1], c[k]
    return float(t0 + (c_0 - threshold) * (t1 - t0) / (c_0 - c_1))


def max_revival(series: CoherenceSeries) -> float | None:
    """Largest value after the first ``C(0)/e`` crossing, or ``None`` without a crossing."""
    c = np.asarray(series.values)
    below = np.flatnonzero(c <= series.initial / math.e)
    if below.size == 0:
        return None
    return float(c[below[0]:].max())


def steady_state(series: CoherenceSeries, fraction: float = 0.25) -> float:
    """Mean over the final ``fraction`` of the grid."""
    c = np.asarray(series.values)
    k = max(1, int(round(fraction * c.size)))
    return float(c[-k:].mean())
