"""Effective-frequency spectra of a single spin and their histograms."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ContractError, ResourceLimitError
from .model import CouplingModel

#: largest chain whose 2**(n-1) frequencies are materialised
SPECTRUM_CAP = 24

DEFAULT_BINS = 201

NORMALIZATIONS = ("unit-sum", "unit-max")


def effective_frequencies(model: CouplingModel, j: int, *, cap: int | None = None) -> np.ndarray:
    """
    All ``2**(n-1)`` effective frequencies ``omega = 2 sum_{i != j} J_ij s_i`` of spin ``j``.

    Values come in outside-configuration integer order: bit ``b`` of the index
    is the ``b``-th outside spin counted in increasing spin index.
    """
    if int(j) != j or not 1 <= j <= model.n:
        raise ContractError(f"spin index must be in [1, {model.n}], got {j!r}")
    cap = SPECTRUM_CAP if cap is None else cap
    if model.n > cap:
        raise ResourceLimitError("spectrum chain size n", model.n, cap)
    weights = np.delete(model.couplings[j - 1], j - 1)
    return kernels.enumerate_frequencies(np.ascontiguousarray(weights))


def frequency_variance(model: CouplingModel, j: int) -> float:
    """Closed-form variance ``4 sum_{i != j} J_ij**2`` of the frequency multiset."""
    return 4.0 * float(np.sum(model.couplings[j - 1] ** 2))


@dataclass(frozen=True)
class FrequencyHistogram:
    bin_edges: np.ndarray
    mass: np.ndarray
    normalization: str
    count: int
    model: CouplingModel | None = None
    spin: int | None = None

    @property
    def bin_left(self) -> np.ndarray:
        return self.bin_edges[:-1]

    @property
    def bin_right(self) -> np.ndarray:
        return self.bin_edges[1:]


def symmetric_edges(freqs: np.ndarray, bins: int) -> np.ndarray:
    """``bins + 1`` edges spanning ``[-max|omega|, +max|omega|]``."""
    top = float(np.max(np.abs(freqs)))
    if top == 0.0:
        top = 1.0
    edges = np.linspace(-top, top, bins + 1)
    # linspace rounding can leave the outer edges a hair inside +-top
    edges[0], edges[-1] = -top, top
    return edges


def histogram(freqs, bins=DEFAULT_BINS, normalization: str = "unit-sum",
              model: CouplingModel | None = None, spin: int | None = None) -> FrequencyHistogram:
    """
    Bin a frequency multiset.

    Bins are left-closed and right-open except the last, which is closed.
    ``bins`` is a bin count (symmetric about zero) or explicit edges.

    ``unit-sum`` divides counts by the number of frequencies; ``unit-max``
    divides by the tallest bin. Either reading fits a histogram "normalized
    to one", so both are offered.
    """
    freqs = np.asarray(freqs, dtype=np.float64).reshape(-1)
    if freqs.size == 0:
        raise ContractError("cannot histogram an empty frequency set")
    if normalization not in NORMALIZATIONS:
        raise ContractError(f"unknown normalization {normalization!r}; expected one of {NORMALIZATIONS}")
    if np.ndim(bins) == 0:
        if int(bins) < 1:
            raise ContractError(f"need at least one bin, got {bins}")
        edges = symmetric_edges(freqs, int(bins))
    else:
        edges = np.asarray(bins, dtype=np.float64)
        if edges.size < 2 or np.any(np.diff(edges) <= 0):
            raise ContractError("bin edges must be strictly increasing with at least two entries")
        if freqs.min() < edges[0] or freqs.max() > edges[-1]:
            raise ContractError("frequencies fall outside the given bin edges")
    counts, _ = np.histogram(freqs, bins=edges)
    if normalization == "unit-sum":
        mass = counts / float(freqs.size)
    else:
        mass = counts / float(counts.max())
    return FrequencyHistogram(edges, mass, normalization, int(freqs.size), model, spin)


def spectrum_histogram(model: CouplingModel, j: int, bins=DEFAULT_BINS,
                       normalization: str = "unit-sum") -> FrequencyHistogram:
    """Histogram of :func:`effective_frequencies` for spin ``j``."""
    return histogram(effective_frequencies(model, j), bins, normalization, model, j)
