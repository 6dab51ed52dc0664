"""
Pure numpy versions of the compiled kernels in ``_ckernels.pyx``.

Same signatures and semantics. Reductions use numpy's pairwise summation,
so the last bits can differ from the compiled sequential sums; each backend
is deterministic on its own.
"""

import numpy as np

# elements per temporary block in the chunked kernels
_BLOCK = 1 << 21


def enumerate_frequencies(weights):
    weights = np.ascontiguousarray(weights, dtype=np.float64)
    acc = np.zeros(1)
    # doubling keeps integer order: the new bit b is the high half;
    # additions happen bit 0 first, matching the compiled loop
    for w in weights:
        acc = np.concatenate((acc + (-w), acc + w))
    return 2.0 * acc


def phase_sum_modulus(freqs, times):
    freqs = np.ascontiguousarray(freqs, dtype=np.float64)
    times = np.ascontiguousarray(times, dtype=np.float64)
    out = np.empty(times.size)
    rows = max(1, _BLOCK // max(freqs.size, 1))
    for lo in range(0, times.size, rows):
        ph = np.multiply.outer(times[lo:lo + rows], freqs)
        out[lo:lo + rows] = np.hypot(np.cos(ph).sum(axis=1), np.sin(ph).sum(axis=1))
    return out


def pattern_coherence(fields, weights, times):
    fields = np.ascontiguousarray(fields, dtype=np.float64)
    weights = np.ascontiguousarray(weights, dtype=np.float64)
    times = np.ascontiguousarray(times, dtype=np.float64)
    out = np.empty(times.size)
    rows = max(1, _BLOCK // max(fields.size, 1))
    for lo in range(0, times.size, rows):
        t = times[lo:lo + rows, None, None]
        mags = np.abs(np.cos(t * fields[None])).prod(axis=2)
        out[lo:lo + rows] = (mags * weights).sum(axis=1)
    return out


def density_matrix_sum(energies, t):
    energies = np.ascontiguousarray(energies, dtype=np.float64)
    na = energies.shape[0]
    out = np.empty((na, na), dtype=np.complex128)
    rows = max(1, _BLOCK // max(energies.size, 1))
    for lo in range(0, na, rows):
        ph = (energies[lo:lo + rows, None, :] - energies[None, :, :]) * t
        out[lo:lo + rows] = np.cos(ph).sum(axis=2) - 1j * np.sin(ph).sum(axis=2)
    return out


def difference_patterns(block_size):
    """
    Half of the nonzero difference patterns ``d in {-2, 0, 2}**size``.

    Only patterns whose first nonzero entry is ``+2`` are kept, since ``d`` and
    ``-d`` give equal entry moduli. Returns ``(patterns, pair_counts)`` where
    ``pair_counts`` is the number of ordered ``(a, b)`` pairs represented:
    ``2 * 2**zeros(d)``.
    """
    codes = np.arange(3 ** block_size)
    digits = (codes[:, None] // 3 ** np.arange(block_size - 1, -1, -1)) % 3
    patterns = np.array([0.0, 2.0, -2.0])[digits]
    # sign of the first nonzero entry per row
    first = np.take_along_axis(patterns, np.argmax(digits != 0, axis=1)[:, None], axis=1)[:, 0]
    patterns = patterns[first > 0]
    zeros = (patterns == 0).sum(axis=1)
    return patterns, 2.0 * np.exp2(zeros)


def block_pattern_sum(j_out, times):
    j_out = np.ascontiguousarray(j_out, dtype=np.float64)
    patterns, counts = difference_patterns(j_out.shape[1])
    fields = np.ascontiguousarray(patterns @ j_out.T)
    return pattern_coherence(fields, counts, times)
