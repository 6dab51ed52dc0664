"""
Kernel backend selection.

The compiled Cython extension is used when it imports; otherwise the numpy
fallback is used. Setting ``LRCOHERENCE_BACKEND=python`` forces the fallback.
"""

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:
    _ckernels = None

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["cython"] = _ckernels

if os.getenv("LRCOHERENCE_BACKEND", "").lower() == "python" or _ckernels is None:
    BACKEND = "python"
else:
    BACKEND = "cython"

_impl = _BACKENDS[BACKEND]

enumerate_frequencies = _impl.enumerate_frequencies
phase_sum_modulus = _impl.phase_sum_modulus
pattern_coherence = _impl.pattern_coherence
density_matrix_sum = _impl.density_matrix_sum
block_pattern_sum = _impl.block_pattern_sum


def available_backends():
    return sorted(_BACKENDS)


def get_backend(name):
    """Kernel module for ``name`` (``"cython"`` or ``"python"``)."""
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} not available; have {available_backends()}") from None
