"""
Coherence relaxation in the power-law long-range Ising chain.

After a quench from the all-z-up state, a single spin or a block of spins
loses coherence through the spread of its effective frequencies. This
package computes that dynamics exactly, at full chain sizes, through
factorized closed forms, with brute-force enumeration kept as an oracle.
"""

from .coherence import (
    BRUTE_CAP,
    MATRIX_CAP,
    CoherenceSeries,
    ReducedDensityMatrix,
    coherence_block,
    coherence_series,
    coherence_single_brute,
    coherence_single_factorized,
    initial_coherence,
    max_revival,
    reduced_density_matrix,
    relaxation_time,
    steady_state,
    time_grid,
)
from .errors import ContractError, ResourceLimitError
from .kernels import BACKEND
from .model import EXACT, BlockSpec, CouplingModel, SpinConfig, coupling, eigenenergy, energies
from .spectrum import FrequencyHistogram, effective_frequencies, histogram, spectrum_histogram

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BRUTE_CAP",
    "MATRIX_CAP",
    "EXACT",
    "BlockSpec",
    "CoherenceSeries",
    "ContractError",
    "CouplingModel",
    "FrequencyHistogram",
    "ReducedDensityMatrix",
    "ResourceLimitError",
    "SpinConfig",
    "coherence_block",
    "coherence_series",
    "coherence_single_brute",
    "coherence_single_factorized",
    "coupling",
    "effective_frequencies",
    "eigenenergy",
    "energies",
    "histogram",
    "initial_coherence",
    "max_revival",
    "reduced_density_matrix",
    "relaxation_time",
    "spectrum_histogram",
    "steady_state",
    "time_grid",
]
