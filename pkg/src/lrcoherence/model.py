"""
Diagonal long-range Ising chain: coupling law, x-basis configurations and
exact eigenenergies.

The Hamiltonian ``H = sum_{i<j} J_ij X_i X_j`` with ``J_ij = J / |i-j|**alpha``
is diagonal in the x-basis, so every eigenstate is a product configuration
and its energy is ``sum_{i<j} J_ij s_i s_j`` with ``s_i = 2*sigma_i - 1``.

Spin indices are 1-based on the public surface. Spin ``i`` lives in bit
``i - 1`` of a configuration word; a set bit means x-up (``s_i = +1``).
The chain has open boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import ContractError

#: ``truncation`` value meaning "keep every coupling"
EXACT = None


@dataclass(frozen=True)
class CouplingModel:
    """
    Power-law coupled Ising chain.

    Parameters
    ----------
    n : int
        Number of spins, at least 2.
    j : float
        Base coupling ``J > 0``. Energies are in units of ``J`` when ``j = 1``.
    alpha : float
        Power-law exponent, ``alpha >= 0``. ``alpha = 0`` is uniform all-to-all.
    truncation : int or None
        ``None`` keeps all couplings (exact model). An integer ``r`` zeroes
        every coupling with ``|i - j| > r`` (``r = 1`` nearest neighbour,
        ``r = 2`` next-nearest, ...).
    """

    n: int
    j: float = 1.0
    alpha: float = 0.0
    truncation: int | None = EXACT

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise ContractError(f"n must be an integer >= 2, got {self.n!r}")
        if not np.isfinite(self.j) or self.j <= 0:
            raise ContractError(f"j must be a positive finite number, got {self.j!r}")
        if not np.isfinite(self.alpha) or self.alpha < 0:
            raise ContractError(f"alpha must be >= 0, got {self.alpha!r}")
        if self.truncation is not None:
            r = self.truncation
            if int(r) != r or not 1 <= r <= self.n - 1:
                raise ContractError(
                    f"truncation range must be an integer in [1, {self.n - 1}], got {r!r}"
                )

    @property
    def is_exact(self) -> bool:
        return self.truncation is None

    @property
    def range_label(self) -> str:
        return "exact" if self.truncation is None else str(self.truncation)

    def with_alpha(self, alpha: float) -> "CouplingModel":
        return CouplingModel(self.n, self.j, alpha, self.truncation)

    def with_truncation(self, truncation: int | None) -> "CouplingModel":
        return CouplingModel(self.n, self.j, self.alpha, truncation)

    @cached_property
    def couplings(self) -> np.ndarray:
        """Symmetric ``(n, n)`` coupling matrix, zero diagonal, 0-based."""
        out = np.zeros((self.n, self.n))
        for a in range(self.n):
            for b in range(a + 1, self.n):
                out[a, b] = out[b, a] = _pair_coupling(self, b - a)
        out.setflags(write=False)
        return out


def _pair_coupling(model: CouplingModel, distance: int) -> float:
    if model.truncation is not None and distance > model.truncation:
        return 0.0
    return model.j / float(distance) ** model.alpha


def _check_spin(model: CouplingModel, i: int) -> None:
    if int(i) != i or not 1 <= i <= model.n:
        raise ContractError(f"spin index must be in [1, {model.n}], got {i!r}")


def coupling(model: CouplingModel, i: int, j: int) -> float:
    """Coupling ``J_ij`` between 1-based spins ``i != j``."""
    _check_spin(model, i)
    _check_spin(model, j)
    if i == j:
        raise ContractError(f"coupling needs two distinct spins, got i = j = {i}")
    return _pair_coupling(model, abs(i - j))


@dataclass(frozen=True)
class SpinConfig:
    """x-basis product configuration of ``n`` spins packed in an integer."""

    bits: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ContractError(f"n must be positive, got {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ContractError(f"bits {self.bits:#x} do not fit in {self.n} spins")

    @classmethod
    def from_string(cls, text: str) -> "SpinConfig":
        """Parse ``"101"`` with the leftmost character as spin 1."""
        bits = 0
        for pos, ch in enumerate(text):
            if ch not in "01":
                raise ContractError(f"invalid spin character {ch!r} in {text!r}")
            bits |= int(ch) << pos
        return cls(bits, len(text))

    def sigma(self, i: int) -> int:
        return (self.bits >> (i - 1)) & 1

    def spins(self) -> np.ndarray:
        """Spin values ``s_i = 2*sigma_i - 1`` in spin order."""
        return 2 * ((self.bits >> np.arange(self.n)) & 1) - 1

    def flipped(self) -> "SpinConfig":
        return SpinConfig(self.bits ^ ((1 << self.n) - 1), self.n)


@dataclass(frozen=True)
class BlockSpec:
    """Contiguous inside block: spins ``start .. start + size - 1`` (1-based)."""

    start: int
    size: int

    def __post_init__(self):
        if self.start < 1 or self.size < 1:
            raise ContractError(f"invalid block start={self.start} size={self.size}")

    @classmethod
    def centered(cls, n: int, size: int) -> "BlockSpec":
        """Block of ``size`` spins in the middle of an ``n``-spin chain."""
        if not 1 <= size <= n:
            raise ContractError(f"block size {size} does not fit in {n} spins")
        return cls((n - size) // 2 + 1, size)

    @property
    def stop(self) -> int:
        """Last inside spin (inclusive)."""
        return self.start + self.size - 1

    def validate(self, model: CouplingModel) -> None:
        if self.stop > model.n:
            raise ContractError(
                f"block {self.start}..{self.stop} runs past the end of a {model.n}-spin chain"
            )

    def inside(self) -> list[int]:
        return list(range(self.start, self.stop + 1))

    def outside(self, n: int) -> list[int]:
        return [i for i in range(1, n + 1) if not self.start <= i <= self.stop]


def eigenenergy(model: CouplingModel, config: SpinConfig) -> float:
    """Energy ``sum_{i<j} J_ij s_i s_j`` of an x-basis configuration."""
    if config.n != model.n:
        raise ContractError(f"config has {config.n} spins, model has {model.n}")
    s = config.spins()
    jm = model.couplings
    acc = 0.0
    for a in range(model.n):
        for b in range(a + 1, model.n):
            acc += jm[a, b] * float(s[a] * s[b])
    return acc


def energies(model: CouplingModel, configs) -> np.ndarray:
    """
    Vectorised :func:`eigenenergy` over an integer array of configuration words.

    Pair terms are accumulated in the same order as :func:`eigenenergy`, so
    both give bit-identical results.
    """
    configs = np.asarray(configs, dtype=np.int64)
    if configs.size and (configs.min() < 0 or (configs.max() >> model.n)):
        raise ContractError(f"configuration words do not fit in {model.n} spins")
    s = (2 * ((configs[..., None] >> np.arange(model.n)) & 1) - 1).astype(np.float64)
    jm = model.couplings
    acc = np.zeros(configs.shape)
    for a in range(model.n):
        for b in range(a + 1, model.n):
            acc += jm[a, b] * (s[..., a] * s[..., b])
    return acc


def max_energy(model: CouplingModel) -> float:
    """``sum_{i<j} J_ij``: the energy of the all-up configuration."""
    return float(np.triu(model.couplings, 1).sum())
