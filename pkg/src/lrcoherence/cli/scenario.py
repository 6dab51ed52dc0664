"""Scenario configuration: defaults, key-value files and validation."""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields

from ..coherence import Target, time_grid
from ..errors import ContractError
from ..model import BlockSpec, CouplingModel
from ..spectrum import DEFAULT_BINS, NORMALIZATIONS

OUTPUT_KINDS = ("series", "spectrum", "relaxation", "steady-state")


def parse_range(text) -> int | None:
    """``"exact"`` -> ``None``; ``"2"`` -> ``2``."""
    if text is None:
        return None
    text = str(text).strip().lower()
    if text == "exact":
        return None
    try:
        return int(text)
    except ValueError:
        raise ContractError(f"range must be a positive integer or 'exact', got {text!r}") from None


def parse_bool(text) -> bool:
    if isinstance(text, bool):
        return text
    value = str(text).strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off"):
        return False
    raise ContractError(f"expected a boolean, got {text!r}")


def parse_outputs(text) -> tuple[str, ...]:
    if isinstance(text, (tuple, list)):
        items = list(text)
    else:
        items = [x.strip() for x in str(text).split(",") if x.strip()]
    bad = [x for x in items if x not in OUTPUT_KINDS]
    if bad or not items:
        raise ContractError(f"outputs must be a non-empty subset of {OUTPUT_KINDS}, got {text!r}")
    return tuple(x for x in OUTPUT_KINDS if x in items)


@dataclass
class Scenario:
    n: int = 20
    j: float = 1.0
    alpha: float = 3.0
    range: str = "exact"
    spin: int | None = None
    block_start: int | None = None
    block_size: int | None = None
    t_max: float = 10.0
    steps: int = 1000
    normalize: bool = False
    method: str = "factorized"
    bins: int = DEFAULT_BINS
    histogram_norm: str = "unit-sum"
    outputs: tuple[str, ...] = ("series",)
    out: str = "out"
    svg: bool = False

    _CASTS = {
        "n": int, "j": float, "alpha": float, "range": str, "spin": int,
        "block_start": int, "block_size": int, "t_max": float, "steps": int,
        "normalize": parse_bool, "method": str, "bins": int, "histogram_norm": str,
        "outputs": parse_outputs, "out": str, "svg": parse_bool,
    }

    @classmethod
    def from_mapping(cls, values: dict) -> "Scenario":
        """Build from string or typed values; unknown keys are an error."""
        kwargs = {}
        for key, raw in values.items():
            key = key.replace("-", "_")
            if key not in cls._CASTS:
                raise ContractError(f"unknown scenario key {key!r}")
            if raw is None or raw == "":
                kwargs[key] = None
                continue
            try:
                kwargs[key] = cls._CASTS[key](raw)
            except ValueError as exc:
                raise ContractError(f"bad value for {key}: {raw!r} ({exc})") from None
        return cls(**kwargs)

    def merged(self, overrides: dict) -> "Scenario":
        values = self.to_mapping()
        values.update({k: v for k, v in overrides.items() if v is not None})
        return Scenario.from_mapping(values)

    def to_mapping(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def to_lines(self) -> list[str]:
        """``key=value`` lines that :func:`parse_key_values` reads back."""
        lines = []
        for key, value in asdict(self).items():
            if isinstance(value, tuple):
                value = ",".join(value)
            elif value is None:
                value = ""
            elif isinstance(value, bool):
                value = "true" if value else "false"
            lines.append(f"{key}={value}")
        return lines

    # derived views ---------------------------------------------------------

    def model(self) -> CouplingModel:
        return CouplingModel(self.n, self.j, self.alpha, parse_range(self.range))

    def target(self) -> Target:
        if self.block_size is not None:
            if self.block_start is None:
                return BlockSpec.centered(self.n, self.block_size)
            return BlockSpec(self.block_start, self.block_size)
        return self.spin if self.spin is not None else self.n // 2

    def grid(self):
        return time_grid(self.t_max, self.steps)

    def validate(self) -> None:
        model = self.model()
        target = self.target()
        if isinstance(target, BlockSpec):
            target.validate(model)
            if "spectrum" in self.outputs:
                raise ContractError("spectrum output is defined for a single spin, not a block")
        elif not 1 <= target <= model.n:
            raise ContractError(f"spin index must be in [1, {model.n}], got {target}")
        self.grid()
        if self.bins < 1:
            raise ContractError(f"bins must be >= 1, got {self.bins}")
        if self.histogram_norm not in NORMALIZATIONS:
            raise ContractError(f"histogram_norm must be one of {NORMALIZATIONS}")
        if self.method not in ("factorized", "brute"):
            raise ContractError(f"method must be 'factorized' or 'brute', got {self.method!r}")


def parse_key_values(text: str) -> dict[str, str]:
    """
    Read ``key = value`` lines. ``#`` starts a comment; reading stops at the
    first ``[section]`` header so a run manifest doubles as a scenario file.
    """
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            break
        if "=" not in line:
            raise ContractError(f"line {lineno}: expected key=value, got {line!r}")
        key, value = line.split("=", 1)
        values[key.strip()] = value.strip()
    return values


def load_scenario_file(path) -> dict[str, str]:
    with open(path, encoding="utf-8") as fh:
        return parse_key_values(fh.read())
