"""Experiment configuration: a flat key=value text format.

Grammar: one `key=value` pair per line; blank lines and lines starting
with `#` are ignored.  Lists are comma-separated.  Architectures are
written `KIND:WIDTH`.  `parse(emit(cfg))` returns an equal config.

Word statistics are stored width-free (mean, std, rho per operand) and
bound to a concrete bit width when an architecture is instantiated, so a
single config can drive a multi-width batch.
"""

from __future__ import annotations

from dataclasses import dataclass, fields, replace

from .estimate import DEFAULT_THRESHOLDS
from .stats import WordStats


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class ExperimentConfig:
    architectures: tuple[tuple[str, int], ...]
    mean_a: float = 0.0
    std_a: float = 1024.0
    rho_a: float = 0.99
    mean_b: float = 0.0
    std_b: float = 1024.0
    rho_b: float = 0.99
    thresholds: tuple[float, ...] = DEFAULT_THRESHOLDS
    bp1_targets: tuple[int, ...] = ()
    vectors: int = 10_000
    seed: int = 1
    output_dir: str = "out"

    def __post_init__(self):
        if not self.architectures:
            raise ConfigError("architectures must be non-empty")
        if self.vectors < 2:
            raise ConfigError("vectors must be >= 2")
        if not self.thresholds:
            raise ConfigError("thresholds must be non-empty")
        for t in self.thresholds:
            if not 0.0 <= t <= 1.0:
                raise ConfigError(f"threshold {t} outside [0, 1]")

    def stats_a(self, bit_width: int) -> WordStats:
        return WordStats(self.mean_a, self.std_a, self.rho_a, bit_width)

    def stats_b(self, bit_width: int) -> WordStats:
        return WordStats(self.mean_b, self.std_b, self.rho_b, bit_width)


def default_bp1_targets(bit_width: int) -> tuple[int, ...]:
    """Sweep targets that stay representable at the default sweep mean."""
    return tuple(range(bit_width // 2 - 2, bit_width - 2))


def emit(cfg: ExperimentConfig) -> str:
    lines = []
    for f in fields(cfg):
        v = getattr(cfg, f.name)
        if f.name == "architectures":
            v = ",".join(f"{k}:{w}" for k, w in v)
        elif isinstance(v, tuple):
            v = ",".join(repr(x) if isinstance(x, float) else str(x) for x in v)
        elif isinstance(v, float):
            v = repr(v)
        lines.append(f"{f.name}={v}")
    return "\n".join(lines) + "\n"


def parse(text: str) -> ExperimentConfig:
    raw: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key=value, got {line!r}")
        key, _, value = line.partition("=")
        raw[key.strip()] = value.strip()

    known = {f.name for f in fields(ExperimentConfig)}
    unknown = set(raw) - known
    if unknown:
        raise ConfigError(f"unknown keys: {sorted(unknown)}")

    kwargs: dict = {}
    try:
        if "architectures" in raw:
            archs = []
            for item in filter(None, raw["architectures"].split(",")):
                kind, _, w = item.partition(":")
                archs.append((kind.strip().upper(), int(w)))
            kwargs["architectures"] = tuple(archs)
        else:
            raise ConfigError("missing required key: architectures")
        for key in ("mean_a", "std_a", "rho_a", "mean_b", "std_b", "rho_b"):
            if key in raw:
                kwargs[key] = float(raw[key])
        if "thresholds" in raw:
            kwargs["thresholds"] = tuple(
                float(x) for x in filter(None, raw["thresholds"].split(",")))
        if "bp1_targets" in raw:
            kwargs["bp1_targets"] = tuple(
                int(x) for x in filter(None, raw["bp1_targets"].split(",")))
        for key in ("vectors", "seed"):
            if key in raw:
                kwargs[key] = int(raw[key])
        if "output_dir" in raw:
            kwargs["output_dir"] = raw["output_dir"]
    except ValueError as exc:
        raise ConfigError(f"bad value: {exc}") from exc
    return ExperimentConfig(**kwargs)


def load_config(path) -> ExperimentConfig:
    with open(path) as fh:
        return parse(fh.read())


def save_config(cfg: ExperimentConfig, path) -> None:
    with open(path, "w") as fh:
        fh.write(emit(cfg))
