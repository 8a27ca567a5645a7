"""Runtime configuration: a flat key=value file plus flag overrides."""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from pathlib import Path


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class PipelineConfig:
    corpus_dir: str = "corpus"
    wordnet_dir: str = ""
    rules_path: str = ""          # empty means the built-in rule set
    lexicon_path: str = ""        # optional tagger extension TSV
    static_theta: float = 0.00142  # percent, as in the run reports
    sim_threshold: float = 0.95
    separator: str = "#"
    max_distance: int = 2
    decay: float = 0.5
    boost_factor: float = 1.5
    base_iri: str = "http://ontoforge.local"
    out_dir: str = "out"
    repo_dir: str = "repository"
    profiles_dir: str = "profiles"
    listen: str = "127.0.0.1:7700"
    assets_dir: str = ""
    window: int = 5
    literal_weight: float = 0.25
    increment: float = 1.0
    max_chars: int = 90_000
    cors: bool = False

    def validate(self) -> None:
        if self.static_theta < 0:
            raise ConfigError("static_theta must be >= 0")
        if not 0 < self.sim_threshold <= 1:
            raise ConfigError("sim_threshold must be in (0, 1]")
        if len(self.separator) != 1 or self.separator == " ":
            raise ConfigError("separator must be a single non-space character")
        if self.max_distance < 0:
            raise ConfigError("max_distance must be >= 0")
        if not 0 < self.decay < 1:
            raise ConfigError("decay must be in (0, 1)")
        if self.boost_factor <= 1:
            raise ConfigError("boost_factor must be > 1")
        if self.window < 1:
            raise ConfigError("window must be >= 1")
        if self.increment <= 0:
            raise ConfigError("increment must be > 0")
        if self.max_chars <= 0:
            raise ConfigError("max_chars must be > 0")

    # artifact paths
    @property
    def pom_path(self) -> Path:
        return Path(self.out_dir) / "pom.json"

    @property
    def relations_path(self) -> Path:
        return Path(self.out_dir) / "relations.tsv"

    @property
    def ontology_path(self) -> Path:
        return Path(self.out_dir) / "ontology.ttl"

    @property
    def index_path(self) -> Path:
        return Path(self.out_dir) / "index.json"


_FIELD_TYPES = {f.name: f.type for f in fields(PipelineConfig)}


def _coerce(key: str, raw: str):
    kind = _FIELD_TYPES[key]
    raw = raw.strip()
    if len(raw) >= 2 and raw[0] == raw[-1] and raw[0] in "\"'":
        raw = raw[1:-1]
    if kind == "int":
        return int(raw)
    if kind == "float":
        return float(raw)
    if kind == "bool":
        if raw.lower() in ("true", "1", "yes", "on"):
            return True
        if raw.lower() in ("false", "0", "no", "off"):
            return False
        raise ConfigError(f"{key}: expected a boolean, got {raw!r}")
    return raw


def load_config(path) -> PipelineConfig:
    """Parse a key = value config file into a PipelineConfig."""
    values = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"{path}:{lineno}: expected key = value")
        key, _, raw = stripped.partition("=")
        key = key.strip()
        if key not in _FIELD_TYPES:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            values[key] = _coerce(key, raw)
        except (ValueError, TypeError) as exc:
            raise ConfigError(f"{path}:{lineno}: {exc}") from exc
    config = PipelineConfig(**values)
    config.validate()
    return config


def override_config(config: PipelineConfig, **overrides) -> PipelineConfig:
    """Apply non-None overrides (flags beat the config file)."""
    cleaned = {k: v for k, v in overrides.items() if v is not None}
    updated = replace(config, **cleaned)
    updated.validate()
    return updated
