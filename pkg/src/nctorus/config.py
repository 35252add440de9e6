"""Numeric defaults, read from ``nctorus.toml`` with an environment override for the seed."""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass, fields, replace
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .errors import DomainError

CONFIG_NAME = "nctorus.toml"
SEED_ENV = "NCTORUS_SEED"


@dataclass(frozen=True)
class Config:
    tol: float = 1e-9
    phase_grid_cap: int = 4096
    q_max: int = 20
    seed: int = 0
    output_dir: Path = Path(".")

    def __post_init__(self):
        if not self.tol > 0:
            raise DomainError(f"tol must be positive, got {self.tol}")
        if self.phase_grid_cap < 1 or self.q_max < 1:
            raise DomainError("phase_grid_cap and q_max must be positive")


def load_config(path: str | os.PathLike | None = None, env=None) -> Config:
    """Read ``path`` (or ``./nctorus.toml`` if present); unknown keys are an error."""
    env = os.environ if env is None else env
    data = {}
    if path is None and Path(CONFIG_NAME).is_file():
        path = CONFIG_NAME
    if path is not None:
        try:
            with open(path, "rb") as fh:
                data = tomllib.load(fh)
        except OSError as exc:
            raise DomainError(f"cannot read config {path}: {exc}") from exc
        except tomllib.TOMLDecodeError as exc:
            raise DomainError(f"bad config {path}: {exc}") from exc
    known = {f.name: f.type for f in fields(Config)}
    unknown = sorted(set(data) - set(known))
    if unknown:
        raise DomainError(f"unknown config keys: {', '.join(unknown)}")
    try:
        kwargs = {
            "tol": float(data.get("tol", Config.tol)),
            "phase_grid_cap": int(data.get("phase_grid_cap", Config.phase_grid_cap)),
            "q_max": int(data.get("q_max", Config.q_max)),
            "seed": int(data.get("seed", Config.seed)),
            "output_dir": Path(data.get("output_dir", ".")),
        }
    except (TypeError, ValueError) as exc:
        raise DomainError(f"bad config value: {exc}") from exc
    cfg = Config(**kwargs)
    if env.get(SEED_ENV):
        try:
            cfg = replace(cfg, seed=int(env[SEED_ENV]))
        except ValueError as exc:
            raise DomainError(f"{SEED_ENV} must be an integer") from exc
    return cfg
