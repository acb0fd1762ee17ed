"""
settings.py
───────────
Run-wide defaults for orthorep.

    from settings import Settings

    cfg = Settings.from_env()        # honours ORTHOREP_SEED
    rng = cfg.rng()
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

# ── Defaults ─────────────────────────────────────────────────────────
DEFAULT_PRIME = 101
DEFAULT_SEED = 20260
DEFAULT_BUDGET = 64           # randomised retries (splitting, iso search)
DEFAULT_CUTOFF = 64           # resolution cutoff without a catalogue
DEFAULT_RIGIDITY_CAP = 12
MAX_PATH_LENGTH = 64          # admissibility probe for build_algebra
REPORT_VERSION = 1
TOOL_VERSION = "1.0.0"

SEED_ENV_VAR = "ORTHOREP_SEED"


@dataclass(frozen=True)
class Settings:
    """
    Seed, budgets and cutoffs used by one run.

    Parameters
    ----------
    seed : int
        Seed of every randomised routine.
    budget : int
        Number of random retries before giving up.
    cutoff : int
        Resolution cutoff when no catalogue bound is known.
    prime : int
        Characteristic of the default prime field.
    """
    seed: int = DEFAULT_SEED
    budget: int = DEFAULT_BUDGET
    cutoff: int = DEFAULT_CUTOFF
    prime: int = DEFAULT_PRIME

    @classmethod
    def from_env(cls, seed: Optional[int] = None, **overrides) -> "Settings":
        """Build settings; ``ORTHOREP_SEED`` wins over the ``seed`` argument."""
        env = os.environ.get(SEED_ENV_VAR)
        if env is not None and env.strip():
            try:
                seed = int(env)
            except ValueError as exc:
                raise ValueError(
                    f"{SEED_ENV_VAR}={env!r} is not an integer seed"
                ) from exc
        base = cls() if seed is None else cls(seed=seed)
        return replace(base, **overrides) if overrides else base

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


def default_rng(seed: Optional[int] = None) -> np.random.Generator:
    """Generator for library calls that were not handed one explicitly."""
    return Settings.from_env(seed).rng()
