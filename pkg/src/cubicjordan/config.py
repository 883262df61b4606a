"""Run configuration and seeded sampling."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    sample_bound: int = 10
    samples: int = 20
    retry_limit: int = 16
    symbolic_dim_threshold: int = 8
    lines: int = 5

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if f.name == "seed":
                if not -(2**63) <= v < 2**64:
                    raise ValueError("seed must fit in 64 bits")
            elif v <= 0:
                raise ValueError(f"{f.name} must be positive, got {v}")

    def rng(self, label: str = "") -> random.Random:
        """Independent deterministic stream per label (string seeding is stable across runs)."""
        return random.Random(f"{self.seed}:{label}")

    def with_overrides(self, **kw) -> "RunConfig":
        return replace(self, **{k: v for k, v in kw.items() if v is not None})

    @classmethod
    def from_env(cls, environ=None) -> "RunConfig":
        env = os.environ if environ is None else environ
        names = {
            "seed": "JCK_SEED",
            "sample_bound": "JCK_SAMPLE_BOUND",
            "samples": "JCK_SAMPLES",
            "retry_limit": "JCK_RETRY_LIMIT",
            "symbolic_dim_threshold": "JCK_SYMBOLIC_DIM_THRESHOLD",
            "lines": "JCK_LINES",
        }
        kw = {k: int(env[v]) for k, v in names.items() if v in env}
        return cls(**kw)


DEFAULT = RunConfig()


def random_vector(rng: random.Random, n: int, bound: int):
    return [rng.randint(-bound, bound) for _ in range(n)]


def random_nonzero_vector(rng: random.Random, n: int, bound: int):
    while True:
        v = random_vector(rng, n, bound)
        if any(v):
            return v
