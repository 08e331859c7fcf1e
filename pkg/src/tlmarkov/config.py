from __future__ import annotations

from dataclasses import dataclass, field

from .kl import OracleLimits


@dataclass(frozen=True)
class RunConfig:
    """Knobs shared by the CLI and the verification suites."""

    n: int = 6
    seed: int = 20240611
    samples: int = 1000          # random pairs / monomials for sampled suites
    diagram_samples: int = 100   # random diagrams for the stabilisation identities
    purity_max_total: int = 10   # l(x) + l(y) bound for exhaustive products
    brute_a_max_len: int = 6
    gram_max_len: int = 8
    oracle_max_len: int = 10
    limits: OracleLimits = field(default_factory=OracleLimits)
    output: str = "human"

    def __post_init__(self):
        if self.n < 6:
            raise ValueError("rank must be at least 6")
        if self.output not in ("human", "json"):
            raise ValueError("output must be 'human' or 'json'")
        for name in ("samples", "diagram_samples", "purity_max_total", "gram_max_len", "oracle_max_len"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
