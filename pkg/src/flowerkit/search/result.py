from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..core import SetFamily, fmt_rational, is_intersecting
from ..diversity import weighted_diversity


@dataclass(frozen=True)
class SearchResult:
    best_value: Fraction
    witness: SetFamily
    nodes_explored: int
    exhaustive: bool
    seed: int | None = None
    params: dict = field(default_factory=dict)

    def verify(self, C) -> bool:
        """Recheck the witness through the diversity module."""
        return is_intersecting(self.witness) and weighted_diversity(self.witness, C) == self.best_value

    def to_json(self) -> dict:
        return {
            "best_value": fmt_rational(self.best_value),
            "witness": self.witness.to_lists(),
            "nodes_explored": self.nodes_explored,
            "exhaustive": self.exhaustive,
            "seed": self.seed,
            "params": self.params,
        }
