"""Per-run cost report shared by the maxima and hull pipelines."""
import math
from dataclasses import dataclass, field, replace


@dataclass
class CostReport:
    """Comparison counts of one run plus the instance measures they depend on.

    n: input size, h: output size, sigma: smooth runs, kappa: simple
    chains, rho: merged sequences, beta: certificate blocks, delta:
    certificate length, m_list: sequences per certificate argument,
    entropy: entropy (bits) of the chain sizes in `sizes`.
    """

    algorithm: str = ""
    n: int = 0
    h: int = 0
    sigma: int = 0
    kappa: int = 0
    rho: int = 0
    beta: int = 0
    delta: int = 0
    m_list: list = field(default_factory=list)
    sizes: list = field(default_factory=list)
    entropy: float = 0.0
    phase_counts: dict = field(default_factory=dict)
    level_counts: dict = field(default_factory=dict)
    seed: int | None = None
    wall_ns: int = 0

    @property
    def predicate_count(self):
        return sum(self.phase_counts.values())

    def untimed(self):
        """Copy with wall time cleared, for determinism comparisons."""
        return replace(self, wall_ns=0)


def partition_entropy(sizes):
    """Entropy in bits of the distribution n_i / n over the given part sizes."""
    sizes = [size for size in sizes if size > 0]
    total = sum(sizes)
    if not total:
        return 0.0
    return math.fsum(size / total * math.log2(total / size) for size in sizes)
