"""Seeded instance generators for the benchmark families.

Every family is deterministic in its InstanceSpec: numpy's default_rng is
seeded with spec.seed and nothing else is random.
"""
import io
import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
import pandas as pd

from synergy.geom_core import COORD_BOUND, InfeasibleSpecError, Point
from synergy.maxima.smooth import decompose_smooth

logger = logging.getLogger(__name__)


class Family(Enum):
    SMOOTH_RUNS = "smooth_runs"
    SIMPLE_CHAINS = "simple_chains"
    MERGE_STAIRCASES = "merge_staircases"
    MERGE_HULLS = "merge_hulls"
    RANDOM_UNIFORM = "random_uniform"
    SMALL_OUTPUT = "small_output"

    @property
    def is_merge(self):
        return self in (Family.MERGE_STAIRCASES, Family.MERGE_HULLS)


@dataclass(frozen=True)
class InstanceSpec:
    """What to generate.

    param is sigma for SMOOTH_RUNS, kappa for SIMPLE_CHAINS, rho for the
    merge families, h for SMALL_OUTPUT and the coordinate half-range for
    RANDOM_UNIFORM. profile ("even" or "skewed") sets the chain sizes of
    SIMPLE_CHAINS.
    """

    family: Family
    n: int
    param: int
    seed: int = 7
    profile: str = "even"


def _split(n, parts):
    base, extra = divmod(n, parts)
    return [base + (1 if i < extra else 0) for i in range(parts)]


def _check_bound(points):
    if any(abs(p) > COORD_BOUND for p in points):
        raise InfeasibleSpecError("instance does not fit the coordinate bound")


def _smooth_runs(spec, rng):
    """sigma interleaved runs whose staircases all lie on one anti-diagonal.

    Each run starts at the far left of the diagonal and ends at the far
    right, so the next run's first point is left of and above the tip.
    """
    sigma, n = spec.param, spec.n
    if sigma < 1 or n < sigma or (sigma > 1 and n < 2 * sigma):
        raise InfeasibleSpecError(f"cannot split {n} points into {sigma} smooth runs")
    span = n
    points = []
    for r, size in enumerate(_split(n, sigma)):
        k = 1 if size == 1 else max(2, size // 2)
        if k == 1:
            columns = [0]
        else:
            inner = rng.choice(np.arange(1, span - 1), size=k - 2, replace=False) if k > 2 else []
            columns = sorted([0, span - 1, *map(int, inner)])
        fillers = _split(size - k, k)
        for xi, count in zip(columns, fillers):
            top = (sigma * xi + r, sigma * (span - xi) + sigma - 1 - r)
            points.append(top)
            # x and y keep the run's residues mod sigma, so runs never collide
            offsets = rng.choice(np.arange(1, 4 * size + 1), size=count, replace=False)
            points.extend((top[0] - sigma * int(a), top[1] - sigma) for a in sorted(offsets))
    return points


def _small_output(spec, rng):
    """h maximal hull vertices on a concave arc; the rest below and inside it."""
    h, n = spec.param, spec.n
    if h < 1 or n < h:
        raise InfeasibleSpecError(f"cannot place {h} output points among {n}")
    rest = n - h
    if h == 1:
        points = [(0, 0)] + [(0, -int(d)) for d in rng.permutation(np.arange(1, rest + 1))]
        return points
    scale = max(1, math.ceil(n / h))
    if (h - 1) ** 2 * scale >= COORD_BOUND:
        raise InfeasibleSpecError(f"an arc of {h} vertices over {n} points exceeds the coordinate bound")
    arc = [(i * scale, -i * i * scale) for i in range(h)]
    width, low = (h - 1) * scale + 1, arc[-1][1]
    cells = rng.choice(width * n, size=rest, replace=False)
    fill = [(int(c) % width, low - 1 - int(c) // width) for c in cells]
    order = rng.permutation(n)
    points = arc + fill
    return [points[i] for i in order]


def _random_uniform(spec, rng):
    bound = spec.param
    if bound < 0 or bound > COORD_BOUND:
        raise InfeasibleSpecError(f"coordinate range {bound} is out of bounds")
    coords = rng.integers(-bound, bound, size=(spec.n, 2), endpoint=True)
    return [(int(x), int(y)) for x, y in coords]


def _merge_staircases(spec, rng):
    rho, n = spec.param, spec.n
    if rho < 1 or n < rho:
        raise InfeasibleSpecError(f"cannot deal {n} points into {rho} non-empty staircases")
    seqs = []
    for size in _split(n, rho):
        xs = np.sort(rng.choice(4 * n, size=size, replace=False))
        drops = rng.integers(1, 5, size=size)
        ys = int(rng.integers(4 * n, 8 * n)) - np.cumsum(drops)
        seqs.append([(int(x), int(y)) for x, y in zip(xs, ys)])
    return seqs


def _merge_hulls(spec, rng):
    rho, n = spec.param, spec.n
    if rho < 1 or n < rho:
        raise InfeasibleSpecError(f"cannot deal {n} points into {rho} non-empty hulls")
    seqs = []
    for size in _split(n, rho):
        # strictly decreasing integer slopes over positive steps keep the chain strictly concave
        slopes = -np.sort(-rng.choice(np.arange(-size - 2, size + 3), size=size - 1, replace=False))
        steps = rng.integers(1, 4, size=size - 1)
        x0, y0 = int(rng.integers(0, 2 * n + 1)), int(rng.integers(0, 4 * n + 1))
        xs = x0 + np.concatenate(([0], np.cumsum(steps)))
        ys = y0 + np.concatenate(([0], np.cumsum(slopes * steps)))
        seqs.append([(int(x), int(y)) for x, y in zip(xs, ys)])
    return seqs


def _zigzags(kappa, sizes, width, rng):
    points = []
    for i, size in enumerate(sizes):
        chain = [(-(i + 1), 0)]
        lifts = rng.integers(0, 3, size=max(size - 2, 0))
        for j, lift in enumerate(lifts):
            sign = 1 if j % 2 else -1
            chain.append((j, sign * (i + 1 + kappa * int(lift))))
        if size >= 2:
            chain.append((width + i, 0))
        points.extend(chain)
    return points


def _arc_and_strays(size, strays):
    """A concave arc of size points, then strays points on the line y = 1.

    Every arc point is an upper hull vertex of its stretch of the arc. The
    first stray sits above the top of the arc, so the step to it from the
    right end cuts back through the arc. After that the strays zigzag
    along y = 1 with every step doubling back over the one before, so no
    three consecutive strays form a simple chain.
    """
    half = (size - 1) // 2
    points = [(x, -x * x) for x in range(-half, size - half)]
    for k in range(1, strays + 1):
        points.append((k // 2 + 1 if k % 2 == 0 else -(k // 2), 1))
    return points


def _simple_chains(spec, rng):
    """kappa simple chains in a row.

    The even profile joins kappa x-monotone zigzags end to start: chain i
    runs from (-(i+1), 0) through a zigzag of height about i+1 to (W+i, 0),
    and the join back to the left sweeps over the chain just finished. The
    skewed profile is one long concave arc followed by kappa - 1 strays.
    """
    kappa, n = spec.param, spec.n
    if kappa < 1 or n < kappa:
        raise InfeasibleSpecError(f"cannot split {n} points into {kappa} chains")
    if spec.profile == "even":
        sizes = _split(n, kappa)
        return _zigzags(kappa, sizes, max(sizes), rng)
    if spec.profile == "skewed":
        return _arc_and_strays(n - kappa + 1, kappa - 1)
    raise InfeasibleSpecError(f"unknown chain profile {spec.profile!r}")


_BUILDERS = {
    Family.SMOOTH_RUNS: _smooth_runs,
    Family.SMALL_OUTPUT: _small_output,
    Family.RANDOM_UNIFORM: _random_uniform,
    Family.MERGE_STAIRCASES: _merge_staircases,
    Family.MERGE_HULLS: _merge_hulls,
    Family.SIMPLE_CHAINS: _simple_chains,
}


def generate(spec):
    """Build the instance for spec.

    Returns:
        a list of Point, or a list of point sequences for the merge families

    Raises:
        InfeasibleSpecError: the parameters cannot be realized.
    """
    if spec.n < 0:
        raise InfeasibleSpecError(f"negative size {spec.n}")
    rng = np.random.default_rng(spec.seed)
    raw = _BUILDERS[spec.family](spec, rng)
    if spec.family.is_merge:
        for seq in raw:
            _check_bound([c for p in seq for c in p])
        instance = [[Point(x, y) for x, y in seq] for seq in raw]
    else:
        _check_bound([c for p in raw for c in p])
        instance = [Point(x, y) for x, y in raw]

    if spec.family is Family.SMOOTH_RUNS and decompose_smooth(instance).sigma != spec.param:
        raise InfeasibleSpecError(f"generated instance does not split into {spec.param} smooth runs")
    logger.debug("generated %s n=%d param=%d seed=%d", spec.family.value, spec.n, spec.param, spec.seed)
    return instance


def write_instance(instance, path):
    """Write an instance as `x y` lines, one blank line between sequences."""
    seqs = instance if instance and not isinstance(instance[0], Point) else [instance]
    blocks = []
    for seq in seqs:
        frame = pd.DataFrame([(p.x, p.y) for p in seq], columns=["x", "y"])
        buffer = io.StringIO()
        frame.to_csv(buffer, sep=" ", header=False, index=False)
        blocks.append(buffer.getvalue())
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("\n".join(blocks))
