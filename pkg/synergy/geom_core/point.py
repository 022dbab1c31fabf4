"""Exact integer points, lines and the small enums shared by the predicates."""
from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction

from synergy.geom_core.errors import DegenerateLineError, PreconditionError

# |x|, |y| <= 2^31 keeps every cross product inside 128-bit intermediates
COORD_BOUND = 2 ** 31


@dataclass(frozen=True, order=True, slots=True)
class Point:
    """A planar point with integer coordinates.

    Points order lexicographically by (x, y), which is the order every
    sweep and merge in the package relies on.
    """

    x: int
    y: int

    def __post_init__(self):
        for name in ("x", "y"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise PreconditionError(f"{name} must be an integer, got {value!r}")
            if abs(value) > COORD_BOUND:
                raise PreconditionError(f"{name}={value} exceeds the coordinate bound 2^31")

    def mirrored(self):
        """Reflection through the x-axis, used to run upper-hull code on lower hulls."""
        return Point(self.x, -self.y)

    def __str__(self):
        return f"({self.x},{self.y})"


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


class End(Enum):
    """Where a doubling search starts probing."""

    LOW = "low"
    HIGH = "high"
    BOTH = "both"


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"


def slope(p, q):
    """Exact slope of the edge p -> q as a Fraction; q must lie strictly right of p."""
    if q.x <= p.x:
        raise PreconditionError(f"slope needs q strictly right of p, got {p} -> {q}")
    return Fraction(q.y - p.y, q.x - p.x)


@dataclass(frozen=True, slots=True)
class Line:
    """Line through two distinct anchor points, kept exact."""

    a: Point
    b: Point

    def __post_init__(self):
        if self.a == self.b:
            raise DegenerateLineError(f"line through identical points {self.a}")

    @property
    def is_vertical(self):
        return self.a.x == self.b.x

    @property
    def slope(self):
        if self.is_vertical:
            return None
        left, right = sorted((self.a, self.b))
        return slope(left, right)


@dataclass(frozen=True, slots=True)
class VerticalLine:
    """Vertical line x = c for a rational c, used to separate two hulls."""

    x: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
