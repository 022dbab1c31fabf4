import pytest
from hypothesis import settings
from hypothesis import strategies as st

from synergy.geom_core import Point
from synergy.oracles import brute_upper_hull

COORD = 100

# no per-example deadline
settings.register_profile("synergy", deadline=None)
settings.load_profile("synergy")


def pts(*pairs):
    return [Point(x, y) for x, y in pairs]


@st.composite
def points(draw, min_size=0, max_size=64, bound=COORD):
    coords = st.integers(min_value=-bound, max_value=bound)
    pairs = draw(st.lists(st.tuples(coords, coords), min_size=min_size, max_size=max_size))
    return [Point(x, y) for x, y in pairs]


@st.composite
def distinct_points(draw, min_size=0, max_size=64, bound=COORD):
    coords = st.integers(min_value=-bound, max_value=bound)
    pairs = draw(st.lists(st.tuples(coords, coords), min_size=min_size, max_size=max_size, unique=True))
    return [Point(x, y) for x, y in pairs]


@st.composite
def staircases(draw, min_size=1, max_size=12, bound=COORD):
    size = draw(st.integers(min_value=min_size, max_value=max_size))
    coords = st.integers(min_value=-bound, max_value=bound)
    xs = sorted(draw(st.lists(coords, min_size=size, max_size=size, unique=True)))
    ys = sorted(draw(st.lists(coords, min_size=size, max_size=size, unique=True)), reverse=True)
    return [Point(x, y) for x, y in zip(xs, ys)]


@st.composite
def upper_hulls(draw, min_x=-COORD, max_x=COORD, max_size=24, bound=COORD):
    xs = st.integers(min_value=min_x, max_value=max_x)
    ys = st.integers(min_value=-bound, max_value=bound)
    pairs = draw(st.lists(st.tuples(xs, ys), min_size=1, max_size=max_size))
    return brute_upper_hull([Point(x, y) for x, y in pairs])


@st.composite
def staircase_instances(draw, max_sequences=6, max_size=10):
    return draw(st.lists(staircases(max_size=max_size), min_size=1, max_size=max_sequences))


@st.composite
def hull_instances(draw, max_sequences=6, max_size=16, bound=COORD):
    hulls = upper_hulls(min_x=-bound, max_x=bound, max_size=max_size, bound=bound)
    return draw(st.lists(hulls, min_size=1, max_size=max_sequences))


@pytest.fixture
def unit_square():
    return pts((0, 0), (1, 0), (1, 1), (0, 1))


@pytest.fixture
def figure_eight():
    return pts((0, 0), (2, 2), (2, 0), (0, 2))
