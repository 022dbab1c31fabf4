import pytest
from hypothesis import given, settings

from synergy.geom_core import ProbeCounter, SizeGuardError
from synergy.hull import partition_simple_chains
from synergy.maxima import decompose_smooth, dedup_points
from synergy.oracles import (
    CERTIFICATE_GUARD,
    SIMPLE_GUARD,
    SMOOTH_GUARD,
    brute_maxima,
    brute_upper_hull,
    min_certificate_length_exhaustive,
    min_entropy_simple_partition,
    min_simple_partition,
    min_smooth_partition,
    sweep_maxima,
)
from tests.conftest import distinct_points, points, pts


class TestBrute:
    def test_maxima(self):
        assert brute_maxima(pts((1, 3), (2, 2), (3, 1), (0, 0))) == pts((1, 3), (2, 2), (3, 1))
        assert brute_maxima(pts((4, 4))) == pts((4, 4))
        assert brute_maxima([]) == []

    def test_maxima_predicate_bound(self):
        raw = pts(*[(i % 8, i // 8) for i in range(64)])
        counter = ProbeCounter()
        brute_maxima(raw, counter)
        assert counter.total <= 64 ** 2

    @given(points(max_size=80))
    def test_sweep_agrees(self, raw):
        assert sweep_maxima(raw) == brute_maxima(raw)

    def test_upper_hull(self):
        assert brute_upper_hull(pts((0, 0), (1, 3), (2, 0))) == pts((0, 0), (1, 3), (2, 0))
        assert brute_upper_hull(pts((0, 0), (1, 1), (2, 2))) == pts((0, 0), (2, 2))
        five = pts((0, 0), (2, 2), (4, 0), (1, 3), (3, 2))
        assert brute_upper_hull(five) == pts((0, 0), (1, 3), (3, 2), (4, 0))
        assert brute_upper_hull(pts((1, 0), (1, 5), (1, 2))) == pts((1, 5))


class TestGuards:
    @pytest.mark.parametrize(
        "oracle, guard",
        [
            (min_smooth_partition, SMOOTH_GUARD),
            (min_simple_partition, SIMPLE_GUARD),
            (min_entropy_simple_partition, SIMPLE_GUARD),
        ],
    )
    def test_partition_oracles_refuse_large_inputs(self, oracle, guard):
        raw = pts(*[(i, -i) for i in range(guard + 1)])
        with pytest.raises(SizeGuardError):
            oracle(raw)
        oracle(raw[:guard])

    def test_certificate_oracle_refuses_large_inputs(self):
        with pytest.raises(SizeGuardError):
            min_certificate_length_exhaustive([pts(*[(i, -i) for i in range(CERTIFICATE_GUARD + 1)])])


class TestSmoothPartition:
    def test_examples(self):
        assert min_smooth_partition(pts((1, 5), (0, 4), (3, 3), (2, 1))) == 1
        assert min_smooth_partition(pts((3, 1), (1, 3))) == 2
        assert min_smooth_partition([]) == 0

    @settings(max_examples=150)
    @given(distinct_points(max_size=SMOOTH_GUARD))
    def test_greedy_is_minimum(self, raw):
        sigma = decompose_smooth(dedup_points(raw)).sigma
        assert sigma == min_smooth_partition(raw)


class TestSimplePartition:
    def test_examples(self, figure_eight):
        assert min_simple_partition(figure_eight) == 2
        assert min_entropy_simple_partition(figure_eight) == pytest.approx(0.8112781244591328)
        assert min_entropy_simple_partition(pts((0, 0), (1, 3), (2, 0))) == 0.0
        assert min_entropy_simple_partition([]) == 0.0

    @settings(max_examples=100)
    @given(points(max_size=SIMPLE_GUARD))
    def test_doubling_partition_quality(self, raw):
        partition = partition_simple_chains(raw)
        least = min_entropy_simple_partition(raw)
        assert least - 1e-9 <= partition.entropy <= least + 1
        assert partition.kappa >= min_simple_partition(raw)

    @settings(max_examples=100)
    @given(points(max_size=SIMPLE_GUARD))
    def test_longest_partition_has_fewest_chains(self, raw):
        assert partition_simple_chains(raw, longest=True).kappa == min_simple_partition(raw)


class TestCertificateLength:
    def test_examples(self):
        assert min_certificate_length_exhaustive([pts((0, 2), (1, 1))]) == 2
        assert min_certificate_length_exhaustive([pts((5, 5)), pts((1, 2), (2, 1))]) == 1
        assert min_certificate_length_exhaustive([]) == 0
        assert min_certificate_length_exhaustive([[], []]) == 0

    def test_interleaved_staircases(self):
        # every point is an output block of its own
        seqs = [pts((1, 5), (3, 3)), pts((2, 4), (4, 1))]
        assert min_certificate_length_exhaustive(seqs) == 4
