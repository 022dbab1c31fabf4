import math

import pytest

from synergy.bench import (
    ALGORITHMS,
    COLUMNS,
    CostReport,
    Family,
    InstanceSpec,
    entropy_suite,
    fit_slope,
    generate,
    measure,
    output_suite,
    reports_to_frame,
    run_suite,
    scaling_suite,
    sigma_suite,
    timed,
    write_instance,
)
from synergy.bench.measure import MAXIMA, POINTS
from synergy.cli.text_format import parse_points
from synergy.geom_core import COORD_BOUND, InfeasibleSpecError, OracleMismatchError, PreconditionError, partition_entropy
from synergy.hull import is_upper_hull, partition_simple_chains
from synergy.maxima import decompose_smooth, is_staircase, validate_smooth
from synergy.oracles import brute_maxima, brute_upper_hull


class TestGenerate:
    def test_single_smooth_run(self):
        instance = generate(InstanceSpec(Family.SMOOTH_RUNS, 1000, 1))
        assert len(instance) == 1000
        assert validate_smooth(instance)

    @pytest.mark.parametrize("sigma", [2, 5, 16, 64])
    def test_smooth_runs(self, sigma):
        instance = generate(InstanceSpec(Family.SMOOTH_RUNS, 512, sigma, seed=3))
        assert len(set(instance)) == 512
        assert decompose_smooth(instance).sigma == sigma

    def test_single_output_point(self):
        instance = generate(InstanceSpec(Family.SMALL_OUTPUT, 1000, 1))
        assert len(brute_maxima(instance)) == 1

    def test_small_output(self):
        instance = generate(InstanceSpec(Family.SMALL_OUTPUT, 200, 8))
        assert len(set(instance)) == 200
        assert brute_maxima(instance) == brute_upper_hull(instance)
        assert len(brute_maxima(instance)) == 8

    def test_merge_staircases(self):
        seqs = generate(InstanceSpec(Family.MERGE_STAIRCASES, 64, 4))
        assert len(seqs) == 4
        assert sum(len(s) for s in seqs) == 64
        assert all(is_staircase(s) for s in seqs)

    def test_merge_hulls(self):
        seqs = generate(InstanceSpec(Family.MERGE_HULLS, 90, 6, seed=11))
        assert [len(s) for s in seqs] == [15] * 6
        assert all(is_upper_hull(s) for s in seqs)

    def test_simple_chains(self):
        instance = generate(InstanceSpec(Family.SIMPLE_CHAINS, 300, 6))
        assert len(instance) == 300
        assert partition_simple_chains(instance, longest=True).kappa <= 6

    def test_skewed_simple_chains(self):
        instance = generate(InstanceSpec(Family.SIMPLE_CHAINS, 300, 6, profile="skewed"))
        assert len(set(instance)) == 300
        assert is_upper_hull(instance[:295])
        # the arc, then strays that pair up at best
        assert partition_simple_chains(instance, longest=True).sizes == [295, 2, 2, 1]

    def test_random_uniform(self):
        instance = generate(InstanceSpec(Family.RANDOM_UNIFORM, 50, 100))
        assert len(instance) == 50
        assert all(abs(p.x) <= 100 and abs(p.y) <= 100 for p in instance)

    def test_deterministic_in_the_seed(self):
        spec = InstanceSpec(Family.RANDOM_UNIFORM, 40, 1000, seed=5)
        assert generate(spec) == generate(spec)
        assert generate(spec) != generate(InstanceSpec(Family.RANDOM_UNIFORM, 40, 1000, seed=6))

    @pytest.mark.parametrize(
        "spec",
        [
            InstanceSpec(Family.SMOOTH_RUNS, 3, 2),
            InstanceSpec(Family.SMALL_OUTPUT, 5, 6),
            InstanceSpec(Family.MERGE_HULLS, 10, 0),
            InstanceSpec(Family.RANDOM_UNIFORM, 10, COORD_BOUND + 1),
            InstanceSpec(Family.SIMPLE_CHAINS, 10, 2, profile="uneven"),
            InstanceSpec(Family.SMALL_OUTPUT, 2 ** 20, 2 ** 12),
        ],
    )
    def test_infeasible(self, spec):
        with pytest.raises(InfeasibleSpecError):
            generate(spec)

    def test_write_instance(self, tmp_path):
        seqs = generate(InstanceSpec(Family.MERGE_STAIRCASES, 12, 3))
        path = tmp_path / "stairs.txt"
        write_instance(seqs, path)
        assert parse_points(path.read_text()) == seqs

        instance = generate(InstanceSpec(Family.RANDOM_UNIFORM, 12, 9))
        write_instance(instance, path)
        assert parse_points(path.read_text()) == [instance]


class TestMeasure:
    def test_brute_force_bound(self):
        report = measure("brute_maxima", generate(InstanceSpec(Family.RANDOM_UNIFORM, 64, 1000)))
        assert report.predicate_count <= 64 ** 2
        assert report.sigma >= 1

    def test_one_smooth_run_needs_no_merging(self):
        report = measure("synergistic_maxima", generate(InstanceSpec(Family.SMOOTH_RUNS, 1000, 1)), seed=7)
        assert report.sigma == 1
        assert report.phase_counts.get("merge", 0) <= 2
        assert report.seed == 7

    def test_identical_specs_give_identical_reports(self):
        spec = InstanceSpec(Family.SIMPLE_CHAINS, 200, 4)
        first = measure("synergistic_upper_hull", generate(spec), seed=spec.seed)
        second = measure("synergistic_upper_hull", generate(spec), seed=spec.seed)
        assert first.untimed() == second.untimed()
        assert first.algorithm == "synergistic_upper_hull"

    @pytest.mark.parametrize("algorithm", ["quick_union_maxima", "left_to_right_merge"])
    def test_merging_staircases(self, algorithm):
        report = measure(algorithm, generate(InstanceSpec(Family.MERGE_STAIRCASES, 64, 4)))
        assert report.rho == 4
        assert report.n == 64
        assert report.delta >= 1
        assert all(1 <= m <= 4 for m in report.m_list)

    def test_merging_hulls(self):
        report = measure("quick_union_hull", generate(InstanceSpec(Family.MERGE_HULLS, 64, 4)))
        assert report.rho == 4
        assert report.h >= 1
        assert report.beta >= 1 and report.delta >= 1

    def test_baseline_fills_the_partition(self):
        report = measure("brute_upper_hull", generate(InstanceSpec(Family.SIMPLE_CHAINS, 100, 3)))
        assert 1 <= report.kappa <= 3
        assert sum(report.sizes) == 100

    def test_rejects_unknown_algorithms_and_shapes(self):
        with pytest.raises(PreconditionError):
            measure("bogosort", [])
        with pytest.raises(PreconditionError):
            measure("quick_union_hull", generate(InstanceSpec(Family.RANDOM_UNIFORM, 8, 10)))
        with pytest.raises(PreconditionError):
            measure("synergistic_maxima", generate(InstanceSpec(Family.MERGE_STAIRCASES, 8, 2)))

    def test_oracle_mismatch(self, monkeypatch):
        monkeypatch.setitem(ALGORITHMS, "forgetful", (lambda points, counter: ([], CostReport()), MAXIMA, POINTS))
        with pytest.raises(OracleMismatchError):
            measure("forgetful", generate(InstanceSpec(Family.RANDOM_UNIFORM, 8, 10)))

    def test_timed(self):
        result, ns = timed(sum, [1, 2, 3])
        assert result == 6
        assert ns >= 0


def _cells(values, per_bit):
    cells = []
    for value in values:
        counts = {"merge": round(100 * per_bit * math.log2(value)), "dedup": 100}
        cells.append((InstanceSpec(Family.SMOOTH_RUNS, 100, value), CostReport(n=100, phase_counts=counts)))
    return cells


class TestSuite:
    def test_fit_slope(self):
        cells = _cells([2, 4, 8, 16], per_bit=3)
        assert fit_slope(cells, "merge") == pytest.approx(3.0)
        assert fit_slope(cells) == pytest.approx(3.0)

    def test_single_cell_has_no_slope(self):
        result = scaling_suite([InstanceSpec(Family.SMOOTH_RUNS, 64, 2)], "synergistic_maxima", phase="merge")
        assert result.slope is None
        assert len(result.cells) == 1
        assert list(result.frame.columns) == COLUMNS

    def test_empty_grid(self):
        with pytest.raises(PreconditionError):
            scaling_suite([], "synergistic_maxima")

    def test_frame_has_a_row_per_phase(self):
        frame = reports_to_frame(_cells([2, 4], per_bit=1))
        assert len(frame) == 4
        assert set(frame["phase"]) == {"merge", "dedup"}
        assert list(frame["param"]) == [2, 2, 4, 4]

    def test_unknown_suite(self):
        with pytest.raises(PreconditionError):
            run_suite("nope", 64)

    @pytest.mark.slow
    def test_workers_give_the_same_counts(self):
        specs = [InstanceSpec(Family.SMOOTH_RUNS, 256, sigma) for sigma in (1, 2, 4)]
        alone = scaling_suite(specs, "synergistic_maxima", phase="merge")
        pooled = scaling_suite(specs, "synergistic_maxima", phase="merge", workers=2)
        assert [r.untimed() for _, r in alone.cells] == [r.untimed() for _, r in pooled.cells]
        assert alone.slope == pooled.slope

    @pytest.mark.slow
    def test_sigma_suite(self):
        n = 2 ** 16
        result = sigma_suite(n=n)
        assert [spec.param for spec, _ in result.cells] == [1, 2, 4, 8, 16, 32, 64, 128, 256]
        merges = [report.phase_counts.get("merge", 0) for _, report in result.cells]
        assert merges[0] <= 6 * n
        assert all(a <= b for a, b in zip(merges, merges[1:]))
        # measured slope is about 3.6 merge predicates per point per doubling of sigma
        assert 0 < result.slope <= 8

    @pytest.mark.slow
    def test_output_suite(self):
        result = output_suite(n=2 ** 16)
        assert [spec.param for spec, _ in result.cells] == [2, 4, 8, 16, 32, 64, 128, 256, 512, 1024]
        for spec, report in result.cells:
            assert report.h == spec.param
            assert report.predicate_count <= 12 * report.n * math.log2(spec.param + 1)

    @pytest.mark.slow
    def test_entropy_suite(self):
        kappa = 16
        result = entropy_suite(n=2 ** 16, kappa=kappa)
        assert [spec.n for spec, _ in result.cells] == [2 ** 12, 2 ** 13, 2 ** 14, 2 ** 15, 2 ** 16]
        ratios = []
        for spec, report in result.cells:
            entropy = partition_entropy([spec.n - kappa + 1] + [1] * (kappa - 1))
            ratios.append(report.phase_counts["merge"] / (spec.n * (1 + entropy)))
        assert max(ratios) <= 2 * min(ratios)
