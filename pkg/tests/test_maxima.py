import dataclasses

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from synergy.bench import Family, InstanceSpec, generate
from synergy.geom_core import BlockRef, InvalidSequenceError, PreconditionError, ProbeCounter, StructuralError
from synergy.maxima import (
    ArgumentKind,
    MaximaArgument,
    MaximaCertificate,
    certificate_length,
    check_maxima_argument,
    decompose_smooth,
    dedup_points,
    is_staircase,
    left_to_right_merge,
    merge_staircases_pairwise,
    merge_two_staircases,
    quick_union_maxima,
    synergistic_maxima,
    validate_smooth,
    verify_maxima_certificate,
)
from synergy.oracles import brute_maxima, min_certificate_length_exhaustive
from tests.conftest import points, pts, staircase_instances, staircases

SMOOTH = pts((1, 5), (0, 4), (3, 3), (2, 1))
CROSSING = pts((3, 1), (1, 3))
TWO_STAIRS = [pts((1, 5), (3, 3)), pts((2, 4), (4, 1))]
DOMINATED = [pts((5, 5)), pts((1, 2), (2, 1))]


def flatten(seqs):
    return [p for seq in seqs for p in seq]


def all_distinct(seqs):
    flat = flatten(seqs)
    return len(set(flat)) == len(flat)


def output_points(seqs, cert):
    return [seqs[ref.seq - 1][pos - 1] for ref in cert.output_blocks for pos in ref.positions()]


def nudged(ref, data):
    field = data.draw(st.sampled_from(("seq", "lo", "hi")))
    return dataclasses.replace(ref, **{field: getattr(ref, field) + data.draw(st.sampled_from((-1, 1)))})


def mutated(cert, data):
    """cert with one block shifted by one, one argument's kind flipped, or one part dropped."""
    arguments, outputs = list(cert.arguments), list(cert.output_blocks)
    targets = [(arguments, i) for i in range(len(arguments))] + [(outputs, i) for i in range(len(outputs))]
    parts, index = data.draw(st.sampled_from(targets))
    move = data.draw(st.sampled_from(("drop", "nudge", "flip")))
    if move == "drop":
        del parts[index]
    elif parts is outputs:
        outputs[index] = nudged(outputs[index], data)
    elif move == "flip":
        kind = ArgumentKind.MAXIMALITY if arguments[index].kind is ArgumentKind.DOMINATION else ArgumentKind.DOMINATION
        arguments[index] = dataclasses.replace(arguments[index], kind=kind)
    else:
        arg = arguments[index]
        j = data.draw(st.integers(0, len(arg.witnesses)))
        if j == 0:
            arguments[index] = dataclasses.replace(arg, subject=nudged(arg.subject, data))
        else:
            witnesses = arg.witnesses[:j - 1] + (nudged(arg.witnesses[j - 1], data),) + arg.witnesses[j:]
            arguments[index] = dataclasses.replace(arg, witnesses=witnesses)
    return MaximaCertificate(tuple(arguments), tuple(outputs))


class TestStaircase:
    def test_is_staircase(self):
        assert is_staircase(pts((0, 3), (1, 2), (4, 0)))
        assert is_staircase([])
        assert not is_staircase(pts((0, 3), (1, 3)))

    def test_dedup_keeps_first_occurrences(self):
        counter = ProbeCounter()
        assert dedup_points(pts((1, 1), (0, 0), (1, 1)), counter) == pts((1, 1), (0, 0))
        # at least two comparisons to sort, two between neighbours
        assert set(counter.snapshot()) == {"dedup"}
        assert 4 <= counter.total <= 9

    def test_invalid_sequence_names_its_position(self):
        with pytest.raises(InvalidSequenceError) as info:
            quick_union_maxima([pts((0, 1)), pts((0, 5), (1, 1), (2, 2))])
        assert (info.value.seq, info.value.position) == (2, 3)


class TestSmooth:
    def test_validate(self):
        assert validate_smooth(SMOOTH)
        assert not validate_smooth(CROSSING)
        assert validate_smooth([])

    def test_decompose(self):
        decomposition = decompose_smooth(SMOOTH)
        assert decomposition.sigma == 1
        assert decomposition.staircases == [tuple(pts((1, 5), (3, 3)))]
        assert (decomposition.runs[0].lo, decomposition.runs[0].hi) == (1, 4)

        decomposition = decompose_smooth(CROSSING)
        assert decomposition.sigma == 2
        assert decomposition.staircases == [tuple(pts((3, 1))), tuple(pts((1, 3)))]
        assert decompose_smooth([]).sigma == 0

    @settings(max_examples=200)
    @given(points(max_size=40))
    def test_runs_are_smooth_and_maximal(self, raw):
        unique = dedup_points(raw)
        runs = decompose_smooth(unique).runs
        assert [p for run in runs for p in unique[run.lo - 1 : run.hi]] == unique
        for run, following in zip(runs, runs[1:]):
            assert not validate_smooth(unique[run.lo - 1 : following.lo])
        for run in runs:
            assert validate_smooth(unique[run.lo - 1 : run.hi])
            assert list(run.staircase) == brute_maxima(unique[run.lo - 1 : run.hi])


class TestMergeTwo:
    def test_examples(self):
        assert merge_two_staircases(*TWO_STAIRS) == pts((1, 5), (2, 4), (3, 3), (4, 1))
        assert merge_two_staircases(*DOMINATED) == pts((5, 5))
        assert merge_two_staircases(TWO_STAIRS[0], []) == TWO_STAIRS[0]

    @settings(max_examples=200)
    @given(staircases(min_size=0), staircases(min_size=0))
    def test_matches_brute_force(self, a, b):
        merged = merge_two_staircases(a, b)
        assert merged == brute_maxima(a + b)
        assert merged == merge_two_staircases(b, a)

    @given(staircase_instances())
    def test_pairwise_rounds(self, seqs):
        counter = ProbeCounter()
        assert merge_staircases_pairwise(seqs, counter) == brute_maxima(flatten(seqs))
        assert set(counter.snapshot()) <= {"merge"}


class TestQuickUnion:
    def test_interleaved_staircases(self):
        staircase, cert = quick_union_maxima(TWO_STAIRS)
        assert staircase == pts((1, 5), (2, 4), (3, 3), (4, 1))
        assert verify_maxima_certificate(TWO_STAIRS, cert)

    def test_one_point_dominates_a_sequence(self):
        staircase, cert = quick_union_maxima(DOMINATED)
        assert staircase == pts((5, 5))
        dom = [arg for arg in cert.arguments if arg.kind is ArgumentKind.DOMINATION]
        assert dom == [MaximaArgument(ArgumentKind.DOMINATION, BlockRef(1, 1, 1), (BlockRef(2, 1, 2),))]
        assert cert.output_blocks == (BlockRef(1, 1, 1),)
        assert verify_maxima_certificate(DOMINATED, cert)

    def test_single_sequence(self):
        seq = pts((0, 9), (3, 4), (7, 1))
        staircase, cert = quick_union_maxima([seq])
        assert staircase == seq
        assert cert.arguments == (MaximaArgument(ArgumentKind.MAXIMALITY, BlockRef(1, 1, 3)),)

    def test_needs_a_sequence(self):
        with pytest.raises(PreconditionError):
            quick_union_maxima([])

    def test_phases(self):
        counter = ProbeCounter()
        quick_union_maxima(TWO_STAIRS, counter)
        assert set(counter.snapshot()) <= {"merge", "certify"}
        assert counter.total > 0

    @settings(max_examples=300)
    @given(staircase_instances())
    def test_output_and_certificate(self, seqs):
        staircase, cert = quick_union_maxima(seqs)
        assert staircase == brute_maxima(flatten(seqs))
        verdict = verify_maxima_certificate(seqs, cert)
        assert verdict, verdict.reason


class TestLeftToRight:
    def test_examples(self):
        staircase, cert = left_to_right_merge(TWO_STAIRS)
        assert staircase == pts((1, 5), (2, 4), (3, 3), (4, 1))
        assert verify_maxima_certificate(TWO_STAIRS, cert)
        assert certificate_length(cert) == min_certificate_length_exhaustive(TWO_STAIRS)

    def test_single_sequence_has_one_argument(self):
        _, cert = left_to_right_merge([pts((0, 2), (1, 1))])
        assert len(cert.arguments) == 1

    def test_no_longer_than_quick_union(self):
        _, ltr = left_to_right_merge(DOMINATED)
        _, qum = quick_union_maxima(DOMINATED)
        assert verify_maxima_certificate(DOMINATED, ltr)
        assert certificate_length(ltr) == min_certificate_length_exhaustive(DOMINATED) == 1
        assert certificate_length(ltr) <= certificate_length(qum)

    @settings(max_examples=300)
    @given(staircase_instances())
    def test_valid_and_never_longer(self, seqs):
        staircase, ltr = left_to_right_merge(seqs)
        _, qum = quick_union_maxima(seqs)
        assert staircase == brute_maxima(flatten(seqs))
        verdict = verify_maxima_certificate(seqs, ltr)
        assert verdict, verdict.reason
        if all_distinct(seqs):
            assert certificate_length(ltr) <= certificate_length(qum)

    @settings(max_examples=300)
    @given(staircase_instances())
    def test_quick_union_within_eight_times_the_shortest(self, seqs):
        assume(flatten(seqs) and all_distinct(seqs))
        _, ltr = left_to_right_merge(seqs)
        _, qum = quick_union_maxima(seqs)
        assert certificate_length(qum) <= 8 * certificate_length(ltr)

    @pytest.mark.parametrize("rho", [2, 4, 16, 64])
    def test_quick_union_within_eight_times_the_shortest_on_generated_merges(self, rho):
        seqs = generate(InstanceSpec(Family.MERGE_STAIRCASES, 2048, rho, seed=rho))
        _, ltr = left_to_right_merge(seqs)
        _, qum = quick_union_maxima(seqs)
        assert certificate_length(qum) <= 8 * certificate_length(ltr)

    @settings(max_examples=150)
    @given(staircase_instances(max_sequences=3, max_size=3))
    def test_length_is_minimum(self, seqs):
        assume(len(flatten(seqs)) <= 6 and all_distinct(seqs))
        _, cert = left_to_right_merge(seqs)
        assert certificate_length(cert) == min_certificate_length_exhaustive(seqs)


class TestSynergistic:
    def test_examples(self):
        staircase, report = synergistic_maxima(SMOOTH)
        assert staircase == pts((1, 5), (3, 3))
        assert report.sigma == 1

        staircase, report = synergistic_maxima(CROSSING)
        assert staircase == pts((1, 3), (3, 1))
        assert report.sigma == 2
        assert report.h == 2

    def test_sorted_staircase_is_one_run(self):
        seq = pts(*[(i, 500 - i) for i in range(500)])
        staircase, report = synergistic_maxima(seq)
        assert staircase == seq
        assert report.sigma == 1
        assert report.phase_counts.get("merge", 0) <= 2

    def test_empty_input(self):
        staircase, report = synergistic_maxima([])
        assert staircase == []
        assert (report.n, report.sigma, report.h) == (0, 0, 0)

    def test_report_counts_duplicates_once(self):
        _, report = synergistic_maxima(pts((1, 1), (1, 1), (0, 0)))
        assert report.n == 2
        assert report.phase_counts["dedup"] >= 4

    @settings(max_examples=300)
    @given(points(max_size=60))
    def test_matches_brute_force(self, raw):
        staircase, report = synergistic_maxima(raw)
        assert staircase == brute_maxima(raw)
        assert report.h == len(staircase)
        assert sum(report.sizes) == report.n


class TestCheckArgument:
    def test_domination(self):
        arg = MaximaArgument(ArgumentKind.DOMINATION, BlockRef(1, 1, 1), (BlockRef(2, 1, 2),))
        assert check_maxima_argument(DOMINATED, arg)
        assert not check_maxima_argument([pts((5, 5)), pts((1, 2), (6, 1))], arg)

    def test_maximality(self):
        arg = MaximaArgument(ArgumentKind.MAXIMALITY, BlockRef(2, 1, 1), (BlockRef(1, 2, 2),))
        assert check_maxima_argument(TWO_STAIRS, arg)

    def test_maximality_of_a_dominated_point_fails(self):
        seqs = [pts((1, 5), (3, 3)), pts((2, 2))]
        for witness in (BlockRef(1, 1, 1), BlockRef(1, 2, 2)):
            arg = MaximaArgument(ArgumentKind.MAXIMALITY, BlockRef(2, 1, 1), (witness,))
            assert not check_maxima_argument(seqs, arg)

    def test_out_of_range_is_structural(self):
        arg = MaximaArgument(ArgumentKind.DOMINATION, BlockRef(1, 1, 1), (BlockRef(3, 1, 1),))
        with pytest.raises(StructuralError):
            check_maxima_argument(DOMINATED, arg)
        with pytest.raises(StructuralError):
            check_maxima_argument(DOMINATED, MaximaArgument(ArgumentKind.DOMINATION, BlockRef(1, 1, 1)))


class TestVerify:
    def test_empty_certificate(self):
        verdict = verify_maxima_certificate(DOMINATED, MaximaCertificate())
        assert not verdict
        assert verdict.reason.startswith("uncovered position")

    def test_widened_witness(self):
        seqs = [pts((5, 5)), pts((1, 2), (2, 1), (6, 0))]
        staircase, cert = quick_union_maxima(seqs)
        assert staircase == pts((5, 5), (6, 0))
        assert verify_maxima_certificate(seqs, cert)

        narrow = BlockRef(2, 1, 2)
        widened = dataclasses.replace
        arguments = tuple(
            widened(arg, witnesses=(BlockRef(2, 1, 3),)) if arg.witnesses == (narrow,) else arg for arg in cert.arguments
        )
        assert arguments != cert.arguments
        assert not verify_maxima_certificate(seqs, MaximaCertificate(arguments, cert.output_blocks))

    def test_missing_maximality_argument(self):
        _, cert = quick_union_maxima(TWO_STAIRS)
        arguments = tuple(arg for arg in cert.arguments if arg.kind is not ArgumentKind.MAXIMALITY)
        assert not verify_maxima_certificate(TWO_STAIRS, MaximaCertificate(arguments, cert.output_blocks))

    def test_out_of_range_block_is_invalid_not_raised(self):
        cert = MaximaCertificate(output_blocks=(BlockRef(4, 1, 1),))
        verdict = verify_maxima_certificate(DOMINATED, cert)
        assert not verdict
        assert verdict.reason.startswith("structural")

    @settings(max_examples=200)
    @given(staircase_instances(), staircase_instances())
    def test_certificate_for_another_instance(self, seqs, other):
        assume(brute_maxima(flatten(seqs)) != brute_maxima(flatten(other)))
        _, cert = quick_union_maxima(other)
        if verify_maxima_certificate(seqs, cert):
            assert output_points(seqs, cert) == brute_maxima(flatten(seqs))

    @settings(max_examples=400)
    @given(staircase_instances(), st.data())
    def test_mutated_certificates_prove_nothing_false(self, seqs, data):
        assume(flatten(seqs))
        _, cert = quick_union_maxima(seqs)
        mutant = mutated(cert, data)
        if verify_maxima_certificate(seqs, mutant):
            assert output_points(seqs, mutant) == brute_maxima(flatten(seqs))

