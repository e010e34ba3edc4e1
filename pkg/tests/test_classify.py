"""Classifier tests.

The golden traces mirror the published technique descriptions for setting
3 and 8; the soundness property is checked against an independent
evaluation of the decomposition.
"""

import random

import pytest

from suanpan.classify import ReasoningTag, classify, decomposition_formula
from suanpan.core import AbacusConfig, read_value
from suanpan.errors import UnreplayableTrace
from suanpan.gestures import (
    ClickLower,
    ClickUpper,
    CompoundMove,
    ExchangeFive,
    IconSeeNumber,
    IconSetZero,
    MoveLower,
    MoveUpper,
    Register,
    Trace,
    replay,
)

V = Register.VIRTUAL_ABACUS
M = Register.MATERIAL_ABACUS

T = ReasoningTag


def material(*gestures, target=None):
    return Trace(M, tuple(gestures), target=target)


def virtual(*gestures, target=None):
    return Trace(V, tuple(gestures), target=target)


# The six ways of setting 8 on the units rod.
EIGHT_T1 = material(MoveUpper(0, +1), MoveLower(0, +3))
EIGHT_T2 = material(MoveUpper(0, +1), MoveLower(0, +1), MoveLower(0, +1), MoveLower(0, +1))
EIGHT_T3 = material(
    *[MoveLower(0, +1)] * 5, ExchangeFive(0), *[MoveLower(0, +1)] * 3
)
EIGHT_T4 = material(*[MoveLower(0, +1)] * 5, ExchangeFive(0), MoveLower(0, +3))
EIGHT_T5 = material(CompoundMove(0, lower_delta=+3, upper_delta=+1))
EIGHT_T6 = virtual(
    IconSeeNumber(on=True), ClickLower(0, 5), ClickUpper(0, 1), ClickLower(0, 4)
)

# The three ways of setting 3.
THREE_T1 = virtual(ClickLower(0, 1), ClickLower(0, 2), ClickLower(0, 3))
THREE_T2 = virtual(ClickLower(0, 3))
THREE_T3 = virtual(IconSeeNumber(on=True), ClickLower(0, 4), ClickLower(0, 4))


class TestGoldenEight:
    def test_t1_calculating(self):
        report = classify(EIGHT_T1, target=8)
        assert report.technique_id == "RA_T1"
        assert report.tags == {T.CALCULATING}
        assert report.formula == "8=5+3"
        assert report.correct

    def test_t2_quantity_value_then_counting(self):
        report = classify(EIGHT_T2, target=8)
        assert report.technique_id == "RA_T2"
        assert report.tags == {T.QUANTITY_VALUE, T.COUNTING}
        assert report.formula == "8=5+1+1+1"

    def test_t3_counting_with_exchange(self):
        report = classify(EIGHT_T3, target=8)
        assert report.technique_id == "RA_T3"
        assert report.tags == {T.COUNTING, T.EXCHANGE}
        assert report.formula == "8=(1+1+1+1+1)+1+1+1"

    def test_t4_exchange_then_block(self):
        report = classify(EIGHT_T4, target=8)
        assert report.technique_id == "RA_T4"
        assert report.tags == {T.COUNTING, T.EXCHANGE, T.ORDINALITY}
        assert report.formula == "8=(1+1+1+1+1)+3"

    def test_t5_compound_single_gesture(self):
        report = classify(EIGHT_T5, target=8)
        assert report.technique_id == "RMA_T5"
        assert report.tags == {T.CALCULATING}
        assert report.formula == "8=5+3 (one gesture)"

    def test_t6_trial_error(self):
        report = classify(EIGHT_T6, target=8)
        assert report.technique_id == "RVA_T6"
        assert T.TRIAL_ERROR in report.tags
        assert report.correct


class TestGoldenThree:
    def test_t1_counting(self):
        report = classify(THREE_T1, target=3)
        assert report.technique_id == "RA_T1"
        assert report.tags == {T.COUNTING}
        assert report.formula == "3=1+1+1"

    def test_t2_ordinality(self):
        report = classify(THREE_T2, target=3)
        assert report.technique_id == "RA_T2"
        assert report.tags == {T.ORDINALITY}
        assert report.formula == "3"

    def test_t3_trial_error(self):
        report = classify(THREE_T3, target=3)
        assert report.technique_id == "RVA_T3"
        assert T.TRIAL_ERROR in report.tags
        assert report.correct


class TestDecomposition:
    def test_t1_groups(self):
        report = classify(EIGHT_T1, target=8)
        assert [g.to_json() for g in report.decomposition] == [5, 3]

    def test_t2_groups(self):
        report = classify(EIGHT_T2, target=8)
        assert [g.to_json() for g in report.decomposition] == [5, 1, 1, 1]

    def test_t4_groups_nest_the_exchanged_five(self):
        report = classify(EIGHT_T4, target=8)
        assert [g.to_json() for g in report.decomposition] == [[1, 1, 1, 1, 1], 3]

    def test_scaled_by_rank(self):
        # two counted tens then the five-unit counter on the units: inscription A
        trace = virtual(
            ClickLower(1, 1), ClickLower(1, 2), ClickUpper(0, 1), target=25
        )
        report = classify(trace, target=25)
        assert report.formula == "25=20+5=(10+10)+5"
        assert [g.to_json() for g in report.decomposition] == [10, 10, 5]

    def test_rank_weights_off(self):
        trace = virtual(ClickLower(1, 1), ClickLower(1, 2), ClickUpper(0, 1))
        report = classify(trace, target=25)
        assert decomposition_formula(report, rank_weights=False) == "7=2+5=(1+1)+5"


class TestTrialErrorRules:
    def test_see_number_before_final_state_flags(self):
        trace = virtual(IconSeeNumber(on=True), ClickUpper(0, 1), ClickLower(0, 3))
        report = classify(trace, target=8)
        assert T.TRIAL_ERROR in report.tags

    def test_see_number_after_final_state_does_not_flag(self):
        trace = virtual(ClickUpper(0, 1), ClickLower(0, 3), IconSeeNumber(on=True))
        report = classify(trace, target=8)
        assert T.TRIAL_ERROR not in report.tags
        assert report.technique_id == "RA_T1"

    def test_monotonicity_inserting_see_number(self):
        base = virtual(ClickUpper(0, 1), ClickLower(0, 3))
        before = classify(base, target=8)
        for position in range(len(base.gestures)):
            gestures = list(base.gestures)
            gestures.insert(position, IconSeeNumber(on=True))
            report = classify(Trace(V, tuple(gestures)), target=8)
            assert report.tags >= before.tags
            assert report.tags - before.tags <= {T.TRIAL_ERROR}

    def test_deactivating_correction_flags(self):
        trace = material(MoveLower(0, +4), MoveLower(0, -1))
        report = classify(trace, target=3)
        assert T.TRIAL_ERROR in report.tags
        assert report.correct
        # material corrections are not the see-number technique
        assert report.technique_id == ""

    def test_set_zero_restart(self):
        trace = virtual(
            ClickLower(0, 4), IconSetZero(), ClickLower(0, 1), ClickLower(0, 2), ClickLower(0, 3)
        )
        report = classify(trace, target=3)
        assert T.TRIAL_ERROR in report.tags
        assert T.COUNTING in report.tags
        assert report.correct
        assert sum(sum(g.scaled()) for g in report.decomposition) == 3


class TestMultiRod:
    def test_hybrid_gets_sub_reports_and_no_top_level_id(self):
        # counting on the tens, one ordinal block on the units: 23
        trace = material(
            MoveLower(1, +1),
            MoveLower(1, +1),
            MoveLower(0, +3),
            target=23,
        )
        report = classify(trace, target=23)
        assert report.technique_id == ""
        assert "multi-rod" in report.notes
        assert {r.rod for r in report.sub_reports} == {0, 1}
        tens = next(r for r in report.sub_reports if r.rod == 1)
        assert tens.tags == {T.COUNTING}
        assert tens.technique_id == "RA_T1"
        units = next(r for r in report.sub_reports if r.rod == 0)
        assert units.tags == {T.ORDINALITY}
        assert units.technique_id == "RA_T2"
        assert report.correct
        assert report.formula == "23=20+3=(10+10)+3"

    def test_economical_73(self):
        trace = material(MoveUpper(1, +1), MoveLower(1, +2), MoveLower(0, +3), target=73)
        report = classify(trace, target=73)
        assert report.correct
        assert report.formula == "73=70+3=(50+20)+3"


class TestSoundness:
    def test_decomposition_sums_to_final_value_randomized(self):
        rng = random.Random(20260810)
        for _ in range(300):
            config = AbacusConfig.zeros(3)
            gestures = []
            for _ in range(rng.randrange(1, 10)):
                rod = rng.randrange(3)
                state = config.rods[rod]
                options = [ClickLower(rod, rng.randint(1, 5)), ClickUpper(rod, rng.randint(1, 2))]
                if state.lower == 5 and state.upper <= 1:
                    options.append(ExchangeFive(rod))
                if rng.random() < 0.1:
                    options.append(IconSeeNumber(on=True))
                gesture = rng.choice(options)
                gestures.append(gesture)
                config = replay(Trace(V, (gesture,)), config).final
            trace = Trace(V, tuple(gestures))
            report = classify(trace, target=0, rod_count=3)
            final = replay(trace, AbacusConfig.zeros(3)).final
            assert sum(sum(g.scaled()) for g in report.decomposition) == read_value(final)

    def test_soundness_on_material_traces(self):
        rng = random.Random(8455)
        for _ in range(300):
            config = AbacusConfig.zeros(2)
            gestures = []
            for _ in range(rng.randrange(1, 8)):
                rod = rng.randrange(2)
                state = config.rods[rod]
                options = []
                lower_moves = [d for d in range(-state.lower, 6 - state.lower) if d != 0]
                upper_moves = [d for d in range(-state.upper, 3 - state.upper) if d != 0]
                if lower_moves:
                    options.append(MoveLower(rod, rng.choice(lower_moves)))
                if upper_moves:
                    options.append(MoveUpper(rod, rng.choice(upper_moves)))
                if lower_moves and upper_moves:
                    options.append(CompoundMove(rod, rng.choice(lower_moves), rng.choice(upper_moves)))
                if state.lower == 5 and state.upper <= 1:
                    options.append(ExchangeFive(rod))
                gesture = rng.choice(options)
                gestures.append(gesture)
                config = replay(Trace(M, (gesture,)), config).final
            trace = Trace(M, tuple(gestures))
            report = classify(trace, target=0, rod_count=2)
            assert sum(sum(g.scaled()) for g in report.decomposition) == read_value(config)

    def test_deterministic(self):
        a = classify(EIGHT_T3, target=8)
        b = classify(EIGHT_T3, target=8)
        assert a == b


class TestEdges:
    def test_single_bead_is_ambiguous(self):
        report = classify(virtual(ClickLower(0, 1)), target=1)
        assert report.tags == frozenset()
        assert "ambiguous-single-bead" in report.notes
        assert report.correct

    def test_five_then_single_is_quantity_value(self):
        report = classify(virtual(ClickUpper(0, 1), ClickLower(0, 1)), target=6)
        assert T.QUANTITY_VALUE in report.tags
        assert T.COUNTING not in report.tags
        assert "ambiguous-single-bead" in report.notes

    def test_empty_trace(self):
        report = classify(Trace(V, ()), target=0)
        assert report.correct
        assert "empty-trace" in report.notes
        assert report.formula == "0"

    def test_unreplayable_propagates(self):
        with pytest.raises(UnreplayableTrace):
            classify(virtual(MoveLower(0, +1)), target=1)

    def test_explicit_rod_count_is_strict(self):
        off_the_frame = virtual(ClickLower(5, 1))
        with pytest.raises(UnreplayableTrace):
            classify(off_the_frame, target=0, rod_count=2)
        # without a declared size the abacus is inferred to cover the trace
        assert classify(off_the_frame, target=0, rod_count=None).decomposition

    def test_wrong_final_value_is_incorrect(self):
        report = classify(virtual(ClickLower(0, 4)), target=3)
        assert not report.correct

    def test_report_json_shape(self):
        data = classify(EIGHT_T4, target=8).to_json()
        assert data == {
            "technique_id": "RA_T4",
            "tags": ["counting", "exchange", "ordinality"],
            "decomposition": [[1, 1, 1, 1, 1], 3],
            "formula": "8=(1+1+1+1+1)+3",
            "correct": True,
            "notes": [],
        }

    def test_multi_rod_report_json_carries_sub_reports(self):
        trace = material(MoveLower(1, +1), MoveLower(1, +1), MoveLower(0, +3))
        data = classify(trace, target=23).to_json()
        assert data["technique_id"] == ""
        assert "multi-rod" in data["notes"]
        assert data["decomposition"] == [10, 10, 3]
        subs = {entry["rod"]: entry for entry in data["sub_reports"]}
        assert subs[1]["formula"] == "20=10+10"
        assert subs[1]["tags"] == ["counting"]
        assert subs[0]["decomposition"] == [3]
