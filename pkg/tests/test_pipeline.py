import pytest

from src.actions.handler import InvariantRegistry, Requirement
from src.actions.invariants import class_membership, default_registry, permutation_equal
from src.config import RunConfig
from src.core.carpet import CarpetSpec, TriState, profile
from src.errors import ShapeMismatch
from src.flow.coordinator import FlowCoordinator
from src.pipeline import InvariantPipeline, ReportVerdict, compare
from src.spectrum.equality import Verdict


@pytest.fixture
def pipeline():
    return InvariantPipeline(RunConfig(precision_bits=128))


def test_doubling_separates_first_pair(pipeline, ex17_D, ex17_Dprime):
    report = pipeline.compare(ex17_D, ex17_Dprime)
    assert report.verdict is ReportVerdict.NOT_EQUIVALENT
    assert report.witness == "doubling"
    assert report.entry("spectrum").result is Verdict.EQUAL
    assert report.entry("vacant_rows").differs is False
    assert not report.entry("permutation").applicable
    assert report.class_flags["F"].in_tvd is TriState.NO


def test_permutation_separates_equal_spectra(pipeline, ex18_D, ex18_Dprime):
    report = pipeline.compare(ex18_D, ex18_Dprime)
    assert report.verdict is ReportVerdict.NOT_EQUIVALENT
    assert report.witness == "permutation"
    assert report.entry("spectrum").result is Verdict.EQUAL
    assert report.entry("dimensions").result == {
        "box": Verdict.EQUAL, "assouad": Verdict.EQUAL, "hausdorff": Verdict.EQUAL
    }
    assert report.entry("doubling").differs is False
    assert report.steps_completed == list(default_registry().checks)


def test_self_comparison_is_inconclusive(pipeline, ex18_D):
    report = pipeline.compare(ex18_D, ex18_D)
    assert report.verdict is ReportVerdict.INCONCLUSIVE
    assert report.witness is None
    assert all(not entry.differs for entry in report.entries if entry.applicable)


def test_verdict_is_symmetric(pipeline, ex17_D, ex17_Dprime, ex18_D, ex18_Dprime):
    for first, second in ((ex17_D, ex17_Dprime), (ex18_D, ex18_Dprime), (ex17_D, ex18_D)):
        forward = pipeline.compare(first, second)
        backward = pipeline.compare(second, first)
        assert forward.verdict is backward.verdict
        assert forward.witness == backward.witness


def test_different_expansions_skip_shape_checks(pipeline, ex17_D, ex18_D):
    report = pipeline.compare(ex17_D, ex18_D)
    assert not report.same_shape
    for name in ("vacant_rows", "doubling", "spectrum", "permutation", "regularity"):
        assert not report.entry(name).applicable
        assert report.entry(name).reason == "expansion pairs differ"
    assert report.entry("dimensions").applicable
    assert report.witness == "dimensions"


def test_uncertified_difference_is_not_a_witness(pipeline, full_grid):
    other = CarpetSpec(n=3, m=2, digits=((0, 0), (1, 0), (0, 1)))
    report = pipeline.compare(full_grid, other)
    doubling = report.entry("doubling")
    assert doubling.differs and doubling.conditional
    assert not doubling.is_witness
    assert report.witness == "dimensions"


def test_conditional_differences_leave_verdict_open(pipeline):
    first = CarpetSpec(n=4, m=3, digits=((0, 0), (0, 1), (1, 1), (0, 2)))
    second = CarpetSpec(n=4, m=3, digits=((0, 0), (1, 0), (0, 1), (0, 2)))
    report = pipeline.compare(first, second)
    assert report.entry("doubling").differs
    assert report.entry("doubling").conditional
    assert report.verdict is ReportVerdict.INCONCLUSIVE


def test_class_membership(ex17_D, ex17_Dprime, full_grid):
    flags = class_membership(profile(ex17_D))
    assert (flags.in_t, flags.in_tv, flags.in_tvd) == (TriState.YES,) * 3

    flags = class_membership(profile(ex17_Dprime))
    assert (flags.in_t, flags.in_tv, flags.in_tvd) == (TriState.YES, TriState.YES, TriState.NO)

    flags = class_membership(profile(full_grid))
    assert flags.in_t is TriState.UNKNOWN
    assert flags.in_tvd is TriState.NO


def test_permutation_equal(ex18_D, ex18_Dprime):
    assert permutation_equal(profile(ex18_D), profile(ex18_D))
    assert not permutation_equal(profile(ex18_D), profile(ex18_Dprime))


def test_failing_check_becomes_inapplicable(pipeline, ex17_D, ex17_Dprime):
    def broken(context):
        raise RuntimeError("boom")

    registry = InvariantRegistry()
    registry.register_check("broken", broken, Requirement.NONE)
    pipeline.registry = registry
    report = pipeline.compare(ex17_D, ex17_Dprime)
    assert not report.entry("broken").applicable
    assert "boom" in report.entry("broken").reason
    assert report.verdict is ReportVerdict.INCONCLUSIVE


def test_report_serialises(ex18_D, ex18_Dprime):
    data = compare(ex18_D, ex18_Dprime).to_dict(256)
    assert data["verdict"] == "NotEquivalent"
    assert data["witness"] == "permutation"
    assert [entry["name"] for entry in data["invariants"]] == list(default_registry().checks)
    assert data["class_flags"]["E"]["in_tvd"] == "yes"


def test_compare_needs_specs(pipeline, ex18_D):
    with pytest.raises(ShapeMismatch):
        pipeline.compare(ex18_D, profile(ex18_D))


def test_analyze_report(pipeline, ex18_D):
    report = pipeline.analyze(ex18_D)
    assert report["profile"]["ell"] == [1, 3, 4, 6]
    assert report["doubling"] and not report["regular"]
    assert report["totally_disconnected"] is TriState.YES


def test_flow_coordinator_tracks_steps():
    coordinator = FlowCoordinator()
    coordinator.start_flow("run", "pair")
    coordinator.begin_step("run", "doubling")
    assert coordinator.get_flow_status("run")["current_step"] == "doubling"
    coordinator.update_flow("run", "agrees", "doubling")
    flow = coordinator.finish_flow("run", "Inconclusive")
    assert flow["steps_completed"] == ["doubling"]
    assert flow["status"] == "Inconclusive"
    assert coordinator.get_flow_status("run") == {}
