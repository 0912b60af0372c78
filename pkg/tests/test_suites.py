import pytest

from finiteweyl.suites import (
    run_suite,
    suite_basis,
    suite_group,
    suite_hw,
    suite_mub,
    suite_su2,
    suite_weyl,
)

# the d(d+1)-1 class count is a prime-modulus statement and its claim
# check is expected to fail at composite d
CLAIM_CHECKS = {"class_count_formula", "group.class_count_formula"}


def failing_names(report):
    return [c.name for c in report.checks if not c.passed]


def test_hw_suite_passes():
    report = suite_hw()
    assert report.overall, failing_names(report)


@pytest.mark.parametrize("d", [2, 3, 5, 7])
def test_group_suite_prime(d):
    report = suite_group(d)
    assert report.overall, failing_names(report)


@pytest.mark.parametrize("d", [4, 6, 9])
def test_group_suite_composite_fails_only_the_count_claim(d):
    report = suite_group(d)
    assert failing_names(report) == ["class_count_formula"]


@pytest.mark.parametrize("d", [2, 3, 4, 5, 8])
def test_weyl_suite(d):
    report = suite_weyl(d)
    assert report.overall, failing_names(report)


@pytest.mark.parametrize("d", [2, 5, 11])
def test_su2_subset(d):
    report = suite_su2(d)
    assert report.overall and len(report.checks) == 2


@pytest.mark.parametrize("p", [2, 3, 7])
def test_mub_suite_prime(p):
    report = suite_mub(p=p)
    assert report.overall, failing_names(report)
    pair_checks = [c for c in report.checks if c.name.startswith("family_unbiased_")]
    assert len(pair_checks) == (p + 1) * p // 2


def test_mub_suite_p11_has_66_pair_checks():
    report = suite_mub(p=11)
    pair_checks = [c for c in report.checks if c.name.startswith("family_unbiased_")]
    assert len(pair_checks) == 66 and report.overall


@pytest.mark.parametrize("d", [4, 6, 10])
def test_mub_suite_composite(d):
    report = suite_mub(d=d)
    assert report.overall, failing_names(report)
    pair_checks = [c for c in report.checks if c.name.startswith("minimal_triple_unbiased_")]
    assert len(pair_checks) == 3


@pytest.mark.parametrize("d", [2, 3, 4, 5, 7])
def test_basis_suite(d):
    report = suite_basis(d)
    assert report.overall, failing_names(report)


def test_basis_suite_with_tensor():
    report = suite_basis(4, tensor=(2, 2))
    assert report.overall, failing_names(report)
    names = {c.name for c in report.checks}
    assert "tensor_partition_found_and_valid" in names
    assert "search_certifies_incompleteness" in names


def test_run_suite_dispatch():
    assert run_suite("hw").suite == "hw"
    combined = run_suite("all", d=3)
    assert combined.overall, failing_names(combined)
    prefixes = {c.name.split(".")[0] for c in combined.checks}
    assert prefixes == {"hw", "group", "weyl", "mub", "basis"}
    with pytest.raises(ValueError):
        run_suite("nonsense")


def test_run_suite_all_composite_d():
    combined = run_suite("all", d=4)
    assert set(failing_names(combined)) == {"group.class_count_formula"}
