from __future__ import annotations

import pytest

from multiplate.suites import SUITES, run_suites

CHEAP = ["store", "lens", "biplate", "vl", "multiplate"]


@pytest.mark.parametrize("name", CHEAP)
def test_suite_passes(name):
    results = SUITES[name](size=3)
    assert results and all(r.ok for r in results), [r.verdict.describe() for r in results if not r.ok]
    assert {r.suite for r in results} == {name}


@pytest.mark.parametrize("name", ["lens", "biplate", "vl", "multiplate"])
def test_broken_fixture_fails_with_witness(name):
    results = SUITES[name](size=2, broken=True)
    *rest, fixture = results
    assert all(r.ok for r in rest)
    assert fixture.law.startswith("broken fixture")
    assert not fixture.ok and fixture.verdict.witness is not None


def test_run_suites_concatenates():
    results = run_suites(["store", "lens"])
    assert [r.suite for r in results] == ["store"] * 8 + ["lens"] * 7
