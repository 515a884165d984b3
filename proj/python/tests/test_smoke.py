"""Smoke tests for the python bindings; the heavy checks live in ctest."""

import os
import subprocess

import pytest

import gral


def test_fixture_registry():
    ids = gral.fixture_ids()
    assert ids == ["F1", "F2", "F3", "F4", "F5", "F6"]
    f1 = gral.fixture("F1")
    assert f1.algebra.dim() == 2
    assert f1.algebra.is_strongly_graded()
    f3 = gral.fixture("F3")
    assert f3.algebra is None
    assert f3.action.domain_dim(0) == 1
    assert f3.action.domain_dim(1) == 0
    with pytest.raises(gral.GralError):
        gral.fixture("F9")


def test_grading_predicates():
    f2 = gral.fixture("F2").algebra
    assert f2.is_idempotent_graded()
    assert not f2.is_partially_strongly_graded()
    f4 = gral.fixture("F4").algebra
    assert f4.is_strongly_graded()
    assert f4.degree_ideal_dim(1) == 2


def test_constructions():
    f1 = gral.fixture("F1").algebra
    assert gral.smash_dim(f1) == 4
    assert gral.fmat_dim(f1) == 8
    f2 = gral.fixture("F2").algebra
    assert gral.partial_smash_dim(f2) == 3
    skew = gral.skew_group_algebra(gral.fixture("F3").action)
    assert skew.dim() == 1
    assert skew.is_partially_strongly_graded()
    assert not skew.is_strongly_graded()


def test_verifications():
    f1 = gral.fixture("F1").algebra
    rep = gral.verify_duality(f1, "F1")
    assert rep["pass"]
    assert any(c["name"] == "bijective" for c in rep["checks"])
    assert gral.verify_geq(f1)["pass"]
    assert gral.verify_sg(f1)["pass"]
    assert gral.verify_globalization_fixture("F3")["pass"]
    assert gral.verify_moritaglob(gral.fixture("F6").action)["pass"]
    assert gral.verify_self_equivalence(gral.fixture("F3").action)["pass"]


def test_generators_deterministic():
    a = gral.random_graded_algebra(5, "cyclic(2)", "q", 12)
    b = gral.random_graded_algebra(5, "cyclic(2)", "q", 12)
    assert a.dim() == b.dim()
    action = gral.random_product_partial_action(3, "cyclic(3)", "fp:101", 10)
    assert gral.check_pa_prp_equivalence(action)


def test_document_round_trip():
    text = gral.fixture_document("F1", "q")
    objs = gral.parse_document_objects(text)
    assert objs == [("F1", "graded_algebra")]
    text6 = gral.fixture_document("F6", "fp:101")
    assert gral.parse_document_objects(text6) == [("F6", "restriction")]


def test_cli_available():
    cli = os.environ.get("GRAL_CLI")
    if not cli:
        pytest.skip("GRAL_CLI not set")
    out = subprocess.run([cli, "fixtures", "list"], capture_output=True, text=True, check=True)
    assert "F1" in out.stdout
    run = subprocess.run([cli, "suite", "--seeds", "2", "--report", "machine"],
                         capture_output=True, text=True)
    assert run.returncode == 0
    assert '"pass": true' in run.stdout
