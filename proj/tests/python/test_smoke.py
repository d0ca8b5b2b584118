import json
import pathlib

import pytest

import torlab

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "fixtures"


def test_check_ids_match_index():
    assert [e["check_id"] for e in torlab.reference_index()] == torlab.check_ids()


def test_single_check_passes():
    doc = torlab.verify("2.90", timing=False)
    assert doc["version"] == 1
    (report,) = doc["checks"]
    assert report["status"] == "pass"
    assert report["runtime_ms"] == 0


def test_suite_is_deterministic():
    a = torlab.verify(bound=8, window=6, samples=30, timing=False)
    b = torlab.verify(bound=8, window=6, samples=30, timing=False)
    assert a == b
    assert all(c["status"] == "pass" for c in a["checks"])


def test_fixture_round_trip():
    assert torlab.nonwpr_descriptor(8) == json.loads((FIXTURES / "nonwpr.json").read_text())


def test_wpr_fixture_witness():
    verdict = torlab.wpr_principal(torlab.nonwpr_descriptor(8), "x", 1, 8)
    assert verdict["verdict"] == "NotProZeroUpTo(8)"
    assert verdict["witness"]["cycle"] == "y_8"


def test_errors_surface():
    with pytest.raises(torlab.TorlabError):
        torlab.verify("9.99")
