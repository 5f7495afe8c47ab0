import json

import _dkcore


def test_normalize_interval():
    moore = json.loads(_dkcore.normalize(_dkcore.fixture("simplex1", 3)))
    assert moore["kind"] == "complex"
    assert moore["ranks"] == [2, 1, 0, 0]


def test_homology_of_the_circle():
    table = _dkcore.homology(_dkcore.fixture("sphere1", 3))
    assert "H_0 = 0" in table
    assert "H_1 = Z" in table


def test_gamma_ranks():
    gamma = json.loads(_dkcore.gamma(_dkcore.fixture("sphere1", 3), 3))
    assert gamma["ranks"] == [0, 1, 2, 3]


def test_tensor_of_spheres():
    sphere = _dkcore.fixture("sphere1", 3)
    assert json.loads(_dkcore.tensor(sphere, sphere))["ranks"] == [0, 0, 1, 0]


def test_canonical_and_hash_are_stable():
    payload = _dkcore.fixture("disk2", 3)
    pretty = json.dumps(json.loads(payload), indent=2)
    assert _dkcore.canonical(pretty) == payload
    assert _dkcore.content_hash(pretty) == _dkcore.content_hash(payload)
    assert _dkcore.content_hash(payload).startswith("fnv1a:")


def test_suite_reports_are_deterministic():
    first = _dkcore.run_suite("linalg", seed=3, truncation=3, max_rank=2, cases=2)
    second = _dkcore.run_suite("linalg", seed=3, truncation=3, max_rank=2, cases=2)
    assert first == second
    report = json.loads(first)
    assert report["counts"]["fail"] == 0
    assert "timings" not in report
    assert "linalg" in _dkcore.suite_names()
