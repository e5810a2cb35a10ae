import json

import pytest

import prymlab


def test_catalog_names():
    names = prymlab.catalog_names()
    assert "Z2" in names
    assert "Q8" in names


def test_hyperbolicity_index():
    value, hyperbolic = prymlab.hyperbolicity_index(0, [2, 3, 7])
    assert value == "1/42"
    assert hyperbolic


def test_cover_rank_z2():
    rank, torsion = prymlab.cover_rank(2, [[1, 0]], [1, 0, 0, 0])
    assert rank == 6
    assert torsion == []


def test_action_matrix_trace():
    rows = prymlab.action_matrix(2, [[1, 0]], [1, 0, 0, 0], 1)
    trace = sum(int(rows[i][i]) for i in range(len(rows)))
    assert trace == 2


def test_quaternion():
    assert prymlab.quaternion_is_division("2", "3")
    assert not prymlab.quaternion_is_division("1", "1")


def test_run_job_roundtrip():
    job = {
        "task": "quaternion",
        "a": "2",
        "b": "3",
    }
    report = prymlab.run_job(json.dumps(job))
    doc = json.loads(report)
    assert doc["results"]["division"] is True
    assert prymlab.run_job(json.dumps(job)) == report
    text = prymlab.report_to_text(report)
    assert "quaternion" in text


def test_schema_error():
    with pytest.raises(prymlab.SchemaError):
        prymlab.run_job(json.dumps({"task": "no_such_task"}))
