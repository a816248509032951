import csv
import io
import json

import pytest

from wedgelab.verify import CSV_FIELDS, homology_check, run_verification


def test_formula_table_up_to_ten():
    t = run_verification(10)
    assert t.passed
    assert len(t.rows) == sum(n - 1 for n in range(2, 11))
    assert all(r.betti_homology is None for r in t.rows)
    assert t[3, 3].betti_formula == 13
    assert t[3, 3].betti_recurrence_alt == 7


def test_max_k_limits_rows():
    t = run_verification(6, max_k=3)
    assert {r.k for r in t.rows} == {2, 3}
    with pytest.raises(KeyError):
        t[4, 6]


def test_homology_rows_single_worker():
    t = run_verification(5, with_homology=True, jobs=1)
    assert t.passed
    assert [r.betti_homology for r in t.rows] == [r.betti_formula for r in t.rows]


def test_parallel_matches_serial():
    a = run_verification(5, with_homology=True, jobs=1)
    b = run_verification(5, with_homology=True, jobs=2)
    assert a.to_json() == b.to_json()
    assert a.to_csv() == b.to_csv()


def test_fault_is_reported():
    t = run_verification(4, with_homology=True, jobs=1, fault=[(2, 3)])
    assert not t.passed
    bad = t.failures()
    assert [(r.k, r.n) for r in bad] == [(2, 3)]
    assert any("malformed" in p for p in bad[0].problems)


def test_homology_check_direct():
    top, chi, problems = homology_check(2, 4)
    assert (top, chi, problems) == (1, 0, [])


def test_serializations():
    t = run_verification(3)
    rows = list(csv.DictReader(io.StringIO(t.to_csv())))
    assert list(rows[0]) == CSV_FIELDS
    assert rows[-1]["betti_formula"] == "13"
    doc = json.loads(t.to_json())
    assert doc["passed"] is True
    assert doc["rows"][0]["betti_homology"] is None
    assert all(isinstance(v, str) for v in doc["rows"][0].values() if v is not None)
