import pytest

from engel_lab import reports


def test_window_degrees_small():
    degs = reports.window_degrees(3)
    assert (1, ()) in degs
    assert (1, (1, 2, 3)) in degs
    # m = 2 contributes supports of size 2 and 3 here (types -2 and -1).
    assert (2, (1, 2)) in degs
    assert (2, (1, 2, 3)) in degs
    assert all(len(s) <= 3 for _, s in degs)


def test_window_degree_count_frozen():
    # Supports drawn from {1..n} with max(0, 2m-2) <= |S| <= min(n, 2m+1).
    assert len(reports.window_degrees(7)) == 248


def test_window_is_sorted_and_unique():
    degs = reports.window_degrees(5)
    assert degs == sorted(set(degs), key=lambda d: (d[0], len(d[1]), d[1]))


def test_dims_report_rows(shared_ctx):
    rows = reports.dims_report(3, 5)
    assert all(r["check"] == "dims" for r in rows)
    assert all(r["pass"] for r in rows)
    by_degree = {(r["degree"]["m"], tuple(r["degree"]["support"])): r for r in rows}
    top = by_degree[(2, (1, 2, 3))]
    assert top["dims"]["quotient"] == 1
    assert top["dims"]["slice"] == top["dims"]["jRank"] + 1
    total = sum(r["dims"]["quotient"] for r in rows)
    assert total == 9


def test_prop31_report():
    rep = reports.prop31_report(max_weight=4, n=3, p=5)
    assert rep["check"] == "prop3.1"
    assert rep["pass"] is True
    assert rep["rank"] == rep["tuples"]
    assert rep["rank"] <= rep["monomials"]


def test_lemma32_report_small():
    rep = reports.lemma32_report(n=4, p=5)
    assert rep["check"] == "lemma3.2"
    assert rep["pass"] is True
    assert rep["mismatches"] == []
    assert rep["degrees"] == len(reports.window_degrees(4))


def test_cases_report():
    rep = reports.cases_report(5)
    assert rep["check"] == "cases"
    assert rep["pass"] is True
    assert rep["total"] == 21
    assert rep["failed"] == []


def test_thm41_report():
    rep = reports.thm41_report(5)
    assert rep["check"] == "thm4.1"
    assert rep["pass"] is True
    assert rep["modesAgree"] is True
    assert len(rep["runs"]) == 9
