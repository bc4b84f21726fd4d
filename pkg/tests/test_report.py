import json

import pytest

from core.config import Caps, Field
from core.errors import BadArguments, Inconclusive, NotComparable, SizeCapExceeded
from suites.divposet import suite_divposet
from suites.report import (
    EXIT_COUNTEREXAMPLE,
    EXIT_INCONCLUSIVE,
    EXIT_OK,
    Job,
    Outcome,
    VerificationReport,
    execute,
    implication_ladder,
    run_jobs,
    suite_config,
)


def passing(x):
    outcome = Outcome()
    outcome.expect("square", x * x, x ** 2)
    outcome.note(f"checked {x}")
    return outcome


def failing(x):
    outcome = Outcome()
    outcome.expect("set", {1, 2}, {x})
    return outcome


def out_of_budget():
    raise Inconclusive("node_budget", "search tree too large")


def too_big():
    raise SizeCapExceeded("koszul_poset", 10, 11)


def broken():
    raise NotComparable("a is not below b")


def test_execute_kinds():
    assert execute(Job("a", "2", passing, (2,)))[1] == "pass"
    key, kind, payload = execute(Job("b", "3", failing, (3,)))
    assert (key, kind) == ("b", "fail")
    assert payload["expected"] == {"set": [1, 2]}
    assert payload["got"] == {"set": [3]}
    assert execute(Job("c", "", out_of_budget))[2]["cap"] == "node_budget"
    assert execute(Job("d", "", too_big))[2]["cap"] == "koszul_poset"
    assert execute(Job("e", "", broken))[2]["error"] == "NotComparable"


def test_run_jobs_aggregates_in_key_order():
    jobs = [
        Job("2", "three", failing, (3,)),
        Job("0", "one", passing, (1,)),
        Job("1", "budget", out_of_budget),
        Job("3", "error", broken),
    ]
    report = run_jobs("demo", jobs, {"k": 1})
    assert report.instances == 4
    assert report.passed == 1
    assert [f["instance"] for f in report.failures] == ["three", "error"]
    assert report.inconclusive[0]["instance"] == "budget"
    assert report.notes == ["0: checked 1"]
    assert report.exit_code == EXIT_COUNTEREXAMPLE
    assert report.check_totals()


def test_duplicate_keys():
    with pytest.raises(BadArguments):
        run_jobs("demo", [Job("0", "a", passing, (1,)), Job("0", "b", passing, (2,))])


def test_exit_codes():
    report = VerificationReport("demo")
    assert report.exit_code == EXIT_OK
    report.add_inconclusive("x", "node_budget", "")
    assert report.exit_code == EXIT_INCONCLUSIVE
    report.add_failure("y", 1, 2)
    assert report.exit_code == EXIT_COUNTEREXAMPLE
    report.add_pass()
    assert report.check_totals()
    assert report.summary_line() == "demo: 3 instances, 1 passed, 1 failed, 1 inconclusive"


def test_merge():
    a = run_jobs("a", [Job("0", "one", passing, (1,))])
    b = run_jobs("b", [Job("0", "three", failing, (3,))])
    merged = a.merge(b)
    assert merged.instances == 2
    assert merged.passed == 1
    assert len(merged.failures) == 1
    assert merged.check_totals()


def test_report_json(tmp_path):
    report = run_jobs("demo", [Job("0", "one", passing, (1,))], suite_config(Caps(), Field(5), max_p=3))
    path = tmp_path / "report.json"
    report.write(str(path))
    payload = json.loads(path.read_text())
    assert payload["exit_code"] == 0
    assert payload["config"]["field"] == "f5"
    assert payload["config"]["max_p"] == 3
    assert payload["config"]["caps"]["node_budget"] == Caps().node_budget


def test_implication_ladder():
    outcome = Outcome()
    implication_ladder(outcome, vd=True, shellable=False, cm=True, pure=True)
    failed = [name for name, exp, got in outcome.checks if exp != got]
    assert failed == ["vd => shellable"]


def test_workers_do_not_change_the_report():
    serial = suite_divposet(max_rank=2, workers=1)
    parallel = suite_divposet(max_rank=2, workers=2)
    assert serial.to_json() == parallel.to_json()
    assert serial.exit_code == EXIT_OK
