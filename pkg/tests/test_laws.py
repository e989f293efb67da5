import json

from cycop.errors import DomainError
from cycop.laws import LawReport, decompose_suite, monad_suite, rewrite_suite, run_suite


def test_reports_are_reproducible():
    a = run_suite("monad", bound=2, seed=5).to_json()
    b = run_suite("monad", bound=2, seed=5).to_json()
    assert a == b
    assert json.loads(a)["ok"]


def test_guarded_records_exceptions_as_failures():
    rep = LawReport("demo", 1, 0)

    def boom():
        raise DomainError("out of range")

    rep.guarded("law", boom, lambda: "witness")
    rep.check("other", True)
    assert not rep.ok
    assert rep.failed("law") == 1 and rep.counts == {"law": 1, "other": 1}
    assert "out of range" in rep.failures[0].witness
    text = rep.to_text()
    assert "FAIL" in text and text.endswith("result: FAIL")


def test_small_suites_pass():
    for rep in (
        monad_suite(bound=3, seed=1, count=30),
        rewrite_suite(bound=3, seed=1, count=50, max_special=3),
        decompose_suite(bound=3, seed=1, count=10),
    ):
        assert rep.ok, rep.to_text()
