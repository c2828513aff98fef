import pytest

from qnalg.laurent import ONE
from qnalg.relations import (
    SuiteConfig, engine_holds, model_holds, relation_suite, run_suite, schedule,
)
from qnalg.word_algebra import U, W, Wstar


def test_toeplitz_suite_passes():
    report = relation_suite("toeplitz", bound=12)
    assert report.passed, [r.label for r in report.failures][:5]
    assert report.algebra == "nt"


def test_cuntz_suite_passes_in_qn():
    report = relation_suite("cuntz", bound=8)
    assert report.passed and report.algebra == "qn"


def test_cuntz_identity_fails_in_nt():
    report = relation_suite("cuntz", bound=8, algebra="nt")
    failed = {r.label for r in report.failures}
    assert failed == {f"sum_k u^k s_{m} s_{m}* u^-k = 1" for m in range(2, 9)}
    assert all(not r.engine_ok and not r.model_ok for r in report.failures)


@pytest.mark.parametrize("name", ["nica", "laca-raeburn", "laca_raeburn"])
def test_other_suites_pass(name):
    assert relation_suite(name, bound=10, seed=7).passed


def test_schedule_is_seeded():
    a = schedule(SuiteConfig("toeplitz", bound=6, seed=1))
    b = schedule(SuiteConfig("toeplitz", bound=6, seed=1))
    c = schedule(SuiteConfig("toeplitz", bound=6, seed=2))
    assert [x[0] for x in a] == [x[0] for x in b]
    assert [x[0] for x in a] != [x[0] for x in c]


def test_false_identity_is_caught_by_both_routes():
    lhs = [(ONE, [W(2), U])]
    rhs = [(ONE, [U, W(2)])]
    assert not engine_holds("nt", lhs, rhs)
    assert not model_holds("nt", lhs, rhs)
    assert not model_holds("qn", [(ONE, [Wstar(2), W(3)])], [(ONE, [W(2), Wstar(3)])])


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite(SuiteConfig("bogus"))
