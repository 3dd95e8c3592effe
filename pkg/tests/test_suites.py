import pytest

from jordeform.suites import ALGEBRAS, SUITES, applicable, ladder_matrices, run_suite


def test_applicability():
    assert applicable("fock", "h6") and not applicable("fock", "h6-dual")
    assert applicable("iso", "schrodinger") and not applicable("iso", "h6")
    assert all(applicable("hopf", a) for a in ALGEBRAS)


def test_run_suite_errors():
    with pytest.raises(ValueError):
        run_suite("plots", "h6")
    with pytest.raises(ValueError):
        run_suite("hopf", "sl2")
    with pytest.raises(ValueError):
        run_suite("fb", "schrodinger")


@pytest.mark.parametrize("algebra", ALGEBRAS)
def test_every_applicable_suite_passes_at_order_two(algebra):
    for s in SUITES:
        if applicable(s, algebra):
            rep = run_suite(s, algebra, order=2, dim=10, degree=8)
            assert rep.passed, (s, [r.identity for r in rep.failures()])
            assert all(r.suite == rep.name for r in rep.records)


def test_ladder_matrices():
    lad = ladder_matrices(5)
    assert lad["N"].entry(3, 3) == 3
    assert lad["B-"].entry(1, 3) == 6
