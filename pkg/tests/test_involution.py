import pytest

from immaculate import combinat as cb
from immaculate import involution as inv
from immaculate import rules, verify
from immaculate.tableaux import ImmaculateTableau, T_set, YTableau, is_yamanouchi

from golden import TRACES


def strip(rows):
    rows = [list(r) for r in rows]
    while rows and not rows[-1]:
        rows.pop()
    return rows


@pytest.mark.parametrize("case", TRACES, ids=["T1", "T2", "padded-lambda"])
def test_published_traces(case):
    alpha, lam, rows, sigma, Y, cell, theta_Y, rows_prime, sigma_prime = case
    T = ImmaculateTableau(alpha, rows)
    t = inv.trace(T, lam)
    assert tuple(t["sigma"]) == sigma
    assert strip(t["Y"]) == Y
    assert tuple(t["cell"]) == cell
    assert strip(t["theta_Y"]) == theta_Y
    assert ImmaculateTableau.from_json(t["T_prime"]) == ImmaculateTableau(alpha, rows_prime)
    assert tuple(t["sigma_prime"]) == sigma_prime


def test_most_nefarious_cells():
    assert inv.most_nefarious_cell(YTableau(((1, 1), (3,), (1, 2, 3)))) == (3, 1)
    assert inv.most_nefarious_cell(YTableau(((), (1, 1, 3), (2, 2, 3)))) == (2, 1)


def test_theta_examples():
    assert inv.theta(YTableau(((1, 1), (3,), (1, 2, 3)))).rows == ((1, 1), (2, 3), (1, 3))
    assert inv.theta(YTableau(((), (1, 1, 3), (2, 2, 3)))).rows == ((1, 3), (1,), (2, 2, 3))


def test_Y_of_yamanouchi_tableau_is_semistandard():
    for T in [ImmaculateTableau((1, 2), ((1, 1), (1, 2), (2, 3))), ImmaculateTableau((1, 2), ((1, 1), (2, 2), (1, 3)))]:
        Y = inv.build_Y(T, (3, 2, 1))
        assert inv.sigma_of(T, (3, 2, 1)) == (1, 2, 3)
        assert inv.nefarious_cells(Y) == []
        assert inv.phi(T, (3, 2, 1)) == T


@pytest.mark.parametrize("alpha, lam", [((1, 2), (2, 2, 2)), ((1, 2), (3, 2, 1)), ((2,), (2, 1, 1)), ((1, 1), (3, 3, 0))])
def test_phi_cancels_down_to_lr_count(alpha, lam):
    fixed = {}
    for T, sigma in T_set(alpha, lam):
        image = inv.phi(T, lam)
        assert inv.phi(image, lam) == T
        if image == T:
            assert sigma == tuple(range(1, len(sigma) + 1))
            assert is_yamanouchi(T.reading_word())
            fixed[T.outer()] = fixed.get(T.outer(), 0) + 1
        else:
            assert image.outer() == T.outer()
            assert cb.sign(inv.sigma_of(image, lam)) == -cb.sign(sigma)
    assert fixed == {k: v for k, v in rules.lr_tally(alpha, lam).items() if v}


def test_involution_suite_small():
    result = verify.run_suite("involution", max_size=5)
    assert result.ok, result.failures[:3]
