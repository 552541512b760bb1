import pytest

from immaculate import combinat as cb
from immaculate import polytope as P
from immaculate import rules, symfunc
from immaculate.combinat import DomainError
from immaculate.tableaux import ImmaculateTableau, enumerate_immaculate

from golden import LARGE_ARRAY, LARGE_HIVE_MISPRINTS, LARGE_HIVE_PRINTED, LARGE_INNER, LARGE_ROWS
from golden import SMALL_ARRAYS, SMALL_HIVES, SMALL_TABLEAUX

SMALL = P.PolytopeSpec((1, 2), (3, 2, 1), (3, 4, 2))


def test_spec_defaults_and_validation():
    assert SMALL.m == 3 and SMALL.N == 6 and SMALL.alpha == (1, 2, 0)
    with pytest.raises(DomainError):
        P.PolytopeSpec((1,), (1, 2), (2, 2))
    with pytest.raises(DomainError):
        P.PolytopeSpec((1,), (1,), (3,))
    with pytest.raises(DomainError):
        P.PolytopeSpec((1,), (1,), (2,), prefix_rule="other")


def test_small_example_points():
    points = P.enumerate_points(SMALL)
    assert sorted(p.to_json() for p in points) == sorted(SMALL_ARRAYS)
    assert P.count_hive_points(SMALL) == 2


def test_small_example_arrays_and_hives():
    for rows, arr, hive in zip(SMALL_TABLEAUX, SMALL_ARRAYS, SMALL_HIVES):
        T = ImmaculateTableau((1, 2), rows)
        a = P.array_from_tableau(T, SMALL)
        assert a.to_json() == arr
        assert P.violations(a, SMALL) == []
        h = P.hive_from_array(a)
        assert h.to_json() == hive
        assert P.hive_violations(h, SMALL) == []
        assert P.array_from_hive(h) == a
        assert P.tableau_from_array(a) == T


def test_render_is_a_centered_triangle():
    a = P.TriangularArray(tuple(tuple(r) for r in SMALL_ARRAYS[0]))
    assert a.render() == "   0\n  1 2\n 2 1 1\n0 0 1 1"


def test_larger_example_array():
    T = ImmaculateTableau(LARGE_INNER, LARGE_ROWS)
    a = P.array_from_tableau(T, check=False)
    assert a.to_json() == LARGE_ARRAY


def test_larger_example_hive_up_to_misprints():
    h = P.hive_from_array(P.TriangularArray(tuple(tuple(r) for r in LARGE_ARRAY))).to_json()
    for j, row in enumerate(LARGE_HIVE_PRINTED):
        for i, printed in enumerate(row):
            want = LARGE_HIVE_MISPRINTS.get((j, i), printed)
            assert h[j][i] == want, (i, j)
    # the printed value cannot come from any array: h[1][j] is nondecreasing in j
    assert LARGE_HIVE_PRINTED[4][1] < LARGE_HIVE_PRINTED[3][1]


def test_larger_example_tableau_is_not_a_point():
    # the printed tableau has content (4,3,3,1) and row 2 one cell short of beta
    T = ImmaculateTableau(LARGE_INNER, LARGE_ROWS)
    assert T.content() == (4, 3, 3, 1)
    assert T.outer() == (3, 5, 5, 5, 2)
    spec = P.PolytopeSpec(LARGE_INNER, (5, 3, 3, 1), (3, 6, 5, 5, 2))
    a = P.TriangularArray(tuple(tuple(r) for r in LARGE_ARRAY))
    assert set(P.violations(a, spec)) == {"3", "4", "5"}
    assert P.count_points(spec) == rules.lr_coefficient(LARGE_INNER, (5, 3, 3, 1), (3, 6, 5, 5, 2))


def test_prefix_rule_matters():
    spec = P.PolytopeSpec(LARGE_INNER, (5, 3, 3, 1), (3, 6, 5, 5, 2), prefix_rule="printed")
    assert P.count_points(spec) > rules.lr_coefficient(LARGE_INNER, (5, 3, 3, 1), (3, 6, 5, 5, 2))


def test_default_N_can_be_too_small():
    # with nu empty the default N is 0, which kills the only tableau
    spec = P.PolytopeSpec((1, 1), (), (1, 1))
    assert spec.N == 0
    assert P.count_points(spec) == 0
    assert rules.lr_coefficient((1, 1), (), (1, 1)) == 1
    assert P.count_points(P.PolytopeSpec((1, 1), (), (1, 1), N=1)) == 1


@pytest.mark.parametrize("n", range(0, 6))
def test_points_match_lr_with_large_N(n):
    for a in range(n + 1):
        for alpha in cb.compositions_of(a):
            for nu in cb.partitions_of(n - a):
                tally = rules.lr_tally(alpha, nu)
                for beta in cb.compositions_of(n):
                    spec = P.PolytopeSpec(alpha, nu, beta, N=max(beta, default=0))
                    count = P.count_points(spec)
                    assert count == tally.get(beta, 0), (alpha, nu, beta)
                    assert P.count_hive_points(spec) == count


@pytest.mark.parametrize("n", range(0, 6))
def test_array_tableau_bijection(n):
    for a in range(n + 1):
        for alpha in cb.compositions_of(a):
            for nu in cb.partitions_of(n - a):
                for T in enumerate_immaculate(alpha, nu, yamanouchi=True):
                    arr = P.array_from_tableau(T)
                    assert P.tableau_from_array(arr) == T


def test_classical_cs_count():
    # arguments are (inner, outer, content)
    assert P.classical_cs_count((2, 1), (3, 2, 1), (2, 1)) == 2
    assert P.classical_cs_count((2, 1), (4, 2), (2, 1)) == 1
    assert P.classical_cs_count((2, 1), (2, 1), ()) == 1
    assert P.classical_cs_count((2, 1), (3,), ()) == 0
    for mu in cb.partitions_of(3):
        for nu in cb.partitions_of(2):
            for lam in cb.partitions_of(5):
                assert P.classical_cs_count(mu, lam, nu) == symfunc.classical_lr(mu, nu, lam)
