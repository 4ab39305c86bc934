import pytest
from hypothesis import given, strategies as st

from twocolored.bipartition import (
    BiPartitionSystem,
    ConcatDiagram,
    HalvedSides,
    build_system,
    count_systems_bruteforce,
    d_and_t,
    diagram_to_residual,
    halves,
    iter_systems,
    render,
    residual_to_system,
    to_diagram,
    triangular,
)
from twocolored.colored_partitions import decompose, enumerate_E
from twocolored.partition_core import enumerate_partitions, enumerate_strict_partitions, p_table

from oracles import one_plus, product_of_polys, systems_by_subsets

EX1 = BiPartitionSystem((9, 5, 3, 1), (7, 1))
EX2 = BiPartitionSystem((13, 9, 5, 3, 1), (9, 7, 3))

odd_sides = st.sets(st.integers(0, 12).map(lambda a: 2 * a + 1), max_size=6).map(
    lambda s: tuple(sorted(s, reverse=True))
)


def test_build_system():
    sys = build_system((5, 3, 1), (3,))
    assert (sys.c, sys.orientation, sys.L, sys.R) == (2, "normal", (5, 3, 1), (3,))
    empty = build_system((), ())
    assert (empty.c, empty.orientation, empty.weight) == (0, "normal", 0)
    sys = build_system((1,), (9, 3))
    assert (sys.c, sys.orientation, sys.L, sys.R) == (1, "swapped", (9, 3), (1,))
    assert (sys.beta_odd, sys.alpha_odd) == ((1,), (9, 3))


@pytest.mark.parametrize("beta,alpha", [((4,), ()), ((3, 3), ()), ((1, 3), ()), ((), (2,))])
def test_build_system_rejects_bad_sides(beta, alpha):
    with pytest.raises(ValueError):
        build_system(beta, alpha)


def test_system_requires_longer_left():
    with pytest.raises(ValueError):
        BiPartitionSystem((1,), (3, 1))


def test_halves():
    assert halves(EX1) == HalvedSides((5, 3, 2, 1), (3, 0))
    assert halves(EX2) == HalvedSides((7, 5, 3, 2, 1), (4, 3, 1))
    assert halves(BiPartitionSystem((1,), ())) == HalvedSides((1,), ())


def test_d_and_t():
    assert d_and_t(EX1) == (14, 12) and EX1.weight == 26
    assert d_and_t(EX2) == (26, 24) and EX2.weight == 50
    assert d_and_t(BiPartitionSystem((), ())) == (0, 0)


def test_to_diagram_examples():
    assert to_diagram(EX1) == ConcatDiagram(2, (1, 2, 6, 4, 1))
    assert to_diagram(EX2) == ConcatDiagram(2, (1, 2, 7, 7, 6, 2, 1))
    assert to_diagram(BiPartitionSystem((3, 1), ())) == ConcatDiagram(2, (1, 2))
    assert to_diagram(EX1).cells == 14


def test_render_example_two():
    assert render(EX2).splitlines() == [
        "B", "BB", "--", "BBBGGGG", "BBBBGGG", "BBBBBG", "BB", "B",
    ]


def test_diagram_to_residual():
    assert diagram_to_residual(ConcatDiagram(2, (1, 2, 6, 4, 1))) == (2, (6, 4, 1))
    assert diagram_to_residual(ConcatDiagram(2, (1, 2, 7, 7, 6, 2, 1))) == (2, (7, 7, 6, 2, 1))
    assert diagram_to_residual(ConcatDiagram(2, (1, 2))) == (2, ())
    assert sum((6, 4, 1)) == 14 - triangular(2)


@pytest.mark.parametrize("c,rows", [(2, (1, 3, 4)), (1, (2, 1)), (0, (1, 2))])
def test_diagram_validation(c, rows):
    with pytest.raises(ValueError):
        ConcatDiagram(c, rows)


def test_residual_to_system_examples():
    assert residual_to_system(2, (6, 4, 1)) == EX1
    assert residual_to_system(2, ()) == BiPartitionSystem((3, 1), ())
    assert residual_to_system(0, (1,)) == BiPartitionSystem((1,), (1,))
    assert residual_to_system(2, (7, 7, 6, 2, 1)) == EX2
    with pytest.raises(ValueError):
        residual_to_system(0, (1,), "swapped")
    with pytest.raises(ValueError):
        residual_to_system(1, (1, 2))


def test_count_examples():
    assert count_systems_bruteforce(2, 3) == 1
    assert count_systems_bruteforce(1, 0) == 0
    assert count_systems_bruteforce(0, 4) == 5
    assert count_systems_bruteforce(2, 14) == 56
    assert count_systems_bruteforce(5, 14) == 0


@pytest.mark.parametrize("c", range(0, 4))
@pytest.mark.parametrize("d", range(0, 10))
def test_bruteforce_matches_bitmask_oracle(c, d):
    assert count_systems_bruteforce(c, d) == systems_by_subsets(c, d)


def test_count_law():
    table = p_table(25)
    for c in range(6):
        for d in range(26):
            assert count_systems_bruteforce(c, d) == table[d - triangular(c)], (c, d)


def all_systems(weight_max):
    odd = {w: enumerate_strict_partitions(w, "odd_only") for w in range(weight_max + 1)}
    for n in range(weight_max + 1):
        for w in range(n + 1):
            for a in odd[w]:
                for b in odd[n - w]:
                    yield build_system(a, b)


def test_roundtrip_A_and_d_t_relations():
    seen = 0
    for sys in all_systems(30):
        d, t = d_and_t(sys)
        assert d - t == sys.c and d + t == sys.weight
        dia = to_diagram(sys)
        assert dia.cells == d
        assert residual_to_system(*diagram_to_residual(dia), sys.orientation) == sys
        seen += 1
    # one system per pair of odd strict sides: coefficients of (1+q)^2 (1+q^3)^2 ...
    pairs = product_of_polys([one_plus(e, 30) for e in range(1, 31, 2) for _ in (0, 1)], 30)
    assert seen == sum(pairs)


def test_roundtrip_B():
    for c in range(6):
        for w in range(21):
            for mu in enumerate_partitions(w):
                sys = residual_to_system(c, mu)
                assert sys.c == c
                assert diagram_to_residual(to_diagram(sys)) == (c, mu)
                assert d_and_t(sys)[0] == w + triangular(c)


@given(odd_sides, odd_sides)
def test_roundtrip_property(beta, alpha):
    sys = build_system(beta, alpha)
    c, mu = diagram_to_residual(to_diagram(sys))
    assert sum(mu) == d_and_t(sys)[0] - triangular(c)
    assert residual_to_system(c, mu, sys.orientation) == sys


@pytest.mark.parametrize("c", range(1, 8))
def test_square_fixed_point(c):
    sys = residual_to_system(c, ())
    assert sys.R == ()
    assert sys.L == tuple(range(2 * c - 1, 0, -2))
    assert sys.weight == c * c
    d, t = d_and_t(sys)
    assert (d, t) == (triangular(c), triangular(c - 1))


def test_iter_systems_all_have_requested_c_and_d():
    for sys in iter_systems(3, 12):
        assert sys.c == 3 and d_and_t(sys)[0] == 12


def test_E_partitions_map_into_systems():
    for p in enumerate_E(18):
        t = decompose(p)
        sys = build_system(t.beta_odd, t.alpha_odd)
        assert (sys.beta_odd, sys.alpha_odd) == (t.beta_odd, t.alpha_odd)
        assert sys.c == abs(t.k - t.j)
