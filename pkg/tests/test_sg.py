import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypernim.errors import CacheIntegrityError, ResourceLimitError
from hypernim.hypergraph import Hypergraph, make_symmetric
from hypernim.oracles import brute_sg, brute_tetris, xor_all
from hypernim.sg import SgTable, mex, nim_sum, sg_on_box, sg_value
from hypernim.verify import find_sg_violation


def test_mex():
    assert mex(set()) == 0
    assert mex({0, 1, 3}) == 2
    assert mex({1, 2}) == 0
    assert mex(iter([0, 0, 1])) == 2


def test_nim_sum():
    assert nim_sum((1, 2, 3)) == 0
    assert nim_sum((0, 0, 0, 0)) == 0
    assert nim_sum((5,)) == 5


def test_sg_value_examples():
    assert sg_value(make_symmetric(4, (2, 3)), (0, 0, 0, 0)) == 0
    assert sg_value(make_symmetric(3, (1,)), (1, 2, 3)) == 0
    H = make_symmetric(3, (1, 2))
    assert sg_value(H, (5, 5, 5)) == 0
    assert brute_sg(H)((5, 5, 5)) == 0


def test_sg_on_box_classical_nim():
    table = sg_on_box(make_symmetric(2, (1,)), (3, 3))
    for x in itertools.product(range(4), repeat=2):
        assert table[x] == x[0] ^ x[1]


def test_sg_on_box_single_edge_is_minimum():
    table = sg_on_box(make_symmetric(3, (3,)), (2, 2, 2))
    for x in itertools.product(range(3), repeat=3):
        assert table[x] == min(x)


def test_sg_on_zero_box():
    table = sg_on_box(make_symmetric(3, (1, 2)), (0, 0, 0))
    assert len(table) == 1 and table[(0, 0, 0)] == 0


def test_box_budget():
    with pytest.raises(ResourceLimitError):
        sg_on_box(make_symmetric(3, (1,)), (9, 9, 9), limit=10)


@pytest.mark.parametrize("H", [
    make_symmetric(3, (1, 2)),
    make_symmetric(3, (2,)),
    Hypergraph(3, [[1], [2, 3]]),
    Hypergraph(3, [[1, 2], [1, 2, 3], [3]]),
], ids=lambda H: H.descriptor())
def test_box_matches_brute_force(H):
    G = brute_sg(H)
    table = sg_on_box(H, (3, 3, 3))
    assert table.normalized == H.is_symmetric
    for x in itertools.product(range(4), repeat=3):
        assert table[x] == G(x)
    assert find_sg_violation(table) is None


def test_single_position_and_box_agree():
    H = make_symmetric(4, (2,))
    table = sg_on_box(H, (3, 3, 3, 3))
    cold = SgTable(H)
    for x in itertools.product(range(4), repeat=4):
        assert sg_value(H, x, cold) == table[x]


def test_sg_bounded_by_tetris():
    H = make_symmetric(3, (1, 2))
    T = brute_tetris(H)
    table = sg_on_box(H, (4, 4, 4))
    for x in itertools.product(range(5), repeat=3):
        assert table[x] <= T(x)


def test_violation_detector_catches_bad_table():
    table = sg_on_box(make_symmetric(2, (1,)), (2, 2))
    table.values[(1, 0)] = 0
    assert find_sg_violation(table) is not None


def test_csv_layout():
    table = sg_on_box(make_symmetric(2, (1,)), (1, 1))
    assert table.to_csv() == "x1,x2,sg\n0,0,0\n1,0,1\n1,1,0\n"
    expanded = table.expanded_csv().splitlines()
    assert expanded[0] == "x1,x2,sg" and len(expanded) == 5
    assert expanded[2] == "0,1,1"


def test_write_read_round_trip(tmp_path):
    H = make_symmetric(3, (1, 2))
    table = sg_on_box(H, (3, 3, 3))
    path = table.write(tmp_path / "t.csv")
    again = SgTable.read(path, H)
    assert again == table
    assert again.to_csv() == path.read_text()


def test_read_detects_corruption(tmp_path):
    H = make_symmetric(3, (1, 2))
    path = sg_on_box(H, (2, 2, 2)).write(tmp_path / "t.csv")
    path.write_text(path.read_text().replace(",0\n", ",1\n", 1))
    with pytest.raises(CacheIntegrityError):
        SgTable.read(path, H)


def test_read_rejects_other_hypergraph(tmp_path):
    path = sg_on_box(make_symmetric(3, (1, 2)), (2, 2, 2)).write(tmp_path / "t.csv")
    with pytest.raises(CacheIntegrityError):
        SgTable.read(path, make_symmetric(3, (2,)))


def test_parallel_layers_match_serial():
    H = make_symmetric(3, (1, 2))
    serial = sg_on_box(H, (5, 5, 5), jobs=1)
    parallel = sg_on_box(H, (5, 5, 5), jobs=3)
    assert serial.to_csv() == parallel.to_csv()


@given(st.lists(st.integers(0, 7), min_size=2, max_size=3).map(tuple))
@settings(max_examples=60, deadline=None)
def test_classical_nim_is_nim_sum(x):
    H = make_symmetric(len(x), (1,))
    assert sg_value(H, x) == nim_sum(x) == xor_all(x)


@given(st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)),
       st.permutations(range(3)))
@settings(max_examples=60, deadline=None)
def test_permutation_invariance_against_raw_solver(x, perm):
    H = make_symmetric(3, (2, 3))
    raw = brute_sg(H)
    y = tuple(x[perm[i]] for i in range(3))
    assert sg_value(H, y) == raw(x) == raw(y)
