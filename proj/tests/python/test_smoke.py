import json

import pytest

import paracount

DIAMOND = [(0, 1), (0, 2), (1, 3), (2, 3)]


def test_walk_counts():
    assert paracount.count_reach(4, DIAMOND, 0, 3, 3) == 2
    assert paracount.count_reach(4, DIAMOND, 0, 3, 0) == 0
    assert paracount.count_log_reach(4, DIAMOND, 0, 3, a=2, k=1) == 2
    assert paracount.count_log_reach(4, DIAMOND, 0, 3, a=2, k=0) == 0
    assert paracount.count_log_walk(3, [(0, 1), (1, 2)], a=1, k=5) == 2
    assert paracount.count_reach_colour(3, [(0, 1), (1, 2)], [1, 2, 3], 0, 2, 3) == 1


def test_counts_are_python_ints_beyond_64_bits():
    loops = [(u, v) for u in range(2) for v in range(2)]
    value = paracount.count_reach(2, loops, 0, 0, 80)
    assert isinstance(value, int)
    assert value == 2 ** 78


def test_cnf_counts():
    assert paracount.count_log_reach2_cnf(4, DIAMOND, 0, 3, [[-1]], a=2, k=1) == 1
    full = [(0, 0), (1, 1), (0, 1), (1, 0)]
    assert paracount.count_cycle_cover2_cnf(2, full, [], a=2, k=1) == 1
    assert paracount.count_cycle_cover2_cnf(2, full, [[]], a=2, k=1) == 0


def test_pdet():
    ones = [[1, 1], [1, 1]]
    assert paracount.pdet(ones, 2) == -1
    assert paracount.pdet(ones, 2, method="clow") == -1
    assert paracount.pdet(ones, 0) == 1
    assert paracount.det_cross_check([[1, 0], [0, 1]]) == 1
    assert paracount.det_cross_check(ones) == 0


def test_errors_carry_their_name():
    with pytest.raises(paracount.Error) as info:
        paracount.count_reach(2, [(0, 1), (0, 1)], 0, 1, 2)
    assert info.value.name == "duplicate-edge"
    with pytest.raises(paracount.Error) as info:
        paracount.pdet([[0, 1], [1, 0]], 3)
    assert info.value.name == "k-out-of-range"


def test_formulas_and_homomorphisms():
    formula = json.dumps({"atom": "E", "args": [{"var": "x"}, {"var": "y"}]})
    structure = json.dumps({
        "universeSize": 3,
        "relations": [{"name": "E", "arity": 2, "tuples": [[0, 1], [1, 2], [2, 0]]}],
        "constants": [],
    })
    assert paracount.formula_size(formula) == 1
    assert paracount.count_mc(formula, structure, 1) == 3
    assert paracount.count_mc(formula, structure, 1, method="local", r=0) == 3
    assert paracount.count_mc(formula, structure, 2) == 0

    path = json.dumps({
        "universeSize": 2,
        "relations": [
            {"name": "E", "arity": 2, "tuples": [[0, 1], [1, 0]]},
            {"name": "C1", "arity": 1, "tuples": [[0]]},
            {"name": "C2", "arity": 1, "tuples": [[1]]},
        ],
        "constants": [],
    })
    assert paracount.count_hom_path_star(2, path, 2) == 1
    assert paracount.count_hom_path_star(2, path, 1) == 0


def test_branching_programs():
    program = json.dumps({
        "layers": [[0], [1]],
        "labels": {"0": {"y": 1}},
        "edges": [[0, 1, 1]],
        "numX": 0,
        "numY": 2,
        "source": 0,
        "sink": 1,
    })
    assert paracount.bp_count(program, []) == 2
    assert paracount.bp_count(program, [], method="fast") == 2
    staggered = paracount.bp_stagger(program)
    assert paracount.bp_count(staggered, [], method="fast") == 2


def test_cli_and_selftest():
    code, out, err = paracount.run_cli(["reach", "--graph", "missing.json"])
    assert code == 1
    assert "file-not-found" in err
    results = paracount.selftest(seed=7, scale="smoke")
    assert [r["criterion"] for r in results] == list(range(1, 11))
    assert all(r["passed"] for r in results)
