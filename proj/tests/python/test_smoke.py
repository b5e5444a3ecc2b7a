import json

import pytest

import qpoints

EXAMPLE = (
    "n = 3\n"
    "q 0 1 = a\n"
    "q 0 2 = b\n"
    "q 0 3 = x\n"
    "q 1 2 = a^-1*b\n"
    "q 1 3 = c\n"
    "q 2 3 = a*b^-1*c\n"
)


def test_example_components():
    q = qpoints.parse_matrix_file(EXAMPLE)
    v = qpoints.components(q)
    assert v.components == [[0, 1, 2], [1, 2, 3], [0, 3]]
    assert v.dimension == 2
    assert not v.is_full_space


def test_degeneration_fills_the_space():
    q = qpoints.parse_matrix_file(EXAMPLE.replace("q 0 3 = x", "q 0 3 = a*c"))
    v = qpoints.components(q)
    assert v.components == [[0, 1, 2, 3]]
    assert v.is_full_space
    assert qpoints.is_rank_one(q)


def test_sign_matrix_gives_all_pairs():
    v = qpoints.components(qpoints.sign_matrix(3))
    assert v.components == [[i, j] for i in range(4) for j in range(i + 1, 4)]
    assert v.dimension == 1


def test_scalar_arithmetic_and_round_trip():
    a = qpoints.UnitMonomial("a")
    b = qpoints.parse_scalar("a^-1*b")
    assert (a * b) == qpoints.parse_scalar("b")
    assert (a / a).is_one()
    assert qpoints.parse_scalar(qpoints.format_scalar(a * b)) == a * b
    assert str(qpoints.parse_scalar("-1")) == "-1"


def test_matrix_round_trip_and_accessors():
    q = qpoints.parse_matrix_file(EXAMPLE)
    assert qpoints.parse_matrix_file(qpoints.format_matrix_file(q)) == q
    assert q.n == 3
    assert q.at(1, 0) == q.at(0, 1).inv()
    assert q.is_valid()


def test_oracles_agree_on_random_matrices():
    for seed in range(10):
        q = qpoints.random_matrix(4, seed=seed, max_phase_denominator=6, symbol_count=3)
        v = qpoints.components(q)
        assert qpoints.brute_force_components(q) == v
        assert qpoints.recursive_components(q) == v
        assert qpoints.recursive_components(q, qpoints.EliminationOrder.lowest_first) == v


def test_membership():
    q = qpoints.parse_matrix_file(EXAMPLE)
    one = qpoints.parse_scalar("1")
    assert qpoints.membership(q, [one, None, None, one])
    assert not qpoints.membership(q, [one, one, None, one])


def test_localize_and_delete():
    q = qpoints.parse_matrix_file(EXAMPLE)
    smaller, kept = qpoints.delete_index(q, 3)
    assert kept == [0, 1, 2]
    assert smaller.at(0, 1) == qpoints.parse_scalar("a")
    local, kept = qpoints.localize(q, 0)
    assert kept == [1, 2, 3]
    assert local.at(0, 1).is_one()


def test_json_schema():
    v = qpoints.components(qpoints.parse_matrix_file(EXAMPLE))
    doc = json.loads(v.to_json())
    assert list(doc.keys()) == ["n", "components", "dimension", "is_full_space"]
    assert doc["components"] == [[0, 1, 2], [1, 2, 3], [0, 3]]


def test_errors_are_raised():
    with pytest.raises(qpoints.QpointsError):
        qpoints.parse_scalar("0")
    with pytest.raises(qpoints.QpointsError):
        qpoints.parse_matrix_file("n = 1\n")  # missing entry
    with pytest.raises(qpoints.QpointsError):
        qpoints.coherent(qpoints.sign_matrix(2), 0, 0, 1)


def test_cli_in_process():
    code, out, err = qpoints.run_cli(["components", "-", "--json"], EXAMPLE)
    assert code == 0 and err == ""
    assert json.loads(out)["components"] == [[0, 1, 2], [1, 2, 3], [0, 3]]
    code, _, err = qpoints.run_cli(["components", "-"], "garbage")
    assert code == 2 and "error" in err
