import pytest

from cacforge.bounds import new_bound
from cacforge.codes import Code, verify_cac
from cacforge.constructions import construct_lemma1
from cacforge.errors import BudgetExceeded
from cacforge.oracle import (
    build_graph,
    certify,
    max_equi_diff_cac,
    max_general_cac,
)


def test_build_graph_dedupes_mirrors():
    # generators 1..4 of Z_5 share the single difference set {1,2,3,4}
    g = build_graph(5, 3)
    assert len(g.vertices) == 1
    assert g.generators == (1,)


def test_build_graph_ordering():
    g = build_graph(9, 3)
    # exceptional generator 3 has the smaller difference set, so it sorts last
    assert g.generators[-1] == 3
    sizes = [len(v) for v in g.vertices]
    assert sizes == sorted(sizes, reverse=True)


def test_oracle_pins():
    for L, w, want in [(5, 3, 1), (9, 3, 2), (13, 3, 3), (15, 3, 4), (8, 2, 4)]:
        res = max_equi_diff_cac(L, w)
        assert res.size == want
        assert res.exact
        assert len(res.witness) == want
        assert verify_cac(res.witness).ok


def test_oracle_witness_deterministic():
    assert max_equi_diff_cac(9, 3).witness.canonical_generators() == [1, 3]
    assert max_equi_diff_cac(13, 3).witness.canonical_generators() == [1, 3, 4]
    assert max_equi_diff_cac(15, 3).witness.canonical_generators() == [1, 3, 4, 5]


def test_oracle_never_beats_bound(rng):
    for _ in range(40):
        L = rng.randint(3, 60)
        w = rng.choice([3, 4, 5])
        if L < w:
            continue
        res = max_equi_diff_cac(L, w)
        assert res.size <= new_bound(L, w).floor_value


def test_oracle_json():
    obj = max_equi_diff_cac(15, 3).to_json()
    assert obj == {
        "L": 15,
        "w": 3,
        "max": 4,
        "witness": [1, 3, 4, 5],
        "exact": True,
    }


def test_oracle_length_cap():
    with pytest.raises(BudgetExceeded):
        max_equi_diff_cac(201, 3)
    with pytest.raises(BudgetExceeded):
        max_equi_diff_cac(121, 4)
    # explicit cap override in either direction
    with pytest.raises(BudgetExceeded):
        max_equi_diff_cac(15, 3, cap=10)
    assert max_equi_diff_cac(125, 4, cap=130).size > 0


def test_oracle_node_budget_carries_incumbent():
    with pytest.raises(BudgetExceeded) as ei:
        max_equi_diff_cac(199, 3, budget=1)
    err = ei.value
    assert not err.exact
    assert err.size >= 1
    assert isinstance(err.best, Code)
    assert verify_cac(err.best).ok
    assert len(err.best) == err.size


def test_oracle_671_11_exact():
    # 331 distinct difference sets; completes in a few seconds and nails
    # down the true maximum, which the analytic bound (floor 34) overshoots
    res = max_equi_diff_cac(671, 11, budget=40_000_000, cap=700)
    assert res.exact
    assert res.size == 32
    assert new_bound(671, 11).floor_value == 34


def test_certify_fills_oracle_fields():
    cert = construct_lemma1(13, 3)
    assert cert.oracle_max is None
    done = certify(cert)
    assert done.oracle_max == 3
    assert done.flags.optimal_by_oracle is True
    # original is untouched
    assert cert.flags.optimal_by_oracle is None


def test_max_general_cac_pins():
    assert max_general_cac(5, 3)[0] == 1
    size, sups = max_general_cac(9, 3)
    assert size == 2
    assert all(0 in s for s in sups)
    assert max_general_cac(15, 3)[0] == 4


def test_max_general_cac_cap():
    with pytest.raises(BudgetExceeded):
        max_general_cac(41, 3)
    with pytest.raises(ValueError):
        max_general_cac(3, 1)


def test_general_never_below_equi_diff(rng):
    for _ in range(15):
        L = rng.randint(4, 24)
        w = rng.choice([2, 3])
        if L < w:
            continue
        general, _ = max_general_cac(L, w)
        assert general >= max_equi_diff_cac(L, w).size
