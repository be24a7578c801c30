import json

import numpy as np
import pytest
from sympy.combinatorics import Permutation, PermutationGroup

import oracles
from gcodelab import groups

ALL_CONSTRUCTED = [
    groups.make_cyclic(1),
    groups.make_cyclic(6),
    groups.make_dihedral(1),
    groups.make_dihedral(4),
    groups.make_dihedral(5),
    groups.make_symmetric(3),
    groups.make_symmetric(4),
    groups.make_quaternion8(),
    groups.make_elementary_abelian(2, 3),
    groups.make_elementary_abelian(3, 2),
    groups.direct_product(groups.make_cyclic(4), groups.make_cyclic(2)),
]


def test_constructor_audits_pass_and_orders_divide():
    for g in ALL_CONSTRUCTED:
        assert g.table[0].tolist() == list(range(g.order))
        for o in g.element_orders:
            assert g.order % o == 0


def test_trivial_group():
    g = groups.make_cyclic(1)
    assert g.table.tolist() == [[0]] and g.order == 1


def test_symmetric_order_and_closure_matches_sympy():
    s4 = groups.make_symmetric(4)
    assert s4.order == 24
    # a 4-cycle and a transposition generate everything
    perms = [tuple(int(c) for c in lab) for lab in s4.labels]
    four_cycle = perms.index((1, 2, 3, 0))
    transposition = perms.index((1, 0, 2, 3))
    sub = groups.subgroup_generated(s4, [four_cycle, transposition])
    assert len(sub) == 24
    assert PermutationGroup(Permutation(0, 1, 2, 3), Permutation(0, 1)).order() == 24
    closure = oracles.closure_scan(
        s4.table.tolist(), s4.inverse.tolist(), [four_cycle, transposition]
    )
    assert len(closure) == 24


def test_product_matches_elementary_abelian():
    a = groups.direct_product(groups.make_cyclic(2), groups.make_cyclic(2))
    b = groups.make_elementary_abelian(2, 2)
    assert np.array_equal(a.table, b.table)


def test_quaternion_relations():
    q8 = groups.make_quaternion8()
    lab = {name: i for i, name in enumerate(q8.labels)}
    assert q8.mul(lab["i"], lab["j"]) == lab["k"]
    assert q8.mul(lab["j"], lab["i"]) == lab["-k"]
    assert q8.mul(lab["i"], lab["i"]) == lab["-1"]
    assert q8.mul(lab["-1"], lab["-1"]) == lab["1"]
    assert sorted(q8.element_orders) == [1, 2, 4, 4, 4, 4, 4, 4]


def test_dihedral_relations():
    d4 = groups.make_dihedral(4)
    lab = {name: i for i, name in enumerate(d4.labels)}
    # s r s^{-1} = r^{-1}
    sr = d4.mul(lab["s"], lab["r"])
    assert d4.mul(sr, d4.inv(lab["s"])) == lab["r3"]
    assert d4.element_orders[lab["r"]] == 4
    assert d4.element_orders[lab["s"]] == 2


def test_subgroup_generated_examples():
    assert groups.subgroup_generated(groups.make_cyclic(5), []).members == (0,)
    c4 = groups.make_cyclic(4)
    assert groups.subgroup_generated(c4, [2]).members == (0, 2)
    with pytest.raises(ValueError):
        groups.subgroup_generated(c4, [7])


def test_is_subgroup_examples():
    c6 = groups.make_cyclic(6)
    assert groups.is_subgroup(c6, [0])
    assert not groups.is_subgroup(c6, [2, 4])  # identity missing
    assert groups.is_subgroup(c6, [0, 2, 4])
    assert not groups.is_subgroup(c6, [0, 3, 4])


def test_subgroup_validation():
    c6 = groups.make_cyclic(6)
    with pytest.raises(ValueError):
        groups.Subgroup(c6, [0, 2])  # not closed: 2+2=4 missing
    h = groups.Subgroup(c6, [0, 3])
    assert h.index == 3


def test_right_cosets():
    c4 = groups.make_cyclic(4)
    h = groups.Subgroup(c4, [0, 2])
    assert groups.right_cosets(c4, h) == [[0, 2], [1, 3]]
    whole = groups.Subgroup(c4, range(4))
    assert groups.right_cosets(c4, whole) == [[0, 1, 2, 3]]
    triv = groups.Subgroup(c4, [0])
    assert groups.right_cosets(c4, triv) == [[0], [1], [2], [3]]


def test_cosets_partition_property():
    d4 = groups.make_dihedral(4)
    for seed in range(d4.order):
        h = groups.subgroup_generated(d4, [seed])
        blocks = groups.right_cosets(d4, h)
        flat = sorted(x for b in blocks for x in b)
        assert flat == list(range(d4.order))
        assert all(len(b) == len(h) for b in blocks)
        assert blocks[0] == list(h.members)


def test_p_part():
    assert groups.p_part(groups.make_symmetric(4), 2) == 8
    assert groups.p_part(groups.make_cyclic(5), 2) == 1
    assert groups.p_part_int(7920, 2) == 16


def test_is_p_group():
    assert groups.is_p_group(groups.make_cyclic(8), 2)
    assert not groups.is_p_group(groups.make_symmetric(4), 2)
    assert groups.is_p_group(groups.make_cyclic(1), 3)


def test_normal_p_complement():
    c6 = groups.make_cyclic(6)
    comp = groups.normal_p_complement(c6, 2)
    assert comp.members == (0, 2, 4)

    s3 = groups.make_symmetric(3)
    comp = groups.normal_p_complement(s3, 2)
    assert comp is not None and len(comp) == 3
    assert all(s3.element_orders[m] in (1, 3) for m in comp.members)
    assert oracles.is_normal_scan(s3.table.tolist(), s3.inverse.tolist(), comp.members)

    assert groups.normal_p_complement(groups.make_symmetric(4), 2) is None
    q8 = groups.make_quaternion8()
    assert groups.normal_p_complement(q8, 2).members == (0,)


def test_corrupt_tables_rejected():
    c4 = groups.make_cyclic(4)
    bad = c4.table.copy()
    bad[1, 1] = 1  # row 1 repeats an entry
    with pytest.raises(ValueError):
        groups.Group(bad)
    shifted = (c4.table + 1) % 4  # identity no longer at 0
    with pytest.raises(ValueError):
        groups.Group(shifted)
    # Latin square but not associative
    nonassoc = np.array([[0, 1, 2, 3, 4],
                         [1, 0, 3, 4, 2],
                         [2, 4, 0, 1, 3],
                         [3, 2, 4, 0, 1],
                         [4, 3, 1, 2, 0]])
    with pytest.raises(ValueError):
        groups.Group(nonassoc)


def test_order_caps():
    with pytest.raises(ValueError):
        groups.make_cyclic(4097)
    with pytest.raises(ValueError):
        groups.make_symmetric(6)
    with pytest.raises(ValueError):
        groups.direct_product(groups.make_cyclic(100), groups.make_cyclic(100))


def test_from_spec():
    assert groups.from_spec("cyclic:8").order == 8
    assert groups.from_spec("elemabelian:2,3").order == 8
    assert groups.from_spec("quaternion8").name == "Q8"
    g = groups.from_spec("cyclic:4xcyclic:2")
    assert g.order == 8 and g.source == "cyclic:4xcyclic:2"
    with pytest.raises(ValueError):
        groups.from_spec("frobnicate:9")


def test_json_round_trip(tmp_path):
    g = groups.make_dihedral(4)
    path = tmp_path / "d4.json"
    groups.save_group(g, str(path))
    loaded = groups.load_group(str(path))
    assert np.array_equal(loaded.table, g.table)
    assert loaded.labels == g.labels and loaded.name == g.name

    data = json.loads(path.read_text())
    data["table"][0][0] = 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    with pytest.raises(ValueError):
        groups.load_group(str(bad))
