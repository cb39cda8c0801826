import hrgraph


def test_a2_vertices():
    kg = hrgraph.KGraph("A2")
    assert len(kg.vertices()) == 6
    assert kg.weyl_label(kg.weyl_vertex("s1s2")) in ("s1s2",)


def test_c2_vertex_count_and_embeddings():
    kg = hrgraph.KGraph("C2", "opposite")
    assert len(kg.vertices()) == 10
    assert hrgraph.KGraph("C2").right_weak_embeddings() == 1
    assert hrgraph.KGraph("A2").left_weak_embeddings() == 0


def test_braiding_zero_entry():
    table = dict(hrgraph.braiding("A2"))
    assert len(table) == 9
    assert table["a1⊗b3"] is None
    assert table["a2⊗b2"] == "b3⊗a1"


def test_keys_example():
    left, right = hrgraph.keys([[1, 2, 3], [2, 5], [4]])
    assert left == [[1, 2, 2], [2, 4], [4]]
    assert right == [[1, 3, 3], [3, 5], [5]]


def test_verify_suite():
    report = hrgraph.verify("a2-fixtures")
    assert report["ok"]
    assert "lemmas" in hrgraph.suites


def test_errors():
    import pytest

    with pytest.raises(ValueError):
        hrgraph.keys([[2, 1]])
    with pytest.raises(Exception):
        hrgraph.KGraph("Z9")
