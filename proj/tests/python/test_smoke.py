import pytest

import unipcount as uc


def test_diagram_ops():
    assert uc.transpose([4, 2]) == [2, 2, 1, 1]
    assert uc.collapse([3, 1], "C") == [2, 2]
    assert uc.orbit_dim([2, 2], "C") == 6
    assert uc.is_valid_orbit([3, 1, 1], "B")
    assert not uc.is_valid_orbit([3, 1], "C")


def test_parity_and_duality():
    split = uc.split_parity("B", [4, 3, 3, 2])
    assert split["good"] == [4, 2]
    assert split["bad"] == [3, 3]
    assert split["nb"] == 3
    assert uc.bv_dual("C", [3, 1, 1]) == [2, 2]
    assert uc.infinitesimal_character("C", [3, 1, 1]) == [1.0, 0.0]


def test_cells_and_pbp():
    assert uc.primitive_pairs("C", [5, 3, 3, 3, 3, 1, 1]) == [(1, 2), (5, 6)]
    iota, jmath = uc.cell_diagrams("C", [5, 3, 3, 3, 3, 1, 1])
    assert (iota, jmath) == ([3, 2], [3, 1])
    elements = uc.pbp("C", [3, 1, 1])
    assert elements == ["*|*|C", "r|s|C", "c|s|C", "d|s|C"]
    assert uc.pbp_signature("**/*/c|**d/*/d|B+") == (10, 9)
    assert uc.group_of("**/*/c|**d/*/d|B+") == "SO(10,9)"


def test_descent_and_gf():
    out = uc.descend("**/*s/*s/rc|**/*/*|D", [7, 7, 7, 3])
    assert out == "*/*/*/r|*s/*/*|C"
    assert uc.gf("B", [2]) == "p^3 + 2 p^2 q + 2 p q^2 + q^3"
    assert uc.gf("Cstar", [3]) == "p^2 + q^2"


def test_counts():
    report = uc.unip_count("Sp:4", "C", [3, 1, 1], verify=True)
    assert report["count"] == 8
    assert report["cross_checks"]["genfun"] == 8
    assert uc.unip_count("", "CC", [5, 3, 3, 3, 3, 1, 1])["count"] == 4
    assert uc.count_real_orbits("U:1,1", [2]) == 2
    with pytest.raises(uc.UnipError):
        uc.unip_count("Sp:4", "C", [4, 2])
