"""Smoke tests for the python bindings: one pass over every exposed surface."""

import pytest

import asphera


def test_groups_and_subgroups():
    z6 = asphera.cyclic(6)
    assert z6.order == 6
    assert z6.is_abelian()
    assert z6.element_order(1) == 6

    d6 = asphera.dihedral(3)
    assert d6.order == 6
    assert not d6.is_abelian()

    subgroups = asphera.all_subgroups(z6)
    assert [len(h) for h in subgroups] == [1, 2, 3, 6]

    rotations = asphera.Subgroup([0, 1, 2], 6)
    assert asphera.is_normal(d6, rotations)
    assert asphera.quotient_group(d6, rotations).order == 2


def test_coset_poset_and_homology():
    z6 = asphera.cyclic(6)
    poset = asphera.coset_poset(z6)
    assert len(poset) == 11
    assert len(poset.hasse) == 12

    complex_ = asphera.order_complex(poset)
    assert complex_.count(0) == 11
    assert complex_.count(1) == 12
    assert asphera.euler_characteristic(complex_) == -1
    assert asphera.components(complex_) == 1

    h1 = asphera.homology(complex_, 1)
    assert h1.free_rank == 2
    assert h1.torsion == []


def test_group_homology_and_extensions():
    z6 = asphera.cyclic(6)
    triv = asphera.trivial_module(z6)
    assert str(asphera.group_homology(z6, triv, 1)) == "Z/6"
    assert asphera.group_homology(z6, triv, 2).trivial()

    shift = asphera.coset_shift_action(z6)
    module = asphera.homology_module(shift, 1)
    for k in range(5):
        assert asphera.group_homology(z6, module, k).trivial()
    # the two resolutions agree
    for k in range(4):
        assert asphera.group_homology(z6, module, k, resolution="bar") == \
            asphera.group_homology(z6, module, k, resolution="periodic")

    z2 = asphera.cyclic(2)
    triv2 = asphera.trivial_module(z2)
    sign = asphera.sign_module(2)
    classes = asphera.h2_classes(z2, triv2)
    assert classes["class_count"] == 2
    assert asphera.h2_classes(z2, sign)["class_count"] == 1


def test_spectral_sequence_and_borel():
    z6 = asphera.cyclic(6)
    shift = asphera.coset_shift_action(z6)
    report = asphera.abutment(shift, 5, 1)
    values = [d["value"]["pretty"] for d in report["degrees"]]
    assert values == ["Z", "Z/6", "0", "Z/6", "0", "Z/6"]
    assert all(d["status"] == "DETERMINED" for d in report["degrees"])

    borel = asphera.borel_homology(shift, levels=3, kmax=1)
    assert borel["certified"][1]["group"]["pretty"] == "Z/6"


def test_subordinate_reports():
    antipodal = asphera.rotation_action(6, 2, 3)
    free = asphera.subordinate_report(antipodal)
    assert free["kind"] == "FREE"
    assert (free["rank_base"], free["rank_quotient"]) == (1, 1)

    reflection = asphera.reflection_action(6)
    split = asphera.subordinate_report(reflection)
    assert split["kind"] == "SPLIT-FIXED-POINT"
    assert split["h1_action"][1]["entries"] == [[-1]]

    dihedral = asphera.dihedral_action(3)
    assert asphera.subordinate_report(dihedral)["kind"] == "DIAGRAM-ONLY"
    diagram = asphera.subgroup_diagram_check(dihedral, asphera.Subgroup([0, 1, 2], 6))
    assert diagram["index"] == 2
    assert abs(diagram["induced_h1_map"]["entries"][0][0]) == 3


def test_freeness_and_quotients():
    rot = asphera.rotation_action(6, 3, 2)
    assert asphera.is_free_action(rot)["free"]
    assert str(asphera.quotient_homology(rot, 1)) == "Z"

    refl = asphera.reflection_action(6)
    verdict = asphera.is_free_action(refl)
    assert not verdict["free"]
    assert "fixes" in verdict["witness"]
    with pytest.raises(ValueError):
        asphera.quotient_homology(refl, 1)


def test_join_and_product():
    complex_, action = asphera.milnor_join(asphera.cyclic(2), 3)
    assert complex_.count(0) == 6
    assert asphera.homology(complex_, 2).free_rank == 1

    square = asphera.staircase_product(
        asphera.closure(2, [[0, 1]]), asphera.closure(2, [[0, 1]])
    )
    assert square.count(2) == 2


def test_scale_guard():
    z12 = asphera.cyclic(12)
    with pytest.raises(RuntimeError):
        asphera.group_homology(z12, asphera.trivial_module(z12), 5, resolution="bar")
