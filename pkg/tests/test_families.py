import pytest

from multischeme.families import build_family
from multischeme.ideals import Ideal


def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        build_family("mystery")


def test_parameter_validation():
    with pytest.raises(ValueError):
        build_family("primitive", nu=1)
    with pytest.raises(ValueError):
        build_family("koszul", n=1)
    with pytest.raises(ValueError):
        build_family("split", a=-1)
    with pytest.raises(ValueError):
        build_family("ci_subsets", c=3)
    with pytest.raises(ValueError):
        build_family("nontypeI", a=0)


def test_primitive_family_manifest():
    fam = build_family("primitive", nu=2, n=2)
    assert len(fam.structures) == 3
    for st, expect in zip(fam.structures, fam.manifest):
        assert st.multiplicity() == expect["multiplicity"] == 3
        cm, _ = st.locally_cm()
        assert cm == expect["locally_cm"]


def test_koszul_family_hilbert_manifest():
    fam = build_family("koszul", n=2)
    (st,), (entry,) = fam.structures, fam.manifest
    assert st.multiplicity() == entry["multiplicity"] == 4
    assert st.hilbert_polynomial() == entry["hilb"]
    cm, _ = st.locally_cm()
    assert cm


def test_ci_subsets_multiplicities_follow_subset_size():
    fam = build_family("ci_subsets")
    assert [e["multiplicity"] for e in fam.manifest] == [1, 2, 2, 3]
    for st, entry in zip(fam.structures, fam.manifest):
        assert st.multiplicity() == entry["multiplicity"]
    # containment of ideals is reverse containment of subsets
    ideals = [st.ideal for st in fam.structures]
    assert ideals[0].contains_ideal(ideals[1])
    assert ideals[1].contains_ideal(ideals[3])
    assert not ideals[1].contains_ideal(ideals[2])


def test_split_family_decomposes():
    fam = build_family("split", n=1, a=0, b=1)
    triple, da, db = fam.structures
    assert triple.multiplicity() == 3
    assert da.multiplicity() == 2 and db.multiplicity() == 2
    assert triple.hilbert_polynomial() == fam.manifest[0]["hilb"]
    assert triple.ideal.contains_ideal(Ideal(triple.embedding.ring, []))
    # each double contains the triple
    assert da.ideal.contains_ideal(triple.ideal) or triple.ideal.contains_ideal(da.ideal)


def test_bundle_family_smoke():
    fam = build_family("bundle")
    (st,), (entry,) = fam.structures, fam.manifest
    assert st.multiplicity() == entry["multiplicity"] == 3
    cm, _ = st.locally_cm()
    assert cm


def test_family_char_parameter_is_recorded():
    fam = build_family("primitive", nu=2, n=2, char=5)
    assert fam.params["char"] == 5
    assert fam.structures[0].embedding.ring.char == 5
    assert fam.structures[0].multiplicity() == 3
