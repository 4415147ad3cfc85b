import itertools

import pytest
from hypothesis import given, settings, strategies as st

from centerbench import catalog
from centerbench.colimits import NotFound
from centerbench.comonoids import (
    CouniversalArrow, cofree_comonoid, comonoid_category, enumerate_comonoids,
    epi_transfer_check, epi_transfer_instances, generating_sets, is_comonoid,
    is_generating_set, lift_generating_set, quotients_of,
)
from centerbench.constructions import construct
from centerbench.errors import FormatError
from centerbench.fincat import validate_category


def comonoids_by_brute_force(c):
    """Every (C, Δ, ε) checked against the strict comonoid laws directly."""
    found = []
    for x in c.objects:
        for d, e in itertools.product(c.hom(x, c.tensor_obj(x, x)), c.hom(x, c.unit)):
            i = c.identity(x)
            coassoc = (c.compose(c.tensor_mor(d, i), d) == c.compose(c.tensor_mor(i, d), d))
            counit = (c.compose(c.tensor_mor(e, i), d) == i == c.compose(c.tensor_mor(i, e), d))
            if coassoc and counit:
                found.append((x, d, e))
    return found


@pytest.mark.parametrize("name", ["trivial", "z4", "s3-discrete", "d4-discrete", "d12", "d30",
                                  "m3", "bz2", "z2-endo", "braided-parallel", "d6-x-bz2"])
def test_enumeration_matches_brute_force(name):
    c = catalog.get(name)
    got = [(m.carrier, m.comult, m.counit) for m in enumerate_comonoids(c)]
    assert sorted(got) == sorted(comonoids_by_brute_force(c))


def test_group_has_only_the_unit_comonoid():
    c = catalog.get("s3-discrete")
    assert [m.carrier for m in enumerate_comonoids(c)] == ["e"]


def test_is_comonoid_rejects_bad_counit():
    c = catalog.get("bz2")
    assert is_comonoid(c, "*", "id_*", "id_*")
    assert not is_comonoid(c, "*", "id_*", "t")


@pytest.mark.parametrize("name", ["d30", "z2-endo", "braided-parallel", "bz2"])
def test_comonoid_category_is_monoidal_over_braided_base(name):
    k = comonoid_category(catalog.get(name))
    assert k.category.is_monoidal
    assert validate_category(k.category).ok


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=60), st.data())
def test_cofree_in_divisor_lattice_is_identity(n, data):
    c = catalog.divisor_lattice(n)
    v = data.draw(st.sampled_from(c.objects))
    res = cofree_comonoid(c, v)
    assert isinstance(res, CouniversalArrow)
    assert res.cofree.carrier == v and res.arrow == c.identity(v)
    assert res.unique_up_to_iso


def test_cofree_missing_over_group_element():
    c = catalog.get("s3-discrete")
    res = cofree_comonoid(c, "(123)")
    assert isinstance(res, NotFound)
    assert res.trace == ({"comonoid": "(e;Δ=id_e,ε=id_e)", "arrows_to_target": 0},)


def test_generating_sets_separate_parallel_pairs():
    c = catalog.get("coequalizing")
    assert not is_generating_set(c, ["X"]).ok
    assert is_generating_set(c, ["X"]).witness == ("u", "v")
    assert is_generating_set(c, ["Y"]).ok
    # every generating set must contain Y
    assert all("Y" in g for g in generating_sets(c))


@pytest.mark.parametrize("name", ["braided-parallel", "z4", "d30", "d12"])
@pytest.mark.parametrize("kind", ["center", "weak", "zx", "zh"])
def test_generating_sets_lift(name, kind):
    c = catalog.get(name)
    param = {"zx": c.objects[-1], "zh": c.morphisms[-1]}.get(kind)
    z = construct(c, kind, param)
    for g in generating_sets(c)[:4]:
        assert lift_generating_set(c, g, z).ok


def test_lift_fails_where_a_centralizer_has_extra_endomorphisms():
    # (*, t) in Z_*(BZ2) is not in the image of the embedding, and the
    # lifted generator cannot separate the pair of its endomorphisms
    c = catalog.get("bz2")
    assert is_generating_set(c, ["*"]).ok
    assert lift_generating_set(c, ["*"], construct(c, "center")).ok
    rep = lift_generating_set(c, ["*"], construct(c, "zx", "*"))
    assert not rep.ok and rep.separation.witness is not None


def test_quotients_in_lattice():
    c = catalog.get("d12")
    classes = quotients_of(c, "4")
    assert sorted(q.representative for q in classes) == ["4->12", "id_4"]


def test_quotients_in_group_collapse_to_one():
    c = catalog.cyclic_group(4)
    assert len(quotients_of(c, "0")) == 1


@pytest.mark.parametrize("name,kind,param", [("d12", "center", None), ("d12", "zx", "4"),
                                             ("bz2", "zh", "id_*"), ("z2-endo", "weak", None)])
def test_epi_transfer_instances_pass(name, kind, param):
    z = construct(catalog.get(name), kind, param)
    inst = epi_transfer_instances(z)
    assert inst
    for p, q in inst:
        res = epi_transfer_check(z, p, q)
        assert res.hypothesis_met and res.ok


def test_epi_transfer_preconditions():
    z = construct(catalog.get("d12"), "zx", "4")
    p = next(m for m in z.category.morphisms if z.underlying(m) == "1->2")
    q = next(m for m in z.category.morphisms if z.underlying(m) == "2->4")
    with pytest.raises(FormatError):
        epi_transfer_check(z, p, q)
