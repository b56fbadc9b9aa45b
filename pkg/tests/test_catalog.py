"""Catalog integrity: orders, degree lists, fixtures, subgroup tables."""
import pytest

from codegree.catalog import (
    BUCKETS,
    FamilyId,
    GroupId,
    codegree_set,
    family_codegrees,
    gl_order,
    group_order,
    group_record,
    maximal_subgroup_orders,
    schur_multiplier,
    sp4_even_degrees,
)

FIXED = [g for g in GroupId if g is not GroupId.SP4_Q]
SP4_SAMPLES = (8, 16, 32, 64, 128)


@pytest.mark.parametrize("gid", FIXED, ids=[g.value for g in FIXED])
def test_degree_square_sum_equals_order(gid):
    rec = group_record(gid)
    assert sum(d * d for d in rec.degrees) == rec.order.to_int()


@pytest.mark.parametrize("q", SP4_SAMPLES)
def test_sp4_even_square_sum(q):
    order = q**4 * (q**2 - 1) * (q**4 - 1)
    assert sum(d * d for d in sp4_even_degrees(q)) == order
    assert group_order(GroupId.SP4_Q, q=q).to_int() == order


@pytest.mark.parametrize("gid", FIXED, ids=[g.value for g in FIXED])
def test_inline_fixtures_are_members(gid):
    rec = group_record(gid)
    cod = rec.cod
    for fx in rec.codegrees_expected:
        assert fx in cod, f"{fx} not in cod({gid.value})"


def test_fixture_corpus_is_large_enough():
    total = sum(len(group_record(g).codegrees_expected) for g in FIXED)
    assert total >= 60


def test_bucket_sizes_match_roster():
    for gid in FIXED:
        assert len(codegree_set(gid)) in BUCKETS
    for q in SP4_SAMPLES:
        assert len(codegree_set(GroupId.SP4_Q, q=q)) == 13


def test_known_orders():
    assert group_order(GroupId.SP4_4).to_int() == 979200
    assert group_order(GroupId.U4_2).to_int() == 25920
    assert group_order(GroupId.PSL4_3).to_int() == 6065280
    assert group_order(GroupId.ON).to_int() == 460815505920
    assert group_order(GroupId.M24).to_int() == 244823040


def test_schur_multipliers():
    assert schur_multiplier(GroupId.SP4_4) == 1
    assert schur_multiplier(GroupId.M24) == 1
    assert schur_multiplier(GroupId.TWOF4_2P) == 1
    assert schur_multiplier(GroupId.SP4_Q, q=8) == 1
    assert schur_multiplier(GroupId.U4_2) == 2
    assert schur_multiplier(GroupId.J3) == 3
    assert schur_multiplier(GroupId.U4_3) == 36


def test_gl_order_examples():
    assert gl_order(2, 2).to_int() == 6
    assert gl_order(2, 3).to_int() == 48
    assert gl_order(4, 3).to_int() == 24261120
    assert gl_order(3, 2).to_int() == 168


def test_psl4_3_table_order_times_index():
    order = group_order(GroupId.PSL4_3).to_int()
    rows = maximal_subgroup_orders(GroupId.PSL4_3)
    assert len(rows) == 8
    for row in rows:
        assert row.order * row.index == order


@pytest.mark.parametrize("q", SP4_SAMPLES)
def test_sp4_table_indices_integral(q):
    order = group_order(GroupId.SP4_Q, q=q).to_int()
    for row in maximal_subgroup_orders(GroupId.SP4_Q, q=q):
        assert order % row.order == 0
        assert row.order * row.index == order


def test_psl2_families_complete():
    even = family_codegrees(FamilyId.PSL2_EVEN, 3)
    assert not even.partial
    assert {e.to_int() for e in even.elements} == {1, 56, 63, 72}
    odd = family_codegrees(FamilyId.PSL2_ODD, 7)
    assert {e.to_int() for e in odd.elements} == {1, 24, 21, 28, 56}


def test_partial_families_flagged():
    for fam, param in [(FamilyId.SUZUKI, 8), (FamilyId.G2_Q, 5),
                       (FamilyId.REE, 27), (FamilyId.SP4_EVEN, 8)]:
        assert family_codegrees(fam, param).partial


def test_codegrees_are_order_over_degree():
    for gid in (GroupId.SP4_4, GroupId.HS, GroupId.MCL):
        rec = group_record(gid)
        order = rec.order.to_int()
        expect = {order // d for d in rec.degrees if d > 1} | {1}
        assert {c.to_int() for c in rec.cod} == expect
