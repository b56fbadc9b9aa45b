"""Character-table parser: fixture oracles, invariants, round-trips."""
import importlib.resources as resources

import pytest

from codegree.catalog import FamilyId, family_codegrees
from codegree.chartab import (
    InvariantViolation,
    TableSyntaxError,
    codegrees_of_table,
    parse_table,
    serialize_table,
)


def _fixture(name: str) -> bytes:
    return resources.files("codegree").joinpath(f"data/tables/{name}").read_bytes()


def test_a5_codegrees():
    table = parse_table(_fixture("a5.chtab"))
    assert {c.to_int() for c in codegrees_of_table(table)} == {1, 12, 15, 20}


def test_a5_matches_parametric_family():
    got = {c.to_int() for c in codegrees_of_table(parse_table(_fixture("a5.chtab")))}
    fam = family_codegrees(FamilyId.PSL2_EVEN, 2)
    assert not fam.partial
    assert got == {e.to_int() for e in fam.elements} | {1}


def test_s3_codegrees():
    table = parse_table(_fixture("s3.chtab"))
    assert {c.to_int() for c in codegrees_of_table(table)} == {1, 2, 3}


@pytest.mark.parametrize("name", ["a5.chtab", "s3.chtab"])
def test_serialize_round_trip_bit_exact(name):
    raw = _fixture(name)
    table = parse_table(raw)
    text = serialize_table(table)
    assert parse_table(text) == table
    assert serialize_table(parse_table(text)) == text


def test_syntax_error_on_garbage():
    with pytest.raises(TableSyntaxError):
        parse_table("order 60\nchar 1 1 1\n")


def test_square_sum_invariant_enforced():
    bad = (
        "group X\norder 6\nsimple false\nclasses 1 2 3\n"
        "char 1 1 1\nchar 1 1 -1\nchar 3 0 -1\n"
    )
    with pytest.raises(InvariantViolation):
        parse_table(bad)
