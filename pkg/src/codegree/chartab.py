"""Exact character-table parsing and codegree computation.

A table is a line-oriented UTF-8 text document:

    group <name>
    order <n>
    simple <true|false>
    classes <s1> <s2> ...
    char <v1> <v2> ...

One ``char`` line per irreducible character; each value is a signed decimal
integer or the literal ``*`` marking an exact but non-integer (hence
non-rational-integer) value.  Kernels only require deciding chi(g) = chi(1)
with chi(1) a positive integer, and a non-integer value can never equal it,
so tables stay exact without any algebraic-number arithmetic.  Comment lines
start with ``#``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import BinaryIO, Iterable, Union

from .catalog import CodegreeSet
from .factored_int import FactoredInteger, factorize

__all__ = [
    "NonIntegerMark",
    "NON_INTEGER",
    "ClassData",
    "CharacterRow",
    "CharacterTable",
    "TableSyntaxError",
    "InvariantViolation",
    "NonIntegralIndex",
    "parse_table",
    "serialize_table",
    "kernel_index",
    "codegrees_of_table",
]


class TableSyntaxError(ValueError):
    """Malformed table text; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InvariantViolation(ValueError):
    """Structurally parsable table that violates a table invariant."""

    def __init__(self, which: str):
        super().__init__(which)
        self.which = which


class NonIntegralIndex(ArithmeticError):
    """Kernel size does not divide the group order (corrupt table)."""


class NonIntegerMark:
    """Opaque marker for an exact but non-integer character value."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "*"


#: The unique NonIntegerMark instance.
NON_INTEGER = NonIntegerMark()

Value = Union[int, NonIntegerMark]


@dataclass(frozen=True)
class ClassData:
    """A conjugacy class: its size and a positional label."""

    size: int
    label: str


@dataclass(frozen=True)
class CharacterRow:
    """One irreducible character; values[0] is the degree chi(1)."""

    values: tuple[Value, ...]

    @property
    def degree(self) -> int:
        return self.values[0]  # type: ignore[return-value]


@dataclass(frozen=True)
class CharacterTable:
    """A parsed, validated character table."""

    group_name: str
    order: int
    simple: bool
    classes: tuple[ClassData, ...]
    characters: tuple[CharacterRow, ...]


def _validate(table: CharacterTable) -> CharacterTable:
    sizes = [c.size for c in table.classes]
    if not sizes or sizes[0] != 1:
        raise InvariantViolation("identity class")
    if sum(sizes) != table.order:
        raise InvariantViolation("class sizes")
    for s in sizes:
        if s < 1 or table.order % s != 0:
            raise InvariantViolation("class size divisibility")
    if len(table.characters) != len(table.classes):
        raise InvariantViolation("character count")
    sq = 0
    for row in table.characters:
        if len(row.values) != len(table.classes):
            raise InvariantViolation("row length")
        deg = row.values[0]
        if isinstance(deg, NonIntegerMark) or deg < 1:
            raise InvariantViolation("degree column")
        if table.order % deg != 0:
            raise InvariantViolation("degree divisibility")
        sq += deg * deg
    if sq != table.order:
        raise InvariantViolation("degree square sum")
    return table


def parse_table(stream: Union[BinaryIO, bytes, str]) -> CharacterTable:
    """Parse a character table from bytes, text, or a binary stream."""
    if hasattr(stream, "read"):
        data = stream.read()
    else:
        data = stream
    if isinstance(data, bytes):
        data = data.decode("utf-8")

    name = None
    order = None
    simple = None
    classes: list[ClassData] = []
    chars: list[CharacterRow] = []
    for lineno, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "group":
            name = rest
        elif key == "order":
            try:
                order = int(rest)
            except ValueError:
                raise TableSyntaxError(lineno, "order must be an integer")
        elif key == "simple":
            if rest not in ("true", "false"):
                raise TableSyntaxError(lineno, "simple must be true or false")
            simple = rest == "true"
        elif key == "classes":
            try:
                sizes = [int(tok) for tok in rest.split()]
            except ValueError:
                raise TableSyntaxError(lineno, "class sizes must be integers")
            classes = [ClassData(s, f"c{i}") for i, s in enumerate(sizes)]
        elif key == "char":
            values: list[Value] = []
            for tok in rest.split():
                if tok == "*":
                    values.append(NON_INTEGER)
                else:
                    try:
                        values.append(int(tok))
                    except ValueError:
                        raise TableSyntaxError(
                            lineno, f"bad character value {tok!r}")
            chars.append(CharacterRow(tuple(values)))
        else:
            raise TableSyntaxError(lineno, f"unknown directive {key!r}")
    if name is None or order is None or simple is None or not classes:
        raise TableSyntaxError(0, "missing header (group/order/simple/classes)")
    return _validate(CharacterTable(
        group_name=name, order=order, simple=simple,
        classes=tuple(classes), characters=tuple(chars)))


def serialize_table(table: CharacterTable) -> str:
    """Render a table back to its canonical text form."""
    lines = [
        f"group {table.group_name}",
        f"order {table.order}",
        f"simple {'true' if table.simple else 'false'}",
        "classes " + " ".join(str(c.size) for c in table.classes),
    ]
    for row in table.characters:
        lines.append("char " + " ".join(
            "*" if isinstance(v, NonIntegerMark) else str(v)
            for v in row.values))
    return "\n".join(lines) + "\n"


def kernel_index(table: CharacterTable, row: CharacterRow) -> FactoredInteger:
    """|G : ker chi| for a character row of the table.

    The kernel is the union of classes on which the value equals the degree;
    a NonIntegerMark never equals the (integer) degree.
    """
    deg = row.degree
    ker = sum(cls.size for cls, v in zip(table.classes, row.values)
              if isinstance(v, int) and v == deg)
    if ker == 0 or table.order % ker != 0:
        raise NonIntegralIndex(
            f"kernel size {ker} does not divide order {table.order}")
    return factorize(table.order // ker)


def codegrees_of_table(table: CharacterTable) -> CodegreeSet:
    """The codegree set {|G : ker chi| / chi(1)} over all rows, plus 1."""
    out: list[FactoredInteger] = []
    for row in table.characters:
        idx = kernel_index(table, row)
        out.append(idx.div_exact(factorize(row.degree)))
    return CodegreeSet(out)
