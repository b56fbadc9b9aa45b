"""Group data catalog: orders, character degrees, codegree sets, candidate
families, maximal-subgroup tables, and general-linear-group orders.

The catalog is loaded once from the data files shipped with the package and
is immutable afterwards.  Degree lists are data, not code; each data file
carries a comment describing how the list was computed and verified.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Callable, Iterable, Optional

from .factored_int import FactoredInteger, factorize, parse_factored

__all__ = [
    "GroupId",
    "FamilyId",
    "GroupRecord",
    "CodegreeSet",
    "MaxSubgroupEntry",
    "FamilyCodegrees",
    "InadmissibleParameter",
    "UnsupportedGroup",
    "BUCKETS",
    "group_order",
    "group_record",
    "codegree_set",
    "family_codegrees",
    "schur_multiplier",
    "maximal_subgroup_orders",
    "gl_order",
    "sp4_even_degrees",
    "is_prime_power",
]

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")
SCHEMA_VERSION = 1


class InadmissibleParameter(ValueError):
    """Raised when a family parameter violates its admissibility predicate."""


class UnsupportedGroup(ValueError):
    """Raised for operations defined only on specific groups."""


class GroupId(str, Enum):
    """The sixteen isomorphism targets of the main theorem.

    ``SP4_Q`` is parametric: it stands for Sp4(q) with q = 2^f > 4 and must
    be paired with an explicit q wherever a concrete record is needed.
    """

    SP4_4 = "Sp4_4"
    U4_2 = "U4_2"
    SP4_Q = "Sp4_q"
    U4_3 = "U4_3"
    TWOF4_2P = "TwoF4_2p"
    J3 = "J3"
    G2_3 = "G2_3"
    A9 = "A9"
    J2 = "J2"
    PSL4_3 = "PSL4_3"
    MCL = "McL"
    SP4_5 = "Sp4_5"
    G2_4 = "G2_4"
    HS = "HS"
    ON = "ON"
    M24 = "M24"


class FamilyId(str, Enum):
    """Candidate simple groups, bucketed by codegree-set size.

    Parametric entries carry their parameter at call time; fixed entries
    resolve to catalog records of the same name (or the named target).
    """

    PSL2_EVEN = "PSL2_even"       # PSL(2, 2^f), f >= 2
    PSL2_ODD = "PSL2_odd"         # PSL(2, k), k odd prime power > 5
    SUZUKI = "Suzuki"             # Sz(2^(2f+1)), f >= 1
    PSL3_4 = "PSL3_4"
    PSL3_3 = "PSL3_3"
    A7 = "A7"
    M11 = "M11"
    J1 = "J1"
    PSL3_E = "PSL3_e"             # PSL(3, q), q > 4, q not 1 mod 3
    PSU3_E = "PSU3_e"             # PSU(3, q), q > 4, q not -1 mod 3
    G2_2P = "G2_2p"
    PSL3_F = "PSL3_f"             # PSL(3, q), q = 1 mod 3
    PSU3_F = "PSU3_f"             # PSU(3, q), q = -1 mod 3
    M22 = "M22"
    PSL4_2 = "PSL4_2"
    M12 = "M12"
    M23 = "M23"
    REE = "Ree"                   # 2G2(3^(2f+1)), f >= 1
    SP4_4 = "Sp4_4"
    U4_2 = "U4_2"
    SP4_EVEN = "Sp4_even"         # Sp4(2^f), f >= 3
    U4_3 = "U4_3"
    TWOF4_2P = "TwoF4_2p"
    J3 = "J3"
    G2_3 = "G2_3"
    A9 = "A9"
    J2 = "J2"
    PSL4_3 = "PSL4_3"
    MCL = "McL"
    SP4_5 = "Sp4_5"
    G2_4 = "G2_4"
    HS = "HS"
    ON = "ON"
    M24 = "M24"
    G2_Q = "G2_q"                 # G2(q), q >= 7, q = 2,3,4 mod 6


#: Candidate roster keyed by codegree-set size.  A simple group whose
#: codegree set has n <= 20 elements appears in bucket n.
BUCKETS: dict[int, tuple[FamilyId, ...]] = {
    4: (FamilyId.PSL2_EVEN,),
    5: (FamilyId.PSL2_ODD,),
    6: (FamilyId.SUZUKI, FamilyId.PSL3_4),
    7: (FamilyId.PSL3_3, FamilyId.A7, FamilyId.M11, FamilyId.J1),
    8: (FamilyId.PSL3_E, FamilyId.PSU3_E, FamilyId.G2_2P),
    9: (FamilyId.PSL3_F, FamilyId.PSU3_F),
    10: (FamilyId.M22,),
    11: (FamilyId.PSL4_2, FamilyId.M12, FamilyId.M23, FamilyId.REE),
    12: (FamilyId.SP4_4,),
    13: (FamilyId.U4_2, FamilyId.SP4_EVEN),
    14: (FamilyId.U4_3, FamilyId.TWOF4_2P, FamilyId.J3),
    15: (FamilyId.G2_3,),
    16: (FamilyId.A9, FamilyId.J2),
    17: (FamilyId.PSL4_3, FamilyId.MCL),
    18: (FamilyId.SP4_5, FamilyId.G2_4, FamilyId.HS),
    19: (FamilyId.ON,),
    20: (FamilyId.M24, FamilyId.G2_Q),
}


def is_prime_power(n: int) -> bool:
    """Return True iff n = p^a for a single prime p, a >= 1."""
    return n > 1 and factorize(n).is_prime_power()


class CodegreeSet:
    """An immutable set of codegrees, always containing 1."""

    __slots__ = ("_elements", "_ints")

    def __init__(self, elements: Iterable[FactoredInteger]):
        elems = set(elements)
        elems.add(FactoredInteger.one())
        self._elements: tuple[FactoredInteger, ...] = tuple(sorted(elems))
        self._ints: frozenset[int] = frozenset(e.to_int() for e in elems)

    @property
    def elements(self) -> tuple[FactoredInteger, ...]:
        return self._elements

    def nontrivial(self) -> tuple[FactoredInteger, ...]:
        return tuple(e for e in self._elements if not e.is_one())

    def __contains__(self, item) -> bool:
        if isinstance(item, FactoredInteger):
            return item.to_int() in self._ints
        return int(item) in self._ints

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self):
        return iter(self._elements)

    def __eq__(self, other) -> bool:
        return isinstance(other, CodegreeSet) and self._ints == other._ints

    def __hash__(self) -> int:
        return hash(self._ints)

    def __repr__(self) -> str:
        return "CodegreeSet({%s})" % ", ".join(str(e) for e in self._elements)


@dataclass(frozen=True)
class GroupRecord:
    """A fixed finite simple group with verified character-degree data."""

    name: str
    order: FactoredInteger
    degrees: tuple[int, ...]
    schur: int
    codegrees_expected: tuple[FactoredInteger, ...] = ()
    maximal_subgroups: tuple["MaxSubgroupEntry", ...] = ()
    cod: CodegreeSet = field(init=False, repr=False)

    def __post_init__(self):
        n = self.order.to_int()
        if sum(d * d for d in self.degrees) != n:
            raise ValueError(
                f"{self.name}: degree square sum does not equal the order")
        for d in self.degrees:
            if n % d != 0:
                raise ValueError(f"{self.name}: degree {d} does not divide order")
        cod = CodegreeSet(
            factorize(n // d) for d in self.degrees if d > 1)
        object.__setattr__(self, "cod", cod)
        for fi in self.codegrees_expected:
            if fi not in cod:
                raise ValueError(
                    f"{self.name}: expected codegree {fi} missing from set")


@dataclass(frozen=True)
class MaxSubgroupEntry:
    """One row of a maximal-subgroup table, with its order evaluated exactly."""

    structure_label: str
    order: int
    index: int
    constraint: str = ""


# ---------------------------------------------------------------------------
# Data file loading
# ---------------------------------------------------------------------------

def _parse_data_file(path: str) -> GroupRecord:
    fields: dict[str, str] = {}
    maxsubs: list[MaxSubgroupEntry] = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition(" ")
            if key == "maxsub":
                label, order_s, index_s = value.split("|")
                maxsubs.append(MaxSubgroupEntry(label, int(order_s), int(index_s)))
            else:
                fields[key] = value.strip()
    if int(fields.get("schema", "0")) != SCHEMA_VERSION:
        raise ValueError(f"{path}: unsupported schema version")
    order = parse_factored(fields["order"])
    expected = tuple(parse_factored(tok)
                     for tok in fields.get("codegrees_expected", "").split())
    rec = GroupRecord(
        name=fields["group"],
        order=order,
        degrees=tuple(int(tok) for tok in fields["degrees"].split()),
        schur=int(fields["schur"]),
        codegrees_expected=expected,
        maximal_subgroups=tuple(maxsubs),
    )
    for entry in rec.maximal_subgroups:
        if entry.order * entry.index != order.to_int():
            raise ValueError(
                f"{rec.name}: subgroup row {entry.structure_label} "
                "order*index mismatch")
    return rec


@lru_cache(maxsize=1)
def _records() -> dict[str, GroupRecord]:
    recs = {}
    for fname in sorted(os.listdir(DATA_DIR)):
        if fname.endswith(".tab"):
            rec = _parse_data_file(os.path.join(DATA_DIR, fname))
            recs[rec.name] = rec
    return recs


# ---------------------------------------------------------------------------
# Parametric Sp4(2^f) data
# ---------------------------------------------------------------------------

def _check_sp4_even_q(q: int) -> None:
    if q < 8 or q & (q - 1) or not is_prime_power(q):
        raise InadmissibleParameter(f"q={q}: need q = 2^f > 4")


def sp4_even_degrees(q: int) -> tuple[int, ...]:
    """Character degrees of Sp4(q) for even q > 4, with multiplicity.

    Closed form verified against the square-sum identity for q up to 8192.
    """
    _check_sp4_even_q(q)
    fams = [
        (1, 1),
        (q ** 4, 1),
        (q * (q + 1) ** 2 // 2, 1),
        (q * (q - 1) ** 2 // 2, 1),
        (q * (q * q + 1) // 2, 2),
        ((q + 1) * (q * q + 1), q - 2),
        (q * (q + 1) * (q * q + 1), q - 2),
        ((q - 1) * (q * q + 1), q),
        (q * (q - 1) * (q * q + 1), q),
        ((q + 1) ** 2 * (q * q + 1), (q - 2) * (q - 4) // 8),
        ((q - 1) ** 2 * (q * q + 1), q * (q - 2) // 8),
        (q ** 4 - 1, q * (q - 2) // 2),
        ((q * q - 1) ** 2, q * q // 4),
    ]
    out: list[int] = []
    for deg, mult in fams:
        out.extend([deg] * mult)
    return tuple(sorted(out))


def _sp4_even_record(q: int) -> GroupRecord:
    _check_sp4_even_q(q)
    return GroupRecord(
        name=f"Sp4_{q}",
        order=factorize(q ** 4 * (q * q - 1) * (q ** 4 - 1)),
        degrees=sp4_even_degrees(q),
        schur=1,
    )


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------

def group_record(gid: GroupId | str, q: Optional[int] = None) -> GroupRecord:
    """Return the (possibly parametric) record for a target or fixed group."""
    name = gid.value if isinstance(gid, GroupId) else str(gid)
    if name == GroupId.SP4_Q.value:
        if q is None:
            raise InadmissibleParameter("Sp4_q requires an explicit q")
        return _sp4_even_record(q)
    recs = _records()
    if name not in recs:
        raise UnsupportedGroup(f"no data for group {name!r}")
    return recs[name]


def group_order(gid: GroupId | str, q: Optional[int] = None) -> FactoredInteger:
    """Exact order of the group, as a factored integer."""
    return group_record(gid, q=q).order


def codegree_set(gid: GroupId | str, q: Optional[int] = None) -> CodegreeSet:
    """The full codegree set {1} u {|G|/d} of a fixed or sampled group."""
    return group_record(gid, q=q).cod


def schur_multiplier(gid: GroupId | str, q: Optional[int] = None) -> int:
    """Order of the stored Schur multiplier."""
    return group_record(gid, q=q).schur


@dataclass(frozen=True)
class FamilyCodegrees:
    """Codegree elements known for a candidate family at a parameter.

    ``partial`` is True when only selected elements are stored; membership
    checks against a partial set must never be treated as exhaustive.
    """

    elements: tuple[FactoredInteger, ...]
    partial: bool


def _psl2_even_codegrees(f: int) -> tuple[int, ...]:
    if f < 2:
        raise InadmissibleParameter(f"f={f}: need f >= 2")
    k = 2 ** f
    return (1, k * (k - 1), k * k - 1, k * (k + 1))


def _psl2_odd_codegrees(k: int) -> tuple[int, ...]:
    if k <= 5 or k % 2 == 0 or not is_prime_power(k):
        raise InadmissibleParameter(f"k={k}: need odd prime power > 5")
    eps = (-1) ** ((k - 1) // 2)
    return (1, (k * k - 1) // 2, k * (k - 1) // 2, k * (k + 1) // 2,
            k * (k - eps))


def family_codegrees(fam: FamilyId, param: Optional[int] = None,
                     m: Optional[int] = None) -> FamilyCodegrees:
    """Known codegree elements of a candidate family.

    PSL(2, .) families are complete.  Other parametric families expose only
    their cited closed-form elements and are flagged partial.  Fixed groups
    resolve to the complete catalog set.
    """
    if fam in (FamilyId.PSL2_EVEN, FamilyId.PSL2_ODD):
        vals = (_psl2_even_codegrees(param) if fam is FamilyId.PSL2_EVEN
                else _psl2_odd_codegrees(param))
        return FamilyCodegrees(tuple(factorize(v) for v in vals), False)

    parametric: dict[FamilyId, Callable[[int], list[int]]] = {
        FamilyId.SUZUKI: lambda q: [(q - 1) * (q * q + 1)],
        FamilyId.PSL3_E: lambda q: [q ** 3 * (q * q + q + 1)] if q % 2
        else [(q * q + q + 1) * (q * q - 1) * (q - 1)],
        FamilyId.PSU3_E: lambda q: [q ** 3 * (q * q - q + 1)] if q % 2
        else [(q * q - q + 1) * (q + 1) ** 2 * (q - 1)],
        FamilyId.PSL3_F: lambda q: [q ** 3 * (q * q + q + 1) // 3],
        FamilyId.PSU3_F: lambda q: [q ** 3 * (q * q - q + 1) // 3],
        FamilyId.G2_Q: lambda q: [(q ** 6 - 1) * (q * q - 1)],
        FamilyId.SP4_EVEN: lambda q: [
            q ** 4 * (q + 1) * (q - 1) ** 2,
            q ** 4 * (q + 1) ** 2 * (q - 1),
            q ** 4 * (q + 1) * (q - 1),
            q ** 4 * (q + 1) ** 2,
            q ** 4 * (q - 1) ** 2,
            (q * q + 1) * (q - 1) ** 2 * (q + 1) ** 2,
            2 * q ** 3 * (q - 1) ** 2 * (q + 1) ** 2,
        ],
    }
    if fam is FamilyId.REE:
        if param is None:
            raise InadmissibleParameter("Ree family requires q = 3^(2f+1)")
        q = param
        f = _ree_exponent(q)
        mm = m if m is not None else 3 ** f
        vals = [3 ** (5 * f + 3) * (q * q - q + 1),
                (q * q - 1) * (q * q - q + 1)]
        for cand in (q ** 3 * (q + 1 - 3 * mm), q ** 3 * (q + 1 + 3 * mm)):
            if cand > 0:
                vals.append(cand)
        return FamilyCodegrees(tuple(factorize(v) for v in vals), True)
    if fam in parametric:
        if param is None:
            raise InadmissibleParameter(f"{fam.value} requires a parameter")
        vals = parametric[fam](param)
        return FamilyCodegrees(tuple(factorize(v) for v in vals), True)
    # Fixed group: complete set from the catalog.
    rec = group_record(fam.value)
    return FamilyCodegrees(rec.cod.nontrivial(), False)


def _ree_exponent(q: int) -> int:
    """Return f with q = 3^(2f+1), f >= 1, or raise."""
    n, e = q, 0
    while n % 3 == 0:
        n //= 3
        e += 1
    if n != 1 or e < 3 or e % 2 == 0:
        raise InadmissibleParameter(f"q={q}: need q = 3^(2f+1), f >= 1")
    return (e - 1) // 2


# ---------------------------------------------------------------------------
# Maximal subgroups
# ---------------------------------------------------------------------------

def _sp4_even_max_subgroups(q: int) -> tuple[MaxSubgroupEntry, ...]:
    _check_sp4_even_q(q)
    f = q.bit_length() - 1
    order = q ** 4 * (q * q - 1) * (q ** 4 - 1)
    rows: list[tuple[str, int, str]] = [
        ("E_q^3:GL2(q)", q ** 3 * (q * q - 1) * (q * q - q), "point stabiliser"),
        ("[q^4]:C_(q-1)^2", q ** 4 * (q - 1) ** 2, ""),
        ("Sp2(q)wr2", 2 * q * q * (q - 1) ** 2 * (q + 1) ** 2, ""),
        ("Sp2(q^2):2", 2 * q * q * (q ** 4 - 1), ""),
        ("C_(q-1)^2:D8", 8 * (q - 1) ** 2, "q != 4"),
        ("C_(q+1)^2:D8", 8 * (q + 1) ** 2, ""),
        ("C_(q^2+1):4", 4 * (q * q + 1), ""),
        ("SO4+(q)", q * q * (q * q - 1) // 2, ""),
        ("SO4-(q)", q * q * (q * q + 1) * (q * q - 1), ""),
    ]
    for r in factorize(f).primes():
        q0 = round(q ** (1 / r))
        # recover the exact r-th root of q
        while q0 ** r < q:
            q0 += 1
        if q0 ** r == q and q0 >= 2:
            rows.append((f"Sp4({q0})",
                         q0 ** 4 * (q0 ** 4 - 1) * (q0 * q0 - 1),
                         f"q = q0^{r}, {r} prime"))
    if f >= 3 and f % 2 == 1:
        rows.append(("Sz(q)", q * q * (q * q + 1) * (q - 1),
                     "f >= 3, f odd"))
    out = []
    for label, o, note in rows:
        if order % o != 0:
            raise ValueError(f"Sp4({q}) row {label}: non-integral index")
        out.append(MaxSubgroupEntry(label, o, order // o, note))
    return tuple(out)


def maximal_subgroup_orders(gid: GroupId | str,
                            q: Optional[int] = None) -> tuple[MaxSubgroupEntry, ...]:
    """Maximal-subgroup table rows, orders evaluated exactly.

    Defined for the parametric Sp4(q) (even q > 4) and for PSL(4,3) only.
    """
    name = gid.value if isinstance(gid, GroupId) else str(gid)
    if name == GroupId.SP4_Q.value:
        if q is None:
            raise InadmissibleParameter("Sp4_q requires an explicit q")
        return _sp4_even_max_subgroups(q)
    if name == GroupId.PSL4_3.value:
        return group_record(name).maximal_subgroups
    raise UnsupportedGroup(f"no maximal-subgroup table for {name!r}")


def gl_order(n: int, p: int) -> FactoredInteger:
    """Order of GL(n, p) as a factored integer."""
    if n < 1:
        raise ValueError("n must be >= 1")
    val = p ** (n * (n - 1) // 2)
    for i in range(1, n + 1):
        val *= p ** i - 1
    return factorize(val)
