"""Exact bounded solving of the parametric codegree equations.

Each expression family is strictly increasing over a raw integer parameter
domain; ``solve`` brackets the target by exponential doubling, pins the
unique integer preimage by binary search, and only then applies the
admissibility filter (prime power, parity, congruence, exponent shape), so
scan bounds can never be off by one.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Iterator, Optional, Union

from .catalog import CodegreeSet, is_prime_power
from .factored_int import FactoredInteger, factorize

__all__ = [
    "ExprFamily",
    "SolveResult",
    "TargetTooLarge",
    "solve",
    "brute_force_solve",
    "evaluate",
    "admissible_parameters",
    "exists_half_pair",
    "odd_elements",
    "residue_search",
    "two_adic_profile",
]

#: Targets beyond this bound are flagged in the audit output (report-only;
#: arithmetic stays exact at any size, so the search itself never fails).
EVAL_BOUND = 2 ** 63


class TargetTooLarge(OverflowError):
    """Reserved for callers that want to treat over-bound targets as fatal;
    solve() itself only flags them in its result."""


class ExprFamily(str, Enum):
    """The closed-form expression families used by the elimination checks."""

    K2M1 = "K2M1"              # k^2 - 1,                k = 2^f >= 4
    PSL2_HALF = "PSL2_HALF"    # k(k +- 1)/2,            k odd prime power > 5
    SZ_ODD = "SZ_ODD"          # (q-1)(q^2+1),           q = 2^(2f+1), f >= 1
    PSL3_Q3 = "PSL3_Q3"        # q^3(q^2+q+1),   q > 4 prime power, q != 1 mod 3
    PSU3_Q3 = "PSU3_Q3"        # q^3(q^2-q+1),   q > 4 prime power, q != 2 mod 3
    PSL3_EVEN = "PSL3_EVEN"    # (q^2+q+1)(q^2-1)(q-1),  q = 2^f
    PSU3_EVEN = "PSU3_EVEN"    # (q^2-q+1)(q+1)^2(q-1),  q = 2^f
    PSL3_THIRD = "PSL3_THIRD"  # q^3(q^2+q+1)/3, q > 4 prime power, q = 1 mod 3
    PSU3_THIRD = "PSU3_THIRD"  # q^3(q^2-q+1)/3, q > 4 prime power, q = 2 mod 3
    SP4_ODD = "SP4_ODD"        # (q^2+1)(q-1)^2(q+1)^2,  q = 2^f > 4
    SP4_Q4 = "SP4_Q4"          # q^4(q-1)^2,             q = 2^f > 4
    SP4_2Q3 = "SP4_2Q3"        # 2q^3(q-1)^2(q+1)^2,     q = 2^f > 4
    REE_33 = "REE_33"          # 3^(5f+3)(q^2-q+1),      q = 3^(2f+1), f >= 1
    REE_PM = "REE_PM"          # q^3(q+1 -+ 3m),         q = 3^(2f+1), m free
    REE_Q2 = "REE_Q2"          # (q^2-1)(q^2-q+1),       q = 3^(2f+1), f >= 1
    G2_Q61 = "G2_Q61"          # (q^6-1)(q^2-1), q >= 7 prime power,
    #                            q = 2, 3 or 4 (mod 6)


@dataclass(frozen=True)
class _Branch:
    """One strictly monotone raw-parameter branch of a family."""

    value: Callable[[int], int]        # raw integer t -> expression value
    param: Callable[[int], int]        # raw t -> reported parameter
    admissible: Callable[[int], bool]  # on the raw parameter t
    start: int                         # least raw t considered


def _branches(fam: ExprFamily) -> tuple[_Branch, ...]:
    pp = is_prime_power
    if fam is ExprFamily.K2M1:
        return (_Branch(lambda f: 4 ** f - 1, lambda f: 2 ** f,
                        lambda f: True, 2),)
    if fam is ExprFamily.PSL2_HALF:
        adm = lambda k: k > 5 and k % 2 == 1 and pp(k)
        return (_Branch(lambda k: k * (k + 1) // 2, lambda k: k, adm, 2),
                _Branch(lambda k: k * (k - 1) // 2, lambda k: k, adm, 2))
    if fam is ExprFamily.SZ_ODD:
        return (_Branch(lambda f: (2 ** (2 * f + 1) - 1)
                        * (2 ** (2 * (2 * f + 1)) + 1),
                        lambda f: 2 ** (2 * f + 1), lambda f: True, 1),)
    if fam is ExprFamily.PSL3_Q3:
        return (_Branch(lambda q: q ** 3 * (q * q + q + 1), lambda q: q,
                        lambda q: q % 3 != 1 and pp(q), 5),)
    if fam is ExprFamily.PSU3_Q3:
        return (_Branch(lambda q: q ** 3 * (q * q - q + 1), lambda q: q,
                        lambda q: q % 3 != 2 and pp(q), 5),)
    if fam is ExprFamily.PSL3_EVEN:
        # 2^f = 1 (mod 3) iff f is even, so q = 2^f > 4 with q != 1 (mod 3)
        # forces f odd, f >= 3.
        return (_Branch(
            lambda f: ((w := 2 ** f) * w + w + 1) * (w * w - 1) * (w - 1),
            lambda f: 2 ** f, lambda f: f % 2 == 1 and f >= 3, 1),)
    if fam is ExprFamily.PSU3_EVEN:
        # q = 2^f > 4 with q != 2 (mod 3) forces f even, f >= 4.
        return (_Branch(
            lambda f: ((w := 2 ** f) * w - w + 1) * (w + 1) ** 2 * (w - 1),
            lambda f: 2 ** f, lambda f: f % 2 == 0 and f >= 4, 1),)
    if fam is ExprFamily.PSL3_THIRD:
        return (_Branch(lambda q: q ** 3 * (q * q + q + 1) // 3, lambda q: q,
                        lambda q: q % 3 == 1 and pp(q), 7),)
    if fam is ExprFamily.PSU3_THIRD:
        return (_Branch(lambda q: q ** 3 * (q * q - q + 1) // 3, lambda q: q,
                        lambda q: q % 3 == 2 and pp(q), 5),)
    if fam is ExprFamily.SP4_ODD:
        return (_Branch(
            lambda f: ((w := 2 ** f) * w + 1) * (w - 1) ** 2 * (w + 1) ** 2,
            lambda f: 2 ** f, lambda f: True, 3),)
    if fam is ExprFamily.SP4_Q4:
        return (_Branch(
            lambda f: (w := 2 ** f) ** 4 * (w - 1) ** 2,
            lambda f: 2 ** f, lambda f: True, 3),)
    if fam is ExprFamily.SP4_2Q3:
        return (_Branch(
            lambda f: 2 * (w := 2 ** f) ** 3 * (w - 1) ** 2 * (w + 1) ** 2,
            lambda f: 2 ** f, lambda f: True, 3),)
    if fam is ExprFamily.REE_33:
        return (_Branch(
            lambda f: 3 ** (5 * f + 3)
            * (9 ** (2 * f + 1) - 3 ** (2 * f + 1) + 1),
            lambda f: 3 ** (2 * f + 1), lambda f: True, 1),)
    if fam is ExprFamily.REE_Q2:
        return (_Branch(
            lambda f: (9 ** (2 * f + 1) - 1)
            * (9 ** (2 * f + 1) - 3 ** (2 * f + 1) + 1),
            lambda f: 3 ** (2 * f + 1), lambda f: True, 1),)
    if fam is ExprFamily.REE_PM:
        # Default m = 3^f; the quantified search happens in solve().
        def val(f: int) -> int:
            q = 3 ** (2 * f + 1)
            return q ** 3 * (q + 1 - 3 ** (f + 1))
        return (_Branch(val, lambda f: 3 ** (2 * f + 1), lambda f: True, 1),)
    if fam is ExprFamily.G2_Q61:
        return (_Branch(lambda q: (q ** 6 - 1) * (q * q - 1), lambda q: q,
                        lambda q: q >= 7 and pp(q) and q % 6 in (2, 3, 4),
                        7),)
    raise ValueError(f"unknown family {fam!r}")


@dataclass(frozen=True)
class SolveResult:
    """Outcome of one bracketing search, kept for audit output."""

    family: ExprFamily
    target: int
    parameter: Optional[int]
    lower: int          # greatest raw value <= target found while bracketing
    upper: int          # least raw value >= target
    over_bound: bool = False  # target exceeded EVAL_BOUND (report-only)


def _as_int(target: Union[FactoredInteger, int]) -> int:
    return target.to_int() if isinstance(target, FactoredInteger) else int(target)


def _solve_branch(branch: _Branch, target: int) -> SolveResult:
    t = branch.start
    if branch.value(t) > target:
        return SolveResult(None, target, None, 0, branch.value(t))  # type: ignore[arg-type]
    # Exponential doubling to bracket, then binary search.
    hi = t
    while branch.value(hi) < target:
        hi *= 2
    lo = hi // 2 if hi > t else t
    while lo < hi:
        mid = (lo + hi) // 2
        if branch.value(mid) < target:
            lo = mid + 1
        else:
            hi = mid
    v = branch.value(lo)
    below = branch.value(lo - 1) if lo > branch.start else v
    if v == target and branch.admissible(lo):
        return SolveResult(None, target, branch.param(lo),  # type: ignore[arg-type]
                           min(below, v), v)
    return SolveResult(None, target, None,  # type: ignore[arg-type]
                       below if below <= target else v, v)


def _ree_pm_solve(target: int) -> Optional[int]:
    """q^3(q+1 -+ 3m) = target for some q = 3^(2f+1) and m in {3^f} u [1,q]."""
    f = 1
    while True:
        q = 3 ** (2 * f + 1)
        q3 = q ** 3
        if q3 > target:
            return None
        if target % q3 == 0:
            r = target // q3
            for diff in (q + 1 - r, r - (q + 1)):
                if diff > 0 and diff % 3 == 0:
                    m = diff // 3
                    if 1 <= m <= q or m == 3 ** f:
                        return q
        f += 1


def solve(fam: ExprFamily, target: Union[FactoredInteger, int],
          emit_result: bool = False):
    """The unique admissible parameter with expr(param) = target, or None.

    Uniqueness follows from strict monotonicity on each branch; for the
    two-branch PSL2_HALF family the hits have opposite parity, so at most
    one is admissible.
    """
    n = _as_int(target)
    if n < 1:
        raise ValueError("target must be >= 1")
    over = n > EVAL_BOUND
    if fam is ExprFamily.REE_PM:
        param = _ree_pm_solve(n)
        res = SolveResult(fam, n, param, 0, 0, over)
        return res if emit_result else param
    best: Optional[SolveResult] = None
    for branch in _branches(fam):
        res = _solve_branch(branch, n)
        res = SolveResult(fam, n, res.parameter, res.lower, res.upper, over)
        if res.parameter is not None:
            return res if emit_result else res.parameter
        best = res
    return best if emit_result else None


def admissible_parameters(fam: ExprFamily, count: int) -> list[int]:
    """The first ``count`` admissible parameters of the family, ascending."""
    out: list[int] = []
    seen: set[int] = set()
    for branch in _branches(fam):
        t = branch.start
        found = 0
        while found < count:
            if branch.admissible(t):
                p = branch.param(t)
                if p not in seen:
                    seen.add(p)
                    out.append(p)
                found += 1
            t += 1
    return sorted(seen)[:count]


def evaluate(fam: ExprFamily, param: int, m: Optional[int] = None) -> int:
    """Evaluate the family expression at an admissible parameter."""
    if fam is ExprFamily.REE_PM and m is not None:
        q = param
        v = q ** 3 * (q + 1 - 3 * m)
        if v <= 0:
            raise ValueError("parameter m too large")
        return v
    for branch in _branches(fam):
        t = branch.start
        while branch.param(t) < param:
            t += 1
        if branch.param(t) == param and branch.admissible(t):
            return branch.value(t)
    raise ValueError(f"{param} is not admissible for {fam.value}")


@lru_cache(maxsize=None)
def _value_table(fam: ExprFamily, bound: int) -> dict[int, int]:
    """All (value, parameter) pairs with admissible value <= bound."""
    table: dict[int, int] = {}
    if fam is ExprFamily.REE_PM:
        f = 1
        while 3 ** (3 * (2 * f + 1)) <= bound:
            q = 3 ** (2 * f + 1)
            for m in sorted(set(range(1, q + 1)) | {3 ** f}):
                for sign in (-1, 1):
                    v = q ** 3 * (q + 1 + 3 * m * sign)
                    if 0 < v <= bound and v not in table:
                        table[v] = q
            f += 1
        return table
    for branch in _branches(fam):
        t = branch.start
        while True:
            v = branch.value(t)
            if v > bound:
                break
            if branch.admissible(t):
                p = branch.param(t)
                if v in table and table[v] != p:
                    raise AssertionError(
                        f"{fam.value}: two admissible preimages of {v}")
                table[v] = p
            t += 1
    return table


def brute_force_solve(fam: ExprFamily,
                      target: Union[FactoredInteger, int],
                      bound: int = 2 * 10 ** 9) -> Optional[int]:
    """Oracle: full enumeration of admissible values up to the bound."""
    n = _as_int(target)
    if n > bound:
        raise ValueError("brute-force oracle restricted to small targets")
    return _value_table(fam, bound).get(n)


def exists_half_pair(s: CodegreeSet) -> list[tuple[FactoredInteger,
                                                   FactoredInteger]]:
    """All ordered pairs (a, b) in the set with 2a = b, ascending by a."""
    by_int = {e.to_int(): e for e in s}
    return [(by_int[v], by_int[2 * v]) for v in sorted(by_int)
            if 2 * v in by_int]


def odd_elements(s: CodegreeSet) -> set[FactoredInteger]:
    """Nontrivial odd elements of the set."""
    return {e for e in s if not e.is_one() and e.is_odd()}


_POLYS: dict[str, Callable[[int], int]] = {
    "q^2+q+1": lambda r: r * r + r + 1,
    "q^2-q+1": lambda r: r * r - r + 1,
}


def residue_search(poly: Union[str, Callable[[int], int]],
                   modulus: int) -> set[int]:
    """Exact zero set of the polynomial over residues 0..modulus-1."""
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    fn = _POLYS[poly] if isinstance(poly, str) else poly
    return {r for r in range(modulus) if fn(r) % modulus == 0}


def two_adic_profile(fam: ExprFamily, f: int) -> int:
    """2-adic valuation of the family expression at q = 2^f."""
    return factorize(evaluate(fam, 2 ** f)).valuation(2)
