"""Exact arithmetic on positive integers held as prime -> exponent maps.

Every divisibility, valuation, and parity argument in the verification
pipeline runs on these maps; no float ever appears.  The textual form is
``2^8*3^2*5^2*17`` (ascending primes, ``*`` separator, ``^`` exponent,
``1`` for the empty product).
"""

from __future__ import annotations

from functools import total_ordering
from typing import Dict, Iterator, Mapping

#: Inputs to :func:`factorize` and :meth:`FactoredInteger.to_int` results are
#: guaranteed exact below this bound (squares of the largest codegrees in
#: scope still fit: Python ints are arbitrary precision, the bound is a
#: documented contract, not a hardware limit).
INT_BOUND = 1 << 127


class NotDivisible(ArithmeticError):
    """Raised when an exact quotient is requested but does not exist."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@total_ordering
class FactoredInteger:
    """A positive integer as an immutable prime -> exponent mapping.

    The empty map denotes 1.  Construction validates that every key is
    prime and every exponent positive.
    """

    __slots__ = ("_factors", "_hash")

    def __init__(self, factors: Mapping[int, int] | None = None):
        items: Dict[int, int] = {}
        if factors:
            for p in sorted(factors):
                e = factors[p]
                if not isinstance(p, int) or not isinstance(e, int):
                    raise TypeError("primes and exponents must be integers")
                if e == 0:
                    continue
                if e < 0:
                    raise ValueError(f"negative exponent for prime {p}")
                if not _is_prime(p):
                    raise ValueError(f"{p} is not prime")
                items[p] = e
        self._factors = items
        self._hash = hash(tuple(items.items()))

    # -- construction ------------------------------------------------

    @staticmethod
    def one() -> "FactoredInteger":
        return FactoredInteger()

    # -- views -------------------------------------------------------

    @property
    def factors(self) -> Dict[int, int]:
        return dict(self._factors)

    def primes(self) -> Iterator[int]:
        return iter(self._factors)

    def to_int(self) -> int:
        n = 1
        for p, e in self._factors.items():
            n *= p ** e
        return n

    def is_one(self) -> bool:
        return not self._factors

    def is_odd(self) -> bool:
        return 2 not in self._factors

    def is_prime_power(self) -> bool:
        """True iff the integer is p^a for a single prime p (a >= 1)."""
        return len(self._factors) == 1

    # -- arithmetic --------------------------------------------------

    def mul(self, other: "FactoredInteger") -> "FactoredInteger":
        out = dict(self._factors)
        for p, e in other._factors.items():
            out[p] = out.get(p, 0) + e
        return FactoredInteger(out)

    def square(self) -> "FactoredInteger":
        return FactoredInteger({p: 2 * e for p, e in self._factors.items()})

    def divides(self, other: "FactoredInteger") -> bool:
        """True iff self | other (exponentwise <=)."""
        return all(other._factors.get(p, 0) >= e for p, e in self._factors.items())

    def div_exact(self, other: "FactoredInteger") -> "FactoredInteger":
        if not other.divides(self):
            raise NotDivisible(f"{other} does not divide {self}")
        out = dict(self._factors)
        for p, e in other._factors.items():
            r = out[p] - e
            if r:
                out[p] = r
            else:
                del out[p]
        return FactoredInteger(out)

    def valuation(self, p: int) -> int:
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        return self._factors.get(p, 0)

    def p_part(self, p: int) -> "FactoredInteger":
        e = self.valuation(p)
        return FactoredInteger({p: e} if e else {})

    # -- comparisons (by numeric value) --------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FactoredInteger):
            return NotImplemented
        return self._factors == other._factors

    def __lt__(self, other: "FactoredInteger") -> bool:
        return self.to_int() < other.to_int()

    def __hash__(self) -> int:
        return self._hash

    # -- text form -----------------------------------------------------

    def __str__(self) -> str:
        if not self._factors:
            return "1"
        parts = []
        for p in sorted(self._factors):
            e = self._factors[p]
            parts.append(f"{p}^{e}" if e > 1 else f"{p}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"FactoredInteger({self._factors!r})"


def factorize(n: int) -> FactoredInteger:
    """Factor ``n >= 1`` by trial division (inputs in scope are bounded)."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("factorize requires a positive integer")
    if n >= INT_BOUND:
        raise ValueError("input exceeds the documented 2^127 bound")
    out: Dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return FactoredInteger(out)


def parse_factored(text: str) -> FactoredInteger:
    """Parse the textual form ``2^8*3^2*5^2*17`` (or ``1``)."""
    s = text.strip()
    if s == "1":
        return FactoredInteger()
    out: Dict[int, int] = {}
    last_prime = 0
    for piece in s.split("*"):
        piece = piece.strip()
        if not piece:
            raise ValueError(f"empty factor in {text!r}")
        if "^" in piece:
            base_s, exp_s = piece.split("^", 1)
            p, e = int(base_s), int(exp_s)
        else:
            p, e = int(piece), 1
        if e < 1:
            raise ValueError(f"exponent must be >= 1 in {text!r}")
        if p <= last_prime:
            raise ValueError(f"primes must be strictly ascending in {text!r}")
        if p in out:
            raise ValueError(f"repeated prime {p} in {text!r}")
        out[p] = e
        last_prime = p
    return FactoredInteger(out)
