"""Local norm data for quadratic fields: Hilbert symbols and unit indices.

The base field is the rationals throughout.  A cycle choice (ordinary or
narrow) on the quadratic field K of discriminant D determines a base cycle
on the rationals: the product of the restriction of the chosen cycle and
the real places that do not split completely in K.  Concretely the base
cycle is either empty or the single real place:

* D < 0: the real place never splits, so both variants derive {oo}.
* D > 0, ordinary: empty cycle upstairs, real place splits, so empty.
* D > 0, narrow: the real place of K restricts to {oo}.

An element q of the rationals is a norm from K exactly when the Hilbert
symbol (q, D)_v is +1 at every place v (Hasse norm theorem for the cyclic
extension K).  Only v in {oo, 2} and the primes dividing q or D can give -1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .arith import factorize, is_prime, kronecker

__all__ = [
    "OO",
    "CycleChoice",
    "CycleVariant",
    "UnitNormIndexResult",
    "hilbert_symbol",
    "is_global_norm",
    "local_norm_index_product",
    "relevant_places",
    "unit_norm_index",
]

# The real place of the rationals.  Finite places are the primes themselves.
OO = math.inf


class CycleVariant(str, Enum):
    ORDINARY = "ordinary"
    NARROW = "narrow"

    @classmethod
    def from_string(cls, text: str) -> "CycleVariant":
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown cycle variant {text!r}") from None


@dataclass(frozen=True)
class CycleChoice:
    """Requested cycle variant plus the derived base cycle on the rationals."""

    variant: CycleVariant
    base_cycle_contains_infinity: bool

    @classmethod
    def for_discriminant(cls, variant: CycleVariant | str, disc: int) -> "CycleChoice":
        if isinstance(variant, str):
            variant = CycleVariant.from_string(variant)
        d = int(disc)
        if d < 0:
            contains = True
        else:
            contains = variant is CycleVariant.NARROW
        return cls(variant=variant, base_cycle_contains_infinity=contains)

    @property
    def derived_base_cycle(self) -> frozenset:
        return frozenset({OO}) if self.base_cycle_contains_infinity else frozenset()


def _square_class_int(q: int | Fraction) -> int:
    """Integer in the same rational square class as q (num times den)."""
    fr = Fraction(q)
    if fr == 0:
        raise ValueError("Hilbert symbol arguments must be nonzero")
    return fr.numerator * fr.denominator


def _eps(u: int) -> int:
    # (u - 1)/2 mod 2 for odd u; 0 when u = 1 mod 4, 1 when u = 3 mod 4
    return ((u - 1) // 2) & 1


def _omega(u: int) -> int:
    # (u^2 - 1)/8 mod 2 for odd u; 0 when u = +-1 mod 8, 1 when u = +-3 mod 8
    return ((u * u - 1) // 8) & 1


def _split_valuation(n: int, p: int) -> tuple[int, int]:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def hilbert_symbol(a: int | Fraction, b: int | Fraction, place) -> int:
    """Hilbert symbol (a, b) at a finite prime or at the real place OO.

    Value +1 when z^2 = a x^2 + b y^2 has a nontrivial solution over the
    completion at the place, -1 otherwise.  Depends only on the square
    classes of a and b.
    """
    ai = _square_class_int(a)
    bi = _square_class_int(b)
    if place == OO:
        return -1 if ai < 0 and bi < 0 else 1
    if not isinstance(place, int) or not is_prime(place):
        raise ValueError(f"{place!r} is not a prime or the real place")
    p = place
    alpha, u = _split_valuation(ai, p)
    beta, w = _split_valuation(bi, p)
    if p == 2:
        exponent = _eps(u) * _eps(w) + alpha * _omega(w) + beta * _omega(u)
        return -1 if exponent & 1 else 1
    sign = -1 if (alpha & beta & ((p - 1) // 2)) & 1 else 1
    if beta & 1:
        sign *= kronecker(u, p)
    if alpha & 1:
        sign *= kronecker(w, p)
    return sign


def relevant_places(a: int | Fraction, b: int | Fraction) -> list:
    """Places where (a, b) can be -1: oo, 2, and primes dividing a or b."""
    primes = {2}
    for q in (a, b):
        qi = _square_class_int(q)
        primes.update(factorize(qi).primes)
    return [OO, *sorted(primes)]


def is_global_norm(q: int | Fraction, disc) -> bool:
    """Whether q is the norm of an element of the field of discriminant disc."""
    d = int(disc)
    qi = _square_class_int(q)
    if qi == 0:
        raise ValueError("norm test requires a nonzero rational")
    places: set[int] = {2}
    places.update(factorize(qi).primes)
    ramified = getattr(disc, "ramified_primes", None)
    if ramified is None:
        ramified = factorize(d).primes
    places.update(ramified)
    if hilbert_symbol(qi, d, OO) != 1:
        return False
    return all(hilbert_symbol(qi, d, p) == 1 for p in sorted(places))


@dataclass(frozen=True)
class UnitNormIndexResult:
    """Index of norm-units inside the base units allowed by the cycle."""

    base_unit_group_order: int
    index: int
    minus_one_is_global_norm: bool


def unit_norm_index(disc, cycle: CycleChoice) -> UnitNormIndexResult:
    """[o(c)^x : o(c)^x meet N(K^x)] for the derived base cycle.

    The base units are {+-1}; a cycle containing the real place cuts them
    down to {+1}, making the index 1.  Otherwise the index is 1 or 2
    according to whether -1 is a global norm, which by the Hasse norm
    theorem reduces to the Hilbert symbols of (-1, D).
    """
    minus_one = is_global_norm(-1, disc)
    if cycle.base_cycle_contains_infinity:
        return UnitNormIndexResult(
            base_unit_group_order=1, index=1, minus_one_is_global_norm=minus_one
        )
    return UnitNormIndexResult(
        base_unit_group_order=2,
        index=1 if minus_one else 2,
        minus_one_is_global_norm=minus_one,
    )


def local_norm_index_product(disc) -> int:
    """Product over finite places of local unit norm indices.

    At a finite place v the index of norms of local units inside local units
    is the ramification index e(v), so the product is 2^t with t the number
    of ramified primes.
    """
    ramified = getattr(disc, "ramified_primes", None)
    if ramified is None:
        ramified = factorize(int(disc)).primes
    return 2 ** len(ramified)
