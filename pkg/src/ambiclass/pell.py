"""Continued fraction of the fundamental surd and the fundamental unit norm.

For a real quadratic field of fundamental discriminant D the ring of
integers is generated by w = sqrt(D/4) when D = 0 mod 4 and
w = (1 + sqrt(D))/2 when D = 1 mod 4.  The continued fraction of w is
computed with the exact integer recurrence

    a_i = floor((P_i + sqrt(N)) / Q_i)
    P_{i+1} = a_i Q_i - P_i
    Q_{i+1} = (N - P_{i+1}^2) / Q_i

which stays in integers because Q_0 divides N - P_0^2.  The expansion is
eventually periodic; the first repeated (P, Q) state closes the minimal
period.  The norm of the fundamental unit is (-1) raised to the period
length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .quadform import NotFundamentalError, fundamental_discriminant

__all__ = ["SurdExpansion", "surd_expansion", "fundamental_unit_norm"]


@dataclass(frozen=True)
class SurdExpansion:
    discriminant: int
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    @property
    def period_length(self) -> int:
        return len(self.period)


def surd_expansion(disc) -> SurdExpansion:
    """Continued fraction of the fundamental surd, minimal period."""
    fd = fundamental_discriminant(disc)
    d = fd.value
    if d < 0:
        raise NotFundamentalError("surd expansion requires a real quadratic field")
    if d % 4 == 0:
        n, p, q = d // 4, 0, 1
    else:
        n, p, q = d, 1, 2
    s = math.isqrt(n)
    seen: dict[tuple[int, int], int] = {}
    quotients: list[int] = []
    while (p, q) not in seen:
        seen[(p, q)] = len(quotients)
        # q > 0 holds along the whole orbit since the surd exceeds 1
        a = (p + s) // q
        quotients.append(a)
        p = a * q - p
        q = (n - p * p) // q
    start = seen[(p, q)]
    return SurdExpansion(
        discriminant=d,
        preperiod=tuple(quotients[:start]),
        period=tuple(quotients[start:]),
    )


def fundamental_unit_norm(disc) -> int:
    """Norm of the fundamental unit: -1 iff the surd period length is odd."""
    return -1 if surd_expansion(disc).period_length & 1 else 1
