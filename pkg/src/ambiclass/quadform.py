"""Binary quadratic forms and the narrow class group of a quadratic field.

A form (a, b, c) has discriminant b^2 - 4ac.  Throughout, discriminants are
fundamental: D = 1 mod 4 squarefree, or D = 4m with m squarefree and
m = 2, 3 mod 4.  For such D every form of discriminant D is automatically
primitive, classes of positive definite (D < 0) respectively arbitrary
indefinite (D > 0) forms under proper equivalence realize the narrow ideal
class group, and the Galois conjugation of the field acts on classes as the
opposite form (a, -b, c), i.e. as inversion, because an ideal times its
conjugate is generated by its totally positive absolute norm.

Reduction conventions:

* D < 0 (positive definite, a > 0): reduced means |b| <= a <= c with
  b >= 0 whenever |b| = a or a = c.  One reduced form per class.
* D > 0 (indefinite, D never a square here): reduced means
  0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b.  Reduced forms of a
  class form one rho-cycle; the canonical class representative is the
  lexicographically least (a, b, c) of the cycle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple

from .arith import ext_gcd, factorize
from .normlocal import CycleChoice, CycleVariant

__all__ = [
    "DiscriminantBoundError",
    "FormClassGroup",
    "FundamentalDiscriminant",
    "InfiniteBehavior",
    "InvalidFormError",
    "NotFundamentalError",
    "QuadraticForm",
    "ambiguous_count",
    "compose",
    "fundamental_discriminant",
    "galois_apply",
    "group_structure",
    "is_fundamental",
    "narrow_class_group",
    "one_minus_sigma_image_order",
    "principal_form",
    "reduce_form",
]

DEFAULT_DISC_BOUND = 10**6


class NotFundamentalError(ValueError):
    """Input integer is not a fundamental discriminant."""


class InvalidFormError(ValueError):
    """Form violates a precondition (imprimitive, degenerate, wrong sign)."""


class DiscriminantBoundError(ValueError):
    """|D| exceeds the configured enumeration bound."""


class InfiniteBehavior(Enum):
    SPLIT = "split"
    NONSPLIT = "nonsplit"


# --------------------------------------------------------------------------
# smallest-prime-factor sieve, grown on demand; factoring desk-scale numbers
# this way keeps the big sweeps cheap.

_spf: list[int] = []


def _spf_extend(limit: int) -> None:
    global _spf
    if len(_spf) > limit:
        return
    size = max(limit + 1, 2 * len(_spf), 4096)
    tbl = list(range(size))
    for p in range(2, math.isqrt(size - 1) + 1):
        if tbl[p] == p:
            for q in range(p * p, size, p):
                if tbl[q] == q:
                    tbl[q] = p
    _spf = tbl


def _factor_positive(n: int) -> list[tuple[int, int]]:
    """Sorted (prime, exponent) pairs of n >= 1, sieve-backed when possible."""
    if n < len(_spf):
        out: list[tuple[int, int]] = []
        while n > 1:
            p = _spf[n]
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        return out
    return list(factorize(n).factors)


def _divisors(factors: list[tuple[int, int]]) -> list[int]:
    divs = [1]
    for p, e in factors:
        pk = 1
        extra = []
        for _ in range(e):
            pk *= p
            extra.extend(d * pk for d in divs)
        divs.extend(extra)
    return divs


# --------------------------------------------------------------------------
# fundamental discriminants


@dataclass(frozen=True)
class FundamentalDiscriminant:
    """A validated fundamental discriminant with its ramification data."""

    value: int
    ramified_primes: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.ramified_primes)

    @property
    def infinite_behavior(self) -> InfiniteBehavior:
        # The real place of the rationals splits completely exactly in the
        # real quadratic case.
        return InfiniteBehavior.SPLIT if self.value > 0 else InfiniteBehavior.NONSPLIT

    def __int__(self) -> int:
        return self.value


def _fundamental_parts(n: int) -> tuple[int, ...] | None:
    """Ramified primes if n is a fundamental discriminant, else None."""
    if n == 0 or n == 1:
        return None
    if n % 4 == 1:
        facs = _factor_positive(abs(n))
        if any(e > 1 for _, e in facs):
            return None
        return tuple(p for p, _ in facs)
    if n % 4 != 0:
        return None
    m = n // 4
    if m % 4 not in (2, 3):
        return None
    facs = _factor_positive(abs(m))
    if any(e > 1 for _, e in facs):
        return None
    primes = sorted({2, *(p for p, _ in facs)})
    return tuple(primes)


def is_fundamental(n: int) -> bool:
    return _fundamental_parts(n) is not None


def fundamental_discriminant(n: int | FundamentalDiscriminant) -> FundamentalDiscriminant:
    if isinstance(n, FundamentalDiscriminant):
        return n
    parts = _fundamental_parts(n)
    if parts is None:
        raise NotFundamentalError(f"{n} is not a fundamental discriminant")
    return FundamentalDiscriminant(value=n, ramified_primes=parts)


# --------------------------------------------------------------------------
# forms


class QuadraticForm(NamedTuple):
    a: int
    b: int
    c: int

    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def opposite(self) -> "QuadraticForm":
        return QuadraticForm(self.a, -self.b, self.c)

    def content(self) -> int:
        return math.gcd(self.a, self.b, self.c)


def principal_form(disc: int) -> QuadraticForm:
    if disc % 4 == 0:
        return QuadraticForm(1, 0, -disc // 4)
    return QuadraticForm(1, 1, (1 - disc) // 4)


# ---- reduction, tuple engines ----------------------------------------------


def _reduce_def(a: int, b: int, c: int) -> tuple[int, int, int]:
    """Reduce a positive definite form; unique representative."""
    while True:
        if b > a or b <= -a:
            # translate b into (-a, a]
            r = (a - b) // (2 * a)
            c += (a * r + b) * r
            b += 2 * r * a
        if a > c:
            a, b, c = c, -b, a
            continue
        if a == c and b < 0:
            b = -b
        return (a, b, c)


def _indef_rho(a: int, b: int, c: int, d: int, s: int) -> tuple[int, int, int]:
    """One rho step (a,b,c) -> (c, b', c') keeping b' = -b mod 2|c|."""
    ac = c if c > 0 else -c
    m = 2 * ac
    r0 = (-b) % m
    if ac > s:
        bp = r0 if r0 <= ac else r0 - m
    else:
        bp = s - (s - r0) % m
    return (c, bp, (bp * bp - d) // (4 * c))


def _indef_is_reduced(a: int, b: int, c: int, s: int) -> bool:
    if b < 1 or b > s:
        return False
    aa = 2 * (a if a > 0 else -a)
    return aa + b >= s + 1 and aa - b <= s


def _reduce_indef(a: int, b: int, c: int, d: int, s: int) -> tuple[int, int, int]:
    guard = 0
    while not _indef_is_reduced(a, b, c, s):
        a, b, c = _indef_rho(a, b, c, d, s)
        guard += 1
        if guard > 10_000:
            raise RuntimeError(f"reduction failed to terminate for disc {d}")
    return (a, b, c)


def _canonical_indef(f: tuple[int, int, int], d: int, s: int) -> tuple[int, int, int]:
    """Lexicographically least reduced form in the rho-cycle of reduced f."""
    best = f
    g = _indef_rho(*f, d, s)
    while g != f:
        if g < best:
            best = g
        g = _indef_rho(*g, d, s)
    return best


def _validated_parts(form: QuadraticForm) -> tuple[tuple[int, int, int], int]:
    a, b, c = form
    d = b * b - 4 * a * c
    if d == 0:
        raise InvalidFormError("degenerate form, discriminant 0")
    if math.gcd(a, math.gcd(b, c)) != 1:
        raise InvalidFormError(f"form {form} is not primitive")
    if d < 0:
        if a <= 0:
            raise InvalidFormError("negative discriminant requires a > 0")
    else:
        if math.isqrt(d) ** 2 == d:
            raise InvalidFormError("square discriminant forms are not supported")
        if a == 0 or c == 0:
            raise InvalidFormError("degenerate indefinite form")
    return (a, b, c), d


def reduce_form(form: QuadraticForm) -> QuadraticForm:
    """Reduced representative; for D > 0 the canonical one of the cycle."""
    (a, b, c), d = _validated_parts(form)
    if d < 0:
        return QuadraticForm(*_reduce_def(a, b, c))
    s = math.isqrt(d)
    red = _reduce_indef(a, b, c, d, s)
    return QuadraticForm(*_canonical_indef(red, d, s))


# ---- composition ------------------------------------------------------------


def _solve_linmod(a: int, b: int, m: int) -> tuple[int, int]:
    """Least x >= 0 with a*x = b (mod m), plus the solution step m/gcd."""
    g, x, _ = ext_gcd(a, m)
    if b % g:
        raise ValueError("no solution")
    step = m // g
    return (b // g * x) % step, step


def _compose_raw(
    f1: tuple[int, int, int], f2: tuple[int, int, int]
) -> tuple[int, int, int]:
    """Gauss composition; requires positive leading coefficients."""
    a1, b1, c1 = f1
    a2, b2, c2 = f2
    g = (b1 + b2) >> 1
    h = b2 - g
    w = math.gcd(a1, a2, g)
    s = a1 // w
    t = a2 // w
    u = g // w
    st = s * t
    mu, nu = _solve_linmod(t * u, (h * u + s * c1) % st, st)
    lam, _ = _solve_linmod((t * nu) % s, (h - t * mu) % s, s)
    k = mu + nu * lam
    ell = (k * t - h) // s
    m = (t * u * k - h * u - c1 * s) // st
    return (st, w * u - k * t - ell * s, k * ell - w * m)


def _positive_rep(f: tuple[int, int, int], d: int, s: int) -> tuple[int, int, int]:
    """Equivalent reduced form with a > 0 (outer signs alternate on a cycle)."""
    if f[0] > 0:
        return f
    return _indef_rho(*f, d, s)


def compose(f: QuadraticForm, g: QuadraticForm) -> QuadraticForm:
    """Canonical representative of the composite class of f and g."""
    (fa, fb, fc), d1 = _validated_parts(f)
    (ga, gb, gc), d2 = _validated_parts(g)
    if d1 != d2:
        raise InvalidFormError("cannot compose forms of different discriminants")
    if d1 < 0:
        raw = _compose_raw(_reduce_def(fa, fb, fc), _reduce_def(ga, gb, gc))
        return QuadraticForm(*_reduce_def(*raw))
    s = math.isqrt(d1)
    r1 = _positive_rep(_reduce_indef(fa, fb, fc, d1, s), d1, s)
    r2 = _positive_rep(_reduce_indef(ga, gb, gc, d1, s), d1, s)
    red = _reduce_indef(*_compose_raw(r1, r2), d1, s)
    return QuadraticForm(*_canonical_indef(red, d1, s))


def galois_apply(form: QuadraticForm) -> QuadraticForm:
    """Class of the Galois conjugate: the opposite form, i.e. the inverse."""
    return reduce_form(form.opposite())


# ---- enumeration ------------------------------------------------------------


@lru_cache(maxsize=None)
def _sqrt_table(m: int) -> dict[int, tuple[int, ...]]:
    """All square roots of every residue class modulo m."""
    roots: dict[int, list[int]] = {}
    for x in range(m):
        roots.setdefault(x * x % m, []).append(x)
    return {r: tuple(xs) for r, xs in roots.items()}


def _definite_reduced(d: int) -> list[tuple[int, int, int]]:
    """All reduced forms of fundamental d < 0; one per class."""
    forms = []
    for a in range(1, math.isqrt(-d // 3) + 1):
        m = 4 * a
        for r in _sqrt_table(m).get(d % m, ()):
            if r <= a:
                b = r
            elif r > 3 * a:
                b = r - m
            else:
                continue
            c = (b * b - d) // m
            if c < a:
                continue
            if b < 0 and a == c:
                continue  # tie-break keeps the b >= 0 twin
            forms.append((a, b, c))
    forms.sort()
    return forms


def _indefinite_reduced(d: int, s: int) -> list[tuple[int, int, int]]:
    """All reduced forms of fundamental d > 0, s = isqrt(d)."""
    forms = []
    for b in range(2 - (d & 1), s + 1, 2):
        n = (d - b * b) // 4
        lo = max(1, (s + 2 - b) // 2)
        hi = (s + b) // 2
        if lo > hi:
            continue
        for a in _divisors(_factor_positive(n)):
            if lo <= a <= hi:
                c = n // a
                forms.append((a, b, -c))
                forms.append((-a, b, c))
    forms.sort()
    return forms


# ---- the class group --------------------------------------------------------


class _CycleData:
    """Per cycle-variant view of the group: Galois-fixed set, squaring map."""

    __slots__ = ("order", "identity", "sq_map", "sigma_fixed")

    def __init__(
        self,
        order: int,
        identity: int,
        sq_map: dict[int, int],
        sigma_fixed: frozenset[int],
    ):
        self.order = order
        self.identity = identity
        self.sq_map = sq_map
        self.sigma_fixed = sigma_fixed


class FormClassGroup:
    """Narrow class group of a fundamental discriminant, via reduced forms.

    Classes are indexed 0..h-1 in lexicographic order of their canonical
    representatives.  All group operations are exact; composition goes
    through Gauss composition of representatives followed by reduction.
    """

    def __init__(self, disc: FundamentalDiscriminant):
        self.discriminant = disc
        d = disc.value
        self._d = d
        self._s = math.isqrt(d) if d > 0 else 0
        if d < 0:
            classes = _definite_reduced(d)
            self._index = {f: i for i, f in enumerate(classes)}
            self._pos = classes
        else:
            reduced = _indefinite_reduced(d, self._s)
            index: dict[tuple[int, int, int], int] = {}
            classes = []
            pos = []
            for f in reduced:
                if f in index:
                    continue
                cycle = [f]
                g = _indef_rho(*f, d, self._s)
                while g != f:
                    cycle.append(g)
                    g = _indef_rho(*g, d, self._s)
                idx = len(classes)
                for g in cycle:
                    index[g] = idx
                classes.append(min(cycle))
                pos.append(min(x for x in cycle if x[0] > 0))
            # relabel so classes are sorted by canonical representative
            order = sorted(range(len(classes)), key=classes.__getitem__)
            rank = {old: new for new, old in enumerate(order)}
            classes = [classes[i] for i in order]
            pos = [pos[i] for i in order]
            index = {f: rank[i] for f, i in index.items()}
            self._index = index
            self._pos = pos
        self.classes = tuple(QuadraticForm(*f) for f in classes)
        self._class_tuples = classes
        pf = principal_form(d)
        self.principal_index = self.class_index(pf)
        self._squares: list[int] | None = None
        self._opposites: list[int] | None = None
        self._delta: int | None = None
        self._views: dict[str, _CycleData] = {}

    # -- basics

    @property
    def order(self) -> int:
        return len(self._class_tuples)

    def __len__(self) -> int:
        return len(self._class_tuples)

    def class_index(self, form: QuadraticForm | tuple[int, int, int]) -> int:
        (a, b, c), d = _validated_parts(QuadraticForm(*form))
        if d != self._d:
            raise InvalidFormError(
                f"form {form!r} has discriminant {d}, group has {self._d}"
            )
        if d < 0:
            key = _reduce_def(a, b, c)
        else:
            key = _reduce_indef(a, b, c, d, self._s)
        return self._index[key]

    # -- group law

    def _compose_tuples(self, f: tuple[int, int, int], g: tuple[int, int, int]) -> int:
        raw = _compose_raw(f, g)
        if self._d < 0:
            return self._index[_reduce_def(*raw)]
        return self._index[_reduce_indef(*raw, self._d, self._s)]

    def compose(self, i: int, j: int) -> int:
        return self._compose_tuples(self._pos[i], self._pos[j])

    def power(self, i: int, n: int) -> int:
        if n < 0:
            i, n = self.inverse(i), -n
        acc = self.principal_index
        base = i
        while n:
            if n & 1:
                acc = self.compose(acc, base)
            base = self.compose(base, base)
            n >>= 1
        return acc

    def inverse(self, i: int) -> int:
        return self.opposites()[i]

    def galois_apply(self, i: int) -> int:
        """Index of the Galois conjugate class (= the inverse class)."""
        return self.opposites()[i]

    def opposites(self) -> list[int]:
        if self._opposites is None:
            out = []
            for a, b, c in self._class_tuples:
                if self._d < 0:
                    out.append(self._index[_reduce_def(a, -b, c)])
                else:
                    out.append(self._index[_reduce_indef(a, -b, c, self._d, self._s)])
            self._opposites = out
        return self._opposites

    def squares(self) -> list[int]:
        if self._squares is None:
            self._squares = [self.compose(i, i) for i in range(len(self))]
        return self._squares

    def delta_index(self) -> int:
        """Class of the form of leading coefficient -1 (D > 0 only).

        This is the kernel class of the narrow-to-ordinary quotient; it is
        the principal class exactly when the fundamental unit has norm -1.
        """
        if self._d < 0:
            raise InvalidFormError("delta class exists only for D > 0")
        if self._delta is None:
            b0 = self._d & 1
            if self._d % 4 == 0:
                f = (-1, 0, self._d // 4)
            else:
                f = (-1, b0, (self._d - b0 * b0) // 4)
            self._delta = self._index[_reduce_indef(*f, self._d, self._s)]
        return self._delta

    # -- cycle-dependent views

    def cycle_data(self, cycle: CycleChoice) -> _CycleData:
        if self._d < 0 or cycle.variant is CycleVariant.NARROW:
            key = "narrow"
        else:
            key = "ordinary"
        data = self._views.get(key)
        if data is None:
            data = self._narrow_data() if key == "narrow" else self._ordinary_data()
            self._views[key] = data
        return data

    def _narrow_data(self) -> _CycleData:
        sq = self.squares()
        opp = self.opposites()
        fixed = frozenset(i for i in range(len(self)) if opp[i] == i)
        return _CycleData(
            order=len(self),
            identity=self.principal_index,
            sq_map={i: sq[i] for i in range(len(self))},
            sigma_fixed=fixed,
        )

    def _ordinary_data(self) -> _CycleData:
        delta = self.delta_index()
        if delta == self.principal_index:
            return self._narrow_data()
        sq = self.squares()
        opp = self.opposites()
        canon = [min(i, self.compose(i, delta)) for i in range(len(self))]
        reps = sorted(set(canon))
        return _CycleData(
            order=len(reps),
            identity=canon[self.principal_index],
            sq_map={r: canon[sq[r]] for r in reps},
            sigma_fixed=frozenset(r for r in reps if canon[opp[r]] == r),
        )


@lru_cache(maxsize=8)
def _build_group(value: int) -> FormClassGroup:
    return FormClassGroup(fundamental_discriminant(value))


def narrow_class_group(
    disc: int | FundamentalDiscriminant, bound: int = DEFAULT_DISC_BOUND
) -> FormClassGroup:
    fd = fundamental_discriminant(disc)
    if abs(fd.value) > bound:
        raise DiscriminantBoundError(
            f"|{fd.value}| exceeds the enumeration bound {bound}; "
            "pass a larger bound explicitly to accept the longer runtime"
        )
    _spf_extend(max(abs(fd.value) // 3, fd.value // 4 if fd.value > 0 else 0) + 1)
    return _build_group(fd.value)


def ambiguous_count(
    disc: int | FundamentalDiscriminant,
    cycle: CycleChoice,
    group: FormClassGroup | None = None,
) -> int:
    """Number of Galois-fixed classes of Cl(K, cycle), counted directly."""
    if group is None:
        group = narrow_class_group(disc)
    return len(group.cycle_data(cycle).sigma_fixed)


def one_minus_sigma_image_order(
    disc: int | FundamentalDiscriminant,
    cycle: CycleChoice,
    group: FormClassGroup | None = None,
) -> int:
    """Order of the image of 1 - sigma, i.e. of the subgroup of squares.

    Galois conjugation acts as inversion, so x^(1-sigma) = x * sigma(x)^-1
    is the squaring map; its image is computed by composing every class
    with itself.
    """
    if group is None:
        group = narrow_class_group(disc)
    return len(set(group.cycle_data(cycle).sq_map.values()))


def group_structure(group: FormClassGroup) -> list[int]:
    """Invariant factors d1 | d2 | ... of the group, by order counting."""
    h = len(group)
    if h == 1:
        return []
    parts_by_prime: dict[int, list[int]] = {}
    for p, e in _factor_positive(h):
        # number of cyclic p-factors of exponent >= k is
        # log_p(#G[p^k] / #G[p^(k-1)])
        prev = 1
        at_least: list[int] = []
        for k in range(1, e + 1):
            cnt = sum(
                1 for i in range(h) if group.power(i, p**k) == group.principal_index
            )
            step = 0
            while prev < cnt:
                prev *= p
                step += 1
            at_least.append(step)
            prev = cnt
        exps = []
        for k, n_ge in enumerate(at_least, start=1):
            n_next = at_least[k] if k < len(at_least) else 0
            exps.extend([k] * (n_ge - n_next))
        parts_by_prime[p] = sorted(exps, reverse=True)
    width = max(len(v) for v in parts_by_prime.values())
    factors = []
    for i in range(width):
        d = 1
        for p, exps in parts_by_prime.items():
            if i < len(exps):
                d *= p ** exps[i]
        factors.append(d)
    factors.reverse()
    return factors
