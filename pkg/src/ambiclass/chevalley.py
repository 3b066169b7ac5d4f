"""Two-sided verification of the ambiguous class number formula over Q.

For a quadratic field K of fundamental discriminant D and a cycle choice
(ordinary or narrow), the number of Galois-fixed classes of Cl(K, cycle)
equals

    h_base * prod_v e(v) / (degree * unit_index)

where h_base is the ray class number of the derived base cycle on the
rationals (always 1 here), the product of ramification indices over finite
places is 2^t with t the number of ramified primes, the degree is 2, and
unit_index is the index of norms among the base units the cycle allows.

The left side is computed independently by enumerating Galois-fixed form
classes; the right side from ramification and Hilbert symbols.  The order
of the norm-residue group, which equals the fixed-class count by a counting
argument through the ray class group of the base cut out by local norms, is
reported separately so that equality can be checked as its own statement:
it is h_base * 2^t / unit_index divided by the degree.

When the squares subgroup S (the image of 1 - sigma, since sigma acts as
inversion) has odd order, squaring restricted to S is a bijection, S meets
the fixed classes trivially, and the group decomposes as the direct sum of
the two; verify() checks these predicates whenever they apply.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import normlocal, pell, quadform
from .normlocal import CycleChoice, CycleVariant
from .quadform import DEFAULT_DISC_BOUND, FormClassGroup, FundamentalDiscriminant

__all__ = [
    "ChevalleyReport",
    "InternalInconsistencyError",
    "base_class_number",
    "norm_group_order",
    "remark_decomposition_check",
    "rhs_ambiguous_number",
    "verify",
    "verify_discriminant",
]

_DEGREE = 2  # [K : Q] for a quadratic extension


class InternalInconsistencyError(RuntimeError):
    """A quotient that must be an exact integer failed to divide."""


@dataclass(frozen=True)
class ChevalleyReport:
    """Both sides of the formula for one (discriminant, cycle) pair."""

    discriminant: int
    t: int
    cycle: CycleVariant
    class_number: int
    lhs_ambiguous: int
    rhs_formula: int
    norm_group_order: int
    base_class_number: int
    ramification_product: int
    degree: int
    unit_index: int
    one_minus_sigma_order: int
    eps_norm: int | None
    remark_applicable: bool
    remark_holds: bool | None
    match: bool
    note: str | None = None


def base_class_number(cycle: CycleChoice) -> int:
    """Ray class number of the derived base cycle on the rationals.

    With class number one and units {+-1}, a cycle containing the real
    place gives h * 2 / [units : positive units] = 2/2 = 1; the empty
    cycle gives 1 directly.
    """
    if cycle.base_cycle_contains_infinity:
        return 1 * 2 // 2
    return 1


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise InternalInconsistencyError(f"{what}: {num} is not divisible by {den}")
    return q


def rhs_ambiguous_number(disc, cycle: CycleChoice) -> int:
    """Right side: h_base * 2^t / (degree * unit_index), exact."""
    fd = quadform.fundamental_discriminant(disc)
    h_base = base_class_number(cycle)
    ram = normlocal.local_norm_index_product(fd)
    unit = normlocal.unit_norm_index(fd, cycle).index
    return _exact_div(h_base * ram, _DEGREE * unit, "ambiguous number formula")


def norm_group_order(disc, cycle: CycleChoice) -> int:
    """Order of the group of norm-residue classes for the cycle.

    Computed through the ray class group of the base cut out by local
    norms: its order is h_base * 2^t / unit_index, and the norm-residue
    group has index equal to the degree in it.
    """
    fd = quadform.fundamental_discriminant(disc)
    h_base = base_class_number(cycle)
    ram = normlocal.local_norm_index_product(fd)
    unit = normlocal.unit_norm_index(fd, cycle).index
    ray_order = _exact_div(h_base * ram, unit, "norm ray class group")
    return _exact_div(ray_order, _DEGREE, "norm-residue group")


def remark_decomposition_check(
    disc,
    cycle: CycleChoice,
    group: FormClassGroup | None = None,
) -> tuple[bool, bool | None]:
    """(applicable, holds) for the odd-squares direct-sum decomposition.

    Applicable when the subgroup of squares S has odd order.  Then squaring
    must restrict to a bijection of S, S must meet the Galois-fixed classes
    only in the identity, and the two orders must multiply to the group
    order, which together give Cl = Cl^G + S as a direct sum.
    """
    if group is None:
        group = quadform.narrow_class_group(disc)
    data = group.cycle_data(cycle)
    squares = set(data.sq_map.values())
    if len(squares) % 2 == 0:
        return False, None
    bijective = len({data.sq_map[s] for s in squares}) == len(squares)
    trivial_meet = squares & data.sigma_fixed == {data.identity}
    orders_multiply = len(squares) * len(data.sigma_fixed) == data.order
    return True, bijective and trivial_meet and orders_multiply


def verify(
    disc,
    cycle: CycleChoice | CycleVariant | str,
    group: FormClassGroup | None = None,
    bound: int = DEFAULT_DISC_BOUND,
) -> ChevalleyReport:
    """Compute both sides independently for one discriminant and cycle."""
    fd = quadform.fundamental_discriminant(disc)
    if not isinstance(cycle, CycleChoice):
        cycle = CycleChoice.for_discriminant(cycle, fd.value)
    if group is None:
        group = quadform.narrow_class_group(fd, bound=bound)
    data = group.cycle_data(cycle)

    lhs = len(data.sigma_fixed)
    h_base = base_class_number(cycle)
    ram = normlocal.local_norm_index_product(fd)
    unit = normlocal.unit_norm_index(fd, cycle)
    rhs = _exact_div(h_base * ram, _DEGREE * unit.index, "ambiguous number formula")
    ngo = _exact_div(
        _exact_div(h_base * ram, unit.index, "norm ray class group"),
        _DEGREE,
        "norm-residue group",
    )
    applicable, holds = remark_decomposition_check(fd, cycle, group=group)
    eps = pell.fundamental_unit_norm(fd) if fd.value > 0 else None
    note = None
    if fd.value < 0 and cycle.variant is CycleVariant.NARROW:
        note = "narrow request normalized to ordinary: no real places on K"
    return ChevalleyReport(
        discriminant=fd.value,
        t=fd.t,
        cycle=cycle.variant,
        class_number=data.order,
        lhs_ambiguous=lhs,
        rhs_formula=rhs,
        norm_group_order=ngo,
        base_class_number=h_base,
        ramification_product=ram,
        degree=_DEGREE,
        unit_index=unit.index,
        one_minus_sigma_order=len(set(data.sq_map.values())),
        eps_norm=eps,
        remark_applicable=applicable,
        remark_holds=holds,
        match=lhs == rhs and lhs == ngo,
        note=note,
    )


def verify_discriminant(
    disc,
    variants: tuple[CycleVariant, ...] = (CycleVariant.ORDINARY, CycleVariant.NARROW),
    bound: int = DEFAULT_DISC_BOUND,
) -> list[ChevalleyReport]:
    """Reports for one discriminant, sharing the class group across cycles."""
    fd = quadform.fundamental_discriminant(disc)
    group = quadform.narrow_class_group(fd, bound=bound)
    return [
        verify(fd, CycleChoice.for_discriminant(v, fd.value), group=group)
        for v in variants
    ]
