"""Genus-one strata: rotation numbers, component lists, merging, splitting.

Components of a genus-one stratum correspond to divisors e of
d = gcd(orders): the component of rotation number r = d/e is the locus
where the weighted sum of singularity positions on the torus is a point of
order exactly e.  A component is primitive iff gcd(k, r) = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import RotationError, SignatureError
from .signature import StratumSignature, divisors, gcd_orders, validate


@dataclass(frozen=True)
class GenusOneComponent:
    rotation: int
    torsion_order: int
    primitive: bool
    hyperelliptic: bool


@dataclass(frozen=True)
class GenusOneMerge:
    """Outcome of colliding two singularities on a genus-one signature."""

    feasible: bool
    result: StratumSignature | None
    rotations: tuple[int, ...]
    reason: str = ""


def _require_genus_one(sig: StratumSignature) -> None:
    if sig.genus != 1:
        raise SignatureError(f"expected genus one, got genus {sig.genus}")


def _nonzero_gcd(orders) -> int:
    return math.gcd(*(abs(o) for o in orders if o != 0)) if any(orders) else 0


def nonempty_rotations(orders) -> tuple[int, ...]:
    """Rotation numbers of the nonempty components, descending.

    Rotations are d/e over divisors e of d = gcd of the nonzero orders.
    When exactly two entries are nonzero, the rotation-d component is the
    locus where those two points coincide, so it is empty and excluded;
    marked points neither count toward the two nor change d.
    """
    d = _nonzero_gcd(orders)
    if d == 0:
        return ()
    rotations = [d // e for e in divisors(d)]
    if sum(1 for o in orders if o != 0) == 2:
        rotations.remove(d)
    return tuple(sorted(rotations, reverse=True))


def components(sig: StratumSignature) -> tuple[GenusOneComponent, ...]:
    """All nonempty components of a genus-one stratum, rotation descending."""
    _require_genus_one(sig)
    if not any(sig.orders):
        raise SignatureError("all orders are zero: no differential is prescribed")
    d = gcd_orders(sig)
    return tuple(
        GenusOneComponent(
            rotation=r,
            torsion_order=d // r,
            primitive=math.gcd(sig.k, r) == 1,
            hyperelliptic=hyperelliptic_genus_one(sig.k, sig.orders, r),
        )
        for r in nonempty_rotations(sig.orders)
    )


def hyperelliptic_genus_one(k: int, orders, rotation: int) -> bool:
    """Whether the rotation-r component of a genus-one stratum is hyperelliptic.

    The hyperelliptic components are exactly those with order multiset
    (r, r, -r, -r), (2r, -r, -r), (-2r, r, r) or (2r, -2r).
    """
    d = _nonzero_gcd(orders)
    if rotation < 1 or d == 0 or d % rotation != 0:
        raise RotationError(f"rotation {rotation} does not divide gcd {d}")
    r = rotation
    multiset = tuple(sorted(orders))
    patterns = (
        (-r, -r, r, r),
        (-r, -r, 2 * r),
        (-2 * r, r, r),
        (-2 * r, 2 * r),
    )
    return multiset in patterns


def merge(sig: StratumSignature, rotation: int, i: int, j: int) -> GenusOneMerge:
    """Collide singularities i and j inside the rotation-r component.

    When feasible, returns the merged signature together with every
    rotation r' with r | r' | gcd of the merged orders whose component is
    nonempty.  The move is infeasible exactly when that set is empty, or
    when the merged orders are all zero (the two singularities of (a, -a)).
    """
    _require_genus_one(sig)
    n = len(sig.orders)
    if i == j or not (0 <= i < n and 0 <= j < n):
        raise SignatureError(f"bad indices ({i}, {j}) for {n} entries")
    d = gcd_orders(sig)
    if rotation < 1 or d == 0 or d % rotation != 0:
        raise RotationError(f"rotation {rotation} does not divide gcd {d}")
    merged = [o for idx, o in enumerate(sig.orders) if idx not in (i, j)]
    merged.append(sig.orders[i] + sig.orders[j])
    if not any(merged):
        return GenusOneMerge(
            False, None, (), "merging the only two singularities of (a,-a)"
        )
    result = validate(sig.k, 1, merged)
    allowed = set(nonempty_rotations(result.orders))
    d2 = _nonzero_gcd(result.orders)
    rotations = tuple(
        r2
        for r2 in sorted((d2 // e for e in divisors(d2)), reverse=True)
        if r2 % rotation == 0 and r2 in allowed
    )
    if not rotations:
        return GenusOneMerge(
            False, result, (), "every admissible boundary component is empty"
        )
    return GenusOneMerge(True, result, rotations)


def split_to_sphere(
    sig: StratumSignature, rotation: int, zero_index: int, a1: int, a2: int
) -> bool:
    """Whether splitting the chosen zero into (a1, a2) reaches genus zero.

    The split exists iff rotation divides gcd(k + a1, k + a2, other orders).
    """
    _require_genus_one(sig)
    if not 0 <= zero_index < len(sig.orders):
        raise SignatureError(f"index {zero_index} out of range")
    a = sig.orders[zero_index]
    if a <= 0:
        raise SignatureError(f"entry {a} is not a zero")
    d = gcd_orders(sig)
    if rotation < 1 or d % rotation != 0:
        raise RotationError(f"rotation {rotation} does not divide gcd {d}")
    if a1 + a2 != a - 2 * sig.k or a1 <= -sig.k or a2 <= -sig.k:
        raise SignatureError(
            f"({a1}, {a2}) is not a partition of {a} - 2k with entries > -k"
        )
    rest = [o for idx, o in enumerate(sig.orders) if idx != zero_index]
    g = math.gcd(sig.k + a1, sig.k + a2, *(abs(o) for o in rest))
    return g % rotation == 0


def default_split_witness(k: int, a: int, rotation: int) -> tuple[int, int]:
    """The canonical sphere split (r - k, a - r - k), valid whenever r != a."""
    if rotation == a:
        raise RotationError("no default witness when the rotation equals the zero order")
    return (rotation - k, a - rotation - k)
