"""Signature-level splits and merges, cylinder criteria, degeneration tables.

A split breaks a zero of order z on a genus-g surface into singularities
a + b = z - 2k (both > -k) on a genus g-1 surface; a merge collides two
singularities on the same surface.  Genus-zero cylinder existence reduces
to exact subset sums of the order multiset.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import SignatureError
from .signature import StratumSignature, validate

_NO_SIMPLE_DEGENERATION = frozenset({(2, 2, (5, -1)), (3, 2, (6,))})

_EXCEPTIONAL_STRATA = frozenset(
    [(1, 3, p) for p in ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))]
    + [
        (1, 3, tuple(sorted(core + extra, reverse=True)))
        for core in ((6,), (4, 2), (2, 2, 2))
        for extra in ((-2,), (-1, -1))
    ]
    + [(2, 3, (9, -1)), (2, 3, (6, 3, -1)), (2, 3, (3, 3, 3, -1))]
    + [(3, 3, (12,)), (3, 3, (8, 4)), (3, 3, (4, 4, 4))]
    + [(1, 4, (6,)), (1, 4, (4, 2)), (1, 4, (2, 2, 2))]
)


@dataclass(frozen=True)
class DegenerationMove:
    kind: str  # "split" or "merge"
    source: StratumSignature
    result: StratumSignature | None
    feasible: bool
    reason: str = ""


def enumerate_zero_splits(k: int, z: int) -> tuple[tuple[int, int], ...]:
    """All unordered pairs (a, b) with a + b = z - 2k and a, b > -k.

    Pairs containing 0 produce marked points on the split surface.
    """
    if z < 2:
        raise SignatureError(f"can only split a zero of order >= 2, got {z}")
    total = z - 2 * k
    return tuple((a, total - a) for a in range(1 - k, total // 2 + 1))


def split_result(sig: StratumSignature, zero_index: int, a: int, b: int) -> StratumSignature:
    """Signature after splitting the chosen zero into orders a and b."""
    if sig.genus < 1:
        raise SignatureError("splitting a zero lowers genus, need genus >= 1")
    if not 0 <= zero_index < len(sig.orders):
        raise SignatureError(f"index {zero_index} out of range")
    z = sig.orders[zero_index]
    if z < 2:
        raise SignatureError(f"entry {z} is not a splittable zero")
    if (min(a, b), max(a, b)) not in enumerate_zero_splits(sig.k, z):
        raise SignatureError(f"({a}, {b}) is not a valid split of {z}")
    rest = [o for idx, o in enumerate(sig.orders) if idx != zero_index]
    return validate(sig.k, sig.genus - 1, rest + [a, b])


def merge_result(sig: StratumSignature, i: int, j: int) -> StratumSignature:
    """Signature after colliding entries i and j (same genus; 0 allowed)."""
    n = len(sig.orders)
    if i == j or not (0 <= i < n and 0 <= j < n):
        raise SignatureError(f"bad indices ({i}, {j}) for {n} entries")
    rest = [o for idx, o in enumerate(sig.orders) if idx not in (i, j)]
    return validate(sig.k, sig.genus, rest + [sig.orders[i] + sig.orders[j]])


def undo_split(sig: StratumSignature, i: int, j: int) -> StratumSignature:
    """Fuse the two entries created by a split back into one zero.

    Inverse of split_result: the entries rejoin as a + b + 2k and the genus
    rises by one.
    """
    n = len(sig.orders)
    if i == j or not (0 <= i < n and 0 <= j < n):
        raise SignatureError(f"bad indices ({i}, {j}) for {n} entries")
    rest = [o for idx, o in enumerate(sig.orders) if idx not in (i, j)]
    fused = sig.orders[i] + sig.orders[j] + 2 * sig.k
    return validate(sig.k, sig.genus + 1, rest + [fused])


def split_move(sig: StratumSignature, zero_index: int, a: int, b: int) -> DegenerationMove:
    try:
        result = split_result(sig, zero_index, a, b)
    except SignatureError as exc:
        return DegenerationMove("split", sig, None, False, str(exc))
    return DegenerationMove("split", sig, result, True)


def merge_move(sig: StratumSignature, i: int, j: int) -> DegenerationMove:
    try:
        result = merge_result(sig, i, j)
    except SignatureError as exc:
        return DegenerationMove("merge", sig, None, False, str(exc))
    return DegenerationMove("merge", sig, result, True)


def merge_feasible_same_sign(sig: StratumSignature, i: int, j: int):
    """Whether entries i and j can be simply merged, for same-sign pairs.

    In a primitive nonhyperelliptic component (the caller's responsibility)
    any two zeros and any two poles merge; mixed-sign or marked-point pairs
    are outside that statement, reported as None (unknown) rather than False.
    """
    if sig.genus < 1:
        raise SignatureError("same-sign merging requires positive genus")
    n = len(sig.orders)
    if i == j or not (0 <= i < n and 0 <= j < n):
        raise SignatureError(f"bad indices ({i}, {j}) for {n} entries")
    oi, oj = sig.orders[i], sig.orders[j]
    if (oi > 0 and oj > 0) or (oi < 0 and oj < 0):
        return True
    return None


def simple_degeneration_exists(sig: StratumSignature) -> bool:
    """Whether a primitive nonhyperelliptic component admits a simple split
    or merge preserving nonhyperellipticity.

    True for every genus >= 2 stratum except (k, g, orders) equal to
    (2, 2, (5, -1)) or (3, 2, (6)).
    """
    if sig.genus < 2:
        raise SignatureError("simple degenerations are tabulated for genus >= 2")
    return (sig.k, sig.genus, sig.orders) not in _NO_SIMPLE_DEGENERATION


def is_exceptional_stratum(sig: StratumSignature) -> bool:
    """Whether splits out of this genus >= 3 stratum may become hyperelliptic."""
    if sig.genus < 3:
        raise SignatureError("exceptional strata are tabulated for genus >= 3")
    return (sig.k, sig.genus, sig.orders) in _EXCEPTIONAL_STRATA


def _check_genus_zero(k: int, orders) -> tuple[int, ...]:
    orders = tuple(int(o) for o in orders)
    if sum(orders) != -2 * k:
        raise SignatureError(
            f"orders {orders} sum to {sum(orders)}, expected -2k = {-2 * k}"
        )
    return orders


def genus0_has_cylinder(k: int, orders) -> bool:
    """Whether the genus-zero stratum contains a Euclidean cylinder.

    Holds iff some nonempty proper sub-multiset of the orders sums to -k.
    Reachable (sum, size) pairs are accumulated value by value, which is
    exhaustive over sub-multisets.
    """
    orders = _check_genus_zero(k, orders)
    n = len(orders)
    states = {(0, 0)}
    for value, mult in sorted(Counter(orders).items()):
        states = {
            (s + value * c, size + c)
            for (s, size) in states
            for c in range(mult + 1)
        }
    return any(s == -k and 0 < size < n for s, size in states)


def genus0_has_simple_cylinder(k: int, orders) -> bool:
    """Whether the genus-zero stratum contains a simple Euclidean cylinder.

    Requires a partition into two sub-multisets summing to -k with neither
    equal to (-k/2, -k/2); for odd k the latter constraint is vacuous.
    """
    orders = _check_genus_zero(k, orders)
    if k % 2 == 1:
        return genus0_has_cylinder(k, orders)
    half = -(k // 2)
    mult_half = orders.count(half)
    n = len(orders)
    states = {(0, 0, 0)}  # (sum, size, copies of -k/2 used)
    for value, mult in sorted(Counter(orders).items()):
        bump = 1 if value == half else 0
        states = {
            (s + value * c, size + c, used + bump * c)
            for (s, size, used) in states
            for c in range(mult + 1)
        }
    for s, size, used in states:
        if s != -k or not 0 < size < n:
            continue
        side_bad = size == 2 and used == 2
        complement_bad = (
            size == n - 2
            and used == mult_half - 2
            and size - used == n - mult_half
        )
        if not side_bad and not complement_bad:
            return True
    return False
