"""Second cohomology of simple SL2-modules for p > 3, and Ext^2 of V_n.

H^2(SL2, L(mu)) is one-dimensional when mu is a Frobenius twist of one of

    2p,   2p^2 - 2p - 2,   (2p - 2) + (2p - 2) p^e  with e > 1,

and zero otherwise.  ``V_n = L(1) (x) L(1)^[1] (x) ... (x) L(1)^[n]`` is
simple and self-dual, and V_n (x) V_n* splits into the simple summands
``(x)_{i in S} L(2)^[i]`` over subsets S of {0..n}; summing H^2 over them
gives dim Ext^2(V_n, V_n).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .engine import ExtEngine
from .weights import as_prime, check_weight, subset_tensor_weight

__all__ = [
    "H2Reason",
    "H2Witness",
    "h2_dim",
    "tower_summands",
    "ext2_self_tower",
    "h2_cross_check",
    "MAX_TOWER",
]

MAX_TOWER = 20


class H2Reason(enum.Enum):
    TWO_P = "2p"
    TWO_P_SQ_MINUS = "2p^2-2p-2"
    TWO_P_MINUS_2_FAMILY = "(2p-2)+(2p-2)p^e"
    NOT_IN_LIST = "not-in-list"


@dataclass(frozen=True)
class H2Witness:
    nonzero: bool
    reason: H2Reason
    twist: int = 0
    e: int | None = None

    def __str__(self) -> str:
        if not self.nonzero:
            return self.reason.value
        base = self.reason.value if self.e is None else self.reason.value.replace("e", str(self.e))
        return f"{base} twisted {self.twist} times"


def _require_p_above_3(p: int) -> int:
    p = as_prime(p)
    if p <= 3:
        raise ValueError(f"the H^2 classification needs p > 3, got p = {p}")
    return p


def _power_exponent(x: int, p: int) -> int | None:
    """``e`` with ``x == p**e``, or None."""
    if x < 1:
        return None
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e if x == 1 else None


def h2_dim(mu: int, p: int) -> tuple[int, H2Witness]:
    """dim H^2(SL2, L(mu)) together with the list entry that produced it."""
    p = _require_p_above_3(p)
    check_weight(mu, "simple weight")
    if mu == 0:
        return 0, H2Witness(False, H2Reason.NOT_IN_LIST)

    # mu = p^v * u with p not dividing u.  Of the three base weights only 2p
    # is divisible by p.
    v, u = 0, mu
    while u % p == 0:
        u //= p
        v += 1

    if u == 2 and v >= 1:
        return 1, H2Witness(True, H2Reason.TWO_P, v - 1)
    if u == 2 * p * p - 2 * p - 2:
        return 1, H2Witness(True, H2Reason.TWO_P_SQ_MINUS, v)
    if u % (2 * p - 2) == 0:
        e = _power_exponent(u // (2 * p - 2) - 1, p)
        if e is not None and e > 1:
            return 1, H2Witness(True, H2Reason.TWO_P_MINUS_2_FAMILY, v, e)
    return 0, H2Witness(False, H2Reason.NOT_IN_LIST)


def tower_summands(n: int, p: int) -> Iterator[tuple[frozenset[int], int, int]]:
    """Yield ``(S, weight, dim H^2)`` for each simple summand of V_n (x) V_n*."""
    p = _require_p_above_3(p)
    if not 0 <= n <= MAX_TOWER:
        raise ValueError(f"tower height must be in [0, {MAX_TOWER}], got {n}")
    for size in range(n + 2):
        for subset in combinations(range(n + 1), size):
            weight = subset_tensor_weight(subset, p)
            yield frozenset(subset), weight, h2_dim(weight, p)[0]


def ext2_self_tower(n: int, p: int) -> int:
    """dim Ext^2(V_n, V_n), summed over the 2^(n+1) summands."""
    return sum(dim for _, _, dim in tower_summands(n, p))


def h2_cross_check(p: int, mu_max: int, engine: ExtEngine | None = None) -> list[tuple[int, int, int]]:
    """Weights ``mu <= mu_max`` where the classification and the recursion differ.

    Each disagreement is reported as ``(mu, classified, recursed)``.
    """
    p = _require_p_above_3(p)
    engine = engine or ExtEngine()
    bad = []
    for mu in range(mu_max + 1):
        classified = h2_dim(mu, p)[0]
        recursed = engine.cohomology_dim(2, mu, p)
        if classified != recursed:
            bad.append((mu, classified, recursed))
    return bad
