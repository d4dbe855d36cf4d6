"""Dominant-weight arithmetic for SL2 in characteristic p.

Dominant weights of SL2 are non-negative integers.  This module handles
their base-p expansions (Steinberg factorisation of simple modules), the
split of a simple highest weight into restricted and twisted parts, and
the digit comparison that decides which Parker recursion applies.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from sympy import isprime

__all__ = [
    "Characteristic",
    "DigitExpansion",
    "CaseKind",
    "DigitCase",
    "as_prime",
    "check_weight",
    "p_adic_digits",
    "steinberg_factors",
    "split_simple",
    "digit_case",
    "subset_tensor_weight",
]


@lru_cache(maxsize=None)
def _checked_prime(p: int) -> int:
    if isinstance(p, bool) or not isinstance(p, int):
        raise TypeError(f"characteristic must be an int, got {type(p).__name__}")
    if p < 2 or not isprime(p):
        raise ValueError(f"characteristic must be a prime, got {p}")
    return p


@dataclass(frozen=True)
class Characteristic:
    """A prime characteristic; construction fails for non-primes."""

    p: int

    def __post_init__(self) -> None:
        _checked_prime(self.p)

    def __int__(self) -> int:
        return self.p


def as_prime(p: int | Characteristic) -> int:
    """Return ``p`` as a plain int after checking it is prime."""
    if isinstance(p, Characteristic):
        return p.p
    return _checked_prime(p)


def check_weight(w: int, name: str = "weight") -> int:
    if isinstance(w, bool) or not isinstance(w, int):
        raise TypeError(f"{name} must be an int, got {type(w).__name__}")
    if w < 0:
        raise ValueError(f"{name} must be non-negative, got {w}")
    return w


@dataclass(frozen=True)
class DigitExpansion:
    """Base-p digits of a weight, least significant first, no trailing zeros."""

    digits: tuple[int, ...]
    p: int

    def __post_init__(self) -> None:
        if self.digits and self.digits[-1] == 0:
            raise ValueError("digit expansion must not end in a zero digit")
        if any(not 0 <= d < self.p for d in self.digits):
            raise ValueError(f"digits must lie in [0, {self.p - 1}]")

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __getitem__(self, i: int) -> int:
        return self.digits[i]

    @property
    def value(self) -> int:
        total = 0
        for d in reversed(self.digits):
            total = total * self.p + d
        return total

    def restricted(self) -> tuple[bool, ...]:
        """Per-digit membership of the restricted region (always true)."""
        return tuple(0 <= d < self.p for d in self.digits)


def p_adic_digits(w: int, p: int | Characteristic) -> DigitExpansion:
    """Canonical base-p expansion of ``w``; empty for ``w = 0``.

    >>> p_adic_digits(38, 5).digits
    (3, 2, 1)
    """
    p = as_prime(p)
    w = check_weight(w)
    digits = []
    while w:
        w, d = divmod(w, p)
        digits.append(d)
    return DigitExpansion(tuple(digits), p)


def steinberg_factors(w: int, p: int | Characteristic) -> list[int]:
    """Restricted weights ``d_i`` with L(w) = L(d_0) (x) L(d_1)^[1] (x) ...

    Digit ``i`` is the highest weight of the factor twisted ``i`` times.
    """
    return list(p_adic_digits(w, p).digits)


def split_simple(mu: int, p: int | Characteristic) -> tuple[int, int]:
    """Split ``mu = mu0 + p * mu1`` so that L(mu) = L(mu0) (x) L(mu1)^[1]."""
    p = as_prime(p)
    mu1, mu0 = divmod(check_weight(mu, "simple weight"), p)
    return mu0, mu1


class CaseKind(enum.Enum):
    SAME = "same"
    MIRROR = "mirror"
    STEINBERG = "steinberg"
    NO_MATCH = "no-match"


class DigitCase(NamedTuple):
    """Outcome of comparing a Weyl digit with a simple digit.

    ``digit`` is the shared restricted digit ``i`` for SAME and MIRROR and
    ``None`` otherwise.
    """

    kind: CaseKind
    digit: int | None = None


def digit_case(weyl_digit: int, simple_digit: int, p: int | Characteristic) -> DigitCase:
    """Classify the pair of lowest digits of a Weyl weight and a simple weight.

    For ``p = 2`` the pair ``(0, 0)`` satisfies both the SAME and MIRROR
    conditions; it is reported as ``SAME`` and the engine sums over all
    ``n`` in that case.
    """
    p = as_prime(p)
    for d, label in ((weyl_digit, "weyl digit"), (simple_digit, "simple digit")):
        if isinstance(d, bool) or not isinstance(d, int) or not 0 <= d < p:
            raise ValueError(f"{label} must be an integer in [0, {p - 1}], got {d!r}")
    if weyl_digit == simple_digit == p - 1:
        return DigitCase(CaseKind.STEINBERG)
    if weyl_digit <= p - 2:
        if simple_digit == weyl_digit:
            return DigitCase(CaseKind.SAME, weyl_digit)
        if simple_digit == p - 2 - weyl_digit:
            return DigitCase(CaseKind.MIRROR, weyl_digit)
    return DigitCase(CaseKind.NO_MATCH)


def subset_tensor_weight(twists: Iterable[int], p: int | Characteristic) -> int:
    """Highest weight of the tensor product of L(2)^[i] over ``i`` in ``twists``."""
    p = as_prime(p)
    if p < 3:
        raise ValueError("tensor-summand weights need p > 2 so that L(2) is restricted")
    twists = set(twists)
    if any(i < 0 for i in twists):
        raise ValueError("twist indices must be non-negative")
    return sum(2 * p**i for i in twists)
