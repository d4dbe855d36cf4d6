"""b-strings, c-strings and partitions of 1 into powers of 1/2.

At p = 2 the non-trivial a-strings for L(2^n) are in bijection with
b-strings, and for L(2^m) in degree m their number equals both the number
of c-strings of length m - 1 and the number of partitions of 1 into m
powers of 1/2.  The two counting routines below are written independently
so that each can serve as an oracle for the other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .errors import CapExceeded

__all__ = [
    "BString",
    "enumerate_b_strings",
    "is_c_string",
    "enumerate_c_strings",
    "count_c_strings",
    "partitions_of_unity",
    "doubling_family",
    "fibonacci",
    "GrowthReport",
    "growth_bounds",
    "DEFAULT_CAP",
]

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class BString:
    entries: tuple[int, ...]
    m: int

    def __post_init__(self) -> None:
        b = (0,) + self.entries
        n = len(self.entries)
        if n < 1 or any(x < 0 for x in self.entries):
            raise ValueError(f"invalid b-string entries {self.entries}")
        if any(2 * b[i] < b[i - 1] for i in range(1, n)):
            raise ValueError(f"{self.entries} violates 2*b_i >= b_(i-1)")
        if b[n - 1] + b[n] != 1:
            raise ValueError(f"{self.entries} violates b_(n-1) + b_n = 1")
        if sum(b[1:n]) != self.m - 1:
            raise ValueError(f"{self.entries} violates sum(b_1..b_(n-1)) = m - 1 = {self.m - 1}")

    @property
    def padded_a_string(self) -> tuple[int, ...]:
        b = (0,) + self.entries
        n = len(self.entries)
        return tuple(2 * b[i] - b[i - 1] for i in range(1, n)) + (b[n],)

    @property
    def a_string(self) -> tuple[int, ...]:
        """The canonical a-string (trailing zeros stripped)."""
        a = list(self.padded_a_string)
        while a and a[-1] == 0:
            a.pop()
        return tuple(a)


def enumerate_b_strings(m: int, n: int, cap: int = DEFAULT_CAP) -> Iterator[BString]:
    """Yield every b-string of length ``n`` for degree ``m``.

    The constraints are 2*b_i >= b_(i-1) for i < n (with b_0 = 0),
    b_(n-1) + b_n = 1 and b_1 + ... + b_(n-1) = m - 1.
    """
    if m < 1 or n < 1:
        raise ValueError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    target = m - 1
    emitted = 0

    def emit(entries: tuple[int, ...]) -> BString:
        nonlocal emitted
        emitted += 1
        if emitted > cap:
            raise CapExceeded(cap, "b-strings")
        return BString(entries, m)

    if n == 1:
        # b_0 + b_1 = 1 forces b_1 = 1; the sum over b_1..b_0 is empty.
        if target == 0:
            yield emit((1,))
        return

    # Choose b_1 .. b_(n-1) depth first, then b_n = 1 - b_(n-1).
    stack: list[tuple[int, ...]] = [()]
    while stack:
        prefix = stack.pop()
        used = sum(prefix)
        if len(prefix) == n - 1:
            if used == target and prefix[-1] <= 1:
                yield emit(prefix + (1 - prefix[-1],))
            continue
        prev = prefix[-1] if prefix else 0
        low = (prev + 1) // 2
        last = len(prefix) == n - 2
        high = target - used
        if last:
            # b_(n-1) must be 0 or 1 and must use up the remaining sum
            candidates = [high] if high <= 1 and high >= low else []
        else:
            candidates = range(high, low - 1, -1)
        for v in candidates:
            stack.append(prefix + (v,))


def is_c_string(c: tuple[int, ...] | list[int]) -> bool:
    """c_1 = 1, c_i <= 2 c_(i-1), entries non-negative, sum equal to the length."""
    if not c or c[0] != 1 or any(x < 0 for x in c):
        return False
    if any(c[i] > 2 * c[i - 1] for i in range(1, len(c))):
        return False
    return sum(c) == len(c)


def enumerate_c_strings(k: int, cap: int = DEFAULT_CAP) -> Iterator[tuple[int, ...]]:
    """Brute-force generator of all c-strings of length ``k``."""
    if k < 1:
        raise ValueError("length must be at least 1")
    emitted = 0
    stack: list[tuple[int, ...]] = [(1,)]
    while stack:
        prefix = stack.pop()
        rem = k - sum(prefix)
        if len(prefix) == k:
            if rem == 0:
                emitted += 1
                if emitted > cap:
                    raise CapExceeded(cap, "c-strings")
                yield prefix
            continue
        for v in range(min(2 * prefix[-1], rem), -1, -1):
            stack.append(prefix + (v,))


def count_c_strings(k: int) -> int:
    """Number of c-strings of length ``k``.

    Table ``ways[last][rem]`` counts completions of the remaining
    positions given the previous entry and the sum still to place.
    """
    if k < 1:
        raise ValueError("length must be at least 1")
    # After c_1 = 1 there are k - 1 positions sharing a sum of k - 1, so
    # every later entry and every remainder is below k.
    size = max(k, 2)
    ways = [[1 if rem == 0 else 0 for rem in range(size)] for _ in range(size)]
    for _ in range(k - 1):
        # diag[rem][t] = sum of ways[v][rem - v] for v <= t
        diag = []
        for rem in range(size):
            acc, running = 0, []
            for v in range(rem + 1):
                acc += ways[v][rem - v]
                running.append(acc)
            diag.append(running)
        ways = [[diag[rem][min(2 * last, rem)] for rem in range(size)] for last in range(size)]
    return ways[1][k - 1]


def partitions_of_unity(m: int) -> int:
    """Number of multisets of ``m`` powers of 1/2 that sum to 1.

    Descend level by level: with ``open_`` copies of 2^-j still to be
    resolved, keep some as parts and halve the rest.  ``finish(r, s)``
    counts the ways to finish with ``r`` parts still to place and ``s``
    open pieces at the current level.
    """
    if m < 1:
        raise ValueError("part count must be at least 1")
    memo: dict[tuple[int, int], int] = {}

    def finish(parts_left: int, open_: int) -> int:
        if open_ == 0:
            return int(parts_left == 0)
        if open_ > parts_left:
            return 0
        key = (parts_left, open_)
        if key not in memo:
            memo[key] = sum(
                finish(parts_left - keep, 2 * (open_ - keep)) for keep in range(open_ + 1)
            )
        return memo[key]

    # recursion depth is bounded by the number of levels, at most m
    return finish(m, 1)


def doubling_family(t: int) -> set[tuple[int, ...]]:
    """Explicit family of 2^t c-strings of length 2t + 1.

    Start from ``1, 2 (t times), 0 (t times)``; for each subset of the 2s,
    replace every chosen 2 by ``1, 1`` and drop one trailing 0 per
    replacement.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    family = set()
    for size in range(t + 1):
        for chosen in combinations(range(t), size):
            body: list[int] = [1]
            for i in range(t):
                body.extend((1, 1) if i in chosen else (2,))
            body.extend([0] * (t - size))
            family.add(tuple(body))
    return family


def fibonacci(n: int) -> int:
    """Fibonacci numbers with fib(1) = fib(2) = 1 and fib(0) = 0."""
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@dataclass
class GrowthReport:
    k_max: int
    counts: dict[int, int] = field(default_factory=dict)
    upper_ok: dict[int, bool] = field(default_factory=dict)
    lower_ok: dict[int, bool] = field(default_factory=dict)
    # approximate: count(k+1) / count(k)
    ratios: dict[int, float] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.upper_ok.values()) and all(self.lower_ok.values())


def growth_bounds(k_max: int) -> GrowthReport:
    """Check fib(k-1) <= count_c_strings(k) <= 2^(k-1) for k = 4..k_max.

    Also records the successive ratios, whose limit is roughly 1.794.
    """
    if k_max < 4:
        raise ValueError("k_max must be at least 4")
    report = GrowthReport(k_max)
    for k in range(4, k_max + 2):
        report.counts[k] = count_c_strings(k)
    for k in range(4, k_max + 1):
        c = report.counts[k]
        report.upper_ok[k] = c <= 2 ** (k - 1)
        report.lower_ok[k] = c >= fibonacci(k - 1)
        report.ratios[k] = report.counts[k + 1] / c
    return report
