"""Memoised Parker recursion for dim Ext^q_{SL2}(Delta(lambda), L(mu)).

The recursion peels one Frobenius twist per step.  Writing the Weyl weight
as ``p*b + c`` and the simple weight as ``mu0 + p*mu1``, the lowest digits
``(c, mu0)`` select the rule (see :func:`sl2ext.weights.digit_case`):

* same digit      -> sum over even n of Ext^{q-n}(Delta(b+n), L(mu1))
* mirrored digit  -> sum over odd n of the same terms
* both p-1        -> Ext^q(Delta(b), L(mu1))
* anything else   -> 0 (linkage)

For p = 2 the (0, 0) pair is both "same" and "mirrored", so all n are
summed.  Degree 0 is always answered by Hom(Delta(lambda), L(mu)), which is
one-dimensional exactly when lambda = mu, and Ext^q(Delta(lambda), k)
vanishes for q > 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, MutableMapping, NamedTuple, Sequence

from .errors import CapExceeded
from .golden import GoldenRow
from .weights import CaseKind, as_prime, check_weight, digit_case

__all__ = [
    "ExtQuery",
    "ExtEngine",
    "LeafStatus",
    "LeafTrace",
    "ext_dim",
    "cohomology_dim",
    "expand_trace",
    "table_self_twist",
    "table_r_twist",
    "stability_profile",
    "wall_reduce_sl3",
    "DEFAULT_TRACE_CAP",
]

DEFAULT_TRACE_CAP = 10**6


class ExtQuery(NamedTuple):
    q: int
    weyl: int
    simple: int
    p: int


MemoStore = MutableMapping[ExtQuery, int]


class ExtEngine:
    """Evaluates Ext dimensions with a private (or caller-supplied) memo.

    Evaluation uses an explicit work stack, so deep recursions (large
    weights, high degree) never touch the interpreter's recursion limit.
    A memo may be shared between engines: entries are deterministic, so
    concurrent writers only ever insert identical values.
    """

    def __init__(self, memo: MemoStore | None = None):
        self.memo: MemoStore = {} if memo is None else memo

    def __len__(self) -> int:
        return len(self.memo)

    @staticmethod
    def _expand(key: ExtQuery) -> int | list[ExtQuery]:
        """Either the value of ``key`` directly, or the summands it unfolds into."""
        q, weyl, simple, p = key
        if q == 0:
            return int(weyl == simple)
        if simple == 0:
            return 0
        b, c = divmod(weyl, p)
        mu1, mu0 = divmod(simple, p)
        case = digit_case(c, mu0, p)
        if case.kind is CaseKind.NO_MATCH:
            return 0
        if case.kind is CaseKind.STEINBERG:
            return [ExtQuery(q, b, mu1, p)]
        if p == 2:
            ns = range(q + 1)
        elif case.kind is CaseKind.SAME:
            ns = range(0, q + 1, 2)
        else:
            ns = range(1, q + 1, 2)
        return [ExtQuery(q - n, b + n, mu1, p) for n in ns]

    def evaluate(self, key: ExtQuery) -> int:
        memo = self.memo
        if key in memo:
            return memo[key]
        stack = [key]
        while stack:
            node = stack[-1]
            if node in memo:
                stack.pop()
                continue
            children = self._expand(node)
            if isinstance(children, int):
                memo[node] = children
                stack.pop()
                continue
            missing = [c for c in children if c not in memo]
            if missing:
                stack.extend(missing)
            else:
                memo[node] = sum(memo[c] for c in children)
                stack.pop()
        return memo[key]

    def ext_dim(self, q: int, weyl: int, simple: int, p: int) -> int:
        """dim Ext^q(Delta(weyl), L(simple)) in characteristic ``p``."""
        check_weight(q, "degree")
        check_weight(weyl, "weyl weight")
        check_weight(simple, "simple weight")
        return self.evaluate(ExtQuery(q, weyl, simple, as_prime(p)))

    def cohomology_dim(self, m: int, simple: int, p: int) -> int:
        """dim H^m(SL2, L(simple)) = dim Ext^m(Delta(0), L(simple))."""
        return self.ext_dim(m, 0, simple, p)


_default_engine = ExtEngine()


def ext_dim(q: int, weyl: int, simple: int, p: int, memo: MemoStore | None = None) -> int:
    engine = _default_engine if memo is None else ExtEngine(memo)
    return engine.ext_dim(q, weyl, simple, p)


def cohomology_dim(m: int, simple: int, p: int, memo: MemoStore | None = None) -> int:
    return ext_dim(m, 0, simple, p, memo)


# ---------------------------------------------------------------------------
# Exhaustive a-string traces (p = 2, no memoisation)
# ---------------------------------------------------------------------------


class LeafStatus(enum.Enum):
    FAILED = "failed"
    TRIVIAL = "trivial"
    NONTRIVIAL = "nontrivial"


@dataclass(frozen=True)
class LeafTrace:
    """One root-to-leaf path of the p = 2 expansion.

    ``a_string`` lists the degree drop chosen at each application of the
    summing rule; forced Steinberg steps add no entry.  For failed paths
    it holds the prefix reached before the branch died and ``leaf`` is
    ``None``.
    """

    a_string: tuple[int, ...]
    status: LeafStatus
    leaf: tuple[int, int] | None = None

    def padded(self, n: int) -> tuple[int, ...]:
        """The (a, n)-form: ``a_string`` right-padded with zeros to length ``n``."""
        if n < len(self.a_string):
            raise ValueError(f"a-string of length {len(self.a_string)} does not fit in {n}")
        return self.a_string + (0,) * (n - len(self.a_string))


def expand_trace(m: int, simple: int, cap: int = DEFAULT_TRACE_CAP) -> Iterator[LeafTrace]:
    """Walk every path of the expansion of Ext^m(Delta(0), L(simple)) at p = 2.

    Paths are produced lazily in depth-first order.  Raises
    :class:`CapExceeded` once more than ``cap`` paths have been produced.
    """
    check_weight(simple, "simple weight")
    if m < 1:
        raise ValueError(f"degree must be at least 1, got {m}")

    emitted = 0
    # (remaining degree, weyl weight, simple weight, a-string so far)
    stack: list[tuple[int, int, int, tuple[int, ...]]] = [(m, 0, simple, ())]
    while stack:
        q, x, y, entries = stack.pop()
        if q == 0:
            status = LeafStatus.NONTRIVIAL if x == y else LeafStatus.TRIVIAL
            trace = LeafTrace(entries, status, (x, y))
        elif y == 0 or (x - y) % 2:
            trace = LeafTrace(entries, LeafStatus.FAILED)
        elif x % 2:
            stack.append((q, x // 2, y // 2, entries))
            continue
        else:
            b, y1 = x // 2, y // 2
            # reversed so that n = 0 is explored first
            for n in range(q, -1, -1):
                stack.append((q - n, b + n, y1, entries + (n,)))
            continue
        emitted += 1
        if emitted > cap:
            raise CapExceeded(cap, "traces")
        yield trace


def nontrivial_a_strings(m: int, simple: int, cap: int = DEFAULT_TRACE_CAP) -> list[tuple[int, ...]]:
    return [t.a_string for t in expand_trace(m, simple, cap) if t.status is LeafStatus.NONTRIVIAL]


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------


def table_self_twist(m_max: int, engine: ExtEngine | None = None, m_min: int = 1) -> list[GoldenRow]:
    """Rows ``(m, 2^m, dim H^m(L(2^m)))`` at p = 2."""
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    engine = engine or ExtEngine()
    return [GoldenRow(m, 2**m, engine.cohomology_dim(m, 2**m, 2)) for m in range(m_min, m_max + 1)]


def table_r_twist(r: int, m_min: int, m_max: int, engine: ExtEngine | None = None) -> list[GoldenRow]:
    """Rows ``(m, r * 2^(m-2), dim H^m(L(r * 2^(m-2))))`` at p = 2."""
    if r < 1 or r % 2 == 0:
        raise ValueError(f"multiplier must be a positive odd integer, got {r}")
    if m_min < 2:
        raise ValueError("m_min must be at least 2 so that 2^(m-2) is integral")
    engine = engine or ExtEngine()
    rows = []
    for m in range(m_min, m_max + 1):
        w = r * 2 ** (m - 2)
        rows.append(GoldenRow(m, w, engine.cohomology_dim(m, w, 2)))
    return rows


def stability_profile(m: int, r_max: int, engine: ExtEngine | None = None) -> list[int]:
    """``[dim H^m(L(1)^[r]) for r in 0..r_max]`` at p = 2."""
    if r_max < m:
        raise ValueError(f"r_max must be at least m ({m}), got {r_max}")
    engine = engine or ExtEngine()
    return [engine.cohomology_dim(m, 2**r, 2) for r in range(r_max + 1)]


def wall_reduce_sl3(
    weyl: Sequence[int],
    simple: Sequence[int],
    q: int,
    p: int,
    engine: ExtEngine | None = None,
) -> int:
    """dim Ext^q_{SL3}(Delta(weyl), L(simple)) for weights differing by a multiple of beta.

    With beta = (-1, 2) the pairing against beta picks out the second
    coordinate, and the answer is the SL2 value
    Ext^q(Delta(2 * weyl[1]), L(2 * simple[1])).
    """
    a1, a2 = (check_weight(v, "weyl coordinate") for v in weyl)
    c1, c2 = (check_weight(v, "simple coordinate") for v in simple)
    t = a1 - c1
    if c2 - a2 != 2 * t:
        raise ValueError(
            f"({c1 - a1}, {c2 - a2}) = simple - weyl is not an integer multiple of beta = (-1, 2)"
        )
    engine = engine or ExtEngine()
    return engine.ext_dim(q, 2 * a2, 2 * c2, p)
