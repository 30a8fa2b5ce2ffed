"""Generalized inverse limits (Mahavier products) over finite total orders.

A thread of length m for a relation f is a tuple (x_0, ..., x_{m-1}) whose
later coordinates map onto the earlier ones: for every l < l' the pair
(x_{l'}, x_l) lies in f, i.e. x_l is a successor of x_{l'}.  The set of all
threads is the finite analogue of the inverse limit of f over the chain
0 < 1 < ... < m-1.

Two constructions are provided: a brute-force filter of all n**m tuples
(the oracle, capped) and a streaming left-to-right propagation that only
ever extends feasible prefixes.  With this orientation the threads of the
canonical gamma relation on two points are exactly the indicator tuples of
down-sets of the chain: m+1 of them, totally ordered coordinatewise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .core import Relation, iter_bits

NAIVE_TUPLE_CAP = 1 << 20

Thread = tuple[int, ...]


@dataclass(frozen=True)
class ThreadSet:
    """All threads of one relation over a chain of length m, sorted lex."""

    m: int
    n: int
    threads: tuple[Thread, ...]

    def __len__(self) -> int:
        return len(self.threads)


@dataclass(frozen=True)
class OrderProfile:
    is_coordinatewise_chain: bool
    count: int


def gamma_relation() -> Relation:
    """The canonical nontrivial idempotent relation {(0,0), (0,1), (1,1)}."""
    return Relation(2, (0b11, 0b10))


def _thread_ok(f: Relation, tup: Thread, adjacent_only: bool) -> bool:
    if adjacent_only:
        return all(f.has(tup[l + 1], tup[l]) for l in range(len(tup) - 1))
    return all(
        f.has(tup[later], tup[earlier])
        for later in range(1, len(tup))
        for earlier in range(later)
    )


def threads_naive(f: Relation, m: int, adjacent_only: bool = False) -> ThreadSet:
    """Filter all n**m coordinate tuples by the thread condition."""
    if m < 1:
        raise ValueError("chain length must be positive")
    if f.n ** m > NAIVE_TUPLE_CAP:
        raise ValueError(
            f"{f.n}**{m} tuples exceed the brute-force cap {NAIVE_TUPLE_CAP}"
        )
    threads = tuple(
        tup for tup in itertools.product(range(f.n), repeat=m)
        if _thread_ok(f, tup, adjacent_only)
    )
    return ThreadSet(m=m, n=f.n, threads=threads)


def iter_threads(f: Relation, m: int, adjacent_only: bool = False) -> Iterator[Thread]:
    """Stream the threads of f over a chain of length m in lexicographic order.

    A prefix is summarised by the set of coordinates placed so far (the
    next value v must satisfy f(v) containing all of them), or by the last
    coordinate alone in adjacent-only mode.  Prefix states that cannot be
    extended to full length are pruned via a memoised feasibility check, so
    output size, not search-space size, bounds the work.
    """
    if m < 1:
        raise ValueError("chain length must be positive")
    n, rows = f.n, f.rows

    if adjacent_only:
        # valid successors of a prefix depend only on its last coordinate
        inv_rows = [0] * n
        for x, row in enumerate(rows):
            for y in iter_bits(row):
                inv_rows[y] |= 1 << x

        feasible: dict[tuple[int, int], bool] = {}

        def can_finish(last: int, remaining: int) -> bool:
            if remaining == 0:
                return True
            key = (last, remaining)
            if key not in feasible:
                feasible[key] = any(
                    can_finish(v, remaining - 1) for v in iter_bits(inv_rows[last])
                )
            return feasible[key]

        def walk(prefix: list[int]) -> Iterator[Thread]:
            if len(prefix) == m:
                yield tuple(prefix)
                return
            last = prefix[-1]
            for v in iter_bits(inv_rows[last]):
                if can_finish(v, m - len(prefix) - 1):
                    prefix.append(v)
                    yield from walk(prefix)
                    prefix.pop()

        for v0 in range(n):
            if can_finish(v0, m - 1):
                yield from walk([v0])
        return

    memo: dict[tuple[int, int], bool] = {}

    def extendable(placed: int, remaining: int) -> bool:
        if remaining == 0:
            return True
        key = (placed, remaining)
        if key not in memo:
            memo[key] = any(
                rows[v] & placed == placed and extendable(placed | (1 << v), remaining - 1)
                for v in range(n)
            )
        return memo[key]

    def walk_all(prefix: list[int], placed: int) -> Iterator[Thread]:
        if len(prefix) == m:
            yield tuple(prefix)
            return
        for v in range(n):
            if rows[v] & placed == placed and extendable(placed | (1 << v), m - len(prefix) - 1):
                prefix.append(v)
                yield from walk_all(prefix, placed | (1 << v))
                prefix.pop()

    yield from walk_all([], 0)


def threads_propagate(f: Relation, m: int, adjacent_only: bool = False) -> ThreadSet:
    """Same thread set as ``threads_naive`` but built by propagation."""
    return ThreadSet(m=m, n=f.n, threads=tuple(iter_threads(f, m, adjacent_only)))


def thread_order_profile(ts: ThreadSet) -> OrderProfile:
    """Whether the thread set is totally ordered coordinatewise, and its size.

    Coordinatewise order refines lexicographic order, so the set is a chain
    exactly when every lex-consecutive pair is comparable.
    """
    threads = sorted(ts.threads)
    for a, b in zip(threads, threads[1:]):
        if not all(ai <= bi for ai, bi in zip(a, b)):
            return OrderProfile(is_coordinatewise_chain=False, count=len(threads))
    return OrderProfile(is_coordinatewise_chain=True, count=len(threads))
