"""Exhaustive enumeration and the equivalence census.

``survey`` scans every full relation on n points and, for each idempotent
one, cross-checks the whole cluster of equivalences: trivial exactly when
no gamma pattern exists exactly when no two-point pattern exists; the
constructive pipeline succeeds and validates on every nontrivial one;
trivial surjective relations are the identity; and squaring commutes with
inversion.  Any violation is recorded as a counterexample, so an empty
counterexample list over the full scan is the certificate the census
exists to produce.

The n=5 space holds 31**5 = 28,629,151 candidates, too many for a pure
Python inner loop.  Idempotence is therefore prefiltered with a vectorised
numpy kernel over partitions that fix row 0; only the survivors (a few
thousand per partition) reach the per-relation Python checks.  The kernel
is pinned to the packed-row semantics by exhaustive agreement tests at
small n.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from random import Random
from typing import Iterator

import numpy as np

from .core import (
    Relation,
    compose,
    inverse,
    is_idempotent,
    iter_bits,
    nontriviality_witness,
    satisfies_gamma,
    two_point_witness,
)
from .io import relation_to_document
from .witness import gamma_witness

ENUM_CAP = 5
SURVEY_ALL_CAP = 5
SURVEY_ISO_CAP = 4
CANONICAL_CAP = 8


def full_relations(n: int) -> Iterator[Relation]:
    """Every full relation on n points, in odometer order over rows.

    Each row independently ranges over the nonempty subsets 1..2^n-1, row 0
    most significant, so exactly (2^n - 1)^n relations stream out.
    """
    if not 1 <= n <= ENUM_CAP:
        raise ValueError(f"carrier size {n} outside 1..{ENUM_CAP}")
    for rows in itertools.product(range(1, 1 << n), repeat=n):
        yield Relation(n, rows)


def idempotent_relations(n: int) -> Iterator[Relation]:
    """The idempotent subsequence of ``full_relations(n)``."""
    for f in full_relations(n):
        if is_idempotent(f):
            yield f


def canonical_form(f: Relation) -> Relation:
    """Least relabeling of f over all carrier permutations.

    The order is row-wise lexicographic on the packed rows, so equal
    canonical forms characterise isomorphic relations.  Brute force over
    n! permutations; fine for the census caps.
    """
    n = f.n
    if n > CANONICAL_CAP:
        raise ValueError(f"carrier size {n} above the permutation cap {CANONICAL_CAP}")
    rows = f.rows
    best = rows
    for perm in itertools.permutations(range(n)):
        out = [0] * n
        for x, row in enumerate(rows):
            acc = 0
            for y in iter_bits(row):
                acc |= 1 << perm[y]
            out[perm[x]] = acc
        cand = tuple(out)
        if cand < best:
            best = cand
    return Relation(n, best)


def random_full_relation(n: int, rng: Random) -> Relation:
    """Uniform random full relation: each row a uniform nonempty subset."""
    return Relation(n, tuple(rng.randrange(1, 1 << n) for _ in range(n)))


def idempotent_power(f: Relation) -> Relation:
    """The unique idempotent among the compositional powers of f.

    The powers f, f^2, f^3, ... are eventually periodic; on the cycle the
    power with exponent divisible by the period is idempotent.  Fullness is
    preserved, so this doubles as a sampler of idempotent full relations.
    """
    seen: dict[tuple[int, ...], int] = {}
    powers = [f]
    g = f
    k = 1
    while g.rows not in seen:
        seen[g.rows] = k
        g = compose(g, f)
        powers.append(g)
        k += 1
    start = seen[g.rows]
    period = k - start
    m = period * ((start + period - 1) // period)
    return powers[m - 1]


def random_idempotent(n: int, rng: Random) -> Relation:
    """Random idempotent full relation on n points."""
    return idempotent_power(random_full_relation(n, rng))


@dataclass(frozen=True)
class SurveyReport:
    """Aggregated result of one exhaustive scan.

    ``counterexamples`` holds serialized relations that violated any checked
    equivalence, with the reason; the census claim is precisely that it is
    empty.  In ``up_to_iso`` mode the counts are per isomorphism class
    (canonical representatives only).
    """

    n: int
    mode: str
    full: int
    idempotent_full: int
    nontrivial_idempotent: int
    trivial_idempotent: int
    gamma_idempotent: int
    surjective_idempotent: int
    identity_count: int
    counterexamples: tuple[dict, ...]
    elapsed: float

    def __post_init__(self) -> None:
        if self.idempotent_full != self.nontrivial_idempotent + self.trivial_idempotent:
            raise AssertionError("idempotent count does not split into trivial + nontrivial")


@dataclass
class _Tally:
    full: int = 0
    idempotent_full: int = 0
    nontrivial_idempotent: int = 0
    trivial_idempotent: int = 0
    gamma_idempotent: int = 0
    surjective_idempotent: int = 0
    identity_count: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    def merge(self, other: "_Tally") -> None:
        self.full += other.full
        self.idempotent_full += other.idempotent_full
        self.nontrivial_idempotent += other.nontrivial_idempotent
        self.trivial_idempotent += other.trivial_idempotent
        self.gamma_idempotent += other.gamma_idempotent
        self.surjective_idempotent += other.surjective_idempotent
        self.identity_count += other.identity_count
        self.counterexamples.extend(other.counterexamples)


def _flag(tally: _Tally, n: int, rows: tuple[int, ...], reason: str) -> None:
    doc = relation_to_document(Relation(n, rows))
    doc["reason"] = reason
    tally.counterexamples.append(doc)


def _check_idempotent(n: int, rows: tuple[int, ...], tally: _Tally) -> None:
    """Run every per-relation census check on one idempotent full relation."""
    f = Relation(n, rows)
    tally.idempotent_full += 1

    nt = nontriviality_witness(f)
    gam = satisfies_gamma(f)
    two = two_point_witness(f)
    trivial = nt is None

    if gam is not None:
        tally.gamma_idempotent += 1
    if trivial:
        tally.trivial_idempotent += 1
    else:
        tally.nontrivial_idempotent += 1

    # the three-way equivalence for idempotent full relations
    if (gam is None) != trivial or (two is None) != trivial:
        _flag(tally, n, rows, "trivial / gamma / two-point disagreement")

    if not trivial:
        try:
            gw = gamma_witness(f)
        except Exception as exc:  # any failure here is exactly what we scan for
            _flag(tally, n, rows, f"gamma pipeline failed: {exc}")
        else:
            u, v = gw.pair
            ok = u != v and f.has(u, u) and f.has(u, v) and f.has(v, v)
            ok = ok and len(gw.reflexive_stage.chain) <= n
            ok = ok and len(gw.extension_stage.chain) <= n
            if not ok:
                _flag(tally, n, rows, "gamma pipeline returned an invalid witness")

    union = 0
    for row in rows:
        union |= row
    surjective = union == (1 << n) - 1
    if surjective:
        tally.surjective_idempotent += 1

    ident = all(rows[x] == 1 << x for x in range(n))
    if ident:
        tally.identity_count += 1
    if trivial and surjective and not ident:
        _flag(tally, n, rows, "trivial idempotent surjection differs from the identity")

    inv = inverse(f)
    if compose(inv, inv).rows != inverse(compose(f, f)).rows:
        _flag(tally, n, rows, "squaring does not commute with inversion")


def _idempotent_rows_in_partition(n: int, r0: int) -> list[tuple[int, ...]]:
    """All idempotent row tuples with the given row 0, in odometer order.

    Vectorised over the (2^n - 1)^(n-1) choices of the remaining rows: for
    each point x the union of rows selected by row x must reproduce row x.
    """
    if n == 1:
        return [(r0,)] if r0 == 1 else []
    vals = np.arange(1, 1 << n, dtype=np.uint8)
    grids = np.meshgrid(*([vals] * (n - 1)), indexing="ij")
    mats = [g.reshape(-1) for g in grids]
    size = mats[0].size
    ok = np.ones(size, dtype=bool)
    zero = np.uint8(0)
    for x in range(n):
        rx = mats[x - 1] if x else None
        union = np.zeros(size, dtype=np.uint8)
        for k in range(n):
            source = np.uint8(r0) if k == 0 else mats[k - 1]
            if rx is None:
                if (r0 >> k) & 1:
                    union |= source
            else:
                union |= np.where((rx >> k) & 1 != 0, source, zero)
        ok &= union == (np.uint8(r0) if rx is None else rx)
    out = []
    for i in np.flatnonzero(ok):
        out.append((r0,) + tuple(int(m[i]) for m in mats))
    return out


def _scan_partition_all(n: int, r0: int) -> _Tally:
    tally = _Tally()
    tally.full = ((1 << n) - 1) ** (n - 1)  # every candidate in the partition is full
    for rows in _idempotent_rows_in_partition(n, r0):
        _check_idempotent(n, rows, tally)
    return tally


def _is_canonical(n: int, rows: tuple[int, ...]) -> bool:
    for perm in itertools.permutations(range(n)):
        out = [0] * n
        for x, row in enumerate(rows):
            acc = 0
            for y in iter_bits(row):
                acc |= 1 << perm[y]
            out[perm[x]] = acc
        if tuple(out) < rows:
            return False
    return True


def _scan_partition_iso(n: int, r0: int) -> _Tally:
    tally = _Tally()
    for rest in itertools.product(range(1, 1 << n), repeat=n - 1):
        rows = (r0,) + rest
        if not _is_canonical(n, rows):
            continue
        tally.full += 1
        f = Relation(n, rows)
        if is_idempotent(f):
            _check_idempotent(n, rows, tally)
    return tally


def survey(n: int, mode: str = "all", workers: int = 1) -> SurveyReport:
    """Scan every full relation on n points and certify the equivalences.

    ``mode="all"`` visits all (2^n - 1)^n full relations (capped at n=5);
    ``mode="up_to_iso"`` visits canonical representatives only (capped at
    n=4, since each candidate pays an n! canonicity test).  Partitions are
    split by the value of row 0 and merged in a fixed order, so the report
    is identical for every worker count.
    """
    if mode not in ("all", "up_to_iso"):
        raise ValueError(f"unknown survey mode {mode!r}")
    cap = SURVEY_ALL_CAP if mode == "all" else SURVEY_ISO_CAP
    if not 1 <= n <= cap:
        raise ValueError(
            f"carrier size {n} outside 1..{cap} for mode {mode!r}; "
            f"the search space beyond the cap is out of reach"
        )
    if workers < 1:
        raise ValueError("workers must be positive")

    scan = _scan_partition_all if mode == "all" else _scan_partition_iso
    partitions = range(1, 1 << n)
    started = time.perf_counter()
    total = _Tally()
    if workers == 1:
        parts = [scan(n, r0) for r0 in partitions]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda r0: scan(n, r0), partitions))
    for part in parts:
        total.merge(part)
    elapsed = time.perf_counter() - started

    return SurveyReport(
        n=n,
        mode=mode,
        full=total.full,
        idempotent_full=total.idempotent_full,
        nontrivial_idempotent=total.nontrivial_idempotent,
        trivial_idempotent=total.trivial_idempotent,
        gamma_idempotent=total.gamma_idempotent,
        surjective_idempotent=total.surjective_idempotent,
        identity_count=total.identity_count,
        counterexamples=tuple(total.counterexamples),
        elapsed=elapsed,
    )
