"""Exhaustive complement search in Z_M and minimal tiling periods.

The period search enumerates candidate moduli in increasing order and
calls a complete backtracking search for a complement at each. The default
enumeration cap (2D)^d, with D the diameter and d the number of distinct
primes of |A|, makes a negative answer a theorem rather than a timeout:
any tiling admits one whose period has the same prime factors as |A|, and
such a least period cannot exceed the cap.
"""

from __future__ import annotations

import heapq
import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .faults import WitnessViolationError
from .polyring import cyclotomic_divides, factorize
from .tilingset import CyclicTiling, IntegerSet, least_period


class NodeBudgetExceeded(Exception):
    """The backtracking search hit a caller-imposed node budget."""


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for minimal_tiling_period.

    candidate_mode "restricted" enumerates only moduli whose prime set
    equals the prime set of |A| (sound: a tile always admits such a
    tiling); "unrestricted" enumerates every multiple of |A| up to the cap
    and exists as an oracle for the restricted mode. parallelism 0 means
    one worker per CPU. A max_modulus_override below the default cap
    downgrades a negative answer to inconclusive.
    """

    candidate_mode: str = "restricted"
    max_modulus_override: int | None = None
    parallelism: int = 1
    node_budget: int | None = None

    def __post_init__(self):
        if self.candidate_mode not in ("restricted", "unrestricted"):
            raise ValueError(f"unknown candidate mode {self.candidate_mode!r}")
        if self.parallelism < 0:
            raise ValueError("parallelism must be nonnegative")
        if self.max_modulus_override is not None and self.max_modulus_override < 1:
            raise ValueError("max_modulus_override must be positive")
        if self.node_budget is not None and self.node_budget < 1:
            raise ValueError("node_budget must be positive")


@dataclass(frozen=True)
class PeriodResult:
    """Outcome of a minimal-period search.

    status is "tiles" (period and complement set), "does_not_tile" (every
    candidate up to a proof-complete cap was refuted), or "inconclusive"
    (a user-imposed budget or cap override stopped the search early).
    explored lists each candidate modulus with its outcome.
    """

    status: str
    period: int | None
    complement: IntegerSet | None
    cap_used: int
    explored: tuple[tuple[int, str], ...] = field(default_factory=tuple)

    def to_json_dict(self) -> dict:
        d: dict = {"status": self.status}
        if self.period is not None:
            d["period"] = self.period
        if self.complement is not None:
            d["complement"] = list(self.complement.elements)
        d["cap_used"] = self.cap_used
        d["explored"] = [[m, outcome] for m, outcome in self.explored]
        return d


def find_complement(
    tile: IntegerSet, modulus: int, node_budget: int | None = None
) -> IntegerSet | None:
    """A complement B containing 0 with tile + B = Z_modulus, or None.

    Complete backtracking over residue coverage: the smallest uncovered
    residue t must be covered by some translate b with t - b in tile
    (mod modulus), so each node branches over at most |tile| candidate
    translates, tried in increasing order. The first solution in this
    order is returned, making the result deterministic; None comes with an
    exhaustive-search guarantee. Placements are bitmask operations on
    Python ints, which keeps the search fast for moduli in the hundreds.
    """
    k = len(tile)
    if modulus % k:
        return None
    reduced = sorted({x % modulus for x in tile.elements})
    if len(reduced) != k:
        return None  # not injective mod modulus: some residue would double up
    full = (1 << modulus) - 1
    base = 0
    for x in reduced:
        base |= 1 << x
    masks: dict[int, int] = {0: base}

    def mask_of(b: int) -> int:
        m = masks.get(b)
        if m is None:
            m = ((base << b) | (base >> (modulus - b))) & full
            masks[b] = m
        return m

    target = modulus // k
    chosen: list[int] = []
    nodes = 0

    def extend(covered: int) -> bool:
        nonlocal nodes
        if len(chosen) == target:
            return True
        uncovered = ~covered & full
        t = (uncovered & -uncovered).bit_length() - 1
        for b in sorted((t - a) % modulus for a in reduced):
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                raise NodeBudgetExceeded(f"exceeded {node_budget} nodes at M={modulus}")
            m = mask_of(b)
            if covered & m:
                continue
            chosen.append(b)
            if extend(covered | m):
                return True
            chosen.pop()
        return False

    if extend(0):
        return IntegerSet(sorted(chosen))
    return None


def restricted_candidates(size: int, cap: int) -> Iterator[int]:
    """Multiples of size with prime set equal to that of size, ascending, <= cap.

    Generated as a min-heap stream of products of the primes of size, so
    candidates come out sorted without materializing a range.
    """
    primes = factorize(size).primes
    if not primes:
        if cap >= 1:
            yield 1
        return
    heap = [1]
    seen = {1}
    while heap:
        v = heapq.heappop(heap)
        if v > cap:
            return
        if v % size == 0 and all(v % p == 0 for p in primes):
            yield v
        for p in primes:
            w = v * p
            if w <= cap and w not in seen:
                seen.add(w)
                heapq.heappush(heap, w)


def unrestricted_candidates(size: int, cap: int) -> Iterator[int]:
    """Every multiple of size up to cap, ascending."""
    return iter(range(size, cap + 1, size))


def default_cap(tile: IntegerSet) -> int:
    """(2D)^d with D the diameter and d the number of distinct primes of |A|."""
    d = factorize(len(tile)).num_distinct_primes()
    return (2 * tile.diameter()) ** d


def _probe(args: tuple[tuple[int, ...], int, int | None]) -> tuple[str, tuple[int, ...] | None]:
    elements, modulus, node_budget = args
    tile = IntegerSet(elements)
    if len({x % modulus for x in elements}) != len(elements):
        return "not_injective", None
    try:
        found = find_complement(tile, modulus, node_budget)
    except NodeBudgetExceeded:
        return "budget_exhausted", None
    if found is None:
        return "refuted", None
    return "tiles", found.elements


def minimal_tiling_period(
    tile: IntegerSet, config: SearchConfig = SearchConfig()
) -> PeriodResult:
    """The minimal tiling period of a normalized tile, by exhaustive search.

    Candidates are enumerated in increasing order, so the first modulus
    admitting a complement is the minimum over the enumerated family. With
    the default cap a fully refuted enumeration is a proof that the tile
    does not tile the integers at all; a cap override below the default
    only ever yields "inconclusive" in the negative case. Results do not
    depend on the parallelism level: workers probe candidate moduli
    speculatively but outcomes are consumed in candidate order.
    """
    cap = default_cap(tile)
    proof_complete = True
    if config.max_modulus_override is not None:
        proof_complete = config.max_modulus_override >= cap
        cap = config.max_modulus_override
    if config.candidate_mode == "restricted":
        candidates = list(restricted_candidates(len(tile), cap))
    else:
        candidates = list(unrestricted_candidates(len(tile), cap))

    explored: list[tuple[int, str]] = []
    jobs = config.parallelism if config.parallelism > 0 else (os.cpu_count() or 1)
    if jobs > 1 and len(candidates) > 1:
        outcomes = _probe_parallel(tile, candidates, config.node_budget, jobs)
    else:
        outcomes = map(
            _probe, ((tile.elements, m, config.node_budget) for m in candidates)
        )

    for modulus, (outcome, complement) in zip(candidates, outcomes):
        explored.append((modulus, outcome))
        if outcome == "tiles":
            assert complement is not None
            return PeriodResult(
                "tiles", modulus, IntegerSet(complement), cap, tuple(explored)
            )
        if outcome == "budget_exhausted":
            return PeriodResult("inconclusive", None, None, cap, tuple(explored))
    status = "does_not_tile" if proof_complete else "inconclusive"
    return PeriodResult(status, None, None, cap, tuple(explored))


def _probe_parallel(tile, candidates, node_budget, jobs):
    """Probe candidates with a process pool, yielding results in candidate order.

    Workers run ahead inside a bounded window, but results are consumed
    strictly in submission order, so the stream the caller sees is the one
    a serial scan would produce.
    """
    window = 2 * jobs
    pending: deque = deque()
    it = iter(candidates)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        try:
            while len(pending) < window:
                m = next(it, None)
                if m is None:
                    break
                pending.append(pool.submit(_probe, (tile.elements, m, node_budget)))
            while pending:
                result = pending.popleft().result()
                m = next(it, None)
                if m is not None:
                    pending.append(pool.submit(_probe, (tile.elements, m, node_budget)))
                yield result
        finally:
            for fut in pending:
                fut.cancel()


def top_power_witnesses(tiling: CyclicTiling) -> list[tuple[int, int, int]]:
    """For each prime power p^e exactly dividing M, a witness divisor s.

    The witness satisfies p^e | s, s | M, and Phi_s divides the tile's mask
    polynomial. Such an s always exists when M is the least period of the
    complement; its absence would contradict a theorem, so it is raised as
    a fault. Requires least_period(complement, M) == M.
    """
    modulus = tiling.modulus
    if least_period(tiling.complement, modulus) != modulus:
        raise ValueError("modulus is not the least period of the complement")
    mask = tiling.tile.mask_polynomial()
    fac = factorize(modulus)
    divs = fac.divisors()
    witnesses = []
    for p, e in fac:
        pe = p**e
        s = next(
            (d for d in divs if d % pe == 0 and cyclotomic_divides(d, mask)), None
        )
        if s is None:
            raise WitnessViolationError(
                f"no witness for {p}^{e} in tiling with modulus {modulus}"
            )
        witnesses.append((p, e, s))
    return witnesses


def period_bound_check(tiling: CyclicTiling) -> bool:
    """Whether M <= (2 * diam(tile))^d, d the number of distinct primes of M.

    Preconditions: M is the least period of the complement and M has the
    same prime set as |tile|. A False return on a valid input would
    contradict the bound chain behind the period cap.
    """
    modulus = tiling.modulus
    if least_period(tiling.complement, modulus) != modulus:
        raise ValueError("modulus is not the least period of the complement")
    fac = factorize(modulus)
    if fac.primes != factorize(len(tiling.tile)).primes:
        raise ValueError("prime set of modulus differs from prime set of |tile|")
    d = fac.num_distinct_primes()
    return modulus <= (2 * tiling.tile.diameter()) ** d
