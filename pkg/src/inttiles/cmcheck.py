"""Coven-Meyerowitz spectrum and conditions, plus fiber structure.

The spectrum of a tile A is the set of prime powers p^a whose cyclotomic
polynomial divides the mask polynomial of A. Condition (T1) compares |A|
with the product of Phi_{p^a}(1) = p over the spectrum; (T2) requires the
cyclotomic of every cross-prime product of spectrum elements to divide A
as well. Both checks are exact.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass

from .polyring import cyclotomic_divides, euler_phi, factorize, is_prime, primes_up_to
from .tilingset import IntegerSet


def spectrum(tile: IntegerSet) -> tuple[int, ...]:
    """Prime powers p^a with Phi_{p^a} dividing the mask polynomial, sorted.

    Only indices with euler_phi(p^a) <= diameter can divide, which bounds
    the search: p runs over primes <= diameter + 1 and a grows while
    p^(a-1) * (p-1) stays within the diameter.
    """
    diam = tile.diameter()
    mask = tile.mask_polynomial()
    found = []
    for p in primes_up_to(diam + 1):
        power = p
        while (power // p) * (p - 1) <= diam:
            if cyclotomic_divides(power, mask):
                found.append(power)
            power *= p
    return tuple(sorted(found))


def check_t1(tile: IntegerSet) -> bool:
    """(T1): |A| equals the product of Phi_s(1) = p over spectrum entries s = p^a."""
    product = 1
    for s in spectrum(tile):
        product *= factorize(s).primes[0]
    return product == len(tile)


def check_t2(tile: IntegerSet) -> bool:
    """(T2): for spectrum powers of pairwise distinct primes, the cyclotomic
    of their product divides the mask polynomial.

    Products whose totient exceeds the diameter cannot divide and settle
    the verdict immediately.
    """
    diam = tile.diameter()
    mask = tile.mask_polynomial()
    by_prime: dict[int, list[int]] = {}
    for s in spectrum(tile):
        by_prime.setdefault(factorize(s).primes[0], []).append(s)
    primes = sorted(by_prime)
    for k in range(2, len(primes) + 1):
        for chosen_primes in itertools.combinations(primes, k):
            for powers in itertools.product(*(by_prime[p] for p in chosen_primes)):
                index = math.prod(powers)
                if euler_phi(index) > diam:
                    return False
                if not cyclotomic_divides(index, mask):
                    return False
    return True


@dataclass(frozen=True)
class CmReport:
    """Spectrum, condition verdicts, and the diameter inequalities for one tile.

    half_bound_holds (diam >= lcm_sa / 2) is only meaningful when the
    cyclotomic of lcm_sa divides the tile, and eq3_holds (diam >= (p-1)/p *
    lcm_sa, p the smallest prime factor of |A|) only when |A| > 1; both are
    None otherwise and omitted from JSON.
    """

    spectrum: tuple[int, ...]
    t1: bool
    t2: bool
    lcm_sa: int
    phi_lcm_divides: bool
    diam: int
    half_bound_holds: bool | None = None
    eq3_holds: bool | None = None

    def to_json_dict(self) -> dict:
        d = {
            "spectrum": list(self.spectrum),
            "t1": self.t1,
            "t2": self.t2,
            "lcm_sa": self.lcm_sa,
            "phi_lcm_divides": self.phi_lcm_divides,
            "diam": self.diam,
        }
        if self.half_bound_holds is not None:
            d["half_bound_holds"] = self.half_bound_holds
        if self.eq3_holds is not None:
            d["eq3_holds"] = self.eq3_holds
        return d


def cm_report(tile: IntegerSet) -> CmReport:
    """Assemble the full report for a normalized tile."""
    spec = spectrum(tile)
    lcm_sa = math.lcm(*spec) if spec else 1
    diam = tile.diameter()
    phi_lcm_divides = cyclotomic_divides(lcm_sa, tile.mask_polynomial())
    half_bound = 2 * diam >= lcm_sa if phi_lcm_divides else None
    eq3 = None
    if len(tile) > 1:
        p = factorize(len(tile)).primes[0]
        eq3 = p * diam >= (p - 1) * lcm_sa
    return CmReport(
        spectrum=spec,
        t1=check_t1(tile),
        t2=check_t2(tile),
        lcm_sa=lcm_sa,
        phi_lcm_divides=phi_lcm_divides,
        diam=diam,
        half_bound_holds=half_bound,
        eq3_holds=eq3,
    )


@dataclass(frozen=True)
class FiberDecomposition:
    """A partition of a multiset over Z_M into p-fibers and q-fibers.

    Each base residue x in p_fibers stands for the coset
    {x + k*M/p : 0 <= k < p}; bases may repeat when the multiset demands
    it. unique is False when a second, different decomposition exists.
    """

    modulus: int
    p: int
    q: int
    p_fibers: tuple[int, ...]
    q_fibers: tuple[int, ...]
    unique: bool

    def to_json_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "p": self.p,
            "q": self.q,
            "p_fibers": list(self.p_fibers),
            "q_fibers": list(self.q_fibers),
            "unique": self.unique,
        }


def fiber_decompose(
    tile: IntegerSet, modulus: int, p: int, q: int | None = None
) -> FiberDecomposition | None:
    """Decompose tile mod modulus into fibers, or None if impossible.

    The search always branches on the smallest residue with remaining
    multiplicity, trying its p-fiber before its q-fiber, so the first
    decomposition found is deterministic. The search is exhaustive: a None
    result certifies that no decomposition exists. Passing q = None or
    q = p selects single-prime mode (p-fibers only).
    """
    if not is_prime(p) or modulus % p != 0:
        raise ValueError("p must be a prime dividing the modulus")
    single = q is None or q == p
    if not single:
        assert q is not None
        if not is_prime(q) or modulus % q != 0:
            raise ValueError("q must be a prime dividing the modulus")
    counts = Counter(x % modulus for x in tile.elements)
    kinds = [(p, modulus // p)] if single else [(p, modulus // p), (q, modulus // q)]

    first: list[tuple[int, int]] | None = None
    solutions = 0
    chosen: list[tuple[int, int]] = []
    remaining = sorted(counts)

    def branch() -> bool:
        # Returns True once a second solution is known; unwinds the search.
        nonlocal first, solutions
        t = next((r for r in remaining if counts[r] > 0), None)
        if t is None:
            solutions += 1
            if first is None:
                first = list(chosen)
            return solutions >= 2
        for prime, step in kinds:
            base = t % step
            coset = range(base, modulus, step)
            if all(counts[r] > 0 for r in coset):
                for r in coset:
                    counts[r] -= 1
                chosen.append((prime, base))
                done = branch()
                chosen.pop()
                for r in coset:
                    counts[r] += 1
                if done:
                    return True
        return False

    branch()
    if first is None:
        return None
    return FiberDecomposition(
        modulus=modulus,
        p=p,
        q=p if single else q,  # type: ignore[arg-type]
        p_fibers=tuple(base for prime, base in first if prime == p),
        q_fibers=tuple(base for prime, base in first if not single and prime == q),
        unique=solutions < 2,
    )
