"""Finite integer sets, mask polynomials, and tiling verification.

A tiling of Z_M is checked by two independent routes: the direct one counts
how often each residue is covered, and the cyclotomic one checks that the
reduced product of the mask polynomials is divisible by every cyclotomic
polynomial indexed by a divisor of M. The two are provably equivalent, so
a disagreement is escalated as a fault rather than resolved silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .faults import InconsistentRoutesError
from .polyring import (
    IntPolynomial,
    cyclotomic_divides,
    divisors,
    euler_phi,
    mul_mod_cyclic,
)


@dataclass(frozen=True, init=False)
class IntegerSet:
    """Nonempty finite set of nonnegative integers, kept strictly increasing."""

    elements: tuple[int, ...]

    def __init__(self, elements: Iterable[int]):
        elems = tuple(elements)
        if not elems:
            raise ValueError("set must be nonempty")
        prev = -1
        for x in elems:
            if x < 0:
                raise ValueError("elements must be nonnegative")
            if x <= prev:
                raise ValueError("elements must be strictly increasing")
            prev = x
        object.__setattr__(self, "elements", elems)

    @staticmethod
    def of(*elements: int) -> "IntegerSet":
        return IntegerSet.from_iterable(elements)

    @staticmethod
    def from_iterable(elements: Iterable[int]) -> "IntegerSet":
        """Build from any iterable; duplicates are rejected, order ignored."""
        elems = sorted(elements)
        for a, b in zip(elems, elems[1:]):
            if a == b:
                raise ValueError(f"duplicate element {a}")
        return IntegerSet(elems)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def diameter(self) -> int:
        return self.elements[-1] - self.elements[0]

    def normalize(self) -> "IntegerSet":
        """Translate so that min = 0; the diameter is unchanged."""
        lo = self.elements[0]
        if lo == 0:
            return self
        return IntegerSet(x - lo for x in self.elements)

    def translate(self, offset: int) -> "IntegerSet":
        return IntegerSet(x + offset for x in self.elements)

    def reduce_mod(self, modulus: int) -> "IntegerSet":
        """Fold elements mod modulus; rejects sets that are not injective mod it."""
        return IntegerSet.from_iterable(x % modulus for x in self.elements)

    def mask_polynomial(self) -> IntPolynomial:
        """The {0,1} polynomial with one term X^a per element a."""
        return IntPolynomial.from_terms({x: 1 for x in self.elements})


@dataclass(frozen=True)
class TilingVerdict:
    """Outcome of both tiling checks plus diagnostics.

    first_undercovered / first_overcovered are the smallest residues hit
    zero or more than one time by the direct count (None when covered
    exactly once everywhere); failing_divisor is the first divisor of M
    whose cyclotomic did not divide the reduced product.
    """

    tiles: bool
    direct_route: bool
    cyclotomic_route: bool
    first_undercovered: int | None = None
    first_overcovered: int | None = None
    failing_divisor: int | None = None

    def __bool__(self) -> bool:
        return self.tiles


def is_tiling(tile: IntegerSet, complement: IntegerSet, modulus: int) -> TilingVerdict:
    """Check tile + complement = Z_modulus, every residue exactly once.

    Runs both the direct coverage count and the cyclotomic divisibility
    route and raises InconsistentRoutesError if they disagree (they are
    equivalent, so disagreement means a bug, never valid input behavior).
    Elements are folded mod modulus; translation does not change the result.
    """
    if modulus < 1:
        raise ValueError("modulus must be positive")
    direct, under, over = _direct_route(tile, complement, modulus)
    cyclo, bad_divisor = _cyclotomic_route(tile, complement, modulus)
    if direct != cyclo:
        raise InconsistentRoutesError(
            f"direct route says {direct} but cyclotomic route says {cyclo} "
            f"for |A|={len(tile)}, |B|={len(complement)}, M={modulus}"
        )
    return TilingVerdict(
        tiles=direct,
        direct_route=direct,
        cyclotomic_route=cyclo,
        first_undercovered=under,
        first_overcovered=over,
        failing_divisor=bad_divisor,
    )


def _direct_route(tile, complement, modulus):
    counts = [0] * modulus
    bmod = [b % modulus for b in complement.elements]
    for a in tile.elements:
        am = a % modulus
        for bm in bmod:
            r = am + bm
            if r >= modulus:
                r -= modulus
            counts[r] += 1
    under = next((r for r, c in enumerate(counts) if c == 0), None)
    over = next((r for r, c in enumerate(counts) if c > 1), None)
    return under is None and over is None, under, over


def _cyclotomic_route(tile, complement, modulus):
    if len(tile) * len(complement) != modulus:
        return False, None
    product = mul_mod_cyclic(
        tile.mask_polynomial(), complement.mask_polynomial(), modulus
    )
    coeffs = list(product.coeffs)
    coeffs.extend([0] * (modulus - len(coeffs)))
    for s in divisors(modulus):
        if s == 1:
            continue
        if s == modulus:
            folded = coeffs
        else:
            folded = [sum(coeffs[r::s]) for r in range(s)]
        if not cyclotomic_divides(s, folded):
            return False, s
    return True, None


def least_period(subset: IntegerSet, modulus: int) -> int:
    """Smallest d | modulus with (subset + d) mod modulus == subset."""
    if subset.elements[-1] >= modulus:
        raise ValueError("elements must lie in [0, modulus)")
    base = frozenset(subset.elements)
    for d in divisors(modulus):
        if frozenset((x + d) % modulus for x in base) == base:
            return d
    raise AssertionError("unreachable: modulus itself is always a period")


def cyclotomic_divisors(tile: IntegerSet, bound: int) -> set[int]:
    """Indices s <= bound whose cyclotomic divides the mask polynomial.

    Indices with euler_phi(s) > diameter are skipped outright: a nonzero
    polynomial has no divisor of larger degree.
    """
    diam = tile.diameter()
    mask = tile.mask_polynomial()
    found = set()
    for s in range(1, bound + 1):
        if euler_phi(s) <= diam and cyclotomic_divides(s, mask):
            found.add(s)
    return found


@dataclass(frozen=True)
class CyclicTiling:
    """A verified factorization tile + complement = Z_modulus.

    Construction runs the full dual-route check and rejects anything that
    is not a tiling, so a CyclicTiling value is a certificate.
    """

    tile: IntegerSet
    complement: IntegerSet
    modulus: int

    def __post_init__(self):
        for part, name in ((self.tile, "tile"), (self.complement, "complement")):
            if part.elements[-1] >= self.modulus:
                raise ValueError(f"{name} elements must lie in [0, modulus)")
        if len(self.tile) * len(self.complement) != self.modulus:
            raise ValueError("|tile| * |complement| must equal the modulus")
        if not is_tiling(self.tile, self.complement, self.modulus):
            raise ValueError("not a tiling of Z_modulus")

    def to_json_dict(self) -> dict:
        return {
            "tile": list(self.tile.elements),
            "complement": list(self.complement.elements),
            "modulus": self.modulus,
        }

    @staticmethod
    def from_json_dict(d: dict) -> "CyclicTiling":
        return CyclicTiling(
            tile=IntegerSet(d["tile"]),
            complement=IntegerSet(d["complement"]),
            modulus=d["modulus"],
        )
