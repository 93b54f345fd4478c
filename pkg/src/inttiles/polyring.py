"""Exact arithmetic over integer polynomials, cyclotomics included.

Coefficients are Python ints, so nothing here ever rounds or overflows.
Polynomials are dense coefficient tuples (constant term first); the
divisibility test for cyclotomics works on sparse exponent maps instead,
which keeps it usable for sets with diameters in the hundreds of thousands.
"""

from __future__ import annotations

import functools
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence, Union


@dataclass(frozen=True, init=False)
class IntPolynomial:
    """Integer polynomial as a dense coefficient tuple.

    ``coeffs[i]`` is the coefficient of X^i. Trailing zeros are stripped on
    construction, so the highest-index coefficient is nonzero unless the
    polynomial is zero. The zero polynomial has an empty tuple and its
    degree is None rather than a sentinel integer.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @staticmethod
    def zero() -> "IntPolynomial":
        return IntPolynomial()

    @staticmethod
    def one() -> "IntPolynomial":
        return IntPolynomial((1,))

    @staticmethod
    def monomial(exponent: int, coefficient: int = 1) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        return IntPolynomial([0] * exponent + [coefficient])

    @staticmethod
    def from_terms(terms: Mapping[int, int]) -> "IntPolynomial":
        if not terms:
            return IntPolynomial()
        n = max(terms) + 1
        cs = [0] * n
        for e, c in terms.items():
            if e < 0:
                raise ValueError("exponent must be nonnegative")
            cs[e] += c
        return IntPolynomial(cs)

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def terms(self) -> Iterator[tuple[int, int]]:
        """Nonzero (exponent, coefficient) pairs in increasing exponent order."""
        return ((e, c) for e, c in enumerate(self.coeffs) if c)

    def __call__(self, x: int) -> int:
        r = 0
        for c in reversed(self.coeffs):
            r = r * x + c
        return r

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coeffs])

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        other_terms = list(other.terms())
        for i, a in self.terms():
            for j, b in other_terms:
                out[i + j] += a * b
        return IntPolynomial(out)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e, c in self.terms():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "X" if e == 1 else f"X^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append(("- " if c < 0 else "+ ") + body if parts else
                         ("-" if c < 0 else "") + body)
        return " ".join(parts)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (prime, exponent) pairs sorted by prime."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prev = 1
        for p, e in self.pairs:
            if p <= prev:
                raise ValueError("primes must be strictly increasing")
            if e < 1:
                raise ValueError("exponents must be positive")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            prev = p

    @property
    def value(self) -> int:
        v = 1
        for p, e in self.pairs:
            v *= p**e
        return v

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def num_distinct_primes(self) -> int:
        return len(self.pairs)

    def divisors(self) -> list[int]:
        """All positive divisors, sorted ascending."""
        ds = [1]
        for p, e in self.pairs:
            ds = [d * p**k for d in ds for k in range(e + 1)]
        return sorted(ds)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def smallest_prime_factor(n: int) -> int:
    if n < 2:
        raise ValueError("n must be at least 2")
    if n % 2 == 0:
        return 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return d
        d += 2
    return n


def primes_up_to(n: int) -> list[int]:
    """All primes <= n, by sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, v in enumerate(sieve) if v]


def factorize(n: int) -> Factorization:
    """Exact prime factorization by trial division; factorize(1) is empty."""
    if n < 1:
        raise ValueError("n must be positive")
    pairs = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            e += 1
            n //= d
        if e:
            pairs.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        pairs.append((n, 1))
    return Factorization(tuple(pairs))


def divisors(n: int) -> list[int]:
    return factorize(n).divisors()


def euler_phi(s: int) -> int:
    """Euler totient of s >= 1."""
    if s < 1:
        raise ValueError("s must be positive")
    v = s
    for p, _ in factorize(s):
        v -= v // p
    return v


@functools.lru_cache(maxsize=None)
def cyclotomic(s: int) -> IntPolynomial:
    """The s-th cyclotomic polynomial.

    Computed inductively: X^s - 1 divided by the product of all lower-index
    cyclotomics whose index divides s. Every division is by a monic
    polynomial and exact, so the result is exact integer arithmetic all the
    way down. Results are cached; concurrent fills of the same key produce
    identical values, so sharing the cache across threads is safe.
    """
    if s < 1:
        raise ValueError("s must be positive")
    f = IntPolynomial.from_terms({s: 1, 0: -1})
    for d in divisors(s):
        if d < s:
            q = exact_divide(f, cyclotomic(d))
            assert q is not None
            f = q
    return f


def exact_divide(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial | None:
    """Quotient f/g over the integers, or None when g does not divide f.

    g must be monic (every divisor used here is a cyclotomic or X^N - 1).
    A None result is an expected outcome, not an error.
    """
    if g.is_zero():
        raise ValueError("division by the zero polynomial")
    if not g.is_monic():
        raise ValueError("divisor must be monic")
    if f.is_zero():
        return IntPolynomial()
    assert f.degree is not None and g.degree is not None
    if f.degree < g.degree:
        return None
    rem = list(f.coeffs)
    dg = g.degree
    quo = [0] * (f.degree - dg + 1)
    for i in range(len(quo) - 1, -1, -1):
        c = rem[i + dg]
        if c:
            quo[i] = c
            for j, b in enumerate(g.coeffs):
                rem[i + j] -= c * b
    if any(rem[:dg]):
        return None
    return IntPolynomial(quo)


def mul_mod_cyclic(f: IntPolynomial, g: IntPolynomial, modulus: int) -> IntPolynomial:
    """f*g with exponents folded modulo `modulus` (i.e. reduced mod X^M - 1)."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    out = [0] * modulus
    g_terms = list(g.terms())
    for i, a in f.terms():
        for j, b in g_terms:
            out[(i + j) % modulus] += a * b
    return IntPolynomial(out)


PolyLike = Union[IntPolynomial, Mapping[int, int], Sequence[int]]


def cyclotomic_divides(s: int, f: PolyLike) -> bool:
    """Whether the s-th cyclotomic polynomial divides f, exactly.

    Equivalent to f vanishing at a primitive s-th root of unity. Instead of
    long division, f is reduced mod X^s - 1 and then rewritten over an
    integral basis of the s-th cyclotomic field, peeling off one prime of s
    at a time; the only arithmetic is integer addition, so the test is
    exact and fast even when s is large and f is sparse.

    f may be an IntPolynomial, a mapping exponent -> coefficient, or a
    dense coefficient sequence.
    """
    if s < 1:
        raise ValueError("s must be positive")
    agg: dict[int, int] = defaultdict(int)
    if isinstance(f, IntPolynomial):
        items: Iterable[tuple[int, int]] = f.terms()
    elif isinstance(f, Mapping):
        items = f.items()
    else:
        items = enumerate(f)
    for e, c in items:
        if c:
            agg[e % s] += c
    return _vanishes({e: c for e, c in agg.items() if c}, s)


def _vanishes(terms: dict[int, int], s: int) -> bool:
    # terms: exponent -> coefficient with exponents already in [0, s).
    if not terms:
        return True
    if s == 1:
        return sum(terms.values()) == 0
    p = smallest_prime_factor(s)
    t = s // p
    classes: list[dict[int, int]] = [defaultdict(int) for _ in range(p)]
    if t % p == 0:
        # p^2 | s: zeta^a = zeta^(a mod p) * (zeta^p)^(a div p), and
        # 1, zeta, ..., zeta^(p-1) are a basis over Q(zeta^p).
        for a, c in terms.items():
            classes[a % p][a // p] += c
        residual = classes
    else:
        # p exactly divides s: split by a mod p against coordinates mod t,
        # then eliminate the omega^(p-1) component via 1 + omega + ... = 0.
        for a, c in terms.items():
            classes[a % p][a % t] += c
        last = classes[p - 1]
        residual = []
        for j in range(p - 1):
            d = dict(classes[j])
            for e, c in last.items():
                d[e] = d.get(e, 0) - c
            residual.append(d)
    seen = set()
    for cl in residual:
        reduced = {e: c for e, c in cl.items() if c}
        key = frozenset(reduced.items())
        if key in seen:
            continue
        seen.add(key)
        if not _vanishes(reduced, t):
            return False
    return True
