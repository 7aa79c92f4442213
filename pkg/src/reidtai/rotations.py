"""Exact arithmetic on rotation numbers (Q/Z) and Galois-orbit multisets.

A rotation number num/den stands for the root of unity exp(2*pi*i*num/den).
A spectrum is a finite multiset of rotation numbers: the eigenvalue data of
a finite-order semisimple operator.  Whether a spectrum can come from an
integer matrix is decided by decomposing it into complete Galois orbits.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

# Every order used by the sweeps divides a configurable bound <= 360, so
# numerators and denominators stay tiny; construction enforces the cap.
MAX_DENOMINATOR = 360


@dataclass(frozen=True, slots=True)
class RotationNumber:
    """A reduced rational in [0, 1); 0 is stored as 0/1.

    Direct construction demands an already-reduced pair; use :func:`rot`
    to build one from arbitrary integers.
    """

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.den <= 0:
            raise ValueError(f"denominator must be positive, got {self.den}")
        if self.den > MAX_DENOMINATOR:
            raise ValueError(
                f"denominator {self.den} exceeds the cap {MAX_DENOMINATOR}"
            )
        if not 0 <= self.num < self.den:
            raise ValueError(f"{self.num}/{self.den} is not reduced mod 1")
        if math.gcd(self.num, self.den) != 1:
            raise ValueError(f"{self.num}/{self.den} is not in lowest terms")

    @property
    def is_zero(self) -> bool:
        return self.num == 0

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self.den, self.num)

    def __add__(self, other: RotationNumber) -> RotationNumber:
        l = math.lcm(self.den, other.den)
        return rot(self.num * (l // self.den) + other.num * (l // other.den), l)

    def __neg__(self) -> RotationNumber:
        return rot(-self.num, self.den)

    def times(self, k: int) -> RotationNumber:
        """k-th power of the underlying root of unity (k*q mod 1)."""
        return rot(self.num * k, self.den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


def rot(num: int, den: int) -> RotationNumber:
    """Build num/den reduced mod 1."""
    if den == 0:
        raise ValueError("denominator must be nonzero")
    if den < 0:
        num, den = -num, -den
    num %= den
    g = math.gcd(num, den)
    return RotationNumber(num // g, den // g)


def rot_from_str(text: str) -> RotationNumber:
    """Parse "num/den" (or a bare integer, which reduces to 0)."""
    if "/" in text:
        num, den = text.split("/")
        return rot(int(num), int(den))
    return rot(int(text), 1)


ZERO = rot(0, 1)
HALF = rot(1, 2)


@dataclass(frozen=True, slots=True)
class Spectrum:
    """A multiset of rotation numbers, stored canonically sorted.

    Sorting is by (den, num), so structurally equal spectra compare equal;
    use :meth:`of` unless the entries are known to be in canonical order.
    """

    entries: tuple[RotationNumber, ...] = ()

    def __post_init__(self) -> None:
        keys = [q.sort_key for q in self.entries]
        if any(a > b for a, b in zip(keys, keys[1:])):
            raise ValueError("entries not canonically sorted; use Spectrum.of")

    @classmethod
    def of(cls, entries: Iterable[RotationNumber]) -> Spectrum:
        return cls(tuple(sorted(entries, key=lambda q: q.sort_key)))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[RotationNumber]:
        return iter(self.entries)

    def counts(self) -> Counter[RotationNumber]:
        return Counter(self.entries)

    def negated(self) -> Spectrum:
        return Spectrum.of(-q for q in self.entries)

    def is_identity(self) -> bool:
        """True iff every eigenvalue is 1 (the all-zero spectrum)."""
        return all(q.is_zero for q in self.entries)

    def __str__(self) -> str:
        return "{" + ", ".join(str(q) for q in self.entries) + "}"


def parse_spectrum(text: str) -> Spectrum:
    """Parse a comma-separated list of rotation numbers; "" is empty."""
    text = text.strip().strip("{}")
    if not text:
        return Spectrum()
    return Spectrum.of(rot_from_str(part.strip()) for part in text.split(","))


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    """Euler's phi by trial division."""
    if n <= 0:
        raise ValueError(f"totient needs a positive argument, got {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of n in increasing order."""
    if n <= 0:
        raise ValueError(f"divisors needs a positive argument, got {n}")
    return tuple(d for d in range(1, n + 1) if n % d == 0)


@lru_cache(maxsize=None)
def galois_orbit(n: int) -> Spectrum:
    """All primitive n-th roots of unity: {k/n : gcd(k, n) = 1}.

    For n = 1 this is the single entry 0.  Cardinality is totient(n).
    """
    if n <= 0:
        raise ValueError(f"orbit order must be positive, got {n}")
    return Spectrum.of(rot(k, n) for k in range(1, n + 1) if math.gcd(k, n) == 1)


def element_order(s: Spectrum) -> int:
    """lcm of the denominators; 1 for the empty or all-zero spectrum."""
    return math.lcm(*(q.den for q in s.entries)) if s.entries else 1


def validate_integral(s: Spectrum) -> bool:
    """True iff the multiset splits into complete Galois orbits.

    A finite-order integer matrix has characteristic polynomial a product
    of cyclotomics, so each primitive n-th root must appear with the same
    multiplicity as all of its conjugates.  An entry of denominator n can
    only belong to the order-n orbit, which makes the check local to each
    denominator.
    """
    counts = s.counts()
    for n in {q.den for q in s.entries}:
        orbit = galois_orbit(n).entries
        m = counts[orbit[0]]
        if any(counts[q] != m for q in orbit[1:]):
            return False
    return True


def validate_ppav(a: Spectrum) -> bool:
    """True iff a, together with its negation, is integral.

    A finite-order automorphism of an abelian h-fold acts on the rank-2h
    integral homology with spectrum a plus its complex conjugate, so the
    doubled multiset must split into complete Galois orbits.
    """
    return validate_integral(Spectrum.of(a.entries + a.negated().entries))


@dataclass(frozen=True, slots=True)
class OrbitSignature:
    """A multiset of orbit orders n_j, stored sorted.

    The signature {n_j} encodes the integral conjugacy-class datum "one
    complete Galois orbit per part"; its total degree is sum of phi(n_j).
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(n <= 0 for n in self.parts):
            raise ValueError("orbit orders must be positive")
        if any(a > b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts not sorted; use OrbitSignature.of")

    @classmethod
    def of(cls, parts: Iterable[int]) -> OrbitSignature:
        return cls(tuple(sorted(parts)))

    @property
    def total_degree(self) -> int:
        return sum(totient(n) for n in self.parts)

    @property
    def order(self) -> int:
        return math.lcm(*self.parts) if self.parts else 1

    def spectrum(self) -> Spectrum:
        """Concatenation of the Galois orbits of all parts."""
        entries: list[RotationNumber] = []
        for n in self.parts:
            entries.extend(galois_orbit(n).entries)
        return Spectrum.of(entries)

    def __str__(self) -> str:
        return "{" + ", ".join(str(n) for n in self.parts) + "}"
