"""Age and the induced-operator calculus on spectra.

Everything here is exact: spectra in, spectra out, ages as Fractions.
Threshold comparisons downstream (age vs 1 or 1/2) must never go through
floats, because the boundary cases sit exactly on the thresholds.
"""

from __future__ import annotations

from fractions import Fraction

from .rotations import RotationNumber, Spectrum


def age(s: Spectrum) -> Fraction:
    """Sum of the rotation numbers in [0, 1); eigenvalue 1 contributes 0."""
    return sum((q.fraction for q in s.entries), Fraction(0))


def sym2(a: Spectrum) -> Spectrum:
    """Spectrum of the induced operator on the symmetric square.

    For |a| = h this is the multiset {a_i + a_j : i <= j}, of size
    h*(h+1)/2.
    """
    e = a.entries
    return Spectrum.of(e[i] + e[j] for i in range(len(e)) for j in range(i, len(e)))


def tensor(a: Spectrum, b: Spectrum) -> Spectrum:
    """Spectrum of the induced operator on the tensor product (size |a|*|b|)."""
    return Spectrum.of(x + y for x in a.entries for y in b.entries)


def direct_sum(*summands: Spectrum) -> Spectrum:
    """Multiset union; dimensions add."""
    entries: list[RotationNumber] = []
    for s in summands:
        entries.extend(s.entries)
    return Spectrum.of(entries)


def power(s: Spectrum, k: int) -> Spectrum:
    """Spectrum of the k-th power of the operator: {k*q mod 1}."""
    if k < 0:
        raise ValueError(f"power exponent must be >= 0, got {k}")
    return Spectrum.of(q.times(k) for q in s.entries)


def fixed_multiplicity(s: Spectrum) -> int:
    """Multiplicity of the eigenvalue 1 (dimension of the fixed subspace)."""
    return sum(1 for q in s.entries if q.is_zero)


def v_spectrum(w_spec: Spectrum, lambda_spec: Spectrum) -> Spectrum:
    """Boundary-chart spectrum: Sym^2 of the abelian factor plus the mixed
    abelian-by-lattice tensor block; dimension h*(h+1)/2 + h*r.
    """
    return direct_sum(sym2(w_spec), tensor(w_spec, lambda_spec))


def forms_spectrum(lambda_spec: Spectrum) -> Spectrum:
    """Induced spectrum on symmetric bilinear forms on the lattice
    (dimension r*(r+1)/2): the symmetric square of the lattice action.
    """
    return sym2(lambda_spec)
