"""Seiberg-Witten polynomial combinatorics for circle bundles.

The circle bundle over a genus-g surface with Euler number n =/= 0 has a
Seiberg-Witten polynomial supported on residues mod |n|; its coefficients are
alternating binomial sums.  Everything here is reported with the sign(n)
normalization (the underlying invariant is only defined up to a global sign,
and this package always prints the sign(n) representative).

Two independent routes compute the same polynomial:

  * the direct alternating-binomial-sum formula, and
  * folding the product-bundle coefficient sequence
    c_s = (-1)^(g-1+s) * C(2g-2, g-1+s),  s in [-(g-1), g-1],
    into residues (even n folds into even indices only).

On top of the polynomial sit the degree-zero invariants of the associated
principal torus bundle: a coset-sum evaluation, a closed form with a
multiplicity prefactor |n| / gcd(|2m|, |n|), and the prefactor-free variant
for bundles whose Euler class misses the pullback torsion subgroup.  The
closed form for even n sums the polynomial coefficients over the even
residue subgroup, i.e. the inner binomial sums run over half-indices; that
reading is forced by exact agreement with the coset evaluation.  For n even
with m odd no closed form is offered and the coset route is the contract.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Iterable

from .exactla import binomial


class UnsupportedParityError(ValueError):
    """Raised when the closed form is requested for even n with odd m."""


@dataclass(frozen=True)
class ResidueSet:
    """Subgroup of Z_modulus, stored as the sorted tuple of member residues."""

    modulus: int
    members: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        members = tuple(sorted(set(self.members)))
        object.__setattr__(self, "members", members)
        for x in members:
            if not 0 <= x < self.modulus:
                raise ValueError(f"residue {x} outside [0, {self.modulus - 1}]")
        for x in members:
            for y in members:
                if (x + y) % self.modulus not in members:
                    raise ValueError("member set is not closed under addition")

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x % self.modulus in self.members


@dataclass(frozen=True)
class SWPolynomial:
    """Integer coefficients indexed by residues mod |n|."""

    modulus: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        coeffs = tuple(self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if len(coeffs) != self.modulus:
            raise ValueError(f"expected {self.modulus} coefficients, got {len(coeffs)}")

    def coefficient(self, k: int) -> int:
        return self.coefficients[k % self.modulus]

    def nonzero_terms(self) -> tuple[tuple[int, int], ...]:
        return tuple((k, c) for k, c in enumerate(self.coefficients) if c != 0)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def render(self) -> str:
        terms = []
        for k, c in self.nonzero_terms():
            if k == 0:
                terms.append(str(c))
            else:
                terms.append(f"{c}*t^{k}")
        return " + ".join(terms) if terms else "0"


def cyclic_subgroup(m: int, n: int) -> ResidueSet:
    """Subgroup of Z_|n| generated by m mod |n|.

    Its cardinality is |n| / gcd(|m|, |n|); n = 0 is rejected.
    """
    if n == 0:
        raise ValueError("modulus parameter n must be nonzero")
    modulus = abs(n)
    step = gcd(abs(m), modulus)  # gcd(0, |n|) = |n|, so m = 0 yields {0}
    return ResidueSet(modulus=modulus, members=tuple(range(0, modulus, step)))


def product_sw_coefficients(g: int) -> tuple[int, ...]:
    """Coefficient sequence c_s of the product S^1 x surface, s = -(g-1)..(g-1).

    Symmetric, alternating in sign, summing to zero; pinned down by the
    requirement that folding it mod n reproduces the circle-bundle
    polynomial for every n.
    """
    _require_genus(g)
    out = []
    for s in range(-(g - 1), g):
        q = (g - 1) + s
        c = binomial(2 * g - 2, q)
        out.append(c if q % 2 == 0 else -c)
    return tuple(out)


def _require_genus(g: int) -> None:
    if g < 2:
        raise ValueError(f"genus {g} is below the supported range (need g >= 2)")


def _require_nonzero(n: int) -> None:
    if n == 0:
        raise ValueError("Euler number n must be nonzero")


def _sign(n: int) -> int:
    return 1 if n > 0 else -1


def _alternating_binomial_sum(g: int, i: int, step: int) -> int:
    """Sum over k of (-1)^q C(2g-2, q) with q = (g-1) + i + k*step, k in [-(2g-2), 2g-2]."""
    total = 0
    for k in range(-(2 * g - 2), 2 * g - 1):
        q = (g - 1) + i + k * step
        c = binomial(2 * g - 2, q)
        if c:
            total += c if q % 2 == 0 else -c
    return total


@lru_cache(maxsize=None)
def sw_poly_circle_bundle(g: int, n: int) -> SWPolynomial:
    """Seiberg-Witten polynomial of the circle bundle with Euler number n over genus g.

    For even n = 2l the support sits at even indices 2i, 0 <= i < |l|, with
    coefficient sign(n) * sum_k (-1)^q C(2g-2, q), q = (g-1) + i + k|l|; for
    odd n the same sum with |l| replaced by |n| lands at index i directly.
    """
    _require_genus(g)
    _require_nonzero(n)
    sign = _sign(n)
    modulus = abs(n)
    coeffs = [0] * modulus
    if n % 2 == 0:
        half = modulus // 2
        for i in range(half):
            coeffs[2 * i] = sign * _alternating_binomial_sum(g, i, half)
    else:
        for i in range(modulus):
            coeffs[i] = sign * _alternating_binomial_sum(g, i, modulus)
    return SWPolynomial(modulus=modulus, coefficients=tuple(coeffs))


def fold_product_poly(g: int, n: int) -> SWPolynomial:
    """Independent oracle: fold the product coefficients c_s into residues mod |n|.

    Odd n adds c_s at index s mod |n|; even n = 2l adds c_s at index
    2*(s mod |l|).  The sign(n) normalization matches the direct formula, so
    the two routes must agree coefficient for coefficient.
    """
    _require_genus(g)
    _require_nonzero(n)
    sign = _sign(n)
    modulus = abs(n)
    coeffs = [0] * modulus
    cs = product_sw_coefficients(g)
    for offset, c in enumerate(cs):
        s = offset - (g - 1)
        if n % 2 == 0:
            half = modulus // 2
            coeffs[2 * (s % half)] += sign * c
        else:
            coeffs[s % modulus] += sign * c
    return SWPolynomial(modulus=modulus, coefficients=tuple(coeffs))


def sw4_zero_coset(g: int, m: int, n: int) -> int:
    """Degree-zero invariant of the principal torus bundle, summed coset by coset.

    Sums the circle-bundle polynomial coefficients over j with i - j in the
    doubled subgroup, for every i in the subgroup generated by m; this is
    the definition-level evaluation and is total for every nonzero n.
    """
    poly = sw_poly_circle_bundle(g, n)
    return _coset_sum(poly, m, n)


def _coset_sum(poly: SWPolynomial, m: int, n: int) -> int:
    subgroup_m = cyclic_subgroup(m, n)
    subgroup_2m = cyclic_subgroup(2 * m, n)
    modulus = poly.modulus
    total = 0
    for i in subgroup_m:
        for delta in subgroup_2m:
            total += poly.coefficient((i + delta) % modulus)
    return total


def sw4_zero_closed(g: int, m: int, n: int) -> int:
    """Closed form for the degree-zero invariant.

    Odd n: sign(n) * (|n| / gcd(|m|,|n|)) times the inner alternating sums
    over the residues divisible by gcd(|m|,|n|).  Even n requires even m and
    multiplies by |n| / (x * gcd), x in {1, 2} according to whether doubling
    m doubles the gcd; the inner sums then run over the half-indices of the
    even residues with step |n/2|.  Must equal sw4_zero_coset everywhere it
    is defined.
    """
    _require_genus(g)
    _require_nonzero(n)
    sign = _sign(n)
    d = gcd(abs(m), abs(n))
    if n % 2 != 0:
        prefactor = abs(n) // d
        inner = sum(_alternating_binomial_sum(g, i, abs(n)) for i in range(0, abs(n), d))
        return sign * prefactor * inner
    if m % 2 != 0:
        raise UnsupportedParityError(
            f"closed form undefined for even n = {n} with odd m = {m}; use the coset evaluation"
        )
    d2 = gcd(abs(2 * m), abs(n))
    x = 1 if d2 == d else 2
    prefactor = abs(n) // (x * d)
    half = abs(n) // 2
    inner = sum(_alternating_binomial_sum(g, h, half) for h in range(0, half, d // 2))
    return sign * prefactor * inner


def sw4_zero_nonpullback(g: int, m: int, n: int) -> int:
    """Prefactor-free variant: the inner alternating sums alone, times sign(n).

    Applies when the Euler class meets the pullback torsion subgroup only at
    zero, so every contributing structure is counted once.  Same parity
    restriction as the closed form; always an even integer.
    """
    _require_genus(g)
    _require_nonzero(n)
    sign = _sign(n)
    d = gcd(abs(m), abs(n))
    if n % 2 != 0:
        return sign * sum(_alternating_binomial_sum(g, i, abs(n)) for i in range(0, abs(n), d))
    if m % 2 != 0:
        raise UnsupportedParityError(
            f"prefactor-free form undefined for even n = {n} with odd m = {m}; use the coset evaluation"
        )
    half = abs(n) // 2
    return sign * sum(_alternating_binomial_sum(g, h, half) for h in range(0, half, d // 2))


@dataclass(frozen=True)
class SweepCounterexample:
    g: int
    m: int
    n: int
    value: int
    kind: str  # "odd-value" or "route-disagreement"
    detail: str


@dataclass(frozen=True)
class SweepReport:
    cases: int
    skipped: int
    all_even: bool
    counterexamples: tuple[SweepCounterexample, ...] = field(default_factory=tuple)


def parity_sweep(
    g_values: Iterable[int],
    m_values: Iterable[int],
    n_values: Iterable[int],
) -> SweepReport:
    """Evaluate the degree-zero invariant over a grid and check it is always even.

    Cells with m = 0 or n = 0 are skipped and counted.  Wherever the closed
    form is defined (odd n, or both m and n even) it is evaluated alongside
    the coset route and any disagreement is reported as a counterexample
    with full inputs, as is any odd value.  Cells are visited in ascending
    (g, m, n) order, so the report is deterministic.
    """
    gs = sorted(set(g_values))
    ms = sorted(set(m_values))
    ns = sorted(set(n_values))
    cases = 0
    skipped = 0
    counterexamples: list[SweepCounterexample] = []
    all_even = True
    for g in gs:
        _require_genus(g)
        for m in ms:
            for n in ns:
                if m == 0 or n == 0:
                    skipped += 1
                    continue
                cases += 1
                value = _coset_sum(sw_poly_circle_bundle(g, n), m, n)
                if value % 2 != 0:
                    all_even = False
                    counterexamples.append(
                        SweepCounterexample(g, m, n, value, "odd-value", f"value {value} is odd")
                    )
                if n % 2 != 0 or m % 2 == 0:
                    closed = sw4_zero_closed(g, m, n)
                    if closed != value:
                        counterexamples.append(
                            SweepCounterexample(
                                g,
                                m,
                                n,
                                value,
                                "route-disagreement",
                                f"coset {value} != closed {closed}",
                            )
                        )
    return SweepReport(
        cases=cases,
        skipped=skipped,
        all_even=all_even,
        counterexamples=tuple(counterexamples),
    )
