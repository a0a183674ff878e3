"""Symplectic classification of torus bundles.

The governing criterion: the total space carries a symplectic structure if
and only if the fiber class is nonzero in real second homology.  That
condition is decided purely from monodromy and Euler class:

  * trivial monodromy: nonzero fiber class exactly for Euler class (0, 0);
  * no common fixed vector of the monodromy: always nonzero;
  * common fixed vector with primitive generator z: nonzero exactly when
    the Euler class is an integer multiple of z.

Every verdict is cross-checked against two independent oracles: the first
Betti number of the flat twin (adding the Euler relation must not drop the
rank) and the spectral-sequence rank test.  The module also carries the
invariant-form existence test on products of a surface with a circle, via
the cup-product annihilator of a first Chern class and the Thurston norm,
which vanishes exactly on classes pulled back from the surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bundle import Lattice, TorusBundle, fixed_sublattice
from .exactla import IntMatrix, integer_kernel
from .homology import betti, h1_total_space
from .spectral import fiber_class_via_spectral


class InternalInconsistencyError(RuntimeError):
    """An oracle disagreed with the rule-based verdict: an implementation bug, never a valid outcome."""


@dataclass(frozen=True)
class RationaleEntry:
    rule: str
    statement: str


@dataclass(frozen=True)
class CrossChecks:
    """Agreement flags for the two verdict oracles.

    The spectral flag is None when the monodromy tuple violates the surface
    relation, in which case no fibration realizes it and the spectral
    sequence does not apply.
    """

    betti_oracle: bool
    spectral_oracle: bool | None

    def all_pass(self) -> bool:
        return self.betti_oracle and self.spectral_oracle is not False


@dataclass(frozen=True)
class ClassificationReport:
    b1: int
    b2: int
    has_circle_action: bool
    fiber_class_nonzero: bool
    symplectic: bool
    rationale: tuple[RationaleEntry, ...]
    cross_checks: CrossChecks


@dataclass(frozen=True)
class ProductH1Class:
    """Degree-1 class on (surface x circle): circle coefficient plus 2g base coefficients."""

    circle_coeff: int
    base_coeffs: tuple[int, ...]


@dataclass(frozen=True)
class ProductH2Class:
    """Degree-2 class on (surface x circle): volume coefficient plus 2g torus-class coefficients."""

    volume_coeff: int
    torus_coeffs: tuple[int, ...]


def _fiber_class_from_fixed(b: TorusBundle, fixed: Lattice) -> bool:
    if fixed.rank == 2:
        # trivial monodromy: only the product bundle keeps the fiber class
        return b.euler == (0, 0)
    if fixed.rank == 0:
        return True
    return fixed.contains(b.euler)


def fiber_class_nonzero(b: TorusBundle) -> bool:
    """Whether the fiber class is nonzero in real second homology."""
    return _fiber_class_from_fixed(b, fixed_sublattice(b))


def _rationale(b: TorusBundle, fixed: Lattice, verdict: bool) -> tuple[RationaleEntry, ...]:
    entries = []
    if fixed.rank == 2:
        m, n = b.euler
        if (m, n) == (0, 0):
            entries.append(
                RationaleEntry(
                    "trivial-bundle",
                    "trivial monodromy and zero Euler class: the product bundle, fiber class nonzero",
                )
            )
        elif m != 0 and n != 0:
            entries.append(
                RationaleEntry(
                    "principal-both-euler-components-nonzero",
                    "principal bundle with m*n != 0: the degree-zero invariant is even, "
                    "so no structure of unit invariant exists and the bundle is not symplectic",
                )
            )
        else:
            entries.append(
                RationaleEntry(
                    "principal-one-euler-component-zero",
                    "nontrivial principal bundle with Euler class on an axis: the quotient "
                    "circle bundle cannot fiber over the circle, so the bundle is not symplectic",
                )
            )
    elif fixed.rank == 0:
        entries.append(
            RationaleEntry(
                "no-fiber-circle-action",
                "no nonzero vector is fixed by all monodromy matrices: the rank of E11 is "
                "Euler-class independent and forces a nonzero fiber class",
            )
        )
    else:
        z = fixed.basis[0]
        if verdict:
            entries.append(
                RationaleEntry(
                    "euler-multiple-of-orbit-class",
                    f"circle action with orbit class z = {z}; the Euler class {b.euler} is an "
                    "integer multiple of z, so the fiber class survives",
                )
            )
        else:
            entries.append(
                RationaleEntry(
                    "euler-not-multiple-of-orbit-class",
                    f"circle action with orbit class z = {z}; the Euler class {b.euler} is not a "
                    "multiple of z, the first Betti number drops and the fiber class dies",
                )
            )
    entries.append(
        RationaleEntry(
            "symplectic-iff-fiber-class",
            "a torus bundle over a genus >= 2 surface is symplectic exactly when the fiber "
            "class is nonzero in real second homology",
        )
    )
    return tuple(entries)


def is_symplectic(b: TorusBundle) -> ClassificationReport:
    """Full classification with rationale and oracle cross-checks.

    Raises InternalInconsistencyError if any applicable oracle disagrees
    with the rule-based verdict.
    """
    fixed = fixed_sublattice(b)
    verdict = _fiber_class_from_fixed(b, fixed)
    b1, b2 = betti(b)

    twin_b1 = h1_total_space(b.flat_twin()).free_rank
    betti_oracle_value = twin_b1 == b1
    betti_ok = betti_oracle_value == verdict
    if not betti_ok:
        raise InternalInconsistencyError(
            f"betti oracle ({betti_oracle_value}) disagrees with rule verdict ({verdict}) on {b.to_dict()}"
        )

    spectral_ok: bool | None
    if b.surface_relation_holds():
        spectral_value = fiber_class_via_spectral(b)
        spectral_ok = spectral_value == verdict
        if not spectral_ok:
            raise InternalInconsistencyError(
                f"spectral oracle ({spectral_value}) disagrees with rule verdict ({verdict}) on {b.to_dict()}"
            )
    else:
        spectral_ok = None

    return ClassificationReport(
        b1=b1,
        b2=b2,
        has_circle_action=fixed.rank >= 1,
        fiber_class_nonzero=verdict,
        symplectic=verdict,
        rationale=_rationale(b, fixed, verdict),
        cross_checks=CrossChecks(betti_oracle=betti_ok, spectral_oracle=spectral_ok),
    )


def _intersection_pairing_times(kvec: Sequence[int]) -> list[int]:
    """Apply the standard symplectic intersection form of the surface to kvec."""
    out = [0] * len(kvec)
    for i in range(0, len(kvec), 2):
        out[i] = kvec[i + 1]
        out[i + 1] = -kvec[i]
    return out


def cup_product_annihilator(g: int, c1: ProductH2Class) -> tuple[tuple[int, ...], ...]:
    """Basis of the subspace of degree-1 classes cup-killing c1 on (surface x circle).

    Coordinates are the 2g surface classes followed by the circle class.
    The cup pairing of x against c1 is x_base . J . kvec + x_circle * n with
    J the intersection form, so the subspace is the saturated kernel of one
    linear functional: dimension 2g when the functional is nonzero, 2g + 1
    when c1 pairs to zero.
    """
    if g < 2:
        raise ValueError(f"genus {g} is below the supported range (need g >= 2)")
    kvec = tuple(c1.torus_coeffs)
    if len(kvec) != 2 * g:
        raise ValueError(f"expected 2g = {2 * g} torus coefficients, got {len(kvec)}")
    functional = _intersection_pairing_times(kvec) + [c1.volume_coeff]
    kernel = integer_kernel(IntMatrix([functional]))
    return tuple(kernel.columns())


def invariant_symplectic_exists(g: int, c1: ProductH2Class) -> bool:
    """Invariant-form existence on a circle bundle over (surface x circle).

    The Thurston norm vanishes exactly on classes pulled back from the
    surface, so a usable class exists precisely when the cup-product
    annihilator is not the pullback subspace, i.e. contains a class with
    nonzero circle component.
    """
    basis = cup_product_annihilator(g, c1)
    return any(v[-1] != 0 for v in basis)


def thurston_norm_product(g: int, x: ProductH1Class) -> int:
    """Thurston norm of a degree-1 class on (surface x circle): |k| * (2g - 2).

    Depends only on the circle coefficient k; pullbacks from the surface
    have norm zero.
    """
    if g < 2:
        raise ValueError(f"genus {g} is below the supported range (need g >= 2)")
    if len(x.base_coeffs) != 2 * g:
        raise ValueError(f"expected 2g = {2 * g} base coefficients, got {len(x.base_coeffs)}")
    return abs(x.circle_coeff) * (2 * g - 2)
