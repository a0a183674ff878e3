"""Torus-bundle data model.

A bundle over a genus-g surface is recorded by its monodromy (an ordered list
of 2g matrices in SL(2,Z), acting on column vectors on the left, in the fiber
basis x1 = (1,0), x2 = (0,1)) and its Euler class (m, n) expressed in that
same basis.  From this the two sublattices of the fiber lattice Z^2 that
drive every later computation are derived: the common fixed lattice of the
monodromy and the saturation of the subgroup generated by the vectors
A*x - x.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Any, Sequence

from .exactla import IntMatrix, integer_kernel, stack_columns, stack_rows


class ParseError(ValueError):
    """Raised for syntactically or structurally malformed bundle documents."""


class ValidationError(ValueError):
    """Raised for semantically invalid bundle data (determinant, arity, genus)."""


@dataclass(frozen=True)
class SL2Z:
    """2x2 integer matrix of determinant 1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for x in (self.a, self.b, self.c, self.d):
            if isinstance(x, bool) or not isinstance(x, int):
                raise ValidationError(f"matrix entry {x!r} is not an integer")
        if self.det != 1:
            raise ValidationError(
                f"matrix [[{self.a},{self.b}],[{self.c},{self.d}]] has determinant {self.det}, expected 1"
            )

    @classmethod
    def identity(cls) -> "SL2Z":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "SL2Z":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def is_identity(self) -> bool:
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 1)

    def __mul__(self, other: "SL2Z") -> "SL2Z":
        return SL2Z(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "SL2Z":
        return SL2Z(self.d, -self.b, -self.c, self.a)

    def apply(self, v: tuple[int, int]) -> tuple[int, int]:
        return (self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1])

    def conjugate(self, p: "SL2Z") -> "SL2Z":
        return p * self * p.inverse()

    def to_matrix(self) -> IntMatrix:
        return IntMatrix([[self.a, self.b], [self.c, self.d]])

    def minus_identity(self) -> IntMatrix:
        return IntMatrix([[self.a - 1, self.b], [self.c, self.d - 1]])

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]


@dataclass(frozen=True)
class Lattice:
    """Saturated sublattice of Z^2 given by a primitive basis."""

    rank: int
    basis: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.rank != len(self.basis):
            raise ValueError("rank disagrees with basis size")
        for v in self.basis:
            if v == (0, 0):
                raise ValueError("zero vector in lattice basis")
            if gcd(abs(v[0]), abs(v[1])) != 1:
                raise ValueError(f"basis vector {v} is not primitive")

    def contains(self, v: tuple[int, int]) -> bool:
        """Exact membership of an integer vector in the lattice."""
        if v == (0, 0):
            return True
        if self.rank == 0:
            return False
        if self.rank == 2:
            return True
        (z1, z2) = self.basis[0]
        # multiples of the primitive generator are exactly the parallel vectors
        return v[0] * z2 - v[1] * z1 == 0

    def spans_same_line(self, other: "Lattice") -> bool:
        if self.rank != 1 or other.rank != 1:
            return False
        (a1, a2), (b1, b2) = self.basis[0], other.basis[0]
        return a1 * b2 - a2 * b1 == 0


@dataclass(frozen=True)
class TorusBundle:
    """Orientable torus bundle over a genus-g surface, g >= 2."""

    genus: int
    monodromy: tuple[SL2Z, ...]
    euler: tuple[int, int]

    def __post_init__(self):
        if isinstance(self.genus, bool) or not isinstance(self.genus, int):
            raise ValidationError(f"genus {self.genus!r} is not an integer")
        if self.genus < 2:
            raise ValidationError(f"genus {self.genus} is below the supported range (need g >= 2)")
        object.__setattr__(self, "monodromy", tuple(self.monodromy))
        if len(self.monodromy) != 2 * self.genus:
            raise ValidationError(
                f"monodromy has {len(self.monodromy)} matrices, expected 2*genus = {2 * self.genus}"
            )
        for i, m in enumerate(self.monodromy):
            if not isinstance(m, SL2Z):
                raise ValidationError(f"monodromy[{i}] is not an SL2Z value")
        m, n = self.euler
        for x in (m, n):
            if isinstance(x, bool) or not isinstance(x, int):
                raise ValidationError(f"euler entry {x!r} is not an integer")
        object.__setattr__(self, "euler", (m, n))

    @property
    def is_flat(self) -> bool:
        return self.euler == (0, 0)

    @property
    def is_principal(self) -> bool:
        return all(m.is_identity for m in self.monodromy)

    def flat_twin(self) -> "TorusBundle":
        """Same monodromy with the Euler class zeroed."""
        return TorusBundle(self.genus, self.monodromy, (0, 0))

    def surface_relation_holds(self) -> bool:
        """Whether the product of monodromy commutators is the identity.

        True exactly when the matrix tuple defines a homomorphism from the
        base surface group, i.e. when it is the monodromy of an honest
        bundle rather than a formal tuple.
        """
        acc = SL2Z.identity()
        for i in range(self.genus):
            a, b = self.monodromy[2 * i], self.monodromy[2 * i + 1]
            acc = acc * a * b * a.inverse() * b.inverse()
        return acc.is_identity

    def to_dict(self) -> dict[str, Any]:
        return {
            "genus": self.genus,
            "monodromy": [m.rows() for m in self.monodromy],
            "euler": [self.euler[0], self.euler[1]],
        }


def _require_int(value: Any, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"field {field} must be an integer, got {value!r}")
    return value


def bundle_from_dict(obj: Any) -> TorusBundle:
    """Build a validated bundle from a parsed document object."""
    if not isinstance(obj, dict):
        raise ParseError("bundle document must be an object with keys genus, monodromy, euler")
    for key in ("genus", "monodromy", "euler"):
        if key not in obj:
            raise ParseError(f"missing field {key}")
    genus = _require_int(obj["genus"], "genus")

    raw_monodromy = obj["monodromy"]
    if not isinstance(raw_monodromy, list):
        raise ParseError("field monodromy must be an array of 2x2 matrices")
    matrices = []
    for i, entry in enumerate(raw_monodromy):
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or any(not isinstance(row, list) or len(row) != 2 for row in entry)
        ):
            raise ParseError(f"monodromy[{i}] must be a 2x2 array [[a,b],[c,d]]")
        a = _require_int(entry[0][0], f"monodromy[{i}][0][0]")
        b = _require_int(entry[0][1], f"monodromy[{i}][0][1]")
        c = _require_int(entry[1][0], f"monodromy[{i}][1][0]")
        d = _require_int(entry[1][1], f"monodromy[{i}][1][1]")
        try:
            matrices.append(SL2Z(a, b, c, d))
        except ValidationError as exc:
            raise ValidationError(f"monodromy[{i}]: {exc}") from None

    raw_euler = obj["euler"]
    if not isinstance(raw_euler, list) or len(raw_euler) != 2:
        raise ParseError("field euler must be an array [m, n]")
    euler = (_require_int(raw_euler[0], "euler[0]"), _require_int(raw_euler[1], "euler[1]"))

    return TorusBundle(genus, tuple(matrices), euler)


def parse_bundle(text: str) -> TorusBundle:
    """Parse the bundle file format.

    The format is a JSON object {"genus": g, "monodromy": [[[a,b],[c,d]], ...],
    "euler": [m, n]} with exactly 2g monodromy matrices, each of determinant
    1, and unbounded integers throughout.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid bundle document: {exc}") from None
    return bundle_from_dict(obj)


def serialize_bundle(b: TorusBundle, indent: int | None = None) -> str:
    """Render a bundle in the same format parse_bundle accepts."""
    return json.dumps(b.to_dict(), indent=indent)


def _lattice_from_kernel_columns(basis_matrix: IntMatrix) -> Lattice:
    columns = [(col[0], col[1]) for col in basis_matrix.columns()]
    return Lattice(rank=len(columns), basis=tuple(columns))


def fixed_sublattice(b: TorusBundle) -> Lattice:
    """Saturated lattice of vectors fixed by every monodromy matrix.

    Rank 2 exactly for trivial monodromy; rank >= 1 exactly when the bundle
    supports a free circle action preserving fibers.
    """
    stacked = stack_rows([m.minus_identity() for m in b.monodromy])
    return _lattice_from_kernel_columns(integer_kernel(stacked))


def relation_sublattice(b: TorusBundle) -> Lattice:
    """Saturation of the subgroup of Z^2 generated by the vectors A*x - x.

    The generators are the columns of the matrices A_i - I.  Rank 0 exactly
    for trivial monodromy; rank 1 exactly for nontrivial monodromy with a
    common fixed vector, in which case the lattice spans the same line as
    fixed_sublattice.
    """
    span = stack_columns([m.minus_identity() for m in b.monodromy])
    orthogonal = integer_kernel(span.transpose())
    saturation = integer_kernel(orthogonal.transpose())
    return _lattice_from_kernel_columns(saturation)


def conjugate_bundle(b: TorusBundle, p: SL2Z) -> TorusBundle:
    """Change of fiber basis: conjugate the monodromy by p and push the Euler class through p."""
    return TorusBundle(
        b.genus,
        tuple(m.conjugate(p) for m in b.monodromy),
        p.apply(b.euler),
    )
