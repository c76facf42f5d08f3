"""Integral lattices presented by Gram matrices, with exact operations.

A lattice here is a free Z-module of finite rank together with an
integer-valued symmetric bilinear form, stored as its Gram matrix in a
distinguished basis. Vectors are integer coordinate tuples in that basis.
All arithmetic is exact; degenerate forms are allowed (the hyperbolic
plane has isotropic vectors, and nothing here needs nondegeneracy).

Sign conventions for the classical building blocks live in
:mod:`epwlat.catalog`; this module is agnostic.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterable, NamedTuple, Sequence, Union

from . import intmat

Coords = Sequence[int]


@dataclass(frozen=True)
class Lattice:
    """A free Z-module with an integral symmetric bilinear form."""

    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.gram)
        rows = tuple(tuple(operator.index(x) for x in row) for row in self.gram)
        if any(len(row) != n for row in rows):
            raise ValueError("Gram matrix must be square")
        if not intmat.is_symmetric(rows):
            raise ValueError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", rows)

    @property
    def rank(self) -> int:
        return len(self.gram)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "Lattice":
        return cls(tuple(tuple(row) for row in rows))

    def basis_vector(self, i: int) -> tuple[int, ...]:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def vector(self, coords: Coords) -> "LatticeVector":
        return LatticeVector(self, tuple(coords))


@dataclass(frozen=True)
class LatticeVector:
    """Integer coordinates of an element, bound to its ambient lattice."""

    lattice: Lattice
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(operator.index(x) for x in self.coords)
        if len(coords) != self.lattice.rank:
            raise ValueError("coordinate length does not match lattice rank")
        object.__setattr__(self, "coords", coords)


class Signature(NamedTuple):
    """Inertia counts of the form: positive, negative and zero directions."""

    positive: int
    negative: int
    zero: int


VectorLike = Union[LatticeVector, Coords]


def _coords(lattice: Lattice, v: VectorLike) -> tuple[int, ...]:
    if isinstance(v, LatticeVector):
        if v.lattice != lattice:
            raise ValueError("vector belongs to a different lattice")
        return v.coords
    coords = tuple(operator.index(x) for x in v)
    if len(coords) != lattice.rank:
        raise ValueError(
            f"vector of length {len(coords)} in a rank-{lattice.rank} lattice"
        )
    return coords


@dataclass(frozen=True)
class Isometry:
    """An integer matrix preserving a lattice's bilinear form.

    ``matrix[i][j]`` is the i-th coordinate of the image of the j-th basis
    vector, so vectors transform by ``apply`` (matrix times column).
    """

    lattice: Lattice
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.lattice.rank
        rows = tuple(tuple(operator.index(x) for x in row) for row in self.matrix)
        if len(rows) != n or any(len(row) != n for row in rows):
            raise ValueError("isometry matrix has wrong dimensions")
        object.__setattr__(self, "matrix", rows)
        if not is_isometry(self.lattice, rows):
            raise ValueError("matrix does not preserve the Gram matrix")
        if intmat.det(rows) not in (1, -1):
            raise ValueError("isometry must have determinant +-1")

    def apply(self, v: VectorLike) -> tuple[int, ...]:
        return tuple(intmat.mat_vec(self.matrix, _coords(self.lattice, v)))

    __call__ = apply

    def compose(self, other: "Isometry") -> "Isometry":
        if other.lattice != self.lattice:
            raise ValueError("isometries act on different lattices")
        return Isometry(self.lattice, tuple(
            tuple(row) for row in intmat.mat_mul(self.matrix, other.matrix)
        ))

    def is_involution(self) -> bool:
        n = self.lattice.rank
        return intmat.mat_mul(self.matrix, self.matrix) == intmat.identity(n)


def product(lattice: Lattice, x: VectorLike, y: VectorLike) -> int:
    """The bilinear form x^T * gram * y, exactly."""
    cx = _coords(lattice, x)
    cy = _coords(lattice, y)
    return sum(cx[i] * lattice.gram[i][j] * cy[j]
               for i in range(lattice.rank) for j in range(lattice.rank))


def discriminant(lattice: Lattice) -> int:
    """det(gram); the empty lattice has discriminant 1."""
    return intmat.det(lattice.gram)


def signature(lattice: Lattice) -> Signature:
    """Sylvester inertia, by exact rational congruence diagonalization."""
    return Signature(*intmat.inertia(lattice.gram))


def is_even(lattice: Lattice) -> bool:
    """True iff every vector has even self-pairing, i.e. the diagonal is even."""
    return all(lattice.gram[i][i] % 2 == 0 for i in range(lattice.rank))


def reflection(lattice: Lattice, e: VectorLike) -> Isometry:
    """The reflection x -> x - (2(x,e)/(e,e)) e in a (+-2)-vector e.

    For (e,e) = -2 this is x -> x + (x,e)e; for (e,e) = 2 it is
    x -> x - (x,e)e. Only (e,e) in {2, -2} is supported, where the image
    is automatically integral.
    """
    ce = _coords(lattice, e)
    ee = product(lattice, ce, ce)
    if ee not in (2, -2):
        raise ValueError(f"reflection requires (e,e) in {{2, -2}}, got {ee}")
    cols = []
    for j in range(lattice.rank):
        basis = lattice.basis_vector(j)
        xe = product(lattice, basis, ce)
        num = 2 * xe
        if num % ee:
            raise ValueError("reflection image is not integral")
        f = num // ee
        cols.append(tuple(basis[i] - f * ce[i] for i in range(lattice.rank)))
    rows = tuple(zip(*cols))
    return Isometry(lattice, rows)


def negated_reflection(lattice: Lattice, r: VectorLike) -> Isometry:
    """The involution z -> -z + (z,r) r for a vector r with (r,r) = 2.

    Equal to the negative of ``reflection(lattice, r)``: it fixes r and
    acts as -1 on the orthogonal complement of r.
    """
    cr = _coords(lattice, r)
    rr = product(lattice, cr, cr)
    if rr != 2:
        raise ValueError(f"negated reflection requires (r,r) = 2, got {rr}")
    cols = []
    for j in range(lattice.rank):
        basis = lattice.basis_vector(j)
        zr = product(lattice, basis, cr)
        cols.append(tuple(-basis[i] + zr * cr[i] for i in range(lattice.rank)))
    rows = tuple(zip(*cols))
    return Isometry(lattice, rows)


def orthogonal_complement(lattice: Lattice, v: VectorLike) -> list[tuple[int, ...]]:
    """Basis of the saturated sublattice {x : (x,v) = 0}.

    The pairing against v is the integer linear functional x -> x . (gram v),
    and the integer kernel of a linear functional is always saturated.
    """
    cv = _coords(lattice, v)
    if not any(cv):
        raise ValueError("orthogonal complement of the zero vector")
    w = intmat.mat_vec(lattice.gram, cv)
    if not any(w):
        # v pairs to zero with everything (radical direction)
        return [lattice.basis_vector(i) for i in range(lattice.rank)]
    return intmat.kernel([w], lattice.rank)


def induced_gram(lattice: Lattice, basis: Sequence[VectorLike]) -> Lattice:
    """The sublattice spanned by ``basis`` as an abstract lattice, B^T G B."""
    vecs = [_coords(lattice, b) for b in basis]
    if intmat.rank(vecs) != len(vecs):
        raise ValueError("basis vectors are linearly dependent")
    gram = tuple(
        tuple(product(lattice, a, b) for b in vecs) for a in vecs
    )
    return Lattice(gram)


def saturation(lattice: Lattice, basis: Sequence[VectorLike]) -> list[tuple[int, ...]]:
    """Basis of (Q-span of basis) intersected with the lattice.

    Computed by two integer kernel extractions: first the functionals
    vanishing on the span, then the joint kernel of those functionals.
    The input spans a finite-index sublattice of the output.
    """
    vecs = [list(_coords(lattice, b)) for b in basis]
    if intmat.rank(vecs) != len(vecs):
        raise ValueError("basis vectors are linearly dependent")
    functionals = intmat.kernel(vecs, lattice.rank)
    if not functionals:
        return [lattice.basis_vector(i) for i in range(lattice.rank)]
    return intmat.kernel([list(f) for f in functionals], lattice.rank)


def is_primitive(lattice: Lattice, v: VectorLike) -> bool:
    """True iff v is not an integer multiple > 1 of a lattice vector."""
    cv = _coords(lattice, v)
    if not any(cv):
        raise ValueError("primitivity of the zero vector is undefined")
    return gcd(*cv) == 1


def sublattice_discriminant_test(d_sub: int, d_sup: int) -> bool:
    """Necessary condition for a finite-index inclusion with given discriminants.

    A finite-index sublattice satisfies d_sub = index^2 * d_sup, so this
    returns True iff d_sup divides d_sub and the quotient is the square of
    a positive integer.
    """
    if d_sup == 0:
        raise ValueError("discriminant of the superlattice must be nonzero")
    if d_sub % d_sup:
        return False
    q = d_sub // d_sup
    return q >= 1 and isqrt(q) ** 2 == q


def direct_sum(a: Lattice, b: Lattice) -> Lattice:
    """Orthogonal direct sum: block-diagonal Gram matrix."""
    na, nb = a.rank, b.rank
    rows = []
    for i in range(na):
        rows.append(tuple(a.gram[i]) + (0,) * nb)
    for i in range(nb):
        rows.append((0,) * na + tuple(b.gram[i]))
    return Lattice(tuple(rows))


def rescale(lattice: Lattice, a: int) -> Lattice:
    """The twisted lattice L(a): same module, form multiplied by a."""
    if a == 0:
        raise ValueError("rescaling factor must be nonzero")
    return Lattice(tuple(tuple(a * x for x in row) for row in lattice.gram))


def is_isometry(lattice: Lattice, matrix: Sequence[Sequence[int]]) -> bool:
    """True iff M^T G M = G exactly."""
    n = lattice.rank
    rows = [list(row) for row in matrix]
    if len(rows) != n or any(len(row) != n for row in rows):
        raise ValueError("matrix dimensions do not match the lattice rank")
    g = [list(row) for row in lattice.gram]
    mt = intmat.transpose(rows)
    return intmat.mat_mul(intmat.mat_mul(mt, g), rows) == g
