"""Equivalence of shift systems with solution tuples under ring automorphisms.

An automorphism is supplied as explicit variable images together with the
images of its inverse; the constructor verifies both round trips.  Checking
equivalence of two pairs means verifying that the automorphism intertwines
the two shift actions on every variable and sends each entry to a nonzero
scalar multiple of its counterpart.

Invertible matrices act on pairs: g sends (alpha, p) to (g alpha, p o g^{-1}),
and the substitution by g^{-1} witnesses the equivalence.  Composing the
actions of g and h gives the action of g h.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .consistency import CheckFailure, CheckReport, SolutionTuple
from .intlinalg import rational_inverse
from .poly import Poly
from .shifts import ShiftSystem

Matrix = Sequence[Sequence[Fraction | int]]


def _substitution_images(matrix: Sequence[Sequence[Fraction]]) -> tuple[Poly, ...]:
    m = len(matrix)
    images = []
    for row in matrix:
        acc = Poly.zero(m)
        for k, c in enumerate(row):
            if c:
                acc = acc + Poly.variable(m, k) * Fraction(c)
        images.append(acc)
    return tuple(images)


@dataclass(frozen=True)
class AutomorphismSpec:
    """Variable images of a polynomial ring automorphism and of its inverse.

    Both composites are checked to be the identity substitution, so a
    constructed instance is always a genuine automorphism.
    """

    forward: tuple[Poly, ...]
    inverse: tuple[Poly, ...]

    def __post_init__(self):
        m = len(self.forward)
        if m == 0 or len(self.inverse) != m:
            raise ValueError("need matching nonempty forward and inverse images")
        if any(p.nvars != m for p in itertools.chain(self.forward, self.inverse)):
            raise ValueError("images must live in the ring they map")
        for j in range(m):
            var = Poly.variable(m, j)
            if self.forward[j].compose(self.inverse) != var:
                raise ValueError("forward after inverse is not the identity")
            if self.inverse[j].compose(self.forward) != var:
                raise ValueError("inverse after forward is not the identity")

    @property
    def nvars(self) -> int:
        return len(self.forward)

    @classmethod
    def identity(cls, m: int) -> "AutomorphismSpec":
        images = tuple(Poly.variable(m, j) for j in range(m))
        return cls(images, images)

    @classmethod
    def from_matrix(cls, matrix: Matrix) -> "AutomorphismSpec":
        """Substitution u_j -> sum_k matrix[j][k] u_k, for invertible matrix."""
        rows = [[Fraction(c) for c in row] for row in matrix]
        inv = rational_inverse(rows)
        if inv is None:
            raise ValueError("matrix is singular")
        return cls(_substitution_images(rows), _substitution_images(inv))

    def inverted(self) -> "AutomorphismSpec":
        return AutomorphismSpec(self.inverse, self.forward)


def apply_substitution(psi: AutomorphismSpec, p: Poly) -> Poly:
    if p.nvars != psi.nvars:
        raise ValueError("variable count mismatch")
    return p.compose(psi.forward)


def linear_automorphism(g: Matrix) -> AutomorphismSpec:
    """The automorphism witnessing the action of g: substitution by g^{-1}."""
    rows = [[Fraction(c) for c in row] for row in g]
    ginv = rational_inverse(rows)
    if ginv is None:
        raise ValueError("matrix is singular")
    return AutomorphismSpec(_substitution_images(ginv), _substitution_images(rows))


def check_equivalence(
    psi: AutomorphismSpec, a: SolutionTuple, b: SolutionTuple
) -> CheckReport:
    """Does psi carry the pair a onto the pair b?

    Two failure families: "intertwine" at (direction, variable) when psi
    composed with the source shift differs from the target shift composed
    with psi, and "scalar-multiple" at (entry,) when psi of the entry is
    not a nonzero rational multiple of the target entry.
    """
    if a.sys.nvars != psi.nvars or b.sys.nvars != psi.nvars:
        raise ValueError("variable count mismatch")
    if a.sys.nshifts != b.sys.nshifts:
        raise ValueError("shift count mismatch")
    m, n = psi.nvars, a.sys.nshifts
    failures: list[CheckFailure] = []
    for i in range(n):
        col_b = b.sys.column(i)
        for j in range(m):
            lhs = psi.forward[j] - Poly.constant(m, a.sys.alpha[j][i])
            rhs = psi.forward[j].shift(col_b)
            if lhs != rhs:
                failures.append(CheckFailure("intertwine", (i, j), lhs - rhs))
    for i in range(n):
        image = apply_substitution(psi, a.polys[i])
        target = b.polys[i]
        if image.is_zero or target.is_zero:
            if image.is_zero != target.is_zero:
                failures.append(CheckFailure("scalar-multiple", (i,), image - target))
            continue
        c = image.coefficient(image.leading_monomial()) / target.coefficient(
            target.leading_monomial()
        )
        diff = image - target * c
        if not diff.is_zero:
            failures.append(CheckFailure("scalar-multiple", (i,), diff))
    return CheckReport(tuple(failures))


def apply_linear(g: Matrix, sol: SolutionTuple) -> SolutionTuple:
    """Image of the pair under g: alpha becomes g alpha, entries compose
    with the substitution by g^{-1}."""
    rows = [[Fraction(c) for c in row] for row in g]
    m = sol.sys.nvars
    if len(rows) != m or any(len(r) != m for r in rows):
        raise ValueError("matrix must be square of the variable count")
    ginv = rational_inverse(rows)
    if ginv is None:
        raise ValueError("matrix is singular")
    alpha2 = [
        [sum((rows[j][k] * sol.sys.alpha[k][i] for k in range(m)), Fraction(0))
         for i in range(sol.sys.nshifts)]
        for j in range(m)
    ]
    sys2 = ShiftSystem.from_rows(alpha2)
    images = _substitution_images(ginv)
    polys2 = tuple(p.compose(images) for p in sol.polys)
    return SolutionTuple(sys2, polys2)


def find_signed_permutation(
    a: SolutionTuple, b: SolutionTuple, max_vars: int = 8
) -> tuple[tuple[tuple[Fraction, ...], ...], AutomorphismSpec] | None:
    """Search signed permutation matrices g with apply_linear-style action
    carrying a onto b; returns (g, witnessing automorphism) or None."""
    m = a.sys.nvars
    if m != b.sys.nvars or a.sys.nshifts != b.sys.nshifts:
        return None
    if m > max_vars:
        raise ValueError("search space too large; raise max_vars explicitly")
    for perm in itertools.permutations(range(m)):
        for signs in itertools.product((1, -1), repeat=m):
            g = [
                [Fraction(signs[j]) if perm[j] == k else Fraction(0) for k in range(m)]
                for j in range(m)
            ]
            psi = linear_automorphism(g)
            if check_equivalence(psi, a, b).passed:
                return tuple(tuple(row) for row in g), psi
    return None
