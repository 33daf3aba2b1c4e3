"""Checkers for the shift-system consistency equations.

A tuple (p_1, ..., p_n) is checked against a ShiftSystem either in the
symmetric form (binary + ternary product identities) or in the
non-symmetric form; applying the half-step of each direction to its own
entry translates between the two.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Poly
from .shifts import ShiftSystem, half_shift


@dataclass(frozen=True)
class CheckFailure:
    relation: str
    indices: tuple[int, ...]
    witness: Poly | None
    one_based: bool = True  # entry indices display 1-based, grid coordinates as-is

    def describe(self) -> str:
        offset = 1 if self.one_based else 0
        where = ",".join(str(i + offset) for i in self.indices)
        tail = "" if self.witness is None else f": {self.witness}"
        return f"{self.relation} fails at ({where}){tail}"


@dataclass(frozen=True)
class CheckReport:
    failures: tuple[CheckFailure, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def describe(self) -> str:
        if self.passed:
            return "all checks passed"
        return "\n".join(f.describe() for f in self.failures)

    def merged(self, other: "CheckReport") -> "CheckReport":
        return CheckReport(self.failures + other.failures)


@dataclass(frozen=True)
class SolutionTuple:
    sys: ShiftSystem
    polys: tuple[Poly, ...]

    def __post_init__(self):
        if len(self.polys) != self.sys.nshifts:
            raise ValueError("need one polynomial per shift direction")
        if any(p.nvars != self.sys.nvars for p in self.polys):
            raise ValueError("variable count mismatch")
        if any(p.is_zero for p in self.polys):
            raise ValueError("entries must be nonzero")

    @property
    def is_monic(self) -> bool:
        return all(p.is_monic for p in self.polys)


def check_binary(sol: SolutionTuple) -> CheckReport:
    """Pairwise identity: for i != j the product of the two entries agrees
    after shifting each by plus or minus half the other's direction."""
    sys, p = sol.sys, sol.polys
    failures = []
    for i in range(sys.nshifts):
        for j in range(i + 1, sys.nshifts):
            lhs = half_shift(sys, j, +1, p[i]) * half_shift(sys, i, +1, p[j])
            rhs = half_shift(sys, j, -1, p[i]) * half_shift(sys, i, -1, p[j])
            diff = lhs - rhs
            if not diff.is_zero:
                failures.append(CheckFailure("binary", (i, j), diff))
    return CheckReport(tuple(failures))


def check_ternary(sol: SolutionTuple) -> CheckReport:
    """Triple identity on p_k over the half-sums of two other directions.

    Vacuously true when the system has fewer than three directions.
    """
    sys, p = sol.sys, sol.polys
    failures = []
    for k in range(sys.nshifts):
        if p[k].is_constant:  # both sides are p_k squared
            continue
        for i in range(sys.nshifts):
            if i == k:
                continue
            for j in range(i + 1, sys.nshifts):
                if j == k:
                    continue
                plus = [(a + b) / 2 for a, b in zip(sys.column(i), sys.column(j))]
                minus = [(a - b) / 2 for a, b in zip(sys.column(i), sys.column(j))]
                lhs = p[k].shift(plus) * p[k].shift([-v for v in plus])
                rhs = p[k].shift(minus) * p[k].shift([-v for v in minus])
                diff = lhs - rhs
                if not diff.is_zero:
                    failures.append(CheckFailure("ternary", (i, j, k), diff))
    return CheckReport(tuple(failures))


def check_nonsymmetric(sol: SolutionTuple) -> CheckReport:
    """The non-symmetric form of the equations, checked by direct expansion."""
    sys, p = sol.sys, sol.polys
    failures = []
    for i in range(sys.nshifts):
        for j in range(i + 1, sys.nshifts):
            both = [a + b for a, b in zip(sys.column(i), sys.column(j))]
            lhs = (p[i] * p[j]).shift(both)
            rhs = p[i].shift(sys.column(i)) * p[j].shift(sys.column(j))
            diff = lhs - rhs
            if not diff.is_zero:
                failures.append(CheckFailure("nonsym-binary", (i, j), diff))
    for j in range(sys.nshifts):
        if p[j].is_constant:  # both sides are p_j squared
            continue
        for i in range(sys.nshifts):
            if i == j:
                continue
            for k in range(i + 1, sys.nshifts):
                if k == j:
                    continue
                both = [a + b for a, b in zip(sys.column(i), sys.column(k))]
                lhs = p[j].shift(both) * p[j]
                rhs = p[j].shift(sys.column(i)) * p[j].shift(sys.column(k))
                diff = lhs - rhs
                if not diff.is_zero:
                    failures.append(CheckFailure("nonsym-ternary", (i, k, j), diff))
    return CheckReport(tuple(failures))


def symmetrize(sol: SolutionTuple) -> SolutionTuple:
    """Shift entry i by half its own direction; takes the non-symmetric form
    of the equations to the symmetric one."""
    return SolutionTuple(
        sol.sys,
        tuple(half_shift(sol.sys, i, +1, p) for i, p in enumerate(sol.polys)),
    )


def unsymmetrize(sol: SolutionTuple) -> SolutionTuple:
    return SolutionTuple(
        sol.sys,
        tuple(half_shift(sol.sys, i, -1, p) for i, p in enumerate(sol.polys)),
    )
