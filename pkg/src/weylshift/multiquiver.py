"""Solutions attached to integer matrices with sign-separated rows.

Each row of an integer matrix beta may carry at most one positive and one
negative entry.  Row j, column i contributes a falling or rising product
of integer shifts of u_j to entry i; the resulting tuple satisfies the
non-symmetric consistency equations, and its symmetrized form factors by
residue classes of the linear shifts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .consistency import CheckFailure, CheckReport, SolutionTuple
from .orbital import FactoredPoly, FactoredSolution, OrbitalPiece
from .poly import Poly
from .shifts import OrbitId, ShiftSystem, stabilizer_lattice


def validate_beta(beta) -> CheckReport:
    """Shape and sign check: integer entries, each row at most one positive
    and at most one negative entry."""
    failures = []
    if not beta or any(len(row) != len(beta[0]) for row in beta):
        return CheckReport((CheckFailure("beta-shape", (), None),))
    for j, row in enumerate(beta):
        if any(not isinstance(v, int) for v in row):
            failures.append(CheckFailure("beta-integer", (j,), None))
            continue
        pos = sum(1 for v in row if v > 0)
        neg = sum(1 for v in row if v < 0)
        if pos > 1 or neg > 1:
            failures.append(CheckFailure("beta-signs", (j,), None))
    return CheckReport(tuple(failures))


def system_of(beta) -> ShiftSystem:
    return ShiftSystem.from_rows([[Fraction(v) for v in row] for row in beta])


def _require_valid(beta) -> None:
    report = validate_beta(beta)
    if not report.passed:
        raise ValueError("invalid matrix: " + report.describe())


def build_solution(beta) -> SolutionTuple:
    """Entry i is the product over rows j of an integer-shift run in u_j:
    u_j (u_j + 1) ... (u_j + b - 1) for b > 0, the empty product for b = 0,
    and (u_j - 1) ... (u_j - |b|) for b < 0."""
    _require_valid(beta)
    sys = system_of(beta)
    m, n = sys.nvars, sys.nshifts
    entries = []
    for i in range(n):
        acc = Poly.one(m)
        for j in range(m):
            b = beta[j][i]
            uj = Poly.variable(m, j)
            if b > 0:
                for t in range(b):
                    acc = acc * (uj + t)
            elif b < 0:
                for t in range(1, -b + 1):
                    acc = acc * (uj - t)
        entries.append(acc)
    return SolutionTuple(sys, tuple(entries))


def _run_factors(m: int, j: int, b: int) -> list[Poly]:
    """Linear factors of the symmetrized run for entry (j, i) with value b:
    (u_j - w)(u_j - w + 1) ... (u_j + w) where w = (|b| - 1)/2."""
    if b == 0:
        return []
    w = Fraction(abs(b) - 1, 2)
    uj = Poly.variable(m, j)
    return [uj - (-w + t) for t in range(abs(b))]


def symmetrized_solution(beta) -> FactoredSolution:
    """The symmetrized tuple, built directly from centered runs.

    Agrees with symmetrize(build_solution(beta)) after shifting every
    variable by one half; the runs here are centered around u_j instead of
    starting at it, which keeps the linear factors residue-aligned.
    """
    _require_valid(beta)
    sys = system_of(beta)
    m, n = sys.nvars, sys.nshifts
    entries = []
    for i in range(n):
        factors: list[tuple[Poly, int]] = []
        for j in range(m):
            for lin in _run_factors(m, j, beta[j][i]):
                factors.append((lin, 1))
        entries.append(FactoredPoly.from_factors(m, _collapse(factors)))
    return FactoredSolution(sys, tuple(entries))


def _collapse(factors):
    merged: dict[Poly, int] = {}
    order = []
    for q, mult in factors:
        if q not in merged:
            merged[q] = 0
            order.append(q)
        merged[q] += mult
    return [(q, merged[q]) for q in order]


@dataclass(frozen=True)
class ResidueFamily:
    """Orbital pieces contributed by one row, one per residue class."""

    row: int
    modulus: int
    pieces: tuple[OrbitalPiece, ...]
    one_sided: bool


def factor_by_residue(beta, allow_single: bool = False) -> list[OrbitalPiece]:
    """Orbital pieces of the symmetrized solution, grouped arithmetically.

    For row j with nonzero entries the shifts of u_j generated by the
    columns are the multiples of gamma_j = gcd of the row; a linear factor
    (u_j - l) of entry i sits on the orbit labelled by (l - beta[j][i]/2)
    mod gamma_j.  Rows with a single nonzero entry yield one-sided
    singleton pieces and are rejected unless allow_single is set; zero
    rows are always rejected.
    """
    return [p for fam in residue_families(beta, allow_single) for p in fam.pieces]


def residue_families(beta, allow_single: bool = False) -> list[ResidueFamily]:
    _require_valid(beta)
    sys = system_of(beta)
    m, n = sys.nvars, sys.nshifts
    full = tuple(range(n))
    families = []
    for j in range(m):
        nonzero = [i for i in range(n) if beta[j][i]]
        if not nonzero:
            raise ValueError(f"row {j + 1} is zero; it contributes no solution data")
        one_sided = len(nonzero) == 1
        if one_sided and not allow_single:
            raise ValueError(
                f"row {j + 1} has a single nonzero entry; its pieces are one-sided "
                "(pass allow_single=True to include them)"
            )
        gamma = 0
        for i in nonzero:
            gamma = gcd(gamma, abs(beta[j][i]))
        # class label -> entry index -> linear factors
        classes: dict[Fraction, dict[int, list[Poly]]] = {}
        order: list[Fraction] = []
        for i in nonzero:
            half = Fraction(beta[j][i], 2)
            for lin in _run_factors(m, j, beta[j][i]):
                root = -lin.coefficient((0,) * m)
                label = (root - half) % gamma
                if label not in classes:
                    classes[label] = {}
                    order.append(label)
                classes[label].setdefault(i, []).append(lin)
        pieces = []
        for label in sorted(order):
            bucket = classes[label]
            entries = []
            anchor: Poly | None = None
            for i in range(n):
                factors = [(q, 1) for q in bucket.get(i, [])]
                entries.append(FactoredPoly.from_factors(m, _collapse(factors)))
                if anchor is None and i in bucket:
                    root = -bucket[i][0].coefficient((0,) * m)
                    anchor = Poly.variable(m, j) - (root - Fraction(beta[j][i], 2))
            assert anchor is not None
            orbit = OrbitId(anchor, full, stabilizer_lattice(sys, anchor, full))
            pieces.append(OrbitalPiece(orbit, FactoredSolution(sys, tuple(entries))))
        families.append(ResidueFamily(j, gamma, tuple(pieces), one_sided))
    return families


def expected_piece_count(beta) -> int:
    """Sum over rows of the gcd of the row's nonzero entries."""
    total = 0
    for row in beta:
        g = 0
        for v in row:
            g = gcd(g, abs(v))
        total += g
    return total
