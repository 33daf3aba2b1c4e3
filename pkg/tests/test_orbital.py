from fractions import Fraction

import pytest

from weylshift.orbital import (
    FactoredPoly,
    FactoredSolution,
    OrbitalPiece,
    StructureError,
    decompose,
    factor_entry,
    support_pair,
    verify_orbital,
)
from weylshift.parser import parse_poly
from weylshift.poly import Poly
from weylshift.shifts import OrbitId, ShiftSystem, same_orbit

GL3 = ShiftSystem.from_rows([[-1, 1, 0], [0, -1, 1]])


def fp(nvars, *factors, unit=1):
    return FactoredPoly.from_factors(
        nvars, [(parse_poly(s, nvars), m) for s, m in factors], unit
    )


def test_factored_poly_validation():
    with pytest.raises(ValueError):
        fp(2, ("u1", 1), unit=0)
    with pytest.raises(ValueError):
        fp(2, ("-u1", 1))  # not monic
    with pytest.raises(ValueError):
        fp(2, ("u1", 0))
    with pytest.raises(ValueError):
        fp(2, ("5", 1))  # constant factor
    with pytest.raises(ValueError):
        FactoredPoly(2, Fraction(1), ((Poly.variable(2, 0), 1), (Poly.variable(2, 0), 1)))


def test_factored_poly_expand():
    e = fp(2, ("u1 - 1", 2), ("u2", 1), unit=-3)
    assert e.expand() == parse_poly("-3*(u1 - 1)^2*u2", 2)
    assert FactoredPoly.one(2).is_one
    assert FactoredPoly.one(2).expand() == Poly.one(2)
    assert not fp(2, unit=-1).is_one


def test_factored_solution_expand(gl3_file):
    fs = gl3_file.tuples["gl3_sym"].as_factored()
    assert fs.is_monic
    assert fs.expand().polys == gl3_file.tuples["gl3_sym"].as_solution().polys


def test_decompose_gl3(gl3_file):
    fs = gl3_file.tuples["gl3_sym"].as_factored()
    pieces = decompose(fs)
    assert len(pieces) == 2
    assert [support_pair(p) for p in pieces] == [(0, 1), (1, 2)]

    # entrywise product of the pieces reconstructs the input
    for i in range(3):
        product = Poly.one(2)
        for piece in pieces:
            product = product * piece.solution.entries[i].expand()
        assert product == fs.entries[i].expand()

    for piece in pieces:
        assert verify_orbital(piece).passed

    # distinct orbits: the anchors are not reachable from one another
    a, b = pieces
    full = (0, 1, 2)
    assert same_orbit(GL3, a.orbit.generator, b.orbit.generator, full) is None


def test_decompose_requires_monic(staircase_file):
    fs = staircase_file.tuples["main"].as_factored()
    with pytest.raises(ValueError):
        decompose(fs)


def test_decompose_staircase_single_piece(staircase_file):
    fs = staircase_file.tuples["main_monic"].as_factored()
    pieces = decompose(fs)
    assert len(pieces) == 1
    piece = pieces[0]
    assert support_pair(piece) == (0, 1)
    assert sum(m for e in piece.solution.entries for _, m in e.factors) == 5
    assert piece.orbit.stabilizer.basis == ((3, 2, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    assert verify_orbital(piece).passed


def test_verify_orbital_flags_off_orbit_factors():
    sys = ShiftSystem.from_rows([[1]])
    orbit = OrbitId.build(sys, Poly.variable(1, 0), (0,))
    piece = OrbitalPiece(
        orbit, FactoredSolution(sys, (fp(1, ("u1 + 1/4", 1)),))
    )
    report = verify_orbital(piece)
    assert not report.passed
    assert report.failures[0].relation == "membership"


def test_support_pair_single_direction():
    sys = ShiftSystem.from_rows([[1]])
    orbit = OrbitId.build(sys, Poly.variable(1, 0), (0,))
    piece = OrbitalPiece(orbit, FactoredSolution(sys, (fp(1, ("u1 - 1/2", 1)),)))
    assert support_pair(piece) is None


def test_support_pair_rejects_three_entries():
    orbit = OrbitId.build(GL3, Poly.variable(2, 0), (0, 1, 2))
    entries = (fp(2, ("u1 - 1/2", 1)),) * 3
    piece = OrbitalPiece(orbit, FactoredSolution(GL3, entries))
    with pytest.raises(StructureError, match="at most two"):
        support_pair(piece)


def test_support_pair_rejects_moving_direction_with_constant_entry():
    orbit = OrbitId.build(GL3, Poly.variable(2, 0), (0, 1, 2))
    entries = (fp(2, ("u1 - 1/2", 1)), FactoredPoly.one(2), FactoredPoly.one(2))
    piece = OrbitalPiece(orbit, FactoredSolution(GL3, entries))
    with pytest.raises(StructureError, match="moves the generator"):
        support_pair(piece)


def test_support_pair_rejects_fixing_support_direction():
    sys = ShiftSystem.from_rows([[0, 1], [1, 0]])
    orbit = OrbitId.build(sys, Poly.variable(2, 0), (0, 1))
    entries = (fp(2, ("u1 + 5", 1)), fp(2, ("u1 - 1/2", 1)))
    piece = OrbitalPiece(orbit, FactoredSolution(sys, entries))
    with pytest.raises(StructureError, match="fixes the generator"):
        support_pair(piece)


def test_factor_entry_content_and_linears():
    got = factor_entry(parse_poly("u1^2*u2^3 - u1^2*u2^2", 2))
    assert got is not None
    assert got.unit == 1
    assert dict(got.factors) == {
        parse_poly("u1", 2): 2,
        parse_poly("u2", 2): 2,
        parse_poly("u2 - 1", 2): 1,
    }


def test_factor_entry_unit_tracking():
    got = factor_entry(parse_poly("-2*u1 + 2", 1))
    assert got.unit == -2
    assert got.factors == ((parse_poly("u1 - 1", 1), 1),)
    got = factor_entry(parse_poly("7", 1))
    assert got.unit == 7 and got.factors == ()


def test_factor_entry_quartic_resolvent_split():
    got = factor_entry(parse_poly("u1^4 + 4", 1))
    assert got is not None
    assert {str(q) for q, _ in got.factors} == {
        "u1^2 - 2*u1 + 2",
        "u1^2 + 2*u1 + 2",
    }

    got = factor_entry(parse_poly("u1^4 + 3*u1^2 + 2", 1))
    assert {str(q) for q, _ in got.factors} == {"u1^2 + 1", "u1^2 + 2"}


def test_factor_entry_quartic_repeated_quadratic():
    got = factor_entry(parse_poly("u1^4 + 2*u1^2 + 1", 1))
    assert got.factors == ((parse_poly("u1^2 + 1", 1), 2),)


def test_factor_entry_irreducibles_kept_whole():
    got = factor_entry(parse_poly("u1^4 + 1", 1))
    assert got.factors == ((parse_poly("u1^4 + 1", 1), 1),)
    got = factor_entry(parse_poly("u1^2 + 1", 1))
    assert got.factors == ((parse_poly("u1^2 + 1", 1), 1),)


def test_factor_entry_gives_up_honestly():
    # rootless sextic: beyond the quartic resolvent
    assert factor_entry(parse_poly("u1^6 + u1 + 7", 1)) is None
    # genuinely multivariate irreducible remainder
    assert factor_entry(parse_poly("u1*u2 + 1", 2)) is None
    with pytest.raises(ValueError):
        factor_entry(Poly.zero(2))


def test_factor_entry_multivariate_shifts():
    p = parse_poly("(u1 - 1)*(u2 + 1/2)^2", 2)
    got = factor_entry(p)
    assert got.expand() == p
    assert dict(got.factors) == {
        parse_poly("u1 - 1", 2): 1,
        parse_poly("u2 + 1/2", 2): 2,
    }
