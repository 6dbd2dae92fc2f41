"""Logarithmic-bundle monads from line arrangements."""
import pytest

from schurlab.errors import ClaimError, PreconditionError
from schurlab.exact_math import QQ, vec_canonical
from schurlab.families import sorted_points
from schurlab.hulek_monad import orthogonality_report, validate_monad
from schurlab.logbundle import (arrangement_jump_check, build_logbundle,
                                recover_cup_form)

SIX = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3), (1, 4, 9)]


def test_dimensions(six_line_bundle):
    lb = six_line_bundle
    assert lb.d == 3 and lb.n == 4
    assert lb.dims == (3, 4, 3)
    assert lb.relations.rows == 3
    assert all(m.rows == 4 and m.cols == 3 for m in lb.a_maps)
    assert all(m.rows == 3 and m.cols == 4 for m in lb.b_maps)


def test_cup_form_defining_relation(six_line_bundle):
    lb = six_line_bundle
    form, ident = recover_cup_form(QQ, lb.a_maps, lb.b_maps)
    assert form.is_nondegenerate()
    assert not ident.det().is_zero()
    for k in range(3):
        lhs = lb.a_maps[k].transpose() * form.matrix
        rhs = ident * lb.b_maps[k]
        assert lhs.serialize() == rhs.serialize()


def test_monad_is_compatible_and_valid(six_line_bundle):
    monad = six_line_bundle.monad
    assert monad.compatibility_ok()
    assert validate_monad(monad, seed=0).valid


def test_curve_degree_and_route_identity(six_line_bundle):
    monad = six_line_bundle.monad
    curve = monad.jlsk_curve()
    assert curve.degree == 2 * monad.n - 2 == 6
    # determinant of the quadratic grid against the form applied to the
    # signed-minor vector: the same sextic up to one nonzero constant
    assert monad.jlsk_via_form().proportional(curve)


def test_arrangement_jump_reports(six_line_bundle):
    reports = arrangement_jump_check(six_line_bundle)
    assert len(reports) == 6
    for r in reports:
        assert r.passed
        assert r.in_support and r.corank == 2
        assert r.bound == r.expected_bound == 1
        assert r.rank == r.rank_formula_plus == 2
        assert r.rank_formula_minus == 0


def test_support_is_exactly_the_dual_points(six_line_bundle):
    lb = six_line_bundle
    locus = lb.monad.jumping_points()
    assert locus.zero_dimensional and locus.fully_resolved
    duals = [vec_canonical(f) for f in lb.forms]
    assert sorted_points(locus.points) == sorted_points(duals)


def test_orthogonality_at_every_dual_point(six_line_bundle):
    lb = six_line_bundle
    for f in lb.forms:
        report = orthogonality_report(lb.monad, f)
        assert report.corank == 2
        assert report.contained and report.equality


def test_degenerate_arrangements_rejected():
    with pytest.raises(PreconditionError):
        build_logbundle(QQ, [(1, 0, 0), (2, 0, 0)] + SIX[2:])
    with pytest.raises(PreconditionError):
        build_logbundle(QQ, [(1, 0, 0), (0, 1, 0), (1, 1, 0),
                             (1, 1, 1), (1, 2, 3), (1, 4, 9)])
    with pytest.raises(PreconditionError):
        build_logbundle(QQ, SIX[:5])


def test_quadratic_field_arrangement():
    from schurlab.exact_math import Field
    f5 = Field(5)
    phi = f5.scalar(1, 1)
    lb = build_logbundle(f5, [(1, 0, 0), (0, 1, 0), (0, 0, 1),
                              (1, 1, 1), (1, phi, 3), (1, 4, 9)])
    assert lb.dims == (3, 4, 3)
    assert lb.monad.compatibility_ok()
    reports = arrangement_jump_check(lb)
    assert all(r.passed for r in reports)
