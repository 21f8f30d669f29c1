"""Surface-level operations: Lefschetz numbers, xi_k, counting, validators."""

from fractions import Fraction

import pytest

from germindex import (
    MissingIndexData,
    NotAlgebraicallyStable,
    Poly2,
    TypeICurvePresent,
)
from germindex.oracle import torus_lefschetz_oracle
from germindex.surd import Surd
from germindex.surface import (
    CohomologyAction,
    CountReport,
    ExplicitTraces,
    FixedCurveRecord,
    FixedPointRecord,
    H1Trivial,
    K3Mode,
    RationalInterval,
    SurfaceModel,
    TorusMode,
    count_isolated_periodic,
    dynamical_degree,
    growth_bounds,
    lefschetz_number,
    partition_isolated_points,
    saito_residual,
    spectral_radius,
    validate_periodic_inventory,
    xi_k,
)

from conftest import build_cubic_model, lefschetz_trace_table


def action_h1(matrix, **kw):
    kw.setdefault("picard_number", max(len(matrix), 1))
    kw.setdefault("algebraically_stable", True)
    return CohomologyAction(mode=H1Trivial(matrix), **kw)


GOLDEN = Surd.sqrt_term(5, a=Fraction(3, 2), b=Fraction(1, 2))  # (3+sqrt5)/2


# -- lefschetz ----------------------------------------------------------------


def test_lefschetz_h1trivial_identity():
    assert lefschetz_number(action_h1([[1]]), 5) == Surd.rational(3)


def test_lefschetz_torus_fixture_value():
    act = CohomologyAction(mode=TorusMode(GOLDEN, Surd.rational(1)),
                           picard_number=4, algebraically_stable=True)
    assert lefschetz_number(act, 1) == Surd.rational(1)


def test_lefschetz_explicit_traces_cubic():
    model = build_cubic_model()
    assert lefschetz_number(model.action, 1) == Surd.rational(24)
    assert lefschetz_number(model.action, 2) == Surd.rational(328)


def test_lefschetz_requires_as():
    act = action_h1([[1]], algebraically_stable=False)
    with pytest.raises(NotAlgebraicallyStable):
        lefschetz_number(act, 2)


def test_lefschetz_k3_mode():
    act = CohomologyAction(
        mode=K3Mode([[2, 1], [1, 1]], Surd.imaginary(1)),
        picard_number=2, algebraically_stable=True)
    # tr(M^2) = 7; i^2 + (-i)^2 = -2
    assert lefschetz_number(act, 2) == Surd.rational(7)


def test_torus_lefschetz_matches_closed_form():
    """Triple check: the trace-table sum equals the closed form
    |d|^2n + |d|^-2n + 2 - 2 Re{(1 + conj(e)^n) d^n + (1 + e^n) d^-n
    - e^n (1 + (conj(d)/d)^n)}."""
    one = Surd.rational(1)
    for delta in [GOLDEN, Surd.sqrt_term(2, a=1, b=1), Surd(a=1, c=1)]:
        for eps in [Surd.rational(1), Surd.rational(-1), Surd.imaginary(1)]:
            act = CohomologyAction(mode=TorusMode(delta, eps),
                                   picard_number=4, algebraically_stable=True)
            for n in range(1, 6):
                lam_n = (delta * delta.conjugate()) ** n
                w = (one + eps.conjugate() ** n) * delta**n \
                    + (one + eps**n) * delta**-n \
                    - eps**n * (one + (delta.conjugate() / delta) ** n)
                closed = lam_n + lam_n.inverse() + 2 - (w + w.conjugate())
                assert lefschetz_number(act, n) == closed, (delta, eps, n)


def test_torus_lefschetz_matches_determinant_oracle():
    eps_values = [Surd.rational(1), Surd.rational(-1), Surd.imaginary(1),
                  Surd(a=Fraction(3, 5), c=Fraction(4, 5))]
    delta_values = [GOLDEN, Surd.sqrt_term(2, a=1, b=1), Surd.sqrt_term(3, a=2, b=1)]
    for delta in delta_values:
        for eps in eps_values:
            act = CohomologyAction(mode=TorusMode(delta, eps),
                                   picard_number=4, algebraically_stable=True)
            d2 = eps * delta.inverse()
            for n in range(1, 7):
                assert lefschetz_number(act, n) == \
                    torus_lefschetz_oracle(delta, d2, n), (delta, eps, n)


# -- dynamical degree -----------------------------------------------------------


def test_dynamical_degree_quadratic_matrix():
    assert dynamical_degree(action_h1([[2, 1], [1, 1]])) == GOLDEN


def test_dynamical_degree_identity():
    assert dynamical_degree(action_h1([[1, 0], [0, 1]])) == Surd.rational(1)


def test_dynamical_degree_torus_is_modulus_squared():
    act = CohomologyAction(mode=TorusMode(GOLDEN, Surd.rational(1)),
                           picard_number=4, algebraically_stable=True)
    assert dynamical_degree(act) == GOLDEN * GOLDEN


def test_dynamical_degree_explicit_traces_declared():
    model = build_cubic_model()
    assert dynamical_degree(model.action) == Surd.sqrt_term(5, a=9, b=4)
    bare = CohomologyAction(mode=ExplicitTraces(lefschetz_trace_table(3)),
                            picard_number=7, algebraically_stable=True)
    with pytest.raises(MissingIndexData):
        dynamical_degree(bare)


def test_spectral_radius_cubic_factor_interval():
    # companion matrix of x^3 - x - 1: plastic ratio ~ 1.3247
    M = [[0, 0, 1], [1, 0, 1], [0, 1, 0]]
    lam = spectral_radius(M)
    assert isinstance(lam, RationalInterval)
    lam = lam.refine(30)
    assert Fraction(13, 10) < lam.lo <= lam.hi < Fraction(133, 100)


def test_spectral_radius_equal_and_complex_moduli():
    assert spectral_radius([[0, 2], [1, 0]]) == Surd.sqrt_term(2)   # roots +-sqrt2
    assert spectral_radius([[0, -2], [1, 0]]) == Surd.sqrt_term(2)  # complex pair
    two_blocks = [[0, 2, 0, 0], [1, 0, 0, 0], [0, 0, 0, 3], [0, 0, 1, 0]]
    assert spectral_radius(two_blocks) == Surd.sqrt_term(3)         # cross-field max


# -- xi_k and counting -----------------------------------------------------------


def test_xi_1_cubic(cubic_model):
    assert xi_k(cubic_model, 1) == 8


def test_xi_rejects_missing_period(cubic_model):
    with pytest.raises(MissingIndexData):
        xi_k(cubic_model, 2)


def test_xi_single_curve_no_points():
    act = action_h1([[1]])
    model = SurfaceModel(
        points=[],
        curves=[FixedCurveRecord("C", 1, "II", 1, -2)],
        action=act)
    assert xi_k(model, 1) == -2


def test_xi_stability_under_evaluation_level(cubic_model):
    base = xi_k(cubic_model, 1)
    for n in (2, 3):
        assert xi_k(cubic_model, 1, evaluate_at=n) == base


def test_count_cubic_first_six(cubic_model):
    expected = [16, 320, 5776, 103680, 1860496, 33385280]
    for n, want in enumerate(expected, start=1):
        rep = count_isolated_periodic(cubic_model, n)
        assert rep.count_as_int() == want
        assert rep.xi_breakdown == {1: 8}
        if rep.growth is not None:
            assert rep.growth.within_bound


def test_count_identity_enforced(cubic_model):
    rep = count_isolated_periodic(cubic_model, 2)
    assert rep.lefschetz == rep.count_isolated + sum(rep.xi_breakdown.values())


def test_count_strictly_increasing(cubic_model):
    counts = [count_isolated_periodic(cubic_model, n).count_as_int()
              for n in range(1, 7)]
    assert all(a < b for a, b in zip(counts, counts[1:]))


def test_type_one_curve_reevaluated_through_witness():
    from germindex.scenario import load_fixture
    from germindex.surface import _curve_index_at

    scn = load_fixture("remark43")
    model = scn.require_model()
    curve = model.curve("C")
    # the fixed line stays a curve of index 1 for the square of the map
    assert _curve_index_at(model, curve, 2) == 1
    assert _curve_index_at(model, curve, 1) == 1


def test_count_refuses_type_one_curves():
    act = action_h1([[1]])
    model = SurfaceModel(
        points=[], curves=[FixedCurveRecord("C", 1, "I", 1, 1, 2)], action=act)
    with pytest.raises(TypeICurvePresent):
        count_isolated_periodic(model, 1)


def test_count_refuses_without_as(cubic_model):
    cubic_model.action.algebraically_stable = False
    with pytest.raises(NotAlgebraicallyStable):
        count_isolated_periodic(cubic_model, 1)


# -- saito residual ---------------------------------------------------------------


def test_saito_residual_zero_on_cubic(cubic_model):
    assert saito_residual(cubic_model, 1, 16) == Surd.rational(0)


def test_saito_residual_detects_corruption():
    model = build_cubic_model(corrupt_u1=True)
    assert saito_residual(model, 1, 16) == Surd.rational(-1)


def test_saito_residual_empty_model():
    act = action_h1([[0]])  # L = 2
    model = SurfaceModel(points=[], curves=[], action=act)
    assert saito_residual(model, 1, 0) == Surd.rational(2)


# -- isolation partition ----------------------------------------------------------


def test_partition_cubic_points_lie_on_curves(cubic_model):
    part = partition_isolated_points(cubic_model, horizon=6)
    assert part.conditionally == []
    assert part.absolutely == []
    assert sorted(part.non_isolated) == ["u1", "u2", "u3", "v1", "v2", "v3"]


def test_partition_conditional_point():
    act = action_h1([[1]])
    model = SurfaceModel(
        points=[FixedPointRecord("p", 1, on_curves=["C"]),
                FixedPointRecord("q", 1)],
        curves=[FixedCurveRecord("C", 2, "II", 1, -1)],
        action=act)
    part = partition_isolated_points(model, horizon=6)
    assert part.conditionally == [("p", 2)]
    assert part.absolutely == ["q"]


# -- inventory validators ------------------------------------------------------------


def test_validator_cubic_inventory_clean(cubic_model):
    pairs = [("E0", "E1"), ("E0", "E2"), ("E0", "E3")]
    assert validate_periodic_inventory(cubic_model, pairs) == []


def test_validator_type_two_period_mismatch():
    act = action_h1([[1]])
    model = SurfaceModel(
        points=[],
        curves=[FixedCurveRecord("A", 2, "II", 1, 0),
                FixedCurveRecord("B", 3, "II", 1, 0)],
        action=act)
    out = validate_periodic_inventory(model, [("A", "B")])
    assert [v.kind for v in out] == ["type_II_period_mismatch"]


def test_validator_too_many_periods():
    act = action_h1([[2, 1], [1, 1]], picard_number=2)
    model = SurfaceModel(
        points=[],
        curves=[FixedCurveRecord(f"C{k}", k, "II", 1, -2) for k in (1, 2, 3, 5)],
        action=act)
    out = validate_periodic_inventory(model, [])
    assert [v.kind for v in out] == ["too_many_type_II_periods"]


def test_validator_divisibility_case():
    act = action_h1([[1]])
    model = SurfaceModel(
        points=[],
        curves=[FixedCurveRecord("A", 4, "II", 1, 0),
                FixedCurveRecord("B", 3, "I", 1, 0, 2)],
        action=act)
    out = validate_periodic_inventory(model, [("A", "B")])
    assert [v.kind for v in out] == ["period_divisibility"]
    ok = SurfaceModel(
        points=[],
        curves=[FixedCurveRecord("A", 4, "II", 1, 0),
                FixedCurveRecord("B", 2, "I", 1, 0, 2)],
        action=act)
    assert validate_periodic_inventory(ok, [("A", "B")]) == []


# -- growth bounds ----------------------------------------------------------------


def test_growth_bound_constant_branch(cubic_model):
    for n in range(1, 7):
        rep = count_isolated_periodic(cubic_model, n)
        verdict = growth_bounds(cubic_model.action, n, rep.count_isolated)
        assert verdict.within_bound and verdict.branch == "constant"


def test_growth_bound_torus_branch():
    act = CohomologyAction(mode=TorusMode(GOLDEN, Surd.rational(1)),
                           picard_number=4, algebraically_stable=True)
    for n in range(1, 7):
        L = lefschetz_number(act, n)
        verdict = growth_bounds(act, n, L)
        assert verdict.within_bound and verdict.branch == "torus"


def test_growth_bound_requires_lambda_above_one():
    with pytest.raises(ValueError):
        growth_bounds(action_h1([[1]], growth_constant=5), 3, 2)


# -- witness validation -----------------------------------------------------------


def test_model_validate_clean(cubic_model):
    assert cubic_model.validate() == []


def test_model_validate_flags_wrong_record():
    model = build_cubic_model()
    model.curves[0].nu_C = 3  # witness recomputation gives 2
    issues = model.validate()
    assert len(issues) == 1 and "E0" in issues[0]
