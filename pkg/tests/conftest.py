"""Shared model builders for the surface-level tests."""

import pytest

from germindex import MapGerm, Poly2
from germindex.surd import Surd
from germindex.surface import (
    CohomologyAction,
    CurveWitness,
    ExplicitTraces,
    FixedCurveRecord,
    FixedPointRecord,
    SurfaceModel,
)

X = Poly2.variable(1)
Y = Poly2.variable(2)


def corner_germ(label=None) -> MapGerm:
    """Chart germ at a crossing of the two exceptional curves:
    (z1 + z1^3 z2, z2 + z1^2 z2^2)."""
    return MapGerm.from_polynomials(X + X**3 * Y, Y + X**2 * Y**2, 16, label)


def lefschetz_trace_table(max_n: int) -> dict:
    """Trace data generated by the integer recurrence a_{n+1} = 18 a_n - a_{n-1},
    a_0 = 2, a_1 = 18; the H^{1,1} trace is a_n + 4 on a rational surface."""
    a = [2, 18]
    while len(a) <= max_n:
        a.append(18 * a[-1] - a[-2])
    return {n: {(0, 0): 1, (1, 1): a[n] + 4, (2, 2): 1} for n in range(1, max_n + 1)}


def build_cubic_model(max_n: int = 8, corrupt_u1: bool = False) -> SurfaceModel:
    """The resolved-cubic fixture: four type II fixed curves E0..E3 of
    self-intersection -2, crossing points u_i with chart germs, and three
    declared-only points v_i of index 2."""
    action = CohomologyAction(
        mode=ExplicitTraces(
            traces=lefschetz_trace_table(max_n),
            declared_degree=Surd.sqrt_term(5, a=9, b=4),
        ),
        picard_number=7,
        algebraically_stable=True,
        kodaira_nonnegative=False,
        growth_constant=2,
        description="area-preserving map on the resolved D4 cubic surface",
    )
    curves = [
        FixedCurveRecord("E0", 1, "II", 2, -2, 2,
                         germ_witnesses=[CurveWitness("u1", corner_germ("u1"), X)]),
        FixedCurveRecord("E1", 1, "II", 1, -2, 2,
                         germ_witnesses=[CurveWitness("u1", corner_germ("u1"), Y)]),
        FixedCurveRecord("E2", 1, "II", 1, -2, 2,
                         germ_witnesses=[CurveWitness("u2", corner_germ("u2"), Y)]),
        FixedCurveRecord("E3", 1, "II", 1, -2, 2,
                         germ_witnesses=[CurveWitness("u3", corner_germ("u3"), Y)]),
    ]
    points = []
    for i in (1, 2, 3):
        if corrupt_u1 and i == 1:
            points.append(FixedPointRecord(
                "u1", 1, germ=None, declared_index_per_n={1: 5},
                on_curves=["E0", "E1"]))
        else:
            points.append(FixedPointRecord(
                f"u{i}", 1, germ=corner_germ(f"u{i}"),
                on_curves=["E0", f"E{i}"]))
    for i in (1, 2, 3):
        points.append(FixedPointRecord(
            f"v{i}", 1, declared_index_per_n={1: 2}, on_curves=[f"E{i}"]))
    return SurfaceModel(points=points, curves=curves, action=action,
                        description="cubic-d4 fixture")


@pytest.fixture
def cubic_model():
    return build_cubic_model()
