"""Scenario documents: a JSON description of maps, germs, curves, points,
the cohomology action and forms, from which the CLI builds its objects.

The three bundled fixtures (remark42, remark43, cubic-d4) live in the
package's fixtures/ directory as committed documents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .errors import ScenarioError
from .forms import FormGerm
from .germs import MapGerm
from .oracle import PolynomialMap
from .parsing import parse_expression
from .polys import Poly2
from .series import DEFAULT_PRECISION
from .surd import Surd
from .surface import (
    CohomologyAction,
    CurveWitness,
    ExplicitTraces,
    FixedCurveRecord,
    FixedPointRecord,
    H1Trivial,
    K3Mode,
    SurfaceModel,
    TorusMode,
)

FIXTURE_NAMES = ("remark42", "remark43", "cubic-d4")


@dataclass
class GermOrigin:
    """Where a germ came from: a global map localized at a fixed point."""

    map_label: str | None
    base_point: tuple[Fraction, Fraction] | None


@dataclass
class Scenario:
    description: str
    precision: int
    maps: dict[str, PolynomialMap]
    germs: dict[str, MapGerm]
    germ_origins: dict[str, GermOrigin]
    forms: dict[str, FormGerm]
    model: SurfaceModel | None
    intersections: list[tuple[str, str]] = field(default_factory=list)

    def require_model(self) -> SurfaceModel:
        if self.model is None:
            raise ScenarioError("scenario carries no surface model / action")
        return self.model


def _rat(value) -> Fraction:
    if isinstance(value, bool):
        raise ScenarioError(f"expected a rational literal, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ValueError as exc:
            raise ScenarioError(f"bad rational literal {value!r}") from exc
    raise ScenarioError(f"expected a rational literal, got {value!r}")


def localized_germ(pmap: PolynomialMap, point, precision: int,
                   label: str | None = None) -> MapGerm:
    """Chart germ of a global map at a fixed rational point: conjugate by
    the translation moving the point to the origin."""
    a, b = _rat(point[0]), _rat(point[1])
    if pmap.p1.evaluate(a, b) != a or pmap.p2.evaluate(a, b) != b:
        raise ScenarioError(f"point ({a}, {b}) is not fixed by the map")
    p1 = pmap.p1.translate(a, b) - Poly2.constant(a)
    p2 = pmap.p2.translate(a, b) - Poly2.constant(b)
    return MapGerm.from_polynomials(p1, p2, precision, label)


def _build_action(data, default_as: bool) -> CohomologyAction:
    mode_name = data.get("mode")
    stable = bool(data.get("algebraically_stable", default_as))
    kwargs = dict(
        picard_number=int(data.get("picard_number", 1)),
        algebraically_stable=stable,
        kodaira_nonnegative=bool(data.get("kodaira_nonnegative", False)),
        growth_constant=data.get("growth_constant"),
        description=data.get("description", ""),
    )
    if mode_name == "h1trivial":
        return CohomologyAction(mode=H1Trivial(data["matrix"]), **kwargs)
    if mode_name == "k3":
        return CohomologyAction(
            mode=K3Mode(data["matrix"], Surd.from_json(data["hodge_scalar"])),
            **kwargs)
    if mode_name == "torus":
        return CohomologyAction(
            mode=TorusMode(Surd.from_json(data["delta"]),
                           Surd.from_json(data["epsilon"])),
            **kwargs)
    if mode_name == "explicit_traces":
        traces = {}
        if "traces" in data:
            for n_str, table in data["traces"].items():
                traces[int(n_str)] = {
                    tuple(int(x) for x in key.split(",")): int(v)
                    for key, v in table.items()
                }
        elif "h11_trace_recurrence" in data:
            rec = data["h11_trace_recurrence"]
            coeffs = [int(c) for c in rec["coefficients"]]
            seq = [int(v) for v in rec["initial"]]
            offset = int(rec.get("offset", 0))
            max_n = int(data.get("max_n", 12))
            while len(seq) <= max_n:
                seq.append(sum(c * seq[-1 - i] for i, c in enumerate(coeffs)))
            traces = {n: {(0, 0): 1, (1, 1): seq[n] + offset, (2, 2): 1}
                      for n in range(1, max_n + 1)}
        else:
            raise ScenarioError("explicit_traces needs 'traces' or a recurrence")
        declared = None
        if "dynamical_degree" in data:
            declared = Surd.from_json(data["dynamical_degree"])
        return CohomologyAction(
            mode=ExplicitTraces(traces, declared_degree=declared), **kwargs)
    raise ScenarioError(f"unknown action mode {mode_name!r}")


def load_scenario(doc: dict) -> Scenario:
    """Build a Scenario from a parsed JSON document, resolving all labels."""
    meta = doc.get("meta", {})
    precision = int(meta.get("precision", DEFAULT_PRECISION))
    default_as = bool(meta.get("algebraically_stable", False))

    maps = {}
    for label, exprs in (doc.get("maps") or {}).items():
        if len(exprs) != 2:
            raise ScenarioError(f"map {label!r} needs two coordinate expressions")
        maps[label] = PolynomialMap(parse_expression(exprs[0]),
                                    parse_expression(exprs[1]))

    germs: dict[str, MapGerm] = {}
    origins: dict[str, GermOrigin] = {}
    for label, spec in (doc.get("germs") or {}).items():
        if "map" in spec:
            map_label = spec["map"]
            if map_label not in maps:
                raise ScenarioError(f"germ {label!r} references unknown map "
                                    f"{map_label!r}")
            point = spec.get("base_point", [0, 0])
            germs[label] = localized_germ(maps[map_label], point, precision, label)
            origins[label] = GermOrigin(map_label,
                                        (_rat(point[0]), _rat(point[1])))
        elif "images" in spec:
            p1 = parse_expression(spec["images"][0])
            p2 = parse_expression(spec["images"][1])
            germs[label] = MapGerm.from_polynomials(p1, p2, precision, label)
            origins[label] = GermOrigin(None, None)
        else:
            raise ScenarioError(f"germ {label!r} needs 'map' or 'images'")

    forms = {}
    for label, spec in (doc.get("forms") or {}).items():
        unit = parse_expression(spec.get("unit", "1"))
        forms[label] = FormGerm(int(spec.get("z1_valuation", 0)),
                                unit.to_series(precision))

    model = None
    if doc.get("action"):
        action = _build_action(doc["action"], default_as)
        curves = []
        for c in doc.get("curves", []):
            witnesses = []
            for w in c.get("witnesses", []):
                germ_label = w["germ"]
                if germ_label not in germs:
                    raise ScenarioError(
                        f"curve {c['label']!r} witness references unknown germ "
                        f"{germ_label!r}")
                witnesses.append(CurveWitness(
                    point_label=w.get("point", germ_label),
                    germ=germs[germ_label],
                    curve_local_equation=parse_expression(w["curve_equation"]),
                ))
            curves.append(FixedCurveRecord(
                label=c["label"],
                prime_period=int(c.get("prime_period", 1)),
                curve_type=c["type"],
                nu_C=int(c["nu_C"]),
                self_intersection=int(c["self_intersection"]),
                euler_characteristic=(int(c["euler_characteristic"])
                                      if "euler_characteristic" in c else None),
                fiber_component=bool(c.get("fiber_component", False)),
                germ_witnesses=witnesses,
            ))
        points = []
        for p in doc.get("points", []):
            germ = None
            if "germ" in p:
                if p["germ"] not in germs:
                    raise ScenarioError(f"point {p['label']!r} references "
                                        f"unknown germ {p['germ']!r}")
                germ = germs[p["germ"]]
            declared = None
            if "declared_index" in p:
                declared = {int(k): int(v) for k, v in p["declared_index"].items()}
            isolation = None
            if "isolation" in p:
                iso = p["isolation"]
                isolation = (iso["kind"],
                             int(iso["secondary_period"])
                             if "secondary_period" in iso else None)
            points.append(FixedPointRecord(
                label=p["label"],
                prime_period=int(p.get("prime_period", 1)),
                germ=germ,
                declared_index_per_n=declared,
                on_curves=list(p.get("on_curves", [])),
                declared_isolation=isolation,
            ))
        model = SurfaceModel(points=points, curves=curves, action=action,
                             description=meta.get("description", ""))

    intersections = [tuple(pair) for pair in doc.get("intersections", [])]
    return Scenario(
        description=meta.get("description", ""),
        precision=precision,
        maps=maps,
        germs=germs,
        germ_origins=origins,
        forms=forms,
        model=model,
        intersections=intersections,
    )


def load_scenario_file(path, precision: int | None = None) -> Scenario:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ScenarioError(f"cannot read scenario file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"scenario is not valid JSON: {exc}") from exc
    if precision is not None:
        doc.setdefault("meta", {})["precision"] = precision
    return load_scenario(doc)


def fixture_document(name: str) -> dict:
    file_name = name.replace("-", "_") + ".json"
    ref = resources.files("germindex.fixtures").joinpath(file_name)
    if not ref.is_file():
        raise ScenarioError(
            f"unknown fixture {name!r}; bundled fixtures: {', '.join(FIXTURE_NAMES)}")
    return json.loads(ref.read_text(encoding="utf-8"))


def load_fixture(name: str, precision: int | None = None) -> Scenario:
    doc = fixture_document(name)
    if precision is not None:
        doc.setdefault("meta", {})["precision"] = precision
    return load_scenario(doc)
