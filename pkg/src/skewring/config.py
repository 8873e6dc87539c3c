"""JSON descriptors for rings, twists, and CLI configurations.

A config document looks like::

    {
      "ring": {"kind": "gaussian"},
      "twist": {"kind": "q_twist", "q": "2"},
      "shape": "laurent",
      "variable": "X"
    }

Ring kinds: rationals, gaussian, quaternions, octonions, sedenions,
jordan (base), matrix (base, n), polynomial (base, variable, shape,
twist, delta), algebra (an explicit structure-constant document as in
:mod:`skewring.rings`). Twist kinds are those of
:func:`skewring.maps.make_twist`; rational parameters are "p/q"
strings, elements are flat coordinate vectors.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction

from . import maps, poly, rings
from .errors import ConstructionError

SHAPES = ("ore", "laurent", "power_series", "laurent_series")

_BUILTIN_RINGS = {
    "rationals": rings.rationals,
    "gaussian": rings.gaussian,
    "quaternions": rings.quaternions,
    "octonions": rings.octonions,
    "sedenions": rings.sedenions,
}


def ring_from_descriptor(doc):
    if isinstance(doc, str):
        doc = {"kind": doc}
    kind = doc.get("kind")
    if kind in _BUILTIN_RINGS:
        return _BUILTIN_RINGS[kind]()
    if kind == "jordan":
        return rings.jordan_algebra(ring_from_descriptor(doc["base"]))
    if kind == "matrix":
        return rings.matrix_algebra(ring_from_descriptor(doc["base"]), int(doc["n"]))
    if kind == "algebra":
        return rings.algebra_from_json(doc["spec"], division=bool(doc.get("division")))
    if kind == "polynomial":
        base = ring_from_descriptor(doc["base"])
        shape = doc.get("shape", "laurent")
        if shape not in (poly.ORE, poly.LAURENT):
            raise ConstructionError(f"unknown polynomial shape: {shape}")
        sigma = twist_from_descriptor(base, doc.get("twist", {"kind": "identity"}))
        delta = None
        if doc.get("delta") is not None:
            # the delta of base[V; sigma, delta] acts on base itself
            delta = twist_from_descriptor(base, doc["delta"])
        return poly.RingConfig(
            coefficients=base,
            sigma=sigma,
            delta=delta,
            variable=doc.get("variable", "Y"),
            shape=shape,
        )
    raise ConstructionError(f"unknown ring kind: {kind}")


def twist_from_descriptor(ring, doc):
    if isinstance(doc, str):
        doc = {"kind": doc}
    kind = doc.get("kind")
    if kind not in maps.TWIST_KINDS:
        raise ConstructionError(f"unknown twist kind: {kind}")
    params = {}
    if kind in ("q_twist", "y_scale", "y_coeff_scale"):
        params["q"] = Fraction(doc["q"])
    elif kind == "inner":
        params["u"] = ring.unflatten(tuple(Fraction(v) for v in doc["u"]))
    elif kind == "matrix":
        params["matrix"] = [[Fraction(v) for v in row] for row in doc["matrix"]]
    elif kind == "coefficientwise":
        params["base"] = twist_from_descriptor(ring.coefficients, doc["base"])
    return maps.make_twist(ring, kind, **params)


@dataclass
class CliConfig:
    """A fully built configuration plus its source document."""

    ring_config: poly.RingConfig
    shape: str
    precision: int | None
    variable: str
    source: dict

    @property
    def is_series(self):
        return self.shape in ("power_series", "laurent_series")

    @property
    def is_power_series(self):
        return self.shape == "power_series"

    def digest(self):
        canonical = json.dumps(self.source, sort_keys=True)
        return hashlib.sha256(canonical.encode()).hexdigest()[:16]

    def describe(self):
        return self.ring_config.describe()


def load_config(doc):
    """Build a CliConfig from a parsed JSON document."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    shape = doc.get("shape", "laurent")
    if shape not in SHAPES:
        raise ConstructionError(f"unknown shape: {shape}")
    variable = doc.get("variable", "X")
    precision = doc.get("precision")
    if shape in ("power_series", "laurent_series") and precision is None:
        raise ConstructionError("series shapes require a precision")
    ring = ring_from_descriptor(doc["ring"])
    sigma = twist_from_descriptor(ring, doc.get("twist", {"kind": "identity"}))
    sigma_report = maps.validate_twist_axioms(sigma, "sigma")
    if not sigma_report.ok:
        failed = ", ".join(c.axiom for c in sigma_report.checks if not c.passed)
        raise ConstructionError(f"twist fails sigma axioms: {failed}")
    base_shape = poly.ORE if shape == "ore" else poly.LAURENT
    delta = None
    if doc.get("delta") is not None:
        if shape != "ore":
            raise ConstructionError("laurent shape admits no delta")
        # sigma and delta both act on the coefficient ring
        delta = twist_from_descriptor(ring, doc["delta"])
        delta_report = maps.validate_twist_axioms(delta, "delta")
        if not delta_report.ok:
            failed = ", ".join(c.axiom for c in delta_report.checks if not c.passed)
            raise ConstructionError(f"delta fails axioms: {failed}")
    config = poly.RingConfig(
        coefficients=ring,
        sigma=sigma,
        delta=delta,
        variable=variable,
        shape=base_shape,
    )
    return CliConfig(
        ring_config=config,
        shape=shape,
        precision=precision,
        variable=variable,
        source=doc,
    )


def load_config_file(path):
    with open(path, encoding="utf-8") as fh:
        return load_config(json.load(fh))
