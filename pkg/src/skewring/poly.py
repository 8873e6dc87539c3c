"""Twisted polynomial and Laurent polynomial rings.

A ``RingConfig`` fixes a coefficient ring, a twist sigma (additive
bijection respecting 1), an optional delta (additive, delta(1) = 0,
only for the ore shape), a variable name, and the exponent shape:

* ``ore``     -- exponents in N, monomial rule
                 (r·V^m)(s·V^n) = sum_i (r·pi_i^m(s))·V^(i+n);
* ``laurent`` -- exponents in Z, monomial rule
                 (r·V^m)(s·V^n) = (r·sigma^m(s))·V^(m+n).

Polynomials are immutable sparse exponent-to-coefficient maps in
canonical form (no zero coefficients stored). A config is itself a
coefficient ring, which is how iterated constructions such as the
quantum torus arise; configs are shareable read-only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    ConstructionError,
    NotInvertibleError,
    RingMismatchError,
    ZeroElementError,
)
from .maps import PiFamily, PolyTwist, make_twist, pi_apply

ORE = "ore"
LAURENT = "laurent"


class RingConfig:
    """Configuration (and ring object) of a twisted polynomial ring."""

    def __init__(self, coefficients, sigma, delta=None, variable="X", shape=ORE):
        if shape not in (ORE, LAURENT):
            raise ConstructionError(f"unknown shape: {shape}")
        one = coefficients.one
        if sigma(one) != one:
            raise ConstructionError("does not respect one")
        if sigma.inverse() is None:
            raise ConstructionError("sigma must be bijective")
        if shape == LAURENT and delta is not None:
            raise ConstructionError("laurent shape admits no delta")
        if delta is not None and delta(one):
            raise ConstructionError("delta must kill one")
        self.coefficients = coefficients
        self.sigma = sigma
        self.delta = delta
        self.variable = variable
        self.shape = shape
        self._assoc = None
        self._comm = None
        self._span_cache = {}

    # -- element constructors ------------------------------------------

    @property
    def zero(self):
        return SkewPoly(self, {})

    @property
    def one(self):
        return SkewPoly(self, {0: self.coefficients.one})

    def monomial(self, coeff, exp):
        return self.from_terms({exp: coeff})

    def variable_power(self, exp):
        return self.monomial(self.coefficients.one, exp)

    @property
    def gen(self):
        return self.variable_power(1)

    def scalar(self, value):
        return self.monomial(self.coefficients.scalar(value), 0)

    def constant(self, coeff):
        return self.monomial(coeff, 0)

    def from_terms(self, terms):
        clean = {}
        for exp, coeff in terms.items():
            if not coeff:
                continue
            if self.shape == ORE and exp < 0:
                raise ConstructionError("negative exponent")
            clean[exp] = coeff
        return SkewPoly(self, clean)

    # -- ring protocol ---------------------------------------------------

    def spanning_set(self, bound):
        """Basis monomials c·V^e with coefficient spanning c and |e| <= bound."""
        cached = self._span_cache.get(bound)
        if cached is None:
            lo = -bound if self.shape == LAURENT else 0
            cached = [
                self.monomial(c, e)
                for e in range(lo, bound + 1)
                for c in self.coefficients.spanning_set(bound)
            ]
            self._span_cache[bound] = cached
        return list(cached)

    def random_element(self, rng, max_degree=4, max_terms=3):
        lo = -max_degree if self.shape == LAURENT else 0
        exps = rng.sample(range(lo, max_degree + 1), k=rng.randint(1, max_terms))
        terms = {}
        for e in exps:
            c = self.coefficients.random_element(rng)
            if c:
                terms[e] = c
        return SkewPoly(self, terms)

    @property
    def is_finite_dimensional(self):
        return False

    @property
    def is_division(self):
        return False

    @property
    def is_commutative(self):
        if self._comm is None:
            span = self.spanning_set(2)
            self._comm = all(
                a * b == b * a for a in span for b in span
            )
        return self._comm

    @property
    def is_associative(self):
        if self._assoc is None:
            span = self.spanning_set(2)
            self._assoc = all(
                (a * b) * c == a * (b * c)
                for a in span for b in span for c in span
            )
        return self._assoc

    def invert(self, el):
        """Two-sided inverse of an invertible monomial; raises otherwise.

        A monomial c·V^e has the right-inverse candidate
        sigma^(-e)(c⁻¹)·V^(-e) and the left-inverse candidate
        (sigma^(-e)(c))⁻¹·V^(-e); when sigma is not multiplicative these
        can differ, in which case no two-sided inverse exists. Both
        candidates are tried and verified on both sides.
        """
        if len(el.terms) != 1:
            raise NotInvertibleError("not invertible")
        (exp, coeff), = el.terms.items()
        if self.shape == ORE and exp != 0:
            raise NotInvertibleError("not invertible")
        candidates = []
        try:
            candidates.append(
                self.sigma.power_apply(-exp, self.coefficients.invert(coeff))
            )
        except NotInvertibleError:
            pass
        try:
            candidates.append(
                self.coefficients.invert(self.sigma.power_apply(-exp, coeff))
            )
        except NotInvertibleError:
            pass
        for u in candidates:
            inverse = self.monomial(u, -exp)
            if poly_mul(el, inverse) == self.one and poly_mul(inverse, el) == self.one:
                return inverse
        raise NotInvertibleError("not invertible")

    def describe(self):
        inner = self.coefficients.describe()
        var = self.variable + ("^±" if self.shape == LAURENT else "")
        twists = self.sigma.describe()
        if self.delta is not None:
            twists += f", {self.delta.describe()}"
        return f"{inner}[{var}; {twists}]"

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, RingConfig):
            return NotImplemented
        return (
            self.shape == other.shape
            and self.variable == other.variable
            and self.coefficients == other.coefficients
            and self.sigma == other.sigma
            and self.delta == other.delta
        )

    def __hash__(self):
        return hash((self.shape, self.variable))

    def __repr__(self):
        return self.describe()


class SkewPoly:
    """Sparse exponent-to-coefficient map over a ``RingConfig``."""

    __slots__ = ("config", "terms", "_hash")

    def __init__(self, config, terms):
        self.config = config
        self.terms = terms
        self._hash = None

    @property
    def ring(self):
        return self.config

    # -- structure --------------------------------------------------------

    def _nonzero_or_raise(self):
        if not self.terms:
            raise ZeroElementError("zero polynomial has no degree")

    @property
    def degree(self):
        self._nonzero_or_raise()
        return max(self.terms)

    @property
    def order(self):
        self._nonzero_or_raise()
        return min(self.terms)

    @property
    def leading_coefficient(self):
        return self.terms[self.degree]

    def coefficient(self, exp):
        if exp in self.terms:
            return self.terms[exp]
        return self.config.coefficients.zero

    def sorted_terms(self):
        return sorted(self.terms.items())

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if isinstance(other, SkewPoly):
            if other.config is self.config or other.config == self.config:
                return other
            raise RingMismatchError("incompatible rings")
        if isinstance(other, (int, Fraction)):
            return self.config.scalar(other)
        if type(other).__name__ in ("AlgebraElement", "MatrixElement") and \
                other.ring == self.config.coefficients:
            return self.config.constant(other)
        return None

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            acc = terms.get(e)
            acc = c if acc is None else acc + c
            if acc:
                terms[e] = acc
            elif e in terms:
                del terms[e]
        return SkewPoly(self.config, terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return SkewPoly(self.config, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return poly_mul(self, other)

    def __rmul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return poly_mul(other, self)

    def __pow__(self, n):
        if n < 0:
            raise NotInvertibleError("use config.invert for negative powers")
        out = self.config.one
        for _ in range(n):
            out = out * self
        return out

    def scale(self, q):
        q = Fraction(q)
        return self.config.from_terms(
            {e: c.scale(q) for e, c in self.terms.items()}
        )

    def inverse(self):
        return self.config.invert(self)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, SkewPoly):
            return self.config == other.config and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.config.scalar(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        if not self.terms:
            return "0"
        var = self.config.variable
        parts = []
        for e, c in self.sorted_terms():
            coeff = repr(c)
            if " " in coeff or coeff.startswith("-"):
                coeff = f"({coeff})"
            if e == 0:
                parts.append(coeff)
            else:
                power = var if e == 1 else f"{var}^{e}"
                parts.append(power if coeff == "1" else f"{coeff}{power}")
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# multiplication
# ---------------------------------------------------------------------------


def _pi_row(fam, m, s):
    """[pi_0^m(s), ..., pi_m^m(s)] by one dynamic-programming sweep."""
    row = [s]
    for k in range(1, m + 1):
        nxt = []
        for i in range(k + 1):
            value = None
            if i >= 1:
                value = fam.sigma(row[i - 1])
            if fam.delta is not None and i <= k - 1:
                dpart = fam.delta(row[i])
                value = dpart if value is None else value + dpart
            nxt.append(value if value is not None else s.ring.zero)
        row = nxt
    return row


def poly_mul(p, q):
    """Biadditive extension of the twisted monomial rules."""
    config = p.config
    if config != q.config:
        raise RingMismatchError("incompatible rings")
    out = {}

    def accumulate(exp, value):
        if not value:
            return
        acc = out.get(exp)
        acc = value if acc is None else acc + value
        if acc:
            out[exp] = acc
        elif exp in out:
            del out[exp]

    if config.shape == LAURENT or config.delta is None:
        sigma = config.sigma
        for m, r in p.terms.items():
            for n, s in q.terms.items():
                accumulate(m + n, r * sigma.power_apply(m, s))
        return SkewPoly(config, out)

    fam = PiFamily(config.sigma, config.delta)
    for m, r in p.terms.items():
        for n, s in q.terms.items():
            row = _pi_row(fam, m, s)
            for i, t in enumerate(row):
                if t:
                    accumulate(i + n, r * t)
    return SkewPoly(config, out)


def degree_order_leading(p):
    """(degree, order, leading coefficient) of a nonzero polynomial."""
    return (p.degree, p.order, p.leading_coefficient)


# ---------------------------------------------------------------------------
# right-form conversion (coefficients on the right of the variable)
# ---------------------------------------------------------------------------


def to_right_form(p):
    """Write p = sum V^e · c_e; returns the ascending list of (e, c_e).

    Laurent shape: c_e = sigma^(-e)(r_e) directly. Ore shape: descending
    induction, subtracting V^m · sigma^(-m)(leading) which strictly
    lowers the degree (the delta spill-over lands below m).
    """
    config = p.config
    if config.shape == LAURENT:
        return [
            (e, config.sigma.power_apply(-e, c)) for e, c in p.sorted_terms()
        ]
    out = []
    rem = p
    while rem:
        m = rem.degree
        c = config.sigma.power_apply(-m, rem.leading_coefficient)
        out.append((m, c))
        rem = rem - poly_mul(config.variable_power(m), config.constant(c))
    out.reverse()
    return out


def from_right_form(config, pairs):
    """Rebuild sum V^e · c_e as a left-form polynomial."""
    total = config.zero
    for e, c in pairs:
        total = total + poly_mul(config.variable_power(e), config.constant(c))
    return total


# ---------------------------------------------------------------------------
# D-structures (the twisted monoid layer)
# ---------------------------------------------------------------------------


class DStructure:
    """A family of maps pi_b^a over a monoid, candidate Ore-monoid data."""

    def __init__(self, monoid, name, pi, support):
        if monoid not in ("naturals", "integers"):
            raise ConstructionError(f"unsupported monoid: {monoid}")
        self.monoid = monoid
        self.name = name
        self._pi = pi
        self._support = support

    def pi(self, a, b):
        """The map pi_b^a as a callable on ring elements."""
        return self._pi(a, b)

    def support(self, a):
        """Exponents b where pi_b^a may be nonzero."""
        return self._support(a)

    def in_monoid(self, a):
        return a >= 0 if self.monoid == "naturals" else True


def laurent_d_structure(sigma):
    """pi_b^a = sigma^a when a = b, else 0, over the integers."""
    def pi(a, b):
        if a == b:
            return lambda s: sigma.power_apply(a, s)
        return lambda s: s.ring.zero
    return DStructure("integers", "laurent", pi, lambda a: (a,))


def ore_d_structure(sigma, delta):
    """The word-sum family of the Ore product, over the naturals."""
    fam = PiFamily(sigma, delta)
    def pi(a, b):
        return lambda s: pi_apply(fam, b, a, s)
    return DStructure("naturals", "ore", pi, lambda a: tuple(range(a + 1)))


def corrupted_d_structure(base):
    """base with pi_e^e forced to zero; must fail axiom D1."""
    def pi(a, b):
        if a == 0 and b == 0:
            return lambda s: s.ring.zero
        return base.pi(a, b)
    return DStructure(base.monoid, f"{base.name}-corrupted", pi, base.support)


@dataclass
class DStructureReport:
    name: str
    entries: list = field(default_factory=list)

    def add(self, axiom, passed, detail=""):
        self.entries.append((axiom, passed, detail))

    @property
    def ok(self):
        return all(passed for _, passed, _ in self.entries)


def validate_d_structure(d, exponents, elements):
    """Check axioms D0-D4 on the sampled exponents and ring elements.

    ``exponents`` bounds the monoid window: pairs and triples are drawn
    from it, and D0's finite-support check probes a margin beyond the
    declared support inside the window.
    """
    exps = [a for a in exponents if d.in_monoid(a)]
    report = DStructureReport(name=d.name)
    one = elements[0].ring.one
    zero = elements[0].ring.zero

    ok = True
    detail = ""
    window = range(min(exps) - 2, max(exps) + 3)
    for a in exps:
        support = set(d.support(a))
        for b in window:
            if not d.in_monoid(b) or b in support:
                continue
            for r in elements:
                if d.pi(a, b)(r):
                    ok, detail = False, f"pi_{b}^{a} nonzero outside declared support"
                    break
            if not ok:
                break
        if not ok:
            break
    report.add("D0", ok, detail or "finite support on sampled window")

    ok = all(d.pi(0, 0)(r) == r for r in elements)
    for a in exps:
        if a != 0 and any(d.pi(0, a)(r) for r in elements):
            ok = False
    report.add("D1", ok, "pi_e^e = id and pi_a^e = 0")

    ok = True
    for a in exps:
        for b in exps:
            expected = one if a == b else zero
            if d.pi(a, b)(one) != expected:
                ok = False
                break
        if not ok:
            break
    report.add("D2", ok, "pi_b^a(1) is the Kronecker delta")

    ok = True
    for a in exps:
        for b in d.support(a):
            pi_ab = d.pi(a, b)
            for r in elements:
                for s in elements:
                    if pi_ab(r + s) != pi_ab(r) + pi_ab(s):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    report.add("D3", ok, "additivity on sampled pairs")

    ok = True
    detail = ""
    for a in exps:
        for b in exps:
            ab = a + b
            targets = set()
            for dd in d.support(a):
                for ee in d.support(b):
                    targets.add(dd + ee)
            for c in sorted(targets):
                for r in elements:
                    total = zero
                    for dd in d.support(a):
                        ee = c - dd
                        if d.in_monoid(ee) and ee in set(d.support(b)):
                            total = total + d.pi(a, dd)(d.pi(b, ee)(r))
                    if d.pi(ab, c)(r) != total:
                        ok, detail = False, f"D4 fails at a={a}, b={b}, c={c}"
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    report.add("D4", ok, detail or "composition identity on sampled triples")
    return report


# ---------------------------------------------------------------------------
# iterated constructions
# ---------------------------------------------------------------------------


def iterated_extend(base_config, variable, twist_spec):
    """Adjoin a fresh Laurent variable over an already twisted ring.

    ``twist_spec`` is a twist descriptor dict ({"kind": "y_scale", "q": q}
    or {"kind": "coefficientwise", "base": map-on-coefficients}) or a
    ready-made map on ``base_config``. The lifted twist acts
    coefficient-wise and fixes (or uniformly scales) the inner variable;
    it exists exactly when the coefficient-level twists commute, which
    is checked on basis elements.
    """
    if isinstance(twist_spec, dict):
        spec = dict(twist_spec)
        kind = spec.pop("kind")
        lifted = make_twist(base_config, kind, **spec)
    else:
        lifted = twist_spec
    if isinstance(lifted, PolyTwist) and lifted.coeff_map is not None:
        inner_sigma = base_config.sigma
        coeff_map = lifted.coeff_map
        for b in base_config.coefficients.spanning_set(2):
            if inner_sigma(coeff_map(b)) != coeff_map(inner_sigma(b)):
                raise ConstructionError(
                    "iterated construction requires commuting automorphisms"
                )
    return RingConfig(
        coefficients=base_config,
        sigma=lifted,
        delta=None,
        variable=variable,
        shape=LAURENT,
    )


def quantum_torus(coefficients, q, inner_variable="Y", outer_variable="X"):
    """R[Y±][X±; Y -> qY]: the twisted ring with X·Y = q·Y·X."""
    q = Fraction(q)
    if q == 0:
        raise ConstructionError("not bijective")
    inner = RingConfig(
        coefficients=coefficients,
        sigma=make_twist(coefficients, "identity"),
        delta=None,
        variable=inner_variable,
        shape=LAURENT,
    )
    return iterated_extend(inner, outer_variable, {"kind": "y_scale", "q": q})
