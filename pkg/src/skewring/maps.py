"""Additive twist maps on coefficient rings.

A twist map is a Q-linear endomorphism of a ring. Skew multiplication
needs two of them: a bijection sigma with sigma(1) = 1 and a map delta
with delta(1) = 0. Maps on finite-dimensional rings are stored as exact
rational matrices on the flattened coordinate space; maps on polynomial
coefficient rings are stored structurally (coefficient-wise action plus
a variable scaling, or the formal derivative).

Powers of a map are cached on the map object, which keeps the
degree-bounded exhaustive checks in :mod:`skewring.structure` cheap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import (
    ConstructionError,
    NotInvertibleError,
    UnsupportedRingError,
)
from .rings import associator, commutator

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _is_poly_ring(ring):
    return hasattr(ring, "shape") and hasattr(ring, "coefficients")


class TwistMap:
    """Base class; concrete maps implement __call__ and inverse()."""

    kind = "twist"
    params = {}

    def __call__(self, el):
        raise NotImplementedError

    def inverse(self):
        """The inverse map, or None when the map is not bijective."""
        return None

    def power_apply(self, m, el):
        """Apply the m-fold composition (inverse composition for m < 0)."""
        if m == 0:
            return el
        if m > 0:
            for _ in range(m):
                el = self(el)
            return el
        inv = self.inverse()
        if inv is None:
            raise NotInvertibleError("inverse unavailable")
        return inv.power_apply(-m, el)

    @property
    def tags(self):
        """Verified property set; multiplicative tags come from classify_multiplicativity."""
        out = {"additive"}
        one = self.ring.one
        image = self(one)
        if image == one:
            out.add("respects_one")
        if not image:
            out.add("kills_one")
        if self.inverse() is not None:
            out.add("bijective")
        return out

    def is_identity_on(self, elements):
        return all(self(el) == el for el in elements)

    def describe(self):
        scalars = [v for v in self.params.values() if isinstance(v, str)]
        if scalars:
            return f"{self.kind}({','.join(scalars)})"
        return self.kind

    def __repr__(self):
        return f"<{type(self).__name__} {self.describe()} on {self.ring.describe()}>"


class LinearTwist(TwistMap):
    """Exact Q-matrix map on a finite-dimensional ring.

    ``images[j]`` is the flattened image of the j-th flat basis vector,
    so application is a sparse linear combination of columns.
    """

    def __init__(self, ring, images, kind="matrix", params=None):
        self.ring = ring
        self.images = tuple(tuple(row) for row in images)
        self.kind = kind
        self.params = params or {}
        self._pow = {1: self.images}
        self._inverse = None
        self._inverse_known = False
        d = len(self.images)
        self._identity = all(
            col[i] == (1 if i == j else 0)
            for j, col in enumerate(self.images)
            for i in range(d)
        )

    @classmethod
    def from_function(cls, ring, fn, kind="matrix", params=None):
        d = ring.qdim
        images = []
        for j in range(d):
            basis_vec = tuple(_ONE if i == j else _ZERO for i in range(d))
            images.append(ring.flatten(fn(ring.unflatten(basis_vec))))
        return cls(ring, images, kind=kind, params=params)

    def _apply_images(self, images, coords):
        d = len(coords)
        out = [_ZERO] * d
        for j, cj in enumerate(coords):
            if not cj:
                continue
            col = images[j]
            for i, v in enumerate(col):
                if v:
                    out[i] += cj * v
        return tuple(out)

    def __call__(self, el):
        if self._identity:
            return el
        coords = self.ring.flatten(el)
        return self.ring.unflatten(self._apply_images(self.images, coords))

    def _images_power(self, m):
        if m not in self._pow:
            prev = self._images_power(m - 1)
            self._pow[m] = tuple(self._apply_images(self.images, col) for col in prev)
        return self._pow[m]

    def power_apply(self, m, el):
        if m == 0 or self._identity:
            return el
        if m > 0:
            coords = self.ring.flatten(el)
            return self.ring.unflatten(self._apply_images(self._images_power(m), coords))
        inv = self.inverse()
        if inv is None:
            raise NotInvertibleError("inverse unavailable")
        return inv.power_apply(-m, el)

    def inverse(self):
        if not self._inverse_known:
            matrix = [[self.images[j][i] for j in range(len(self.images))]
                      for i in range(len(self.images))]
            inv = linalg.invert_matrix(matrix)
            if inv is None:
                self._inverse = None
            else:
                images = tuple(
                    tuple(inv[i][j] for i in range(len(inv))) for j in range(len(inv))
                )
                self._inverse = LinearTwist(
                    self.ring, images, kind=f"{self.kind}^-1", params=self.params
                )
                self._inverse._inverse = self
                self._inverse._inverse_known = True
            self._inverse_known = True
        return self._inverse

    def __eq__(self, other):
        if not isinstance(other, LinearTwist):
            return NotImplemented
        return self.ring == other.ring and self.images == other.images

    def __hash__(self):
        return hash((self.kind, self.images))


class PolyTwist(TwistMap):
    """Structural map on a polynomial-shaped ring.

    Sends r·V^m to scale^m · base(r) · V^m: the coefficient map applied
    coefficient-wise, with the variable scaled by a fixed nonzero
    rational. Covers the identity, coefficient-wise lifts, and V -> qV.
    """

    def __init__(self, ring, coeff_map=None, var_scale=_ONE, kind=None, params=None):
        self.ring = ring
        self.coeff_map = coeff_map
        self.var_scale = Fraction(var_scale)
        if self.var_scale == 0:
            raise ConstructionError("not bijective")
        if kind is None:
            kind = "identity" if coeff_map is None and self.var_scale == 1 else "poly_twist"
        self.kind = kind
        self.params = params or {}

    def __call__(self, el):
        return self.power_apply(1, el)

    def power_apply(self, m, el):
        if m == 0 or (self.coeff_map is None and self.var_scale == 1):
            return el
        terms = {}
        for exp, coeff in el.terms.items():
            if self.coeff_map is not None:
                coeff = self.coeff_map.power_apply(m, coeff)
            factor = self.var_scale ** (m * exp)
            if factor != 1:
                coeff = coeff.scale(factor)
            if coeff:
                terms[exp] = coeff
        return self.ring.from_terms(terms)

    def inverse(self):
        inv_base = None
        if self.coeff_map is not None:
            inv_base = self.coeff_map.inverse()
            if inv_base is None:
                return None
        return PolyTwist(
            self.ring, inv_base, 1 / self.var_scale, kind=f"{self.kind}^-1"
        )

    def __eq__(self, other):
        if not isinstance(other, PolyTwist):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.coeff_map == other.coeff_map
            and self.var_scale == other.var_scale
        )

    def __hash__(self):
        return hash((self.kind, self.var_scale))


class DerivativeMap(TwistMap):
    """Formal derivative with respect to the polynomial variable."""

    kind = "derivative"

    def __init__(self, ring):
        self.ring = ring

    def __call__(self, el):
        terms = {}
        for exp, coeff in el.terms.items():
            if exp == 0:
                continue
            scaled = coeff.scale(exp)
            if scaled:
                terms[exp - 1] = scaled
        return self.ring.from_terms(terms)

    def __eq__(self, other):
        if not isinstance(other, DerivativeMap):
            return NotImplemented
        return self.ring == other.ring

    def __hash__(self):
        return hash(("derivative",))


class YCoeffScale(TwistMap):
    """Scales only the degree-one coefficient; additive bijection, not multiplicative."""

    kind = "y_coeff_scale"

    def __init__(self, ring, q):
        self.ring = ring
        self.q = Fraction(q)
        if self.q == 0:
            raise ConstructionError("not bijective")
        self.params = {"q": str(self.q)}

    def __call__(self, el):
        terms = dict(el.terms)
        if 1 in terms:
            scaled = terms[1].scale(self.q)
            if scaled:
                terms[1] = scaled
            else:
                del terms[1]
        return self.ring.from_terms(terms)

    def inverse(self):
        return YCoeffScale(self.ring, 1 / self.q)

    def __eq__(self, other):
        if not isinstance(other, YCoeffScale):
            return NotImplemented
        return self.ring == other.ring and self.q == other.q

    def __hash__(self):
        return hash(("y_coeff_scale", self.q))


class ZeroMap(TwistMap):
    """The zero map; the trivial delta."""

    kind = "zero"

    def __init__(self, ring):
        self.ring = ring

    def __call__(self, el):
        return self.ring.zero

    def __eq__(self, other):
        if not isinstance(other, ZeroMap):
            return NotImplemented
        return self.ring == other.ring

    def __hash__(self):
        return hash(("zero",))


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

TWIST_KINDS = (
    "identity", "q_twist", "conjugation", "transpose", "diag_swap",
    "conj_transpose", "inner", "matrix", "coefficientwise", "y_scale",
    "y_coeff_scale", "derivative", "zero",
)


def make_twist(ring, kind, **params):
    """Build one of the named twist maps on the given ring.

    Finite-dimensional kinds compile to an exact matrix; polynomial-ring
    kinds stay structural. Construction validates the defining
    requirements of each kind (bijectivity of scalings, invertibility of
    the conjugating unit, sigma(1) = 1 for the sigma-role kinds).
    """
    if kind == "identity":
        if _is_poly_ring(ring):
            return PolyTwist(ring, None, 1, kind="identity")
        return LinearTwist(
            ring, linalg.identity_matrix(ring.qdim), kind="identity"
        )

    if kind == "q_twist":
        q = Fraction(params["q"])
        if q == 0:
            raise ConstructionError("not bijective")
        unit = ring.flatten(ring.one)
        if sum(1 for v in unit if v) != 1:
            raise UnsupportedRingError("q_twist needs the unit as a basis direction")
        pivot = next(i for i, v in enumerate(unit) if v)
        images = [
            tuple(
                (v if j == pivot else q * v)
                for v in (tuple(_ONE if i == j else _ZERO for i in range(ring.qdim)))
            )
            for j in range(ring.qdim)
        ]
        tm = LinearTwist(ring, images, kind="q_twist", params={"q": str(q)})
        return _require_respects_one(tm)

    if kind == "conjugation":
        if getattr(ring, "involution", None) is None:
            raise ConstructionError("not a *-algebra")
        tm = LinearTwist.from_function(
            ring, lambda el: el.conjugate(), kind="conjugation"
        )
        return _require_respects_one(tm)

    if kind == "transpose":
        def fn(el):
            n = el.ring.n
            return el.ring.element(
                tuple(tuple(el.entries[j][i] for j in range(n)) for i in range(n))
            )
        return _require_respects_one(LinearTwist.from_function(ring, fn, kind="transpose"))

    if kind == "diag_swap":
        if ring.n != 2:
            raise ConstructionError("diag_swap is defined for 2x2 matrices")
        def fn(el):
            e = el.entries
            return el.ring.element(((e[1][1], e[0][1]), (e[1][0], e[0][0])))
        return _require_respects_one(LinearTwist.from_function(ring, fn, kind="diag_swap"))

    if kind == "conj_transpose":
        if getattr(ring.base, "involution", None) is None:
            raise ConstructionError("not a *-algebra")
        return _require_respects_one(
            LinearTwist.from_function(
                ring, lambda el: el.conjugate_transpose(), kind="conj_transpose"
            )
        )

    if kind == "inner":
        u = params["u"]
        try:
            u_inv = u.ring.invert(u)
        except NotInvertibleError:
            raise ConstructionError("inner automorphism requires unit") from None
        tm = LinearTwist.from_function(
            ring,
            lambda el: (u * el) * u_inv,
            kind="inner",
            params={"u": [str(v) for v in ring.flatten(u)]},
        )
        return _require_respects_one(tm)

    if kind == "matrix":
        matrix = [[Fraction(v) for v in row] for row in params["matrix"]]
        images = [
            tuple(matrix[i][j] for i in range(len(matrix)))
            for j in range(len(matrix))
        ]
        return LinearTwist(
            ring, images, kind="matrix",
            params={"matrix": [[str(v) for v in row] for row in matrix]},
        )

    if kind == "coefficientwise":
        base = params["base"]
        return _require_respects_one(
            PolyTwist(ring, base, 1, kind="coefficientwise")
        )

    if kind == "y_scale":
        q = Fraction(params["q"])
        if q == 0:
            raise ConstructionError("not bijective")
        return PolyTwist(ring, None, q, kind="y_scale", params={"q": str(q)})

    if kind == "y_coeff_scale":
        return YCoeffScale(ring, params["q"])

    if kind == "derivative":
        return DerivativeMap(ring)

    if kind == "zero":
        return ZeroMap(ring)

    raise ConstructionError(f"unknown twist kind: {kind}")


def _require_respects_one(tm):
    one = tm.ring.one
    if tm(one) != one:
        raise ConstructionError("does not respect one")
    return tm


def apply_power(tm, m, el):
    """sigma^m(el); negative m uses the inverse map."""
    return tm.power_apply(m, el)


# ---------------------------------------------------------------------------
# the pi operator family of Ore multiplication
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PiFamily:
    """A sigma/delta pair driving the Ore product's operator sums."""

    sigma: TwistMap
    delta: TwistMap | None = None

    def apply(self, i, m, s):
        return pi_apply(self, i, m, s)


def pi_apply(fam, i, m, s):
    """Sum of all compositions of i sigmas and m-i deltas, applied to s.

    Computed by the recursion pi(i,m) = sigma∘pi(i-1,m-1) + delta∘pi(i,m-1)
    with pi(0,0) = id; zero whenever i > m or i < 0. Agrees with the
    explicit word enumeration (see pi_word_sum), which stays around as
    the test oracle.
    """
    zero = s.ring.zero
    if i < 0 or i > m:
        return zero
    memo = {}

    def rec(ii, mm):
        if ii < 0 or ii > mm:
            return zero
        if mm == 0:
            return s
        key = (ii, mm)
        if key not in memo:
            value = fam.sigma(rec(ii - 1, mm - 1))
            if fam.delta is not None:
                value = value + fam.delta(rec(ii, mm - 1))
            memo[key] = value
        return memo[key]

    return rec(i, m)


def pi_words(i, m):
    """All length-m words over {sigma, delta} with exactly i sigmas."""
    words = []
    for positions in itertools.combinations(range(m), i):
        word = tuple("sigma" if p in positions else "delta" for p in range(m))
        words.append(word)
    return words


def pi_word_apply(fam, word, s):
    """Apply one composition word (leftmost letter outermost)."""
    for letter in reversed(word):
        if letter == "sigma":
            s = fam.sigma(s)
        else:
            if fam.delta is None:
                return s.ring.zero
            s = fam.delta(s)
    return s


def pi_word_sum(fam, i, m, s):
    """Enumeration oracle: the literal sum over all words."""
    total = s.ring.zero
    for word in pi_words(i, m):
        total = total + pi_word_apply(fam, word, s)
    return total


# ---------------------------------------------------------------------------
# classification and structural probes
# ---------------------------------------------------------------------------


def _spanning(ring, bound):
    if not hasattr(ring, "spanning_set"):
        raise UnsupportedRingError("cannot decide by basis exhaustion")
    return ring.spanning_set(bound)


def classify_multiplicativity(tm, bound=2):
    """Which of automorphism / antiautomorphism / involution hold.

    Decided exhaustively on the ring's spanning set (the basis for
    finite-dimensional rings; basis monomials of bounded exponent for
    polynomial rings, where the structural maps act monomial-wise so the
    bounded check spans every product shape that occurs).
    """
    span = _spanning(tm.ring, bound)
    bijective = tm.inverse() is not None
    auto = True
    anti = True
    for a in span:
        fa = tm(a)
        for b in span:
            fab = tm(a * b)
            fb = tm(b)
            if auto and fab != fa * fb:
                auto = False
            if anti and fab != fb * fa:
                anti = False
            if not auto and not anti:
                break
        if not auto and not anti:
            break
    tags = set()
    if auto and bijective:
        tags.add("automorphism")
    if anti and bijective:
        tags.add("antiautomorphism")
        if all(tm(tm(a)) == a for a in span):
            tags.add("involution")
    return frozenset(tags)


def detect_finite_order(tm, bound=8):
    """Least m in [1, bound] with sigma^m = id, or None.

    The check runs on the spanning set, which determines a linear map
    completely on finite-dimensional rings and monomial-wise structural
    maps on polynomial rings.
    """
    try:
        span = _spanning(tm.ring, 2)
    except UnsupportedRingError:
        raise UnsupportedRingError("order detection unsupported") from None
    for m in range(1, bound + 1):
        if all(tm.power_apply(m, b) == b for b in span):
            return m
    return None


def infinite_order_reason(tm):
    """A scaling-direction certificate that no power of tm is the identity.

    Looks for a basis direction b with tm(b) = q·b for q outside {1,-1};
    then tm^m(b) = q^m·b never returns to b. Returns a human-readable
    reason, or None when no such certificate is found.
    """
    if isinstance(tm, PolyTwist):
        if tm.var_scale not in (1, -1):
            return (
                f"variable is scaled by {tm.var_scale}; "
                f"{tm.var_scale}^m is never 1 for m >= 1"
            )
        if tm.coeff_map is not None:
            return infinite_order_reason(tm.coeff_map)
        return None
    if isinstance(tm, LinearTwist):
        images = tm.images
        d = len(images)
        for j in range(d):
            col = images[j]
            q = col[j]
            if q in (0, 1, -1):
                continue
            if all(col[i] == 0 for i in range(d) if i != j):
                return (
                    f"basis direction {j} is scaled by {q}; "
                    f"{q}^m is never 1 for m >= 1"
                )
    return None


def standard_derivation(a, b):
    """The derivation c -> [[a,b],c] - 3(a,b,c) on a finite-dimensional ring."""
    ring = a.ring
    bracket = commutator(a, b)

    def fn(c):
        return commutator(bracket, c) - associator(a, b, c).scale(3)

    return LinearTwist.from_function(ring, fn, kind="standard_derivation")


@dataclass
class AxiomCheck:
    axiom: str
    passed: bool
    detail: str = ""


@dataclass
class TwistReport:
    role: str
    checks: list

    @property
    def ok(self):
        return all(c.passed for c in self.checks)


def validate_twist_axioms(tm, role):
    """Check the defining sigma/delta axioms and report per axiom."""
    if role not in ("sigma", "delta"):
        raise ConstructionError(f"unknown twist role: {role}")
    checks = [AxiomCheck("additive", True, "exact linear representation")]
    one = tm.ring.one
    image = tm(one)
    if role == "sigma":
        checks.append(AxiomCheck("respects_one", image == one, f"sigma(1) = {image!r}"))
        checks.append(
            AxiomCheck("bijective", tm.inverse() is not None, "inverse construction")
        )
    else:
        checks.append(AxiomCheck("kills_one", not image, f"delta(1) = {image!r}"))
    return TwistReport(role=role, checks=checks)
