"""Truncated skew power series and skew Laurent series.

A ``TruncatedSeries`` stores exact coefficients for exponents in a
window [window_start, precision] of a twisted ring R[[X; sigma]] or
R((X; sigma)); everything above the precision is unknown (O(X^(N+1))),
everything below the window start is known to be zero. The monomial
rule is the Laurent one, (r·X^m)(s·X^n) = (r·sigma^m(s))·X^(m+n), so
the underlying config must be delta-free with bijective sigma.

Precision propagates pessimistically through products:
N(a·b) = min(N_a + w_b, N_b + w_a), w(a·b) = w_a + w_b.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    ConstructionError,
    NotInvertibleError,
    RingMismatchError,
    ZeroElementError,
)


def _check_series_config(config):
    if config.delta is not None:
        raise ConstructionError("series take a delta-free config")
    return config


class TruncatedSeries:
    """Exact coefficients on a finite exponent window with explicit precision."""

    __slots__ = ("config", "window_start", "precision", "coeffs")

    def __init__(self, config, coeffs, precision, window_start=None):
        _check_series_config(config)
        clean = {e: c for e, c in coeffs.items() if c}
        if window_start is None:
            window_start = min([0, *clean]) if clean else 0
        if clean and min(clean) < window_start:
            raise ConstructionError("coefficient below the window start")
        if clean and max(clean) > precision:
            clean = {e: c for e, c in clean.items() if e <= precision}
        if window_start > precision + 1:
            raise ConstructionError("empty series window")
        self.config = config
        self.coeffs = clean
        self.precision = precision
        self.window_start = window_start

    @property
    def ring(self):
        return self.config

    # -- structure --------------------------------------------------------

    @property
    def order(self):
        if not self.coeffs:
            raise ZeroElementError("order undefined at this precision")
        return min(self.coeffs)

    @property
    def leading_coefficient(self):
        return self.coeffs[self.order]

    def coefficient(self, exp):
        if exp in self.coeffs:
            return self.coeffs[exp]
        return self.config.coefficients.zero

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if isinstance(other, TruncatedSeries):
            if other.config == self.config:
                return other
            raise RingMismatchError("incompatible rings")
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(
                self.config,
                {0: self.config.coefficients.scalar(other)},
                self.precision,
                window_start=min(0, self.window_start),
            )
        return None

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        precision = min(self.precision, other.precision)
        window = min(self.window_start, other.window_start)
        coeffs = {e: c for e, c in self.coeffs.items() if e <= precision}
        for e, c in other.coeffs.items():
            if e > precision:
                continue
            acc = coeffs.get(e)
            acc = c if acc is None else acc + c
            if acc:
                coeffs[e] = acc
            elif e in coeffs:
                del coeffs[e]
        return TruncatedSeries(self.config, coeffs, precision, window)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return TruncatedSeries(
            self.config,
            {e: -c for e, c in self.coeffs.items()},
            self.precision,
            self.window_start,
        )

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return series_mul(self, other)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return (
                self.config == other.config
                and self.precision == other.precision
                and self.coeffs == other.coeffs
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.precision, frozenset(self.coeffs.items())))

    def __repr__(self):
        # the trailing O(V^N) marker carries the precision N itself:
        # coefficients with exponents through N are stored exactly
        var = self.config.variable
        if not self.coeffs:
            body = "0"
        else:
            parts = []
            for e, c in sorted(self.coeffs.items()):
                coeff = repr(c)
                if " " in coeff or coeff.startswith("-"):
                    coeff = f"({coeff})"
                if e == 0:
                    parts.append(coeff)
                else:
                    power = var if e == 1 else f"{var}^{e}"
                    parts.append(power if coeff == "1" else f"{coeff}{power}")
            body = " + ".join(parts)
        return f"{body} + O({var}^{self.precision})"


def series(config, terms, precision, window_start=None):
    """Build a series from an exponent-to-coefficient map."""
    return TruncatedSeries(config, dict(terms), precision, window_start)


def from_poly(p, precision, window_start=None):
    """Embed a delta-free polynomial as a truncated series."""
    return TruncatedSeries(p.config, dict(p.terms), precision, window_start)


def series_one(config, precision):
    return TruncatedSeries(config, {0: config.coefficients.one}, precision, 0)


def series_mul(a, b):
    """Twisted Cauchy product, truncated with pessimistic precision."""
    if a.config != b.config:
        raise RingMismatchError("incompatible rings")
    precision = min(a.precision + b.window_start, b.precision + a.window_start)
    window = a.window_start + b.window_start
    sigma = a.config.sigma
    out = {}
    for m, r in a.coeffs.items():
        for n, s in b.coeffs.items():
            e = m + n
            if e > precision:
                continue
            value = r * sigma.power_apply(m, s)
            if not value:
                continue
            acc = out.get(e)
            acc = value if acc is None else acc + value
            if acc:
                out[e] = acc
            elif e in out:
                del out[e]
    return TruncatedSeries(a.config, out, precision, window)


def times_monomial(a, coeff, exp):
    """a·(coeff·X^exp) with an exact (untruncated) monomial."""
    sigma = a.config.sigma
    out = {}
    for m, r in a.coeffs.items():
        value = r * sigma.power_apply(m, coeff)
        if value:
            out[m + exp] = value
    return TruncatedSeries(
        a.config, out, a.precision + exp, a.window_start + exp
    )


def series_order_leading(a):
    """(order, leading coefficient) of a series with a visible coefficient."""
    return (a.order, a.leading_coefficient)


def equal_to_precision(a, b, precision=None):
    """Coefficient-wise equality up to the given (or common) precision."""
    if precision is None:
        precision = min(a.precision, b.precision)
    exps = set(a.coeffs) | set(b.coeffs)
    return all(
        a.coefficient(e) == b.coefficient(e) for e in exps if e <= precision
    )


def _solve_left(ring, c, r):
    if hasattr(ring, "solve_left_mul"):
        return ring.solve_left_mul(c, r)
    try:
        u = ring.invert(c) * r
    except NotInvertibleError:
        return None
    return u if c * u == r else None


def _solve_right(ring, c, r):
    if hasattr(ring, "solve_right_mul"):
        return ring.solve_right_mul(c, r)
    try:
        u = r * ring.invert(c)
    except NotInvertibleError:
        return None
    return u if u * c == r else None


def series_invert(a, side="right"):
    """Inverse of a unit series, solved one coefficient at a time.

    ``side="right"`` returns b with a·b = 1, ``side="left"`` returns b
    with b·a = 1, each by its own triangular recurrence whose steps are
    exact multiplication-operator solves in the coefficient ring (no
    associativity assumed). ``side="both"`` solves both recurrences and
    insists they agree -- that is the genuinely two-sided inverse, which
    exists whenever the twist is an automorphism but can fail to exist
    otherwise (the one-sided inverses of 1 - iX under the q=2 scaling
    twist differ from degree three on). The inverse of a series of
    order w known to precision N is known to precision N - 2w.
    """
    config = a.config
    ring = config.coefficients
    sigma = config.sigma
    if side not in ("right", "left", "both"):
        raise ConstructionError(f"unknown inverse side: {side}")
    if not a.coeffs:
        raise NotInvertibleError("series is not a unit")
    w = a.order
    lead = a.coeffs[w]
    out_precision = a.precision - 2 * w
    if out_precision < -w:
        raise NotInvertibleError("series is not a unit")

    right = {}
    left = {}
    one = ring.one
    zero = ring.zero
    for e in range(0, a.precision - w + 1):
        n = e - w
        target = one if e == 0 else zero
        if side in ("right", "both"):
            # a·b = 1: sum_m a_m sigma^m(b_{e-m}) = [e == 0]
            acc = target
            for m, am in a.coeffs.items():
                if m == w:
                    continue
                prev = right.get(e - m)
                if prev is not None:
                    acc = acc - am * sigma.power_apply(m, prev)
            u = _solve_left(ring, lead, acc)
            if u is None:
                raise NotInvertibleError("series is not a unit")
            right[n] = sigma.power_apply(-w, u)
        if side in ("left", "both"):
            # b·a = 1: sum_m b_{e-m} sigma^(e-m)(a_m) = [e == 0]
            acc = target
            for m, am in a.coeffs.items():
                if m == w:
                    continue
                prev = left.get(e - m)
                if prev is not None:
                    acc = acc - prev * sigma.power_apply(e - m, am)
            u = _solve_right(ring, sigma.power_apply(n, lead), acc)
            if u is None:
                raise NotInvertibleError("series is not a unit")
            left[n] = u

    if side == "both":
        if any(right.get(n, zero) != left.get(n, zero)
               for n in set(right) | set(left) if n <= out_precision):
            raise NotInvertibleError("series is not a unit")
    coeffs = left if side == "left" else right
    return TruncatedSeries(config, coeffs, out_precision, -w)
