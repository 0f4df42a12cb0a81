"""Rigorous real-root isolation and directed-rounded constant enclosures.

Roots of f(x) = F(x, 1) are isolated in disjoint rational intervals
(Sturm-certified, refined by exact-sign bisection; exact integer roots
collapse to point intervals).  From the intervals the module derives
one-sided rational bounds, always rounded in the safe direction, for

* ``min_gap``      -- the smallest distance between two roots,
* ``gap_product``  -- the smallest over i of the product of |root_j - root_i|,
* ``approx_coeff`` -- K / ((1-eps)^(n-1) * gap_product), the coefficient in
  the best-approximation bound used by the large-|y| conclusions,
* ``gate``         -- K^(1/n) / (eps * min_gap), the |y| radius below which
  those conclusions are not asserted,

and, per field, upper bounds on the squared applicability thresholds of the
three large-|y| conclusions.  n-th roots of rationals and square roots are
bounded by dyadic binary search, so the whole pipeline stays exact-directional:
tightening the intervals can only raise lower bounds and lower upper bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor

from . import _poly
from .forms import BinaryForm, integer_roots, require_admissible
from .quadfield import QuadraticField

DEFAULT_ISOLATION_WIDTH = Fraction(1, 2**64)
ROOT_PREC_BITS = 48

Interval = tuple[Fraction, Fraction]


def nth_root_upper(x: Fraction, r: int, bits: int = ROOT_PREC_BITS) -> Fraction:
    """Smallest dyadic c/2^bits with (c/2^bits)^r >= x; exact for r = 1."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("negative radicand")
    if x == 0:
        return Fraction(0)
    if r == 1:
        return x
    target = x.numerator << (bits * r)
    c = _poly.iroot(target // x.denominator, r)
    while c**r * x.denominator < target:
        c += 1
    return Fraction(c, 1 << bits)


def nth_root_lower(x: Fraction, r: int, bits: int = ROOT_PREC_BITS) -> Fraction:
    """Largest dyadic c/2^bits with (c/2^bits)^r <= x; exact for r = 1."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("negative radicand")
    if x == 0:
        return Fraction(0)
    if r == 1:
        return x
    target = x.numerator << (bits * r)
    c = _poly.iroot(target // x.denominator, r)
    while (c + 1) ** r * x.denominator <= target:
        c += 1
    while c**r * x.denominator > target:
        c -= 1
    return Fraction(c, 1 << bits)


@dataclass(frozen=True)
class RootData:
    """Isolating intervals (sorted, pairwise disjoint) plus gap enclosures."""

    form: BinaryForm
    intervals: tuple[Interval, ...]
    reduced: tuple[int, ...]  # f with its integer linear factors removed
    min_gap_lower: Fraction
    min_gap_upper: Fraction
    gap_product_lower: Fraction
    gap_product_upper: Fraction

    @property
    def width(self) -> Fraction:
        return max(hi - lo for lo, hi in self.intervals)


def _gap_enclosures(intervals):
    n = len(intervals)
    a_lo = min(intervals[j + 1][0] - intervals[j][1] for j in range(n - 1))
    a_hi = min(intervals[j + 1][1] - intervals[j][0] for j in range(n - 1))
    b_lo = None
    b_hi = None
    for i in range(n):
        p_lo = Fraction(1)
        p_hi = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            if j > i:
                d_lo = intervals[j][0] - intervals[i][1]
                d_hi = intervals[j][1] - intervals[i][0]
            else:
                d_lo = intervals[i][0] - intervals[j][1]
                d_hi = intervals[i][1] - intervals[j][0]
            p_lo *= d_lo
            p_hi *= d_hi
        b_lo = p_lo if b_lo is None else min(b_lo, p_lo)
        b_hi = p_hi if b_hi is None else min(b_hi, p_hi)
    return a_lo, a_hi, b_lo, b_hi


def _bisect(g, lo, hi, sign_lo):
    """One sign-preserving bisection step; g has no rational roots."""
    mid = (lo + hi) / 2
    if _poly.sign(_poly.evaluate(g, mid)) == sign_lo:
        return mid, hi
    return lo, mid


def _refine_interval(g, lo: Fraction, hi: Fraction, width: Fraction):
    if lo == hi:
        return lo, hi
    sign_lo = _poly.sign(_poly.evaluate(g, lo))
    while hi - lo > width:
        lo, hi = _bisect(g, lo, hi, sign_lo)
    return lo, hi


def _separate(g, items: list[list[Fraction]]) -> None:
    """Refine in place until all intervals are strictly pairwise disjoint."""
    while True:
        items.sort(key=lambda iv: (iv[0], iv[1]))
        clash = None
        for i in range(len(items) - 1):
            if items[i][1] >= items[i + 1][0]:
                clash = i
                break
        if clash is None:
            return
        for iv in (items[clash], items[clash + 1]):
            if iv[0] != iv[1]:
                width = (iv[1] - iv[0]) / 2
                iv[0], iv[1] = _refine_interval(g, iv[0], iv[1], width)


def _initial_isolation(form: BinaryForm):
    require_admissible(form)
    exact = integer_roots(form)
    g = form.dehomogenized()
    for r in exact:
        g = _poly.deflate(g, r)
    items = [[Fraction(r), Fraction(r)] for r in exact]
    if _poly.degree(g) >= 1:
        chain = _poly.sturm_chain(g)
        bound = _poly.cauchy_bound(g)
        lo, hi = Fraction(-bound), Fraction(bound)
        work = [(lo, hi, _poly.count_roots(chain, lo, hi))]
        while work:
            lo, hi, count = work.pop()
            if count == 0:
                continue
            if count == 1:
                items.append([lo, hi])
                continue
            mid = (lo + hi) / 2
            left = _poly.count_roots(chain, lo, mid)
            work.append((lo, mid, left))
            work.append((mid, hi, count - left))
    return g, items


def _build(form, g, items) -> RootData:
    _separate(g, items)
    intervals = tuple((lo, hi) for lo, hi in items)
    a_lo, a_hi, b_lo, b_hi = _gap_enclosures(intervals)
    return RootData(form, intervals, g, a_lo, a_hi, b_lo, b_hi)


def isolate_roots(form: BinaryForm, width: Fraction = DEFAULT_ISOLATION_WIDTH) -> RootData:
    """Isolate the n real roots of f in disjoint intervals of width <= ``width``.

    Raises :class:`~relthue.forms.InadmissibleFormError` for inadmissible
    forms.  Bisection is deterministic, so requesting a smaller width always
    yields sub-intervals of the wider run (monotone enclosures).
    """
    if width <= 0:
        raise ValueError("width must be positive")
    g, items = _initial_isolation(form)
    for iv in items:
        iv[0], iv[1] = _refine_interval(g, iv[0], iv[1], width)
    return _build(form, g, items)


def refine(data: RootData, width: Fraction) -> RootData:
    """Continue bisection of an existing isolation down to a smaller width."""
    if width <= 0:
        raise ValueError("width must be positive")
    items = [[lo, hi] for lo, hi in data.intervals]
    for iv in items:
        iv[0], iv[1] = _refine_interval(data.reduced, iv[0], iv[1], width)
    return _build(data.form, data.reduced, items)


@dataclass(frozen=True)
class TheoremConstants:
    """Directed-rounded enclosures of the solution-structure constants."""

    degree: int
    K: Fraction
    epsilon: Fraction
    min_gap_lower: Fraction
    min_gap_upper: Fraction
    gap_product_lower: Fraction
    gap_product_upper: Fraction
    approx_coeff_lower: Fraction
    approx_coeff_upper: Fraction
    gate_lower: Fraction
    gate_upper: Fraction


@dataclass(frozen=True)
class GateThresholds:
    """Upper bounds for the squared |y| gates of the three rigidity conclusions.

    A conclusion is asserted only when norm(y) strictly exceeds the squared
    bound, i.e. only strictly inside its proven range.
    """

    proportionality_sq: Fraction
    real_vanish_sq: Fraction
    imag_vanish_sq: Fraction

    def display(self) -> tuple[Fraction, Fraction, Fraction]:
        """Rational upper bounds for the three un-squared thresholds."""
        return (
            nth_root_upper(self.proportionality_sq, 2),
            nth_root_upper(self.real_vanish_sq, 2),
            nth_root_upper(self.imag_vanish_sq, 2),
        )


def constants(roots: RootData, K, epsilon) -> TheoremConstants:
    """Certified enclosures of approx_coeff and gate from root-gap enclosures.

    Requires rational K >= 1 and 0 < epsilon < 1.  Both upper bounds shrink
    monotonically as the isolation width shrinks.
    """
    K = Fraction(K)
    epsilon = Fraction(epsilon)
    if K < 1:
        raise ValueError("K must be >= 1")
    if not (0 < epsilon < 1):
        raise ValueError("epsilon must lie strictly between 0 and 1")
    n = roots.form.degree
    if roots.min_gap_lower <= 0 or roots.gap_product_lower <= 0:
        raise ValueError("root intervals are not strictly separated")
    shrink = (1 - epsilon) ** (n - 1)
    c_upper = K / (shrink * roots.gap_product_lower)
    c_lower = K / (shrink * roots.gap_product_upper)
    g_upper = nth_root_upper(K, n) / (epsilon * roots.min_gap_lower)
    g_lower = nth_root_lower(K, n) / (epsilon * roots.min_gap_upper)
    return TheoremConstants(
        degree=n,
        K=K,
        epsilon=epsilon,
        min_gap_lower=roots.min_gap_lower,
        min_gap_upper=roots.min_gap_upper,
        gap_product_lower=roots.gap_product_lower,
        gap_product_upper=roots.gap_product_upper,
        approx_coeff_lower=c_lower,
        approx_coeff_upper=c_upper,
        gate_lower=g_lower,
        gate_upper=g_upper,
    )


@lru_cache(maxsize=256)
def thresholds(consts: TheoremConstants, field: QuadraticField) -> GateThresholds:
    """Squared applicability gates for the given field, rounded upward.

    The three conclusions require |y| > max(gate, X^(1/e)) with
    X = s*approx_coeff (real-vanish) or s*approx_coeff/sqrt(m) (the others)
    and e = n-2 or n-1; squaring removes the square roots, so everything is
    an n-th root of a rational, bounded above dyadically.
    """
    n = consts.degree
    s = field.s
    gate_sq = consts.gate_upper**2
    scaled_sq = Fraction(s * s) * consts.approx_coeff_upper**2
    return GateThresholds(
        proportionality_sq=max(gate_sq, nth_root_upper(scaled_sq / field.m, n - 2)),
        real_vanish_sq=max(gate_sq, nth_root_upper(scaled_sq, n - 1)),
        imag_vanish_sq=max(gate_sq, nth_root_upper(scaled_sq / field.m, n - 1)),
    )


def _gate_floors(th: GateThresholds) -> tuple[int, int, int]:
    return (
        floor(th.proportionality_sq),
        floor(th.real_vanish_sq),
        floor(th.imag_vanish_sq),
    )


def stable_constants(
    form: BinaryForm,
    K,
    epsilon,
    field: QuadraticField,
    width: Fraction = DEFAULT_ISOLATION_WIDTH,
    max_halvings: int = 12,
) -> tuple[RootData, TheoremConstants]:
    """Isolate roots and halve the width until the integer gates stabilize.

    The gates are compared against integer norms, so refinement beyond the
    point where their floors stop moving cannot change any decision.
    """
    data = isolate_roots(form, width)
    consts = constants(data, K, epsilon)
    gates = _gate_floors(thresholds(consts, field))
    for _ in range(max_halvings):
        width = width / 2
        finer = refine(data, width)
        finer_consts = constants(finer, K, epsilon)
        finer_gates = _gate_floors(thresholds(finer_consts, field))
        if finer_gates == gates:
            return finer, finer_consts
        data, consts, gates = finer, finer_consts, finer_gates
    return data, consts
