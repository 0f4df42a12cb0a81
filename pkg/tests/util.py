"""Shared helpers for the test suite: independent oracles and small builders.

The rectangle scan here is deliberately naive — it shares no pruning logic
with the package — so it can serve as ground truth for the windowed
enumerator.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil

from relthue import BinaryForm, isolate_roots, nth_root_upper


def form_from_roots(roots) -> BinaryForm:
    """Monic product of (x - r*y) over the given integer roots."""
    coeffs = [1]
    for r in roots:
        coeffs = [0] + coeffs
        for k in range(len(coeffs) - 1):
            coeffs[k] -= r * coeffs[k + 1]
    return BinaryForm(tuple(coeffs))


def rectangle_solutions(form: BinaryForm, bound, ymax: int) -> set[tuple[int, int]]:
    """Full-rectangle scan of |F(a, b)| <= bound, |b| <= ymax.

    The per-b a-range max|root|*|b| + K'^(1/n) provably contains every
    solution: if all factors |a - root_j*b| exceeded K'^(1/n) the product
    would exceed the bound.
    """
    bound = Fraction(bound)
    data = isolate_roots(form, Fraction(1, 2**10))
    root_cap = max(max(abs(lo), abs(hi)) for lo, hi in data.intervals)
    window = max(Fraction(1), nth_root_upper(bound, form.degree, 16))
    out = set()
    for b in range(-ymax, ymax + 1):
        a_cap = ceil(root_cap * abs(b) + window) + 1
        for a in range(-a_cap, a_cap + 1):
            if abs(form.evaluate(a, b)) <= bound:
                out.add((a, b))
    return out


Iv = tuple[Fraction, Fraction]


def iv_mul(a: Iv, b: Iv) -> Iv:
    products = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(products), max(products))


def iv_sub(a: Iv, b: Iv) -> Iv:
    return (a[0] - b[1], a[1] - b[0])


def complex_iv_mul(x: tuple[Iv, Iv], y: tuple[Iv, Iv]) -> tuple[Iv, Iv]:
    re = iv_sub(iv_mul(x[0], y[0]), iv_mul(x[1], y[1]))
    im_lo_hi = iv_mul(x[0], y[1])
    im2 = iv_mul(x[1], y[0])
    return re, (im_lo_hi[0] + im2[0], im_lo_hi[1] + im2[1])
