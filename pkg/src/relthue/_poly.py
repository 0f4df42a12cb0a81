"""Exact univariate polynomial helpers.

Coefficient lists are ascending (``coeffs[k]`` multiplies ``x**k``) and hold
exact integers or :class:`fractions.Fraction` values.  Everything here is
tolerance-free: signs, root counts and divisions are decided by exact rational
arithmetic only.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Coeffs = Sequence


def strip(coeffs: Coeffs) -> tuple:
    """Drop high-degree zero coefficients; the zero polynomial becomes ()."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(coeffs: Coeffs) -> int:
    """Degree of a stripped coefficient list; -1 for the zero polynomial."""
    return len(coeffs) - 1


def evaluate(coeffs: Coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def derivative(coeffs: Coeffs) -> tuple:
    return tuple(k * coeffs[k] for k in range(1, len(coeffs)))


def poly_rem(num: Coeffs, den: Coeffs) -> tuple:
    """Remainder of exact polynomial division over the rationals."""
    den = [Fraction(c) for c in den]
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in num]
    dd = len(den) - 1
    lead = den[-1]
    while len(rem) - 1 >= dd and rem:
        shift = len(rem) - 1 - dd
        factor = rem[-1] / lead
        for i in range(dd + 1):
            rem[shift + i] -= factor * den[i]
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return tuple(rem)


def poly_gcd(a: Coeffs, b: Coeffs) -> tuple:
    """Monic gcd over the rationals (constant 1 for coprime inputs)."""
    a = strip([Fraction(c) for c in a])
    b = strip([Fraction(c) for c in b])
    while b:
        a, b = b, strip(poly_rem(a, b))
    if a:
        lead = a[-1]
        a = tuple(c / lead for c in a)
    return a


def sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def variations(signs: Sequence[int]) -> int:
    """Number of sign changes, zeros dropped."""
    seq = [s for s in signs if s != 0]
    return sum(1 for u, v in zip(seq, seq[1:]) if u != v)


def sturm_chain(coeffs: Coeffs) -> list[tuple]:
    """Sturm sequence of a squarefree polynomial.

    ``p0 = f``, ``p1 = f'``, ``p_{k+1} = -rem(p_{k-1}, p_k)`` until the
    remainder vanishes.  For squarefree input the chain ends in a nonzero
    constant, and the variation difference V(a) - V(b) counts the distinct
    real roots in (a, b].
    """
    chain = [strip([Fraction(c) for c in coeffs])]
    chain.append(strip(derivative(chain[0])))
    while chain[-1] and degree(chain[-1]) >= 0:
        rem = strip(poly_rem(chain[-2], chain[-1]))
        if not rem:
            break
        chain.append(tuple(-c for c in rem))
    return chain


def chain_variations_at(chain: Sequence[Coeffs], x) -> int:
    return variations([sign(evaluate(p, x)) for p in chain])


def chain_variations_at_inf(chain: Sequence[Coeffs], positive: bool) -> int:
    signs = []
    for p in chain:
        if not p:
            signs.append(0)
            continue
        s = sign(p[-1])
        if not positive and degree(p) % 2 == 1:
            s = -s
        signs.append(s)
    return variations(signs)


def count_roots(chain: Sequence[Coeffs], lo=None, hi=None) -> int:
    """Distinct real roots in (lo, hi]; ``None`` bounds mean -inf / +inf."""
    v_lo = chain_variations_at_inf(chain, False) if lo is None else chain_variations_at(chain, lo)
    v_hi = chain_variations_at_inf(chain, True) if hi is None else chain_variations_at(chain, hi)
    return v_lo - v_hi


def cauchy_bound(coeffs: Coeffs) -> int:
    """Integer R with every (real or complex) root strictly inside |x| < R."""
    c = strip(coeffs)
    if degree(c) < 1:
        raise ValueError("constant polynomial has no roots")
    lead = abs(Fraction(c[-1]))
    worst = max(abs(Fraction(k)) / lead for k in c[:-1])
    return 1 + math.floor(worst) + 1


def deflate(coeffs: Coeffs, root: int) -> tuple:
    """Exact synthetic division by (x - root); the root must be exact."""
    quot = [0] * (len(coeffs) - 1)
    carry = 0
    for k in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[k] + root * carry
        quot[k - 1] = carry
    if coeffs[0] + root * carry != 0:
        raise ValueError(f"{root} is not a root")
    return tuple(quot)


def iroot(k: int, r: int) -> int:
    """floor(k ** (1/r)) for k >= 0, r >= 1, by Newton iteration on integers."""
    if k < 0 or r < 1:
        raise ValueError("iroot needs k >= 0, r >= 1")
    if k == 0:
        return 0
    if r == 1:
        return k
    if r == 2:
        return math.isqrt(k)
    x = 1 << ((k.bit_length() + r - 1) // r)
    while True:
        y = ((r - 1) * x + k // x ** (r - 1)) // r
        if y >= x:
            break
        x = y
    while x ** r > k:
        x -= 1
    while (x + 1) ** r <= k:
        x += 1
    return x
