"""Independent brute-force enumeration of the relative inequality over a box.

Scans every coordinate quadruple (x1, x2, y1, y2) in [-H, H]^4 and keeps
those with norm(F(x, y)) <= K^2, exactly.  Shares only the ring arithmetic
with the solver — no pruning logic — so it serves as ground truth for the
reduction.  Runtime is O(H^4); fine for desk-scale H.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .forms import BinaryForm
from .quadfield import QuadraticField, RingElement

Quad = tuple[int, int, int, int]


@dataclass(frozen=True)
class OracleResult:
    height: int
    solutions: tuple[tuple[Quad, int], ...]  # (quadruple, norm of F), solver sort order

    def quadruples(self) -> set[Quad]:
        return {quad for quad, _ in self.solutions}


def brute_force(field: QuadraticField, form: BinaryForm, K, height: int) -> OracleResult:
    if height < 0:
        raise ValueError("height must be nonnegative")
    K_sq = Fraction(K) ** 2
    span = range(-height, height + 1)
    found = []
    for y1 in span:
        for y2 in span:
            y = RingElement(y1, y2)
            norm_y = field.norm(y)
            for x1 in span:
                for x2 in span:
                    x = RingElement(x1, x2)
                    value = field.evaluate_form(form, x, y)
                    if field.norm(value) <= K_sq:
                        found.append((norm_y, (x1, x2, y1, y2), field.norm(value)))
    found.sort(key=lambda t: (t[0], t[1][2], t[1][3], t[1][0], t[1][1]))
    return OracleResult(height=height, solutions=tuple((quad, nv) for _, quad, nv in found))
