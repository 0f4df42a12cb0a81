"""Integer binary forms: exact evaluation and structural checks.

A binary form of degree n is F(x, y) = sum c_k x^k y^(n-k) with integer
coefficients.  The solver only handles forms whose dehomogenization
f(x) = F(x, 1) is monic with n distinct real roots; :func:`check_admissible`
decides that exactly (no floating point, no tolerances).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _poly

IntegerPair = tuple[int, int]


class InadmissibleFormError(ValueError):
    """Raised when an operation requires an admissible form and gets none."""


@dataclass(frozen=True)
class BinaryForm:
    """Binary form with ascending coefficients: coeffs[k] multiplies x^k y^(n-k)."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) < 2:
            raise ValueError("a binary form needs degree >= 1")
        if coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, a: int, b: int) -> int:
        """F(a, b) over the integers, computed exactly."""
        n = self.degree
        total = 0
        pa = 1
        apow = [1] * (n + 1)
        for k in range(1, n + 1):
            pa *= a
            apow[k] = pa
        pb = 1
        for k in range(n, -1, -1):
            c = self.coeffs[k]
            if c:
                total += c * apow[k] * pb
            pb *= b
        return total

    def dehomogenized(self) -> tuple[int, ...]:
        """Coefficients of f(x) = F(x, 1)."""
        return self.coeffs

    def __str__(self) -> str:
        n = self.degree
        parts = []
        for k in range(n, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = []
            if k:
                mono.append("x" if k == 1 else f"x^{k}")
            if n - k:
                mono.append("y" if n - k == 1 else f"y^{n - k}")
            body = "*".join(mono) if mono else "1"
            if abs(c) != 1 or not mono:
                body = f"{abs(c)}*{body}" if mono else str(abs(c))
            parts.append(("- " if c < 0 else "+ ") + body)
        if not parts:
            return "0"
        first = parts[0]
        first = "-" + first[2:] if first.startswith("- ") else first[2:]
        return " ".join([first, *parts[1:]])


@dataclass(frozen=True)
class AdmissibilityReport:
    ok: bool
    reason: str | None = None
    real_root_count: int | None = None


def check_admissible(form: BinaryForm) -> AdmissibilityReport:
    """Decide whether f(x) = F(x, 1) is monic of degree >= 3 with n distinct real roots.

    Squarefreeness is decided by the exact gcd(f, f'); the real-root count by
    a Sturm sequence over the rationals.  The report names the first failed
    condition.
    """
    f = form.dehomogenized()
    n = form.degree
    if n < 3:
        return AdmissibilityReport(False, "degree too small (need n >= 3)")
    if f[-1] != 1:
        return AdmissibilityReport(False, "non-monic (leading coefficient of F(x,1) must be 1)")
    g = _poly.poly_gcd(f, _poly.derivative(f))
    if _poly.degree(g) > 0:
        return AdmissibilityReport(False, "repeated root (gcd(f, f') is non-constant)")
    count = _poly.count_roots(_poly.sturm_chain(f))
    if count < n:
        return AdmissibilityReport(False, "complex root (fewer than n distinct real roots)", count)
    return AdmissibilityReport(True, None, count)


def require_admissible(form: BinaryForm) -> None:
    report = check_admissible(form)
    if not report.ok:
        raise InadmissibleFormError(f"form {form.coeffs} inadmissible: {report.reason}")


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def integer_roots(form: BinaryForm) -> tuple[int, ...]:
    """All integers r with f(r) = 0, sorted ascending.

    Because f is monic, every rational root is an integer, so the zero set of
    F over Z^2 is exactly {(r*t, t)} for the returned r, together with (0, 0).
    """
    f = form.dehomogenized()
    roots = []
    if f[0] == 0:
        roots.append(0)
        f = _poly.deflate(f, 0)
    for d in _divisors(f[0]):
        for r in (d, -d):
            if _poly.evaluate(f, r) == 0:
                roots.append(r)
    return tuple(sorted(set(roots)))
