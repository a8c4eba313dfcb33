"""Truncated formal power series in one variable t.

A series carries an explicit truncation order N and coefficients
c0..cN.  Operations between series of different orders truncate to the
smaller order instead of erroring, since every identity in this package
is verified coefficientwise up to a chosen order.

Coefficients may live in any commutative ring whose elements support
+, -, * and compare equal against the integers 0 and 1; Fraction,
LaurentZ and RDElement all qualify.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import NonUnitConstantTerm


class Series:
    """Formal power series c0 + c1*t + ... + cN*t^N, exact coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order=None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        if len(coeffs) < order + 1:
            coeffs += [0] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs[: order + 1])

    @classmethod
    def constant(cls, value, order: int) -> "Series":
        return cls([value], order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([1], order)

    def coefficient(self, k: int):
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def truncate(self, order: int) -> "Series":
        if order >= self.order:
            return self if order == self.order else Series(self.coeffs, order=self.order)
        return Series(self.coeffs[: order + 1], order)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __add__(self, other):
        n = min(self.order, other.order)
        return Series([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], n)

    def __sub__(self, other):
        n = min(self.order, other.order)
        return Series([self.coeffs[k] - other.coeffs[k] for k in range(n + 1)], n)

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order)

    def __mul__(self, other):
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = 0
            for i in range(k + 1):
                a = self.coeffs[i]
                b = other.coeffs[k - i]
                if a == 0 or b == 0:
                    continue
                acc = acc + a * b
            out.append(acc)
        return Series(out, n)

    def __pow__(self, k: int):
        base = self if k >= 0 else series_inv(self)
        k = abs(k)
        out = Series.one(self.order)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __str__(self):
        return format_series(self)

    def __repr__(self):
        return f"Series({format_series(self)!r}, order={self.order})"


def series_mul(f: Series, g: Series) -> Series:
    """Cauchy product, truncated to the smaller order."""
    return f * g


def _invert_constant(c0):
    if c0 == 1:
        return 1
    if c0 == -1:
        return -1
    if isinstance(c0, Fraction) and c0 != 0:
        return 1 / c0
    if isinstance(c0, int) or c0 == 0:
        raise NonUnitConstantTerm(f"constant term {c0!r} is not invertible")
    try:
        return c0.inverse()
    except (AttributeError, ArithmeticError) as exc:
        raise NonUnitConstantTerm(f"constant term {c0!r} is not invertible") from exc


def series_inv(f: Series) -> Series:
    """Two-sided inverse up to the truncation order.

    Requires the constant term to be a unit of the coefficient ring.
    """
    c0 = f.coeffs[0]
    if c0 == 1:
        # division-free path, valid over any coefficient ring
        out = [c0]
        for n in range(1, f.order + 1):
            acc = 0
            for k in range(1, n + 1):
                a = f.coeffs[k]
                if a == 0:
                    continue
                acc = acc + a * out[n - k]
            out.append(-acc)
        return Series(out, f.order)
    c0inv = _invert_constant(c0)
    out = [c0inv]
    for n in range(1, f.order + 1):
        acc = 0
        for k in range(1, n + 1):
            a = f.coeffs[k]
            if a == 0:
                continue
            acc = acc + a * out[n - k]
        out.append(-(c0inv * acc))
    return Series(out, f.order)


def neg_log_derivative(f: Series) -> Series:
    """-t f'/f for a series with constant term exactly 1.

    The coefficient of t^m, multiplied by (-1)^m, is the m-th ghost
    component of f as an element of the big Witt group.
    """
    if not f.coeffs[0] == 1:
        raise NonUnitConstantTerm("log-derivative needs constant term 1")
    tfprime = Series([-(m * f.coeffs[m]) for m in range(f.order + 1)], f.order)
    return tfprime * series_inv(f)


_SERIES_TERM_RE = re.compile(r"^(-?\d+(?:/\d+)?\*?)?(t(\^\d+)?)?$")


def format_series(f: Series, var: str = "t") -> str:
    """Canonical text: ascending powers, zero terms skipped."""
    parts = []
    for k, c in enumerate(f.coeffs):
        if c == 0:
            continue
        cs = str(c)
        compound = (" " in cs) or ("+" in cs[1:]) or ("-" in cs[1:])
        if compound:
            cs = f"({cs})"
            sign, body_coeff = "+", cs
        elif cs.startswith("-"):
            sign, body_coeff = "-", cs[1:]
        else:
            sign, body_coeff = "+", cs
        if k == 0:
            body = body_coeff
        else:
            head = var if k == 1 else f"{var}^{k}"
            body = head if body_coeff == "1" else f"{body_coeff}*{head}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def parse_series(text: str, order=None) -> Series:
    """Parse a rational-coefficient series literal like ``1 - t + 1/2*t^2``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty series literal")
    terms = []
    current = ""
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] not in "+-*/^":
            terms.append(current)
            current = ch
        else:
            current += ch
    terms.append(current)
    coeffs: dict[int, Fraction] = {}
    for term in terms:
        sign = 1
        body = term
        if body and body[0] in "+-":
            sign = -1 if body[0] == "-" else 1
            body = body[1:]
        m = _SERIES_TERM_RE.match(body)
        if not body or not m or (not m.group(1) and not m.group(2)):
            raise ValueError(f"bad series term {term!r} in {text!r}")
        coeff_part, t_part, exp_part = m.group(1), m.group(2), m.group(3)
        coeff = sign * (Fraction(coeff_part.rstrip("*")) if coeff_part else Fraction(1))
        k = (int(exp_part[1:]) if exp_part else 1) if t_part else 0
        coeffs[k] = coeffs.get(k, Fraction(0)) + coeff
    top = max(coeffs) if coeffs else 0
    n = top if order is None else order
    return Series([coeffs.get(k, Fraction(0)) for k in range(n + 1)], n)
