"""Integer Laurent polynomials in one variable q.

These house classes in the Grothendieck group of the graded backend: a
line sitting in degree d has class (-1)^d q^d, so a class is any finitely
supported integer combination of powers of q.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import NonQAlgebra

_TERM_RE = re.compile(r"^(\d+\*?)?(q(\^-?\d+)?)?$")


class LaurentZ:
    """Laurent polynomial with integer coefficients.

    Stored as exponent -> nonzero coefficient, so equality is structural.
    Instances are immutable; arithmetic returns new values.  Integers
    coerce on contact, e.g. ``1 - LaurentZ.q()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, value=0):
        if isinstance(value, LaurentZ):
            coeffs = dict(value.coeffs)
        elif isinstance(value, int):
            coeffs = {0: value} if value else {}
        elif isinstance(value, dict):
            coeffs = {int(e): int(c) for e, c in value.items() if c}
        else:
            raise TypeError(f"cannot build LaurentZ from {value!r}")
        self.coeffs = coeffs

    @classmethod
    def q(cls, exponent: int = 1, coefficient: int = 1) -> "LaurentZ":
        return cls({exponent: coefficient})

    def items(self):
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self.coeffs.items())

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentZ(other)
        if not isinstance(other, LaurentZ):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentZ(other)
        if not isinstance(other, LaurentZ):
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentZ(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentZ({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentZ(other)
        if not isinstance(other, LaurentZ):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentZ(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentZ(other)
        if not isinstance(other, LaurentZ):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentZ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = LaurentZ(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_monomial_unit(self) -> bool:
        return len(self.coeffs) == 1 and abs(next(iter(self.coeffs.values()))) == 1

    def inverse(self) -> "LaurentZ":
        """Inverse of a unit; only +-q^d is invertible here."""
        if not self.is_monomial_unit():
            raise ArithmeticError(f"{self} is not a unit of Z[q, q^-1]")
        ((e, c),) = self.coeffs.items()
        return LaurentZ({-e: c})

    def divide_exact(self, k: int) -> "LaurentZ":
        """Divide every coefficient by k; NonQAlgebra if any division is inexact."""
        out = {}
        for e, c in self.coeffs.items():
            if c % k:
                raise NonQAlgebra(f"{self} is not divisible by {k}")
            out[e] = c // k
        return LaurentZ(out)

    def substitute_power(self, n: int) -> "LaurentZ":
        """q -> q^n."""
        return LaurentZ({e * n: c for e, c in self.coeffs.items()})

    def evaluate(self, value) -> Fraction:
        """Value of the polynomial at a rational point."""
        value = Fraction(value)
        return sum((c * value**e for e, c in self.coeffs.items()), Fraction(0))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                body = str(abs(c))
            else:
                head = "q" if e == 1 else f"q^{e}"
                body = head if abs(c) == 1 else f"{abs(c)}*{head}"
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"LaurentZ({self})"


def parse_laurent(text: str) -> LaurentZ:
    """Parse the canonical textual form, e.g. ``q^-1 + 2 - 3*q^2``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty Laurent literal")
    # Split into signed terms; a '-' directly after '^' is an exponent sign.
    terms = []
    current = ""
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] != "^" and s[i - 1] not in "+-":
            terms.append(current)
            current = ch
        else:
            current += ch
    terms.append(current)
    out: dict[int, int] = {}
    for term in terms:
        sign = 1
        body = term
        if body and body[0] in "+-":
            sign = -1 if body[0] == "-" else 1
            body = body[1:]
        m = _TERM_RE.match(body)
        if not body or not m or (not m.group(1) and not m.group(2)):
            raise ValueError(f"bad Laurent term {term!r} in {text!r}")
        coeff_part, q_part, exp_part = m.group(1), m.group(2), m.group(3)
        coeff = sign * (int(coeff_part.rstrip("*")) if coeff_part else 1)
        if q_part:
            exp = int(exp_part[1:]) if exp_part else 1
        else:
            exp = 0
        out[exp] = out.get(exp, 0) + coeff
    return LaurentZ(out)
