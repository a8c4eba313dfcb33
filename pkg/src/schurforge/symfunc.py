"""The ring of symmetric functions in the Schur basis.

All arithmetic goes through the power-sum basis using symmetric-group
character tables: s_pi = sum_mu chi_pi(mu)/z_mu p_mu and back.  One
exact transition algorithm therefore serves multiplication, the
Littlewood-Richardson coefficients, and the characteristic map from
class functions.  Products of Schur basis elements must come out as
nonnegative integer combinations; integrality is asserted and a failure
raises, acting as a corruption detector for the character machinery.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .errors import IncompleteClassFunction, SchurforgeError
from .partitions import Partition, centralizer_order, partitions_of, revlex_key
from .symgroup import character_table


class SymFunc:
    """Finite Q-linear combination of Schur basis elements."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for pi, c in (coeffs or {}).items():
            pi = pi if isinstance(pi, Partition) else Partition(pi)
            c = Fraction(c)
            if c:
                clean[pi] = c
        self.coeffs = clean

    @classmethod
    def schur(cls, pi) -> "SymFunc":
        return cls({Partition(pi): Fraction(1)})

    @classmethod
    def one(cls) -> "SymFunc":
        return cls({Partition(): Fraction(1)})

    @classmethod
    def zero(cls) -> "SymFunc":
        return cls()

    def coefficient(self, pi) -> Fraction:
        return self.coeffs.get(Partition(pi), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def homogeneous_degrees(self) -> tuple[int, ...]:
        return tuple(sorted({pi.size for pi in self.coeffs}))

    def __add__(self, other):
        out = dict(self.coeffs)
        for pi, c in other.coeffs.items():
            out[pi] = out.get(pi, Fraction(0)) + c
        return SymFunc(out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for pi, c in other.coeffs.items():
            out[pi] = out.get(pi, Fraction(0)) - c
        return SymFunc(out)

    def __neg__(self):
        return SymFunc({pi: -c for pi, c in self.coeffs.items()})

    def scale(self, s) -> "SymFunc":
        s = Fraction(s)
        return SymFunc({pi: s * c for pi, c in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __str__(self):
        return format_symfunc(self)

    def __repr__(self):
        return f"SymFunc({format_symfunc(self)})"


@cache
def schur_to_powersum(pi: Partition) -> dict:
    """Coefficients of s_pi in the power-sum basis: chi_pi(mu)/z_mu."""
    table = character_table(pi.size)
    out = {}
    for mu in partitions_of(pi.size):
        chi = table.chi(pi, mu)
        if chi:
            out[mu] = Fraction(chi, centralizer_order(mu))
    return out


@cache
def _powersum_to_schur(mu: Partition) -> dict:
    """p_mu = sum_pi chi_pi(mu) s_pi."""
    table = character_table(mu.size)
    out = {}
    for pi in partitions_of(mu.size):
        chi = table.chi(pi, mu)
        if chi:
            out[pi] = chi
    return out


def to_powersum(f: SymFunc) -> dict:
    """Power-sum expansion of f as a map Partition -> Fraction."""
    out: dict[Partition, Fraction] = {}
    for pi, c in f.coeffs.items():
        for mu, a in schur_to_powersum(pi).items():
            out[mu] = out.get(mu, Fraction(0)) + c * a
    return {mu: c for mu, c in out.items() if c}


def from_powersum(coeffs: dict) -> SymFunc:
    """Schur expansion of sum c_mu p_mu."""
    out: dict[Partition, Fraction] = {}
    for mu, c in coeffs.items():
        mu = mu if isinstance(mu, Partition) else Partition(mu)
        c = Fraction(c)
        if not c:
            continue
        for pi, chi in _powersum_to_schur(mu).items():
            out[pi] = out.get(pi, Fraction(0)) + c * chi
    return SymFunc(out)


def _merge_parts(mu: Partition, eta: Partition) -> Partition:
    return Partition(sorted(mu.parts + eta.parts, reverse=True))


def mul(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product in the ring of symmetric functions.

    Computed by a power-sum round trip: p_mu p_eta is concatenation of
    parts, so the product is a single convolution plus two transitions.
    """
    fp = to_powersum(f)
    gp = to_powersum(g)
    prod: dict[Partition, Fraction] = {}
    for mu, a in fp.items():
        for eta, b in gp.items():
            key = _merge_parts(mu, eta)
            prod[key] = prod.get(key, Fraction(0)) + a * b
    out = from_powersum(prod)
    if f.is_integral() and g.is_integral() and not out.is_integral():
        raise SchurforgeError(
            "integral inputs produced a non-integral Schur expansion; "
            "character data is corrupt"
        )
    return out


def lr(mu, eta, pi) -> int:
    """Littlewood-Richardson coefficient: multiplicity of s_pi in s_mu s_eta."""
    mu, eta, pi = Partition(mu), Partition(eta), Partition(pi)
    if pi.size != mu.size + eta.size:
        return 0
    c = mul(SymFunc.schur(mu), SymFunc.schur(eta)).coefficient(pi)
    if c.denominator != 1 or c < 0:
        raise SchurforgeError(f"LR coefficient came out as {c}")
    return int(c)


def p(m: int) -> SymFunc:
    """Power sum p_m as an element of the Schur basis."""
    if m < 1:
        raise ValueError("p_m needs m >= 1")
    return from_powersum({Partition((m,)): Fraction(1)})


def e(n: int) -> SymFunc:
    """Elementary symmetric function e_n = s_(1^n)."""
    return SymFunc.schur(Partition((1,) * n)) if n else SymFunc.one()


def h(n: int) -> SymFunc:
    """Complete homogeneous function h_n = s_(n)."""
    return SymFunc.schur(Partition((n,))) if n else SymFunc.one()


def newton_check(n: int) -> bool:
    """Whether sum_{k=1..n} (-1)^k p_k e_{n-k} = -n e_n holds exactly."""
    if n < 1:
        raise ValueError("n >= 1 required")
    lhs = SymFunc.zero()
    for k in range(1, n + 1):
        term = mul(p(k), e(n - k)).scale((-1) ** k)
        lhs = lhs + term
    rhs = e(n).scale(-n)
    return lhs == rhs


def vanishing_schur_sum(pi) -> SymFunc:
    """sum_{mu,eta} (-1)^{|eta|} c^pi_{mu,eta} s_mu s_{eta^t}; contract: zero.

    This is the Schur-basis shadow of evaluating S_pi on x - x, the
    identity forcing the negation rule for Schur functors of virtual
    classes.
    """
    pi = Partition(pi)
    if pi.size == 0:
        raise ValueError("needs |pi| > 0")
    total = SymFunc.zero()
    for k in range(pi.size + 1):
        for mu in partitions_of(k):
            for eta in partitions_of(pi.size - k):
                c = lr(mu, eta, pi)
                if not c:
                    continue
                term = mul(SymFunc.schur(mu), SymFunc.schur(eta.conjugate()))
                total = total + term.scale(c * (-1) ** eta.size)
    return total


def ch(n: int, values: dict) -> SymFunc:
    """Characteristic map: class function on Sigma_n -> symmetric function.

    ch(chi) = sum_mu values(mu)/z_mu p_mu; on an irreducible character
    it returns the corresponding Schur basis element.
    """
    values = {Partition(mu): Fraction(v) for mu, v in values.items()}
    missing = [mu for mu in partitions_of(n) if mu not in values]
    if missing:
        raise IncompleteClassFunction(
            f"missing classes {[str(m) for m in missing]} for n={n}"
        )
    return from_powersum(
        {mu: values[mu] / centralizer_order(mu) for mu in partitions_of(n)}
    )


def omega(f: SymFunc) -> SymFunc:
    """The involution sending p_k to (-1)^(k-1) p_k; s_pi goes to s_{pi^t}."""
    fp = to_powersum(f)
    return from_powersum(
        {mu: c * (-1) ** (mu.size - len(mu)) for mu, c in fp.items()}
    )


def _coeff_text(c: Fraction, body: str) -> str:
    if body:
        if abs(c) == 1:
            return body
        if abs(c).denominator == 1:
            return f"{abs(c)}*{body}"
        return f"{abs(c.numerator)}*{body}/{c.denominator}" if abs(
            c.numerator
        ) != 1 else f"{body}/{c.denominator}"
    return str(abs(c))


def _format_basis(coeffs: dict, symbol: str) -> str:
    if not coeffs:
        return "0"
    keys = sorted(coeffs, key=lambda piece: (piece.size, revlex_key(piece)))
    parts = []
    for pi in keys:
        c = coeffs[pi]
        body = f"{symbol}[{pi}]" if pi.parts else f"{symbol}[]"
        parts.append(("-" if c < 0 else "+", _coeff_text(c, body)))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def format_symfunc(f: SymFunc, basis: str = "s") -> str:
    """Canonical text, e.g. ``s[2,1] + 3*s[1,1,1]``; basis="p" for power sums."""
    if basis == "s":
        return _format_basis(f.coeffs, "s")
    if basis == "p":
        return _format_basis(to_powersum(f), "p")
    raise ValueError(f"unknown basis {basis!r}")
