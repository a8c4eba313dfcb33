"""Integer partitions: enumeration, conjugation, hooks, dimension polynomial.

Partitions index the irreducible symmetric-group representations, the
Schur functors, and the cycle types, so nearly every module builds on
this one.  The empty tuple is the unique partition of 0.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import factorial


class Partition:
    """Weakly decreasing sequence of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        if isinstance(parts, Partition):
            parts = parts.parts
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        self.parts = parts

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if isinstance(other, tuple):
            return self.parts == other
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts!r}"

    def __str__(self):
        return ",".join(str(p) for p in self.parts) if self.parts else "[]"

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def cells(self):
        """(row, col) cells of the diagram, 0-indexed, row-major."""
        for i, p in enumerate(self.parts):
            for j in range(p):
                yield i, j

    def hook(self, i: int, j: int) -> int:
        conj = self.conjugate()
        return self.parts[i] - j + conj.parts[j] - i - 1

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse a literal like ``3,1,1``; the empty partition is ``[]``."""
        s = text.strip()
        if s in ("[]", ""):
            return cls()
        return cls(int(p) for p in s.split(","))


EMPTY = Partition()


def conjugate(pi: Partition) -> Partition:
    return pi.conjugate()


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, each once, in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out: list[Partition] = []

    def rec(rem, maxp, prefix):
        if rem == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(rem, maxp), 0, -1):
            rec(rem - p, p, prefix + (p,))

    rec(n, n, ())
    return tuple(out)


def revlex_key(pi: Partition):
    """Sort key giving the same reverse-lexicographic order as partitions_of."""
    return tuple(-p for p in pi.parts)


def dim_poly_eval(pi: Partition, m: int) -> int:
    """Value at m of the dimension polynomial of the Schur functor for pi.

    Computed by the hook-content product over diagram cells,
    prod (m + col - row) / hook(row, col), which is an integer for every
    integer m.
    """
    num = 1
    den = 1
    for i, j in pi.cells():
        num *= m + j - i
        den *= pi.hook(i, j)
    value = Fraction(num, den)
    if value.denominator != 1:
        raise ArithmeticError(f"hook-content product not integral for {pi}, m={m}")
    return int(value)


def centralizer_order(mu: Partition) -> int:
    """z_mu = prod k^(a_k) a_k! over part multiplicities; |C_mu| = n!/z_mu."""
    mult: dict[int, int] = {}
    for p in mu.parts:
        mult[p] = mult.get(p, 0) + 1
    z = 1
    for k, a in mult.items():
        z *= k**a * factorial(a)
    return z


def conjugacy_class_size(mu: Partition) -> int:
    return factorial(mu.size) // centralizer_order(mu)


def irrep_dimension(pi: Partition) -> int:
    """Number of standard Young tableaux, by the hook length formula."""
    denom = 1
    for i, j in pi.cells():
        denom *= pi.hook(i, j)
    return factorial(pi.size) // denom
