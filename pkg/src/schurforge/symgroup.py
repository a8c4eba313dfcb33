"""The symmetric group: permutations, characters, projectors.

Irreducible character values come from the Murnaghan-Nakayama rule,
implemented on beta-numbers (first-column hook lengths), memoized.  The
group-algebra layer supplies the central isotypic idempotents
q = (chi(1)/n!) sum chi(s^-1) s and, through Young symmetrizers,
explicit irreducible matrix representations used as an independent
cross-check on the character values.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from functools import cache
from math import factorial

from .errors import BoundExceeded, SizeMismatch
from .matrixq import MatrixQ, from_columns, solve_exact
from .partitions import (
    Partition,
    centralizer_order,
    conjugacy_class_size,
    partitions_of,
)

CHARACTER_TABLE_BOUND = 8


class Permutation:
    """Bijection of {1..n}, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition; (a * b)(i) = a(b(i))."""
        if self.n != other.n:
            raise ValueError("permutations of different degrees")
        return Permutation(self.images[other.images[i] - 1] for i in range(self.n))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(inv)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def cycles(self):
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Partition:
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.n - sum(lengths))
        return Partition(sorted(lengths, reverse=True))

    def sign(self) -> int:
        return (-1) ** sum(len(c) - 1 for c in self.cycles())

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(i) for i in c) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation{self.images!r}"

    @classmethod
    def from_cycles(cls, text: str, n: int) -> "Permutation":
        """Parse cycle notation like ``(1 2 3)(4 5)``; identity is ``()``."""
        images = list(range(1, n + 1))
        body = text.strip()
        if body in ("()", ""):
            return cls(images)
        if not re.fullmatch(r"(\(\s*\d+(?:[ ,]+\d+)*\s*\))+", body):
            raise ValueError(f"bad cycle notation {text!r}")
        for cyc in re.findall(r"\(([^()]*)\)", body):
            points = [int(p) for p in re.split(r"[ ,]+", cyc.strip()) if p]
            if len(set(points)) != len(points) or any(not 1 <= p <= n for p in points):
                raise ValueError(f"bad cycle {cyc!r} for degree {n}")
            for a, b in zip(points, points[1:] + points[:1]):
                images[a - 1] = b
        return cls(images)


def cycle_type(sigma: Permutation) -> Partition:
    return sigma.cycle_type()


@cache
def symmetric_group(n: int) -> tuple[Permutation, ...]:
    """All of Sigma_n in lexicographic image order (identity first)."""
    return tuple(Permutation(p) for p in itertools.permutations(range(1, n + 1)))


def class_representative(mu: Partition) -> Permutation:
    """Permutation with the given cycle type: consecutive cycles."""
    images = list(range(1, mu.size + 1))
    start = 1
    for part in mu.parts:
        for i in range(start, start + part - 1):
            images[i - 1] = i + 1
        images[start + part - 2] = start
        start += part
    return Permutation(images)


def _strip_removals(parts: tuple[int, ...], k: int):
    """Ways to remove a border strip of size k; yields (rest parts, height)."""
    length = len(parts)
    betas = [parts[i] + (length - 1 - i) for i in range(length)]
    beta_set = set(betas)
    for i, b in enumerate(betas):
        nb = b - k
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for c in betas if nb < c < b)
        new = sorted((beta_set - {b}) | {nb}, reverse=True)
        new_parts = tuple(v - (length - 1 - j) for j, v in enumerate(new))
        while new_parts and new_parts[-1] == 0:
            new_parts = new_parts[:-1]
        yield new_parts, height


@cache
def _mn_value(pi_parts: tuple[int, ...], mu_parts: tuple[int, ...]) -> int:
    if not mu_parts:
        return 1 if not pi_parts else 0
    k = mu_parts[0]
    rest = mu_parts[1:]
    total = 0
    for new_parts, height in _strip_removals(pi_parts, k):
        total += (-1) ** height * _mn_value(new_parts, rest)
    return total


def character(pi: Partition, mu: Partition) -> int:
    """Irreducible character chi_pi evaluated on cycle type mu."""
    if pi.size != mu.size:
        raise SizeMismatch(f"|{pi}| = {pi.size} but |{mu}| = {mu.size}")
    return _mn_value(pi.parts, mu.parts)


class CharacterTable:
    """Complete character table of Sigma_n with class sizes."""

    __slots__ = ("n", "irreps", "classes", "values", "class_sizes")

    def __init__(self, n: int):
        self.n = n
        self.irreps = partitions_of(n)
        self.classes = partitions_of(n)
        self.values = {
            (pi, mu): character(pi, mu) for pi in self.irreps for mu in self.classes
        }
        self.class_sizes = {mu: conjugacy_class_size(mu) for mu in self.classes}

    def chi(self, pi: Partition, mu: Partition) -> int:
        return self.values[(pi, mu)]

    def dimension(self, pi: Partition) -> int:
        return self.values[(pi, Partition((1,) * self.n if self.n else ()))]

    def row(self, pi: Partition) -> tuple[int, ...]:
        return tuple(self.values[(pi, mu)] for mu in self.classes)


_TABLE_CACHE: dict[int, CharacterTable] = {}


def character_table(n: int, bound: int | None = None) -> CharacterTable:
    limit = CHARACTER_TABLE_BOUND if bound is None else bound
    if n > limit:
        raise BoundExceeded(f"character table bound {limit} exceeded by n={n}")
    if n not in _TABLE_CACHE:
        _TABLE_CACHE[n] = CharacterTable(n)
    return _TABLE_CACHE[n]


class GroupAlgebraElement:
    """Finitely supported map Sigma_n -> Q with convolution product."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=None):
        self.n = n
        clean = {}
        for perm, c in (coeffs or {}).items():
            c = Fraction(c)
            if c:
                if perm.n != n:
                    raise ValueError("permutation of wrong degree")
                clean[perm] = c
        self.coeffs = clean

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, Fraction(0)) + c
        return GroupAlgebraElement(self.n, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, Fraction(0)) - c
        return GroupAlgebraElement(self.n, out)

    def __mul__(self, other):
        """Convolution product extending the group law."""
        self._check(other)
        out: dict[Permutation, Fraction] = {}
        for p1, c1 in self.coeffs.items():
            for p2, c2 in other.coeffs.items():
                p = p1 * p2
                out[p] = out.get(p, Fraction(0)) + c1 * c2
        return GroupAlgebraElement(self.n, out)

    def scale(self, s) -> "GroupAlgebraElement":
        s = Fraction(s)
        return GroupAlgebraElement(self.n, {p: s * c for p, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("group algebra elements of different degrees")

    def __repr__(self):
        return f"GroupAlgebraElement(n={self.n}, {len(self.coeffs)} terms)"


def isotypic_projector(pi: Partition) -> GroupAlgebraElement:
    """Central idempotent (chi(1)/n!) sum_s chi(s^-1) s cutting the pi-isotypic part."""
    n = pi.size
    table = character_table(n)
    dim = table.dimension(pi)
    coeffs = {}
    for sigma in symmetric_group(n):
        chi = table.chi(pi, sigma.cycle_type())
        if chi:
            coeffs[sigma.inverse()] = Fraction(dim * chi, factorial(n))
    return GroupAlgebraElement(n, coeffs)


def _row_column_groups(pi: Partition):
    """Row and column stabilizers of the canonical tableau of shape pi."""
    n = pi.size
    rows = []
    next_entry = 1
    for p in pi.parts:
        rows.append(list(range(next_entry, next_entry + p)))
        next_entry += p
    cols = []
    for j in range(pi.parts[0] if pi.parts else 0):
        cols.append([row[j] for row in rows if len(row) > j])

    def subgroup(blocks):
        perms = []
        for assignment in itertools.product(
            *[itertools.permutations(b) for b in blocks]
        ):
            images = list(range(1, n + 1))
            for block, perm in zip(blocks, assignment):
                for src, dst in zip(block, perm):
                    images[src - 1] = dst
            perms.append(Permutation(images))
        return perms

    return subgroup(rows), subgroup(cols)


def young_symmetrizer(pi: Partition) -> GroupAlgebraElement:
    """Unnormalized Young symmetrizer a_pi b_pi of the canonical tableau."""
    n = pi.size
    rows, cols = _row_column_groups(pi)
    a = GroupAlgebraElement(n, {r: Fraction(1) for r in rows})
    b = GroupAlgebraElement(n, {c: Fraction(c.sign()) for c in cols})
    return a * b


def irrep_matrices(pi: Partition) -> dict[Permutation, MatrixQ]:
    """Matrices of the irreducible representation labelled by pi.

    Realized on the left ideal Q.Sigma_n  y_pi generated by the Young
    symmetrizer; the module is spanned by the left translates of y_pi.
    Independent of the character machinery, so it doubles as an oracle
    for Murnaghan-Nakayama values.
    """
    n = pi.size
    group = symmetric_group(n)
    index = {g: i for i, g in enumerate(group)}
    y = young_symmetrizer(pi)

    def vec(elem: GroupAlgebraElement):
        v = [Fraction(0)] * len(group)
        for p, c in elem.coeffs.items():
            v[index[p]] = c
        return v

    def left_translate_vec(g: Permutation, v):
        out = [Fraction(0)] * len(group)
        for i, c in enumerate(v):
            if c:
                out[index[g * group[i]]] = c
        return out

    yvec = vec(y)
    # Working basis: the first left translates of y that are independent.
    chosen = []
    span = []
    span_piv = []
    for g in group:
        w = left_translate_vec(g, yvec)
        red = list(w)
        for bvec, piv in zip(span, span_piv):
            if red[piv]:
                f = red[piv] / bvec[piv]
                red = [x - f * y_ for x, y_ in zip(red, bvec)]
        piv = next((i for i, x in enumerate(red) if x), None)
        if piv is not None:
            chosen.append(w)
            span.append(red)
            span_piv.append(piv)
    kmat = from_columns(chosen, len(group))
    mats = {}
    for g in group:
        cols = [left_translate_vec(g, w) for w in chosen]
        target = from_columns(cols, len(group))
        mats[g] = solve_exact(kmat, target)
    return mats


def _embed_pair(alpha: Permutation, beta: Permutation, p: int, q: int) -> Permutation:
    images = list(alpha.images) + [p + i for i in beta.images]
    return Permutation(images)


def induced_character(
    p: int, q: int, chi_p: dict[Partition, int], chi_q: dict[Partition, int]
) -> dict[Partition, int]:
    """Character of Ind from Sigma_p x Sigma_q, by the brute-force formula.

    chi_p / chi_q give the factor characters by cycle type.  Returns the
    induced character by cycle type of Sigma_{p+q}.
    """
    n = p + q
    sub = {}
    for alpha in symmetric_group(p):
        for beta in symmetric_group(q):
            g = _embed_pair(alpha, beta, p, q)
            sub[g] = chi_p[alpha.cycle_type()] * chi_q[beta.cycle_type()]
    order_h = factorial(p) * factorial(q)
    out = {}
    group = symmetric_group(n)
    for mu in partitions_of(n):
        rep = class_representative(mu)
        total = Fraction(0)
        for g in group:
            conj = g.inverse() * rep * g
            if conj in sub:
                total += sub[conj]
        total /= order_h
        if total.denominator != 1:
            raise ArithmeticError("induced character value not integral")
        out[mu] = int(total)
    return out
