"""Finite-dimensional Z-graded rational spaces with Koszul symmetry.

This is the concrete backend every identity in the package is
brute-forced against.  Objects are graded dimension vectors, morphisms
are degree-preserving blocks of exact rational matrices, and a finite
group acts through explicit invertible blocks.  The braiding swaps two
homogeneous factors of degrees p and q with the sign (-1)^(pq), so the
internal degree shift behaves like a triangulated shift: categorical
traces are supertraces and tensor squares of odd lines pick up signs.

Schur functors are computed the hard way: the central isotypic
idempotent of the symmetric group is accumulated as an explicit matrix
on the tensor power and its per-degree rank, divided by the character
degree, gives the graded dimensions of the image.  Traces of group
elements on Schur images use the character-average formula; both paths
stay exact.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from math import factorial

from .errors import (
    BoundExceeded,
    GroupMismatch,
    NotAComplex,
    NotEndomorphism,
    NotEquivariant,
)
from .laurent import LaurentZ
from .lambdaring import WittSeries
from .matrixq import MatrixQ, from_columns, solve_exact
from .partitions import Partition, partitions_of
from .symgroup import (
    Permutation,
    character_table,
    class_representative,
    symmetric_group,
)

DEFAULT_TENSOR_BOUND = 1024


class GradedObject:
    """Map degree -> dimension with finitely many nonzero degrees."""

    __slots__ = ("dims",)

    def __init__(self, dims=None):
        clean = {}
        for d, m in (dims or {}).items():
            d, m = int(d), int(m)
            if m < 0:
                raise ValueError("negative dimension")
            if m:
                clean[d] = m
        self.dims = clean

    @classmethod
    def line(cls, degree: int = 0) -> "GradedObject":
        return cls({degree: 1})

    @classmethod
    def even_space(cls, dim: int) -> "GradedObject":
        return cls({0: dim})

    @classmethod
    def zero(cls) -> "GradedObject":
        return cls({})

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted(self.dims))

    def dim(self, degree: int) -> int:
        return self.dims.get(degree, 0)

    def is_even(self) -> bool:
        """True when every occupied degree has even parity."""
        return all(d % 2 == 0 for d in self.dims)

    def basis(self) -> tuple[tuple[int, int], ...]:
        """Canonical ordered basis: (degree, index) sorted by degree."""
        out = []
        for d in self.degrees():
            out.extend((d, i) for i in range(self.dims[d]))
        return tuple(out)

    def shift(self, n: int = 1) -> "GradedObject":
        """Degree shift: models the triangulated shift X[n]."""
        return GradedObject({d + n: m for d, m in self.dims.items()})

    def direct_sum(self, other: "GradedObject") -> "GradedObject":
        out = dict(self.dims)
        for d, m in other.dims.items():
            out[d] = out.get(d, 0) + m
        return GradedObject(out)

    def __eq__(self, other):
        if not isinstance(other, GradedObject):
            return NotImplemented
        return self.dims == other.dims

    def __hash__(self):
        return hash(tuple(sorted(self.dims.items())))

    def __str__(self):
        inner = ", ".join(f"{d}:{self.dims[d]}" for d in self.degrees())
        return "{" + inner + "}"

    def __repr__(self):
        return f"GradedObject({self})"


def parse_graded(text: str) -> GradedObject:
    """Parse a literal like ``{0:2, 1:1}``."""
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise ValueError(f"bad graded object literal {text!r}")
    body = s[1:-1].strip()
    dims = {}
    if body:
        for piece in body.split(","):
            m = re.fullmatch(r"\s*(-?\d+)\s*:\s*(\d+)\s*", piece)
            if not m:
                raise ValueError(f"bad graded object entry {piece!r}")
            dims[int(m.group(1))] = int(m.group(2))
    return GradedObject(dims)


def tensor_dims(x: GradedObject, y: GradedObject) -> GradedObject:
    out: dict[int, int] = {}
    for d1, m1 in x.dims.items():
        for d2, m2 in y.dims.items():
            out[d1 + d2] = out.get(d1 + d2, 0) + m1 * m2
    return GradedObject(out)


def tensor_power_dims(x: GradedObject, n: int) -> GradedObject:
    out = GradedObject({0: 1})
    for _ in range(n):
        out = tensor_dims(out, x)
    return out


class GradedMap:
    """Degree-preserving map given by per-degree matrix blocks."""

    __slots__ = ("src", "dst", "blocks")

    def __init__(self, src: GradedObject, dst: GradedObject, blocks=None):
        self.src = src
        self.dst = dst
        clean = {}
        for d, mat in (blocks or {}).items():
            d = int(d)
            if mat.rows != dst.dim(d) or mat.cols != src.dim(d):
                raise ValueError(
                    f"block at degree {d} has shape {mat.rows}x{mat.cols}, "
                    f"expected {dst.dim(d)}x{src.dim(d)}"
                )
            if not mat.is_zero():
                clean[d] = mat
        self.blocks = clean

    @classmethod
    def identity(cls, x: GradedObject) -> "GradedMap":
        return cls(x, x, {d: MatrixQ.identity(m) for d, m in x.dims.items()})

    @classmethod
    def zero(cls, src: GradedObject, dst: GradedObject) -> "GradedMap":
        return cls(src, dst, {})

    def block(self, degree: int) -> MatrixQ:
        if degree in self.blocks:
            return self.blocks[degree]
        return MatrixQ.zero(self.dst.dim(degree), self.src.dim(degree))

    def compose(self, other: "GradedMap") -> "GradedMap":
        """self after other."""
        if other.dst != self.src:
            raise ValueError("composition shape mismatch")
        degrees = set(self.blocks) & set(other.blocks)
        return GradedMap(
            other.src,
            self.dst,
            {d: self.block(d) * other.block(d) for d in degrees},
        )

    def __add__(self, other):
        if self.src != other.src or self.dst != other.dst:
            raise ValueError("sum shape mismatch")
        degrees = set(self.blocks) | set(other.blocks)
        return GradedMap(
            self.src, self.dst, {d: self.block(d) + other.block(d) for d in degrees}
        )

    def scale(self, s) -> "GradedMap":
        return GradedMap(
            self.src, self.dst, {d: m.scale(s) for d, m in self.blocks.items()}
        )

    def __eq__(self, other):
        if not isinstance(other, GradedMap):
            return NotImplemented
        if self.src != other.src or self.dst != other.dst:
            return False
        for d in set(self.blocks) | set(other.blocks):
            if self.block(d) != other.block(d):
                return False
        return True

    def is_zero(self) -> bool:
        return not self.blocks

    def __repr__(self):
        return f"GradedMap({self.src} -> {self.dst})"


class FiniteGroup:
    """Finite group given by an element list with explicit operations."""

    __slots__ = ("name", "elements", "identity", "_mul", "_inv")

    def __init__(self, name, elements, identity, mul, inv):
        self.name = name
        self.elements = tuple(elements)
        self.identity = identity
        self._mul = mul
        self._inv = inv

    def mul(self, a, b):
        return self._mul(a, b)

    def inv(self, a):
        return self._inv(a)

    @classmethod
    def symmetric(cls, n: int) -> "FiniteGroup":
        return cls(
            f"sym{n}",
            symmetric_group(n),
            Permutation.identity(n),
            lambda a, b: a * b,
            lambda a: a.inverse(),
        )

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        return cls(
            f"cyc{n}",
            range(n),
            0,
            lambda a, b: (a + b) % n,
            lambda a: (-a) % n,
        )

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.name == other.name and self.elements == other.elements

    def __repr__(self):
        return f"FiniteGroup({self.name})"


class GObject:
    """Graded object with a group acting by invertible degree-preserving maps."""

    __slots__ = ("space", "group", "action")

    def __init__(self, space, group, action, check: bool = True):
        self.space = space
        self.group = group
        self.action = dict(action)
        if check:
            self._validate()

    def _validate(self):
        ident = GradedMap.identity(self.space)
        if self.group.identity not in self.action:
            self.action[self.group.identity] = ident
        if self.action[self.group.identity] != ident:
            raise ValueError("identity must act as the identity map")
        for g in self.group.elements:
            if g not in self.action:
                raise ValueError(f"no action matrix for element {g}")
        for g in self.group.elements:
            for h in self.group.elements:
                gh = self.group.mul(g, h)
                if self.action[gh] != self.action[g].compose(self.action[h]):
                    raise ValueError("action is not a group homomorphism")

    def act(self, g) -> GradedMap:
        return self.action[g]

    def __repr__(self):
        return f"GObject({self.space}, {self.group.name})"


def tensor(x, y):
    """Tensor product of graded objects, or of representations diagonally."""
    if isinstance(x, GradedObject) and isinstance(y, GradedObject):
        return tensor_dims(x, y)
    if isinstance(x, GObject) and isinstance(y, GObject):
        if x.group != y.group:
            raise GroupMismatch(f"{x.group.name} vs {y.group.name}")
        space = tensor_dims(x.space, y.space)
        layout = _pair_layout(x.space, y.space)
        action = {
            g: _tensor_map(x.act(g), y.act(g), x.space, y.space, space, layout)
            for g in x.group.elements
        }
        return GObject(space, x.group, action, check=False)
    raise TypeError("tensor needs two GradedObjects or two GObjects")


def _pair_layout(x: GradedObject, y: GradedObject):
    """Position of each basis pair inside the canonical tensor basis."""
    positions: dict[int, dict[tuple, int]] = {}
    counters: dict[int, int] = {}
    for dx, i in x.basis():
        for dy, j in y.basis():
            d = dx + dy
            pos = counters.get(d, 0)
            positions.setdefault(d, {})[(dx, i, dy, j)] = pos
            counters[d] = pos + 1
    return positions


def _tensor_map(fx, fy, x, y, space, layout) -> GradedMap:
    blocks = {}
    for d, posmap in layout.items():
        size = space.dim(d)
        entries = [[Fraction(0)] * size for _ in range(size)]
        for (dx, i, dy, j), col in posmap.items():
            bx = fx.block(dx)
            by = fy.block(dy)
            for i2 in range(x.dim(dx)):
                a = bx[i2, i]
                if a == 0:
                    continue
                for j2 in range(y.dim(dy)):
                    b = by[j2, j]
                    if b == 0:
                        continue
                    row = posmap[(dx, i2, dy, j2)]
                    entries[row][col] += a * b
        blocks[d] = MatrixQ.from_rows(entries)
    return GradedMap(space, space, blocks)


def direct_sum_gobjects(x: GObject, y: GObject) -> GObject:
    if x.group != y.group:
        raise GroupMismatch(f"{x.group.name} vs {y.group.name}")
    space = x.space.direct_sum(y.space)
    action = {}
    for g in x.group.elements:
        blocks = {}
        for d in space.degrees():
            bx = x.act(g).block(d)
            by = y.act(g).block(d)
            size = space.dim(d)
            entries = [[Fraction(0)] * size for _ in range(size)]
            for i in range(bx.rows):
                for j in range(bx.cols):
                    entries[i][j] = bx[i, j]
            off = bx.rows
            for i in range(by.rows):
                for j in range(by.cols):
                    entries[off + i][off + j] = by[i, j]
            blocks[d] = MatrixQ.from_rows(entries)
        action[g] = GradedMap(space, space, blocks)
    return GObject(space, x.group, action, check=False)


# ---------------------------------------------------------------------------
# Koszul machinery on tensor powers.


def koszul_sign(sigma: Permutation, degrees: tuple[int, ...]) -> int:
    """Sign for permuting homogeneous factors: -1 per inverted odd pair."""
    n = len(degrees)
    odd_swaps = 0
    for a in range(1, n + 1):
        if degrees[a - 1] % 2 == 0:
            continue
        sa = sigma(a)
        for b in range(a + 1, n + 1):
            if degrees[b - 1] % 2 and sa > sigma(b):
                odd_swaps += 1
    return -1 if odd_swaps % 2 else 1


def permute_tensor_index(sigma: Permutation, index: tuple, degrees: tuple):
    """Image of a basis tensor under the braiding action of sigma.

    Returns (new index, sign): the factor in slot a moves to slot sigma(a)
    and the Koszul sign counts inverted pairs of odd factors.
    """
    n = len(index)
    out = [None] * n
    for a in range(1, n + 1):
        out[sigma(a) - 1] = index[a - 1]
    return tuple(out), koszul_sign(sigma, degrees)


class _PowerLayout:
    """Basis bookkeeping for X^(tensor n): indices grouped per total degree."""

    __slots__ = ("n", "flat_degs", "by_degree", "position")

    def __init__(self, x: GradedObject, n: int):
        basis = x.basis()
        self.n = n
        self.flat_degs = tuple(d for d, _ in basis)
        self.by_degree: dict[int, list[tuple]] = {}
        self.position: dict[tuple, int] = {}
        for index in itertools.product(range(len(basis)), repeat=n):
            d = sum(self.flat_degs[i] for i in index)
            bucket = self.by_degree.setdefault(d, [])
            self.position[index] = len(bucket)
            bucket.append(index)

    def degrees_of(self, index: tuple) -> tuple:
        return tuple(self.flat_degs[i] for i in index)


def _check_power_bound(x: GradedObject, n: int, bound: int | None):
    limit = DEFAULT_TENSOR_BOUND if bound is None else bound
    size = x.total_dim**n
    if size > limit:
        raise BoundExceeded(
            f"tensor power dimension {size} exceeds bound {limit}"
        )


def sym_action(x: GradedObject, n: int, bound: int | None = None) -> GObject:
    """X^(tensor n) with the symmetric group braiding action."""
    if n < 1:
        raise ValueError("sym_action needs n >= 1")
    _check_power_bound(x, n, bound)
    layout = _PowerLayout(x, n)
    space = GradedObject({d: len(ix) for d, ix in layout.by_degree.items()})
    action = {}
    for sigma in symmetric_group(n):
        blocks = {}
        for d, indices in layout.by_degree.items():
            size = len(indices)
            entries = [[Fraction(0)] * size for _ in range(size)]
            for col, index in enumerate(indices):
                target, sign = permute_tensor_index(
                    sigma, index, layout.degrees_of(index)
                )
                entries[layout.position[target]][col] = Fraction(sign)
            blocks[d] = MatrixQ.from_rows(entries)
        action[sigma] = GradedMap(space, space, blocks)
    return GObject(space, FiniteGroup.symmetric(n), action, check=False)


def _isotypic_blocks(x: GradedObject, pi: Partition, bound: int | None):
    """Per-degree matrices of the isotypic projector on X^(tensor |pi|)."""
    n = pi.size
    _check_power_bound(x, n, bound)
    table = character_table(n)
    dim_pi = table.dimension(pi)
    layout = _PowerLayout(x, n)
    blocks = {}
    for d, indices in layout.by_degree.items():
        size = len(indices)
        blocks[d] = [[Fraction(0)] * size for _ in range(size)]
    for sigma in symmetric_group(n):
        chi = table.chi(pi, sigma.cycle_type())
        if not chi:
            continue
        weight = Fraction(dim_pi * chi, factorial(n))
        for d, indices in layout.by_degree.items():
            block = blocks[d]
            for col, index in enumerate(indices):
                target, sign = permute_tensor_index(
                    sigma, index, layout.degrees_of(index)
                )
                block[layout.position[target]][col] += weight * sign
    return {d: MatrixQ.from_rows(rows) for d, rows in blocks.items()}, dim_pi


def schur_object(x: GradedObject, pi, bound: int | None = None) -> GradedObject:
    """Graded dimensions of the Schur functor applied to x.

    Per degree: rank of the isotypic projector on the tensor power,
    divided by the character degree chi_pi(1).
    """
    pi = Partition(pi)
    if pi.size == 0:
        return GradedObject({0: 1})
    if x.total_dim == 0:
        return GradedObject.zero()
    blocks, dim_pi = _isotypic_blocks(x, pi, bound)
    dims = {}
    for d, mat in blocks.items():
        r = mat.rank()
        if r % dim_pi:
            raise ArithmeticError("projector rank not divisible by chi(1)")
        if r:
            dims[d] = r // dim_pi
    return GradedObject(dims)


def categorical_trace(f: GradedMap, graded: bool = False):
    """Trace with Koszul signs: sum over degrees of (-1)^d tr(f_d).

    The graded variant keeps q^d per degree and lands in Z[q, q^-1]
    (entries must then be integers); the plain variant returns the
    rational supertrace.
    """
    if f.src != f.dst:
        raise NotEndomorphism("trace needs source = target")
    if graded:
        out = LaurentZ(0)
        for d in f.src.degrees():
            t = f.block(d).trace()
            if t.denominator != 1:
                raise ArithmeticError("graded trace needs integer block traces")
            out = out + LaurentZ({d: (-1) ** d * int(t)})
        return out
    total = Fraction(0)
    for d in f.src.degrees():
        total += (-1) ** d * f.block(d).trace()
    return total


def _flat_entries(f: GradedMap):
    """Dense lookup table over the canonical flat basis of the source."""
    basis = f.src.basis()
    size = len(basis)
    table = [[Fraction(0)] * size for _ in range(size)]
    offsets: dict[int, int] = {}
    for pos, (d, i) in enumerate(basis):
        offsets.setdefault(d, pos)
    for d in f.blocks:
        block = f.block(d)
        off = offsets[d]
        for i in range(block.rows):
            for j in range(block.cols):
                table[off + i][off + j] = block[i, j]
    return table


def tensor_power_trace(
    x: GradedObject, f: GradedMap, sigma: Permutation, bound: int | None = None
) -> Fraction:
    """Categorical trace of (braiding of sigma) after f^(tensor n) on X^(tensor n).

    Scans the diagonal of the composite directly, without materializing
    the matrix.
    """
    n = sigma.n
    if f.src != x or f.dst != x:
        raise NotEndomorphism("f must be an endomorphism of x")
    _check_power_bound(x, n, bound)
    table = _flat_entries(f)
    basis = x.basis()
    degs = tuple(d for d, _ in basis)
    sigma_images = sigma.images
    total = Fraction(0)
    for index in itertools.product(range(len(basis)), repeat=n):
        # J = sigma^-1 . I, i.e. J_a = I_{sigma(a)}
        j_index = tuple(index[sigma_images[a] - 1] for a in range(n))
        coeff = Fraction(1)
        zero = False
        for jk, ik in zip(j_index, index):
            entry = table[jk][ik]
            if entry == 0:
                zero = True
                break
            coeff *= entry
        if zero:
            continue
        j_degs = tuple(degs[i] for i in j_index)
        sign = koszul_sign(sigma, j_degs)
        super_sign = -1 if sum(degs[i] for i in index) % 2 else 1
        total += sign * super_sign * coeff
    return total


def trace_class_function(
    x: GObject, g, n: int, values: dict, bound: int | None = None
) -> Fraction:
    """(1/n!) sum_sigma chi(sigma^-1) tr(sigma g^(tensor n)) for a class function chi.

    The trace of the braiding composed with a diagonal map only depends
    on the cycle type of sigma, so the sum runs over class
    representatives weighted by class sizes.
    """
    f = x.act(g)
    total = Fraction(0)
    table = character_table(n)
    for mu in partitions_of(n):
        value = values[mu]
        if not value:
            continue
        rep = class_representative(mu)
        t = tensor_power_trace(x.space, f, rep, bound)
        total += Fraction(table.class_sizes[mu]) * value * t
    return total / factorial(n)


def trace_schur(x: GObject, g, v, bound: int | None = None) -> Fraction:
    """Trace of a group element on the Schur image S_V(X^(tensor n))."""
    v = Partition(v)
    n = v.size
    if n == 0:
        return Fraction(1)
    table = character_table(n)
    values = {mu: table.chi(v, mu) for mu in partitions_of(n)}
    return trace_class_function(x, g, n, values, bound)


def char_series(x: GObject, g, order: int, bound: int | None = None) -> WittSeries:
    """Characteristic series: sum over n of tr(g; Alt^n X) t^n.

    For a purely even object the alternating powers above the dimension
    vanish, so those coefficients are emitted as zeros without running
    the projector average.
    """
    coeffs = [Fraction(1)]
    even = x.space.is_even()
    total = x.space.total_dim
    for m in range(1, order + 1):
        if even and m > total:
            coeffs.append(Fraction(0))
            continue
        coeffs.append(trace_schur(x, g, Partition((1,) * m), bound))
    return WittSeries(coeffs, order)


def equivariant_kernel(x: GObject, y: GObject, f: GradedMap) -> GObject:
    """Kernel of an equivariant map, with the unique induced action."""
    if x.group != y.group:
        raise GroupMismatch(f"{x.group.name} vs {y.group.name}")
    if f.src != x.space or f.dst != y.space:
        raise ValueError("map shape does not match the representations")
    for g in x.group.elements:
        if f.compose(x.act(g)) != y.act(g).compose(f):
            raise NotEquivariant(f"map does not commute with element {g}")
    kernel_bases = {}
    dims = {}
    for d in x.space.degrees():
        basis = f.block(d).nullspace()
        if basis:
            kernel_bases[d] = from_columns(basis, x.space.dim(d))
            dims[d] = len(basis)
    space = GradedObject(dims)
    action = {}
    for g in x.group.elements:
        blocks = {}
        for d, kmat in kernel_bases.items():
            moved = x.act(g).block(d) * kmat
            blocks[d] = solve_exact(kmat, moved)
        action[g] = GradedMap(space, space, blocks)
    return GObject(space, x.group, action, check=False)


# ---------------------------------------------------------------------------
# Bounded complexes.


class ComplexObject:
    """Bounded complex of graded objects with differentials d^n: X^n -> X^(n+1)."""

    __slots__ = ("terms", "diffs")

    def __init__(self, terms, diffs=None):
        self.terms = {int(n): t for n, t in terms.items() if t.total_dim}
        self.diffs = {}
        for n, d in (diffs or {}).items():
            n = int(n)
            if d is None or d.is_zero():
                continue
            src = self.terms.get(n, GradedObject.zero())
            dst = self.terms.get(n + 1, GradedObject.zero())
            if d.src != src or d.dst != dst:
                raise NotAComplex(f"differential at {n} has wrong shape")
            self.diffs[n] = d
        for n, d in self.diffs.items():
            nxt = self.diffs.get(n + 1)
            if nxt is not None and not nxt.compose(d).is_zero():
                raise NotAComplex(f"d^2 != 0 at position {n}")

    def differential(self, n: int) -> GradedMap:
        if n in self.diffs:
            return self.diffs[n]
        src = self.terms.get(n, GradedObject.zero())
        dst = self.terms.get(n + 1, GradedObject.zero())
        return GradedMap.zero(src, dst)

    def positions(self) -> tuple[int, ...]:
        return tuple(sorted(self.terms))

    def term(self, n: int) -> GradedObject:
        return self.terms.get(n, GradedObject.zero())

    def __repr__(self):
        inner = ", ".join(f"{n}: {self.terms[n]}" for n in self.positions())
        return f"ComplexObject({inner})"


def cohomology(z: ComplexObject) -> dict[int, GradedObject]:
    """H^n = ker d^n / im d^(n-1), degreewise by exact rank computations."""
    out = {}
    positions = set(z.terms) | {n + 1 for n in z.diffs}
    for n in sorted(positions):
        term = z.term(n)
        dims = {}
        for d in term.degrees():
            rank_out = z.differential(n).block(d).rank()
            rank_in = z.differential(n - 1).block(d).rank()
            hdim = term.dim(d) - rank_out - rank_in
            if hdim < 0:
                raise NotAComplex("negative cohomology dimension")
            if hdim:
                dims[d] = hdim
        if dims:
            out[n] = GradedObject(dims)
    return out


def gr_dummy(z: ComplexObject) -> ComplexObject:
    """Associated graded of the dummy filtration: same terms, zero differentials."""
    return ComplexObject(dict(z.terms))


def gr_truncation(z: ComplexObject) -> ComplexObject:
    """Cohomology objects placed at their positions with zero differentials."""
    return ComplexObject(cohomology(z))


class EquivariantComplex:
    """Complex of graded objects with a group acting by chain maps."""

    __slots__ = ("complex", "group", "action")

    def __init__(self, complex_: ComplexObject, group: FiniteGroup, action, check=True):
        self.complex = complex_
        self.group = group
        self.action = {g: dict(maps) for g, maps in action.items()}
        if check:
            self._validate()

    def _validate(self):
        for g in self.group.elements:
            maps = self.action.get(g)
            if maps is None:
                raise ValueError(f"no action for element {g}")
            for n in self.complex.positions():
                if n not in maps:
                    raise ValueError(f"element {g} missing map at position {n}")
                d = self.complex.differential(n)
                nxt = maps.get(n + 1)
                if d.is_zero():
                    continue
                if nxt is None or d.compose(maps[n]) != nxt.compose(d):
                    raise NotEquivariant(
                        f"element {g} does not commute with d at position {n}"
                    )

    def term_gobject(self, n: int) -> GObject:
        space = self.complex.term(n)
        action = {g: self.action[g][n] for g in self.group.elements}
        return GObject(space, self.group, action, check=False)

    def cohomology_gobjects(self) -> dict[int, GObject]:
        """H^n with the induced action, via exact kernel and quotient bases."""
        out = {}
        for n in sorted(set(self.complex.terms) | {k + 1 for k in self.complex.diffs}):
            term = self.complex.term(n)
            d_out = self.complex.differential(n)
            d_in = self.complex.differential(n - 1)
            dims = {}
            data = {}
            for deg in term.degrees():
                kmat_cols = d_out.block(deg).nullspace()
                if not kmat_cols:
                    continue
                kmat = from_columns(kmat_cols, term.dim(deg))
                image = d_in.block(deg)
                img_in_k = solve_exact(kmat, image) if not image.is_zero() else None
                reducers, free_rows = _quotient_data(img_in_k, len(kmat_cols))
                if not free_rows:
                    continue
                dims[deg] = len(free_rows)
                data[deg] = (kmat, reducers, free_rows)
            if not dims:
                continue
            space = GradedObject(dims)
            action = {}
            for g in self.group.elements:
                blocks = {}
                for deg, (kmat, reducers, free_rows) in data.items():
                    moved = self.action[g][n].block(deg) * kmat
                    coords = solve_exact(kmat, moved)
                    cols = []
                    for j in free_rows:
                        vec = [coords[i, j] for i in range(coords.rows)]
                        cols.append(_reduce_mod_image(vec, reducers, free_rows))
                    blocks[deg] = from_columns(cols, len(free_rows))
                action[g] = GradedMap(space, space, blocks)
            out[n] = GObject(space, self.group, action, check=False)
        return out


def _quotient_data(img_in_k, kdim: int):
    """RREF data for reducing kernel coordinates modulo the image.

    Returns (reducers, free_rows): reducers is a list of (pivot row,
    column vector) pairs in reduced form; free_rows index the quotient
    coordinates.
    """
    if img_in_k is None or img_in_k.cols == 0:
        return [], list(range(kdim))
    pivots, rows = img_in_k.transpose().rref()
    reducers = []
    for r, pc in enumerate(pivots):
        vec = rows[r]
        reducers.append((pc, list(vec)))
    free_rows = [i for i in range(kdim) if i not in pivots]
    return reducers, free_rows


def _reduce_mod_image(vec, reducers, free_rows):
    v = list(vec)
    for pivot, red in reducers:
        c = v[pivot]
        if c:
            for i in range(len(v)):
                v[i] -= c * red[i]
    return [v[i] for i in free_rows]


def schur_complex_bidims(
    z: ComplexObject, pi, bound: int | None = None
) -> dict[tuple[int, int], int]:
    """Bigraded dimensions of the Schur functor applied to a complex.

    The tensor power of a complex carries the braiding with signs taken
    on the total degree (homological plus internal), so the symmetric
    group acts on the terms of Z^(tensor n) and the isotypic projector
    can be accumulated per (homological, internal) bidegree.  Only
    dimensions of the image terms are produced; that is all the Euler
    characteristic needs.
    """
    pi = Partition(pi)
    if pi.size == 0:
        return {(0, 0): 1}
    tags = []
    for n in z.positions():
        for d, i in z.term(n).basis():
            tags.append((n, d))
    if not tags:
        return {}
    size = len(tags) ** pi.size
    limit = DEFAULT_TENSOR_BOUND if bound is None else bound
    if size > limit:
        raise BoundExceeded(f"tensor power dimension {size} exceeds bound {limit}")
    n_factors = pi.size
    table = character_table(n_factors)
    dim_pi = table.dimension(pi)
    by_block: dict[tuple[int, int], list[tuple]] = {}
    position: dict[tuple, int] = {}
    for index in itertools.product(range(len(tags)), repeat=n_factors):
        hom = sum(tags[i][0] for i in index)
        deg = sum(tags[i][1] for i in index)
        bucket = by_block.setdefault((hom, deg), [])
        position[index] = len(bucket)
        bucket.append(index)
    blocks = {
        key: [[Fraction(0)] * len(ix) for _ in range(len(ix))]
        for key, ix in by_block.items()
    }
    for sigma in symmetric_group(n_factors):
        chi = table.chi(pi, sigma.cycle_type())
        if not chi:
            continue
        weight = Fraction(dim_pi * chi, factorial(n_factors))
        for key, indices in by_block.items():
            block = blocks[key]
            for col, index in enumerate(indices):
                totals = tuple(tags[i][0] + tags[i][1] for i in index)
                target, sign = permute_tensor_index(sigma, index, totals)
                block[position[target]][col] += weight * sign
    out = {}
    for key, rows in blocks.items():
        r = MatrixQ.from_rows(rows).rank()
        if r % dim_pi:
            raise ArithmeticError("projector rank not divisible by chi(1)")
        if r:
            out[key] = r // dim_pi
    return out


# ---------------------------------------------------------------------------
# Presets for the command line and the verification suites.


def _perm_matrix_rep(n: int):
    space = GradedObject({0: n})
    action = {}
    for sigma in symmetric_group(n):
        entries = [[Fraction(0)] * n for _ in range(n)]
        for j in range(1, n + 1):
            entries[sigma(j) - 1][j - 1] = Fraction(1)
        action[sigma] = GradedMap(space, space, {0: MatrixQ.from_rows(entries)})
    return GObject(space, FiniteGroup.symmetric(n), action, check=False)


def _sign_rep(n: int):
    space = GradedObject({0: 1})
    action = {
        sigma: GradedMap(
            space, space, {0: MatrixQ(1, 1, [Fraction(sigma.sign())])}
        )
        for sigma in symmetric_group(n)
    }
    return GObject(space, FiniteGroup.symmetric(n), action, check=False)


def _regular_cyclic_rep(n: int):
    space = GradedObject({0: n})
    group = FiniteGroup.cyclic(n)
    action = {}
    for k in group.elements:
        entries = [[Fraction(0)] * n for _ in range(n)]
        for j in range(n):
            entries[(j + k) % n][j] = Fraction(1)
        action[k] = GradedMap(space, space, {0: MatrixQ.from_rows(entries)})
    return GObject(space, group, action, check=False)


def preset_gobject(name: str) -> GObject:
    """Named representations: ``perm:sym3``, ``sign:sym3``, ``reg:cyc4``."""
    m = re.fullmatch(r"(perm|sign|reg):(sym|cyc)(\d+)", name.strip())
    if not m:
        raise ValueError(f"unknown preset {name!r}")
    kind, family, num = m.group(1), m.group(2), int(m.group(3))
    if kind == "perm" and family == "sym":
        return _perm_matrix_rep(num)
    if kind == "sign" and family == "sym":
        return _sign_rep(num)
    if kind == "reg" and family == "cyc":
        return _regular_cyclic_rep(num)
    raise ValueError(f"unsupported preset combination {name!r}")


def gobject_from_json(data: dict) -> GObject:
    """Build a representation from the JSON input format.

    Expected shape::

        {"dims": {"0": 2},
         "group": "sym2",
         "action": {"(1 2)": {"0": [["0", "1"], ["1", "0"]]}}}

    ``group`` is ``sym<n>`` or ``cyc<n>``; action keys are cycle notation
    for symmetric groups and integers for cyclic ones.  The identity may
    be omitted.  Matrix entries are strings or numbers parsed as exact
    rationals.  The homomorphism property is checked.
    """
    space = GradedObject({int(d): int(m) for d, m in data["dims"].items()})
    group_name = data["group"]
    m = re.fullmatch(r"(sym|cyc)(\d+)", group_name)
    if not m:
        raise ValueError(f"unknown group {group_name!r}")
    family, num = m.group(1), int(m.group(2))
    group = FiniteGroup.symmetric(num) if family == "sym" else FiniteGroup.cyclic(num)

    def parse_element(key):
        if family == "sym":
            return Permutation.from_cycles(key, num)
        return int(key) % num

    action = {}
    for key, blocks_data in data.get("action", {}).items():
        blocks = {}
        for d, rows in blocks_data.items():
            blocks[int(d)] = MatrixQ.from_rows(
                [[Fraction(str(e)) for e in row] for row in rows]
            )
        action[parse_element(key)] = GradedMap(space, space, blocks)
    return GObject(space, group, action, check=True)
