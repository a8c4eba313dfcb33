"""The K0 layer: classes, lambda-series, evaluation maps, induction product.

Classes of graded objects live in Z[q, q^-1] with the convention that a
line in degree d has class (-1)^d q^d; the parity sign is folded into
the class so that lambda-series depend on the class alone.  The graded
representation ring is modelled by partition-indexed families of such
classes, with the induction product given purely by
Littlewood-Richardson numbers.

Evaluation of Schur functors on virtual classes goes through the
Jacobi-Trudi determinant in the complete homogeneous series, which is
the series inverse of prod (1 - q^d t)^c.  Everything here is exact and
is cross-checked elsewhere against brute-force projector ranks.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import GroupMismatch
from .lambdaring import WittSeries
from .laurent import LaurentZ
from .matrixq import MatrixQ
from .partitions import Partition, partitions_of, revlex_key
from .series import Series, series_inv
from .symfunc import SymFunc, lr
from .symgroup import character_table, irrep_matrices, symmetric_group
from .tensormodel import (
    ComplexObject,
    EquivariantComplex,
    FiniteGroup,
    GObject,
    GradedMap,
    GradedObject,
    schur_complex_bidims,
    schur_object,
    tensor_power_dims,
)


def k0_class(x) -> LaurentZ:
    """Class in K0: sum (-1)^d dim_d q^d; complexes by Euler characteristic."""
    if isinstance(x, GradedObject):
        return LaurentZ({d: (-1) ** d * m for d, m in x.dims.items()})
    if isinstance(x, ComplexObject):
        out = LaurentZ(0)
        for n in x.positions():
            out = out + (-1) ** n * k0_class(x.term(n))
        return out
    raise TypeError(f"no K0 class for {x!r}")


def realize_class(x: LaurentZ) -> GradedObject:
    """The graded object realizing a class, when one exists.

    Needs (-1)^d c_d >= 0 at every exponent; virtual classes have no
    realization and raise.
    """
    dims = {}
    for d, c in x.items():
        m = (-1) ** d * c
        if m < 0:
            raise ValueError(f"class {x} is virtual at degree {d}")
        dims[d] = m
    return GradedObject(dims)


def lambda_of_class(x, order: int) -> WittSeries:
    """lambda-series prod (1 + q^d t)^(c_d) of a class x = sum c_d q^d."""
    x = x if isinstance(x, LaurentZ) else LaurentZ(x)
    out = Series.constant(LaurentZ(1), order)
    for d, c in x.items():
        factor = Series([LaurentZ(1), LaurentZ.q(d)], order)
        out = out * (factor**c)
    return WittSeries(out.coeffs, order)


def h_series_of_class(x, order: int) -> Series:
    """Complete homogeneous series: inverse of prod (1 - q^d t)^(c_d)."""
    x = x if isinstance(x, LaurentZ) else LaurentZ(x)
    denom = Series.constant(LaurentZ(1), order)
    for d, c in x.items():
        factor = Series([LaurentZ(1), LaurentZ.q(d, -1)], order)
        denom = denom * (factor**c)
    return series_inv(denom)


def _laurent_det(rows: list[list[LaurentZ]]) -> LaurentZ:
    n = len(rows)
    if n == 0:
        return LaurentZ(1)
    if n == 1:
        return rows[0][0]
    total = LaurentZ(0)
    for j in range(n):
        entry = rows[0][j]
        if entry.is_zero():
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = entry * _laurent_det(minor)
        total = total + ((-1) ** j) * term
    return total


def schur_of_class(x, pi) -> LaurentZ:
    """S_pi(x) by the Jacobi-Trudi determinant det(h_{pi_i - i + j}(x))."""
    pi = Partition(pi)
    if pi.size == 0:
        return LaurentZ(1)
    length = len(pi)
    hs = h_series_of_class(x, pi.size + length)
    rows = []
    for i in range(1, length + 1):
        row = []
        for j in range(1, length + 1):
            k = pi[i - 1] - i + j
            row.append(hs.coefficient(k) if k >= 0 else LaurentZ(0))
        rows.append(row)
    return _laurent_det(rows)


def ev(x, f: SymFunc) -> LaurentZ:
    """Z-linear evaluation sending the Schur basis element of pi to S_pi(x)."""
    total: dict[int, Fraction] = {}
    for pi, c in f.coeffs.items():
        value = schur_of_class(x, pi)
        for e_, coeff in value.items():
            total[e_] = total.get(e_, Fraction(0)) + c * coeff
    out = {}
    for e_, c in total.items():
        if c:
            if c.denominator != 1:
                raise ArithmeticError("evaluation produced a non-integral class")
            out[e_] = int(c)
    return LaurentZ(out)


class RDElement:
    """Partition-indexed family of classes: an element of R tensor K0.

    Multiplication is the induction product, which in this encoding is a
    pure Littlewood-Richardson computation on the partition labels with
    Laurent products on the classes.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for pi, v in (coeffs or {}).items():
            pi = pi if isinstance(pi, Partition) else Partition(pi)
            v = v if isinstance(v, LaurentZ) else LaurentZ(v)
            if not v.is_zero():
                clean[pi] = v
        self.coeffs = clean

    @classmethod
    def basis(cls, pi, value=1) -> "RDElement":
        return cls({Partition(pi): LaurentZ(value)})

    @classmethod
    def one(cls) -> "RDElement":
        return cls({Partition(): LaurentZ(1)})

    def value(self, pi) -> LaurentZ:
        return self.coeffs.get(Partition(pi), LaurentZ(0))

    def grades(self) -> tuple[int, ...]:
        return tuple(sorted({pi.size for pi in self.coeffs}))

    def is_zero(self) -> bool:
        return not self.coeffs

    def forget_action(self) -> LaurentZ:
        """Underlying class: sum chi_pi(1) times the class at pi."""
        out = LaurentZ(0)
        for pi, v in self.coeffs.items():
            table = character_table(pi.size)
            out = out + table.dimension(pi) * v
        return out

    def __add__(self, other):
        other = _coerce_rd(other)
        out = dict(self.coeffs)
        for pi, v in other.coeffs.items():
            out[pi] = out.get(pi, LaurentZ(0)) + v
        return RDElement(out)

    __radd__ = __add__

    def __neg__(self):
        return RDElement({pi: -v for pi, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-_coerce_rd(other))

    def __rsub__(self, other):
        return _coerce_rd(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentZ)):
            s = LaurentZ(other)
            return RDElement({pi: s * v for pi, v in self.coeffs.items()})
        other = _coerce_rd(other)
        out: dict[Partition, LaurentZ] = {}
        for mu, u in self.coeffs.items():
            for eta, v in other.coeffs.items():
                uv = u * v
                if uv.is_zero():
                    continue
                for pi in partitions_of(mu.size + eta.size):
                    c = lr(mu, eta, pi)
                    if c:
                        out[pi] = out.get(pi, LaurentZ(0)) + c * uv
        return RDElement(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, RDElement)):
            return self.coeffs == _coerce_rd(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset((pi, v) for pi, v in self.coeffs.items()))

    def __str__(self):
        return format_rd(self)

    def __repr__(self):
        return f"RDElement({format_rd(self)})"


def _coerce_rd(value) -> RDElement:
    if isinstance(value, RDElement):
        return value
    if isinstance(value, int):
        return RDElement({Partition(): LaurentZ(value)})
    if isinstance(value, LaurentZ):
        return RDElement({Partition(): value})
    raise TypeError(f"cannot coerce {value!r} into the representation ring")


def format_rd(a: RDElement) -> str:
    """Canonical text like ``[2]⊗(1) + [1,1]⊗(-q)``."""
    if not a.coeffs:
        return "0"
    keys = sorted(a.coeffs, key=lambda pi: (pi.size, revlex_key(pi)))
    bits = []
    for pi in keys:
        label = f"[{pi}]" if pi.parts else "[]"
        bits.append(f"{label}⊗({a.coeffs[pi]})")
    return " + ".join(bits)


def induction_product(a: RDElement, b: RDElement) -> RDElement:
    """Product of the graded representation ring; commutative and unital."""
    return a * b


def lambda_sigma(x, order: int, bound: int | None = None) -> Series:
    """Schur-indexed lambda series: coefficient n lists cl(S_mu(x)) per mu of n.

    For a complex the series is computed on the dummy-filtration graded
    pieces: the product over positions n of lambda_sigma of the term,
    inverted for odd n.
    """
    if isinstance(x, ComplexObject):
        out = Series.constant(RDElement.one(), order)
        for n in x.positions():
            piece = lambda_sigma(x.term(n), order, bound)
            out = out * (piece ** ((-1) ** n))
        return out
    coeffs = [RDElement.one()]
    for n in range(1, order + 1):
        rd = {}
        for mu in partitions_of(n):
            cls = k0_class(schur_object(x, mu, bound))
            if not cls.is_zero():
                rd[mu] = cls
        coeffs.append(RDElement(rd))
    return Series(coeffs, order)


def lambda_sigma_direct(z: ComplexObject, order: int, bound: int | None = None) -> Series:
    """lambda_sigma of a complex by honest Schur functors of the complex.

    Independent of the dummy-filtration product formula; used to verify
    it.
    """
    coeffs = [RDElement.one()]
    for n in range(1, order + 1):
        rd = {}
        for mu in partitions_of(n):
            cls = schur_complex_class(z, mu, bound)
            if not cls.is_zero():
                rd[mu] = cls
        coeffs.append(RDElement(rd))
    return Series(coeffs, order)


def schur_complex_class(z: ComplexObject, pi, bound: int | None = None) -> LaurentZ:
    """Class of the Schur image of a complex: Euler characteristic over bidegrees."""
    out = LaurentZ(0)
    for (hom, deg), dim in schur_complex_bidims(z, pi, bound).items():
        out = out + LaurentZ({deg: (-1) ** hom * (-1) ** deg * dim})
    return out


def mu_series(x: GradedObject, order: int, bound: int | None = None) -> Series:
    """sum cl(X^(tensor n)) t^n with full equivariant decompositions.

    Coefficient n records the class of the n-th tensor power together
    with its symmetric-group isotypic pieces, i.e. the image of the
    Schur-indexed lambda series under the ring identification; in this
    encoding the identification is the identity.
    """
    return lambda_sigma(x, order, bound)


def g_map(x: GObject) -> RDElement:
    """Decompose a symmetric-group representation: sum cl(S_V(X)) per V.

    The Schur pieces come from the given action (not a tensor-power
    action): per degree, the rank of the isotypic projector divided by
    the character degree.
    """
    group = x.group
    if not group.name.startswith("sym"):
        raise GroupMismatch("g_map needs a symmetric-group representation")
    n = int(group.name[3:])
    table = character_table(n)
    out = {}
    for pi in partitions_of(n):
        dim_pi = table.dimension(pi)
        dims = {}
        for d in x.space.degrees():
            size = x.space.dim(d)
            acc = MatrixQ.zero(size, size)
            for sigma in group.elements:
                chi = table.chi(pi, sigma.cycle_type())
                if chi:
                    acc = acc + x.act(sigma.inverse()).block(d).scale(
                        Fraction(dim_pi * chi, len(group.elements))
                    )
            r = acc.rank()
            if r % dim_pi:
                raise ArithmeticError("projector rank not divisible by chi(1)")
            if r:
                dims[d] = r // dim_pi
        cls = k0_class(GradedObject(dims))
        if not cls.is_zero():
            out[pi] = cls
    return RDElement(out)


def h_map(a: RDElement) -> GObject:
    """Realize an element as an actual representation: V_pi tensor X per term.

    Each class value must be realizable as a graded object; the group
    acts by the irreducible matrices on dim(V_pi) copies of it.  All
    terms must share one grade so a single symmetric group acts.
    """
    grades = a.grades()
    if len(grades) != 1:
        raise ValueError("h_map needs a homogeneous element")
    n = grades[0]
    group = FiniteGroup.symmetric(n)
    total_space = GradedObject.zero()
    piece_data = []
    for pi in sorted(a.coeffs, key=revlex_key):
        x = realize_class(a.coeffs[pi])
        mats = irrep_matrices(pi)
        dim_pi = mats[group.identity].rows
        space = GradedObject({d: dim_pi * m for d, m in x.dims.items()})
        piece_data.append((pi, x, mats, dim_pi, space))
        total_space = total_space.direct_sum(space)
    action = {}
    for sigma in group.elements:
        blocks = {}
        for d in total_space.degrees():
            size = total_space.dim(d)
            entries = [[Fraction(0)] * size for _ in range(size)]
            offset = 0
            for pi, x, mats, dim_pi, space in piece_data:
                rho = mats[sigma]
                xdim = x.dim(d)
                for i in range(dim_pi):
                    for j in range(dim_pi):
                        if rho[i, j] == 0:
                            continue
                        for k in range(xdim):
                            entries[offset + i * xdim + k][
                                offset + j * xdim + k
                            ] = rho[i, j]
                offset += dim_pi * xdim
            blocks[d] = MatrixQ.from_rows(entries)
        action[sigma] = GradedMap(total_space, total_space, blocks)
    return GObject(total_space, group, action, check=False)


def euler_xi(z: EquivariantComplex) -> RDElement:
    """Alternating sum of the decompositions of the cohomology representations."""
    out = RDElement()
    for n, gobj in z.cohomology_gobjects().items():
        term = g_map(gobj)
        if n % 2:
            term = -term
        out = out + term
    return out


def aw_check(x: GradedObject, n: int, bound: int | None = None) -> bool:
    """Degreewise dimension count of the isotypic decomposition of X^(tensor n).

    True iff sum over pi of chi_pi(1) dim_d S_pi(X) equals dim_d of the
    tensor power in every degree.
    """
    table = character_table(n)
    combined: dict[int, int] = {}
    for pi in partitions_of(n):
        piece = schur_object(x, pi, bound)
        mult = table.dimension(pi)
        for d, m in piece.dims.items():
            combined[d] = combined.get(d, 0) + mult * m
    return GradedObject(combined) == tensor_power_dims(x, n)
