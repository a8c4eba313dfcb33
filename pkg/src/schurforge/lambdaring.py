"""Big Witt vectors, ghost coordinates, Adams operations, universal polynomials.

The group Lambda(A) = 1 + t A[[t]] under series multiplication carries
Grothendieck's second multiplication *, defined through the universal
polynomials P_n expressing e_n of a product alphabet {x_i y_j} in the
elementary symmetric polynomials of the factors.  Those polynomials are
computed on demand by expanding over alphabets of size n and reducing
with the leading-monomial recursion, so there are no precomputed tables
to trust.

Adams operations are realized two ways that the test-suite plays against
each other: on series as the ghost-component reindexing (Frobenius), and
on base-ring elements by reading the negative logarithmic derivative of
their lambda-series.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import BoundExceeded, NonQAlgebra
from .laurent import LaurentZ
from .series import Series, neg_log_derivative, series_inv

PRODUCT_POLY_BOUND = 4
COMPOSITION_POLY_BOUND = 6


class WittSeries(Series):
    """Series with constant term exactly 1: an element of Lambda(A)."""

    def __init__(self, coeffs, order=None):
        super().__init__(coeffs, order)
        if self.order < 1:
            raise ValueError("Witt series need truncation order >= 1")
        if not self.coeffs[0] == 1:
            raise ValueError(f"constant term must be 1, got {self.coeffs[0]!r}")

    @classmethod
    def unit(cls, order: int) -> "WittSeries":
        return cls([1], order)


def witt_add(f: WittSeries, g: WittSeries) -> WittSeries:
    """Addition law of Lambda(A): plain series multiplication."""
    prod = Series.__mul__(f, g)
    return WittSeries(prod.coeffs, prod.order)


def witt_neg(f: WittSeries) -> WittSeries:
    """Inverse for the addition law: series inversion.

    When f is the lambda-series of a class x, coefficient n of witt_neg(f)
    times (-1)^n is the class of the n-th symmetric power of x.
    """
    inv = series_inv(f)
    return WittSeries(inv.coeffs, inv.order)


def witt_mul(f: WittSeries, g: WittSeries) -> WittSeries:
    """Grothendieck product: coefficient n is P_n(coefficients of f; of g).

    The universal product polynomials are bounded at degree 4, so the
    result truncates to order <= 4 in line with the series convention
    that mixed precision truncates rather than errors.
    """
    n = min(f.order, g.order, PRODUCT_POLY_BOUND)
    coeffs = [1]
    for k in range(1, n + 1):
        poly = universal_product_poly(k)
        ex = [f.coeffs[i] for i in range(1, k + 1)]
        ey = [g.coeffs[i] for i in range(1, k + 1)]
        coeffs.append(poly.evaluate(ex, ey))
    return WittSeries(coeffs, n)


def ghost(f: WittSeries) -> list:
    """Ghost components g_1..g_N with sum g_m (-t)^m = -t f'/f."""
    nld = neg_log_derivative(f)
    return [(-1) ** m * nld.coeffs[m] for m in range(1, f.order + 1)]


def _divide_exact(value, k: int):
    if isinstance(value, Fraction):
        return value / k
    if isinstance(value, int):
        if value % k:
            raise NonQAlgebra(f"{value} is not divisible by {k} in Z")
        return value // k
    if isinstance(value, LaurentZ):
        return value.divide_exact(k)
    try:
        return value / k
    except TypeError as exc:
        raise NonQAlgebra(f"cannot divide {value!r} by {k}") from exc


def witt_from_ghosts(ghosts: list) -> WittSeries:
    """Reconstruct the series from its ghost components by Newton recursion."""
    n = len(ghosts)
    coeffs = [1]
    for k in range(1, n + 1):
        acc = 0
        for i in range(1, k + 1):
            term = coeffs[k - i] * ghosts[i - 1]
            acc = acc + ((-1) ** (i - 1)) * term
        coeffs.append(_divide_exact(acc, k))
    return WittSeries(coeffs, n)


def adams_on_witt(f: WittSeries, n: int) -> WittSeries:
    """psi_n on Lambda(A): ghost components get reindexed by a factor n.

    The result has order floor(order(f)/n); extend f first if more
    precision is wanted.
    """
    if n < 1:
        raise ValueError("Adams operations are indexed by n >= 1")
    m = f.order // n
    if m < 1:
        raise ValueError(f"order {f.order} too small for psi_{n}")
    gh = ghost(f)
    return witt_from_ghosts([gh[n * k - 1] for k in range(1, m + 1)])


# ---------------------------------------------------------------------------
# Universal polynomials via explicit alphabets and symmetric reduction.
# Internal multivariate polynomials are dicts: exponent tuple -> int.


def _mp_add_into(acc: dict, mono: tuple, coeff: int):
    c = acc.get(mono, 0) + coeff
    if c:
        acc[mono] = c
    elif mono in acc:
        del acc[mono]


def _mp_mul(a: dict, b: dict) -> dict:
    out: dict[tuple, int] = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            mono = tuple(x + y for x, y in zip(m1, m2))
            _mp_add_into(out, mono, c1 * c2)
    return out


def _mp_scale(a: dict, k: int) -> dict:
    return {m: k * c for m, c in a.items()} if k else {}


def _elementary_of_gens(gens: list[tuple], k: int, nvars: int) -> dict:
    """e_k of a list of monomial generators."""
    out: dict[tuple, int] = {}
    for combo in itertools.combinations(gens, k):
        mono = tuple(sum(parts) for parts in zip(*combo)) if combo else (0,) * nvars
        _mp_add_into(out, mono, 1)
    return out


def _block_elementary(lo: int, hi: int, k: int, nvars: int) -> dict:
    gens = []
    for i in range(lo, hi):
        mono = [0] * nvars
        mono[i] = 1
        gens.append(tuple(mono))
    return _elementary_of_gens(gens, k, nvars)


def _reduce_symmetric_block(poly: dict, lo: int, hi: int, nvars: int) -> dict:
    """Rewrite a polynomial symmetric in vars[lo:hi] in that block's e_k.

    Returns a map: e-exponent tuple (powers of e_1..e_{hi-lo}) -> residual
    polynomial in the remaining variables (block exponents zeroed).
    """
    width = hi - lo
    result: dict[tuple, dict] = {}
    work = dict(poly)
    while work:
        lead = max(work, key=lambda m: (m[lo:hi], m[:lo], m[hi:]))
        alpha = lead[lo:hi]
        if any(alpha[i] < alpha[i + 1] for i in range(width - 1)):
            raise AssertionError("polynomial is not symmetric in the block")
        epows = tuple(
            alpha[i] - (alpha[i + 1] if i + 1 < width else 0) for i in range(width)
        )
        # residual: all terms whose block part equals alpha exactly
        residual: dict[tuple, int] = {}
        for mono, c in work.items():
            if mono[lo:hi] == alpha:
                rest = mono[:lo] + (0,) * width + mono[hi:]
                _mp_add_into(residual, rest, c)
        # subtract residual * prod e_k^epows
        eprod: dict[tuple, int] = {(0,) * nvars: 1}
        for k, power in enumerate(epows, start=1):
            if power:
                ek = _block_elementary(lo, hi, k, nvars)
                for _ in range(power):
                    eprod = _mp_mul(eprod, ek)
        sub = _mp_mul(residual, eprod)
        for mono, c in sub.items():
            _mp_add_into(work, mono, -c)
        prev = result.setdefault(epows, {})
        for mono, c in residual.items():
            _mp_add_into(prev, mono, c)
        if not prev:
            del result[epows]
    return result


class UniversalPoly:
    """Integer polynomial in e_1..e_N of one or two alphabets."""

    __slots__ = ("n", "m", "nvars", "terms")

    def __init__(self, n: int, m: int | None, nvars: int, terms: dict):
        self.n = n
        self.m = m
        self.nvars = nvars
        self.terms = {key: c for key, c in terms.items() if c}

    def evaluate(self, ex, ey=None):
        """Evaluate with e_k(x) = ex[k-1] (and e_k(y) = ey[k-1] if present).

        Values may come from any commutative ring with integer interplay.
        """
        total = 0
        for (xe, ye), c in sorted(self.terms.items()):
            term = c
            for k, power in enumerate(xe, start=1):
                for _ in range(power):
                    term = term * ex[k - 1]
            for k, power in enumerate(ye, start=1):
                for _ in range(power):
                    term = term * ey[k - 1]
            total = total + term
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for (xe, ye), c in sorted(self.terms.items()):
            factors = []
            for k, power in enumerate(xe, start=1):
                if power:
                    factors.append(f"e{k}(x)" + (f"^{power}" if power > 1 else ""))
            for k, power in enumerate(ye, start=1):
                if power:
                    factors.append(f"e{k}(y)" + (f"^{power}" if power > 1 else ""))
            body = "*".join(factors) if factors else "1"
            if abs(c) != 1:
                body = f"{abs(c)}*{body}"
            bits.append(("-" if c < 0 else "+", body))
        first_sign, first_body = bits[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in bits[1:]:
            text += f" {sign} {body}"
        return text


_PRODUCT_CACHE: dict[int, UniversalPoly] = {}
_COMPOSITION_CACHE: dict[tuple[int, int], UniversalPoly] = {}


def universal_product_poly(n: int) -> UniversalPoly:
    """P_n with e_n({x_i y_j}) = P_n(e(x); e(y)), alphabets of size n."""
    if n < 1 or n > PRODUCT_POLY_BOUND:
        raise BoundExceeded(f"product polynomial bound is {PRODUCT_POLY_BOUND}")
    if n in _PRODUCT_CACHE:
        return _PRODUCT_CACHE[n]
    nvars = 2 * n
    gens = []
    for i in range(n):
        for j in range(n):
            mono = [0] * nvars
            mono[i] = 1
            mono[n + j] = 1
            gens.append(tuple(mono))
    en = _elementary_of_gens(gens, n, nvars)
    by_x = _reduce_symmetric_block(en, 0, n, nvars)
    terms: dict[tuple, int] = {}
    for xe, residual in by_x.items():
        by_y = _reduce_symmetric_block(residual, n, 2 * n, nvars)
        for ye, const_poly in by_y.items():
            for mono, c in const_poly.items():
                if any(mono):
                    raise AssertionError("reduction left free variables")
                terms[(xe, ye)] = terms.get((xe, ye), 0) + c
    poly = UniversalPoly(n, None, n, terms)
    _PRODUCT_CACHE[n] = poly
    return poly


def universal_composition_poly(n: int, m: int) -> UniversalPoly:
    """P_{n,m} with e_n of the m-fold products alphabet = P_{n,m}(e(x))."""
    if n < 1 or m < 1 or n * m > COMPOSITION_POLY_BOUND:
        raise BoundExceeded(f"composition polynomial bound is {COMPOSITION_POLY_BOUND}")
    key = (n, m)
    if key in _COMPOSITION_CACHE:
        return _COMPOSITION_CACHE[key]
    nvars = n * m
    gens = []
    for subset in itertools.combinations(range(nvars), m):
        mono = [0] * nvars
        for i in subset:
            mono[i] = 1
        gens.append(tuple(mono))
    en = _elementary_of_gens(gens, n, nvars)
    reduced = _reduce_symmetric_block(en, 0, nvars, nvars)
    terms: dict[tuple, int] = {}
    for xe, const_poly in reduced.items():
        for mono, c in const_poly.items():
            if any(mono):
                raise AssertionError("reduction left free variables")
            terms[(xe, ())] = terms.get((xe, ()), 0) + c
    poly = UniversalPoly(n, m, nvars, terms)
    _COMPOSITION_CACHE[key] = poly
    return poly


# ---------------------------------------------------------------------------
# Concrete lambda-ring structures on Z, Q and Z[q, q^-1].


def _binomial_series(x, order: int) -> WittSeries:
    """(1 + t)^x for rational or integer x, via generalized binomials."""
    if isinstance(x, Fraction) and x.denominator != 1:
        coeffs = [Fraction(1)]
        for k in range(1, order + 1):
            coeffs.append(coeffs[-1] * (x - (k - 1)) / k)
        return WittSeries(coeffs, order)
    x = int(x)
    base = WittSeries([1, 1], order)
    if x >= 0:
        return WittSeries((base**x).coeffs, order)
    inv = witt_neg(base)
    return WittSeries((inv ** (-x)).coeffs, order)


class LambdaContext:
    """A concrete coefficient ring together with its lambda-operation rule."""

    __slots__ = ("name", "_series")

    def __init__(self, name: str, series_fn):
        self.name = name
        self._series = series_fn

    def lambda_series(self, x, order: int) -> WittSeries:
        """lambda_t(x) = sum lambda^k(x) t^k, truncated."""
        return self._series(x, order)

    def lambda_op(self, x, k: int):
        """lambda^k(x): coefficient k of the lambda-series."""
        if k == 0:
            return 1
        return self.lambda_series(x, k).coefficient(k)

    def __repr__(self):
        return f"LambdaContext({self.name})"


def _integer_lambda(x: int, order: int) -> WittSeries:
    return _binomial_series(int(x), order)


def _rational_lambda(x, order: int) -> WittSeries:
    return _binomial_series(Fraction(x), order)


def _laurent_lambda(x, order: int) -> WittSeries:
    """prod (1 + q^d t)^c over the unique decomposition x = sum c_d q^d."""
    x = x if isinstance(x, LaurentZ) else LaurentZ(x)
    out = Series.constant(LaurentZ(1), order)
    for d, c in x.items():
        factor = Series([LaurentZ(1), LaurentZ.q(d)], order)
        out = out * (factor ** c)
    return WittSeries(out.coeffs, order)


INTEGER_CONTEXT = LambdaContext("Z", _integer_lambda)
RATIONAL_CONTEXT = LambdaContext("Q", _rational_lambda)
LAURENT_CONTEXT = LambdaContext("Z[q,q^-1]", _laurent_lambda)


def adams_on_base(ctx: LambdaContext, x, n: int):
    """psi_n(x) read off the negative log-derivative of lambda_t(x)."""
    if n < 1:
        raise ValueError("Adams operations are indexed by n >= 1")
    return ghost(ctx.lambda_series(x, n))[n - 1]


def special_check(ctx: LambdaContext, x, y, n: int, m: int) -> bool:
    """Check both specialness axioms at the given degrees.

    Product rule: lambda^n(xy) = P_n(lambda(x); lambda(y)); composition
    rule: lambda^n(lambda^m(x)) = P_{n,m}(lambda(x)).
    """
    lam = ctx.lambda_op
    prod_poly = universal_product_poly(n)
    ex = [lam(x, k) for k in range(1, n + 1)]
    ey = [lam(y, k) for k in range(1, n + 1)]
    product_ok = lam(x * y, n) == prod_poly.evaluate(ex, ey)
    comp_poly = universal_composition_poly(n, m)
    exm = [lam(x, k) for k in range(1, n * m + 1)]
    comp_ok = lam(lam(x, m), n) == comp_poly.evaluate(exm)
    return bool(product_ok and comp_ok)
