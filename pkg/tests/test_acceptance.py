"""Acceptance criteria, one test per criterion, exact arithmetic throughout.

Each test prints one pass/fail line (visible with ``pytest -s`` or on
failure) and asserts the stated wall-clock budget.
"""

import time
from fractions import Fraction
from math import factorial

from schurforge.lambdaring import (
    LAURENT_CONTEXT,
    adams_on_witt,
    ghost,
    special_check,
)
from schurforge.laurent import LaurentZ, parse_laurent
from schurforge.matrixq import MatrixQ
from schurforge.partitions import Partition, dim_poly_eval, partitions_of
from schurforge.repring import (
    RDElement,
    aw_check,
    euler_xi,
    ev,
    g_map,
    h_map,
    k0_class,
    lambda_sigma,
    lambda_sigma_direct,
)
from schurforge.series import Series, series_inv
from schurforge.symfunc import SymFunc, ch, lr, mul, newton_check, vanishing_schur_sum
from schurforge.symgroup import (
    Permutation,
    character_table,
    irrep_matrices,
    class_representative,
    symmetric_group,
)
from schurforge.tensormodel import (
    ComplexObject,
    EquivariantComplex,
    FiniteGroup,
    GObject,
    GradedMap,
    GradedObject,
    categorical_trace,
    char_series,
    cohomology,
    gr_truncation,
    preset_gobject,
    schur_object,
    tensor,
)


class _Budget:
    def __init__(self, num: int, text: str, seconds: float):
        self.num = num
        self.text = text
        self.seconds = seconds
        self.start = time.monotonic()

    def finish(self, failures: list):
        elapsed = time.monotonic() - self.start
        ok = not failures and elapsed < self.seconds
        status = "PASS" if ok else "FAIL"
        print(f"[acceptance {self.num}] {status} ({elapsed:.1f}s): {self.text}")
        assert not failures, f"criterion {self.num}: {failures[:5]}"
        assert elapsed < self.seconds, f"criterion {self.num} exceeded {self.seconds}s"


def trivially_acted(x: GradedObject) -> GObject:
    group = FiniteGroup.cyclic(1)
    return GObject(x, group, {0: GradedMap.identity(x)})


def test_criterion_1_hook_content_vs_brute_force():
    budget = _Budget(1, "projector ranks match the hook-content polynomial", 30)
    failures = []
    for m in range(4):
        x = GradedObject.even_space(m)
        for n in range(5):
            for pi in partitions_of(n):
                got = schur_object(x, pi).total_dim
                want = dim_poly_eval(pi, m)
                if got != want:
                    failures.append((m, pi.parts, got, want))
    budget.finish(failures)


def test_criterion_2_lambda_sigma_multiplicativity():
    budget = _Budget(2, "lambda_sigma of direct sums is multiplicative to t^4", 30)
    failures = []
    pairs = [
        ({0: 1}, {1: 1}),
        ({0: 2}, {1: 1}),
        ({0: 2}, {1: 2}),
        ({0: 1, 1: 1}, {0: 1}),
        ({1: 2}, {1: 1}),
    ]
    for dx, dy in pairs:
        x, y = GradedObject(dx), GradedObject(dy)
        lhs = lambda_sigma(x.direct_sum(y), 4)
        rhs = lambda_sigma(x, 4) * lambda_sigma(y, 4)
        for k in range(5):
            if lhs.coefficient(k) != rhs.coefficient(k):
                failures.append((dx, dy, k))
    budget.finish(failures)


def test_criterion_3_newton_and_vanishing_sums():
    budget = _Budget(3, "Newton identities (n <= 8) and vanishing Schur sums (|pi| <= 4)", 10)
    failures = []
    for n in range(1, 9):
        if not newton_check(n):
            failures.append(("newton", n))
    for n in range(1, 5):
        for pi in partitions_of(n):
            if not vanishing_schur_sum(pi).is_zero():
                failures.append(("vanishing", pi.parts))
    budget.finish(failures)


def test_criterion_4_adams_characteristic_theorem():
    budget = _Budget(
        4, "ghost and Frobenius identities for the characteristic series, n <= 6", 60
    )
    failures = []
    perm3 = preset_gobject("perm:sym3")
    sign3 = preset_gobject("sign:sym3")
    reps = [
        ("perm:sym3", perm3),
        ("signtwisted:sym3", tensor(perm3, sign3)),
        ("reg:cyc4", preset_gobject("reg:cyc4")),
    ]
    for name, x in reps:
        group = x.group
        for g in group.elements:
            series = char_series(x, g, 36)
            ghosts = ghost(series)
            gn = group.identity
            for n in range(1, 7):
                gn = group.mul(gn, g)
                if ghosts[n - 1] != categorical_trace(x.act(gn)):
                    failures.append(("ghost", name, str(g), n))
                psi = adams_on_witt(series, n).truncate(6)
                target = char_series(x, gn, 6)
                if psi != Series(target.coeffs, 6):
                    failures.append(("frobenius", name, str(g), n))
    budget.finish(failures)


def test_criterion_5_shift_inversion_and_sym_series():
    budget = _Budget(
        5, "shift inverts the lambda series; inverse lists symmetric powers, to t^6", 30
    )
    failures = []
    shapes = [{0: 1}, {1: 1}, {0: 2}, {1: 2}, {0: 1, 1: 1}]
    for dims in shapes:
        x = GradedObject(dims)
        # brute-force alternating and symmetric power classes
        alt = Series(
            [LaurentZ(1)] + [k0_class(schur_object(x, (1,) * n)) for n in range(1, 7)],
            6,
        )
        sym = Series(
            [LaurentZ(1)] + [k0_class(schur_object(x, (n,))) for n in range(1, 7)],
            6,
        )
        inv = series_inv(alt)
        for n in range(7):
            if inv.coefficient(n) != (-1) ** n * sym.coefficient(n):
                failures.append(("sym-series", dims, n))
        # scalar (categorical-trace) level: the degree shift inverts the series
        scalar = char_series(trivially_acted(x), 0, 6)
        shifted = char_series(trivially_acted(x.shift(1)), 0, 6)
        if Series(shifted.coeffs, 6) != series_inv(scalar):
            failures.append(("shift-inversion", dims))
    budget.finish(failures)


def test_criterion_6_hg_isomorphism_and_decomposition():
    budget = _Budget(6, "g after h is the identity; tensor powers decompose fully", 30)
    failures = []
    line_classes = [LaurentZ(1), parse_laurent("-q"), parse_laurent("q^2"), LaurentZ(2)]
    for n in range(1, 4):
        for pi in partitions_of(n):
            for value in line_classes:
                a = RDElement({pi: value})
                if g_map(h_map(a)) != a:
                    failures.append(("gh", pi.parts, str(value)))
    for n in range(1, 4):
        if not aw_check(GradedObject.even_space(2), n):
            failures.append(("aw", n))
    budget.finish(failures)


def test_criterion_7_specialness():
    budget = _Budget(7, "universal product and composition identities on Z[q,q^-1]", 10)
    failures = []
    samples = [parse_laurent(s) for s in ("q", "1 + q^2", "1 - q", "2*q - q^-1")]
    for x in samples:
        for y in samples:
            if not special_check(LAURENT_CONTEXT, x, y, 2, 2):
                failures.append((str(x), str(y)))
    budget.finish(failures)


def test_criterion_8_complex_formulas():
    budget = _Budget(
        8, "dummy-filtration and cohomology formulas for a two-term complex, to t^3", 30
    )
    failures = []
    q2 = GradedObject.even_space(2)
    d = GradedMap(q2, q2, {0: MatrixQ.from_rows([[1, 0], [0, 0]])})
    z = ComplexObject({0: q2, 1: q2}, {0: d})
    direct = lambda_sigma_direct(z, 3)
    via_terms = lambda_sigma(z, 3)
    for k in range(4):
        if direct.coefficient(k) != via_terms.coefficient(k):
            failures.append(("product-formula", k))
    via_cohomology = Series.constant(RDElement.one(), 3)
    for n, h in cohomology(z).items():
        via_cohomology = via_cohomology * (lambda_sigma(h, 3) ** ((-1) ** n))
    for k in range(4):
        if direct.coefficient(k) != via_cohomology.coefficient(k):
            failures.append(("cohomology-formula", k))
    # equivariant Euler characteristics match the truncation classes
    perm2 = preset_gobject("perm:sym2")
    space = perm2.space
    action = {g: {0: perm2.act(g), 1: perm2.act(g)} for g in perm2.group.elements}
    half = Fraction(1, 2)
    samples = [
        ComplexObject({0: space, 1: space}, {0: GradedMap.identity(space)}),
        ComplexObject(
            {0: space, 1: space},
            {0: GradedMap(space, space, {0: MatrixQ.from_rows([[half, half], [half, half]])})},
        ),
        ComplexObject({0: space}),
    ]
    for zc in samples:
        acts = {g: {n: perm2.act(g) for n in zc.positions()} for g in perm2.group.elements}
        ez = EquivariantComplex(zc, perm2.group, acts)
        if euler_xi(ez).forget_action() != k0_class(gr_truncation(zc)):
            failures.append(("euler-xi", zc.positions()))
    budget.finish(failures)


def test_criterion_9_ev_oracle_equivalence():
    budget = _Budget(
        9, "Jacobi-Trudi evaluation equals brute-force Schur classes; ring rules", 60
    )
    failures = []
    shapes = [
        {},
        {0: 1},
        {1: 1},
        {2: 1},
        {0: 2},
        {1: 2},
        {2: 2},
        {0: 1, 1: 1},
        {0: 1, 2: 1},
        {1: 1, 2: 1},
    ]
    for dims in shapes:
        x = GradedObject(dims)
        cls = k0_class(x)
        for n in range(1, 4):
            for pi in partitions_of(n):
                if ev(cls, SymFunc.schur(pi)) != k0_class(schur_object(x, pi)):
                    failures.append(("oracle", dims, pi.parts))
    samples = [parse_laurent(s) for s in ("1", "2", "q", "1 - q", "1 + q^2")]
    for x in samples:
        for a in range(1, 4):
            for b in range(1, 4):
                if a + b > 4:
                    continue
                for mu in partitions_of(a):
                    for eta in partitions_of(b):
                        f, g = SymFunc.schur(mu), SymFunc.schur(eta)
                        if ev(x, mul(f, g)) != ev(x, f) * ev(x, g):
                            failures.append(("hom", str(x), mu.parts, eta.parts))
        for n in range(1, 5):
            for pi in partitions_of(n):
                lhs = ev(-x, SymFunc.schur(pi))
                rhs = (-1) ** n * ev(x, SymFunc.schur(pi.conjugate()))
                if lhs != rhs:
                    failures.append(("negation", str(x), pi.parts))
    for x in samples[:3]:
        for y in samples[3:]:
            for n in range(1, 4):
                for pi in partitions_of(n):
                    total = LaurentZ(0)
                    for k in range(n + 1):
                        for mu in partitions_of(k):
                            for eta in partitions_of(n - k):
                                c = lr(mu, eta, pi)
                                if c:
                                    total = total + c * ev(
                                        x, SymFunc.schur(mu)
                                    ) * ev(y, SymFunc.schur(eta))
                    if ev(x + y, SymFunc.schur(pi)) != total:
                        failures.append(("addition", str(x), str(y), pi.parts))
    budget.finish(failures)


def _regular_rep(n: int) -> GObject:
    group = FiniteGroup.symmetric(n)
    elements = list(group.elements)
    index = {g: i for i, g in enumerate(elements)}
    size = len(elements)
    space = GradedObject({0: size})
    action = {}
    for g in elements:
        entries = [[Fraction(0)] * size for _ in range(size)]
        for h in elements:
            entries[index[g * h]][index[h]] = Fraction(1)
        action[g] = GradedMap(space, space, {0: MatrixQ.from_rows(entries)})
    return GObject(space, group, action, check=False)


def test_criterion_10_character_infrastructure():
    budget = _Budget(
        10, "orthogonality, degrees, projector decompositions, characteristic map", 60
    )
    failures = []
    for n in (5, 6):
        table = character_table(n)
        for pi in partitions_of(n):
            for rho in partitions_of(n):
                total = sum(
                    table.class_sizes[mu] * table.chi(pi, mu) * table.chi(rho, mu)
                    for mu in partitions_of(n)
                )
                if total != (factorial(n) if pi == rho else 0):
                    failures.append(("orthogonality", n, pi.parts, rho.parts))
    for n in range(1, 7):
        table = character_table(n)
        if sum(table.dimension(pi) ** 2 for pi in partitions_of(n)) != factorial(n):
            failures.append(("sum-of-squares", n))
    # Murnaghan-Nakayama values against two independent brute-force routes
    for n in range(1, 5):
        table = character_table(n)
        for pi in partitions_of(n):
            mats = irrep_matrices(pi)
            for mu in partitions_of(n):
                if mats[class_representative(mu)].trace() != table.chi(pi, mu):
                    failures.append(("matrix-trace", n, pi.parts, mu.parts))
        reg = _regular_rep(n)
        decomposition = g_map(reg)
        for pi in partitions_of(n):
            if decomposition.value(pi) != LaurentZ(table.dimension(pi)):
                failures.append(("regular-decomposition", n, pi.parts))
    perm3 = preset_gobject("perm:sym3")
    perm_decomposition = g_map(perm3)
    if perm_decomposition != RDElement(
        {Partition((3,)): 1, Partition((2, 1)): 1}
    ):
        failures.append(("permutation-decomposition",))
    for n in range(1, 5):
        table = character_table(n)
        for pi in partitions_of(n):
            values = {mu: table.chi(pi, mu) for mu in partitions_of(n)}
            if ch(n, values) != SymFunc.schur(pi):
                failures.append(("characteristic-map", n, pi.parts))
    budget.finish(failures)
