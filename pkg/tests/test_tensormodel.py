"""The graded backend: Koszul signs, Schur functors, traces, complexes."""

import random
from fractions import Fraction

import pytest

from schurforge.errors import (
    BoundExceeded,
    GroupMismatch,
    NotAComplex,
    NotEndomorphism,
    NotEquivariant,
)
from schurforge.laurent import LaurentZ
from schurforge.matrixq import MatrixQ
from schurforge.partitions import Partition, dim_poly_eval, partitions_of
from schurforge.series import Series, series_inv
from schurforge.symgroup import Permutation, character_table, symmetric_group
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
    equivariant_kernel,
    gr_dummy,
    gr_truncation,
    gobject_from_json,
    parse_graded,
    preset_gobject,
    schur_object,
    sym_action,
    tensor,
    tensor_power_dims,
    tensor_power_trace,
    trace_class_function,
    trace_schur,
)


def trivial_gobject(x: GradedObject) -> GObject:
    g = FiniteGroup.cyclic(1)
    return GObject(x, g, {0: GradedMap.identity(x)})


def random_endo(rng, x: GradedObject) -> GradedMap:
    blocks = {
        d: MatrixQ(
            x.dim(d), x.dim(d), [Fraction(rng.randint(-3, 3)) for _ in range(x.dim(d) ** 2)]
        )
        for d in x.degrees()
    }
    return GradedMap(x, x, blocks)


class TestGradedObjects:
    def test_parse_and_str(self):
        x = parse_graded("{0:2, 1:1}")
        assert x == GradedObject({0: 2, 1: 1})
        assert str(x) == "{0:2, 1:1}"
        assert parse_graded("{}") == GradedObject.zero()

    def test_tensor_dims(self):
        line1 = GradedObject.line(1)
        assert tensor(line1, line1) == GradedObject.line(2)
        x = GradedObject({0: 2, 1: 1})
        assert tensor(x, GradedObject.line(0)) == x
        y = GradedObject({0: 1, 2: 3})
        assert tensor(x, y).total_dim == x.total_dim * y.total_dim

    def test_shift(self):
        assert GradedObject({0: 2, 1: 1}).shift(1) == GradedObject({1: 2, 2: 1})


class TestSymAction:
    def test_even_line_trivial(self):
        a = sym_action(GradedObject.line(0), 3)
        for sigma in a.group.elements:
            assert a.act(sigma) == GradedMap.identity(a.space)

    def test_odd_line_swap_sign(self):
        a = sym_action(GradedObject.line(1), 2)
        swap = Permutation.from_cycles("(1 2)", 2)
        assert a.act(swap).block(2) == MatrixQ(1, 1, [Fraction(-1)])

    def test_even_plane_swap_matrix(self):
        a = sym_action(GradedObject.even_space(2), 2)
        swap = Permutation.from_cycles("(1 2)", 2)
        expected = MatrixQ.from_rows(
            [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]
        )
        assert a.act(swap).block(0) == expected

    @pytest.mark.parametrize("dims", [{0: 1, 1: 1}, {1: 2}, {0: 2, 1: 1}])
    def test_braiding_is_homomorphism(self, dims):
        for n in (2, 3):
            a = sym_action(GradedObject(dims), n)
            for g in a.group.elements:
                for h in a.group.elements:
                    assert a.act(g * h) == a.act(g).compose(a.act(h))

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            sym_action(GradedObject.even_space(2), 12)
        sym_action(GradedObject.even_space(2), 3, bound=8)


class TestSchurObject:
    def test_single_box_is_identity(self):
        for dims in ({0: 2}, {0: 1, 1: 1}, {1: 2, 3: 1}):
            x = GradedObject(dims)
            assert schur_object(x, (1,)) == x

    def test_hook_on_even_plane(self):
        assert schur_object(GradedObject.even_space(2), (2, 1)) == GradedObject({0: 2})

    def test_alt_of_mixed_lines(self):
        x = GradedObject({0: 1, 1: 1})
        assert schur_object(x, (1, 1)) == GradedObject({1: 1, 2: 1})

    def test_sym_of_odd_line_vanishes(self):
        odd = GradedObject.line(1)
        assert schur_object(odd, (2,)) == GradedObject.zero()
        assert schur_object(odd, (3,)) == GradedObject.zero()

    def test_alt_of_odd_line_climbs_degrees(self):
        odd = GradedObject.line(1)
        for n in (2, 3, 4):
            assert schur_object(odd, (1,) * n) == GradedObject.line(n)

    def test_alt_above_dimension_vanishes_even(self):
        x = GradedObject.even_space(2)
        assert schur_object(x, (1, 1, 1)) == GradedObject.zero()
        assert schur_object(x, (1, 1, 1, 1)) == GradedObject.zero()

    def test_hook_content_on_even_spaces(self):
        for m in range(4):
            x = GradedObject.even_space(m)
            for n in range(1, 5):
                for pi in partitions_of(n):
                    assert schur_object(x, pi).total_dim == dim_poly_eval(pi, m)

    def test_empty_partition_gives_unit(self):
        assert schur_object(GradedObject.even_space(3), ()) == GradedObject.line(0)

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            schur_object(GradedObject.even_space(2), (1,) * 12)


class TestTraces:
    def test_identity_supertrace(self):
        x = GradedObject({0: 2, 1: 1})
        f = GradedMap.identity(x)
        assert categorical_trace(f) == 1
        assert categorical_trace(f, graded=True) == LaurentZ({0: 2, 1: -1})

    def test_zero_map(self):
        x = GradedObject({0: 2})
        assert categorical_trace(GradedMap.zero(x, x)) == 0

    def test_not_endomorphism(self):
        x, y = GradedObject({0: 2}), GradedObject({0: 3})
        with pytest.raises(NotEndomorphism):
            categorical_trace(GradedMap.zero(x, y))

    def test_three_cycle_on_tensor_cube(self):
        x = GradedObject.even_space(2)
        f = GradedMap.identity(x)
        three_cycle = Permutation.from_cycles("(1 2 3)", 3)
        assert tensor_power_trace(x, f, three_cycle) == 2

    def test_cycle_factorization_random(self):
        rng = random.Random(41)
        for dims in ({0: 2}, {0: 1, 1: 1}, {0: 2, 1: 1}):
            x = GradedObject(dims)
            f = random_endo(rng, x)
            powers = {1: f}
            for k in range(2, 6):
                powers[k] = f.compose(powers[k - 1])
            for n in (2, 3, 5):
                for sigma in symmetric_group(n):
                    lengths = [len(c) for c in sigma.cycles()]
                    lengths += [1] * (n - sum(lengths))
                    expected = Fraction(1)
                    for ell in lengths:
                        expected *= categorical_trace(powers[ell])
                    assert tensor_power_trace(x, f, sigma) == expected

    def test_trace_only_depends_on_cycle_type(self):
        rng = random.Random(43)
        x = GradedObject({0: 1, 1: 1})
        f = random_endo(rng, x)
        for n in (3, 4):
            seen = {}
            for sigma in symmetric_group(n):
                value = tensor_power_trace(x, f, sigma)
                assert seen.setdefault(sigma.cycle_type(), value) == value


class TestTraceSchur:
    def test_identity_gives_dimension_polynomial(self):
        perm3 = preset_gobject("perm:sym3")
        ident = Permutation.identity(3)
        for n in range(1, 4):
            for pi in partitions_of(n):
                assert trace_schur(perm3, ident, pi) == dim_poly_eval(pi, 3)

    def test_transposition_on_exterior_square(self):
        perm3 = preset_gobject("perm:sym3")
        swap = Permutation.from_cycles("(1 2)", 3)
        assert trace_schur(perm3, swap, (1, 1)) == -1

    def test_sym_row_matches_symmetrizer(self):
        # V = (n): the projector average equals the symmetrized trace
        perm3 = preset_gobject("perm:sym3")
        g = Permutation.from_cycles("(1 2 3)", 3)
        values = {mu: 1 for mu in partitions_of(2)}
        assert trace_schur(perm3, g, (2,)) == trace_class_function(perm3, g, 2, values)

    def test_class_average_matches_elementwise_sum(self):
        # grouping by cycle type agrees with the full group-average formula
        perm3 = preset_gobject("perm:sym3")
        table = character_table(3)
        swap = Permutation.from_cycles("(1 2)", 3)
        f = perm3.act(swap)
        for pi in partitions_of(3):
            full = Fraction(0)
            for sigma in symmetric_group(3):
                chi = table.chi(pi, sigma.inverse().cycle_type())
                full += chi * tensor_power_trace(perm3.space, f, sigma)
            full /= 6
            assert trace_schur(perm3, swap, pi) == full


class TestCharSeries:
    def test_identity_is_binomial(self):
        from math import comb

        perm3 = preset_gobject("perm:sym3")
        cs = char_series(perm3, Permutation.identity(3), 5)
        assert list(cs.coeffs) == [comb(3, k) for k in range(6)]

    def test_transposition_series(self):
        perm3 = preset_gobject("perm:sym3")
        swap = Permutation.from_cycles("(1 2)", 3)
        assert list(char_series(perm3, swap, 3).coeffs) == [1, 1, -1, -1]

    def test_odd_line_alternates(self):
        odd = trivial_gobject(GradedObject.line(1))
        cs = char_series(odd, 0, 5)
        assert list(cs.coeffs) == [(-1) ** n for n in range(6)]

    def test_centrality(self):
        perm3 = preset_gobject("perm:sym3")
        grp = perm3.group
        for g in grp.elements:
            for h in grp.elements:
                conj = grp.mul(grp.mul(h, g), grp.inv(h))
                assert char_series(perm3, g, 4) == char_series(perm3, conj, 4)

    def test_shift_inverts_scalar_series(self):
        for dims in ({0: 1}, {0: 2}, {1: 1}, {0: 1, 1: 1}):
            x = GradedObject(dims)
            f = char_series(trivial_gobject(x), 0, 5)
            g = char_series(trivial_gobject(x.shift(1)), 0, 5)
            assert Series(g.coeffs, 5) == series_inv(f)

    def test_power_sum_class_function_computes_power_traces(self):
        reps = [preset_gobject("perm:sym3"), preset_gobject("reg:cyc4")]
        for x in reps:
            grp = x.group
            for g in grp.elements:
                for m in range(1, 5):
                    values = {
                        mu: (m if mu == Partition((m,)) else 0)
                        for mu in partitions_of(m)
                    }
                    gm = grp.identity
                    for _ in range(m):
                        gm = grp.mul(gm, g)
                    assert trace_class_function(x, g, m, values) == categorical_trace(
                        x.act(gm)
                    )


class TestEquivariant:
    def test_zero_map_kernel_is_whole(self):
        perm2 = preset_gobject("perm:sym2")
        k = equivariant_kernel(perm2, perm2, GradedMap.zero(perm2.space, perm2.space))
        assert k.space == perm2.space

    def test_symmetrizer_kernel_is_sign_line(self):
        perm2 = preset_gobject("perm:sym2")
        half = Fraction(1, 2)
        p = GradedMap(
            perm2.space, perm2.space, {0: MatrixQ.from_rows([[half, half], [half, half]])}
        )
        k = equivariant_kernel(perm2, perm2, p)
        swap = Permutation.from_cycles("(1 2)", 2)
        assert k.space == GradedObject({0: 1})
        assert k.act(swap).block(0) == MatrixQ(1, 1, [Fraction(-1)])

    def test_invertible_map_kernel_is_zero(self):
        perm2 = preset_gobject("perm:sym2")
        k = equivariant_kernel(perm2, perm2, GradedMap.identity(perm2.space))
        assert k.space == GradedObject.zero()

    def test_non_equivariant_raises(self):
        perm2 = preset_gobject("perm:sym2")
        bad = GradedMap(
            perm2.space, perm2.space, {0: MatrixQ.from_rows([[1, 0], [0, 0]])}
        )
        with pytest.raises(NotEquivariant):
            equivariant_kernel(perm2, perm2, bad)

    def test_group_mismatch(self):
        perm2 = preset_gobject("perm:sym2")
        reg = preset_gobject("reg:cyc4")
        with pytest.raises(GroupMismatch):
            tensor(perm2, reg)

    def test_tensor_of_gobjects_diagonal(self):
        perm3 = preset_gobject("perm:sym3")
        sign3 = preset_gobject("sign:sym3")
        twisted = tensor(perm3, sign3)
        swap = Permutation.from_cycles("(1 2)", 3)
        assert categorical_trace(twisted.act(swap)) == -categorical_trace(
            perm3.act(swap)
        )

    def test_json_round_trip(self):
        data = {
            "dims": {"0": 2},
            "group": "sym2",
            "action": {"(1 2)": {"0": [["0", "1"], ["1", "0"]]}},
        }
        gob = gobject_from_json(data)
        swap = Permutation.from_cycles("(1 2)", 2)
        assert gob.act(swap).block(0) == MatrixQ.from_rows([[0, 1], [1, 0]])
        bad = {
            "dims": {"0": 1},
            "group": "sym2",
            "action": {"(1 2)": {"0": [["2"]]}},
        }
        with pytest.raises(ValueError):
            gobject_from_json(bad)


class TestComplexes:
    def test_acyclic(self):
        line = GradedObject.line(0)
        z = ComplexObject({0: line, 1: line}, {0: GradedMap.identity(line)})
        assert cohomology(z) == {}

    def test_rank_one_differential(self):
        q2 = GradedObject.even_space(2)
        d = GradedMap(q2, q2, {0: MatrixQ.from_rows([[1, 0], [0, 0]])})
        z = ComplexObject({0: q2, 1: q2}, {0: d})
        h = cohomology(z)
        assert h == {0: GradedObject({0: 1}), 1: GradedObject({0: 1})}
        assert gr_dummy(z).positions() == (0, 1)
        assert gr_truncation(z).term(0) == GradedObject({0: 1})

    def test_not_a_complex(self):
        q1 = GradedObject.line(0)
        with pytest.raises(NotAComplex):
            ComplexObject(
                {0: q1, 1: q1, 2: q1},
                {0: GradedMap.identity(q1), 1: GradedMap.identity(q1)},
            )

    def test_isotypic_completeness(self):
        table_cases = [({0: 2}, 4), ({0: 3}, 3), ({0: 1, 1: 1}, 4), ({1: 2}, 3)]
        for dims, n in table_cases:
            x = GradedObject(dims)
            table = character_table(n)
            combined = {}
            for pi in partitions_of(n):
                piece = schur_object(x, pi)
                for d, m in piece.dims.items():
                    combined[d] = combined.get(d, 0) + table.dimension(pi) * m
            assert GradedObject(combined) == tensor_power_dims(x, n)

    def test_equivariant_complex_validation(self):
        perm2 = preset_gobject("perm:sym2")
        space = perm2.space
        action = {g: {0: perm2.act(g), 1: perm2.act(g)} for g in perm2.group.elements}
        bad_diff = GradedMap(space, space, {0: MatrixQ.from_rows([[1, 0], [0, 0]])})
        with pytest.raises(NotEquivariant):
            EquivariantComplex(
                ComplexObject({0: space, 1: space}, {0: bad_diff}),
                perm2.group,
                action,
            )


class TestPresets:
    def test_preset_names(self):
        assert preset_gobject("perm:sym3").space == GradedObject({0: 3})
        assert preset_gobject("sign:sym3").space == GradedObject({0: 1})
        assert preset_gobject("reg:cyc4").space == GradedObject({0: 4})
        with pytest.raises(ValueError):
            preset_gobject("reg:sym3")

    def test_regular_cyclic_traces(self):
        reg = preset_gobject("reg:cyc4")
        assert categorical_trace(reg.act(0)) == 4
        for k in (1, 2, 3):
            assert categorical_trace(reg.act(k)) == 0
