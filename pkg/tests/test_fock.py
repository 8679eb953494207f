"""Graded vector arithmetic and the operator calculus on it: box
operators, Heisenberg operators in both models, plethysm coefficients
against a principal-specialization oracle, singular subspaces, the
two-parameter filtration, and the charged-word realization."""

from fractions import Fraction

import pytest

from fockcrystal import (
    ChargedWord,
    FockVector,
    InvalidInputError,
    Multipartition,
    Partition,
    Residue,
    TruncationOverflowError,
    UnsupportedParameterError,
    b_minus_op,
    b_plus_op,
    basis_vector,
    charged_to_multipartition,
    e_z_op,
    embed_to_charged,
    enumerate_multipartitions,
    enumerate_partitions,
    f_z_op,
    filtration_dim,
    inner_product,
    make_params,
    operator_matrix,
    plethysm_class,
    relevant_residues,
    singular_subspace,
    support,
    wedge_e_op,
    wedge_f_op,
)

GOLDEN = make_params(2, Fraction(-1, 2), [0, -1])
E2 = make_params(1, Fraction(-1, 2), [0])
E3 = make_params(1, Fraction(-1, 3), [0])

ZERO2 = Residue(0, 0)
ONE2 = Residue(0, 1)


def mp(*components):
    return Multipartition(components)


def bv(lam, truncation):
    return basis_vector(lam, truncation)


class TestFockVector:
    def test_zero_coefficients_dropped(self):
        v = FockVector(1, 3, {mp([2]): Fraction(0), mp([1]): Fraction(2)})
        assert v.coeff(mp([2])) == 0
        assert v.coeff(mp([1])) == 2
        assert not v.is_zero()
        assert FockVector(1, 3, {}).is_zero()

    def test_truncation_enforced(self):
        with pytest.raises(TruncationOverflowError):
            FockVector(1, 2, {mp([3]): Fraction(1)})

    def test_level_mismatch_rejected(self):
        with pytest.raises(InvalidInputError):
            FockVector(2, 3, {mp([1]): Fraction(1)})
        with pytest.raises(InvalidInputError):
            bv(mp([1]), 2) + bv(mp([1], []), 2)

    def test_linear_arithmetic(self):
        u = bv(mp([2]), 3) + bv(mp([1, 1]), 3).scale(Fraction(1, 2))
        w = u - bv(mp([2]), 3)
        assert w.coeff(mp([2])) == 0
        assert w.coeff(mp([1, 1])) == Fraction(1, 2)
        assert (w * 4).coeff(mp([1, 1])) == 2
        assert u.degrees() == [2]

    def test_items_ordering_is_graded(self):
        v = bv(mp([3]), 3) + bv(mp([1]), 3)
        assert [lam.size for lam, _ in v.items()] == [1, 3]

    def test_inner_product_orthonormal(self):
        nodes = enumerate_multipartitions(2, 2)
        for a in nodes:
            for b in nodes:
                got = inner_product(bv(a, 2), bv(b, 2))
                assert got == (1 if a == b else 0)


class TestBoxOperators:
    def test_lowering_adds_residue_boxes(self):
        v = f_z_op(bv(mp([], []), 1), ZERO2, GOLDEN)
        assert v.coeff(mp([1], [])) == 1
        assert v.coeff(mp([], [1])) == 0
        w = f_z_op(bv(mp([], []), 1), ONE2, GOLDEN)
        assert w.coeff(mp([], [1])) == 1

    def test_raising_is_adjoint_to_lowering(self):
        for n in range(4):
            for lam in enumerate_multipartitions(2, n):
                for mu in enumerate_multipartitions(2, n + 1):
                    for z in (ZERO2, ONE2):
                        lhs = inner_product(
                            f_z_op(bv(lam, n + 1), z, GOLDEN), bv(mu, n + 1)
                        )
                        rhs = inner_product(
                            bv(lam, n + 1), e_z_op(bv(mu, n + 1), z, GOLDEN)
                        )
                        assert lhs == rhs

    def test_linear_extension(self):
        u = bv(mp([1], []), 3) + bv(mp([], [1]), 3).scale(3)
        img = f_z_op(u, ZERO2, GOLDEN)
        want = f_z_op(bv(mp([1], []), 3), ZERO2, GOLDEN) + f_z_op(
            bv(mp([], [1]), 3), ZERO2, GOLDEN
        ).scale(3)
        assert img == want


class TestHeisenberg:
    def test_degree_one_fixture(self):
        got = b_plus_op(bv(mp([]), 2), 1, E2)
        assert got == bv(mp([2]), 2) - bv(mp([1, 1]), 2)

    def test_degree_two_signs(self):
        got = b_plus_op(bv(mp([]), 4), 2, E2)
        assert got.coeff(mp([4])) == 1
        assert got.coeff(mp([3, 1])) == -1
        assert got.coeff(mp([2, 2])) == 0
        assert got.coeff(mp([2, 1, 1])) == 1
        assert got.coeff(mp([1, 1, 1, 1])) == -1

    @pytest.mark.parametrize("params", [E2, E3, GOLDEN])
    @pytest.mark.parametrize("d", [1, 2])
    def test_models_agree(self, params, d):
        e = params.kappa.e
        for n in range(6):
            for lam in enumerate_multipartitions(params.level, n):
                v = bv(lam, n + e * d)
                assert b_plus_op(v, d, params, model="ribbon") == b_plus_op(
                    v, d, params, model="wedge"
                )
                assert b_minus_op(v, d, params, model="ribbon") == b_minus_op(
                    v, d, params, model="wedge"
                )

    @pytest.mark.parametrize("params", [E2, E3, GOLDEN])
    @pytest.mark.parametrize("d", [1, 2])
    def test_commutator_is_central(self, params, d):
        e = params.kappa.e
        scalar = d * e * params.level
        for n in range(4):
            for lam in enumerate_multipartitions(params.level, n):
                v = bv(lam, n + e * d)
                got = b_minus_op(b_plus_op(v, d, params), d, params) - b_plus_op(
                    b_minus_op(v, d, params), d, params
                )
                assert got == v.scale(scalar)

    def test_different_degrees_commute(self):
        for n in range(3):
            for lam in enumerate_multipartitions(1, n):
                v = bv(lam, n + 6)
                ab = b_plus_op(b_plus_op(v, 1, E2), 2, E2)
                ba = b_plus_op(b_plus_op(v, 2, E2), 1, E2)
                assert ab == ba
                down = b_minus_op(b_plus_op(v, 2, E2), 1, E2)
                up = b_plus_op(b_minus_op(v, 1, E2), 2, E2)
                assert down == up

    @pytest.mark.parametrize("params", [E2, GOLDEN])
    def test_commutes_with_box_operators(self, params):
        e = params.kappa.e
        residues = [Residue(0, v) for v in range(e)]
        for n in range(4):
            for lam in enumerate_multipartitions(params.level, n):
                v = bv(lam, n + e + 1)
                for z in residues:
                    assert e_z_op(b_plus_op(v, 1, params), z, params) == b_plus_op(
                        e_z_op(v, z, params), 1, params
                    )
                    assert f_z_op(b_plus_op(v, 1, params), z, params) == b_plus_op(
                        f_z_op(v, z, params), 1, params
                    )

    def test_adjointness(self):
        d, e = 1, 2
        for n in range(4):
            for lam in enumerate_multipartitions(2, n):
                for mu in enumerate_multipartitions(2, n + e * d):
                    lhs = inner_product(
                        b_plus_op(bv(lam, n + e * d), d, GOLDEN), bv(mu, n + e * d)
                    )
                    rhs = inner_product(
                        bv(lam, n + e * d), b_minus_op(bv(mu, n + e * d), d, GOLDEN)
                    )
                    assert lhs == rhs

    def test_degree_validation(self):
        with pytest.raises(InvalidInputError):
            b_plus_op(bv(mp([]), 2), 0, E2)
        with pytest.raises(InvalidInputError):
            b_plus_op(bv(mp([]), 2), 1, E2, model="spin")

    def test_irrational_unsupported(self):
        p = make_params(1, None, [0])
        with pytest.raises(UnsupportedParameterError):
            b_plus_op(FockVector(1, 2, {mp([]): Fraction(1)}), 1, p)


def principal_specialization(p, t):
    """s_p(1, t, t^2, ...) as an exact rational number."""
    weight = sum(i * part for i, part in enumerate(p.parts))
    tr = p.transpose()
    denom = Fraction(1)
    for x, y in p.cells():
        hook = (p.row(y) - x) + (tr.row(x) - y) + 1
        denom *= 1 - t**hook
    return t**weight / denom


class TestPlethysm:
    def test_single_box_fixture(self):
        got = plethysm_class(Partition([1]), 2)
        assert got == bv(mp([2]), 2) - bv(mp([1, 1]), 2)

    @pytest.mark.parametrize("e", [2, 3])
    def test_specialization_oracle(self, e):
        """The expansion is correct iff both sides agree as symmetric
        functions; comparing principal specializations at several exact
        sample points pins the coefficients down."""
        mus = [m for n in range(1, 4) for m in enumerate_partitions(n)]
        for mu in mus:
            v = plethysm_class(mu, e)
            for t in (Fraction(2), Fraction(1, 2), Fraction(3, 7)):
                lhs = sum(
                    c * principal_specialization(lam.component(0), t)
                    for lam, c in v.items()
                )
                assert lhs == principal_specialization(mu, t**e), (mu, e, t)

    def test_homogeneous_of_scaled_degree(self):
        v = plethysm_class(Partition([2, 1]), 2)
        assert v.degrees() == [6]

    def test_killed_by_raising_operators(self):
        for e in (2, 3):
            p = make_params(1, Fraction(-1, e), [0])
            for mu in enumerate_partitions(2):
                v = plethysm_class(mu, e)
                for z in (Residue(0, value) for value in range(e)):
                    assert e_z_op(v, z, p).is_zero()


class TestSingularSubspace:
    def test_golden_degrees(self):
        assert len(singular_subspace(2, 0, GOLDEN)) == 1
        assert len(singular_subspace(2, 2, GOLDEN)) == 2

    def test_level_one_only_vacuum(self):
        for n in range(5):
            got = singular_subspace(1, n, E2)
            assert len(got) == (1 if n == 0 else 0)

    @pytest.mark.parametrize(
        "level,params", [(1, E2), (1, E3), (2, GOLDEN)]
    )
    def test_dimension_counts_fully_supported_simples(self, level, params):
        for n in range(5):
            labels = [
                lam
                for lam in enumerate_multipartitions(level, n)
                if support(lam, params).p == 0 and support(lam, params).q == 0
            ]
            assert len(singular_subspace(level, n, params)) == len(labels)

    def test_vectors_are_killed(self):
        for vec in singular_subspace(2, 2, GOLDEN):
            for z in (ZERO2, ONE2):
                assert e_z_op(vec, z, GOLDEN).is_zero()
            assert b_minus_op(vec, 1, GOLDEN).is_zero()

    def test_level_must_match_params(self):
        with pytest.raises(InvalidInputError):
            singular_subspace(1, 2, GOLDEN)


class TestFiltration:
    def test_level_one_rank_two_table(self):
        expected = {
            (0, 0): 0,
            (0, 1): 1,
            (1, 0): 0,
            (1, 1): 1,
            (2, 0): 1,
            (2, 1): 2,
        }
        for (p, q), dim in expected.items():
            assert filtration_dim(p, q, 2, 1, E2) == dim

    @pytest.mark.parametrize(
        "level,params", [(1, E2), (1, E3), (2, GOLDEN)]
    )
    def test_matches_crystal_counts(self, level, params):
        for n in range(5):
            nodes = enumerate_multipartitions(level, n)
            descriptors = [support(lam, params) for lam in nodes]
            for p in range(n + 1):
                for q in range(n // params.kappa.e + 1):
                    count = sum(
                        1 for s in descriptors if s.p <= p and s.q <= q
                    )
                    assert filtration_dim(p, q, n, level, params) == count

    def test_symbolic_kappa_has_trivial_heisenberg_direction(self):
        p = make_params(2, None, [0, 0])
        for n in range(4):
            counts = [support(lam, p).p for lam in enumerate_multipartitions(2, n)]
            for depth in range(n + 1):
                want = sum(1 for c in counts if c <= depth)
                assert filtration_dim(depth, 0, n, 2, p) == want
                assert filtration_dim(depth, 3, n, 2, p) == want

    def test_validation(self):
        with pytest.raises(InvalidInputError):
            filtration_dim(-1, 0, 2, 1, E2)
        with pytest.raises(InvalidInputError):
            filtration_dim(0, 0, 2, 2, E2)
        with pytest.raises(UnsupportedParameterError):
            filtration_dim(0, 0, 2, 1, make_params(1, -1, [0]))


class TestChargedWords:
    def test_embed_fixture(self):
        word = embed_to_charged(mp([2, 1]), [3])
        assert word == ChargedWord(((5, 3, 1),))
        assert str(word) == "5,3,1"

    def test_embed_level_two(self):
        word = embed_to_charged(mp([1], [1]), [2, 3])
        assert word == ChargedWord(((3, 1), (4, 2, 1)))
        assert str(word) == "3,1|4,2,1"

    def test_roundtrip(self):
        for n in range(5):
            for lam in enumerate_multipartitions(2, n):
                word = embed_to_charged(lam, [7, 6])
                assert charged_to_multipartition(word) == lam

    def test_embed_validation(self):
        with pytest.raises(InvalidInputError):
            embed_to_charged(mp([1]), [1, 2])
        with pytest.raises(InvalidInputError):
            embed_to_charged(mp([1]), [0])
        with pytest.raises(InvalidInputError):
            embed_to_charged(mp([1, 1, 1]), [2])

    def test_word_validation(self):
        with pytest.raises(InvalidInputError):
            wedge_f_op(ChargedWord(((1, 3),)), 0, 2)
        with pytest.raises(UnsupportedParameterError):
            wedge_f_op(ChargedWord(((3, 1),)), 0, 1)

    def test_preimage_validation(self):
        with pytest.raises(InvalidInputError):
            charged_to_multipartition(ChargedWord(((1, 0),)))


class TestWedgeOperators:
    def test_raising_fixture(self):
        got = wedge_f_op(ChargedWord(((3, 2, 1),)), 1, 2)
        assert got == {ChargedWord(((4, 2, 1),)): 1}

    def test_raising_three_moves(self):
        got = wedge_f_op(ChargedWord(((5, 3, 1),)), 1, 2)
        assert got == {
            ChargedWord(((6, 3, 1),)): 1,
            ChargedWord(((5, 4, 1),)): 1,
            ChargedWord(((5, 3, 2),)): 1,
        }

    def test_blocked_moves_dropped(self):
        # entry 2 cannot move onto the occupied 3; entry 1 stays above 0
        got = wedge_e_op(ChargedWord(((3, 2, 1),)), 1, 2)
        assert got == {}

    @pytest.mark.parametrize(
        "level,charges,params",
        [
            (1, [7], E2),
            (1, [8], E3),
            (2, [7, 6], GOLDEN),
        ],
    )
    def test_intertwines_box_operators(self, level, charges, params):
        """Embedding at a common charge shift carries the box operators
        to the wedge operators with the matching label."""
        e = params.kappa.e
        shift = charges[0] - int(params.s[0].a)
        for n in range(5):
            for lam in enumerate_multipartitions(level, n):
                word = embed_to_charged(lam, charges)
                for z in relevant_residues(lam, params):
                    i = (z.value + shift) % e
                    got_f = {
                        charged_to_multipartition(w): c
                        for w, c in wedge_f_op(word, i, e).items()
                    }
                    want_f = dict(f_z_op(bv(lam, n + 1), z, params).items())
                    assert got_f == {k: v for k, v in want_f.items()}
                    got_e = {
                        charged_to_multipartition(w): c
                        for w, c in wedge_e_op(word, i, e).items()
                    }
                    want_e = dict(e_z_op(bv(lam, n + 1), z, params).items())
                    assert got_e == want_e


class TestOperatorMatrix:
    def test_heisenberg_fixture(self):
        rows, cols, entries = operator_matrix(
            lambda v: b_plus_op(v, 1, E2), 1, 0, 2
        )
        assert cols == [mp([])]
        assert rows == [mp([2]), mp([1, 1])]
        assert entries == {(0, 0): Fraction(1), (1, 0): Fraction(-1)}

    def test_wrong_target_degree_rejected(self):
        with pytest.raises(InvalidInputError):
            operator_matrix(lambda v: b_plus_op(v, 1, E2), 1, 0, 3)

    def test_image_beyond_truncation_overflows(self):
        with pytest.raises(TruncationOverflowError):
            operator_matrix(lambda v: b_plus_op(v, 1, E2), 1, 2, 1)
