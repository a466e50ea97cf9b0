from itertools import permutations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bunncalc import (
    DomainError,
    dual_weight,
    levi_branching,
    sigma_chi,
    weight_multiplicities,
    weyl_dim,
)
from bunncalc.kottwitz import BudgetError
from bunncalc.lparams import LParamShape
from oracles import branching_expansion, schur_monomials


def all_compositions(n, max_parts=None):
    out = []

    def rec(rem, acc):
        if rem == 0:
            if acc:
                out.append(tuple(acc))
            return
        if max_parts is not None and len(acc) == max_parts:
            return
        for k in range(1, rem + 1):
            rec(rem - k, acc + [k])

    rec(n, [])
    return out


class TestWeylDim:
    def test_standard_gl2(self):
        assert weyl_dim((1, 0), 2) == 2

    def test_sym3_gl2(self):
        assert weyl_dim((3, 0), 2) == 4

    def test_adjointish_gl3(self):
        assert weyl_dim((2, 1, 0), 3) == 8

    def test_negative_entries(self):
        assert weyl_dim((0, -1), 2) == 2

    @given(st.integers(2, 5), st.data())
    def test_exterior_powers(self, n, data):
        a = data.draw(st.integers(0, n))
        lam = (1,) * a + (0,) * (n - a)
        assert weyl_dim(lam, n) == comb(n, a)

    def test_non_dominant_rejected(self):
        with pytest.raises(DomainError):
            weyl_dim((0, 1), 2)


class TestWeightMultiplicities:
    def test_sym3_gl2(self):
        assert weight_multiplicities(2, (3, 0)) == {
            (3, 0): 1,
            (2, 1): 1,
            (1, 2): 1,
            (0, 3): 1,
        }

    def test_exterior_square_gl4(self):
        mult = weight_multiplicities(4, (1, 1, 0, 0))
        assert len(mult) == 6 and set(mult.values()) == {1}

    def test_gl3_with_inner_multiplicity(self):
        mult = weight_multiplicities(3, (2, 1, 0))
        assert sum(mult.values()) == 8
        assert mult[(1, 1, 1)] == 2

    def test_budget_rejected(self):
        with pytest.raises(BudgetError):
            weight_multiplicities(9, (1,) + (0,) * 8)
        with pytest.raises(BudgetError):
            weight_multiplicities(2, (13, 0))

    @pytest.mark.parametrize("n,lam", [(3, (2, 1, 0)), (4, (2, 1, 1, 0)), (2, (5, 0))])
    def test_total_is_weyl_dim(self, n, lam):
        assert sum(weight_multiplicities(n, lam).values()) == weyl_dim(lam, n)

    @pytest.mark.parametrize("n,lam", [(3, (2, 1, 0)), (4, (3, 1, 0, 0))])
    def test_symmetric_under_permutations(self, n, lam):
        mult = weight_multiplicities(n, lam)
        for w, m in mult.items():
            for p in permutations(w):
                assert mult[tuple(p)] == m

    @pytest.mark.parametrize("n,lam", [(2, (3, 0)), (3, (2, 1, 0)), (4, (2, 1, 0, 0))])
    def test_matches_schur_monomials(self, n, lam):
        assert weight_multiplicities(n, lam) == dict(schur_monomials(lam, n))

    def test_negative_entries_shift(self):
        mult = weight_multiplicities(2, (1, -1))
        shifted = weight_multiplicities(2, (2, 0))
        assert mult == {tuple(x - 1 for x in w): m for w, m in shifted.items()}


class TestLeviBranching:
    def test_standard_splits_into_block_standards(self):
        terms = levi_branching(5, (1, 0, 0, 0, 0), (2, 3))
        assert set(terms) == {
            (((1, 0), (0, 0, 0)), 1),
            (((0, 0), (1, 0, 0)), 1),
        }

    def test_exterior_power_distributes(self):
        terms = levi_branching(4, (1, 1, 0, 0), (2, 2))
        expect = {
            (((1, 1), (0, 0)), 1),
            (((1, 0), (1, 0)), 1),
            (((0, 0), (1, 1)), 1),
        }
        assert set(terms) == expect

    def test_trivial_weight(self):
        assert levi_branching(4, (0, 0, 0, 0), (1, 3)) == ((((0,), (0, 0, 0)), 1),)

    def test_block_mismatch_rejected(self):
        with pytest.raises(DomainError):
            levi_branching(4, (1, 0, 0, 0), (2, 3))

    @pytest.mark.parametrize(
        "n,lam,blocks",
        [
            (4, (2, 1, 0, 0), (2, 2)),
            (5, (2, 1, 0, 0, 0), (2, 3)),
            (5, (3, 2, 1, 0, 0), (1, 4)),
            (4, (2, 2, 1, 1), (2, 2)),
        ],
    )
    def test_against_schur_expansion(self, n, lam, blocks):
        terms = levi_branching(n, lam, blocks)
        assert branching_expansion(n, terms, blocks) == dict(schur_monomials(lam, n))

    @pytest.mark.parametrize("n,blocks", [(4, (2, 2)), (5, (2, 2, 1)), (6, (3, 3))])
    def test_dimension_identity(self, n, blocks):
        lam = (2, 1) + (0,) * (n - 2)
        total = 0
        for ws, mult in levi_branching(n, lam, blocks):
            prod = 1
            for w, m in zip(ws, blocks):
                prod *= weyl_dim(w, m)
            total += mult * prod
        assert total == weyl_dim(lam, n)

    @given(st.integers(2, 6), st.data())
    def test_minuscule_multiplicity_free(self, n, data):
        a = data.draw(st.integers(1, n - 1))
        blocks = data.draw(
            st.sampled_from([c for c in all_compositions(n) if len(c) <= 3])
        )
        lam = (1,) * a + (0,) * (n - a)
        for _, mult in levi_branching(n, lam, blocks):
            assert mult == 1

    def test_negative_weight_reattaches_twist(self):
        # branching of a determinant-twisted weight is the twisted branching
        lam = (1, 0, -1)
        terms = levi_branching(3, lam, (2, 1))
        shifted = levi_branching(3, (2, 1, 0), (2, 1))
        expect = {
            (tuple(tuple(x - 1 for x in w) for w in ws), m) for ws, m in shifted
        }
        assert set(terms) == expect


class TestSigmaChi:
    def test_sym3_lines(self):
        shape = LParamShape.from_dims((1, 1))
        sym = sigma_chi(shape, (3, 0), (2, 1))
        assert sym.terms == ((((2,), (1,)), 1),)
        assert sym.dim == 1
        assert sym.describe(ascii_mode=True) == "phi1^2(x)phi2"

    def test_standard_hits_unit_characters(self):
        shape = LParamShape.from_dims((3, 2))
        std = (1, 0, 0, 0, 0)
        assert sigma_chi(shape, std, (1, 0)).dim == 3
        assert sigma_chi(shape, std, (0, 1)).dim == 2
        assert sigma_chi(shape, std, (1, 1)).dim == 0

    def test_minuscule_products_of_binomials(self):
        shape = LParamShape.from_dims((3, 2, 2))
        lam = (1, 1, 1, 0, 0, 0, 0)
        sym = sigma_chi(shape, lam, (1, 1, 1))
        assert len(sym.terms) == 1
        assert sym.dim == comb(3, 1) * comb(2, 1) * comb(2, 1)

    @pytest.mark.parametrize(
        "dims,lam",
        [((1, 1), (3, 0)), ((2, 1), (1, 1, 0)), ((2, 2), (2, 0, 0, 0)), ((3, 1), (1, 1, 0, 0))],
    )
    def test_isotypic_dimensions_exhaust(self, dims, lam):
        shape = LParamShape.from_dims(dims)
        chis = set()
        for ws, _ in levi_branching(shape.n, lam, dims):
            chis.add(tuple(sum(w) for w in ws))
        total = sum(sigma_chi(shape, lam, chi).dim for chi in chis)
        assert total == weyl_dim(lam, shape.n)


class TestDuals:
    def test_dual_weight(self):
        assert dual_weight((3, 0)) == (0, -3)
        assert dual_weight((1, 1, 0)) == (0, -1, -1)

    @given(st.lists(st.integers(-4, 4), min_size=1, max_size=5))
    def test_involution(self, raw):
        lam = tuple(sorted(raw, reverse=True))
        assert dual_weight(dual_weight(lam)) == lam
