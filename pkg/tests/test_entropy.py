import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entgeom import (
    all_bipartitions,
    araki_lieb_check,
    basis_state,
    catalog,
    entanglement_entropy,
    entropy_report,
    ghz,
    partial_trace,
    random_pure,
    schmidt_coefficients,
    von_neumann_entropy,
    w3,
)
from entgeom.entropy import density_matrix
from entgeom.errors import InvalidSubset, NotDensityMatrix, OverlappingSubsets
from oracles import eig2_hermitian, partial_trace_loops, shannon_bits

W_ENTROPY = shannon_bits([2 / 3, 1 / 3])  # 0.9182958340544896


class TestPartialTrace:
    def test_bell(self):
        np.testing.assert_allclose(partial_trace(catalog("PhiPlus"), [0]).entries, np.eye(2) / 2, atol=1e-15)

    def test_product(self):
        np.testing.assert_allclose(partial_trace(basis_state([2, 2], [0, 1]), [0]).entries, [[1, 0], [0, 0]])

    def test_w3(self):
        np.testing.assert_allclose(partial_trace(w3(), [0]).entries, np.diag([2 / 3, 1 / 3]), atol=1e-15)

    @pytest.mark.parametrize("dims", [[2, 2, 2], [2, 3, 2], [3, 3]])
    def test_matches_index_summation(self, dims):
        s = random_pure(dims, 5)
        for split in all_bipartitions(len(dims)):
            np.testing.assert_allclose(
                partial_trace(s, split.focus).entries, partial_trace_loops(s.amps, s.dims, split.focus), atol=1e-13
            )

    def test_is_density_matrix(self):
        rho = partial_trace(random_pure([2, 3, 2], 0), [0, 2])
        rho.validate()
        assert rho.dim == 4

    @pytest.mark.parametrize("keep", [[], [3], [-1]])
    def test_invalid_subset(self, keep):
        with pytest.raises(InvalidSubset):
            partial_trace(w3(), keep)


class TestEntropy:
    def test_maximally_mixed(self):
        assert von_neumann_entropy(density_matrix(np.eye(2) / 2)) == pytest.approx(1, abs=1e-12)

    def test_pure(self):
        assert von_neumann_entropy(density_matrix([[1, 0], [0, 0]])) == 0

    def test_w_reduction(self):
        assert W_ENTROPY == pytest.approx(0.9182958, abs=1e-7)
        assert von_neumann_entropy(density_matrix(np.diag([2 / 3, 1 / 3]))) == pytest.approx(W_ENTROPY, abs=1e-12)

    def test_natural_log(self):
        assert von_neumann_entropy(density_matrix(np.eye(2) / 2), base="e") == pytest.approx(math.log(2))
        assert von_neumann_entropy(density_matrix(np.eye(2) / 2), base=math.e) == pytest.approx(math.log(2))

    def test_bad_base(self):
        with pytest.raises(ValueError):
            von_neumann_entropy(density_matrix(np.eye(2) / 2), base=10)

    @pytest.mark.parametrize(
        "entries",
        [
            [[0.5, 0.1], [0.2, 0.5]],
            [[0.6, 0], [0, 0.6]],
            [[1.2, 0], [0, -0.2]],
            [[1, 0, 0]],
        ],
    )
    def test_rejects_non_density_matrices(self, entries):
        with pytest.raises(NotDensityMatrix):
            von_neumann_entropy(np.array(entries, dtype=complex))

    def test_two_by_two_closed_form(self):
        rho = partial_trace(random_pure([2, 2], 3), [0])
        assert von_neumann_entropy(rho) == pytest.approx(shannon_bits(eig2_hermitian(rho.entries)), abs=1e-12)


class TestReport:
    def test_ghz(self):
        rep = entropy_report(ghz(3, 2))
        for k in range(3):
            assert rep.single(k) == pytest.approx(1, abs=1e-12)
        assert rep.full == pytest.approx(0, abs=1e-12)

    def test_product(self):
        rep = entropy_report(basis_state([2, 2, 2], [0, 0, 0]))
        assert all(v == pytest.approx(0, abs=1e-12) for v in rep.entropies.values())

    def test_w3(self):
        rep = entropy_report(w3())
        for k in range(3):
            assert rep.single(k) == pytest.approx(W_ENTROPY, abs=1e-12)

    def test_qutrit_ghz_is_maximal(self):
        rep = entropy_report(ghz(3, 3))
        for k in range(3):
            assert rep.single(k) == pytest.approx(math.log2(3), abs=1e-12)

    def test_bounds_on_random(self):
        for seed in range(30):
            s = random_pure([3, 2, 2], seed)
            for k, d in enumerate(s.dims):
                assert -1e-12 <= entanglement_entropy(s, [k]) <= math.log2(d) + 1e-9


class TestArakiLieb:
    def test_bell(self):
        r = araki_lieb_check(catalog("PhiPlus"), [0], [1])
        assert r.s_a == pytest.approx(1) and r.s_b == pytest.approx(1)
        assert r.s_ab == pytest.approx(0, abs=1e-12)
        assert r.lower_slack == pytest.approx(0, abs=1e-12) and r.upper_slack == pytest.approx(2)

    def test_ghz(self):
        r = araki_lieb_check(ghz(3, 2), [0], [1])
        assert r == pytest.approx((1, 1, 1, 1, 1), abs=1e-12)

    def test_product(self):
        assert araki_lieb_check(basis_state([2, 2, 2], [0, 0, 0]), [0], [1]) == pytest.approx((0,) * 5, abs=1e-12)

    def test_overlap(self):
        with pytest.raises(OverlappingSubsets):
            araki_lieb_check(w3(), [0, 1], [1])


@settings(max_examples=80, deadline=None)
@given(dims=st.sampled_from([[2, 2], [2, 3], [2, 2, 2], [3, 3, 2], [2, 2, 2, 2]]), seed=st.integers(0, 2**32 - 1))
def test_complementary_entropies_equal(dims, seed):
    s = random_pure(dims, seed)
    for split in all_bipartitions(len(dims)):
        assert abs(entanglement_entropy(s, split.focus) - entanglement_entropy(s, split.complement)) <= 1e-10


@settings(max_examples=80, deadline=None)
@given(dims=st.sampled_from([[2, 2], [3, 2, 2], [2, 2, 2, 2]]), seed=st.integers(0, 2**32 - 1))
def test_entropy_from_schmidt(dims, seed):
    s = random_pure(dims, seed)
    for split in all_bipartitions(len(dims)):
        p = schmidt_coefficients(s, split) ** 2
        assert abs(entanglement_entropy(s, split.focus) - shannon_bits(p[p > 1e-12])) <= 1e-10


@settings(max_examples=80, deadline=None)
@given(n=st.sampled_from([3, 4]), seed=st.integers(0, 2**32 - 1))
def test_araki_lieb_and_subadditivity(n, seed):
    s = random_pure([2] * n, seed)
    for a, b in itertools.permutations(range(n), 2):
        r = araki_lieb_check(s, [a], [b])
        assert r.lower_slack >= -1e-10 and r.upper_slack >= -1e-10
