import math

import numpy as np
import pytest

from entgeom import (
    Bipartition,
    NamedState,
    Tolerances,
    all_bipartitions,
    apply_local,
    catalog,
    catalog_names,
    concurrence_wedge,
    ghz,
    make_state,
    random_pure,
    random_unitary,
    w3,
)
from entgeom.errors import (
    InvalidBipartition,
    InvalidDims,
    InvalidParameters,
    LengthMismatch,
    NotNormalized,
    UnknownName,
    ZeroVector,
)

R2 = 1 / math.sqrt(2)
R3 = 1 / math.sqrt(3)


class TestMakeState:
    def test_bell_amplitudes(self):
        s = make_state([2, 2], [R2, 0, 0, R2])
        assert s.dims == (2, 2)
        np.testing.assert_allclose(s.amps, [R2, 0, 0, R2])

    def test_single_qubit_basis(self):
        s = make_state([2], [1, 0])
        assert s.n_parties == 1 and s.amps[0] == 1

    def test_normalize(self):
        s = make_state([2, 2], [1, 1, 1, 0], normalize=True)
        np.testing.assert_allclose(s.amps, [R3, R3, R3, 0], atol=1e-15)

    def test_amplitudes_are_read_only(self):
        s = make_state([2], [1, 0])
        with pytest.raises(ValueError):
            s.amps[0] = 0

    def test_input_is_copied(self):
        raw = np.array([1, 0], dtype=complex)
        s = make_state([2], raw)
        raw[0] = 5
        assert s.amps[0] == 1

    @pytest.mark.parametrize(
        "dims, amps, exc",
        [
            ([2, 2], [1, 0, 0], LengthMismatch),
            ([2], [0, 0], ZeroVector),
            ([2], [1, 1], NotNormalized),
            ([1, 2], [1, 0], InvalidDims),
            ([], [1], InvalidDims),
        ],
    )
    def test_errors(self, dims, amps, exc):
        with pytest.raises(exc):
            make_state(dims, amps)

    def test_zero_vector_even_with_normalize(self):
        with pytest.raises(ZeroVector):
            make_state([2], [0, 0], normalize=True)

    def test_norm_tolerance_is_configurable(self):
        make_state([2], [1 + 1e-7, 0], tol=Tolerances(norm_tol=1e-6))
        with pytest.raises(NotNormalized):
            make_state([2], [1 + 1e-7, 0])

    def test_tolerances_positive(self):
        with pytest.raises(InvalidParameters):
            Tolerances(rank_tol=0)


class TestCatalog:
    def test_phi_plus(self):
        s = catalog("PhiPlus")
        assert s.dims == (2, 2)
        np.testing.assert_allclose(s.amps, [R2, 0, 0, R2])

    def test_qutrit_ghz_indices(self):
        s = catalog("GHZ(3,3)")
        assert s.dims == (3, 3, 3)
        assert set(np.flatnonzero(np.abs(s.amps) > 0)) == {0, 13, 26}
        np.testing.assert_allclose(s.amps[[0, 13, 26]], R3)

    def test_w3_indices(self):
        s = catalog("W3")
        assert set(np.flatnonzero(np.abs(s.amps) > 0)) == {1, 2, 4}
        np.testing.assert_allclose(s.amps[[1, 2, 4]], R3)

    @pytest.mark.parametrize("n, d", [(2, 2), (3, 2), (4, 2), (2, 3), (3, 4)])
    def test_ghz_general(self, n, d):
        s = ghz(n, d)
        for k in range(d):
            assert s.amps[np.ravel_multi_index((k,) * n, (d,) * n)] == pytest.approx(1 / math.sqrt(d))
        assert np.vdot(s.amps, s.amps).real == pytest.approx(1)

    def test_product_basis(self):
        s = catalog("ProductBasis(012;3,3,3)")
        assert s.amps[5] == 1
        assert catalog("ProductBasis(10)").dims == (2, 2)

    @pytest.mark.parametrize("bad", ["GHZ(1,2)", "GHZ(3,1)", "Foo", "W3(2)", "ProductBasis(0a)", "ProductBasis(2;2)"])
    def test_invalid(self, bad):
        with pytest.raises((InvalidParameters, UnknownName)):
            catalog(bad)

    def test_names_all_construct(self):
        names = catalog_names()
        assert len(names) >= 7
        for name in names:
            catalog(name)

    def test_label_round_trip(self):
        for name in catalog_names():
            assert NamedState.parse(NamedState.parse(name).label()) == NamedState.parse(name)

    @pytest.mark.parametrize("state", [ghz(3, 2), ghz(3, 3), w3(), ghz(4, 2)], ids=["ghz", "ghz3", "w3", "ghz4"])
    def test_symmetric_states_have_equal_single_party_concurrence(self, state):
        cs = [concurrence_wedge(state, [k]) for k in range(state.n_parties)]
        assert max(cs) - min(cs) <= 1e-12


class TestRandom:
    def test_normalized(self):
        s = random_pure([2, 2, 2], 7)
        assert abs(np.linalg.norm(s.amps) - 1) <= 1e-12

    def test_deterministic(self):
        np.testing.assert_array_equal(random_pure([2, 2, 2], 7).amps, random_pure([2, 2, 2], 7).amps)

    def test_distinct_seeds_differ(self):
        amps = [random_pure([2, 3], s).amps for s in range(20)]
        for i in range(20):
            for j in range(i):
                assert not np.allclose(amps[i], amps[j])

    def test_generic_state_entangled(self):
        from entgeom import concurrence_purity

        assert concurrence_purity(random_pure([3, 3], 1), [0]) > 1e-3

    def test_random_unitary_is_unitary(self):
        u = random_unitary(4, 3)
        np.testing.assert_allclose(u @ u.conj().T, np.eye(4), atol=1e-12)

    def test_apply_local_matches_kron(self):
        s = random_pure([2, 3], 0)
        u, v = random_unitary(2, 1), random_unitary(3, 2)
        np.testing.assert_allclose(apply_local(s, [u, v]).amps, np.kron(u, v) @ s.amps, atol=1e-12)


class TestBipartition:
    def test_complement_and_label(self):
        b = Bipartition([0], 3)
        assert b.complement == (1, 2)
        assert b.label() == "0|12"

    def test_parse(self):
        assert Bipartition.parse("02|1", 3).focus == (0, 2)
        assert Bipartition.parse("1", 3).focus == (1,)

    @pytest.mark.parametrize("focus", [[], [0, 1, 2], [3], [-1]])
    def test_invalid(self, focus):
        with pytest.raises(InvalidBipartition):
            Bipartition(focus, 3)

    def test_parse_rejects_wrong_complement(self):
        with pytest.raises(InvalidBipartition):
            Bipartition.parse("0|1", 3)

    def test_all_bipartitions_count(self):
        assert len(all_bipartitions(4)) == 2**4 - 2
