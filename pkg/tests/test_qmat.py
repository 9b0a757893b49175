import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from ghz_turbulence import qmat
from ghz_turbulence.turbulence import turbulence_operator

SY = qmat.SIGMA_Y
I2, I4, I8 = np.eye(2), np.eye(4), np.eye(8)
GHZ = np.zeros(8, dtype=complex)
GHZ[[0, 7]] = 1 / np.sqrt(2)
GHZ_PROJ = np.outer(GHZ, GHZ.conj())

finite = st.floats(-3, 3, allow_nan=False, allow_infinity=False)


def complex_matrices(n, m=None):
    m = n if m is None else m
    return st.tuples(arrays(float, (n, m), elements=finite), arrays(float, (n, m), elements=finite)).map(
        lambda t: t[0] + 1j * t[1])


def random_hermitian(rng, n):
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return g + g.conj().T


def random_density(rng, n_qubits, rank=None):
    d = 2 ** n_qubits
    g = rng.standard_normal((d, rank or d)) + 1j * rng.standard_normal((d, rank or d))
    rho = g @ g.conj().T
    return rho / np.trace(rho)


class TestAlgebra:
    def test_matmul_examples(self):
        assert np.allclose(qmat.matmul(I2, I2), I2)
        assert np.allclose(qmat.matmul(SY, SY), I2)
        a = qmat.matmul(turbulence_operator(0.7), np.array([[np.cosh(0.7), -np.sinh(0.7)],
                                                            [-np.sinh(0.7), np.cosh(0.7)]]))
        assert np.max(np.abs(a - I2)) < 1e-14

    def test_matmul_shape_error_names_both_shapes(self):
        with pytest.raises(ValueError, match=r"\(2, 3\).*\(2, 2\)"):
            qmat.matmul(np.ones((2, 3)), np.ones((2, 2)))

    def test_dagger(self):
        assert np.array_equal(qmat.dagger(I4), I4)
        assert np.array_equal(qmat.dagger(SY), SY)
        assert np.array_equal(qmat.dagger([[0, 1], [0, 0]]), [[0, 0], [1, 0]])

    def test_kron_examples(self):
        assert np.array_equal(qmat.kron(I2, I2), I4)
        expected = np.array([[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]])
        assert np.allclose(qmat.kron(SY, SY), expected)
        assert np.array_equal(qmat.kron(turbulence_operator(0), turbulence_operator(0)), I4)

    def test_kron_index_convention(self, rng):
        a = rng.standard_normal((2, 3)) + 1j * rng.standard_normal((2, 3))
        b = rng.standard_normal((4, 2))
        k = qmat.kron(a, b)
        assert k.shape == (8, 6)
        for i in range(2):
            for j in range(3):
                for p in range(4):
                    for q in range(2):
                        assert k[i * 4 + p, j * 2 + q] == a[i, j] * b[p, q]

    def test_trace(self):
        assert qmat.trace(I8) == 8
        assert abs(qmat.trace(GHZ_PROJ) - 1) < 1e-15
        assert qmat.trace(SY) == 0
        with pytest.raises(ValueError):
            qmat.trace(np.ones((2, 3)))

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            qmat.as_matrix([[1, np.nan], [0, 1]])

    @settings(max_examples=50, deadline=None)
    @given(complex_matrices(2), complex_matrices(2), complex_matrices(2))
    def test_kron_associative(self, a, b, c):
        left = qmat.kron(qmat.kron(a, b), c)
        right = qmat.kron(a, qmat.kron(b, c))
        assert np.max(np.abs(left - right)) < 1e-12

    @settings(max_examples=50, deadline=None)
    @given(complex_matrices(4), complex_matrices(4))
    def test_trace_cyclic(self, a, b):
        scale = 1 + np.abs(a).sum() * np.abs(b).sum()
        assert abs(qmat.trace(qmat.matmul(a, b)) - qmat.trace(qmat.matmul(b, a))) < 1e-12 * scale


class TestPartialTrace:
    def test_product_state(self, rng):
        ra, rb = random_density(rng, 1), random_density(rng, 1)
        assert np.allclose(qmat.partial_trace(qmat.kron(ra, rb), 2, [0]), ra, atol=1e-14)
        assert np.allclose(qmat.partial_trace(qmat.kron(ra, rb), 2, [1]), rb, atol=1e-14)

    def test_ghz_reductions(self):
        # summing the |000> and |111> branches by hand
        assert np.allclose(qmat.partial_trace(GHZ_PROJ, 3, [0]), I2 / 2)
        assert np.allclose(qmat.partial_trace(GHZ_PROJ, 3, [0, 1]), np.diag([0.5, 0, 0, 0.5]))

    def test_keep_order_controls_output_order(self, rng):
        a, b, c = (random_density(rng, 1) for _ in range(3))
        rho = qmat.kron_all([a, b, c])
        assert np.allclose(qmat.partial_trace(rho, 3, [2, 0]), qmat.kron(c, a), atol=1e-14)
        assert np.allclose(qmat.partial_trace(rho, 3, [1, 2]), qmat.kron(b, c), atol=1e-14)
        assert np.allclose(qmat.partial_trace(rho, 3, [0, 1, 2]), rho)
        assert np.allclose(qmat.partial_trace(rho, 3, [2, 1, 0]), qmat.kron_all([c, b, a]), atol=1e-14)

    def test_against_explicit_sum(self, rng):
        rho = random_density(rng, 3)
        expected = np.zeros((2, 2), dtype=complex)
        for i in range(2):
            for j in range(2):
                for b in range(2):
                    for c in range(2):
                        expected[i, j] += rho[4 * i + 2 * b + c, 4 * j + 2 * b + c]
        assert np.allclose(qmat.partial_trace(rho, 3, [0]), expected, atol=1e-15)

    @pytest.mark.parametrize("keep", [[0], [1], [2], [0, 1], [0, 2], [1, 2], [2, 0]])
    def test_trace_preserved(self, rng, keep):
        g = rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))
        assert abs(qmat.trace(qmat.partial_trace(g, 3, keep)) - qmat.trace(g)) < 1e-12

    def test_kron_factor_scaled_by_partner_trace(self, rng):
        a = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        b = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        assert np.allclose(qmat.partial_trace(qmat.kron(a, b), 3, [0]), a * np.trace(b), atol=1e-13)

    @pytest.mark.parametrize("keep", [[3], [-1], [], [0, 0]])
    def test_bad_indices(self, keep):
        with pytest.raises(ValueError):
            qmat.partial_trace(GHZ_PROJ, 3, keep)

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            qmat.partial_trace(I4, 3, [0])


class TestEigen:
    def test_examples(self):
        assert np.allclose(qmat.hermitian_eigenvalues(I4), [1, 1, 1, 1])
        assert np.allclose(qmat.hermitian_eigenvalues(SY), [-1, 1])
        assert np.allclose(qmat.hermitian_eigenvalues(GHZ_PROJ), [0] * 7 + [1], atol=1e-15)

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError, match="Hermitian"):
            qmat.hermitian_eigenvalues([[0, 1], [0, 0]])

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 8])
    def test_matches_lapack(self, rng, n):
        for _ in range(20):
            h = random_hermitian(rng, n)
            values, vecs = qmat.hermitian_eigh(h)
            assert np.max(np.abs(values - np.linalg.eigvalsh(h))) < 1e-12
            assert np.max(np.abs(h @ vecs - vecs * values)) < 1e-12
            assert np.max(np.abs(vecs.conj().T @ vecs - np.eye(n))) < 1e-13

    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_sum_and_product(self, rng, n):
        h = random_hermitian(rng, n)
        values = qmat.hermitian_eigenvalues(h)
        assert abs(values.sum() - np.trace(h).real) < 1e-10
        det = np.linalg.det(h).real
        assert abs(np.prod(values) - det) < 1e-9 * max(1.0, abs(det))

    def test_degenerate_spectrum(self):
        # GHZ Werner mixture has a 7-fold degenerate eigenvalue
        rho = 0.3 * GHZ_PROJ + 0.7 / 8 * I8
        values = qmat.hermitian_eigenvalues(rho)
        assert np.allclose(values, [0.7 / 8] * 7 + [0.3 + 0.7 / 8], atol=1e-15)

    def test_sqrt_examples(self):
        assert np.allclose(qmat.hermitian_sqrt(I4), I4)
        assert np.allclose(qmat.hermitian_sqrt(4 * I2), 2 * I2)
        assert np.allclose(qmat.hermitian_sqrt(GHZ_PROJ), GHZ_PROJ, atol=1e-12)

    def test_sqrt_rejects_negative(self):
        with pytest.raises(ValueError, match="semidefinite"):
            qmat.hermitian_sqrt(np.diag([1.0, -1e-6]))

    def test_sqrt_clamps_rounding_negatives(self):
        s = qmat.hermitian_sqrt(np.diag([1.0, -1e-12]))
        assert np.allclose(s, np.diag([1.0, 0.0]))

    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_sqrt_squares_back(self, rng, n):
        for _ in range(10):
            g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            a = g @ g.conj().T
            s = qmat.hermitian_sqrt(a)
            assert np.max(np.abs(s @ s - a)) < 1e-9
            assert qmat.hermiticity_error(s) < 1e-12
            assert qmat.hermitian_eigenvalues(s)[0] > -1e-10

    @pytest.mark.parametrize("shape", [(4, 4), (8, 8), (3, 5), (5, 2)])
    def test_singular_values_match_lapack(self, rng, shape):
        for _ in range(10):
            a = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
            sv = qmat.singular_values(a)
            ref = np.linalg.svd(a, compute_uv=False)
            assert np.max(np.abs(sv[: len(ref)] - ref)) < 1e-12

    def test_singular_values_resolve_exact_zeros(self, rng):
        g = rng.standard_normal((4, 2)) + 1j * rng.standard_normal((4, 2))
        sv = qmat.singular_values(g @ g.conj().T)
        assert np.all(sv[2:] < 1e-14)
