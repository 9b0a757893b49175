"""Small dense complex-matrix kernel.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128`` and
shape ``(rows, cols)``. Qubit 0 is the leftmost tensor factor, i.e. the most
significant bit of a basis index.

The Hermitian eigensolver is a cyclic complex Jacobi iteration; it is only
meant for the 2x2 .. 8x8 operators that show up in three-qubit work.
"""
import math

import numpy as np

HERMITIAN_TOL = 1e-10
JACOBI_MAX_SWEEPS = 100
JACOBI_OFF_TOL = 1e-13

SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)


def as_matrix(a):
    """Coerce ``a`` to a finite 2-D complex array (copy-free when possible)."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError(f"expected a non-empty 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix contains NaN or Inf entries")
    return m


def identity(n):
    return np.eye(n, dtype=complex)


def matmul(a, b):
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"cannot multiply shapes {a.shape} and {b.shape}")
    return a @ b


def dagger(a):
    return as_matrix(a).conj().T


def kron(a, b):
    """Kronecker product; entry (i*rb + k, j*cb + l) is a[i, j] * b[k, l]."""
    return np.kron(as_matrix(a), as_matrix(b))


def kron_all(factors):
    out = identity(1)
    for f in factors:
        out = kron(out, f)
    return out


def _require_square(a):
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")


def trace(a):
    a = as_matrix(a)
    _require_square(a)
    return complex(np.trace(a))


def partial_trace(rho, n_qubits, keep):
    """Trace out every qubit not listed in ``keep``.

    The reduced matrix orders its qubits as they appear in ``keep``, so
    ``partial_trace(rho, 3, [2, 0])`` puts the original qubit 2 first.
    """
    rho = as_matrix(rho)
    dim = 2 ** n_qubits
    if rho.shape != (dim, dim):
        raise ValueError(f"expected a {dim}x{dim} matrix for {n_qubits} qubits, got {rho.shape}")
    keep = list(keep)
    if not keep:
        raise ValueError("keep must name at least one qubit")
    for q in keep:
        if not 0 <= q < n_qubits:
            raise ValueError(f"qubit index {q} out of range for {n_qubits} qubits")
    if len(set(keep)) != len(keep):
        raise ValueError(f"duplicate qubit index in keep={keep}")

    traced = [q for q in range(n_qubits) if q not in keep]
    t = rho.reshape((2,) * (2 * n_qubits))
    # bra axes of traced qubits shift left as earlier axes disappear
    for removed, q in enumerate(sorted(traced, reverse=True)):
        t = np.trace(t, axis1=q, axis2=q + n_qubits - removed)
    # remaining axes are kept qubits in ascending order (kets then bras)
    remaining = sorted(keep)
    order = [remaining.index(q) for q in keep]
    k = len(keep)
    t = t.transpose(order + [k + i for i in order])
    return t.reshape(2 ** k, 2 ** k)


def hermiticity_error(a):
    a = as_matrix(a)
    return float(np.max(np.abs(a - a.conj().T)))


def _require_hermitian(a, tol=HERMITIAN_TOL):
    _require_square(a)
    err = hermiticity_error(a)
    if err > tol:
        raise ValueError(f"matrix is not Hermitian (max |a - a^H| = {err:.3e} > {tol:.0e})")


def _jacobi_rotation(app, aqq, apq):
    """Unitary 2x2 G with G^H [[app, apq], [apq*, aqq]] G diagonal."""
    mag = abs(apq)
    phase = apq / mag
    tau = (aqq - app) / (2.0 * mag)
    t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.hypot(1.0, tau))
    c = 1.0 / math.hypot(1.0, t)
    s = t * c
    # phase fix makes the block real symmetric, then a real Jacobi rotation
    return (c, s), (-s * phase.conjugate(), c * phase.conjugate())


def hermitian_eigh(a):
    """Eigen-decomposition of a Hermitian matrix by cyclic Jacobi sweeps.

    Returns ``(values, vectors)`` with ``values`` real and ascending and the
    matching unit eigenvectors in the columns of ``vectors``. Equal
    eigenvalues keep the order in which they sit on the Jacobi diagonal.
    """
    a = as_matrix(a)
    _require_hermitian(a)
    n = a.shape[0]
    # plain Python complex lists beat numpy call overhead at n <= 8
    w = ((a + a.conj().T) / 2).tolist()
    v = [[1.0 + 0j if i == j else 0j for j in range(n)] for i in range(n)]
    scale = max(1.0, float(np.linalg.norm(a)))
    threshold = (JACOBI_OFF_TOL * scale) ** 2

    for _ in range(JACOBI_MAX_SWEEPS):
        off = sum(abs(w[i][j]) ** 2 for i in range(n) for j in range(n) if i != j)
        if off <= threshold:
            break
        for p in range(n - 1):
            wp = w[p]
            for q in range(p + 1, n):
                wq = w[q]
                apq = wp[q]
                if abs(apq) < 1e-300:
                    continue
                (g00, g01), (g10, g11) = _jacobi_rotation(wp[p].real, wq[q].real, apq)
                # columns: W <- W G, V <- V G
                for m in (w, v):
                    for row in m:
                        x, y = row[p], row[q]
                        row[p] = x * g00 + y * g10
                        row[q] = x * g01 + y * g11
                # rows: W <- G^H W
                c00, c01 = g00.conjugate(), g01.conjugate()
                c10, c11 = g10.conjugate(), g11.conjugate()
                for j in range(n):
                    x, y = wp[j], wq[j]
                    wp[j] = x * c00 + y * c10
                    wq[j] = x * c01 + y * c11
                wp[q] = wq[p] = 0j
                wp[p] = complex(wp[p].real)
                wq[q] = complex(wq[q].real)
    else:
        raise RuntimeError(f"Jacobi iteration did not converge in {JACOBI_MAX_SWEEPS} sweeps")

    values = np.array([w[i][i].real for i in range(n)])
    order = np.argsort(values, kind="stable")
    return values[order], np.array(v, dtype=complex)[:, order]


def hermitian_eigenvalues(a):
    return hermitian_eigh(a)[0]


def hermitian_sqrt(a):
    """Principal square root of a Hermitian PSD matrix."""
    values, vecs = hermitian_eigh(a)
    if values[0] < -HERMITIAN_TOL:
        raise ValueError(f"matrix is not positive semidefinite (eigenvalue {values[0]:.3e})")
    roots = np.sqrt(np.clip(values, 0.0, None))
    return (vecs * roots) @ vecs.conj().T


def singular_values(a):
    """Singular values, descending, by one-sided (Hestenes) Jacobi.

    Columns are rotated pairwise until mutually orthogonal; their norms are
    the singular values. Zero singular values come out at rounding level
    rather than at its square root, which matters when they feed a
    difference like the Wootters concurrence.
    """
    a = as_matrix(a)
    cols = [list(c) for c in a.T]
    n = len(cols)
    for _ in range(JACOBI_MAX_SWEEPS):
        rotated = False
        for i in range(n - 1):
            ci = cols[i]
            for j in range(i + 1, n):
                cj = cols[j]
                alpha = sum(abs(x) ** 2 for x in ci)
                beta = sum(abs(x) ** 2 for x in cj)
                gamma = sum(x.conjugate() * y for x, y in zip(ci, cj))
                if abs(gamma) <= JACOBI_OFF_TOL * math.sqrt(alpha * beta) or abs(gamma) < 1e-300:
                    continue
                rotated = True
                (g00, g01), (g10, g11) = _jacobi_rotation(alpha, beta, gamma)
                for k in range(len(ci)):
                    x, y = ci[k], cj[k]
                    ci[k] = x * g00 + y * g10
                    cj[k] = x * g01 + y * g11
        if not rotated:
            break
    else:
        raise RuntimeError(f"one-sided Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps")
    norms = np.array([math.sqrt(sum(abs(x) ** 2 for x in c)) for c in cols])
    return np.sort(norms)[::-1]
