"""Stencils, conjugations, eigensolves and residual machinery."""

import numpy as np
import pytest

from swanson.numerics import (
    Grid,
    GridMismatchError,
    OperatorMatrix,
    action_residual,
    commutator,
    conjugate_by_diagonal,
    d1_matrix,
    d2_matrix,
    dagger,
    diag_matrix,
    identity_matrix,
    probe_family,
    symmetric_eigensolve,
    trapezoid_weights,
    weighted_inner,
)


@pytest.fixture(scope="module")
def osc_grid():
    return Grid(10.0, 2001)


def test_grid_invariants(osc_grid):
    g = osc_grid
    assert g.points[0] == -10.0 and g.points[-1] == 10.0
    assert g.points[g.n_points // 2] == 0.0
    assert np.isclose(g.spacing, 0.01)
    assert np.allclose(np.diff(g.points), g.spacing)
    inner = g.points[g.interior()]
    assert np.all(np.abs(inner) <= g.half_width - 10 * g.spacing + 1e-12)


def test_grid_validation():
    with pytest.raises(ValueError):
        Grid(10.0, 2000)  # even
    with pytest.raises(ValueError):
        Grid(10.0, 3)  # too small
    with pytest.raises(ValueError):
        Grid(-1.0, 101)


def test_d2_exact_on_quadratics(osc_grid):
    g = osc_grid
    out = d2_matrix(g).apply(g.points**2)
    interior = g.interior(1)
    assert np.allclose(out[interior], 2.0, atol=1e-8)
    assert np.allclose(d2_matrix(g).apply(np.ones(g.n_points))[interior], 0.0, atol=1e-12)


def test_d2_truncation_on_sine(osc_grid):
    g = osc_grid
    out = d2_matrix(g).apply(np.sin(g.points))
    interior = g.interior(1)
    err = np.max(np.abs(out[interior] + np.sin(g.points)[interior]))
    assert err < 1e-4  # spacing^2 / 12 * sup|f''''| = 8.3e-6, with headroom


def test_d1_exact_on_linears(osc_grid):
    g = osc_grid
    interior = g.interior(1)
    assert np.allclose(d1_matrix(g).apply(g.points)[interior], 1.0, atol=1e-10)
    assert np.allclose(d1_matrix(g).apply(np.ones(g.n_points))[interior], 0.0)


def test_d1_truncation_on_gaussian(osc_grid):
    g = osc_grid
    f = np.exp(-g.points**2)
    out = d1_matrix(g).apply(f)
    i = int(np.argmin(np.abs(g.points - 1.0)))
    err = out[i] - (-2.0 * np.exp(-1.0))
    # leading truncation term is spacing^2/6 * f'''(1) = (s^2/6) * 4/e
    predicted = g.spacing**2 / 6.0 * 4.0 * np.exp(-1.0)
    assert abs(err) < 1e-4
    assert abs(err - predicted) < 0.02 * predicted


def test_diag_matrix_cases(osc_grid):
    g = osc_grid
    assert np.allclose(diag_matrix(np.ones(g.n_points), g).mat, np.eye(g.n_points))
    assert abs(np.trace(diag_matrix(lambda x: x, g).mat)) < 1e-12  # symmetric grid
    m = diag_matrix(lambda x: np.exp(-0.1 * x**2), g)
    assert m.mat[g.n_points // 2, g.n_points // 2] == 1.0
    with pytest.raises(ValueError):
        diag_matrix(np.full(g.n_points, np.inf), g)


def test_stencil_symmetries(osc_grid):
    g = osc_grid
    d1 = d1_matrix(g)
    d2 = d2_matrix(g)
    assert np.array_equal(dagger(d1).mat, -d1.mat)  # exactly antisymmetric
    assert np.array_equal(dagger(d2).mat, d2.mat)  # exactly symmetric


def test_commutator_and_dagger_algebra(osc_grid):
    g = Grid(5.0, 201)
    a = diag_matrix(lambda x: x, g) @ d1_matrix(g) + d2_matrix(g)
    assert np.max(np.abs(commutator(a, a).mat)) == 0.0
    assert np.array_equal(dagger(dagger(a)).mat, a.mat)


def test_position_derivative_commutator_action():
    # [x, d/dx] = -1 on smooth compactly-supported samples
    g = Grid(10.0, 2001)
    x_op = diag_matrix(lambda x: x, g)
    c = commutator(x_op, d1_matrix(g))
    v = np.exp(-g.points**2)
    interior = g.interior()
    err = np.max(np.abs(c.apply(v)[interior] + v[interior]))
    assert err < 1e-4


def test_grid_mismatch_rejected():
    a = d1_matrix(Grid(10.0, 201))
    b = d1_matrix(Grid(10.0, 301))
    with pytest.raises(GridMismatchError):
        a @ b


def test_conjugation_identity_and_diagonal_invariance(osc_grid):
    g = Grid(5.0, 101)
    m = d2_matrix(g)
    same = conjugate_by_diagonal(m, np.ones(g.n_points))
    assert np.allclose(same.mat, m.mat)
    dvals = np.exp(0.3 * g.points)
    dm = diag_matrix(lambda x: x**2, g)
    assert np.allclose(conjugate_by_diagonal(dm, dvals).mat, dm.mat)
    with pytest.raises(ValueError):
        conjugate_by_diagonal(m, np.zeros(g.n_points))


def test_conjugation_is_isospectral_small_matrix():
    rng = np.random.default_rng(7)
    g = Grid(1.0, 7)
    m = rng.standard_normal((7, 7))
    m = m + m.T
    d = np.exp(rng.standard_normal(7))
    conj = conjugate_by_diagonal(OperatorMatrix(m, g), d)
    ours = np.sort(np.linalg.eigvals(conj.mat).real)
    oracle = np.sort(np.linalg.eigvalsh(m))
    assert np.allclose(ours, oracle, atol=1e-10)


def test_conjugation_preserves_spectrum_200x200():
    rng = np.random.default_rng(3)
    n = 201
    g = Grid(1.0, n)
    m = rng.standard_normal((n, n))
    m = m + m.T
    d = np.exp(0.5 * rng.standard_normal(n))
    conj = conjugate_by_diagonal(OperatorMatrix(m, g), d)
    ours = np.sort(np.linalg.eigvals(conj.mat).real)
    oracle = np.linalg.eigvalsh(m)
    scale = np.max(np.abs(oracle))
    assert np.max(np.abs(ours - oracle)) < 1e-10 * scale


def oscillator_z(g):
    return (-1.0 * d2_matrix(g)) + diag_matrix(lambda z: z**2, g)


def test_oscillator_spectrum(osc_grid):
    rep = symmetric_eigensolve(oscillator_z(osc_grid), 8)
    exact = 2.0 * np.arange(8) + 1.0
    rel = np.abs(rep.eigenvalues - exact) / exact
    assert np.max(rel) < 1e-4
    norm = np.max(np.abs(oscillator_z(osc_grid).mat))
    assert np.max(rep.residual_norms) < 1e-8 * norm


def test_oscillator_convergence_is_second_order(osc_grid):
    exact = 2.0 * np.arange(8) + 1.0
    coarse = symmetric_eigensolve(oscillator_z(osc_grid), 8).eigenvalues
    fine = symmetric_eigensolve(oscillator_z(osc_grid.refined()), 8).eigenvalues
    ratio = np.abs(coarse - exact) / np.abs(fine - exact)
    assert np.all(ratio > 3.0) and np.all(ratio < 5.0)


def test_eigensolve_trivial_diagonal():
    g = Grid(1.0, 5)
    rep = symmetric_eigensolve(diag_matrix(np.array([5.0, 2.0, 1.0, 3.0, 4.0]), g), 2)
    assert np.allclose(rep.eigenvalues, [1.0, 2.0])


def test_eigensolve_rejects_non_hermitian():
    g = Grid(1.0, 5)
    m = OperatorMatrix(np.triu(np.ones((5, 5))), g, "upper")
    with pytest.raises(ValueError, match="conjugat"):
        symmetric_eigensolve(m, 2)


def test_dense_and_tridiagonal_paths_agree(osc_grid):
    op = oscillator_z(osc_grid)
    dense = OperatorMatrix(op.mat + 0.0, op.grid)  # same matrix
    dense.mat[0, 2] = 1e-30  # break tridiagonal detection, keep symmetry
    dense.mat[2, 0] = 1e-30
    w_tri = symmetric_eigensolve(op, 5).eigenvalues
    w_dense = symmetric_eigensolve(dense, 5).eigenvalues
    assert np.allclose(w_tri, w_dense, atol=1e-9)


def test_weighted_inner(osc_grid):
    g = osc_grid
    ground = np.exp(-g.points**2 / 2)
    ground /= np.sqrt(weighted_inner(ground, ground, np.ones(g.n_points), g)).real
    assert abs(weighted_inner(ground, ground, np.ones(g.n_points), g) - 1.0) < 1e-8
    odd = g.points * np.exp(-g.points**2 / 2)
    assert abs(weighted_inner(ground, odd, np.ones(g.n_points), g)) < 1e-14
    w = trapezoid_weights(g)
    assert np.isclose(np.sum(w), 2 * g.half_width)


def test_probe_family_properties(osc_grid):
    probes = probe_family(osc_grid, z_scale=1.3, width=2.0, count=6)
    assert len(probes) == 6
    gram = np.array([[float(u @ v) for v in probes] for u in probes])
    assert np.allclose(gram, np.eye(6), atol=1e-12)
    for v in probes:
        # soft wall decay: enough that the Dirichlet rows (which the
        # interior window excludes anyway) carry negligible mass
        assert abs(v[0]) < 1e-3 and abs(v[-1]) < 1e-3


def test_action_residual_scores():
    g = Grid(10.0, 2001)
    probes = probe_family(g, width=2.0)
    interior = g.interior()
    d1 = d1_matrix(g)
    x_op = diag_matrix(lambda x: x, g)
    # true identity: [x, d1] + 1 = 0
    r_true, _ = action_residual([commutator(x_op, d1), identity_matrix(g)], probes, interior)
    assert r_true < 1e-5
    # broken identity: [x, d1] - 1 = 0
    r_false, _ = action_residual([commutator(x_op, d1), -1.0 * identity_matrix(g)], probes, interior)
    assert r_false > 0.5


def test_action_residual_skips_annihilated_probes():
    g = Grid(10.0, 2001)
    interior = g.interior()
    zero = OperatorMatrix(np.zeros((g.n_points, g.n_points)), g, "0")
    r, per = action_residual([zero, zero], probe_family(g), interior)
    assert r == 0.0
    assert all(p is None for p in per)
