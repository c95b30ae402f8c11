import math

import numpy as np
import pytest

import tempokatz as tk
from tempokatz import Mode
from tempokatz.matfun import SolveError, evaluate

from conftest import random_network


def test_partial_exponential_is_psi1():
    psi1 = tk.partial_op(tk.exponential())
    for r in range(8):
        assert psi1(r) == pytest.approx(1.0 / math.factorial(r + 1), rel=1e-15)
    assert psi1(0) == 1.0


def test_partial_resolvent_fixed_point():
    katz = tk.resolvent(1.0, 1.0)
    shifted = tk.partial_op(katz)
    for r in range(10):
        assert shifted(r) == katz(r) == 1.0


def test_partial_constant_is_zero():
    const = tk.polynomial([5.0])
    shifted = tk.partial_op(const)
    assert all(shifted(r) == 0.0 for r in range(5))


def test_partial_resolvent_stays_geometric():
    f = tk.resolvent(2.0, 0.5)
    g = tk.partial_op(f)
    for r in range(8):
        assert g(r) == pytest.approx(2.0 * 0.5 ** (r + 1), rel=1e-15)
    assert g.geometric == (1.0, 0.5)


def test_partial_scalar_identity():
    # shifted f agrees with (f(z) - f(0)) / z inside the disk
    for f in [tk.exponential(), tk.resolvent(1.0, 1.0), tk.polynomial([1, 2, 3, 4])]:
        g = tk.partial_op(f)
        for z in np.linspace(-0.9, 0.9, 13):
            if z == 0.0:
                continue
            lhs = evaluate(g, z)
            rhs = (evaluate(f, z) - f(0)) / z
            assert lhs == pytest.approx(rhs, abs=1e-9)


def test_partial_value_at_zero_is_derivative():
    assert tk.partial_op(tk.exponential())(0) == 1.0  # exp'(0)
    assert tk.partial_op(tk.polynomial([3.0, 7.0]))(0) == 7.0


def test_negative_coefficients_rejected():
    with pytest.raises(ValueError):
        tk.polynomial([1.0, -2.0])
    with pytest.raises(ValueError):
        tk.resolvent(-1.0, 1.0)


def test_apply_series_worked_example_psi1(ex5):
    # the nilpotent edge-space matrix gives an exact 3-term evaluation
    M = tk.global_transition(ex5, Mode.STANDARD)
    psi1 = tk.partial_op(tk.exponential())
    for beta in (0.5, 1.0, 2.0):
        result = tk.apply_series(M, beta, psi1, np.array([0.0, 0.0, 1.0]))
        np.testing.assert_allclose(
            result.value, [beta**2 / 6, beta / 2, 1.0], rtol=1e-15
        )
        assert not result.truncated
        assert result.terms <= 4  # powers 0..2 plus the vanishing third power


def test_apply_series_alpha_zero(ex5):
    M = tk.global_transition(ex5, Mode.STANDARD)
    g = tk.partial_op(tk.exponential())
    v = np.array([2.0, 3.0, 4.0])
    result = tk.apply_series(M, 0.0, g, v)
    np.testing.assert_array_equal(result.value, g(0) * v)


def test_apply_series_matches_resolvent_solve():
    rng = np.random.default_rng(30)
    for _ in range(5):
        net = random_network(rng, n=5, N=1, density=0.4)
        M = tk.global_transition(net, Mode.STANDARD)
        rho = tk.spectral_radius(M).value
        if rho == 0.0:
            continue
        alpha = 0.9 / rho
        v = rng.random(net.m)
        series = tk.apply_series(M, alpha, tk.resolvent(1, 1), v, tol=1e-14)
        solved = tk.resolvent_solve(M, alpha, v)
        np.testing.assert_allclose(series.value, solved, atol=1e-8)


def test_apply_series_nonnegative_preserved(fig1):
    M = tk.global_transition(fig1, Mode.STANDARD)
    g = tk.partial_op(tk.exponential())
    result = tk.apply_series(M, 0.4, g, np.ones(fig1.m))
    assert (result.value >= 0).all()


def test_apply_series_nilpotent_exact_termination(ex5):
    M = tk.global_transition(ex5, Mode.STANDARD)
    result = tk.apply_series(M, 1.0, tk.resolvent(1, 1), np.ones(3), tol=1e-300)
    assert not result.truncated
    assert result.terms == 4  # nilpotency index 3: powers 0..3, last one zero


def test_apply_series_dimension_mismatch(ex5):
    M = tk.global_transition(ex5, Mode.STANDARD)
    with pytest.raises(ValueError):
        tk.apply_series(M, 0.1, tk.exponential(), np.ones(5))


def test_apply_series_truncation_flag(triangle):
    M = tk.global_transition(triangle, Mode.STANDARD)
    result = tk.apply_series(M, 0.45, tk.resolvent(1, 1), np.ones(6), rmax=3)
    assert result.truncated


def test_resolvent_solve_alpha_zero(ex5):
    M = tk.global_transition(ex5, Mode.STANDARD)
    v = np.array([1.0, 2.0, 3.0])
    np.testing.assert_array_equal(tk.resolvent_solve(M, 0.0, v), v)


def test_resolvent_solve_worked_example(ex5):
    M = tk.global_transition(ex5, Mode.STANDARD)
    for beta in (0.5, 1.3):
        x = tk.resolvent_solve(M, beta, np.ones(3))
        np.testing.assert_allclose(
            x, [1 + beta + beta**2, 1 + beta, 1.0], rtol=1e-14
        )


def test_resolvent_solve_near_singular(triangle):
    M = tk.global_transition(triangle, Mode.STANDARD)
    # rho(M) = 2 exactly, so alpha = 1/2 makes I - alpha M singular
    with pytest.raises(SolveError):
        tk.resolvent_solve(M, 0.5, np.ones(6))


def test_resolvent_solve_dimension_mismatch(ex5):
    M = tk.global_transition(ex5, Mode.STANDARD)
    with pytest.raises(ValueError):
        tk.resolvent_solve(M, 0.1, np.ones(7))


def test_monomial_and_polynomial():
    mono = tk.monomial(3)
    assert [mono(r) for r in range(5)] == [0, 0, 0, 1, 0]
    poly = tk.polynomial([1.0, 0.0, 2.0])
    assert poly.degree == 2
    assert poly(2) == 2.0
    assert poly(3) == 0.0


def test_coefficient_file(tmp_path):
    path = tmp_path / "coeffs.txt"
    path.write_text("1.0\n0.5  # halved\n\n0.25\n")
    f = tk.from_coefficient_file(path)
    assert [f(r) for r in range(4)] == [1.0, 0.5, 0.25, 0.0]
    bad = tmp_path / "bad.txt"
    bad.write_text("1.0\nnope\n")
    with pytest.raises(ValueError):
        tk.from_coefficient_file(bad)
