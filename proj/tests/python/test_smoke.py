import numpy as np
import pytest

import starorder as so


def rand(n, seed):
    rng = np.random.default_rng(seed)
    return rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))


def test_svd_matches_numpy():
    a = rand(4, 1)
    u, s, v = so.svd(a)
    assert np.allclose(s, np.linalg.svd(a, compute_uv=False))
    assert np.allclose(u @ np.diag(s) @ v.conj().T, a)


def test_polar_of_swap():
    w, p = so.polar(np.array([[0, 2], [3, 0]], dtype=complex))
    assert np.allclose(w, [[0, 1], [1, 0]])
    assert np.allclose(p, np.diag([3, 2]))


def test_star_order_and_join():
    e11 = np.diag([1, 0]).astype(complex)
    d12 = np.diag([1, 2]).astype(complex)
    assert so.star_leq(e11, d12)
    assert not so.star_leq(d12, e11)
    assert so.block_witness(e11, d12) is not None
    assert so.try_join(e11, np.diag([0, 2]).astype(complex)) is not None
    assert so.try_join(e11, 2 * e11) is None
    status, join = so.oracle_join(e11, np.diag([0, 2]).astype(complex))
    assert status == "found"
    assert np.allclose(join, d12)


def test_penrose_round_trip():
    a = rand(5, 2)
    pd = so.penrose_decompose(a)
    assert np.allclose(sorted(pd.values(), reverse=True), np.linalg.svd(a, compute_uv=False))
    assert np.allclose(so.reconstruct(pd), a)


def test_models():
    m = so.SpectralModel([(1.0, "u", 1)], [(2.0, 3.0, "v")])
    t1, t2 = so.model_type_split(m)
    assert so.model_merge(t1, t2) == m
    out = so.apply_model(so.ScalarMap.scale(2.0), so.ScalarMap.scale(2.0), m)
    assert out == so.SpectralModel([(2.0, "u", 1)], [(4.0, 6.0, "v")])


def test_automorphism_apply_and_invert():
    i2 = np.eye(2, dtype=complex)
    spec = so.AutomorphismSpec(1.0, i2, i2, so.ScalarMap.power(2.0))
    assert np.allclose(so.apply(spec, np.diag([2, 3]).astype(complex)), np.diag([4, 9]))
    a = rand(2, 3)
    assert np.allclose(so.apply(so.invert(spec), so.apply(spec, a)), a)
    passed, text = so.verify_automorphism(spec, trials=20)
    assert passed and "status PASS" in text


def test_errors_are_typed():
    with pytest.raises(so.ShapeError):
        so.star_leq(np.eye(2, dtype=complex), np.eye(3, dtype=complex))
    with pytest.raises(so.ContractError):
        so.AutomorphismSpec(-1.0, np.eye(2), np.eye(2))
    with pytest.raises(so.StarOrderError):
        so.run_suite("no-such-suite")


def test_suite_and_hasse_are_deterministic():
    assert so.run_suite("prop21", seed=5, dim_max=3) == so.run_suite("prop21", seed=5, dim_max=3)
    nodes = [np.zeros((2, 2)), np.diag([1, 0]), np.diag([1, 2])]
    dot = so.hasse_dot([n.astype(complex) for n in nodes])
    assert "n0 -> n1;" in dot and "n1 -> n2;" in dot
