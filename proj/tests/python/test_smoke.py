from fractions import Fraction

import pytest

import cgd4


def test_z_tilde_low_order():
    z = cgd4.z_tilde(3)
    assert z[(0, 0, 0, 0, 0)] == [1]
    for i in range(5):
        e = [0] * 5
        e[i] = 1
        assert z[tuple(e)] == [0, 1]


def test_c_g_example():
    c = cgd4.c_g([2, 2, 2, 0, 0])
    assert c[-1] == [0, 0, 0, 0, -1]
    assert c[0] == [-1, 0, 3, 0, -3, 0, 1]
    with pytest.raises(ValueError):
        cgd4.c_g([1, 2])


def test_moment_identity():
    for D in range(0, 4):
        assert cgd4.moment_bruteforce(5, D) == cgd4.moment_via_series(5, D)
    assert cgd4.moment_via_series(5, 0) == (Fraction(7, 32), Fraction(3, 32))


def test_quad_symbol_and_l_function():
    # (x / x+1) = (x+1 / x) = (1 / x) = 1 by reciprocity, q = 1 mod 4
    assert cgd4.quad_symbol(5, [0, 1], [1, 1]) == 1
    l = cgd4.l_function(5, [0, 1])
    assert l["q"] == 5
    with pytest.raises(ValueError):
        cgd4.quad_symbol(7, [1], [1, 1])


def test_suites():
    assert "axioms" in cgd4.suite_names()
    r = cgd4.run_suite("axioms", order=8)
    assert all(c["status"] == "pass" for c in r["checks"])
    with pytest.raises(ValueError):
        cgd4.run_suite("nope")


def test_q_n_is_finite():
    v = cgd4.q_n(2, 10009, 4)
    assert v == v and abs(v) < float("inf")
