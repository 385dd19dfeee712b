import math

import pytest
from hypothesis import given, settings, strategies as st

from skewlgv.poly import (
    MissingVariableError,
    Polynomial,
    VarRange,
    e_poly,
    h_poly,
    newton_residual,
    qbinom,
    substitute,
)

X1 = Polynomial.variable(1)
X2 = Polynomial.variable(2)
X3 = Polynomial.variable(3)
Q = Polynomial.q()
ONE = Polynomial.one()
ZERO = Polynomial.zero()


# --- independent oracle: Gaussian coefficient by its product formula -------


def poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of univariate integer coefficient lists."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        assert c % den[-1] == 0
        q = c // den[-1]
        out[k] = q
        for i, d in enumerate(den):
            num[k + i] -= q * d
    assert all(c == 0 for c in num)
    return out


def poly_mul_lists(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def qbinom_oracle(n: int, k: int) -> list[int]:
    """[n choose k]_q as coefficient list, via prod (1-q^(n-k+i))/(1-q^i)."""
    num = [1]
    den = [1]
    for i in range(1, k + 1):
        num = poly_mul_lists(num, [1] + [0] * (n - k + i - 1) + [-1])
        den = poly_mul_lists(den, [1] + [0] * (i - 1) + [-1])
    return poly_divide_exact(num, den)


def coeff_list(p: Polynomial) -> list[int]:
    """Univariate-in-q polynomial as a coefficient list (constant first)."""
    out = [0] * (p.total_degree() + 1)
    for mono, c in p.terms.items():
        if not mono:
            out[0] += c
        else:
            assert len(mono) == 1 and mono[0][0] == 0
            out[mono[0][1]] += c
    return out


# --- arithmetic basics ------------------------------------------------------


def test_add_identity_and_cancellation():
    p = X1 * X2 + 3 * X3
    assert ZERO + p == p
    assert X1 + (-X1) == ZERO
    assert not (X1 - X1)


def test_add_merges_coefficients():
    assert (X1 + X2) + X2 == X1 + 2 * X2


def test_mul_basics():
    p = X1 + 2 * X2
    assert ONE * p == p
    assert (X1 + X2) * (X1 - X2) == X1 * X1 - X2 * X2
    assert ZERO * p == ZERO


def test_power():
    assert (X1 + X2) ** 0 == ONE
    assert (X1 + X2) ** 2 == X1**2 + 2 * X1 * X2 + X2**2
    with pytest.raises(ValueError):
        X1 ** (-1)


small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def polynomials(draw):
    nterms = draw(st.integers(min_value=0, max_value=4))
    p = ZERO
    for _ in range(nterms):
        c = draw(small_ints)
        e1 = draw(st.integers(min_value=0, max_value=3))
        e2 = draw(st.integers(min_value=0, max_value=3))
        p = p + c * X1**e1 * X2**e2
    return p


@settings(max_examples=120, deadline=None)
@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=60, deadline=None)
@given(polynomials(), polynomials())
def test_eq_means_term_maps_equal(p, q):
    assert (p == q) == (dict(p.terms) == dict(q.terms))
    if p == q:
        assert hash(p) == hash(q)


# --- symmetric polynomial constructors --------------------------------------


def test_h_poly_conventions():
    empty = VarRange(1, 0)
    assert h_poly(0, empty) == ONE
    assert h_poly(3, empty) == ZERO
    assert h_poly(-2, VarRange(1, 3)) == ZERO
    assert h_poly(1, VarRange(2, 4)) == X2 + X3 + Polynomial.variable(4)
    assert h_poly(2, VarRange(2, 2)) == X2**2


def test_e_poly_conventions():
    assert e_poly(0, VarRange(5, 2)) == ONE
    assert e_poly(2, VarRange(1, 3)) == X1 * X2 + X1 * X3 + X2 * X3
    assert e_poly(4, VarRange(1, 3)) == ZERO
    assert e_poly(-1, VarRange(1, 3)) == ZERO


@pytest.mark.parametrize("d", range(6))
@pytest.mark.parametrize("lo,hi", [(1, 1), (1, 3), (2, 5), (3, 7), (1, 5)])
def test_h_term_count_at_ones(d, lo, hi):
    width = hi - lo + 1
    p = h_poly(d, VarRange(lo, hi))
    ones = {v: 1 for v in p.variables()}
    assert p.evaluate(ones) == math.comb(width + d - 1, d)


@pytest.mark.parametrize("d", range(6))
@pytest.mark.parametrize("lo,hi", [(1, 1), (1, 3), (2, 5), (3, 7), (1, 5)])
def test_e_count_at_ones(d, lo, hi):
    width = hi - lo + 1
    p = e_poly(d, VarRange(lo, hi))
    ones = {v: 1 for v in p.variables()}
    assert p.evaluate(ones) == math.comb(width, d)


# --- substitution -----------------------------------------------------------


def test_substitute_direct():
    p = X1 + X2
    assert substitute(p, {1: 1, 2: Q}) == ONE + Q


def test_substitute_q_powers_gives_gaussian():
    p = h_poly(1, VarRange(1, 2))
    got = p.substitute({i: Q ** (i - 1) for i in (1, 2)})
    assert got == ONE + Q
    assert got == qbinom(2, 1)


def test_substitute_all_ones_counts_terms():
    p = e_poly(2, VarRange(1, 3))
    assert p.substitute({1: 1, 2: 1, 3: 1}) == Polynomial.integer(3)


def test_substitute_missing_variable():
    with pytest.raises(MissingVariableError):
        (X1 + X2).substitute({1: ONE})


# --- Gaussian coefficients ---------------------------------------------------


def test_qbinom_edges():
    for n in range(6):
        assert qbinom(n, 0) == ONE
        assert qbinom(n, n) == ONE
    assert qbinom(3, -1) == ZERO
    assert qbinom(3, 4) == ZERO


def test_qbinom_small_values():
    assert qbinom(2, 1) == ONE + Q
    assert coeff_list(qbinom(2, 1)) == qbinom_oracle(2, 1)
    assert qbinom(4, 2) == ONE + Q + 2 * Q**2 + Q**3 + Q**4
    assert coeff_list(qbinom(4, 2)) == qbinom_oracle(4, 2)


@pytest.mark.parametrize("n", range(9))
def test_qbinom_against_product_oracle(n):
    for k in range(n + 1):
        assert coeff_list(qbinom(n, k)) == qbinom_oracle(n, k)


@pytest.mark.parametrize("n", range(9))
def test_qbinom_at_one_is_binomial(n):
    for k in range(n + 1):
        assert qbinom(n, k).substitute({0: 1}) == Polynomial.integer(math.comb(n, k))


# --- Newton's identity -------------------------------------------------------


def test_newton_residual_examples():
    assert newton_residual(1, 3) == ZERO
    assert newton_residual(4, 2) == ZERO
    assert newton_residual(2, 0) == ZERO


def test_newton_residual_grid():
    for d in range(1, 7):
        for nvars in range(7):
            assert newton_residual(d, nvars) == ZERO


def test_newton_residual_rejects_nonpositive_degree():
    with pytest.raises(ValueError):
        newton_residual(0, 2)


# --- text format -------------------------------------------------------------


def test_str_zero_and_constants():
    assert str(ZERO) == "0"
    assert str(Polynomial.integer(-5)) == "-5"
    assert str(ONE) == "1"


def test_str_golden_example():
    p = X1 * X2 * X3 + 2 * X2**2 - 1
    assert str(p) == "x1*x2*x3 + 2*x2^2 - 1"


def test_str_signs_and_elisions():
    assert str(X1 - X2) == "x1 - x2"
    assert str(-X1 + X2) == "-x1 + x2"
    assert str(2 * Q**2 * X1) == "2*q^2*x1"
    assert str(Q) == "q"


def test_str_graded_lex_order():
    p = X2**2 + X1 * X2 + X1**2 + X1 + 1
    assert str(p) == "x1^2 + x1*x2 + x2^2 + x1 + 1"
