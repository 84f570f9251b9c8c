from itertools import product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hitprob.hit import cohit_basis
from hitprob.monomials import Polynomial, compare, enumerate_monomials
from hitprob.steenrod import (
    binom_mod2,
    hit_generators,
    sq,
    sq_monomial,
    sq_on_power,
    square_degrees,
)


def brute_sq_monomial(k, m):
    """Sq^k of a monomial straight from Cartan and Sq^a(t^n) = C(n, a) t^(n+a), integer binomials."""
    acc = set()
    for parts in product(*(range(a + 1) for a in m)):
        if sum(parts) != k:
            continue
        if all(comb(a, p) % 2 for a, p in zip(m, parts)):
            acc ^= {tuple(a + p for a, p in zip(m, parts))}
    return acc


def poly(h, terms):
    terms = list(terms)
    n = sum(terms[0]) if terms else 0
    return Polynomial(h, n, terms)


@st.composite
def homogeneous(draw, h, max_deg=5, max_terms=4):
    n = draw(st.integers(0, max_deg))
    pool = enumerate_monomials(h, n)
    terms = draw(st.lists(st.sampled_from(pool), max_size=max_terms))
    return Polynomial(h, n, terms)


class TestBinomials:
    def test_examples(self):
        assert binom_mod2(3, 2) == 1
        assert binom_mod2(2, 1) == 0
        assert binom_mod2(5, 4) == 1
        assert binom_mod2(3, 5) == 0

    def test_lucas_against_exact_binomials(self):
        for n in range(65):
            for k in range(65):
                assert binom_mod2(n, k) == (comb(n, k) % 2 if k <= n else 0)

    def test_power(self):
        assert sq_on_power(1, 1) == 2
        assert sq_on_power(2, 3) == 5
        assert sq_on_power(1, 2) is None
        assert sq_on_power(0, 7) == 7


class TestSquares:
    def test_two_variable_examples(self):
        t1t2 = Polynomial.monomial((1, 1))
        assert set(sq(1, t1t2)) == {(2, 1), (1, 2)}
        assert set(sq(2, t1t2)) == {(2, 2)}
        assert sq(0, t1t2) == t1t2

    @pytest.mark.parametrize("h", [1, 2, 3, 4])
    def test_monomials_against_cartan_oracle(self, h):
        for n in range(0, 9 if h < 4 else 6):
            for m in enumerate_monomials(h, n):
                for k in range(0, n + 2):
                    assert set(sq_monomial(k, m)) == brute_sq_monomial(k, m)

    @given(st.lists(st.integers(0, 40), min_size=1, max_size=6).map(tuple), st.integers(0, 40), st.integers(0, 6))
    def test_odd_pruning_keeps_exactly_the_odd_rich_terms(self, m, k, min_odd):
        full = sq_monomial(k, m)
        pruned = sq_monomial(k, m, min_odd)
        assert sorted(pruned) == sorted(t for t in full if sum(a & 1 for a in t) >= min_odd)

    @settings(max_examples=1000)
    @given(st.data())
    def test_cartan_multiplicativity(self, data):
        h = data.draw(st.integers(1, 4))
        f = data.draw(homogeneous(h))
        g = data.draw(homogeneous(h))
        k = data.draw(st.integers(0, f.n + g.n))
        rhs = Polynomial(h, f.n + g.n + k)
        for a in range(k + 1):
            rhs = rhs + sq(a, f) * sq(k - a, g)
        assert sq(k, f * g) == rhs

    @given(st.data())
    def test_instability(self, data):
        h = data.draw(st.integers(1, 4))
        f = data.draw(homogeneous(h))
        assert not sq(f.n + 1 + data.draw(st.integers(0, 3)), f)
        assert sq(f.n, f) == f * f

    def test_reference_reduction(self):
        t = (1, 2, 2, 2, 6, 1)
        total = Polynomial.monomial(t)
        total = total + sq(1, Polynomial.monomial((4, 1, 1, 1, 5, 1)))
        total = total + sq(3, Polynomial.monomial((2, 1, 1, 1, 5, 1)))
        total = total + sq(6, Polynomial.monomial((1, 1, 1, 1, 3, 1)))
        assert total
        assert all(compare(x, t) == -1 for x in total)


class TestGenerators:
    def test_degree_one_variable(self):
        gens = list(hit_generators(1, 2))
        assert Polynomial.monomial((2,)) in gens

    def test_two_variables_degree_two(self):
        gens = {frozenset(g.terms) for g in hit_generators(2, 2)}
        assert gens == {frozenset({(2, 0)}), frozenset({(0, 2)})}
        assert cohit_basis(2, 2).dim == comb(2, 2)

    def test_square_degrees(self):
        assert square_degrees(26) == [1, 2, 4, 8, 16]
        assert square_degrees(4, all_squares=True) == [1, 2, 3, 4]

    @pytest.mark.parametrize("h,n", [(2, 5), (3, 6), (3, 9), (4, 7)])
    def test_generators_are_squares_of_the_right_degree(self, h, n):
        for g in hit_generators(h, n):
            assert g and g.h == h and g.n == n
