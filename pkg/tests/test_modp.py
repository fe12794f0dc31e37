"""Mod-p degree patterns against sympy factor lists.

A usable prime (not dividing the leading coefficient, reduction
squarefree) must reproduce the sorted multiset of irreducible factor
degrees of f mod p; unusable primes must be reported as None.
"""

from __future__ import annotations

import random

import sympy

from rootcensus.intpoly import IntPolynomial, discriminant
from rootcensus.modp import factor_degree_pattern, primes_up_to

_X = sympy.symbols("x")


def _sympy_pattern(f: IntPolynomial, p: int):
    poly = sympy.Poly(list(f.coeffs), _X, modulus=p, symmetric=False)
    _, facs = poly.factor_list()
    out = []
    for g, m in facs:
        out.extend([g.degree()] * m)
    return tuple(sorted(out))


def test_primes_up_to():
    assert primes_up_to(1) == []
    assert primes_up_to(2) == [2]
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert len(primes_up_to(200)) == 46


def test_cyclotomic_x4_plus_1_patterns():
    # x^4+1 is reducible mod every prime: pattern is never (4,) for odd p
    f = IntPolynomial((1, 0, 0, 0, 1))
    for p in primes_up_to(60):
        pat = factor_degree_pattern(f, p)
        if pat is None:
            assert p == 2  # only bad reduction
        else:
            assert pat in ((1, 1, 1, 1), (2, 2), (1, 1, 2))
            assert pat == _sympy_pattern(f, p)


def test_known_irreducible_patterns():
    # x^2+1: irreducible mod p iff p = 3 mod 4
    f = IntPolynomial((1, 0, 1))
    for p in primes_up_to(50):
        pat = factor_degree_pattern(f, p)
        if p == 2:
            assert pat is None
        elif p % 4 == 3:
            assert pat == (2,)
        else:
            assert pat == (1, 1)


def test_bad_leading_coefficient():
    f = IntPolynomial((6, 1, 1))
    assert factor_degree_pattern(f, 2) is None
    assert factor_degree_pattern(f, 3) is None
    assert factor_degree_pattern(f, 5) is not None


def test_non_squarefree_reduction_is_none():
    # (x-1)^2 mod every p is never squarefree
    f = IntPolynomial((1, -2, 1))
    for p in primes_up_to(30):
        assert factor_degree_pattern(f, p) is None
    # disc(x^2 - x - 1) = 5, so exactly p = 5 is a bad reduction
    g = IntPolynomial((1, -1, -1))
    assert factor_degree_pattern(g, 5) is None
    assert factor_degree_pattern(g, 3) == (2,)


def test_patterns_match_sympy_seeded():
    rng = random.Random(909)
    primes = primes_up_to(60)
    checked = 0
    for _ in range(120):
        n = rng.randint(1, 6)
        cs = [rng.randint(-9, 9) for _ in range(n + 1)]
        if cs[0] == 0:
            cs[0] = 1
        f = IntPolynomial(tuple(cs))
        disc = discriminant(f)
        for p in primes:
            pat = factor_degree_pattern(f, p)
            if f.coeffs[0] % p == 0 or disc % p == 0:
                assert pat is None or sum(pat) == f.degree
                continue
            assert pat is not None
            assert pat == _sympy_pattern(f, p), (f.coeffs, p)
            checked += 1
    assert checked > 1000
