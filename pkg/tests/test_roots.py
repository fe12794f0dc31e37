"""Certified root isolation against numpy eigenvalue roots.

Every certified disk must contain the matching numpy root (up to the
numpy error itself), multiplicities must sum to the degree, real flags
must agree with the Sturm count, and rational roots must be enclosed
exactly. The hardware-precision rung (precision_bits <= 53, small
coefficients) must agree with the multiprecision path on the same
polynomials.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import pytest

from rootcensus.errors import DegreeTooSmall, ZeroPolynomial
from rootcensus.intpoly import IntPolynomial
from rootcensus.roots import (
    CertifiedRootSet,
    fujiwara_bound,
    isolate_roots,
    modulus_separation_bound,
    mpf_to_fraction,
    refine,
    isolate_roots as _isolate,
)


def _rand_poly(rng: random.Random, max_deg: int = 6, height: int = 1000) -> IntPolynomial:
    n = rng.randint(1, max_deg)
    cs = [rng.randint(-height, height) for _ in range(n + 1)]
    if cs[0] == 0:
        cs[0] = rng.randint(1, height)
    return IntPolynomial(tuple(cs))


def _check_against_numpy(f: IntPolynomial, rs: CertifiedRootSet, slack: float = 1e-6):
    rr = list(np.roots([float(c) for c in f.coeffs]))
    for d in rs.disks:
        c = complex(float(d.center_re), float(d.center_im))
        r = float(d.radius)
        near = [z for z in rr if abs(z - c) <= r + slack]
        assert len(near) >= d.multiplicity, (f.coeffs, c, r)
        for z in near[: d.multiplicity]:
            rr.remove(z)
    assert not rr


def test_total_multiplicity_and_containment_seeded():
    rng = random.Random(42)
    for _ in range(60):
        f = _rand_poly(rng)
        rs = isolate_roots(f)
        assert rs.status == "CERTIFIED"
        assert rs.total_multiplicity == f.degree
        _check_against_numpy(f, rs)


def test_disks_pairwise_disjoint_seeded():
    rng = random.Random(43)
    for _ in range(40):
        f = _rand_poly(rng)
        rs = isolate_roots(f)
        ds = rs.disks
        for i in range(len(ds)):
            for j in range(i + 1, len(ds)):
                ci = complex(float(ds[i].center_re), float(ds[i].center_im))
                cj = complex(float(ds[j].center_re), float(ds[j].center_im))
                assert abs(ci - cj) > float(ds[i].radius) + float(ds[j].radius)


def test_real_flags_count():
    cases = {
        (1, 0, -2): 2,  # x^2 - 2
        (1, 0, 1): 0,  # x^2 + 1
        (1, 0, 0, -2): 1,  # x^3 - 2
        (1, -1, -1, 1): 3,  # (x-1)^2 (x+1): 2 distinct, 3 with multiplicity
    }
    for cs, want in cases.items():
        rs = isolate_roots(IntPolynomial(cs))
        got = sum(d.multiplicity for d in rs.disks if d.is_real)
        assert got == want, cs


def test_repeated_roots_multiplicity():
    # (x^2 - 2)^2: two real double roots
    f = IntPolynomial((1, 0, -2)) * IntPolynomial((1, 0, -2))
    rs = isolate_roots(f)
    assert sorted(d.multiplicity for d in rs.disks) == [2, 2]
    assert all(d.is_real for d in rs.disks)


def test_zero_root_exact():
    # x^3 - x = x (x-1) (x+1); the zero root disk must contain 0 exactly
    f = IntPolynomial((1, 0, -1, 0))
    rs = isolate_roots(f)
    zero_disks = [d for d in rs.disks if d.contains_zero()]
    assert len(zero_disks) == 1
    lo, hi = zero_disks[0].modulus_interval()
    assert lo == 0


def test_rational_root_enclosed():
    # 3x - 7 has the single root 7/3
    rs = isolate_roots(IntPolynomial((3, -7)))
    d = rs.disks[0]
    c = mpf_to_fraction(d.center_re)
    r = mpf_to_fraction(d.radius)
    assert abs(c - Fraction(7, 3)) <= r
    assert d.is_real and d.multiplicity == 1


def test_cyclotomic_conjugate_disks():
    # x^4 + 1: four simple roots on the unit circle, none real
    rs = isolate_roots(IntPolynomial((1, 0, 0, 0, 1)))
    assert len(rs.disks) == 4
    assert not any(d.is_real for d in rs.disks)
    for d in rs.disks:
        lo, hi = d.modulus_interval()
        assert lo <= 1 <= hi


def test_refine_shrinks_radii():
    f = IntPolynomial((1, -3, 1, 5, -2))
    rs = isolate_roots(f)
    target = Fraction(1, 1 << 60)
    fine = refine(rs, target)
    assert fine.status == "CERTIFIED"
    assert all(mpf_to_fraction(d.radius) <= target for d in fine.disks)
    # refinement must keep disks nested in the coarse ones (same roots)
    for d in fine.disks:
        c = complex(float(d.center_re), float(d.center_im))
        assert any(
            abs(c - complex(float(e.center_re), float(e.center_im)))
            <= float(e.radius) + 1e-15
            for e in rs.disks
        )


def test_fujiwara_dominates_all_roots_seeded():
    rng = random.Random(44)
    for _ in range(60):
        f = _rand_poly(rng)
        fb = fujiwara_bound(f)
        rr = np.roots([float(c) for c in f.coeffs])
        assert all(abs(z) <= fb * (1 + 1e-9) for z in rr), f.coeffs


def test_modulus_separation_bound_positive():
    # distinct moduli 1 and 2: bound must be positive and below the gap
    f = IntPolynomial((1, -3, 2))  # roots 1, 2
    sep = modulus_separation_bound(f)
    assert 0 < sep <= 1


def test_zero_polynomial_rejected():
    with pytest.raises(ZeroPolynomial):
        isolate_roots(IntPolynomial((0,)))


def test_degree_zero_rejected():
    with pytest.raises(DegreeTooSmall):
        isolate_roots(IntPolynomial((5,)))


def test_f64_rung_agrees_with_mp_seeded():
    # precision 53 with small coefficients uses the hardware rung; the
    # certified disks must match a 212-bit run root for root
    rng = random.Random(45)
    for _ in range(150):
        f = _rand_poly(rng, max_deg=6, height=10**6)
        fast = _isolate(f, precision_bits=53)
        slow = _isolate(f, precision_bits=212)
        assert fast.total_multiplicity == slow.total_multiplicity == f.degree
        used = [False] * len(slow.disks)
        for d in fast.disks:
            c = complex(float(d.center_re), float(d.center_im))
            r = float(d.radius)
            hit = None
            for k, e in enumerate(slow.disks):
                if used[k]:
                    continue
                ce = complex(float(e.center_re), float(e.center_im))
                if abs(c - ce) <= r + float(e.radius):
                    hit = k
                    break
            assert hit is not None, (f.coeffs, c, r)
            used[hit] = True
            assert d.multiplicity == slow.disks[hit].multiplicity
            assert d.is_real == slow.disks[hit].is_real


def test_huge_coefficients_escalate_cleanly():
    # far beyond the 50-bit hardware guard: must still certify
    f = IntPolynomial((10**40, 0, -(10**41), 1))
    rs = isolate_roots(f, precision_bits=53)
    assert rs.status == "CERTIFIED"
    assert rs.total_multiplicity == 3
