"""Certified complex root isolation for integer polynomials.

The contract: isolate_roots(f) returns pairwise disjoint closed disks,
one per distinct root, each carrying the multiplicity of its root and a
certified is_real flag, such that every root of f lies in exactly one
disk. All certification steps are rigorous:

- candidate centers come from Aberth-Ehrlich simultaneous iteration,
  seeded by hardware companion-matrix eigenvalues when the coefficients
  fit a double (falling back to a Fujiwara-radius circle with
  deterministic coefficient-seeded angular jitter), run first in
  hardware complex arithmetic and then at 128, 256, ... bits;
- each disk radius is deg(g) * |g(z)| / |g'(z)| for the squarefree
  factor g, evaluated with a rigorous floating-point error bound, which
  by the classical argument (g'/g = sum 1/(z - root)) guarantees at
  least one root of g in the disk; pairwise disjointness then pins
  exactly one root per disk;
- realness is decided by comparing the number of disks straddling the
  real axis with the exact Sturm count of the factor, refining until
  they agree; straddling disks are then centered on the axis and the
  rest are matched into exact conjugate pairs.

Repeated roots are handled by Yun decomposition up front (Aberth only
ever sees squarefree factors), and roots at zero get an exact disk of
radius zero.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
from mpmath import mp, mpc, mpf, workprec

from .errors import (
    DegreeTooSmall,
    PrecisionCapExceeded,
    ZeroPolynomial,
)
from .intpoly import (
    IntPolynomial,
    discriminant,
    pair_product_full,
    squarefree_decomposition,
    squarefree_part,
    sturm_real_root_count,
)

__all__ = [
    "RootDisk",
    "CertifiedRootSet",
    "fujiwara_bound",
    "isolate_roots",
    "refine",
    "modulus_separation_bound",
    "mpf_to_fraction",
]

_DEFAULT_PRECISION = 128
_DEFAULT_CAP = 4096


def mpf_to_fraction(x) -> Fraction:
    """Exact Fraction value of an mpf (mpfs are dyadic rationals)."""
    if x == 0:
        return Fraction(0)
    sign, man, exp, _ = x._mpf_
    v = Fraction(man, 1)
    if exp >= 0:
        v = v * (1 << exp)
    else:
        v = v / (1 << -exp)
    return -v if sign else v


@dataclass(frozen=True)
class RootDisk:
    """Closed disk certified to contain exactly one distinct root of the
    polynomial, with that root's multiplicity. Center coordinates and
    radius are mpf values at the set's working precision."""

    center_re: object
    center_im: object
    radius: object
    multiplicity: int
    is_real: bool

    def modulus_interval(self) -> Tuple[Fraction, Fraction]:
        """Exact rational bounds on |root|: [max(0,|c|-r), |c|+r]."""
        cre = mpf_to_fraction(self.center_re)
        cim = mpf_to_fraction(self.center_im)
        r = mpf_to_fraction(self.radius)
        m2 = cre * cre + cim * cim
        # |c| in [lo, hi] with lo = isqrt-floor, hi = lo + ulp-ish bound
        lo = _fraction_sqrt_lower(m2)
        hi = _fraction_sqrt_upper(m2)
        low = lo - r
        if low < 0:
            low = Fraction(0)
        return (low, hi + r)

    def contains_zero(self) -> bool:
        cre = mpf_to_fraction(self.center_re)
        cim = mpf_to_fraction(self.center_im)
        r = mpf_to_fraction(self.radius)
        return cre * cre + cim * cim <= r * r


def _fraction_sqrt_lower(q: Fraction, bits: int = 128) -> Fraction:
    """Rational lower bound on sqrt(q) for q >= 0."""
    if q < 0:
        raise ValueError("negative")
    if q == 0:
        return Fraction(0)
    scale = 1 << bits
    n = q.numerator * q.denominator * scale * scale
    return Fraction(math.isqrt(n), q.denominator * scale)


def _fraction_sqrt_upper(q: Fraction, bits: int = 128) -> Fraction:
    if q < 0:
        raise ValueError("negative")
    if q == 0:
        return Fraction(0)
    scale = 1 << bits
    n = q.numerator * q.denominator * scale * scale
    return Fraction(math.isqrt(n) + 1, q.denominator * scale)


@dataclass(frozen=True)
class CertifiedRootSet:
    """Result of isolate_roots: disjoint certified disks covering all
    roots with multiplicity; status is "CERTIFIED" (the only value a
    returned set carries; a PrecisionCapExceeded error transports a
    partial set with status "REFINEMENT_CAP_REACHED")."""

    polynomial: IntPolynomial
    disks: Tuple[RootDisk, ...]
    precision_bits: int
    status: str

    @property
    def total_multiplicity(self) -> int:
        return sum(d.multiplicity for d in self.disks)

    def max_radius(self):
        return max((d.radius for d in self.disks), default=mpf(0))


# -- Fujiwara bound ------------------------------------------------------


def fujiwara_bound(f: IntPolynomial) -> float:
    """Upper bound on all root moduli:
    2 * max(|a1/a0|, |a2/a0|^(1/2), ..., |a_{n-1}/a0|^(1/(n-1)),
            |a_n/(2 a0)|^(1/n)).
    Rounded upward; the returned float is verified exactly to dominate
    every term."""
    n = f.degree
    if n < 1:
        raise DegreeTooSmall("fujiwara bound needs degree >= 1")
    a0 = abs(f.coeffs[0])
    best = 0.0
    terms: List[Tuple[Fraction, int]] = []
    for k in range(1, n + 1):
        ak = abs(f.coeffs[k])
        if ak == 0:
            continue
        ratio = Fraction(ak, 2 * a0) if k == n else Fraction(ak, a0)
        terms.append((ratio, k))
        u = _float_upper_root(ratio, k)
        if u > best:
            best = u
    bound = 2.0 * best
    # exact final verification: (bound/2)^k >= ratio for every term
    while True:
        half = Fraction(bound) / 2 if bound > 0 else Fraction(0)
        if all(half**k >= ratio for ratio, k in terms):
            return bound
        bound = bound * (1.0 + 1e-12) + 5e-324


def _float_upper_root(ratio: Fraction, k: int) -> float:
    """Float upper bound on ratio^(1/k)."""
    x = _fraction_to_float_upper(ratio)
    if x == 0.0:
        return 0.0
    u = x ** (1.0 / k)
    while Fraction(u) ** k < ratio:
        u = math.nextafter(u * (1.0 + 1e-15), math.inf)
    return u


def _fraction_to_float_upper(q: Fraction) -> float:
    try:
        x = float(q)
    except OverflowError:
        return math.inf
    if x == math.inf:
        return x
    while Fraction(x) < q:
        x = math.nextafter(x, math.inf)
    return x


# -- Aberth-Ehrlich ladder -----------------------------------------------


def _initial_guesses(g: IntPolynomial) -> List[complex]:
    """Equally spaced points on the Fujiwara circle with deterministic
    coefficient-seeded angular jitter."""
    d = g.degree
    rad = fujiwara_bound(g) * (1.0 + 1.0 / (4 * d + 4))
    if rad == 0.0 or not math.isfinite(rad):
        rad = 1.0 if rad == 0.0 else 1e150
    rng = random.Random("rootcensus:" + ",".join(str(c) for c in g.coeffs))
    base = rng.uniform(0.0, 2.0 * math.pi / d)
    out = []
    for j in range(d):
        ang = base + 2.0 * math.pi * j / d + rng.uniform(-0.25, 0.25) * (2.0 * math.pi / d)
        out.append(complex(rad * math.cos(ang), rad * math.sin(ang)))
    return out


def _companion_seeds(coeffs: Sequence[int]) -> Optional[List[complex]]:
    """Hardware eigenvalue seeds for Aberth, or None when the coefficients
    do not fit a double (the Fujiwara-circle ladder takes over)."""
    try:
        cf = [float(c) for c in coeffs]
    except OverflowError:
        return None
    if not all(math.isfinite(c) for c in cf):
        return None
    try:
        rr = np.roots(cf)
    except Exception:
        return None
    out = [complex(w) for w in rr]
    if len(out) != len(coeffs) - 1:
        return None
    if not all(math.isfinite(w.real) and math.isfinite(w.imag) for w in out):
        return None
    return out


def _aberth_float(coeffs: Sequence[int], z: List[complex], sweeps: int) -> List[complex]:
    """Aberth sweeps in hardware complex arithmetic; returns best-effort
    positions (may be handed to the mp ladder unconverged)."""
    d = len(coeffs) - 1
    try:
        cf = [float(c) for c in coeffs]
    except OverflowError:
        return z
    df = [cf[i] * (d - i) for i in range(d)]
    tol = 1e-14
    for _ in range(sweeps):
        maxmove = 0.0
        for i in range(d):
            zi = z[i]
            p = cf[0]
            for a in cf[1:]:
                p = p * zi + a
            if p == 0:
                continue
            q = df[0]
            for a in df[1:]:
                q = q * zi + a
            if q == 0:
                z[i] = zi * (1.0 + 1e-7) + 1e-7
                continue
            w = p / q
            s = 0.0
            bad = False
            for j in range(d):
                if j != i:
                    dz = zi - z[j]
                    if dz == 0:
                        bad = True
                        break
                    s += 1.0 / dz
            if bad:
                z[i] = zi * (1.0 + 1e-7) + 1e-7
                continue
            den = 1.0 - w * s
            if den == 0:
                continue
            corr = w / den
            if not (math.isfinite(corr.real) and math.isfinite(corr.imag)):
                continue
            z[i] = zi - corr
            scale = abs(zi) + 1.0
            move = abs(corr) / scale
            if move > maxmove:
                maxmove = move
        if maxmove < tol:
            break
    return z


def _aberth_mp(coeffs: Sequence[int], z: List[mpc], sweeps: int, prec: int) -> List[mpc]:
    d = len(coeffs) - 1
    with workprec(prec):
        cf = [mpf(c) for c in coeffs]
        df = [cf[i] * (d - i) for i in range(d)]
        tol = mpf(2) ** (10 - prec)
        for _ in range(sweeps):
            maxmove = mpf(0)
            for i in range(d):
                zi = z[i]
                p = cf[0]
                for a in cf[1:]:
                    p = p * zi + a
                if p == 0:
                    continue
                q = df[0]
                for a in df[1:]:
                    q = q * zi + a
                if q == 0:
                    continue
                w = p / q
                s = mpc(0)
                bad = False
                for j in range(d):
                    if j != i:
                        dz = zi - z[j]
                        if dz == 0:
                            bad = True
                            break
                        s += 1 / dz
                if bad:
                    continue
                den = 1 - w * s
                if den == 0:
                    continue
                corr = w / den
                z[i] = zi - corr
                move = abs(corr) / (abs(zi) + 1)
                if move > maxmove:
                    maxmove = move
            if maxmove < tol:
                break
    return z


def _eval_with_error(coeffs: Sequence[int], z: mpc, prec: int):
    """Horner value of the polynomial at z plus a rigorous bound on the
    rounding error, both at precision prec.

    The classical running bound: |computed - exact| <=
    gamma * sum |a_i| |z|^i with gamma = c*n*u; the constant here (8n)
    generously covers complex multiplication constants and the final
    absolute-value rounding."""
    n = len(coeffs) - 1
    with workprec(prec):
        acc = mpc(coeffs[0])
        az = abs(z)
        amax = mpf(abs(coeffs[0]))
        for c in coeffs[1:]:
            acc = acc * z + c
            amax = amax * az + abs(c)
        err = amax * (8 * (n + 1)) * mpf(2) ** (-prec)
        return acc, err


def _certify_radius(coeffs: Sequence[int], dcoeffs: Sequence[int], z: mpc, d: int, prec: int):
    """Certified radius d*|g(z)|/|g'(z)| (upper bound), or None when the
    derivative bound cannot exclude zero at this precision."""
    with workprec(prec):
        v, e = _eval_with_error(coeffs, z, prec)
        vd, ed = _eval_with_error(dcoeffs, z, prec)
        num = abs(v) + e
        den = abs(vd) - ed
        if den <= 0:
            return None
        r = (num / den) * d
        return r * (1 + mpf(2) ** (-40)) + mpf(2) ** (-prec * 4)


# -- hardware-float certification rung ------------------------------------
#
# A full certification attempt in double precision, mirroring _attempt /
# _certify_radius / _realness with doubled error constants. Sound in the
# fail-safe direction: any non-finite value, non-positive derivative
# bound, disjointness failure, or realness mismatch returns None and the
# ladder escalates to the mp rungs. Engaged only when the caller asks for
# precision_bits <= 53 and every coefficient fits a double exactly.

_F64_PREC = 53
_F64_COEFF_BITS = 50


def _eval_with_error_f64(coeffs: Sequence[float], z: complex):
    n = len(coeffs) - 1
    acc = complex(coeffs[0])
    az = abs(z)
    amax = abs(coeffs[0])
    for c in coeffs[1:]:
        acc = acc * z + c
        amax = amax * az + abs(c)
    # doubled constant relative to the mp twin absorbs the error of
    # accumulating amax itself in double precision
    err = amax * (16.0 * (n + 1)) * 2.0 ** -53
    return acc, err


def _certify_radius_f64(coeffs, dcoeffs, z: complex, d: int):
    v, e = _eval_with_error_f64(coeffs, z)
    vd, ed = _eval_with_error_f64(dcoeffs, z)
    num = abs(v) + e
    den = abs(vd) - ed
    if not (math.isfinite(num) and math.isfinite(den)) or den <= 0.0:
        return None
    r = (num / den) * d * (1.0 + 2.0 ** -30)
    if not math.isfinite(r) or r < 0.0:
        return None
    return r


def _disjoint_f64(centers: List[complex], radii: List[float]) -> bool:
    m = len(centers)
    for i in range(m):
        for j in range(i + 1, m):
            if abs(centers[i] - centers[j]) * (1.0 - 2.0 ** -30) <= radii[i] + radii[j]:
                return False
    return True


def _realness_f64(centers, radii, realcount):
    # a disk holding a real root must straddle the axis: |Im c| <= |c - a| <= r
    strad = [i for i in range(len(centers)) if abs(centers[i].imag) <= radii[i]]
    if len(strad) != realcount:
        return None
    centers = list(centers)
    radii = list(radii)
    flags = [False] * len(centers)
    for i in strad:
        # projecting the center onto the axis moves it closer to the root
        centers[i] = complex(centers[i].real, 0.0)
        flags[i] = True
    upper = [i for i in range(len(centers)) if not flags[i] and centers[i].imag > 0]
    lower = [i for i in range(len(centers)) if not flags[i] and centers[i].imag < 0]
    if len(upper) != len(lower):
        return None
    used = set()
    for i in upper:
        ci = centers[i].conjugate()
        cand = [
            j
            for j in lower
            if j not in used
            and abs(ci - centers[j]) <= (radii[i] + radii[j]) * (1.0 + 2.0 ** -30)
        ]
        if len(cand) != 1:
            return None
        j = cand[0]
        used.add(j)
        mid = (centers[i] + centers[j].conjugate()) / 2
        rad = radii[i] if radii[i] > radii[j] else radii[j]
        rad = (rad + abs(centers[i] - centers[j].conjugate()) / 2) * (1.0 + 2.0 ** -28)
        if not math.isfinite(rad):
            return None
        centers[i] = mid
        centers[j] = mid.conjugate()
        radii[i] = rad
        radii[j] = rad
    if len(used) != len(lower):
        return None
    return centers, radii, flags


def _isolate_factor_f64(g: IntPolynomial):
    d = g.degree
    if d == 1:
        c = Fraction(-g.coeffs[1], g.coeffs[0])
        z = float(c)
        err = (abs(z) + 1.0) * 2.0 ** -50
        return [complex(z)], [err]
    cf = [float(c) for c in g.coeffs]
    z0 = _companion_seeds(g.coeffs)
    if z0 is None:
        z0 = _initial_guesses(g)
        z0 = _aberth_float(cf, z0, sweeps=80)
    else:
        z0 = _aberth_float(cf, z0, sweeps=12)
    dc = [float(c) for c in g.derivative().coeffs]
    radii = []
    for zi in z0:
        r = _certify_radius_f64(cf, dc, zi, d)
        if r is None:
            return None
        radii.append(r)
    return z0, radii


def _attempt_f64(parts, v: int) -> Optional[List[RootDisk]]:
    all_centers: List[complex] = []
    all_radii: List[float] = []
    all_mult: List[int] = []
    all_real: List[bool] = []

    for fac, mult, realcount in parts:
        if any(abs(c).bit_length() > _F64_COEFF_BITS for c in fac.coeffs):
            return None
        got = _isolate_factor_f64(fac)
        if got is None:
            return None
        centers, radii = got
        if not _disjoint_f64(centers, radii):
            return None
        flags = _realness_f64(centers, radii, realcount)
        if flags is None:
            return None
        centers, radii, is_real = flags
        all_centers.extend(centers)
        all_radii.extend(radii)
        all_mult.extend([mult] * len(centers))
        all_real.extend(is_real)

    if v > 0:
        all_centers.append(complex(0.0))
        all_radii.append(0.0)
        all_mult.append(v)
        all_real.append(True)

    if not _disjoint_f64(all_centers, all_radii):
        return None
    disks = [
        RootDisk(mpf(c.real), mpf(c.imag), mpf(r), m, br)
        for c, r, m, br in zip(all_centers, all_radii, all_mult, all_real)
    ]
    return disks


def _isolate_factor(g: IntPolynomial, prec: int, warm: Optional[List[mpc]] = None):
    """Aberth positions and certified radii for one squarefree factor at
    one precision; returns (centers, radii) or None if certification
    failed at this precision."""
    d = g.degree
    if d == 1:
        with workprec(prec):
            c = Fraction(-g.coeffs[1], g.coeffs[0])
            z = mpf(c.numerator) / mpf(c.denominator)
            err = abs(z) * mpf(2) ** (2 - prec) + mpf(2) ** (2 - prec)
            return [mpc(z)], [err]
    if warm is None:
        z0 = _companion_seeds(g.coeffs)
        if z0 is None:
            z0 = _initial_guesses(g)
            z0 = _aberth_float(list(g.coeffs), z0, sweeps=80)
        else:
            z0 = _aberth_float(list(g.coeffs), z0, sweeps=12)
        with workprec(prec):
            z = [mpc(w) for w in z0]
    else:
        with workprec(prec):
            z = [mpc(w) for w in warm]
    z = _aberth_mp(list(g.coeffs), z, sweeps=8 + prec // 32, prec=prec)
    dc = list(g.derivative().coeffs)
    radii = []
    for zi in z:
        r = _certify_radius(list(g.coeffs), dc, zi, d, prec)
        if r is None:
            return None
        radii.append(r)
    return z, radii


def _disjoint(centers: List[mpc], radii: List[mpf], prec: int) -> bool:
    with workprec(prec):
        m = len(centers)
        for i in range(m):
            for j in range(i + 1, m):
                if abs(centers[i] - centers[j]) * (1 - mpf(2) ** (-30)) <= radii[i] + radii[j]:
                    return False
    return True


def isolate_roots(
    f: IntPolynomial,
    precision_bits: int = _DEFAULT_PRECISION,
    precision_cap: int = _DEFAULT_CAP,
    radius_target: Optional[Fraction] = None,
) -> CertifiedRootSet:
    """Certified disjoint root disks for f (degree >= 1).

    Raises PrecisionCapExceeded (carrying a partial, uncertified set when
    available) if certification does not complete within precision_cap
    bits.
    """
    if f.is_zero:
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    if f.degree < 1:
        raise DegreeTooSmall("root isolation needs degree >= 1")
    cs = list(f.coeffs)
    v = 0
    while cs and cs[-1] == 0:
        cs.pop()
        v += 1
    g = IntPolynomial(tuple(cs))
    maxbits = max(abs(c).bit_length() for c in f.coeffs)
    # callers may start below the default; certification escalates on failure
    prec = max(precision_bits, 53, maxbits + 16)
    cap = max(precision_cap, prec)

    parts: List[Tuple[IntPolynomial, int, int]] = []  # factor, mult, sturm real count
    if g.degree >= 1:
        for fac, mult in squarefree_decomposition(g).factors:
            parts.append((fac, mult, sturm_real_root_count(fac)))

    def _sorted(disks):
        return tuple(
            sorted(
                disks,
                key=lambda d: (mpf_to_fraction(d.center_re), mpf_to_fraction(d.center_im)),
            )
        )

    while True:
        if prec <= _F64_PREC:
            disks = _attempt_f64(parts, v)
        else:
            disks = _attempt(parts, v, prec)
        if disks is not None:
            tight = radius_target is None or all(
                mpf_to_fraction(d.radius) <= radius_target for d in disks
            )
            if tight:
                return CertifiedRootSet(f, _sorted(disks), prec, "CERTIFIED")
        if prec >= cap:
            partial = None
            if disks is not None:
                partial = CertifiedRootSet(
                    f, _sorted(disks), prec, "REFINEMENT_CAP_REACHED"
                )
            raise PrecisionCapExceeded(
                "certification incomplete at %d bits (cap %d) for %s"
                % (prec, cap, f.coeffs),
                partial=partial,
            )
        prec = min(prec * 2, cap)


def _attempt(parts, v: int, prec: int) -> Optional[List[RootDisk]]:
    """One full certification attempt at a fixed precision."""
    all_centers: List[mpc] = []
    all_radii: List[mpf] = []
    all_mult: List[int] = []
    all_real: List[bool] = []

    for fac, mult, realcount in parts:
        got = _isolate_factor(fac, prec)
        if got is None:
            return None
        centers, radii = got
        if not _disjoint(centers, radii, prec):
            return None
        flags = _realness(fac, centers, radii, realcount, prec)
        if flags is None:
            return None
        centers, radii, is_real = flags
        all_centers.extend(centers)
        all_radii.extend(radii)
        all_mult.extend([mult] * len(centers))
        all_real.extend(is_real)

    if v > 0:
        all_centers.append(mpc(0))
        all_radii.append(mpf(0))
        all_mult.append(v)
        all_real.append(True)

    if not _disjoint(all_centers, all_radii, prec):
        return None
    disks = [
        RootDisk(c.real, c.imag, r, m, br)
        for c, r, m, br in zip(all_centers, all_radii, all_mult, all_real)
    ]
    return disks


def _realness(fac, centers, radii, realcount, prec):
    """Certify which disks hold real roots; symmetrize centers.

    Returns (centers, radii, flags) or None to request more precision.
    """
    with workprec(prec):
        strad = [i for i in range(len(centers)) if abs(centers[i].imag) <= radii[i]]
        if len(strad) != realcount:
            return None
        centers = list(centers)
        radii = list(radii)
        flags = [False] * len(centers)
        for i in strad:
            centers[i] = mpc(centers[i].real, 0)
            flags[i] = True
        # conjugate pairing of the off-axis disks
        upper = [i for i in range(len(centers)) if not flags[i] and centers[i].imag > 0]
        lower = [i for i in range(len(centers)) if not flags[i] and centers[i].imag < 0]
        if len(upper) != len(lower):
            return None
        used = set()
        for i in upper:
            ci = centers[i].conjugate()
            cand = [
                j
                for j in lower
                if j not in used
                and abs(ci - centers[j]) <= (radii[i] + radii[j]) * (1 + mpf(2) ** (-30))
            ]
            if len(cand) != 1:
                return None
            j = cand[0]
            used.add(j)
            mid = (centers[i] + centers[j].conjugate()) / 2
            rad = radii[i] if radii[i] > radii[j] else radii[j]
            rad = rad + abs(centers[i] - centers[j].conjugate()) / 2
            rad = rad * (1 + mpf(2) ** (-40))
            centers[i] = mid
            centers[j] = mid.conjugate()
            radii[i] = rad
            radii[j] = rad
        if len(used) != len(lower):
            return None
        return centers, radii, flags


def refine(rootset: CertifiedRootSet, radius_target: Fraction) -> CertifiedRootSet:
    """New certified set for the same polynomial with every positive disk
    radius at most radius_target."""
    return isolate_roots(
        rootset.polynomial,
        precision_bits=rootset.precision_bits,
        precision_cap=max(_DEFAULT_CAP, rootset.precision_bits * 8),
        radius_target=Fraction(radius_target),
    )


# -- exact separation of squared moduli ----------------------------------


def modulus_separation_bound(f: IntPolynomial) -> Fraction:
    """Positive rational B such that any two DISTINCT squared root moduli
    of f differ by more than B.

    The squared moduli |alpha_i|^2 = alpha_i * conj(alpha_i) are roots of
    T(x) = Res_y(f(y), y^n f(x/y)) (conjugates of roots are roots, so
    every product of two roots, ordered pairs included, is a root of T).
    Mahler's root-separation bound applied to the squarefree part of T
    gives the answer:  sep(P) > sqrt(3 |disc P|) * d^{-(d+2)/2} *
    ||P||_2^{-(d-1)} for squarefree P of degree d >= 2.
    """
    n = f.degree
    if n < 1:
        raise DegreeTooSmall("separation bound needs degree >= 1")
    if n == 1:
        return Fraction(1)  # single root: nothing to separate
    v, g = _deflate(f)
    m = g.degree
    if m == 0:
        return Fraction(1)  # only the root 0
    t_full = pair_product_full(g)
    if v > 0:
        t_full = t_full.shift_degree(1)  # include the squared modulus 0
    p = squarefree_part(t_full)
    d = p.degree
    if d < 2:
        return Fraction(1)
    disc = abs(discriminant(p))
    if disc == 0:
        raise AssertionError("squarefree part with zero discriminant")
    l22 = sum(c * c for c in p.coeffs)
    # B = sqrt(3*disc) / (d^((d+2)/2) * l2^(d-1)); compute a rational lower
    # bound via integer square roots: B^2 = 3*disc / (d^(d+2) * l22^(d-1))
    num = 3 * disc
    den = d ** (d + 2) * l22 ** (d - 1)
    shift = 1 << 200
    val = math.isqrt((num * shift * shift) // den)
    b = Fraction(val, shift)
    if b <= 0:
        # exact value is positive; push below it with a finer grid
        shift = 1 << (den.bit_length() + 8)
        val = math.isqrt((num * shift * shift) // den)
        b = Fraction(val, shift)
        if b <= 0:
            b = Fraction(1, den + 1)  # crude but positive and valid
    return b


def _deflate(f: IntPolynomial) -> Tuple[int, IntPolynomial]:
    cs = list(f.coeffs)
    v = 0
    while cs and cs[-1] == 0:
        cs.pop()
        v += 1
    return v, IntPolynomial(tuple(cs))
