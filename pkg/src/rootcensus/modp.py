"""Dense polynomial arithmetic over F_p and distinct-degree factor patterns.

Used for Galois-group certification: for a prime p dividing neither the
leading coefficient nor the discriminant, the multiset of irreducible
factor degrees of f mod p equals the cycle type of the Frobenius element
acting on the roots. Only the degree pattern is needed, so factorization
stops at the distinct-degree stage.

Polynomials in this module are ascending coefficient lists of ints in
[0, p); the public entry point takes an IntPolynomial.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

from .intpoly import IntPolynomial

__all__ = ["factor_degree_pattern", "primes_up_to"]


def primes_up_to(bound: int) -> List[int]:
    """All primes <= bound (simple sieve)."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(bound**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = b"\x00" * len(range(i * i, bound + 1, i))
    return [i for i in range(2, bound + 1) if sieve[i]]


def _trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _mulmod(a: List[int], b: List[int], p: int) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _trim(out)


def _rem(a: List[int], b: List[int], p: int) -> List[int]:
    """a mod b over F_p; b nonzero."""
    a = a[:]
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    while len(a) - 1 >= db and a:
        if a[-1] == 0:
            a.pop()
            continue
        k = len(a) - 1 - db
        t = (a[-1] * inv) % p
        for i in range(db + 1):
            a[k + i] = (a[k + i] - t * b[i]) % p
        a.pop()
        _trim(a)
    return _trim(a)


def _gcd(a: List[int], b: List[int], p: int) -> List[int]:
    a, b = _trim(a[:]), _trim(b[:])
    while b:
        a, b = b, _rem(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _quo(a: List[int], b: List[int], p: int) -> List[int]:
    """Exact quotient a / b over F_p (remainder known zero)."""
    a = a[:]
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    q = [0] * (len(a) - db)
    while len(a) - 1 >= db and a:
        if a[-1] == 0:
            a.pop()
            continue
        k = len(a) - 1 - db
        t = (a[-1] * inv) % p
        q[k] = t
        for i in range(db + 1):
            a[k + i] = (a[k + i] - t * b[i]) % p
        a.pop()
        _trim(a)
    return _trim(q)


def _powmod(base: List[int], e: int, f: List[int], p: int) -> List[int]:
    """base^e mod (f, p), square and multiply."""
    result = [1]
    base = _rem(base, f, p)
    while e:
        if e & 1:
            result = _rem(_mulmod(result, base, p), f, p)
        base = _rem(_mulmod(base, base, p), f, p)
        e >>= 1
    return result


def factor_degree_pattern(f: IntPolynomial, p: int) -> Optional[Tuple[int, ...]]:
    """Sorted degrees of the irreducible factors of f mod p, or None when
    the prime is unusable (p divides the leading coefficient, or f mod p
    is not squarefree)."""
    n = f.degree
    if n < 1 or f.coeffs[0] % p == 0:
        return None
    a = [c % p for c in reversed(f.coeffs)]
    a = _trim(a)
    # derivative
    da = _trim([(i * a[i]) % p for i in range(1, len(a))])
    if not da:
        return None  # f' = 0 mod p: certainly not squarefree for deg >= 1
    if len(_gcd(a, da, p)) - 1 != 0:
        return None  # not squarefree mod p
    # monic normalize
    inv = pow(a[-1], p - 2, p)
    a = [(c * inv) % p for c in a]
    pattern: List[int] = []
    h = [0, 1]  # x
    d = 0
    rem_deg = len(a) - 1
    while rem_deg > 0:
        d += 1
        if 2 * d > rem_deg:
            pattern.append(rem_deg)
            break
        h = _powmod(h, p, a, p)
        diff = h[:]
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        g = _gcd(a, _trim(diff), p)
        dg = len(g) - 1
        if dg > 0:
            pattern.extend([d] * (dg // d))
            a = _quo(a, g, p)
            h = _rem(h, a, p)
            rem_deg = len(a) - 1
    return tuple(sorted(pattern))
