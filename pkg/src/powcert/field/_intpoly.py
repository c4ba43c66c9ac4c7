"""Integer polynomial kernels.

Polynomials here are plain lists of Python ints in ascending degree order,
with no trailing zeros (the empty list is the zero polynomial).  These are
the hot loops behind :class:`powcert.field.Polynomial`; rational
polynomials are lifted to integer ones by clearing denominators.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import List, Optional, Tuple

IntPoly = List[int]

# Below this length schoolbook multiplication beats packing.
_KRONECKER_CUTOFF = 24


def strip(a: IntPoly) -> IntPoly:
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return a[:n] if n != len(a) else a


def content(a: IntPoly) -> int:
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def primitive(a: IntPoly) -> IntPoly:
    """Divide out the content and make the leading coefficient positive."""
    if not a:
        return a
    g = content(a)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return list(a)
    return [c // g for c in a]


def _mul_schoolbook(a: IntPoly, b: IntPoly) -> IntPoly:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _pack(a: IntPoly, k: int) -> int:
    v = 0
    for c in reversed(a):
        v = (v << k) + c
    return v


def _mul_kronecker(a: IntPoly, b: IntPoly) -> IntPoly:
    # Evaluate at 2**k, multiply the big ints, read back signed base-2**k digits.
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    k = bound.bit_length() + 1
    prod = _pack(a, k) * _pack(b, k)
    mask = (1 << k) - 1
    half = 1 << (k - 1)
    full = 1 << k
    out = []
    for _ in range(len(a) + len(b) - 1):
        r = prod & mask
        if r >= half:
            r -= full
        out.append(r)
        prod = (prod - r) >> k
    return out


def mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return []
    if min(len(a), len(b)) < _KRONECKER_CUTOFF:
        return strip(_mul_schoolbook(a, b))
    return strip(_mul_kronecker(a, b))


def pseudo_divmod(a: IntPoly, b: IntPoly) -> Tuple[IntPoly, IntPoly, int]:
    """Return ``(q, r, k)`` with ``lc(b)**k * a == q*b + r`` and ``deg r < deg b``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    m = len(b) - 1
    n = len(a) - 1
    if n < m:
        return [], list(a), 0
    lcb = b[-1]
    r = list(a)
    q = [0] * (n - m + 1)
    if lcb == 1 or lcb == -1:
        for i in range(n - m, -1, -1):
            c = r[i + m] * lcb
            if c:
                q[i] = c
                for j in range(m + 1):
                    r[i + j] -= c * b[j]
        return strip(q), strip(r[:m]), 0
    k = n - m + 1
    for i in range(n - m, -1, -1):
        c = r[i + m]
        q = [x * lcb for x in q]
        q[i] += c
        r = [x * lcb for x in r]
        if c:
            for j in range(m + 1):
                r[i + j] -= c * b[j]
    return strip(q), strip(r[:m]), k


def exact_quotient(a: IntPoly, b: IntPoly) -> Optional[IntPoly]:
    """``a / b`` if ``b`` divides ``a`` in Z[x], else ``None``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    m = len(b) - 1
    n = len(a) - 1
    if n < m:
        return None
    lcb = b[-1]
    r = list(a)
    q = [0] * (n - m + 1)
    for i in range(n - m, -1, -1):
        c, rem = divmod(r[i + m], lcb)
        if rem:
            return None
        if c:
            q[i] = c
            for j in range(m + 1):
                r[i + j] -= c * b[j]
    if any(r[:m]):
        return None
    return q


# ---------------------------------------------------------------------------
# modular gcd
# ---------------------------------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    # Deterministic Miller-Rabin for n < 3.3e24.
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while not d & 1:
        d >>= 1
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def _prime(i: int) -> int:
    """The i-th prime counting down from 2**61 - 1."""
    if i == 0:
        return (1 << 61) - 1
    p = _prime(i - 1) - 2
    while not _is_prime(p):
        p -= 2
    return p


def _reduce(a: IntPoly, p: int) -> IntPoly:
    return strip([c % p for c in a])


def _rem_mod(a: IntPoly, b: IntPoly, p: int) -> IntPoly:
    m = len(b) - 1
    inv = pow(b[-1], -1, p)
    r = list(a)
    for i in range(len(r) - 1 - m, -1, -1):
        c = r[i + m] * inv % p
        if c:
            for j in range(m + 1):
                r[i + j] = (r[i + j] - c * b[j]) % p
    return strip(r[:m])


def gcd_mod(a: IntPoly, b: IntPoly, p: int) -> IntPoly:
    """Monic gcd of two polynomials over GF(p)."""
    a, b = _reduce(a, p), _reduce(b, p)
    while b:
        a, b = b, _rem_mod(a, b, p)
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def gcd_int(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd (positive leading coefficient) of two integer polynomials.

    Brown-style modular algorithm: gcds modulo 61-bit primes are lifted by
    CRT once the degree stabilises and the candidate is confirmed by exact
    trial division, so the result never depends on a lucky prime.
    """
    if not a:
        return primitive(b)
    if not b:
        return primitive(a)
    a, b = primitive(a), primitive(b)
    if len(a) == 1 or len(b) == 1:
        return [1]
    lc_gcd = gcd(a[-1], b[-1])
    lead = a[-1] * b[-1]
    best = min(len(a), len(b))
    acc: IntPoly = []
    modulus = 1
    previous: Optional[IntPoly] = None
    i = 0
    while True:
        p = _prime(i)
        i += 1
        if lead % p == 0:
            continue
        g = gcd_mod(a, b, p)
        if len(g) == 1:
            return [1]
        if len(g) > best:
            continue
        if len(g) < best:
            best = len(g)
            acc, modulus, previous = [], 1, None
        g = [c * lc_gcd % p for c in g]
        if not acc:
            acc = g
        else:
            inv = pow(modulus, -1, p)
            acc = [x + modulus * ((y - x) * inv % p) for x, y in zip(acc, g)]
        modulus *= p
        half = modulus // 2
        cand = primitive([c - modulus if c > half else c for c in acc])
        if cand == previous:
            if exact_quotient(a, cand) is not None and exact_quotient(b, cand) is not None:
                return cand
        previous = cand
