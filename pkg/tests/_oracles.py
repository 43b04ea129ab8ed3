"""Independent brute-force oracles used to freeze expected values.

Everything here is deliberately naive and self-contained: partition counting
by recursion, series arithmetic by dictionary convolution over Fractions,
products by literal factor multiplication.  None of it shares code with the
package under test.
"""

from fractions import Fraction
from functools import lru_cache


def partitions_from_parts(n: int, parts: tuple) -> int:
    """Number of partitions of n into parts drawn from `parts` (repeats allowed)."""
    parts = tuple(sorted(parts))

    @lru_cache(maxsize=None)
    def count(m, idx):
        if m == 0:
            return 1
        if idx == len(parts) or parts[idx] > m:
            return 0
        return count(m - parts[idx], idx) + count(m, idx + 1)

    return count(n, 0)


def partitions_distinct_from_parts(n: int, parts: tuple) -> int:
    """Partitions of n into distinct parts drawn from `parts`."""
    parts = tuple(sorted(parts))

    @lru_cache(maxsize=None)
    def count(m, idx):
        if m == 0:
            return 1
        if idx == len(parts) or parts[idx] > m:
            return 0
        return count(m - parts[idx], idx + 1) + count(m, idx + 1)

    return count(n, 0)


def partitions_gap2(n: int) -> int:
    """Partitions of n whose parts pairwise differ by at least 2."""

    @lru_cache(maxsize=None)
    def count(m, lo):
        if m == 0:
            return 1
        total = 0
        p = lo
        while p <= m:
            total += count(m - p, p + 2)
            p += 1
        return total

    return count(n, 1)


def partition_count(n: int) -> int:
    return partitions_from_parts(n, tuple(range(1, n + 1))) if n else 1


def pentagonal_coeffs(order: int) -> dict:
    """Coefficients of (q;q)_inf via the pentagonal number series."""
    out = {}
    k = 0
    while True:
        hit = False
        for s in (k, -k) if k else (0,):
            e = s * (3 * s - 1) // 2
            if e < order:
                out[e] = out.get(e, 0) + (-1) ** (s % 2)
                hit = True
        if not hit and k > 0:
            break
        k += 1
    return {k: v for k, v in out.items() if v}


def triple_product_coeffs(zexp: Fraction, zsign: int, m: Fraction, order: Fraction) -> dict:
    """Direct bilateral sum of (-1)^n q^(m n(n-1)/2) (zsign q^zexp)^n."""
    out = {}
    for n in range(-400, 401):
        e = Fraction(m) * n * (n - 1) / 2 + Fraction(zexp) * n
        if e < order:
            c = 1 if n % 2 == 0 else -zsign
            out[e] = out.get(e, 0) + c
    return {k: v for k, v in out.items() if v}


# -- a tiny independent series engine (dict exponent -> Fraction) -----------

def ser_mul(a: dict, b: dict, order: Fraction) -> dict:
    out = {}
    for ea, va in a.items():
        for eb, vb in b.items():
            e = ea + eb
            if e < order:
                out[e] = out.get(e, 0) + va * vb
    return {k: v for k, v in out.items() if v}


def ser_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, v in b.items():
        out[e] = out.get(e, 0) + v
    return {k: v for k, v in out.items() if v}


def ser_scale(a: dict, c) -> dict:
    return {e: v * c for e, v in a.items()} if c else {}


def ser_inv(a: dict, order: Fraction) -> dict:
    """Inverse of a series with nonzero constant term, to the given order."""
    assert min(a) == 0, "oracle inversion wants constant leading term"
    from math import ceil as _ceil
    from math import lcm as _lcm
    den = 1
    for e in list(a.keys()):
        den = _lcm(den, Fraction(e).denominator)
    n = _ceil(Fraction(order) * den)
    arr = [Fraction(0)] * n
    for e, v in a.items():
        idx = int(e * den)
        if 0 <= idx < n:
            arr[idx] = v
    res = [Fraction(0)] * n
    res[0] = 1 / arr[0]
    for k in range(1, n):
        s = Fraction(0)
        for j in range(1, k + 1):
            if arr[j] and res[k - j]:
                s += arr[j] * res[k - j]
        res[k] = -s / arr[0]
    return {Fraction(k, den): v for k, v in enumerate(res) if v}


def poch_naive(sign: int, a: Fraction, m: Fraction, length, order: Fraction) -> dict:
    """(sign q^a; q^m)_length by literal factor multiplication."""
    out = {Fraction(0): Fraction(1)}
    k = 0
    a = Fraction(a)
    m = Fraction(m)
    while (length is None and a + k * m < order) or (length is not None and k < length):
        e = a + k * m
        out = ser_mul(out, {Fraction(0): Fraction(1), e: Fraction(-sign)}, order)
        k += 1
        if length is None and a + k * m >= order:
            break
    return out


def nahm_naive(A, b, c, d, order, box: int, mask=None) -> dict:
    """Nahm sum by scanning an explicit box, fully naive arithmetic."""
    from itertools import product as iproduct
    r = len(d)
    A = [[Fraction(x) for x in row] for row in A]
    b = [Fraction(x) for x in b]
    c = Fraction(c)
    order = Fraction(order)
    total = {}
    for n in iproduct(range(box + 1), repeat=r):
        if mask is not None and any(p is not None and ni % 2 != p
                                    for p, ni in zip(mask, n)):
            continue
        e = c
        for i in range(r):
            for j in range(r):
                e += Fraction(A[i][j] * d[j], 2) * n[i] * n[j]
            e += b[i] * n[i]
        if e >= order:
            continue
        term = {e: Fraction(1)}
        for i in range(r):
            den = poch_naive(1, Fraction(d[i]), Fraction(d[i]), n[i], order - e)
            inv = ser_inv(den, order - e)
            term = ser_mul(term, inv, order)
        total = ser_add(total, term)
    return total
