"""Recover q^delta * const * prod_(n>=1) (1-q^n)^(a_n) representations from
series, detect eventual periodicity of the exponent sequence, and run the
grid search over offset vectors b that flags bounded-periodic product forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Optional, Sequence, Union

from .errors import NotIntegralLattice, ZeroLeadingTerm
from .nahm import NahmQuadruple, nahm_sum, quadruple
from .series import QSeries

Rat = Union[int, Fraction]


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


@dataclass(frozen=True)
class ExponentProfile:
    """Peeled exponents of q^delta * const * prod (1-q^n)^(a[n-1]).

    delta and const describe the leading monomial in the variable the peel ran
    in; `substitution` records a q -> q^substitution normalization applied
    beforehand (1 if none).  `a` holds exact rationals; integrality is a
    property of nice product forms, not an assumption of the peel.
    """
    delta: Fraction
    const: Fraction
    a: tuple
    substitution: int = 1
    period: Optional[int] = None
    offset: int = 0

    def is_integral(self) -> bool:
        return all(_frac(x).denominator == 1 for x in self.a)

    def is_bounded(self, max_abs: int) -> bool:
        return all(abs(x) <= max_abs for x in self.a)

    def residue_table(self) -> Optional[list]:
        """Eventual a-value for each residue class 1..period (period class last)."""
        if self.period is None:
            return None
        p = self.period
        table = [0] * p
        for r in range(1, p + 1):
            n = len(self.a)
            while n >= 1 and (n - r) % p != 0:
                n -= 1
            table[r - 1] = self.a[n - 1]
        return table

    def rebuild(self, order: Rat) -> QSeries:
        """Reconstruct the series (in the peeled variable) from the profile.

        Exact below min(order, delta + len(a) + 1): the scanned exponents
        determine nothing beyond the last peeled index.
        """
        order = _frac(order)
        arr_order = min(order - self.delta, Fraction(len(self.a) + 1))
        n_slots = max(ceil(arr_order), 0)
        arr = [Fraction(0)] * n_slots
        if n_slots:
            arr[0] = Fraction(1)
        for n, a_n in enumerate(self.a, start=1):
            if n >= n_slots:
                break
            _apply_power(arr, n, _frac(a_n))
        out = {k: v for k, v in enumerate(arr) if v}
        return QSeries(out, 1, arr_order).shift(self.delta).scale(self.const)


def _apply_power(arr: list, n: int, a: Fraction):
    """Multiply the dense integer-exponent array by (1 - q^n)^a in place."""
    if a == 0:
        return
    if a.denominator == 1 and abs(a) * n <= 4 * len(arr):
        k = int(a)
        for _ in range(abs(k)):
            if k > 0:
                for i in range(len(arr) - 1, n - 1, -1):
                    if arr[i - n]:
                        arr[i] -= arr[i - n]
            else:
                for i in range(n, len(arr)):
                    if arr[i - n]:
                        arr[i] += arr[i - n]
        return
    # generalized binomial series (1 - q^n)^a = sum_k C(a, k) (-q^n)^k
    coef = [Fraction(1)]
    k = 1
    while n * k < len(arr):
        coef.append(coef[-1] * (a - k + 1) / k)
        k += 1
    # convolve in place; descending i leaves every source arr[i - nk] unmodified
    for i in range(len(arr) - 1, n - 1, -1):
        total = arr[i]
        for k in range(1, min(i // n, len(coef) - 1) + 1):
            src = arr[i - n * k]
            if src:
                total += coef[k] * ((-1) ** k) * src
        arr[i] = total


def extract_profile(s: QSeries, max_n: int) -> ExponentProfile:
    """Peel a_1..a_max_n from a nonzero series on an integer lattice.

    After dividing out the leading monomial, exponents must be nonnegative
    integers (NotIntegralLattice otherwise); callers normalize fractional
    lattices with a q -> q^den substitution first.
    """
    s = s.reduce()
    ld = s.lead()
    if ld is None:
        raise ZeroLeadingTerm("cannot profile a series that is zero to truncation")
    if s.den != 1:
        raise NotIntegralLattice(f"exponent lattice has denominator {s.den}")
    delta, const = ld
    body_order = s.order - delta
    n_slots = ceil(body_order)
    navail = n_slots - 1
    n_max = min(max_n, navail)
    base = int(delta)
    arr = [Fraction(0)] * n_slots
    inv_c = Fraction(1) / _frac(const)
    for k, v in s.coeffs.items():
        arr[k - base] = v * inv_c
    a = []
    for n in range(1, n_max + 1):
        c_n = arr[n]
        a_n = -c_n
        a.append(a_n)
        _apply_power(arr, n, -a_n)
    return ExponentProfile(delta, _frac(const), tuple(a))


def with_period(profile: ExponentProfile, min_repeats: int = 3) -> ExponentProfile:
    """Copy of the profile carrying the smallest eventual period (if any).

    A period p qualifies when a_n = a_(n+p) for all n past some offset that
    still leaves at least min_repeats full periods in the scanned range.
    """
    a = profile.a
    length = len(a)
    for p in range(1, length // max(min_repeats, 1) + 1):
        bad = -1
        for i in range(length - p - 1, -1, -1):
            if a[i] != a[i + p]:
                bad = i
                break
        offset = bad + 1
        if offset <= length - min_repeats * p:
            return ExponentProfile(profile.delta, profile.const, profile.a,
                                   profile.substitution, p, offset)
    return profile


def detect_period(profile: ExponentProfile, min_repeats: int = 3) -> Optional[int]:
    """Smallest p with a_n eventually p-periodic over the scanned range."""
    return with_period(profile, min_repeats).period


def normalize_and_profile(s: QSeries, max_n: int) -> ExponentProfile:
    """Profile a series, substituting q -> q^den first when needed."""
    s = s.reduce()
    sub = s.den
    if sub > 1:
        s = s.power_substitute(sub)
    prof = extract_profile(s, max_n)
    if sub > 1:
        prof = ExponentProfile(prof.delta, prof.const, prof.a, sub,
                               prof.period, prof.offset)
    return prof


@dataclass(frozen=True)
class HuntHit:
    b: tuple
    profile: ExponentProfile
    order_checked: int

    def to_json(self) -> dict:
        return {"b": [str(x) for x in self.b],
                "delta": str(self.profile.delta / self.profile.substitution),
                "const": str(self.profile.const),
                "period": self.profile.period,
                "residue_exponents": [int(x) for x in self.profile.residue_table()],
                "order_checked": self.order_checked}


def hunt(A, d, b_grid: Sequence, order: Rat, max_n: Optional[int] = None,
         max_abs: int = 4, min_repeats: int = 3) -> list[HuntHit]:
    """Evaluate the sum at c = 0 for every b in the grid and report the b
    whose peeled exponent sequence is integral, bounded by max_abs, and
    eventually periodic."""
    order = _frac(order)
    hits = []
    for b in b_grid:
        quad = quadruple(A, b, 0, d)
        s = nahm_sum(quad, order).reduce()
        if s.is_zero():
            continue
        navail = ceil((s.order - s.lead()[0]) * s.den) - 1
        n_scan = navail if max_n is None else min(max_n, navail)
        prof = normalize_and_profile(s, n_scan)
        if not prof.is_integral() or not prof.is_bounded(max_abs):
            continue
        prof = with_period(prof, min_repeats)
        if prof.period is None:
            continue
        hits.append(HuntHit(tuple(_frac(Fraction(x)) for x in b), prof,
                            len(prof.a)))
    return hits
