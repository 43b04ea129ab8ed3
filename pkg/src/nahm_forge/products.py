"""Product-side constructors: q-Pochhammer symbols, J-notation, eta quotients,
and Jacobi-triple bilateral sums, all as exact :class:`QSeries`.

Every factor is a ladder of binomials (1 - sign*q^(a+k*m)); multiplying or
dividing a dense coefficient window by one binomial is a single O(length)
pass, so whole products are expanded by streaming binomials instead of
general series multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, lcm
from typing import Optional, Union

from .errors import Divergent
from .series import ParamSeries, QSeries

Rat = Union[int, Fraction]


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


@dataclass(frozen=True)
class PochFactor:
    """One symbol (sign*q^a; q^m)_length^power; length None means infinite."""
    sign: int
    a: Fraction
    m: Fraction
    length: Optional[int] = None
    power: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "m", _frac(self.m))
        if self.m <= 0:
            raise ValueError("step must be positive")
        if self.length is not None and self.length < 0:
            raise ValueError("length must be nonnegative")

    def check_convergent(self):
        """Infinite products need a > 0, or a = 0 with sign -1 (constant 2)."""
        if self.length is not None:
            return
        if self.a < 0 or (self.a == 0 and self.sign == 1):
            raise Divergent(f"infinite product with base {self.sign}*q^{self.a}")

    def to_json(self) -> dict:
        return {"sign": self.sign, "a": str(self.a), "m": str(self.m),
                "len": "inf" if self.length is None else self.length,
                "pow": self.power}

    @classmethod
    def from_json(cls, d: dict) -> "PochFactor":
        ln = d["len"]
        return cls(int(d["sign"]), Fraction(d["a"]), Fraction(d["m"]),
                   None if ln == "inf" else int(ln), int(d["pow"]))


def pf(sign: int, a: Rat, m: Rat, length: Optional[int] = None,
       power: int = 1) -> PochFactor:
    """Shorthand PochFactor constructor."""
    return PochFactor(sign, _frac(a), _frac(m), length, power)


def neg_base_pair(sign: int, a: Rat, m: Rat, power: int = 1) -> tuple[PochFactor, PochFactor]:
    """(sign*q^a; -q^m)_inf rewritten over the base q^(2m).

    Splitting even and odd rungs gives
    (x; -q^m)_inf = (x; q^(2m))_inf * (-x*q^m; q^(2m))_inf.
    """
    a = _frac(a)
    m = _frac(m)
    return (pf(sign, a, 2 * m, None, power), pf(-sign, a + m, 2 * m, None, power))


# ---------------------------------------------------------------------------
# Dense window engine
# ---------------------------------------------------------------------------

class _Dense:
    """Mutable dense window over exponents (lo+i)/den for 0 <= i < len(a),
    always covering everything below the truncation order."""

    __slots__ = ("den", "lo", "order", "a")

    def __init__(self, order: Fraction, den: int):
        self.den = den
        self.lo = 0
        self.order = order
        n = max(ceil(order * den), 0)
        self.a = [0] * n
        if n:
            self.a[0] = 1

    def _top(self) -> int:
        return ceil(self.order * self.den)

    def mul_binom(self, e: int, sign: int):
        """Multiply by (1 - sign*q^(e/den))."""
        a = self.a
        if e == 0:
            c = 1 - sign
            if c == 0:
                self.a = [0] * len(a)
            elif c != 1:
                self.a = [x * c if x else 0 for x in a]
            return
        if e > 0:
            if sign == 1:
                for k in range(len(a) - 1, e - 1, -1):
                    if a[k - e]:
                        a[k] -= a[k - e]
            else:
                for k in range(len(a) - 1, e - 1, -1):
                    if a[k - e]:
                        a[k] += a[k - e]
            return
        # e < 0: the window grows downward; top stays at the truncation order
        grow = -e
        new = [0] * (len(a) + grow)
        new[grow:] = a
        for k in range(len(a)):
            if a[k]:
                new[k] -= sign * a[k]
        self.lo += e
        self.a = new

    def div_binom(self, e: int, sign: int):
        """Divide by (1 - sign*q^(e/den)); needs e > 0."""
        if e <= 0:
            raise ValueError("can only divide by binomials with positive exponent")
        a = self.a
        if sign == 1:
            for k in range(e, len(a)):
                if a[k - e]:
                    a[k] += a[k - e]
        else:
            for k in range(e, len(a)):
                if a[k - e]:
                    a[k] -= a[k - e]

    def mul_const(self, c: Rat):
        if c == 1:
            return
        self.a = [x * c if x else 0 for x in self.a]

    def apply(self, f: PochFactor):
        """Stream one PochFactor into the window."""
        f.check_convergent()
        den = self.den
        a_num = f.a * den
        m_num = f.m * den
        if a_num.denominator != 1 or m_num.denominator != 1:
            raise ValueError("factor lattice does not divide the window lattice")
        a_num, m_num = int(a_num), int(m_num)
        top = self._top() - min(0, self.lo)
        for _ in range(abs(f.power)):
            if f.length is None:
                e = a_num
                while e < top:
                    if f.power > 0:
                        self.mul_binom(e, f.sign)
                    else:
                        self.div_binom(e, f.sign)
                    e += m_num
            else:
                e = a_num
                for _k in range(f.length):
                    if f.power > 0:
                        self.mul_binom(e, f.sign)
                    else:
                        if e < 0:
                            raise ValueError("cannot divide by a factor with negative exponents")
                        if e >= top:
                            break
                        self.div_binom(e, f.sign)
                    e += m_num

    def to_qseries(self) -> QSeries:
        top = self._top()
        out = {}
        for i, v in enumerate(self.a):
            k = self.lo + i
            if v and k < top:
                out[k] = v
        return QSeries(out, self.den, self.order).reduce()


def _lattice_den(factors) -> int:
    den = 1
    for f in factors:
        den = lcm(den, lcm(f.a.denominator, f.m.denominator))
    return den


def poch(f: PochFactor, order: Rat) -> QSeries:
    """Expand a single Pochhammer symbol to the given order."""
    return product([f], order)


def product(factors, order: Rat) -> QSeries:
    """Expand a product of Pochhammer symbols to the given order."""
    order = _frac(order)
    w = _Dense(order, _lattice_den(factors))
    for f in factors:
        w.apply(f)
    return w.to_qseries()


@dataclass(frozen=True)
class ProductSpec:
    """Normal form of a product side: const * q^delta * prod(factors)."""
    delta: Fraction = Fraction(0)
    const: Fraction = Fraction(1)
    factors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "delta", _frac(self.delta))
        object.__setattr__(self, "const", _frac(self.const))
        object.__setattr__(self, "factors", tuple(self.factors))

    def evaluate(self, order: Rat) -> QSeries:
        order = _frac(order)
        body = product(self.factors, order - self.delta)
        out = body.shift(self.delta)
        if self.const != 1:
            out = out.scale(self.const)
        return out

    def to_json(self) -> dict:
        return {"delta": str(self.delta), "const": str(self.const),
                "factors": [f.to_json() for f in self.factors]}

    @classmethod
    def from_json(cls, d: dict) -> "ProductSpec":
        return cls(Fraction(d["delta"]), Fraction(d["const"]),
                   tuple(PochFactor.from_json(x) for x in d["factors"]))


# ---------------------------------------------------------------------------
# Named products
# ---------------------------------------------------------------------------

def J_factors(a: Rat, m: Rat, power: int = 1) -> tuple[PochFactor, ...]:
    """(q^a, q^(m-a), q^m; q^m)_inf as factors; requires 0 < a < m."""
    a = _frac(a)
    m = _frac(m)
    if not 0 < a < m:
        raise ValueError("J(a, m) needs 0 < a < m")
    return (pf(1, a, m, None, power), pf(1, m - a, m, None, power),
            pf(1, m, m, None, power))


def Jm_factors(m: Rat, power: int = 1) -> tuple[PochFactor, ...]:
    return (pf(1, _frac(m), _frac(m), None, power),)


def J(a: Rat, m: Rat, order: Rat) -> QSeries:
    return product(J_factors(a, m), order)


def Jm(m: Rat, order: Rat) -> QSeries:
    return product(Jm_factors(m), order)


def jacobi_triple(zexp: Rat, zsign: int, m: Rat, order: Rat) -> QSeries:
    """Bilateral sum over n of (-1)^n q^(m*n(n-1)/2) (zsign*q^zexp)^n.

    Equals the product (q^m, zsign*q^zexp, zsign*q^(m-zexp); q^m)_inf.
    """
    zexp = _frac(zexp)
    m = _frac(m)
    order = _frac(order)
    if m <= 0:
        raise ValueError("triple-product modulus must be positive")
    den = lcm(zexp.denominator, m.denominator)
    out: dict = {}
    vertex = Fraction(1, 2) - zexp / m
    for direction in (1, -1):
        n = 0 if direction == 1 else -1
        while True:
            e = m * n * (n - 1) / 2 + zexp * n
            if e < order:
                k = int(e * den)
                c = 1 if n % 2 == 0 else -zsign
                w = out.get(k, 0) + c
                if w:
                    out[k] = w
                else:
                    del out[k]
            elif (direction == 1 and n >= vertex) or (direction == -1 and n <= vertex):
                break
            n += direction
    return QSeries(out, den, order).reduce()


def eta_quotient(exps: dict, order: Rat) -> QSeries:
    """prod over moduli m of (q^m; q^m)_inf^exps[m]."""
    factors = []
    for m, e in sorted(exps.items(), key=lambda kv: _frac(kv[0])):
        if _frac(m) <= 0:
            raise ValueError("moduli must be positive")
        if e:
            factors.append(pf(1, m, m, None, e))
    return product(factors, order)


# ---------------------------------------------------------------------------
# Products with a formal parameter
# ---------------------------------------------------------------------------

def poch_param(sign: int, upow: int, vpow: int, a: Rat, m: Rat,
               order: Rat, udeg: int, vdeg: int,
               length: Optional[int] = None) -> ParamSeries:
    """(sign * u^upow * v^vpow * q^a; q^m)_length as a ParamSeries.

    Infinite products stop once the rung exponent reaches the order; the
    parameter monomial contributes no q-exponent, so convergence holds for
    a >= 0 provided (upow, vpow) != (0, 0) when a = 0.
    """
    a = _frac(a)
    m = _frac(m)
    order = _frac(order)
    if m <= 0:
        raise ValueError("step must be positive")
    if a < 0:
        raise ValueError("parameter products need a >= 0")
    if length is None and a == 0 and upow == 0 and vpow == 0 and sign == 1:
        raise Divergent("infinite product with vanishing first factor")
    out = ParamSeries.one(order, udeg, vdeg)
    e = a
    k = 0
    while (length is None and e < order) or (length is not None and k < length):
        rung = ParamSeries.one(order, udeg, vdeg) + \
            ParamSeries.monomial(e, upow, vpow, -sign, order, udeg, vdeg)
        out = out * rung
        e += m
        k += 1
        if length is None and e >= order:
            break
    return out
