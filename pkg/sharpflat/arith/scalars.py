# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Exact scalar arithmetic.

- PAdicScalar: residues in Z/p^N with p-adic valuation.
- QuadScalar: u + v*alpha in Z/p^N[alpha]/(alpha^2 - ap*alpha + p),
  the ring holding both roots of the Hecke polynomial.
- ScaledScalar: body / pi_E^d with pi_E = alpha - beta, tracking how many
  p-adic digits of the value are still meaningful.

All values are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, Union

from sharpflat.core.errors import ContractViolation, PrecisionExhausted


class _Infinity:
    """Valuation of the zero class. Compares above every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "inf"

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("sharpflat.inf")

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__


INF = _Infinity()


def int_valuation(value: int, p: int, cap: int):
    """Largest k <= cap with p^k | value; INF for value == 0 mod p^cap."""
    value %= p ** cap
    if value == 0:
        return INF
    k = 0
    while value % p == 0:
        value //= p
        k += 1
    return k


@dataclass(frozen=True)
class PAdicScalar:
    value: int
    p: int
    N: int

    def __post_init__(self):
        object.__setattr__(self, "value", int(self.value) % (self.p ** self.N))

    @property
    def modulus(self) -> int:
        return self.p ** self.N

    def _coerce(self, other) -> int:
        if isinstance(other, PAdicScalar):
            if other.p != self.p or other.N != self.N:
                raise ContractViolation("RING_MISMATCH", "scalars from different rings")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PAdicScalar(self.value + o, self.p, self.N)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PAdicScalar(self.value - o, self.p, self.N)

    def __rsub__(self, other):
        return PAdicScalar(other - self.value, self.p, self.N)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PAdicScalar(self.value * o, self.p, self.N)

    __rmul__ = __mul__

    def __neg__(self):
        return PAdicScalar(-self.value, self.p, self.N)

    def __pow__(self, k: int):
        return PAdicScalar(pow(self.value, k, self.modulus), self.p, self.N)

    def valuation(self):
        return int_valuation(self.value, self.p, self.N)

    def is_zero(self) -> bool:
        return self.value == 0

    def is_unit(self) -> bool:
        return self.value % self.p != 0

    def inverse(self) -> "PAdicScalar":
        if not self.is_unit():
            raise ContractViolation("NOT_A_UNIT", f"{self.value} is not a unit mod {self.p}")
        return PAdicScalar(pow(self.value, -1, self.modulus), self.p, self.N)

    def reduce(self, N: int) -> "PAdicScalar":
        return PAdicScalar(self.value, self.p, N)

    def signed(self) -> int:
        """Representative in (-p^N/2, p^N/2]."""
        half = self.modulus // 2
        return self.value - self.modulus if self.value > half else self.value


def val_p(s: PAdicScalar):
    """Largest k <= N with p^k | s, or INF for the zero class."""
    return s.valuation()


@dataclass(frozen=True)
class QuadScalar:
    """u + v*alpha with alpha^2 = ap*alpha - p."""

    u: int
    v: int
    ap: int
    p: int
    N: int

    def __post_init__(self):
        q = self.p ** self.N
        object.__setattr__(self, "u", int(self.u) % q)
        object.__setattr__(self, "v", int(self.v) % q)
        object.__setattr__(self, "ap", int(self.ap) % q)
        if self.ap % self.p != 0:
            raise ContractViolation(
                "ORDINARY_AP", "ap must have positive valuation (non-ordinary case)"
            )

    @property
    def modulus(self) -> int:
        return self.p ** self.N

    @property
    def ap_over_p(self) -> int:
        """Integer A with ap = p*A for the canonical representative."""
        return self.ap // self.p

    def _make(self, u: int, v: int) -> "QuadScalar":
        return QuadScalar(u, v, self.ap, self.p, self.N)

    def _coerce(self, other) -> Tuple[int, int]:
        if isinstance(other, QuadScalar):
            if (other.ap, other.p, other.N) != (self.ap, self.p, self.N):
                raise ContractViolation("RING_MISMATCH", "quadratic scalars from different rings")
            return other.u, other.v
        if isinstance(other, PAdicScalar):
            return other.value, 0
        if isinstance(other, int):
            return other, 0
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._make(self.u + o[0], self.v + o[1])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._make(self.u - o[0], self.v - o[1])

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self._make(-self.u, -self.v)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        u2, v2 = o
        vv = self.v * v2
        return self._make(self.u * u2 - self.p * vv, self.u * v2 + u2 * self.v + self.ap * vv)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = self.one()
        base = self
        while k > 0:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def one(self) -> "QuadScalar":
        return self._make(1, 0)

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def conj(self) -> "QuadScalar":
        """Swap the roots: u + v*alpha -> u + v*beta."""
        return self._make(self.u + self.v * self.ap, -self.v)

    def norm(self) -> PAdicScalar:
        return PAdicScalar(
            self.u * self.u + self.u * self.v * self.ap + self.v * self.v * self.p,
            self.p,
            self.N,
        )

    def is_unit(self) -> bool:
        return self.u % self.p != 0

    def inverse(self) -> "QuadScalar":
        if not self.is_unit():
            raise ContractViolation("NOT_A_UNIT", "quadratic scalar is not a unit")
        return self.conj() * self.norm().inverse().value

    def pi_e(self) -> "QuadScalar":
        """The uniformizer alpha - beta = 2*alpha - ap."""
        return self._make(-self.ap, 2)

    def w(self) -> int:
        """Unit w with pi_E^2 = p*w, as an integer representative."""
        return self.p * self.ap_over_p ** 2 - 4

    def divisible_by_pi(self) -> bool:
        return self.u % self.p == 0

    def divide_by_pi(self) -> "QuadScalar":
        """
        Exact division by pi_E. The top p-adic digit of the result is not
        determined by the input; callers track that loss.
        """
        if not self.divisible_by_pi():
            raise ContractViolation("NOT_DIVISIBLE", "element is not divisible by pi_E")
        t = self * self.pi_e()
        if t.u % self.p or t.v % self.p:
            raise ContractViolation("NOT_DIVISIBLE", "element is not divisible by pi_E")
        w_inv = pow(self.w(), -1, self.modulus)
        return self._make((t.u // self.p) * w_inv, (t.v // self.p) * w_inv)

    def half_valuation(self):
        """Valuation in units of pi_E (half p-adic digits); INF for zero."""
        if self.is_zero():
            return INF
        x, k = self, 0
        while x.divisible_by_pi() and k < 2 * self.N:
            if x.is_zero():
                return INF
            x = x.divide_by_pi()
            k += 1
        return k

    def reduce(self, N: int) -> "QuadScalar":
        return QuadScalar(self.u, self.v, self.ap, self.p, N)


def quad_roots(ap: PAdicScalar) -> Tuple[QuadScalar, QuadScalar]:
    """
    The two roots of x^2 - ap*x + p in the quadratic ring.

    Raises:
        ContractViolation: val_p(ap) = 0 (ordinary case)
    """
    if ap.is_unit():
        raise ContractViolation("ORDINARY_AP", "ap is a unit; only the non-ordinary case is supported")
    alpha = QuadScalar(0, 1, ap.value, ap.p, ap.N)
    beta = QuadScalar(ap.value, -1, ap.value, ap.p, ap.N)
    return alpha, beta


Body = Union[PAdicScalar, QuadScalar]


def _ceil_half(d: int) -> int:
    return (d + 1) // 2


@dataclass(frozen=True)
class ScaledScalar:
    """
    Value body / pi_E^d (quadratic body) or body / p^(d/2) (rational body,
    d even). `prec` counts the p-adic digits of the value that are known.
    """

    body: Body
    denom_exp: int
    prec: int

    @staticmethod
    def make(body: Body, denom_exp: int = 0, prec: int = None) -> "ScaledScalar":
        if denom_exp < 0:
            raise ContractViolation("NEGATIVE_DENOMINATOR", "denominator exponent must be >= 0")
        if isinstance(body, PAdicScalar) and denom_exp % 2:
            raise ContractViolation(
                "ODD_RATIONAL_DENOMINATOR", "rational bodies need an even half-unit exponent"
            )
        cap = body.N - _ceil_half(denom_exp)
        prec = cap if prec is None else min(prec, cap)
        return _normalize(body, denom_exp, prec)

    @property
    def N(self) -> int:
        return self.body.N

    @property
    def exhausted(self) -> bool:
        return self.prec <= 0

    @staticmethod
    def inverse_pi(template: QuadScalar) -> "ScaledScalar":
        """1/(alpha - beta)."""
        return ScaledScalar.make(template.one(), 1)

    @staticmethod
    def inverse_p(p: int, N: int) -> "ScaledScalar":
        return ScaledScalar.make(PAdicScalar(1, p, N), 2)


def _normalize(body: Body, d: int, prec: int) -> ScaledScalar:
    if body.is_zero():
        return ScaledScalar(body, 0, prec)
    if isinstance(body, PAdicScalar):
        while d >= 2 and body.value % body.p == 0:
            body = PAdicScalar(body.value // body.p, body.p, body.N)
            d -= 2
    else:
        while d >= 1 and body.divisible_by_pi() and not body.is_zero():
            body = body.divide_by_pi()
            d -= 1
    return ScaledScalar(body, d, prec)


def _as_quad(s: ScaledScalar, template: QuadScalar) -> Body:
    # body / p^(d/2) = body * w^(d/2) / pi_E^d
    if isinstance(s.body, QuadScalar):
        return s.body
    w = pow(template.w(), s.denom_exp // 2, template.modulus)
    return template._make(s.body.value * w, 0)


def _promote(a: ScaledScalar, b: ScaledScalar) -> Tuple[Body, Body]:
    if isinstance(a.body, QuadScalar):
        return a.body, _as_quad(b, a.body)
    if isinstance(b.body, QuadScalar):
        return _as_quad(a, b.body), b.body
    return a.body, b.body


def scaled_mul(a: ScaledScalar, b: ScaledScalar) -> ScaledScalar:
    """
    Product with denominator exponents added. Precision is the minimum of
    the inputs and of the new denominator's cap; renormalization keeps it.

    Raises:
        PrecisionExhausted: an input is already exhausted
    """
    for x in (a, b):
        if x.exhausted:
            raise PrecisionExhausted.for_level(x.N, x.N - x.prec, "scaled_mul input")
    x, y = _promote(a, b)
    d = a.denom_exp + b.denom_exp
    prec = min(a.prec, b.prec, x.N - _ceil_half(d))
    return _normalize(x * y, d, prec)


def scaled_add(a: ScaledScalar, b: ScaledScalar) -> ScaledScalar:
    """Sum over the common denominator pi_E^max(da, db)."""
    x, y = _promote(a, b)
    d = max(a.denom_exp, b.denom_exp)
    x = _lift_denominator(x, d - a.denom_exp)
    y = _lift_denominator(y, d - b.denom_exp)
    prec = min(a.prec, b.prec, x.N - _ceil_half(d))
    return _normalize(x + y, d, prec)


def _lift_denominator(body: Body, k: int) -> Body:
    if k == 0:
        return body
    if isinstance(body, PAdicScalar):
        return body * body.p ** (k // 2)
    return body * body.pi_e() ** k
