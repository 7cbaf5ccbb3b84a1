"""Univariate polynomials over a Field, plus truncated series in 1/x.

Polynomials store ascending coefficients (index a <-> coefficient of
x^a) with no trailing zeros.  The zero polynomial has degree NEG_INF,
a true minus-infinity sentinel, so degree inequalities can be written
exactly as stated.

A LaurentTail represents h = (1/x) * sum_a h_a x^(-a) on an explicit
finite index window [start, start+len).  Negative indices a carry the
polynomial part (x^u has index a = -u-1), so a tail can hold residuals
like f*S - phi whose polynomial and principal parts both matter.
"""

from __future__ import annotations

from typing import Sequence, Union

from .galois import Field

NEG_INF = float("-inf")

Degree = Union[int, float]


class Poly:
    """Dense univariate polynomial with int coefficients over a Field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Sequence[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @staticmethod
    def zero(field: Field) -> "Poly":
        return Poly(field, ())

    @staticmethod
    def one(field: Field) -> "Poly":
        return Poly(field, (1,))

    @staticmethod
    def constant(field: Field, c: int) -> "Poly":
        return Poly(field, (c,))

    @staticmethod
    def x(field: Field) -> "Poly":
        return Poly(field, (0, 1))

    @staticmethod
    def monomial(field: Field, degree: int, c: int = 1) -> "Poly":
        return Poly(field, (0,) * degree + (c,))

    @property
    def degree(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Poly)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def coeff(self, a: int) -> int:
        return self.coeffs[a] if 0 <= a < len(self.coeffs) else 0

    def leading_coeff(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _check(self, other: "Poly") -> None:
        if other.field != self.field:
            raise ValueError("polynomials over different fields")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        add = self.field.add
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return Poly(self.field, out)

    def __neg__(self) -> "Poly":
        neg = self.field.neg
        return Poly(self.field, [neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.field)
        mul, add = self.field.mul, self.field.add
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ai in enumerate(self.coeffs):
            if ai:
                for j, bj in enumerate(other.coeffs):
                    if bj:
                        out[i + j] = add(out[i + j], mul(ai, bj))
        return Poly(self.field, out)

    def scale(self, c: int) -> "Poly":
        if c == 0:
            return Poly.zero(self.field)
        mul = self.field.mul
        return Poly(self.field, [mul(c, a) for a in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k (k >= 0)."""
        if not self.coeffs:
            return self
        return Poly(self.field, (0,) * k + self.coeffs)

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def reversed_at(self, n: int) -> "Poly":
        """Coefficients of x^n * f(1/x); requires n >= deg f."""
        out = [0] * (n + 1)
        for i, c in enumerate(self.coeffs):
            out[n - i] = c
        return Poly(self.field, out)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        field = self.field
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv_lead = field.inv(other.coeffs[-1])
        quo = [0] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            shift = len(rem) - 1 - db
            c = field.mul(rem[-1], inv_lead)
            quo[shift] = c
            for j, bj in enumerate(other.coeffs):
                rem[shift + j] = field.sub(rem[shift + j], field.mul(c, bj))
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(field, quo), Poly(field, rem)

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def __call__(self, a: int) -> int:
        return poly_eval(self, a)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        field = self.field
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = field.elt_str(c)
            if i == 0:
                parts.append(cs)
            elif i == 1:
                parts.append("x" if cs == "1" else f"{cs} x")
            else:
                parts.append(f"x^{i}" if cs == "1" else f"{cs} x^{i}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"


def poly_eval(f: Poly, a: int) -> int:
    """Horner evaluation of f at the field point a."""
    field = f.field
    acc = 0
    for c in reversed(f.coeffs):
        acc = field.add(field.mul(acc, a), c)
    return acc


def poly_derivative(f: Poly) -> Poly:
    """Formal derivative; coefficient multipliers wrap at characteristic p."""
    field = f.field
    p = field.p
    out = []
    for i in range(1, len(f.coeffs)):
        mult = i % p
        c = f.coeffs[i]
        acc = 0
        for _ in range(mult):
            acc = field.add(acc, c)
        out.append(acc)
    return Poly(field, out)


class LaurentTail:
    """Coefficients h_a of h = (1/x) * sum h_a x^(-a) on a finite window."""

    __slots__ = ("field", "start", "coeffs")

    def __init__(self, field: Field, start: int, coeffs: Sequence[int]):
        self.field = field
        self.start = start
        self.coeffs = list(coeffs)

    @staticmethod
    def from_coefficients(field: Field, seq: Sequence[int], start: int = 0) -> "LaurentTail":
        return LaurentTail(field, start, seq)

    @property
    def end(self) -> int:
        """One past the highest represented index a."""
        return self.start + len(self.coeffs)

    def covers(self, lo: int, hi: int) -> bool:
        return self.start <= lo and hi < self.end

    def get(self, a: int) -> int:
        if not self.start <= a < self.end:
            raise IndexError(f"index {a} outside tail window [{self.start}, {self.end})")
        return self.coeffs[a - self.start]

    def degree(self) -> Degree:
        """Largest exponent -a-1 carrying a nonzero coefficient in-window."""
        for i, c in enumerate(self.coeffs):
            if c:
                return -(self.start + i) - 1
        return NEG_INF

    def leading_coeff(self) -> int:
        for c in self.coeffs:
            if c:
                return c
        return 0

    def is_monic_of_degree(self, d: int) -> bool:
        return self.degree() == d and self.leading_coeff() == 1

    def sub_poly(self, f: Poly) -> "LaurentTail":
        """Subtract the polynomial f (term x^u lives at index a = -u-1)."""
        if f and -int(f.degree) - 1 < self.start:
            raise ValueError("tail window does not reach the polynomial part")
        out = list(self.coeffs)
        sub = self.field.sub
        for u, c in enumerate(f.coeffs):
            if c:
                a = -u - 1
                if a < self.end:
                    out[a - self.start] = sub(out[a - self.start], c)
        return LaurentTail(self.field, self.start, out)

    def __str__(self) -> str:
        terms = [
            f"{self.field.elt_str(c)}*x^{-(self.start + i) - 1}"
            for i, c in enumerate(self.coeffs)
            if c
        ]
        return " + ".join(terms) if terms else "0"


def syndrome_tail(field: Field, values: Sequence[int], lead_zeros: int = 0) -> LaurentTail:
    """Tail for S = (1/x) sum s_a x^(-a), optionally extended by the
    known zeros at negative indices (lead_zeros many)."""
    return LaurentTail(field, -lead_zeros, [0] * lead_zeros + list(values))


def laurent_mul(f: Poly, t: LaurentTail, lo: int, hi: int) -> LaurentTail:
    """Exact coefficients of f*t on the index window [lo, hi].

    (f*t)_a = sum_i f_i t_{a+i}, so t must cover [lo, hi + deg f].
    """
    if f.field != t.field:
        raise ValueError("mixed fields")
    if hi < lo:
        raise ValueError("empty window")
    if f.is_zero():
        return LaurentTail(f.field, lo, [0] * (hi - lo + 1))
    d = int(f.degree)
    if not t.covers(lo, hi + d):
        raise ValueError(
            f"window [{lo}, {hi}] needs tail data on [{lo}, {hi + d}], "
            f"tail holds [{t.start}, {t.end})"
        )
    field = f.field
    mul, add = field.mul, field.add
    out = []
    for a in range(lo, hi + 1):
        acc = 0
        for i, fi in enumerate(f.coeffs):
            if fi:
                acc = add(acc, mul(fi, t.get(a + i)))
        out.append(acc)
    return LaurentTail(field, lo, out)


def euclid_monic_step(A: Poly, B: Poly) -> tuple[Poly, Poly, int]:
    """One division step A = quotient*B + scale*remainder.

    The remainder is returned monic (or zero, with scale 1) and its
    degree is strictly below deg B.
    """
    if B.is_zero():
        raise ZeroDivisionError("division step by zero polynomial")
    quo, rem = A.divmod(B)
    if rem.is_zero():
        return quo, rem, 1
    scale = rem.leading_coeff()
    return quo, rem.monic(), scale
