"""Finite-field arithmetic for GF(p^m) with log/antilog tables.

Elements are canonical integers in [0, q): the base-p digits of the
integer are the coordinates of the element in the polynomial basis
{1, x, x^2, ...} of GF(p)[x] modulo the field's irreducible modulus.
With this encoding, addition is digit-wise mod p (XOR when p = 2) and
multiplication goes through discrete-log tables built at construction.

The generator is always the class of x under the modulus.  When no
modulus is supplied, the default is the first relation
x^m = c_{m-1} x^{m-1} + ... + c_1 x + c_0 (ordering relations by the
integer sum(c_i * p^i)) whose modulus is irreducible and makes x a
primitive element.  For GF(9) this yields x^2 = x + 1, for GF(7) the
generator 3, and for GF(256) the classic modulus 0x11d.

Fields are immutable after construction; all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

MAX_FIELD_SIZE = 1 << 16
# Full q x q add/mul tables are built below this size; larger fields
# fall back to digit arithmetic plus log/exp lookups.
TABLE_LIMIT = 256


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# -- polynomial helpers over GF(p), coefficients as int lists (ascending) --


def _gfp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _gfp_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _gfp_trim(out)


def _gfp_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    rem = list(a)
    _gfp_trim(rem)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    quo = [0] * max(len(rem) - db, 0)
    while len(rem) - 1 >= db and rem:
        shift = len(rem) - 1 - db
        c = (rem[-1] * inv_lead) % p
        quo[shift] = c
        for j, bj in enumerate(b):
            rem[shift + j] = (rem[shift + j] - c * bj) % p
        _gfp_trim(rem)
    return _gfp_trim(quo), rem


def _gfp_is_irreducible(mod: Sequence[int], p: int) -> bool:
    """Trial division by every monic divisor of degree up to deg/2."""
    m = len(mod) - 1
    if m == 1:
        return True
    for deg in range(1, m // 2 + 1):
        for idx in range(p**deg):
            div = []
            v = idx
            for _ in range(deg):
                div.append(v % p)
                v //= p
            div.append(1)
            _, rem = _gfp_divmod(mod, div, p)
            if not rem:
                return False
    return True


def _digits(value: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(value % p)
        value //= p
    return out


def _undigits(digits: Sequence[int], p: int) -> int:
    v = 0
    for d in reversed(digits):
        v = v * p + d
    return v


class Field:
    """GF(p^m) with exhaustive log/antilog tables (p^m <= 2^16)."""

    def __init__(self, p: int, m: int, modulus: Optional[Sequence[int]] = None):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        q = p**m
        if q > MAX_FIELD_SIZE:
            raise ValueError(f"field size {q} exceeds cap {MAX_FIELD_SIZE}")
        self.p = p
        self.m = m
        self.q = q
        if modulus is None:
            modulus = self._default_modulus()
        else:
            modulus = [c % p for c in modulus]
            if len(modulus) != m + 1 or modulus[-1] == 0:
                raise ValueError("modulus must be monic-degree m coefficient list")
            if modulus[-1] != 1:
                inv = pow(modulus[-1], p - 2, p)
                modulus = [(c * inv) % p for c in modulus]
            if not _gfp_is_irreducible(modulus, p):
                raise ValueError("modulus is reducible")
        self.modulus = tuple(modulus)
        self.generator = self._reduce_x()
        self.exp, self.log = self._build_tables()
        if q <= TABLE_LIMIT:
            self._add_table = [[self._add_slow(a, b) for b in range(q)] for a in range(q)]
            self._mul_table = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
        else:
            self._add_table = None
            self._mul_table = None

    # -- construction internals --

    def _default_modulus(self) -> list[int]:
        p, m = self.p, self.m
        for relation in range(1, p**m):
            c = _digits(relation, p, m)
            mod = [(-ci) % p for ci in c] + [1]
            if not _gfp_is_irreducible(mod, p):
                continue
            if self._x_is_primitive(mod):
                return mod
        raise ValueError(f"no primitive modulus found for GF({p}^{m})")

    def _x_is_primitive(self, mod: Sequence[int]) -> bool:
        p, q = self.p, self.q
        _, g = _gfp_divmod([0, 1], mod, p)
        acc = [1]
        for step in range(1, q):
            acc = _gfp_divmod(_gfp_mul(acc, g, p), mod, p)[1]
            if acc == [1]:
                return step == q - 1
        return False

    def _reduce_x(self) -> int:
        _, g = _gfp_divmod([0, 1], self.modulus, self.p)
        return _undigits(g + [0] * (self.m - len(g)), self.p)

    def _build_tables(self) -> tuple[list[int], list[int]]:
        q = self.q
        exp = [0] * (q - 1)
        log = [-1] * q
        v = 1
        for i in range(q - 1):
            exp[i] = v
            if log[v] != -1:
                raise ValueError("generator is not primitive under supplied modulus")
            log[v] = i
            v = self._mul_structural(v, self.generator)
        if v != 1:
            raise ValueError("generator is not primitive under supplied modulus")
        return exp, log

    def _mul_structural(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        prod = _gfp_mul(_digits(a, p, m), _digits(b, p, m), p)
        _, rem = _gfp_divmod(prod, self.modulus, p) if len(prod) > m else ([], prod)
        return _undigits(rem + [0] * (m - len(rem)), p)

    # -- arithmetic on canonical integers --

    def _add_slow(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _mul_slow(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_slow(a, b)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            out += (-a % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by zero")
        if a == 0:
            return 0
        return self.exp[(self.log[a] - self.log[b]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        """a**e with negative exponents resolved through the inverse."""
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0 if e else 1
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    # -- quadratic-extension structure --

    def subfield_order(self) -> int:
        if self.m % 2 != 0:
            raise ValueError("field is not a quadratic extension")
        return self.p ** (self.m // 2)

    def norm(self, a: int) -> int:
        q0 = self.subfield_order()
        return self.pow(a, q0 + 1)

    def trace(self, a: int) -> int:
        q0 = self.subfield_order()
        return self.add(self.pow(a, q0), a)

    def in_subfield(self, a: int) -> bool:
        return self.pow(a, self.subfield_order()) == a

    # -- text form --

    def elt_str(self, a: int) -> str:
        if a == 0:
            return "0"
        k = self.log[a]
        if k == 0:
            return "1"
        if k == 1:
            return "a"
        return f"a^{k}"

    def elt_parse(self, text: str) -> int:
        text = text.strip()
        if text == "0":
            return 0
        if text == "1":
            return 1
        if text == "a":
            return self.generator
        if text.startswith("a^"):
            return self.exp[int(text[2:]) % (self.q - 1)]
        raise ValueError(f"cannot parse field element {text!r}")

    def element(self, value: int) -> "FieldElement":
        if not 0 <= value < self.q:
            raise ValueError(f"value {value} outside [0, {self.q})")
        return FieldElement(self, value)

    def elements(self) -> range:
        return range(self.q)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Field)
            and other.p == self.p
            and other.modulus == self.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __repr__(self) -> str:
        return f"Field(p={self.p}, m={self.m}, modulus={list(self.modulus)})"


def build_field(p: int, m: int, modulus: Optional[Sequence[int]] = None) -> Field:
    """Construct GF(p^m); see the module docstring for the default modulus."""
    return Field(p, m, modulus)


@dataclass(frozen=True)
class FieldElement:
    """A field value bound to its Field, with operator sugar for tests/CLI."""

    field: Field
    value: int

    def _coerce(self, other: "FieldElement") -> int:
        if not isinstance(other, FieldElement):
            raise TypeError("expected a FieldElement")
        if other.field != self.field:
            raise ValueError("operands from different fields")
        return other.value

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._coerce(other)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __str__(self) -> str:
        return self.field.elt_str(self.value)

    def __repr__(self) -> str:
        return f"<{self.field.elt_str(self.value)}|{self.value}>"


def arith(a: FieldElement, b: FieldElement, kind: str) -> FieldElement:
    """Dispatch add|sub|mul|div|pow|inv on bound elements.

    pow interprets b as an integer exponent via its canonical value;
    inv ignores b.
    """
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    if kind == "pow":
        return a ** b.value
    if kind == "inv":
        return a.inverse()
    raise ValueError(f"unknown operation {kind!r}")


def norm_trace(a: FieldElement) -> tuple[FieldElement, FieldElement]:
    """(norm, trace) of a for the quadratic extension GF(q^2)/GF(q).

    norm = a^(q+1) and trace = a^q + a; both land in the subfield.
    """
    f = a.field
    return f.element(f.norm(a.value)), f.element(f.trace(a.value))
