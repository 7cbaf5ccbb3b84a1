"""Hermitian-curve arithmetic and the parallel key-equation decoder.

The curve x^(q+1) = y^q + y over GF(q^2) has q^3 affine points.  Its
coordinate ring has the monomial basis {x^a y^b : b < q} and the order
(pole-degree) function ord(x^a y^b) = a*q + b*(q+1), whose value
semigroup is q*N + (q+1)*N.

Syndromes sit naturally in the dual (star) basis

    z*_0 = y^(q-1) + 1,     z*_b = y^(q-1-b)  (0 < b < q),

with ord(z*_b) = q^2 - 1 - b*(q+1).  A received word determines the
double-indexed coefficients s_{a,b}, and the decoder runs q coupled
shift-register syntheses, one per residue class of the order mod q,
updating pairs (f_i, phi_i) against auxiliary pairs (g_j, psi_j).
After enough iterations the f_i generate the locator ideal; error
values come either from phi_i / f_i' at a simple zero or from the
auxiliary sum (sum_i f_i'(P) g_i(P))^(-1), which needs no phi at all.

Point ordering is fixed: x runs through increasing powers of the field
generator with x = 0 last, and within a fiber y runs through increasing
powers with y = 0 last.  The q = 3 ordering is pinned by tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from .galois import Field, build_field
from .poly import NEG_INF, Poly
from .rs import ErrorReport, DecodeResult


class SyndromeWindowError(Exception):
    """A syndrome coefficient outside the available window was needed."""

    def __init__(self, a: int, b: int):
        super().__init__(f"syndrome s_({a},{b}) is outside the available window")
        self.a = a
        self.b = b


def _prime_power(q: int) -> tuple[int, int]:
    for p in (2, 3, 5, 7):
        if q % p == 0:
            s = 0
            v = q
            while v % p == 0:
                v //= p
                s += 1
            if v == 1:
                return p, s
    raise ValueError(f"q={q} is not a supported prime power")


class HermitianCurve:
    """Point set and semigroup data for x^(q+1) = y^q + y over GF(q^2)."""

    MAX_Q = 8

    def __init__(self, q: int, field: Optional[Field] = None):
        if q < 2 or q > self.MAX_Q:
            raise ValueError(f"q={q} outside supported range [2, {self.MAX_Q}]")
        p, s = _prime_power(q)
        self.q = q
        self.field = field if field is not None else build_field(p, 2 * s)
        if self.field.q != q * q:
            raise ValueError("field order must be q^2")
        self.points = self._enumerate_points()
        if len(self.points) != q**3:
            raise AssertionError("curve point count is not q^3")
        self.n = q**3
        self.genus = q * (q - 1) // 2

    def _enumerate_points(self) -> list[tuple[int, int]]:
        f, q = self.field, self.q
        xs = list(f.exp) + [0]
        pts: list[tuple[int, int]] = []
        for x in xs:
            target = f.pow(x, q + 1)
            fiber = [y for y in range(f.q) if f.add(f.pow(y, q), y) == target]
            nonzero = sorted((y for y in fiber if y), key=lambda y: f.log[y])
            pts.extend((x, y) for y in nonzero)
            if 0 in fiber:
                pts.append((x, 0))
        return pts

    def monomial_order(self, a: int, b: int) -> int:
        return a * self.q + b * (self.q + 1)

    def in_semigroup(self, v: int) -> bool:
        if v < 0:
            return False
        b = v % self.q
        return v >= b * (self.q + 1)

    def semigroup_elements(self, bound: int) -> list[int]:
        return [v for v in range(bound + 1) if self.in_semigroup(v)]

    def gaps(self) -> list[int]:
        return [v for v in range(2 * self.genus + 1) if not self.in_semigroup(v)]

    def order_split(self, v: int) -> tuple[int, int]:
        """The unique (a, b) with v = a*q + b*(q+1) and 0 <= b < q."""
        b = v % self.q
        a = (v - b * (self.q + 1)) // self.q
        return a, b

    def min_nongap(self, residue: int) -> int:
        """Smallest semigroup element congruent to residue mod q."""
        return residue % self.q * (self.q + 1)

    def __repr__(self) -> str:
        return f"HermitianCurve(q={self.q}, n={self.n})"


def build_curve(q: int) -> HermitianCurve:
    return HermitianCurve(q)


class CurvePoly:
    """Element of GF(q^2)[x, y] reduced to y-degree < q."""

    __slots__ = ("field", "q", "comps")

    def __init__(self, field: Field, q: int, comps: Sequence[Poly]):
        comps = list(comps)
        if len(comps) > q:
            raise ValueError("y-degree must be reduced below q")
        comps.extend(Poly.zero(field) for _ in range(q - len(comps)))
        self.field = field
        self.q = q
        self.comps = tuple(comps)

    # -- constructors --

    @staticmethod
    def zero(field: Field, q: int) -> "CurvePoly":
        return CurvePoly(field, q, ())

    @staticmethod
    def one(field: Field, q: int) -> "CurvePoly":
        return CurvePoly(field, q, (Poly.one(field),))

    @staticmethod
    def monomial(field: Field, q: int, a: int, b: int, c: int = 1) -> "CurvePoly":
        comps = [Poly.zero(field)] * b + [Poly.monomial(field, a, c)]
        return CurvePoly(field, q, comps)

    @staticmethod
    def from_terms(field: Field, q: int, terms: Sequence[tuple[int, int, int]]) -> "CurvePoly":
        """terms: iterable of (a, b, coefficient)."""
        rows: list[list[int]] = [[] for _ in range(q)]
        for a, b, c in terms:
            row = rows[b]
            if len(row) <= a:
                row.extend([0] * (a + 1 - len(row)))
            row[a] = field.add(row[a], c)
        return CurvePoly(field, q, [Poly(field, row) for row in rows])

    # -- basic structure --

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CurvePoly)
            and other.q == self.q
            and other.comps == self.comps
        )

    def __hash__(self) -> int:
        return hash(self.comps)

    @property
    def order(self):
        """Pole order: max of a*q + b*(q+1) over the support; -inf if zero."""
        best = NEG_INF
        for b, comp in enumerate(self.comps):
            if comp:
                cand = int(comp.degree) * self.q + b * (self.q + 1)
                if cand > best:
                    best = cand
        return best

    def leading_monomial(self) -> tuple[int, int]:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading monomial")
        best = None
        for b, comp in enumerate(self.comps):
            if comp:
                a = int(comp.degree)
                key = a * self.q + b * (self.q + 1)
                if best is None or key > best[0]:
                    best = (key, a, b)
        return best[1], best[2]

    def leading_coeff(self) -> int:
        a, b = self.leading_monomial()
        return self.comps[b].coeff(a)

    def is_monic(self) -> bool:
        return not self.is_zero() and self.leading_coeff() == 1

    def coeff(self, a: int, b: int) -> int:
        return self.comps[b].coeff(a)

    def terms(self) -> list[tuple[int, int, int]]:
        out = []
        for b, comp in enumerate(self.comps):
            for a, c in enumerate(comp.coeffs):
                if c:
                    out.append((a, b, c))
        return out

    # -- arithmetic --

    def _check(self, other: "CurvePoly") -> None:
        if other.field != self.field or other.q != self.q:
            raise ValueError("curve polynomials from different rings")

    def __add__(self, other: "CurvePoly") -> "CurvePoly":
        self._check(other)
        return CurvePoly(self.field, self.q,
                         [a + b for a, b in zip(self.comps, other.comps)])

    def __neg__(self) -> "CurvePoly":
        return CurvePoly(self.field, self.q, [-c for c in self.comps])

    def __sub__(self, other: "CurvePoly") -> "CurvePoly":
        return self + (-other)

    def scale(self, c: int) -> "CurvePoly":
        return CurvePoly(self.field, self.q, [comp.scale(c) for comp in self.comps])

    def shift_x(self, k: int) -> "CurvePoly":
        return CurvePoly(self.field, self.q, [comp.shift(k) for comp in self.comps])

    def mul_y_power(self, j: int) -> "CurvePoly":
        """Multiply by y^j and reduce with y^q = x^(q+1) - y."""
        field, q = self.field, self.q
        acc: list[Poly] = [Poly.zero(field)] * (q + j)
        for b, comp in enumerate(self.comps):
            acc[b + j] = acc[b + j] + comp
        return CurvePoly(field, q, _reduce_y(field, q, acc))

    def __mul__(self, other: "CurvePoly") -> "CurvePoly":
        self._check(other)
        field, q = self.field, self.q
        acc: list[Poly] = [Poly.zero(field)] * (2 * q - 1)
        for b, cb in enumerate(self.comps):
            if cb:
                for c, cc in enumerate(other.comps):
                    if cc:
                        acc[b + c] = acc[b + c] + cb * cc
        return CurvePoly(field, q, _reduce_y(field, q, acc))

    def monic(self) -> "CurvePoly":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.leading_coeff()))

    def evaluate(self, point: tuple[int, int]) -> int:
        x, y = point
        field = self.field
        acc = 0
        yp = 1
        for comp in self.comps:
            acc = field.add(acc, field.mul(comp(x), yp))
            yp = field.mul(yp, y)
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        items = sorted(
            ((a * self.q + b * (self.q + 1), a, b, c) for a, b, c in self.terms()),
            reverse=True,
        )
        parts = []
        for _, a, b, c in items:
            factors = []
            cs = self.field.elt_str(c)
            if cs != "1" or (a == 0 and b == 0):
                factors.append(cs)
            if a == 1:
                factors.append("x")
            elif a > 1:
                factors.append(f"x^{a}")
            if b == 1:
                factors.append("y")
            elif b > 1:
                factors.append(f"y^{b}")
            parts.append(" ".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"CurvePoly({self})"


def _reduce_y(field: Field, q: int, acc: list[Poly]) -> list[Poly]:
    """Rewrite y^e (e >= q) as x^(q+1) y^(e-q) - y^(e-q+1), top down."""
    for e in range(len(acc) - 1, q - 1, -1):
        comp = acc[e]
        if comp:
            acc[e - q] = acc[e - q] + comp.shift(q + 1)
            acc[e - q + 1] = acc[e - q + 1] - comp
            acc[e] = Poly.zero(field)
    return acc[:q]


def pole_order(f: CurvePoly):
    return f.order


def curve_mul(f: CurvePoly, g: CurvePoly) -> CurvePoly:
    return f * g


def curve_derivative(f: CurvePoly) -> CurvePoly:
    """Total derivative d/dx using dy/dx = x^q on the curve."""
    field, q = f.field, f.q
    from .poly import poly_derivative

    dx = [poly_derivative(c) for c in f.comps]
    out = list(dx)
    # x^q * df/dy: the y-degree drops, so no reduction is needed.
    p = field.p
    for b in range(1, q):
        comp = f.comps[b]
        if comp:
            mult = b % p
            scaled = Poly.zero(field)
            for _ in range(mult):
                scaled = scaled + comp
            out[b - 1] = out[b - 1] + scaled.shift(q)
    return CurvePoly(field, q, out)


# -- star basis -------------------------------------------------------------


def star_basis_order(q: int, b: int) -> int:
    return q * q - 1 - b * (q + 1)


def star_mul_table(b: int, c: int, q: int) -> list[tuple[int, int, int]]:
    """Expansion of y^b z*_c as [(x_power, sign, star_index), ...].

    sign is +1 or -1; x_power is 0 or q+1.  Five cases depending on the
    relative position of b and c.
    """
    if not (0 <= b < q and 0 <= c < q):
        raise ValueError("indices must lie in [0, q)")
    if b == 0 and c == 0:
        return [(0, 1, 0)]
    if b == c:
        return [(0, 1, 0), (0, -1, q - 1)]
    if b > c == 0:
        return [(q + 1, 1, q - b)]
    if b > c > 0:
        return [(q + 1, 1, q + c - b), (0, -1, q - 1 + c - b)]
    return [(0, 1, c - b)]


def to_star_components(f: CurvePoly) -> list[Poly]:
    """Rewrite sum f_b y^b as sum h_b z*_b; returns [h_0, ..., h_{q-1}]."""
    q = f.q
    if q == 1:
        raise ValueError("star basis needs q >= 2")
    out = [Poly.zero(f.field)] * q
    top = f.comps[q - 1]
    out[0] = top
    for b in range(1, q - 1):
        out[b] = f.comps[q - 1 - b]
    out[q - 1] = f.comps[0] - top
    return out

def from_star_components(field: Field, q: int, comps: Sequence[Poly]) -> CurvePoly:
    parts = [Poly.zero(field)] * q
    parts[q - 1] = comps[0]
    for b in range(1, q - 1):
        parts[q - 1 - b] = comps[b]
    parts[0] = comps[q - 1] + comps[0]
    return CurvePoly(field, q, parts)


def star_terms(f: CurvePoly) -> list[tuple[int, int, int]]:
    """Star expansion of a polynomial as [(a, b, coeff)] with a = -u-1 < 0."""
    out = []
    for b, comp in enumerate(to_star_components(f)):
        for u, c in enumerate(comp.coeffs):
            if c:
                out.append((-u - 1, b, c))
    return out


class StarPoly:
    """Star-basis series (1/x) sum_b sum_a t_{a,b} x^(-a) z*_b on a window."""

    __slots__ = ("field", "q", "start", "rows")

    def __init__(self, field: Field, q: int, start: int, rows: Sequence[Sequence[int]]):
        self.field = field
        self.q = q
        self.start = start
        self.rows = [list(r) for r in rows]

    @property
    def end(self) -> int:
        return self.start + (len(self.rows[0]) if self.rows else 0)

    def coeff(self, a: int, b: int) -> int:
        if not self.start <= a < self.end:
            raise IndexError(f"star index {a} outside window [{self.start}, {self.end})")
        return self.rows[b][a - self.start]

    def iter_terms(self):
        for b, row in enumerate(self.rows):
            for i, c in enumerate(row):
                if c:
                    yield (self.start + i, b, c)

    def key_orders(self) -> list[tuple[int, int, int, int]]:
        """Sorted [(a*q + b*(q+1), a, b, coeff)] over nonzero terms."""
        q = self.q
        out = [(a * q + b * (q + 1), a, b, c) for a, b, c in self.iter_terms()]
        out.sort()
        return out

    def order(self):
        """Pole order of the series as observed on the window."""
        ks = self.key_orders()
        if not ks:
            return NEG_INF
        return self.q * self.q - self.q - 1 - ks[0][0]

    def leading_coeff(self) -> int:
        ks = self.key_orders()
        return ks[0][3] if ks else 0

    def is_monic_of_order(self, order: int) -> bool:
        return self.order() == order and self.leading_coeff() == 1

    def sub_poly(self, f: CurvePoly) -> "StarPoly":
        """Subtract a polynomial written in the star basis."""
        rows = [list(r) for r in self.rows]
        sub = self.field.sub
        for a, b, c in star_terms(f):
            if a < self.start:
                raise ValueError("window does not reach the polynomial part")
            if a < self.end:
                rows[b][a - self.start] = sub(rows[b][a - self.start], c)
        return StarPoly(self.field, self.q, self.start, rows)


# -- syndromes --------------------------------------------------------------


class SyndromeArray:
    """Table s_{a,b}; entries with a < 0 read as zero, entries beyond the
    stored window raise SyndromeWindowError."""

    def __init__(self, field: Field, q: int, rows: Sequence[Sequence[int]]):
        self.field = field
        self.q = q
        self.rows = [list(r) for r in rows]

    @staticmethod
    def from_vector(curve: HermitianCurve, vector: Sequence[int], width: int) -> "SyndromeArray":
        """Full q x width table from an error (or received) vector."""
        if len(vector) != curve.n:
            raise ValueError("vector length must be q^3")
        f, q = curve.field, curve.q
        rows = [[0] * width for _ in range(q)]
        for (x, y), v in zip(curve.points, vector):
            if v == 0:
                continue
            xa = v
            for a in range(width):
                yb = xa
                for b in range(q):
                    rows[b][a] = f.add(rows[b][a], yb)
                    yb = f.mul(yb, y)
                xa = f.mul(xa, x)
        return SyndromeArray(f, q, rows)

    @staticmethod
    def from_received(curve: HermitianCurve, received: Sequence[int],
                      order_bound: int) -> "SyndromeArray":
        """Ragged table holding exactly the parity-determined entries
        s_{a,b} with a*q + b*(q+1) <= order_bound."""
        if len(received) != curve.n:
            raise ValueError("received length must be q^3")
        f, q = curve.field, curve.q
        widths = [
            max((order_bound - b * (q + 1)) // q + 1, 0) if order_bound >= b * (q + 1) else 0
            for b in range(q)
        ]
        rows = [[0] * w for w in widths]
        for (x, y), v in zip(curve.points, received):
            if v == 0:
                continue
            xa = v
            for a in range(max(widths)):
                yb = xa
                for b in range(q):
                    if a < widths[b]:
                        rows[b][a] = f.add(rows[b][a], yb)
                    yb = f.mul(yb, y)
                xa = f.mul(xa, x)
        return SyndromeArray(f, q, rows)

    def get(self, a: int, b: int) -> int:
        if a < 0:
            return 0
        row = self.rows[b]
        if a >= len(row):
            raise SyndromeWindowError(a, b)
        return row[a]

    def width(self, b: int) -> int:
        return len(self.rows[b])

    def all_zero(self) -> bool:
        return all(all(v == 0 for v in row) for row in self.rows)


def syndrome_array(curve: HermitianCurve, vector: Sequence[int], width: int) -> SyndromeArray:
    return SyndromeArray.from_vector(curve, vector, width)


def discrepancy(f: CurvePoly, shift: int, j: int, S: SyndromeArray) -> int:
    """Coefficient of x^(-shift-1) z*_j in f*S, via the dot product of
    y^j*f against the syndrome table at offset ``shift``."""
    tf = f.mul_y_power(j)
    return _discrepancy_of(tf, shift, S)


def _discrepancy_of(tf: CurvePoly, shift: int, S: SyndromeArray) -> int:
    field = tf.field
    mu = 0
    for c, comp in enumerate(tf.comps):
        for i, coeff in enumerate(comp.coeffs):
            if coeff:
                sv = S.get(i + shift, c)
                if sv:
                    mu = field.add(mu, field.mul(coeff, sv))
    return mu


def fS_window(f: CurvePoly, S: SyndromeArray, a_lo: int, a_hi: int) -> StarPoly:
    """Exact star coefficients t_{a,b} of f*S for a in [a_lo, a_hi]."""
    field, q = f.field, f.q
    rows = []
    for b in range(q):
        tf = f.mul_y_power(b)
        rows.append([_discrepancy_of(tf, a, S) for a in range(a_lo, a_hi + 1)])
    return StarPoly(field, q, a_lo, rows)


# -- the solver -------------------------------------------------------------


@dataclass
class KotterStep:
    """One residue's record inside an iteration, post-update."""

    m: int
    i: int
    j: int
    r: int
    tf: CurvePoly
    mu: int
    p: int
    case: str
    f: CurvePoly
    phi: CurvePoly
    g: CurvePoly
    psi: CurvePoly

    def line(self, field: Field) -> str:
        return (
            f"m={self.m} i={self.i} j={self.j} r={self.r} tf={self.tf} "
            f"mu={field.elt_str(self.mu)} p={self.p} f={self.f} phi={self.phi} "
            f"g={self.g} psi={self.psi}"
        )


@dataclass
class KotterState:
    """Final quadruples (index i = order residue class) plus records."""

    f: tuple[CurvePoly, ...]
    phi: tuple[CurvePoly, ...]
    g: tuple[CurvePoly, ...]
    psi: tuple[CurvePoly, ...]
    iterations: int
    trace: list[KotterStep] = dc_field(default_factory=list)
    history: list[tuple] = dc_field(default_factory=list)

    def trace_text(self, field: Field) -> str:
        return "\n".join(step.line(field) for step in self.trace)


def initial_state(field: Field, q: int) -> tuple[list, list, list, list]:
    fs = [CurvePoly.monomial(field, q, 0, i) for i in range(q)]
    phis = [CurvePoly.zero(field, q) for _ in range(q)]
    gs = [CurvePoly.zero(field, q) for _ in range(q)]
    psis = []
    for i in range(q):
        if i == 0:
            z = CurvePoly.from_terms(field, q, [(0, q - 1, 1), (0, 0, 1)])
        else:
            z = CurvePoly.monomial(field, q, 0, q - 1 - i)
        psis.append(-z)
    return fs, phis, gs, psis


def kotter_solve(S: SyndromeArray, M: int, keep_history: bool = False) -> KotterState:
    """Run the coupled shift-register synthesis through iteration M.

    Residue classes i and j with i + j = m (mod q) exchange auxiliary
    data; all updates within an iteration are computed from the
    iteration-m snapshot and committed together.  Raises
    SyndromeWindowError if the table cannot support an iteration.
    """
    field, q = S.field, S.q
    fs, phis, gs, psis = initial_state(field, q)
    trace: list[KotterStep] = []
    history: list[tuple] = []
    if keep_history:
        history.append((tuple(fs), tuple(phis), tuple(gs), tuple(psis)))
    for m in range(M + 1):
        pending = {}
        rows = []
        for i in range(q):
            j = (m - i) % q
            d_i = fs[i].order
            d_j = fs[j].order
            r_i = (m - d_i - j * (q + 1)) // q
            if (m - d_i - j * (q + 1)) % q != 0:
                raise AssertionError("shift is not integral; residue bookkeeping broken")
            tf = fs[i].mul_y_power(j)
            mu = _discrepancy_of(tf, r_i, S)
            if (d_i + d_j - m) % q != 0:
                raise AssertionError("pivot exponent not integral; residue bookkeeping broken")
            p = (d_i + d_j - m) // q - 1
            if mu == 0:
                case = "skip"
            elif p >= 0:
                case = "reduce"
                pending[("f", i)] = fs[i] - gs[j].shift_x(p).scale(mu)
                pending[("phi", i)] = phis[i] - psis[j].shift_x(p).scale(mu)
            else:
                case = "shift"
                inv_mu = field.inv(mu)
                pending[("f", i)] = fs[i].shift_x(-p) - gs[j].scale(mu)
                pending[("phi", i)] = phis[i].shift_x(-p) - psis[j].scale(mu)
                pending[("g", j)] = fs[i].scale(inv_mu)
                pending[("psi", j)] = phis[i].scale(inv_mu)
            rows.append((m, i, j, r_i, tf, mu, p, case))
        for (kind, idx), value in pending.items():
            (fs if kind == "f" else phis if kind == "phi" else gs if kind == "g" else psis)[idx] = value
        for (mm, i, j, r_i, tf, mu, p, case) in rows:
            trace.append(KotterStep(mm, i, j, r_i, tf, mu, p, case,
                                    fs[i], phis[i], gs[i], psis[i]))
        if keep_history:
            history.append((tuple(fs), tuple(phis), tuple(gs), tuple(psis)))
    return KotterState(tuple(fs), tuple(phis), tuple(gs), tuple(psis),
                       M + 1, trace, history)


# -- location and evaluation ------------------------------------------------


def locate_errors(curve: HermitianCurve, locators: Sequence[CurvePoly]) -> list[int]:
    """Indices of points where every supplied polynomial vanishes."""
    out = []
    for k, pt in enumerate(curve.points):
        if all(f.evaluate(pt) == 0 for f in locators):
            out.append(k)
    return out


def forney_values(curve: HermitianCurve, f: CurvePoly, phi: CurvePoly,
                  point_indices: Sequence[int]) -> list[Optional[int]]:
    """phi(P)/f'(P) per point; None unless f has a simple zero there."""
    field = curve.field
    fp = curve_derivative(f)
    out: list[Optional[int]] = []
    for k in point_indices:
        pt = curve.points[k]
        if f.evaluate(pt) != 0:
            out.append(None)
            continue
        den = fp.evaluate(pt)
        out.append(None if den == 0 else field.div(phi.evaluate(pt), den))
    return out


def horiguchi_values(curve: HermitianCurve, locators: Sequence[CurvePoly],
                     auxiliaries: Sequence[CurvePoly],
                     point_indices: Sequence[int]) -> list[Optional[int]]:
    """(sum_i f_i'(P) g_i(P))^(-1) per point; None on a zero sum."""
    field = curve.field
    derivs = [curve_derivative(f) for f in locators]
    out: list[Optional[int]] = []
    for k in point_indices:
        pt = curve.points[k]
        acc = 0
        for fp, g in zip(derivs, auxiliaries):
            acc = field.add(acc, field.mul(fp.evaluate(pt), g.evaluate(pt)))
        out.append(None if acc == 0 else field.inv(acc))
    return out


# -- footprint oracle and termination ---------------------------------------


@dataclass
class FootprintReport:
    """Brute-force locator-ideal data for a known error vector."""

    delta: tuple[int, ...]
    sigma: tuple[int, ...]
    locators: tuple[CurvePoly, ...]

    @property
    def sigma_max(self) -> int:
        return max(self.sigma)

    @property
    def delta_max(self) -> Optional[int]:
        return max(self.delta) if self.delta else None


def footprint_oracle(curve: HermitianCurve, e: Sequence[int],
                     max_weight: int = 10) -> FootprintReport:
    """Exhaustive linear algebra on the error support.

    Walks monomials in increasing order; an order lands in the footprint
    exactly when the monomial's evaluation on the support is independent
    of everything below it, and the first dependent order in each
    residue class yields that class's minimal locator.
    """
    field, q = curve.field, curve.q
    support = [k for k, v in enumerate(e) if v]
    t = len(support)
    if t > max_weight:
        raise ValueError(f"error weight {t} exceeds oracle cap {max_weight}")
    pts = [curve.points[k] for k in support]
    if t == 0:
        sigma = tuple(curve.min_nongap(i) for i in range(q))
        locators = []
        for i in range(q):
            a, b = curve.order_split(sigma[i])
            locators.append(CurvePoly.monomial(field, q, a, b))
        return FootprintReport((), sigma, tuple(locators))

    sigma: dict[int, int] = {}
    locators: dict[int, CurvePoly] = {}
    delta: list[int] = []
    pivots: list[tuple[int, list[int], CurvePoly]] = []  # (lead pos, vector, poly)
    order = 0
    while len(sigma) < q:
        if curve.in_semigroup(order):
            a, b = curve.order_split(order)
            mono = CurvePoly.monomial(field, q, a, b)
            vec = [mono.evaluate(pt) for pt in pts]
            comb = mono
            for lead, pvec, ppoly in pivots:
                c = vec[lead]
                if c:
                    factor = field.div(c, pvec[lead])
                    vec = [field.sub(v, field.mul(factor, w)) for v, w in zip(vec, pvec)]
                    comb = comb - ppoly.scale(factor)
            if any(vec):
                lead = next(idx for idx, v in enumerate(vec) if v)
                pivots.append((lead, vec, comb))
                delta.append(order)
            else:
                cls = order % q
                if cls not in sigma:
                    sigma[cls] = order
                    locators[cls] = comb
        order += 1
    if len(delta) != t:
        raise AssertionError("footprint size does not match error weight")
    return FootprintReport(tuple(delta),
                           tuple(sigma[i] for i in range(q)),
                           tuple(locators[i] for i in range(q)))


def termination_bound(report: FootprintReport, q: int) -> int:
    """Iteration count after which locators and evaluators are final."""
    floor = q * q - q - 1
    dm = report.delta_max
    return report.sigma_max + (floor if dm is None else max(dm, floor))


# -- codes and decoding ------------------------------------------------------


def code_check_matrix(curve: HermitianCurve, m: int) -> list[list[int]]:
    """Rows evaluate the monomials of order <= m (ascending order).

    Used as the parity-check matrix of the transmitted code; m must be
    a semigroup element.
    """
    if not curve.in_semigroup(m):
        elems = curve.semigroup_elements(m + curve.q + 1)
        lower = max((v for v in elems if v < m), default=0)
        higher = min(v for v in elems if v > m)
        raise ValueError(
            f"order {m} is a gap; nearest valid orders are {lower} and {higher}"
        )
    rows = []
    for order in curve.semigroup_elements(m):
        a, b = curve.order_split(order)
        if a >= curve.q * curve.q:
            continue
        mono = CurvePoly.monomial(curve.field, curve.q, a, b)
        rows.append([mono.evaluate(pt) for pt in curve.points])
    return rows


def check_row_orders(curve: HermitianCurve, m: int) -> list[int]:
    return [v for v in curve.semigroup_elements(m)
            if curve.order_split(v)[0] < curve.q * curve.q]


def dual_code_order(curve: HermitianCurve, m: int) -> int:
    """Design order of the dual code."""
    q = curve.q
    return q**3 + q**2 - q - 2 - m


def decode(curve: HermitianCurve, m: int, received: Sequence[int],
           method: str = "forney") -> DecodeResult:
    """Decode a received word of the code with parity orders <= m.

    Runs the solver as far as the received-word syndromes allow
    (iteration m); exact correction is guaranteed when the error's
    termination bound is at most m, otherwise the residual check or the
    evaluation step reports failure.
    """
    if method not in ("forney", "horiguchi"):
        raise ValueError(f"unknown method {method!r}")
    field = curve.field
    S = SyndromeArray.from_received(curve, received, m)
    if S.all_zero():
        report = ErrorReport((), (), CurvePoly.one(field, curve.q), None,
                             method, "success")
        return DecodeResult(report, list(received))
    try:
        state = kotter_solve(S, m)
    except SyndromeWindowError:
        report = ErrorReport((), (), None, None, method, "failure:window-exhausted")
        return DecodeResult(report, list(received))
    positions = locate_errors(curve, state.f)
    if not positions:
        report = ErrorReport((), (), state.f, state.phi, method,
                             "failure:no-common-zeros")
        return DecodeResult(report, list(received))
    if method == "forney":
        values: list[Optional[int]] = [None] * len(positions)
        for fi, phii in zip(state.f, state.phi):
            missing = [idx for idx, v in enumerate(values) if v is None]
            if not missing:
                break
            got = forney_values(curve, fi, phii,
                                [positions[idx] for idx in missing])
            for idx, v in zip(missing, got):
                if v is not None:
                    values[idx] = v
    else:
        values = horiguchi_values(curve, state.f, state.g, positions)
    if any(v is None or v == 0 for v in values):
        report = ErrorReport(tuple(positions), (), state.f, state.phi, method,
                             "failure:evaluation")
        return DecodeResult(report, list(received))
    corrected = list(received)
    for k, v in zip(positions, values):
        corrected[k] = field.sub(corrected[k], v)
    if not SyndromeArray.from_received(curve, corrected, m).all_zero():
        report = ErrorReport(tuple(positions), tuple(values), state.f, state.phi,
                             method, "failure:residual-syndrome")
        return DecodeResult(report, list(received))
    report = ErrorReport(tuple(positions), tuple(values), state.f, state.phi,
                         method, "success")
    return DecodeResult(report, corrected)
