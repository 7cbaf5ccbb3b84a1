"""Generalized Reed-Solomon codec built around the key equation fS = phi.

Conventions
-----------
The code is the row space of the Vandermonde generator (rows evaluate
1, x, ..., x^(k-1) at the code points), with parity-check rows
(beta_j alpha_j^a) for a < n-k.  For the conventional code (n = q-1,
points = all nonzero elements) the column multipliers are beta_j =
alpha_j; for other point sets they are computed from the duality
relation beta_j = prod_{i != j} (alpha_j - alpha_i)^(-1).

The key-equation machinery itself lives in the dual picture: the
sequence fed to the solver is the plain power sums s_a = sum v_j
alpha_j^a of an error vector (``power_sums``).  ``syndromes`` bridges
the two worlds by weighting the received word by beta before forming
power sums, so decoding a received word recovers the beta-weighted
error and divides the weights back out at the end.

The Berlekamp-Massey solver keeps the quadruple (f, phi, g, psi) and
applies one of three updates per step: "skip" (discrepancy zero),
"reduce" (discrepancy at nonnegative shift p), or "shift" (pivot,
swapping the auxiliary pair).  All intermediate states are recorded so
structural invariants can be checked at every iteration.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from .galois import Field
from .poly import NEG_INF, Poly, poly_derivative, poly_eval

_NUMPY_MIN_WORK = 512


class GrsCode:
    """Evaluation code on distinct points with derived parity weights."""

    def __init__(self, field: Field, alphas: Sequence[int], k: int,
                 betas: Optional[Sequence[int]] = None):
        alphas = list(alphas)
        if len(set(alphas)) != len(alphas):
            raise ValueError("evaluation points must be distinct")
        if not 0 <= k <= len(alphas):
            raise ValueError(f"dimension k={k} outside [0, {len(alphas)}]")
        self.field = field
        self.alphas = tuple(alphas)
        self.k = k
        self.n = len(alphas)
        self.r = self.n - k
        if betas is not None:
            self.betas = tuple(betas)
        elif self.is_conventional():
            self.betas = self.alphas
        else:
            self.betas = tuple(self._duality_weight(j) for j in range(self.n))
        if any(b == 0 for b in self.betas):
            raise ValueError("column multipliers must be nonzero")
        self._np = None

    def is_conventional(self) -> bool:
        return (
            self.n == self.field.q - 1
            and 0 not in self.alphas
            and len(set(self.alphas)) == self.n
        )

    def _duality_weight(self, j: int) -> int:
        f = self.field
        acc = 1
        aj = self.alphas[j]
        for i, ai in enumerate(self.alphas):
            if i != j:
                acc = f.mul(acc, f.sub(aj, ai))
        return f.inv(acc)

    def generator_matrix(self) -> list[list[int]]:
        f = self.field
        return [[f.pow(a, i) for a in self.alphas] for i in range(self.k)]

    def check_matrix(self) -> list[list[int]]:
        f = self.field
        return [
            [f.mul(b, f.pow(a, row)) for a, b in zip(self.alphas, self.betas)]
            for row in range(self.r)
        ]

    # -- optional numpy acceleration for syndrome/evaluation sweeps --

    def _numpy_state(self):
        if self._np is None:
            import numpy as np

            f = self.field
            q1 = f.q - 1
            exp2 = np.array(f.exp + f.exp, dtype=np.int64)
            log = np.array([0] + [f.log[v] for v in range(1, f.q)], dtype=np.int64)
            la = np.array([f.log[a] for a in self.alphas], dtype=np.int64)
            lb = np.array([f.log[b] for b in self.betas], dtype=np.int64)
            rows = np.arange(max(self.r, 1), dtype=np.int64)[:, None]
            log_h = (lb[None, :] + rows * la[None, :]) % q1
            cols = np.arange(self.n, dtype=np.int64)[:, None]
            log_v = (np.arange(self.n + 1, dtype=np.int64)[None, :] * la[:, None]) % q1
            del cols
            self._np = (np, exp2, log, log_h, log_v)
        return self._np

    def _use_numpy(self) -> bool:
        return self.field.p == 2 and self.n * max(self.r, 1) >= _NUMPY_MIN_WORK


def make_code(field: Field, alphas: Sequence[int], k: int,
              betas: Optional[Sequence[int]] = None) -> GrsCode:
    return GrsCode(field, alphas, k, betas)


def conventional_code(field: Field, k: int) -> GrsCode:
    """RS(k) on the points (g^0, g^1, ..., g^(q-2))."""
    return GrsCode(field, list(field.exp), k)


def encode(code: GrsCode, message: Sequence[int]) -> list[int]:
    """Evaluate the message polynomial at every code point."""
    if len(message) != code.k:
        raise ValueError(f"message length {len(message)} != k={code.k}")
    mp = Poly(code.field, message)
    return [poly_eval(mp, a) for a in code.alphas]


def power_sums(field: Field, points: Sequence[int], vector: Sequence[int],
               count: int) -> list[int]:
    """Plain power sums s_a = sum_j v_j alpha_j^a for a < count."""
    if len(vector) != len(points):
        raise ValueError("vector/point length mismatch")
    out = []
    acc = list(vector)
    for _ in range(count):
        s = 0
        for v in acc:
            s = field.add(s, v)
        out.append(s)
        acc = [field.mul(v, a) for v, a in zip(acc, points)]
    return out


def syndromes(code: GrsCode, received: Sequence[int]) -> list[int]:
    """Parity syndromes of the word: power sums of the beta-weighted word."""
    if len(received) != code.n:
        raise ValueError(f"received length {len(received)} != n={code.n}")
    if code.r == 0:
        return []
    f = code.field
    if code._use_numpy():
        np, exp2, log, log_h, _ = code._numpy_state()
        w = np.asarray(received, dtype=np.int64)
        nz = w != 0
        if not bool(nz.any()):
            return [0] * code.r
        terms = exp2[log_h[:, nz] + log[w[nz]]]
        return np.bitwise_xor.reduce(terms, axis=1).tolist()
    weighted = [f.mul(v, b) for v, b in zip(received, code.betas)]
    return power_sums(f, code.alphas, weighted, code.r)


@dataclass
class BmStep:
    """One solver iteration: discrepancy data plus the updated f and g."""

    m: int
    d: int
    mu: int
    p: int
    case: str
    f: Poly
    g: Poly

    def line(self, field: Field) -> str:
        return (
            f"m={self.m} d={self.d} mu={field.elt_str(self.mu)} p={self.p} "
            f"case={self.case} f={self.f} g={self.g}"
        )


@dataclass
class BmState:
    """Final solver quadruple plus the full per-iteration record."""

    f: Poly
    phi: Poly
    g: Poly
    psi: Poly
    iterations: int
    trace: list[BmStep] = dc_field(default_factory=list)
    history: list[tuple[Poly, Poly, Poly, Poly]] = dc_field(default_factory=list)

    def trace_text(self, field: Field) -> str:
        return "\n".join(step.line(field) for step in self.trace)


def bm_solve(field: Field, s: Sequence[int], iterations: Optional[int] = None) -> BmState:
    """Berlekamp-Massey on the sequence s, run for the given iterations.

    Keeps (f, phi, g, psi) with f monic throughout; the trace records
    which update fired at each step.
    """
    if iterations is None:
        iterations = len(s)
    if iterations > len(s):
        raise ValueError("iteration count exceeds available sequence")
    f = Poly.one(field)
    phi = Poly.zero(field)
    g = Poly.zero(field)
    psi = Poly.constant(field, field.neg(1))
    trace: list[BmStep] = []
    history = [(f, phi, g, psi)]
    for m in range(iterations):
        d = int(f.degree)
        mu = 0
        for a, fa in enumerate(f.coeffs):
            if fa:
                idx = a + m - d
                if 0 <= idx < len(s):
                    mu = field.add(mu, field.mul(fa, s[idx]))
        p = 2 * d - m - 1
        if mu == 0:
            case = "skip"
        elif p >= 0:
            case = "reduce"
            f = f - g.shift(p).scale(mu)
            phi = phi - psi.shift(p).scale(mu)
        else:
            case = "shift"
            inv_mu = field.inv(mu)
            f, g = f.shift(-p) - g.scale(mu), f.scale(inv_mu)
            phi, psi = phi.shift(-p) - psi.scale(mu), phi.scale(inv_mu)
        trace.append(BmStep(m, d, mu, p, case, f, g))
        history.append((f, phi, g, psi))
    return BmState(f, phi, g, psi, iterations, trace, history)


def locate(f: Poly, code: GrsCode) -> list[int]:
    """All positions j with f(alpha_j) = 0, by exhaustive evaluation."""
    if f.is_zero():
        raise ValueError("cannot locate roots of the zero polynomial")
    if code._use_numpy() and len(f.coeffs) > 2:
        np, exp2, log, _, log_v = code._numpy_state()
        cs = np.asarray(f.coeffs, dtype=np.int64)
        nz = cs != 0
        terms = exp2[log_v[:, : len(cs)][:, nz] + log[cs[nz]]]
        vals = np.bitwise_xor.reduce(terms, axis=1)
        if f.coeffs[0] == 0:
            vals[np.asarray(code.alphas) == 0] = 0
        return np.nonzero(vals == 0)[0].tolist()
    return [j for j, a in enumerate(code.alphas) if poly_eval(f, a) == 0]


def forney_values(f: Poly, phi: Poly, positions: Sequence[int],
                  code: GrsCode) -> list[Optional[int]]:
    """Error values phi(alpha_j) / f'(alpha_j); None where f' vanishes."""
    field = code.field
    fp = poly_derivative(f)
    out: list[Optional[int]] = []
    for j in positions:
        a = code.alphas[j]
        den = poly_eval(fp, a)
        out.append(None if den == 0 else field.div(poly_eval(phi, a), den))
    return out


def horiguchi_values(f: Poly, g: Poly, positions: Sequence[int],
                     code: GrsCode) -> list[Optional[int]]:
    """Error values (f'(alpha_j) g(alpha_j))^(-1); None on zero product."""
    field = code.field
    fp = poly_derivative(f)
    out: list[Optional[int]] = []
    for j in positions:
        a = code.alphas[j]
        den = field.mul(poly_eval(fp, a), poly_eval(g, a))
        out.append(None if den == 0 else field.inv(den))
    return out


@dataclass
class SugiyamaSolution:
    sigma: Poly
    omega: Poly
    locator: Poly
    evaluator: Optional[Poly]


def sugiyama_solve(field: Field, s: Sequence[int], t_cap: int) -> SugiyamaSolution:
    """Extended Euclid on x^(2t) and the syndrome polynomial.

    Divides with monic remainders until the running remainder drops
    below degree t_cap; returns (sigma, omega) plus the locator in the
    roots-at-positions convention via coefficient reversal.
    """
    from .poly import euclid_monic_step

    if 2 * t_cap > len(s):
        raise ValueError("need 2*t_cap syndrome values")
    r_prev = Poly.monomial(field, 2 * t_cap)
    r_cur = Poly(field, list(s[: 2 * t_cap]))
    v_prev = Poly.zero(field)
    v_cur = Poly.one(field)
    if r_cur.is_zero():
        one = Poly.one(field)
        return SugiyamaSolution(one, Poly.zero(field), one, Poly.zero(field))
    while r_cur.degree >= t_cap:
        quo, rem, scale = euclid_monic_step(r_prev, r_cur)
        inv_scale = field.inv(scale)
        v_next = (v_prev - quo * v_cur).scale(inv_scale)
        r_prev, r_cur = r_cur, rem
        v_prev, v_cur = v_cur, v_next
        if r_cur.is_zero():
            break
    sigma, omega = v_cur, r_cur
    t_eff = int(sigma.degree) if sigma else 0
    rev = sigma.reversed_at(t_eff)
    locator = rev.monic()
    evaluator = None
    if omega.is_zero():
        evaluator = Poly.zero(field)
    elif omega.degree <= t_eff - 1:
        evaluator = omega.reversed_at(t_eff - 1).scale(field.inv(rev.leading_coeff()))
    return SugiyamaSolution(sigma, omega, locator, evaluator)


@dataclass
class ErrorReport:
    """Outcome of one decode: positions/values plus the solver artifacts."""

    positions: tuple[int, ...]
    values: tuple[int, ...]
    locator: Poly
    evaluator: Optional[Poly]
    method: str
    status: str

    @property
    def ok(self) -> bool:
        return self.status == "success"


@dataclass
class DecodeResult:
    report: ErrorReport
    corrected: list[int]


def _failure(f: Poly, phi: Optional[Poly], method: str, reason: str,
             received: Sequence[int]) -> DecodeResult:
    report = ErrorReport((), (), f, phi, method, f"failure:{reason}")
    return DecodeResult(report, list(received))


def decode(code: GrsCode, received: Sequence[int], method: str = "forney") -> DecodeResult:
    """Full pipeline: syndromes, solver, root search, evaluation, verify.

    Miscorrection checks: the root count must match the locator degree
    and the corrected word must have all-zero syndromes; failures are
    reported in the status, never raised.
    """
    if method not in ("forney", "horiguchi"):
        raise ValueError(f"unknown method {method!r}")
    field = code.field
    s = syndromes(code, received)
    if all(v == 0 for v in s):
        report = ErrorReport((), (), Poly.one(field), Poly.zero(field),
                             method, "success")
        return DecodeResult(report, list(received))
    st = bm_solve(field, s)
    f, phi, g = st.f, st.phi, st.g
    positions = locate(f, code)
    if len(positions) != f.degree:
        return _failure(f, phi, method, "root-count-mismatch", received)
    if method == "forney":
        weighted = forney_values(f, phi, positions, code)
    else:
        weighted = horiguchi_values(f, g, positions, code)
    if any(v is None for v in weighted):
        return _failure(f, phi, method, "non-simple-root", received)
    values = tuple(
        field.div(v, code.betas[j]) for v, j in zip(weighted, positions)
    )
    corrected = list(received)
    for j, e in zip(positions, values):
        corrected[j] = field.sub(corrected[j], e)
    if any(v != 0 for v in syndromes(code, corrected)):
        return _failure(f, phi, method, "residual-syndrome", received)
    report = ErrorReport(tuple(positions), values, f, phi, method, "success")
    return DecodeResult(report, corrected)


def oracle_locator_evaluator(field: Field, points: Sequence[int],
                             e: Sequence[int]) -> tuple[Poly, Poly]:
    """Literal locator/evaluator products for a known error vector.

    Test-only oracle: f = prod (x - alpha_j) over the support, and the
    evaluator is sum_j e_j prod_{k != j} (x - alpha_k).
    """
    support = [j for j, v in enumerate(e) if v]
    f = Poly.one(field)
    for j in support:
        f = f * Poly(field, [field.neg(points[j]), 1])
    phi = Poly.zero(field)
    for j in support:
        term = Poly.constant(field, e[j])
        for k in support:
            if k != j:
                term = term * Poly(field, [field.neg(points[k]), 1])
        phi = phi + term
    return f, phi
