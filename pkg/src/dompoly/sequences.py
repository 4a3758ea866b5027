"""Coefficient sequences of graph families and exact recurrence guessing.

Three recurrence shapes are mined, all by exact Gaussian elimination over
``Fraction``:

* ``constant``: ``a_n = sum_j c_j a_{n-j}`` with rational ``c_j``;
* ``poly-x``: ``D_n(x) = sum_j c_j(x) D_{n-j}(x)`` with ``c_j`` in Q[x];
* ``poly-n``: ``sum_j c_j(n) a_{n+j} = 0`` with ``c_j`` in Q[n] (holonomic).

A guess is only returned when the data over-determines the unknowns by a
configurable margin, and it always re-verifies on every supplied term.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .expr import Expr, build_graph, parse_expr, substitute
from .methods import compute
from .polynomial import IntPolynomial, RatPolynomial

CFINITE_MARGIN = 4
HOLONOMIC_MARGIN = 4
POLYX_MARGIN = 2

KINDS = ("constant", "poly-x", "poly-n")


class TooFewTermsError(ValueError):
    """Not enough data to over-determine the requested ansatz."""


class RecurrenceKindError(ValueError):
    """Data and recurrence kinds do not match."""


# -- families ---------------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    """A graph expression with free ``n`` and the values of ``n`` to use."""

    expr: Union[str, Expr]
    n_values: Tuple[int, ...]

    def parsed(self) -> Expr:
        return parse_expr(self.expr) if isinstance(self.expr, str) else self.expr

    def instance(self, n: int):
        return build_graph(self.parsed(), n)

    def sizes(self) -> List[int]:
        return [self.instance(n).n for n in self.n_values]


def family_polynomials(f: FamilySpec, method: str = "auto",
                       cap: Optional[int] = None) -> List[IntPolynomial]:
    e = f.parsed()
    out = []
    for n in f.n_values:
        try:
            poly, _ = compute(substitute(e, n), method, cap=cap)
        except ValueError as exc:
            raise type(exc)(f"n={n}: {exc}") from exc
        out.append(poly)
    return out


# -- coefficient extraction -------------------------------------------------

@dataclass(frozen=True)
class CoeffIndexSpec:
    """Index ``round(q*n + p)`` with ``round`` either floor or ceil."""

    q: Fraction = Fraction(1)
    p: Fraction = Fraction(0)
    rounding: str = "floor"

    def __post_init__(self):
        if self.rounding not in ("floor", "ceil"):
            raise ValueError("rounding must be 'floor' or 'ceil'")
        object.__setattr__(self, "q", Fraction(self.q))
        object.__setattr__(self, "p", Fraction(self.p))

    def index(self, n: int) -> int:
        v = self.q * n + self.p
        return math.floor(v) if self.rounding == "floor" else math.ceil(v)


def extract_coeff_sequence(polys: Sequence[IntPolynomial], spec: CoeffIndexSpec,
                           start: int = 0) -> List[int]:
    """Term ``k`` is the coefficient of ``x^spec.index(start + k)`` in ``polys[k]``."""
    return [p.coefficient(spec.index(start + k)) for k, p in enumerate(polys)]


def partial_sum_sequence(polys: Sequence[IntPolynomial], q: Fraction, p: Fraction,
                         sizes: Sequence[int]) -> List[int]:
    """Number of dominating sets of size at most ``floor(q*|V| + p)``."""
    if len(sizes) != len(polys):
        raise ValueError("need one size per polynomial")
    q, p = Fraction(q), Fraction(p)
    out = []
    for poly, size in zip(polys, sizes):
        top = math.floor(q * size + p)
        out.append(sum(poly.coefficient(i) for i in range(0, top + 1)))
    return out


def sequence_csv(values: Sequence[int], ns: Sequence[int]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "value"])
    w.writerows(zip(ns, values))
    return buf.getvalue()


# -- exact linear algebra ---------------------------------------------------

def _rref(rows: List[List[Fraction]], ncols: int) -> Tuple[List[List[Fraction]], List[int]]:
    m = [list(r) for r in rows]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def _solve(rows: List[List[Fraction]], rhs: List[Fraction], ncols: int) -> Optional[List[Fraction]]:
    """A solution of ``rows @ x = rhs`` with free variables zero, or None."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = _rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, c in zip(red, pivots):
        x[c] = row[ncols]
    return x


def _nullspace_vector(rows: List[List[Fraction]], ncols: int) -> Optional[List[Fraction]]:
    """The kernel basis vector belonging to the first free column, or None."""
    red, pivots = _rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    f = free[0]
    v = [Fraction(0)] * ncols
    v[f] = Fraction(1)
    for row, c in zip(red, pivots):
        v[c] = -row[f]
    return v


def _primitive(vec: Sequence[Fraction]) -> List[int]:
    den = 1
    for v in vec:
        den = den * v.denominator // math.gcd(den, v.denominator)
    ints = [int(v * den) for v in vec]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return [v // g for v in ints] if g else ints


# -- recurrences -----------------------------------------------------------

@dataclass(frozen=True)
class RecurrenceSpec:
    """An order-``k`` linear recurrence.

    ``constant``: ``coefficients[j-1]`` is the rational ``c_j`` in
    ``a_n = sum c_j a_{n-j}``.  ``poly-x``: same with ``RatPolynomial``
    entries in ``x``.  ``poly-n``: ``coefficients[j]`` is ``c_j(n)`` for
    ``j = 0..k`` in ``sum c_j(n) a_{n+j} = 0``, where the first data term
    is ``a_offset``.
    """

    order: int
    kind: str
    coefficients: Tuple
    offset: int = 0

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be >= 1")
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")
        want = self.order + 1 if self.kind == "poly-n" else self.order
        if len(self.coefficients) != want:
            raise ValueError(f"{self.kind} recurrence of order {self.order} needs {want} coefficients")

    @property
    def degree(self) -> int:
        if self.kind == "constant":
            return 0
        return max(c.degree for c in self.coefficients)

    def to_dict(self) -> dict:
        if self.kind == "constant":
            coeffs = [str(c) for c in self.coefficients]
        else:
            coeffs = [[str(v) for v in c.coeffs] for c in self.coefficients]
        return {"order": self.order, "kind": self.kind, "offset": self.offset,
                "coefficients": coeffs}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "RecurrenceSpec":
        if d["kind"] == "constant":
            coeffs = tuple(Fraction(c) for c in d["coefficients"])
        else:
            coeffs = tuple(RatPolynomial(Fraction(v) for v in c) for c in d["coefficients"])
        return cls(d["order"], d["kind"], coeffs, d.get("offset", 0))

    @classmethod
    def from_json(cls, text: str) -> "RecurrenceSpec":
        return cls.from_dict(json.loads(text))

    def __str__(self):
        if self.kind == "constant":
            rhs = " + ".join(f"({c})*a[n-{j}]" for j, c in enumerate(self.coefficients, 1))
            return f"a[n] = {rhs}"
        if self.kind == "poly-x":
            rhs = " + ".join(f"({c.format('x')})*D[n-{j}]" for j, c in enumerate(self.coefficients, 1))
            return f"D[n] = {rhs}"
        lhs = " + ".join(f"({c.format('n')})*a[n+{j}]" for j, c in enumerate(self.coefficients))
        return f"{lhs} = 0"


@dataclass(frozen=True)
class VerifyReport:
    passed: bool
    checked: int
    first_failure: Optional[int] = None


def verify_recurrence(data: Sequence, rec: RecurrenceSpec) -> VerifyReport:
    """Re-substitute ``data`` into ``rec``; ``first_failure`` is a data index."""
    polys = bool(data) and isinstance(data[0], (IntPolynomial, RatPolynomial))
    if polys != (rec.kind == "poly-x"):
        raise RecurrenceKindError(f"{rec.kind} recurrence cannot check "
                                  f"{'polynomial' if polys else 'numeric'} data")
    k = rec.order
    checked = 0
    if rec.kind == "poly-n":
        for i in range(len(data) - k):
            n = rec.offset + i
            if sum(c(n) * data[i + j] for j, c in enumerate(rec.coefficients)) != 0:
                return VerifyReport(False, checked, i + k)
            checked += 1
        return VerifyReport(True, checked)
    for i in range(k, len(data)):
        rhs = sum((rec.coefficients[j - 1] * data[i - j] for j in range(1, k + 1)),
                  start=RatPolynomial() if polys else 0)
        if rhs != data[i]:
            return VerifyReport(False, checked, i)
        checked += 1
    return VerifyReport(True, checked)


def guess_cfinite(seq: Sequence[int], max_order: int,
                  margin: int = CFINITE_MARGIN) -> Optional[RecurrenceSpec]:
    """Smallest-order constant-coefficient recurrence fitting all of ``seq``."""
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    if len(seq) < 2 * max_order + margin:
        raise TooFewTermsError(f"need at least {2 * max_order + margin} terms "
                               f"for order {max_order}, got {len(seq)}")
    a = [Fraction(v) for v in seq]
    for k in range(1, max_order + 1):
        rows = [[a[i - j] for j in range(1, k + 1)] for i in range(k, len(a))]
        sol = _solve(rows, a[k:], k)
        if sol is None:
            continue
        rec = RecurrenceSpec(k, "constant", tuple(sol))
        if verify_recurrence(list(seq), rec).passed:
            return rec
    return None


def _npow(n: int, d: int) -> List[Fraction]:
    return [Fraction(n) ** e for e in range(d + 1)]


def guess_holonomic(seq: Sequence[int], max_order: int, max_degree: int,
                    margin: int = HOLONOMIC_MARGIN, offset: int = 0) -> Optional[RecurrenceSpec]:
    """Smallest (order, degree) recurrence ``sum_j c_j(n) a_{n+j} = 0``.

    ``seq[0]`` is taken to be ``a_offset``.  Coefficients are scaled to
    coprime integers with a positive leading coefficient in ``c_order``.
    """
    if max_order < 1 or max_degree < 0:
        raise ValueError("need max_order >= 1 and max_degree >= 0")
    unknowns = (max_order + 1) * (max_degree + 1)
    if len(seq) - max_order < unknowns + margin:
        raise TooFewTermsError(f"order {max_order}, degree {max_degree} needs "
                               f"{unknowns + margin + max_order} terms, got {len(seq)}")
    a = [Fraction(v) for v in seq]
    for k in range(1, max_order + 1):
        for d in range(max_degree + 1):
            ncols = (k + 1) * (d + 1)
            rows = []
            for i in range(len(a) - k):
                pw = _npow(offset + i, d)
                rows.append([a[i + j] * pw[e] for j in range(k + 1) for e in range(d + 1)])
            vec = _nullspace_vector(rows, ncols)
            if vec is None:
                continue
            ints = _primitive(vec)
            polys = [RatPolynomial(ints[j * (d + 1):(j + 1) * (d + 1)]) for j in range(k + 1)]
            top = next(p for p in reversed(polys) if p)
            if top.leading() < 0:
                polys = [-p for p in polys]
            rec = RecurrenceSpec(k, "poly-n", tuple(polys), offset)
            if verify_recurrence(list(seq), rec).passed:
                return rec
    return None


def guess_polyx_recurrence(polys: Sequence[IntPolynomial], max_order: int,
                           max_coeff_degree: int,
                           margin: int = POLYX_MARGIN) -> Optional[RecurrenceSpec]:
    """Smallest (order, degree) ``D_n = sum_j c_j(x) D_{n-j}`` holding exactly.

    Each power of ``x`` in each identity is one linear constraint on the
    coefficients of the ``c_j``.
    """
    if max_order < 1 or max_coeff_degree < 0:
        raise ValueError("need max_order >= 1 and max_coeff_degree >= 0")
    if len(polys) - max_order < max_order + margin:
        raise TooFewTermsError(f"order {max_order} needs {2 * max_order + margin} "
                               f"polynomials, got {len(polys)}")
    for k in range(1, max_order + 1):
        for d in range(max_coeff_degree + 1):
            ncols = k * (d + 1)
            rows, rhs = [], []
            for i in range(k, len(polys)):
                top = max([polys[i].degree] + [polys[i - j].degree + d for j in range(1, k + 1)])
                for pw in range(top + 1):
                    rows.append([Fraction(polys[i - j].coefficient(pw - e))
                                 for j in range(1, k + 1) for e in range(d + 1)])
                    rhs.append(Fraction(polys[i].coefficient(pw)))
            if len(rows) < ncols + margin:
                continue
            sol = _solve(rows, rhs, ncols)
            if sol is None:
                continue
            coeffs = tuple(RatPolynomial(sol[j * (d + 1):(j + 1) * (d + 1)]) for j in range(k))
            rec = RecurrenceSpec(k, "poly-x", coeffs)
            if verify_recurrence(list(polys), rec).passed:
                return rec
    return None


# -- domination numbers -----------------------------------------------------

def domination_numbers(polys: Sequence[IntPolynomial]) -> List[int]:
    return [p.min_support() for p in polys]


@dataclass(frozen=True)
class GridGammaRow:
    n: int
    gamma: int
    predicted: int

    @property
    def matches(self) -> bool:
        return self.gamma == self.predicted


def grid_5xn_report(n_values: Sequence[int], cap: Optional[int] = None) -> List[GridGammaRow]:
    """Exploratory: domination numbers of ``P_5 x P_n`` beside ``floor((6n+8)/5)``.

    The closed form is only claimed for large ``n``; mismatches at small
    ``n`` are expected and are reported, not raised.
    """
    from .oracle import domination_number
    rows = []
    for n in n_values:
        G = build_graph("cart(P:5,P:n)", n)
        rows.append(GridGammaRow(n, domination_number(G, cap=cap), (6 * n + 8) // 5))
    return rows
