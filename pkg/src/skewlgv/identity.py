"""Assembly and verification of the h/e determinant duality.

The two matrices attached to a skew shape and a row selection are

    h-side: rows a in A, columns b in B, entry
            h_{b-a}(x_{alpha_{a+1}+1}, ..., x_{beta_b});
    e-side: rows a' outside A, columns b' outside B, entry
            e_{a'-b'}(x_{alpha_{a'}+1}, ..., x_{beta_{b'+1}}).

Their determinants agree whenever the parallelogram condition holds; the
verifiers here never assert, they report, because the condition is
sufficient but not necessary and the sweep deliberately records what
happens beyond it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

from . import connectors as conn
from .detring import PolyMatrix, det
from .lattice import Node, build_L, build_R
from .poly import Polynomial, VarRange, e_poly, h_poly, qbinom
from .shape import (
    HypothesisCheck,
    IndexSelection,
    SkewShape,
    is_row_connected,
    parallelogram_hypothesis,
    rectangle,
    selections,
    skew_shapes,
    staircase,
)


def entry_h(shape: SkewShape, a: int, b: int) -> Polynomial:
    """Single h-side matrix entry."""
    d = b - a
    if d < 0:
        return Polynomial.zero()
    if d == 0:
        return Polynomial.one()
    return h_poly(d, VarRange(shape.alpha_part(a + 1) + 1, shape.beta_part(b)))


def entry_e(shape: SkewShape, a_p: int, b_p: int) -> Polynomial:
    """Single e-side matrix entry."""
    d = a_p - b_p
    if d < 0:
        return Polynomial.zero()
    if d == 0:
        return Polynomial.one()
    return e_poly(d, VarRange(shape.alpha_part(a_p) + 1, shape.beta_part(b_p + 1)))


def build_h_matrix(shape: SkewShape, sel: IndexSelection) -> PolyMatrix:
    entries = tuple(
        entry_h(shape, a, b) for a in sel.a_set for b in sel.b_set
    )
    return PolyMatrix(sel.l, sel.l, entries, sel.a_set, sel.b_set)


def build_e_matrix(shape: SkewShape, sel: IndexSelection) -> PolyMatrix:
    entries = tuple(
        entry_e(shape, a_p, b_p) for a_p in sel.a_comp for b_p in sel.b_comp
    )
    return PolyMatrix(sel.r, sel.r, entries, sel.a_comp, sel.b_comp)


def _is_corner(shape: SkewShape, p: Node) -> bool:
    for row in (p.i, p.i + 1):
        if 1 <= row <= shape.n:
            lo = shape.alpha[row - 1]
            hi = shape.beta[row - 1]
            if lo < hi and lo <= p.j <= hi:
                return True
    return False


def isolated_endpoints(shape: SkewShape) -> tuple[Node, ...]:
    """Designated source/sink coordinates that touch no box.

    Such points are adjoined to the lattices as isolated nodes; listing
    them keeps that convention visible in reports.
    """
    pts = set()
    for t in range(shape.n + 1):
        pts.add(Node(t, shape.alpha_part(t + 1)))
        pts.add(Node(t, shape.beta_part(t)))
    return tuple(sorted(p for p in pts if not _is_corner(shape, p)))


@dataclass
class VerificationReport:
    """Outcome of one duality check; purely descriptive."""

    n: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    a_set: tuple[int, ...]
    b_set: tuple[int, ...]
    hypothesis_ok: bool
    violating_pairs: tuple[tuple[int, int], ...]
    det_h: Polynomial
    det_e: Polynomial
    equal: bool
    brute_blue: Polynomial | None = None
    brute_red: Polynomial | None = None
    isolated: tuple[Node, ...] = ()
    row_connected: bool = True


def verify_main(
    shape: SkewShape,
    sel: IndexSelection,
    with_brute: bool = False,
    cap: int | None = None,
) -> VerificationReport:
    """Compute both determinants and, optionally, both brute-force
    connector sums.  Raises only on enumeration overflow."""
    hyp: HypothesisCheck = parallelogram_hypothesis(shape, sel)
    dh = det(build_h_matrix(shape, sel))
    de = det(build_e_matrix(shape, sel))
    brute_blue = brute_red = None
    if with_brute:
        brute_blue = conn.connector_sum(build_L(shape, sel), cap=cap)
        brute_red = conn.connector_sum(build_R(shape, sel), cap=cap)
    return VerificationReport(
        n=shape.n,
        alpha=shape.alpha,
        beta=shape.beta,
        a_set=sel.a_set,
        b_set=sel.b_set,
        hypothesis_ok=hyp.ok,
        violating_pairs=hyp.violations,
        det_h=dh,
        det_e=de,
        equal=dh == de,
        brute_blue=brute_blue,
        brute_red=brute_red,
        isolated=isolated_endpoints(shape),
        row_connected=is_row_connected(shape),
    )


# ---------------------------------------------------------------------------
# specialisations


@dataclass
class QBinomialReport:
    n: int
    a_set: tuple[int, ...]
    b_set: tuple[int, ...]
    det_lhs: Polynomial
    det_rhs: Polynomial
    equal: bool


def qbinom_lhs_matrix(n: int, sel: IndexSelection) -> PolyMatrix:
    entries = tuple(qbinom(b, a) for a in sel.a_set for b in sel.b_set)
    return PolyMatrix(sel.l, sel.l, entries, sel.a_set, sel.b_set)


def qbinom_rhs_matrix(n: int, sel: IndexSelection) -> PolyMatrix:
    """Complement-side matrix with entries q^C(a'-b',2) * qbinom(a', b').

    Entries with a' < b' vanish because the Gaussian coefficient does, so
    the exponent is only ever formed for a' >= b'.
    """
    entries = []
    for a_p in sel.a_comp:
        for b_p in sel.b_comp:
            if a_p < b_p:
                entries.append(Polynomial.zero())
            else:
                k = a_p - b_p
                shift = Polynomial.q() ** math.comb(k, 2)
                entries.append(shift * qbinom(a_p, b_p))
    return PolyMatrix(sel.r, sel.r, tuple(entries), sel.a_comp, sel.b_comp)


def verify_qbinomial(n: int, sel: IndexSelection) -> QBinomialReport:
    lhs = det(qbinom_lhs_matrix(n, sel))
    rhs = det(qbinom_rhs_matrix(n, sel))
    return QBinomialReport(n, sel.a_set, sel.b_set, lhs, rhs, lhs == rhs)


@dataclass
class BinomialReport:
    n: int
    a_set: tuple[int, ...]
    b_set: tuple[int, ...]
    lhs: int
    rhs: int
    equal: bool


def verify_binomial(n: int, sel: IndexSelection) -> BinomialReport:
    """Integer binomial determinant duality, obtained at q = 1."""
    qrep = verify_qbinomial(n, sel)
    lhs = qrep.det_lhs.evaluate({0: 1}) if qrep.det_lhs else 0
    rhs = qrep.det_rhs.evaluate({0: 1}) if qrep.det_rhs else 0
    return BinomialReport(n, sel.a_set, sel.b_set, lhs, rhs, lhs == rhs)


@dataclass
class SympolyReport:
    n: int
    a_set: tuple[int, ...]
    b_set: tuple[int, ...]
    det_h_direct: Polynomial
    det_e_direct: Polynomial
    det_h_staircase: Polynomial
    det_e_staircase: Polynomial
    equal: bool
    routes_agree: bool


def verify_sympoly_binomial(n: int, sel: IndexSelection) -> SympolyReport:
    """Initial-segment symmetric polynomial duality, checked directly and
    re-derived from the staircase shape by relabelling x_i -> x_{n+1-i}."""
    h_entries = tuple(
        h_poly(b - a, VarRange(1, a + 1)) for a in sel.a_set for b in sel.b_set
    )
    e_entries = tuple(
        e_poly(a_p - b_p, VarRange(1, a_p))
        for a_p in sel.a_comp
        for b_p in sel.b_comp
    )
    dh = det(PolyMatrix(sel.l, sel.l, h_entries, sel.a_set, sel.b_set))
    de = det(PolyMatrix(sel.r, sel.r, e_entries, sel.a_comp, sel.b_comp))
    rep = verify_main(staircase(n), sel)
    relabel = {i: Polynomial.variable(n + 1 - i) for i in range(1, n + 1)}
    dh_stair = rep.det_h.substitute(relabel)
    de_stair = rep.det_e.substitute(relabel)
    return SympolyReport(
        n=n,
        a_set=sel.a_set,
        b_set=sel.b_set,
        det_h_direct=dh,
        det_e_direct=de,
        det_h_staircase=dh_stair,
        det_e_staircase=de_stair,
        equal=dh == de,
        routes_agree=dh_stair == dh and de_stair == de,
    )


@dataclass
class AitkenReport:
    m: int
    n: int
    a_set: tuple[int, ...]
    b_set: tuple[int, ...]
    det_h: Polynomial
    det_e: Polynomial
    equal: bool


def verify_aitken(m: int, n: int, sel: IndexSelection) -> AitkenReport:
    """Rectangle-shape duality: both sides in the full variable range
    x_1..x_m, for any width m."""
    rep = verify_main(rectangle(m, n), sel)
    return AitkenReport(
        m=m,
        n=n,
        a_set=sel.a_set,
        b_set=sel.b_set,
        det_h=rep.det_h,
        det_e=rep.det_e,
        equal=rep.equal,
    )


# ---------------------------------------------------------------------------
# full (n+1) x (n+1) matrices of the inverse-pair probe


def build_full_H(shape: SkewShape) -> PolyMatrix:
    n = shape.n
    entries = tuple(
        entry_h(shape, i, j) for i in range(n + 1) for j in range(n + 1)
    )
    return PolyMatrix(n + 1, n + 1, entries, tuple(range(n + 1)), tuple(range(n + 1)))


def build_full_E(shape: SkewShape) -> PolyMatrix:
    """Signed elementary-side square matrix; over a rectangle it is the
    two-sided inverse of the full H matrix, but not in general."""
    n = shape.n
    entries = []
    for i in range(n + 1):
        for j in range(n + 1):
            d = j - i
            if d < 0:
                entries.append(Polynomial.zero())
                continue
            if d == 0:
                entries.append(Polynomial.one())
                continue
            p = e_poly(d, VarRange(shape.alpha_part(j) + 1, shape.beta_part(i + 1)))
            entries.append(-p if (i + j) % 2 else p)
    return PolyMatrix(n + 1, n + 1, tuple(entries), tuple(range(n + 1)), tuple(range(n + 1)))


# ---------------------------------------------------------------------------
# sweep driver


@dataclass
class SweepSummary:
    max_n: int
    max_part: int
    total: int = 0
    holds_equal: int = 0
    fails_equal: int = 0
    fails_unequal: int = 0
    holds_unequal: int = 0
    falsifications: list[VerificationReport] | None = None

    def bucket(self, report: VerificationReport) -> None:
        self.total += 1
        if report.hypothesis_ok:
            if report.equal:
                self.holds_equal += 1
            else:
                self.holds_unequal += 1
                if self.falsifications is None:
                    self.falsifications = []
                self.falsifications.append(report)
        else:
            if report.equal:
                self.fails_equal += 1
            else:
                self.fails_unequal += 1


def sweep_cases(
    max_n: int, max_part: int
) -> Iterator[tuple[SkewShape, IndexSelection]]:
    """All (shape, selection) verification cases, in deterministic order."""
    for n in range(1, max_n + 1):
        for shape in skew_shapes(n, max_part):
            for sel in selections(n):
                yield shape, sel


def run_sweep(
    max_n: int,
    max_part: int,
    hypothesis_only: bool = False,
    per_case: Callable[[VerificationReport], None] | None = None,
) -> SweepSummary:
    """Verify every case; with hypothesis_only, skip cases whose
    parallelogram check fails (their determinants are not computed)."""
    summary = SweepSummary(max_n=max_n, max_part=max_part)
    for shape, sel in sweep_cases(max_n, max_part):
        if hypothesis_only and not parallelogram_hypothesis(shape, sel).ok:
            continue
        report = verify_main(shape, sel)
        summary.bucket(report)
        if per_case is not None:
            per_case(report)
    return summary
