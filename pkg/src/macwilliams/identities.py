"""Identity machinery for weight enumerators of dual code pairs.

The dual-distribution transform is implemented twice on purpose: eq1
expands the enumerator polynomial under the substitution
x -> x + (q-1)y, y -> x - y and divides by q^(n-k), while eq2 computes
each count directly from Krawtchouk coefficient sums.  The checkers
eq3/eq4/eq5 evaluate binomial-moment identities, and the primed forms
eq2'..eq5' compare partial derivatives of the two enumerators at fixed
anchor points.  All values are exact rationals; "pass" means a residual
of exactly zero, never within-tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .codes import WeightDistribution, enumerator_poly
from .poly import HomoPoly, SparsePoly

ANCHORS = ((1, 0), (0, 1), (1, 1))
DERIVATIVE_FORMS = ("eq2'", "eq3'", "eq4'", "eq5'")


@dataclass(frozen=True)
class ReportRow:
    label: str
    lhs: Fraction
    rhs: Fraction

    @property
    def residual(self) -> Fraction:
        return self.lhs - self.rhs

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    rows: tuple[ReportRow, ...]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    def render_lines(self) -> list[str]:
        out = [
            f"{self.identity} {row.label} lhs={row.lhs} rhs={row.rhs} "
            f"residual={row.residual} {'pass' if row.passed else 'FAIL'}"
            for row in self.rows
        ]
        out.append(f"{self.identity} verdict={'pass' if self.passed else 'FAIL'}")
        return out

    def __str__(self):
        return "\n".join(self.render_lines())


def _validate(w: WeightDistribution, w_dual: WeightDistribution, n: int, k: int, q: int):
    if q < 2:
        raise ValueError("q must be >= 2")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if w is not None and w.n != n:
        raise ValueError(f"distribution has length {w.n}, expected {n}")
    if w_dual is not None and w_dual.n != n:
        raise ValueError(f"dual distribution has length {w_dual.n}, expected {n}")


def krawtchouk(r: int, j: int, n: int, q: int) -> int:
    """K_r(j) = sum_i (-1)^i (q-1)^(r-i) C(j,i) C(n-j,r-i)."""
    if q < 2:
        raise ValueError("q must be >= 2")
    if not 0 <= r <= n or not 0 <= j <= n:
        raise ValueError(f"need 0 <= r,j <= n, got r={r}, j={j}, n={n}")
    return sum((-1) ** i * (q - 1) ** (r - i) * comb(j, i) * comb(n - j, r - i)
               for i in range(r + 1))


def macwilliams_image(w_dual: WeightDistribution, n: int, k: int, q: int) -> HomoPoly:
    """(1/q^(n-k)) * W'(x + (q-1)y, x - y) as an exact polynomial."""
    _validate(None, w_dual, n, k, q)
    sub = enumerator_poly(w_dual).substitute_linear((1, q - 1), (1, -1))
    return sub.scale(Fraction(1, q ** (n - k)))


def transform_eq1(w_dual: WeightDistribution, n: int, k: int, q: int) -> WeightDistribution:
    """Dual-distribution transform via polynomial substitution.

    Asserts that every substituted coefficient is divisible by q^(n-k)
    before dividing, which catches inputs that are not genuinely the
    distribution of a dual code.
    """
    _validate(None, w_dual, n, k, q)
    scale = q ** (n - k)
    if w_dual.total() != scale:
        raise ValueError(
            f"dual distribution sums to {w_dual.total()}, expected q^(n-k) = {scale}")
    sub = enumerator_poly(w_dual).substitute_linear((1, q - 1), (1, -1))
    counts = []
    for j, c in enumerate(sub.coeffs):
        if c.denominator != 1 or c.numerator % scale:
            raise ValueError(
                f"coefficient {c} of x^{n - j}*y^{j} is not divisible by q^(n-k) = {scale}; "
                "input is not a valid dual distribution")
        value = c.numerator // scale
        if value < 0:
            raise ValueError(
                f"transform produced a negative count {value} at weight {j}; "
                "input is not a valid dual distribution")
        counts.append(value)
    return WeightDistribution(n, counts)


def transform_eq2(w_dual: WeightDistribution, n: int, k: int, q: int) -> WeightDistribution:
    """Dual-distribution transform computed count-by-count from Krawtchouk sums."""
    _validate(None, w_dual, n, k, q)
    scale = q ** (n - k)
    if w_dual.total() != scale:
        raise ValueError(
            f"dual distribution sums to {w_dual.total()}, expected q^(n-k) = {scale}")
    counts = []
    for r in range(n + 1):
        acc = sum(w_dual[j] * krawtchouk(r, j, n, q) for j in range(n + 1))
        if acc % scale:
            raise ValueError(
                f"weight-{r} sum {acc} is not divisible by q^(n-k) = {scale}; "
                "input is not a valid dual distribution")
        value = acc // scale
        if value < 0:
            raise ValueError(
                f"transform produced a negative count {value} at weight {r}; "
                "input is not a valid dual distribution")
        counts.append(value)
    return WeightDistribution(n, counts)


def check_eq3(w: WeightDistribution, w_dual: WeightDistribution,
              n: int, k: int, q: int) -> IdentityReport:
    """sum_j C(j,r) W_j = q^(k-r) sum_{j<=r} (-1)^j (q-1)^(r-j) C(n-j,r-j) W'_j."""
    _validate(w, w_dual, n, k, q)
    qf = Fraction(q)
    rows = []
    for r in range(n + 1):
        lhs = Fraction(sum(comb(j, r) * w[j] for j in range(n + 1)))
        rhs = qf ** (k - r) * sum(
            (-1) ** j * (q - 1) ** (r - j) * comb(n - j, r - j) * w_dual[j]
            for j in range(r + 1))
        rows.append(ReportRow(f"r={r}", lhs, rhs))
    return IdentityReport("eq3", tuple(rows))


def check_eq4(w: WeightDistribution, w_dual: WeightDistribution,
              n: int, k: int, q: int) -> IdentityReport:
    """sum_j C(n-j,r) W_j = q^(k-r) sum_{j<=r} C(n-j,r-j) W'_j."""
    _validate(w, w_dual, n, k, q)
    qf = Fraction(q)
    rows = []
    for r in range(n + 1):
        lhs = Fraction(sum(comb(n - j, r) * w[j] for j in range(n + 1)))
        rhs = qf ** (k - r) * sum(comb(n - j, r - j) * w_dual[j] for j in range(r + 1))
        rows.append(ReportRow(f"r={r}", lhs, rhs))
    return IdentityReport("eq4", tuple(rows))


def check_eq5(w: WeightDistribution, w_dual: WeightDistribution,
              n: int, k: int, q: int) -> IdentityReport:
    """Two-parameter family over 0 <= t <= r <= n:

    sum_j C(j,t) C(n-j,r-t) W_j
      = q^(k-r) sum_i (-1)^i (q-1)^(t-i) sum_{j<=r} C(n-j,r-j) C(j,i) C(r-j,t-i) W'_j

    The t=0 rows must coincide with eq4 and the t=r rows with eq3;
    both reductions are re-checked here on every call.
    """
    _validate(w, w_dual, n, k, q)
    qf = Fraction(q)
    rows = []
    by_param = {}
    for r in range(n + 1):
        for t in range(r + 1):
            lhs = Fraction(sum(comb(j, t) * comb(n - j, r - t) * w[j]
                               for j in range(n + 1)))
            rhs = qf ** (k - r) * sum(
                (-1) ** i * (q - 1) ** (t - i) * sum(
                    comb(n - j, r - j) * comb(j, i) * comb(r - j, t - i) * w_dual[j]
                    for j in range(r + 1))
                for i in range(t + 1))
            row = ReportRow(f"r={r} t={t}", lhs, rhs)
            rows.append(row)
            by_param[(r, t)] = row
    eq3_rows = check_eq3(w, w_dual, n, k, q).rows
    eq4_rows = check_eq4(w, w_dual, n, k, q).rows
    for r in range(n + 1):
        low, high = by_param[(r, 0)], by_param[(r, r)]
        if (low.lhs, low.rhs) != (eq4_rows[r].lhs, eq4_rows[r].rhs):
            raise AssertionError(f"eq5 row (r={r}, t=0) does not reduce to eq4 row r={r}")
        if (high.lhs, high.rhs) != (eq3_rows[r].lhs, eq3_rows[r].rhs):
            raise AssertionError(f"eq5 row (r={r}, t={r}) does not reduce to eq3 row r={r}")
    return IdentityReport("eq5", tuple(rows))


class XYTermSum:
    """Formal sum of c * X^a * Y^b with X = x + (q-1)y and Y = x - y."""

    __slots__ = ("q", "terms")

    def __init__(self, q: int, terms):
        if q < 2:
            raise ValueError("q must be >= 2")
        merged: dict[tuple[int, int], Fraction] = {}
        for c, a, b in terms:
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in term ({c}, {a}, {b})")
            c = Fraction(c)
            key = (a, b)
            acc = merged.get(key)
            s = acc + c if acc is not None else c
            if s:
                merged[key] = s
            else:
                merged.pop(key, None)
        ordered = tuple(sorted(((c, a, b) for (a, b), c in merged.items()),
                               key=lambda t: (-t[1], -t[2])))
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "terms", ordered)

    def __setattr__(self, name, value):
        raise AttributeError("XYTermSum is immutable")

    def expand_to_xy(self) -> SparsePoly:
        out = SparsePoly()
        for c, a, b in self.terms:
            out = out + _xy_basis(self.q, a, b).scale(c)
        return out

    def __eq__(self, other):
        if not isinstance(other, XYTermSum):
            return NotImplemented
        return self.q == other.q and self.terms == other.terms

    def __hash__(self):
        return hash((self.q, self.terms))

    def __repr__(self):
        body = " + ".join(f"{c}*X^{a}*Y^{b}" for c, a, b in self.terms) or "0"
        return f"XYTermSum(q={self.q}, {body})"


@lru_cache(maxsize=None)
def _xy_basis(q: int, a: int, b: int) -> SparsePoly:
    """(x + (q-1)y)^a * (x - y)^b expanded into x, y."""
    xline = HomoPoly(1, (1, q - 1))
    yline = HomoPoly(1, (1, -1))
    out = HomoPoly(0, (1,))
    for _ in range(a):
        out = out * xline
    for _ in range(b):
        out = out * yline
    return out.to_sparse()


def lemma1_expand(s: int, t: int, order: int, wrt: str, q: int) -> XYTermSum:
    """Closed form of the order-fold partial derivative of X^s * Y^t.

    wrt "x": sum_i order! C(s,order-i) C(t,i) X^(s-order+i) Y^(t-i)
    wrt "y": the same with an extra (-1)^i (q-1)^(order-i) factor.
    Terms whose binomial coefficients vanish are omitted.
    """
    if s < 0 or t < 0 or order < 0:
        raise ValueError("s, t, order must be >= 0")
    if wrt not in ("x", "y"):
        raise ValueError(f"wrt must be 'x' or 'y', got {wrt!r}")
    fact = factorial(order)
    terms = []
    for i in range(order + 1):
        base = comb(s, order - i) * comb(t, i)
        if not base:
            continue
        coeff = fact * base
        if wrt == "y":
            coeff *= (-1) ** i * (q - 1) ** (order - i)
        terms.append((Fraction(coeff), s - order + i, t - i))
    return XYTermSum(q, terms)


def derivative_samples(p: HomoPoly, anchor: tuple[int, int]) -> list[Fraction]:
    """values[r] = r-th derivative of p at the anchor, r = 0..degree.

    Anchors (1,0) and (1,1) differentiate in y; anchor (0,1)
    differentiates in x (y-derivatives there would all collapse onto
    the top coefficient and determine nothing else).
    """
    if anchor not in ANCHORS:
        raise ValueError(f"anchor must be one of {ANCHORS}, got {anchor!r}")
    x0, y0 = anchor
    step = SparsePoly.partial_x if anchor == (0, 1) else SparsePoly.partial_y
    values = []
    current = p.to_sparse()
    for _ in range(p.degree + 1):
        values.append(current.eval(x0, y0))
        current = step(current)
    return values


def lemma2_reconstruct(n: int, anchor: tuple[int, int], values) -> HomoPoly:
    """The unique homogeneous degree-n polynomial with the given
    derivative samples at the anchor (conventions of derivative_samples).

    At (1,0) the system is diagonal: coeffs[r] = values[r] / r!.
    At (0,1) likewise with low and high coefficients exchanged.
    At (1,1) it is triangular, r! * sum_{i>=r} C(i,r) coeffs[i] = values[r],
    solved from r = n downward.
    """
    if anchor not in ANCHORS:
        raise ValueError(f"anchor must be one of {ANCHORS}, got {anchor!r}")
    vals = [v if isinstance(v, Fraction) else Fraction(v) for v in values]
    if len(vals) != n + 1:
        raise ValueError(f"need {n + 1} derivative values, got {len(vals)}")
    coeffs = [Fraction(0)] * (n + 1)
    if anchor == (1, 0):
        for r in range(n + 1):
            coeffs[r] = vals[r] / factorial(r)
    elif anchor == (0, 1):
        for r in range(n + 1):
            coeffs[n - r] = vals[r] / factorial(r)
    else:
        for r in range(n, -1, -1):
            coeffs[r] = vals[r] / factorial(r) - sum(
                comb(i, r) * coeffs[i] for i in range(r + 1, n + 1))
    return HomoPoly(n, coeffs)


def _derivative_grid(p: HomoPoly, n: int):
    """grid[(a, b)] = d^a/dx^a d^b/dy^b p, filled for a + b <= n."""
    grid = {(0, 0): p.to_sparse()}
    for a in range(n + 1):
        if a:
            grid[(a, 0)] = grid[(a - 1, 0)].partial_x()
        for b in range(1, n + 1 - a):
            grid[(a, b)] = grid[(a, b - 1)].partial_y()
    return grid


def check_derivative_forms(w: WeightDistribution, w_dual: WeightDistribution,
                           n: int, k: int, q: int, form: str) -> IdentityReport:
    """Compare derivatives of f = enumerator(W) against the transformed
    dual enumerator g = (1/q^(n-k)) W'(x+(q-1)y, x-y) at a fixed anchor.

    eq2': d^r/dy^r at (1,0)      eq3': d^r/dy^r at (1,1)
    eq4': d^r/dx^r at (1,1)      eq5': d^r/dx^(r-t) dy^t at (1,1)
    """
    if form not in DERIVATIVE_FORMS:
        raise ValueError(f"form must be one of {DERIVATIVE_FORMS}, got {form!r}")
    _validate(w, w_dual, n, k, q)
    f = enumerator_poly(w)
    g = macwilliams_image(w_dual, n, k, q)
    rows = []
    if form == "eq5'":
        fgrid = _derivative_grid(f, n)
        ggrid = _derivative_grid(g, n)
        for r in range(n + 1):
            for t in range(r + 1):
                lhs = fgrid[(r - t, t)].eval(1, 1)
                rhs = ggrid[(r - t, t)].eval(1, 1)
                rows.append(ReportRow(f"r={r} t={t}", lhs, rhs))
    else:
        anchor = (1, 0) if form == "eq2'" else (1, 1)
        var = "x" if form == "eq4'" else "y"
        fd, gd = f.to_sparse(), g.to_sparse()
        for r in range(n + 1):
            rows.append(ReportRow(f"r={r}", fd.eval(*anchor), gd.eval(*anchor)))
            if var == "x":
                fd, gd = fd.partial_x(), gd.partial_x()
            else:
                fd, gd = fd.partial_y(), gd.partial_y()
    return IdentityReport(form, tuple(rows))
