"""Exact bivariate polynomial engine over the rationals.

HomoPoly stores a homogeneous polynomial of fixed total degree n
densely: coeffs[j] is the coefficient of x^(n-j) * y^j.  SparsePoly
stores an arbitrary polynomial in x, y as an exponent-pair map and
carries derivative results, whose degree drops.  Coefficients are
fractions.Fraction throughout; nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected an exact rational, got {type(v).__name__}")


def _render(terms) -> str:
    """Canonical text form: descending x-power, explicit coefficients.

    terms: iterable of (x_exp, y_exp, coeff); zero coefficients are the
    caller's job to drop.  The format is frozen so reports are
    byte-stable, e.g. "1/16*x^7 + 7/16*x^3*y^4".
    """
    ordered = sorted(terms, key=lambda t: (-t[0], t[1]))
    if not ordered:
        return "0"
    parts = []
    for i, (xe, ye, c) in enumerate(ordered):
        mag = c if i == 0 else abs(c)
        piece = [str(mag)]
        if xe:
            piece.append("x" if xe == 1 else f"x^{xe}")
        if ye:
            piece.append("y" if ye == 1 else f"y^{ye}")
        text = "*".join(piece)
        if i == 0:
            parts.append(text)
        else:
            parts.append((" + " if c > 0 else " - ") + text)
    return "".join(parts)


class HomoPoly:
    """Homogeneous polynomial of declared degree; coeffs[j] <-> x^(n-j) y^j."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs):
        if degree < 0:
            raise ValueError("degree must be >= 0")
        cs = tuple(_frac(c) for c in coeffs)
        if len(cs) != degree + 1:
            raise ValueError(f"degree {degree} needs {degree + 1} coefficients, got {len(cs)}")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("HomoPoly is immutable")

    @classmethod
    def zero(cls, degree: int) -> "HomoPoly":
        return cls(degree, [0] * (degree + 1))

    def __eq__(self, other):
        if not isinstance(other, HomoPoly):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __add__(self, other: "HomoPoly") -> "HomoPoly":
        if not isinstance(other, HomoPoly):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("cannot add homogeneous polynomials of different degree")
        return HomoPoly(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "HomoPoly") -> "HomoPoly":
        return self + other.scale(-1)

    def scale(self, c) -> "HomoPoly":
        c = _frac(c)
        return HomoPoly(self.degree, [c * a for a in self.coeffs])

    def __mul__(self, other: "HomoPoly") -> "HomoPoly":
        if not isinstance(other, HomoPoly):
            return NotImplemented
        n = self.degree + other.degree
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return HomoPoly(n, out)

    def eval(self, x0, y0) -> Fraction:
        x0, y0 = _frac(x0), _frac(y0)
        n = self.degree
        total = Fraction(0)
        for j, c in enumerate(self.coeffs):
            if c:
                total += c * x0 ** (n - j) * y0 ** j
        return total

    def substitute_linear(self, x_image, y_image) -> "HomoPoly":
        """Formal expansion of p(a*x + b*y, c*x + d*y); degree is preserved."""
        a, b = (_frac(v) for v in x_image)
        c, d = (_frac(v) for v in y_image)
        n = self.degree
        xline = HomoPoly(1, (a, b))
        yline = HomoPoly(1, (c, d))
        one = HomoPoly(0, (1,))
        xpow = [one]
        ypow = [one]
        for _ in range(n):
            xpow.append(xpow[-1] * xline)
            ypow.append(ypow[-1] * yline)
        out = HomoPoly.zero(n)
        for j, coeff in enumerate(self.coeffs):
            if coeff:
                out = out + (xpow[n - j] * ypow[j]).scale(coeff)
        return out

    def to_sparse(self) -> "SparsePoly":
        n = self.degree
        return SparsePoly({(n - j, j): c for j, c in enumerate(self.coeffs) if c})

    def partial_x(self) -> "SparsePoly":
        return self.to_sparse().partial_x()

    def partial_y(self) -> "SparsePoly":
        return self.to_sparse().partial_y()

    def __str__(self):
        n = self.degree
        return _render((n - j, j, c) for j, c in enumerate(self.coeffs) if c)

    def __repr__(self):
        return f"HomoPoly({self.degree}, {self})"


class SparsePoly:
    """General polynomial in x and y as a map (x_exp, y_exp) -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        clean: dict[tuple[int, int], Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, c in items:
            xe, ye = key
            if xe < 0 or ye < 0:
                raise ValueError(f"negative exponent in {key}")
            c = _frac(c)
            if c:
                acc = clean.get((xe, ye))
                clean[(xe, ye)] = acc + c if acc is not None else c
                if not clean[(xe, ye)]:
                    del clean[(xe, ye)]
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SparsePoly is immutable")

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int | None:
        """Highest total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(xe + ye for xe, ye in self.terms)

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            acc = out.get(key)
            s = acc + c if acc is not None else c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return SparsePoly(out)

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + other.scale(-1)

    def scale(self, c) -> "SparsePoly":
        c = _frac(c)
        if not c:
            return SparsePoly()
        return SparsePoly({key: c * v for key, v in self.terms.items()})

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (xa, ya), a in self.terms.items():
            for (xb, yb), b in other.terms.items():
                key = (xa + xb, ya + yb)
                acc = out.get(key)
                s = acc + a * b if acc is not None else a * b
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return SparsePoly(out)

    def partial_x(self) -> "SparsePoly":
        return SparsePoly({(xe - 1, ye): c * xe
                           for (xe, ye), c in self.terms.items() if xe})

    def partial_y(self) -> "SparsePoly":
        return SparsePoly({(xe, ye - 1): c * ye
                           for (xe, ye), c in self.terms.items() if ye})

    def eval(self, x0, y0) -> Fraction:
        x0, y0 = _frac(x0), _frac(y0)
        total = Fraction(0)
        for (xe, ye), c in self.terms.items():
            total += c * x0 ** xe * y0 ** ye
        return total

    def to_homo(self) -> HomoPoly:
        """Densify; requires every term to share one total degree."""
        if not self.terms:
            raise ValueError("zero polynomial has no well-defined degree")
        degrees = {xe + ye for xe, ye in self.terms}
        if len(degrees) != 1:
            raise ValueError(f"not homogeneous: degrees {sorted(degrees)}")
        n = degrees.pop()
        coeffs = [Fraction(0)] * (n + 1)
        for (xe, ye), c in self.terms.items():
            coeffs[ye] = c
        return HomoPoly(n, coeffs)

    def __str__(self):
        return _render((xe, ye, c) for (xe, ye), c in self.terms.items())

    def __repr__(self):
        return f"SparsePoly({self})"


def mixed_partial(p, dx: int, dy: int) -> SparsePoly:
    """dx-fold d/dx composed with dy-fold d/dy; order-independent."""
    if dx < 0 or dy < 0:
        raise ValueError("derivative orders must be >= 0")
    sp = p.to_sparse() if isinstance(p, HomoPoly) else p
    for _ in range(dx):
        sp = sp.partial_x()
    for _ in range(dy):
        sp = sp.partial_y()
    return sp
