"""Exact arithmetic in small finite fields GF(p^m).

Elements are encoded as integers in [0, q), q = p^m: the element with
polynomial digits (d_0, ..., d_{m-1}) over GF(p) is stored as
d_0 + d_1*p + ... + d_{m-1}*p^(m-1).  Text I/O is therefore a plain
integer.  For m = 1 arithmetic is mod p; extension fields reduce modulo
an explicit monic irreducible polynomial, given as an ascending
coefficient list or taken from the built-in table below.

Fields are immutable after construction and every operation is pure, so
values are safe to share across threads.
"""

from __future__ import annotations

from itertools import product

# One canonical modulus per small extension field, ascending
# coefficients, so runs are reproducible without a user-supplied
# polynomial.  Each is re-verified irreducible at construction.
BUILTIN_MODULI = {
    (2, 2): (1, 1, 1),           # t^2 + t + 1
    (2, 3): (1, 1, 0, 1),        # t^3 + t + 1
    (2, 4): (1, 1, 0, 0, 1),     # t^4 + t + 1
    (2, 5): (1, 0, 1, 0, 0, 1),  # t^5 + t^2 + 1
    (3, 2): (1, 0, 1),           # t^2 + 1
    (3, 3): (1, 2, 0, 1),        # t^3 + 2t + 1
    (5, 2): (1, 1, 1),           # t^2 + t + 1
}

# q x q lookup tables are only built for fields at most this large.
_TABLE_LIMIT = 256


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _poly_rem(dividend: list[int], divisor: list[int], p: int) -> list[int]:
    """Remainder of polynomial division over GF(p), little-endian lists."""
    rem = list(dividend)
    dd = len(divisor) - 1
    lead_inv = pow(divisor[-1], p - 2, p)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c:
            factor = (c * lead_inv) % p
            for j, dj in enumerate(divisor):
                rem[i - dd + j] = (rem[i - dd + j] - factor * dj) % p
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


class FieldElement:
    """A single element of a FiniteField, identified by its integer rep."""

    __slots__ = ("field", "rep")

    def __init__(self, field: "FiniteField", rep: int):
        if not isinstance(rep, int) or not 0 <= rep < field.q:
            raise ValueError(f"element rep {rep!r} out of range for {field}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rep", rep)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _same_field(self, other: "FieldElement") -> "FieldElement":
        if isinstance(other, int):
            return FieldElement(self.field, other)
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")
        if other.field != self.field:
            raise ValueError(f"mixed-field operands: {self.field} vs {other.field}")
        return other

    def __add__(self, other):
        other = self._same_field(other)
        return FieldElement(self.field, self.field.add_rep(self.rep, other.rep))

    def __sub__(self, other):
        other = self._same_field(other)
        return FieldElement(self.field, self.field.sub_rep(self.rep, other.rep))

    def __mul__(self, other):
        other = self._same_field(other)
        return FieldElement(self.field, self.field.mul_rep(self.rep, other.rep))

    def __truediv__(self, other):
        other = self._same_field(other)
        return FieldElement(self.field, self.field.mul_rep(self.rep, self.field.inv_rep(other.rep)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_rep(self.rep))

    def __pow__(self, exponent: int):
        field = self.field
        base = self.rep
        if exponent < 0:
            base = field.inv_rep(base)
            exponent = -exponent
        result = 1
        while exponent:
            if exponent & 1:
                result = field.mul_rep(result, base)
            base = field.mul_rep(base, base)
            exponent >>= 1
        return FieldElement(field, result)

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.rep == other.rep

    def __hash__(self):
        return hash((self.field, self.rep))

    def __bool__(self):
        return self.rep != 0

    def __int__(self):
        return self.rep

    def __repr__(self):
        return f"GF({self.field.q})({self.rep})"


class FiniteField:
    """GF(p^m) with an explicit monic irreducible modulus polynomial.

    Arithmetic is available at two levels: FieldElement values with
    overloaded operators, and the *_rep methods acting directly on
    integer reps (used by the hot enumeration loops).
    """

    __slots__ = ("p", "m", "q", "modulus", "add_table", "mul_table",
                 "_neg_table", "_inv_table")

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"p must be a prime integer, got {p!r}")
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"m must be a positive integer, got {m!r}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "q", p ** m)
        object.__setattr__(self, "modulus", self._resolve_modulus(modulus))
        self._check_irreducible()
        if self.q <= _TABLE_LIMIT:
            self._build_tables()
        else:
            object.__setattr__(self, "add_table", None)
            object.__setattr__(self, "mul_table", None)
            object.__setattr__(self, "_neg_table", None)
            object.__setattr__(self, "_inv_table", None)

    def __setattr__(self, name, value):
        raise AttributeError("FiniteField is immutable")

    def _resolve_modulus(self, modulus) -> tuple[int, ...]:
        p, m = self.p, self.m
        if m == 1:
            # Arithmetic is plain mod p; a supplied degree-1 monic is
            # accepted but the stored form is canonical.
            if modulus is not None:
                mod = tuple(modulus)
                if len(mod) != 2 or mod[1] != 1 or not all(0 <= c < p for c in mod):
                    raise ValueError(f"invalid modulus {modulus!r} for GF({p})")
            return (0, 1)
        if modulus is None:
            try:
                return BUILTIN_MODULI[(p, m)]
            except KeyError:
                raise ValueError(
                    f"no built-in modulus for GF({p}^{m}); supply one") from None
        mod = tuple(modulus)
        if len(mod) != m + 1:
            raise ValueError(
                f"modulus must have {m + 1} ascending coefficients, got {len(mod)}")
        if not all(isinstance(c, int) and 0 <= c < p for c in mod):
            raise ValueError(f"modulus coefficients must be integers in [0, {p})")
        if mod[-1] != 1:
            raise ValueError("modulus must be monic")
        return mod

    def _check_irreducible(self):
        p, m = self.p, self.m
        if m == 1:
            return
        mod = list(self.modulus)
        for d in range(1, m // 2 + 1):
            for tail in product(range(p), repeat=d):
                divisor = list(tail) + [1]
                if not _poly_rem(mod, divisor, p):
                    t_poly = " + ".join(f"{c}t^{i}" for i, c in enumerate(divisor) if c)
                    raise ValueError(f"modulus is reducible: divisible by {t_poly}")

    def _build_tables(self):
        q = self.q
        add = [[self._add_slow(a, b) for b in range(q)] for a in range(q)]
        mul = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
        neg = [self._neg_slow(a) for a in range(q)]
        inv = [None] + [self._pow_slow(a, q - 2) for a in range(1, q)]
        object.__setattr__(self, "add_table", add)
        object.__setattr__(self, "mul_table", mul)
        object.__setattr__(self, "_neg_table", neg)
        object.__setattr__(self, "_inv_table", inv)

    # -- digit helpers -------------------------------------------------

    def _digits(self, rep: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.m):
            rep, d = divmod(rep, p)
            out.append(d)
        return out

    def _from_digits(self, digits) -> int:
        rep = 0
        for d in reversed(digits):
            rep = rep * self.p + d
        return rep

    # -- slow paths (used to build tables, and directly for big q) ----

    def _add_slow(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        da, db = self._digits(a), self._digits(b)
        return self._from_digits([(x + y) % p for x, y in zip(da, db)])

    def _neg_slow(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        p = self.p
        return self._from_digits([(-x) % p for x in self._digits(a)])

    def _mul_slow(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        if m == 1:
            return (a * b) % p
        da, db = self._digits(a), self._digits(b)
        conv = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] += x * y
        mod = self.modulus
        for i in range(2 * m - 2, m - 1, -1):
            c = conv[i] % p
            if c:
                for j in range(m):
                    conv[i - m + j] -= c * mod[j]
            conv[i] = 0
        return self._from_digits([c % p for c in conv[:m]])

    def _pow_slow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_slow(result, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return result

    # -- rep-level API -------------------------------------------------

    def add_rep(self, a: int, b: int) -> int:
        if self.add_table is not None:
            return self.add_table[a][b]
        return self._add_slow(a, b)

    def sub_rep(self, a: int, b: int) -> int:
        return self.add_rep(a, self.neg_rep(b))

    def neg_rep(self, a: int) -> int:
        if self._neg_table is not None:
            return self._neg_table[a]
        return self._neg_slow(a)

    def mul_rep(self, a: int, b: int) -> int:
        if self.mul_table is not None:
            return self.mul_table[a][b]
        return self._mul_slow(a, b)

    def inv_rep(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self}")
        if self._inv_table is not None:
            return self._inv_table[a]
        return self._pow_slow(a, self.q - 2)

    # -- element-level API ----------------------------------------------

    def element(self, rep: int) -> FieldElement:
        return FieldElement(self, rep)

    def __call__(self, rep: int) -> FieldElement:
        return FieldElement(self, rep)

    def coerce(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError(f"mixed-field operands: {self} vs {value.field}")
            return value
        return FieldElement(self, value)

    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    def one(self) -> FieldElement:
        return FieldElement(self, 1 % self.q)

    def elements(self) -> list[FieldElement]:
        """All q elements, ascending by rep; the first is zero."""
        return [FieldElement(self, r) for r in range(self.q)]

    def add(self, a, b) -> FieldElement:
        return self.coerce(a) + self.coerce(b)

    def sub(self, a, b) -> FieldElement:
        return self.coerce(a) - self.coerce(b)

    def mul(self, a, b) -> FieldElement:
        return self.coerce(a) * self.coerce(b)

    def neg(self, a) -> FieldElement:
        return -self.coerce(a)

    def inv(self, a) -> FieldElement:
        a = self.coerce(a)
        return FieldElement(self, self.inv_rep(a.rep))

    def __eq__(self, other):
        if not isinstance(other, FiniteField):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"GF({self.q})"


def make_field(p: int, m: int = 1, modulus=None) -> FiniteField:
    """Build and validate GF(p^m); fails rather than returning a bad field."""
    return FiniteField(p, m, modulus)
