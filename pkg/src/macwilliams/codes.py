"""Linear codes over GF(q): exhaustive enumeration and weight counting.

Everything here is brute-force ground truth by design: codewords are
generated as all q^k message combinations of the generator rows, in
lexicographic message order, so results are reproducible byte for byte.
"""

from __future__ import annotations

from .gf import FiniteField
from .linalg import MatrixGF, dual_generator, rref
from .poly import HomoPoly

DEFAULT_ENUM_CAP = 2 ** 22


class EnumerationCapError(ValueError):
    """q^k exceeds the configured enumeration cap."""

    def __init__(self, count: int, cap: int):
        super().__init__(f"enumeration needs q^k = {count} codewords, above the cap {cap}")
        self.count = count
        self.cap = cap


class WeightDistribution:
    """counts[i] = number of codewords with exactly i nonzero coordinates."""

    __slots__ = ("n", "counts")

    def __init__(self, n: int, counts):
        cs = tuple(counts)
        if len(cs) != n + 1:
            raise ValueError(f"length {n} needs {n + 1} counts, got {len(cs)}")
        if not all(isinstance(c, int) and c >= 0 for c in cs):
            raise ValueError("counts must be nonnegative integers")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "counts", cs)

    def __setattr__(self, name, value):
        raise AttributeError("WeightDistribution is immutable")

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __iter__(self):
        return iter(self.counts)

    def __len__(self):
        return len(self.counts)

    def total(self) -> int:
        return sum(self.counts)

    def perturbed(self, index: int, delta: int = 1) -> "WeightDistribution":
        """Copy with counts[index] shifted; handy for soundness checks."""
        counts = list(self.counts)
        counts[index] += delta
        return WeightDistribution(self.n, counts)

    def __eq__(self, other):
        if not isinstance(other, WeightDistribution):
            return NotImplemented
        return self.n == other.n and self.counts == other.counts

    def __hash__(self):
        return hash((self.n, self.counts))

    def __str__(self):
        return " ".join(str(c) for c in self.counts)

    def __repr__(self):
        return f"WeightDistribution(n={self.n}, [{self}])"


class LinearCode:
    """A k-dimensional subspace of GF(q)^n given by a full-rank generator."""

    __slots__ = ("field", "n", "k", "generator")

    def __init__(self, field: FiniteField, n: int, k: int, generator: MatrixGF):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "generator", generator)

    def __setattr__(self, name, value):
        raise AttributeError("LinearCode is immutable")

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}] over {self.field!r})"


def make_code(field: FiniteField, n: int, rows) -> LinearCode:
    """Validate generator rows (full rank, entries in the field)."""
    if n < 1:
        raise ValueError("code length n must be >= 1")
    g = MatrixGF(field, rows, cols=n)
    _, rk, _ = rref(g)
    if rk != g.rows:
        raise ValueError(f"generator rows are rank-deficient: rank {rk} < {g.rows} rows")
    return LinearCode(field, n, g.rows, g)


def dual_code(code: LinearCode) -> LinearCode:
    """The [n, n-k] code of all vectors orthogonal to every codeword."""
    h = dual_generator(code.generator)
    return LinearCode(code.field, code.n, h.rows, h)


def enumerate_codewords(code: LinearCode, cap: int = DEFAULT_ENUM_CAP):
    """Yield all q^k codewords as tuples of element reps.

    Order is lexicographic in the message tuple (last coordinate varies
    fastest), so the all-zero word always comes first.  The cap is
    checked eagerly, before any iteration happens.
    """
    total = code.field.q ** code.k
    if total > cap:
        raise EnumerationCapError(total, cap)
    return _iter_codewords(code)


def _iter_codewords(code: LinearCode):
    field, n, k = code.field, code.n, code.k
    zero = (0,) * n
    if k == 0:
        yield zero
        return
    q = field.q
    mul = field.mul_rep
    add_table = field.add_table
    if add_table is not None:
        def vec_add(u, v):
            return tuple(add_table[a][b] for a, b in zip(u, v))
    else:
        add_rep = field.add_rep

        def vec_add(u, v):
            return tuple(add_rep(a, b) for a, b in zip(u, v))

    rows = code.generator.entries
    scaled = [[tuple(mul(c, e) for e in row) for c in range(q)] for row in rows]
    digits = [0] * k
    prefix = [zero] * (k + 1)
    yield zero
    while True:
        i = k - 1
        while i >= 0 and digits[i] == q - 1:
            digits[i] = 0
            i -= 1
        if i < 0:
            return
        digits[i] += 1
        for j in range(i, k):
            d = digits[j]
            prefix[j + 1] = vec_add(prefix[j], scaled[j][d]) if d else prefix[j]
        yield prefix[k]


def weight_distribution(code: LinearCode, cap: int = DEFAULT_ENUM_CAP) -> WeightDistribution:
    """Brute-force weight counts over all q^k codewords."""
    counts = [0] * (code.n + 1)
    for word in enumerate_codewords(code, cap):
        counts[sum(1 for e in word if e)] += 1
    return WeightDistribution(code.n, counts)


def enumerator_poly(w: WeightDistribution) -> HomoPoly:
    """Homogeneous degree-n polynomial whose x^(n-j) y^j coefficient is counts[j]."""
    return HomoPoly(w.n, w.counts)
