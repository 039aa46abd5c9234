"""Dense matrices over GF(q): row reduction, null spaces, dual generators.

Entries are stored as integer reps (see gf); matrices are immutable
tuples-of-tuples, so all operations return fresh values.
"""

from __future__ import annotations

from .gf import FiniteField


class MatrixGF:
    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: FiniteField, entries, cols: int | None = None):
        rows = [tuple(r) for r in entries]
        if rows:
            ncols = len(rows[0])
            if cols is not None and cols != ncols:
                raise ValueError(f"cols={cols} but rows have length {ncols}")
        else:
            if cols is None:
                raise ValueError("cols is required for a matrix with no rows")
            ncols = cols
        if ncols < 1:
            raise ValueError("a matrix needs at least one column")
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            for e in r:
                if not isinstance(e, int) or not 0 <= e < field.q:
                    raise ValueError(f"entry {e!r} is not an element rep of {field}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "entries", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("MatrixGF is immutable")

    def __eq__(self, other):
        if not isinstance(other, MatrixGF):
            return NotImplemented
        return (self.field, self.cols, self.entries) == (other.field, other.cols, other.entries)

    def __hash__(self):
        return hash((self.field, self.cols, self.entries))

    def __repr__(self):
        return f"MatrixGF({self.field!r}, {self.rows}x{self.cols})"

    def __str__(self):
        return "\n".join(" ".join(str(e) for e in row) for row in self.entries)


def identity_matrix(field: FiniteField, n: int) -> MatrixGF:
    return MatrixGF(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])


def transpose(m: MatrixGF) -> MatrixGF:
    if m.rows == 0:
        raise ValueError("cannot transpose a matrix with no rows")
    return MatrixGF(m.field, list(zip(*m.entries)), cols=m.rows)


def mat_mul(a: MatrixGF, b: MatrixGF) -> MatrixGF:
    if a.field != b.field:
        raise ValueError("mixed-field matrices")
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch: {a.cols} vs {b.rows}")
    f = a.field
    add, mul = f.add_rep, f.mul_rep
    bt = list(zip(*b.entries))
    out = []
    for row in a.entries:
        new = []
        for col in bt:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = add(acc, mul(x, y))
            new.append(acc)
        out.append(new)
    return MatrixGF(f, out, cols=b.cols)


def rref(m: MatrixGF) -> tuple[MatrixGF, int, list[int]]:
    """Reduced row echelon form; returns (matrix, rank, pivot columns)."""
    f = m.field
    rows = [list(r) for r in m.entries]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        pivot_row = next((i for i in range(r, m.rows) if rows[i][c]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = f.inv_rep(rows[r][c])
        if inv != 1:
            rows[r] = [f.mul_rep(inv, e) for e in rows[r]]
        for i in range(m.rows):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [f.sub_rep(x, f.mul_rep(factor, y))
                           for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return MatrixGF(f, rows, cols=m.cols), r, pivots


def rank(m: MatrixGF) -> int:
    return rref(m)[1]


def nullspace_basis(m: MatrixGF) -> MatrixGF:
    """Basis of the right kernel {v : M v^T = 0}, one row per free column."""
    red, rk, pivots = rref(m)
    f = m.field
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [0] * m.cols
        v[free] = 1
        for i, pc in enumerate(pivots):
            v[pc] = f.neg_rep(red.entries[i][free])
        basis.append(v)
    return MatrixGF(f, basis, cols=m.cols)


def dual_generator(g: MatrixGF) -> MatrixGF:
    """Generator of the dual code: full-row-rank H with G H^T = 0.

    G must itself have full row rank so the reported dimensions stay
    honest; a 0-row G (the zero code) dualizes to the identity.
    """
    _, rk, _ = rref(g)
    if rk != g.rows:
        raise ValueError(f"generator is rank-deficient: rank {rk} < {g.rows} rows")
    return nullspace_basis(g)


def same_row_space(a: MatrixGF, b: MatrixGF) -> bool:
    """Compare row spaces via their rref canonical forms."""
    if a.field != b.field or a.cols != b.cols:
        return False
    ra = [row for row in rref(a)[0].entries if any(row)]
    rb = [row for row in rref(b)[0].entries if any(row)]
    return ra == rb
