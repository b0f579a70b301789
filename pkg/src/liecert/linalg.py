"""Exact dense linear algebra over a FieldSpec.

Matrices are immutable (tuples of tuples).  Row reduction always produces
the unique reduced row-echelon form, which doubles as the canonical key for
subspaces.  Characteristic polynomials use the division-free Berkowitz
scheme so the same code path serves scalar matrices over any field and
matrices with multivariate-polynomial entries.
"""

from __future__ import annotations

from .errors import UsageError
from .fields import FieldSpec
from .polys import MPoly, UPoly


class Mat:
    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: FieldSpec, data):
        rows = tuple(tuple(field.coerce(x) for x in row) for row in data)
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise UsageError("ragged matrix")
        else:
            ncols = 0
        self.field = field
        self.rows = len(rows)
        self.cols = ncols
        self.data = rows

    @classmethod
    def from_raw(cls, field, rows, cols, data):
        m = object.__new__(cls)
        m.field = field
        m.rows = rows
        m.cols = cols
        m.data = data
        return m

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls.from_raw(
            field, n, n,
            tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)),
        )

    @classmethod
    def zeros(cls, field, rows, cols):
        z = field.zero
        return cls.from_raw(field, rows, cols, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def from_columns(cls, field, columns):
        if not columns:
            return cls.zeros(field, 0, 0)
        n = len(columns[0])
        return cls(field, [[col[i] for col in columns] for i in range(n)])

    # -- elementwise -------------------------------------------------------
    def add(self, other):
        f = self.field
        return Mat.from_raw(
            f, self.rows, self.cols,
            tuple(
                tuple(f.add(a, b) for a, b in zip(r1, r2))
                for r1, r2 in zip(self.data, other.data)
            ),
        )

    def sub(self, other):
        f = self.field
        return Mat.from_raw(
            f, self.rows, self.cols,
            tuple(
                tuple(f.sub(a, b) for a, b in zip(r1, r2))
                for r1, r2 in zip(self.data, other.data)
            ),
        )

    def scale(self, c):
        f = self.field
        return Mat.from_raw(
            f, self.rows, self.cols,
            tuple(tuple(f.mul(c, a) for a in row) for row in self.data),
        )

    def neg(self):
        return self.scale(self.field.neg(self.field.one))

    def mul(self, other):
        if self.cols != other.rows:
            raise UsageError("matrix size mismatch")
        f = self.field
        bt = tuple(zip(*other.data)) if other.data else ()
        out = []
        for row in self.data:
            new = []
            for col in bt:
                acc = f.zero
                for a, b in zip(row, col):
                    if a != f.zero and b != f.zero:
                        acc = f.add(acc, f.mul(a, b))
                new.append(acc)
            out.append(tuple(new))
        return Mat.from_raw(f, self.rows, other.cols, tuple(out))

    def apply(self, vec):
        """Matrix times column vector, returned as a tuple."""
        if len(vec) != self.cols:
            raise UsageError("vector size mismatch")
        f = self.field
        return tuple(
            _dot(f, row, vec) for row in self.data
        )

    def power(self, e: int):
        if self.rows != self.cols:
            raise UsageError("power of a non-square matrix")
        acc = Mat.identity(self.field, self.rows)
        base = self
        while e:
            if e & 1:
                acc = acc.mul(base)
            base = base.mul(base)
            e >>= 1
        return acc

    def transpose(self):
        return Mat.from_raw(
            self.field, self.cols, self.rows, tuple(zip(*self.data)) if self.data else ()
        )

    def trace(self):
        f = self.field
        acc = f.zero
        for i in range(min(self.rows, self.cols)):
            acc = f.add(acc, self.data[i][i])
        return acc

    @property
    def is_zero(self) -> bool:
        z = self.field.zero
        return all(x == z for row in self.data for x in row)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square and self.data == self.transpose().data

    def stack(self, other):
        return Mat.from_raw(
            self.field, self.rows + other.rows, self.cols, self.data + other.data
        )

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.field == other.field
            and self.data == other.data
            and self.cols == other.cols
        )

    def __hash__(self):
        return hash((self.field, self.cols, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"Mat[{self.rows}x{self.cols}: {body}]"

    def to_jsonable(self):
        return [[str(x) for x in row] for row in self.data]


def _dot(f, xs, ys):
    acc = f.zero
    for a, b in zip(xs, ys):
        if a != f.zero and b != f.zero:
            acc = f.add(acc, f.mul(a, b))
    return acc


# ---------------------------------------------------------------------------
# Gaussian elimination
# ---------------------------------------------------------------------------

def rref(field: FieldSpec, rows, ncols: int):
    """Reduced row-echelon form of a list of row tuples.

    Returns (rows, pivots): the nonzero rows of the unique RREF and the list
    of their pivot columns.
    """
    work = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(work)):
            if work[i][c] != field.zero:
                pr = i
                break
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = field.inv(work[r][c])
        work[r] = [field.mul(inv, x) for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != field.zero:
                factor = work[i][c]
                work[i] = [
                    field.sub(x, field.mul(factor, y))
                    for x, y in zip(work[i], work[r])
                ]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r]), pivots


def row_reduce(m: Mat):
    """RREF, rank and a canonical kernel basis.

    The kernel rows are themselves returned in reduced row-echelon form so
    rank + kernel rows = cols and the output is unique.
    """
    reduced, pivots = rref(m.field, m.data, m.cols)
    echelon = Mat.from_raw(m.field, len(reduced), m.cols, reduced)
    ker = kernel_rows(m.field, reduced, pivots, m.cols)
    ker_reduced, _ = rref(m.field, ker, m.cols)
    kernel = Mat.from_raw(m.field, len(ker_reduced), m.cols, ker_reduced)
    return echelon, len(pivots), kernel


def kernel_rows(field, reduced, pivots, ncols):
    """Null-space basis from an RREF: one row per free column."""
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for fc in free:
        vec = [field.zero] * ncols
        vec[fc] = field.one
        for r, pc in enumerate(pivots):
            vec[pc] = field.neg(reduced[r][fc])
        out.append(tuple(vec))
    return tuple(out)


def reduce_against(field, rows, pivots, vec):
    """Residual of vec after elimination by RREF rows; zero iff vec is in the span."""
    v = list(vec)
    for row, pc in zip(rows, pivots):
        c = v[pc]
        if c != field.zero:
            v = [field.sub(x, field.mul(c, y)) for x, y in zip(v, row)]
    return tuple(v)


def solve_right(m: Mat, target):
    """One solution x of m·x = target, or None.  Used for witness lifting."""
    f = m.field
    aug = [list(row) + [t] for row, t in zip(m.data, target)]
    reduced, pivots = rref(f, aug, m.cols + 1)
    if m.cols in pivots:
        return None
    x = [f.zero] * m.cols
    for row, pc in zip(reduced, pivots):
        x[pc] = row[-1]
    return tuple(x)


# ---------------------------------------------------------------------------
# Characteristic polynomial (Berkowitz, division-free)
# ---------------------------------------------------------------------------

class ScalarRing:
    """Adapter exposing ring operations of a FieldSpec."""

    __slots__ = ("field",)

    def __init__(self, field):
        self.field = field

    @property
    def zero(self):
        return self.field.zero

    @property
    def one(self):
        return self.field.one

    def add(self, a, b):
        return self.field.add(a, b)

    def mul(self, a, b):
        return self.field.mul(a, b)

    def neg(self, a):
        return self.field.neg(a)


class MPolyRing:
    """Ring adapter for MPoly entries (generic structure-constant matrices)."""

    __slots__ = ("field", "nvars")

    def __init__(self, field, nvars):
        self.field = field
        self.nvars = nvars

    @property
    def zero(self):
        return MPoly.zero(self.field, self.nvars)

    @property
    def one(self):
        return MPoly.constant(self.field, self.nvars, self.field.one)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a


def berkowitz(entries, ring):
    """Coefficients of det(x·I - A), lowest degree first, leading one last.

    ``entries`` is a list of rows of ring elements; the ring only needs
    zero/one/add/mul/neg, so this works verbatim over F_p and over
    polynomial rings.
    """
    n = len(entries)
    if n == 0:
        return [ring.one]
    # Descending coefficient vector of the 1x1 principal block.
    poly = [ring.one, ring.neg(entries[0][0])]
    for k in range(1, n):
        row = entries[k][:k]
        col = [entries[i][k] for i in range(k)]
        block = [r[:k] for r in entries[:k]]
        toeplitz = [ring.one, ring.neg(entries[k][k])]
        v = col
        for _ in range(k):
            toeplitz.append(ring.neg(_ring_dot(ring, row, v)))
            v = _ring_matvec(ring, block, v)
        new = []
        for i in range(k + 2):
            acc = ring.zero
            for j in range(max(0, i - k), min(i, k + 1) + 1):
                acc = ring.add(acc, ring.mul(toeplitz[j], poly[i - j]))
            new.append(acc)
        poly = new
    poly.reverse()
    return poly


def _ring_dot(ring, xs, ys):
    acc = ring.zero
    for a, b in zip(xs, ys):
        acc = ring.add(acc, ring.mul(a, b))
    return acc


def _ring_matvec(ring, m, v):
    return [_ring_dot(ring, row, v) for row in m]


def charpoly(m: Mat) -> UPoly:
    """Monic characteristic polynomial det(x·I - m)."""
    if not m.is_square:
        raise UsageError("characteristic polynomial of a non-square matrix")
    coeffs = berkowitz([list(r) for r in m.data], ScalarRing(m.field))
    return UPoly(m.field, coeffs)


def charpoly_generic(entries, field, nvars):
    """Characteristic polynomial of a matrix with MPoly entries.

    Returns the list [c_0, ..., c_n] of MPoly coefficients of x^i, with
    c_n = 1.
    """
    return berkowitz(entries, MPolyRing(field, nvars))


# ---------------------------------------------------------------------------
# Minimal polynomial
# ---------------------------------------------------------------------------

def minpoly(m: Mat):
    """(monic minimal polynomial, squarefree flag) of a square matrix.

    Found as the first linear dependency among the flattened powers
    I, m, m^2, ...; the squarefree flag is gcd(p, p') being constant, which
    characterises semisimplicity in characteristic zero.
    """
    if not m.is_square:
        raise UsageError("minimal polynomial of a non-square matrix")
    f = m.field
    n = m.rows
    if n == 0:
        return UPoly.one(f), True
    basis_rows: list[tuple] = []
    basis_pivots: list[int] = []
    combos: list[list] = []
    power = Mat.identity(f, n)
    k = 0
    while True:
        flat = tuple(x for row in power.data for x in row)
        # Reduce flat against the stored RREF rows, tracking the combination.
        combo = [f.zero] * (k + 1)
        combo[k] = f.one
        vec = list(flat)
        for row, pc, cmb in zip(basis_rows, basis_pivots, combos):
            c = vec[pc]
            if c != f.zero:
                vec = [f.sub(x, f.mul(c, y)) for x, y in zip(vec, row)]
                combo = [
                    f.sub(a, f.mul(c, b))
                    for a, b in zip(combo, cmb + [f.zero] * (len(combo) - len(cmb)))
                ]
        pivot = next((i for i, x in enumerate(vec) if x != f.zero), None)
        if pivot is None:
            # combo is the monic dependency: sum combo[i]·m^i = 0, combo[k] = 1.
            poly = UPoly(f, combo)
            return poly, poly.is_squarefree()
        inv = f.inv(vec[pivot])
        vec = [f.mul(inv, x) for x in vec]
        combo = [f.mul(inv, x) for x in combo]
        for i, (row, pc) in enumerate(zip(basis_rows, basis_pivots)):
            c = row[pivot]
            if c != f.zero:
                basis_rows[i] = tuple(
                    f.sub(x, f.mul(c, y)) for x, y in zip(row, vec)
                )
                old = combos[i] + [f.zero] * (len(combo) - len(combos[i]))
                combos[i] = [f.sub(a, f.mul(c, b)) for a, b in zip(old, combo)]
        basis_rows.append(tuple(vec))
        basis_pivots.append(pivot)
        combos.append(combo)
        power = power.mul(m)
        k += 1


# ---------------------------------------------------------------------------
# Symmetric forms
# ---------------------------------------------------------------------------

def congruent_diagonal(g: Mat):
    """Diagonalise a symmetric matrix by congruence.

    Returns (diag, p) with pᵀ·g·p diagonal; diag is the list of diagonal
    entries.  Works over any field of characteristic != 2.
    """
    if not g.is_symmetric():
        raise UsageError("congruent diagonalisation needs a symmetric matrix")
    f = g.field
    if not f.is_rationals and f.p == 2:
        raise UsageError("congruent diagonalisation unavailable over F_2")
    n = g.rows
    basis = [list(row) for row in Mat.identity(f, n).data]

    def form(u, v):
        return _dot(f, u, g.apply(v))

    for i in range(n):
        if form(basis[i], basis[i]) == f.zero:
            swap = next(
                (j for j in range(i + 1, n) if form(basis[j], basis[j]) != f.zero),
                None,
            )
            if swap is not None:
                basis[i], basis[swap] = basis[swap], basis[i]
            else:
                mate = next(
                    (j for j in range(i + 1, n) if form(basis[i], basis[j]) != f.zero),
                    None,
                )
                if mate is None:
                    continue  # row entirely isotropic against the rest: diag 0
                basis[i] = [f.add(a, b) for a, b in zip(basis[i], basis[mate])]
        d = form(basis[i], basis[i])
        for j in range(i + 1, n):
            c = f.div(form(basis[i], basis[j]), d)
            basis[j] = [f.sub(a, f.mul(c, b)) for a, b in zip(basis[j], basis[i])]
    p = Mat.from_columns(f, [tuple(b) for b in basis])
    diag = [form(b, b) for b in basis]
    return diag, p
