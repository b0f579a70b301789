"""The Lie-algebra data model.

A LieAlgebra is a dimension, a field and an antisymmetric structure-constant
table stored sparsely for i < j; [e_j, e_i] is materialised by negation on
demand.  Validation checks every Jacobi triple and reports all violations.
Subspaces carry a canonical reduced-echelon basis inside their ambient
algebra, so two subspaces are equal iff their basis matrices are identical.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import verdict
from .errors import (
    BadScalar,
    IndexOutOfRange,
    JacobiViolation,
    NotAnIdeal,
    NotARepresentation,
    PositiveCharacteristic,
    UsageError,
)
from .factor import factorization
from .fields import FieldSpec
from .linalg import Mat, minpoly, reduce_against, rref, row_reduce
from .polys import UPoly


class LieAlgebra:
    """A finite-dimensional Lie algebra presented by structure constants."""

    __slots__ = ("field", "dim", "brackets", "labels", "_cache")

    def __init__(self, field: FieldSpec, dim: int, brackets, labels=None):
        self.field = field
        self.dim = dim
        table = {}
        for (i, j), vec in brackets.items():
            vec = tuple(vec)
            if any(c != field.zero for c in vec):
                table[(i, j)] = vec
        self.brackets = table
        self.labels = tuple(labels) if labels else None
        self._cache = {}

    # -- bracket machinery ---------------------------------------------------
    def basis_bracket(self, i: int, j: int) -> tuple:
        """[e_i, e_j] as a coordinate vector, for any i, j."""
        if i == j:
            return (self.field.zero,) * self.dim
        if i < j:
            return self.brackets.get((i, j), (self.field.zero,) * self.dim)
        vec = self.brackets.get((j, i))
        if vec is None:
            return (self.field.zero,) * self.dim
        return tuple(self.field.neg(c) for c in vec)

    def bracket(self, x, y) -> tuple:
        f = self.field
        out = [f.zero] * self.dim
        for i, xi in enumerate(x):
            if xi == f.zero:
                continue
            for j, yj in enumerate(y):
                if yj == f.zero or i == j:
                    continue
                w = self.basis_bracket(i, j)
                c = f.mul(xi, yj)
                for k, wk in enumerate(w):
                    if wk != f.zero:
                        out[k] = f.add(out[k], f.mul(c, wk))
        return tuple(out)

    def ad(self, x) -> Mat:
        """Matrix of y -> [x, y]; column j is [x, e_j]."""
        if len(x) != self.dim:
            raise UsageError("vector dimension mismatch")
        f = self.field
        x = tuple(f.coerce(c) for c in x)
        cols = []
        for j in range(self.dim):
            col = [f.zero] * self.dim
            for i, xi in enumerate(x):
                if xi == f.zero or i == j:
                    continue
                w = self.basis_bracket(i, j)
                for k, wk in enumerate(w):
                    if wk != f.zero:
                        col[k] = f.add(col[k], f.mul(xi, wk))
            cols.append(tuple(col))
        return Mat.from_columns(f, cols)

    def basis_vector(self, i: int) -> tuple:
        f = self.field
        return tuple(f.one if k == i else f.zero for k in range(self.dim))

    @property
    def is_abelian(self) -> bool:
        return not self.brackets

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"e{i}"

    def __eq__(self, other):
        return (
            isinstance(other, LieAlgebra)
            and self.field == other.field
            and self.dim == other.dim
            and self.brackets == other.brackets
            and self.labels == other.labels
        )

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, field={self.field!r})"


def validate(dim: int, field: FieldSpec, brackets, labels=None) -> LieAlgebra:
    """Build a LieAlgebra after checking indices, scalars and Jacobi.

    ``brackets`` maps pairs (i, j) with i < j to sparse maps {k: scalar}.
    Every violated Jacobi triple is reported at once.
    """
    if dim < 0:
        raise UsageError("negative dimension")
    if labels is not None and len(labels) != dim:
        raise UsageError("label list length differs from dimension")
    table = {}
    for key, entry in brackets.items():
        i, j = key
        if not (0 <= i < j < dim):
            raise IndexOutOfRange(f"bracket pair ({i},{j}) out of range for dim {dim}")
        vec = [field.zero] * dim
        for k, value in entry.items():
            k = int(k)
            if not 0 <= k < dim:
                raise IndexOutOfRange(f"target index {k} out of range in ({i},{j})")
            try:
                vec[k] = field.coerce(value)
            except BadScalar:
                raise
        table[(i, j)] = tuple(vec)
    alg = LieAlgebra(field, dim, table, labels)
    violations = []
    zero = (field.zero,) * dim
    for i in range(dim):
        ei = alg.basis_vector(i)
        for j in range(i + 1, dim):
            ej = alg.basis_vector(j)
            for k in range(j + 1, dim):
                ek = alg.basis_vector(k)
                t1 = alg.bracket(alg.basis_bracket(i, j), ek)
                t2 = alg.bracket(alg.basis_bracket(j, k), ei)
                t3 = alg.bracket(alg.basis_bracket(k, i), ej)
                residual = tuple(
                    field.add(a, field.add(b, c)) for a, b, c in zip(t1, t2, t3)
                )
                if residual != zero:
                    violations.append((i, j, k, residual))
    if violations:
        raise JacobiViolation(violations)
    return alg


# ---------------------------------------------------------------------------
# Subspaces
# ---------------------------------------------------------------------------

class Subspace:
    """A subspace of the ambient algebra with canonical echelon basis."""

    __slots__ = ("ambient", "rows", "pivots")

    def __init__(self, ambient: LieAlgebra, vectors):
        field = ambient.field
        coerced = [tuple(field.coerce(c) for c in v) for v in vectors]
        for v in coerced:
            if len(v) != ambient.dim:
                raise UsageError("vector dimension mismatch")
        rows, pivots = rref(field, coerced, ambient.dim)
        self.ambient = ambient
        self.rows = rows
        self.pivots = tuple(pivots)

    @classmethod
    def zero(cls, ambient):
        return cls(ambient, [])

    @classmethod
    def full(cls, ambient):
        return cls(ambient, [ambient.basis_vector(i) for i in range(ambient.dim)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec) -> tuple:
        return reduce_against(self.ambient.field, self.rows, self.pivots, vec)

    def contains(self, vec) -> bool:
        z = self.ambient.field.zero
        return all(c == z for c in self.reduce(vec))

    def contains_subspace(self, other) -> bool:
        return all(self.contains(r) for r in other.rows)

    def coords(self, vec):
        """Coordinates of vec in the echelon basis, or None if outside."""
        if not self.contains(vec):
            return None
        return tuple(vec[p] for p in self.pivots)

    def embed(self, coords) -> tuple:
        """Map coordinates in the echelon basis back to an ambient vector."""
        f = self.ambient.field
        out = [f.zero] * self.ambient.dim
        for c, row in zip(coords, self.rows):
            if c != f.zero:
                for k, x in enumerate(row):
                    if x != f.zero:
                        out[k] = f.add(out[k], f.mul(c, x))
        return tuple(out)

    def add(self, other) -> "Subspace":
        return Subspace(self.ambient, list(self.rows) + list(other.rows))

    def intersect(self, other) -> "Subspace":
        # w = a·self = b·other: kernel of [selfᵀ | -otherᵀ] stacked columnwise.
        f = self.ambient.field
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient)
        n = self.ambient.dim
        rows = []
        for k in range(n):
            rows.append(
                tuple(r[k] for r in self.rows)
                + tuple(f.neg(r[k]) for r in other.rows)
            )
        m = Mat.from_raw(f, n, self.dim + other.dim, tuple(rows))
        _, _, ker = row_reduce(m)
        vecs = [self.embed(sol[: self.dim]) for sol in ker.data]
        return Subspace(self.ambient, vecs)

    def key(self) -> tuple:
        return self.rows

    def basis_mat(self) -> Mat:
        return Mat.from_raw(
            self.ambient.field, self.dim, self.ambient.dim, self.rows
        )

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient is other.ambient
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.ambient.dim})"

    def to_jsonable(self):
        return [[str(c) for c in row] for row in self.rows]


def kernel_subspace(L: LieAlgebra, rows) -> Subspace:
    """Subspace {x : M x = 0} for the constraint matrix given by rows."""
    f = L.field
    if not rows:
        return Subspace.full(L)
    m = Mat.from_raw(f, len(rows), L.dim, tuple(tuple(r) for r in rows))
    _, _, ker = row_reduce(m)
    return Subspace(L, ker.data)


# ---------------------------------------------------------------------------
# Subalgebra machinery
# ---------------------------------------------------------------------------

def bracket_span(L: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    vecs = [L.bracket(u, v) for u in a.rows for v in b.rows]
    return Subspace(L, vecs)


def closure(L: LieAlgebra, generators, mode: str = "subalgebra") -> Subspace:
    """Smallest subalgebra (or ideal) containing the generators.

    Iterates bracket-and-echelon to a fixpoint; at most dim rounds since the
    dimension strictly grows until stable.
    """
    if mode not in ("subalgebra", "ideal"):
        raise UsageError(f"unknown closure mode {mode!r}")
    f = L.field
    current = Subspace(L, [tuple(f.coerce(c) for c in g) for g in generators])
    while True:
        if mode == "subalgebra":
            new_vecs = [
                L.bracket(u, v)
                for idx, u in enumerate(current.rows)
                for v in current.rows[idx + 1 :]
            ]
        else:
            new_vecs = [
                L.bracket(L.basis_vector(i), v)
                for i in range(L.dim)
                for v in current.rows
            ]
        grown = Subspace(L, list(current.rows) + new_vecs)
        if grown.dim == current.dim:
            return grown
        current = grown


def is_subalgebra(L: LieAlgebra, s: Subspace) -> bool:
    return all(
        s.contains(L.bracket(u, v))
        for idx, u in enumerate(s.rows)
        for v in s.rows[idx + 1 :]
    )


def is_ideal(L: LieAlgebra, s: Subspace) -> bool:
    return all(
        s.contains(L.bracket(L.basis_vector(i), v))
        for i in range(L.dim)
        for v in s.rows
    )


def centralizer(L: LieAlgebra, s: Subspace) -> Subspace:
    """{v : [v, x] = 0 for every basis x of s}; one kernel computation."""
    rows = []
    for x in s.rows:
        # [v, x] = sum_i v_i [e_i, x]; one constraint row per output coord.
        cols = [L.bracket(L.basis_vector(i), x) for i in range(L.dim)]
        for k in range(L.dim):
            rows.append(tuple(cols[i][k] for i in range(L.dim)))
    return kernel_subspace(L, rows)


def center(L: LieAlgebra) -> Subspace:
    return centralizer(L, Subspace.full(L))


def normalizer(L: LieAlgebra, s: Subspace) -> Subspace:
    """{y : [y, x] in s for every basis x of s}."""
    rows = []
    for x in s.rows:
        cols = [s.reduce(L.bracket(L.basis_vector(i), x)) for i in range(L.dim)]
        for k in range(L.dim):
            rows.append(tuple(cols[i][k] for i in range(L.dim)))
    return kernel_subspace(L, rows)


def subalgebra(L: LieAlgebra, s: Subspace) -> tuple[LieAlgebra, Subspace]:
    """Restrict the bracket to a bracket-closed subspace.

    Returns the abstract algebra on the echelon basis of s together with s
    itself (whose rows embed the new basis into the ambient algebra).
    """
    f = L.field
    table = {}
    for a in range(s.dim):
        for b in range(a + 1, s.dim):
            w = L.bracket(s.rows[a], s.rows[b])
            coords = s.coords(w)
            if coords is None:
                raise UsageError("subspace is not closed under the bracket")
            table[(a, b)] = {k: c for k, c in enumerate(coords) if c != f.zero}
    return validate(s.dim, f, table), s


def restrict_operator(op: Mat, s: Subspace) -> Mat:
    """Matrix of an operator on an invariant subspace, in the echelon basis."""
    cols = []
    for row in s.rows:
        image = op.apply(row)
        coords = s.coords(image)
        if coords is None:
            raise UsageError("subspace is not invariant under the operator")
        cols.append(coords)
    return Mat.from_columns(s.ambient.field, cols)


# ---------------------------------------------------------------------------
# Series, Killing form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SeriesReport:
    derived_dims: tuple
    lower_central_dims: tuple
    solvable: bool
    nilpotent: bool
    last_nonzero_derived: Subspace

    @property
    def abelian(self) -> bool:
        return len(self.derived_dims) <= 1 or self.derived_dims[1] == 0

    def to_jsonable(self):
        return {
            "derived_dims": list(self.derived_dims),
            "lower_central_dims": list(self.lower_central_dims),
            "solvable": self.solvable,
            "nilpotent": self.nilpotent,
        }


def series(L: LieAlgebra) -> SeriesReport:
    """Derived and lower central series, stabilised."""
    full = Subspace.full(L)
    derived_chain = [full]
    dims = [full.dim]
    while True:
        nxt = bracket_span(L, derived_chain[-1], derived_chain[-1])
        derived_chain.append(nxt)
        dims.append(nxt.dim)
        if nxt.dim == 0 or nxt.dim == dims[-2]:
            break
    lower = [full]
    ldims = [full.dim]
    while True:
        nxt = bracket_span(L, full, lower[-1])
        lower.append(nxt)
        ldims.append(nxt.dim)
        if nxt.dim == 0 or nxt.dim == ldims[-2]:
            break
    if L.dim == 0:
        dims, ldims = [0], [0]
    last_nonzero = next(
        (s for s in reversed(derived_chain) if s.dim > 0), Subspace.zero(L)
    )
    return SeriesReport(
        derived_dims=tuple(dims),
        lower_central_dims=tuple(ldims),
        solvable=dims[-1] == 0,
        nilpotent=ldims[-1] == 0,
        last_nonzero_derived=last_nonzero,
    )


def derived_subalgebra(L: LieAlgebra) -> Subspace:
    full = Subspace.full(L)
    return bracket_span(L, full, full)


@dataclass(frozen=True)
class KillingReport:
    gram: Mat
    rank: int
    radical: Subspace | None
    semisimple: bool | None
    reductive: bool | None

    def to_jsonable(self):
        out = {"gram": self.gram.to_jsonable(), "rank": self.rank}
        if self.radical is not None:
            out["radical"] = self.radical.to_jsonable()
            out["semisimple"] = self.semisimple
            out["reductive"] = self.reductive
        return out


def killing(L: LieAlgebra) -> KillingReport:
    """Killing form B(x,y) = tr(ad x · ad y) with the derived invariants.

    The solvable radical (the B-orthogonal complement of [L, L]) and the
    semisimple/reductive flags rest on characteristic-zero theory, so over
    F_p only the gram matrix and its rank are populated.
    """
    f = L.field
    ads = [L.ad(L.basis_vector(i)) for i in range(L.dim)]
    gram_rows = []
    for i in range(L.dim):
        row = []
        for j in range(L.dim):
            row.append(ads[i].mul(ads[j]).trace())
        gram_rows.append(tuple(row))
    gram = Mat.from_raw(f, L.dim, L.dim, tuple(gram_rows))
    _, rank, _ = row_reduce(gram)
    if not f.is_rationals:
        return KillingReport(gram, rank, None, None, None)
    derived = derived_subalgebra(L)
    constraint_rows = [gram.apply(d) for d in derived.rows]
    radical = kernel_subspace(L, constraint_rows)
    semisimple = rank == L.dim
    reductive = radical == center(L)
    return KillingReport(gram, rank, radical, semisimple, reductive)


def radical(L: LieAlgebra) -> Subspace:
    if not L.field.is_rationals:
        from .errors import RadicalUnavailableInPositiveCharacteristic

        raise RadicalUnavailableInPositiveCharacteristic(
            "the radical computation needs characteristic zero"
        )
    return killing(L).radical


# ---------------------------------------------------------------------------
# Sums and quotients
# ---------------------------------------------------------------------------

def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    if a.field != b.field:
        raise UsageError("direct sum over different fields")
    f = a.field
    table = {}
    for (i, j), vec in a.brackets.items():
        table[(i, j)] = {k: c for k, c in enumerate(vec) if c != f.zero}
    off = a.dim
    for (i, j), vec in b.brackets.items():
        table[(i + off, j + off)] = {
            k + off: c for k, c in enumerate(vec) if c != f.zero
        }
    labels = None
    if a.labels and b.labels:
        labels = list(a.labels) + list(b.labels)
    return validate(a.dim + b.dim, f, table, labels)


def abelian_algebra(field: FieldSpec, dim: int) -> LieAlgebra:
    return validate(dim, field, {})


def semidirect_sum(s: LieAlgebra, rho: list, module_dim: int) -> LieAlgebra:
    """S acting on an abelian ideal V through matrices rho[i] = action of s_i.

    The representation-homomorphism property rho([s_i,s_j]) =
    [rho(s_i), rho(s_j)] is verified before any structure constants are
    written down.
    """
    f = s.field
    if len(rho) != s.dim:
        raise UsageError("one action matrix per basis element required")
    mats = [m if isinstance(m, Mat) else Mat(f, m) for m in rho]
    for m in mats:
        if m.rows != module_dim or m.cols != module_dim:
            raise UsageError("action matrix of wrong size")
    bad = []
    for i in range(s.dim):
        for j in range(i + 1, s.dim):
            w = s.basis_bracket(i, j)
            expected = Mat.zeros(f, module_dim, module_dim)
            for k, c in enumerate(w):
                if c != f.zero:
                    expected = expected.add(mats[k].scale(c))
            commutator = mats[i].mul(mats[j]).sub(mats[j].mul(mats[i]))
            if expected != commutator:
                bad.append((i, j))
    if bad:
        raise NotARepresentation(bad)
    table = {}
    for (i, j), vec in s.brackets.items():
        table[(i, j)] = {k: c for k, c in enumerate(vec) if c != f.zero}
    for i in range(s.dim):
        for a in range(module_dim):
            col = tuple(mats[i].data[r][a] for r in range(module_dim))
            entry = {s.dim + r: c for r, c in enumerate(col) if c != f.zero}
            if entry:
                table[(i, s.dim + a)] = entry
    return validate(s.dim + module_dim, f, table)


def quotient(L: LieAlgebra, ideal: Subspace) -> LieAlgebra:
    """Quotient by a verified ideal, on the non-pivot coordinates."""
    if not is_ideal(L, ideal):
        raise NotAnIdeal("subspace does not absorb brackets")
    f = L.field
    complement = [c for c in range(L.dim) if c not in ideal.pivots]
    table = {}
    for a, ca in enumerate(complement):
        for b in range(a + 1, len(complement)):
            cb = complement[b]
            w = ideal.reduce(L.bracket(L.basis_vector(ca), L.basis_vector(cb)))
            entry = {
                complement.index(k): w[k]
                for k in complement
                if w[k] != f.zero
            }
            if entry:
                table[(a, b)] = entry
    return validate(len(complement), f, table)


# ---------------------------------------------------------------------------
# Centroid-based simplicity
# ---------------------------------------------------------------------------

def centroid(L: LieAlgebra) -> list[Mat]:
    """Basis of {phi : phi[x,y] = [phi x, y] for all x, y}.

    By antisymmetry the one-sided condition on basis pairs already pins the
    two-sided centroid.  Solved as a single kernel computation in the n^2
    matrix entries.
    """
    f = L.field
    n = L.dim
    if n == 0:
        return []
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            w = L.basis_bracket(i, j)
            ad_images = [L.basis_bracket(a, j) for a in range(n)]
            for k in range(n):
                row = [f.zero] * (n * n)
                for b in range(n):
                    row[k * n + b] = f.add(row[k * n + b], w[b])
                for a in range(n):
                    row[a * n + i] = f.sub(row[a * n + i], ad_images[a][k])
                rows.append(tuple(row))
    if not rows:
        return [Mat.identity(f, n)]
    m = Mat.from_raw(f, len(rows), n * n, tuple(rows))
    _, _, ker = row_reduce(m)
    out = []
    for sol in ker.data:
        data = tuple(tuple(sol[r * n + c] for c in range(n)) for r in range(n))
        out.append(Mat.from_raw(f, n, n, data))
    return out


def _poly_xgcd(a: UPoly, b: UPoly):
    f = a.field
    r0, r1 = a, b
    s0, s1 = UPoly.one(f), UPoly.zero(f)
    t0, t1 = UPoly.zero(f), UPoly.one(f)
    while not r1.is_zero:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    lead = r0.leading
    inv = f.inv(lead)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def simplicity_status(L: LieAlgebra) -> verdict.TriState:
    """Is L simple?  Certified through the centroid.

    Requires semisimplicity (characteristic zero); otherwise FALSE with the
    radical as witness.  Centroid of dimension one certifies central
    simplicity; a nontrivial centroid idempotent yields a proper ideal
    witness; anything else is UNKNOWN.
    """
    if not L.field.is_rationals:
        raise PositiveCharacteristic("simplicity analysis needs Q")
    if L.dim == 0:
        return verdict.false({"kind": "abelian"}, note="the zero algebra")
    kil = killing(L)
    if not kil.semisimple:
        return verdict.false(
            {"kind": "radical_nonzero", "radical": kil.radical},
            note="not semisimple",
        )
    basis = centroid(L)
    if len(basis) == 1:
        return verdict.true(
            {"kind": "centroid", "dimension": 1}, note="central simple"
        )
    candidates = list(basis)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            candidates.append(basis[i].add(basis[j]))
    incomplete = False
    for phi in candidates[:24]:
        mp, _ = minpoly(phi)
        fac = factorization(mp)
        if not fac.complete:
            incomplete = True
            continue
        if len(fac.factors) < 2:
            continue
        g0, m0 = fac.factors[0]
        f1 = g0
        for _ in range(m0 - 1):
            f1 = f1 * g0
        f2 = mp // f1
        gcd_, u, _v = _poly_xgcd(f1, f2)
        if gcd_.degree != 0:
            continue
        e = (u * f1).eval_matrix(phi)
        n = L.dim
        if e.is_zero or e == Mat.identity(L.field, n):
            continue
        if e.mul(e) != e:
            continue
        image = Subspace(L, [tuple(col) for col in zip(*e.data)])
        if 0 < image.dim < n and is_ideal(L, image):
            return verdict.false(
                {
                    "kind": "centroid_idempotent",
                    "ideal": image,
                    "idempotent": e,
                },
                note="proper ideal from a centroid idempotent",
            )
    return verdict.unknown(
        {
            "kind": "centroid_inconclusive",
            "centroid_dim": len(basis),
            "factorization_incomplete": incomplete,
        },
        note="centroid has dimension > 1 but no idempotent was certified",
    )
