"""Per-element and whole-algebra spectral analysis.

Covers semisimplicity of adjoint operators, Fitting components, the rank of
an algebra via a fully symbolic generic element, regular elements and
Cartan subalgebras, plus the certified/sampled deciders for anisotropy
(every ad x semisimple) and regularity (every nonzero element regular).

Sampled searches enumerate vectors in the deterministic height order of
:mod:`liecert.sampling`; the reported witness is always the first in that
order.  Identically-zero generic coefficients are certified by the sparse
representation being empty, never by sampling.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import quat, sampling, verdict
from .core import (
    LieAlgebra,
    Subspace,
    center,
    centralizer,
    derived_subalgebra,
    is_subalgebra,
    killing,
    series,
    simplicity_status,
    subalgebra,
)
from .errors import (
    DimensionBudgetExceeded,
    NotRegular,
    PositiveCharacteristic,
    UsageError,
)
from .linalg import Mat, charpoly, charpoly_generic, minpoly, row_reduce
from .polys import MPoly, UPoly
from .verdict import DEFAULT_BUDGET, SearchBudget

#: symbolic rank computations refuse larger algebras by default
RANK_DIMENSION_BOUND = 8


# ---------------------------------------------------------------------------
# Element reports and Fitting components
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ElementReport:
    charpoly: UPoly
    minpoly: UPoly
    semisimple: bool
    nilpotent: bool
    regular: bool | None
    fitting0_dim: int

    def to_jsonable(self):
        return {
            "charpoly": str(self.charpoly),
            "minpoly": str(self.minpoly),
            "semisimple": self.semisimple,
            "nilpotent": self.nilpotent,
            "regular": self.regular,
            "fitting0_dim": self.fitting0_dim,
        }


def fitting0_dim(L: LieAlgebra, x) -> int:
    a = L.ad(x)
    _, r, _ = row_reduce(a.power(L.dim))
    return L.dim - r


def element_report(L: LieAlgebra, x) -> ElementReport:
    """Exact spectral data of one element.

    ``regular`` compares the generalized null space dimension with the
    symbolic rank; it is None when the rank computation is out of budget.
    """
    if len(x) != L.dim:
        raise UsageError("vector dimension mismatch")
    a = L.ad(x)
    cp = charpoly(a)
    mp, squarefree = minpoly(a)
    f0 = fitting0_dim(L, x)
    nilpotent = cp == UPoly(L.field, [L.field.zero] * L.dim + [L.field.one])
    try:
        r = rank(L).rank
        regular: bool | None = f0 == r
    except DimensionBudgetExceeded:
        regular = None
    return ElementReport(
        charpoly=cp,
        minpoly=mp,
        semisimple=squarefree,
        nilpotent=nilpotent,
        regular=regular,
        fitting0_dim=f0,
    )


def fitting(L: LieAlgebra, generators) -> tuple[Subspace, Subspace]:
    """Fitting decomposition with respect to a family of adjoint operators.

    For one generator x this is ker((ad x)^n) and im((ad x)^n).  For several
    the null component is the largest subspace, invariant under every ad g,
    on which each acts nilpotently: the intersection of the generalized null
    spaces refined to invariance by a fixpoint iteration.
    """
    gens = [tuple(L.field.coerce(c) for c in g) for g in generators]
    if not gens:
        return Subspace.full(L), Subspace.zero(L)
    n = L.dim
    powers = [L.ad(g).power(n) for g in gens]
    null = Subspace.full(L)
    for p in powers:
        _, _, ker = row_reduce(p)
        null = null.intersect(Subspace(L, ker.data))
    while True:
        # invariance refinement: keep v with (ad g) v still inside
        refined = null
        for g in gens:
            a = L.ad(g)
            rows = []
            for i in range(n):
                img = refined.reduce(a.apply(L.basis_vector(i)))
                rows.append(img)
            constraint = []
            for k in range(n):
                constraint.append(tuple(rows[i][k] for i in range(n)))
            from .core import kernel_subspace

            refined = refined.intersect(kernel_subspace(L, constraint))
        if refined.dim == null.dim:
            break
        null = refined
    one_vectors = []
    for p in powers:
        for j in range(n):
            one_vectors.append(tuple(p.data[i][j] for i in range(n)))
    one = Subspace(L, one_vectors)
    return null, one


# ---------------------------------------------------------------------------
# Rank via the generic element
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RankCertificate:
    rank: int
    coefficient: MPoly
    witness_point: tuple | None
    witness_value: object
    vanished_below: bool

    def to_jsonable(self):
        return {
            "rank": self.rank,
            "coefficient": self.coefficient.to_jsonable(),
            "witness_point": None
            if self.witness_point is None
            else [str(c) for c in self.witness_point],
            "witness_value": str(self.witness_value),
            "vanished_below": self.vanished_below,
        }


def rank(L: LieAlgebra, max_dim: int = RANK_DIMENSION_BOUND) -> RankCertificate:
    """Least index r with the generic characteristic coefficient c_r not
    identically zero, with a point witnessing c_r != 0.

    Builds M(t) = sum t_i ad(e_i) over polynomial entries and runs the
    division-free characteristic polynomial; the result is cached on the
    algebra.
    """
    cached = L._cache.get("rank")
    if cached is not None:
        return cached
    n = L.dim
    if n > max_dim:
        raise DimensionBudgetExceeded(
            f"symbolic rank limited to dimension {max_dim}, got {n}"
        )
    f = L.field
    if n == 0:
        cert = RankCertificate(0, MPoly.constant(f, 0, f.one), (), f.one, True)
        L._cache["rank"] = cert
        return cert
    entries = [
        [MPoly.zero(f, n) for _ in range(n)] for _ in range(n)
    ]
    for i in range(n):
        a = L.ad(L.basis_vector(i))
        for r in range(n):
            for c in range(n):
                v = a.data[r][c]
                if v != f.zero:
                    term = MPoly(f, n, {_unit_exp(n, i): v})
                    entries[r][c] = entries[r][c] + term
    coeffs = charpoly_generic(entries, f, n)
    r = next(i for i, c in enumerate(coeffs) if not c.is_zero)
    coeff = coeffs[r]
    witness_point = None
    witness_value = f.zero
    if f.is_rationals:
        max_h = max(1, coeff.total_degree() + 1)
        for point in sampling.vectors(f, n, max_h, 200_000):
            value = coeff.eval(point)
            if value != f.zero:
                witness_point, witness_value = point, value
                break
    else:
        for point in sampling.vectors(f, n, f.p - 1, f.p ** n):
            value = coeff.eval(point)
            if value != f.zero:
                witness_point, witness_value = point, value
                break
    cert = RankCertificate(
        rank=r,
        coefficient=coeff,
        witness_point=witness_point,
        witness_value=witness_value,
        vanished_below=all(coeffs[i].is_zero for i in range(r)),
    )
    L._cache["rank"] = cert
    return cert


def _unit_exp(n, i):
    e = [0] * n
    e[i] = 1
    return tuple(e)


# ---------------------------------------------------------------------------
# Cartan subalgebras from regular elements
# ---------------------------------------------------------------------------

def cartan_from_regular(L: LieAlgebra, x) -> Subspace:
    """The Fitting null component of a regular element, certified Cartan.

    Checks that the component is a nilpotent subalgebra H with
    fitting(L, H).null = H before returning it.
    """
    report = element_report(L, x)
    if report.regular is not True:
        raise NotRegular(f"element {x} is not regular")
    null, _ = fitting(L, [x])
    if not is_subalgebra(L, null):
        raise NotRegular("Fitting null component is not a subalgebra")
    sub, _ = subalgebra(L, null)
    if not series(sub).nilpotent:
        raise NotRegular("Fitting null component is not nilpotent")
    refit, _ = fitting(L, list(null.rows))
    if refit != null:
        raise NotRegular("self-normalising check failed")
    return null


# ---------------------------------------------------------------------------
# Anisotropy
# ---------------------------------------------------------------------------

def anisotropy_status(
    L: LieAlgebra, budget: SearchBudget = DEFAULT_BUDGET
) -> verdict.TriState:
    """Is every adjoint operator semisimple?

    Decision ladder: abelian algebras are trivially anisotropic; a radical
    different from the center refutes (a witness with square-zero adjoint
    exists in the last nonzero derived term of the radical, else by search);
    3-dimensional central simple algebras are decided exactly through the
    isotropy of the Killing form; direct sums recurse; everything else is a
    height-ordered search for a non-squarefree minimal polynomial.
    """
    if not L.field.is_rationals:
        raise PositiveCharacteristic("anisotropy decision needs Q")
    ser = series(L)
    if ser.abelian:
        return verdict.true({"kind": "abelian"}, note="abelian, all ad x = 0")
    kil = killing(L)
    z = center(L)
    if kil.radical != z:
        status = _witness_in_abelian_ideal(L, kil.radical)
        if status is not None:
            return status
        return _search_non_semisimple(L, budget)
    if z.dim > 0:
        return _split_off_center(L, z, budget, anisotropy_status)
    return _anisotropy_semisimple(L, budget)


def _witness_in_abelian_ideal(L, rad: Subspace):
    """A noncentral element of the last derived term of the radical has
    (ad x)^2 = 0 and ad x != 0, hence a non-squarefree minimal polynomial."""
    if rad.dim == 0:
        return None
    sub, embed = subalgebra(L, rad)
    term = series(sub).last_nonzero_derived
    for row in term.rows:
        x = embed.embed(row) if term.ambient is sub else row
        a = L.ad(x)
        if not a.is_zero:
            mp, squarefree = minpoly(a)
            if not squarefree:
                return verdict.false(
                    _non_semisimple_witness(x, mp),
                    note="square-zero adjoint in an abelian ideal",
                )
    return None


def _non_semisimple_witness(x, mp: UPoly) -> dict:
    rep = mp.gcd(mp.derivative())
    return {
        "kind": "non_semisimple_ad",
        "element": [str(c) for c in x],
        "minpoly": str(mp),
        "repeated_part": str(rep),
    }


def _search_non_semisimple(L, budget: SearchBudget):
    consumed = 0
    for x in sampling.vectors(
        L.field, L.dim, budget.max_height, budget.max_candidates
    ):
        consumed += 1
        mp, squarefree = minpoly(L.ad(x))
        if not squarefree:
            return verdict.false(_non_semisimple_witness(x, mp))
    return verdict.unknown(budget.report(consumed))


def _split_off_center(L, z: Subspace, budget, recurse):
    derived = derived_subalgebra(L)
    if derived.dim + z.dim != L.dim or derived.intersect(z).dim != 0:
        return _search_non_semisimple(L, budget)
    sub, embed = subalgebra(L, derived)
    inner = recurse(sub, budget)
    return _lift(inner, embed, note="center split off; decided on [L,L]")


def _lift(status: verdict.TriState, embed: Subspace, note=""):
    """Transport a sub-algebra verdict into ambient coordinates."""
    if status.is_true:
        return verdict.true(
            {"kind": "summand", "inner": status.certificate}, note=note
        )
    if status.is_false:
        w = dict(status.witness)
        if "element" in w:
            coords = [embed.ambient.field.coerce(c) for c in w["element"]]
            w["element"] = [str(c) for c in embed.embed(coords)]
        return verdict.false(w, note=note)
    return verdict.unknown(status.budget, note=note)


def _anisotropy_semisimple(L, budget):
    simp = simplicity_status(L)
    if simp.is_true:
        if L.dim == 3:
            return _dim3_central_simple_status(L, budget)
        return _search_non_semisimple(L, budget)
    if simp.is_false and simp.witness.get("kind") == "centroid_idempotent":
        ideal: Subspace = simp.witness["ideal"]
        complement = _killing_complement(L, ideal)
        parts = []
        for piece in (ideal, complement):
            sub, embed = subalgebra(L, piece)
            inner = anisotropy_status(sub, budget)
            if inner.is_false:
                return _lift(inner, embed, note="witness inside a direct summand")
            parts.append(inner)
        if all(p.is_true for p in parts):
            return verdict.true(
                {
                    "kind": "direct_sum",
                    "parts": [p.certificate for p in parts],
                },
                note="conjunction over the direct summands",
            )
        reports = [p.budget for p in parts if p.is_unknown]
        return verdict.unknown(
            {"kind": "direct_sum_unknown", "parts": reports}
        )
    return _search_non_semisimple(L, budget)


def _killing_complement(L, ideal: Subspace) -> Subspace:
    """Killing-orthogonal complement of an ideal in a semisimple algebra."""
    from .core import kernel_subspace

    gram = killing(L).gram
    rows = [gram.apply(r) for r in ideal.rows]
    return kernel_subspace(L, rows)


def _dim3_central_simple_status(L, budget):
    """Exact decision for 3-dimensional central simple algebras.

    The Killing form is nondegenerate; the algebra contains a nonzero
    nilpotent element (equivalently a 2-dimensional nonabelian subalgebra)
    iff the form is isotropic, which Hilbert symbols decide after congruent
    diagonalization.
    """
    gram = killing(L).gram
    isotropic, cert = quat.ternary_form_isotropy(gram)
    if not isotropic:
        return verdict.true(
            {"kind": "anisotropic_killing_form", **cert},
            note="Killing form anisotropic over Q, certified by Hilbert symbols",
        )
    witness = dict(cert)
    witness["kind"] = "isotropic_killing_form"
    consumed = 0
    for x in sampling.vectors(
        L.field, L.dim, budget.max_height, budget.max_candidates
    ):
        consumed += 1
        mp, squarefree = minpoly(L.ad(x))
        if not squarefree:
            witness.update(_non_semisimple_witness(x, mp))
            witness["kind"] = "isotropic_killing_form"
            break
    return verdict.false(
        witness, note="split 3-dimensional simple algebra (contains sl2)"
    )


# ---------------------------------------------------------------------------
# Regularity
# ---------------------------------------------------------------------------

def regularity_status(
    L: LieAlgebra, budget: SearchBudget = DEFAULT_BUDGET
) -> verdict.TriState:
    """Is every nonzero element regular?

    Nilpotent algebras are regular with rank equal to the dimension.  A
    non-nilpotent algebra with a nonzero radical is never regular: any
    noncentral x in the last nonzero derived term of the radical has
    nilpotent ad x, so its Fitting null component is everything while the
    rank is below the dimension.  Three-dimensional central simple algebras
    reduce to the anisotropy decision; the remainder is a sampled
    comparative search for a non-regular element.
    """
    if not L.field.is_rationals:
        raise PositiveCharacteristic("regularity decision needs Q")
    ser = series(L)
    if ser.nilpotent:
        return verdict.true(
            {"kind": "nilpotent", "lower_central_dims": list(ser.lower_central_dims)},
            note="nilpotent algebras are regular with rank = dim",
        )
    kil = killing(L)
    if kil.radical.dim > 0:
        sub, embed = subalgebra(L, kil.radical)
        term = series(sub).last_nonzero_derived
        for row in term.rows:
            x = embed.embed(row)
            if not L.ad(x).is_zero:
                return verdict.false(
                    {
                        "kind": "non_regular_square_zero",
                        "element": [str(c) for c in x],
                        "fitting0_dim": fitting0_dim(L, x),
                        "lower_central_dims": list(ser.lower_central_dims),
                    },
                    note="ad x nilpotent while the algebra is not nilpotent",
                )
        return _search_non_regular(L, budget)
    simp = simplicity_status(L)
    if simp.is_true and L.dim == 3:
        inner = _dim3_central_simple_status(L, budget)
        if inner.is_true:
            return verdict.true(
                {"kind": "anisotropic_dim3", "inner": inner.certificate},
                note="anisotropic 3-dim simple: centralizers are 1-dim = rank",
            )
        return verdict.false(
            inner.witness, note="split 3-dim simple is not regular"
        )
    return _search_non_regular(L, budget)


def _search_non_regular(L, budget: SearchBudget):
    """First sampled element certified non-regular.

    A sample x is certified by rank(L) when available (fitting0 > rank), or
    by a comparison sample y with a strictly smaller Fitting null component
    (the rank is a lower bound for every Fitting null dimension).
    """
    rank_cert = None
    try:
        rank_cert = rank(L)
    except DimensionBudgetExceeded:
        pass
    consumed = 0
    seen: list[tuple[tuple, int]] = []
    min_f0 = L.dim + 1
    for x in sampling.vectors(
        L.field, L.dim, budget.max_height, budget.max_candidates
    ):
        consumed += 1
        f0 = fitting0_dim(L, x)
        if rank_cert is not None:
            if f0 > rank_cert.rank:
                return verdict.false(
                    {
                        "kind": "non_regular",
                        "element": [str(c) for c in x],
                        "fitting0_dim": f0,
                        "rank": rank_cert.rank,
                    }
                )
            continue
        seen.append((x, f0))
        min_f0 = min(min_f0, f0)
        if f0 > min_f0 or (seen and min_f0 < max(v for _, v in seen)):
            first = next((v, d) for v, d in seen if d > min_f0)
            comparison = next((v, d) for v, d in seen if d == min_f0)
            return verdict.false(
                {
                    "kind": "non_regular_pair",
                    "element": [str(c) for c in first[0]],
                    "fitting0_dim": first[1],
                    "comparison_element": [str(c) for c in comparison[0]],
                    "comparison_fitting0_dim": comparison[1],
                }
            )
    return verdict.unknown(budget.report(consumed))
