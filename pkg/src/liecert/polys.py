"""Exact univariate and sparse multivariate polynomials.

UPoly stores coefficients lowest degree first with no trailing zeros (the
zero polynomial is the empty tuple).  MPoly maps exponent tuples to nonzero
coefficients; a vanishing polynomial is certified by its term map being
empty, never by evaluation.
"""

from __future__ import annotations

from .fields import FieldSpec


class UPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs):
        cs = [field.coerce(c) if not _is_elem(c) else c for c in coeffs]
        while cs and cs[-1] == field.zero:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors --------------------------------------------------
    @classmethod
    def zero(cls, field):
        return cls(field, [])

    @classmethod
    def one(cls, field):
        return cls(field, [field.one])

    @classmethod
    def x(cls, field):
        return cls(field, [field.zero, field.one])

    @classmethod
    def constant(cls, field, c):
        return cls(field, [c])

    @classmethod
    def from_roots(cls, field, roots):
        p = cls.one(field)
        for r in roots:
            p = p * cls(field, [field.neg(field.coerce(r)), field.one])
        return p

    # -- basic queries ---------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return not self.is_zero and self.leading == self.field.one

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly(f, [f.add(self[i], other[i]) for i in range(n)])

    def __sub__(self, other):
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly(f, [f.sub(self[i], other[i]) for i in range(n)])

    def __neg__(self):
        return UPoly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __mul__(self, other):
        f = self.field
        if self.is_zero or other.is_zero:
            return UPoly.zero(f)
        out = [f.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == f.zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = f.add(out[i + j], f.mul(a, b))
        return UPoly(f, out)

    def scale(self, c):
        f = self.field
        return UPoly(f, [f.mul(c, a) for a in self.coeffs])

    def shift(self, k: int):
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return UPoly(self.field, [self.field.zero] * k + list(self.coeffs))

    def divmod(self, other):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UPoly.zero(f), self
        quo = [f.zero] * (dq + 1)
        inv_lead = f.inv(other.leading)
        for k in range(dq, -1, -1):
            c = f.mul(rem[k + other.degree], inv_lead)
            if c == f.zero:
                continue
            quo[k] = c
            for i, b in enumerate(other.coeffs):
                rem[k + i] = f.sub(rem[k + i], f.mul(c, b))
        return UPoly(f, quo), UPoly(f, rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def divides(self, other) -> bool:
        return other.divmod(self)[1].is_zero

    def monic(self):
        if self.is_zero or self.is_monic:
            return self
        return self.scale(self.field.inv(self.leading))

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic() if not a.is_zero else a

    def derivative(self):
        f = self.field
        return UPoly(
            f, [f.mul(f.from_int(i), c) for i, c in enumerate(self.coeffs)][1:]
        )

    def is_squarefree(self) -> bool:
        """gcd with the derivative is constant.

        Exact over Q and over F_p (prime fields are perfect, so irreducible
        factors are separable and a repeated factor always shows up in the
        gcd).
        """
        if self.degree <= 1:
            return True
        return self.gcd(self.derivative()).degree == 0

    def eval(self, a):
        f = self.field
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, a), c)
        return acc

    def eval_matrix(self, m):
        """Evaluate at a square matrix (Horner over Mat)."""
        from .linalg import Mat

        acc = Mat.zeros(self.field, m.rows, m.cols)
        for c in reversed(self.coeffs):
            acc = m.mul(acc).add(Mat.identity(self.field, m.rows).scale(c))
        return acc

    def pow_mod(self, e: int, mod):
        result = UPoly.one(self.field) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    # -- structural ----------------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, UPoly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"UPoly({self})"

    def __str__(self):
        return self.render("x")

    def render(self, var: str) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if c == self.field.zero:
                continue
            if i == 0:
                term = str(c)
            else:
                xp = var if i == 1 else f"{var}^{i}"
                if c == self.field.one:
                    term = xp
                elif self.field.is_rationals and c == -self.field.one:
                    term = f"-{xp}"
                else:
                    term = f"{c}*{xp}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def to_jsonable(self):
        return {"coeffs": [str(c) for c in self.coeffs], "text": str(self)}


def _is_elem(c):
    from fractions import Fraction

    return isinstance(c, (int, Fraction))


class MPoly:
    """Sparse multivariate polynomial over a FieldSpec."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: FieldSpec, nvars: int, terms: dict | None = None):
        self.field = field
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != nvars:
                    raise ValueError("exponent vector of wrong length")
                if c != field.zero:
                    clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def zero(cls, field, nvars):
        return cls(field, nvars)

    @classmethod
    def constant(cls, field, nvars, c):
        c = field.coerce(c)
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, field, nvars, i):
        exps = [0] * nvars
        exps[i] = 1
        return cls(field, nvars, {tuple(exps): field.one})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __add__(self, other):
        f = self.field
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = f.add(out.get(exps, f.zero), c)
            if s == f.zero:
                out.pop(exps, None)
            else:
                out[exps] = s
        return MPoly(f, self.nvars, out)

    def __neg__(self):
        f = self.field
        return MPoly(f, self.nvars, {e: f.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        f = self.field
        if self.is_zero or other.is_zero:
            return MPoly.zero(f, self.nvars)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = f.add(out.get(e, f.zero), f.mul(c1, c2))
                if s == f.zero:
                    out.pop(e, None)
                else:
                    out[e] = s
        return MPoly(f, self.nvars, out)

    def scale(self, c):
        f = self.field
        if c == f.zero:
            return MPoly.zero(f, self.nvars)
        return MPoly(f, self.nvars, {e: f.mul(c, a) for e, a in self.terms.items()})

    def eval(self, point):
        """Evaluate at a full point (a sequence of nvars field elements)."""
        if len(point) != self.nvars:
            raise ValueError("point of wrong length")
        f = self.field
        acc = f.zero
        for exps, c in self.terms.items():
            v = c
            for x, e in zip(point, exps):
                for _ in range(e):
                    v = f.mul(v, x)
            acc = f.add(acc, v)
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, MPoly)
            and self.field == other.field
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, self.nvars, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        return f"MPoly({self})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[exps]
            mono = "*".join(
                f"t{i + 1}" if e == 1 else f"t{i + 1}^{e}"
                for i, e in enumerate(exps)
                if e
            )
            if not mono:
                parts.append(str(c))
            elif c == self.field.one:
                parts.append(mono)
            elif self.field.is_rationals and c == -self.field.one:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def to_jsonable(self):
        return {
            "terms": {
                ",".join(map(str, e)): str(c)
                for e, c in sorted(self.terms.items())
            },
            "text": str(self),
        }
