"""Irreducibility tests and partial factorization.

Over F_p everything is exact: Rabin's irreducibility criterion decides, and
small inputs are factored completely by trial division over monic
polynomials of increasing degree.

Over Q the test is certificate-based, not a factorization engine:

* TRUE comes with a prime p such that the polynomial stays irreducible of
  the same degree over F_p;
* FALSE comes with an explicit factor (rational root, or a monic factor
  found by a bounded coefficient search) that re-checks by exact division;
* UNKNOWN is an acceptable outcome and carries the budget spent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import verdict
from .errors import BudgetGuardExceeded, UsageError
from .fields import GF, QQ
from .polys import UPoly

#: primes tried for a mod-p irreducibility certificate, in order
CERTIFICATE_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                      53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

#: coefficient bound for the monic integer factor search over Q
FACTOR_HEIGHT_BOUND = 40

#: guard on the number of trial divisors enumerated over F_p
FP_ENUM_GUARD = 200_000


# ---------------------------------------------------------------------------
# F_p machinery
# ---------------------------------------------------------------------------

def fp_is_irreducible(f: UPoly) -> bool:
    """Rabin's criterion over a prime field.

    f of degree n is irreducible iff x^(p^n) = x mod f and
    gcd(x^(p^(n/l)) - x, f) = 1 for every prime l dividing n.
    """
    field = f.field
    if field.is_rationals:
        raise UsageError("fp_is_irreducible needs a prime field")
    n = f.degree
    if n <= 0:
        return False
    if n == 1:
        return True
    f = f.monic()
    p = field.p
    x = UPoly.x(field)
    for ell in sorted(_prime_factors(n)):
        power = x.pow_mod(p ** (n // ell), f)
        if (power - x).gcd(f).degree != 0:
            return False
    power = x.pow_mod(p ** n, f)
    return ((power - x) % f).is_zero


def _prime_factors(n: int):
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def fp_roots(f: UPoly) -> list[int]:
    return [a for a in range(f.field.p) if f.eval(a) == 0]


def _fp_monic_polys(field, degree):
    for tail in itertools.product(range(field.p), repeat=degree):
        yield UPoly(field, list(tail) + [1])


def fp_factor(f: UPoly) -> list[tuple[UPoly, int]]:
    """Complete factorization over F_p by trial division (small p only).

    Deterministic: divisors are tried in increasing degree and lexicographic
    coefficient order.  Raises BudgetGuardExceeded when p**(deg/2) explodes.
    """
    field = f.field
    if field.is_rationals:
        raise UsageError("fp_factor needs a prime field")
    if f.is_zero:
        raise UsageError("cannot factor the zero polynomial")
    work = f.monic()
    estimate = sum(field.p ** d for d in range(1, work.degree // 2 + 1))
    if estimate > FP_ENUM_GUARD:
        raise BudgetGuardExceeded(estimate, FP_ENUM_GUARD)
    factors: list[tuple[UPoly, int]] = []
    degree = 1
    while 2 * degree <= work.degree:
        for g in _fp_monic_polys(field, degree):
            if 2 * degree > work.degree:
                break
            mult = 0
            while g.divides(work):
                work = work // g
                mult += 1
            if mult:
                factors.append((g, mult))
        degree += 1
    if work.degree >= 1:
        factors.append((work, 1))
    return factors


# ---------------------------------------------------------------------------
# Q machinery
# ---------------------------------------------------------------------------

def _monic_integer_model(f: UPoly) -> tuple[list[int], int]:
    """Transform a monic rational polynomial into a monic integer one.

    With d the lcm of the coefficient denominators, g(x) = d^n f(x/d) is
    monic with integer coefficients and factors in step with f.  Returns
    (integer coefficients ascending, d).
    """
    if not f.is_monic:
        raise UsageError("expected a monic polynomial")
    d = 1
    for c in f.coeffs:
        d = d * c.denominator // gcd(d, c.denominator)
    n = f.degree
    coeffs = []
    for i, c in enumerate(f.coeffs):
        coeffs.append(int(c * Fraction(d) ** (n - i)))
    return coeffs, d


def _model_poly(coeffs: list[int]) -> UPoly:
    return UPoly(QQ, [Fraction(c) for c in coeffs])


def _unmodel(g: UPoly, d: int) -> UPoly:
    """Map a monic factor of the integer model back: g(x) -> g(d·x)/d^deg."""
    k = g.degree
    return UPoly(QQ, [g[i] * Fraction(d) ** (i - k) for i in range(k + 1)])


def _int_divide_exact(num: list[int], div: list[int]):
    """Quotient of integer polynomials when the monic div divides exactly."""
    work = list(num)
    dq = len(work) - len(div)
    if dq < 0:
        return None
    quo = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        c = work[k + len(div) - 1]
        quo[k] = c
        if c:
            for i, b in enumerate(div):
                work[k + i] -= c * b
    if any(work):
        return None
    return quo


def rational_roots(f: UPoly) -> list[Fraction]:
    """All rational roots of a monic rational polynomial (ascending)."""
    coeffs, d = _monic_integer_model(f.monic())
    model = _model_poly(coeffs)
    roots = set()
    while model.eval(Fraction(0)) == 0 and model.degree > 0:
        roots.add(Fraction(0))
        model = model // UPoly(QQ, [Fraction(0), Fraction(1)])
    c0 = model[0]
    if model.degree > 0 and c0 != 0:
        for r in _divisors(abs(int(c0))):
            for cand in (Fraction(r), Fraction(-r)):
                if model.eval(cand) == 0:
                    roots.add(cand)
    return sorted(r / d for r in roots)


def _rational_root_factor(f: UPoly) -> UPoly | None:
    roots = rational_roots(f)
    if not roots:
        return None
    return UPoly(QQ, [-roots[0], Fraction(1)])


def _divisors(n: int):
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return out


def _bounded_factor_search(f: UPoly, height: int) -> UPoly | None:
    """Search monic integer factors of the integer model of f.

    Degrees 2 .. deg/2, all coefficient vectors with |c| <= height.  Any
    monic rational factor of a monic integer polynomial is integral, so this
    misses factors only when their coefficients exceed the bound.
    """
    coeffs, d = _monic_integer_model(f)
    n = len(coeffs) - 1
    for deg in range(2, n // 2 + 1):
        rng = range(-height, height + 1)
        for tail in itertools.product(rng, repeat=deg):
            div = list(tail) + [1]
            if _int_divide_exact(coeffs, div) is not None:
                return _unmodel(_model_poly(div), d)
    return None


def _mod_p_reduction(f: UPoly, p: int) -> UPoly | None:
    """Reduce a rational polynomial mod p; None when a denominator dies."""
    out = []
    for c in f.coeffs:
        if c.denominator % p == 0:
            return None
        out.append((c.numerator * pow(c.denominator, -1, p)) % p)
    return UPoly(GF(p), out)


def _mod_p_certificate(f: UPoly, primes) -> tuple[verdict.TriState | None, list[int]]:
    tried = []
    for p in primes:
        g = _mod_p_reduction(f, p)
        if g is None or g.degree != f.degree:
            continue
        tried.append(p)
        if fp_is_irreducible(g):
            cert = verdict.true({"kind": "irreducible_mod_p", "p": p,
                                 "poly": str(f)})
            return cert, tried
    return None, tried


def irreducibility(f: UPoly, *, height: int = FACTOR_HEIGHT_BOUND,
                   primes=CERTIFICATE_PRIMES) -> verdict.TriState:
    """Decide irreducibility of a nonconstant polynomial.

    Exact over F_p.  Over Q: certificate-based (see module docstring);
    UNKNOWN is possible and honest.
    """
    if f.degree <= 0:
        raise UsageError("irreducibility of a constant polynomial")
    if not f.field.is_rationals:
        if fp_is_irreducible(f):
            return verdict.true({"kind": "fp_irreducible", "p": f.field.p,
                                 "poly": str(f.monic())})
        witness = _fp_witness_factor(f)
        return verdict.false({"kind": "factor", "factor": str(witness),
                              "poly": str(f.monic())})
    f = f.monic()
    if f.degree == 1:
        return verdict.true({"kind": "degree_one", "poly": str(f)})
    root_factor = _rational_root_factor(f)
    if root_factor is not None:
        return verdict.false({"kind": "factor", "factor": str(root_factor),
                              "poly": str(f)})
    cert, tried = _mod_p_certificate(f, primes)
    if cert is not None:
        return cert
    found = _bounded_factor_search(f, height)
    if found is not None:
        return verdict.false({"kind": "factor", "factor": str(found),
                              "poly": str(f)})
    return verdict.unknown({"kind": "irreducibility_budget",
                            "primes_tried": tried, "factor_height": height,
                            "poly": str(f)})


def _fp_witness_factor(f: UPoly) -> UPoly:
    """Some proper monic factor of a reducible f over F_p."""
    field = f.field
    roots = fp_roots(f)
    if roots:
        return UPoly(field, [field.neg(roots[0]), field.one])
    g, mult = fp_factor(f)[0]
    if g.degree == f.degree and mult == 1:
        raise UsageError("polynomial is irreducible")
    return g


# ---------------------------------------------------------------------------
# Squarefree decomposition and factorization records
# ---------------------------------------------------------------------------

def squarefree_decomposition(f: UPoly) -> list[tuple[UPoly, int]]:
    """Decompose monic f as prod g_i^(m_i) with each g_i monic squarefree.

    Yun's algorithm in characteristic zero; over F_p the p-th-power part is
    peeled off via the Frobenius (prime fields are perfect).
    """
    field = f.field
    if f.is_zero:
        raise UsageError("squarefree decomposition of zero")
    f = f.monic()
    if f.degree == 0:
        return []
    if field.is_rationals:
        return _yun(f)
    return _squarefree_p(f)


def _yun(f: UPoly) -> list[tuple[UPoly, int]]:
    out = []
    df = f.derivative()
    a = f.gcd(df)
    b = f // a
    c = df // a
    i = 1
    while b.degree > 0:
        d = c - b.derivative()
        g = b.gcd(d)
        if g.degree > 0:
            out.append((g, i))
        b = b // g
        c = d // g
        i += 1
    return out


def _pth_root(f: UPoly) -> UPoly:
    # Over F_p, a polynomial with zero derivative is g(x^p) = g(x)^p.
    p = f.field.p
    return UPoly(f.field, [f[i * p] for i in range(f.degree // p + 1)])


def _squarefree_p(f: UPoly) -> list[tuple[UPoly, int]]:
    p = f.field.p
    df = f.derivative()
    if df.is_zero:
        return [(g, m * p) for g, m in _squarefree_p(_pth_root(f))]
    out = []
    t = f.gcd(df)
    w = f // t
    i = 1
    while w.degree > 0:
        y = w.gcd(t)
        z = w // y
        if z.degree > 0:
            out.append((z, i))
        w = y
        t = t // y
        i += 1
    if t.degree > 0:
        out.extend((g, m * p) for g, m in _squarefree_p(_pth_root(t)))
    return out


@dataclass(frozen=True)
class Factorization:
    """Possibly-partial factorization of a monic polynomial.

    ``factors`` lists certified-irreducible pieces with multiplicities;
    ``unfactored`` lists squarefree pieces (with the multiplicity they
    carry) that resisted the bounded search.  The decomposition is complete
    iff ``unfactored`` is empty.
    """

    factors: tuple  # ((UPoly, mult), ...)
    unfactored: tuple  # ((UPoly, mult), ...)
    certificates: tuple  # TriState per entry of factors

    @property
    def complete(self) -> bool:
        return not self.unfactored

    def count_with_multiplicity(self) -> int:
        if not self.complete:
            raise UsageError("factorization incomplete")
        return sum(m for _, m in self.factors)

    def to_jsonable(self):
        return {
            "factors": [[str(g), m] for g, m in self.factors],
            "unfactored": [[str(g), m] for g, m in self.unfactored],
            "complete": self.complete,
        }


def factorization(f: UPoly, *, height: int = FACTOR_HEIGHT_BOUND) -> Factorization:
    """Factor a monic polynomial as far as the certified machinery allows.

    Complete over F_p (within the enumeration guard).  Over Q, complete
    whenever every squarefree part either gets a mod-p irreducibility
    certificate or splits under rational-root and bounded factor search.
    """
    field = f.field
    if f.is_zero:
        raise UsageError("cannot factor the zero polynomial")
    f = f.monic()
    if not field.is_rationals:
        factors = fp_factor(f)
        certs = tuple(
            verdict.true({"kind": "fp_irreducible", "p": field.p, "poly": str(g)})
            for g, _ in factors
        )
        return Factorization(tuple(factors), (), certs)
    factors: list[tuple[UPoly, int]] = []
    unfactored: list[tuple[UPoly, int]] = []
    certs: list = []
    for part, mult in squarefree_decomposition(f):
        irreducibles, stuck = _factor_squarefree_q(part, height)
        for g, cert in irreducibles:
            factors.append((g, mult))
            certs.append(cert)
        for g in stuck:
            unfactored.append((g, mult))
    factors.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return Factorization(tuple(factors), tuple(unfactored), tuple(certs))


def _factor_squarefree_q(f: UPoly, height: int):
    pending = [f.monic()]
    done: list[tuple[UPoly, verdict.TriState]] = []
    stuck: list[UPoly] = []
    while pending:
        g = pending.pop()
        if g.degree == 0:
            continue
        if g.degree == 1:
            done.append((g, verdict.true({"kind": "degree_one", "poly": str(g)})))
            continue
        root_factor = _rational_root_factor(g)
        if root_factor is not None:
            pending.append(root_factor)
            pending.append(g // root_factor)
            continue
        cert, _ = _mod_p_certificate(g, CERTIFICATE_PRIMES)
        if cert is not None:
            done.append((g, cert))
            continue
        found = _bounded_factor_search(g, height)
        if found is not None:
            pending.append(found)
            pending.append(g // found)
            continue
        stuck.append(g)
    done.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return done, stuck
