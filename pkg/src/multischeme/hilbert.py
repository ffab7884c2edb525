"""Hilbert series, Hilbert polynomials, and the P-basis.

The series of R/I is computed from the lead-term ideal by pivot recursion on
monomial generators.  Hilbert polynomials are written in the basis
P_i(t) = binom(t + i, i), whose coefficients are integers for the numerical
polynomials arising here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .groebner import Vec, buchberger


# ---------------------------------------------------------------------------
# numerator of the Hilbert series of a monomial quotient


def _minimalize(gens):
    out = []
    for m in sorted(gens, key=sum):
        if not any(all(a <= b for a, b in zip(g, m)) for g in out):
            out.append(m)
    return out


def _poly_mul(a, b):
    out = {}
    for i, ca in a.items():
        for j, cb in b.items():
            out[i + j] = out.get(i + j, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def _poly_add(a, b, sign=1):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + sign * v
    return {k: v for k, v in out.items() if v}


def monomial_numerator(gens, nvars):
    """Numerator of Hilb(R/(gens)) over (1-t)^nvars, as {degree: int}."""
    gens = _minimalize([tuple(g) for g in gens])
    return _numerator(tuple(sorted(gens)), nvars)


def _numerator(gens, nvars):
    if not gens:
        return {0: 1}
    if any(sum(g) == 0 for g in gens):
        return {}
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in gens]
    if all(
        supports[a].isdisjoint(supports[b])
        for a in range(len(gens))
        for b in range(a + 1, len(gens))
    ):
        # pairwise coprime generators form a regular sequence
        out = {0: 1}
        for g in gens:
            out = _poly_mul(out, {0: 1, sum(g): -1})
        return out
    nontrivial = [g for g in gens if sum(1 for e in g if e) > 1]
    counts = [0] * nvars
    for g in nontrivial:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    piv = max(range(nvars), key=lambda i: counts[i])
    pvec = tuple(1 if i == piv else 0 for i in range(nvars))
    plus = _minimalize(list(gens) + [pvec])
    quot = _minimalize([tuple(max(e - p, 0) for e, p in zip(g, pvec)) for g in gens])
    left = _numerator(tuple(sorted(plus)), nvars)
    right = _numerator(tuple(sorted(quot)), nvars)
    return _poly_add(left, {k + 1: v for k, v in right.items()})


@dataclass(frozen=True)
class HilbertSeries:
    """numerator / (1-t)^nvars; numerator maps degree -> int coefficient."""

    numerator: tuple  # sorted tuple of (degree, coeff)
    nvars: int

    @classmethod
    def make(cls, numer, nvars):
        return cls(tuple(sorted((k, v) for k, v in numer.items() if v)), nvars)

    def numer_dict(self):
        return dict(self.numerator)

    def reduced(self):
        """(numerator with all (1-t) factors cancelled, remaining pole order)."""
        numer = self.numer_dict()
        pole = self.nvars
        while numer and sum(numer.values()) == 0:
            numer = _divide_by_one_minus_t(numer)
            pole -= 1
        return numer, pole

    def dimension_degree(self):
        """(projective dimension of the zero set, degree).  Empty set: (-1, 0)."""
        numer, pole = self.reduced()
        if not numer:
            return (-1, 0)
        return (pole - 1, sum(numer.values()))

    def value(self, t):
        """Exact dimension of the degree-t graded piece."""
        if t < 0:
            return 0
        n = self.nvars
        return sum(c * comb(t - i + n - 1, n - 1) for i, c in self.numerator if t - i >= 0)

    def polynomial(self):
        return hilbert_polynomial_from_series(self)

    def __add__(self, other):
        assert self.nvars == other.nvars
        return HilbertSeries.make(_poly_add(self.numer_dict(), other.numer_dict()), self.nvars)

    def __sub__(self, other):
        assert self.nvars == other.nvars
        return HilbertSeries.make(
            _poly_add(self.numer_dict(), other.numer_dict(), sign=-1), self.nvars
        )


def _divide_by_one_minus_t(numer):
    # divide a polynomial with p(1) = 0 by (1 - t)
    out = {}
    acc = 0
    for d in range(max(numer) + 1):
        acc += numer.get(d, 0)
        if acc:
            out[d] = acc
    # p(t) = (1-t) q(t) with q as accumulated partial sums
    return out


def hilbert_series_of_leads(lead_exps_by_comp, gen_degrees, nvars):
    """Series of F/N from the lead-term module, componentwise."""
    total = {}
    for comp, d in enumerate(gen_degrees):
        numer = monomial_numerator(lead_exps_by_comp.get(comp, []), nvars)
        total = _poly_add(total, {k + d: v for k, v in numer.items()})
    return HilbertSeries.make(total, nvars)


def ideal_hilbert_series(ring, groebner_polys):
    """Series of R/I from a Groebner basis of I."""
    leads = [g.lead_exp() for g in groebner_polys if g]
    return HilbertSeries.make(monomial_numerator(leads, ring.nvars), ring.nvars)


def module_hilbert_series(module, guard=None):
    """Series of a GradedModule presentation coker(F1 -> F0)."""
    gb = buchberger(module.relation_vecs(), guard=guard)
    by_comp = {}
    for g in gb:
        (j, e), _ = g.lead()
        by_comp.setdefault(j, []).append(e)
    return hilbert_series_of_leads(by_comp, module.gen_degrees, module.ring.nvars)


# ---------------------------------------------------------------------------
# Hilbert polynomials in the P-basis


@dataclass(frozen=True)
class HilbertPoly:
    """An integer combination of P_i(t) = binom(t + i, i)."""

    coeffs: tuple  # sorted tuple of (i, integer coefficient)

    @classmethod
    def make(cls, mapping):
        return cls(tuple(sorted((i, int(c)) for i, c in mapping.items() if c)))

    @classmethod
    def zero(cls):
        return cls(())

    def as_dict(self):
        return dict(self.coeffs)

    def degree(self):
        return max((i for i, _ in self.coeffs), default=-1)

    def __call__(self, t):
        return sum(c * comb(t + i, i) for i, c in self.coeffs)

    def __add__(self, other):
        out = self.as_dict()
        for i, c in other.coeffs:
            out[i] = out.get(i, 0) + c
        return HilbertPoly.make(out)

    def __sub__(self, other):
        out = self.as_dict()
        for i, c in other.coeffs:
            out[i] = out.get(i, 0) - c
        return HilbertPoly.make(out)

    def scale(self, k):
        return HilbertPoly.make({i: k * c for i, c in self.coeffs})

    def lead_degree_term(self):
        """(degree, coefficient) of the top P term; (-1, 0) if zero."""
        if not self.coeffs:
            return (-1, 0)
        i = self.degree()
        return (i, self.as_dict()[i])

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for i, c in sorted(self.coeffs, reverse=True):
            mag = abs(c)
            body = "P_%d" % i if mag == 1 else "%d*P_%d" % (mag, i)
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += " %s %s" % (sign, body)
        return out

    __repr__ = __str__


def dense_to_p_basis(dense):
    """Convert dense coefficients [c_0, c_1*t, ...] to the P-basis.

    Raises ValueError when the polynomial is not an integer combination of
    the P_i (i.e. not numerical in this basis).
    """
    dense = [Fraction(c) for c in dense]
    while dense and dense[-1] == 0:
        dense.pop()
    out = {}
    while dense:
        m = len(dense) - 1
        lead = dense[-1] * factorial(m)
        if lead.denominator != 1:
            raise ValueError("not an integer combination of the P basis")
        out[m] = int(lead)
        pm = _p_dense(m)
        dense = [a - lead * b for a, b in zip(dense, pm)]
        while dense and dense[-1] == 0:
            dense.pop()
    return HilbertPoly.make(out)


def _p_dense(m):
    """Dense Fraction coefficients of P_m(t) = binom(t + m, m)."""
    coeffs = [Fraction(1)]
    for j in range(1, m + 1):
        # multiply by (t + j)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += c * j
            nxt[i + 1] += c
        coeffs = nxt
    return [c / factorial(m) for c in coeffs]


def hilbert_polynomial_from_series(series):
    """Hilbert polynomial of the series, in the P-basis.

    Internally cross-checked against the exact dimension count at five
    consecutive degrees from the agreement bound on.
    """
    n = series.nvars
    numer = series.numer_dict()
    if not numer:
        return HilbertPoly.zero()
    dense = [Fraction(0)] * n
    for i, c in numer.items():
        shifted = _shifted_binom_dense(n - 1, -i)
        for k, v in enumerate(shifted):
            dense[k] += c * v
    hp = dense_to_p_basis(dense)
    start = max(max(numer) - n + 1, 0)
    for t in range(start, start + 5):
        if hp(t) != series.value(t):
            raise ArithmeticError("Hilbert polynomial disagrees with series at t=%d" % t)
    return hp


def twisted_free_hilbert(n, twist, rank=1):
    """Hilbert polynomial of O(twist)^rank on P^n, i.e. rank * P_n(t + twist)."""
    dense = [rank * c for c in _shifted_binom_dense(n, twist)]
    return dense_to_p_basis(dense)


def euler_characteristic(n, terms):
    """Alternating Hilbert sum of a resolution; terms = [[(twist, rank), ...]].

    terms[i] lists the twisted free summands of the i-th module; signs
    alternate starting with + for i = 0.
    """
    total = HilbertPoly.zero()
    for i, summands in enumerate(terms):
        sign = 1 if i % 2 == 0 else -1
        for twist, rank in summands:
            total = total + twisted_free_hilbert(n, twist, rank).scale(sign)
    return total


# ---------------------------------------------------------------------------
# the degree-3 reduced-scheme Hilbert polynomial catalog


def degree3_catalog(n):
    """Known Hilbert polynomials of reduced connected degree-3 schemes of
    dimension n: plane-cubic-style forms plus (when n = 4) the nine
    quadric-plus-plane union polynomials."""
    P = lambda m: HilbertPoly.make({m: 1})
    entries = {}
    if n >= 2:
        entries["cubic-hypersurface-in-P%d" % (n + 1)] = (
            P(n).scale(3) - P(n - 1).scale(3) + P(n - 2)
        )
    if n == 3:
        entries["cubic-surface-form"] = P(3).scale(3) - P(2).scale(2)
    if n == 2:
        entries["cubic-curve-form"] = P(2).scale(3) - P(1).scale(2)
    if n == 1:
        entries["twisted-cubic"] = P(1).scale(3) - P(0).scale(2)
    entries["degenerate-triple-P%d" % n] = P(n).scale(3) - P(n - 1).scale(2)
    if n == 4:
        quad_union = [
            ("3P_4-P_3", {4: 3, 3: -1}),
            ("3P_4-P_3-P_0", {4: 3, 3: -1, 0: -1}),
            ("3P_4-P_3-2P_0", {4: 3, 3: -1, 0: -2}),
            ("3P_4-P_3-P_1", {4: 3, 3: -1, 1: -1}),
            ("3P_4-P_3-2P_1+P_0", {4: 3, 3: -1, 1: -2, 0: 1}),
            ("3P_4-P_3-P_2", {4: 3, 3: -1, 2: -1}),
            ("3P_4-P_3-2P_2+P_1", {4: 3, 3: -1, 2: -2, 1: 1}),
            ("3P_4-2P_3", {4: 3, 3: -2}),
            ("3P_4-3P_3+P_2", {4: 3, 3: -3, 2: 1}),
        ]
        for name, coeffs in quad_union:
            entries["quadric-union-%s" % name] = HilbertPoly.make(coeffs)
    return entries


def reduced_degree3_membership(p, n):
    """(verdict, matched entry name) for the degree-3 reduced catalog.

    Requires deg p = n with leading P-coefficient 3.  A polynomial passes if
    it matches a catalog entry, or if its second coefficient is -a for
    a in {0, 1, 2, 3} (the three-linear-spaces constraint).
    """
    lead_deg, lead_coeff = p.lead_degree_term()
    if lead_deg != n or lead_coeff != 3:
        raise ValueError("expected leading term 3*P_%d, got %s" % (n, p))
    for name, q in degree3_catalog(n).items():
        if p == q:
            return True, name
    a = -p.as_dict().get(n - 1, 0)
    if a in (0, 1, 2, 3):
        return True, "three-linear-spaces-a=%d" % a
    return False, None


def _shifted_binom_dense(m, shift):
    """Dense coefficients of binom(t + shift + m, m) as a polynomial in t."""
    coeffs = [Fraction(1)]
    for j in range(1, m + 1):
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += c * (j + shift)
            nxt[i + 1] += c
        coeffs = nxt
    return [c / factorial(m) for c in coeffs]
