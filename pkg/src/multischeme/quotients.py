"""Search for surjections from a presented module onto line bundles.

For each twist d, the maps M -> O(d) with zero composite against the
relation matrix form a finite-dimensional solution space computed by exact
linear algebra degree by degree.  Surjectivity of a candidate map is decided
by irrelevant-primariness of its component ideal.  When no surjection is
found the verdict explains why:

* EXACT-NONE      -- the solution space is zero;
* CERTIFIED-NONE  -- every map in the space provably drops rank at a point
                     (projective dimension theorem, or the singular-matrix
                     certificate for a square system of linear forms);
* SAMPLED-NONE    -- basis vectors plus seeded random combinations were all
                     non-surjective, with no certificate available.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .ideals import Ideal, is_irrelevant_primary
from .modules import determinant


def monomials_of_degree(ring, d):
    """All exponent tuples of total degree d."""
    if d < 0:
        return []
    n = ring.nvars
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def _nullspace(field, rows, ncols):
    """Basis of the kernel of the matrix (list of coefficient rows)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        m[r] = [x * inv for x in m[r]]
        if field.char:
            m[r] = [x % field.char for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
                if field.char:
                    m[i] = [x % field.char for x in m[i]]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero()] * ncols
        v[fc] = field.one()
        for pr, pc in enumerate(pivots):
            v[pc] = -m[pr][fc]
            if field.char:
                v[pc] %= field.char
        basis.append(v)
    return basis


class _LCG:
    """Deterministic linear congruential draw for sampling coefficients."""

    def __init__(self, seed):
        self.state = (seed * 2654435761 + 1) % (1 << 32)

    def next(self):
        self.state = (1664525 * self.state + 1013904223) % (1 << 32)
        return self.state

    def coeff(self):
        return (self.next() >> 16) % 7 - 3


@dataclass
class TwistVerdict:
    twist: int
    dim: int
    basis: list          # list of maps; each map is a list of polynomials
    verdict: str         # SURJECTION | EXACT-NONE | CERTIFIED-NONE | SAMPLED-NONE
    witness: list = None # surjective row when verdict == SURJECTION
    certificate: dict = None
    samples_tested: int = 0

    def to_json(self):
        return {
            "twist": self.twist,
            "dim": self.dim,
            "basis": [[str(f) for f in row] for row in self.basis],
            "verdict": self.verdict,
            "witness": None if self.witness is None else [str(f) for f in self.witness],
            "certificate": self.certificate,
            "samples_tested": self.samples_tested,
        }


def solution_space(module, twist):
    """Basis of maps M -> O(twist): rows (l_1..l_g) with row . relations = 0."""
    ring = module.ring
    fieldk = ring.field
    degs = [gd + twist for gd in module.gen_degrees]
    slots = []
    index = {}
    for i, d in enumerate(degs):
        for e in monomials_of_degree(ring, d):
            index[(i, e)] = len(slots)
            slots.append((i, e))
    if not slots:
        return []
    rows = []
    ncols = len(slots)
    rel = module.relations
    ncolumns = len(rel[0]) if rel and rel[0] else 0
    for j in range(ncolumns):
        eqs = {}
        for i in range(module.rank):
            phi = rel[i][j]
            if phi.is_zero():
                continue
            for e in monomials_of_degree(ring, degs[i]):
                col = index[(i, e)]
                for em, cm in phi.terms.items():
                    key = tuple(a + b for a, b in zip(e, em))
                    eqs.setdefault(key, [fieldk.zero()] * ncols)
                    eqs[key][col] = eqs[key][col] + cm
        rows.extend(eqs.values())
    basis = _nullspace(fieldk, rows, ncols) if rows else [
        [fieldk.one() if k == j else fieldk.zero() for k in range(ncols)]
        for j in range(ncols)
    ]
    maps = []
    for v in basis:
        row = []
        for i in range(module.rank):
            terms = {e: v[index[(i, e)]] for e in monomials_of_degree(ring, degs[i])}
            row.append(ring.poly(terms))
        maps.append(row)
    return maps


def _is_surjection(ring, row, guard=None):
    gens = [f for f in row if f]
    if not gens:
        return False
    if any(f.is_constant() for f in gens):
        return True
    return is_irrelevant_primary(Ideal(ring, gens), guard=guard)


def _certificate(module, basis, degs):
    """Try to certify that no combination of the basis maps is surjective."""
    ring = module.ring
    support = sorted(
        {i for row in basis for i, f in enumerate(row) if not f.is_zero()}
    )
    if not support:
        return None
    if any(degs[i] <= 0 for i in support):
        return None
    m = ring.nvars
    if len(support) < m:
        return {
            "kind": "dimension",
            "detail": "%d positive-degree forms in %d variables always share a "
            "projective zero" % (len(support), m),
        }
    if len(support) == m and all(degs[i] == 1 for i in support):
        # square system of linear forms: check the coefficient matrix of the
        # generic combination is identically singular
        names = ["a%d" % k for k in range(len(basis))]
        sym = ring.extended(tuple(names), front=True)
        rows = []
        for i in support:
            entries = []
            for var in ring.names:
                coeff = sym.zero()
                for k, row in enumerate(basis):
                    c = row[i].coeff_of(_unit_exp(ring, var))
                    if c:
                        coeff = coeff + sym.var(names[k]).scale(c)
                entries.append(coeff)
            rows.append(entries)
        det = determinant(rows)
        if det.is_zero():
            return {
                "kind": "singular-matrix",
                "detail": "generic %dx%d coefficient matrix of linear forms is "
                "identically singular; its kernel is a common zero" % (m, m),
            }
    return None


def _unit_exp(ring, var):
    e = [0] * ring.nvars
    e[ring._index[var]] = 1
    return tuple(e)


def line_bundle_quotients(module, twist_range, samples=100, seed=0, guard=None):
    """Scan twists for surjections M -> O(d); see module docstring."""
    lo, hi = twist_range
    ring = module.ring
    out = []
    rng = _LCG(seed)
    for d in range(lo, hi + 1):
        degs = [gd + d for gd in module.gen_degrees]
        basis = solution_space(module, d)
        if not basis:
            out.append(TwistVerdict(d, 0, [], "EXACT-NONE"))
            continue
        witness = None
        for row in basis:
            if _is_surjection(ring, row, guard=guard):
                witness = row
                break
        tested = 0
        if witness is None:
            cert = _certificate(module, basis, degs)
            if cert is not None:
                out.append(
                    TwistVerdict(d, len(basis), basis, "CERTIFIED-NONE", certificate=cert)
                )
                continue
            seen = set()
            attempts = 0
            max_distinct = 7 ** len(basis) - 1
            while tested < samples and attempts < 50 * samples:
                attempts += 1
                coeffs = tuple(rng.coeff() for _ in basis)
                if coeffs in seen or not any(coeffs):
                    if len(seen) >= max_distinct:
                        break
                    continue
                seen.add(coeffs)
                row = [ring.zero() for _ in range(module.rank)]
                for c, b in zip(coeffs, basis):
                    if c:
                        row = [r + f.scale(c) for r, f in zip(row, b)]
                tested += 1
                if _is_surjection(ring, row, guard=guard):
                    witness = row
                    break
        if witness is not None:
            out.append(
                TwistVerdict(d, len(basis), basis, "SURJECTION", witness=witness,
                             samples_tested=tested)
            )
        else:
            out.append(
                TwistVerdict(d, len(basis), basis, "SAMPLED-NONE", samples_tested=tested)
            )
    return out
