"""Exact multivariate polynomial arithmetic over Q or a prime field.

Polynomials are immutable dicts mapping exponent tuples to nonzero field
elements.  Coefficients are ``fractions.Fraction`` in characteristic 0 and
plain ints reduced mod p in characteristic p.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class Rationals:
    """The field Q, with Fraction coefficients."""

    char = 0

    def coerce(self, v):
        if isinstance(v, Fraction):
            return v
        return Fraction(v)

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def inv(self, a):
        return 1 / a

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """The field F_p for a prime p; elements are ints in [0, p)."""

    def __init__(self, p):
        if p < 2 or any(p % q == 0 for q in range(2, min(p, 1 + int(p ** 0.5) + 1))):
            raise ValueError("characteristic must be prime: %r" % p)
        self.p = p
        self.char = p

    def coerce(self, v):
        if isinstance(v, Fraction):
            den = v.denominator % self.p
            if den == 0:
                raise ZeroDivisionError("denominator vanishes mod %d" % self.p)
            return v.numerator * pow(den, self.p - 2, self.p) % self.p
        return int(v) % self.p

    def zero(self):
        return 0

    def one(self):
        return 1

    def inv(self, a):
        a = a % self.p
        if a == 0:
            raise ZeroDivisionError
        return pow(a, self.p - 2, self.p)

    def __repr__(self):
        return "GF(%d)" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


@dataclass(frozen=True)
class TermOrder:
    """A monomial order: 'grevlex', 'lex', or 'block'.

    A block order compares the first ``front`` variables by grevlex, then the
    remaining ones, so it eliminates the front block.
    """

    kind: str = "grevlex"
    front: int = 0

    def key(self, exps):
        if self.kind == "grevlex":
            return (sum(exps), tuple(-e for e in reversed(exps)))
        if self.kind == "lex":
            return tuple(exps)
        if self.kind == "block":
            f, r = exps[: self.front], exps[self.front:]
            return (
                (sum(f), tuple(-e for e in reversed(f))),
                (sum(r), tuple(-e for e in reversed(r))),
            )
        raise ValueError("unknown order %r" % self.kind)


GREVLEX = TermOrder("grevlex")
LEX = TermOrder("lex")


class PolyRing:
    """A polynomial ring k[x_1..x_n] with a fixed term order."""

    def __init__(self, names, char=0, order=GREVLEX):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.names = names
        self.nvars = len(names)
        self.char = char
        self.field = Rationals() if char == 0 else PrimeField(char)
        self.order = order
        self._index = {n: i for i, n in enumerate(names)}
        self._zero_exp = (0,) * self.nvars

    # -- constructors ------------------------------------------------------

    def poly(self, terms):
        """Build a polynomial from {exponent tuple: coefficient}."""
        clean = {}
        for e, c in terms.items():
            c = self.field.coerce(c)
            if c:
                clean[tuple(e)] = c
        return Polynomial(self, clean)

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = self.field.coerce(c)
        return Polynomial(self, {self._zero_exp: c} if c else {})

    def var(self, name):
        i = self._index[name]
        e = [0] * self.nvars
        e[i] = 1
        return self.poly({tuple(e): 1})

    def gens(self):
        return [self.var(n) for n in self.names]

    # -- derived rings -----------------------------------------------------

    def with_order(self, order):
        return PolyRing(self.names, self.char, order)

    def extended(self, new_names, front=True):
        """Add variables (in front by default) with a block elimination order."""
        if front:
            names = tuple(new_names) + self.names
            order = TermOrder("block", front=len(new_names))
        else:
            names = self.names + tuple(new_names)
            order = self.order
        return PolyRing(names, self.char, order)

    def subring(self, names):
        return PolyRing(names, self.char, self.order)

    def fresh_name(self, stem="t"):
        if stem not in self._index:
            return stem
        i = 0
        while "%s%d" % (stem, i) in self._index:
            i += 1
        return "%s%d" % (stem, i)

    def transfer(self, f, other):
        """Map a polynomial into ``other`` matching variables by name.

        Variables of ``f``'s ring absent from ``other`` must not occur in f.
        """
        pos = []
        for n in self.names:
            pos.append(other._index.get(n))
        terms = {}
        for e, c in f.terms.items():
            new = [0] * other.nvars
            for i, ei in enumerate(e):
                if ei:
                    if pos[i] is None:
                        raise ValueError("variable %s not in target ring" % self.names[i])
                    new[pos[i]] = ei
            terms[tuple(new)] = terms.get(tuple(new), other.field.zero()) + other.field.coerce(c)
        return other.poly(terms)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.char == other.char
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.names, self.char, self.order))

    def __repr__(self):
        base = "QQ" if self.char == 0 else "GF(%d)" % self.char
        return "%s[%s]/%s" % (base, ",".join(self.names), self.order.kind)


def _exp_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


class Polynomial:
    """Immutable polynomial; do not mutate ``terms``."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        p = self.ring.char
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if p:
                    s %= p
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return Polynomial(self.ring, terms)

    def __neg__(self):
        p = self.ring.char
        if p:
            return Polynomial(self.ring, {e: -c % p for e, c in self.terms.items()})
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        terms = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = _exp_mul(ea, eb)
                s = terms.get(e)
                if s is None:
                    terms[e] = ca * cb
                else:
                    terms[e] = s + ca * cb
        p = self.ring.char
        if p:
            terms = {e: c % p for e, c in terms.items()}
        return Polynomial(self.ring, {e: c for e, c in terms.items() if c})

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __pow__(self, n):
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def scale(self, c):
        c = self.ring.field.coerce(c)
        if not c:
            return self.ring.zero()
        p = self.ring.char
        if p:
            return Polynomial(self.ring, {e: v * c % p for e, v in self.terms.items()})
        return Polynomial(self.ring, {e: v * c for e, v in self.terms.items()})

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("mixed rings")
            return other
        return self.ring.const(other)

    # -- structure ---------------------------------------------------------

    def lead(self):
        """(exponent tuple, coefficient) of the leading term."""
        key = self.ring.order.key
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def lead_exp(self):
        return self.lead()[0]

    def monic(self):
        if not self.terms:
            return self
        _, c = self.lead()
        return self.scale(self.ring.field.inv(c))

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_parts(self):
        parts = {}
        for e, c in self.terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: Polynomial(self.ring, t) for d, t in sorted(parts.items())}

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant(self):
        return self.terms.get(self.ring._zero_exp, self.ring.field.zero())

    def variables(self):
        used = set()
        for e in self.terms:
            for i, ei in enumerate(e):
                if ei:
                    used.add(self.ring.names[i])
        return used

    def coeff_of(self, exps):
        return self.terms.get(tuple(exps), self.ring.field.zero())

    def sorted_terms(self):
        key = self.ring.order.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    # -- substitution ------------------------------------------------------

    def substitute(self, images):
        """Evaluate under name -> polynomial (in any common ring)."""
        ring = None
        for v in images.values():
            ring = v.ring
            break
        if ring is None:
            ring = self.ring
        imgs = []
        for n in self.ring.names:
            if n in images:
                imgs.append(images[n])
            else:
                imgs.append(ring.var(n))
        out = ring.zero()
        for e, c in self.terms.items():
            t = ring.const(c)
            for i, ei in enumerate(e):
                if ei:
                    t = t * imgs[i] ** ei
            out = out + t
        return out

    def __repr__(self):
        return format_poly(self)


def format_coeff(c):
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return str(c.numerator)
        return "%d/%d" % (c.numerator, c.denominator)
    return str(c)


def format_poly(f):
    if f.is_zero():
        return "0"
    names = f.ring.names
    pieces = []
    for e, c in f.sorted_terms():
        mono = "*".join(
            n if k == 1 else "%s^%d" % (n, k) for n, k in zip(names, e) if k
        )
        cs = format_coeff(c)
        if mono:
            if cs == "1":
                term = mono
            elif cs == "-1":
                term = "-" + mono
            else:
                term = cs + "*" + mono
        else:
            term = cs
        pieces.append(term)
    out = pieces[0]
    for t in pieces[1:]:
        if t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out


def linear_substitution(ring, matrix, var_names=None):
    """Build {name: linear form} from a square coefficient matrix.

    Row i gives the image of ``var_names[i]`` as sum_j M[i][j] * var_names[j].
    The matrix must be invertible over the coefficient field.
    """
    if var_names is None:
        var_names = ring.names
    n = len(var_names)
    if len(matrix) != n or any(len(r) != n for r in matrix):
        raise ValueError("matrix shape mismatch")
    if not _invertible(ring.field, [list(r) for r in matrix]):
        raise ValueError("substitution matrix is singular")
    images = {}
    for i, name in enumerate(var_names):
        f = ring.zero()
        for j, other in enumerate(var_names):
            f = f + ring.var(other).scale(matrix[i][j])
        images[name] = f
    return images


def _invertible(field, m):
    n = len(m)
    m = [[field.coerce(x) for x in row] for row in m]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return False
        m[col], m[piv] = m[piv], m[col]
        inv = field.inv(m[col][col])
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                if field.char:
                    m[r] = [(a - factor * b) % field.char for a, b in zip(m[r], m[col])]
                else:
                    m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return True
