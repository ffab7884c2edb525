"""Buchberger's algorithm for ideals and submodules of free modules.

Free-module elements are dicts mapping (component, exponent tuple) to field
elements.  The module order is position-over-term: lower component index wins,
ties broken by the ring's monomial order.  Putting the components to be
eliminated first therefore makes every Groebner basis an elimination basis
for those components, which is how syzygies are extracted.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class ResourceGuardExceeded(RuntimeError):
    """Raised when a Groebner computation exceeds the configured budget."""


@dataclass
class Guard:
    max_basis: int = 20000
    max_degree: int = 40

    def check_basis(self, n):
        if n > self.max_basis:
            raise ResourceGuardExceeded("basis size %d exceeds budget %d" % (n, self.max_basis))

    def check_degree(self, d):
        if d > self.max_degree:
            raise ResourceGuardExceeded("S-pair degree %d exceeds budget %d" % (d, self.max_degree))


DEFAULT_GUARD = Guard()


class Vec:
    """An element of a free module R^r; immutable by convention."""

    __slots__ = ("ring", "data")

    def __init__(self, ring, data):
        self.ring = ring
        self.data = data

    @classmethod
    def from_poly(cls, f, comp=0):
        return cls(f.ring, {(comp, e): c for e, c in f.terms.items()})

    @classmethod
    def unit(cls, ring, comp):
        return cls(ring, {(comp, ring._zero_exp): ring.field.one()})

    def is_zero(self):
        return not self.data

    def __bool__(self):
        return bool(self.data)

    def component(self, i):
        """The polynomial in slot i."""
        terms = {e: c for (j, e), c in self.data.items() if j == i}
        return self.ring.poly(terms)

    def components(self):
        return sorted({j for j, _ in self.data})

    def add(self, other):
        p = self.ring.char
        data = dict(self.data)
        for k, c in other.data.items():
            s = data.get(k)
            if s is None:
                data[k] = c
            else:
                s = s + c
                if p:
                    s %= p
                if s:
                    data[k] = s
                else:
                    del data[k]
        return Vec(self.ring, data)

    def neg(self):
        p = self.ring.char
        if p:
            return Vec(self.ring, {k: -c % p for k, c in self.data.items()})
        return Vec(self.ring, {k: -c for k, c in self.data.items()})

    def sub(self, other):
        return self.add(other.neg())

    def scale(self, c):
        if not c:
            return Vec(self.ring, {})
        p = self.ring.char
        if p:
            data = {k: v * c % p for k, v in self.data.items()}
            data = {k: v for k, v in data.items() if v}
        else:
            data = {k: v * c for k, v in self.data.items()}
        return Vec(self.ring, data)

    def mul_term(self, exps, c):
        """Multiply by the term c * x^exps."""
        p = self.ring.char
        data = {}
        for (j, e), v in self.data.items():
            w = v * c % p if p else v * c
            if w:
                data[(j, tuple(a + b for a, b in zip(e, exps)))] = w
        return Vec(self.ring, data)

    def mul_poly(self, f):
        out = Vec(self.ring, {})
        for e, c in f.terms.items():
            out = out.add(self.mul_term(e, c))
        return out

    def lead(self):
        """((component, exps), coeff) under position-over-term order."""
        okey = self.ring.order.key
        k = min(self.data, key=lambda t: (t[0], _NegKey(okey(t[1]))))
        return k, self.data[k]

    def monic(self):
        if not self.data:
            return self
        _, c = self.lead()
        return self.scale(self.ring.field.inv(c))

    def degree_with(self, twists):
        """Max degree of terms, offset by generator degrees per component."""
        if not self.data:
            return -1
        return max(sum(e) + twists[j] for (j, e) in self.data)

    def is_homogeneous_with(self, twists):
        degs = {sum(e) + twists[j] for (j, e) in self.data}
        return len(degs) <= 1

    def __repr__(self):
        comps = {}
        for (j, e), c in self.data.items():
            comps.setdefault(j, {})[e] = c
        inner = ", ".join("%d: %s" % (j, self.ring.poly(t)) for j, t in sorted(comps.items()))
        return "<%s>" % inner


class _NegKey:
    """Reverses comparison of a wrapped key (for the min() in Vec.lead)."""

    __slots__ = ("k",)

    def __init__(self, k):
        self.k = k

    def __lt__(self, other):
        return other.k < self.k

    def __eq__(self, other):
        return self.k == other.k


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def normal_form(v, basis):
    """Fully reduce v modulo a list of Vecs (every term, not just the lead)."""
    if isinstance(v, Vec):
        return _nf_vec(v, basis)
    vec = _nf_vec(Vec.from_poly(v), [Vec.from_poly(g) for g in basis])
    return vec.component(0)


def _nf_vec(v, basis):
    ring = v.ring
    field = ring.field
    p = ring.char
    okey = ring.order.key
    leads = [(g.lead(), g) for g in basis if g]
    work = dict(v.data)
    rem = {}
    while work:
        jc, ec = min(work, key=lambda t: (t[0], _NegKey(okey(t[1]))))
        cc = work[jc, ec]
        hit = None
        for ((jg, eg), cg), g in leads:
            if jg == jc and _divides(eg, ec):
                hit = (eg, cg, g)
                break
        if hit is None:
            rem[(jc, ec)] = cc
            del work[jc, ec]
        else:
            eg, cg, g = hit
            factor = cc * field.inv(cg)
            shift = tuple(a - b for a, b in zip(ec, eg))
            for (jg2, eg2), cg2 in g.data.items():
                k = (jg2, tuple(a + b for a, b in zip(eg2, shift)))
                s = work.get(k, 0) - factor * cg2
                if p:
                    s %= p
                if s:
                    work[k] = s
                else:
                    work.pop(k, None)
    return Vec(ring, rem)


def _spair(f, g):
    (jf, ef), cf = f.lead()
    (jg, eg), cg = g.lead()
    assert jf == jg
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    field = f.ring.field
    mf = f.mul_term(tuple(a - b for a, b in zip(lcm, ef)), field.inv(cf))
    mg = g.mul_term(tuple(a - b for a, b in zip(lcm, eg)), field.inv(cg))
    return mf.sub(mg)


def buchberger(vecs, guard=None):
    """Reduced Groebner basis of the submodule generated by ``vecs``."""
    guard = guard or DEFAULT_GUARD
    G = [v.monic() for v in vecs if v]
    if not G:
        return []
    ring = G[0].ring
    rank1 = all(max(j for j, _ in g.data) == 0 for g in G) if G else True

    def lcm_info(i, j):
        (ci, ei), _ = G[i].lead()
        (cj, ej), _ = G[j].lead()
        if ci != cj:
            return None
        lcm = tuple(max(a, b) for a, b in zip(ei, ej))
        return (sum(lcm), ci, lcm)

    pairs = {}
    for i in range(len(G)):
        for j in range(i):
            info = lcm_info(j, i)
            if info is not None:
                pairs[(j, i)] = info

    while pairs:
        (i, j), (deg, comp, lcm) = min(pairs.items(), key=lambda kv: (kv[1][0], kv[0]))
        del pairs[(i, j)]
        guard.check_degree(deg)
        (ci, ei), _ = G[i].lead()
        (cj, ej), _ = G[j].lead()
        # product criterion (valid only in the ideal case)
        if rank1 and all(a == 0 or b == 0 for a, b in zip(ei, ej)):
            continue
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            (ck, ek), _ = G[k].lead()
            if ck == comp and _divides(ek, lcm):
                a, b = min(i, k), max(i, k)
                c, d = min(j, k), max(j, k)
                if (a, b) not in pairs and (c, d) not in pairs:
                    skip = True
                    break
        if skip:
            continue
        rem = _nf_vec(_spair(G[i], G[j]), G)
        if rem:
            rem = rem.monic()
            G.append(rem)
            guard.check_basis(len(G))
            new = len(G) - 1
            for k in range(new):
                info = lcm_info(k, new)
                if info is not None:
                    pairs[(k, new)] = info
            if rank1 and max(j2 for j2, _ in rem.data) != 0:
                rank1 = False

    return interreduce(G)


def interreduce(G):
    """Minimal reduced basis: prune divisible leads, tail-reduce, sort."""
    G = [g for g in G if g]
    if not G:
        return []
    okey = G[0].ring.order.key
    G.sort(key=lambda g: sum(g.lead()[0][1]))
    minimal = []
    for g in G:
        j, e = g.lead()[0]
        if any(m.lead()[0][0] == j and _divides(m.lead()[0][1], e) for m in minimal):
            continue
        minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = _nf_vec(g, others)
        if r:
            out.append(r.monic())
    out.sort(key=lambda g: (g.lead()[0][0], _NegKey(okey(g.lead()[0][1]))))
    return out


def groebner_basis(polys, guard=None):
    """Reduced Groebner basis of an ideal, as polynomials."""
    vecs = [Vec.from_poly(f) for f in polys if f]
    return [v.component(0) for v in buchberger(vecs, guard=guard)]


def syzygies(vecs, rank=None, guard=None):
    """Generators of the syzygy module of ``vecs`` inside R^len(vecs).

    ``vecs`` live in a free module of the given rank (default: inferred).
    Works by computing a Groebner basis of the graph module {(v_i, e_i)} with
    the target components ordered first.
    """
    vecs = list(vecs)
    if not vecs:
        return []
    ring = vecs[0].ring
    if rank is None:
        rank = max((max((j for j, _ in v.data), default=-1) for v in vecs), default=-1) + 1
    aug = []
    for i, v in enumerate(vecs):
        data = dict(v.data)
        data[(rank + i, ring._zero_exp)] = ring.field.one()
        aug.append(Vec(ring, data))
    out = []
    for g in buchberger(aug, guard=guard):
        if all(j >= rank for j, _ in g.data):
            out.append(Vec(ring, {(j - rank, e): c for (j, e), c in g.data.items()}))
    return out


def kernel_of_map(columns, rank, guard=None):
    """Kernel of R^s -> R^rank sending e_i to columns[i]; gens in R^s."""
    return syzygies(columns, rank=rank, guard=guard)


def module_contains(v, gb):
    return not _nf_vec(v, gb)


def submodule_equal(gens_a, gens_b, guard=None):
    """Whether two lists of Vecs generate the same submodule."""
    ga = buchberger(gens_a, guard=guard)
    gb = buchberger(gens_b, guard=guard)
    return all(module_contains(v, gb) for v in gens_a) and all(
        module_contains(v, ga) for v in gens_b
    )
