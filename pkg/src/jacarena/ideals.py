"""Groebner bases with cofactor tracking, ideal membership, and nilpotency certificates.

Over QQ and GF(p) this is Buchberger's algorithm with a reduced monic output.
Over ZZ it computes a strong basis in the Kandri-Rody--Kapur style: the pair
queue carries both S-polynomials and gcd-completion (G-) polynomials, and
term reduction uses canonical nonnegative remainders, which makes normal
forms unique on cosets.  Every basis element carries cofactors expressing it
over the input generators, exactly.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from .algebra import Monomial, MonomialOrder, Polynomial, merge_vars
from .errors import InvalidCertificate


def _egcd(a, b):
    """Return (g, s, t) with g = s*a + t*b and g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class _Row:
    __slots__ = ("poly", "cof", "lm", "lc")

    def __init__(self, poly, cof, order):
        self.poly = poly
        self.cof = cof
        self.lm, self.lc = order.leading(poly.terms)


def _combine_cofs(ring, vars, base, quots, rows):
    """cof vector of (base - sum quots[i]*rows[i]) given base's cof vector."""
    out = list(base)
    for q, row in zip(quots, rows):
        if q.is_zero():
            continue
        for j, c in enumerate(row.cof):
            if not c.is_zero():
                out[j] = out[j] - q * c
    return out


def _neg_key(k):
    return tuple(_neg_key(x) for x in k) if isinstance(k, tuple) else -k


def _reduce_full(p, rows, order, track):
    """Fully reduce p by the rows; returns (normal form, quotient polys).

    Over ZZ a term c*m is rewritten to its canonical residue modulo the
    smallest applicable leading coefficient; a term survives only when no
    row can shrink it.  Terms are visited largest first through a lazy
    max-heap, so reductions only ever touch strictly smaller monomials.
    """
    ring = p.ring
    vars = order.vars
    zero = ring.zero()
    work = dict(p.terms)
    remainder = {}
    quots = [{} for _ in rows] if track else None
    integer = ring.kind == "ZZ"
    heap = []
    neg_keys = {}

    def push(m):
        k = neg_keys.get(m)
        if k is None:
            k = neg_keys[m] = _neg_key(order.key(m))
        heapq.heappush(heap, (k, m))

    for m in work:
        push(m)
    while heap:
        _, m = heapq.heappop(heap)
        c = work.get(m)
        if c is None:
            continue
        best = None
        for idx, row in enumerate(rows):
            if row.lm.divides(m):
                if not integer:
                    best = (idx, row)
                    break
                if best is None or row.lc < best[1].lc:
                    best = (idx, row)
        if best is None:
            remainder[m] = c
            del work[m]
            continue
        idx, row = best
        if integer:
            q, r = divmod(c, row.lc)
            if q == 0:
                remainder[m] = c
                del work[m]
                continue
        else:
            q = ring.mul(c, ring.invert(row.lc))
            r = zero
        shift = m.div(row.lm)
        for m2, c2 in row.poly.terms.items():
            mm = m2.mul(shift)
            old = work.get(mm)
            cc = ring.sub(old if old is not None else zero, ring.mul(q, c2))
            if cc == zero:
                if old is not None:
                    del work[mm]
            else:
                work[mm] = cc
                if old is None and mm != m:
                    push(mm)
        if integer and r != 0:
            remainder[m] = r
            work.pop(m, None)
        if track:
            quots[idx][shift] = ring.add(quots[idx].get(shift, zero), q)
    nf = Polynomial(ring, vars, remainder)
    if track:
        return nf, [Polynomial(ring, vars, q) for q in quots]
    return nf, None


class GroebnerBasis:
    """Result of a basis computation, with reduction and membership services."""

    def __init__(self, ring, order, gens, rows, tracked=True):
        self.ring = ring
        self.order = order
        self.gens = tuple(gens)
        self._rows = rows
        self.tracked = tracked
        self.basis = tuple(r.poly for r in rows)
        self.cofactors = tuple(tuple(r.cof) for r in rows) if tracked else None

    def normal_form(self, p):
        nf, _ = _reduce_full(p.remap(self.order.vars), self._rows, self.order, False)
        return nf

    def reduce_tracked(self, p):
        return _reduce_full(p.remap(self.order.vars), self._rows, self.order, True)

    @property
    def contains_one(self):
        one = Polynomial.constant(self.ring, 1, self.order.vars)
        return self.normal_form(one).is_zero()

    def is_member(self, p):
        return self.normal_form(p).is_zero()

    def member_cofactors(self, p):
        """Cofactors of p over the input generators, or None if not a member."""
        if not self.tracked:
            raise ValueError("basis was computed without cofactor tracking")
        nf, quots = self.reduce_tracked(p)
        if not nf.is_zero():
            return None
        vars = self.order.vars
        out = [Polynomial.zero(self.ring, vars) for _ in self.gens]
        for q, row in zip(quots, self._rows):
            if q.is_zero():
                continue
            for j, c in enumerate(row.cof):
                if not c.is_zero():
                    out[j] = out[j] + q * c
        return out

    def lead_terms(self):
        return [(r.lm, r.lc) for r in self._rows]

    def staircase(self, limit=None):
        """Monomials not under any leading monomial, or None if infinite.

        Over ZZ only rows with unit leading coefficient block a monomial
        completely; other rows merely bound its coefficient.
        """
        if self.ring.kind == "ZZ":
            blockers = [r.lm for r in self._rows if r.lc == 1]
        else:
            blockers = [r.lm for r in self._rows]
        return _staircase_of(blockers, len(self.order.vars), limit)


def _staircase_of(lead_monos, nvars, limit=None):
    if any(m.is_one() for m in lead_monos):
        return []
    bounds = []
    for i in range(nvars):
        b = None
        for m in lead_monos:
            exps = m.padded(nvars)
            if exps[i] > 0 and all(e == 0 for j, e in enumerate(exps) if j != i):
                b = exps[i] if b is None else min(b, exps[i])
        if b is None:
            return None
        bounds.append(b)
    out = []
    stack = [()]
    while stack:
        prefix = stack.pop()
        if len(prefix) == nvars:
            mono = Monomial(prefix)
            if not any(m.divides(mono) for m in lead_monos):
                out.append(mono)
            continue
        i = len(prefix)
        for e in range(bounds[i]):
            stack.append(prefix + (e,))
    out.sort(key=lambda m: (m.degree(), m.padded(nvars)))
    if limit is not None and len(out) > limit:
        return out[:limit]
    return out


def groebner(gens, order, ring=None, track=True):
    """Compute a reduced (monic / strong, per coefficient ring) basis.

    The returned object satisfies two exact invariants: every S- and
    G-polynomial of the basis reduces to zero, and (when track is set) every
    basis element equals its cofactor combination over the inputs.  With
    track=False the cofactor bookkeeping is skipped, which is much faster
    when only membership answers are needed.
    """
    gens = list(gens)
    if gens:
        ring = gens[0].ring
    if ring is None:
        raise ValueError("empty generator list needs an explicit ring")
    vars = order.vars
    inputs = [g.remap(vars) for g in gens]
    zero = Polynomial.zero(ring, vars)
    integer = ring.kind == "ZZ"

    rows = []
    queue = []

    def normalized(poly, cof):
        _, lc = order.leading(poly.terms)
        if integer:
            if lc < 0:
                poly = -poly
                cof = [-c for c in cof] if cof is not None else None
        elif lc != ring.one():
            inv = ring.invert(lc)
            poly = poly.scale(inv)
            cof = [c.scale(inv) for c in cof] if cof is not None else None
        return poly, cof

    def enqueue(kind, i, j):
        lcm = rows[i].lm.lcm(rows[j].lm)
        heapq.heappush(queue, ((lcm.degree(), order.key(lcm), i, j, kind), kind, i, j))

    def push(poly, cof):
        poly, cof = normalized(poly, cof)
        row = _Row(poly, cof, order)
        new_index = len(rows)
        rows.append(row)
        for i in range(new_index):
            enqueue("s", i, new_index)
            if integer:
                enqueue("g", i, new_index)

    for j, g in enumerate(inputs):
        if g.is_zero():
            continue
        nf, quots = _reduce_full(g, rows, order, track)
        if nf.is_zero():
            continue
        if track:
            base = [zero] * len(inputs)
            base[j] = Polynomial.constant(ring, 1, vars)
            push(nf, _combine_cofs(ring, vars, base, quots, rows))
        else:
            push(nf, None)

    while queue:
        _, kind, i, j = heapq.heappop(queue)
        ri, rj = rows[i], rows[j]
        lcm = ri.lm.lcm(rj.lm)
        if kind == "s":
            coprime_monos = lcm == ri.lm.mul(rj.lm)
            if coprime_monos and (not integer or math.gcd(ri.lc, rj.lc) == 1):
                continue
            si, sj = lcm.div(ri.lm), lcm.div(rj.lm)
            if integer:
                l = ri.lc * rj.lc // math.gcd(ri.lc, rj.lc)
                ui, uj = l // ri.lc, l // rj.lc
            else:
                ui = uj = ring.one()
            cand = ri.poly.mul_term(si, ui) - rj.poly.mul_term(sj, uj)
            cof = (
                [a.mul_term(si, ui) - b.mul_term(sj, uj) for a, b in zip(ri.cof, rj.cof)]
                if track
                else None
            )
        else:
            if ri.lc % rj.lc == 0 or rj.lc % ri.lc == 0:
                continue
            g, s, t = _egcd(ri.lc, rj.lc)
            si, sj = lcm.div(ri.lm), lcm.div(rj.lm)
            cand = ri.poly.mul_term(si, s) + rj.poly.mul_term(sj, t)
            cof = (
                [a.mul_term(si, s) + b.mul_term(sj, t) for a, b in zip(ri.cof, rj.cof)]
                if track
                else None
            )
        nf, quots = _reduce_full(cand, rows, order, track)
        if nf.is_zero():
            continue
        push(nf, _combine_cofs(ring, vars, cof, quots, rows) if track else None)

    rows_sorted = sorted(rows, key=lambda r: (order.key(r.lm), r.lc))
    kept = []
    for row in rows_sorted:
        dominated = False
        for other in kept:
            if other.lm.divides(row.lm) and (not integer or row.lc % other.lc == 0):
                dominated = True
                break
        if not dominated:
            kept.append(row)

    changed = True
    while changed:
        changed = False
        for idx, row in enumerate(kept):
            others = kept[:idx] + kept[idx + 1 :]
            nf, quots = _reduce_full(row.poly, others, order, track)
            if nf == row.poly:
                continue
            cof = _combine_cofs(ring, vars, row.cof, quots, others) if track else None
            poly, cof = normalized(nf, cof)
            kept[idx] = _Row(poly, cof, order)
            changed = True

    kept.sort(key=lambda r: (order.key(r.lm), r.lc))
    return GroebnerBasis(ring, order, inputs, kept, tracked=track)


def ideal_member(x, gens, order=None):
    """Cofactors c with x = sum c_i * gens_i, or None when x is not a member."""
    if not gens:
        return [] if x.is_zero() else None
    if order is None:
        vars = x.vars
        for g in gens:
            vars = merge_vars(vars, g.vars)
        order = MonomialOrder("DEGREVLEX", vars)
    gb = groebner(gens, order)
    cofs = gb.member_cofactors(x.remap(order.vars))
    return cofs


@dataclass(frozen=True)
class NilCertificate:
    """Witness that element^exponent = sum cofactor_i * generator_i, exactly."""

    element: Polynomial
    exponent: int
    generators: tuple
    cofactors: tuple

    def verify(self):
        lhs = self.element ** self.exponent
        rhs = Polynomial.zero(self.element.ring, self.element.vars)
        for c, g in zip(self.cofactors, self.generators):
            rhs = rhs + c * g
        return lhs == rhs

    def require_valid(self):
        if self.exponent < 0 or len(self.generators) != len(self.cofactors):
            raise InvalidCertificate(f"malformed certificate {self!r}")
        if not self.verify():
            raise InvalidCertificate(
                f"identity fails for exponent {self.exponent} over "
                f"{len(self.generators)} generators"
            )
        return self


def radical_combine(cert_xy, cert_x):
    """From certificates for x*y over U and for x over U + [y], build one for x over U.

    With (xy)^m = sum c_u u and x^n = A + c*y, A supported on U, one has
    x^(nm+m) = A*W*x^m + c^m*(xy)^m for the binomial tail W, so the output
    exponent is n*m + m.
    """
    cert_xy.require_valid()
    cert_x.require_valid()
    if not cert_x.generators:
        raise InvalidCertificate("inner certificate has no generator for y")
    y = cert_x.generators[-1]
    shared = cert_x.generators[:-1]
    if len(shared) != len(cert_xy.generators) or any(
        a != b for a, b in zip(shared, cert_xy.generators)
    ):
        raise InvalidCertificate("generator lists do not agree below y")
    x = cert_x.element
    if cert_xy.element != x * y:
        raise InvalidCertificate("outer certificate is not for x*y")

    m = cert_xy.exponent
    n = cert_x.exponent
    gens = cert_xy.generators

    if m == 0:
        return NilCertificate(x, 0, gens, cert_xy.cofactors).require_valid()

    one = Polynomial.constant(x.ring, 1, x.vars)
    if y == one:
        for j, g in enumerate(gens):
            if g == one:
                cofs = list(cert_x.cofactors[:-1])
                cofs[j] = cofs[j] + cert_x.cofactors[-1]
                return NilCertificate(x, n, gens, tuple(cofs)).require_valid()

    c = cert_x.cofactors[-1]
    a_part = Polynomial.zero(x.ring, x.vars)
    for d, u in zip(cert_x.cofactors[:-1], shared):
        a_part = a_part + d * u
    cy = c * y
    w = Polynomial.zero(x.ring, x.vars)
    for k in range(m):
        w = w + (cy ** k) * (a_part ** (m - 1 - k)) * math.comb(m, k)
    xm = x ** m
    cm = c ** m
    cofs = tuple(
        d * w * xm + cm * cxy
        for d, cxy in zip(cert_x.cofactors[:-1], cert_xy.cofactors)
    )
    return NilCertificate(x, n * m + m, gens, cofs).require_valid()
