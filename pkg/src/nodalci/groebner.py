"""Buchberger engine and ideal-theoretic invariants: normal forms, ideal
arithmetic (sum, product, quotient, saturation, elimination), dimension,
degree, Hilbert series, and zero-dimensional radical certificates.

The engine is plain Buchberger with both Gebauer-Moeller pair criteria,
normal pair selection, and heap-driven reduction on packed monomial keys.
Bases are fully reduced and canonical, so ideal equality is basis equality.
"""

from __future__ import annotations

import heapq
import sys
from fractions import Fraction

import numpy as np

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

from . import linalg
from .ring import Poly, Ring, random_form, seeded_rng

__all__ = [
    "Ideal", "HilbertSeries", "ideal",
    "groebner_basis", "normal_form", "certify_basis",
    "ideal_sum", "ideal_product", "ideal_quotient", "saturation",
    "intersect", "eliminate", "exact_div",
    "dimension", "projective_dimension", "degree",
    "hilbert_series", "hilbert_function",
    "quotient_basis", "multiplication_matrix",
    "is_radical_zero_dim", "radical_zero_dim", "zero_dim_certificate",
    "projective_reduced_degree",
]

_M = 127


# ---------------------------------------------------------------------------
# raw reduction machinery
# ---------------------------------------------------------------------------

def _support_mask(ring, key):
    m = 0
    for i, s in enumerate(ring._shifts):
        if ((key >> s) & _M) != _M:
            m |= 1 << i
    return m


def _nf_terms(ring, pairs, basis):
    """Full normal form.  pairs: (key, coeff) stream; basis: list of
    [lead, mask, keys, coeffs] with monic coeffs.  Returns the remainder
    as a descending (key, coeff) list."""
    p = ring.p
    d = {}
    heap = []
    push = heapq.heappush
    pop = heapq.heappop
    for k, c in pairs:
        if k in d:
            d[k] = (d[k] + c) % p if p else d[k] + c
        else:
            d[k] = c % p if p else c
            push(heap, -k)
    out = []
    guards = ring._guards
    gchk = ring._gchk
    shifts = ring._shifts
    nv = ring.n
    while heap:
        k = -pop(heap)
        c = d[k]
        if not c:
            continue
        km = 0
        for i in range(nv):
            if ((k >> shifts[i]) & _M) != _M:
                km |= 1 << i
        red = None
        for e in basis:
            if e[1] & ~km:
                continue
            gl = e[0]
            if gl > k:
                continue
            if ((gl | guards) - k) & gchk == gchk:
                red = e
                break
        if red is None:
            out.append((k, c))
            d[k] = 0
            continue
        gl, _, gkeys, gcoeffs = red
        off = k - gl
        if p:
            for t in range(1, len(gkeys)):
                kk = gkeys[t] + off
                cc = c * gcoeffs[t]
                if kk in d:
                    d[kk] = (d[kk] - cc) % p
                else:
                    d[kk] = (-cc) % p
                    push(heap, -kk)
        else:
            for t in range(1, len(gkeys)):
                kk = gkeys[t] + off
                cc = c * gcoeffs[t]
                if kk in d:
                    d[kk] = d[kk] - cc
                else:
                    d[kk] = -cc
                    push(heap, -kk)
        d[k] = 0
    return out


def _make_entry(ring, terms):
    """Monic basis entry [lead, mask, keys, coeffs] from descending terms."""
    lead, lc = terms[0]
    if lc != ring.coeff(1):
        inv = ring.coeff_inv(lc)
        p = ring.p
        if p:
            terms = [(k, (c * inv) % p) for k, c in terms]
        else:
            terms = [(k, c * inv) for k, c in terms]
    keys = tuple(k for k, _ in terms)
    coeffs = tuple(c for _, c in terms)
    return [lead, _support_mask(ring, lead), keys, coeffs]


def _gm_update(ring, leads, masks, alive, t):
    """Gebauer-Moeller pair update for the element at index t.  Mutates
    ``alive`` ((i, j) -> lcm key) and returns the surviving new pairs as
    (lcm, i, t) triples."""
    lcm = ring.mono_lcm
    divides = ring.mono_divides
    tl = leads[t]
    tm = masks[t]
    cand = [(lcm(tl, leads[j]), j) for j in range(t)]
    # criterion M: knock out strictly multiple lcms among the new pairs
    keep = []
    for a, (la, ja) in enumerate(cand):
        dead = False
        for b, (lb, jb) in enumerate(cand):
            if a == b:
                continue
            if lb != la and divides(lb, la):
                dead = True
                break
            if lb == la and b < a:
                # criterion F: one representative per lcm value
                dead = True
                break
        if not dead:
            keep.append((la, ja))
    # criterion B: chain-prune the old pairs against the new lead
    for (i, j), lij in list(alive.items()):
        if divides(tl, lij) and lcm(tl, leads[i]) != lij \
                and lcm(tl, leads[j]) != lij:
            del alive[(i, j)]
    # product criterion last: coprime leads never make new pairs
    out = []
    for la, ja in keep:
        if masks[ja] & tm == 0:
            continue
        alive[(ja, t)] = la
        out.append((la, ja, t))
    return out


def _buchberger(ring, gens):
    basis = []
    leads = []
    masks = []
    alive = {}
    heap = []
    wdeg = ring.wdeg_of

    def absorb(terms):
        red = _nf_terms(ring, terms, basis)
        if not red:
            return
        e = _make_entry(ring, red)
        t = len(basis)
        basis.append(e)
        leads.append(e[0])
        masks.append(e[1])
        for l, i, j in _gm_update(ring, leads, masks, alive, t):
            heapq.heappush(heap, (wdeg(l), l, i, j))

    for f in sorted(gens, key=lambda f: f.lead_key()):
        absorb(list(f.terms))

    while heap:
        _, l, i, j = heapq.heappop(heap)
        if alive.get((i, j)) != l:
            continue
        del alive[(i, j)]
        gi = basis[i]
        gj = basis[j]
        offi = l - gi[0]
        offj = l - gj[0]
        s = [(gi[2][t] + offi, gi[3][t]) for t in range(1, len(gi[2]))]
        if ring.p:
            s += [(gj[2][t] + offj, ring.p - gj[3][t])
                  for t in range(1, len(gj[2]))]
        else:
            s += [(gj[2][t] + offj, -gj[3][t]) for t in range(1, len(gj[2]))]
        absorb(s)

    # minimalize: drop entries whose lead another kept lead divides
    order = sorted(range(len(basis)), key=lambda i: leads[i])
    kept = []
    for i in order:
        li = leads[i]
        if any(ring.mono_divides(leads[j], li) for j in kept):
            continue
        kept.append(i)
    # tail-reduce each against the others
    final = []
    for i in kept:
        others = [basis[j] for j in kept if j != i]
        red = _nf_terms(ring, list(zip(basis[i][2], basis[i][3])), others)
        final.append(_make_entry(ring, red))
    final.sort(key=lambda e: e[0])
    return final


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------

class Ideal:
    """Generator list with a cached reduced basis and cached invariants."""

    __slots__ = ("ring", "gens", "_cache")

    def __init__(self, ring, gens):
        norm = []
        for g in gens:
            if not isinstance(g, Poly):
                g = ring.constant(g)
            elif g.ring._desc != ring._desc:
                g = ring.convert(g)
            if g:
                norm.append(g)
        self.ring = ring
        self.gens = tuple(norm)
        self._cache = {}

    def __repr__(self):
        return "Ideal(%d gens over %r)" % (len(self.gens), self.ring)

    def _raw_basis(self):
        got = self._cache.get("raw")
        if got is None:
            got = _buchberger(self.ring, self.gens)
            self._cache["raw"] = got
        return got

    def groebner(self):
        """The reduced basis, ascending by lead monomial."""
        got = self._cache.get("gb")
        if got is None:
            got = tuple(Poly(self.ring, tuple(zip(e[2], e[3])))
                        for e in self._raw_basis())
            self._cache["gb"] = got
        return got

    def lead_keys(self):
        return tuple(e[0] for e in self._raw_basis())

    def normal_form(self, f):
        if isinstance(f, (int, Fraction)):
            f = self.ring.constant(f)
        if f.ring._desc != self.ring._desc:
            f = self.ring.convert(f)
        red = _nf_terms(self.ring, list(f.terms), self._raw_basis())
        return Poly(self.ring, tuple(red))

    def contains(self, f):
        return self.normal_form(f).is_zero

    def is_zero(self):
        return not self.groebner()

    def is_unit(self):
        gb = self.groebner()
        return bool(gb) and gb[0].wdeg() == 0

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring._desc != other.ring._desc:
            return False
        return self.groebner() == other.groebner()

    __hash__ = None


def ideal(ring, *gens):
    if len(gens) == 1 and isinstance(gens[0], (list, tuple)):
        gens = gens[0]
    return Ideal(ring, gens)


def groebner_basis(I):
    I.groebner()
    return I


def normal_form(f, I):
    return I.normal_form(f)


def certify_basis(I):
    """Re-derive the pair list for the cached basis and check that every
    surviving S-polynomial reduces to zero, every original generator lies
    in the basis span, and the basis is reduced.  Returns True or raises."""
    ring = I.ring
    basis = I._raw_basis()
    leads = [e[0] for e in basis]
    masks = [e[1] for e in basis]
    for i, e in enumerate(basis):
        if e[3][0] != ring.coeff(1):
            raise AssertionError("basis element %d is not monic" % i)
        for j in range(len(basis)):
            if j != i and any(ring.mono_divides(leads[j], k) for k in e[2]):
                raise AssertionError("basis element %d is not tail-reduced" % i)
    alive = {}
    pairs = []
    for t in range(len(basis)):
        pairs += _gm_update(ring, leads, masks, alive, t)
    for l, i, j in pairs:
        if (i, j) not in alive:
            continue
        gi, gj = basis[i], basis[j]
        offi = l - gi[0]
        offj = l - gj[0]
        s = [(gi[2][t] + offi, gi[3][t]) for t in range(1, len(gi[2]))]
        if ring.p:
            s += [(gj[2][t] + offj, ring.p - gj[3][t])
                  for t in range(1, len(gj[2]))]
        else:
            s += [(gj[2][t] + offj, -gj[3][t]) for t in range(1, len(gj[2]))]
        if _nf_terms(ring, s, basis):
            raise AssertionError("S-polynomial (%d, %d) fails to reduce" % (i, j))
    for g in I.gens:
        if _nf_terms(ring, list(g.terms), basis):
            raise AssertionError("generator escapes its own basis")
    return True


# -- ideal arithmetic --------------------------------------------------------

def ideal_sum(I, J):
    if I.ring._desc != J.ring._desc:
        raise ValueError("ring mismatch")
    return Ideal(I.ring, I.gens + J.gens)


def ideal_product(I, J):
    if I.ring._desc != J.ring._desc:
        raise ValueError("ring mismatch")
    return Ideal(I.ring, tuple(f * g for f in I.gens for g in J.gens))


def _fresh_name(ring, base="t"):
    name = "_" + base
    while name in ring._idx:
        name += "0"
    return name


def eliminate(I, names):
    """I intersected with the subring omitting ``names``; result lives in
    that subring."""
    names = tuple(names)
    ring = I.ring
    for v in names:
        if v not in ring._idx:
            raise ValueError("unknown variable %r" % v)
    ringE = ring.fronted(names)
    IE = Ideal(ringE, [ringE.convert(g) for g in I.gens])
    k = ringE.split
    n2 = ringE.n - k
    top_shift = 8 * (n2 + 1)
    free_top = sum(_M << (8 * i) for i in range(k))
    sub = ring.without(names)
    out = []
    for g in IE.groebner():
        if (g.lead_key() >> top_shift) == free_top:
            out.append(sub.convert(ringE.plain().convert(g)))
    return Ideal(sub, out)


def intersect(I, J):
    if I.ring._desc != J.ring._desc:
        raise ValueError("ring mismatch")
    ring = I.ring
    t = _fresh_name(ring)
    ringT = ring.extended([t])
    tv = ringT.var(t)
    gens = [tv * ringT.convert(f) for f in I.gens]
    gens += [(1 - tv) * ringT.convert(g) for g in J.gens]
    K = eliminate(Ideal(ringT, gens), [t])
    return Ideal(ring, [ring.convert(g) for g in K.gens])


def exact_div(f, g):
    """Quotient f / g, erroring unless the division is exact."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    entry = _make_entry(ring, list(g.terms))
    basis = [entry]
    p = ring.p
    d = dict(f.terms)
    heap = [-k for k in d]
    heapq.heapify(heap)
    quot = {}
    gl = entry[0]
    guards = ring._guards
    gchk = ring._gchk
    while heap:
        k = -heapq.heappop(heap)
        c = d.get(k, 0)
        if not c:
            continue
        if ((gl | guards) - k) & gchk != gchk:
            raise ArithmeticError("inexact division")
        off = k - gl
        quot[off + ring._one_key] = c
        gkeys, gcoeffs = entry[2], entry[3]
        for t in range(1, len(gkeys)):
            kk = gkeys[t] + off
            cc = c * gcoeffs[t]
            if kk in d:
                d[kk] = (d[kk] - cc) % p if p else d[kk] - cc
            else:
                d[kk] = (-cc) % p if p else -cc
                heapq.heappush(heap, -kk)
        d[k] = 0
    lc = g.lead_coeff()
    q = ring.from_terms(quot.items())
    if lc != ring.coeff(1):
        q = q * ring.coeff_inv(lc)
    return q


def _quotient_single_elim(I, g):
    """(I : g) via intersection with the principal ideal (t-trick)."""
    K = intersect(I, Ideal(I.ring, [g]))
    return Ideal(I.ring, [exact_div(h, g) for h in K.gens])


def _standard_monomials(ring, leads, d):
    return [k for k in ring.monomials_of_degree(d)
            if not any(ring.mono_divides(m, k) for m in leads)]


def _quotient_single_homog(I, g):
    """(I : g) for homogeneous data, degree by degree.

    Multiplication by g embeds R/(I:g) shifted by deg g into R/I with
    cokernel R/(I + g), which pins the Hilbert series of the quotient; the
    kernel of multiplication at each degree is linear algebra.  Generators
    are collected until the series of the generated ideal matches the
    pinned series exactly, which proves equality.  Returns None if the
    degree cap is hit (caller falls back to elimination).
    """
    ring = I.ring
    p = ring.p
    e = g.wdeg()
    ns = hilbert_series(I).numerator
    nsg = hilbert_series(Ideal(ring, list(I.gens) + [g])).numerator
    diff = list(ns) + [0] * max(0, len(nsg) - len(ns))
    for i, c in enumerate(nsg):
        diff[i] -= c
    if any(diff[:e]):
        raise ArithmeticError("series difference not divisible by t^deg")
    target_num = diff[e:]
    while target_num and target_num[-1] == 0:
        target_num.pop()
    if not target_num:
        return Ideal(ring, [ring.one])
    target = HilbertSeries(target_num, ring.weights)
    full = HilbertSeries([1], ring.weights)
    basisI = I._raw_basis()
    leadsI = [b[0] for b in basisI]
    graw = list(g.terms)
    newgens = []
    quiet = 0
    dcap = max(f.wdeg() for f in I.gens) + e + 10
    d = 0
    while d <= dcap:
        want = full.hf(d) - target.hf(d)     # dim of the colon ideal piece
        if full.hf(d) > 30000:
            return None
        if want:
            monos = ring.monomials_of_degree(d)
            index = {k: i for i, k in enumerate(monos)}
            # span of what the current generators already give in degree d
            span_rows = []
            span_polys = []
            for q in list(I.gens) + newgens:
                dq = q.wdeg()
                if dq <= d:
                    for m in ring.monomials_of_degree(d - dq):
                        span_polys.append((m, q))
            for m, q in span_polys:
                row = np.zeros(len(monos), dtype=np.int64)
                off = m - ring._one_key
                for k, c in q.terms:
                    row[index[k + off]] = c
                span_rows.append(row)
            if span_rows:
                span_m, piv = linalg.rref(np.array(span_rows), p)
                have = len(piv)
                span_red = span_m[:have]
            else:
                have = 0
                span_red = None
                piv = []
            if have < want:
                # kernel of multiplication by g into (R/I) at degree d+e
                std = _standard_monomials(ring, leadsI, d + e)
                sidx = {k: i for i, k in enumerate(std)}
                mat = np.zeros((len(monos), len(std)), dtype=np.int64)
                one = ring._one_key
                for r, m in enumerate(monos):
                    off = m - one
                    red = _nf_terms(ring, [(k + off, c) for k, c in graw],
                                    basisI)
                    for k, c in red:
                        mat[r, sidx[k]] = c
                ker = linalg.nullspace(mat.T, p)
                if len(ker) != want:
                    raise ArithmeticError("kernel dimension mismatch")
                # keep kernel vectors that enlarge the span
                for v in ker:
                    w = v % p
                    if span_red is not None:
                        for r, c in enumerate(piv):
                            f = int(w[c])
                            if f:
                                w = (w - f * span_red[r]) % p
                    if not np.any(w):
                        continue
                    poly = Poly(ring, tuple(
                        (monos[i], int(w[i])) for i in
                        sorted(np.nonzero(w)[0].tolist(),
                               key=lambda i: -monos[i])))
                    newgens.append(poly)
                    # fold into the span reduction
                    if span_red is None:
                        c0 = int(np.nonzero(w)[0][0])
                        w = w * pow(int(w[c0]), -1, p) % p
                        span_red = w.reshape(1, -1)
                        piv = [c0]
                    else:
                        c0 = int(np.nonzero(w)[0][0])
                        w = w * pow(int(w[c0]), -1, p) % p
                        span_red = np.vstack([span_red, w])
                        piv = list(piv) + [c0]
                quiet = 0
            else:
                quiet += 1
        else:
            quiet += 1
        if quiet >= 2 and d >= max(f.wdeg() for f in I.gens):
            Q = Ideal(ring, list(I.gens) + newgens)
            qn = list(hilbert_series(Q).numerator)
            # numerator of R/Q must match the pinned series
            if qn == list(target.numerator):
                return Q
            quiet = 0
        d += 1
    return None


def _quotient_single(I, g):
    """(I : g) for one nonzero g."""
    if I.ring.p and g.is_homogeneous() \
            and all(f.is_homogeneous() for f in I.gens):
        Q = _quotient_single_homog(I, g)
        if Q is not None:
            return Q
    return _quotient_single_elim(I, g)


def ideal_quotient(I, J):
    """(I : J).  For several generators, a seeded combination g in J is
    tried first and the answer (I : g) is kept only when Q * J lies in I,
    which certifies (I : g) = (I : J); otherwise the quotient is the
    intersection over the generators."""
    if isinstance(J, Poly):
        J = Ideal(I.ring, [J])
    if I.ring._desc != J.ring._desc:
        raise ValueError("ring mismatch")
    gens = [g for g in J.gens if g]
    if not gens:
        raise ZeroDivisionError("quotient by the zero ideal")
    if len(gens) == 1:
        return _quotient_single(I, gens[0])
    ring = I.ring
    dmax = max(g.wdeg() for g in gens)
    tag = "|".join(str(g) for g in gens)
    g0 = ring.zero
    for i, g in enumerate(gens):
        g0 = g0 + random_form(ring, dmax - g.wdeg(), seed=("colon", tag, i)) * g
    if g0:
        Q = _quotient_single(I, g0)
        ok = all(I.contains(q * g) for q in Q.groebner() for g in gens)
        if ok:
            return Q
    Q = _quotient_single(I, gens[0])
    for g in gens[1:]:
        Q = intersect(Q, _quotient_single(I, g))
    return Q


def saturation(I, J):
    """(I : J^infinity), iterating the quotient to stabilization."""
    cur = I
    for _ in range(200):
        nxt = ideal_quotient(cur, J)
        if nxt == cur:
            return cur
        cur = nxt
    raise ArithmeticError("saturation failed to stabilize")


# ---------------------------------------------------------------------------
# dimension
# ---------------------------------------------------------------------------

def _min_hitting(supports):
    supports = [s for s in supports]
    best = [sum(len(s) for s in supports) + 1]

    def rec(sups, used):
        if used >= best[0]:
            return
        if not sups:
            best[0] = used
            return
        pivot = min(sups, key=len)
        for v in sorted(pivot):
            rest = [s for s in sups if v not in s]
            rec(rest, used + 1)

    rec(supports, 0)
    return best[0]


def dimension(I):
    """Krull dimension of the affine cone, from maximal independent
    variable sets modulo the lead ideal.  -1 means the unit ideal."""
    got = I._cache.get("dim")
    if got is not None:
        return got
    ring = I.ring
    sups = []
    for k in I.lead_keys():
        s = frozenset(i for i in range(ring.n) if ring.exponent(k, i))
        if not s:
            I._cache["dim"] = -1
            return -1
        sups.append(s)
    minimal = []
    for s in sorted(set(sups), key=len):
        if not any(m <= s for m in minimal):
            minimal.append(s)
    d = ring.n - _min_hitting(minimal)
    I._cache["dim"] = d
    return d


def projective_dimension(I):
    """Dimension of the projective scheme; -1 for the empty scheme."""
    d = dimension(I)
    return d - 1 if d >= 1 else -1


# ---------------------------------------------------------------------------
# Hilbert series
# ---------------------------------------------------------------------------

def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def _pneg(a):
    return [-c for c in a]


def _pshift(a, k):
    return [0] * k + list(a)


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _minimalize_keys(ring, keys):
    out = []
    for k in sorted(set(keys), key=lambda k: (ring.wdeg_of(k), k)):
        if not any(ring.mono_divides(m, k) for m in out):
            out.append(k)
    return out


def _hilbert_numerator(ring, keys):
    keys = _minimalize_keys(ring, keys)
    one = ring._one_key

    def rec(gens):
        if not gens:
            return [1]
        if gens[0] == one:
            return []
        if len(gens) == 1:
            return _padd([1], _pshift([-1], ring.wdeg_of(gens[0])))
        # a variable shared by two generators picks the pivot
        freq = {}
        for k in gens:
            for i in range(ring.n):
                if ring.exponent(k, i):
                    freq[i] = freq.get(i, 0) + 1
        j, cnt = max(freq.items(), key=lambda kv: kv[1])
        if cnt <= 1:
            # pairwise coprime: a regular sequence
            out = [1]
            for k in gens:
                out = _pmul(out, _padd([1], _pshift([-1], ring.wdeg_of(k))))
            return out
        # lower median: never picks the lone pure power of the pivot
        # variable, so the plus-branch always shrinks
        exps = sorted(ring.exponent(k, j) for k in gens if ring.exponent(k, j))
        e = exps[(len(exps) - 1) // 2]
        pivot = ring.pack(tuple(e if i == j else 0 for i in range(ring.n)))
        plus = _minimalize_keys(ring, gens + [pivot])
        colon = []
        for k in gens:
            ek = ring.exponent(k, j)
            drop = min(ek, e)
            if drop:
                exps_k = list(ring.unpack(k))
                exps_k[j] = ek - drop
                colon.append(ring.pack(tuple(exps_k)))
            else:
                colon.append(k)
        colon = _minimalize_keys(ring, colon)
        return _padd(rec(plus), _pshift(rec(colon), ring.wdeg_of(pivot)))

    num = rec(keys)
    while num and num[-1] == 0:
        num.pop()
    return num


class HilbertSeries:
    """Numerator over the formal product of (1 - t^w) across the ring's
    weights; exact integer coefficients."""

    __slots__ = ("numerator", "weights", "_den")

    def __init__(self, numerator, weights):
        self.numerator = tuple(numerator)
        self.weights = tuple(weights)
        self._den = [1]

    def _den_coeffs(self, d):
        c = self._den
        if len(c) <= d:
            c = [1] + [0] * d
            for w in self.weights:
                for i in range(w, d + 1):
                    c[i] += c[i - w]
            self._den = c
        return self._den

    def hf(self, d):
        if d < 0:
            return 0
        den = self._den_coeffs(d)
        total = 0
        for k, nk in enumerate(self.numerator):
            if nk and k <= d:
                total += nk * den[d - k]
        return total

    def dim_degree(self):
        """(Krull dimension of the cone, projective degree as a Fraction)."""
        num = list(self.numerator)
        if not num:
            return -1, Fraction(0)
        s = 0
        while sum(num) == 0:
            # synthetic division by (1 - t)
            acc = 0
            q = []
            for c in num[:-1]:
                acc += c
                q.append(acc)
            num = q
            s += 1
            if not num:
                return -1, Fraction(0)
        dim = len(self.weights) - s
        denom = 1
        for w in self.weights:
            denom *= w
        return dim, Fraction(sum(num), denom)

    def __eq__(self, other):
        return (isinstance(other, HilbertSeries)
                and self.numerator == other.numerator
                and self.weights == other.weights)

    def __repr__(self):
        return "HilbertSeries(num=%s, weights=%s)" % (
            list(self.numerator), list(self.weights))


def hilbert_series(I):
    got = I._cache.get("hs")
    if got is None:
        got = HilbertSeries(_hilbert_numerator(I.ring, list(I.lead_keys())),
                            I.ring.weights)
        I._cache["hs"] = got
    return got


def hilbert_function(I, d):
    """Dimension of the degree-d piece of the quotient ring."""
    return hilbert_series(I).hf(d)


def graded_piece_dim(I, d):
    """Dimension of the degree-d piece of the ideal itself."""
    full = HilbertSeries([1], I.ring.weights)
    return full.hf(d) - hilbert_function(I, d)


def degree(I):
    """Projective degree (the normalized Hilbert leading coefficient); for
    projective dimension zero, the length.  Unit or empty input gives 0."""
    dim, deg = hilbert_series(I).dim_degree()
    if dim <= 0:
        return 0
    return int(deg) if deg.denominator == 1 else deg


# ---------------------------------------------------------------------------
# zero-dimensional certificates
# ---------------------------------------------------------------------------

def quotient_basis(I):
    """Monomials under the staircase of a zero-dimensional affine ideal."""
    ring = I.ring
    leads = I.lead_keys()
    if any(k == ring._one_key for k in leads):
        return ()
    caps = [None] * ring.n
    for k in leads:
        sup = [i for i in range(ring.n) if ring.exponent(k, i)]
        if len(sup) == 1:
            i = sup[0]
            e = ring.exponent(k, i)
            if caps[i] is None or e < caps[i]:
                caps[i] = e
    if any(c is None for c in caps):
        raise ValueError("ideal is not zero-dimensional")
    out = []
    exps = [0] * ring.n

    def rec(i):
        if i == ring.n:
            key = ring.pack(tuple(exps))
            if not any(ring.mono_divides(m, key) for m in leads):
                out.append(key)
            return
        for e in range(caps[i]):
            exps[i] = e
            rec(i + 1)
        exps[i] = 0

    rec(0)
    out.sort()
    return tuple(out)


def multiplication_matrix(I, name):
    """Matrix of multiplication by a variable on the quotient of a
    zero-dimensional affine ideal, over the staircase basis."""
    ring = I.ring
    qb = quotient_basis(I)
    index = {k: i for i, k in enumerate(qb)}
    var_key = ring.pack(tuple(1 if v == name else 0 for v in ring.vars))
    basis = I._raw_basis()
    m = np.zeros((len(qb), len(qb)), dtype=np.int64)
    for j, b in enumerate(qb):
        prod = ring.mono_mul(var_key, b)
        if prod in index:
            m[index[prod], j] = 1
            continue
        red = _nf_terms(ring, [(prod, ring.coeff(1))], basis)
        for k, c in red:
            m[index[k], j] = c
    return m, qb


def zero_dim_certificate(I):
    """Seidenberg data for a zero-dimensional affine ideal over F_p:
    (length, radical?, eliminant per variable)."""
    ring = I.ring
    if not ring.p:
        raise ValueError("prime field only")
    qb = quotient_basis(I)
    length = len(qb)
    if length == 0:
        return 0, True, {}
    elims = {}
    rad = True
    for name in ring.vars:
        m, basis_keys = multiplication_matrix(I, name)
        v0 = np.zeros(length, dtype=np.int64)
        v0[basis_keys.index(ring._one_key)] = 1
        mp = linalg.krylov_minpoly(m, v0, ring.p)
        elims[name] = mp
        if not linalg.is_squarefree(mp, ring.p):
            rad = False
    return length, rad, elims


def _univariate_to_poly(ring, name, coeffs):
    i = ring._idx[name]
    pairs = []
    for e, c in enumerate(coeffs):
        if c:
            pairs.append((ring.pack(tuple(e if j == i else 0
                                          for j in range(ring.n))), c))
    return ring.from_terms(pairs)


def _gl_pair(ring, seed):
    """Inverse pair of invertible linear coordinate changes (standard
    grading)."""
    p = ring.p
    n = ring.n
    rng = seeded_rng("glpair", p, ",".join(ring.vars), seed)
    while True:
        a = np.array([[rng.randrange(p) for _ in range(n)] for _ in range(n)],
                     dtype=np.int64)
        aug, piv = linalg.rref(np.hstack([a, np.eye(n, dtype=np.int64)]), p)
        if len(piv) == n and all(c < n for c in piv):
            inv = aug[:, n:]
            break
    gens = ring.gens()

    def to_map(mat):
        mp = {}
        for i in range(n):
            f = ring.zero
            for j in range(n):
                if mat[i][j] % p:
                    f = f + gens[j] * int(mat[i][j])
            mp[ring.vars[i]] = f
        return mp

    return to_map(a), to_map(inv)


def _dehomogenize(I, chart_ring, last):
    gens = [g.substitute({last: 1}) for g in I.gens]
    return Ideal(chart_ring, [chart_ring.convert(g) for g in gens])


def projective_reduced_degree(I, seed=0, tries=3):
    """Certificate for a projective zero-dimensional scheme over F_p:
    returns (degree, reduced?).  A seeded coordinate change is applied, the
    last variable's affine chart taken, and the chart is certified complete
    by matching the affine length to the projective degree."""
    ring = I.ring
    if not ring.is_standard_graded:
        raise ValueError("standard grading only")
    if any(not g.is_homogeneous() for g in I.gens):
        raise ValueError("homogeneous input required")
    d = dimension(I)
    if d > 1:
        raise ValueError("positive-dimensional scheme")
    if d <= 0:
        return 0, True
    deg = degree(I)
    last = ring.vars[-1]
    chart = ring.without([last])
    for trial in range(tries):
        fwd, _ = _gl_pair(ring, (seed, trial))
        moved = Ideal(ring, [g.substitute(fwd) for g in I.gens])
        aff = _dehomogenize(moved, chart, last)
        try:
            length, rad, _ = zero_dim_certificate(aff)
        except ValueError:
            continue
        if length == deg:
            return deg, rad
    raise ArithmeticError("no complete affine chart found in %d tries" % tries)


def is_radical_zero_dim(I):
    """Radicality of a zero-dimensional ideal.  Affine input runs Seidenberg
    directly; homogeneous input with a one-dimensional cone goes through a
    certified chart."""
    d = dimension(I)
    if d == 0 or d == -1:
        if d == -1:
            return True
        return zero_dim_certificate(I)[1]
    if d == 1 and all(g.is_homogeneous() for g in I.gens):
        return projective_reduced_degree(I)[1]
    raise ValueError("dimension is not zero")


def radical_zero_dim(I):
    """The ideal with squarefree eliminants adjoined; equals the radical in
    the affine zero-dimensional case."""
    ring = I.ring
    d = dimension(I)
    if d == -1:
        return I
    if d == 0:
        _, rad, elims = zero_dim_certificate(I)
        if rad:
            return I
        extra = []
        for name, mp in elims.items():
            sq = linalg.upoly_squarefree_part(mp, ring.p)
            if len(sq) != len(mp):
                extra.append(_univariate_to_poly(ring, name, sq))
        return Ideal(ring, list(I.gens) + extra)
    if d == 1 and all(g.is_homogeneous() for g in I.gens):
        if not ring.is_standard_graded:
            raise ValueError("standard grading only")
        deg = degree(I)
        last = ring.vars[-1]
        chart = ring.without([last])
        for trial in range(3):
            fwd, inv = _gl_pair(ring, ("radical", trial))
            moved = Ideal(ring, [g.substitute(fwd) for g in I.gens])
            aff = _dehomogenize(moved, chart, last)
            try:
                length, rad, elims = zero_dim_certificate(aff)
            except ValueError:
                continue
            if length != deg:
                continue
            if rad:
                return I
            extra = []
            lastv = ring.var(last)
            for name, mp in elims.items():
                sq = linalg.upoly_squarefree_part(mp, ring.p)
                if len(sq) == len(mp):
                    continue
                e = len(sq) - 1
                xi = ring.var(name)
                form = ring.zero
                for j, c in enumerate(sq):
                    if c:
                        form = form + (xi ** j) * (lastv ** (e - j)) * c
                extra.append(form.substitute(inv))
            return Ideal(ring, list(I.gens) + extra)
        raise ArithmeticError("no complete affine chart found")
    raise ValueError("dimension is not zero")
