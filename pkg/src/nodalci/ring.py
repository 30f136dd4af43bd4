"""Sparse exact multivariate polynomials over a prime field or the rationals.

Weighted gradings, packed-integer monomials, weighted-grevlex and block
elimination orders, formal derivatives, substitution homomorphisms, seeded
generic forms, minors and Pfaffians.

A monomial lives in a single Python int.  Each variable gets an 8-bit field
holding the *complement* 127 - e_i, and each order block gets an 8-bit field
holding its weighted degree, arranged so that the ring's monomial order is
plain integer comparison on the packed keys.  Degrees are capped at 127 per
block; the cap is checked, never assumed.
"""

from __future__ import annotations

import hashlib
import random
import re
from fractions import Fraction
from itertools import combinations
from math import isqrt

__all__ = [
    "Ring",
    "Poly",
    "PolyMatrix",
    "seeded_rng",
    "random_form",
    "random_linear_change",
    "parse_ring_header",
    "format_ring_header",
]

_M = 127
_FB = 8
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z0-9_]*|\^|\*|\+|\-|\(|\)|.)")


def _is_prime(p):
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if p % q == 0:
            return p == q
    d = 17
    r = isqrt(p)
    while d <= r:
        if p % d == 0:
            return False
        d += 2
    return True


def seeded_rng(*parts):
    """Deterministic RNG from arbitrary labels; stable across processes."""
    tag = "\x1f".join(str(x) for x in parts).encode()
    return random.Random(int.from_bytes(hashlib.sha256(tag).digest()[:8], "big"))


class Ring:
    """Ring descriptor plus the packed-monomial engine.

    ``split = 0`` gives weighted grevlex on all variables; ``split = k > 0``
    is the elimination order whose first block is the first k variables,
    each block compared by weighted grevlex, first block dominant.
    """

    __slots__ = (
        "vars", "weights", "p", "split", "n",
        "_idx", "_shifts", "_deg_shift", "_deg1_shift", "_one_key",
        "_guards", "_gchk", "_dderiv", "_desc", "_mono_cache",
        "_seg_cache", "_gens",
    )

    def __init__(self, variables, weights=None, p=32003, split=0):
        variables = tuple(variables)
        if not variables:
            raise ValueError("ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be unique")
        for v in variables:
            if not _IDENT.match(v):
                raise ValueError("bad variable name %r" % (v,))
        if weights is None:
            weights = (1,) * len(variables)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(variables) or any(w < 1 for w in weights):
            raise ValueError("weights must be positive, one per variable")
        if p:
            if not _is_prime(p):
                raise ValueError("modulus %d is not prime" % p)
        if not 0 <= split < len(variables) + 1:
            raise ValueError("bad block split")
        self.vars = variables
        self.weights = weights
        self.p = p
        self.split = split
        n = self.n = len(variables)
        self._idx = {v: i for i, v in enumerate(variables)}
        # Byte layout, LSB up.  Plain: [c_0][c_1]..[c_{n-1}][deg].
        # Block: [c_k]..[c_{n-1}][deg2][c_0]..[c_{k-1}][deg1].
        shifts = [0] * n
        if split == 0:
            for i in range(n):
                shifts[i] = _FB * i
            self._deg_shift = _FB * n
            self._deg1_shift = None
            nbytes = n + 1
        else:
            n2 = n - split
            for i in range(split, n):
                shifts[i] = _FB * (i - split)
            self._deg_shift = _FB * n2
            for i in range(split):
                shifts[i] = _FB * (n2 + 1 + i)
            self._deg1_shift = _FB * (n + 1)
            nbytes = n + 2
        self._shifts = tuple(shifts)
        self._one_key = sum(_M << s for s in shifts)
        self._guards = sum(0x80 << (_FB * b) for b in range(nbytes))
        self._gchk = sum(0x80 << s for s in shifts)
        dd = []
        for i in range(n):
            ds = self._deg1_shift if (split and i < split) else self._deg_shift
            dd.append((1 << shifts[i]) - (weights[i] << ds))
        self._dderiv = tuple(dd)
        self._desc = (variables, weights, p, split)
        self._mono_cache = {}
        self._seg_cache = {}
        self._gens = None

    # -- descriptor plumbing -------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Ring) and self._desc == other._desc

    def __hash__(self):
        return hash(self._desc)

    def __repr__(self):
        tag = "grevlex" if not self.split else "elim%d" % self.split
        return "Ring(%s; weights=%s; p=%s; %s)" % (
            ",".join(self.vars), ",".join(map(str, self.weights)), self.p, tag)

    @property
    def is_standard_graded(self):
        return all(w == 1 for w in self.weights)

    def extended(self, front, front_weights=None):
        """New ring with extra variables in front, ordered as an elimination
        block ahead of the current variables."""
        front = tuple(front)
        if front_weights is None:
            front_weights = (1,) * len(front)
        return Ring(front + self.vars, tuple(front_weights) + self.weights,
                    self.p, split=len(front))

    def fronted(self, names):
        """Same variables, reordered so ``names`` form a leading elimination
        block."""
        names = tuple(names)
        rest = tuple(v for v in self.vars if v not in names)
        w = tuple(self.weights[self._idx[v]] for v in names + rest)
        return Ring(names + rest, w, self.p, split=len(names))

    def without(self, names):
        keep = [v for v in self.vars if v not in set(names)]
        w = tuple(self.weights[self._idx[v]] for v in keep)
        return Ring(tuple(keep), w, self.p, split=0)

    def plain(self):
        if not self.split:
            return self
        return Ring(self.vars, self.weights, self.p, split=0)

    # -- coefficients --------------------------------------------------------

    def coeff(self, x):
        if self.p:
            return int(x) % self.p
        return x if isinstance(x, Fraction) else Fraction(x)

    def coeff_inv(self, c):
        if self.p:
            return pow(c, -1, self.p)
        return 1 / c

    # -- packed monomials ----------------------------------------------------

    def pack(self, exps):
        if len(exps) != self.n:
            raise ValueError("expected %d exponents" % self.n)
        w = self.weights
        k = self.split
        key = 0
        d2 = 0
        d1 = 0
        for i, e in enumerate(exps):
            e = int(e)
            if e < 0:
                raise ValueError("negative exponent")
            if k and i < k:
                d1 += w[i] * e
            else:
                d2 += w[i] * e
            key += (_M - e) << self._shifts[i]
        if d2 > _M or d1 > _M:
            raise OverflowError("monomial degree exceeds %d" % _M)
        key += d2 << self._deg_shift
        if k:
            key += d1 << self._deg1_shift
        return key

    def unpack(self, key):
        return tuple(_M - ((key >> s) & _M) for s in self._shifts)

    def exponent(self, key, i):
        return _M - ((key >> self._shifts[i]) & _M)

    def wdeg_of(self, key):
        d = (key >> self._deg_shift) & 0xFF
        if self.split:
            d += (key >> self._deg1_shift) & 0xFF
        return d

    def mono_mul(self, a, b):
        r = a + b - self._one_key
        if r & self._guards:
            raise OverflowError("monomial degree exceeds %d" % _M)
        return r

    def mono_divides(self, m, t):
        """m | t on exponents."""
        return ((m | self._guards) - t) & self._gchk == self._gchk

    def mono_div(self, t, m):
        return t - m + self._one_key

    def mono_lcm(self, a, b):
        ea = self.unpack(a)
        eb = self.unpack(b)
        return self.pack(tuple(x if x > y else y for x, y in zip(ea, eb)))

    def support_mask(self, key):
        mask = 0
        for i, s in enumerate(self._shifts):
            if ((key >> s) & _M) != _M:
                mask |= 1 << i
        return mask

    # -- element constructors ------------------------------------------------

    @property
    def zero(self):
        return Poly(self, ())

    @property
    def one(self):
        return Poly(self, ((self._one_key, self.coeff(1)),))

    def constant(self, c):
        c = self.coeff(c)
        if not c:
            return self.zero
        return Poly(self, ((self._one_key, c),))

    def var(self, name):
        i = self._idx[name]
        return self.monomial(tuple(1 if j == i else 0 for j in range(self.n)))

    def gens(self):
        if self._gens is None:
            self._gens = tuple(self.var(v) for v in self.vars)
        return self._gens

    def monomial(self, exps, c=1):
        c = self.coeff(c)
        if not c:
            return self.zero
        return Poly(self, ((self.pack(exps), c),))

    def from_terms(self, pairs):
        """Build a canonical polynomial from (key, coeff) pairs."""
        acc = {}
        for k, c in pairs:
            c0 = acc.get(k)
            c = c if c0 is None else c0 + c
            if self.p:
                c %= self.p
            acc[k] = c
        return Poly(self, tuple((k, c) for k, c in
                                sorted(acc.items(), reverse=True) if c))

    def convert(self, f):
        """Re-read a polynomial from a ring with compatible variables.

        Variables are matched by name; source variables absent here must not
        occur in f.  Coefficient domains must agree.
        """
        src = f.ring
        if src is self or src._desc == self._desc:
            return Poly(self, f.terms)
        if src.p != self.p:
            raise ValueError("coefficient domain mismatch")
        pos = []
        for i, v in enumerate(src.vars):
            pos.append(self._idx.get(v, -1))
        out = []
        for key, c in f.terms:
            exps = [0] * self.n
            for i in range(src.n):
                e = src.exponent(key, i)
                if e:
                    j = pos[i]
                    if j < 0:
                        raise ValueError("variable %r not in target ring"
                                         % src.vars[i])
                    exps[j] = e
            out.append((self.pack(exps), c))
        return self.from_terms(out)

    # -- monomial enumeration ------------------------------------------------

    def monomials_of_degree(self, d):
        """All monomials of weighted degree d, as packed keys, descending."""
        cached = self._mono_cache.get(d)
        if cached is not None:
            return cached
        n = self.n
        w = self.weights
        out = []
        exps = [0] * n

        def rec(i, rem):
            if i == n - 1:
                q, r = divmod(rem, w[i])
                if r == 0:
                    exps[i] = q
                    out.append(self.pack(tuple(exps)))
                    exps[i] = 0
                return
            for e in range(rem // w[i] + 1):
                exps[i] = e
                rec(i + 1, rem - e * w[i])
            exps[i] = 0

        if d >= 0:
            rec(0, d)
        out.sort(reverse=True)
        out = tuple(out)
        self._mono_cache[d] = out
        return out

    # -- parsing -------------------------------------------------------------

    def _segment(self, run):
        hit = self._seg_cache.get(run)
        if hit is not None:
            return hit
        names = sorted(self.vars, key=len, reverse=True)

        def seg(s):
            if not s:
                return []
            for name in names:
                if s.startswith(name):
                    rest = seg(s[len(name):])
                    if rest is not None:
                        return [name] + rest
            return None

        parts = seg(run)
        if parts is None:
            raise ValueError("cannot read %r as a product of variables" % run)
        self._seg_cache[run] = parts
        return parts

    def parse(self, text):
        """Parse one polynomial.  Coefficients are decimal integers, ``^``
        raises to a power, ``*`` between factors is optional and so is the
        glue between juxtaposed variable names."""
        toks = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                break
            t = m.group(1)
            pos = m.end()
            if t.strip():
                toks.append(t)
        if "(" in toks or ")" in toks:
            raise ValueError("parentheses are not part of the grammar")
        i = 0
        total = self.zero
        nt = len(toks)
        while i < nt:
            sign = 1
            while i < nt and toks[i] in "+-":
                if toks[i] == "-":
                    sign = -sign
                i += 1
            if i == nt:
                raise ValueError("dangling sign")
            coeff = sign
            exps = [0] * self.n
            saw = False
            while i < nt and toks[i] not in "+-":
                t = toks[i]
                if t == "*":
                    i += 1
                    continue
                if t == "^":
                    raise ValueError("misplaced ^")
                if t.isdigit():
                    val = int(t)
                    i += 1
                    if i < nt and toks[i] == "^":
                        if i + 1 >= nt or not toks[i + 1].isdigit():
                            raise ValueError("bad exponent")
                        val **= int(toks[i + 1])
                        i += 2
                    coeff *= val
                else:
                    parts = self._segment(t)
                    i += 1
                    e_last = 1
                    if i < nt and toks[i] == "^":
                        if i + 1 >= nt or not toks[i + 1].isdigit():
                            raise ValueError("bad exponent")
                        e_last = int(toks[i + 1])
                        i += 2
                    for name in parts[:-1]:
                        exps[self._idx[name]] += 1
                    exps[self._idx[parts[-1]]] += e_last
                saw = True
            if not saw:
                raise ValueError("empty term")
            total = total + self.monomial(tuple(exps), coeff)
        return total

    def parse_many(self, text):
        return [self.parse(line) for line in text.splitlines()
                if line.strip() and not line.strip().startswith("#")]


class Poly:
    """Immutable sparse polynomial; terms sorted descending in the ring
    order, no zero coefficients, canonical."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- basic queries -------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def lead_key(self):
        if not self.terms:
            raise ValueError("zero polynomial has no lead")
        return self.terms[0][0]

    def lead_coeff(self):
        if not self.terms:
            raise ValueError("zero polynomial has no lead")
        return self.terms[0][1]

    def lead_monomial(self):
        return Poly(self.ring, ((self.terms[0][0], self.ring.coeff(1)),))

    def constant_coeff(self):
        one = self.ring._one_key
        for k, c in reversed(self.terms):
            if k == one:
                return c
            if k > one:
                break
        return self.ring.coeff(0)

    def coefficient(self, key):
        for k, c in self.terms:
            if k == key:
                return c
            if k < key:
                break
        return self.ring.coeff(0)

    def wdeg(self):
        """Maximal weighted degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        r = self.ring
        if not r.split:
            return r.wdeg_of(self.terms[0][0])
        return max(r.wdeg_of(k) for k, _ in self.terms)

    def is_homogeneous(self):
        if not self.terms:
            return True
        r = self.ring
        d = r.wdeg_of(self.terms[0][0])
        return all(r.wdeg_of(k) == d for k, _ in self.terms[1:])

    def monic(self):
        if not self.terms or self.terms[0][1] == self.ring.coeff(1):
            return self
        return self * self.ring.coeff_inv(self.terms[0][1])

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if self.ring is not other.ring and self.ring._desc != other.ring._desc:
            raise ValueError("ring mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        self._check(other)
        return self.ring.from_terms(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        if p:
            return Poly(self.ring, tuple((k, p - c) for k, c in self.terms))
        return Poly(self.ring, tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        r = self.ring
        if isinstance(other, (int, Fraction)):
            c = r.coeff(other)
            if not c:
                return r.zero
            if r.p:
                p = r.p
                return Poly(r, tuple((k, (a * c) % p) for k, a in self.terms))
            return Poly(r, tuple((k, a * c) for k, a in self.terms))
        self._check(other)
        if not self.terms or not other.terms:
            return r.zero
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        acc = {}
        one = r._one_key
        guards = r._guards
        p = r.p
        for kb, cb in b:
            kb0 = kb - one
            for ka, ca in a:
                kk = ka + kb0
                if kk & guards:
                    raise OverflowError("monomial degree exceeds %d" % _M)
                c0 = acc.get(kk)
                c = ca * cb if c0 is None else c0 + ca * cb
                if p:
                    c %= p
                acc[kk] = c
        return Poly(r, tuple((k, c) for k, c in
                             sorted(acc.items(), reverse=True) if c))

    __rmul__ = __mul__

    def __pow__(self, e):
        e = int(e)
        if e < 0:
            raise ValueError("negative power")
        out = self.ring.one
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        return (isinstance(other, Poly)
                and self.ring._desc == other.ring._desc
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring._desc, self.terms))

    # -- calculus and maps ---------------------------------------------------

    def derivative(self, name):
        r = self.ring
        i = r._idx[name]
        sh = r._shifts[i]
        dd = r._dderiv[i]
        p = r.p
        out = []
        for k, c in self.terms:
            e = _M - ((k >> sh) & _M)
            if e:
                ce = c * e % p if p else c * e
                if ce:
                    out.append((k + dd, ce))
        return r.from_terms(out)

    def substitute(self, mapping, target=None):
        """Apply the ring map sending each variable to its image.

        ``mapping`` takes variable names to polynomials (or scalars) in the
        target ring; unmapped variables go to their namesakes in the target.
        """
        src = self.ring
        imgs = {}
        for name, val in mapping.items():
            if name not in src._idx:
                raise ValueError("unknown variable %r" % name)
            imgs[name] = val
        if target is None:
            for val in imgs.values():
                if isinstance(val, Poly):
                    target = val.ring
                    break
            else:
                target = src
        if target.p != src.p:
            raise ValueError("coefficient domain mismatch")
        table = []
        for v in src.vars:
            img = imgs.get(v)
            if img is None:
                if v in target._idx:
                    table.append(target.var(v))
                else:
                    table.append(None)
            elif isinstance(img, Poly):
                if img.ring._desc != target._desc:
                    img = target.convert(img)
                table.append(img)
            else:
                table.append(target.constant(img))
        powers = [{} for _ in range(src.n)]

        def pw(i, e):
            cache = powers[i]
            got = cache.get(e)
            if got is None:
                got = table[i] ** e
                cache[e] = got
            return got

        acc = target.zero
        for k, c in self.terms:
            term = target.constant(c)
            for i in range(src.n):
                e = src.exponent(k, i)
                if e:
                    if table[i] is None:
                        raise ValueError("variable %r has no image"
                                         % src.vars[i])
                    term = term * pw(i, e)
            acc = acc + term
        return acc

    def evaluate(self, values):
        """Evaluate at a point: values by variable name or position."""
        r = self.ring
        if isinstance(values, dict):
            vals = [values[v] for v in r.vars]
        else:
            vals = list(values)
        p = r.p
        total = r.coeff(0)
        for k, c in self.terms:
            t = c
            for i in range(r.n):
                e = r.exponent(k, i)
                if e:
                    t = t * (pow(vals[i], e, p) if p else vals[i] ** e)
                    if p:
                        t %= p
            total = (total + t) % p if p else total + t
        return total

    # -- printing ------------------------------------------------------------

    def _coeff_str(self, c):
        p = self.ring.p
        if p and c > p // 2:
            return "-", str(p - c)
        if not p and c < 0:
            return "-", str(-c)
        return "+", str(c)

    def __str__(self):
        if not self.terms:
            return "0"
        r = self.ring
        chunks = []
        for k, c in self.terms:
            sign, cs = self._coeff_str(c)
            facs = []
            for i in range(r.n):
                e = r.exponent(k, i)
                if e == 1:
                    facs.append(r.vars[i])
                elif e > 1:
                    facs.append("%s^%d" % (r.vars[i], e))
            if not facs:
                body = cs
            elif cs == "1":
                body = "*".join(facs)
            else:
                body = cs + "*" + "*".join(facs)
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __repr__(self):
        return "<%s>" % self


# -- seeded generic data -----------------------------------------------------

def random_form(ring, degree, seed):
    """Dense generic form of the given weighted degree: every monomial
    present, nonzero coefficients drawn reproducibly from the seed."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    monos = ring.monomials_of_degree(degree)
    rng = seeded_rng("form", ring.p, ",".join(ring.vars),
                     ",".join(map(str, ring.weights)), degree, seed)
    if ring.p:
        pairs = [(k, rng.randrange(1, ring.p)) for k in monos]
    else:
        pairs = [(k, Fraction(rng.randrange(1, 1000))) for k in monos]
    return Poly(ring, tuple(pairs))


def _det_mod(rows, p):
    m = [r[:] for r in rows]
    n = len(m)
    det = 1
    for j in range(n):
        piv = next((i for i in range(j, n) if m[i][j] % p), None)
        if piv is None:
            return 0
        if piv != j:
            m[j], m[piv] = m[piv], m[j]
            det = -det
        det = det * m[j][j] % p
        inv = pow(m[j][j], -1, p)
        for i in range(j + 1, n):
            f = m[i][j] * inv % p
            if f:
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[j])]
    return det % p


def random_linear_change(ring, seed):
    """Invertible linear change of coordinates as a substitution map.

    Only touches weight-1 variables; heavier variables map to themselves,
    so the map respects the grading.
    """
    rng = seeded_rng("gl", ring.p, ",".join(ring.vars), seed)
    p = ring.p
    if not p:
        raise ValueError("prime field only")
    idx = [i for i in range(ring.n) if ring.weights[i] == 1]
    m = len(idx)
    while True:
        mat = [[rng.randrange(p) for _ in range(m)] for _ in range(m)]
        if _det_mod(mat, p):
            break
    gens = ring.gens()
    mapping = {}
    for a, ia in enumerate(idx):
        f = ring.zero
        for b, ib in enumerate(idx):
            f = f + gens[ib] * mat[a][b]
        mapping[ring.vars[ia]] = f
    return mapping


# -- matrices ----------------------------------------------------------------

class PolyMatrix:
    """Rectangular matrix of polynomials over one ring."""

    __slots__ = ("ring", "rows", "cols", "entries", "_minor_cache", "_pf_cache")

    def __init__(self, entries):
        entries = tuple(tuple(row) for row in entries)
        if not entries or not entries[0]:
            raise ValueError("empty matrix")
        cols = len(entries[0])
        if any(len(row) != cols for row in entries):
            raise ValueError("ragged matrix")
        ring = None
        for row in entries:
            for x in row:
                if isinstance(x, Poly):
                    ring = x.ring
                    break
            if ring:
                break
        if ring is None:
            raise ValueError("matrix needs at least one polynomial entry")
        norm = []
        for row in entries:
            out = []
            for x in row:
                if not isinstance(x, Poly):
                    x = ring.constant(x)
                elif x.ring._desc != ring._desc:
                    raise ValueError("mixed rings in matrix")
                out.append(x)
            norm.append(tuple(out))
        self.ring = ring
        self.rows = len(norm)
        self.cols = cols
        self.entries = tuple(norm)
        self._minor_cache = {}
        self._pf_cache = {}

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    def transpose(self):
        return PolyMatrix(tuple(zip(*self.entries)))

    def _det(self, rows, cols):
        key = (rows, cols)
        got = self._minor_cache.get(key)
        if got is not None:
            return got
        if len(rows) == 1:
            val = self.entries[rows[0]][cols[0]]
        else:
            r0 = rows[0]
            rest = rows[1:]
            val = self.ring.zero
            for j, c in enumerate(cols):
                e = self.entries[r0][c]
                if e.is_zero:
                    continue
                sub = self._det(rest, cols[:j] + cols[j + 1:])
                val = val + e * sub if j % 2 == 0 else val - e * sub
        self._minor_cache[key] = val
        return val

    def det(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return self._det(tuple(range(self.rows)), tuple(range(self.cols)))

    def minors(self, k):
        """All k-by-k minors, rows-major then columns-major order."""
        if k < 1 or k > min(self.rows, self.cols):
            raise ValueError("bad minor size")
        out = []
        for rows in combinations(range(self.rows), k):
            for cols in combinations(range(self.cols), k):
                out.append(self._det(rows, cols))
        return out

    def is_skew_symmetric(self):
        if self.rows != self.cols:
            return False
        for i in range(self.rows):
            if not self.entries[i][i].is_zero:
                return False
            for j in range(i + 1, self.cols):
                if self.entries[i][j] != -self.entries[j][i]:
                    return False
        return True

    def _pf(self, idx):
        got = self._pf_cache.get(idx)
        if got is not None:
            return got
        if not idx:
            val = self.ring.one
        else:
            i0 = idx[0]
            val = self.ring.zero
            for j in range(1, len(idx)):
                e = self.entries[i0][idx[j]]
                if e.is_zero:
                    continue
                rest = tuple(x for x in idx[1:] if x != idx[j])
                term = e * self._pf(rest)
                val = val + term if j % 2 == 1 else val - term
        self._pf_cache[idx] = val
        return val

    def pfaffian(self):
        if not self.is_skew_symmetric():
            raise ValueError("pfaffian needs a skew-symmetric matrix")
        if self.rows % 2:
            return self.ring.zero
        return self._pf(tuple(range(self.rows)))

    def pfaffians(self, k):
        """Pfaffians of all principal k-by-k submatrices; k even."""
        if k % 2 or k < 2 or k > self.rows:
            raise ValueError("bad pfaffian size")
        if not self.is_skew_symmetric():
            raise ValueError("pfaffian needs a skew-symmetric matrix")
        return [self._pf(idx) for idx in combinations(range(self.rows), k)]


# -- ideal file headers ------------------------------------------------------

def format_ring_header(ring):
    if ring.split:
        raise ValueError("file format carries grevlex rings only")
    return "ring p=%d vars=%s weights=%s order=grevlex" % (
        ring.p, ",".join(ring.vars), ",".join(map(str, ring.weights)))


def parse_ring_header(line):
    parts = line.split()
    if not parts or parts[0] != "ring":
        raise ValueError("expected a ring header line")
    fields = {}
    for part in parts[1:]:
        if "=" not in part:
            raise ValueError("bad header field %r" % part)
        k, _, v = part.partition("=")
        fields[k] = v
    try:
        p = int(fields["p"])
        names = tuple(fields["vars"].split(","))
        weights = tuple(int(w) for w in fields["weights"].split(","))
    except KeyError as e:
        raise ValueError("header missing %s" % e) from None
    order = fields.get("order", "grevlex")
    if order != "grevlex":
        raise ValueError("unsupported order %r" % order)
    return Ring(names, weights, p=p, split=0)
