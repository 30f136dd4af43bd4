"""Exact intersection theory for the node-count oracle and Euler
characteristic audits.

Surface-side arithmetic happens in the truncated ring spanned by 1, h, pt
with h^2 = deg * pt, where deg is the degree of the polarized surface in
its ambient projective space.  Grassmannian-side arithmetic happens in the
Schubert basis of G(2,n) with Pieri multiplication.  Everything is over
exact rationals; results that must be integers are asserted integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb


# ---------------------------------------------------------------------------
# truncated surface ring


class SurfaceClass:
    """a0 + a1*h + a2*pt with h^2 = deg*pt, truncated beyond pt."""

    __slots__ = ("deg", "a")

    def __init__(self, deg, a0=0, a1=0, a2=0):
        self.deg = int(deg)
        self.a = (Fraction(a0), Fraction(a1), Fraction(a2))

    def _like(self, a0, a1, a2):
        return SurfaceClass(self.deg, a0, a1, a2)

    @property
    def a0(self):
        return self.a[0]

    @property
    def a1(self):
        return self.a[1]

    @property
    def a2(self):
        return self.a[2]

    def _coerce(self, other):
        if isinstance(other, SurfaceClass):
            if other.deg != self.deg:
                raise ValueError("mixed surface degrees")
            return other
        return self._like(other, 0, 0)

    def __add__(self, other):
        o = self._coerce(other)
        return self._like(*(x + y for x, y in zip(self.a, o.a)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return self._like(*(x - y for x, y in zip(self.a, o.a)))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return self._like(*(-x for x in self.a))

    def __mul__(self, other):
        if not isinstance(other, SurfaceClass):
            return self._like(*(x * Fraction(other) for x in self.a))
        o = self._coerce(other)
        a0, a1, a2 = self.a
        b0, b1, b2 = o.a
        return self._like(
            a0 * b0,
            a0 * b1 + a1 * b0,
            a0 * b2 + a2 * b0 + a1 * b1 * self.deg)

    __rmul__ = __mul__

    def inverse(self):
        a0, a1, a2 = self.a
        if a0 == 0:
            raise ZeroDivisionError("non-unit surface class")
        # geometric series in the nilpotent part, which squares into pt
        u1, u2 = a1 / a0, a2 / a0
        return self._like(1, -u1, u1 * u1 * self.deg - u2) * (1 / a0)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = self._like(1, 0, 0)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, SurfaceClass):
            other = self._coerce(other)
        return self.deg == other.deg and self.a == other.a

    def __hash__(self):
        return hash((self.deg, self.a))

    def __repr__(self):
        return "SurfaceClass(deg=%d, %s + %s*h + %s*pt)" % (
            self.deg, self.a[0], self.a[1], self.a[2])


def _h(deg):
    return SurfaceClass(deg, 0, 1, 0)


@dataclass(frozen=True)
class SurfaceTraits:
    """The three numbers the surface-side formulas consume.

    degree: h^2 in pt units for the polarizing class h.
    m: the anticanonical multiple, -K = m*h.
    chi_top: topological Euler characteristic.
    """

    degree: int
    m: int
    chi_top: int

    @property
    def k2(self):
        return self.m * self.m * self.degree


class ChernData:
    """Total Chern class of a bundle on a polarized surface, with rank."""

    __slots__ = ("rank", "total")

    def __init__(self, rank, total):
        if total.a0 != 1:
            raise ValueError("total Chern class must start at 1")
        self.rank = int(rank)
        self.total = total

    @property
    def c1(self):
        return self.total.a1

    @property
    def c2(self):
        return self.total.a2

    def dual(self):
        t = self.total
        return ChernData(self.rank, t._like(1, -t.a1, t.a2))

    def twist(self, d):
        """Tensor with the d-th power of the polarizing line bundle."""
        r = self.rank
        t = self.total
        h = _h(t.deg)
        c1 = t._like(0, t.a1, 0)
        c2 = t._like(0, 0, t.a2)
        nc1 = c1 + r * d * h
        nc2 = c2 + (r - 1) * d * h * c1 + comb(r, 2) * d * d * h * h
        return ChernData(r, 1 + nc1 + nc2)

    def __repr__(self):
        return "ChernData(rank=%d, %r)" % (self.rank, self.total)


def surface_tangent_chern(surface):
    """c(T_S) = 1 + m*h + chi_top*pt.

    The degree-1 term is the anticanonical class; this is the sign that
    reproduces every cross-checked node count, and the ledger emitted by
    the command line records it explicitly.
    """
    deg = surface.degree
    total = SurfaceClass(deg, 1, surface.m, surface.chi_top)
    return ChernData(2, total)


def normal_bundle_chern(surface, ambient_dim):
    """c(N) for the surface in its projective ambient, by Whitney."""
    deg = surface.degree
    restricted = (1 + _h(deg)) ** (ambient_dim + 1)
    total = restricted * surface_tangent_chern(surface).total.inverse()
    return ChernData(ambient_dim - 2, total)


def conormal_twist_chern(surface, ambient_dim, twist):
    """c of the twisted conormal bundle in projective space."""
    return normal_bundle_chern(surface, ambient_dim).dual().twist(twist)


def _degree_list(degrees, cuts):
    if isinstance(degrees, int):
        degrees = [degrees] * cuts
    degrees = [int(d) for d in degrees]
    if len(degrees) != cuts:
        raise ValueError("need one degree per cutting hypersurface")
    return degrees


def _node_count(conormal, degrees):
    deg = conormal.total.deg
    acc = conormal.total
    for d in degrees:
        acc = acc * (1 - d * _h(deg)).inverse()
    # truncation already killed everything past pt; dimension reasons
    assert len(acc.a) == 3
    count = acc.a2
    if count.denominator != 1:
        raise ArithmeticError("node count came out non-integral")
    return int(count)


def predicted_nodes(surface, ambient_dim, degrees, cuts):
    """Nodes forced on a threefold cut out, inside projective space of the
    given dimension, by `cuts` hypersurfaces through the surface.

    The count is the pt-part of c(N^v) * prod (1 - d_j h)^-1, which for
    equal degrees is c2 of the twisted conormal bundle.
    """
    if cuts != ambient_dim - 3:
        raise ValueError("cutting count must drop the ambient to dim 3")
    degrees = _degree_list(degrees, cuts)
    nodes = _node_count(normal_bundle_chern(surface, ambient_dim).dual(),
                        degrees)
    if len(set(degrees)) == 1:
        tw = conormal_twist_chern(surface, ambient_dim, degrees[0])
        assert tw.c2 == nodes
    return nodes


# ---------------------------------------------------------------------------
# Euler characteristics of complete intersection threefolds


def _series_mul(a, b, top):
    out = [Fraction(0)] * (top + 1)
    for i, x in enumerate(a[:top + 1]):
        if x:
            for j, y in enumerate(b[:top + 1 - i]):
                out[i + j] += x * y
    return out


def _series_inv(a, top):
    if a[0] == 0:
        raise ZeroDivisionError
    out = [Fraction(0)] * (top + 1)
    out[0] = 1 / a[0]
    for k in range(1, top + 1):
        s = Fraction(0)
        for j in range(1, min(k, len(a) - 1) + 1):
            s += a[j] * out[k - j]
        out[k] = -s / a[0]
    return out


def euler_ci(weights, degrees, avoids_ambient_singularities=None):
    """Euler characteristic of a generic complete intersection threefold.

    For weighted ambients the formula is only meaningful when the generic
    member misses the singular locus; the caller certifies that with the
    keyword, which is what the catalog annotations feed in.
    """
    weights = [int(w) for w in weights]
    degrees = [int(d) for d in degrees]
    if len(weights) - 1 - len(degrees) != 3:
        raise ValueError("not a threefold")
    if any(w != 1 for w in weights):
        if avoids_ambient_singularities is not True:
            raise ValueError(
                "weighted ambient: need certification that the generic "
                "member avoids the singular locus")
    num = [Fraction(1)]
    for w in weights:
        num = _series_mul(num, [Fraction(1), Fraction(w)], 3)
    for d in degrees:
        num = _series_mul(num, _series_inv([Fraction(1), Fraction(d)], 3), 3)
    scale = Fraction(1)
    for d in degrees:
        scale *= d
    for w in weights:
        scale /= w
    chi = num[3] * scale
    if chi.denominator != 1:
        raise ArithmeticError("Euler characteristic came out non-integral")
    return int(chi)


# ---------------------------------------------------------------------------
# Schubert calculus on G(2,n)


class SchubertClass:
    """Integer (or rational) combination of basis classes sigma_{a,b},
    n-2 >= a >= b >= 0, with Pieri multiplication."""

    __slots__ = ("n", "c")

    def __init__(self, n, coeffs=None):
        self.n = int(n)
        c = {}
        if coeffs:
            for (a, b), v in coeffs.items():
                if not (self.n - 2 >= a >= b >= 0):
                    raise ValueError("index out of the basis range")
                if v:
                    c[(a, b)] = v
        self.c = c

    @classmethod
    def sigma(cls, n, a, b=0):
        return cls(n, {(a, b): Fraction(1)})

    @classmethod
    def one(cls, n):
        return cls.sigma(n, 0, 0)

    def _check(self, other):
        if isinstance(other, SchubertClass):
            if other.n != self.n:
                raise ValueError("classes live on different Grassmannians")
            return other
        return SchubertClass(self.n, {(0, 0): Fraction(other)})

    def __add__(self, other):
        o = self._check(other)
        c = dict(self.c)
        for k, v in o.c.items():
            c[k] = c.get(k, 0) + v
        return SchubertClass(self.n, c)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1) * self._check(other)

    def __neg__(self):
        return (-1) * self

    def _pieri(self, k, a, b):
        """sigma_k * sigma_{a,b} as a coefficient dict."""
        out = {}
        for d in range(b, min(a, b + k) + 1):
            cc = a + b + k - d
            if a <= cc <= self.n - 2:
                out[(cc, d)] = out.get((cc, d), 0) + 1
        return out

    def _mul_basis(self, ab, cd):
        a, b = ab
        cc, d = cd
        # sigma_{c,d} = sigma_{1,1}^d * sigma_{c-d}; the square factor just
        # shifts both indices, dying past the basis range
        out = {}
        for (x, y), v in self._pieri(cc - d, a, b).items():
            if x + d <= self.n - 2:
                out[(x + d, y + d)] = out.get((x + d, y + d), 0) + v
        return out

    def __mul__(self, other):
        if not isinstance(other, SchubertClass):
            c = {k: v * Fraction(other) for k, v in self.c.items()}
            return SchubertClass(self.n, c)
        o = self._check(other)
        acc = {}
        for ab, u in self.c.items():
            for cd, v in o.c.items():
                for k, w in self._mul_basis(ab, cd).items():
                    acc[k] = acc.get(k, 0) + u * v * w
        return SchubertClass(self.n, acc)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = SchubertClass.one(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def component(self, j):
        c = {k: v for k, v in self.c.items() if k[0] + k[1] == j}
        return SchubertClass(self.n, c)

    def integrate(self):
        v = self.c.get((self.n - 2, self.n - 2), Fraction(0))
        v = Fraction(v)
        if v.denominator != 1:
            raise ArithmeticError("non-integral integral")
        return int(v)

    def __eq__(self, other):
        o = self._check(other)
        return self.c == o.c

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.c.items()))))

    def __repr__(self):
        if not self.c:
            return "0"
        bits = []
        for (a, b), v in sorted(self.c.items()):
            bits.append("%s*s(%d,%d)" % (v, a, b))
        return " + ".join(bits)


def sigma(n, a, b=0):
    return SchubertClass.sigma(n, a, b)


def pieri_multiply(left, right):
    return left * right


def schubert_integrate(cls):
    return cls.integrate()


_TANGENT_CACHE = {}


def tangent_chern_grassmannian(n):
    """Chern classes of the tangent bundle of G(2,n), degree by degree.

    Splits the dual subbundle and the quotient bundle formally: power sums
    via Newton's identities, Chern character of the tensor product, then
    back to elementary symmetric functions.  Cached per n.
    """
    got = _TANGENT_CACHE.get(n)
    if got is not None:
        return got
    top = 2 * (n - 2)
    zero = SchubertClass(n)
    one = SchubertClass.one(n)

    def newton_p_from_e(e, rank):
        # p_k = e1 p_{k-1} - e2 p_{k-2} + ... + (-1)^{k-1} k e_k
        p = [rank * one]
        for k in range(1, top + 1):
            s = zero
            for i in range(1, k):
                if i < len(e):
                    s = s + (-1) ** (i - 1) * (e[i] * p[k - i])
            if k < len(e):
                s = s + Fraction((-1) ** (k - 1) * k) * e[k]
            p.append(s)
        return p

    e_sub = [one, sigma(n, 1), sigma(n, 1, 1)]           # dual subbundle
    e_quot = [one] + [sigma(n, k) for k in range(1, n - 1)]
    p_sub = newton_p_from_e(e_sub, 2)
    p_quot = newton_p_from_e(e_quot, n - 2)

    fact = [1]
    for k in range(1, top + 1):
        fact.append(fact[-1] * k)
    ch_sub = [p_sub[k] * Fraction(1, fact[k]) for k in range(top + 1)]
    ch_quot = [p_quot[k] * Fraction(1, fact[k]) for k in range(top + 1)]
    ch = []
    for k in range(top + 1):
        s = zero
        for i in range(k + 1):
            s = s + ch_sub[i] * ch_quot[k - i]
        ch.append(s)
    p_t = [ch[k] * Fraction(fact[k]) for k in range(top + 1)]

    # k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i
    e_t = [one]
    for k in range(1, top + 1):
        s = zero
        for i in range(1, k + 1):
            s = s + (-1) ** (i - 1) * (e_t[k - i] * p_t[i])
        e_t.append(s * Fraction(1, k))
    out = tuple(e_t)
    _TANGENT_CACHE[n] = out
    return out


def euler_chi_grassmannian(n):
    """chi_top of G(2,n), as the integral of the top Chern class."""
    return tangent_chern_grassmannian(n)[2 * (n - 2)].integrate()


def euler_ci_grassmannian(n, degrees):
    """Euler characteristic of a generic complete intersection threefold
    in G(2,n), cut by hypersurface sections of the given degrees."""
    degrees = [int(d) for d in degrees]
    dim = 2 * (n - 2)
    if dim - len(degrees) != 3:
        raise ValueError("not a threefold")
    ct = tangent_chern_grassmannian(n)
    s1 = sigma(n, 1)
    # c(T_X) = c(T_G) / prod(1 + d*s1), needed only in degree 3
    inv = [SchubertClass.one(n)]
    for k in range(1, 4):
        inv.append(SchubertClass(n))
    for d in degrees:
        new = [SchubertClass(n) for _ in range(4)]
        # multiply the running series by (1 + d*s1)^-1 degree by degree
        geom = [SchubertClass.one(n)]
        for k in range(1, 4):
            geom.append((-d) ** k * s1 ** k)
        for i in range(4):
            for j in range(4 - i):
                new[i + j] = new[i + j] + inv[i] * geom[j]
        inv = new
    c3 = SchubertClass(n)
    for i in range(4):
        c3 = c3 + ct[i] * inv[3 - i]
    cls = c3 * s1 ** len(degrees)
    scale = 1
    for d in degrees:
        scale *= d
    chi = Fraction(scale) * Fraction(cls.integrate())
    if chi.denominator != 1:
        raise ArithmeticError("Euler characteristic came out non-integral")
    return int(chi)


def linear_section_restrictions(n):
    """(sigma_2 . D, sigma_11 . D) for D a generic surface linear section
    of G(2,n): the two Schubert degrees every Grassmannian node count
    needs as input."""
    codim = 2 * (n - 2) - 2
    s1 = sigma(n, 1)
    return (schubert_integrate(sigma(n, 2) * s1 ** codim),
            schubert_integrate(sigma(n, 1, 1) * s1 ** codim))


def tangent_restriction(surface, n, sigma2, sigma11):
    """c(T_G(2,n)) restricted to a surface with the given Schubert degrees,
    as a class in the surface's truncated ring."""
    if sigma2 + sigma11 != surface.degree:
        raise ValueError("restriction degrees must add up to h^2")
    ct = tangent_chern_grassmannian(n)
    deg = surface.degree
    c1 = ct[1].c.get((1, 0), Fraction(0))
    c2s2 = ct[2].c.get((2, 0), Fraction(0))
    c2s11 = ct[2].c.get((1, 1), Fraction(0))
    return SurfaceClass(deg, 1, c1, c2s2 * sigma2 + c2s11 * sigma11)


def predicted_nodes_grassmannian(surface, n, slices, degrees,
                                 sigma2, sigma11):
    """Node count for a threefold cut inside a linear slice of G(2,n) by
    hypersurfaces through the surface.

    slices: how many hyperplane sections shrink G(2,n) to the working
    ambient Y.  degrees: the hypersurface degrees cutting the threefold
    inside Y.  sigma2, sigma11: Schubert degrees of the surface.
    """
    dim_y = 2 * (n - 2) - slices
    degrees = [int(d) for d in degrees]
    if dim_y - len(degrees) != 3:
        raise ValueError("cutting count must drop the slice to dim 3")
    deg = surface.degree
    h = _h(deg)
    ct_y = tangent_restriction(surface, n, sigma2, sigma11) \
        * ((1 + h) ** slices).inverse()
    cn = ct_y * surface_tangent_chern(surface).total.inverse()
    conormal = ChernData(dim_y - 2, cn._like(1, -cn.a1, cn.a2))
    return _node_count(conormal, degrees)


def chern_ledger(surface, ambient_dim, degrees, cuts):
    """Everything the command line prints for one surface/ambient pair."""
    degrees = _degree_list(degrees, cuts)
    t = surface_tangent_chern(surface)
    nb = normal_bundle_chern(surface, ambient_dim)
    d0 = degrees[0]
    tw = nb.dual().twist(d0) if len(set(degrees)) == 1 else None
    out = {
        "surface": {"degree": surface.degree, "m": surface.m,
                    "chi_top": surface.chi_top, "k2": surface.k2},
        "ambient_dim": ambient_dim,
        "tangent_total": [str(x) for x in t.total.a],
        "tangent_c1_sign": "anticanonical",
        "normal_total": [str(x) for x in nb.total.a],
        "degrees": degrees,
        "nodes": predicted_nodes(surface, ambient_dim, degrees, cuts),
    }
    if tw is not None:
        out["twisted_conormal_total"] = [str(x) for x in tw.total.a]
    return out
