"""Surface models and the construction rows of the census.

Each census row pairs a low-degree surface with a nodal Calabi-Yau
complete intersection cut out by forms vanishing on it.  This module
owns both halves: seeded constructors for the surfaces (anticanonical
del Pezzo models, a half-anticanonically embedded quadric, two
non-normal scroll projections transcribed verbatim) and the per-row
builders producing the threefold ideal together with the hypersurface
that links the surface to its residual.
"""

import dataclasses
import re

import numpy as np

from . import linalg
from .groebner import (Ideal, degree, dimension, ideal, ideal_quotient,
                       ideal_sum)
from .ring import (PolyMatrix, Ring, random_form, random_linear_change,
                   seeded_rng)

DEFAULT_PRIME = 32003

# kind -> (K^2, topological Euler number or None, embedding multiple m)
_KIND_DATA = {
    "dP1": (1, 11, 1),
    "dP2": (2, 10, 1),
    "dP3": (3, 9, 1),
    "dP4": (4, 8, 1),
    "dP5": (5, 7, 1),
    "dP6": (6, 6, 1),
    "dP7": (7, 5, 1),
    "QuadricP3": (8, 4, 2),
    "CubicDuVal": (3, 8, 1),
    "NonNormal_F32": (7, None, 1),
    "NonNormal_F51": (7, None, 1),
}


@dataclasses.dataclass(frozen=True)
class SurfaceModel:
    """A surface with the numerical data its embedding line bundle carries.

    ``m`` is the multiple with m*H restricting to the anticanonical class;
    the anticanonical models have m=1, the quadric in P^3 has m=2.
    """

    kind: str
    ideal: Ideal
    k2: int
    chi_top: object
    m: int = 1

    @property
    def ring(self):
        return self.ideal.ring

    @property
    def degree(self):
        return self.k2 // (self.m * self.m)

    @property
    def ambient(self):
        ws = self.ring.weights
        if all(w == 1 for w in ws):
            return "P%d" % (self.ring.n - 1)
        return "P(%s)" % ",".join(str(w) for w in ws)


@dataclasses.dataclass(frozen=True)
class ConstructionRow:
    """One row of the census with its printed expectations.

    Expected values are stored exactly as printed; option pairs such as
    "2 or 16" become tuples and comparisons treat them as sets.  ``chi_x``
    is the companion-table Euler column, whose meaning varies by family:
    "resolved" for a small resolution, "nodal" for the singular threefold,
    "smooth" for the generic smooth member.
    """

    rid: str
    ambient: str
    degrees: tuple
    surface_kind: str
    surface_k2: int
    expected_nodes: object = None
    expected_chi_smoothing: object = None
    expected_h3: object = None
    expected_h0: object = None
    expected_chi_x: object = None
    chi_x_meaning: object = None
    expected_deg_y: object = None
    f_degree: object = None
    system_multiple: object = None
    member_degree: object = None


@dataclasses.dataclass(frozen=True)
class ThreefoldInstance:
    """Built row: the threefold ideal, its surface, and linkage data."""

    row: ConstructionRow
    surface: SurfaceModel
    x_ideal: object
    linkage_form: object
    member_degree: object
    prime: int
    seed: int
    extras: dict = dataclasses.field(default_factory=dict, compare=False)

    @property
    def ring(self):
        if self.x_ideal is not None:
            return self.x_ideal.ring
        return self.surface.ring


def _row(rid, ambient, degrees, kind, k2, **kw):
    return ConstructionRow(rid, ambient, tuple(degrees), kind, k2, **kw)


_ROW_LIST = [
    _row("1", "P7", (2, 2, 2, 2), "dP4", 4, expected_nodes=12,
         expected_chi_smoothing=-120, expected_h3=(20,), expected_h0=9,
         expected_chi_x=-104, chi_x_meaning="resolved", expected_deg_y=(20,),
         f_degree=2, system_multiple=1, member_degree=3),
    _row("2", "P7", (2, 2, 2, 2), "dP5", 5, expected_nodes=18,
         expected_chi_smoothing=-102, expected_h3=(21,), expected_h0=9,
         expected_chi_x=-92, chi_x_meaning="resolved", expected_deg_y=(21,),
         f_degree=2, system_multiple=1, member_degree=3),
    _row("3", "P7", (2, 2, 2, 2), "dP6", 6, expected_nodes=24,
         expected_chi_smoothing=-84, expected_h3=(22,), expected_h0=9,
         expected_chi_x=-80, chi_x_meaning="resolved", expected_deg_y=(22,),
         f_degree=2, system_multiple=1, member_degree=3),
    _row("4", "P7", (2, 2, 2, 2), "dP6", 6, expected_nodes=24,
         expected_chi_smoothing=-86, expected_h3=(22,), expected_h0=9,
         expected_chi_x=-80, chi_x_meaning="resolved", expected_deg_y=(22,),
         f_degree=2, system_multiple=1, member_degree=3),
    _row("5", "P7", (2, 2, 2, 2), "dP7", 7, expected_nodes=30,
         expected_chi_smoothing=-72, expected_h3=(23,), expected_h0=9,
         expected_chi_x=-64, chi_x_meaning="resolved", expected_deg_y=(23,),
         f_degree=2, system_multiple=1, member_degree=3),
    _row("6", "P6", (2, 2, 3), "dP4", 4, expected_nodes=16,
         expected_chi_smoothing=-128, expected_h3=(2, 16), expected_h0=8,
         expected_chi_x=-112, chi_x_meaning="resolved",
         expected_deg_y=(16, 2),
         f_degree=2, system_multiple=1, member_degree=3),
    _row("7", "P6", (2, 2, 3), "dP5", 5, expected_nodes=23,
         expected_chi_smoothing=-108, expected_h3=(17,), expected_h0=8,
         expected_chi_x=-98, chi_x_meaning="resolved", expected_deg_y=(17,),
         f_degree=2, system_multiple=1, member_degree=3),
    _row("8", "P6", (2, 2, 3), "dP6", 6, expected_nodes=30,
         expected_chi_smoothing=-88, expected_h3=(18,), expected_h0=8,
         expected_chi_x=-84, chi_x_meaning="resolved", expected_deg_y=(18,),
         f_degree=2, system_multiple=1, member_degree=3),
    _row("9", "P6", (2, 2, 3), "dP6", 6, expected_nodes=30,
         expected_chi_smoothing=-90, expected_h3=(18,), expected_h0=8,
         expected_chi_x=-84, chi_x_meaning="resolved", expected_deg_y=(18,),
         f_degree=2, system_multiple=1, member_degree=3),
    _row("10", "G(2,5)", (1, 2, 2), "dP5", 5, expected_nodes=15,
         expected_chi_smoothing=-100, expected_h3=(25,), expected_h0=10,
         expected_chi_x=-105, chi_x_meaning="nodal", expected_deg_y=(25,),
         f_degree=1, system_multiple=1, member_degree=2),
    _row("11", "G(2,5)", (1, 1, 3), "dP5", 5, expected_nodes=20,
         expected_chi_smoothing=-120, expected_h3=(20,), expected_h0=9,
         expected_chi_x=-130, chi_x_meaning="nodal", expected_deg_y=(20,),
         f_degree=1, system_multiple=1, member_degree=2),
    _row("12", "G(2,6)", (1, 1, 1, 1, 2), "dP6", 6, expected_nodes=12,
         expected_chi_smoothing=-96, expected_h3=(34,), expected_h0=12,
         expected_chi_x=-104, chi_x_meaning="nodal", expected_deg_y=(34,),
         f_degree=1, system_multiple=1, member_degree=2),
    _row("13", "G(2,6)", (1, 1, 1, 1, 2), "dP6", 6, expected_nodes=12,
         expected_chi_smoothing=-98, expected_h3=(34,), expected_h0=12,
         expected_chi_x=-104, chi_x_meaning="nodal", expected_deg_y=(34,),
         f_degree=1, system_multiple=1, member_degree=2),
    _row("14", "P4", (5,), "QuadricP3", 8, expected_nodes=24,
         expected_chi_smoothing=-156, expected_h3=(6, 48), expected_h0=16,
         expected_chi_x=-200, chi_x_meaning="smooth", expected_deg_y=(48,),
         f_degree=1, system_multiple=2, member_degree=3),
    _row("15", "P5", (3, 3), "QuadricP3", 8, expected_nodes=16,
         expected_chi_smoothing=-116, expected_h3=(10, 80), expected_h0=22,
         expected_chi_x=-144, chi_x_meaning="smooth", expected_deg_y=(80,),
         f_degree=1, system_multiple=2, member_degree=3),
    _row("16", "P6", (2, 2, 3), "QuadricP3", 8, expected_nodes=14,
         expected_chi_smoothing=-120, expected_h3=(13, 104), expected_h0=27,
         expected_chi_x=-144, chi_x_meaning="smooth", expected_deg_y=(104,),
         f_degree=1, system_multiple=2, member_degree=3),
    _row("17", "P7", (2, 2, 2, 2), "QuadricP3", 8, expected_nodes=13,
         expected_chi_smoothing=-106, expected_h3=(17, 136), expected_h0=33,
         expected_chi_x=-128, chi_x_meaning="smooth", expected_deg_y=(136,),
         f_degree=1, system_multiple=2, member_degree=3),
    _row("18", "P(1,1,1,1,2,3)", (3, 6), "dP1", 1, expected_nodes=4,
         expected_chi_smoothing=-256,
         expected_chi_x=-200, chi_x_meaning="nodal", expected_deg_y=(4,)),
    _row("19", "P(1,1,1,1,1,2)", (3, 4), "dP2", 2, expected_nodes=8,
         expected_chi_smoothing=-176,
         expected_chi_x=-148, chi_x_meaning="nodal", expected_deg_y=(8, 1)),
    _row("20", "P(1,1,1,1,2)", (6,), "dP2", 2, expected_nodes=20,
         expected_chi_smoothing=-200,
         expected_chi_x=-184, chi_x_meaning="nodal", expected_deg_y=(5,)),
    _row("duval-quintic", "P4", (5,), "CubicDuVal", 3, expected_nodes=24,
         f_degree=1, system_multiple=1, member_degree=2),
    _row("nonnormal-f32", "P7", (2, 2, 2, 2), "NonNormal_F32", 7,
         expected_nodes=30),
    _row("nonnormal-f51", "P8", (), "NonNormal_F51", 7),
]

ROWS = {r.rid: r for r in _ROW_LIST}


def rows():
    """Census rows in table order."""
    return list(_ROW_LIST)


def get_row(rid):
    key = str(rid)
    if key not in ROWS:
        raise KeyError("unknown census row %r" % rid)
    return ROWS[key]


# -- rings -------------------------------------------------------------------

def _pring(n, p):
    """Coordinate ring of P^n with variables x0..xn."""
    return Ring(tuple("x%d" % i for i in range(n + 1)), p=p)


_WEIGHTED_RINGS = {
    (1, 1, 1, 1, 2, 3): ("x", "y", "z", "t", "u", "v"),
    (1, 1, 1, 1, 1, 2): ("x", "y", "z", "t", "w", "u"),
    (1, 1, 1, 1, 2): ("x", "y", "z", "t", "u"),
}


def weighted_ring(weights, p):
    names = _WEIGHTED_RINGS.get(tuple(weights))
    if names is None:
        raise ValueError("unsupported weight system %r" % (weights,))
    return Ring(names, weights=tuple(weights), p=p)


# -- verbatim non-normal generator lists -------------------------------------

_F32_VARS = ("x", "z", "t", "u", "v", "w", "p", "q")
_F32_TEXT = ("p^2-wq ,wp-vq ,vp-uq ,up-tq ,w^2-uq ,vw-tq ,uw-tp ,zw-xq "
             ",v^2-tp ,uv-tw ,zv-xp ,u^2-tv ,zu-xw ,zt-xv")

_F51_VARS = ("x", "y", "z", "t", "u", "v", "w", "p", "q")
_F51_TEXT = ("p^2-wq ,wp-vq ,vp-uq ,up-tq ,w^2-uq ,vw-tq ,uw-tp "
             ",tw-2xp+2zp-tp-2zq ,v^2-tp ,uv-tw ,tv-2xw+2zw-2xp-tp-2zq"
             ", u^2-tv ,tu-2xv+2zv-2xw-2yp-tp-2zq "
             ",t^2-2xu+2zu-2xv-2xw-2xp-tp-2zq")


def _parse_juxtaposed(ring, text):
    """Parse comma-separated forms written with juxtaposed single-letter
    variables (``wq`` for the product w*q)."""
    explicit = re.sub(r"(?<=[a-z0-9])(?=[a-z])", "*", text)
    return [ring.parse(part) for part in explicit.split(",")]


# -- surface matrices --------------------------------------------------------

def _linear_forms(ring, count, tag, seed):
    return [random_form(ring, 1, (tag, seed, k)) for k in range(count)]


def _dp7_matrix(ring, seed):
    """3x4 matrix of generic linear forms, the top of a symmetric 4x4."""
    a, b, c, d, e, f, g, h, i = _linear_forms(ring, 9, "dp7", seed)
    return PolyMatrix([[a, b, c, d], [b, e, f, g], [c, f, h, i]])


def _dp6_matrix(ring, seed):
    """6x6 skew matrix symmetric about the antidiagonal, one generic linear
    form per entry orbit (nine orbits)."""
    forms = {}
    rows = [[ring.zero] * 6 for _ in range(6)]
    for i in range(6):
        for j in range(i + 1, 6):
            rep = min((i, j), tuple(sorted((5 - j, 5 - i))))
            if rep not in forms:
                forms[rep] = random_form(ring, 1, ("dp6", seed, len(forms)))
            rows[i][j] = forms[rep]
            rows[j][i] = -forms[rep]
    return PolyMatrix(rows)


def _dp5_matrix(ring, seed):
    """Generic skew 5x5 matrix of linear forms."""
    rows = [[ring.zero] * 5 for _ in range(5)]
    k = 0
    for i in range(5):
        for j in range(i + 1, 5):
            f = random_form(ring, 1, ("dp5", seed, k))
            k += 1
            rows[i][j] = f
            rows[j][i] = -f
    return PolyMatrix(rows)


def _restricted_form(ring, degree, nvars, seed):
    """Generic form of the given degree in the first nvars variables only."""
    rng = seeded_rng("restricted", ring.p, ",".join(ring.vars), degree,
                     nvars, seed)
    pairs = []
    for key in ring.monomials_of_degree(degree):
        if any(ring.exponent(key, i) for i in range(nvars, ring.n)):
            continue
        pairs.append((key, rng.randrange(1, ring.p)))
    return ring.from_terms(pairs)


def _check_ambient(given, wanted):
    if given is not None and given._desc != wanted._desc:
        raise ValueError("incompatible ambient for this surface kind")
    return wanted


def del_pezzo_ideal(kind, ambient=None, seed=0, p=DEFAULT_PRIME):
    """Seeded model of one catalog surface as a SurfaceModel.

    ``ambient`` may name the ring to build in; each kind accepts only its
    own ambient (dP2 exists in both five-variable weighted rings).
    """
    if kind not in _KIND_DATA:
        raise ValueError("unknown surface kind %r" % kind)
    if ambient is not None and not isinstance(ambient, Ring):
        raise ValueError("ambient must be a Ring")
    if ambient is not None:
        p = ambient.p
    k2, chi, m = _KIND_DATA[kind]

    if kind == "dP7":
        ring = _check_ambient(ambient, _pring(7, p))
        gens = _dp7_matrix(ring, seed).minors(2)
    elif kind == "dP6":
        ring = _check_ambient(ambient, _pring(6, p))
        gens = _dp6_matrix(ring, seed).pfaffians(4)
    elif kind == "dP5":
        ring = _check_ambient(ambient, _pring(5, p))
        gens = _dp5_matrix(ring, seed).pfaffians(4)
    elif kind == "dP4":
        ring = _check_ambient(ambient, _pring(4, p))
        gens = [random_form(ring, 2, ("dp4", seed, k)) for k in range(2)]
    elif kind == "dP3":
        ring = _check_ambient(ambient, _pring(3, p))
        gens = [random_form(ring, 3, ("dp3", seed))]
    elif kind == "CubicDuVal":
        # cone point at (0:0:0:1); generic rank-3 quadric cone there
        ring = _check_ambient(ambient, _pring(3, p))
        cubic = _restricted_form(ring, 3, 3, ("duval-c", seed))
        quad = _restricted_form(ring, 2, 3, ("duval-q", seed))
        gens = [cubic + ring.var("x3") * quad]
    elif kind == "QuadricP3":
        ring = _check_ambient(ambient, _pring(3, p))
        gens = [random_form(ring, 2, ("quadric", seed))]
    elif kind == "dP1":
        ring = _check_ambient(ambient, weighted_ring((1, 1, 1, 1, 2, 3), p))
        s = random_form(ring, 6, ("dp1", seed))
        gens = [ring.var("x"), ring.var("y"), s]
    elif kind == "dP2":
        if ambient is not None and ambient.weights == (1, 1, 1, 1, 2):
            ring = ambient
            quartic = random_form(ring, 4, ("dp2", seed))
            gens = [ring.var("x"), quartic]
        else:
            ring = _check_ambient(ambient,
                                  weighted_ring((1, 1, 1, 1, 1, 2), p))
            quartic = random_form(ring, 4, ("dp2", seed))
            gens = [ring.var("x"), ring.var("y"), quartic]
    elif kind == "NonNormal_F32":
        ring = _check_ambient(ambient, Ring(_F32_VARS, p=p))
        gens = _parse_juxtaposed(ring, _F32_TEXT)
    else:  # NonNormal_F51
        ring = _check_ambient(ambient, Ring(_F51_VARS, p=p))
        gens = _parse_juxtaposed(ring, _F51_TEXT)

    return SurfaceModel(kind, ideal(ring, *gens), k2, chi, m)


def grassmannian_ideal(k, n, p=DEFAULT_PRIME):
    """Pluecker ideal of G(2,n) for n in {5,6}: the 4x4 Pfaffians of the
    generic skew matrix in the C(n,2) coordinates p_ij."""
    if k != 2 or n not in (5, 6):
        raise ValueError("only G(2,5) and G(2,6) are supported")
    names = tuple("p%d%d" % (i, j) for i in range(n)
                  for j in range(i + 1, n))
    ring = Ring(names, p=p)
    rows = [[ring.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = ring.var("p%d%d" % (i, j))
            rows[i][j] = v
            rows[j][i] = -v
    return ideal(ring, *PolyMatrix(rows).pfaffians(4))


def section_schubert_degrees(n, p=DEFAULT_PRIME, seed=0):
    """Measured Schubert degrees (sigma_2 . D, sigma_11 . D) of the del
    Pezzo linear section of G(2,n).

    Cuts the section, inside the full Pluecker embedding, by a seeded
    generic flag: three vanishing coordinates of the wedge-transformed
    basis for sigma_2, the n-1 conditions of lying in a transformed
    hyperplane for sigma_11.  Degrees of the resulting point schemes are
    the two intersection numbers; they add up to the section's degree.
    """
    if n == 5:
        sring = _pring(5, p)
        mat = _dp5_matrix(sring, seed)
    elif n == 6:
        sring = _pring(6, p)
        mat = _dp6_matrix(sring, seed)
    else:
        raise ValueError("only G(2,5) and G(2,6) are supported")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    a = np.array([_linear_coeff_vector(mat[i, j], p) for (i, j) in pairs],
                 dtype=np.int64)
    h = linalg.nullspace(a.T, p)
    plucker = grassmannian_ideal(2, n, p)
    ring = plucker.ring
    span = []
    for r in range(h.shape[0]):
        f = ring.zero
        for c, (i, j) in enumerate(pairs):
            if h[r, c]:
                f = f + ring.var("p%d%d" % (i, j)) * int(h[r, c])
        span.append(f)
    base = list(plucker.gens) + span

    rng = seeded_rng("schubert-flag", n, seed)
    while True:
        m = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        if linalg.rank(np.array(m, dtype=np.int64), p) == n:
            break

    def wedge(va, vb):
        f = ring.zero
        for i in range(n):
            for j in range(i + 1, n):
                c = (m[va][i] * m[vb][j] - m[va][j] * m[vb][i]) % p
                if c:
                    f = f + ring.var("p%d%d" % (i, j)) * c
        return f

    out = []
    for conds in ([wedge(n - 3, n - 2), wedge(n - 3, n - 1),
                   wedge(n - 2, n - 1)],
                  [wedge(i, n - 1) for i in range(n - 1)]):
        cut = ideal(ring, *(base + conds))
        if dimension(cut) != 1:
            raise ArithmeticError("flag cut came out non-finite; reseed")
        out.append(degree(cut))
    return tuple(out)


def embed_linear(surface, n, seed=0):
    """Re-embed a surface model into P^n by generic linear change.

    The original generators move to the leading coordinates and the
    remaining n - i coordinates cut the linear span; a seeded invertible
    change of all coordinates is applied on top.
    """
    src = surface.ring
    if not src.is_standard_graded:
        raise ValueError("only straight projective models can be re-embedded")
    if n + 1 < src.n:
        raise ValueError("target dimension too small")
    target = _pring(n, src.p)
    mapping = {v: target.var("x%d" % i) for i, v in enumerate(src.vars)}
    gens = [g.substitute(mapping, target=target) for g in surface.ideal.gens]
    gens += [target.var("x%d" % i) for i in range(src.n, n + 1)]
    gl = random_linear_change(target, ("embed", surface.kind, seed))
    gens = [g.substitute(gl, target=target) for g in gens]
    return SurfaceModel(surface.kind, ideal(target, *gens),
                        surface.k2, surface.chi_top, surface.m)


def generic_member(i_d, d, seed):
    """Seeded generic element of the degree-d graded piece of the ideal.

    Every reduced basis element of degree at most d contributes a dense
    random cofactor, so the combination ranges over the whole piece.
    """
    ring = i_d.ring
    parts = []
    for j, g in enumerate(i_d.groebner()):
        e = d - g.wdeg()
        if e < 0:
            continue
        parts.append(g * random_form(ring, e, ("member", seed, j)))
    if not parts:
        raise ValueError("ideal has no elements of degree %d" % d)
    total = parts[0]
    for q in parts[1:]:
        total = total + q
    return total


# -- Grassmannian sections in adapted coordinates ----------------------------

def _linear_coeff_vector(form, p):
    ring = form.ring
    vec = np.zeros(ring.n, dtype=np.int64)
    for key, c in form.terms:
        for i in range(ring.n):
            if ring.exponent(key, i):
                vec[i] = c % p
                break
    return vec


def adapted_plucker(n, p, seed, drop=0):
    """Pluecker generators of G(2,n) in coordinates adapted to the del
    Pezzo linear section.

    The surface's matrix model parametrizes a linear subspace of the
    Pluecker space; coordinates are chosen so that the leading variables
    restrict to the surface model and the trailing ones vanish on it.
    ``drop`` trailing coordinates are cut away (an ambient linear slice).
    Returns (ring, generators, number of surface coordinates).
    """
    if n == 5:
        sring = _pring(5, p)
        mat = _dp5_matrix(sring, seed)
    elif n == 6:
        sring = _pring(6, p)
        mat = _dp6_matrix(sring, seed)
    else:
        raise ValueError("only G(2,5) and G(2,6) are supported")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    nsurf = sring.n
    total = len(pairs)

    a = np.array([_linear_coeff_vector(mat[i, j], p) for (i, j) in pairs],
                 dtype=np.int64)
    h = linalg.nullspace(a.T, p)
    if h.shape[0] != total - nsurf:
        raise ArithmeticError("degenerate surface matrix under this seed")
    # nullspace comes back in echelon form; remix so that any split into
    # kept and dropped covectors is a generic one
    rng = seeded_rng("plucker-mix", n, seed)
    while True:
        mix = np.array([[rng.randrange(p) for _ in range(h.shape[0])]
                        for _ in range(h.shape[0])], dtype=np.int64)
        if linalg.rank(mix, p) == h.shape[0]:
            break
    h = (mix @ h) % p
    comp = np.zeros((total, total - nsurf), dtype=np.int64)
    for kk in range(total - nsurf):
        e = np.zeros(h.shape[0], dtype=np.int64)
        e[kk] = 1
        sol = linalg.solve(h, e, p)
        if sol is None:
            raise ArithmeticError("complement solve failed")
        comp[:, kk] = sol

    keep = total - drop
    target = Ring(tuple("w%d" % i for i in range(keep)), p=p)
    tvars = target.gens()
    images = {}
    for r, (i, j) in enumerate(pairs):
        f = target.zero
        for s in range(nsurf):
            if a[r, s]:
                f = f + tvars[s] * int(a[r, s])
        for kk in range(total - nsurf):
            col = nsurf + kk
            if col < keep and comp[r, kk]:
                f = f + tvars[col] * int(comp[r, kk])
        images["p%d%d" % (i, j)] = f

    plucker = grassmannian_ideal(2, n, p)
    gens = [g.substitute(images, target=target) for g in plucker.gens]
    return target, gens, nsurf


# -- row builders ------------------------------------------------------------

def _seed_tag(row, seed, label):
    return "%s|%s|%s" % (row.rid, seed, label)


def _build_projective(row, p, seed):
    n = int(row.ambient[1:])
    kind = row.surface_kind
    base = del_pezzo_ideal(kind, seed=_seed_tag(row, seed, "surf"), p=p)
    surf = embed_linear(base, n, seed=_seed_tag(row, seed, "emb"))
    cuts = [generic_member(surf.ideal, d, _seed_tag(row, seed, "cut%d" % i))
            for i, d in enumerate(row.degrees)]
    x_ideal = ideal(surf.ring, *cuts)
    f = generic_member(surf.ideal, row.f_degree, _seed_tag(row, seed, "F"))
    return ThreefoldInstance(row, surf, x_ideal, f, row.member_degree,
                             p, seed)


def _build_grassmannian(row, p, seed):
    n = 5 if row.ambient == "G(2,5)" else 6
    slices = row.degrees.count(1)
    drop = slices if n == 5 else 4
    ring, gens, nsurf = adapted_plucker(n, p, _seed_tag(row, seed, "surf"),
                                        drop=drop)
    lin = [ring.var("w%d" % i) for i in range(nsurf, ring.n)]
    d_ideal = ideal(ring, *(gens + lin))
    heavy = [d for d in row.degrees if d > 1]
    cuts = [generic_member(d_ideal, d, _seed_tag(row, seed, "cut%d" % i))
            for i, d in enumerate(heavy)]
    x_ideal = ideal(ring, *(gens + cuts))
    f = generic_member(ideal(ring, *lin), 1, _seed_tag(row, seed, "F"))
    k2, chi, m = _KIND_DATA[row.surface_kind]
    surf = SurfaceModel(row.surface_kind, d_ideal, k2, chi, m)
    return ThreefoldInstance(row, surf, x_ideal, f, row.member_degree,
                             p, seed, extras={"slices": drop})


def _build_weighted(row, p, seed):
    ring = weighted_ring(_parse_weights(row.ambient), p)
    surf = del_pezzo_ideal(row.surface_kind, ambient=ring,
                           seed=_seed_tag(row, seed, "surf"), p=p)
    x = ring.var("x")
    if row.rid == "18":
        s = surf.ideal.gens[2]
        f = random_form(ring, 2, _seed_tag(row, seed, "f"))
        g = random_form(ring, 2, _seed_tag(row, seed, "g"))
        cubic = x * f + ring.var("y") * g
        x_ideal = ideal(ring, cubic, s)
        extras = {"f": f, "g": g, "s": s}
    elif row.rid == "19":
        quartic_d = surf.ideal.gens[2]
        a = random_form(ring, 2, _seed_tag(row, seed, "a"))
        b = random_form(ring, 2, _seed_tag(row, seed, "b"))
        f3 = random_form(ring, 3, _seed_tag(row, seed, "f"))
        g3 = random_form(ring, 3, _seed_tag(row, seed, "g"))
        lam = seeded_rng("lam", p, row.rid, seed).randrange(1, p)
        y = ring.var("y")
        cubic = x * a + y * b
        quartic = x * f3 + y * g3 + quartic_d * lam
        x_ideal = ideal(ring, cubic, quartic)
        extras = {"f": a, "g": b}
    else:
        quartic_d = surf.ideal.gens[1]
        q5 = random_form(ring, 5, _seed_tag(row, seed, "f"))
        q2 = random_form(ring, 2, _seed_tag(row, seed, "g"))
        sextic = x * q5 + quartic_d * q2
        x_ideal = ideal(ring, sextic)
        extras = {"f": q5, "g": q2}
    return ThreefoldInstance(row, surf, x_ideal, None, None, p, seed,
                             extras=extras)


def _build_duval(row, p, seed):
    base = del_pezzo_ideal("CubicDuVal", seed=_seed_tag(row, seed, "surf"),
                           p=p)
    surf = embed_linear(base, 4, seed=_seed_tag(row, seed, "emb"))
    by_deg = {g.wdeg(): g for g in surf.ideal.gens}
    lin, cubic = by_deg[1], by_deg[3]
    ring = surf.ring
    quartic = random_form(ring, 4, _seed_tag(row, seed, "p"))
    quad = random_form(ring, 2, _seed_tag(row, seed, "q"))
    quintic = cubic * quad + lin * quartic
    x_ideal = ideal(ring, quintic)
    extras = {"l": lin, "c": cubic, "p": quartic, "q": quad}
    return ThreefoldInstance(row, surf, x_ideal, lin, row.member_degree,
                             p, seed, extras=extras)


def _build_f32(row, p, seed):
    surf = del_pezzo_ideal("NonNormal_F32", seed=seed, p=p)
    cuts = [generic_member(surf.ideal, 2, _seed_tag(row, seed, "cut%d" % i))
            for i in range(4)]
    x_ideal = ideal(surf.ring, *cuts)
    return ThreefoldInstance(row, surf, x_ideal, None, None, p, seed)


def _parse_weights(ambient):
    return tuple(int(w) for w in ambient[2:-1].split(","))


def build_row(rid, p=DEFAULT_PRIME, seed=0):
    """Construct one census row over F_p; identical inputs rebuild the
    identical instance."""
    row = get_row(rid)
    if row.rid == "duval-quintic":
        return _build_duval(row, p, seed)
    if row.rid == "nonnormal-f32":
        return _build_f32(row, p, seed)
    if row.rid == "nonnormal-f51":
        surf = del_pezzo_ideal("NonNormal_F51", seed=seed, p=p)
        return ThreefoldInstance(row, surf, None, None, None, p, seed)
    if row.ambient.startswith("G("):
        return _build_grassmannian(row, p, seed)
    if row.ambient.startswith("P("):
        return _build_weighted(row, p, seed)
    return _build_projective(row, p, seed)


def residual_surface(x_ideal, f, d_ideal, member_degree, seed=0):
    """Split X' along F into the surface and its residual, then link again.

    F cuts X' along D plus a residual surface S; a generic member of the
    stated degree through S but not through D cuts X' along S plus the
    second residual G'.  Returns (S, G').
    """
    ring = x_ideal.ring
    if not d_ideal.contains(f):
        raise ValueError("the splitting form must vanish on the surface")
    if x_ideal.contains(f):
        raise ValueError("the splitting form lies in the threefold ideal")
    s_ideal = ideal_quotient(ideal_sum(x_ideal, ideal(ring, f)), d_ideal)
    member = None
    for attempt in range(8):
        cand = generic_member(s_ideal, member_degree,
                              ("link", seed, attempt))
        if not d_ideal.contains(cand):
            member = cand
            break
    if member is None:
        raise ValueError("no degree-%d member of the residual ideal avoids "
                         "the surface" % member_degree)
    g_ideal = ideal_quotient(ideal_sum(x_ideal, ideal(ring, member)),
                             s_ideal)
    return s_ideal, g_ideal
