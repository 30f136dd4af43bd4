"""Intersection-theory oracle tests.

The quadric-row node counts are checked against an independent
rank-drop-locus computation done with the Groebner engine; the surface
and Grassmannian pins are hand-derived values asserted exactly.
"""

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nodalci import chow
from nodalci.chow import SchubertClass, SurfaceClass, SurfaceTraits, sigma
from nodalci.ring import Ring, PolyMatrix, random_form, seeded_rng
from nodalci import groebner as gro


DP4 = SurfaceTraits(4, 1, 8)
DP5 = SurfaceTraits(5, 1, 7)
DP6 = SurfaceTraits(6, 1, 6)
DP7 = SurfaceTraits(7, 1, 5)
QUADRIC = SurfaceTraits(2, 2, 4)
P2_ANTI = SurfaceTraits(9, 1, 3)


# ---------------------------------------------------------------------------
# truncated ring arithmetic

small = st.integers(min_value=-9, max_value=9)


@given(small, small, small, small, small, small, small)
@settings(max_examples=60, deadline=None)
def test_surface_class_ring_axioms(d, a0, a1, a2, b0, b1, b2):
    deg = abs(d) + 1
    x = SurfaceClass(deg, a0, a1, a2)
    y = SurfaceClass(deg, b0, b1, b2)
    z = SurfaceClass(deg, a1, b2, a0)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(small, small, small)
@settings(max_examples=40, deadline=None)
def test_surface_class_inverse(a0, a1, a2):
    if a0 == 0:
        a0 = 1
    x = SurfaceClass(3, a0, a1, a2)
    one = SurfaceClass(3, 1, 0, 0)
    assert x * x.inverse() == one
    assert x ** 3 * x ** -3 == one


def test_truncation_h_cubed():
    h = SurfaceClass(5, 0, 1, 0)
    assert h * h == SurfaceClass(5, 0, 0, 5)
    assert h * h * h == SurfaceClass(5, 0, 0, 0)


# ---------------------------------------------------------------------------
# surface tangent / normal / conormal

def test_surface_tangent_examples():
    assert chow.surface_tangent_chern(DP7).total.a == (1, 1, 5)
    assert chow.surface_tangent_chern(QUADRIC).total.a == (1, 2, 4)
    assert chow.surface_tangent_chern(P2_ANTI).total.a == (1, 1, 3)


def test_normal_bundle_dp7():
    nb = chow.normal_bundle_chern(DP7, 7)
    assert nb.c1 == 7
    assert nb.rank == 5


def test_conormal_twist_dp7():
    tw = chow.conormal_twist_chern(DP7, 7, 2)
    assert tw.c2 == 30


def test_twist_identities():
    e = chow.ChernData(3, SurfaceClass(4, 1, 2, 5))
    assert e.twist(0).total == e.total
    for d in (1, 2, 5):
        assert e.twist(d).c1 == e.c1 + 3 * d


def test_trivial_bundle_twist():
    triv = chow.ChernData(4, SurfaceClass(6, 1, 0, 0))
    assert triv.twist(0).total == SurfaceClass(6, 1, 0, 0)


@pytest.mark.parametrize("surface,n", [
    (DP4, 4), (DP4, 7), (DP5, 5), (DP5, 7), (DP6, 6), (DP6, 7),
    (DP7, 7), (QUADRIC, 4), (QUADRIC, 5), (QUADRIC, 6), (QUADRIC, 7),
])
def test_whitney_product(surface, n):
    t = chow.surface_tangent_chern(surface)
    nb = chow.normal_bundle_chern(surface, n)
    h = SurfaceClass(surface.degree, 0, 1, 0)
    assert t.total * nb.total == (1 + h) ** (n + 1)


def test_quadric_normal_matches_split_bundle():
    # inside P^4 the normal bundle splits off the slice hyperplane
    nb = chow.normal_bundle_chern(QUADRIC, 4)
    h = SurfaceClass(2, 0, 1, 0)
    assert nb.total == (1 + 2 * h) * (1 + h)


# ---------------------------------------------------------------------------
# node predictions, projective ambients

def test_predicted_nodes_p7_rows():
    assert chow.predicted_nodes(DP4, 7, 2, 4) == 12
    assert chow.predicted_nodes(DP5, 7, 2, 4) == 18
    assert chow.predicted_nodes(DP6, 7, 2, 4) == 24
    assert chow.predicted_nodes(DP7, 7, 2, 4) == 30


def test_predicted_nodes_p6_rows():
    assert chow.predicted_nodes(DP4, 6, [2, 2, 3], 3) == 16
    assert chow.predicted_nodes(DP5, 6, [2, 2, 3], 3) == 23
    assert chow.predicted_nodes(DP6, 6, [2, 2, 3], 3) == 30


def test_predicted_nodes_quadric_rows():
    assert chow.predicted_nodes(QUADRIC, 4, 5, 1) == 24
    assert chow.predicted_nodes(QUADRIC, 5, 3, 2) == 16
    assert chow.predicted_nodes(QUADRIC, 6, [2, 2, 3], 3) == 14
    assert chow.predicted_nodes(QUADRIC, 7, 2, 4) == 12


def test_predicted_nodes_validates_cut_count():
    with pytest.raises(ValueError):
        chow.predicted_nodes(DP7, 7, 2, 3)
    with pytest.raises(ValueError):
        chow.predicted_nodes(DP4, 6, [2, 2], 2)


def _rank_drop_count(ambient_n, cut_degrees, tag):
    """Independent oracle: nodes on the quadric surface are the points
    where the conormal rows of the cutting hypersurfaces drop rank.
    Computed as an honest projective degree over F_32003."""
    ring = Ring(("x", "y", "z", "w"), p=32003)
    rng = seeded_rng("rank-drop", tag)
    q = random_form(ring, 2, rng.randrange(1 << 30))
    rows = []
    for d in cut_degrees:
        lead = random_form(ring, d - 2, rng.randrange(1 << 30)) if d > 2 \
            else ring.constant(rng.randrange(1, ring.p))
        rest = [random_form(ring, d - 1, rng.randrange(1 << 30))
                for _ in range(ambient_n - 3)]
        rows.append([lead] + rest)
    minors = PolyMatrix(rows).minors(len(cut_degrees))
    ideal = gro.Ideal(ring, [q] + list(minors))
    assert gro.projective_dimension(ideal) == 0
    degree, reduced = gro.projective_reduced_degree(ideal)
    assert reduced
    return degree


@pytest.mark.parametrize("n,degrees", [
    (4, [5]), (5, [3, 3]), (6, [2, 2, 3]), (7, [2, 2, 2, 2]),
])
def test_quadric_rows_against_rank_drop_locus(n, degrees):
    predicted = chow.predicted_nodes(QUADRIC, n, degrees, n - 3)
    assert _rank_drop_count(n, degrees, "n%d" % n) == predicted


# ---------------------------------------------------------------------------
# Euler characteristics, projective and weighted

def _chi_by_series(weights, degrees):
    # independent expansion: numerator coefficients via direct convolution
    coef = [Fraction(1), Fraction(0), Fraction(0), Fraction(0)]
    for w in weights:
        coef = [coef[0], coef[1] + w * coef[0], coef[2] + w * coef[1],
                coef[3] + w * coef[2]]
    for d in degrees:
        # divide by (1 + d t): synthetic division
        out = []
        carry = Fraction(0)
        for c in coef:
            carry = c - d * carry
            out.append(carry)
        coef = out
    scale = Fraction(1)
    for d in degrees:
        scale *= d
    for w in weights:
        scale /= w
    return coef[3] * scale


@pytest.mark.parametrize("weights,degrees,expected", [
    ([1] * 5, [5], -200),
    ([1] * 8, [2, 2, 2, 2], -128),
    ([1] * 6, [3, 3], -144),
    ([1] * 7, [2, 2, 3], -144),
    ([1] * 4, [], 4),
    ([1] * 5, [2], 4),
])
def test_euler_ci_projective(weights, degrees, expected):
    got = chow.euler_ci(weights, degrees)
    assert got == expected
    assert got == _chi_by_series(weights, degrees)


@pytest.mark.parametrize("weights,degrees,expected", [
    ([1, 1, 1, 1, 2], [6], -204),
    ([1, 1, 1, 1, 2, 3], [3, 6], -204),
    ([1, 1, 1, 1, 1, 2], [3, 4], -156),
    ([1, 1, 1, 1, 1, 3], [2, 6], -256),
    ([1, 1, 1, 1, 1, 1], [2, 4], -176),
])
def test_euler_ci_weighted(weights, degrees, expected):
    got = chow.euler_ci(weights, degrees, avoids_ambient_singularities=True)
    assert got == expected
    assert got == _chi_by_series(weights, degrees)


def test_euler_ci_weighted_needs_certificate():
    with pytest.raises(ValueError):
        chow.euler_ci([1, 1, 1, 1, 2], [6])


def test_euler_ci_dimension_check():
    with pytest.raises(ValueError):
        chow.euler_ci([1] * 5, [2, 2])


def test_euler_chain_against_nodal_counts():
    # smoothing chains: chi of the small resolution is chi + 2k
    assert chow.euler_ci([1] * 8, [2, 2, 2, 2]) + 2 * 12 == -104
    assert chow.euler_ci([1, 1, 1, 1, 2], [6],
                         avoids_ambient_singularities=True) + 20 == -184


# ---------------------------------------------------------------------------
# Schubert calculus

def test_sigma1_power_integrates_to_degree():
    s1 = sigma(5, 1)
    assert chow.schubert_integrate(s1 ** 6) == 5
    assert chow.schubert_integrate(sigma(6, 1) ** 8) == 14
    assert chow.schubert_integrate(sigma(4, 1) ** 4) == 2


def test_pieri_rule_basic():
    assert sigma(5, 1) * sigma(5, 1) == sigma(5, 2) + sigma(5, 1, 1)
    assert sigma(5, 1) * sigma(5, 3) == sigma(5, 3, 1)
    assert sigma(5, 1) * sigma(5, 2, 1) == sigma(5, 3, 1) + sigma(5, 2, 2)
    assert sigma(5, 1, 1) * sigma(5, 2, 2) == sigma(5, 3, 3)
    assert sigma(5, 2, 2) * sigma(5, 2, 2) == SchubertClass(5)


def test_basis_count_is_euler_characteristic():
    n = 5
    basis = [(a, b) for a in range(n - 1) for b in range(a + 1)]
    assert len(basis) == comb(n, 2)


def test_schubert_mismatched_grassmannians():
    with pytest.raises(ValueError):
        chow.pieri_multiply(sigma(5, 1), sigma(6, 1))


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3),
       st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
@settings(max_examples=40, deadline=None)
def test_schubert_associative_commutative(a, b, c, d, e, f):
    n = 6
    x = sigma(n, max(a, b), min(a, b))
    y = sigma(n, max(c, d), min(c, d))
    z = sigma(n, max(e, f), min(e, f))
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)


def test_poincare_pairing():
    for n in (4, 5, 6):
        for a in range(n - 1):
            for b in range(a + 1):
                dual = sigma(n, n - 2 - b, n - 2 - a)
                got = chow.schubert_integrate(sigma(n, a, b) * dual)
                assert got == 1


def test_grassmannian_euler_characteristics():
    for n in (4, 5, 6):
        assert chow.euler_chi_grassmannian(n) == comb(n, 2)


def test_tangent_chern_g24():
    ct = chow.tangent_chern_grassmannian(4)
    assert ct[1] == 4 * sigma(4, 1)
    assert ct[2] == 7 * sigma(4, 2) + 7 * sigma(4, 1, 1)


def test_tangent_chern_g25_low_degrees():
    ct = chow.tangent_chern_grassmannian(5)
    assert ct[1] == 5 * sigma(5, 1)
    assert ct[2] == 11 * sigma(5, 2) + 12 * sigma(5, 1, 1)


def test_g24_euler_ci_agrees_with_projective_model():
    # the n=4 Grassmannian is itself a quadric fourfold, so both
    # implementations must produce the same threefold Euler numbers
    assert chow.euler_ci_grassmannian(4, [1]) == chow.euler_ci([1] * 6, [2, 1])
    assert chow.euler_ci_grassmannian(4, [2]) == chow.euler_ci([1] * 6, [2, 2])
    assert chow.euler_ci_grassmannian(4, [3]) == chow.euler_ci([1] * 6, [2, 3])


def test_euler_ci_grassmannian_values():
    assert chow.euler_ci_grassmannian(5, [1, 2, 2]) == -120
    assert chow.euler_ci_grassmannian(5, [1, 1, 3]) == -150
    assert chow.euler_ci_grassmannian(6, [1, 1, 1, 1, 2]) == -116


def test_euler_ci_grassmannian_chains():
    # adding the node counts lands on the nodal models' Euler numbers
    assert chow.euler_ci_grassmannian(5, [1, 2, 2]) + 15 == -105
    assert chow.euler_ci_grassmannian(5, [1, 1, 3]) + 20 == -130
    assert chow.euler_ci_grassmannian(6, [1, 1, 1, 1, 2]) + 12 == -104


def test_euler_ci_grassmannian_dimension_check():
    with pytest.raises(ValueError):
        chow.euler_ci_grassmannian(5, [1, 2])


# ---------------------------------------------------------------------------
# Grassmannian node predictions

def test_linear_section_restrictions_g25():
    assert chow.linear_section_restrictions(5) == (3, 2)


def test_predicted_nodes_grassmannian_g25():
    assert chow.predicted_nodes_grassmannian(DP5, 5, 1, [2, 2], 3, 2) == 15
    assert chow.predicted_nodes_grassmannian(DP5, 5, 2, [3], 3, 2) == 20


def test_predicted_nodes_grassmannian_g26():
    # 16 at the measured splitting (4,2) of the special section; the
    # census expectation of 12 would need (6,0), which no nondegenerate
    # section can realize
    assert chow.predicted_nodes_grassmannian(DP6, 6, 4, [2], 4, 2) == 16
    assert chow.predicted_nodes_grassmannian(DP6, 6, 4, [2], 6, 0) == 12


def test_tangent_restriction_validates_degrees():
    with pytest.raises(ValueError):
        chow.tangent_restriction(DP5, 5, 2, 2)


def test_predicted_nodes_grassmannian_dimension_check():
    with pytest.raises(ValueError):
        chow.predicted_nodes_grassmannian(DP5, 5, 1, [2], 3, 2)


# ---------------------------------------------------------------------------
# ledger plumbing

def test_chern_ledger_contents():
    led = chow.chern_ledger(DP7, 7, 2, 4)
    assert led["nodes"] == 30
    assert led["tangent_c1_sign"] == "anticanonical"
    assert led["surface"]["k2"] == 7
    assert "twisted_conormal_total" in led
