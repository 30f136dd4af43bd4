import itertools

import pytest
from hypothesis import given, settings, strategies as st

from nodalci.ring import (
    Ring, PolyMatrix, random_form, random_linear_change,
    format_ring_header, parse_ring_header,
)

R3 = Ring(["x", "y", "z"], p=32003)
R7 = Ring(["x", "y"], p=7)
W6 = Ring(["x", "y", "z", "t", "u", "v"], weights=[1, 1, 1, 1, 2, 3], p=32003)


def brute_monomials(weights, d):
    n = len(weights)
    hits = []
    for exps in itertools.product(*(range(d // w + 1) for w in weights)):
        if sum(w * e for w, e in zip(weights, exps)) == d:
            hits.append(exps)
    return hits


def grevlex_cmp(wa, ea, wb, eb, weights):
    da = sum(w * e for w, e in zip(weights, ea))
    db = sum(w * e for w, e in zip(weights, eb))
    if da != db:
        return 1 if da > db else -1
    for x, y in zip(reversed(ea), reversed(eb)):
        if x != y:
            return 1 if x < y else -1
    return 0


# -- packed monomial order ---------------------------------------------------

@settings(max_examples=300, deadline=None)
@given(st.lists(st.tuples(*[st.integers(0, 9)] * 4), min_size=2, max_size=2))
def test_packed_order_matches_weighted_grevlex(pair):
    ring = Ring(["a", "b", "c", "d"], weights=[1, 1, 2, 3], p=32003)
    ea, eb = pair
    ka, kb = ring.pack(ea), ring.pack(eb)
    want = grevlex_cmp(None, ea, None, eb, ring.weights)
    got = (ka > kb) - (ka < kb)
    assert got == want


@settings(max_examples=300, deadline=None)
@given(st.lists(st.tuples(*[st.integers(0, 6)] * 4), min_size=2, max_size=2))
def test_packed_block_order(pair):
    ring = Ring(["s", "a", "b", "c"], p=32003, split=1)
    ea, eb = pair
    ka, kb = ring.pack(ea), ring.pack(eb)

    def key(e):
        return (e[0], sum(e[1:]), tuple(-x for x in reversed(e[1:])))

    want = (key(ea) > key(eb)) - (key(ea) < key(eb))
    assert (ka > kb) - (ka < kb) == want


def test_mono_ops_roundtrip():
    e = (3, 0, 5, 1)
    ring = Ring(["a", "b", "c", "d"], weights=[1, 1, 2, 3], p=32003)
    assert ring.unpack(ring.pack(e)) == e
    assert ring.wdeg_of(ring.pack(e)) == 3 + 10 + 3
    a = ring.pack((1, 2, 0, 1))
    b = ring.pack((0, 3, 2, 0))
    assert ring.unpack(ring.mono_mul(a, b)) == (1, 5, 2, 1)
    assert ring.mono_divides(a, ring.mono_mul(a, b))
    assert not ring.mono_divides(ring.pack((2, 0, 0, 0)), ring.pack((1, 5, 0, 0)))
    assert ring.unpack(ring.mono_div(ring.mono_mul(a, b), b)) == (1, 2, 0, 1)
    assert ring.unpack(ring.mono_lcm(a, b)) == (1, 3, 2, 1)


def test_degree_cap_is_checked():
    x = R3.var("x")
    with pytest.raises(OverflowError):
        (x ** 64) * (x ** 64)
    with pytest.raises(OverflowError):
        R3.pack((128, 0, 0))
    big = x ** 127
    assert big.wdeg() == 127


# -- arithmetic --------------------------------------------------------------

def test_product_difference_of_squares():
    x, y, z = R3.gens()
    assert (x + y) * (x - y) == x * x - y * y
    assert (x * 0).is_zero
    assert x * R3.zero == R3.zero


def test_modular_reduction():
    x, y = R7.gens()
    assert 5 * x + 4 * x == 2 * x
    assert (x + y) ** 7 == x ** 7 + y ** 7


small_polys = st.builds(
    lambda pairs: R3.from_terms((R3.pack(e), c) for e, c in pairs),
    st.lists(st.tuples(st.tuples(*[st.integers(0, 4)] * 3),
                       st.integers(-50, 50)), max_size=6),
)


@settings(max_examples=150, deadline=None)
@given(small_polys, small_polys, small_polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + (-a) == R3.zero


@settings(max_examples=100, deadline=None)
@given(small_polys, small_polys)
def test_canonical_representation(a, b):
    assert (a + b).terms == (b + a).terms
    assert (a * b).terms == (b * a).terms


def test_homogeneous_products_add_degrees():
    f = random_form(W6, 4, seed=1)
    g = random_form(W6, 6, seed=2)
    assert f.is_homogeneous() and g.is_homogeneous()
    assert (f * g).is_homogeneous()
    assert (f * g).wdeg() == 10


# -- derivatives -------------------------------------------------------------

def test_partial_derivative_basics():
    x, y, z = R3.gens()
    assert (x * x * y).derivative("x") == 2 * x * y
    assert (x ** 7).derivative("x") == 7 * x ** 6
    xx = R7.var("x")
    assert (xx ** 7).derivative("x").is_zero


@settings(max_examples=100, deadline=None)
@given(small_polys, small_polys)
def test_leibniz_rule(a, b):
    for v in ("x", "y", "z"):
        lhs = (a * b).derivative(v)
        rhs = a.derivative(v) * b + a * b.derivative(v)
        assert lhs == rhs


# -- substitution ------------------------------------------------------------

def test_substitute_is_a_homomorphism():
    x, y, z = R3.gens()
    f = x * x + 3 * y * z
    g = y - z
    m = {"x": y + z, "z": x * x}
    assert (f * g).substitute(m) == f.substitute(m) * g.substitute(m)
    assert (f + g).substitute(m) == f.substitute(m) + g.substitute(m)
    assert f.substitute({}) == f


def test_substitute_kills_variable():
    x, y, z = R3.gens()
    f = x * (y + z) + z * z
    assert f.substitute({"x": 0}) == z * z


def test_cover_substitution_preserves_grading():
    cover = Ring(["x", "y", "z", "t", "u1", "v1"], p=32003)
    s = random_form(W6, 6, seed=11)
    u1 = cover.var("u1")
    v1 = cover.var("v1")
    s1 = s.substitute({"u": u1 ** 2, "v": v1 ** 3}, target=cover)
    assert s1.is_homogeneous()
    assert s1.wdeg() == 6


# -- generic forms -----------------------------------------------------------

def test_random_form_counts():
    assert len(random_form(R3, 0, seed=3)) == 1
    assert random_form(R3, 0, seed=3).wdeg() == 0
    p7 = Ring(list("abcdefgh"), p=32003)
    assert len(random_form(p7, 2, seed=0)) == 36
    # frozen count, degree 6 in weights (1,1,1,1,2,3)
    assert len(brute_monomials(W6.weights, 6)) == 155
    assert len(random_form(W6, 6, seed=0)) == 155
    assert len(W6.monomials_of_degree(6)) == 155


def test_random_form_reproducible():
    a = random_form(R3, 3, seed=9)
    b = random_form(R3, 3, seed=9)
    c = random_form(R3, 3, seed=10)
    assert a == b
    assert a != c


def test_random_linear_change_invertible_shape():
    m = random_linear_change(W6, seed=4)
    # weight-1 variables only; images homogeneous linear
    assert set(m) == {"x", "y", "z", "t"}
    for f in m.values():
        assert f.is_homogeneous() and f.wdeg() == 1


# -- matrices ----------------------------------------------------------------

def perm_det(entries, ring):
    n = len(entries)
    total = ring.zero
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = ring.one
        for i in range(n):
            term = term * entries[i][perm[i]]
        total = total + sign * term
    return total


def random_entries(ring, rows, cols, seed):
    return [[random_form(ring, 1, seed=seed * 997 + 31 * i + j)
             for j in range(cols)] for i in range(rows)]


def test_minor_count_3x4():
    m = PolyMatrix(random_entries(R3, 3, 4, seed=1))
    assert len(m.minors(2)) == 18
    assert len(m.minors(3)) == 4


def test_det_matches_permutation_sum():
    for n, seed in ((3, 5), (4, 6)):
        e = random_entries(R3, n, n, seed)
        assert PolyMatrix(e).det() == perm_det(e, R3)


def test_monomial_pattern_minors():
    x, y, z = R3.gens()
    m = PolyMatrix([[x, R3.zero], [R3.zero, y]])
    assert m.det() == x * y
    m2 = PolyMatrix([[x, y], [y, z]])
    assert m2.det() == x * z - y * y


def skew(entries_upper, n, ring):
    rows = [[ring.zero] * n for _ in range(n)]
    it = iter(entries_upper)
    for i in range(n):
        for j in range(i + 1, n):
            e = next(it)
            rows[i][j] = e
            rows[j][i] = -e
    return PolyMatrix(rows)


def test_pfaffian_small():
    a = R3.var("x")
    m = skew([a], 2, R3)
    assert m.pfaffian() == a
    ents = [random_form(R3, 1, seed=s) for s in range(6)]
    m4 = skew(ents, 4, R3)
    want = ents[0] * ents[5] - ents[1] * ents[4] + ents[2] * ents[3]
    assert m4.pfaffian() == want


def test_pfaffian_squares_to_det():
    for n, seed in ((4, 21), (6, 22)):
        ents = [random_form(R3, 1, seed=seed * 100 + i)
                for i in range(n * (n - 1) // 2)]
        m = skew(ents, n, R3)
        pf = m.pfaffian()
        assert pf * pf == m.det()


def test_pfaffians_principal_count():
    ents = [random_form(R3, 1, seed=500 + i) for i in range(15)]
    m = skew(ents, 6, R3)
    assert len(m.pfaffians(4)) == 15
    with pytest.raises(ValueError):
        PolyMatrix([[R3.var("x"), R3.var("y")],
                    [R3.var("y"), R3.zero]]).pfaffians(2)


# -- parsing and printing ----------------------------------------------------

def test_parse_juxtaposed_variables():
    ring = Ring(["x", "z", "t", "u", "v", "w", "p", "q"], p=32003)
    f = ring.parse("p^2-wq")
    p_, q_, w_ = ring.var("p"), ring.var("q"), ring.var("w")
    assert f == p_ * p_ - w_ * q_
    g = ring.parse("tw-2xp+2zp-tp-2zq")
    t_, x_, z_ = ring.var("t"), ring.var("x"), ring.var("z")
    assert g == t_ * w_ - 2 * x_ * p_ + 2 * z_ * p_ - t_ * p_ - 2 * z_ * q_


def test_parse_digit_suffixed_names():
    ring = Ring(["x0", "x1", "x2", "x3", "x4"], p=32003)
    f = ring.parse("x3^2*x0 - 4x1x2x4")
    assert f == (ring.var("x3") ** 2 * ring.var("x0")
                 - 4 * ring.var("x1") * ring.var("x2") * ring.var("x4"))


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        R3.parse("x + qq")
    with pytest.raises(ValueError):
        R3.parse("x + ")
    with pytest.raises(ValueError):
        R3.parse("(x+y)*z")


@settings(max_examples=120, deadline=None)
@given(small_polys)
def test_print_parse_roundtrip(f):
    assert R3.parse(str(f)) == f


def test_ring_header_roundtrip():
    hdr = format_ring_header(W6)
    assert hdr == "ring p=32003 vars=x,y,z,t,u,v weights=1,1,1,1,2,3 order=grevlex"
    ring = parse_ring_header(hdr)
    assert ring == W6


# -- ring conversion ---------------------------------------------------------

def test_convert_between_orders_and_subrings():
    x, y, z = R3.gens()
    f = x * y + z * z

    elim = R3.fronted(["z"])
    g = elim.convert(f)
    assert g.lead_key() == elim.pack((2, 0, 0))
    assert R3.convert(g) == f

    sub = R3.without(["z"])
    h = x * y + x
    assert sub.convert(h) == sub.var("x") * sub.var("y") + sub.var("x")
    with pytest.raises(ValueError):
        sub.convert(f)


def test_extended_ring_blocks():
    ext = R3.extended(["s"])
    assert ext.split == 1
    s = ext.var("s")
    f = ext.convert(R3.var("x") * R3.var("y"))
    assert (s * f).lead_key() > ext.convert(R3.var("x") ** 3).lead_key()


def test_evaluate():
    x, y, z = R3.gens()
    f = x * y + 2 * z
    assert f.evaluate({"x": 2, "y": 3, "z": 1}) == 8
    assert f.evaluate([2, 3, 1]) == 8
