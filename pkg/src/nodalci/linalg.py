"""Dense exact linear algebra mod p on int64 arrays, plus univariate
polynomial utilities used by the zero-dimensional machinery.

Entries stay in [0, p); p = 32003 keeps every intermediate product well
inside int64.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "rref", "rank", "nullspace", "solve", "coeff_matrix",
    "upoly_trim", "upoly_deriv", "upoly_divmod", "upoly_gcd",
    "upoly_squarefree_part", "is_squarefree", "krylov_minpoly",
]


def _as_array(a):
    m = np.array(a, dtype=np.int64)
    if m.ndim == 1:
        m = m.reshape(1, -1)
    return m


def rref(a, p):
    """Reduced row echelon form mod p.  Returns (matrix, pivot columns)."""
    m = _as_array(a) % p
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hit = np.nonzero(m[r:, c])[0]
        if hit.size == 0:
            continue
        i = r + int(hit[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        m[r] = m[r] * pow(int(m[r, c]), -1, p) % p
        other = np.nonzero(m[:, c])[0]
        other = other[other != r]
        if other.size:
            m[other] = (m[other] - np.outer(m[other, c], m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a, p):
    return len(rref(a, p)[1])


def nullspace(a, p):
    """Basis of the right kernel, as rows of the returned matrix."""
    m, pivots = rref(a, p)
    cols = m.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for r, pc in enumerate(pivots):
            basis[k, pc] = (-int(m[r, fc])) % p
    return basis


def solve(a, b, p):
    """One solution of A x = b mod p, or None if inconsistent."""
    m = _as_array(a) % p
    rows, cols = m.shape
    bb = np.array(b, dtype=np.int64).reshape(rows, 1) % p
    aug, pivots = rref(np.hstack([m, bb]), p)
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for r, c in enumerate(pivots):
        x[c] = aug[r, cols]
    return x


def coeff_matrix(polys, key_index, p):
    """Rows are coefficient vectors of the given polynomials with respect to
    the monomial indexing key -> column."""
    m = np.zeros((len(polys), len(key_index)), dtype=np.int64)
    for i, f in enumerate(polys):
        for k, c in f.terms:
            m[i, key_index[k]] = c % p
    return m


# -- univariate polynomials mod p (dense lists, low degree first) ------------

def upoly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def upoly_deriv(a, p):
    return upoly_trim([(i * a[i]) % p for i in range(1, len(a))])


def upoly_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    inv = pow(b[-1], -1, p)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] % p
        if c:
            f = c * inv % p
            q[i] = f
            for j, bj in enumerate(b):
                a[i + j] = (a[i + j] - f * bj) % p
    return upoly_trim(q), upoly_trim([x % p for x in a[:len(b) - 1]])


def upoly_gcd(a, b, p):
    a = upoly_trim([x % p for x in a])
    b = upoly_trim([x % p for x in b])
    while b:
        a, b = b, upoly_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def upoly_squarefree_part(a, p):
    d = upoly_deriv(a, p)
    if not d:
        raise ValueError("inseparable polynomial; prime too small")
    g = upoly_gcd(a, d, p)
    q, r = upoly_divmod(a, g, p)
    if r:
        raise ArithmeticError("gcd did not divide")
    return q


def is_squarefree(a, p):
    d = upoly_deriv(a, p)
    if not d:
        return False
    return len(upoly_gcd(a, d, p)) == 1


def krylov_minpoly(mat, v0, p):
    """Monic minimal polynomial of the matrix restricted to the cyclic
    subspace generated by v0, as a dense list (low degree first)."""
    mat = np.array(mat, dtype=np.int64) % p
    n = mat.shape[0]
    v = np.array(v0, dtype=np.int64).reshape(n) % p
    span = []          # rref rows
    span_piv = []
    coords = []        # expression of each rref row in terms of v_0..v_j
    basis_vecs = []
    vec = v
    j = 0
    while True:
        # reduce vec against current span, tracking the combination
        w = vec.copy()
        comb = np.zeros(j + 1, dtype=np.int64)
        comb[j] = 1
        for row, pivc, crow in zip(span, span_piv, coords):
            f = int(w[pivc])
            if f:
                w = (w - f * row) % p
                comb[:len(crow)] = (comb[:len(crow)] - f * crow) % p
        nz = np.nonzero(w)[0]
        if nz.size == 0:
            # comb gives sum c_i v_i = 0 with c_j = 1: minimal polynomial
            return [int(x) % p for x in comb]
        piv = int(nz[0])
        inv = pow(int(w[piv]), -1, p)
        w = w * inv % p
        comb = comb * inv % p
        span.append(w)
        span_piv.append(piv)
        coords.append(comb)
        basis_vecs.append(vec)
        vec = mat.dot(vec) % p
        j += 1
        if j > n:
            raise ArithmeticError("krylov iteration exceeded dimension")
