"""Exact linear algebra over Q: dense matrix helpers, fraction-free rank,
incremental echelon forms, nullspaces, and minimal polynomials.

Matrices are lists of lists of Fraction.  Rank computations scale rows to
integers and run fraction-free eliminations so intermediate growth stays
bounded; everything is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[Fraction]]


def mat_zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def mat_identity(n: int) -> Matrix:
    out = mat_zeros(n, n)
    for i in range(n):
        out[i][i] = Fraction(1)
    return out


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = mat_zeros(n, m)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        oi[j] += c * bt[j]
    return out

def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, c: Fraction) -> Matrix:
    return [[c * x for x in row] for row in a]


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return a == b


def mat_is_zero(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def kron(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = len(a), len(a[0]) if a else 0
    rb, cb = len(b), len(b[0]) if b else 0
    out = mat_zeros(ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            c = a[i][j]
            if c:
                for k in range(rb):
                    for l in range(cb):
                        if b[k][l]:
                            out[i * rb + k][j * cb + l] = c * b[k][l]
    return out


def flatten(a: Matrix) -> list[Fraction]:
    return [x for row in a for x in row]


def _scale_to_int(vec: Sequence[Fraction]) -> list[int]:
    lcm = 1
    for x in vec:
        d = x.denominator
        lcm = lcm * d // gcd(lcm, d)
    out = [int(x * lcm) for x in vec]
    g = 0
    for v in out:
        g = gcd(g, abs(v))
    if g > 1:
        out = [v // g for v in out]
    return out


class IntEchelon:
    """Incremental row echelon over Z (projectively), for rank and span tests.

    Rows are kept integer and gcd-reduced; insert() returns True when the
    vector enlarged the span.
    """

    def __init__(self, width: int):
        self.width = width
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Sequence[Fraction]) -> list[int]:
        v = _scale_to_int(vec)
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                a, b = row[p], v[p]
                g = gcd(abs(a), abs(b))
                ca, cb = a // g, b // g
                v = [ca * x - cb * y for x, y in zip(v, row)]
                # gcd-reduce after each elimination to keep entries bounded
                g = 0
                for x in v:
                    g = gcd(g, abs(x))
                    if g == 1:
                        break
                if g > 1:
                    v = [x // g for x in v]
        return v

    def insert(self, vec: Sequence[Fraction]) -> bool:
        v = self.reduce(vec)
        for p, x in enumerate(v):
            if x:
                if x < 0:
                    v = [-y for y in v]
                self.rows.append(v)
                self.pivots.append(p)
                return True
        return False

    def contains(self, vec: Sequence[Fraction]) -> bool:
        return all(x == 0 for x in self.reduce(vec))


def rank_exact(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows:
        return 0
    ech = IntEchelon(len(rows[0]))
    for r in rows:
        ech.insert(r)
    return ech.rank


def rref(mat: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over Q; returns (rref, pivot columns)."""
    a = [row[:] for row in mat]
    rows = len(a)
    cols = len(a[0]) if a else 0
    piv_cols: list[int] = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if a[i][c]:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
        if r == rows:
            break
    return a, piv_cols


def nullspace(mat: Matrix) -> list[list[Fraction]]:
    """Basis of the right kernel {x : mat @ x = 0}."""
    if not mat:
        return []
    cols = len(mat[0])
    red, piv = rref(mat)
    piv_set = set(piv)
    free = [c for c in range(cols) if c not in piv_set]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * cols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(piv):
            vec[pc] = -red[r][fc]
        basis.append(vec)
    return basis


def solve_coords(basis_rows: Matrix, vec: list[Fraction]) -> list[Fraction] | None:
    """Coordinates of vec in the row span of basis_rows, or None."""
    res = solve_coords_multi(basis_rows, [vec])
    return res[0]


def solve_coords_multi(
    basis_rows: Matrix, vecs: list[list[Fraction]]
) -> list[list[Fraction] | None]:
    """Coordinates of each vec in the row span of basis_rows (one elimination)."""
    if not basis_rows:
        return [([] if not any(v) else None) for v in vecs]
    k = len(basis_rows)
    cols = len(basis_rows[0])
    aug = [
        [basis_rows[r][c] for r in range(k)] + [v[c] for v in vecs]
        for c in range(cols)
    ]
    red, piv = rref(aug)
    out: list[list[Fraction] | None] = []
    for t in range(len(vecs)):
        coords = [Fraction(0)] * k
        ok = True
        for r, pc in enumerate(piv):
            if pc >= k:
                break
            coords[pc] = red[r][k + t]
        # consistency: rows whose pivot is beyond the basis columns must not hit vec t
        for r in range(len(red)):
            if all(red[r][c] == 0 for c in range(k)) and red[r][k + t] != 0:
                ok = False
                break
        out.append(coords if ok else None)
    return out


def mat_apply_poly(mat: Matrix, coeffs: Sequence[Fraction]) -> Matrix:
    """coeffs[0] + coeffs[1] A + ... evaluated at A = mat (ascending)."""
    n = len(mat)
    out = mat_zeros(n, n)
    power = mat_identity(n)
    for k, c in enumerate(coeffs):
        if c:
            for i in range(n):
                for j in range(n):
                    out[i][j] += c * power[i][j]
        if k + 1 < len(coeffs):
            power = mat_mul(power, mat)
    return out


def commutant(mats: list[Matrix], dim: int) -> list[Matrix]:
    """Basis of the algebra {X : Xg = gX for every g in mats}."""
    if not mats:
        basis = []
        for i in range(dim):
            for j in range(dim):
                m = mat_zeros(dim, dim)
                m[i][j] = Fraction(1)
                basis.append(m)
        return basis
    rows: Matrix = []
    for g in mats:
        for i in range(dim):
            for j in range(dim):
                row = [Fraction(0)] * (dim * dim)
                for k in range(dim):
                    row[k * dim + j] += g[i][k]
                    row[i * dim + k] -= g[k][j]
                rows.append(row)
    basis_vecs = nullspace(rows)
    out = []
    for vec in basis_vecs:
        out.append([[vec[i * dim + j] for j in range(dim)] for i in range(dim)])
    return out


def minimal_polynomial(mat: Matrix) -> list[Fraction]:
    """Monic minimal polynomial of mat, ascending coefficients."""
    n = len(mat)
    powers: list[list[Fraction]] = [flatten(mat_identity(n))]
    cur = mat_identity(n)
    ech = IntEchelon(n * n)
    ech.insert(powers[0])
    while True:
        cur = mat_mul(cur, mat)
        flat = flatten(cur)
        if ech.contains(flat):
            powers.append(flat)
            break
        ech.insert(flat)
        powers.append(flat)
    # highest power is dependent on the previous ones: solve for coefficients
    k = len(powers) - 1
    coords = solve_coords(powers[:k], powers[k])
    assert coords is not None
    coeffs = [-c for c in coords] + [Fraction(1)]
    return coeffs


def mat_vec(mat: Matrix, vec: list[Fraction]) -> list[Fraction]:
    return [
        sum(row[c] * vec[c] for c in range(len(vec)) if vec[c]) for row in mat
    ]


def local_minimal_polynomial(mat: Matrix, vec: list[Fraction]) -> list[Fraction]:
    """Monic minimal polynomial of mat on the cyclic subspace of vec
    (a divisor of the minimal polynomial; equal to it for generic vec)."""
    basis: list[list[Fraction]] = []
    cur = vec
    while True:
        if basis:
            coords = solve_coords(basis, cur)
        else:
            coords = [] if not any(cur) else None
        if coords is not None:
            return [-c for c in coords] + [Fraction(1)]
        basis.append(cur)
        cur = mat_vec(mat, cur)
