"""Irreducible representations of the classical Iwahori-Hecke algebras
H_q(S_n), H_q(W(B_n)), H_q(W(D_n)) with exact rational matrices.

Types A and B are built in seminormal form on standard (bi)tableaux; type D
restricts the two-parameter type-B construction at its first parameter set to
1 and splits the symmetric labels on an invariant subspace.  An independent
oracle, split_regular_module, decomposes the right regular module by minimal
polynomial kernels of random left multiplications; the two routes are
compared up to equivalence in the test-suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import (
    Matrix,
    commutant,
    local_minimal_polynomial,
    mat_apply_poly,
    mat_identity,
    mat_mul,
    minimal_polynomial,
    nullspace,
    solve_coords,
)
from .tableaux import (
    BiTableau,
    bipartitions,
    bitab_position,
    entry_position,
    is_standard,
    partitions,
    standard_bitableaux,
    standard_tableaux,
    swap_entries,
)
from .weylgroups import (
    WeylType,
    canonical_words,
    hecke_regular_matrices,
    is_semisimple,
)


@dataclass
class Irrep:
    """One irreducible representation: a label, its dimension, and one exact
    matrix per algebra generator (indices 1..rank, special node last for B/D)."""

    label: object
    dim: int
    q0: Fraction
    gens: tuple[Matrix, ...]


@dataclass
class SplitComponent:
    irrep: Irrep
    multiplicity: int


def coxeter_matrix(wt: WeylType) -> dict[tuple[int, int], int]:
    """Braid exponents m(i,j) of the generators, special-node-last convention."""
    n = wt.n
    rank = n - 1 if wt.kind == "A" else (n if n else 0)
    if wt.kind == "D" and n == 1:
        rank = 0
    m: dict[tuple[int, int], int] = {}
    for i in range(1, rank + 1):
        for j in range(i + 1, rank + 1):
            m[(i, j)] = 2
    if wt.kind == "A":
        for i in range(1, rank):
            m[(i, i + 1)] = 3
    elif wt.kind == "B":
        for i in range(1, rank - 1):
            m[(i, i + 1)] = 3
        if rank >= 2:
            m[(rank - 1, rank)] = 4
    else:
        for i in range(1, rank - 1):
            m[(i, i + 1)] = 3
        if rank >= 3:
            m[(rank - 2, rank)] = 3
    return m


def _qpow(q0: Fraction, e: int) -> Fraction:
    return q0**e


def _block_coeff(ct_lo: Fraction, ct_hi: Fraction, q0: Fraction) -> Fraction:
    """Diagonal seminormal coefficient (q-1) ct(i+1) / (ct(i+1) - ct(i))."""
    return (q0 - 1) * ct_hi / (ct_hi - ct_lo)


def _symmetric_seminormal(lam, q0: Fraction) -> tuple[int, tuple[Matrix, ...]]:
    """Seminormal matrices of H_q(S_n) on standard tableaux of shape lam."""
    n = sum(lam)
    tabs = standard_tableaux(lam)
    index = {t: k for k, t in enumerate(tabs)}
    dim = len(tabs)
    gens: list[Matrix] = []
    for i in range(1, n):
        mat = [[Fraction(0)] * dim for _ in range(dim)]
        for t in tabs:
            col = index[t]
            ri, ci = entry_position(t, i)
            rj, cj = entry_position(t, i + 1)
            if ri == rj:
                mat[col][col] = q0
                continue
            if ci == cj:
                mat[col][col] = Fraction(-1)
                continue
            ct_i = _qpow(q0, ci - ri)
            ct_j = _qpow(q0, cj - rj)
            a = _block_coeff(ct_i, ct_j, q0)
            t2 = tuple(
                tuple(i + 1 if v == i else i if v == i + 1 else v for v in row)
                for row in t
            )
            assert is_standard(t2)
            mat[col][col] = a
            mat[index[t2]][col] = 1 + a
        gens.append(mat)
    return dim, tuple(gens)


def _bitab_content(bt: BiTableau, k: int, Q: Fraction, q0: Fraction) -> Fraction:
    comp, r, c = bitab_position(bt, k)
    base = _qpow(q0, c - r)
    return Q * base if comp == 0 else -base


def _type_b_seminormal(
    pair, Q: Fraction, q0: Fraction
) -> tuple[int, tuple[Matrix, ...]]:
    """Two-parameter seminormal matrices on standard bitableaux of (lam, mu).

    Returns generators in special-first order u_0, u_1, ..., u_{n-1} where u_0
    satisfies (u_0 - Q)(u_0 + 1) = 0 and acts on entry 1, and u_i swaps the
    entries i, i+1.
    """
    n = sum(pair[0]) + sum(pair[1])
    if n == 0:
        return 1, ()
    tabs = standard_bitableaux(pair)
    index = {t: k for k, t in enumerate(tabs)}
    dim = len(tabs)
    u0 = [[Fraction(0)] * dim for _ in range(dim)]
    for t in tabs:
        comp, _, _ = bitab_position(t, 1)
        u0[index[t]][index[t]] = Q if comp == 0 else Fraction(-1)
    gens: list[Matrix] = [u0]
    for i in range(1, n):
        mat = [[Fraction(0)] * dim for _ in range(dim)]
        for t in tabs:
            col = index[t]
            ci = bitab_position(t, i)
            cj = bitab_position(t, i + 1)
            if ci[0] == cj[0] and ci[1] == cj[1]:
                mat[col][col] = q0
                continue
            if ci[0] == cj[0] and ci[2] == cj[2]:
                mat[col][col] = Fraction(-1)
                continue
            ct_i = _bitab_content(t, i, Q, q0)
            ct_j = _bitab_content(t, i + 1, Q, q0)
            a = _block_coeff(ct_i, ct_j, q0)
            t2 = swap_entries(t, i, i + 1)
            assert is_standard(t2[0]) and is_standard(t2[1])
            mat[col][col] = a
            mat[index[t2]][col] = 1 + a
        gens.append(mat)
    return dim, tuple(gens)


def _special_last_order(gens_special_first: Sequence[Matrix]) -> tuple[Matrix, ...]:
    """Relabel u_0,...,u_{n-1} into the package convention T_1..T_n, where the
    special generator sits at the last index (sign flip of the last coordinate)."""
    if not gens_special_first:
        return ()
    return tuple(list(gens_special_first[1:])[::-1] + [gens_special_first[0]])


def irreps(wt: WeylType, q0: Fraction) -> list[Irrep]:
    """A complete set of pairwise non-equivalent irreducibles at generic q0."""
    q0 = Fraction(q0)
    if not is_semisimple(wt, q0):
        raise ValueError(f"H_q({wt.name()}) is not semisimple at q0 = {q0}")
    out: list[Irrep] = []
    if wt.kind == "A":
        for lam in partitions(wt.n):
            dim, gens = _symmetric_seminormal(lam, q0)
            out.append(Irrep(lam, dim, q0, gens))
        return out
    if wt.kind == "B":
        for pair in bipartitions(wt.n):
            dim, gens = _type_b_seminormal(pair, q0, q0)
            out.append(Irrep(pair, dim, q0, _special_last_order(gens)))
        return out
    return _type_d_irreps(wt.n, q0)


def _type_d_gens(pair, q0: Fraction) -> tuple[int, tuple[Matrix, ...]]:
    """W(D_n) generator matrices on the (lam, mu) bitableau module at Q = 1."""
    n = sum(pair[0]) + sum(pair[1])
    dim, special_first = _type_b_seminormal(pair, Fraction(1), q0)
    b = _special_last_order(special_first)  # B_n generators T_1..T_n at Q = 1
    u = b[n - 1]
    dn = mat_mul(mat_mul(u, b[n - 2]), u)
    return dim, tuple(list(b[: n - 1]) + [dn])


def _type_d_irreps(n: int, q0: Fraction) -> list[Irrep]:
    if n == 0:
        return [Irrep((((), ()), ""), 1, q0, ())]
    if n == 1:
        return [Irrep((((1,), ()), ""), 1, q0, ())]
    out: list[Irrep] = []
    seen_pairs = set()
    for pair in bipartitions(n):
        lam, mu = pair
        if (mu, lam) in seen_pairs:
            continue
        seen_pairs.add(pair)
        if lam != mu:
            dim, gens = _type_d_gens(pair, q0)
            out.append(Irrep((pair, ""), dim, q0, gens))
        else:
            dim, gens = _type_d_gens(pair, q0)
            for tag, (subdim, subgens) in zip("+-", _split_in_two(gens, dim, q0)):
                out.append(Irrep((pair, tag), subdim, q0, subgens))
    return out


def _split_in_two(gens: Sequence[Matrix], dim: int, q0: Fraction):
    """Split a module with two-dimensional endomorphism ring into its halves."""
    comm = commutant(list(gens), dim)
    if len(comm) != 2:
        raise RuntimeError(f"expected a 2-dimensional commutant, got {len(comm)}")
    def non_scalar(c):
        off = any(c[i][j] for i in range(dim) for j in range(dim) if i != j)
        return off or len({c[i][i] for i in range(dim)}) > 1

    phi = next(c for c in comm if non_scalar(c))
    mp = minimal_polynomial(phi)
    if len(mp) != 3:
        raise RuntimeError("splitting endomorphism is scalar")
    # rational roots: x^2 + bx + c with the two halves non-equivalent
    b, c = mp[1], mp[0]
    disc = b * b - 4 * c
    root = _fraction_sqrt(disc)
    if root is None:
        raise RuntimeError("splitting eigenvalues are irrational")
    r1 = (-b + root) / 2
    r2 = (-b - root) / 2
    halves = []
    for r in sorted((r1, r2)):
        shifted = [[phi[i][j] - (r if i == j else 0) for j in range(dim)] for i in range(dim)]
        basis = nullspace(shifted)
        halves.append(_restrict(gens, basis))
    return halves


def _fraction_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    from math import isqrt

    rn, rd = isqrt(x.numerator), isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def _restrict(gens: Sequence[Matrix], basis: list[list[Fraction]]):
    """Restrict operators to the column span of the given basis vectors."""
    from .linalg import mat_vec, solve_coords_multi

    k = len(basis)
    rows = basis  # basis vectors as rows
    out = []
    for g in gens:
        images = [mat_vec(g, rows[j]) for j in range(k)]
        coords = solve_coords_multi(rows, images)
        mat = [[Fraction(0)] * k for _ in range(k)]
        for j in range(k):
            cj = coords[j]
            assert cj is not None, "subspace is not invariant"
            for i in range(k):
                mat[i][j] = cj[i]
        out.append(mat)
    return k, tuple(out)


# ---- verification helpers ----


def verify_irrep_relations(wt: WeylType, rep: Irrep) -> bool:
    """Quadratic plus braid relations, matrix-exactly."""
    q0 = rep.q0
    n = rep.dim
    ident = mat_identity(n)
    for g in rep.gens:
        lhs = mat_mul(g, g)
        rhs = [
            [
                (q0 - 1) * g[i][j] + (q0 if i == j else 0)
                for j in range(n)
            ]
            for i in range(n)
        ]
        if lhs != rhs:
            return False
    cm = coxeter_matrix(wt)
    for (i, j), m in cm.items():
        a, b = rep.gens[i - 1], rep.gens[j - 1]
        x, y = ident, ident
        for t in range(m):
            x = mat_mul(x, a if t % 2 == 0 else b)
            y = mat_mul(y, b if t % 2 == 0 else a)
        if x != y:
            return False
    return True


def words_up_to(rank: int, maxlen: int):
    out = [()]
    layer = [()]
    for _ in range(maxlen):
        nxt = []
        for w in layer:
            for i in range(rank):
                nxt.append(w + (i,))
        out.extend(nxt)
        layer = nxt
    return out


def trace_vector(rep: Irrep, words) -> tuple[Fraction, ...]:
    traces = []
    for w in words:
        m = mat_identity(rep.dim)
        for i in w:
            m = mat_mul(m, rep.gens[i])
        traces.append(sum(m[k][k] for k in range(rep.dim)))
    return tuple(traces)


def pairwise_distinct_traces(reps: list[Irrep], rank: int, maxlen: int = 2) -> bool:
    """Distinguish representations by trace vectors, extending the word length
    on collision; False only if separation fails outright."""
    limit = max(maxlen, 1)
    while limit <= 6:
        words = words_up_to(rank, limit)
        vecs = [(rep.dim, trace_vector(rep, words)) for rep in reps]
        if len(set(vecs)) == len(vecs):
            return True
        limit += 1
    return False


def character_on_group(wt: WeylType, rep: Irrep) -> tuple[Fraction, ...]:
    """Traces over one fixed reduced word per group element; a complete
    equivalence invariant for semisimple specializations."""
    words = canonical_words(wt)
    order = sorted(words.values())
    out = []
    for w in order:
        m = mat_identity(rep.dim)
        for i in w:
            m = mat_mul(m, rep.gens[i])
        out.append(sum(m[k][k] for k in range(rep.dim)))
    return tuple(out)


# ---- the regular-module splitting oracle ----


def split_regular_module(
    left_mults: Sequence[Matrix],
    right_mults: Sequence[Matrix],
    q0: Fraction,
    seed: int = 0,
    max_retries: int = 8,
) -> list[SplitComponent]:
    """Decompose the right regular module into irreducibles.

    left_mults/right_mults are the generator multiplication matrices on the
    regular module.  Splitting uses kernels of minimal-polynomial factors of a
    random left multiplication (these commute with the right action, so the
    kernels are submodules), then isolates one irreducible inside each piece
    via generator eigenspace slices; classes are merged by trace equality.
    Raises RuntimeError when the random-element budget is exhausted.
    """
    q0 = Fraction(q0)
    if not left_mults:
        triv = Irrep("trivial", 1, q0, ())
        return [SplitComponent(triv, 1)]
    dim = len(left_mults[0])
    rng = random.Random(seed)
    last_error: Exception | None = None
    for _ in range(max_retries):
        try:
            return _split_once(left_mults, right_mults, q0, rng, dim)
        except _RetrySplit as exc:
            last_error = exc
    raise RuntimeError(f"splitting budget exceeded: {last_error}")


class _RetrySplit(RuntimeError):
    pass


def _random_left_element(left_mults, rng, dim) -> Matrix:
    out = mat_identity(dim)
    scale = rng.randint(1, 5)
    out = [[Fraction(scale) * x for x in row] for row in out]
    for _ in range(2 * len(left_mults) + 2):
        word_len = rng.randint(1, 3)
        m = mat_identity(dim)
        for _ in range(word_len):
            m = mat_mul(m, left_mults[rng.randrange(len(left_mults))])
        c = Fraction(rng.randint(-4, 4))
        if not c:
            continue
        out = [[a + c * b for a, b in zip(ra, rb)] for ra, rb in zip(out, m)]
    return out


def _algebra_word_basis(mats, dim) -> tuple[list[tuple[int, ...]], list[Matrix]]:
    """Words whose products span the image algebra of the generators, found by
    closure with frontier pruning, plus the products themselves.  Traces over
    these words are a complete equivalence invariant for semisimple modules."""
    from .linalg import IntEchelon, flatten

    ident = mat_identity(dim)
    ech = IntEchelon(dim * dim)
    ech.insert(flatten(ident))
    words: list[tuple[int, ...]] = [()]
    prods: list[Matrix] = [ident]
    frontier: list[tuple[tuple[int, ...], Matrix]] = [((), ident)]
    while frontier:
        nxt = []
        for w, m in frontier:
            for gi, g in enumerate(mats):
                m2 = mat_mul(m, g)
                if ech.insert(flatten(m2)):
                    w2 = w + (gi,)
                    words.append(w2)
                    prods.append(m2)
                    nxt.append((w2, m2))
        frontier = nxt
    return words, prods


def _split_once(left_mults, right_mults, q0, rng, dim) -> list[SplitComponent]:
    import sympy

    lb = _random_left_element(left_mults, rng, dim)
    probe = [Fraction(rng.randint(-9, 9)) for _ in range(dim)]
    mp = local_minimal_polynomial(lb, probe)
    x = sympy.Symbol("x")
    poly = sympy.Poly(
        [sympy.Rational(c.numerator, c.denominator) for c in reversed(mp)], x
    )
    _, factors = poly.factor_list()
    pieces: list[list[list[Fraction]]] = []
    for fac, mult in factors:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(fac.all_coeffs())]
        g = mat_apply_poly(lb, coeffs)
        power = g
        for _ in range(mult - 1):
            power = mat_mul(power, g)
        kernel = nullspace(power)
        if kernel:
            pieces.append(kernel)
    if sum(len(p) for p in pieces) != dim:
        # the probe vector missed part of the spectrum
        raise _RetrySplit("primary components do not span the module")
    words, prods = _algebra_word_basis(right_mults, dim)
    # collect pairwise inequivalent irreducibles from all pieces
    classes: dict[tuple, Irrep] = {}
    for basis in pieces:
        for rep in _extract_irreducibles(basis, right_mults, q0, rng):
            key = (rep.dim, trace_vector(rep, words))
            classes.setdefault(key, rep)
    if sum(rep.dim**2 for rep in classes.values()) != dim:
        raise _RetrySplit(
            "extracted classes are incomplete "
            f"(sum of squares {sum(r.dim ** 2 for r in classes.values())} != {dim})"
        )
    # multiplicities from the exact character system against the regular trace
    keys = sorted(classes)
    reg_trace = [sum(m[k][k] for k in range(dim)) for m in prods]
    char_rows = [list(key[1]) for key in keys]
    mults = solve_coords(char_rows, reg_trace)
    if mults is None or any(c.denominator != 1 or c <= 0 for c in mults):
        raise _RetrySplit("character system has no positive integer solution")
    comps = []
    for key, mult in zip(keys, mults):
        comps.append(SplitComponent(classes[key], int(mult)))
    if sum(c.irrep.dim * c.multiplicity for c in comps) != dim:
        raise _RetrySplit("component dimensions do not add up")
    comps.sort(key=lambda c: (c.irrep.dim, c.multiplicity))
    for idx, comp in enumerate(comps):
        comp.irrep.label = ("split", idx)
    return comps


def _is_irreducible_split(gens: Sequence[Matrix], dim: int) -> bool:
    """Burnside test: the image algebra spans the full matrix algebra."""
    if dim == 1:
        return True
    if not gens:
        return False
    _, prods = _algebra_word_basis(list(gens), dim)
    return len(prods) == dim * dim


def _extract_irreducibles(basis, right_mults, q0, rng) -> list[Irrep]:
    """Irreducible submodules found inside the span of the basis vectors.

    Generator eigenspace slices are spun up from random vectors; candidates
    passing the Burnside irreducibility test are kept.  At least one find is
    reported or the caller retries with a fresh random element.
    """
    k = len(basis)
    restricted = _restrict(right_mults, basis)[1]
    if not restricted:
        return [Irrep(("piece",), 1, q0, ())] if k else []
    slices: list[list[list[Fraction]]] = []
    for g in restricted:
        for ev in (q0, Fraction(-1)):
            shifted = [
                [g[i][j] - (ev if i == j else 0) for j in range(k)] for i in range(k)
            ]
            sl = nullspace(shifted)
            if sl:
                slices.append(sl)
    slices.sort(key=len)
    slices.append([
        [Fraction(rng.randint(-3, 3)) for _ in range(k)] for _ in range(3)
    ])
    found: list[Irrep] = []
    seen_dims_spans: set = set()
    for sl in slices:
        for _ in range(3):
            coeffs = [Fraction(rng.randint(-3, 3)) for _ in sl]
            v = [
                sum(c * row[idx] for c, row in zip(coeffs, sl))
                for idx in range(k)
            ]
            if not any(v):
                continue
            sub = _spin_up(v, restricted)
            signature = (len(sub), tuple(sorted(tuple(r) for r in sub)))
            if signature in seen_dims_spans:
                break
            seen_dims_spans.add(signature)
            subdim, subgens = _restrict(restricted, sub)
            if _is_irreducible_split(subgens, subdim):
                found.append(Irrep(("piece",), subdim, q0, subgens))
            break
    if not found:
        raise _RetrySplit("no irreducible slice found")
    return found


def _spin_up(v, mats) -> list[list[Fraction]]:
    """Smallest submodule containing v, as an explicit basis."""
    from .linalg import IntEchelon, mat_vec

    if not any(v):
        return []
    ech = IntEchelon(len(v))
    ech.insert(v)
    basis = [list(v)]
    frontier = [v]
    while frontier:
        nxt = []
        for vec in frontier:
            for m in mats:
                img = mat_vec(m, vec)
                if ech.insert(img):
                    basis.append(img)
                    nxt.append(img)
        frontier = nxt
    return basis


def split_regular_weyl(wt: WeylType, q0: Fraction, seed: int = 0) -> list[SplitComponent]:
    """The oracle applied to a classical Hecke algebra's regular module."""
    lefts, rights = hecke_regular_matrices(wt, Fraction(q0))
    if not lefts:
        triv = Irrep("trivial", 1, Fraction(q0), ())
        return [SplitComponent(triv, 1)]
    return split_regular_module(lefts, rights, q0, seed=seed)
