"""Multi-domains root systems for the three families.

For every domain a the system carries simple roots alpha_{i,a}, a positive
root set R+_a, and reflections sigma_{i,a}; the reflections are stored as
signed permutations of the coordinate axes, which is exact and fast (every
reflection in these families permutes the +-epsilon basis).

The seven defining axioms of a multi-domains root system can be checked
exhaustively with check_axioms(); a deliberately corrupted system is rejected
with a witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .domains import (
    Domain,
    Family,
    act,
    domain_sort_key,
    domain_str,
    enumerate_domains,
)
from .linalg import rank_exact

Root = tuple[int, ...]
SignedPerm = tuple[int, ...]  # smap[j] = +-(k+1): epsilon_j -> sign * epsilon_k (0-based j, k)


def sp_identity(r: int) -> SignedPerm:
    return tuple(range(1, r + 1))


def sp_compose(f: SignedPerm, g: SignedPerm) -> SignedPerm:
    """Composite f o g (g applied first)."""
    out = []
    for v in g:
        w = f[abs(v) - 1]
        out.append(w if v > 0 else -w)
    return tuple(out)


def sp_invert(f: SignedPerm) -> SignedPerm:
    out = [0] * len(f)
    for j, v in enumerate(f):
        k = abs(v) - 1
        out[k] = (j + 1) if v > 0 else -(j + 1)
    return tuple(out)


def sp_apply(f: SignedPerm, root: Root) -> Root:
    out = [0] * len(root)
    for j, c in enumerate(root):
        if c:
            v = f[j]
            k = abs(v) - 1
            out[k] += c if v > 0 else -c
    return tuple(out)


def reflection_for_root(alpha: Root, r: int) -> SignedPerm:
    """Orthogonal reflection in alpha, for the root shapes of these families."""
    nz = [(i, c) for i, c in enumerate(alpha) if c]
    imgs = list(range(1, r + 1))
    if len(nz) == 1:
        i, _ = nz[0]
        imgs[i] = -(i + 1)
    elif len(nz) == 2:
        (i, ci), (j, cj) = nz
        if abs(ci) != abs(cj):
            raise ValueError(f"unsupported root shape {alpha}")
        if ci * cj < 0:
            imgs[i], imgs[j] = j + 1, i + 1
        else:
            imgs[i], imgs[j] = -(j + 1), -(i + 1)
    else:
        raise ValueError(f"unsupported root shape {alpha}")
    return tuple(imgs)


def _unit(r: int, i: int, c: int = 1) -> Root:
    v = [0] * r
    v[i - 1] = c
    return tuple(v)


@dataclass
class AxiomFailure:
    axiom: int
    description: str


@dataclass
class AxiomReport:
    family: Family
    passed: bool
    failures: list[AxiomFailure] = field(default_factory=list)

    def failed_axioms(self) -> set[int]:
        return {f.axiom for f in self.failures}


class RootSystem:
    """Root data of one family: simple roots, positive roots, reflections."""

    def __init__(self, family: Family):
        self.family = family
        self.domains = enumerate_domains(family)
        self.rank = family.rank
        self.dim = family.space_dim
        self._simple: dict[tuple[int, Domain], Root] = {}
        self._reflection: dict[tuple[int, Domain], SignedPerm] = {}
        self._positive: dict[Domain, frozenset[Root]] = {}
        for a in self.domains:
            self._positive[a] = frozenset(self._build_positive(a))
            for i in range(1, self.rank + 1):
                alpha = self._build_simple(i, a)
                self._simple[(i, a)] = alpha
                self._reflection[(i, a)] = reflection_for_root(alpha, self.dim)
        self._coxeter: dict[tuple[int, int, Domain], int] = {}

    # ---- construction ----

    def _build_positive(self, a: Domain) -> list[Root]:
        fam = self.family
        r = self.dim
        roots: list[Root] = []
        if fam.kind == "A":
            for i in range(1, r + 1):
                for j in range(i + 1, r + 1):
                    v = [0] * r
                    v[i - 1], v[j - 1] = 1, -1
                    roots.append(tuple(v))
            return roots
        for i in range(1, r + 1):
            for j in range(i + 1, r + 1):
                for s in (-1, 1):
                    v = [0] * r
                    v[i - 1], v[j - 1] = 1, s
                    roots.append(tuple(v))
        if fam.kind == "B":
            for i in range(1, r + 1):
                roots.append(_unit(r, i))
        else:
            # R+_a is the N0-cone of pi_a inside R_a; at a C- tagged domain the
            # last simple root is -2*eps_l, so that sign is the positive one.
            p = a.parities
            for k in range(1, r + 1):
                if p[k - 1] == 1:
                    if a.tag == "C-" and k == r:
                        roots.append(_unit(r, k, -2))
                    else:
                        roots.append(_unit(r, k, 2))
        return roots

    def _build_simple(self, i: int, a: Domain) -> Root:
        fam = self.family
        r = self.dim
        l = fam.rank
        if fam.kind == "A":
            v = [0] * r
            v[i - 1], v[i] = 1, -1
            return tuple(v)
        if fam.kind == "B":
            if i <= l - 1:
                v = [0] * r
                v[i - 1], v[i] = 1, -1
                return tuple(v)
            return _unit(r, l)
        tag = a.tag
        if (tag in ("D", "C+") and i <= l - 1) or (tag == "C-" and i <= l - 2):
            v = [0] * r
            v[i - 1], v[i] = 1, -1
            return tuple(v)
        if tag == "D" and i == l:
            v = [0] * r
            v[l - 2], v[l - 1] = 1, 1
            return tuple(v)
        if tag == "C+" and i == l:
            return _unit(r, l, 2)
        if tag == "C-" and i == l - 1:
            return _unit(r, l, -2)
        if tag == "C-" and i == l:
            v = [0] * r
            v[l - 2], v[l - 1] = 1, 1
            return tuple(v)
        raise AssertionError(f"no simple root for ({i}, {a})")

    # ---- queries ----

    def simple_root(self, i: int, a: Domain) -> Root:
        return self._simple[(i, a)]

    def reflection(self, i: int, a: Domain) -> SignedPerm:
        return self._reflection[(i, a)]

    def positive_roots(self, a: Domain) -> frozenset[Root]:
        return self._positive[a]

    def is_root(self, v: Root, a: Domain) -> bool:
        pos = self._positive[a]
        return v in pos or tuple(-c for c in v) in pos

    def coxeter_entry(self, i: int, j: int, a: Domain) -> int:
        """|(N0 alpha_i + N0 alpha_j) cap R_a| (finite for these families)."""
        if i == j:
            raise ValueError("coxeter_entry needs i != j")
        key = (min(i, j), max(i, j), a)
        cached = self._coxeter.get(key)
        if cached is not None:
            return cached
        ai = self._simple[(i, a)]
        aj = self._simple[(j, a)]
        found = set()
        bound = 5
        for c1 in range(bound + 1):
            for c2 in range(bound + 1):
                if c1 == 0 and c2 == 0:
                    continue
                v = tuple(c1 * x + c2 * y for x, y in zip(ai, aj))
                if self.is_root(v, a):
                    found.add(v)
        self._coxeter[key] = len(found)
        return len(found)

    def theta(self, i: int, j: int, a: Domain) -> int:
        """Size of the two-generator orbit, via the alternating-word recursion."""
        if i == j:
            raise ValueError("theta needs i != j")
        fam = self.family
        am, bm = a, a
        for step in range(1, 4 * len(self.domains) + 4):
            am, bm = act(fam, i, bm), act(fam, j, am)
            if am == bm:
                return step
        raise AssertionError("theta recursion did not terminate at desk scale")

    # ---- axiom checking ----

    def check_axioms(self) -> AxiomReport:
        fam = self.family
        failures: list[AxiomFailure] = []

        def fail(axiom: int, msg: str):
            failures.append(AxiomFailure(axiom, msg))

        # (1) transitive involutive action
        seen = {self.domains[0]}
        frontier = [self.domains[0]]
        while frontier:
            nxt = []
            for a in frontier:
                for i in range(1, self.rank + 1):
                    b = act(fam, i, a)
                    if act(fam, i, b) != a:
                        fail(1, f"action not involutive at i={i}, a={domain_str(a)}")
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        if seen != set(self.domains):
            fail(1, "action is not transitive on the domain set")

        for a in self.domains:
            pos = self._positive[a]
            pi = [self._simple[(i, a)] for i in range(1, self.rank + 1)]
            # (2) simple roots lie in R+_a and form a basis of V0
            for i, alpha in enumerate(pi, start=1):
                if alpha not in pos and tuple(-c for c in alpha) not in pos:
                    fail(2, f"alpha_{i} not in R_a at a={domain_str(a)}")
            rows = [[Fraction(c) for c in alpha] for alpha in pi]
            expected_rank = self.rank if fam.kind != "A" else self.dim - 1
            if rank_exact(rows) != expected_rank:
                fail(2, f"simple roots not independent at a={domain_str(a)}")
            # (3) every positive root is a nonnegative integer combination of pi
            for beta in pos:
                if not self._in_nonneg_cone(beta, pi):
                    fail(3, f"{beta} not in N0-cone of pi at a={domain_str(a)}")
            # (4) R alpha cap R_a = {alpha, -alpha}
            for i, alpha in enumerate(pi, start=1):
                for beta in pos:
                    if self._is_rational_multiple(beta, alpha) and beta not in (
                        alpha,
                        tuple(-c for c in alpha),
                    ):
                        fail(4, f"extra multiple {beta} of alpha_{i} at a={domain_str(a)}")
            for i in range(1, self.rank + 1):
                b = act(fam, i, a)
                sig = self._reflection[(i, a)]
                # (5) sigma maps R_a onto R_b, negates alpha_i, shifts the others
                image = {sp_apply(sig, beta) for beta in pos}
                target = set(self._positive[b]) | {
                    tuple(-c for c in beta) for beta in self._positive[b]
                }
                if not image <= target or len(image) != len(pos):
                    fail(5, f"sigma_{i} does not map R_a to R_b at a={domain_str(a)}")
                alpha_ia = self._simple[(i, a)]
                alpha_ib = self._simple[(i, b)]
                if sp_apply(sig, alpha_ia) != tuple(-c for c in alpha_ib):
                    fail(
                        5,
                        f"sigma_{i}(alpha_{i}) != -alpha_{i} across a={domain_str(a)}",
                    )
                for j in range(1, self.rank + 1):
                    if j == i:
                        continue
                    img = sp_apply(sig, self._simple[(j, a)])
                    diff = tuple(
                        x - y for x, y in zip(img, self._simple[(j, b)])
                    )
                    if not self._is_nonneg_multiple(diff, alpha_ib):
                        fail(
                            5,
                            f"sigma_{i}(alpha_{j}) not in alpha_{j} + N0 alpha_{i} "
                            f"at a={domain_str(a)}",
                        )
                # (6) sigma_{i, i>a} sigma_{i, a} = id
                sig_back = self._reflection[(i, b)]
                if sp_compose(sig_back, sig) != sp_identity(self.dim):
                    fail(6, f"sigma_{i} not involutive across a={domain_str(a)}")
                # (7) theta divides the coxeter entry
                for j in range(1, self.rank + 1):
                    if j <= i:
                        continue
                    d = self.coxeter_entry(i, j, a)
                    th = self.theta(i, j, a)
                    if d % th:
                        fail(
                            7,
                            f"theta={th} does not divide m={d} at "
                            f"(i,j)=({i},{j}), a={domain_str(a)}",
                        )
        return AxiomReport(fam, not failures, failures)

    def _in_nonneg_cone(self, beta: Root, pi: list[Root]) -> bool:
        coeffs = self._solve_in_basis(beta, pi)
        if coeffs is None:
            return False
        return all(c.denominator == 1 and c >= 0 for c in coeffs)

    def _solve_in_basis(self, beta: Root, pi: list[Root]) -> list[Fraction] | None:
        # Gaussian solve of sum c_k pi_k = beta
        rows = [[Fraction(alpha[d]) for alpha in pi] + [Fraction(beta[d])] for d in range(self.dim)]
        n = len(pi)
        r = 0
        piv = []
        for c in range(n):
            pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            inv = 1 / rows[r][c]
            rows[r] = [x * inv for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            piv.append(c)
            r += 1
        coeffs = [Fraction(0)] * n
        for i in range(r, len(rows)):
            if rows[i][n]:
                return None
        for i, c in enumerate(piv):
            coeffs[c] = rows[i][n]
        return coeffs

    @staticmethod
    def _is_rational_multiple(beta: Root, alpha: Root) -> bool:
        ratio = None
        for b, a in zip(beta, alpha):
            if a == 0 and b == 0:
                continue
            if a == 0:
                return False
            r = Fraction(b, a)
            if ratio is None:
                ratio = r
            elif r != ratio:
                return False
        return ratio is not None

    @staticmethod
    def _is_nonneg_multiple(diff: Root, alpha: Root) -> bool:
        if all(c == 0 for c in diff):
            return True
        ratio = None
        for d, a in zip(diff, alpha):
            if a == 0 and d == 0:
                continue
            if a == 0:
                return False
            r = Fraction(d, a)
            if ratio is None:
                ratio = r
            elif r != ratio:
                return False
        return ratio is not None and ratio.denominator == 1 and ratio > 0

    def mutated_negated_alpha(self, i: int, a: Domain) -> "RootSystem":
        """Copy with alpha_{i,a} negated; used to exercise the axiom checker."""
        other = RootSystem.__new__(RootSystem)
        other.family = self.family
        other.domains = self.domains
        other.rank = self.rank
        other.dim = self.dim
        other._simple = dict(self._simple)
        other._reflection = dict(self._reflection)
        other._positive = dict(self._positive)
        other._coxeter = {}
        alpha = self._simple[(i, a)]
        neg = tuple(-c for c in alpha)
        other._simple[(i, a)] = neg
        other._reflection[(i, a)] = reflection_for_root(neg, self.dim)
        return other

    # ---- Dynkin diagrams ----

    def dynkin(self, a: Domain) -> "DynkinDiagram":
        fam = self.family
        nodes = []
        for i in range(1, self.rank + 1):
            crossed = act(fam, i, a) != a
            filled = (
                fam.kind == "B"
                and i == self.rank
                and a[self.rank - 1] == 1
            )
            nodes.append(DynkinNode(i, crossed, filled))
        edges = []
        for i in range(1, self.rank + 1):
            for j in range(i + 1, self.rank + 1):
                m = self.coxeter_entry(i, j, a)
                if m > 2:
                    edges.append((i, j, m))
        return DynkinDiagram(a, nodes, edges)

    def orbit_edges(self) -> list[tuple[Domain, Domain, int]]:
        """Edges of the domain-orbit graph, labelled by the moving generator."""
        edges = []
        for a in self.domains:
            for i in range(1, self.rank + 1):
                b = act(self.family, i, a)
                if b != a and domain_sort_key(a) < domain_sort_key(b):
                    edges.append((a, b, i))
        return edges


@dataclass(frozen=True)
class DynkinNode:
    index: int
    crossed: bool
    filled: bool


@dataclass(frozen=True)
class DynkinDiagram:
    domain: Domain
    nodes: list[DynkinNode]
    edges: list[tuple[int, int, int]]

    def to_json(self):
        from .domains import domain_to_json

        return {
            "domain": domain_to_json(self.domain),
            "nodes": [
                {"index": n.index, "cross": n.crossed, "filled": n.filled}
                for n in self.nodes
            ],
            "edges": [{"i": i, "j": j, "m": m} for i, j, m in self.edges],
        }


@lru_cache(maxsize=None)
def root_system(family: Family) -> RootSystem:
    return RootSystem(family)


def dynkin_dot(family: Family) -> str:
    """DOT document: one graph per domain plus the domain-orbit graph."""
    rs = root_system(family)
    lines: list[str] = []
    tag = family.name().replace("(", "_").replace(")", "").replace(",", "_").replace("|", "_")
    for idx, a in enumerate(rs.domains):
        diag = rs.dynkin(a)
        lines.append(f"graph diagram_{idx} {{")
        lines.append(f'  label="{domain_str(a)}";')
        for n in diag.nodes:
            cross = "true" if n.crossed else "false"
            filled = "true" if n.filled else "false"
            lines.append(f'  n{n.index} [label="{n.index}", cross="{cross}", filled="{filled}"];')
        for i, j, m in diag.edges:
            lines.append(f'  n{i} -- n{j} [label="{m}"];')
        lines.append("}")
    lines.append(f"graph orbit_{tag} {{")
    index = {a: k for k, a in enumerate(rs.domains)}
    for a in rs.domains:
        diag = rs.dynkin(a)
        cross = ",".join(str(n.index) for n in diag.nodes if n.crossed)
        filled = ",".join(str(n.index) for n in diag.nodes if n.filled)
        lines.append(
            f'  a{index[a]} [label="{domain_str(a)}", cross="{cross}", filled="{filled}"];'
        )
    for a, b, i in rs.orbit_edges():
        lines.append(f'  a{index[a]} -- a{index[b]} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dynkin_json(family: Family):
    rs = root_system(family)
    from .domains import domain_to_json

    return {
        "schema_version": 1,
        "family": {"kind": family.kind, "m": family.m, "n": family.n},
        "diagrams": [rs.dynkin(a).to_json() for a in rs.domains],
        "orbit_edges": [
            {"a": domain_to_json(a), "b": domain_to_json(b), "generator": i}
            for a, b, i in rs.orbit_edges()
        ],
    }
