"""The Iwahori-Hecke type algebra H_q(W) on the standard basis f(w).

The algebra is realized concretely through left-multiplication operators on
the basis indexed by nonzero groupoid elements; associativity is not assumed
but verified exhaustively at desk scale by the test-suite.  Products work in
either scalar mode: "poly" (Laurent polynomials in q, no division ever
happens) or "eval" (exact rationals at a fixed q0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from .domains import Domain, Family, act, domain_to_json
from .groupoid import CoxeterGroupoid, Element, Word, groupoid_for
from .scalars import LaurentPoly, laurent_to_json, rational_to_string

HeckeScalar = Union[LaurentPoly, Fraction]


class HeckeElement:
    """Finite scalar combination of basis elements f(w); immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[Element, HeckeScalar]] = ()):
        acc: dict[Element, HeckeScalar] = {}
        for w, c in terms:
            if w in acc:
                c = acc[w] + c
            if c:
                acc[w] = c
            elif w in acc:
                del acc[w]
        self._terms = acc

    @classmethod
    def _raw(cls, d: dict) -> "HeckeElement":
        out = cls.__new__(cls)
        out._terms = d
        return out

    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, w: Element) -> HeckeScalar:
        return self._terms.get(w, 0)

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        d = dict(self._terms)
        for w, c in other._terms.items():
            if w in d:
                s = d[w] + c
                if s:
                    d[w] = s
                else:
                    del d[w]
            else:
                d[w] = c
        return HeckeElement._raw(d)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + other.scaled(-1)

    def scaled(self, c) -> "HeckeElement":
        if not c:
            return HeckeElement._raw({})
        return HeckeElement._raw({w: x * c for w, x in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "HeckeElement(0)"
        return "HeckeElement(" + ", ".join(f"{c}*f{w.smap}" for w, c in self._terms.items()) + ")"


@dataclass
class RelationInstance:
    name: str
    base: Domain
    left: tuple[int, ...]
    right: tuple[int, ...]


@dataclass
class PresentationReport:
    family: Family
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


class HeckeAlgebra:
    """H_q(W) for one family, in poly mode (q = LaurentPoly.q()) or eval mode."""

    def __init__(self, family: Family, q: HeckeScalar | None = None):
        self.family = family
        self.q = LaurentPoly.q() if q is None else q
        if isinstance(self.q, LaurentPoly):
            self.mode = "poly"
            self.one: HeckeScalar = LaurentPoly.one()
        else:
            self.q = Fraction(self.q)
            if self.q == 0:
                raise ValueError("eval mode needs q0 != 0")
            self.mode = "eval"
            self.one = Fraction(1)
        self.groupoid: CoxeterGroupoid = groupoid_for(family)
        self.basis: tuple[Element, ...] = self.groupoid.elements()
        self.index: dict[Element, int] = {w: k for k, w in enumerate(self.basis)}
        self._table: dict[tuple[int, int], tuple[tuple[int, HeckeScalar], ...]] | None = None

    @property
    def dimension(self) -> int:
        return len(self.basis)

    # ---- basis elements ----

    def f(self, w: Element) -> HeckeElement:
        return HeckeElement._raw({w: self.one})

    def e(self, a: Domain) -> HeckeElement:
        return self.f(self.groupoid.identity(a))

    def t(self, i: int, a: Domain) -> HeckeElement:
        return self.f(self.groupoid.generator(i, a))

    def unit(self) -> HeckeElement:
        """Sum of all idempotents E_a: the unit of the algebra."""
        return HeckeElement._raw(
            {self.groupoid.identity(a): self.one for a in self.groupoid.roots.domains}
        )

    # ---- left multiplication by generators ----

    def lmul_e(self, a: Domain, x: HeckeElement) -> HeckeElement:
        return HeckeElement._raw({w: c for w, c in x.items() if w.target == a})

    def lmul_t(self, i: int, a: Domain, x: HeckeElement) -> HeckeElement:
        """T_{i,a} x, extended linearly from the basis rules."""
        G = self.groupoid
        q = self.q
        moved = act(self.family, i, a) != a
        gen = G.generator(i, a)
        out: dict[Element, HeckeScalar] = {}

        def put(w, c):
            if w in out:
                s = out[w] + c
                if s:
                    out[w] = s
                else:
                    del out[w]
            else:
                out[w] = c

        for w, c in x.items():
            if w.target != a:
                continue
            sw = G.multiply(gen, w)
            if G.length(sw) == G.length(w) + 1:
                put(sw, c)
            elif moved:
                put(sw, c)
            else:
                put(w, c * (q - 1))
                put(sw, c * q)
        return HeckeElement._raw(out)

    def apply_word(self, word: Word, x: HeckeElement) -> HeckeElement:
        """Left-multiply x by T_{i1} ... T_{im, base} (no source projection)."""
        doms = self.groupoid.word_domains(word)
        for k in range(len(word.letters) - 1, -1, -1):
            x = self.lmul_t(word.letters[k], doms[k], x)
            if x.is_zero:
                break
        return x

    def element_of_word(self, word: Word) -> HeckeElement:
        """The algebra element T_{i1} ... T_{im, base} itself."""
        return self.apply_word(word, self.e(word.base))

    # ---- products ----

    def product(self, x: HeckeElement, y: HeckeElement) -> HeckeElement:
        """Bilinear product; the left factor is decomposed by canonical words."""
        G = self.groupoid
        total = HeckeElement._raw({})
        for u, cu in x.items():
            word = G.canonical_reduced_word(u)
            z = self.lmul_e(u.source, y)
            if z.is_zero:
                continue
            z = self.apply_word(word, z)
            if not z.is_zero:
                total = total + z.scaled(cu)
        return total

    # ---- structure constants ----

    def structure_constants(self) -> dict[tuple[int, int], tuple[tuple[int, HeckeScalar], ...]]:
        """Complete table c^w_{u,v}, keyed by basis indices, sparse rows."""
        if self._table is not None:
            return self._table
        table: dict[tuple[int, int], tuple[tuple[int, HeckeScalar], ...]] = {}
        G = self.groupoid
        for ui, u in enumerate(self.basis):
            word = G.canonical_reduced_word(u)
            src = u.source
            for vi, v in enumerate(self.basis):
                if v.target != src:
                    continue
                z = self.apply_word(word, self.f(v))
                if z.is_zero:
                    continue
                row = tuple(
                    sorted((self.index[w], c) for w, c in z.items())
                )
                table[(ui, vi)] = row
        self._table = table
        return table

    def structure_constants_json(self):
        table = self.structure_constants()
        words = [
            {
                "base": domain_to_json(w.source),
                "letters": list(self.groupoid.canonical_reduced_word(w).letters),
            }
            for w in self.basis
        ]

        def enc(c):
            return laurent_to_json(c) if self.mode == "poly" else rational_to_string(c)

        entries = [
            {
                "u": u,
                "v": v,
                "terms": [{"w": w, "poly": enc(c)} for w, c in row],
            }
            for (u, v), row in sorted(table.items())
        ]
        return {
            "schema_version": 1,
            "family": {"kind": self.family.kind, "m": self.family.m, "n": self.family.n},
            "mode": self.mode,
            "basis": words,
            "entries": entries,
        }

    # ---- presentation ----

    def braid_instances_from_coxeter(self) -> list[RelationInstance]:
        """Braid relation instances derived from the Definition-4 entries."""
        rs = self.groupoid.roots
        out = []
        for a in rs.domains:
            for i in range(1, self.family.rank + 1):
                for j in range(i + 1, self.family.rank + 1):
                    m = rs.coxeter_entry(i, j, a)
                    out.append(self._braid_instance("coxeter", i, j, a, m))
        return out

    @staticmethod
    def _braid_instance(name: str, i: int, j: int, a: Domain, m: int) -> RelationInstance:
        # side ending (rightmost) in i, and the swapped side ending in j
        side_i = tuple((i if t % 2 == 0 else j) for t in range(m))[::-1]
        side_j = tuple((j if t % 2 == 0 else i) for t in range(m))[::-1]
        return RelationInstance(name, a, side_i, side_j)

    def family_braid_instances(self) -> list[RelationInstance]:
        """The family presentation lists, written as word pairs."""
        fam = self.family
        rs = self.groupoid.roots
        l = fam.rank
        out: list[RelationInstance] = []
        if fam.kind == "A":
            for a in rs.domains:
                for i in range(1, l + 1):
                    for j in range(i + 1, l + 1):
                        if j == i + 1:
                            out.append(self._braid_instance("HArel9", i, j, a, 3))
                        else:
                            out.append(self._braid_instance("HArel10", i, j, a, 2))
            return out
        if fam.kind == "B":
            for a in rs.domains:
                if l >= 2:
                    out.append(self._braid_instance("HBrel9", l - 1, l, a, 4))
                for i in range(1, l - 1):
                    out.append(self._braid_instance("HBrel10", i, i + 1, a, 3))
                for i in range(1, l + 1):
                    for j in range(i + 2, l + 1):
                        if (i, j) != (l - 1, l):
                            out.append(self._braid_instance("HBrel11", i, j, a, 2))
            return out
        for a in rs.domains:
            p, tag = a.parities, a.tag
            covered: set[tuple[int, int]] = set()

            def add(name, i, j, m):
                covered.add((i, j))
                out.append(self._braid_instance(name, i, j, a, m))

            if l >= 2:
                if tag in ("C+", "C-") and p[l - 2] == p[l - 1]:
                    add("HCDrel9", l - 1, l, 4)
                elif tag == "D" and p[l - 2] == p[l - 1]:
                    add("HCDrel10", l - 1, l, 2)
                else:
                    add("HCDrel11", l - 1, l, 3)
            for i in range(1, l - 2):
                add("HCDrel12", i, i + 1, 3)
            if l >= 3:
                if tag == "C+":
                    add("HCDrel13", l - 2, l - 1, 3)
                if tag == "C-":
                    add("HCDrel14", l - 2, l, 3)
                if tag == "D":
                    add("HCDrel15", l - 2, l - 1, 3)
                    add("HCDrel15", l - 2, l, 3)
            for i in range(1, l + 1):
                for j in range(i + 1, l + 1):
                    if (i, j) not in covered:
                        add("HCDrel16", i, j, 2)
        return out

    def verify_presentation(self) -> PresentationReport:
        """Check every defining relation instance as a HeckeElement identity."""
        report = PresentationReport(self.family)
        G = self.groupoid
        rs = G.roots
        fam = self.family

        def check(ok: bool, msg: str):
            report.checked += 1
            if not ok:
                report.failures.append(msg)

        domains = rs.domains
        # idempotent relations
        for a in domains:
            ea = self.e(a)
            check(self.product(ea, ea) == ea, f"E_a^2 != E_a at {a}")
            for b in domains:
                if b != a:
                    check(
                        self.product(ea, self.e(b)).is_zero,
                        f"E_a E_b != 0 at {a}, {b}",
                    )
        # sum of idempotents is the unit
        unit = self.unit()
        for w in self.basis:
            fw = self.f(w)
            check(
                self.product(unit, fw) == fw and self.product(fw, unit) == fw,
                f"sum of E_a is not the unit on {w}",
            )
        # generator relations
        for a in domains:
            for i in range(1, fam.rank + 1):
                b = act(fam, i, a)
                tia = self.t(i, a)
                check(
                    self.product(self.product(self.e(b), tia), self.e(a)) == tia,
                    f"E_(i>a) T_(i,a) E_a != T_(i,a) at i={i}, a={a}",
                )
                if b == a:
                    lhs = self.product(tia, tia)
                    rhs = self.t(i, a).scaled(self.q - 1) + self.e(a).scaled(self.q)
                    check(
                        lhs == rhs,
                        f"quadratic relation fails at i={i}, a={a}",
                    )
                else:
                    check(
                        self.product(self.t(i, b), tia) == self.e(a),
                        f"isotropic relation T_(i,i>a) T_(i,a) != E_a at i={i}, a={a}",
                    )
        # braid relations: family lists, and agreement with the coxeter-derived set
        fam_list = self.family_braid_instances()
        cox_list = self.braid_instances_from_coxeter()

        def key(inst: RelationInstance):
            return (inst.base, min(inst.left, inst.right), max(inst.left, inst.right))

        fam_keys = {key(r) for r in fam_list}
        cox_keys = {key(r) for r in cox_list}
        check(
            fam_keys == cox_keys,
            "family relation list differs from the Definition-4 braid list: "
            f"only-family={sorted(fam_keys - cox_keys)[:3]} "
            f"only-coxeter={sorted(cox_keys - fam_keys)[:3]}",
        )
        for inst in fam_list + cox_list:
            lhs = self.element_of_word(Word(inst.base, inst.left))
            rhs = self.element_of_word(Word(inst.base, inst.right))
            check(
                lhs == rhs,
                f"{inst.name} fails at base={inst.base}, {inst.left} vs {inst.right}",
            )
        return report


@lru_cache(maxsize=None)
def hecke_poly(family: Family) -> HeckeAlgebra:
    return HeckeAlgebra(family, LaurentPoly.q())


def hecke_eval(family: Family, q0: Fraction) -> HeckeAlgebra:
    return HeckeAlgebra(family, Fraction(q0))
