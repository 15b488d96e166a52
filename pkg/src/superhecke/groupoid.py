"""Coxeter groupoids through their faithful signed-permutation representation.

An element is the triple (source domain, target domain, signed permutation);
the representation is faithful, so equality of triples is equality in the
groupoid and multiplication is composition when the domains match, the zero
element otherwise.  Length, descents, reduced words, and the braid-move
machinery all reduce to exact root bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .domains import Domain, Family, act, domain_sort_key
from .roots import (
    RootSystem,
    SignedPerm,
    root_system,
    sp_apply,
    sp_compose,
    sp_identity,
    sp_invert,
)


class Element(NamedTuple):
    source: Domain
    target: Domain
    smap: SignedPerm


class _Zero:
    """The zero element of the groupoid semigroup (absorbing)."""

    __slots__ = ()

    def __repr__(self):
        return "ZERO"

    def __bool__(self):
        return False


ZERO = _Zero()


@dataclass(frozen=True)
class Word:
    """Letters i1..im read as the product s_{i1} ... s_{im, base}."""

    base: Domain
    letters: tuple[int, ...]


class SizeCapExceeded(RuntimeError):
    pass


class CoxeterGroupoid:
    def __init__(self, family: Family, max_elements: int = 500_000):
        self.family = family
        self.roots: RootSystem = root_system(family)
        self.max_elements = max_elements
        self._elements: tuple[Element, ...] | None = None
        self._length: dict[Element, int] = {}
        self._canonical: dict[Element, tuple[int, ...]] = {}
        self._reduced_words: dict[Element, tuple[tuple[int, ...], ...]] = {}

    # ---- basic elements ----

    def identity(self, a: Domain) -> Element:
        return Element(a, a, sp_identity(self.roots.dim))

    def generator(self, i: int, a: Domain) -> Element:
        return Element(a, act(self.family, i, a), self.roots.reflection(i, a))

    def multiply(self, x, y):
        """Product xy; ZERO when the inner domains differ."""
        if x is ZERO or y is ZERO:
            return ZERO
        if x.source != y.target:
            return ZERO
        return Element(y.source, x.target, sp_compose(x.smap, y.smap))

    def inverse(self, w: Element) -> Element:
        return Element(w.target, w.source, sp_invert(w.smap))

    def length(self, w: Element) -> int:
        """Number of positive roots of the source sent to negative roots."""
        cached = self._length.get(w)
        if cached is not None:
            return cached
        pos_t = self.roots.positive_roots(w.target)
        count = 0
        for beta in self.roots.positive_roots(w.source):
            img = sp_apply(w.smap, beta)
            if tuple(-c for c in img) in pos_t:
                count += 1
        self._length[w] = count
        return count

    def sign(self, w: Element) -> int:
        return -1 if self.length(w) % 2 else 1

    # ---- descents ----

    def right_descent(self, w: Element, j: int) -> bool:
        """True iff w(alpha_{j, source}) is a negative root of the target."""
        img = sp_apply(w.smap, self.roots.simple_root(j, w.source))
        return tuple(-c for c in img) in self.roots.positive_roots(w.target)

    def left_descent(self, w: Element, i: int) -> bool:
        inv = self.inverse(w)
        return self.right_descent(inv, i)

    # ---- enumeration ----

    def elements(self) -> tuple[Element, ...]:
        """All nonzero elements, closed under generator multiplication.

        Ordered by (length, source, target, map) so output is reproducible.
        """
        if self._elements is not None:
            return self._elements
        seen: set[Element] = set()
        frontier: list[Element] = []
        for a in self.roots.domains:
            e = self.identity(a)
            seen.add(e)
            frontier.append(e)
            self._length[e] = 0
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(1, self.family.rank + 1):
                    u = self.multiply(self.generator(i, w.target), w)
                    if u not in seen:
                        if len(seen) >= self.max_elements:
                            raise SizeCapExceeded(
                                f"more than {self.max_elements} elements"
                            )
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
        ordered = sorted(
            seen,
            key=lambda w: (
                self.length(w),
                domain_sort_key(w.source),
                domain_sort_key(w.target),
                w.smap,
            ),
        )
        self._elements = tuple(ordered)
        return self._elements

    def order(self) -> int:
        """|W \\ {0}|."""
        return len(self.elements())

    # ---- words ----

    def evaluate(self, word: Word) -> Element:
        cur = self.identity(word.base)
        for letter in reversed(word.letters):
            cur = self.multiply(self.generator(letter, cur.target), cur)
        return cur

    def word_domains(self, word: Word) -> list[Domain]:
        """Domain at which each letter applies (indexed like word.letters)."""
        doms = [word.base] * len(word.letters)
        dom = word.base
        for k in range(len(word.letters) - 1, -1, -1):
            doms[k] = dom
            dom = act(self.family, word.letters[k], dom)
        return doms

    def canonical_reduced_word(self, w: Element) -> Word:
        """Deterministic reduced word: strip the smallest left descent first."""
        cached = self._canonical.get(w)
        if cached is not None:
            return Word(w.source, cached)
        letters: list[int] = []
        cur = w
        while self.length(cur) > 0:
            for i in range(1, self.family.rank + 1):
                if self.left_descent(cur, i):
                    letters.append(i)
                    cur = self.multiply(self.generator(i, cur.target), cur)
                    break
            else:
                raise AssertionError("no left descent on a positive-length element")
        self._canonical[w] = tuple(letters)
        return Word(w.source, tuple(letters))

    def all_reduced_words(self, w: Element, cap: int = 1_000_000) -> tuple[Word, ...]:
        """Every reduced word for w, by descent recursion; sorted."""
        letters = self._all_reduced_letters(w, cap)
        return tuple(Word(w.source, ls) for ls in letters)

    def _all_reduced_letters(self, w: Element, cap: int) -> tuple[tuple[int, ...], ...]:
        cached = self._reduced_words.get(w)
        if cached is not None:
            return cached
        if self.length(w) == 0:
            out: tuple[tuple[int, ...], ...] = ((),)
        else:
            acc = []
            for i in range(1, self.family.rank + 1):
                if self.left_descent(w, i):
                    rest = self.multiply(self.generator(i, w.target), w)
                    for tail in self._all_reduced_letters(rest, cap):
                        acc.append((i,) + tail)
                        if len(acc) > cap:
                            raise SizeCapExceeded("too many reduced words")
            out = tuple(sorted(acc))
        self._reduced_words[w] = out
        return out

    # ---- braid moves ----

    def braid_moves(self, word: Word) -> list[Word]:
        """All words obtained by one braid-relation substitution.

        A segment of letters alternating between i and j, of length exactly
        m_{i,j;b} where b is the domain at the segment's rightmost letter, is
        replaced by the swapped alternation.
        """
        letters = word.letters
        mlen = len(letters)
        doms = self.word_domains(word)
        out = []
        for end in range(mlen):  # rightmost index of the segment
            b = doms[end]
            i = letters[end]
            for j in range(1, self.family.rank + 1):
                if j == i:
                    continue
                m = self.roots.coxeter_entry(i, j, b)
                start = end - m + 1
                if start < 0:
                    continue
                ok = True
                for t in range(m):
                    expect = i if t % 2 == 0 else j
                    if letters[end - t] != expect:
                        ok = False
                        break
                if not ok:
                    continue
                swapped = []
                for t in range(m):
                    swapped.append(j if t % 2 == 0 else i)
                swapped.reverse()
                new_letters = letters[:start] + tuple(swapped) + letters[end + 1 :]
                out.append(Word(word.base, new_letters))
        return out

    def braid_connected(self, w: Element) -> bool:
        """Whether braid moves connect all reduced words of w (the word-problem
        connectivity statement)."""
        words = {word.letters for word in self.all_reduced_words(w)}
        if len(words) <= 1:
            return True
        start = next(iter(words))
        seen = {start}
        stack = [start]
        while stack:
            cur = stack.pop()
            for moved in self.braid_moves(Word(w.source, cur)):
                ls = moved.letters
                if ls in words and ls not in seen:
                    seen.add(ls)
                    stack.append(ls)
        return seen == words

    def braid_reaches_repeat(self, word: Word, cap: int = 200_000) -> bool:
        """Whether some braid-move sequence yields adjacent equal letters.

        This is the computational content of the statement that a non-reduced
        word is braid-equivalent to one with a repeated adjacent letter.
        """
        def has_repeat(ls):
            return any(ls[k] == ls[k + 1] for k in range(len(ls) - 1))

        if has_repeat(word.letters):
            return True
        seen = {word.letters}
        stack = [word.letters]
        while stack:
            cur = stack.pop()
            for moved in self.braid_moves(Word(word.base, cur)):
                ls = moved.letters
                if ls in seen:
                    continue
                if has_repeat(ls):
                    return True
                if len(seen) >= cap:
                    raise SizeCapExceeded("braid closure exceeded the cap")
                seen.add(ls)
                stack.append(ls)
        return False


@lru_cache(maxsize=None)
def groupoid_for(family: Family) -> CoxeterGroupoid:
    return CoxeterGroupoid(family)


def dimension_formula(family: Family) -> int:
    """Closed-form |W \\ {0}| for each family."""
    from math import factorial

    m, n = family.m, family.n
    if family.kind == "A":
        return factorial(m + n + 2) ** 2 // (factorial(m + 1) * factorial(n + 1))
    if family.kind == "B":
        return 2 ** (m + n) * factorial(m + n) ** 2 // (factorial(m) * factorial(n))
    return (
        2 ** (m + n - 1)
        * (factorial(m + n - 1) * (m + 2 * n)) ** 2
        // (factorial(m) * factorial(n))
    )


def element_to_json(w: Element):
    from .domains import domain_to_json

    return {
        "source": domain_to_json(w.source),
        "target": domain_to_json(w.target),
        "perm": [[abs(v), 1 if v > 0 else -1] for v in w.smap],
    }


def word_to_json(word: Word):
    from .domains import domain_to_json

    return {"base": domain_to_json(word.base), "letters": list(word.letters)}
