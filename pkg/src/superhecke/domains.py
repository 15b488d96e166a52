"""Domain sets of the three families, the generator action on them, and the
block-sorting permutations tau+ / tau-.

A domain is a parity sequence: a tuple over {0,1} recording which basis
directions of the defining superspace are odd.  Family "A" (gl(m+1|n+1)) uses
sequences of length m+n+2 with n+1 ones; family "B" (osp(2m+1|2n)) uses length
m+n with n ones; family "CD" (osp(2m|2n)) tags each sequence with one of
D / C+ / C- subject to the last-parity constraint.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple, Union

TAGS = ("D", "C+", "C-")


class CDDomain(NamedTuple):
    parities: tuple[int, ...]
    tag: str


Domain = Union[tuple, CDDomain]


@dataclass(frozen=True)
class Family:
    """One of the three families, with its integer parameters.

    kind "A": m, n >= 0.   kind "B": m >= 0, n >= 1.   kind "CD": m, n >= 1;
    CD covers C(n+1) at m = 1 and D(m,n) at m >= 2.
    """

    kind: str
    m: int
    n: int

    def __post_init__(self):
        if self.kind == "A":
            if self.m < 0 or self.n < 0:
                raise ValueError(f"family A needs m, n >= 0, got ({self.m}, {self.n})")
        elif self.kind == "B":
            if self.m < 0 or self.n < 1:
                raise ValueError(f"family B needs m >= 0, n >= 1, got ({self.m}, {self.n})")
        elif self.kind == "CD":
            if self.m < 1 or self.n < 1:
                raise ValueError(f"family CD needs m, n >= 1, got ({self.m}, {self.n})")
        else:
            raise ValueError(f"unknown family kind {self.kind!r}")

    @property
    def rank(self) -> int:
        """Number of generators |N|."""
        return self.m + self.n + 1 if self.kind == "A" else self.m + self.n

    @property
    def seq_len(self) -> int:
        """Length of the parity sequences."""
        return self.m + self.n + 2 if self.kind == "A" else self.m + self.n

    @property
    def num_ones(self) -> int:
        return self.n + 1 if self.kind == "A" else self.n

    @property
    def space_dim(self) -> int:
        """Dimension of the ambient coordinate space of the root vectors."""
        return self.seq_len if self.kind == "A" else self.m + self.n

    def name(self) -> str:
        if self.kind == "A":
            return f"A({self.m},{self.n})"
        if self.kind == "B":
            return f"B({self.m},{self.n})"
        return f"osp({2 * self.m}|{2 * self.n})"


def _parity_sequences(length: int, ones: int) -> list[tuple[int, ...]]:
    seqs = []
    for positions in itertools.combinations(range(length), ones):
        s = [0] * length
        for p in positions:
            s[p] = 1
        seqs.append(tuple(s))
    return sorted(seqs)


def enumerate_domains(family: Family) -> tuple[Domain, ...]:
    """All domains, lexicographic by parities then tag D < C+ < C-."""
    plain = _parity_sequences(family.seq_len, family.num_ones)
    if family.kind in ("A", "B"):
        return tuple(plain)
    out: list[CDDomain] = []
    for p in plain:
        if p[-1] == 0:
            out.append(CDDomain(p, "D"))
        else:
            out.append(CDDomain(p, "C+"))
            out.append(CDDomain(p, "C-"))
    out.sort(key=lambda a: (a.parities, TAGS.index(a.tag)))
    return tuple(out)


def domain_sort_key(a: Domain):
    if isinstance(a, CDDomain):
        return (a.parities, TAGS.index(a.tag))
    return (a, -1)


def _swap(p: tuple[int, ...], k: int) -> tuple[int, ...]:
    """Swap positions k, k+1 (1-based k)."""
    q = list(p)
    q[k - 1], q[k] = q[k], q[k - 1]
    return tuple(q)


def act(family: Family, i: int, a: Domain) -> Domain:
    """Action of generator i (1-based) on domain a.  Involutive by construction."""
    if not 1 <= i <= family.rank:
        raise ValueError(f"generator index {i} out of range 1..{family.rank}")
    if family.kind == "A":
        return _swap(a, i)
    if family.kind == "B":
        if i == family.rank:
            return a
        return _swap(a, i)
    # CD: the seven-case table
    p, tag = a
    l = family.rank
    if tag == "D":
        if i <= l - 2 and p[i - 1] != p[i]:
            return CDDomain(_swap(p, i), "D")
        if i == l - 1 and p[i - 1] != p[i]:
            return CDDomain(_swap(p, i), "C+")
        if i == l and p[l - 2] != p[l - 1]:
            return CDDomain(_swap(p, l - 1), "C-")
        return a
    if tag == "C+":
        if i <= l - 2 and p[i - 1] != p[i]:
            return CDDomain(_swap(p, i), "C+")
        if i == l - 1 and p[i - 1] != p[i]:
            return CDDomain(_swap(p, i), "D")
        return a
    # tag == "C-"
    if i <= l - 2 and p[i - 1] != p[i]:
        return CDDomain(_swap(p, i), "C-")
    if i == l and p[l - 2] != p[l - 1]:
        return CDDomain(_swap(p, l - 1), "D")
    return a


def moves(family: Family, i: int, a: Domain) -> bool:
    """True iff generator i changes the domain, i.e. the node is isotropic."""
    return act(family, i, a) != a


def _blocks(family: Family) -> tuple[int, int]:
    if family.kind == "A":
        return family.m + 1, family.n + 1
    return family.m, family.n


def _parities_of(a: Domain) -> tuple[int, ...]:
    return a.parities if isinstance(a, CDDomain) else a


def tau_plus(family: Family, d: Domain) -> tuple[int, ...]:
    """Minimal-length permutation placing the sorted pattern 0..0 1..1 onto d.

    Returned 0-based: tau[i] is the image position of i.  Positions 0..m'-1 go
    to the zero positions of d in increasing order, the rest to the ones.
    """
    p = _parities_of(d)
    m1, n1 = _blocks(family)
    zeros = [k for k, v in enumerate(p) if v == 0]
    ones = [k for k, v in enumerate(p) if v == 1]
    if len(zeros) != m1 or len(ones) != n1:
        raise ValueError(f"domain {d} does not match block sizes ({m1}, {n1})")
    return tuple(zeros + ones)


def tau_minus(family: Family, d: Domain) -> tuple[int, ...]:
    """Minimal-length permutation placing the pattern 1..1 0..0 onto d.

    Positions 0..n'-1 go to the one positions of d in increasing order, the
    remaining n'..n'+m'-1 to the zero positions.
    """
    p = _parities_of(d)
    m1, n1 = _blocks(family)
    zeros = [k for k, v in enumerate(p) if v == 0]
    ones = [k for k, v in enumerate(p) if v == 1]
    if len(zeros) != m1 or len(ones) != n1:
        raise ValueError(f"domain {d} does not match block sizes ({m1}, {n1})")
    return tuple(ones + zeros)


def invert_perm(t: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(t)
    for i, v in enumerate(t):
        inv[v] = i
    return tuple(inv)


def perm_one_based(t: tuple[int, ...]) -> list[int]:
    return [v + 1 for v in t]


def inversions(t: tuple[int, ...]) -> int:
    return sum(1 for i in range(len(t)) for j in range(i + 1, len(t)) if t[i] > t[j])


def domain_to_json(a: Domain):
    if isinstance(a, CDDomain):
        return {"p": list(a.parities), "tag": a.tag}
    return list(a)


def domain_from_json(family: Family, data) -> Domain:
    if family.kind == "CD":
        return CDDomain(tuple(int(x) for x in data["p"]), data["tag"])
    return tuple(int(x) for x in data)


def domain_str(a: Domain) -> str:
    if isinstance(a, CDDomain):
        return "(" + ",".join(map(str, a.parities)) + ")^" + a.tag
    return "(" + ",".join(map(str, a)) + ")"
