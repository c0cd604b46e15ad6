"""Irreducible root systems A-G in simple-root coordinates.

Roots are integer tuples over the simple roots, numbered per Bourbaki:
chains run 1..n; in the E series node 2 hangs off node 4 of the chain
1-3-4-5-..; in B_n the last node is short, in C_n it is long; in F4 nodes
1,2 are long and 3,4 short; in G2 node 1 is short.

Two bilinear forms live here.  `symmetrized_form` F is the W-invariant
form normalized so long roots have squared length 2.  The Killing-dual
form is (a,b)_B = killing_scale * F(a,b) with killing_scale = 1/(2h^v);
the scale is computed from F itself via the trace identity

    sum_{g in R} (g,a)_B (g,b)_B = (a,b)_B

applied to the highest root, and then re-verified on all simple pairs,
so no dual-Coxeter-number table is transcribed anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

Root = tuple[int, ...]

_RANK_BOUNDS = {"A": 1, "B": 2, "C": 2, "D": 3, "F": 4, "G": 2}

_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}


@dataclass(frozen=True)
class LieType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in "ABCDEFG" or len(self.series) != 1:
            raise ValueError(f"unknown series {self.series!r}")
        if self.series == "E":
            if self.rank not in (6, 7, 8):
                raise ValueError(f"E{self.rank} is not a valid type (E6, E7, E8)")
        elif self.series == "F":
            if self.rank != 4:
                raise ValueError(f"F{self.rank} is not a valid type (F4)")
        elif self.series == "G":
            if self.rank != 2:
                raise ValueError(f"G{self.rank} is not a valid type (G2)")
        elif self.rank < _RANK_BOUNDS[self.series]:
            raise ValueError(
                f"{self.series}{self.rank} below minimal rank "
                f"{_RANK_BOUNDS[self.series]} for the series"
            )

    @classmethod
    def parse(cls, text: str) -> "LieType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse Lie type {text!r} (expected e.g. 'C4', 'g2')")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


def _cartan_and_lengths(lt: LieType) -> tuple[list[list[int]], list[Fraction]]:
    """Cartan matrix C[i][j] = 2(a_i,a_j)/(a_j,a_j) and half-lengths d_i = (a_i,a_i)/2."""
    n = lt.rank
    one = Fraction(1)
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def chain(i, j):  # single bond between nodes i, j (0-based)
        C[i][j] = C[j][i] = -1

    if lt.series in ("A", "B", "C", "F", "G"):
        for i in range(n - 1):
            chain(i, i + 1)
    if lt.series == "A":
        d = [one] * n
    elif lt.series == "B":  # last node short
        C[n - 2][n - 1] = -2
        d = [one] * (n - 1) + [Fraction(1, 2)]
    elif lt.series == "C":  # last node long
        C[n - 1][n - 2] = -2
        d = [Fraction(1, 2)] * (n - 1) + [one]
    elif lt.series == "D":  # fork: n-1 and n both on n-2
        for i in range(n - 3):
            chain(i, i + 1)
        chain(n - 3, n - 2)
        chain(n - 3, n - 1)
        d = [one] * n
    elif lt.series == "E":  # chain 1-3-4-..-n, node 2 on node 4
        chain(0, 2)
        for i in range(2, n - 1):
            chain(i, i + 1)
        chain(1, 3)
        d = [one] * n
    elif lt.series == "F":  # double bond 2=>3, nodes 3,4 short
        C[1][2] = -2
        d = [one, one, Fraction(1, 2), Fraction(1, 2)]
    else:  # G2, node 1 short
        C[1][0] = -3
        d = [Fraction(1, 3), one]
    # F(a_i,a_j) = C[i][j] d_j must be symmetric
    for i in range(n):
        for j in range(n):
            assert C[i][j] * d[j] == C[j][i] * d[i]
    return C, d


class RootSystem:
    """Immutable table of one irreducible root system; share freely."""

    def __init__(self, lie_type: LieType):
        self.lie_type = lie_type
        n = lie_type.rank
        C, self._d = _cartan_and_lengths(lie_type)
        self.cartan_matrix = tuple(tuple(row) for row in C)
        self.positive_roots = self._generate_positive(n, C)
        self.roots = frozenset(self.positive_roots) | frozenset(
            tuple(-x for x in r) for r in self.positive_roots
        )
        assert len(self.roots) == _COUNTS[lie_type.series](n)
        highest = self.positive_roots[-1]
        assert sum(highest) == max(sum(r) for r in self.positive_roots)
        self.highest_root = highest
        self.marks = highest
        self.killing_scale = self._compute_killing_scale()
        self._check_killing_trace()

    @staticmethod
    def _generate_positive(n: int, C: list[list[int]]) -> tuple[Root, ...]:
        # height induction: b + a_i is a root iff q = p - <b, a_i^v> >= 1,
        # where p counts how far the a_i-string continues below b.
        simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        known: set[Root] = set(simple)
        layer = list(simple)
        while layer:
            nxt = []
            for b in layer:
                for i in range(n):
                    p = 0
                    down = list(b)
                    while True:
                        down[i] -= 1
                        if tuple(down) in known:
                            p += 1
                        else:
                            break
                    pairing = sum(b[j] * C[j][i] for j in range(n))
                    if p - pairing >= 1:
                        up = list(b)
                        up[i] += 1
                        cand = tuple(up)
                        if cand not in known:
                            known.add(cand)
                            nxt.append(cand)
            layer = nxt
        return tuple(sorted(known, key=lambda r: (sum(r), r)))

    # -- bilinear forms ------------------------------------------------

    def symmetrized_form(self, a: Iterable[int], b: Iterable[int]) -> Fraction:
        a = tuple(a)
        b = tuple(b)
        C, d = self.cartan_matrix, self._d
        return sum(
            (Fraction(a[i]) * b[j] * C[i][j] * d[j] for i in range(len(a)) for j in range(len(b))),
            Fraction(0),
        )

    def _compute_killing_scale(self) -> Fraction:
        th = self.highest_root
        total = sum((self.symmetrized_form(g, th) ** 2 for g in self.roots), Fraction(0))
        return self.symmetrized_form(th, th) / total

    def _check_killing_trace(self):
        n = self.lie_type.rank
        simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        for i in range(n):
            for j in range(i, n):
                lhs = sum(
                    (
                        self.symmetrized_form(g, simple[i]) * self.symmetrized_form(g, simple[j])
                        for g in self.roots
                    ),
                    Fraction(0),
                )
                assert self.killing_scale * lhs == self.symmetrized_form(simple[i], simple[j])

    def killing_inner(self, a: Iterable[int], b: Iterable[int]) -> Fraction:
        """(a,b)_B; equals B(H_a, H_b) on the Cartan subalgebra."""
        return self.killing_scale * self.symmetrized_form(a, b)

    def cartan_pairing(self, b: Root, a: Root) -> int:
        """<b, a^v> = 2(b,a)/(a,a)."""
        q = 2 * self.symmetrized_form(b, a) / self.symmetrized_form(a, a)
        assert q.denominator == 1
        return int(q)

    def reflect(self, a: Root, b: Root) -> Root:
        """s_a(b)."""
        k = self.cartan_pairing(b, a)
        return tuple(x - k * y for x, y in zip(b, a))

    # -- root combinatorics --------------------------------------------

    def is_root(self, v: Iterable[int]) -> bool:
        return tuple(v) in self.roots

    def root_string(self, a: Root, b: Root) -> tuple[int, int]:
        """(p, q) with b - p*a .. b + q*a the a-string through b."""
        if b == a or b == tuple(-x for x in a):
            raise ValueError("root string through a multiple of the root itself")
        p = 0
        v = tuple(x - y for x, y in zip(b, a))
        while v in self.roots:
            p += 1
            v = tuple(x - y for x, y in zip(v, a))
        q = 0
        v = tuple(x + y for x, y in zip(b, a))
        while v in self.roots:
            q += 1
            v = tuple(x + y for x, y in zip(v, a))
        return p, q

    def has_mark_at_least(self, k: int) -> bool:
        return any(m >= k for m in self.marks)

    def negate(self, a: Root) -> Root:
        return tuple(-x for x in a)

    def add(self, a: Root, b: Root) -> Root:
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a: Root, b: Root) -> Root:
        return tuple(x - y for x, y in zip(a, b))


def canonical_key(r: Root) -> tuple[int, Root]:
    """The global deterministic root order: by height, then lexicographic."""
    return (sum(r), r)


@lru_cache(maxsize=None)
def build_root_system(lie_type: LieType) -> RootSystem:
    return RootSystem(lie_type)


# -- C-series display labels ------------------------------------------
#
# With a_i = l_i - l_{i+1} (i < n) and a_n = 2 l_n the C_n roots are the
# familiar +-(l_i - l_j), +-(l_i + l_j), +-2 l_i.

def c_lambda_vector(rank: int, root: Iterable[int]) -> tuple[int, ...]:
    v = [0] * rank
    for i, coeff in enumerate(root):
        if i < rank - 1:
            v[i] += coeff
            v[i + 1] -= coeff
        else:
            v[i] += 2 * coeff
    return tuple(v)


def c_root_from_lambda(rank: int, v: Iterable[int]) -> Root:
    """Inverse of c_lambda_vector; v must be a valid lambda-coefficient vector."""
    v = list(v)
    coords = [0] * rank
    acc = 0
    for i in range(rank - 1):
        acc += v[i]
        coords[i] = acc
    acc += v[rank - 1]
    assert acc % 2 == 0
    coords[rank - 1] = acc // 2
    assert c_lambda_vector(rank, coords) == tuple(v)
    return tuple(coords)


def c_series_label(rank: int, root: Iterable[int]) -> str:
    v = c_lambda_vector(rank, root)
    support = [(i, x) for i, x in enumerate(v) if x]
    if len(support) == 1:
        i, x = support[0]
        assert abs(x) == 2
        return f"2λ{i + 1}" if x > 0 else f"-2λ{i + 1}"
    (i, x), (j, y) = support
    assert abs(x) == 1 and abs(y) == 1
    if x > 0:
        return f"λ{i + 1}+λ{j + 1}" if y > 0 else f"λ{i + 1}-λ{j + 1}"
    return f"-λ{i + 1}+λ{j + 1}" if y > 0 else f"-λ{i + 1}-λ{j + 1}"
