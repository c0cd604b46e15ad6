"""Flag manifolds G/K from painted Dynkin diagrams.

A flag is specified by the set of simple-root nodes that generate K (the
"k= nodes", 1-based Bourbaki indices; these are the marked nodes of the
diagram).  The remaining unpainted nodes carry the flag directions: R_K
consists of the roots supported on the k-nodes, R_M of everything else.
Grouping the Lie-positive part of R_M by the coordinate vector at the
unpainted nodes (the t-root) gives the irreducible summands
m_1, ..., m_s of the isotropy representation.

Invariant almost complex structures assign a sign to each summand (the
first may be fixed +1 since J and -J agree up to orientation), invariant
metrics a positive number to each summand.  Closed-form conditions on a
metric (closed fundamental form, vanishing (1,2) part) are linear in the
summand values, so the admissible sets are relation cones: the kernel of
the relation rows intersected with the positive orthant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import gcd, lcm

from .exactla import nullspace, solve_square
from .rootsys import LieType, Root, RootSystem, build_root_system, canonical_key


def _neg(r: Root) -> Root:
    return tuple(-x for x in r)


def _add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


class FlagManifold:
    def __init__(self, rs: RootSystem, k_nodes):
        n = rs.lie_type.rank
        k_nodes = frozenset(k_nodes)
        if not k_nodes <= set(range(1, n + 1)):
            raise ValueError(f"k-node indices must lie in 1..{n}")
        if len(k_nodes) == n:
            raise ValueError("at least one node must stay unpainted")
        self.rs = rs
        self.k_nodes = k_nodes
        self.unpainted = tuple(i for i in range(1, n + 1) if i not in k_nodes)
        m_nodes0 = [i - 1 for i in self.unpainted]
        pos_m = [r for r in rs.positive_roots if any(r[i] for i in m_nodes0)]
        self.lie_positive_m = tuple(pos_m)
        self._pos_m_set = frozenset(pos_m)
        self.r_m = frozenset(pos_m) | frozenset(_neg(r) for r in pos_m)
        self.r_k = frozenset(rs.roots) - self.r_m
        groups: dict[tuple[int, ...], list[Root]] = {}
        for r in pos_m:
            groups.setdefault(tuple(r[i] for i in m_nodes0), []).append(r)
        ordered = sorted(groups.values(), key=lambda g: min(map(canonical_key, g)))
        self.summands = tuple(tuple(sorted(g, key=canonical_key)) for g in ordered)
        self.grades = tuple(
            tuple(g[0][i] for i in m_nodes0) for g in self.summands
        )
        self.summand_of: dict[Root, int] = {}
        for i, g in enumerate(self.summands):
            for r in g:
                self.summand_of[r] = i
                self.summand_of[_neg(r)] = i

    @property
    def painted(self) -> tuple[int, ...]:
        """The marked (subalgebra) nodes, as a sorted tuple."""
        return tuple(sorted(self.k_nodes))

    @property
    def num_summands(self) -> int:
        return len(self.summands)

    @property
    def complex_dimension(self) -> int:
        return len(self.lie_positive_m)

    def label(self) -> str:
        if not self.k_nodes:
            return f"{self.rs.lie_type} maximal"
        return f"{self.rs.lie_type} k={','.join(map(str, sorted(self.k_nodes)))}"

    def __repr__(self) -> str:
        return f"FlagManifold({self.label()})"

    def grade(self, root: Root) -> tuple[int, ...]:
        return tuple(root[i - 1] for i in self.unpainted)

    def epsilon(self, signs, root: Root) -> int:
        i = self.summand_of[root]
        return signs[i] if root in self._pos_m_set else -signs[i]

    def lambda_of(self, lam, root: Root) -> Fraction:
        return lam[self.summand_of[root]]

    def enumerate_acs(self):
        k = self.num_summands
        return tuple((1,) + rest for rest in product((1, -1), repeat=k - 1))

    def r_m_plus(self, signs) -> tuple[Root, ...]:
        out = []
        for i, g in enumerate(self.summands):
            for r in g:
                out.append(r if signs[i] == 1 else _neg(r))
        return tuple(out)

    def is_integrable(self, signs) -> bool:
        plus = self.r_m_plus(signs)
        for a, b in combinations(plus, 2):
            s = _add(a, b)
            if s in self.r_m and self.epsilon(signs, s) == -1:
                return False
        return True


@lru_cache(maxsize=None)
def _build(lie_type: LieType, k_sorted: tuple[int, ...]) -> FlagManifold:
    return FlagManifold(build_root_system(lie_type), k_sorted)


def build_flag(lie_type: LieType, k_nodes=()) -> FlagManifold:
    return _build(lie_type, tuple(sorted(set(k_nodes))))


# -- metric relation cones ------------------------------------------------


def kahler_relation_rows(flag: FlagManifold, signs):
    """Rows of the closed-fundamental-form condition, one per zero-sum triple.

    Every triple of roots in R_M summing to zero is, up to global negation,
    {a, b, -(a+b)} with a, b Lie-positive, so those pairs enumerate all
    relations: eps_a lam_a + eps_b lam_b - eps_{a+b} lam_{a+b} = 0.
    """
    k = flag.num_summands
    rows = set()
    for a, b in combinations(flag.lie_positive_m, 2):
        s = _add(a, b)
        if s in flag.rs.roots:
            row = [0] * k
            row[flag.summand_of[a]] += flag.epsilon(signs, a)
            row[flag.summand_of[b]] += flag.epsilon(signs, b)
            row[flag.summand_of[s]] -= flag.epsilon(signs, s)
            if any(row):
                rows.add(tuple(row))
    return tuple(sorted(rows))


def quasi_kahler_relation_rows(flag: FlagManifold, signs):
    """Rows of the vanishing (1,2)-part condition.

    Only triples with all three roots J-positive constrain the metric:
    lam_a + lam_b = lam_{a+b} whenever a, b and a+b lie in R_M^+.
    """
    k = flag.num_summands
    plus = flag.r_m_plus(signs)
    plus_set = set(plus)
    rows = set()
    for a, b in combinations(plus, 2):
        s = _add(a, b)
        if s in plus_set:
            row = [0] * k
            row[flag.summand_of[a]] += 1
            row[flag.summand_of[b]] += 1
            row[flag.summand_of[s]] -= 1
            if any(row):
                rows.add(tuple(row))
    return tuple(sorted(rows))


def _primitive(vec):
    denom = lcm(*(Fraction(x).denominator for x in vec)) if vec else 1
    ints = [int(Fraction(x) * denom) for x in vec]
    g = gcd(*ints) if ints else 1
    return tuple(Fraction(i, g or 1) for i in ints)


@dataclass
class SolutionCone:
    """{lam > 0 : rows @ lam = 0}, with a nullspace basis and a sample point."""

    width: int
    rows: tuple
    basis: tuple
    sample: tuple | None

    @property
    def is_empty(self) -> bool:
        return self.sample is None

    @property
    def nullity(self) -> int:
        return len(self.basis)

    def is_ray(self) -> bool:
        return self.nullity == 1 and not self.is_empty

    def contains(self, lam) -> bool:
        lam = tuple(Fraction(x) for x in lam)
        if len(lam) != self.width or any(x <= 0 for x in lam):
            return False
        return all(
            sum(c * x for c, x in zip(row, lam)) == 0 for row in self.rows
        )


def solve_cone(rows, width: int) -> SolutionCone:
    basis = nullspace(rows, width)
    d = len(basis)
    empty = SolutionCone(width, tuple(rows), tuple(basis), None)
    if d == 0:
        return empty
    v = [[basis[j][i] for j in range(d)] for i in range(width)]
    if any(all(x == 0 for x in rowv) for rowv in v):
        return empty

    def attempt(x):
        lam = tuple(sum(vi[j] * x[j] for j in range(d)) for vi in v)
        if all(val > 0 for val in lam):
            return _primitive(lam)
        return None

    # cheap candidates first: sum of basis vectors, then least squares to 1
    lam = attempt((Fraction(1),) * d)
    if lam:
        return SolutionCone(width, tuple(rows), tuple(basis), lam)
    vtv = [[sum(v[i][a] * v[i][b] for i in range(width)) for b in range(d)] for a in range(d)]
    vt1 = [sum(v[i][a] for i in range(width)) for a in range(d)]
    x = solve_square(vtv, vt1)
    if x is not None:
        lam = attempt(x)
        if lam:
            return SolutionCone(width, tuple(rows), tuple(basis), lam)
    # complete search: a nonempty {x : Vx >= 1} is pointed (V has full
    # column rank), so some vertex given by d active constraints works
    ones = (Fraction(1),) * d
    for subset in combinations(range(width), d):
        x = solve_square([v[i] for i in subset], ones)
        if x is None:
            continue
        lam = attempt(x)
        if lam:
            return SolutionCone(width, tuple(rows), tuple(basis), lam)
    return empty


def kahler_metrics(flag: FlagManifold, signs) -> SolutionCone:
    """Metrics with closed fundamental form (integrability not assumed)."""
    return solve_cone(kahler_relation_rows(flag, signs), flag.num_summands)


def almost_kahler_metrics(flag: FlagManifold, signs) -> SolutionCone:
    """Alias semantics of kahler_metrics: the relation rows are identical."""
    return kahler_metrics(flag, signs)


def quasi_kahler_metrics(flag: FlagManifold, signs) -> SolutionCone:
    return solve_cone(quasi_kahler_relation_rows(flag, signs), flag.num_summands)


def is_kahler(flag: FlagManifold, signs, lam) -> bool:
    if not flag.is_integrable(signs):
        return False
    rows = kahler_relation_rows(flag, signs)
    return all(sum(c * Fraction(x) for c, x in zip(row, lam)) == 0 for row in rows)


def is_quasi_kahler(flag: FlagManifold, signs, lam) -> bool:
    rows = quasi_kahler_relation_rows(flag, signs)
    return all(sum(c * Fraction(x) for c, x in zip(row, lam)) == 0 for row in rows)


def lambda_one_is_kahler(flag: FlagManifold) -> bool:
    """Whether the normal metric with the standard J is Kahler."""
    for a, b in combinations(flag.lie_positive_m, 2):
        if _add(a, b) in flag.rs.roots:
            return False
    return True


# -- parsing ---------------------------------------------------------------


def parse_flag(text: str) -> FlagManifold:
    """E.g. "C4 k=2,3,4"; omitting the k= token means the maximal flag."""
    parts = text.split()
    if not parts:
        raise ValueError("empty flag specification")
    lt = LieType.parse(parts[0])
    k_nodes: tuple[int, ...] = ()
    if len(parts) == 2:
        tok = parts[1]
        if not tok.startswith("k="):
            raise ValueError(f"expected k=..., got {tok!r}")
        try:
            k_nodes = tuple(int(x) for x in tok[2:].split(","))
        except ValueError:
            raise ValueError(f"bad node list in {tok!r}") from None
    elif len(parts) > 2:
        raise ValueError(f"too many tokens in flag specification {text!r}")
    return build_flag(lt, k_nodes)


def parse_acs(flag: FlagManifold, text: str):
    if set(text) - {"+", "-"} or len(text) != flag.num_summands:
        raise ValueError(
            f"need {flag.num_summands} signs from '+-', got {text!r}"
        )
    return tuple(1 if c == "+" else -1 for c in text)


def parse_metric(flag: FlagManifold, text: str):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != flag.num_summands:
        raise ValueError(f"need {flag.num_summands} values, got {text!r}")
    try:
        lam = tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"bad metric values in {text!r}") from None
    if any(x <= 0 for x in lam):
        raise ValueError("metric values must be positive")
    return lam
