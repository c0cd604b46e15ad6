"""Structure constants of the normalized root-vector basis.

For every root a there is X_a with B(X_a, X_{-a}) = 1, [X_a, X_{-a}] = H_a
(the B-dual of a in the Cartan subalgebra), and

    [X_a, X_b] = m_{a,b} X_{a+b},      m_{a,b} = 0 iff a+b is not a root,

with the sign pattern m_{a,b} = -m_{b,a} = -m_{-a,-b} = m_{b,-a-b} and the
magnitude law m_{a,b}^2 = q(1+p)/2 * (a,a)_B over the a-string through b.

Construction route: integer Chevalley constants N_{a,b} = +-(p+1) first.
Extraspecial pairs (minimal first component among decompositions of each
positive sum) get N = +(p+1); every other positive pair is forced by the
Jacobi identity on a quadruple containing the extraspecial pair; mixed-sign
pairs reduce through the cyclic identity

    N_{x,y}/(z,z) = N_{y,z}/(x,x) = N_{z,x}/(y,y)   for x+y+z = 0,

which follows from invariance of the form together with B(e_x, e_{-x}) =
2/(x,x).  Finally X_a = c_a e_a with c_a = sqrt((a,a)_B / 2) produces both
normalizations above, and m_{a,b} = (c_a c_b / c_{a+b}) N_{a,b}.

Magnitudes are irrational in general, so they are carried exactly as
SignedSqrt values (sign times the square root of a nonnegative rational).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .rootsys import Root, RootSystem, canonical_key


def _sqrt_fraction(q: Fraction):
    """Exact square root of a nonnegative rational, or None."""
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


class SignedSqrt:
    """sign * sqrt(radicand), radicand a nonnegative rational.

    Products and quotients are always exact.  Sums are exact precisely when
    the two radicands differ by the square of a rational (same "radical
    class"); anything else raises, it never silently rounds.
    """

    __slots__ = ("sign", "radicand")

    def __init__(self, sign: int, radicand):
        radicand = Fraction(radicand)
        if radicand < 0:
            raise ValueError("radicand must be nonnegative")
        if (sign == 0) != (radicand == 0):
            raise ValueError("sign is 0 exactly when the radicand is 0")
        self.sign = sign
        self.radicand = radicand

    @classmethod
    def from_rational(cls, q) -> "SignedSqrt":
        q = Fraction(q)
        s = (q > 0) - (q < 0)
        return cls(s, q * q)

    @classmethod
    def sqrt(cls, q) -> "SignedSqrt":
        q = Fraction(q)
        return cls(1 if q > 0 else 0, q)

    @property
    def is_rational(self) -> bool:
        return self.sign == 0 or _sqrt_fraction(self.radicand) is not None

    def to_fraction(self) -> Fraction:
        if self.sign == 0:
            return Fraction(0)
        r = _sqrt_fraction(self.radicand)
        if r is None:
            raise ValueError(f"sqrt({self.radicand}) is irrational")
        return self.sign * r

    def square(self) -> Fraction:
        return self.radicand

    def __float__(self) -> float:
        return self.sign * math.sqrt(float(self.radicand))

    def __bool__(self) -> bool:
        return self.sign != 0

    def __neg__(self) -> "SignedSqrt":
        return SignedSqrt(-self.sign, self.radicand)

    def __mul__(self, other):
        if isinstance(other, SignedSqrt):
            s = self.sign * other.sign
            return SignedSqrt(s, self.radicand * other.radicand if s else 0)
        q = Fraction(other)
        s = self.sign * ((q > 0) - (q < 0))
        return SignedSqrt(s, self.radicand * q * q if s else 0)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, SignedSqrt):
            if other.sign == 0:
                raise ZeroDivisionError
            return SignedSqrt(self.sign * other.sign, self.radicand / other.radicand)
        q = Fraction(other)
        if q == 0:
            raise ZeroDivisionError
        return SignedSqrt(self.sign * ((q > 0) - (q < 0)), self.radicand / (q * q))

    def __add__(self, other):
        if not isinstance(other, SignedSqrt):
            other = SignedSqrt.from_rational(other)
        if other.sign == 0:
            return self
        if self.sign == 0:
            return other
        ratio = _sqrt_fraction(other.radicand / self.radicand)
        if ratio is None:
            raise ValueError(
                f"cannot add sqrt({self.radicand}) and sqrt({other.radicand}) exactly"
            )
        coeff = self.sign + other.sign * ratio
        s = (coeff > 0) - (coeff < 0)
        return SignedSqrt(s, coeff * coeff * self.radicand if s else 0)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, SignedSqrt):
            other = SignedSqrt.from_rational(other)
        return self + (-other)

    def __eq__(self, other) -> bool:
        if isinstance(other, SignedSqrt):
            return self.sign == other.sign and self.radicand == other.radicand
        try:
            q = Fraction(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.is_rational and self.to_fraction() == q

    def __hash__(self):
        return hash((self.sign, self.radicand))

    def __repr__(self) -> str:
        if self.is_rational:
            return f"{self.to_fraction()}"
        body = f"sqrt({self.radicand})"
        return f"-{body}" if self.sign < 0 else body


ZERO = SignedSqrt(0, 0)


def _neg(r: Root) -> Root:
    return tuple(-x for x in r)


def _add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def _chevalley_integers(rs: RootSystem) -> dict[tuple[Root, Root], int]:
    """N_{a,b} over positive pairs a < b (canonical order) with a+b a root."""
    pos = rs.positive_roots
    pos_set = set(pos)
    roots = rs.roots
    F = rs.symmetrized_form
    table: dict[tuple[Root, Root], int] = {}

    def resolve(x: Root, y: Root) -> Fraction:
        # N(x, y) for any sign pattern; 0 when x+y is not a root.
        s = _add(x, y)
        if s not in roots:
            return Fraction(0)
        if x in pos_set:
            if y in pos_set:
                if canonical_key(x) < canonical_key(y):
                    return Fraction(table[(x, y)])
                return Fraction(-table[(y, x)])
            if s in pos_set:
                return -(F(s, s) / F(x, x)) * resolve(_neg(y), s)
            return -(F(s, s) / F(y, y)) * resolve(x, _neg(s))
        if y in pos_set:
            return -resolve(y, x)
        return -resolve(_neg(x), _neg(y))

    for gamma in pos:
        decomps = sorted(
            (
                (xi, _sub(gamma, xi))
                for xi in pos
                if _sub(gamma, xi) in pos_set
                and canonical_key(xi) < canonical_key(_sub(gamma, xi))
            ),
            key=lambda pair: canonical_key(pair[0]),
        )
        if not decomps:
            continue
        xi, eta = decomps[0]  # extraspecial pair of gamma
        p, _ = rs.root_string(xi, eta)
        table[(xi, eta)] = p + 1
        for a, b in decomps[1:]:
            # Jacobi on (eta, -a, -b), whose sums all have height < height(gamma):
            #   N(eta,-a) N(eta-a,-b) + N(-a,-b) N(-gamma,eta) + N(-b,eta) N(eta-b,-a) = 0
            ea, eb = _sub(eta, a), _sub(eta, b)
            t1 = resolve(eta, _neg(a)) * resolve(ea, _neg(b)) if ea in roots else Fraction(0)
            t3 = resolve(_neg(b), eta) * resolve(eb, _neg(a)) if eb in roots else Fraction(0)
            coeff = resolve(_neg(gamma), eta)
            assert coeff != 0
            value = (t1 + t3) / coeff  # equals -N(-a,-b) = N(a,b)
            assert value.denominator == 1
            pa, _ = rs.root_string(a, b)
            assert abs(value) == pa + 1
            table[(a, b)] = int(value)
    return table


@dataclass
class AlgebraElement:
    """Finite combination of H_{a_i} (simple-root duals) and X_a.

    Exact container: coefficients are SignedSqrt, so combining values from
    incommensurable radical classes raises instead of rounding.
    """

    cartan: tuple[SignedSqrt, ...]
    coeffs: dict[Root, SignedSqrt]

    def is_zero(self) -> bool:
        return all(c.sign == 0 for c in self.cartan) and all(
            v.sign == 0 for v in self.coeffs.values()
        )


class ChevalleyTable:
    """Immutable table of m_{a,b} for one root system."""

    def __init__(self, rs: RootSystem, _integers=None):
        self.rs = rs
        self._n_pos = _integers if _integers is not None else _chevalley_integers(rs)
        self._pos_set = set(rs.positive_roots)
        n = rs.lie_type.rank
        self._simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        self._c = {
            r: SignedSqrt.sqrt(rs.killing_inner(r, r) / 2) for r in rs.roots
        }
        self.constants: dict[tuple[Root, Root], SignedSqrt] = {}
        for a in rs.roots:
            for b in rs.roots:
                s = _add(a, b)
                if s in rs.roots:
                    n = self._n_int(a, b)
                    self.constants[(a, b)] = (self._c[a] * self._c[b] / self._c[s]) * n
        self._verify_identities()

    # integer constants, any signs
    def _n_int(self, a: Root, b: Root) -> int:
        pos = self._pos_set
        F = self.rs.symmetrized_form
        s = _add(a, b)
        if s not in self.rs.roots:
            return 0
        if a in pos and b in pos:
            if canonical_key(a) < canonical_key(b):
                return self._n_pos[(a, b)]
            return -self._n_pos[(b, a)]
        if a in pos:
            if s in pos:
                v = -(F(s, s) / F(a, a)) * self._n_int(_neg(b), s)
            else:
                v = -(F(s, s) / F(b, b)) * self._n_int(a, _neg(s))
            assert v.denominator == 1
            return int(v)
        if b in pos:
            return -self._n_int(b, a)
        return -self._n_int(_neg(a), _neg(b))

    def n_constant(self, a: Root, b: Root) -> int:
        return self._n_int(a, b)

    def m(self, a: Root, b: Root) -> SignedSqrt:
        return self.constants.get((a, b), ZERO)

    def m_squared(self, a: Root, b: Root) -> Fraction:
        return self.m(a, b).square()

    def _verify_identities(self):
        rs = self.rs
        for (a, b), v in self.constants.items():
            s = _add(a, b)
            assert v == -self.m(b, a)
            assert v == -self.m(_neg(a), _neg(b))
            assert v == self.m(b, _neg(s))
            p, q = rs.root_string(a, b)
            assert v.square() == Fraction(q * (1 + p), 2) * rs.killing_inner(a, a)

    # -- basis elements and bracket ------------------------------------

    def x(self, a: Root) -> AlgebraElement:
        n = self.rs.lie_type.rank
        return AlgebraElement((ZERO,) * n, {a: SignedSqrt.from_rational(1)})

    def h(self, a: Iterable[int]) -> AlgebraElement:
        """H_a for a in root coordinates (B-dual of a)."""
        return AlgebraElement(
            tuple(SignedSqrt.from_rational(x) for x in a), {}
        )

    def _pairing(self, cartan: tuple[SignedSqrt, ...], g: Root) -> SignedSqrt:
        # g(H) for H = sum_i v_i H_{a_i}; (g, a_i)_B are rational
        acc = ZERO
        for v, e in zip(cartan, self._simple):
            acc = acc + v * self.rs.killing_inner(g, e)
        return acc

    def bracket(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        n = self.rs.lie_type.rank
        cartan = [ZERO] * n
        coeffs: dict[Root, SignedSqrt] = {}

        def put(r: Root, v: SignedSqrt):
            if v.sign:
                coeffs[r] = coeffs.get(r, ZERO) + v

        for a, xa in x.coeffs.items():
            if not xa.sign:
                continue
            for b, yb in y.coeffs.items():
                if not yb.sign:
                    continue
                coef = xa * yb
                if b == _neg(a):
                    for i in range(n):
                        if a[i]:
                            cartan[i] = cartan[i] + coef * a[i]
                else:
                    s = _add(a, b)
                    if s in self.rs.roots:
                        put(s, coef * self.m(a, b))
        if any(c.sign for c in x.cartan):
            for b, yb in y.coeffs.items():
                put(b, self._pairing(x.cartan, b) * yb)
        if any(c.sign for c in y.cartan):
            for a, xa in x.coeffs.items():
                put(a, -(self._pairing(y.cartan, a) * xa))
        return AlgebraElement(tuple(cartan), coeffs)

    # -- regauging ------------------------------------------------------

    def regauged(self, signs: Mapping[Root, int]) -> "ChevalleyTable":
        """New table for X'_a = s_a X_a, s in {+-1} given on positive roots."""
        full = {}
        for r in self.rs.positive_roots:
            s = signs.get(r, 1)
            assert s in (1, -1)
            full[r] = s
            full[_neg(r)] = s
        new = {
            pair: full[pair[0]] * full[pair[1]] * full[_add(*pair)] * n
            for pair, n in self._n_pos.items()
        }
        return ChevalleyTable(self.rs, new)


@lru_cache(maxsize=None)
def _build_for(lie_type) -> ChevalleyTable:
    from .rootsys import build_root_system

    return ChevalleyTable(build_root_system(lie_type))


def build_chevalley(rs: RootSystem) -> ChevalleyTable:
    return _build_for(rs.lie_type)


# -- Jacobi verification ------------------------------------------------

def _jacobi_integer_exhaustive(ct: ChevalleyTable) -> bool:
    """Jacobi over all unordered root triples in the integer basis e_a.

    X_a = c_a e_a with [X_a, X_{-a}] = H_a = ((a,a)_B/2) h_a^v is a Lie
    isomorphism onto the Chevalley-basis algebra, so checking Jacobi here
    is equivalent and runs in integer arithmetic.  Triples with a repeated
    root cancel identically in any anticommutative algebra, and the Jacobi
    sum is alternating, so distinct i < j < k covers everything.
    """
    rs = ct.rs
    roots = sorted(rs.roots, key=canonical_key)
    nr = len(roots)
    idx = {r: i for i, r in enumerate(roots)}
    F = rs.symmetrized_form
    pairing = [
        [int(2 * F(c, a) / F(a, a)) for a in roots] for c in roots
    ]
    coroots = [
        tuple(Fraction(x) * d / (F(r, r) / 2) for x, d in zip(r, rs._d))
        for r in roots
    ]
    # info[i][j]: (0, i) when roots[j] == -roots[i]; (1, idx[sum], N) when the
    # sum is a root; None otherwise.
    info: list[list] = [[None] * nr for _ in range(nr)]
    nmat = [[0] * nr for _ in range(nr)]
    for i, a in enumerate(roots):
        for j, b in enumerate(roots):
            s = _add(a, b)
            if not any(s):
                info[i][j] = (0, i)
            elif s in rs.roots:
                n = ct._n_int(a, b)
                info[i][j] = (1, idx[s], n)
                nmat[i][j] = n

    zero_h = (Fraction(0),) * rs.lie_type.rank
    for i in range(nr):
        a = roots[i]
        for j in range(i + 1, nr):
            ab = _add(a, roots[j])
            for k in range(j + 1, nr):
                target = _add(ab, roots[k])
                if any(target):
                    x = 0
                    for u, v, w in ((i, j, k), (j, k, i), (k, i, j)):
                        t = info[u][v]
                        if t is None:
                            continue
                        if t[0] == 0:
                            x += pairing[w][t[1]]
                        else:
                            x += t[2] * nmat[t[1]][w]
                    if x:
                        return False
                else:
                    h = zero_h
                    for u, v in ((i, j), (j, k), (k, i)):
                        t = info[u][v]
                        if t is not None and t[0] == 1:
                            h = tuple(
                                p + t[2] * q for p, q in zip(h, coroots[t[1]])
                            )
                    if any(h):
                        return False
    return True


def verify_jacobi(ct: ChevalleyTable, trials: int, seed: int = 0) -> bool:
    """Jacobi identity: exhaustive (<= 50 roots) plus sampled X-basis triples."""
    rs = ct.rs
    if len(rs.roots) <= 50:
        if not _jacobi_integer_exhaustive(ct):
            return False
    roots = sorted(rs.roots, key=canonical_key)
    rnd = random.Random(seed)
    for _ in range(max(trials, 1)):
        a, b, c = (rnd.choice(roots) for _ in range(3))
        xa, xb, xc = ct.x(a), ct.x(b), ct.x(c)
        total = None
        for u, v, w in ((xa, xb, xc), (xb, xc, xa), (xc, xa, xb)):
            term = ct.bracket(ct.bracket(u, v), w)
            if total is None:
                total = term
            else:
                total = AlgebraElement(
                    tuple(p + q for p, q in zip(total.cartan, term.cartan)),
                    {
                        r: total.coeffs.get(r, ZERO) + term.coeffs.get(r, ZERO)
                        for r in set(total.coeffs) | set(term.coeffs)
                    },
                )
        if not total.is_zero():
            return False
    return True


def dump_constants_csv(ct: ChevalleyTable, stream) -> None:
    """CSV rows (alpha coords, beta coords, sign, radicand) in canonical order."""
    import csv

    w = csv.writer(stream)
    w.writerow(["alpha", "beta", "sign", "radicand"])
    for a, b in sorted(ct.constants, key=lambda p: (canonical_key(p[0]), canonical_key(p[1]))):
        v = ct.constants[(a, b)]
        w.writerow([" ".join(map(str, a)), " ".join(map(str, b)), v.sign, str(v.radicand)])
