"""Chern connection and curvature of invariant almost-Hermitian metrics.

The metric assigns a positive value to each summand; extended to root
vectors it pairs lambda(X_a, X_b) = -lambda_a when b = -a and 0 otherwise.
The almost complex structure contributes the sign eps_a of each root.

The Chern connection acts on root vectors through scalar coefficients: for
a, b in R_M with a+b in R_M,

    C(a, b) = m_{a,b} / (4 lambda_{a+b}) * (lambda_b * E1 + lambda_{a+b} * E2)
    E1 = 1 + eps_a eps_{a+b} + eps_a eps_b + eps_b eps_{a+b}
    E2 = 1 - eps_a eps_b - eps_a eps_{a+b} + eps_b eps_{a+b}

and C(a, b) = 0 when a+b is not in R_M.  Curvature follows the convention
R(X,Y)Z = nab_X nab_Y Z - nab_Y nab_X Z - nab_{[X,Y]_m} Z - [[X,Y]_k, Z];
its entries over quadruples of R_M roots summing to zero are

    entry(a,b,c,d) = -C(b,c) C(a,b+c) lam_d + C(a,c) C(b,a+c) lam_d
                     + (bracket term)

where the bracket term is (c,a)_B lam_c when b = -a, m_{a,b} C(a+b,c) lam_d
when a+b lands in R_M, and m_{a,b} m_{a+b,c} lam_d when it lands in R_K.
Entries with a repeated summand value are rational; mixed entries live in a
single radical class, so all arithmetic here stays exact.

The standard Hermitian-index reading is R_{a b* c d*} = entry(a,-b,c,-d).
"""

from __future__ import annotations

from fractions import Fraction

from .chevalley import ZERO, ChevalleyTable, SignedSqrt, build_chevalley
from .flagspace import FlagManifold
from .rootsys import Root, canonical_key


def _neg(r: Root) -> Root:
    return tuple(-x for x in r)


def _add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


class CurvatureEngine:
    """Curvature of one (flag, almost complex structure, metric) triple."""

    def __init__(self, flag: FlagManifold, signs, lam, table: ChevalleyTable | None = None):
        if len(signs) != flag.num_summands or len(lam) != flag.num_summands:
            raise ValueError("signs and metric must have one value per summand")
        lam = tuple(Fraction(x) for x in lam)
        if any(x <= 0 for x in lam):
            raise ValueError("metric values must be positive")
        self.flag = flag
        self.signs = tuple(signs)
        self.lam = lam
        self.ct = table if table is not None else build_chevalley(flag.rs)
        self._lambda: dict[Root, Fraction] = {}
        self._eps: dict[Root, int] = {}
        for i, g in enumerate(flag.summands):
            for r in g:
                self._lambda[r] = lam[i]
                self._lambda[_neg(r)] = lam[i]
                self._eps[r] = signs[i]
                self._eps[_neg(r)] = -signs[i]
        self.plus = flag.r_m_plus(signs)
        self._cmemo: dict[tuple[Root, Root], SignedSqrt] = {}

    def chern_coefficient(self, a: Root, b: Root) -> SignedSqrt:
        key = (a, b)
        v = self._cmemo.get(key)
        if v is None:
            v = self._chern(a, b)
            self._cmemo[key] = v
        return v

    def _chern(self, a: Root, b: Root) -> SignedSqrt:
        s = _add(a, b)
        if s not in self._lambda:
            return ZERO
        ea, eb, es = self._eps[a], self._eps[b], self._eps[s]
        e1 = 1 + ea * es + ea * eb + eb * es
        e2 = 1 - ea * eb - ea * es + eb * es
        scale = self._lambda[b] * e1 + self._lambda[s] * e2
        if scale == 0:
            return ZERO
        return self.ct.m(a, b) * (scale / (4 * self._lambda[s]))

    def entry(self, a: Root, b: Root, c: Root, d: Root) -> SignedSqrt:
        lam = self._lambda
        assert a in lam and b in lam and c in lam and d in lam
        if any(_add(_add(a, b), _add(c, d))):
            return ZERO
        total = ZERO
        t1 = self.chern_coefficient(b, c)
        if t1.sign:
            total = total + (-t1) * self.chern_coefficient(a, _add(b, c)) * lam[d]
        t2 = self.chern_coefficient(a, c)
        if t2.sign:
            total = total + t2 * self.chern_coefficient(b, _add(a, c)) * lam[d]
        ab = _add(a, b)
        if not any(ab):
            total = total + SignedSqrt.from_rational(
                self.flag.rs.killing_inner(c, a) * lam[c]
            )
        elif ab in lam:
            m = self.ct.m(a, b)
            if m.sign:
                total = total + m * self.chern_coefficient(ab, c) * lam[d]
        elif ab in self.flag.r_k:
            m = self.ct.m(a, b)
            if m.sign:
                total = total + m * self.ct.m(ab, c) * lam[d]
        return total

    def curvature(self, alpha: Root, beta: Root, gamma: Root, delta: Root) -> SignedSqrt:
        """R_{alpha beta* gamma delta*}."""
        return self.entry(alpha, _neg(beta), gamma, _neg(delta))

    def diag_pair_oracle(self, alpha: Root, gamma: Root) -> tuple[Fraction, Fraction]:
        """Closed forms for R_{a a* g g*} and R_{a g* g a*}, J-positive a, g.

        Independent of the connection-coefficient path: only structure
        constants, the Killing form and the metric values enter.
        """
        lam, eps = self._lambda, self._eps
        assert eps[alpha] == 1 and eps[gamma] == 1
        B = self.flag.rs.killing_inner
        if alpha == gamma:
            v = lam[alpha] * B(alpha, alpha)
            return v, v
        msq = self.ct.m_squared
        diff = _sub(gamma, alpha)
        tot = _add(gamma, alpha)
        m_down = msq(alpha, _neg(gamma))
        m_up = msq(alpha, gamma)
        f1 = lam[gamma] * (m_down - m_up)
        if diff in lam and eps[diff] == 1:
            f1 -= lam[diff] * m_down
        if tot in lam and eps[tot] == 1:
            f1 += lam[gamma] * lam[gamma] / lam[tot] * m_up
        f2 = Fraction(0)
        if tot in lam and eps[tot] == 1:
            f2 -= lam[alpha] * lam[gamma] / lam[tot] * m_up
        if diff in lam:
            xi = lam[alpha] if eps[diff] == 1 else lam[gamma]
        else:
            xi = lam[gamma]
        f2 += m_down * xi
        return f1, f2

    def tensor(self) -> dict[tuple[Root, Root, Root, Root], SignedSqrt]:
        """All nonzero entries, keyed by zero-sum quadruples of R_M roots."""
        members = sorted(self._lambda, key=canonical_key)
        memberset = set(members)
        out = {}
        for a in members:
            for b in members:
                ab = _add(a, b)
                for c in members:
                    d = _neg(_add(ab, c))
                    if d in memberset:
                        v = self.entry(a, b, c, d)
                        if v.sign:
                            out[(a, b, c, d)] = v
        return out


def dump_tensor_csv(engine: CurvatureEngine, stream) -> None:
    """Nonzero entries as CSV; the key (a,b,c,d) reads R_{a,-b*,c,-d*}."""
    import csv

    w = csv.writer(stream)
    w.writerow(["a", "b", "c", "d", "sign", "radicand"])
    for key, v in sorted(engine.tensor().items()):
        w.writerow([" ".join(map(str, k)) for k in key] + [v.sign, str(v.radicand)])
