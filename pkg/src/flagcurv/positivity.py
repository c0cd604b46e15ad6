"""Positivity of the curvature: Griffiths, Nakano and dual-Nakano.

The three notions are quadratic conditions on the curvature tensor over
the J-positive roots p_1, ..., p_n:

    Griffiths:    sum R_{a b* c d*} u_a conj(u_b) v_c conj(v_d) >= 0,
    Nakano:       the Hermitian matrix  N[(a,c),(b,d)] = R_{a b* c d*},
    dual Nakano:  the Hermitian matrix  M[(a,d),(b,c)] = R_{a b* c d*}.

All entries here are real, and the engine satisfies the reality identity
R_{a b* c d*} = R_{b a* d c*}, so both matrices are symmetric.  Whenever a
matrix is entirely rational (repeated summand values force this on many
flags) definiteness is decided exactly by an LDL^T sweep that also returns
an explicit negative-direction witness; otherwise a float eigenvalue check
with a relative tolerance stands in.

A cheap and fully rigorous negativity source is the diagonal: for
J-positive roots a, g with a+g in R_M and a-g not a root, the value
R_{a a* g g*} is negative for every metric when eps_{a+g} = -1, and for
every quasi-Kahler metric when eps_{a+g} = +1.  Such a pair is recorded as
a LemmaCertificate, and a 2-SAT pass over the summand signs decides in one
sweep whether every almost complex structure of a flag admits one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from math import lcm

import numpy as np

from .chevalley import SignedSqrt
from .curvature import CurvatureEngine
from .exactla import nullspace
from .flagspace import FlagManifold, build_flag, is_quasi_kahler
from .rootsys import LieType, Root, c_series_label, c_root_from_lambda, canonical_key


def _neg(r: Root) -> Root:
    return tuple(-x for x in r)


def _add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


class Verdict(Enum):
    DUAL_NAKANO_POSITIVE = "dual-Nakano positive"
    DUAL_NAKANO_SEMIPOSITIVE = "dual-Nakano semipositive"
    NAKANO_POSITIVE = "Nakano positive"
    NAKANO_SEMIPOSITIVE = "Nakano semipositive"
    GRIFFITHS_VIOLATED = "Griffiths positivity violated"
    GRIFFITHS_SAMPLED_NONNEGATIVE = "Griffiths nonnegative on all samples"
    INDETERMINATE = "indeterminate"


# -- diagonal certificates -------------------------------------------------


@dataclass(frozen=True)
class LemmaCertificate:
    """J-positive pair (alpha, gamma): alpha+gamma in R_M, alpha-gamma not a root.

    When eps_sum is -1 the diagonal R_{a a* g g*} = -m^2_{a,g} lam_g is
    negative for every invariant metric; when +1 it equals
    m^2 lam_g (lam_g / lam_{a+g} - 1), negative for every quasi-Kahler
    metric because those satisfy lam_{a+g} = lam_a + lam_g.
    """

    alpha: Root
    gamma: Root
    eps_sum: int

    def describe(self) -> str:
        scope = "every metric" if self.eps_sum == -1 else "every quasi-Kahler metric"
        return (
            f"pair ({self.alpha}, {self.gamma}) forces a negative Griffiths "
            f"diagonal for {scope}"
        )


def lemma_certificate(flag: FlagManifold, signs) -> LemmaCertificate | None:
    plus = sorted(flag.r_m_plus(signs), key=canonical_key)
    roots = flag.rs.roots
    for alpha, gamma in combinations(plus, 2):
        s = _add(alpha, gamma)
        if s in flag.r_m and _sub(alpha, gamma) not in roots:
            return LemmaCertificate(alpha, gamma, flag.epsilon(signs, s))
    return None


def certificate_value(engine: CurvatureEngine, cert: LemmaCertificate) -> Fraction:
    """The certified diagonal R_{a a* g g*} under the engine's metric."""
    f1, _ = engine.diag_pair_oracle(cert.alpha, cert.gamma)
    return f1


def is_certificate_pair(flag: FlagManifold, signs, alpha: Root, gamma: Root) -> bool:
    """Whether (alpha, gamma) satisfies the certificate conditions under J."""
    plus = set(flag.r_m_plus(signs))
    if alpha not in plus or gamma not in plus:
        return False
    s = _add(alpha, gamma)
    return s in flag.r_m and _sub(alpha, gamma) not in flag.rs.roots


def _two_sat(nvars: int, clauses) -> list[bool] | None:
    """Clauses of two literals (var, is_positive); assignment or None."""
    size = 2 * nvars
    adj = [[] for _ in range(size)]
    radj = [[] for _ in range(size)]

    def node(var, positive):
        return 2 * var + (0 if positive else 1)

    for (v1, p1), (v2, p2) in clauses:
        # (l1 or l2): not l1 -> l2, not l2 -> l1
        a, na = node(v1, p1), node(v1, not p1)
        b, nb = node(v2, p2), node(v2, not p2)
        adj[na].append(b)
        radj[b].append(na)
        adj[nb].append(a)
        radj[a].append(nb)

    order = []
    seen = [False] * size
    for start in range(size):
        if seen[start]:
            continue
        stack = [(start, iter(adj[start]))]
        seen[start] = True
        while stack:
            n, it = stack[-1]
            for nxt in it:
                if not seen[nxt]:
                    seen[nxt] = True
                    stack.append((nxt, iter(adj[nxt])))
                    break
            else:
                order.append(n)
                stack.pop()
    comp = [-1] * size
    c = 0
    for start in reversed(order):
        if comp[start] != -1:
            continue
        stack = [start]
        comp[start] = c
        while stack:
            n = stack.pop()
            for nxt in radj[n]:
                if comp[nxt] == -1:
                    comp[nxt] = c
                    stack.append(nxt)
        c += 1
    out = []
    for v in range(nvars):
        if comp[2 * v] == comp[2 * v + 1]:
            return None
        out.append(comp[2 * v] < comp[2 * v + 1])
    return out


def _certificate_clauses(flag: FlagManifold):
    """2-SAT clauses a certificate-free sign choice must satisfy.

    For each root pair p, q in R_M with p+q in R_M and p-q not a root, a
    certificate-free J must avoid eps_p = eps_q = +1, a two-literal clause
    over the summand signs.  Pairs come in (p,q)/(-p,-q) mirror images, so
    the clause set is closed under the global sign flip.
    """
    rm = sorted(flag.r_m, key=canonical_key)
    roots = flag.rs.roots
    pos = flag._pos_m_set
    clauses = []
    for p, q in combinations(rm, 2):
        s = _add(p, q)
        if s in flag.r_m and _sub(p, q) not in roots:
            lp = (flag.summand_of[p], p not in pos)  # literal "eps_p = +1"
            lq = (flag.summand_of[q], q not in pos)
            clauses.append(((lp[0], not lp[1]), (lq[0], not lq[1])))
    return clauses


def acs_without_certificate(flag: FlagManifold):
    """An almost complex structure with no LemmaCertificate, or None.

    None means every choice of summand signs admits a certificate.
    """
    assignment = _two_sat(flag.num_summands, _certificate_clauses(flag))
    if assignment is None:
        return None
    signs = tuple(1 if b else -1 for b in assignment)
    if signs[0] == -1:
        signs = tuple(-s for s in signs)
    return signs


def certificate_free_acs(flag: FlagManifold) -> tuple:
    """All ACS with no certificate pair, normalized to first sign +1.

    Branch-and-prune over the summand variables with the 2-SAT solver as
    feasibility oracle, so the cost is linear in the number of solutions
    even when enumerating all 2^(k-1) structures would be hopeless.
    """
    k = flag.num_summands
    clauses = _certificate_clauses(flag)
    out = []

    def feasible(fixed):
        units = [((v, b), (v, b)) for v, b in fixed]
        return _two_sat(k, clauses + units) is not None

    def walk(fixed):
        var = len(fixed)
        if var == k:
            out.append(tuple(1 if b else -1 for _, b in fixed))
            return
        for b in (True, False):
            trial = fixed + [(var, b)]
            if feasible(trial):
                walk(trial)

    if feasible([(0, True)]):
        walk([(0, True)])
    return tuple(out)


# -- Hermitian blocks ------------------------------------------------------


@dataclass
class HermitianBlock:
    """Real symmetric matrix over composite root-pair indices."""

    labels: tuple
    entries: tuple

    @property
    def size(self) -> int:
        return len(self.labels)

    def exact(self):
        """Fraction matrix when every entry is rational, else None."""
        out = []
        for row in self.entries:
            try:
                out.append([v.to_fraction() for v in row])
            except ValueError:
                return None
        return out

    def floats(self) -> np.ndarray:
        return np.array(
            [[float(v) for v in row] for row in self.entries], dtype=float
        )


def _block(engine: CurvatureEngine, row_slots, col_slots) -> HermitianBlock:
    plus = engine.plus
    labels = tuple((p, q) for p in plus for q in plus)
    pairs = labels
    rows = []
    for ra, rb in pairs:
        row = []
        for ca, cb in pairs:
            slots = {"a": None, "b": None, "c": None, "d": None}
            slots[row_slots[0]] = ra
            slots[row_slots[1]] = rb
            slots[col_slots[0]] = ca
            slots[col_slots[1]] = cb
            row.append(
                engine.entry(
                    slots["a"], _neg(slots["b"]), slots["c"], _neg(slots["d"])
                )
            )
        rows.append(tuple(row))
    block = HermitianBlock(labels, tuple(rows))
    for i in range(block.size):
        for j in range(i):
            assert rows[i][j] == rows[j][i], "curvature block must be symmetric"
    return block


def nakano_matrix(engine: CurvatureEngine) -> HermitianBlock:
    """Rows (a,c) unbarred, columns (b,d) barred: N = R_{a b* c d*}."""
    return _block(engine, ("a", "c"), ("b", "d"))


def dual_nakano_matrix(engine: CurvatureEngine) -> HermitianBlock:
    """Rows (a,d), columns (b,c): M = R_{a b* c d*}."""
    return _block(engine, ("a", "d"), ("b", "c"))


def diagonal_pair_block(block: HermitianBlock, order):
    """Submatrix over composite labels (p, p), rows ordered by `order`."""
    idx = {lab: i for i, lab in enumerate(block.labels)}
    return [
        [block.entries[idx[(p, p)]][idx[(q, q)]] for q in order] for p in order
    ]


# -- definiteness ----------------------------------------------------------


@dataclass
class PsdResult:
    is_psd: bool
    is_pd: bool
    witness: tuple | None = None  # v^T H v < 0 direction, or a kernel vector
    min_eigenvalue: float | None = None
    exact: bool = True


def _float_min_eig(matrix) -> float:
    h = np.array([[float(x) for x in row] for row in matrix], dtype=float)
    return float(np.linalg.eigvalsh(h)[0])


def psd_exact(matrix) -> PsdResult:
    """LDL^T definiteness of a symmetric rational matrix, with witness.

    When not PSD the witness v satisfies v^T H v < 0 exactly; when PSD but
    singular it is an exact kernel vector.  The reported min eigenvalue is
    a float eigensolve byproduct and never drives the verdict.
    """
    n = len(matrix)
    if n == 0:
        return PsdResult(True, True)
    denoms = [Fraction(x).denominator for row in matrix for x in row]
    scale = lcm(*denoms)
    a = [[Fraction(x) * scale for x in row] for row in matrix]
    processed: list[tuple[int, Fraction, list[Fraction]]] = []
    kernel_index: int | None = None

    def lift(x: list[Fraction]) -> tuple[Fraction, ...]:
        v = list(x)
        for k, d, row in reversed(processed):
            v[k] = -sum(row[j] * v[j] for j in range(k + 1, n) if v[j]) / d
        return tuple(v)

    min_eig = _float_min_eig(matrix)
    for k in range(n):
        d = a[k][k]
        if d == 0:
            j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
            if j is None:
                if kernel_index is None:
                    kernel_index = k
                continue
            x = [Fraction(0)] * n
            x[j] = Fraction(1)
            x[k] = -(a[j][j] + 1) / (2 * a[k][j])
            return PsdResult(False, False, lift(x), min_eig)
        if d < 0:
            x = [Fraction(0)] * n
            x[k] = Fraction(1)
            return PsdResult(False, False, lift(x), min_eig)
        row = list(a[k])
        processed.append((k, d, row))
        for i in range(k + 1, n):
            f = a[i][k]
            if f:
                f /= d
                ai = a[i]
                for j in range(k, n):
                    ai[j] -= f * row[j]
    if kernel_index is not None:
        x = [Fraction(0)] * n
        x[kernel_index] = Fraction(1)
        return PsdResult(True, False, lift(x), min_eig)
    return PsdResult(True, True, None, min_eig)


def psd_float(h: np.ndarray, tolerance: float = 1e-9) -> PsdResult:
    if h.size == 0:
        return PsdResult(True, True, exact=False)
    w, vecs = np.linalg.eigh(h)
    scale = max(1.0, float(np.abs(h).max()))
    lo = float(w[0])
    is_psd = lo >= -tolerance * scale
    is_pd = lo > tolerance * scale
    witness = None if is_pd else tuple(float(x) for x in vecs[:, 0])
    return PsdResult(is_psd, is_pd, witness, lo, exact=False)


def check_psd(h, mode: str = "exact-if-rational", tolerance: float = 1e-9) -> PsdResult:
    """Definiteness of a symmetric matrix (HermitianBlock, rows, or array).

    mode "exact-if-rational" uses the LDL^T sweep whenever every entry is
    rational and falls back to a float eigensolve; mode "float" always uses
    the eigensolve with relative tolerance.
    """
    if mode not in ("exact-if-rational", "float"):
        raise ValueError(f"unknown mode {mode!r}")
    if isinstance(h, HermitianBlock):
        exact = h.exact() if mode == "exact-if-rational" else None
        if exact is not None:
            return psd_exact(exact)
        return psd_float(h.floats(), tolerance)
    if isinstance(h, np.ndarray):
        return psd_float(h, tolerance)
    if mode == "exact-if-rational":
        try:
            return psd_exact([[Fraction(x) for x in row] for row in h])
        except (TypeError, ValueError):
            pass
    return psd_float(np.array([[float(x) for x in row] for row in h]), tolerance)


# -- Griffiths form --------------------------------------------------------


def griffiths_form(engine: CurvatureEngine, u, v):
    """sum R_{a b* c d*} u_a conj(u_b) v_c conj(v_d) over engine.plus.

    Exact (Fraction) for rational vectors when all contributing entries are
    rational; complex vectors are evaluated in floats (the value is real and
    returned as such).
    """
    plus = engine.plus
    n = len(plus)
    assert len(u) == n and len(v) == n
    try:
        u = [Fraction(x) for x in u]
        v = [Fraction(x) for x in v]
    except (TypeError, ValueError):
        r4 = _curvature_array(engine)
        ua = np.asarray(u, dtype=complex)
        va = np.asarray(v, dtype=complex)
        return float(
            np.einsum("abcd,a,b,c,d->", r4, ua, ua.conj(), va, va.conj()).real
        )
    exact_total = Fraction(0)
    float_total = 0.0
    exact_ok = True
    for i in range(n):
        if not u[i]:
            continue
        for j in range(n):
            if not u[j]:
                continue
            for k in range(n):
                if not v[k]:
                    continue
                for l in range(n):
                    if not v[l]:
                        continue
                    e = engine.entry(plus[i], _neg(plus[j]), plus[k], _neg(plus[l]))
                    if not e.sign:
                        continue
                    w = u[i] * u[j] * v[k] * v[l]
                    if exact_ok:
                        try:
                            exact_total += e.to_fraction() * w
                        except ValueError:
                            exact_ok = False
                            float_total = float(exact_total)
                    if not exact_ok:
                        float_total += float(e) * float(w)
    return exact_total if exact_ok else float_total


def griffiths_scan(engine: CurvatureEngine):
    """First exactly negative diagonal R_{a a* g g*}, as (a, g, value)."""
    plus = sorted(engine.plus, key=canonical_key)
    for a in plus:
        for g in plus:
            f1, _ = engine.diag_pair_oracle(a, g)
            if f1 < 0:
                return a, g, f1
    return None


def _curvature_array(engine: CurvatureEngine) -> np.ndarray:
    plus = engine.plus
    n = len(plus)
    r4 = np.zeros((n, n, n, n))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    e = engine.entry(plus[i], _neg(plus[j]), plus[k], _neg(plus[l]))
                    if e.sign:
                        r4[i, j, k, l] = float(e)
    return r4


def griffiths_falsify(
    engine: CurvatureEngine,
    samples: int = 10000,
    seed: int = 0,
    tolerance: float = 1e-9,
):
    """Search for u, v with negative Griffiths value.

    Exact diagonal scan first; then seeded complex rank-one samples against
    the float tensor.  Returns (u, v, value) or None.
    """
    hit = griffiths_scan(engine)
    n = len(engine.plus)
    if hit is not None:
        a, g, value = hit
        u = tuple(Fraction(1) if p == a else Fraction(0) for p in engine.plus)
        v = tuple(Fraction(1) if p == g else Fraction(0) for p in engine.plus)
        return u, v, value
    r4 = _curvature_array(engine)
    scale = max(1.0, float(np.abs(r4).max()))
    rng = np.random.default_rng(seed)
    best = None
    chunk = 2000
    done = 0
    while done < samples:
        m = min(chunk, samples - done)
        uu = rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))
        vv = rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))
        uu /= np.linalg.norm(uu, axis=1, keepdims=True)
        vv /= np.linalg.norm(vv, axis=1, keepdims=True)
        mid = np.einsum("abcd,sa,sb->scd", r4, uu, uu.conj())
        vals = np.einsum("scd,sc,sd->s", mid, vv, vv.conj()).real
        i = int(np.argmin(vals))
        if best is None or vals[i] < best[2]:
            best = (uu[i], vv[i], float(vals[i]))
        done += m
    if best is not None and best[2] < -tolerance * scale:
        u, v, value = best
        return tuple(u), tuple(v), value
    return None


# -- verdicts ----------------------------------------------------------------


@dataclass
class PositivityVerdict:
    kind: Verdict
    detail: str
    certificate: LemmaCertificate | None = None
    witness: tuple | None = None
    min_eigenvalue: float | None = None
    diagnostics: dict = field(default_factory=dict)


def classify_engine(
    engine: CurvatureEngine,
    samples: int = 10000,
    seed: int = 0,
    tolerance: float = 1e-9,
) -> PositivityVerdict:
    """Decide the strongest positivity property of the engine's curvature."""
    flag, signs, lam = engine.flag, engine.signs, engine.lam
    hit = griffiths_scan(engine)
    if hit is not None:
        a, g, value = hit
        cert = None
        if is_quasi_kahler(flag, signs, lam):
            cert = lemma_certificate(flag, signs)
        return PositivityVerdict(
            Verdict.GRIFFITHS_VIOLATED,
            f"diagonal pair ({a}, {g}) has curvature {value} < 0",
            certificate=cert,
            witness=(a, g, value),
            diagnostics={"diagonal_value": value},
        )
    dn = check_psd(dual_nakano_matrix(engine), tolerance=tolerance)
    diag = {"dual_nakano": dn}
    if dn.is_pd:
        return PositivityVerdict(
            Verdict.DUAL_NAKANO_POSITIVE, "dual-Nakano matrix positive definite",
            min_eigenvalue=dn.min_eigenvalue, diagnostics=diag,
        )
    if dn.is_psd:
        return PositivityVerdict(
            Verdict.DUAL_NAKANO_SEMIPOSITIVE,
            "dual-Nakano matrix positive semidefinite with kernel",
            min_eigenvalue=dn.min_eigenvalue, diagnostics=diag,
        )
    nk = check_psd(nakano_matrix(engine), tolerance=tolerance)
    diag["nakano"] = nk
    if nk.is_pd:
        return PositivityVerdict(
            Verdict.NAKANO_POSITIVE, "Nakano matrix positive definite",
            min_eigenvalue=nk.min_eigenvalue, diagnostics=diag,
        )
    if nk.is_psd:
        return PositivityVerdict(
            Verdict.NAKANO_SEMIPOSITIVE,
            "Nakano matrix positive semidefinite with kernel",
            min_eigenvalue=nk.min_eigenvalue, diagnostics=diag,
        )
    falsified = griffiths_falsify(engine, samples, seed, tolerance)
    if falsified is not None:
        u, v, value = falsified
        return PositivityVerdict(
            Verdict.GRIFFITHS_VIOLATED,
            f"sampled directions give Griffiths value {value}",
            witness=(u, v, value),
            min_eigenvalue=dn.min_eigenvalue,
            diagnostics=diag,
        )
    return PositivityVerdict(
        Verdict.GRIFFITHS_SAMPLED_NONNEGATIVE,
        "neither matrix notion holds, no negative Griffiths direction found",
        min_eigenvalue=dn.min_eigenvalue,
        diagnostics=diag,
    )


def classify(
    flag: FlagManifold,
    signs,
    lam,
    samples: int = 10000,
    seed: int = 0,
    tolerance: float = 1e-9,
    table=None,
) -> PositivityVerdict:
    engine = CurvatureEngine(flag, signs, lam, table)
    return classify_engine(engine, samples, seed, tolerance)


# -- the projective-space family -------------------------------------------


class CpnMatrix:
    """The (2n-1)x(2n-1) diagonal curvature block of CP^{2n-1}.

    Basis order (l1-l2, l1+l2, ..., l1-ln, l1+ln, 2l1); the metric gives
    the short summand 1 and the top root t.  With phi = 1/(2(n+1)) the
    entries are: diagonal phi except the corner 2t phi, partner off-diagonal
    phi (1 - 1/t), other short pairs phi/2, last row and column phi.
    """

    def __init__(self, n: int, t, verify_engine: bool = True):
        if n < 2:
            raise ValueError("need n >= 2")
        t = Fraction(t)
        if t <= 0:
            raise ValueError("t must be positive")
        self.n = n
        self.t = t
        size = 2 * n - 1
        phi = Fraction(1, 2 * (n + 1))
        m = [[Fraction(0)] * size for _ in range(size)]
        for i in range(size - 1):
            m[i][i] = phi
            m[i][size - 1] = phi
            m[size - 1][i] = phi
            for j in range(size - 1):
                if j == i:
                    continue
                m[i][j] = phi * (1 - 1 / t) if j == i ^ 1 else phi / 2
        m[size - 1][size - 1] = 2 * t * phi
        self.matrix = tuple(tuple(row) for row in m)
        lam_vectors = []
        for j in range(2, n + 1):
            minus = [0] * n
            minus[0], minus[j - 1] = 1, -1
            plus = [0] * n
            plus[0], plus[j - 1] = 1, 1
            lam_vectors.append(tuple(minus))
            lam_vectors.append(tuple(plus))
        top = [0] * n
        top[0] = 2
        lam_vectors.append(tuple(top))
        self.roots = tuple(c_root_from_lambda(n, v) for v in lam_vectors)
        self.labels = tuple(c_series_label(n, r) for r in self.roots)
        if verify_engine:
            self._verify()

    def _verify(self):
        # entrywise comparison with the dual-Nakano matrix restricted to the
        # diagonal pairs (alpha, alpha), in this basis order
        flag = build_flag(LieType("C", self.n), range(2, self.n + 1))
        eng = CurvatureEngine(flag, (1, 1), (Fraction(1), self.t))
        for i, ri in enumerate(self.roots):
            for j, rj in enumerate(self.roots):
                want = eng.curvature(ri, rj, rj, ri).to_fraction()
                assert self.matrix[i][j] == want, (self.labels[i], self.labels[j])

    def det(self) -> Fraction:
        n = len(self.matrix)
        mat = [list(row) for row in self.matrix]
        det = Fraction(1)
        for col in range(n):
            piv = next((i for i in range(col, n) if mat[i][col] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != col:
                mat[col], mat[piv] = mat[piv], mat[col]
                det = -det
            det *= mat[col][col]
            inv = 1 / mat[col][col]
            mat[col] = [x * inv for x in mat[col]]
            for i in range(col + 1, n):
                f = mat[i][col]
                if f:
                    mat[i] = [x - f * y for x, y in zip(mat[i], mat[col])]
        return det

    def kernel(self):
        return nullspace(self.matrix, len(self.matrix))

    def definiteness(self) -> PsdResult:
        return psd_exact([list(row) for row in self.matrix])


def build_cpn_matrix(n: int, t, verify_engine: bool = True) -> CpnMatrix:
    return CpnMatrix(n, t, verify_engine)
