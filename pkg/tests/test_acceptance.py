"""Acceptance gate: one test per headline claim, run at desk scale.

Each test states a complete mathematical claim and checks it at its stated
tolerance; pytest's per-test line is the pass/fail record.  The two sweep
tests carry their own runtime budgets, measured with perf_counter.
"""

import itertools
import random
import time
from fractions import Fraction as F

from flagcurv.campaigns import run_campaign
from flagcurv.chevalley import build_chevalley, _jacobi_integer_exhaustive
from flagcurv.curvature import CurvatureEngine
from flagcurv.flagspace import build_flag, kahler_metrics, quasi_kahler_metrics
from flagcurv.positivity import (
    CpnMatrix,
    check_psd,
    dual_nakano_matrix,
    griffiths_scan,
    classify,
)
from flagcurv.rootsys import LieType, build_root_system, c_root_from_lambda

_TABLES = {}


def table_for(lt):
    if lt not in _TABLES:
        _TABLES[lt] = build_chevalley(build_root_system(lt))
    return _TABLES[lt]


def types_rank_le(bound):
    out = []
    for series, low in (("A", 1), ("B", 2), ("C", 2), ("D", 3), ("G", 2), ("F", 4)):
        high = {"G": 2, "F": 4}.get(series, bound)
        out.extend(LieType(series, n) for n in range(low, high + 1) if n <= bound)
    return out


def flags_rank_le(bound):
    for lt in types_rank_le(bound):
        for r in range(lt.rank):
            for ks in itertools.combinations(range(1, lt.rank + 1), r):
                yield build_flag(lt, ks)


def sp_flag(n):
    return build_flag(LieType("C", n), range(2, n + 1))


def _neg(r):
    return tuple(-x for x in r)


def test_01_structure_constant_identities_and_jacobi():
    # antisymmetry, negation, cyclic rotation and the magnitude law hold for
    # every root pair at rank <= 4; Jacobi holds exhaustively on every system
    # with at most 50 roots; all of it inside a 10 second budget
    start = time.perf_counter()
    for lt in types_rank_le(4):
        table = table_for(lt)
        rs = table.rs
        assert len(rs.roots) <= 50
        for (a, b), value in table.constants.items():
            s = tuple(x + y for x, y in zip(a, b))
            assert value == -table.m(b, a)
            assert value == -table.m(_neg(a), _neg(b))
            assert value == table.m(b, _neg(s))
            p, q = rs.root_string(a, b)
            assert value.square() == F(q * (1 + p), 2) * rs.killing_inner(a, a)
        assert _jacobi_integer_exhaustive(table)
    assert time.perf_counter() - start < 10.0


def test_02_c_series_normalized_constants_and_norms():
    for n in range(2, 7):
        lt = LieType("C", n)
        table = table_for(lt)
        rs = table.rs
        two_l1 = c_root_from_lambda(n, (2,) + (0,) * (n - 1))
        assert rs.killing_inner(two_l1, two_l1) == F(1, n + 1)
        for j in range(2, n + 1):
            l1_minus_lj = c_root_from_lambda(
                n, tuple(1 if i == 0 else (-1 if i == j - 1 else 0) for i in range(n))
            )
            assert rs.killing_inner(l1_minus_lj, l1_minus_lj) == F(1, 2 * (n + 1))
            assert table.m_squared(two_l1, _neg(l1_minus_lj)) == F(1, 2 * (n + 1))
            for k in range(2, n + 1):
                if k == j:
                    continue
                for sign in (1, -1):
                    other = c_root_from_lambda(
                        n,
                        tuple(
                            -1 if i == 0 else (sign if i == k - 1 else 0)
                            for i in range(n)
                        ),
                    )
                    assert table.m_squared(l1_minus_lj, other) == F(1, 4 * (n + 1))


def test_03_summand_and_acs_counts():
    for n in range(2, 7):
        fl = sp_flag(n)
        assert fl.num_summands == 2
        assert len(fl.enumerate_acs()) == 2

    g2_alpha = build_flag(LieType("G", 2), [1])
    assert g2_alpha.num_summands == 2
    g2_beta = build_flag(LieType("G", 2), [2])
    assert g2_beta.num_summands == 3
    assert len(g2_beta.enumerate_acs()) == 4

    f4_bcd = build_flag(LieType("F", 4), [2, 3, 4])
    assert f4_bcd.num_summands == 2
    f4_abd = build_flag(LieType("F", 4), [1, 2, 4])
    assert f4_abd.num_summands == 4
    assert len(f4_abd.enumerate_acs()) == 8


def test_04_sp_kahler_ray_and_quasi_kahler_family():
    for n in range(2, 7):
        fl = sp_flag(n)
        cone = kahler_metrics(fl, (1, 1))
        assert cone.is_ray()
        assert tuple(cone.sample) == (1, 2)
        assert cone.contains((F(3), F(6)))
        assert not cone.contains((F(1), F(1)))

        qk = quasi_kahler_metrics(fl, (1, -1))
        assert not qk.rows  # no constraints: every (1, t) qualifies
        assert qk.nullity == 2
        for t in (F(1, 2), F(1), F(7)):
            assert qk.contains((F(1), t))


def test_05_curvature_engine_matches_diagonal_oracle():
    # engine entries R_{a a* g g*} and R_{a g* g a*} agree exactly with the
    # closed-form diagonal values on every flag of rank <= 4, sampling at
    # most 8 structures per flag and 5 random rational metrics each, within
    # a 2 minute budget
    rnd = random.Random(20240817)
    start = time.perf_counter()
    for fl in flags_rank_le(4):
        table = table_for(fl.rs.lie_type)
        structures = list(fl.enumerate_acs())
        if len(structures) > 8:
            structures = rnd.sample(structures, 8)
        for signs in structures:
            for _ in range(5):
                lam = tuple(
                    F(rnd.randint(1, 9), rnd.randint(1, 4))
                    for _ in range(fl.num_summands)
                )
                eng = CurvatureEngine(fl, signs, lam, table=table)
                for a in eng.plus:
                    for c in eng.plus:
                        f1, f2 = eng.diag_pair_oracle(a, c)
                        assert eng.curvature(a, a, c, c).to_fraction() == f1
                        assert eng.curvature(a, c, c, a).to_fraction() == f2
    assert time.perf_counter() - start < 120.0


def _l_root(n, j, sign):
    # the root l1 + sign*lj in simple-root coordinates
    return c_root_from_lambda(
        n, tuple(1 if i == 0 else (sign if i == j - 1 else 0) for i in range(n))
    )


def test_06_odd_projective_curvature_blocks():
    for n in (2, 3, 4):
        for t in (F(1, 2), F(1), F(3, 2), F(2)):
            _check_projective_blocks(n, t)


def _check_projective_blocks(n, t):
    fl = sp_flag(n)
    table = table_for(fl.rs.lie_type)
    eng = CurvatureEngine(fl, (1, 1), (F(1), t), table=table)
    phi = F(1, 2 * (n + 1))
    top = c_root_from_lambda(n, (2,) + (0,) * (n - 1))

    def curv(a, b, c, d):
        return eng.curvature(a, b, c, d).to_fraction()

    # first displayed block: Griffiths diagonals R_{a a* g g*}
    assert curv(top, top, top, top) == 2 * t * phi
    for j in range(2, n + 1):
        for sj in (1, -1):
            r = _l_root(n, j, sj)
            partner = _l_root(n, j, -sj)
            assert curv(top, top, r, r) == phi
            assert curv(r, r, top, top) == (t - 1) * phi
            assert curv(r, r, r, r) == phi
            assert curv(r, r, partner, partner) == phi / t
            for k in range(2, n + 1):
                if k == j:
                    continue
                for sk in (1, -1):
                    assert curv(r, r, _l_root(n, k, sk), _l_root(n, k, sk)) == phi / 2

    # second displayed block: the mixed entries R_{a g* g a*}
    for j in range(2, n + 1):
        for sj in (1, -1):
            r = _l_root(n, j, sj)
            partner = _l_root(n, j, -sj)
            assert curv(r, top, top, r) == phi
            assert curv(top, r, r, top) == phi
            assert curv(partner, r, r, partner) == (1 - 1 / t) * phi
            for k in range(2, n + 1):
                if k == j:
                    continue
                for sk in (1, -1):
                    q = _l_root(n, k, sk)
                    assert curv(q, r, r, q) == phi / 2

    # the same mixed entries assembled as a matrix, against the printed
    # pattern: diagonal 1, partner pairs 1 - 1/t, other short pairs 1/2,
    # last row and column 1, corner 2t, all scaled by 1/(2(n+1))
    size = 2 * n - 1
    expected = [[phi / 2] * size for _ in range(size)]
    for i in range(size - 1):
        expected[i][i] = phi
        expected[i][size - 1] = phi
        expected[size - 1][i] = phi
    for j in range(n - 1):
        expected[2 * j][2 * j + 1] = (1 - 1 / t) * phi
        expected[2 * j + 1][2 * j] = (1 - 1 / t) * phi
    expected[size - 1][size - 1] = 2 * t * phi
    cpn = CpnMatrix(n, t, verify_engine=True)  # checks every entry at the engine
    assert [list(row) for row in cpn.matrix] == expected


def test_07_odd_projective_positivity_threshold():
    # the full dual-Nakano matrix of (1, t) on Sp(n)/(Sp(n-1) x U(1)) is PSD
    # iff t >= 1 and PD iff t > 1, for n up to 6
    for n in range(2, 7):
        fl = sp_flag(n)
        table = table_for(fl.rs.lie_type)
        for t in (F(1), F(3, 2), F(2), F(5)):
            eng = CurvatureEngine(fl, (1, 1), (F(1), t), table=table)
            res = check_psd(dual_nakano_matrix(eng), mode="float")
            assert res.is_psd, (n, t)
            assert res.is_pd == (t > 1), (n, t)
            if t == 1:
                assert abs(res.min_eigenvalue) <= 1e-12
        for t in (F(1, 2), F(3, 4)):
            eng = CurvatureEngine(fl, (1, 1), (F(1), t), table=table)
            witness = griffiths_scan(eng)
            assert witness is not None and witness[2] < 0, (n, t)


def test_08_unit_metric_is_dual_nakano_semipositive_when_integrable():
    # with every weight equal to 1, each integrable structure on each flag of
    # rank <= 3 (the three G2 flags included) has PSD dual-Nakano matrix
    for fl in flags_rank_le(3):
        table = table_for(fl.rs.lie_type)
        lam = tuple([F(1)] * fl.num_summands)
        for signs in fl.enumerate_acs():
            if not fl.is_integrable(signs):
                continue
            eng = CurvatureEngine(fl, signs, lam, table=table)
            res = check_psd(dual_nakano_matrix(eng), mode="float")
            assert res.is_psd, (fl.label(), signs, res.min_eigenvalue)


_FAMILY_SHAPES = (
    "SU(", "Sp(", "SO(", "E6/(SO(10) x U(1))", "E7/(E6 x U(1))",
)


def test_09_unit_metric_kahler_classification_campaign():
    report = run_campaign("table1", max_rank=6)
    assert report.passed, report.failures
    for case in report.cases:
        assert case["lambda_one_kahler"] == case["single_mark_one"]
        if case["family"]:
            assert case["family"].startswith(_FAMILY_SHAPES)


def test_10_certificate_catalogues_with_exhibited_pairs():
    for name, kwargs in (
        ("height3", {"max_rank": 4}),
        ("maximal", {"max_rank": 4}),
        ("g2", {}),
        ("f4", {}),
    ):
        report = run_campaign(name, **kwargs)
        assert report.passed, (
            f"campaign {name}: every listed sign structure must carry a valid "
            "certificate pair, including each displayed pair; "
            + " | ".join(report.failures)
        )


def test_11_regauging_leaves_verdicts_and_diagonals_unchanged():
    cases = [
        (build_flag(LieType("G", 2), []), (1, 1, 1, 1, 1, 1), None),
        (build_flag(LieType("G", 2), [1]), (1, -1), None),
        (build_flag(LieType("G", 2), [2]), (1, 1, -1), None),
        (build_flag(LieType("C", 3), [2, 3]), (1, 1), (F(1), F(2))),
        (build_flag(LieType("C", 3), []), None, None),
    ]
    rnd = random.Random(7)
    checked = 0
    for fl, signs, lam in cases:
        if signs is None:
            signs = fl.enumerate_acs()[0]
        if lam is None:
            lam = tuple([F(1)] * fl.num_summands)
        table = table_for(fl.rs.lie_type)
        base_verdict = classify(fl, signs, lam, table=table)
        base_eng = CurvatureEngine(fl, signs, lam, table=table)
        pairs = [(a, c) for a in base_eng.plus for c in base_eng.plus]
        for _ in range(4):
            flips = {
                r: rnd.choice((1, -1)) for r in fl.rs.positive_roots
            }
            regauged = table.regauged(flips)
            verdict = classify(fl, signs, lam, table=regauged)
            assert verdict.kind == base_verdict.kind
            eng = CurvatureEngine(fl, signs, lam, table=regauged)
            for a, c in pairs:
                assert (
                    eng.curvature(a, a, c, c).to_fraction()
                    == base_eng.curvature(a, a, c, c).to_fraction()
                )
            checked += 1
    assert checked == 20
