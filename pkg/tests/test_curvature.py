"""Curvature engine: coefficients, closed forms, symmetries."""

import random
from fractions import Fraction
from itertools import product

import pytest

from flagcurv.chevalley import ZERO, build_chevalley
from flagcurv.curvature import CurvatureEngine, dump_tensor_csv
from flagcurv.flagspace import build_flag, parse_flag
from flagcurv.rootsys import LieType, c_root_from_lambda

F = Fraction


def _neg(r):
    return tuple(-x for x in r)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sp_engine(n, t, signs=(1, 1)):
    flag = build_flag(LieType("C", n), range(2, n + 1))
    return CurvatureEngine(flag, signs, (F(1), F(t)))


def lroot(n, *pairs):
    v = [0] * n
    for i, c in pairs:
        v[i - 1] = c
    return c_root_from_lambda(n, tuple(v))


# -- connection coefficients ----------------------------------------------


def test_coefficient_all_plus_reduces_to_m_lambda_ratio():
    eng = sp_engine(2, F(3, 2))
    a = lroot(2, (1, 1), (2, -1))  # l1-l2
    b = lroot(2, (1, 1), (2, 1))  # l1+l2
    s = lroot(2, (1, 2))  # 2l1
    c = eng.chern_coefficient(a, b)
    assert c == eng.ct.m(a, b) * (eng._lambda[b] / eng._lambda[s])
    assert c.square() == F(1, 6) / F(3, 2) ** 2


def test_coefficient_vanishes_outside_r_m():
    eng = sp_engine(2, 1)
    a = lroot(2, (1, 1), (2, -1))
    assert eng.chern_coefficient(a, _neg(a)) == ZERO  # sum 0
    b = lroot(2, (1, 1), (2, 1))
    assert eng.chern_coefficient(a, _neg(b)) == ZERO  # sum in R_K


def test_coefficient_mixed_signs_can_vanish():
    # eps pattern (+, +, -) zeroes both brackets
    flag = build_flag(LieType("C", 2), [2])
    eng = CurvatureEngine(flag, (1, -1), (1, 1))
    a = lroot(2, (1, 1), (2, -1))
    b = lroot(2, (1, 1), (2, 1))
    assert eng.chern_coefficient(a, b) == ZERO


def test_entry_requires_zero_sum():
    eng = sp_engine(2, 1)
    a = lroot(2, (1, 1), (2, -1))
    b = lroot(2, (1, 1), (2, 1))
    assert eng.entry(a, b, a, b) == ZERO


# -- closed forms on the projective family --------------------------------


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("t", [F(1, 2), F(1), F(3, 2), F(2)])
def test_projective_diagonal_block_families(n, t):
    eng = sp_engine(n, t)
    top = lroot(n, (1, 2))
    phi = F(1, 2 * (n + 1))

    def e1(a, g):
        return eng.entry(a, _neg(a), g, _neg(g))

    def e2(a, g):
        return eng.entry(a, _neg(g), g, _neg(a))

    for j in range(2, n + 1):
        for sj in (-1, 1):
            rj = lroot(n, (1, 1), (j, sj))
            assert e1(top, rj) == phi
            assert e1(rj, top) == phi * (t - 1)
            assert e1(rj, _neg_partner(n, j, sj)) == phi / t
            assert e1(rj, rj) == phi
            assert e2(rj, top) == phi
            assert e2(top, rj) == phi
            assert e2(rj, _neg_partner(n, j, sj)) == phi * (1 - 1 / t)
            for k in range(2, n + 1):
                if k == j:
                    continue
                for sk in (-1, 1):
                    rk = lroot(n, (1, 1), (k, sk))
                    assert e1(rj, rk) == phi / 2
                    assert e2(rj, rk) == phi / 2
    assert e1(top, top) == 2 * t * phi


def _neg_partner(n, j, sj):
    return lroot(n, (1, 1), (j, -sj))


def test_alpha_equals_gamma_is_metric_times_length():
    for spec in ("G2 k=1", "G2 k=2", "A2"):
        flag = parse_flag(spec)
        lam = tuple(F(k + 1) for k in range(flag.num_summands))
        eng = CurvatureEngine(flag, (1,) * flag.num_summands, lam)
        B = flag.rs.killing_inner
        for a in eng.plus:
            want = eng._lambda[a] * B(a, a)
            assert eng.entry(a, _neg(a), a, _neg(a)) == want
            assert eng.diag_pair_oracle(a, a) == (want, want)


# -- engine vs oracle ------------------------------------------------------


@pytest.mark.parametrize("spec", ["C2 k=2", "G2 k=1", "G2 k=2", "A2", "B2 k=1"])
def test_oracle_matches_engine(spec):
    flag = parse_flag(spec)
    rnd = random.Random(5)
    for signs in flag.enumerate_acs():
        for _ in range(2):
            lam = tuple(
                F(rnd.randint(1, 6), rnd.randint(1, 3))
                for _ in range(flag.num_summands)
            )
            eng = CurvatureEngine(flag, signs, lam)
            for a in eng.plus:
                for g in eng.plus:
                    f1, f2 = eng.diag_pair_oracle(a, g)
                    assert eng.entry(a, _neg(a), g, _neg(g)) == f1
                    assert eng.entry(a, _neg(g), g, _neg(a)) == f2


# -- tensor symmetries -----------------------------------------------------


@pytest.mark.parametrize("spec,signs", [("C2 k=2", (1, -1)), ("G2 k=2", (1, -1, 1)), ("A2", (1, 1, -1))])
def test_entry_symmetries(spec, signs):
    flag = parse_flag(spec)
    lam = tuple(F(k + 2, 2) for k in range(flag.num_summands))
    eng = CurvatureEngine(flag, signs, lam)
    members = sorted(eng._lambda)
    mset = set(members)
    for a, b, c in product(members, repeat=3):
        d = _neg(_add(_add(a, b), c))
        if d not in mset:
            continue
        v = eng.entry(a, b, c, d)
        assert eng.entry(b, a, c, d) == -v  # antisymmetry in the 2-form slots
        assert eng.entry(a, b, d, c) == -v  # metric connection
        assert eng.entry(_neg(b), _neg(a), _neg(d), _neg(c)) == v  # reality


def test_tensor_collects_exactly_the_nonzero_entries():
    eng = sp_engine(2, F(3, 2))
    tens = eng.tensor()
    assert all(v.sign != 0 for v in tens.values())
    assert all(not any(_add(_add(a, b), _add(c, d))) for a, b, c, d in tens)
    a = lroot(2, (1, 2))
    assert tens[(a, _neg(a), a, _neg(a))] == F(1, 2)


def test_regauging_leaves_entries_invariant_on_diagonal_patterns():
    flag = parse_flag("G2 k=2")
    base = build_chevalley(flag.rs)
    regauged = base.regauged({(1, 0): -1, (3, 1): -1})
    lam = (F(1), F(2), F(1, 2))
    for signs in flag.enumerate_acs():
        e0 = CurvatureEngine(flag, signs, lam, table=base)
        e1 = CurvatureEngine(flag, signs, lam, table=regauged)
        for a in e0.plus:
            for g in e0.plus:
                assert e0.entry(a, _neg(a), g, _neg(g)) == e1.entry(a, _neg(a), g, _neg(g))
                assert e0.entry(a, _neg(g), g, _neg(a)) == e1.entry(a, _neg(g), g, _neg(a))


def test_dump_tensor_csv_shape():
    import io

    eng = sp_engine(2, 1)
    buf = io.StringIO()
    dump_tensor_csv(eng, buf)
    lines = buf.getvalue().strip().splitlines()
    assert lines[0] == "a,b,c,d,sign,radicand"
    assert len(lines) == 1 + len(eng.tensor())


def test_engine_validates_inputs():
    flag = parse_flag("C2 k=2")
    with pytest.raises(ValueError):
        CurvatureEngine(flag, (1,), (1, 1))
    with pytest.raises(ValueError):
        CurvatureEngine(flag, (1, 1), (1, 0))
