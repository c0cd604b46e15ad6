import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from flagcurv.rootsys import (
    LieType,
    build_root_system,
    c_lambda_vector,
    c_root_from_lambda,
    c_series_label,
    canonical_key,
)

F = Fraction


def rs(text):
    return build_root_system(LieType.parse(text))


def test_parse_case_insensitive():
    assert LieType.parse("c4") == LieType("C", 4)
    assert LieType.parse(" g2 ") == LieType("G", 2)
    assert str(LieType.parse("e6")) == "E6"


@pytest.mark.parametrize("bad", ["X9", "B1", "D2", "E5", "F3", "G3", "A0", "", "CC4"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        LieType.parse(bad)


@pytest.mark.parametrize(
    "text,count",
    [
        ("A1", 2),
        ("A2", 6),
        ("A5", 30),
        ("B2", 8),
        ("B4", 32),
        ("C2", 8),
        ("C3", 18),
        ("D3", 12),
        ("D4", 24),
        ("E6", 72),
        ("E7", 126),
        ("E8", 240),
        ("F4", 48),
        ("G2", 12),
    ],
)
def test_root_counts(text, count):
    assert len(rs(text).roots) == count


def test_a2_roots_explicit():
    assert rs("A2").roots == {(1, 0), (0, 1), (1, 1), (-1, 0), (0, -1), (-1, -1)}


def test_g2_roots_explicit():
    pos = {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}
    assert set(rs("G2").positive_roots) == pos
    assert rs("G2").highest_root == (3, 2)


@pytest.mark.parametrize(
    "text,marks",
    [
        ("A4", (1, 1, 1, 1)),
        ("B3", (1, 2, 2)),
        ("C4", (2, 2, 2, 1)),
        ("D4", (1, 2, 1, 1)),
        ("E6", (1, 2, 2, 3, 2, 1)),
        ("F4", (2, 3, 4, 2)),
        ("G2", (3, 2)),
    ],
)
def test_marks(text, marks):
    assert rs(text).marks == marks


def test_has_mark_at_least():
    assert not rs("A5").has_mark_at_least(3)
    assert rs("G2").has_mark_at_least(3)
    assert rs("F4").has_mark_at_least(3)
    assert rs("C4").has_mark_at_least(2)
    assert not rs("C4").has_mark_at_least(3)


@pytest.mark.parametrize(
    "text,scale",
    [
        # 1/(2 h^v) against the classical dual Coxeter numbers
        ("A2", F(1, 6)),
        ("A4", F(1, 10)),
        ("B3", F(1, 10)),
        ("C3", F(1, 8)),
        ("D4", F(1, 12)),
        ("E6", F(1, 24)),
        ("E7", F(1, 36)),
        ("E8", F(1, 60)),
        ("F4", F(1, 18)),
        ("G2", F(1, 8)),
    ],
)
def test_killing_scale(text, scale):
    assert rs(text).killing_scale == scale


@pytest.mark.parametrize("text", ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D3", "G2", "F4"])
def test_killing_trace_identity_all_pairs(text):
    r = rs(text)
    roots = sorted(r.roots, key=canonical_key)
    cache = {a: [r.symmetrized_form(g, a) for g in roots] for a in roots}
    s = r.killing_scale
    for a in roots:
        for b in roots:
            lhs = s * s * sum(x * y for x, y in zip(cache[a], cache[b]))
            assert lhs == r.killing_inner(a, b)


def test_cn_killing_values():
    # long root 2l_1 has (.,.)_B = 1/(n+1); short l_1 - l_j has 1/(2(n+1))
    for n in range(2, 7):
        r = rs(f"C{n}")
        long = c_root_from_lambda(n, (2,) + (0,) * (n - 1))
        short = c_root_from_lambda(n, (1, -1) + (0,) * (n - 2))
        assert r.killing_inner(long, long) == F(1, n + 1)
        assert r.killing_inner(short, short) == F(1, 2 * (n + 1))


def test_root_string_examples():
    r = rs("C4")
    a = c_root_from_lambda(4, (2, 0, 0, 0))
    b = c_root_from_lambda(4, (-1, 1, 0, 0))
    assert r.root_string(a, b) == (0, 1)
    g = rs("G2")
    assert g.root_string((1, 0), (0, 1)) == (0, 3)
    assert rs("A2").root_string((1, 0), (0, 1)) == (0, 1)


def test_root_string_rejects_multiples():
    r = rs("A2")
    with pytest.raises(ValueError):
        r.root_string((1, 0), (1, 0))
    with pytest.raises(ValueError):
        r.root_string((1, 0), (-1, 0))


def test_positive_roots_canonically_ordered():
    r = rs("C3")
    keys = [canonical_key(p) for p in r.positive_roots]
    assert keys == sorted(keys)
    assert all(sum(p) >= 1 for p in r.positive_roots)


def test_roots_closed_under_negation():
    for text in ["A3", "B3", "C3", "D4", "G2", "F4"]:
        r = rs(text)
        assert {r.negate(x) for x in r.roots} == r.roots


_SYSTEMS = [
    "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "C4",
    "D3", "D4", "D5", "E6", "F4", "G2",
]


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(_SYSTEMS), st.randoms(use_true_random=False))
def test_reflection_closure_property(text, rnd):
    r = rs(text)
    roots = sorted(r.roots, key=canonical_key)
    a = rnd.choice(roots)
    b = rnd.choice(roots)
    assert r.reflect(a, b) in r.roots


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(_SYSTEMS), st.randoms(use_true_random=False))
def test_root_string_matches_cartan_pairing(text, rnd):
    r = rs(text)
    roots = sorted(r.roots, key=canonical_key)
    a = rnd.choice(roots)
    b = rnd.choice(roots)
    if b == a or b == r.negate(a):
        return
    p, q = r.root_string(a, b)
    assert p - q == r.cartan_pairing(b, a)


def test_c_series_labels_roundtrip():
    r = rs("C3")
    seen = set()
    for root in r.roots:
        lab = c_series_label(3, root)
        seen.add(lab)
        assert c_root_from_lambda(3, c_lambda_vector(3, root)) == root
    assert "2λ1" in seen and "λ1-λ2" in seen and "-λ1-λ3" in seen
    assert len(seen) == 18


def test_cn_root_pattern():
    # C3 roots are exactly +-(l_i - l_j), +-(l_i + l_j) for i<j, +-2 l_i
    vecs = {c_lambda_vector(3, root) for root in rs("C3").roots}
    expect = set()
    for i in range(3):
        for j in range(i + 1, 3):
            for si in (1, -1):
                for sj in (1, -1):
                    v = [0, 0, 0]
                    v[i], v[j] = si, sj
                    expect.add(tuple(v))
        v = [0, 0, 0]
        v[i] = 2
        expect.add(tuple(v))
        v[i] = -2
        expect.add(tuple(v))
    assert vecs == expect


def test_e8_sanity():
    r = rs("E8")
    assert sum(r.highest_root) == 29  # Coxeter number minus one
    assert r.marks == (2, 3, 4, 6, 5, 4, 3, 2)


def test_killing_trace_identity_sampled_large():
    rnd = random.Random(7)
    for text in ["B5", "C6", "D6", "E7"]:
        r = rs(text)
        roots = sorted(r.roots, key=canonical_key)
        pick = [rnd.choice(roots) for _ in range(8)]
        for a in pick:
            for b in pick:
                lhs = sum(
                    (r.killing_inner(g, a) * r.killing_inner(g, b) for g in roots), F(0)
                )
                assert lhs == r.killing_inner(a, b)
