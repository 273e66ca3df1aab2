import random

import pytest
from hypothesis import given, settings, strategies as st

from skewrank.errors import InputError, NotAViolation
from skewrank.evenrank import OddWitness, check_all_principal_even, verify_witness
from skewrank.field import Q, Scalar
from skewrank.generators import mixed_sign_matrix, sign_scaled_skew_matrix
from skewrank.lemma import lemma_matrix
from skewrank.matrix import Matrix, is_skew_symmetric, permute_simultaneous, rank
from skewrank.recognizer import (
    MOrdering,
    ScalingCertificate,
    SignCertificate,
    SupportGraph,
    apply_certificate,
    check_m_ordering,
    extract_witness,
    m_ordering,
    precheck,
    recognize_general_scaling,
    recognize_sign,
    sign_normalize,
)

from conftest import GF2, GF3, GF5, GF7
from oracles import all_principal_even_brute, rank_by_minors, sign_scalable_brute

REMARK2 = [[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 1], [0, 1, 1, 0]]


# -- precheck ---------------------------------------------------------------

def test_precheck_examples():
    assert precheck(Matrix([[1]])) == OddWitness((1,), 1)
    assert precheck(Matrix([[0, 1], [0, 0]])) == OddWitness((1, 2), 1)
    g = precheck(Matrix(REMARK2))
    assert g == SupportGraph(4, frozenset({(1, 3), (2, 4), (3, 4)}))


def test_precheck_rejects_other_entries():
    with pytest.raises(InputError):
        precheck(Matrix([[0, 2], [-2, 0]]))
    with pytest.raises(InputError):
        recognize_sign(Matrix([[0, 2], [1, 0]], GF5))
    # in GF(3), 2 is -1
    assert isinstance(precheck(Matrix([[0, 2], [1, 0]], GF3)), SupportGraph)


# -- m ordering ---------------------------------------------------------------

def test_m_ordering_remark2():
    o = m_ordering(precheck(Matrix(REMARK2)))
    assert o.permutation == (1, 3, 4, 2)
    assert o.m_values == (2, 1, 2, 3)
    assert o.component_roots == frozenset({1})


def test_m_ordering_zero_matrix():
    o = m_ordering(precheck(Matrix.zeros(4)))
    assert o.permutation == (1, 2, 3, 4)
    assert o.m_values == (5, 5, 5, 5)


def test_m_ordering_lemma_form_is_identity():
    g = precheck(lemma_matrix(5, 1, -1, 1))
    o = m_ordering(g)
    assert o.permutation == (1, 2, 3, 4, 5)
    assert o.m_values == (2, 1, 1, 2, 3)
    assert check_m_ordering(o, g)


def test_m_ordering_components():
    # two components {1, 4} and {2, 3, 5}, plus isolated 6
    rows = [[0] * 6 for _ in range(6)]
    for i, j in [(1, 4), (2, 5), (3, 5), (2, 3)]:
        rows[i - 1][j - 1] = 1
        rows[j - 1][i - 1] = -1
    g = precheck(Matrix(rows))
    o = m_ordering(g)
    assert o.permutation == (1, 4, 2, 3, 5, 6)
    assert o.component_roots == frozenset({1, 3, 6})
    assert check_m_ordering(o, g)


def test_check_m_ordering_catches_bad_orders():
    g = precheck(Matrix(REMARK2))
    good = m_ordering(g)
    assert not check_m_ordering(MOrdering((1, 2, 3, 4), good.m_values, good.component_roots), g)
    bad = MOrdering((2, 4, 3, 1), (2, 1, 2, 3), frozenset({1}))
    # positions: 2,4,3,1 -> path 2-4-3-1, m = (2, 1, 2, 3): monotone, valid
    assert check_m_ordering(bad, g)
    worse = MOrdering((4, 1, 3, 2), (3, 3, 1, 1), frozenset({1}))
    assert not check_m_ordering(worse, g)


@st.composite
def support_graphs(draw):
    n = draw(st.integers(0, 12))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    density = draw(st.floats(0, 1))
    rng = draw(st.randoms(use_true_random=False))
    return SupportGraph(n, frozenset(p for p in pairs if rng.random() < density))


@settings(max_examples=300, deadline=None)
@given(support_graphs())
def test_m_ordering_invariant_holds(g):
    assert check_m_ordering(m_ordering(g), g)


# -- sign normalization -------------------------------------------------------

def test_sign_normalize_remark2():
    m = Matrix(REMARK2)
    o = m_ordering(precheck(m))
    out, rows, cols = sign_normalize(permute_simultaneous(m, o.permutation), o)
    assert (rows, cols) == ([], [3, 4])
    assert out.tolist() == [[0, -1, 0, 0], [1, 0, -1, 0], [0, 1, 0, -1], [0, 0, 1, 0]]
    assert is_skew_symmetric(out)


def test_sign_normalize_no_flips():
    m = lemma_matrix(6, 1, -1, 1)
    o = m_ordering(precheck(m))
    assert sign_normalize(m, o)[1:] == ([], [])
    m2 = Matrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]], GF2)
    o2 = m_ordering(precheck(m2))
    assert sign_normalize(permute_simultaneous(m2, o2.permutation), o2)[1:] == ([], [])


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 9), st.sampled_from([Q, GF3, GF5]), st.randoms(use_true_random=False))
def test_sign_normalize_postcondition(n, f, rng):
    m = mixed_sign_matrix(n, rng, f)
    g = precheck(m)
    if isinstance(g, OddWitness):
        return
    o = m_ordering(g)
    out, _, _ = sign_normalize(permute_simultaneous(m, o.permutation), o)
    for i in range(1, n + 1):
        mi = o.m_values[i - 1]
        if i in o.component_roots or mi > n:
            continue
        assert out.entry(i, mi) == Scalar(1, f)
        assert out.entry(mi, i) == Scalar(-1, f)


# -- recognize_sign -----------------------------------------------------------

def test_recognize_remark2():
    m = Matrix(REMARK2)
    res = recognize_sign(m)
    assert res.accepted
    assert res.certificate == SignCertificate((1, 1, 1, 1), (1, -1, 1, -1))
    assert is_skew_symmetric(apply_certificate(m, res.certificate))
    paper = SignCertificate((1, 1, -1, 1), (-1, 1, 1, 1))
    assert is_skew_symmetric(apply_certificate(m, paper))


def test_recognize_lemma_n4_rejects():
    m = lemma_matrix(4, 1, 1, 1)
    assert not check_all_principal_even(m).all_even
    res = recognize_sign(m)
    assert not res.accepted
    assert verify_witness(m, res.witness)


def test_recognize_zero_matrix():
    res = recognize_sign(Matrix.zeros(5, field=GF3))
    assert res.certificate == SignCertificate((1,) * 5, (1,) * 5)
    assert recognize_sign(Matrix([], Q)).accepted


def test_recognize_reports_original_indices():
    # lemma n=3 violation hidden behind a relabelling
    m = permute_simultaneous(lemma_matrix(3, 1, 1, 1), (3, 1, 2))
    m = Matrix([r + [0] for r in m.tolist()] + [[0, 0, 0, 0]])
    m = permute_simultaneous(m, (4, 1, 2, 3))
    res = recognize_sign(m)
    assert res.witness.indices == (2, 3, 4)
    assert verify_witness(m, res.witness)


def test_gf2_reduces_to_symmetry():
    sym = Matrix([[0, 1, 1, 0], [1, 0, 1, 1], [1, 1, 0, 0], [0, 1, 0, 0]], GF2)
    assert recognize_sign(sym).certificate == SignCertificate((1,) * 4, (1,) * 4)
    asym = Matrix([[0, 1], [0, 0]], GF2)
    assert recognize_sign(asym).witness == OddWitness((1, 2), 1)


# -- witness extraction -------------------------------------------------------

def test_extract_witness_lemma_n3():
    m = lemma_matrix(3, 1, 1, 1)
    o = m_ordering(precheck(m))
    assert extract_witness(m, o, 3, 2) == (1, 2, 3)
    assert rank(m) == 3


def test_extract_witness_lemma_n6():
    m = lemma_matrix(6, 1, 1, 1)
    o = m_ordering(precheck(m))
    assert o.permutation == tuple(range(1, 7))
    assert extract_witness(m, o, 6, 5) == (1, 2, 3, 4, 5, 6)
    assert rank_by_minors([list(map(int, r)) for r in m.rows]) == 5


def test_extract_witness_truncates_at_first_off_band_entry():
    rows = lemma_matrix(5, 1, 1, 1).tolist()
    rows[3][2], rows[2][3] = 1, -1  # c_1 = M[4][3] != 0, still skew there
    m = Matrix(rows)
    o = m_ordering(precheck(m))
    assert o.permutation == (1, 2, 3, 4, 5)
    assert o.m_values == (2, 1, 1, 2, 3)
    w = extract_witness(m, o, 5, 4)
    assert w == (3, 4, 5)
    sub = [[int(rows[i - 1][j - 1]) for j in w] for i in w]
    assert rank_by_minors(sub) == 3
    assert recognize_sign(m).witness == OddWitness((3, 4, 5), 3)


def test_extract_witness_contract():
    m = lemma_matrix(3, 1, -1, 1)
    o = m_ordering(precheck(m))
    with pytest.raises(NotAViolation):
        extract_witness(m, o, 3, 2)
    with pytest.raises(NotAViolation):
        extract_witness(m, o, 2, 3)


# -- general scaling ---------------------------------------------------------

def test_general_scaling_remark1_rejects():
    m = lemma_matrix(4, -1, 2, 1, GF5)
    res = recognize_general_scaling(m)
    assert not res.accepted
    assert set(res.cycle) == {1, 2, 3, 4} and res.cycle[0] == res.cycle[-1]


def test_general_scaling_accepts_skew_with_ones():
    m = lemma_matrix(5, 1, -1, 1)
    res = recognize_general_scaling(m)
    assert res.certificate.row_scalars == tuple(Scalar(1, Q) for _ in range(5))


def test_general_scaling_non_sign_scalars():
    # [[0, 2], [-3, 0]]: t2 = 2/3 * t1 works over Q
    m = Matrix([[0, 2], [-3, 0]])
    res = recognize_general_scaling(m)
    assert res.accepted
    assert is_skew_symmetric(apply_certificate(m, res.certificate))
    assert not recognize_general_scaling(Matrix([[1, 0], [0, 0]])).accepted
    assert "asymmetric" in recognize_general_scaling(Matrix([[0, 1], [0, 0]])).reason


def test_apply_certificate_identity():
    m = lemma_matrix(4, 1, -1, -1)
    assert apply_certificate(m, SignCertificate((1,) * 4, (1,) * 4)) == m
    cert = ScalingCertificate(tuple(Scalar(2, Q) for _ in range(4)),
                              tuple(Scalar(1, Q) for _ in range(4)))
    assert is_skew_symmetric(apply_certificate(m, cert))


# -- cross-validation ----------------------------------------------------------

@pytest.mark.parametrize("f", [Q, GF3, GF5], ids=["Q", "GF3", "GF5"])
def test_equivalence_with_oracles(f):
    rng = random.Random(11)
    p = f.p or 0
    for _ in range(300):
        m = mixed_sign_matrix(rng.randint(1, 5), rng, f)
        rows = [[int(f.centered(x)) for x in r] for r in m.rows]
        res = recognize_sign(m)
        assert res.accepted == all_principal_even_brute(rows, p)
        assert res.accepted == sign_scalable_brute(rows, p)
        if res.accepted:
            assert is_skew_symmetric(apply_certificate(m, res.certificate))
        else:
            assert verify_witness(m, res.witness)


@pytest.mark.parametrize("f", [Q, GF5, GF7], ids=["Q", "GF5", "GF7"])
def test_general_scaling_agrees_with_sign_scaling(f):
    rng = random.Random(5)
    for _ in range(1500):
        m = mixed_sign_matrix(rng.randint(1, 8), rng, f)
        assert recognize_general_scaling(m).accepted == recognize_sign(m).accepted


@pytest.mark.parametrize("f", [Q, GF3, GF5], ids=["Q", "GF3", "GF5"])
def test_scaling_invariance(f):
    rng = random.Random(2)
    for _ in range(300):
        n = rng.randint(1, 8)
        m = mixed_sign_matrix(n, rng, f)
        d = [rng.choice((1, -1)) for _ in range(n)]
        e = [rng.choice((1, -1)) for _ in range(n)]
        scaled = apply_certificate(m, SignCertificate(tuple(d), tuple(e)))
        assert recognize_sign(scaled).accepted == recognize_sign(m).accepted


def test_scaled_skew_always_accepted(field):
    rng = random.Random(9)
    for _ in range(200):
        m = sign_scaled_skew_matrix(rng.randint(1, 10), rng, field)
        res = recognize_sign(m)
        assert res.accepted
        assert is_skew_symmetric(apply_certificate(m, res.certificate))


def test_deterministic():
    rng = random.Random(4)
    for _ in range(100):
        m = mixed_sign_matrix(7, rng, GF5)
        assert recognize_sign(m) == recognize_sign(m)
