from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fengrao import (
    GF,
    IndexedBasis,
    IndexSet,
    WBStatus,
    build_wb_table,
    check_duality_condition,
    construct_code,
    encode,
    semigroup_wb_table,
)
from fengrao import fqla, frdecode as fd
from fengrao.errors import (
    DecodeFailure,
    DimensionMismatchError,
    EmptyIndexSetError,
    NotCandidateError,
    PrefixUnknownError,
)

from conftest import F5_CODEWORD, F5_I, SMALL_FIELDS, random_basis

RECEIVED = [0, 3, 1, 4, 3, 2, 3, 3, 4]


@pytest.fixture(scope="module")
def f5_setup(f5_algebra):
    return fd.setup(f5_algebra.basis, IndexSet(9, F5_I), table=semigroup_wb_table(f5_algebra))


# -- an independent decoder written straight from the rank definitions ----------

def oracle_decode(st, r):
    F, n, H, U = st.G.F, st.n, st.H, st.U
    s = [None] * n
    for l in st.Ibar:
        s[l - 1] = F.dot(H[l], r)
    coords = {(v, w): H.coordinates(F.mul(H[v], U[w])) for v in range(1, n + 1) for w in range(1, n + 1)}

    def entry(v, w):
        c = coords[(v, w)]
        return F.dot(c, [x if x is not None else 0 for x in s])

    def sub(i, j):
        return np.array([[entry(v, w) for w in range(1, j + 1)] for v in range(1, i + 1)],
                        dtype=np.int64).reshape(i, j)

    rounds = []
    for l in range(1, n + 1):
        if s[l - 1] is not None:
            continue
        cands, votes = [], []
        for (i, j), (status, rho) in sorted(st.table.entries(WBStatus.WB).items()):
            if rho != l:
                continue
            r00, r10, r01 = (fqla.rank(F, sub(a, b)) for a, b in ((i - 1, j - 1), (i, j - 1), (i - 1, j)))
            if not r00 == r10 == r01:
                continue
            cands.append((i, j))
            c = coords[(i, j)]
            s_ij = fqla.row_space_extension(F, sub(i - 1, j), sub(i, j - 1)[-1] if j > 1 else [])
            known = F.dot(c[:l - 1], s[:l - 1]) if l > 1 else 0
            votes.append(F.div(F.sub(s_ij, known), int(c[l - 1])))
        rounds.append((l, cands, votes))
        if not cands:
            return rounds, ("NoCandidates", l)
        ranked = Counter(votes).most_common()
        if len(ranked) > 1 and ranked[0][1] == ranked[1][1]:
            return rounds, ("TiedVote", l)
        s[l - 1] = ranked[0][0]
    return rounds, s


def run(st, r):
    try:
        res = fd.decode(st, r)
        return [(x.l, x.candidates, x.votes) for x in res.transcript], res.syndromes
    except DecodeFailure as f:
        return [(x.l, x.candidates, x.votes) for x in f.transcript], (f.kind, f.l)


# -- the worked example ------------------------------------------------------------

def test_known_syndromes(f5_setup):
    state = fd.init_syndromes(f5_setup, RECEIVED)
    assert state.syndromes() == [4, 3, 3, 3, None, 3, None, None, None]


def test_candidates_and_votes(f5_setup):
    state = fd.init_syndromes(f5_setup, RECEIVED)
    assert sorted(fd.find_candidates(state, 5)) == [(2, 3), (3, 2)]
    assert fd.vote(state, (3, 2), 5) == 1 and fd.vote(state, (2, 3), 5) == 1
    with pytest.raises(PrefixUnknownError):
        fd.find_candidates(state, 7)
    state.commit(5, 1)
    assert sorted(fd.find_candidates(state, 7)) == [(2, 5), (3, 4), (4, 3), (5, 2)]
    with pytest.raises(NotCandidateError):
        fd.vote(state, (1, 7), 7)


def test_full_decode(f5_setup):
    res = fd.decode(f5_setup, RECEIVED)
    assert res.syndromes == [4, 3, 3, 3, 1, 3, 1, 1, 1]
    assert res.error.tolist() == [0] * 8 + [1]
    assert res.codeword.tolist() == F5_CODEWORD
    assert [x.l for x in res.transcript] == [5, 7, 8, 9]
    assert res.transcript[2].candidates == [(2, 6), (3, 5), (5, 3), (6, 2)]
    assert res.transcript[3].candidates == [(k, 10 - k) for k in range(2, 9)]
    assert all(v == 1 for x in res.transcript for v in x.votes)


def test_codeword_and_zero_word(f5_setup):
    for r in (F5_CODEWORD, [0] * 9):
        state = fd.init_syndromes(f5_setup, r)
        assert all(state.s[l - 1] == 0 for l in f5_setup.Ibar)
        res = fd.decode(f5_setup, r)
        assert not res.error.any() and res.codeword.tolist() == list(r)
        # with no error every vote is zero
        assert all(v == 0 for x in res.transcript for v in x.votes)


def test_every_single_error(f5_setup):
    F = GF(5)
    c = np.array(F5_CODEWORD)
    for k in range(9):
        for a in range(1, 5):
            e = np.zeros(9, dtype=np.int64)
            e[k] = a
            res = fd.decode(f5_setup, F.add(c, e))
            assert np.array_equal(res.error, e)


def test_setup_properties(f5_algebra, f5_setup):
    st = f5_setup
    assert check_duality_condition(st.G, st.H) == "Full"
    assert st.Ibar.members == (1, 2, 3, 4, 6)
    assert st.designed_distance == 4 and st.radius == 1
    # coefficients reproduce the products and the table's rho values
    F = st.G.F
    for v in range(1, 10):
        for w in range(1, 10):
            c = st.coeffs[:, v - 1, w - 1].astype(np.int64)
            assert np.array_equal(F.matmul(c, st.H.vectors), F.mul(st.H[v], st.U[w]))
            got = st.table.get(v, w)
            if got is not None:
                assert got[1] == st.rho[v - 1, w - 1]
    # exhaustive preparation finds the same WB pairs as the translated table here
    ex = fd.setup(f5_algebra.basis, IndexSet(9, F5_I))
    assert ex.table.complete and ex.table.same_entries(st.table, WBStatus.WB)


def test_setup_without_table_matches_direct_classification():
    F = GF(3)
    rng = np.random.default_rng(6)
    G = random_basis(F, 6, rng)
    st = fd.setup(G, IndexSet(6, (1, 2)))
    assert st.table.same_entries(build_wb_table(st.H, G))


def test_trivial_length_one():
    F = GF(2)
    G = IndexedBasis(F, [[1]])
    st = fd.setup(G, IndexSet(1, (1,)))
    assert st.Ibar.members == ()
    res = fd.decode(st, [1])
    # the code is the whole space: s_1 is unknown, (1,1) votes it to zero
    assert res.transcript[0].candidates == [(1, 1)]
    assert res.error.tolist() == [0] and res.codeword.tolist() == [1]
    assert st.radius == 0


def test_errors(f5_algebra, f5_setup):
    with pytest.raises(DimensionMismatchError):
        fd.init_syndromes(f5_setup, [0] * 8)
    with pytest.raises(EmptyIndexSetError):
        fd.setup(f5_algebra.basis, IndexSet(9, ()))


def test_transcript_json(f5_setup):
    import json
    res = fd.decode(f5_setup, RECEIVED, record_grid=True)
    out = json.loads(json.dumps(res.to_json()))
    assert out["status"] == "ok"
    assert out["transcript"][0]["candidates"] == [[2, 3], [3, 2]]
    assert out["transcript"][0]["tally"] == {"1": 2}
    assert out["transcript"][0]["grid"][0] == [4, 2, 2, 1, "?"]


def test_determinism(f5_setup):
    a = fd.decode(f5_setup, RECEIVED, record_grid=True).to_json()
    b = fd.decode(f5_setup, RECEIVED, record_grid=True).to_json()
    assert a == b


# -- agreement with the rank-definition oracle --------------------------------------

def test_oracle_on_worked_example(f5_setup):
    rounds, s = oracle_decode(f5_setup, np.array(RECEIVED))
    assert run(f5_setup, RECEIVED) == (rounds, s)


@pytest.mark.parametrize("fspec", SMALL_FIELDS)
@settings(max_examples=15, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 7))
def test_agrees_with_oracle_on_random_codes(fspec, seed, n):
    F = GF(*fspec)
    rng = np.random.default_rng(seed)
    G = random_basis(F, n, rng)
    U = G if rng.integers(2) else random_basis(F, n, rng)
    k = int(rng.integers(1, n + 1))
    I = IndexSet(n, tuple(int(x) + 1 for x in rng.choice(n, size=k, replace=False)))
    st = fd.setup(G, I, U)
    r = F.random(rng, n)
    assert run(st, r) == oracle_decode(st, r)


@pytest.mark.parametrize("sizes,k", [([4, 4], 6), ([5, 3], 5), ([3, 3, 2], 8)])
def test_agrees_with_oracle_beyond_radius(sizes, k):
    F = GF(5)
    from fengrao import build_algebra, design_improved_code
    A = build_algebra(F, len(sizes), "graded-lex", [list(range(s)) for s in sizes])
    I = design_improved_code(A, k)
    st = fd.setup(A.basis, I, table=semigroup_wb_table(A))
    rng = np.random.default_rng(len(sizes) * 100 + k)
    C = construct_code(A, I)
    for _ in range(10):
        e = np.zeros(A.n, dtype=np.int64)
        w = int(rng.integers(0, A.n // 2))
        e[rng.choice(A.n, size=w, replace=False)] = F.random(rng, w, nonzero=True)
        r = F.add(encode(C, F.random(rng, C.dim)), e)
        assert run(st, r) == oracle_decode(st, r)


@pytest.mark.parametrize("sizes,k", [([4, 4], 6), ([7, 2], 6), ([3, 3, 3], 10)])
def test_within_radius_always_correct(sizes, k):
    F = GF(7)
    from fengrao import build_algebra, design_improved_code
    A = build_algebra(F, len(sizes), "graded-lex", [list(range(s)) for s in sizes])
    I = design_improved_code(A, k)
    st = fd.setup(A.basis, I, table=semigroup_wb_table(A))
    C = construct_code(A, I)
    rng = np.random.default_rng(k)
    assert st.radius >= 1
    for _ in range(40):
        c = encode(C, F.random(rng, C.dim))
        e = np.zeros(A.n, dtype=np.int64)
        w = int(rng.integers(0, st.radius + 1))
        e[rng.choice(A.n, size=w, replace=False)] = F.random(rng, w, nonzero=True)
        res = fd.decode(st, F.add(c, e))
        assert np.array_equal(res.error, e)
        # every vote equals the true syndrome
        for rnd in res.transcript:
            assert rnd.value == F.dot(st.H[rnd.l], e)
        assert not np.any(F.matmul(st.H.vectors, res.error) - np.array(res.syndromes))
        assert C.contains(res.codeword)
