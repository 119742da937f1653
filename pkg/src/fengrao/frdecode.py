"""Majority-voting decoder for primary codes ``C(G, I)``.

The primary code is read as the dual code ``C_perp(H, Ibar)`` where ``H`` is
the dual basis of ``G``.  Syndromes ``s_l = h_l . e`` are known for
``l`` in ``Ibar``; the rest are recovered in increasing order of ``l`` by
letting WB pairs ``(i, j)`` with ``rho_H(h_i * u_j) = l`` vote.

Rank tests on the syndrome matrix ``S = (s_vw)`` are done through its rank
profile.  Each row ``i`` keeps a combination ``lam_i`` of rows ``1..i`` (with
coefficient 1 on row ``i``) whose product with ``S`` is reduced at the
pivot columns of earlier rows; the first column where that reduced row is
nonzero and no earlier row has its pivot is the pivot of row ``i``.  A pair
``(i, j)`` is a candidate exactly when row ``i`` has no pivot before column
``j`` and column ``j`` has no pivot above row ``i``.  Rows are extended
only as new entries of ``S`` become known, which keeps decoding at
O(n^3) field operations once the setup is done.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BasisMismatchError,
    DecodeFailure,
    DimensionMismatchError,
    NotCandidateError,
    PrefixUnknownError,
)
from .wbcore import (
    IndexedBasis,
    IndexSet,
    WBStatus,
    WBTable,
    _last_nonzero,
    complement,
    dualize,
    mu_counts,
    table_from_rho,
    translate_wb_table,
)


@dataclass
class DecoderSetup:
    """Everything that depends on the code but not on the received word."""

    G: IndexedBasis
    H: IndexedBasis
    U: IndexedBasis
    I: IndexSet
    Ibar: IndexSet
    table: WBTable            # over (H, U)
    coeffs: np.ndarray        # [k, v, w]: coefficient of h_{k+1} in h_{v+1} * u_{w+1}
    rho: np.ndarray           # [v, w]: rho_H(h_{v+1} * u_{w+1})
    prefix_max: np.ndarray    # 2-D running maximum of rho
    wb_by_value: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.G.n

    @property
    def designed_distance(self) -> int:
        return min(mu_counts(self.table, WBStatus.WB, l) for l in self.Ibar.others())

    @property
    def radius(self) -> int:
        return (self.designed_distance - 1) // 2


def _coefficient_tensor(H: IndexedBasis, U: IndexedBasis):
    F, n = H.F, H.n
    dtype = np.uint8 if F.q <= 256 else np.uint16
    coeffs = np.empty((n, n, n), dtype=dtype)
    rho = np.zeros((n, n), dtype=np.int64)
    for v in range(n):
        prods = F.mul(U.vectors, H.vectors[v][None, :])
        c = F.matmul(prods, H.inverse)  # [w, k]
        coeffs[:, v, :] = c.T
        rho[v] = _last_nonzero(c)
    return coeffs, rho


def setup(G: IndexedBasis, I: IndexSet, U: IndexedBasis | None = None,
          table: WBTable | None = None) -> DecoderSetup:
    """Prepare decoding of ``C(G, I)``.

    ``table`` is WB information over ``(G, U)``; it is carried to ``(H, U)``
    by the pair translation.  Without a table every pair is classified
    directly on ``(H, U)``.
    """
    U = G if U is None else U
    if U.F != G.F or U.n != G.n:
        raise BasisMismatchError("G and U must share field and length")
    if I.n != G.n:
        raise DimensionMismatchError("index set and basis disagree on n")
    I.require_nonempty()
    H = dualize(G)
    coeffs, rho = _coefficient_tensor(H, U)
    if table is None:
        table_h = table_from_rho(H, U, rho)
    else:
        if table.B != G or table.U != U:
            raise BasisMismatchError("table must be over (G, U)")
        table_h = translate_wb_table(table, H)
    pm = np.maximum.accumulate(np.maximum.accumulate(rho, axis=0), axis=1)
    wb_by_value: dict[int, list] = {}
    for i0, j0 in zip(*np.nonzero(table_h.status == WBStatus.WB)):
        wb_by_value.setdefault(int(table_h.rho[i0, j0]), []).append((int(i0) + 1, int(j0) + 1))
    for pairs in wb_by_value.values():
        pairs.sort()
    return DecoderSetup(G, H, U, I, complement(I), table_h, coeffs, rho, pm, wb_by_value)


@dataclass
class Round:
    """One voting round of the transcript."""

    l: int
    candidates: list
    votes: list
    tally: dict
    value: int | None
    grid: list

    def to_json(self) -> dict:
        return {"l": self.l, "candidates": [list(c) for c in self.candidates],
                "votes": self.votes, "tally": {str(k): v for k, v in sorted(self.tally.items())},
                "value": self.value, "grid": self.grid}


class DecoderState:
    """Syndromes, the partially known matrix ``S`` and its rank profile."""

    def __init__(self, st: DecoderSetup, received):
        F, n = st.G.F, st.n
        r = np.asarray(received, dtype=np.int64).ravel()
        if r.size != n:
            raise DimensionMismatchError(f"received word has length {r.size}, expected {n}")
        F.check(r)
        self.setup = st
        self.F = F
        self.received = r
        self.s = np.zeros(n, dtype=np.int64)
        self.known = np.zeros(n, dtype=bool)
        for l in st.Ibar:
            self.s[l - 1] = F.dot(st.H[l], r)
            self.known[l - 1] = True
        self.S = np.zeros((n, n), dtype=np.int64)  # holds sum over k < level of s_k C_k
        self.level = 1
        self.lam = np.eye(n, dtype=np.int64)
        self.x = np.zeros((n, n), dtype=np.int64)
        self.width = np.zeros(n, dtype=np.int64)
        self.lead = np.full(n, -1, dtype=np.int64)
        self.pivot_row = np.full(n, -1, dtype=np.int64)
        self._ready_for = 0
        self.transcript: list[Round] = []

    # -- bookkeeping -------------------------------------------------------

    def syndromes(self) -> list:
        return [int(v) if k else None for v, k in zip(self.s, self.known)]

    def advance(self, l: int):
        """Make every entry ``s_vw`` with ``rho < l`` available and extend the rank profile."""
        if l == self._ready_for:
            return
        if not self.known[:l - 1].all():
            raise PrefixUnknownError(f"syndromes below {l} are not all known")
        F, st = self.F, self.setup
        while self.level < l:
            k = self.level
            if self.s[k - 1]:
                self.S = F.add(self.S, F.mul(int(self.s[k - 1]), st.coeffs[k - 1].astype(np.int64)))
            self.level += 1
        widths = (st.prefix_max < l).sum(axis=1)
        for i in np.flatnonzero(widths > self.width):
            self._extend_row(int(i), int(widths[i]))
        self._ready_for = l

    def _extend_row(self, i: int, b: int):
        F = self.F
        a = int(self.width[i])
        self.x[i, a:b] = F.matmul(self.lam[i, :i + 1], self.S[:i + 1, a:b])
        self.width[i] = b
        if self.lead[i] >= 0:
            return
        pos = a
        while pos < b:
            nz = np.flatnonzero(self.x[i, pos:b])
            if nz.size == 0:
                return
            c = pos + int(nz[0])
            r = int(self.pivot_row[c])
            if r < 0:
                self.lead[i] = c
                self.pivot_row[c] = i
                return
            f = F.div(int(self.x[i, c]), int(self.x[r, c]))
            self.x[i, :b] = F.sub(self.x[i, :b], F.mul(f, self.x[r, :b]))
            self.lam[i] = F.sub(self.lam[i], F.mul(f, self.lam[r]))
            pos = c + 1

    def grid(self, l: int) -> list[list]:
        """The known staircase of ``S`` at round ``l``.

        Row ``v`` lists the entries whose whole upper-left rectangle is known,
        followed by ``"?"`` when the next entry has ``rho = l``.
        """
        st = self.setup
        widths = (st.prefix_max < l).sum(axis=1)
        rows = []
        for v in range(st.n):
            w = int(widths[v])
            row = [int(x) for x in self.S[v, :w]]
            if w < st.n and st.rho[v, w] == l:
                row.append("?")
            if not row:
                break
            rows.append(row)
        return rows

    # -- voting --------------------------------------------------------------

    def _is_candidate(self, i: int, j: int, l: int) -> bool:
        i0, j0 = i - 1, j - 1
        if self.width[i0] != j0 or (i0 > 0 and self.width[i0 - 1] <= j0):
            raise NotCandidateError(f"({i}, {j}) is not WB for value {l}")
        return self.lead[i0] < 0 and self.pivot_row[j0] < 0

    def find_candidates(self, l: int) -> list[tuple[int, int]]:
        if self.known[l - 1]:
            raise ValueError(f"s_{l} is already known")
        self.advance(l)
        return [(i, j) for (i, j) in self.setup.wb_by_value.get(l, [])
                if self._is_candidate(i, j, l)]

    def vote(self, cand: tuple[int, int], l: int) -> int:
        i, j = cand
        self.advance(l)
        if self.setup.table.get(i, j) != (WBStatus.WB, l) or not self._is_candidate(i, j, l):
            raise NotCandidateError(f"{cand} is not a candidate for s_{l}")
        F = self.F
        i0, j0 = i - 1, j - 1
        c_l = int(self.setup.coeffs[l - 1, i0, j0])
        discrepancy = F.dot(self.lam[i0, :i0 + 1], self.S[:i0 + 1, j0])
        return F.div(F.neg(discrepancy), c_l)

    def commit(self, l: int, value: int):
        self.s[l - 1] = value
        self.known[l - 1] = True

    def solve_error(self) -> np.ndarray:
        return self.F.matmul(self.setup.H.inverse, self.s)


def init_syndromes(st: DecoderSetup, received) -> DecoderState:
    return DecoderState(st, received)


def find_candidates(state: DecoderState, l: int) -> list[tuple[int, int]]:
    return state.find_candidates(l)


def vote(state: DecoderState, cand: tuple[int, int], l: int) -> int:
    return state.vote(cand, l)


@dataclass
class DecodeResult:
    error: np.ndarray
    codeword: np.ndarray
    syndromes: list
    transcript: list
    status: str = "ok"

    def to_json(self) -> dict:
        return {"status": self.status, "error": self.error.tolist(),
                "codeword": self.codeword.tolist(), "syndromes": self.syndromes,
                "transcript": [r.to_json() for r in self.transcript]}


def decode(st: DecoderSetup, received, record_grid: bool = False) -> DecodeResult:
    """Recover the error pattern by majority voting on unknown syndromes.

    Raises DecodeFailure when some round has no candidates or a tie at the
    top of the tally.
    """
    state = DecoderState(st, received)
    for l in range(1, st.n + 1):
        if state.known[l - 1]:
            continue
        cands = state.find_candidates(l)
        grid = state.grid(l) if record_grid else []
        votes = [state.vote(c, l) for c in cands]
        tally = Counter(votes)
        rnd = Round(l, cands, votes, dict(tally), None, grid)
        state.transcript.append(rnd)
        if not cands:
            raise DecodeFailure("NoCandidates", l, state.transcript)
        ranked = tally.most_common()
        if len(ranked) > 1 and ranked[0][1] == ranked[1][1]:
            raise DecodeFailure("TiedVote", l, state.transcript)
        rnd.value = int(ranked[0][0])
        state.commit(l, rnd.value)
    e = state.solve_error()
    c = st.G.F.sub(state.received, e)
    return DecodeResult(e, c, state.syndromes(), state.transcript)
