"""Indexed bases, well-behaving pairs and the Feng-Rao bounds.

All indices exposed by this module are 1-based, as in the coding-theory
literature: ``b_1, ..., b_n``, pairs ``(i, j)`` and filtration levels ``l``.
Internally arrays are 0-based; the conversion happens at the API boundary.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from . import fqla
from .errors import (
    BasisMismatchError,
    DimensionMismatchError,
    EmptyIndexSetError,
    IndexOutOfRangeError,
    NotDualPairError,
    SingularError,
    TOutOfRangeError,
)
from .gf import GF


class WBStatus(enum.IntEnum):
    """Strength of a pair; the ordering encodes WB => WWB => OWB."""

    NotOWB = 0
    OWB = 1
    WWB = 2
    WB = 3

    @classmethod
    def parse(cls, value) -> "WBStatus":
        if isinstance(value, cls):
            return value
        if isinstance(value, str):
            for s in cls:
                if s.name.lower() == value.lower():
                    return s
        raise ValueError(f"unknown status {value!r}")


# -- bases --------------------------------------------------------------------

class IndexedBasis:
    """An ordered basis ``b_1..b_n`` of GF(q)^n (rows of ``vectors``).

    The prefix spans ``L_l = span(b_1..b_l)`` are handled through the cached
    inverse: the coordinates of ``v`` are ``v @ inverse`` and ``rho_bar(v)``
    is the position of the last nonzero coordinate.
    """

    def __init__(self, F: GF, vectors):
        V = fqla.as_matrix(vectors)
        n, cols = V.shape
        if n != cols:
            raise DimensionMismatchError(f"a basis of GF(q)^n needs n vectors of length n, got {n}x{cols}")
        F.check(V)
        try:
            inv = fqla.invert(F, V)
        except SingularError:
            raise SingularError("vectors are linearly dependent") from None
        self.F = F
        self.vectors = V
        self.vectors.setflags(write=False)
        self.inverse = inv
        self.inverse.setflags(write=False)

    @property
    def n(self) -> int:
        return self.vectors.shape[0]

    def __len__(self):
        return self.n

    def __getitem__(self, i: int) -> np.ndarray:
        """The vector ``b_i`` (1-based)."""
        if not 1 <= i <= self.n:
            raise IndexOutOfRangeError(f"basis index {i} outside [1, {self.n}]")
        return self.vectors[i - 1]

    def coordinates(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=np.int64)
        if v.shape[-1] != self.n:
            raise DimensionMismatchError(f"vector length {v.shape[-1]} != {self.n}")
        return self.F.matmul(v, self.inverse)

    def rho_bar(self, v) -> int:
        return rho_bar(self, v)

    def to_json(self) -> list[list[int]]:
        return self.vectors.tolist()

    def __eq__(self, other):
        return (isinstance(other, IndexedBasis) and self.F == other.F
                and np.array_equal(self.vectors, other.vectors))

    def __hash__(self):
        return hash((self.F, self.vectors.tobytes()))

    def __repr__(self):
        return f"IndexedBasis(n={self.n}, field={self.F!r})"


def _last_nonzero(coords: np.ndarray) -> np.ndarray:
    """1-based position of the last nonzero entry along the last axis (0 if none)."""
    nz = coords != 0
    n = coords.shape[-1]
    last = n - np.argmax(nz[..., ::-1], axis=-1)
    return np.where(nz.any(axis=-1), last, 0)


def rho_bar(B: IndexedBasis, v) -> int:
    """Smallest ``l`` with ``v`` in ``L_l``; 0 for the zero vector."""
    v = np.asarray(v, dtype=np.int64).ravel()
    if v.size != B.n:
        raise DimensionMismatchError(f"vector length {v.size} != {B.n}")
    return int(_last_nonzero(B.coordinates(v)))


def star(F: GF, u, v) -> np.ndarray:
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    if u.shape != v.shape:
        raise DimensionMismatchError(f"lengths differ: {u.shape} vs {v.shape}")
    return F.mul(u, v)


def rho_matrix(B: IndexedBasis, U: IndexedBasis) -> np.ndarray:
    """``R[i-1, j-1] = rho_bar_B(b_i * u_j)`` for all pairs."""
    _check_pair(B, U)
    F, n = B.F, B.n
    R = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        prods = F.mul(U.vectors, B.vectors[i][None, :])
        R[i] = _last_nonzero(F.matmul(prods, B.inverse))
    return R


def _check_pair(B: IndexedBasis, U: IndexedBasis):
    if B.F != U.F or B.n != U.n:
        raise BasisMismatchError("bases must share field and length")


def _classify_rho(R: np.ndarray) -> np.ndarray:
    """Vectorised WB/WWB/OWB classification from a full rho matrix."""
    n1, n2 = R.shape
    below = np.full((n1, n2), -1, dtype=np.int64)
    pm = np.maximum.accumulate(np.maximum.accumulate(R, axis=0), axis=1)
    up = below.copy()
    up[1:, :] = pm[:-1, :]
    left = below.copy()
    left[:, 1:] = pm[:, :-1]
    col_prev = below.copy()
    col_prev[1:, :] = np.maximum.accumulate(R, axis=0)[:-1, :]
    row_prev = below.copy()
    row_prev[:, 1:] = np.maximum.accumulate(R, axis=1)[:, :-1]
    owb = R > col_prev
    wwb = owb & (R > row_prev)
    wb = R > np.maximum(up, left)
    status = np.where(wb, WBStatus.WB, np.where(wwb, WBStatus.WWB,
                      np.where(owb, WBStatus.OWB, WBStatus.NotOWB)))
    status[R == 0] = WBStatus.NotOWB
    return status.astype(np.int8)


def classify_pair(B: IndexedBasis, U: IndexedBasis, i: int, j: int) -> tuple[WBStatus, int]:
    """Strongest status of ``(i, j)`` checked directly against the definition."""
    _check_pair(B, U)
    n = B.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexOutOfRangeError(f"pair ({i}, {j}) outside [1, {n}]^2")
    F = B.F

    def r(u, v):
        return rho_bar(B, F.mul(B[u], U[v]))

    target = r(i, j)
    if target == 0:
        return WBStatus.NotOWB, 0
    column = all(r(u, j) < target for u in range(1, i))
    if not column:
        return WBStatus.NotOWB, target
    row = all(r(i, v) < target for v in range(1, j))
    if not row:
        return WBStatus.OWB, target
    rect = all(r(u, v) < target for u in range(1, i) for v in range(1, j))
    return (WBStatus.WB if rect else WBStatus.WWB), target


# -- tables -------------------------------------------------------------------

@dataclass
class WBTable:
    """Partial or exhaustive map ``(i, j) -> (status, rho)`` over a basis pair.

    ``rho`` and ``status`` are n x n arrays (0-based); absent entries have
    status -1.  ``complete`` is True only for exhaustive classification.
    """

    B: IndexedBasis
    U: IndexedBasis
    rho: np.ndarray
    status: np.ndarray
    complete: bool = False

    @classmethod
    def empty(cls, B: IndexedBasis, U: IndexedBasis) -> "WBTable":
        n = B.n
        return cls(B, U, np.zeros((n, n), dtype=np.int64),
                   np.full((n, n), -1, dtype=np.int8), False)

    @property
    def n(self) -> int:
        return self.B.n

    def set(self, i: int, j: int, status, rho: int):
        self.status[i - 1, j - 1] = WBStatus.parse(status)
        self.rho[i - 1, j - 1] = rho

    def get(self, i: int, j: int):
        """``(WBStatus, rho)`` or None when the pair is not recorded."""
        s = int(self.status[i - 1, j - 1])
        if s < 0:
            return None
        return WBStatus(s), int(self.rho[i - 1, j - 1])

    def entries(self, min_status=WBStatus.NotOWB) -> dict:
        min_status = WBStatus.parse(min_status)
        out = {}
        for i0, j0 in zip(*np.nonzero(self.status >= min_status)):
            out[(int(i0) + 1, int(j0) + 1)] = (WBStatus(int(self.status[i0, j0])),
                                              int(self.rho[i0, j0]))
        return out

    def mask(self, variant) -> np.ndarray:
        return self.status >= WBStatus.parse(variant)

    def grid(self, variant="WB") -> list[list[int | None]]:
        """Row-wise rho values of entries at least ``variant``, None elsewhere."""
        m = self.mask(variant)
        return [[int(self.rho[i, j]) if m[i, j] else None for j in range(self.n)]
                for i in range(self.n)]

    def to_json(self) -> list[dict]:
        return [{"i": i, "j": j, "status": s.name, "rho": r}
                for (i, j), (s, r) in sorted(self.entries().items())]

    @classmethod
    def from_json(cls, entries, B: IndexedBasis, U: IndexedBasis, complete=False) -> "WBTable":
        T = cls.empty(B, U)
        for e in entries:
            T.set(int(e["i"]), int(e["j"]), e["status"], int(e["rho"]))
        T.complete = complete
        return T

    def same_entries(self, other: "WBTable", min_status=WBStatus.NotOWB) -> bool:
        return self.entries(min_status) == other.entries(min_status)


def build_wb_table(B: IndexedBasis, U: IndexedBasis, mode: str = "exhaustive",
                   seed: WBTable | None = None) -> WBTable:
    """Classify every pair (``mode="exhaustive"``) or wrap a seed table as partial."""
    _check_pair(B, U)
    if mode == "exhaustive":
        R = rho_matrix(B, U)
        return WBTable(B, U, R, _classify_rho(R), complete=True)
    if mode == "from_seed":
        if seed is None or seed.B != B or seed.U != U:
            raise BasisMismatchError("seed table is over a different basis pair")
        return WBTable(B, U, seed.rho.copy(), seed.status.copy(), complete=False)
    raise ValueError(f"unknown mode {mode!r}")


def table_from_rho(B: IndexedBasis, U: IndexedBasis, R: np.ndarray) -> WBTable:
    """Exhaustive table from a precomputed rho matrix."""
    return WBTable(B, U, np.asarray(R, dtype=np.int64), _classify_rho(np.asarray(R)), True)


def reach_sets(T: WBTable, variant="WB") -> list[frozenset]:
    """``Lambda(i)``: the set of rho values reached from row ``i`` (index i-1)."""
    m = T.mask(variant)
    return [frozenset(int(x) for x in T.rho[i][m[i]]) for i in range(T.n)]


def value_sets(T: WBTable, variant="WB") -> list[frozenset]:
    """``V(l)``: rows ``i`` reaching value ``l`` (index l-1)."""
    m = T.mask(variant)
    out = [set() for _ in range(T.n)]
    for i0, j0 in zip(*np.nonzero(m)):
        out[int(T.rho[i0, j0]) - 1].add(int(i0) + 1)
    return [frozenset(s) for s in out]


def sigma_counts(T: WBTable, variant, i: int) -> int:
    """Number of distinct rho values reached from row ``i`` by pairs at least ``variant``."""
    if not 1 <= i <= T.n:
        raise IndexOutOfRangeError(f"row {i} outside [1, {T.n}]")
    m = T.mask(variant)[i - 1]
    return len(set(T.rho[i - 1][m].tolist()))


def mu_counts(T: WBTable, variant, l: int) -> int:
    """Number of distinct rows ``i`` with a pair at least ``variant`` reaching ``l``."""
    if not 1 <= l <= T.n:
        raise IndexOutOfRangeError(f"value {l} outside [1, {T.n}]")
    m = T.mask(variant) & (T.rho == l)
    return int(m.any(axis=1).sum())


def sigma_vector(T: WBTable, variant="WB") -> list[int]:
    return [len(s) for s in reach_sets(T, variant)]


def mu_vector(T: WBTable, variant="WB") -> list[int]:
    return [len(s) for s in value_sets(T, variant)]


# -- index sets and codes -----------------------------------------------------

@dataclass(frozen=True)
class IndexSet:
    """A subset of ``{1..n}``.  May be empty (e.g. the complement of the
    full set); operations that need a non-empty set raise EmptyIndexSetError."""

    n: int
    members: tuple[int, ...] = field(default=())

    def __post_init__(self):
        members = tuple(sorted(set(int(x) for x in self.members)))
        if any(x < 1 or x > self.n for x in members):
            raise IndexOutOfRangeError(f"indices {members} not within [1, {self.n}]")
        object.__setattr__(self, "members", members)

    @classmethod
    def full(cls, n: int) -> "IndexSet":
        return cls(n, tuple(range(1, n + 1)))

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members

    def others(self) -> tuple[int, ...]:
        """``{1..n}`` minus the members."""
        s = set(self.members)
        return tuple(x for x in range(1, self.n + 1) if x not in s)

    def complement(self) -> "IndexSet":
        return complement(self)

    def require_nonempty(self) -> "IndexSet":
        if not self.members:
            raise EmptyIndexSetError("index set is empty")
        return self


def complement(I: IndexSet) -> IndexSet:
    """``{1..n} \\ {n - i + 1 : i in I}``; an involution."""
    reversed_ = {I.n - i + 1 for i in I}
    return IndexSet(I.n, tuple(x for x in range(1, I.n + 1) if x not in reversed_))


@dataclass
class CodeHandle:
    """``C(B, I)`` (side ``"primary"``) or its dual ``C_perp(B, I)`` (``"dual"``)."""

    basis: IndexedBasis
    I: IndexSet
    side: str = "primary"
    designed_distance: int | None = None

    def __post_init__(self):
        if self.side not in ("primary", "dual"):
            raise ValueError(f"side must be 'primary' or 'dual', not {self.side!r}")
        if self.I.n != self.basis.n:
            raise DimensionMismatchError("index set and basis disagree on n")
        self.I.require_nonempty()

    @property
    def n(self) -> int:
        return self.basis.n

    @property
    def dim(self) -> int:
        return len(self.I) if self.side == "primary" else self.n - len(self.I)

    def _selected(self) -> np.ndarray:
        return self.basis.vectors[[i - 1 for i in self.I]]

    def generator_matrix(self) -> np.ndarray:
        if self.side == "primary":
            return self._selected().copy()
        return fqla.nullspace(self.basis.F, self._selected())

    def parity_check_matrix(self) -> np.ndarray:
        if self.side == "primary":
            return fqla.nullspace(self.basis.F, self._selected())
        return self._selected().copy()

    def contains(self, v) -> bool:
        Hc = self.parity_check_matrix()
        if Hc.shape[0] == 0:
            return True
        return not np.any(self.basis.F.matmul(Hc, np.asarray(v, dtype=np.int64)))


def _variant_rows(C: CodeHandle) -> tuple[int, ...]:
    rows = tuple(C.I) if C.side == "primary" else C.I.others()
    if not rows:
        raise EmptyIndexSetError("no indices to minimise over")
    return rows


def min_distance_bound(C: CodeHandle, T: WBTable, variant="WB") -> int:
    """Feng-Rao bound: min sigma over I (primary) or min mu off I (dual)."""
    if T.B != C.basis:
        raise BasisMismatchError("table is not over the code's basis")
    rows = _variant_rows(C)
    if C.side == "primary":
        return min(sigma_counts(T, variant, i) for i in rows)
    return min(mu_counts(T, variant, l) for l in rows)


def ghw_bound(C: CodeHandle, T: WBTable, variant="WB", t: int = 1) -> int:
    """Lower bound on the ``t``-th generalized Hamming weight.

    Minimises the size of the union of ``t`` reach sets (primary side) or
    value sets (dual side) over the admissible indices, by depth-first
    search with pruning on the incumbent.
    """
    if T.B != C.basis:
        raise BasisMismatchError("table is not over the code's basis")
    rows = _variant_rows(C)
    if not 1 <= t <= len(rows):
        raise TOutOfRangeError(f"t = {t} outside [1, {len(rows)}]")
    sets = reach_sets(T, variant) if C.side == "primary" else value_sets(T, variant)
    masks = [sum(1 << (x - 1) for x in sets[k - 1]) for k in rows]
    return _min_union(masks, t)


def _min_union(masks: list[int], t: int) -> int:
    order = sorted(range(len(masks)), key=lambda k: bin(masks[k]).count("1"))
    masks = [masks[k] for k in order]
    # the t smallest sets give an incumbent to prune against
    acc = 0
    for m in masks[:t]:
        acc |= m
    best = bin(acc).count("1")

    def dfs(start, chosen, acc):
        nonlocal best
        if bin(acc).count("1") >= best:
            return
        if chosen == t:
            best = bin(acc).count("1")
            return
        for k in range(start, len(masks) - (t - chosen) + 1):
            dfs(k + 1, chosen + 1, acc | masks[k])

    dfs(0, 0, 0)
    return best


# -- duality -------------------------------------------------------------------

def dualize(G: IndexedBasis) -> IndexedBasis:
    """The unique basis ``H`` with ``g_i . h_j = delta(i, n - j + 1)``.

    ``h_k`` is column ``n - k + 1`` of the inverse of the matrix with rows g_i.
    """
    H = G.inverse[:, ::-1].T.copy()
    return IndexedBasis(G.F, H)


def check_duality_condition(G: IndexedBasis, H: IndexedBasis) -> str:
    """``"Full"``, ``"Triangular"`` (the weaker lower-triangular condition) or ``"Neither"``."""
    if G.n != H.n or G.F != H.F:
        raise DimensionMismatchError("bases differ in length or field")
    n = G.n
    P = G.F.matmul(G.vectors, H.vectors.T)  # P[i, j] = g_i . h_j
    anti = np.eye(n, dtype=np.int64)[:, ::-1]
    if np.array_equal(P, anti):
        return "Full"
    for i in range(n):
        k = n - 1 - i
        if P[i, k] == 0 or np.any(P[i, :k]):
            return "Neither"
    return "Triangular"


def translate_wb_table(T: WBTable, H: IndexedBasis) -> WBTable:
    """Carry WB/OWB information from ``(G, U)`` over to ``(H, U)``.

    An entry ``(i, j)`` with value ``k`` becomes ``(n - k + 1, j)`` with value
    ``n - i + 1``.  WB stays WB; WWB and OWB entries arrive as OWB; entries
    below OWB are dropped, so the result is always marked partial.
    """
    G = T.B
    if check_duality_condition(G, H) != "Full":
        raise NotDualPairError("H is not the dual basis of the table's basis")
    n = T.n
    out = WBTable.empty(H, T.U)
    for i0, j0 in zip(*np.nonzero(T.status >= WBStatus.OWB)):
        k = int(T.rho[i0, j0])
        s = WBStatus.WB if T.status[i0, j0] == WBStatus.WB else WBStatus.OWB
        out.status[n - k, j0] = s
        out.rho[n - k, j0] = n - int(i0)
    return out


def code_spans_equal(F: GF, A, B) -> bool:
    """True when the row spaces of ``A`` and ``B`` coincide."""
    A, B = fqla.as_matrix(A), fqla.as_matrix(B)
    ra, rb = fqla.rank(F, A), fqla.rank(F, B)
    return ra == rb == fqla.rank(F, np.vstack([A, B]))
