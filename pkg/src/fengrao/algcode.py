"""Evaluation codes from multivariate monomial algebras, and order bounds.

A :class:`MonomialAlgebra` is ``GF(q)[X_1..X_m]`` evaluated on a Cartesian
point set ``S_1 x ... x S_m``.  The weight of ``X^a`` is its exponent
vector ``a``; the monomials whose evaluations strictly grow the image span,
scanned in the chosen monomial order, give ``alpha(1) < ... < alpha(n)``
and the evaluation basis ``b_i = ev(X^alpha(i))``.

:class:`SemigroupData` carries only the numeric side (a semigroup and the
finite set ``delta``) so the same order-bound routines serve both the
monomial algebras above and numerical semigroups (``r = 1``).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import (
    DimOutOfRangeError,
    DuplicatePointError,
    EmptyIndexSetError,
    EmptyPointSetError,
    FullIndexSetError,
    LengthMismatchError,
    NotInDeltaError,
    SideMismatchError,
)
from .gf import GF
from .wbcore import CodeHandle, IndexedBasis, IndexSet, WBStatus, WBTable

ORDER_KINDS = ("graded-lex", "lex", "graded-reverse-lex")


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on exponent vectors of length ``m``.

    ``priority`` lists variable indices from most to least significant.  The
    default makes the last variable most significant, so for two variables
    ``(1, 0) < (0, 1)``, i.e. ``X < Y``.
    """

    m: int
    kind: str = "graded-lex"
    priority: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"order kind must be one of {ORDER_KINDS}")
        pr = self.priority
        if pr is None:
            pr = tuple(reversed(range(self.m)))
        pr = tuple(int(v) for v in pr)
        if sorted(pr) != list(range(self.m)):
            raise ValueError(f"priority {pr} is not a permutation of range({self.m})")
        object.__setattr__(self, "priority", pr)

    def key(self, a: Sequence[int]) -> tuple:
        a = tuple(a)
        if self.kind == "lex":
            return tuple(a[v] for v in self.priority)
        if self.kind == "graded-lex":
            return (sum(a),) + tuple(a[v] for v in self.priority)
        # graded reverse lex: ties go to the smaller exponent in the least
        # significant variable where the vectors differ
        return (sum(a),) + tuple(-a[v] for v in reversed(self.priority))

    def less(self, a, b) -> bool:
        return self.key(a) < self.key(b)

    def sort(self, monomials):
        return sorted(monomials, key=self.key)

    def to_json(self) -> dict:
        return {"kind": self.kind, "priority": list(self.priority)}


def _box(sizes):
    return itertools.product(*(range(s) for s in sizes))


class MonomialAlgebra:
    """Monomials in ``m`` variables evaluated on a Cartesian point set.

    Points are enumerated row-major over ``(S_1, ..., S_m)``: the first
    coordinate varies slowest, each ``S_k`` in the order given.
    """

    def __init__(self, F: GF, m: int, order: MonomialOrder, point_sets):
        if len(point_sets) != m:
            raise ValueError(f"need {m} point sets, got {len(point_sets)}")
        sets = []
        for S in point_sets:
            S = [int(x) for x in S]
            if not S:
                raise EmptyPointSetError("point sets must be non-empty")
            if len(set(S)) != len(S):
                raise DuplicatePointError(f"duplicate points in {S}")
            F.check(S)
            sets.append(tuple(S))
        if order.m != m:
            raise ValueError("order and algebra disagree on the number of variables")
        self.F = F
        self.m = m
        self.order = order
        self.point_sets = tuple(sets)
        self.points = np.array(list(itertools.product(*sets)), dtype=np.int64).reshape(-1, m)
        self.n = len(self.points)
        self._powers = [self._power_table(k) for k in range(m)]
        self.delta, vectors = self._compute_delta()
        self.basis = IndexedBasis(F, vectors)
        self._index = {a: i + 1 for i, a in enumerate(self.delta)}

    def _power_table(self, k):
        # rows e: coordinate k of every point raised to e, e < |S_k|
        col = self.points[:, k]
        size = len(self.point_sets[k])
        table = np.ones((max(size, 1), self.n), dtype=np.int64)
        for e in range(1, size):
            table[e] = self.F.mul(table[e - 1], col)
        return table

    def ev_monomial(self, a: Sequence[int]) -> np.ndarray:
        F = self.F
        out = np.ones(self.n, dtype=np.int64)
        for k, e in enumerate(a):
            if e < len(self.point_sets[k]):
                factor = self._powers[k][e]
            else:
                factor = F.pow(self.points[:, k], e)
            out = F.mul(out, factor)
        return out

    def evaluate(self, poly: dict) -> np.ndarray:
        """Evaluate ``{exponent tuple: coefficient}`` at every point."""
        F = self.F
        out = np.zeros(self.n, dtype=np.int64)
        for a, c in poly.items():
            out = F.add(out, F.mul(int(c), self.ev_monomial(a)))
        return out

    def _compute_delta(self):
        """Scan monomials in order, keeping those that enlarge the span.

        A monomial with an exponent ``>= |S_k|`` in some variable agrees on
        the point set with a combination of strictly smaller monomials, so
        only the exponent box needs to be scanned.
        """
        F, n = self.F, self.n
        sizes = [len(S) for S in self.point_sets]
        echelon = np.zeros((0, n), dtype=np.int64)  # kept reduced at its pivots
        pivots: list[int] = []
        delta, vectors = [], []
        for a in self.order.sort(_box(sizes)):
            v = self.ev_monomial(a)
            w = v
            if pivots:
                w = F.sub(v, F.matmul(v[pivots], echelon))
            nz = np.flatnonzero(w)
            if nz.size == 0:
                continue
            c = int(nz[0])
            w = F.mul(w, F.inv(int(w[c])))
            col = echelon[:, c].copy()
            if col.any():
                echelon = F.sub(echelon, F.mul(col[:, None], w[None, :]))
            echelon = np.vstack([echelon, w])
            pivots.append(c)
            delta.append(tuple(int(x) for x in a))
            vectors.append(v)
            if len(delta) == n:
                break
        if len(delta) != n:
            raise RuntimeError("evaluation map is not surjective on the point set")
        return tuple(delta), np.array(vectors, dtype=np.int64)

    def index_of(self, a) -> int:
        """1-based position of ``a`` in delta."""
        try:
            return self._index[tuple(a)]
        except KeyError:
            raise NotInDeltaError(f"{tuple(a)} is not in delta") from None

    def semigroup(self) -> "SemigroupData":
        return SemigroupData(r=self.m, delta=self.delta, contains=_in_orthant,
                             order_key=self.order.key)

    def to_json(self) -> dict:
        return {"field": self.F.to_json(), "vars": self.m,
                "order": self.order.to_json(),
                "point_sets": [list(S) for S in self.point_sets]}

    def __repr__(self):
        return f"MonomialAlgebra({self.F!r}, m={self.m}, n={self.n})"


def build_algebra(F: GF, m: int, order: MonomialOrder | str = "graded-lex",
                  point_sets=None) -> MonomialAlgebra:
    if isinstance(order, str):
        order = MonomialOrder(m, order)
    return MonomialAlgebra(F, m, order, point_sets)


def _in_orthant(a) -> bool:
    return all(x >= 0 for x in a)


# -- semigroups ----------------------------------------------------------------

class NumericalSemigroup:
    """Membership in the additive monoid generated by positive integers."""

    def __init__(self, generators):
        gens = sorted({int(g) for g in generators})
        if not gens or gens[0] <= 0:
            raise ValueError("generators must be positive integers")
        self.generators = tuple(gens)
        self._member = [True]

    def _extend(self, limit):
        member = self._member
        for x in range(len(member), limit + 1):
            member.append(any(x >= g and member[x - g] for g in self.generators))

    def __contains__(self, x) -> bool:
        x = int(x)
        if x < 0:
            return False
        self._extend(x)
        return self._member[x]

    def gaps(self) -> list[int]:
        """The finitely many non-members (requires coprime generators)."""
        if math.gcd(*self.generators) != 1:
            raise ValueError("generators are not coprime; infinitely many gaps")
        a, b = self.generators[0], self.generators[-1]
        bound = max((a - 1) * (b - 1), 1)
        return [x for x in range(bound + 1) if x not in self]

    def frobenius(self) -> int:
        g = self.gaps()
        return g[-1] if g else -1


def _vec(x) -> tuple[int, ...]:
    if isinstance(x, (int, np.integer)):
        return (int(x),)
    return tuple(int(v) for v in x)


@dataclass(frozen=True)
class SemigroupData:
    """A semigroup ``Gamma`` in N_0^r (membership oracle) and a sorted finite
    ``delta`` inside it.  Elements are tuples; for ``r = 1`` plain ints are
    accepted by every function and converted."""

    r: int
    delta: tuple
    contains: Callable = field(compare=False)
    order_key: Callable | None = field(default=None, compare=False)

    def __post_init__(self):
        delta = tuple(_vec(x) for x in self.delta)
        if any(len(d) != self.r for d in delta):
            raise ValueError("delta elements must have length r")
        if not all(self.contains(d) for d in delta):
            raise ValueError("delta must lie inside the semigroup")
        key = self.order_key or (lambda a: a)
        keys = [key(d) for d in delta]
        if any(k1 >= k2 for k1, k2 in zip(keys, keys[1:])):
            raise ValueError("delta must be strictly increasing in the order")
        object.__setattr__(self, "delta", delta)

    @property
    def n(self) -> int:
        return len(self.delta)

    def alpha(self, i: int) -> tuple[int, ...]:
        return self.delta[i - 1]

    def index_of(self, x) -> int:
        x = _vec(x)
        try:
            return self.delta.index(x) + 1
        except ValueError:
            raise NotInDeltaError(f"{x} is not in delta") from None

    @classmethod
    def numerical(cls, generators, delta) -> "SemigroupData":
        sg = NumericalSemigroup(generators)
        return cls(r=1, delta=tuple(sorted(_vec(d) for d in delta)),
                   contains=lambda a: a[0] in sg)

    @classmethod
    def box(cls, sizes, order: MonomialOrder | None = None) -> "SemigroupData":
        """``Gamma = N_0^r`` with delta the exponent box of the given side lengths."""
        order = order or MonomialOrder(len(sizes))
        return cls(r=len(sizes), delta=tuple(order.sort(_box(sizes))),
                   contains=_in_orthant, order_key=order.key)


def _diff(a, b):
    return tuple(x - y for x, y in zip(a, b))


def order_sigma(S: SemigroupData, lam) -> int:
    """Number of ``eta`` in delta with ``eta - lam`` in the semigroup."""
    lam = _vec(lam)
    S.index_of(lam)
    return sum(1 for eta in S.delta if S.contains(_diff(eta, lam)))


def order_mu(S: SemigroupData, eta) -> int:
    """Number of ``lam`` in the semigroup with ``eta - lam`` in the semigroup."""
    eta = _vec(eta)
    S.index_of(eta)
    # any such lam lies in the box [0, eta]
    return sum(1 for lam in _box([e + 1 for e in eta])
               if S.contains(lam) and S.contains(_diff(eta, lam)))


def order_bound(S: SemigroupData, I: IndexSet, side: str = "primary") -> int:
    """Order bound for ``C(B, I)`` (primary) or ``C_perp(B, I)`` (dual)."""
    if not len(I):
        raise EmptyIndexSetError("index set is empty")
    if side == "primary":
        return min(order_sigma(S, S.alpha(i)) for i in I)
    if side == "dual":
        rest = I.others()
        if not rest:
            raise FullIndexSetError("dual of the full index set is the zero code")
        return min(order_mu(S, S.alpha(l)) for l in rest)
    raise SideMismatchError(f"unknown side {side!r}")


def semigroup_wb_table(A: MonomialAlgebra) -> WBTable:
    """WB pairs certified by the semigroup: ``alpha(i) + alpha(j) = alpha(l)``."""
    B = A.basis
    T = WBTable.empty(B, B)
    for i, a in enumerate(A.delta, start=1):
        for j, b in enumerate(A.delta, start=1):
            l = A._index.get(tuple(x + y for x, y in zip(a, b)))
            if l is not None:
                T.set(i, j, WBStatus.WB, l)
    return T


# -- codes ---------------------------------------------------------------------

def construct_code(A: MonomialAlgebra, I: IndexSet, side: str = "primary") -> CodeHandle:
    if I.n != A.n:
        raise LengthMismatchError(f"index set is for n = {I.n}, algebra has n = {A.n}")
    I.require_nonempty()
    d = order_bound(A.semigroup(), I, side)
    return CodeHandle(A.basis, I, side, designed_distance=d)


def design_improved_code(A: MonomialAlgebra, target_dim: int, side: str = "primary") -> IndexSet:
    """Index set of the requested dimension chosen greedily by order-bound values.

    Primary side keeps the ``target_dim`` indices of largest sigma; dual side
    leaves out of ``I`` the ``target_dim`` indices of largest mu.  Ties go to
    the smaller index.
    """
    n = A.n
    if not 1 <= target_dim <= n:
        raise DimOutOfRangeError(f"dimension {target_dim} outside [1, {n}]")
    S = A.semigroup()
    if side == "primary":
        score = [order_sigma(S, a) for a in A.delta]
        ranked = sorted(range(1, n + 1), key=lambda i: (-score[i - 1], i))
        return IndexSet(n, tuple(ranked[:target_dim]))
    if side == "dual":
        if target_dim == n:
            raise DimOutOfRangeError("the dual of a non-empty I has dimension < n")
        score = [order_mu(S, a) for a in A.delta]
        ranked = sorted(range(1, n + 1), key=lambda l: (-score[l - 1], l))
        kept = set(ranked[:target_dim])
        return IndexSet(n, tuple(l for l in range(1, n + 1) if l not in kept))
    raise SideMismatchError(f"unknown side {side!r}")


def encode(C: CodeHandle, message) -> np.ndarray:
    """``sum(message[k] * b_{i_k})`` over the sorted members of I."""
    if C.side != "primary":
        raise SideMismatchError("only primary codes have a message encoder")
    message = np.asarray(message, dtype=np.int64).ravel()
    if message.size != len(C.I):
        raise LengthMismatchError(f"message has length {message.size}, code dimension is {len(C.I)}")
    F = C.basis.F
    F.check(message)
    rows = C.basis.vectors[[i - 1 for i in C.I]]
    return F.matmul(message, rows)
