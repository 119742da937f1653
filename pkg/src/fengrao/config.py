"""Job configuration files.

A config is a JSON object.  The code is given either by an algebra::

    {"field": {"p": 5}, "vars": 2, "order": {"kind": "graded-lex"},
     "point_sets": [[1, 2, 3], [1, 2, 3]], "I": [1, 2, 3, 5]}

or by an explicit basis (rows, canonical integers)::

    {"field": {"p": 5}, "basis": [[...], ...], "I": [...]}

Optional keys: ``U`` (second basis, default the code basis), ``target_dim``
(instead of ``I``), ``side`` ("primary" or "dual"), ``variant`` ("wb" or
"owb"), ``t`` (int or list), ``message``, ``received``, ``seed``,
``trials``, ``weight``, and ``semigroup`` for order-bound tables without a
code (``{"r": 1, "generators": [...], "delta": [...]}`` or
``{"r": m, "box": [...]}``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

from .algcode import MonomialAlgebra, MonomialOrder, SemigroupData, design_improved_code
from .errors import ConfigError, FengRaoError
from .gf import GF
from .wbcore import CodeHandle, IndexedBasis, IndexSet, WBStatus

_KNOWN = {"field", "vars", "order", "point_sets", "basis", "U", "I", "target_dim", "side",
          "variant", "t", "message", "received", "seed", "trials", "weight", "semigroup"}


def _int_list(value, name):
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise ConfigError(f"{name} must be a list of integers")
    return value


def _matrix(value, name):
    if not isinstance(value, list) or not value:
        raise ConfigError(f"{name} must be a non-empty list of rows")
    rows = [_int_list(r, f"{name} row") for r in value]
    if len({len(r) for r in rows}) != 1:
        raise ConfigError(f"{name} rows have different lengths")
    return rows


@dataclass
class JobConfig:
    raw: dict = field(repr=False)

    def __post_init__(self):
        if not isinstance(self.raw, dict):
            raise ConfigError("config must be a JSON object")
        unknown = set(self.raw) - _KNOWN
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        if self.side not in ("primary", "dual"):
            raise ConfigError(f"side must be 'primary' or 'dual', not {self.side!r}")
        if "basis" in self.raw and "point_sets" in self.raw:
            raise ConfigError("give either 'basis' or an algebra, not both")
        if "I" in self.raw and "target_dim" in self.raw:
            raise ConfigError("give either 'I' or 'target_dim', not both")
        # resolve eagerly so that errors surface at load time
        try:
            if "field" in self.raw or self.has_code:
                self.field
            if self.has_code:
                self.basis, self.U
            self.index_set
            if "semigroup" in self.raw:
                self.semigroup
        except ConfigError:
            raise
        except (FengRaoError, KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"invalid config: {exc}") from exc

    @classmethod
    def load(cls, source) -> "JobConfig":
        if isinstance(source, dict):
            return cls(source)
        try:
            data = json.loads(Path(source).read_text())
        except OSError as exc:
            raise ConfigError(f"cannot read config: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config is not valid JSON: {exc}") from exc
        return cls(data)

    # -- simple options ----------------------------------------------------

    @property
    def side(self) -> str:
        return self.raw.get("side", "primary")

    @property
    def variant(self) -> WBStatus:
        v = self.raw.get("variant", "wb")
        try:
            return WBStatus.parse(v)
        except (ValueError, KeyError) as exc:
            raise ConfigError(f"bad variant {v!r}") from exc

    def option(self, key, default=None):
        return self.raw.get(key, default)

    @property
    def has_code(self) -> bool:
        return "basis" in self.raw or "point_sets" in self.raw

    @property
    def is_algebra(self) -> bool:
        return "point_sets" in self.raw

    # -- derived objects -----------------------------------------------------

    @cached_property
    def field(self) -> GF:
        f = self.raw.get("field")
        if not isinstance(f, dict) or "p" not in f:
            raise ConfigError("'field' must be an object with at least 'p'")
        try:
            return GF.from_json(f)
        except FengRaoError as exc:
            raise ConfigError(f"bad field: {exc}") from exc

    @cached_property
    def algebra(self) -> MonomialAlgebra | None:
        if not self.is_algebra:
            return None
        pts = self.raw["point_sets"]
        if not isinstance(pts, list) or not pts:
            raise ConfigError("'point_sets' must be a non-empty list")
        pts = [_int_list(s, "point set") for s in pts]
        m = self.raw.get("vars", len(pts))
        if m != len(pts):
            raise ConfigError(f"'vars' is {m} but {len(pts)} point sets were given")
        o = self.raw.get("order", {})
        if isinstance(o, str):
            o = {"kind": o}
        order = MonomialOrder(m, o.get("kind", "graded-lex"), o.get("priority"))
        return MonomialAlgebra(self.field, m, order, pts)

    @cached_property
    def basis(self) -> IndexedBasis:
        if self.is_algebra:
            return self.algebra.basis
        if "basis" not in self.raw:
            raise ConfigError("config has neither 'basis' nor an algebra")
        return IndexedBasis(self.field, _matrix(self.raw["basis"], "basis"))

    @cached_property
    def U(self) -> IndexedBasis:
        if "U" not in self.raw:
            return self.basis
        U = IndexedBasis(self.field, _matrix(self.raw["U"], "U"))
        if U.n != self.basis.n:
            raise ConfigError("U and the code basis have different lengths")
        return U

    @property
    def n(self) -> int:
        if self.has_code:
            return self.basis.n
        if self.semigroup is not None:
            return self.semigroup.n
        raise ConfigError("config has neither 'basis' nor an algebra")

    @cached_property
    def index_set(self) -> IndexSet | None:
        if "I" not in self.raw and "target_dim" not in self.raw:
            return None
        n = self.n
        if "I" in self.raw:
            return IndexSet(n, tuple(_int_list(self.raw["I"], "I")))
        if "target_dim" in self.raw:
            k = self.raw["target_dim"]
            if self.is_algebra:
                return design_improved_code(self.algebra, k, self.side)
            if not isinstance(k, int) or not 1 <= k <= n:
                raise ConfigError(f"target_dim must lie in [1, {n}]")
            # without an algebra there is nothing to rank by: take the first indices
            if self.side == "primary":
                return IndexSet(n, tuple(range(1, k + 1)))
            return IndexSet(n, tuple(range(1, n - k + 1)))
        return None

    def code(self) -> CodeHandle:
        if self.index_set is None:
            raise ConfigError("this command needs 'I' or 'target_dim'")
        return CodeHandle(self.basis, self.index_set, self.side)

    @cached_property
    def semigroup(self) -> SemigroupData | None:
        sg = self.raw.get("semigroup")
        if sg is None:
            return self.algebra.semigroup() if self.is_algebra else None
        if "generators" in sg:
            return SemigroupData.numerical(_int_list(sg["generators"], "generators"),
                                           _int_list(sg["delta"], "delta"))
        if "box" in sg:
            return SemigroupData.box(_int_list(sg["box"], "box"))
        raise ConfigError("semigroup needs 'generators' and 'delta', or 'box'")

    def t_values(self, dim: int) -> list[int]:
        t = self.raw.get("t")
        if t is None:
            return list(range(1, dim + 1))
        return [t] if isinstance(t, int) else _int_list(t, "t")

    def to_json(self) -> dict:
        """Explicit-basis form of this config, loadable again with the same results."""
        out = {k: v for k, v in self.raw.items()
               if k not in ("vars", "order", "point_sets", "target_dim", "basis", "I")}
        out["field"] = self.field.to_json()
        if self.has_code:
            out["basis"] = self.basis.to_json()
            if self.index_set is not None:
                out["I"] = list(self.index_set)
        return out
