"""``fengrao`` command line: bounds, dual bases, encoding, decoding, simulation.

Exit status is 0 on success, 2 when decoding fails and 3 for bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import algcode, frdecode, simulate as sim
from .config import JobConfig
from .errors import ConfigError, DecodeFailure, FengRaoError
from .wbcore import (
    WBStatus,
    build_wb_table,
    check_duality_condition,
    dualize,
    ghw_bound,
    min_distance_bound,
    mu_vector,
    sigma_vector,
)

EXIT_DECODE_FAILURE = 2
EXIT_CONFIG_ERROR = 3


def _int_vector(text: str | None):
    if text is None:
        return None
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError as exc:
        raise ConfigError(f"not a list of integers: {text!r}") from exc


def _variant(cfg: JobConfig, args) -> WBStatus:
    return WBStatus.parse(args.variant) if args.variant else cfg.variant


def _table(cfg: JobConfig):
    return build_wb_table(cfg.basis, cfg.U)


def decoder_setup(cfg: JobConfig) -> frdecode.DecoderSetup:
    if cfg.side != "primary":
        raise ConfigError("decoding is implemented for primary codes")
    code = cfg.code()
    table = None
    if cfg.is_algebra and cfg.U is cfg.basis:
        table = algcode.semigroup_wb_table(cfg.algebra)
    return frdecode.setup(cfg.basis, code.I, cfg.U, table)


# -- commands -------------------------------------------------------------------

def cmd_bounds(cfg: JobConfig, args) -> dict:
    out: dict = {}
    if cfg.has_code:
        T = _table(cfg)
        out["n"] = cfg.n
        out["sigma_wb"] = sigma_vector(T, WBStatus.WB)
        out["sigma_owb"] = sigma_vector(T, WBStatus.OWB)
        out["mu_wb"] = mu_vector(T, WBStatus.WB)
        out["mu_owb"] = mu_vector(T, WBStatus.OWB)
        if cfg.index_set is not None:
            C = cfg.code()
            out["side"] = cfg.side
            out["I"] = list(C.I)
            out["dim"] = C.dim
            out["designed_d"] = min_distance_bound(C, T, _variant(cfg, args))
            out["designed_d_wb"] = min_distance_bound(C, T, WBStatus.WB)
            out["designed_d_owb"] = min_distance_bound(C, T, WBStatus.OWB)
            if cfg.option("t") is not None or args.t is not None:
                ts = _t_values(cfg, args, C.dim)
                out["ghw"] = {str(t): ghw_bound(C, T, _variant(cfg, args), t) for t in ts}
    S = cfg.semigroup
    if S is not None:
        out["delta"] = [list(a) for a in S.delta]
        out["order_sigma"] = [algcode.order_sigma(S, a) for a in S.delta]
        out["order_mu"] = [algcode.order_mu(S, a) for a in S.delta]
        if cfg.index_set is not None and cfg.index_set.n == S.n:
            out["order_bound"] = algcode.order_bound(S, cfg.index_set, cfg.side)
    if not out:
        raise ConfigError("config describes neither a code nor a semigroup")
    return out


def cmd_dualize(cfg: JobConfig, args) -> dict:
    G = cfg.basis
    H = dualize(G)
    status = check_duality_condition(G, H)
    if status != "Full":
        raise FengRaoError(f"dual basis check failed: {status}")
    return {"field": cfg.field.to_json(), "basis": H.to_json()}


def cmd_encode(cfg: JobConfig, args) -> dict:
    msg = _int_vector(args.message) or cfg.option("message")
    if msg is None:
        raise ConfigError("encode needs a message (--message or 'message')")
    C = cfg.code()
    return {"codeword": algcode.encode(C, msg).tolist()}


def cmd_decode(cfg: JobConfig, args) -> dict:
    r = _int_vector(args.received) or cfg.option("received")
    if r is None:
        raise ConfigError("decode needs a received word (--received or 'received')")
    st = decoder_setup(cfg)
    return frdecode.decode(st, r, record_grid=args.grid).to_json()


def cmd_simulate(cfg: JobConfig, args) -> dict:
    st = decoder_setup(cfg)
    code = cfg.code()
    weight = _pick(args.weight, cfg.option("weight"), st.radius)
    trials = _pick(args.trials, cfg.option("trials"), 100)
    seed = _pick(args.seed, cfg.option("seed"), 0)
    if not 0 <= weight <= cfg.n or trials < 1:
        raise ConfigError("need 0 <= weight <= n and trials >= 1")
    return sim.simulate(st, code, weight, trials, seed).to_json()


def cmd_ghw(cfg: JobConfig, args) -> dict:
    C = cfg.code()
    T = _table(cfg)
    variant = _variant(cfg, args)
    ts = _t_values(cfg, args, C.dim)
    return {"variant": variant.name, "dim": C.dim,
            "ghw": {str(t): ghw_bound(C, T, variant, t) for t in ts}}


def _pick(*values):
    return next(v for v in values if v is not None)


def _t_values(cfg: JobConfig, args, dim: int) -> list[int]:
    ts = _int_vector(args.t) if args.t is not None else cfg.t_values(dim)
    bad = [t for t in ts if not 1 <= t <= dim]
    if bad:
        raise ConfigError(f"t values {bad} outside [1, {dim}]")
    return ts


COMMANDS = {
    "bounds": cmd_bounds,
    "dualize": cmd_dualize,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "simulate": cmd_simulate,
    "ghw": cmd_ghw,
}


# -- text rendering ----------------------------------------------------------------

def _fmt(v) -> str:
    if isinstance(v, list):
        return " ".join(_fmt(x) for x in v)
    return str(v)


def render_text(command: str, out: dict) -> str:
    lines = []
    if command == "decode":
        lines.append(f"status: {out['status']}")
        for rnd in out.get("transcript", []):
            cands = " ".join(f"({i},{j})" for i, j in rnd["candidates"])
            lines.append(f"s_{rnd['l']}: candidates {cands or '-'}  votes {_fmt(rnd['votes'])}"
                         f"  -> {rnd['value']}")
        for key in ("syndromes", "error", "codeword"):
            if key in out:
                lines.append(f"{key}: {_fmt(out[key])}")
        return "\n".join(lines)
    if command == "dualize":
        return "\n".join(_fmt(row) for row in out["basis"])
    for key, value in out.items():
        if isinstance(value, dict):
            lines.append(f"{key}:")
            lines.extend(f"  {k}: {_fmt(v)}" for k, v in value.items())
        else:
            lines.append(f"{key}: {_fmt(value)}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fengrao", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", required=True, metavar="PATH")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--out", metavar="PATH", help="also write the JSON result here")
        p.add_argument("--variant", choices=["wb", "owb"])
        p.add_argument("--seed", type=int)
        p.add_argument("--trials", type=int)
        p.add_argument("--weight", type=int)
        p.add_argument("--t", help="GHW orders, e.g. '1,2'")
        p.add_argument("--message", help="message symbols, comma separated")
        p.add_argument("--received", help="received word, comma separated")
        p.add_argument("--grid", action="store_true", help="record syndrome arrays in the transcript")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = JobConfig.load(args.config)
        out = COMMANDS[args.command](cfg, args)
    except DecodeFailure as f:
        out = {"status": "failure", "kind": f.kind, "l": f.l,
               "transcript": [r.to_json() for r in (f.transcript or [])]}
        print(json.dumps(out) if args.json else f"decoding failed: {f}")
        return EXIT_DECODE_FAILURE
    except FengRaoError as exc:
        msg = {"status": "error", "kind": type(exc).__name__, "message": str(exc)}
        print(json.dumps(msg) if args.json else f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    if args.out:
        Path(args.out).write_text(json.dumps(out, indent=1) + "\n")
    print(json.dumps(out) if args.json else render_text(args.command, out))
    return 0


if __name__ == "__main__":
    sys.exit(main())
