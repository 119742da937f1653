"""Monte-Carlo channel simulation for the majority-voting decoder.

Each trial draws a uniform message and an error of exact Hamming weight
``weight`` (uniform support, uniform nonzero values).  Trial ``k`` uses its
own PCG64 stream seeded with ``SeedSequence([seed, k])``, so results do
not depend on the order in which trials run.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .algcode import encode
from .errors import DecodeFailure, TOutOfRangeError
from .frdecode import DecoderSetup, decode
from .wbcore import CodeHandle

FAILURE_KINDS = ("TiedVote", "NoCandidates", "WrongCodeword")


@dataclass
class SimReport:
    trials: int
    weight: int
    seed: int
    radius: int
    successes: int = 0
    failures: dict = field(default_factory=lambda: dict.fromkeys(FAILURE_KINDS, 0))
    weight_histogram: dict = field(default_factory=dict)
    wall_time: float = 0.0
    prng: str = "PCG64"

    @property
    def wrong_within_radius(self) -> int:
        return self.failures["WrongCodeword"] if self.weight <= self.radius else 0

    def to_json(self) -> dict:
        return {"prng": self.prng, "seed": self.seed, "trials": self.trials,
                "weight": self.weight, "radius": self.radius,
                "successes": self.successes, "failures": dict(self.failures),
                "weight_histogram": {str(k): v for k, v in sorted(self.weight_histogram.items())},
                "wall_time": round(self.wall_time, 6)}


def trial_rng(seed: int, k: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, k])))


def run_trial(st: DecoderSetup, code: CodeHandle, weight: int, rng) -> str:
    """Outcome of one trial: "ok" or one of FAILURE_KINDS."""
    F, n = code.basis.F, code.n
    c = encode(code, F.random(rng, code.dim))
    e = np.zeros(n, dtype=np.int64)
    if weight:
        support = rng.choice(n, size=weight, replace=False)
        e[support] = F.random(rng, weight, nonzero=True)
    try:
        res = decode(st, F.add(c, e))
    except DecodeFailure as f:
        return f.kind
    return "ok" if np.array_equal(res.codeword, c) else "WrongCodeword"


def simulate(st: DecoderSetup, code: CodeHandle, weight: int, trials: int, seed: int = 0) -> SimReport:
    if not 0 <= weight <= code.n:
        raise TOutOfRangeError(f"error weight {weight} outside [0, {code.n}]")
    if trials < 1:
        raise ValueError("need at least one trial")
    report = SimReport(trials=trials, weight=weight, seed=seed, radius=st.radius)
    t0 = time.perf_counter()
    outcomes = Counter(run_trial(st, code, weight, trial_rng(seed, k)) for k in range(trials))
    report.wall_time = time.perf_counter() - t0
    report.successes = outcomes.pop("ok", 0)
    report.failures.update(outcomes)
    report.weight_histogram = {weight: trials}
    return report
