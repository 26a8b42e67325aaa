"""Batch experiment harness: generate known-optimum instances, solve them,
aggregate normalized error / hit / iteration statistics into CSV rows.

A bench spec is a dict (usually loaded from JSON):

    {
      "pairs": [[5, 10], [25, 10]],      # (n, M) per row group
      "alpha": 2.0,
      "instancesPerPair": 40,
      "baseSeed": 100,                    # instance seeds base..base+k-1
      "modes": ["grow-r", "grow-n"],
      "config": {"p0": 0.5, "maxExpLength": 12, ...}   # optional overrides
    }

The solver seed for every run equals the instance seed, so a spec pins the
whole experiment; rows come out in (pair, mode) order.  Timing columns are
wall-clock and can be zeroed (include_timing=False) when byte-stable output
matters more than speed measurements.
"""

from __future__ import annotations

import statistics
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .generate import GenConfig, GenerationError, generate_instance
from .local_search import GROW_N, GROW_R, local_search
from .solver import SolverConfig

_MODE_LETTER = {GROW_R: "R", GROW_N: "N"}

CSV_HEADER = ("n,M,alpha,mode,avgErrPct,stdevErrPct,maxErrPct,"
              "hits,avgIter,stdevIter,avgTimeMs")


@dataclass(frozen=True)
class BenchRow:
    n: int
    capacity: int
    alpha: float
    mode: str            # "R" or "N"
    avg_err_pct: float
    stdev_err_pct: float
    max_err_pct: float
    hits: int
    avg_iter: float
    stdev_iter: float
    avg_time_ms: float

    def to_csv(self) -> str:
        return (f"{self.n},{self.capacity},{self.alpha},{self.mode},"
                f"{self.avg_err_pct:.4f},{self.stdev_err_pct:.4f},"
                f"{self.max_err_pct:.4f},{self.hits},"
                f"{self.avg_iter:.2f},{self.stdev_iter:.2f},"
                f"{self.avg_time_ms:.1f}")


def _config_from_spec(cfg: dict, seed: int) -> SolverConfig:
    return SolverConfig(
        p0=cfg.get("p0", 0.5),
        max_exp_length=cfg.get("maxExpLength", 12),
        regrow_size=cfg.get("regrowSize", 9),
        max_iterations=cfg.get("maxIterations", 10_000),
        stagnation_limit=cfg.get("stagnationLimit", 2_000),
        grow_n_attempts=cfg.get("growNAttempts", 50),
        seed=seed,
    )


def _run_one(job) -> tuple | None:
    n, capacity, alpha, seed, mode, cfg_dict = job
    try:
        gen = generate_instance(GenConfig(n=n, capacity=capacity, alpha=alpha, seed=seed))
    except GenerationError as exc:
        print(f"skip n={n} M={capacity} seed={seed}: {exc}", file=sys.stderr)
        return None
    instance = gen.instance
    config = _config_from_spec(cfg_dict, seed)
    best, stats = local_search(instance, config, mode)
    opt = instance.known_optimum
    err_pct = (opt - best.objective) / opt * 100.0
    return (err_pct, stats.iteration_of_best, stats.wall_millis)


def run_bench(spec: dict, workers: int = 1, include_timing: bool = True) -> list[BenchRow]:
    """Execute a bench spec; returns rows in (pair, mode) order."""
    pairs = [(int(n), int(m)) for n, m in spec["pairs"]]
    alpha = float(spec.get("alpha", 2.0))
    count = int(spec.get("instancesPerPair", 10))
    base_seed = int(spec.get("baseSeed", 0))
    modes = spec.get("modes") or [spec.get("mode", GROW_N)]
    cfg_dict = spec.get("config", {})
    jobs = []
    for n, capacity in pairs:
        for mode in modes:
            if mode not in _MODE_LETTER:
                raise ValueError(f"unknown mode in bench spec: {mode}")
            for idx in range(count):
                jobs.append((n, capacity, alpha, base_seed + idx, mode, cfg_dict))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(job) for job in jobs]
    rows: list[BenchRow] = []
    pos = 0
    for n, capacity in pairs:
        for mode in modes:
            chunk = [r for r in results[pos:pos + count] if r is not None]
            pos += count
            if not chunk:
                raise GenerationError(
                    f"all {count} instances failed for n={n} M={capacity}")
            errs = [r[0] for r in chunk]
            iters = [float(r[1]) for r in chunk]
            times = [r[2] for r in chunk]
            rows.append(BenchRow(
                n=n,
                capacity=capacity,
                alpha=alpha,
                mode=_MODE_LETTER[mode],
                avg_err_pct=statistics.mean(errs),
                stdev_err_pct=statistics.pstdev(errs),
                max_err_pct=max(errs),
                hits=sum(1 for e in errs if e == 0.0),
                avg_iter=statistics.mean(iters),
                stdev_iter=statistics.pstdev(iters),
                avg_time_ms=statistics.mean(times) if include_timing else 0.0,
            ))
    return rows


def rows_to_csv(rows) -> str:
    return "\n".join([CSV_HEADER] + [row.to_csv() for row in rows]) + "\n"
