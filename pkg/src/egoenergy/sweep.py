"""Parameter sweeps: generate replicate instances along a grid, correlate features
with egonet energies, and write plot-ready CSV tables."""

from __future__ import annotations

import csv
import hashlib
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from . import __version__
from .centrality import FEATURES, feature_matrix
from .generators import MODEL_PARAMS, MODELS, GenSpec, InvalidParam, generate, validate
from .graph import connected_components
from .stats import DEFAULT_BINS, CorrelationMatrix, EntropyTriple, correlation_table, energy_entropies

SWEPT_PARAM = {"ER": "p", "WS": "p", "HK": "p_triangle", "WAXMAN": "alpha"}
DEFAULT_FIXED = {"ER": {}, "WS": {"k": 4}, "HK": {"m": 2}, "WAXMAN": {"beta": 0.1}}
DEFAULT_N = 100
DEFAULT_STEPS = 100
DEFAULT_REPLICATES = 5

CLOSENESS_RULE = "mean distance over all n vertices; unreachable vertices contribute 0"

FEATURE_PAIRS = [(FEATURES[i], FEATURES[j]) for i in range(len(FEATURES)) for j in range(i + 1, len(FEATURES))]
PAIR_COLUMNS = [f"{a}:{b}" for a, b in FEATURE_PAIRS]
ENTROPY_COLUMNS = list(EntropyTriple._fields)


class ConfigInvalid(ValueError):
    pass


def format_real(x: float | None) -> str:
    """12 significant digits, empty for undefined values."""
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return ""
    return repr(float(f"{x:.12g}")) if isinstance(x, float) else str(x)


def uniform_grid(steps: int, lo: float = 0.01, hi: float = 1.0) -> tuple[float, ...]:
    if steps < 1:
        raise ConfigInvalid(f"steps must be >= 1, got {steps}")
    return tuple(round(float(v), 10) for v in np.linspace(lo, hi, steps))


def derive_seed(base_seed: int, grid_index: int, replicate: int) -> int:
    """Per-instance seed; depends only on its own (grid_index, replicate)."""
    h = hashlib.blake2b(f"{grid_index}:{replicate}".encode(), digest_size=8).digest()
    return (int(base_seed) + int.from_bytes(h, "little")) % 2**64


@dataclass(frozen=True)
class SweepConfig:
    model: str
    n: int
    fixed: dict[str, Any]
    grid: tuple[float, ...]
    replicates: int = DEFAULT_REPLICATES
    base_seed: int = 0
    bins: int = DEFAULT_BINS

    @property
    def swept_param(self) -> str:
        return SWEPT_PARAM[self.model]

    def spec(self, grid_index: int, replicate: int) -> GenSpec:
        params = {**self.fixed, self.swept_param: self.grid[grid_index]}
        return GenSpec(self.model, self.n, params, derive_seed(self.base_seed, grid_index, replicate))

    def validate(self) -> None:
        if self.model not in MODELS:
            raise ConfigInvalid(f"unknown model {self.model!r}")
        if not self.grid:
            raise ConfigInvalid("empty grid")
        if any(b <= a for a, b in zip(self.grid, self.grid[1:])):
            raise ConfigInvalid("grid must be strictly increasing")
        if self.replicates < 1:
            raise ConfigInvalid(f"replicates must be >= 1, got {self.replicates}")
        if self.bins < 1:
            raise ConfigInvalid(f"bins must be >= 1, got {self.bins}")
        expected = set(MODEL_PARAMS[self.model]) - {self.swept_param}
        if set(self.fixed) != expected:
            raise ConfigInvalid(f"{self.model} sweep needs fixed params {sorted(expected)}")
        for gi in (0, len(self.grid) - 1):
            try:
                validate(self.spec(gi, 0))
            except InvalidParam as exc:
                raise ConfigInvalid(str(exc)) from exc

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["grid"] = list(self.grid)
        d["swept_param"] = self.swept_param
        return d


def default_sweep(model: str, *, steps: int = DEFAULT_STEPS, n: int = DEFAULT_N,
                  replicates: int = DEFAULT_REPLICATES, base_seed: int = 0,
                  bins: int = DEFAULT_BINS, **fixed: Any) -> SweepConfig:
    model = model.upper()
    if model not in MODELS:
        raise ConfigInvalid(f"unknown model {model!r}")
    params = {**DEFAULT_FIXED[model], **fixed}
    cfg = SweepConfig(model, n, params, uniform_grid(steps), replicates, base_seed, bins)
    cfg.validate()
    return cfg


@dataclass(frozen=True)
class InstanceSummary:
    n: int
    m: int
    components: int
    mean_degree: float


@dataclass(frozen=True)
class InstanceResult:
    spec: GenSpec
    correlations: CorrelationMatrix
    entropy: EntropyTriple
    summary: InstanceSummary


def run_instance(spec: GenSpec, bins: int = DEFAULT_BINS) -> InstanceResult:
    g = generate(spec)
    table = feature_matrix(g)
    summary = InstanceSummary(g.n, g.m, len(connected_components(g)), 2.0 * g.m / g.n if g.n else 0.0)
    if g.n < 2:
        corr = CorrelationMatrix(FEATURES, np.full((len(FEATURES),) * 2, np.nan))
    else:
        corr = correlation_table(table)
    return InstanceResult(spec, corr, energy_entropies(table[:, 5:8], bins), summary)


@dataclass(frozen=True)
class SweepRow:
    grid_index: int
    param_value: float
    replicate: int
    spec: GenSpec
    result: InstanceResult | None = None
    error: str | None = None


@dataclass
class SweepResult:
    config: SweepConfig
    rows: list[SweepRow]
    mean_correlations: np.ndarray = field(repr=False)  # (grid, pairs), NaN if undefined
    mean_entropy: np.ndarray = field(repr=False)  # (grid, 3)

    def failures(self) -> list[SweepRow]:
        return [r for r in self.rows if r.error is not None]

    def mean_curve(self, a: str, b: str) -> np.ndarray:
        """Replicate-mean correlation between features ``a`` and ``b`` along the grid."""
        key = (a, b) if (a, b) in FEATURE_PAIRS else (b, a)
        return self.mean_correlations[:, FEATURE_PAIRS.index(key)]


def _job(args: tuple[int, int, GenSpec, int]) -> SweepRow:
    gi, rep, spec, bins = args
    value = spec.params[SWEPT_PARAM[spec.model]]
    try:
        return SweepRow(gi, value, rep, spec, run_instance(spec, bins))
    except Exception as exc:  # recorded, the sweep carries on
        return SweepRow(gi, value, rep, spec, error=f"{type(exc).__name__}: {exc}")


def _nanmean_rows(block: np.ndarray) -> np.ndarray:
    out = np.full(block.shape[1], np.nan)
    ok = ~np.isnan(block)
    counts = ok.sum(axis=0)
    sums = np.where(ok, block, 0.0).sum(axis=0)
    out[counts > 0] = sums[counts > 0] / counts[counts > 0]
    return out


def run_sweep(config: SweepConfig, jobs: int = 1) -> SweepResult:
    """Run every (grid point, replicate) instance; ``jobs > 1`` uses a process pool.

    Rows come back ordered by (grid_index, replicate) whatever the scheduling,
    so the result depends on ``config`` alone.
    """
    config.validate()
    tasks = [(gi, rep, config.spec(gi, rep), config.bins)
             for gi in range(len(config.grid)) for rep in range(config.replicates)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_job, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        rows = [_job(t) for t in tasks]
    rows.sort(key=lambda r: (r.grid_index, r.replicate))

    n_grid = len(config.grid)
    corr = np.full((n_grid, config.replicates, len(FEATURE_PAIRS)), np.nan)
    ent = np.full((n_grid, config.replicates, 3), np.nan)
    for r in rows:
        if r.result is None:
            continue
        corr[r.grid_index, r.replicate] = [np.nan if v is None else v for v in r.result.correlations.upper()]
        ent[r.grid_index, r.replicate] = r.result.entropy
    mean_corr = np.array([_nanmean_rows(corr[gi]) for gi in range(n_grid)])
    mean_ent = np.array([_nanmean_rows(ent[gi]) for gi in range(n_grid)])
    return SweepResult(config, rows, mean_corr, mean_ent)


# -- output ----------------------------------------------------------------

def _write_csv(path: Path, header: list[str], rows) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def write_sweep(result: SweepResult, outdir: str | Path) -> None:
    """Write manifest.json, correlations.csv, entropy.csv, summary.csv and means.csv."""
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    cfg = result.config
    model = cfg.model

    manifest = {
        "tool": "egoenergy",
        "version": __version__,
        "config": cfg.to_dict(),
        "features": list(FEATURES),
        "closeness_rule": CLOSENESS_RULE,
        "clustering_variant": "standard",
        "eigensolver": "lapack",
        "rng": "numpy PCG64 via SeedSequence(seed)",
        "failures": [{**r.spec.to_dict(), "replicate": r.replicate, "error": r.error}
                     for r in result.failures()],
    }
    with open(out / "manifest.json", "w", encoding="utf-8", newline="\n") as fh:
        fh.write(json.dumps(manifest, indent=2) + "\n")

    corr_rows, ent_rows, sum_rows = [], [], []
    for r in result.rows:
        key = [model, format_real(r.param_value), r.replicate]
        res = r.result
        corr_rows.append(key + ([format_real(v) for v in res.correlations.upper()] if res
                                else [""] * len(PAIR_COLUMNS)))
        ent_rows.append(key + ([format_real(v) for v in res.entropy] if res else [""] * 3))
        s = res.summary if res else None
        sum_rows.append([format_real(r.param_value), r.replicate]
                        + ([s.n, s.m, s.components, format_real(s.mean_degree)] if s else [""] * 4))
    _write_csv(out / "correlations.csv", ["model", "param_value", "replicate", *PAIR_COLUMNS], corr_rows)
    _write_csv(out / "entropy.csv", ["model", "param_value", "replicate", *ENTROPY_COLUMNS], ent_rows)
    _write_csv(out / "summary.csv", ["param_value", "replicate", "n", "m", "components", "mean_degree"], sum_rows)

    mean_rows = []
    for gi, value in enumerate(cfg.grid):
        mean_rows.append([model, format_real(value)]
                         + [format_real(float(v)) for v in result.mean_correlations[gi]]
                         + [format_real(float(v)) for v in result.mean_entropy[gi]])
    _write_csv(out / "means.csv", ["model", "param_value", *PAIR_COLUMNS, *ENTROPY_COLUMNS], mean_rows)
