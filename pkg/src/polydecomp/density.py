"""Tube densities around the variety of decomposable polynomials.

A degree-n monic original polynomial is a point of R^(n-1) (or C^(n-1)).
Around each decomposable point we attach an epsilon-box in the fixed
coordinate directions of the complement of the determining index set, clip
everything to the coefficient box of radius B, and measure the resulting
density.  This module provides

* the closed-form lower/upper density bounds, real and complex, for a single
  divisor and for the union of the two largest components,
* the comparison hypersurface bound (n^2 - 2n) (eps/B)^2,
* an exact membership oracle for the tube (the section pins down the unique
  variety point sharing a sample's determining coordinates),
* reproducible Monte Carlo estimators: a plain indicator average and a
  conditional (Rao-Blackwellized) variant that integrates the complement
  coordinates exactly per sample and only ever samples the determining ones.

Estimators draw from counter-based Philox streams keyed by (seed, block), so
results are reproducible and independent of how many worker threads run the
blocks; POLYDECOMP_THREADS caps the workers.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .batched import section_batch
from .decompose import divisor_plan, is_composite, nt_set, section

_BLOCK_SIZE = 1 << 16
_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class TubeSpec:
    """An epsilon-tube experiment: degree, target divisor(s), radii, field.

    ``d = None`` targets the union of the tubes around the two largest
    components (divisors l and n/l for the least prime factor l).
    """

    n: int
    d: int | None
    epsilon: float
    B: float
    field: str = "real"

    def __post_init__(self):
        if not (0 < self.epsilon < self.B):
            raise ValueError("need 0 < epsilon < B")
        if self.field not in ("real", "complex"):
            raise ValueError(f"unknown field {self.field!r}")
        if not is_composite(self.n):
            raise ValueError(f"degree {self.n} is not composite")
        if self.d is not None:
            nt_set(self.n, self.d)  # validates the divisor

    @property
    def is_union(self) -> bool:
        return self.d is None

    @property
    def target(self):
        return "union" if self.d is None else self.d

    @property
    def divisors(self) -> tuple[int, ...]:
        if self.d is not None:
            return (self.d,)
        l = divisor_plan(self.n).least_prime
        return (l,) if l * l == self.n else (l, self.n // l)


@dataclass(frozen=True)
class DensityBounds:
    """Closed-form density bracket; upper is capped at 1, raw kept alongside."""

    lower: float
    upper: float
    upper_raw: float

    @property
    def capped(self) -> bool:
        return self.upper_raw > 1.0


@dataclass(frozen=True)
class EstimateResult:
    """A Monte Carlo density estimate with its sampling pedigree."""

    mean: float
    std_error: float
    samples: int
    seed: int
    mode: str


def _check_radii(epsilon: float, B: float) -> None:
    if not (0 < epsilon < B):
        raise ValueError("need 0 < epsilon < B")


def _bounds(n: int, d: int, epsilon: float, B: float, scale: int, power: int) -> DensityBounds:
    _check_radii(epsilon, B)
    ns = nt_set(n, d)
    dim = d + n // d - 2
    r = epsilon / B
    raw = scale * r ** (power * ns.codim)
    lower = raw * (1 - r) ** (power * dim)
    return DensityBounds(lower=min(lower, 1.0), upper=min(raw, 1.0), upper_raw=raw)


def bounds_real(n: int, d: int, epsilon: float, B: float) -> DensityBounds:
    """(eps/B)^codim bracket for one divisor over the reals:
    lower (eps/B)^codim (1 - eps/B)^dim, upper (eps/B)^codim."""
    return _bounds(n, d, epsilon, B, scale=1, power=1)


def bounds_real_union(n: int, epsilon: float, B: float) -> DensityBounds:
    """Real bracket for the union of the two largest components: the single
    bracket at d = least prime, scaled by delta (1 if n = l^2, else 2)."""
    plan = divisor_plan(n)
    return _bounds(n, plan.least_prime, epsilon, B, scale=plan.delta, power=1)


def bounds_complex(n: int, d: int, epsilon: float, B: float) -> DensityBounds:
    """Complex bracket: real-case exponents doubled."""
    return _bounds(n, d, epsilon, B, scale=1, power=2)


def bounds_complex_union(n: int, epsilon: float, B: float) -> DensityBounds:
    plan = divisor_plan(n)
    return _bounds(n, plan.least_prime, epsilon, B, scale=plan.delta, power=2)


def cheng_bound(n: int, epsilon: float, B: float) -> float:
    """The hypersurface comparison bound (n^2 - 2n) (eps/B)^2."""
    if not is_composite(n):
        raise ValueError(f"degree {n} is not composite")
    if not (0 <= epsilon < B):
        raise ValueError("need 0 <= epsilon < B")
    return (n * n - 2 * n) * (epsilon / B) ** 2


def disk_overlap_area(dist, r: float, R: float):
    """Area of disk(radius r, center at distance dist) ∩ disk(radius R, 0).

    Vectorized in ``dist``; the classical two-circle lens formula with the
    tangency/containment branches handled by clipping.
    """
    dist = np.asarray(dist, dtype=np.float64)
    small, big = (r, R) if r <= R else (R, r)
    full = math.pi * small * small
    separate = dist >= r + R
    contained = dist <= big - small
    lens_mask = ~(separate | contained)
    safe = np.where(lens_mask, dist, 1.0)
    a1 = np.arccos(np.clip((safe**2 + r * r - R * R) / (2 * safe * r), -1.0, 1.0))
    a2 = np.arccos(np.clip((safe**2 + R * R - r * r) / (2 * safe * R), -1.0, 1.0))
    sq = (
        (-safe + r + R) * (safe + r - R) * (safe - r + R) * (safe + r + R)
    )
    lens = r * r * a1 + R * R * a2 - 0.5 * np.sqrt(np.clip(sq, 0.0, None))
    out = np.where(separate, 0.0, np.where(contained, full, lens))
    if out.ndim == 0:
        return float(out)
    return out


def tube_membership(a, n: int, d: int, epsilon: float) -> bool:
    """Exact membership of the coefficient vector a in the epsilon-tube.

    ``a[j]`` is the coefficient of x^(j+1), so a has n-1 entries.  The
    section of a's determining coordinates is the unique decomposable
    polynomial sharing them, hence comparing the complement coordinates
    against it decides membership exactly.
    """
    if len(a) != n - 1:
        raise ValueError(f"expected {n - 1} coordinates")
    ns = nt_set(n, d)
    b = {i: a[i - 1] for i in ns.nt}
    f = section(b, n, d)
    return all(abs(a[i - 1] - f[i]) < epsilon for i in ns.complement)


# -- Monte Carlo machinery -----------------------------------------------------


class _SectionModel:
    """Tube geometry of one divisor: determining columns + batched section."""

    def __init__(self, n: int, d: int):
        ns = nt_set(n, d)
        self.n = n
        self.d = d
        self.ambient = n - 1
        self.free_cols = np.array([i - 1 for i in ns.nt])
        self.dep_cols = np.array([i - 1 for i in ns.complement])

    def predict(self, free: np.ndarray) -> np.ndarray:
        full = section_batch(free, self.n, self.d)
        return full[:, self.dep_cols]


class _SubspaceModel:
    """The linear calibration model R^k x {0}^(n-k) inside R^n."""

    def __init__(self, n: int, k: int):
        if not 1 <= k < n:
            raise ValueError("need 1 <= k < n")
        self.ambient = n
        self.free_cols = np.arange(k)
        self.dep_cols = np.arange(k, n)

    def predict(self, free: np.ndarray) -> np.ndarray:
        return np.zeros((free.shape[0], len(self.dep_cols)), dtype=free.dtype)


def _block_rng(seed: int, index: int) -> np.random.Generator:
    key = np.array([seed & _MASK64, index], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _worker_count(threads: int | None) -> int:
    raw = os.environ.get("POLYDECOMP_THREADS")
    cap = None
    if raw:
        try:
            cap = max(1, int(raw))
        except ValueError:
            raise ValueError(f"POLYDECOMP_THREADS must be an integer, got {raw!r}") from None
    if threads is None:
        return cap or 1
    threads = max(1, threads)
    return min(threads, cap) if cap else threads


def _run_blocks(samples: int, seed: int, worker, threads: int | None):
    tasks = []
    done = 0
    idx = 0
    while done < samples:
        size = min(_BLOCK_SIZE, samples - done)
        tasks.append((idx, size))
        done += size
        idx += 1

    def run_one(task):
        i, size = task
        return worker(_block_rng(seed, i), size)

    workers = _worker_count(threads)
    if workers > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            partials = list(ex.map(run_one, tasks))
    else:
        partials = [run_one(t) for t in tasks]
    # combine in block order: the estimate does not depend on the worker count
    total = 0.0
    total_sq = 0.0
    for s, s2 in partials:
        total += s
        total_sq += s2
    return total, total_sq


def _summarize(total, total_sq, samples, seed, mode) -> EstimateResult:
    mean = total / samples
    if samples > 1:
        var = max(total_sq - samples * mean * mean, 0.0) / (samples - 1)
        se = math.sqrt(var / samples)
    else:
        se = 0.0
    return EstimateResult(mean=mean, std_error=se, samples=samples, seed=seed, mode=mode)


def _sample_box(rng, shape, B: float) -> np.ndarray:
    return rng.uniform(-B, B, size=shape)


def _sample_disk(rng, shape, B: float) -> np.ndarray:
    # inverse-CDF radial sampling: deterministic draw count per sample
    radius = B * np.sqrt(rng.random(size=shape))
    angle = 2.0 * math.pi * rng.random(size=shape)
    return radius * np.exp(1j * angle)


def _estimate(models, field, epsilon, B, samples, seed, mode, threads) -> EstimateResult:
    if samples < 1:
        raise ValueError("need at least one sample")
    if mode not in ("plain", "conditional"):
        raise ValueError(f"unknown mode {mode!r}")
    ambient = models[0].ambient

    if mode == "plain":

        def worker(rng, size):
            if field == "real":
                a = _sample_box(rng, (size, ambient), B)
            else:
                a = _sample_disk(rng, (size, ambient), B)
            member = np.zeros(size, dtype=bool)
            for model in models:
                pred = model.predict(a[:, model.free_cols])
                inside = (np.abs(a[:, model.dep_cols] - pred) < epsilon).all(axis=1)
                member |= inside
            x = member.astype(np.float64)
            return float(x.sum()), float(x.sum())  # x * x == x for indicators

    else:
        if len(models) != 1:
            raise ValueError("conditional mode supports a single divisor only")
        model = models[0]
        nfree = len(model.free_cols)

        def worker(rng, size):
            if field == "real":
                b = _sample_box(rng, (size, nfree), B)
                pred = model.predict(b)
                # overlap of (pred-eps, pred+eps) with (-B, B), written so the
                # unclipped case is exactly 2*eps
                over_hi = np.maximum(pred + epsilon - B, 0.0)
                over_lo = np.maximum(-(pred - epsilon) - B, 0.0)
                w = np.clip(2.0 * epsilon - over_hi - over_lo, 0.0, None) / (2.0 * B)
            else:
                b = _sample_disk(rng, (size, nfree), B)
                pred = model.predict(b)
                w = disk_overlap_area(np.abs(pred), epsilon, B) / (math.pi * B * B)
            x = w.prod(axis=1)
            return float(x.sum()), float((x * x).sum())

    total, total_sq = _run_blocks(samples, seed, worker, threads)
    return _summarize(total, total_sq, samples, seed, mode)


def estimate_density(
    spec: TubeSpec,
    samples: int,
    seed: int = 0,
    mode: str = "plain",
    threads: int | None = None,
) -> EstimateResult:
    """Unbiased Monte Carlo estimate of the tube density for ``spec``.

    Plain mode samples the whole coefficient box (or polydisk) uniformly and
    averages the exact membership indicator; for the union target a sample
    counts when it is in either component's tube.  Conditional mode
    (single-divisor only) samples only the determining coordinates and
    multiplies, per complement coordinate, the exact fraction of the
    coefficient range covered by the epsilon-ball around the section point:
    each sample realizes the inner integral of the density exactly, which
    cuts the variance drastically.
    """
    if mode == "conditional" and spec.is_union:
        raise ValueError("conditional mode is not supported for the union target")
    models = [_SectionModel(spec.n, d) for d in spec.divisors]
    return _estimate(models, spec.field, spec.epsilon, spec.B, samples, seed, mode, threads)


def estimate_subspace_density(
    n: int,
    k: int,
    epsilon: float,
    B: float,
    samples: int,
    seed: int = 0,
    mode: str = "conditional",
    field: str = "real",
    threads: int | None = None,
) -> EstimateResult:
    """The same estimator run against the linear model R^k x {0}^(n-k).

    Calibration aid: the exact density is (eps/B)^(n-k) over the reals, and
    in conditional mode every sample contributes that value identically.
    """
    _check_radii(epsilon, B)
    return _estimate([_SubspaceModel(n, k)], field, epsilon, B, samples, seed, mode, threads)


# -- reporting ------------------------------------------------------------------

REPORT_COLUMNS = (
    "n",
    "d",
    "field",
    "epsilon",
    "B",
    "mode",
    "samples",
    "seed",
    "mean",
    "std_error",
    "lower_bound",
    "upper_bound",
    "cheng_bound",
)


def density_report(spec: TubeSpec, result: EstimateResult) -> dict:
    """Result row combining the estimate with its closed-form bracket."""
    if spec.field == "real":
        br = (
            bounds_real_union(spec.n, spec.epsilon, spec.B)
            if spec.is_union
            else bounds_real(spec.n, spec.d, spec.epsilon, spec.B)
        )
    else:
        br = (
            bounds_complex_union(spec.n, spec.epsilon, spec.B)
            if spec.is_union
            else bounds_complex(spec.n, spec.d, spec.epsilon, spec.B)
        )
    return {
        "n": spec.n,
        "d": spec.target,
        "field": spec.field,
        "epsilon": spec.epsilon,
        "B": spec.B,
        "mode": result.mode,
        "samples": result.samples,
        "seed": result.seed,
        "mean": result.mean,
        "std_error": result.std_error,
        "lower_bound": br.lower,
        "upper_bound": br.upper,
        "cheng_bound": cheng_bound(spec.n, spec.epsilon, spec.B),
    }
