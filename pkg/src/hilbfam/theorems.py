"""Executable checks for the vanishing-ideal facts the library is built around.

Each driver reduces a "for every polynomial of degree <= m in the ideal"
claim to a finite kernel-basis computation: vanishing conditions are
linear, so checking a basis of the truncated ideal decides the claim for
the whole space.  Reports record enough dimensions to audit that
reduction, and a FAIL always carries a witness that re-verifies
independently (a rendered polynomial plus the point where it fails).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Sequence

import numpy as np

from .gflinalg import matmul_mod
from .hilbert import (
    _eval_rows,
    _points_array,
    hilbert_value,
    kernel_matrix,
    vector_to_polynomial,
)
from .poly import Point
from .setfam import (
    EnumerationCapError,
    enumeration_cap,
    is_power_of,
    is_prime,
    make_modq_family,
    make_uniform_family,
)

PASS = "PASS"
FAIL = "FAIL"
NOT_APPLICABLE = "NOT_APPLICABLE"

CLAIM_MAIN = "MAIN"
CLAIM_MAIN2 = "MAIN2"
CLAIM_HRUBES = "HRUBES"
CLAIM_HLEMMA = "HLEMMA"
CLAIM_GRID_REMARK = "GRID_REMARK"
CLAIM_MAIN3 = "MAIN3"

_CHECK_BLOCK = 4096


@dataclass
class VerificationReport:
    """Outcome of one claim check.

    NOT_APPLICABLE means the claim's hypotheses exclude the inputs; it is
    never an internal error.  Wall time is kept out of the serialized
    body by default so repeated runs compare byte for byte.
    """

    claim: str
    params: dict[str, Any]
    status: str
    witnesses: dict[str, Any] | None = None
    metrics: dict[str, Any] = field(default_factory=dict)
    wall_time_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def as_dict(self, include_timing: bool = False) -> dict[str, Any]:
        body: dict[str, Any] = {
            "claim": self.claim,
            "params": self.params,
            "status": self.status,
            "witnesses": self.witnesses,
            "metrics": self.metrics,
        }
        if include_timing:
            body["wall_time_ms"] = round(self.wall_time_ms, 3)
        return body


def _elapsed_ms(start: float) -> float:
    return (time.perf_counter() - start) * 1000.0


def _vanishing_witness(
    kernel: np.ndarray,
    monomials: Sequence[tuple[int, ...]],
    points: Sequence[Point],
    p: int,
    cap: int,
) -> dict[str, Any] | None:
    """First (kernel polynomial, point) pair with a nonzero value, or None.

    Scans points in their given order and kernel rows in basis order, so
    the witness is deterministic.
    """
    if kernel.shape[0] == 0:
        return None
    arr = _points_array(points, p)
    kt = kernel.T.copy()
    for start in range(0, arr.shape[0], _CHECK_BLOCK):
        block = arr[start : start + _CHECK_BLOCK]
        values = matmul_mod(_eval_rows(block, monomials, p, cap), kt, p)
        hits = np.argwhere(values)
        if hits.size:
            i, j = (int(v) for v in hits[0])
            poly = vector_to_polynomial(kernel[j], monomials, p)
            return {
                "polynomial": str(poly),
                "point": [int(v) for v in block[i]],
                "value": int(values[i, j]),
            }
    return None


def verify_ideal_truncation_equality(
    points_f: Sequence[Point],
    points_g: Sequence[Point],
    m: int,
    p: int,
    cap: int,
) -> VerificationReport:
    """Nested point sets with equal Hilbert values at m share all
    degree-<= m vanishing polynomials.

    Requires points_f to be contained in points_g.  Unequal Hilbert
    values mean the hypothesis fails: NOT_APPLICABLE.
    """
    start = time.perf_counter()
    tf = tuple(tuple(int(v) % p for v in pt) for pt in points_f)
    tg = tuple(tuple(int(v) % p for v in pt) for pt in points_g)
    if not set(tf) <= set(tg):
        raise ValueError("the first point set must be contained in the second")
    params = {
        "m": m,
        "p": p,
        "cap": cap,
        "points_f": len(tf),
        "points_g": len(tg),
        "point_interpretation": "finite point subsets of F_p^n",
    }
    h_g = hilbert_value(tg, m, p, cap)
    kernel, monos = kernel_matrix(tf, m, p, cap)
    h_f = len(monos) - kernel.shape[0]
    metrics = {
        "h_f": int(h_f),
        "h_g": int(h_g),
        "monomials": len(monos),
        "ideal_dim_f": int(kernel.shape[0]),
        "ideal_dim_g": len(monos) - int(h_g),
        "matrix_shape_f": [len(tf), len(monos)],
        "matrix_shape_g": [len(tg), len(monos)],
    }
    if h_f != h_g:
        return VerificationReport(
            CLAIM_MAIN, params, NOT_APPLICABLE,
            metrics={**metrics, "reason": "hilbert values differ"},
            wall_time_ms=_elapsed_ms(start),
        )
    witness = _vanishing_witness(kernel, monos, tg, p, cap)
    metrics["ideal_dims_equal"] = metrics["ideal_dim_f"] == metrics["ideal_dim_g"]
    status = PASS if witness is None else FAIL
    return VerificationReport(CLAIM_MAIN, params, status, witness, metrics, _elapsed_ms(start))


def verify_main2(n: int, d: int, q: int, p: int, force: bool = False) -> VerificationReport:
    """Every polynomial of degree <= q-1 vanishing on all d-subsets of [n]
    also vanishes on every subset of size congruent to d mod q.

    Asserted for q-1 <= d <= n-q+1 with q a power of the prime p.  With
    force=True the check still runs outside that range, but the status
    stays NOT_APPLICABLE and only the metrics report the empirical
    outcome.
    """
    start = time.perf_counter()
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if not is_power_of(q, p):
        raise ValueError(f"q must be a positive power of p={p}, got {q}")
    if not 0 <= d <= n:
        raise ValueError(f"d must satisfy 0 <= d <= n, got d={d}, n={n}")
    in_range = q - 1 <= d <= n - q + 1
    params = {"n": n, "d": d, "q": q, "p": p, "degree_bound": q - 1, "in_range": in_range}
    if not in_range and not force:
        return VerificationReport(
            CLAIM_MAIN2, params, NOT_APPLICABLE,
            metrics={"reason": "d outside q-1..n-q+1"},
            wall_time_ms=_elapsed_ms(start),
        )
    uniform = make_uniform_family(n, d).points()
    modq = make_modq_family(n, d, q).points()
    kernel, monos = kernel_matrix(uniform, q - 1, p, 1)
    witness = _vanishing_witness(kernel, monos, modq, p, 1)
    metrics = {
        "h_uniform": len(monos) - int(kernel.shape[0]),
        "kernel_dim": int(kernel.shape[0]),
        "monomials": len(monos),
        "points_uniform": len(uniform),
        "points_modq": len(modq),
    }
    if not in_range:
        metrics["vanishes_outside_range"] = witness is None
        return VerificationReport(
            CLAIM_MAIN2, params, NOT_APPLICABLE, witness, metrics, _elapsed_ms(start)
        )
    status = PASS if witness is None else FAIL
    return VerificationReport(CLAIM_MAIN2, params, status, witness, metrics, _elapsed_ms(start))


def verify_hrubes(p: int) -> VerificationReport:
    """No polynomial of degree < p can vanish on all p-subsets of [2p]
    while taking a nonzero value at the origin.

    Checked by confirming that every kernel-basis polynomial of the
    p-subset points at degree p-1 has zero constant term.
    """
    start = time.perf_counter()
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    points = make_uniform_family(2 * p, p).points()
    kernel, monos = kernel_matrix(points, p - 1, p, 1)
    params = {"p": p, "n": 2 * p, "d": p, "degree_bound": p - 1}
    metrics = {
        "points": len(points),
        "monomials": len(monos),
        "h": len(monos) - int(kernel.shape[0]),
        "kernel_dim": int(kernel.shape[0]),
    }
    # Constant monomial is column 0, and the value at the origin of a
    # cap-1 polynomial is exactly its constant coefficient.
    bad = np.nonzero(kernel[:, 0])[0] if kernel.shape[0] else np.array([], dtype=np.int64)
    if bad.size:
        row = kernel[int(bad[0])]
        witness = {
            "polynomial": str(vector_to_polynomial(row, monos, p)),
            "point": [0] * (2 * p),
            "value": int(row[0]),
        }
        return VerificationReport(CLAIM_HRUBES, params, FAIL, witness, metrics, _elapsed_ms(start))
    return VerificationReport(CLAIM_HRUBES, params, PASS, None, metrics, _elapsed_ms(start))


def verify_hlemma(p: int) -> VerificationReport:
    """No polynomial of degree < p can vanish on all 2p-subsets of [4p]
    without also vanishing on all 3p-subsets."""
    start = time.perf_counter()
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    lower = make_uniform_family(4 * p, 2 * p).points()
    upper = make_uniform_family(4 * p, 3 * p).points()
    kernel, monos = kernel_matrix(lower, p - 1, p, 1)
    witness = _vanishing_witness(kernel, monos, upper, p, 1)
    params = {"p": p, "n": 4 * p, "d_lower": 2 * p, "d_upper": 3 * p, "degree_bound": p - 1}
    metrics = {
        "points_lower": len(lower),
        "points_upper": len(upper),
        "monomials": len(monos),
        "h": len(monos) - int(kernel.shape[0]),
        "kernel_dim": int(kernel.shape[0]),
    }
    status = PASS if witness is None else FAIL
    return VerificationReport(CLAIM_HLEMMA, params, status, witness, metrics, _elapsed_ms(start))


@dataclass(frozen=True)
class GridInstance:
    """A finite product grid in F_p^n with one marked interior point.

    sets holds the coordinate value sets (each of size >= 2, inside
    0..p-1); w is the marked grid point.
    """

    p: int
    n: int
    sets: tuple[tuple[int, ...], ...]
    w: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.n < 1 or len(self.sets) != self.n:
            raise ValueError(f"need one value set per coordinate, n={self.n}")
        norm = []
        for t in self.sets:
            vals = tuple(sorted(set(int(v) for v in t)))
            if len(vals) < 2:
                raise ValueError(f"coordinate set {t} must have at least 2 values")
            if vals[0] < 0 or vals[-1] >= self.p:
                raise ValueError(f"coordinate set {t} not inside 0..{self.p - 1}")
            norm.append(vals)
        object.__setattr__(self, "sets", tuple(norm))
        w = tuple(int(v) for v in self.w)
        if len(w) != self.n or any(w[i] not in self.sets[i] for i in range(self.n)):
            raise ValueError(f"marked point {w} is not inside the grid")
        object.__setattr__(self, "w", w)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(t) for t in self.sets)

    def grid_points(self) -> tuple[Point, ...]:
        return tuple(product(*self.sets))


def verify_grid_remark(grid: GridInstance) -> VerificationReport:
    """Removing one point from a product grid leaves the Hilbert value at
    m = sum(t_i) - n - 1 unchanged at (prod t_i) - 1, so every
    degree-<= m polynomial vanishing off the marked point vanishes there
    too."""
    start = time.perf_counter()
    total = 1
    for t in grid.sizes:
        total *= t
    if total > enumeration_cap():
        raise EnumerationCapError(f"grid has {total} points, cap is {enumeration_cap()}")
    m = sum(grid.sizes) - grid.n - 1
    cap = grid.p - 1
    points_g = grid.grid_points()
    points_f = tuple(pt for pt in points_g if pt != grid.w)
    params = {
        "p": grid.p,
        "n": grid.n,
        "sizes": list(grid.sizes),
        "w": list(grid.w),
        "m": m,
        "cap": cap,
    }
    expected = total - 1
    h_g = hilbert_value(points_g, m, grid.p, cap)
    kernel, monos = kernel_matrix(points_f, m, grid.p, cap)
    h_f = len(monos) - kernel.shape[0]
    metrics = {
        "h_f": int(h_f),
        "h_g": int(h_g),
        "expected_h": expected,
        "kernel_dim": int(kernel.shape[0]),
        "monomials": len(monos),
        "grid_points": total,
    }
    witness = _vanishing_witness(kernel, monos, (grid.w,), grid.p, cap)
    ok = h_f == expected and h_g == expected and witness is None
    status = PASS if ok else FAIL
    return VerificationReport(CLAIM_GRID_REMARK, params, status, witness, metrics, _elapsed_ms(start))
