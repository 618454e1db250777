"""Hilbert function values of finite point sets in F_p^n.

The value h(m) is the rank of the evaluation matrix whose rows are
points and whose columns are the reduced monomials of degree at most m
(exponent cap 1 for 0/1 point sets, p-1 in general; both caps preserve
values pointwise, so the reduced columns span the full degree-<= m
function space).  Large instances are streamed through the incremental
reducer block by block instead of materializing the matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .gflinalg import FpMatrix, RowReducer
from .poly import Monomial, Point, Polynomial, monomials_upto
from .setfam import Params, binomial, is_power_of, is_prime

# Above this many matrix entries, ranks are computed from streamed row
# blocks rather than one dense array.
_STREAM_THRESHOLD = 4_000_000
_BLOCK_ROWS = 2048


@dataclass(frozen=True, eq=False)
class EvaluationMatrix:
    """Monomial evaluation matrix: entry (i, j) = monomial_j(point_i)."""

    matrix: FpMatrix
    points: tuple[Point, ...]
    monomials: tuple[Monomial, ...]


def _points_array(points: Sequence[Point], p: int) -> np.ndarray:
    if not points:
        raise ValueError("need at least one point")
    n = len(points[0])
    if n < 1:
        raise ValueError("points must have at least one coordinate")
    if any(len(pt) != n for pt in points):
        raise ValueError("points have inconsistent dimensions")
    return np.asarray(points, dtype=np.int64) % p


def _validate_cap(arr: np.ndarray, p: int, cap: int) -> None:
    if cap not in (1, p - 1) or cap < 1:
        raise ValueError(f"exponent cap must be 1 or p-1, got {cap} for p={p}")
    if cap == 1 and arr.size and int(arr.max()) > 1:
        raise ValueError("exponent cap 1 requires 0/1-valued points")


def _eval_rows(arr: np.ndarray, monomials: Sequence[Monomial], p: int, cap: int) -> np.ndarray:
    """Evaluate every monomial at every point of a row block."""
    rows, n = arr.shape
    out = np.empty((rows, len(monomials)), dtype=np.int64)
    if cap == 1 and n <= 62:
        # 0/1 points: monomial value is 1 iff its support lies inside
        # the point's support, a subset test on packed masks.
        weights = (1 << np.arange(n)).astype(np.int64)
        masks = arr @ weights
        for j, mono in enumerate(monomials):
            mm = int(sum(w for w, e in zip(weights, mono) if e))
            out[:, j] = (masks & mm) == mm
        return out
    # Power-table path, exact for any p: table[v, e] = v^e mod p.
    table = np.array([[pow(v, e, p) for e in range(cap + 1)] for v in range(p)], dtype=np.int64)
    for j, mono in enumerate(monomials):
        col = np.ones(rows, dtype=np.int64)
        for i, e in enumerate(mono):
            if e:
                col = (col * table[arr[:, i], e]) % p
        out[:, j] = col
    return out


def evaluation_matrix(points: Sequence[Point], m: int, p: int, cap: int) -> EvaluationMatrix:
    """Materialized evaluation matrix with its row and column labels."""
    arr = _points_array(points, p)
    _validate_cap(arr, p, cap)
    monos = monomials_upto(arr.shape[1], m, cap)
    data = _eval_rows(arr, monos, p, cap)
    pts = tuple(tuple(int(v) for v in row) for row in arr)
    return EvaluationMatrix(FpMatrix(p, data), pts, monos)


def _reduce_points(points: Sequence[Point], m: int, p: int, cap: int) -> tuple[RowReducer, tuple[Monomial, ...]]:
    arr = _points_array(points, p)
    _validate_cap(arr, p, cap)
    monos = monomials_upto(arr.shape[1], m, cap)
    red = RowReducer(p, len(monos))
    if arr.shape[0] * len(monos) <= _STREAM_THRESHOLD:
        red.add_rows(_eval_rows(arr, monos, p, cap))
    else:
        for start in range(0, arr.shape[0], _BLOCK_ROWS):
            red.add_rows(_eval_rows(arr[start : start + _BLOCK_ROWS], monos, p, cap))
    return red, monos


def hilbert_value(points: Sequence[Point], m: int, p: int, cap: int) -> int:
    """Dimension of the degree-<= m function space on the point set."""
    red, _ = _reduce_points(points, m, p, cap)
    return red.rank


def hilbert_series(points: Sequence[Point], p: int, cap: int) -> tuple[int, ...]:
    """Values h(0), h(1), ... up to and including the first m with h(m) = |points|."""
    pts = tuple(tuple(int(v) % p for v in pt) for pt in points)
    if len(set(pts)) != len(pts):
        raise ValueError("points must be distinct for a Hilbert series")
    n = len(pts[0]) if pts else 0
    values = []
    for m in range(n * cap + 1):
        h = hilbert_value(pts, m, p, cap)
        values.append(h)
        if h == len(pts):
            return tuple(values)
    raise AssertionError("series failed to stabilize below the interpolation degree")


def kernel_matrix(points: Sequence[Point], m: int, p: int, cap: int) -> tuple[np.ndarray, tuple[Monomial, ...]]:
    """Coefficient vectors (rows) of a canonical basis of the degree-<= m
    vanishing polynomials, over the reduced monomial columns."""
    red, monos = _reduce_points(points, m, p, cap)
    return red.kernel_matrix(), monos


def vector_to_polynomial(vec: np.ndarray, monomials: Sequence[Monomial], p: int) -> Polynomial:
    terms = {tuple(mono): int(c) for mono, c in zip(monomials, vec) if int(c)}
    return Polynomial.from_terms(p, len(monomials[0]), terms)


def ideal_truncation_basis(points: Sequence[Point], m: int, p: int, cap: int) -> list[Polynomial]:
    """Basis of the polynomials of degree <= m vanishing on every point."""
    kernel, monos = kernel_matrix(points, m, p, cap)
    return [vector_to_polynomial(row, monos, p) for row in kernel]


def wilson_value(n: int, d: int, m: int) -> int:
    """Closed-form Hilbert value C(n, m) for the complete d-uniform family.

    Only asserted for 0 <= m <= min(d, n-d); outside that range the
    closed form does not apply and a ValueError is raised.
    """
    if not 0 <= d <= n:
        raise ValueError(f"d must satisfy 0 <= d <= n, got d={d}, n={n}")
    if not 0 <= m <= min(d, n - d):
        raise ValueError(f"m={m} outside closed-form range 0..min(d, n-d)={min(d, n - d)}")
    return binomial(n, m)


def modq_value(n: int, d: int, q: int, m: int) -> int:
    """Closed-form Hilbert value for the size-congruent family mod q.

    Two cases split at r; empty sums contribute 0.  The family depends
    only on d mod q, so the split point must be representative-free:
    r is min(k, n-k) for the size k in the class of d closest to n/2
    (taking min(d, n-d) literally gives wrong values when another class
    member lies nearer the middle, e.g. n=5, d=0, q=3, m=1).
    """
    if not 0 <= d <= n:
        raise ValueError(f"d must satisfy 0 <= d <= n, got d={d}, n={n}")
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    r = max(min(k, n - k) for k in range(n + 1) if k % q == d % q)
    if m <= r:
        return sum(binomial(n, m - i * q) for i in range(m // q + 1))
    full = sum(binomial(n, r + i * q) for i in range(-(r // q), (n - r) // q + 1))
    tail = sum(binomial(n, m + i * q) for i in range(1, (n - m) // q + 1))
    return full - tail


@dataclass(frozen=True)
class HilbertReport:
    """One Hilbert computation: rank-oracle value next to a closed form."""

    params: Params
    cap: int
    h_oracle: int
    h_closed_form: int | None
    ideal_dim: int
    r: int

    @property
    def match(self) -> bool | None:
        if self.h_closed_form is None:
            return None
        return self.h_closed_form == self.h_oracle

    def as_dict(self) -> dict:
        return {
            "n": self.params.n,
            "d": self.params.d,
            "p": self.params.p,
            "q": self.params.q,
            "m": self.params.m,
            "cap": self.cap,
            "h_oracle": self.h_oracle,
            "h_closed_form": self.h_closed_form,
            "ideal_dim": self.ideal_dim,
            "r": self.r,
            "match": self.match,
        }


def uniform_report(n: int, d: int, p: int, m: int, cap: int | None = None) -> HilbertReport:
    """Report for the complete d-uniform family, with the closed form
    attached whenever m is inside its range."""
    from .setfam import make_uniform_family

    params = Params(n=n, p=p, d=d, m=m)
    points = make_uniform_family(n, d, cap=cap).points()
    h = hilbert_value(points, m, p, 1)
    n_monos = len(monomials_upto(n, m, 1))
    closed = binomial(n, m) if m <= min(d, n - d) else None
    return HilbertReport(params, 1, h, closed, n_monos - h, min(d, n - d))


def modq_report(n: int, d: int, q: int, p: int, m: int, cap: int | None = None) -> HilbertReport:
    """Report for the size-congruent family mod q, q a power of p."""
    from .setfam import make_modq_family

    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if not is_power_of(q, p):
        raise ValueError(f"q must be a positive power of p={p}, got {q}")
    params = Params(n=n, p=p, d=d, m=m, q=q)
    points = make_modq_family(n, d, q, cap=cap).points()
    h = hilbert_value(points, m, p, 1)
    n_monos = len(monomials_upto(n, m, 1))
    return HilbertReport(params, 1, h, modq_value(n, d, q, m), n_monos - h, min(d, n - d))
