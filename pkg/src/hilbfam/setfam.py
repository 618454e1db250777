"""Subsets of [n], set-family constructors and characteristic vectors.

Families are kept in a single canonical order (lexicographic on sorted
member tuples) so that every downstream matrix, kernel basis and report
is reproducible byte for byte.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

DEFAULT_ENUMERATION_CAP = 10_000_000
ENUMERATION_CAP_ENV = "HILBFAM_ENUM_CAP"


class EnumerationCapError(RuntimeError):
    """A family constructor would enumerate past the configured cap."""


def enumeration_cap() -> int:
    """Active enumeration cap; overridable via HILBFAM_ENUM_CAP."""
    raw = os.environ.get(ENUMERATION_CAP_ENV)
    if raw:
        cap = int(raw)
        if cap < 1:
            raise ValueError(f"{ENUMERATION_CAP_ENV} must be positive, got {cap}")
        return cap
    return DEFAULT_ENUMERATION_CAP


def is_prime(p: int) -> bool:
    """Deterministic trial-division primality check."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def is_power_of(q: int, p: int) -> bool:
    """True iff q = p**a for some a >= 1."""
    if q < p or p < 2:
        return False
    while q % p == 0:
        q //= p
    return q == 1


def binomial(n: int, k: int) -> int:
    """Exact C(n, k); 0 when k is outside 0..n."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class Params:
    """Shared problem parameters.

    n is the ground-set size, p the field characteristic, d the set size,
    m the degree bound and q an optional power of p used as the size
    modulus.
    """

    n: int
    p: int
    d: int
    m: int
    q: int | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if not 0 <= self.d <= self.n:
            raise ValueError(f"d must satisfy 0 <= d <= n, got d={self.d}, n={self.n}")
        if self.m < 0:
            raise ValueError(f"m must be nonnegative, got {self.m}")
        if self.q is not None and not is_power_of(self.q, self.p):
            raise ValueError(f"q must be a positive power of p={self.p}, got {self.q}")


@dataclass(frozen=True, order=True)
class Subset:
    """A subset of [n] stored as a strictly increasing tuple of 1-based members."""

    members: tuple[int, ...]

    def __post_init__(self) -> None:
        ms = self.members
        if any(ms[i] >= ms[i + 1] for i in range(len(ms) - 1)):
            raise ValueError(f"members must be strictly increasing, got {ms}")
        if ms and ms[0] < 1:
            raise ValueError(f"members must be >= 1, got {ms}")

    @classmethod
    def of(cls, members: Iterable[int]) -> "Subset":
        return cls(tuple(sorted(set(members))))

    @property
    def bitmask(self) -> int:
        return sum(1 << (m - 1) for m in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


@dataclass(frozen=True)
class SetFamily:
    """A duplicate-free family of subsets of [n] in canonical order."""

    n: int
    sets: tuple[Subset, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        for s in self.sets:
            if s.members and s.members[-1] > self.n:
                raise ValueError(f"subset {s} exceeds ground set [{self.n}]")
        ordered = tuple(sorted(self.sets))
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise ValueError(f"duplicate subset {a} in family")
        object.__setattr__(self, "sets", ordered)

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.sets)

    def points(self) -> tuple[tuple[int, ...], ...]:
        """Characteristic vectors of all members, in family order."""
        return tuple(char_vector(s, self.n) for s in self.sets)

    def masks(self) -> tuple[int, ...]:
        return tuple(s.bitmask for s in self.sets)


def char_vector(subset: Subset, n: int) -> tuple[int, ...]:
    """0/1 vector of length n with ones exactly at the members of subset."""
    if subset.members and subset.members[-1] > n:
        raise ValueError(f"subset {subset} exceeds ground set [{n}]")
    inside = set(subset.members)
    return tuple(1 if i in inside else 0 for i in range(1, n + 1))


def _check_cap(count: int, cap: int | None) -> None:
    limit = enumeration_cap() if cap is None else cap
    if count > limit:
        raise EnumerationCapError(f"family would contain {count} sets, cap is {limit}")


def make_uniform_family(n: int, d: int, cap: int | None = None) -> SetFamily:
    """All d-element subsets of [n]."""
    if not 0 <= d <= n:
        raise ValueError(f"d must satisfy 0 <= d <= n, got d={d}, n={n}")
    _check_cap(math.comb(n, d), cap)
    sets = tuple(Subset(c) for c in combinations(range(1, n + 1), d))
    return SetFamily(n, sets)


def make_modq_family(n: int, d: int, q: int, cap: int | None = None) -> SetFamily:
    """All subsets of [n] whose size is congruent to d modulo q."""
    if not 0 <= d <= n:
        raise ValueError(f"d must satisfy 0 <= d <= n, got d={d}, n={n}")
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    sizes = range(d % q, n + 1, q)
    _check_cap(sum(math.comb(n, k) for k in sizes), cap)
    sets = [Subset(c) for k in sizes for c in combinations(range(1, n + 1), k)]
    return SetFamily(n, tuple(sets))


def format_family(family: SetFamily) -> str:
    """Render a family in the shared text format.

    First line is `n=<int>`; each following line lists one subset as
    comma-separated 1-based members, with an empty line for the empty set.
    """
    lines = [f"n={family.n}"]
    lines.extend(",".join(map(str, s.members)) for s in family.sets)
    return "\n".join(lines) + "\n"


def parse_family(text: str) -> SetFamily:
    """Parse the text format produced by format_family."""
    lines = text.splitlines()
    if not lines or not lines[0].startswith("n="):
        raise ValueError("family text must start with a `n=<int>` header line")
    try:
        n = int(lines[0][2:])
    except ValueError as exc:
        raise ValueError(f"bad family header {lines[0]!r}") from exc
    sets = []
    for line in lines[1:]:
        line = line.strip()
        if not line:
            sets.append(Subset(()))
            continue
        try:
            members = tuple(int(tok) for tok in line.split(","))
        except ValueError as exc:
            raise ValueError(f"bad subset line {line!r}") from exc
        sets.append(Subset.of(members))
    return SetFamily(n, tuple(sets))
