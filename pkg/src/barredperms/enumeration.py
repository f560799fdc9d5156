"""Generating and counting avoiders, by brute force and by construction.

The brute-force route filters all of S_n through the matcher and is the
experimental oracle.  The constructive route builds ~2413~5-avoiders from
lists of end-max avoiders via the block bijection and never touches the
~2413~5 matcher, so the two routes are independent checks on each other.
A third route, counting through the Invert transform of the Bell numbers,
lives in :mod:`barredperms.transforms`.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product, repeat
from typing import Iterator

from .decomposition import _assemble
from .patterns import BARRED_2413, BARRED_24135, BarredPattern, avoids_barred

DEFAULT_BRUTE_CAP = 10
DEFAULT_CONSTRUCT_CAP = 12

METHODS = ("brute", "construct", "transform")

# Below this size the per-process startup costs more than the enumeration.
_MIN_PARALLEL_N = 7


class CapExceededError(ValueError):
    """Raised when an enumeration request exceeds its size cap."""


class UnsupportedMethodError(ValueError):
    """Raised for counting methods that do not apply to the given pattern."""


@dataclass(frozen=True)
class CountReport:
    """One exact count: the size, how it was computed, and the value."""

    n: int
    method: str
    count: int

    def __post_init__(self):
        if self.method not in METHODS:
            raise UnsupportedMethodError(
                f"unknown method {self.method!r}; expected one of {METHODS}")
        if not 0 <= self.count <= 2**64 - 1:
            raise OverflowError(f"count {self.count} outside unsigned 64-bit range")


def _avoiders_with_first(rho: BarredPattern, n: int, first: int) -> list[tuple[int, ...]]:
    rest = [v for v in range(1, n + 1) if v != first]
    return [(first, *tail) for tail in permutations(rest)
            if avoids_barred(rho, (first, *tail))]


def brute_force_avoiders(rho: BarredPattern, n: int, *,
                         cap: int = DEFAULT_BRUTE_CAP,
                         jobs: int | None = None) -> list[tuple[int, ...]]:
    """All rho-avoiding permutations of 1..n, in lexicographic order.

    Refuses n above ``cap`` (raise the cap explicitly to opt in to a long
    run).  With ``jobs`` > 1 the search space is partitioned by first entry
    and the slices enumerated in parallel processes; slice results are
    concatenated in first-entry order, so the output is identical to the
    serial one.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > cap:
        raise CapExceededError(
            f"n={n} exceeds the brute-force cap {cap}; pass a larger cap to allow this")
    jobs = 1 if jobs is None else max(1, jobs)
    if jobs == 1 or n < _MIN_PARALLEL_N:
        return [p for p in permutations(range(1, n + 1)) if avoids_barred(rho, p)]
    with ProcessPoolExecutor(max_workers=min(jobs, n)) as pool:
        slices = pool.map(_avoiders_with_first, repeat(rho), repeat(n), range(1, n + 1))
        return [p for part in slices for p in part]


@lru_cache(maxsize=None)
def _end_max_cached(k: int) -> tuple[tuple[int, ...], ...]:
    shorter = [p for p in permutations(range(1, k)) if avoids_barred(BARRED_2413, p)]
    return tuple(t + (k,) for t in shorter)


def end_max_avoiders(k: int, *, cap: int = DEFAULT_BRUTE_CAP) -> list[tuple[int, ...]]:
    """All end-max avoiders of length k: tau + (k,) for tau in S_{k-1}(~2413).

    Appending k to a ~2413-avoider always yields an end-max avoider, and
    every end-max avoider arises this way (the trailing maximum supplies the
    missing top letter for any occurrence needing one).  Results are cached
    per length for reuse by construct_avoiders.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k - 1 > cap:
        raise CapExceededError(
            f"end-max avoiders of length {k} need a search of S_{k - 1}, "
            f"beyond the brute-force cap {cap}")
    return list(_end_max_cached(k))


def _compositions(n: int) -> Iterator[tuple[int, ...]]:
    # Ordered sequences of positive parts summing to n, lexicographically.
    if n == 0:
        yield ()
        return
    for head in range(1, n + 1):
        for tail in _compositions(n - head):
            yield (head, *tail)


def construct_avoiders(n: int, *, cap: int = DEFAULT_CONSTRUCT_CAP) -> list[tuple[int, ...]]:
    """All ~2413~5-avoiders of length n, assembled from end-max avoider lists.

    Runs over every composition of n and every way of filling its parts with
    end-max avoiders of those lengths; the bijection guarantees each avoider
    appears exactly once.  Output is sorted lexicographically and equals the
    brute-force enumeration as a set.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > cap:
        raise CapExceededError(
            f"n={n} exceeds the constructive cap {cap}; pass a larger cap to allow this")
    if n == 0:
        return [()]
    pools = {k: end_max_avoiders(k, cap=max(0, cap - 1)) for k in range(1, n + 1)}
    out = [_assemble(combo)
           for parts in _compositions(n)
           for combo in product(*(pools[k] for k in parts))]
    out.sort()
    return out


def count_avoiders(rho: BarredPattern, n: int, *, method: str = "brute",
                   cap: int | None = None, jobs: int | None = None) -> CountReport:
    """Exact |S_n(rho)| by the requested method.

    ``brute`` works for any pattern; ``construct`` and ``transform`` only for
    ~2413~5 (they go through the block bijection and the Invert transform of
    the Bell numbers respectively, and all three agree for it).
    """
    if method not in METHODS:
        raise UnsupportedMethodError(
            f"unknown method {method!r}; expected one of {METHODS}")
    if method == "brute":
        count = len(brute_force_avoiders(
            rho, n, cap=DEFAULT_BRUTE_CAP if cap is None else cap, jobs=jobs))
    else:
        if rho != BARRED_24135:
            raise UnsupportedMethodError(
                f"method {method!r} is only available for ~2413~5")
        if method == "construct":
            count = len(construct_avoiders(
                n, cap=DEFAULT_CONSTRUCT_CAP if cap is None else cap))
        else:
            from .transforms import bell_numbers, invert_transform
            count = invert_transform(bell_numbers(n))[n - 1] if n >= 1 else 1
    return CountReport(n=n, method=method, count=count)


def counting_sequence(rho: BarredPattern, n_max: int, *, method: str = "brute",
                      cap: int | None = None, jobs: int | None = None) -> tuple[int, ...]:
    """(|S_1(rho)|, ..., |S_{n_max}(rho)|) by the requested method."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if method == "transform":
        if rho != BARRED_24135:
            raise UnsupportedMethodError("method 'transform' is only available for ~2413~5")
        from .transforms import bell_numbers, invert_transform
        return invert_transform(bell_numbers(n_max))
    return tuple(count_avoiders(rho, n, method=method, cap=cap, jobs=jobs).count
                 for n in range(1, n_max + 1))
