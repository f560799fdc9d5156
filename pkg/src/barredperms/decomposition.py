"""Structure of ~2413~5-avoiding permutations.

Every avoider splits, reading left to right, into value-contiguous blocks
before its maximum entry n followed by n and a strictly decreasing tail:

    tau_1 tau_2 ... tau_r  n  a_{r-1} a_{r-2} ... a_1

The tail entries a_1 < ... < a_{r-1} are exactly the values separating
consecutive blocks: block i carries the values strictly between a_{i-1} and
a_i (with a_0 = 0 and a_r = n), and each block, standardized, avoids ~2413.
Conversely any permutation assembled this way avoids ~2413~5, which makes

    pi  ->  (standardize(tau_1 + a_1), ..., standardize(tau_r + a_r))

a bijection onto lists of *end-max avoiders*: nonempty standard ~2413~5
avoiders that end at their maximum entry.  ``decompose``/``to_list`` walk one
direction, ``compose`` the other.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Sequence

from .patterns import (
    BARRED_2413,
    BARRED_24135,
    avoids_barred,
    check_permutation,
    is_permutation,
    standardize,
)


class NotAnAvoiderError(ValueError):
    """Raised when a permutation fails one of the structural avoider laws."""


class InvalidBlockError(ValueError):
    """Raised when a component handed to compose is not an end-max avoider."""


@dataclass(frozen=True)
class Decomposition:
    """Parsed form of an avoider: raw blocks, separating values, maximum, block count.

    ``taus`` holds the blocks as raw (unstandardized) subsequences of the
    host; ``a_values`` is (a_1, ..., a_{r-1}) in increasing order.  The host
    reassembles as taus joined left to right, then n, then reversed a_values.
    """

    taus: tuple[tuple[int, ...], ...]
    a_values: tuple[int, ...]
    n: int
    r: int


def decompose(pi: Sequence[int]) -> Decomposition:
    """Split an avoider into its block form, validating every structural law.

    Raises NotAnAvoiderError, naming the violated condition, exactly when the
    input does not avoid ~2413~5.

    >>> decompose((1, 3, 2, 5, 4))
    Decomposition(taus=((1, 3, 2), ()), a_values=(4,), n=5, r=2)
    """
    pi = check_permutation(pi)
    n = len(pi)
    if n == 0:
        return Decomposition((), (), 0, 0)
    mpos = pi.index(n)
    prefix, suffix = pi[:mpos], pi[mpos + 1:]
    if any(suffix[i] <= suffix[i + 1] for i in range(len(suffix) - 1)):
        raise NotAnAvoiderError(
            f"entries after the maximum do not strictly decrease: {suffix}")
    a_values = tuple(reversed(suffix))
    r = len(a_values) + 1
    blocks: list[list[int]] = [[] for _ in range(r)]
    for v in prefix:
        blocks[bisect_left(a_values, v)].append(v)
    flat = tuple(v for block in blocks for v in block)
    if flat != prefix:
        raise NotAnAvoiderError(
            f"value blocks before the maximum interleave: {prefix}")
    for i, block in enumerate(blocks, start=1):
        if not avoids_barred(BARRED_2413, standardize(block)):
            raise NotAnAvoiderError(
                f"block {i} ({' '.join(map(str, block))}) does not avoid ~2413")
    return Decomposition(tuple(tuple(b) for b in blocks), a_values, n, r)


def to_list(pi: Sequence[int]) -> list[tuple[int, ...]]:
    """Map an avoider to its list of end-max avoiders.

    Block i paired with its upper separating value (the maximum itself for
    the last block), standardized.  The total length of the output equals
    len(pi); the empty permutation maps to the empty list.

    >>> to_list((1, 3, 2, 5, 4))
    [(1, 3, 2, 4), (1,)]
    """
    d = decompose(pi)
    if d.r == 0:
        return []
    ends = d.a_values + (d.n,)
    return [standardize(tau + (a,)) for tau, a in zip(d.taus, ends)]


def is_end_max_avoider(p: Sequence[int]) -> bool:
    """True iff p is nonempty, ends at its maximum entry, and avoids ~2413~5."""
    p = check_permutation(p)
    return bool(p) and p[-1] == len(p) and avoids_barred(BARRED_24135, p)


def _assemble(sigmas) -> tuple[int, ...]:
    # Inverse of to_list, without validating the components.
    out: list[int] = []
    total = 0
    ends: list[int] = []
    for sigma in sigmas:
        out.extend(v + total for v in sigma[:-1])
        total += len(sigma)
        ends.append(total)
    if not ends:
        return ()
    out.append(total)
    out.extend(reversed(ends[:-1]))
    return tuple(out)


def compose(sigmas: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Reassemble a list of end-max avoiders into the avoider it came from.

    Each component is checked against the end-max avoider invariants;
    InvalidBlockError names the offending index and the failed check.

    >>> compose([(1, 3, 2, 4), (1,)])
    (1, 3, 2, 5, 4)
    """
    parts = [tuple(s) for s in sigmas]
    for i, s in enumerate(parts, start=1):
        if not s:
            raise InvalidBlockError(f"component {i} is empty")
        if not is_permutation(s):
            raise InvalidBlockError(
                f"component {i} is not a standard permutation: {s}")
        if s[-1] != len(s):
            raise InvalidBlockError(
                f"component {i} does not end at its maximum: {s}")
        if not avoids_barred(BARRED_24135, s):
            raise InvalidBlockError(
                f"component {i} does not avoid ~2413~5: {s}")
    return _assemble(parts)


# ---------------------------------------------------------------------------
# Text encoding for lists of blocks: entries space-separated, blocks joined
# by ';', e.g. "1 3 2 4; 1".  Parsing stays lenient so that compose can
# report which component fails which invariant.

def parse_block_list(text: str) -> list[tuple[int, ...]]:
    s = text.strip()
    if not s:
        return []
    blocks = []
    for part in s.split(";"):
        tokens = [t for t in part.replace(",", " ").split() if t]
        try:
            blocks.append(tuple(int(t) for t in tokens))
        except ValueError:
            raise ValueError(f"cannot parse block {part.strip()!r}") from None
    return blocks


def format_block_list(blocks: Sequence[Sequence[int]]) -> str:
    return "; ".join(" ".join(str(v) for v in b) for b in blocks)
