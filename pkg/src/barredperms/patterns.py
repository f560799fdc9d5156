"""Permutations in one-line notation, classical patterns, and barred patterns.

Everything here works on plain tuples of ints.  A permutation of length n is
a tuple holding each of 1..n exactly once; () is the empty permutation.
Positions and values are both 1-based.

A classical pattern p occurs in a host at positions i1 < ... < ik when the
host values at those positions are order-isomorphic to p.  A barred pattern
marks some letters of a full pattern as barred; a host *avoids* it when every
occurrence of the sub-pattern formed by the unbarred letters (the reduced
pattern) can be completed to an occurrence of the full pattern by picking
host entries for the barred slots.  A barred pattern with no bars is just a
classical pattern, and avoidance means classical avoidance.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


def is_permutation(values: Sequence[int]) -> bool:
    """True if values is a rearrangement of 1..n (the empty tuple counts).

    >>> is_permutation((2, 4, 1, 3)), is_permutation((1, 3)), is_permutation(())
    (True, False, True)
    """
    n = len(values)
    seen = 0
    for v in values:
        if not isinstance(v, int) or not 1 <= v <= n:
            return False
        bit = 1 << v
        if seen & bit:
            return False
        seen |= bit
    return True


def check_permutation(values: Sequence[int]) -> tuple[int, ...]:
    """Coerce to a tuple and raise ValueError unless it is a permutation of 1..n."""
    p = tuple(values)
    if not is_permutation(p):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def _canonical_host(values: Sequence[int]) -> tuple[int, ...]:
    # Matching only looks at relative order, so a host may be any sequence of
    # distinct integers; non-standard ones are standardized up front.
    h = tuple(values)
    return h if is_permutation(h) else standardize(h)


def standardize(seq: Iterable[int]) -> tuple[int, ...]:
    """Relabel distinct integers order-isomorphically onto 1..k.

    >>> standardize((5, 2, 7))
    (2, 1, 3)
    >>> standardize(())
    ()
    """
    vals = tuple(seq)
    rank = {v: i for i, v in enumerate(sorted(vals), start=1)}
    if len(rank) != len(vals):
        raise ValueError(f"entries must be pairwise distinct: {vals}")
    return tuple(rank[v] for v in vals)


def _order_refs(pattern: Sequence[int]) -> tuple[list, list]:
    # For each slot t, the earlier slot holding the largest pattern value below
    # pattern[t] and the one holding the smallest value above it.  A candidate
    # host value fits slot t iff it lies strictly between the host values at
    # those two slots, which pins down every pairwise order relation at once.
    k = len(pattern)
    lo: list = [None] * k
    hi: list = [None] * k
    for t in range(k):
        pt = pattern[t]
        best_lo, best_hi = 0, k + 1
        for s in range(t):
            ps = pattern[s]
            if ps < pt:
                if ps > best_lo:
                    best_lo, lo[t] = ps, s
            elif ps < best_hi:
                best_hi, hi[t] = ps, s
    return lo, hi


def _iter_occurrences(pattern: tuple[int, ...], host: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # Depth-first scan over position tuples in lexicographic order, pruning
    # any branch whose partial selection is not order-isomorphic to the
    # pattern prefix.  Yields 1-based position tuples.
    k, n = len(pattern), len(host)
    if k == 0:
        yield ()
        return
    lo_ref, hi_ref = _order_refs(pattern)
    chosen = [0] * k
    vals = [0] * k
    t, pos = 0, 0
    last = k - 1
    while True:
        if pos > n - (k - t):
            t -= 1
            if t < 0:
                return
            pos = chosen[t] + 1
            continue
        v = host[pos]
        lo, hi = lo_ref[t], hi_ref[t]
        if (lo is None or vals[lo] < v) and (hi is None or v < vals[hi]):
            chosen[t] = pos
            vals[t] = v
            if t == last:
                yield tuple(c + 1 for c in chosen)
            else:
                t += 1
        pos += 1


def occurrences(pattern: Sequence[int], host: Sequence[int]) -> list[tuple[int, ...]]:
    """All occurrences of a classical pattern in a host.

    Returns every strictly increasing tuple of 1-based positions whose host
    values standardize to the pattern, in lexicographic order.  The pattern
    must be standard; the host may be any sequence of distinct integers.

    >>> occurrences((3, 1, 2), (2, 4, 1, 3, 5))
    [(2, 3, 4)]
    """
    p = check_permutation(pattern)
    h = _canonical_host(host)
    return list(_iter_occurrences(p, h))


def contains(pattern: Sequence[int], host: Sequence[int]) -> bool:
    """True iff the host contains the classical pattern; stops at the first witness."""
    p = check_permutation(pattern)
    h = _canonical_host(host)
    return next(_iter_occurrences(p, h), None) is not None


@dataclass(frozen=True)
class BarredPattern:
    """A full pattern together with the set of barred positions.

    ``full`` is the pattern with bars erased; ``barred`` holds the 1-based
    positions of the barred letters (empty for a classical pattern).  The
    reduced pattern and the unbarred-position map are derived once here and
    reused by the matcher.
    """

    full: tuple[int, ...]
    barred: frozenset[int]
    reduced: tuple[int, ...] = field(init=False, repr=False, compare=False)
    unbarred_slots: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        full = check_permutation(self.full)
        barred = frozenset(self.barred)
        if not all(isinstance(b, int) and 1 <= b <= len(full) for b in barred):
            raise ValueError(f"barred positions {sorted(barred)} out of range 1..{len(full)}")
        unbarred = tuple(s for s in range(1, len(full) + 1) if s not in barred)
        object.__setattr__(self, "full", full)
        object.__setattr__(self, "barred", barred)
        object.__setattr__(self, "unbarred_slots", unbarred)
        object.__setattr__(self, "reduced", standardize(full[s - 1] for s in unbarred))
        object.__setattr__(self, "_flank_plan", _make_flank_plan(full, barred, unbarred))

    def __str__(self):
        return format_pattern(self)


def _make_flank_plan(full, barred, unbarred):
    # Fast-path eligibility: bars only at the first/last slot of the pattern,
    # and each barred letter's value neighbours (rank +-1) unbarred.  Then a
    # reduced occurrence extends iff, independently, each bar has a witness in
    # the open position range beside the occurrence whose value lies strictly
    # between the occurrence values named here (None = unbounded).
    m = len(full)
    if not barred or len(barred) == m or not barred <= {1, m}:
        return None
    slot_of_value = {full[s - 1]: s for s in range(1, m + 1)}
    occ_index = {s: i for i, s in enumerate(unbarred)}
    front = back = None
    for b in sorted(barred):
        v = full[b - 1]
        lo_slot = slot_of_value.get(v - 1)
        hi_slot = slot_of_value.get(v + 1)
        if (lo_slot in barred) or (hi_slot in barred):
            return None
        window = (occ_index[lo_slot] if lo_slot else None,
                  occ_index[hi_slot] if hi_slot else None)
        if b == 1:
            front = window
        else:
            back = window
    return front, back


def _flank_witness(host, occ, window, start, stop):
    # Any host position in [start, stop) (0-based) whose value falls strictly
    # inside the window defined by the occurrence values?
    lo_i, hi_i = window
    lo = host[occ[lo_i] - 1] if lo_i is not None else 0
    hi = host[occ[hi_i] - 1] if hi_i is not None else len(host) + 1
    for p in range(start, stop):
        if lo < host[p] < hi:
            return True
    return False


def _extends_generic(occ, rho: BarredPattern, host) -> bool:
    # Backtracking subset search: pick host positions for the barred slots,
    # in slot order, between the already-known neighbours, keeping every value
    # relation with the known slots.  This is the correctness oracle that the
    # flank fast path must agree with.
    full = rho.full
    m, n = len(full), len(host)
    pos = [0] * (m + 1)
    for j, s in enumerate(rho.unbarred_slots):
        pos[s] = occ[j]
    bars = sorted(rho.barred)

    def place(i):
        if i == len(bars):
            return True
        s = bars[i]
        lo_pos = pos[s - 1] if s > 1 else 0
        hi_pos = n + 1
        for t in range(s + 1, m + 1):
            if pos[t]:
                hi_pos = pos[t]
                break
        fs = full[s - 1]
        for p in range(lo_pos + 1, hi_pos):
            v = host[p - 1]
            if all((v < host[pos[t] - 1]) == (fs < full[t - 1])
                   for t in range(1, m + 1) if pos[t]):
                pos[s] = p
                if place(i + 1):
                    return True
                pos[s] = 0
        return False

    return place(0)


def extends(occ: Sequence[int], rho: BarredPattern, host: Sequence[int]) -> bool:
    """Can this occurrence of the reduced pattern grow into the full pattern?

    ``occ`` must witness ``rho.reduced`` in the host; a full-pattern
    occurrence counts only if its restriction to the unbarred slots is
    exactly ``occ``.
    """
    h = _canonical_host(host)
    o = tuple(occ)
    if (len(o) != len(rho.reduced)
            or any(o[i] >= o[i + 1] for i in range(len(o) - 1))
            or any(not 1 <= p <= len(h) for p in o)
            or standardize(h[p - 1] for p in o) != rho.reduced):
        raise ValueError(f"{o} is not an occurrence of the reduced pattern in {h}")
    plan = rho._flank_plan
    if plan is not None:
        front, back = plan
        if front is not None and not _flank_witness(h, o, front, 0, o[0] - 1):
            return False
        if back is not None and not _flank_witness(h, o, back, o[-1], len(h)):
            return False
        return True
    return _extends_generic(o, rho, h)


def first_violation(rho: BarredPattern, host: Sequence[int]):
    """The lexicographically least witness that the host fails to avoid rho.

    For a classical pattern this is an occurrence of the pattern itself; for
    a barred pattern it is an occurrence of the reduced pattern with no
    completion to the full one.  Returns None when the host avoids rho.
    """
    h = _canonical_host(host)
    if not rho.barred:
        return next(_iter_occurrences(rho.full, h), None)
    plan = rho._flank_plan
    if plan is not None:
        front, back = plan
        for occ in _iter_occurrences(rho.reduced, h):
            if front is not None and not _flank_witness(h, occ, front, 0, occ[0] - 1):
                return occ
            if back is not None and not _flank_witness(h, occ, back, occ[-1], len(h)):
                return occ
        return None
    for occ in _iter_occurrences(rho.reduced, h):
        if not _extends_generic(occ, rho, h):
            return occ
    return None


def avoids_barred(rho: BarredPattern, host: Sequence[int]) -> bool:
    """True iff the host avoids the barred pattern.

    With no bars this is classical avoidance; with every letter barred the
    reduced pattern is empty and its one (empty) occurrence extends exactly
    when the host contains the full pattern, so avoidance then means
    containment.

    >>> avoids_barred(BARRED_24135, (2, 4, 1, 3, 5))
    True
    >>> avoids_barred(BARRED_24135, (3, 1, 2))
    False
    """
    return first_violation(rho, host) is None


# ---------------------------------------------------------------------------
# Text encodings.

_TOKEN_RE = re.compile(r"[,\s]+")


def parse_permutation(text: str) -> tuple[int, ...]:
    """Parse whitespace- or comma-separated positive integers, e.g. "2 4 1 3 5"."""
    tokens = [t for t in _TOKEN_RE.split(text.strip()) if t]
    try:
        values = tuple(int(t) for t in tokens)
    except ValueError:
        raise ValueError(f"cannot parse permutation from {text!r}") from None
    return check_permutation(values)


def format_permutation(perm: Sequence[int]) -> str:
    return " ".join(str(v) for v in perm)


def parse_pattern(text: str) -> BarredPattern:
    """Parse a pattern; '~' immediately before a letter bars it.

    Single-digit letters may be run together ("~2413~5"); patterns with
    letters above 9 must use the separated form ("~2 4 1 3 ~5").

    >>> parse_pattern("~2413~5").reduced
    (3, 1, 2)
    """
    s = text.strip()
    if not s:
        raise ValueError("empty pattern")
    values: list[int] = []
    barred: set[int] = set()
    if _TOKEN_RE.search(s):
        for token in (t for t in _TOKEN_RE.split(s) if t):
            bar = token.startswith("~")
            if bar:
                token = token[1:]
            if not token.isdigit() or int(token) < 1:
                raise ValueError(f"bad pattern letter {token!r} in {text!r}")
            values.append(int(token))
            if bar:
                barred.add(len(values))
    else:
        bar_next = False
        for ch in s:
            if ch == "~":
                if bar_next:
                    raise ValueError(f"doubled '~' in pattern {text!r}")
                bar_next = True
            elif ch.isdigit() and ch != "0":
                values.append(int(ch))
                if bar_next:
                    barred.add(len(values))
                    bar_next = False
            else:
                raise ValueError(f"unexpected character {ch!r} in pattern {text!r}")
        if bar_next:
            raise ValueError(f"dangling '~' in pattern {text!r}")
    return BarredPattern(tuple(values), frozenset(barred))


def format_pattern(rho: BarredPattern) -> str:
    if len(rho.full) <= 9:
        return "".join(("~" if s in rho.barred else "") + str(v)
                       for s, v in enumerate(rho.full, start=1))
    return " ".join(("~" if s in rho.barred else "") + str(v)
                    for s, v in enumerate(rho.full, start=1))


# The two barred patterns the rest of the package is built around: ~2413~5
# (bars on the 2 and the 5, reduced pattern 312) and ~2413 (bar on the 2).
BARRED_24135 = parse_pattern("~2413~5")
BARRED_2413 = parse_pattern("~2413")
