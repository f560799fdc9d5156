"""Exact integer-sequence machinery and the three-way counting check.

Sequences are 1-indexed tuples of exact ints.  The Invert transform of
(a_n) is the (b_n) with 1 + sum b_n x^n = 1 / (1 - sum a_n x^n); the
equivalent convolution b_n = a_n + sum_{k<n} a_k * b_{n-k} is what gets
computed (the constant term 1 corresponds to the empty list of structures
and is not stored).  When a_n counts some kind of structure by size, b_n
counts lists of those structures with total size n.

All arithmetic is exact, but any stored term outside the checked 64-bit
range (unsigned for counts, signed for the inverse transform) raises
SequenceOverflowError rather than producing a silently huge value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .enumeration import (
    DEFAULT_CONSTRUCT_CAP,
    brute_force_avoiders,
    construct_avoiders,
)
from .patterns import BARRED_24135

U64_MAX = 2**64 - 1
I64_MIN, I64_MAX = -(2**63), 2**63 - 1


class SequenceOverflowError(OverflowError):
    """A sequence term left the checked 64-bit range."""


def _checked(value: int, signed: bool, what: str) -> int:
    lo, hi = (I64_MIN, I64_MAX) if signed else (0, U64_MAX)
    if not lo <= value <= hi:
        kind = "signed" if signed else "unsigned"
        raise SequenceOverflowError(
            f"{what} = {value} does not fit in 64 {kind} bits; reduce n_max")
    return value


def bell_numbers(count: int) -> tuple[int, ...]:
    """The first ``count`` terms of the Bell sequence 1, 1, 2, 5, 15, 52, ...

    Term t is the number of set partitions of a (t-1)-element set, computed
    by the triangle recurrence: each row starts with the last entry of the
    previous row and each further entry adds its left neighbour to the entry
    above it; the terms are the row heads.

    >>> bell_numbers(6)
    (1, 1, 2, 5, 15, 52)
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    terms = [1]
    row = [1]
    while len(terms) < count:
        new = [row[-1]]
        for x in row:
            new.append(new[-1] + x)
        row = new
        terms.append(_checked(row[0], False, f"Bell term {len(terms) + 1}"))
    return tuple(terms)


def invert_transform(seq: Sequence[int]) -> tuple[int, ...]:
    """Invert transform, term by term, same length as the input.

    >>> invert_transform((1, 1, 2, 5, 15, 52))
    (1, 2, 5, 14, 43, 144)
    """
    a = [int(x) for x in seq]
    signed = any(x < 0 for x in a)
    b: list[int] = []
    for i in range(len(a)):
        term = a[i] + sum(a[k] * b[i - 1 - k] for k in range(i))
        b.append(_checked(term, signed, f"transform term {i + 1}"))
    return tuple(b)


def invert_inverse(seq: Sequence[int]) -> tuple[int, ...]:
    """The unique preimage under the Invert transform.

    Solves the same convolution for a_n: a_n = b_n - sum_{k<n} a_k * b_{n-k}.
    Terms may come out negative for arbitrary input, so the signed range is
    checked.

    >>> invert_inverse((1, 2, 5, 14, 43, 144))
    (1, 1, 2, 5, 15, 52)
    """
    b = [int(x) for x in seq]
    a: list[int] = []
    for i in range(len(b)):
        term = b[i] - sum(a[k] * b[i - 1 - k] for k in range(i))
        a.append(_checked(term, True, f"inverse term {i + 1}"))
    return tuple(a)


# ---------------------------------------------------------------------------
# The headline check: the counting sequence of ~2413~5-avoiders is the
# Invert transform of the Bell numbers, verified three ways per size.

@dataclass(frozen=True)
class IdentityRow:
    n: int
    transform: int
    construct: int | None
    brute: int | None
    match: bool


@dataclass(frozen=True)
class IdentityReport:
    """Per-size comparison table plus the caps that limited the columns."""

    n_max: int
    brute_cap: int
    construct_cap: int
    rows: tuple[IdentityRow, ...]

    @property
    def ok(self) -> bool:
        return all(row.match for row in self.rows)


def verify_invert_identity(n_max: int, brute_cap: int, *,
                           construct_cap: int = DEFAULT_CONSTRUCT_CAP,
                           jobs: int | None = None) -> IdentityReport:
    """Compare Invert(Bell) against the constructive and brute-force counts.

    One row per size 1..n_max.  The transform column is always present; the
    other two are populated only up to their caps (absent columns simply do
    not take part in the row's match verdict).
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    expected = invert_transform(bell_numbers(n_max))
    rows = []
    for n in range(1, n_max + 1):
        t = expected[n - 1]
        c = len(construct_avoiders(n, cap=construct_cap)) if n <= construct_cap else None
        b = (len(brute_force_avoiders(BARRED_24135, n, cap=brute_cap, jobs=jobs))
             if n <= brute_cap else None)
        match = all(x == t for x in (c, b) if x is not None)
        rows.append(IdentityRow(n=n, transform=t, construct=c, brute=b, match=match))
    return IdentityReport(n_max=n_max, brute_cap=brute_cap,
                          construct_cap=construct_cap, rows=tuple(rows))


def format_report(report: IdentityReport) -> str:
    """Plain-text aligned table of an IdentityReport."""
    header = ("n", "transform", "construct", "brute", "match")
    body = [(str(r.n), str(r.transform),
             "-" if r.construct is None else str(r.construct),
             "-" if r.brute is None else str(r.brute),
             "yes" if r.match else "NO")
            for r in report.rows]
    widths = [max(len(h), *(len(row[i]) for row in body)) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines.extend("  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in body)
    lines.append("result: " + ("ok" if report.ok else "MISMATCH"))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Text encoding: comma-separated integers, e.g. "1,1,2,5,15,52".

def parse_sequence(text: str) -> tuple[int, ...]:
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    if not tokens:
        raise ValueError("empty sequence")
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise ValueError(f"cannot parse sequence from {text!r}") from None


def format_sequence(seq: Sequence[int]) -> str:
    return ",".join(str(x) for x in seq)
