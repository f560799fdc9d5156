"""Acceptance suite: the eight headline guarantees, each as one test.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS line per
criterion.  Everything asserted here is exact; the only tolerances are the
wall-clock budgets stated inline.
"""

import json
import os
import random
import time
from itertools import combinations, product

import pytest
from oracles import all_perms, invert_by_series, set_partition_count

from barredperms.cli import main
from barredperms.decomposition import NotAnAvoiderError, compose, decompose, is_end_max_avoider, to_list
from barredperms.enumeration import brute_force_avoiders, construct_avoiders, end_max_avoiders
from barredperms.patterns import BARRED_2413, BARRED_24135, avoids_barred, occurrences, standardize
from barredperms.transforms import bell_numbers, invert_transform, verify_invert_identity

# Counting sequence of ~2413~5-avoiders, derived twice during development:
# by the convolution recurrence on the Bell numbers and by the brute-force
# matcher; the tests below recompute both sides from scratch.
EXPECTED_COUNTS = (1, 2, 5, 14, 43, 144, 525, 2084, 9005)


def test_criterion_1_verify_base_range(capsys):
    start = time.perf_counter()
    code = main(["verify", "--n-max", "6", "--brute-cap", "6", "--format", "json"])
    elapsed = time.perf_counter() - start
    data = json.loads(capsys.readouterr().out)
    assert code == 0 and data["ok"] is True
    for row, want in zip(data["rows"], (1, 2, 5, 14, 43, 144)):
        assert row["transform"] == row["construct"] == row["brute"] == want
    assert elapsed < 10.0
    with capsys.disabled():
        print(f"\nPASS criterion 1: verify n<=6 agrees three ways "
              f"(1,2,5,14,43,144) in {elapsed:.2f}s")


def test_criterion_2_extended_range(avoiders_upto8):
    expected = invert_transform(bell_numbers(9))
    assert expected == EXPECTED_COUNTS
    for n in (7, 8):
        assert len(avoiders_upto8[n]) == expected[n - 1]

    start = time.perf_counter()
    serial = len(brute_force_avoiders(BARRED_24135, 9, jobs=1))
    serial_time = time.perf_counter() - start
    assert serial == expected[8]
    assert serial_time < 600.0

    jobs = min(4, os.cpu_count() or 1)
    start = time.perf_counter()
    parallel = len(brute_force_avoiders(BARRED_24135, 9, jobs=jobs))
    parallel_time = time.perf_counter() - start
    assert parallel == serial
    if jobs > 1:
        assert parallel_time < serial_time
    print(f"PASS criterion 2: brute force n=7..9 = transform terms "
          f"({expected[6]},{expected[7]},{expected[8]}); n=9 serial {serial_time:.1f}s, "
          f"x{serial_time / parallel_time:.2f} speedup with {jobs} jobs")


def test_criterion_3_bell_identity():
    # The first six Bell terms are 1,1,2,5,15,52 and the later ones match an
    # independent set-partition enumeration; |S_k(~2413)| is the Bell number
    # B_k counting partitions of a k-set, i.e. term k+1 of the sequence.
    bell = bell_numbers(9)
    assert bell[:6] == (1, 1, 2, 5, 15, 52)
    assert bell[6] == set_partition_count(6)
    assert bell[7] == set_partition_count(7)
    for k in range(1, 9):
        count = len(brute_force_avoiders(BARRED_2413, k, jobs=2))
        assert count == set_partition_count(k) == bell[k]
    print("PASS criterion 3: |S_k(~2413)| = Bell(k) for k=1..8, "
          "Bell terms checked against set-partition enumeration")


def test_criterion_4_bijection_round_trips(avoiders_upto8):
    cases_a = 0
    for n in range(9):
        avoiders = avoiders_upto8[n]
        assert construct_avoiders(n) == avoiders
        for p in avoiders:
            assert compose(to_list(p)) == p
            cases_a += 1

    pool = {k: end_max_avoiders(k) for k in range(1, 9)}
    cases_b = 0
    for total in range(9):
        for parts in _compositions(total):
            for combo in product(*(pool[k] for k in parts)):
                assert to_list(compose(list(combo))) == list(combo)
                cases_b += 1
    assert cases_a == cases_b == 1 + sum(EXPECTED_COUNTS[:8])
    print(f"PASS criterion 4: compose/to_list round trips, {cases_a} avoiders "
          f"and {cases_b} end-max lists of length <= 8, zero failures")


def test_criterion_5_structural_laws(avoiders_upto8, perms_upto7):
    for n in range(9):
        for p in avoiders_upto8[n]:
            mpos = p.index(n) if n else 0
            suffix = p[mpos + 1:]
            assert all(suffix[i] > suffix[i + 1] for i in range(len(suffix) - 1))
            pos = {v: i for i, v in enumerate(p)}
            for i in range(mpos):
                for j in range(i + 1, mpos):
                    c, a = p[i], p[j]
                    if c > a:
                        assert all(pos[v] < mpos for v in range(a, c + 1))
    rejected = accepted = 0
    for n in range(8):
        for p in perms_upto7[n]:
            if avoids_barred(BARRED_24135, p):
                decompose(p)
                accepted += 1
            else:
                with pytest.raises(NotAnAvoiderError):
                    decompose(p)
                rejected += 1
    print(f"PASS criterion 5: suffix + interval-closure laws on avoiders <= 8; "
          f"decompose accepted {accepted} avoiders and rejected {rejected} "
          f"non-avoiders <= 7, zero exceptions")


def test_criterion_6_end_max_equivalence(perms_upto7):
    checked = 0
    for k in range(8):
        for tau in perms_upto7[k]:
            sigma = tau + (k + 1,)
            assert is_end_max_avoider(sigma) == avoids_barred(BARRED_2413, tau)
            checked += 1
    print(f"PASS criterion 6: end-max avoidance of tau+(k,) matches "
          f"~2413-avoidance of tau for all {checked} standard tau <= 7")


def test_criterion_7_transform_properties():
    from barredperms.transforms import invert_inverse

    rng = random.Random(918273)
    for _ in range(100):
        seq = tuple(rng.randint(-5, 5) for _ in range(rng.randint(0, 12)))
        assert invert_inverse(invert_transform(seq)) == seq
        assert invert_transform(invert_inverse(seq)) == seq
    divisions = [tuple(bell_numbers(8))]
    divisions.extend(tuple(rng.randint(-5, 5) for _ in range(rng.randint(1, 8)))
                     for _ in range(100))
    for seq in divisions:
        assert list(invert_transform(seq)) == invert_by_series(list(seq))
    print("PASS criterion 7: 100 signed round trips (exact) and series-division "
          "agreement for lengths <= 8")


def test_criterion_8_matcher_vs_subset_scan(perms_upto7):
    patterns_by_len = {k: all_perms(k) for k in range(1, 5)}
    pairs = 0
    for n in range(8):
        for host in perms_upto7[n]:
            for k, patterns in patterns_by_len.items():
                buckets = {}
                for occ in combinations(range(1, n + 1), k):
                    key = standardize(host[i - 1] for i in occ)
                    buckets.setdefault(key, []).append(occ)
                for p in patterns:
                    assert occurrences(p, host) == buckets.get(p, [])
                    pairs += 1
    print(f"PASS criterion 8: occurrences == all-subsets scan on {pairs} "
          f"pattern/host pairs (patterns <= 4, hosts <= 7)")


def _compositions(n):
    if n == 0:
        yield ()
        return
    for head in range(1, n + 1):
        for tail in _compositions(n - head):
            yield (head, *tail)
