"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

All comparisons are exact (integer statistics, exact polynomial
coefficients); each criterion also enforces its runtime budget.
Run with `pytest -s tests/test_acceptance.py` to see the summary lines.
"""

import time
from contextlib import contextmanager

from kcharge.cores import Partition, k_interior, n_stat, partitions
from kcharge.ktableaux import KTableau, enumerate_k_tableaux, standard_sequences
from kcharge.statistics import (
    charge_table,
    diag_to_highest_addable,
    diag_to_lowest_addable,
    index_I,
    index_J,
    index_L,
    index_M,
    k_charge,
    k_cocharge,
    kostka_foulkes_table,
)
from kcharge.sweeps import run_core_sweep, run_statistics_sweep

TAB_STANDARD_9 = KTableau(4, [[1, 2, 3, 5, 7, 9], [4, 6], [5, 7], [8]])
TAB_SEMISTANDARD_13 = KTableau(
    4, [[1, 1, 2, 3, 4, 4, 5, 5, 6], [2, 3, 5, 5, 6], [3, 4, 7], [5, 6], [6], [7]]
)


@contextmanager
def criterion(number, name, budget_seconds):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        if elapsed >= budget_seconds:
            raise AssertionError(
                f"runtime {elapsed:.2f}s exceeds budget {budget_seconds}s"
            )
    except BaseException:
        elapsed = time.perf_counter() - start
        print(f"ACCEPTANCE {number} ({name}): FAIL [{elapsed:.2f}s]")
        raise
    print(f"ACCEPTANCE {number} ({name}): PASS [{elapsed:.2f}s]")


def test_criterion_1_cocharge_table_golden():
    with criterion(1, "standard cocharge table", 1.0):
        seq = standard_sequences(TAB_STANDARD_9)[0]
        assert index_L(seq, 4) == [0, 0, 0, 1, 1, 2, 2, 4, 3]
        assert index_M(seq, 4) == [0, 0, 0, 1, 1, 2, 2, 3, 3]
        assert diag_to_lowest_addable(seq, 4) == [0, 0, 0, 0, 0, 0, 0, 1, 0]
        assert k_cocharge(TAB_STANDARD_9, "lp") == 13
        assert k_cocharge(TAB_STANDARD_9, "morse") == 13


def test_criterion_2_charge_table_golden():
    with criterion(2, "standard charge table", 1.0):
        seq = standard_sequences(TAB_STANDARD_9)[0]
        assert index_I(seq, 4) == [0, 1, 2, 2, 2, 3, 3, 3, 5]
        assert index_J(seq, 4) == [0, 1, 2, 2, 2, 3, 3, 3, 4]
        assert diag_to_highest_addable(seq, 4) == [0, 0, 0, 0, 0, 0, 0, 0, 1]
        assert k_charge(TAB_STANDARD_9, "lp") == 21
        assert k_charge(TAB_STANDARD_9, "morse") == 21


def test_criterion_3_semistandard_golden():
    with criterion(3, "semistandard charge/cocharge", 1.0):
        seqs = standard_sequences(TAB_SEMISTANDARD_13)
        assert [sum(index_I(s, 4)) for s in seqs] == [5, 7]
        per_seq_morse = [
            sum(index_J(s, 4)) + sum(diag_to_highest_addable(s, 4)) for s in seqs
        ]
        assert per_seq_morse == [5, 7]
        assert k_charge(TAB_SEMISTANDARD_13, "lp") == 12
        assert k_charge(TAB_SEMISTANDARD_13, "morse") == 12
        assert k_cocharge(TAB_SEMISTANDARD_13, "lp") == 16
        assert k_cocharge(TAB_SEMISTANDARD_13, "morse") == 16
        mu = Partition([2, 2, 2, 2, 2, 2, 1])
        lam = Partition([9, 5, 3, 2, 1, 1])
        assert n_stat(mu) == 36
        assert len(k_interior(lam, 4)) == 8
        assert 12 + 16 == n_stat(mu) - len(k_interior(lam, 4)) == 36 - 8


def test_criterion_4_enumeration_counts():
    with criterion(4, "enumeration counts and fillings", 1.0):
        tabs = enumerate_k_tableaux(3, (3, 2, 1))
        assert [t.rows for t in tabs] == [
            ((1, 1, 1, 2, 2), (2, 2), (3,)),
            ((1, 1, 1, 2, 2, 3), (2, 2, 3)),
        ]
        tabs = enumerate_k_tableaux(2, (1, 1, 1, 1))
        assert [t.rows for t in tabs] == [
            ((1, 2, 3), (3,), (4,)),
            ((1, 3, 4), (2,), (3,)),
            ((1, 2, 3, 4), (3, 4)),
            ((1, 3), (2, 4), (3,), (4,)),
        ]


def test_criterion_5_equivalence_sweep():
    with criterion(5, "formulation equivalence sweep", 300.0):
        report = run_statistics_sweep(max_k=4, max_weight=6)
        assert report.subjects_checked > 0
        assert report.ok, report.failures[:3]


def test_criterion_6_oracle_equivalence():
    with criterion(6, "fast vs brute-force enumeration", 600.0):
        cases = [
            (k, mu)
            for k in (1, 2, 3)
            for size in range(1, 7)
            for mu in partitions(size, max_part=k)
        ]
        cases += [(4, mu) for size in range(1, 6) for mu in partitions(size, max_part=4)]
        for k, mu in cases:
            fast = enumerate_k_tableaux(k, mu, strategy="fast")
            oracle = enumerate_k_tableaux(k, mu, strategy="oracle")
            assert fast == oracle, (k, tuple(mu), len(fast), len(oracle))


def test_criterion_7_large_k_degeneration():
    with criterion(7, "large-k Kostka-Foulkes degeneration", 60.0):
        for size in range(1, 6):
            for mu in partitions(size):
                affine = charge_table(size, mu)
                classical = kostka_foulkes_table(mu)
                assert list(affine.keys()) == list(classical.keys()), tuple(mu)
                for shape in affine:
                    assert affine[shape] == classical[shape], (tuple(mu), tuple(shape))
        kf = kostka_foulkes_table((1, 1, 1))
        assert str(kf[Partition([2, 1])]) == "t + t^2"


def test_criterion_8_core_invariants():
    with criterion(8, "core corner and extremal invariants", 60.0):
        report = run_core_sweep(max_n=5, max_cells=12)
        assert report.subjects_checked > 0
        assert report.ok, report.failures[:3]
