"""Exhaustive verification sweeps over enumerated k-tableaux and cores.

Every identity relating the two charge formulations is checked on every
tableau within the requested bounds; the first counterexample, if any,
is reported with enough context to reproduce it.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field

from .cores import (
    Cell,
    Partition,
    addable_corners,
    is_n_core,
    k_interior,
    n_stat,
    partitions,
    removable_corners,
    residue,
)
from .ktableaux import (
    KTableau,
    enumerate_k_tableaux,
    highest_occurrence,
    lowest_occurrence,
    standard_sequences,
    to_text,
    validate,
)
from .statistics import (
    classical_charge,
    classical_cocharge,
    diag_to_highest_addable,
    diag_to_lowest_addable,
    index_J,
    index_M,
    k_charge,
    k_cocharge,
)


@dataclass(frozen=True)
class SweepFailure:
    identity: str
    detail: str
    context: str


@dataclass
class SweepReport:
    subjects_checked: int = 0
    identities_checked: int = 0
    failures: list[SweepFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "SweepReport") -> None:
        self.subjects_checked += other.subjects_checked
        self.identities_checked += other.identities_checked
        self.failures.extend(other.failures)


def weights_up_to(max_k: int, max_size: int) -> list[tuple[int, Partition]]:
    """All (k, weight) pairs with 1 <= k <= max_k and weight a non-empty
    partition of size <= max_size whose parts are at most k."""
    return [
        (k, mu)
        for k in range(1, max_k + 1)
        for size in range(1, max_size + 1)
        for mu in partitions(size, max_part=k)
    ]


def check_tableau_identities(tab: KTableau) -> tuple[int, list[SweepFailure]]:
    """Run every statistics-module identity on one tableau.

    Returns (number of identities checked, failures).
    """
    k = tab.k
    mu = Partition(tab.weight)
    lam = tab.shape
    context = to_text(tab)
    checked = 0
    failures: list[SweepFailure] = []

    def expect(identity: str, condition: bool, detail: str) -> None:
        nonlocal checked
        checked += 1
        if not condition:
            failures.append(SweepFailure(identity, detail, context))

    seqs = standard_sequences(tab)
    cocharge_lp = k_cocharge(tab, "lp")
    cocharge_morse = k_cocharge(tab, "morse")
    charge_lp = k_charge(tab, "lp")
    charge_morse = k_charge(tab, "morse")
    interior = len(k_interior(lam, k))

    expect(
        "cocharge formulations agree",
        cocharge_lp == cocharge_morse,
        f"lp={cocharge_lp} morse={cocharge_morse}",
    )
    expect(
        "charge formulations agree",
        charge_lp == charge_morse,
        f"lp={charge_lp} morse={charge_morse}",
    )
    expect(
        "charge + cocharge = n(weight) - interior",
        charge_morse + cocharge_morse == n_stat(mu) - interior,
        f"{charge_morse} + {cocharge_morse} != {n_stat(mu)} - {interior}",
    )
    expect("charge is non-negative", charge_morse >= 0, f"charge={charge_morse}")
    expect("cocharge is non-negative", cocharge_morse >= 0, f"cocharge={cocharge_morse}")
    for seq in seqs:
        terms_low = [m + d for m, d in zip(index_M(seq, k), diag_to_lowest_addable(seq, k))]
        terms_high = [j + d for j, d in zip(index_J(seq, k), diag_to_highest_addable(seq, k))]
        expect(
            "non-negative term by term",
            all(t >= 0 for t in terms_low) and all(t >= 0 for t in terms_high),
            f"terms {terms_low} / {terms_high}",
        )

    for i in range(1, tab.n_letters + 1):
        expect(
            "restriction is a core",
            is_n_core(tab.restrict_leq(i).shape, k + 1),
            f"restriction to {i} has shape {tab.restrict_leq(i).shape}",
        )

    all_cells = [c for seq in seqs for e in seq.entries for c in e.cells]
    expect(
        "sequences partition the cells",
        len(all_cells) == len(set(all_cells)) == lam.size(),
        f"{len(all_cells)} cells over sequences vs {lam.size()} in shape",
    )
    for seq in seqs:
        for e in seq.entries:
            rows = [c.row for c in e.cells]
            cols = [c.col for c in e.cells]
            expect(
                "entry occupies one residue, distinct rows and columns",
                len(set(residue(c, k + 1) for c in e.cells)) == 1
                and len(set(rows)) == len(rows)
                and len(set(cols)) == len(cols),
                f"letter {e.letter} cells {sorted(e.cells)}",
            )
    alpha1 = mu[0] if mu else 0
    expect(
        "letter 1 fills the bottom row start",
        set(tab.cells_of(1)) == {Cell(1, j) for j in range(1, alpha1 + 1)},
        f"letter-1 cells {sorted(tab.cells_of(1))}",
    )

    if mu and all(part == 1 for part in mu):
        m = len(mu)
        seq = seqs[0]
        low_side = sum(index_M(seq, k)) + sum(diag_to_lowest_addable(seq, k))
        high_side = sum(index_J(seq, k)) + sum(diag_to_highest_addable(seq, k))
        expect(
            "standard duality with explicit constant",
            high_side == m * (m - 1) // 2 - interior - low_side,
            f"{high_side} != {m}*{m - 1}/2 - {interior} - {low_side}",
        )
        d_low = diag_to_lowest_addable(seq, k)
        d_high = diag_to_highest_addable(seq, k)
        for i in range(1, m + 1):
            up, down = highest_occurrence(seq, i), lowest_occurrence(seq, i)
            res = residue(up, k + 1)
            letter_diags = {c.diagonal for c in tab.cells_of(i)}
            between = [
                d
                for d in range(min(up.diagonal, down.diagonal) + 1, max(up.diagonal, down.diagonal))
                if d % (k + 1) == res
            ]
            expect(
                "diagonal filling between extremes",
                all(d in letter_diags for d in between),
                f"letter {i} misses a residue-{res} diagonal in {between}",
            )
            meeting = {
                c.diagonal
                for j in range(1, i + 1)
                for c in tab.cells_of(j)
                if c.diagonal % (k + 1) == res
            }
            count = len(tab.cells_of(i)) + d_high[i - 1] + d_low[i - 1]
            expect(
                "diagonal count through the restriction",
                count == len(meeting),
                f"letter {i}: {count} != {len(meeting)}",
            )

    if k > (lam[0] if lam else 0) + len(lam) - 2:
        counts = tuple(len(tab.cells_of(i)) for i in range(1, tab.n_letters + 1))
        expect(
            "large k degenerates to a classical tableau",
            counts == tuple(mu),
            f"cell counts {counts} vs weight {tuple(mu)}",
        )
        expect(
            "large-k charge matches the classical statistic",
            charge_morse == classical_charge(tab.rows)
            and cocharge_morse == classical_cocharge(tab.rows),
            f"k-stats ({charge_morse}, {cocharge_morse}) vs classical "
            f"({classical_charge(tab.rows)}, {classical_cocharge(tab.rows)})",
        )

    return checked, failures


def _statistics_task(args: tuple[int, tuple[int, ...]]) -> SweepReport:
    k, weight = args
    report = SweepReport()
    for tab in enumerate_k_tableaux(k, weight):
        ok = validate(tab, weight)
        report.identities_checked += 1
        if not ok:
            report.failures.append(
                SweepFailure("enumerated tableau validates", ok.problem or "", to_text(tab))
            )
        checked, failures = check_tableau_identities(tab)
        report.subjects_checked += 1
        report.identities_checked += checked
        report.failures.extend(failures)
    return report


def run_statistics_sweep(max_k: int, max_weight: int, processes: int = 1) -> SweepReport:
    """Check every statistics identity over all k-tableaux with k <= max_k
    and partition weight of size <= max_weight (parts <= k)."""
    tasks = [(k, tuple(mu)) for k, mu in weights_up_to(max_k, max_weight)]
    report = SweepReport()
    if processes > 1 and len(tasks) > 1:
        with multiprocessing.Pool(min(processes, len(tasks))) as pool:
            partials = pool.map(_statistics_task, tasks)
    else:
        partials = map(_statistics_task, tasks)
    for partial in partials:
        report.merge(partial)
    return report


def run_core_sweep(max_n: int, max_cells: int) -> SweepReport:
    """Corner-exclusion and extremal-propagation checks over all n-cores
    with at most max_cells cells, 2 <= n <= max_n.

    Cores come from a brute-force filter over all partitions, independent
    of the residue-growth enumerator.
    """
    report = SweepReport()
    shapes = [
        lam for size in range(max_cells + 1) for lam in partitions(size)
    ]
    for n in range(2, max_n + 1):
        for lam in shapes:
            if not is_n_core(lam, n):
                continue
            report.subjects_checked += 1
            addable = {r for _, r in addable_corners(lam, n)}
            removable = {r for _, r in removable_corners(lam, n)}
            report.identities_checked += 1
            if addable & removable:
                report.failures.append(
                    SweepFailure(
                        "no addable and removable corner share a residue",
                        f"residues {sorted(addable & removable)}",
                        f"n={n} core {lam}",
                    )
                )
            extremal = [
                c for c in lam.cells() if not lam.contains(Cell(c.row + 1, c.col + 1))
            ]
            conj = lam.conjugate()

            def end_of_row(cc, lam=lam):
                return cc.col == lam[cc.row - 1]

            def top_of_col(cc, conj=conj):
                return cc.row == conj[cc.col - 1]

            for c in extremal:
                for c2 in extremal:
                    if c2 == c or residue(c, n) != residue(c2, n):
                        continue
                    report.identities_checked += 1
                    nw = c2.row >= c.row and c2.col <= c.col
                    se = c2.row <= c.row and c2.col >= c.col
                    if nw and end_of_row(c) and not end_of_row(c2):
                        report.failures.append(
                            SweepFailure(
                                "extremal propagation along rows",
                                f"{tuple(c)} ends its row but {tuple(c2)} does not",
                                f"n={n} core {lam}",
                            )
                        )
                    if se and top_of_col(c) and not top_of_col(c2):
                        report.failures.append(
                            SweepFailure(
                                "extremal propagation along columns",
                                f"{tuple(c)} tops its column but {tuple(c2)} does not",
                                f"n={n} core {lam}",
                            )
                        )
    return report
