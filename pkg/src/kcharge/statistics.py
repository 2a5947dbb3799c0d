"""Charge and cocharge statistics on k-tableaux, and their classical limits.

Two equivalent formulations are implemented for each statistic:

* "lp"    - index-vector recursions (L for cocharge, I for charge) with
            signed diagonal-count corrections between consecutive letters;
* "morse" - manifestly non-negative recursions (M, J) driven by cyclic
            residue orders, plus a diagonal count to an addable corner.

Sums are exact integers throughout; generating functions are sparse
integer polynomials in t.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .cores import (
    Cell,
    Partition,
    k_interior,
    n_stat,
    partition_sort_key,
    partitions,
    residue,
)
from .ktableaux import (
    KTableau,
    StandardSequence,
    enumerate_k_tableaux,
    highest_occurrence,
    lowest_occurrence,
    restrict_sequence,
    standard_sequences,
)

FORMULATIONS = ("lp", "morse")


def diag(c1: Cell, c2: Cell, k: int) -> int:
    """Diagonals of the lower cell's residue strictly between two cells.

    Diagonal indices are col - row; the lower cell is the one with the
    smaller row (smaller diagonal index on a row tie), and its residue
    mod k+1 selects which diagonals are counted in the open interval.
    """
    n = k + 1
    lower = min(c1, c2, key=lambda c: (c.row, c.diagonal))
    r = lower.diagonal % n
    lo, hi = sorted((c1.diagonal, c2.diagonal))
    if hi - lo < 2:
        return 0
    return (hi - 1 - r) // n - (lo - r) // n


def lowest_addable(cells: Iterable[Cell]) -> Cell:
    """One past the right-most bottom-row cell of the set."""
    top = max((c.col for c in cells if c.row == 1), default=0)
    if not top:
        raise ValueError("cell set has no bottom-row cell")
    return Cell(1, top + 1)


def highest_addable(cells: Iterable[Cell]) -> Cell:
    """The first column, one row above the highest cell of the set."""
    top = max((c.row for c in cells), default=0)
    if not top:
        raise ValueError("cell set is empty")
    return Cell(top + 1, 1)


@dataclass(frozen=True)
class ResidueOrder:
    """Cyclic total order on residues {0..modulus-1} pivoted at `pivot`.

    direction "low":  pivot > pivot+1 > ... > modulus-1 > 0 > ... > pivot-1
    direction "high": pivot > pivot-1 > ... > 0 > modulus-1 > ... > pivot+1
    """

    modulus: int
    pivot: int
    direction: str

    def rank(self, res: int) -> int:
        if self.direction == "low":
            return (res - self.pivot) % self.modulus
        return (self.pivot - res) % self.modulus

    def greater(self, a: int, b: int) -> bool:
        return self.rank(a) < self.rank(b)

    def descending(self) -> tuple[int, ...]:
        return tuple(sorted(range(self.modulus), key=self.rank))

    def __str__(self) -> str:
        return " > ".join(str(r) for r in self.descending())


def low_order(cells: Iterable[Cell], k: int) -> ResidueOrder:
    pivot = residue(lowest_addable(cells), k + 1)
    return ResidueOrder(k + 1, pivot, "low")


def high_order(cells: Iterable[Cell], k: int) -> ResidueOrder:
    pivot = residue(highest_addable(cells), k + 1)
    return ResidueOrder(k + 1, pivot, "high")


def index_L(seq: StandardSequence, k: int) -> list[int]:
    """Signed cocharge index vector over one standard sequence."""
    out = [0]
    for i in range(2, len(seq) + 1):
        cur, prev = lowest_occurrence(seq, i), lowest_occurrence(seq, i - 1)
        d = diag(cur, prev, k)
        out.append(out[-1] + 1 + d if prev.row < cur.row else out[-1] - d)
    return out


def index_I(seq: StandardSequence, k: int) -> list[int]:
    """Signed charge index vector over one standard sequence."""
    out = [0]
    for i in range(2, len(seq) + 1):
        cur, prev = highest_occurrence(seq, i), highest_occurrence(seq, i - 1)
        d = diag(cur, prev, k)
        out.append(out[-1] + 1 + d if cur.col > prev.col else out[-1] - d)
    return out


def index_M(seq: StandardSequence, k: int) -> list[int]:
    """Non-negative cocharge index vector: +1 whenever the residue rises in
    the low residue order of the sequence restriction."""
    out = [0]
    for i in range(2, len(seq) + 1):
        order = low_order(restrict_sequence(seq, i), k)
        rose = order.greater(seq.entry(i).residue, seq.entry(i - 1).residue)
        out.append(out[-1] + 1 if rose else out[-1])
    return out


def index_J(seq: StandardSequence, k: int) -> list[int]:
    """Non-negative charge index vector: as index_M but under the high
    residue order."""
    out = [0]
    for i in range(2, len(seq) + 1):
        order = high_order(restrict_sequence(seq, i), k)
        rose = order.greater(seq.entry(i).residue, seq.entry(i - 1).residue)
        out.append(out[-1] + 1 if rose else out[-1])
    return out


def diag_to_lowest_addable(seq: StandardSequence, k: int) -> list[int]:
    """diag(lowest occurrence of i, lowest addable cell of the restriction)."""
    return [
        diag(lowest_occurrence(seq, i), lowest_addable(restrict_sequence(seq, i)), k)
        for i in range(1, len(seq) + 1)
    ]


def diag_to_highest_addable(seq: StandardSequence, k: int) -> list[int]:
    """diag(highest occurrence of i, highest addable cell of the restriction)."""
    return [
        diag(highest_occurrence(seq, i), highest_addable(restrict_sequence(seq, i)), k)
        for i in range(1, len(seq) + 1)
    ]


def _check_formulation(formulation: str) -> None:
    if formulation not in FORMULATIONS:
        raise ValueError(f"formulation must be one of {FORMULATIONS}, got {formulation!r}")


def k_cocharge(tab: KTableau, formulation: str = "morse") -> int:
    """Sum over standard sequences of the cocharge index vectors."""
    _check_formulation(formulation)
    total = 0
    for seq in standard_sequences(tab):
        if formulation == "lp":
            total += sum(index_L(seq, tab.k))
        else:
            total += sum(index_M(seq, tab.k)) + sum(diag_to_lowest_addable(seq, tab.k))
    return total


def k_charge(tab: KTableau, formulation: str = "morse") -> int:
    """Sum over standard sequences of the charge index vectors."""
    _check_formulation(formulation)
    total = 0
    for seq in standard_sequences(tab):
        if formulation == "lp":
            total += sum(index_I(seq, tab.k))
        else:
            total += sum(index_J(seq, tab.k)) + sum(diag_to_highest_addable(seq, tab.k))
    return total


@dataclass(frozen=True)
class SequenceReport:
    """Everything the per-sequence statistics tables display."""

    letters: tuple[int, ...]
    residues: tuple[int, ...]
    L: tuple[int, ...]
    M: tuple[int, ...]
    I: tuple[int, ...]
    J: tuple[int, ...]
    diag_prev_low: tuple[int, ...]
    diag_prev_high: tuple[int, ...]
    diag_add_low: tuple[int, ...]
    diag_add_high: tuple[int, ...]
    low_orders: tuple[ResidueOrder | None, ...]
    high_orders: tuple[ResidueOrder | None, ...]

    def cocharge_lp(self) -> int:
        return sum(self.L)

    def cocharge_morse(self) -> int:
        return sum(self.M) + sum(self.diag_add_low)

    def charge_lp(self) -> int:
        return sum(self.I)

    def charge_morse(self) -> int:
        return sum(self.J) + sum(self.diag_add_high)


def sequence_reports(tab: KTableau) -> list[SequenceReport]:
    """Per-sequence index vectors, residue orders, and diag corrections."""
    k = tab.k
    reports = []
    for seq in standard_sequences(tab):
        m = len(seq)
        d_prev_low, d_prev_high = [0], [0]
        low_orders: list[ResidueOrder | None] = [None]
        high_orders: list[ResidueOrder | None] = [None]
        for i in range(2, m + 1):
            d_prev_low.append(diag(lowest_occurrence(seq, i), lowest_occurrence(seq, i - 1), k))
            d_prev_high.append(diag(highest_occurrence(seq, i), highest_occurrence(seq, i - 1), k))
            low_orders.append(low_order(restrict_sequence(seq, i), k))
            high_orders.append(high_order(restrict_sequence(seq, i), k))
        reports.append(
            SequenceReport(
                letters=tuple(e.letter for e in seq.entries),
                residues=seq.residues(),
                L=tuple(index_L(seq, k)),
                M=tuple(index_M(seq, k)),
                I=tuple(index_I(seq, k)),
                J=tuple(index_J(seq, k)),
                diag_prev_low=tuple(d_prev_low),
                diag_prev_high=tuple(d_prev_high),
                diag_add_low=tuple(diag_to_lowest_addable(seq, k)),
                diag_add_high=tuple(diag_to_highest_addable(seq, k)),
                low_orders=tuple(low_orders),
                high_orders=tuple(high_orders),
            )
        )
    return reports


class TPolynomial:
    """Polynomial in t with integer coefficients and exponents >= 0,
    stored as a sparse exponent -> coefficient map."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._coeffs: dict[int, int] = {}
        if coeffs:
            for e, c in coeffs.items():
                e, c = int(e), int(c)
                if e < 0:
                    raise ValueError(f"exponent must be non-negative, got {e}")
                if c:
                    self._coeffs[e] = self._coeffs.get(e, 0) + c
            self._coeffs = {e: c for e, c in self._coeffs.items() if c}

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "TPolynomial":
        return cls({exponent: coefficient})

    def coefficient(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._coeffs.items())

    def __add__(self, other: "TPolynomial") -> "TPolynomial":
        merged = dict(self._coeffs)
        for e, c in other._coeffs.items():
            merged[e] = merged.get(e, 0) + c
        return TPolynomial(merged)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TPolynomial) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def __repr__(self) -> str:
        return f"TPolynomial({dict(self.items())!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for e, c in self.items():
            if e == 0:
                terms.append(str(c))
            else:
                t = "t" if e == 1 else f"t^{e}"
                terms.append(t if c == 1 else f"{c}*{t}")
        return " + ".join(terms)

    def to_json_dict(self) -> dict[str, int]:
        return {str(e): c for e, c in self.items()}

    @classmethod
    def from_json_dict(cls, data: Mapping[str, int]) -> "TPolynomial":
        return cls({int(e): int(c) for e, c in data.items()})


def charge_table(
    k: int, weight: Sequence[int], formulation: str = "morse"
) -> dict[Partition, TPolynomial]:
    """Shape-grouped generating polynomials sum_T t^(k-charge) over all
    k-tableaux of the given weight."""
    _check_formulation(formulation)
    table: dict[Partition, TPolynomial] = {}
    for tab in enumerate_k_tableaux(k, weight):
        mono = TPolynomial.monomial(k_charge(tab, formulation))
        table[tab.shape] = table.get(tab.shape, TPolynomial()) + mono
    return dict(sorted(table.items(), key=lambda kv: partition_sort_key(kv[0])))


def _tableau_weight(rows: Sequence[Sequence[int]]) -> list[int]:
    top = max((x for row in rows for x in row), default=0)
    counts = [0] * top
    for row in rows:
        for x in row:
            counts[x - 1] += 1
    return counts


def _standard_subword(word: list[int], top: int) -> list[int]:
    """Positions of one standard subword 1..top, scanning right-to-left
    cyclically from each chosen letter."""
    pos = len(word) - 1
    while word[pos] != 1:
        pos -= 1
    chosen = [pos]
    for target in range(2, top + 1):
        probe = (pos - 1) % len(word)
        while word[probe] != target:
            probe = (probe - 1) % len(word)
        chosen.append(probe)
        pos = probe
    return chosen


def _standard_word_charge(positions: Sequence[int]) -> int:
    """Charge of a standard word given the position of each letter 1..m:
    the running index rises when the next letter sits to the right."""
    total, current = 0, 0
    for prev, cur in zip(positions, positions[1:]):
        if cur > prev:
            current += 1
        total += current
    return total


def classical_charge(rows: Sequence[Sequence[int]]) -> int:
    """Charge of a classical semistandard tableau (rows bottom-first).

    The reading word takes rows top to bottom, each left to right; it is
    split into standard subwords whose charges are summed.
    """
    counts = _tableau_weight(rows)
    for a, b in zip(counts, counts[1:]):
        if a < b:
            raise ValueError(f"weight {counts} is not a partition")
    word = [x for row in reversed(list(rows)) for x in row]
    total = 0
    while word:
        chosen = _standard_subword(word, max(word))
        total += _standard_word_charge(chosen)
        keep = set(chosen)
        word = [x for i, x in enumerate(word) if i not in keep]
    return total


def classical_cocharge(rows: Sequence[Sequence[int]]) -> int:
    """n(weight) minus the charge; non-negative for tableau words."""
    weight = Partition(_tableau_weight(rows))
    return n_stat(weight) - classical_charge(rows)


def enumerate_ssyt(
    shape: Partition, weight: Sequence[int]
) -> list[tuple[tuple[int, ...], ...]]:
    """All classical semistandard fillings of shape with the exact letter
    multiplicities given by weight (rows bottom-first)."""
    weight = tuple(int(a) for a in weight)
    if sum(weight) != shape.size():
        return []
    remaining = list(weight)
    grid = [[0] * part for part in shape]
    cells = list(shape.cells())
    found: list[tuple[tuple[int, ...], ...]] = []

    def fill(pos: int) -> None:
        if pos == len(cells):
            found.append(tuple(tuple(row) for row in grid))
            return
        i, j = cells[pos]
        lo = grid[i - 1][j - 2] if j > 1 else 1
        lo = max(lo, (grid[i - 2][j - 1] if i > 1 else 0) + 1)
        for x in range(lo, len(weight) + 1):
            if remaining[x - 1] == 0:
                continue
            remaining[x - 1] -= 1
            grid[i - 1][j - 1] = x
            fill(pos + 1)
            grid[i - 1][j - 1] = 0
            remaining[x - 1] += 1

    fill(0)
    return found


def kostka_foulkes_table(weight: Sequence[int]) -> dict[Partition, TPolynomial]:
    """Charge generating polynomials over classical semistandard tableaux,
    keyed by shape; shapes with no tableaux are omitted."""
    weight = tuple(int(a) for a in weight)
    table: dict[Partition, TPolynomial] = {}
    for shape in partitions(sum(weight)):
        poly = TPolynomial()
        for rows in enumerate_ssyt(shape, weight):
            poly = poly + TPolynomial.monomial(classical_charge(rows))
        if poly:
            table[shape] = poly
    return dict(sorted(table.items(), key=lambda kv: partition_sort_key(kv[0])))
