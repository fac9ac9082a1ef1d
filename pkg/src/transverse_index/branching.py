"""Compact-group index multiplicities as rational combinations of torus ones.

A branching table holds the finitely many coefficients beta_b of one
irreducible representation; pairing it with a torus-index function gives the
group multiplicity.  Torus indices are passed as a total function returning
``None`` for a sector whose multiplicity is not finite, and the pairing
refuses to sum over such a sector: the zero operator on a homogeneous space
is the standard example where that guard fires.

Only the SU(2) table is built in; other groups enter through tables loaded
from file (see the serializer).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .model import InfiniteMultiplicity, OperatorSetup, RankMismatch, Weight, weight
from .engine import transverse_index

TorusIndex = Callable[[Weight], Optional[int]]


@dataclass(frozen=True)
class BranchingTable:
    coefficients: dict[Weight, Fraction] = field(default_factory=dict)
    label: str = ""

    def support(self) -> list[Weight]:
        return sorted(b for b, beta in self.coefficients.items() if beta != 0)


def branching_table(entries: Iterable[tuple[Sequence[int], Fraction]], label: str = "") -> BranchingTable:
    """Build a table from (b, beta) records; coefficients at equal b add."""
    coeffs: dict[Weight, Fraction] = {}
    for b, beta in entries:
        key = weight(b)
        coeffs[key] = coeffs.get(key, Fraction(0)) + Fraction(beta)
    return BranchingTable(coefficients=coeffs, label=label)


def su2_beta(n: int) -> BranchingTable:
    """SU(2) branching coefficients for the (n+1)-dimensional irreducible.

    1/2 at b = n and -n, -1/2 at b = n+2 and -(n+2); for n = 0 the two
    halves at b = 0 collide and add to 1.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    half = Fraction(1, 2)
    return branching_table(
        [((n,), half), ((-n,), half), ((n + 2,), -half), ((-n - 2,), -half)],
        label=f"su2:{n}",
    )


def apply_branching(table: BranchingTable, torus_index: TorusIndex) -> Fraction:
    """sum of beta_b * torus_index(b) over the table's support.

    Raises InfiniteMultiplicity when a needed sector is flagged non-finite.
    """
    total = Fraction(0)
    for b in table.support():
        value = torus_index(b)
        if value is None:
            raise InfiniteMultiplicity(
                f"torus index at b={b} is not finite; "
                f"table {table.label!r} cannot be applied"
            )
        total += table.coefficients[b] * value
    return total


def su2_index(setup: OperatorSetup, n: int) -> Fraction:
    """Pair the SU(2) table with this setup's torus indices (rank must be 1)."""
    if setup.m != 1:
        raise RankMismatch(f"su2_index needs torus rank 1, setup has m={setup.m}")
    return apply_branching(
        su2_beta(n), lambda b: transverse_index(setup, b).value
    )
