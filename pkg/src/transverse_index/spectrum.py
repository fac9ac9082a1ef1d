"""Model-operator spectra: eigenvalue/multiplicity tables up to a cutoff.

An eigensolution is a triple (m, d, j): integer exponents m (any sign),
oscillator levels d >= 0, and a fiber line j, subject to the weight
equation  sum m_h k_h = a_j + eta*b.  Its eigenvalue is

    lambda = 2 * sum_l kappa_l * c_l,    c_l = |m_l| + m_l + 2 d_l + 1 + eps_jl.

Multiplicity tables come in two modes.  ``numeric`` merges entries whose
eigenvalues are equal as rationals at the given slope vector.  ``generic``
(the default) merges entries exactly when their eigenvalues agree for
*every* valid slope vector, i.e. when the integer vectors u = sum c_l k_l
coincide; this is the faithful reading, since a rational slope can create
accidental collisions that a generic direction forbids.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .model import (
    FixedPoint,
    NegativeCutoff,
    NotNormalized,
    OperatorSetup,
    Slope,
    apply_group_sign,
    normalize_setup,
)
from .lattice import _int_dot, scaled_slope, solve_in_box

MODES = ("generic", "numeric")


@dataclass(frozen=True)
class EigenSolution:
    point: str
    line_index: int
    m: tuple[int, ...]
    d: tuple[int, ...]
    coeff: tuple[int, ...]
    lam: Fraction


@dataclass(frozen=True)
class SpectrumTable:
    """Sorted (eigenvalue, multiplicity) rows; total multiplicity counts triples."""

    entries: tuple[tuple[Fraction, int], ...]
    mode: str = "generic"

    def as_dict(self) -> dict[Fraction, int]:
        """Eigenvalue -> multiplicity, merging rows with equal rational value."""
        out: dict[Fraction, int] = {}
        for lam, mult in self.entries:
            out[lam] = out.get(lam, 0) + mult
        return out

    def total_multiplicity(self) -> int:
        return sum(mult for _, mult in self.entries)

    def multiplicity_of(self, lam) -> int:
        lam = Fraction(lam)
        return sum(mult for value, mult in self.entries if value == lam)


def _slope_scale(tau: Slope) -> int:
    return lcm(*(t.denominator for t in tau)) if tau else 1


def _point_solutions(point, character, tau, cutoff):
    """Yield (EigenSolution, u) pairs with lambda <= cutoff (inclusive).

    u = sum c_l k_l is the eigenvalue's exact dependence on the slope
    (lambda = 2 u . tau), used as the generic-mode grouping key.
    """
    cutoff = Fraction(cutoff)
    if cutoff < 0:
        raise NegativeCutoff(f"cutoff must be >= 0, got {cutoff}")
    tau_scaled = scaled_slope(tau)
    scale = _slope_scale(tau)
    cut = cutoff * scale
    freqs = [_int_dot(k, tau_scaled) for k in point.tangent_weights]
    if any(f <= 0 for f in freqs):
        raise NotNormalized(f"{point.name}: normalize before taking spectra")
    m_rank = len(tau)
    n = point.n
    b = apply_group_sign(point, character)
    # a positive exponent m_l adds 4*kappa_l*m_l to lambda, so it is capped;
    # the scalar form of the weight equation then bounds m_l from below
    ups = [int(cut // (4 * f)) for f in freqs]
    cap = sum(u * f for u, f in zip(ups, freqs))
    for j, line in enumerate(point.lines):
        target = tuple(a + c for a, c in zip(line.a, b))
        total = _int_dot(target, tau_scaled)
        lows = tuple(
            -(-(total - (cap - u * f)) // f) for u, f in zip(ups, freqs)
        )
        for m in solve_in_box(point.tangent_weights, target, lows, tuple(ups)):
            base = 2 * sum(
                f * (abs(mi) + mi + 1 + e)
                for f, mi, e in zip(freqs, m, line.epsilon)
            )
            if base > cut:
                continue
            for d in _level_vectors(freqs, cut - base, n):
                coeff = tuple(
                    abs(mi) + mi + 2 * di + 1 + e
                    for mi, di, e in zip(m, d, line.epsilon)
                )
                lam_scaled = base + 4 * sum(f * di for f, di in zip(freqs, d))
                u = [0] * m_rank
                for c, k in zip(coeff, point.tangent_weights):
                    for p in range(m_rank):
                        u[p] += c * k[p]
                sol = EigenSolution(
                    point=point.name,
                    line_index=j,
                    m=m,
                    d=d,
                    coeff=coeff,
                    lam=Fraction(lam_scaled, scale),
                )
                yield sol, tuple(u)


def _level_vectors(freqs, budget, n):
    """All d >= 0 with 4 * sum freqs[l] * d_l <= budget."""
    if n == 0:
        yield ()
        return
    f = 4 * freqs[0]
    top = int(budget // f)
    for d0 in range(top + 1):
        yield from (
            (d0,) + rest for rest in _level_vectors(freqs[1:], budget - d0 * f, n - 1)
        )


def point_eigensolutions(
    point: FixedPoint,
    character: Sequence[int],
    tau: Slope,
    cutoff,
) -> list[EigenSolution]:
    """Every (m, d, j) with lambda <= cutoff, cutoff inclusive."""
    return [sol for sol, _ in _point_solutions(point, character, tau, cutoff)]


def _group(pairs, mode) -> tuple[tuple[Fraction, int], ...]:
    groups: dict = {}
    for sol, u in pairs:
        key = sol.lam if mode == "numeric" else u
        lam, count = groups.get(key, (sol.lam, 0))
        groups[key] = (lam, count + 1)
    if mode == "numeric":
        rows = sorted(groups.values())
    else:
        rows = [lam_count for _, lam_count in sorted(groups.items(), key=lambda kv: (kv[1][0], kv[0]))]
    return tuple(rows)


def point_spectrum(
    point: FixedPoint,
    character: Sequence[int],
    tau: Slope,
    cutoff,
    mode: str = "generic",
) -> SpectrumTable:
    """Eigenvalue table of the model operator at one point, lambda <= cutoff."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    entries = _group(_point_solutions(point, character, tau, cutoff), mode)
    return SpectrumTable(entries=entries, mode=mode)


def total_spectrum(
    setup: OperatorSetup,
    character: Sequence[int],
    cutoff,
    mode: str = "generic",
) -> SpectrumTable:
    """Union over all points (multiplicities add), sorted and truncated at cutoff."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    normalized = normalize_setup(setup)
    pairs = []
    for pt in normalized.points:
        pairs.extend(_point_solutions(pt, character, normalized.tau, cutoff))
    return SpectrumTable(entries=_group(pairs, mode), mode=mode)
