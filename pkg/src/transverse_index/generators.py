"""Ready-made setups for the worked examples: projective space under the
full-rank torus, the two-sphere as a quotient of SU(2), and the sphere
operator with its reversed south pole.
"""
from __future__ import annotations

from typing import Optional, Sequence

from .model import (
    InvalidTau,
    OperatorSetup,
    fixed_point,
    normalize_orientation,
    slope,
)
from .engine import build_form_datum


def default_cpn_tau(n: int):
    """Doubling slopes 1, 2, 4, ...: strictly increasing and collision-free."""
    return slope(2**q for q in range(n + 1))


def gen_cpn(n: int, tau: Optional[Sequence] = None, kind: str = "deRham") -> OperatorSetup:
    """Projective n-space with the coordinatewise torus action of rank n+1.

    The point [e_l] carries tangent weights e_q - e_l (q != l); planes with
    q < l come out reversed, so orientation signs alternate (-1)^(l+1).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    tau_vec = default_cpn_tau(n) if tau is None else slope(tau)
    if len(tau_vec) != n + 1:
        raise InvalidTau(f"tau must have length {n + 1}, got {len(tau_vec)}")
    if any(a >= b for a, b in zip(tau_vec, tau_vec[1:])):
        raise InvalidTau(f"tau must be strictly increasing, got {tau_vec}")
    m = n + 1
    points = []
    for l in range(1, m + 1):
        weights = []
        for q in range(1, m + 1):
            if q == l:
                continue
            k = [0] * m
            k[q - 1] = 1
            k[l - 1] -= 1
            weights.append(tuple(k))
        raw = fixed_point(f"e{l}", weights, [])
        norm = normalize_orientation(raw, tau_vec)
        points.append(
            build_form_datum(norm.name, norm.tangent_weights, kind, norm.orientation_sign)
        )
    return OperatorSetup(m=m, tau=tau_vec, points=tuple(points), operator_kind=kind)


def gen_sphere_operator() -> OperatorSetup:
    """The rank-2 bundle operator on the two-sphere, elliptic off the equator.

    The circle acts by double-speed rotation; both poles carry the tangent
    weight 2.  The south pole's chart reverses both the surface and the
    circle parameter, and the latter is recorded as group_sign = -1.
    """
    north = fixed_point(
        "NP",
        [(2,)],
        [((-1,), 1, (1,)), ((1,), -1, (-1,))],
        group_sign=1,
    )
    south = fixed_point(
        "SP",
        [(2,)],
        [((1,), 1, (-1,)), ((-1,), -1, (1,))],
        group_sign=-1,
    )
    return OperatorSetup(
        m=1, tau=slope([1]), points=(north, south), operator_kind="generic"
    )


def gen_su2_mod_t(kind: str = "deRham") -> OperatorSetup:
    """The two-sphere as SU(2) mod its torus, with the residual circle action.

    The action rotates at double speed; the second fixed point appears with
    the opposite tangent weight and is brought to positive frequency by the
    normalization, which flips its orientation sign.
    """
    tau_vec = slope([1])
    points = []
    for name, raw_weight in (("1,0", (2,)), ("0,1", (-2,))):
        raw = fixed_point(name, [raw_weight], [])
        norm = normalize_orientation(raw, tau_vec)
        points.append(
            build_form_datum(norm.name, norm.tangent_weights, kind, norm.orientation_sign)
        )
    return OperatorSetup(m=1, tau=tau_vec, points=tuple(points), operator_kind=kind)
