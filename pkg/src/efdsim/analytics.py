"""Closed-form delay model for carry-and-forward traversal of one road segment.

Inter-vehicle spacing in each direction is exponential with the spatial
density lam, so co-directional vehicles group into clusters: maximal runs
whose successive gaps stay within the radio range R. A packet crosses a
segment as an alternating series of multi-hop forwarding inside clusters
and physical carry across the gaps between them; clusters moving the
opposite way can act as relay bridges that shrink or eliminate a carry.

This module evaluates the expectations of that process:

* connectivity of one gap:      Pr{X <= R} = 1 - exp(-lam R)
* mean within-cluster gap:      E[X | X <= R]   (truncated exponential)
* cluster size / span / hops:   geometric size law and Wald's identity
* bridge case probabilities and the expected carry length per gap
* expected traversal delay of a segment of length L

All functions are pure; everything is computed from a TrafficParams value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.integrate import quad

from .errors import InvalidParameterError
from .params import TrafficParams

# Absolute tolerance for the adaptive quadrature used on the truncated
# exponential expectations.
QUAD_ABS_TOL = 1e-9

# Below this value of lam*R the closed form for the truncated mean loses
# digits to cancellation; a short series in x = lam*R is exact to O(x^3).
_SMALL_X = 1e-3


@dataclass(frozen=True)
class ClusterExpectations:
    """Expected cluster geometry and the in-cluster forwarding delay."""

    p_connect: float
    e_gap: float
    e_vehicles: float
    e_length: float
    h_min: float
    h_max: float
    e_hops: float
    e_cluster_delay: float


@dataclass(frozen=True)
class BridgeModel:
    """Bridge case probabilities and the expected carry length per gap.

    p1: an opposite cluster reaches both sides of the gap (relay, no carry).
    p2: it reaches the far side only (wait for contact, carry (R - X)/2).
    p3: it reaches the near side only (handback, carry X/2).
    p_none: no opposite cluster reaches either side (pure carry of gap - R).
    """

    p1: float
    p2: float
    p3: float
    p_none: float
    e_carry: float
    e_wait_far: float
    e_wait_near: float
    e_carry_none: float


def prob_connected(params: TrafficParams) -> float:
    """Probability that one inter-vehicle gap does not exceed the radio range."""
    return -math.expm1(-params.lam * params.range_r)


def _truncated_gap_mean(lam: float, range_r: float) -> float:
    x = lam * range_r
    if x < _SMALL_X:
        # series of (1 - e^-x (x+1)) / (lam (1 - e^-x)) around x = 0
        return range_r * (0.5 - x / 12.0)
    u = -math.expm1(-x)
    return (u - x * (1.0 - u)) / (lam * u)


def expected_gap(params: TrafficParams) -> float:
    """Mean inter-vehicle distance inside a cluster, E[X | X <= R].

    The gap is exponential(lam) truncated to (0, R]; the mean is
    (1 - e^{-lam R}(lam R + 1)) / (lam (1 - e^{-lam R})), which lies in
    (0, R): R/2 in the sparse limit, 1/lam in the dense limit.
    """
    return _truncated_gap_mean(params.lam, params.range_r)


def expected_gap_quadrature(params: TrafficParams) -> float:
    """E[X | X <= R] by adaptive quadrature; an independent numeric route."""
    lam, r = params.lam, params.range_r
    norm = -math.expm1(-lam * r)
    value, _ = quad(
        lambda x: x * lam * math.exp(-lam * x), 0.0, r, epsabs=QUAD_ABS_TOL
    )
    return value / norm


def geometric_cluster_pmf(params: TrafficParams, v: int) -> float:
    """Probability that a cluster holds exactly v vehicles (v >= 1).

    A cluster ends at the first gap wider than R, so the size is geometric:
    (1 - p) p^{v-1} with p = prob_connected.
    """
    if v < 1:
        raise InvalidParameterError(f"cluster size must be >= 1, got {v!r}")
    p = prob_connected(params)
    return (1.0 - p) * p ** (v - 1)


def cluster_expectations(params: TrafficParams) -> ClusterExpectations:
    """Expected cluster size, span, hop count and in-cluster delay.

    e_vehicles = exp(lam R) (mean of the geometric size law), the span
    follows from Wald's identity as (e_vehicles - 1) * e_gap, and the hop
    count is the midpoint of the best case (every hop lands exactly at the
    range boundary, span / R) and the worst case (every vehicle relays,
    span / e_gap).
    """
    p = prob_connected(params)
    e_gap = expected_gap(params)
    e_vehicles = math.exp(params.lam * params.range_r)
    e_length = (e_vehicles - 1.0) * e_gap
    h_min = e_length / params.range_r
    h_max = e_length / e_gap
    e_hops = 0.5 * (h_min + h_max)
    return ClusterExpectations(
        p_connect=p,
        e_gap=e_gap,
        e_vehicles=e_vehicles,
        e_length=e_length,
        h_min=h_min,
        h_max=h_max,
        e_hops=e_hops,
        e_cluster_delay=e_hops * params.hop_delay,
    )


def bridge_model(params: TrafficParams) -> BridgeModel:
    """Bridge case probabilities and the expected carry length per gap.

    The two relay distances (near side of the gap to the opposite cluster,
    opposite cluster to the far side) are exponential with the opposite
    direction's density, thresholded at R, which yields the four cases
    p*p, (1-p)*p, p*(1-p) and (1-p)^2. Conditional carry lengths:

    * case 1: zero (the relay spans the gap).
    * case 2: (R - X)/2 with X truncated to (0, R]; evaluated by
      adaptive quadrature over the truncated exponential density.
    * case 3: X/2 with the same truncation, i.e. half the mean gap.
    * no bridge: the co-directional gap overshoot beyond R, mean 1/lam
      by memorylessness.
    """
    lam_f = params.lam
    lam_o = params.lam_opposite
    r = params.range_r
    p = -math.expm1(-lam_o * r)
    p1 = p * p
    p2 = (1.0 - p) * p
    p3 = p * (1.0 - p)
    p_none = (1.0 - p) * (1.0 - p)

    norm = -math.expm1(-lam_o * r)
    e_wait_far, _ = quad(
        lambda x: 0.5 * (r - x) * lam_o * math.exp(-lam_o * x) / norm,
        0.0,
        r,
        epsabs=QUAD_ABS_TOL,
    )
    e_wait_near = 0.5 * _truncated_gap_mean(lam_o, r)
    e_carry_none = 1.0 / lam_f
    e_carry = p2 * e_wait_far + p3 * e_wait_near + p_none * e_carry_none
    return BridgeModel(
        p1=p1,
        p2=p2,
        p3=p3,
        p_none=p_none,
        e_carry=e_carry,
        e_wait_far=e_wait_far,
        e_wait_near=e_wait_near,
        e_carry_none=e_carry_none,
    )


def _cycle(params: TrafficParams, bridged: bool) -> tuple[float, float]:
    """Road consumed and time spent by one expected connection+gap cycle."""
    ce = cluster_expectations(params)
    if bridged:
        carry = bridge_model(params).e_carry
    else:
        # one-directional baseline: every gap is crossed by carrying the
        # full overshoot beyond R, mean 1/lam
        carry = 1.0 / params.lam
    road = ce.e_length + params.range_r + carry
    time = ce.e_cluster_delay + carry / params.v_eff
    return road, time


def segment_delay(params: TrafficParams, length: float | None = None) -> float:
    """Expected traversal delay of a road segment, in seconds.

    Accumulates one expected cluster delay plus one expected carry delay
    per cycle, each cycle consuming e_length + R + e_carry meters of road
    (a disconnection gap spans at least one radio range, reduced to the
    carry length beyond first relay contact). The final cycle is charged
    pro rata for the road actually remaining, which makes the sparse limit
    approach length / v_eff, the pure-carry travel time.
    """
    return _delay_by_cycles(params, length, bridged=True)


def one_directional_delay(params: TrafficParams, length: float | None = None) -> float:
    """Expected traversal delay with no opposite-direction bridging.

    Baseline in which every disconnection is crossed by carrying the full
    gap overshoot at v_eff; always >= segment_delay for the same params.
    """
    return _delay_by_cycles(params, length, bridged=False)


def _delay_by_cycles(
    params: TrafficParams, length: float | None, bridged: bool
) -> float:
    remaining = params.segment_length if length is None else length
    if remaining <= 0.0:
        return 0.0
    cycle_road, cycle_time = _cycle(params, bridged)
    total = 0.0
    # cycle_road >= range_r > 0, so this terminates
    while remaining > 0.0:
        if remaining >= cycle_road:
            total += cycle_time
        else:
            total += cycle_time * (remaining / cycle_road)
        remaining -= cycle_road
    return total
