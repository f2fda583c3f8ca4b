"""Traffic parameter vector used by every model and simulator in the package."""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import InvalidParameterError, SaturationError

# exp(lambda * R) overflows well before this; anything denser than
# LAMBDA_R_MAX vehicles per radio range is far beyond physical traffic.
LAMBDA_R_MAX = 700.0

METERS_PER_MILE = 1609.344
MPS_PER_MPH = 0.44704


@dataclass(frozen=True)
class TrafficParams:
    """Traffic statistics for one road segment.

    Attributes:
        lam: spatial vehicle density in vehicles per meter (> 0).
        range_r: radio range in meters (> 0).
        v_min, v_max: speed interval bounds in m/s, 0 < v_min <= v_max.
        hop_delay: per-hop forwarding delay in seconds (> 0).
        segment_length: segment length in meters (> 0).
        opposite_lam: optional density of the opposite direction; None
            means both directions share ``lam``.
    """

    lam: float
    range_r: float = 250.0
    v_min: float = 8.9
    v_max: float = 22.4
    hop_delay: float = 0.002
    segment_length: float = 2000.0
    opposite_lam: float | None = None

    def __post_init__(self) -> None:
        for name in ("lam", "range_r", "hop_delay", "segment_length"):
            value = getattr(self, name)
            if not value > 0.0:
                raise InvalidParameterError(f"{name} must be > 0, got {value!r}")
        if not 0.0 < self.v_min <= self.v_max:
            raise InvalidParameterError(
                f"need 0 < v_min <= v_max, got v_min={self.v_min!r} v_max={self.v_max!r}"
            )
        if self.lam * self.range_r > LAMBDA_R_MAX:
            raise SaturationError(
                f"lam * range_r = {self.lam * self.range_r:.3g} exceeds "
                f"{LAMBDA_R_MAX:g}; exp terms would overflow"
            )
        if self.opposite_lam is not None:
            if not self.opposite_lam > 0.0:
                raise InvalidParameterError(
                    f"opposite_lam must be > 0, got {self.opposite_lam!r}"
                )
            if self.opposite_lam * self.range_r > LAMBDA_R_MAX:
                raise SaturationError(
                    f"opposite_lam * range_r = "
                    f"{self.opposite_lam * self.range_r:.3g} exceeds {LAMBDA_R_MAX:g}"
                )

    @property
    def v_eff(self) -> float:
        """Mean of the uniform speed interval, the effective carry speed."""
        return 0.5 * (self.v_min + self.v_max)

    @property
    def lam_opposite(self) -> float:
        """Density of the opposite direction (defaults to ``lam``)."""
        return self.lam if self.opposite_lam is None else self.opposite_lam

    def with_length(self, segment_length: float) -> "TrafficParams":
        return replace(self, segment_length=segment_length)


def spatial_density_from_arrival_rate(rate_per_second: float, v_eff: float) -> float:
    """Convert a temporal arrival rate (vehicles/s past a point) to vehicles/m."""
    if not rate_per_second > 0.0:
        raise InvalidParameterError(
            f"arrival rate must be > 0, got {rate_per_second!r}"
        )
    if not v_eff > 0.0:
        raise InvalidParameterError(f"v_eff must be > 0, got {v_eff!r}")
    return rate_per_second / v_eff
