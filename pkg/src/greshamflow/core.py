"""Core domain types: face-value schedules, ratios, demand and friction.

A country prices every circulating currency in abstract domestic account
units.  The resulting vector, one entry per currency, is its face-value
schedule.  Currencies are indexed from 0 (the dearest) to n-1 (the
cheapest); the cheapest acts as the numeraire and is pinned at exactly 1.
All user-facing output labels currencies 1..n instead, matching the
customary numbering; the shift happens only at the serialization edge.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError

# ============================================================================
# Validation
# ============================================================================


def validate_schedule(values: Sequence[float] | "PriceSchedule") -> tuple[str, ...]:
    """Check a raw value sequence against the schedule invariants.

    Returns an empty tuple when the sequence is a valid schedule, otherwise
    one message per violated invariant.  Total: any sequence of reals is
    accepted without raising, including non-finite entries.
    """
    if isinstance(values, PriceSchedule):
        values = values.values
    seq = [float(v) for v in values]
    violations: list[str] = []
    if len(seq) < 2:
        violations.append("schedule must list at least two currencies")
    if any(not math.isfinite(v) or v <= 0.0 for v in seq):
        violations.append("every value must be positive and finite")
    if any(a <= b for a, b in zip(seq, seq[1:])):
        violations.append("values must be strictly decreasing")
    if seq and seq[-1] != 1.0:
        violations.append("last value must equal 1 exactly")
    return tuple(violations)


# ============================================================================
# Domain types
# ============================================================================


@dataclass(frozen=True)
class PriceSchedule:
    """One country's face values for all currencies, dearest first.

    Invariants: every value positive and finite, strictly decreasing,
    and the final (numeraire) value exactly 1.
    """

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        violations = validate_schedule(self.values)
        if violations:
            raise DomainError("invalid schedule: " + "; ".join(violations))

    @classmethod
    def normalized(cls, values: Iterable[float]) -> "PriceSchedule":
        """Build a schedule by dividing through by the final value.

        Accepts any positive, strictly decreasing sequence and pins the
        numeraire at exactly 1 rather than merely lowest.
        """
        seq = [float(v) for v in values]
        if not seq or any(not math.isfinite(v) or v <= 0.0 for v in seq):
            raise DomainError("invalid schedule: every value must be positive and finite")
        floor = seq[-1]
        scaled = [v / floor for v in seq[:-1]]
        return cls(tuple(scaled) + (1.0,))

    @property
    def currency_count(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class RatioPair:
    """A currency pair priced twice: by the reference market and in-country.

    market_ratio is R, the pair's price in the reference market;
    country_ratio is R_c, the same pair at the country's own face values.
    """

    market_ratio: float
    country_ratio: float

    def __post_init__(self) -> None:
        for name, v in (("market_ratio", self.market_ratio), ("country_ratio", self.country_ratio)):
            if not math.isfinite(v) or v <= 0.0:
                raise DomainError(f"{name} must be positive and finite")


@dataclass(frozen=True)
class DemandSpec:
    """Quantity demanded and demand elasticity for an arbitrage opportunity.

    Arbitrage demand is ordinary demand seen by a reseller, so the
    elasticity is negative (and typically large in magnitude).
    """

    quantity: float
    elasticity: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.quantity) or self.quantity <= 0.0:
            raise DomainError("quantity must be positive and finite")
        if not math.isfinite(self.elasticity) or self.elasticity >= 0.0:
            raise DomainError("elasticity must be negative")


@dataclass(frozen=True)
class FrictionSpec:
    """Dead-band transaction friction as a fraction of face value.

    Flows whose overvaluation magnitude does not exceed the threshold are
    suppressed outright; everything past the band is untouched.
    """

    threshold: float = 0.0

    def __post_init__(self) -> None:
        if not (0.0 <= self.threshold < 1.0) or not math.isfinite(self.threshold):
            raise DomainError("friction threshold must satisfy 0 <= threshold < 1")


#: Friction applied when the caller passes none: a zero-width dead band.
NO_FRICTION = FrictionSpec(0.0)

# ============================================================================
# Operations
# ============================================================================


def country_ratio(schedule: PriceSchedule, i: int, j: int) -> float:
    """Price of currency i in units of currency j at one country's values.

    Reciprocal in its arguments: country_ratio(s, i, j) * country_ratio(s, j, i) = 1.
    """
    if i == j:
        raise DomainError("degenerate pair: a currency has no ratio against itself")
    n = schedule.currency_count
    if not (0 <= i < n and 0 <= j < n):
        raise DomainError(f"currency index out of range for a {n}-currency schedule")
    return schedule.values[i] / schedule.values[j]


def overvaluation(pair: RatioPair) -> float:
    """Fractional overvaluation of the numerator currency in-country.

    Returns 1 - R/R_c: positive when the country's face values rate the
    numerator currency above the reference market, zero at parity.
    """
    return 1.0 - pair.market_ratio / pair.country_ratio


def currency_label(index: int) -> str:
    """User-facing 1-based label for a 0-based currency index."""
    if index < 0:
        raise DomainError("currency index must be non-negative")
    return str(index + 1)


# ============================================================================
# World serialization
# ============================================================================


def world_to_obj(schedules: Sequence[PriceSchedule]) -> dict:
    """JSON-ready form of a set of country schedules."""
    return {"countries": [list(s.values) for s in schedules]}


def world_from_obj(obj: object) -> tuple[PriceSchedule, ...]:
    """Parse the {"countries": [[...], ...]} world shape.

    Every listed schedule must satisfy the schedule invariants; violations
    are reported per country.
    """
    if not isinstance(obj, dict) or "countries" not in obj:
        raise DomainError('world object must be {"countries": [[...], ...]}')
    raw = obj["countries"]
    if not isinstance(raw, list) or not raw:
        raise DomainError('"countries" must be a non-empty list of schedules')
    schedules = []
    for idx, entry in enumerate(raw):
        if not isinstance(entry, list):
            raise DomainError(f"country {idx}: schedule must be a list of numbers")
        violations = validate_schedule(entry)
        if violations:
            raise DomainError(f"country {idx}: " + "; ".join(violations))
        schedules.append(PriceSchedule(tuple(entry)))
    counts = {s.currency_count for s in schedules}
    if len(counts) > 1:
        raise DomainError("all countries must price the same number of currencies")
    return tuple(schedules)


def load_world(path: str) -> tuple[PriceSchedule, ...]:
    """Read a world JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DomainError(f"world file is not valid JSON: {exc}") from exc
    return world_from_obj(obj)


def dump_world(schedules: Sequence[PriceSchedule], path: str) -> None:
    """Write a world JSON file."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(world_to_obj(schedules), fh, indent=2, sort_keys=True)
        fh.write("\n")
