"""Greedy heuristics: fill the knapsack along a lexicographic item order.

Two orders are supported. The level-major order (best level first,
lighter first within a level) always yields an efficient solution. The
weight-major order (lighter first, better level within a weight) yields
one of maximum cardinality, and it is guaranteed efficient only when it
fills the capacity exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .model import (
    Instance,
    RankVector,
    Subset,
    rank_cardinality_vector,
    validate_instance,
)

__all__ = ["Guarantee", "GreedyResult", "greedy_r", "greedy_w", "r_lex_order", "w_lex_order"]


class Guarantee(enum.Enum):
    """Efficiency guarantee attached to a greedy solution."""

    EFFICIENT = "Efficient"
    EFFICIENT_BECAUSE_FULL = "EfficientBecauseFull"
    NO_GUARANTEE = "NoGuarantee"


@dataclass(frozen=True)
class GreedyResult:
    subset: Subset
    vector: RankVector
    weight: int
    guarantee: Guarantee


def r_lex_order(inst: Instance) -> tuple[int, ...]:
    """Item positions sorted by level desc, then weight asc, then id asc."""
    items = inst.items
    return tuple(
        sorted(range(len(items)), key=lambda p: (-items[p].level, items[p].weight, items[p].id))
    )


def w_lex_order(inst: Instance) -> tuple[int, ...]:
    """Item positions sorted by weight asc, then level desc, then id asc."""
    items = inst.items
    return tuple(
        sorted(range(len(items)), key=lambda p: (items[p].weight, -items[p].level, items[p].id))
    )


def _fill(inst: Instance, order: tuple[int, ...]) -> tuple[Subset, int]:
    remaining = inst.capacity
    chosen = []
    for pos in order:
        item = inst.items[pos]
        if item.weight <= remaining:
            chosen.append(item.id)
            remaining -= item.weight
    return frozenset(chosen), inst.capacity - remaining


def greedy_r(inst: Instance) -> GreedyResult:
    """Greedy fill in level-major order; the result is always efficient."""
    validate_instance(inst)
    subset, weight = _fill(inst, r_lex_order(inst))
    return GreedyResult(
        subset=subset,
        vector=rank_cardinality_vector(subset, inst),
        weight=weight,
        guarantee=Guarantee.EFFICIENT,
    )


def greedy_w(inst: Instance) -> GreedyResult:
    """Greedy fill in weight-major order; efficient when it fills W exactly."""
    validate_instance(inst)
    subset, weight = _fill(inst, w_lex_order(inst))
    guarantee = (
        Guarantee.EFFICIENT_BECAUSE_FULL
        if weight == inst.capacity
        else Guarantee.NO_GUARANTEE
    )
    return GreedyResult(
        subset=subset,
        vector=rank_cardinality_vector(subset, inst),
        weight=weight,
        guarantee=guarantee,
    )
