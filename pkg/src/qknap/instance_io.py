"""Text formats and deterministic instance generation.

Instance files are UTF-8 text with ``#`` comments and blank lines
ignored:

    qknap 1
    levels <k>
    capacity <W>
    items <n>
    <id> <weight> <level>        (n lines, items in canonical order)

Frontier output is one line per label plus a ``#``-prefixed stats
block. Random instances come from a splitmix64 stream so that the same
parameters produce byte-identical files everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .dp import FrontierResult
from .model import Instance, Item, RankVector, validate_instance

__all__ = [
    "GeneratorParams",
    "ParseError",
    "SplitMix64",
    "format_vector",
    "generate_instance",
    "parse_instance",
    "serialize_frontier",
    "serialize_instance",
]

_MASK64 = (1 << 64) - 1


class ParseError(ValueError):
    """Syntax or structure error in an instance file, with a line number."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class SplitMix64:
    """The splitmix64 generator; all arithmetic modulo 2**64."""

    def __init__(self, seed: int) -> None:
        if not 0 <= seed <= _MASK64:
            raise ValueError(f"seed must fit in 64 bits, got {seed}")
        self._state = seed

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return (z ^ (z >> 31)) & _MASK64

    def uniform(self, m: int) -> int:
        """Uniform integer in 1..m by rejection below the top multiple of m."""
        if m < 1:
            raise ValueError(f"m must be >= 1, got {m}")
        limit = (1 << 64) - ((1 << 64) % m)
        while True:
            z = self.next_u64()
            if z < limit:
                return z % m + 1


@dataclass(frozen=True)
class GeneratorParams:
    """Parameters for deterministic instance generation.

    Exactly one of ``capacity`` (fixed W) or ``ratio`` (W = ceil of
    ratio times the total weight) must be given.
    """

    n: int
    k: int
    weight_max: int
    seed: int
    capacity: int | None = None
    ratio: Fraction | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.weight_max < 1:
            raise ValueError(f"weight_max must be >= 1, got {self.weight_max}")
        if not 0 <= self.seed <= _MASK64:
            raise ValueError(f"seed must fit in 64 bits, got {self.seed}")
        if (self.capacity is None) == (self.ratio is None):
            raise ValueError("exactly one of capacity or ratio must be set")
        if self.capacity is not None and self.capacity < 0:
            raise ValueError(f"capacity must be >= 0, got {self.capacity}")
        if self.ratio is not None and not 0 < self.ratio <= 1:
            raise ValueError(f"ratio must be in (0, 1], got {self.ratio}")


def generate_instance(p: GeneratorParams) -> Instance:
    """Instance determined by the params: ids 1..n, weights then levels drawn."""
    rng = SplitMix64(p.seed)
    weights = [rng.uniform(p.weight_max) for _ in range(p.n)]
    levels = [rng.uniform(p.k) for _ in range(p.n)]
    if p.capacity is not None:
        cap = p.capacity
    else:
        cap = ceil(p.ratio * sum(weights))
    items = tuple(
        Item(id=i + 1, weight=weights[i], level=levels[i]) for i in range(p.n)
    )
    return validate_instance(Instance(k=p.k, capacity=cap, items=items))


def parse_instance(text: str) -> Instance:
    """Parse the instance format, validating all invariants."""
    fields: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            fields.append((lineno, body.split()))
    if not fields:
        raise ParseError(1, "empty file; expected 'qknap 1' header")

    def take(idx: int, keyword: str) -> tuple[int, list[str]]:
        if idx >= len(fields):
            last = fields[-1][0] if fields else 1
            raise ParseError(last, f"unexpected end of file; expected '{keyword}'")
        lineno, toks = fields[idx]
        if toks[0] != keyword:
            raise ParseError(lineno, f"expected '{keyword}', found '{toks[0]}'")
        if len(toks) != 2:
            raise ParseError(lineno, f"'{keyword}' takes exactly one value")
        return lineno, toks

    def int_value(lineno: int, toks: list[str]) -> int:
        try:
            return int(toks[1])
        except ValueError:
            raise ParseError(lineno, f"'{toks[0]}' value must be an integer, found '{toks[1]}'")

    lineno, toks = take(0, "qknap")
    if int_value(lineno, toks) != 1:
        raise ParseError(lineno, f"unsupported format version '{toks[1]}'")
    lineno, toks = take(1, "levels")
    k = int_value(lineno, toks)
    lineno, toks = take(2, "capacity")
    capacity = int_value(lineno, toks)
    count_line, toks = take(3, "items")
    n = int_value(count_line, toks)

    item_fields = fields[4:]
    if len(item_fields) != n:
        raise ParseError(
            item_fields[n][0] if len(item_fields) > n else fields[-1][0],
            f"item count mismatch: header says {n}, found {len(item_fields)} item lines",
        )
    items = []
    for lineno, toks in item_fields:
        if len(toks) != 3:
            raise ParseError(lineno, f"item line needs 'id weight level', found {len(toks)} fields")
        try:
            ident, weight, level = (int(t) for t in toks)
        except ValueError:
            raise ParseError(lineno, f"item line fields must be integers: '{' '.join(toks)}'")
        items.append(Item(id=ident, weight=weight, level=level))
    return validate_instance(Instance(k=k, capacity=capacity, items=tuple(items)))


def serialize_instance(inst: Instance) -> str:
    """Canonical text form: no comments, items in input order, trailing newline."""
    lines = [
        "qknap 1",
        f"levels {inst.k}",
        f"capacity {inst.capacity}",
        f"items {len(inst.items)}",
    ]
    lines.extend(f"{it.id} {it.weight} {it.level}" for it in inst.items)
    return "\n".join(lines) + "\n"


def format_vector(g: RankVector) -> str:
    return "(" + ",".join(str(c) for c in g) + ")"


def _format_items(ids: tuple[int, ...]) -> str:
    return "[" + ",".join(str(i) for i in ids) + "]"


def serialize_frontier(result: FrontierResult) -> str:
    """One line per label in canonical order, then the '#' stats block."""
    lines = [
        f"vector={format_vector(lab.vector)} weight={lab.weight} items={_format_items(lab.items)}"
        for lab in result.labels
    ]
    s = result.stats
    lines += [
        f"# labels={len(result.labels)}",
        f"# cells={s.cells}",
        f"# max_cell={s.max_cell}",
        f"# comparisons={s.comparisons}",
        f"# wall_time={s.wall_time:.6f}",
    ]
    return "\n".join(lines) + "\n"
