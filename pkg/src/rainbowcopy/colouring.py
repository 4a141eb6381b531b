"""Edge colourings of the complete graph K_n.

Two boundedness measures matter: the *global* bound (largest number of
edges sharing one colour anywhere in K_n) and the *local* bound (largest
number of equally coloured edges meeting at a single vertex).  Generators
for both regimes are provided; the locally bounded one merges matchings of
a round-robin 1-factorization, which makes the local bound tight by
construction instead of by rejection.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import DomainError, FormatError

__all__ = [
    "EdgeColouring",
    "Boundedness",
    "boundedness",
    "gen_k_bounded",
    "gen_locally_k_bounded",
    "load_colouring",
    "save_colouring",
    "constant_colouring",
    "distinct_colouring",
    "all_edges",
]


def all_edges(n: int) -> Iterator[tuple[int, int]]:
    """Edges of K_n in lexicographic order."""
    for u in range(n):
        for v in range(u + 1, n):
            yield (u, v)


@dataclass(frozen=True)
class EdgeColouring:
    """Total colour assignment on the edges of K_n.

    Keys of colour_by_edge are (u, v) with u < v; values are nonnegative
    colour identifiers.  Totality over all C(n, 2) edges is enforced.
    """

    n: int
    colour_by_edge: dict[tuple[int, int], int]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"n must be positive, got {self.n}")
        expected = self.n * (self.n - 1) // 2
        if len(self.colour_by_edge) != expected:
            raise FormatError(
                f"colouring has {len(self.colour_by_edge)} edges, K_{self.n} has {expected}"
            )
        for (u, v), c in self.colour_by_edge.items():
            if not (0 <= u < v < self.n):
                raise FormatError(f"bad edge key ({u}, {v}) for n={self.n}")
            if c < 0:
                raise FormatError(f"negative colour {c} on edge ({u}, {v})")

    def colour(self, u: int, v: int) -> int:
        if u == v:
            raise DomainError(f"no loop edge ({u}, {v}) in K_{self.n}")
        key = (u, v) if u < v else (v, u)
        try:
            return self.colour_by_edge[key]
        except KeyError:
            raise DomainError(f"edge {key} outside K_{self.n}") from None

    def colours_used(self) -> set[int]:
        return set(self.colour_by_edge.values())


class Boundedness(NamedTuple):
    global_bound: int
    local_bound: int


def boundedness(colouring: EdgeColouring) -> Boundedness:
    """Global and local boundedness measures of a colouring."""
    global_counts: dict[int, int] = {}
    local_counts: dict[tuple[int, int], int] = {}
    for (u, v), c in colouring.colour_by_edge.items():
        global_counts[c] = global_counts.get(c, 0) + 1
        local_counts[(u, c)] = local_counts.get((u, c), 0) + 1
        local_counts[(v, c)] = local_counts.get((v, c), 0) + 1
    return Boundedness(
        global_bound=max(global_counts.values(), default=0),
        local_bound=max(local_counts.values(), default=0),
    )


def gen_k_bounded(n: int, k: int, seed: int) -> EdgeColouring:
    """Random colouring in which no colour is used more than k times.

    Shuffles the edge list and assigns colour i//k to the i-th edge, so
    exactly ceil(C(n,2)/k) colours are used.
    """
    if n < 2 or k < 1:
        raise DomainError(f"need n >= 2 and k >= 1, got n={n}, k={k}")
    edges = list(all_edges(n))
    rng = random.Random(seed)
    rng.shuffle(edges)
    return EdgeColouring(n, {e: i // k for i, e in enumerate(edges)})


def _round_robin_classes(n: int) -> list[list[tuple[int, int]]]:
    """Matching classes of the round-robin schedule on K_n.

    Even n: n-1 perfect matchings (circle method, one fixed vertex).
    Odd n: n near-perfect matchings, vertex r idle in class r.
    """
    classes: list[list[tuple[int, int]]] = []
    if n % 2 == 0:
        m = n - 1
        for r in range(m):
            cls = [(min(n - 1, r), max(n - 1, r))]
            for i in range(1, m // 2 + 1):
                a, b = (r + i) % m, (r - i) % m
                cls.append((min(a, b), max(a, b)))
            classes.append(cls)
    else:
        for r in range(n):
            cls = []
            for i in range(1, (n - 1) // 2 + 1):
                a, b = (r + i) % n, (r - i) % n
                cls.append((min(a, b), max(a, b)))
            classes.append(cls)
    return classes


def gen_locally_k_bounded(n: int, k: int, seed: int) -> EdgeColouring:
    """Random colouring with at most k equally coloured edges per vertex.

    Builds the round-robin proper edge colouring of K_n and merges randomly
    grouped batches of k matching classes into single colours.  Each class
    meets every vertex at most once, so the local bound is at most k.
    """
    if n < 2 or k < 1:
        raise DomainError(f"need n >= 2 and k >= 1, got n={n}, k={k}")
    classes = _round_robin_classes(n)
    order = list(range(len(classes)))
    rng = random.Random(seed)
    rng.shuffle(order)
    mapping: dict[tuple[int, int], int] = {}
    for pos, class_idx in enumerate(order):
        colour = pos // k
        for e in classes[class_idx]:
            mapping[e] = colour
    return EdgeColouring(n, mapping)


def constant_colouring(n: int, colour: int = 0) -> EdgeColouring:
    """Monochromatic colouring of K_n."""
    return EdgeColouring(n, {e: colour for e in all_edges(n)})


def distinct_colouring(n: int) -> EdgeColouring:
    """All edges receive pairwise different colours."""
    return EdgeColouring(n, {e: i for i, e in enumerate(all_edges(n))})


def save_colouring(colouring: EdgeColouring) -> str:
    """Serialise to the text format accepted by load_colouring."""
    lines = [f"n {colouring.n}"]
    for (u, v) in sorted(colouring.colour_by_edge):
        lines.append(f"{u} {v} {colouring.colour_by_edge[(u, v)]}")
    return "\n".join(lines) + "\n"


def load_colouring(text: str) -> EdgeColouring:
    """Parse a colouring document.

    Format: header "n <N>", then one "<u> <v> <c>" line per edge of K_n.
    Every edge must appear exactly once.  '#' lines are comments.
    """
    n: int | None = None
    mapping: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise FormatError(f"line {lineno}: expected header 'n <N>', got {line!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise FormatError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if n < 1:
                raise FormatError(f"line {lineno}: vertex count must be positive")
            continue
        if len(parts) != 3:
            raise FormatError(f"line {lineno}: expected '<u> <v> <c>', got {line!r}")
        try:
            u, v, c = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer token in {line!r}") from None
        if u == v:
            raise FormatError(f"line {lineno}: loop edge {u} {v}")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: endpoint out of range in {line!r}")
        key = (min(u, v), max(u, v))
        if key in mapping:
            raise FormatError(f"line {lineno}: duplicate edge {u} {v}")
        if c < 0:
            raise FormatError(f"line {lineno}: negative colour {c}")
        mapping[key] = c
    if n is None:
        raise FormatError("empty document: missing 'n <N>' header")
    expected = n * (n - 1) // 2
    if len(mapping) != expected:
        missing = [e for e in all_edges(n) if e not in mapping]
        raise FormatError(f"colouring incomplete: {len(missing)} missing edges, e.g. {missing[:3]}")
    return EdgeColouring(n, mapping)
