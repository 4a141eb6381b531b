"""Randomized search for properly coloured or rainbow copies.

The sampler draws a uniform random injection of the target graph into K_n
and repeatedly repairs it: while some pair of graph edges violates the
colour constraint, the images of the vertices spanning the (canonically
smallest) violating pair are resampled by swapping them with uniformly
random positions of the injection extended to a full permutation of the
K_n vertices.  Swap resampling keeps the injection uniform outside the
resampled support; the loop is the constructive counterpart of the
existence statements certified by the lll module.

Violations are tracked incrementally, keyed by the colour classes of the
image edges, so one resample costs time proportional to the degrees of the
touched vertices rather than to the number of edge pairs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .colouring import EdgeColouring
from .errors import DomainError
from .graph import Graph

__all__ = [
    "Embedding",
    "FindResult",
    "random_injection",
    "is_valid_embedding",
    "violated_events",
    "find_copy",
]


@dataclass(frozen=True)
class Embedding:
    """Injective placement of graph vertices into K_n (image_of[v] is the
    image of vertex v).  mode says which validity notion applies."""

    image_of: tuple[int, ...]
    mode: str | None = None

    def __post_init__(self) -> None:
        if len(set(self.image_of)) != len(self.image_of):
            raise DomainError("embedding images are not injective")

    def to_json(self) -> dict:
        return {"image_of": list(self.image_of), "mode": self.mode}


def random_injection(g_size: int, n: int, seed: int) -> Embedding:
    """Uniform random injection of g_size vertices into K_n, deterministic
    given the seed.  Validity is not yet guaranteed."""
    if g_size > n:
        raise DomainError(f"cannot inject {g_size} vertices into K_{n}")
    if g_size < 0:
        raise DomainError(f"g_size must be nonnegative, got {g_size}")
    rng = random.Random(seed)
    return Embedding(tuple(rng.sample(range(n), g_size)))


def is_valid_embedding(
    embedding: Embedding, g: Graph, colouring: EdgeColouring, mode: str | None = None
) -> bool:
    """Independent validity check, via colour sets rather than pair scans.

    proper: at every graph vertex the incident image edges have pairwise
    different colours.  rainbow: all image edges have pairwise different
    colours.
    """
    mode = mode or embedding.mode
    if mode not in ("proper", "rainbow"):
        raise DomainError(f"unknown mode {mode!r}")
    img = embedding.image_of
    if len(img) != g.n_vertices:
        raise DomainError("embedding size does not match the graph")
    colour_by_edge = colouring.colour_by_edge

    def image_colour(u: int, v: int) -> int:
        a, b = img[u], img[v]
        return colour_by_edge[(a, b) if a < b else (b, a)]

    if mode == "rainbow":
        seen: set[int] = set()
        for u, v in g.edges:
            c = image_colour(u, v)
            if c in seen:
                return False
            seen.add(c)
        return True
    for v in range(g.n_vertices):
        at_v: set[int] = set()
        for u in g.adjacency[v]:
            c = image_colour(u, v)
            if c in at_v:
                return False
            at_v.add(c)
    return True


def violated_events(
    embedding: Embedding, g: Graph, colouring: EdgeColouring, mode: str
) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """All violating graph-edge pairs of an embedding, in canonical order.

    proper mode scans adjacent edge pairs only (cherries); rainbow mode
    scans all edge pairs.  A pair violates when its two image edges share
    a colour.
    """
    if mode not in ("proper", "rainbow"):
        raise DomainError(f"unknown mode {mode!r}")
    img = embedding.image_of
    colour_by_edge = colouring.colour_by_edge
    edges = g.sorted_edges()
    colours = []
    for u, v in edges:
        a, b = img[u], img[v]
        colours.append(colour_by_edge[(a, b) if a < b else (b, a)])
    out = []
    for i in range(len(edges)):
        e = edges[i]
        for j in range(i + 1, len(edges)):
            f = edges[j]
            if mode == "proper" and not (set(e) & set(f)):
                continue
            if colours[i] == colours[j]:
                out.append((e, f))
    return out


@dataclass(frozen=True)
class FindResult:
    """Outcome of one find_copy run."""

    embedding: Embedding | None
    success: bool
    resamples: int
    final_violations: int

    def to_json(self) -> dict:
        return {
            "success": self.success,
            "embedding": self.embedding.to_json() if self.embedding else None,
            "resamples": self.resamples,
            "final_violations": self.final_violations,
        }


class _ViolationIndex:
    """Incremental per-colour-class bookkeeping of violating edge pairs."""

    def __init__(self, mode: str):
        self.mode = mode
        self.classes: dict = {}
        self.bad: set = set()

    def keys_of(self, edge: tuple[int, int], colour: int):
        if self.mode == "rainbow":
            return (colour,)
        u, v = edge
        return ((u, colour), (v, colour))

    def add(self, edge: tuple[int, int], colour: int) -> None:
        for key in self.keys_of(edge, colour):
            members = self.classes.setdefault(key, set())
            members.add(edge)
            if len(members) >= 2:
                self.bad.add(key)

    def remove(self, edge: tuple[int, int], colour: int) -> None:
        for key in self.keys_of(edge, colour):
            members = self.classes[key]
            members.remove(edge)
            if len(members) < 2:
                self.bad.discard(key)
            if not members:
                del self.classes[key]

    def smallest_pair(self):
        best = None
        for key in self.bad:
            members = sorted(self.classes[key])
            candidate = (members[0], members[1])
            if best is None or candidate < best:
                best = candidate
        return best

    def all_pairs(self):
        pairs = set()
        for key in self.bad:
            members = sorted(self.classes[key])
            for i in range(len(members)):
                for j in range(i + 1, len(members)):
                    pairs.add((members[i], members[j]))
        return sorted(pairs)

    def pair_count(self) -> int:
        return sum(
            len(self.classes[key]) * (len(self.classes[key]) - 1) // 2 for key in self.bad
        )


def find_copy(
    g: Graph,
    colouring: EdgeColouring,
    mode: str,
    *,
    seed: int,
    max_resamples: int | None = None,
    pair_selection: str = "smallest",
) -> FindResult:
    """Search for a valid embedding by swap resampling.

    Draws the seed's random injection and loops: with no violating pair the
    embedding is re-verified independently and returned; otherwise the
    selected violating pair's 3-4 graph vertices each have their image
    swapped with a uniformly random position of the injection padded to a
    full permutation of the K_n vertices.  Each loop iteration counts as
    one resample; the run fails once max_resamples iterations have been
    spent (default 1000 * |E|^2).  Deterministic given the seed.
    """
    if mode not in ("proper", "rainbow"):
        raise DomainError(f"unknown mode {mode!r}")
    if pair_selection not in ("smallest", "random"):
        raise DomainError(f"unknown pair selection {pair_selection!r}")
    g_size, n = g.n_vertices, colouring.n
    if g_size > n:
        raise DomainError(f"cannot embed {g_size} vertices into K_{n}")
    if max_resamples is None:
        max_resamples = 1000 * len(g.edges) ** 2

    rng = random.Random(seed)
    prefix = rng.sample(range(n), g_size)
    img = prefix + sorted(set(range(n)) - set(prefix))
    colour_by_edge = colouring.colour_by_edge
    adjacency = g.adjacency

    def image_colour(edge: tuple[int, int]) -> int:
        a, b = img[edge[0]], img[edge[1]]
        return colour_by_edge[(a, b) if a < b else (b, a)]

    index = _ViolationIndex(mode)
    for edge in g.edges:
        index.add(edge, image_colour(edge))

    def resample_vertex(v: int) -> None:
        # graph vertices occupy the first g_size positions of img
        j = rng.randrange(n)
        touched = set()
        for spot in (v, j):
            if spot < g_size:
                for u in adjacency[spot]:
                    touched.add((spot, u) if spot < u else (u, spot))
        for edge in touched:
            index.remove(edge, image_colour(edge))
        img[v], img[j] = img[j], img[v]
        for edge in touched:
            index.add(edge, image_colour(edge))

    resamples = 0
    while True:
        if not index.bad:
            embedding = Embedding(tuple(img[:g_size]), mode)
            if not is_valid_embedding(embedding, g, colouring, mode):
                raise RuntimeError("internal error: bookkeeping and validity disagree")
            return FindResult(embedding, True, resamples, 0)
        if resamples >= max_resamples:
            return FindResult(None, False, resamples, index.pair_count())
        if pair_selection == "smallest":
            pair = index.smallest_pair()
        else:
            pairs = index.all_pairs()
            pair = pairs[rng.randrange(len(pairs))]
        for v in sorted(set(pair[0]) | set(pair[1])):
            resample_vertex(v)
        resamples += 1
