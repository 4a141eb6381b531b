"""Canonical bad events over random injections, and their clique structure.

The probability space is the uniform choice of an injection from the target
graph's vertices into the vertices of K_n.  A bad event pins the images of
two ordered graph edges; it is *intersecting* when the two edges share a
vertex (they form a cherry) and *disjoint* otherwise.  The event list for a
concrete colouring keeps exactly those pinnings whose two image edges share
a colour.

Certificates never materialise the full dependency graph at scale.  Instead
the closed neighbourhood of every event in the intersection graph is covered
by a fixed number of cliques with analytic size bounds; the clique-cover
constructors below record those bounds, and verify_clique_bounds checks them
against exhaustive enumeration on small instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

from .colouring import EdgeColouring, boundedness
from .errors import DomainError
from .graph import Graph, cherry_stats, falling_factorial

__all__ = [
    "INTERSECTING",
    "DISJOINT",
    "CanonicalEvent",
    "DependencyGraph",
    "CliqueClass",
    "NeighbourhoodProfile",
    "G_SIDE_INT",
    "G_SIDE_DIS",
    "KN_SIDE_INT",
    "KN_SIDE_DIS",
    "enumerate_bad_events",
    "event_probability",
    "conflict",
    "intersection_graph",
    "clique_cover_proper",
    "proper_profile_from_rates",
    "clique_cover_rainbow",
    "verify_clique_bounds",
]

INTERSECTING = "intersecting"
DISJOINT = "disjoint"

G_SIDE_INT = "G-side-intersecting"
G_SIDE_DIS = "G-side-disjoint"
KN_SIDE_INT = "Kn-side-intersecting"
KN_SIDE_DIS = "Kn-side-disjoint"


@dataclass(frozen=True)
class CanonicalEvent:
    """Event pinning edge e_pair to a_pair and f_pair to b_pair.

    e_pair and f_pair are ordered graph edges with e1 < e2, f1 < f2 and
    e_pair lexicographically before f_pair; a_pair and b_pair are the
    (ordered) image pairs in K_n.  The induced partial map must be a
    well-defined injection, and the type tag must match the support sizes.
    """

    e_pair: tuple[int, int]
    f_pair: tuple[int, int]
    a_pair: tuple[int, int]
    b_pair: tuple[int, int]
    type_tag: str

    def __post_init__(self) -> None:
        e, f = self.e_pair, self.f_pair
        if not (e[0] < e[1] and f[0] < f[1]):
            raise DomainError(f"edge pairs must be ascending: {e}, {f}")
        if not e < f:
            raise DomainError(f"e_pair must precede f_pair lexicographically: {e}, {f}")
        pmap = self.partial_map()
        if len(set(pmap.values())) != len(pmap):
            raise DomainError(f"images are not injective: {pmap}")
        g_support = len(set(e) | set(f))
        img_support = len(set(self.a_pair) | set(self.b_pair))
        expected = INTERSECTING if g_support == 3 else DISJOINT
        if g_support not in (3, 4) or img_support != g_support or self.type_tag != expected:
            raise DomainError(
                f"type tag {self.type_tag!r} inconsistent with supports "
                f"({g_support} graph vertices, {img_support} images)"
            )

    def partial_map(self) -> dict[int, int]:
        """The induced partial injection (graph vertex -> K_n vertex).

        Raises DomainError if a shared graph vertex is sent to two
        different images.
        """
        pairs = zip(self.e_pair + self.f_pair, self.a_pair + self.b_pair)
        pmap: dict[int, int] = {}
        for x, y in pairs:
            if pmap.setdefault(x, y) != y:
                raise DomainError(f"vertex {x} mapped to both {pmap[x]} and {y}")
        return pmap

    @property
    def g_support(self) -> frozenset[int]:
        return frozenset(self.e_pair) | frozenset(self.f_pair)

    @property
    def image_support(self) -> frozenset[int]:
        return frozenset(self.a_pair) | frozenset(self.b_pair)


def enumerate_bad_events(
    g: Graph, colouring: EdgeColouring, mode: str
) -> list[CanonicalEvent]:
    """All bad events of the instance, in canonical order.

    proper mode: intersecting-type events whose image edges share a colour.
    rainbow mode: events of both types whose image edges share a colour.

    Order: (e_pair, f_pair) lexicographic, then (a_pair, b_pair)
    lexicographic.  Intended for small instances only.
    """
    if mode not in ("proper", "rainbow"):
        raise DomainError(f"unknown mode {mode!r}")
    n = colouring.n
    if g.n_vertices > n:
        raise DomainError(f"graph has {g.n_vertices} vertices but n = {n}")
    edges = g.sorted_edges()
    colour_of = colouring.colour_by_edge
    events: list[CanonicalEvent] = []
    for i, e in enumerate(edges):
        for f in edges[i + 1 :]:
            support = list(dict.fromkeys(e + f))
            tag = INTERSECTING if len(support) == 3 else DISJOINT
            if mode == "proper" and tag != INTERSECTING:
                continue
            # Iterating image tuples in lexicographic order of the support
            # (ordered by first appearance in e+f) also yields (a, b) pairs
            # in lexicographic order, since repeated positions are copies of
            # earlier ones.
            for images in permutations(range(n), len(support)):
                pos = dict(zip(support, images))
                a = (pos[e[0]], pos[e[1]])
                b = (pos[f[0]], pos[f[1]])
                ae = (a[0], a[1]) if a[0] < a[1] else (a[1], a[0])
                be = (b[0], b[1]) if b[0] < b[1] else (b[1], b[0])
                if colour_of[ae] == colour_of[be]:
                    events.append(CanonicalEvent(e, f, a, b, tag))
    return events


def event_probability(event: CanonicalEvent, n: int) -> Fraction:
    """Probability of the event under a uniform random injection into K_n.

    1/(n)_3 for intersecting type, 1/(n)_4 for disjoint type, independent
    of the size of the embedded graph.
    """
    if event.type_tag == INTERSECTING:
        if n < 3:
            raise DomainError(f"intersecting event needs n >= 3, got {n}")
        return Fraction(1, falling_factorial(n, 3))
    if n < 4:
        raise DomainError(f"disjoint event needs n >= 4, got {n}")
    return Fraction(1, falling_factorial(n, 4))


def conflict(x: CanonicalEvent, y: CanonicalEvent) -> bool:
    """True iff no injection extends both partial maps.

    The union of the two maps must remain a well-defined injective partial
    function; any disagreement on a shared vertex, or any collision of two
    distinct vertices on one image, is a conflict.
    """
    merged: dict[int, int] = dict(x.partial_map())
    for vertex, image in y.partial_map().items():
        if merged.setdefault(vertex, image) != image:
            return True
    images = list(merged.values())
    return len(set(images)) != len(images)


@dataclass(frozen=True)
class DependencyGraph:
    """Events plus a symmetric adjacency relation over their indices."""

    vertices: tuple
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.adjacency):
            raise DomainError("vertex and adjacency lengths differ")

    @classmethod
    def from_edges(
        cls, n_vertices: int, edges: Iterable[tuple[int, int]], vertices: Sequence | None = None
    ) -> DependencyGraph:
        adj: list[set[int]] = [set() for _ in range(n_vertices)]
        for i, j in edges:
            if i == j:
                raise DomainError(f"self-loop at {i}")
            adj[i].add(j)
            adj[j].add(i)
        verts = tuple(vertices) if vertices is not None else tuple(range(n_vertices))
        return cls(verts, tuple(frozenset(s) for s in adj))

    def __len__(self) -> int:
        return len(self.vertices)

    def neighbours(self, i: int) -> frozenset[int]:
        return self.adjacency[i]

    def closed_neighbourhood(self, i: int) -> frozenset[int]:
        return self.adjacency[i] | {i}


def intersection_graph(events: Sequence[CanonicalEvent]) -> DependencyGraph:
    """Graph joining events that share a graph vertex or an image vertex.

    This is a supergraph of the conflict relation, hence still a negative
    dependency graph for the events.
    """
    g_supports = [ev.g_support for ev in events]
    img_supports = [ev.image_support for ev in events]
    adj: list[set[int]] = [set() for _ in events]
    for i in range(len(events)):
        for j in range(i + 1, len(events)):
            if g_supports[i] & g_supports[j] or img_supports[i] & img_supports[j]:
                adj[i].add(j)
                adj[j].add(i)
    return DependencyGraph(tuple(events), tuple(frozenset(s) for s in adj))


@dataclass(frozen=True)
class CliqueClass:
    """count cliques, each of size at most size_bound, with a class tag."""

    count: int
    size_bound: Fraction
    class_tag: str


@dataclass(frozen=True)
class NeighbourhoodProfile:
    """Clique cover of an event's closed neighbourhood, by size bounds only.

    Tags follow the pattern "<side>-<type>": the side says whether the
    clique collects events sharing a graph vertex or an image vertex, the
    type says which event type its bound counts.  Entries with equal count
    and side describe one mixed clique per event vertex, split by type.
    """

    entries: tuple[CliqueClass, ...]

    def bounds_by_tag(self) -> dict[str, Fraction]:
        return {e.class_tag: e.size_bound for e in self.entries}


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise DomainError(f"cannot interpret {x!r} as an exact rational")


def proper_profile_from_rates(q, p, n: int, k) -> NeighbourhoodProfile:
    """Clique cover for an intersecting event in the proper setting.

    Three cliques of size at most q * (n)_2 * k collect the events sharing
    one of the three cherry vertices in the graph; three cliques of size at
    most 3p * (n)_2 * k collect those sharing one of the three image
    vertices.  q is the per-vertex cherry maximum; p is total cherries
    divided by n; k is the local colour bound.
    """
    q = _as_fraction(q)
    p = _as_fraction(p)
    k = _as_fraction(k)
    if q < 0 or p < 0 or k < 0 or n < 2:
        raise DomainError(f"need q, p, k >= 0 and n >= 2, got q={q}, p={p}, n={n}, k={k}")
    n2 = Fraction(falling_factorial(n, 2))
    return NeighbourhoodProfile(
        entries=(
            CliqueClass(3, q * n2 * k, G_SIDE_INT),
            CliqueClass(3, 3 * p * n2 * k, KN_SIDE_INT),
        )
    )


def clique_cover_proper(stats, n: int, k) -> NeighbourhoodProfile:
    """Profile from cherry statistics: q is the per-vertex maximum and
    p = total_cherries / n."""
    return proper_profile_from_rates(
        stats.max_cherries_per_vertex, Fraction(stats.total_cherries, n), n, k
    )


def clique_cover_rainbow(delta: int, n: int, k, type_tag: str) -> NeighbourhoodProfile:
    """Clique cover for an event in the rainbow setting.

    Per event vertex (3 if intersecting, 4 if disjoint) there is one mixed
    clique on the graph side and one on the image side.  The four bounds
    split each mixed clique by the type of the neighbouring events:

        graph side:  (3/2) * delta^2 * n^2 * k   (intersecting neighbours)
                     delta^2 * n^3 * k           (disjoint neighbours)
        image side:  delta^2 * n^2 * k           (intersecting neighbours)
                     delta^2 * n^3 * k           (disjoint neighbours)
    """
    if type_tag not in (INTERSECTING, DISJOINT):
        raise DomainError(f"unknown type tag {type_tag!r}")
    if delta < 1:
        raise DomainError(f"need delta >= 1, got {delta}")
    k = _as_fraction(k)
    if k < 0:
        raise DomainError(f"need k >= 0, got {k}")
    vertices = 3 if type_tag == INTERSECTING else 4
    d2 = Fraction(delta * delta)
    g_int = Fraction(3, 2) * d2 * n * n * k
    g_dis = d2 * n * n * n * k
    kn_int = d2 * n * n * k
    kn_dis = d2 * n * n * n * k
    return NeighbourhoodProfile(
        entries=(
            CliqueClass(vertices, g_int, G_SIDE_INT),
            CliqueClass(vertices, g_dis, G_SIDE_DIS),
            CliqueClass(vertices, kn_int, KN_SIDE_INT),
            CliqueClass(vertices, kn_dis, KN_SIDE_DIS),
        )
    )


def verify_clique_bounds(g: Graph, colouring: EdgeColouring, mode: str) -> dict:
    """Exhaustively check the analytic clique bounds on a small instance.

    Enumerates all bad events, groups each event's neighbourhood into the
    per-vertex clique classes, asserts every class cardinality stays within
    its analytic bound, and double-checks that each class really is a clique
    of the intersection graph.  Returns a report with per-class maxima and
    slack; report["ok"] is False iff some bound is violated.
    """
    events = enumerate_bad_events(g, colouring, mode)
    n = colouring.n
    bounds_meta = boundedness(colouring)
    if mode == "proper":
        k = bounds_meta.local_bound
        stats = cherry_stats(g)
        profile = proper_profile_from_rates(
            stats.max_cherries_per_vertex, Fraction(stats.total_cherries, n), n, k
        )
        bounds = profile.bounds_by_tag()
    else:
        k = bounds_meta.global_bound
        delta = max(cherry_stats(g).max_degree, 1)
        bounds = clique_cover_rainbow(delta, n, k, INTERSECTING).bounds_by_tag()

    report: dict = {
        "mode": mode,
        "n": n,
        "k": k,
        "n_events": len(events),
        "classes": {},
        "violations": [],
        "cliques_are_cliques": True,
        "ok": True,
    }
    if not events:
        report["classes"] = {
            tag: {"bound": str(bound), "max_size": 0, "slack": str(bound)}
            for tag, bound in bounds.items()
        }
        return report

    dep = intersection_graph(events)

    # Index events by the graph vertices and image vertices they touch,
    # split by type.  Each index set is a clique: all members share the
    # indexing vertex.
    by_g_vertex: dict[tuple[int, str], set[int]] = {}
    by_img_vertex: dict[tuple[int, str], set[int]] = {}
    for idx, ev in enumerate(events):
        for x in ev.g_support:
            by_g_vertex.setdefault((x, ev.type_tag), set()).add(idx)
        for u in ev.image_support:
            by_img_vertex.setdefault((u, ev.type_tag), set()).add(idx)

    def check_class(tag: str, size: int, where: str) -> None:
        entry = report["classes"].setdefault(
            tag, {"bound": str(bounds[tag]), "max_size": 0, "slack": None}
        )
        entry["max_size"] = max(entry["max_size"], size)
        if size > bounds[tag]:
            report["violations"].append({"class": tag, "size": size, "at": where})
            report["ok"] = False

    for idx, ev in enumerate(events):
        for x in ev.g_support:
            for type_tag, g_tag in ((INTERSECTING, G_SIDE_INT), (DISJOINT, G_SIDE_DIS)):
                if mode == "proper" and type_tag == DISJOINT:
                    continue
                members = by_g_vertex.get((x, type_tag), set()) | {idx}
                check_class(g_tag, len(members), f"event {idx}, graph vertex {x}")
        for u in ev.image_support:
            for type_tag, kn_tag in ((INTERSECTING, KN_SIDE_INT), (DISJOINT, KN_SIDE_DIS)):
                if mode == "proper" and type_tag == DISJOINT:
                    continue
                members = by_img_vertex.get((u, type_tag), set())
                check_class(kn_tag, len(members), f"event {idx}, image vertex {u}")

    # Cliqueness: members of each index set must be pairwise adjacent in
    # the intersection graph (they share the indexing vertex, so this also
    # cross-checks the adjacency construction).
    for table in (by_g_vertex, by_img_vertex):
        for key, members in table.items():
            ordered = sorted(members)
            for ai in range(len(ordered)):
                for bi in range(ai + 1, len(ordered)):
                    if ordered[bi] not in dep.adjacency[ordered[ai]]:
                        report["cliques_are_cliques"] = False
                        report["ok"] = False
                        report["violations"].append(
                            {"class": "cliqueness", "at": f"index {key}"}
                        )

    for tag, entry in report["classes"].items():
        entry["slack"] = str(_as_fraction(entry["bound"]) - entry["max_size"])
    return report
