"""Local-lemma condition variants, thresholds, and certificate search.

Four condition families are checked, always against exact rationals where
the inputs are rational:

  symmetric          P(X) < 1/(e * (max dependency degree + 1))
  asymmetric         P(X_i) <= x_i * prod over neighbours (1 - x_j)
  cluster (exact)    P(X_i) <= mu_i / Z_i, where Z_i sums prod(mu_j) over
                     the independent subsets of the closed neighbourhood
  cluster (clique)   the product relaxations of the exact form: one weight
                     per clique of a cover of the closed neighbourhood,
                     either with a single mu or with one mu per event type

A certificate records the per-class probabilities, the parameters, the
smallest RHS/LHS ratio over all checked conditions (the margin), and the
verdict.  Equality counts as holding for the "<=" forms and as failing for
the strict symmetric form.

The mu search fixed here is a logarithmic grid scan over [1e-12, 1e3] per
coordinate followed by coordinate-wise refinement to relative step < 1e-4.
Scanning uses high-precision floats; the returned certificate is always
re-evaluated in exact rational arithmetic at the chosen parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import mpmath

from .errors import CapacityError, DomainError
from .events import (
    DISJOINT,
    INTERSECTING,
    DependencyGraph,
    NeighbourhoodProfile,
    clique_cover_rainbow,
    proper_profile_from_rates,
    _as_fraction,
)
from .graph import falling_factorial

__all__ = [
    "LLLCertificate",
    "ConditionCheck",
    "MuSearchConfig",
    "check_symmetric",
    "check_asymmetric",
    "independent_set_polynomial",
    "check_cluster_exact",
    "check_cluster_clique",
    "optimize_mu",
    "threshold",
    "verify_paper_inequalities",
    "paper_mu_proper",
    "paper_mu_rainbow",
    "THEOREMS",
]

# (1/3) * (5/6)^5, the admissible-k coefficient of the proper-copy threshold
PROPER_THRESHOLD_COEFF = Fraction(3125, 23328)

THEOREMS = ("thm2", "thm3", "thm5", "thm7", "cor4")


@dataclass(frozen=True)
class ConditionCheck:
    label: str
    lhs: Fraction | float
    rhs: Fraction | float
    satisfied: bool

    def margin(self) -> Fraction | float:
        if self.lhs == 0:
            return math.inf
        return self.rhs / self.lhs

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "lhs": float(self.lhs),
            "rhs": float(self.rhs),
            "satisfied": self.satisfied,
        }


@dataclass(frozen=True)
class LLLCertificate:
    """Outcome of one condition-variant check."""

    variant: str
    parameters: dict
    probabilities: dict
    margin: Fraction | float
    holds: bool
    conditions: tuple[ConditionCheck, ...] = field(default_factory=tuple)

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "fails"

    def to_json(self) -> dict:
        return {
            "variant": self.variant,
            "parameters": {k: str(v) for k, v in self.parameters.items()},
            "probabilities": {k: str(v) for k, v in self.probabilities.items()},
            "margin": float(self.margin),
            "margin_exact": str(self.margin) if isinstance(self.margin, Fraction) else None,
            "verdict": self.verdict,
            "conditions": [c.to_json() for c in self.conditions],
        }


def _min_margin(conditions: Sequence[ConditionCheck]) -> Fraction | float:
    margins = [c.margin() for c in conditions]
    finite = [m for m in margins if m != math.inf]
    return min(finite) if finite else math.inf


def check_symmetric(p_max: float, dep_degree: int) -> LLLCertificate:
    """Symmetric condition: p < 1/(e * (dep_degree + 1)), strict."""
    if not 0 <= p_max <= 1:
        raise DomainError(f"p_max must lie in [0, 1], got {p_max}")
    if dep_degree < 0:
        raise DomainError(f"dep_degree must be nonnegative, got {dep_degree}")
    bound = 1.0 / (math.e * (dep_degree + 1))
    cond = ConditionCheck("symmetric", p_max, bound, p_max < bound)
    return LLLCertificate(
        variant="symmetric-9i",
        parameters={"dep_degree": dep_degree},
        probabilities={"p_max": p_max},
        margin=cond.margin(),
        holds=cond.satisfied,
        conditions=(cond,),
    )


def _normalise_adjacency(adjacency) -> list[frozenset[int]]:
    if isinstance(adjacency, DependencyGraph):
        return list(adjacency.adjacency)
    return [frozenset(nbrs) for nbrs in adjacency]


def check_asymmetric(probabilities, adjacency, x_assignment) -> LLLCertificate:
    """Asymmetric condition: P(X_i) <= x_i * prod over neighbours (1 - x_j)."""
    adj = _normalise_adjacency(adjacency)
    probs = [_as_fraction(p) for p in probabilities]
    xs = [_as_fraction(x) for x in x_assignment]
    if len(probs) != len(adj) or len(xs) != len(adj):
        raise DomainError("probabilities, adjacency and x_assignment lengths differ")
    for x in xs:
        if not 0 < x < 1:
            raise DomainError(f"x values must lie strictly in (0, 1), got {x}")
    conditions = []
    for i, p in enumerate(probs):
        rhs = xs[i]
        for j in adj[i]:
            rhs *= 1 - xs[j]
        conditions.append(ConditionCheck(f"event {i}", p, rhs, p <= rhs))
    return LLLCertificate(
        variant="asymmetric-9ii",
        parameters={f"x_{i}": x for i, x in enumerate(xs)},
        probabilities={f"event {i}": p for i, p in enumerate(probs)},
        margin=_min_margin(conditions),
        holds=all(c.satisfied for c in conditions),
        conditions=tuple(conditions),
    )


def _mu_of(mu_assignment, index: int):
    if isinstance(mu_assignment, Mapping):
        return mu_assignment[index]
    if isinstance(mu_assignment, (list, tuple)):
        return mu_assignment[index]
    return mu_assignment


NEIGHBOURHOOD_CAP = 25


def independent_set_polynomial(dep: DependencyGraph, i: int, mu_assignment) -> Fraction:
    """Sum over independent subsets R of the closed neighbourhood of i of
    prod over j in R of mu_j.

    The empty set contributes 1; on an edgeless neighbourhood of size m with
    constant mu this is (1 + mu)^m.  Exact enumeration, guarded at 25
    neighbourhood vertices.
    """
    closed = sorted(dep.closed_neighbourhood(i))
    if len(closed) > NEIGHBOURHOOD_CAP:
        raise CapacityError(
            f"closed neighbourhood of {i} has {len(closed)} vertices (cap {NEIGHBOURHOOD_CAP})"
        )
    local_index = {v: t for t, v in enumerate(closed)}
    local_adj = [
        frozenset(local_index[w] for w in dep.neighbours(v) if w in local_index)
        for v in closed
    ]
    mu_local = [_as_fraction(_mu_of(mu_assignment, v)) for v in closed]
    cache: dict[frozenset[int], Fraction] = {}

    def total(active: frozenset[int]) -> Fraction:
        if not active:
            return Fraction(1)
        got = cache.get(active)
        if got is not None:
            return got
        v = min(active)
        rest = active - {v}
        value = total(rest) + mu_local[v] * total(rest - local_adj[v])
        cache[active] = value
        return value

    return total(frozenset(range(len(closed))))


def check_cluster_exact(probabilities, dep: DependencyGraph, mu_assignment) -> LLLCertificate:
    """Exact cluster condition: P(X_i) <= mu_i / Z_i for every event."""
    probs = [_as_fraction(p) for p in probabilities]
    if len(probs) != len(dep):
        raise DomainError("probabilities length differs from dependency graph size")
    conditions = []
    mus = {}
    for i, p in enumerate(probs):
        mu_i = _as_fraction(_mu_of(mu_assignment, i))
        if mu_i <= 0:
            raise DomainError(f"mu must be positive, got {mu_i} at {i}")
        mus[f"mu_{i}"] = mu_i
        z = independent_set_polynomial(dep, i, mu_assignment)
        rhs = mu_i / z
        conditions.append(ConditionCheck(f"event {i}", p, rhs, p <= rhs))
    return LLLCertificate(
        variant="cluster-exact-10",
        parameters=mus,
        probabilities={f"event {i}": p for i, p in enumerate(probs)},
        margin=_min_margin(conditions),
        holds=all(c.satisfied for c in conditions),
        conditions=tuple(conditions),
    )


def _single_probability(p_by_class) -> tuple[str, Fraction]:
    if isinstance(p_by_class, Mapping):
        if len(p_by_class) != 1:
            raise DomainError("single-mu form needs exactly one probability class")
        ((label, p),) = p_by_class.items()
        return label, _as_fraction(p)
    return "event", _as_fraction(p_by_class)


def _mixed_denominator_terms(profile: NeighbourhoodProfile) -> list[tuple[int, dict[str, Fraction]]]:
    """Group profile entries into mixed cliques: per side, one (count,
    {type: bound}) term.  Counts within a side must agree."""
    sides: dict[str, tuple[int, dict[str, Fraction]]] = {}
    for entry in profile.entries:
        side, _, type_part = entry.class_tag.rpartition("-")
        if type_part not in (INTERSECTING, DISJOINT) or not side:
            raise DomainError(
                f"two-type form needs '<side>-intersecting/disjoint' tags, got {entry.class_tag!r}"
            )
        count, bounds = sides.setdefault(side, (entry.count, {}))
        if count != entry.count:
            raise DomainError(f"entries of side {side!r} disagree on clique count")
        bounds[type_part] = entry.size_bound
    return list(sides.values())


def check_cluster_clique(p_by_class, clique_profile, mu) -> LLLCertificate:
    """Clique-cover relaxation of the exact cluster condition.

    Single-profile form (one mu):
        p <= mu / prod over cliques (1 + mu * size_bound)

    Two-type form (clique_profile is a mapping event-type -> profile and mu
    is a pair or mapping with mu per type): for each event type s,
        p_s <= mu_s / prod over mixed cliques (1 + sum_t mu_t * bound_t)
    """
    if isinstance(clique_profile, NeighbourhoodProfile):
        label, p = _single_probability(p_by_class)
        mu_val = _as_fraction(mu)
        if mu_val <= 0:
            raise DomainError(f"mu must be positive, got {mu_val}")
        denom = Fraction(1)
        for entry in clique_profile.entries:
            denom *= (1 + mu_val * entry.size_bound) ** entry.count
        rhs = mu_val / denom
        cond = ConditionCheck(label, p, rhs, p <= rhs)
        return LLLCertificate(
            variant="cluster-clique-3prime",
            parameters={"mu": mu_val},
            probabilities={label: p},
            margin=cond.margin(),
            holds=cond.satisfied,
            conditions=(cond,),
        )

    if not isinstance(clique_profile, Mapping):
        raise DomainError("clique_profile must be a profile or a mapping of profiles")
    if not isinstance(p_by_class, Mapping):
        raise DomainError("two-type form needs a mapping of probabilities")
    if isinstance(mu, Mapping):
        mu_by_type = {t: _as_fraction(v) for t, v in mu.items()}
    else:
        mu_int, mu_dis = mu
        mu_by_type = {INTERSECTING: _as_fraction(mu_int), DISJOINT: _as_fraction(mu_dis)}
    for v in mu_by_type.values():
        if v <= 0:
            raise DomainError(f"mu must be positive, got {v}")

    conditions = []
    probs = {}
    for event_type, profile in clique_profile.items():
        p = _as_fraction(p_by_class[event_type])
        probs[event_type] = p
        denom = Fraction(1)
        for count, bounds in _mixed_denominator_terms(profile):
            term = Fraction(1)
            for type_part, bound in bounds.items():
                term += mu_by_type[type_part] * bound
            denom *= term**count
        rhs = mu_by_type[event_type] / denom
        conditions.append(ConditionCheck(event_type, p, rhs, p <= rhs))
    return LLLCertificate(
        variant="cluster-two-type-4prime",
        parameters={f"mu_{t}": v for t, v in mu_by_type.items()},
        probabilities=probs,
        margin=_min_margin(conditions),
        holds=all(c.satisfied for c in conditions),
        conditions=tuple(conditions),
    )


@dataclass(frozen=True)
class MuSearchConfig:
    mu_lo: Fraction = Fraction(1, 10**12)
    mu_hi: Fraction = Fraction(1000)
    points_per_decade: int = 4
    refine_rel_tol: float = 1e-4
    precision_bits: int = 100


def _grid(config: MuSearchConfig) -> list[Fraction]:
    ratio = Fraction(10.0 ** (1.0 / config.points_per_decade))
    points = [config.mu_lo]
    while points[-1] * ratio <= config.mu_hi:
        points.append(points[-1] * ratio)
    if points[-1] < config.mu_hi:
        points.append(config.mu_hi)
    return points


def optimize_mu(p_by_class, clique_profile, config: MuSearchConfig | None = None):
    """Search mu parameters maximising the certificate margin.

    Logarithmic grid scan over [mu_lo, mu_hi] per coordinate, then
    coordinate-wise multiplicative refinement down to relative steps below
    refine_rel_tol.  The scan runs in high-precision floats; the winning
    point (and, for safety, the best grid point) are re-evaluated exactly,
    so the returned margin is never below the margin of any grid point.
    Deterministic; margin ties prefer the lexicographically smaller tuple.

    Returns (parameters, certificate); the certificate fails (margin < 1)
    when no feasible point exists.
    """
    config = config or MuSearchConfig()
    two_type = isinstance(clique_profile, Mapping)

    if two_type:
        type_order = [INTERSECTING, DISJOINT]
        probs = {t: _as_fraction(p_by_class[t]) for t in type_order}
        terms_by_type = {
            t: [(c, dict(b)) for c, b in _mixed_denominator_terms(clique_profile[t])]
            for t in type_order
        }
        dim = 2
    else:
        _, p_single = _single_probability(p_by_class)
        entries = clique_profile.entries
        dim = 1

    with mpmath.workprec(config.precision_bits):
        mpf = mpmath.mpf

        def to_mpf(x: Fraction):
            return mpf(x.numerator) / mpf(x.denominator)

        if two_type:
            probs_f = {t: to_mpf(probs[t]) for t in type_order}
            terms_f = {
                t: [(c, {tp: to_mpf(b) for tp, b in bounds.items()}) for c, bounds in terms]
                for t, terms in terms_by_type.items()
            }

            def margin_f(point: tuple[Fraction, ...]):
                mu_f = {type_order[idx]: to_mpf(point[idx]) for idx in range(2)}
                worst = None
                for t in type_order:
                    denom = mpf(1)
                    for count, bounds in terms_f[t]:
                        term = mpf(1)
                        for tp, b in bounds.items():
                            term += mu_f[tp] * b
                        denom *= term**count
                    if probs_f[t] == 0:
                        continue
                    ratio = mu_f[t] / denom / probs_f[t]
                    worst = ratio if worst is None else min(worst, ratio)
                return worst if worst is not None else mpf("inf")

        else:
            p_f = to_mpf(p_single)
            entries_f = [(e.count, to_mpf(e.size_bound)) for e in entries]

            def margin_f(point: tuple[Fraction, ...]):
                mu_val = to_mpf(point[0])
                denom = mpf(1)
                for count, bound in entries_f:
                    denom *= (1 + mu_val * bound) ** count
                if p_f == 0:
                    return mpf("inf")
                return mu_val / denom / p_f

        grid = _grid(config)
        if dim == 1:
            candidates = [(g,) for g in grid]
        else:
            candidates = [(a, b) for a in grid for b in grid]

        best_point = candidates[0]
        best_val = margin_f(best_point)
        for point in candidates[1:]:
            val = margin_f(point)
            if val > best_val:
                best_val, best_point = val, point

        grid_best = best_point
        current, current_val = best_point, best_val
        factor = Fraction(10.0 ** (1.0 / config.points_per_decade))
        evals = 0
        while float(factor) - 1.0 > config.refine_rel_tol and evals < 20000:
            moved = False
            for coord in range(dim):
                for candidate_value in (current[coord] * factor, current[coord] / factor):
                    if not config.mu_lo <= candidate_value <= config.mu_hi:
                        continue
                    point = tuple(
                        candidate_value if idx == coord else current[idx] for idx in range(dim)
                    )
                    evals += 1
                    val = margin_f(point)
                    if val > current_val:
                        current, current_val = point, val
                        moved = True
            if not moved:
                factor = Fraction(math.sqrt(float(factor)))

    def exact_certificate(point: tuple[Fraction, ...]) -> LLLCertificate:
        if two_type:
            return check_cluster_clique(probs, clique_profile, (point[0], point[1]))
        return check_cluster_clique(p_by_class, clique_profile, point[0])

    cert_refined = exact_certificate(current)
    cert_grid = exact_certificate(grid_best)
    if cert_grid.margin > cert_refined.margin or (
        cert_grid.margin == cert_refined.margin and grid_best < current
    ):
        winner_point, winner = grid_best, cert_grid
    else:
        winner_point, winner = current, cert_refined

    if two_type:
        params = {"mu_int": winner_point[0], "mu_dis": winner_point[1]}
    else:
        params = {"mu": winner_point[0]}
    return params, winner


def _resolve_qp(n: int, stats=None, q=None, p=None) -> tuple[Fraction, Fraction]:
    if stats is not None:
        return Fraction(stats.max_cherries_per_vertex), Fraction(stats.total_cherries, n)
    if q is None or p is None:
        raise DomainError("need cherry statistics or explicit q and p")
    return _as_fraction(q), _as_fraction(p)


def threshold(theorem: str, n: int, *, delta: int | None = None, stats=None, q=None, p=None) -> int:
    """Largest admissible integer colour bound k for a named threshold rule.

    thm2: largest k with 216*(3k + 2*delta)^7 * (delta + 1)^20 * k < n
          (strict; ascending integer search, capped at n)
    thm3: floor of (1/3)(5/6)^5 (n-2) / (q + 3p), locally bounded, proper
    thm5: floor(n / 64), bounded, rainbow cycles
    thm7: floor(n / (51 * delta^2)), bounded, rainbow
    cor4: floor((n - 2) / (22.4 * delta^2)), locally bounded, proper
    """
    if theorem not in THEOREMS:
        raise DomainError(f"unknown theorem {theorem!r}; expected one of {THEOREMS}")
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if theorem == "thm5":
        return n // 64
    if stats is not None and delta is None:
        delta = stats.max_degree
    if theorem in ("thm2", "thm7", "cor4"):
        if delta is None:
            raise DomainError(f"{theorem} needs a maximum degree")
        if theorem in ("thm7", "cor4") and delta < 1:
            raise DomainError(f"{theorem} needs delta > 0, got {delta}")
    if theorem == "thm2":
        d = delta if delta is not None else 0
        k = 0
        while k < n:
            nxt = k + 1
            if 216 * (3 * nxt + 2 * d) ** 7 * (d + 1) ** 20 * nxt < n:
                k = nxt
            else:
                break
        return k
    if theorem == "thm7":
        return n // (51 * delta * delta)
    if theorem == "cor4":
        return max(0, (5 * (n - 2)) // (112 * delta * delta))
    # thm3
    q_val, p_val = _resolve_qp(n, stats=stats, q=q, p=p)
    weight = q_val + 3 * p_val
    if weight <= 0:
        raise DomainError("threshold undefined for a graph without cherries (q + 3p = 0)")
    bound = PROPER_THRESHOLD_COEFF * (n - 2) / weight
    return max(0, math.floor(bound))


def paper_mu_proper(n: int) -> Fraction:
    """Reference weight (6/5)^6 / (n)_3 for the proper-copy certificate."""
    return Fraction(6, 5) ** 6 / falling_factorial(n, 3)


def paper_mu_rainbow(n: int) -> tuple[Fraction, Fraction]:
    """Reference weights ((7/(5n))^3, (7/(5n))^4) for the rainbow certificate."""
    base = Fraction(7, 5 * n)
    return base**3, base**4


def verify_paper_inequalities(setting: str, *, n: int, k, delta: int | None = None,
                              stats=None, q=None, p=None) -> dict:
    """Recompute the reference inequality chain behind a threshold, exactly.

    setting "thm3" (proper copies, locally bounded):
        with mu = (6/5)^6/(n)_3 and k within the thm3 bound, check
          k*mu <= (2/5) / ((n)_2 (q + 3p)),
          (1 + q (n)_2 k mu)^3 (1 + 3p (n)_2 k mu)^3 <= (6/5)^6,
          1/(n)_3 <= mu / product.

    setting "thm7" (rainbow copies, bounded):
        with mu_int = (7/(5n))^3, mu_dis = (7/(5n))^4 and k <= n/(51 delta^2),
        check the product factor against (50/51)(14/10) and the two
        boundary inequalities (51/(50n))^4 >= 1/(n)_4 (needs n >= 77) and
        (51/(50n))^3 >= 1/(n)_3.  The direct two-type certificate at the
        same weights is reported alongside the chain.

    Parameters outside the threshold hypothesis (k above the bound, bad
    delta) raise DomainError; the n >= 77 boundary itself is a reported
    step, so the report can witness exactly where small n fails.
    """
    k = _as_fraction(k)
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    steps: list[ConditionCheck] = []
    report: dict = {"setting": setting, "n": n, "k": k}

    if setting == "thm3":
        if n < 3:
            raise DomainError(f"thm3 chain needs n >= 3, got {n}")
        q_val, p_val = _resolve_qp(n, stats=stats, q=q, p=p)
        weight = q_val + 3 * p_val
        if weight <= 0:
            raise DomainError("thm3 chain undefined for q + 3p = 0")
        bound = PROPER_THRESHOLD_COEFF * (n - 2) / weight
        if k > bound:
            raise DomainError(f"k={k} exceeds the thm3 bound {bound}")
        mu = paper_mu_proper(n)
        n2 = falling_factorial(n, 2)
        n3 = falling_factorial(n, 3)
        steps.append(
            ConditionCheck("k*mu bound", k * mu, Fraction(2, 5) / (n2 * weight),
                           k * mu <= Fraction(2, 5) / (n2 * weight))
        )
        product = (1 + q_val * n2 * k * mu) ** 3 * (1 + 3 * p_val * n2 * k * mu) ** 3
        steps.append(
            ConditionCheck("product factor", product, Fraction(6, 5) ** 6,
                           product <= Fraction(6, 5) ** 6)
        )
        steps.append(
            ConditionCheck("certificate", Fraction(1, n3), mu / product,
                           Fraction(1, n3) <= mu / product)
        )
        profile = proper_profile_from_rates(q_val, p_val, n, k)
        direct = check_cluster_clique(Fraction(1, n3), profile, mu)
        report.update(
            {
                "mu": mu,
                "q": q_val,
                "p": p_val,
                "product_factor": float(product),
                "direct_certificate": direct.to_json(),
            }
        )

    elif setting == "thm7":
        if delta is None and stats is not None:
            delta = stats.max_degree
        if delta is None or delta < 1:
            raise DomainError(f"thm7 chain needs delta >= 1, got {delta}")
        if n < 4:
            raise DomainError(f"thm7 chain needs n >= 4, got {n}")
        bound = Fraction(n, 51 * delta * delta)
        if k > bound:
            raise DomainError(f"k={k} exceeds the thm7 bound {bound}")
        mu_int, mu_dis = paper_mu_rainbow(n)
        d2 = Fraction(delta * delta)
        g_int = Fraction(3, 2) * d2 * n * n * k
        g_dis = d2 * n**3 * k
        kn_int = d2 * n * n * k
        kn_dis = d2 * n**3 * k
        factor_g = 1 + g_int * mu_int + g_dis * mu_dis
        factor_kn = 1 + kn_int * mu_int + kn_dis * mu_dis
        product = factor_g * factor_kn
        cap = Fraction(50, 51) * Fraction(14, 10)
        steps.append(ConditionCheck("product factor", product, cap, product <= cap))
        n3 = falling_factorial(n, 3)
        n4 = falling_factorial(n, 4)
        dis_lower = Fraction(51, 50 * n) ** 4
        steps.append(
            ConditionCheck("p_dis boundary", Fraction(1, n4), dis_lower,
                           dis_lower >= Fraction(1, n4))
        )
        int_lower = Fraction(51, 50 * n) ** 3
        steps.append(
            ConditionCheck("p_int boundary", Fraction(1, n3), int_lower,
                           int_lower >= Fraction(1, n3))
        )
        profiles = {
            INTERSECTING: clique_cover_rainbow(delta, n, k, INTERSECTING),
            DISJOINT: clique_cover_rainbow(delta, n, k, DISJOINT),
        }
        direct = check_cluster_clique(
            {INTERSECTING: Fraction(1, n3), DISJOINT: Fraction(1, n4)},
            profiles,
            (mu_int, mu_dis),
        )
        report.update(
            {
                "mu_int": mu_int,
                "mu_dis": mu_dis,
                "product_factor": float(product),
                "direct_certificate": direct.to_json(),
            }
        )

    else:
        raise DomainError(f"unknown setting {setting!r}; expected 'thm3' or 'thm7'")

    report["steps"] = [s.to_json() for s in steps]
    report["ok"] = all(s.satisfied for s in steps)
    return report
