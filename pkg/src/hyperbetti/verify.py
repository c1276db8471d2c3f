"""Instance-level checks of every bound the computed tables must satisfy.

Each check evaluates its hypotheses on a concrete hypergraph, computes
both sides of the promised inequality or equality exactly, and records
the numbers it compared.  A failed check whose hypotheses hold marks a
defect; the harness exits nonzero on any such report.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement

from .betti import bound_applicability, graded_betti, survivor_face_sets
from .complexes import faridi_complex, taylor_complex
from .errors import DomainError, ResourceCapError
from .hypergraph import Hypergraph, edge_ideal
from .matchings import count_families, families, invariants
from .monomials import power_generators

CORPUS_MAX_FACES = 1 << 14


@dataclass
class CheckReport:
    check: str
    instance: str
    hypothesis_satisfied: bool
    conclusion_holds: bool | None
    witness: dict = field(default_factory=dict)

    @property
    def failed(self):
        return self.hypothesis_satisfied and self.conclusion_holds is False

    @property
    def gated(self):
        return not self.hypothesis_satisfied

    def to_json(self):
        return json.dumps({
            "check": self.check,
            "instance": self.instance,
            "hypothesis_satisfied": self.hypothesis_satisfied,
            "conclusion_holds": self.conclusion_holds,
            "witness": self.witness,
        }, sort_keys=True, separators=(",", ":"))


def describe(hypergraph):
    return f"n={hypergraph.n} edges={[list(e) for e in hypergraph.edge_sets()]}"


class ComputeCache:
    """Memoizes support complexes and Betti tables per (ideal, power)."""

    def __init__(self, char=0, max_faces=CORPUS_MAX_FACES):
        self.char = char
        self.max_faces = max_faces
        self._complexes = {}
        self._tables = {}

    def complex_for(self, ideal, t):
        key = (ideal, t)
        if key not in self._complexes:
            try:
                self._complexes[key] = faridi_complex(ideal, t, max_faces=self.max_faces)
            except ResourceCapError as e:
                self._complexes[key] = e
        found = self._complexes[key]
        if isinstance(found, ResourceCapError):
            raise found
        return found

    def table_for(self, ideal, t):
        key = (ideal, t)
        if key not in self._tables:
            cx = self.complex_for(ideal, t)
            self._tables[key] = graded_betti(cx, char=self.char, power=t)
        return self._tables[key]

    def ideal_regularity(self, ideal, t):
        """Regularity of the t-th power in the ideal convention; power 0 is R itself."""
        if t == 0:
            return 0
        return self.table_for(ideal, t).regularity() + 1


def _gated(name, label, reason, extra=None):
    witness = {"reason": reason}
    if extra:
        witness.update(extra)
    return CheckReport(name, label, False, None, witness)


def check_second_power(hypergraph, cache=None, label=None):
    """Both-sided survivor bounds at degree 2di for the square of the ideal,
    and the matching-count test: fewer than 2^i size-i matchings forces the
    (i, 2di) Betti number of the square to vanish."""
    name = "second_power_sandwich"
    label = label or describe(hypergraph)
    cache = cache or ComputeCache()
    d = hypergraph.uniform_size()
    if d is None:
        return _gated(name, label, "not uniform")
    ideal = edge_ideal(hypergraph)
    try:
        cx = cache.complex_for(ideal, 2)
        table = cache.table_for(ideal, 2)
    except ResourceCapError as e:
        return _gated(name, label, f"resource cap: {e}")
    holds = True
    cases = []
    for i in range(2, cx.dim + 2):
        j = 2 * d * i
        beta = table.betti(i, j)
        certain, possible = survivor_face_sets(cx, i, j)
        applies = bound_applicability(cx, i, j)
        n_matchings = count_families(hypergraph, "matching", i)
        ok = (applies.upper and applies.lower
              and len(certain) <= beta <= len(possible))
        if n_matchings < 2 ** i:
            ok = ok and beta == 0
        cases.append({"i": i, "j": j, "beta": beta,
                      "certain": len(certain), "possible": len(possible),
                      "upper_applies": applies.upper, "lower_applies": applies.lower,
                      "matchings": n_matchings, "ok": ok})
        holds = holds and ok
    return CheckReport(name, label, True, holds, {"d": d, "cases": cases})


def _ssim_types(hypergraph):
    """Self-semi-induced families grouped by type (size, union size)."""
    types = {}
    for idx, cls in families(hypergraph):
        if cls.is_self_semi_induced:
            types.setdefault(cls.family_type, []).append(idx)
    return types


def check_lower_bounds(hypergraph, t, cache=None, label=None):
    """Lower bounds on Betti numbers of the t-th power from self-semi-induced
    families: per-family nonvanishing, per-type counting bounds, and the
    regularity chain for uniform hypergraphs."""
    name = "power_betti_lower_bounds"
    label = label or describe(hypergraph)
    cache = cache or ComputeCache()
    if hypergraph.num_edges == 0:
        return _gated(name, label, "no edges")
    ideal = edge_ideal(hypergraph)
    d = hypergraph.uniform_size()
    try:
        table = cache.table_for(ideal, t)
    except ResourceCapError as e:
        return _gated(name, label, f"resource cap: {e}")
    types = _ssim_types(hypergraph)
    holds = True
    cases = []
    seen = set()
    for (i, j), fams in sorted(types.items()):
        for fam in fams:
            for size in sorted({hypergraph.edge_size(k) for k in fam}):
                target = (i, size * (t - 1) + j)
                if target in seen:
                    continue
                seen.add(target)
                beta = table.betti(*target)
                ok = beta > 0
                cases.append({"kind": "nonvanishing", "i": target[0], "j": target[1],
                              "beta": beta, "ok": ok})
                holds = holds and ok
    for (i, j), fams in sorted(types.items()):
        s = len(fams)
        if t == 1:
            beta = table.betti(i, j)
            ok = beta >= s
            cases.append({"kind": "count", "i": i, "j": j, "beta": beta,
                          "bound": s, "ok": ok})
            holds = holds and ok
        elif d is not None:
            beta = table.betti(i, d * (t - 1) + j)
            ok = beta >= s * i
            cases.append({"kind": "count", "i": i, "j": d * (t - 1) + j,
                          "beta": beta, "bound": s * i, "ok": ok})
            holds = holds and ok
    if d is not None:
        inv = invariants(hypergraph)
        reg = table.regularity()
        low_induced = (d - 1) * inv.induced_matching_number
        low_excess = inv.self_semi_induced_excess
        ok = low_induced <= low_excess and d * (t - 1) + low_excess <= reg
        cases.append({"kind": "regularity", "reg": reg,
                      "induced_bound": d * (t - 1) + low_induced,
                      "excess_bound": d * (t - 1) + low_excess, "ok": ok})
        holds = holds and ok
    return CheckReport(name, label, True, holds, {"t": t, "cases": cases})


def check_min_gens(hypergraph, k, cache=None, label=None, family_cap=None):
    """Every product of k edges from a self-semi-induced family must appear
    among the minimal generators of the k-th power."""
    name = "ssim_products_are_minimal_generators"
    label = label or describe(hypergraph)
    if hypergraph.num_edges == 0:
        return _gated(name, label, "no edges")
    if k < 1:
        raise DomainError(f"power must be >= 1, got {k}")
    ideal = edge_ideal(hypergraph)
    generators = {mono for _, mono in power_generators(ideal, k)}
    edge_monos = list(ideal.generators)
    holds = True
    checked = 0
    missing = []
    for idx, cls in families(hypergraph, size_cap=family_cap):
        if not cls.is_self_semi_induced:
            continue
        for combo in combinations_with_replacement(idx, k):
            prod = edge_monos[combo[0]]
            for e in combo[1:]:
                prod = prod * edge_monos[e]
            checked += 1
            if prod not in generators:
                holds = False
                missing.append({"family": list(idx), "combo": list(combo)})
    return CheckReport(name, label, True, holds,
                       {"k": k, "products_checked": checked, "missing": missing})


def check_reg_upper(hypergraph, t, cache=None, label=None):
    """Upper bounds on the regularity of the t-th power: the edge-count bound
    and the two splitting-off inequalities through subideals."""
    name = "regularity_upper_bounds"
    label = label or describe(hypergraph)
    cache = cache or ComputeCache()
    d = hypergraph.uniform_size()
    if d is None:
        return _gated(name, label, "not uniform")
    ideal = edge_ideal(hypergraph)
    m = hypergraph.num_edges
    try:
        reg_quotient = cache.table_for(ideal, t).regularity()
        cases = []
        edge_bound = d * (t - 1) + m * (d - 1)
        ok = reg_quotient <= edge_bound
        cases.append({"kind": "edge_count", "reg": reg_quotient,
                      "bound": edge_bound, "ok": ok})
        holds = ok
        reg_ideal = reg_quotient + 1
        if m >= 2:
            split = max(cache.ideal_regularity(ideal.truncate(m - 1), t) + d - 1,
                        cache.ideal_regularity(ideal, t - 1) + d)
            ok = reg_ideal <= split
            cases.append({"kind": "one_step_split", "reg_ideal": reg_ideal,
                          "bound": split, "ok": ok})
            holds = holds and ok
        parts = [cache.ideal_regularity(ideal.truncate(k), 1) + (m - k) * (d - 1)
                 for k in range(1, m + 1)]
        first_power_bound = d * (t - 1) + max(parts)
        ok = reg_ideal <= first_power_bound
        cases.append({"kind": "first_power_reduction", "reg_ideal": reg_ideal,
                      "bound": first_power_bound, "ok": ok})
        holds = holds and ok
    except ResourceCapError as e:
        return _gated(name, label, f"resource cap: {e}")
    return CheckReport(name, label, True, holds, {"t": t, "cases": cases})


def check_vanishing(hypergraph, t, r, s, cache=None, label=None):
    """When no face of dimension s-1 or s+1 has degree r and a self-semi-induced
    family of type (s+1, r - d(t-1)) exists, the ideal-convention Betti numbers
    vanish at s-1 and s+1 in degree r and are nonzero at s."""
    name = "betti_vanishing_window"
    label = label or describe(hypergraph)
    cache = cache or ComputeCache()
    d = hypergraph.uniform_size()
    if d is None:
        return _gated(name, label, "not uniform")
    ideal = edge_ideal(hypergraph)
    try:
        cx = cache.complex_for(ideal, t)
        table = cache.table_for(ideal, t)
    except ResourceCapError as e:
        return _gated(name, label, f"resource cap: {e}")
    window_clear = all(cx.degree(f) != r for f in cx.faces_of_dim(s - 1)) and \
        all(cx.degree(f) != r for f in cx.faces_of_dim(s + 1))
    target_type = (s + 1, r - d * (t - 1))
    family_exists = any(cls.family_type == target_type
                        for _, cls in families(hypergraph, kind="self_semi_induced"))
    if not (window_clear and family_exists):
        return _gated(name, label, "hypotheses not satisfied",
                      {"t": t, "r": r, "s": s, "window_clear": window_clear,
                       "family_exists": family_exists})
    below = table.ideal_betti(s - 1, r)
    mid = table.ideal_betti(s, r)
    above = table.ideal_betti(s + 1, r)
    holds = below == 0 and above == 0 and mid != 0
    return CheckReport(name, label, True, holds,
                       {"t": t, "r": r, "s": s,
                        "beta_below": below, "beta_mid": mid, "beta_above": above})


def check_taylor_agreement(hypergraph, t, cache=None, label=None):
    """The Betti tables supported on the full simplex and on the support
    complex must coincide."""
    name = "taylor_faridi_agreement"
    label = label or describe(hypergraph)
    cache = cache or ComputeCache()
    if hypergraph.num_edges == 0:
        return _gated(name, label, "no edges")
    ideal = edge_ideal(hypergraph)
    try:
        table = cache.table_for(ideal, t)
        simplex = taylor_complex(power_generators(ideal, t), max_faces=cache.max_faces)
    except ResourceCapError as e:
        return _gated(name, label, f"resource cap: {e}")
    taylor_table = graded_betti(simplex, char=cache.char, power=t)
    holds = taylor_table.entries == table.entries
    witness = {"t": t, "faces_taylor": simplex.face_count}
    if not holds:
        witness["taylor"] = [[i, j, b] for (i, j), b in taylor_table.items_sorted()]
        witness["faridi"] = [[i, j, b] for (i, j), b in table.items_sorted()]
    return CheckReport(name, label, True, holds, witness)


def check_first_power_simplex(hypergraph, cache=None, label=None):
    """At power one the support complex is the Taylor simplex itself."""
    name = "first_power_complex_is_simplex"
    label = label or describe(hypergraph)
    cache = cache or ComputeCache()
    if hypergraph.num_edges == 0:
        return _gated(name, label, "no edges")
    ideal = edge_ideal(hypergraph)
    try:
        cx = cache.complex_for(ideal, 1)
        simplex = taylor_complex(power_generators(ideal, 1), max_faces=cache.max_faces)
    except ResourceCapError as e:
        return _gated(name, label, f"resource cap: {e}")
    holds = cx == simplex
    return CheckReport(name, label, True, holds, {"faces": cx.face_count})


def check_survivor_sandwich(hypergraph, t, cache=None, label=None):
    """Wherever the survivor bounds apply, the Betti number must sit between
    the certain and possible survivor counts."""
    name = "survivor_bound_sandwich"
    label = label or describe(hypergraph)
    cache = cache or ComputeCache()
    if hypergraph.num_edges == 0:
        return _gated(name, label, "no edges")
    ideal = edge_ideal(hypergraph)
    try:
        cx = cache.complex_for(ideal, t)
        table = cache.table_for(ideal, t)
    except ResourceCapError as e:
        return _gated(name, label, f"resource cap: {e}")
    holds = True
    cases = []
    for i in range(1, cx.dim + 2):
        for j in cx.degree_slices(i - 1):
            applies = bound_applicability(cx, i, j)
            if not (applies.upper or applies.lower):
                continue
            certain, possible = survivor_face_sets(cx, i, j)
            beta = table.betti(i, j)
            ok = True
            if applies.upper:
                ok = ok and beta <= len(possible)
            if applies.lower:
                ok = ok and beta >= len(certain)
            if not ok or beta:
                cases.append({"i": i, "j": j, "beta": beta,
                              "certain": len(certain), "possible": len(possible),
                              "upper_applies": applies.upper,
                              "lower_applies": applies.lower, "ok": ok})
            holds = holds and ok
    return CheckReport(name, label, True, holds, {"t": t, "cases": cases})


def random_hypergraph(n, m, d, seed):
    """Deterministic uniform sample of m distinct d-edges on vertices 1..n."""
    if n < 1:
        raise DomainError(f"need at least one vertex, got n={n}")
    if m < 1:
        raise DomainError(f"need at least one edge, got m={m}")
    if d < 2 or d > n:
        raise DomainError(f"edge size {d} not in 2..{n}")
    pool = list(combinations(range(1, n + 1), d))
    if m > len(pool):
        raise DomainError(f"cannot pick {m} distinct {d}-subsets of {n} vertices")
    rng = random.Random(seed)
    return Hypergraph(n, sorted(rng.sample(pool, m)))


def enumerate_hypergraphs(n, d, m):
    """All m-subsets of d-subsets of 1..n whose union covers every vertex.

    The covering condition makes every edge list appear at exactly one n, so
    the corpus grid below contains no duplicates.
    """
    full = (1 << n) - 1
    pool = list(combinations(range(1, n + 1), d))
    for combo in combinations(pool, m):
        mask = 0
        for e in combo:
            for v in e:
                mask |= 1 << (v - 1)
        if mask == full:
            yield Hypergraph(n, combo)


_NAMED = (
    ("two-triples-sharing-one", 5, ([1, 2, 3], [3, 4, 5])),
    ("three-triples-plus-transversal", 9, ([1, 2, 3], [4, 5, 6], [7, 8, 9], [1, 4, 7])),
    ("single-edge-2", 2, ([1, 2],)),
    ("single-edge-3", 3, ([1, 2, 3],)),
    ("single-edge-4", 4, ([1, 2, 3, 4],)),
    ("two-disjoint-2", 4, ([1, 2], [3, 4])),
    ("two-disjoint-3", 6, ([1, 2, 3], [4, 5, 6])),
    ("three-disjoint-2", 6, ([1, 2], [3, 4], [5, 6])),
    ("triangle", 3, ([1, 2], [2, 3], [1, 3])),
    ("path-graph-4", 4, ([1, 2], [2, 3], [3, 4])),
    ("four-cycle", 4, ([1, 2], [2, 3], [3, 4], [1, 4])),
    ("star-3", 4, ([1, 2], [1, 3], [1, 4])),
    ("two-triples-sharing-two", 4, ([1, 2, 3], [2, 3, 4])),
    ("mixed-sizes-chain", 5, ([1, 2], [2, 3, 4], [4, 5])),
    ("mixed-sizes-disjoint", 5, ([1, 2], [3, 4, 5])),
)

_GRID = (
    (2, 2, 1), (3, 2, 2), (3, 2, 3),
    (4, 2, 2), (4, 2, 3), (4, 2, 4),
    (5, 2, 3), (6, 2, 3),
    (3, 3, 1), (4, 3, 2), (4, 3, 3),
    (5, 3, 2), (5, 3, 3), (6, 3, 2),
)

_RANDOM_CONFIGS = (
    (5, 2, 4), (6, 2, 4), (7, 2, 4),
    (6, 3, 3), (6, 3, 4), (7, 3, 3), (7, 3, 4),
)


def builtin_corpus(random_per_config=3, master_seed=1187):
    """Named instances, an exhaustive small grid, and seeded random samples."""
    out = [(name, Hypergraph(n, edges)) for name, n, edges in _NAMED]
    for n, d, m in _GRID:
        for idx, h in enumerate(enumerate_hypergraphs(n, d, m)):
            out.append((f"grid-n{n}-d{d}-m{m}-{idx:04d}", h))
    for n, d, m in _RANDOM_CONFIGS:
        for k in range(random_per_config):
            seed = master_seed + 97 * k
            name = f"random-n{n}-d{d}-m{m}-s{seed}"
            out.append((name, random_hypergraph(n, m, d, seed)))
    return out


def run_checks(hypergraph, t_max=3, cache=None, label=None, min_gen_powers=(2, 3)):
    """All checks for one instance, in a fixed order."""
    label = label or describe(hypergraph)
    cache = cache or ComputeCache()
    reports = [check_first_power_simplex(hypergraph, cache, label)]
    for t in range(1, t_max + 1):
        reports.append(check_taylor_agreement(hypergraph, t, cache, label))
        reports.append(check_lower_bounds(hypergraph, t, cache, label))
        reports.append(check_survivor_sandwich(hypergraph, t, cache, label))
        reports.append(check_reg_upper(hypergraph, t, cache, label))
    reports.append(check_second_power(hypergraph, cache, label))
    for k in min_gen_powers:
        reports.append(check_min_gens(hypergraph, k, cache, label))
    d = hypergraph.uniform_size()
    if d is not None:
        seen = set()
        for _, cls in families(hypergraph, kind="self_semi_induced"):
            i, j = cls.family_type
            for t in range(1, t_max + 1):
                key = (t, d * (t - 1) + j, i - 1)
                if key not in seen:
                    seen.add(key)
                    reports.append(check_vanishing(hypergraph, key[0], key[1], key[2],
                                                   cache, label))
    return reports


def summarize(reports):
    return {
        "passed": sum(1 for r in reports if r.hypothesis_satisfied and r.conclusion_holds),
        "gated": sum(1 for r in reports if r.gated),
        "failed": sum(1 for r in reports if r.failed),
    }


def run_corpus(entries, t_max=3, char=0, max_faces=CORPUS_MAX_FACES,
               min_gen_powers=(2, 3)):
    """Run all checks over (name, hypergraph) pairs; returns (reports, summary)."""
    reports = []
    for name, hypergraph in entries:
        cache = ComputeCache(char=char, max_faces=max_faces)
        reports.extend(run_checks(hypergraph, t_max=t_max, cache=cache,
                                  label=name, min_gen_powers=min_gen_powers))
    return reports, summarize(reports)
