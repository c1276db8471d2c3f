"""Edge-family classification and the matching-type invariants.

A family of edges has type (i, j): i edges covering j vertices.  The
classification flags follow the standard combinatorial notions: a
matching is pairwise disjoint; a self matching has no member inside the
union of the others; a semi-induced matching has no outside edge inside
the union; induced and self-semi-induced combine these.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DomainError

KINDS = ("matching", "self_matching", "semi_induced", "self_semi_induced", "induced")


@dataclass(frozen=True)
class FamilyClassification:
    is_matching: bool
    is_self_matching: bool
    is_semi_induced: bool
    is_self_semi_induced: bool
    is_induced: bool
    family_type: tuple[int, int]

    def has_kind(self, kind):
        if kind not in KINDS:
            raise DomainError(f"unknown family kind {kind!r}; choose one of {KINDS}")
        return getattr(self, "is_" + kind)


@dataclass(frozen=True)
class EdgeFamily:
    """A family of edge indices together with its type (size, union size)."""

    indices: tuple[int, ...]
    size: int
    union_size: int

    @classmethod
    def of(cls, hypergraph, indices):
        idx = tuple(sorted(set(indices)))
        union = hypergraph.union_mask(idx)
        return cls(idx, len(idx), union.bit_count())


def _classify_indices(hypergraph, idx):
    masks = [hypergraph.edges[k] for k in idx]
    union = 0
    seen_multi = 0
    for mask in masks:
        seen_multi |= union & mask
        union |= mask
    once_only = union & ~seen_multi
    is_matching = seen_multi == 0
    is_self = all(mask & once_only for mask in masks)
    chosen = set(idx)
    is_semi = all(hypergraph.edges[k] & ~union
                  for k in range(hypergraph.num_edges) if k not in chosen)
    return FamilyClassification(
        is_matching=is_matching,
        is_self_matching=is_self,
        is_semi_induced=is_semi,
        is_self_semi_induced=is_self and is_semi,
        is_induced=is_matching and is_semi,
        family_type=(len(idx), union.bit_count()),
    )


def classify(hypergraph, indices):
    """Classify the edge family given by 0-based edge indices."""
    idx = tuple(sorted(set(indices)))
    if not idx:
        raise DomainError("empty edge family")
    for k in idx:
        if not 0 <= k < hypergraph.num_edges:
            raise DomainError(f"edge index {k} out of range 0..{hypergraph.num_edges - 1}")
    return _classify_indices(hypergraph, idx)


def families(hypergraph, kind=None, size_cap=None):
    """Yield (indices, classification) for every nonempty family up to size_cap.

    Families come in deterministic order: by size, then lexicographically.
    The semi-induced flags are not monotone under adding edges, so every
    subset is classified at completion rather than pruned.
    """
    if kind is not None and kind not in KINDS:
        raise DomainError(f"unknown family kind {kind!r}; choose one of {KINDS}")
    m = hypergraph.num_edges
    cap = m if size_cap is None else min(size_cap, m)
    for size in range(1, cap + 1):
        for idx in combinations(range(m), size):
            cls = _classify_indices(hypergraph, idx)
            if kind is None or cls.has_kind(kind):
                yield idx, cls


def count_families(hypergraph, kind, size, union_size=None):
    """Exact number of families of the given kind and size (and union size)."""
    if size < 1:
        raise DomainError(f"family size must be >= 1, got {size}")
    count = 0
    for idx in combinations(range(hypergraph.num_edges), size):
        cls = _classify_indices(hypergraph, idx)
        if not cls.has_kind(kind):
            continue
        if union_size is not None and cls.family_type[1] != union_size:
            continue
        count += 1
    return count


@dataclass(frozen=True)
class InvariantReport:
    """Maxima over all edge families; None when no family of a kind exists.

    The *_number fields are maximum family sizes i; the *_excess fields are
    maximum values of j - i over families of type (i, j).  When a size cap
    truncated the enumeration (exhaustive=False) the values are lower bounds.
    """

    matching_number: int | None
    induced_matching_number: int | None
    induced_matching_excess: int | None
    self_semi_induced_number: int | None
    self_semi_induced_excess: int | None
    semi_induced_excess: int | None
    exhaustive: bool

    def as_dict(self):
        return {
            "matching_number": self.matching_number,
            "induced_matching_number": self.induced_matching_number,
            "induced_matching_excess": self.induced_matching_excess,
            "self_semi_induced_number": self.self_semi_induced_number,
            "self_semi_induced_excess": self.self_semi_induced_excess,
            "semi_induced_excess": self.semi_induced_excess,
            "exhaustive": self.exhaustive,
        }


def invariants(hypergraph, size_cap=None):
    """Exact matching invariants by exhaustive family enumeration."""
    best = {
        "matching_number": None,
        "induced_matching_number": None,
        "induced_matching_excess": None,
        "self_semi_induced_number": None,
        "self_semi_induced_excess": None,
        "semi_induced_excess": None,
    }

    def raise_to(key, value):
        if best[key] is None or value > best[key]:
            best[key] = value

    for _, cls in families(hypergraph, size_cap=size_cap):
        i, j = cls.family_type
        if cls.is_matching:
            raise_to("matching_number", i)
        if cls.is_induced:
            raise_to("induced_matching_number", i)
            raise_to("induced_matching_excess", j - i)
        if cls.is_self_semi_induced:
            raise_to("self_semi_induced_number", i)
            raise_to("self_semi_induced_excess", j - i)
        if cls.is_semi_induced:
            raise_to("semi_induced_excess", j - i)
    exhaustive = size_cap is None or size_cap >= hypergraph.num_edges
    return InvariantReport(exhaustive=exhaustive, **best)
