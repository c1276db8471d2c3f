"""Graded Betti numbers, regularity, and homology-survivor bounds.

The reduced boundary map keeps only the label-preserving terms of the
simplicial boundary; Betti numbers then come from per-degree exact rank
computations.  Ranks are exact: fraction-free integer elimination over
the rationals by default, modular elimination over GF(p) on request.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import DomainError


def _is_prime(p):
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def validate_characteristic(char):
    if char != 0 and not _is_prime(char):
        raise DomainError(f"characteristic must be 0 or a prime, got {char}")


def integer_rank(rows, char=0):
    """Rank of an integer matrix over Q (char 0) or over GF(char).

    Char 0 uses Bareiss fraction-free elimination: every intermediate entry
    is a minor of the input, so the divisions are exact and the arithmetic
    stays in the integers.
    """
    validate_characteristic(char)
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    if char:
        return _modular_rank(m, char)
    nr, nc = len(m), len(m[0])
    rank = 0
    prev = 1
    for c in range(nc):
        piv = next((r for r in range(rank, nr) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        lead = m[rank]
        for r in range(rank + 1, nr):
            row = m[r]
            f = row[c]
            for cc in range(c + 1, nc):
                row[cc] = (row[cc] * lead[c] - f * lead[cc]) // prev
            row[c] = 0
        prev = lead[c]
        rank += 1
        if rank == nr:
            break
    return rank


def _modular_rank(m, p):
    nr, nc = len(m), len(m[0])
    for row in m:
        for c in range(nc):
            row[c] %= p
    rank = 0
    for c in range(nc):
        piv = next((r for r in range(rank, nr) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        lead = m[rank]
        for r in range(rank + 1, nr):
            f = m[r][c] * inv % p
            if f:
                row = m[r]
                for cc in range(c, nc):
                    row[cc] = (row[cc] - f * lead[cc]) % p
        rank += 1
        if rank == nr:
            break
    return rank


class BettiTable:
    """Sparse graded Betti table of a quotient ring R/J.

    Keys are (homological index, internal degree); absent means zero.
    Index 0 always holds the single entry (0, 0) -> 1; index i >= 1 counts
    the degree-j generators of the i-th free module.
    """

    __slots__ = ("entries", "power", "char")

    def __init__(self, entries, power=None, char=0):
        for (i, j), value in entries.items():
            if value <= 0:
                raise DomainError(f"stored Betti numbers must be positive, got {(i, j)} -> {value}")
        self.entries = dict(entries)
        self.power = power
        self.char = char

    def betti(self, i, j):
        return self.entries.get((i, j), 0)

    def ideal_betti(self, s, r):
        """Same table in the ideal convention: generators of the ideal sit at index 0."""
        return self.betti(s + 1, r)

    def regularity(self):
        if not self.entries:
            raise DomainError("empty Betti table has no regularity")
        return max(j - i for (i, j) in self.entries)

    def items_sorted(self):
        return sorted(self.entries.items())

    def to_json_dict(self):
        return {
            "convention": "R/I^t",
            "t": self.power,
            "char": self.char,
            "entries": [{"i": i, "j": j, "beta": b} for (i, j), b in self.items_sorted()],
            "reg": self.regularity(),
        }

    def __eq__(self, other):
        return (isinstance(other, BettiTable)
                and self.entries == other.entries and self.char == other.char)

    def __repr__(self):
        return f"BettiTable({dict(self.items_sorted())})"


class BoundaryMatrix(NamedTuple):
    """The label-preserving boundary in one homological index and degree."""

    index: int
    degree: int
    rows: tuple
    cols: tuple
    entries: tuple

    def rank(self, char=0):
        return integer_rank(self.entries, char)


def reduced_boundary(cx, i, j):
    """Matrix of the reduced boundary map at homological index i, degree j.

    Columns are the (i-1)-dimensional faces with label degree j, rows the
    (i-2)-dimensional ones.  Removing the k-th vertex (1-based, in sorted
    order) contributes sign (-1)^k exactly when the lcm label is unchanged;
    for a subface that is the same as the degree being unchanged.
    """
    if i < 1:
        raise DomainError(f"homological index must be >= 1, got {i}")
    cols = cx.degree_slices(i - 1).get(j, ())
    rows = cx.degree_slices(i - 2).get(j, ())
    entries = [[0] * len(cols) for _ in rows]
    row_pos = {face: r for r, face in enumerate(rows)}
    for c, face in enumerate(cols):
        for k in range(len(face)):
            sub = face[:k] + face[k + 1:]
            if cx.degree(sub) == j:
                entries[row_pos[sub]][c] = -1 if k % 2 == 0 else 1
    return BoundaryMatrix(i, j, rows, cols, tuple(tuple(r) for r in entries))


def graded_betti(cx, char=0, power=None):
    """Betti table of the quotient supported on the given complex.

    For each homological index i and each degree j occurring among the
    (i-1)-faces, the Betti number is the face count minus the ranks of the
    two adjacent reduced boundaries in that degree.
    """
    validate_characteristic(char)
    ranks = {}

    def rank_at(i, j):
        if (i, j) not in ranks:
            ranks[i, j] = reduced_boundary(cx, i, j).rank(char)
        return ranks[i, j]

    entries = {(0, 0): 1}
    for i in range(1, cx.dim + 2):
        for j, faces in cx.degree_slices(i - 1).items():
            value = len(faces) - rank_at(i, j) - rank_at(i + 1, j)
            assert value >= 0
            if value:
                entries[i, j] = value
    return BettiTable(entries, power=power, char=char)


def survivor_face_sets(cx, i, j):
    """Faces certain / possible to survive as homology generators at (i, j).

    A face of dimension i-1 and degree j qualifies at all only when every
    vertex removal changes its label.  It is a certain survivor when no
    one-vertex extension keeps the label; it stays possible when every
    label-keeping extension also keeps the label after removing one of the
    face's own vertices.  certain <= actual survivors <= possible.
    """
    certain, possible = set(), set()
    for face in cx.degree_slices(i - 1).get(j, ()):
        if any(cx.degree(face[:k] + face[k + 1:]) == j for k in range(len(face))):
            continue
        no_flat_extension = True
        recoverable = True
        for ext in cx.extensions(face):
            if cx.degree(ext) != j:
                continue
            no_flat_extension = False
            if not any(cx.degree(tuple(x for x in ext if x != u)) == j for u in face):
                recoverable = False
                break
        if no_flat_extension:
            certain.add(face)
        if recoverable:
            possible.add(face)
    return certain, possible


class BoundApplicability(NamedTuple):
    """Which of the survivor-set bounds on a Betti number are valid at (i, j)."""

    upper: bool
    lower: bool


def bound_applicability(cx, i, j):
    """Check the hypotheses under which the survivor sets bound the Betti number.

    upper: every (i-1)-face of degree j has all vertex removals label-changing,
    so the Betti number is at most the number of possible survivors.
    lower: no i-dimensional face of degree j has two label-equal subfaces of
    codimension one, so the Betti number is at least the number of certain
    survivors.
    """
    upper = True
    for face in cx.degree_slices(i - 1).get(j, ()):
        if any(cx.degree(face[:k] + face[k + 1:]) == j for k in range(len(face))):
            upper = False
            break
    lower = True
    for ext in cx.degree_slices(i).get(j, ()):
        flats = sum(1 for k in range(len(ext))
                    if cx.degree(ext[:k] + ext[k + 1:]) == j)
        if flats > 1:
            lower = False
            break
    return BoundApplicability(upper, lower)
