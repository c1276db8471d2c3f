"""Independent oracles used by the tests, kept apart from the library code."""

from fractions import Fraction
from itertools import combinations_with_replacement


def fraction_rank(rows):
    """Rank over Q by plain Gaussian elimination on Fractions."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])
    rank = 0
    for c in range(nc):
        piv = next((r for r in range(rank, nr) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        lead = m[rank]
        for r in range(rank + 1, nr):
            f = m[r][c] / lead[c]
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], lead)]
        rank += 1
    return rank


def gf_rank(rows, p):
    """Rank over GF(p) via sympy's domain matrices."""
    from sympy import GF, Matrix
    from sympy.polys.matrices import DomainMatrix
    if not rows or not rows[0]:
        return 0
    return DomainMatrix.from_Matrix(Matrix([list(r) for r in rows])).convert_to(GF(p)).rank()


def brute_power_products(ideal, t):
    """Every product of exactly t generators, as a list with repetitions."""
    out = []
    for combo in combinations_with_replacement(ideal.generators, t):
        prod = combo[0]
        for g in combo[1:]:
            prod = prod * g
        out.append(prod)
    return out


def brute_minimal_power_generators(ideal, t):
    """Minimal generators of the t-th power, computed without factorization tuples."""
    products = set(brute_power_products(ideal, t))
    return {p for p in products
            if not any(q != p and q.divides(p) for q in products)}
