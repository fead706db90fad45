"""Independent oracles used by the test suite.

Everything here is deliberately naive and avoids the library's own
machinery: antichains by subset scan, counting formulas from the height
multiset, and decomposition statistics by exhaustive multiset search over
the coefficient lattice (no sum-table recursion).
"""

from fractions import Fraction
from itertools import combinations

from fusscat.chains import INFINITY


def _leq(a, b) -> bool:
    return all(y - x >= 0 for x, y in zip(a, b))


def antichains(rs):
    """All antichains of the root poset by brute-force subset scan."""
    roots = rs.positive_roots
    out = []
    for size in range(len(roots) + 1):
        for combo in combinations(roots, size):
            if all(
                not _leq(a, b) and not _leq(b, a) for a, b in combinations(combo, 2)
            ):
                out.append(combo)
    return out


def exponents(rs):
    """Exponents per irreducible factor from the height multiset: the
    partition of root counts by height is conjugate to the exponents."""
    out = []
    for f in range(rs.n_factors):
        heights = [
            rs.heights[i]
            for i in range(rs.n_positive_roots)
            if rs.factor_of_root[i] == f
        ]
        h_max = max(heights)
        counts = [sum(1 for h in heights if h == d) for d in range(1, h_max + 1)]
        exps = sorted(
            sum(1 for c in counts if c >= i) for i in range(1, max(counts) + 1)
        )
        out.append(tuple(exps))
    return tuple(out)


def fuss_catalan(rs, k: int) -> int:
    """Product formula for the number of dominant regions."""
    total = Fraction(1)
    for f, exps in enumerate(exponents(rs)):
        h = rs.coxeter_numbers[f]
        for e in exps:
            total *= Fraction(k * h + e + 1, e + 1)
    assert total.denominator == 1
    return int(total)


def decompositions(rs, root):
    """All multisets of positive roots with coefficientwise sum == root,
    found by bounded search over the root list."""
    roots = rs.positive_roots
    out = []

    def rec(i, remaining, acc):
        if all(c == 0 for c in remaining):
            out.append(tuple(acc))
            return
        if i == len(roots):
            return
        rec(i + 1, remaining, acc)
        probe = tuple(x - y for x, y in zip(remaining, roots[i]))
        if all(c >= 0 for c in probe):
            acc.append(roots[i])
            rec(i, probe, acc)
            acc.pop()

    rec(0, tuple(root), [])
    return out


def min_level_sum_oracle(chain, root):
    """Minimum level sum over all decompositions, parts weighted by the
    first ideal level containing them; INFINITY if none qualifies."""
    levels = chain.ideals
    best = INFINITY
    for parts in decompositions(chain.rs, root):
        total = 0
        for part in parts:
            first = next((i for i, lv in enumerate(levels, 1) if part in lv), None)
            if first is None:
                break
            total += first
        else:
            best = min(best, total)
    return best


def max_level_sum_oracle(chain, root):
    """Maximum level sum over all decompositions, parts weighted by the
    deepest filter level containing them (0 if none)."""
    levels = chain.filters
    best = 0
    for parts in decompositions(chain.rs, root):
        total = 0
        for part in parts:
            deepest = max((i for i, lv in enumerate(levels, 1) if part in lv), default=0)
            total += deepest
        best = max(best, total)
    return best
