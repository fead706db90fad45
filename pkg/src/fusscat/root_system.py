"""Crystallographic root systems in simple-root coordinates.

A root is an integer coefficient vector over the simple roots.  Points of
the ambient space are stored in pairing coordinates, coords[i] = <x, a_i>
against the i-th simple root, so <x, a> is a plain dot product and every
hyperplane <x, a> = r becomes an integer linear condition on rational
coordinates.  All arithmetic is exact (int / Fraction), never floating.

Conventions:

* the symmetrizing weights d_i are fixed so the short roots of every
  irreducible factor have squared length 2;
* B2 is labelled with a1 short, a2 long (highest root 2a1+a2); Bn for
  n >= 3 follows Bourbaki numbering (an short), as do Cn, Dn, E, F4, G2.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

Root = tuple[int, ...]
Point = tuple[Fraction, ...]

_SERIES_RANKS = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_PART_RE = re.compile(r"^([A-G])([0-9]+)$")


def parse_label(label: str) -> tuple[tuple[str, int], ...]:
    """Split a type label like "B2" or "A2xA1" into (series, rank) factors."""
    factors = []
    for part in str(label).split("x"):
        m = _PART_RE.match(part.strip())
        if m is None:
            raise ValueError(f"unknown type label {part.strip()!r} in {label!r}")
        series, rank = m.group(1), int(m.group(2))
        lo, hi = _SERIES_RANKS[series]
        if rank < lo or (hi is not None and rank > hi):
            raise ValueError(f"rank {rank} out of bounds for series {series}")
        factors.append((series, rank))
    return tuple(factors)


def _dynkin_diagram(series: str, rank: int):
    """Edges of the Dynkin diagram and the weights d_i = (a_i, a_i)/2."""
    path = [(i, i + 1) for i in range(rank - 1)]
    if series == "A":
        return path, (1,) * rank
    if series == "B":
        if rank == 2:
            return path, (1, 2)  # a1 short; highest root 2a1+a2
        return path, (2,) * (rank - 1) + (1,)
    if series == "C":
        return path, (1,) * (rank - 1) + (2,)
    if series == "D":
        edges = [(i, i + 1) for i in range(rank - 3)]
        edges += [(rank - 3, rank - 2), (rank - 3, rank - 1)]
        return edges, (1,) * rank
    if series == "E":
        # Bourbaki: chain 1-3-4-5-6(-7-8) with node 2 attached to node 4.
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        if rank >= 7:
            edges.append((5, 6))
        if rank == 8:
            edges.append((6, 7))
        return edges, (1,) * rank
    if series == "F":
        return path, (2, 2, 1, 1)
    if series == "G":
        return path, (1, 3)
    raise ValueError(f"unknown series {series!r}")


def _add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def _generate_positive_roots(cartan, rank: int) -> set[Root]:
    """Closure of the simple roots under root-string addition."""
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    known: set[Root] = set(simple)
    current = list(simple)
    while current:
        nxt: set[Root] = set()
        for beta in current:
            for i in range(rank):
                if beta == simple[i]:
                    continue
                # p = length of the a_i-string below beta; all members have
                # smaller height, hence are already in `known`.
                p = 0
                probe = _sub(beta, simple[i])
                while probe in known:
                    p += 1
                    probe = _sub(probe, simple[i])
                coroot_pairing_i = sum(beta[j] * cartan[i][j] for j in range(rank))
                if p - coroot_pairing_i >= 1:
                    nxt.add(_add(beta, simple[i]))
        known |= nxt
        current = sorted(nxt)
    return known


class RootSystem:
    """Immutable table of positive roots, pairings and sum decompositions.

    Instances are value-immutable after construction and are safe for
    unrestricted concurrent reads.  Use :func:`build_root_system`, which
    caches per label, so chains and alcoves referring to the same label
    share one instance.
    """

    def __init__(self, label: str):
        factors = parse_label(label)
        self.factors = factors
        self.label = "x".join(f"{s}{r}" for s, r in factors)
        ranks = [r for _, r in factors]
        self.rank = sum(ranks)
        n = self.rank

        # Per-simple-root factor index and block spans.
        spans = []
        offset = 0
        for _, r in factors:
            spans.append((offset, offset + r))
            offset += r
        self.factor_spans = tuple(spans)
        factor_of_simple = [0] * n
        for f, (lo, hi) in enumerate(spans):
            for i in range(lo, hi):
                factor_of_simple[i] = f

        # Block-diagonal symmetrized form and Cartan matrix.
        gram = [[0] * n for _ in range(n)]
        for f, (series, r) in enumerate(factors):
            lo, _ = spans[f]
            edges, d = _dynkin_diagram(series, r)
            for i in range(r):
                gram[lo + i][lo + i] = 2 * d[i]
            for i, j in edges:
                gram[lo + i][lo + j] = gram[lo + j][lo + i] = -max(d[i], d[j])
        self.gram = tuple(tuple(row) for row in gram)
        # cartan[i][j] = 2(a_i, a_j)/(a_i, a_i) = gram[i][j]/d_i
        cartan = []
        for i in range(n):
            d_i = gram[i][i] // 2
            row = []
            for j in range(n):
                q, rem = divmod(gram[i][j], d_i)
                assert rem == 0
                row.append(q)
            cartan.append(tuple(row))
        self.cartan = tuple(cartan)

        roots = _generate_positive_roots(self.cartan, n)
        # Height order, then simple-root index order within a height.
        ordered = sorted(roots, key=lambda a: (sum(a), tuple(-c for c in a)))
        self.positive_roots: tuple[Root, ...] = tuple(ordered)
        self._index: dict[Root, int] = {a: i for i, a in enumerate(ordered)}
        self.heights = tuple(sum(a) for a in ordered)
        self.simple_roots: tuple[Root, ...] = tuple(
            tuple(1 if j == i else 0 for j in range(n)) for i in range(n)
        )

        # Every root is supported in exactly one factor block.
        factor_of_root = []
        for a in ordered:
            fs = {factor_of_simple[i] for i, c in enumerate(a) if c != 0}
            assert len(fs) == 1, "root support crosses factor blocks"
            factor_of_root.append(fs.pop())
        self.factor_of_root = tuple(factor_of_root)

        # Highest root and Coxeter number per factor.
        highest = []
        coxeter = []
        for f in range(len(factors)):
            in_factor = [a for a in ordered if factor_of_root[self._index[a]] == f]
            top = max(in_factor, key=sum)
            assert all(self.poset_leq(a, top) for a in in_factor), (
                "highest root is not the poset maximum"
            )
            highest.append(top)
            coxeter.append(sum(top) + 1)
        self.highest_roots = tuple(highest)
        self.coxeter_numbers = tuple(coxeter)

        # sum_table[t] = all unordered index pairs (i, j), i <= j, with
        # root_i + root_j = root_t.  Exhaustive by construction.
        m = len(ordered)
        sum_table: list[list[tuple[int, int]]] = [[] for _ in range(m)]
        for i in range(m):
            for j in range(i, m):
                t = self._index.get(_add(ordered[i], ordered[j]))
                if t is not None:
                    sum_table[t].append((i, j))
        self.sum_table = tuple(tuple(pairs) for pairs in sum_table)

        # Coroot rows against the simple roots: 2(a, a_j)/(a, a).
        coroot_rows = []
        for a in ordered:
            nsq = self._bilinear(a, a)
            row = []
            for j in range(n):
                num = 2 * self._bilinear(a, self.simple_roots[j])
                q, rem = divmod(num, nsq)
                assert rem == 0, "coroot pairing is not integral"
                row.append(q)
            coroot_rows.append(tuple(row))
        self._coroot_rows = tuple(coroot_rows)

        # Poset closures as bitmasks over the positive-root index space.
        up = [0] * m
        down = [0] * m
        for i in range(m):
            for j in range(m):
                if self.poset_leq(ordered[i], ordered[j]):
                    up[i] |= 1 << j
                    down[j] |= 1 << i
        self.up_closure_masks = tuple(up)
        self.down_closure_masks = tuple(down)
        self.full_mask = (1 << m) - 1

    # ------------------------------------------------------------------
    def __repr__(self):
        return f"RootSystem({self.label!r})"

    @property
    def n_positive_roots(self) -> int:
        return len(self.positive_roots)

    @property
    def n_factors(self) -> int:
        return len(self.factors)

    def root_index(self, a: Root) -> int:
        try:
            return self._index[tuple(a)]
        except KeyError:
            raise ValueError(f"{tuple(a)} is not a positive root of {self.label}") from None

    def is_positive_root(self, a) -> bool:
        return tuple(a) in self._index

    def height(self, a: Root) -> int:
        return self.heights[self.root_index(a)]

    def factor_of(self, a: Root) -> int:
        return self.factor_of_root[self.root_index(a)]

    def _bilinear(self, a: Root, b: Root) -> int:
        g = self.gram
        return sum(a[i] * g[i][j] * b[j] for i in range(self.rank) for j in range(self.rank) if a[i] and b[j])

    def pairing(self, x: Point, a: Root) -> Fraction:
        """<x, a> for x in pairing coordinates; exact."""
        self.root_index(a)
        if len(x) != self.rank:
            raise ValueError("point has wrong dimension")
        return sum((c * xi for c, xi in zip(a, x)), Fraction(0))

    def poset_leq(self, a: Root, b: Root) -> bool:
        """Root poset order: a <= b iff b - a has nonnegative coefficients."""
        self.root_index(a)
        self.root_index(b)
        return all(cb - ca >= 0 for ca, cb in zip(a, b))

    def coroot_pairing(self, a: Root, b: Root) -> int:
        """2(a, b)/(a, a); an integer for any two roots."""
        ia = self.root_index(a)
        self.root_index(b)
        return sum(c * r for c, r in zip(b, self._coroot_rows[ia]) if c)

    def coroot_row(self, a: Root) -> tuple[int, ...]:
        """2(a, a_j)/(a, a) for each simple root a_j."""
        return self._coroot_rows[self.root_index(a)]


@lru_cache(maxsize=None)
def build_root_system(label: str) -> RootSystem:
    """Construct (and cache) the root system named by `label`.

    Raises ValueError for unknown labels or ranks out of bounds.
    """
    return RootSystem(label)
