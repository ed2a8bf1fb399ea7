"""Hypergraphs, their canonical matrices, and ring determinants.

The canonical matrix of a k-homogeneous hypergraph has one row and column
per edge; entry (i, j) is the *edge bracket* of edges i and j, the sum of
all k! partials carrying edge i onto edge j.  Mixed hypergraphs assemble
block-diagonally per section (edges of one size can only map to edges of
the same size).  The cross-graph variant brackets the first graph's edges
against the second's, giving the transformation matrix whose determinant
is the isomorphism set.

Two determinant engines are provided.  ``det_leibniz`` is the permutation
sum, computed row by row with zero-prefix pruning (exact: pruned branches
contribute nothing).  ``det_initiators`` folds the product of the row
sums, which for canonical matrices equals the determinant because two
entries in one column annihilate each other term by term; a greedy
vertex-overlap row ordering keeps the intermediate products short.  The
result is independent of the fold order, but ``det_initiators`` is only
meaningful on canonical matrices and transformations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import (
    ArityMismatch,
    ArityTooLarge,
    DimensionMismatch,
    DimensionTooLarge,
    NotHomogeneous,
)
from .partials import GroundSet, Partial, ZERO
from .ring import Polypartial, one, pp_add, pp_mul, zero

#: Edge brackets above this arity (k! terms each) raise ArityTooLarge.
MAX_ARITY = 6

#: Leibniz determinants above this dimension raise DimensionTooLarge.
MAX_LEIBNIZ = 8


@dataclass(frozen=True)
class Hypergraph:
    """A ground set plus an ordered family of distinct non-empty edges.

    Edges are sorted point-index tuples; the family keeps its input order
    (it numbers matrix rows) but is duplicate-free as a family of sets.
    """

    ground: GroundSet
    edges: tuple = ()

    def __post_init__(self):
        m = self.ground.size
        seen = set()
        canon = []
        for edge in self.edges:
            pts = tuple(sorted(edge))
            if not pts:
                raise ValueError("empty edge")
            if len(set(pts)) != len(pts):
                raise ValueError(f"edge lists a vertex twice: {edge!r}")
            if pts[0] < 0 or pts[-1] >= m:
                raise ValueError(f"edge point out of range: {edge!r}")
            if pts in seen:
                raise ValueError(f"duplicate edge: {edge!r}")
            seen.add(pts)
            canon.append(pts)
        object.__setattr__(self, "edges", tuple(canon))

    @classmethod
    def from_labels(cls, vertices, edges) -> "Hypergraph":
        """Build from vertex labels (an int m means labels 1..m)."""
        ground = (
            GroundSet.of_size(vertices)
            if isinstance(vertices, int)
            else GroundSet(tuple(vertices))
        )
        return cls(ground, tuple(tuple(ground.index(v) for v in e) for e in edges))

    @property
    def n(self) -> int:
        return len(self.edges)

    def singular_set(self) -> frozenset:
        """All points lying in some edge."""
        return frozenset(x for e in self.edges for x in e)

    def is_spanning(self) -> bool:
        return len(self.singular_set()) == self.ground.size

    def degree(self, point: int) -> int:
        return sum(1 for e in self.edges if point in e)

    def sections(self) -> dict:
        """Edges partitioned by cardinality, k -> sub-hypergraph, k ascending."""
        by_k = {}
        for e in self.edges:
            by_k.setdefault(len(e), []).append(e)
        return {
            k: Hypergraph(self.ground, tuple(by_k[k])) for k in sorted(by_k)
        }

    def edge_labels(self, i: int) -> tuple:
        return tuple(self.ground.label(x) for x in self.edges[i])


@dataclass(frozen=True)
class PolyMatrix:
    """A square matrix over the ring of partials."""

    entries: tuple  # n rows, each a tuple of n Polypartials

    def __post_init__(self):
        n = len(self.entries)
        rows = tuple(tuple(row) for row in self.entries)
        if any(len(row) != n for row in rows):
            raise DimensionMismatch("matrix is not square")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def identity_matrix(n: int) -> PolyMatrix:
    return PolyMatrix(
        tuple(
            tuple(one() if i == j else zero() for j in range(n)) for i in range(n)
        )
    )


def transpose(m: PolyMatrix) -> PolyMatrix:
    return PolyMatrix(tuple(zip(*m.entries)))


def matmul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    if a.n != b.n:
        raise DimensionMismatch(f"{a.n}x{a.n} times {b.n}x{b.n}")
    n = a.n
    out = []
    for i in range(n):
        row = []
        for k in range(n):
            acc = zero()
            for j in range(n):
                acc = pp_add(acc, pp_mul(a.entries[i][j], b.entries[j][k]))
            row.append(acc)
        out.append(tuple(row))
    return PolyMatrix(tuple(out))


def scalar_mul(kappa: Polypartial, m: PolyMatrix) -> PolyMatrix:
    return PolyMatrix(
        tuple(tuple(pp_mul(kappa, entry) for entry in row) for row in m.entries)
    )


def edge_bracket(a, b, max_arity: int = MAX_ARITY) -> Polypartial:
    """Sum of the k! partials mapping edge ``a`` onto edge ``b``."""
    a = tuple(sorted(a))
    b = tuple(sorted(b))
    if len(a) != len(b):
        raise ArityMismatch(f"|A|={len(a)} but |B|={len(b)}")
    if len(a) > max_arity:
        raise ArityTooLarge(f"arity {len(a)} exceeds cap {max_arity}")
    terms = [
        Partial(tuple(zip(a, image))) for image in permutations(b)
    ]
    return Polypartial.of(*terms)


def canonical_matrix(g: Hypergraph, max_arity: int = MAX_ARITY) -> PolyMatrix:
    """Bracket matrix of a homogeneous hypergraph, rows in edge order."""
    sizes = {len(e) for e in g.edges}
    if len(sizes) > 1:
        raise NotHomogeneous(f"edge sizes {sorted(sizes)}; use block_matrix")
    return PolyMatrix(
        tuple(
            tuple(edge_bracket(a, b, max_arity) for b in g.edges) for a in g.edges
        )
    )


def block_matrix(g: Hypergraph, max_arity: int = MAX_ARITY) -> PolyMatrix:
    """Block-diagonal canonical matrix of an arbitrary hypergraph.

    Rows group the edges by section (sizes ascending, input order within a
    section); entries between different sections are zero.
    """
    ordered = [e for k, sec in sorted_sections(g) for e in sec]
    out = []
    for a in ordered:
        row = [
            edge_bracket(a, b, max_arity) if len(a) == len(b) else zero()
            for b in ordered
        ]
        out.append(tuple(row))
    return PolyMatrix(tuple(out))


def sorted_sections(g: Hypergraph):
    """(k, edges-of-size-k) pairs, k ascending, input order within."""
    by_k = {}
    for e in g.edges:
        by_k.setdefault(len(e), []).append(e)
    return [(k, tuple(by_k[k])) for k in sorted(by_k)]


def canonical_transformation(g1: Hypergraph, g2: Hypergraph, max_arity: int = MAX_ARITY):
    """Cross-bracket matrix whose determinant is the isomorphism set.

    Rows are the first graph's edges, columns the second's, grouped by
    section on both sides.  Returns ZERO when the shapes already rule out
    any isomorphism (different ground sizes, edge counts, or per-section
    edge counts).
    """
    if g1.ground.size != g2.ground.size or g1.n != g2.n:
        return ZERO
    secs1 = sorted_sections(g1)
    secs2 = sorted_sections(g2)
    if [(k, len(sec)) for k, sec in secs1] != [(k, len(sec)) for k, sec in secs2]:
        return ZERO
    rows = [e for _, sec in secs1 for e in sec]
    cols = [e for _, sec in secs2 for e in sec]
    out = []
    for a in rows:
        row = [
            edge_bracket(a, b, max_arity) if len(a) == len(b) else zero()
            for b in cols
        ]
        out.append(tuple(row))
    return PolyMatrix(tuple(out))


def initiator(m: PolyMatrix, i: int) -> Polypartial:
    """Sum of row i."""
    acc = zero()
    for entry in m.entries[i]:
        acc = pp_add(acc, entry)
    return acc


def terminator(m: PolyMatrix, j: int) -> Polypartial:
    """Sum of column j, i.e. initiator of the transpose."""
    return initiator(transpose(m), j)


def det_leibniz(m: PolyMatrix, max_n: int = MAX_LEIBNIZ) -> Polypartial:
    """Permutation-sum determinant, XOR over all n! diagonal products.

    Computed row by row sharing common prefixes; prefixes that multiply to
    zero are dropped (they contribute nothing to any completion).
    """
    n = m.n
    if n > max_n:
        raise DimensionTooLarge(f"dimension {n} exceeds cap {max_n}")
    acc = set()
    used = [False] * n
    entries = m.entries

    def walk(i: int, prod: Polypartial):
        if i == n:
            acc.symmetric_difference_update(prod.terms)
            return
        row = entries[i]
        for j in range(n):
            if not used[j]:
                nxt = pp_mul(prod, row[j])
                if nxt:
                    used[j] = True
                    walk(i + 1, nxt)
                    used[j] = False

    walk(0, one())
    return Polypartial.of(*acc)


def greedy_row_order(m: PolyMatrix) -> list:
    """Vertex-overlap fold order: start at row 0, then repeatedly take the
    row whose vertex set meets the processed union in the most points,
    ties to the lowest row index."""
    doms = []
    for i in range(m.n):
        pts = set()
        for entry in m.entries[i]:
            for t in entry.terms:
                pts.update(t.dom)
        doms.append(pts)
    order = []
    remaining = list(range(m.n))
    covered = set()
    while remaining:
        if not order:
            best = remaining[0]
        else:
            best = max(remaining, key=lambda i: (len(doms[i] & covered), -i))
        remaining.remove(best)
        order.append(best)
        covered |= doms[best]
    return order


def det_initiators(m: PolyMatrix, order=None) -> Polypartial:
    """Fold the product of all row sums (equal to det on canonical matrices).

    ``order`` fixes the fold order of the rows; by default the greedy
    vertex-overlap order is used.  Any order yields the same value.
    """
    n = m.n
    if order is None:
        order = greedy_row_order(m)
    else:
        order = list(order)
        if sorted(order) != list(range(n)):
            raise ValueError(f"order must be a permutation of range({n})")
    prod = one()
    for i in order:
        prod = pp_mul(prod, initiator(m, i))
        if not prod:
            break
    return prod
