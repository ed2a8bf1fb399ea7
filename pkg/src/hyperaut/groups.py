"""Group-level drivers: automorphism groups, isomorphism sets, kernels.

``aut`` computes the determinant of the block canonical matrix and reads
the group order off it symbolically (every determinant term has the
singular set as its domain, and distinct equal-domain partials have
disjoint classes).  Explicit elements are expanded only on demand, so
hypergraphs with huge free symmetry stay representable.

The kernel is the subgroup fixing every edge setwise.  For graphs it is
classified: the product of the symmetries of the *radicals* (edges both
of whose endpoints have degree one), extended by the full symmetry of the
edge-free points when the graph is not spanning.  Other hypergraphs fall
back to enumeration over the singular points.

``quotient_embedding`` sends each automorphism to the permutation it
induces on edge indices; its kernel is exactly the kernel subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from math import factorial

from .errors import ArityMismatch, ExpansionTooLarge, NotAGraph, NotAnAutomorphism
from .matrix import (
    MAX_ARITY,
    MAX_LEIBNIZ,
    Hypergraph,
    block_matrix,
    canonical_transformation,
    det_initiators,
    det_leibniz,
)
from .partials import (
    MAX_EXPANSION,
    ZERO,
    Perm,
    apply_edge,
    compose,
    identity_perm,
    invert,
    transversal,
)
from .ring import Polypartial, pp_eval, pp_order, zero


def _check_group(perms: frozenset, m: int) -> None:
    """Sanity-check an expanded element set; full check at desk scale."""
    if identity_perm(m) not in perms:
        raise AssertionError("expanded automorphism set misses the identity")
    if any(invert(p) not in perms for p in perms):
        raise AssertionError("expanded automorphism set is not inverse-closed")
    if len(perms) <= 1024:
        if not all(compose(p, q) in perms for p in perms for q in perms):
            raise AssertionError("expanded automorphism set is not closed")


@dataclass
class KernelInfo:
    """The edge-fixing subgroup, with its graph classification when known."""

    elements: frozenset
    order: int
    radical_edges: tuple | None  # None when the hypergraph is not a graph


@dataclass
class AutResult:
    """Automorphism group of a hypergraph, held symbolically.

    ``order`` is exact; ``elements()`` expands the determinant's classes
    (cap-guarded) and ``kernel_info()`` computes the edge-fixing subgroup.
    """

    hypergraph: Hypergraph
    determinant: Polypartial
    singular: frozenset
    order: int
    _elements: frozenset | None = field(default=None, repr=False)
    _kernel: KernelInfo | None = field(default=None, repr=False)

    def elements(self, max_expand: int = MAX_EXPANSION) -> frozenset:
        if self._elements is None:
            m = self.hypergraph.ground.size
            perms = pp_eval(self.determinant, m, max_expand)
            if len(perms) != self.order:
                raise AssertionError("expanded size disagrees with symbolic order")
            _check_group(perms, m)
            self._elements = perms
        return self._elements

    def kernel_info(self, max_expand: int = MAX_EXPANSION) -> KernelInfo:
        if self._kernel is None:
            g = self.hypergraph
            elems = kernel(g, max_expand)
            rads = None
            if g.edges and all(len(e) == 2 for e in g.edges):
                rads = tuple(radicals(g))
            self._kernel = KernelInfo(elems, len(elems), rads)
        return self._kernel


def aut(
    g: Hypergraph,
    engine: str = "initiators",
    max_arity: int = MAX_ARITY,
    max_leibniz: int = MAX_LEIBNIZ,
    row_order=None,
) -> AutResult:
    """Automorphism group via the block canonical matrix determinant."""
    mat = block_matrix(g, max_arity)
    if engine == "leibniz":
        det = det_leibniz(mat, max_leibniz)
    elif engine == "initiators":
        det = det_initiators(mat, row_order)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    singular = g.singular_set()
    expected_dom = tuple(sorted(singular))
    if any(t.dom != expected_dom for t in det.terms):
        raise AssertionError("determinant term domain differs from singular set")
    order = pp_order(det, len(singular), g.ground.size)
    return AutResult(g, det, singular, order)


@dataclass
class IsoResult:
    """Isomorphism set between two hypergraphs, held symbolically."""

    source: Hypergraph
    target: Hypergraph
    determinant: Polypartial
    order: int
    _elements: frozenset | None = field(default=None, repr=False)

    def __bool__(self):
        return self.order > 0

    def elements(self, max_expand: int = MAX_EXPANSION) -> frozenset:
        """All edge-family-preserving bijections, expanded and verified."""
        if self._elements is None:
            m = self.source.ground.size
            bijections = pp_eval(self.determinant, m, max_expand)
            if len(bijections) != self.order:
                raise AssertionError("expanded size disagrees with symbolic order")
            targets = set(self.target.edges)
            for b in bijections:
                if {apply_edge(b, e) for e in self.source.edges} != targets:
                    raise AssertionError("expanded bijection does not carry the edges")
            self._elements = bijections
        return self._elements


def iso(
    g1: Hypergraph,
    g2: Hypergraph,
    engine: str = "initiators",
    max_arity: int = MAX_ARITY,
    max_leibniz: int = MAX_LEIBNIZ,
) -> IsoResult:
    """Isomorphism set via the canonical transformation determinant."""
    matrix = canonical_transformation(g1, g2, max_arity)
    if matrix is ZERO:
        return IsoResult(g1, g2, zero(), 0)
    if engine == "leibniz":
        det = det_leibniz(matrix, max_leibniz)
    elif engine == "initiators":
        det = det_initiators(matrix)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    singular = g1.singular_set()
    expected_dom = tuple(sorted(singular))
    if any(t.dom != expected_dom for t in det.terms):
        raise AssertionError("determinant term domain differs from singular set")
    order = pp_order(det, len(singular), g1.ground.size) if det else 0
    return IsoResult(g1, g2, det, order)


def radicals(g: Hypergraph) -> list:
    """Edges both of whose endpoints lie in no other edge (graphs only)."""
    if any(len(e) != 2 for e in g.edges):
        raise NotAGraph("radicals are classified for 2-homogeneous hypergraphs")
    return [e for e in g.edges if all(g.degree(x) == 1 for x in e)]


def _free_points(g: Hypergraph) -> list:
    singular = g.singular_set()
    return [x for x in range(g.ground.size) if x not in singular]


def kernel(g: Hypergraph, max_expand: int = MAX_EXPANSION) -> frozenset:
    """All permutations fixing every edge setwise (free points move freely)."""
    m = g.ground.size
    free = _free_points(g)
    if g.edges and all(len(e) == 2 for e in g.edges):
        core = _kernel_from_radicals(g, m, free, max_expand)
    else:
        core = _kernel_by_enumeration(g, m, free, max_expand)
    return core


def _extend_by_free(fixed_maps, free, m, max_expand) -> frozenset:
    """Cross a set of singular-point maps with every free-point shuffle."""
    total = len(fixed_maps) * factorial(len(free))
    if total > max_expand:
        raise ExpansionTooLarge(f"kernel has {total} elements, cap is {max_expand}")
    out = set()
    for base in fixed_maps:
        for assignment in permutations(free):
            perm = list(base)
            for src, dst in zip(free, assignment):
                perm[src] = dst
            out.add(tuple(perm))
    return frozenset(out)


def _kernel_from_radicals(g, m, free, max_expand) -> frozenset:
    rads = radicals(g)
    maps = [identity_perm(m)]
    for x, y in rads:
        swapped = []
        for base in maps:
            perm = list(base)
            perm[x], perm[y] = perm[y], perm[x]
            swapped.append(tuple(perm))
        maps.extend(swapped)
        if len(maps) * factorial(len(free)) > max_expand:
            raise ExpansionTooLarge(f"kernel exceeds cap {max_expand}")
    return _extend_by_free(maps, free, m, max_expand)


def _kernel_by_enumeration(g, m, free, max_expand) -> frozenset:
    singular = sorted(g.singular_set())
    if factorial(len(singular)) > max_expand:
        raise ExpansionTooLarge(
            f"kernel sweep over {len(singular)}! singular arrangements exceeds cap"
        )
    edges = g.edges
    fixed = []
    for assignment in permutations(singular):
        perm = list(range(m))
        for src, dst in zip(singular, assignment):
            perm[src] = dst
        perm = tuple(perm)
        if all(apply_edge(perm, e) == e for e in edges):
            fixed.append(perm)
    return _extend_by_free(fixed, free, m, max_expand)


def stabilizer(g: Hypergraph, i: int, max_expand: int = MAX_EXPANSION) -> frozenset:
    """All permutations fixing edge i setwise."""
    return coset(g, i, i, max_expand)


def coset(g: Hypergraph, i: int, j: int, max_expand: int = MAX_EXPANSION) -> frozenset:
    """All permutations carrying edge i onto edge j.

    Built literally as the transversal composed with the stabilizer of
    edge i; equal to the class sum of the (i, j) edge bracket.
    """
    m = g.ground.size
    a, b = g.edges[i], g.edges[j]
    if len(a) != len(b):
        raise ArityMismatch(f"|A_i|={len(a)} but |A_j|={len(b)}")
    k = len(a)
    count = factorial(k) * factorial(m - k)
    if count > max_expand:
        raise ExpansionTooLarge(f"coset has {count} permutations, cap is {max_expand}")
    sigma = transversal(a, b, m)
    rest = [x for x in range(m) if x not in a]
    out = set()
    for inside in permutations(a):
        for outside in permutations(rest):
            perm = list(range(m))
            for src, dst in zip(a, inside):
                perm[src] = dst
            for src, dst in zip(rest, outside):
                perm[src] = dst
            out.add(compose(sigma, tuple(perm)))
    return frozenset(out)


def quotient_embedding(g: Hypergraph, elements) -> frozenset:
    """Image of the edge-index action: one index permutation per element.

    Raises NotAnAutomorphism if any element moves an edge outside the
    family.  The map is a homomorphism whose kernel is the edge-fixing
    subgroup, so the image size is |elements| / |kernel|.
    """
    index = {e: i for i, e in enumerate(g.edges)}
    out = set()
    for perm in elements:
        images = []
        for e in g.edges:
            target = apply_edge(perm, e)
            if target not in index:
                raise NotAnAutomorphism(f"{perm} maps edge {e} outside the family")
            images.append(index[target])
        out.add(tuple(images))
    return frozenset(out)


def edge_action(g: Hypergraph, perm: Perm) -> tuple:
    """The edge-index permutation induced by one automorphism."""
    (result,) = quotient_embedding(g, [perm])
    return result
