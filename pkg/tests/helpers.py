"""Shared fixtures and generators for the test suite.

The triangular prism (two triangles joined by three rungs) is the main
hand-checked instance: its automorphism group has order 12 and every
intermediate product of its row-sum fold is known explicitly.
"""

from __future__ import annotations

import random
from itertools import combinations

from hyperaut import Hypergraph, Partial, Polypartial, make_partial

PRISM_EDGES = [(1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6), (4, 5), (5, 6), (4, 6)]

# The 12 prism automorphisms as 0-based image tuples (hand-checked: the
# rotations/reflections of the two triangles, the swap of the triangles,
# and their compositions).
PRISM_AUT = frozenset(
    {
        (0, 1, 2, 3, 4, 5),
        (1, 0, 2, 4, 3, 5),
        (2, 1, 0, 5, 4, 3),
        (1, 2, 0, 4, 5, 3),
        (0, 2, 1, 3, 5, 4),
        (3, 4, 5, 0, 1, 2),
        (5, 4, 3, 2, 1, 0),
        (4, 5, 3, 1, 2, 0),
        (5, 3, 4, 2, 0, 1),
        (3, 5, 4, 0, 2, 1),
        (4, 3, 5, 1, 0, 2),
        (2, 0, 1, 5, 3, 4),
    }
)


def prism() -> Hypergraph:
    return Hypergraph.from_labels(6, PRISM_EDGES)


def relabel(g: Hypergraph, mapping: dict) -> Hypergraph:
    """New hypergraph with every vertex label pushed through ``mapping``."""
    labels = [mapping[lab] for lab in g.ground.labels]
    edges = [tuple(mapping[lab] for lab in g.edge_labels(i)) for i in range(g.n)]
    return Hypergraph.from_labels(labels, edges)


def random_graph(m: int, rng: random.Random, p: float = 0.5) -> Hypergraph:
    edges = [e for e in combinations(range(1, m + 1), 2) if rng.random() < p]
    return Hypergraph.from_labels(m, edges)


def random_spanning_graph(m: int, rng: random.Random) -> Hypergraph:
    while True:
        g = random_graph(m, rng)
        if g.edges and g.is_spanning():
            return g


def random_uniform_hypergraph(m: int, k: int, count: int, rng: random.Random) -> Hypergraph:
    pool = list(combinations(range(1, m + 1), k))
    return Hypergraph.from_labels(m, rng.sample(pool, count))


def random_mixed_hypergraph(m: int, rng: random.Random) -> Hypergraph:
    """At least one edge in each of the 1-, 2- and 3-sections."""
    singles = [(x,) for x in range(1, m + 1)]
    pairs = list(combinations(range(1, m + 1), 2))
    triples = list(combinations(range(1, m + 1), 3))
    edges = (
        rng.sample(singles, rng.randint(1, 2))
        + rng.sample(pairs, rng.randint(1, min(4, len(pairs))))
        + rng.sample(triples, rng.randint(1, min(3, len(triples))))
    )
    return Hypergraph.from_labels(m, edges)


def random_partial(m: int, rng: random.Random, max_size: int | None = None) -> Partial:
    top = m if max_size is None else min(m, max_size)
    p = rng.randint(0, top)
    dom = rng.sample(range(m), p)
    img = rng.sample(range(m), p)
    return make_partial(dom, img)


def random_polypartial(m: int, rng: random.Random, max_terms: int = 3) -> Polypartial:
    terms = [random_partial(m, rng, max_size=3) for _ in range(rng.randint(0, max_terms))]
    return Polypartial.of(*terms)


def graphs_on_four_vertices():
    """All 64 graphs on vertex labels 1..4, one per edge subset."""
    pool = list(combinations(range(1, 5), 2))
    for mask in range(64):
        yield Hypergraph.from_labels(4, [pool[i] for i in range(6) if mask >> i & 1])


def acceptance_graph_instances():
    """The fixed instance set shared by the oracle-equivalence criteria:
    every graph on 4 vertices plus 200 seeded random graphs on 5-6."""
    instances = list(graphs_on_four_vertices())
    rng = random.Random(50)
    for _ in range(200):
        instances.append(random_graph(rng.choice([5, 6]), rng))
    return instances
