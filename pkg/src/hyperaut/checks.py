"""Cross-checks run by the ``verify`` command on one concrete instance.

Each check pits an independent construction against the determinant
pipeline: the raw permutation sweep, literal coset enumeration, the
section decomposition, the union-of-intersections picture of the
automorphism group, the kernel classification, and the edge-index
action.  A report is a list of (name, passed, detail) rows.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import factorial

from .groups import (
    aut,
    coset,
    kernel,
    _kernel_by_enumeration,
    _free_points,
    radicals,
)
from .matrix import Hypergraph, block_matrix, det_initiators, det_leibniz, edge_bracket
from .oracle import OracleConfig, brute_aut
from .partials import MAX_EXPANSION, compose
from .ring import pp_eval


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _result(name, passed, detail=""):
    return CheckResult(name, bool(passed), detail)


def run_checks(
    g: Hypergraph,
    oracle_config: OracleConfig = OracleConfig(),
    max_expand: int = MAX_EXPANSION,
) -> list:
    """Full verification battery; raises GroundSetTooLarge above the cap."""
    m = g.ground.size
    reference = brute_aut(g, oracle_config)  # raises if the ground set is too big
    results = []

    mat = block_matrix(g)
    det_fold = det_initiators(mat)
    det_sum = det_leibniz(mat, max_n=max(mat.n, 1))
    via_ring = pp_eval(det_fold, m, max_expand)
    results.append(
        _result(
            "engines-agree",
            det_fold == det_sum and via_ring == reference,
            f"order {len(reference)}",
        )
    )

    sections = g.sections()
    section_auts = [
        pp_eval(aut(sec).determinant, m, max_expand) for sec in sections.values()
    ]
    expected = frozenset.intersection(*section_auts) if section_auts else via_ring
    results.append(_result("section-intersection", via_ring == expected))

    results.append(_result("coset-transfer", _check_coset_transfer(g, max_expand)))
    results.append(_result("bracket-equals-coset", _check_brackets(g, max_expand)))

    union, cosets_ok = _union_of_intersections(g, reference, max_expand)
    results.append(
        _result(
            "union-of-intersections",
            union == reference and cosets_ok,
            "each surviving intersection is one kernel coset",
        )
    )

    results.append(_result("kernel-classification", _check_kernel(g, max_expand)))
    results.append(
        _result(
            "edge-action-homomorphism",
            _check_edge_action(g, reference, max_expand),
        )
    )
    return results


def _same_size_pairs(g):
    for i, a in enumerate(g.edges):
        for j, b in enumerate(g.edges):
            if len(a) == len(b):
                yield i, j


def _check_coset_transfer(g, max_expand) -> bool:
    for i, j in _same_size_pairs(g):
        left = coset(g, i, j, max_expand)
        stab_j = coset(g, j, j, max_expand)
        sigma = next(iter(left))  # any representative works
        right = frozenset(compose(s, sigma) for s in stab_j)
        moved = frozenset(
            p for p in left if tuple(sorted(p[x] for x in g.edges[i])) == g.edges[j]
        )
        if left != right or moved != left:
            return False
    return True


def _check_brackets(g, max_expand) -> bool:
    m = g.ground.size
    for i, j in _same_size_pairs(g):
        bracket = edge_bracket(g.edges[i], g.edges[j])
        if pp_eval(bracket, m, max_expand) != coset(g, i, j, max_expand):
            return False
    return True


def _union_of_intersections(g, reference, max_expand):
    """Union over edge-index assignments of the coset intersections.

    Walks assignments row by row, dropping empty intersections early;
    dropped branches contribute nothing to the union.  Also confirms
    every surviving full intersection is a single kernel coset.
    """
    n = g.n
    if n == 0:
        return reference, True
    cosets = {
        (i, j): coset(g, i, j, max_expand) for i, j in _same_size_pairs(g)
    }
    kern = kernel(g, max_expand)
    union = set()
    cosets_ok = [True]

    def walk(i, used, current):
        if i == n:
            rep = next(iter(current))
            if current != {compose(rep, k) for k in kern}:
                cosets_ok[0] = False
            union.update(current)
            return
        for j in range(n):
            if j not in used and (i, j) in cosets:
                nxt = cosets[i, j] if current is None else current & cosets[i, j]
                if nxt:
                    used.add(j)
                    walk(i + 1, used, nxt)
                    used.discard(j)

    walk(0, set(), None)
    return frozenset(union), cosets_ok[0]


def _check_kernel(g, max_expand) -> bool:
    m = g.ground.size
    enumerated = _kernel_by_enumeration(g, m, _free_points(g), max_expand)
    classified = kernel(g, max_expand)
    if classified != enumerated:
        return False
    if g.edges and all(len(e) == 2 for e in g.edges):
        expected = 2 ** len(radicals(g)) * factorial(len(_free_points(g)))
        if len(classified) != expected:
            return False
    return True


def _check_edge_action(g, reference, max_expand) -> bool:
    kern = kernel(g, max_expand)
    actions = {p: _action(g, p) for p in reference}
    image = set(actions.values())
    if len(image) * len(kern) != len(reference):
        return False
    fibers = {}
    for p, a in actions.items():
        fibers.setdefault(a, set()).add(p)
    if any(len(f) != len(kern) for f in fibers.values()):
        return False
    if frozenset(fibers[_action(g, next(iter(kern)))]) != kern:
        return False
    perms = sorted(reference)
    if len(perms) ** 2 <= 400_000:
        pairs = ((p, q) for p in perms for q in perms)
    else:
        rng = random.Random(0)
        pairs = (
            (perms[rng.randrange(len(perms))], perms[rng.randrange(len(perms))])
            for _ in range(400_000)
        )
    for p, q in pairs:
        if _action(g, compose(p, q)) != compose(actions[p], actions[q]):
            return False
    return True


def _action(g, perm):
    index = {e: i for i, e in enumerate(g.edges)}
    return tuple(
        index[tuple(sorted(perm[x] for x in e))] for e in g.edges
    )
