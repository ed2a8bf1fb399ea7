"""The ring of partials: characteristic-2 sums of partial injections.

A *polypartial* is a duplicate-free, canonically ordered sum of partials.
Addition is symmetric difference of term sets (XOR, so a + a = 0) and
multiplication distributes joins over the terms: two partials multiply to
their join when uniform and annihilate otherwise.  The empty sum is 0 and
the single empty partial is 1 (its class is every permutation).

Every operation renormalizes, so equal ring elements are equal Python
values; all values are immutable and safe to share between threads.

Nested terms are deliberately kept separate: ``{p} + {q}`` with p < q in
the restriction order stays a two-term element, because the classes of p
and q are distinct ring citizens even though one contains the other.

Evaluation sends a polypartial to an explicit permutation set, summing
classes by symmetric difference.  It is additive by construction; no
general multiplicativity is claimed, but the determinant pipeline only
ever multiplies row sums of canonical matrices, where evaluation does
distribute over products (the tests pin this down).
"""

from __future__ import annotations

from math import factorial

from .errors import MixedDomainSizes
from .partials import (
    EMPTY_PARTIAL,
    MAX_EXPANSION,
    Partial,
    ZERO,
    _join_pairs,
    enumerate_class,
)


def _normalize(terms) -> tuple:
    """Cancel duplicate terms mod 2 and sort the survivors canonically."""
    acc = set()
    for t in terms:
        if t in acc:
            acc.discard(t)
        else:
            acc.add(t)
    return tuple(sorted(acc, key=Partial.sort_key))


class Polypartial:
    """A canonical XOR-sum of partials; the ring element type.

    Construct with :meth:`of` (normalizing) or the module constants
    :func:`zero` / :func:`one`; arithmetic goes through ``+`` and ``*``.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: tuple, _normalized: bool = False):
        if not _normalized:
            terms = _normalize(terms)
        self.terms = terms
        self._hash = hash(terms)

    @classmethod
    def of(cls, *parts) -> "Polypartial":
        """Polypartial with the given partials as terms (pairs cancel)."""
        return cls(tuple(parts))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return isinstance(other, Polypartial) and self.terms == other.terms

    def __hash__(self):
        return self._hash

    def __add__(self, other):
        return pp_add(self, other)

    def __mul__(self, other):
        return pp_mul(self, other)

    def __repr__(self):
        if not self.terms:
            return "0"
        if self.terms == (EMPTY_PARTIAL,):
            return "1"
        return " + ".join(repr(t) for t in self.terms)


_PP_ZERO = Polypartial((), _normalized=True)
_PP_ONE = Polypartial((EMPTY_PARTIAL,), _normalized=True)


def zero() -> Polypartial:
    """The ring 0 (empty sum)."""
    return _PP_ZERO


def one() -> Polypartial:
    """The ring 1 (the empty partial, whose class is all of S_X)."""
    return _PP_ONE


def from_partial(p) -> Polypartial:
    """Single-term polypartial, mapping the join ZERO to the ring 0."""
    if p is ZERO:
        return _PP_ZERO
    return Polypartial((p,), _normalized=True)


def pp_add(a: Polypartial, b: Polypartial) -> Polypartial:
    """Characteristic-2 addition: symmetric difference of term sets."""
    sa = set(a.terms)
    sa.symmetric_difference_update(b.terms)
    return Polypartial(tuple(sorted(sa, key=Partial.sort_key)), _normalized=True)


def pp_mul(a: Polypartial, b: Polypartial) -> Polypartial:
    """Distribute joins over all term pairs, cancelling mod 2.

    Non-uniform pairs contribute nothing; the result is renormalized, so
    it does not depend on the order the pairs are visited in.
    """
    acc = set()
    for ta in a.terms:
        pa = ta.pairs
        for tb in b.terms:
            merged = _join_pairs(pa, tb.pairs)
            if merged is not None:
                p = Partial(merged)
                if p in acc:
                    acc.discard(p)
                else:
                    acc.add(p)
    return Polypartial(tuple(sorted(acc, key=Partial.sort_key)), _normalized=True)


def pp_eval(a: Polypartial, m: int, max_expand: int = MAX_EXPANSION) -> frozenset:
    """Expand into explicit permutations: XOR of the terms' classes."""
    out = set()
    for t in a.terms:
        out.symmetric_difference_update(enumerate_class(t, m, max_expand))
    return frozenset(out)


def pp_order(a: Polypartial, singular_size: int, m: int) -> int:
    """Class count ``len(terms) * (m - singular_size)!`` without expanding.

    Only valid when every term has the *same* domain set (then distinct
    terms have disjoint classes); determinants of canonical matrices
    always satisfy this, with the singular set as the common domain.
    """
    if not a.terms:
        return 0
    doms = {t.dom for t in a.terms}
    if len(doms) != 1 or len(next(iter(doms))) != singular_size:
        raise MixedDomainSizes(
            "order readout needs all terms to share one domain of the stated size"
        )
    return len(a.terms) * factorial(m - singular_size)
