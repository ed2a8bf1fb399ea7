"""Partial injections over a finite ground set, and their join calculus.

A *partial* is an injective map from a p-subset of the ground points into
the ground points (possibly of a second ground set, for isomorphism work).
Points are integer indices into a :class:`GroundSet`; which set the domain
and image index is positional, so the same calculus serves both the
one-set case and the two-set case.

Two partials are *uniform* when they disagree nowhere: every shared domain
point has the same image in both, and every shared image point has the
same preimage.  Uniform partials have a unique minimum common extension,
their *join*; non-uniform pairs join to the distinguished :data:`ZERO`.
The empty partial joins with everything, which is exactly why it acts as
the multiplicative unit of the ring built on top of this module.

Full permutations are plain image tuples: ``perm[i]`` is the image of
point ``i``.  The class of a partial is the set of permutations extending
it, of size ``(m - p)!``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from math import factorial

from .errors import (
    DuplicateDomain,
    DuplicateImage,
    ExpansionTooLarge,
    LengthMismatch,
    SizeMismatch,
)

Perm = tuple  # full permutation/bijection as an image tuple

#: Expanding a class with more permutations than this raises ExpansionTooLarge.
MAX_EXPANSION = factorial(10)


class _Zero:
    """Distinguished annihilator returned by non-uniform joins.

    Deliberately not a Partial: the *empty* partial is the ring unit (its
    class is all of S_X), so zero must live outside the partial order.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "0"

    def __bool__(self):
        return False


ZERO = _Zero()


@dataclass(frozen=True)
class GroundSet:
    """An ordered finite vertex universe.

    Labels are sorted ascending at construction and that order is used
    everywhere an order matters; points are indices into ``labels``.
    """

    labels: tuple = ()
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        labels = tuple(sorted(self.labels))
        if len(set(labels)) != len(labels):
            raise ValueError(f"ground-set labels not distinct: {self.labels!r}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(labels)})

    @classmethod
    def of_size(cls, m: int) -> "GroundSet":
        """Ground set with integer labels 1..m."""
        return cls(tuple(range(1, m + 1)))

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown label {label!r}") from None

    def label(self, point: int):
        return self.labels[point]


class Partial:
    """An injective map between point sets, stored as sorted (dom, img) pairs.

    Immutable value; construct through :func:`make_partial` unless the
    pairs are already canonical (sorted by domain, both sides injective).
    """

    __slots__ = ("pairs", "_hash")

    def __init__(self, pairs: tuple):
        self.pairs = pairs
        self._hash = hash(pairs)

    @property
    def dom(self) -> tuple:
        return tuple(d for d, _ in self.pairs)

    @property
    def img(self) -> tuple:
        return tuple(i for _, i in self.pairs)

    @property
    def size(self) -> int:
        """p, the number of points the partial moves information about."""
        return len(self.pairs)

    def sort_key(self) -> tuple:
        return (self.dom, self.img)

    def __eq__(self, other):
        return isinstance(other, Partial) and self.pairs == other.pairs

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if not self.pairs:
            return "Partial()"
        body = ", ".join(f"{d}->{i}" for d, i in self.pairs)
        return f"Partial({body})"


EMPTY_PARTIAL = Partial(())


def make_partial(domain, image) -> Partial:
    """Build the partial mapping ``domain[t] -> image[t]`` positionally."""
    domain = tuple(domain)
    image = tuple(image)
    if len(domain) != len(image):
        raise LengthMismatch(f"domain has {len(domain)} points, image {len(image)}")
    if len(set(domain)) != len(domain):
        raise DuplicateDomain(f"domain lists a point twice: {domain}")
    if len(set(image)) != len(image):
        raise DuplicateImage(f"image lists a point twice: {image}")
    return Partial(tuple(sorted(zip(domain, image))))


def is_uniform(p1: Partial, p2: Partial) -> bool:
    """True iff the two partials collide nowhere (domain- and image-side)."""
    return _join_pairs(p1.pairs, p2.pairs) is not None


def _join_pairs(pa: tuple, pb: tuple):
    """Merged pair tuple of two partials, or None on any collision."""
    fwd = {}
    rev = {}
    for d, i in pa:
        fwd[d] = i
        rev[i] = d
    for d, i in pb:
        have = fwd.get(d)
        if have is None:
            if rev.get(i, d) != d:  # image already taken by another point
                return None
            fwd[d] = i
            rev[i] = d
        elif have != i:
            return None
    if len(fwd) == len(pa):
        return pa
    return tuple(sorted(fwd.items()))


def join(p1: Partial, p2: Partial):
    """Minimum common extension of two partials, or ZERO if they collide.

    The join's domain/image are the unions of the operands'; it is the
    least element of the restriction order dominating both.
    """
    merged = _join_pairs(p1.pairs, p2.pairs)
    if merged is None:
        return ZERO
    if merged is p1.pairs:
        return p1
    return Partial(merged)


def leq(p1: Partial, p2: Partial) -> bool:
    """Restriction order: p2 can restrict to p1."""
    if len(p1.pairs) > len(p2.pairs):
        return False
    bigger = dict(p2.pairs)
    return all(bigger.get(d) == i for d, i in p1.pairs)


def _sorted_matching(src, dst) -> list:
    """Pair the t-th smallest of src with the t-th smallest of dst."""
    return list(zip(sorted(src), sorted(dst)))


def extend_to_permutation(p: Partial, m: int) -> Perm:
    """A full permutation of ``range(m)`` restricting to ``p``.

    Deterministic: unmatched image points are sent back onto unmatched
    domain points in ascending order, everything else is fixed.  Callers
    must not rely on any other extension existing.
    """
    out = list(range(m))
    dom = set(p.dom)
    img = set(p.img)
    for d, i in p.pairs:
        out[d] = i
    for src, dst in _sorted_matching(img - dom, dom - img):
        out[src] = dst
    return tuple(out)


def transversal(a, b, m: int) -> Perm:
    """The involution carrying point set ``a`` onto point set ``b``.

    Matches the symmetric differences in ascending order and swaps them
    pairwise; points in both sets (or neither) stay fixed.
    """
    a = set(a)
    b = set(b)
    if len(a) != len(b):
        raise SizeMismatch(f"|A|={len(a)} but |B|={len(b)}")
    out = list(range(m))
    for x, y in _sorted_matching(a - b, b - a):
        out[x] = y
        out[y] = x
    return tuple(out)


def enumerate_class(p: Partial, m: int, max_expand: int = MAX_EXPANSION) -> frozenset:
    """All full permutations/bijections of ``range(m)`` extending ``p``.

    Exactly ``(m - p)!`` of them; raises ExpansionTooLarge above the cap.
    """
    free_dom = [x for x in range(m) if x not in set(p.dom)]
    free_img = [y for y in range(m) if y not in set(p.img)]
    count = factorial(len(free_dom))
    if count > max_expand:
        raise ExpansionTooLarge(f"class has {count} permutations, cap is {max_expand}")
    base = list(range(m))
    for d, i in p.pairs:
        base[d] = i
    out = set()
    for assignment in permutations(free_img):
        perm = base[:]
        for d, i in zip(free_dom, assignment):
            perm[d] = i
        out.add(tuple(perm))
    return frozenset(out)


# --- plain permutation helpers ----------------------------------------------

def identity_perm(m: int) -> Perm:
    return tuple(range(m))


def compose(p: Perm, q: Perm) -> Perm:
    """p after q: ``compose(p, q)[x] == p[q[x]]``."""
    return tuple(p[x] for x in q)


def invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for x, y in enumerate(p):
        out[y] = x
    return tuple(out)


def apply_edge(p: Perm, edge) -> tuple:
    """Image of a vertex set under a permutation, as a sorted tuple."""
    return tuple(sorted(p[x] for x in edge))


def restriction(p: Perm, points) -> Partial:
    """The partial obtained by restricting a full permutation to ``points``."""
    return Partial(tuple(sorted((x, p[x]) for x in points)))


def is_group(perms, m: int) -> bool:
    """True iff a finite permutation set is a subgroup of S_m."""
    if identity_perm(m) not in perms:
        return False
    if any(invert(p) not in perms for p in perms):
        return False
    return all(compose(p, q) in perms for p in perms for q in perms)
