"""Finite topologies as explicit set families.

Open sets of a finite poset, viewed as an Alexandroff space, are exactly
its down-sets.  This module materializes such topologies (and the
compact-open subbasis on a function poset) as families of bitmask
subsets, so equalities claimed for finite function spaces can be checked
literally.  Guards keep everything at verification scale; nothing here
is meant to scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GuardExceeded, NotATopology, NotDownSet
from .poset import Preorder, bits

DOWNSET_GUARD = 20
GENERATE_GUARD = 4096


@dataclass(frozen=True)
class SetFamily:
    """A deduplicated family of subsets of {0..ground_size-1} (as bitmasks)."""

    ground_size: int
    sets: frozenset

    @classmethod
    def of(cls, ground_size, masks):
        full = (1 << ground_size) - 1
        masks = frozenset(masks)
        if any(m & ~full for m in masks):
            raise ValueError("member outside the ground set")
        return cls(ground_size, masks)

    def __len__(self):
        return len(self.sets)

    def __contains__(self, mask):
        return mask in self.sets

    def members(self):
        return sorted(self.sets)

    @property
    def full_mask(self):
        return (1 << self.ground_size) - 1


def families_equal(a, b):
    if a.ground_size != b.ground_size:
        raise ValueError("families over different ground sets")
    return a.sets == b.sets


def is_down_set(p, mask):
    return all(p.down[x] & ~mask == 0 for x in bits(mask))


def alexandroff_topology(p, guard=DOWNSET_GUARD):
    """The family of all down-sets of P (its Alexandroff topology)."""
    if p.n > guard:
        raise GuardExceeded(
            f"down-set enumeration over {p.n} > {guard} elements", count=2**p.n
        )
    principals = [p.down[x] for x in range(p.n)]
    fam = {0}
    frontier = {0}
    while frontier:
        new = set()
        for s in frontier:
            for d in principals:
                u = s | d
                if u not in fam:
                    fam.add(u)
                    new.add(u)
        frontier = new
    return SetFamily.of(p.n, fam)


def minimal_nbhd(p, x):
    """U_x: the intersection of all open sets containing x; equals x-down."""
    return p.down_set(x)


def is_compact_shape(p):
    """max(P) finite and every element below some maximal element.

    On a finite poset both clauses hold automatically; the check spells
    out the characterization rather than adding information.
    """
    max_mask = 0
    for x in p.max_elements():
        max_mask |= 1 << x
    return all(p.up[x] & max_mask for x in range(p.n))


def hom_set_interval(c, k, u_mask):
    """[K, U] = {f in C : f(K) subseteq U}, as a set of map indices.

    U must be a down-set of the codomain.  The equality [K, U] =
    [max(K), U] is asserted on the way out.
    """
    y = c.codomain
    x = c.domain
    if not is_down_set(y, u_mask):
        raise NotDownSet("U is not a down-set of the codomain")
    k = frozenset(k)
    result = frozenset(
        i for i, a in enumerate(c.assignments)
        if all(u_mask >> a[e] & 1 for e in k)
    )
    max_k = frozenset(
        e for e in k if not any(o != e and x.lt(e, o) for o in k)
    )
    via_max = frozenset(
        i for i, a in enumerate(c.assignments)
        if all(u_mask >> a[e] & 1 for e in max_k)
    )
    if result != via_max:
        raise AssertionError("[K,U] != [max(K),U]; invariant violated")
    return result


def compact_open_subbasis(x, y, c):
    """The family {[x, y-down]} over C = C(X, Y), as map-index bitmasks."""
    masks = set()
    for e in range(x.n):
        for v in range(y.n):
            down_v = y.down[v]
            m = 0
            for i, a in enumerate(c.assignments):
                if down_v >> a[e] & 1:
                    m |= 1 << i
            masks.add(m)
    if x.n == 0:
        masks = set()
    return SetFamily.of(len(c.assignments), masks)


def generate_topology(sub, guard=GENERATE_GUARD):
    """Close a subbasis under pairwise intersection and union.

    The empty set and the full ground set are adjoined.  On a finite
    ground set this yields the generated topology.
    """
    if sub.ground_size > guard:
        raise GuardExceeded(
            f"ground size {sub.ground_size} exceeds guard {guard}",
            count=sub.ground_size,
        )
    fam = set(sub.sets)
    fam.add(0)
    fam.add(sub.full_mask)
    while True:
        new = set()
        members = list(fam)
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                x = a & b
                if x not in fam:
                    new.add(x)
                x = a | b
                if x not in fam:
                    new.add(x)
        if not new:
            return SetFamily.of(sub.ground_size, fam)
        fam |= new


def specialization_order(t):
    """The specialization preorder of a topology: x <= y iff every open
    set containing y contains x (equivalently y lies in cl{x})."""
    if not families_equal(generate_topology(t, guard=max(t.ground_size, 1)), t):
        raise NotATopology("family is not closed under union/intersection")
    n = t.ground_size
    full = t.full_mask
    min_open = [full] * n
    for m in t.sets:
        for y in bits(m):
            min_open[y] &= m
    rel = [0] * n
    for x in range(n):
        for y in range(n):
            if min_open[y] >> x & 1:
                rel[x] |= 1 << y
    return Preorder([str(i) for i in range(n)], rel)
