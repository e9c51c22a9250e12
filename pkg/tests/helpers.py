"""Shared oracles and enumeration utilities for the test suite."""

import itertools
import random

from finspace.homotopy import are_isomorphic
from finspace.poset import Poset


def all_labeled_posets(n):
    """All posets on n elements whose order respects id order.

    Every finite poset has a linear extension, so every isomorphism class
    appears at least once.  Enumerates subsets of the strict upper
    triangle and keeps the transitively closed ones.
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    labels = [f"e{i}" for i in range(n)]
    out = []
    for mask in range(1 << len(pairs)):
        rel = set(pairs[k] for k in range(len(pairs)) if mask >> k & 1)
        if all((a, c) in rel
               for (a, b) in rel for (b2, c) in rel if b2 == b):
            out.append(Poset.from_covers(
                labels, [(labels[a], labels[b]) for a, b in rel]))
    return out


def posets_up_to_iso(n):
    """One representative per isomorphism class of n-element posets."""
    reps = []
    for p in all_labeled_posets(n):
        if not any(are_isomorphic(p, q) for q in reps):
            reps.append(p)
    return reps


def random_height1_poset(rng, max_size):
    """A random poset of height <= 1 (bipartite covers), size >= 1."""
    n = rng.randint(1, max_size)
    n_min = rng.randint(1, n)
    labels = [f"v{i}" for i in range(n)]
    covers = []
    for i in range(n_min, n):
        for j in range(n_min):
            if rng.random() < 0.4:
                covers.append((f"v{j}", f"v{i}"))
    return Poset.from_covers(labels, covers)


def brute_force_down_sets(p):
    """All down-sets by filtering every subset (independent oracle)."""
    out = set()
    for mask in range(1 << p.n):
        if all(p.down[x] & ~mask == 0 for x in range(p.n) if mask >> x & 1):
            out.add(mask)
    return out


def brute_force_monotone(x, y):
    """All monotone assignment tuples by filtering every function."""
    out = []
    for a in itertools.product(range(y.n), repeat=x.n):
        if all(y.leq(a[i], a[j]) for i in range(x.n) for j in range(x.n)
               if x.leq(i, j)):
            out.append(a)
    return out


def transitive_closure_oracle(n, pairs):
    """Triple-scan closure of a strict relation (independent oracle)."""
    rel = set(pairs)
    changed = True
    while changed:
        changed = False
        for (a, b) in list(rel):
            for (b2, c) in list(rel):
                if b2 == b and (a, c) not in rel and a != c:
                    rel.add((a, c))
                    changed = True
    return rel
