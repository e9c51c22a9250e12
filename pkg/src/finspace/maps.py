"""Order-preserving maps and the function poset C(X, Y).

C(X, Y) carries the pointwise order f <= g iff f(x) <= g(x) for all x.
For finite X, Y homotopy of maps is the same as lying in one component
of the comparability graph of this order, and every homotopy is realized
by a finite comparability chain; homotopies are therefore represented
exclusively as such chains.  (For infinite spaces this representation is
incomplete; nothing here is correct beyond finite inputs.)
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import GuardExceeded
from .poset import Poset, bits

DEFAULT_MAP_GUARD = 10**6


@dataclass(frozen=True)
class MonotoneMap:
    """An order-preserving map, stored as an assignment vector."""

    domain: Poset
    codomain: Poset
    assignment: tuple

    def __post_init__(self):
        if len(self.assignment) != self.domain.n:
            raise ValueError("assignment length does not match domain size")
        for a, b in self.domain.covers:
            if not self.codomain.leq(self.assignment[a], self.assignment[b]):
                raise ValueError(
                    f"not monotone: {a} <= {b} but images are incomparable-or-reversed"
                )

    def __call__(self, x):
        return self.assignment[x]

    def is_identity(self):
        return self.domain is self.codomain and all(
            v == i for i, v in enumerate(self.assignment)
        )

    def is_constant(self):
        return len(set(self.assignment)) <= 1 and self.domain.n > 0

    def image(self):
        return frozenset(self.assignment)


def identity(p):
    return MonotoneMap(p, p, tuple(range(p.n)))


def constant(p, codomain, y):
    return MonotoneMap(p, codomain, (y,) * p.n)


def compose(f, g):
    """f after g."""
    if g.codomain is not f.domain and not g.codomain.same_order(f.domain):
        raise ValueError("compose: domain/codomain mismatch")
    return MonotoneMap(g.domain, f.codomain, tuple(f.assignment[v] for v in g.assignment))


def _iter_assignments(x, y):
    """Yield all monotone assignment tuples X -> Y in lexicographic order."""
    n = x.n
    if n == 0:
        yield ()
        return
    if y.n == 0:
        return
    # constraints from already-assigned elements (ids < current)
    pred_le = [x.down[i] & ((1 << i) - 1) for i in range(n)]
    pred_ge = [x.up[i] & ((1 << i) - 1) for i in range(n)]
    full = y.full_mask
    assign = [0] * n

    def backtrack(i):
        if i == n:
            yield tuple(assign)
            return
        allowed = full
        for j in bits(pred_le[i]):
            allowed &= y.up[assign[j]]
        for j in bits(pred_ge[i]):
            allowed &= y.down[assign[j]]
        for v in bits(allowed):
            assign[i] = v
            yield from backtrack(i + 1)

    yield from backtrack(0)


class FunctionPoset:
    """All monotone maps X -> Y under the pointwise order.

    maps are kept in lexicographic order of their assignment vectors, so
    indices are reproducible.  The strict pointwise order is held as
    per-map bitmasks; the explicit Poset over map indices (``order``) is
    built lazily since only the topology checks need its cover relation.
    """

    def __init__(self, domain, codomain, assignments):
        self.domain = domain
        self.codomain = codomain
        self.assignments = assignments
        self._index = {a: i for i, a in enumerate(assignments)}
        self._strict_up = self._build_reach()
        self._strict_down = self._transpose(self._strict_up)
        self._order = None

    def _build_reach(self):
        m = len(self.assignments)
        y = self.codomain
        nx = self.domain.n
        # eq[x][v] = mask of maps sending x to v
        eq = [[0] * y.n for _ in range(nx)]
        for j, a in enumerate(self.assignments):
            bj = 1 << j
            for x, v in enumerate(a):
                eq[x][v] |= bj
        geq = [[0] * y.n for _ in range(nx)]
        for x in range(nx):
            for v in range(y.n):
                acc = 0
                for w in bits(y.up[v]):
                    acc |= eq[x][w]
                geq[x][v] = acc
        full = (1 << m) - 1
        reach = []
        for i, a in enumerate(self.assignments):
            mask = full
            for x, v in enumerate(a):
                mask &= geq[x][v]
            reach.append(mask & ~(1 << i))
        return reach

    @staticmethod
    def _transpose(reach):
        down = [0] * len(reach)
        for i, m in enumerate(reach):
            for j in bits(m):
                down[j] |= 1 << i
        return down

    @property
    def order(self):
        if self._order is None:
            labels = [f"f{i}" for i in range(len(self.assignments))]
            self._order = Poset._from_strict_reach(labels, self._strict_up)
        return self._order

    def leq(self, i, j):
        return i == j or bool(self._strict_up[i] >> j & 1)

    def comparability_mask(self, i):
        return self._strict_up[i] | self._strict_down[i]

    def components(self):
        """Partition of map indices into comparability-graph components."""
        m = len(self.assignments)
        seen = 0
        parts = []
        for s in range(m):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for x in bits(frontier):
                    nxt |= self.comparability_mask(x)
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            parts.append(frozenset(bits(comp)))
        return parts

    def __len__(self):
        return len(self.assignments)

    def map(self, i):
        return MonotoneMap(self.domain, self.codomain, self.assignments[i])

    def index_of(self, f):
        key = f.assignment if isinstance(f, MonotoneMap) else tuple(f)
        return self._index[key]

    def identity_index(self):
        return self._index[tuple(range(self.domain.n))]

    def constant_indices(self):
        return [self._index[(y,) * self.domain.n] for y in range(self.codomain.n)
                if (y,) * self.domain.n in self._index]


def enumerate_monotone(x, y, guard=DEFAULT_MAP_GUARD):
    """The function poset C(X, Y); aborts past ``guard`` maps."""
    assignments = []
    for a in _iter_assignments(x, y):
        assignments.append(a)
        if len(assignments) > guard:
            raise GuardExceeded(
                f"more than {guard} monotone maps", count=len(assignments)
            )
    return FunctionPoset(x, y, assignments)


def count_monotone(x, y, guard=DEFAULT_MAP_GUARD):
    """Number of monotone maps X -> Y, aborting early past ``guard``."""
    c = 0
    for _ in _iter_assignments(x, y):
        c += 1
        if c > guard:
            raise GuardExceeded(f"more than {guard} monotone maps", count=c)
    return c


def _comparability_bfs(c, start, goals):
    """Shortest comparability chain in C from start to any goal index."""
    if start in goals:
        return [start]
    prev = {start: None}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in bits(c.comparability_mask(u)):
            if v not in prev:
                prev[v] = u
                if v in goals:
                    chain = [v]
                    while chain[-1] != start:
                        chain.append(prev[chain[-1]])
                    chain.reverse()
                    return chain
                queue.append(v)
    return None


def is_homotopic(c, f, g):
    """Decide homotopy of f, g in C and return a witness chain.

    Returns (True, chain) where chain is a minimal list of map indices
    f = h0 ~ h1 ~ ... ~ hk = g, or (False, None).
    """
    i = f if isinstance(f, int) else c.index_of(f)
    j = g if isinstance(g, int) else c.index_of(g)
    chain = _comparability_bfs(c, i, {j})
    if chain is None:
        return False, None
    return True, chain


def homotopy_classes(c):
    """Partition of map indices into homotopy classes (graph components)."""
    return c.components()


def min_contraction_chain(x, guard=DEFAULT_MAP_GUARD):
    """Shortest comparability chain from id_X to a constant map in C(X, X).

    Returns its length (number of ~ steps), or None when X is not
    contractible (no constant map reachable from the identity).
    """
    c = enumerate_monotone(x, x, guard=guard)
    goals = set(c.constant_indices())
    if not goals:
        return None
    chain = _comparability_bfs(c, c.identity_index(), goals)
    if chain is None:
        return None
    return len(chain) - 1


def has_fpp(x, guard=DEFAULT_MAP_GUARD):
    """Fixed point property of X.

    Returns (True, None) if every monotone self-map has a fixed point,
    else (False, witness) with a fixed-point-free MonotoneMap.
    """
    c = 0
    for a in _iter_assignments(x, x):
        c += 1
        if c > guard:
            raise GuardExceeded(f"more than {guard} self-maps", count=c)
        if all(a[i] != i for i in range(x.n)):
            return False, MonotoneMap(x, x, a)
    return True, None


@dataclass
class RetractionKind:
    """Verdict of is_retraction, with the retraction-class flags."""

    retraction: bool
    comparative: bool = False
    up: bool = False
    down: bool = False
    decomposes: bool = False

    def __bool__(self):
        return self.retraction


def is_retraction(x, r, target):
    """Check that r: X -> X retracts onto ``target`` and classify it.

    comparative: r(x) ~ x for every x; up: r >= id; down: r <= id.
    For comparative retractions also checks the up/down factorization
    r = r_d o r_u with r_u(x) = max(x, r(x)) and r_d(x) = min(x, r(x))
    along the comparability, both monotone.
    """
    target = frozenset(target)
    a = r.assignment
    if frozenset(a) != target:
        return RetractionKind(False)
    if any(a[t] != t for t in target):
        return RetractionKind(False)
    comparative = all(x.comparable(i, v) for i, v in enumerate(a))
    up = all(x.leq(i, v) for i, v in enumerate(a))
    down = all(x.leq(v, i) for i, v in enumerate(a))
    decomposes = False
    if comparative:
        ru = tuple(v if x.leq(i, v) else i for i, v in enumerate(a))
        rd = tuple(v if x.leq(v, i) else i for i, v in enumerate(a))
        try:
            fu = MonotoneMap(x, x, ru)
            fd = MonotoneMap(x, x, rd)
            decomposes = compose(fd, fu).assignment == a
        except ValueError:
            decomposes = False
    return RetractionKind(True, comparative, up, down, decomposes)
