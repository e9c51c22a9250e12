"""Beat points, comparative retractions, cores and dismantling traces.

All subspaces arising during a dismantling are recorded as element
subsets of the start poset, and every retraction step as a mapping on
original ids.  Removing beat points one by one always reaches a subspace
without beat points; since on finite inputs such a subspace admits no
nontrivial comparative retraction at all, it is the core, and cores are
unique up to order isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotABeatPoint
from .maps import MonotoneMap
from .poset import Poset, bits

REMOVE_DOWN = "remove-down-beat"
REMOVE_UP = "remove-up-beat"
BULK_DOWN = "bulk-down"
BULK_UP = "bulk-up"


def _up_beat_target(p, x, mask):
    """Smallest element of (x^ \\ {x}) within mask, or None."""
    punctured = p.up[x] & mask & ~(1 << x)
    if punctured == 0:
        return None
    for u in bits(punctured):
        if punctured & ~p.up[u] == 0:  # u below every member
            return u
    return None


def _down_beat_target(p, x, mask):
    punctured = p.down[x] & mask & ~(1 << x)
    if punctured == 0:
        return None
    for d in bits(punctured):
        if punctured & ~p.down[d] == 0:  # d above every member
            return d
    return None


def up_beat_points(p, basepoint=None, _mask=None):
    """Elements whose punctured up-set has a smallest element."""
    mask = p.full_mask if _mask is None else _mask
    out = set()
    for x in bits(mask):
        if x == basepoint:
            continue
        if _up_beat_target(p, x, mask) is not None:
            out.add(x)
    return frozenset(out)


def down_beat_points(p, basepoint=None, _mask=None):
    """Elements whose punctured down-set has a largest element."""
    mask = p.full_mask if _mask is None else _mask
    out = set()
    for x in bits(mask):
        if x == basepoint:
            continue
        if _down_beat_target(p, x, mask) is not None:
            out.add(x)
    return frozenset(out)


def beat_points(p, basepoint=None, _mask=None):
    return up_beat_points(p, basepoint, _mask) | down_beat_points(p, basepoint, _mask)


def is_core(p, basepoint=None):
    """No beat points (basepoint excluded from candidacy if given)."""
    return not beat_points(p, basepoint)


@dataclass(frozen=True)
class RetractionStep:
    """One comparative retraction in a dismantling.

    domain_elements/image_elements are subsets of the start poset;
    mapping sends each domain element to its image (identity off
    ``removed``).  targets records the absorbing element u_x or d_x for
    single-point removals.
    """

    kind: str
    domain_elements: frozenset
    removed: frozenset
    mapping: dict
    targets: dict = field(default_factory=dict)

    @property
    def image_elements(self):
        return self.domain_elements - self.removed

    def monotone_self_map(self, start):
        """The step as a self-map of ``start``, identity off the domain."""
        assign = list(range(start.n))
        for k, v in self.mapping.items():
            assign[k] = v
        return MonotoneMap(start, start, tuple(assign))

    def is_comparative(self, start):
        return all(start.comparable(k, v) for k, v in self.mapping.items())


@dataclass
class DismantlingTrace:
    """Ordered record of retraction steps from a start poset.

    composed maps every start element to its final image; final is the
    surviving subspace.  ``stabilized`` is False only when a round limit
    cut a standard sequence short.
    """

    start: Poset
    steps: list
    final: frozenset
    stabilized: bool = True

    @property
    def composed(self):
        out = {i: i for i in range(self.start.n)}
        for step in self.steps:
            for i in out:
                out[i] = step.mapping.get(out[i], out[i])
        return out

    def composed_self_map(self):
        comp = self.composed
        return MonotoneMap(self.start, self.start,
                           tuple(comp[i] for i in range(self.start.n)))

    def effective_steps(self):
        return [s for s in self.steps if s.removed]


def remove_beat_point(p, x, basepoint=None, _mask=None, prefer_down=True):
    """The one-point comparative retraction sending x to d_x or u_x."""
    mask = p.full_mask if _mask is None else _mask
    domain = frozenset(bits(mask))
    if x == basepoint or x not in domain:
        raise NotABeatPoint(f"element {x} not removable")
    d = _down_beat_target(p, x, mask)
    u = _up_beat_target(p, x, mask)
    if prefer_down and d is not None:
        kind, target = REMOVE_DOWN, d
    elif u is not None:
        kind, target = REMOVE_UP, u
    elif d is not None:
        kind, target = REMOVE_DOWN, d
    else:
        raise NotABeatPoint(f"element {p.labels[x]!r} is not a beat point")
    mapping = {i: i for i in domain}
    mapping[x] = target
    return RetractionStep(kind, domain, frozenset({x}), mapping, {x: target})


@dataclass
class CoreResult:
    """Core subspace, its Poset form, and the dismantling that produced it."""

    core: Poset
    core_elements: frozenset
    relabel: dict  # original id -> id in core
    trace: DismantlingTrace

    @property
    def is_point(self):
        return self.core.n == 1


def core(p, basepoint=None):
    """Dismantle to the core by removing beat points one by one.

    Policy: at each step remove the lowest-id beat point, preferring its
    down-beat retraction.  Deterministic; the resulting core is unique
    up to order isomorphism regardless of policy.
    """
    mask = p.full_mask
    steps = []
    while True:
        candidates = beat_points(p, basepoint, mask)
        if not candidates:
            break
        x = min(candidates)
        step = remove_beat_point(p, x, basepoint, mask)
        steps.append(step)
        mask &= ~(1 << x)
    final = frozenset(bits(mask))
    sub, relabel = p.restrict(final)
    return CoreResult(sub, final, relabel, DismantlingTrace(p, steps, final))


def _bulk_step(p, mask, upward):
    """The U_X (upward) or D_X step on the subspace ``mask``; None if identity."""
    one = {}
    for x in bits(mask):
        t = _up_beat_target(p, x, mask) if upward else _down_beat_target(p, x, mask)
        one[x] = x if t is None else t
    if all(v == x for x, v in one.items()):
        return None
    mapping = {}
    for x in bits(mask):
        v = x
        while one[v] != v:
            v = one[v]
        mapping[x] = v
    removed = frozenset(x for x, v in mapping.items() if v != x)
    return RetractionStep(BULK_UP if upward else BULK_DOWN,
                          frozenset(bits(mask)), removed, mapping)


def bulk_up(p):
    """The U_X retraction: iterate one-step up-beat absorption to a fixpoint."""
    step = _bulk_step(p, p.full_mask, upward=True)
    if step is None:
        full = frozenset(range(p.n))
        step = RetractionStep(BULK_UP, full, frozenset(), {i: i for i in range(p.n)})
    return step


def bulk_down(p):
    """The D_X retraction, dual to bulk_up."""
    step = _bulk_step(p, p.full_mask, upward=False)
    if step is None:
        full = frozenset(range(p.n))
        step = RetractionStep(BULK_DOWN, full, frozenset(), {i: i for i in range(p.n)})
    return step


def standard_sequence(p, basepoint=None, max_rounds=None):
    """Alternate D_X, U_X (starting with D_X) until two identity rounds.

    Only non-identity steps are recorded.  When the round limit is hit
    before stabilization the trace is returned with stabilized=False.
    For a basepoint, the basepoint is never a beat point and so is never
    moved or removed.
    """
    if max_rounds is None:
        max_rounds = 2 * max(p.n, 1) + 4
    if max_rounds < 1:
        raise ValueError("max_rounds must be >= 1")
    mask = p.full_mask
    steps = []
    idle = 0
    rounds = 0
    upward = False  # start with D_X
    # basepoint exclusion: treat p as never a beat point by masking it out
    # of candidacy inside _bulk_step via a wrapper
    while rounds < max_rounds and idle < 2:
        step = _bulk_step_pointed(p, mask, upward, basepoint)
        rounds += 1
        upward = not upward
        if step is None:
            idle += 1
            continue
        idle = 0
        steps.append(step)
        for x in step.removed:
            mask &= ~(1 << x)
    return DismantlingTrace(p, steps, frozenset(bits(mask)), stabilized=idle >= 2)


def _bulk_step_pointed(p, mask, upward, basepoint):
    if basepoint is None:
        return _bulk_step(p, mask, upward)
    one = {}
    for x in bits(mask):
        if x == basepoint:
            one[x] = x
            continue
        t = _up_beat_target(p, x, mask) if upward else _down_beat_target(p, x, mask)
        one[x] = x if t is None else t
    if all(v == x for x, v in one.items()):
        return None
    mapping = {}
    for x in bits(mask):
        v = x
        while one[v] != v:
            v = one[v]
        mapping[x] = v
    removed = frozenset(x for x, v in mapping.items() if v != x)
    return RetractionStep(BULK_UP if upward else BULK_DOWN,
                          frozenset(bits(mask)), removed, mapping)


@dataclass
class DeformationVerdict:
    """Outcome of verify_strong_deformation; full=False means only the
    retraction and comparativity clauses were checked."""

    ok: bool
    full: bool

    def __bool__(self):
        return self.ok


def verify_strong_deformation(trace, guard=4096):
    """Certify that a trace realizes a strong deformation retraction.

    Checks that the composed map retracts onto the final subspace, that
    every step is comparative, and (when C(X,X) fits in the guard) that
    the composed map is joined to the identity by a comparability chain
    whose every node fixes the final subspace pointwise.
    """
    from .maps import count_monotone, enumerate_monotone
    from .errors import GuardExceeded

    start = trace.start
    comp = trace.composed
    if frozenset(comp.values()) != trace.final and trace.final:
        return DeformationVerdict(False, True)
    if any(comp[x] != x for x in trace.final):
        return DeformationVerdict(False, True)
    for step in trace.steps:
        if not step.is_comparative(start):
            return DeformationVerdict(False, True)
        if step.removed & step.image_elements:
            return DeformationVerdict(False, True)
    if start.n == 0:
        return DeformationVerdict(True, True)
    try:
        count_monotone(start, start, guard=guard)
    except GuardExceeded:
        return DeformationVerdict(True, False)
    c = enumerate_monotone(start, start, guard=guard)
    allowed = [i for i, a in enumerate(c.assignments)
               if all(a[x] == x for x in trace.final)]
    allowed_set = set(allowed)
    target = c.index_of(tuple(comp[i] for i in range(start.n)))
    ident = c.identity_index()
    if ident not in allowed_set or target not in allowed_set:
        return DeformationVerdict(False, True)
    # BFS restricted to maps fixing the final subspace
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for u in frontier:
            for v in bits(c.comparability_mask(u)):
                if v in allowed_set and v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return DeformationVerdict(target in seen, True)
