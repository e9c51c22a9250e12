import pytest

from finspace import (
    HeightExceeded,
    Poset,
    antichain,
    are_homotopy_equivalent,
    are_isomorphic,
    brute_force_homotopy_equivalent,
    chain,
    contains_crown,
    contractible_height1,
    crown,
    fence,
    is_contractible,
    spider,
    unique_spath_condition,
)
from finspace.generators import random_poset

from helpers import random_height1_poset


class TestIsomorphism:
    def test_relabelled_chain(self):
        p = chain(3)
        q = Poset.from_covers(["z", "y", "x"], [("x", "y"), ("y", "z")])
        w = are_isomorphic(p, q)
        assert w is not None
        assert w.mapping[0] == q.index("x")

    def test_chain_vs_fence(self):
        assert are_isomorphic(chain(3), fence(3)) is None

    def test_rotated_crown(self):
        c = crown(3)
        rot = Poset.from_covers(
            list(c.labels),
            [(f"a{(i+1) % 3}", f"b{(i+1) % 3}") for i in range(3)]
            + [(f"a{(i+1) % 3}", f"b{(i+2) % 3}") for i in range(3)],
        )
        assert are_isomorphic(c, rot) is not None

    def test_witness_is_bijective_both_ways(self):
        for seed in range(6):
            p = random_poset(6, 0.4, seed)
            perm = sorted(range(p.n), key=lambda i: (i * 7) % p.n)
            q = Poset.from_covers(
                [p.labels[perm[i]] for i in range(p.n)],
                [(p.labels[a], p.labels[b]) for a, b in p.covers],
            )
            w = are_isomorphic(p, q)
            assert w is not None
            inv = w.inverse()
            assert sorted(w.mapping) == list(range(p.n))
            assert all(inv.mapping[w.mapping[i]] == i for i in range(p.n))


class TestHomotopyEquivalence:
    def test_fence_vs_point(self):
        ev = are_homotopy_equivalent(fence(5), chain(1))
        assert ev and ev.core_p.core.n == 1 and ev.iso is not None

    def test_crowns_differ(self):
        ev = are_homotopy_equivalent(crown(2), crown(3))
        assert not ev
        assert ev.core_p.core.n == 4 and ev.core_q.core.n == 6

    def test_chain_vs_fence_both_contractible(self):
        assert are_homotopy_equivalent(chain(4), fence(7))

    def test_pointed(self):
        sp = spider([2, 2])
        ev = are_homotopy_equivalent(
            sp.poset, chain(1), basepoint_p=sp.basepoint, basepoint_q=0
        )
        assert ev

    def test_mixed_basepoints_rejected(self):
        with pytest.raises(ValueError):
            are_homotopy_equivalent(chain(2), chain(2), basepoint_p=0)


class TestBruteForce:
    def test_singleton_vs_two_chain(self):
        assert brute_force_homotopy_equivalent(chain(1), chain(2))

    def test_crown_vs_singleton(self):
        assert not brute_force_homotopy_equivalent(crown(2), chain(1))

    def test_self(self):
        for p in [chain(3), crown(2), fence(4), antichain(2)]:
            assert brute_force_homotopy_equivalent(p, p)

    def test_empty(self):
        assert brute_force_homotopy_equivalent(chain(0), chain(0))
        assert not brute_force_homotopy_equivalent(chain(0), chain(1))


class TestContractibility:
    def test_fences(self):
        assert all(is_contractible(fence(n)) for n in range(1, 12))

    def test_crowns(self):
        assert not any(is_contractible(crown(n)) for n in range(2, 6))

    def test_chains(self):
        assert all(is_contractible(chain(n)) for n in range(1, 8))

    def test_empty(self):
        assert not is_contractible(chain(0))


class TestHeightOneCriterion:
    def test_fence(self):
        assert contractible_height1(fence(6))

    def test_crown(self):
        assert not contractible_height1(crown(2))

    def test_disconnected(self):
        two_fences = Poset.from_covers(
            ["a0", "a1", "b0", "b1"], [("a0", "a1"), ("b0", "b1")]
        )
        assert not contractible_height1(two_fences)

    def test_height_exceeded(self):
        with pytest.raises(HeightExceeded):
            contractible_height1(chain(3))

    def test_agrees_with_core_criterion(self):
        import random

        rng = random.Random(7)
        for _ in range(80):
            p = random_height1_poset(rng, 8)
            if p.height() > 1:
                continue
            assert contractible_height1(p) == is_contractible(p)


class TestContainsCrown:
    def test_crown3_six_cycle(self):
        cyc = contains_crown(crown(3))
        assert cyc is not None and len(cyc) == 6

    def test_fence_none(self):
        assert contains_crown(fence(5)) is None

    def test_crown_with_pendant(self):
        p = Poset.from_covers(
            ["a0", "a1", "b0", "b1", "p"],
            [("a0", "b0"), ("a0", "b1"), ("a1", "b0"), ("a1", "b1"), ("p", "b0")],
        )
        cyc = contains_crown(p)
        assert cyc is not None and len(cyc) == 4

    def test_cycle_is_in_cover_graph(self):
        cyc = contains_crown(crown(4))
        undirected = {frozenset(e) for e in crown(4).covers}
        for i, v in enumerate(cyc):
            assert frozenset({v, cyc[(i + 1) % len(cyc)]}) in undirected


class TestUniqueSpath:
    def test_fence(self):
        p = fence(5)
        assert all(unique_spath_condition(p, x) for x in range(p.n))

    def test_crown(self):
        assert not unique_spath_condition(crown(2), 0)

    def test_chain_bottom(self):
        assert unique_spath_condition(chain(3), 0)

    def test_implies_contractible(self):
        import random

        rng = random.Random(3)
        for _ in range(60):
            p = random_height1_poset(rng, 7)
            if p.n and unique_spath_condition(p, 0):
                assert is_contractible(p)
