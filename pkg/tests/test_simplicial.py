from itertools import combinations

import pytest

from finspace import (
    GuardExceeded,
    Poset,
    SimplicialComplex,
    antichain,
    chain,
    crown,
    fence,
    homology,
    homology_invariant_under_reduction,
    is_gamma_point,
    link,
    order_complex,
    poset_homology,
)
from finspace.generators import random_poset
from finspace.simplicial import (
    CERTIFIED_YES,
    HOMOLOGY_YES,
    NO,
    _boundary_rows,
    _smith_invariant_factors,
)


def complex_from_facets(nverts, facets):
    by_dim = {}
    for f in facets:
        for r in range(1, len(f) + 1):
            for s in combinations(sorted(f), r):
                by_dim.setdefault(r - 1, set()).add(s)
    sims = tuple(tuple(sorted(by_dim[d])) for d in sorted(by_dim))
    return SimplicialComplex(nverts, sims)


class TestOrderComplex:
    def test_chain_is_simplex(self):
        k = order_complex(chain(3))
        assert [k.count(d) for d in range(3)] == [3, 3, 1]
        assert k.euler_characteristic() == 1

    def test_antichain_is_points(self):
        k = order_complex(antichain(4))
        assert k.dimension() == 0 and k.count(0) == 4

    def test_crown_is_circle(self):
        k = order_complex(crown(2))
        assert k.count(0) == 4 and k.count(1) == 4 and k.dimension() == 1
        assert k.euler_characteristic() == 0

    def test_chains_match_brute_force(self):
        for seed in range(6):
            p = random_poset(6, 0.4, seed)
            k = order_complex(p)
            got = {s for dim in k.simplices for s in dim}
            want = set()
            for r in range(1, p.n + 1):
                for sub in combinations(range(p.n), r):
                    if all(p.comparable(a, b) for a, b in combinations(sub, 2)):
                        want.add(sub)
            assert got == want

    def test_guard(self):
        with pytest.raises(GuardExceeded):
            order_complex(chain(30), guard=100)


class TestSmithNormalForm:
    def test_diagonal(self):
        assert _smith_invariant_factors([[2, 0], [0, 3]], 2) == [1, 6]

    def test_zero_matrix(self):
        assert _smith_invariant_factors([[0, 0]], 2) == []

    def test_divisibility_chain(self):
        got = _smith_invariant_factors([[2, 4, 4], [-6, 6, 12], [10, 4, 16]], 3)
        for a, b in zip(got, got[1:]):
            assert b % a == 0
        # determinant magnitude is preserved
        import math
        assert math.prod(got) == abs(
            2 * (6 * 16 - 12 * 4) - 4 * (-6 * 16 - 12 * 10) + 4 * (-6 * 4 - 6 * 10)
        )

    def test_rank_only(self):
        assert _smith_invariant_factors([[1, 2], [2, 4]], 2) == [1]


class TestHomology:
    def test_boundary_squares_to_zero(self):
        for p in [crown(3), fence(5), chain(4)]:
            k = order_complex(p)
            for d in range(2, k.dimension() + 1):
                rows1 = _boundary_rows(d - 1, k.simplices[d - 2], k.simplices[d - 1])
                rows2 = _boundary_rows(d, k.simplices[d - 1], k.simplices[d])
                for i in range(len(rows1)):
                    for j in range(k.count(d)):
                        assert sum(
                            rows1[i][t] * rows2[t][j] for t in range(k.count(d - 1))
                        ) == 0

    def test_circle(self):
        prof = poset_homology(crown(2), reduced=True)
        assert prof.betti == (0, 1)
        assert prof.torsion == ((), ())

    def test_point(self):
        assert poset_homology(chain(1), reduced=True).is_acyclic()

    def test_two_points_unreduced_vs_reduced(self):
        p = antichain(2)
        assert poset_homology(p, reduced=False).betti == (2,)
        assert poset_homology(p, reduced=True).betti == (1,)

    def test_projective_plane_torsion(self):
        # minimal 6-vertex triangulation of the projective plane
        facets = [
            (1, 2, 3), (1, 3, 4), (1, 2, 6), (1, 4, 5), (1, 5, 6),
            (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
        ]
        k = complex_from_facets(7, facets)
        assert k.euler_characteristic() == 1
        prof = homology(k, reduced=True)
        assert prof.betti == (0, 0, 0)
        assert prof.torsion[1] == (2,)

    def test_sphere(self):
        # boundary of the 3-simplex
        facets = list(combinations(range(4), 3))
        prof = homology(complex_from_facets(4, facets), reduced=True)
        assert prof.betti == (0, 0, 1) and prof.torsion == ((), (), ())

    def test_euler_characteristic_cross_check(self):
        for seed in range(8):
            p = random_poset(6, 0.4, seed)
            k = order_complex(p)
            prof = homology(k, reduced=False)
            assert k.euler_characteristic() == sum(
                (-1) ** d * b for d, b in enumerate(prof.betti)
            )

    def test_crown3_circle_too(self):
        prof = poset_homology(crown(3), reduced=True)
        assert prof.betti == (0, 1)


class TestLink:
    def test_chain_interior(self):
        lk = link(chain(3), 1)
        assert lk.n == 2 and list(lk.labels) == ["c0", "c2"]

    def test_crown_vertex(self):
        lk = link(crown(2), 0)  # a0 is below both maxima
        assert lk.n == 2 and lk.is_antichain(range(lk.n))

    def test_isolated_point(self):
        lk = link(antichain(3), 0)
        assert lk.n == 0


class TestGammaPoints:
    def test_chain_interior_certified(self):
        assert is_gamma_point(chain(3), 1) == CERTIFIED_YES

    def test_crown_vertex_no(self):
        assert all(is_gamma_point(crown(2), x) == NO for x in range(4))

    def test_isolated_no(self):
        assert is_gamma_point(antichain(2), 0) == NO

    def test_beat_points_are_gamma(self):
        from finspace import beat_points

        for seed in range(8):
            p = random_poset(7, 0.4, seed)
            for x in beat_points(p):
                assert is_gamma_point(p, x) == CERTIFIED_YES

    def test_homology_yes_wedge_link(self):
        # x sits below two disjoint crowns glued at a point... simpler: the
        # link of the cone point over a non-core acyclic space.  Take a
        # 4-fence (contractible, core is a point): its cone point is
        # certified.  For homology_yes we need an acyclic link whose core
        # is not a point; none exists below 9 points here, so assert the
        # certified path on the fence cone instead.
        f = fence(4)
        labels = list(f.labels) + ["top"]
        covers = [(f.labels[a], f.labels[b]) for a, b in f.covers]
        covers += [(lab, "top") for lab in f.labels]
        p = Poset.from_covers(labels, covers)
        assert is_gamma_point(p, p.index("top")) == CERTIFIED_YES


class TestInvariance:
    def test_examples(self):
        assert homology_invariant_under_reduction(fence(6))
        assert homology_invariant_under_reduction(crown(3))

    def test_random(self):
        for seed in range(20):
            p = random_poset(7, 0.35, seed)
            assert homology_invariant_under_reduction(p)
