"""Vertices, cubes, parameterization, orbit keys, balls, and holonomy."""

from fractions import Fraction

import pytest

from fstrands.cubes import (
    ComplexVertex,
    Cube,
    ball,
    cube_from_forest,
    cubes_at,
    elementary_forests_at,
    holonomy,
    left_act,
    leq,
    orbit_key,
    parameterize,
    trivial_vertex,
    upper_bound,
    vertex_point,
)
from fstrands.diagrams import S, SliceWord, from_slices, multiply
from fstrands.errors import DomainError
from fstrands.forests import EDGE, ElementaryForest
from fstrands.thompson import (
    X0,
    X1,
    diagram_to_tree_pair,
    f_inv,
    f_mul,
    from_word,
    pl_eq,
    to_pl,
    tree_diagram,
    tree_splits,
)

from helpers import (
    random_elementary_forest,
    random_f_word,
    random_rational,
    random_vertex_diagram,
    rng,
)

L = ()


def vtx(*events):
    return ComplexVertex(from_slices(SliceWord(1, tuple(events))))


class TestLeq:
    def test_reflexive(self):
        for seed in range(20):
            x = ComplexVertex(random_vertex_diagram(rng(seed)))
            assert leq(x, x)

    def test_trivial_below_split(self):
        assert leq(trivial_vertex(), vtx(S(1)))
        assert not leq(vtx(S(1)), trivial_vertex())

    def test_proper_splitting_is_oneway(self):
        r = rng(4)
        for _ in range(25):
            x = ComplexVertex(random_vertex_diagram(r))
            forest = random_elementary_forest(r, x.n, kinds="ES")
            if forest.caret_count == 0:
                continue
            y = ComplexVertex(x.diagram * forest.to_diagram())
            assert leq(x, y)
            assert not leq(y, x)

    def test_antisymmetry_and_transitivity(self):
        r = rng(40)
        vs = [ComplexVertex(random_vertex_diagram(r, 6)) for _ in range(12)]
        for a in vs:
            for b in vs:
                if leq(a, b) and leq(b, a):
                    assert a == b
                for c in vs:
                    if leq(a, b) and leq(b, c):
                        assert leq(a, c)


class TestUpperBound:
    def test_merge_free_vertex_bounds_itself(self):
        x = vtx(S(1), S(2))
        assert upper_bound(x, x) == x

    def test_left_right_combs_join_to_balanced(self):
        left = ComplexVertex(tree_diagram(((L, L), L)))
        right = ComplexVertex(tree_diagram((L, (L, L))))
        z = upper_bound(left, right)
        assert z == ComplexVertex(tree_diagram(((L, L), (L, L))))
        assert leq(left, z) and leq(right, z)

    @pytest.mark.parametrize("seed", range(40))
    def test_bounds_both_inputs(self, seed):
        r = rng(seed)
        x = ComplexVertex(random_vertex_diagram(r, 8))
        y = ComplexVertex(random_vertex_diagram(r, 8))
        z = upper_bound(x, y)
        assert leq(x, z) and leq(y, z)


class TestForestEnumeration:
    def test_counts_small(self):
        assert sorted(f.components for f in elementary_forests_at(1)) == [
            ("E",),
            ("S",),
        ]
        n2 = {f.components for f in elementary_forests_at(2)}
        assert n2 == {("E", "E"), ("E", "S"), ("S", "E"), ("S", "S"), ("M",)}

    def test_recurrence(self):
        counts = [1] + [sum(1 for _ in elementary_forests_at(n)) for n in range(1, 11)]
        for n in range(2, 11):
            assert counts[n] == 2 * counts[n - 1] + counts[n - 2]
        assert counts[:6] == [1, 2, 5, 12, 29, 70]

    def test_no_duplicates(self):
        for n in (3, 5):
            forests = [f.components for f in elementary_forests_at(n)]
            assert len(forests) == len(set(forests))

    def test_split_only_count_is_power_of_two(self):
        for n in (1, 4, 6):
            count = sum(
                1 for f in elementary_forests_at(n) if "M" not in f.components
            )
            assert count == 2 ** n


class TestCubes:
    def test_trivial_vertex_cubes(self):
        cubes = list(cubes_at(trivial_vertex(), 1))
        assert len(cubes) == 2
        dims = sorted(c.dimension for c in cubes)
        assert dims == [0, 1]

    def test_dimension_matches_caret_count(self):
        v = vtx(S(1))
        for cube in cubes_at(v, 2):
            forests = cube.splits
            assert cube.dimension == forests.caret_count

    def test_merge_forest_cube_has_coarser_top(self):
        v = vtx(S(1))
        cube = cube_from_forest(v, ElementaryForest(("M",)))
        assert cube.top == trivial_vertex()
        assert cube.splits == ElementaryForest(("S",))
        assert cube.bottom() == v

    def test_corners_sandwiched_between_top_and_bottom(self):
        r = rng(8)
        for _ in range(20):
            v = ComplexVertex(random_vertex_diagram(r, 6))
            forest = random_elementary_forest(r, v.n)
            cube = cube_from_forest(v, forest)
            for _eps, corner in cube.corners():
                assert leq(cube.top, corner)
                assert leq(corner, cube.bottom())

    def test_cube_rejects_merge_components(self):
        with pytest.raises(DomainError):
            Cube(trivial_vertex(), ElementaryForest(("M",)))


class TestParameterize:
    def test_zero_coords_give_base(self):
        cube = cube_from_forest(vtx(S(1)), ElementaryForest(("S", "E")))
        base = cube.corner((0,))
        p = parameterize(cube, base, (0,))
        assert p == vertex_point(base)

    def test_one_coords_give_opposite_corner(self):
        r = rng(5)
        for _ in range(15):
            v = ComplexVertex(random_vertex_diagram(r, 5))
            forest = random_elementary_forest(r, v.n)
            cube = cube_from_forest(v, forest)
            d = cube.dimension
            p = parameterize(cube, cube.top, (1,) * d)
            assert p == vertex_point(cube.bottom())

    def test_wrong_arity_rejected(self):
        cube = cube_from_forest(trivial_vertex(), ElementaryForest(("S",)))
        with pytest.raises(DomainError):
            parameterize(cube, cube.top, (Fraction(1, 2), Fraction(1, 2)))

    def test_non_corner_rejected(self):
        cube = cube_from_forest(trivial_vertex(), ElementaryForest(("S",)))
        outsider = vtx(S(1), S(1))
        with pytest.raises(DomainError, match="not a corner"):
            parameterize(cube, outsider, (Fraction(1, 2),))

    @pytest.mark.parametrize("seed", range(50))
    def test_corner_independence(self, seed):
        # the same interior point parameterized from two corners agrees
        r = rng(seed)
        v = ComplexVertex(random_vertex_diagram(r, 5))
        forest = random_elementary_forest(r, v.n)
        cube = cube_from_forest(v, forest)
        d = cube.dimension
        if d == 0:
            return
        w = [random_rational(r, open_unit=True) for _ in range(d)]
        eps1 = tuple(r.randint(0, 1) for _ in range(d))
        eps2 = tuple(r.randint(0, 1) for _ in range(d))
        p1 = parameterize(
            cube, cube.corner(eps1), [x if not e else 1 - x for x, e in zip(w, eps1)]
        )
        p2 = parameterize(
            cube, cube.corner(eps2), [x if not e else 1 - x for x, e in zip(w, eps2)]
        )
        assert p1 == p2

    def test_facet_points_parameterize_consistently(self):
        # pinning one coordinate to 0/1 lands on a face of the cube, and the
        # face's own parameterization gives the same point
        r = rng(77)
        for _ in range(20):
            v = ComplexVertex(random_vertex_diagram(r, 4))
            forest = random_elementary_forest(r, v.n)
            cube = cube_from_forest(v, forest)
            d = cube.dimension
            if d < 2:
                continue
            w = [random_rational(r, open_unit=True) for _ in range(d)]
            pin = r.randrange(d)
            pinned_val = r.choice([Fraction(0), Fraction(1)])
            w[pin] = pinned_val
            whole = parameterize(cube, cube.top, w)
            # the face: drop the pinned split, absorbing it when pinned to 1
            face_eps = tuple(1 if k == pin and pinned_val == 1 else 0 for k in range(d))
            face_base = cube.corner(face_eps)
            k = 0
            face_comps = []
            for c in cube.splits.components:
                if c == "S":
                    if k == pin:
                        face_comps.extend(["E", "E"] if pinned_val == 1 else ["E"])
                    else:
                        face_comps.append("S")
                    k += 1
                else:
                    face_comps.append("E")
            face_cube = cube_from_forest(face_base, ElementaryForest(tuple(face_comps)))
            face_w = [x for k, x in enumerate(w) if k != pin]
            assert parameterize(face_cube, face_base, face_w) == whole


class TestOrbitKey:
    def test_vertices_share_key_by_sink_count(self):
        r = rng(31)
        keys = set()
        for _ in range(10):
            v = ComplexVertex(random_vertex_diagram(r, 6))
            keys.add((orbit_key(vertex_point(v)), v.n))
        assert all(key.n == n and set(key.components) <= {EDGE} for key, n in keys)
        assert len({key for key, _ in keys}) == len({n for _, n in keys})

    @pytest.mark.parametrize("seed", range(40))
    def test_invariant_under_left_action(self, seed):
        r = rng(seed)
        from helpers import random_generalized

        p = random_generalized(r, max_carets=6)
        g = from_word(random_f_word(r, 6))
        assert orbit_key(left_act(g, p)) == orbit_key(p)

    def test_distinct_interior_points_have_distinct_keys(self):
        cube = cube_from_forest(trivial_vertex(), ElementaryForest(("S",)))
        p1 = parameterize(cube, cube.top, (Fraction(1, 3),))
        p2 = parameterize(cube, cube.top, (Fraction(2, 3),))
        assert orbit_key(p1) != orbit_key(p2)

    @pytest.mark.parametrize("seed", range(25))
    def test_key_of_parameterized_point_ignores_translated_base(self, seed):
        # the same cube data hung off a translated vertex keys identically
        r = rng(seed + 600)
        v = ComplexVertex(random_vertex_diagram(r, 5))
        forest = random_elementary_forest(r, v.n)
        cube = cube_from_forest(v, forest)
        d = cube.dimension
        w = [random_rational(r, open_unit=True) for _ in range(d)]
        g = from_word(random_f_word(r, 6))
        moved = ComplexVertex(multiply(g.rep, v.diagram))
        moved_cube = cube_from_forest(moved, forest)
        p = parameterize(cube, cube.top, w)
        q = parameterize(moved_cube, moved_cube.top, w)
        assert orbit_key(p) == orbit_key(q)


class TestBall:
    def test_radius_zero(self):
        g = ball(trivial_vertex(), 0)
        assert len(g.vertices) == 1 and not g.edges

    def test_quotient_ball_radius_one(self):
        g = ball(trivial_vertex(), 1, quotient=True)
        assert len(g.vertices) == 2
        assert len(g.edges) == 1

    def test_plain_ball_radius_one(self):
        g = ball(trivial_vertex(), 1)
        assert len(g.vertices) == 2
        assert len(g.edges) == 1

    def test_edges_are_single_caret_leq_steps(self):
        g = ball(vtx(S(1)), 2, cap=5000)
        for lo_label, hi_label in g.edges:
            lo, hi = g.by_label[lo_label], g.by_label[hi_label]
            assert leq(lo, hi)
            assert hi.n == lo.n + 1

    def test_cap_trips(self):
        with pytest.raises(DomainError, match="cap"):
            ball(trivial_vertex(), 6, cap=30)


class TestHolonomy:
    def test_split_merge_back_is_identity(self):
        loop = [ElementaryForest(("S",)), ElementaryForest(("M",))]
        assert holonomy(loop).is_identity

    def test_signed_move_reverses(self):
        loop = [ElementaryForest(("S",)), (-1, ElementaryForest(("S",)))]
        assert holonomy(loop).is_identity

    @staticmethod
    def _tree_pair_loop(g):
        """Single-caret moves spelling out an element's tree pair."""
        pair = diagram_to_tree_pair(g)
        moves = []
        count = 1
        for _tag, i in tree_splits(pair.domain):
            moves.append(
                ElementaryForest(("E",) * (i - 1) + ("S",) + ("E",) * (count - i))
            )
            count += 1
        for _tag, i in reversed(tree_splits(pair.range)):
            moves.append(
                ElementaryForest(("E",) * (i - 1) + ("M",) + ("E",) * (count - i - 1))
            )
            count -= 1
        return moves

    def test_designed_generator_loops(self):
        for gen in (X0, X1):
            got = holonomy(self._tree_pair_loop(gen))
            assert got == gen
            assert pl_eq(to_pl(got), to_pl(gen))

    def test_two_loops_distinguished_by_oracle(self):
        loop_a = self._tree_pair_loop(X0)
        loop_b = self._tree_pair_loop(f_mul(X0, X0))
        assert holonomy(loop_a) != holonomy(loop_b)

    def test_reversed_sequence_inverts(self):
        r = rng(13)
        for _ in range(25):
            g = from_word(random_f_word(r, 6))
            loop = self._tree_pair_loop(g)
            reversed_loop = [(-1, f) for f in reversed(loop)]
            assert holonomy(reversed_loop) == f_inv(g)

    def test_arity_break_rejected(self):
        with pytest.raises(DomainError, match="move 2"):
            holonomy([ElementaryForest(("S",)), ElementaryForest(("S", "E", "E"))])

    def test_unclosed_sequence_rejected(self):
        with pytest.raises(DomainError, match="ends on"):
            holonomy([ElementaryForest(("S",))])
