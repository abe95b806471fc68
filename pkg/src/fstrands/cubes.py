"""Local geometry of the cube complex of split chains on (1,n) diagrams.

Vertices are reduced (1,n) diagrams; x <= y when y is obtained from x by
splitting.  A cube is stored canonically as a top vertex plus the
split-only elementary forest leading to its bottom vertex; weighting the
splits parameterizes the cube's points by generalized strand diagrams.
The group of (1,1) diagrams acts on everything by left multiplication,
and the quotient invariants (orbit keys) live entirely in the weighted
forest seen from the top corner.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence, Union

from .diagrams import (
    MERGE,
    SPLIT,
    StrandDiagram,
    encode_word,
    identity,
    invert,
    multiply,
    reduce,
)
from .errors import DomainError
from .forests import (
    EDGE,
    ElementaryForest,
    GeneralizedStrandDiagram,
    WeightedElementaryForest,
    canonicalize_generalized,
    caret_diagram,
)
from .thompson import FElement, common_refinement, diagram_tree, merge_free_form, tree_diagram

#: Points of the complex are canonical generalized strand diagrams.
ComplexPoint = GeneralizedStrandDiagram


@dataclass(frozen=True)
class ComplexVertex:
    """A reduced (1,n) strand diagram."""

    diagram: StrandDiagram

    def __post_init__(self) -> None:
        if self.diagram.m != 1:
            raise DomainError(f"vertices have one source, got {self.diagram.m}")
        object.__setattr__(self, "diagram", reduce(self.diagram))

    @property
    def n(self) -> int:
        return self.diagram.n

    def label(self) -> str:
        return encode_word(self.diagram.to_slices())

    def __repr__(self) -> str:
        return f"ComplexVertex({self.label()})"


def trivial_vertex() -> ComplexVertex:
    return ComplexVertex(identity(1))


def leq(x: ComplexVertex, y: ComplexVertex) -> bool:
    """x <= y iff y is obtained from x by splitting (the residual has no merges)."""
    residual = multiply(invert(x.diagram), y.diagram)
    return residual.merge_count == 0


def upper_bound(x: ComplexVertex, y: ComplexVertex) -> ComplexVertex:
    """A common refinement above both vertices.

    Both vertices are first split until merge-free, which makes them
    trees; the leafwise common refinement of the two trees bounds both.
    """
    tx, _ = merge_free_form(x.diagram)
    ty, _ = merge_free_form(y.diagram)
    joined = common_refinement(diagram_tree(tx), diagram_tree(ty))
    return ComplexVertex(tree_diagram(joined))


def elementary_forests_at(n: int) -> Iterator[ElementaryForest]:
    """All elementary forests with source count n, each exactly once."""
    if n < 1:
        raise DomainError(f"strand count must be >= 1, got {n}")

    def gen(left: int) -> Iterator[tuple[str, ...]]:
        if left == 0:
            yield ()
            return
        for rest in gen(left - 1):
            yield (EDGE,) + rest
            yield (SPLIT,) + rest
        if left >= 2:
            for rest in gen(left - 2):
                yield (MERGE,) + rest

    for comps in gen(n):
        yield ElementaryForest(comps)


@dataclass(frozen=True)
class Cube:
    """A cube in canonical form: top vertex plus split-only forest."""

    top: ComplexVertex
    splits: ElementaryForest

    def __post_init__(self) -> None:
        for c in self.splits.components:
            if c == MERGE:
                raise DomainError("cube forests contain only edges and splits")
        if self.splits.sources != self.top.n:
            raise DomainError(
                f"forest has {self.splits.sources} sources but top has {self.top.n} sinks"
            )

    @property
    def dimension(self) -> int:
        return self.splits.caret_count

    def bottom(self) -> ComplexVertex:
        return ComplexVertex(multiply(self.top.diagram, self.splits.to_diagram()))

    def corner(self, eps: Sequence[int]) -> ComplexVertex:
        """The corner selected by applying the splits flagged in ``eps``."""
        if len(eps) != self.dimension:
            raise DomainError(f"need {self.dimension} flags, got {len(eps)}")
        comps = []
        k = 0
        for c in self.splits.components:
            if c == SPLIT:
                comps.append(SPLIT if eps[k] else EDGE)
                k += 1
            else:
                comps.append(c)
        forest = ElementaryForest(tuple(comps))
        return ComplexVertex(multiply(self.top.diagram, forest.to_diagram()))

    def corners(self) -> Iterator[tuple[tuple[int, ...], ComplexVertex]]:
        for eps in product((0, 1), repeat=self.dimension):
            yield eps, self.corner(eps)


def cube_from_forest(v: ComplexVertex, forest: ElementaryForest) -> Cube:
    """The canonical cube spanned at ``v`` by an elementary multiplication.

    Its top vertex applies only the merges of the forest; each caret,
    split or merge, then contributes one split of the canonical forest.
    """
    if forest.sources != v.n:
        raise DomainError(
            f"forest has {forest.sources} sources but vertex has {v.n} sinks"
        )
    top = ComplexVertex(multiply(v.diagram, forest.merge_factor().to_diagram()))
    splits = ElementaryForest(
        tuple(SPLIT if c != EDGE else EDGE for c in forest.components)
    )
    return Cube(top, splits)


def cubes_at(v: ComplexVertex, max_dim: int) -> Iterator[Cube]:
    """Each cube incident to ``v`` via a forest with at most max_dim carets."""
    seen: set[tuple[str, tuple[str, ...]]] = set()
    for forest in elementary_forests_at(v.n):
        if forest.caret_count > max_dim:
            continue
        cube = cube_from_forest(v, forest)
        key = (cube.top.label(), cube.splits.components)
        if key not in seen:
            seen.add(key)
            yield cube


def parameterize(cube: Cube, base: ComplexVertex,
                 coords: Sequence[Union[Fraction, int, str]]) -> ComplexPoint:
    """The canonical point of ``cube`` with the given coordinates seen
    from the corner ``base`` (which maps to all-zero coordinates)."""
    d = cube.dimension
    ws = [Fraction(c) for c in coords]
    if len(ws) != d:
        raise DomainError(f"cube has dimension {d}, got {len(ws)} coordinates")
    matches = [eps for eps, corner in cube.corners() if corner == base]
    if not matches:
        raise DomainError("base vertex is not a corner of the cube")
    if len(matches) > 1:
        raise DomainError("degenerate cube: base matches several corners")
    eps = matches[0]
    comps: list[Union[str, tuple[str, Fraction]]] = []
    k = 0
    for c in cube.splits.components:
        if c == EDGE:
            comps.append(EDGE)
        else:
            comps.append((MERGE, ws[k]) if eps[k] else (SPLIT, ws[k]))
            k += 1
    g = GeneralizedStrandDiagram(
        base.diagram, WeightedElementaryForest.from_pairs(comps)
    )
    return canonicalize_generalized(g)


@dataclass(frozen=True)
class OrbitKey:
    """Left-action invariant of a point: the weighted forest seen from the
    top corner of its supporting cube (split carets only) plus the top
    vertex's sink count."""

    components: tuple[Union[str, tuple[str, Fraction]], ...]
    n: int

    def __str__(self) -> str:
        bits = [c if isinstance(c, str) else f"{c[0]}{c[1]}" for c in self.components]
        return f"{self.n}|" + ".".join(bits)


def orbit_key(p: ComplexPoint) -> OrbitKey:
    """Constant on left-multiplication orbits; distinguishes distinct ones.

    Merge carets of the canonical forest are re-read from the top corner
    of the supporting cube, where they appear as splits of complementary
    weight.
    """
    comps: list[Union[str, tuple[str, Fraction]]] = []
    for k, w in canonicalize_generalized(p).forest.pairs():
        if k == EDGE:
            comps.append(EDGE)
        elif k == SPLIT:
            comps.append((SPLIT, w))
        else:
            comps.append((SPLIT, 1 - w))
    return OrbitKey(tuple(comps), len(comps))


def left_act(g: FElement, p: GeneralizedStrandDiagram) -> GeneralizedStrandDiagram:
    """Left multiplication of the base by a (1,1) diagram class."""
    return GeneralizedStrandDiagram(multiply(g.rep, p.base), p.forest)


def vertex_point(v: ComplexVertex) -> ComplexPoint:
    return GeneralizedStrandDiagram.vertex(v.diagram)


@dataclass
class BallGraph:
    """The 1-skeleton near a vertex: labelled vertices and oriented edges.

    Edges run (coarser, finer): the second vertex refines the first by a
    single split.  In quotient mode labels are orbit-key strings.
    """

    root: str
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    by_label: dict = field(default_factory=dict)


def _vertex_neighbors(x: ComplexVertex) -> Iterator[tuple[str, ComplexVertex]]:
    n = x.n
    for i in range(1, n + 1):
        yield "up", ComplexVertex(multiply(x.diagram, caret_diagram(n, SPLIT, i)))
    for i in range(1, n):
        yield "down", ComplexVertex(multiply(x.diagram, caret_diagram(n, MERGE, i)))


def ball(v: ComplexVertex, radius: int, quotient: bool = False,
         cap: int = 100_000) -> BallGraph:
    """Breadth-first closure of single-caret moves out to ``radius``."""
    if radius < 0:
        raise DomainError("radius must be nonnegative")

    def name(x: ComplexVertex) -> str:
        return str(orbit_key(vertex_point(x))) if quotient else x.label()

    start = name(v)
    by_label: dict[str, ComplexVertex] = {start: v}
    dist = {start: 0}
    edges: set[tuple[str, str]] = set()
    queue = deque([v])
    while queue:
        x = queue.popleft()
        dx = dist[name(x)]
        if dx == radius:
            continue
        for direction, y in _vertex_neighbors(x):
            ny = name(y)
            edge = (name(x), ny) if direction == "up" else (ny, name(x))
            edges.add(edge)
            if ny not in dist:
                if len(dist) >= cap:
                    raise DomainError(f"ball exceeded the vertex cap ({cap})")
                dist[ny] = dx + 1
                by_label[ny] = y
                queue.append(y)
    return BallGraph(
        root=start,
        vertices=tuple(sorted(dist)),
        edges=tuple(sorted(edges)),
        by_label=by_label,
    )


Move = Union[ElementaryForest, tuple[int, ElementaryForest]]


def holonomy(moves: Iterable[Move]) -> FElement:
    """The (1,1) element carried by a loop of elementary moves.

    Each move multiplies by an elementary forest diagram, or by its
    reflection when given as (-1, forest).  The sequence must start and
    end at strand count 1.
    """
    acc = identity(1)
    for k, move in enumerate(moves):
        if isinstance(move, ElementaryForest):
            sign, forest = 1, move
        else:
            sign, forest = move
        dia = forest.to_diagram()
        if sign < 0:
            dia = invert(dia)
        if acc.n != dia.m:
            raise DomainError(
                f"move {k + 1} expects {dia.m} strands but {acc.n} are present"
            )
        acc = multiply(acc, dia)
    if acc.n != 1:
        raise DomainError(f"move sequence ends on {acc.n} strands, not 1")
    return FElement(acc)
