"""Thompson's group F as (1,1) diagram classes, with an exact PL oracle.

Group elements are canonical reduced (1,1) strand diagrams.  Each
element also acts on [0,1] as a piecewise linear homeomorphism with
dyadic breakpoints and power-of-two slopes; the translation goes
through tree pairs (domain tree on top, reflected range tree below) and
gives a second, independent equality test for the word problem.

Orientation convention: the top tree of a (1,1) diagram carries the
domain partition, and stacking a over b composes the maps with a
applied first.  Both conventions are validated by the homomorphism and
relator tests rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .diagrams import (
    MERGE,
    SPLIT,
    Event,
    SliceWord,
    StrandDiagram,
    from_slices,
    identity,
    invert,
    multiply,
    reduce,
)
from .errors import DomainError, InvariantViolation

#: Finite binary trees as nested tuples: () is a leaf, (left, right) a caret.
Tree = tuple


def leaf_count(t: Tree) -> int:
    return 1 if not t else leaf_count(t[0]) + leaf_count(t[1])


def tree_splits(t: Tree, pos: int = 1) -> list[Event]:
    """Slice events growing ``t`` from a single strand at position ``pos``."""
    if not t:
        return []
    left, right = t
    events = [(SPLIT, pos)]
    events += tree_splits(left, pos)
    events += tree_splits(right, pos + leaf_count(left))
    return events


def tree_diagram(t: Tree) -> StrandDiagram:
    """The merge-free (1, leaves) diagram realizing ``t``."""
    return from_slices(SliceWord(1, tuple(tree_splits(t))))


def diagram_tree(d: StrandDiagram) -> Tree:
    """Inverse of :func:`tree_diagram` for merge-free (1,n) diagrams."""
    if d.m != 1 or d.merge_count:
        raise DomainError("diagram is not a splitting tree")
    root: list = []
    boxes: list[list] = [root]
    for _tag, i in d.to_slices().events:
        node = boxes[i - 1]
        left: list = []
        right: list = []
        node.append(left)
        node.append(right)
        boxes[i - 1:i] = [left, right]

    def freeze(nd: list) -> Tree:
        return () if not nd else (freeze(nd[0]), freeze(nd[1]))

    return freeze(root)


def complete_tree(depth: int) -> Tree:
    if depth == 0:
        return ()
    sub = complete_tree(depth - 1)
    return (sub, sub)


def common_refinement(a: Tree, b: Tree) -> Tree:
    if not a:
        return b
    if not b:
        return a
    return (common_refinement(a[0], b[0]), common_refinement(a[1], b[1]))


@dataclass(frozen=True)
class TreePair:
    """A pair of binary trees with equal leaf counts."""

    domain: Tree
    range: Tree

    def __post_init__(self) -> None:
        if leaf_count(self.domain) != leaf_count(self.range):
            raise DomainError(
                f"leaf counts differ: {leaf_count(self.domain)} vs "
                f"{leaf_count(self.range)}"
            )


class FElement:
    """A group element stored as its canonical reduced (1,1) diagram."""

    __slots__ = ("rep",)

    def __init__(self, diagram: StrandDiagram) -> None:
        if diagram.m != 1 or diagram.n != 1:
            raise DomainError(
                f"group elements are (1,1) diagrams, got ({diagram.m},{diagram.n})"
            )
        object.__setattr__(self, "rep", reduce(diagram))

    def __setattr__(self, *a) -> None:
        raise AttributeError("FElement is immutable")

    @staticmethod
    def identity() -> "FElement":
        return FElement(identity(1))

    @property
    def is_identity(self) -> bool:
        return self.rep.is_identity

    def __mul__(self, other: "FElement") -> "FElement":
        return f_mul(self, other)

    def __invert__(self) -> "FElement":
        return f_inv(self)

    def __pow__(self, k: int) -> "FElement":
        out = FElement.identity()
        g = self if k >= 0 else f_inv(self)
        for _ in range(abs(k)):
            out = f_mul(out, g)
        return out

    def __eq__(self, other: object):
        if not isinstance(other, FElement):
            return NotImplemented
        return self.rep == other.rep

    def __hash__(self) -> int:
        return hash(self.rep)

    def __repr__(self) -> str:
        return f"FElement({self.rep.to_slices().events})"


def f_mul(a: FElement, b: FElement) -> FElement:
    return FElement(multiply(a.rep, b.rep))


def f_inv(a: FElement) -> FElement:
    return FElement(invert(a.rep))


def tree_pair_to_diagram(p: TreePair) -> FElement:
    """Splits of the domain tree stacked over merges of the range tree."""
    down = tree_splits(p.domain)
    up = [(MERGE if t == SPLIT else SPLIT, i) for t, i in reversed(tree_splits(p.range))]
    return FElement(from_slices(SliceWord(1, tuple(down + up))))


def merge_free_form(d: StrandDiagram) -> tuple[StrandDiagram, int]:
    """Refine a (1,n) diagram by full splitting rounds until merge-free.

    Each round right-multiplies by the forest splitting every strand and
    reduces; every merge that feeds a sink meets a new split and
    cancels, so the merge count strictly decreases.  Returns the
    merge-free diagram and the number of rounds performed.
    """
    if d.m != 1:
        raise DomainError("expected a (1,n) diagram")
    rounds = 0
    while d.merge_count:
        before = d.merge_count
        full = SliceWord(d.n, tuple((SPLIT, 2 * k + 1) for k in range(d.n)))
        d = multiply(d, from_slices(full))
        rounds += 1
        if d.merge_count >= before:
            raise InvariantViolation("merge count failed to decrease in a splitting round")
    return d, rounds


def diagram_to_tree_pair(a: FElement) -> TreePair:
    tree_part, rounds = merge_free_form(a.rep)
    return TreePair(diagram_tree(tree_part), complete_tree(rounds))


# Standard generators as tree pairs exchanging a left and a right caret;
# x1 is x0 acting on the right subinterval.  Orientation is the one under
# which the usual relator commutators vanish for left-to-right products.
_LEAF: Tree = ()
_X0_PAIR = TreePair(((_LEAF, _LEAF), _LEAF), (_LEAF, (_LEAF, _LEAF)))
_X1_PAIR = TreePair(
    (_LEAF, ((_LEAF, _LEAF), _LEAF)),
    (_LEAF, (_LEAF, (_LEAF, _LEAF))),
)

X0 = tree_pair_to_diagram(_X0_PAIR)
X1 = tree_pair_to_diagram(_X1_PAIR)

_LETTERS = {
    "a": X0,
    "A": f_inv(X0),
    "b": X1,
    "B": f_inv(X1),
}


def from_word(letters: Union[str, Iterable[str]]) -> FElement:
    """Product of generators; letters a, A, b, B mean x0, x0^-1, x1, x1^-1."""
    out = FElement.identity()
    for ch in letters:
        if ch.isspace():
            continue
        try:
            out = f_mul(out, _LETTERS[ch])
        except KeyError:
            raise DomainError(f"unknown generator letter {ch!r}") from None
    return out


# ---------------------------------------------------------------------------
# exact piecewise linear maps


def _is_pow2(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def _is_dyadic(x: Fraction) -> bool:
    return _is_pow2(x.denominator)


@dataclass(frozen=True)
class PLMap:
    """A PL homeomorphism of [0,1]: dyadic breakpoints, power-of-two slopes.

    Breakpoints are stored in canonical form (no collinear interior
    points), so map equality is plain tuple equality.
    """

    points: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        pts = self.points
        if len(pts) < 2 or pts[0] != (0, 0) or pts[-1] != (1, 1):
            raise DomainError("breakpoints must run from (0,0) to (1,1)")
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            if not (x0 < x1 and y0 < y1):
                raise DomainError("breakpoints must be strictly increasing")
            slope = (y1 - y0) / (x1 - x0)
            if not (_is_pow2(slope.numerator) and _is_pow2(slope.denominator)):
                raise DomainError(f"slope {slope} is not a power of two")
        for x, y in pts:
            if not (_is_dyadic(x) and _is_dyadic(y)):
                raise DomainError(f"breakpoint ({x}, {y}) is not dyadic")

    @classmethod
    def from_points(cls, pts: Iterable[tuple[Fraction, Fraction]]) -> "PLMap":
        """Build from breakpoints, dropping collinear interior points."""
        raw = sorted({(Fraction(x), Fraction(y)) for x, y in pts})
        keep: list[tuple[Fraction, Fraction]] = []
        for p in raw:
            while len(keep) >= 2:
                (x0, y0), (x1, y1) = keep[-2], keep[-1]
                if (y1 - y0) * (p[0] - x1) == (p[1] - y1) * (x1 - x0):
                    keep.pop()
                else:
                    break
            keep.append(p)
        return cls(tuple(keep))

    @staticmethod
    def identity() -> "PLMap":
        return PLMap(((Fraction(0), Fraction(0)), (Fraction(1), Fraction(1))))


def pl_eval(m: PLMap, x) -> Fraction:
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise DomainError(f"{x} is outside [0, 1]")
    pts = m.points
    lo, hi = 0, len(pts) - 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if pts[mid][0] <= x:
            lo = mid
        else:
            hi = mid
    (x0, y0), (x1, y1) = pts[lo], pts[hi]
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0)


def pl_inverse(m: PLMap) -> PLMap:
    return PLMap(tuple((y, x) for x, y in m.points))


def pl_compose(m1: PLMap, m2: PLMap) -> PLMap:
    """The map applying ``m1`` first, then ``m2``."""
    inv1 = pl_inverse(m1)
    xs = {x for x, _ in m1.points}
    xs.update(pl_eval(inv1, x) for x, _ in m2.points)
    return PLMap.from_points((x, pl_eval(m2, pl_eval(m1, x))) for x in sorted(xs))


def pl_eq(m1: PLMap, m2: PLMap) -> bool:
    return m1.points == m2.points


def leaf_partition(t: Tree) -> list[Fraction]:
    """Dyadic partition points of [0,1] cut by the leaves of ``t``."""
    out = [Fraction(0)]

    def walk(nd: Tree, lo: Fraction, hi: Fraction) -> None:
        if not nd:
            out.append(hi)
            return
        mid = (lo + hi) / 2
        walk(nd[0], lo, mid)
        walk(nd[1], mid, hi)

    walk(t, Fraction(0), Fraction(1))
    return out


def tree_pair_pl(p: TreePair) -> PLMap:
    dom = leaf_partition(p.domain)
    ran = leaf_partition(p.range)
    return PLMap.from_points(zip(dom, ran))


def to_pl(a: FElement) -> PLMap:
    """The PL homeomorphism determined by the element's tree pair."""
    return tree_pair_pl(diagram_to_tree_pair(a))
