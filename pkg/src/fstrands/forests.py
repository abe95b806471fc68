"""Elementary forests, weightings, and generalized strand diagrams.

An elementary forest is an ordered row of components, each an edge, a
split caret or a merge caret; multiplying a diagram by such a forest is
one "time step" in which every strand continues, splits, or merges with
its neighbour.  Weighting each caret by a rational in [0,1] records
partial progress of that split or merge; a reduced (1,n) diagram plus a
single weighted forest parameterizes a point of the cube complex built
from split chains.

Canonical form of a generalized diagram: the base is reduced, no caret
has weight 0 or 1, and no caret interacts with the base bottom (a merge
caret under a split pair and a split caret under a merge vertex are
rewritten away, flipping the caret and replacing its weight w by 1-w).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .diagrams import (
    MERGE,
    SPLIT,
    SliceWord,
    StrandDiagram,
    from_slices,
    is_reduced,
    multiply,
    reduce,
)
from .errors import CompositionError, DomainError

EDGE = "E"

_SOURCES = {EDGE: 1, SPLIT: 1, MERGE: 2}
_SINKS = {EDGE: 1, SPLIT: 2, MERGE: 1}


@dataclass(frozen=True)
class ElementaryForest:
    """An ordered row of edge / split caret / merge caret components."""

    components: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        for c in self.components:
            if c not in _SOURCES:
                raise DomainError(f"unknown forest component {c!r}")

    @property
    def sources(self) -> int:
        return sum(_SOURCES[c] for c in self.components)

    @property
    def sinks(self) -> int:
        return sum(_SINKS[c] for c in self.components)

    @property
    def caret_count(self) -> int:
        return sum(1 for c in self.components if c != EDGE)

    def source_positions(self) -> list[int]:
        """1-based strand position of each component's leftmost source."""
        out = []
        pos = 1
        for c in self.components:
            out.append(pos)
            pos += _SOURCES[c]
        return out

    def split_factor(self) -> "ElementaryForest":
        """The splitting part: each merge caret becomes two parallel edges."""
        comps: list[str] = []
        for c in self.components:
            comps.extend((EDGE, EDGE) if c == MERGE else (c,))
        return ElementaryForest(tuple(comps))

    def merge_factor(self) -> "ElementaryForest":
        """The merging part: each split caret becomes a single edge."""
        return ElementaryForest(
            tuple(EDGE if c == SPLIT else c for c in self.components)
        )

    def to_slices(self) -> SliceWord:
        events = []
        pos = 1
        for c in self.components:
            if c == SPLIT:
                events.append((SPLIT, pos))
                pos += 2
            elif c == MERGE:
                events.append((MERGE, pos))
                pos += 1
            else:
                pos += 1
        return SliceWord(self.sources, tuple(events))

    def to_diagram(self) -> StrandDiagram:
        return from_slices(self.to_slices())

    def __str__(self) -> str:
        return " ".join(self.components)


def split_factor(f: ElementaryForest) -> ElementaryForest:
    """The splitting part of a forest (merge carets undone)."""
    return f.split_factor()


def merge_factor(f: ElementaryForest) -> ElementaryForest:
    """The merging part of a forest (split carets undone)."""
    return f.merge_factor()


def forest_to_slices(f: ElementaryForest) -> SliceWord:
    """Slice word with one event per caret, left to right."""
    return f.to_slices()


def caret_diagram(n: int, kind: str, pos: int) -> StrandDiagram:
    """The n-strand forest diagram with a single caret at strand ``pos``."""
    return from_slices(SliceWord(n, ((kind, pos),)))


Weight = Optional[Fraction]


def _as_weight(w) -> Fraction:
    w = Fraction(w)
    if not 0 <= w <= 1:
        raise DomainError(f"caret weight {w} outside [0, 1]")
    return w


@dataclass(frozen=True)
class WeightedElementaryForest:
    """An elementary forest whose carets carry rational weights in [0,1].

    ``weights`` is aligned with ``kinds``; edges carry None.
    """

    kinds: tuple[str, ...]
    weights: tuple[Weight, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "kinds", tuple(self.kinds))
        if len(self.kinds) != len(self.weights):
            raise DomainError("component and weight rows differ in length")
        ws = []
        for k, w in zip(self.kinds, self.weights):
            if k == EDGE:
                if w is not None:
                    raise DomainError("edges carry no weight")
                ws.append(None)
            elif k in (SPLIT, MERGE):
                if w is None:
                    raise DomainError(f"caret {k} is missing its weight")
                ws.append(_as_weight(w))
            else:
                raise DomainError(f"unknown forest component {k!r}")
        object.__setattr__(self, "weights", tuple(ws))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Union[str, tuple[str, object]]]):
        kinds, weights = [], []
        for p in pairs:
            if isinstance(p, str):
                kinds.append(p)
                weights.append(None)
            else:
                kinds.append(p[0])
                weights.append(Fraction(p[1]))
        return cls(tuple(kinds), tuple(weights))

    @classmethod
    def edges(cls, n: int) -> "WeightedElementaryForest":
        return cls((EDGE,) * n, (None,) * n)

    @property
    def forest(self) -> ElementaryForest:
        return ElementaryForest(self.kinds)

    @property
    def sources(self) -> int:
        return sum(_SOURCES[c] for c in self.kinds)

    @property
    def caret_weights(self) -> dict[int, Fraction]:
        """Weight of each caret, keyed by component index."""
        return {i: w for i, (k, w) in enumerate(zip(self.kinds, self.weights))
                if k != EDGE}

    def pairs(self) -> list[tuple[str, Weight]]:
        return list(zip(self.kinds, self.weights))

    def __str__(self) -> str:
        bits = []
        for k, w in zip(self.kinds, self.weights):
            bits.append(k if w is None else f"{k}{w}")
        return " ".join(bits)


@dataclass(frozen=True)
class GeneralizedStrandDiagram:
    """A reduced (1,n) diagram followed by one weighted elementary forest."""

    base: StrandDiagram
    forest: WeightedElementaryForest

    def __post_init__(self) -> None:
        if self.base.m != 1:
            raise DomainError(f"base must have one source, got {self.base.m}")
        if not is_reduced(self.base):
            object.__setattr__(self, "base", reduce(self.base))
        if self.base.n != self.forest.sources:
            raise CompositionError(
                f"base has {self.base.n} sinks but forest has "
                f"{self.forest.sources} sources"
            )

    @classmethod
    def vertex(cls, base: StrandDiagram) -> "GeneralizedStrandDiagram":
        return cls(base, WeightedElementaryForest.edges(base.n))

    def is_canonical(self) -> bool:
        return canonicalize_generalized(self) == self

    def __repr__(self) -> str:
        return f"GeneralizedStrandDiagram({self.base!r}, [{self.forest}])"


def _positions(comps: list[tuple[str, Weight]]) -> list[int]:
    out = []
    pos = 1
    for k, _ in comps:
        out.append(pos)
        pos += _SOURCES[k]
    return out


def canonicalize_generalized(g: GeneralizedStrandDiagram) -> GeneralizedStrandDiagram:
    """Rewrite to the unique representative of the class of ``g``.

    Fixpoint of three moves: weight-0 carets dissolve into edges,
    weight-1 carets are absorbed into the base, and carets meeting an
    opposite base-bottom vertex flip (weight w becomes 1-w) while that
    vertex leaves the base.  Each move strictly shrinks twice the caret
    count plus the base vertex count, so the loop terminates.
    """
    base = g.base
    comps = g.forest.pairs()
    changed = True
    while changed:
        changed = False
        # weight-0 carets dissolve
        for i, (k, w) in enumerate(comps):
            if k == SPLIT and w == 0:
                comps[i:i + 1] = [(EDGE, None)]
                changed = True
                break
            if k == MERGE and w == 0:
                comps[i:i + 1] = [(EDGE, None), (EDGE, None)]
                changed = True
                break
        if changed:
            continue
        # weight-1 carets are absorbed into the base
        pos = _positions(comps)
        for i, (k, w) in enumerate(comps):
            if w == 1:
                base = multiply(base, caret_diagram(base.n, k, pos[i]))
                if k == SPLIT:
                    comps[i:i + 1] = [(EDGE, None), (EDGE, None)]
                else:
                    comps[i:i + 1] = [(EDGE, None)]
                changed = True
                break
        if changed:
            continue
        # interface rewrites at the seam
        split_pairs = base.bottom_split_pairs()
        merge_stubs = base.bottom_merge_positions()
        pos = _positions(comps)
        for i, (k, w) in enumerate(comps):
            if k == MERGE and pos[i] in split_pairs:
                base = multiply(base, caret_diagram(base.n, MERGE, pos[i]))
                comps[i] = (SPLIT, 1 - w)
                changed = True
                break
            if k == SPLIT and pos[i] in merge_stubs:
                base = multiply(base, caret_diagram(base.n, SPLIT, pos[i]))
                comps[i] = (MERGE, 1 - w)
                changed = True
                break
    kinds = tuple(k for k, _ in comps)
    weights = tuple(w for _, w in comps)
    return GeneralizedStrandDiagram(base, WeightedElementaryForest(kinds, weights))


def random_gmove(g: GeneralizedStrandDiagram,
                 seed: Union[int, random.Random]) -> GeneralizedStrandDiagram:
    """A different representative of the class of ``g``.

    Inverts one canonicalization step: inserts a weight-0 caret, pulls a
    base-bottom vertex out as a weight-1 caret, or flips a caret while
    pushing its opposite vertex into the base.  Falls back to returning
    ``g`` unchanged if nothing applies (cannot happen for nonempty rows).
    """
    r = seed if isinstance(seed, random.Random) else random.Random(seed)
    base = g.base
    comps = g.forest.pairs()
    pos = _positions(comps)
    strand_comp = {}
    for i, (k, _) in enumerate(comps):
        for s in range(pos[i], pos[i] + _SOURCES[k]):
            strand_comp[s] = i

    moves: list[tuple] = []
    for i, (k, w) in enumerate(comps):
        if k == EDGE:
            moves.append(("edge_to_split0", i))
            if i + 1 < len(comps) and comps[i + 1][0] == EDGE:
                moves.append(("edges_to_merge0", i))
        else:
            moves.append(("flip", i))
    for p in base.bottom_split_pairs():
        i, j = strand_comp[p], strand_comp[p + 1]
        if i != j and comps[i][0] == EDGE and comps[j][0] == EDGE:
            moves.append(("pull_split", i))
    for p in base.bottom_merge_positions():
        i = strand_comp[p]
        if comps[i][0] == EDGE:
            moves.append(("pull_merge", i))
    if not moves:
        return g

    tag, i = r.choice(moves)
    pos_i = pos[i]
    if tag == "edge_to_split0":
        comps[i] = (SPLIT, Fraction(0))
    elif tag == "edges_to_merge0":
        comps[i:i + 2] = [(MERGE, Fraction(0))]
    elif tag == "flip":
        k, w = comps[i]
        base = multiply(base, caret_diagram(base.n, k, pos_i))
        comps[i] = (MERGE if k == SPLIT else SPLIT, 1 - w)
    elif tag == "pull_split":
        base = multiply(base, caret_diagram(base.n, MERGE, pos_i))
        comps[i:i + 2] = [(SPLIT, Fraction(1))]
    else:  # pull_merge
        base = multiply(base, caret_diagram(base.n, SPLIT, pos_i))
        comps[i:i + 1] = [(MERGE, Fraction(1))]
    kinds = tuple(k for k, _ in comps)
    weights = tuple(w for _, w in comps)
    return GeneralizedStrandDiagram(base, WeightedElementaryForest(kinds, weights))
