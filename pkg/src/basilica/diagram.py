"""Arc diagrams as a forest of four ternary trees over the base subdivision.

Trees are immutable nested tuples: a leaf is None, an internal node is a
3-tuple of subtrees.  Each internal node stands for the 1:2:1 subdivision
of its interval by the interval's primary arc.  Leaf contexts (which gap a
leaf borders) are carried by construction and cross-checked against the
ancestor computation in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .circle import Angle
from .errors import ParseError
from .lamination import (
    Arc,
    BASE_ARC_HALF,
    BASE_ARC_ZERO,
    StandardInterval,
    _descend,
    base_intervals,
    primary_arc,
    subdivide,
)

LEAF = None


@lru_cache(maxsize=None)
def _tree_leaf_count(tree) -> int:
    if tree is LEAF:
        return 1
    return sum(_tree_leaf_count(child) for child in tree)


@dataclass(frozen=True)
class LeafInfo:
    """One leaf interval of a diagram together with its gap context."""

    interval: StandardInterval
    labels: tuple | None   # (d1, d2) dyadic labels when central-adjacent
    behind: Arc | None     # bounding arc when the leaf sits behind an arc

    @property
    def is_central_adjacent(self) -> bool:
        return self.labels is not None


_BASE_CONTEXTS = (
    (("labels", (Fraction(0), Fraction(1, 2))),),
    (("behind", BASE_ARC_HALF),),
    (("labels", (Fraction(1, 2), Fraction(1))),),
    (("behind", BASE_ARC_ZERO),),
)


class ArcDiagram:
    """Immutable arc diagram; always contains the two base arcs."""

    __slots__ = ("forest", "_leaves", "_arcs")

    def __init__(self, forest):
        forest = tuple(forest)
        if len(forest) != 4:
            raise ValueError("forest must have four trees")
        object.__setattr__(self, "forest", forest)
        object.__setattr__(self, "_leaves", None)
        object.__setattr__(self, "_arcs", None)

    # -- derived structure ------------------------------------------------

    def leaves(self) -> tuple[LeafInfo, ...]:
        if self._leaves is None:
            out: list[LeafInfo] = []
            for tree, interval, ctx in zip(self.forest, base_intervals(), _BASE_CONTEXTS):
                kind, value = ctx[0]
                labels = value if kind == "labels" else None
                behind = value if kind == "behind" else None
                _walk_leaves(tree, interval, labels, behind, out)
            object.__setattr__(self, "_leaves", tuple(out))
        return self._leaves

    def leaf_intervals(self) -> tuple[StandardInterval, ...]:
        return tuple(info.interval for info in self.leaves())

    def boundary_points(self) -> tuple[Angle, ...]:
        """Left endpoints of the leaves, ccw from 1/6."""
        return tuple(Angle(info.interval.lo) for info in self.leaves())

    def arcs(self) -> frozenset:
        if self._arcs is None:
            found = {BASE_ARC_HALF, BASE_ARC_ZERO}
            for tree, interval in zip(self.forest, base_intervals()):
                _walk_arcs(tree, interval, found)
            object.__setattr__(self, "_arcs", frozenset(found))
        return self._arcs

    def leaf_count(self) -> int:
        return sum(_tree_leaf_count(tree) for tree in self.forest)

    def arc_count(self) -> int:
        return len(self.arcs())

    # -- operations ---------------------------------------------------------

    def expand_at(self, leaf_index: int) -> "ArcDiagram":
        """Replace the indexed leaf by its 1:2:1 subdivision."""
        count = self.leaf_count()
        if not 0 <= leaf_index < count:
            raise IndexError(f"leaf index {leaf_index} out of range (0..{count - 1})")
        forest = list(self.forest)
        for i, tree in enumerate(forest):
            n = _tree_leaf_count(tree)
            if leaf_index < n:
                forest[i] = _expand_tree(tree, leaf_index)
                return ArcDiagram(forest)
            leaf_index -= n
        raise AssertionError("unreachable")

    # -- identity / serialization ------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, ArcDiagram) and self.forest == other.forest

    def __hash__(self) -> int:
        return hash(self.forest)

    def __str__(self) -> str:
        return ",".join(_format_tree(tree) for tree in self.forest)

    def __repr__(self) -> str:
        return f"ArcDiagram({self})"


def _walk_leaves(tree, interval, labels, behind, out):
    if tree is LEAF:
        out.append(LeafInfo(interval, labels, behind))
        return
    arc = primary_arc(interval)
    left, middle, right = subdivide(interval)
    if labels is not None:
        d1, d2 = labels
        mid = (d1 + d2) / 2
        _walk_leaves(tree[0], left, (d1, mid), None, out)
        _walk_leaves(tree[1], middle, None, arc, out)
        _walk_leaves(tree[2], right, (mid, d2), None, out)
    else:
        _walk_leaves(tree[0], left, None, behind, out)
        _walk_leaves(tree[1], middle, None, arc, out)
        _walk_leaves(tree[2], right, None, behind, out)


def _walk_arcs(tree, interval, found):
    if tree is LEAF:
        return
    found.add(primary_arc(interval))
    for child, sub in zip(tree, subdivide(interval)):
        _walk_arcs(child, sub, found)


def _expand_tree(tree, leaf_index):
    if tree is LEAF:
        assert leaf_index == 0
        return (LEAF, LEAF, LEAF)
    children = []
    for child in tree:
        n = _tree_leaf_count(child)
        if 0 <= leaf_index < n:
            children.append(_expand_tree(child, leaf_index))
        else:
            children.append(child)
        leaf_index -= n
    return tuple(children)


def base_diagram() -> ArcDiagram:
    return ArcDiagram((LEAF, LEAF, LEAF, LEAF))


def _ensure_internal(tree, path):
    """Make the node addressed by the child-index path an internal node."""
    if tree is LEAF:
        tree = (LEAF, LEAF, LEAF)
    if not path:
        return tree
    children = list(tree)
    children[path[0]] = _ensure_internal(children[path[0]], path[1:])
    return tuple(children)


def minimal_diagram_containing(arcs) -> ArcDiagram:
    """The inclusion-minimal diagram whose arc set contains the given arcs."""
    forest = list(base_diagram().forest)
    for arc in arcs:
        if arc in (BASE_ARC_HALF, BASE_ARC_ZERO):
            continue
        a, b = arc.endpoints
        _descend(a, b)  # validates; raises NotAnArc on bad input
        interval = _find_defining_interval(arc)
        base_idx, path = interval.depth_path[0], interval.depth_path[1:]
        forest[base_idx] = _ensure_internal(forest[base_idx], path)
    return ArcDiagram(forest)


def _find_defining_interval(arc: Arc) -> StandardInterval:
    """The standard interval whose primary arc is the given arc."""
    a, b = arc.endpoints
    for base in base_intervals():
        if primary_arc(base).endpoints == arc.endpoints:
            return base
    interval = None
    for base in base_intervals():
        if base.contains(a.f, strict=True) and base.contains(b.f, strict=True):
            interval = base
            break
    if interval is None:
        raise ValueError(f"{arc} has no defining interval")
    while primary_arc(interval).endpoints != arc.endpoints:
        for child in subdivide(interval):
            if child.contains(a.f, strict=True) and child.contains(b.f, strict=True):
                interval = child
                break
        else:
            raise ValueError(f"{arc} has no defining interval")
    return interval


def _merge_trees(s, t):
    if s is LEAF:
        return t
    if t is LEAF:
        return s
    return tuple(_merge_trees(a, b) for a, b in zip(s, t))


def common_refinement(d1: ArcDiagram, d2: ArcDiagram) -> ArcDiagram:
    """Minimal diagram containing the arcs of both (node-wise forest union)."""
    return ArcDiagram(tuple(_merge_trees(a, b) for a, b in zip(d1.forest, d2.forest)))


def refines(coarse: ArcDiagram, fine: ArcDiagram) -> bool:
    return common_refinement(coarse, fine) == fine


def subtree_shapes(coarse: ArcDiagram, fine: ArcDiagram) -> list:
    """For each leaf of `coarse`, the subtree of `fine` sitting at it.

    Requires fine to refine coarse.
    """
    shapes: list = []
    for c, f in zip(coarse.forest, fine.forest):
        _collect_shapes(c, f, shapes)
    return shapes


def _collect_shapes(coarse, fine, out):
    if coarse is LEAF:
        out.append(fine)
        return
    if fine is LEAF:
        raise ValueError("diagram does not refine the coarse one")
    for c, f in zip(coarse, fine):
        _collect_shapes(c, f, out)


def graft(diagram: ArcDiagram, shapes) -> ArcDiagram:
    """Attach the given subtree shapes at the leaves of the diagram, in order."""
    shapes = list(shapes)
    if len(shapes) != diagram.leaf_count():
        raise ValueError("shape count must match leaf count")
    it = iter(shapes)
    return ArcDiagram(tuple(_graft_tree(tree, it) for tree in diagram.forest))


def _graft_tree(tree, it):
    if tree is LEAF:
        return next(it)
    return tuple(_graft_tree(child, it) for child in tree)


def sibling_triples(diagram: ArcDiagram) -> list[int]:
    """Starting leaf positions of internal nodes whose children are all leaves."""
    out: list[int] = []
    offset = 0
    for tree in diagram.forest:
        _scan_triples(tree, offset, out)
        offset += _tree_leaf_count(tree)
    return out


def _scan_triples(tree, start, out):
    if tree is LEAF:
        return
    if all(child is LEAF for child in tree):
        out.append(start)
        return
    for child in tree:
        _scan_triples(child, start, out)
        start += _tree_leaf_count(child)


def collapse_at(diagram: ArcDiagram, start: int) -> ArcDiagram:
    """Collapse the all-leaf internal node starting at the given leaf position."""
    forest = list(diagram.forest)
    for i, tree in enumerate(forest):
        n = _tree_leaf_count(tree)
        if start < n:
            forest[i] = _collapse_tree(tree, start)
            return ArcDiagram(forest)
        start -= n
    raise IndexError("collapse position out of range")


def _collapse_tree(tree, start):
    if tree is LEAF:
        raise ValueError("no collapsible node at position")
    if all(child is LEAF for child in tree):
        if start != 0:
            raise ValueError("position does not start the triple")
        return LEAF
    children = list(tree)
    for i, child in enumerate(children):
        n = _tree_leaf_count(child)
        if 0 <= start < n:
            children[i] = _collapse_tree(child, start)
            return tuple(children)
        start -= n
    raise ValueError("no collapsible node at position")


# -- wire format -------------------------------------------------------------

def _format_tree(tree) -> str:
    if tree is LEAF:
        return "."
    return "(" + ",".join(_format_tree(child) for child in tree) + ")"


def _parse_tree(text: str, pos: int):
    if pos >= len(text):
        raise ParseError("unexpected end of diagram text")
    if text[pos] == ".":
        return LEAF, pos + 1
    if text[pos] != "(":
        raise ParseError(f"unexpected character {text[pos]!r} at {pos}")
    pos += 1
    children = []
    for i in range(3):
        child, pos = _parse_tree(text, pos)
        children.append(child)
        expected = "," if i < 2 else ")"
        if pos >= len(text) or text[pos] != expected:
            raise ParseError(f"expected {expected!r} at {pos}")
        pos += 1
    return tuple(children), pos


def parse_diagram(text: str) -> ArcDiagram:
    text = text.replace(" ", "")
    trees = []
    pos = 0
    for i in range(4):
        tree, pos = _parse_tree(text, pos)
        trees.append(tree)
        if i < 3:
            if pos >= len(text) or text[pos] != ",":
                raise ParseError(f"expected ',' between trees at {pos}")
            pos += 1
    if pos != len(text):
        raise ParseError(f"trailing characters at {pos}")
    return ArcDiagram(trees)
