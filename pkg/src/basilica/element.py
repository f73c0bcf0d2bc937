"""Group elements as arc pair diagrams.

An element is a pair of arc diagrams with the same number of leaves
together with a rotation offset: domain leaf i is carried onto range
leaf (i + offset) mod m.  Validity requires every arc of the domain
diagram to land on an arc of the range diagram under the induced
boundary correspondence.
"""

from __future__ import annotations

from fractions import Fraction

from .circle import Angle, PLCircleMap, pl_eval
from .diagram import (
    ArcDiagram,
    base_diagram,
    collapse_at,
    common_refinement,
    graft,
    parse_diagram,
    sibling_triples,
    subtree_shapes,
    _tree_leaf_count,
)
from .errors import ArcMismatch, LeafCountMismatch, NotAnArc, ParseError
from .lamination import (
    Arc,
    BASE_ARC_HALF,
    GapId,
    arc_check,
    is_central,
    neighbor_gap,
)


class Element:
    """An arc pair diagram (domain, range, offset)."""

    __slots__ = ("domain", "range", "offset", "_pl")

    def __init__(self, domain: ArcDiagram, range_: ArcDiagram, offset: int):
        m = domain.leaf_count()
        if range_.leaf_count() != m:
            raise LeafCountMismatch((domain.leaf_count(), range_.leaf_count()))
        self.domain = domain
        self.range = range_
        self.offset = offset % m
        self._pl = None

    def leaf_count(self) -> int:
        return self.domain.leaf_count()

    def to_pl(self) -> PLCircleMap:
        if self._pl is None:
            bp_d = self.domain.boundary_points()
            bp_r = self.range.boundary_points()
            m = len(bp_d)
            pairs = [(bp_d[i], bp_r[(i + self.offset) % m]) for i in range(m)]
            self._pl = PLCircleMap(pairs)
        return self._pl

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return (
            self.offset == other.offset
            and self.domain == other.domain
            and self.range == other.range
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.range, self.offset))

    def __str__(self) -> str:
        return f"[{self.domain} ; {self.range} ; {self.offset}]"

    def __repr__(self) -> str:
        return f"Element({self})"


def make(domain: ArcDiagram, range_: ArcDiagram, offset: int) -> Element:
    """Build an element, checking that arcs are carried onto arcs."""
    e = Element(domain, range_, offset)
    bp_d = e.domain.boundary_points()
    bp_r = e.range.boundary_points()
    m = len(bp_d)
    pos = {p: i for i, p in enumerate(bp_d)}
    targets = {a.endpoints for a in e.range.arcs()}
    for arc in e.domain.arcs():
        pts = arc.endpoints
        image = frozenset(bp_r[(pos[p] + e.offset) % m] for p in pts)
        if image not in targets:
            raise ArcMismatch(arc)
    return e


def identity() -> Element:
    return Element(base_diagram(), base_diagram(), 0)


def _generator_raw(name: str) -> Element:
    base = base_diagram()
    if name == "alpha":
        return make(base.expand_at(1), base.expand_at(3), 5)
    if name == "beta":
        return make(base.expand_at(2), base.expand_at(0), 0)
    if name == "gamma":
        return make(
            base.expand_at(0).expand_at(2),
            base.expand_at(0).expand_at(0),
            0,
        )
    if name == "delta":
        return make(base, base, 2)
    raise ValueError(f"unknown generator {name!r}")


_GENERATORS: dict[str, Element] = {}


def generator(name: str) -> Element:
    if name not in _GENERATORS:
        _GENERATORS[name] = _generator_raw(name)
    return _GENERATORS[name]


def inverse(e: Element) -> Element:
    return Element(e.range, e.domain, -e.offset)


def reduce(e: Element) -> Element:
    """Cancel matching sibling triples until none remain."""
    while True:
        m = e.leaf_count()
        range_starts = set(sibling_triples(e.range))
        hit = None
        for s in sibling_triples(e.domain):
            t = (s + e.offset) % m
            if t <= m - 3 and t in range_starts:
                hit = (s, t)
                break
        if hit is None:
            return e
        s, t = hit
        e = Element(
            collapse_at(e.domain, s),
            collapse_at(e.range, t),
            (t - s) % (m - 2),
        )


def equal(a: Element, b: Element) -> bool:
    return reduce(a) == reduce(b)


def expand_pair(e: Element, i: int) -> Element:
    """Expand domain leaf i and the range leaf it corresponds to."""
    m = e.leaf_count()
    t = (i + e.offset) % m
    offset = t if i == 0 else e.offset + (2 if t < e.offset else 0)
    return Element(e.domain.expand_at(i), e.range.expand_at(t), offset)


def _expanded_to_range(e: Element, fine: ArcDiagram) -> Element:
    """Rewrite e so that its range diagram becomes the refinement `fine`."""
    shapes = subtree_shapes(e.range, fine)
    m = e.leaf_count()
    dom_shapes = [shapes[(i + e.offset) % m] for i in range(m)]
    offset = sum(_tree_leaf_count(shapes[j]) for j in range(e.offset))
    return Element(graft(e.domain, dom_shapes), fine, offset)


def _expanded_to_domain(e: Element, fine: ArcDiagram) -> Element:
    shapes = subtree_shapes(e.domain, fine)
    m = e.leaf_count()
    ran_shapes = [shapes[(j - e.offset) % m] for j in range(m)]
    offset = sum(_tree_leaf_count(ran_shapes[j]) for j in range(e.offset))
    return Element(fine, graft(e.range, ran_shapes), offset)


def compose(f: Element, g: Element) -> Element:
    """f after g.  The result is reduced."""
    mid = common_refinement(g.range, f.domain)
    g2 = _expanded_to_range(g, mid)
    f2 = _expanded_to_domain(f, mid)
    m = mid.leaf_count()
    return reduce(Element(g2.domain, f2.range, (g2.offset + f2.offset) % m))


def evaluate(e: Element, point: Angle | Fraction) -> Angle:
    p = point if isinstance(point, Angle) else Angle(Fraction(point))
    return pl_eval(e.to_pl(), p)


def image_of_arc(e: Element, arc: Arc) -> Arc:
    pl = e.to_pl()
    a, b = sorted(arc.endpoints)
    try:
        return arc_check(pl(a), pl(b))
    except NotAnArc:
        raise ArcMismatch(arc)


def image_of_gap(e: Element, gap: GapId) -> GapId:
    """Track a complementary gap through the element.

    A gap is pinned down by a bounding arc together with the side of
    that arc it sits on; both move predictably under the map.
    """
    if gap.arc is None:
        arc, side = BASE_ARC_HALF, "centerside"
    else:
        arc, side = gap.arc, "farside"
    image = image_of_arc(e, arc)
    far = arc.farside()
    preserved = evaluate(e, Angle(far.lo)).f == image.farside().lo
    if not preserved:
        side = "centerside" if side == "farside" else "farside"
    return neighbor_gap(image, side)


def is_in_stab(e: Element) -> bool:
    """Does the element fix the central gap?"""
    return image_of_gap(e, GapId.central()).arc is None


def is_in_rist(e: Element) -> bool:
    """Is the element supported behind central arcs only?"""
    r = reduce(e)
    return all(is_central(a) for a in r.domain.arcs()) and all(
        is_central(a) for a in r.range.arcs()
    )


def parse_element(text: str) -> Element:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ParseError(text)
    parts = body[1:-1].split(";")
    if len(parts) != 3:
        raise ParseError(text)
    domain = parse_diagram(parts[0])
    range_ = parse_diagram(parts[1])
    try:
        offset = int(parts[2].strip())
    except ValueError:
        raise ParseError(parts[2].strip())
    return make(domain, range_, offset)
