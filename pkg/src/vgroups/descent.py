"""The integer-indexed separated cover of a structured group, evaluated
lazily, with window-bounded verification.

For a base object the cover lives on (all integers) x (base carrier)
with componentwise addition and the piecewise structure

    level(z) < level(z')          -> base value at (x, x')
    same level, same point        -> top
    otherwise                     -> bottom

The carrier is genuinely infinite, so nothing is ever materialized
globally: every check runs on a finite window of levels -radius..radius
and the one global identity that matters (finality of the projection)
has a finite witness, the pair of levels 0 and 1, whose join already
realizes the base value.  Window checks are expected to pass at every
radius; a failure is a loud theorem-check failure, not a report state.

The kernel-pair data and covering actions this module produces are
object-level constructions with their laws verified on windows.  No
claim is made about the induced equivalence of categories over the
infinite site; that is deliberately out of reach of a finite check.

Evaluation is a pure function of the formula; no caching, safe to share.
"""

from dataclasses import dataclass

from .errors import NonIntegralQuantaleError, StructuralError, TheoremCheckError
from .reports import ValidationReport
from .vgroup import classify_object, kernel

DEFAULT_WINDOW_RADIUS = 3


class IntegerIndexedCover:
    """Lazy separated cover over a base object (levels are arbitrary ints)."""

    __slots__ = ("base",)

    def __init__(self, base):
        self.base = base

    @property
    def quantale(self):
        return self.base.quantale

    def relation(self, p, q):
        """The piecewise structure value at a pair of (level, point) elements."""
        (z1, x1), (z2, x2) = p, q
        if z1 < z2:
            return self.base.entry(x1, x2)
        if z1 == z2 and x1 == x2:
            return self.quantale.top
        return self.quantale.bottom

    def op(self, p, q):
        return (p[0] + q[0], self.base.group.op(p[1], q[1]))

    def neg(self, p):
        return (-p[0], self.base.group.inv(p[1]))

    @property
    def identity(self):
        return (0, self.base.group.identity)

    def projection(self, p):
        return p[1]

    def section(self, x):
        return (0, x)

    def window_elements(self, radius):
        return [(z, x) for z in range(-radius, radius + 1)
                for x in range(self.base.size)]


@dataclass(frozen=True)
class CoverProjection:
    """Descriptor of the forgetful projection (level, point) -> point."""
    base_size: int

    def as_dict(self):
        return {"formula": "(z, x) -> x", "section": "x -> (0, x)",
                "base_size": self.base_size}


def descent_cover(g):
    """The lazy cover with its projection descriptor; nothing materialized."""
    if not g.quantale.is_integral:
        raise NonIntegralQuantaleError(
            "the separated cover construction needs unit = top")
    return IntegerIndexedCover(g), CoverProjection(base_size=g.size)


@dataclass
class Window:
    """Materialization of the cover on levels -radius..radius.

    The band is not closed under addition, so this is a structured graph
    for inspection, not an object in its own right.
    """
    cover: IntegerIndexedCover
    radius: int

    def __post_init__(self):
        if self.radius < 1:
            raise StructuralError("window radius must be at least 1")
        self.elements = self.cover.window_elements(self.radius)
        self.matrix = [[self.cover.relation(p, q) for q in self.elements]
                       for p in self.elements]

    def agrees_with_formula(self):
        return all(self.matrix[i][j] == self.cover.relation(p, q)
                   for i, p in enumerate(self.elements)
                   for j, q in enumerate(self.elements))

    def as_dict(self):
        q = self.cover.quantale
        names = self.cover.base.group.names
        return {
            "radius": self.radius,
            "elements": [[z, names[x]] for (z, x) in self.elements],
            "structure": [[q.label(v) for v in row] for row in self.matrix],
        }


def verify_cover_window(cover, radius):
    """Exhaustive window check of the cover's claimed properties.

    Scans reflexivity, transitivity on in-window triples, invariance
    under right shifts that stay in the window, separation (against the
    identity, and over all window pairs), compatibility of the
    projection, split surjectivity through the canonical section, and
    finality of the projection: for every base pair the single witness
    at levels (0, 1) must already give the base value, the window join
    must equal it, and the join must not grow at radius + 1.
    """
    report = ValidationReport(subject=f"cover-window-r{radius}")
    if radius < 1:
        raise StructuralError("window radius must be at least 1")
    base = cover.base
    q = base.quantale
    top = q.top
    elems = cover.window_elements(radius)
    rel = cover.relation

    for p in elems:
        if rel(p, p) != top:
            report.add("window-reflexivity", p)
            break

    done = False
    for p in elems:
        for r in elems:
            for s in elems:
                if not q.leq(q.tensor(rel(p, r), rel(r, s)), rel(p, s)):
                    report.add("window-transitivity", (p, r, s))
                    done = True
                    break
            if done:
                break
        if done:
            break

    done = False
    for shift in elems:
        for p in elems:
            ps = cover.op(p, shift)
            if abs(ps[0]) > radius:
                continue
            for r in elems:
                rs = cover.op(r, shift)
                if abs(rs[0]) > radius:
                    continue
                if rel(p, r) != rel(ps, rs):
                    report.add("window-shift-invariance", (shift, p, r))
                    done = True
                    break
            if done:
                break
        if done:
            break

    ident = cover.identity
    for p in elems:
        if p != ident and rel(p, ident) == top and rel(ident, p) == top:
            report.add("window-separation-at-identity", p)
            break
    done = False
    for p in elems:
        for r in elems:
            if p != r and q.leq(q.unit, rel(p, r)) and q.leq(q.unit, rel(r, p)):
                report.add("window-separation", (p, r))
                done = True
                break
        if done:
            break

    for p in elems:
        broke = False
        for r in elems:
            if not q.leq(rel(p, r), base.entry(p[1], r[1])):
                report.add("projection-compatibility", (p, r))
                broke = True
                break
        if broke:
            break

    for x in range(base.size):
        if cover.projection(cover.section(x)) != x:
            report.add("section-splits-projection", (x,))
            break

    finality = []
    for x1 in range(base.size):
        for x2 in range(base.size):
            want = base.entry(x1, x2)
            witness = rel((0, x1), (1, x2))
            window_join = q.join_all(
                rel((z1, x1), (z2, x2))
                for z1 in range(-radius, radius + 1)
                for z2 in range(-radius, radius + 1))
            grown_join = q.join_all(
                rel((z1, x1), (z2, x2))
                for z1 in range(-radius - 1, radius + 2)
                for z2 in range(-radius - 1, radius + 2))
            finality.append(window_join)
            if witness != want:
                report.add("finality-witness", (x1, x2))
            if window_join != want:
                report.add("finality-window-join", (x1, x2))
            if grown_join != window_join:
                report.add("finality-join-stability", (x1, x2))

    report.notes["finality_joins"] = [q.label(v) for v in finality]
    report.notes["window_size"] = len(elems)
    return report


def kernel_pair_groupoid(cover, radius):
    """Windowed kernel-pair data of the projection, with its meet structure.

    Carrier: pairs of cover elements over the same base point, encoded
    as (level, level, point).  Verifies that both projections are
    structure-compatible, that the diagonal embeds the cover's structure
    on the nose, and that the meet structure is separated on the window.
    """
    report = ValidationReport(subject=f"kernel-pair-groupoid-r{radius}")
    base = cover.base
    q = base.quantale
    rel = cover.relation
    carrier = [(z1, z2, x)
               for z1 in range(-radius, radius + 1)
               for z2 in range(-radius, radius + 1)
               for x in range(base.size)]

    def structure(e1, e2):
        (a1, b1, x1), (a2, b2, x2) = e1, e2
        return q.meet(rel((a1, x1), (a2, x2)), rel((b1, x1), (b2, x2)))

    done = False
    for e1 in carrier:
        for e2 in carrier:
            v = structure(e1, e2)
            if not q.leq(v, rel((e1[0], e1[2]), (e2[0], e2[2]))):
                report.add("first-projection-compatibility", (e1, e2))
                done = True
                break
            if not q.leq(v, rel((e1[1], e1[2]), (e2[1], e2[2]))):
                report.add("second-projection-compatibility", (e1, e2))
                done = True
                break
        if done:
            break

    for p in cover.window_elements(radius):
        broke = False
        for r in cover.window_elements(radius):
            d1 = (p[0], p[0], p[1])
            d2 = (r[0], r[0], r[1])
            if structure(d1, d2) != rel(p, r):
                report.add("diagonal-embedding", (p, r))
                broke = True
                break
        if broke:
            break

    done = False
    for e1 in carrier:
        for e2 in carrier:
            if e1 != e2 and q.leq(q.unit, structure(e1, e2)) \
                    and q.leq(q.unit, structure(e2, e1)):
                report.add("groupoid-separation", (e1, e2))
                done = True
                break
        if done:
            break

    report.notes["carrier_size"] = len(carrier)
    return report


def action_of_covering(alpha, cover, radius):
    """Windowed canonical action induced by pulling a covering back.

    ``alpha`` must be a covering into the cover's base (separated
    kernel).  The action carrier is (levels) x (domain of alpha) with
    the pullback structure; the action map drops the acting pair onto
    its first level.  Verifies the unit, associativity and fibration
    conditions on all in-window composable tuples, the compatibility of
    the anchor map, and separation of the carrier on the window.
    """
    if alpha.cod != cover.base:
        raise StructuralError("the covering must land in the cover's base")
    ker_obj, _ = kernel(alpha)
    if not classify_object(ker_obj).separated:
        raise StructuralError(
            "not a covering: the kernel is not separated")
    report = ValidationReport(subject=f"action-r{radius}")
    base = cover.base
    dom = alpha.dom
    q = base.quantale
    rel = cover.relation
    levels = range(-radius, radius + 1)
    carrier = [(z, a) for z in levels for a in range(dom.size)]

    def anchor(w):
        return (w[0], alpha(w[1]))

    def carrier_structure(w1, w2):
        return q.meet(rel(anchor(w1), anchor(w2)), dom.entry(w1[1], w2[1]))

    # acting arrows: (z1, z2, x) with x a base point; composable with w when
    # the second level and the anchored point match.
    def action(arrow, w):
        return (arrow[0], w[1])

    for w in carrier:
        z, a = w
        arrow = (z, z, alpha(a))
        if action(arrow, w) != w:
            report.add("action-unit", (w,))
            break

    done = False
    for a_elt in range(dom.size):
        x = alpha(a_elt)
        for z1 in levels:
            for z2 in levels:
                for z3 in levels:
                    w = (z3, a_elt)
                    inner = (z2, z3, x)
                    outer = (z1, z2, x)
                    composed = (z1, z3, x)
                    if action(composed, w) != action(outer, action(inner, w)):
                        report.add("action-associativity", (z1, z2, z3, a_elt))
                        done = True
                        break
                if done:
                    break
            if done:
                break
        if done:
            break

    for a_elt in range(dom.size):
        x = alpha(a_elt)
        broke = False
        for z1 in levels:
            for z2 in levels:
                w = (z2, a_elt)
                arrow = (z1, z2, x)
                if anchor(action(arrow, w)) != (z1, x):
                    report.add("action-fibration", (z1, z2, a_elt))
                    broke = True
                    break
            if broke:
                break
        if broke:
            break

    done = False
    for w1 in carrier:
        for w2 in carrier:
            if not q.leq(carrier_structure(w1, w2), rel(anchor(w1), anchor(w2))):
                report.add("anchor-compatibility", (w1, w2))
                done = True
                break
        if done:
            break

    # the action map itself must be structure-compatible: composable pairs
    # carry the meet of the acting-arrow structure and the carrier structure
    def groupoid_structure(e1, e2):
        (a1, b1, x1), (a2, b2, x2) = e1, e2
        return q.meet(rel((a1, x1), (a2, x2)), rel((b1, x1), (b2, x2)))

    composable = [((z1, z2, alpha(a)), (z2, a))
                  for z1 in levels for z2 in levels for a in range(dom.size)]
    done = False
    for arrow1, w1 in composable:
        for arrow2, w2 in composable:
            before = q.meet(groupoid_structure(arrow1, arrow2),
                            carrier_structure(w1, w2))
            after = carrier_structure(action(arrow1, w1), action(arrow2, w2))
            if not q.leq(before, after):
                report.add("action-map-compatibility", (arrow1, w1, arrow2, w2))
                done = True
                break
        if done:
            break

    done = False
    for w1 in carrier:
        for w2 in carrier:
            if w1 != w2 and q.leq(q.unit, carrier_structure(w1, w2)) \
                    and q.leq(q.unit, carrier_structure(w2, w1)):
                report.add("carrier-separation", (w1, w2))
                done = True
                break
        if done:
            break

    report.notes["carrier_size"] = len(carrier)
    return report


def require_clean(report):
    """Promote report violations to a theorem-check failure."""
    if not report.ok:
        raise TheoremCheckError(
            f"{report.subject}: {report.laws_violated()}")
    return report
