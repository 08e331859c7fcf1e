"""Pillar diagrams: Temperley-Lieb diagrams with non-negative labels on clockwise faces.

Combinatorial model
-------------------
Marked points of the n-box are numbered 1..2n: top points 1..n left to right,
then bottom points n+1..2n right to left (bottom point above x = j is
``2n + 1 - j``).  Boundary *gap* ``k`` (0 <= k < 2n) is the stretch of box
boundary between marked points ``k`` and ``k + 1`` (point 0 means point 2n), so
gap 0 contains the left wall and gap n the right wall.  The faces of a
non-crossing matching are the orbits of ``k -> partner(k + 1)`` on gaps, and a
face is clockwise exactly when its gaps are odd.

Closed loops are recorded as a forest: each face holds a tuple of
:class:`Region` objects, one per loop whose immediate exterior is that face,
describing the region immediately inside the loop.  Faces never store
coordinates; everything is derived from the matching and the forest.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .coxeter import CoxeterGraph, FCElement, Word, inverse


@dataclass(frozen=True, order=True)
class Region:
    """A face and everything nested inside it through closed loops."""

    label: int
    loops: tuple["Region", ...] = ()

    def with_loops(self, loops: Iterable["Region"]) -> "Region":
        return Region(self.label, tuple(sorted(loops)))

    def count_loops(self) -> int:
        return sum(1 + r.count_loops() for r in self.loops)

    def iter_regions(self) -> Iterable["Region"]:
        yield self
        for r in self.loops:
            yield from r.iter_regions()


def gap_parity_clockwise(k: int) -> bool:
    return k % 2 == 1


@lru_cache(maxsize=None)
def base_faces(n: int, partner: tuple[int, ...]) -> tuple[frozenset, ...]:
    """Faces of the matching as sets of gaps, ordered by smallest gap."""
    two_n = 2 * n
    seen = [False] * two_n
    faces = []
    for start in range(two_n):
        if seen[start]:
            continue
        orbit = []
        k = start
        while not seen[k]:
            seen[k] = True
            orbit.append(k)
            k = _next_gap(partner, k, two_n)
        faces.append(frozenset(orbit))
    return tuple(sorted(faces, key=min))


def _next_gap(partner: tuple[int, ...], k: int, two_n: int) -> int:
    p = k + 1  # the marked point just after gap k, in 1..2n
    return partner[p - 1] % two_n


def _check_matching(n: int, partner: Sequence[int]) -> None:
    two_n = 2 * n
    if len(partner) != two_n:
        raise ValueError(f"matching must have length {two_n}")
    for p in range(1, two_n + 1):
        q = partner[p - 1]
        if not 1 <= q <= two_n or q == p or partner[q - 1] != p:
            raise ValueError(f"matching is not a fixed-point-free involution at point {p}")
    for p in range(1, two_n + 1):
        q = partner[p - 1]
        if p < q:
            for r in range(p + 1, q):
                s = partner[r - 1]
                if not p < s < q:
                    raise ValueError(f"arcs ({p},{q}) and ({r},{s}) cross")


@dataclass(frozen=True)
class PillarDiagram:
    n: int
    partner: tuple[int, ...]
    faces: tuple[Region, ...]

    @property
    def face_gaps(self) -> tuple[frozenset, ...]:
        return base_faces(self.n, self.partner)

    def face_index_of_gap(self, k: int) -> int:
        for i, gaps in enumerate(self.face_gaps):
            if k in gaps:
                return i
        raise KeyError(k)

    def face_is_clockwise(self, i: int) -> bool:
        return gap_parity_clockwise(min(self.face_gaps[i]))

    def count_loops(self) -> int:
        return sum(r.count_loops() for r in self.faces)

    def propagating(self) -> list[tuple[int, int]]:
        """Through strands as (top x, bottom x) pairs."""
        out = []
        for p in range(1, self.n + 1):
            q = self.partner[p - 1]
            if q > self.n:
                out.append((p, 2 * self.n + 1 - q))
        return out

    def validate(self) -> None:
        _check_matching(self.n, self.partner)
        if len(self.faces) != len(self.face_gaps):
            raise ValueError("one region per face of the matching is required")

        def walk(region: Region, clockwise: bool):
            if region.label < 0:
                raise ValueError("labels must be non-negative")
            if not clockwise and region.label != 0:
                raise ValueError("anticlockwise faces must be labelled 0")
            for inner in region.loops:
                walk(inner, not clockwise)

        for i, region in enumerate(self.faces):
            walk(region, self.face_is_clockwise(i))
        if self.face_is_clockwise(self.face_index_of_gap(0)):
            raise ValueError("the face at the left wall must be anticlockwise")


@dataclass(frozen=True)
class ScaledDiagram:
    """``delta**delta_exp`` times a pillar diagram."""

    delta_exp: int
    diagram: PillarDiagram

    @property
    def n(self) -> int:
        return self.diagram.n


def _make(n: int, partner: Sequence[int], labels: dict[int, int] | None = None) -> PillarDiagram:
    partner = tuple(partner)
    gaps = base_faces(n, partner)
    labels = labels or {}
    faces = []
    for fg in gaps:
        lab = 0
        for k, v in labels.items():
            if k in fg:
                lab += v
        faces.append(Region(lab))
    d = PillarDiagram(n, partner, tuple(faces))
    d.validate()
    return d


@lru_cache(maxsize=None)
def identity_diagram(n: int) -> PillarDiagram:
    return _make(n, [2 * n + 1 - p for p in range(1, 2 * n + 1)])


@lru_cache(maxsize=None)
def gen_E(k: int, n: int) -> PillarDiagram:
    """Cup-cap at positions k, k+1; every other strand propagates; all labels 0."""
    if not 1 <= k < n:
        raise ValueError(f"E_k needs 1 <= k < n, got k={k}, n={n}")
    partner = [2 * n + 1 - p for p in range(1, 2 * n + 1)]
    pairs = [(k, k + 1), (2 * n - k, 2 * n + 1 - k)]
    for a, b in pairs:
        partner[a - 1] = b
        partner[b - 1] = a
    return _make(n, partner)


@lru_cache(maxsize=None)
def gen_B(k: int, n: int) -> PillarDiagram:
    """All strands propagate; the strip between strands k and k+1 carries label 1."""
    if not 1 <= k < n:
        raise ValueError(f"B_k needs 1 <= k < n, got k={k}, n={n}")
    if k % 2 == 0:
        raise ValueError("the strip between strands k and k+1 is clockwise only for odd k")
    return _make(n, [2 * n + 1 - p for p in range(1, 2 * n + 1)], {k: 1})


def generator_diagram(s: int, n: int) -> PillarDiagram:
    return gen_B(3, n) if s == 0 else gen_E(s, n)


class _UnionFind:
    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _as_scaled(d: PillarDiagram | ScaledDiagram) -> ScaledDiagram:
    return d if isinstance(d, ScaledDiagram) else ScaledDiagram(0, d)


def compose(top: PillarDiagram | ScaledDiagram, bottom: PillarDiagram | ScaledDiagram) -> ScaledDiagram:
    """Stack ``top`` over ``bottom``; merged faces add their labels.  No reduction."""
    top, bottom = _as_scaled(top), _as_scaled(bottom)
    d1, d2 = top.diagram, bottom.diagram
    if d1.n != d2.n:
        raise ValueError("diagrams of different rank cannot be composed")
    n = d1.n
    two_n = 2 * n

    # strands: follow arcs through the interface
    partner = [0] * two_n
    visited_mid = set()
    for p in range(1, two_n + 1):
        if partner[p - 1]:
            continue
        side, point = (1, p) if p <= n else (2, p)
        while True:
            if side == 1:
                q = d1.partner[point - 1]
                if q <= n:
                    end = q
                    break
                x = two_n + 1 - q
                visited_mid.add(x)
                side, point = 2, x
            else:
                q = d2.partner[point - 1]
                if q > n:
                    end = q
                    break
                visited_mid.add(q)
                side, point = 1, two_n + 1 - q
        partner[p - 1] = end
        partner[end - 1] = p

    new_loops: list[list[int]] = []
    for x0 in range(1, n + 1):
        if x0 in visited_mid:
            continue
        xs = []
        x = x0
        while x not in visited_mid:
            visited_mid.add(x)
            xs.append(x)
            # leave the interface downward into d2, come back up, then through d1
            y = d2.partner[x - 1]  # a top point of d2, since x lies on a loop
            visited_mid.add(y)
            xs.append(y)
            q = d1.partner[two_n + 1 - y - 1]
            x = two_n + 1 - q
        new_loops.append(sorted(set(xs)))

    # faces: merge across interface gaps 0..n
    g1, g2 = d1.face_gaps, d2.face_gaps
    uf = _UnionFind([(1, i) for i in range(len(g1))] + [(2, j) for j in range(len(g2))])

    def d1_face_at_interface(j):
        k = 0 if j == 0 else (n if j == n else two_n - j)
        return (1, d1.face_index_of_gap(k))

    def d2_face_at_interface(j):
        return (2, d2.face_index_of_gap(j))

    for j in range(n + 1):
        uf.union(d1_face_at_interface(j), d2_face_at_interface(j))

    comps: dict = {}
    for key in uf.parent:
        root = uf.find(key)
        comps.setdefault(root, []).append(key)

    def outer_gaps(key):
        side, i = key
        if side == 1:
            return {k for k in g1[i] if k <= n}
        return {k for k in g2[i] if k == 0 or k >= n}

    comp_label = {}
    comp_gaps = {}
    comp_old = {}
    for root, members in comps.items():
        label = 0
        gaps = set()
        old = []
        for key in members:
            region = (d1 if key[0] == 1 else d2).faces[key[1]]
            label += region.label
            gaps |= outer_gaps(key)
            old.extend(region.loops)
        comp_label[root] = label
        comp_gaps[root] = frozenset(gaps)
        comp_old[root] = old

    def comp_at_interface(j):
        return uf.find(d1_face_at_interface(j))

    inner_of_loop = []
    outer_of_loop = []
    for xs in new_loops:
        x1 = xs[0]
        inner_of_loop.append(comp_at_interface(x1))
        outer_of_loop.append(comp_at_interface(x1 - 1))

    enclosed = [r for r in comps if not comp_gaps[r]]
    if sorted(enclosed) != sorted(inner_of_loop) or len(set(inner_of_loop)) != len(inner_of_loop):
        raise AssertionError("planar structure inconsistent: enclosed faces do not match new loops")

    children: dict = {r: list(comp_old[r]) for r in comps}
    built: dict = {}

    def build(root) -> Region:
        if root in built:
            return built[root]
        kids = list(children[root])
        for li, outer in enumerate(outer_of_loop):
            if outer == root:
                kids.append(build(inner_of_loop[li]))
        region = Region(comp_label[root], tuple(sorted(kids)))
        built[root] = region
        return region

    new_partner = tuple(partner)
    new_gaps = base_faces(n, new_partner)
    by_gaps = {comp_gaps[r]: r for r in comps if comp_gaps[r]}
    if set(by_gaps) != set(new_gaps):
        raise AssertionError("planar structure inconsistent: merged faces disagree with face tracing")
    faces = tuple(build(by_gaps[fg]) for fg in new_gaps)
    return ScaledDiagram(top.delta_exp + bottom.delta_exp, PillarDiagram(n, new_partner, faces))


def _reduce_region(region: Region) -> tuple[Region, int]:
    gain = 0
    label = region.label
    if label >= 2:
        gain += label - 1
        label = 1
    for inner in region.loops:
        reduced, g = _reduce_region(inner)
        gain += g
        # reduced is now a bare face inside a single loop
        if reduced.label == 0:
            gain += 1  # loop around a 0-face: remove it, interior takes the outer label
        elif label != 0:
            raise AssertionError("a loop with interior label 1 must sit in a 0-labelled face")
    return Region(label), gain


def simplify(d: PillarDiagram | ScaledDiagram) -> ScaledDiagram:
    """Exhaustively apply the loop-removal and label-lowering relations.

    Labels k >= 2 drop to 1 at the cost of delta**(k-1); loops are then
    removed innermost first, a loop around a 0-labelled face costing one delta
    and a loop around a 1-labelled face costing nothing.
    """
    d = _as_scaled(d)
    gain = 0
    faces = []
    for region in d.diagram.faces:
        r, g = _reduce_region(region)
        faces.append(r)
        gain += g
    return ScaledDiagram(d.delta_exp + gain, PillarDiagram(d.n, d.diagram.partner, tuple(faces)))


def mul(a: PillarDiagram | ScaledDiagram, b: PillarDiagram | ScaledDiagram) -> ScaledDiagram:
    return simplify(compose(a, b))


def rho(word: Sequence[int], n: int) -> ScaledDiagram:
    """Image of ``b_{s1} ... b_{sk}``: generator diagrams stacked top to bottom, reduced at each step."""
    return _rho(tuple(word), n)


@lru_cache(maxsize=65536)
def _rho(word: Word, n: int) -> ScaledDiagram:
    if not word:
        return ScaledDiagram(0, identity_diagram(n))
    head = _rho(word[:-1], n)
    return mul(head, generator_diagram(word[-1], n))


def rho_element(g: CoxeterGraph, w: FCElement) -> ScaledDiagram:
    return rho(w.word, g.n)


def flip(d: PillarDiagram | ScaledDiagram) -> ScaledDiagram:
    """Reflect top to bottom (the image of the anti-automorphism fixing generators)."""
    d = _as_scaled(d)
    dg = d.diagram
    n, two_n = dg.n, 2 * dg.n

    def fp(p):
        return two_n + 1 - p

    partner = [0] * two_n
    for p in range(1, two_n + 1):
        partner[fp(p) - 1] = fp(dg.partner[p - 1])
    partner = tuple(partner)
    old = {frozenset((two_n - k) % two_n for k in gaps): region
           for gaps, region in zip(dg.face_gaps, dg.faces)}
    faces = tuple(old[fg] for fg in base_faces(n, partner))
    return ScaledDiagram(d.delta_exp, PillarDiagram(n, partner, faces))


def iota(d: PillarDiagram | ScaledDiagram) -> ScaledDiagram:
    """Add a propagating strand on the right, moving from rank n to n + 1."""
    d = _as_scaled(d)
    dg = d.diagram
    n = dg.n
    m = n + 1
    partner = [0] * (2 * m)

    def mp(p):
        return p if p <= n else p + 2

    for p in range(1, 2 * n + 1):
        partner[mp(p) - 1] = mp(dg.partner[p - 1])
    partner[m - 1] = m + 1
    partner[m] = m
    partner = tuple(partner)

    def map_gap(k):
        if k < n:
            return {k}
        if k == n:
            return {n, n + 2}
        return {k + 2}

    lookup = {}
    for gaps, region in zip(dg.face_gaps, dg.faces):
        mapped = frozenset().union(*(map_gap(k) for k in gaps))
        lookup[mapped] = region
    faces = []
    for fg in base_faces(m, partner):
        if fg == frozenset({m}):
            faces.append(Region(0))
        else:
            faces.append(lookup[fg])
    return ScaledDiagram(d.delta_exp, PillarDiagram(m, partner, tuple(faces)))


# -- closure and content --------------------------------------------------------

@dataclass(frozen=True)
class TraceDiagram:
    """Closure of a pillar diagram on the disc.

    ``outer`` is the face touching the disc boundary; every other face hangs
    below it in the loop-nesting tree.
    """

    n: int
    outer: Region
    closure_loops: int

    def loops(self) -> int:
        return self.outer.count_loops()

    def inner_labels(self) -> list[int]:
        it = iter(self.outer.iter_regions())
        next(it)
        return sorted(r.label for r in it)


def close(d: PillarDiagram | ScaledDiagram) -> TraceDiagram:
    dg = _as_scaled(d).diagram
    n, two_n = dg.n, 2 * dg.n
    gaps = dg.face_gaps
    uf = _UnionFind(range(len(gaps)))
    for j in range(1, n):
        uf.union(dg.face_index_of_gap(j), dg.face_index_of_gap(two_n - j))
    comps: dict[int, list[int]] = {}
    for i in range(len(gaps)):
        comps.setdefault(uf.find(i), []).append(i)

    # closure loops: alternate the matching with the top/bottom identification
    seen = set()
    loop_sides = []
    for p in range(1, two_n + 1):
        if p in seen:
            continue
        q = p
        while q not in seen:
            seen.add(q)
            r = dg.partner[q - 1]
            seen.add(r)
            q = two_n + 1 - r
        a = uf.find(dg.face_index_of_gap((p - 1) % two_n))
        b = uf.find(dg.face_index_of_gap(p % two_n))
        if a == b:
            raise AssertionError("a closed loop must separate two different faces")
        loop_sides.append((a, b))

    if len(comps) != len(loop_sides) + 1:
        raise AssertionError(
            f"Euler count failed: {len(comps)} faces for {len(loop_sides)} loops on a disc")

    adjacency: dict[int, list[int]] = {r: [] for r in comps}
    for a, b in loop_sides:
        adjacency[a].append(b)
        adjacency[b].append(a)
    root = uf.find(dg.face_index_of_gap(0))

    def build(node: int, parent: int | None) -> Region:
        label = sum(dg.faces[i].label for i in comps[node])
        kids = [r for i in comps[node] for r in dg.faces[i].loops]
        kids += [build(nb, node) for nb in adjacency[node] if nb != parent]
        return Region(label, tuple(sorted(kids)))

    outer = build(root, None)
    if outer.label != 0:
        raise AssertionError("the outer face of a trace diagram must be labelled 0")
    if outer.count_loops() != len(loop_sides) + dg.count_loops():
        raise AssertionError("loop-nesting tree is not connected")
    return TraceDiagram(n, outer, len(loop_sides))


def g_weight(c: int) -> int:
    return 1 if c == 0 else c - 1


def content(t: TraceDiagram) -> int:
    """Sum of g(label) over faces enclosed by at least one loop (all but the outer face)."""
    return sum(g_weight(c) for c in t.inner_labels())


def tau_bullet(d: PillarDiagram | ScaledDiagram) -> int:
    """Exponent of delta in the diagrammatic trace."""
    d = _as_scaled(d)
    return d.delta_exp + content(close(d.diagram))


def mu_tilde_diagrammatic(g: CoxeterGraph, x: FCElement, y: FCElement) -> int:
    d = compose(rho(x.word, g.n), rho(inverse(g, y).word, g.n))
    return int(tau_bullet(d) == g.n - 1)


# -- serialisation and display -------------------------------------------------

SCHEMA_VERSION = 1


def to_json(d: PillarDiagram | ScaledDiagram) -> dict:
    """JSON-ready dict: matching, faces (with gaps, labels, orientation) and loops."""
    sd = _as_scaled(d)
    dg = sd.diagram
    faces = []
    loops = []

    def emit(region: Region, gaps, clockwise: bool, parent_loop):
        fid = len(faces)
        faces.append({
            "id": fid,
            "gaps": sorted(gaps),
            "label": region.label,
            "orientation": "clockwise" if clockwise else "anticlockwise",
            "parent_loop": parent_loop,
        })
        for inner in region.loops:
            lid = len(loops)
            loops.append({"id": lid, "outer_face": fid, "inner_face": None})
            loops[lid]["inner_face"] = emit(inner, (), not clockwise, lid)
        return fid

    for i, (gaps, region) in enumerate(zip(dg.face_gaps, dg.faces)):
        emit(region, gaps, dg.face_is_clockwise(i), None)
    return {
        "schema": SCHEMA_VERSION,
        "rank": dg.n,
        "delta_exponent": sd.delta_exp,
        "matching": list(dg.partner),
        "faces": faces,
        "loops": loops,
    }


def from_json(data: dict | str) -> ScaledDiagram:
    if isinstance(data, str):
        data = json.loads(data)
    n = data["rank"]
    partner = tuple(data["matching"])
    _check_matching(n, partner)
    faces = {f["id"]: f for f in data["faces"]}
    kids: dict[int, list[int]] = {fid: [] for fid in faces}
    for lp in data["loops"]:
        kids[lp["outer_face"]].append(lp["inner_face"])

    def build(fid: int) -> Region:
        return Region(faces[fid]["label"], tuple(sorted(build(k) for k in kids[fid])))

    by_gaps = {frozenset(f["gaps"]): fid for fid, f in faces.items() if f["gaps"]}
    regions = tuple(build(by_gaps[fg]) for fg in base_faces(n, partner))
    d = PillarDiagram(n, partner, regions)
    d.validate()
    return ScaledDiagram(data.get("delta_exponent", 0), d)


def _gap_name(n: int, k: int) -> str:
    if k == 0:
        return "L"
    if k == n:
        return "R"
    if k < n:
        return f"T{k}"
    return f"B{2 * n - k}"


def render_ascii(d: PillarDiagram | ScaledDiagram) -> str:
    sd = _as_scaled(d)
    dg = sd.diagram
    n = dg.n
    top_arcs, bottom_arcs = [], []
    for p in range(1, 2 * n + 1):
        q = dg.partner[p - 1]
        if p < q:
            if q <= n:
                top_arcs.append(f"{p}-{q}")
            elif p > n:
                bottom_arcs.append(f"{2 * n + 1 - q}-{2 * n + 1 - p}")
    through = " ".join(f"{a}|{b}" for a, b in dg.propagating()) or "-"

    def row(pairs_side):
        # mark each position with its strand type
        cells = []
        for x in range(1, n + 1):
            p = x if pairs_side == "top" else 2 * n + 1 - x
            q = dg.partner[p - 1]
            if pairs_side == "top":
                cells.append("|" if q > n else ("(" if q > p else ")"))
            else:
                cells.append("|" if q <= n else ("(" if (2 * n + 1 - q) > x else ")"))
        return "  ".join(cells)

    lines = [
        f"rank {n}   delta^{sd.delta_exp}",
        "  x:      " + "  ".join(str(x % 10) for x in range(1, n + 1)),
        "  top:    " + row("top"),
        "  bottom: " + row("bottom"),
        f"  through strands: {through}",
        f"  top arcs:        {' '.join(top_arcs) or '-'}",
        f"  bottom arcs:     {' '.join(bottom_arcs) or '-'}",
    ]
    labelled = []
    for i, (gaps, region) in enumerate(zip(dg.face_gaps, dg.faces)):
        if region.label or region.loops:
            names = ",".join(_gap_name(n, k) for k in sorted(gaps))
            extra = f" +{region.count_loops()} loop(s)" if region.loops else ""
            labelled.append(f"[{names}]={region.label}{extra}")
    lines.append(f"  labelled faces:  {' '.join(labelled) or '-'}")
    lines.append(f"  closed loops:    {dg.count_loops()}")
    return "\n".join(lines)
