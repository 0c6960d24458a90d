"""Gate maps and their derived structure.

The gate of a vertex in a convex subcomplex is its unique nearest point;
gating one convex subcomplex into another gives the projection.  Crossing
signatures (the set of wall classes with a dual edge inside a subcomplex,
represented as a frozenset of class ids) control everything here: two
subcomplexes are parallel iff their signatures agree, and a projection is
crossed exactly by the classes crossing both factors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ConvexSubcomplex, HyperplaneClass, _from_mask, hull, subcomplex


def gate(y: ConvexSubcomplex, x: int) -> int:
    """The vertex of Y closest to x (unique, since Y is convex)."""
    row = y.parent.distances[x]
    return min(y.vertices, key=row.__getitem__)


def project(y: ConvexSubcomplex, z: ConvexSubcomplex) -> ConvexSubcomplex:
    """Gate image of Z in Y; crossed exactly by the classes crossing both."""
    if y.parent is not z.parent:
        raise ValueError("projection requires subcomplexes of the same complex")
    return subcomplex(y.parent, {gate(y, v) for v in z.vertices})


def crossing_signature(s: ConvexSubcomplex) -> frozenset[int]:
    """Ids of the wall classes with at least one dual edge inside S."""
    cx = s.parent
    cached = cx._sig_cache.get(s.vertices)
    if cached is not None:
        return cached
    mask = s.mask
    ids = set()
    for h in cx.classes:
        for u, v in h.dual_edges:
            if (mask >> u) & 1 and (mask >> v) & 1:
                ids.add(h.class_id)
                break
    sig = frozenset(ids)
    cx._sig_cache[s.vertices] = sig
    return sig


def crosses(h: HyperplaneClass, w: HyperplaneClass) -> bool:
    """True iff all four halfspace intersections of the two walls are nonempty."""
    if h.parent is not w.parent:
        raise ValueError("walls belong to different complexes")
    if h.class_id == w.class_id:
        raise ValueError("a wall does not cross itself")
    return w.class_id in h.parent.crossing[h.class_id]


def is_parallel(s: ConvexSubcomplex, t: ConvexSubcomplex) -> bool:
    return crossing_signature(s) == crossing_signature(t)


def parallel_into(s: ConvexSubcomplex, t: ConvexSubcomplex) -> bool:
    return crossing_signature(s) <= crossing_signature(t)


def carrier(h: HyperplaneClass) -> ConvexSubcomplex:
    """Endpoints of the dual edges: the union of the two combinatorial sides."""
    verts = set()
    for u, v in h.dual_edges:
        verts.add(u)
        verts.add(v)
    return subcomplex(h.parent, verts)


def comb_side(h: HyperplaneClass, sign: int) -> ConvexSubcomplex:
    """Combinatorial hyperplane on one side of the wall (sign is -1 or +1)."""
    if sign not in (-1, 1):
        raise ValueError("sign must be -1 or +1")
    mask = h.comb_minus_mask if sign < 0 else h.comb_plus_mask
    return _from_mask(h.parent, mask)


def set_distance(s: ConvexSubcomplex, t: ConvexSubcomplex) -> int:
    dist = s.parent.distances
    return min(dist[a][b] for a in s.vertices for b in t.vertices)


def separators(f: ConvexSubcomplex, f2: ConvexSubcomplex) -> frozenset[int]:
    """Classes crossing hull(F ∪ F2) but neither F nor F2 (F, F2 parallel)."""
    region = hull(f.parent, f.vertices + f2.vertices)
    return crossing_signature(region) - crossing_signature(f) - crossing_signature(f2)


def parallel_bridge(f: ConvexSubcomplex, f2: ConvexSubcomplex) -> ConvexSubcomplex:
    """Hull of a shortest geodesic between F and F2 (least starting vertex)."""
    dist = f.parent.distances
    x = min(f.vertices, key=lambda v: (min(dist[v][w] for w in f2.vertices), v))
    y = gate(f2, x)
    return _from_mask(f.parent, f.parent.interval_masks[x][y])


@dataclass(frozen=True, eq=False)
class ProductRegion:
    """Hull of a subcomplex and its orthogonal complement at a basepoint.

    coordinates maps each region vertex to its (base, complement) gate pair
    and is a bijection onto base × complement.
    """

    base: ConvexSubcomplex
    complement: ConvexSubcomplex
    region: ConvexSubcomplex
    coordinates: dict[int, tuple[int, int]]


def product_region(a: ConvexSubcomplex, basepoint: int) -> ProductRegion:
    """Product region of A at a point of A: hull(A ∪ orth(A, a)) ≅ A × orth(A, a)."""
    from .orthocomplement import orth

    if basepoint not in a:
        raise ValueError(f"basepoint {basepoint} is not in the subcomplex")
    cx = a.parent
    complement = orth(a, basepoint)
    region = hull(cx, a.vertices + complement.vertices)
    coords = {v: (gate(a, v), gate(complement, v)) for v in region.vertices}
    return ProductRegion(base=a, complement=complement, region=region, coordinates=coords)


def parallel_copies(a: ConvexSubcomplex) -> list[ConvexSubcomplex]:
    """The full parallelism class of A: the base slices of its product region."""
    pr = product_region(a, a.vertices[0])
    slices: dict[int, list[int]] = {b: [] for b in pr.complement.vertices}
    for v in pr.region.vertices:
        slices[pr.coordinates[v][1]].append(v)
    copies = [subcomplex(a.parent, verts) for verts in slices.values()]
    copies.sort(key=lambda s: s.vertices)
    return copies
