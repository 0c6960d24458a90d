"""Finite median graphs: the combinatorial core.

A finite CAT(0) cube complex is represented by its 1-skeleton, a median
graph on vertices 0..n-1.  Wall classes (hyperplanes) are equivalence
classes of edges under the Djokovic distance relation; each wall splits
the vertex set into two halfspaces.  Convex subcomplexes are canonical
sorted vertex tuples and are the currency of every higher operation.

Vertex sets are manipulated as int bitmasks throughout.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .errors import InvariantViolation, StructuralError


def _bits(mask: int):
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class MedianComplex:
    """A finite graph with wall structure, intended to be a median graph.

    The constructor only checks that the adjacency is well-formed (indices
    in range, no loops, no duplicate edges); the median invariants are
    checked by `validate`.  Instances are immutable after construction;
    derived structure (distances, intervals, wall classes) is cached
    lazily.
    """

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]],
                 labels: Optional[dict] = None, generator: Optional[str] = None):
        if vertex_count < 0:
            raise StructuralError("vertex_count must be nonnegative")
        norm = []
        seen = set()
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise StructuralError(f"edge ({u},{v}) out of range 0..{vertex_count - 1}")
            if u == v:
                raise StructuralError(f"loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise StructuralError(f"duplicate edge {e}")
            seen.add(e)
            norm.append(e)
        self.vertex_count = vertex_count
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(norm))
        nbrs: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.neighbors: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in nbrs)
        self.labels = dict(labels) if labels else None
        self.generator = generator
        self.validated = False
        self.full_mask = (1 << vertex_count) - 1
        self._dist: Optional[list[list[int]]] = None
        self._intervals: Optional[list[list[int]]] = None
        self._classes: Optional[tuple[HyperplaneClass, ...]] = None
        self._crossing: Optional[tuple[frozenset[int], ...]] = None
        self._sig_cache: dict[tuple[int, ...], frozenset[int]] = {}

    # -- metric ---------------------------------------------------------

    @property
    def distances(self) -> list[list[int]]:
        """All-pairs distance table (BFS); -1 marks unreachable pairs."""
        if self._dist is None:
            n = self.vertex_count
            table = []
            for src in range(n):
                row = [-1] * n
                row[src] = 0
                queue = deque([src])
                while queue:
                    x = queue.popleft()
                    dx = row[x] + 1
                    for y in self.neighbors[x]:
                        if row[y] < 0:
                            row[y] = dx
                            queue.append(y)
                table.append(row)
            self._dist = table
        return self._dist

    def distance(self, u: int, v: int) -> int:
        return self.distances[u][v]

    @property
    def interval_masks(self) -> list[list[int]]:
        """interval_masks[x][y] is the bitmask of I(x,y) = {v : d(x,v)+d(v,y) = d(x,y)}."""
        if self._intervals is None:
            n = self.vertex_count
            dist = self.distances
            table = [[0] * n for _ in range(n)]
            for x in range(n):
                dx = dist[x]
                table[x][x] = 1 << x
                for y in range(x + 1, n):
                    dy = dist[y]
                    dxy = dx[y]
                    m = 0
                    for v in range(n):
                        if dx[v] + dy[v] == dxy:
                            m |= 1 << v
                    table[x][y] = m
                    table[y][x] = m
            self._intervals = table
        return self._intervals

    # -- wall classes ----------------------------------------------------

    @property
    def classes(self) -> tuple["HyperplaneClass", ...]:
        if self._classes is None:
            self._classes = self._compute_classes()
        return self._classes

    def _compute_classes(self) -> tuple["HyperplaneClass", ...]:
        n = self.vertex_count
        dist = self.distances
        if n and any(d < 0 for d in dist[0]):
            raise InvariantViolation("wall classes undefined: graph is disconnected")
        # halfspace pair of each edge; bipartiteness makes the split total
        by_key: dict[tuple[int, int], list[tuple[int, int]]] = {}
        edge_key = {}
        for u, v in self.edges:
            mu = 0
            mv = 0
            du, dv = dist[u], dist[v]
            for w in range(n):
                if du[w] < dv[w]:
                    mu |= 1 << w
                elif dv[w] < du[w]:
                    mv |= 1 << w
            if mu | mv != self.full_mask:
                raise InvariantViolation(
                    f"wall classes undefined: edge ({u},{v}) has equidistant vertices "
                    "(graph is not bipartite)")
            key = (mu, mv) if mu < mv else (mv, mu)
            by_key.setdefault(key, []).append((u, v))
            edge_key[(u, v)] = key
        # the Djokovic relation must match the halfspace grouping pairwise,
        # otherwise it is not transitive and the graph is not median
        edges = self.edges
        for i, (x, y) in enumerate(edges):
            for (u, v) in edges[i + 1:]:
                related = dist[x][u] + dist[y][v] != dist[x][v] + dist[y][u]
                if related != (edge_key[(x, y)] == edge_key[(u, v)]):
                    raise InvariantViolation(
                        f"wall relation is not transitive: witness edges ({x},{y}), ({u},{v})")
        groups = sorted(by_key.values(), key=lambda es: min(es))
        classes = []
        for cid, dual in enumerate(groups):
            dual = tuple(sorted(dual))
            u0 = dual[0][0]
            key = edge_key[dual[0]]
            side_minus = key[0] if (key[0] >> u0) & 1 else key[1]
            side_plus = key[0] if side_minus == key[1] else key[1]
            comb_minus = 0
            comb_plus = 0
            for a, b in dual:
                if (side_minus >> a) & 1:
                    comb_minus |= 1 << a
                    comb_plus |= 1 << b
                else:
                    comb_minus |= 1 << b
                    comb_plus |= 1 << a
            classes.append(HyperplaneClass(
                parent=self, class_id=cid, dual_edges=dual,
                side_minus=frozenset(_bits(side_minus)), side_plus=frozenset(_bits(side_plus)),
                side_minus_mask=side_minus, side_plus_mask=side_plus,
                comb_minus_mask=comb_minus, comb_plus_mask=comb_plus))
        return tuple(classes)

    @property
    def crossing(self) -> tuple[frozenset[int], ...]:
        """crossing[i] is the set of class ids whose wall crosses wall i."""
        if self._crossing is None:
            cls = self.classes
            out = []
            for h in cls:
                ids = set()
                for w in cls:
                    if w.class_id == h.class_id:
                        continue
                    if (h.side_minus_mask & w.side_minus_mask and
                            h.side_minus_mask & w.side_plus_mask and
                            h.side_plus_mask & w.side_minus_mask and
                            h.side_plus_mask & w.side_plus_mask):
                        ids.add(w.class_id)
                out.append(frozenset(ids))
            self._crossing = tuple(out)
        return self._crossing


@dataclass(frozen=True)
class HyperplaneClass:
    """A wall: an edge class with its two halfspaces.

    side_minus is the halfspace containing the least endpoint of the least
    dual edge, which makes class numbering and side order reproducible.
    comb_minus/comb_plus (the combinatorial hyperplanes) are the endpoints
    of the dual edges inside each halfspace.
    """

    parent: MedianComplex = field(repr=False)
    class_id: int
    dual_edges: tuple[tuple[int, int], ...]
    side_minus: frozenset[int] = field(repr=False)
    side_plus: frozenset[int] = field(repr=False)
    side_minus_mask: int = field(repr=False)
    side_plus_mask: int = field(repr=False)
    comb_minus_mask: int = field(repr=False)
    comb_plus_mask: int = field(repr=False)

    @property
    def comb_minus(self) -> frozenset[int]:
        return frozenset(_bits(self.comb_minus_mask))

    @property
    def comb_plus(self) -> frozenset[int]:
        return frozenset(_bits(self.comb_plus_mask))


@dataclass(frozen=True)
class ConvexSubcomplex:
    """A convex subcomplex in canonical form: a strictly sorted vertex tuple.

    Equality is equality of vertex tuples within the same parent complex.
    """

    parent: MedianComplex = field(repr=False)
    vertices: tuple[int, ...]

    @cached_property
    def mask(self) -> int:
        return _mask_of(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v: int) -> bool:
        return (self.mask >> v) & 1 == 1


def subcomplex(parent: MedianComplex, vertices: Iterable[int], *,
               check: bool = False) -> ConvexSubcomplex:
    """Canonicalize a vertex set; with check=True, require convexity."""
    verts = tuple(sorted(set(vertices)))
    if not verts:
        raise ValueError("subcomplex must be nonempty")
    if verts[-1] >= parent.vertex_count or verts[0] < 0:
        raise ValueError("vertex index out of range")
    if check and not is_convex(parent, verts):
        raise ValueError(f"vertex set {verts} is not convex")
    return ConvexSubcomplex(parent, verts)


def _from_mask(parent: MedianComplex, mask: int) -> ConvexSubcomplex:
    return ConvexSubcomplex(parent, tuple(_bits(mask)))


def whole_complex(cx: MedianComplex) -> ConvexSubcomplex:
    return ConvexSubcomplex(cx, tuple(range(cx.vertex_count)))


# -- validation -----------------------------------------------------------


@dataclass
class InvariantFailure:
    invariant: str
    witness: str


@dataclass
class ValidationReport:
    passed: bool
    failures: list[InvariantFailure]

    def summary(self) -> str:
        if self.passed:
            return "valid median complex"
        lines = [f"{f.invariant}: {f.witness}" for f in self.failures]
        return "invalid median complex: " + "; ".join(lines)


def _odd_cycle_witness(cx: MedianComplex, color: list[int], parent: list[int],
                       u: int, v: int) -> list[int]:
    path_u, path_v = [u], [v]
    while parent[path_u[-1]] >= 0:
        path_u.append(parent[path_u[-1]])
    while parent[path_v[-1]] >= 0:
        path_v.append(parent[path_v[-1]])
    while len(path_u) > 1 and len(path_v) > 1 and path_u[-2] == path_v[-2]:
        path_u.pop()
        path_v.pop()
    return path_u + path_v[::-1][1:]


def validate(cx: MedianComplex) -> ValidationReport:
    """Check the median-graph invariants, reporting every failure with a witness.

    Checks, in order: connectivity, bipartiteness, unique medians for all
    vertex triples, transitivity of the wall relation, and that removing
    any one wall class leaves exactly two components.  Metric checks are
    skipped when the graph is disconnected or odd.
    """
    failures: list[InvariantFailure] = []
    n = cx.vertex_count
    if n == 0:
        failures.append(InvariantFailure("connected", "empty complex"))
        return ValidationReport(False, failures)

    color = [-1] * n
    parent = [-1] * n
    color[0] = 0
    queue = deque([0])
    odd = None
    while queue:
        x = queue.popleft()
        for y in cx.neighbors[x]:
            if color[y] < 0:
                color[y] = color[x] ^ 1
                parent[y] = x
                queue.append(y)
            elif color[y] == color[x] and odd is None:
                odd = (x, y)
    unreachable = [v for v in range(n) if color[v] < 0]
    if unreachable:
        failures.append(InvariantFailure(
            "connected", f"vertex {unreachable[0]} unreachable from vertex 0"))
    if odd is not None:
        cycle = _odd_cycle_witness(cx, color, parent, *odd)
        failures.append(InvariantFailure("bipartite", f"odd cycle {cycle}"))
    if failures:
        return ValidationReport(False, failures)

    ivals = cx.interval_masks
    for x in range(n):
        row_x = ivals[x]
        for y in range(x + 1, n):
            ixy = row_x[y]
            row_y = ivals[y]
            for z in range(y + 1, n):
                m = ixy & row_y[z] & row_x[z]
                if m.bit_count() != 1:
                    meds = list(_bits(m))
                    failures.append(InvariantFailure(
                        "unique-median", f"triple ({x},{y},{z}) has medians {meds}"))
                    break
            else:
                continue
            break
        else:
            continue
        break

    try:
        classes = cx.classes
    except InvariantViolation as exc:
        failures.append(InvariantFailure("wall-relation", str(exc)))
        classes = ()

    for h in classes:
        removed = set(h.dual_edges)
        comp = [-1] * n
        count = 0
        for start in range(n):
            if comp[start] >= 0:
                continue
            count += 1
            comp[start] = count
            queue = deque([start])
            while queue:
                a = queue.popleft()
                for b in cx.neighbors[a]:
                    e = (a, b) if a < b else (b, a)
                    if e in removed or comp[b] >= 0:
                        continue
                    comp[b] = count
                    queue.append(b)
        if count != 2:
            failures.append(InvariantFailure(
                "wall-cut", f"removing class {h.class_id} leaves {count} components"))

    report = ValidationReport(not failures, failures)
    cx.validated = report.passed
    return report


# -- base operations -------------------------------------------------------


def median(cx: MedianComplex, x: int, y: int, z: int) -> int:
    """The unique vertex in I(x,y) ∩ I(y,z) ∩ I(x,z).

    >>> from cubemedian.generators import grid
    >>> median(grid(1, 1), 0, 1, 2)
    0
    """
    ivals = cx.interval_masks
    m = ivals[x][y] & ivals[y][z] & ivals[x][z]
    if m.bit_count() != 1:
        raise InvariantViolation(f"triple ({x},{y},{z}) has {m.bit_count()} medians")
    return m.bit_length() - 1


def interval(cx: MedianComplex, x: int, y: int) -> frozenset[int]:
    """I(x,y) = {v : d(x,v)+d(v,y) = d(x,y)}."""
    return frozenset(_bits(cx.interval_masks[x][y]))


def theta_classes(cx: MedianComplex) -> tuple[HyperplaneClass, ...]:
    """Wall classes under the Djokovic relation, canonically numbered."""
    return cx.classes


def is_convex(cx: MedianComplex, vertices: Iterable[int]) -> bool:
    """True iff the set induces a connected subgraph and is interval-closed."""
    verts = sorted(set(vertices))
    if not verts:
        raise ValueError("is_convex requires a nonempty vertex set")
    mask = _mask_of(verts)
    seen = 1 << verts[0]
    queue = deque([verts[0]])
    while queue:
        x = queue.popleft()
        for y in cx.neighbors[x]:
            b = 1 << y
            if mask & b and not seen & b:
                seen |= b
                queue.append(y)
    if seen != mask:
        return False
    ivals = cx.interval_masks
    for i, x in enumerate(verts):
        row = ivals[x]
        for y in verts[i + 1:]:
            if row[y] & ~mask:
                return False
    return True


def _hull_mask(cx: MedianComplex, mask: int) -> int:
    ivals = cx.interval_masks
    while True:
        verts = list(_bits(mask))
        new = mask
        for i, x in enumerate(verts):
            row = ivals[x]
            for y in verts[i + 1:]:
                new |= row[y]
        if new == mask:
            return mask
        mask = new


def hull(cx: MedianComplex, vertices: Iterable[int]) -> ConvexSubcomplex:
    """Least convex superset: the fixed point of pairwise interval closure."""
    mask = _mask_of(vertices)
    if not mask:
        raise ValueError("hull requires a nonempty vertex set")
    return _from_mask(cx, _hull_mask(cx, mask))


def _max_clique(adj: list[int], n: int) -> int:
    best = 0

    def expand(cand: int, size: int):
        nonlocal best
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            if size + 1 > best:
                best = size + 1
            expand(cand & adj[v], size + 1)

    expand((1 << n) - 1, 0)
    return best


def dimension(cx: MedianComplex) -> int:
    """Size of the largest cube, via the largest square-spanning edge set at a vertex."""
    nbr_masks = [_mask_of(a) for a in cx.neighbors]
    best = 0
    for v in range(cx.vertex_count):
        nbrs = cx.neighbors[v]
        k = len(nbrs)
        if k <= best:
            continue
        # adjacency among neighbors: u,w span a square at v iff they have a
        # second common neighbor; in a median graph pairwise squares close
        # into cubes
        adj = [0] * k
        for i in range(k):
            for j in range(i + 1, k):
                if nbr_masks[nbrs[i]] & nbr_masks[nbrs[j]] & ~(1 << v):
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        best = max(best, _max_clique(adj, k))
    return best


def all_convex_subcomplexes(cx: MedianComplex) -> list[ConvexSubcomplex]:
    """Every convex subcomplex, as the closure of singletons under hull-insertion.

    Every convex set C is reached: grow from a singleton of C by repeatedly
    hulling in one more vertex of C; all intermediate hulls stay inside C.
    """
    seen: set[int] = set()
    queue: deque[int] = deque()
    for v in range(cx.vertex_count):
        m = 1 << v
        seen.add(m)
        queue.append(m)
    full = cx.full_mask
    while queue:
        m = queue.popleft()
        rest = full & ~m
        for v in _bits(rest):
            grown = _hull_mask(cx, m | (1 << v))
            if grown not in seen:
                seen.add(grown)
                queue.append(grown)
    subs = [_from_mask(cx, m) for m in seen]
    subs.sort(key=lambda s: (len(s.vertices), s.vertices))
    return subs
