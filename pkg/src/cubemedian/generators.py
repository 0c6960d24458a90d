"""Deterministic constructors for the fixture families.

Every generated complex is validated before it is returned, carries
coordinate labels where the construction has natural coordinates, and
records its canonical spec string (identical spec, identical complex,
bit for bit).  Randomized kinds draw from splitmix64 only.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Optional, Union

from .core import MedianComplex, validate
from .errors import InvariantViolation, ValidationError
from .rng import SplitMix64

KINDS = ("grid", "box", "tree", "product", "staircase", "wedge",
         "glued_staircase_ray", "random_median")
_RANDOM_KINDS = ("tree", "random_median")

Param = Union[int, "GeneratorSpec"]


@dataclass(frozen=True)
class GeneratorSpec:
    """kind plus kind-specific parameters; product and wedge nest sub-specs."""

    kind: str
    parameters: tuple[Param, ...]
    seed: Optional[int] = None


def spec_to_string(spec: GeneratorSpec) -> str:
    parts = [spec_to_string(p) if isinstance(p, GeneratorSpec) else str(p)
             for p in spec.parameters]
    if spec.seed is not None:
        parts.append(f"seed={spec.seed}")
    return f"{spec.kind}({','.join(parts)})"


def parse_spec(text: str) -> GeneratorSpec:
    """Parse the compact spec form used by the CLI and the label block.

    >>> spec_to_string(parse_spec("product( grid(1,1), tree(5, seed=2) )"))
    'product(grid(1,1),tree(5,seed=2))'
    """
    pos = 0

    def skip_ws():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def fail(expected: str):
        raise ValueError(f"bad generator spec {text!r}: expected {expected} at position {pos}")

    def parse_int() -> int:
        nonlocal pos
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == start:
            fail("an integer")
        return int(text[start:pos])

    def parse_name() -> str:
        nonlocal pos
        start = pos
        while pos < len(text) and (text[pos].isalnum() or text[pos] == "_"):
            pos += 1
        if pos == start:
            fail("a generator kind")
        return text[start:pos]

    def parse_node() -> GeneratorSpec:
        nonlocal pos
        skip_ws()
        name = parse_name()
        if name not in KINDS:
            raise ValueError(f"unknown generator kind {name!r}")
        skip_ws()
        if pos >= len(text) or text[pos] != "(":
            fail("'('")
        pos += 1
        params: list[Param] = []
        seed = None

        def parse_arg():
            nonlocal pos, seed
            if text[pos].isdigit():
                params.append(parse_int())
                return
            word_start = pos
            word = parse_name()
            skip_ws()
            if word == "seed" and pos < len(text) and text[pos] == "=":
                pos += 1
                skip_ws()
                if seed is not None:
                    raise ValueError(f"duplicate seed in {text!r}")
                seed = parse_int()
            else:
                pos = word_start
                params.append(parse_node())

        skip_ws()
        if pos < len(text) and text[pos] != ")":
            parse_arg()
            skip_ws()
            while pos < len(text) and text[pos] == ",":
                pos += 1
                skip_ws()
                parse_arg()
                skip_ws()
        if pos >= len(text) or text[pos] != ")":
            fail("')'")
        pos += 1
        return GeneratorSpec(name, tuple(params), seed)

    node = parse_node()
    skip_ws()
    if pos != len(text):
        fail("end of spec")
    return node


# -- kind builders ----------------------------------------------------------


def _build_box(lengths: tuple[int, ...]):
    ranges = [range(side + 1) for side in lengths]
    coords = sorted(itertools.product(*ranges))
    index = {c: i for i, c in enumerate(coords)}
    edges = []
    for c in coords:
        for axis in range(len(lengths)):
            if c[axis] < lengths[axis]:
                d = c[:axis] + (c[axis] + 1,) + c[axis + 1:]
                edges.append((index[c], index[d]))
    return len(coords), sorted(edges), {i: c for c, i in index.items()}


def _build_staircase(n: int):
    # squares (i,j) of [0,n]^2 with j <= i survive; take their 1-skeleton
    labels = set()
    edge_coords = set()
    for i in range(n):
        for j in range(i + 1):
            c00, c10 = (i, j), (i + 1, j)
            c01, c11 = (i, j + 1), (i + 1, j + 1)
            labels.update((c00, c10, c01, c11))
            edge_coords.update({(c00, c10), (c00, c01), (c10, c11), (c01, c11)})
    verts = sorted(labels)
    index = {c: i for i, c in enumerate(verts)}
    edges = sorted((min(index[a], index[b]), max(index[a], index[b]))
                   for a, b in edge_coords)
    return len(verts), edges, {index[c]: c for c in verts}


def _build_tree(n: int, seed: int):
    if n == 1:
        return 1, [], None
    if n == 2:
        return 2, [(0, 1)], None
    rng = SplitMix64(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((min(u, w), max(u, w)))
    return n, sorted(edges), None


def _majority(a: tuple[int, ...], b: tuple[int, ...], c: tuple[int, ...]) -> tuple[int, ...]:
    return tuple((x & y) | (x & z) | (y & z) for x, y, z in zip(a, b, c))


def _build_random_median(dim: int, count: int, seed: int):
    rng = SplitMix64(seed)
    points: set[tuple[int, ...]] = set()
    while len(points) < count:
        word = rng.randrange(1 << dim)
        points.add(tuple((word >> i) & 1 for i in range(dim)))
    # close under coordinatewise majority; each round only needs triples
    # touching a point added in the previous round
    frontier = set(points)
    while frontier:
        new = set()
        pts = sorted(points)
        for a in sorted(frontier):
            for b, c in itertools.combinations(pts, 2):
                m = _majority(a, b, c)
                if m not in points:
                    new.add(m)
        points |= new
        frontier = new
    verts = sorted(points)
    index = {p: i for i, p in enumerate(verts)}

    def between(u, w, v):
        return all(wi == ui for ui, vi, wi in zip(u, v, w) if ui == vi)

    edges = []
    for a, b in itertools.combinations(verts, 2):
        if not any(between(a, w, b) for w in verts if w != a and w != b):
            edges.append((index[a], index[b]))
    return len(verts), sorted(edges), {i: p for p, i in index.items()}


def product(x1: MedianComplex, x2: MedianComplex) -> MedianComplex:
    """Graph product: vertex pairs, edges in one coordinate at a time."""
    n1, n2 = x1.vertex_count, x2.vertex_count
    edges = []
    for u, v in x1.edges:
        for w in range(n2):
            edges.append((u * n2 + w, v * n2 + w))
    for u in range(n1):
        for v, w in x2.edges:
            edges.append((u * n2 + v, u * n2 + w))
    labels = None
    if x1.labels and x2.labels:
        l1, l2 = x1.labels, x2.labels
        if all(isinstance(l, tuple) for l in l1.values()) and \
                all(isinstance(l, tuple) for l in l2.values()):
            labels = {u * n2 + v: l1[u] + l2[v] for u in range(n1) for v in range(n2)}
    cx = MedianComplex(n1 * n2, sorted(edges), labels=labels)
    report = validate(cx)
    if not report.passed:
        raise ValidationError(report)
    return cx


def wedge(x1: MedianComplex, v1: int, x2: MedianComplex, v2: int) -> MedianComplex:
    """Identify v1 in x1 with v2 in x2; x1 keeps its vertex indices."""
    if not 0 <= v1 < x1.vertex_count or not 0 <= v2 < x2.vertex_count:
        raise ValueError("wedge vertex out of range")
    n1 = x1.vertex_count
    remap = {}
    nxt = n1
    for w in range(x2.vertex_count):
        if w == v2:
            remap[w] = v1
        else:
            remap[w] = nxt
            nxt += 1
    edges = list(x1.edges)
    for u, w in x2.edges:
        a, b = remap[u], remap[w]
        edges.append((min(a, b), max(a, b)))
    cx = MedianComplex(nxt, sorted(edges))
    report = validate(cx)
    if not report.passed:
        raise ValidationError(report)
    return cx


def _require(cond: bool, message: str):
    if not cond:
        raise ValueError(message)


def generate(spec: GeneratorSpec) -> MedianComplex:
    """Build, validate and label the complex described by the spec."""
    kind, params, seed = spec.kind, spec.parameters, spec.seed
    _require(kind in KINDS, f"unknown generator kind {kind!r}")
    if seed is not None:
        _require(kind in _RANDOM_KINDS, f"{kind} does not take a seed")
        _require(0 <= seed < (1 << 64), "seed must fit in 64 bits")
    ints = all(isinstance(p, int) for p in params)

    if kind == "grid":
        _require(ints and len(params) == 2 and min(params) >= 0, "grid(w,h) needs w,h >= 0")
        n, edges, labels = _build_box(params)
    elif kind == "box":
        _require(ints and len(params) >= 1 and min(params) >= 0,
                 "box(d1,...,dk) needs k >= 1 path lengths >= 0")
        n, edges, labels = _build_box(params)
    elif kind == "tree":
        _require(ints and len(params) == 1 and params[0] >= 1, "tree(n) needs n >= 1")
        n, edges, labels = _build_tree(params[0], seed or 0)
    elif kind == "staircase":
        _require(ints and len(params) == 1 and params[0] >= 1, "staircase(n) needs n >= 1")
        n, edges, labels = _build_staircase(params[0])
    elif kind == "random_median":
        _require(ints and len(params) == 2, "random_median(dim, count) needs two ints")
        dim, count = params
        # the majority closure can approach 2^dim points and validation is
        # cubic in the vertex count, so the dimension is kept small
        _require(1 <= dim <= 8, "random_median dimension must be in 1..8")
        _require(1 <= count <= (1 << dim), "random_median count must be in 1..2^dim")
        n, edges, labels = _build_random_median(dim, count, seed or 0)
    elif kind == "product":
        _require(len(params) == 2 and all(isinstance(p, GeneratorSpec) for p in params),
                 "product needs two sub-specs")
        cx = product(generate(params[0]), generate(params[1]))
        return _stamp(cx, spec)
    elif kind == "wedge":
        _require(len(params) == 4 and isinstance(params[0], GeneratorSpec)
                 and isinstance(params[2], GeneratorSpec)
                 and isinstance(params[1], int) and isinstance(params[3], int),
                 "wedge needs (spec, vertex, spec, vertex)")
        cx = wedge(generate(params[0]), params[1], generate(params[2]), params[3])
        return _stamp(cx, spec)
    else:  # glued_staircase_ray
        _require(ints and len(params) == 1 and params[0] >= 1,
                 "glued_staircase_ray(n) needs n >= 1")
        cx = _build_glued_ray(params[0])
        return _stamp(cx, spec)

    cx = MedianComplex(n, edges, labels=labels)
    report = validate(cx)
    if not report.passed:
        if kind == "random_median":
            raise InvariantViolation(
                f"random_median produced an invalid complex: {report.summary()}")
        raise ValidationError(report)
    return _stamp(cx, spec)


def _stamp(cx: MedianComplex, spec: GeneratorSpec) -> MedianComplex:
    cx.generator = spec_to_string(spec)
    return cx


def _build_glued_ray(n: int) -> MedianComplex:
    # path 0..n with staircase(k) wedged at path vertex k, at its (0,0) corner
    cx = MedianComplex(n + 1, [(k, k + 1) for k in range(n)])
    report = validate(cx)
    assert report.passed
    for k in range(1, n + 1):
        st = staircase(k)
        corner = next(i for i, lab in st.labels.items() if lab == (0, 0))
        cx = wedge(cx, k, st, corner)
    return cx


# -- convenience constructors ------------------------------------------------


def grid(w: int, h: int) -> MedianComplex:
    return generate(GeneratorSpec("grid", (w, h)))


def box(*lengths: int) -> MedianComplex:
    return generate(GeneratorSpec("box", tuple(lengths)))


def staircase(n: int) -> MedianComplex:
    return generate(GeneratorSpec("staircase", (n,)))


def tree(n: int, seed: int = 0) -> MedianComplex:
    return generate(GeneratorSpec("tree", (n,), seed=seed))


def random_median(dim: int, count: int, seed: int = 0) -> MedianComplex:
    return generate(GeneratorSpec("random_median", (dim, count), seed=seed))


def glued_staircase_ray(n: int) -> MedianComplex:
    return generate(GeneratorSpec("glued_staircase_ray", (n,)))
