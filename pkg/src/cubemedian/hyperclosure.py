"""The hyperclosure: the least family of convex subcomplexes containing the
whole complex and every combinatorial hyperplane that is closed under gate
projections and parallelism.

The fixpoint is computed by a worklist over member pairs, deduplicating by
canonical vertex tuple.  Grades record the least number of nested
hyperplane-side projections producing each member (grade 0: the whole
complex; grade 1: combinatorial hyperplanes), and every member carries one
derivation in that normal form.  An independent brute-force oracle
recovers the same family as the set of orthogonal complements of convex
subcomplexes at their basepoints.
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from .core import (
    ConvexSubcomplex,
    MedianComplex,
    _from_mask,
    all_convex_subcomplexes,
    whole_complex,
)
from .errors import InvariantViolation, ResourceLimitError
from .gates import comb_side, crossing_signature, parallel_copies, project
from .orthocomplement import orth

DEFAULT_MAX_MEMBERS = 100_000
DEFAULT_MAX_GRADE = 32
DEFAULT_ORACLE_BOUND = 14


@dataclass(frozen=True)
class Derivation:
    """How a member arises: the whole complex, a hyperplane side, or a
    projection of a lower-grade member onto a hyperplane side."""

    kind: str  # "whole" | "side" | "projection"
    class_id: Optional[int] = None
    sign: Optional[int] = None
    source: Optional[ConvexSubcomplex] = None


@dataclass(eq=False)
class Hyperclosure:
    complex: MedianComplex = field(repr=False)
    members: tuple[ConvexSubcomplex, ...]
    grade: dict[ConvexSubcomplex, int] = field(repr=False)
    derivation: dict[ConvexSubcomplex, Derivation] = field(repr=False)
    parallel_classes: tuple[tuple[ConvexSubcomplex, ...], ...] = field(repr=False)
    max_members: int
    max_grade: int

    @cached_property
    def member_set(self) -> frozenset[ConvexSubcomplex]:
        return frozenset(self.members)

    def __len__(self) -> int:
        return len(self.members)


def _hyperplane_sides(cx: MedianComplex) -> list[tuple[int, int, ConvexSubcomplex]]:
    """All combinatorial hyperplanes as (class_id, sign, side), in canonical order."""
    out = []
    for h in cx.classes:
        out.append((h.class_id, -1, comb_side(h, -1)))
        out.append((h.class_id, +1, comb_side(h, +1)))
    return out


def hyperclosure(cx: MedianComplex, *, max_members: int = DEFAULT_MAX_MEMBERS,
                 max_grade: int = DEFAULT_MAX_GRADE) -> Hyperclosure:
    """Compute the hyperclosure as a worklist fixpoint, then grade it.

    Raises ResourceLimitError (naming the limit) if the member count or the
    grading depth exceeds the configured bounds; no partial result is kept.
    """
    whole = whole_complex(cx)
    members: set[ConvexSubcomplex] = set()
    member_list: list[ConvexSubcomplex] = []
    queue: list[tuple[tuple[int, ...], ConvexSubcomplex]] = []

    def add(s: ConvexSubcomplex) -> None:
        if s not in members:
            if len(members) >= max_members:
                raise ResourceLimitError(
                    "max_members", f"hyperclosure exceeds max_members={max_members}")
            members.add(s)
            member_list.append(s)
            heapq.heappush(queue, (s.vertices, s))

    add(whole)
    sides = _hyperplane_sides(cx)
    for _, _, side in sides:
        add(side)

    # pending members in canonical vertex-list order; the result is a set
    # fixpoint, so scheduling cannot change it
    while queue:
        _, f = heapq.heappop(queue)
        for f2 in list(member_list):
            add(project(f, f2))
            add(project(f2, f))
        for copy in parallel_copies(f):
            add(copy)

    grade: dict[ConvexSubcomplex, int] = {whole: 0}
    derivation: dict[ConvexSubcomplex, Derivation] = {whole: Derivation("whole")}
    frontier = [whole]
    level = 0
    while len(grade) < len(members):
        level += 1
        if level > max_grade:
            raise ResourceLimitError(
                "max_grade", f"hyperclosure grading exceeds max_grade={max_grade}")
        new: list[ConvexSubcomplex] = []
        for cid, sign, side in sides:
            for f in frontier:
                p = project(side, f)
                if p not in grade:
                    if p not in members:
                        raise InvariantViolation(
                            "grading produced a subcomplex outside the fixpoint")
                    grade[p] = level
                    if level == 1:
                        derivation[p] = Derivation("side", class_id=cid, sign=sign)
                    else:
                        derivation[p] = Derivation(
                            "projection", class_id=cid, sign=sign, source=f)
                    new.append(p)
        if not new:
            raise InvariantViolation("grading stalled before exhausting the members")
        frontier = new

    ordered = sorted(members, key=lambda s: (len(s.vertices), s.vertices))
    by_sig: dict[frozenset[int], list[ConvexSubcomplex]] = {}
    for m in ordered:
        by_sig.setdefault(crossing_signature(m), []).append(m)
    classes = tuple(tuple(group) for group in
                    sorted(by_sig.values(), key=lambda g: (len(g[0].vertices), g[0].vertices)))
    return Hyperclosure(complex=cx, members=tuple(ordered), grade=grade,
                        derivation=derivation, parallel_classes=classes,
                        max_members=max_members, max_grade=max_grade)


def oracle_hyperclosure(cx: MedianComplex, *,
                        max_vertices: int = DEFAULT_ORACLE_BOUND) -> frozenset[ConvexSubcomplex]:
    """Brute-force oracle: orthogonal complements of every convex subcomplex
    at every basepoint.  Guarded by a vertex bound; independent of the
    worklist fixpoint."""
    if cx.vertex_count > max_vertices:
        raise ResourceLimitError(
            "oracle_vertex_bound",
            f"oracle limited to {max_vertices} vertices, complex has {cx.vertex_count}")
    out: set[ConvexSubcomplex] = set()
    for c in all_convex_subcomplexes(cx):
        for x in c.vertices:
            out.add(orth(c, x))
    return frozenset(out)


@dataclass(frozen=True)
class MultiplicityProfile:
    """How many members pass through each vertex; max_multiplicity is the
    factor-system bound witness."""

    per_vertex: tuple[int, ...]
    max_multiplicity: int
    histogram: dict[int, int] = field(hash=False)


def multiplicity(h: Hyperclosure) -> MultiplicityProfile:
    counts = [0] * h.complex.vertex_count
    for m in h.members:
        for v in m.vertices:
            counts[v] += 1
    hist = dict(sorted(Counter(counts).items()))
    return MultiplicityProfile(per_vertex=tuple(counts),
                               max_multiplicity=max(counts), histogram=hist)


def longest_chain(h: Hyperclosure) -> tuple[int, list[ConvexSubcomplex]]:
    """Longest strictly nested chain of members (all share the least member's
    vertices), with a witness chain."""
    members = h.members  # already sorted by size
    best_len = [1] * len(members)
    prev = [-1] * len(members)
    for i, m in enumerate(members):
        mi = m.mask
        for j in range(i):
            if len(members[j]) >= len(m):
                break
            if members[j].mask & ~mi == 0 and best_len[j] + 1 > best_len[i]:
                best_len[i] = best_len[j] + 1
                prev[i] = j
        # members[j] with len == len(m) cannot nest strictly; scan stops there
    top = max(range(len(members)), key=lambda i: (best_len[i], -i))
    chain = []
    i = top
    while i >= 0:
        chain.append(members[i])
        i = prev[i]
    chain.reverse()
    return best_len[top], chain


def clean_container(h: Hyperclosure, f: ConvexSubcomplex, v: ConvexSubcomplex,
                    x: int) -> ConvexSubcomplex:
    """The maximal member orthogonal to V inside F: orth(V, x) ∩ F.

    V must be a member properly contained in the member F, with x in V.
    The result is a member; V × result embeds in F, and any member of F
    whose signature is disjoint from and crossing V's is parallel into it.
    """
    if f not in h.member_set or v not in h.member_set:
        raise ValueError("clean_container arguments must be hyperclosure members")
    if v == f or v.mask & ~f.mask:
        raise ValueError("V must be properly contained in F")
    if x not in v:
        raise ValueError(f"basepoint {x} is not in V")
    return _from_mask(h.complex, orth(v, x).mask & f.mask)


def grades_report(h: Hyperclosure) -> dict[int, int]:
    """Member counts per grade; the grades must exhaust the members."""
    if len(h.grade) != len(h.members):
        raise InvariantViolation("grades do not cover all members")
    return dict(sorted(Counter(h.grade.values()).items()))
