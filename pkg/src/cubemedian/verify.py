"""Randomized invariant suites over a complex.

Each suite draws cases from splitmix64, so a (complex, suite, cases, seed)
quadruple is a complete reproduction of any reported violation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import MedianComplex, hull, is_convex, whole_complex
from .gates import (
    comb_side,
    crossing_signature,
    gate,
    is_parallel,
    parallel_bridge,
    parallel_copies,
    parallel_into,
    project,
    separators,
)
from .hyperclosure import Hyperclosure, clean_container, hyperclosure
from .orthocomplement import orth
from .rng import SplitMix64

SUITES = ("gates", "orth", "closure")


@dataclass
class Violation:
    suite: str
    invariant: str
    inputs: dict = field(default_factory=dict)
    message: str = ""


class _Recorder:
    def __init__(self, suite: str, out: list[Violation], cap: int):
        self.suite = suite
        self.out = out
        self.cap = cap

    def check(self, ok: bool, invariant: str, inputs: dict, message: str = "") -> None:
        if not ok:
            self.out.append(Violation(self.suite, invariant, inputs, message))

    @property
    def full(self) -> bool:
        return len(self.out) >= self.cap


def _random_convex(cx: MedianComplex, rng: SplitMix64):
    k = min(rng.choice((1, 1, 2, 2, 3)), cx.vertex_count)
    return hull(cx, rng.sample(range(cx.vertex_count), k))


def _product_bijection_ok(region, left, right) -> bool:
    coords = [(gate(left, v), gate(right, v)) for v in region.vertices]
    return (len(set(coords)) == len(region) and
            len(region) == len(left) * len(right))


def _gates_suite(cx, rng, cases, rec: _Recorder):
    for _ in range(cases):
        if rec.full:
            return
        y = _random_convex(cx, rng)
        z = _random_convex(cx, rng)
        img = project(y, z)
        inputs = {"Y": y.vertices, "Z": z.vertices}
        rec.check(crossing_signature(img) ==
                  crossing_signature(y) & crossing_signature(z),
                  "gate-crossing-law", inputs)
        rec.check(is_convex(cx, img.vertices), "projection-convex", inputs)
        rec.check(is_parallel(img, project(z, y)), "symmetric-parallelism", inputs)

        c, d, e = (_random_convex(cx, rng) for _ in range(3))
        p1 = project(project(c, d), e)
        p2 = project(c, project(d, e))
        p3 = project(c, project(e, d))
        rec.check(is_parallel(p1, p2) and is_parallel(p2, p3), "projection-currying",
                  {"C": c.vertices, "D": d.vertices, "E": e.vertices})

        f = _random_convex(cx, rng)
        copies = parallel_copies(f)
        finputs = {"F": f.vertices}
        rec.check(f in copies, "copies-contain-self", finputs)
        rec.check(all(is_parallel(f, c2) for c2 in copies), "copies-parallel", finputs)
        f2 = rng.choice(copies)
        region = hull(cx, f.vertices + f2.vertices)
        seps = separators(f, f2)
        pinputs = {"F": f.vertices, "F2": f2.vertices}
        rec.check(crossing_signature(region) == crossing_signature(f) | seps and
                  not crossing_signature(f) & seps,
                  "parallel-product-signature", pinputs)
        bridge = parallel_bridge(f, f2)
        rec.check(_product_bijection_ok(region, f, bridge),
                  "parallel-product-bijection", pinputs)


def _orth_suite(cx, rng, cases, rec: _Recorder, closure: Hyperclosure):
    for _ in range(cases):
        if rec.full:
            return
        a_sub = _random_convex(cx, rng)
        a = rng.choice(a_sub.vertices)
        o1 = orth(a_sub, a)
        o3 = orth(orth(o1, a), a)
        rec.check(o3 == o1, "triple-complement", {"A": a_sub.vertices, "a": a})

        b_sub = _random_convex(cx, rng)
        inner = hull(cx, rng.sample(b_sub.vertices,
                                    1 + rng.randrange(len(b_sub))))
        x = rng.choice(inner.vertices)
        rec.check(orth(b_sub, x).mask & ~orth(inner, x).mask == 0,
                  "contravariance", {"A": inner.vertices, "B": b_sub.vertices, "a": x})

    for member in closure.members:
        if rec.full:
            return
        points = member.vertices
        if len(points) > 8:
            points = tuple(sorted(rng.sample(points, 8)))
        for x in points:
            rec.check(orth(orth(member, x), x) == member, "double-complement",
                      {"F": member.vertices, "x": x})


def _closure_suite(cx, rng, cases, rec: _Recorder, closure: Hyperclosure):
    members = closure.members
    member_set = closure.member_set
    for _ in range(cases):
        if rec.full:
            return
        f = rng.choice(members)
        f2 = rng.choice(members)
        rec.check(project(f, f2) in member_set, "projection-closure",
                  {"F": f.vertices, "F2": f2.vertices})
        a_sub = _random_convex(cx, rng)
        a = rng.choice(a_sub.vertices)
        rec.check(orth(a_sub, a) in member_set, "complement-closure",
                  {"A": a_sub.vertices, "a": a})

    for member in members:
        if rec.full:
            return
        rec.check(all(c in member_set for c in parallel_copies(member)),
                  "parallelism-closure", {"F": member.vertices})
        rec.check(_sound_derivation(closure, member), "grading-soundness",
                  {"F": member.vertices, "grade": closure.grade[member]})

    _clean_container_checks(cx, rng, cases, rec, closure)


def _sound_derivation(closure: Hyperclosure, member) -> bool:
    cx = closure.complex
    der = closure.derivation[member]
    n = closure.grade[member]
    if der.kind == "whole":
        return n == 0 and member == whole_complex(cx)
    if der.kind == "side":
        return n == 1 and member == comb_side(cx.classes[der.class_id], der.sign)
    return (n == closure.grade[der.source] + 1 and
            project(comb_side(cx.classes[der.class_id], der.sign), der.source) == member)


def _clean_container_checks(cx, rng, cases, rec: _Recorder, closure: Hyperclosure):
    members = closure.members
    pairs = [(f, v) for f in members for v in members
             if v != f and v.mask & ~f.mask == 0]
    if cx.vertex_count > 12 and len(pairs) > cases:
        pairs = [pairs[rng.randrange(len(pairs))] for _ in range(cases)]
    crossing = cx.crossing
    for f, v in pairs:
        if rec.full:
            return
        x = v.vertices[0]
        u = clean_container(closure, f, v, x)
        inputs = {"F": f.vertices, "V": v.vertices, "x": x}
        sig_u, sig_v = crossing_signature(u), crossing_signature(v)
        rec.check(u in closure.member_set, "clean-container-member", inputs)
        rec.check(not sig_u & sig_v and
                  all(b in crossing[a] for a in sig_u for b in sig_v),
                  "clean-container-orthogonal", inputs)
        region = hull(cx, v.vertices + u.vertices)
        rec.check(region.mask & ~f.mask == 0 and _product_bijection_ok(region, v, u),
                  "clean-container-product", inputs)
        maximal = all(parallel_into(w, u) for w in members
                      if w.mask & ~f.mask == 0
                      and not crossing_signature(w) & sig_v
                      and all(b in crossing[a]
                              for a in crossing_signature(w) for b in sig_v))
        rec.check(maximal, "clean-container-maximality", inputs)


def verify_complex(cx: MedianComplex, suite: str = "all", cases: int = 1000,
                   seed: int = 0, max_violations: int = 25) -> list[Violation]:
    """Run the requested invariant suite(s); an empty result means no violation."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    wanted = SUITES if suite == "all" else (suite,)
    violations: list[Violation] = []
    closure = hyperclosure(cx) if {"orth", "closure"} & set(wanted) else None
    for name in wanted:
        rng = SplitMix64(seed * len(SUITES) + SUITES.index(name))
        rec = _Recorder(name, violations, max_violations)
        if name == "gates":
            _gates_suite(cx, rng, cases, rec)
        elif name == "orth":
            _orth_suite(cx, rng, cases, rec, closure)
        else:
            _closure_suite(cx, rng, cases, rec, closure)
    return violations
