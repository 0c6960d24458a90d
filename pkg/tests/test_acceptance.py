"""Acceptance criteria, one test per criterion, one printed line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the PASS lines.
"""

import time

from cubemedian import (
    analyze,
    box,
    grades_report,
    grid,
    hyperclosure,
    longest_chain,
    multiplicity,
    oracle_hyperclosure,
    random_median,
    report_to_json,
    staircase,
    tree,
    verify_complex,
)


def _criterion(number: int, description: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[{status}] criterion {number}: {description}{suffix}")
    assert ok, f"criterion {number} failed: {description} {suffix}"


def test_criterion_1_oracle_equivalence():
    fixtures = [box(2), grid(1, 1), grid(2, 2), box(2, 2, 2),
                staircase(2), staircase(3)]
    fixtures += [random_median(4, 5, seed=s) for s in range(1, 6)]
    fixtures += [tree(8, seed=s) for s in range(1, 6)]
    start = time.monotonic()
    agree = True
    for cx in fixtures:
        closure = hyperclosure(cx)
        oracle = oracle_hyperclosure(cx, max_vertices=27)
        if oracle != closure.member_set:
            agree = False
            break
    elapsed = time.monotonic() - start
    _criterion(1, "hyperclosure equals brute-force oracle on all fixtures",
               agree and elapsed < 60.0, f"{len(fixtures)} fixtures, {elapsed:.1f}s")


def test_criterion_2_grid_flatness():
    mults = {}
    oracle_ok = True
    for n in range(2, 9):
        g = grid(n, n)
        closure = hyperclosure(g)
        mults[n] = multiplicity(closure).max_multiplicity
        if n <= 3:
            oracle_ok &= oracle_hyperclosure(g, max_vertices=16) == closure.member_set
    _criterion(2, "max multiplicity of grid(n,n) is exactly 4 for n=2..8",
               all(m == 4 for m in mults.values()) and oracle_ok, f"{mults}")


def test_criterion_3_tree_bound():
    sizes = {}
    ok = True
    for seed in range(1, 11):
        n = 4 * seed  # sizes 4..40
        t = tree(n, seed=seed)
        closure = hyperclosure(t)
        sizes[n] = multiplicity(closure).max_multiplicity
        ok &= sizes[n] == 2
        if n <= 10:
            ok &= oracle_hyperclosure(t) == closure.member_set
    _criterion(3, "max multiplicity of random trees (n<=40, 10 seeds) is exactly 2",
               ok, f"{sizes}")


def test_criterion_4_staircase_growth():
    mults = []
    oracle_ok = True
    for n in range(2, 7):
        st = staircase(n)
        closure = hyperclosure(st)
        mults.append(multiplicity(closure).max_multiplicity)
        if n <= 3:
            oracle_ok &= oracle_hyperclosure(st) == closure.member_set
    growing = all(b > a for a, b in zip(mults, mults[1:]))
    bound = all(m >= n for n, m in zip(range(2, 7), mults))
    _criterion(4, "staircase multiplicity is >= n and strictly increasing for n=2..6",
               growing and bound and oracle_ok, f"n=2..6 -> {mults}")


def test_criterion_5_invariant_suites():
    families = {
        "grid": grid(2, 2),
        "box": box(2, 2, 2),
        "square": grid(1, 1),
        "path": box(2),
        "staircase2": staircase(2),
        "staircase3": staircase(3),
        "tree": tree(12, seed=2),
        "random_median": random_median(4, 5, seed=1),
    }
    counts = {}
    for name, cx in families.items():
        violations = verify_complex(cx, suite="all", cases=1000, seed=2024)
        counts[name] = len(violations)
    _criterion(5, "all invariant suites pass 1000 randomized cases per family",
               all(c == 0 for c in counts.values()), f"violations: {counts}")


def test_criterion_6_pinned_exact_values():
    q2 = hyperclosure(grid(1, 1))
    p3 = hyperclosure(box(2))
    ok = (len(q2) == 9 and grades_report(q2) == {0: 1, 1: 4, 2: 4}
          and len(p3) == 4 and longest_chain(q2)[0] == 3)
    _criterion(6, "|F(Q2)|=9 with grades {0:1,1:4,2:4}, |F(P3)|=4, chain(Q2)=3",
               ok, f"|F(Q2)|={len(q2)}, grades={grades_report(q2)}, "
                   f"|F(P3)|={len(p3)}, chain={longest_chain(q2)[0]}")


def test_criterion_7_determinism():
    cx1 = staircase(4)
    cx2 = staircase(4)
    r1 = report_to_json(analyze(cx1, with_oracle=True, oracle_bound=19, source="st4"))
    r2 = report_to_json(analyze(cx2, with_oracle=True, oracle_bound=19, source="st4"))
    _criterion(7, "identical inputs produce byte-identical analysis reports",
               r1 == r2, f"{len(r1)} bytes")
