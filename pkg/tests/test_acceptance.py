"""Release acceptance gate.

Every criterion the package promises, run end to end at its stated
tolerance. `pytest -v tests/test_acceptance.py` prints one pass/fail
line per criterion; run with -s to also see the measured numbers.
"""

from __future__ import annotations

import math
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np
import pytest

from equicolor import (
    MODE_BEST_EFFORT,
    MODE_THEOREM,
    Cover,
    GenSpec,
    Infeasible,
    TooLargeError,
    brute_chi_e,
    brute_equitable_k,
    brute_normal_forms,
    build_graph,
    color_equitably,
    compute_constants,
    derive_parameters,
    generate_bipartite,
    hypotheses_hold,
    normalize,
    split,
    tl_margin,
    tq_margin,
    verify,
)
from equicolor import bench, cli

from builders import complete_bipartite, star


@contextmanager
def budget(seconds: float):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"budget exceeded: {elapsed:.1f}s >= {seconds}s"


def _colored_and_verified(graph) -> Cover:
    cover = color_equitably(graph, mode=MODE_THEOREM)
    assert isinstance(cover, Cover)
    k, q, r = derive_parameters(graph.n, graph.max_degree)
    report = verify(graph, cover, k, q, r)
    assert report.all_ok, report.as_dict()
    return cover


def test_criterion_01_star_bound_is_sharp():
    # Stars need every one of the ceil(d/2)+1 classes: the oracle says no
    # smaller count works, and the constructor delivers exactly that many.
    with budget(10.0):
        for d in range(5, 16):
            k_target = derive_parameters(d + 1, d)[0]
            assert k_target == (d + 1) // 2 + 1
            assert brute_chi_e(star(d)) == k_target
            _colored_and_verified(star(d))
        # past n = 16 the oracle refuses rather than stalling, while the
        # constructor keeps working
        with pytest.raises(TooLargeError):
            brute_chi_e(star(16))
        _colored_and_verified(star(16))
    print("criterion 01 PASS: star sharpness d=5..15 vs oracle, d=16 guarded")


def test_criterion_02_normalization_grid_exhaustive():
    with budget(30.0):
        checked = 0
        for k in range(2, 13):
            for q in range(1, 9):
                for r in range(k):
                    n = k * q + r
                    for a in range(n // 2 + 1):
                        nf = normalize(a, q, k, r)
                        assert 0 <= nf.u <= nf.x <= k // 2
                        assert nf.u <= r
                        assert r - nf.u <= k - nf.x
                        assert 0 <= nf.M < q + k
                        assert nf.x * q + nf.u + nf.M == a
                        assert (nf.x, nf.u, nf.M) in brute_normal_forms(a, q, k, r)
                        checked += 1
    print(f"criterion 02 PASS: {checked} normalizations on the k<=12, q<=8 grid")


def test_criterion_03_quota_split_exhaustive():
    with budget(5.0):
        checked = 0
        for t in range(1, 21):
            for H in range(21):
                for M in range(t * H + 1):
                    quotas = split(M, t, H)
                    assert len(quotas) == t
                    assert sum(quotas) == M
                    assert all(x <= H for x in quotas)
                    assert list(quotas) == sorted(quotas, reverse=True)
                    assert quotas[0] - quotas[-1] <= 1
                    checked += 1
    print(f"criterion 03 PASS: {checked} splits with t,H <= 20")


def test_criterion_04_random_instances_all_verified():
    # 1000 seeded instances spanning max degree 10..200 and n between 3 and
    # 40 times the max degree. Every cover the engine emits must satisfy the
    # independent verifier; declining is allowed but must stay rare.
    with budget(120.0):
        rng = np.random.default_rng(20260823)
        tally = {"ok": 0, "infeasible": 0}
        for _ in range(1000):
            delta = int(round(math.exp(rng.uniform(math.log(10), math.log(200)))))
            ratio = math.exp(rng.uniform(math.log(3.0), math.log(40.0)))
            n = int(delta * ratio)
            frac_a = float(rng.uniform(0.05, 0.35))
            n_b = max(n - max(1, round(n * frac_a)), int(1.5 * delta) + 1)
            n_a = max(1, n - n_b)
            spec = GenSpec(n_a=n_a, n_b=n_b, delta_cap=delta,
                           p=min(Fraction(1), Fraction(21 * delta, 20 * n_b)),
                           seed=int(rng.integers(0, 2 ** 63)))
            graph = build_graph(generate_bipartite(spec))
            result = color_equitably(graph, mode=MODE_BEST_EFFORT)
            if isinstance(result, Cover):
                k, q, r = derive_parameters(graph.n, graph.max_degree)
                assert verify(graph, result, k, q, r).all_ok
                assert result.trace.edge_scans <= graph.m + result.trace.t * graph.b
                tally["ok"] += 1
            else:
                tally["infeasible"] += 1
        assert tally["ok"] >= 900, tally
    print(f"criterion 04 PASS: {tally['ok']} verified covers, "
          f"{tally['infeasible']} declined out of 1000")


def test_criterion_05_threshold_constants_reference():
    res = compute_constants(21)
    assert (res.k0, res.k, res.c) == (1538, 1538, 3076)
    # independent linear scan: least k with both margins nonnegative onward
    last_bad = 0
    for k in range(1, 4000):
        if tq_margin(Fraction(21), k) < 0 or tl_margin(Fraction(21), k) < 0:
            last_bad = k
    assert last_bad + 1 == res.k0
    cs = [compute_constants(z).c for z in (21, 25, 41, 100, 10 ** 6)]
    assert cs == [3076, 406, 146, 92, 74]
    assert cs == sorted(cs, reverse=True)
    print("criterion 05 PASS: constants (1538, 1538, 3076) match scan, c antitone")


def test_criterion_06_large_guaranteed_instance():
    # A dense instance inside the guaranteed regime: n = 21 * delta with
    # delta = 3100, so the theorem-mode construction may not decline.
    with budget(300.0):
        spec = GenSpec(n_a=600, n_b=64500, delta_cap=3100,
                       p=Fraction(103, 100) * Fraction(3100, 64500),
                       seed=20260823)
        graph = build_graph(generate_bipartite(spec))
        assert graph.n == 65100
        assert graph.max_degree == 3100
        assert hypotheses_hold(graph.n, graph.max_degree, 21)
        cover = color_equitably(graph, mode=MODE_THEOREM)
        assert isinstance(cover, Cover), "declined inside the guaranteed regime"
        k, q, r = derive_parameters(graph.n, graph.max_degree)
        assert cover.trace.t == k // 4
        assert verify(graph, cover, k, q, r).all_ok
        assert cover.trace.edge_scans <= graph.m + cover.trace.t * graph.b
    print(f"criterion 06 PASS: n={graph.n} m={graph.m} colored with k={k} "
          f"and certified")


def test_criterion_07_infeasible_target_reported_honestly():
    # K_{3,3} wants k = 3 classes of size 2, which no equitable coloring
    # achieves even though 2 classes suffice. The engine must say so with
    # reasons instead of emitting a bad cover.
    g = complete_bipartite(3, 3)
    theorem = color_equitably(g, mode=MODE_THEOREM)
    assert isinstance(theorem, Infeasible) and len(theorem.reports) == 1
    best = color_equitably(g, mode=MODE_BEST_EFFORT)
    assert isinstance(best, Infeasible) and len(best.reports) == 3
    assert brute_chi_e(g) == 2
    assert brute_equitable_k(g, 3) is None
    witness = brute_equitable_k(g, 2)
    assert witness is not None and verify(g, witness, 2, 3, 0).all_ok
    print("criterion 07 PASS: K_{3,3} declined with reports, oracle confirms")


def test_criterion_08_near_linear_scaling(tmp_path):
    # Doubling n from 10k to 40k must not blow up the wall time: each
    # doubling stays within a factor of 5 (two runs, per-size minimum, to
    # damp scheduler noise), and the kernel's scan counter respects the
    # |E| + t*|B| work bound.
    sizes = [10000, 20000, 40000]
    runs = []
    for tag in ("a", "b"):
        out = tmp_path / f"bench_{tag}.csv"
        code = cli.main(["bench", "--sizes", ",".join(str(s) for s in sizes),
                         "--seed", "7", "--output", str(out)])
        assert code == 0
        runs.append(bench.read_csv(out))
    for records in runs:
        for rec in records:
            assert rec.outcome == "ok"
            k = (rec.delta + 1) // 2 + 1
            t = k // 4
            b = rec.n - bench.BENCH_SIDE_A
            assert rec.edge_scans <= rec.m + t * b
    walls = [min(r1.wall_time_ns, r2.wall_time_ns) for r1, r2 in zip(*runs)]
    ratios = [walls[i + 1] / walls[i] for i in range(len(walls) - 1)]
    assert all(ratio <= 5.0 for ratio in ratios), (walls, ratios)
    print(f"criterion 08 PASS: doubling ratios {[round(r, 2) for r in ratios]}"
          f" <= 5")
