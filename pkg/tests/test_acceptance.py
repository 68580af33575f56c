"""Acceptance criteria, one check per criterion at its stated tolerance.

Each ``check_*`` returns ``(ok, detail)``. Under pytest every result is also
collected and printed as a PASS/FAIL line in the terminal summary; running
this file directly prints the same lines.
"""
import itertools
import math
import sys
import time
from pathlib import Path

import numpy as np
import pytest

from graphentropy import (apply_switch, bfd_order_search, bfd_realize, bfd_tree,
                          complete_bipartite_graph, complete_graph, cycle_graph,
                          degree_sequence, delta_randic, dynamical_entropy, edge_vertex_entropies,
                          find_alpha_star, generate_er, is_connected_realizable, is_graphical,
                          log_normalized_randic, log_randic_derivative, majorizes,
                          max_entropy_chain, normalized_randic, path_graph, randic_index,
                          read_graph, schwarz_estimate, spectral_radius, star_graph)
from graphentropy.oracle import (closed_form_lambda, enumerate_connected_graphs,
                                 enumerate_trees, is_isomorphic, tree_sequences)
from graphentropy.randic import alpha_sweep
from graphentropy.rewire import InvalidSwitchError, Switch
from graphentropy.spectral import random_chain

DATA = Path(__file__).parent / "data"
KARATE = DATA / "soc-karate.mtx"
DOLPHINS = DATA / "soc-dolphins.mtx"
ALPHAS = (0.5, 1.0, 2.0)


def _load(path):
    if not path.exists():
        return None
    return read_graph(path)


# ---------------------------------------------------------------- 1, 2

def check_1_karate():
    t0 = time.perf_counter()
    g = _load(KARATE)
    if g is None:
        return False, f"{KARATE.name} missing"
    lam_half = spectral_radius(g).lam / 2
    got = {
        "R_0.5": (randic_index(g, 0.5), 499.50, 0.01),
        "Rbar_0.5": (normalized_randic(g, 0.5), 3.2019, 1e-3),
        "Rbar_1": (normalized_randic(g, 1), 3.0033, 1e-3),
        "R_2": (randic_index(g, 2), 2.704e5, 0.001e5),
        "Rbar_2": (normalized_randic(g, 2), 1.4009, 1e-3),
        "lambda/2": (lam_half, 3.3628, 1e-3),
    }
    ok = all(abs(v - ref) <= tol for v, ref, tol in got.values())
    ok &= randic_index(g, 1) == 3640
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 2
    vals = ", ".join(f"{k}={v:.6g}" for k, (v, _, _) in got.items())
    return ok, f"R_1={randic_index(g, 1):g}, {vals} in {elapsed:.2f}s"


def check_1_dolphins():
    t0 = time.perf_counter()
    g = _load(DOLPHINS)
    if g is None:
        return False, f"{DOLPHINS.name} missing from the test corpus"
    r1, lam_half = randic_index(g, 1), spectral_radius(g).lam / 2
    elapsed = time.perf_counter() - t0
    ok = r1 == 7313 and abs(lam_half - 3.5968) <= 1e-3 and elapsed < 2
    return ok, f"R_1={r1:g}, lambda/2={lam_half:.5f} in {elapsed:.2f}s"


def _bfd_hard(path):
    g = _load(path)
    if g is None:
        return False, f"{path.name} missing from the test corpus", None
    h, _ = bfd_realize(degree_sequence(g))
    ok = degree_sequence(h) == degree_sequence(g)
    parts = []
    for a in ALPHAS:
        ro, rb = randic_index(g, a), randic_index(h, a)
        ok &= rb >= ro
        parts.append(f"R_{a:g} {ro:.6g}->{rb:.6g}")
    lo, lb = spectral_radius(g).lam, spectral_radius(h).lam
    ok &= lb >= lo
    parts.append(f"lambda/2 {lo / 2:.5f}->{lb / 2:.5f}")
    return ok, ", ".join(parts), h


def check_2_karate():
    ok, detail, _ = _bfd_hard(KARATE)
    return ok, detail


def check_2_dolphins():
    ok, detail, _ = _bfd_hard(DOLPHINS)
    return ok, detail


def check_2_stretch():
    """Non-blocking: the published BFD row for karate."""
    _, _, h = _bfd_hard(KARATE)
    if h is None:
        return False, "karate missing"
    r1, lam_half = randic_index(h, 1), spectral_radius(h).lam / 2
    ok = r1 == 4440 and abs(lam_half - 3.7878) <= 1e-3
    return ok, f"R_1={r1:g} (target 4440), lambda/2={lam_half:.4f} (target 3.7878)"


# ------------------------------------------------------------------- 3

def check_3():
    worst = 0.0
    for n in range(3, 51):
        for g in (cycle_graph(n), complete_graph(n)):
            lam = spectral_radius(g).lam
            for a in (-1, 0, 0.5, 1, 2):
                worst = max(worst, abs(2 * normalized_randic(g, a) - lam))
    worst_k = 0.0
    strict = True
    for s in range(1, 11):
        for t in range(1, 11):
            g = complete_bipartite_graph(s, t)
            worst_k = max(worst_k, abs(2 * normalized_randic(g, 0.5) - math.sqrt(s * t)))
            if s != t:
                strict &= 2 * normalized_randic(g, 1) < spectral_radius(g).lam
    ok = worst <= 1e-12 and worst_k <= 1e-12 and strict
    return ok, (f"max|2Rbar-lambda| regular={worst:.2e}, K_st={worst_k:.2e}, "
                f"2Rbar_1<lambda for s!=t: {strict}")


# ------------------------------------------------------------------- 4

def check_4():
    worst_star, worst_rand = 0.0, -math.inf
    for seed in range(20):
        g = generate_er(10 + 2 * seed, 0.3, seed)
        spec = spectral_radius(g)
        bound = math.log2(spec.lam)
        worst_star = max(worst_star, abs(dynamical_entropy(max_entropy_chain(g, spec)) - bound))
        rng = np.random.default_rng(seed)
        for _ in range(100):
            worst_rand = max(worst_rand, dynamical_entropy(random_chain(g, rng)) - bound)
    ok = worst_star <= 1e-9 and worst_rand <= 1e-9
    return ok, f"max|h(P*)-log lambda|={worst_star:.2e}, max h(P)-log lambda={worst_rand:.4f}"


# ------------------------------------------------------------------- 5

def _tree_batch(trees):
    n = trees[0].n
    adj = np.zeros((len(trees), n, n))
    for k, t in enumerate(trees):
        e = t.edge_array
        adj[k, e[:, 0], e[:, 1]] = adj[k, e[:, 1], e[:, 0]] = 1
    lam = np.linalg.eigvalsh(adj)[:, -1]
    r = {a: np.array([randic_index(t, a) for t in trees]) for a in ALPHAS}
    return lam, r


def check_5():
    t0 = time.perf_counter()
    checked, failures = 0, []
    for n in range(2, 9):
        for seq in tree_sequences(n):
            trees = list(enumerate_trees(seq))
            best, _ = bfd_tree(seq)
            lam, r = _tree_batch(trees)
            for name, vals, target in [("lambda", lam, spectral_radius(best).lam)] + [
                    (f"R_{a:g}", r[a], randic_index(best, a)) for a in ALPHAS]:
                top = vals.max()
                if abs(target - top) > 1e-9 * max(1.0, top):
                    failures.append((seq, name, "BFD tree not maximal"))
                    continue
                winners = np.flatnonzero(vals >= top - 1e-9 * max(1.0, top))
                if not all(is_isomorphic(trees[k], best) for k in winners):
                    failures.append((seq, name, "non-isomorphic maximizer"))
            checked += 1
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 60
    lam_bad = [f for f in failures if f[1] == "lambda"]
    r_bad = sorted({f[0] for f in failures if f[1] != "lambda"})
    return ok, (f"{checked} tree sequences in {elapsed:.1f}s; lambda: {len(lam_bad)} failures; "
                f"R_alpha: non-isomorphic co-maximizers for {r_bad}")


# ------------------------------------------------------------------- 6

def check_6():
    pairs, worst = 0, math.inf
    for n in range(2, 9):
        seqs = tree_sequences(n)
        lam = {s: spectral_radius(bfd_tree(s)[0]).lam for s in seqs}
        for a, b in itertools.permutations(seqs, 2):
            if majorizes(a, b):
                pairs += 1
                worst = min(worst, lam[b] - lam[a])
    ok = pairs > 0 and worst > 1e-9
    return ok, f"{pairs} majorizing pairs, min lambda gap {worst:.3e}"


# ------------------------------------------------------------------- 7

def check_7():
    worst, count, invariant = 0.0, 0, True
    for seed in range(10):
        g = generate_er(30, 0.2, seed)
        rng = np.random.default_rng(1000 + seed)
        edges = list(g.edges())
        done = 0
        while done < 100:
            i, j = rng.choice(len(edges), 2, replace=False)
            (x, y), (a, b) = edges[i], edges[j]
            if rng.random() < 0.5:
                a, b = b, a
            s = Switch(int(x), int(y), int(a), int(b))
            try:
                s.validate(g)
            except InvalidSwitchError:
                continue
            h = apply_switch(g, s, require_connected=False)
            invariant &= degree_sequence(h) == degree_sequence(g)
            alpha = float(rng.choice([0.5, 1.0, 2.0, -0.7, 1.3]))
            diff = randic_index(h, alpha) - randic_index(g, alpha)
            worst = max(worst, abs(delta_randic(g, s, alpha) - diff))
            done += 1
            count += 1
    ok = count == 1000 and worst <= 1e-10 and invariant
    return ok, f"{count} switches, max |closed form - recomputed| = {worst:.2e}, degrees kept: {invariant}"


# ------------------------------------------------------------------- 8

def check_8():
    ok = True
    worst_id, worst_zero, stars, bad_cross = 0.0, 0.0, [], []
    for seed in range(10):
        g = generate_er(50, 0.2, seed)
        star = find_alpha_star(g)
        he, hv = edge_vertex_entropies(g, star.alpha)
        worst_id = max(worst_id, abs(log_normalized_randic(g, star.alpha) - (he - hv)))
        he0, hv0 = edge_vertex_entropies(g, 0.0)
        d_avg = 2 * g.m / g.n
        l0 = log_normalized_randic(g, 0.0)
        worst_zero = max(worst_zero, abs(l0 - (he0 - hv0)), abs(l0 - math.log2(d_avg / 2)))
        prof = alpha_sweep(g)
        cross = prof.crossings()
        if not (len(cross) == 2 and cross[0] == 0.0 and abs(cross[1] - star.alpha) <= 0.01):
            bad_cross.append((seed, cross))
        stars.append(star.alpha)
    in_band = sum(0.4 < a < 1.4 for a in stars)
    ok = worst_id <= 1e-6 and worst_zero <= 1e-12 and not bad_cross and in_band >= 8
    return ok, (f"identity residual {worst_id:.2e}, alpha=0 residual {worst_zero:.2e}, "
                f"two crossings on all grids: {not bad_cross}, "
                f"alpha* in (0.4,1.4) for {in_band}/10 (range {min(stars):.3f}..{max(stars):.3f})")


# ------------------------------------------------------------------- 9

def check_9():
    rng = np.random.default_rng(9)
    worst, h = 0.0, 1e-5
    for k in range(20):
        g = generate_er(int(rng.integers(15, 50)), float(rng.uniform(0.15, 0.4)), 100 + k)
        a = 0.0
        while abs(a) < 1e-3:
            a = float(rng.uniform(-1.5, 3.0))
        fd = (log_normalized_randic(g, a + h) - log_normalized_randic(g, a - h)) / (2 * h)
        worst = max(worst, abs(log_randic_derivative(g, a) - fd))
    return worst <= 1e-6, f"max |closed form - central difference| = {worst:.2e} over 20 pairs"


# ------------------------------------------------------------------ 10

def _family_corpus():
    for n in range(2, 51):
        yield path_graph(n), ("path", n)
        yield complete_graph(n), ("complete", n)
    for n in range(3, 51):
        yield cycle_graph(n), ("cycle", n)
    for k in range(1, 50):
        yield star_graph(k), ("star", k)
    for s in range(1, 26):
        for t in range(s, 26):
            yield complete_bipartite_graph(s, t), ("complete_bipartite", s, t)


def check_10():
    worst_cf, worst_sw, worst_case, over = 0.0, 0.0, None, 0
    total = 0
    for g, (family, *params) in _family_corpus():
        lam = spectral_radius(g).lam
        worst_cf = max(worst_cf, abs(lam - closed_form_lambda(family, *params)))
        rel = abs(schwarz_estimate(g, 64) - lam) / lam
        total += 1
        if rel > 0.05:
            over += 1
        if rel > worst_sw:
            worst_sw, worst_case = rel, (family, *params)
    ok = worst_cf <= 1e-10 and over == 0
    return ok, (f"closed forms max error {worst_cf:.2e}; Schwarz k=64 outside 5% on "
                f"{over}/{total} graphs, worst {worst_sw:.3%} at {worst_case}")


# ------------------------------------------------------------------ 11

def check_11():
    t0 = time.perf_counter()
    checked, failures = 0, []
    for n in range(1, 7):
        for seq in itertools.combinations_with_replacement(range(n - 1, -1, -1), n):
            if not (is_graphical(seq) and is_connected_realizable(seq)):
                continue
            graphs = list(enumerate_connected_graphs(seq))
            if n == 1:
                checked += 1
                continue
            r1 = np.array([randic_index(g, 1) for g in graphs])
            top = r1.max()
            winners = [graphs[k] for k in np.flatnonzero(r1 == top)]
            if not any(bfd_order_search(g) is not None for g in winners):
                failures.append(seq)
            checked += 1
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 300
    return ok, f"{checked} sequences, failures {failures[:5]}, {elapsed:.1f}s"


CHECKS = [
    ("1 published karate values", check_1_karate),
    ("1 published dolphins values", check_1_dolphins),
    ("2 BFD rows hard form, karate", check_2_karate),
    ("2 BFD rows hard form, dolphins", check_2_dolphins),
    ("3 equality certificates", check_3),
    ("4 variational principle", check_4),
    ("5 tree extremality by Pruefer oracle", check_5),
    ("6 majorization monotonicity", check_6),
    ("7 switch delta formula", check_7),
    ("8 alpha-star identity", check_8),
    ("9 derivative identity", check_9),
    ("10 spectral kernel vs closed forms", check_10),
    ("11 max-R_1 realization has a BFD ordering", check_11),
]
STRETCH = ("2 stretch (non-blocking) karate BFD row", check_2_stretch)


@pytest.mark.parametrize("name, check", CHECKS, ids=[c[0].split()[0] + "-" + str(i) for i, c in enumerate(CHECKS)])
def test_criterion(name, check, acceptance_log):
    ok, detail = check()
    acceptance_log((name, ok, detail))
    assert ok, detail


def test_stretch_target_reported(acceptance_log):
    ok, detail = STRETCH[1]()
    acceptance_log((STRETCH[0], ok, detail + ("" if ok else " [reported only]")))


if __name__ == "__main__":
    failed = 0
    for name, check in CHECKS + [STRETCH]:
        ok, detail = check()
        failed += not ok and check is not STRETCH[1]
        print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    sys.exit(1 if failed else 0)
