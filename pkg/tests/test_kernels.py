"""Clique tally kernels: pure fallback versus compiled extension."""

import itertools
import random

import pytest

from coxcat import kernels
from coxcat._kernels_py import clique_tally as pure_clique_tally
from coxcat._kernels_py import iter_cliques


def brute_force_tally(adj, special_mask, edge_masks, max_size):
    """Filter all vertex subsets for cliqueness; exponential but obvious."""
    n = len(adj)
    counts = {}
    for size in range(n + 1):
        for subset in itertools.combinations(range(n), size):
            ok = all(
                (adj[a] >> b) & 1 for a, b in itertools.combinations(subset, 2)
            )
            if not ok:
                continue
            assert len(subset) <= max_size
            special = sum(1 for v in subset if (special_mask >> v) & 1)
            plain = len(subset) - special
            em = 0
            for v in subset:
                em |= edge_masks[v]
            key = (plain, special, em)
            counts[key] = counts.get(key, 0) + 1
    return counts


def random_graph(rng, n, density):
    adj = [0] * n
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < density:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return adj


@pytest.mark.parametrize("seed", range(8))
def test_pure_kernel_matches_brute_force(seed):
    rng = random.Random(seed)
    n = rng.randint(0, 11)
    adj = random_graph(rng, n, rng.choice((0.2, 0.5, 0.8)))
    special_mask = rng.getrandbits(n) if n else 0
    edge_masks = [rng.getrandbits(4) for _ in range(n)]
    expected = brute_force_tally(adj, special_mask, edge_masks, n)
    assert pure_clique_tally(adj, special_mask, edge_masks, n) == expected


@pytest.mark.parametrize("seed", range(12))
def test_compiled_kernel_matches_pure(seed):
    if not kernels.USING_COMPILED:
        pytest.skip("compiled kernel not available")
    from coxcat import _kernels

    rng = random.Random(1000 + seed)
    n = rng.randint(1, 70)  # crosses the one-word/two-word boundary
    adj = random_graph(rng, n, 0.25)
    special_mask = rng.getrandbits(n)
    edge_masks = [rng.getrandbits(6) for _ in range(n)]
    assert _kernels.clique_tally(adj, special_mask, edge_masks, n) == pure_clique_tally(
        adj, special_mask, edge_masks, n
    )


def test_empty_graph():
    assert pure_clique_tally([], 0, [], 0) == {(0, 0, 0): 1}
    if kernels.USING_COMPILED:
        from coxcat import _kernels

        assert _kernels.clique_tally([], 0, [], 0) == {(0, 0, 0): 1}


def test_max_size_bound_enforced():
    adj = [2, 1]  # a single edge
    with pytest.raises(ValueError):
        pure_clique_tally(adj, 0, [0, 0], 1)
    if kernels.USING_COMPILED:
        from coxcat import _kernels

        with pytest.raises(ValueError):
            _kernels.clique_tally(adj, 0, [0, 0], 1)


def test_dispatcher_falls_back_above_limits():
    # 129 isolated vertices exceed the compiled 128-vertex cap
    adj = [0] * 129
    counts = kernels.clique_tally(adj, 0, [0] * 129, 129)
    assert counts[(0, 0, 0)] == 1
    assert counts[(1, 0, 0)] == 129
    assert (2, 0, 0) not in counts


def test_iter_cliques_enumerates_each_once():
    rng = random.Random(3)
    adj = random_graph(rng, 10, 0.4)
    seen = list(iter_cliques(adj))
    assert len(seen) == len(set(seen))
    expected_total = sum(brute_force_tally(adj, 0, [0] * 10, 10).values())
    assert len(seen) == expected_total
