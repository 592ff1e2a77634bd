import math
from fractions import Fraction

import pytest

from tuza.constructions import (BLOCK_ORDER, DomainError, alon_upper_bound, block_layout,
                                lai_chang_lower_bound, proposed_lower_bound,
                                random_uniform_hypergraph, tuza_instance)
from tuza.hypergraph import component_vertex_sets, degree_profile, dumps, validate
from tuza.transversal import tau_bruteforce, tau_exact


def _sizes(k):
    s = block_layout(k).sizes
    return s["X1L"], s["X1M"], s["Y12"], s["Z"]


def test_block_layout_examples():
    assert _sizes(7) == (1, 1, 1, 2) and block_layout(7).n == 14
    assert _sizes(8) == (2, 0, 0, 4) and block_layout(8).n == 16
    assert _sizes(4) == (1, 0, 0, 2) and block_layout(4).n == 8


@pytest.mark.parametrize("k", range(2, 65))
def test_block_layout_invariants(k):
    lay = block_layout(k)
    for i in (1, 2, 3):
        assert lay.sizes[f"X{i}L"] == lay.sizes[f"X{i}R"] == k // 4
        assert lay.sizes[f"X{i}M"] == (1 if k % 4 in (2, 3) else 0)
    assert all(lay.sizes[y] == k % 2 for y in ("Y12", "Y23", "Y31"))
    assert lay.sizes["Z"] >= 0
    assert lay.n == 2 * k
    # contiguous ranges in the documented order
    starts = [lay.ranges[b] for b in BLOCK_ORDER]
    assert starts[0][0] == 0 and starts[-1][1] == 2 * k
    assert all(a[1] == b[0] for a, b in zip(starts, starts[1:]))


def test_block_layout_rejects_small_k():
    for k in (1, 0, -3):
        with pytest.raises(DomainError):
            block_layout(k)


@pytest.mark.parametrize("k", range(2, 65))
def test_instance_shape(k):
    h = tuza_instance(k)
    assert validate(h) == []
    assert h.n == 2 * k and h.m == 6
    assert len(set(map(frozenset, h.edges))) == 6
    assert all(len(e) == k for e in h.edges)
    assert set(degree_profile(h).degrees) == {3}


def test_instance_k2_is_k4():
    h = tuza_instance(2)
    assert h.n == 4 and sorted(h.edges) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_instance_k5_ratio():
    h = tuza_instance(5)
    tau = tau_exact(h).tau
    assert Fraction(tau, h.n + h.m) == Fraction(3, 16)


def test_instance_serialization_is_stable():
    assert dumps(tuza_instance(7)) == dumps(tuza_instance(7))


@pytest.mark.parametrize("k", range(5, 18))
def test_construction_tau_cross_checked(k):
    h = tuza_instance(k)
    assert tau_exact(h).tau == tau_bruteforce(h, limit=3).tau == 3


def test_proposed_lower_bound():
    assert proposed_lower_bound(7) == Fraction(3, 20)
    assert proposed_lower_bound(17) == Fraction(3, 40)
    assert proposed_lower_bound(9) == Fraction(1, 8)


def test_lai_chang_lower_bound():
    assert lai_chang_lower_bound(7) == Fraction(2, 14)
    assert lai_chang_lower_bound(16) == Fraction(2, 25)
    assert lai_chang_lower_bound(12) == Fraction(2, 20)


def _lai_chang_float_oracle(k):
    # float sqrt is exact enough for these small k
    r = int(math.floor(math.sqrt(k)))
    return Fraction(2, k + 1 + r + math.ceil(k / r))


def test_lai_chang_matches_float_oracle_small_k():
    for k in range(1, 2000):
        assert lai_chang_lower_bound(k) == _lai_chang_float_oracle(k)


def test_lai_chang_exact_up_to_a_million():
    # r tracks floor(sqrt k) by stepping, independent of math.isqrt
    r = 1
    for k in range(1, 10**6 + 1):
        if (r + 1) * (r + 1) <= k:
            r += 1
        assert r * r <= k < (r + 1) ** 2
        assert lai_chang_lower_bound(k) == Fraction(2, k + 1 + r + (k + r - 1) // r)


def test_lower_bound_comparison():
    for k in (7, 8, 10, 11, 13, 14, 17):
        assert proposed_lower_bound(k) > lai_chang_lower_bound(k)
    for k in (9, 12, 15):
        assert proposed_lower_bound(k) == lai_chang_lower_bound(k)
    assert proposed_lower_bound(16) < lai_chang_lower_bound(16)


def test_alon_upper_bound():
    assert alon_upper_bound(7) == pytest.approx(0.277987, abs=1e-6)
    assert round(alon_upper_bound(17), 4) == 0.1667
    assert alon_upper_bound(3) == pytest.approx(math.log(3) / 3)
    with pytest.raises(DomainError):
        alon_upper_bound(1)


def test_random_single_edge():
    h = random_uniform_hypergraph(7, 7, 1, seed=0)
    assert h.edges == (tuple(range(7)),)


def test_random_is_deterministic():
    assert random_uniform_hypergraph(5, 10, 6, seed=11) == random_uniform_hypergraph(5, 10, 6, seed=11)
    assert random_uniform_hypergraph(5, 10, 6, seed=11) != random_uniform_hypergraph(5, 10, 6, seed=12)


def test_random_instances_valid():
    for seed in range(100):
        h = random_uniform_hypergraph(7, 14, 6, seed=seed)
        assert validate(h) == [] and h.m == 6


def test_random_connected():
    for seed in range(20):
        h = random_uniform_hypergraph(3, 9, 5, seed=seed, require_connected=True)
        assert len(component_vertex_sets(h)) == 1


def test_random_rejects_impossible():
    with pytest.raises(DomainError):
        random_uniform_hypergraph(3, 4, 5, seed=0)      # only C(4,3)=4 edges exist
    with pytest.raises(DomainError):
        random_uniform_hypergraph(5, 4, 1, seed=0)
