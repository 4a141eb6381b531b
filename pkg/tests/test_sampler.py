import random
from collections import Counter

import pytest

from conftest import random_colouring, random_graph
from rainbowcopy import (
    DomainError,
    EdgeColouring,
    Embedding,
    Graph,
    constant_colouring,
    cycle_graph,
    distinct_colouring,
    find_copy,
    gen_k_bounded,
    gen_locally_k_bounded,
    is_valid_embedding,
    path_graph,
    random_injection,
    violated_events,
)

TWO_K2 = Graph.from_edges(4, [(0, 1), (2, 3)])
ONE_MONO_DISJOINT = EdgeColouring(
    4, {(0, 1): 0, (2, 3): 0, (0, 2): 1, (0, 3): 2, (1, 2): 3, (1, 3): 4}
)


class TestRandomInjection:
    def test_full_permutation(self):
        emb = random_injection(6, 6, 1)
        assert sorted(emb.image_of) == list(range(6))

    def test_single_vertex(self):
        emb = random_injection(1, 5, 2)
        assert len(emb.image_of) == 1 and 0 <= emb.image_of[0] < 5

    def test_deterministic(self):
        assert random_injection(4, 9, 7) == random_injection(4, 9, 7)
        assert random_injection(4, 9, 7) != random_injection(4, 9, 8)

    def test_too_large_rejected(self):
        with pytest.raises(DomainError):
            random_injection(4, 3, 0)

    def test_empirical_uniformity(self):
        counts = Counter(random_injection(2, 3, seed).image_of for seed in range(60_000))
        assert len(counts) == 6
        for count in counts.values():
            assert abs(count / 60_000 - 1 / 6) <= 0.01


class TestViolatedEvents:
    def test_valid_embedding_empty(self):
        emb = Embedding((0, 1, 2))
        assert violated_events(emb, path_graph(3), distinct_colouring(3), "proper") == []

    def test_p3_monochromatic_always_one(self):
        for seed in range(5):
            emb = random_injection(3, 3, seed)
            pairs = violated_events(emb, path_graph(3), constant_colouring(3), "proper")
            assert pairs == [((0, 1), (1, 2))]

    def test_two_k2_modes(self):
        emb = Embedding((0, 1, 2, 3))
        rainbow = violated_events(emb, TWO_K2, ONE_MONO_DISJOINT, "rainbow")
        assert rainbow == [((0, 1), (2, 3))]
        assert violated_events(emb, TWO_K2, ONE_MONO_DISJOINT, "proper") == []

    def test_canonical_order(self):
        emb = Embedding((0, 1, 2, 3))
        pairs = violated_events(emb, cycle_graph(4), constant_colouring(4), "rainbow")
        assert pairs == sorted(pairs)
        assert len(pairs) == 6  # all pairs of the 4 cycle edges


class TestFindCopy:
    def test_rainbow_colouring_returns_initial_injection(self):
        g = cycle_graph(5)
        result = find_copy(g, distinct_colouring(7), "rainbow", seed=13)
        assert result.success and result.resamples == 0
        assert result.embedding.image_of == random_injection(5, 7, 13).image_of

    def test_impossible_instance_fails(self):
        result = find_copy(
            path_graph(3), constant_colouring(3), "proper", seed=1, max_resamples=200
        )
        assert not result.success
        assert result.resamples == 200
        assert result.final_violations == 1

    def test_zero_budget(self):
        result = find_copy(
            path_graph(3), constant_colouring(3), "proper", seed=1, max_resamples=0
        )
        assert not result.success and result.resamples == 0

    def test_deterministic_transcript(self):
        g = cycle_graph(20)
        chi = gen_k_bounded(20, 2, 3)
        a = find_copy(g, chi, "rainbow", seed=5)
        b = find_copy(g, chi, "rainbow", seed=5)
        assert a == b

    def test_c500_rainbow(self):
        g = cycle_graph(500)
        chi = gen_k_bounded(500, 2, 21)
        result = find_copy(g, chi, "rainbow", seed=4)
        assert result.success
        assert is_valid_embedding(result.embedding, g, chi)

    def test_c200_proper(self):
        g = cycle_graph(200)
        chi = gen_locally_k_bounded(200, 3, 8)
        result = find_copy(g, chi, "proper", seed=4)
        assert result.success
        assert is_valid_embedding(result.embedding, g, chi)

    def test_random_pair_selection(self):
        g = cycle_graph(30)
        chi = gen_k_bounded(30, 3, 2)
        result = find_copy(g, chi, "rainbow", seed=9, pair_selection="random")
        assert result.success
        assert is_valid_embedding(result.embedding, g, chi)

    def test_graph_too_large(self):
        with pytest.raises(DomainError):
            find_copy(path_graph(4), constant_colouring(3), "proper", seed=0)


class TestAgreement:
    def test_violations_empty_iff_valid(self):
        rng = random.Random(37)
        for _ in range(60):
            n = rng.randint(3, 7)
            g = random_graph(rng, rng.randint(2, n), edge_prob=0.6)
            chi = random_colouring(rng, n, rng.randint(1, 4))
            emb = random_injection(g.n_vertices, n, rng.randrange(10**6))
            for mode in ("proper", "rainbow"):
                empty = not violated_events(emb, g, chi, mode)
                assert empty == is_valid_embedding(emb, g, chi, mode)

    def test_returned_embeddings_always_validate(self):
        rng = random.Random(53)
        for _ in range(40):
            n = rng.randint(4, 8)
            g = random_graph(rng, rng.randint(2, n), edge_prob=0.5)
            chi = random_colouring(rng, n, rng.randint(2, 5))
            mode = rng.choice(["proper", "rainbow"])
            result = find_copy(g, chi, mode, seed=rng.randrange(10**6), max_resamples=300)
            if result.success:
                assert is_valid_embedding(result.embedding, g, chi, mode)
                assert not violated_events(result.embedding, g, chi, mode)
