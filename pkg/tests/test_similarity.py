"""Word-level distance, Eq.-style similarity and shortest-path counts."""

import pytest

from rogetsim import (MAX_DISTANCE, SimilarityTier, WordNotFoundError,
                      enumerate_shortest_paths, similarity, similarity_tier,
                      word_min_distance)
from tests.conftest import TIER_PAIRS


def brute_force_pair_count(thesaurus, w1, w2):
    """Oracle: nested loop over the full Cartesian product."""
    refs1, refs2 = thesaurus.lookup(w1), thesaurus.lookup(w2)
    distances = [thesaurus.reference_distance(a, b)
                 for a in refs1 for b in refs2]
    best = min(distances)
    return best, distances.count(best)


def test_feline_lynx(thesaurus):
    result = word_min_distance(thesaurus, "feline", "lynx")
    assert result.min_distance == 2
    assert result.pair_count == 1
    (r1, r2), = result.achieving_pairs
    assert r1.display == r2.display == "cat 365 N."


def test_ode_poem(thesaurus):
    result = word_min_distance(thesaurus, "ode", "poem")
    assert result.min_distance == 2
    assert result.pair_count == 2


def test_self_distance_zero(thesaurus):
    for word in ("feline", "lynx", "ode", "monk"):
        assert word_min_distance(thesaurus, word, word).min_distance == 0
        assert similarity(thesaurus, word, word) == MAX_DISTANCE


def test_not_found_names_missing_words(thesaurus):
    with pytest.raises(WordNotFoundError) as excinfo:
        word_min_distance(thesaurus, "feline", "zzzz")
    assert excinfo.value.words == ["zzzz"]
    with pytest.raises(WordNotFoundError) as excinfo:
        word_min_distance(thesaurus, "qqqq", "zzzz")
    assert excinfo.value.words == ["qqqq", "zzzz"]


@pytest.mark.parametrize("distance,w1,w2", TIER_PAIRS)
def test_similarity_complements_distance(thesaurus, distance, w1, w2):
    assert similarity(thesaurus, w1, w2) == MAX_DISTANCE - distance


def test_similarity_symmetric(thesaurus):
    for _, w1, w2 in TIER_PAIRS:
        assert similarity(thesaurus, w1, w2) == similarity(thesaurus, w2, w1)


def test_pair_count_matches_brute_force(thesaurus):
    words = sorted(thesaurus.index)
    for i, w1 in enumerate(words):
        for w2 in words[i:]:
            best, count = brute_force_pair_count(thesaurus, w1, w2)
            result = word_min_distance(thesaurus, w1, w2)
            assert result.min_distance == best
            assert result.pair_count == count
            assert all(thesaurus.reference_distance(a, b) == best
                       for a, b in result.achieving_pairs)


@pytest.mark.parametrize("value,tier", [
    (16, SimilarityTier.HIGH),
    (14, SimilarityTier.INTERMEDIATE),
    (12, SimilarityTier.INTERMEDIATE),
    (10, SimilarityTier.LOW),
    (0, SimilarityTier.LOW),
])
def test_similarity_tier(value, tier):
    assert similarity_tier(value) == tier


def test_similarity_tier_rejects_out_of_range():
    with pytest.raises(ValueError):
        similarity_tier(17)


def test_enumerate_shortest_paths_feline_lynx(thesaurus):
    assert enumerate_shortest_paths(thesaurus, "feline", "lynx") == [
        "feline → cat ← lynx"]


def test_enumerate_shortest_paths_ode_poem(thesaurus):
    paths = enumerate_shortest_paths(thesaurus, "ode", "poem")
    assert len(paths) == 2


def test_enumerate_shortest_paths_self(thesaurus):
    paths = enumerate_shortest_paths(thesaurus, "lynx", "lynx")
    assert len(paths) == len(thesaurus.lookup("lynx"))
