"""Word-level semantic distance and similarity over reference sets.

Given two words, the distance is the minimum reference-to-reference edge
count over the Cartesian product of their reference sets, and

    similarity(w1, w2) = 16 - min distance

All parts of speech are considered; there is no word sense
disambiguation.  The number of minimizing reference pairs doubles as the
shortest-path count used by the synonym solver for tie-breaking: in a
tree each reference pair has exactly one path.
"""

from dataclasses import dataclass
from enum import Enum

from .errors import WordNotFoundError
from .taxonomy import MAX_DISTANCE


class SimilarityTier(Enum):
    HIGH = "High"
    INTERMEDIATE = "Intermediate"
    LOW = "Low"


@dataclass
class WordDistanceResult:
    word1: str
    word2: str
    min_distance: int
    achieving_pairs: list  # (Reference, Reference) pairs attaining the minimum
    pair_count: int


def word_min_distance(thesaurus, w1, w2):
    """Minimum distance between two words, with all minimizing pairs.

    Achieving pairs are listed in document order of the references, which
    makes reports reproducible.  Raises WordNotFoundError naming every
    missing word.
    """
    refs1 = thesaurus.lookup(w1)
    refs2 = thesaurus.lookup(w2)
    missing = [w for w, refs in ((w1, refs1), (w2, refs2)) if not refs]
    if missing:
        raise WordNotFoundError(missing)
    best = MAX_DISTANCE + 1
    pairs = []
    for r1 in refs1:
        for r2 in refs2:
            d = thesaurus.reference_distance(r1, r2)
            if d < best:
                best = d
                pairs = [(r1, r2)]
            elif d == best:
                pairs.append((r1, r2))
    return WordDistanceResult(word1=w1, word2=w2, min_distance=best,
                              achieving_pairs=pairs, pair_count=len(pairs))


def similarity(thesaurus, w1, w2):
    """16 minus the minimum distance; 16 iff some group holds both words."""
    return MAX_DISTANCE - word_min_distance(thesaurus, w1, w2).min_distance


def similarity_tier(value):
    """Tier of a similarity score: 16 high, 12-14 intermediate, else low."""
    if not 0 <= value <= MAX_DISTANCE:
        raise ValueError("similarity must be in [0, 16], got %r" % value)
    if value == MAX_DISTANCE:
        return SimilarityTier.HIGH
    if value >= 12:
        return SimilarityTier.INTERMEDIATE
    return SimilarityTier.LOW


def enumerate_shortest_paths(thesaurus, w1, w2):
    """One rendered tree path per minimizing reference pair."""
    result = word_min_distance(thesaurus, w1, w2)
    return [thesaurus.render_path(r1, r2) for r1, r2 in result.achieving_pairs]


def path_headers(thesaurus, w1, w2):
    """Headers in the printed style ``ode N. to poem N., length = 2, ...``.

    Minimizing pairs are grouped by the POS of the two references; one
    header is produced per grouping, each followed by its rendered paths.
    Returns a list of (header, [path, ...]) in document order.
    """
    result = word_min_distance(thesaurus, w1, w2)
    groups = []
    by_pos = {}
    for r1, r2 in result.achieving_pairs:
        key = (r1.pos, r2.pos)
        if key not in by_pos:
            by_pos[key] = []
            groups.append(key)
        by_pos[key].append((r1, r2))
    out = []
    for key in groups:
        pairs = by_pos[key]
        header = "%s %s to %s %s, length = %d, %d path(s) of this length" % (
            w1, key[0].display, w2, key[1].display,
            result.min_distance, len(pairs))
        out.append((header, [thesaurus.render_path(r1, r2) for r1, r2 in pairs]))
    return out
