"""Immutable 9-level thesaurus taxonomy and edge-counting distance.

The tree runs Root -> Class -> Section -> Sub-Section -> Head Group ->
Head -> POS paragraph -> Paragraph -> Semicolon group.  Words and phrases
are members of semicolon groups, not tree nodes, so two entries in the
same group are at distance 0.  The distance between two references is the
number of tree edges on the unique path between their semicolon groups:

    distance = 2 * (8 - level(lowest common ancestor))

which is always an even number in [0, 16].
"""

from dataclasses import dataclass, field
from enum import Enum, IntEnum

from .errors import InvalidNodeError, InvalidReferenceError

MAX_DISTANCE = 16


class Level(IntEnum):
    ROOT = 0
    CLASS = 1
    SECTION = 2
    SUB_SECTION = 3
    HEAD_GROUP = 4
    HEAD = 5
    POS_PARAGRAPH = 6
    PARAGRAPH = 7
    SEMICOLON_GROUP = 8


class PartOfSpeech(Enum):
    NOUN = "N"
    ADJECTIVE = "ADJ"
    VERB = "VB"
    ADVERB = "ADV"

    @property
    def display(self):
        """Printed form used in reference lists, e.g. 'N.'."""
        return self.value + "."


@dataclass(frozen=True)
class Reference:
    """One occurrence of a word or phrase at a specific semicolon group.

    ``keyword`` is the owning paragraph's keyword (its first entry), used
    for the printed form ``cat 365 N.``.
    """

    entry_text: str
    semicolon_group: int
    pos: PartOfSpeech
    head_number: int
    keyword: str

    @property
    def display(self):
        return "%s %d %s" % (self.keyword, self.head_number, self.pos.display)


@dataclass
class TaxonomyNode:
    id: int
    level: Level
    label: str
    ordinal: int = 0
    parent: int = -1
    head_number: int | None = None
    pos: PartOfSpeech | None = None
    children: list = field(default_factory=list)

    @property
    def display_label(self):
        """Label as printed in paths: '698. Cunning', 'ADJ.', 'T'."""
        if self.level == Level.HEAD:
            return "%d. %s" % (self.head_number, self.label)
        if self.level == Level.POS_PARAGRAPH:
            return self.pos.display
        return self.label


class Thesaurus:
    """A read-only taxonomy tree plus the references it defines.

    Instances are immutable after construction; every query method is
    safe to call concurrently.
    """

    def __init__(self, nodes, references):
        self.nodes = nodes
        self.references = references
        self.root_id = 0
        self._index = None

    def node(self, node_id):
        if not isinstance(node_id, int) or not 0 <= node_id < len(self.nodes):
            raise InvalidNodeError("unknown node id: %r" % (node_id,))
        return self.nodes[node_id]

    @property
    def root(self):
        return self.nodes[self.root_id]

    def children(self, node_id):
        return [self.nodes[c] for c in self.node(node_id).children]

    def nodes_at_level(self, level):
        return [n for n in self.nodes if n.level == level]

    def ancestors(self, node_id):
        """Path of nodes from the given node up to (and including) Root."""
        node = self.node(node_id)
        path = [node]
        while node.parent >= 0:
            node = self.nodes[node.parent]
            path.append(node)
        return path

    def lowest_common_ancestor(self, a, b):
        """Deepest node that is an ancestor-or-self of both semicolon groups."""
        na, nb = self.node(a), self.node(b)
        while na.level > nb.level:
            na = self.nodes[na.parent]
        while nb.level > na.level:
            nb = self.nodes[nb.parent]
        while na.id != nb.id:
            na = self.nodes[na.parent]
            nb = self.nodes[nb.parent]
        return na

    def _check_reference(self, ref):
        try:
            node = self.node(ref.semicolon_group)
        except InvalidNodeError:
            raise InvalidReferenceError(
                "reference %r does not belong to this thesaurus" % (ref,))
        if node.level != Level.SEMICOLON_GROUP:
            raise InvalidReferenceError(
                "reference %r does not point at a semicolon group" % (ref,))
        return node

    def reference_distance(self, r1, r2):
        """Edges on the shortest tree path between two references' groups."""
        self._check_reference(r1)
        self._check_reference(r2)
        lca = self.lowest_common_ancestor(r1.semicolon_group, r2.semicolon_group)
        return 2 * (Level.SEMICOLON_GROUP - lca.level)

    def tree_path(self, r1, r2):
        """The unique path between two references, as display labels.

        The sequence starts with r1's entry text, climbs from r1's
        paragraph to the lowest common ancestor, descends to r2's
        paragraph and ends with r2's entry text.  Semicolon-group nodes
        are not printed, matching the convention where the distance-2
        path reads ``feline -> cat <- lynx``: the visible connector count
        equals the edge count for every distance >= 2.  For distance 0
        the sequence is just the two entry texts.

        Returns (labels, apex_index) where apex_index is the position of
        the lowest common ancestor's label (0 for the distance-0 case).
        """
        self._check_reference(r1)
        self._check_reference(r2)
        lca = self.lowest_common_ancestor(r1.semicolon_group, r2.semicolon_group)
        labels = [r1.entry_text]
        if lca.level < Level.SEMICOLON_GROUP:
            up = [n for n in self.ancestors(r1.semicolon_group)
                  if lca.level <= n.level <= Level.PARAGRAPH]
            down = [n for n in self.ancestors(r2.semicolon_group)
                    if lca.level < n.level <= Level.PARAGRAPH]
            labels.extend(n.display_label for n in up)
            labels.extend(n.display_label for n in reversed(down))
        apex = 1 if lca.level == Level.SEMICOLON_GROUP else \
            1 + (Level.PARAGRAPH - lca.level)
        labels.append(r2.entry_text)
        return labels, apex

    def render_path(self, r1, r2):
        """Arrow rendering of tree_path: up-arrows to the apex, then down."""
        labels, apex = self.tree_path(r1, r2)
        parts = [labels[0]]
        for i, label in enumerate(labels[1:]):
            arrow = "→" if i + 1 <= apex else "←"
            parts.append(" %s %s" % (arrow, label))
        return "".join(parts)

    # Index access; the mapping itself is built in rogetsim.interchange.

    @property
    def index(self):
        if self._index is None:
            from .interchange import build_index
            self._index = build_index(self)
        return self._index

    def lookup(self, text):
        """References whose normalized entry text equals normalize(text)."""
        from .interchange import normalize
        return self.index.get(normalize(text), [])
