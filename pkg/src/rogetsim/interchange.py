"""Parsing, serialization and validation of the thesaurus interchange format.

The format is UTF-8 and line-oriented: a leading keyword, a single space,
then the payload.  ``#`` lines are comments, blank lines are ignored.

    C <ordinal> <label>        Class
    S <ordinal> <label>        Section
    U <ordinal> <label>        Sub-Section
    G <ordinal> <label>        Head Group
    H <head-number> <label>    Head
    P <POS>                    POS paragraph, POS in {N, ADJ, VB, ADV}
    Q <ordinal>                paragraph within the current POS block
    ; <entry> | <entry> | ...  one semicolon group

A record at level L attaches to the most recent record at level L-1;
emitting level L without a live L-1 ancestor is a hard parse error, as
are duplicate head numbers and empty semicolon groups.
"""

import io
from dataclasses import dataclass, field

from .errors import ParseError
from .taxonomy import Level, PartOfSpeech, Reference, TaxonomyNode, Thesaurus

RECORD_LEVELS = {
    "C": Level.CLASS,
    "S": Level.SECTION,
    "U": Level.SUB_SECTION,
    "G": Level.HEAD_GROUP,
    "H": Level.HEAD,
    "P": Level.POS_PARAGRAPH,
    "Q": Level.PARAGRAPH,
    ";": Level.SEMICOLON_GROUP,
}

RECORD_NAMES = {
    Level.CLASS: "class",
    Level.SECTION: "section",
    Level.SUB_SECTION: "sub-section",
    Level.HEAD_GROUP: "head group",
    Level.HEAD: "head",
    Level.POS_PARAGRAPH: "POS paragraph",
    Level.PARAGRAPH: "paragraph",
    Level.SEMICOLON_GROUP: "semicolon group",
}


def normalize(text):
    """Normalize entry text for index lookup.

    Trims surrounding whitespace, collapses internal whitespace runs to a
    single space and lowercases.  No stemming or lemmatization.
    """
    return " ".join(text.split()).lower()


def parse_interchange(source):
    """Parse interchange text (a string or a text stream) into a Thesaurus."""
    if isinstance(source, str):
        source = io.StringIO(source)

    root = TaxonomyNode(id=0, level=Level.ROOT, label="T")
    nodes = [root]
    references = []
    open_nodes = {Level.ROOT: root}  # most recent node per level
    seen_heads = set()

    def fail(message, line_no, column=1):
        raise ParseError(message, line=line_no, column=column)

    def split_payload(payload, kind, line_no):
        parts = payload.split(None, 1)
        if not parts:
            fail("%s record needs an ordinal and a label" % RECORD_NAMES[kind],
                 line_no, 3)
        try:
            number = int(parts[0])
        except ValueError:
            fail("%s record has non-integer ordinal %r"
                 % (RECORD_NAMES[kind], parts[0]), line_no, 3)
        label = parts[1].strip() if len(parts) > 1 else ""
        return number, label

    for line_no, raw in enumerate(source, start=1):
        line = raw.rstrip("\n").rstrip("\r")
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        keyword = stripped.split(None, 1)[0]
        if keyword not in RECORD_LEVELS:
            fail("unknown record keyword %r" % keyword, line_no)
        level = RECORD_LEVELS[keyword]
        payload = stripped[len(keyword):].strip()

        parent = open_nodes.get(Level(level - 1))
        if parent is None:
            fail("%s record has no open %s to attach to (nesting rule: "
                 "level %d attaches to the most recent level %d record)"
                 % (RECORD_NAMES[level], RECORD_NAMES[Level(level - 1)]
                    if level - 1 > 0 else "document root",
                    int(level), int(level) - 1),
                 line_no)

        node = TaxonomyNode(id=len(nodes), level=level, label="",
                            parent=parent.id)
        if level in (Level.CLASS, Level.SECTION, Level.SUB_SECTION,
                     Level.HEAD_GROUP):
            node.ordinal, node.label = split_payload(payload, level, line_no)
        elif level == Level.HEAD:
            number, label = split_payload(payload, level, line_no)
            if number <= 0:
                fail("head number must be positive, got %d" % number, line_no, 3)
            if number in seen_heads:
                fail("duplicate head number %d" % number, line_no, 3)
            seen_heads.add(number)
            node.head_number = number
            node.label = label
            node.ordinal = len(parent.children) + 1
        elif level == Level.POS_PARAGRAPH:
            try:
                node.pos = PartOfSpeech(payload)
            except ValueError:
                fail("POS must be one of N, ADJ, VB, ADV, got %r" % payload,
                     line_no, 3)
            node.label = payload
            node.ordinal = len(parent.children) + 1
        elif level == Level.PARAGRAPH:
            try:
                node.ordinal = int(payload)
            except ValueError:
                fail("paragraph record has non-integer ordinal %r" % payload,
                     line_no, 3)
        else:  # semicolon group
            entries = [e.strip() for e in payload.split("|")]
            if not payload or any(not e for e in entries):
                fail("empty semicolon group entry", line_no, 3)
            node.ordinal = len(parent.children) + 1
            node.label = entries[0]
            if not parent.label:  # paragraph keyword = first entry, first group
                parent.label = entries[0]
            head = nodes[nodes[parent.parent].parent]
            pos = nodes[parent.parent]
            for entry in entries:
                references.append(Reference(
                    entry_text=entry,
                    semicolon_group=node.id,
                    pos=pos.pos,
                    head_number=head.head_number,
                    keyword=parent.label,
                ))

        nodes.append(node)
        parent.children.append(node.id)
        open_nodes[level] = node
        for deeper in range(int(level) + 1, int(Level.SEMICOLON_GROUP) + 1):
            open_nodes.pop(Level(deeper), None)

    return Thesaurus(nodes, references)


def serialize(thesaurus):
    """Render a Thesaurus back to interchange text."""
    lines = []
    by_group = {}
    for ref in thesaurus.references:
        by_group.setdefault(ref.semicolon_group, []).append(ref.entry_text)

    def emit(node):
        if node.level == Level.CLASS:
            lines.append("C %d %s" % (node.ordinal, node.label))
        elif node.level == Level.SECTION:
            lines.append("S %d %s" % (node.ordinal, node.label))
        elif node.level == Level.SUB_SECTION:
            lines.append("U %d %s" % (node.ordinal, node.label))
        elif node.level == Level.HEAD_GROUP:
            lines.append("G %d %s" % (node.ordinal, node.label))
        elif node.level == Level.HEAD:
            lines.append("H %d %s" % (node.head_number, node.label))
        elif node.level == Level.POS_PARAGRAPH:
            lines.append("P %s" % node.pos.value)
        elif node.level == Level.PARAGRAPH:
            lines.append("Q %d" % node.ordinal)
        elif node.level == Level.SEMICOLON_GROUP:
            lines.append("; %s" % " | ".join(by_group.get(node.id, [])))
        for child in node.children:
            emit(thesaurus.nodes[child])

    for child in thesaurus.root.children:
        emit(thesaurus.nodes[child])
    return "\n".join(lines) + "\n"


def build_index(thesaurus):
    """Map each normalized entry text to its references, in document order."""
    index = {}
    for ref in thesaurus.references:
        index.setdefault(normalize(ref.entry_text), []).append(ref)
    return index


@dataclass
class StructureReport:
    classes: int = 0
    sections: int = 0
    sub_sections: int = 0
    head_groups: int = 0
    heads: int = 0
    pos_paragraphs: int = 0
    paragraphs: int = 0
    semicolon_groups: int = 0
    entries: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def lines(self):
        rows = [
            ("Classes", self.classes),
            ("Sections", self.sections),
            ("Sub-Sections", self.sub_sections),
            ("Head Groups", self.head_groups),
            ("Heads", self.heads),
            ("POS paragraphs", self.pos_paragraphs),
            ("Paragraphs", self.paragraphs),
            ("Semicolon groups", self.semicolon_groups),
            ("Entries", self.entries),
        ]
        out = ["%s: %d" % row for row in rows]
        for violation in self.violations:
            out.append("VIOLATION: %s" % violation)
        return out


def validate_structure(thesaurus):
    """Count nodes per level and re-check the tree invariants."""
    report = StructureReport()
    counters = {
        Level.CLASS: "classes",
        Level.SECTION: "sections",
        Level.SUB_SECTION: "sub_sections",
        Level.HEAD_GROUP: "head_groups",
        Level.HEAD: "heads",
        Level.POS_PARAGRAPH: "pos_paragraphs",
        Level.PARAGRAPH: "paragraphs",
        Level.SEMICOLON_GROUP: "semicolon_groups",
    }
    head_numbers = set()
    for node in thesaurus.nodes:
        if node.level == Level.ROOT:
            continue
        setattr(report, counters[node.level],
                getattr(report, counters[node.level]) + 1)
        parent = thesaurus.nodes[node.parent]
        if parent.level != node.level - 1:
            report.violations.append(
                "node %d (%s) skips a level under %s"
                % (node.id, RECORD_NAMES[node.level], RECORD_NAMES[parent.level]
                   if parent.level > 0 else "root"))
        if node.level == Level.HEAD:
            if node.head_number in head_numbers:
                report.violations.append(
                    "duplicate head number %d" % node.head_number)
            head_numbers.add(node.head_number)
        if node.level == Level.SEMICOLON_GROUP:
            count = sum(1 for r in thesaurus.references
                        if r.semicolon_group == node.id)
            if count == 0:
                report.violations.append(
                    "semicolon group %d has no entries" % node.id)
    report.entries = len(thesaurus.references)
    if report.classes == 0:
        report.violations.append("no classes")
    return report


def structure_signature(thesaurus):
    """Nested-tuple fingerprint of the tree, for structural equality tests."""
    by_group = {}
    for ref in thesaurus.references:
        by_group.setdefault(ref.semicolon_group, []).append(ref.entry_text)

    def sig(node):
        return (int(node.level), node.ordinal, node.label, node.head_number,
                node.pos.value if node.pos else None,
                tuple(by_group.get(node.id, ())),
                tuple(sig(thesaurus.nodes[c]) for c in node.children))

    return sig(thesaurus.root)


def load(path):
    """Parse the interchange file at ``path`` and build its index."""
    with open(path, encoding="utf-8") as handle:
        thesaurus = parse_interchange(handle)
    thesaurus.index  # force index construction
    return thesaurus
