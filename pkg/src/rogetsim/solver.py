"""Four-choice synonym question solver (TOEFL/ESL/RDWP style).

The choice with the shortest semantic distance to the problem word wins;
the most shortest paths breaks ties.  Phrases that are not indexed as a
whole are decomposed into words, ignoring the stop words "and", "to" and
"be", and the best word stands in for the phrase.  Residual ties score
partial credit: 1/2 for two tied choices, 1/3 for three, 1/4 for four.
"""

from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction

from .errors import ParseError, ReportError
from .interchange import normalize
from .similarity import word_min_distance
from .taxonomy import PartOfSpeech

STOP_WORDS = frozenset({"and", "to", "be"})


@dataclass
class SynonymQuestion:
    problem: str
    choices: list
    gold_index: int
    source_tag: str = ""

    def __post_init__(self):
        if len(self.choices) != 4:
            raise ValueError("a synonym question needs exactly 4 choices")
        if not 0 <= self.gold_index <= 3:
            raise ValueError("gold_index must be in 0..3")


@dataclass
class ChoiceEvaluation:
    choice_index: int
    choice_text: str
    effective_distance: int | None  # None = not found
    pair_count: int = 0
    contributing_token: str | None = None
    tokens_not_found: list = field(default_factory=list)
    best_pair: tuple | None = None  # (problem ref, choice ref) for display

    @property
    def found(self):
        return self.effective_distance is not None


@dataclass
class QuestionResult:
    question: SynonymQuestion
    chosen_index: int | None  # None = unanswerable
    tie_after_tiebreak: bool
    tied_indices: list
    per_choice: list
    correct: bool
    credit: Fraction

    @property
    def unanswerable(self):
        return self.chosen_index is None

    @property
    def verdict(self):
        if self.unanswerable:
            return "NOT-FOUND"
        if self.tie_after_tiebreak:
            return "TIE"
        return "CORRECT" if self.correct else "INCORRECT"


@dataclass
class TestReport:
    question_count: int
    correct_count: int
    questions_with_ties: int
    score: Fraction
    percent: Decimal
    questions_not_found: int
    other_words_not_found: int
    results: list

    def summary_lines(self):
        return [
            "Correct: %d" % self.correct_count,
            "Questions with ties: %d" % self.questions_with_ties,
            "Score: %s" % format_number(self.score),
            "Percent: %s" % self.percent,
            "Questions not found: %d" % self.questions_not_found,
            "Other words not found: %d" % self.other_words_not_found,
        ]


def format_number(value):
    """Fraction to display form: 63 -> '63', 62+1/3 -> '62.33'."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    quantized = (Decimal(value.numerator) / Decimal(value.denominator)
                 ).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP)
    text = str(quantized).rstrip("0").rstrip(".")
    return text


def tokenize_choice(text):
    """Whitespace-split after normalization, dropping 'and', 'to', 'be'."""
    return [t for t in normalize(text).split() if t not in STOP_WORDS]


def evaluate_choice(thesaurus, problem, choice, choice_index=0):
    """Distance of one choice word or phrase from the problem word.

    A whole-phrase index hit takes precedence; otherwise each remaining
    token is evaluated and the shortest token distance stands in for the
    phrase, with pair counts summed over all tokens achieving it.
    """
    if thesaurus.lookup(choice):
        result = word_min_distance(thesaurus, problem, choice)
        return ChoiceEvaluation(
            choice_index=choice_index, choice_text=choice,
            effective_distance=result.min_distance,
            pair_count=result.pair_count,
            contributing_token=normalize(choice),
            best_pair=result.achieving_pairs[0])

    evaluation = ChoiceEvaluation(choice_index=choice_index,
                                  choice_text=choice,
                                  effective_distance=None)
    for token in tokenize_choice(choice):
        if not thesaurus.lookup(token):
            evaluation.tokens_not_found.append(token)
            continue
        result = word_min_distance(thesaurus, problem, token)
        if (evaluation.effective_distance is None
                or result.min_distance < evaluation.effective_distance):
            evaluation.effective_distance = result.min_distance
            evaluation.pair_count = result.pair_count
            evaluation.contributing_token = token
            evaluation.best_pair = result.achieving_pairs[0]
        elif result.min_distance == evaluation.effective_distance:
            evaluation.pair_count += result.pair_count
    return evaluation


def answer_question(thesaurus, question):
    """Pick the choice with the shortest distance; most paths breaks ties."""
    if not thesaurus.lookup(question.problem):
        per_choice = [ChoiceEvaluation(choice_index=i, choice_text=c,
                                       effective_distance=None)
                      for i, c in enumerate(question.choices)]
        return QuestionResult(question=question, chosen_index=None,
                              tie_after_tiebreak=False, tied_indices=[],
                              per_choice=per_choice, correct=False,
                              credit=Fraction(0))

    per_choice = [evaluate_choice(thesaurus, question.problem, choice, i)
                  for i, choice in enumerate(question.choices)]
    found = [ev for ev in per_choice if ev.found]
    if not found:
        return QuestionResult(question=question, chosen_index=None,
                              tie_after_tiebreak=False, tied_indices=[],
                              per_choice=per_choice, correct=False,
                              credit=Fraction(0))

    best_distance = min(ev.effective_distance for ev in found)
    at_best = [ev for ev in found if ev.effective_distance == best_distance]
    best_paths = max(ev.pair_count for ev in at_best)
    tied = [ev.choice_index for ev in at_best if ev.pair_count == best_paths]

    if len(tied) > 1:
        in_tie = question.gold_index in tied
        credit = Fraction(1, len(tied)) if in_tie else Fraction(0)
        return QuestionResult(question=question, chosen_index=tied[0],
                              tie_after_tiebreak=True, tied_indices=tied,
                              per_choice=per_choice, correct=False,
                              credit=credit)

    chosen = tied[0]
    correct = chosen == question.gold_index
    return QuestionResult(question=question, chosen_index=chosen,
                          tie_after_tiebreak=False, tied_indices=[],
                          per_choice=per_choice, correct=correct,
                          credit=Fraction(1) if correct else Fraction(0))


def score_test(thesaurus, questions):
    """Answer every question and aggregate the six report fields.

    Unanswerable questions stay in the denominator.  "Other words not
    found" counts distinct (question, token) not-found events among the
    evaluated choice tokens.
    """
    if not questions:
        raise ReportError("cannot score an empty question list")
    results = [answer_question(thesaurus, q) for q in questions]
    score = sum((r.credit for r in results), Fraction(0))
    n = len(questions)
    percent = (Decimal(100) * Decimal(score.numerator)
               / Decimal(score.denominator) / Decimal(n)
               ).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP)
    other_not_found = 0
    for result in results:
        seen = set()
        for ev in result.per_choice:
            seen.update(ev.tokens_not_found)
        other_not_found += len(seen)
    return TestReport(
        question_count=n,
        correct_count=sum(1 for r in results if r.correct),
        questions_with_ties=sum(1 for r in results if r.tie_after_tiebreak),
        score=score,
        percent=percent,
        questions_not_found=sum(1 for r in results if r.unanswerable),
        other_words_not_found=other_not_found,
        results=results,
    )


def _has_noun_reference(thesaurus, text):
    refs = thesaurus.lookup(text)
    if refs:
        return any(r.pos == PartOfSpeech.NOUN for r in refs)
    return any(
        any(r.pos == PartOfSpeech.NOUN for r in thesaurus.lookup(token))
        for token in tokenize_choice(text))


def filter_noun_only(thesaurus, questions):
    """Keep questions whose problem and every choice have a noun reading.

    For phrase choices one non-stop-word token with a noun reference is
    enough.
    """
    return [q for q in questions
            if _has_noun_reference(thesaurus, q.problem)
            and all(_has_noun_reference(thesaurus, c) for c in q.choices)]


def load_questions(source):
    """Parse the TSV question format.

    One question per line: problem, four choices, gold index 0-3 and an
    optional source tag, tab-separated; '#' lines are comments.
    """
    if isinstance(source, str):
        source = source.splitlines()
    questions = []
    for line_no, raw in enumerate(source, start=1):
        line = raw.rstrip("\n").rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) not in (6, 7):
            raise ParseError(
                "expected 6 or 7 tab-separated fields, got %d" % len(fields),
                line=line_no)
        try:
            gold = int(fields[5])
        except ValueError:
            raise ParseError("gold index %r is not an integer" % fields[5],
                             line=line_no, column=6)
        try:
            question = SynonymQuestion(
                problem=fields[0].strip(),
                choices=[f.strip() for f in fields[1:5]],
                gold_index=gold,
                source_tag=fields[6].strip() if len(fields) == 7 else "")
        except ValueError as exc:
            raise ParseError(str(exc), line=line_no)
        questions.append(question)
    return questions
