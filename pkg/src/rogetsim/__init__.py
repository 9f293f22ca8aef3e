"""rogetsim: edge-counting semantic similarity over a Roget-style thesaurus.

The package loads a 9-level thesaurus taxonomy from a line-oriented
interchange format, measures semantic distance as edges on the shortest
tree path between word references, converts it to a 0-16 similarity
score, answers four-choice synonym questions and correlates similarity
scores with human judgment benchmarks.
"""

from .bench import (OutlierRow, PairReport, PairRow, PairScale, ScoredPair,
                    evaluate_pairs, load_pairs, outlier_report, pearson)
from .errors import (CorrelationUndefinedError, GutenbergImportError,
                     InvalidNodeError, InvalidReferenceError, ParseError,
                     ReportError, RogetError, WordNotFoundError)
from .gutenberg import ConversionReport, import_gutenberg_1911
from .interchange import (StructureReport, build_index, load, normalize,
                          parse_interchange, serialize, structure_signature,
                          validate_structure)
from .similarity import (SimilarityTier, WordDistanceResult,
                         enumerate_shortest_paths, path_headers, similarity,
                         similarity_tier, word_min_distance)
from .solver import (ChoiceEvaluation, QuestionResult, SynonymQuestion,
                     TestReport, answer_question, evaluate_choice,
                     filter_noun_only, load_questions, score_test,
                     tokenize_choice)
from .taxonomy import (MAX_DISTANCE, Level, PartOfSpeech, Reference,
                       TaxonomyNode, Thesaurus)

__version__ = "0.1.0"
