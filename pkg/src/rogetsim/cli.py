"""Command-line interface.

Commands: import, validate, distance, sim, paths, solve, bench.  The
thesaurus is given with --thesaurus or the ROGET_THESAURUS environment
variable; there is no implicit default path.

Exit codes: 0 success, 1 lookup/answer-domain failures, 2 input, parse
and IO failures.
"""

import argparse
import os
import sys

from . import bench as bench_mod
from . import solver as solver_mod
from .errors import (CorrelationUndefinedError, GutenbergImportError,
                     ParseError, ReportError, RogetError, WordNotFoundError)
from .gutenberg import import_gutenberg_1911
from .interchange import load, validate_structure
from .similarity import path_headers, similarity_tier, word_min_distance
from .taxonomy import MAX_DISTANCE

ENV_THESAURUS = "ROGET_THESAURUS"

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INPUT = 2


class CommandError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _read_file(path):
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise CommandError("cannot read %s: %s" % (path, exc.strerror),
                           EXIT_INPUT)


def _load_thesaurus(args):
    path = args.thesaurus or os.environ.get(ENV_THESAURUS)
    if not path:
        raise CommandError(
            "no thesaurus given: use --thesaurus or set $%s" % ENV_THESAURUS,
            EXIT_INPUT)
    if not os.path.exists(path):
        raise CommandError("cannot read %s: no such file" % path, EXIT_INPUT)
    try:
        return load(path)
    except ParseError as exc:
        raise CommandError("failed to load %s: %s" % (path, exc), EXIT_INPUT)


def cmd_import(args, out, err):
    text = _read_file(args.source)
    try:
        document, report = import_gutenberg_1911(text)
    except GutenbergImportError as exc:
        raise CommandError("%s: %s" % (args.source, exc), EXIT_INPUT)
    out.write(document)
    for line in report.lines():
        err.write(line + "\n")
    return EXIT_OK


def cmd_validate(args, out, err):
    thesaurus = _load_thesaurus(args)
    report = validate_structure(thesaurus)
    for line in report.lines():
        if args.format == "tsv":
            line = line.replace(": ", "\t", 1)
        out.write(line + "\n")
    return EXIT_OK


def _lookup_pair(thesaurus, w1, w2):
    try:
        return word_min_distance(thesaurus, w1, w2)
    except WordNotFoundError as exc:
        raise CommandError(str(exc), EXIT_DOMAIN)


def cmd_distance(args, out, err):
    thesaurus = _load_thesaurus(args)
    result = _lookup_pair(thesaurus, args.word1, args.word2)
    tier = similarity_tier(MAX_DISTANCE - result.min_distance).value
    if args.format == "tsv":
        out.write("%d\t%d\t%s\n" % (result.min_distance, result.pair_count, tier))
    else:
        out.write("distance(%s, %s) = %d [%d shortest path(s), tier %s]\n"
                  % (args.word1, args.word2, result.min_distance,
                     result.pair_count, tier))
    return EXIT_OK


def cmd_sim(args, out, err):
    thesaurus = _load_thesaurus(args)
    result = _lookup_pair(thesaurus, args.word1, args.word2)
    value = MAX_DISTANCE - result.min_distance
    tier = similarity_tier(value).value
    if args.format == "tsv":
        out.write("%d\t%d\t%s\n" % (value, result.pair_count, tier))
    else:
        out.write("sim(%s, %s) = %d [distance %d, %d shortest path(s), tier %s]\n"
                  % (args.word1, args.word2, value, result.min_distance,
                     result.pair_count, tier))
    return EXIT_OK


def cmd_paths(args, out, err):
    thesaurus = _load_thesaurus(args)
    try:
        groups = path_headers(thesaurus, args.word1, args.word2)
    except WordNotFoundError as exc:
        raise CommandError(str(exc), EXIT_DOMAIN)
    for header, paths in groups:
        out.write(header + "\n")
        for path in paths:
            out.write("  %s\n" % path)
    return EXIT_OK


def _choice_line(problem, evaluation):
    if not evaluation.found:
        return "%s to %s: not found" % (problem, evaluation.choice_text)
    ref_p, ref_c = evaluation.best_pair
    return "%s %s to %s %s, length = %d, %d path(s) of this length" % (
        problem, ref_p.pos.display, evaluation.choice_text, ref_c.pos.display,
        evaluation.effective_distance, evaluation.pair_count)


def cmd_solve(args, out, err):
    thesaurus = _load_thesaurus(args)
    text = _read_file(args.questions)
    try:
        questions = solver_mod.load_questions(text)
    except ParseError as exc:
        raise CommandError("%s: %s" % (args.questions, exc), EXIT_INPUT)
    if args.nouns_only:
        questions = solver_mod.filter_noun_only(thesaurus, questions)
    try:
        report = solver_mod.score_test(thesaurus, questions)
    except ReportError as exc:
        raise CommandError(str(exc), EXIT_DOMAIN)
    tsv = args.format == "tsv"
    for result in report.results:
        q = result.question
        if tsv:
            chosen = "" if result.unanswerable else q.choices[result.chosen_index]
            out.write("%s\t%s\t%s\t%s\n" % (
                q.problem, chosen, result.verdict,
                solver_mod.format_number(result.credit)))
            continue
        if result.unanswerable:
            out.write("Roget cannot find %s: NOT-FOUND\n" % q.problem)
            continue
        for evaluation in result.per_choice:
            out.write("%s\n" % _choice_line(q.problem, evaluation))
        out.write("→ Roget thinks that %s means %s: %s\n"
                  % (q.problem, q.choices[result.chosen_index], result.verdict))
    if tsv:
        for line in report.summary_lines():
            out.write(line.replace(": ", "\t", 1) + "\n")
    else:
        out.write("\n")
        for line in report.summary_lines():
            out.write(line + "\n")
    return EXIT_OK


def cmd_bench(args, out, err):
    thesaurus = _load_thesaurus(args)
    text = _read_file(args.pairs)
    try:
        scale, pairs = bench_mod.load_pairs(text)
    except ParseError as exc:
        raise CommandError("%s: %s" % (args.pairs, exc), EXIT_INPUT)
    try:
        report = bench_mod.evaluate_pairs(thesaurus, pairs, scale,
                                          policy=args.policy)
    except CorrelationUndefinedError as exc:
        raise CommandError("correlation undefined: %s" % exc, EXIT_DOMAIN)
    for line in report.tsv_lines():
        out.write(line + "\n")
    if report.pairs_skipped:
        err.write("pairs skipped as not found: %d\n" % report.pairs_skipped)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="roget",
        description="Edge-counting semantic similarity over a Roget-style "
                    "thesaurus.")
    parser.add_argument("--thesaurus", metavar="PATH",
                        help="interchange file (default: $%s)" % ENV_THESAURUS)
    parser.add_argument("--format", choices=["text", "tsv"], default="text",
                        help="output format (default: text)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("import", help="convert a 1911 Roget's text to "
                                      "interchange format")
    p.add_argument("source", help="path to the plain-text source")
    p.add_argument("--source-format", choices=["gutenberg1911"],
                   default="gutenberg1911")
    p.set_defaults(func=cmd_import)

    p = sub.add_parser("validate", help="report structure counts and "
                                        "invariant violations")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("distance", help="minimum edge distance between "
                                        "two words")
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("sim", help="semantic similarity (16 - distance)")
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=cmd_sim)

    p = sub.add_parser("paths", help="show all shortest paths between "
                                     "two words")
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("solve", help="answer a four-choice synonym "
                                     "question file")
    p.add_argument("questions", help="TSV question file")
    p.add_argument("--nouns-only", action="store_true",
                   help="keep only questions where every word has a noun "
                        "reading")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="evaluate a human-scored pair file")
    p.add_argument("pairs", help="TSV pair file with a scale header")
    p.add_argument("--policy", choices=["skip", "zero"], default="skip",
                   help="handling of pairs with missing words")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None, out=None, err=None):
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out, err)
    except CommandError as exc:
        err.write("error: %s\n" % exc)
        return exc.code
    except RogetError as exc:
        err.write("error: %s\n" % exc)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
