#
# This file is part of quantale-tools.
#
"""
Command-line entry point: loads quantales and matrices, runs validators, suites and searches, and
prints a report.

Exit codes: 0 when no verdict failed, 1 when some verdict failed, 2 when the input could not be
read or the command line was malformed.
"""

import io
import os
import sys
import json
import time
import logging
import argparse
import tempfile
import unittest

from .types               import QuantaloidKind, SimilarityMode, ValidationReport, Verdict
from .types.quantale      import validate_quantale
from .types.analytic      import check_sampled_laws
from .types.text          import parse_quantale, parse_matrix
from .types.image         import IMAGE_MAGIC, parse_image
from .categories          import quantaloid, functors
from .categories.enriched import check_apartness, check_dissimilarity, check_similarity
from .harness.search      import DEFAULT_BUDGET, iso_search
from .harness.suites      import SUITES, run_suite
from .harness.enumerate   import enumerate_small_quantales
from .emitters.image      import emit_quantale_image
from .emitters.report     import Report, ReportEntry, input_digest, render
from .zoo                 import quantale_by_name
from .zoo.intervals       import interval_dissimilarity, interval_similarity, sample_intervals, sample_lawvere
from .errors              import BudgetExceeded, QuantaleError, QuantaleFileError


logger = logging.getLogger(__name__)


EXIT_USAGE = 2


def load_quantale(source):
    """ Resolves a quantale from a builtin name, a quantale text file, or a binary image.

    Returns a tuple (quantale, digest of the input).
    """
    if not os.path.exists(source):
        return quantale_by_name(source), input_digest(source)

    with open(source, "rb") as f:
        data = f.read()

    name = os.path.splitext(os.path.basename(source))[0]

    if data.startswith(IMAGE_MAGIC):
        quantale = parse_image(data)
    else:
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError:
            raise QuantaleFileError(f"{source} is neither text nor a quantale image")
        quantale = parse_quantale(text, name=name)

    logger.info("loaded %s from %s", quantale.name, source)
    return quantale, input_digest(data)


def _profile_entry(Q):
    profile = Q.profile
    facts = profile.flags()

    if Q.exhaustive:
        facts['dualizing'] = [Q.label(m) for m in profile.dualizing_elements]
    if profile.cyclic_dualizing is not None:
        facts['m'] = Q.label(profile.cyclic_dualizing)

    lines = []
    if Q.exhaustive:
        lines.append("elements: " + " ".join(Q.label(a) for a in Q.elements()))
        lines.append(f"unit: {Q.label(Q.unit)}")

    return ReportEntry("profile", Verdict.PASS, facts=facts, lines=lines)


def cmd_validate(args):
    Q, digest = load_quantale(args.quantale)
    report = Report("validate", Q.name, digest)

    if Q.exhaustive:
        laws = validate_quantale(Q)
    else:
        laws = check_sampled_laws(Q, sample_lawvere(args.samples, args.seed))

    report.add(ReportEntry.from_validation("quantale", laws))
    report.add(_profile_entry(Q))
    return report, Q.label


def cmd_homs(args):
    Q, digest = load_quantale(args.quantale)
    kind = QuantaloidKind.parse(args.kind)
    K = quantaloid.build_quantaloid(Q, kind)

    try:
        p, q = Q.element(args.source), Q.element(args.target)
    except KeyError as e:
        raise QuantaleFileError(e.args[0])

    hom = K.hom(p, q)
    labels = [Q.label(u) for u in hom]

    report = Report("homs", Q.name, digest)
    report.add(ReportEntry(f"{K.name}({Q.label(p)},{Q.label(q)})", Verdict.PASS,
        facts={'arrows': labels, 'size': len(labels)}, lines=["{" + ", ".join(labels) + "}"]))
    return report, Q.label


def _load_matrix(args):
    with open(args.matrix, "rb") as f:
        data = f.read()

    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise QuantaleFileError(f"{args.matrix} is not a text file: {e.reason} at byte {e.start}")

    matrix_file = parse_matrix(text)
    source = args.quantale or matrix_file.quantale
    if source is None:
        raise QuantaleFileError(f"{args.matrix} names no quantale; pass --quantale")

    Q, _ = load_quantale(source)
    matrix, extent = matrix_file.resolve(Q)
    return Q, matrix_file.carrier, matrix, extent, input_digest(data)


def cmd_check(args):
    if args.kind == 'intervals':
        samples = sample_intervals(args.samples, args.seed)
        report = Report("check", f"intervals:{args.samples}", input_digest(f"intervals:{args.samples}:{args.seed}"))
        report.add(ReportEntry.from_validation("interval-similarity", interval_similarity(samples).check()))
        report.add(ReportEntry.from_validation("interval-dissimilarity", interval_dissimilarity(samples).check()))
        return report, None

    Q, carrier, matrix, extent, digest = _load_matrix(args)
    report = Report("check", f"{args.kind} over {Q.name}", digest)

    if args.kind == 'similarity':
        result = check_similarity(Q, carrier, matrix, SimilarityMode(args.mode))
    elif args.kind == 'dissimilarity':
        result = check_dissimilarity(Q, carrier, matrix)
    else:
        if extent is None:
            raise QuantaleFileError(f"{args.matrix} has no EXTENT section, which apartness needs")
        result = check_apartness(Q, carrier, extent, matrix)

    report.add(ReportEntry.from_validation(args.kind, result))
    return report, Q.label


def cmd_verify(args):
    Q, digest = load_quantale(args.quantale)
    report = Report("verify", Q.name, digest)
    names = sorted(SUITES) if args.suite == 'all' else [args.suite]

    for name in names:
        suite = run_suite(name, Q, max_carrier=args.max_carrier, budget=args.budget)
        entry = report.add(ReportEntry.from_validation(name, suite.report))
        if not suite.applicable:
            entry.lines.append("not applicable")

    return report, Q.label


ISO_PAIRS = {
    'D-B': (QuantaloidKind.D, QuantaloidKind.B),
    'H-K': (QuantaloidKind.H, QuantaloidKind.K),
}


def cmd_search_iso(args):
    Q, digest = load_quantale(args.quantale)
    report = Report("search-iso", Q.name, digest)

    for pair in ([args.pair] if args.pair != 'both' else sorted(ISO_PAIRS)):
        source, target = (quantaloid.build_quantaloid(Q, kind) for kind in ISO_PAIRS[pair])

        try:
            result = iso_search(source, target, budget=args.budget)
        except BudgetExceeded:
            logger.warning("%s search on %s ran out of budget", pair, Q.name)
            report.add(ReportEntry(pair, Verdict.FAIL, facts={'outcome': "budget-exceeded", 'budget': args.budget}))
            continue

        facts = {'outcome': "found" if result.found else "none-exists", 'nodes': result.nodes}
        checks = ValidationReport(pair)

        if result.found:
            grade = functors.grade_functor(result.isomorphism)
            checks.require(grade.is_isomorphism, "isomorphism")

            iso = result.isomorphism
            facts['objects'] = {Q.label(q): Q.label(iso(q)) for q in source.objects}

        checks.facts.update(facts)
        report.add(ReportEntry.from_validation(pair, checks))

    return report, Q.label


def _functor_builders(Q):
    return {
        'neg-left':     lambda: functors.neg_functors_divisible(Q, check_preconditions=False)[0],
        'neg-right':    lambda: functors.neg_functors_divisible(Q, check_preconditions=False)[1],
        'neg-frame-KH': lambda: functors.neg_homomorphisms_frame(Q, check_preconditions=False)[0],
        'neg-frame-HK': lambda: functors.neg_homomorphisms_frame(Q, check_preconditions=False)[1],
        'linear-KH':    lambda: functors.linear_negation_functors(Q)[0],
        'linear-HK':    lambda: functors.linear_negation_functors(Q)[1],
        'linear-BD':    lambda: functors.linear_negation_functors(Q, extended=True)[0],
        'linear-DB':    lambda: functors.linear_negation_functors(Q, extended=True)[1],
    }


FUNCTORS = ('neg-left', 'neg-right', 'neg-frame-KH', 'neg-frame-HK', 'linear-KH', 'linear-HK', 'linear-BD', 'linear-DB')
EXPECTATIONS = {
    'lax':          'is_lax',
    'homomorphism': 'is_homomorphism',
    'isomorphism':  'is_isomorphism',
}


def cmd_grade(args):
    Q, digest = load_quantale(args.quantale)
    functor = _functor_builders(Q)[args.functor]()
    grade = functors.grade_functor(functor, raise_ill_typed=False)

    checks = ValidationReport(args.functor)
    checks.facts.update(grade.flags())

    if args.expect:
        flag = EXPECTATIONS[args.expect]
        violation = grade.witnesses.get(flag)
        if violation is not None:
            checks.add(violation.axiom, *violation.witness, detail=f"not {args.expect}")

    report = Report("grade", f"{functor.name} on {Q.name}", digest)
    report.add(ReportEntry.from_validation(args.functor, checks))
    return report, Q.label


def cmd_enumerate(args):
    report = Report("enumerate", f"up to {args.max_size}", input_digest(f"enumerate:{args.max_size}"))

    if args.output:
        os.makedirs(args.output, exist_ok=True)

    for Q in enumerate_small_quantales(args.max_size):
        facts = Q.profile.flags()

        if args.output:
            path = os.path.join(args.output, Q.name.replace(":", "-") + ".qimg")
            with open(path, "wb") as f:
                f.write(emit_quantale_image(Q))
            facts['image'] = os.path.basename(path)

        report.add(ReportEntry(Q.name, Verdict.PASS, facts=facts))

    return report, None


def build_parser():
    parser = argparse.ArgumentParser(prog="quantale-tools",
        description="check quantales, their derived quantaloids, and the structures they enrich")
    parser.add_argument('--format', choices=('text', 'machine'), default='text', help="report format")
    parser.add_argument('--timing', action='store_true', help="include the running time in the report")
    parser.add_argument('-v', '--verbose', action='count', default=0, help="log progress to stderr; repeat for more")

    commands = parser.add_subparsers(dest='command', required=True)

    validate = commands.add_parser('validate', help="validate and classify a quantale")
    validate.add_argument('quantale', help="a builtin name, a quantale file, or a quantale image")
    validate.add_argument('--seed', type=int, default=0, help="seed for sampled checks")
    validate.add_argument('--samples', type=int, default=8, help="number of sampled elements")
    validate.set_defaults(handler=cmd_validate)

    homs = commands.add_parser('homs', help="list a hom-set of a derived quantaloid")
    homs.add_argument('quantale')
    homs.add_argument('kind', choices=[kind.value for kind in QuantaloidKind] + [kind.value.lower() for kind in QuantaloidKind])
    homs.add_argument('source', help="the source object, by label")
    homs.add_argument('target', help="the target object, by label")
    homs.set_defaults(handler=cmd_homs)

    check = commands.add_parser('check', help="check a matrix against the axioms of a relation")
    check.add_argument('kind', choices=('similarity', 'dissimilarity', 'apartness', 'intervals'))
    check.add_argument('matrix', nargs='?', help="a matrix file; not used for intervals")
    check.add_argument('--matrix', dest='matrix_option', metavar='MATRIX', help="the matrix file, given as a flag")
    check.add_argument('--quantale', help="the quantale, if the matrix file doesn't name one")
    check.add_argument('--mode', choices=[mode.value for mode in SimilarityMode], default='full')
    check.add_argument('--seed', type=int, default=0)
    check.add_argument('--samples', type=int, default=8, help="number of sampled intervals")
    check.set_defaults(handler=cmd_check)

    verify = commands.add_parser('verify', help="run a theorem suite")
    verify.add_argument('suite', choices=sorted(SUITES) + ['all'])
    verify.add_argument('quantale')
    verify.add_argument('--max-carrier', type=int, default=None, help="largest carrier for matrix enumeration")
    verify.add_argument('--budget', type=int, default=DEFAULT_BUDGET, help="node budget of isomorphism searches")
    verify.set_defaults(handler=cmd_verify)

    search = commands.add_parser('search-iso', help="search for D(Q) ≅ B(Q) or H(Q) ≅ K(Q)")
    search.add_argument('quantale')
    search.add_argument('--pair', choices=sorted(ISO_PAIRS) + ['both'], default='D-B')
    search.add_argument('--budget', type=int, default=DEFAULT_BUDGET)
    search.set_defaults(handler=cmd_search_iso)

    grade = commands.add_parser('grade', help="grade a negation functor")
    grade.add_argument('functor', choices=FUNCTORS)
    grade.add_argument('quantale')
    grade.add_argument('--expect', choices=sorted(EXPECTATIONS), help="fail unless the functor has this grade")
    grade.set_defaults(handler=cmd_grade)

    enumerate_ = commands.add_parser('enumerate', help="enumerate small quantales up to isomorphism")
    enumerate_.add_argument('max_size', type=int)
    enumerate_.add_argument('--output', help="directory to write a quantale image of each result to")
    enumerate_.set_defaults(handler=cmd_enumerate)

    return parser


def main(argv=None, stdout=None):
    """ Runs the command line; returns the exit code. """
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)

    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    if args.command == 'check':
        if args.matrix and args.matrix_option and args.matrix != args.matrix_option:
            parser.error("check takes one matrix file")
        args.matrix = args.matrix or args.matrix_option

    if args.command == 'check' and args.kind != 'intervals' and args.matrix is None:
        parser.error(f"check {args.kind} needs a matrix file")

    start = time.perf_counter()
    try:
        report, label = args.handler(args)
    except (QuantaleError, OSError) as e:
        print(f"quantale-tools: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if args.timing:
        report.timing = time.perf_counter() - start

    stdout.write(render(report, args.format, label))
    logger.info("%s finished: %s", args.command, report.verdict.value)
    return report.exit_code


class CommandLineTest(unittest.TestCase):

    def run_cli(self, *argv):
        output = io.StringIO()
        code = main(['--format', 'machine', *argv], stdout=output)
        return code, json.loads(output.getvalue()) if output.getvalue() else None


    def test_validate_lukasiewicz(self):
        code, report = self.run_cli('validate', 'lukasiewicz:5')
        profile = report['checks'][1]

        self.assertEqual(code, 0)
        self.assertTrue(profile['facts']['mv'])


    def test_validate_c3(self):
        code, report = self.run_cli('validate', 'c3')
        facts = report['checks'][1]['facts']

        self.assertTrue(facts['girard'])
        self.assertEqual(facts['m'], "k")


    def test_validate_lawvere_is_sampled(self):
        code, report = self.run_cli('validate', 'lawvere', '--samples', '4')

        self.assertEqual(code, 0)
        self.assertEqual(report['checks'][0]['verdict'], "sampled")


    def test_homs(self):
        expected = {
            ('c3', 'K', 'k', 'k'):              ["k", "top"],
            ('c3', 'H', 'top', 'top'):          ["bot", "top"],
            ('boolean:1', 'B', 'bot', 'bot'):   ["{}", "{0}"],
        }

        for argv, arrows in expected.items():
            with self.subTest(argv=argv):
                code, report = self.run_cli('homs', *argv)
                self.assertEqual(code, 0)
                self.assertEqual(report['checks'][0]['facts']['arrows'], arrows)


    def write(self, directory, name, text):
        path = os.path.join(directory, name)
        with open(path, "w") as f:
            f.write(text)
        return path


    def test_check(self):
        with tempfile.TemporaryDirectory() as directory:
            equivalence = self.write(directory, "equivalence.txt",
                "QUANTALE boolean:1\nCARRIER a b c\nMATRIX\n  top top bot\n  top top bot\n  bot bot top\n")
            complement = self.write(directory, "complement.txt",
                "QUANTALE boolean:1\nCARRIER a b c\nMATRIX\n  bot bot top\n  bot bot top\n  top top bot\n")
            asymmetric = self.write(directory, "asymmetric.txt",
                "CARRIER a b\nMATRIX\n  1 1/2\n  0 1\n")

            self.assertEqual(self.run_cli('check', 'similarity', equivalence)[0], 0)
            self.assertEqual(self.run_cli('check', 'dissimilarity', complement)[0], 0)

            code, report = self.run_cli('check', 'similarity', asymmetric, '--quantale', 'godel:3')
            witnesses = report['checks'][0]['witnesses']

            self.assertEqual(code, 1)
            self.assertEqual(witnesses[0]['axiom'], "S2")
            self.assertEqual(witnesses[0]['witness'], ["a", "b"])


    def test_malformed_file_is_a_usage_error(self):
        with tempfile.TemporaryDirectory() as directory:
            path = self.write(directory, "broken.txt", "ELEMENTS bot top\nORDER\n  bot < top\nTENSOR\n  bot\n  bot top\nUNIT top\n")
            self.assertEqual(self.run_cli('validate', path), (EXIT_USAGE, None))


    def test_binary_matrix_file_is_a_usage_error(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "binary.txt")
            with open(path, "wb") as f:
                f.write(b"QUANTALE boolean:1\nCARRIER \xff\xfe\nMATRIX\n  top\n")

            self.assertEqual(self.run_cli('check', 'similarity', path), (EXIT_USAGE, None))


    def test_matrix_given_as_a_flag(self):
        with tempfile.TemporaryDirectory() as directory:
            path = self.write(directory, "identity.txt", "QUANTALE godel:3\nCARRIER a b\nMATRIX\n  1 0\n  0 1\n")

            code, report = self.run_cli('check', 'similarity', '--matrix', path)
            self.assertEqual((code, report['verdict']), (0, "pass"))
            self.assertEqual(self.run_cli('check', 'similarity', path, '--matrix', path)[0], 0)


    def test_unknown_object_is_a_usage_error(self):
        self.assertEqual(self.run_cli('homs', 'c3', 'H', 'k', 'middle'), (EXIT_USAGE, None))


    def test_verify_and_search(self):
        code, report = self.run_cli('verify', 'endo-girard', 'godel:3')
        self.assertEqual((code, report['verdict']), (0, "pass"))

        code, report = self.run_cli('search-iso', 'godel:3')
        self.assertEqual(report['checks'][0]['facts']['outcome'], "none-exists")

        code, report = self.run_cli('search-iso', 'lukasiewicz:4')
        self.assertEqual(report['checks'][0]['facts']['outcome'], "found")
        self.assertEqual(code, 0)


    def test_grade(self):
        code, report = self.run_cli('grade', 'linear-KH', 'c3', '--expect', 'isomorphism')
        self.assertEqual(code, 0)
        self.assertTrue(report['checks'][0]['facts']['is_isomorphism'])


    def test_enumerate_writes_images(self):
        with tempfile.TemporaryDirectory() as directory:
            code, report = self.run_cli('enumerate', '3', '--output', directory)

            self.assertEqual(code, 0)
            self.assertEqual(len(report['checks']), 5)

            image = os.path.join(directory, report['checks'][-1]['facts']['image'])
            code, validated = self.run_cli('validate', image)
            self.assertEqual(validated['checks'][0]['verdict'], "pass")


    def test_reports_are_deterministic(self):
        outputs = []
        for _ in range(2):
            output = io.StringIO()
            main(['verify', 'negation-lemmas', 'c3'], stdout=output)
            outputs.append(output.getvalue())

        self.assertEqual(outputs[0], outputs[1])


if __name__ == "__main__":
    unittest.main()
