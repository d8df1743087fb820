#
# This file is part of quantale-tools.
#
"""
Bundled theorem suites: each one checks a family of claims about the derived quantaloids and the
structures they enrich, exhaustively, on one finite quantale.

A suite's checker fills a ValidationReport. Claims whose hypotheses hold are recorded as
violations when they fail; outcomes outside those hypotheses are only recorded as facts.
"""

import logging
import itertools
import unittest

from dataclasses import dataclass

from .search                 import DEFAULT_BUDGET, iso_search
from ..categories.quantaloid import (build_DQ, build_HQ, build_BQ, build_KQ, diagonals, back_diagonals,
                                     diamond, diamond_alternative, bullet, bullet_alternative,
                                     endo_quantale, validate_involution, validate_quantaloid)
from ..categories.enriched   import (QCategory, check_dissimilarity, check_similarity, is_boolean,
                                     is_symmetric, validate_category)
from ..categories.functors   import (are_mutually_inverse, grade_functor, linear_negation_functors,
                                     neg_functors_divisible, neg_homomorphisms_frame)
from ..types                 import Scope, ValidationReport, Verdict
from ..types.quantale        import (Quantale, dual_quantale, find_quantale_isomorphism, is_cyclic,
                                     is_dualizing, is_hermitian, nucleus_quotient, regular_elements)
from ..zoo.chains            import identity_involution
from ..errors                import BudgetExceeded, NotCyclic, NotDualizing, QuantaleError, TooLarge


logger = logging.getLogger(__name__)


@dataclass
class TheoremSuite:
    """ The outcome of running one suite on one quantale.

    A failing verdict always comes with witnesses; matrix witnesses are shrunk by point deletion.
    """

    id:         str
    quantale:   str
    verdict:    Verdict
    report:     ValidationReport
    applicable: bool = True

    @property
    def witnesses(self):
        return self.report.violations


def default_max_carrier(quantale):
    """ Returns the largest carrier on which matrices are enumerated, given the size of the quantale. """
    if quantale.n <= 4:
        return 3
    if quantale.n <= 16:
        return 2
    return 1


def with_identity_involution(quantale):
    """ Equips a commutative quantale without an involution with the identity one. """
    Q = quantale

    if Q.is_involutive or not Q.profile.commutative:
        return Q

    return Quantale(Q.lattice, Q.tensor, Q.unit, identity_involution(Q.n), name=Q.name,
        embedding=Q.embedding, residuals=(Q.ldd_table, Q.rdd_table), validate=False)


def symmetric_matrices(quantale, size, diagonal=None):
    """ Yields every matrix on size points with α(y,x) = α(x,y)°.

    Parameters:
        diagonal -- The values allowed on the diagonal; every hermitian element by default.
    """
    Q = quantale
    diagonal = [q for q in Q.elements() if is_hermitian(Q, q)] if diagonal is None else list(diagonal)
    above = [(x, y) for x in range(size) for y in range(x + 1, size)]

    for values in itertools.product(diagonal, repeat=size):
        for entries in itertools.product(Q.elements(), repeat=len(above)):
            matrix = [[None] * size for _ in range(size)]

            for x, value in enumerate(values):
                matrix[x][x] = value
            for (x, y), value in zip(above, entries):
                matrix[x][y] = value
                matrix[y][x] = Q.conjugate(value)

            yield tuple(tuple(row) for row in matrix)


def carrier_of(size):
    return tuple(f"x{i}" for i in range(size))


def shrink_matrix(matrix, fails):
    """ Removes points from a failing matrix for as long as it keeps failing.

    Parameters:
        fails -- A predicate on (carrier, matrix), true while the failure persists.
    """
    points = list(range(len(matrix)))

    shrinking = True
    while shrinking and len(points) > 1:
        shrinking = False

        for dropped in points:
            kept = [x for x in points if x != dropped]
            smaller = tuple(tuple(matrix[x][y] for y in kept) for x in kept)

            if fails(carrier_of(len(kept)), smaller):
                points, shrinking = kept, True
                break

    kept = tuple(tuple(matrix[x][y] for y in points) for x in points)
    return carrier_of(len(points)), kept


def _record_mismatch(report, axiom, matrix, fails):
    carrier, shrunk = shrink_matrix(matrix, fails)
    report.add(axiom, *shrunk, detail=f"on {len(carrier)} points")


def _not_applicable(report, reason):
    report.facts['applicable'] = False
    report.facts['reason'] = reason
    return report


def _observed_only(Q):
    """ Claims about every q are only made for commutative quantales; else they're recorded as facts. """
    return not Q.profile.commutative


def lemma_diagonal_props(Q, options):
    """ Diagonals: ⊥ and identities are diagonals, diagonals are closed under joins and composition,
    and the involution lifts.
    """
    report = ValidationReport("lemma-diagonal-props")

    for p, q in itertools.product(Q.elements(), repeat=2):
        hom = diagonals(Q, p, q)
        report.require(Q.bottom in hom, "bottom-is-diagonal", p, q)

        for d, e in itertools.combinations(hom.elements(), 2):
            report.require(Q.join(d, e) in hom, "join-closed", p, q, d, e)

    for q in Q.elements():
        report.require(q in diagonals(Q, q, q), "identity-is-diagonal", q)

    for p, q, r in itertools.product(Q.elements(), repeat=3):
        target = diagonals(Q, p, r)
        for d, e in itertools.product(diagonals(Q, p, q).elements(), diagonals(Q, q, r).elements()):
            report.require(diamond(Q, q, d, e) in target, "composite-is-diagonal", p, q, r, d, e)

    if Q.is_involutive:
        report.merge(validate_involution(build_DQ(Q)), prefix="involution")

    return report


def lemma_backdiagonal_props(Q, options):
    """ Back diagonals: ⊤ and identities are back diagonals, they are closed under meets and
    composition, the involution lifts, and the endo hom-set at r is made of the r-regular elements.
    """
    report = ValidationReport("lemma-backdiagonal-props")

    for p, q in itertools.product(Q.elements(), repeat=2):
        hom = back_diagonals(Q, p, q)
        report.require(Q.top in hom, "top-is-back-diagonal", p, q)

        for b, c in itertools.combinations(hom.elements(), 2):
            report.require(Q.meet(b, c) in hom, "meet-closed", p, q, b, c)

    for q in Q.elements():
        report.require(q in back_diagonals(Q, q, q), "identity-is-back-diagonal", q)
        report.require(set(back_diagonals(Q, q, q)) == set(regular_elements(Q, q)), "endo-regular", q)

    for p, q, r in itertools.product(Q.elements(), repeat=3):
        target = back_diagonals(Q, p, r)
        for b, c in itertools.product(back_diagonals(Q, p, q).elements(), back_diagonals(Q, q, r).elements()):
            report.require(bullet(Q, q, b, c) in target, "composite-is-back-diagonal", p, q, r, b, c)

    if Q.is_involutive:
        report.merge(validate_involution(build_BQ(Q)), prefix="involution")

    return report


def composition_agreement(Q, options):
    """ Both expressions of each composition agree; D(Q) and B(Q) satisfy every quantaloid law, and
    H(Q) and K(Q) are closed under them.
    """
    report = ValidationReport("composition-agreement")
    D, B = build_DQ(Q), build_BQ(Q)

    for p, q, r in itertools.product(Q.elements(), repeat=3):
        for d, e in itertools.product(D.arrows(p, q), D.arrows(q, r)):
            report.require(diamond(Q, q, d, e) == diamond_alternative(Q, q, d, e), "diamond-forms", q, d, e)

        for b, c in itertools.product(B.arrows(p, q), B.arrows(q, r)):
            report.require(bullet(Q, q, b, c) == bullet_alternative(Q, q, b, c), "bullet-forms", q, b, c)

    report.merge(validate_quantaloid(D), prefix="D")
    report.merge(validate_quantaloid(B), prefix="B")

    # Restrictions inherit every law but closure.
    report.merge(validate_quantaloid(build_HQ(Q), associativity=False, distributivity=False), prefix="H")
    report.merge(validate_quantaloid(build_KQ(Q), associativity=False, distributivity=False), prefix="K")

    return report


def representation_theorems(Q, options):
    """ On every small symmetric matrix: the similarity axioms hold iff the matrix is a symmetric
    H(Q)-category, and the dissimilarity axioms hold iff it is a symmetric K(Q)-category.
    """
    report = ValidationReport("representation-theorems")

    if not Q.is_involutive:
        return _not_applicable(report, f"{Q.name} has no involution")

    H, K = build_HQ(Q), build_KQ(Q)

    def similarity_mismatch(carrier, matrix):
        category = QCategory.from_matrix(H, carrier, matrix)
        enriched = validate_category(category).ok and is_symmetric(category)
        return check_similarity(Q, carrier, matrix).ok != enriched

    def dissimilarity_mismatch(carrier, matrix):
        category = QCategory.from_matrix(K, carrier, matrix)
        enriched = validate_category(category).ok and is_symmetric(category)
        return check_dissimilarity(Q, carrier, matrix).ok != enriched

    checked = 0
    for size in range(1, options.max_carrier + 1):
        carrier = carrier_of(size)

        for matrix in symmetric_matrices(Q, size):
            checked += 1

            if similarity_mismatch(carrier, matrix):
                _record_mismatch(report, "similarity-iff-H-category", matrix, similarity_mismatch)
            if dissimilarity_mismatch(carrier, matrix):
                _record_mismatch(report, "dissimilarity-iff-K-category", matrix, dissimilarity_mismatch)

    report.facts['matrices'] = checked
    return report


def negation_lemmas(Q, options):
    """ The negation functors: lax on divisible quantales, homomorphisms on frames, and mutually
    inverse isomorphisms (the linear negations) on Girard quantales.
    """
    report = ValidationReport("negation-lemmas")
    profile = Q.profile

    left, right = neg_functors_divisible(Q, check_preconditions=False)
    for functor, axiom in ((left, "divisible-left-lax"), (right, "divisible-right-lax")):
        lax = grade_functor(functor, raise_ill_typed=False).is_lax
        if profile.divisible:
            report.require(lax, axiom)
        report.facts[axiom] = lax

    if profile.divisible and profile.commutative:
        report.require(left.arrow_map == right.arrow_map, "negations-agree")

    if profile.frame:
        for functor, axiom in zip(neg_homomorphisms_frame(Q), ("frame-K-to-H", "frame-H-to-K")):
            report.require(grade_functor(functor).is_homomorphism, axiom)

    if profile.girard:
        m = profile.cyclic_dualizing
        report.facts['dualizing'] = Q.label(m)

        if profile.integral:
            report.require(profile.dualizing_elements == (Q.bottom,), "integral-dualizing-is-bottom",
                *profile.dualizing_elements)

        for extended, name in ((False, "K-H"), (True, "B-D")):
            there, back = linear_negation_functors(Q, m, extended=extended)
            grades = [grade_functor(there), grade_functor(back)]

            report.require(all(grade.is_isomorphism for grade in grades), f"linear-negation-{name}-isomorphism")
            report.require(are_mutually_inverse(there, back), f"linear-negation-{name}-inverse")

            if Q.is_involutive and is_hermitian(Q, m):
                report.require(all(grade.preserves_involution for grade in grades),
                    f"linear-negation-{name}-involution")

    return report


def endo_girard(Q, options):
    """ For every cyclic q, the endo hom-set B(Q)(q,q) is a Girard quantale with dualizing q⧸q. """
    report = ValidationReport("endo-girard")
    B = build_BQ(Q)
    observed = []

    for q in Q.elements():
        if not is_cyclic(Q, q):
            continue

        endo = endo_quantale(B, q)
        m = Q.ldd(q, q)
        girard = m in endo.embedding and is_cyclic(endo, endo.embedding.index(m)) and \
            is_dualizing(endo, endo.embedding.index(m))

        if _observed_only(Q):
            observed.append((Q.label(q), girard))
        else:
            report.require(girard, "endo-girard", q, m)

    if observed:
        report.facts['observed'] = observed
    return report


def nucleus_duality(Q, options):
    """ For every cyclic q, the quotient by ((−)⇘q)⇘q is isomorphic to the dual of B(Q)(q,q). """
    report = ValidationReport("nucleus-duality")
    B = build_BQ(Q)
    observed = []

    for q in Q.elements():
        if not is_cyclic(Q, q):
            continue

        endo = endo_quantale(B, q)
        m = Q.ldd(q, q)

        isomorphic = False
        if m in endo.embedding:
            try:
                dual = dual_quantale(endo, endo.embedding.index(m))
                isomorphic = find_quantale_isomorphism(nucleus_quotient(Q, q), dual) is not None
            except (NotDualizing, NotCyclic):
                pass

        if _observed_only(Q):
            observed.append((Q.label(q), isomorphic))
        else:
            report.require(isomorphic, "nucleus-duality", q)

    if observed:
        report.facts['observed'] = observed
    return report


def mv_d1_d3(Q, options):
    """ Over an MV quantale, D1 and D3 hold together on every symmetric matrix. """
    report = ValidationReport("mv-d1-d3")

    if not Q.profile.mv:
        return _not_applicable(report, f"{Q.name} is not an MV quantale")

    def split(carrier, matrix):
        failed = check_dissimilarity(Q, carrier, matrix).failed_axioms()
        return "D1" in failed, "D3" in failed

    def mismatch(carrier, matrix):
        d1, d3 = split(carrier, matrix)
        return d1 != d3

    for size in range(1, min(options.max_carrier, 2) + 1):
        for matrix in symmetric_matrices(Q, size):
            if mismatch(carrier_of(size), matrix):
                _record_mismatch(report, "d1-iff-d3", matrix, mismatch)

    # Without symmetry the equivalence may fail; disagreements are only counted.
    if Q.n <= 8:
        disagreements = sum(
            mismatch(carrier_of(2), (cells[:2], cells[2:]))
            for cells in itertools.product(Q.elements(), repeat=4)
        )
        report.facts['asymmetric-disagreements'] = disagreements

    return report


def converse_iso(Q, options):
    """ D(Q) ≅ B(Q) iff Q is Girard, for commutative Q; H(Q) ≅ K(Q) iff Q is Girard, for commutative
    integral Q. Girard quantales must always yield both isomorphisms.
    """
    report = ValidationReport("converse-iso")
    profile = Q.profile

    searches = (
        ("D-B", build_DQ, build_BQ, profile.commutative),
        ("H-K", build_HQ, build_KQ, profile.commutative and profile.integral),
    )

    for name, first, second, converse in searches:
        try:
            result = iso_search(first(Q), second(Q), budget=options.budget)
        except BudgetExceeded:
            logger.warning("%s: %s search ran out of budget", Q.name, name)
            report.facts[f"{name}-isomorphic"] = "budget-exceeded"
            report.scope = Scope.SAMPLED
            continue

        report.facts[f"{name}-isomorphic"] = result.found
        report.facts[f"{name}-nodes"] = result.nodes

        if profile.girard:
            report.require(result.found, f"{name}-girard-isomorphic")
        elif converse:
            report.require(not result.found, f"{name}-isomorphic-only-if-girard")

    return report


def rigid_boolean(Q, options):
    """ Over a Boolean algebra, a rigid dissimilarity satisfies D4 iff β(x,z) ≤ β(x,y) ∨ β(y,z);
    and K(Q)(⊥,⊥) is an integral quantale made of the regular elements.
    """
    report = ValidationReport("rigid-boolean")

    if not is_boolean(Q):
        return _not_applicable(report, f"{Q.name} is not a Boolean algebra")

    def mismatch(carrier, matrix):
        d4 = "D4" not in check_dissimilarity(Q, carrier, matrix).failed_axioms()
        points = range(len(carrier))
        triangle = all(Q.le(matrix[x][z], Q.join(matrix[x][y], matrix[y][z]))
            for x, y, z in itertools.product(points, repeat=3))
        return d4 != triangle

    for size in range(1, options.max_carrier + 1):
        for matrix in symmetric_matrices(Q, size, diagonal=[Q.bottom]):
            if mismatch(carrier_of(size), matrix):
                _record_mismatch(report, "rigid-d4-iff-triangle", matrix, mismatch)

    endo = endo_quantale(build_KQ(Q), Q.bottom)
    report.require(endo.profile.integral, "endo-integral")
    report.require(set(endo.embedding) == set(regular_elements(Q)), "endo-regular")

    return report


# Every bundled suite, by id.
SUITES = {
    'lemma-diagonal-props':     lemma_diagonal_props,
    'lemma-backdiagonal-props': lemma_backdiagonal_props,
    'composition-agreement':    composition_agreement,
    'representation-theorems':  representation_theorems,
    'negation-lemmas':          negation_lemmas,
    'endo-girard':              endo_girard,
    'nucleus-duality':          nucleus_duality,
    'mv-d1-d3':                 mv_d1_d3,
    'converse-iso':             converse_iso,
    'rigid-boolean':            rigid_boolean,
}


@dataclass
class SuiteOptions:
    max_carrier: int
    budget:      int


def run_suite(name, quantale, max_carrier=None, budget=DEFAULT_BUDGET):
    """ Runs one bundled suite on a finite quantale.

    Parameters:
        name        -- The suite id; see SUITES.
        max_carrier -- The largest carrier on which matrices are enumerated; chosen from the size of
                       the quantale by default.
        budget      -- The node budget of every isomorphism search.

    Raises TooLarge on a quantale without finite carrier.
    """
    if name not in SUITES:
        raise QuantaleError(f"unknown suite {name!r}; expected one of: {', '.join(sorted(SUITES))}")
    if not quantale.exhaustive:
        raise TooLarge(f"suites need a finite quantale; {quantale.name} is not")

    Q = with_identity_involution(quantale)
    options = SuiteOptions(max_carrier or default_max_carrier(Q), budget)

    report = SUITES[name](Q, options)
    suite = TheoremSuite(name, Q.name, report.verdict, report, report.facts.get('applicable', True))

    logger.info("suite %s on %s: %s", name, Q.name, suite.verdict.value)
    return suite


def run_all_suites(quantale, **options):
    """ Runs every bundled suite, in order of suite id. """
    return [run_suite(name, quantale, **options) for name in sorted(SUITES)]


class SuiteTest(unittest.TestCase):

    def setUp(self):
        from ..zoo import quantale_by_name

        self.godel3 = quantale_by_name("godel:3")
        self.luk4   = quantale_by_name("lukasiewicz:4")
        self.c3     = quantale_by_name("c3")


    def assertPasses(self, suite):
        self.assertIs(suite.verdict, Verdict.PASS, msg=suite.report.violations[:3])


    def test_lemmas_on_small_zoo(self):
        from ..zoo import standard_zoo

        for Q in standard_zoo(6):
            for name in ('lemma-diagonal-props', 'lemma-backdiagonal-props', 'composition-agreement'):
                with self.subTest(quantale=Q.name, suite=name):
                    self.assertPasses(run_suite(name, Q))


    def test_composition_agreement_on_relations(self):
        from ..zoo import quantale_by_name
        self.assertPasses(run_suite('composition-agreement', quantale_by_name("rel:2")))


    def test_representation_theorems(self):
        from ..zoo import quantale_by_name

        for Q in (self.godel3, self.luk4, self.c3, quantale_by_name("boolean:2")):
            with self.subTest(quantale=Q.name):
                suite = run_suite('representation-theorems', Q, max_carrier=3)

                self.assertPasses(suite)
                self.assertGreater(suite.report.facts['matrices'], 0)


    def test_endo_girard(self):
        from ..zoo import standard_zoo

        for Q in standard_zoo(6):
            if Q.profile.commutative:
                with self.subTest(quantale=Q.name):
                    self.assertPasses(run_suite('endo-girard', Q))
                    self.assertPasses(run_suite('nucleus-duality', Q))


    def test_broken_quotients_are_not_mistaken_for_non_isomorphism(self):
        from unittest import mock
        from ..errors import NotAQuantale

        broken = NotAQuantale("nucleus law idempotent fails")
        with mock.patch(f"{__name__}.nucleus_quotient", side_effect=broken):
            with self.assertRaises(NotAQuantale):
                run_suite('nucleus-duality', self.luk4)


    def test_negation_lemmas_hold_on_c3_without_divisibility(self):
        suite = run_suite('negation-lemmas', self.c3)

        self.assertFalse(self.c3.profile.divisible)
        self.assertPasses(suite)
        self.assertIn('divisible-left-lax', suite.report.facts)


    def test_negation_lemmas(self):
        from ..zoo import quantale_by_name

        names = ["lukasiewicz:5", "nilmin:4", "boolean:2", "boolean:3", "sierpinski"]
        names += [f"godel:{size}" for size in range(3, 7)]

        for name in names:
            with self.subTest(quantale=name):
                self.assertPasses(run_suite('negation-lemmas', quantale_by_name(name)))


    def test_mv_d1_d3(self):
        self.assertPasses(run_suite('mv-d1-d3', self.luk4))

        suite = run_suite('mv-d1-d3', self.godel3)
        self.assertFalse(suite.applicable)
        self.assertIs(suite.verdict, Verdict.PASS)


    def test_converse_iso(self):
        suite = run_suite('converse-iso', self.godel3)
        self.assertPasses(suite)
        self.assertFalse(suite.report.facts['D-B-isomorphic'])

        suite = run_suite('converse-iso', self.luk4)
        self.assertPasses(suite)
        self.assertTrue(suite.report.facts['D-B-isomorphic'])
        self.assertTrue(suite.report.facts['H-K-isomorphic'])


    def test_budget_exhaustion_is_inconclusive(self):
        suite = run_suite('converse-iso', self.luk4, budget=1)

        self.assertIs(suite.verdict, Verdict.SAMPLED)
        self.assertEqual(suite.report.facts['D-B-isomorphic'], "budget-exceeded")


    def test_rigid_boolean(self):
        from ..zoo import quantale_by_name

        self.assertPasses(run_suite('rigid-boolean', quantale_by_name("boolean:2")))
        self.assertFalse(run_suite('rigid-boolean', self.godel3).applicable)


    def test_enumerated_quantales_gain_an_involution(self):
        from .enumerate import enumerate_small_quantales

        for Q in enumerate_small_quantales(3):
            with self.subTest(quantale=Q.name):
                self.assertPasses(run_suite('representation-theorems', Q, max_carrier=2))


    def test_shrinking(self):
        top = self.godel3.top
        matrix = ((0, 0, 0), (0, top, 0), (0, 0, 0))

        def fails(carrier, matrix):
            return any(matrix[x][x] == top for x in range(len(carrier)))

        carrier, shrunk = shrink_matrix(matrix, fails)
        self.assertEqual(carrier, ("x0",))
        self.assertEqual(shrunk, ((top,),))


    def test_symmetric_matrices(self):
        count = sum(1 for _ in symmetric_matrices(self.godel3, 2))
        self.assertEqual(count, 3 * 3 * 3)


    def test_errors(self):
        from ..zoo import quantale_by_name

        with self.assertRaises(QuantaleError):
            run_suite('no-such-suite', self.godel3)
        with self.assertRaises(TooLarge):
            run_suite('endo-girard', quantale_by_name("lawvere"))


if __name__ == "__main__":
    unittest.main()
