#
# This file is part of quantale-tools.
#
"""
Lax functors between the derived quantaloids: the negation functors, linear negation, and the
transport of enriched categories along them.

Functors are kept extensionally, as an object map and one arrow map per hom-set, even when they
are defined by a formula; grading treats both kinds alike.
"""

import logging
import itertools
import unittest

from dataclasses import dataclass, field

from .enriched        import QCategory
from .quantaloid      import build_quantaloid
from ..types          import QuantaloidKind, ValidationReport
from ..types.quantale import is_hermitian, require_cyclic_dualizing
from ..errors         import IllTyped, NotAFrame, NotDivisible, NotDualizing, NotLax


logger = logging.getLogger(__name__)


class LaxFunctor:
    """ A candidate functor between two small quantaloids.

    Parameters:
        source, target -- SmallQuantaloids.
        object_map     -- A dictionary sending each source object to a target object.
        arrow_map      -- A dictionary sending each pair of source objects (p, q) to a dictionary
                          sending each arrow p → q to its image.
        name           -- A display name.
    """

    def __init__(self, source, target, object_map, arrow_map, name=None):
        self.source     = source
        self.target     = target
        self.object_map = dict(object_map)
        self.arrow_map  = {pair: dict(values) for pair, values in arrow_map.items()}
        self.name       = name or f"{source.name} → {target.name}"


    @classmethod
    def from_formula(cls, source, target, on_objects, on_arrows, name=None):
        """ Tabulates a functor given by a formula on objects and a formula on arrow values. """
        object_map = {q: on_objects(q) for q in source.objects}
        arrow_map = {
            (p, q): {u: on_arrows(u) for u in source.arrows(p, q)}
            for p, q in itertools.product(source.objects, repeat=2)
        }
        return cls(source, target, object_map, arrow_map, name)


    def __call__(self, q):
        return self.object_map[q]


    def apply(self, p, q, u):
        """ Returns the image of the arrow u: p → q. """
        return self.arrow_map[p, q][u]


    def __repr__(self):
        return f"<LaxFunctor {self.name}>"


# Axioms whose failure, in order, costs a functor each of its grades.
LAX_AXIOMS          = ('typing', 'monotone', 'lax-composition', 'lax-unit')
HOMOMORPHISM_AXIOMS = LAX_AXIOMS + ('composition', 'unit', 'joins', 'bottom')
ISOMORPHISM_AXIOMS  = HOMOMORPHISM_AXIOMS + ('bijective-objects', 'bijective-arrows')
INVOLUTION_AXIOMS   = ('involution-objects', 'involution-arrows', 'involution-missing')


@dataclass
class FunctorGrade:
    """ How much structure a functor preserves; each false flag comes with a witness. """

    FLAGS = ('is_lax', 'is_homomorphism', 'is_isomorphism', 'preserves_involution')

    is_lax:               bool
    is_homomorphism:      bool
    is_isomorphism:       bool
    preserves_involution: bool
    witnesses: dict             = field(default_factory=dict)
    report:    ValidationReport = None

    def flags(self):
        return {name: getattr(self, name) for name in self.FLAGS}


def _first_failure(report, axioms):
    for axiom in axioms:
        violation = report.first(axiom)
        if violation is not None:
            return violation
    return None


def grade_functor(functor, raise_ill_typed=True):
    """ Decides exhaustively whether a functor is lax, a homomorphism, an isomorphism, and whether it
    preserves the involutions. Monotonicity, joins and bottoms are judged in each hom's local order.

    Parameters:
        raise_ill_typed -- If true, an arrow image outside its target hom-set raises IllTyped;
                           otherwise it is reported as a 'typing' failure.
    """
    F, S, T = functor, functor.source, functor.target
    report = ValidationReport("functor")
    objects = S.objects

    for p, q in itertools.product(objects, repeat=2):
        arrows = S.arrows(p, q)

        for u in arrows:
            if not T.contains(F(p), F(q), F.apply(p, q, u)):
                if raise_ill_typed:
                    raise IllTyped(f"{F.name} sends an arrow {S.label(p)} → {S.label(q)} outside "
                        f"its target hom-set", witness=(p, q, u, F.apply(p, q, u)))
                report.add("typing", p, q, u)

        for u, v in itertools.product(arrows, repeat=2):
            if S.local_le(u, v):
                report.require(T.local_le(F.apply(p, q, u), F.apply(p, q, v)), "monotone", p, q, u, v)

        for u, v in itertools.combinations(arrows, 2):
            report.require(F.apply(p, q, S.local_join(u, v)) ==
                T.local_join(F.apply(p, q, u), F.apply(p, q, v)), "joins", p, q, u, v)

        report.require(F.apply(p, q, S.local_bottom()) == T.local_bottom(), "bottom", p, q)

    for q in objects:
        image, unit = T.identity(F(q)), F.apply(q, q, S.identity(q))
        report.require(T.local_le(image, unit), "lax-unit", q)
        report.require(image == unit, "unit", q)

    for p, q, r in itertools.product(objects, repeat=3):
        for u, v in itertools.product(S.arrows(p, q), S.arrows(q, r)):
            composite = T.compose(F.apply(p, q, u), F.apply(q, r, v), F(q))
            image = F.apply(p, r, S.compose(u, v, q))

            report.require(T.local_le(composite, image), "lax-composition", p, q, r, u, v)
            report.require(composite == image, "composition", p, q, r, u, v)

    _check_bijective(F, report)
    _check_involution(F, report)

    grade = FunctorGrade(
        is_lax=_first_failure(report, LAX_AXIOMS) is None,
        is_homomorphism=_first_failure(report, HOMOMORPHISM_AXIOMS) is None,
        is_isomorphism=_first_failure(report, ISOMORPHISM_AXIOMS) is None,
        preserves_involution=_first_failure(report, INVOLUTION_AXIOMS) is None,
        report=report,
    )

    for flag, axioms in zip(FunctorGrade.FLAGS,
            (LAX_AXIOMS, HOMOMORPHISM_AXIOMS, ISOMORPHISM_AXIOMS, INVOLUTION_AXIOMS)):
        violation = _first_failure(report, axioms)
        if violation is not None:
            grade.witnesses[flag] = violation

    logger.debug("graded %s: %s", F.name, grade.flags())
    return grade


def _check_bijective(functor, report):
    F, S, T = functor, functor.source, functor.target

    images = [F(q) for q in S.objects]
    report.require(sorted(images) == sorted(T.objects), "bijective-objects", *images)

    for p, q in itertools.product(S.objects, repeat=2):
        mapped = sorted(F.apply(p, q, u) for u in S.arrows(p, q))
        report.require(mapped == sorted(T.arrows(F(p), F(q))), "bijective-arrows", p, q)


def _check_involution(functor, report):
    F, S, T = functor, functor.source, functor.target

    if not (S.base.is_involutive and T.base.is_involutive):
        report.add("involution-missing")
        return

    for q in S.objects:
        report.require(F(S.conjugate(q)) == T.conjugate(F(q)), "involution-objects", q)

    for p, q in itertools.product(S.objects, repeat=2):
        for u in S.arrows(p, q):
            image = F.apply(S.conjugate(q), S.conjugate(p), S.conjugate(u))
            report.require(image == T.conjugate(F.apply(p, q, u)), "involution-arrows", p, q, u)


def compose_functors(first, second):
    """ Returns the functor applying first, then second. """
    F, G = first, second
    object_map = {q: G(F(q)) for q in F.source.objects}
    arrow_map = {
        (p, q): {u: G.apply(F(p), F(q), v) for u, v in values.items()}
        for (p, q), values in F.arrow_map.items()
    }
    return LaxFunctor(F.source, G.target, object_map, arrow_map, name=f"{G.name} ∘ {F.name}")


def is_identity_functor(functor):
    """ Returns true iff a functor fixes every object and every arrow. """
    F = functor
    return (F.source.kind is F.target.kind and
        all(F(q) == q for q in F.source.objects) and
        all(v == u for values in F.arrow_map.values() for u, v in values.items()))


def are_mutually_inverse(first, second):
    return (is_identity_functor(compose_functors(first, second)) and
        is_identity_functor(compose_functors(second, first)))


def _negation_functor(source, target, negate, name):
    return LaxFunctor.from_formula(source, target, negate, negate, name)


def neg_functors_divisible(quantale, check_preconditions=True):
    """ Returns the left and right negation functors ¬_l, ¬_r from K(Q) to H(Q).

    Raises NotDivisible on a non-divisible quantale, unless check_preconditions is false, in which
    case the candidate functors are built anyway for grading.
    """
    Q = quantale

    if check_preconditions and not Q.profile.divisible:
        raise NotDivisible(f"{Q.name} is not divisible", witness=Q.profile.witnesses.get('divisible'))

    K = build_quantaloid(Q, QuantaloidKind.K)
    H = build_quantaloid(Q, QuantaloidKind.H)

    left  = _negation_functor(K, H, lambda a: Q.ldd(Q.bottom, a), "¬l")
    right = _negation_functor(K, H, lambda a: Q.rdd(a, Q.bottom), "¬r")
    return left, right


def neg_homomorphisms_frame(quantale, check_preconditions=True):
    """ Returns the negation homomorphisms ¬: K(Q) → H(Q) and ¬: H(Q) → K(Q) of a frame. """
    Q = quantale

    if check_preconditions and not Q.profile.frame:
        raise NotAFrame(f"{Q.name} is not a frame", witness=Q.profile.witnesses.get('frame'))

    K = build_quantaloid(Q, QuantaloidKind.K)
    H = build_quantaloid(Q, QuantaloidKind.H)

    def negate(a):
        return Q.ldd(Q.bottom, a)

    return _negation_functor(K, H, negate, "¬"), _negation_functor(H, K, negate, "¬")


def linear_negation_functors(quantale, m=None, extended=False):
    """ Returns the linear negations (−)^⊥: K(Q) → H(Q) and (−)^⊥: H(Q) → K(Q).

    Parameters:
        m        -- The cyclic dualizing element; the quantale's preferred one by default.
        extended -- Return the variants B(Q) → D(Q) and D(Q) → B(Q) instead.

    Raises NotDualizing if m is not cyclic and dualizing. A dualizing element that is not hermitian
    is accepted, but the functors then do not preserve the involution.
    """
    Q = quantale

    if m is None:
        m = Q.profile.cyclic_dualizing
        if m is None:
            raise NotDualizing(f"{Q.name} has no cyclic dualizing element")

    require_cyclic_dualizing(Q, m)

    if Q.is_involutive and not is_hermitian(Q, m):
        logger.warning("%s is not hermitian in %s; linear negation won't preserve the involution",
            Q.label(m), Q.name)

    backward, forward = (QuantaloidKind.B, QuantaloidKind.D) if extended else (QuantaloidKind.K, QuantaloidKind.H)
    back = build_quantaloid(Q, backward)
    diag = build_quantaloid(Q, forward)

    def perp(a):
        return Q.ldd(m, a)

    return (_negation_functor(back, diag, perp, f"⊥{Q.label(m)}"),
        _negation_functor(diag, back, perp, f"⊥{Q.label(m)}"))


def transport_category(functor, category, grade=None):
    """ Moves a category enriched in the functor's source to one enriched in its target.

    Parameters:
        grade -- A precomputed FunctorGrade of the functor, to skip grading it again.

    Raises NotLax if the functor is not lax.
    """
    F, C = functor, category
    grade = grade or grade_functor(F, raise_ill_typed=False)

    if not grade.is_lax:
        violation = grade.witnesses['is_lax']
        raise NotLax(f"{F.name} is not lax: {violation.axiom} fails", witness=violation.witness)

    points = range(len(C.carrier))
    types = tuple(F(C.types[x]) for x in points)
    hom = tuple(tuple(F.apply(C.types[x], C.types[y], C.hom[x][y]) for y in points) for x in points)

    return QCategory(F.target, C.carrier, types, hom)


class FunctorTest(unittest.TestCase):

    def setUp(self):
        from ..zoo import make_boolean, make_chain_tnorm, make_c3
        from ..types import TNorm

        self.two     = make_boolean(1)
        self.square  = make_boolean(2)
        self.c3      = make_c3()
        self.godel3  = make_chain_tnorm(2, TNorm.GODEL)
        self.luk4    = make_chain_tnorm(3, TNorm.LUKASIEWICZ)
        self.luk5    = make_chain_tnorm(4, TNorm.LUKASIEWICZ)
        self.nilmin5 = make_chain_tnorm(4, TNorm.NILPOTENT_MINIMUM)


    def assertGrades(self, grade, *flags):
        for flag in FunctorGrade.FLAGS:
            self.assertEqual(getattr(grade, flag), flag in flags, (flag, grade.witnesses.get(flag)))


    def test_identity_functor(self):
        H = build_quantaloid(self.luk4, QuantaloidKind.H)
        identity = LaxFunctor.from_formula(H, H, lambda q: q, lambda u: u, "id")

        self.assertGrades(grade_functor(identity), *FunctorGrade.FLAGS)
        self.assertTrue(is_identity_functor(identity))


    def test_dropped_unit_is_not_lax(self):
        D = build_quantaloid(self.luk4, QuantaloidKind.D)
        collapse = LaxFunctor.from_formula(D, D, lambda q: q, lambda u: self.luk4.bottom, "collapse")
        grade = grade_functor(collapse)

        self.assertFalse(grade.is_lax)
        self.assertEqual(grade.witnesses['is_lax'].axiom, "lax-unit")
        self.assertFalse(grade.is_homomorphism)


    def test_ill_typed_arrows(self):
        H = build_quantaloid(self.luk4, QuantaloidKind.H)
        shifted = LaxFunctor.from_formula(H, H, lambda q: q, lambda u: self.luk4.top, "top")

        with self.assertRaises(IllTyped):
            grade_functor(shifted)

        grade = grade_functor(shifted, raise_ill_typed=False)
        self.assertFalse(grade.is_lax)
        self.assertEqual(grade.witnesses['is_lax'].axiom, "typing")


    def test_c3_negations_are_homomorphisms(self):
        for functor in neg_homomorphisms_frame(self.c3, check_preconditions=False):
            grade = grade_functor(functor)
            self.assertTrue(grade.is_homomorphism, grade.witnesses)


    def test_godel_negation(self):
        Q = self.godel3
        left, right = neg_functors_divisible(Q)
        half = Q.element("1/2")

        self.assertEqual(left(half), Q.bottom)
        self.assertEqual(left.apply(half, half, half), Q.bottom)
        self.assertEqual(left.apply(half, half, Q.top), Q.bottom)
        self.assertTrue(grade_functor(left).is_lax)


    def test_divisible_negations_are_lax(self):
        for Q in (self.luk5, self.godel3, self.square):
            left, right = neg_functors_divisible(Q)

            self.assertTrue(grade_functor(left).is_lax)
            self.assertTrue(grade_functor(right).is_lax)

            # ⊥ is cyclic in a commutative quantale, so both negations coincide.
            self.assertEqual(left.object_map, right.object_map)
            self.assertEqual(left.arrow_map, right.arrow_map)


    def test_negation_preconditions(self):
        with self.assertRaises(NotDivisible):
            neg_functors_divisible(self.c3)
        with self.assertRaises(NotAFrame):
            neg_homomorphisms_frame(self.luk4)


    def test_boolean_negations_are_inverse_isomorphisms(self):
        forward, backward = neg_homomorphisms_frame(self.square)

        self.assertGrades(grade_functor(forward), *FunctorGrade.FLAGS)
        self.assertGrades(grade_functor(backward), *FunctorGrade.FLAGS)
        self.assertTrue(are_mutually_inverse(forward, backward))


    def test_godel_negations_are_not_inverse(self):
        forward, backward = neg_homomorphisms_frame(self.godel3)

        self.assertTrue(grade_functor(forward).is_homomorphism)
        self.assertTrue(grade_functor(backward).is_homomorphism)
        self.assertFalse(are_mutually_inverse(forward, backward))


    def test_sierpinski_negations(self):
        from ..zoo.topology import FiniteTopSpace, make_open_set_frame

        for functor in neg_homomorphisms_frame(make_open_set_frame(FiniteTopSpace.sierpinski())):
            self.assertTrue(grade_functor(functor).is_homomorphism)


    def test_c3_linear_negation(self):
        Q = self.c3
        k, top = Q.element("k"), Q.element("top")
        forward, backward = linear_negation_functors(Q, k)

        self.assertEqual(forward(k), k)
        self.assertEqual({forward.apply(k, k, b) for b in (k, top)}, {Q.bottom, k})
        self.assertGrades(grade_functor(forward), *FunctorGrade.FLAGS)
        self.assertTrue(are_mutually_inverse(forward, backward))


    def test_linear_negation_of_top(self):
        for Q in (self.c3, self.luk4, self.nilmin5):
            m = Q.profile.cyclic_dualizing
            forward, _ = linear_negation_functors(Q, m)
            expected = Q.sup(p for p in Q.elements() if Q.le(Q.multiply(p, Q.top), m))

            self.assertEqual(forward.apply(Q.top, Q.top, Q.top), expected)


    def test_nilpotent_minimum_linear_negation(self):
        forward, backward = linear_negation_functors(self.nilmin5, self.nilmin5.bottom)

        self.assertTrue(grade_functor(forward).is_homomorphism)
        self.assertTrue(grade_functor(backward).is_homomorphism)


    def test_girard_isomorphisms(self):
        from ..zoo import quantale_by_name

        names = ["c3", "boolean:2", "rel:2"]
        names += [f"{family}:{size}" for family in ("lukasiewicz", "nilmin") for size in range(3, 7)]

        for name in names:
            Q = quantale_by_name(name)

            for extended in (False, True):
                forward, backward = linear_negation_functors(Q, extended=extended)

                with self.subTest(quantale=name, extended=extended):
                    self.assertGrades(grade_functor(forward), *FunctorGrade.FLAGS)
                    self.assertGrades(grade_functor(backward), *FunctorGrade.FLAGS)
                    self.assertTrue(are_mutually_inverse(forward, backward))


    def test_relation_negations_preserve_the_converse(self):
        from ..zoo import quantale_by_name

        Q = quantale_by_name("rel:2")
        self.assertTrue(Q.is_involutive)

        for extended in (False, True):
            for functor in linear_negation_functors(Q, extended=extended):
                with self.subTest(functor=functor.name, extended=extended):
                    self.assertTrue(grade_functor(functor).preserves_involution)


    def test_frame_negations_on_larger_frames(self):
        from ..zoo import quantale_by_name

        for name in ["boolean:3"] + [f"godel:{size}" for size in range(3, 7)]:
            Q = quantale_by_name(name)

            for functor in neg_homomorphisms_frame(Q):
                with self.subTest(quantale=name, source=functor.source.name):
                    self.assertTrue(grade_functor(functor).is_homomorphism)


    def test_integral_linear_negation_is_negation(self):
        forward, _ = linear_negation_functors(self.luk5, self.luk5.bottom)
        negation, _ = neg_functors_divisible(self.luk5)

        self.assertEqual(forward.object_map, negation.object_map)
        self.assertEqual(forward.arrow_map, negation.arrow_map)


    def test_linear_negation_needs_a_dualizing_element(self):
        with self.assertRaises(NotDualizing):
            linear_negation_functors(self.godel3)


class TransportTest(unittest.TestCase):

    def setUp(self):
        from ..zoo import make_chain_tnorm
        from ..types import TNorm

        self.luk5 = make_chain_tnorm(4, TNorm.LUKASIEWICZ)


    def join_dissimilarity(self, values):
        from .enriched import DissimilaritySpace

        Q = self.luk5
        beta = [[Q.join(a, b) for b in values] for a in values]
        return DissimilaritySpace(Q, [f"x{i}" for i in range(len(values))], beta)


    def test_negated_dissimilarity_is_a_similarity(self):
        from .enriched import category_to_similarity, dissimilarity_to_category

        Q = self.luk5
        dissimilarity = self.join_dissimilarity([0, 1, 3])
        left, _ = neg_functors_divisible(Q)

        similarity = category_to_similarity(transport_category(left, dissimilarity_to_category(dissimilarity)))
        self.assertEqual(similarity.alpha[1][2], Q.ldd(Q.bottom, Q.join(1, 3)))
        self.assertTrue(similarity.check().ok)


    def test_linear_negation_round_trip(self):
        from .enriched import category_to_dissimilarity, dissimilarity_to_category

        dissimilarity = self.join_dissimilarity([2, 0, 4])
        forward, backward = linear_negation_functors(self.luk5)

        category = dissimilarity_to_category(dissimilarity)
        there = transport_category(forward, category)
        back = transport_category(backward, there)

        self.assertEqual(category_to_dissimilarity(back), dissimilarity)


    def test_negated_partial_map_similarity(self):
        from .enriched import similarity_to_category
        from ..zoo.topology import FiniteTopSpace, pcx_dissimilarity, pcx_similarity

        space = FiniteTopSpace.sierpinski()
        similarity = pcx_similarity(space, 2)
        _, negation = neg_homomorphisms_frame(similarity.quantale)

        transported = transport_category(negation, similarity_to_category(similarity))
        self.assertEqual(transported.hom, pcx_dissimilarity(space, 2).beta)


    def test_non_lax_functors_are_refused(self):
        from .enriched import similarity_to_category, SimilaritySpace

        Q = self.luk5
        D = build_quantaloid(Q, QuantaloidKind.D)
        collapse = LaxFunctor.from_formula(D, D, lambda q: q, lambda u: Q.bottom, "collapse")
        category = similarity_to_category(SimilaritySpace(Q, ["x"], [[Q.top]]), base=D)

        with self.assertRaises(NotLax):
            transport_category(collapse, category)


if __name__ == "__main__":
    unittest.main()
