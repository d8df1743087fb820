#
# This file is part of quantale-tools.
#
"""
Quantaloid-enriched categories and the quantale-valued relations they represent: similarities,
dissimilarities, and apartness relations.

Matrices are indexed by carrier position; carriers are tuples of point labels, which are what
validation witnesses refer to.
"""

import logging
import itertools
import unittest

from dataclasses import dataclass

from .quantaloid     import SmallQuantaloid, build_HQ, build_KQ
from ..types         import BridgeDirection, QuantaloidKind, Scope, SimilarityMode, ValidationReport
from ..errors        import (DimensionMismatch, ModePreconditionFailed, NotAFrame, NotASimilarity,
                             NotADissimilarity, NotBoolean, NotInvolutive)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QCategory:
    """ A category enriched in a small quantaloid.

    Parameters:
        base    -- The SmallQuantaloid the category is enriched in.
        carrier -- The point labels.
        types   -- The object |x| of the base each point is typed at.
        hom     -- The matrix of arrows, with hom[x][y] expected in base.hom(|x|, |y|).
    """

    base:    SmallQuantaloid
    carrier: tuple
    types:   tuple
    hom:     tuple

    @classmethod
    def from_matrix(cls, base, carrier, hom, types=None):
        """ Creates a category from its hom matrix; by default, each point is typed at hom[x][x]. """
        hom = _square(carrier, hom)
        types = tuple(types) if types is not None else tuple(hom[x][x] for x in range(len(carrier)))
        return cls(base, tuple(carrier), types, hom)


@dataclass(frozen=True)
class SimilaritySpace:
    """ A carrier with a quantale-valued similarity α. """

    quantale: object
    carrier:  tuple
    alpha:    tuple

    def __post_init__(self):
        object.__setattr__(self, 'carrier', tuple(self.carrier))
        object.__setattr__(self, 'alpha', _square(self.carrier, self.alpha))


    def check(self, mode=SimilarityMode.FULL):
        return check_similarity(self.quantale, self.carrier, self.alpha, mode)


@dataclass(frozen=True)
class DissimilaritySpace:
    """ A carrier with a quantale-valued dissimilarity β. """

    quantale: object
    carrier:  tuple
    beta:     tuple

    def __post_init__(self):
        object.__setattr__(self, 'carrier', tuple(self.carrier))
        object.__setattr__(self, 'beta', _square(self.carrier, self.beta))


    def check(self):
        return check_dissimilarity(self.quantale, self.carrier, self.beta)


@dataclass(frozen=True)
class ApartnessModel:
    """ A carrier with an extent E and an apartness γ, both valued in a frame. """

    frame:   object
    carrier: tuple
    extent:  tuple
    gamma:   tuple

    def __post_init__(self):
        object.__setattr__(self, 'carrier', tuple(self.carrier))
        object.__setattr__(self, 'extent', tuple(self.extent))
        object.__setattr__(self, 'gamma', _square(self.carrier, self.gamma))


    def check(self):
        return check_apartness(self.frame, self.carrier, self.extent, self.gamma)


def _square(carrier, matrix):
    """ Returns a matrix as nested tuples, after checking it matches its carrier. """
    n = len(carrier)
    matrix = tuple(tuple(row) for row in matrix)

    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise DimensionMismatch(f"matrix must be {n}x{n} to match its carrier")

    return matrix


def _scope(quantale):
    return Scope.EXHAUSTIVE if quantale.exhaustive else Scope.SAMPLED


def _require_involution(quantale):
    if not quantale.is_involutive:
        raise NotInvolutive(f"{quantale.name} has no involution")


def check_similarity(quantale, carrier, alpha, mode=SimilarityMode.FULL):
    """ Checks the similarity axioms on every pair and triple of points.

    Parameters:
        mode -- FULL checks S1 to S4; DIVISIBLE drops S3, which divisibility makes redundant; FRAME
                checks only symmetry and S4 in its meet form α(y,z)∧α(x,y) ≤ α(x,z).

    Raises ModePreconditionFailed if the quantale is not divisible (resp. a frame) in those modes.
    """
    Q = quantale
    mode = SimilarityMode(mode)
    alpha = _square(carrier, alpha)
    points = range(len(carrier))

    for flag, needed in (('divisible', SimilarityMode.DIVISIBLE), ('frame', SimilarityMode.FRAME)):
        if mode is needed and not getattr(Q.profile, flag):
            raise ModePreconditionFailed(f"{mode.value} mode needs a {flag} quantale; {Q.name} is not",
                witness=Q.profile.witnesses.get(flag))

    _require_involution(Q)
    report = ValidationReport(f"similarity:{mode.value}", scope=_scope(Q))

    for x, y in itertools.product(points, repeat=2):
        a, ax = alpha[x][y], alpha[x][x]
        witness = (carrier[x], carrier[y])

        report.require(a == Q.conjugate(alpha[y][x]), "S2", *witness)

        if mode is SimilarityMode.FRAME:
            continue

        report.require(Q.le(a, Q.meet(ax, alpha[y][y])), "S1", *witness)

        if mode is SimilarityMode.FULL:
            report.require(a == Q.multiply(Q.ldd(a, ax), ax), "S3", *witness)

    for x, y, z in itertools.product(points, repeat=3):
        if mode is SimilarityMode.FRAME:
            through = Q.meet(alpha[y][z], alpha[x][y])
        else:
            through = Q.multiply(Q.ldd(alpha[y][z], alpha[y][y]), alpha[x][y])

        report.require(Q.le(through, alpha[x][z]), "S4", carrier[x], carrier[y], carrier[z])

    return report


def check_dissimilarity(quantale, carrier, beta):
    """ Checks the dissimilarity axioms D1 to D4 on every pair and triple of points.

    The report's 'rigid' fact tells whether β(x,x) = ⊥ for every point.
    """
    Q = quantale
    beta = _square(carrier, beta)
    points = range(len(carrier))

    _require_involution(Q)
    report = ValidationReport("dissimilarity", scope=_scope(Q))

    for x, y in itertools.product(points, repeat=2):
        b, bx = beta[x][y], beta[x][x]
        witness = (carrier[x], carrier[y])

        report.require(Q.le(Q.join(bx, beta[y][y]), b), "D1", *witness)
        report.require(b == Q.conjugate(beta[y][x]), "D2", *witness)
        report.require(b == Q.ldd(bx, Q.rdd(b, bx)), "D3", *witness)

    for x, y, z in itertools.product(points, repeat=3):
        bound = Q.ldd(beta[x][y], Q.rdd(beta[y][z], beta[y][y]))
        report.require(Q.le(beta[x][z], bound), "D4", carrier[x], carrier[y], carrier[z])

    report.facts['rigid'] = all(beta[x][x] == Q.bottom for x in points)
    return report


def check_apartness(frame, carrier, extent, gamma):
    """ Checks that γ is an apartness relation on a carrier with extent E. Raises NotAFrame. """
    Q = frame

    if not Q.profile.frame:
        raise NotAFrame(f"{Q.name} is not a frame", witness=Q.profile.witnesses.get('frame'))

    gamma = _square(carrier, gamma)
    if len(extent) != len(carrier):
        raise DimensionMismatch("extent must have one entry per point")

    report = ValidationReport("apartness", scope=_scope(Q))
    points = range(len(carrier))

    for x, y in itertools.product(points, repeat=2):
        witness = (carrier[x], carrier[y])
        report.require(Q.le(gamma[x][y], Q.meet(extent[x], extent[y])), "bounded", *witness)
        report.require(gamma[x][y] == gamma[y][x], "symmetric", *witness)

    for x in points:
        report.require(gamma[x][x] == Q.bottom, "irreflexive", carrier[x])

    for x, y, z in itertools.product(points, repeat=3):
        report.require(Q.le(Q.meet(gamma[x][z], extent[y]), Q.join(gamma[x][y], gamma[z][y])),
            "cotransitive", carrier[x], carrier[y], carrier[z])

    return report


def validate_category(category):
    """ Checks typing, units and composition of a quantaloid-enriched category. """
    C, K = category, category.base
    points = range(len(C.carrier))
    report = ValidationReport("category", scope=_scope(K.base))

    for x, y in itertools.product(points, repeat=2):
        report.require(K.contains(C.types[x], C.types[y], C.hom[x][y]), "typing", C.carrier[x], C.carrier[y])

    for x in points:
        report.require(K.local_le(K.identity(C.types[x]), C.hom[x][x]), "unit", C.carrier[x])

    for x, y, z in itertools.product(points, repeat=3):
        composite = K.compose(C.hom[x][y], C.hom[y][z], C.types[y])
        report.require(K.local_le(composite, C.hom[x][z]), "composition", C.carrier[x], C.carrier[y], C.carrier[z])

    return report


def is_symmetric(category):
    """ Returns true iff hom(x,y) = hom(y,x)° for all points, which forces |x| = |x|°. """
    C, K = category, category.base
    points = range(len(C.carrier))

    return (all(C.hom[x][y] == K.conjugate(C.hom[y][x]) for x, y in itertools.product(points, repeat=2))
        and all(C.types[x] == K.conjugate(C.types[x]) for x in points))


def similarity_to_category(space, base=None):
    """ Presents a similarity as a symmetric category enriched in H(Q), typed by |x| = α(x,x).

    Parameters:
        base -- An already built H(Q) to reuse; built from the space's quantale by default.
    """
    report = space.check()
    if not report.ok:
        violation = report.first()
        raise NotASimilarity(f"similarity axiom {violation.axiom} fails", witness=violation.witness)

    return QCategory.from_matrix(base or build_HQ(space.quantale), space.carrier, space.alpha)


def dissimilarity_to_category(space, base=None):
    """ Presents a dissimilarity as a symmetric category enriched in K(Q), typed by |x| = β(x,x). """
    report = space.check()
    if not report.ok:
        violation = report.first()
        raise NotADissimilarity(f"dissimilarity axiom {violation.axiom} fails", witness=violation.witness)

    return QCategory.from_matrix(base or build_KQ(space.quantale), space.carrier, space.beta)


def _check_representable(category, kind):
    C = category
    report = ValidationReport("category")

    report.require(C.base.kind is kind, "base", C.base.name)
    report.require(all(C.types[x] == C.hom[x][x] for x in range(len(C.carrier))), "diagonal-types")
    report.require(is_symmetric(C), "symmetry")

    if report.ok:
        report.merge(validate_category(C))

    return report


def category_to_similarity(category):
    """ Reads a symmetric H(Q)-category typed on its diagonal back as a similarity. """
    report = _check_representable(category, QuantaloidKind.H)
    if not report.ok:
        raise NotASimilarity(f"not a symmetric H-category: {report.first().axiom} fails",
            witness=report.first().witness)

    return SimilaritySpace(category.base.base, category.carrier, category.hom)


def category_to_dissimilarity(category):
    """ Reads a symmetric K(Q)-category typed on its diagonal back as a dissimilarity. """
    report = _check_representable(category, QuantaloidKind.K)
    if not report.ok:
        raise NotADissimilarity(f"not a symmetric K-category: {report.first().axiom} fails",
            witness=report.first().witness)

    return DissimilaritySpace(category.base.base, category.carrier, category.hom)


def check_qfunctor(mapping, source, target):
    """ Returns true iff a map of points is a functor: |x| = |fx| and hom(x,y) ≤ hom(fx,fy) locally.

    Parameters:
        mapping -- The image position in the target of each source position, as a sequence or callable.
    """
    f = mapping if callable(mapping) else mapping.__getitem__
    K = target.base
    points = range(len(source.carrier))

    if any(source.types[x] != target.types[f(x)] for x in points):
        return False

    return all(K.local_le(source.hom[x][y], target.hom[f(x)][f(y)])
        for x, y in itertools.product(points, repeat=2))


def is_boolean(quantale):
    """ Returns true iff a finite quantale is a Boolean algebra under ⊗ = ∧. """
    Q = quantale
    return (Q.exhaustive and Q.profile.frame and
        all(Q.join(a, Q.ldd(Q.bottom, a)) == Q.top for a in Q.elements()))


def boolean_apartness_bridge(direction, data):
    """ Converts between apartness models and similarities over a finite Boolean algebra.

    An apartness (E, γ) gives α(x,y) = E(x)∧E(y)∧¬γ(x,y); a similarity gives back E(x) = α(x,x)
    and γ(x,y) = E(x)∧E(y)∧¬α(x,y).

    Parameters:
        direction -- A BridgeDirection.
        data      -- An ApartnessModel or a SimilaritySpace, matching the direction.
    """
    direction = BridgeDirection(direction)

    Q = data.frame if direction is BridgeDirection.APARTNESS_TO_SIMILARITY else data.quantale
    if not is_boolean(Q):
        raise NotBoolean(f"{Q.name} is not a Boolean algebra")

    points = range(len(data.carrier))

    def complement_within(x, y, value):
        return Q.meet(Q.meet(extent[x], extent[y]), Q.ldd(Q.bottom, value))

    if direction is BridgeDirection.APARTNESS_TO_SIMILARITY:
        extent = data.extent
        alpha = tuple(tuple(complement_within(x, y, data.gamma[x][y]) for y in points) for x in points)
        return SimilaritySpace(Q, data.carrier, alpha)

    extent = tuple(data.alpha[x][x] for x in points)
    gamma = tuple(tuple(complement_within(x, y, data.alpha[x][y]) for y in points) for x in points)
    return ApartnessModel(Q, data.carrier, extent, gamma)


class SimilarityTest(unittest.TestCase):

    def setUp(self):
        from ..zoo import make_boolean, make_chain_tnorm, make_c3
        from ..types import TNorm

        self.two    = make_boolean(1)
        self.square = make_boolean(2)
        self.c3     = make_c3()
        self.luk4   = make_chain_tnorm(3, TNorm.LUKASIEWICZ)
        self.luk5   = make_chain_tnorm(4, TNorm.LUKASIEWICZ)
        self.godel3 = make_chain_tnorm(2, TNorm.GODEL)


    def test_equivalence_relation_is_a_similarity(self):
        alpha = [[1, 1, 0], [1, 1, 0], [0, 0, 1]]

        for mode in SimilarityMode:
            self.assertTrue(check_similarity(self.two, "abc", alpha, mode).ok)


    def test_equivalence_relation_on_a_subset(self):
        alpha = [[1, 1, 0], [1, 1, 0], [0, 0, 0]]
        self.assertTrue(check_similarity(self.two, "abc", alpha).ok)


    def test_intransitive_relation_is_witnessed(self):
        alpha = [[1, 1, 0], [1, 1, 1], [0, 1, 1]]
        report = check_similarity(self.two, "abc", alpha)

        self.assertEqual(report.failed_axioms(), {"S4"})
        self.assertEqual(report.first("S4").witness, ("a", "b", "c"))


    def test_asymmetric_relation_is_witnessed(self):
        alpha = [[1, 1], [0, 1]]
        report = check_similarity(self.two, "ab", alpha)

        self.assertIn("S2", report.failed_axioms())
        self.assertEqual(report.first("S2").witness, ("a", "b"))


    def test_meet_on_a_boolean_algebra(self):
        Q = self.square
        alpha = [[Q.meet(p, q) for q in Q.elements()] for p in Q.elements()]

        for mode in SimilarityMode:
            self.assertTrue(check_similarity(Q, Q.labels, alpha, mode).ok)


    def test_singleton_at_the_unit(self):
        for Q in (self.c3, self.luk4, self.square):
            self.assertTrue(check_similarity(Q, ["x"], [[Q.unit]]).ok)


    def test_mode_preconditions(self):
        with self.assertRaises(ModePreconditionFailed):
            check_similarity(self.c3, ["x"], [[self.c3.unit]], SimilarityMode.DIVISIBLE)
        with self.assertRaises(ModePreconditionFailed):
            check_similarity(self.luk4, ["x"], [[self.luk4.unit]], SimilarityMode.FRAME)


    def test_shape_is_checked(self):
        with self.assertRaises(DimensionMismatch):
            check_similarity(self.two, "ab", [[1, 1]])


    def test_divisible_modes_agree(self):
        Q = self.luk4

        for a, b, c in itertools.product(Q.elements(), repeat=3):
            alpha = [[a, b], [b, c]]
            full = check_similarity(Q, "xy", alpha, SimilarityMode.FULL)
            divisible = check_similarity(Q, "xy", alpha, SimilarityMode.DIVISIBLE)
            self.assertEqual(full.ok, divisible.ok, alpha)


    def test_frame_modes_agree(self):
        Q = self.godel3

        for a, b, c in itertools.product(Q.elements(), repeat=3):
            alpha = [[a, b], [b, c]]
            verdicts = {check_similarity(Q, "xy", alpha, mode).ok for mode in SimilarityMode}
            self.assertEqual(len(verdicts), 1, alpha)


class DissimilarityTest(unittest.TestCase):

    def setUp(self):
        from ..zoo import make_boolean
        self.two = make_boolean(1)


    def test_complement_of_an_equivalence_relation(self):
        beta = [[0, 0, 1], [0, 0, 1], [1, 1, 0]]
        report = check_dissimilarity(self.two, "abc", beta)

        self.assertTrue(report.ok)
        self.assertTrue(report.facts['rigid'])


    def test_constant_top(self):
        report = check_dissimilarity(self.two, "ab", [[1, 1], [1, 1]])

        self.assertTrue(report.ok)
        self.assertFalse(report.facts['rigid'])


    def test_broken_contrapositive_transitivity(self):
        # a and c are apart, yet neither is apart from b.
        beta = [[0, 0, 1], [0, 0, 0], [1, 0, 0]]
        report = check_dissimilarity(self.two, "abc", beta)

        self.assertEqual(report.failed_axioms(), {"D4"})
        self.assertEqual(report.first("D4").witness, ("a", "b", "c"))


    def test_strictness(self):
        report = check_dissimilarity(self.two, "ab", [[1, 0], [0, 0]])
        self.assertIn("D1", report.failed_axioms())


class ApartnessTest(unittest.TestCase):

    def setUp(self):
        from ..zoo import make_boolean
        self.square = make_boolean(2)


    def test_empty_apartness(self):
        Q = self.square
        extent = [1, 2, 3]
        gamma = [[Q.bottom] * 3 for _ in range(3)]
        self.assertTrue(check_apartness(Q, "abc", extent, gamma).ok)


    def test_rigid_dissimilarity_with_full_extent(self):
        from ..zoo import make_boolean

        two = make_boolean(1)
        beta = [[0, 0, 1], [0, 0, 1], [1, 1, 0]]

        self.assertTrue(check_dissimilarity(two, "abc", beta).ok)
        self.assertTrue(check_apartness(two, "abc", [two.top] * 3, beta).ok)


    def test_partial_map_dissimilarity_is_no_apartness(self):
        from ..zoo.topology import FiniteTopSpace, partial_maps, pcx_dissimilarity

        space = FiniteTopSpace.sierpinski()
        dissimilarity = pcx_dissimilarity(space, 2)
        extent = [space.index(f.domain) for f in partial_maps(space, 2)]

        report = check_apartness(dissimilarity.quantale, dissimilarity.carrier, extent, dissimilarity.beta)
        self.assertFalse(report.ok)


    def test_non_frames_are_rejected(self):
        from ..zoo import make_c3

        with self.assertRaises(NotAFrame):
            check_apartness(make_c3(), "a", [0], [[0]])


class CategoryTest(unittest.TestCase):

    def setUp(self):
        from ..zoo import make_boolean, make_chain_tnorm
        from ..types import TNorm

        self.two  = make_boolean(1)
        self.luk5 = make_chain_tnorm(4, TNorm.LUKASIEWICZ)


    def meet_similarity(self, Q, values):
        alpha = [[Q.meet(a, b) for b in values] for a in values]
        return SimilaritySpace(Q, tuple(f"x{i}" for i in range(len(values))), alpha)


    def test_similarity_round_trip(self):
        space = self.meet_similarity(self.luk5, [1, 3, 4, 2])
        category = similarity_to_category(space)

        self.assertEqual(category.types, (1, 3, 4, 2))
        self.assertTrue(validate_category(category).ok)
        self.assertTrue(is_symmetric(category))
        self.assertEqual(category_to_similarity(category), space)

        for x, y in itertools.product(range(4), repeat=2):
            self.assertIn(category.hom[x][y], category.base.hom(category.types[x], category.types[y]))


    def test_non_similarities_are_rejected(self):
        space = SimilaritySpace(self.two, "ab", ((1, 1), (0, 1)))
        with self.assertRaises(NotASimilarity):
            similarity_to_category(space)


    def test_dissimilarity_round_trip(self):
        space = DissimilaritySpace(self.two, "abc", ((0, 0, 1), (0, 0, 1), (1, 1, 0)))
        category = dissimilarity_to_category(space)

        # Rigid dissimilarities live entirely in K(Q)(⊥,⊥).
        self.assertEqual(set(category.types), {self.two.bottom})
        self.assertTrue(validate_category(category).ok)
        self.assertEqual(category_to_dissimilarity(category), space)


    def test_wrong_base_is_rejected(self):
        space = self.meet_similarity(self.luk5, [4, 2])
        category = QCategory.from_matrix(build_KQ(self.luk5), space.carrier, space.alpha)

        with self.assertRaises(NotASimilarity):
            category_to_similarity(category)


    def test_functors(self):
        space = self.meet_similarity(self.luk5, [1, 3, 4])
        category = similarity_to_category(space)

        self.assertTrue(check_qfunctor([0, 1, 2], category, category))
        self.assertTrue(check_qfunctor(lambda x: x, category, category))
        self.assertFalse(check_qfunctor([1, 0, 2], category, category))


    def test_non_symmetric_categories(self):
        H = build_HQ(self.two)
        category = QCategory.from_matrix(H, "ab", [[1, 1], [0, 1]])

        self.assertTrue(validate_category(category).ok)
        self.assertFalse(is_symmetric(category))


class BooleanBridgeTest(unittest.TestCase):

    def setUp(self):
        from ..zoo import make_boolean
        self.square = make_boolean(2)


    def test_full_extent_negates(self):
        Q = self.square
        gamma = ((0, 3, 1), (3, 0, 2), (1, 2, 0))
        model = ApartnessModel(Q, "abc", (Q.top,) * 3, gamma)
        self.assertTrue(model.check().ok)

        similarity = boolean_apartness_bridge(BridgeDirection.APARTNESS_TO_SIMILARITY, model)
        self.assertTrue(similarity.check().ok)

        for x, y in itertools.product(range(3), repeat=2):
            self.assertEqual(similarity.alpha[x][y], Q.ldd(Q.bottom, gamma[x][y]))


    def test_round_trip(self):
        Q = self.square
        model = ApartnessModel(Q, "abc", (3, 1, 3), ((0, 1, 2), (1, 0, 1), (2, 1, 0)))
        self.assertTrue(model.check().ok)

        similarity = boolean_apartness_bridge(BridgeDirection.APARTNESS_TO_SIMILARITY, model)
        back = boolean_apartness_bridge(BridgeDirection.SIMILARITY_TO_APARTNESS, similarity)
        self.assertEqual(back, model)


    def test_meet_similarity_yields_apartness(self):
        Q = self.square
        alpha = tuple(tuple(Q.meet(p, q) for q in Q.elements()) for p in Q.elements())
        space = SimilaritySpace(Q, Q.labels, alpha)

        model = boolean_apartness_bridge("similarity-to-apartness", space)
        self.assertTrue(model.check().ok)


    def symmetric(self, size, diagonal):
        """ Yields every symmetric matrix on size points whose diagonal is drawn from the given values. """
        Q = self.square
        above = [(x, y) for x in range(size) for y in range(x + 1, size)]

        for values in itertools.product(diagonal, repeat=size):
            for entries in itertools.product(Q.elements(), repeat=len(above)):
                matrix = [[None] * size for _ in range(size)]
                for x, value in enumerate(values):
                    matrix[x][x] = value
                for (x, y), value in zip(above, entries):
                    matrix[x][y] = matrix[y][x] = value

                yield tuple(tuple(row) for row in matrix)


    def assertComplementary(self, extent, alpha, gamma):
        Q = self.square

        for x, y in itertools.product(range(len(extent)), repeat=2):
            within = Q.meet(extent[x], extent[y])
            self.assertEqual(Q.join(alpha[x][y], gamma[x][y]), within)
            self.assertEqual(Q.meet(alpha[x][y], gamma[x][y]), Q.bottom)


    def test_every_apartness_model_survives_the_round_trip(self):
        Q = self.square
        checked = 0

        for size in range(1, 4):
            carrier = "abc"[:size]

            for extent in itertools.product(Q.elements(), repeat=size):
                for gamma in self.symmetric(size, [Q.bottom]):
                    model = ApartnessModel(Q, carrier, extent, gamma)
                    if not model.check().ok:
                        continue

                    similarity = boolean_apartness_bridge(BridgeDirection.APARTNESS_TO_SIMILARITY, model)
                    self.assertTrue(similarity.check().ok, (extent, gamma))
                    self.assertEqual(boolean_apartness_bridge(BridgeDirection.SIMILARITY_TO_APARTNESS, similarity), model)
                    self.assertComplementary(extent, similarity.alpha, gamma)
                    checked += 1

        self.assertGreater(checked, 0)


    def test_every_similarity_survives_the_round_trip(self):
        Q = self.square
        checked = 0

        for size in range(1, 4):
            carrier = "abc"[:size]

            for alpha in self.symmetric(size, Q.elements()):
                space = SimilaritySpace(Q, carrier, alpha)
                if not space.check().ok:
                    continue

                model = boolean_apartness_bridge(BridgeDirection.SIMILARITY_TO_APARTNESS, space)
                self.assertTrue(model.check().ok, alpha)
                self.assertEqual(boolean_apartness_bridge(BridgeDirection.APARTNESS_TO_SIMILARITY, model), space)
                self.assertComplementary(model.extent, alpha, model.gamma)
                checked += 1

        self.assertGreater(checked, 0)


    def test_non_boolean_base(self):
        from ..zoo import make_chain_tnorm
        from ..types import TNorm

        Q = make_chain_tnorm(2, TNorm.GODEL)
        with self.assertRaises(NotBoolean):
            boolean_apartness_bridge(BridgeDirection.SIMILARITY_TO_APARTNESS, SimilaritySpace(Q, "a", ((2,),)))


if __name__ == "__main__":
    unittest.main()
