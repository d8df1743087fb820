#
# This file is part of quantale-tools.
#
"""
Lawvere's quantale of extended nonnegative rationals, and the similarity and dissimilarity it
carries on closed intervals.
"""

import random
import unittest

from dataclasses import dataclass
from fractions   import Fraction

from hypothesis  import given, strategies as st

from ..types                import SimilarityMode
from ..types.analytic       import (AnalyticQuantale, INFINITY, check_sampled_laws, format_extended,
                                    parse_extended)
from ..types.quantale       import PropertyProfile
from ..categories.enriched  import (SimilaritySpace, DissimilaritySpace, check_similarity,
                                    check_dissimilarity)
from ..errors               import QuantaleError


ZERO = Fraction(0)


def _add(p, q):
    return INFINITY if INFINITY in (p, q) else p + q


def lawvere_implication(p, q):
    """ Returns p→q: q−p when p < q, and 0 otherwise; the difference of ∞ and a finite p is ∞. """
    if not p < q:
        return ZERO
    return INFINITY if q is INFINITY else q - p


_LAWVERE_PROFILE = PropertyProfile(
    commutative=True,
    integral=True,
    divisible=True,
    idempotent=False,
    frame=False,
    mv=False,
    girard=False,
    witnesses={
        'idempotent': (Fraction(1),),
        'frame':      (Fraction(1), Fraction(1)),
        'mv':         (Fraction(1), INFINITY),
        'girard':     ((INFINITY, Fraction(1)),),
    },
)


def make_lawvere():
    """ Returns Lawvere's quantale: [0,∞] ordered by ≥, with ⊗ = + and unit 0.

    Joins are numeric minima, so ⊥ = ∞ and ⊤ = 0; r⧸q and q⇘r are both q→r.
    """
    return AnalyticQuantale(
        name="lawvere",
        order=lambda a, b: a >= b,
        join_op=min,
        meet_op=max,
        tensor=_add,
        left_imp=lambda r, q: lawvere_implication(q, r),
        right_imp=lambda p, r: lawvere_implication(p, r),
        unit=ZERO,
        bottom=INFINITY,
        top=ZERO,
        profile=_LAWVERE_PROFILE,
        anchors=(ZERO, Fraction(1), INFINITY),
    )


def sample_lawvere(count, seed=0):
    """ Returns a reproducible list of extended rationals. """
    rng = random.Random(seed)
    return [Fraction(rng.randint(0, 24), rng.choice((1, 2, 3, 4))) for _ in range(count)]


@dataclass(frozen=True)
class RationalInterval:
    """ A closed interval [lo, hi] with 0 ≤ lo < hi ≤ ∞. """

    lo: Fraction
    hi: object

    def __post_init__(self):
        if not ZERO <= self.lo < self.hi:
            raise QuantaleError(f"not an interval: [{self.lo}, {self.hi}]")


    @classmethod
    def parse(cls, text):
        """ Parses an interval written as '[a,b]' or 'a,b'. """
        lo, _, hi = text.strip().strip("[]").partition(",")
        return cls(parse_extended(lo), parse_extended(hi))


    @property
    def label(self):
        return f"[{format_extended(self.lo)},{format_extended(self.hi)}]"


def sample_intervals(count, seed=0):
    """ Returns a reproducible list of distinct intervals, about a fifth of them unbounded. """
    rng = random.Random(seed)
    intervals = []

    while len(intervals) < count:
        lo = Fraction(rng.randint(0, 12), rng.choice((1, 2, 4)))

        if rng.random() < 0.2:
            hi = INFINITY
        else:
            hi = lo + Fraction(rng.randint(1, 12), rng.choice((1, 2, 4)))

        interval = RationalInterval(lo, hi)
        if interval not in intervals:
            intervals.append(interval)

    return intervals


def _span(x, y):
    upper = max(x.hi, y.hi)
    return INFINITY if upper is INFINITY else upper - min(x.lo, y.lo)


def _overlap(x, y):
    if max(x.hi, y.hi) is INFINITY:
        return ZERO
    return max(ZERO, min(x.hi, y.hi) - max(x.lo, y.lo))


def interval_similarity(samples):
    """ Builds α([a,b],[c,d]) = b∨d − a∧c, with ∨ and ∧ taken numerically. """
    if not samples:
        raise QuantaleError("interval similarity needs at least one interval")

    alpha = tuple(tuple(_span(x, y) for y in samples) for x in samples)
    return SimilaritySpace(make_lawvere(), tuple(x.label for x in samples), alpha)


def interval_dissimilarity(samples):
    """ Builds β([a,b],[c,d]) = 0 if b∨d = ∞, and max{0, b∧d − a∨c} otherwise. """
    if not samples:
        raise QuantaleError("interval dissimilarity needs at least one interval")

    beta = tuple(tuple(_overlap(x, y) for y in samples) for x in samples)
    return DissimilaritySpace(make_lawvere(), tuple(x.label for x in samples), beta)


extended_rationals = st.one_of(
    st.fractions(min_value=0, max_value=1000),
    st.just(INFINITY),
)


class LawvereTest(unittest.TestCase):

    def setUp(self):
        self.Q = make_lawvere()


    def test_tensor_is_addition(self):
        self.assertEqual(self.Q.multiply(Fraction(3), Fraction(4)), Fraction(7))
        self.assertIs(self.Q.multiply(Fraction(3), INFINITY), INFINITY)


    def test_implication(self):
        self.assertEqual(lawvere_implication(Fraction(3), Fraction(5)), Fraction(2))
        self.assertEqual(lawvere_implication(INFINITY, Fraction(3)), ZERO)
        self.assertIs(lawvere_implication(Fraction(3), INFINITY), INFINITY)
        self.assertEqual(lawvere_implication(INFINITY, INFINITY), ZERO)


    def test_sampled_laws(self):
        report = check_sampled_laws(self.Q, sample_lawvere(12))
        self.assertTrue(report.ok)
        self.assertEqual(report.verdict.value, "sampled")


    @given(extended_rationals, extended_rationals, extended_rationals)
    def test_adjunction(self, p, q, r):
        Q = self.Q
        below = Q.le(Q.multiply(p, q), r)

        self.assertEqual(below, Q.le(p, Q.ldd(r, q)))
        self.assertEqual(below, Q.le(q, Q.rdd(p, r)))


    @given(extended_rationals, extended_rationals)
    def test_divisibility(self, u, q):
        Q = self.Q
        if Q.le(u, q):
            self.assertEqual(Q.multiply(Q.ldd(u, q), q), u)


class IntervalTest(unittest.TestCase):

    def interval(self, lo, hi):
        return RationalInterval(parse_extended(lo), parse_extended(hi))


    def test_similarity_values(self):
        a, b = self.interval(1, 2), self.interval(3, 4)
        alpha = interval_similarity([a, b]).alpha

        self.assertEqual(alpha[0][0], 1)
        self.assertEqual(alpha[0][1], 3)


    def test_dissimilarity_values(self):
        samples = [self.interval(1, 2), self.interval("5", "inf"), self.interval(1, 3),
            self.interval(2, 4), self.interval(3, 4)]
        beta = interval_dissimilarity(samples).beta

        self.assertEqual(beta[0][1], 0)
        self.assertEqual(beta[2][3], 1)
        self.assertEqual(beta[0][4], 0)


    def test_parse(self):
        self.assertEqual(RationalInterval.parse("[1/2,inf]"), self.interval("1/2", "inf"))
        self.assertEqual(self.interval(1, 2).label, "[1,2]")

        with self.assertRaises(QuantaleError):
            RationalInterval.parse("[3,1]")


    def test_sampled_axioms_hold(self):
        samples = sample_intervals(8, seed=0)
        self.assertEqual(len(samples), 8)

        similarity = interval_similarity(samples)
        dissimilarity = interval_dissimilarity(samples)

        for mode in (SimilarityMode.FULL, SimilarityMode.DIVISIBLE):
            report = check_similarity(similarity.quantale, similarity.carrier, similarity.alpha, mode)
            self.assertTrue(report.ok, report.violations)
            self.assertEqual(report.verdict.value, "sampled")

        report = check_dissimilarity(dissimilarity.quantale, dissimilarity.carrier, dissimilarity.beta)
        self.assertTrue(report.ok, report.violations)


    def test_sampling_is_reproducible(self):
        self.assertEqual(sample_intervals(5, seed=3), sample_intervals(5, seed=3))


if __name__ == "__main__":
    unittest.main()
