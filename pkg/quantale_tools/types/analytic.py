#
# This file is part of quantale-tools.
#
"""
Quantales on infinite carriers given in closed form, over exact extended rationals.

Nothing here is ever enumerated: laws are verified on sample sets, and every report produced
from these quantales is stamped as sampled.
"""

import itertools
import unittest

from dataclasses import dataclass
from fractions   import Fraction
from functools   import reduce, total_ordering
from typing      import Callable

from .         import Scope, ValidationReport
from ..errors  import QuantaleError


@total_ordering
class _Infinity:
    """ The point at infinity of the extended nonnegative rationals. Absorbs addition. """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance


    def __eq__(self, other):
        return other is self


    def __lt__(self, other):
        return False


    def __gt__(self, other):
        return other is not self


    def __hash__(self):
        return hash("inf")


    def __add__(self, other):
        return self

    __radd__ = __add__


    def __repr__(self):
        return "inf"


INFINITY = _Infinity()


def parse_extended(text):
    """ Parses a nonnegative rational such as '3', '1/4' or '0.5', or 'inf' / '∞'. """
    text = str(text).strip()

    if text.lower() in ('inf', 'infinity', '∞'):
        return INFINITY

    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise QuantaleError(f"not an extended rational: {text!r}")

    if value < 0:
        raise QuantaleError(f"extended rationals must be nonnegative: {text!r}")

    return value


def format_extended(value):
    return "inf" if value is INFINITY else str(value)


@dataclass(frozen=True)
class AnalyticQuantale:
    """ A quantale whose operations are closed-form functions rather than tables.

    It answers the same queries as a finite Quantale, so validators run unchanged on both.
    """

    exhaustive = False

    name:      str
    order:     Callable
    join_op:   Callable
    meet_op:   Callable
    tensor:    Callable
    left_imp:  Callable
    right_imp: Callable
    unit:      object
    bottom:    object
    top:       object
    profile:   object
    anchors:   tuple = ()
    involution: Callable = None


    @property
    def is_involutive(self):
        return True


    def le(self, a, b):
        return self.order(a, b)


    def lt(self, a, b):
        return a != b and self.order(a, b)


    def join(self, a, b):
        return self.join_op(a, b)


    def meet(self, a, b):
        return self.meet_op(a, b)


    def sup(self, elements):
        return reduce(self.join_op, elements, self.bottom)


    def multiply(self, p, q):
        return self.tensor(p, q)


    def ldd(self, r, q):
        """ Returns r⧸q, the largest p with p⊗q ≤ r. """
        return self.left_imp(r, q)


    def rdd(self, p, r):
        """ Returns p⇘r, the largest q with p⊗q ≤ r. """
        return self.right_imp(p, r)


    def conjugate(self, q):
        return q if self.involution is None else self.involution(q)


    def label(self, a):
        return format_extended(a)


    def element(self, label):
        if isinstance(label, (int, Fraction)) or label is INFINITY:
            return label if label is INFINITY else Fraction(label)
        return parse_extended(label)


def check_sampled_laws(quantale, samples):
    """ Checks the quantale laws of a closed-form quantale on every tuple drawn from a sample set.

    The quantale's anchors are always added to the samples.
    """
    Q = quantale
    samples = list(dict.fromkeys(list(Q.anchors) + [Q.unit, Q.bottom, Q.top] + list(samples)))
    report = ValidationReport("quantale", scope=Scope.SAMPLED)

    for q in samples:
        report.require(Q.multiply(Q.unit, q) == q == Q.multiply(q, Q.unit), "unit", q)
        report.require(Q.multiply(q, Q.bottom) == Q.bottom == Q.multiply(Q.bottom, q), "bottom", q)

    for p, q in itertools.product(samples, repeat=2):
        if Q.profile.commutative:
            report.require(Q.multiply(p, q) == Q.multiply(q, p), "commutativity", p, q)
        if Q.profile.divisible and Q.le(p, q):
            report.require(Q.multiply(Q.ldd(p, q), q) == p == Q.multiply(q, Q.rdd(q, p)),
                "divisibility", p, q)

    for p, q, r in itertools.product(samples, repeat=3):
        report.require(Q.multiply(Q.multiply(p, q), r) == Q.multiply(p, Q.multiply(q, r)),
            "associativity", p, q, r)

        below = Q.le(Q.multiply(p, q), r)
        report.require(below == Q.le(p, Q.ldd(r, q)), "left-adjunction", p, q, r)
        report.require(below == Q.le(q, Q.rdd(p, r)), "right-adjunction", p, q, r)

        report.require(Q.multiply(p, Q.join(q, r)) == Q.join(Q.multiply(p, q), Q.multiply(p, r)),
            "distributivity", p, q, r)

    report.facts['samples'] = len(samples)
    return report


class ExtendedRationalTest(unittest.TestCase):

    def test_infinity_ordering(self):
        self.assertTrue(Fraction(10**9) < INFINITY)
        self.assertTrue(INFINITY > 3)
        self.assertFalse(INFINITY < INFINITY)
        self.assertEqual(max(Fraction(1), INFINITY), INFINITY)
        self.assertEqual(min(Fraction(1), INFINITY), Fraction(1))


    def test_infinity_absorbs_addition(self):
        self.assertIs(INFINITY + Fraction(3), INFINITY)
        self.assertIs(Fraction(3) + INFINITY, INFINITY)


    def test_parse_and_format(self):
        self.assertEqual(parse_extended("1/4"), Fraction(1, 4))
        self.assertIs(parse_extended("∞"), INFINITY)
        self.assertEqual(format_extended(parse_extended("3/6")), "1/2")

        with self.assertRaises(QuantaleError):
            parse_extended("-1")
        with self.assertRaises(QuantaleError):
            parse_extended("lots")


if __name__ == "__main__":
    unittest.main()
