#
# This file is part of quantale-tools.
#
""" The involutive quantale of binary relations on a small set, under relational composition. """

import itertools
import unittest

from dataclasses import replace

from ..types            import ValidationReport
from ..types.lattice    import powerset_lattice
from ..types.quantale   import Quantale, check_adjunction, classify
from ..errors           import NotAQuantale, QuantaleError, TooLarge


MAX_SET_SIZE = 3


class RelationCodec:
    """ Converts between relations on {0..s-1}, as sets of pairs, and their bitmask elements.

    The pair (x, y) lives at bit x·s + y.
    """

    def __init__(self, set_size):
        self.set_size = set_size
        self.pairs    = [(x, y) for x in range(set_size) for y in range(set_size)]


    def bit(self, x, y):
        return 1 << (x * self.set_size + y)


    def encode(self, pairs):
        mask = 0
        for x, y in pairs:
            mask |= self.bit(x, y)
        return mask


    def decode(self, mask):
        return [(x, y) for x, y in self.pairs if mask & self.bit(x, y)]


    def label(self, mask):
        return "{" + ",".join(f"{x}{y}" for x, y in self.decode(mask)) + "}"


    def compose(self, after, before):
        """ Returns after∘before, relating x to z iff before relates x to some y that after relates to z. """
        result = 0
        for x, y in self.decode(before):
            for z in range(self.set_size):
                if after & self.bit(y, z):
                    result |= self.bit(x, z)
        return result


    def converse(self, mask):
        return self.encode((y, x) for x, y in self.decode(mask))


    def left_residual(self, r, q):
        """ Returns the largest p with p∘q ⊆ r. """
        return self.encode(
            (y, z) for y, z in self.pairs
            if all(r & self.bit(x, z) for x in range(self.set_size) if q & self.bit(x, y))
        )


    def right_residual(self, p, r):
        """ Returns the largest q with p∘q ⊆ r. """
        return self.encode(
            (x, y) for x, y in self.pairs
            if all(r & self.bit(x, z) for z in range(self.set_size) if p & self.bit(y, z))
        )


def make_rel(set_size):
    """ Returns Rel(X) for |X| = set_size: relations ordered by inclusion, with p⊗q = p∘q and the
    opposite relation as involution.

    Residuals are computed in closed form. Instances up to two points are checked against every
    quantale law. Rel(3) has 512 elements, which makes that impractical; its residuals are still
    checked against the composition, one atom at a time.
    """
    if set_size < 1:
        raise QuantaleError("Rel(X) needs a nonempty set")
    if set_size > MAX_SET_SIZE:
        raise TooLarge(f"rel:{set_size} would have 2^{set_size * set_size} elements")

    codec = RelationCodec(set_size)
    lattice = powerset_lattice(set_size * set_size)
    lattice = replace(lattice, labels=tuple(codec.label(mask) for mask in lattice.elements()))

    elements = list(lattice.elements())
    tensor = [[codec.compose(p, q) for q in elements] for p in elements]
    ldd = [[codec.left_residual(r, q) for q in elements] for r in elements]
    rdd = [[codec.right_residual(p, r) for r in elements] for p in elements]

    identity = codec.encode((x, x) for x in range(set_size))

    quantale = Quantale(lattice, tensor, identity, [codec.converse(mask) for mask in elements],
        name=f"rel:{set_size}", residuals=(ldd, rdd), validate=set_size <= 2)

    if set_size > 2:
        report = check_atomic_adjunction(quantale, [codec.bit(x, y) for x, y in codec.pairs])
        if not report.ok:
            violation = report.first()
            raise NotAQuantale(f"rel:{set_size}: {violation.axiom} fails", witness=violation.witness)

    return quantale


def check_atomic_adjunction(quantale, atoms):
    """ Checks the residual adjunction with one side ranging over atoms only.

    Over an atomistic lattice with a join-preserving tensor, both sides of p⊗q ≤ r ⟺ p ≤ r⧸q hold
    for p exactly when they hold for every atom below p, so this decides the full adjunction.
    """
    Q = quantale
    report = ValidationReport("adjunction")

    for a, x, r in itertools.product(atoms, Q.elements(), Q.elements()):
        report.require(Q.le(Q.multiply(a, x), r) == Q.le(a, Q.ldd(r, x)), "left-adjunction", a, x, r)
        report.require(Q.le(Q.multiply(x, a), r) == Q.le(a, Q.rdd(x, r)), "right-adjunction", x, a, r)

    return report


class RelationQuantaleTest(unittest.TestCase):

    def test_single_point_is_boolean(self):
        Q = make_rel(1)
        self.assertEqual(Q.n, 2)
        self.assertEqual(Q.unit, Q.top)
        self.assertTrue(Q.profile.frame)


    def test_two_points(self):
        Q = make_rel(2)
        profile = classify(Q)

        self.assertEqual(Q.n, 16)
        self.assertFalse(profile.commutative)
        self.assertFalse(profile.integral)
        self.assertTrue(profile.girard)
        self.assertIn(Q.element("{01,10}"), profile.dualizing_elements)


    def test_closed_form_residuals_are_adjoint(self):
        self.assertTrue(check_adjunction(make_rel(2)).ok)


    def test_atomic_adjunction_agrees_with_the_full_check(self):
        Q = make_rel(2)
        codec = RelationCodec(2)
        atoms = [codec.bit(x, y) for x, y in codec.pairs]

        self.assertTrue(check_atomic_adjunction(Q, atoms).ok)

        # Swapping two entries of the left residual breaks the adjunction.
        ldd = [list(row) for row in Q.ldd_table]
        ldd[0][1], ldd[0][2] = ldd[0][2], ldd[0][1]
        broken = Quantale(Q.lattice, Q.tensor, Q.unit, Q.involution, residuals=(ldd, Q.rdd_table), validate=False)

        self.assertFalse(check_adjunction(broken).ok)
        self.assertFalse(check_atomic_adjunction(broken, atoms).ok)


    def test_three_points(self):
        Q = make_rel(3)

        self.assertEqual(Q.n, 512)
        self.assertEqual(Q.multiply(Q.unit, Q.top), Q.top)


    def test_composition_order(self):
        codec = RelationCodec(2)
        first, second = codec.encode([(0, 1)]), codec.encode([(1, 0)])

        # 0 → 1 → 0
        self.assertEqual(codec.compose(second, first), codec.encode([(0, 0)]))
        self.assertEqual(make_rel(2).multiply(second, first), codec.encode([(0, 0)]))


    def test_converse_is_anti_multiplicative(self):
        codec = RelationCodec(2)
        for p, q in itertools.product(range(16), repeat=2):
            self.assertEqual(codec.converse(codec.compose(p, q)),
                codec.compose(codec.converse(q), codec.converse(p)))


    def test_size_bound(self):
        with self.assertRaises(TooLarge):
            make_rel(MAX_SET_SIZE + 1)


if __name__ == "__main__":
    unittest.main()
