#
# This file is part of quantale-tools.
#
"""
Quantaloids derived from a quantale: diagonals D(Q) and their restriction H(Q), back diagonals
B(Q) and their restriction K(Q).

Arrows are kept as plain elements of the base quantale. A hom-set is the subset of elements
passing the membership predicate for its pair of objects; back-diagonal hom-sets carry the
reversed order of the base.
"""

import logging
import itertools
import unittest

from dataclasses import dataclass
from functools   import reduce

from ..types            import QuantaloidKind, ValidationReport
from ..types.lattice    import ElementSubset
from ..types.quantale   import is_hermitian, subquantale
from ..errors           import NotInvolutive, QuantaleError, TooLarge, TypeMismatch


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Diagonal:
    """ A diagonal d: p ⇒ q. """

    src:   object
    tgt:   object
    value: object


@dataclass(frozen=True)
class BackDiagonal:
    """ A back diagonal b: p ⇝ q. """

    src:   object
    tgt:   object
    value: object


def is_diagonal(quantale, p, q, d):
    """ Returns true iff (d⧸p)⊗p = d = q⊗(q⇘d). """
    Q = quantale
    return Q.multiply(Q.ldd(d, p), p) == d == Q.multiply(q, Q.rdd(q, d))


def is_back_diagonal(quantale, p, q, b):
    """ Returns true iff p⧸(b⇘p) = b = (q⧸b)⇘q. """
    Q = quantale
    return Q.ldd(p, Q.rdd(b, p)) == b == Q.rdd(Q.ldd(q, b), q)


def diagonals(quantale, p, q):
    """ Returns every diagonal from p to q. """
    return ElementSubset.of(quantale.lattice,
        (d for d in quantale.elements() if is_diagonal(quantale, p, q, d)))


def back_diagonals(quantale, p, q):
    """ Returns every back diagonal from p to q. """
    return ElementSubset.of(quantale.lattice,
        (b for b in quantale.elements() if is_back_diagonal(quantale, p, q, b)))


def diamond(quantale, q, d, e):
    """ Returns the composite e⋄d = (e⧸q)⊗d of diagonals d: p ⇒ q and e: q ⇒ r. """
    return quantale.multiply(quantale.ldd(e, q), d)


def diamond_alternative(quantale, q, d, e):
    """ Returns e⊗(q⇘d), which agrees with e⋄d on diagonals. """
    return quantale.multiply(e, quantale.rdd(q, d))


def bullet(quantale, q, b, c):
    """ Returns the composite c•b = b⧸(c⇘q) of back diagonals b: p ⇝ q and c: q ⇝ r. """
    return quantale.ldd(b, quantale.rdd(c, q))


def bullet_alternative(quantale, q, b, c):
    """ Returns (q⧸b)⇘c, which agrees with c•b on back diagonals. """
    return quantale.rdd(quantale.ldd(q, b), c)


def compose_diagonal(quantale, d, e):
    """ Composes diagonals d: p ⇒ q and e: q ⇒ r into e⋄d: p ⇒ r. """
    if d.tgt != e.src:
        raise TypeMismatch("diagonals do not meet", witness=(d.tgt, e.src))
    return Diagonal(d.src, e.tgt, diamond(quantale, d.tgt, d.value, e.value))


def compose_back_diagonal(quantale, b, c):
    """ Composes back diagonals b: p ⇝ q and c: q ⇝ r into c•b: p ⇝ r. """
    if b.tgt != c.src:
        raise TypeMismatch("back diagonals do not meet", witness=(b.tgt, c.src))
    return BackDiagonal(b.src, c.tgt, bullet(quantale, b.tgt, b.value, c.value))


class SmallQuantaloid:
    """ One of the quantaloids D(Q), H(Q), B(Q), K(Q) over a base quantale.

    Objects are elements of the base, and so are arrows; hom-sets are computed on demand and
    cached. Over a closed-form base, only the membership predicate and composition are available.

    Parameters:
        base       -- The base quantale.
        kind       -- A QuantaloidKind.
        objects    -- The objects to keep; all elements of a finite base by default.
        involutive -- True iff the base involution has been checked to lift to this quantaloid.
    """

    def __init__(self, base, kind, objects=None, involutive=False):
        self.base       = base
        self.kind       = QuantaloidKind.parse(kind)
        self.involutive = involutive

        if objects is not None:
            self.objects = tuple(objects)
        else:
            self.objects = tuple(base.elements()) if base.exhaustive else None

        self._homs = {}


    @property
    def name(self):
        return f"{self.kind.value}({self.base.name})"


    @property
    def reversed(self):
        return self.kind.reversed_order


    def contains(self, p, q, u):
        """ Returns true iff u is an arrow from p to q. """
        Q = self.base

        if self.reversed:
            if not is_back_diagonal(Q, p, q, u):
                return False
            return not self.kind.restricted or Q.le(Q.join(p, q), u)

        if not is_diagonal(Q, p, q, u):
            return False
        return not self.kind.restricted or Q.le(u, Q.meet(p, q))


    def hom(self, p, q):
        """ Returns the hom-set from p to q as a subset of the base. """
        if not self.base.exhaustive:
            raise TooLarge(f"{self.base.name} has no finite hom-sets")

        if (p, q) not in self._homs:
            self._homs[p, q] = ElementSubset.of(self.base.lattice,
                (u for u in self.base.elements() if self.contains(p, q, u)))

        return self._homs[p, q]


    def arrows(self, p, q):
        return self.hom(p, q).elements()


    @property
    def homs(self):
        """ Returns every hom-set, keyed by pairs of objects. """
        return {(p, q): self.hom(p, q) for p, q in itertools.product(self.objects, repeat=2)}


    def identity(self, q):
        return q


    def compose(self, u, v, via):
        """ Returns v∘u, for u: p → via and v: via → r. """
        if self.reversed:
            return bullet(self.base, via, u, v)
        return diamond(self.base, via, u, v)


    def local_le(self, u, v):
        return self.base.le(v, u) if self.reversed else self.base.le(u, v)


    def local_lt(self, u, v):
        return u != v and self.local_le(u, v)


    def local_join(self, u, v):
        return self.base.meet(u, v) if self.reversed else self.base.join(u, v)


    def local_bottom(self):
        """ Returns the least arrow of every hom-set: ⊥ for diagonals, ⊤ for back diagonals. """
        return self.base.top if self.reversed else self.base.bottom


    def local_sup(self, arrows):
        return reduce(self.local_join, arrows, self.local_bottom())


    def conjugate(self, u):
        return self.base.conjugate(u)


    def label(self, u):
        return self.base.label(u)


    def __repr__(self):
        return f"<SmallQuantaloid {self.name}>"


def build_quantaloid(quantale, kind, objects=None):
    """ Builds one of the derived quantaloids and checks that every hom-set is a complete lattice. """
    quantaloid = SmallQuantaloid(quantale, kind, objects)
    if quantaloid.objects is None:
        return quantaloid

    report = validate_homs(quantaloid)
    if not report.ok:
        violation = report.first()
        raise QuantaleError(f"{quantaloid.name}: {violation.axiom} fails", witness=violation.witness)

    logger.debug("built %s", quantaloid.name)
    return quantaloid


def build_DQ(quantale, objects=None):
    return build_quantaloid(quantale, QuantaloidKind.D, objects)


def build_HQ(quantale, objects=None):
    return build_quantaloid(quantale, QuantaloidKind.H, objects)


def build_BQ(quantale, objects=None):
    return build_quantaloid(quantale, QuantaloidKind.B, objects)


def build_KQ(quantale, objects=None):
    return build_quantaloid(quantale, QuantaloidKind.K, objects)


def validate_homs(quantaloid):
    """ Checks that each hom-set holds the local bottom and is closed under local binary joins. """
    K = quantaloid
    report = ValidationReport("hom-sets")

    for p, q in itertools.product(K.objects, repeat=2):
        hom = K.hom(p, q)
        report.require(K.local_bottom() in hom, "local-bottom", p, q)

        for u, v in itertools.combinations(hom.elements(), 2):
            report.require(K.local_join(u, v) in hom, "local-join-closure", p, q, u, v)

    for q in K.objects:
        report.require(K.identity(q) in K.hom(q, q), "identity-arrow", q)

    return report


def validate_quantaloid(quantaloid, objects=None, associativity=True, distributivity=True):
    """ Checks every quantaloid law on the given objects (all of them by default).

    Parameters:
        objects        -- The objects whose hom-sets, composable pairs and triples are checked.
        associativity  -- Also check associativity, which needs every composable triple of arrows.
        distributivity -- Also check that composition preserves local joins on both sides.
    """
    K = quantaloid
    objects = K.objects if objects is None else tuple(objects)

    report = ValidationReport("quantaloid")
    report.merge(validate_homs(SmallQuantaloid(K.base, K.kind, objects)))

    for p, q, r in itertools.product(objects, repeat=3):
        first, second, through = K.arrows(p, q), K.arrows(q, r), K.hom(p, r)

        for u, v in itertools.product(first, second):
            composite = K.compose(u, v, q)
            report.require(composite in through, "composition-closure", p, q, r, u, v)

        if not distributivity:
            continue

        for v in second:
            report.require(K.compose(K.local_bottom(), v, q) == K.local_bottom(), "bottom-left", p, q, r, v)
            for u, w in itertools.combinations(first, 2):
                report.require(K.compose(K.local_join(u, w), v, q) ==
                    K.local_join(K.compose(u, v, q), K.compose(w, v, q)), "distributivity-left", u, w, v)

        for u in first:
            report.require(K.compose(u, K.local_bottom(), q) == K.local_bottom(), "bottom-right", p, q, r, u)
            for v, w in itertools.combinations(second, 2):
                report.require(K.compose(u, K.local_join(v, w), q) ==
                    K.local_join(K.compose(u, v, q), K.compose(u, w, q)), "distributivity-right", u, v, w)

    for p, q in itertools.product(objects, repeat=2):
        for u in K.arrows(p, q):
            report.require(K.compose(K.identity(p), u, p) == u, "unit-right", p, q, u)
            report.require(K.compose(u, K.identity(q), q) == u, "unit-left", p, q, u)

    if associativity:
        for p, q, r, s in itertools.product(objects, repeat=4):
            for u, v, w in itertools.product(K.arrows(p, q), K.arrows(q, r), K.arrows(r, s)):
                report.require(K.compose(K.compose(u, v, q), w, r) == K.compose(u, K.compose(v, w, r), q),
                    "associativity", u, v, w)

    return report


@dataclass
class HomImplications:
    """ The implications between three hom-sets: v∘u ≤ w ⟺ v ≤ w↙u ⟺ u ≤ v↘w. """

    left:   dict
    right:  dict
    report: ValidationReport


def hom_implications(quantaloid, p, q, r):
    """ Computes w↙u for w: p → r, u: p → q, and v↘w for v: q → r, w: p → r, by scanning the
    local order, then checks the adjunction on every triple.
    """
    K = quantaloid
    first, second, through = K.arrows(p, q), K.arrows(q, r), K.arrows(p, r)

    left = {
        (w, u): K.local_sup([v for v in second if K.local_le(K.compose(u, v, q), w)])
        for w in through for u in first
    }
    right = {
        (v, w): K.local_sup([u for u in first if K.local_le(K.compose(u, v, q), w)])
        for v in second for w in through
    }

    report = ValidationReport("implications")
    for u, v, w in itertools.product(first, second, through):
        below = K.local_le(K.compose(u, v, q), w)
        report.require(below == K.local_le(v, left[w, u]), "left-adjunction", u, v, w)
        report.require(below == K.local_le(u, right[v, w]), "right-adjunction", u, v, w)

    return HomImplications(left, right, report)


def endo_quantale(quantaloid, q):
    """ Returns the hom-set from q to itself as a quantale, with a∘b as the product of a and b. """
    K = quantaloid
    keep_involution = K.involutive and is_hermitian(K.base, q)

    return subquantale(K.base, K.arrows(q, q), lambda a, b: K.compose(b, a, q), K.identity(q),
        leq=K.local_le, keep_involution=keep_involution,
        name=f"{K.name}({K.base.label(q)},{K.base.label(q)})")


def validate_involution(quantaloid, objects=None):
    """ Checks that the base involution lifts: arrows u: p → q go to u°: q° → p° contravariantly. """
    K = quantaloid
    objects = K.objects if objects is None else tuple(objects)
    report = ValidationReport("involution")

    for p, q in itertools.product(objects, repeat=2):
        arrows = K.arrows(p, q)

        for u in arrows:
            report.require(K.contains(K.conjugate(q), K.conjugate(p), K.conjugate(u)), "typing", p, q, u)
            report.require(K.conjugate(K.conjugate(u)) == u, "self-inverse", u)

        for u, v in itertools.combinations(arrows, 2):
            report.require(K.conjugate(K.local_join(u, v)) == K.local_join(K.conjugate(u), K.conjugate(v)),
                "join-preserving", u, v)

    for p, q, r in itertools.product(objects, repeat=3):
        for u, v in itertools.product(K.arrows(p, q), K.arrows(q, r)):
            report.require(K.conjugate(K.compose(u, v, q)) ==
                K.compose(K.conjugate(v), K.conjugate(u), K.conjugate(q)), "contravariance", u, v)

    return report


def lift_involution(quantaloid, quantale=None):
    """ Equips a derived quantaloid with the involution of its base quantale.

    Raises NotInvolutive if the base has no involution, or if the lifted one fails a law.
    """
    K = quantaloid
    base = quantale or K.base

    if not base.is_involutive:
        raise NotInvolutive(f"{base.name} has no involution")

    report = validate_involution(K)
    if not report.ok:
        violation = report.first()
        raise NotInvolutive(f"{K.name}: involution {violation.axiom} fails", witness=violation.witness)

    return SmallQuantaloid(base, K.kind, K.objects, involutive=True)


def hermitian_objects(quantaloid):
    """ Returns the full subquantaloid on the objects q with q = q°. """
    K = quantaloid
    objects = [q for q in K.objects if K.conjugate(q) == q]
    return SmallQuantaloid(K.base, K.kind, objects, involutive=K.involutive)


class QuantaloidTest(unittest.TestCase):

    def setUp(self):
        from ..zoo import make_boolean, make_chain_tnorm, make_c3, make_rel
        from ..types import TNorm

        self.c3      = make_c3()
        self.luk4    = make_chain_tnorm(3, TNorm.LUKASIEWICZ)
        self.luk5    = make_chain_tnorm(4, TNorm.LUKASIEWICZ)
        self.godel3  = make_chain_tnorm(2, TNorm.GODEL)
        self.nilmin5 = make_chain_tnorm(4, TNorm.NILPOTENT_MINIMUM)
        self.square  = make_boolean(2)
        self.rel2    = make_rel(2)

        self.zoo = [self.c3, self.luk4, self.luk5, self.godel3, self.nilmin5, self.square, self.rel2]


    def labels(self, subset):
        return set(subset.labels())


    def test_bottom_is_always_a_diagonal_and_top_a_back_diagonal(self):
        for Q in self.zoo:
            for p, q in itertools.product(Q.elements(), repeat=2):
                self.assertIn(Q.bottom, diagonals(Q, p, q))
                self.assertIn(Q.top, back_diagonals(Q, p, q))
            for q in Q.elements():
                self.assertIn(q, diagonals(Q, q, q))


    def test_divisible_diagonals_are_a_downset(self):
        Q = self.luk5
        for p, q in itertools.product(Q.elements(), repeat=2):
            expected = {d for d in Q.elements() if Q.le(d, Q.meet(p, q))}
            self.assertEqual(set(diagonals(Q, p, q)), expected)
            self.assertEqual(set(build_HQ(Q).hom(p, q)), expected)


    def test_c3_hom_sets(self):
        Q = self.c3
        bot, k, top = (Q.element(name) for name in ("bot", "k", "top"))
        H, K = build_HQ(Q), build_KQ(Q)

        self.assertEqual(self.labels(H.hom(top, top)), {"bot", "top"})
        self.assertEqual(self.labels(H.hom(k, k)), {"bot", "k"})
        # ⊤ is a diagonal from k to ⊤, but lies above k∧⊤ = k.
        self.assertEqual(self.labels(diagonals(Q, k, top)), {"bot", "top"})

        for q in Q.elements():
            self.assertEqual(self.labels(H.hom(bot, q)), {"bot"})
            self.assertEqual(self.labels(H.hom(q, bot)), {"bot"})
            self.assertEqual(self.labels(K.hom(top, q)), {"top"})
            self.assertEqual(self.labels(K.hom(q, top)), {"top"})

        self.assertEqual(self.labels(H.hom(k, top)), {"bot"})
        self.assertEqual(self.labels(H.hom(top, k)), {"bot"})
        self.assertEqual(self.labels(K.hom(k, bot)), {"top"})
        self.assertEqual(self.labels(K.hom(bot, k)), {"top"})
        self.assertEqual(self.labels(K.hom(bot, bot)), {"bot", "top"})
        self.assertEqual(self.labels(K.hom(k, k)), {"k", "top"})


    def test_back_diagonals_at_bottom_are_regular(self):
        from ..types.quantale import regular_elements

        for Q in self.zoo:
            self.assertEqual(back_diagonals(Q, Q.bottom, Q.bottom), regular_elements(Q))


    def test_composition_with_identities(self):
        Q = self.godel3
        for p, q in itertools.product(Q.elements(), repeat=2):
            for d in diagonals(Q, p, q):
                arrow = Diagonal(p, q, d)
                self.assertEqual(compose_diagonal(Q, arrow, Diagonal(q, q, q)), arrow)
                self.assertEqual(compose_diagonal(Q, Diagonal(p, p, p), arrow), arrow)

            for b in back_diagonals(Q, p, q):
                arrow = BackDiagonal(p, q, b)
                self.assertEqual(compose_back_diagonal(Q, arrow, BackDiagonal(q, q, q)), arrow)


    def test_composites_agree_and_are_arrows(self):
        Q = self.godel3
        for p, q, r in itertools.product(Q.elements(), repeat=3):
            for d, e in itertools.product(diagonals(Q, p, q), diagonals(Q, q, r)):
                self.assertEqual(diamond(Q, q, d, e), diamond_alternative(Q, q, d, e))
                self.assertTrue(is_diagonal(Q, p, r, diamond(Q, q, d, e)))

            for b, c in itertools.product(back_diagonals(Q, p, q), back_diagonals(Q, q, r)):
                self.assertEqual(bullet(Q, q, b, c), bullet_alternative(Q, q, b, c))
                self.assertTrue(is_back_diagonal(Q, p, r, bullet(Q, q, b, c)))


    def test_mismatched_composites_are_rejected(self):
        Q = self.godel3
        with self.assertRaises(TypeMismatch):
            compose_diagonal(Q, Diagonal(0, 1, 0), Diagonal(2, 2, 0))
        with self.assertRaises(TypeMismatch):
            compose_back_diagonal(Q, BackDiagonal(0, 1, 2), BackDiagonal(2, 2, 2))


    def test_lawvere_composites(self):
        from fractions import Fraction
        from ..zoo.intervals import make_lawvere

        Q = make_lawvere()
        d = Diagonal(Fraction(2), Fraction(3), Fraction(4))
        e = Diagonal(Fraction(3), Fraction(7), Fraction(7))
        self.assertEqual(compose_diagonal(Q, d, e).value, Fraction(8))
        self.assertEqual(diamond_alternative(Q, Fraction(3), d.value, e.value), Fraction(8))

        b = BackDiagonal(Fraction(1), Fraction(2), Fraction(1))
        c = BackDiagonal(Fraction(2), Fraction(3), Fraction(2))
        self.assertEqual(compose_back_diagonal(Q, b, c).value, Fraction(1))

        H = SmallQuantaloid(Q, QuantaloidKind.H)
        self.assertTrue(H.contains(d.src, d.tgt, d.value))
        self.assertFalse(H.contains(Fraction(2), Fraction(3), Fraction(1)))


    def test_back_composition_preserves_infima(self):
        for Q in (self.godel3, self.luk4, self.c3):
            B = build_BQ(Q)
            report = validate_quantaloid(B, associativity=False)
            self.assertTrue(report.ok, report.violations)


    def test_derived_quantaloids_validate(self):
        for Q in (self.c3, self.godel3, self.luk4):
            for kind in QuantaloidKind:
                with self.subTest(quantale=Q.name, kind=kind):
                    report = validate_quantaloid(build_quantaloid(Q, kind))
                    self.assertTrue(report.ok, report.violations)


    def test_integral_restrictions_change_nothing(self):
        for Q in (self.luk5, self.godel3, self.nilmin5, self.square):
            self.assertEqual(build_HQ(Q).homs, build_DQ(Q).homs)
            self.assertEqual(build_KQ(Q).homs, build_BQ(Q).homs)


    def test_unit_endo_quantale_is_the_base(self):
        for Q in self.zoo:
            endo = endo_quantale(build_DQ(Q), Q.unit)
            self.assertEqual(endo.tensor, Q.tensor)
            self.assertEqual(endo.lattice.leq, Q.lattice.leq)


    def test_back_diagonal_endo_quantale_of_godel(self):
        from ..types.quantale import find_quantale_isomorphism
        from ..zoo import make_boolean

        endo = endo_quantale(build_BQ(self.godel3), self.godel3.bottom)
        self.assertIsNotNone(find_quantale_isomorphism(endo, make_boolean(1)))


    def test_implications_against_identity(self):
        Q = self.luk4
        D = build_DQ(Q)
        for p, q in itertools.product(Q.elements(), repeat=2):
            implications = hom_implications(D, p, p, q)
            self.assertTrue(implications.report.ok)

            for w in D.arrows(p, q):
                self.assertEqual(implications.left[w, D.identity(p)], w)


    def test_back_diagonal_implications_closed_form(self):
        for Q in (self.godel3, self.luk4, self.c3, self.square):
            B = build_BQ(Q)

            for q in Q.elements():
                implications = hom_implications(B, q, q, q)
                self.assertTrue(implications.report.ok)

                for w, u in itertools.product(B.arrows(q, q), repeat=2):
                    self.assertEqual(implications.left[w, u], Q.ldd(q, Q.rdd(w, u)))


    def test_c3_restricted_implication(self):
        Q = self.c3
        k, top = Q.element("k"), Q.element("top")
        implications = hom_implications(build_KQ(Q), k, k, k)

        # In K(k,k) the scan is cut off at k: the unrestricted value q⧸(b′⇘b) is ⊥.
        self.assertEqual(Q.ldd(k, Q.rdd(top, top)), Q.bottom)
        self.assertEqual(implications.left[top, top], Q.join(k, Q.ldd(k, Q.rdd(top, top))))


    def test_lifted_involutions(self):
        H = lift_involution(build_HQ(self.luk4))
        self.assertTrue(H.involutive)
        self.assertEqual([H.conjugate(q) for q in H.objects], list(H.objects))

        rel = lift_involution(build_HQ(self.rel2))
        self.assertTrue(validate_involution(rel).ok)

        hermitian = hermitian_objects(rel)
        self.assertEqual(set(hermitian.objects),
            {q for q in self.rel2.elements() if self.rel2.conjugate(q) == q})


    def test_lifting_needs_an_involution(self):
        from ..types.lattice import chain_lattice
        from ..types.quantale import Quantale

        lattice = chain_lattice(["0", "1"])
        bare = Quantale(lattice, lattice.meet, lattice.top)

        with self.assertRaises(NotInvolutive):
            lift_involution(build_DQ(bare))


if __name__ == "__main__":
    unittest.main()
