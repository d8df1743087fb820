#
# This file is part of quantale-tools.
#
"""
Finite quantales: a lattice with an associative, unital multiplication that distributes over
joins, its two residuals, an optional involution, and the constructions derived from them.
"""

import logging
import itertools
import unittest

from dataclasses import dataclass, field
from functools   import cached_property

from .         import ValidationReport
from .lattice  import ElementSubset, order_isomorphisms, restrict, sup, upset, validate_lattice
from ..errors  import (DimensionMismatch, NotALattice, NotAQuantale, NotIntegral, NotCyclic,
                       NotDualizing, NotInvolutive)


logger = logging.getLogger(__name__)


# Names that can always be used to refer to the distinguished elements of a quantale.
LABEL_ALIASES = {
    'bot':    'bottom',
    'bottom': 'bottom',
    '⊥':      'bottom',
    'top':    'top',
    '⊤':      'top',
    'k':      'unit',
    'unit':   'unit',
}


class Quantale:
    """ A finite quantale, stored as tables over the element indices of its lattice.

    Constructing a Quantale validates every quantale law and caches both residual tables;
    instances are treated as immutable afterwards.

    Parameters:
        lattice    -- The underlying FiniteLattice.
        tensor     -- An n×n table, with tensor[p][q] holding p⊗q.
        unit       -- The unit element k.
        involution -- An optional n-vector holding q° for each element q.
        name       -- A display name, e.g. "lukasiewicz:5".
        embedding  -- For quantales carved out of another quantale: the ambient element behind each element.
        residuals  -- Optional precomputed (ldd, rdd) tables, for families with closed-form residuals.
        validate   -- False skips the law checks; only for families whose laws hold by construction.
    """

    exhaustive = True

    def __init__(self, lattice, tensor, unit, involution=None, name=None, embedding=None,
            residuals=None, validate=True):
        self.lattice    = lattice
        self.tensor     = tuple(tuple(row) for row in tensor)
        self.unit       = unit
        self.involution = tuple(involution) if involution is not None else None
        self.name       = name or f"quantale({lattice.n})"
        self.embedding  = tuple(embedding) if embedding is not None else None

        self.ldd_table  = None
        self.rdd_table  = None

        if residuals is not None:
            self.ldd_table, self.rdd_table = (tuple(tuple(row) for row in table) for table in residuals)

            if validate:
                _raise_on_violation(self, validate_quantale(self))
        else:
            compute_residuals(self, validate=validate)


    @classmethod
    def from_operation(cls, lattice, operation, unit, involution=None, name=None, embedding=None):
        """ Creates a quantale whose tensor is given by a function on element indices. """
        tensor = [[operation(p, q) for q in lattice.elements()] for p in lattice.elements()]
        return cls(lattice, tensor, unit, involution=involution, name=name, embedding=embedding)


    @property
    def n(self):
        return self.lattice.n

    @property
    def bottom(self):
        return self.lattice.bottom

    @property
    def top(self):
        return self.lattice.top

    @property
    def labels(self):
        return self.lattice.labels

    @property
    def is_involutive(self):
        return self.involution is not None


    def elements(self):
        return self.lattice.elements()


    def le(self, a, b):
        return self.lattice.leq[a][b]


    def lt(self, a, b):
        return a != b and self.lattice.leq[a][b]


    def join(self, a, b):
        return self.lattice.join[a][b]


    def meet(self, a, b):
        return self.lattice.meet[a][b]


    def sup(self, elements):
        return sup(self.lattice, elements)


    def multiply(self, p, q):
        return self.tensor[p][q]


    def ldd(self, r, q):
        """ Returns the left implication r⧸q, the largest p with p⊗q ≤ r. """
        return self.ldd_table[r][q]


    def rdd(self, p, r):
        """ Returns the right implication p⇘r, the largest q with p⊗q ≤ r. """
        return self.rdd_table[p][r]


    def conjugate(self, q):
        """ Returns q°. Raises NotInvolutive if this quantale carries no involution. """
        if self.involution is None:
            raise NotInvolutive(f"{self.name} has no involution")
        return self.involution[q]


    def label(self, a):
        return self.lattice.label(a)


    def element(self, label):
        """ Resolves an element from its label, an alias such as 'bot', 'top' or 'k', or its index. """
        if isinstance(label, int):
            if not 0 <= label < self.n:
                raise KeyError(f"{self.name} has no element {label}")
            return label

        label = str(label)
        if label in self.labels:
            return self.labels.index(label)

        alias = LABEL_ALIASES.get(label.lower())
        if alias is None:
            raise KeyError(f"{self.name} has no element {label!r}")

        return getattr(self, alias)


    @cached_property
    def profile(self):
        return classify(self)


    def _key(self):
        return (self.lattice, self.tensor, self.unit, self.involution)


    def __eq__(self, other):
        if not isinstance(other, Quantale):
            return NotImplemented
        return self._key() == other._key()


    def __hash__(self):
        return hash(self._key())


    def __repr__(self):
        return f"<Quantale {self.name} with {self.n} elements>"


@dataclass
class PropertyProfile:
    """ The structural properties of a quantale; every false flag comes with a counterexample. """

    FLAGS = ('commutative', 'integral', 'divisible', 'idempotent', 'frame', 'mv', 'girard')

    commutative: bool
    integral:    bool
    divisible:   bool
    idempotent:  bool
    frame:       bool
    mv:          bool
    girard:      bool

    witnesses:          dict  = field(default_factory=dict)
    dualizing_elements: tuple = ()
    cyclic_dualizing:   int   = None


    def flags(self):
        return {name: getattr(self, name) for name in self.FLAGS}


def validate_quantale(quantale):
    """ Checks the quantale laws exhaustively, including those of its lattice and involution. """

    n = quantale.n
    report = ValidationReport("quantale")
    report.merge(validate_lattice(quantale.lattice), prefix="lattice")

    if len(quantale.tensor) != n or any(len(row) != n for row in quantale.tensor):
        raise DimensionMismatch(f"tensor table must be {n}x{n}")
    if not 0 <= quantale.unit < n:
        raise DimensionMismatch("unit must be an element", witness=(quantale.unit,))
    for p, q in itertools.product(range(n), repeat=2):
        if not 0 <= quantale.tensor[p][q] < n:
            raise DimensionMismatch("tensor table holds a non-element", witness=(p, q))

    # Residuals and joins are meaningless on a broken lattice.
    if not report.ok:
        return report

    t, join, k, bottom = quantale.tensor, quantale.lattice.join, quantale.unit, quantale.bottom

    for q in range(n):
        report.require(t[k][q] == q, "unit-left", q)
        report.require(t[q][k] == q, "unit-right", q)
        report.require(t[q][bottom] == bottom, "bottom-right", q)
        report.require(t[bottom][q] == bottom, "bottom-left", q)

    for p, q, r in itertools.product(range(n), repeat=3):
        report.require(t[t[p][q]][r] == t[p][t[q][r]], "associativity", p, q, r)
        report.require(t[p][join[q][r]] == join[t[p][q]][t[p][r]], "distributivity-left", p, q, r)
        report.require(t[join[q][r]][p] == join[t[q][p]][t[r][p]], "distributivity-right", p, q, r)

    if quantale.involution is not None:
        report.merge(_validate_involution(quantale), prefix="involution")

    return report


def _validate_involution(quantale):
    n, inv = quantale.n, quantale.involution
    report = ValidationReport("involution")

    if len(inv) != n or any(not 0 <= v < n for v in inv):
        raise DimensionMismatch(f"involution must map {n} elements to elements")

    t, join = quantale.tensor, quantale.lattice.join

    report.require(inv[quantale.unit] == quantale.unit, "unit", quantale.unit)
    report.require(inv[quantale.bottom] == quantale.bottom, "bottom", quantale.bottom)

    for q in range(n):
        report.require(inv[inv[q]] == q, "self-inverse", q)

    for p, q in itertools.product(range(n), repeat=2):
        report.require(inv[t[p][q]] == t[inv[q]][inv[p]], "anti-multiplicative", p, q)
        report.require(inv[join[p][q]] == join[inv[p]][inv[q]], "join-preserving", p, q)

    return report


def _raise_on_violation(quantale, report):
    if not report.ok:
        violation = report.first()
        error = NotALattice if violation.axiom.startswith("lattice.") else NotAQuantale
        raise error(f"{quantale.name}: {violation.axiom} fails", witness=violation.witness)


def compute_residuals(quantale, validate=True):
    """ Validates a quantale and caches both of its residual tables.

    Raises NotALattice or NotAQuantale, with a witness, if any law fails.
    """
    if validate:
        _raise_on_violation(quantale, validate_quantale(quantale))

    n, t, le = quantale.n, quantale.tensor, quantale.lattice.leq
    lattice = quantale.lattice

    quantale.ldd_table = tuple(
        tuple(sup(lattice, (p for p in range(n) if le[t[p][q]][r])) for q in range(n))
        for r in range(n)
    )
    quantale.rdd_table = tuple(
        tuple(sup(lattice, (q for q in range(n) if le[t[p][q]][r])) for r in range(n))
        for p in range(n)
    )

    logger.debug("computed residuals of %s", quantale.name)
    return quantale


def check_adjunction(quantale):
    """ Checks p⊗q ≤ r ⟺ p ≤ r⧸q ⟺ q ≤ p⇘r for every triple. """
    report = ValidationReport("adjunction")

    for p, q, r in itertools.product(quantale.elements(), repeat=3):
        below = quantale.le(quantale.multiply(p, q), r)
        report.require(below == quantale.le(p, quantale.ldd(r, q)), "left-adjunction", p, q, r)
        report.require(below == quantale.le(q, quantale.rdd(p, r)), "right-adjunction", p, q, r)

    return report


def _counterexample(candidates, predicate):
    """ Returns the first candidate tuple on which the predicate fails, or None. """
    for candidate in candidates:
        if not predicate(*candidate):
            return tuple(candidate)
    return None


def cyclic_witness(quantale, m):
    """ Returns an element q with m⧸q ≠ q⇘m, or None if m is cyclic. """
    return next((q for q in quantale.elements() if quantale.ldd(m, q) != quantale.rdd(q, m)), None)


def dualizing_witness(quantale, m):
    """ Returns an element q with (m⧸q)⇘m ≠ q or m⧸(q⇘m) ≠ q, or None if m is dualizing. """
    for q in quantale.elements():
        if quantale.rdd(quantale.ldd(m, q), m) != q or quantale.ldd(m, quantale.rdd(q, m)) != q:
            return q
    return None


def is_cyclic(quantale, m):
    return cyclic_witness(quantale, m) is None


def is_dualizing(quantale, m):
    return dualizing_witness(quantale, m) is None


def find_cyclic_dualizing(quantale):
    """ Returns every cyclic dualizing element; the quantale is Girard iff there is one. """
    return [m for m in quantale.elements() if is_cyclic(quantale, m) and is_dualizing(quantale, m)]


def is_hermitian(quantale, q):
    return quantale.conjugate(q) == q


def hermitian_elements(quantale):
    return [q for q in quantale.elements() if is_hermitian(quantale, q)]


def classify(quantale):
    """ Computes the PropertyProfile of a quantale by exhaustive checking. """

    if not quantale.exhaustive:
        return quantale.profile

    Q = quantale
    elements = list(Q.elements())
    pairs = list(itertools.product(elements, repeat=2))
    witnesses = {}

    def record(flag, witness):
        if witness is not None:
            witnesses[flag] = witness
        return witness is None

    commutative = record('commutative',
        _counterexample(pairs, lambda p, q: Q.multiply(p, q) == Q.multiply(q, p)))

    integral = record('integral', None if Q.unit == Q.top else (Q.unit,))

    divisible = record('divisible', _counterexample(
        ((u, q) for u, q in pairs if Q.le(u, q)),
        lambda u, q: Q.multiply(Q.ldd(u, q), q) == u == Q.multiply(q, Q.rdd(q, u))
    ))

    idempotent = record('idempotent', _counterexample(((q,) for q in elements),
        lambda q: Q.multiply(q, q) == q))

    meet_witness = _counterexample(pairs, lambda p, q: Q.multiply(p, q) == Q.meet(p, q))
    frame = record('frame', meet_witness if meet_witness is not None else witnesses.get('integral'))

    # The MV law is stated for commutative quantales only.
    if commutative:
        mv_witness = _counterexample(pairs,
            lambda p, q: Q.rdd(Q.rdd(p, q), q) == Q.join(p, q))
    else:
        mv_witness = witnesses['commutative']
    mv = record('mv', mv_witness)

    candidates = find_cyclic_dualizing(Q)
    girard = bool(candidates)
    if not girard:
        witnesses['girard'] = tuple(
            (m, cyclic_witness(Q, m) if not is_cyclic(Q, m) else dualizing_witness(Q, m))
            for m in elements
        )

    profile = PropertyProfile(commutative, integral, divisible, idempotent, frame, mv, girard,
        witnesses=witnesses, dualizing_elements=tuple(candidates),
        cyclic_dualizing=_preferred_dualizing(Q, candidates))

    logger.debug("classified %s: %s", Q.name, profile.flags())
    return profile


def _preferred_dualizing(quantale, candidates):
    """ Picks the cyclic dualizing element to report: ⊥, then k, then a hermitian one. """
    if not candidates:
        return None

    for preferred in (quantale.bottom, quantale.unit):
        if preferred in candidates:
            return preferred

    if quantale.is_involutive:
        for m in candidates:
            if is_hermitian(quantale, m):
                return m

    return candidates[0]


def negations(quantale, q):
    """ Returns the left and right negations (⊥⧸q, q⇘⊥) of an element. """
    return quantale.ldd(quantale.bottom, q), quantale.rdd(q, quantale.bottom)


def require_cyclic_dualizing(quantale, m):
    """ Raises NotDualizing unless m is a cyclic dualizing element. """
    witness = cyclic_witness(quantale, m)
    if witness is None:
        witness = dualizing_witness(quantale, m)

    if witness is not None:
        raise NotDualizing(f"{quantale.label(m)} is not cyclic and dualizing in {quantale.name}",
            witness=(m, witness))


def linear_negation(quantale, m, q, check=True):
    """ Returns the linear negation q^⊥ = m⧸q with respect to a cyclic dualizing element m. """
    if check:
        require_cyclic_dualizing(quantale, m)
    return quantale.ldd(m, q)


def regular_elements(quantale, r=None):
    """ Returns the elements regular with respect to r, i.e. r⧸(q⇘r) = q = (r⧸q)⇘r. """
    r = quantale.bottom if r is None else r
    Q = quantale

    return ElementSubset.of(Q.lattice, (
        q for q in Q.elements()
        if Q.ldd(r, Q.rdd(q, r)) == q == Q.rdd(Q.ldd(r, q), r)
    ))


def subquantale(quantale, elements, multiply, unit, leq=None, keep_involution=False, name=None):
    """ Builds a quantale carried by some of the elements of another one.

    Parameters:
        quantale        -- The ambient quantale.
        elements        -- The carrier, as ambient elements.
        multiply        -- The new multiplication, as a function on ambient elements.
        unit            -- The new unit, as an ambient element.
        leq             -- The new order on ambient elements; defaults to the ambient one.
        keep_involution -- True iff the ambient involution restricts to the carrier.
    """
    lattice, embedding = restrict(quantale.lattice, elements, leq)
    position = {a: i for i, a in enumerate(embedding)}

    def locate(value, *witness):
        try:
            return position[value]
        except KeyError:
            raise NotAQuantale("operation leaves its carrier", witness=witness)

    tensor = [[locate(multiply(a, b), a, b) for b in embedding] for a in embedding]

    involution = None
    if keep_involution and quantale.is_involutive:
        involution = [locate(quantale.conjugate(a), a) for a in embedding]

    return Quantale(lattice, tensor, locate(unit, unit), involution, name=name, embedding=embedding)


def relative_quantale(quantale, r):
    """ Builds the quantale on ↑r with p⊗_r q = (p⊗q)∨r and unit ⊤. Raises NotIntegral on a non-integral base. """
    Q = quantale

    if Q.unit != Q.top:
        raise NotIntegral(f"{Q.name} is not integral", witness=(Q.unit,))

    hermitian = Q.is_involutive and is_hermitian(Q, r)
    return subquantale(Q, upset(Q.lattice, r).elements(),
        lambda p, q: Q.join(Q.multiply(p, q), r), Q.top,
        keep_involution=hermitian, name=f"{Q.name}↑{Q.label(r)}")


def nucleus(quantale, q):
    """ Returns the map j(a) = (a⇘q)⇘q as a tuple indexed by element. """
    return tuple(quantale.rdd(quantale.rdd(a, q), q) for a in quantale.elements())


def check_nucleus(quantale, q):
    """ Checks that j = ((−)⇘q)⇘q is monotone, inflationary, idempotent and lax multiplicative. """
    Q, j = quantale, nucleus(quantale, q)
    report = ValidationReport("nucleus")

    for a in Q.elements():
        report.require(Q.le(a, j[a]), "inflationary", a)
        report.require(j[j[a]] == j[a], "idempotent", a)

    for a, b in itertools.product(Q.elements(), repeat=2):
        if Q.le(a, b):
            report.require(Q.le(j[a], j[b]), "monotone", a, b)
        report.require(Q.le(Q.multiply(j[a], j[b]), j[Q.multiply(a, b)]), "lax-multiplicative", a, b)

    return report


def nucleus_quotient(quantale, q):
    """ Builds the quotient of a quantale by the nucleus ((−)⇘q)⇘q, for a cyclic element q.

    The carrier is the set of fixed points of the nucleus, multiplied by b⊗_j c = j(b⊗c), with
    unit q⇘q.
    """
    Q = quantale

    witness = cyclic_witness(Q, q)
    if witness is not None:
        raise NotCyclic(f"{Q.label(q)} is not cyclic in {Q.name}", witness=(q, witness))

    report = check_nucleus(Q, q)
    if not report.ok:
        violation = report.first()
        raise NotAQuantale(f"nucleus law {violation.axiom} fails", witness=violation.witness)

    j = nucleus(Q, q)
    fixed = [a for a in Q.elements() if j[a] == a]
    hermitian = Q.is_involutive and is_hermitian(Q, q)

    return subquantale(Q, fixed, lambda a, b: j[Q.multiply(a, b)], Q.rdd(q, q),
        keep_involution=hermitian, name=f"{Q.name}/j{Q.label(q)}")


def dual_quantale(quantale, m):
    """ Builds the dual quantale: the reversed order, p⊗ᵈq = (p^⊥⊗q^⊥)^⊥, and unit m. """
    Q = quantale
    require_cyclic_dualizing(Q, m)

    def perp(a):
        return Q.ldd(m, a)

    tensor = [[perp(Q.multiply(perp(p), perp(q))) for q in Q.elements()] for p in Q.elements()]

    involution = None
    if Q.is_involutive and is_hermitian(Q, m):
        involution = Q.involution

    return Quantale(Q.lattice.dual(), tensor, m, involution, name=f"{Q.name}ᵈ", embedding=Q.embedding)


def is_quantale_isomorphism(source, target, mapping):
    """ Returns true iff the element mapping is an isomorphism of quantales between source and target. """

    if source.n != target.n or sorted(mapping[a] for a in source.elements()) != list(target.elements()):
        return False

    if mapping[source.unit] != target.unit:
        return False

    for p, q in itertools.product(source.elements(), repeat=2):
        if source.le(p, q) != target.le(mapping[p], mapping[q]):
            return False
        if mapping[source.multiply(p, q)] != target.multiply(mapping[p], mapping[q]):
            return False

    return True


def find_quantale_isomorphism(source, target):
    """ Searches for an isomorphism between two finite quantales; returns it as a dict, or None. """
    if source.n != target.n:
        return None

    for mapping in order_isomorphisms(source.elements(), source.lt, target.elements(), target.lt):
        if is_quantale_isomorphism(source, target, mapping):
            return mapping

    return None


class QuantaleTest(unittest.TestCase):

    def setUp(self):
        from ..zoo import make_boolean, make_chain_tnorm, make_c3, make_rel
        from .     import TNorm

        self.two       = make_boolean(1)
        self.square    = make_boolean(2)
        self.cube      = make_boolean(3)
        self.c3        = make_c3()
        self.luk5      = make_chain_tnorm(4, TNorm.LUKASIEWICZ)
        self.godel3    = make_chain_tnorm(2, TNorm.GODEL)
        self.godel4    = make_chain_tnorm(3, TNorm.GODEL)
        self.nilmin5   = make_chain_tnorm(4, TNorm.NILPOTENT_MINIMUM)
        self.rel2      = make_rel(2)

        self.zoo = [self.two, self.square, self.cube, self.c3, self.luk5, self.godel3,
            self.godel4, self.nilmin5, self.rel2]


    def el(self, quantale, label):
        return quantale.element(label)


    def test_residuals_of_boolean_two(self):
        Q = self.two
        zero, one = Q.bottom, Q.top

        self.assertEqual(Q.ldd(zero, one), zero)
        self.assertEqual(Q.ldd(one, zero), one)


    def test_residuals_of_c3(self):
        Q = self.c3
        bot, k, top = Q.element("bot"), Q.element("k"), Q.element("top")

        self.assertEqual(Q.rdd(top, bot), bot)
        self.assertEqual(Q.rdd(top, k), bot)
        self.assertEqual(Q.rdd(top, top), top)


    def test_residuals_of_lukasiewicz(self):
        Q = self.luk5
        self.assertEqual(Q.rdd(self.el(Q, "3/4"), self.el(Q, "1/4")), self.el(Q, "1/2"))


    def test_adjunction_holds_on_the_zoo(self):
        for quantale in self.zoo:
            with self.subTest(quantale=quantale.name):
                self.assertTrue(check_adjunction(quantale).ok)


    def test_broken_associativity_is_rejected(self):
        lattice = self.godel3.lattice
        zero, half, one = 0, 1, 2

        # Unital and bottom-preserving, but ½⊗½ = 1 lies above ½⊗1 = ½.
        tensor = [
            [zero, zero, zero],
            [zero, one,  half],
            [zero, half, one],
        ]
        with self.assertRaises(NotAQuantale) as context:
            Quantale(lattice, tensor, one)

        self.assertIsNotNone(context.exception.witness)


    def test_classify_lukasiewicz(self):
        profile = classify(self.luk5)

        self.assertTrue(profile.commutative)
        self.assertTrue(profile.integral)
        self.assertTrue(profile.divisible)
        self.assertTrue(profile.mv)
        self.assertTrue(profile.girard)
        self.assertEqual(profile.cyclic_dualizing, self.luk5.bottom)


    def test_classify_godel(self):
        profile = classify(self.godel3)

        self.assertTrue(profile.frame)
        self.assertTrue(profile.divisible)
        self.assertFalse(profile.girard)
        self.assertIn('girard', profile.witnesses)


    def test_classify_c3(self):
        profile = classify(self.c3)

        self.assertTrue(profile.commutative)
        self.assertFalse(profile.integral)
        self.assertEqual(profile.witnesses['integral'], (self.c3.unit,))
        self.assertTrue(profile.girard)
        self.assertEqual(profile.cyclic_dualizing, self.c3.unit)


    def test_profile_implications(self):
        for quantale in self.zoo:
            profile = quantale.profile

            with self.subTest(quantale=quantale.name):
                if profile.divisible:
                    self.assertTrue(profile.integral)
                if profile.mv:
                    self.assertTrue(profile.divisible)
                if profile.girard:
                    self.assertIsNotNone(profile.cyclic_dualizing)

                for flag, value in profile.flags().items():
                    if not value:
                        self.assertIn(flag, profile.witnesses)


    def test_negations(self):
        for quantale in self.zoo:
            self.assertEqual(negations(quantale, quantale.bottom)[0], quantale.top)

        Q = self.c3
        bot, k, top = Q.element("bot"), Q.element("k"), Q.element("top")
        self.assertEqual(negations(Q, k), (bot, bot))
        self.assertEqual(negations(Q, top), (bot, bot))
        self.assertEqual(negations(Q, bot), (top, top))

        G = self.godel3
        self.assertEqual(negations(G, self.el(G, "1/2"))[0], G.bottom)


    def test_cyclic_elements(self):
        for quantale in (self.luk5, self.godel3, self.c3):
            self.assertTrue(is_cyclic(quantale, quantale.bottom))

        self.assertTrue(is_cyclic(self.rel2, self.el(self.rel2, "{01,10}")))
        self.assertTrue(is_cyclic(self.c3, self.c3.unit))
        self.assertFalse(is_cyclic(self.rel2, self.rel2.unit))


    def test_dualizing_elements(self):
        self.assertTrue(is_dualizing(self.cube, self.cube.bottom))
        self.assertTrue(is_dualizing(self.nilmin5, self.nilmin5.bottom))

        self.assertFalse(is_dualizing(self.godel3, self.godel3.bottom))
        self.assertEqual(dualizing_witness(self.godel3, self.godel3.bottom), self.el(self.godel3, "1/2"))


    def test_find_cyclic_dualizing(self):
        self.assertEqual(find_cyclic_dualizing(self.square), [self.square.bottom])
        self.assertEqual(find_cyclic_dualizing(self.c3), [self.c3.unit])
        self.assertEqual(find_cyclic_dualizing(self.godel4), [])
        self.assertEqual(find_cyclic_dualizing(self.nilmin5), [self.nilmin5.bottom])
        self.assertIn(self.el(self.rel2, "{01,10}"), find_cyclic_dualizing(self.rel2))


    def test_rel_dualizing_element_is_hermitian(self):
        m = classify(self.rel2).cyclic_dualizing
        self.assertTrue(is_hermitian(self.rel2, m))


    def test_linear_negation(self):
        for quantale in (self.luk5, self.c3, self.rel2, self.square):
            m = quantale.profile.cyclic_dualizing
            negated = [linear_negation(quantale, m, q) for q in quantale.elements()]

            with self.subTest(quantale=quantale.name):
                self.assertEqual(linear_negation(quantale, m, m), quantale.unit)
                self.assertEqual(sorted(negated), list(quantale.elements()))

                for q in quantale.elements():
                    self.assertEqual(linear_negation(quantale, m, negated[q]), q)

                for p, q in itertools.product(quantale.elements(), repeat=2):
                    if quantale.le(p, q):
                        self.assertTrue(quantale.le(negated[q], negated[p]))

        Q = self.luk5
        self.assertEqual(linear_negation(Q, Q.bottom, self.el(Q, "3/4")), self.el(Q, "1/4"))


    def test_linear_negation_is_negation_when_integral(self):
        for quantale in (self.luk5, self.nilmin5, self.cube):
            for q in quantale.elements():
                self.assertEqual(linear_negation(quantale, quantale.bottom, q), negations(quantale, q)[0])


    def test_linear_negation_needs_a_dualizing_element(self):
        with self.assertRaises(NotDualizing):
            linear_negation(self.godel3, self.godel3.bottom, self.godel3.top)


    def test_regular_elements(self):
        self.assertEqual(len(regular_elements(self.cube)), self.cube.n)

        G = self.godel3
        self.assertEqual(regular_elements(G).elements(), (G.bottom, G.top))

        for quantale in self.zoo:
            for r in quantale.elements():
                self.assertIn(r, regular_elements(quantale, r))


    def test_relative_quantale(self):
        Q = self.luk5
        self.assertEqual(relative_quantale(Q, Q.bottom).tensor, Q.tensor)

        half = self.el(Q, "1/2")
        relative = relative_quantale(Q, half)
        self.assertEqual(relative.labels, ("1/2", "3/4", "1"))

        regular_in_relative = {relative.embedding[q] for q in regular_elements(relative)}
        regular_in_base = set(regular_elements(Q, half)) & set(upset(Q.lattice, half))
        self.assertEqual(regular_in_relative, regular_in_base)

        with self.assertRaises(NotIntegral):
            relative_quantale(self.c3, self.c3.bottom)


    def test_nucleus_quotient(self):
        cube = self.cube
        self.assertEqual(nucleus_quotient(cube, cube.bottom).tensor, cube.tensor)

        quotient = nucleus_quotient(self.godel3, self.godel3.bottom)
        self.assertEqual(quotient.labels, ("0", "1"))
        self.assertIsNotNone(find_quantale_isomorphism(quotient, self.two))

        for quantale in (self.luk5, self.godel4, self.c3, self.square):
            for q in quantale.elements():
                with self.subTest(quantale=quantale.name, q=q):
                    self.assertTrue(check_nucleus(quantale, q).ok)
                    self.assertTrue(nucleus_quotient(quantale, q).profile.girard)

        with self.assertRaises(NotCyclic):
            nucleus_quotient(self.rel2, self.rel2.unit)


    def test_dual_quantale(self):
        for quantale in (self.two, self.luk5, self.c3, self.nilmin5):
            m = quantale.profile.cyclic_dualizing
            dual = dual_quantale(quantale, m)

            with self.subTest(quantale=quantale.name):
                self.assertEqual(dual.unit, m)
                self.assertIn(quantale.unit, find_cyclic_dualizing(dual))

                perp = {q: linear_negation(quantale, m, q) for q in quantale.elements()}
                self.assertTrue(is_quantale_isomorphism(quantale, dual, perp))

        with self.assertRaises(NotDualizing):
            dual_quantale(self.godel3, self.godel3.bottom)


    def test_lukasiewicz_is_self_dual(self):
        Q = self.luk5
        dual = dual_quantale(Q, Q.bottom)

        # x ↦ 1−x reverses the index order of the chain.
        flip = {q: Q.n - 1 - q for q in Q.elements()}
        self.assertTrue(is_quantale_isomorphism(Q, dual, flip))


    def test_involution_exchanges_residuals(self):
        Q = self.rel2
        for p, q in itertools.product(Q.elements(), repeat=2):
            self.assertEqual(Q.conjugate(Q.ldd(p, q)), Q.rdd(Q.conjugate(q), Q.conjugate(p)))


    def test_element_aliases(self):
        self.assertEqual(self.c3.element("k"), self.c3.unit)
        self.assertEqual(self.two.element("bot"), self.two.bottom)
        self.assertEqual(self.two.element("top"), self.two.top)

        with self.assertRaises(KeyError):
            self.c3.element("nope")


if __name__ == "__main__":
    unittest.main()
