#
# This file is part of quantale-tools.
#
"""
Finite topological spaces, their frames of open sets, and the partial continuous maps on them
with the similarity and dissimilarity measuring where two maps agree.
"""

import itertools
import unittest

from dataclasses import dataclass

from .chains                import identity_involution
from ..types                import SimilarityMode
from ..types.lattice        import FiniteLattice
from ..types.quantale       import Quantale, negations
from ..categories.enriched  import (SimilaritySpace, DissimilaritySpace, check_similarity,
                                    check_dissimilarity)
from ..errors               import QuantaleError


def _subset_label(subset):
    return "{" + ",".join(str(point) for point in sorted(subset)) + "}"


@dataclass(frozen=True)
class FiniteTopSpace:
    """ A topology on the points 0..size-1, given by its family of open sets. """

    size:  int
    opens: tuple
    name:  str = "X"

    def __post_init__(self):
        opens = sorted({frozenset(u) for u in self.opens}, key=lambda u: (len(u), sorted(u)))
        object.__setattr__(self, 'opens', tuple(opens))

        everything = frozenset(range(self.size))

        if frozenset() not in opens or everything not in opens:
            raise QuantaleError(f"{self.name}: the empty set and the whole space must be open")

        for u, v in itertools.combinations(opens, 2):
            if u | v not in opens or u & v not in opens:
                raise QuantaleError(f"{self.name}: opens are not closed under union and intersection",
                    witness=(_subset_label(u), _subset_label(v)))


    @classmethod
    def sierpinski(cls):
        return cls(2, [(), (0,), (0, 1)], name="sierpinski")


    @classmethod
    def discrete(cls, size):
        points = range(size)
        opens = [subset for r in range(size + 1) for subset in itertools.combinations(points, r)]
        return cls(size, opens, name=f"discrete:{size}")


    @classmethod
    def indiscrete(cls, size):
        return cls(size, [(), tuple(range(size))], name=f"indiscrete:{size}")


    @property
    def points(self):
        return frozenset(range(self.size))


    def interior(self, subset):
        """ Returns the largest open set inside the given set of points. """
        subset = frozenset(subset)
        return frozenset().union(*(u for u in self.opens if u <= subset))


    def index(self, open_set):
        """ Returns the frame element of an open set. """
        return self.opens.index(frozenset(open_set))


def make_open_set_frame(space):
    """ Returns the frame O(X) of open sets of a finite space, ordered by inclusion, with ⊗ = ∩. """
    leq = [[u <= v for v in space.opens] for u in space.opens]
    lattice = FiniteLattice.from_order(leq, [_subset_label(u) for u in space.opens])

    return Quantale(lattice, lattice.meet, lattice.top, identity_involution(lattice.n),
        name=f"O({space.name})")


@dataclass(frozen=True)
class PartialMap:
    """ A map defined on an open set of points, into a finite discrete codomain. """

    domain: frozenset
    values: tuple

    def __call__(self, point):
        return dict(self.values)[point]


    @property
    def label(self):
        return "{" + ",".join(f"{point}={value}" for point, value in self.values) + "}"


def partial_maps(space, codomain_size):
    """ Enumerates every partial continuous map from a finite space to a discrete codomain.

    A map on the open set U is continuous iff each of its fibres is open; since U is open, being
    open in U and being open in the space coincide.
    """
    maps = []

    for domain in space.opens:
        points = sorted(domain)

        for assignment in itertools.product(range(codomain_size), repeat=len(points)):
            fibres = (
                frozenset(p for p, v in zip(points, assignment) if v == value)
                for value in range(codomain_size)
            )

            if all(fibre in space.opens for fibre in fibres):
                maps.append(PartialMap(domain, tuple(zip(points, assignment))))

    return maps


def _agreement(f, g):
    return frozenset(x for x in f.domain & g.domain if f(x) == g(x))


def pcx_similarity(space, codomain_size):
    """ Builds the O(X)-valued similarity on partial continuous maps: α(f,g) is the interior of
    the set where f and g are both defined and agree.
    """
    frame = make_open_set_frame(space)
    maps = partial_maps(space, codomain_size)

    alpha = tuple(
        tuple(space.index(space.interior(_agreement(f, g))) for g in maps)
        for f in maps
    )
    return SimilaritySpace(frame, tuple(f.label for f in maps), alpha)


def pcx_dissimilarity(space, codomain_size):
    """ Builds the O(X)-valued dissimilarity on partial continuous maps: β(f,g) is the interior of
    the complement of α(f,g).
    """
    frame = make_open_set_frame(space)
    maps = partial_maps(space, codomain_size)

    beta = tuple(
        tuple(space.index(space.interior(space.points - space.interior(_agreement(f, g)))) for g in maps)
        for f in maps
    )
    return DissimilaritySpace(frame, tuple(f.label for f in maps), beta)


class TopologyTest(unittest.TestCase):

    def test_frames_of_small_spaces(self):
        from .chains import make_boolean, make_chain_tnorm
        from ..types import TNorm
        from ..types.quantale import find_quantale_isomorphism

        discrete = make_open_set_frame(FiniteTopSpace.discrete(2))
        self.assertIsNotNone(find_quantale_isomorphism(discrete, make_boolean(2)))

        sierpinski = make_open_set_frame(FiniteTopSpace.sierpinski())
        self.assertIsNotNone(find_quantale_isomorphism(sierpinski, make_chain_tnorm(2, TNorm.GODEL)))

        indiscrete = make_open_set_frame(FiniteTopSpace.indiscrete(3))
        self.assertIsNotNone(find_quantale_isomorphism(indiscrete, make_boolean(1)))


    def test_non_topology_is_rejected(self):
        with self.assertRaises(QuantaleError):
            FiniteTopSpace(2, [(), (0,), (1,)])


    def test_partial_maps_are_continuous(self):
        maps = partial_maps(FiniteTopSpace.sierpinski(), 2)

        # One empty map, two on {0}, and only the two constant maps on the whole space.
        self.assertEqual(len(maps), 5)
        self.assertEqual(len(partial_maps(FiniteTopSpace.discrete(3), 2)), 27)


    def test_similarity_diagonal_is_the_domain(self):
        space = FiniteTopSpace.sierpinski()
        similarity = pcx_similarity(space, 2)
        maps = partial_maps(space, 2)

        for i, f in enumerate(maps):
            self.assertEqual(similarity.alpha[i][i], space.index(f.domain))


    def test_disagreeing_total_maps(self):
        space = FiniteTopSpace.discrete(2)
        maps = partial_maps(space, 2)
        similarity = pcx_similarity(space, 2)

        f = maps.index(PartialMap(frozenset({0, 1}), ((0, 0), (1, 0))))
        g = maps.index(PartialMap(frozenset({0, 1}), ((0, 1), (1, 1))))
        self.assertEqual(similarity.alpha[f][g], space.index(()))


    def test_dissimilarity_is_negated_similarity(self):
        for space in (FiniteTopSpace.sierpinski(), FiniteTopSpace.discrete(2)):
            similarity = pcx_similarity(space, 2)
            dissimilarity = pcx_dissimilarity(space, 2)
            frame = similarity.quantale

            for f, g in itertools.product(range(len(similarity.carrier)), repeat=2):
                self.assertEqual(dissimilarity.beta[f][g], negations(frame, similarity.alpha[f][g])[0])


    def test_total_maps_are_never_undefined(self):
        space = FiniteTopSpace.sierpinski()
        dissimilarity = pcx_dissimilarity(space, 2)

        for i, f in enumerate(partial_maps(space, 2)):
            if f.domain == space.points:
                self.assertEqual(dissimilarity.beta[i][i], space.index(()))


    def test_guiding_examples_pass_their_checkers(self):
        for space in (FiniteTopSpace.sierpinski(), FiniteTopSpace.discrete(3)):
            similarity = pcx_similarity(space, 2)
            dissimilarity = pcx_dissimilarity(space, 2)

            with self.subTest(space=space.name):
                self.assertTrue(check_similarity(similarity.quantale, similarity.carrier,
                    similarity.alpha, SimilarityMode.FRAME).ok)
                self.assertTrue(check_dissimilarity(dissimilarity.quantale, dissimilarity.carrier,
                    dissimilarity.beta).ok)


if __name__ == "__main__":
    unittest.main()
