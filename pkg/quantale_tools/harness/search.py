#
# This file is part of quantale-tools.
#
"""
Backtracking search for isomorphisms between finite quantaloids.

Objects are matched first, pruned by the sizes of their hom-sets; each hom-set is then matched by
one of its local-order isomorphisms, constrained by identities and by composition on every triple
whose three hom-sets have already been matched.
"""

import logging
import itertools
import unittest

from collections import Counter
from dataclasses import dataclass

from ..categories.functors import LaxFunctor
from ..types.lattice       import order_isomorphisms
from ..errors              import BudgetExceeded, TooLarge


logger = logging.getLogger(__name__)


DEFAULT_BUDGET = 200_000


@dataclass
class IsoSearchResult:
    """ Outcome of a completed search: either an isomorphism, or proof by exhaustion that none exists. """

    isomorphism: LaxFunctor
    nodes:       int

    @property
    def found(self):
        return self.isomorphism is not None


class _Search:

    def __init__(self, source, target, budget):
        self.source = source
        self.target = target
        self.budget = budget
        self.nodes  = 0

        self.pairs = sorted(itertools.product(range(len(source.objects)), repeat=2),
            key=lambda pair: (max(pair), pair))
        self._hom_isomorphisms = {}


    def visit(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"isomorphism search exceeded {self.budget} nodes", witness=(self.budget,))


    @staticmethod
    def signature(quantaloid, q):
        """ Describes an object by the sizes of the hom-sets around it. """
        K = quantaloid
        return (
            len(K.hom(q, q)),
            tuple(sorted(Counter(len(K.hom(q, r)) for r in K.objects).items())),
            tuple(sorted(Counter(len(K.hom(r, q)) for r in K.objects).items())),
        )


    def hom_isomorphisms(self, p, q, fp, fq):
        """ Returns every local-order isomorphism from the hom-set p → q onto fp → fq. """
        key = (p, q, fp, fq)

        if key not in self._hom_isomorphisms:
            S, T = self.source, self.target
            self._hom_isomorphisms[key] = list(order_isomorphisms(
                S.arrows(p, q), S.local_lt, T.arrows(fp, fq), T.local_lt))

        return self._hom_isomorphisms[key]


    def object_bijections(self):
        """ Yields every object bijection preserving signatures and all hom-set sizes. """
        S, T = self.source, self.target
        sources, targets = S.objects, list(T.objects)

        signatures = {q: self.signature(T, q) for q in targets}
        wanted = [self.signature(S, q) for q in sources]

        def extend(assigned):
            i = len(assigned)
            if i == len(sources):
                yield dict(zip(sources, assigned))
                return

            for candidate in targets:
                if candidate in assigned or signatures[candidate] != wanted[i]:
                    continue

                self.visit()
                mapped = assigned + [candidate]
                if all(len(S.hom(sources[a], sources[b])) == len(T.hom(mapped[a], mapped[b]))
                        for a in range(i + 1) for b in range(i + 1) if i in (a, b)):
                    yield from extend(mapped)

        yield from extend([])


    def consistent(self, object_map, arrow_maps, pair):
        """ Checks composition on every triple whose hom-sets are matched and that uses the given pair. """
        S, T = self.source, self.target
        objects = S.objects
        p, q = pair

        triples = set()
        for r in range(len(objects)):
            triples.update({(p, q, r), (r, p, q), (p, r, q)})

        for a, b, c in triples:
            if not {(a, b), (b, c), (a, c)} <= arrow_maps.keys():
                continue

            first, second, through = arrow_maps[a, b], arrow_maps[b, c], arrow_maps[a, c]
            x, y, z = objects[a], objects[b], objects[c]

            for u, v in itertools.product(S.arrows(x, y), S.arrows(y, z)):
                if through[S.compose(u, v, y)] != T.compose(first[u], second[v], object_map[y]):
                    return False

        return True


    def arrow_maps(self, object_map):
        """ Returns hom-set maps making the object bijection an isomorphism, or None. """
        S = self.source
        objects = S.objects

        def extend(index, assigned):
            if index == len(self.pairs):
                return dict(assigned)

            a, b = self.pairs[index]
            p, q = objects[a], objects[b]

            for candidate in self.hom_isomorphisms(p, q, object_map[p], object_map[q]):
                if p == q and candidate[S.identity(q)] != self.target.identity(object_map[q]):
                    continue

                self.visit()
                assigned[a, b] = candidate

                if self.consistent(object_map, assigned, (a, b)):
                    result = extend(index + 1, assigned)
                    if result is not None:
                        return result

                del assigned[a, b]

            return None

        return extend(0, {})


    def run(self):
        S, T = self.source, self.target

        for object_map in self.object_bijections():
            maps = self.arrow_maps(object_map)

            if maps is not None:
                objects = S.objects
                arrow_map = {(objects[a], objects[b]): values for (a, b), values in maps.items()}
                return LaxFunctor(S, T, object_map, arrow_map, name=f"{S.name} ≅ {T.name}")

        return None


def iso_search(source, target, budget=DEFAULT_BUDGET):
    """ Searches for an isomorphism between two finite quantaloids.

    Returns an IsoSearchResult, whose isomorphism is None only once the search space is exhausted.
    Raises BudgetExceeded if more than budget search nodes would be needed, which says nothing
    about whether an isomorphism exists.
    """
    if source.objects is None or target.objects is None:
        raise TooLarge("isomorphism search needs finite quantaloids")

    if len(source.objects) != len(target.objects):
        return IsoSearchResult(None, 0)

    search = _Search(source, target, budget)
    isomorphism = search.run()

    logger.info("searched %s ≅ %s: %s after %d nodes", source.name, target.name,
        "found" if isomorphism else "none", search.nodes)
    return IsoSearchResult(isomorphism, search.nodes)


class IsoSearchTest(unittest.TestCase):

    def setUp(self):
        from ..zoo import make_chain_tnorm, make_c3
        from ..types import TNorm

        self.godel3 = make_chain_tnorm(2, TNorm.GODEL)
        self.luk4   = make_chain_tnorm(3, TNorm.LUKASIEWICZ)
        self.c3     = make_c3()


    def test_identity_is_found(self):
        from ..categories.quantaloid import build_HQ
        from ..categories.functors import is_identity_functor

        H = build_HQ(self.luk4)
        result = iso_search(H, H)

        self.assertTrue(result.found)
        self.assertTrue(is_identity_functor(result.isomorphism))


    def test_godel_has_no_isomorphism(self):
        from ..categories.quantaloid import build_DQ, build_BQ

        result = iso_search(build_DQ(self.godel3), build_BQ(self.godel3))
        self.assertFalse(result.found)


    def test_girard_isomorphisms_are_found(self):
        from ..categories.quantaloid import build_DQ, build_BQ, build_HQ, build_KQ
        from ..categories.functors import grade_functor

        for Q in (self.luk4, self.c3):
            for source, target in ((build_DQ(Q), build_BQ(Q)), (build_HQ(Q), build_KQ(Q))):
                result = iso_search(source, target)

                with self.subTest(source=source.name):
                    self.assertTrue(result.found)
                    self.assertTrue(grade_functor(result.isomorphism).is_isomorphism)


    def test_budget(self):
        from ..categories.quantaloid import build_DQ, build_BQ

        with self.assertRaises(BudgetExceeded):
            iso_search(build_DQ(self.luk4), build_BQ(self.luk4), budget=1)


    def test_object_counts_must_match(self):
        from ..categories.quantaloid import build_DQ

        result = iso_search(build_DQ(self.luk4), build_DQ(self.godel3))
        self.assertFalse(result.found)
        self.assertEqual(result.nodes, 0)


if __name__ == "__main__":
    unittest.main()
