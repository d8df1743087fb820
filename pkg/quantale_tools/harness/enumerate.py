#
# This file is part of quantale-tools.
#
"""
Enumeration of every quantale on a few elements, up to isomorphism.

Lattices are enumerated as orders with a fixed bottom and top; multiplications are filled in
cell by cell, with the unit and bottom rows forced and monotonicity pruning the rest.
"""

import logging
import itertools
import unittest

from ..types.lattice  import FiniteLattice, order_isomorphisms
from ..types.quantale import Quantale, find_quantale_isomorphism
from ..errors         import NotALattice, NotAQuantale, TooLarge


logger = logging.getLogger(__name__)


MAX_ENUMERATION_SIZE = 4


def small_lattices(size):
    """ Yields every lattice on the given number of elements, up to isomorphism.

    Element 0 is the bottom and element size-1 the top; the order between the others is free.
    """
    if size == 1:
        yield FiniteLattice.from_order([[True]], ["0"])
        return

    bottom, top = 0, size - 1
    middle = list(range(1, size - 1))
    pairs = [(a, b) for a, b in itertools.permutations(middle, 2)]
    found = []

    for chosen in itertools.product((False, True), repeat=len(pairs)):
        less = {pair for pair, present in zip(pairs, chosen) if present}

        if any((b, a) in less for a, b in less):
            continue
        if any((a, b) in less and (b, c) in less and (a, c) not in less for a, b, c in itertools.permutations(middle, 3)):
            continue

        leq = [[a == b or a == bottom or b == top or (a, b) in less for b in range(size)] for a in range(size)]

        try:
            lattice = FiniteLattice.from_order(leq)
        except NotALattice:
            continue

        if any(next(order_isomorphisms(lattice.elements(), lattice.lt, other.elements(), other.lt), None) is not None
                for other in found):
            continue

        found.append(lattice)
        yield lattice


def _multiplications(lattice, unit):
    """ Yields every monotone table with the given unit and an absorbing bottom. """
    n, le, bottom = lattice.n, lattice.le, lattice.bottom
    table = [[None] * n for _ in range(n)]

    for a in range(n):
        table[unit][a] = table[a][unit] = a
    for a in range(n):
        table[bottom][a] = table[a][bottom] = bottom

    if table[unit][bottom] != bottom or table[bottom][unit] != bottom:
        return

    free = [(p, q) for p, q in itertools.product(range(n), repeat=2) if table[p][q] is None]

    def monotone_at(p, q):
        value = table[p][q]
        for r in range(n):
            if le(p, r) and table[r][q] is not None and not le(value, table[r][q]):
                return False
            if le(r, p) and table[r][q] is not None and not le(table[r][q], value):
                return False
            if le(q, r) and table[p][r] is not None and not le(value, table[p][r]):
                return False
            if le(r, q) and table[p][r] is not None and not le(table[p][r], value):
                return False
        return True

    def fill(index):
        if index == len(free):
            yield tuple(tuple(row) for row in table)
            return

        p, q = free[index]
        for value in range(n):
            table[p][q] = value
            if monotone_at(p, q):
                yield from fill(index + 1)

        table[p][q] = None

    yield from fill(0)


def quantales_on(lattice):
    """ Yields every quantale structure on a lattice, without identifying isomorphic ones. """
    for unit in lattice.elements():
        if lattice.n > 1 and unit == lattice.bottom:
            continue

        for tensor in _multiplications(lattice, unit):
            try:
                yield Quantale(lattice, tensor, unit, name=f"q{lattice.n}")
            except NotAQuantale:
                continue


def enumerate_small_quantales(max_size):
    """ Yields every quantale with at most max_size elements, once per isomorphism class.

    Raises TooLarge beyond four elements.
    """
    if max_size > MAX_ENUMERATION_SIZE:
        raise TooLarge(f"enumeration is limited to {MAX_ENUMERATION_SIZE} elements")

    for size in range(1, max_size + 1):
        count = 0

        for lattice in small_lattices(size):
            found = []

            for quantale in quantales_on(lattice):
                if any(find_quantale_isomorphism(quantale, other) is not None for other in found):
                    continue

                found.append(quantale)
                count += 1

                quantale.name = f"enumerated:{size}.{count}"
                logger.debug("enumerated %s", quantale.name)
                yield quantale

        logger.info("%d quantales on %d elements", count, size)


def naive_quantale_count(lattice):
    """ Counts the quantale structures on a lattice by testing every table and unit.

    Independent of the pruned enumeration; only practical for three elements or fewer.
    """
    n = lattice.n
    count = 0

    for unit in lattice.elements():
        for cells in itertools.product(range(n), repeat=n * n):
            tensor = [cells[i * n:(i + 1) * n] for i in range(n)]

            if any(tensor[unit][a] != a or tensor[a][unit] != a for a in range(n)):
                continue

            try:
                Quantale(lattice, tensor, unit)
            except NotAQuantale:
                continue

            count += 1

    return count


class EnumerationTest(unittest.TestCase):

    def by_size(self, max_size):
        sizes = {}
        for quantale in enumerate_small_quantales(max_size):
            sizes.setdefault(quantale.n, []).append(quantale)
        return sizes

    def test_small_lattices(self):
        self.assertEqual([len(list(small_lattices(n))) for n in range(1, 5)], [1, 1, 1, 2])


    def test_one_and_two_elements(self):
        sizes = self.by_size(2)

        self.assertEqual(len(sizes[1]), 1)
        self.assertEqual(len(sizes[2]), 1)

        boolean = sizes[2][0]
        self.assertEqual(boolean.unit, boolean.top)


    def test_three_element_chain(self):
        from ..types.lattice import chain_lattice

        chain = chain_lattice(["0", "a", "1"])
        three = self.by_size(3)[3]

        self.assertEqual(len(three), 3)
        self.assertEqual(naive_quantale_count(chain), len(three))
        self.assertEqual(len(list(quantales_on(chain))), len(three))


    def test_zoo_members_are_enumerated(self):
        from ..zoo import make_chain_tnorm, make_c3, make_boolean
        from ..types import TNorm

        enumerated = list(enumerate_small_quantales(4))
        for Q in (make_chain_tnorm(2, TNorm.GODEL), make_chain_tnorm(2, TNorm.LUKASIEWICZ), make_c3(),
                make_boolean(2), make_chain_tnorm(3, TNorm.NILPOTENT_MINIMUM)):
            with self.subTest(quantale=Q.name):
                matches = [R for R in enumerated if find_quantale_isomorphism(Q, R) is not None]
                self.assertEqual(len(matches), 1)


    def test_diagonal_and_back_diagonal_quantaloids_are_isomorphic_iff_girard(self):
        from ..categories.quantaloid import build_DQ, build_BQ
        from .search import iso_search

        for Q in enumerate_small_quantales(3):
            if not Q.profile.commutative:
                continue

            with self.subTest(quantale=Q.name):
                found = iso_search(build_DQ(Q), build_BQ(Q)).found
                self.assertEqual(found, Q.profile.girard)


    def test_size_limit(self):
        with self.assertRaises(TooLarge):
            list(enumerate_small_quantales(5))


if __name__ == "__main__":
    unittest.main()
