#
# This file is part of quantale-tools.
#
"""
Finite complete lattices. Elements are dense integer indices 0..n-1; their names live in a
separate label table, so that every order, join and meet query is a table lookup.
"""

import unittest
import itertools

from dataclasses import dataclass
from functools   import reduce

import networkx
from networkx.algorithms.isomorphism import DiGraphMatcher

from .           import ValidationReport
from ..errors    import DimensionMismatch, NotALattice


@dataclass(frozen=True)
class FiniteLattice:
    """ A complete lattice on n elements, stored as its order, join and meet tables. """

    n:      int
    leq:    tuple
    join:   tuple
    meet:   tuple
    top:    int
    bottom: int
    labels: tuple = None


    @classmethod
    def from_order(cls, leq, labels=None):
        """ Builds a lattice from a reflexive order table, computing joins and meets by search.

        Raises NotALattice if some pair lacks a least upper or greatest lower bound.
        """
        n   = len(leq)
        leq = tuple(tuple(bool(v) for v in row) for row in leq)

        if any(len(row) != n for row in leq):
            raise DimensionMismatch(f"order table must be {n}x{n}")

        join = []
        meet = []

        for a in range(n):
            join_row = []
            meet_row = []

            for b in range(n):
                lub = _least_upper_bound(leq, (a, b))
                glb = _greatest_lower_bound(leq, (a, b))

                if lub is None or glb is None:
                    raise NotALattice("order has no binary join or meet", witness=(a, b))

                join_row.append(lub)
                meet_row.append(glb)

            join.append(tuple(join_row))
            meet.append(tuple(meet_row))

        top    = _least_upper_bound(leq, range(n))
        bottom = _greatest_lower_bound(leq, range(n))

        if top is None or bottom is None:
            raise NotALattice("order is empty or unbounded")

        return cls(n, leq, tuple(join), tuple(meet), top, bottom, _normalize_labels(labels, n))


    @classmethod
    def from_covers(cls, labels, covers):
        """ Builds a lattice from Hasse data.

        Parameters:
            labels -- The element names, in index order.
            covers -- Pairs (a, b) of labels or indices, meaning a is covered by b.
        """
        labels = _normalize_labels(labels, len(labels))
        index  = {label: i for i, label in enumerate(labels)}

        graph = networkx.DiGraph()
        graph.add_nodes_from(range(len(labels)))

        for lower, upper in covers:
            graph.add_edge(index.get(lower, lower), index.get(upper, upper))

        if not networkx.is_directed_acyclic_graph(graph):
            raise NotALattice("covering relation contains a cycle")

        closure = networkx.transitive_closure_dag(graph)
        leq = [[a == b or closure.has_edge(a, b) for b in range(len(labels))] for a in range(len(labels))]

        return cls.from_order(leq, labels)


    def le(self, a, b):
        return self.leq[a][b]


    def lt(self, a, b):
        return a != b and self.leq[a][b]


    def elements(self):
        return range(self.n)


    def label(self, a):
        """ Returns the human-readable name of an element. """
        return self.labels[a] if self.labels else str(a)


    def index(self, label):
        """ Returns the element with the given name. Raises KeyError if there's none. """
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"lattice has no element {label!r}")


    def dual(self):
        """ Returns the same carrier with the reversed order. """
        leq = tuple(tuple(self.leq[b][a] for b in range(self.n)) for a in range(self.n))
        return FiniteLattice(self.n, leq, self.meet, self.join, self.bottom, self.top, self.labels)


    def covers(self):
        """ Returns the covering pairs (a, b), i.e. the Hasse diagram of the order. """
        return [
            (a, b) for a in range(self.n) for b in range(self.n)
            if self.lt(a, b) and not any(self.lt(a, c) and self.lt(c, b) for c in range(self.n))
        ]


@dataclass(frozen=True)
class ElementSubset:
    """ A subset of a lattice's carrier, as a membership vector. """

    parent:  FiniteLattice
    members: tuple

    def __post_init__(self):
        if len(self.members) != self.parent.n:
            raise DimensionMismatch(f"membership vector must have length {self.parent.n}")


    @classmethod
    def of(cls, parent, elements):
        """ Creates a subset of the given lattice containing the given elements. """
        chosen = set(elements)
        return cls(parent, tuple(a in chosen for a in range(parent.n)))


    def elements(self):
        return tuple(a for a, present in enumerate(self.members) if present)


    def labels(self):
        return tuple(self.parent.label(a) for a in self.elements())


    def __contains__(self, element):
        return 0 <= element < len(self.members) and self.members[element]


    def __iter__(self):
        return iter(self.elements())


    def __len__(self):
        return sum(self.members)


def _normalize_labels(labels, n):
    if labels is None:
        return tuple(str(i) for i in range(n))

    labels = tuple(str(label) for label in labels)
    if len(labels) != n:
        raise DimensionMismatch(f"expected {n} labels, got {len(labels)}")
    if len(set(labels)) != n:
        raise DimensionMismatch("element labels must be unique")

    return labels


def _least_upper_bound(leq, elements):
    """ Finds the least upper bound of some elements by scanning the order table. """
    elements = list(elements)
    n = len(leq)

    upper = [u for u in range(n) if all(leq[e][u] for e in elements)]
    least = [u for u in upper if all(leq[u][v] for v in upper)]

    return least[0] if len(least) == 1 else None


def _greatest_lower_bound(leq, elements):
    """ Finds the greatest lower bound of some elements by scanning the order table. """
    elements = list(elements)
    n = len(leq)

    lower    = [l for l in range(n) if all(leq[l][e] for e in elements)]
    greatest = [l for l in lower if all(leq[m][l] for m in lower)]

    return greatest[0] if len(greatest) == 1 else None


def validate_lattice(lattice):
    """ Checks every lattice axiom, reporting each violation with a witness.

    Finite lattices are complete, so binary joins and meets together with bottom and top
    are all that needs checking.
    """
    n = lattice.n
    tables = {'leq': lattice.leq, 'join': lattice.join, 'meet': lattice.meet}

    for name, table in tables.items():
        if len(table) != n or any(len(row) != n for row in table):
            raise DimensionMismatch(f"{name} table must be {n}x{n}")

    if not (0 <= lattice.top < n and 0 <= lattice.bottom < n):
        raise DimensionMismatch("top and bottom must be elements")

    report = ValidationReport("lattice")
    leq, join, meet = lattice.leq, lattice.join, lattice.meet

    for a in range(n):
        report.require(leq[a][a], "reflexivity", a)
        report.require(leq[lattice.bottom][a], "bottom", a)
        report.require(leq[a][lattice.top], "top", a)
        report.require(join[a][a] == a, "join-idempotent", a)
        report.require(meet[a][a] == a, "meet-idempotent", a)

    for a, b in itertools.product(range(n), repeat=2):
        if a != b:
            report.require(not (leq[a][b] and leq[b][a]), "antisymmetry", a, b)

        report.require(join[a][b] == join[b][a], "join-commutative", a, b)
        report.require(meet[a][b] == meet[b][a], "meet-commutative", a, b)
        report.require(meet[a][join[a][b]] == a, "absorption", a, b)
        report.require(join[a][meet[a][b]] == a, "absorption", a, b)

        j, m = join[a][b], meet[a][b]
        report.require(leq[a][j] and leq[b][j], "join-upper-bound", a, b)
        report.require(leq[m][a] and leq[m][b], "meet-lower-bound", a, b)

        report.require(leq[a][b] == (j == b), "order-join-agreement", a, b)
        report.require(leq[a][b] == (m == a), "order-meet-agreement", a, b)

    for a, b, c in itertools.product(range(n), repeat=3):
        if leq[a][b] and leq[b][c]:
            report.require(leq[a][c], "transitivity", a, b, c)

        if leq[a][c] and leq[b][c]:
            report.require(leq[join[a][b]][c], "join-least", a, b, c)
        if leq[c][a] and leq[c][b]:
            report.require(leq[c][meet[a][b]], "meet-greatest", a, b, c)

        report.require(join[join[a][b]][c] == join[a][join[b][c]], "join-associative", a, b, c)
        report.require(meet[meet[a][b]][c] == meet[a][meet[b][c]], "meet-associative", a, b, c)

    return report


def sup(lattice, subset):
    """ Returns the least upper bound of a subset; the empty join is the bottom. """
    return reduce(lambda a, b: lattice.join[a][b], subset, lattice.bottom)


def inf(lattice, subset):
    """ Returns the greatest lower bound of a subset; the empty meet is the top. """
    return reduce(lambda a, b: lattice.meet[a][b], subset, lattice.top)


def upset(lattice, r):
    """ Returns the principal filter of r, i.e. every element above r. """
    return ElementSubset.of(lattice, (q for q in lattice.elements() if lattice.le(r, q)))


def downset(lattice, r):
    """ Returns the principal ideal of r, i.e. every element below r. """
    return ElementSubset.of(lattice, (q for q in lattice.elements() if lattice.le(q, r)))


def restrict(lattice, elements, leq=None):
    """ Builds the lattice carried by some of the elements, ordered by the restricted order.

    Parameters:
        lattice  -- The ambient lattice; supplies the labels.
        elements -- The carrier of the new lattice, in the order they should be indexed.
        leq      -- An optional order predicate on ambient elements to use instead of the lattice's.

    Returns a tuple (lattice, embedding), where embedding maps new indices to ambient elements.
    """
    elements = tuple(elements)
    leq = leq or lattice.le

    order  = [[leq(a, b) for b in elements] for a in elements]
    labels = [lattice.label(a) for a in elements]

    return FiniteLattice.from_order(order, labels), elements


def powerset_lattice(atoms):
    """ Returns the lattice of subsets of an atom set, with subsets indexed by their bitmask. """
    n = 1 << atoms

    def label(mask):
        return "{" + ",".join(str(i) for i in range(atoms) if mask & (1 << i)) + "}"

    leq  = tuple(tuple((a & b) == a for b in range(n)) for a in range(n))
    join = tuple(tuple(a | b for b in range(n)) for a in range(n))
    meet = tuple(tuple(a & b for b in range(n)) for a in range(n))

    return FiniteLattice(n, leq, join, meet, n - 1, 0, tuple(label(mask) for mask in range(n)))


def chain_lattice(labels):
    """ Returns the chain whose elements are ordered as the given labels are. """
    n = len(labels)

    leq  = tuple(tuple(a <= b for b in range(n)) for a in range(n))
    join = tuple(tuple(max(a, b) for b in range(n)) for a in range(n))
    meet = tuple(tuple(min(a, b) for b in range(n)) for a in range(n))

    return FiniteLattice(n, leq, join, meet, n - 1, 0, _normalize_labels(labels, n))


def order_isomorphisms(nodes_a, less_a, nodes_b, less_b):
    """ Yields every order isomorphism between two finite posets, as a dictionary.

    Parameters:
        nodes_a, nodes_b -- The elements of each poset.
        less_a, less_b   -- Strict order predicates on each poset.
    """
    nodes_a, nodes_b = list(nodes_a), list(nodes_b)

    if len(nodes_a) != len(nodes_b):
        return

    graph_a = networkx.DiGraph()
    graph_a.add_nodes_from(nodes_a)
    graph_a.add_edges_from((u, v) for u in nodes_a for v in nodes_a if less_a(u, v))

    graph_b = networkx.DiGraph()
    graph_b.add_nodes_from(nodes_b)
    graph_b.add_edges_from((u, v) for u in nodes_b for v in nodes_b if less_b(u, v))

    # Strict orders are transitively closed, so a digraph isomorphism of the full
    # relations is exactly an order isomorphism.
    yield from DiGraphMatcher(graph_a, graph_b).isomorphisms_iter()


class FiniteLatticeTest(unittest.TestCase):

    def test_two_element_chain_is_valid(self):
        lattice = chain_lattice(["bot", "top"])
        self.assertTrue(validate_lattice(lattice).ok)


    def test_missing_transitivity_is_witnessed(self):
        leq = (
            (True,  True,  False),
            (False, True,  True),
            (False, False, True),
        )
        join = ((0, 1, 2), (1, 1, 2), (2, 2, 2))
        meet = ((0, 0, 0), (0, 1, 1), (0, 1, 2))
        broken = FiniteLattice(3, leq, join, meet, 2, 0)

        report = validate_lattice(broken)
        self.assertFalse(report.ok)
        self.assertEqual(report.first("transitivity").witness, (0, 1, 2))


    def test_powerset_of_three_is_valid(self):
        lattice = powerset_lattice(3)
        self.assertEqual(lattice.n, 8)
        self.assertTrue(validate_lattice(lattice).ok)


    def test_dimension_mismatch(self):
        lattice = FiniteLattice(3, ((True,),), ((0,),), ((0,),), 0, 0)
        with self.assertRaises(DimensionMismatch):
            validate_lattice(lattice)


    def test_sup_examples(self):
        lattice = powerset_lattice(3)

        self.assertEqual(sup(lattice, []), lattice.bottom)
        self.assertEqual(sup(lattice, [lattice.top]), lattice.top)

        for a, b in itertools.product(lattice.elements(), repeat=2):
            self.assertEqual(sup(lattice, [a, b]), a | b)
            self.assertEqual(inf(lattice, [a, b]), a & b)

        self.assertEqual(inf(lattice, []), lattice.top)
        self.assertEqual(inf(lattice, [lattice.bottom]), lattice.bottom)


    def test_folded_bounds_match_brute_force(self):
        lattice = FiniteLattice.from_covers(
            ["0", "a", "b", "c", "1"],
            [("0", "a"), ("0", "b"), ("a", "c"), ("b", "c"), ("c", "1")],
        )

        for size in range(4):
            for subset in itertools.combinations(lattice.elements(), size):
                self.assertEqual(sup(lattice, subset),
                    _least_upper_bound(lattice.leq, subset) if subset else lattice.bottom)
                self.assertEqual(inf(lattice, subset),
                    _greatest_lower_bound(lattice.leq, subset) if subset else lattice.top)


    def test_order_join_meet_agreement(self):
        lattice = powerset_lattice(2)

        for a, b in itertools.product(lattice.elements(), repeat=2):
            self.assertEqual(lattice.le(a, b), lattice.join[a][b] == b)
            self.assertEqual(lattice.le(a, b), lattice.meet[a][b] == a)


    def test_upset(self):
        lattice = powerset_lattice(3)

        self.assertEqual(len(upset(lattice, lattice.bottom)), lattice.n)
        self.assertEqual(upset(lattice, lattice.top).elements(), (lattice.top,))

        a = 0b001
        self.assertEqual(set(upset(lattice, a)), {m for m in range(8) if m & a == a})


    def test_covers_round_trip(self):
        lattice = FiniteLattice.from_covers(["bot", "k", "top"], [("bot", "k"), ("k", "top")])

        self.assertEqual(lattice.bottom, 0)
        self.assertEqual(lattice.top, 2)
        self.assertTrue(lattice.le(0, 2))
        self.assertEqual(lattice.covers(), [(0, 1), (1, 2)])
        self.assertEqual(lattice, chain_lattice(["bot", "k", "top"]))


    def test_non_lattice_is_rejected(self):
        # Two incomparable maximal elements have no join.
        with self.assertRaises(NotALattice):
            FiniteLattice.from_covers(["0", "a", "b"], [("0", "a"), ("0", "b")])


    def test_order_isomorphisms_of_a_square(self):
        lattice = powerset_lattice(2)
        isos = list(order_isomorphisms(lattice.elements(), lattice.lt, lattice.elements(), lattice.lt))

        # The two atoms may be swapped; nothing else can move.
        self.assertEqual(len(isos), 2)


if __name__ == "__main__":
    unittest.main()
