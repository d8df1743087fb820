#
# This file is part of quantale-tools.
#
""" Builtin quantales, and the registry resolving names such as "lukasiewicz:5" to them. """

import logging
import unittest

from .chains    import make_boolean, make_chain_tnorm, make_c3, identity_involution
from .relations import make_rel
from .topology  import FiniteTopSpace, make_open_set_frame
from .intervals import make_lawvere

from ..types    import TNorm
from ..errors   import QuantaleError, UnknownQuantale


logger = logging.getLogger(__name__)


def _chain(tnorm):
    def build(size):
        if size < 2:
            raise QuantaleError(f"a {tnorm.value} chain needs at least two elements")
        return make_chain_tnorm(size - 1, tnorm)
    return build


# Families taking an integer parameter. Chains are parameterized by their element count.
FAMILIES = {
    'boolean':             make_boolean,
    'godel':               _chain(TNorm.GODEL),
    'min':                 _chain(TNorm.GODEL),
    'lukasiewicz':         _chain(TNorm.LUKASIEWICZ),
    'luk':                 _chain(TNorm.LUKASIEWICZ),
    'nilmin':              _chain(TNorm.NILPOTENT_MINIMUM),
    'nilpotent_minimum':   _chain(TNorm.NILPOTENT_MINIMUM),
    'product':             _chain(TNorm.PRODUCT),
    'product_discretized': _chain(TNorm.PRODUCT),
    'rel':                 make_rel,
    'discrete':            lambda size: make_open_set_frame(FiniteTopSpace.discrete(size)),
    'indiscrete':          lambda size: make_open_set_frame(FiniteTopSpace.indiscrete(size)),
}

# Single instances.
INSTANCES = {
    'c3':         make_c3,
    'sierpinski': lambda: make_open_set_frame(FiniteTopSpace.sierpinski()),
    'lawvere':    make_lawvere,
}


def builtin_names():
    """ Returns a readable list of every accepted name pattern. """
    return sorted(INSTANCES) + sorted(f"{family}:N" for family in FAMILIES)


def quantale_by_name(name):
    """ Builds the builtin quantale with the given name, e.g. "c3", "boolean:2" or "godel:3".

    Raises UnknownQuantale if the name matches no builtin.
    """
    family, _, parameter = name.strip().lower().partition(":")

    if not parameter:
        if family not in INSTANCES:
            raise UnknownQuantale(f"unknown quantale {name!r}; expected one of: {', '.join(builtin_names())}")
        return INSTANCES[family]()

    if family not in FAMILIES:
        raise UnknownQuantale(f"unknown quantale family {family!r}; expected one of: {', '.join(builtin_names())}")

    try:
        size = int(parameter)
    except ValueError:
        raise UnknownQuantale(f"{name!r}: parameter must be an integer")

    logger.debug("building builtin %s", name)
    return FAMILIES[family](size)


# The standard zoo, smallest first.
STANDARD_ZOO = (
    "boolean:1", "godel:3", "lukasiewicz:3", "nilmin:3", "c3", "sierpinski",
    "boolean:2", "godel:4", "lukasiewicz:4", "nilmin:4", "discrete:2",
    "lukasiewicz:5", "nilmin:5", "lukasiewicz:6", "nilmin:6", "rel:2",
)


def standard_zoo(max_size=16):
    """ Returns the finite builtin quantales with at most max_size elements. """
    zoo = (quantale_by_name(name) for name in STANDARD_ZOO)
    return [quantale for quantale in zoo if quantale.n <= max_size]


class RegistryTest(unittest.TestCase):

    def test_chains_are_named_by_element_count(self):
        Q = quantale_by_name("lukasiewicz:5")

        self.assertEqual(Q.n, 5)
        self.assertEqual(Q.name, "lukasiewicz:5")
        self.assertEqual(quantale_by_name("luk:5"), Q)


    def test_instances(self):
        self.assertEqual(quantale_by_name("c3").name, "c3")
        self.assertEqual(quantale_by_name("Sierpinski").n, 3)
        self.assertFalse(quantale_by_name("lawvere").exhaustive)


    def test_unknown_names(self):
        for name in ("nope", "nope:3", "godel:x", "godel"):
            with self.assertRaises(UnknownQuantale):
                quantale_by_name(name)


    def test_standard_zoo(self):
        small = standard_zoo(4)

        self.assertTrue(small)
        self.assertTrue(all(quantale.n <= 4 for quantale in small))
        self.assertEqual(len(standard_zoo()), len(STANDARD_ZOO))


if __name__ == "__main__":
    unittest.main()
