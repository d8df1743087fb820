#
# This file is part of quantale-tools.
#
""" Boolean algebras, discretized t-norm chains, and the three-element chain C3. """

import unittest

from fractions import Fraction

from ..types            import TNorm
from ..types.lattice    import chain_lattice, powerset_lattice
from ..types.quantale   import Quantale, classify, validate_quantale
from ..errors           import NonClosed, QuantaleError, TooLarge


# Powersets beyond this many atoms are no longer desk-scale.
MAX_ATOMS = 6


def identity_involution(n):
    return tuple(range(n))


def make_boolean(n_atoms):
    """ Returns the powerset of an n-atom set as a frame, with ⊗ = ∩. """

    if n_atoms < 0:
        raise QuantaleError("a Boolean algebra needs a nonnegative number of atoms")
    if n_atoms > MAX_ATOMS:
        raise TooLarge(f"boolean:{n_atoms} would have {1 << n_atoms} elements")

    lattice = powerset_lattice(n_atoms)
    return Quantale(lattice, lattice.meet, lattice.top, identity_involution(lattice.n),
        name=f"boolean:{n_atoms}")


def _lukasiewicz(a, b):
    return max(Fraction(0), a + b - 1)


def _nilpotent_minimum(a, b):
    return Fraction(0) if a + b <= 1 else min(a, b)


_OPERATIONS = {
    TNorm.GODEL:             min,
    TNorm.LUKASIEWICZ:       _lukasiewicz,
    TNorm.NILPOTENT_MINIMUM: _nilpotent_minimum,
    TNorm.PRODUCT:           lambda a, b: a * b,
}


def make_chain_tnorm(steps, tnorm):
    """ Returns the chain {0, 1/steps, ..., 1} multiplied by a discretized t-norm.

    Parameters:
        steps -- The number of steps between 0 and 1; the chain has steps + 1 elements.
        tnorm -- The TNorm (or its name) to multiply with.

    Raises NonClosed if the t-norm leaves the chain, which is the case for the product t-norm
    on every chain but {0, 1}.
    """
    tnorm = TNorm.parse(tnorm)

    if steps < 1:
        raise QuantaleError("a t-norm chain needs at least one step")

    values    = [Fraction(i, steps) for i in range(steps + 1)]
    position  = {value: i for i, value in enumerate(values)}
    operation = _OPERATIONS[tnorm]

    def multiply(p, q):
        result = operation(values[p], values[q])

        if result not in position:
            raise NonClosed(f"{tnorm.value} leaves the {steps + 1}-element chain",
                witness=(str(values[p]), str(values[q])))

        return position[result]

    lattice = chain_lattice([str(value) for value in values])
    return Quantale.from_operation(lattice, multiply, lattice.top,
        involution=identity_involution(lattice.n), name=f"{tnorm.value}:{steps + 1}")


def make_c3():
    """ Returns the chain ⊥ < k < ⊤ with unit k and ⊤⊗⊤ = ⊤. """
    lattice = chain_lattice(["bot", "k", "top"])
    bot, k, top = 0, 1, 2

    tensor = [
        [bot, bot, bot],
        [bot, k,   top],
        [bot, top, top],
    ]
    return Quantale(lattice, tensor, k, identity_involution(3), name="c3")


class ChainQuantaleTest(unittest.TestCase):

    def test_boolean_sizes(self):
        self.assertEqual(make_boolean(0).n, 1)
        self.assertEqual(make_boolean(1).n, 2)
        self.assertTrue(make_boolean(1).profile.frame)

        cube = make_boolean(3)
        self.assertEqual(cube.n, 8)
        self.assertTrue(classify(cube).girard)

        with self.assertRaises(TooLarge):
            make_boolean(MAX_ATOMS + 1)


    def test_lukasiewicz_is_mv(self):
        self.assertTrue(make_chain_tnorm(4, TNorm.LUKASIEWICZ).profile.mv)


    def test_nilpotent_minimum(self):
        profile = make_chain_tnorm(4, "nilmin").profile

        self.assertTrue(profile.commutative)
        self.assertTrue(profile.integral)
        self.assertFalse(profile.divisible)
        self.assertTrue(profile.girard)


    def test_godel_one_step_is_boolean(self):
        godel = make_chain_tnorm(1, TNorm.GODEL)
        boolean = make_boolean(1)

        self.assertEqual(godel.tensor, boolean.tensor)
        self.assertEqual(godel.unit, boolean.unit)


    def test_product_only_closes_on_two_elements(self):
        self.assertEqual(make_chain_tnorm(1, TNorm.PRODUCT).n, 2)

        with self.assertRaises(NonClosed):
            make_chain_tnorm(2, TNorm.PRODUCT)


    def test_c3(self):
        Q = make_c3()
        k, top = Q.element("k"), Q.element("top")

        self.assertEqual(Q.multiply(top, top), top)
        self.assertEqual(Q.multiply(k, top), top)
        self.assertFalse(classify(Q).integral)
        self.assertTrue(validate_quantale(Q).ok)


if __name__ == "__main__":
    unittest.main()
