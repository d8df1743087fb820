#
# This file is part of quantale-tools.
#
""" Binary quantale images: a compact, exact serialization of finite quantales. """

import logging
import unittest

import construct
from construct import this

from .lattice  import FiniteLattice
from .quantale import Quantale
from ..errors  import QuantaleError, QuantaleFileError


logger = logging.getLogger(__name__)


IMAGE_MAGIC   = b"QIMG"
IMAGE_VERSION = 1


class SquareTableAdapter(construct.Adapter):
    """ Construct adapter that presents a flat, row-major array as a square table. """

    def _decode(self, obj, context, path):
        size = context.size
        return tuple(tuple(obj[row * size:(row + 1) * size]) for row in range(size))


    def _encode(self, obj, context, path):
        return [value for row in obj for value in row]


def SquareTable(element_format):
    """ Returns a format for a size × size table of the given elements. """
    return SquareTableAdapter(construct.Array(this.size * this.size, element_format))


Label = construct.PascalString(construct.Int8ul, "utf8")

QuantaleImage = construct.Struct(
    "magic"       / construct.Const(IMAGE_MAGIC),
    "version"     / construct.Const(IMAGE_VERSION, construct.Int8ul),
    "size"        / construct.Int16ul,
    "unit"        / construct.Int16ul,
    "involutive"  / construct.Flag,
    "name"        / Label,
    "labels"      / construct.Array(this.size, Label),
    "order"       / SquareTable(construct.Flag),
    "tensor"      / SquareTable(construct.Int16ul),
    "involution"  / construct.If(this.involutive, construct.Array(this.size, construct.Int16ul)),
)


def parse_image(data):
    """ Parses and validates a binary quantale image.

    Raises QuantaleFileError if the data is not a well-formed image, and the usual law errors if
    the quantale it holds is broken.
    """
    try:
        image = QuantaleImage.parse(bytes(data))
    except construct.ConstructError as e:
        raise QuantaleFileError(f"not a quantale image: {e}")

    try:
        lattice = FiniteLattice.from_order(image.order, image.labels)
    except QuantaleError as e:
        raise QuantaleFileError(f"image holds no lattice: {e}", witness=e.witness)

    involution = list(image.involution) if image.involutive else None
    quantale = Quantale(lattice, image.tensor, image.unit, involution, name=image.name or None)

    logger.debug("read image of %s", quantale.name)
    return quantale


class QuantaleImageTest(unittest.TestCase):

    def test_parse_handmade_image(self):
        from ..zoo import make_boolean

        data = b"".join([
            IMAGE_MAGIC, bytes([IMAGE_VERSION]),
            (2).to_bytes(2, 'little'), (1).to_bytes(2, 'little'),
            b"\x00",
            b"\x03two",
            b"\x02{}", b"\x03{0}",
            b"\x01\x01\x00\x01",
            b"\x00\x00" b"\x00\x00" b"\x00\x00" b"\x01\x00",
        ])
        quantale = parse_image(data)

        self.assertEqual(quantale.name, "two")
        self.assertEqual(quantale.tensor, make_boolean(1).tensor)
        self.assertEqual(quantale.labels, ("{}", "{0}"))
        self.assertFalse(quantale.is_involutive)


    def test_bad_magic(self):
        with self.assertRaises(QuantaleFileError):
            parse_image(b"NOPE")


    def test_truncated_image(self):
        with self.assertRaises(QuantaleFileError):
            parse_image(IMAGE_MAGIC + bytes([IMAGE_VERSION]) + b"\x02\x00")


if __name__ == "__main__":
    unittest.main()
