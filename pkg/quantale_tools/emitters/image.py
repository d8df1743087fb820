#
# This file is part of quantale-tools.
#
""" Emitters that produce binary quantale images. """

import unittest

import construct

from ..types.image import QuantaleImage
from ..errors      import TooLarge


class FormatEmitter:
    """ Collects the fields of a construct format as attributes, then builds them into bytes.

    For example:
        emitter      = FormatEmitter(QuantaleImage)
        emitter.size = 2
        ...
        data         = emitter.emit()
    """

    def __init__(self, struct):
        """
        Parameters:
            struct -- The construct Struct whose fields this emitter collects.
        """
        self.__dict__['format'] = struct
        self.__dict__['fields'] = {}
        self.__dict__['names']  = {subcon.name for subcon in struct.subcons if subcon.name}


    def __setattr__(self, name, value):
        if name not in self.names:
            raise AttributeError(f"{name} is not a field of this format")

        self.fields[name] = value


    def __getattr__(self, name):
        try:
            return self.fields[name]
        except KeyError:
            raise AttributeError(f"field {name} has not been set")


    def missing(self):
        """ Returns the fields still waiting for a value. Constants fill themselves in. """
        return [
            subcon.name for subcon in self.format.subcons
            if subcon.name and subcon.name not in self.fields and not isinstance(subcon.subcon, construct.Const)
        ]


    def emit(self):
        """ Builds the collected fields. Raises KeyError if some field was never set. """
        missing = self.missing()
        if missing:
            raise KeyError(f"missing necessary field: {', '.join(missing)}")

        return self.format.build(self.fields)


def emitter_for_format(construct_format):
    """ Creates a factory method for the relevant construct format. """

    def _factory():
        return FormatEmitter(construct_format)

    return _factory


QuantaleImageEmitter = emitter_for_format(QuantaleImage)


def emit_quantale_image(quantale):
    """ Returns the binary image of a finite quantale. """
    Q = quantale

    if not Q.exhaustive:
        raise TooLarge(f"{Q.name} has no finite image")

    emitter = QuantaleImageEmitter()
    emitter.size       = Q.n
    emitter.unit       = Q.unit
    emitter.involutive = Q.is_involutive
    emitter.name       = Q.name
    emitter.labels     = [Q.label(a) for a in Q.elements()]
    emitter.order      = Q.lattice.leq
    emitter.tensor     = Q.tensor
    emitter.involution = list(Q.involution) if Q.is_involutive else None

    return emitter.emit()


class QuantaleImageEmitterTest(unittest.TestCase):

    def test_zoo_images_read_back(self):
        from ..types.image import parse_image
        from ..zoo import standard_zoo

        for Q in standard_zoo():
            with self.subTest(quantale=Q.name):
                parsed = parse_image(emit_quantale_image(Q))

                self.assertEqual(parsed, Q)
                self.assertEqual(parsed.name, Q.name)


    def test_missing_field(self):
        emitter = QuantaleImageEmitter()
        emitter.size = 1

        with self.assertRaises(KeyError):
            emitter.emit()


    def test_unknown_field(self):
        emitter = QuantaleImageEmitter()

        with self.assertRaises(AttributeError):
            emitter.colour = "red"


    def test_infinite_quantales_have_no_image(self):
        from ..zoo import make_lawvere

        with self.assertRaises(TooLarge):
            emit_quantale_image(make_lawvere())


if __name__ == "__main__":
    unittest.main()
