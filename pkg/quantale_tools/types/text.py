#
# This file is part of quantale-tools.
#
"""
Line-oriented text formats for quantales and for the matrices checked against them.

A quantale file lists its elements, its covering pairs, its multiplication table, its unit and,
optionally, its involution; every table refers to elements by label:

    # the three-element chain with unit k
    ELEMENTS bot k top
    ORDER
      bot < k
      k < top
    TENSOR
      bot bot bot
      bot k   top
      bot top top
    UNIT k
    INVOLUTION bot k top

A matrix file names the points of a carrier and gives one row of element labels per point:

    QUANTALE godel:3
    CARRIER x y
    MATRIX
      1 1/2
      1/2 1
    EXTENT 1 1

Text after a '#' is ignored, as are blank lines. Words made only of capital letters start
sections, so they cannot be used as labels.
"""

import logging
import unittest

from dataclasses import dataclass

from .lattice  import FiniteLattice
from .quantale import Quantale
from ..errors  import QuantaleError, QuantaleFileError, TooLarge


logger = logging.getLogger(__name__)


QUANTALE_SECTIONS = ('ELEMENTS', 'ORDER', 'TENSOR', 'UNIT', 'INVOLUTION')
MATRIX_SECTIONS   = ('QUANTALE', 'CARRIER', 'MATRIX', 'EXTENT')


@dataclass
class _Section:
    name:   str
    line:   int
    inline: list
    rows:   list


def _sections(text, allowed):
    """ Splits a document into its sections. Each row is kept with its line number. """
    sections = {}
    current = None

    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split('#', 1)[0].split()
        if not tokens:
            continue

        keyword = tokens[0]
        if keyword.isupper() and keyword.isalpha():
            if keyword not in allowed:
                raise QuantaleFileError(f"unknown section {keyword}; expected one of {', '.join(allowed)}", line=number)
            if keyword in sections:
                raise QuantaleFileError(f"section {keyword} appears twice", line=number)

            current = sections[keyword] = _Section(keyword, number, tokens[1:], [])
            continue

        if current is None:
            raise QuantaleFileError("content before the first section", line=number)

        current.rows.append((number, tokens))

    return sections


def _values(section):
    """ Returns the tokens of a section, whether given inline or on following lines. """
    values = list(section.inline)
    for _, tokens in section.rows:
        values.extend(tokens)
    return values


def _require(sections, name):
    if name not in sections:
        raise QuantaleFileError(f"missing section {name}")
    return sections[name]


class _Resolver:
    """ Turns labels into element indices, locating unknown labels. """

    def __init__(self, labels):
        self.index = {label: i for i, label in enumerate(labels)}

    def __call__(self, label, line):
        try:
            return self.index[label]
        except KeyError:
            raise QuantaleFileError(f"unknown element {label!r}", line=line)


def parse_quantale(text, name=None):
    """ Parses and validates a quantale file.

    Raises QuantaleFileError, carrying the offending line, on both syntax and law violations.
    """
    sections = _sections(text, QUANTALE_SECTIONS)

    elements = _require(sections, 'ELEMENTS')
    labels = _values(elements)
    if not labels:
        raise QuantaleFileError("no elements", line=elements.line)
    if len(set(labels)) != len(labels):
        raise QuantaleFileError("element labels must be unique", line=elements.line)

    resolve = _Resolver(labels)
    n = len(labels)

    covers = []
    if 'ORDER' in sections:
        for line, tokens in sections['ORDER'].rows:
            pair = [token for token in tokens if token != '<']
            if len(pair) != 2:
                raise QuantaleFileError("order rows must read 'lower < upper'", line=line)
            covers.append((resolve(pair[0], line), resolve(pair[1], line)))

    order = sections.get('ORDER', elements)
    try:
        lattice = FiniteLattice.from_covers(labels, covers)
    except QuantaleError as e:
        raise QuantaleFileError(str(e), line=order.line, witness=e.witness)

    tensor_section = _require(sections, 'TENSOR')
    rows = tensor_section.rows
    if len(rows) != n:
        raise QuantaleFileError(f"expected {n} tensor rows, got {len(rows)}", line=tensor_section.line)

    tensor = []
    for line, tokens in rows:
        if len(tokens) != n:
            raise QuantaleFileError(f"expected {n} entries, got {len(tokens)}", line=line)
        tensor.append([resolve(token, line) for token in tokens])

    unit_section = _require(sections, 'UNIT')
    unit_values = _values(unit_section)
    if len(unit_values) != 1:
        raise QuantaleFileError("UNIT takes exactly one element", line=unit_section.line)
    unit = resolve(unit_values[0], unit_section.line)

    involution = None
    if 'INVOLUTION' in sections:
        section = sections['INVOLUTION']
        images = _values(section)
        if len(images) != n:
            raise QuantaleFileError(f"INVOLUTION needs {n} images", line=section.line)
        involution = [resolve(image, section.line) for image in images]

    try:
        quantale = Quantale(lattice, tensor, unit, involution, name=name)
    except QuantaleError as e:
        raise QuantaleFileError(str(e), line=tensor_section.line, witness=e.witness)

    logger.debug("parsed %r with %d elements", quantale.name, n)
    return quantale


def format_quantale(quantale):
    """ Returns the text form of a finite quantale; parsing it gives back an identical quantale. """
    Q = quantale
    if not Q.exhaustive:
        raise TooLarge(f"{Q.name} has no finite table to write")

    label = Q.label
    width = max(len(label(a)) for a in Q.elements())

    lines = [f"# {Q.name}", "ELEMENTS " + " ".join(label(a) for a in Q.elements()), "ORDER"]
    lines.extend(f"  {label(a)} < {label(b)}" for a, b in Q.lattice.covers())

    lines.append("TENSOR")
    for p in Q.elements():
        lines.append("  " + " ".join(label(Q.multiply(p, q)).ljust(width) for q in Q.elements()).rstrip())

    lines.append(f"UNIT {label(Q.unit)}")
    if Q.is_involutive:
        lines.append("INVOLUTION " + " ".join(label(Q.conjugate(a)) for a in Q.elements()))

    return "\n".join(lines) + "\n"


@dataclass
class MatrixFile:
    """ A carrier with a matrix, and optionally an extent, valued in some quantale.

    Parameters:
        quantale -- The name of the quantale the file asks for, or None.
        carrier  -- The point labels.
        rows     -- The matrix as rows of element labels, each with its line number.
        extent   -- The extent labels, or None.
    """

    quantale: str
    carrier:  tuple
    rows:     list
    extent:   tuple = None
    line:     int = None


    def resolve(self, quantale):
        """ Returns (matrix, extent) as element indices of the given quantale. """
        def element(label, line):
            try:
                return quantale.element(label)
            except KeyError:
                raise QuantaleFileError(f"{quantale.name} has no element {label!r}", line=line)

        matrix = tuple(tuple(element(label, line) for label in tokens) for line, tokens in self.rows)
        extent = None
        if self.extent is not None:
            extent = tuple(element(label, self.line) for label in self.extent)

        return matrix, extent


def parse_matrix(text):
    """ Parses a matrix file. Element labels are resolved later, against the chosen quantale. """
    sections = _sections(text, MATRIX_SECTIONS)

    carrier = tuple(_values(_require(sections, 'CARRIER')))
    if len(set(carrier)) != len(carrier):
        raise QuantaleFileError("point labels must be unique", line=sections['CARRIER'].line)

    section = _require(sections, 'MATRIX')
    if len(section.rows) != len(carrier):
        raise QuantaleFileError(f"expected {len(carrier)} matrix rows, got {len(section.rows)}", line=section.line)
    for line, tokens in section.rows:
        if len(tokens) != len(carrier):
            raise QuantaleFileError(f"expected {len(carrier)} entries, got {len(tokens)}", line=line)

    extent, line = None, None
    if 'EXTENT' in sections:
        extent, line = tuple(_values(sections['EXTENT'])), sections['EXTENT'].line
        if len(extent) != len(carrier):
            raise QuantaleFileError(f"EXTENT needs {len(carrier)} entries", line=line)

    quantale = None
    if 'QUANTALE' in sections:
        quantale = " ".join(_values(sections['QUANTALE']))

    return MatrixFile(quantale, carrier, list(section.rows), extent, line)


def format_matrix(quantale, carrier, matrix, extent=None):
    """ Returns the text form of a matrix valued in a quantale. """
    Q = quantale
    lines = [f"QUANTALE {Q.name}", "CARRIER " + " ".join(carrier), "MATRIX"]
    lines.extend("  " + " ".join(Q.label(value) for value in row) for row in matrix)

    if extent is not None:
        lines.append("EXTENT " + " ".join(Q.label(value) for value in extent))

    return "\n".join(lines) + "\n"


class QuantaleFileTest(unittest.TestCase):

    C3 = """
        # the three-element chain with unit k
        ELEMENTS bot k top
        ORDER
          bot < k
          k < top
        TENSOR
          bot bot bot
          bot k   top
          bot top top   # top is idempotent
        UNIT k
        INVOLUTION bot k top
    """

    def test_parse_c3(self):
        from ..zoo import make_c3

        parsed = parse_quantale(self.C3, name="c3")
        self.assertEqual(parsed, make_c3())


    def test_zoo_round_trip(self):
        from ..zoo import standard_zoo

        for Q in standard_zoo():
            with self.subTest(quantale=Q.name):
                parsed = parse_quantale(format_quantale(Q), name=Q.name)

                self.assertEqual(parsed, Q)
                self.assertEqual(parsed.labels, Q.labels)


    def test_malformed_tensor_row_is_located(self):
        broken = self.C3.replace("bot k   top", "bot k")

        with self.assertRaises(QuantaleFileError) as context:
            parse_quantale(broken)

        self.assertEqual(context.exception.line, 9)


    def test_unknown_element_is_located(self):
        with self.assertRaises(QuantaleFileError) as context:
            parse_quantale(self.C3.replace("UNIT k", "UNIT one"))

        self.assertEqual(context.exception.line, 11)


    def test_law_violations_are_reported(self):
        broken = self.C3.replace("bot top top   #", "bot top k   #")

        with self.assertRaises(QuantaleFileError) as context:
            parse_quantale(broken)

        self.assertEqual(context.exception.line, 7)
        self.assertIn("fails", str(context.exception))


    def test_missing_and_unknown_sections(self):
        with self.assertRaises(QuantaleFileError):
            parse_quantale("ELEMENTS a\n")
        with self.assertRaises(QuantaleFileError):
            parse_quantale(self.C3 + "\nWHATEVER\n")


    def test_matrix_file(self):
        from ..zoo import quantale_by_name

        Q = quantale_by_name("godel:3")
        parsed = parse_matrix("QUANTALE godel:3\nCARRIER x y\nMATRIX\n  1 1/2\n  1/2 1\nEXTENT 1 1\n")
        matrix, extent = parsed.resolve(Q)

        self.assertEqual(parsed.quantale, "godel:3")
        self.assertEqual(parsed.carrier, ("x", "y"))
        self.assertEqual(matrix, ((2, 1), (1, 2)))
        self.assertEqual(extent, (2, 2))

        again = parse_matrix(format_matrix(Q, parsed.carrier, matrix, extent))
        self.assertEqual(again.resolve(Q), (matrix, extent))


    def test_matrix_labels_are_checked(self):
        from ..zoo import quantale_by_name

        parsed = parse_matrix("CARRIER x\nMATRIX\n  2\n")
        with self.assertRaises(QuantaleFileError) as context:
            parsed.resolve(quantale_by_name("godel:3"))

        self.assertEqual(context.exception.line, 3)


if __name__ == "__main__":
    unittest.main()
