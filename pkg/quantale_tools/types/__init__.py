#
# This file is part of quantale-tools.
#
""" Core enumerations and the witness-bearing validation report shared by every checker. """

import unittest

from dataclasses import dataclass, field
from enum        import Enum


class Verdict(Enum):
    """ Outcome of a check, as reported to users. """

    PASS    = "pass"
    FAIL    = "fail"
    SAMPLED = "sampled"

    def is_success(self):
        """ Returns true iff the verdict doesn't represent a failure. """
        return self is not self.FAIL


    @classmethod
    def combine(cls, verdicts):
        """ Folds several verdicts into one; any failure wins, then any sampled verdict. """
        verdicts = list(verdicts)

        if any(v is cls.FAIL for v in verdicts):
            return cls.FAIL
        if any(v is cls.SAMPLED for v in verdicts):
            return cls.SAMPLED
        return cls.PASS


class Scope(Enum):
    """ How much of the carrier a check covered. """

    EXHAUSTIVE = "exhaustive"
    SAMPLED    = "sampled"


class QuantaloidKind(Enum):
    """ The four quantaloids derived from a quantale. """

    D = "D"
    H = "H"
    B = "B"
    K = "K"

    @property
    def reversed_order(self):
        """ True iff the hom-sets carry the reversed order of the base quantale. """
        return self in (self.B, self.K)


    @property
    def restricted(self):
        """ True iff hom-sets are cut down by the bound against both end objects. """
        return self in (self.H, self.K)


    @classmethod
    def parse(cls, value):
        """ Accepts a kind, or its (case-insensitive) letter. """
        if isinstance(value, cls):
            return value
        return cls(str(value).upper())


class TNorm(Enum):
    """ Operations available for discretized chains. """

    GODEL             = "godel"
    LUKASIEWICZ       = "lukasiewicz"
    NILPOTENT_MINIMUM = "nilpotent_minimum"
    PRODUCT           = "product_discretized"

    @classmethod
    def parse(cls, value):
        """ Accepts a t-norm, its value, or a handful of common short names. """
        if isinstance(value, cls):
            return value

        aliases = {
            'min':     cls.GODEL,
            'luk':     cls.LUKASIEWICZ,
            'nilmin':  cls.NILPOTENT_MINIMUM,
            'product': cls.PRODUCT,
        }
        value = str(value).lower()
        return aliases[value] if value in aliases else cls(value)


class SimilarityMode(Enum):
    """ Which axiom set to use when checking a similarity. """

    FULL      = "full"
    DIVISIBLE = "divisible"
    FRAME     = "frame"


class BridgeDirection(Enum):
    """ Direction of the Boolean conversion between apartness models and similarities. """

    APARTNESS_TO_SIMILARITY = "apartness-to-similarity"
    SIMILARITY_TO_APARTNESS = "similarity-to-apartness"


@dataclass(frozen=True)
class Violation:
    """ A single failed axiom instance. """

    axiom:   str
    witness: tuple
    detail:  str = ""


@dataclass
class ValidationReport:
    """ Result of running a validator. Never just a boolean: every failure carries its witness.

    Only the first WITNESS_LIMIT witnesses of each axiom are stored, but all failures are counted.
    """

    WITNESS_LIMIT = 16

    check:      str
    scope:      Scope = Scope.EXHAUSTIVE
    violations: list  = field(default_factory=list)
    counts:     dict  = field(default_factory=dict)
    facts:      dict  = field(default_factory=dict)


    def add(self, axiom, *witness, detail=""):
        """ Records a failure of the given axiom, demonstrated by the given witness elements. """
        count = self.counts.get(axiom, 0)
        self.counts[axiom] = count + 1

        if count < self.WITNESS_LIMIT:
            self.violations.append(Violation(axiom, tuple(witness), detail))


    def require(self, condition, axiom, *witness, detail=""):
        """ Records a failure iff the condition doesn't hold. Returns the condition. """
        if not condition:
            self.add(axiom, *witness, detail=detail)
        return condition


    def merge(self, other, prefix=None):
        """ Copies all failures and facts of another report into this one. """

        for violation in other.violations:
            axiom = f"{prefix}.{violation.axiom}" if prefix else violation.axiom
            self.violations.append(Violation(axiom, violation.witness, violation.detail))

        for axiom, count in other.counts.items():
            axiom = f"{prefix}.{axiom}" if prefix else axiom
            self.counts[axiom] = self.counts.get(axiom, 0) + count

        if other.scope is Scope.SAMPLED:
            self.scope = Scope.SAMPLED

        self.facts.update(other.facts)
        return self


    @property
    def ok(self):
        return not self.counts


    @property
    def verdict(self):
        if not self.ok:
            return Verdict.FAIL
        return Verdict.SAMPLED if self.scope is Scope.SAMPLED else Verdict.PASS


    def failed_axioms(self):
        """ Returns the set of axioms that failed at least once. """
        return set(self.counts)


    def first(self, axiom=None):
        """ Returns the first recorded violation (of the given axiom, if provided), or None. """
        for violation in self.violations:
            if axiom is None or violation.axiom == axiom:
                return violation
        return None


    def __bool__(self):
        return self.ok


class ValidationReportTest(unittest.TestCase):

    def test_empty_report_passes(self):
        report = ValidationReport("empty")
        self.assertTrue(report.ok)
        self.assertIs(report.verdict, Verdict.PASS)


    def test_sampled_scope_is_reported(self):
        report = ValidationReport("sampled", scope=Scope.SAMPLED)
        self.assertIs(report.verdict, Verdict.SAMPLED)


    def test_witnesses_are_capped_but_counted(self):
        report = ValidationReport("many")

        for i in range(40):
            report.add("axiom", i)

        self.assertEqual(report.counts["axiom"], 40)
        self.assertEqual(len(report.violations), ValidationReport.WITNESS_LIMIT)
        self.assertIs(report.verdict, Verdict.FAIL)
        self.assertEqual(report.first("axiom").witness, (0,))


    def test_merge_prefixes_axioms(self):
        inner = ValidationReport("inner", scope=Scope.SAMPLED)
        inner.add("S1", 1, 2)

        outer = ValidationReport("outer").merge(inner, prefix="sim")
        self.assertEqual(outer.failed_axioms(), {"sim.S1"})
        self.assertIs(outer.scope, Scope.SAMPLED)


    def test_verdict_combination(self):
        self.assertIs(Verdict.combine([Verdict.PASS, Verdict.SAMPLED]), Verdict.SAMPLED)
        self.assertIs(Verdict.combine([Verdict.SAMPLED, Verdict.FAIL]), Verdict.FAIL)
        self.assertIs(Verdict.combine([]), Verdict.PASS)


    def test_enum_parsing(self):
        self.assertIs(QuantaloidKind.parse("k"), QuantaloidKind.K)
        self.assertTrue(QuantaloidKind.K.reversed_order)
        self.assertFalse(QuantaloidKind.H.reversed_order)
        self.assertIs(TNorm.parse("nilmin"), TNorm.NILPOTENT_MINIMUM)
        self.assertIs(TNorm.parse("godel"), TNorm.GODEL)


if __name__ == "__main__":
    unittest.main()
