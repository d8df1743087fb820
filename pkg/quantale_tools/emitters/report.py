#
# This file is part of quantale-tools.
#
"""
Reports: the verdicts of one command, with their witnesses, rendered as text for people or as
canonical JSON for machines.

Reports are deterministic for a fixed input and seed; timing is only included on request.
"""

import json
import hashlib
import logging
import unittest

from dataclasses import dataclass, field

from ..types  import Verdict


logger = logging.getLogger(__name__)


REPORT_SCHEMA = "quantale-tools.report.v1"


def tool_version():
    """ Returns the installed version of this package, or 0.0 when running from a checkout. """
    try:
        from importlib.metadata import version, PackageNotFoundError
    except ImportError:
        return "0.0"

    try:
        return version("quantale-tools")
    except PackageNotFoundError:
        return "0.0"


def input_digest(data):
    """ Returns the sha256 digest of an input, given as bytes or as text. """
    if isinstance(data, str):
        data = data.encode("utf-8")
    return "sha256:" + hashlib.sha256(data).hexdigest()


@dataclass
class ReportEntry:
    """ One verdict in a report.

    Parameters:
        id         -- The check or suite id.
        verdict    -- The Verdict.
        violations -- The recorded Violations; empty unless the verdict is a failure.
        counts     -- How often each failing axiom failed.
        facts      -- Extra results, keyed by name; values must be JSON-serializable.
        lines      -- Extra human-readable lines, e.g. a hom-set listing.
    """

    id:         str
    verdict:    Verdict
    violations: list = field(default_factory=list)
    counts:     dict = field(default_factory=dict)
    facts:      dict = field(default_factory=dict)
    lines:      list = field(default_factory=list)


    @classmethod
    def from_validation(cls, id, report, lines=()):
        """ Creates an entry from a ValidationReport. """
        return cls(id, report.verdict, list(report.violations), dict(report.counts), dict(report.facts), list(lines))


@dataclass
class Report:
    """ Everything one command found out about its input. """

    command: str
    subject: str
    digest:  str
    entries: list  = field(default_factory=list)
    timing:  float = None
    version: str   = field(default_factory=tool_version)


    def add(self, entry):
        self.entries.append(entry)
        return entry


    @property
    def verdict(self):
        return Verdict.combine(entry.verdict for entry in self.entries)


    @property
    def exit_code(self):
        """ Returns 0 iff no verdict is a failure. """
        return 0 if self.verdict.is_success() else 1


def _plain(value, label):
    """ Converts witness values to JSON-ready form; integers are element indices, shown by label. """
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return label(value) if label else value
    if isinstance(value, (tuple, list)):
        return [_plain(item, label) for item in value]
    return str(value)


def report_to_dict(report, label=None):
    """ Returns the machine form of a report.

    Parameters:
        label -- A function naming element indices in witnesses, e.g. Quantale.label.
    """
    result = {
        'schema':  REPORT_SCHEMA,
        'tool':    {'name': "quantale-tools", 'version': report.version},
        'command': report.command,
        'subject': report.subject,
        'digest':  report.digest,
        'verdict': report.verdict.value,
        'checks': [
            {
                'id':      entry.id,
                'verdict': entry.verdict.value,
                'witnesses': [
                    {'axiom': v.axiom, 'witness': _plain(v.witness, label), 'detail': v.detail}
                    for v in entry.violations
                ],
                'counts': dict(sorted(entry.counts.items())),
                'facts':  entry.facts,
            }
            for entry in report.entries
        ],
    }

    if report.timing is not None:
        result['timing'] = round(report.timing, 6)

    return result


def render_machine(report, label=None):
    """ Renders a report as canonical JSON. """
    return json.dumps(report_to_dict(report, label), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _format_fact(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    return json.dumps(value, ensure_ascii=False) if isinstance(value, (list, tuple, dict)) else str(value)


def render_text(report, label=None):
    """ Renders a report for reading in a terminal. """
    lines = [
        f"quantale-tools {report.version} {report.command} {report.subject}",
        f"input {report.digest}",
    ]

    for entry in report.entries:
        lines.append(f"[{entry.verdict.value}] {entry.id}")
        lines.extend(f"    {line}" for line in entry.lines)

        for name, value in entry.facts.items():
            lines.append(f"    {name}: {_format_fact(value)}")

        for violation in entry.violations:
            witness = ", ".join(_format_fact(item) for item in _plain(violation.witness, label))
            detail = f" {violation.detail}" if violation.detail else ""
            lines.append(f"    {violation.axiom} fails at ({witness}){detail}")

        hidden = sum(entry.counts.values()) - len(entry.violations)
        if hidden > 0:
            lines.append(f"    ... and {hidden} more")

    if report.timing is not None:
        lines.append(f"time: {report.timing:.3f}s")

    lines.append(f"verdict: {report.verdict.value}")
    return "\n".join(lines) + "\n"


RENDERERS = {
    'text':    render_text,
    'machine': render_machine,
}


def render(report, format='text', label=None):
    """ Renders a report in the given format: 'text' or 'machine'. """
    return RENDERERS[format](report, label)


class ReportTest(unittest.TestCase):

    def make_report(self):
        from ..types import ValidationReport

        failing = ValidationReport("similarity")
        failing.add("S2", "x", "y")

        report = Report("check", "godel:3", input_digest("godel:3"), version="1.0")
        report.add(ReportEntry.from_validation("similarity", failing))
        report.add(ReportEntry("profile", Verdict.PASS, facts={'mv': False}, lines=["elements: 0 1/2 1"]))
        return report


    def test_verdicts_and_exit_codes(self):
        report = self.make_report()

        self.assertIs(report.verdict, Verdict.FAIL)
        self.assertEqual(report.exit_code, 1)

        passing = Report("validate", "c3", input_digest(b"c3"))
        passing.add(ReportEntry("profile", Verdict.SAMPLED))
        self.assertEqual(passing.exit_code, 0)


    def test_machine_report_is_canonical(self):
        report = self.make_report()
        rendered = render(report, 'machine')
        parsed = json.loads(rendered)

        self.assertEqual(rendered, render(report, 'machine'))
        self.assertEqual(parsed['verdict'], "fail")
        self.assertEqual(parsed['checks'][0]['witnesses'][0], {'axiom': "S2", 'witness': ["x", "y"], 'detail': ""})
        self.assertNotIn('timing', parsed)
        self.assertTrue(parsed['digest'].startswith("sha256:"))


    def test_witness_elements_are_labelled(self):
        from ..zoo import make_c3
        from ..types import ValidationReport

        failing = ValidationReport("quantale")
        failing.add("associativity", 0, 1, 2)

        report = Report("validate", "c3", input_digest("c3"))
        report.add(ReportEntry.from_validation("quantale", failing))

        text = render(report, 'text', label=make_c3().label)
        self.assertIn("associativity fails at (bot, k, top)", text)


    def test_text_report(self):
        text = render_text(self.make_report())

        self.assertIn("[fail] similarity", text)
        self.assertIn("S2 fails at (x, y)", text)
        self.assertIn("    mv: false", text)
        self.assertTrue(text.endswith("verdict: fail\n"))


    def test_timing_is_optional(self):
        report = self.make_report()
        report.timing = 0.25

        self.assertIn("time: 0.250s", render_text(report))
        self.assertEqual(report_to_dict(report)['timing'], 0.25)


if __name__ == "__main__":
    unittest.main()
