import pathlib
import unittest

from qconcept.concept import engine, export, frame
from qconcept.util.errors import ParseError

FIXTURES = pathlib.Path(__file__).parents[1] / "fixtures"


class Test_Export(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        f = frame.load_frame(FIXTURES / "frame-mixed-formal.json")
        ctx = frame.load_context(FIXTURES / "context-mixed.json", f)
        cls.mixed = engine.compute(f, ctx)
        f = frame.load_frame(FIXTURES / "frame-crisp-formal.json")
        ctx = frame.load_context(FIXTURES / "context-identity.json", f)
        cls.crisp = engine.compute(f, ctx)

    def test_json(self):
        data = export.to_json(self.mixed)
        self.assertEqual(data["mode"], "formal")
        self.assertEqual(data["fibre"], "0")
        self.assertEqual(data["count"], len(self.mixed))
        self.assertEqual(data["fixed_labels"], ["x1", "x2"])
        self.assertEqual(export.from_json(data), self.mixed)

    def test_json_missing_keys(self):
        data = export.to_json(self.crisp)
        del data["order"]
        with self.assertRaises(ParseError):
            export.from_json(data)

    def test_dot(self):
        dot = export.to_dot(self.crisp)
        lines = dot.splitlines()
        self.assertEqual(lines[0], 'digraph "concepts" {')
        self.assertIn("  rankdir=BT;", lines)
        self.assertEqual(sum("[label=" in line for line in lines), 4)
        self.assertEqual(sum("->" in line for line in lines), 4)
        self.assertIn('  c0 [label="⟨(0,0) | (1,1)⟩"];', lines)
        self.assertIn("  c0 -> c1;", lines)
        self.assertEqual(lines[-1], "}")


if __name__ == "__main__":
    unittest.main()
