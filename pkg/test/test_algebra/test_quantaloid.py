import unittest

from qconcept.algebra import quantaloid
from qconcept.algebra.quantaloid import QArrow, build_quantale
from qconcept.lattice import examples
from qconcept.util.errors import (
    IdentityFailure,
    NotAssociative,
    NotJoinPreserving,
    ParseError,
    TypeMismatch,
    ValidationError,
)


class Test_Quantale(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.c3 = examples.chain(["0", "h", "1"])
        cls.godel = build_quantale(cls.c3, cls.c3.meet2, "1", "godel")
        cls.luk = build_quantale(
            cls.c3, [["0", "0", "0"], ["0", "0", "h"], ["0", "h", "1"]], "1", "luk"
        )

    def test_laws_hold(self):
        for Q in (self.godel, self.luk):
            self.assertIs(quantaloid.validate_quantaloid(Q), Q)
            self.assertIsNone(quantaloid.residuation_witness(Q))
            self.assertTrue(quantaloid.is_nontrivial(Q))

    def test_implications(self):
        self.assertEqual(self.godel.ldd("*", "*", "*", "h", "1"), "h")
        self.assertEqual(self.godel.rdd("*", "*", "*", "h", "h"), "1")
        self.assertEqual(self.luk.rdd("*", "*", "*", "h", "0"), "h")
        self.assertEqual(self.luk.ldd("*", "*", "*", "0", "h"), "h")

    def test_arrow_implications(self):
        w, u = QArrow("*", "*", "h"), QArrow("*", "*", "1")
        self.assertEqual(quantaloid.ldd(self.godel, w, u), QArrow("*", "*", "h"))
        self.assertEqual(quantaloid.rdd(self.luk, w, QArrow("*", "*", "0")).value, "h")
        with self.assertRaises(TypeMismatch):
            self.godel.arrow("*", "*", "q")
        with self.assertRaises(TypeMismatch):
            quantaloid.ldd(self.godel, QArrow("a", "*", "h"), u)

    def test_identity_failure(self):
        Q = build_quantale(self.c3, self.c3.meet2, "h")
        with self.assertRaises(IdentityFailure) as e:
            quantaloid.validate_quantaloid(Q)
        self.assertEqual(e.exception.witness, ("*", "*", "1", "left"))
        trivial = build_quantale(self.c3, self.c3.meet2, "0")
        self.assertFalse(quantaloid.is_nontrivial(trivial))

    def test_join_failure(self):
        rows = [["0", "0", "0"], ["0", "1", "h"], ["0", "h", "1"]]
        with self.assertRaises(NotJoinPreserving):
            quantaloid.validate_quantaloid(build_quantale(self.c3, rows, "1"))

    def test_associativity_failure(self):
        c4 = examples.chain(["0", "a", "b", "1"])
        rows = [
            ["0", "0", "0", "0"],
            ["0", "0", "a", "a"],
            ["0", "a", "a", "b"],
            ["0", "a", "b", "1"],
        ]
        Q = build_quantale(c4, rows, "1")
        self.assertIsNone(quantaloid.identity_witness(Q))
        self.assertIsNone(quantaloid.join_witness(Q))
        with self.assertRaises(NotAssociative) as e:
            quantaloid.validate_quantaloid(Q)
        w, v, u = e.exception.witness[4:]
        self.assertNotEqual(
            Q.compose("*", "*", "*", w, Q.compose("*", "*", "*", v, u)),
            Q.compose("*", "*", "*", Q.compose("*", "*", "*", w, v), u),
        )

    def test_json_round_trip(self):
        data = quantaloid.quantaloid_to_json(self.luk)
        self.assertEqual(data["composition"]["*,*,*"][1], ["0", "0", "h"])
        again = quantaloid.validate_quantaloid(data)
        self.assertEqual(quantaloid.quantaloid_to_json(again), data)

    def test_parse_errors(self):
        data = quantaloid.quantaloid_to_json(self.godel)
        with self.assertRaises(ParseError):
            quantaloid.quantaloid_from_json({"objects": ["*"]})
        bad = dict(data, composition={"*,*,*": [["0", "0", "q"]] * 3})
        with self.assertRaises(ParseError):
            quantaloid.quantaloid_from_json(bad)
        short = dict(data, composition={"*,*,*": [["0", "0", "0"]]})
        with self.assertRaises(ParseError):
            quantaloid.quantaloid_from_json(short)
        with self.assertRaises(ParseError):
            quantaloid.quantaloid_from_json(dict(data, composition={}))

    def test_mutations(self):
        forced = list(quantaloid.mutations(self.godel))
        self.assertEqual(len(forced), 8)
        for change, mutant in forced:
            with self.assertRaises(ValidationError, msg=str(change)):
                quantaloid.validate_quantaloid(mutant)
        every = list(quantaloid.mutations(self.godel, forced_only=False))
        self.assertEqual(len(every), 9)
        (change, mutant), = [m for m in every if m[0][3:5] == ("h", "h")]
        self.assertEqual(change[5], "1")
        with self.assertRaises(ValidationError):
            quantaloid.validate_quantaloid(mutant)


if __name__ == "__main__":
    unittest.main()
